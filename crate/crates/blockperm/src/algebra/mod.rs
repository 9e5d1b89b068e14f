//! Prime fields, polynomial arithmetic, irreducible selection, and the
//! residue-group homomorphism backing the code maps.

mod poly;
mod primes;
mod residue;

pub use poly::{find_irreducible, inv_mod, pow_mod_u64, Poly};
pub use primes::{is_prime, smallest_prime_geq, smallest_prime_geq_half};
pub use residue::{PolyResidue, QuotientVector, ResidueRing};
