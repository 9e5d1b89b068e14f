//! Prime selection by trial division. The parameters in play stay far below
//! the range where anything fancier pays off.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The least prime p >= n. Bertrand's postulate guarantees p < 2n for n >= 2.
pub fn smallest_prime_geq(n: u64) -> u64 {
    let mut p = n.max(2);
    while !is_prime(p) {
        p += 1;
    }
    p
}

/// The least prime q >= floor(n/2); by Bertrand q <= n for n >= 4.
pub fn smallest_prime_geq_half(n: u64) -> u64 {
    smallest_prime_geq(n / 2)
}
