//! Trial-division primality and factoring for the small integers this crate
//! works with. Everything here is desk scale; no probabilistic tests.

/// Deterministic primality by trial division up to sqrt(n).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    if n.is_multiple_of(3) {
        return n == 3;
    }
    let mut d = 5u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= n) {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// Prime factorisation as (prime, exponent) pairs in ascending prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut push = |p: u64, e: u32| {
        if e > 0 {
            out.push((p, e));
        }
    };
    for p in [2u64, 3] {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        push(p, e);
    }
    let mut d = 5u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= n) {
        for p in [d, d + 2] {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            push(p, e);
        }
        d += 6;
    }
    push(n, u32::from(n > 1));
    out
}
