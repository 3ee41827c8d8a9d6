//! Scalar helpers on arbitrary-precision integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Remainder in `[0, |n|)`.
pub fn mod_floor(x: &BigInt, n: &BigInt) -> BigInt {
    x.mod_floor(&n.abs())
}

/// Returns `(g, s, t)` with `s·a + t·b = g = gcd(a, b) ≥ 0`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Unimodular 2×2 transform `[s t; -b/g a/g]` sending `(a, b)` to `(g, 0)`.
/// When `b` already divides `a` (or `b = 0`) a plain shear is preferred so
/// coefficients stay small.
pub(crate) fn gcd_transform(a: &BigInt, b: &BigInt) -> [BigInt; 4] {
    if b.is_zero() {
        return [BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one()];
    }
    if !a.is_zero() && (b % a).is_zero() {
        // (a, b) -> (a, b - (b/a) a)
        let q = b / a;
        return [BigInt::one(), BigInt::zero(), -q, BigInt::one()];
    }
    let (g, s, t) = ext_gcd(a, b);
    [s, t, -(b / &g), a / &g]
}

/// Multiplicative inverse of `a` modulo `n`, if it exists.
pub fn mod_inverse(a: &BigInt, n: &BigInt) -> Option<BigInt> {
    if n.is_one() {
        return Some(BigInt::zero());
    }
    let (g, s, _) = ext_gcd(&mod_floor(a, n), n);
    g.is_one().then(|| mod_floor(&s, n))
}

pub fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}

pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

/// `a^k mod n` for any integer `k`, using the inverse when `k < 0`.
pub fn pow_mod_signed(a: &BigInt, k: i64, n: &BigInt) -> Option<BigInt> {
    let base = if k < 0 { mod_inverse(a, n)? } else { mod_floor(a, n) };
    Some(base.modpow(&BigInt::from(k.unsigned_abs()), &n.abs()))
}

/// Trial-division factorization of a positive machine integer.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `Some((p, k))` when `q = p^k` with `p` prime and `k ≥ 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    match factor_u64(q).as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn gcd_transform_is_unimodular_and_clears() {
        for (x, y) in [(4, 6), (-3, 9), (0, 5), (7, 0), (12, -18), (-5, -7)] {
            let [s, t, c, d] = gcd_transform(&b(x), &b(y));
            assert_eq!(&s * &d - &t * &c, BigInt::one(), "det for ({x},{y})");
            assert!((&c * b(x) + &d * b(y)).is_zero());
            let g = &s * b(x) + &t * b(y);
            assert_eq!(g.abs(), gcd(&b(x), &b(y)));
        }
    }

    #[test]
    fn inverses_and_powers() {
        assert_eq!(mod_inverse(&b(3), &b(7)), Some(b(5)));
        assert_eq!(mod_inverse(&b(2), &b(4)), None);
        assert_eq!(pow_mod_signed(&b(3), -1, &b(7)), Some(b(5)));
        assert_eq!(pow_mod_signed(&b(2), 1, &b(5)), Some(b(2)));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
