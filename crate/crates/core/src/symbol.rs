//! Tame `n`-th Hilbert symbols and the commutator pairing on split tori.
//!
//! Elements of `F^×` are taken modulo the pro-`p` part `1 + 𝔭`, which is
//! `n`-divisible, so an element is its valuation together with the discrete
//! logarithm of its residue unit with respect to a fixed abstract generator of
//! `𝔽_q^× ≅ Z/(q-1)`. Symbol values are exponents in `μ_n ≅ Z/n`.
//!
//! Normalization: `(a, b) = ((-1)^{v_a v_b} a^{v_b} / b^{v_a})^{(q-1)/n}` on the
//! residue field. Any other choice differs by an automorphism of `μ_n`; radicals
//! do not depend on it.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linear::{arith, preimage_mod, Mat, Sublattice};
use crate::sharp::sharp;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TameField {
    q: u64,
    n: u64,
    minus_one_dlog: u64,
}

impl TameField {
    pub fn new(q: u64, n: u64) -> Result<Self> {
        if arith::prime_power(q).is_none() {
            return Err(Error::InvalidField(format!("q = {q} is not a prime power")));
        }
        if n == 0 || !(q - 1).is_multiple_of(n) {
            return Err(Error::InvalidField(format!("n = {n} does not divide q - 1 = {}", q - 1)));
        }
        let minus_one_dlog = if q % 2 == 1 { (q - 1) / 2 } else { 0 };
        Ok(TameField { q, n, minus_one_dlog })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn minus_one_dlog(&self) -> u64 {
        self.minus_one_dlog
    }

    fn unit_order(&self) -> i128 {
        i128::from(self.q - 1)
    }

    pub fn elt(&self, v: i64, u: i64) -> TameElt {
        TameElt { v, u: u.rem_euclid(self.unit_order() as i64) }
    }

    pub fn uniformizer(&self) -> TameElt {
        TameElt { v: 1, u: 0 }
    }

    pub fn mul(&self, a: TameElt, b: TameElt) -> TameElt {
        self.elt(a.v + b.v, a.u + b.u)
    }

    pub fn neg(&self, a: TameElt) -> TameElt {
        self.elt(a.v, a.u + self.minus_one_dlog as i64)
    }
}

/// `π^v · g^u` modulo `1 + 𝔭`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TameElt {
    pub v: i64,
    pub u: i64,
}

/// Exponent of `(a, b)` in `μ_n`.
pub fn hilbert(f: &TameField, a: TameElt, b: TameElt) -> u64 {
    let (va, ua, vb, ub) = (i128::from(a.v), i128::from(a.u), i128::from(b.v), i128::from(b.u));
    let t = va * vb * i128::from(f.minus_one_dlog) + vb * ua - va * ub;
    t.rem_euclid(i128::from(f.n)) as u64
}

/// `Σ B_ij (s_i, t_j)` in `Z/n`.
pub fn commutator(f: &TameField, form: &Mat, s: &[TameElt], t: &[TameElt]) -> Result<u64> {
    let r = form.rows();
    if !form.is_square() || s.len() != r || t.len() != r {
        return Err(Error::DimensionMismatch(format!(
            "form is {}x{}, got {} and {} elements",
            form.rows(),
            form.cols(),
            s.len(),
            t.len()
        )));
    }
    let n = BigInt::from(f.n);
    let mut acc = BigInt::from(0);
    for (i, si) in s.iter().enumerate() {
        for (j, tj) in t.iter().enumerate() {
            acc += &form[(i, j)] * BigInt::from(hilbert(f, *si, *tj));
        }
    }
    Ok(u64::try_from(arith::mod_floor(&acc, &n)).expect("reduced mod n"))
}

/// Gram matrix of the commutator pairing on `(F^× / F^{×n})^r`, in the
/// coordinates `(v_1, …, v_r, u_1, …, u_r)`.
pub fn commutator_gram(f: &TameField, form: &Mat) -> Mat {
    let m1 = BigInt::from(f.minus_one_dlog);
    let r = form.rows();
    let top = form.scale(&m1).hstack(&form.scale(&BigInt::from(-1)));
    let bottom = form.hstack(&Mat::zeros(r, r));
    top.vstack(&bottom).reduce_mod(&BigInt::from(f.n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitCenter {
    /// Radical of the commutator pairing, as a lattice in `Z^{2r}` containing `n·Z^{2r}`.
    pub radical: Sublattice,
    /// Image of `Y^# ⊗ F^×` in the same coordinates.
    pub sharp_image: Sublattice,
    pub equal: bool,
}

/// Center of the split cover modulo `n`-th powers versus the image of `Y^#`.
pub fn split_center_image(f: &TameField, form: &Mat) -> Result<SplitCenter> {
    if !form.is_square() {
        return Err(Error::DimensionMismatch("form must be square".into()));
    }
    let r = form.rows();
    let n = BigInt::from(f.n);
    let gram = commutator_gram(f, form);
    let radical = preimage_mod(&gram.transpose(), &n);
    let y_sharp = sharp(form, f.n, &Sublattice::full(r)).basis().clone();
    let zero = Mat::zeros(r, y_sharp.cols());
    let gens = y_sharp.vstack(&zero).hstack(&zero.vstack(&y_sharp)).hstack(&Mat::scalar(2 * r, &n));
    let sharp_image = Sublattice::span(&gens);
    let equal = radical == sharp_image;
    Ok(SplitCenter { radical, sharp_image, equal })
}

/// Discrete logarithms in a prime field `F_p` with respect to the least primitive root.
#[derive(Clone, Debug)]
pub struct DlogTable {
    p: u64,
    generator: u64,
    dlog: Vec<u64>,
}

impl DlogTable {
    pub fn new(p: u64) -> Result<Self> {
        match arith::prime_power(p) {
            Some((_, 1)) => {}
            _ => return Err(Error::InvalidField(format!("{p} is not prime"))),
        }
        if p > 1 << 24 {
            return Err(Error::InvalidField(format!("p = {p} is too large for a table")));
        }
        let primes: Vec<u64> = arith::factor_u64(p - 1).into_iter().map(|(l, _)| l).collect();
        let pow = |mut b: u64, mut k: u64| {
            let mut acc = 1u64;
            b %= p;
            while k > 0 {
                if k & 1 == 1 {
                    acc = acc * b % p;
                }
                b = b * b % p;
                k >>= 1;
            }
            acc
        };
        let generator = (1..p)
            .find(|&g| primes.iter().all(|&l| pow(g, (p - 1) / l) != 1))
            .expect("prime fields have primitive roots");
        let mut dlog = vec![0u64; p as usize];
        let mut x = 1u64;
        for k in 0..p - 1 {
            dlog[x as usize] = k;
            x = x * generator % p;
        }
        Ok(DlogTable { p, generator, dlog })
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    /// Discrete log of a nonzero residue.
    pub fn dlog(&self, x: u64) -> u64 {
        let x = x % self.p;
        assert!(x != 0, "zero has no discrete log");
        self.dlog[x as usize]
    }

    /// For `a = π^v·x` (`x` a nonzero residue, lifted by its Teichmüller
    /// representative), the element `1 - a` modulo `1 + 𝔭`.
    ///
    /// Returns `None` when `v = 0` and `x = 1`, where `1 - a` depends on more than
    /// the residue; see [`DlogTable::steinberg_holds`] for that case.
    pub fn steinberg_partner(&self, f: &TameField, v: i64, x: u64) -> Option<TameElt> {
        let x = x % self.p;
        assert!(x != 0);
        match v.signum() {
            1 => Some(f.elt(0, 0)),
            // 1 - a = -a (1 - 1/a) with 1 - 1/a ≡ 1
            -1 => Some(f.neg(f.elt(v, self.dlog(x) as i64))),
            _ if x == 1 => None,
            _ => Some(f.elt(0, self.dlog((1 + self.p - x) % self.p) as i64)),
        }
    }

    /// Checks `(a, 1 - a) = 0` for `a = π^v·x` over all residues `x` and
    /// `|v| ≤ max_v`, and for `a = 1 - π^k·y` (so `1 - a = π^k·y`), `1 ≤ k ≤ max_v`.
    pub fn steinberg_holds(&self, f: &TameField, max_v: i64) -> bool {
        if f.q != self.p {
            return false;
        }
        for v in -max_v..=max_v {
            for x in 1..self.p {
                let a = f.elt(v, self.dlog(x) as i64);
                if let Some(b) = self.steinberg_partner(f, v, x) {
                    if hilbert(f, a, b) != 0 {
                        return false;
                    }
                }
            }
        }
        for k in 1..=max_v {
            for y in 1..self.p {
                let a = f.elt(0, 0);
                let b = f.elt(k, self.dlog(y) as i64);
                if hilbert(f, a, b) != 0 {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hilbert_examples() {
        let f = TameField::new(3, 2).unwrap();
        assert_eq!(hilbert(&f, f.elt(0, 1), f.elt(0, 0)), 0);
        assert_eq!(hilbert(&f, f.uniformizer(), f.uniformizer()), 1);
        let f = TameField::new(7, 3).unwrap();
        assert_eq!(hilbert(&f, f.uniformizer(), f.elt(0, 1)), 2);
        assert!(TameField::new(7, 4).is_err());
        assert!(TameField::new(6, 5).is_err());
        assert_eq!(TameField::new(8, 7).unwrap().minus_one_dlog(), 0);
    }

    #[test]
    fn quadratic_residue_cross_check() {
        // (π, u)_2 = Legendre symbol of u for q = p odd
        for p in [3u64, 5, 7, 11, 13] {
            let f = TameField::new(p, 2).unwrap();
            let t = DlogTable::new(p).unwrap();
            for x in 1..p {
                let square = (1..p).any(|y| y * y % p == x);
                let s = hilbert(&f, f.uniformizer(), f.elt(0, t.dlog(x) as i64));
                assert_eq!(s == 0, square, "p={p} x={x}");
            }
        }
    }

    #[test]
    fn commutator_examples() {
        let f = TameField::new(3, 2).unwrap();
        let pi = f.uniformizer();
        let one = f.elt(0, 0);
        assert_eq!(commutator(&f, &Mat::zeros(2, 2), &[pi, one], &[one, pi]).unwrap(), 0);
        assert_eq!(commutator(&f, &Mat::from_rows(&[[2]]), &[pi], &[f.elt(3, 1)]).unwrap(), 0);
        let form = Mat::from_rows(&[[0, 1], [0, 0]]);
        assert_eq!(commutator(&f, &form, &[pi, one], &[one, pi]).unwrap(), 1);
        assert!(commutator(&f, &form, &[pi], &[one, pi]).is_err());
    }

    #[test]
    fn split_center_examples() {
        let f = TameField::new(3, 2).unwrap();
        let c = split_center_image(&f, &Mat::scalar(2, &BigInt::from(2))).unwrap();
        assert!(c.radical.is_full() && c.sharp_image.is_full() && c.equal);
        let c = split_center_image(&f, &Mat::from_rows(&[[0, 1], [1, 0]])).unwrap();
        assert!(c.equal);
        assert_eq!(c.radical, Sublattice::scaled_full(4, &BigInt::from(2)));
        let c = split_center_image(&f, &Mat::from_rows(&[[2]])).unwrap();
        assert!(c.equal && c.radical.is_full());
    }

    #[test]
    fn dlog_and_steinberg() {
        let t = DlogTable::new(7).unwrap();
        assert_eq!(t.generator(), 3);
        assert_eq!(t.dlog(1), 0);
        assert_eq!(t.dlog(3), 1);
        assert_eq!(t.dlog(2), 2);
        for n in [1, 2, 3, 6] {
            assert!(t.steinberg_holds(&TameField::new(7, n).unwrap(), 3));
        }
        assert!(DlogTable::new(9).is_err());
    }
}
