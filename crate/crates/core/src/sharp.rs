//! Fixed lattice and annihilator ("sharp") lattices of the cover's form.

use num_bigint::BigInt;
use num_traits::One;

use crate::datum::CoverDatum;
use crate::error::{Error, Result};
use crate::linear::{kernel_lattice, preimage_mod, quotient_invariants, FinAbGroup, Mat, Sublattice};

/// `Y^Γ`: vectors fixed by every generator.
pub fn fixed_lattice(d: &CoverDatum) -> Sublattice {
    let r = d.rank();
    let one = BigInt::one();
    let stacked = d
        .generators()
        .into_iter()
        .fold(Mat::zeros(0, r), |acc, g| acc.vstack(&g.minus_scalar(&one)));
    kernel_lattice(&stacked)
}

/// `{y : B(y, c) ≡ 0 mod n for all c in target}`.
pub fn sharp(form: &Mat, n: u64, target: &Sublattice) -> Sublattice {
    assert!(form.is_square() && form.rows() == target.ambient_rank(), "form and target disagree");
    // B(y, c) = (B c)ᵀ y
    let rows = (form * target.basis()).transpose();
    preimage_mod(&rows, &BigInt::from(n))
}

/// `{y : B(c, y) ≡ 0 mod n for all c in target}`, the right-hand annihilator.
pub fn sharp_right(form: &Mat, n: u64, target: &Sublattice) -> Sublattice {
    sharp(&form.transpose(), n, target)
}

/// The three lattices entering the packet group.
#[derive(Clone, Debug)]
pub struct SharpLattices {
    /// `Y^Γ`.
    pub fixed: Sublattice,
    /// `Y^#`, the annihilator of `Y`.
    pub sharp: Sublattice,
    /// `Y^{Γ#}`, the annihilator of `Y^Γ`.
    pub fixed_sharp: Sublattice,
}

impl SharpLattices {
    pub fn compute(d: &CoverDatum) -> Self {
        let fixed = fixed_lattice(d);
        let full = Sublattice::full(d.rank());
        SharpLattices {
            sharp: sharp(d.form(), d.n(), &full),
            fixed_sharp: sharp(d.form(), d.n(), &fixed),
            fixed,
        }
    }

    /// `Y / Y^#`.
    pub fn sharp_quotient(&self) -> FinAbGroup {
        let full = Sublattice::full(self.sharp.ambient_rank());
        quotient_invariants(&full, &self.sharp).expect("Y^# has full rank")
    }

    /// `Y^{Γ#} / Y^#`.
    pub fn fixed_sharp_quotient(&self) -> FinAbGroup {
        quotient_invariants(&self.fixed_sharp, &self.sharp).expect("Y^# ⊆ Y^{Γ#}, both full rank")
    }
}

/// Left radical of the `Z/n`-valued pairing induced by `form` on
/// `(Z^r / left) × (Z^r / right)`.
///
/// The pairing is well defined iff `left` annihilates all of `Z^r` on the left
/// and `right` does so on the right; otherwise [`Error::Precondition`].
pub fn induced_form_radical(form: &Mat, n: u64, left: &Sublattice, right: &Sublattice) -> Result<FinAbGroup> {
    let r = form.rows();
    if left.ambient_rank() != r || right.ambient_rank() != r {
        return Err(Error::AmbientMismatch { left: left.ambient_rank(), right: r });
    }
    let full = Sublattice::full(r);
    let left_ann = sharp(form, n, &full);
    let right_ann = sharp_right(form, n, &full);
    if !left_ann.contains_lattice(left) || !right_ann.contains_lattice(right) {
        return Err(Error::Precondition(
            "the form does not descend to the quotients: a relation lattice is not inside the annihilator".into(),
        ));
    }
    // x pairs trivially with Z^r/right iff x pairs trivially with Z^r,
    // so the radical is the left annihilator of Z^r taken modulo `left`
    quotient_invariants(&left_ann, left)
}

/// [`induced_form_radical`] for the datum's own form.
pub fn radical_of_induced_form(d: &CoverDatum, sub1: &Sublattice, sub2: &Sublattice) -> Result<FinAbGroup> {
    induced_form_radical(d.form(), d.n(), sub1, sub2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datum::{validate, RawConfig};

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn swap() -> CoverDatum {
        validate(&RawConfig {
            rank: 2,
            inertia_gens: vec![],
            frobenius: vec![vec![0, 1], vec![1, 0]],
            q: 3,
            n: 2,
            q_upper: vec![vec![0, 1], vec![0, 0]],
        })
        .unwrap()
    }

    #[test]
    fn fixed_lattices() {
        let d = swap();
        assert_eq!(fixed_lattice(&d), Sublattice::span(&Mat::from_rows(&[[1], [1]])));
        let ram = validate(&RawConfig {
            rank: 1,
            inertia_gens: vec![vec![vec![-1]]],
            frobenius: vec![vec![1]],
            q: 7,
            n: 3,
            q_upper: vec![vec![1]],
        })
        .unwrap();
        assert_eq!(fixed_lattice(&ram), Sublattice::zero(1));
        let split = validate(&RawConfig {
            rank: 3,
            inertia_gens: vec![],
            frobenius: vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
            q: 5,
            n: 4,
            q_upper: vec![vec![1, 2, 0], vec![0, 3, 1], vec![0, 0, 1]],
        })
        .unwrap();
        assert!(fixed_lattice(&split).is_full());
    }

    #[test]
    fn sharp_examples() {
        let form = Mat::from_rows(&[[0, 1], [1, 0]]);
        let full = Sublattice::full(2);
        assert_eq!(sharp(&form, 2, &full), Sublattice::scaled_full(2, &b(2)));
        let diag = Sublattice::span(&Mat::from_rows(&[[1], [1]]));
        assert_eq!(sharp(&form, 2, &diag), preimage_mod(&Mat::from_rows(&[[1, 1]]), &b(2)));
        assert!(sharp(&Mat::from_rows(&[[3, 1], [1, 5]]), 1, &full).is_full());
        assert!(sharp(&form, 2, &Sublattice::zero(2)).is_full());
    }

    #[test]
    fn sharp_chain_for_swap() {
        let s = SharpLattices::compute(&swap());
        assert_eq!(s.sharp_quotient().factors(), &[b(2), b(2)]);
        assert_eq!(s.fixed_sharp_quotient().factors(), &[b(2)]);
    }

    #[test]
    fn radical_examples() {
        let form = Mat::from_rows(&[[0, 1], [1, 0]]);
        let two = Sublattice::scaled_full(2, &b(2));
        assert!(induced_form_radical(&form, 2, &two, &two).unwrap().is_trivial());
        let full = Sublattice::full(2);
        assert!(induced_form_radical(&form, 1, &full, &full).unwrap().is_trivial());
        assert!(induced_form_radical(&Mat::zeros(2, 2), 2, &full, &full).unwrap().is_trivial());
        // Z^2 is not inside 2Z^2: the form does not descend
        assert!(matches!(induced_form_radical(&form, 2, &full, &two), Err(Error::Precondition(_))));
        // a smaller relation lattice leaves a radical behind
        let four = Sublattice::scaled_full(2, &b(4));
        assert_eq!(induced_form_radical(&form, 2, &four, &two).unwrap().factors(), &[b(2), b(2)]);
    }
}
