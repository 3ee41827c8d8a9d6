use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::group::FinAbGroup;
use super::mat::Mat;
use super::normal_form::{column_hermite, smith, solve_matrix};
use crate::error::{Error, Result};

/// A sublattice of `Z^r`, stored by its canonical column Hermite basis.
///
/// Two sublattices are equal iff their stored bases are identical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sublattice {
    ambient: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl Sublattice {
    /// The lattice spanned by the columns of `generators`.
    pub fn span(generators: &Mat) -> Self {
        let e = column_hermite(generators, false);
        Sublattice { ambient: generators.rows(), basis: e.basis, pivots: e.pivots }
    }

    pub fn span_columns(ambient: usize, columns: &[Vec<BigInt>]) -> Self {
        Self::span(&Mat::from_columns(ambient, columns))
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(&Mat::identity(ambient))
    }

    pub fn zero(ambient: usize) -> Self {
        Self::span(&Mat::zeros(ambient, 0))
    }

    /// `c·Z^r`.
    pub fn scaled_full(ambient: usize, c: &BigInt) -> Self {
        Self::span(&Mat::scalar(ambient, c))
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.ambient
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<BigInt>> {
        self.basis.columns()
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.ambient, "vector has the wrong length");
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for (j, &p) in self.pivots.iter().enumerate() {
            let (q, r) = rest[p].div_rem(&self.basis[(p, j)]);
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for i in p..self.ambient {
                    let d = &self.basis[(i, j)] * &q;
                    rest[i] -= d;
                }
            }
            coords.push(q);
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_lattice(&self, other: &Sublattice) -> bool {
        other.ambient == self.ambient && other.basis.columns().iter().all(|c| self.contains(c))
    }

    /// Canonical representative of the coset `v + L`.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut rest = v.to_vec();
        for (j, &p) in self.pivots.iter().enumerate() {
            let q = rest[p].div_floor(&self.basis[(p, j)]);
            if !q.is_zero() {
                for i in p..self.ambient {
                    let d = &self.basis[(i, j)] * &q;
                    rest[i] -= d;
                }
            }
        }
        rest
    }

    /// Coordinates of every column of `m` in this basis.
    pub fn coordinates_matrix(&self, m: &Mat) -> Option<Mat> {
        let cols = m.columns().iter().map(|c| self.coordinates(c)).collect::<Option<Vec<_>>>()?;
        Some(Mat::from_columns(self.rank(), &cols))
    }

    /// Image of the lattice under `m` (`m` has `ambient` columns).
    pub fn image(&self, m: &Mat) -> Sublattice {
        Sublattice::span(&(m * &self.basis))
    }

    /// Whether `m·L ⊆ L`.
    pub fn is_stable_under(&self, m: &Mat) -> bool {
        (m * &self.basis).columns().iter().all(|c| self.contains(c))
    }

    /// Absolute determinant of the basis; the index in `Z^r` for full rank.
    pub fn covolume(&self) -> Option<BigInt> {
        self.is_full_rank().then(|| self.basis.det().abs())
    }

    fn check_ambient(&self, other: &Sublattice) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        Ok(())
    }

    pub fn join(&self, other: &Sublattice) -> Result<Sublattice> {
        self.check_ambient(other)?;
        Ok(Sublattice::span(&self.basis.hstack(&other.basis)))
    }

    pub fn meet(&self, other: &Sublattice) -> Result<Sublattice> {
        self.check_ambient(other)?;
        let coeffs = preimage(&self.basis, other);
        Ok(Sublattice::span(&(&self.basis * coeffs.basis())))
    }
}

/// Lattice index, possibly infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Index {
    Finite(BigInt),
    Infinite,
}

/// `(a ∩ b, a + b, [a + b : a ∩ b])`.
pub fn lattice_meet_join(a: &Sublattice, b: &Sublattice) -> Result<(Sublattice, Sublattice, Index)> {
    let meet = a.meet(b)?;
    let join = a.join(b)?;
    let index = if meet.rank() == join.rank() {
        Index::Finite(quotient_invariants(&join, &meet)?.order())
    } else {
        Index::Infinite
    };
    Ok((meet, join, index))
}

/// `{x ∈ Z^cols : m·x = 0}`.
pub fn kernel_lattice(m: &Mat) -> Sublattice {
    let e = column_hermite(m, true);
    let k = e.kernel_columns().expect("transform was tracked");
    Sublattice::span(&k)
}

/// `{x ∈ Z^cols : m·x ≡ 0 mod n}`; always contains `n·Z^cols`.
pub fn preimage_mod(m: &Mat, n: &BigInt) -> Sublattice {
    assert!(n.is_positive(), "modulus must be positive");
    let cols = m.cols();
    let stacked = m.hstack(&Mat::scalar(m.rows(), n));
    let k = kernel_lattice(&stacked);
    let projected = k.basis().select_rows(0..cols);
    let with_torsion = projected.hstack(&Mat::scalar(cols, n));
    Sublattice::span(&with_torsion)
}

/// `{x : m·x ∈ target}`.
pub fn preimage(m: &Mat, target: &Sublattice) -> Sublattice {
    assert_eq!(m.rows(), target.ambient_rank(), "target lives in the wrong ambient");
    let cols = m.cols();
    let stacked = m.hstack(&target.basis().scale(&BigInt::from(-1)));
    let k = kernel_lattice(&stacked);
    Sublattice::span(&k.basis().select_rows(0..cols))
}

/// Invariant factors of `sup / sub`.
pub fn quotient_invariants(sup: &Sublattice, sub: &Sublattice) -> Result<FinAbGroup> {
    sup.check_ambient(sub)?;
    if sup.rank() != sub.rank() {
        return Err(Error::InfiniteQuotient { sup_rank: sup.rank(), sub_rank: sub.rank() });
    }
    let change = sup.coordinates_matrix(sub.basis()).ok_or(Error::NotContained)?;
    let s = smith(&change);
    Ok(FinAbGroup::from_cyclic_orders(&s.diagonal))
}

/// Expresses `sub`'s basis in `sup`'s basis (`sup·X = sub`).
pub fn relative_basis(sup: &Sublattice, sub: &Mat) -> Option<Mat> {
    solve_matrix(sup.basis(), sub)
}

impl std::fmt::Debug for Sublattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Sublattice(Z^{}, {:?})", self.ambient, self.basis)
    }
}

impl Sublattice {
    /// Basis vectors as rows of machine integers, for reporting.
    pub fn basis_rows_i64(&self) -> Option<Vec<Vec<i64>>> {
        self.basis.transpose().to_i64_rows()
    }

    /// Index in `Z^r` of a full-rank lattice, as the product of the pivots.
    pub fn index_in_ambient(&self) -> Option<BigInt> {
        self.is_full_rank()
            .then(|| self.pivots.iter().enumerate().map(|(j, &p)| self.basis[(p, j)].clone()).product())
    }

    pub(crate) fn pivot_entries(&self) -> impl Iterator<Item = &BigInt> {
        self.pivots.iter().enumerate().map(move |(j, &p)| &self.basis[(p, j)])
    }

    pub fn is_full(&self) -> bool {
        self.is_full_rank() && self.pivot_entries().all(One::is_one)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn lat(cols: &[[i64; 2]]) -> Sublattice {
        let cols: Vec<Vec<BigInt>> = cols.iter().map(|c| c.iter().map(|&x| b(x)).collect()).collect();
        Sublattice::span_columns(2, &cols)
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_lattice(&Mat::from_rows(&[[1, 1]])), lat(&[[1, -1]]));
        assert_eq!(kernel_lattice(&Mat::identity(2)), Sublattice::zero(2));
        assert_eq!(kernel_lattice(&Mat::zeros(1, 2)), Sublattice::full(2));
    }

    #[test]
    fn preimage_mod_examples() {
        let l = preimage_mod(&Mat::from_rows(&[[1, 1]]), &b(2));
        assert_eq!(l, lat(&[[1, 1], [0, 2]]));
        assert_eq!(l.basis(), &Mat::from_rows(&[[1, 0], [1, 2]]));
        assert!(preimage_mod(&Mat::from_rows(&[[5, 7]]), &b(1)).is_full());
        assert_eq!(preimage_mod(&Mat::identity(2), &b(3)), Sublattice::scaled_full(2, &b(3)));
    }

    #[test]
    fn meet_join_examples() {
        let a = lat(&[[2, 0], [0, 1]]);
        let c = lat(&[[1, 0], [0, 3]]);
        let (meet, join, idx) = lattice_meet_join(&a, &c).unwrap();
        assert_eq!(meet, lat(&[[2, 0], [0, 3]]));
        assert!(join.is_full());
        assert_eq!(idx, Index::Finite(b(6)));

        let (m2, j2, i2) = lattice_meet_join(&a, &a).unwrap();
        assert_eq!((m2.clone(), j2), (a.clone(), a.clone()));
        assert_eq!(i2, Index::Finite(b(1)));

        let two = Sublattice::scaled_full(2, &b(2));
        let (m3, j3, i3) = lattice_meet_join(&two, &Sublattice::zero(2)).unwrap();
        assert_eq!(m3, Sublattice::zero(2));
        assert_eq!(j3, two);
        assert_eq!(i3, Index::Infinite);

        assert!(matches!(a.join(&Sublattice::full(3)), Err(Error::AmbientMismatch { .. })));
    }

    #[test]
    fn quotient_examples() {
        let full = Sublattice::full(2);
        let two = Sublattice::scaled_full(2, &b(2));
        assert_eq!(quotient_invariants(&full, &two).unwrap().factors(), &[b(2), b(2)]);
        let d23 = lat(&[[2, 0], [0, 3]]);
        assert_eq!(quotient_invariants(&full, &d23).unwrap().factors(), &[b(6)]);
        assert!(quotient_invariants(&d23, &d23).unwrap().is_trivial());
        assert!(matches!(quotient_invariants(&two, &full), Err(Error::NotContained)));
        assert!(matches!(
            quotient_invariants(&full, &Sublattice::zero(2)),
            Err(Error::InfiniteQuotient { .. })
        ));
    }

    #[test]
    fn reduce_is_canonical() {
        let l = lat(&[[1, 1], [0, 2]]);
        let r1 = l.reduce(&[b(5), b(8)]);
        let r2 = l.reduce(&[b(0), b(1)]);
        assert_eq!(r1, r2);
        assert_eq!(r1, vec![b(0), b(1)]);
    }
}
