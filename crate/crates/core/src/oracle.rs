//! Brute-force reference computations.
//!
//! Everything here works element by element on `(Z/N)^k` with machine
//! integers and exact rationals, and never calls the Hermite/Smith code in
//! [`crate::linear`]; its value as a cross-check depends on that.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;
use serde::Serialize;

use crate::datum::CoverDatum;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::linear::{FinAbGroup, Mat};

pub const DEFAULT_CAP: u64 = 1_000_000;

type Q = Ratio<i128>;

/// An element of `(Z/N)^k`.
pub type Residue = Vec<u64>;

fn small_rows(m: &Mat) -> Result<Vec<Vec<i128>>> {
    let rows = m.to_i64_rows().ok_or_else(|| Error::CapExceeded { size: "matrix entry".into(), cap: i64::MAX as u64 })?;
    Ok(rows.into_iter().map(|r| r.into_iter().map(i128::from).collect()).collect())
}

fn enumeration_size(modulus: u64, k: usize, cap: u64) -> Result<u64> {
    let mut size: u64 = 1;
    for _ in 0..k {
        size = size.checked_mul(modulus).filter(|&s| s <= cap).ok_or_else(|| Error::CapExceeded {
            size: format!("{modulus}^{k}"),
            cap,
        })?;
    }
    Ok(size)
}

fn decode(mut index: u64, modulus: u64, k: usize) -> Residue {
    let mut out = vec![0; k];
    for slot in out.iter_mut() {
        *slot = index % modulus;
        index /= modulus;
    }
    out
}

fn apply_mod(m: &[Vec<i128>], x: &[u64], modulus: u64) -> Residue {
    let n = i128::from(modulus);
    m.iter()
        .map(|row| {
            let s: i128 = row.iter().zip(x).map(|(a, &b)| (a.rem_euclid(n) * i128::from(b)) % n).sum();
            s.rem_euclid(n) as u64
        })
        .collect()
}

/// Solves `basis · X = rhs` over the rationals by Gaussian elimination;
/// `None` if inconsistent.
fn rational_solve(basis: &[Vec<i128>], rhs: &[Vec<i128>]) -> Option<Vec<Vec<Q>>> {
    let rows = basis.len();
    let k = basis.first().map_or(0, Vec::len);
    let extra = rhs.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<Q>> = (0..rows)
        .map(|i| basis[i].iter().chain(&rhs[i]).map(|&x| Q::from_integer(x)).collect())
        .collect();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..k {
        let Some(p) = (row..rows).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(row, p);
        let lead = a[row][col];
        for x in a[row].iter_mut() {
            *x /= lead;
        }
        for i in 0..rows {
            if i != row && !a[i][col].is_zero() {
                let factor = a[i][col];
                for j in 0..k + extra {
                    let d = a[row][j] * factor;
                    a[i][j] -= d;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
    }
    if pivot_cols.len() != k {
        return None; // basis columns are dependent
    }
    if a[row..].iter().any(|r| r[k..].iter().any(|x| !x.is_zero())) {
        return None;
    }
    let mut x = vec![vec![Q::zero(); extra]; k];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = a[i][k..].to_vec();
    }
    Some(x)
}

/// `basis⁻¹ · g · basis` as an integer matrix, if `g` preserves the span.
fn restrict(basis: &[Vec<i128>], g: &[Vec<i128>]) -> Result<Vec<Vec<i128>>> {
    let r = basis.len();
    let k = basis.first().map_or(0, Vec::len);
    let image: Vec<Vec<i128>> =
        (0..r).map(|i| (0..k).map(|j| (0..r).map(|l| g[i][l] * basis[l][j]).sum()).collect()).collect();
    let x = rational_solve(basis, &image).ok_or(Error::NotGaloisStable)?;
    x.into_iter()
        .map(|row| row.into_iter().map(|v| if v.is_integer() { Ok(v.to_integer()) } else { Err(Error::NotGaloisStable) }).collect())
        .collect()
}

fn basis_columns_i128(basis: &Mat) -> Result<Vec<Vec<i128>>> {
    small_rows(basis)
}

fn level_modulus_u64(q: u64, m: u64) -> Result<u64> {
    let m = u32::try_from(m).map_err(|_| Error::InvalidLevel)?;
    if m == 0 {
        return Err(Error::InvalidLevel);
    }
    q.checked_pow(m).map(|x| x - 1).ok_or_else(|| Error::CapExceeded { size: format!("{q}^{m}"), cap: u64::MAX })
}

/// All `x ∈ (Z/N)^k` fixed by the restricted generators (Frobenius twisted by `q`),
/// where `k` is the number of columns of `sub_basis`.
pub fn brute_invariant_points(d: &CoverDatum, sub_basis: &Mat, m: u64, cap: u64, exec: Execution) -> Result<Vec<Residue>> {
    let modulus = level_modulus_u64(d.q(), m)?;
    let k = sub_basis.cols();
    let size = enumeration_size(modulus, k, cap)?;
    let basis = basis_columns_i128(sub_basis)?;
    let q = i128::from(d.q());
    let mut actions = Vec::new();
    for g in d.inertia_gens() {
        actions.push(restrict(&basis, &small_rows(g)?)?);
    }
    let frob = restrict(&basis, &small_rows(d.frobenius())?)?;
    actions.push(frob.into_iter().map(|row| row.into_iter().map(|x| x * q).collect()).collect());
    let hits = exec.filter_range(size, |i| {
        let x = decode(i, modulus, k);
        actions.iter().all(|a| apply_mod(a, &x, modulus) == x)
    });
    Ok(hits.into_iter().map(|i| decode(i, modulus, k)).collect())
}

/// The image of [`brute_invariant_points`] in `(Z/N)^r` under `x ↦ sub_basis·x`, sorted.
pub fn brute_iota_image(d: &CoverDatum, sub_basis: &Mat, m: u64, cap: u64, exec: Execution) -> Result<Vec<Residue>> {
    let modulus = level_modulus_u64(d.q(), m)?;
    enumeration_size(modulus, d.rank(), cap)?;
    let basis = basis_columns_i128(sub_basis)?;
    let points = brute_invariant_points(d, sub_basis, m, cap, exec)?;
    let images = exec.map(&points, |x| apply_mod(&basis, x, modulus));
    let set: std::collections::BTreeSet<Residue> = images.into_iter().collect();
    Ok(set.into_iter().collect())
}

fn add_mod(a: &[u64], b: &[u64], modulus: u64) -> Residue {
    a.iter().zip(b).map(|(x, y)| (x + y) % modulus).collect()
}

/// Checks that `elems` is a subgroup of `(Z/modulus)^k` by regenerating it
/// from its own elements.
fn check_subgroup(elems: &HashSet<Residue>, modulus: u64, k: usize, what: &str) -> Result<()> {
    let zero = vec![0; k];
    if !elems.contains(&zero) {
        return Err(Error::NotASubgroup(format!("{what} does not contain 0")));
    }
    let mut generated: HashSet<Residue> = HashSet::from([zero]);
    let mut ordered: Vec<&Residue> = elems.iter().collect();
    ordered.sort();
    for x in ordered {
        if generated.contains(x) {
            continue;
        }
        // generated + <x>
        let current: Vec<Residue> = generated.iter().cloned().collect();
        let before: HashSet<&Residue> = current.iter().collect();
        let mut shift = x.clone();
        while !before.contains(&shift) {
            for h in &current {
                let y = add_mod(h, &shift, modulus);
                if !elems.contains(&y) {
                    return Err(Error::NotASubgroup(format!("{what} is not closed under addition")));
                }
                generated.insert(y);
            }
            shift = add_mod(&shift, x, modulus);
        }
    }
    if generated.len() != elems.len() {
        return Err(Error::NotASubgroup(format!("{what} is not generated by its elements")));
    }
    Ok(())
}

/// Number of elements of order dividing `t` in `⊕ Z/d_i`, per `t | order`.
fn divisor_profile(factors: &[u64], order: u64) -> BTreeMap<u64, u64> {
    (1..=order)
        .filter(|t| order.is_multiple_of(*t))
        .map(|t| (t, factors.iter().map(|&d| t.gcd(&d)).product()))
        .collect()
}

/// All chains `d_1 | … | d_k`, `d_i ≥ 2`, with product `order`.
fn abelian_groups(order: u64) -> Vec<Vec<u64>> {
    fn rec(rest: u64, last: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 1 {
            let mut chain = acc.clone();
            chain.reverse();
            out.push(chain);
            return;
        }
        // build from the largest factor down: each new factor divides the previous one
        for d in 2..=rest {
            if rest.is_multiple_of(d) && last.is_multiple_of(d) {
                acc.push(d);
                rec(rest / d, d, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(order, order, &mut Vec::new(), &mut out);
    out.retain(|c| c.windows(2).all(|w| w[1] % w[0] == 0));
    out
}

/// Invariant factors of `amb / sub` (both given as element sets of `(Z/modulus)^k`),
/// from the element-order profile of the quotient.
pub fn brute_quotient(amb: &[Residue], sub: &[Residue], modulus: u64) -> Result<FinAbGroup> {
    let k = amb.first().map_or(0, Vec::len);
    if amb.len() as u64 > DEFAULT_CAP {
        return Err(Error::CapExceeded { size: amb.len().to_string(), cap: DEFAULT_CAP });
    }
    let amb_set: HashSet<Residue> = amb.iter().cloned().collect();
    let sub_set: HashSet<Residue> = sub.iter().cloned().collect();
    if !sub_set.is_subset(&amb_set) {
        return Err(Error::NotASubgroup("subgroup has elements outside the ambient group".into()));
    }
    check_subgroup(&amb_set, modulus, k, "ambient set")?;
    check_subgroup(&sub_set, modulus, k, "subgroup")?;
    if !amb_set.len().is_multiple_of(sub_set.len()) {
        return Err(Error::NotASubgroup("sizes are incompatible".into()));
    }
    let order = (amb_set.len() / sub_set.len()) as u64;

    // one representative per coset, with its order in the quotient
    let mut seen: HashSet<Residue> = HashSet::new();
    let mut orders: BTreeMap<u64, u64> = BTreeMap::new();
    let mut reps: Vec<&Residue> = amb.iter().collect();
    reps.sort();
    for x in reps {
        if seen.contains(x) {
            continue;
        }
        for s in &sub_set {
            seen.insert(add_mod(x, s, modulus));
        }
        let mut t = 1u64;
        let mut y = x.clone();
        while !sub_set.contains(&y) {
            y = add_mod(&y, x, modulus);
            t += 1;
        }
        *orders.entry(t).or_default() += 1;
    }
    let dividing: BTreeMap<u64, u64> = (1..=order)
        .filter(|t| order.is_multiple_of(*t))
        .map(|t| (t, orders.iter().filter(|(o, _)| t % **o == 0).map(|(_, c)| c).sum()))
        .collect();
    let matches: Vec<Vec<u64>> =
        abelian_groups(order).into_iter().filter(|chain| divisor_profile(chain, order) == dividing).collect();
    match matches.as_slice() {
        [one] => Ok(FinAbGroup::from_invariant_factors(one.iter().map(|&d| BigInt::from(d)).collect())
            .expect("chains are normalized")),
        _ => Err(Error::OrderProfileAmbiguous),
    }
}

/// All `x ∈ (Z/n)^k` with `xᵀ·gram·y ≡ 0 mod n` for every `y`.
pub fn brute_radical(gram: &Mat, n: u64, cap: u64, exec: Execution) -> Result<Vec<Residue>> {
    let k = gram.rows();
    let size = enumeration_size(n, k, cap)?;
    let g = small_rows(gram)?;
    let nn = i128::from(n);
    let hits = exec.filter_range(size, |i| {
        let x = decode(i, n, k);
        // row vector xᵀ·gram
        let xg: Vec<i128> = (0..gram.cols())
            .map(|j| (0..k).map(|l| i128::from(x[l]) * g[l][j]).sum::<i128>().rem_euclid(nn))
            .collect();
        (0..size).all(|jdx| {
            let y = decode(jdx, n, k);
            xg.iter().zip(&y).map(|(a, &b)| a * i128::from(b)).sum::<i128>() % nn == 0
        })
    });
    Ok(hits.into_iter().map(|i| decode(i, n, k)).collect())
}

/// `{y ∈ (Z/n)^r : B(y, t) ≡ 0 mod n for each column t of target_basis}`.
pub fn brute_sharp_residues(form: &Mat, n: u64, target_basis: &Mat, cap: u64, exec: Execution) -> Result<Vec<Residue>> {
    let r = form.rows();
    let size = enumeration_size(n, r, cap)?;
    let b = small_rows(form)?;
    let t = small_rows(target_basis)?;
    let nn = i128::from(n);
    // B(y, t) = yᵀ B t
    let bt: Vec<Vec<i128>> = (0..r)
        .map(|i| (0..target_basis.cols()).map(|j| (0..r).map(|l| b[i][l] * t[l][j]).sum()).collect())
        .collect();
    let hits = exec.filter_range(size, |i| {
        let y = decode(i, n, r);
        (0..target_basis.cols()).all(|j| (0..r).map(|l| i128::from(y[l]) * bt[l][j]).sum::<i128>().rem_euclid(nn) == 0)
    });
    Ok(hits.into_iter().map(|i| decode(i, n, r)).collect())
}

fn rational_det(m: &[Vec<i128>]) -> Q {
    let k = m.len();
    let mut a: Vec<Vec<Q>> = m.iter().map(|r| r.iter().map(|&x| Q::from_integer(x)).collect()).collect();
    let mut det = Q::from_integer(1);
    for c in 0..k {
        let Some(p) = (c..k).find(|&i| !a[i][c].is_zero()) else { return Q::zero() };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= a[c][c];
        for i in c + 1..k {
            let f = a[i][c] / a[c][c];
            for j in c..k {
                let d = a[c][j] * f;
                a[i][j] -= d;
            }
        }
    }
    det
}

/// Whether the lattice with the given (square, full-rank) basis is exactly the
/// preimage of `residues ⊆ (Z/n)^r`: every basis vector reduces into the set and
/// the index `|det|` equals `n^r / #residues`.
pub fn lattice_matches_residues(basis: &Mat, n: u64, residues: &[Residue]) -> Result<bool> {
    let r = basis.rows();
    if basis.cols() != r {
        return Ok(false);
    }
    let b = small_rows(basis)?;
    let set: HashSet<&Residue> = residues.iter().collect();
    let nn = i128::from(n);
    for j in 0..r {
        let v: Residue = (0..r).map(|i| b[i][j].rem_euclid(nn) as u64).collect();
        if !set.contains(&v) {
            return Ok(false);
        }
    }
    let det = rational_det(&b).to_integer().abs();
    let total = (0..r).try_fold(1i128, |acc, _| acc.checked_mul(nn)).expect("small");
    Ok(det * residues.len() as i128 == total)
}

/// Whether the columns of `basis` span a saturated sublattice consisting of
/// vectors fixed by every generator, of the same rank as the rational fixed space.
pub fn is_fixed_lattice(d: &CoverDatum, basis: &Mat) -> Result<bool> {
    let r = d.rank();
    let k = basis.cols();
    let b = small_rows(basis)?;
    for g in d.generators() {
        let g = small_rows(g)?;
        for j in 0..k {
            for i in 0..r {
                let s: i128 = (0..r).map(|l| g[i][l] * b[l][j]).sum();
                if s != b[i][j] {
                    return Ok(false);
                }
            }
        }
    }
    // rank of the stacked (g - 1) over Q
    let mut stacked = Vec::new();
    for g in d.generators() {
        let g = small_rows(g)?;
        for (i, row) in g.iter().enumerate() {
            stacked.push(row.iter().enumerate().map(|(j, &x)| if i == j { x - 1 } else { x }).collect::<Vec<_>>());
        }
    }
    let nullity = r - rational_rank(&stacked, r);
    if nullity != k {
        return Ok(false);
    }
    // saturation: gcd of the maximal minors is 1
    let mut g = 0i128;
    for rows in combinations(r, k) {
        let minor: Vec<Vec<i128>> = rows.iter().map(|&i| b[i].clone()).collect();
        g = g.gcd(&rational_det(&minor).to_integer());
    }
    Ok(k == 0 || g == 1)
}

fn rational_rank(rows: &[Vec<i128>], cols: usize) -> usize {
    let mut a: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| Q::from_integer(x)).collect()).collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(rank, p);
        for i in 0..a.len() {
            if i != rank && !a[i][c].is_zero() {
                let f = a[i][c] / a[rank][c];
                for j in 0..cols {
                    let d = a[rank][j] * f;
                    a[i][j] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for i in start..n {
            acc.push(i);
            rec(i + 1, n, k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Same subgroup: equal sizes and every enumerated element lies in the lattice.
fn level_group_matches(main: &crate::residue::LevelGroup, elems: &[Residue]) -> bool {
    if BigInt::from(elems.len()) != main.order() {
        return false;
    }
    elems.iter().all(|x| main.contains(&x.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>()))
}

/// Agreement of the main path with the oracle at one level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelCheck {
    pub level: u64,
    pub modulus: u64,
    pub invariant_points: bool,
    pub iota_images: bool,
    pub packet_group: bool,
    pub main: FinAbGroup,
    pub oracle: FinAbGroup,
}

/// Agreement report over several levels plus the lattice-level checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub fixed_lattice: bool,
    pub sharp: bool,
    pub fixed_sharp: bool,
    pub radical: bool,
    pub levels: Vec<LevelCheck>,
    /// Levels skipped because `N^r` exceeds the cap.
    pub skipped_levels: Vec<u64>,
}

impl CrossCheck {
    pub fn passed(&self) -> bool {
        self.fixed_lattice
            && self.sharp
            && self.fixed_sharp
            && self.radical
            && self.levels.iter().all(|l| l.invariant_points && l.iota_images && l.packet_group)
    }
}

/// Runs the main path and the oracle side by side on `d` at each level whose
/// enumeration fits under `cap`.
pub fn cross_check(d: &CoverDatum, levels: &[u64], cap: u64, exec: Execution) -> Result<CrossCheck> {
    use crate::residue::{invariant_points, iota_image, packet_group_level_with};
    use crate::sharp::{induced_form_radical, SharpLattices};

    let lat = SharpLattices::compute(d);
    let n = d.n();
    let r = d.rank();
    let fixed_lattice = is_fixed_lattice(d, lat.fixed.basis())?;
    let sharp = lattice_matches_residues(
        lat.sharp.basis(),
        n,
        &brute_sharp_residues(d.form(), n, &Mat::identity(r), cap, exec)?,
    )?;
    let fixed_sharp =
        lattice_matches_residues(lat.fixed_sharp.basis(), n, &brute_sharp_residues(d.form(), n, lat.fixed.basis(), cap, exec)?)?;
    // the form induces a perfect pairing on Y / Y^#
    let main_radical = induced_form_radical(d.form(), n, &lat.sharp, &lat.sharp)?;
    let brute = brute_radical(&d.form().transpose(), n, cap, exec)?;
    let radical = main_radical.is_trivial() && lattice_matches_residues(lat.sharp.basis(), n, &brute)?;

    let mut checks = Vec::new();
    let mut skipped = Vec::new();
    for &m in levels {
        let modulus = match level_modulus_u64(d.q(), m) {
            Ok(x) if enumeration_size(x, r, cap).is_ok() => x,
            _ => {
                skipped.push(m);
                continue;
            }
        };
        let mut inv_ok = true;
        let mut iota_ok = true;
        let mut images = Vec::new();
        for sub in [&lat.fixed_sharp, &lat.sharp, &lat.fixed] {
            let main_inv = invariant_points(d, sub, m)?;
            let brute_inv = brute_invariant_points(d, sub.basis(), m, cap, exec)?;
            inv_ok &= level_group_matches(&main_inv, &brute_inv);
            let main_img = iota_image(d, sub, m)?;
            let brute_img = brute_iota_image(d, sub.basis(), m, cap, exec)?;
            iota_ok &= level_group_matches(&main_img, &brute_img);
            images.push(brute_img);
        }
        let main = packet_group_level_with(d, &lat, m)?;
        let oracle = brute_quotient(&images[0], &images[1], modulus)?;
        checks.push(LevelCheck {
            level: m,
            modulus,
            invariant_points: inv_ok,
            iota_images: iota_ok,
            packet_group: main == oracle,
            main,
            oracle,
        });
    }
    Ok(CrossCheck { fixed_lattice, sharp, fixed_sharp, radical, levels: checks, skipped_levels: skipped })
}

/// Largest `m` with `(q^m - 1)^r ≤ cap`, if any.
pub fn max_enumerable_level(q: u64, r: usize, cap: u64) -> Option<u64> {
    let mut best = None;
    for m in 1..64u64 {
        match level_modulus_u64(q, m) {
            Ok(x) if enumeration_size(x, r, cap).is_ok() => best = Some(m),
            _ => break,
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datum::{validate, RawConfig};

    fn raw(inertia: Vec<Vec<Vec<i64>>>, frob: Vec<Vec<i64>>, q: u64, n: u64, qu: Vec<Vec<i64>>) -> RawConfig {
        RawConfig { rank: frob.len(), inertia_gens: inertia, frobenius: frob, q, n, q_upper: qu }
    }

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn invariant_point_examples() {
        let swap = validate(&raw(vec![], vec![vec![0, 1], vec![1, 0]], 3, 2, vec![vec![0, 1], vec![0, 0]])).unwrap();
        let pts = brute_invariant_points(&swap, &Mat::identity(2), 1, DEFAULT_CAP, Execution::Sequential).unwrap();
        assert_eq!(pts, vec![vec![0, 0], vec![1, 1]]);
        let split = validate(&raw(vec![], vec![vec![1]], 7, 3, vec![vec![1]])).unwrap();
        assert_eq!(brute_invariant_points(&split, &Mat::identity(1), 1, DEFAULT_CAP, Execution::Parallel).unwrap().len(), 6);
        let ram = validate(&raw(vec![vec![vec![-1]]], vec![vec![1]], 7, 3, vec![vec![1]])).unwrap();
        let pts = brute_invariant_points(&ram, &Mat::identity(1), 1, DEFAULT_CAP, Execution::Sequential).unwrap();
        assert_eq!(pts, vec![vec![0], vec![3]]);
        assert!(matches!(
            brute_invariant_points(&ram, &Mat::identity(1), 12, 1000, Execution::Sequential),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn quotient_examples() {
        let amb: Vec<Residue> = (0..4).map(|i| decode(i, 2, 2)).collect();
        let sub = vec![vec![0, 0], vec![1, 1]];
        assert_eq!(brute_quotient(&amb, &sub, 2).unwrap().factors(), &[b(2)]);
        assert!(brute_quotient(&amb, &amb, 2).unwrap().is_trivial());
        let z6: Vec<Residue> = (0..6).map(|i| vec![i]).collect();
        assert_eq!(brute_quotient(&z6, &[vec![0], vec![3]], 6).unwrap().factors(), &[b(3)]);
        let z8: Vec<Residue> = (0..8).map(|i| vec![i]).collect();
        assert_eq!(brute_quotient(&z8, &[vec![0]], 8).unwrap().factors(), &[b(8)]);
        assert!(matches!(brute_quotient(&z6, &[vec![0], vec![1]], 6), Err(Error::NotASubgroup(_))));
        let z4sq: Vec<Residue> = (0..16).map(|i| decode(i, 4, 2)).collect();
        assert_eq!(brute_quotient(&z4sq, &[vec![0, 0], vec![2, 0]], 4).unwrap().factors(), &[b(2), b(4)]);
    }

    #[test]
    fn group_enumeration() {
        let mut g8 = abelian_groups(8);
        g8.sort();
        assert_eq!(g8, vec![vec![2, 2, 2], vec![2, 4], vec![8]]);
        assert_eq!(abelian_groups(1), vec![Vec::<u64>::new()]);
        assert_eq!(abelian_groups(12).len(), 2);
    }

    #[test]
    fn radical_examples() {
        let all = brute_radical(&Mat::zeros(2, 2), 3, DEFAULT_CAP, Execution::Sequential).unwrap();
        assert_eq!(all.len(), 9);
        assert_eq!(brute_radical(&Mat::identity(2), 2, DEFAULT_CAP, Execution::Sequential).unwrap(), vec![vec![0, 0]]);
        let h = Mat::from_rows(&[[0, 1], [1, 0]]);
        assert_eq!(brute_radical(&h, 2, DEFAULT_CAP, Execution::Parallel).unwrap(), vec![vec![0, 0]]);
    }

    #[test]
    fn rational_helpers() {
        assert_eq!(rational_det(&[vec![2, 1], vec![1, 1]]), Q::from_integer(1));
        assert_eq!(rational_rank(&[vec![1, 2], vec![2, 4]], 2), 1);
        let r = restrict(&[vec![1], vec![1]], &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(r, vec![vec![1]]);
        assert!(restrict(&[vec![1], vec![0]], &[vec![0, 1], vec![1, 0]]).is_err());
    }
}
