//! Seeded generators for randomized test suites and benchmarks.
//!
//! Galois actions are assembled from small finite-order blocks (signs,
//! swaps, rotations of order 3, 4, 6, a 3-cycle), conjugated by a random
//! unimodular matrix. Invariant forms come from averaging over the group.

use num_bigint::BigInt;
use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cohomology::TameModule;
use crate::datum::{generated_group, CoverDatum, RawConfig, ValidateOptions, DEFAULT_CLOSURE_CAP};
use crate::linear::{Mat, Sublattice};
use crate::symbol::TameField;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Residue field sizes used by the generators.
pub const FIELD_SIZES: [u64; 15] = [3, 4, 5, 7, 8, 9, 11, 13, 16, 19, 25, 27, 29, 31, 37];

pub fn divisors(x: u64) -> Vec<u64> {
    (1..=x).filter(|d| x.is_multiple_of(*d)).collect()
}

/// A unimodular `P` and its inverse, as a product of `steps` elementary moves.
pub fn random_unimodular(rng: &mut TestRng, r: usize, steps: usize) -> (Mat, Mat) {
    let mut p = Mat::identity(r);
    let mut p_inv = Mat::identity(r);
    if r == 0 {
        return (p, p_inv);
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..r);
        let j = rng.gen_range(0..r);
        if i == j || r == 1 {
            // negate column i of P (and row i of P⁻¹)
            let mut e = Mat::identity(r);
            e[(i, i)] = BigInt::from(-1);
            p = &p * &e;
            p_inv = &e * &p_inv;
        } else {
            let c: i64 = *[-2, -1, 1, 2].choose(rng).expect("nonempty");
            let mut e = Mat::identity(r);
            e[(i, j)] = BigInt::from(c);
            let mut e_inv = Mat::identity(r);
            e_inv[(i, j)] = BigInt::from(-c);
            p = &p * &e;
            p_inv = &e_inv * &p_inv;
        }
    }
    (p, p_inv)
}

fn block_diag(blocks: &[Mat]) -> Mat {
    let r: usize = blocks.iter().map(Mat::rows).sum();
    let mut m = Mat::zeros(r, r);
    let mut at = 0;
    for b in blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                m[(at + i, at + j)] = b[(i, j)].clone();
            }
        }
        at += b.rows();
    }
    m
}

/// Finite-order building blocks: `(generator, order, inverting conjugator)`.
fn blocks() -> Vec<(Mat, u64, Mat)> {
    let s = Mat::from_rows(&[[0, 1], [1, 0]]);
    vec![
        (Mat::from_rows(&[[1]]), 1, Mat::identity(1)),
        (Mat::from_rows(&[[-1]]), 2, Mat::identity(1)),
        (Mat::from_rows(&[[0, 1], [1, 0]]), 2, Mat::identity(2)),
        (Mat::from_rows(&[[0, -1], [1, -1]]), 3, s.clone()),
        (Mat::from_rows(&[[0, -1], [1, 0]]), 4, s.clone()),
        (Mat::from_rows(&[[1, -1], [1, 0]]), 6, s),
        (
            Mat::from_rows(&[[0, 0, 1], [1, 0, 0], [0, 1, 0]]),
            3,
            Mat::from_rows(&[[0, 1, 0], [1, 0, 0], [0, 0, 1]]),
        ),
    ]
}

/// The quadratic form `Σ_{g ∈ G} Q(g y)` as an upper-triangular coefficient matrix.
pub fn average_form(group: &[Mat], upper: &Mat) -> Mat {
    let r = upper.rows();
    let mut acc = Mat::zeros(r, r);
    for g in group {
        let w = &(&g.transpose() * upper) * g;
        for i in 0..r {
            acc[(i, i)] += &w[(i, i)];
            for j in i + 1..r {
                let t = &w[(i, j)] + &w[(j, i)];
                acc[(i, j)] += t;
            }
        }
    }
    acc
}

pub fn random_upper(rng: &mut TestRng, r: usize, bound: i64) -> Mat {
    let mut u = Mat::zeros(r, r);
    for i in 0..r {
        for j in i..r {
            u[(i, j)] = BigInt::from(rng.gen_range(-bound..=bound));
        }
    }
    u
}

/// Split datum: trivial action, random form, `n | q - 1` with `n ≤ 12`.
pub fn random_split_config(rng: &mut TestRng) -> RawConfig {
    let r = rng.gen_range(1..=4);
    let q = *[3u64, 5, 7, 13].choose(rng).expect("nonempty");
    let ns: Vec<u64> = divisors(q - 1).into_iter().filter(|&n| n <= 12).collect();
    let n = *ns.choose(rng).expect("1 divides");
    let upper = random_upper(rng, r, 6);
    RawConfig {
        rank: r,
        inertia_gens: Vec::new(),
        frobenius: Mat::identity(r).to_i64_rows().expect("small"),
        q,
        n,
        q_upper: upper.to_i64_rows().expect("small"),
    }
}

/// Whether the ramification condition `gcd(n, e) = 1` should hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GcdMode {
    Coprime,
    Violated,
}

/// A datum with a block Galois action of rank at most `max_rank`.
///
/// In [`GcdMode::Violated`] the datum is admitted through the validation
/// bypass and always has `gcd(n, e) > 1`.
pub fn random_datum(rng: &mut TestRng, max_rank: usize, mode: GcdMode) -> CoverDatum {
    loop {
        if let Some(d) = try_random_datum(rng, max_rank, mode) {
            return d;
        }
    }
}

fn try_random_datum(rng: &mut TestRng, max_rank: usize, mode: GcdMode) -> Option<CoverDatum> {
    let catalog = blocks();
    let mut chosen = Vec::new();
    let mut r = 0;
    let target = rng.gen_range(1..=max_rank.max(1));
    while r < target {
        let (g, o, s) = catalog.choose(rng).expect("nonempty").clone();
        if r + g.rows() > target {
            continue;
        }
        r += g.rows();
        chosen.push((g, o, s));
    }
    let ramified = rng.gen_bool(0.6);
    let invert = rng.gen_bool(0.5);
    let mut inertia_blocks = Vec::new();
    let mut frob_blocks = Vec::new();
    for (g, o, s) in &chosen {
        let a = rng.gen_range(0..*o.max(&1));
        let b = rng.gen_range(0..*o.max(&1));
        inertia_blocks.push(g.pow(a));
        let f = g.pow(b);
        frob_blocks.push(if invert { s * &f } else { f });
    }
    let sigma = block_diag(&inertia_blocks);
    let phi = block_diag(&frob_blocks);
    let inertia = if ramified && sigma != Mat::identity(r) { vec![sigma] } else { Vec::new() };
    let e = if inertia.is_empty() { 1 } else { generated_group(&inertia, DEFAULT_CLOSURE_CAP).ok()?.len() as u64 };

    let q = *FIELD_SIZES.choose(rng).expect("nonempty");
    let ns: Vec<u64> = divisors(q - 1)
        .into_iter()
        .filter(|&n| match mode {
            GcdMode::Coprime => n.gcd(&e) == 1,
            GcdMode::Violated => n.gcd(&e) > 1,
        })
        .collect();
    let n = *ns.choose(rng)?;

    let mut gens = inertia.clone();
    gens.push(phi.clone());
    let group = generated_group(&gens, DEFAULT_CLOSURE_CAP).ok()?;
    let upper = average_form(&group, &random_upper(rng, r, 3));
    let opts = ValidateOptions { enforce_ramification_gcd: mode == GcdMode::Coprime, ..ValidateOptions::default() };
    let d = CoverDatum::from_parts(inertia, phi, q, n, upper, &opts).ok()?;
    let (p, _) = random_unimodular(rng, r, 2 * r);
    d.base_change(&p, &opts).ok()
}

/// A finite tame module of order at most `max_order`, with `e`, `q ∈ {3, 5, 7}` and a
/// degree `n` such that the exponent divides `n`, `gcd(n, q) = gcd(n, e) = 1`.
pub fn random_tame_module(rng: &mut TestRng, max_order: u64) -> (TameModule, u64) {
    loop {
        if let Some(found) = try_random_tame_module(rng, max_order) {
            return found;
        }
    }
}

fn try_random_tame_module(rng: &mut TestRng, max_order: u64) -> Option<(TameModule, u64)> {
    let q = *[3u64, 5, 7].choose(rng).expect("nonempty");
    let e = *[1u64, 2, 3, 4, 6].choose(rng).expect("nonempty");
    let ns: Vec<u64> = (1..=60).filter(|&n| n.gcd(&q) == 1 && n.gcd(&e) == 1).collect();
    let n = *ns.choose(rng).expect("1 qualifies");
    let catalog: Vec<(Mat, u64, Mat)> = blocks().into_iter().filter(|(_, o, _)| e.is_multiple_of(*o)).collect();

    let mut sigma_blocks = Vec::new();
    let mut phi_blocks = Vec::new();
    let mut moduli = Vec::new();
    let mut order = 1u64;
    let count = rng.gen_range(1..=3);
    for _ in 0..count {
        let (g, o, s) = catalog.choose(rng).expect("identity block always qualifies").clone();
        let d = *divisors(n).choose(rng).expect("nonempty");
        let size = d.pow(g.rows() as u32);
        if order * size > max_order {
            continue;
        }
        order *= size;
        let j = rng.gen_range(0..o);
        let twist = if q % o == 1 % o { Mat::identity(g.rows()) } else { s };
        let units: Vec<i64> = (1..=d.max(2) as i64).filter(|u| u.gcd(&(d as i64)) == 1).collect();
        let u = *units.choose(rng).expect("1 is a unit");
        phi_blocks.push((&twist * &g.pow(j)).scale(&BigInt::from(u)));
        sigma_blocks.push(g);
        for _ in 0..phi_blocks.last().expect("pushed").rows() {
            moduli.push(BigInt::from(d));
        }
    }
    if sigma_blocks.is_empty() {
        return None;
    }
    let k = moduli.len();
    let sigma = block_diag(&sigma_blocks);
    let phi = block_diag(&phi_blocks);
    let (p, p_inv) = random_unimodular(rng, k, k + 1);
    let rel = &p_inv * &Mat::diagonal(k, k, &moduli);
    let conj = |m: &Mat| &(&p_inv * m) * &p;
    let module = TameModule::new(Sublattice::span(&rel), conj(&sigma), conj(&phi), e, q).ok()?;
    Some((module, n))
}

/// A symmetric form `B = U + Uᵀ` of rank at most 4 with a degree `n ≤ 12`.
pub fn random_form(rng: &mut TestRng) -> (Mat, u64) {
    let r = rng.gen_range(1..=4);
    let u = random_upper(rng, r, 6);
    let b = u.add(&u.transpose());
    (b, rng.gen_range(1..=12))
}

/// A tame field with `n | q - 1` and a symmetric form of rank at most 3.
pub fn random_field_and_form(rng: &mut TestRng) -> (TameField, Mat) {
    let q = *FIELD_SIZES.choose(rng).expect("nonempty");
    let n = *divisors(q - 1).choose(rng).expect("nonempty");
    let r = rng.gen_range(1..=3);
    let u = random_upper(rng, r, 6);
    (TameField::new(q, n).expect("n divides q - 1"), u.add(&u.transpose()))
}

/// Residue field sizes `q` with `n | q - 1` among [`FIELD_SIZES`].
pub fn fields_for(n: u64) -> Vec<u64> {
    FIELD_SIZES.iter().copied().filter(|q| (q - 1) % n == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::inverse_unimodular;

    #[test]
    fn unimodular_pairs() {
        let mut g = rng(1);
        for r in 1..5 {
            let (p, p_inv) = random_unimodular(&mut g, r, 12);
            assert_eq!(&p * &p_inv, Mat::identity(r));
            assert_eq!(inverse_unimodular(&p), Some(p_inv));
        }
    }

    #[test]
    fn generated_data_are_valid() {
        let mut g = rng(7);
        for _ in 0..30 {
            let d = random_datum(&mut g, 4, GcdMode::Coprime);
            assert_eq!(d.n().gcd(&d.e()), 1);
            let v = random_datum(&mut g, 3, GcdMode::Violated);
            assert!(v.n().gcd(&v.e()) > 1);
        }
    }

    #[test]
    fn generated_modules_respect_bounds() {
        let mut g = rng(3);
        for _ in 0..30 {
            let (m, n) = random_tame_module(&mut g, 1000);
            assert!(m.order() <= BigInt::from(1000));
            assert!(BigInt::from(n).is_multiple_of(&m.exponent()));
        }
    }

    #[test]
    fn same_seed_same_data() {
        let a: Vec<RawConfig> = (0..5).map(|_| random_split_config(&mut rng(11))).collect();
        let b: Vec<RawConfig> = (0..5).map(|_| random_split_config(&mut rng(11))).collect();
        assert_eq!(a, b);
    }
}
