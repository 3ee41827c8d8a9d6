//! Input datum: a torus given by its cocharacter lattice `Z^r` with a Galois
//! action, a residue field size `q`, and a cover of degree `n` classified by an
//! invariant quadratic form.
//!
//! The Galois action is given by its generators: matrices for a set of inertia
//! generators and one Frobenius lift. Invariance of a coefficient module then
//! means invariance under the inertia generators (acting on the lattice only)
//! and under the Frobenius lift, which additionally raises roots of unity to
//! the `q`-th power.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linear::{arith, inverse_unimodular, Mat};

pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;

/// JSON config, matrices as row-major lists of rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawConfig {
    pub rank: usize,
    #[serde(default)]
    pub inertia_gens: Vec<Vec<Vec<i64>>>,
    pub frobenius: Vec<Vec<i64>>,
    pub q: u64,
    pub n: u64,
    #[serde(rename = "Q_upper")]
    pub q_upper: Vec<Vec<i64>>,
}

impl RawConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ValidateOptions {
    pub closure_cap: usize,
    /// Test hook: admit data with `gcd(n, e) ≠ 1`.
    pub enforce_ramification_gcd: bool,
}

impl Default for ValidateOptions {
    fn default() -> Self {
        ValidateOptions { closure_cap: DEFAULT_CLOSURE_CAP, enforce_ramification_gcd: true }
    }
}

/// Flattened `r × r` machine-integer matrix used for group enumeration.
type Elem = Vec<i64>;

/// A validated cover datum.
#[derive(Clone, Debug)]
pub struct CoverDatum {
    rank: usize,
    inertia_gens: Vec<Mat>,
    frobenius: Mat,
    q: u64,
    prime: u64,
    n: u64,
    q_upper: Mat,
    form: Mat,
    group_order: usize,
    inertia_order: usize,
    exponent: u64,
}

pub fn validate(raw: &RawConfig) -> Result<CoverDatum> {
    validate_with(raw, &ValidateOptions::default())
}

pub fn validate_with(raw: &RawConfig, opts: &ValidateOptions) -> Result<CoverDatum> {
    let r = raw.rank;
    let square = |m: &Vec<Vec<i64>>, what: &str| -> Result<Mat> {
        if m.len() != r || m.iter().any(|row| row.len() != r) {
            return Err(Error::Config(format!("{what} must be a {r}x{r} matrix")));
        }
        Ok(Mat::from_rows(m))
    };
    let frobenius = square(&raw.frobenius, "frobenius")?;
    let inertia = raw
        .inertia_gens
        .iter()
        .enumerate()
        .map(|(i, g)| square(g, &format!("inertia_gens[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let q_upper = square(&raw.q_upper, "Q_upper")?;
    CoverDatum::from_parts(inertia, frobenius, raw.q, raw.n, q_upper, opts)
}

impl CoverDatum {
    pub fn from_parts(
        inertia_gens: Vec<Mat>,
        frobenius: Mat,
        q: u64,
        n: u64,
        q_upper: Mat,
        opts: &ValidateOptions,
    ) -> Result<Self> {
        let r = frobenius.rows();
        if !frobenius.is_square() || !q_upper.is_square() || q_upper.rows() != r {
            return Err(Error::Config("matrix shapes disagree".into()));
        }
        if inertia_gens.iter().any(|g| g.rows() != r || g.cols() != r) {
            return Err(Error::Config("inertia generator shapes disagree".into()));
        }
        if (0..r).any(|i| (0..i).any(|j| !num_traits::Zero::is_zero(&q_upper[(i, j)]))) {
            return Err(Error::Config("Q_upper must be upper triangular".into()));
        }
        if n == 0 {
            return Err(Error::Config("n must be at least 1".into()));
        }
        let (prime, _) = arith::prime_power(q).ok_or(Error::NotPrimePower { q })?;
        if !(q - 1).is_multiple_of(n) {
            return Err(Error::RootsOfUnity { n, q_minus_one: q - 1 });
        }

        let mut gens: Vec<Mat> = inertia_gens.clone();
        gens.push(frobenius.clone());
        for (index, g) in gens.iter().enumerate() {
            let det = g.det();
            if det != BigInt::from(1) && det != BigInt::from(-1) {
                return Err(Error::Determinant { index, det: det.to_string() });
            }
        }

        let form = q_upper.add(&q_upper.transpose());
        for (index, g) in gens.iter().enumerate() {
            let gt = g.transpose();
            if &(&gt * &form) * g != form {
                return Err(Error::FormNotInvariant { index, detail: "A^T B A != B".into() });
            }
            let pulled = &(&gt * &q_upper) * g;
            if (0..r).any(|i| pulled[(i, i)] != q_upper[(i, i)]) {
                return Err(Error::FormNotInvariant { index, detail: "Q(Ay) != Q(y) on a basis vector".into() });
            }
        }

        let to_elem = |m: &Mat| -> Result<Elem> {
            m.to_i64_rows()
                .map(|rows| rows.concat())
                .ok_or(Error::GroupNotFinite { cap: opts.closure_cap })
        };
        let gen_elems = gens.iter().map(to_elem).collect::<Result<Vec<_>>>()?;
        let inertia_elems = &gen_elems[..inertia_gens.len()];
        let whole = closure(r, &gen_elems, opts.closure_cap)?;
        let inertia_group = closure(r, inertia_elems, opts.closure_cap)?;

        let frob_inv = inverse_unimodular(&frobenius).expect("determinant already checked");
        for (index, g) in inertia_gens.iter().enumerate() {
            let conj = &(&frobenius * g) * &frob_inv;
            let conj = to_elem(&conj)?;
            if !inertia_group.contains(&conj) {
                return Err(Error::InertiaNotNormalized { index });
            }
        }

        let e = inertia_group.len() as u64;
        if opts.enforce_ramification_gcd && n.gcd(&e) != 1 {
            return Err(Error::RamificationGcd { n, e });
        }

        let exponent = group_exponent(r, &whole);
        Ok(CoverDatum {
            rank: r,
            inertia_gens,
            frobenius,
            q,
            prime,
            n,
            q_upper,
            form,
            group_order: whole.len(),
            inertia_order: inertia_group.len(),
            exponent,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn inertia_gens(&self) -> &[Mat] {
        &self.inertia_gens
    }

    pub fn frobenius(&self) -> &Mat {
        &self.frobenius
    }

    /// Inertia generators followed by the Frobenius lift.
    pub fn generators(&self) -> Vec<&Mat> {
        self.inertia_gens.iter().chain(std::iter::once(&self.frobenius)).collect()
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn residue_characteristic(&self) -> u64 {
        self.prime
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q_upper(&self) -> &Mat {
        &self.q_upper
    }

    /// The bilinear form `B = Q_upper + Q_upperᵀ`, so `B(y, y) = 2·Q(y)`.
    pub fn form(&self) -> &Mat {
        &self.form
    }

    /// Ramification index: the order of the inertia group.
    pub fn e(&self) -> u64 {
        self.inertia_order as u64
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    /// Exponent of the finite group generated by all generators.
    pub fn group_exponent(&self) -> u64 {
        self.exponent
    }

    pub fn is_split(&self) -> bool {
        self.group_order == 1
    }

    /// The same datum in new coordinates `y = P·y'` for unimodular `P`.
    pub fn base_change(&self, p: &Mat, opts: &ValidateOptions) -> Result<CoverDatum> {
        let p_inv = inverse_unimodular(p).ok_or_else(|| Error::Config("change of basis is not unimodular".into()))?;
        let conj = |a: &Mat| &(&p_inv * a) * p;
        let pulled = &(&p.transpose() * &self.q_upper) * p;
        let r = self.rank;
        let mut upper = Mat::zeros(r, r);
        for i in 0..r {
            upper[(i, i)] = pulled[(i, i)].clone();
            for j in i + 1..r {
                upper[(i, j)] = &pulled[(i, j)] + &pulled[(j, i)];
            }
        }
        CoverDatum::from_parts(
            self.inertia_gens.iter().map(conj).collect(),
            conj(&self.frobenius),
            self.q,
            self.n,
            upper,
            opts,
        )
    }

    /// Round-trips to the config schema; `None` if an entry exceeds `i64`.
    pub fn to_config(&self) -> Option<RawConfig> {
        Some(RawConfig {
            rank: self.rank,
            inertia_gens: self.inertia_gens.iter().map(Mat::to_i64_rows).collect::<Option<_>>()?,
            frobenius: self.frobenius.to_i64_rows()?,
            q: self.q,
            n: self.n,
            q_upper: self.q_upper.to_i64_rows()?,
        })
    }
}

fn mul_elem(r: usize, a: &[i64], b: &[i64]) -> Option<Elem> {
    let mut out = vec![0i64; r * r];
    for i in 0..r {
        for k in 0..r {
            let x = a[i * r + k];
            if x == 0 {
                continue;
            }
            for j in 0..r {
                let t = x.checked_mul(b[k * r + j])?;
                out[i * r + j] = out[i * r + j].checked_add(t)?;
            }
        }
    }
    Some(out)
}

fn identity_elem(r: usize) -> Elem {
    let mut e = vec![0; r * r];
    for i in 0..r {
        e[i * r + i] = 1;
    }
    e
}

/// Breadth-first closure of the generated matrix group.
fn closure(r: usize, gens: &[Elem], cap: usize) -> Result<HashSet<Elem>> {
    let id = identity_elem(r);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = mul_elem(r, g, &x).ok_or(Error::GroupNotFinite { cap })?;
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Err(Error::GroupNotFinite { cap });
                }
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

/// All elements of the group generated by `gens` (square matrices of one size),
/// sorted by their entries.
pub fn generated_group(gens: &[Mat], cap: usize) -> Result<Vec<Mat>> {
    let r = gens.first().map_or(0, Mat::rows);
    let flat = gens
        .iter()
        .map(|g| g.to_i64_rows().map(|rows| rows.concat()).ok_or(Error::GroupNotFinite { cap }))
        .collect::<Result<Vec<_>>>()?;
    let mut elems: Vec<Elem> = closure(r, &flat, cap)?.into_iter().collect();
    elems.sort();
    Ok(elems
        .into_iter()
        .map(|e| Mat::from_vec(r, r, e.into_iter().map(BigInt::from).collect()))
        .collect())
}

fn group_exponent(r: usize, group: &HashSet<Elem>) -> u64 {
    let id = identity_elem(r);
    let mut exp = 1u64;
    for g in group {
        let mut x = g.clone();
        let mut k = 1u64;
        while x != id {
            x = mul_elem(r, g, &x).expect("finite group elements stay bounded");
            k += 1;
        }
        exp = exp.lcm(&k);
    }
    exp
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn swap_config() -> RawConfig {
        RawConfig {
            rank: 2,
            inertia_gens: vec![],
            frobenius: vec![vec![0, 1], vec![1, 0]],
            q: 3,
            n: 2,
            q_upper: vec![vec![0, 1], vec![0, 0]],
        }
    }

    fn ramified(n: u64) -> RawConfig {
        RawConfig { rank: 1, inertia_gens: vec![vec![vec![-1]]], frobenius: vec![vec![1]], q: 7, n, q_upper: vec![vec![1]] }
    }

    #[test]
    fn swap_datum_validates() {
        let d = validate(&swap_config()).unwrap();
        assert_eq!(d.e(), 1);
        assert_eq!(d.form(), &Mat::from_rows(&[[0, 1], [1, 0]]));
        assert_eq!(d.group_order(), 2);
        assert_eq!(d.group_exponent(), 2);
    }

    #[test]
    fn ramified_datum() {
        let d = validate(&ramified(3)).unwrap();
        assert_eq!(d.e(), 2);
        assert_eq!(d.form(), &Mat::from_rows(&[[2]]));
        assert_eq!(validate(&ramified(2)).unwrap_err(), Error::RamificationGcd { n: 2, e: 2 });
        let opts = ValidateOptions { enforce_ramification_gcd: false, ..Default::default() };
        assert!(validate_with(&ramified(2), &opts).is_ok());
    }

    #[test]
    fn rejections() {
        let mut c = swap_config();
        c.q = 6;
        assert_eq!(validate(&c).unwrap_err(), Error::NotPrimePower { q: 6 });
        let mut c = swap_config();
        c.n = 4;
        assert!(matches!(validate(&c).unwrap_err(), Error::RootsOfUnity { .. }));
        let mut c = swap_config();
        c.frobenius = vec![vec![2, 0], vec![0, 1]];
        assert!(matches!(validate(&c).unwrap_err(), Error::Determinant { .. }));
        let mut c = swap_config();
        c.q_upper = vec![vec![1, 0], vec![0, 2]];
        assert!(matches!(validate(&c).unwrap_err(), Error::FormNotInvariant { .. }));
        // infinite order unipotent, invariant form zero
        let c = RawConfig {
            rank: 2,
            inertia_gens: vec![],
            frobenius: vec![vec![1, 1], vec![0, 1]],
            q: 3,
            n: 1,
            q_upper: vec![vec![0, 0], vec![0, 0]],
        };
        let opts = ValidateOptions { closure_cap: 1000, ..Default::default() };
        assert_eq!(validate_with(&c, &opts).unwrap_err(), Error::GroupNotFinite { cap: 1000 });
        let mut c = swap_config();
        c.q_upper = vec![vec![0, 1], vec![1, 0]];
        assert!(matches!(validate(&c).unwrap_err(), Error::Config(_)));
    }

    #[test]
    fn inertia_must_be_normalized() {
        // inertia <diag(-1, 1)>, frobenius swap: conjugate is diag(1, -1), outside inertia
        let c = RawConfig {
            rank: 2,
            inertia_gens: vec![vec![vec![-1, 0], vec![0, 1]]],
            frobenius: vec![vec![0, 1], vec![1, 0]],
            q: 7,
            n: 3,
            q_upper: vec![vec![1, 0], vec![0, 1]],
        };
        assert_eq!(validate(&c).unwrap_err(), Error::InertiaNotNormalized { index: 0 });
    }

    #[test]
    fn base_change_round_trip() {
        let d = validate(&swap_config()).unwrap();
        let p = Mat::from_rows(&[[2, 1], [1, 1]]);
        let d2 = d.base_change(&p, &ValidateOptions::default()).unwrap();
        assert_eq!(d2.group_order(), 2);
        let back = d2.base_change(&inverse_unimodular(&p).unwrap(), &ValidateOptions::default()).unwrap();
        assert_eq!(back.frobenius(), d.frobenius());
        assert_eq!(back.q_upper(), d.q_upper());
    }

    #[test]
    fn config_json() {
        let text = r#"{"rank": 1, "inertia_gens": [[[-1]]], "frobenius": [[1]], "q": 7, "n": 3, "Q_upper": [[1]]}"#;
        let raw = RawConfig::from_json(text).unwrap();
        assert_eq!(raw, ramified(3));
        assert!(RawConfig::from_json(r#"{"rank": 1}"#).is_err());
    }
}
