//! Cohomology of finite modules over the residue field and over the tame
//! quotient of the local Galois group.
//!
//! Every module is presented as `Z^k / R` with `R` a full-rank relation
//! lattice, and every endomorphism as an integer `k × k` matrix preserving `R`.
//! Endomorphism matrices are stored with each column reduced modulo `R`, so
//! two stored matrices are equal iff they act identically on the module.
//!
//! For the procyclic Galois group of a finite field with Frobenius `phi`,
//! `H^0 = ker(phi - 1)` and `H^1 = coker(phi - 1)`. For a tame module with
//! inertia generator `sigma` (of order dividing `e`) the inflation-restriction
//! sequence gives
//!
//! ```text
//! #H^0 = #ker(phi - 1 | M^sigma)
//! #H^1 = #coker(phi - 1 | M^sigma) · #ker(q^{-1} phi - 1 | M_sigma)
//! #H^2 = #coker(q^{-1} phi - 1 | M_sigma)
//! ```
//!
//! where `M_sigma = coker(sigma - 1)` carries the Frobenius twisted by `-1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linear::{arith, preimage, preimage_mod, quotient_invariants, solve, solve_matrix, FinAbGroup, Mat, Sublattice};

fn check_relations(relations: &Sublattice) -> Result<()> {
    if !relations.is_full_rank() {
        return Err(Error::InvalidModule("relation lattice must have full rank (finite module)".into()));
    }
    Ok(())
}

fn canonical_endo(relations: &Sublattice, f: &Mat) -> Mat {
    let cols: Vec<Vec<BigInt>> = f.columns().iter().map(|c| relations.reduce(c)).collect();
    Mat::from_columns(relations.ambient_rank(), &cols)
}

/// Whether `f` and `g` agree on `Z^k / R`.
fn endo_eq(relations: &Sublattice, f: &Mat, g: &Mat) -> bool {
    f.sub(g).columns().iter().all(|c| relations.contains(c))
}

fn endo_pow(relations: &Sublattice, f: &Mat, mut k: u64) -> Mat {
    let mut acc = Mat::identity(f.rows());
    let mut base = canonical_endo(relations, f);
    while k > 0 {
        if k & 1 == 1 {
            acc = canonical_endo(relations, &(&acc * &base));
        }
        base = canonical_endo(relations, &(&base * &base));
        k >>= 1;
    }
    acc
}

fn module_group(relations: &Sublattice) -> FinAbGroup {
    quotient_invariants(&Sublattice::full(relations.ambient_rank()), relations).expect("full-rank relations")
}

/// `ker f` as the lattice `{x : f x ∈ R}` (containing `R`).
fn kernel_lattice_of(relations: &Sublattice, f: &Mat) -> Sublattice {
    preimage(f, relations)
}

/// `f(Z^k) + R`.
fn image_lattice_of(relations: &Sublattice, f: &Mat) -> Sublattice {
    Sublattice::span(&f.hstack(relations.basis()))
}

fn unit_mod(q: &BigInt, k: i64, exponent: &BigInt) -> Result<BigInt> {
    arith::pow_mod_signed(q, k, exponent)
        .ok_or_else(|| Error::InvalidModule("q is not invertible modulo the module exponent".into()))
}

/// Presents the submodule `L / R` (with `R ⊆ L`, both full rank) in `L`'s basis,
/// transporting each endomorphism; every `f` must preserve `L`.
fn restrict_to(sub: &Sublattice, relations: &Sublattice, endos: &[&Mat]) -> (Sublattice, Vec<Mat>) {
    let rel = sub.coordinates_matrix(relations.basis()).expect("relations lie in the submodule lattice");
    let rel = Sublattice::span(&rel);
    let maps = endos
        .iter()
        .map(|f| {
            let m = sub.coordinates_matrix(&(*f * sub.basis())).expect("submodule is stable");
            canonical_endo(&rel, &m)
        })
        .collect();
    (rel, maps)
}

/// Finite abelian group with a Frobenius automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobModule {
    relations: Sublattice,
    phi: Mat,
    q: BigInt,
}

impl FrobModule {
    pub fn new(relations: Sublattice, phi: Mat, q: impl Into<BigInt>) -> Result<Self> {
        let q = q.into();
        check_relations(&relations)?;
        let k = relations.ambient_rank();
        if phi.rows() != k || phi.cols() != k {
            return Err(Error::InvalidModule(format!("phi must be {k}x{k}")));
        }
        if !relations.is_stable_under(&phi) {
            return Err(Error::InvalidModule("phi does not preserve the relations".into()));
        }
        if kernel_lattice_of(&relations, &phi) != relations {
            return Err(Error::InvalidModule("phi is not invertible on the module".into()));
        }
        let order = relations.index_in_ambient().expect("full rank");
        if !arith::gcd(&order, &q).is_one() {
            return Err(Error::InvalidModule("module order is not prime to q".into()));
        }
        let phi = canonical_endo(&relations, &phi);
        Ok(FrobModule { relations, phi, q })
    }

    /// `Z/d_1 ⊕ … ⊕ Z/d_k` with Frobenius acting by the given matrix.
    pub fn from_diagonal(orders: &[i64], phi: Mat, q: i64) -> Result<Self> {
        let d: Vec<BigInt> = orders.iter().map(|&x| BigInt::from(x)).collect();
        let rel = Sublattice::span(&Mat::diagonal(d.len(), d.len(), &d));
        FrobModule::new(rel, phi, q)
    }

    pub fn rank(&self) -> usize {
        self.relations.ambient_rank()
    }

    pub fn relations(&self) -> &Sublattice {
        &self.relations
    }

    pub fn phi(&self) -> &Mat {
        &self.phi
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn group(&self) -> FinAbGroup {
        module_group(&self.relations)
    }

    pub fn order(&self) -> BigInt {
        self.relations.index_in_ambient().expect("full rank")
    }

    pub fn exponent(&self) -> BigInt {
        self.group().exponent()
    }

    /// Lattice `{x : (phi - 1) x ∈ R}`, whose quotient by `R` is `H^0`.
    pub fn h0_lattice(&self) -> Sublattice {
        kernel_lattice_of(&self.relations, &self.phi.minus_scalar(&BigInt::one()))
    }

    /// Lattice `(phi - 1) Z^k + R`; `H^1` is `Z^k` modulo it.
    pub fn coboundary_lattice(&self) -> Sublattice {
        image_lattice_of(&self.relations, &self.phi.minus_scalar(&BigInt::one()))
    }

    pub fn contains_h0(&self, x: &[BigInt]) -> bool {
        let d = self.phi.minus_scalar(&BigInt::one());
        self.relations.contains(&d.mul_vec(x))
    }
}

/// `(H^0, H^1)` of the procyclic residue Galois group.
pub fn h0_h1(m: &FrobModule) -> (FinAbGroup, FinAbGroup) {
    let h0 = quotient_invariants(&m.h0_lattice(), &m.relations).expect("kernel contains relations");
    let h1 = quotient_invariants(&Sublattice::full(m.rank()), &m.coboundary_lattice()).expect("full rank");
    assert_eq!(h0.order(), h1.order(), "kernel and cokernel of an endomorphism of a finite group differ in size");
    (h0, h1)
}

/// `M(k)`: Frobenius multiplied by `q^k`, with `q^{-1}` taken modulo the exponent.
pub fn tate_twist(m: &FrobModule, k: i64) -> Result<FrobModule> {
    let c = unit_mod(&m.q, k, &m.exponent())?;
    Ok(FrobModule { relations: m.relations.clone(), phi: canonical_endo(&m.relations, &m.phi.scale(&c)), q: m.q.clone() })
}

/// A candidate short exact sequence `0 → A → B → C → 0` of Frobenius modules.
#[derive(Clone, Debug)]
pub struct ShortExactSequence {
    pub a: FrobModule,
    pub b: FrobModule,
    pub c: FrobModule,
    /// `A → B`, a `rank(B) × rank(A)` matrix.
    pub inc: Mat,
    /// `B → C`, a `rank(C) × rank(B)` matrix.
    pub proj: Mat,
}

/// Which parts of exactness hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessReport {
    pub well_defined: bool,
    pub equivariant: bool,
    pub injective: bool,
    pub exact_in_middle: bool,
    pub surjective: bool,
}

impl ExactnessReport {
    pub fn is_exact(&self) -> bool {
        self.well_defined && self.equivariant && self.injective && self.exact_in_middle && self.surjective
    }

    fn describe_failure(&self) -> String {
        let mut parts = Vec::new();
        for (ok, what) in [
            (self.well_defined, "maps do not respect relations"),
            (self.equivariant, "maps do not commute with phi"),
            (self.injective, "A -> B is not injective"),
            (self.exact_in_middle, "image(A) != kernel(B -> C)"),
            (self.surjective, "B -> C is not surjective"),
        ] {
            if !ok {
                parts.push(what);
            }
        }
        parts.join("; ")
    }
}

impl ShortExactSequence {
    pub fn new(a: FrobModule, b: FrobModule, c: FrobModule, inc: Mat, proj: Mat) -> Result<Self> {
        if inc.rows() != b.rank() || inc.cols() != a.rank() || proj.rows() != c.rank() || proj.cols() != b.rank() {
            return Err(Error::DimensionMismatch("sequence maps have the wrong shapes".into()));
        }
        Ok(ShortExactSequence { a, b, c, inc, proj })
    }

    pub fn exactness(&self) -> ExactnessReport {
        let (ra, rb, rc) = (&self.a.relations, &self.b.relations, &self.c.relations);
        let well_defined = rb.contains_lattice(&ra.image(&self.inc)) && rc.contains_lattice(&rb.image(&self.proj));
        let equivariant = well_defined
            && endo_eq(rb, &(&self.b.phi * &self.inc), &(&self.inc * &self.a.phi))
            && endo_eq(rc, &(&self.proj * &self.b.phi), &(&self.c.phi * &self.proj));
        if !well_defined {
            return ExactnessReport { well_defined, equivariant, injective: false, exact_in_middle: false, surjective: false };
        }
        let injective = kernel_lattice_of(rb, &self.inc) == *ra;
        let surjective = image_lattice_of(rc, &self.proj).is_full();
        let exact_in_middle = kernel_lattice_of(rc, &self.proj) == image_lattice_of(rb, &self.inc);
        ExactnessReport { well_defined, equivariant, injective, exact_in_middle, surjective }
    }

    fn require_exact(&self) -> Result<()> {
        let rep = self.exactness();
        if rep.is_exact() {
            Ok(())
        } else {
            Err(Error::Exactness(rep.describe_failure()))
        }
    }

    fn delta_unchecked(&self, c: &[BigInt]) -> Vec<BigInt> {
        let one = BigInt::one();
        let lift_sys = self.proj.hstack(self.c.relations.basis());
        let lifted = solve(&lift_sys, c).expect("B -> C is surjective");
        let b: Vec<BigInt> = lifted[..self.b.rank()].to_vec();
        let w = self.b.phi.minus_scalar(&one).mul_vec(&b);
        let pull_sys = self.inc.hstack(self.b.relations.basis());
        let pulled = solve(&pull_sys, &w).expect("(phi - 1)·lift lies in the image of A");
        let a: Vec<BigInt> = pulled[..self.a.rank()].to_vec();
        let rep = self.a.coboundary_lattice().reduce(&a);

        #[cfg(debug_assertions)]
        if self.a.rank() > 0 {
            // a second lift, shifted by the image of a generator of A
            let shift = self.inc.column(0);
            let b2: Vec<BigInt> = b.iter().zip(&shift).map(|(x, s)| x + s).collect();
            let w2 = self.b.phi.minus_scalar(&one).mul_vec(&b2);
            let a2 = solve(&pull_sys, &w2).expect("lift");
            debug_assert_eq!(self.a.coboundary_lattice().reduce(&a2[..self.a.rank()]), rep, "connecting map depends on the lift");
        }
        rep
    }

    /// Connecting map `H^0(C) → H^1(A)`; returns the canonical representative
    /// of the class in `Z^{rank A}` modulo `(phi_A - 1) Z + R_A`.
    pub fn connecting(&self, c: &[BigInt]) -> Result<Vec<BigInt>> {
        self.require_exact()?;
        if c.len() != self.c.rank() {
            return Err(Error::DimensionMismatch("element of C has the wrong length".into()));
        }
        if !self.c.contains_h0(c) {
            return Err(Error::NotInH0);
        }
        Ok(self.delta_unchecked(c))
    }

    /// The subgroup of `H^1(A)` generated by the connecting images of `H^0(C)`.
    pub fn image_of_connecting(&self) -> Result<FinAbGroup> {
        Ok(quotient_invariants(&self.connecting_image_lattice()?, &self.a.coboundary_lattice()).expect("contained"))
    }

    /// Whether the connecting map hits all of `H^1(A)`.
    pub fn connecting_is_surjective(&self) -> Result<bool> {
        Ok(self.connecting_image_lattice()?.is_full())
    }

    fn connecting_image_lattice(&self) -> Result<Sublattice> {
        self.require_exact()?;
        let images: Vec<Vec<BigInt>> = self.c.h0_lattice().basis_vectors().iter().map(|g| self.delta_unchecked(g)).collect();
        let span = Sublattice::span_columns(self.a.rank(), &images);
        Ok(span.join(&self.a.coboundary_lattice()).expect("same ambient"))
    }
}

/// Finite module with tame Galois action: inertia generator `sigma` and Frobenius `phi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TameModule {
    relations: Sublattice,
    sigma: Mat,
    phi: Mat,
    e: u64,
    q: BigInt,
}

/// Input schema for module presentations.
#[derive(Clone, Debug, PartialEq, Eq, serde::Deserialize, serde::Serialize)]
#[serde(deny_unknown_fields)]
pub struct RawModule {
    /// Generators of the relation lattice, one vector per entry.
    pub relations: Vec<Vec<i64>>,
    pub sigma: Vec<Vec<i64>>,
    pub phi: Vec<Vec<i64>>,
    pub q: u64,
    pub e: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
}

impl RawModule {
    pub fn to_module(&self) -> Result<TameModule> {
        let k = self.sigma.len();
        let square = |m: &Vec<Vec<i64>>, what: &str| {
            if m.len() != k || m.iter().any(|r| r.len() != k) {
                return Err(Error::InvalidModule(format!("{what} must be {k}x{k}")));
            }
            Ok(if k == 0 { Mat::zeros(0, 0) } else { Mat::from_rows(m) })
        };
        let sigma = square(&self.sigma, "sigma")?;
        let phi = square(&self.phi, "phi")?;
        if self.relations.iter().any(|r| r.len() != k) {
            return Err(Error::InvalidModule(format!("every relation must have length {k}")));
        }
        let cols: Vec<Vec<BigInt>> = self.relations.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        TameModule::new(Sublattice::span_columns(k, &cols), sigma, phi, self.e, self.q)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }
}

impl TameModule {
    pub fn new(relations: Sublattice, sigma: Mat, phi: Mat, e: u64, q: impl Into<BigInt>) -> Result<Self> {
        let q = q.into();
        check_relations(&relations)?;
        let k = relations.ambient_rank();
        if sigma.rows() != k || sigma.cols() != k || phi.rows() != k || phi.cols() != k {
            return Err(Error::InvalidModule(format!("sigma and phi must be {k}x{k}")));
        }
        if e == 0 {
            return Err(Error::InvalidModule("e must be positive".into()));
        }
        if !relations.is_stable_under(&sigma) || !relations.is_stable_under(&phi) {
            return Err(Error::InvalidModule("sigma or phi does not preserve the relations".into()));
        }
        if !endo_eq(&relations, &endo_pow(&relations, &sigma, e), &Mat::identity(k)) {
            return Err(Error::InvalidModule("sigma^e is not the identity".into()));
        }
        if !q.is_positive() {
            return Err(Error::InvalidModule("q must be positive".into()));
        }
        let q_red = u64::try_from(q.mod_floor(&BigInt::from(e))).expect("residue below e");
        if !endo_eq(&relations, &(&phi * &sigma), &(&endo_pow(&relations, &sigma, q_red) * &phi)) {
            return Err(Error::InvalidModule("phi sigma phi^-1 != sigma^q".into()));
        }
        if kernel_lattice_of(&relations, &phi) != relations {
            return Err(Error::InvalidModule("phi is not invertible on the module".into()));
        }
        let order = relations.index_in_ambient().expect("full rank");
        if !arith::gcd(&order, &q).is_one() {
            return Err(Error::InvalidModule("module order is not prime to q".into()));
        }
        let sigma = canonical_endo(&relations, &sigma);
        let phi = canonical_endo(&relations, &phi);
        Ok(TameModule { relations, sigma, phi, e, q })
    }

    /// An unramified module: `sigma = 1`.
    pub fn unramified(m: &FrobModule) -> Self {
        let k = m.rank();
        TameModule { relations: m.relations.clone(), sigma: Mat::identity(k), phi: m.phi.clone(), e: 1, q: m.q.clone() }
    }

    pub fn rank(&self) -> usize {
        self.relations.ambient_rank()
    }

    pub fn relations(&self) -> &Sublattice {
        &self.relations
    }

    pub fn sigma(&self) -> &Mat {
        &self.sigma
    }

    pub fn phi(&self) -> &Mat {
        &self.phi
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn group(&self) -> FinAbGroup {
        module_group(&self.relations)
    }

    pub fn order(&self) -> BigInt {
        self.relations.index_in_ambient().expect("full rank")
    }

    pub fn exponent(&self) -> BigInt {
        self.group().exponent()
    }

    /// The Frobenius part, forgetting inertia.
    pub fn frobenius_module(&self) -> FrobModule {
        FrobModule { relations: self.relations.clone(), phi: self.phi.clone(), q: self.q.clone() }
    }

    /// `M^sigma` with its Frobenius, presented in its own coordinates.
    pub fn inertia_invariants(&self) -> FrobModule {
        let k = kernel_lattice_of(&self.relations, &self.sigma.minus_scalar(&BigInt::one()));
        let (rel, maps) = restrict_to(&k, &self.relations, &[&self.phi]);
        FrobModule { relations: rel, phi: maps.into_iter().next().expect("one map"), q: self.q.clone() }
    }

    /// `M_sigma(-1)`: inertia coinvariants with Frobenius `q^{-1} phi`.
    pub fn twisted_coinvariants(&self) -> FrobModule {
        let rel = image_lattice_of(&self.relations, &self.sigma.minus_scalar(&BigInt::one()));
        let coinv = FrobModule { relations: rel.clone(), phi: canonical_endo(&rel, &self.phi), q: self.q.clone() };
        tate_twist(&coinv, -1).expect("q is prime to the module order")
    }
}

/// Tame cohomology of a [`TameModule`], by graded pieces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TameCohomology {
    /// `(#H^0, #H^1, #H^2)`.
    #[serde(serialize_with = "ser_sizes")]
    pub sizes: [BigInt; 3],
    pub h0_unr: FinAbGroup,
    pub h1_unr: FinAbGroup,
    pub h0_twist: FinAbGroup,
    pub h1_twist: FinAbGroup,
}

fn ser_sizes<S: serde::Serializer>(sizes: &[BigInt; 3], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(3))?;
    for x in sizes {
        match u64::try_from(x) {
            Ok(v) => seq.serialize_element(&v)?,
            Err(_) => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

pub fn tame_h(m: &TameModule) -> TameCohomology {
    let (h0_unr, h1_unr) = h0_h1(&m.inertia_invariants());
    let (h0_twist, h1_twist) = h0_h1(&m.twisted_coinvariants());
    let sizes = [h0_unr.order(), h1_unr.order() * h0_twist.order(), h1_twist.order()];
    TameCohomology { sizes, h0_unr, h1_unr, h0_twist, h1_twist }
}

/// `Hom(M, Z/n)(1)` together with the basis of the functional lattice.
fn dual_parts(m: &TameModule, n: u64) -> Result<(TameModule, Mat)> {
    let n_big = BigInt::from(n);
    let exponent = m.exponent();
    if !n_big.is_multiple_of(&exponent) {
        return Err(Error::ExponentMismatch { exponent: exponent.to_string(), n: n.to_string() });
    }
    let k = m.rank();
    // functionals f with fᵀ R ≡ 0 mod n
    let functionals = preimage_mod(&m.relations.basis().transpose(), &n_big);
    let p = functionals.basis().clone();
    let rel = Sublattice::span(&functionals.coordinates_matrix(&Mat::scalar(k, &n_big)).expect("nZ^k inside"));

    let inv = |f: &Mat| -> Result<Mat> {
        let sys = f.hstack(m.relations.basis());
        let x = solve_matrix(&sys, &Mat::identity(k))
            .ok_or_else(|| Error::InvalidModule("endomorphism is not invertible".into()))?;
        Ok(x.select_rows(0..k))
    };
    let sigma_dual = inv(&m.sigma)?.transpose();
    let phi_dual = inv(&m.phi)?.transpose().scale(&m.q);
    let transport = |g: &Mat| -> Result<Mat> {
        functionals
            .coordinates_matrix(&(g * &p))
            .ok_or_else(|| Error::InvalidModule("contragredient action leaves the functional lattice".into()))
    };
    let dual = TameModule::new(rel, transport(&sigma_dual)?, transport(&phi_dual)?, m.e, m.q.clone())?;
    Ok((dual, p))
}

/// `M' = Hom(M, μ_n)`: the contragredient action on `Hom(M, Z/n)`, twisted once.
pub fn dual_module(m: &TameModule, n: u64) -> Result<TameModule> {
    dual_parts(m, n).map(|(d, _)| d)
}

/// Whether the evaluation pairing `M × M' → Z/n` is perfect (both radicals trivial).
pub fn dual_pairing_is_perfect(m: &TameModule, n: u64) -> Result<bool> {
    let (dual, p) = dual_parts(m, n)?;
    let n_big = BigInt::from(n);
    let left = preimage_mod(&p.transpose(), &n_big);
    let right = preimage_mod(&p, &n_big);
    Ok(left == m.relations && right == dual.relations)
}

/// Sizes entering the duality counting identities, with the verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountingReport {
    pub h0: u64,
    pub h1: u64,
    pub h2: u64,
    pub h0_dual: u64,
    pub h1_unr: u64,
    pub h1_unr_dual: u64,
    /// `#H0 · #H2 = #H1`.
    pub euler: bool,
    /// `#H2(A) = #H0(A')`.
    pub duality: bool,
    /// `#H1(A) = #H1_unr(A^I) · #H1_unr(A'^I)`.
    pub unramified_split: bool,
}

impl CountingReport {
    pub fn passed(&self) -> bool {
        self.euler && self.duality && self.unramified_split
    }
}

pub fn counting_checks(m: &TameModule, n: u64) -> Result<CountingReport> {
    let n_big = BigInt::from(n);
    if !arith::gcd(&n_big, &m.q).is_one() {
        return Err(Error::Precondition(format!("gcd(n = {n}, q = {}) != 1", m.q)));
    }
    if n.gcd(&m.e) != 1 {
        return Err(Error::Precondition(format!("gcd(n = {n}, e = {}) != 1", m.e)));
    }
    let dual = dual_module(m, n)?;
    let a = tame_h(m);
    let a_dual = tame_h(&dual);
    let small = |x: &BigInt| u64::try_from(x).map_err(|_| Error::Precondition("cohomology too large to report".into()));
    let h0 = small(&a.sizes[0])?;
    let h1 = small(&a.sizes[1])?;
    let h2 = small(&a.sizes[2])?;
    let h0_dual = small(&a_dual.sizes[0])?;
    let h1_unr = small(&a.h1_unr.order())?;
    let h1_unr_dual = small(&a_dual.h1_unr.order())?;
    Ok(CountingReport {
        h0,
        h1,
        h2,
        h0_dual,
        h1_unr,
        h1_unr_dual,
        euler: h0 * h2 == h1,
        duality: h2 == h0_dual,
        unramified_split: h1 == h1_unr * h1_unr_dual,
    })
}
