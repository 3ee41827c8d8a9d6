//! Residue-level point groups `(Y' ⊗ μ_N)^Γ` with `N = q^m - 1`, their images
//! in `Y ⊗ μ_N`, and the packet group with a level-stabilization policy.
//!
//! A subgroup of `(Z/N)^k` is stored as the lattice of its lifts, which always
//! contains `N·Z^k`. Inertia acts on `μ_N` trivially and Frobenius by `x ↦ x^q`,
//! so in coordinates the invariant points are cut out by `A'_g - 1` for inertia
//! generators and `q·A'_φ - 1` for Frobenius.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow};
use serde::Serialize;

use crate::cohomology::{FrobModule, ShortExactSequence};
use crate::datum::CoverDatum;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::linear::{preimage_mod, quotient_invariants, FinAbGroup, Mat, Sublattice};
use crate::sharp::SharpLattices;

/// `N = q^m - 1`.
pub fn level_modulus(q: u64, m: u64) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::InvalidLevel);
    }
    let m = u32::try_from(m).map_err(|_| Error::InvalidLevel)?;
    Ok(Pow::pow(BigInt::from(q), m) - 1)
}

/// A subgroup `lattice / N·Z^k` of `(Z/N)^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelGroup {
    pub level: u64,
    pub modulus: BigInt,
    pub lattice: Sublattice,
}

impl LevelGroup {
    fn new(level: u64, modulus: BigInt, lattice: Sublattice) -> Self {
        debug_assert!(lattice.contains_lattice(&Sublattice::scaled_full(lattice.ambient_rank(), &modulus)));
        LevelGroup { level, modulus, lattice }
    }

    pub fn ambient_rank(&self) -> usize {
        self.lattice.ambient_rank()
    }

    fn torsion_lattice(&self) -> Sublattice {
        Sublattice::scaled_full(self.ambient_rank(), &self.modulus)
    }

    pub fn group(&self) -> FinAbGroup {
        quotient_invariants(&self.lattice, &self.torsion_lattice()).expect("N·Z^k lies inside")
    }

    pub fn order(&self) -> BigInt {
        let k = u32::try_from(self.ambient_rank()).expect("small rank");
        Pow::pow(&self.modulus, k) / self.lattice.index_in_ambient().expect("full rank")
    }

    /// Membership of a residue vector (any integer lift).
    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.lattice.contains(x)
    }

    /// Whether `self ⊆ other` as subgroups of the same `(Z/N)^k`.
    pub fn is_subgroup_of(&self, other: &LevelGroup) -> bool {
        self.modulus == other.modulus && other.lattice.contains_lattice(&self.lattice)
    }
}

/// Action of the generators on `sub`, in `sub`'s own basis: inertia then Frobenius.
pub fn restriction(d: &CoverDatum, sub: &Sublattice) -> Result<(Vec<Mat>, Mat)> {
    if sub.ambient_rank() != d.rank() {
        return Err(Error::AmbientMismatch { left: sub.ambient_rank(), right: d.rank() });
    }
    let restrict = |g: &Mat| sub.coordinates_matrix(&(g * sub.basis())).ok_or(Error::NotGaloisStable);
    let inertia = d.inertia_gens().iter().map(restrict).collect::<Result<Vec<_>>>()?;
    let frob = restrict(d.frobenius())?;
    Ok((inertia, frob))
}

fn fixed_rows(inertia: &[Mat], frob: Option<(&Mat, &BigInt)>, k: usize) -> Mat {
    let one = BigInt::one();
    let mut rows = Mat::zeros(0, k);
    for g in inertia {
        rows = rows.vstack(&g.minus_scalar(&one));
    }
    if let Some((f, q)) = frob {
        rows = rows.vstack(&f.scale(q).minus_scalar(&one));
    }
    rows
}

/// `(sub ⊗ μ_N)^Γ` in `sub`'s coordinates.
pub fn invariant_points(d: &CoverDatum, sub: &Sublattice, m: u64) -> Result<LevelGroup> {
    let modulus = level_modulus(d.q(), m)?;
    let (inertia, frob) = restriction(d, sub)?;
    let q = BigInt::from(d.q());
    let rows = fixed_rows(&inertia, Some((&frob, &q)), sub.rank());
    Ok(LevelGroup::new(m, modulus.clone(), preimage_mod(&rows, &modulus)))
}

/// Image of `(sub ⊗ μ_N)^Γ` in `(Y ⊗ μ_N)` under the inclusion `sub ⊆ Y`.
pub fn iota_image(d: &CoverDatum, sub: &Sublattice, m: u64) -> Result<LevelGroup> {
    let inv = invariant_points(d, sub, m)?;
    Ok(push_forward(sub, &inv, d.rank()))
}

fn push_forward(sub: &Sublattice, inv: &LevelGroup, r: usize) -> LevelGroup {
    let gens = (sub.basis() * inv.lattice.basis()).hstack(&Mat::scalar(r, &inv.modulus));
    LevelGroup::new(inv.level, inv.modulus.clone(), Sublattice::span(&gens))
}

/// Packet group at a single level: `ι(Y^{Γ#} ⊗ μ_N)^Γ / ι(Y^# ⊗ μ_N)^Γ`.
pub fn packet_group_level(d: &CoverDatum, m: u64) -> Result<FinAbGroup> {
    packet_group_level_with(d, &SharpLattices::compute(d), m)
}

pub fn packet_group_level_with(d: &CoverDatum, lattices: &SharpLattices, m: u64) -> Result<FinAbGroup> {
    let top = iota_image(d, &lattices.fixed_sharp, m)?;
    let bottom = iota_image(d, &lattices.sharp, m)?;
    if !bottom.is_subgroup_of(&top) {
        return Err(Error::ContainmentViolation(format!("image of Y^# is not inside image of Y^(Γ#) at level {m}")));
    }
    let group = quotient_invariants(&top.lattice, &bottom.lattice)?;
    let n = BigInt::from(d.n());
    if let Some(bad) = group.factors().iter().find(|f| !n.is_multiple_of(f)) {
        return Err(Error::NTorsionViolation { factor: bad.to_string(), n: d.n() });
    }
    Ok(group)
}

/// How levels are scanned when computing the packet group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StabilizationPolicy {
    /// First level; defaults to the exponent of the Galois image.
    pub start_level: Option<u64>,
    /// Number of consecutive doubled levels that must agree.
    pub stable_repeats: usize,
    /// Last level tried; defaults to `64 · start_level`.
    pub max_level: Option<u64>,
}

impl Default for StabilizationPolicy {
    fn default() -> Self {
        StabilizationPolicy { start_level: None, stable_repeats: 3, max_level: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelRecord {
    pub level: u64,
    pub group: FinAbGroup,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PacketGroup {
    pub group: FinAbGroup,
    /// Every level computed, in increasing order.
    pub trace: Vec<LevelRecord>,
}

impl PacketGroup {
    pub fn levels_used(&self) -> usize {
        self.trace.len()
    }
}

fn format_trace(trace: &[LevelRecord]) -> String {
    let parts: Vec<String> = trace.iter().map(|r| format!("m={}: {}", r.level, r.group)).collect();
    parts.join(", ")
}

/// Packet group, scanning levels `m₀, 2m₀, 4m₀, …` until `stable_repeats`
/// consecutive levels agree.
pub fn packet_group(d: &CoverDatum, policy: &StabilizationPolicy, exec: Execution) -> Result<PacketGroup> {
    let start = policy.start_level.unwrap_or_else(|| d.group_exponent());
    if start == 0 {
        return Err(Error::InvalidLevel);
    }
    let max_level = policy.max_level.unwrap_or(start.saturating_mul(64));
    let repeats = policy.stable_repeats.max(1);
    let lattices = SharpLattices::compute(d);

    if lattices.fixed_sharp == lattices.sharp {
        // both images agree at every level
        let level = start;
        if level > max_level {
            return Err(Error::NotStabilized { max_level, trace: String::new() });
        }
        let group = FinAbGroup::trivial();
        return Ok(PacketGroup { trace: vec![LevelRecord { level, group: group.clone() }], group });
    }

    let mut levels = Vec::new();
    let mut m = start;
    while m <= max_level {
        levels.push(m);
        match m.checked_mul(2) {
            Some(next) => m = next,
            None => break,
        }
    }

    let mut trace: Vec<LevelRecord> = Vec::new();
    let first = repeats.min(levels.len());
    let batch = exec.map(&levels[..first], |&m| packet_group_level_with(d, &lattices, m));
    for (level, group) in levels[..first].iter().zip(batch) {
        trace.push(LevelRecord { level: *level, group: group? });
    }
    let mut next = first;
    loop {
        if let Some(group) = stable_value(&trace, repeats) {
            return Ok(PacketGroup { group, trace });
        }
        let Some(&level) = levels.get(next) else {
            return Err(Error::NotStabilized { max_level, trace: format_trace(&trace) });
        };
        trace.push(LevelRecord { level, group: packet_group_level_with(d, &lattices, level)? });
        next += 1;
    }
}

fn stable_value(trace: &[LevelRecord], repeats: usize) -> Option<FinAbGroup> {
    if trace.len() < repeats {
        return None;
    }
    let tail = &trace[trace.len() - repeats..];
    tail.iter().all(|r| r.group == tail[0].group).then(|| tail[0].group.clone())
}

/// Checks that the level-`m` invariants are the `μ_{q^m-1}`-part of the level-`m2`
/// invariants, under `x ↦ ((q^{m2} - 1)/(q^m - 1))·x`.
pub fn level_compatible(d: &CoverDatum, sub: &Sublattice, m: u64, m2: u64) -> Result<bool> {
    if m == 0 || !m2.is_multiple_of(m) {
        return Err(Error::InvalidLevel);
    }
    let small = invariant_points(d, sub, m)?;
    let big = invariant_points(d, sub, m2)?;
    let c = &big.modulus / &small.modulus;
    let k = sub.rank();
    let embedded = Sublattice::span(&small.lattice.basis().scale(&c).hstack(&Mat::scalar(k, &big.modulus)));
    let torsion_part = big.lattice.meet(&Sublattice::scaled_full(k, &c))?;
    Ok(embedded == torsion_part)
}

/// The finite-level model of
/// `0 → (Y/Y^#)^I(1) → (Y^# ⊗ μ)^I → (Y ⊗ μ)^I → 0` as Frobenius modules.
///
/// With `M = n·N`, the middle term is the subgroup of `Y^# ⊗ μ_M` mapping into
/// `Y ⊗ μ_N`, the right map is `x ↦ Yb·x / n` for the basis `Yb` of `Y^#`, and the
/// left term is its kernel.
pub fn inertia_sequence(d: &CoverDatum, m: u64) -> Result<ShortExactSequence> {
    let n = BigInt::from(d.n());
    let big_n = level_modulus(d.q(), m)?;
    let big_m = &big_n * &n;
    let q = BigInt::from(d.q());
    let r = d.rank();
    let sharp = SharpLattices::compute(d).sharp;
    let yb = sharp.basis().clone();

    let (inertia_sharp, frob_sharp) = restriction(d, &sharp)?;
    let fixed_sharp = preimage_mod(&fixed_rows(&inertia_sharp, None, r), &big_m);
    let lattice_b = preimage_mod(&yb, &n).meet(&fixed_sharp)?;
    let lattice_a = preimage_mod(&yb, &big_m).meet(&fixed_sharp)?;
    let fixed_y = preimage_mod(&fixed_rows(d.inertia_gens(), None, r), &big_n);

    let frob_twisted = frob_sharp.scale(&q);
    let module = |lattice: &Sublattice, modulus: &BigInt, phi: &Mat| -> Result<FrobModule> {
        let rel = lattice.coordinates_matrix(&Mat::scalar(r, modulus)).expect("torsion lies inside");
        let phi = lattice
            .coordinates_matrix(&(phi * lattice.basis()))
            .ok_or_else(|| Error::ContainmentViolation("Frobenius leaves an invariant lattice".into()))?;
        FrobModule::new(Sublattice::span(&rel), phi, d.q())
    };
    let a = module(&lattice_a, &big_m, &frob_twisted)?;
    let b = module(&lattice_b, &big_m, &frob_twisted)?;
    let c = module(&fixed_y, &big_n, &d.frobenius().scale(&q))?;

    let inc = lattice_b
        .coordinates_matrix(lattice_a.basis())
        .ok_or_else(|| Error::ContainmentViolation("kernel term is not inside the middle term".into()))?;
    let pushed = &yb * lattice_b.basis();
    let divided = Mat::from_columns(
        r,
        &pushed
            .columns()
            .into_iter()
            .map(|c| c.into_iter().map(|x| {
                debug_assert!(x.is_multiple_of(&n));
                x / &n
            }).collect())
            .collect::<Vec<_>>(),
    );
    let proj = fixed_y
        .coordinates_matrix(&divided)
        .ok_or_else(|| Error::ContainmentViolation("projection leaves the inertia invariants".into()))?;
    ShortExactSequence::new(a, b, c, inc, proj)
}
