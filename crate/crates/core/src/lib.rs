//! Packet groups of Brylinski–Deligne covers of tori over non-archimedean
//! local fields, computed from lattice and Galois data.
//!
//! A [`CoverDatum`] fixes the cocharacter lattice `Y = Z^r`, the Galois action
//! through finitely many generators, the residue field size `q`, the cover
//! degree `n` and the invariant quadratic form. From it the crate computes the
//! annihilator lattices `Y^#` and `Y^{Γ#}` ([`sharp`]), residue-level point
//! groups and the packet group ([`residue`]), Frobenius and tame cohomology of
//! finite modules ([`cohomology`]), and tame Hilbert symbols ([`symbol`]).
//! [`oracle`] recomputes the residue-level objects by enumeration.
//!
//! ```
//! use bdtorus::{packet_group, validate, Execution, RawConfig, StabilizationPolicy};
//!
//! let raw = RawConfig::from_json(r#"{
//!     "rank": 1, "inertia_gens": [[[-1]]], "frobenius": [[1]],
//!     "q": 7, "n": 3, "Q_upper": [[1]]
//! }"#).unwrap();
//! let d = validate(&raw).unwrap();
//! let s = packet_group(&d, &StabilizationPolicy::default(), Execution::default()).unwrap();
//! assert!(s.group.is_trivial());
//! ```

#![allow(clippy::needless_range_loop)]

pub mod cohomology;
pub mod datum;
pub mod error;
pub mod exec;
pub mod linear;
pub mod oracle;
pub mod random;
pub mod residue;
pub mod sharp;
pub mod symbol;

pub use cohomology::{
    counting_checks, dual_module, h0_h1, tame_h, tate_twist, CountingReport, FrobModule, RawModule,
    ShortExactSequence, TameCohomology, TameModule,
};
pub use datum::{validate, validate_with, CoverDatum, RawConfig, ValidateOptions};
pub use error::{Error, ErrorClass, Result};
pub use exec::Execution;
pub use linear::{FinAbGroup, Mat, Sublattice};
pub use residue::{
    inertia_sequence, invariant_points, iota_image, packet_group, packet_group_level, LevelGroup, PacketGroup,
    StabilizationPolicy,
};
pub use sharp::{radical_of_induced_form, SharpLattices};
pub use symbol::{commutator, hilbert, split_center_image, TameElt, TameField};
