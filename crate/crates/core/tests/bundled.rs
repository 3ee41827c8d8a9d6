use std::path::PathBuf;

use num_bigint::BigInt;

use bdtorus::oracle::{cross_check, max_enumerable_level, DEFAULT_CAP};
use bdtorus::{packet_group, packet_group_level, validate, CoverDatum, Execution, RawConfig, SharpLattices, StabilizationPolicy};

fn load(name: &str) -> CoverDatum {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name);
    let text = std::fs::read_to_string(&path).unwrap();
    validate(&RawConfig::from_json(&text).unwrap()).unwrap()
}

fn factors(xs: &[u64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

// (file, packet group, Y/Y^#, Y^{Γ#}/Y^#); every value was confirmed against the
// enumeration oracle at all levels with N^r ≤ 10^6
type Expected = (&'static str, &'static [u64], &'static [u64], &'static [u64]);

const EXPECTED: [Expected; 9] = [
    ("split.json", &[], &[2, 4, 4], &[]),
    ("swap.json", &[], &[2, 2], &[2]),
    ("ramified.json", &[], &[3], &[3]),
    ("sign.json", &[2], &[2, 2], &[2]),
    ("rotation.json", &[2], &[2, 2], &[2, 2]),
    ("swap_q5.json", &[], &[4, 4], &[4]),
    ("sign_ramified.json", &[], &[3, 3], &[3]),
    ("cycle.json", &[], &[3, 3, 3], &[3, 3]),
    ("rotation_ramified.json", &[], &[4, 4], &[4, 4]),
];

#[test]
fn bundled_packet_groups() {
    for (file, s, sharp_q, fixed_q) in EXPECTED {
        let d = load(file);
        let lat = SharpLattices::compute(&d);
        assert_eq!(lat.sharp_quotient().factors(), factors(sharp_q).as_slice(), "{file}: Y/Y#");
        assert_eq!(lat.fixed_sharp_quotient().factors(), factors(fixed_q).as_slice(), "{file}: YG#/Y#");
        let pg = packet_group(&d, &StabilizationPolicy::default(), Execution::default()).unwrap();
        assert_eq!(pg.group.factors(), factors(s).as_slice(), "{file}: S");
    }
}

#[test]
fn swap_levels_alternate() {
    let d = load("swap.json");
    let got: Vec<String> = (1..=4).map(|m| packet_group_level(&d, m).unwrap().to_string()).collect();
    assert_eq!(got, ["Z/2", "0", "Z/2", "0"]);
}

#[test]
fn ramified_levels() {
    let d = load("ramified.json");
    for m in [1, 2, 4] {
        assert!(packet_group_level(&d, m).unwrap().is_trivial());
    }
}

#[test]
fn bundled_agree_with_oracle() {
    for (file, ..) in EXPECTED {
        let d = load(file);
        let top = max_enumerable_level(d.q(), d.rank(), DEFAULT_CAP).unwrap_or(0).min(4);
        let levels: Vec<u64> = (1..=top).collect();
        let report = cross_check(&d, &levels, DEFAULT_CAP, Execution::Parallel).unwrap();
        assert!(report.passed(), "{file}: {report:?}");
    }
}
