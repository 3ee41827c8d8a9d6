use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use bdtorus::cohomology::{dual_pairing_is_perfect, h0_h1, tate_twist, FrobModule};
use bdtorus::linear::{
    column_hermite, lattice_meet_join, preimage_mod, quotient_invariants, smith, Index, Mat, Sublattice,
};
use bdtorus::random::{random_datum, random_tame_module, random_unimodular, rng, GcdMode};
use bdtorus::residue::level_compatible;
use bdtorus::symbol::{hilbert, TameField};
use bdtorus::{packet_group, Execution, SharpLattices, StabilizationPolicy, ValidateOptions};

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec(-9i64..=9, rows * cols).prop_map(move |v| {
        let rs: Vec<Vec<i64>> = v.chunks(cols.max(1)).map(|c| c.to_vec()).collect();
        if cols == 0 {
            Mat::zeros(rows, 0)
        } else {
            Mat::from_rows(&rs)
        }
    })
}

fn shaped_matrix() -> impl Strategy<Value = Mat> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| small_matrix(r, c))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, ..ProptestConfig::default() })]

    #[test]
    fn smith_is_a_diagonalization(m in shaped_matrix()) {
        let s = smith(&m);
        let d = &(&s.u * &m) * &s.v;
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let want = if i == j && i < s.diagonal.len() { s.diagonal[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(&d[(i, j)], &want);
            }
        }
        prop_assert!(s.diagonal.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        prop_assert!(s.u.det().abs().is_one() && s.v.det().abs().is_one());
    }

    #[test]
    fn hermite_basis_spans_the_same_lattice(m in shaped_matrix()) {
        let e = column_hermite(&m, true);
        let l = Sublattice::span(&m);
        for c in m.columns() {
            prop_assert!(l.contains(&c));
        }
        prop_assert_eq!(Sublattice::span(&e.basis), l);
    }

    #[test]
    fn index_is_multiplicative(a in small_matrix(3, 3), b in small_matrix(3, 3)) {
        let la = Sublattice::span(&a);
        let lb = Sublattice::span(&b);
        prop_assume!(la.is_full_rank() && lb.is_full_rank());
        let (meet, join, idx) = lattice_meet_join(&la, &lb).unwrap();
        let full = Sublattice::full(3);
        let ia = quotient_invariants(&full, &la).unwrap().order();
        let ib = quotient_invariants(&full, &lb).unwrap().order();
        let im = quotient_invariants(&full, &meet).unwrap().order();
        let ij = quotient_invariants(&full, &join).unwrap().order();
        prop_assert_eq!(&ia * &ib, &im * &ij);
        prop_assert_eq!(idx, Index::Finite(&im / &ij));
        prop_assert!(join.contains_lattice(&la) && la.contains_lattice(&meet));
    }

    #[test]
    fn preimage_mod_has_expected_index(m in small_matrix(2, 3), n in 1i64..=12) {
        let n = BigInt::from(n);
        let p = preimage_mod(&m, &n);
        for c in p.basis_vectors() {
            prop_assert!(m.mul_vec(&c).iter().all(|x| x.is_multiple_of(&n)));
        }
        // solutions mod n counted by brute force
        let nn = i64::try_from(&n).unwrap();
        let mut count = 0i64;
        for a in 0..nn { for b in 0..nn { for c in 0..nn {
            let v = [BigInt::from(a), BigInt::from(b), BigInt::from(c)];
            if m.mul_vec(&v).iter().all(|x| x.is_multiple_of(&n)) { count += 1; }
        }}}
        let idx = quotient_invariants(&Sublattice::full(3), &p).unwrap().order();
        prop_assert_eq!(idx * BigInt::from(count), BigInt::from(nn.pow(3)));
    }

    #[test]
    fn kernel_and_cokernel_have_equal_size(seed in any::<u64>()) {
        let (m, _) = random_tame_module(&mut rng(seed), 500);
        let f = m.frobenius_module();
        let (h0, h1) = h0_h1(&f);
        prop_assert_eq!(h0.order(), h1.order());
    }

    #[test]
    fn twists_compose(seed in any::<u64>(), a in -4i64..=4, b in -4i64..=4) {
        let (m, _) = random_tame_module(&mut rng(seed), 500);
        let f = m.frobenius_module();
        let lhs = tate_twist(&tate_twist(&f, a).unwrap(), b).unwrap();
        let rhs = tate_twist(&f, a + b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn duals_are_perfect(seed in any::<u64>()) {
        let (m, n) = random_tame_module(&mut rng(seed), 300);
        prop_assert!(dual_pairing_is_perfect(&m, n).unwrap());
    }

    #[test]
    fn hilbert_is_bilinear_and_alternating(
        qi in 0usize..5, v1 in -3i64..=3, u1 in 0i64..40, v2 in -3i64..=3, u2 in 0i64..40, v3 in -3i64..=3, u3 in 0i64..40
    ) {
        let q = [3u64, 5, 7, 9, 13][qi];
        for n in (1..q).filter(|n| (q - 1).is_multiple_of(*n)) {
            let f = TameField::new(q, n).unwrap();
            let (a, a2, b) = (f.elt(v1, u1), f.elt(v2, u2), f.elt(v3, u3));
            prop_assert_eq!(hilbert(&f, f.mul(a, a2), b), (hilbert(&f, a, b) + hilbert(&f, a2, b)) % n);
            prop_assert_eq!((hilbert(&f, a, b) + hilbert(&f, b, a)) % n, 0);
            prop_assert_eq!(hilbert(&f, a, f.neg(a)), 0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn packet_group_is_n_torsion_and_basis_free(seed in any::<u64>()) {
        let mut g = rng(seed);
        let d = random_datum(&mut g, 3, GcdMode::Coprime);
        let policy = StabilizationPolicy::default();
        let s = packet_group(&d, &policy, Execution::Sequential).unwrap().group;
        prop_assert!(s.is_killed_by(&BigInt::from(d.n())));
        let (p, _) = random_unimodular(&mut g, d.rank(), 6);
        let moved = d.base_change(&p, &ValidateOptions::default()).unwrap();
        let t = packet_group(&moved, &policy, Execution::Sequential).unwrap().group;
        prop_assert_eq!(s, t);
    }

    #[test]
    fn levels_embed_compatibly(seed in any::<u64>(), m in 1u64..=3, k in 2u64..=3) {
        let d = random_datum(&mut rng(seed), 3, GcdMode::Coprime);
        let lat = SharpLattices::compute(&d);
        for sub in [&lat.fixed_sharp, &lat.sharp] {
            prop_assert!(level_compatible(&d, sub, m, m * k).unwrap());
        }
    }

    #[test]
    fn frobenius_modules_from_diagonals(orders in prop::collection::vec(2i64..=9, 1..=3), unit in 1i64..=50) {
        let k = orders.len();
        let modulus: i64 = orders.iter().product();
        prop_assume!(unit.gcd(&modulus) == 1);
        let phi = Mat::scalar(k, &BigInt::from(unit));
        let q = (1..).map(|x| x * modulus + 1).find(|&q| bdtorus::linear::arith::prime_power(q as u64).is_some()).unwrap();
        let m = FrobModule::from_diagonal(&orders, phi, q).unwrap();
        let (h0, _) = h0_h1(&m);
        // ker(u - 1) on Z/d is Z/gcd(u - 1, d)
        let want: BigInt = orders.iter().map(|&d| BigInt::from((unit - 1).gcd(&d))).product();
        prop_assert_eq!(h0.order(), want);
    }
}
