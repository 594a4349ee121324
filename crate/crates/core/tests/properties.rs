use affsch::cyclo::CycScalar;
use affsch::loopalg::{Basis, LoopVector, TwistedLoopAlgebra};
use affsch::rootsys::{build_root_system, Coweight, FiniteRootSystem};
use affsch::schubert::{k_vector, strata_below};
use affsch::twist::{AffineRootSigma, TwistedDatum};
use proptest::prelude::*;
use proptest::sample::select;

const LABELS: [&str; 10] = ["A1", "A3", "B3", "C3", "D4", "G2", "F4", "E6", "B2", "A4"];
const TWISTED: [&str; 6] = ["A2", "2A2", "2A3", "2A4", "2D4", "3D4"];

fn reflect_root(sys: &FiniteRootSystem, g: &[i64], i: usize) -> Vec<i64> {
    let p: i64 = (0..sys.rank()).map(|j| sys.cartan()[i][j] * g[j]).sum();
    let mut out = g.to_vec();
    out[i] -= p;
    out
}

fn small_coweight(rank: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, rank)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn weyl_word_preserves_pairings(
        label in select(LABELS.to_vec()),
        seed in any::<u64>(),
        len in 0usize..40,
    ) {
        let sys = build_root_system(label).unwrap();
        let r = sys.rank();
        let nu = Coweight((0..r).map(|i| ((seed >> (4 * i)) % 7) as i64 - 3).collect());
        let word: Vec<usize> = (0..len).map(|j| ((seed.rotate_left(j as u32 * 5)) % r as u64) as usize).collect();
        let mut w_nu = nu.clone();
        let mut w_roots: Vec<Vec<i64>> = sys.roots().to_vec();
        for &i in &word {
            w_nu = sys.simple_reflect(&w_nu, i);
            w_roots = w_roots.iter().map(|g| reflect_root(&sys, g, i)).collect();
        }
        for (a, img) in w_roots.iter().enumerate() {
            let b = sys.root_index(img).expect("the root set is W-stable");
            prop_assert_eq!(sys.pairing(&w_nu, b), sys.pairing(&nu, a));
            prop_assert_eq!(sys.norm(b), sys.norm(a));
        }
        prop_assert_eq!(sys.dominant_rep(&w_nu), sys.dominant_rep(&nu));
        prop_assert!(sys.is_dominant(&sys.dominant_rep(&nu)));
    }

    #[test]
    fn dominance_is_a_partial_order(
        label in select(vec!["A2", "B2", "G2", "C3"]),
        a in small_coweight(3), b in small_coweight(3), c in small_coweight(3),
    ) {
        let sys = build_root_system(label).unwrap();
        let r = sys.rank();
        let [x, y, z] = [a, b, c].map(|v| sys.dominant_rep(&Coweight(v[..r].to_vec())));
        prop_assert!(sys.dominance_leq(&x, &x));
        if sys.dominance_leq(&x, &y) && sys.dominance_leq(&y, &x) {
            prop_assert_eq!(&x, &y);
        }
        if sys.dominance_leq(&x, &y) && sys.dominance_leq(&y, &z) {
            prop_assert!(sys.dominance_leq(&x, &z));
        }
        if sys.dominance_leq(&x, &y) {
            prop_assert!(sys.two_rho_pairing(&x) <= sys.two_rho_pairing(&y));
        }
    }

    #[test]
    fn relative_roots_round_trip(label in select(TWISTED.to_vec()), root in 0usize..64, level in -12i64..=12) {
        let t = TwistedDatum::parse(label).unwrap();
        let root = root % t.sigma().num_roots();
        let a = AffineRootSigma { root, level };
        let rel = t.sigma_affine_to_relative(a);
        prop_assert_eq!(t.relative_to_sigma_affine(&rel).unwrap(), a);
        let n = t.u_degree(&rel).unwrap();
        prop_assert!(t.relative_roots_at_degree(n).iter().any(|(b, _)| *b == a));
    }

    #[test]
    fn k_symmetry_on_random_pairs(label in select(vec!["A2", "B2", "C2", "G2", "A3"]), pick in any::<u64>()) {
        let sys = build_root_system(label).unwrap();
        let w = sys.two_rho().to_vec();
        let mu = Coweight(w.iter().enumerate().map(|(i, _)| ((pick >> (3 * i)) % 4) as i64).collect());
        let strata = strata_below(&sys, &mu).unwrap();
        let lambda = &strata[(pick % strata.len() as u64) as usize].lambda;
        let k = k_vector(&sys, lambda, &mu).unwrap();
        for a in 0..sys.num_roots() {
            prop_assert_eq!(k.0[a], k.0[sys.negate(a)] + sys.pairing(lambda, a));
        }
    }
}

fn basis_strategy(dim_x: usize, rank: usize) -> impl Strategy<Value = Basis> {
    prop_oneof![(0..dim_x).prop_map(Basis::X), (0..rank).prop_map(Basis::H)]
}

fn vector_strategy(dim_x: usize, rank: usize) -> impl Strategy<Value = LoopVector> {
    prop::collection::vec((basis_strategy(dim_x, rank), -3i64..=3, -3i64..=3, -2i64..=2), 0..5).prop_map(|terms| {
        let mut v = LoopVector::zero();
        for (b, e, a, z) in terms {
            v.add_term(b, e, CycScalar::int(a) + CycScalar::omega() * CycScalar::int(z));
        }
        v
    })
}

fn triality() -> &'static TwistedLoopAlgebra {
    use std::sync::OnceLock;
    static T: OnceLock<TwistedLoopAlgebra> = OnceLock::new();
    T.get_or_init(|| TwistedLoopAlgebra::parse("3D4").unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn jacobi_on_random_triples(a in basis_strategy(24, 4), b in basis_strategy(24, 4), c in basis_strategy(24, 4)) {
        let alg = triality().algebra();
        prop_assert!(alg.jacobiator(a, b, c).is_empty());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn sigma_is_an_automorphism_of_order_e(x in vector_strategy(24, 4), y in vector_strategy(24, 4)) {
        let t = triality();
        let alg = t.algebra();
        let lhs = t.sigma_action(&alg.bracket(&x, &y));
        let rhs = alg.bracket(&t.sigma_action(&x), &t.sigma_action(&y));
        prop_assert_eq!(lhs, rhs);
        let cube = t.sigma_action(&t.sigma_action(&t.sigma_action(&x)));
        prop_assert_eq!(cube, x);
    }

    #[test]
    fn adjoint_exponential_is_an_automorphism(
        g in 0usize..24, n in -2i64..=2,
        y in vector_strategy(24, 4), z in vector_strategy(24, 4),
    ) {
        let alg = triality().algebra();
        let x = LoopVector::unit(Basis::X(g), n);
        let ad = |v: &LoopVector| alg.ad_exp(&x, v).unwrap();
        prop_assert_eq!(alg.ad_exp(&-x.clone(), &ad(&y)).unwrap(), y.clone());
        prop_assert_eq!(ad(&alg.bracket(&y, &z)), alg.bracket(&ad(&y), &ad(&z)));
    }

    #[test]
    fn e_a_vectors_are_invariant(label in select(TWISTED.to_vec()), root in 0usize..64, level in -8i64..=8) {
        let t = TwistedLoopAlgebra::parse(label).unwrap();
        let a = AffineRootSigma { root: root % t.datum().sigma().num_roots(), level };
        let v = t.e_a(a).unwrap();
        prop_assert!(!v.is_zero());
        prop_assert_eq!(t.sigma_action(&v), v);
    }
}
