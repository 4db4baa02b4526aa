use num_bigint::{BigInt, Sign};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hrhlab::bsato::{alpha_tilde_int, bp_reduced_roots, roots_from_spectrum, tuple_ts_roots, RootSet};
use hrhlab::cli::parse;
use hrhlab::cli::verify::random_command;
use hrhlab::determinantal::{det_report, spec_grid};
use hrhlab::exactnum::{qbinomial, Extended, LaurentPoly, Rational, RationalMultiset};
use hrhlab::families::{cone_hrh, toric_hrh, HodgeDiamond, ToricCone};
use hrhlab::oracle::{bp_spectrum_brute_force, qbinomial_pascal};
use hrhlab::spectrum::{
    bp_spectrum, check_duality, hrh_from_milnor, hrh_isolated_hypersurface, milnor_s, sp_min_int, BpSpec,
    SpectrumData,
};

fn small_bp() -> impl Strategy<Value = BpSpec> {
    prop::collection::vec(2u32..=9, 1..=5)
        .prop_filter("mu <= 2000", |e| e.iter().map(|&a| (a - 1) as u64).product::<u64>() <= 2_000)
        .prop_map(|e| BpSpec::new(e).unwrap())
}

fn big_int(bits: usize) -> impl Strategy<Value = BigInt> {
    (any::<bool>(), prop::collection::vec(any::<u32>(), 1..=bits / 32))
        .prop_map(|(neg, digits)| BigInt::new(if neg { Sign::Minus } else { Sign::Plus }, digits))
}

fn binomial(a: i64, b: i64) -> BigInt {
    (0..b).fold(BigInt::from(1), |acc, i| acc * BigInt::from(a - i) / BigInt::from(i + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn qbinomial_laws(a in 0i64..=12, b in 0i64..=12) {
        prop_assume!(b <= a);
        let p = qbinomial(a, b, 1).unwrap();
        prop_assert!(p.is_palindromic());
        prop_assert_eq!(p.eval_at_one(), binomial(a, b));
        prop_assert!(p.has_nonnegative_coeffs());
        let low = -4 * b * (a - b);
        let m = qbinomial(a, b, -4).unwrap();
        prop_assert_eq!(m.min_degree().unwrap(), low);
        prop_assert_eq!(m.coeff(low), BigInt::from(1));
        for step in [1, 2, 4, -4] {
            prop_assert_eq!(qbinomial(a, b, step).unwrap(), qbinomial_pascal(a, b, step).unwrap());
        }
    }

    #[test]
    fn sumset_total_is_product(xs in prop::collection::vec((1i64..20, 1i64..8), 1..8),
                               ys in prop::collection::vec((1i64..20, 1i64..8), 1..8)) {
        let a: RationalMultiset = xs.iter().map(|&(n, d)| Rational::new(n, d).unwrap()).collect();
        let b: RationalMultiset = ys.iter().map(|&(n, d)| Rational::new(n, d).unwrap()).collect();
        let s = a.sumset(&b);
        prop_assert_eq!(s.total(), a.total() * b.total());
        prop_assert_eq!(s.min().cloned(), Some(a.min().unwrap() + b.min().unwrap()));
    }

    #[test]
    fn spectrum_matches_enumeration(spec in small_bp(), cut in 0usize..5) {
        let sp = bp_spectrum(&spec).unwrap();
        prop_assert_eq!(sp.values().total(), spec.milnor_u64().unwrap());
        prop_assert_eq!(&bp_spectrum_brute_force(&spec, 2_000).unwrap(), sp.values());
        let e = spec.exponents();
        let cut = cut.min(e.len());
        if cut > 0 && cut < e.len() {
            let a = bp_spectrum(&BpSpec::new(e[..cut].to_vec()).unwrap()).unwrap();
            let b = bp_spectrum(&BpSpec::new(e[cut..].to_vec()).unwrap()).unwrap();
            prop_assert_eq!(a.thom_sebastiani(&b), sp);
        }
    }

    #[test]
    fn spectrum_symmetry_and_duality(spec in small_bp()) {
        let sp = bp_spectrum(&spec).unwrap();
        let n = Rational::from(spec.num_vars() as i64);
        for (alpha, m) in sp.values().iter() {
            prop_assert_eq!(sp.values().multiplicity(&(&n - alpha)), m);
        }
        prop_assert!(check_duality(&sp).holds);
        prop_assert_eq!(milnor_s(&sp).total(), sp.values().total());
    }

    #[test]
    fn milnor_route_agrees(spec in small_bp()) {
        let sp = bp_spectrum(&spec).unwrap();
        prop_assert_eq!(hrh_from_milnor(&milnor_s(&sp)), hrh_isolated_hypersurface(&sp));
    }

    #[test]
    fn alpha_tilde_is_sp_min(spec in small_bp()) {
        let sp = bp_spectrum(&spec).unwrap();
        let rs = bp_reduced_roots(&spec).unwrap();
        prop_assert_eq!(alpha_tilde_int(&rs), sp_min_int(&sp));
        prop_assert_eq!(RootSet::from_json(&rs.to_json()).unwrap(), rs);
        prop_assert_eq!(SpectrumData::from_json(&sp.to_json()).unwrap(), sp);
    }

    #[test]
    fn tuple_roots_contain_pairwise_sums(a in small_bp(), b in small_bp()) {
        prop_assume!(a.milnor_u64().unwrap() * b.milnor_u64().unwrap() <= 2_000);
        let ra = roots_from_spectrum(&bp_spectrum(&a).unwrap());
        let rb = roots_from_spectrum(&bp_spectrum(&b).unwrap());
        let t = tuple_ts_roots(&ra, &rb);
        prop_assert_eq!(t.r(), 2);
        for x in ra.full_set() {
            for y in rb.full_set() {
                prop_assert!(t.full_set().contains(&(&x + &y)));
            }
        }
    }

    #[test]
    fn rational_round_trip(n in big_int(256), d in big_int(256)) {
        prop_assume!(d != BigInt::from(0));
        let r = Rational::new(n, d).unwrap();
        let back: Rational = r.to_string().parse().unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn laurent_round_trip(terms in prop::collection::vec((-20i64..20, -50i64..50), 0..8)) {
        let p = LaurentPoly::from_terms(terms.into_iter().map(|(e, c)| (e, BigInt::from(c))));
        let back: LaurentPoly = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn command_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cmd = random_command(&mut rng, true);
        prop_assert_eq!(parse(&cmd.to_string()).unwrap(), cmd);
    }

    #[test]
    fn cone_hrh_transpose_invariant(n in 1usize..5, raw in prop::collection::vec((0i64..5, 0i64..5, 0i64..3), 0..6)) {
        let mut entries: Vec<(i64, i64, i64)> = raw.into_iter().filter(|&(p, q, _)| p <= n as i64 && q <= n as i64 && p + q > 0 && p + q < 2 * n as i64).collect();
        entries.push((0, 0, 1));
        let Ok(d) = HodgeDiamond::from_entries(n, &entries) else { return Ok(()) };
        let h = cone_hrh(&d).unwrap();
        prop_assert_eq!(cone_hrh(&d.transpose()).unwrap(), h.clone());
        if let Extended::Finite(k) = h.upper() {
            prop_assert!(2 * k <= n as i64 - 2);
        }
    }

    #[test]
    fn planar_cones_are_simplicial(rays in prop::collection::vec((1i64..10, -10i64..10), 1..6)) {
        let cone = ToricCone::new(rays.into_iter().map(|(x, y)| vec![x, y]).collect()).unwrap();
        prop_assert!(toric_hrh(&cone).is_rhm());
    }
}

#[test]
fn det_reports_respect_bounds() {
    for spec in spec_grid(8) {
        let r = det_report(&spec).unwrap();
        assert!(r.lcdef_gen <= r.lcdef, "{spec}");
        if let Some(slack) = r.pp_bound_slack() {
            assert!(slack >= 0, "{spec}");
        }
    }
}
