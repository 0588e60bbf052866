use hookseries::abacus::{core_weight_from_v, phi_n_inverse, phi_v, phi_v_from_n, phi_v_inverse, NCoding};
use hookseries::identities::{IdentityReport, Mismatch};
use hookseries::partitions::{hook_lengths, hook_lengths_mod_t, is_t_core};
use hookseries::quotient::{compose, decode_word, decompose, encode_word, word_hooks, BinaryWord, CoreQuotient};
use hookseries::series::{compose as compose_series, exp_series, inverse, log_series, revert};
use hookseries::{HookMultiset, Partition, Polynomial, TruncatedSeries, Var};
use proptest::prelude::*;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..9, 0..9).prop_map(Partition::from_unsorted)
}

fn series(degree: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-6i64..7, degree + 1).prop_map(move |c| TruncatedSeries::from_integers(degree, &c))
}

fn unit_series(degree: usize) -> impl Strategy<Value = TruncatedSeries> {
    series(degree).prop_map(move |s| {
        let mut c = s.into_coeffs();
        c[0] = Polynomial::one();
        TruncatedSeries::from_coeffs(degree, c)
    })
}

fn reversible(degree: usize) -> impl Strategy<Value = TruncatedSeries> {
    (series(degree), prop_oneof![Just(1i64), Just(-1), Just(2), Just(3)]).prop_map(move |(s, a)| {
        let mut c = s.into_coeffs();
        c[0] = Polynomial::zero();
        c[1] = Polynomial::from_int(a);
        TruncatedSeries::from_coeffs(degree, c)
    })
}

fn zero_sum(t: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..5, t - 1).prop_map(|mut v| {
        let s: i64 = v.iter().sum();
        v.push(-s);
        v
    })
}

proptest! {
    #[test]
    fn word_round_trip(p in partition()) {
        prop_assert_eq!(decode_word(&encode_word(&p)), p);
    }

    #[test]
    fn word_ignores_padding_and_shift(p in partition(), lead in 0usize..5, tail in 0usize..5) {
        let w = encode_word(&p);
        let mut bits = vec![false; lead];
        bits.extend_from_slice(w.window());
        bits.extend(std::iter::repeat(true).take(tail));
        let padded = BinaryWord::new(&bits);
        prop_assert_eq!(&padded, &w);
        prop_assert_eq!(decode_word(&padded), p);
    }

    #[test]
    fn word_hooks_match_diagram(p in partition()) {
        prop_assert_eq!(word_hooks(&encode_word(&p)), hook_lengths(&p));
    }

    #[test]
    fn decompose_round_trip(p in partition(), t in 1u32..6) {
        let cq = decompose(&p, t).unwrap();
        prop_assert!(is_t_core(&cq.core, t).unwrap());
        prop_assert_eq!(cq.weight(), u64::from(p.size()));
        let halved: HookMultiset = hook_lengths_mod_t(&p, t)
            .unwrap()
            .to_sorted_vec()
            .into_iter()
            .map(|h| h / t)
            .collect();
        let union = cq.quotient.iter().fold(HookMultiset::new(), |acc, q| acc.union(&hook_lengths(q)));
        prop_assert_eq!(halved, union);
        prop_assert_eq!(compose(&cq).unwrap(), p);
    }

    #[test]
    fn compose_any_quotient(t in 2u32..5, qs in prop::collection::vec(partition(), 4)) {
        let quotient: Vec<Partition> = qs.into_iter().take(t as usize).collect();
        let cq = CoreQuotient { core: Partition::empty(), quotient: quotient.clone(), t };
        let lambda = compose(&cq).unwrap();
        let back = decompose(&lambda, t).unwrap();
        prop_assert_eq!(back.core, Partition::empty());
        prop_assert_eq!(back.quotient, quotient);
    }

    #[test]
    fn n_coding_round_trip(t in 1usize..8, n in zero_sum(7)) {
        let n = NCoding::new(n[..t - 1].iter().copied().chain([-n[..t - 1].iter().sum::<i64>()]).collect()).unwrap();
        let core = phi_n_inverse(&n, t as u32).unwrap();
        prop_assert!(is_t_core(&core, t as u32).unwrap());
        prop_assert_eq!(u64::from(core.size()), n.weight().unwrap());
        prop_assert_eq!(hookseries::abacus::phi_n(&core, t as u32).unwrap(), n.clone());
        if t % 2 == 1 {
            let v = phi_v_from_n(&n, t as u32).unwrap();
            prop_assert_eq!(phi_v(&core, t as u32).unwrap(), v.clone());
            prop_assert_eq!(phi_v_inverse(&v, t as u32).unwrap(), core.clone());
            prop_assert_eq!(core_weight_from_v(&v, t as u32).unwrap(), u64::from(core.size()));
        }
    }

    #[test]
    fn ring_laws(a in series(6), b in series(6), c in series(6)) {
        prop_assert_eq!(a.try_mul(&b).unwrap(), b.try_mul(&a).unwrap());
        prop_assert_eq!(
            a.try_mul(&b).unwrap().try_mul(&c).unwrap(),
            a.try_mul(&b.try_mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.try_mul(&b.try_add(&c).unwrap()).unwrap(),
            a.try_mul(&b).unwrap().try_add(&a.try_mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.try_sub(&a).unwrap(), TruncatedSeries::zero(6));
    }

    #[test]
    fn inverse_is_inverse(a in unit_series(7)) {
        prop_assert_eq!(a.try_mul(&inverse(&a).unwrap()).unwrap(), TruncatedSeries::one(7));
    }

    #[test]
    fn reversion_composes_to_identity(f in reversible(7)) {
        let g = revert(&f).unwrap();
        prop_assert_eq!(compose_series(&f, &g).unwrap(), TruncatedSeries::x(7));
        prop_assert_eq!(compose_series(&g, &f).unwrap(), TruncatedSeries::x(7));
    }

    #[test]
    fn exp_log_inverse(a in unit_series(6), b in unit_series(6)) {
        prop_assert_eq!(exp_series(&log_series(&a).unwrap()).unwrap(), a.clone());
        let sum = log_series(&a).unwrap().try_add(&log_series(&b).unwrap()).unwrap();
        prop_assert_eq!(log_series(&a.try_mul(&b).unwrap()).unwrap(), sum);
    }

    #[test]
    fn partition_json_round_trip(p in partition(), t in 1u32..5) {
        let cq = decompose(&p, t).unwrap();
        let json = serde_json::to_string(&cq).unwrap();
        prop_assert_eq!(serde_json::from_str::<CoreQuotient>(&json).unwrap(), cq);
        let json = serde_json::to_string(&encode_word(&p)).unwrap();
        prop_assert_eq!(serde_json::from_str::<BinaryWord>(&json).unwrap(), encode_word(&p));
    }

    #[test]
    fn report_json_round_trip(a in -20i64..20, b in 1i64..20, k in 0u32..4, degree in 0usize..30) {
        let lhs = Polynomial::var(Var::Z).pow(k).scale(&hookseries::Rational::new(a.into(), b.into()));
        let report = IdentityReport {
            identity: "extension[t=2]".into(),
            degree,
            verified: false,
            first_mismatch: Some(Mismatch { degree, lhs, rhs: Polynomial::from_int(a) }),
        };
        let json = serde_json::to_string(&report).unwrap();
        prop_assert_eq!(serde_json::from_str::<IdentityReport>(&json).unwrap(), report);
    }
}
