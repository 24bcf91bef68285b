use std::sync::OnceLock;

use num_bigint::BigInt;
use proptest::prelude::*;
use tlog::cayley::{BallIndex, BallLimits};
use tlog::gensets::{build_standard_gens, build_unbound_gens, DigitSystem, GeneratingSet};
use tlog::twords::{Alphabet, GeneralizedTWord, Spelling, TWord};
use tlog::{GroupElement, GroupSpec, IntMatrix, ModuleElement};

fn specs() -> Vec<GroupSpec> {
    vec![
        GroupSpec::lamplighter(2).unwrap(),
        GroupSpec::lamplighter(3).unwrap(),
        GroupSpec::baumslag_solitar(2).unwrap(),
        GroupSpec::baumslag_solitar(3).unwrap(),
        GroupSpec::matrix_module(IntMatrix::new(2, vec![2, 1, 1, 1]).unwrap()).unwrap(),
        GroupSpec::matrix_module(IntMatrix::new(2, vec![0, 1, 1, 3]).unwrap()).unwrap(),
    ]
}

fn spec_strategy() -> impl Strategy<Value = GroupSpec> {
    proptest::sample::select(specs())
}

/// Raw (possibly non-canonical) elements.
fn raw_element(spec: &GroupSpec) -> BoxedStrategy<ModuleElement> {
    match spec {
        GroupSpec::Lamplighter { q } => proptest::collection::vec((-6i64..=6, 0..*q), 0..6)
            .prop_map(ModuleElement::Lamps)
            .boxed(),
        GroupSpec::BaumslagSolitar { .. } => (-300i64..=300, 0u32..=3)
            .prop_map(|(n, level)| ModuleElement::Adic {
                num: BigInt::from(n),
                level,
            })
            .boxed(),
        GroupSpec::MatrixModule(_) => (-20i64..=20, -20i64..=20, 0u32..=2)
            .prop_map(|(x, y, level)| ModuleElement::Lattice {
                level,
                vec: vec![x.into(), y.into()],
            })
            .boxed(),
    }
}

fn with_elements(count: usize) -> impl Strategy<Value = (GroupSpec, Vec<GroupElement>)> {
    spec_strategy().prop_flat_map(move |spec| {
        let s = spec.clone();
        let elements =
            proptest::collection::vec((-4i64..=4, raw_element(&spec)), count).prop_map(move |v| {
                v.into_iter()
                    .map(|(shift, k)| GroupElement {
                        shift,
                        k: s.canonicalize(k),
                    })
                    .collect::<Vec<_>>()
            });
        (Just(spec), elements)
    })
}

fn alphabet_and_word(max_terms: usize) -> impl Strategy<Value = (Alphabet, GeneralizedTWord)> {
    spec_strategy().prop_flat_map(move |spec| {
        let alphabet = Alphabet::standard(&spec);
        let letters = alphabet.len();
        let terms = proptest::collection::vec((-5i64..=5, 0..letters, -3i64..=3), 0..max_terms);
        (Just(alphabet), terms).prop_map(|(a, terms)| {
            let mut w = GeneralizedTWord::new();
            for (p, l, c) in terms {
                w.add_term(p, l, c);
            }
            (a, w)
        })
    })
}

fn unbound_sets() -> &'static Vec<GeneratingSet> {
    static SETS: OnceLock<Vec<GeneratingSet>> = OnceLock::new();
    SETS.get_or_init(|| {
        specs()
            .iter()
            .map(|s| build_unbound_gens(&Alphabet::standard(s)).unwrap())
            .collect()
    })
}

fn standard_ball() -> &'static BallIndex<GroupSpec> {
    static BALL: OnceLock<BallIndex<GroupSpec>> = OnceLock::new();
    BALL.get_or_init(|| {
        let spec = GroupSpec::baumslag_solitar(2).unwrap();
        let gens = build_standard_gens(&Alphabet::standard(&spec)).unwrap();
        BallIndex::build(spec, gens.labelled_elements(), 9, &BallLimits::default()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn group_axioms((spec, g) in with_elements(3)) {
        let e = spec.identity();
        let (a, b, c) = (&g[0], &g[1], &g[2]);
        let ab_c = spec.mul(&spec.mul(a, b).unwrap(), c).unwrap();
        let a_bc = spec.mul(a, &spec.mul(b, c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        prop_assert_eq!(&spec.mul(a, &e).unwrap(), a);
        prop_assert_eq!(&spec.mul(&e, a).unwrap(), a);
        prop_assert!(spec.mul(a, &spec.inverse(a)).unwrap().is_identity());
        prop_assert!(spec.mul(&spec.inverse(a), a).unwrap().is_identity());
    }

    #[test]
    fn canonical_forms((spec, g) in with_elements(2)) {
        let k = g[0].k.clone();
        prop_assert_eq!(spec.canonicalize(k.clone()), k.clone());
        prop_assert!(spec.check(&k).is_ok());
        // an equal value written at a deeper level reduces to the same form
        let deeper = match (&spec, &k) {
            (GroupSpec::BaumslagSolitar { m }, ModuleElement::Adic { num, level }) => {
                Some(ModuleElement::Adic { num: num * BigInt::from(*m), level: level + 1 })
            }
            _ => None,
        };
        if let Some(d) = deeper {
            prop_assert_eq!(spec.canonicalize(d), k);
        }
        let back = spec.parse_element(&g[1].k.to_string()).unwrap();
        prop_assert_eq!(back, g[1].k.clone());
        prop_assert_eq!(GroupElement::from_blob(&g[0].to_blob()), Some(g[0].clone()));
    }

    #[test]
    fn shift_is_an_automorphism((spec, g) in with_elements(2), i in -4i64..=4, j in -4i64..=4) {
        let (x, y) = (&g[0].k, &g[1].k);
        let sum = spec.add(x, y).unwrap();
        prop_assert_eq!(
            spec.shift(&sum, i),
            spec.add(&spec.shift(x, i), &spec.shift(y, i)).unwrap()
        );
        prop_assert_eq!(spec.shift(&spec.shift(x, i), j), spec.shift(x, i + j));
        prop_assert_eq!(spec.shift(&spec.shift(x, i), -i), x.clone());
        // t^i k t^-i = T^i(k)
        let conj = spec
            .product(&[spec.t_power(i), spec.embed(x.clone()), spec.t_power(-i)])
            .unwrap();
        prop_assert_eq!(conj, spec.embed(spec.shift(x, i)));
    }

    #[test]
    fn evaluation_is_a_homomorphism(
        (alphabet, w1) in alphabet_and_word(6),
        terms in proptest::collection::vec((-5i64..=5, 0usize..16, -3i64..=3), 0..6),
        s in -3i64..=3,
    ) {
        let spec = alphabet.spec();
        let mut w2 = GeneralizedTWord::new();
        for (p, l, c) in terms {
            w2.add_term(p, l % alphabet.len(), c);
        }
        let lhs = w1.plus(&w2).evaluate(&alphabet);
        let rhs = spec.add(&w1.evaluate(&alphabet), &w2.evaluate(&alphabet)).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(
            w1.shifted(s).evaluate(&alphabet),
            spec.shift(&w1.evaluate(&alphabet), s)
        );
        let json = serde_json::to_string(&w1).unwrap();
        let back: GeneralizedTWord = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, w1);
    }

    #[test]
    fn projection_commutes_with_evaluation(
        which in 0usize..6,
        raw in proptest::collection::vec(0usize..64, 0..12),
    ) {
        let gens = &unbound_sets()[which];
        let spec = gens.spec();
        let word: Vec<usize> = raw.iter().map(|i| i % gens.len()).collect();
        let product = spec
            .product(word.iter().map(|&i| &gens.generators()[i].element))
            .unwrap();
        let (shift, phi) = gens.phi_project(&word).unwrap();
        prop_assert_eq!(product, GroupElement { shift, k: phi.evaluate(gens.alphabet()) });
        prop_assert!(phi.len() <= word.len() as u64);
    }

    #[test]
    fn subwords_shrink(
        (alphabet, w) in alphabet_and_word(8),
        mask in any::<u16>(),
    ) {
        let entries: Vec<(i64, usize)> = w
            .triples()
            .map(|(p, l, _)| (p, l))
            .filter(|&(_, l)| l != alphabet.zero_index())
            .collect::<std::collections::BTreeMap<_, _>>()
            .into_iter()
            .collect();
        let full = TWord::from_entries(&alphabet, entries.clone()).unwrap();
        let sub = TWord::from_entries(
            &alphabet,
            entries.iter().enumerate().filter(|(i, _)| mask >> (i % 16) & 1 == 1).map(|(_, e)| *e),
        )
        .unwrap();
        prop_assert!(sub.len() <= full.len());
        prop_assert!(sub.imax() <= full.imax());
        prop_assert!(sub.imin() >= full.imin());
    }

    #[test]
    fn truncated_norm_laws((_alphabet, w) in alphabet_and_word(10), m in 0u64..4, s in -3i64..=3) {
        prop_assert_eq!(w.truncated_norm(0), w.len());
        prop_assert!(w.truncated_norm(m + 1) <= w.truncated_norm(m));
        prop_assert_eq!(w.shifted(s).truncated_norm(m), w.truncated_norm(m));
        let expected: u64 = w.powers().map(|p| w.layer_len(p).saturating_sub(m)).sum();
        prop_assert_eq!(w.truncated_norm(m), expected);
    }

    #[test]
    fn spellings_round_trip(
        which in 0usize..6,
        raw in proptest::collection::vec(0usize..64, 1..6),
    ) {
        let gens = &unbound_sets()[which];
        let syms: Vec<_> = raw
            .iter()
            .flat_map(|i| gens.generators()[i % gens.len()].spelling.0.clone())
            .collect();
        let spelling = Spelling(syms);
        let parsed = Spelling::parse(&spelling.to_string()).unwrap();
        let alphabet = gens.alphabet();
        prop_assert_eq!(parsed.evaluate(alphabet).unwrap(), spelling.evaluate(alphabet).unwrap());
        let inv = spelling.inverse().evaluate(alphabet).unwrap();
        prop_assert_eq!(inv, gens.spec().inverse(&spelling.evaluate(alphabet).unwrap()));
    }

    #[test]
    fn ball_invariants(pick in any::<prop::sample::Index>()) {
        let ball = standard_ball();
        let id = pick.index(ball.len());
        let g = ball.element(id).clone();
        let d = ball.dist_of_id(id);
        prop_assert_eq!(ball.word_length(&g), Some(d));
        let path = ball.geodesic(&g).unwrap();
        prop_assert_eq!(path.len() as u32, d);
        let spec = ball.ops();
        let walked = spec
            .product(path.iter().map(|&j| ball.generator(j).1))
            .unwrap();
        prop_assert_eq!(&walked, &g);
        prop_assert_eq!(ball.word_length(&spec.inverse(&g)), Some(d));
        for j in 0..ball.generator_count() {
            let h = spec.mul(&g, ball.generator(j).1).unwrap();
            match ball.word_length(&h) {
                Some(e) => prop_assert!(e.abs_diff(d) <= 1),
                None => prop_assert_eq!(d, ball.radius()),
            }
        }
    }

    #[test]
    fn digit_expansions_round_trip(num in -5000i64..=5000, level in 0u32..=3) {
        let spec = GroupSpec::baumslag_solitar(3).unwrap();
        let sys = DigitSystem::new(&spec, 2).unwrap();
        let k = spec.canonicalize(ModuleElement::Adic { num: num.into(), level });
        let e = sys.expand(&k, 256).unwrap().expect("balanced ternary expands everything");
        prop_assert_eq!(sys.evaluate(&e), k.clone());
        prop_assert_eq!(e.as_tword(sys.alphabet()).evaluate(sys.alphabet()), k);
    }
}

#[test]
fn sphere_sizes_sum_to_ball() {
    let ball = standard_ball();
    let sizes = ball.sphere_sizes();
    assert_eq!(sizes.iter().sum::<u64>() as usize, ball.len());
    assert_eq!(sizes[0], 1);
}
