use brauer::homology::{self, HookOp};
use brauer::presentation::{make_koszul, Presentation};
use brauer::ribbon::{self, GrowthClass};
use brauer::strmod::{self, StringModule, StringWord};
use brauer::udr;
use brauer::verify::star;
use proptest::prelude::*;
use std::sync::OnceLock;

fn algebras() -> &'static Vec<(Presentation, Vec<StringWord>)> {
    static CELL: OnceLock<Vec<(Presentation, Vec<StringWord>)>> = OnceLock::new();
    CELL.get_or_init(|| {
        [star(2, &[2, 2, 2]), star(2, &[2, 3]), star(1, &[2, 2, 2]), make_koszul(2, 2, 3).unwrap()]
            .into_iter()
            .map(|p| {
                let w = strmod::enumerate_words(&p, 7);
                (p, w)
            })
            .collect()
    })
}

fn pick() -> impl Strategy<Value = (usize, usize)> {
    (0..algebras().len()).prop_flat_map(|a| (Just(a), 0..algebras()[a].1.len()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hooks_are_undone((a, k) in pick()) {
        let (p, words) = &algebras()[a];
        let w = &words[k];
        for (plus, minus) in [(HookOp::LeftPlus, HookOp::LeftMinus), (HookOp::RightPlus, HookOp::RightMinus)] {
            if let Some(x) = homology::apply(p, plus, w) {
                let back = homology::apply(p, minus, &x);
                prop_assert!(back.is_some_and(|b| b.same_module(w, p)), "{:?} on {}", plus, w.display(p));
            }
        }
    }

    #[test]
    fn omega_inverts((a, k) in pick()) {
        let (p, words) = &algebras()[a];
        let m = StringModule::new(p, &words[k]);
        let om = homology::omega(p, &m).unwrap();
        prop_assert_eq!(homology::omega_inv(p, &om).unwrap(), m.clone());
        let oi = homology::omega_inv(p, &m).unwrap();
        prop_assert_eq!(homology::omega(p, &oi).unwrap(), m);
    }

    #[test]
    fn canonical_form_is_stable((a, k) in pick()) {
        let (p, words) = &algebras()[a];
        let w = &words[k];
        let c = w.canonical(p);
        prop_assert_eq!(c.canonical(p), c.clone());
        prop_assert_eq!(w.inverse(p).canonical(p), c);
        prop_assert_eq!(w.inverse(p).dim(), w.dim());
    }

    #[test]
    fn classification_is_omega_invariant((a, k) in pick()) {
        let (p, words) = &algebras()[a];
        let m = StringModule::new(p, &words[k]);
        let c = udr::classify(p, &m).unwrap().class;
        if c.is_ring() {
            let om = homology::omega(p, &m).unwrap();
            prop_assert_eq!(udr::classify(p, &om).unwrap().class, c);
        }
    }

    #[test]
    fn random_tree_invariants(edges in 1usize..8, seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut pairs = Vec::new();
        let mut mults = Vec::new();
        for v in 1..=edges {
            pairs.push(format!("[\"v{}\",\"v{v}\"]", rng.gen_range(0..v)));
        }
        for v in 0..=edges {
            mults.push(format!("\"v{v}\": {}", rng.gen_range(1..=3)));
        }
        let text = format!("{{\"tree\": {{\"edges\": [{}], \"multiplicities\": {{{}}}}}}}", pairs.join(","), mults.join(","));
        let g = ribbon::BrauerGraph::from_json(&text).unwrap();
        prop_assert!(g.is_tree());
        prop_assert_eq!(g.perimeters(), vec![2 * edges]);
        prop_assert_eq!(g.green_walks().iter().map(|w| w.len()).sum::<usize>(), 2 * edges);
        if ribbon::growth_class(&g) == GrowthClass::NonPolynomial {
            let s = ribbon::star_reduce(&g).unwrap();
            prop_assert!(ribbon::derived_equivalent(&g, &s).equivalent);
            prop_assert!(ribbon::recognize_star(&s).is_some());
        }
    }
}
