use proptest::prelude::*;

use rmub::constructions::{canonical_form, latin_mubs, sylvester_block_lengths, sylvester_lines, MubSet};
use rmub::designs::{gf_mols, is_net, net_from_mols, net_rank};
use rmub::exact::{is_orthonormal, is_unbiased_pair, ScaledBasis};
use rmub::hadamard::{catalog, hadamard_status, is_hadamard, kron, sylvester};
use rmub::search::{extend_lattice_lines, extend_real_mub, SearchBudget};
use rmub::{commuting_classes, greedy_lines, verify_commuting_classes, LatticeLineSet};

fn latin(q: u64, i: u32) -> MubSet {
    let net = net_from_mols(&gf_mols(q).unwrap(), q as usize).unwrap();
    latin_mubs(&net, &sylvester(i).unwrap()).unwrap()
}

fn random_basis(max_dim: usize) -> impl Strategy<Value = ScaledBasis> {
    (1..=max_dim).prop_flat_map(|d| {
        (prop::collection::vec(prop::collection::vec(-3i64..=3, d), d), 1i64..=40)
            .prop_map(|(cols, n)| ScaledBasis::new(n, cols).unwrap())
    })
}

/// Scaled identity against a random `±k` matrix with scale `d·k²`: always unbiased.
fn unbiased_by_construction() -> impl Strategy<Value = (ScaledBasis, ScaledBasis)> {
    (1usize..=6, 1i64..=4, 1i64..=4).prop_flat_map(|(d, t, k)| {
        prop::collection::vec(prop::collection::vec(prop::bool::ANY, d), d).prop_map(move |signs| {
            let id = ScaledBasis::identity(d).rescaled(t).unwrap();
            let cols = signs.iter().map(|c| c.iter().map(|&s| if s { k } else { -k }).collect()).collect();
            (id, ScaledBasis::new(d as i64 * k * k, cols).unwrap())
        })
    })
}

fn float_unbiased(b: &ScaledBasis, c: &ScaledBasis) -> bool {
    let target = 1.0 / (b.dim() as f64).sqrt();
    b.columns().iter().all(|u| {
        c.columns().iter().all(|v| {
            let dot: i64 = u.coords().iter().zip(v.coords()).map(|(x, y)| x * y).sum();
            let overlap = (dot as f64).abs() / ((b.scale_sq() as f64).sqrt() * (c.scale_sq() as f64).sqrt());
            (overlap - target).abs() < 1e-12
        })
    })
}

fn pair_strategy() -> impl Strategy<Value = (ScaledBasis, ScaledBasis)> {
    prop_oneof![
        (1usize..=4).prop_flat_map(|d| (random_basis(d), random_basis(d)))
            .prop_filter("same dimension", |(b, c)| b.dim() == c.dim()),
        unbiased_by_construction(),
    ]
}

/// Shuffle columns and negate some of them; any MUB predicate is blind to both.
fn scramble(ms: &MubSet, seed: u64) -> MubSet {
    let mut state = seed | 1;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let bases = ms
        .bases()
        .iter()
        .map(|b| {
            let mut cols: Vec<Vec<i64>> = b.columns().iter().map(|c| c.coords().to_vec()).collect();
            for k in (1..cols.len()).rev() {
                cols.swap(k, (next() % (k as u64 + 1)) as usize);
            }
            for c in cols.iter_mut() {
                if next() % 2 == 0 {
                    c.iter_mut().for_each(|x| *x = -*x);
                }
            }
            ScaledBasis::new(b.scale_sq(), cols).unwrap()
        })
        .collect();
    MubSet::new(ms.dim(), bases).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn unbiased_is_symmetric((b, c) in pair_strategy()) {
        prop_assert_eq!(is_unbiased_pair(&b, &c).unwrap(), is_unbiased_pair(&c, &b).unwrap());
    }

    #[test]
    fn exact_identity_matches_float_oracle((b, c) in pair_strategy()) {
        prop_assert_eq!(is_unbiased_pair(&b, &c).unwrap(), float_unbiased(&b, &c));
    }

    #[test]
    fn rescaling_preserves_predicates(seed in any::<u64>(), t in 1i64..=9, q in prop::sample::select(vec![2u64, 4])) {
        let ms = scramble(&latin(q, if q == 2 { 1 } else { 2 }), seed);
        let scaled = MubSet::new(ms.dim(), ms.bases().iter().map(|b| b.rescaled(t).unwrap()).collect()).unwrap();
        prop_assert!(ms.violation().is_none());
        prop_assert_eq!(ms.violation(), scaled.violation());
        for b in scaled.bases() {
            prop_assert!(is_orthonormal(b));
        }
    }

    #[test]
    fn canonical_form_preserves_unbiasedness(seed in any::<u64>(), q in prop::sample::select(vec![2u64, 4])) {
        let ms = scramble(&latin(q, if q == 2 { 1 } else { 2 }), seed);
        let cf = canonical_form(&ms).unwrap();
        prop_assert!(cf.violation().is_none());
        prop_assert_eq!(cf.len(), ms.len());
        prop_assert_eq!(&cf.bases()[0], &ScaledBasis::identity(ms.dim()));
    }

    #[test]
    fn status_never_constructive_for_bad_orders(n in 1usize..3000) {
        if n > 2 && n % 4 != 0 {
            prop_assert!(!hadamard_status(n).is_constructive());
        }
    }

    #[test]
    fn sylvester_lines_any_signs(i in 1u32..=3, s in prop::sample::select(vec![1u64, 3]), bits in any::<u8>()) {
        let n = 1usize << i;
        let signs: Vec<i8> = (0..n - 1).map(|k| if bits >> k & 1 == 1 { -1 } else { 1 }).collect();
        let d = 4u64.pow(i) * s * s;
        if d <= 1 << 12 {
            let b = sylvester_block_lengths(i, s, &signs).unwrap();
            prop_assert_eq!(b.iter().sum::<i64>() as u64, d);
            let ls = sylvester_lines(i, s, &signs).unwrap();
            prop_assert_eq!(ls.len(), n);
            prop_assert!(ls.violation().is_none());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn catalog_recipes_and_products_are_hadamard(a in 0usize..40, b in 0usize..40) {
        let orders: Vec<usize> = catalog().entries().iter().filter(|e| e.is_constructive() && e.order <= 20).map(|e| e.order).collect();
        let (x, y) = (orders[a % orders.len()], orders[b % orders.len()]);
        let hx = rmub::hadamard::construct(x).unwrap();
        let hy = rmub::hadamard::construct(y).unwrap();
        prop_assert!(is_hadamard(hx.matrix()));
        prop_assert!(is_hadamard(kron(&hx, &hy).unwrap().matrix()));
        prop_assert_eq!(kron(&hx, &hy).unwrap().order(), x * y);
    }

    #[test]
    fn nets_from_any_subset_of_mols(q in prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9]), mask in any::<u16>()) {
        let mols = gf_mols(q).unwrap();
        let subset: Vec<_> = mols.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, l)| l.clone()).collect();
        let s = q as usize;
        let net = net_from_mols(&subset, s).unwrap();
        prop_assert!(is_net(&net));
        prop_assert_eq!(net.k(), subset.len() + 2);
        // each parallel class beyond the first adds s − 1 independent directions
        prop_assert_eq!(net_rank(&net), 1 + net.k() * (s - 1));
    }


    #[test]
    fn line_search_ignores_worker_count(mask in any::<u16>()) {
        let greedy = greedy_lines(16).unwrap();
        let lines: Vec<_> = greedy.lines().iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, l)| l.clone()).collect();
        let ls = LatticeLineSet::new(16, lines).unwrap();
        let one = extend_lattice_lines(&ls, &SearchBudget::default().with_workers(1)).unwrap();
        let eight = extend_lattice_lines(&ls, &SearchBudget::default().with_workers(8)).unwrap();
        prop_assert_eq!(&one.outcome, &eight.outcome);
        prop_assert_eq!(one.candidates_examined, eight.candidates_examined);
        if let Some(w) = one.outcome.witness() {
            let mut grown = ls.lines().to_vec();
            grown.push(w.clone());
            prop_assert!(LatticeLineSet::new(16, grown).unwrap().violation().is_none());
        }
    }
}

#[test]
fn commuting_classes_round_trip() {
    let h2 = ScaledBasis::from_sign_columns(sylvester(1).unwrap().matrix());
    let d2 = MubSet::new(2, vec![ScaledBasis::identity(2), h2]).unwrap();
    for (ms, classes) in [(d2, 2), (latin(2, 1), 3), (latin(4, 2), 5)] {
        let cc = commuting_classes(&ms).unwrap();
        assert_eq!(cc.classes.len(), classes);
        assert!(verify_commuting_classes(&cc), "d={}", ms.dim());
        let scrambled = commuting_classes(&scramble(&ms, 7)).unwrap();
        assert!(verify_commuting_classes(&scrambled));
    }
}

#[test]
fn maximal_real_is_jointly_certified() {
    let r = extend_real_mub(&latin(2, 1), &SearchBudget::default()).unwrap();
    assert_eq!(r.outcome, rmub::search::SearchOutcome::ExhaustedNone);
    assert!(rmub::latin_d4_complex_certificate(360).unwrap().exact_refutation);
}
