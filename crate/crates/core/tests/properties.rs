use std::sync::Arc;

use proptest::prelude::*;

use ordtop::io::{self, StructureFile};
use ordtop::mask::SubsetMask;
use ordtop::oracle;
use ordtop::predicate::{self, Predicate, PredicateExpr};
use ordtop::search::{canonical_form, generate, is_canonical};
use ordtop::{FinitePoset, FiniteTopology, Structure, TopologizedPoset, TopologizedSemilattice};

fn topology(max_n: usize) -> impl Strategy<Value = FiniteTopology> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0u16..(1 << n), 0..6).prop_map(move |bits| {
            let sub: Vec<SubsetMask> = bits.into_iter().map(SubsetMask::from_bits).collect();
            FiniteTopology::generate(n, &sub).unwrap()
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// A topologized poset on up to 4 points, drawn from the generated lists.
fn topo_poset() -> impl Strategy<Value = TopologizedPoset> {
    (1usize..=4).prop_flat_map(|n| {
        let (p, t) = (generate::posets(n).len(), generate::topologies(n).len());
        (0..p, 0..t).prop_map(move |(i, j)| {
            TopologizedPoset::new(
                generate::posets(n)[i].clone(),
                generate::topologies(n)[j].clone(),
            )
            .unwrap()
        })
    })
}

fn topo_semilattice() -> impl Strategy<Value = TopologizedSemilattice> {
    (1usize..=4).prop_flat_map(|n| {
        let (s, t) = (
            generate::semilattices(n).len(),
            generate::topologies(n).len(),
        );
        (0..s, 0..t).prop_map(move |(i, j)| {
            TopologizedSemilattice::new(
                generate::semilattices(n)[i].clone(),
                generate::topologies(n)[j].clone(),
            )
            .unwrap()
        })
    })
}

fn expr() -> impl Strategy<Value = PredicateExpr> {
    let leaf = prop::sample::select(Predicate::ALL.to_vec()).prop_map(PredicateExpr::Atom);
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| PredicateExpr::Not(Box::new(e))),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| PredicateExpr::And(Box::new(a), Box::new(b))),
            (inner.clone(), inner).prop_map(|(a, b)| PredicateExpr::Or(Box::new(a), Box::new(b))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn generation_matches_literal_closure(n in 1usize..=4, bits in prop::collection::vec(0u16..16, 0..5)) {
        let sub: Vec<SubsetMask> = bits.into_iter().map(|b| SubsetMask::from_bits(b & ((1 << n) - 1))).collect();
        prop_assert_eq!(FiniteTopology::generate(n, &sub).unwrap(), oracle::generate_literal(n, &sub).unwrap());
    }

    #[test]
    fn kuratowski_axioms(t in topology(5), a in any::<u16>(), b in any::<u16>()) {
        let n = t.n();
        let full = t.full();
        let a = SubsetMask::from_bits(a).intersection(full);
        let b = SubsetMask::from_bits(b).intersection(full);
        prop_assert_eq!(t.closure(SubsetMask::EMPTY), SubsetMask::EMPTY);
        prop_assert!(a.is_subset(t.closure(a)));
        prop_assert_eq!(t.closure(t.closure(a)), t.closure(a));
        prop_assert_eq!(t.closure(a.union(b)), t.closure(a).union(t.closure(b)));
        prop_assert_eq!(t.closure(a), oracle::closure_literal(&t, a));
        prop_assert_eq!(t.interior(a), oracle::interior_literal(&t, a));
        prop_assert_eq!(t.interior(a), t.closure(a.complement(n)).complement(n));
        prop_assert!(t.is_open(t.interior(a)));
        prop_assert!(t.is_closed(t.closure(a)));
    }

    #[test]
    fn min_neighborhoods_are_least_opens(t in topology(5)) {
        for x in 0..t.n() {
            let m = t.min_nbhd(x);
            prop_assert!(t.is_open(m));
            for &u in t.opens() {
                if u.contains(x) {
                    prop_assert!(m.is_subset(u));
                }
            }
        }
    }

    #[test]
    fn sup_and_inf_match_bounds(n in 1usize..=5, idx in any::<prop::sample::Index>(), a in 1u16..32) {
        let ps = generate::posets(n);
        let p: &FinitePoset = &ps[idx.index(ps.len())];
        let a = SubsetMask::from_bits(a).intersection(SubsetMask::full(n));
        prop_assume!(!a.is_empty());
        let ub = p.upper_bounds(a);
        let least: Vec<usize> = ub.iter().filter(|&u| ub.iter().all(|v| p.le(u, v))).collect();
        prop_assert_eq!(p.sup(a).unwrap(), least.first().copied());
        let lb = p.lower_bounds(a);
        let greatest: Vec<usize> = lb.iter().filter(|&u| lb.iter().all(|v| p.le(v, u))).collect();
        prop_assert_eq!(p.inf(a).unwrap(), greatest.first().copied());
    }

    #[test]
    fn meet_is_natural_infimum(ts in topo_semilattice()) {
        let order = ts.order();
        for x in 0..ts.n() {
            for y in 0..ts.n() {
                let pair = SubsetMask::singleton(x).with(y);
                prop_assert_eq!(order.inf(pair).unwrap(), Some(ts.semilattice().meet(x, y)));
            }
        }
    }

    #[test]
    fn canonical_form_is_relabeling_invariant(
        (tp, perm) in topo_poset().prop_flat_map(|tp| { let n = tp.n(); (Just(tp), permutation(n)) })
    ) {
        let s = Structure::TopoPoset(tp);
        let moved = s.permuted(&perm, &[]);
        prop_assert_eq!(canonical_form(&s).unwrap(), canonical_form(&moved).unwrap());
        prop_assert_eq!(is_canonical(&s).unwrap(), canonical_form(&s).unwrap().bytes() == s.encode().as_slice());
    }

    #[test]
    fn predicates_are_relabeling_invariant(
        (ts, perm) in topo_semilattice().prop_flat_map(|ts| { let n = ts.n(); (Just(ts), permutation(n)) })
    ) {
        let s = Structure::TopoSemilattice(Arc::new(ts));
        let moved = s.permuted(&perm, &[]);
        for &p in Predicate::ALL {
            let a = predicate::evaluate(p, s.subject().unwrap()).unwrap();
            let b = predicate::evaluate(p, moved.subject().unwrap()).unwrap();
            prop_assert_eq!(a.as_bool(), b.as_bool(), "{}", p.name());
        }
        prop_assert_eq!(canonical_form(&s).unwrap(), canonical_form(&moved).unwrap());
    }

    #[test]
    fn structure_files_round_trip(tp in topo_poset(), ts in topo_semilattice()) {
        for s in [Structure::TopoPoset(tp), Structure::TopoSemilattice(Arc::new(ts))] {
            let text = StructureFile::from_structure(&s).unwrap().to_json();
            let back = io::load(&text).unwrap();
            prop_assert!(!back.discrete_default);
            prop_assert_eq!(&back.structure, &s);
            prop_assert_eq!(io::canonicalize(&text).unwrap(), text);
        }
    }

    #[test]
    fn expressions_round_trip_through_display(e in expr()) {
        let printed = e.to_string();
        prop_assert_eq!(PredicateExpr::parse(&printed).unwrap(), e);
    }

    #[test]
    fn kleene_de_morgan(a in expr(), b in expr(), ts in topo_semilattice()) {
        let s = Structure::TopoSemilattice(Arc::new(ts));
        let subj = s.subject().unwrap();
        let not = |e: &PredicateExpr| PredicateExpr::Not(Box::new(e.clone()));
        let and = PredicateExpr::And(Box::new(a.clone()), Box::new(b.clone()));
        let or = PredicateExpr::Or(Box::new(not(&a)), Box::new(not(&b)));
        prop_assert_eq!(not(&and).evaluate(subj).unwrap(), or.evaluate(subj).unwrap());
        prop_assert_eq!(not(&not(&a)).evaluate(subj).unwrap(), a.evaluate(subj).unwrap());
    }

    #[test]
    fn parser_never_panics(text in "[a-z_!&|() ]{0,40}") {
        let _ = PredicateExpr::parse(&text);
    }
}
