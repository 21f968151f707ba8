use std::collections::BTreeSet;

use ordtop::morphisms::ValueMode;
use ordtop::oracle;
use ordtop::search::{self, automorphisms, canonical_form, generate, EnumSpec, WitnessOutcome};
use ordtop::{Kind, PredicateExpr};

#[test]
fn topology_counts_match_the_relation_oracle() {
    for n in 0..=5 {
        assert_eq!(
            generate::topologies(n).len() as u64,
            oracle::relation_count(n, false).unwrap(),
            "n = {n}"
        );
    }
}

#[test]
fn poset_counts_match_the_relation_oracle() {
    for n in 0..=5 {
        assert_eq!(
            generate::posets(n).len() as u64,
            oracle::relation_count(n, true).unwrap()
        );
    }
}

#[test]
fn family_and_table_oracles() {
    for n in 0..=4 {
        assert_eq!(
            generate::topologies(n).len() as u64,
            oracle::family_filter_count(n).unwrap()
        );
    }
    for n in 0..=3 {
        assert_eq!(
            generate::semilattices(n).len() as u64,
            oracle::semilattice_table_count(n).unwrap()
        );
    }
}

#[test]
fn six_point_topologies() {
    assert_eq!(generate::topologies(6).len(), 209_527);
}

fn orbit_check(spec: EnumSpec) {
    let labeled = search::count(&spec, 0).unwrap();
    let reps = search::enumerate(&spec.modulo_iso(true), 0).unwrap();
    let mut forms = BTreeSet::new();
    let mut expanded = 0u64;
    for s in &reps {
        let f = canonical_form(s).unwrap();
        assert_eq!(
            f.bytes(),
            s.encode().as_slice(),
            "representative is its own canonical form"
        );
        assert!(forms.insert(f), "duplicate class in {spec:?}");
        let group: u64 = (1..=s.n() as u64).product::<u64>()
            * (1..=s.n_y().unwrap_or(0) as u64).product::<u64>();
        expanded += group / automorphisms(s).unwrap().len() as u64;
    }
    assert_eq!(expanded, labeled, "{spec:?}");
}

#[test]
fn modulo_iso_classes_expand_to_labeled_counts() {
    for n in 0..=4 {
        orbit_check(EnumSpec::new(Kind::Topology, n));
        orbit_check(EnumSpec::new(Kind::Poset, n));
        orbit_check(EnumSpec::new(Kind::Semilattice, n));
    }
    for n in 1..=3 {
        orbit_check(EnumSpec::new(Kind::TopoPoset, n));
        orbit_check(EnumSpec::new(Kind::TopoSemilattice, n));
    }
    for (nx, ny) in [(1, 2), (2, 1), (2, 2)] {
        orbit_check(EnumSpec::pair(Kind::HomPair, nx, ny));
        orbit_check(EnumSpec::pair(Kind::MultimorphismPair, nx, ny));
        orbit_check(EnumSpec::pair(Kind::MultimorphismPair, nx, ny).mode(ValueMode::Nonempty));
    }
}

#[test]
fn known_class_counts() {
    let iso = |k, n| search::count(&EnumSpec::new(k, n).modulo_iso(true), 0).unwrap();
    // unlabeled topologies and posets
    assert_eq!(
        (0..=5).map(|n| iso(Kind::Topology, n)).collect::<Vec<_>>(),
        [1, 1, 3, 9, 33, 139]
    );
    assert_eq!(
        (0..=5).map(|n| iso(Kind::Poset, n)).collect::<Vec<_>>(),
        [1, 1, 2, 5, 16, 63]
    );
}

#[test]
fn witness_search_is_independent_of_workers() {
    let cases = [
        ("updown_closed & !up_down_closed_pair", Kind::TopoPoset, 3),
        ("!chain_closed", Kind::TopoPoset, 3),
        ("lawson & !pospace & t0", Kind::TopoSemilattice, 3),
        ("t0 & !t1", Kind::Topology, 4),
        ("pospace & !updown_closed", Kind::TopoPoset, 3),
    ];
    for (text, kind, n) in cases {
        let e = PredicateExpr::parse(text).unwrap();
        for iso in [false, true] {
            let spec = EnumSpec::new(kind, n).modulo_iso(iso);
            let one = search::find_witness(&e, &spec, u64::MAX, 1).unwrap();
            for w in [2, 4] {
                assert_eq!(
                    search::find_witness(&e, &spec, u64::MAX, w).unwrap(),
                    one,
                    "{text}"
                );
            }
        }
    }
}

#[test]
fn budget_counts_examined_structures() {
    let e = PredicateExpr::parse("t2 & !t1").unwrap();
    let spec = EnumSpec::new(Kind::Topology, 4);
    assert_eq!(
        search::find_witness(&e, &spec, 100, 1).unwrap(),
        WitnessOutcome::BudgetExceeded { examined: 100 }
    );
    assert_eq!(
        search::find_witness(&e, &spec, 355, 1).unwrap(),
        WitnessOutcome::Exhausted {
            examined: 355,
            undetermined: 0
        }
    );
    let found =
        search::find_witness(&PredicateExpr::parse("!t0").unwrap(), &spec, 5000, 1).unwrap();
    let WitnessOutcome::Found(w) = found else {
        panic!()
    };
    assert!(!w
        .structure
        .subject()
        .map(|s| ordtop::predicate::evaluate(ordtop::Predicate::T0, s)
            .unwrap()
            .is_true())
        .unwrap());
}

#[test]
fn caps_are_enforced() {
    for (kind, n) in [
        (Kind::Topology, 7),
        (Kind::TopoPoset, 5),
        (Kind::HomPair, 4),
    ] {
        assert!(search::count(&EnumSpec::new(kind, n), 1)
            .unwrap_err()
            .is_resource_cap());
    }
}
