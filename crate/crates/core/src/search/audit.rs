//! The global audit over every enumerated structure up to a size cap.

use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::canon::{canonical_form, CanonicalForm};
use super::generate;
use super::with_pool;
use crate::error::{Error, Result};
use crate::morphisms::{
    hom_inf_fiber, is_continuous, is_homomorphism, is_monotone, is_multimorphism,
    is_upper_semicontinuous, verify_gdelta_claim, verify_with_facts, Morphism, Multimorphism,
    Profile, SemilatticeHom, StructureFacts, ValueMode,
};
use crate::oracle::lawson_literal;
use crate::semilattice::{Semilattice, TopologizedSemilattice};
use crate::structure::{MorphismPair, Structure};
use crate::topo_poset::TopologizedPoset;

pub const AUDIT_MAX_N: usize = 4;
/// Semilattice and morphism sections stop at this size.
pub const SEMILATTICE_AUDIT_MAX_N: usize = 3;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub instances: u64,
    pub antecedent_holds: u64,
    pub unevaluated: u64,
    pub violations: u64,
    pub first_violation: Option<String>,
}

impl Tally {
    fn record(
        &mut self,
        antecedent: Option<bool>,
        consequent: Option<bool>,
        describe: impl FnOnce() -> String,
    ) {
        self.instances += 1;
        match (antecedent, consequent) {
            (Some(false), _) => {}
            (None, _) | (Some(true), None) => self.unevaluated += 1,
            (Some(true), Some(c)) => {
                self.antecedent_holds += 1;
                if !c {
                    self.violations += 1;
                    if self.first_violation.is_none() {
                        self.first_violation = Some(describe());
                    }
                }
            }
        }
    }

    fn merge(&mut self, other: Tally) {
        self.instances += other.instances;
        self.antecedent_holds += other.antecedent_holds;
        self.unevaluated += other.unevaluated;
        self.violations += other.violations;
        if self.first_violation.is_none() {
            self.first_violation = other.first_violation;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub name: String,
    #[serde(flatten)]
    pub tally: Tally,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Section {
    pub title: String,
    pub rows: Vec<CheckRow>,
}

impl Section {
    pub fn violations(&self) -> u64 {
        self.rows.iter().map(|r| r.tally.violations).sum()
    }

    pub fn row(&self, name: &str) -> Option<&Tally> {
        self.rows.iter().find(|r| r.name == name).map(|r| &r.tally)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Strictness {
    Witness {
        n: usize,
        canonical: CanonicalForm,
        structure: String,
    },
    NoneUpTo {
        max_n: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrictnessRow {
    /// The implication whose converse is tested.
    pub implication: String,
    pub query: String,
    pub result: Strictness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremRow {
    pub profile: Profile,
    pub mode: &'static str,
    pub instances: u64,
    pub hypotheses_hold: u64,
    pub conclusion_holds: u64,
    pub inconsistent: u64,
    pub first_inconsistent: Option<String>,
    /// Some hypothesis fails and the image is not closed.
    pub load_bearing: u64,
    pub first_load_bearing: Option<String>,
}

impl TheoremRow {
    fn new(profile: Profile, mode: &'static str) -> Self {
        TheoremRow {
            profile,
            mode,
            instances: 0,
            hypotheses_hold: 0,
            conclusion_holds: 0,
            inconsistent: 0,
            first_inconsistent: None,
            load_bearing: 0,
            first_load_bearing: None,
        }
    }

    fn merge(&mut self, o: TheoremRow) {
        self.instances += o.instances;
        self.hypotheses_hold += o.hypotheses_hold;
        self.conclusion_holds += o.conclusion_holds;
        self.inconsistent += o.inconsistent;
        self.load_bearing += o.load_bearing;
        if self.first_inconsistent.is_none() {
            self.first_inconsistent = o.first_inconsistent;
        }
        if self.first_load_bearing.is_none() {
            self.first_load_bearing = o.first_load_bearing;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub max_n: usize,
    pub sections: Vec<Section>,
    pub strictness: Vec<StrictnessRow>,
    pub theorems: Vec<TheoremRow>,
    pub violations: u64,
}

impl AuditReport {
    pub fn section(&self, title_prefix: &str) -> Option<&Section> {
        self.sections
            .iter()
            .find(|s| s.title.starts_with(title_prefix))
    }

    pub fn theorem(&self, profile: Profile, mode: &str) -> Option<&TheoremRow> {
        self.theorems
            .iter()
            .find(|t| t.profile == profile && t.mode == mode)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "audit max_n = {}", self.max_n);
        for s in &self.sections {
            let _ = writeln!(out, "\n== {} ==", s.title);
            for r in &s.rows {
                let t = &r.tally;
                let _ = writeln!(
                    out,
                    "{}: instances {}, antecedent {}, unevaluated {}, violations {}",
                    r.name, t.instances, t.antecedent_holds, t.unevaluated, t.violations
                );
                if let Some(v) = &t.first_violation {
                    let _ = writeln!(out, "  first violation: {v}");
                }
            }
            let _ = writeln!(out, "violations: {}", s.violations());
        }
        let _ = writeln!(out, "\n== strictness ==");
        for r in &self.strictness {
            match &r.result {
                Strictness::Witness {
                    n,
                    canonical,
                    structure,
                } => {
                    let _ = writeln!(
                        out,
                        "{} is strict: `{}` has a witness at n = {n}, canonical {canonical}: {structure}",
                        r.implication, r.query
                    );
                }
                Strictness::NoneUpTo { max_n } => {
                    let _ = writeln!(
                        out,
                        "{}: `{}` has no witness up to n = {max_n}",
                        r.implication, r.query
                    );
                }
            }
        }
        let _ = writeln!(out, "\n== theorem sweeps ==");
        for t in &self.theorems {
            let _ = writeln!(
                out,
                "{} [{}]: instances {}, hypotheses hold {}, conclusion holds {}, inconsistent {}, load-bearing {}",
                t.profile,
                t.mode,
                t.instances,
                t.hypotheses_hold,
                t.conclusion_holds,
                t.inconsistent,
                t.load_bearing
            );
            if let Some(e) = &t.first_inconsistent {
                let _ = writeln!(out, "  first inconsistent: {e}");
            }
            if let Some(e) = &t.first_load_bearing {
                let _ = writeln!(out, "  first load-bearing: {e}");
            }
        }
        let inconsistent: u64 = self.theorems.iter().map(|t| t.inconsistent).sum();
        let _ = writeln!(out, "violations: {inconsistent}");
        let _ = writeln!(out, "\ntotal violations: {}", self.violations);
        out
    }
}

struct TpFacts {
    up: bool,
    down: bool,
    updown: bool,
    pospace: Option<bool>,
    chain_closed: bool,
    weakly_up: bool,
    t1: bool,
    complete: bool,
    chain_complete: bool,
    chain_compact: Option<bool>,
}

impl TpFacts {
    fn new(tp: &TopologizedPoset) -> Self {
        let p = tp.closedness_profile();
        TpFacts {
            up: p.up_closed,
            down: p.down_closed,
            updown: p.updown_closed,
            pospace: p.pospace.as_bool(),
            chain_closed: p.chain_closed,
            weakly_up: p.weakly_up_closed,
            t1: tp.topology().separation_profile().t1,
            complete: tp.is_complete(),
            chain_complete: tp.chain_complete_equivalent(),
            chain_compact: tp.is_chain_compact().ok(),
        }
    }

    fn up_down(&self) -> bool {
        self.up && self.down
    }
}

type Check<F> = (&'static str, fn(&F) -> (Option<bool>, Option<bool>));
type TsCheck = (
    &'static str,
    fn(&TsFacts<'_>) -> (Option<bool>, Option<bool>),
);

const TP_CHECKS: &[Check<TpFacts>] = &[
    ("pospace => up_down_closed_pair", |f| {
        (f.pospace, Some(f.up_down()))
    }),
    ("up_down_closed_pair => updown_closed", |f| {
        (Some(f.up_down()), Some(f.updown))
    }),
    ("updown_closed => chain_closed", |f| {
        (Some(f.updown), Some(f.chain_closed))
    }),
    ("complete => chain_compact", |f| {
        (Some(f.complete), f.chain_compact)
    }),
    ("up_down_closed_pair => (complete <=> chain_compact)", |f| {
        (Some(f.up_down()), f.chain_compact.map(|c| c == f.complete))
    }),
    ("complete <=> chain criterion", |f| {
        (Some(true), Some(f.complete == f.chain_complete))
    }),
    ("up_closed => weakly_up_closed", |f| {
        (Some(f.up), Some(f.weakly_up))
    }),
    ("t1 => weakly_up_closed", |f| {
        (Some(f.t1), Some(f.weakly_up))
    }),
];

/// Converses of the closedness chain, as `(implication, query, test)`.
type Converse = (&'static str, &'static str, fn(&TpFacts) -> bool);

const STRICTNESS: &[Converse] = &[
    (
        "pospace => up_down_closed_pair",
        "up_down_closed_pair & !pospace",
        |f| f.up_down() && f.pospace == Some(false),
    ),
    (
        "up_down_closed_pair => updown_closed",
        "updown_closed & !up_down_closed_pair",
        |f| f.updown && !f.up_down(),
    ),
    (
        "updown_closed => chain_closed",
        "chain_closed & !updown_closed",
        |f| f.chain_closed && !f.updown,
    ),
];

struct TpUnit {
    tallies: Vec<Tally>,
    witnesses: Vec<Option<TopologizedPoset>>,
}

fn topo_poset_section(max_n: usize) -> (Section, Vec<StrictnessRow>) {
    let mut tallies = vec![Tally::default(); TP_CHECKS.len()];
    let mut witnesses: Vec<Option<(usize, TopologizedPoset)>> = vec![None; STRICTNESS.len()];
    let mut total = 0u64;
    for n in 1..=max_n {
        let posets = generate::posets(n);
        let tops = generate::topologies(n);
        total += (posets.len() * tops.len()) as u64;
        let units: Vec<TpUnit> = posets
            .par_iter()
            .map(|p| {
                let mut unit = TpUnit {
                    tallies: vec![Tally::default(); TP_CHECKS.len()],
                    witnesses: vec![None; STRICTNESS.len()],
                };
                for t in tops.iter() {
                    let tp = TopologizedPoset::new(p.clone(), t.clone()).expect("same size");
                    let f = TpFacts::new(&tp);
                    for (k, (_, check)) in TP_CHECKS.iter().enumerate() {
                        let (a, c) = check(&f);
                        unit.tallies[k]
                            .record(a, c, || Structure::TopoPoset(tp.clone()).describe());
                    }
                    for (k, (_, _, test)) in STRICTNESS.iter().enumerate() {
                        if unit.witnesses[k].is_none() && test(&f) {
                            unit.witnesses[k] = Some(tp.clone());
                        }
                    }
                }
                unit
            })
            .collect();
        for unit in units {
            for (t, u) in tallies.iter_mut().zip(unit.tallies) {
                t.merge(u);
            }
            for (w, u) in witnesses.iter_mut().zip(unit.witnesses) {
                if w.is_none() {
                    *w = u.map(|tp| (n, tp));
                }
            }
        }
    }
    let section = Section {
        title: format!("topologized posets, n = 1..{max_n}, {total} structures"),
        rows: TP_CHECKS
            .iter()
            .zip(tallies)
            .map(|((name, _), tally)| CheckRow {
                name: name.to_string(),
                tally,
            })
            .collect(),
    };
    let strictness = STRICTNESS
        .iter()
        .zip(witnesses)
        .map(|((imp, query, _), w)| StrictnessRow {
            implication: imp.to_string(),
            query: query.to_string(),
            result: match w {
                Some((n, tp)) => {
                    let s = Structure::TopoPoset(tp);
                    Strictness::Witness {
                        n,
                        canonical: canonical_form(&s).expect("within cap"),
                        structure: s.describe(),
                    }
                }
                None => Strictness::NoneUpTo { max_n },
            },
        })
        .collect();
    (section, strictness)
}

struct TsFacts<'a> {
    base: StructureFacts<'a>,
    tp: TpFacts,
    zar: Option<bool>,
    lawson: bool,
    lawson_literal: bool,
    v: bool,
    discrete: bool,
}

impl<'a> TsFacts<'a> {
    fn new(ts: &'a TopologizedSemilattice) -> Self {
        TsFacts {
            base: StructureFacts::new(ts),
            tp: TpFacts::new(ts.as_topo_poset()),
            zar: ts.is_zar_compact().ok(),
            lawson: ts.is_lawson(),
            lawson_literal: lawson_literal(ts),
            v: ts.is_v_semilattice(),
            discrete: ts.topology().is_discrete(),
        }
    }
}

fn all_equal(values: &[Option<bool>]) -> Option<bool> {
    let known: Option<Vec<bool>> = values.iter().copied().collect();
    known.map(|v| v.windows(2).all(|w| w[0] == w[1]))
}

const TS_CHECKS: &[TsCheck] = &[
    ("complete => zar_compact", |f| (Some(f.tp.complete), f.zar)),
    ("zar_compact => chain_compact", |f| {
        (f.zar, f.tp.chain_compact)
    }),
    (
        "up_down_closed_pair => (complete <=> zar_compact <=> chain_compact)",
        |f| {
            (
                Some(f.tp.up_down()),
                all_equal(&[Some(f.tp.complete), f.zar, f.tp.chain_compact]),
            )
        },
    ),
    ("complete", |f| (Some(true), Some(f.tp.complete))),
    ("chain_compact", |f| (Some(true), f.tp.chain_compact)),
    ("zar_compact", |f| (Some(true), f.zar)),
    ("sep_cont <=> joint_cont", |f| {
        (
            Some(true),
            f.base
                .jointly_continuous
                .as_bool()
                .map(|j| j == f.base.separately_continuous),
        )
    }),
    ("up_closed & v_semilattice => pospace", |f| {
        (Some(f.tp.up && f.v), f.tp.pospace)
    }),
    ("lawson <=> literal base search", |f| {
        (Some(true), Some(f.lawson == f.lawson_literal))
    }),
    ("gdelta_separated <=> discrete", |f| {
        (Some(true), Some(f.base.gdelta_separated == f.discrete))
    }),
    ("gdelta_separated => t2", |f| {
        (Some(f.base.gdelta_separated), Some(f.base.hausdorff))
    }),
    ("t2 & joint_cont => gdelta_separated", |f| {
        (
            f.base
                .jointly_continuous
                .as_bool()
                .map(|j| j && f.base.hausdorff),
            Some(f.base.gdelta_separated),
        )
    }),
    ("t1 <=> t2 <=> discrete", |f| {
        (
            Some(true),
            Some(f.tp.t1 == f.base.hausdorff && f.tp.t1 == f.discrete),
        )
    }),
];

fn semilattice_section(all: &[Arc<TopologizedSemilattice>], max_n: usize) -> Section {
    let units: Vec<Vec<Tally>> = all
        .par_iter()
        .map(|ts| {
            let f = TsFacts::new(ts);
            TS_CHECKS
                .iter()
                .map(|(_, check)| {
                    let mut t = Tally::default();
                    let (a, c) = check(&f);
                    t.record(a, c, || Structure::TopoSemilattice(ts.clone()).describe());
                    t
                })
                .collect()
        })
        .collect();
    let mut tallies = vec![Tally::default(); TS_CHECKS.len()];
    for unit in units {
        for (t, u) in tallies.iter_mut().zip(unit) {
            t.merge(u);
        }
    }
    Section {
        title: format!(
            "topologized semilattices, n = 1..{max_n}, {} structures",
            all.len()
        ),
        rows: TS_CHECKS
            .iter()
            .zip(tallies)
            .map(|((name, _), tally)| CheckRow {
                name: name.to_string(),
                tally,
            })
            .collect(),
    }
}

const THEOREM_SLOTS: &[(Profile, &str)] = &[
    (Profile::Cf, "hom"),
    (Profile::Ct, "hom"),
    (Profile::Gdelta, "hom"),
    (Profile::MultiT1, "allow_empty"),
    (Profile::MultiT1, "nonempty"),
    (Profile::MultiT2, "allow_empty"),
    (Profile::MultiT2, "nonempty"),
];

const INVARIANTS: &[&str] = &[
    "single-valued: is_multimorphism <=> is_homomorphism",
    "single-valued: upper semicontinuous <=> continuous",
    "homomorphisms are monotone",
];

struct MorphUnit {
    theorems: Vec<TheoremRow>,
    invariants: Vec<Tally>,
    lemma: Tally,
    claim: Tally,
}

impl MorphUnit {
    fn new() -> Self {
        MorphUnit {
            theorems: THEOREM_SLOTS
                .iter()
                .map(|&(p, m)| TheoremRow::new(p, m))
                .collect(),
            invariants: vec![Tally::default(); INVARIANTS.len()],
            lemma: Tally::default(),
            claim: Tally::default(),
        }
    }

    fn merge(&mut self, o: MorphUnit) {
        for (a, b) in self.theorems.iter_mut().zip(o.theorems) {
            a.merge(b);
        }
        for (a, b) in self.invariants.iter_mut().zip(o.invariants) {
            a.merge(b);
        }
        self.lemma.merge(o.lemma);
        self.claim.merge(o.claim);
    }
}

fn record_verdict(
    row: &mut TheoremRow,
    verdict: Result<crate::morphisms::Verdict>,
    describe: impl Fn() -> String,
) {
    let v = verdict.expect("profile matches morphism type");
    row.instances += 1;
    let hold = v.hypotheses_hold();
    row.hypotheses_hold += hold as u64;
    row.conclusion_holds += v.conclusion as u64;
    if !v.consistent {
        row.inconsistent += 1;
        if row.first_inconsistent.is_none() {
            row.first_inconsistent = Some(describe());
        }
    }
    if !hold && !v.conclusion {
        row.load_bearing += 1;
        if row.first_load_bearing.is_none() {
            row.first_load_bearing = Some(describe());
        }
    }
}

struct Indexed {
    all: Vec<Arc<TopologizedSemilattice>>,
    /// Index into `sls` of each structure's semilattice.
    sl_of: Vec<usize>,
    sls: Vec<Semilattice>,
}

fn indexed(max_n: usize) -> Indexed {
    let mut out = Indexed {
        all: Vec::new(),
        sl_of: Vec::new(),
        sls: Vec::new(),
    };
    for n in 1..=max_n {
        let per = generate::topologies(n).len();
        let offset = out.sls.len();
        out.sls.extend(generate::semilattices(n).iter().cloned());
        for (i, ts) in generate::topo_semilattices(n).into_iter().enumerate() {
            out.sl_of.push(offset + i / per);
            out.all.push(ts);
        }
    }
    out
}

fn morphism_sweep(ix: &Indexed) -> MorphUnit {
    let facts: Vec<StructureFacts<'_>> =
        ix.all.par_iter().map(|t| StructureFacts::new(t)).collect();
    let weakly_up: Vec<bool> = ix
        .all
        .par_iter()
        .map(|t| t.as_topo_poset().is_weakly_up_closed())
        .collect();
    let k = ix.sls.len();
    let homs: Vec<Vec<SemilatticeHom>> = (0..k * k)
        .into_par_iter()
        .map(|c| generate::homomorphisms(&ix.sls[c / k], &ix.sls[c % k]))
        .collect();
    let multis: Vec<Vec<Multimorphism>> = (0..k * k)
        .into_par_iter()
        .map(|c| generate::multimorphisms(&ix.sls[c / k], &ix.sls[c % k], ValueMode::AllowEmpty))
        .collect();
    let units: Vec<MorphUnit> = (0..ix.all.len())
        .into_par_iter()
        .map(|i| {
            let mut u = MorphUnit::new();
            let x = &ix.all[i];
            for j in 0..ix.all.len() {
                let y = &ix.all[j];
                let cell = ix.sl_of[i] * k + ix.sl_of[j];
                let (fx, fy) = (&facts[i], &facts[j]);
                for h in &homs[cell] {
                    let describe = || {
                        Structure::HomPair(MorphismPair {
                            x: x.clone(),
                            y: y.clone(),
                            morphism: h.clone(),
                        })
                        .describe()
                    };
                    for (slot, &(profile, _)) in THEOREM_SLOTS.iter().enumerate().take(3) {
                        let v = verify_with_facts(profile, fx, fy, Morphism::Hom(h));
                        record_verdict(&mut u.theorems[slot], v, describe);
                    }
                    u.invariants[2].record(
                        Some(true),
                        Some(is_monotone(h, x.order(), y.order())),
                        describe,
                    );
                    let continuous = is_continuous(h, x.topology(), y.topology());
                    if continuous && h.is_surjective() && weakly_up[j] {
                        for c in 0..y.n() {
                            let r = hom_inf_fiber(h, x, y, c);
                            u.lemma.record(Some(true), Some(r.is_ok()), || match r {
                                Err(e) => e.to_string(),
                                Ok(_) => unreachable!(),
                            });
                        }
                    }
                    if continuous {
                        let report = verify_gdelta_claim(x, y, h).expect("hypotheses checked");
                        u.claim
                            .record(Some(true), Some(report.violations.is_empty()), || {
                                format!("{}; violations {:?}", describe(), report.violations)
                            });
                    }
                }
                for phi in &multis[cell] {
                    let describe = || {
                        Structure::MultimorphismPair(MorphismPair {
                            x: x.clone(),
                            y: y.clone(),
                            morphism: phi.clone(),
                        })
                        .describe()
                    };
                    for (base, profile) in [(3, Profile::MultiT1), (5, Profile::MultiT2)] {
                        let v = verify_with_facts(profile, fx, fy, Morphism::Multi(phi));
                        if phi.is_nonempty_valued() {
                            let v2 = v.clone();
                            record_verdict(&mut u.theorems[base + 1], v2, describe);
                        }
                        record_verdict(&mut u.theorems[base], v, describe);
                    }
                }
                for map in generate::all_maps(x.n(), y.n()) {
                    let h = SemilatticeHom::new(map, y.n()).expect("in range");
                    let phi = h.to_multimorphism();
                    let describe = || format!("map {:?} from X {} to Y {}", h.map(), i, j);
                    let hom = is_homomorphism(&h, x.semilattice(), y.semilattice());
                    let multi = is_multimorphism(&phi, x.semilattice(), y.semilattice());
                    u.invariants[0].record(Some(true), Some(hom == multi), describe);
                    let cont = is_continuous(&h, x.topology(), y.topology());
                    let usc = is_upper_semicontinuous(&phi, x.topology(), y.topology());
                    u.invariants[1].record(Some(true), Some(cont == usc), describe);
                }
            }
            u
        })
        .collect();
    let mut total = MorphUnit::new();
    for u in units {
        total.merge(u);
    }
    total
}

/// Runs every audit section up to `max_n` points.
///
/// Topologized posets are swept for `n = 1..=max_n`; semilattice and
/// morphism sections stop at [`SEMILATTICE_AUDIT_MAX_N`].
pub fn implication_audit(max_n: usize, workers: usize) -> Result<AuditReport> {
    if max_n > AUDIT_MAX_N {
        return Err(Error::CapacityExceeded {
            what: "audit carrier",
            size: max_n,
            cap: AUDIT_MAX_N,
        });
    }
    with_pool(workers, || {
        let (tp, strictness) = topo_poset_section(max_n);
        let m = max_n.min(SEMILATTICE_AUDIT_MAX_N);
        let ix = indexed(m);
        let ts = semilattice_section(&ix.all, m);
        let sweep = morphism_sweep(&ix);
        let scope = format!("|X|, |Y| = 1..{m}");
        let invariants = Section {
            title: format!("morphism invariants, {scope}"),
            rows: INVARIANTS
                .iter()
                .zip(sweep.invariants)
                .map(|(name, tally)| CheckRow {
                    name: name.to_string(),
                    tally,
                })
                .collect(),
        };
        let lemma = Section {
            title: format!("infimum of fibers, {scope}"),
            rows: vec![CheckRow {
                name: "h(b_c) = c and b_c = inf h^-1(up c)".into(),
                tally: sweep.lemma,
            }],
        };
        let claim = Section {
            title: format!("closed-neighborhood intersections meet the image, {scope}"),
            rows: vec![CheckRow {
                name: "Z meets every subsemilattice intersection".into(),
                tally: sweep.claim,
            }],
        };
        let sections = vec![tp, ts, invariants, lemma, claim];
        let violations = sections.iter().map(Section::violations).sum::<u64>()
            + sweep.theorems.iter().map(|t| t.inconsistent).sum::<u64>();
        Ok(AuditReport {
            max_n,
            sections,
            strictness,
            theorems: sweep.theorems,
            violations,
        })
    })
}
