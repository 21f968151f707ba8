//! Exhaustive enumeration, witness search and audits.
//!
//! Streams are ordered by encoding; see [`Structure::encode`]. Work is
//! split into fixed-size chunks that are processed in parallel and then
//! consumed in order, so results do not depend on the worker count.

pub mod audit;
pub mod canon;
pub mod generate;

use std::ops::ControlFlow;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::morphisms::{Multimorphism, SemilatticeHom, ValueMode};
use crate::predicate::PredicateExpr;
use crate::semilattice::TopologizedSemilattice;
use crate::structure::{Kind, MorphismPair, Structure};
use crate::topo_poset::TopologizedPoset;

pub use audit::{implication_audit, AuditReport};
pub use canon::{
    automorphisms, canonical_form, canonical_representative, is_canonical, CanonicalForm,
    CANONICAL_MAX_N,
};

pub const SINGLE_MAX_N: usize = 6;
pub const PAIRED_MAX_N: usize = 4;
pub const MORPHISM_MAX_N: usize = 3;

const CHUNK: usize = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct EnumSpec {
    pub kind: Kind,
    pub n: usize,
    /// Codomain size; only read for morphism pairs.
    pub n_y: usize,
    pub modulo_iso: bool,
    /// Empty-value policy; only read for multimorphism pairs.
    pub mode: ValueMode,
}

impl EnumSpec {
    pub fn new(kind: Kind, n: usize) -> Self {
        EnumSpec {
            kind,
            n,
            n_y: n,
            modulo_iso: false,
            mode: ValueMode::AllowEmpty,
        }
    }

    pub fn pair(kind: Kind, n_x: usize, n_y: usize) -> Self {
        EnumSpec {
            n_y,
            ..EnumSpec::new(kind, n_x)
        }
    }

    pub fn modulo_iso(self, on: bool) -> Self {
        EnumSpec {
            modulo_iso: on,
            ..self
        }
    }

    pub fn mode(self, mode: ValueMode) -> Self {
        EnumSpec { mode, ..self }
    }

    pub fn cap(kind: Kind) -> usize {
        match kind {
            Kind::Topology | Kind::Poset | Kind::Semilattice => SINGLE_MAX_N,
            Kind::TopoPoset | Kind::TopoSemilattice => PAIRED_MAX_N,
            Kind::HomPair | Kind::MultimorphismPair => MORPHISM_MAX_N,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let cap = Self::cap(self.kind);
        let size = if self.kind.is_pair() {
            self.n.max(self.n_y)
        } else {
            self.n
        };
        if size > cap {
            return Err(Error::CapacityExceeded {
                what: "enumeration carrier",
                size,
                cap,
            });
        }
        Ok(())
    }
}

/// Runs `f` on a pool with `workers` threads (0 picks the default).
pub fn with_pool<R: Send>(workers: usize, f: impl FnOnce() -> R + Send) -> R {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool")
        .install(f)
}

type Stream = Box<dyn Iterator<Item = Structure> + Send>;

/// Labeled structures in encoding order.
fn labeled(spec: &EnumSpec) -> Stream {
    let n = spec.n;
    match spec.kind {
        Kind::Topology => {
            let tops = generate::topologies(n);
            Box::new((0..tops.len()).map(move |i| Structure::Topology(tops[i].clone())))
        }
        Kind::Poset => {
            let ps = generate::posets(n);
            Box::new((0..ps.len()).map(move |i| Structure::Poset(ps[i].clone())))
        }
        Kind::Semilattice => {
            let ss = generate::semilattices(n);
            Box::new((0..ss.len()).map(move |i| Structure::Semilattice(ss[i].clone())))
        }
        Kind::TopoPoset => {
            let ps = generate::posets(n);
            let tops = generate::topologies(n);
            Box::new((0..ps.len()).flat_map(move |i| {
                let p = ps[i].clone();
                let tops = tops.clone();
                (0..tops.len()).map(move |j| {
                    Structure::TopoPoset(
                        TopologizedPoset::new(p.clone(), tops[j].clone()).expect("same size"),
                    )
                })
            }))
        }
        Kind::TopoSemilattice => {
            let all = generate::topo_semilattices(n);
            Box::new(all.into_iter().map(Structure::TopoSemilattice))
        }
        Kind::HomPair | Kind::MultimorphismPair => pairs(spec),
    }
}

enum Morphisms {
    Hom(Vec<SemilatticeHom>),
    Multi(Vec<Multimorphism>),
}

impl Morphisms {
    fn len(&self) -> usize {
        match self {
            Morphisms::Hom(v) => v.len(),
            Morphisms::Multi(v) => v.len(),
        }
    }

    fn pair(
        &self,
        k: usize,
        x: Arc<TopologizedSemilattice>,
        y: Arc<TopologizedSemilattice>,
    ) -> Structure {
        match self {
            Morphisms::Hom(v) => Structure::HomPair(MorphismPair {
                x,
                y,
                morphism: v[k].clone(),
            }),
            Morphisms::Multi(v) => Structure::MultimorphismPair(MorphismPair {
                x,
                y,
                morphism: v[k].clone(),
            }),
        }
    }
}

fn pairs(spec: &EnumSpec) -> Stream {
    let xs = Arc::new(generate::topo_semilattices(spec.n));
    let ys = Arc::new(generate::topo_semilattices(spec.n_y));
    let sx = generate::semilattices(spec.n);
    let sy = generate::semilattices(spec.n_y);
    let per_x = generate::topologies(spec.n).len();
    let per_y = generate::topologies(spec.n_y).len();
    let (kind, mode) = (spec.kind, spec.mode);
    // morphisms depend only on the semilattices
    let table: Arc<Vec<Morphisms>> = Arc::new(
        sx.iter()
            .flat_map(|a| {
                sy.iter().map(move |b| match kind {
                    Kind::HomPair => Morphisms::Hom(generate::homomorphisms(a, b)),
                    _ => Morphisms::Multi(generate::multimorphisms(a, b, mode)),
                })
            })
            .collect(),
    );
    let n_sy = sy.len();
    Box::new((0..xs.len()).flat_map(move |i| {
        let (xs, ys, table) = (xs.clone(), ys.clone(), table.clone());
        (0..ys.len()).flat_map(move |j| {
            let (x, y, table) = (xs[i].clone(), ys[j].clone(), table.clone());
            let cell = (i / per_x) * n_sy + j / per_y;
            (0..table[cell].len()).map(move |k| table[cell].pair(k, x.clone(), y.clone()))
        })
    }))
}

/// Feeds the stream of `spec` to `visit` chunk by chunk, already filtered
/// to canonical representatives when `modulo_iso` is set. Must be called
/// inside a pool.
fn for_each_chunk(
    spec: &EnumSpec,
    mut visit: impl FnMut(Vec<Structure>) -> ControlFlow<()>,
) -> Result<()> {
    spec.validate()?;
    let mut stream = labeled(spec);
    loop {
        let chunk: Vec<Structure> = stream.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            return Ok(());
        }
        let chunk = if spec.modulo_iso {
            let keep: Vec<bool> = chunk
                .par_iter()
                .map(|s| is_canonical(s).expect("within cap"))
                .collect();
            chunk
                .into_iter()
                .zip(keep)
                .filter_map(|(s, k)| k.then_some(s))
                .collect()
        } else {
            chunk
        };
        if visit(chunk).is_break() {
            return Ok(());
        }
    }
}

/// Every structure of the spec, in stream order.
pub fn enumerate(spec: &EnumSpec, workers: usize) -> Result<Vec<Structure>> {
    with_pool(workers, || {
        let mut out = Vec::new();
        for_each_chunk(spec, |chunk| {
            out.extend(chunk);
            ControlFlow::Continue(())
        })?;
        Ok(out)
    })
}

pub fn count(spec: &EnumSpec, workers: usize) -> Result<u64> {
    with_pool(workers, || {
        let mut total = 0u64;
        for_each_chunk(spec, |chunk| {
            total += chunk.len() as u64;
            ControlFlow::Continue(())
        })?;
        Ok(total)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub structure: Structure,
    /// Position in the stream of its size, counting from 0.
    pub index: u64,
    pub canonical: CanonicalForm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessOutcome {
    Found(Witness),
    /// No witness in the whole space. `undetermined` counts structures on
    /// which the expression could not be decided.
    Exhausted {
        examined: u64,
        undetermined: u64,
    },
    BudgetExceeded {
        examined: u64,
    },
}

/// First structure of `spec` satisfying `expr`, examining at most `budget`
/// structures.
pub fn find_witness(
    expr: &PredicateExpr,
    spec: &EnumSpec,
    budget: u64,
    workers: usize,
) -> Result<WitnessOutcome> {
    expr.check_kind(spec.kind)?;
    with_pool(workers, || {
        let mut examined = 0u64;
        let mut undetermined = 0u64;
        let mut outcome = None;
        for_each_chunk(spec, |mut chunk| {
            let room = budget - examined;
            let over = chunk.len() as u64 > room;
            chunk.truncate(room.min(chunk.len() as u64) as usize);
            let values: Vec<Option<bool>> = chunk
                .par_iter()
                .map(|s| {
                    expr.evaluate(s.subject().expect("kind checked"))
                        .expect("kind checked")
                })
                .collect();
            if let Some(pos) = values.iter().position(|v| *v == Some(true)) {
                let structure = chunk.swap_remove(pos);
                let canonical = canonical_form(&structure).expect("within cap");
                outcome = Some(WitnessOutcome::Found(Witness {
                    structure,
                    index: examined + pos as u64,
                    canonical,
                }));
                return ControlFlow::Break(());
            }
            examined += chunk.len() as u64;
            undetermined += values.iter().filter(|v| v.is_none()).count() as u64;
            if over {
                outcome = Some(WitnessOutcome::BudgetExceeded { examined });
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        })?;
        Ok(outcome.unwrap_or(WitnessOutcome::Exhausted {
            examined,
            undetermined,
        }))
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub outcome: WitnessOutcome,
    /// Carrier size of the witness, or the largest size searched.
    pub n: usize,
}

/// Runs [`find_witness`] for `n = 1, .., max_n`, sharing one budget.
pub fn search_up_to(
    expr: &PredicateExpr,
    kind: Kind,
    max_n: usize,
    budget: u64,
    modulo_iso: bool,
    workers: usize,
) -> Result<SearchReport> {
    expr.check_kind(kind)?;
    EnumSpec::new(kind, max_n).validate()?;
    let mut examined = 0u64;
    let mut undetermined = 0u64;
    for n in 1..=max_n {
        let spec = EnumSpec::new(kind, n).modulo_iso(modulo_iso);
        match find_witness(expr, &spec, budget - examined, workers)? {
            WitnessOutcome::Found(w) => {
                return Ok(SearchReport {
                    outcome: WitnessOutcome::Found(w),
                    n,
                })
            }
            WitnessOutcome::Exhausted {
                examined: e,
                undetermined: u,
            } => {
                examined += e;
                undetermined += u;
            }
            WitnessOutcome::BudgetExceeded { examined: e } => {
                return Ok(SearchReport {
                    outcome: WitnessOutcome::BudgetExceeded {
                        examined: examined + e,
                    },
                    n,
                })
            }
        }
    }
    Ok(SearchReport {
        outcome: WitnessOutcome::Exhausted {
            examined,
            undetermined,
        },
        n: max_n,
    })
}
