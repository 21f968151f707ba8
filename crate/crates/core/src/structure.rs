//! A tagged union over every structure kind the engine enumerates, with
//! the byte encoding that orders streams and defines canonical forms.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::morphisms::{Multimorphism, SemilatticeHom};
use crate::order::FinitePoset;
use crate::predicate::Subject;
use crate::semilattice::{Semilattice, TopologizedSemilattice};
use crate::topo_poset::TopologizedPoset;
use crate::topology::FiniteTopology;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Topology,
    Poset,
    Semilattice,
    TopoPoset,
    TopoSemilattice,
    HomPair,
    MultimorphismPair,
}

impl Kind {
    pub const ALL: [Kind; 7] = [
        Kind::Topology,
        Kind::Poset,
        Kind::Semilattice,
        Kind::TopoPoset,
        Kind::TopoSemilattice,
        Kind::HomPair,
        Kind::MultimorphismPair,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Topology => "topology",
            Kind::Poset => "poset",
            Kind::Semilattice => "semilattice",
            Kind::TopoPoset => "topo_poset",
            Kind::TopoSemilattice => "topo_semilattice",
            Kind::HomPair => "hom_pair",
            Kind::MultimorphismPair => "multimorphism_pair",
        }
    }

    pub fn is_pair(self) -> bool {
        matches!(self, Kind::HomPair | Kind::MultimorphismPair)
    }

    fn tag(self) -> u8 {
        self as u8
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidFile(format!("unknown structure kind `{s}`")))
    }
}

/// Topologized semilattices `X`, `Y` with a morphism between them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MorphismPair<M> {
    pub x: Arc<TopologizedSemilattice>,
    pub y: Arc<TopologizedSemilattice>,
    pub morphism: M,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Structure {
    Topology(Arc<FiniteTopology>),
    Poset(FinitePoset),
    Semilattice(Semilattice),
    TopoPoset(TopologizedPoset),
    TopoSemilattice(Arc<TopologizedSemilattice>),
    HomPair(MorphismPair<SemilatticeHom>),
    MultimorphismPair(MorphismPair<Multimorphism>),
}

/// A relabeling `old → new` together with its inverse.
pub(crate) struct Relabel<'a> {
    pub fwd: &'a [usize],
    pub inv: &'a [usize],
}

fn push_rows(out: &mut Vec<u8>, rows: &[SubsetMask], r: &Relabel<'_>) {
    for &old in r.inv {
        out.extend_from_slice(&rows[old].permute(r.fwd).bits().to_be_bytes());
    }
}

fn push_table(out: &mut Vec<u8>, sl: &Semilattice, r: &Relabel<'_>) {
    for &a in r.inv {
        for &b in r.inv {
            out.push(r.fwd[sl.meet(a, b)] as u8);
        }
    }
}

fn push_ts(out: &mut Vec<u8>, ts: &TopologizedSemilattice, r: &Relabel<'_>) {
    push_table(out, ts.semilattice(), r);
    push_rows(out, ts.topology().min_nbhds(), r);
}

impl Structure {
    pub fn kind(&self) -> Kind {
        match self {
            Structure::Topology(_) => Kind::Topology,
            Structure::Poset(_) => Kind::Poset,
            Structure::Semilattice(_) => Kind::Semilattice,
            Structure::TopoPoset(_) => Kind::TopoPoset,
            Structure::TopoSemilattice(_) => Kind::TopoSemilattice,
            Structure::HomPair(_) => Kind::HomPair,
            Structure::MultimorphismPair(_) => Kind::MultimorphismPair,
        }
    }

    /// Carrier size; the domain size for morphism pairs.
    pub fn n(&self) -> usize {
        match self {
            Structure::Topology(t) => t.n(),
            Structure::Poset(p) => p.n(),
            Structure::Semilattice(s) => s.n(),
            Structure::TopoPoset(tp) => tp.n(),
            Structure::TopoSemilattice(ts) => ts.n(),
            Structure::HomPair(p) => p.x.n(),
            Structure::MultimorphismPair(p) => p.x.n(),
        }
    }

    /// Codomain size for morphism pairs.
    pub fn n_y(&self) -> Option<usize> {
        match self {
            Structure::HomPair(p) => Some(p.y.n()),
            Structure::MultimorphismPair(p) => Some(p.y.n()),
            _ => None,
        }
    }

    pub fn subject(&self) -> Option<Subject<'_>> {
        match self {
            Structure::Topology(t) => Some(Subject::Topology(t)),
            Structure::TopoPoset(tp) => Some(Subject::TopoPoset(tp)),
            Structure::TopoSemilattice(ts) => Some(Subject::TopoSemilattice(ts)),
            _ => None,
        }
    }

    /// One-line human-readable summary.
    pub fn describe(&self) -> String {
        fn opens(t: &FiniteTopology) -> String {
            let list: Vec<String> = t.opens().iter().map(|u| u.to_string()).collect();
            format!("opens [{}]", list.join(","))
        }
        fn order(p: &FinitePoset) -> String {
            let list: Vec<String> = p.covers().iter().map(|(a, b)| format!("{a}<{b}")).collect();
            format!("covers [{}]", list.join(","))
        }
        fn ts(t: &TopologizedSemilattice) -> String {
            format!("op {:?} {}", t.semilattice().rows(), opens(t.topology()))
        }
        match self {
            Structure::Topology(t) => format!("n={} {}", t.n(), opens(t)),
            Structure::Poset(p) => format!("n={} {}", p.n(), order(p)),
            Structure::Semilattice(s) => format!("n={} op {:?}", s.n(), s.rows()),
            Structure::TopoPoset(tp) => {
                format!(
                    "n={} {} {}",
                    tp.n(),
                    order(tp.poset()),
                    opens(tp.topology())
                )
            }
            Structure::TopoSemilattice(t) => format!("n={} {}", t.n(), ts(t)),
            Structure::HomPair(p) => format!(
                "X: n={} {}; Y: n={} {}; h = {:?}",
                p.x.n(),
                ts(&p.x),
                p.y.n(),
                ts(&p.y),
                p.morphism.map()
            ),
            Structure::MultimorphismPair(p) => {
                let values: Vec<String> =
                    p.morphism.values().iter().map(|v| v.to_string()).collect();
                format!(
                    "X: n={} {}; Y: n={} {}; phi = [{}]",
                    p.x.n(),
                    ts(&p.x),
                    p.y.n(),
                    ts(&p.y),
                    values.join(",")
                )
            }
        }
    }

    /// Byte encoding under the identity labeling.
    pub fn encode(&self) -> Vec<u8> {
        let id_x: Vec<usize> = (0..self.n()).collect();
        let id_y: Vec<usize> = (0..self.n_y().unwrap_or(0)).collect();
        let mut out = Vec::new();
        self.encode_into(
            &Relabel {
                fwd: &id_x,
                inv: &id_x,
            },
            &Relabel {
                fwd: &id_y,
                inv: &id_y,
            },
            &mut out,
        );
        out
    }

    /// Encoding of the structure relabeled by `rx` (and `ry` on the
    /// codomain of a morphism pair), written into `out`.
    ///
    /// Layout: kind tag, sizes, then per-point rows in new-label order.
    /// Orders and topologies contribute one big-endian `u16` mask per point
    /// (the upper cone, resp. the minimal open neighborhood); semilattices
    /// contribute their table row-major.
    pub(crate) fn encode_into(&self, rx: &Relabel<'_>, ry: &Relabel<'_>, out: &mut Vec<u8>) {
        out.clear();
        out.push(self.kind().tag());
        out.push(self.n() as u8);
        match self {
            Structure::Topology(t) => push_rows(out, t.min_nbhds(), rx),
            Structure::Poset(p) => push_rows(out, p.up_sets(), rx),
            Structure::Semilattice(s) => push_table(out, s, rx),
            Structure::TopoPoset(tp) => {
                push_rows(out, tp.poset().up_sets(), rx);
                push_rows(out, tp.topology().min_nbhds(), rx);
            }
            Structure::TopoSemilattice(ts) => push_ts(out, ts, rx),
            Structure::HomPair(p) => {
                out.push(p.y.n() as u8);
                push_ts(out, &p.x, rx);
                push_ts(out, &p.y, ry);
                for &old in rx.inv {
                    out.push(ry.fwd[p.morphism.apply(old)] as u8);
                }
            }
            Structure::MultimorphismPair(p) => {
                out.push(p.y.n() as u8);
                push_ts(out, &p.x, rx);
                push_ts(out, &p.y, ry);
                for &old in rx.inv {
                    out.extend_from_slice(
                        &p.morphism.value(old).permute(ry.fwd).bits().to_be_bytes(),
                    );
                }
            }
        }
    }

    /// Relabels the carrier by `px` (old `x` becomes `px[x]`) and, for
    /// morphism pairs, the codomain by `py`.
    pub fn permuted(&self, px: &[usize], py: &[usize]) -> Structure {
        match self {
            Structure::Topology(t) => Structure::Topology(Arc::new(t.permuted(px))),
            Structure::Poset(p) => Structure::Poset(p.permuted(px)),
            Structure::Semilattice(s) => Structure::Semilattice(s.permuted(px)),
            Structure::TopoPoset(tp) => Structure::TopoPoset(tp.permuted(px)),
            Structure::TopoSemilattice(ts) => Structure::TopoSemilattice(Arc::new(ts.permuted(px))),
            Structure::HomPair(p) => {
                let mut map = vec![0; p.x.n()];
                for (x, &y) in p.morphism.map().iter().enumerate() {
                    map[px[x]] = py[y];
                }
                Structure::HomPair(MorphismPair {
                    x: Arc::new(p.x.permuted(px)),
                    y: Arc::new(p.y.permuted(py)),
                    morphism: SemilatticeHom::new(map, p.y.n()).expect("relabeled in range"),
                })
            }
            Structure::MultimorphismPair(p) => {
                let mut values = vec![SubsetMask::EMPTY; p.x.n()];
                for (x, v) in p.morphism.values().iter().enumerate() {
                    values[px[x]] = v.permute(py);
                }
                Structure::MultimorphismPair(MorphismPair {
                    x: Arc::new(p.x.permuted(px)),
                    y: Arc::new(p.y.permuted(py)),
                    morphism: Multimorphism::new(values, p.y.n()).expect("relabeled in range"),
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kind_names_round_trip() {
        for k in Kind::ALL {
            assert_eq!(k.name().parse::<Kind>().unwrap(), k);
        }
    }

    #[test]
    fn encoding_layout() {
        let s = Structure::Poset(FinitePoset::chain(2).unwrap());
        assert_eq!(s.encode(), vec![Kind::Poset as u8, 2, 0, 0b11, 0, 0b10]);
        let swapped = s.permuted(&[1, 0], &[]);
        assert_eq!(
            swapped.encode(),
            vec![Kind::Poset as u8, 2, 0, 0b01, 0, 0b11]
        );
    }

    #[test]
    fn permuted_encoding_matches_encode_into() {
        let t = FiniteTopology::from_opens(
            3,
            &[
                SubsetMask::EMPTY,
                SubsetMask::singleton(2),
                SubsetMask::from_bits(0b110),
                SubsetMask::full(3),
            ],
        )
        .unwrap();
        let s =
            Structure::TopoPoset(TopologizedPoset::new(FinitePoset::chain(3).unwrap(), t).unwrap());
        let fwd = [2, 0, 1];
        let inv = [1, 2, 0];
        let mut buf = Vec::new();
        s.encode_into(
            &Relabel {
                fwd: &fwd,
                inv: &inv,
            },
            &Relabel { fwd: &[], inv: &[] },
            &mut buf,
        );
        assert_eq!(buf, s.permuted(&fwd, &[]).encode());
    }
}
