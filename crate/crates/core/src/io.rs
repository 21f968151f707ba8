//! Structure files and DOT export.
//!
//! A structure file is a JSON object
//!
//! ```json
//! {"n":3,"kind":"poset","order":[[0,1],[1,2]],"opens":[[],[2],[1,2],[0,1,2]]}
//! ```
//!
//! `kind` is `poset` (with `order`, a list of pairs `i ≤ j` closed up
//! reflexively and transitively), `semilattice` (with `op`, the full `n × n`
//! table) or `topology` (neither). `opens` lists the open sets; when absent
//! the discrete topology is used and [`Loaded::discrete_default`] is set.
//!
//! The canonical form lists the covering pairs of the order and every open
//! set, each with points ascending, sets ordered as point lists.

use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::order::FinitePoset;
use crate::semilattice::{Semilattice, TopologizedSemilattice};
use crate::structure::Structure;
use crate::topo_poset::TopologizedPoset;
use crate::topology::FiniteTopology;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FileKind {
    Poset,
    Semilattice,
    Topology,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub n: usize,
    pub kind: FileKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub op: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opens: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Loaded {
    pub structure: Structure,
    /// No `opens` were given, so the discrete topology was used.
    pub discrete_default: bool,
}

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    let start: usize = text
        .split_inclusive('\n')
        .take(line.saturating_sub(1))
        .map(str::len)
        .sum();
    (start + column.saturating_sub(1)).min(text.len())
}

fn mask(points: &[usize], n: usize) -> Result<SubsetMask> {
    if let Some(&p) = points.iter().find(|&&p| p >= n) {
        return Err(Error::IndexOutOfRange { index: p, n });
    }
    SubsetMask::from_points(points.iter().copied(), n)
}

fn sorted_opens(t: &FiniteTopology) -> Vec<Vec<usize>> {
    let mut opens: Vec<Vec<usize>> = t.opens().iter().map(|u| u.to_vec()).collect();
    opens.sort();
    opens
}

impl StructureFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            position: byte_offset(text, e.line(), e.column()),
            message: e.to_string(),
        })
    }

    /// Validates the file and builds the structure it describes.
    pub fn load(&self) -> Result<Loaded> {
        let n = self.n;
        let misplaced = |field: &str| {
            Err(Error::InvalidFile(format!(
                "\"{field}\" is not allowed for kind \"{}\"",
                self.kind.name()
            )))
        };
        let topology = match &self.opens {
            Some(list) => {
                let family = list
                    .iter()
                    .map(|u| mask(u, n))
                    .collect::<Result<Vec<_>>>()?;
                FiniteTopology::from_opens(n, &family)?
            }
            None => FiniteTopology::discrete(n)?,
        };
        let topology = Arc::new(topology);
        let structure = match self.kind {
            FileKind::Poset => {
                if self.op.is_some() {
                    return misplaced("op");
                }
                let Some(order) = &self.order else {
                    return Err(Error::InvalidFile("kind \"poset\" needs \"order\"".into()));
                };
                let pairs: Vec<(usize, usize)> = order.iter().map(|&[a, b]| (a, b)).collect();
                let poset = FinitePoset::from_relation(n, &pairs)?;
                Structure::TopoPoset(TopologizedPoset::new(poset, topology)?)
            }
            FileKind::Semilattice => {
                if self.order.is_some() {
                    return misplaced("order");
                }
                let Some(op) = &self.op else {
                    return Err(Error::InvalidFile(
                        "kind \"semilattice\" needs \"op\"".into(),
                    ));
                };
                if op.len() != n {
                    return Err(Error::SizeMismatch {
                        left: op.len(),
                        right: n,
                    });
                }
                let sl = Semilattice::from_table(op)?;
                Structure::TopoSemilattice(Arc::new(TopologizedSemilattice::new(sl, topology)?))
            }
            FileKind::Topology => {
                if self.order.is_some() {
                    return misplaced("order");
                }
                if self.op.is_some() {
                    return misplaced("op");
                }
                Structure::Topology(topology)
            }
        };
        Ok(Loaded {
            structure,
            discrete_default: self.opens.is_none(),
        })
    }

    /// Canonical file for a single-carrier structure with a topology; bare
    /// posets and semilattices get the discrete topology written out.
    pub fn from_structure(s: &Structure) -> Result<Self> {
        let covers = |p: &FinitePoset| -> Vec<[usize; 2]> {
            p.covers().into_iter().map(|(a, b)| [a, b]).collect()
        };
        let discrete = |n| FiniteTopology::discrete(n).map(|t| sorted_opens(&t));
        let file = |n, kind, order, op, opens| StructureFile {
            n,
            kind,
            order,
            op,
            opens: Some(opens),
        };
        Ok(match s {
            Structure::Topology(t) => file(t.n(), FileKind::Topology, None, None, sorted_opens(t)),
            Structure::Poset(p) => file(
                p.n(),
                FileKind::Poset,
                Some(covers(p)),
                None,
                discrete(p.n())?,
            ),
            Structure::Semilattice(sl) => file(
                sl.n(),
                FileKind::Semilattice,
                None,
                Some(sl.rows()),
                discrete(sl.n())?,
            ),
            Structure::TopoPoset(tp) => file(
                tp.n(),
                FileKind::Poset,
                Some(covers(tp.poset())),
                None,
                sorted_opens(tp.topology()),
            ),
            Structure::TopoSemilattice(ts) => file(
                ts.n(),
                FileKind::Semilattice,
                None,
                Some(ts.semilattice().rows()),
                sorted_opens(ts.topology()),
            ),
            Structure::HomPair(_) | Structure::MultimorphismPair(_) => {
                return Err(Error::InvalidFile(format!(
                    "{} has no structure-file form",
                    s.kind().name()
                )))
            }
        })
    }

    /// Compact JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string(self).expect("plain data serializes");
        out.push('\n');
        out
    }
}

impl FileKind {
    pub fn name(self) -> &'static str {
        match self {
            FileKind::Poset => "poset",
            FileKind::Semilattice => "semilattice",
            FileKind::Topology => "topology",
        }
    }
}

pub fn load(text: &str) -> Result<Loaded> {
    StructureFile::parse(text)?.load()
}

/// Parses, validates and writes back the canonical form of a file.
pub fn canonicalize(text: &str) -> Result<String> {
    let loaded = load(text)?;
    Ok(StructureFile::from_structure(&loaded.structure)?.to_json())
}

/// DOT digraph of the covering relation of the order, nodes ascending and
/// edges in lexicographic order. With `specialization`, the edges are
/// instead every pair `x → y` with `x ≠ y` and `x` below `y` in the
/// specialization preorder of the topology.
pub fn to_dot(s: &Structure, specialization: bool) -> Result<String> {
    let n = s.n();
    let edges: Vec<(usize, usize)> = if specialization {
        let t = match s {
            Structure::Topology(t) => t.as_ref(),
            Structure::TopoPoset(tp) => tp.topology(),
            Structure::TopoSemilattice(ts) => ts.topology(),
            _ => {
                return Err(Error::NotApplicable {
                    name: "specialization",
                    needs: "a topology",
                })
            }
        };
        let pre = t.specialization_preorder();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| x != y && pre.le(x, y))
            .collect()
    } else {
        match s {
            Structure::Topology(_) => Vec::new(),
            Structure::Poset(p) => p.covers(),
            Structure::TopoPoset(tp) => tp.poset().covers(),
            Structure::Semilattice(sl) => sl.natural_order().covers(),
            Structure::TopoSemilattice(ts) => ts.order().covers(),
            _ => {
                return Err(Error::NotApplicable {
                    name: "hasse",
                    needs: "a single carrier",
                })
            }
        }
    };
    let mut edges = edges;
    edges.sort_unstable();
    let name = if specialization {
        "specialization"
    } else {
        "hasse"
    };
    let mut out = format!("digraph {name} {{\n");
    for x in 0..n {
        let _ = writeln!(out, "  {x};");
    }
    for (x, y) in edges {
        let _ = writeln!(out, "  {x} -> {y};");
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SIERPINSKI_CHAIN: &str =
        r#"{"n":2,"kind":"poset","order":[[0,1]],"opens":[[],[0,1],[1]]}"#;

    #[test]
    fn round_trip_is_stable() {
        let once = canonicalize(SIERPINSKI_CHAIN).unwrap();
        assert_eq!(once, format!("{SIERPINSKI_CHAIN}\n"));
        assert_eq!(canonicalize(&once).unwrap(), once);
    }

    #[test]
    fn order_is_reduced_to_covers() {
        let text = r#"{"n":3,"kind":"poset","order":[[0,2],[1,2],[0,1],[0,0]],"opens":[[2],[1,2],[0,1,2],[]]}"#;
        let canon = canonicalize(text).unwrap();
        assert_eq!(
            canon,
            "{\"n\":3,\"kind\":\"poset\",\"order\":[[0,1],[1,2]],\"opens\":[[],[0,1,2],[1,2],[2]]}\n"
        );
    }

    #[test]
    fn missing_opens_means_discrete() {
        let l = load(r#"{"n":2,"kind":"semilattice","op":[[0,0],[0,1]]}"#).unwrap();
        assert!(l.discrete_default);
        let Structure::TopoSemilattice(ts) = &l.structure else {
            panic!()
        };
        assert!(ts.topology().is_discrete());
    }

    #[test]
    fn rejections() {
        assert!(matches!(load("{\"n\":2,"), Err(Error::Parse { .. })));
        assert!(matches!(
            load(r#"{"n":2,"kind":"poset","order":[[0,1]],"op":[[0]]}"#),
            Err(Error::InvalidFile(_))
        ));
        assert!(matches!(
            load(r#"{"n":2,"kind":"poset","order":[[0,1],[1,0]]}"#),
            Err(Error::NotAntisymmetric { .. })
        ));
        assert!(matches!(
            load(r#"{"n":2,"kind":"semilattice","op":[[0,1],[0,1]]}"#),
            Err(Error::NotCommutative { .. })
        ));
        assert!(matches!(
            load(r#"{"n":2,"kind":"topology","opens":[[0],[0,1]]}"#),
            Err(Error::NotATopology(_))
        ));
        assert!(matches!(
            load(r#"{"n":2,"kind":"poset","order":[[0,2]]}"#),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            load(r#"{"n":2,"kind":"poset","order":[],"extra":1}"#),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn parse_position_is_a_byte_offset() {
        let text = "{\"n\": 2,\n \"kind\": @}";
        let Err(Error::Parse { position, .. }) = load(text) else {
            panic!()
        };
        assert_eq!(&text[position..position + 1], "@");
    }

    #[test]
    fn chain_dot() {
        let l = load(r#"{"n":3,"kind":"poset","order":[[0,1],[1,2]]}"#).unwrap();
        assert_eq!(
            to_dot(&l.structure, false).unwrap(),
            "digraph hasse {\n  0;\n  1;\n  2;\n  0 -> 1;\n  1 -> 2;\n}\n"
        );
        // discrete: the specialization preorder is trivial
        assert_eq!(
            to_dot(&l.structure, true).unwrap(),
            "digraph specialization {\n  0;\n  1;\n  2;\n}\n"
        );
        let s = load(SIERPINSKI_CHAIN).unwrap().structure;
        assert!(to_dot(&s, true).unwrap().contains("  0 -> 1;\n"));
    }
}
