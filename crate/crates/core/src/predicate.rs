//! Named predicates and boolean expressions over them.
//!
//! Grammar, with precedence `!` > `&` > `|`:
//!
//! ```text
//! expr   := term ('|' term)*
//! term   := factor ('&' factor)*
//! factor := '!' factor | '(' expr ')' | identifier
//! ```

use std::fmt;

use crate::error::{Error, Result};
use crate::semilattice::TopologizedSemilattice;
use crate::structure::Kind;
use crate::topo_poset::TopologizedPoset;
use crate::topology::FiniteTopology;
use crate::Flag;

macro_rules! predicates {
    ($($variant:ident => $name:literal, $doc:literal;)*) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Predicate {
            $(#[doc = $doc] $variant,)*
        }

        impl Predicate {
            pub const ALL: &'static [Predicate] = &[$(Predicate::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Predicate::$variant => $name,)*
                }
            }

            pub fn description(self) -> &'static str {
                match self {
                    $(Predicate::$variant => $doc,)*
                }
            }
        }
    };
}

predicates! {
    Complete => "complete", "every nonempty directed set has sup/inf in its closure";
    UpClosed => "up_closed", "every upper cone is closed";
    DownClosed => "down_closed", "every lower cone is closed";
    UpDownClosedPair => "up_down_closed_pair", "up_closed and down_closed";
    UpdownClosed => "updown_closed", "every union of upper and lower cone is closed";
    Pospace => "pospace", "the order is closed in the square";
    ChainClosed => "chain_closed", "the closure of every chain is a chain";
    WeaklyUpClosed => "weakly_up_closed", "the closure of each point lies in its upper cone";
    ChainCompact => "chain_compact", "every closed chain is compact";
    ZarCompact => "zar_compact", "the weak-star topology is compact";
    SepCont => "sep_cont", "the operation is separately continuous";
    JointCont => "joint_cont", "the operation is jointly continuous";
    VSemilattice => "v_semilattice", "V-semilattice";
    Lawson => "lawson", "there is a base of open subsemilattices";
    GdeltaSeparated => "gdelta_separated", "distinct points are separated by closed-neighborhood intersections that are subsemilattices";
    T0 => "t0", "T0 separation";
    T1 => "t1", "T1 separation";
    T2 => "t2", "Hausdorff";
}

impl Predicate {
    pub fn from_name(name: &str) -> Option<Predicate> {
        Predicate::ALL.iter().copied().find(|p| p.name() == name)
    }

    fn needs(self) -> Needs {
        use Predicate::*;
        match self {
            T0 | T1 | T2 => Needs::Topology,
            Complete | UpClosed | DownClosed | UpDownClosedPair | UpdownClosed | Pospace
            | ChainClosed | WeaklyUpClosed | ChainCompact => Needs::TopoPoset,
            ZarCompact | SepCont | JointCont | VSemilattice | Lawson | GdeltaSeparated => {
                Needs::TopoSemilattice
            }
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Needs {
    Topology,
    TopoPoset,
    TopoSemilattice,
}

impl Needs {
    fn label(self) -> &'static str {
        match self {
            Needs::Topology => "topology",
            Needs::TopoPoset => "topologized poset",
            Needs::TopoSemilattice => "topologized semilattice",
        }
    }
}

/// Anything predicates can be evaluated on.
#[derive(Debug, Clone, Copy)]
pub enum Subject<'a> {
    Topology(&'a FiniteTopology),
    TopoPoset(&'a TopologizedPoset),
    TopoSemilattice(&'a TopologizedSemilattice),
}

impl<'a> Subject<'a> {
    fn topology(self) -> &'a FiniteTopology {
        match self {
            Subject::Topology(t) => t,
            Subject::TopoPoset(tp) => tp.topology(),
            Subject::TopoSemilattice(ts) => ts.topology(),
        }
    }

    fn topo_poset(self) -> Option<&'a TopologizedPoset> {
        match self {
            Subject::Topology(_) => None,
            Subject::TopoPoset(tp) => Some(tp),
            Subject::TopoSemilattice(ts) => Some(ts.as_topo_poset()),
        }
    }

    fn level(self) -> Needs {
        match self {
            Subject::Topology(_) => Needs::Topology,
            Subject::TopoPoset(_) => Needs::TopoPoset,
            Subject::TopoSemilattice(_) => Needs::TopoSemilattice,
        }
    }
}

fn from_result(r: Result<bool>) -> Flag {
    match r {
        Ok(b) => Flag::Value(b),
        Err(e) => Flag::Unevaluated(e.to_string()),
    }
}

/// Evaluates one predicate.
pub fn evaluate(p: Predicate, s: Subject<'_>) -> Result<Flag> {
    if p.needs() > s.level() {
        return Err(Error::NotApplicable {
            name: p.name(),
            needs: p.needs().label(),
        });
    }
    use Predicate::*;
    let t = s.topology();
    let flag = match p {
        T0 => Flag::Value(t.separation_profile().t0),
        T1 => Flag::Value(t.separation_profile().t1),
        T2 => Flag::Value(t.separation_profile().t2),
        _ if p.needs() == Needs::TopoPoset => {
            let tp = s.topo_poset().expect("level checked");
            match p {
                Complete => Flag::Value(tp.is_complete()),
                UpClosed => Flag::Value(tp.is_up_closed()),
                DownClosed => Flag::Value(tp.is_down_closed()),
                UpDownClosedPair => Flag::Value(tp.is_up_closed() && tp.is_down_closed()),
                UpdownClosed => Flag::Value(tp.is_updown_closed()),
                Pospace => tp.pospace(),
                ChainClosed => Flag::Value(tp.is_chain_closed()),
                WeaklyUpClosed => Flag::Value(tp.is_weakly_up_closed()),
                ChainCompact => from_result(tp.is_chain_compact()),
                _ => unreachable!(),
            }
        }
        _ => {
            let Subject::TopoSemilattice(ts) = s else {
                unreachable!()
            };
            match p {
                ZarCompact => from_result(ts.is_zar_compact()),
                SepCont => Flag::Value(ts.is_separately_continuous()),
                JointCont => ts.jointly_continuous(),
                VSemilattice => Flag::Value(ts.is_v_semilattice()),
                Lawson => Flag::Value(ts.is_lawson()),
                GdeltaSeparated => Flag::Value(ts.is_gdelta_separated()),
                _ => unreachable!(),
            }
        }
    };
    Ok(flag)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PredicateExpr {
    Atom(Predicate),
    Not(Box<PredicateExpr>),
    And(Box<PredicateExpr>, Box<PredicateExpr>),
    Or(Box<PredicateExpr>, Box<PredicateExpr>),
}

impl PredicateExpr {
    pub fn parse(input: &str) -> Result<PredicateExpr> {
        let mut p = Parser { src: input, pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos < input.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(e)
    }

    pub fn atoms(&self) -> Vec<Predicate> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_atoms(&self, out: &mut Vec<Predicate>) {
        match self {
            PredicateExpr::Atom(p) => out.push(*p),
            PredicateExpr::Not(e) => e.collect_atoms(out),
            PredicateExpr::And(a, b) | PredicateExpr::Or(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// Kleene three-valued evaluation; `None` when an unevaluated atom
    /// decides the outcome.
    pub fn evaluate(&self, s: Subject<'_>) -> Result<Option<bool>> {
        Ok(match self {
            PredicateExpr::Atom(p) => evaluate(*p, s)?.as_bool(),
            PredicateExpr::Not(e) => e.evaluate(s)?.map(|b| !b),
            PredicateExpr::And(a, b) => match a.evaluate(s)? {
                Some(false) => Some(false),
                left => match (left, b.evaluate(s)?) {
                    (_, Some(false)) => Some(false),
                    (Some(true), Some(true)) => Some(true),
                    _ => None,
                },
            },
            PredicateExpr::Or(a, b) => match a.evaluate(s)? {
                Some(true) => Some(true),
                left => match (left, b.evaluate(s)?) {
                    (_, Some(true)) => Some(true),
                    (Some(false), Some(false)) => Some(false),
                    _ => None,
                },
            },
        })
    }

    /// Rejects expressions with an atom the subject kind cannot evaluate.
    pub fn check_applicable(&self, s: Subject<'_>) -> Result<()> {
        for p in self.atoms() {
            if p.needs() > s.level() {
                return Err(Error::NotApplicable {
                    name: p.name(),
                    needs: p.needs().label(),
                });
            }
        }
        Ok(())
    }
}

impl PredicateExpr {
    /// Rejects expressions that structures of `kind` cannot evaluate.
    pub fn check_kind(&self, kind: Kind) -> Result<()> {
        let level = match kind {
            Kind::Topology => Some(Needs::Topology),
            Kind::TopoPoset => Some(Needs::TopoPoset),
            Kind::TopoSemilattice => Some(Needs::TopoSemilattice),
            _ => None,
        };
        for p in self.atoms() {
            if level.is_none_or(|l| p.needs() > l) {
                return Err(Error::NotApplicable {
                    name: p.name(),
                    needs: p.needs().label(),
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for PredicateExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PredicateExpr::Atom(p) => write!(f, "{p}"),
            PredicateExpr::Not(e) => write!(f, "!{e}"),
            PredicateExpr::And(a, b) => write!(f, "({a} & {b})"),
            PredicateExpr::Or(a, b) => write!(f, "({a} | {b})"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn expr(&mut self) -> Result<PredicateExpr> {
        let mut left = self.term()?;
        while self.peek() == Some('|') {
            self.pos += 1;
            left = PredicateExpr::Or(Box::new(left), Box::new(self.term()?));
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<PredicateExpr> {
        let mut left = self.factor()?;
        while self.peek() == Some('&') {
            self.pos += 1;
            left = PredicateExpr::And(Box::new(left), Box::new(self.factor()?));
        }
        Ok(left)
    }

    fn factor(&mut self) -> Result<PredicateExpr> {
        match self.peek() {
            Some('!') => {
                self.pos += 1;
                Ok(PredicateExpr::Not(Box::new(self.factor()?)))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                let len = self.src[start..]
                    .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
                    .unwrap_or(self.src.len() - start);
                self.pos += len;
                let name = &self.src[start..self.pos];
                Predicate::from_name(name)
                    .map(PredicateExpr::Atom)
                    .ok_or_else(|| Error::UnknownPredicate {
                        name: name.to_string(),
                        position: start,
                    })
            }
            Some(_) => Err(self.error("expected a predicate name, `!` or `(`")),
            None => Err(self.error("unexpected end of expression")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mask::SubsetMask;
    use crate::order::FinitePoset;

    fn atom(p: Predicate) -> PredicateExpr {
        PredicateExpr::Atom(p)
    }

    #[test]
    fn precedence() {
        let e = PredicateExpr::parse("t0 | !t1 & t2").unwrap();
        assert_eq!(
            e,
            PredicateExpr::Or(
                Box::new(atom(Predicate::T0)),
                Box::new(PredicateExpr::And(
                    Box::new(PredicateExpr::Not(Box::new(atom(Predicate::T1)))),
                    Box::new(atom(Predicate::T2))
                ))
            )
        );
        let e = PredicateExpr::parse("updown_closed & !(up_closed & down_closed)").unwrap();
        assert_eq!(
            e.atoms(),
            vec![
                Predicate::UpClosed,
                Predicate::DownClosed,
                Predicate::UpdownClosed
            ]
        );
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            PredicateExpr::parse("t0 & bogus").unwrap_err(),
            Error::UnknownPredicate {
                name: "bogus".into(),
                position: 5
            }
        );
        assert!(matches!(
            PredicateExpr::parse("(t0"),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(matches!(
            PredicateExpr::parse("t0 t1"),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(matches!(
            PredicateExpr::parse(""),
            Err(Error::Parse { position: 0, .. })
        ));
        assert!(matches!(
            PredicateExpr::parse("t0 &"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn names_are_unique_and_round_trip() {
        for &p in Predicate::ALL {
            assert_eq!(Predicate::from_name(p.name()), Some(p));
            let e = PredicateExpr::parse(&format!("!({p})")).unwrap();
            assert_eq!(PredicateExpr::parse(&e.to_string()).unwrap(), e);
        }
    }

    #[test]
    fn evaluation_on_sierpinski_chain() {
        let t = FiniteTopology::from_opens(
            2,
            &[
                SubsetMask::EMPTY,
                SubsetMask::singleton(1),
                SubsetMask::full(2),
            ],
        )
        .unwrap();
        let tp = TopologizedPoset::new(FinitePoset::chain(2).unwrap(), t).unwrap();
        let s = Subject::TopoPoset(&tp);
        assert_eq!(evaluate(Predicate::Pospace, s).unwrap(), Flag::Value(false));
        let e = PredicateExpr::parse("updown_closed & !up_down_closed_pair").unwrap();
        assert_eq!(e.evaluate(s).unwrap(), Some(true));
        assert_eq!(
            evaluate(Predicate::Lawson, s).unwrap_err(),
            Error::NotApplicable {
                name: "lawson",
                needs: "topologized semilattice"
            }
        );
        assert!(evaluate(Predicate::T0, Subject::Topology(tp.topology()))
            .unwrap()
            .is_true());
    }

    #[test]
    fn kleene_connectives() {
        // pospace is unevaluated on 5 points (square has 25)
        let tp = TopologizedPoset::new(
            FinitePoset::antichain(5).unwrap(),
            FiniteTopology::discrete(5).unwrap(),
        )
        .unwrap();
        let s = Subject::TopoPoset(&tp);
        let eval = |src: &str| PredicateExpr::parse(src).unwrap().evaluate(s).unwrap();
        assert_eq!(eval("pospace"), None);
        assert_eq!(eval("pospace & !t0"), Some(false));
        assert_eq!(eval("pospace | t0"), Some(true));
        assert_eq!(eval("pospace & t0"), None);
    }
}
