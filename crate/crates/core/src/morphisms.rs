//! Homomorphisms and multi-valued morphisms between topologized
//! semilattices, and verifiers for the image-closedness theorems.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::order::FinitePoset;
use crate::semilattice::{Semilattice, TopologizedSemilattice, CHAIN_FINITE};
use crate::topology::FiniteTopology;
use crate::Flag;

/// A single-valued map `X → Y`, stored as the image of each point.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SemilatticeHom {
    map: Vec<usize>,
    n_y: usize,
}

impl SemilatticeHom {
    pub fn new(map: Vec<usize>, n_y: usize) -> Result<Self> {
        if let Some(&v) = map.iter().find(|&&v| v >= n_y) {
            return Err(Error::IndexOutOfRange { index: v, n: n_y });
        }
        Ok(SemilatticeHom { map, n_y })
    }

    pub fn identity(n: usize) -> Self {
        SemilatticeHom {
            map: (0..n).collect(),
            n_y: n,
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn n_x(&self) -> usize {
        self.map.len()
    }

    pub fn n_y(&self) -> usize {
        self.n_y
    }

    pub fn image(&self) -> SubsetMask {
        self.map
            .iter()
            .fold(SubsetMask::EMPTY, |acc, &y| acc.with(y))
    }

    pub fn preimage(&self, b: SubsetMask) -> SubsetMask {
        (0..self.n_x())
            .filter(|&x| b.contains(self.map[x]))
            .fold(SubsetMask::EMPTY, SubsetMask::with)
    }

    pub fn is_surjective(&self) -> bool {
        self.image() == SubsetMask::full(self.n_y)
    }

    /// `x ↦ {h(x)}`.
    pub fn to_multimorphism(&self) -> Multimorphism {
        Multimorphism {
            values: self.map.iter().map(|&y| SubsetMask::singleton(y)).collect(),
            n_y: self.n_y,
        }
    }
}

/// A multi-valued map `X ⊸ Y`; values may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Multimorphism {
    values: Vec<SubsetMask>,
    n_y: usize,
}

/// Whether multimorphism enumeration admits empty values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ValueMode {
    AllowEmpty,
    Nonempty,
}

impl Multimorphism {
    pub fn new(values: Vec<SubsetMask>, n_y: usize) -> Result<Self> {
        if let Some(v) = values.iter().find(|v| !v.fits(n_y)) {
            return Err(Error::MaskOutOfRange {
                bits: v.bits(),
                n: n_y,
            });
        }
        Ok(Multimorphism { values, n_y })
    }

    #[inline]
    pub fn value(&self, x: usize) -> SubsetMask {
        self.values[x]
    }

    pub fn values(&self) -> &[SubsetMask] {
        &self.values
    }

    pub fn n_x(&self) -> usize {
        self.values.len()
    }

    pub fn n_y(&self) -> usize {
        self.n_y
    }

    /// `Φ(X) = ⋃ Φ(x)`.
    pub fn image(&self) -> SubsetMask {
        self.values
            .iter()
            .fold(SubsetMask::EMPTY, |acc, &v| acc.union(v))
    }

    /// `Φ⁻¹(F) = {x : Φ(x) ∩ F ≠ ∅}`.
    pub fn preimage(&self, f: SubsetMask) -> SubsetMask {
        (0..self.n_x())
            .filter(|&x| self.values[x].intersects(f))
            .fold(SubsetMask::EMPTY, SubsetMask::with)
    }

    pub fn is_nonempty_valued(&self) -> bool {
        self.values.iter().all(|v| !v.is_empty())
    }

    pub fn admits(&self, mode: ValueMode) -> bool {
        mode == ValueMode::AllowEmpty || self.is_nonempty_valued()
    }
}

fn assert_sizes(n_x: usize, n_y: usize, x: usize, y: usize) {
    assert!(
        n_x == x && n_y == y,
        "morphism of shape {n_x}→{n_y} applied to structures of sizes {x}, {y}"
    );
}

/// First pair `(x, y)` in lexicographic order with `h(xy) ≠ h(x)h(y)`.
///
/// # Panics
/// If the map's shape does not match the semilattices.
pub fn homomorphism_violation(
    h: &SemilatticeHom,
    sx: &Semilattice,
    sy: &Semilattice,
) -> Option<(usize, usize)> {
    assert_sizes(h.n_x(), h.n_y(), sx.n(), sy.n());
    let n = sx.n();
    (0..n)
        .flat_map(|x| (x..n).map(move |y| (x, y)))
        .find(|&(x, y)| h.apply(sx.meet(x, y)) != sy.meet(h.apply(x), h.apply(y)))
}

pub fn is_homomorphism(h: &SemilatticeHom, sx: &Semilattice, sy: &Semilattice) -> bool {
    homomorphism_violation(h, sx, sy).is_none()
}

/// Preimages of opens are open.
pub fn is_continuous(h: &SemilatticeHom, tx: &FiniteTopology, ty: &FiniteTopology) -> bool {
    assert_sizes(h.n_x(), h.n_y(), tx.n(), ty.n());
    ty.opens().iter().all(|&u| tx.is_open(h.preimage(u)))
}

pub fn is_monotone(h: &SemilatticeHom, px: &FinitePoset, py: &FinitePoset) -> bool {
    assert_sizes(h.n_x(), h.n_y(), px.n(), py.n());
    (0..px.n()).all(|x| px.up_set(x).iter().all(|y| py.le(h.apply(x), h.apply(y))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ImageClosure {
    pub closed: bool,
    /// A point of the closure of the image lying outside the image.
    pub witness: Option<usize>,
}

pub fn set_closure_check(ty: &FiniteTopology, image: SubsetMask) -> ImageClosure {
    let witness = ty.closure(image).difference(image).first();
    ImageClosure {
        closed: witness.is_none(),
        witness,
    }
}

pub fn image_closed(h: &SemilatticeHom, ty: &FiniteTopology) -> ImageClosure {
    assert_eq!(h.n_y(), ty.n(), "codomain size mismatch");
    set_closure_check(ty, h.image())
}

/// `inf h⁻¹(c)` computed as the product of the fiber, or `None` when the
/// fiber is empty. No hypotheses on `h` are checked.
pub fn fiber_inf(h: &SemilatticeHom, sx: &Semilattice, c: usize) -> Option<usize> {
    sx.meet_of_subset(h.preimage(SubsetMask::singleton(c))).ok()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberReport {
    pub c: usize,
    pub b_c: usize,
    pub h_of_b_c: usize,
    pub inf_up_preimage: usize,
}

/// Computes `b_c = inf h⁻¹(c)` and confirms `h(b_c) = c` and
/// `b_c = inf h⁻¹(↑c)`.
///
/// Requires `h` to be a continuous surjective homomorphism onto a weakly
/// ↑-closed codomain; a failed equality under those hypotheses is reported
/// as [`Error::LemmaViolation`] with a dump of both structures.
pub fn hom_inf_fiber(
    h: &SemilatticeHom,
    x: &TopologizedSemilattice,
    y: &TopologizedSemilattice,
    c: usize,
) -> Result<FiberReport> {
    if c >= y.n() {
        return Err(Error::IndexOutOfRange { index: c, n: y.n() });
    }
    if let Some((a, b)) = homomorphism_violation(h, x.semilattice(), y.semilattice()) {
        return Err(Error::HypothesisUnmet(format!(
            "not a homomorphism at ({a}, {b})"
        )));
    }
    if !h.is_surjective() {
        return Err(Error::HypothesisUnmet(format!(
            "not surjective: image {}",
            h.image()
        )));
    }
    if !is_continuous(h, x.topology(), y.topology()) {
        return Err(Error::HypothesisUnmet("not continuous".into()));
    }
    if !y.as_topo_poset().is_weakly_up_closed() {
        return Err(Error::HypothesisUnmet(
            "codomain is not weakly ↑-closed".into(),
        ));
    }
    let dump = || {
        format!(
            "c = {c}, h = {:?}, X = {:?} with opens {:?}, Y = {:?} with opens {:?}",
            h.map(),
            x.semilattice().rows(),
            x.topology().opens(),
            y.semilattice().rows(),
            y.topology().opens()
        )
    };
    let b_c = fiber_inf(h, x.semilattice(), c).expect("surjective");
    let h_of_b_c = h.apply(b_c);
    if h_of_b_c != c {
        return Err(Error::LemmaViolation(format!(
            "h(b_c) = {h_of_b_c}; {}",
            dump()
        )));
    }
    let up_pre = h.preimage(y.order().up_set(c));
    let inf_up_preimage = match x.order().inf(up_pre)? {
        Some(v) if v == b_c => v,
        other => {
            return Err(Error::LemmaViolation(format!(
                "inf h⁻¹(↑c) = {other:?} but b_c = {b_c}; {}",
                dump()
            )))
        }
    };
    Ok(FiberReport {
        c,
        b_c,
        h_of_b_c,
        inf_up_preimage,
    })
}

/// First pair `(x, y)` with `Φ(x)·Φ(y) ⊄ Φ(xy)`.
pub fn multimorphism_violation(
    phi: &Multimorphism,
    sx: &Semilattice,
    sy: &Semilattice,
) -> Option<(usize, usize)> {
    assert_sizes(phi.n_x(), phi.n_y(), sx.n(), sy.n());
    let n = sx.n();
    (0..n)
        .flat_map(|x| (x..n).map(move |y| (x, y)))
        .find(|&(x, y)| {
            !sy.product_set(phi.value(x), phi.value(y))
                .is_subset(phi.value(sx.meet(x, y)))
        })
}

pub fn is_multimorphism(phi: &Multimorphism, sx: &Semilattice, sy: &Semilattice) -> bool {
    multimorphism_violation(phi, sx, sy).is_none()
}

/// Preimages of closed sets are closed.
pub fn is_upper_semicontinuous(
    phi: &Multimorphism,
    tx: &FiniteTopology,
    ty: &FiniteTopology,
) -> bool {
    assert_sizes(phi.n_x(), phi.n_y(), tx.n(), ty.n());
    ty.closed_sets().all(|f| tx.is_closed(phi.preimage(f)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Separation {
    T1,
    T2,
}

/// Every value of `Φ` is `T_i`-closed in `Y`.
pub fn is_ti_multimorphism(phi: &Multimorphism, ty: &FiniteTopology, i: Separation) -> bool {
    assert_eq!(phi.n_y(), ty.n(), "codomain size mismatch");
    phi.values().iter().all(|&v| match i {
        Separation::T1 => ty.is_t1_closed_set(v),
        Separation::T2 => ty.is_t2_closed_set(v),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Profile {
    /// Homomorphism from a chain-finite semilattice into a Hausdorff
    /// semitopological semilattice.
    Cf,
    /// Continuous homomorphism from a complete topologized semilattice into
    /// a Hausdorff topological semilattice.
    Ct,
    /// `T₁`-multimorphism from a chain-finite semilattice into a
    /// topological semilattice.
    MultiT1,
    /// Upper semicontinuous `T₂`-multimorphism from a complete topologized
    /// semilattice into a topological semilattice.
    MultiT2,
    /// Continuous homomorphism from a complete topologized semilattice into
    /// a Ḡδ-separated semitopological semilattice.
    Gdelta,
}

impl Profile {
    pub const ALL: [Profile; 5] = [
        Profile::Cf,
        Profile::Ct,
        Profile::MultiT1,
        Profile::MultiT2,
        Profile::Gdelta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Profile::Cf => "cf",
            Profile::Ct => "ct",
            Profile::MultiT1 => "multi_T1",
            Profile::MultiT2 => "multi_T2",
            Profile::Gdelta => "gdelta",
        }
    }

    pub fn takes_multimorphism(self) -> bool {
        matches!(self, Profile::MultiT1 | Profile::MultiT2)
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Profile::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownPredicate {
                name: s.to_string(),
                position: 0,
            })
    }
}

#[derive(Debug, Clone, Copy)]
pub enum Morphism<'a> {
    Hom(&'a SemilatticeHom),
    Multi(&'a Multimorphism),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HypothesisStatus {
    Holds,
    Fails,
    /// True on every finite carrier; still evaluated where a literal check exists.
    HoldsFiniteDegenerate,
    Unevaluated(String),
}

impl HypothesisStatus {
    fn from_bool(b: bool) -> Self {
        if b {
            HypothesisStatus::Holds
        } else {
            HypothesisStatus::Fails
        }
    }

    fn from_flag(f: &Flag) -> Self {
        match f {
            Flag::Value(b) => Self::from_bool(*b),
            Flag::Unevaluated(why) => HypothesisStatus::Unevaluated(why.clone()),
        }
    }

    fn degenerate(b: bool) -> Self {
        if b {
            HypothesisStatus::HoldsFiniteDegenerate
        } else {
            HypothesisStatus::Fails
        }
    }

    pub fn holds(&self) -> bool {
        matches!(
            self,
            HypothesisStatus::Holds | HypothesisStatus::HoldsFiniteDegenerate
        )
    }
}

impl fmt::Display for HypothesisStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypothesisStatus::Holds => f.write_str("holds"),
            HypothesisStatus::Fails => f.write_str("fails"),
            HypothesisStatus::HoldsFiniteDegenerate => f.write_str("holds (finite-degenerate)"),
            HypothesisStatus::Unevaluated(why) => write!(f, "unevaluated ({why})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: &'static str,
    pub status: HypothesisStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub profile: Profile,
    pub hypotheses: Vec<Hypothesis>,
    /// The image is closed in the codomain.
    pub conclusion: bool,
    /// False only if every hypothesis holds and the conclusion fails.
    pub consistent: bool,
    pub witness: Option<usize>,
}

impl Verdict {
    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses.iter().all(|h| h.status.holds())
    }

    pub fn hypothesis(&self, name: &str) -> Option<&HypothesisStatus> {
        self.hypotheses
            .iter()
            .find(|h| h.name == name)
            .map(|h| &h.status)
    }
}

/// Per-structure facts reused across many verifier calls.
#[derive(Debug, Clone)]
pub struct StructureFacts<'a> {
    pub ts: &'a TopologizedSemilattice,
    pub hausdorff: bool,
    pub separately_continuous: bool,
    pub jointly_continuous: Flag,
    pub complete: bool,
    pub gdelta_separated: bool,
}

impl<'a> StructureFacts<'a> {
    pub fn new(ts: &'a TopologizedSemilattice) -> Self {
        StructureFacts {
            ts,
            hausdorff: ts.topology().separation_profile().t2,
            separately_continuous: ts.is_separately_continuous(),
            jointly_continuous: ts.jointly_continuous(),
            complete: ts.as_topo_poset().is_complete(),
            gdelta_separated: ts.is_gdelta_separated(),
        }
    }
}

/// Evaluates every hypothesis of the theorem named by `profile` and its
/// conclusion that the image of the morphism is closed.
pub fn verify_theorem(
    profile: Profile,
    x: &TopologizedSemilattice,
    y: &TopologizedSemilattice,
    morphism: Morphism<'_>,
) -> Result<Verdict> {
    verify_with_facts(
        profile,
        &StructureFacts::new(x),
        &StructureFacts::new(y),
        morphism,
    )
}

pub fn verify_with_facts(
    profile: Profile,
    fx: &StructureFacts<'_>,
    fy: &StructureFacts<'_>,
    morphism: Morphism<'_>,
) -> Result<Verdict> {
    let (x, y) = (fx.ts, fy.ts);
    let hyp = |name, status| Hypothesis { name, status };
    let (hypotheses, image) = match (profile, morphism) {
        (Profile::Cf | Profile::Ct | Profile::Gdelta, Morphism::Hom(h)) => {
            let mut hs = vec![hyp(
                "homomorphism",
                HypothesisStatus::from_bool(is_homomorphism(h, x.semilattice(), y.semilattice())),
            )];
            match profile {
                Profile::Cf => {
                    hs.push(hyp(
                        "X chain-finite",
                        HypothesisStatus::degenerate(CHAIN_FINITE),
                    ));
                    hs.push(hyp(
                        "Y semitopological",
                        HypothesisStatus::from_bool(fy.separately_continuous),
                    ));
                    hs.push(hyp(
                        "Y Hausdorff",
                        HypothesisStatus::from_bool(fy.hausdorff),
                    ));
                }
                Profile::Ct => {
                    hs.push(hyp(
                        "h continuous",
                        HypothesisStatus::from_bool(is_continuous(h, x.topology(), y.topology())),
                    ));
                    hs.push(hyp("X complete", HypothesisStatus::degenerate(fx.complete)));
                    hs.push(hyp(
                        "Y topological",
                        HypothesisStatus::from_flag(&fy.jointly_continuous),
                    ));
                    hs.push(hyp(
                        "Y Hausdorff",
                        HypothesisStatus::from_bool(fy.hausdorff),
                    ));
                }
                _ => {
                    hs.push(hyp(
                        "h continuous",
                        HypothesisStatus::from_bool(is_continuous(h, x.topology(), y.topology())),
                    ));
                    hs.push(hyp("X complete", HypothesisStatus::degenerate(fx.complete)));
                    hs.push(hyp(
                        "Y semitopological",
                        HypothesisStatus::from_bool(fy.separately_continuous),
                    ));
                    hs.push(hyp(
                        "Y Ḡδ-separated",
                        HypothesisStatus::from_bool(fy.gdelta_separated),
                    ));
                }
            }
            (hs, h.image())
        }
        (Profile::MultiT1 | Profile::MultiT2, Morphism::Multi(phi)) => {
            let mut hs = vec![hyp(
                "multimorphism",
                HypothesisStatus::from_bool(is_multimorphism(
                    phi,
                    x.semilattice(),
                    y.semilattice(),
                )),
            )];
            if profile == Profile::MultiT1 {
                hs.push(hyp(
                    "T1-multimorphism",
                    HypothesisStatus::from_bool(is_ti_multimorphism(
                        phi,
                        y.topology(),
                        Separation::T1,
                    )),
                ));
                hs.push(hyp(
                    "X chain-finite",
                    HypothesisStatus::degenerate(CHAIN_FINITE),
                ));
            } else {
                hs.push(hyp(
                    "upper semicontinuous",
                    HypothesisStatus::from_bool(is_upper_semicontinuous(
                        phi,
                        x.topology(),
                        y.topology(),
                    )),
                ));
                hs.push(hyp(
                    "T2-multimorphism",
                    HypothesisStatus::from_bool(is_ti_multimorphism(
                        phi,
                        y.topology(),
                        Separation::T2,
                    )),
                ));
                hs.push(hyp("X complete", HypothesisStatus::degenerate(fx.complete)));
            }
            hs.push(hyp(
                "Y topological",
                HypothesisStatus::from_flag(&fy.jointly_continuous),
            ));
            (hs, phi.image())
        }
        (p, _) => {
            return Err(Error::ProfileMismatch {
                profile: p.name(),
                expected: if p.takes_multimorphism() {
                    "multimorphism"
                } else {
                    "homomorphism"
                },
            })
        }
    };
    let closure = set_closure_check(y.topology(), image);
    let all_hold = hypotheses.iter().all(|h| h.status.holds());
    Ok(Verdict {
        profile,
        hypotheses,
        conclusion: closure.closed,
        consistent: !(all_hold && !closure.closed),
        witness: closure.witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimViolation {
    pub y: usize,
    pub intersection: SubsetMask,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub image: SubsetMask,
    /// Points of the closure of the image that were examined.
    pub points: Vec<usize>,
    /// Distinct intersections `⋂U` that were subsemilattices.
    pub families_checked: usize,
    pub violations: Vec<ClaimViolation>,
}

/// For `Z = h(X)` and each `y` in the closure of `Z`, every family of closed
/// neighborhoods of `y` whose intersection is a subsemilattice must have
/// that intersection meet `Z`.
///
/// Families with equal intersections are checked once.
pub fn verify_gdelta_claim(
    x: &TopologizedSemilattice,
    y: &TopologizedSemilattice,
    h: &SemilatticeHom,
) -> Result<ClaimReport> {
    if let Some((a, b)) = homomorphism_violation(h, x.semilattice(), y.semilattice()) {
        return Err(Error::HypothesisUnmet(format!(
            "not a homomorphism at ({a}, {b})"
        )));
    }
    if !is_continuous(h, x.topology(), y.topology()) {
        return Err(Error::HypothesisUnmet("not continuous".into()));
    }
    let z = h.image();
    let points = y.topology().closure(z).to_vec();
    let mut families_checked = 0;
    let mut violations = Vec::new();
    for &p in &points {
        for f in y.neighborhood_intersections(p) {
            if !y.semilattice().is_subsemilattice(f) {
                continue;
            }
            families_checked += 1;
            if !f.intersects(z) {
                violations.push(ClaimViolation {
                    y: p,
                    intersection: f,
                });
            }
        }
    }
    Ok(ClaimReport {
        image: z,
        points,
        families_checked,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(points: &[usize]) -> SubsetMask {
        SubsetMask::from_points(points.iter().copied(), 16).unwrap()
    }

    fn chain_min(n: usize) -> Semilattice {
        let rows: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| x.min(y)).collect()).collect();
        Semilattice::from_table(&rows).unwrap()
    }

    fn fan() -> Semilattice {
        Semilattice::from_table(&[vec![0, 0, 0], vec![0, 1, 0], vec![0, 0, 2]]).unwrap()
    }

    fn point() -> TopologizedSemilattice {
        TopologizedSemilattice::new(chain_min(1), FiniteTopology::discrete(1).unwrap()).unwrap()
    }

    fn ts(sl: Semilattice, t: FiniteTopology) -> TopologizedSemilattice {
        TopologizedSemilattice::new(sl, t).unwrap()
    }

    /// Chain `0 < 1` with `{0}` open: closed sets are ∅, {1}, X.
    fn chain_zero_open() -> TopologizedSemilattice {
        ts(
            chain_min(2),
            FiniteTopology::from_opens(2, &[m(&[]), m(&[0]), m(&[0, 1])]).unwrap(),
        )
    }

    fn sierpinski_chain() -> TopologizedSemilattice {
        ts(
            chain_min(2),
            FiniteTopology::from_opens(2, &[m(&[]), m(&[1]), m(&[0, 1])]).unwrap(),
        )
    }

    #[test]
    fn identity_and_constant() {
        let s = ts(fan(), FiniteTopology::indiscrete(3).unwrap());
        let id = SemilatticeHom::identity(3);
        assert!(is_homomorphism(&id, s.semilattice(), s.semilattice()));
        assert!(is_continuous(&id, s.topology(), s.topology()));
        assert!(is_monotone(&id, s.order(), s.order()));
        let k = SemilatticeHom::new(vec![1, 1, 1], 3).unwrap();
        assert!(is_homomorphism(&k, s.semilattice(), s.semilattice()));
        let disc = FiniteTopology::discrete(3).unwrap();
        assert!(is_continuous(&k, &disc, s.topology()));
    }

    #[test]
    fn image_closed_examples() {
        let y = chain_zero_open();
        let h = SemilatticeHom::new(vec![0], 2).unwrap();
        assert_eq!(
            image_closed(&h, y.topology()),
            ImageClosure {
                closed: false,
                witness: Some(1)
            }
        );
        let onto = SemilatticeHom::identity(2);
        assert!(image_closed(&onto, y.topology()).closed);
        assert!(image_closed(&h, &FiniteTopology::discrete(2).unwrap()).closed);
    }

    #[test]
    fn fan_collapse_is_rejected() {
        let h = SemilatticeHom::new(vec![0, 1, 1], 2).unwrap();
        assert_eq!(
            homomorphism_violation(&h, &fan(), &chain_min(2)),
            Some((1, 2))
        );
        let x = ts(fan(), FiniteTopology::discrete(3).unwrap());
        let y = ts(chain_min(2), FiniteTopology::discrete(2).unwrap());
        assert!(matches!(
            hom_inf_fiber(&h, &x, &y, 0),
            Err(Error::HypothesisUnmet(_))
        ));
    }

    #[test]
    fn fiber_inf_examples() {
        let x = ts(chain_min(3), FiniteTopology::discrete(3).unwrap());
        let y = ts(chain_min(2), FiniteTopology::discrete(2).unwrap());
        let h = SemilatticeHom::new(vec![0, 0, 1], 2).unwrap();
        let r0 = hom_inf_fiber(&h, &x, &y, 0).unwrap();
        let r1 = hom_inf_fiber(&h, &x, &y, 1).unwrap();
        assert_eq!((r0.b_c, r0.h_of_b_c), (0, 0));
        assert_eq!((r1.b_c, r1.h_of_b_c, r1.inf_up_preimage), (2, 1, 2));
        let id = SemilatticeHom::identity(3);
        for c in 0..3 {
            assert_eq!(hom_inf_fiber(&id, &x, &x, c).unwrap().b_c, c);
        }
        let not_onto = SemilatticeHom::new(vec![0, 0, 0], 2).unwrap();
        assert!(matches!(
            hom_inf_fiber(&not_onto, &x, &y, 0),
            Err(Error::HypothesisUnmet(_))
        ));
        assert_eq!(fiber_inf(&not_onto, x.semilattice(), 1), None);
    }

    #[test]
    fn multimorphism_examples() {
        let h = SemilatticeHom::new(vec![0, 0, 1], 2).unwrap();
        assert!(is_multimorphism(
            &h.to_multimorphism(),
            &chain_min(3),
            &chain_min(2)
        ));
        let all = Multimorphism::new(vec![m(&[0, 1, 2]); 2], 3).unwrap();
        assert!(is_multimorphism(&all, &chain_min(2), &fan()));
        let phi = Multimorphism::new(vec![m(&[1]), m(&[2])], 3).unwrap();
        assert_eq!(
            multimorphism_violation(&phi, &chain_min(2), &fan()),
            Some((0, 1))
        );
    }

    #[test]
    fn semicontinuity_examples() {
        let phi = Multimorphism::new(vec![m(&[0]), m(&[])], 2).unwrap();
        let disc = FiniteTopology::discrete(2).unwrap();
        assert!(!is_upper_semicontinuous(
            &phi,
            &FiniteTopology::indiscrete(2).unwrap(),
            &disc
        ));
        assert!(is_upper_semicontinuous(&phi, &disc, &disc));
        let y = sierpinski_chain();
        let id = SemilatticeHom::identity(2);
        assert!(is_upper_semicontinuous(
            &id.to_multimorphism(),
            y.topology(),
            y.topology()
        ));
    }

    #[test]
    fn ti_examples() {
        let y = sierpinski_chain();
        let phi = Multimorphism::new(vec![m(&[0])], 2).unwrap();
        assert!(is_ti_multimorphism(&phi, y.topology(), Separation::T1));
        assert!(!is_ti_multimorphism(&phi, y.topology(), Separation::T2));
        let all = Multimorphism::new(vec![m(&[0, 1])], 2).unwrap();
        assert!(is_ti_multimorphism(&all, y.topology(), Separation::T2));
    }

    #[test]
    fn verdict_examples() {
        let x = point();
        let y = chain_zero_open();
        let h = SemilatticeHom::new(vec![0], 2).unwrap();
        let v = verify_theorem(Profile::Ct, &x, &y, Morphism::Hom(&h)).unwrap();
        assert_eq!(v.hypothesis("Y Hausdorff"), Some(&HypothesisStatus::Fails));
        assert_eq!(
            v.hypothesis("Y topological"),
            Some(&HypothesisStatus::Holds)
        );
        assert_eq!(
            v.hypothesis("X complete"),
            Some(&HypothesisStatus::HoldsFiniteDegenerate)
        );
        assert!(!v.conclusion && v.consistent);
        assert_eq!(v.witness, Some(1));

        let phi = Multimorphism::new(vec![m(&[0])], 2).unwrap();
        let v = verify_theorem(
            Profile::MultiT2,
            &x,
            &sierpinski_chain(),
            Morphism::Multi(&phi),
        )
        .unwrap();
        assert_eq!(
            v.hypothesis("T2-multimorphism"),
            Some(&HypothesisStatus::Fails)
        );
        assert!(v.consistent);

        let d = ts(chain_min(2), FiniteTopology::discrete(2).unwrap());
        let v = verify_theorem(Profile::Cf, &x, &d, Morphism::Hom(&h)).unwrap();
        assert!(v.hypotheses_hold() && v.conclusion && v.consistent);

        assert_eq!(
            verify_theorem(Profile::MultiT1, &x, &d, Morphism::Hom(&h)).unwrap_err(),
            Error::ProfileMismatch {
                profile: "multi_T1",
                expected: "multimorphism"
            }
        );
    }

    #[test]
    fn gdelta_claim_examples() {
        let x = point();
        let h = SemilatticeHom::new(vec![0], 2).unwrap();
        let r = verify_gdelta_claim(&x, &sierpinski_chain(), &h).unwrap();
        assert_eq!(r.points, vec![0]);
        assert!(r.violations.is_empty());
        let d = ts(chain_min(2), FiniteTopology::discrete(2).unwrap());
        let r = verify_gdelta_claim(&x, &d, &h).unwrap();
        assert!(r.violations.is_empty() && r.families_checked > 0);
    }

    #[test]
    fn profile_names_round_trip() {
        for p in Profile::ALL {
            assert_eq!(p.name().parse::<Profile>().unwrap(), p);
        }
    }
}
