//! The catalog of checkable statements. Each claim has a hypothesis, decided
//! with direct definitions, and a conclusion evaluated on every graph that
//! meets it.

use std::fmt;
use std::str::FromStr;

use roman_core::criticality::{
    e_critical_condition, e_critical_witness, edge_removal_witness, is_e_critical,
    is_nonelementary, is_roman_saturated, is_v_critical, nonelementary_by_components,
    saturated_by_partitions, saturation_witness, v_critical_by_partitions, v_critical_witness,
};
use roman_core::gamma4::{
    carac_corollary, classify_critical4, cut_vertex_structure, degree_classes,
    ecrit4_by_degrees, high_class_bounds, is_dn, local8_conditions, local8_fast,
    neighborhood_witness, saturated4_by_degrees, vcrit4_by_degrees, Classification,
};
use roman_core::{gamma, is_isomorphic, Family, Graph};
use serde::{Serialize, Serializer};

use crate::error::HarnessError;

macro_rules! claims {
    ($($variant:ident => $name:literal, $summary:literal;)*) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum ClaimId {
            $($variant,)*
        }

        impl ClaimId {
            pub const ALL: &'static [ClaimId] = &[$(ClaimId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(ClaimId::$variant => $name,)*
                }
            }

            /// One-line statement of what the checker verifies.
            pub fn summary(self) -> &'static str {
                match self {
                    $(ClaimId::$variant => $summary,)*
                }
            }
        }
    };
}

claims! {
    CycleCriticality => "cycle-criticality",
        "C_n is v-critical iff n mod 3 is 1 or 2; gamma_R(C_{3k+1}) = 2k+1 and gamma_R(C_{3k+2}) = 2k+2";
    NonelementaryComponents => "nonelementary-components",
        "gamma_R(G) < n iff some connected component has at least 3 vertices";
    GammaLe3Degree => "gamma-le-3-degree",
        "for n >= 1: gamma_R(G) <= 3 iff some vertex has degree >= n-2";
    VcritPartitionLemma => "vcrit-partition-lemma",
        "G is v-critical iff every vertex lies in V1 of some minimum Roman partition";
    SaturatedPartitionProp => "saturated-partition-prop",
        "G is Roman saturated iff every non-adjacent pair is split between V1 and V2 by some minimum partition";
    EdgeRemovalGamma => "edge-removal-gamma",
        "deleting any edge of a v-critical graph leaves gamma_R unchanged";
    EcritConditionProp => "ecrit-condition-prop",
        "a v-critical graph is e-critical iff every edge has a vertex v_e whose V1-partitions all rely on that edge";
    Elementary4List => "elementary4-list",
        "the elementary v-critical graphs with gamma_R = 4 are exactly G1, G2, G3 up to isomorphism";
    CaracLemma => "carac-lemma",
        "nonelementary, gamma_R = 4: v-critical iff every x has a with N[a] = V minus {x, b}; plus the corollary chase";
    Carac2Theorem => "carac2-theorem",
        "nonelementary, gamma_R = 4: v-critical iff every vertex has a non-neighbor of degree n-3";
    HalfBound => "half-bound",
        "nonelementary v-critical, gamma_R = 4: at least n/2 vertices have degree n-3";
    ThreequarterBound => "threequarter-bound",
        "nonelementary v-critical saturated, gamma_R = 4: at least 3n/4 vertices have degree n-3";
    CutvertexLemma => "cutvertex-lemma",
        "nonelementary v-critical, gamma_R = 4: removing a cut vertex leaves a singleton component";
    Saturated4Degrees => "saturated4-degrees",
        "nonelementary, gamma_R = 4: Roman saturated iff all vertices of degree < n-3 are pairwise adjacent";
    Ecrit4Degrees => "ecrit4-degrees",
        "nonelementary v-critical, gamma_R = 4: e-critical iff every edge e has v_e whose degree-(n-3) non-neighbors lie in e";
    CutStructureProp => "cut-structure-prop",
        "nonelementary v-, e-critical, saturated, gamma_R = 4: C5, or one low vertex of degree 1 hanging off a cut vertex";
    ClassificationTheorem => "classification-theorem",
        "nonelementary v-, e-critical, saturated, gamma_R = 4: C5 when n = 5, otherwise n even and D_n";
    Local8Theorem => "local8-theorem",
        "gamma_R = 4, n >= 8: the eight-vertex conditions a, b, c all hold iff n is even and G is D_n";
    DnProperties => "dn-properties",
        "D_n is nonelementary, v-critical, e-critical, saturated with gamma_R = 4, its pendant hanging off a cut vertex";
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, HarnessError> {
        ClaimId::ALL
            .iter()
            .copied()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| HarnessError::UnknownClaim(s.to_string()))
    }
}

impl Serialize for ClaimId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FindingKind {
    /// The conclusion fails on a graph meeting the hypothesis.
    Counterexample,
    /// A fast path and its literal definition disagree.
    PathDisagreement,
    /// A solver guard or precondition error while checking this graph.
    SolverError,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub kind: FindingKind,
    pub diagnostic: String,
}

impl Finding {
    fn counterexample(msg: impl Into<String>) -> Self {
        Finding {
            kind: FindingKind::Counterexample,
            diagnostic: msg.into(),
        }
    }

    fn disagreement(msg: impl Into<String>) -> Self {
        Finding {
            kind: FindingKind::PathDisagreement,
            diagnostic: msg.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    OutOfHypothesis,
    /// In hypothesis; empty when the conclusion holds.
    Checked(Vec<Finding>),
}

impl Outcome {
    pub fn in_hypothesis(&self) -> bool {
        matches!(self, Outcome::Checked(_))
    }

    pub fn findings(&self) -> &[Finding] {
        match self {
            Outcome::OutOfHypothesis => &[],
            Outcome::Checked(f) => f,
        }
    }
}

type CheckResult = Result<Outcome, roman_core::Error>;

fn verdict(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Checked(vec![])
    } else {
        Outcome::Checked(vec![Finding::counterexample(msg())])
    }
}

fn equivalence(name: &str, direct: bool, other: bool, other_name: &str) -> Outcome {
    verdict(direct == other, || {
        format!("{name} = {direct} but {other_name} = {other}")
    })
}

/// Nonelementary with `gamma_R = 4`; `gamma_R` is computed first since it
/// is by far the cheaper test.
fn nonelementary4(g: &Graph) -> bool {
    g.order() > 4 && gamma(g) == 4
}

fn fully_critical4(g: &Graph) -> bool {
    nonelementary4(g) && is_v_critical(g) && is_roman_saturated(g) && is_e_critical(g)
}

pub fn check(id: ClaimId, g: &Graph) -> CheckResult {
    let n = g.order();
    Ok(match id {
        ClaimId::CycleCriticality => {
            let is_cycle = n >= 3 && g.is_connected() && (0..n).all(|v| g.deg(v) == 2);
            if !is_cycle {
                return Ok(Outcome::OutOfHypothesis);
            }
            let mut found = vec![];
            let vc = is_v_critical(g);
            if vc != !n.is_multiple_of(3) {
                found.push(Finding::counterexample(format!(
                    "C{n}: v-critical = {vc}, n mod 3 = {}",
                    n % 3
                )));
            }
            let k = n / 3;
            let expected = match n % 3 {
                1 => Some(2 * k + 1),
                2 => Some(2 * k + 2),
                _ => None,
            };
            let gm = gamma(g);
            if let Some(e) = expected.filter(|&e| e != gm) {
                found.push(Finding::counterexample(format!(
                    "C{n}: gamma_R = {gm}, formula gives {e}"
                )));
            }
            Outcome::Checked(found)
        }
        ClaimId::NonelementaryComponents => equivalence(
            "nonelementary",
            is_nonelementary(g),
            nonelementary_by_components(g),
            "component with >= 3 vertices",
        ),
        ClaimId::GammaLe3Degree => {
            if n == 0 {
                return Ok(Outcome::OutOfHypothesis);
            }
            let gm = gamma(g);
            let max_deg = g.degrees().into_iter().max().unwrap_or(0);
            verdict((gm <= 3) == (max_deg + 2 >= n), || {
                format!("gamma_R = {gm}, max degree = {max_deg}, n - 2 = {}", n as i64 - 2)
            })
        }
        ClaimId::VcritPartitionLemma => {
            if n == 0 {
                return Ok(Outcome::OutOfHypothesis);
            }
            let by_parts = v_critical_by_partitions(g)?;
            let direct = v_critical_witness(g);
            verdict(direct.is_none() == by_parts, || {
                format!(
                    "v-critical = {} (failing vertex {direct:?}), V1-union covers V = {by_parts}",
                    direct.is_none()
                )
            })
        }
        ClaimId::SaturatedPartitionProp => {
            let by_parts = saturated_by_partitions(g)?;
            let direct = saturation_witness(g);
            verdict(direct.is_none() == by_parts, || {
                format!(
                    "saturated = {} (failing non-edge {direct:?}), partition split = {by_parts}",
                    direct.is_none()
                )
            })
        }
        ClaimId::EdgeRemovalGamma => {
            if n == 0 || !is_v_critical(g) {
                return Ok(Outcome::OutOfHypothesis);
            }
            let w = edge_removal_witness(g)?;
            verdict(w.is_none(), || format!("deleting edge {w:?} changes gamma_R"))
        }
        ClaimId::EcritConditionProp => {
            if n == 0 || !is_v_critical(g) {
                return Ok(Outcome::OutOfHypothesis);
            }
            let cond = e_critical_condition(g)?;
            let direct = e_critical_witness(g);
            verdict(direct.is_none() == cond, || {
                format!(
                    "e-critical = {} (witness {direct:?}), edge condition = {cond}",
                    direct.is_none()
                )
            })
        }
        ClaimId::Elementary4List => {
            let listed = n == 4
                && [Family::Elem1, Family::Elem2, Family::Elem3]
                    .iter()
                    .any(|f| is_isomorphic(g, &f.generate().expect("order 4")).expect("order 4"));
            let gm = gamma(g);
            let qualifies = gm == 4 && gm == n && is_v_critical(g);
            if !listed && !qualifies {
                return Ok(Outcome::OutOfHypothesis);
            }
            verdict(listed == qualifies, || {
                format!("isomorphic to G1/G2/G3 = {listed}, elementary v-critical with gamma_R 4 = {qualifies}")
            })
        }
        ClaimId::CaracLemma => {
            if !nonelementary4(g) {
                return Ok(Outcome::OutOfHypothesis);
            }
            let vc = is_v_critical(g);
            let mut missing = None;
            for x in 0..n {
                if neighborhood_witness(g, x)?.is_none() {
                    missing = Some(x);
                    break;
                }
            }
            let mut found = vec![];
            if vc != missing.is_none() {
                found.push(Finding::counterexample(format!(
                    "v-critical = {vc}, vertex without (a, b) witness: {missing:?}"
                )));
            }
            if carac_corollary(g)? == Some(false) {
                found.push(Finding::counterexample("corollary chase fails"));
            }
            Outcome::Checked(found)
        }
        ClaimId::Carac2Theorem => {
            if !nonelementary4(g) {
                return Ok(Outcome::OutOfHypothesis);
            }
            equivalence(
                "v-critical",
                is_v_critical(g),
                vcrit4_by_degrees(g)?,
                "degree-(n-3) non-neighbor rule",
            )
        }
        ClaimId::HalfBound => {
            if !nonelementary4(g) || !is_v_critical(g) {
                return Ok(Outcome::OutOfHypothesis);
            }
            let high = degree_classes(g).high.len();
            verdict(high_class_bounds(g)?.half, || {
                format!("|high| = {high} < n/2 with n = {n}")
            })
        }
        ClaimId::ThreequarterBound => {
            if !nonelementary4(g) || !is_v_critical(g) || !is_roman_saturated(g) {
                return Ok(Outcome::OutOfHypothesis);
            }
            let high = degree_classes(g).high.len();
            verdict(high_class_bounds(g)?.three_quarters, || {
                format!("|high| = {high} < 3n/4 with n = {n}")
            })
        }
        ClaimId::CutvertexLemma => {
            if !nonelementary4(g) || !is_v_critical(g) {
                return Ok(Outcome::OutOfHypothesis);
            }
            verdict(cut_vertex_structure(g)?.lemma, || {
                format!(
                    "some cut vertex among {} leaves no singleton component",
                    g.cut_vertices()
                )
            })
        }
        ClaimId::Saturated4Degrees => {
            if !nonelementary4(g) {
                return Ok(Outcome::OutOfHypothesis);
            }
            equivalence(
                "saturated",
                is_roman_saturated(g),
                saturated4_by_degrees(g)?,
                "low vertices pairwise adjacent",
            )
        }
        ClaimId::Ecrit4Degrees => {
            if !nonelementary4(g) || !is_v_critical(g) {
                return Ok(Outcome::OutOfHypothesis);
            }
            equivalence(
                "e-critical",
                is_e_critical(g),
                ecrit4_by_degrees(g)?,
                "v_e degree rule",
            )
        }
        ClaimId::CutStructureProp => {
            if !fully_critical4(g) {
                return Ok(Outcome::OutOfHypothesis);
            }
            let s = cut_vertex_structure(g)?;
            verdict(s.prop == Some(true), || {
                let c = degree_classes(g);
                format!(
                    "not C5 and low class {} (cut vertices {}) is not a single pendant on a cut vertex",
                    c.low,
                    g.cut_vertices()
                )
            })
        }
        ClaimId::ClassificationTheorem => {
            if !fully_critical4(g) {
                return Ok(Outcome::OutOfHypothesis);
            }
            let class = classify_critical4(g);
            let ok = match class {
                Classification::IsC5 => n == 5,
                Classification::IsDn(m) => m == n && n > 5,
                _ => false,
            };
            verdict(ok, || format!("n = {n}, classified {class}"))
        }
        ClaimId::Local8Theorem => {
            if n < 8 || gamma(g) != 4 {
                return Ok(Outcome::OutOfHypothesis);
            }
            let literal = local8_conditions(g)?;
            let fast = local8_fast(g)?;
            let dn = is_dn(g);
            let mut found = vec![];
            if literal.all() != dn {
                found.push(Finding::counterexample(format!(
                    "conditions (a, b, c) = ({}, {}, {}) but n = {n}, isomorphic to D_n = {dn}",
                    literal.a, literal.b, literal.c
                )));
            }
            if literal != fast {
                found.push(Finding::disagreement(format!(
                    "literal (a, b, c) = ({}, {}, {}), degree form = ({}, {}, {})",
                    literal.a, literal.b, literal.c, fast.a, fast.b, fast.c
                )));
            }
            Outcome::Checked(found)
        }
        ClaimId::DnProperties => {
            if !is_dn(g) {
                return Ok(Outcome::OutOfHypothesis);
            }
            let mut failed = vec![];
            let gm = gamma(g);
            if gm != 4 {
                failed.push(format!("gamma_R = {gm}"));
            }
            if !is_nonelementary(g) {
                failed.push("elementary".into());
            }
            if !is_v_critical(g) {
                failed.push("not v-critical".into());
            }
            if !is_e_critical(g) {
                failed.push("not e-critical".into());
            }
            if !is_roman_saturated(g) {
                failed.push("not saturated".into());
            }
            let pendant = (0..n).find(|&v| g.deg(v) == 1);
            let cut_ok = pendant
                .map(|p| g.neighbors(p).is_subset(g.cut_vertices()))
                .unwrap_or(false);
            if !cut_ok {
                failed.push("pendant neighbor is not a cut vertex".into());
            }
            verdict(failed.is_empty(), || failed.join("; "))
        }
    })
}
