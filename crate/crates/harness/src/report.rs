//! Everything the library knows about one graph, as a serializable record.

use roman_core::criticality::{
    e_critical_condition, e_critical_witness, is_nonelementary,
    nonelementary_by_components, saturated_by_partitions, saturation_witness,
    v_critical_by_partitions, v_critical_witness, Witness,
};
use roman_core::gamma4::{
    classify_critical4, cut_vertex_structure, degree_classes, ecrit4_by_degrees,
    high_class_bounds, local8_conditions, local8_fast, saturated4_by_degrees,
    vcrit4_by_degrees, Local8,
};
use roman_core::roman::MAX_PARTITION_ORDER;
use roman_core::{emit_graph6, roman_number, Error, Graph, VertexSet};
use serde::Serialize;

use crate::error::HarnessError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub v0: Vec<usize>,
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Conditions {
    pub a: bool,
    pub b: bool,
    pub c: bool,
}

impl From<Local8> for Conditions {
    fn from(l: Local8) -> Self {
        Conditions { a: l.a, b: l.b, c: l.c }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Gamma4Section {
    pub high: Vec<usize>,
    pub low: Vec<usize>,
    pub other: Vec<usize>,
    pub half_bound: Option<bool>,
    pub three_quarter_bound: Option<bool>,
    pub cut_vertex_lemma: Option<bool>,
    pub cut_structure: Option<bool>,
    pub v_critical_by_degrees: bool,
    pub saturated_by_degrees: bool,
    pub e_critical_by_degrees: Option<bool>,
    pub local8: Option<Conditions>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalityReport {
    pub graph6: String,
    pub order: usize,
    pub edges: usize,
    pub gamma: usize,
    pub witness: Partition,
    pub nonelementary: bool,
    pub v_critical: bool,
    pub saturated: bool,
    pub e_critical: bool,
    pub v_critical_witness: Option<usize>,
    pub saturation_witness: Option<(usize, usize)>,
    pub e_critical_witness: Option<String>,
    pub classification: String,
    pub gamma4: Option<Gamma4Section>,
    /// Disagreements between a predicate and its alternative form.
    pub diagnostics: Vec<String>,
}

fn describe(w: Witness) -> String {
    match w {
        Witness::Vertex(v) => format!("vertex {v}"),
        Witness::NonEdge(u, v) => format!("non-edge {u}-{v}"),
        Witness::Edge(u, v) => format!("edge {u}-{v}"),
    }
}

fn compare(diag: &mut Vec<String>, what: &str, direct: bool, other: bool) {
    if direct != other {
        diag.push(format!("{what}: direct {direct}, alternative {other}"));
    }
}

fn gamma4_section(g: &Graph, v_critical: bool, saturated: bool, e_critical: bool, diag: &mut Vec<String>) -> Result<Gamma4Section, Error> {
    let classes = degree_classes(g);
    let vc_deg = vcrit4_by_degrees(g)?;
    let sat_deg = saturated4_by_degrees(g)?;
    compare(diag, "v-critical (degree form)", v_critical, vc_deg);
    compare(diag, "saturated (degree form)", saturated, sat_deg);
    let mut s = Gamma4Section {
        high: classes.high.to_vec(),
        low: classes.low.to_vec(),
        other: classes.other.to_vec(),
        half_bound: None,
        three_quarter_bound: None,
        cut_vertex_lemma: None,
        cut_structure: None,
        v_critical_by_degrees: vc_deg,
        saturated_by_degrees: sat_deg,
        e_critical_by_degrees: None,
        local8: None,
    };
    if v_critical {
        let bounds = high_class_bounds(g)?;
        let cut = cut_vertex_structure(g)?;
        let ec_deg = ecrit4_by_degrees(g)?;
        compare(diag, "e-critical (degree form)", e_critical, ec_deg);
        s.half_bound = Some(bounds.half);
        s.three_quarter_bound = saturated.then_some(bounds.three_quarters);
        s.cut_vertex_lemma = Some(cut.lemma);
        s.cut_structure = cut.prop;
        s.e_critical_by_degrees = Some(ec_deg);
    }
    if g.order() >= 8 {
        let literal = local8_conditions(g)?;
        let fast = local8_fast(g)?;
        if literal != fast {
            diag.push(format!("eight-vertex conditions: literal {literal:?}, degree form {fast:?}"));
        }
        s.local8 = Some(literal.into());
    }
    Ok(s)
}

pub fn criticality_report(g: &Graph) -> Result<CriticalityReport, HarnessError> {
    let n = g.order();
    if n > MAX_PARTITION_ORDER {
        return Err(Error::TooLarge {
            what: "criticality report",
            order: n,
            limit: MAX_PARTITION_ORDER,
        }
        .into());
    }
    let r = roman_number(g);
    let mut diag = Vec::new();

    let nonelementary = is_nonelementary(g);
    compare(&mut diag, "nonelementary", nonelementary, nonelementary_by_components(g));
    let vc_witness = v_critical_witness(g);
    let v_critical = vc_witness.is_none();
    if n > 0 {
        compare(&mut diag, "v-critical (partitions)", v_critical, v_critical_by_partitions(g)?);
    }
    let sat_witness = saturation_witness(g);
    let saturated = sat_witness.is_none();
    compare(&mut diag, "saturated (partitions)", saturated, saturated_by_partitions(g)?);
    let ec_witness = e_critical_witness(g);
    let e_critical = ec_witness.is_none();
    if v_critical && n > 0 {
        compare(&mut diag, "e-critical (edge condition)", e_critical, e_critical_condition(g)?);
    }

    let gamma4 = if r.gamma == 4 && n > 4 {
        Some(gamma4_section(g, v_critical, saturated, e_critical, &mut diag)?)
    } else {
        None
    };

    let list = |s: VertexSet| s.to_vec();
    Ok(CriticalityReport {
        graph6: emit_graph6(g)?,
        order: n,
        edges: g.edge_count(),
        gamma: r.gamma,
        witness: Partition {
            v0: list(r.witness.v0()),
            v1: list(r.witness.v1()),
            v2: list(r.witness.v2()),
        },
        nonelementary,
        v_critical,
        saturated,
        e_critical,
        v_critical_witness: vc_witness,
        saturation_witness: sat_witness,
        e_critical_witness: ec_witness.map(describe),
        classification: classify_critical4(g).to_string(),
        gamma4,
        diagnostics: diag,
    })
}
