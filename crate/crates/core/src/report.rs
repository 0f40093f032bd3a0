//! Structured analysis records and their text rendering.
//!
//! Every record serializes to JSON with a fixed field order and carries
//! `report_version`. Element references are rendered by name so a record can
//! be checked by hand against the input table. [`Render::to_text`] depends on
//! the record alone.

use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::{ElementId, FiniteAlgebra};
use crate::axioms::{self, AxiomReport, Verdict};
use crate::congruence::{self, QuotientAlgebra};
use crate::error::{Error, Result};
use crate::format::{serialize, AlgebraDocument};
use crate::search::{SearchReport, SearchStats};
use crate::structure::{self, Family, FilterClassification};
use crate::subset::Subset;
use crate::Gates;

pub const REPORT_VERSION: u32 = 1;

/// A verdict with its witness rendered by element names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub law: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<String>,
}

impl Finding {
    pub fn new(v: &Verdict, a: &FiniteAlgebra) -> Self {
        match v {
            Verdict::Holds => Finding { status: "holds", law: None, witness: Vec::new() },
            Verdict::NotEvaluated => Finding { status: "not_evaluated", law: None, witness: Vec::new() },
            Verdict::Fails { witness } => Finding {
                status: "fails",
                law: Some(witness.law.to_string()),
                witness: names(a, &witness.elements),
            },
        }
    }

    pub fn holds(&self) -> bool {
        self.status == "holds"
    }

    fn text(&self) -> String {
        match &self.law {
            Some(law) => format!("{} ({law} at {})", self.status, self.witness.join(", ")),
            None => self.status.to_string(),
        }
    }
}

fn names(a: &FiniteAlgebra, xs: &[ElementId]) -> Vec<String> {
    xs.iter().map(|&x| a.name(x).to_string()).collect()
}

fn yes(b: bool) -> &'static str {
    if b { "yes" } else { "no" }
}

pub trait Render: Serialize {
    fn to_text(&self) -> String;

    fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

// --- check --------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomSection {
    pub be: Finding,
    pub bounded: Finding,
    pub involutive: Finding,
    pub qw: Finding,
    pub qw_split: Finding,
    pub commutative: Finding,
}

impl AxiomSection {
    fn new(r: &AxiomReport, a: &FiniteAlgebra) -> Self {
        AxiomSection {
            be: Finding::new(&r.be, a),
            bounded: Finding::new(&r.bounded, a),
            involutive: Finding::new(&r.involutive, a),
            qw: Finding::new(&r.qw, a),
            qw_split: Finding::new(&r.qw_split, a),
            commutative: Finding::new(&r.commutative, a),
        }
    }

    fn write(&self, out: &mut String) {
        for (label, f) in [
            ("BE", &self.be),
            ("bounded", &self.bounded),
            ("involutive", &self.involutive),
            ("QW", &self.qw),
            ("QW1 + QW2", &self.qw_split),
            ("commutative", &self.commutative),
        ] {
            let _ = writeln!(out, "  {label:<12} {}", f.text());
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub report_version: u32,
    pub algebra: String,
    pub order: usize,
    pub elements: Vec<String>,
    pub axioms: AxiomSection,
    pub is_qw: bool,
}

impl CheckReport {
    pub fn new(name: &str, a: &FiniteAlgebra) -> Result<Self> {
        let r = axioms::verify_qw(a);
        if r.is_involutive() && !r.qw_forms_agree() {
            return Err(Error::Falsified("QW and QW1 + QW2 disagree".into()));
        }
        Ok(CheckReport {
            report_version: REPORT_VERSION,
            algebra: name.to_string(),
            order: a.order(),
            elements: a.names().to_vec(),
            axioms: AxiomSection::new(&r, a),
            is_qw: r.is_qw(),
        })
    }
}

impl Render for CheckReport {
    fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "algebra {} ({} elements: {})", self.algebra, self.order, self.elements.join(" "));
        self.axioms.write(&mut out);
        let _ = writeln!(out, "QW algebra: {}", yes(self.is_qw));
        out
    }
}

// --- analyze ------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsetEntry {
    pub members: String,
    pub filter: bool,
    pub deductive_system: bool,
    pub proper: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximal_filter: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximal_ds: Option<bool>,
    pub strongly_maximal: bool,
    /// An element outside the subset none of whose powers has its star inside.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strong_maximality_witness: Option<String>,
    pub prime: Finding,
    pub commutative_filter: Finding,
    pub ideal: Finding,
}

impl SubsetEntry {
    fn new(c: &FilterClassification, a: &FiniteAlgebra) -> Self {
        SubsetEntry {
            members: a.format_subset(&c.subset),
            filter: c.filter.holds(),
            deductive_system: c.deductive_system.holds(),
            proper: c.proper,
            maximal_filter: c.maximal_filter,
            maximal_ds: c.maximal_ds,
            strongly_maximal: c.strongly_maximal,
            strong_maximality_witness: structure::strongly_maximal_witness(a, &c.subset)
                .map(|x| a.name(x).to_string()),
            prime: Finding::new(&c.prime, a),
            commutative_filter: Finding::new(&c.commutative_filter, a),
            ideal: Finding::new(&c.ideal, a),
        }
    }

    fn flags(&self) -> String {
        let mut f = Vec::new();
        if !self.proper {
            f.push("improper".to_string());
        }
        if self.maximal_filter == Some(true) {
            f.push("maximal filter".to_string());
        }
        if self.maximal_ds == Some(true) {
            f.push("maximal DS".to_string());
        }
        f.push(if self.strongly_maximal { "strongly maximal".into() } else { "not strongly maximal".into() });
        f.push(if self.prime.holds() { "prime".into() } else { "not prime".into() });
        if self.commutative_filter.holds() {
            f.push("commutative".to_string());
        }
        if self.ideal.holds() {
            f.push("ideal".to_string());
        }
        f.join(", ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementOrder {
    pub element: String,
    /// `None` when no power reaches `0`.
    pub order: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentitySuite {
    pub split_meet: Finding,
    pub orthogonal_arrows: Finding,
    pub orthogonal_swap: Finding,
    pub perspective_top: Finding,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Linearity {
    pub weakly_linear: Finding,
    pub quasi_linear: Finding,
    /// First pair incomparable under `≤_Q`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_incomparable: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identity_suite: Option<IdentitySuite>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassEntry {
    pub class: String,
    pub members: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientCheck {
    pub deductive_system: String,
    pub classes: Vec<ClassEntry>,
    pub strongly_maximal: bool,
    pub quotient_locally_finite: bool,
    pub prime: bool,
    pub quotient_weakly_linear: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalyzeReport {
    pub report_version: u32,
    pub algebra: String,
    pub order: usize,
    pub elements: Vec<String>,
    pub axioms: AxiomSection,
    pub is_qw: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wajsberg: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub filters: Option<Vec<SubsetEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deductive_systems: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub linearity: Option<Linearity>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub element_orders: Vec<ElementOrder>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub locally_finite: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient_checks: Option<Vec<QuotientCheck>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub congruences: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

fn class_map(q: &QuotientAlgebra, a: &FiniteAlgebra) -> Vec<ClassEntry> {
    q.partition
        .classes()
        .iter()
        .enumerate()
        .map(|(k, c)| ClassEntry {
            class: q.algebra.name(ElementId::new(k)).to_string(),
            members: a.format_subset(c),
        })
        .collect()
}

impl AnalyzeReport {
    pub fn new(name: &str, a: &FiniteAlgebra, gates: &Gates) -> Result<Self> {
        let check = CheckReport::new(name, a)?;
        let mut r = AnalyzeReport {
            report_version: REPORT_VERSION,
            algebra: check.algebra,
            order: check.order,
            elements: check.elements,
            axioms: check.axioms,
            is_qw: check.is_qw,
            wajsberg: None,
            filters: None,
            deductive_systems: None,
            linearity: None,
            element_orders: Vec::new(),
            locally_finite: None,
            quotient_checks: None,
            congruences: None,
            notes: Vec::new(),
        };
        if !r.is_qw {
            r.notes.push("not a QW algebra; structural analysis skipped".into());
            return Ok(r);
        }
        r.wajsberg = Some(axioms::is_wajsberg(a)?);
        let weak = structure::is_weakly_linear(a)?;
        r.linearity = Some(Linearity {
            weakly_linear: Finding::new(&weak, a),
            quasi_linear: Finding::new(&structure::is_quasi_linear(a)?, a),
            q_incomparable: structure::q_incomparable_pair(a).map(|(x, y)| [a.name(x).into(), a.name(y).into()]),
            identity_suite: if weak.holds() {
                let s = structure::weakly_linear_identity_suite(a)?;
                Some(IdentitySuite {
                    split_meet: Finding::new(&s.split_meet, a),
                    orthogonal_arrows: Finding::new(&s.orthogonal_arrows, a),
                    orthogonal_swap: Finding::new(&s.orthogonal_swap, a),
                    perspective_top: Finding::new(&s.perspective_top, a),
                })
            } else {
                None
            },
        });
        r.element_orders = a
            .elements()
            .map(|x| ElementOrder { element: a.name(x).to_string(), order: congruence::ord(a, x) })
            .collect();
        r.locally_finite = Some(congruence::is_locally_finite(a));

        match structure::enumerate_filters(a, gates) {
            Ok(filters) => {
                let ds = structure::enumerate(a, Family::DeductiveSystems, gates)?;
                let mut entries = Vec::new();
                for f in &filters {
                    entries.push(SubsetEntry::new(&structure::classify(a, f, gates)?, a));
                }
                let mut checks = Vec::new();
                for f in &ds {
                    let sm = congruence::check_strongly_maximal_quotient(a, f)?;
                    let pr = congruence::check_prime_quotient(a, f)?;
                    let q = congruence::quotient(a, f)?;
                    checks.push(QuotientCheck {
                        deductive_system: a.format_subset(f),
                        classes: class_map(&q, a),
                        strongly_maximal: sm.on_subset,
                        quotient_locally_finite: sm.on_quotient,
                        prime: pr.on_subset,
                        quotient_weakly_linear: pr.on_quotient,
                    });
                }
                r.filters = Some(entries);
                r.deductive_systems = Some(ds.iter().map(|f| a.format_subset(f)).collect());
                r.quotient_checks = Some(checks);
            }
            Err(Error::GateExceeded { n, gate }) => {
                r.notes.push(format!("subset enumeration skipped: {n} elements exceed the gate of {gate}"));
            }
            Err(e) => return Err(e),
        }
        match congruence::enumerate_congruences(a, gates) {
            Ok(cs) => r.congruences = Some(cs.iter().map(|p| p.format(a)).collect()),
            Err(Error::GateExceeded { n, gate }) => {
                r.notes.push(format!("partition enumeration skipped: {n} elements exceed the gate of {gate}"));
            }
            Err(e) => return Err(e),
        }
        Ok(r)
    }

    pub fn filter(&self, members: &str) -> Option<&SubsetEntry> {
        self.filters.as_ref()?.iter().find(|e| e.members == members)
    }
}

impl Render for AnalyzeReport {
    fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "algebra {} ({} elements: {})", self.algebra, self.order, self.elements.join(" "));
        self.axioms.write(&mut out);
        let _ = writeln!(out, "QW algebra: {}", yes(self.is_qw));
        if let Some(w) = self.wajsberg {
            let _ = writeln!(out, "Wajsberg: {}", yes(w));
        }
        if let Some(l) = &self.linearity {
            let _ = writeln!(out, "weakly linear: {}", l.weakly_linear.text());
            let _ = writeln!(out, "quasi-linear: {}", l.quasi_linear.text());
            match &l.q_incomparable {
                Some([x, y]) => {
                    let _ = writeln!(out, "Q-order total: no ({x} and {y} incomparable)");
                }
                None => {
                    let _ = writeln!(out, "Q-order total: yes");
                }
            }
            if let Some(s) = &l.identity_suite {
                let _ = writeln!(out, "weakly linear identities:");
                for (label, f) in [
                    ("((x->y)->z)^((y->x)->z) = z", &s.split_meet),
                    ("x^y = 0 => (z->x)^(z->y) = z*", &s.orthogonal_arrows),
                    ("x^(y^z) = 0 => x^(z^y) = 0", &s.orthogonal_swap),
                    ("x~y, x+y = 1 => x = y = 1", &s.perspective_top),
                ] {
                    let _ = writeln!(out, "  {label:<32} {}", f.text());
                }
            }
        }
        if !self.element_orders.is_empty() {
            let parts: Vec<String> = self
                .element_orders
                .iter()
                .map(|o| match o.order {
                    Some(k) => format!("{}:{k}", o.element),
                    None => format!("{}:inf", o.element),
                })
                .collect();
            let _ = writeln!(out, "orders: {}", parts.join(" "));
        }
        if let Some(lf) = self.locally_finite {
            let _ = writeln!(out, "locally finite: {}", yes(lf));
        }
        if let Some(fs) = &self.filters {
            let _ = writeln!(out, "filters ({}):", fs.len());
            for e in fs {
                let kind = if e.deductive_system { "filter, DS" } else { "filter" };
                let _ = writeln!(out, "  {:<16} {kind}; {}", e.members, e.flags());
            }
        }
        if let Some(ds) = &self.deductive_systems {
            let _ = writeln!(out, "deductive systems ({}): {}", ds.len(), ds.join(" "));
        }
        if let Some(qs) = &self.quotient_checks {
            let _ = writeln!(out, "quotients:");
            for q in qs {
                let classes: Vec<String> = q.classes.iter().map(|c| format!("{}={}", c.class, c.members)).collect();
                let _ = writeln!(out, "  X/{} = {}", q.deductive_system, classes.join(" "));
                let _ = writeln!(
                    out,
                    "    strongly maximal {} / locally finite {}; prime {} / weakly linear {}",
                    yes(q.strongly_maximal),
                    yes(q.quotient_locally_finite),
                    yes(q.prime),
                    yes(q.quotient_weakly_linear)
                );
            }
        }
        if let Some(cs) = &self.congruences {
            let _ = writeln!(out, "congruences ({}):", cs.len());
            for c in cs {
                let _ = writeln!(out, "  {c}");
            }
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        out
    }
}

// --- quotient -----------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientReport {
    pub report_version: u32,
    pub algebra: String,
    pub deductive_system: String,
    pub classes: Vec<ClassEntry>,
    /// The quotient in the text format.
    pub document: String,
}

impl QuotientReport {
    pub fn new(name: &str, a: &FiniteAlgebra, f: &Subset) -> Result<Self> {
        let q = congruence::quotient(a, f)?;
        let qname = format!("{name}_quotient");
        Ok(QuotientReport {
            report_version: REPORT_VERSION,
            algebra: name.to_string(),
            deductive_system: a.format_subset(f),
            classes: class_map(&q, a),
            document: serialize(&AlgebraDocument::from_algebra(&qname, &q.algebra)),
        })
    }
}

impl Render for QuotientReport {
    /// The class map as comments followed by the quotient document, so the
    /// output parses as an algebra file.
    fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {} / {}", self.algebra, self.deductive_system);
        for c in &self.classes {
            let _ = writeln!(out, "# {} = {}", c.class, c.members);
        }
        out.push_str(&self.document);
        out
    }
}

// --- search -------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchSummary {
    pub report_version: u32,
    pub order: usize,
    pub count: usize,
    pub truncated: bool,
    pub stats: SearchStats,
    pub models: Vec<String>,
}

/// Name given to the `i`-th model of order `n`.
pub fn model_name(n: usize, i: usize) -> String {
    format!("qw{n}_{i:03}")
}

impl SearchSummary {
    pub fn new(r: &SearchReport) -> Self {
        SearchSummary {
            report_version: REPORT_VERSION,
            order: r.order,
            count: r.count(),
            truncated: r.truncated,
            stats: r.stats,
            models: r
                .algebras()
                .enumerate()
                .map(|(i, a)| serialize(&AlgebraDocument::from_algebra(&model_name(r.order, i), &a)))
                .collect(),
        }
    }
}

impl Render for SearchSummary {
    fn to_text(&self) -> String {
        let mut out = String::new();
        let more = if self.truncated { " (truncated)" } else { "" };
        let _ = writeln!(out, "order {}: {} models{more}", self.order, self.count);
        let s = &self.stats;
        let _ = writeln!(
            out,
            "nodes {}, prunes {}, final rejections {}, isomorph rejections {}",
            s.nodes, s.prunes, s.final_rejections, s.isomorph_rejections
        );
        for m in &self.models {
            out.push('\n');
            out.push_str(m);
        }
        out
    }
}
