//! JSON report schema and its plain-text rendering.

use std::fmt::Write as _;

use serde::Serialize;
use sha2::{Digest, Sha256};

use ddisc::classify::{AGInvariant, ClockReport, ComponentClass, GentleCertificate, Verdict};
use ddisc::homology::StringObject;
use ddisc::quiver::BoundQuiverPresentation;
use ddisc::series::{FactorMultiset, SeriesStep, SeriesTrace, SimplicityVerdict, TraceVerification};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct Report<T> {
    pub schema_version: u32,
    pub tool_version: &'static str,
    pub command: &'static str,
    pub input: InputInfo,
    pub result: T,
}

#[derive(Serialize)]
pub struct InputInfo {
    pub source: &'static str,
    pub sha256: String,
    pub vertices: usize,
    pub arrows: usize,
    pub relations: usize,
}

impl InputInfo {
    pub fn new(source: &'static str, bytes: &[u8], p: &BoundQuiverPresentation) -> Self {
        InputInfo {
            source,
            sha256: hex::encode(Sha256::digest(bytes)),
            vertices: p.vertex_count(),
            arrows: p.arrow_count(),
            relations: p.relations().len(),
        }
    }
}

pub fn class_name(c: &ComponentClass) -> String {
    match c {
        ComponentClass::Lambda(d) => format!("Lambda({},{},{})", d.r, d.s, d.t),
        ComponentClass::DynkinHereditary(ty) => ty.to_string(),
        ComponentClass::Unknown(reason) => format!("unknown: {reason}"),
    }
}

#[derive(Serialize)]
pub struct ComponentReport {
    pub vertices: Vec<String>,
    pub gentle: bool,
    pub cycles: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clock: Option<ClockReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ag_invariant: Option<AGInvariant>,
    pub discrete: Verdict,
    pub reason: String,
    pub normal_form: String,
}

#[derive(Serialize)]
pub struct ClassifyResult {
    pub discrete: Verdict,
    pub gentle: GentleCertificate,
    pub infinite_global_dimension: Verdict,
    pub normal_form: Vec<String>,
    pub components: Vec<ComponentReport>,
}

#[derive(Serialize)]
pub struct FactorsResult {
    pub normal_form: Vec<String>,
    pub factors: FactorMultiset,
    pub grothendieck_rank: usize,
    pub derived_simple: SimplicityVerdict,
}

#[derive(Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verification {
    Passed(TraceVerification),
    Failed { error: String },
}

#[derive(Serialize)]
pub struct SeriesResult {
    pub trace: SeriesTrace,
    pub verification: Verification,
}

#[derive(Serialize)]
pub struct HomResult {
    /// Normal form the objects are named over.
    pub algebra: String,
    pub from: StringObject,
    pub to: StringObject,
    pub field: &'static str,
    pub dims: Vec<usize>,
    pub margin: usize,
}

/// Plain-text rendering for `--pretty`.
pub trait Pretty {
    fn pretty(&self) -> String;
}

impl<T: Pretty> Pretty for Report<T> {
    fn pretty(&self) -> String {
        format!(
            "ddisc {} {} (schema {})\ninput: {} sha256:{} ({} vertices, {} arrows, {} relations)\n\n{}",
            self.tool_version,
            self.command,
            self.schema_version,
            self.input.source,
            &self.input.sha256[..16],
            self.input.vertices,
            self.input.arrows,
            self.input.relations,
            self.result.pretty()
        )
    }
}

impl Pretty for ClassifyResult {
    fn pretty(&self) -> String {
        let mut out = String::new();
        writeln!(out, "discrete:    {}", self.discrete).unwrap();
        writeln!(out, "gentle:      {}", if self.gentle.verdict { "yes" } else { "no" }).unwrap();
        writeln!(out, "gldim = inf: {}", self.infinite_global_dimension).unwrap();
        writeln!(out, "normal form: {}", self.normal_form.join(" + ")).unwrap();
        for (i, c) in self.components.iter().enumerate() {
            writeln!(out, "\ncomponent {i}: {{{}}}", c.vertices.join(", ")).unwrap();
            writeln!(out, "  gentle {}, {} cycle(s)", c.gentle, c.cycles).unwrap();
            if let Some(clock) = &c.clock {
                writeln!(
                    out,
                    "  clock: {} with, {} against ({})",
                    clock.m_with,
                    clock.m_against,
                    if clock.satisfied { "holds" } else { "fails" }
                )
                .unwrap();
            }
            if let Some(ag) = &c.ag_invariant {
                let pairs: Vec<String> = ag.0.iter().map(|(n, m)| format!("({n},{m})")).collect();
                writeln!(out, "  AG invariant: {}", pairs.join(" ")).unwrap();
            }
            writeln!(out, "  discrete: {} ({})", c.discrete, c.reason).unwrap();
            writeln!(out, "  normal form: {}", c.normal_form).unwrap();
        }
        out
    }
}

impl Pretty for FactorsResult {
    fn pretty(&self) -> String {
        let mut out = String::new();
        writeln!(out, "normal form: {}", self.normal_form.join(" + ")).unwrap();
        writeln!(out, "{:<24} {:>5} {:>5}", "factor", "mult", "size").unwrap();
        for (class, m) in &self.factors.0 {
            writeln!(out, "{:<24} {:>5} {:>5}", class.to_string(), m, class.size()).unwrap();
        }
        writeln!(out, "weight {} = rank {}", self.factors.weight(), self.grothendieck_rank).unwrap();
        writeln!(
            out,
            "derived simple: {} ({})",
            if self.derived_simple.simple { "yes" } else { "no" },
            self.derived_simple.witness
        )
        .unwrap();
        out
    }
}

fn describe_step(step: &SeriesStep) -> String {
    match step {
        SeriesStep::SplitComponents { components } => {
            let parts: Vec<String> = components.iter().map(|c| format!("{{{}}}", c.join(","))).collect();
            format!("split into {}", parts.join(" "))
        }
        SeriesStep::StripExtensionVertex { vertex, .. } => format!("strip source {vertex} -> K"),
        SeriesStep::StripCoextensionVertex { vertex, .. } => format!("strip sink {vertex} -> K"),
        SeriesStep::DropProjRadicalVertex { vertex, radical_cover } => {
            format!("drop {vertex}, rad P = P[{}] -> K", radical_cover.join(","))
        }
        SeriesStep::Terminal { factor, witness } => format!("terminal {factor} ({witness})"),
    }
}

impl Pretty for SeriesResult {
    fn pretty(&self) -> String {
        let mut out = String::new();
        for (i, step) in self.trace.steps.iter().enumerate() {
            writeln!(out, "{i:>3}  {}", describe_step(step)).unwrap();
        }
        writeln!(out, "length {}", self.trace.length).unwrap();
        match &self.verification {
            Verification::Passed(v) => {
                writeln!(out, "verified: {} steps, factors {}, length {} <= rank {}", v.steps_checked, v.factors, v.length, v.rank).unwrap();
            }
            Verification::Failed { error } => writeln!(out, "verification FAILED: {error}").unwrap(),
        }
        out
    }
}

impl Pretty for HomResult {
    fn pretty(&self) -> String {
        let mut out = String::new();
        writeln!(out, "dim Hom({}, {}[h]) over {} ({}), margin {}", self.from, self.to, self.algebra, self.field, self.margin).unwrap();
        let hs: Vec<String> = (0..self.dims.len()).map(|h| format!("{h:>3}")).collect();
        let ds: Vec<String> = self.dims.iter().map(|d| format!("{d:>3}")).collect();
        writeln!(out, "h   {}", hs.join("")).unwrap();
        writeln!(out, "dim {}", ds.join("")).unwrap();
        out
    }
}
