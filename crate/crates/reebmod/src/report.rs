//! Machine-readable reports for the command line. The JSON shape is stable
//! and the human rendering carries the same data; identical inputs always
//! produce identical bytes.

use crate::complex::ValidationReport;
use crate::fiber::TypeRegistry;
use crate::homology::HomologySummary;
use crate::quotient::{ModuleElement, QuotientModule};
use crate::scene_io::{format_element, Coeff};
use crate::verdict::{Relation, Verdict};
use num_bigint::BigInt;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Clone, Debug, Serialize)]
pub struct ValidationJson {
    pub ok: bool,
    pub violations: Vec<String>,
}

impl ValidationJson {
    pub fn from_report(report: &ValidationReport) -> Self {
        ValidationJson {
            ok: report.is_ok(),
            violations: report.violations.iter().map(|v| v.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationJson {
    pub site: String,
    pub vector: Vec<(Coeff, String)>,
    pub rendered: String,
}

impl RelationJson {
    pub fn from_relation(registry: &TypeRegistry, r: &Relation) -> Self {
        RelationJson {
            site: r.site.clone(),
            vector: sparse_terms(registry, &r.vector),
            rendered: format_element(registry, &r.vector),
        }
    }
}

fn sparse_terms(registry: &TypeRegistry, v: &ModuleElement) -> Vec<(Coeff, String)> {
    v.coords
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(i, c)| (Coeff(c.clone()), registry.by_index(i).id.clone()))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleJson {
    pub ring: String,
    pub ambient_rank: usize,
    pub free_rank: usize,
    pub torsion_factors: Vec<Coeff>,
    pub is_trivial: bool,
}

impl ModuleJson {
    pub fn from_quotient(q: &QuotientModule) -> Self {
        let (free_rank, torsion) = q.invariant_factors();
        ModuleJson {
            ring: q.ring().to_string(),
            ambient_rank: q.ambient_rank(),
            free_rank,
            torsion_factors: torsion.into_iter().map(Coeff).collect(),
            is_trivial: q.is_trivial(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassJson {
    pub coords: Vec<Coeff>,
    pub is_zero: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictJson {
    pub nonvanishing: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_cell: Option<String>,
    pub witness: Vec<CellClassJson>,
    pub free_rank: usize,
    pub torsion_factors: Vec<Coeff>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CellClassJson {
    pub cell: String,
    pub coords: Vec<Coeff>,
    pub is_zero: bool,
}

impl VerdictJson {
    pub fn from_verdict(v: &Verdict) -> Self {
        VerdictJson {
            nonvanishing: v.nonvanishing,
            witness_cell: v.witness_cell.clone(),
            witness: v
                .witness
                .cells
                .iter()
                .zip(&v.witness.coefficients)
                .map(|(cell, coeff)| CellClassJson {
                    cell: cell.clone(),
                    coords: coeff.coords.iter().cloned().map(Coeff).collect(),
                    is_zero: coeff.is_zero_vector(),
                })
                .collect(),
            free_rank: v.free_rank,
            torsion_factors: v.torsion_factors.iter().cloned().map(Coeff).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifierReportJson {
    pub compatible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offending_relation: Option<RelationJson>,
    pub group_free_rank: usize,
    pub group_torsion: Vec<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomologyRowJson {
    pub dimension: usize,
    pub free_rank: usize,
    pub torsion_factors: Vec<Coeff>,
}

pub fn homology_rows(h: &HomologySummary) -> Vec<HomologyRowJson> {
    h.groups
        .iter()
        .enumerate()
        .map(|(dimension, g)| HomologyRowJson {
            dimension,
            free_rank: g.free_rank,
            torsion_factors: g.torsion_factors.iter().cloned().map(Coeff).collect(),
        })
        .collect()
}

/// One report per command invocation.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub validation: Option<ValidationJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<RelationJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<BTreeMap<String, ClassJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classifier: Option<ClassifierReportJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<VerdictJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homology: Option<Vec<HomologyRowJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transition_check: Option<ValidationJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub exit: i32,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            validation: None,
            relations: None,
            module: None,
            classes: None,
            classifier: None,
            verdict: None,
            homology: None,
            transition_check: None,
            error: None,
            exit: 0,
        }
    }

    pub fn class_table(
        registry: &TypeRegistry,
        q: &QuotientModule,
    ) -> crate::Result<BTreeMap<String, ClassJson>> {
        let mut table = BTreeMap::new();
        for (i, t) in registry.types().iter().enumerate() {
            let reduced = q.reduce(&ModuleElement::basis(registry.len(), i))?;
            table.insert(
                t.id.clone(),
                ClassJson {
                    coords: reduced.coords.iter().cloned().map(Coeff).collect(),
                    is_zero: reduced.is_zero_vector(),
                },
            );
        }
        Ok(table)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization cannot fail");
        s.push('\n');
        s
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {}", self.command);
        if let Some(v) = &self.validation {
            if v.ok {
                let _ = writeln!(out, "validation: ok");
            } else {
                let _ = writeln!(out, "validation: {} violation(s)", v.violations.len());
                for msg in &v.violations {
                    let _ = writeln!(out, "  - {msg}");
                }
            }
        }
        if let Some(rels) = &self.relations {
            let _ = writeln!(out, "relations ({}):", rels.len());
            for r in rels {
                let _ = writeln!(out, "  {} : {}", r.site, r.rendered);
            }
        }
        if let Some(m) = &self.module {
            let _ = writeln!(
                out,
                "module: ring {}, ambient rank {}, free rank {}, torsion {}",
                m.ring,
                m.ambient_rank,
                m.free_rank,
                format_factors(&m.torsion_factors)
            );
        }
        if let Some(classes) = &self.classes {
            let _ = writeln!(out, "classes:");
            for (ty, cls) in classes {
                let _ = writeln!(
                    out,
                    "  {} -> {} {}",
                    ty,
                    format_coords(&cls.coords),
                    if cls.is_zero { "(zero)" } else { "(nonzero)" }
                );
            }
        }
        if let Some(cl) = &self.classifier {
            let _ = writeln!(
                out,
                "classifier: {} (group free rank {}, torsion {:?})",
                if cl.compatible { "compatible" } else { "incompatible" },
                cl.group_free_rank,
                cl.group_torsion
            );
            if let Some(off) = &cl.offending_relation {
                let _ = writeln!(out, "  offending relation at {}: {}", off.site, off.rendered);
            }
        }
        if let Some(v) = &self.verdict {
            let _ = writeln!(
                out,
                "verdict: {}",
                if v.nonvanishing {
                    "nonvanishing"
                } else {
                    "inconclusive"
                }
            );
            if let Some(cell) = &v.witness_cell {
                let _ = writeln!(out, "  witness cell: {cell}");
            }
            for w in &v.witness {
                let _ = writeln!(
                    out,
                    "  {} -> {} {}",
                    w.cell,
                    format_coords(&w.coords),
                    if w.is_zero { "(zero)" } else { "(nonzero)" }
                );
            }
        }
        if let Some(rows) = &self.homology {
            let _ = writeln!(out, "homology:");
            for r in rows {
                let _ = writeln!(
                    out,
                    "  H_{} = free rank {}, torsion {}",
                    r.dimension,
                    r.free_rank,
                    format_factors(&r.torsion_factors)
                );
            }
        }
        if let Some(t) = &self.transition_check {
            if t.ok {
                let _ = writeln!(out, "transitions: ok");
            } else {
                let _ = writeln!(out, "transitions: {} violation(s)", t.violations.len());
                for msg in &t.violations {
                    let _ = writeln!(out, "  - {msg}");
                }
            }
        }
        if let Some(e) = &self.error {
            let _ = writeln!(out, "error: {e}");
        }
        let _ = writeln!(out, "exit: {}", self.exit);
        out
    }
}

fn format_factors(factors: &[Coeff]) -> String {
    if factors.is_empty() {
        "[]".to_string()
    } else {
        format!(
            "[{}]",
            factors
                .iter()
                .map(|c| c.0.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

fn format_coords(coords: &[Coeff]) -> String {
    format!(
        "({})",
        coords
            .iter()
            .map(|c| c.0.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    )
}

/// Group summary of a classifier target for reports.
pub fn classifier_group_summary(free_rank: usize, torsion: &[u64]) -> (usize, Vec<u64>) {
    (free_rank, torsion.to_vec())
}

pub fn coeffs(v: &[BigInt]) -> Vec<Coeff> {
    v.iter().cloned().map(Coeff).collect()
}
