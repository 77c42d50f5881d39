//! The scene interchange format: a labeled complex, its fiber types, and
//! optional extra relations / classifier data as one JSON document.
//!
//! Scenes are certificates, so parsing is strict: unknown keys, duplicate
//! incidence entries and dangling ids are errors, not warnings. Integer
//! coefficients are emitted as JSON numbers while they fit 53 bits and as
//! decimal strings beyond that; parsing accepts both.

use crate::complex::{FaceMark, LabeledComplex};
use crate::fiber::{Classifier, FiberKind, FiberType, GenusConvention, TypeRegistry};
use crate::quotient::ModuleElement;
use crate::ring::RingSpec;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

/// An integer coefficient with safe JSON round-tripping: numbers up to
/// `2^53` in magnitude, decimal strings beyond.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coeff(pub BigInt);

const SAFE_JSON_INT: i64 = 1 << 53;

impl Serialize for Coeff {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if let Ok(v) = i64::try_from(&self.0) {
            if v.abs() < SAFE_JSON_INT {
                return serializer.serialize_i64(v);
            }
        }
        serializer.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Coeff {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl serde::de::Visitor<'_> for V {
            type Value = Coeff;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                write!(f, "an integer or a decimal string")
            }
            fn visit_i64<E: serde::de::Error>(self, v: i64) -> std::result::Result<Coeff, E> {
                Ok(Coeff(BigInt::from(v)))
            }
            fn visit_u64<E: serde::de::Error>(self, v: u64) -> std::result::Result<Coeff, E> {
                Ok(Coeff(BigInt::from(v)))
            }
            fn visit_str<E: serde::de::Error>(self, v: &str) -> std::result::Result<Coeff, E> {
                BigInt::from_str(v)
                    .map(Coeff)
                    .map_err(|_| E::custom(format!("`{v}` is not a decimal integer")))
            }
        }
        deserializer.deserialize_any(V)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiberTypeJson {
    pub id: String,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orientable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convention: Option<GenusConvention>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group_tag: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oriented: Option<bool>,
}

impl FiberTypeJson {
    fn into_fiber_type(self) -> Result<FiberType> {
        let id = self.id;
        let scene_err = |msg: String| Error::Scene(msg);
        let kind = match self.kind.as_str() {
            "surface" => {
                let orientable = self.orientable.ok_or_else(|| {
                    scene_err(format!("surface type `{id}` needs an `orientable` flag"))
                })?;
                let genus = self
                    .genus
                    .ok_or_else(|| scene_err(format!("surface type `{id}` needs a `genus`")))?;
                let convention = if orientable {
                    // orientable surfaces ignore the convention
                    self.convention.unwrap_or(GenusConvention::Crosscap)
                } else {
                    self.convention.ok_or_else(|| {
                        scene_err(format!(
                            "non-orientable surface `{id}` needs a genus `convention`"
                        ))
                    })?
                };
                if self.group_tag.is_some() || self.name.is_some() {
                    return Err(scene_err(format!(
                        "surface type `{id}` cannot carry `group_tag` or `name`"
                    )));
                }
                FiberKind::Surface {
                    orientable,
                    genus,
                    convention,
                }
            }
            "sphere" => {
                let group_tag = self.group_tag.ok_or_else(|| {
                    scene_err(format!("sphere type `{id}` needs a `group_tag`"))
                })?;
                if self.orientable.is_some() || self.genus.is_some() || self.convention.is_some() || self.name.is_some() {
                    return Err(scene_err(format!(
                        "sphere type `{id}` only carries `group_tag` and `oriented`"
                    )));
                }
                FiberKind::Sphere { group_tag }
            }
            "symbolic" => {
                let name = self
                    .name
                    .ok_or_else(|| scene_err(format!("symbolic type `{id}` needs a `name`")))?;
                if self.orientable.is_some() || self.genus.is_some() || self.convention.is_some() || self.group_tag.is_some() {
                    return Err(scene_err(format!(
                        "symbolic type `{id}` only carries `name` and `oriented`"
                    )));
                }
                FiberKind::Symbolic { name }
            }
            other => {
                return Err(scene_err(format!(
                    "type `{id}` has unknown kind `{other}`"
                )))
            }
        };
        let oriented = self.oriented.unwrap_or(match &kind {
            FiberKind::Surface { orientable, .. } => *orientable,
            FiberKind::Sphere { .. } => true,
            FiberKind::Symbolic { .. } => false,
        });
        Ok(FiberType { id, kind, oriented })
    }

    fn from_fiber_type(t: &FiberType) -> FiberTypeJson {
        let mut j = FiberTypeJson {
            id: t.id.clone(),
            kind: String::new(),
            orientable: None,
            genus: None,
            convention: None,
            group_tag: None,
            name: None,
            oriented: Some(t.oriented),
        };
        match &t.kind {
            FiberKind::Surface {
                orientable,
                genus,
                convention,
            } => {
                j.kind = "surface".into();
                j.orientable = Some(*orientable);
                j.genus = Some(*genus);
                if !orientable {
                    j.convention = Some(*convention);
                }
            }
            FiberKind::Sphere { group_tag } => {
                j.kind = "sphere".into();
                j.group_tag = Some(group_tag.clone());
            }
            FiberKind::Symbolic { name } => {
                j.kind = "symbolic".into();
                j.name = Some(name.clone());
            }
        }
        j
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupJson {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassifierJson {
    pub group: GroupJson,
    pub assignment: BTreeMap<String, Vec<Coeff>>,
}

impl ClassifierJson {
    pub fn into_classifier(self) -> Result<Classifier> {
        for q in &self.group.torsion {
            if *q < 2 {
                return Err(Error::Scene(format!(
                    "classifier torsion factor {q} must be at least 2"
                )));
            }
        }
        let mut cl = Classifier::new(self.group.free_rank, self.group.torsion);
        for (id, coords) in self.assignment {
            cl.assign_big(&id, coords.into_iter().map(|c| c.0).collect())?;
        }
        Ok(cl)
    }

    pub fn from_classifier(cl: &Classifier) -> ClassifierJson {
        ClassifierJson {
            group: GroupJson {
                free_rank: cl.free_rank,
                torsion: cl.torsion.clone(),
            },
            assignment: cl
                .assignment
                .iter()
                .map(|(id, v)| (id.clone(), v.iter().cloned().map(Coeff).collect()))
                .collect(),
        }
    }
}

/// The on-disk scene document.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneFile {
    pub ring: RingSpec,
    pub dimension: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub fiber_dim: Option<usize>,
    pub fiber_types: Vec<FiberTypeJson>,
    pub cells: BTreeMap<String, Vec<String>>,
    pub boundary: BTreeMap<String, Vec<(String, String, Coeff)>>,
    pub labels: BTreeMap<String, String>,
    pub face_marks: BTreeMap<String, FaceMark>,
    #[serde(default)]
    pub extra_relations: Vec<Vec<(Coeff, String)>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub classifier: Option<ClassifierJson>,
}

/// Everything a scene carries besides the complex and the registry.
#[derive(Clone, Debug)]
pub struct SceneOptions {
    pub ring: RingSpec,
    pub extra_relations: Vec<ModuleElement>,
    pub classifier: Option<Classifier>,
}

/// Parses a scene document. Errors from the JSON layer keep their
/// line/column positions; semantic errors name the offending id.
pub fn parse_scene(text: &str) -> Result<(LabeledComplex, TypeRegistry, SceneOptions)> {
    let file: SceneFile =
        serde_json::from_str(text).map_err(|e| Error::Scene(format!("parse error: {e}")))?;
    scene_to_parts(file)
}

pub fn scene_to_parts(file: SceneFile) -> Result<(LabeledComplex, TypeRegistry, SceneOptions)> {
    let mut registry = TypeRegistry::new();
    for t in file.fiber_types {
        registry.register(t.into_fiber_type()?)?;
    }

    if file.dimension == 0 {
        return Err(Error::Scene("scene dimension must be at least 1".into()));
    }
    let mut complex = LabeledComplex::new(file.dimension)?;
    complex.set_fiber_dim(file.fiber_dim);

    let parse_dim = |key: &str| -> Result<usize> {
        key.parse::<usize>()
            .map_err(|_| Error::Scene(format!("`{key}` is not a cell dimension")))
    };
    let mut dims: Vec<(usize, Vec<String>)> = Vec::new();
    for (key, ids) in &file.cells {
        let d = parse_dim(key)?;
        if d > file.dimension {
            return Err(Error::Scene(format!(
                "cells of dimension {d} exceed the scene dimension {}",
                file.dimension
            )));
        }
        dims.push((d, ids.clone()));
    }
    dims.sort_by_key(|(d, _)| *d);
    for (d, ids) in dims {
        for id in ids {
            complex
                .add_cell(d, &id)
                .map_err(|e| Error::Scene(e.to_string()))?;
        }
    }

    for (key, entries) in &file.boundary {
        let d = parse_dim(key)?;
        if d == 0 || d > file.dimension {
            return Err(Error::Scene(format!(
                "boundary entries for dimension {d} are out of range"
            )));
        }
        let mut seen: BTreeSet<(String, String)> = BTreeSet::new();
        for (face, cell, coeff) in entries {
            if !seen.insert((face.clone(), cell.clone())) {
                return Err(Error::Scene(format!(
                    "duplicate boundary entry for ({face}, {cell})"
                )));
            }
            complex
                .add_boundary(face, cell, coeff.0.clone())
                .map_err(|e| Error::Scene(e.to_string()))?;
        }
    }

    for (cell, ty) in &file.labels {
        complex
            .set_label(cell, ty)
            .map_err(|e| Error::Scene(e.to_string()))?;
    }
    for (face, mark) in &file.face_marks {
        complex
            .set_mark(face, *mark)
            .map_err(|e| Error::Scene(e.to_string()))?;
    }

    let mut extra = Vec::new();
    for terms in &file.extra_relations {
        let mut v = ModuleElement::zero(registry.len());
        for (coeff, ty) in terms {
            let idx = registry.index_of(ty)?;
            v.coords[idx] += &coeff.0;
        }
        extra.push(v);
    }

    let classifier = file.classifier.map(ClassifierJson::into_classifier).transpose()?;

    Ok((
        complex,
        registry,
        SceneOptions {
            ring: file.ring,
            extra_relations: extra,
            classifier,
        },
    ))
}

/// Serializes a complex back into a scene document. Incidence entries are
/// emitted sparsely (summed, nonzero only) in row-major order, so emission
/// is deterministic and `emit . parse` is the identity on documents.
pub fn emit_scene(
    complex: &LabeledComplex,
    registry: &TypeRegistry,
    options: &SceneOptions,
) -> SceneFile {
    let n = complex.dimension();
    let mut cells = BTreeMap::new();
    for d in 0..=n {
        cells.insert(d.to_string(), complex.cells(d).to_vec());
    }
    let mut boundary = BTreeMap::new();
    for d in 1..=n {
        let m = complex.boundary_matrix(d);
        let mut entries = Vec::new();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if m[(i, j)].is_zero() {
                    continue;
                }
                entries.push((
                    complex.cells(d - 1)[i].clone(),
                    complex.cells(d)[j].clone(),
                    Coeff(m[(i, j)].clone()),
                ));
            }
        }
        boundary.insert(d.to_string(), entries);
    }
    let extra_relations = options
        .extra_relations
        .iter()
        .map(|v| {
            v.coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (Coeff(c.clone()), registry.by_index(i).id.clone()))
                .collect()
        })
        .collect();
    SceneFile {
        ring: options.ring.clone(),
        dimension: n,
        fiber_dim: complex.fiber_dim(),
        fiber_types: registry
            .types()
            .iter()
            .map(FiberTypeJson::from_fiber_type)
            .collect(),
        cells,
        boundary,
        labels: complex.labels().clone(),
        face_marks: complex.marks().clone(),
        extra_relations,
        classifier: options.classifier.as_ref().map(ClassifierJson::from_classifier),
    }
}

pub fn scene_to_string(file: &SceneFile) -> String {
    let mut s = serde_json::to_string_pretty(file).expect("scene serialization cannot fail");
    s.push('\n');
    s
}

/// Renders a module element as sparse `coefficient * type` terms.
pub fn format_element(registry: &TypeRegistry, v: &ModuleElement) -> String {
    let terms: Vec<String> = v
        .coords
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let id = &registry.by_index(i).id;
            if c.is_one() {
                id.clone()
            } else if (-c).is_one() {
                format!("-{id}")
            } else {
                format!("{c}*{id}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}
