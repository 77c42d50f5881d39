//! Labeled cell complexes standing in for Reeb spaces of triangulable maps.
//!
//! A complex is CW-style: cells per dimension and signed incidence matrices,
//! not a literal triangulation. Top cells carry fiber-type labels (the
//! diffeomorphism type of the fiber component over the open cell); the
//! codimension-one cells carry marks describing what happens to the sheets
//! across them.

use crate::fiber::TypeRegistry;
use crate::matrix::IntMatrix;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// What a codimension-one cell does to the sheets crossing it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FaceMark {
    /// A sheet passes through unchanged: two cofaces with opposite incidence
    /// signs and the same label (or one cell wrapping both sides).
    Regular,
    /// Image of singular points; the incidence row is unconstrained and
    /// generates a relation.
    Singular,
    /// The face lies on the boundary of the space: exactly one coface, whose
    /// sheet ends here. Forces that label's class to die.
    BoundaryFace,
    /// A hidden transition: two cofaces with opposite signs whose labels may
    /// differ. Treated as singular in strict mode, and as a reachability-
    /// gated jump in visibility mode.
    Invisible,
}

impl fmt::Display for FaceMark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FaceMark::Regular => "regular",
            FaceMark::Singular => "singular",
            FaceMark::BoundaryFace => "boundary_face",
            FaceMark::Invisible => "invisible",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `D_{k-1} * D_k != 0` at the given (k-2)-cell / k-cell pair.
    ChainRule {
        dim: usize,
        lower: String,
        upper: String,
    },
    UnlabeledCell {
        cell: String,
    },
    UnknownLabelType {
        cell: String,
        type_id: String,
    },
    UnmarkedFace {
        face: String,
    },
    BoundaryFaceShape {
        face: String,
        nonzero: usize,
    },
    BoundaryFaceCoefficient {
        face: String,
        cell: String,
    },
    RegularFaceShape {
        face: String,
    },
    RegularFaceLabels {
        face: String,
        left: String,
        right: String,
    },
    InvisibleFaceShape {
        face: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ChainRule { dim, lower, upper } => write!(
                f,
                "boundary of boundary is nonzero: D_{} * D_{} has a nonzero entry at ({lower}, {upper})",
                dim - 1,
                dim
            ),
            Violation::UnlabeledCell { cell } => write!(f, "top cell `{cell}` has no fiber label"),
            Violation::UnknownLabelType { cell, type_id } => {
                write!(f, "top cell `{cell}` is labeled with unknown type `{type_id}`")
            }
            Violation::UnmarkedFace { face } => write!(f, "face `{face}` has no mark"),
            Violation::BoundaryFaceShape { face, nonzero } => write!(
                f,
                "boundary face `{face}` must have exactly one coface, found {nonzero} incidences"
            ),
            Violation::BoundaryFaceCoefficient { face, cell } => write!(
                f,
                "boundary face `{face}` has a non-unit incidence with `{cell}`"
            ),
            Violation::RegularFaceShape { face } => write!(
                f,
                "regular face `{face}` must have two opposite unit incidences or none"
            ),
            Violation::RegularFaceLabels { face, left, right } => write!(
                f,
                "regular face `{face}` separates different labels `{left}` and `{right}`"
            ),
            Violation::InvisibleFaceShape { face } => write!(
                f,
                "invisible face `{face}` must have exactly two opposite unit incidences"
            ),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_ok() {
            Ok(())
        } else {
            Err(Error::Invalid(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "- {v}")?;
        }
        Ok(())
    }
}

/// The core object: cells per dimension, signed boundary matrices, fiber
/// labels on top cells, and marks on codimension-one faces.
#[derive(Clone, Debug)]
pub struct LabeledComplex {
    dimension: usize,
    fiber_dim: Option<usize>,
    cells: Vec<Vec<String>>,
    index: Vec<BTreeMap<String, usize>>,
    /// Sparse incidences per dimension `k` (1..=n): (face index, cell index, coefficient).
    incidence: Vec<BTreeMap<(usize, usize), BigInt>>,
    labels: BTreeMap<String, String>,
    marks: BTreeMap<String, FaceMark>,
}

impl LabeledComplex {
    pub fn new(dimension: usize) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::BadParameter(
                "a complex needs top dimension at least 1".into(),
            ));
        }
        Ok(LabeledComplex {
            dimension,
            fiber_dim: None,
            cells: vec![Vec::new(); dimension + 1],
            index: vec![BTreeMap::new(); dimension + 1],
            incidence: vec![BTreeMap::new(); dimension],
            labels: BTreeMap::new(),
            marks: BTreeMap::new(),
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn fiber_dim(&self) -> Option<usize> {
        self.fiber_dim
    }

    pub fn set_fiber_dim(&mut self, d: Option<usize>) {
        self.fiber_dim = d;
    }

    pub fn cells(&self, dim: usize) -> &[String] {
        &self.cells[dim]
    }

    pub fn cell_count(&self, dim: usize) -> usize {
        self.cells[dim].len()
    }

    pub fn top_cells(&self) -> &[String] {
        self.cells(self.dimension)
    }

    pub fn faces(&self) -> &[String] {
        self.cells(self.dimension - 1)
    }

    pub fn labels(&self) -> &BTreeMap<String, String> {
        &self.labels
    }

    pub fn marks(&self) -> &BTreeMap<String, FaceMark> {
        &self.marks
    }

    pub fn label_of(&self, cell: &str) -> Option<&str> {
        self.labels.get(cell).map(String::as_str)
    }

    pub fn mark_of(&self, face: &str) -> Option<FaceMark> {
        self.marks.get(face).copied()
    }

    pub fn add_cell(&mut self, dim: usize, id: &str) -> Result<()> {
        if dim > self.dimension {
            return Err(Error::BadParameter(format!(
                "cell `{id}` has dimension {dim}, the complex has top dimension {}",
                self.dimension
            )));
        }
        for (d, idx) in self.index.iter().enumerate() {
            if idx.contains_key(id) {
                return Err(Error::BadParameter(format!(
                    "cell id `{id}` is already used in dimension {d}"
                )));
            }
        }
        self.index[dim].insert(id.to_string(), self.cells[dim].len());
        self.cells[dim].push(id.to_string());
        Ok(())
    }

    fn cell_pos(&self, dim: usize, id: &str) -> Result<usize> {
        self.index[dim].get(id).copied().ok_or_else(|| {
            Error::BadParameter(format!("no cell `{id}` in dimension {dim}"))
        })
    }

    fn dim_of(&self, id: &str) -> Option<usize> {
        (0..=self.dimension).find(|&d| self.index[d].contains_key(id))
    }

    /// Accumulates an incidence coefficient between a `(k-1)`-cell and a
    /// `k`-cell. Repeated calls on the same pair add up.
    pub fn add_boundary(&mut self, face_id: &str, cell_id: &str, coeff: impl Into<BigInt>) -> Result<()> {
        let coeff = coeff.into();
        let cell_dim = self.dim_of(cell_id).ok_or_else(|| {
            Error::BadParameter(format!("boundary references unknown cell `{cell_id}`"))
        })?;
        if cell_dim == 0 {
            return Err(Error::BadParameter(format!(
                "cell `{cell_id}` has dimension 0 and no boundary"
            )));
        }
        let face_pos = self.cell_pos(cell_dim - 1, face_id).map_err(|_| {
            Error::BadParameter(format!(
                "boundary of `{cell_id}` references `{face_id}`, which is not a {}-cell",
                cell_dim - 1
            ))
        })?;
        let cell_pos = self.cell_pos(cell_dim, cell_id)?;
        let slot = self.incidence[cell_dim - 1]
            .entry((face_pos, cell_pos))
            .or_insert_with(BigInt::zero);
        *slot += coeff;
        Ok(())
    }

    pub fn set_label(&mut self, cell_id: &str, type_id: &str) -> Result<()> {
        self.cell_pos(self.dimension, cell_id).map_err(|_| {
            Error::BadParameter(format!("label target `{cell_id}` is not a top cell"))
        })?;
        self.labels.insert(cell_id.to_string(), type_id.to_string());
        Ok(())
    }

    pub fn set_mark(&mut self, face_id: &str, mark: FaceMark) -> Result<()> {
        self.cell_pos(self.dimension - 1, face_id).map_err(|_| {
            Error::BadParameter(format!(
                "mark target `{face_id}` is not a codimension-one cell"
            ))
        })?;
        self.marks.insert(face_id.to_string(), mark);
        Ok(())
    }

    /// Signed boundary matrix `D_k`: rows are `(k-1)`-cells, columns are
    /// `k`-cells, in registration order.
    pub fn boundary_matrix(&self, k: usize) -> IntMatrix {
        assert!(k >= 1 && k <= self.dimension, "no boundary matrix D_{k}");
        let mut m = IntMatrix::zero(self.cells[k - 1].len(), self.cells[k].len());
        for ((i, j), c) in &self.incidence[k - 1] {
            m[(*i, *j)] = c.clone();
        }
        m
    }

    pub fn top_boundary_matrix(&self) -> IntMatrix {
        self.boundary_matrix(self.dimension)
    }

    /// Checks every structural invariant and reports each violation with the
    /// cells involved. Never fails; inspect the report.
    pub fn validate(&self, registry: &TypeRegistry) -> ValidationReport {
        let mut report = ValidationReport::default();
        let n = self.dimension;

        // chain rule D_{k-1} * D_k = 0
        for k in 2..=n {
            let prod = self.boundary_matrix(k - 1).mul(&self.boundary_matrix(k));
            for i in 0..prod.rows() {
                for j in 0..prod.cols() {
                    if !prod[(i, j)].is_zero() {
                        report.violations.push(Violation::ChainRule {
                            dim: k,
                            lower: self.cells[k - 2][i].clone(),
                            upper: self.cells[k][j].clone(),
                        });
                    }
                }
            }
        }

        // every top cell labeled with a known type
        for cell in &self.cells[n] {
            match self.labels.get(cell) {
                None => report.violations.push(Violation::UnlabeledCell { cell: cell.clone() }),
                Some(ty) => {
                    if registry.index_of(ty).is_err() {
                        report.violations.push(Violation::UnknownLabelType {
                            cell: cell.clone(),
                            type_id: ty.clone(),
                        });
                    }
                }
            }
        }

        // face marks and the row shapes they require
        let top = self.top_boundary_matrix();
        for (i, face) in self.cells[n - 1].iter().enumerate() {
            let Some(mark) = self.marks.get(face) else {
                report.violations.push(Violation::UnmarkedFace { face: face.clone() });
                continue;
            };
            let nonzero: Vec<usize> = (0..top.cols()).filter(|&j| !top[(i, j)].is_zero()).collect();
            match mark {
                FaceMark::Singular => {}
                FaceMark::BoundaryFace => {
                    if nonzero.len() != 1 {
                        report.violations.push(Violation::BoundaryFaceShape {
                            face: face.clone(),
                            nonzero: nonzero.len(),
                        });
                    } else if !top[(i, nonzero[0])].abs().is_one() {
                        report.violations.push(Violation::BoundaryFaceCoefficient {
                            face: face.clone(),
                            cell: self.cells[n][nonzero[0]].clone(),
                        });
                    }
                }
                FaceMark::Regular => {
                    // a zero row is a sheet meeting itself across the face
                    if nonzero.is_empty() {
                        continue;
                    }
                    if !self.is_opposite_unit_pair(&top, i, &nonzero) {
                        report.violations.push(Violation::RegularFaceShape { face: face.clone() });
                        continue;
                    }
                    let left = self.labels.get(&self.cells[n][nonzero[0]]);
                    let right = self.labels.get(&self.cells[n][nonzero[1]]);
                    if let (Some(l), Some(r)) = (left, right) {
                        if l != r {
                            report.violations.push(Violation::RegularFaceLabels {
                                face: face.clone(),
                                left: l.clone(),
                                right: r.clone(),
                            });
                        }
                    }
                }
                FaceMark::Invisible => {
                    if !self.is_opposite_unit_pair(&top, i, &nonzero) {
                        report
                            .violations
                            .push(Violation::InvisibleFaceShape { face: face.clone() });
                    }
                }
            }
        }

        report
    }

    fn is_opposite_unit_pair(&self, top: &IntMatrix, row: usize, nonzero: &[usize]) -> bool {
        nonzero.len() == 2
            && top[(row, nonzero[0])].abs().is_one()
            && top[(row, nonzero[1])].abs().is_one()
            && top[(row, nonzero[0])] == -top[(row, nonzero[1])].clone()
    }

    /// Same complex with every top-dimensional incidence sign flipped; the
    /// relation lattice and every verdict are unchanged.
    pub fn with_flipped_top_orientation(&self) -> LabeledComplex {
        let mut flipped = self.clone();
        let n = self.dimension;
        for (_, c) in flipped.incidence[n - 1].iter_mut() {
            *c = -c.clone();
        }
        flipped
    }

    /// Same complex with fiber-type ids renamed by `map`; ids not in the map
    /// stay as they are.
    pub fn with_renamed_types(&self, map: &BTreeMap<String, String>) -> LabeledComplex {
        let mut renamed = self.clone();
        for label in renamed.labels.values_mut() {
            if let Some(new) = map.get(label) {
                *label = new.clone();
            }
        }
        renamed
    }
}
