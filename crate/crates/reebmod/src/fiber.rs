//! Symbolic fiber types and group-valued classifiers.
//!
//! A fiber type is an opaque symbol with optional metadata; the library
//! never decides whether two manifolds are diffeomorphic. Two types are
//! equal exactly when their ids are equal.

use crate::lattice;
use crate::matrix::IntMatrix;
use crate::quotient::ModuleElement;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Genus bookkeeping for non-orientable surfaces. `Crosscap` counts
/// projective-plane summands (chi = 2 - g); `Klein` counts Klein-bottle
/// summands (chi = 2 - 2g). Sources disagree on which one "genus" means,
/// so the convention travels with the type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenusConvention {
    Crosscap,
    Klein,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiberKind {
    Surface {
        orientable: bool,
        genus: u64,
        convention: GenusConvention,
    },
    Sphere {
        group_tag: String,
    },
    Symbolic {
        name: String,
    },
}

/// Diffeomorphism type of a closed connected fiber, as a registry symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberType {
    pub id: String,
    pub kind: FiberKind,
    pub oriented: bool,
}

impl FiberType {
    pub fn orientable_surface(id: &str, genus: u64) -> Self {
        FiberType {
            id: id.to_string(),
            kind: FiberKind::Surface {
                orientable: true,
                genus,
                convention: GenusConvention::Crosscap, // ignored for orientable surfaces
            },
            oriented: true,
        }
    }

    pub fn nonorientable_surface(id: &str, genus: u64, convention: GenusConvention) -> Self {
        FiberType {
            id: id.to_string(),
            kind: FiberKind::Surface {
                orientable: false,
                genus,
                convention,
            },
            oriented: false,
        }
    }

    pub fn sphere(id: &str, group_tag: &str) -> Self {
        FiberType {
            id: id.to_string(),
            kind: FiberKind::Sphere {
                group_tag: group_tag.to_string(),
            },
            oriented: true,
        }
    }

    pub fn symbolic(id: &str, name: &str) -> Self {
        FiberType {
            id: id.to_string(),
            kind: FiberKind::Symbolic {
                name: name.to_string(),
            },
            oriented: false,
        }
    }

    fn check(&self) -> Result<()> {
        if let FiberKind::Surface {
            orientable: false,
            genus,
            ..
        } = &self.kind
        {
            if *genus == 0 {
                return Err(Error::BadParameter(format!(
                    "non-orientable surface `{}` needs genus >= 1",
                    self.id
                )));
            }
        }
        Ok(())
    }

    /// Euler characteristic; only surfaces have one here.
    pub fn euler_characteristic(&self) -> Result<i64> {
        match &self.kind {
            FiberKind::Surface {
                orientable: true,
                genus,
                ..
            } => Ok(2 - 2 * (*genus as i64)),
            FiberKind::Surface {
                orientable: false,
                genus,
                convention,
            } => Ok(match convention {
                GenusConvention::Crosscap => 2 - (*genus as i64),
                GenusConvention::Klein => 2 - 2 * (*genus as i64),
            }),
            _ => Err(Error::NotASurface(self.id.clone())),
        }
    }

    /// Class in the unoriented surface cobordism group `Z/2`: the Euler
    /// characteristic mod 2.
    pub fn unoriented_cobordism_class(&self) -> Result<u8> {
        Ok((self.euler_characteristic()?.rem_euclid(2)) as u8)
    }
}

/// Ordered registry of fiber types; the registration order fixes the
/// coordinates of the ambient free module.
#[derive(Clone, Debug, Default)]
pub struct TypeRegistry {
    types: Vec<FiberType>,
    index: BTreeMap<String, usize>,
}

impl TypeRegistry {
    pub fn new() -> Self {
        TypeRegistry::default()
    }

    /// Registers a type and returns its coordinate index.
    pub fn register(&mut self, fiber: FiberType) -> Result<usize> {
        fiber.check()?;
        if self.index.contains_key(&fiber.id) {
            return Err(Error::DuplicateType(fiber.id));
        }
        let idx = self.types.len();
        self.index.insert(fiber.id.clone(), idx);
        self.types.push(fiber);
        Ok(idx)
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownType(id.to_string()))
    }

    pub fn get(&self, id: &str) -> Result<&FiberType> {
        Ok(&self.types[self.index_of(id)?])
    }

    pub fn by_index(&self, idx: usize) -> &FiberType {
        &self.types[idx]
    }

    pub fn types(&self) -> &[FiberType] {
        &self.types
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.types.iter().map(|t| t.id.as_str())
    }

    /// Basis vector of a type in `Z^t`.
    pub fn basis_element(&self, id: &str) -> Result<ModuleElement> {
        Ok(ModuleElement::basis(self.len(), self.index_of(id)?))
    }
}

/// A finitely generated abelian group `Z^free_rank + Z/q_1 + ... + Z/q_s`
/// together with an element of it per fiber type.
#[derive(Clone, Debug)]
pub struct Classifier {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
    pub assignment: BTreeMap<String, Vec<BigInt>>,
}

impl Classifier {
    pub fn new(free_rank: usize, torsion: Vec<u64>) -> Self {
        Classifier {
            free_rank,
            torsion,
            assignment: BTreeMap::new(),
        }
    }

    pub fn group_rank(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn assign(&mut self, id: &str, value: &[i64]) -> Result<()> {
        self.assign_big(id, value.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn assign_big(&mut self, id: &str, value: Vec<BigInt>) -> Result<()> {
        if value.len() != self.group_rank() {
            return Err(Error::AssignmentShape {
                id: id.to_string(),
                expected: self.group_rank(),
                got: value.len(),
            });
        }
        self.assignment.insert(id.to_string(), value);
        Ok(())
    }

    fn raw_class(&self, id: &str) -> Result<&Vec<BigInt>> {
        self.assignment
            .get(id)
            .ok_or_else(|| Error::MissingAssignment(id.to_string()))
    }

    /// Canonical form of a raw group vector: torsion coordinates land in
    /// `[0, q_j)`.
    pub fn canonicalize(&self, raw: &[BigInt]) -> Vec<BigInt> {
        raw.iter()
            .enumerate()
            .map(|(j, v)| {
                if j < self.free_rank {
                    v.clone()
                } else {
                    v.mod_floor(&BigInt::from(self.torsion[j - self.free_rank]))
                }
            })
            .collect()
    }

    pub fn is_group_zero(&self, raw: &[BigInt]) -> bool {
        self.canonicalize(raw).iter().all(Zero::is_zero)
    }

    /// Canonical class of a fiber type in the target group.
    pub fn class_of(&self, id: &str) -> Result<Vec<BigInt>> {
        Ok(self.canonicalize(self.raw_class(id)?))
    }

    /// Image of an ambient vector under the induced map `Z^t -> G`.
    pub fn image_of(&self, registry: &TypeRegistry, x: &ModuleElement) -> Result<Vec<BigInt>> {
        if x.len() != registry.len() {
            return Err(Error::ShapeMismatch {
                expected: registry.len(),
                got: x.len(),
            });
        }
        let mut img = vec![BigInt::zero(); self.group_rank()];
        for (i, c) in x.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cls = self.raw_class(&registry.by_index(i).id)?;
            for (j, v) in cls.iter().enumerate() {
                img[j] += c * v;
            }
        }
        Ok(self.canonicalize(&img))
    }

    /// Generators of the kernel lattice of `Z^t -> G`. The quotient of
    /// `Z^t` by these is isomorphic to the image subgroup of `G`.
    pub fn kernel_relations(&self, registry: &TypeRegistry) -> Result<Vec<ModuleElement>> {
        let t = registry.len();
        let g = self.group_rank();
        // rows 0..t: the assignment matrix; rows t..t+s: q_j * e_{f+j}
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(t + self.torsion.len());
        for fiber in registry.types() {
            rows.push(self.raw_class(&fiber.id)?.clone());
        }
        for (j, q) in self.torsion.iter().enumerate() {
            let mut row = vec![BigInt::zero(); g];
            row[self.free_rank + j] = BigInt::from(*q);
            rows.push(row);
        }
        let stacked = IntMatrix::from_row_vectors(g, &rows);
        let kernel = lattice::left_kernel(&stacked);
        // project onto the first t coordinates and canonicalize
        let projected: Vec<Vec<BigInt>> = (0..kernel.rows())
            .map(|i| kernel.row(i)[..t].to_vec())
            .collect();
        let basis = lattice::lattice_basis(&IntMatrix::from_row_vectors(t, &projected));
        Ok((0..basis.rows())
            .map(|i| ModuleElement {
                coords: basis.row_vec(i),
            })
            .collect())
    }
}
