//! Cellular homology of the underlying complex, over the integers, over
//! `Z/kZ`, and in the top dimension with coefficients in a quotient module.
//!
//! Everything reduces to one exact pipeline: kernels over a quotient with
//! torsion are computed by allowing images in the relation lattice and
//! solving over the integers.

use crate::complex::LabeledComplex;
use crate::fiber::TypeRegistry;
use crate::lattice;
use crate::matrix::IntMatrix;
use crate::quotient::{ModuleElement, QuotientModule};
use crate::ring::RingSpec;
use crate::Result;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Free rank and torsion factors of one homology group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSummary {
    pub free_rank: usize,
    pub torsion_factors: Vec<BigInt>,
}

impl GroupSummary {
    pub fn trivial() -> Self {
        GroupSummary {
            free_rank: 0,
            torsion_factors: vec![],
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion_factors.is_empty()
    }
}

/// Homology groups per dimension `0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologySummary {
    pub groups: Vec<GroupSummary>,
}

/// The top homology group with coefficients in a quotient module, plus the
/// class of the canonical chain inside it.
#[derive(Clone, Debug)]
pub struct TopHomology {
    pub free_rank: usize,
    pub torsion_factors: Vec<BigInt>,
    /// Canonical coordinates of the canonical chain's class in the
    /// presentation (length = rank of the cycle lattice).
    pub canonical_class: Vec<BigInt>,
    pub canonical_class_is_zero: bool,
}

/// Writes `row` into block `block` of a vector split into `blocks` blocks
/// of width `width`.
fn block_vector(blocks: usize, width: usize, block: usize, row: &[BigInt]) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); blocks * width];
    v[block * width..(block + 1) * width].clone_from_slice(row);
    v
}

impl LabeledComplex {
    /// Homology of the underlying cell complex. Over the integers this is
    /// the usual Smith-form computation; over `Z/kZ` each group is computed
    /// from the mod-k kernel and image lattices, so composite moduli are
    /// fine. Over `Z/kZ` every group is pure torsion.
    pub fn homology_over(
        &self,
        registry: &TypeRegistry,
        ring: &RingSpec,
    ) -> Result<HomologySummary> {
        self.validate(registry).into_result()?;
        match ring.modulus() {
            None => Ok(self.integral_homology()),
            Some(k) => self.homology_mod(k),
        }
    }

    fn integral_homology(&self) -> HomologySummary {
        let n = self.dimension();
        let snfs: Vec<_> = (1..=n)
            .map(|k| crate::snf::smith_normal_form(&self.boundary_matrix(k)))
            .collect();
        let rank_of = |k: usize| -> usize {
            if k == 0 || k > n {
                0
            } else {
                snfs[k - 1].rank
            }
        };
        let groups = (0..=n)
            .map(|k| {
                let free_rank = self.cell_count(k) - rank_of(k) - rank_of(k + 1);
                let torsion_factors = if k < n {
                    snfs[k]
                        .invariant_factors
                        .iter()
                        .filter(|f| **f > BigInt::one())
                        .cloned()
                        .collect()
                } else {
                    vec![]
                };
                GroupSummary {
                    free_rank,
                    torsion_factors,
                }
            })
            .collect();
        HomologySummary { groups }
    }

    fn homology_mod(&self, modulus: u64) -> Result<HomologySummary> {
        let n = self.dimension();
        let m = BigInt::from(modulus);
        let mut groups = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let ck = self.cell_count(k);
            // cycle lattice: { x : D_k x = 0 mod m }
            let cycles = if k == 0 {
                IntMatrix::identity(ck)
            } else {
                let d = self.boundary_matrix(k);
                let allowed = scaled_identity(&m, d.rows());
                lattice::preimage_lattice(&d, &allowed)
            };
            // boundaries: columns of D_{k+1}, plus m * e_i
            let mut denominators: Vec<Vec<BigInt>> = Vec::new();
            if k < n {
                let d_up = self.boundary_matrix(k + 1);
                for j in 0..d_up.cols() {
                    denominators.push(d_up.col_vec(j));
                }
            }
            for i in 0..ck {
                let mut row = vec![BigInt::zero(); ck];
                row[i] = m.clone();
                denominators.push(row);
            }
            groups.push(present_sublattice_quotient(&cycles, &denominators)?.0);
        }
        Ok(HomologySummary { groups })
    }

    /// Presentation of the kernel of the top boundary map with coefficients
    /// in `quotient`. With no cells above the top dimension this kernel is
    /// the whole top homology group. The canonical chain's class is
    /// reported as an element of the presentation.
    pub fn top_homology_with_quotient(
        &self,
        registry: &TypeRegistry,
        quotient: &QuotientModule,
    ) -> Result<TopHomology> {
        let chain = self.canonical_chain(registry, quotient)?;
        let n = self.dimension();
        let t = quotient.ambient_rank();
        let cn = self.cell_count(n);
        let cf = self.cell_count(n - 1);
        let d = self.top_boundary_matrix();
        let lattice_rows = quotient.lattice_rows();

        // D_n tensored with the identity of the ambient module
        let mut big = IntMatrix::zero(cf * t, cn * t);
        for i in 0..cf {
            for j in 0..cn {
                if d[(i, j)].is_zero() {
                    continue;
                }
                for s in 0..t {
                    big[(i * t + s, j * t + s)] = d[(i, j)].clone();
                }
            }
        }
        // allowed images: the relation lattice in every face block
        let mut allowed_rows: Vec<Vec<BigInt>> = Vec::new();
        for block in 0..cf {
            for r in 0..lattice_rows.rows() {
                allowed_rows.push(block_vector(cf, t, block, lattice_rows.row(r)));
            }
        }
        let allowed = IntMatrix::from_row_vectors(cf * t, &allowed_rows);
        let cycles = lattice::preimage_lattice(&big, &allowed);

        // mod out the relation lattice in every cell block
        let mut denominators: Vec<Vec<BigInt>> = Vec::new();
        for block in 0..cn {
            for r in 0..lattice_rows.rows() {
                denominators.push(block_vector(cn, t, block, lattice_rows.row(r)));
            }
        }
        let (summary, presentation) = present_sublattice_quotient(&cycles, &denominators)?;

        // the canonical chain is a cycle, so it has coordinates here
        let flat: Vec<BigInt> = chain
            .coefficients
            .iter()
            .flat_map(|c| c.coords.iter().cloned())
            .collect();
        let class = if cycles.rows() == 0 {
            vec![]
        } else {
            let coords = lattice::coordinates_in_row_lattice(&cycles, &flat)
                .expect("the canonical chain is a cycle");
            presentation
                .reduce(&ModuleElement { coords })
                .expect("coordinate length matches the presentation")
                .coords
        };
        let is_zero = class.iter().all(Zero::is_zero);
        Ok(TopHomology {
            free_rank: summary.free_rank,
            torsion_factors: summary.torsion_factors,
            canonical_class: class,
            canonical_class_is_zero: is_zero,
        })
    }
}

fn scaled_identity(m: &BigInt, n: usize) -> IntMatrix {
    let mut id = IntMatrix::zero(n, n);
    for i in 0..n {
        id[(i, i)] = m.clone();
    }
    id
}

/// Presents `rowspace(cycles) / span(denominators)` where every denominator
/// lies in the row space: generators are the basis rows of `cycles`,
/// relations are the denominators' coordinates in that basis.
fn present_sublattice_quotient(
    cycles: &IntMatrix,
    denominators: &[Vec<BigInt>],
) -> Result<(GroupSummary, QuotientModule)> {
    let rank = cycles.rows();
    let coords: Vec<ModuleElement> = denominators
        .iter()
        .map(|d| {
            lattice::coordinates_in_row_lattice(cycles, d)
                .map(|coords| ModuleElement { coords })
                .ok_or_else(|| {
                    crate::Error::BadParameter(
                        "denominator lattice is not contained in the cycle lattice".into(),
                    )
                })
        })
        .collect::<Result<Vec<_>>>()?;
    let presentation = QuotientModule::build(rank, &coords, RingSpec::Integers)?;
    let (free_rank, torsion_factors) = presentation.invariant_factors();
    Ok((
        GroupSummary {
            free_rank,
            torsion_factors,
        },
        presentation,
    ))
}
