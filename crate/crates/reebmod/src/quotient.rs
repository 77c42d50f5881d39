//! Finitely presented quotients of `Z^t` (or of a free `Z/kZ`-module) by a
//! relation lattice, with canonical element reduction.
//!
//! A quotient over `Z/kZ` is computed by appending `k*e_i` rows to the
//! relation generators and running the integer pipeline, so one code path
//! serves both rings.

use crate::lattice::{self, hnf_pivots};
use crate::matrix::IntMatrix;
use crate::ring::RingSpec;
use crate::snf::{smith_normal_form, SnfResult};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// An element of the ambient free module, one coordinate per registered
/// fiber type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleElement {
    pub coords: Vec<BigInt>,
}

impl ModuleElement {
    pub fn zero(rank: usize) -> Self {
        ModuleElement {
            coords: vec![BigInt::zero(); rank],
        }
    }

    pub fn basis(rank: usize, index: usize) -> Self {
        let mut e = ModuleElement::zero(rank);
        e.coords[index] = BigInt::one();
        e
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        ModuleElement {
            coords: coords.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero_vector(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &ModuleElement) -> ModuleElement {
        ModuleElement {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &ModuleElement) -> ModuleElement {
        ModuleElement {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, factor: &BigInt) -> ModuleElement {
        ModuleElement {
            coords: self.coords.iter().map(|c| factor * c).collect(),
        }
    }

    pub fn neg(&self) -> ModuleElement {
        ModuleElement {
            coords: self.coords.iter().map(|c| -c.clone()).collect(),
        }
    }
}

/// Presentation of `ambient / relations`: the relation lattice in HNF for
/// reduction, its Smith form for the isomorphism type.
#[derive(Clone, Debug)]
pub struct QuotientModule {
    ambient_rank: usize,
    ring: RingSpec,
    /// Relation generators as provided (plus `k*e_i` rows over `Z/kZ`).
    relation_basis: IntMatrix,
    /// HNF of `relation_basis`, zero rows dropped.
    reduced_basis: IntMatrix,
    pivots: Vec<usize>,
    snf: SnfResult,
    torsion_factors: Vec<BigInt>,
    free_rank: usize,
}

impl QuotientModule {
    /// Quotient of the rank-`ambient_rank` free module by the span of
    /// `relations`. Over `Z/kZ` the span additionally contains `k*e_i`.
    pub fn build(
        ambient_rank: usize,
        relations: &[ModuleElement],
        ring: RingSpec,
    ) -> Result<QuotientModule> {
        for r in relations {
            if r.len() != ambient_rank {
                return Err(Error::ShapeMismatch {
                    expected: ambient_rank,
                    got: r.len(),
                });
            }
        }
        let mut rows: Vec<Vec<BigInt>> = relations.iter().map(|r| r.coords.clone()).collect();
        if let Some(k) = ring.modulus() {
            for i in 0..ambient_rank {
                let mut row = vec![BigInt::zero(); ambient_rank];
                row[i] = BigInt::from(k);
                rows.push(row);
            }
        }
        let relation_basis = IntMatrix::from_row_vectors(ambient_rank, &rows);
        let reduced_basis = lattice::lattice_basis(&relation_basis);
        let pivots = hnf_pivots(&reduced_basis);
        let snf = smith_normal_form(&relation_basis);
        let torsion_factors: Vec<BigInt> = snf
            .invariant_factors
            .iter()
            .filter(|f| **f > BigInt::one())
            .cloned()
            .collect();
        let free_rank = ambient_rank - snf.rank;
        Ok(QuotientModule {
            ambient_rank,
            ring,
            relation_basis,
            reduced_basis,
            pivots,
            snf,
            torsion_factors,
            free_rank,
        })
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn relation_basis(&self) -> &IntMatrix {
        &self.relation_basis
    }

    /// Canonical (HNF) basis of the relation lattice, zero rows dropped.
    pub fn lattice_rows(&self) -> &IntMatrix {
        &self.reduced_basis
    }

    pub fn snf(&self) -> &SnfResult {
        &self.snf
    }

    /// `(free_rank, torsion_factors)` — the isomorphism type of the quotient.
    pub fn invariant_factors(&self) -> (usize, Vec<BigInt>) {
        (self.free_rank, self.torsion_factors.clone())
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion_factors(&self) -> &[BigInt] {
        &self.torsion_factors
    }

    /// Whether the quotient is the zero module.
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion_factors.is_empty()
    }

    fn check_len(&self, x: &ModuleElement) -> Result<()> {
        if x.len() != self.ambient_rank {
            return Err(Error::ShapeMismatch {
                expected: self.ambient_rank,
                got: x.len(),
            });
        }
        Ok(())
    }

    /// Canonical representative of the class of `x`: `reduce(x) == reduce(y)`
    /// exactly when `x - y` lies in the relation lattice. Idempotent.
    pub fn reduce(&self, x: &ModuleElement) -> Result<ModuleElement> {
        self.check_len(x)?;
        Ok(ModuleElement {
            coords: lattice::reduce_mod_lattice(&self.reduced_basis, &self.pivots, &x.coords),
        })
    }

    /// Exact lattice membership: true when the class of `x` is zero.
    pub fn is_zero(&self, x: &ModuleElement) -> Result<bool> {
        Ok(self.reduce(x)?.is_zero_vector())
    }

    /// Class of the `index`-th basis vector.
    pub fn class_of_basis(&self, index: usize) -> ModuleElement {
        self.reduce(&ModuleElement::basis(self.ambient_rank, index))
            .expect("basis vector has the ambient length")
    }
}
