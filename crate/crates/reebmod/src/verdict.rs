//! Relation extraction, compatible quotients, the canonical top chain, and
//! non-vanishing verdicts.
//!
//! Every transition face of a labeled complex contributes a signed sum of
//! fiber-type basis vectors. The span of these sums is the smallest
//! submodule a quotient must kill for the canonical chain to close up into
//! a cycle; a label whose class survives that quotient certifies that the
//! top homology of the complex with quotient coefficients is nonzero.

use crate::complex::{FaceMark, LabeledComplex};
use crate::fiber::{Classifier, FiberKind, TypeRegistry};
use crate::matrix::IntMatrix;
use crate::quotient::{ModuleElement, QuotientModule};
use crate::ring::RingSpec;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

/// A relation vector together with the face that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub site: String,
    pub vector: ModuleElement,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationMode {
    /// Every non-regular face generates its relation, hidden transitions
    /// included. This is the default and the mode the verdicts use.
    Strict,
    /// Hidden (invisible) faces only contribute jump relations when a sheet
    /// path from a visible face reaches them. Experimental.
    Visibility,
}

/// The top chain whose coefficient at each cell is the reduced class of the
/// cell's label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalChain {
    pub cells: Vec<String>,
    pub coefficients: Vec<ModuleElement>,
}

impl CanonicalChain {
    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(ModuleElement::is_zero_vector)
    }

    pub fn coefficient_of(&self, cell: &str) -> Option<&ModuleElement> {
        self.cells
            .iter()
            .position(|c| c == cell)
            .map(|i| &self.coefficients[i])
    }
}

/// Outcome of the non-vanishing test.
#[derive(Clone, Debug)]
pub struct Verdict {
    /// True when some coefficient of the canonical cycle is nonzero, i.e.
    /// the top homology with the given coefficients cannot vanish.
    pub nonvanishing: bool,
    pub witness: CanonicalChain,
    /// First top cell carrying a nonzero class, when there is one.
    pub witness_cell: Option<String>,
    pub free_rank: usize,
    pub torsion_factors: Vec<BigInt>,
}

impl LabeledComplex {
    fn labeled_index(&self, registry: &TypeRegistry, cell: &str) -> Result<usize> {
        let ty = self
            .label_of(cell)
            .ok_or_else(|| Error::BadParameter(format!("top cell `{cell}` has no label")))?;
        registry.index_of(ty)
    }

    /// `r_tau = sum_sigma D_n[tau, sigma] * e_{label(sigma)}` for one face row.
    fn face_relation(
        &self,
        registry: &TypeRegistry,
        top: &IntMatrix,
        row: usize,
    ) -> Result<ModuleElement> {
        let mut vector = ModuleElement::zero(registry.len());
        for (j, cell) in self.top_cells().iter().enumerate() {
            let c = &top[(row, j)];
            if c.is_zero() {
                continue;
            }
            let idx = self.labeled_index(registry, cell)?;
            vector.coords[idx] += c;
        }
        Ok(vector)
    }

    /// The relation generators read off every face: one vector per
    /// transition. Regular faces cancel exactly and are omitted, as is any
    /// face whose sum happens to vanish. Hidden transitions are treated as
    /// singular here.
    pub fn strict_relations(&self, registry: &TypeRegistry) -> Result<Vec<Relation>> {
        self.curve_relations(registry, RelationMode::Strict)
    }

    /// Relation extraction with an explicit mode. In visibility mode a
    /// hidden transition only contributes its jump when one of its sheets
    /// is reachable from a coface of a visible face through hidden
    /// transitions alone; sheet components with no visible face contribute
    /// nothing.
    pub fn curve_relations(
        &self,
        registry: &TypeRegistry,
        mode: RelationMode,
    ) -> Result<Vec<Relation>> {
        self.validate(registry).into_result()?;
        let top = self.top_boundary_matrix();
        let faces = self.faces();

        let emit_rows: Vec<usize> = match mode {
            RelationMode::Strict => (0..faces.len()).collect(),
            RelationMode::Visibility => {
                let visible: Vec<usize> = (0..faces.len())
                    .filter(|&i| self.mark_of(&faces[i]) != Some(FaceMark::Invisible))
                    .collect();
                let reachable = self.sheets_reachable_from(&top, &visible);
                (0..faces.len())
                    .filter(|&i| {
                        if self.mark_of(&faces[i]) != Some(FaceMark::Invisible) {
                            return true;
                        }
                        (0..top.cols()).any(|j| !top[(i, j)].is_zero() && reachable.contains(&j))
                    })
                    .collect()
            }
        };

        let mut relations = Vec::new();
        for row in emit_rows {
            let vector = self.face_relation(registry, &top, row)?;
            if !vector.is_zero_vector() {
                relations.push(Relation {
                    site: faces[row].clone(),
                    vector,
                });
            }
        }
        Ok(relations)
    }

    /// Top cells reachable from the cofaces of the given face rows by
    /// crossing hidden transitions only.
    fn sheets_reachable_from(&self, top: &IntMatrix, seed_rows: &[usize]) -> BTreeSet<usize> {
        let faces = self.faces();
        let mut reached: BTreeSet<usize> = BTreeSet::new();
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &row in seed_rows {
            for j in 0..top.cols() {
                if !top[(row, j)].is_zero() && reached.insert(j) {
                    queue.push_back(j);
                }
            }
        }
        // edges of the sheet graph: invisible faces joining their two cofaces
        let jump_edges: Vec<(usize, usize)> = (0..faces.len())
            .filter(|&i| self.mark_of(&faces[i]) == Some(FaceMark::Invisible))
            .filter_map(|i| {
                let cofaces: Vec<usize> =
                    (0..top.cols()).filter(|&j| !top[(i, j)].is_zero()).collect();
                match cofaces.as_slice() {
                    [a, b] => Some((*a, *b)),
                    _ => None,
                }
            })
            .collect();
        while let Some(cell) = queue.pop_front() {
            for &(a, b) in &jump_edges {
                let other = if a == cell {
                    b
                } else if b == cell {
                    a
                } else {
                    continue;
                };
                if reached.insert(other) {
                    queue.push_back(other);
                }
            }
        }
        reached
    }

    /// Quotient of the free module on the registry by the strict relations
    /// plus any caller-supplied extra relations. Classes that die here die
    /// in every compatible quotient.
    pub fn universal_quotient(
        &self,
        registry: &TypeRegistry,
        ring: RingSpec,
        extra_relations: &[ModuleElement],
    ) -> Result<QuotientModule> {
        let mut relations: Vec<ModuleElement> = self
            .strict_relations(registry)?
            .into_iter()
            .map(|r| r.vector)
            .collect();
        relations.extend_from_slice(extra_relations);
        QuotientModule::build(registry.len(), &relations, ring)
    }

    /// The chain assigning to each top cell the reduced class of its label.
    pub fn canonical_chain(
        &self,
        registry: &TypeRegistry,
        quotient: &QuotientModule,
    ) -> Result<CanonicalChain> {
        if quotient.ambient_rank() != registry.len() {
            return Err(Error::RegistryMismatch {
                quotient: quotient.ambient_rank(),
                registry: registry.len(),
            });
        }
        self.validate(registry).into_result()?;
        let cells: Vec<String> = self.top_cells().to_vec();
        let coefficients = cells
            .iter()
            .map(|cell| {
                let idx = self.labeled_index(registry, cell)?;
                quotient.reduce(&ModuleElement::basis(registry.len(), idx))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CanonicalChain {
            cells,
            coefficients,
        })
    }

    /// Boundary of a top chain with quotient coefficients: one reduced class
    /// per face, every one of them zero exactly when the chain is a cycle.
    pub fn chain_boundary(
        &self,
        quotient: &QuotientModule,
        chain: &CanonicalChain,
    ) -> Result<Vec<(String, ModuleElement)>> {
        if chain.cells.len() != self.cell_count(self.dimension()) {
            return Err(Error::ShapeMismatch {
                expected: self.cell_count(self.dimension()),
                got: chain.cells.len(),
            });
        }
        for c in &chain.coefficients {
            if c.len() != quotient.ambient_rank() {
                return Err(Error::ShapeMismatch {
                    expected: quotient.ambient_rank(),
                    got: c.len(),
                });
            }
        }
        let top = self.top_boundary_matrix();
        let mut out = Vec::with_capacity(self.faces().len());
        for (i, face) in self.faces().iter().enumerate() {
            let mut sum = ModuleElement::zero(quotient.ambient_rank());
            for j in 0..top.cols() {
                let c = &top[(i, j)];
                if c.is_zero() {
                    continue;
                }
                sum = sum.add(&chain.coefficients[j].scale(c));
            }
            out.push((face.clone(), quotient.reduce(&sum)?));
        }
        Ok(out)
    }

    /// The non-vanishing test over a quotient module. The boundary of the
    /// canonical chain is always recomputed; a quotient too small to absorb
    /// every relation is rejected instead of producing a false certificate.
    /// With no higher cells above the top dimension, a nonzero cycle here is
    /// a nonzero homology class.
    pub fn nonvanishing_verdict(
        &self,
        registry: &TypeRegistry,
        quotient: &QuotientModule,
    ) -> Result<Verdict> {
        let chain = self.canonical_chain(registry, quotient)?;
        for (face, class) in self.chain_boundary(quotient, &chain)? {
            if !class.is_zero_vector() {
                return Err(Error::IncompatibleQuotient { face });
            }
        }
        let witness_cell = chain
            .cells
            .iter()
            .zip(&chain.coefficients)
            .find(|(_, c)| !c.is_zero_vector())
            .map(|(cell, _)| cell.clone());
        let (free_rank, torsion_factors) = quotient.invariant_factors();
        Ok(Verdict {
            nonvanishing: witness_cell.is_some(),
            witness: chain,
            witness_cell,
            free_rank,
            torsion_factors,
        })
    }

    /// Whether every strict relation maps to zero in the classifier's group,
    /// i.e. the labeling factors through the quotient. Returns the first
    /// offending relation otherwise.
    pub fn classifier_compatible(
        &self,
        registry: &TypeRegistry,
        classifier: &Classifier,
    ) -> Result<(bool, Option<Relation>)> {
        for relation in self.strict_relations(registry)? {
            let image = classifier.image_of(registry, &relation.vector)?;
            if !classifier.is_group_zero(&image) {
                return Ok((false, Some(relation)));
            }
        }
        Ok((true, None))
    }

    /// Verdict through a group-valued classifier: the witness coefficients
    /// are the label classes pushed into the group. Refuses to evaluate an
    /// incompatible classifier.
    pub fn classifier_verdict(
        &self,
        registry: &TypeRegistry,
        classifier: &Classifier,
    ) -> Result<Verdict> {
        let (ok, offending) = self.classifier_compatible(registry, classifier)?;
        if !ok {
            return Err(Error::IncompatibleClassifier {
                site: offending.expect("incompatible needs a witness").site,
            });
        }
        let cells: Vec<String> = self.top_cells().to_vec();
        let mut coefficients = Vec::with_capacity(cells.len());
        for cell in &cells {
            let ty = self
                .label_of(cell)
                .ok_or_else(|| Error::BadParameter(format!("top cell `{cell}` has no label")))?;
            coefficients.push(ModuleElement {
                coords: classifier.class_of(ty)?,
            });
        }
        let chain = CanonicalChain {
            cells,
            coefficients,
        };
        let witness_cell = chain
            .cells
            .iter()
            .zip(&chain.coefficients)
            .find(|(_, c)| !c.is_zero_vector())
            .map(|(cell, _)| cell.clone());
        // the effective coefficient group is the image subgroup
        let image = QuotientModule::build(
            registry.len(),
            &classifier.kernel_relations(registry)?,
            RingSpec::Integers,
        )?;
        let (free_rank, torsion_factors) = image.invariant_factors();
        Ok(Verdict {
            nonvanishing: witness_cell.is_some(),
            witness: chain,
            witness_cell,
            free_rank,
            torsion_factors,
        })
    }
}

/// One failed transition condition in a genus-budget check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TransitionViolation {
    UnsupportedDegree { vertex: String, degree: usize },
    PairNonOrientableGenusTooBig { vertex: String, genus: u64, bound: u64 },
    PairMixedGenusNotMaximal { vertex: String, genus: u64, bound: u64 },
    TripleMixedOrientability { vertex: String },
    TripleGenusPattern { vertex: String },
}

impl fmt::Display for TransitionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransitionViolation::UnsupportedDegree { vertex, degree } => write!(
                f,
                "transition `{vertex}` has degree {degree}; only interval (2) and Y (3) transitions are covered"
            ),
            TransitionViolation::PairNonOrientableGenusTooBig { vertex, genus, bound } => write!(
                f,
                "transition `{vertex}`: non-orientable pair needs genera below {bound}, found {genus}"
            ),
            TransitionViolation::PairMixedGenusNotMaximal { vertex, genus, bound } => write!(
                f,
                "transition `{vertex}`: mixed pair needs the non-orientable side of genus exactly {bound}, found {genus}"
            ),
            TransitionViolation::TripleMixedOrientability { vertex } => write!(
                f,
                "transition `{vertex}`: Y endpoints must be all orientable or all non-orientable"
            ),
            TransitionViolation::TripleGenusPattern { vertex } => write!(
                f,
                "transition `{vertex}`: non-orientable Y needs exactly one endpoint of maximal genus and the rest below it"
            ),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct TransitionReport {
    pub violations: Vec<TransitionViolation>,
}

impl TransitionReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for TransitionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "all transitions satisfy the genus conditions");
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

impl LabeledComplex {
    /// Checks, per singular vertex of a graph labeled by surfaces, the
    /// interval/Y transition grammar against a maximal non-orientable genus
    /// `g`: interval transitions join two non-orientable surfaces of genus
    /// below `g`, two orientable surfaces, or an orientable surface with a
    /// non-orientable one of genus exactly `g`; Y transitions have all
    /// endpoints orientable, or all non-orientable with exactly one of
    /// genus `g` and the rest below. Genera are compared as registered,
    /// whatever the convention.
    pub fn surface_transition_check(
        &self,
        registry: &TypeRegistry,
        g: u64,
    ) -> Result<TransitionReport> {
        if self.dimension() != 1 {
            return Err(Error::Unsupported(
                "transition checks only apply to graphs".into(),
            ));
        }
        self.validate(registry).into_result()?;
        let top = self.top_boundary_matrix();
        let mut report = TransitionReport::default();
        for (i, vertex) in self.faces().iter().enumerate() {
            if self.mark_of(vertex) != Some(FaceMark::Singular) {
                continue;
            }
            // endpoint surfaces with incidence multiplicity
            let mut endpoints: Vec<(bool, u64)> = Vec::new();
            for (j, edge) in self.top_cells().iter().enumerate() {
                let mult_big = top[(i, j)].abs();
                let mult = u64::try_from(&mult_big).unwrap_or(0);
                if mult == 0 {
                    continue;
                }
                let ty = registry.get(self.label_of(edge).expect("validated labels"))?;
                let FiberKind::Surface {
                    orientable, genus, ..
                } = &ty.kind
                else {
                    return Err(Error::NotASurface(ty.id.clone()));
                };
                for _ in 0..mult {
                    endpoints.push((*orientable, *genus));
                }
            }
            match endpoints.len() {
                2 => {
                    let (a, b) = (endpoints[0], endpoints[1]);
                    match (a.0, b.0) {
                        (true, true) => {}
                        (false, false) => {
                            for (_, genus) in [a, b] {
                                if genus >= g {
                                    report.violations.push(
                                        TransitionViolation::PairNonOrientableGenusTooBig {
                                            vertex: vertex.clone(),
                                            genus,
                                            bound: g,
                                        },
                                    );
                                }
                            }
                        }
                        _ => {
                            let (_, genus) = if a.0 { b } else { a };
                            if genus != g {
                                report.violations.push(
                                    TransitionViolation::PairMixedGenusNotMaximal {
                                        vertex: vertex.clone(),
                                        genus,
                                        bound: g,
                                    },
                                );
                            }
                        }
                    }
                }
                3 => {
                    let orientable_count = endpoints.iter().filter(|(o, _)| *o).count();
                    if orientable_count == 3 {
                        // all orientable, fine
                    } else if orientable_count == 0 {
                        let at_max = endpoints.iter().filter(|(_, gen)| *gen == g).count();
                        let below = endpoints.iter().filter(|(_, gen)| *gen < g).count();
                        if !(at_max == 1 && below == 2) {
                            report.violations.push(TransitionViolation::TripleGenusPattern {
                                vertex: vertex.clone(),
                            });
                        }
                    } else {
                        report
                            .violations
                            .push(TransitionViolation::TripleMixedOrientability {
                                vertex: vertex.clone(),
                            });
                    }
                }
                degree => {
                    report.violations.push(TransitionViolation::UnsupportedDegree {
                        vertex: vertex.clone(),
                        degree,
                    });
                }
            }
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fiber::{FiberType, GenusConvention};

    fn el(v: &[i64]) -> ModuleElement {
        ModuleElement::from_i64(v)
    }

    fn abc_registry() -> TypeRegistry {
        let mut reg = TypeRegistry::new();
        reg.register(FiberType::symbolic("a1", "a1")).unwrap();
        reg.register(FiberType::symbolic("a2", "a2")).unwrap();
        reg.register(FiberType::symbolic("a3", "a3")).unwrap();
        reg
    }

    /// Three disk sheets glued along one circle, incidences +1, +1, -1.
    fn y_patch() -> LabeledComplex {
        let mut c = LabeledComplex::new(2).unwrap();
        c.add_cell(0, "p").unwrap();
        c.add_cell(1, "tau").unwrap();
        for (cell, label, coeff) in [("s1", "a1", 1), ("s2", "a2", 1), ("s3", "a3", -1)] {
            c.add_cell(2, cell).unwrap();
            c.add_boundary("tau", cell, coeff).unwrap();
            c.set_label(cell, label).unwrap();
        }
        c.set_mark("tau", FaceMark::Singular).unwrap();
        c
    }

    #[test]
    fn y_patch_produces_exactly_one_relation() {
        let reg = abc_registry();
        let rels = y_patch().strict_relations(&reg).unwrap();
        assert_eq!(rels.len(), 1);
        assert_eq!(rels[0].site, "tau");
        let expected = el(&[1, 1, -1]);
        assert!(rels[0].vector == expected || rels[0].vector == expected.neg());
    }

    #[test]
    fn boundary_face_yields_unit_relation() {
        let mut reg = TypeRegistry::new();
        reg.register(FiberType::symbolic("F", "F")).unwrap();
        let mut c = LabeledComplex::new(1).unwrap();
        c.add_cell(0, "v0").unwrap();
        c.add_cell(0, "v1").unwrap();
        c.add_cell(1, "e").unwrap();
        c.add_boundary("v0", "e", -1).unwrap();
        c.add_boundary("v1", "e", 1).unwrap();
        c.set_label("e", "F").unwrap();
        c.set_mark("v0", FaceMark::BoundaryFace).unwrap();
        c.set_mark("v1", FaceMark::BoundaryFace).unwrap();
        let rels = c.strict_relations(&reg).unwrap();
        assert_eq!(rels.len(), 2);
        for r in &rels {
            assert!(r.vector == el(&[1]) || r.vector == el(&[-1]));
        }
    }

    #[test]
    fn regular_faces_are_omitted() {
        let mut reg = TypeRegistry::new();
        reg.register(FiberType::symbolic("F", "F")).unwrap();
        let mut c = LabeledComplex::new(1).unwrap();
        c.add_cell(0, "v").unwrap();
        c.add_cell(1, "e").unwrap();
        c.add_boundary("v", "e", 1).unwrap();
        c.add_boundary("v", "e", -1).unwrap();
        c.set_label("e", "F").unwrap();
        c.set_mark("v", FaceMark::Regular).unwrap();
        assert!(c.strict_relations(&reg).unwrap().is_empty());
    }

    /// Two components: a visible Y with a hidden transition chain hanging off
    /// one branch, and a two-edge circle whose both vertices are hidden.
    fn hidden_transition_complex() -> (LabeledComplex, TypeRegistry) {
        let mut reg = TypeRegistry::new();
        for id in ["F", "G", "A", "B"] {
            reg.register(FiberType::symbolic(id, id)).unwrap();
        }
        let mut c = LabeledComplex::new(1).unwrap();
        // component 1: v (Y) -- e1(F) -- u (hidden) -- e4(G) -- w (Y)
        for v in ["v", "u", "w"] {
            c.add_cell(0, v).unwrap();
        }
        for (e, label) in [("e1", "F"), ("e4", "G"), ("e2", "A"), ("e3", "B")] {
            c.add_cell(1, e).unwrap();
            c.set_label(e, label).unwrap();
        }
        c.add_boundary("v", "e1", -1).unwrap();
        c.add_boundary("u", "e1", 1).unwrap();
        c.add_boundary("u", "e4", -1).unwrap();
        c.add_boundary("w", "e4", 1).unwrap();
        c.add_boundary("w", "e2", -1).unwrap();
        c.add_boundary("v", "e2", 1).unwrap();
        c.add_boundary("w", "e3", -1).unwrap();
        c.add_boundary("v", "e3", 1).unwrap();
        c.set_mark("v", FaceMark::Singular).unwrap();
        c.set_mark("u", FaceMark::Invisible).unwrap();
        c.set_mark("w", FaceMark::Singular).unwrap();
        // component 2: circle of two edges with two hidden vertices
        c.add_cell(0, "h1").unwrap();
        c.add_cell(0, "h2").unwrap();
        c.add_cell(1, "c1").unwrap();
        c.add_cell(1, "c2").unwrap();
        c.set_label("c1", "F").unwrap();
        c.set_label("c2", "G").unwrap();
        c.add_boundary("h1", "c1", -1).unwrap();
        c.add_boundary("h2", "c1", 1).unwrap();
        c.add_boundary("h2", "c2", -1).unwrap();
        c.add_boundary("h1", "c2", 1).unwrap();
        c.set_mark("h1", FaceMark::Invisible).unwrap();
        c.set_mark("h2", FaceMark::Invisible).unwrap();
        (c, reg)
    }

    #[test]
    fn visibility_mode_gates_hidden_jumps_by_reachability() {
        let (c, reg) = hidden_transition_complex();
        let strict = c.strict_relations(&reg).unwrap();
        // strict: v, u, w, h1, h2 all contribute
        assert_eq!(strict.len(), 5);

        let visible = c.curve_relations(&reg, RelationMode::Visibility).unwrap();
        let sites: Vec<&str> = visible.iter().map(|r| r.site.as_str()).collect();
        // the reachable hidden transition u contributes its jump e_F - e_G
        assert!(sites.contains(&"u"));
        let jump = visible.iter().find(|r| r.site == "u").unwrap();
        assert_eq!(jump.vector, el(&[1, -1, 0, 0]));
        // the circle component has no visible face: nothing from h1, h2
        assert!(!sites.contains(&"h1"));
        assert!(!sites.contains(&"h2"));
        assert_eq!(visible.len(), 3);
    }

    #[test]
    fn visibility_equals_strict_without_hidden_faces() {
        let reg = abc_registry();
        let c = y_patch();
        assert_eq!(
            c.strict_relations(&reg).unwrap(),
            c.curve_relations(&reg, RelationMode::Visibility).unwrap()
        );
    }

    #[test]
    fn y_patch_quotient_and_verdict() {
        let reg = abc_registry();
        let c = y_patch();
        let q = c
            .universal_quotient(&reg, RingSpec::Integers, &[])
            .unwrap();
        // one relation in rank 3: free rank 2, no torsion
        assert_eq!(q.invariant_factors(), (2, vec![]));
        let verdict = c.nonvanishing_verdict(&reg, &q).unwrap();
        assert!(verdict.nonvanishing);
        assert_eq!(verdict.witness_cell.as_deref(), Some("s1"));
        // the canonical chain closes up
        let chain = c.canonical_chain(&reg, &q).unwrap();
        for (_, class) in c.chain_boundary(&q, &chain).unwrap() {
            assert!(class.is_zero_vector());
        }
    }

    #[test]
    fn too_small_quotient_is_rejected() {
        let reg = abc_registry();
        let c = y_patch();
        let free = QuotientModule::build(3, &[], RingSpec::Integers).unwrap();
        match c.nonvanishing_verdict(&reg, &free) {
            Err(Error::IncompatibleQuotient { face }) => assert_eq!(face, "tau"),
            other => panic!("expected incompatible quotient, got {other:?}"),
        }
    }

    #[test]
    fn zero_quotient_gives_inconclusive_verdict() {
        let reg = abc_registry();
        let c = y_patch();
        let zero = QuotientModule::build(
            3,
            &[el(&[1, 0, 0]), el(&[0, 1, 0]), el(&[0, 0, 1])],
            RingSpec::Integers,
        )
        .unwrap();
        let verdict = c.nonvanishing_verdict(&reg, &zero).unwrap();
        assert!(!verdict.nonvanishing);
        assert!(verdict.witness.is_zero());
        assert!(verdict.witness_cell.is_none());
    }

    #[test]
    fn registry_mismatch_is_detected() {
        let reg = abc_registry();
        let c = y_patch();
        let q = QuotientModule::build(2, &[], RingSpec::Integers).unwrap();
        assert!(matches!(
            c.canonical_chain(&reg, &q),
            Err(Error::RegistryMismatch { .. })
        ));
    }

    #[test]
    fn classifier_compatibility_and_offender() {
        let reg = abc_registry();
        let c = y_patch();
        // a1 + a2 - a3 |-> 1 + 1 - 2 = 0: compatible
        let mut ok = Classifier::new(1, vec![]);
        ok.assign("a1", &[1]).unwrap();
        ok.assign("a2", &[1]).unwrap();
        ok.assign("a3", &[2]).unwrap();
        let (compatible, offender) = c.classifier_compatible(&reg, &ok).unwrap();
        assert!(compatible);
        assert!(offender.is_none());
        let verdict = c.classifier_verdict(&reg, &ok).unwrap();
        assert!(verdict.nonvanishing);

        // a1 |-> 1, rest 0: the relation maps to 1, incompatible
        let mut bad = Classifier::new(1, vec![]);
        bad.assign("a1", &[1]).unwrap();
        bad.assign("a2", &[0]).unwrap();
        bad.assign("a3", &[0]).unwrap();
        let (compatible, offender) = c.classifier_compatible(&reg, &bad).unwrap();
        assert!(!compatible);
        assert_eq!(offender.unwrap().site, "tau");
        assert!(matches!(
            c.classifier_verdict(&reg, &bad),
            Err(Error::IncompatibleClassifier { .. })
        ));

        // the zero classifier is always compatible but says nothing
        let mut zero = Classifier::new(0, vec![2]);
        for id in ["a1", "a2", "a3"] {
            zero.assign(id, &[0]).unwrap();
        }
        let (compatible, _) = c.classifier_compatible(&reg, &zero).unwrap();
        assert!(compatible);
        let verdict = c.classifier_verdict(&reg, &zero).unwrap();
        assert!(!verdict.nonvanishing);
    }

    fn surface_registry() -> TypeRegistry {
        let mut reg = TypeRegistry::new();
        reg.register(FiberType::orientable_surface("Sigma0", 0)).unwrap();
        reg.register(FiberType::orientable_surface("Sigma1", 1)).unwrap();
        reg.register(FiberType::nonorientable_surface("N1", 1, GenusConvention::Klein))
            .unwrap();
        reg.register(FiberType::nonorientable_surface("N2", 2, GenusConvention::Klein))
            .unwrap();
        reg
    }

    fn two_edge_path(label_left: &str, label_right: &str) -> LabeledComplex {
        let mut c = LabeledComplex::new(1).unwrap();
        for v in ["a", "m", "b"] {
            c.add_cell(0, v).unwrap();
        }
        c.add_cell(1, "left").unwrap();
        c.add_cell(1, "right").unwrap();
        c.add_boundary("a", "left", -1).unwrap();
        c.add_boundary("m", "left", 1).unwrap();
        c.add_boundary("m", "right", -1).unwrap();
        c.add_boundary("b", "right", 1).unwrap();
        c.set_label("left", label_left).unwrap();
        c.set_label("right", label_right).unwrap();
        c.set_mark("a", FaceMark::BoundaryFace).unwrap();
        c.set_mark("m", FaceMark::Singular).unwrap();
        c.set_mark("b", FaceMark::BoundaryFace).unwrap();
        c
    }

    #[test]
    fn mixed_pair_needs_maximal_genus() {
        let reg = surface_registry();
        // N1 (genus 1) against Sigma1 with bound 2: violation
        let c = two_edge_path("N1", "Sigma1");
        let report = c.surface_transition_check(&reg, 2).unwrap();
        assert_eq!(report.violations.len(), 1);
        assert!(matches!(
            report.violations[0],
            TransitionViolation::PairMixedGenusNotMaximal { genus: 1, bound: 2, .. }
        ));
        // N2 against Sigma1 with bound 2: fine
        let c = two_edge_path("N2", "Sigma1");
        assert!(c.surface_transition_check(&reg, 2).unwrap().is_ok());
    }

    #[test]
    fn all_orientable_graph_passes_vacuously() {
        let reg = surface_registry();
        let c = two_edge_path("Sigma0", "Sigma1");
        assert!(c.surface_transition_check(&reg, 2).unwrap().is_ok());
    }

    #[test]
    fn transition_check_requires_surfaces_and_graphs() {
        let reg = abc_registry();
        let c = y_patch();
        assert!(matches!(
            c.surface_transition_check(&reg, 2),
            Err(Error::Unsupported(_))
        ));
        let mut reg = TypeRegistry::new();
        reg.register(FiberType::sphere("S", "std")).unwrap();
        let mut c = LabeledComplex::new(1).unwrap();
        c.add_cell(0, "a").unwrap();
        c.add_cell(0, "b").unwrap();
        c.add_cell(1, "e").unwrap();
        c.add_boundary("a", "e", -1).unwrap();
        c.add_boundary("b", "e", 1).unwrap();
        c.set_label("e", "S").unwrap();
        c.set_mark("a", FaceMark::Singular).unwrap();
        c.set_mark("b", FaceMark::BoundaryFace).unwrap();
        assert!(matches!(
            c.surface_transition_check(&reg, 1),
            Err(Error::NotASurface(_))
        ));
    }
}
