//! Constructors for the example spaces the library is built around, the
//! spin construction that inflates a graph into a round-fold picture, and
//! seeded random instances for property testing.

use crate::complex::{FaceMark, LabeledComplex};
use crate::fiber::{FiberType, GenusConvention, TypeRegistry};
use crate::{Error, Result};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Three sheets glued along one circle with incidences `+1, +1, -1`: the
/// local picture of a codimension-one fold transition. The only relation is
/// `e_a1 + e_a2 - e_a3` (up to sign).
pub fn y_patch(registry: &TypeRegistry, a1: &str, a2: &str, a3: &str) -> Result<LabeledComplex> {
    for id in [a1, a2, a3] {
        registry.index_of(id)?;
    }
    let mut c = LabeledComplex::new(2)?;
    c.add_cell(0, "p")?;
    c.add_cell(1, "tau")?;
    for (cell, label, coeff) in [("s1", a1, 1), ("s2", a2, 1), ("s3", a3, -1)] {
        c.add_cell(2, cell)?;
        c.add_boundary("tau", cell, coeff)?;
        c.set_label(cell, label)?;
    }
    c.set_mark("tau", FaceMark::Singular)?;
    c.set_fiber_dim(registry_fiber_dim(registry));
    Ok(c)
}

/// The sphere-bundle round fold picture: an annulus sheet labeled `sphere`
/// whose outer circle lies on the boundary, splitting along the inner
/// circle into two disk sheets labeled `sigma`. With distinct labels the
/// relations are `e_sphere` and `e_sphere - 2 e_sigma`; the underlying
/// space is a 2-sphere with a collar.
pub fn round_fold(registry: &TypeRegistry, sphere: &str, sigma: &str) -> Result<LabeledComplex> {
    registry.index_of(sphere)?;
    registry.index_of(sigma)?;
    let mut c = LabeledComplex::new(2)?;
    c.add_cell(0, "p")?;
    c.add_cell(0, "q")?;
    c.add_cell(1, "outer")?;
    c.add_cell(1, "inner")?;
    c.add_cell(1, "rad")?;
    c.add_cell(2, "ann")?;
    c.add_cell(2, "cap1")?;
    c.add_cell(2, "cap2")?;
    c.add_boundary("p", "rad", -1)?;
    c.add_boundary("q", "rad", 1)?;
    c.add_boundary("outer", "ann", 1)?;
    c.add_boundary("inner", "ann", -1)?;
    c.add_boundary("inner", "cap1", 1)?;
    c.add_boundary("inner", "cap2", 1)?;
    c.set_label("ann", sphere)?;
    c.set_label("cap1", sigma)?;
    c.set_label("cap2", sigma)?;
    c.set_mark("outer", FaceMark::BoundaryFace)?;
    c.set_mark("inner", FaceMark::Singular)?;
    c.set_mark("rad", FaceMark::Regular)?;
    c.set_fiber_dim(registry_fiber_dim(registry));
    Ok(c)
}

fn sigma_id(genus: u64) -> String {
    format!("Sigma{genus}")
}

fn register_orientable_chain(registry: &mut TypeRegistry, genera: &[u64]) -> Result<()> {
    for &g in genera {
        registry.register(FiberType::orientable_surface(&sigma_id(g), g))?;
    }
    Ok(())
}

/// Doubled-Y graph splitting an odd genus `g >= 3` into `h = (g-1)/2` and
/// `h+1`: an edge labeled `Sigma_g` joins two Y vertices, and two mirrored
/// paths carry `Sigma_h` / `Sigma_{h+1}` between them. The relation span is
/// `{e_g - e_h - e_{h+1}, e_h - e_{h+1}}`, so the quotient is infinite
/// cyclic and the class of `Sigma_g` is twice the generator.
pub fn genus_split_graph(g: u64) -> Result<(LabeledComplex, TypeRegistry)> {
    if g < 3 || g % 2 == 0 {
        return Err(Error::BadParameter(format!(
            "odd genus split needs an odd g >= 3, got {g}"
        )));
    }
    let h = (g - 1) / 2;
    let mut registry = TypeRegistry::new();
    register_orientable_chain(&mut registry, &[h, h + 1, g])?;

    let mut c = LabeledComplex::new(1)?;
    for v in ["u", "up", "w", "wp"] {
        c.add_cell(0, v)?;
        c.set_mark(v, FaceMark::Singular)?;
    }
    let edges = [
        ("eg", sigma_id(g), "up", "u"),        // u' -> u
        ("e1", sigma_id(h), "u", "w"),         // u -> w
        ("e2", sigma_id(h + 1), "w", "up"),    // w -> u'
        ("e3", sigma_id(h + 1), "u", "wp"),    // u -> w'
        ("e4", sigma_id(h), "wp", "up"),       // w' -> u'
    ];
    for (e, label, tail, head) in &edges {
        c.add_cell(1, e)?;
        c.add_boundary(tail, e, -1)?;
        c.add_boundary(head, e, 1)?;
        c.set_label(e, label)?;
    }
    c.set_fiber_dim(Some(2));
    Ok((c, registry))
}

/// The even counterpart for `g >= 4`: the top edge splits into genera `2`
/// and `g-2`, and two mirrored chains walk through every intermediate genus
/// `2..=g-2`, one ascending and one descending. Every auxiliary label has
/// genus in `[1, g-2]`; the quotient is again infinite cyclic with the
/// class of `Sigma_g` twice the generator.
pub fn genus_split_graph_even(g: u64) -> Result<(LabeledComplex, TypeRegistry)> {
    if g < 4 || g % 2 == 1 {
        return Err(Error::BadParameter(format!(
            "even genus split needs an even g >= 4, got {g}"
        )));
    }
    let mut registry = TypeRegistry::new();
    let intermediates: Vec<u64> = (2..=g - 2).collect();
    register_orientable_chain(&mut registry, &intermediates)?;
    registry.register(FiberType::orientable_surface(&sigma_id(g), g))?;

    let mut c = LabeledComplex::new(1)?;
    c.add_cell(0, "u")?;
    c.add_cell(0, "up")?;
    c.set_mark("u", FaceMark::Singular)?;
    c.set_mark("up", FaceMark::Singular)?;
    c.add_cell(1, "eg")?;
    c.add_boundary("up", "eg", -1)?;
    c.add_boundary("u", "eg", 1)?;
    c.set_label("eg", &sigma_id(g))?;

    // ascending chain u -> u' through Sigma_2 .. Sigma_{g-2}
    let mut tail = "u".to_string();
    for (i, &k) in intermediates.iter().enumerate() {
        let head = if i + 1 == intermediates.len() {
            "up".to_string()
        } else {
            let v = format!("va{}", k);
            c.add_cell(0, &v)?;
            c.set_mark(&v, FaceMark::Singular)?;
            v
        };
        let e = format!("ea{k}");
        c.add_cell(1, &e)?;
        c.add_boundary(&tail, &e, -1)?;
        c.add_boundary(&head, &e, 1)?;
        c.set_label(&e, &sigma_id(k))?;
        tail = head;
    }
    // descending chain u -> u' through Sigma_{g-2} .. Sigma_2
    let mut tail = "u".to_string();
    for (i, &k) in intermediates.iter().rev().enumerate() {
        let head = if i + 1 == intermediates.len() {
            "up".to_string()
        } else {
            let v = format!("vb{}", k);
            c.add_cell(0, &v)?;
            c.set_mark(&v, FaceMark::Singular)?;
            v
        };
        let e = format!("eb{k}");
        c.add_cell(1, &e)?;
        c.add_boundary(&tail, &e, -1)?;
        c.add_boundary(&head, &e, 1)?;
        c.set_label(&e, &sigma_id(k))?;
        tail = head;
    }
    c.set_fiber_dim(Some(2));
    Ok((c, registry))
}

/// A mirrored Morse-style graph over the surfaces `Sigma_0`, `Sigma_1`,
/// `N_1` (the Klein bottle, genus 1 in the Klein-bottle convention) and
/// `N_2`: sphere caps at both ends, interval transitions through the torus
/// into `N_2`, and two Y transitions trading `N_2` against two copies of
/// `N_1`. The relation span is `{e_S0, e_S1 - e_S0, e_N2 - e_S1,
/// e_N2 - 2 e_N1}`; the quotient is of order two, generated by the class
/// of `N_1`, and every transition satisfies the genus budget `g = 2`.
pub fn klein_demo() -> Result<(LabeledComplex, TypeRegistry)> {
    let mut registry = TypeRegistry::new();
    registry.register(FiberType::orientable_surface("Sigma0", 0))?;
    registry.register(FiberType::orientable_surface("Sigma1", 1))?;
    registry.register(FiberType::nonorientable_surface("N1", 1, GenusConvention::Klein))?;
    registry.register(FiberType::nonorientable_surface("N2", 2, GenusConvention::Klein))?;

    let mut c = LabeledComplex::new(1)?;
    for v in ["v0", "v1", "v2", "v3", "v3p", "v2p", "v1p", "v0p"] {
        c.add_cell(0, v)?;
    }
    c.set_mark("v0", FaceMark::BoundaryFace)?;
    c.set_mark("v0p", FaceMark::BoundaryFace)?;
    for v in ["v1", "v2", "v3", "v3p", "v2p", "v1p"] {
        c.set_mark(v, FaceMark::Singular)?;
    }
    let edges = [
        ("eS0", "Sigma0", "v0", "v1"),
        ("eS1", "Sigma1", "v1", "v2"),
        ("eN2", "N2", "v2", "v3"),
        ("eN1a", "N1", "v3", "v3p"),
        ("eN1b", "N1", "v3", "v3p"),
        ("eN2p", "N2", "v3p", "v2p"),
        ("eS1p", "Sigma1", "v2p", "v1p"),
        ("eS0p", "Sigma0", "v1p", "v0p"),
    ];
    for (e, label, tail, head) in &edges {
        c.add_cell(1, e)?;
        c.add_boundary(tail, e, -1)?;
        c.add_boundary(head, e, 1)?;
        c.set_label(e, label)?;
    }
    c.set_fiber_dim(Some(2));
    Ok((c, registry))
}

/// One loop edge over a single fiber type, with a regular basepoint: the
/// smallest complex with a free class.
pub fn loop_graph(registry: &TypeRegistry, label: &str) -> Result<LabeledComplex> {
    registry.index_of(label)?;
    let mut c = LabeledComplex::new(1)?;
    c.add_cell(0, "v")?;
    c.add_cell(1, "e")?;
    c.add_boundary("v", "e", 1)?;
    c.add_boundary("v", "e", -1)?;
    c.set_label("e", label)?;
    c.set_mark("v", FaceMark::Regular)?;
    c.set_fiber_dim(registry_fiber_dim(registry));
    Ok(c)
}

fn registry_fiber_dim(registry: &TypeRegistry) -> Option<usize> {
    use crate::fiber::FiberKind;
    if !registry.is_empty()
        && registry
            .types()
            .iter()
            .all(|t| matches!(t.kind, FiberKind::Surface { .. }))
    {
        Some(2)
    } else {
        None
    }
}

/// Inflates a graph into its product with a circle, one annular sheet per
/// edge and one circle per vertex, optionally capping one boundary vertex
/// with a disk sheet to close the center of the round-fold picture. The
/// relation lattice of the result equals the graph's, so invariant factors
/// and verdicts carry over unchanged.
pub fn spin(
    graph: &LabeledComplex,
    registry: &TypeRegistry,
    base: Option<&str>,
    target_dim: usize,
) -> Result<LabeledComplex> {
    if target_dim != 2 {
        return Err(Error::Unsupported(format!(
            "spin only produces 2-dimensional complexes, requested {target_dim}"
        )));
    }
    if graph.dimension() != 1 {
        return Err(Error::Unsupported(
            "spin takes a 1-dimensional complex".into(),
        ));
    }
    graph.validate(registry).into_result()?;

    let vertices = graph.cells(0).to_vec();
    let edges = graph.cells(1).to_vec();
    let d1 = graph.boundary_matrix(1);

    let base_edge = match base {
        None => None,
        Some(b) => {
            let row = vertices.iter().position(|v| v == b).ok_or_else(|| {
                Error::BadParameter(format!("spin base `{b}` is not a vertex of the graph"))
            })?;
            if graph.mark_of(b) != Some(FaceMark::BoundaryFace) {
                return Err(Error::BadParameter(format!(
                    "spin base `{b}` must be marked boundary_face"
                )));
            }
            let col = (0..edges.len())
                .find(|&j| !d1[(row, j)].is_zero())
                .expect("a boundary vertex has one incident edge");
            Some((row, col, d1[(row, col)].clone()))
        }
    };

    let mut c = LabeledComplex::new(2)?;
    for v in &vertices {
        c.add_cell(0, &format!("pt:{v}"))?;
    }
    for v in &vertices {
        c.add_cell(1, &format!("c:{v}"))?;
    }
    for e in &edges {
        c.add_cell(1, &format!("s:{e}"))?;
    }
    for e in &edges {
        c.add_cell(2, &format!("a:{e}"))?;
    }
    // seams follow the edge endpoints; annuli span between vertex circles
    for (j, e) in edges.iter().enumerate() {
        for (i, v) in vertices.iter().enumerate() {
            let coeff = &d1[(i, j)];
            if coeff.is_zero() {
                continue;
            }
            c.add_boundary(&format!("pt:{v}"), &format!("s:{e}"), coeff.clone())?;
            c.add_boundary(&format!("c:{v}"), &format!("a:{e}"), coeff.clone())?;
        }
        let label = graph.label_of(e).expect("validated graph labels");
        c.set_label(&format!("a:{e}"), label)?;
        c.set_mark(&format!("s:{e}"), FaceMark::Regular)?;
    }
    for v in &vertices {
        let mark = graph.mark_of(v).expect("validated graph marks");
        c.set_mark(&format!("c:{v}"), mark)?;
    }
    if let Some((row, col, sign)) = base_edge {
        let base_vertex = &vertices[row];
        let edge = &edges[col];
        c.add_cell(2, "cap:center")?;
        c.add_boundary(&format!("c:{base_vertex}"), "cap:center", -sign)?;
        let label = graph.label_of(edge).expect("validated graph labels");
        c.set_label("cap:center", label)?;
        c.set_mark(&format!("c:{base_vertex}"), FaceMark::Regular)?;
    }
    c.set_fiber_dim(graph.fiber_dim());
    Ok(c)
}

/// Bounds for random instances.
#[derive(Clone, Debug)]
pub struct RandomSceneParams {
    pub max_types: usize,
    pub max_vertices: usize,
    pub max_edges: usize,
    /// When set, roughly half the instances are spun up to dimension 2.
    pub allow_spin: bool,
}

impl Default for RandomSceneParams {
    fn default() -> Self {
        RandomSceneParams {
            max_types: 4,
            max_vertices: 8,
            max_edges: 12,
            allow_spin: true,
        }
    }
}

/// A seeded, always-valid random scene: a random labeled multigraph with
/// marks derived from the incidence shapes (mixing regular, singular,
/// boundary and hidden faces), half the time inflated by `spin`. The same
/// seed always produces the same complex.
pub fn random_scene(
    seed: u64,
    params: &RandomSceneParams,
) -> Result<(LabeledComplex, TypeRegistry)> {
    if params.max_types == 0 || params.max_vertices == 0 || params.max_edges == 0 {
        return Err(Error::BadParameter(
            "random scene bounds must be positive".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut registry = TypeRegistry::new();
    let ntypes = rng.gen_range(1..=params.max_types);
    for i in 0..ntypes {
        let id = format!("T{i}");
        let fiber = match rng.gen_range(0..4) {
            0 => FiberType::orientable_surface(&id, rng.gen_range(0..=3)),
            1 => FiberType::nonorientable_surface(
                &id,
                rng.gen_range(1..=3),
                GenusConvention::Crosscap,
            ),
            2 => FiberType::nonorientable_surface(
                &id,
                rng.gen_range(1..=2),
                GenusConvention::Klein,
            ),
            _ => FiberType::orientable_surface(&id, rng.gen_range(0..=2)),
        };
        registry.register(fiber)?;
    }

    let nv = rng.gen_range(1..=params.max_vertices);
    let ne = rng.gen_range(1..=params.max_edges);
    let mut graph = LabeledComplex::new(1)?;
    for i in 0..nv {
        graph.add_cell(0, &format!("v{i}"))?;
    }
    let mut incidences: Vec<Vec<(usize, i64)>> = vec![Vec::new(); nv];
    for j in 0..ne {
        let e = format!("e{j}");
        graph.add_cell(1, &e)?;
        let tail = rng.gen_range(0..nv);
        let head = if rng.gen_bool(0.08) {
            tail // occasional loop, which cancels to a zero column
        } else {
            rng.gen_range(0..nv)
        };
        graph.add_boundary(&format!("v{tail}"), &e, -1)?;
        graph.add_boundary(&format!("v{head}"), &e, 1)?;
        if tail != head {
            incidences[tail].push((j, -1));
            incidences[head].push((j, 1));
        }
        let label = format!("T{}", rng.gen_range(0..ntypes));
        graph.set_label(&e, &label)?;
    }
    let edge_labels: Vec<String> = (0..ne)
        .map(|j| graph.label_of(&format!("e{j}")).unwrap().to_string())
        .collect();
    for (i, inc) in incidences.iter().enumerate() {
        let mark = match inc.as_slice() {
            [] => FaceMark::Regular,
            [_] => FaceMark::BoundaryFace,
            [(e1, s1), (e2, s2)] if s1 != s2 => {
                if edge_labels[*e1] == edge_labels[*e2] {
                    match rng.gen_range(0..10) {
                        0..=4 => FaceMark::Regular,
                        5..=7 => FaceMark::Singular,
                        _ => FaceMark::Invisible,
                    }
                } else if rng.gen_bool(0.3) {
                    FaceMark::Invisible
                } else {
                    FaceMark::Singular
                }
            }
            _ => FaceMark::Singular,
        };
        graph.set_mark(&format!("v{i}"), mark)?;
    }

    if params.allow_spin && rng.gen_bool(0.5) {
        let base = graph
            .cells(0)
            .iter()
            .find(|v| graph.mark_of(v) == Some(FaceMark::BoundaryFace))
            .cloned()
            .filter(|_| rng.gen_bool(0.7));
        let spun = spin(&graph, &registry, base.as_deref(), 2)?;
        return Ok((spun, registry));
    }
    Ok((graph, registry))
}
