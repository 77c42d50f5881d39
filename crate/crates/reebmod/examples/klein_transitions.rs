//! Non-orientable transition grammar: the mirrored Morse-style graph whose
//! fibers walk from spheres through the torus into a genus-2 non-orientable
//! surface and split into two Klein bottles. The transition checker verifies
//! the genus budget, and the quotient comes out of order two — or infinite
//! cyclic once the mixed orientable/non-orientable transition is dropped.
//!
//! ```bash
//! cargo run --example klein_transitions
//! ```

use num_bigint::BigInt;
use reebmod::scene_io::format_element;
use reebmod::scenes;
use reebmod::{QuotientModule, RingSpec};

fn main() -> reebmod::Result<()> {
    let (complex, registry) = scenes::klein_demo()?;

    let transitions = complex.surface_transition_check(&registry, 2)?;
    println!("transition check (genus budget 2): {transitions}");

    println!("relations:");
    for r in complex.strict_relations(&registry)? {
        println!("  at {}: {}", r.site, format_element(&registry, &r.vector));
    }

    let quotient = complex.universal_quotient(&registry, RingSpec::Integers, &[])?;
    let (free, torsion) = quotient.invariant_factors();
    println!("universal quotient: free rank {free}, torsion {torsion:?}");
    let verdict = complex.nonvanishing_verdict(&registry, &quotient)?;
    println!(
        "verdict: {}, witness on {:?} (label {:?})",
        if verdict.nonvanishing { "nonvanishing" } else { "inconclusive" },
        verdict.witness_cell,
        verdict
            .witness_cell
            .as_deref()
            .and_then(|c| complex.label_of(c))
    );

    // drop the mixed transition relation e_N2 - e_Sigma1 and the order-two
    // group unwinds into the free case
    let reduced_relations = [
        registry.basis_element("Sigma0")?,
        registry
            .basis_element("Sigma1")?
            .sub(&registry.basis_element("Sigma0")?),
        registry
            .basis_element("N2")?
            .sub(&registry.basis_element("N1")?.scale(&BigInt::from(2))),
    ];
    let free_case = QuotientModule::build(registry.len(), &reduced_relations, RingSpec::Integers)?;
    let (free, torsion) = free_case.invariant_factors();
    println!("without the mixed relation: free rank {free}, torsion {torsion:?}");

    // a graph that violates the budget is reported, vertex by vertex
    let (bad, bad_reg) = {
        use reebmod::{FaceMark, FiberType, GenusConvention, LabeledComplex, TypeRegistry};
        let mut reg = TypeRegistry::new();
        reg.register(FiberType::nonorientable_surface("K", 1, GenusConvention::Klein))?;
        reg.register(FiberType::orientable_surface("T", 1))?;
        let mut c = LabeledComplex::new(1)?;
        for v in ["a", "m", "b"] {
            c.add_cell(0, v)?;
        }
        for (e, label, tail, head) in [("left", "K", "a", "m"), ("right", "T", "m", "b")] {
            c.add_cell(1, e)?;
            c.add_boundary(tail, e, -1)?;
            c.add_boundary(head, e, 1)?;
            c.set_label(e, label)?;
        }
        c.set_mark("a", FaceMark::BoundaryFace)?;
        c.set_mark("m", FaceMark::Singular)?;
        c.set_mark("b", FaceMark::BoundaryFace)?;
        (c, reg)
    };
    let report = bad.surface_transition_check(&bad_reg, 2)?;
    println!("budget violation demo:\n{report}");
    Ok(())
}
