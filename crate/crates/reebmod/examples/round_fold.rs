//! The sphere-bundle round fold, end to end: build the labeled complex,
//! read off its relations, present the quotient module, and certify that
//! the top homology with those coefficients cannot vanish.
//!
//! ```bash
//! cargo run --example round_fold
//! ```

use reebmod::scene_io::format_element;
use reebmod::scenes;
use reebmod::{FiberType, RingSpec, TypeRegistry};

fn main() -> reebmod::Result<()> {
    // one standard sphere fiber and one exotic companion
    let mut registry = TypeRegistry::new();
    registry.register(FiberType::sphere("S", "standard"))?;
    registry.register(FiberType::sphere("Sigma", "exotic"))?;

    // annulus sheet labeled S, boundary on the outside, splitting into two
    // disk sheets labeled Sigma along the inner circle
    let complex = scenes::round_fold(&registry, "S", "Sigma")?;
    let report = complex.validate(&registry);
    println!("validation: {report}");

    println!("relations:");
    for r in complex.strict_relations(&registry)? {
        println!("  at {}: {}", r.site, format_element(&registry, &r.vector));
    }

    let quotient = complex.universal_quotient(&registry, RingSpec::Integers, &[])?;
    let (free, torsion) = quotient.invariant_factors();
    println!("universal quotient: free rank {free}, torsion {torsion:?}");

    let verdict = complex.nonvanishing_verdict(&registry, &quotient)?;
    println!(
        "verdict: {}",
        if verdict.nonvanishing { "nonvanishing" } else { "inconclusive" }
    );
    if let Some(cell) = &verdict.witness_cell {
        println!("  witness cell: {cell} (a disk sheet labeled Sigma)");
    }

    // the underlying space is a 2-sphere with a collar
    let h = complex.homology_over(&registry, &RingSpec::Integers)?;
    for (k, g) in h.groups.iter().enumerate() {
        println!(
            "H_{k} = Z^{} + torsion {:?}",
            g.free_rank, g.torsion_factors
        );
    }
    let top = complex.top_homology_with_quotient(&registry, &quotient)?;
    println!(
        "H_2 with quotient coefficients: free rank {}, torsion {:?}, canonical class zero: {}",
        top.free_rank, top.torsion_factors, top.canonical_class_is_zero
    );

    // identifying Sigma with S collapses everything
    let mut one_type = TypeRegistry::new();
    one_type.register(FiberType::sphere("S", "standard"))?;
    let collapsed = scenes::round_fold(&one_type, "S", "S")?;
    let q = collapsed.universal_quotient(&one_type, RingSpec::Integers, &[])?;
    let v = collapsed.nonvanishing_verdict(&one_type, &q)?;
    println!(
        "with Sigma identified to S: quotient trivial = {}, verdict = {}",
        q.is_trivial(),
        if v.nonvanishing { "nonvanishing" } else { "inconclusive" }
    );
    Ok(())
}
