//! The spin construction: inflate a graph of fiber transitions into its
//! product with a circle, each edge becoming an annular sheet and each
//! vertex a circle of transitions, optionally capping a boundary vertex
//! with a center disk. The relation lattice is preserved, so every module
//! invariant and every verdict carries over.
//!
//! ```bash
//! cargo run --example spin_construction
//! ```

use reebmod::scenes::{self, RandomSceneParams};
use reebmod::{FaceMark, RingSpec};

fn main() -> reebmod::Result<()> {
    let (graph, registry) = scenes::klein_demo()?;
    println!(
        "graph: {} vertices, {} edges",
        graph.cell_count(0),
        graph.cell_count(1)
    );

    let spun = scenes::spin(&graph, &registry, Some("v0"), 2)?;
    println!(
        "spun:  {} points, {} circles+seams, {} sheets",
        spun.cell_count(0),
        spun.cell_count(1),
        spun.cell_count(2)
    );

    let qg = graph.universal_quotient(&registry, RingSpec::Integers, &[])?;
    let qs = spun.universal_quotient(&registry, RingSpec::Integers, &[])?;
    println!(
        "graph module: {:?}   spun module: {:?}",
        qg.invariant_factors(),
        qs.invariant_factors()
    );
    let vg = graph.nonvanishing_verdict(&registry, &qg)?;
    let vs = spun.nonvanishing_verdict(&registry, &qs)?;
    println!(
        "verdicts agree: {} (graph {}, spun {})",
        vg.nonvanishing == vs.nonvanishing,
        vg.nonvanishing,
        vs.nonvanishing
    );

    // homology of the inflated space
    let h = spun.homology_over(&registry, &RingSpec::Integers)?;
    for (k, g) in h.groups.iter().enumerate() {
        println!("H_{k}(spun) = Z^{} + {:?}", g.free_rank, g.torsion_factors);
    }

    // the invariance holds across random graphs, capped or not
    let params = RandomSceneParams {
        allow_spin: false,
        ..RandomSceneParams::default()
    };
    let mut checked = 0;
    for seed in 0..25u64 {
        let (g, reg) = scenes::random_scene(seed, &params)?;
        let base = g
            .cells(0)
            .iter()
            .find(|v| g.mark_of(v) == Some(FaceMark::BoundaryFace))
            .cloned();
        let s = scenes::spin(&g, &reg, base.as_deref(), 2)?;
        let qa = g.universal_quotient(&reg, RingSpec::Integers, &[])?;
        let qb = s.universal_quotient(&reg, RingSpec::Integers, &[])?;
        assert_eq!(qa.invariant_factors(), qb.invariant_factors());
        checked += 1;
    }
    println!("{checked} random graphs spun with identical invariant factors");
    Ok(())
}
