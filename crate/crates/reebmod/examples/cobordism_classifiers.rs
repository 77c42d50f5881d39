//! Group-valued classifiers: labelings of the fiber types into a finitely
//! generated abelian group. A classifier is compatible when every transition
//! relation maps to zero; the classic unoriented criterion is the Euler-
//! parity labeling into Z/2, and sphere-group labelings handle fibers that
//! are spheres up to homotopy.
//!
//! ```bash
//! cargo run --example cobordism_classifiers
//! ```

use reebmod::scenes;
use reebmod::{Classifier, FiberType, GenusConvention, TypeRegistry};

fn parity_classifier(registry: &TypeRegistry) -> reebmod::Result<Classifier> {
    let mut cl = Classifier::new(0, vec![2]);
    for t in registry.types() {
        cl.assign(&t.id, &[t.unoriented_cobordism_class()? as i64])?;
    }
    Ok(cl)
}

fn main() -> reebmod::Result<()> {
    // a projective-plane fiber over a loop: odd Euler characteristic, so the
    // parity class survives and the top homology with Z/2 coefficients is
    // nonzero
    let mut reg = TypeRegistry::new();
    reg.register(FiberType::nonorientable_surface("P", 1, GenusConvention::Crosscap))?;
    let loop_p = scenes::loop_graph(&reg, "P")?;
    let parity = parity_classifier(&reg)?;
    let (compatible, _) = loop_p.classifier_compatible(&reg, &parity)?;
    let verdict = loop_p.classifier_verdict(&reg, &parity)?;
    println!(
        "projective-plane loop: compatible = {compatible}, nonvanishing = {}",
        verdict.nonvanishing
    );

    // the torus is null-cobordant: same machinery, inconclusive outcome
    let mut reg = TypeRegistry::new();
    reg.register(FiberType::orientable_surface("T", 1))?;
    let loop_t = scenes::loop_graph(&reg, "T")?;
    let parity = parity_classifier(&reg)?;
    let verdict = loop_t.classifier_verdict(&reg, &parity)?;
    println!("torus loop: nonvanishing = {}", verdict.nonvanishing);

    // sphere fibers: label the exotic sphere with an order-two element of a
    // cyclic sphere group; both transition relations map to zero, and the
    // surviving class certifies the verdict
    let mut reg = TypeRegistry::new();
    reg.register(FiberType::sphere("S", "standard"))?;
    reg.register(FiberType::sphere("Sigma", "exotic"))?;
    let fold = scenes::round_fold(&reg, "S", "Sigma")?;
    let mut sphere_group = Classifier::new(0, vec![28]);
    sphere_group.assign("S", &[0])?;
    sphere_group.assign("Sigma", &[14])?;
    let (compatible, _) = fold.classifier_compatible(&reg, &sphere_group)?;
    let verdict = fold.classifier_verdict(&reg, &sphere_group)?;
    println!(
        "round fold with a Z/28 sphere group: compatible = {compatible}, nonvanishing = {}, witness {:?}",
        verdict.nonvanishing, verdict.witness_cell
    );

    // an assignment that fails to kill a relation is refused with the
    // offending site
    let mut bad = Classifier::new(0, vec![2]);
    bad.assign("S", &[1])?;
    bad.assign("Sigma", &[0])?;
    let (compatible, offending) = fold.classifier_compatible(&reg, &bad)?;
    println!(
        "bad labeling: compatible = {compatible}, offending site {:?}",
        offending.map(|r| r.site)
    );

    // kernel relations turn any classifier into quotient-module input
    let kernel = sphere_group.kernel_relations(&reg)?;
    println!("kernel lattice of the sphere-group labeling has {} generators", kernel.len());
    Ok(())
}
