//! Scene documents: serialize a complex to JSON, read it back, and attach
//! extra relations and a classifier block. The same format drives the
//! `reebmod` binary.
//!
//! ```bash
//! cargo run --example scene_files
//! ```

use num_bigint::BigInt;
use reebmod::scene_io::{emit_scene, parse_scene, scene_to_string, Coeff, SceneOptions};
use reebmod::scenes;
use reebmod::{Classifier, FiberType, RingSpec, TypeRegistry};

fn main() -> reebmod::Result<()> {
    let mut registry = TypeRegistry::new();
    registry.register(FiberType::sphere("S", "standard"))?;
    registry.register(FiberType::sphere("Sigma", "exotic"))?;
    let complex = scenes::round_fold(&registry, "S", "Sigma")?;

    let mut classifier = Classifier::new(0, vec![28]);
    classifier.assign("S", &[0])?;
    classifier.assign("Sigma", &[14])?;

    let options = SceneOptions {
        ring: RingSpec::Integers,
        extra_relations: vec![],
        classifier: Some(classifier),
    };
    let doc = emit_scene(&complex, &registry, &options);
    let text = scene_to_string(&doc);
    println!("--- emitted scene ---\n{text}");

    let (parsed, parsed_registry, parsed_options) = parse_scene(&text)?;
    println!(
        "parsed back: dimension {}, {} fiber types, ring {}, classifier present: {}",
        parsed.dimension(),
        parsed_registry.len(),
        parsed_options.ring,
        parsed_options.classifier.is_some()
    );
    let report = parsed.validate(&parsed_registry);
    println!("validation: {report}");

    // big coefficients survive the trip as decimal strings
    let huge = Coeff(BigInt::parse_bytes(b"123456789012345678901234567890", 10).unwrap());
    let json = serde_json::to_string(&huge).expect("serializable");
    let back: Coeff = serde_json::from_str(&json).expect("parseable");
    println!("a 30-digit coefficient serializes as {json} and round-trips: {}", back == huge);
    Ok(())
}
