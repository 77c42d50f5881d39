//! Acceptance suite: one test per shipped guarantee, each printing a
//! PASS line (run with `cargo test --test acceptance -- --nocapture` to see
//! them). Expected values are frozen from independent hand computations:
//! determinantal divisors for normal forms, row eliminations for the
//! quotient presentations.

use num_bigint::BigInt;
use num_integer::gcd;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reebmod::scenes::{self, RandomSceneParams};
use reebmod::{
    smith_normal_form, Classifier, FiberKind, FiberType, IntMatrix, LabeledComplex,
    ModuleElement, QuotientModule, RingSpec, TypeRegistry,
};
use std::time::{Duration, Instant};

fn sphere_registry() -> TypeRegistry {
    let mut reg = TypeRegistry::new();
    reg.register(FiberType::sphere("S", "standard")).unwrap();
    reg.register(FiberType::sphere("Sigma", "exotic")).unwrap();
    reg
}

fn patch_registry() -> TypeRegistry {
    let mut reg = TypeRegistry::new();
    for id in ["a1", "a2", "a3"] {
        reg.register(FiberType::symbolic(id, id)).unwrap();
    }
    reg
}

#[test]
fn c01_single_transition_relation() {
    let reg = patch_registry();
    let patch = scenes::y_patch(&reg, "a1", "a2", "a3").unwrap();
    let start = Instant::now();
    let relations = patch.strict_relations(&reg).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(relations.len(), 1, "exactly one relation");
    let expected = ModuleElement::from_i64(&[1, 1, -1]);
    assert!(
        relations[0].vector == expected || relations[0].vector == expected.neg(),
        "relation must be +-(e_a1 + e_a2 - e_a3), got {:?}",
        relations[0].vector
    );
    assert!(elapsed < Duration::from_millis(1), "took {elapsed:?}");
    println!("acceptance C1 single-transition relation: PASS");
}

#[test]
fn c02_round_fold_quotient_and_verdict() {
    let start = Instant::now();
    let reg = sphere_registry();
    let c = scenes::round_fold(&reg, "S", "Sigma").unwrap();
    let q = c.universal_quotient(&reg, RingSpec::Integers, &[]).unwrap();
    assert_eq!(q.invariant_factors(), (0, vec![BigInt::from(2)]));
    let verdict = c.nonvanishing_verdict(&reg, &q).unwrap();
    assert!(verdict.nonvanishing);
    let witness = verdict.witness_cell.expect("nonvanishing needs a witness");
    assert!(
        witness == "cap1" || witness == "cap2",
        "witness must sit on a disk sheet, got {witness}"
    );

    let mut reg_one = TypeRegistry::new();
    reg_one.register(FiberType::sphere("S", "standard")).unwrap();
    let c_id = scenes::round_fold(&reg_one, "S", "S").unwrap();
    let q_id = c_id
        .universal_quotient(&reg_one, RingSpec::Integers, &[])
        .unwrap();
    assert!(q_id.is_trivial(), "identified labels give the zero module");
    let verdict_id = c_id.nonvanishing_verdict(&reg_one, &q_id).unwrap();
    assert!(!verdict_id.nonvanishing);
    assert!(start.elapsed() < Duration::from_secs(1));
    println!("acceptance C2 round-fold quotient and verdict: PASS");
}

#[test]
fn c03_round_fold_homology() {
    let reg = sphere_registry();
    let c = scenes::round_fold(&reg, "S", "Sigma").unwrap();
    let h = c.homology_over(&reg, &RingSpec::Integers).unwrap();
    assert_eq!(h.groups[0].free_rank, 1);
    assert!(h.groups[0].torsion_factors.is_empty());
    assert!(h.groups[1].is_trivial());
    assert_eq!(h.groups[2].free_rank, 1);
    assert!(h.groups[2].torsion_factors.is_empty());

    let q = c.universal_quotient(&reg, RingSpec::Integers, &[]).unwrap();
    let top = c.top_homology_with_quotient(&reg, &q).unwrap();
    assert_eq!(top.free_rank, 0);
    assert_eq!(top.torsion_factors, vec![BigInt::from(2)]);
    assert!(!top.canonical_class_is_zero, "canonical class generates");
    println!("acceptance C3 round-fold homology: PASS");
}

#[test]
fn c04_genus_split_graphs() {
    // odd: split 3 = 1 + 2, both identified, top class twice the generator
    let (c, reg) = scenes::genus_split_graph(3).unwrap();
    let q = c.universal_quotient(&reg, RingSpec::Integers, &[]).unwrap();
    assert_eq!(q.invariant_factors(), (1, vec![]));
    let e_g = reg.basis_element("Sigma3").unwrap();
    let e_h = reg.basis_element("Sigma1").unwrap();
    assert!(q.is_zero(&e_g.sub(&e_h.scale(&BigInt::from(2)))).unwrap());
    assert!(!q.is_zero(&e_g).unwrap());
    assert!(c.nonvanishing_verdict(&reg, &q).unwrap().nonvanishing);

    // even: split 4 = 2 + 2 with every auxiliary genus inside [1, g-2]
    let g = 4u64;
    let (c, reg) = scenes::genus_split_graph_even(g).unwrap();
    let q = c.universal_quotient(&reg, RingSpec::Integers, &[]).unwrap();
    assert_eq!(q.invariant_factors(), (1, vec![]));
    let e_g = reg.basis_element("Sigma4").unwrap();
    let e_t = reg.basis_element("Sigma2").unwrap();
    assert!(q.is_zero(&e_g.sub(&e_t.scale(&BigInt::from(2)))).unwrap());
    assert!(!q.is_zero(&e_g).unwrap());
    assert!(c.nonvanishing_verdict(&reg, &q).unwrap().nonvanishing);
    for t in reg.types() {
        if t.id == "Sigma4" {
            continue;
        }
        let FiberKind::Surface { genus, .. } = t.kind else {
            panic!("labels are surfaces")
        };
        assert!(
            (1..=g - 2).contains(&genus),
            "auxiliary genus {genus} outside [1, {}]",
            g - 2
        );
    }
    assert!(scenes::genus_split_graph(2).is_err());
    assert!(scenes::genus_split_graph_even(3).is_err());
    println!("acceptance C4 genus-split graphs: PASS");
}

#[test]
fn c05_klein_demo_dichotomy() {
    let (c, reg) = scenes::klein_demo().unwrap();
    assert!(c.surface_transition_check(&reg, 2).unwrap().is_ok());
    let q = c.universal_quotient(&reg, RingSpec::Integers, &[]).unwrap();
    assert_eq!(q.invariant_factors(), (0, vec![BigInt::from(2)]));
    let e_n1 = reg.basis_element("N1").unwrap();
    assert!(!q.is_zero(&e_n1).unwrap(), "class of N1 generates");
    assert!(q.is_zero(&e_n1.scale(&BigInt::from(2))).unwrap());
    let verdict = c.nonvanishing_verdict(&reg, &q).unwrap();
    assert!(verdict.nonvanishing);
    assert_eq!(
        c.label_of(&verdict.witness_cell.unwrap()),
        Some("N1"),
        "witness sits on an N1 sheet"
    );

    // dropping the mixed relation e_N2 - e_Sigma1 leaves the free case
    let relations = [
        reg.basis_element("Sigma0").unwrap(),
        reg.basis_element("Sigma1")
            .unwrap()
            .sub(&reg.basis_element("Sigma0").unwrap()),
        reg.basis_element("N2")
            .unwrap()
            .sub(&reg.basis_element("N1").unwrap().scale(&BigInt::from(2))),
    ];
    let q_free = QuotientModule::build(reg.len(), &relations, RingSpec::Integers).unwrap();
    assert_eq!(q_free.invariant_factors(), (1, vec![]));
    println!("acceptance C5 Klein-bottle transition demo: PASS");
}

fn parity_classifier(reg: &TypeRegistry) -> Classifier {
    let mut cl = Classifier::new(0, vec![2]);
    for t in reg.types() {
        let parity = t.unoriented_cobordism_class().unwrap();
        cl.assign(&t.id, &[parity as i64]).unwrap();
    }
    cl
}

#[test]
fn c06_parity_classifier_recovers_classic_criterion() {
    use reebmod::GenusConvention;
    // crosscap genus 1: odd Euler characteristic, class survives
    let mut reg = TypeRegistry::new();
    reg.register(FiberType::nonorientable_surface(
        "F",
        1,
        GenusConvention::Crosscap,
    ))
    .unwrap();
    let c = scenes::loop_graph(&reg, "F").unwrap();
    let cl = parity_classifier(&reg);
    let (compatible, _) = c.classifier_compatible(&reg, &cl).unwrap();
    assert!(compatible);
    let verdict = c.classifier_verdict(&reg, &cl).unwrap();
    assert!(verdict.nonvanishing);

    // torus: even characteristic, nothing survives
    let mut reg = TypeRegistry::new();
    reg.register(FiberType::orientable_surface("F", 1)).unwrap();
    let c = scenes::loop_graph(&reg, "F").unwrap();
    let cl = parity_classifier(&reg);
    let (compatible, _) = c.classifier_compatible(&reg, &cl).unwrap();
    assert!(compatible);
    let verdict = c.classifier_verdict(&reg, &cl).unwrap();
    assert!(!verdict.nonvanishing);
    println!("acceptance C6 parity classifier: PASS");
}

fn fixtures() -> Vec<(LabeledComplex, TypeRegistry)> {
    let mut out = Vec::new();
    let reg = patch_registry();
    out.push((scenes::y_patch(&reg, "a1", "a2", "a3").unwrap(), reg));
    let reg = sphere_registry();
    out.push((scenes::round_fold(&reg, "S", "Sigma").unwrap(), reg));
    let mut reg = TypeRegistry::new();
    reg.register(FiberType::sphere("S", "standard")).unwrap();
    out.push((scenes::round_fold(&reg, "S", "S").unwrap(), reg));
    for g in [3u64, 5, 7] {
        out.push(scenes::genus_split_graph(g).unwrap());
    }
    for g in [4u64, 6, 8] {
        out.push(scenes::genus_split_graph_even(g).unwrap());
    }
    let (klein, kreg) = scenes::klein_demo().unwrap();
    let spun = scenes::spin(&klein, &kreg, Some("v0"), 2).unwrap();
    out.push((klein, kreg.clone()));
    out.push((spun, kreg));
    let mut reg = TypeRegistry::new();
    reg.register(FiberType::orientable_surface("F", 1)).unwrap();
    out.push((scenes::loop_graph(&reg, "F").unwrap(), reg));
    out
}

#[test]
fn c07_canonical_chain_is_a_cycle() {
    let start = Instant::now();
    let params = RandomSceneParams::default();
    let mut cases = fixtures();
    for seed in 0..200u64 {
        cases.push(scenes::random_scene(seed, &params).unwrap());
    }
    for (i, (c, reg)) in cases.iter().enumerate() {
        let q = c.universal_quotient(reg, RingSpec::Integers, &[]).unwrap();
        let chain = c.canonical_chain(reg, &q).unwrap();
        for (face, class) in c.chain_boundary(&q, &chain).unwrap() {
            assert!(
                class.is_zero_vector(),
                "case {i}: boundary survives at face {face}"
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    println!(
        "acceptance C7 cycle property ({} cases, {:?}): PASS",
        200 + fixtures().len(),
        elapsed
    );
}

#[test]
fn c08_extra_relations_only_degrade() {
    let params = RandomSceneParams::default();
    for seed in 1000..1100u64 {
        let (c, reg) = scenes::random_scene(seed, &params).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xfeed);
        let extras: Vec<ModuleElement> = (0..rng.gen_range(1..=3))
            .map(|_| {
                ModuleElement::from_i64(
                    &(0..reg.len())
                        .map(|_| rng.gen_range(-3i64..=3))
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        let q_small = c.universal_quotient(&reg, RingSpec::Integers, &[]).unwrap();
        let q_big = c
            .universal_quotient(&reg, RingSpec::Integers, &extras)
            .unwrap();
        for i in 0..reg.len() {
            let e = ModuleElement::basis(reg.len(), i);
            if q_small.is_zero(&e).unwrap() {
                assert!(
                    q_big.is_zero(&e).unwrap(),
                    "seed {seed}: class resurrected from zero"
                );
            }
        }
        let v_small = c.nonvanishing_verdict(&reg, &q_small).unwrap();
        let v_big = c.nonvanishing_verdict(&reg, &q_big).unwrap();
        assert!(
            v_small.nonvanishing || !v_big.nonvanishing,
            "seed {seed}: verdict improved under extra relations"
        );
    }
    println!("acceptance C8 monotonicity (100 scenes): PASS");
}

/// Determinantal-divisor oracle, independent of the elimination code: the
/// k-th invariant factor is the ratio of gcds of k-minors.
fn oracle_3x3(a: &IntMatrix) -> Vec<BigInt> {
    assert_eq!((a.rows(), a.cols()), (3, 3));
    let minor = |rows: [usize; 2], cols: [usize; 2]| -> BigInt {
        &a[(rows[0], cols[0])] * &a[(rows[1], cols[1])]
            - &a[(rows[0], cols[1])] * &a[(rows[1], cols[0])]
    };
    let d1 = a.entry_gcd();
    if d1.is_zero() {
        return vec![];
    }
    let mut d2 = BigInt::zero();
    let pairs = [[0usize, 1], [0, 2], [1, 2]];
    for r in pairs {
        for c in pairs {
            d2 = gcd(d2, minor(r, c).abs());
        }
    }
    if d2.is_zero() {
        return vec![d1];
    }
    let d3 = a.determinant().abs();
    let mut factors = vec![d1.clone(), &d2 / &d1];
    if !d3.is_zero() {
        factors.push(&d3 / &d2);
    }
    factors
}

#[test]
fn c09_smith_normal_form_suite() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5afe);
    for i in 0..500 {
        let (rows, cols) = if i % 7 == 0 {
            (3, 3)
        } else {
            (rng.gen_range(1..=8), rng.gen_range(1..=8))
        };
        let mut a = IntMatrix::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                a[(r, c)] = BigInt::from(rng.gen_range(-9i64..=9));
            }
        }
        let snf = smith_normal_form(&a);
        assert_eq!(snf.u.mul(&a).mul(&snf.v), snf.d, "U*A*V != D");
        assert_eq!(snf.u.determinant().abs(), BigInt::one());
        assert_eq!(snf.v.determinant().abs(), BigInt::one());
        for w in snf.invariant_factors.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "divisibility chain broken");
        }
        if rows == 3 && cols == 3 {
            assert_eq!(
                snf.invariant_factors,
                oracle_3x3(&a),
                "oracle mismatch on {a:?}"
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    println!("acceptance C9 normal-form suite (500 matrices, {elapsed:?}): PASS");
}

#[test]
fn c10_spin_preserves_module_and_verdict() {
    let params = RandomSceneParams {
        allow_spin: false,
        ..RandomSceneParams::default()
    };
    for seed in 2000..2050u64 {
        let (graph, reg) = scenes::random_scene(seed, &params).unwrap();
        let base = graph
            .cells(0)
            .iter()
            .find(|v| graph.mark_of(v) == Some(reebmod::FaceMark::BoundaryFace))
            .cloned();
        let spun = scenes::spin(&graph, &reg, base.as_deref(), 2).unwrap();
        let qg = graph
            .universal_quotient(&reg, RingSpec::Integers, &[])
            .unwrap();
        let qs = spun
            .universal_quotient(&reg, RingSpec::Integers, &[])
            .unwrap();
        assert_eq!(
            qg.invariant_factors(),
            qs.invariant_factors(),
            "seed {seed}: spin changed the module"
        );
        let vg = graph.nonvanishing_verdict(&reg, &qg).unwrap();
        let vs = spun.nonvanishing_verdict(&reg, &qs).unwrap();
        assert_eq!(
            vg.nonvanishing, vs.nonvanishing,
            "seed {seed}: spin changed the verdict"
        );
    }
    println!("acceptance C10 spin invariance (50 graphs): PASS");
}

#[test]
fn c11_orientation_flip_and_relabeling_invariance() {
    let params = RandomSceneParams::default();
    for seed in 3000..3100u64 {
        let (c, reg) = scenes::random_scene(seed, &params).unwrap();
        let q = c.universal_quotient(&reg, RingSpec::Integers, &[]).unwrap();
        let v = c.nonvanishing_verdict(&reg, &q).unwrap();

        // flipping every top incidence sign changes nothing
        let flipped = c.with_flipped_top_orientation();
        let qf = flipped
            .universal_quotient(&reg, RingSpec::Integers, &[])
            .unwrap();
        assert_eq!(q.invariant_factors(), qf.invariant_factors(), "seed {seed}");
        let vf = flipped.nonvanishing_verdict(&reg, &qf).unwrap();
        assert_eq!(v.nonvanishing, vf.nonvanishing, "seed {seed}");
        assert_eq!(v.witness_cell, vf.witness_cell, "seed {seed}");

        // renaming the types and permuting the registry order changes nothing
        let mut rename = std::collections::BTreeMap::new();
        for t in reg.types() {
            rename.insert(t.id.clone(), format!("renamed-{}", t.id));
        }
        let mut reg2 = TypeRegistry::new();
        for t in reg.types().iter().rev() {
            let mut t2 = t.clone();
            t2.id = rename[&t.id].clone();
            reg2.register(t2).unwrap();
        }
        let relabeled = c.with_renamed_types(&rename);
        let q2 = relabeled
            .universal_quotient(&reg2, RingSpec::Integers, &[])
            .unwrap();
        assert_eq!(q.invariant_factors(), q2.invariant_factors(), "seed {seed}");
        let v2 = relabeled.nonvanishing_verdict(&reg2, &q2).unwrap();
        assert_eq!(v.nonvanishing, v2.nonvanishing, "seed {seed}");
        assert_eq!(v.witness_cell, v2.witness_cell, "seed {seed}");
    }
    println!("acceptance C11 orientation-flip and relabeling invariance (100 scenes): PASS");
}
