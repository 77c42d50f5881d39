//! The exact integer layer on its own: Smith normal form with transforms,
//! lattice membership, and quotient-module presentations with canonical
//! reduction — everything the verdicts are built from.
//!
//! ```bash
//! cargo run --example exact_algebra
//! ```

use num_bigint::BigInt;
use reebmod::quotient::ModuleElement;
use reebmod::{smith_normal_form, IntMatrix, QuotientModule, RingSpec};

fn main() -> reebmod::Result<()> {
    let a = IntMatrix::from_rows(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
    let snf = smith_normal_form(&a);
    println!("A = {a:?}");
    println!("invariant factors: {:?}", snf.invariant_factors);
    println!("U*A*V = D holds: {}", snf.u.mul(&a).mul(&snf.v) == snf.d);
    println!(
        "|det U| = {}, |det V| = {}",
        snf.u.determinant(),
        snf.v.determinant()
    );

    // present Z^2 / <(1,0), (1,-2)>: the lattice is {(1,0),(0,2)}, so the
    // quotient is Z/2 and (0,1), (0,3) are the same nonzero class
    let q = QuotientModule::build(
        2,
        &[ModuleElement::from_i64(&[1, 0]), ModuleElement::from_i64(&[1, -2])],
        RingSpec::Integers,
    )?;
    println!("quotient Z^2/<(1,0),(1,-2)>: {:?}", q.invariant_factors());
    let x = ModuleElement::from_i64(&[0, 1]);
    let y = ModuleElement::from_i64(&[0, 3]);
    println!(
        "reduce(0,1) = {:?}, reduce(0,3) = {:?}, equal: {}",
        q.reduce(&x)?.coords,
        q.reduce(&y)?.coords,
        q.reduce(&x)? == q.reduce(&y)?
    );
    println!("(0,2) is zero: {}", q.is_zero(&ModuleElement::from_i64(&[0, 2]))?);
    println!("(0,1) is zero: {}", q.is_zero(&x)?);

    // coefficient growth is the reason everything is a BigInt
    let mut hadamard = IntMatrix::zero(6, 6);
    for i in 0..6 {
        for j in 0..6 {
            hadamard[(i, j)] = BigInt::from((i as i64 + 1).pow(j as u32));
        }
    }
    let snf = smith_normal_form(&hadamard);
    println!(
        "Vandermonde 6x6 invariant factors: {:?}",
        snf.invariant_factors
    );

    // quotients over Z/k run through the same integer pipeline
    let q2 = QuotientModule::build(
        2,
        &[ModuleElement::from_i64(&[1, 1])],
        RingSpec::integers_mod(4)?,
    )?;
    println!("(Z/4)^2 / <(1,1)>: {:?}", q2.invariant_factors());
    Ok(())
}
