//! Generators of the defining ideal vanish at trace points of
//! representations that satisfy the relations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use skein_core::{
    borromean_presentation, ideal_generators, parse_presentation, random_rep, trace_point,
    word_matrix, Mat2, Presentation, SL2Rep,
};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn satisfies(rep: &SL2Rep, p: &Presentation) -> bool {
    word_matrix(rep, &p.alpha) == word_matrix(rep, &p.beta)
        && word_matrix(rep, &p.gamma) == word_matrix(rep, &p.delta)
}

fn assert_generators_vanish(rep: &SL2Rep, p: &Presentation) {
    assert!(satisfies(rep, p));
    let point = trace_point(rep);
    let gens = ideal_generators(p);
    assert!(gens.k.evaluate(&point).is_zero());
    for (label, d) in &gens.diffs {
        assert!(d.evaluate(&point).is_zero(), "{label}");
    }
}

#[test]
fn borromean_at_trivial_rep() {
    assert_generators_vanish(&SL2Rep::trivial(), &borromean_presentation());
}

#[test]
fn borromean_at_abelian_rep() {
    let rep = SL2Rep::new(
        Mat2::diagonal(q(3, 1)),
        Mat2::diagonal(q(-2, 7)),
        Mat2::diagonal(q(5, 4)),
    );
    assert_generators_vanish(&rep, &borromean_presentation());
}

#[test]
fn commuting_relations_at_unipotent_rep() {
    // Both relations hold when g1 is trivial or all three images commute.
    let p = parse_presentation(
        "generators: g1 g2 g3\nrelation: g1*g2 = g2*g1\nrelation: g1*g3 = g3*g1\n",
    )
    .unwrap();
    let rep = SL2Rep::new(
        Mat2::identity(),
        Mat2::upper_shear(2),
        Mat2::lower_shear(-3),
    );
    assert_generators_vanish(&rep, &p);
    let rep = SL2Rep::new(
        Mat2::upper_shear(1),
        Mat2::upper_shear(5),
        Mat2::upper_shear(-2),
    );
    assert_generators_vanish(&rep, &p);
}

#[test]
fn nonsatisfying_rep_is_detected() {
    let rep = random_rep(1, 4).unwrap();
    let p = borromean_presentation();
    assert!(!satisfies(&rep, &p));
    let point = trace_point(&rep);
    let gens = ideal_generators(&p);
    assert!(gens
        .diffs
        .iter()
        .any(|(_, d)| !d.evaluate(&point).is_zero()));
}
