//! Exact-rational SL2 representations, used to check trace polynomials
//! against matrix traces.

use std::fmt;
use std::ops::Mul;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{fricke_k, Polynomial, NVARS};
use crate::trace::trace_poly;
use crate::words::Word;

/// Number of shears multiplied together per generator image by default.
pub const DEFAULT_STEPS: u32 = 4;

/// Off-diagonal entries of sampled shears lie in `[-SHEAR_BOUND, SHEAR_BOUND]`.
pub const SHEAR_BOUND: i64 = 3;

/// A 2x2 matrix `[[a, b], [c, d]]` over the rationals with determinant 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    a: BigRational,
    b: BigRational,
    c: BigRational,
    d: BigRational,
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl Mat2 {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Result<Self> {
        let m = Mat2 { a, b, c, d };
        if m.det().is_one() {
            Ok(m)
        } else {
            Err(Error::InvalidArgument(format!(
                "determinant is {}, not 1",
                m.det()
            )))
        }
    }

    pub fn identity() -> Self {
        Mat2 {
            a: int(1),
            b: int(0),
            c: int(0),
            d: int(1),
        }
    }

    /// `[[1, k], [0, 1]]`.
    pub fn upper_shear(k: i64) -> Self {
        Mat2 {
            b: int(k),
            ..Mat2::identity()
        }
    }

    /// `[[1, 0], [k, 1]]`.
    pub fn lower_shear(k: i64) -> Self {
        Mat2 {
            c: int(k),
            ..Mat2::identity()
        }
    }

    /// `diag(t, 1/t)`. Panics if `t` is zero.
    pub fn diagonal(t: BigRational) -> Self {
        let inv = t.recip();
        Mat2 {
            a: t,
            b: int(0),
            c: int(0),
            d: inv,
        }
    }

    pub fn entries(&self) -> [&BigRational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn det(&self) -> BigRational {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigRational {
        &self.a + &self.d
    }

    /// `[[d, -b], [-c, a]]`.
    pub fn inverse(&self) -> Mat2 {
        Mat2 {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    pub fn pow(&self, e: i64) -> Mat2 {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Mat2::identity();
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &sq;
            }
            n >>= 1;
            if n > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Images of `g1, g2, g3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SL2Rep {
    pub m1: Mat2,
    pub m2: Mat2,
    pub m3: Mat2,
}

impl SL2Rep {
    pub fn new(m1: Mat2, m2: Mat2, m3: Mat2) -> Self {
        SL2Rep { m1, m2, m3 }
    }

    pub fn trivial() -> Self {
        SL2Rep::new(Mat2::identity(), Mat2::identity(), Mat2::identity())
    }

    pub fn image(&self, generator: u8) -> &Mat2 {
        match generator {
            1 => &self.m1,
            2 => &self.m2,
            3 => &self.m3,
            _ => panic!("generator index {generator} out of range"),
        }
    }
}

/// Each generator image is a product of `steps` random unitriangular shears.
pub fn random_rep(seed: u64, steps: u32) -> Result<SL2Rep> {
    if steps == 0 {
        return Err(Error::InvalidArgument("steps must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sample = || {
        (0..steps).fold(Mat2::identity(), |acc, _| {
            let k = rng.random_range(-SHEAR_BOUND..=SHEAR_BOUND);
            let shear = if rng.random_bool(0.5) {
                Mat2::upper_shear(k)
            } else {
                Mat2::lower_shear(k)
            };
            &acc * &shear
        })
    };
    let m1 = sample();
    let m2 = sample();
    let m3 = sample();
    Ok(SL2Rep::new(m1, m2, m3))
}

pub fn word_matrix(rep: &SL2Rep, w: &Word) -> Mat2 {
    w.syllables().iter().fold(Mat2::identity(), |acc, s| {
        &acc * &rep.image(s.generator()).pow(s.exponent())
    })
}

/// Traces of the images of `g1, g2, g3, g1g2, g1g3, g2g3, g1g2g3`.
pub fn trace_point(rep: &SL2Rep) -> [BigRational; NVARS] {
    let m12 = &rep.m1 * &rep.m2;
    [
        rep.m1.trace(),
        rep.m2.trace(),
        rep.m3.trace(),
        m12.trace(),
        (&rep.m1 * &rep.m3).trace(),
        (&rep.m2 * &rep.m3).trace(),
        (&m12 * &rep.m3).trace(),
    ]
}

/// Whether the trace polynomial of `w` evaluated at the trace point of `rep`
/// equals the trace of `w`'s image.
pub fn check_word(rep: &SL2Rep, w: &Word) -> bool {
    trace_poly(w).evaluate(&trace_point(rep)) == word_matrix(rep, w).trace()
}

/// A word with syllable count uniform in `[1, max_syllables]`, uniform
/// generators and exponents uniform in `{-3..-1, 1..3}`, freely reduced.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, max_syllables: usize) -> Word {
    let n = rng.random_range(1..=max_syllables.max(1));
    let pairs: Vec<(u8, i64)> = (0..n)
        .map(|_| {
            let g = rng.random_range(1..=3u8);
            let e = rng.random_range(1..=3i64);
            (g, if rng.random_bool(0.5) { e } else { -e })
        })
        .collect();
    Word::from_pairs(pairs).expect("small exponents cannot overflow")
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of trial `t` in a run seeded by `seed`.
pub fn trial_seed(seed: u64, t: u64) -> u64 {
    splitmix64(seed ^ splitmix64(t))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// Trace polynomial against matrix trace.
    Word,
    /// `K` at the trace point.
    FrickeVanishes,
    /// `tr(UV) + tr(UV^-1) = tr(U) tr(V)` on matrices.
    ProductRelation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzFailure {
    pub trial: u64,
    pub seed: u64,
    pub word: String,
    pub expected: String,
    pub got: String,
    pub check: CheckKind,
}

#[derive(Clone, Debug, Serialize)]
pub struct FuzzReport {
    pub trials: u64,
    pub failures: Vec<FuzzFailure>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// JSON without timing, so equal runs serialize identically.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Runs `trials` independently seeded trials against [`trace_poly`].
pub fn fuzz(trials: u64, max_syllables: usize, seed: u64) -> Result<FuzzReport> {
    fuzz_with(trials, max_syllables, seed, &trace_poly)
}

/// [`fuzz`] with a caller-supplied trace function in place of [`trace_poly`].
pub fn fuzz_with(
    trials: u64,
    max_syllables: usize,
    seed: u64,
    trace: &(dyn Fn(&Word) -> Polynomial + Sync),
) -> Result<FuzzReport> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    if max_syllables == 0 {
        return Err(Error::InvalidArgument(
            "max syllables must be at least 1".into(),
        ));
    }
    let start = Instant::now();
    let mut failures: Vec<FuzzFailure> = (0..trials)
        .into_par_iter()
        .flat_map_iter(|t| run_trial(t, trial_seed(seed, t), max_syllables, trace))
        .collect();
    failures.sort_by_key(|f| f.trial);
    Ok(FuzzReport {
        trials,
        failures,
        elapsed: start.elapsed(),
    })
}

fn run_trial(
    trial: u64,
    seed: u64,
    max_syllables: usize,
    trace: &(dyn Fn(&Word) -> Polynomial + Sync),
) -> Vec<FuzzFailure> {
    let rep = random_rep(seed, DEFAULT_STEPS).expect("default steps is positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(1);
    let w = random_word(&mut rng, max_syllables);
    let v = random_word(&mut rng, max_syllables);
    let point = trace_point(&rep);
    let mut failures = Vec::new();
    let mut fail = |word: &Word, expected: BigRational, got: BigRational, check| {
        failures.push(FuzzFailure {
            trial,
            seed,
            word: word.to_string(),
            expected: expected.to_string(),
            got: got.to_string(),
            check,
        })
    };

    let mw = word_matrix(&rep, &w);
    let expected = mw.trace();
    let got = trace(&w).evaluate(&point);
    if got != expected {
        fail(&w, expected, got, CheckKind::Word);
    }

    let k = fricke_k().evaluate(&point);
    if !k.is_zero() {
        fail(&w, BigRational::zero(), k, CheckKind::FrickeVanishes);
    }

    let mv = word_matrix(&rep, &v);
    let lhs = (&mw * &mv).trace() + (&mw * &mv.inverse()).trace();
    let rhs = mw.trace() * mv.trace();
    if lhs != rhs {
        fail(&w, rhs, lhs, CheckKind::ProductRelation);
    }
    failures
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Var;
    use crate::words::parse_word;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn zero_steps_rejected() {
        assert!(random_rep(1, 0).is_err());
    }

    #[test]
    fn random_rep_is_deterministic_and_unimodular() {
        for seed in 0..20 {
            let r = random_rep(seed, DEFAULT_STEPS).unwrap();
            assert_eq!(r, random_rep(seed, DEFAULT_STEPS).unwrap());
            for m in [&r.m1, &r.m2, &r.m3] {
                assert!(m.det().is_one());
            }
        }
        assert_ne!(random_rep(1, 4).unwrap(), random_rep(2, 4).unwrap());
    }

    #[test]
    fn shear_inverse() {
        let rep = SL2Rep::new(Mat2::upper_shear(1), Mat2::identity(), Mat2::identity());
        let m = word_matrix(&rep, &parse_word("g1^-1").unwrap());
        assert_eq!(m, Mat2::upper_shear(-1));
        assert_eq!(word_matrix(&rep, &Word::identity()), Mat2::identity());
    }

    #[test]
    fn rejects_bad_determinant() {
        assert!(Mat2::new(q(2, 1), q(0, 1), q(0, 1), q(1, 1)).is_err());
        assert!(Mat2::new(q(2, 1), q(0, 1), q(0, 1), q(1, 2)).is_ok());
    }

    #[test]
    fn trace_points() {
        assert!(trace_point(&SL2Rep::trivial())
            .iter()
            .all(|t| *t == q(2, 1)));
        let rep = SL2Rep::new(Mat2::diagonal(q(2, 1)), Mat2::identity(), Mat2::identity());
        let expected = [
            q(5, 2),
            q(2, 1),
            q(2, 1),
            q(5, 2),
            q(5, 2),
            q(2, 1),
            q(5, 2),
        ];
        assert_eq!(trace_point(&rep), expected);
        assert!(fricke_k().evaluate(&trace_point(&rep)).is_zero());
    }

    #[test]
    fn check_word_examples() {
        let rep = random_rep(9, 4).unwrap();
        assert!(check_word(&rep, &Word::identity()));
        let w = parse_word("g1*g3^-2*g2*g1^3*g3").unwrap();
        assert!(check_word(&SL2Rep::trivial(), &w));
        assert!(check_word(&rep, &w));
    }

    #[test]
    fn fuzz_passes_and_is_reproducible() {
        let a = fuzz(60, 8, 0).unwrap();
        assert!(a.passed(), "{:?}", a.failures);
        assert_eq!(a.trials, 60);
        let b = fuzz(60, 8, 0).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert!(fuzz(1, 3, 42).unwrap().passed());
        assert!(fuzz(0, 3, 0).is_err());
        assert!(fuzz(1, 0, 0).is_err());
    }

    #[test]
    fn json_has_no_timing() {
        let r = fuzz(2, 2, 5).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["trials"], 2);
        assert!(v["failures"].as_array().unwrap().is_empty());
        assert!(v.get("elapsed_ms").is_none());
    }

    #[test]
    fn injected_fault_names_seed() {
        // Shift the x1 coefficient of every trace polynomial.
        let broken = |w: &Word| &trace_poly(w) + &Polynomial::var(Var::X1);
        let r = fuzz_with(20, 6, 3, &broken).unwrap();
        assert!(!r.passed());
        let f = r
            .failures
            .iter()
            .find(|f| f.check == CheckKind::Word)
            .unwrap();
        assert_eq!(f.seed, trial_seed(3, f.trial));
        let rep = random_rep(f.seed, DEFAULT_STEPS).unwrap();
        let w = parse_word(&f.word).unwrap();
        assert!(check_word(&rep, &w));
        let mut sorted = r.failures.clone();
        sorted.sort_by_key(|f| f.trial);
        assert_eq!(sorted, r.failures);
    }

    #[test]
    fn abelian_rep_kills_borromean_table() {
        // Diagonal images commute, so every relator pair collapses.
        let rep = SL2Rep::new(
            Mat2::diagonal(q(2, 1)),
            Mat2::diagonal(q(3, 1)),
            Mat2::diagonal(q(-1, 5)),
        );
        let point = trace_point(&rep);
        let table = crate::ideal::borromean_table();
        assert!(table.k.evaluate(&point).is_zero());
        for (label, p) in &table.q {
            assert!(p.evaluate(&point).is_zero(), "{label}");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn matrix_trace_identities(seed in any::<u64>(), s2 in any::<u64>()) {
            let rep = random_rep(seed, 3).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(s2);
            let u = random_word(&mut rng, 5);
            let v = random_word(&mut rng, 5);
            let a = word_matrix(&rep, &u);
            let b = word_matrix(&rep, &v);
            prop_assert!(a.det().is_one());
            prop_assert_eq!((&a * &b).trace(), (&b * &a).trace());
            prop_assert_eq!(a.trace(), a.inverse().trace());
            prop_assert_eq!(&a * &b, word_matrix(&rep, &u.multiply(&v)));
            prop_assert_eq!((&a * &b).trace() + (&a * &b.inverse()).trace(), a.trace() * b.trace());
            prop_assert!(fricke_k().evaluate(&trace_point(&rep)).is_zero());
        }
    }
}
