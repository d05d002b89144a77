//! Trace polynomials of words by skein reduction.
//!
//! For a reduced word `w` the engine returns a polynomial `P_w` in the seven
//! trace coordinates whose image in the skein algebra of the free group is
//! `[w]`; equivalently `P_w` evaluated at the trace coordinates of any SL2
//! representation equals the trace of the image of `w`. `P_w` is one
//! representative of its class modulo `<K>`; [`TraceEngine::trace_nf`] gives
//! the canonical one.
//!
//! Reduction works on the canonical key of `w` (cyclic reduction, least
//! rotation of the word or its inverse) and applies the first rule that
//! matches:
//!
//! 1. `e` gives `2`.
//! 2. `g1, g2, g3, g1g2, g1g3, g2g3, g1g2g3` give their coordinate.
//! 3. A syllable `g^m` with `|m| >= 2`:
//!    `[u g^m v] = x_g [u g^(m-s) v] - [u g^(m-2s) v]`, `s = sign(m)`.
//! 4. All exponents `±1` and a repeated generator: split `XYZ` where `X`
//!    ends and `Y` ends with the same generator, then
//!    `[XYZ] = [XZ][Y] - [X Y^-1 Z]`.
//! 5. Distinct generators with an inverted one:
//!    `[u g^-1 v] = x_g [uv] - [u g v]`.
//! 6. The only remaining key is `g1g3g2`:
//!    `[g1g3g2] = x1 x23 + x2 x13 + x3 x12 - x1 x2 x3 - x123`.
//!
//! Each rule strictly lowers `(weight, syllables, inverted syllables,
//! unsorted)` in lexicographic order, so the recursion terminates.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::poly::{Polynomial, Var};
use crate::words::{Syllable, Word};

/// Where rule 4 splits a word with a repeated generator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SplitRule {
    /// At the first position whose generator already occurred.
    #[default]
    First,
    /// At the last position whose generator occurs again later.
    Last,
}

/// Memoizing trace evaluator. The cache is shared behind a lock, so one
/// engine can serve several threads; concurrent misses may compute the same
/// key twice but only one result is kept.
#[derive(Debug, Default)]
pub struct TraceEngine {
    split: SplitRule,
    cache: RwLock<HashMap<Word, Arc<Polynomial>>>,
}

impl TraceEngine {
    pub fn new() -> Self {
        TraceEngine::default()
    }

    pub fn with_split(split: SplitRule) -> Self {
        TraceEngine {
            split,
            cache: RwLock::default(),
        }
    }

    pub fn split_rule(&self) -> SplitRule {
        self.split
    }

    /// Number of memoized canonical keys.
    pub fn cache_len(&self) -> usize {
        self.cache.read().unwrap().len()
    }

    /// Raw trace representative `P_w` (may contain `x123^2` and higher).
    pub fn trace_poly(&self, w: &Word) -> Polynomial {
        self.trace_shared(w).as_ref().clone()
    }

    /// `P_w` reduced modulo `K`: the canonical element of the skein algebra.
    pub fn trace_nf(&self, w: &Word) -> Polynomial {
        self.trace_shared(w).rem_mod_fricke()
    }

    pub fn trace_shared(&self, w: &Word) -> Arc<Polynomial> {
        self.trace_key(&w.canonical_trace_key())
    }

    fn trace_key(&self, key: &Word) -> Arc<Polynomial> {
        if let Some(p) = self.cache.read().unwrap().get(key) {
            return Arc::clone(p);
        }
        let p = Arc::new(stacker::maybe_grow(128 * 1024, 4 * 1024 * 1024, || {
            self.expand(key)
        }));
        let mut cache = self.cache.write().unwrap();
        Arc::clone(cache.entry(key.clone()).or_insert(p))
    }

    fn trace_of(&self, w: &Word) -> Arc<Polynomial> {
        self.trace_key(&w.canonical_trace_key())
    }

    fn expand(&self, key: &Word) -> Polynomial {
        let s = key.syllables();
        if s.is_empty() {
            return Polynomial::constant(2);
        }
        if let Some(v) = horowitz_coordinate(s) {
            return Polynomial::var(v);
        }

        if let Some(p) = s.iter().position(|x| x.exponent().unsigned_abs() >= 2) {
            let g = s[p].generator();
            let m = s[p].exponent();
            let step = m.signum();
            let u = Word::from_reduced_slice(&s[..p]);
            let v = Word::from_reduced_slice(&s[p + 1..]);
            let shorter = u.multiply(&Word::power(g, m - step)).multiply(&v);
            let shortest = u.multiply(&Word::power(g, m - 2 * step)).multiply(&v);
            let x = Polynomial::var(Var::generator(g));
            return &(&x * &*self.trace_of(&shorter)) - &*self.trace_of(&shortest);
        }

        if let Some((s1, s2)) = split_positions(s, self.split) {
            let x = Word::from_reduced_slice(&s[..=s1]);
            let y = Word::from_reduced_slice(&s[s1 + 1..=s2]);
            let z = Word::from_reduced_slice(&s[s2 + 1..]);
            let xz = x.multiply(&z);
            let xy_inv_z = x.multiply(&y.invert()).multiply(&z);
            let product = &*self.trace_of(&xz) * &*self.trace_of(&y);
            return &product - &*self.trace_of(&xy_inv_z);
        }

        if let Some(p) = s.iter().position(|x| x.exponent() < 0) {
            let g = s[p].generator();
            let u = Word::from_reduced_slice(&s[..p]);
            let v = Word::from_reduced_slice(&s[p + 1..]);
            let uv = u.multiply(&v);
            let flipped = u.multiply(&Word::generator(g)).multiply(&v);
            let x = Polynomial::var(Var::generator(g));
            return &(&x * &*self.trace_of(&uv)) - &*self.trace_of(&flipped);
        }

        assert_eq!(
            key.pairs(),
            [(1, 1), (3, 1), (2, 1)],
            "unexpected canonical key {key}"
        );
        g1g3g2_trace()
    }
}

/// Trace of `g1 g3 g2`, from the reordering identity
/// `[abc] + [acb] = [a][bc] + [b][ac] + [c][ab] - [a][b][c]`.
fn g1g3g2_trace() -> Polynomial {
    use Var::*;
    let x = Polynomial::var;
    let mut p = &x(X1) * &x(X23);
    p += &(&x(X2) * &x(X13));
    p += &(&x(X3) * &x(X12));
    p -= &(&(&x(X1) * &x(X2)) * &x(X3));
    p -= &x(X123);
    p
}

/// The coordinate for a product of distinct generators in increasing order.
fn horowitz_coordinate(s: &[Syllable]) -> Option<Var> {
    let mut mask = 0u8;
    let mut last = 0u8;
    for syl in s {
        if syl.exponent() != 1 || syl.generator() <= last {
            return None;
        }
        last = syl.generator();
        mask |= 1 << (syl.generator() - 1);
    }
    Var::from_index_mask(mask)
}

/// Positions `(s1, s2)`, `s1 < s2`, of two syllables with the same
/// generator, chosen according to `rule`.
fn split_positions(s: &[Syllable], rule: SplitRule) -> Option<(usize, usize)> {
    match rule {
        SplitRule::First => (1..s.len()).find_map(|s2| {
            (0..s2)
                .find(|&s1| s[s1].generator() == s[s2].generator())
                .map(|s1| (s1, s2))
        }),
        SplitRule::Last => (0..s.len()).rev().find_map(|s1| {
            (s1 + 1..s.len())
                .find(|&s2| s[s2].generator() == s[s1].generator())
                .map(|s2| (s1, s2))
        }),
    }
}

fn global_engine() -> &'static TraceEngine {
    static ENGINE: OnceLock<TraceEngine> = OnceLock::new();
    ENGINE.get_or_init(TraceEngine::new)
}

/// [`TraceEngine::trace_poly`] on a process-wide engine.
pub fn trace_poly(w: &Word) -> Polynomial {
    global_engine().trace_poly(w)
}

/// [`TraceEngine::trace_nf`] on a process-wide engine.
pub fn trace_nf(w: &Word) -> Polynomial {
    global_engine().trace_nf(w)
}
