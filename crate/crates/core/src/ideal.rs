//! Defining ideals of skein algebras of three-generator, two-relator groups,
//! and the explicit generating set for the Borromean rings complement.

use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{fricke_k, JsonTerm, Polynomial, VarPerm};
use crate::trace::TraceEngine;
use crate::words::{parse_word, Word};

/// One of the two relations of a presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelatorPair {
    /// The first relation, `alpha = beta`.
    AlphaBeta,
    /// The second relation, `gamma = delta`.
    GammaDelta,
}

impl RelatorPair {
    pub const ALL: [RelatorPair; 2] = [RelatorPair::AlphaBeta, RelatorPair::GammaDelta];

    pub fn tag(self) -> &'static str {
        match self {
            RelatorPair::AlphaBeta => "ab",
            RelatorPair::GammaDelta => "cd",
        }
    }
}

/// A multiplier `g1^i1 g2^i2 g3^i3` with `i1, i2, i3` in `{0, 1}`, stored as
/// the bits `i1 i2 i3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetWord(u8);

impl CosetWord {
    pub const E: CosetWord = CosetWord(0b000);
    pub const G3: CosetWord = CosetWord(0b001);
    pub const G2: CosetWord = CosetWord(0b010);
    pub const G2G3: CosetWord = CosetWord(0b011);
    pub const G1: CosetWord = CosetWord(0b100);
    pub const G1G3: CosetWord = CosetWord(0b101);
    pub const G1G2: CosetWord = CosetWord(0b110);
    pub const G1G2G3: CosetWord = CosetWord(0b111);

    /// All eight multipliers in binary order of `(i1, i2, i3)`:
    /// `e, g3, g2, g2g3, g1, g1g3, g1g2, g1g2g3`.
    pub fn all() -> impl Iterator<Item = CosetWord> {
        (0..8).map(CosetWord)
    }

    pub fn exponents(self) -> [u8; 3] {
        [(self.0 >> 2) & 1, (self.0 >> 1) & 1, self.0 & 1]
    }

    pub fn word(self) -> Word {
        let pairs = self
            .exponents()
            .into_iter()
            .zip(1u8..)
            .filter(|(i, _)| *i == 1)
            .map(|(_, g)| (g, 1));
        Word::from_pairs(pairs).expect("coset words are reduced")
    }
}

impl fmt::Display for CosetWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("e");
        }
        for (i, g) in self.exponents().into_iter().zip(1..) {
            if i == 1 {
                write!(f, "g{g}")?;
            }
        }
        Ok(())
    }
}

/// Identifies one trace difference `P_{a g} - P_{b g}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    pub pair: RelatorPair,
    pub coset: CosetWord,
}

impl Label {
    pub fn new(pair: RelatorPair, coset: CosetWord) -> Self {
        Label { pair, coset }
    }

    /// All sixteen labels: the first relation over the eight multipliers,
    /// then the second.
    pub fn all() -> impl Iterator<Item = Label> {
        RelatorPair::ALL
            .into_iter()
            .flat_map(|pair| CosetWord::all().map(move |coset| Label { pair, coset }))
    }
}

/// Formats as `ab,g1g2`.
impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.pair.tag(), self.coset)
    }
}

/// Generators `g1, g2, g3` with relations `alpha = beta` and `gamma = delta`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    pub alpha: Word,
    pub beta: Word,
    pub gamma: Word,
    pub delta: Word,
}

impl Presentation {
    pub fn new(alpha: Word, beta: Word, gamma: Word, delta: Word) -> Self {
        Presentation {
            alpha,
            beta,
            gamma,
            delta,
        }
    }

    pub fn pair(&self, pair: RelatorPair) -> (&Word, &Word) {
        match pair {
            RelatorPair::AlphaBeta => (&self.alpha, &self.beta),
            RelatorPair::GammaDelta => (&self.gamma, &self.delta),
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators: g1 g2 g3")?;
        writeln!(f, "relation: {} = {}", self.alpha, self.beta)?;
        writeln!(f, "relation: {} = {}", self.gamma, self.delta)
    }
}

/// Parses
///
/// ```text
/// generators: g1 g2 g3
/// relation: <word> = <word>
/// relation: <word> = <word>
/// ```
///
/// Blank lines and lines starting with `#` are ignored.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::Presentation("empty presentation".into()))?;
    let gens = header.strip_prefix("generators:").ok_or_else(|| {
        Error::Presentation(format!("line {lineno}: expected `generators: g1 g2 g3`"))
    })?;
    let gens: Vec<&str> = gens.split_whitespace().collect();
    if gens != ["g1", "g2", "g3"] {
        return Err(Error::Presentation(format!(
            "line {lineno}: generators must be exactly g1 g2 g3, got `{}`",
            gens.join(" ")
        )));
    }

    let mut relations = Vec::new();
    for (lineno, line) in lines {
        let body = line.strip_prefix("relation:").ok_or_else(|| {
            Error::Presentation(format!(
                "line {lineno}: expected `relation: <word> = <word>`"
            ))
        })?;
        let (lhs, rhs) = body.split_once('=').ok_or_else(|| {
            Error::Presentation(format!("line {lineno}: relation is missing `=`"))
        })?;
        let word =
            |s: &str| parse_word(s).map_err(|e| Error::Presentation(format!("line {lineno}: {e}")));
        relations.push((word(lhs)?, word(rhs)?));
    }
    if relations.len() != 2 {
        return Err(Error::Presentation(format!(
            "expected 2 relations, found {}",
            relations.len()
        )));
    }
    let (gamma, delta) = relations.pop().unwrap();
    let (alpha, beta) = relations.pop().unwrap();
    Ok(Presentation::new(alpha, beta, gamma, delta))
}

/// The Wirtinger-derived presentation of the Borromean rings group:
/// `alpha = g3 g2^-1 g1 g2 g1^-1`, `beta = g2^-1 g1 g2 g1^-1 g3`,
/// `gamma = g2 g1^-1 g3 g1 g3^-1`, `delta = g1^-1 g3 g1 g3^-1 g2`.
pub fn borromean_presentation() -> Presentation {
    let w = |s: &str| parse_word(s).expect("built-in word");
    Presentation::new(
        w("g3*g2^-1*g1*g2*g1^-1"),
        w("g2^-1*g1*g2*g1^-1*g3"),
        w("g2*g1^-1*g3*g1*g3^-1"),
        w("g1^-1*g3*g1*g3^-1*g2"),
    )
}

/// `K` and the sixteen differences `P_{a g} - P_{b g}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealGenerators {
    pub k: Polynomial,
    pub diffs: Vec<(Label, Polynomial)>,
}

impl IdealGenerators {
    /// Same generators with every difference reduced modulo `K`.
    pub fn normal_forms(&self) -> IdealGenerators {
        IdealGenerators {
            k: self.k.clone(),
            diffs: self
                .diffs
                .iter()
                .map(|(l, p)| (*l, p.rem_mod_fricke()))
                .collect(),
        }
    }
}

/// `P_{a g} - P_{b g}` for the relation `a = b` selected by `label`.
pub fn trace_difference(engine: &TraceEngine, p: &Presentation, label: Label) -> Polynomial {
    let (a, b) = p.pair(label.pair);
    let g = label.coset.word();
    let ta = engine.trace_shared(&a.multiply(&g));
    let tb = engine.trace_shared(&b.multiply(&g));
    &*ta - &*tb
}

/// Generating set of the ideal whose quotient is the skein algebra of the
/// presented group: `K` together with `P_{alpha g} - P_{beta g}` and
/// `P_{gamma g} - P_{delta g}` over the eight multipliers `g`.
pub fn ideal_generators(p: &Presentation) -> IdealGenerators {
    ideal_generators_with(&TraceEngine::new(), p)
}

pub fn ideal_generators_with(engine: &TraceEngine, p: &Presentation) -> IdealGenerators {
    let labels: Vec<Label> = Label::all().collect();
    let diffs = labels
        .par_iter()
        .map(|&label| (label, trace_difference(engine, p, label)))
        .collect();
    IdealGenerators {
        k: fricke_k().clone(),
        diffs,
    }
}

/// Generating polynomials of the Borromean rings ideal, in the order `K`
/// followed by the twelve nonzero differences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorromeanTable {
    pub k: Polynomial,
    pub q: Vec<(Label, Polynomial)>,
}

impl BorromeanTable {
    pub fn get(&self, label: Label) -> Option<&Polynomial> {
        self.q.iter().find(|(l, _)| *l == label).map(|(_, p)| p)
    }

    pub fn len(&self) -> usize {
        1 + self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

const BORROMEAN_K: &str =
    "x123^2 - (x1 x23 + x2 x13 + x3 x12 - x1 x2 x3) x123 + x1^2 + x2^2 + x3^2 \
    + x12^2 + x13^2 + x23^2 - x1 x2 x12 - x1 x3 x13 - x2 x3 x23 + x12 x13 x23 - 4";

const BORROMEAN_Q: [(RelatorPair, CosetWord, &str); 12] = {
    use CosetWord as C;
    use RelatorPair::{AlphaBeta as AB, GammaDelta as CD};
    [
        (
            AB,
            C::G1,
            "-2 x12 x23 + 2 x2 x123 - x1^2 x2 x123 + x1 x2 x12 x13 + x1 x2 x23 \
            + x1 x12 x123 - x12^2 x13 - x2^2 x13",
        ),
        (
            CD,
            C::G1,
            "2 x13 x23 - 2 x3 x123 + x1^2 x3 x123 - x1 x3 x12 x13 - x1 x3 x23 \
            - x1 x13 x123 + x12 x13^2 + x3^2 x12",
        ),
        (
            AB,
            C::G2,
            "-x1 x2 x12 x23 + x12^2 x23 + x1^2 x23 + x1 x2^2 x123 - x2 x12 x123 \
            - 2 x1 x123 - x1 x2 x13 + 2 x12 x13",
        ),
        (
            CD,
            C::G3,
            "x1 x3 x13 x23 - x13^2 x23 - x1^2 x23 - x1 x3^2 x123 + x3 x13 x123 \
            + 2 x1 x123 + x1 x3 x12 - 2 x12 x13",
        ),
        (
            AB,
            C::G1G2,
            "-x1^2 x123 + x2^2 x123 + x1 x12 x13 - x2 x12 x23 - 2 x2 x13 + 2 x1 x23",
        ),
        (
            CD,
            C::G1G2,
            "x1^3 + x1 x3^2 + x1 x13^2 - x1^2 x3 x13 - 4 x1 + x1^2 x2 x3 x123 - x1 x2 x13 x123 \
            - x1 x2 x3 x23 - x1 x3 x12 x123 + x12 x13 x123 - x1^2 x2 x12 + x1 x12^2 \
            + x3 x12 x23 - x2 x3 x123 + x2 x13 x23 + x1 x2^2",
        ),
        (
            AB,
            C::G1G3,
            "-4 x1 + x1^3 + x1 x12^2 + x12 x13 x123 + x1 x13^2 - x1^2 x2 x12 - x1 x2 x13 x123 \
            + x1 x2^2 + x2 x13 x23 - x1^2 x3 x13 - x3 x12^2 x13 + x2 x3 x123 \
            + x1 x2 x3 x12 x13 - x2^2 x3 x13 - x3 x12 x23 + x1 x3^2",
        ),
        (
            CD,
            C::G1G3,
            "x1^2 x123 - x3^2 x123 - x1^3 x23 + x3^3 x12 - x1 x12 x13 + x3 x13 x23 \
            + 2 x1 x23 - 2 x3 x12 - x1 x13^2 x23 + x3 x12 x13^2 + x1^2 x3 x12 - x1 x3^2 x23 \
            + x1^2 x3 x13 x23 - x1 x3^2 x12 x13",
        ),
        (
            AB,
            C::G2G3,
            "x2^3 + x2 x3^2 + x2 x23^2 - x2^2 x3 x23 - 4 x2 + x1 x2^2 x3 x123 - x1 x2 x23 x123 \
            - x1 x2 x3 x13 - x2 x3 x12 x123 + x12 x23 x123 - x1 x2^2 x12 + x2 x12^2 \
            + x3 x12 x13 - x1 x3 x123 + x1 x13 x23 + x1^2 x2",
        ),
        (
            CD,
            C::G2G3,
            "-x3^3 - x1^2 x3 - x3 x13^2 + x1 x3^2 x13 + 4 x3 - x1 x2 x3^2 x123 + x2 x3 x13 x123 \
            + x1 x2 x3 x12 + x1 x3 x23 x123 - x13 x23 x123 + x2 x3^2 x23 - x3 x23^2 \
            - x1 x12 x23 + x1 x2 x123 - x2 x12 x13 - x2^2 x3",
        ),
        (
            AB,
            C::G1G2G3,
            "-x2 x3 x12 x23 + x3^2 x12 + x1 x3 x23 - x2 x3 x13 - 4 x12 + x2^2 x12 \
            + x12^3 + x1^2 x12 - x1 x2 x12^2 - x1 x2 x123^2 + x12 x123^2 \
            + x1 x2 x3 x12 x123 - x3 x12^2 x123 + x2 x23 x123 - x1^2 x3 x123 + x1 x13 x123",
        ),
        (
            CD,
            C::G1G2G3,
            "(-x1 x23 + x3 x12) x13 x123 + (x1 x12 - x3 x23) x123 \
            + (x3^2 - x1^2) x12 x23 + (x23^2 - x12^2) x13 + (x1^2 x3 x23 - x1 x3^2 x12) x123 \
            + (x12^2 - x23^2) x1 x3 + (x1 x23 - x3 x12) x2",
        ),
    ]
};

/// The thirteen published generators of the Borromean rings ideal.
pub fn borromean_table() -> &'static BorromeanTable {
    static TABLE: OnceLock<BorromeanTable> = OnceLock::new();
    TABLE.get_or_init(|| BorromeanTable {
        k: BORROMEAN_K.parse().expect("built-in polynomial"),
        q: BORROMEAN_Q
            .iter()
            .map(|(pair, coset, text)| {
                (
                    Label::new(*pair, *coset),
                    text.parse().expect("built-in polynomial"),
                )
            })
            .collect(),
    })
}

/// What a trace difference is compared against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    /// A published polynomial `Q`.
    Q,
    /// The zero polynomial (labels absent from the table).
    Zero,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationEntry {
    pub label: Label,
    pub target: Target,
    pub passed: bool,
    /// `(P_{a g} - P_{b g} - target) / K` when the division is exact.
    pub witness_quotient: Option<Polynomial>,
    /// Nonzero remainder mod `K` on failure.
    pub remainder: Option<Polynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub entries: Vec<VerificationEntry>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Entry {
            label: String,
            target: Target,
            status: &'static str,
            #[serde(skip_serializing_if = "Option::is_none")]
            witness_quotient: Option<Vec<JsonTerm>>,
            #[serde(skip_serializing_if = "Option::is_none")]
            remainder: Option<Vec<JsonTerm>>,
        }
        #[derive(Serialize)]
        struct Report {
            entries: Vec<Entry>,
            all_passed: bool,
        }
        let report = Report {
            entries: self
                .entries
                .iter()
                .map(|e| Entry {
                    label: e.label.to_string(),
                    target: e.target,
                    status: if e.passed { "pass" } else { "fail" },
                    witness_quotient: e.witness_quotient.as_ref().map(Polynomial::to_json_terms),
                    remainder: e.remainder.as_ref().map(Polynomial::to_json_terms),
                })
                .collect(),
            all_passed: self.all_passed(),
        };
        serde_json::to_value(report).expect("report serializes")
    }
}

/// Checks every published `Q` against the engine's trace differences for the
/// Borromean presentation, modulo `K`; labels missing from the table must
/// vanish modulo `K`.
pub fn verify_borromean() -> VerificationReport {
    verify_table(
        &TraceEngine::new(),
        &borromean_presentation(),
        borromean_table(),
    )
}

/// [`verify_borromean`] against an arbitrary presentation and table.
pub fn verify_table(
    engine: &TraceEngine,
    presentation: &Presentation,
    table: &BorromeanTable,
) -> VerificationReport {
    let labels: Vec<Label> = Label::all().collect();
    let entries = labels
        .par_iter()
        .map(|&label| {
            let diff = trace_difference(engine, presentation, label);
            let (target, residual) = match table.get(label) {
                Some(q) => (Target::Q, &diff - q),
                None => (Target::Zero, diff),
            };
            let (quotient, remainder) = residual.div_rem_fricke();
            let passed = remainder.is_zero();
            VerificationEntry {
                label,
                target,
                passed,
                witness_quotient: passed.then_some(quotient),
                remainder: (!passed).then_some(remainder),
            }
        })
        .collect();
    VerificationReport { entries }
}

/// A relabelling of generator indices combined with a sign, acting on
/// polynomials by `p -> sign * p(x_S -> x_{perm(S)})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedIndexMap {
    /// `perm[i - 1]` is the image of index `i`.
    pub perm: [u8; 3],
    pub negate: bool,
}

impl SignedIndexMap {
    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        let mapped = p.substitute(&VarPerm::from_index_perm(self.perm).expect("valid permutation"));
        if self.negate {
            -mapped
        } else {
            mapped
        }
    }

    /// The five non-identity index permutations, each with both signs.
    pub fn candidates() -> Vec<SignedIndexMap> {
        const PERMS: [[u8; 3]; 5] = [[2, 1, 3], [3, 2, 1], [1, 3, 2], [2, 3, 1], [3, 1, 2]];
        PERMS
            .into_iter()
            .flat_map(|perm| {
                [false, true]
                    .into_iter()
                    .map(move |negate| SignedIndexMap { perm, negate })
            })
            .collect()
    }
}

/// Formats as e.g. `-(1 3 2)`: the sign, then the images of 1, 2, 3.
impl fmt::Display for SignedIndexMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.negate { "-" } else { "+" };
        let [a, b, c] = self.perm;
        write!(f, "{sign}({a} {b} {c})")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryCheck {
    pub source: Label,
    pub target: Label,
    pub map: SignedIndexMap,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryFinding {
    pub source: Label,
    pub target: Label,
    /// Every candidate map sending the source polynomial exactly to the
    /// target polynomial.
    pub maps: Vec<SignedIndexMap>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    /// Coefficient-exact relations that must hold.
    pub required: Vec<SymmetryCheck>,
    /// The 2-3 index exchange is an involution on every table entry.
    pub swap23_involution: bool,
    /// Maps fixing a single polynomial.
    pub self_symmetries: Vec<SymmetryFinding>,
    /// Maps between members of the triple `cd,g1g2`, `ab,g2g3`, `cd,g2g3`.
    pub triple: Vec<SymmetryFinding>,
}

impl SymmetryReport {
    pub fn passed(&self) -> bool {
        self.swap23_involution && self.required.iter().all(|c| c.holds)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let check = |c: &SymmetryCheck| {
            serde_json::json!({
                "source": c.source.to_string(),
                "target": c.target.to_string(),
                "map": c.map.to_string(),
                "holds": c.holds,
            })
        };
        let finding = |f: &SymmetryFinding| {
            serde_json::json!({
                "source": f.source.to_string(),
                "target": f.target.to_string(),
                "maps": f.maps.iter().map(ToString::to_string).collect::<Vec<_>>(),
            })
        };
        serde_json::json!({
            "required": self.required.iter().map(check).collect::<Vec<_>>(),
            "swap23_involution": self.swap23_involution,
            "self_symmetries": self.self_symmetries.iter().map(finding).collect::<Vec<_>>(),
            "triple": self.triple.iter().map(finding).collect::<Vec<_>>(),
            "passed": self.passed(),
        })
    }
}

/// Index-exchange symmetries among the published polynomials.
pub fn check_symmetries() -> SymmetryReport {
    check_table_symmetries(borromean_table())
}

pub fn check_table_symmetries(table: &BorromeanTable) -> SymmetryReport {
    use CosetWord as C;
    use RelatorPair::{AlphaBeta as AB, GammaDelta as CD};

    let zero = Polynomial::zero();
    let get = |l: Label| table.get(l).unwrap_or(&zero);
    let neg_swap23 = SignedIndexMap {
        perm: [1, 3, 2],
        negate: true,
    };

    let required = [
        (Label::new(AB, C::G1), Label::new(CD, C::G1)),
        (Label::new(AB, C::G2), Label::new(CD, C::G3)),
    ]
    .into_iter()
    .map(|(source, target)| SymmetryCheck {
        source,
        target,
        map: neg_swap23,
        holds: neg_swap23.apply(get(source)) == *get(target),
    })
    .collect();

    let swap = VarPerm::swap23();
    let swap23_involution = std::iter::once(&table.k)
        .chain(table.q.iter().map(|(_, p)| p))
        .all(|p| p.substitute(&swap).substitute(&swap) == *p);

    let find = |source: Label, target: Label| SymmetryFinding {
        source,
        target,
        maps: SignedIndexMap::candidates()
            .into_iter()
            .filter(|m| m.apply(get(source)) == *get(target))
            .collect(),
    };

    let self_symmetries = [
        Label::new(AB, C::G1G2),
        Label::new(CD, C::G1G3),
        Label::new(CD, C::G1G2G3),
    ]
    .into_iter()
    .map(|l| find(l, l))
    .collect();

    let triple_labels = [
        Label::new(CD, C::G1G2),
        Label::new(AB, C::G2G3),
        Label::new(CD, C::G2G3),
    ];
    let mut triple = Vec::new();
    for (i, &a) in triple_labels.iter().enumerate() {
        for &b in &triple_labels[i + 1..] {
            triple.push(find(a, b));
        }
    }

    SymmetryReport {
        required,
        swap23_involution,
        self_symmetries,
        triple,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trace::trace_poly;

    #[test]
    fn coset_words_in_binary_order() {
        let names: Vec<String> = CosetWord::all().map(|c| c.to_string()).collect();
        assert_eq!(
            names,
            ["e", "g3", "g2", "g2g3", "g1", "g1g3", "g1g2", "g1g2g3"]
        );
        assert_eq!(CosetWord::G1G3.word().to_string(), "g1*g3");
        assert!(CosetWord::E.word().is_identity());
        assert_eq!(Label::all().count(), 16);
    }

    #[test]
    fn borromean_words() {
        let b = borromean_presentation();
        assert_eq!(b.alpha.pairs(), [(3, 1), (2, -1), (1, 1), (2, 1), (1, -1)]);
        assert_eq!(b.delta.pairs(), [(1, -1), (3, 1), (1, 1), (3, -1), (2, 1)]);
        for w in [&b.alpha, &b.beta, &b.gamma, &b.delta] {
            assert_eq!(w.len(), 5);
        }
    }

    #[test]
    fn presentation_file_round_trip() {
        let b = borromean_presentation();
        assert_eq!(parse_presentation(&b.to_string()).unwrap(), b);
    }

    #[test]
    fn presentation_errors() {
        let one = "generators: g1 g2 g3\nrelation: g1 = g2\n";
        match parse_presentation(one) {
            Err(Error::Presentation(msg)) => assert!(msg.contains("expected 2 relations"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
        let alphabet = "generators: a b c\nrelation: e = e\nrelation: e = e\n";
        assert!(matches!(
            parse_presentation(alphabet),
            Err(Error::Presentation(_))
        ));
        let four = "generators: g1 g2 g3 g4\nrelation: e = e\nrelation: e = e\n";
        assert!(matches!(
            parse_presentation(four),
            Err(Error::Presentation(_))
        ));
        let bad_word = "generators: g1 g2 g3\nrelation: g1*g4 = e\nrelation: e = e\n";
        match parse_presentation(bad_word) {
            Err(Error::Presentation(msg)) => assert!(msg.contains("line 2"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
        let no_eq = "generators: g1 g2 g3\nrelation: g1\nrelation: e = e\n";
        assert!(parse_presentation(no_eq).is_err());
    }

    #[test]
    fn trivial_relators() {
        let text = "# free group\ngenerators: g1 g2 g3\n\nrelation: e = e\nrelation: e = e\n";
        let p = parse_presentation(text).unwrap();
        let gens = ideal_generators(&p);
        assert_eq!(gens.k, *fricke_k());
        assert_eq!(gens.diffs.len(), 16);
        assert!(gens.diffs.iter().all(|(_, d)| d.is_zero()));
    }

    #[test]
    fn generator_ordering_and_invariant() {
        let b = borromean_presentation();
        let gens = ideal_generators(&b);
        let labels: Vec<Label> = gens.diffs.iter().map(|(l, _)| *l).collect();
        assert_eq!(labels, Label::all().collect::<Vec<_>>());
        for (label, diff) in &gens.diffs {
            let (a, bw) = b.pair(label.pair);
            let g = label.coset.word();
            assert_eq!(
                *diff,
                &trace_poly(&a.multiply(&g)) - &trace_poly(&bw.multiply(&g))
            );
        }
        assert_eq!(ideal_generators(&b), gens);
    }

    #[test]
    fn known_vanishing_differences() {
        let gens = ideal_generators(&borromean_presentation());
        for label in [
            Label::new(RelatorPair::GammaDelta, CosetWord::G2),
            Label::new(RelatorPair::AlphaBeta, CosetWord::G3),
            Label::new(RelatorPair::AlphaBeta, CosetWord::E),
            Label::new(RelatorPair::GammaDelta, CosetWord::E),
        ] {
            let (_, d) = gens.diffs.iter().find(|(l, _)| *l == label).unwrap();
            assert!(d.in_fricke_ideal(), "{label}");
        }
    }

    #[test]
    fn table_shape() {
        let t = borromean_table();
        assert_eq!(t.len(), 13);
        assert_eq!(t.k, *fricke_k());
        let q = t
            .get(Label::new(RelatorPair::AlphaBeta, CosetWord::G1G2))
            .unwrap();
        let expected: Polynomial =
            "-x1^2 x123 + x2^2 x123 + x1 x12 x13 - x2 x12 x23 - 2 x2 x13 + 2 x1 x23"
                .parse()
                .unwrap();
        assert_eq!(*q, expected);
        let q1 = t
            .get(Label::new(RelatorPair::AlphaBeta, CosetWord::G1))
            .unwrap();
        assert_eq!(q1.num_terms(), 8);
        assert!(t
            .get(Label::new(RelatorPair::AlphaBeta, CosetWord::G3))
            .is_none());
    }

    #[test]
    fn borromean_verification_passes() {
        let report = verify_borromean();
        assert_eq!(report.entries.len(), 16);
        for e in &report.entries {
            assert!(e.passed, "{} failed: remainder {:?}", e.label, e.remainder);
        }
        let zero_targets: Vec<String> = report
            .entries
            .iter()
            .filter(|e| e.target == Target::Zero)
            .map(|e| e.label.to_string())
            .collect();
        assert_eq!(zero_targets, ["ab,e", "ab,g3", "cd,e", "cd,g2"]);
    }

    #[test]
    fn corrupted_table_is_caught() {
        let mut table = borromean_table().clone();
        let bad = Label::new(RelatorPair::GammaDelta, CosetWord::G1G3);
        for (l, p) in table.q.iter_mut() {
            if *l == bad {
                *p += &Polynomial::var(crate::Var::X2);
            }
        }
        let report = verify_table(&TraceEngine::new(), &borromean_presentation(), &table);
        let failed: Vec<Label> = report.failures().map(|e| e.label).collect();
        assert_eq!(failed, [bad]);
        assert!(!report.all_passed());
        let json = report.to_json_value();
        assert_eq!(json["all_passed"], false);
    }

    #[test]
    fn required_symmetries_hold() {
        let report = check_symmetries();
        assert!(report.swap23_involution);
        for c in &report.required {
            assert!(c.holds, "{} -> {}", c.source, c.target);
        }
        assert!(report.passed());
        let found: Vec<String> = report
            .self_symmetries
            .iter()
            .map(|f| {
                f.maps
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        assert_eq!(found, ["-(2 1 3)", "-(3 2 1)", "-(3 2 1)"]);
        assert!(report.triple.iter().all(|f| !f.maps.is_empty()));
    }
}
