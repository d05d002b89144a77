//! Words in the free group on `g1`, `g2`, `g3`.
//!
//! A [`Word`] is always freely reduced: adjacent syllables carry distinct
//! generators and no syllable has exponent zero. The empty word is the
//! identity `e`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A maximal power `g_i^m` inside a reduced word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Syllable {
    generator: u8,
    exponent: i64,
}

impl Syllable {
    /// Panics unless `generator` is 1, 2 or 3 and `exponent` is nonzero and
    /// not `i64::MIN`.
    pub fn new(generator: u8, exponent: i64) -> Self {
        assert!(
            (1..=3).contains(&generator),
            "generator index must be 1, 2 or 3"
        );
        assert!(exponent != 0, "syllable exponent must be nonzero");
        assert!(exponent != i64::MIN, "syllable exponent must be invertible");
        Syllable {
            generator,
            exponent,
        }
    }

    pub fn generator(&self) -> u8 {
        self.generator
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn inverse(&self) -> Self {
        Syllable {
            generator: self.generator,
            exponent: -self.exponent,
        }
    }

    // Positive exponents sort before negative ones, then by magnitude:
    // 1 < 2 < 3 < ... < -1 < -2 < ...
    fn exponent_rank(&self) -> (bool, u64) {
        (self.exponent < 0, self.exponent.unsigned_abs())
    }
}

/// Total order used for canonical trace keys: generator index first, then
/// exponent with positive powers ahead of negative ones.
impl Ord for Syllable {
    fn cmp(&self, other: &Self) -> Ordering {
        self.generator
            .cmp(&other.generator)
            .then_with(|| self.exponent_rank().cmp(&other.exponent_rank()))
    }
}

impl PartialOrd for Syllable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A freely reduced word. Ordering is lexicographic over syllables with the
/// shorter word first on a common prefix.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    syllables: Vec<Syllable>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(index: u8) -> Self {
        Word {
            syllables: vec![Syllable::new(index, 1)],
        }
    }

    pub fn power(index: u8, exponent: i64) -> Self {
        if exponent == 0 {
            return Word::identity();
        }
        Word {
            syllables: vec![Syllable::new(index, exponent)],
        }
    }

    /// Builds a word from raw `(generator, exponent)` pairs, freely reducing.
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u8, i64)>,
    {
        let mut reducer = Reducer::default();
        for (generator, exponent) in pairs {
            if !(1..=3).contains(&generator) {
                return Err(Error::InvalidArgument(format!(
                    "generator index {generator} is not one of 1, 2, 3"
                )));
            }
            reducer.push(generator, exponent)?;
        }
        Ok(reducer.finish())
    }

    /// A contiguous piece of a reduced word is itself reduced.
    pub(crate) fn from_reduced_slice(s: &[Syllable]) -> Word {
        Word {
            syllables: s.to_vec(),
        }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    /// Syllables as `(generator, exponent)` pairs.
    pub fn pairs(&self) -> Vec<(u8, i64)> {
        self.syllables
            .iter()
            .map(|s| (s.generator, s.exponent))
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of syllables.
    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Sum of absolute exponents, i.e. the length as a word in the letters.
    pub fn weight(&self) -> u64 {
        self.syllables
            .iter()
            .map(|s| s.exponent.unsigned_abs())
            .sum()
    }

    pub fn checked_multiply(&self, other: &Word) -> Result<Word> {
        let mut reducer = Reducer {
            stack: self.syllables.clone(),
        };
        for s in &other.syllables {
            reducer.push(s.generator, s.exponent)?;
        }
        Ok(reducer.finish())
    }

    /// Group product. Panics if two merged exponents overflow `i64`.
    pub fn multiply(&self, other: &Word) -> Word {
        self.checked_multiply(other)
            .expect("exponent overflow in word product")
    }

    pub fn invert(&self) -> Word {
        Word {
            syllables: self.syllables.iter().rev().map(Syllable::inverse).collect(),
        }
    }

    /// Strips conjugating prefix/suffix pairs and merges first and last
    /// syllables until the word is cyclically reduced.
    pub fn cyclically_reduced(&self) -> Word {
        let mut s = self.syllables.clone();
        let mut start = 0;
        while s.len() - start >= 2 {
            let first = s[start];
            let last = *s.last().unwrap();
            if first.generator != last.generator {
                break;
            }
            s.pop();
            let merged = first
                .exponent
                .checked_add(last.exponent)
                .filter(|e| *e != i64::MIN)
                .expect("exponent overflow in cyclic reduction");
            if merged == 0 {
                start += 1;
            } else {
                s[start].exponent = merged;
            }
        }
        Word {
            syllables: s.split_off(start),
        }
    }

    /// Canonical representative of the set of words conjugate to `self` or
    /// to its inverse: the least cyclic rotation of the cyclic reduction or of
    /// its inverse. Traces are constant on these classes.
    pub fn canonical_trace_key(&self) -> Word {
        let reduced = self.cyclically_reduced();
        let inverse = reduced.invert();
        let n = reduced.len();
        if n <= 1 {
            return reduced.min(inverse);
        }
        let mut best: Option<Vec<Syllable>> = None;
        for base in [&reduced.syllables, &inverse.syllables] {
            for shift in 0..n {
                let candidate = base[shift..].iter().chain(&base[..shift]);
                let better = match &best {
                    None => true,
                    Some(b) => candidate.clone().cmp(b.iter()) == Ordering::Less,
                };
                if better {
                    best = Some(candidate.copied().collect());
                }
            }
        }
        Word {
            syllables: best.unwrap_or_default(),
        }
    }
}

#[derive(Default)]
struct Reducer {
    stack: Vec<Syllable>,
}

impl Reducer {
    fn push(&mut self, generator: u8, exponent: i64) -> Result<()> {
        if exponent == 0 {
            return Ok(());
        }
        if exponent == i64::MIN {
            return Err(Error::ExponentOverflow);
        }
        match self.stack.last_mut() {
            Some(top) if top.generator == generator => {
                let merged = top
                    .exponent
                    .checked_add(exponent)
                    .filter(|e| *e != i64::MIN)
                    .ok_or(Error::ExponentOverflow)?;
                if merged == 0 {
                    self.stack.pop();
                } else {
                    top.exponent = merged;
                }
            }
            _ => self.stack.push(Syllable {
                generator,
                exponent,
            }),
        }
        Ok(())
    }

    fn finish(self) -> Word {
        Word {
            syllables: self.stack,
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("e");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "g{}", s.generator)?;
            if s.exponent != 1 {
                write!(f, "^{}", s.exponent)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

/// Parses `e` or a product of terms `g1`, `g2^-3`, ... separated by `*` or
/// whitespace. The result is freely reduced.
pub fn parse_word(text: &str) -> Result<Word> {
    let bytes = text.as_bytes();
    let trimmed = text.trim();
    if trimmed == "e" {
        return Ok(Word::identity());
    }
    if trimmed.is_empty() {
        return Err(Error::syntax(
            text.len() + 1,
            "empty word (use `e` for the identity)",
        ));
    }

    let mut reducer = Reducer::default();
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };

    skip_ws(&mut pos);
    loop {
        // term := ("g1"|"g2"|"g3") ("^" signed_integer)?
        if bytes.get(pos) != Some(&b'g') {
            return Err(Error::syntax(pos + 1, "expected generator g1, g2 or g3"));
        }
        let generator = match bytes.get(pos + 1) {
            Some(d @ b'1'..=b'3') if !bytes.get(pos + 2).is_some_and(u8::is_ascii_digit) => {
                d - b'0'
            }
            _ => {
                return Err(Error::syntax(
                    pos + 1,
                    "unknown generator (expected g1, g2 or g3)",
                ))
            }
        };
        pos += 2;

        let mut exponent = 1i64;
        if bytes.get(pos) == Some(&b'^') {
            pos += 1;
            let start = pos;
            if matches!(bytes.get(pos), Some(b'-' | b'+')) {
                pos += 1;
            }
            let digits_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if pos == digits_start {
                return Err(Error::syntax(
                    pos + 1,
                    "expected integer exponent after `^`",
                ));
            }
            exponent = text[start..pos]
                .parse::<i64>()
                .ok()
                .filter(|e| *e != i64::MIN)
                .ok_or(Error::ExponentRange { column: start + 1 })?;
        }
        reducer.push(generator, exponent)?;

        let before_sep = pos;
        skip_ws(&mut pos);
        if pos == bytes.len() {
            break;
        }
        if bytes[pos] == b'*' {
            pos += 1;
            skip_ws(&mut pos);
        } else if pos == before_sep {
            return Err(Error::syntax(
                pos + 1,
                "expected `*` or whitespace between terms",
            ));
        }
    }
    Ok(reducer.finish())
}
