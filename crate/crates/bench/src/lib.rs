//! Benchmark inputs shared by the criterion targets.

use skein_core::{borromean_presentation, CosetWord, Word};

/// The 32 words `a g` over both relator pairs of the Borromean presentation.
pub fn borromean_words() -> Vec<Word> {
    let p = borromean_presentation();
    let mut out = Vec::new();
    for w in [&p.alpha, &p.beta, &p.gamma, &p.delta] {
        for g in CosetWord::all() {
            out.push(w.multiply(&g.word()));
        }
    }
    out
}
