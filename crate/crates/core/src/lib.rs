//! Exact SL2 trace polynomials for words in the free group of rank three,
//! the defining ideal of the skein algebra of a three-generator,
//! two-relator group, and an exact-rational SL2 matrix oracle.

pub mod error;
pub mod ideal;
pub mod oracle;
pub mod poly;
pub mod trace;
pub mod words;

pub use error::{Error, Result};
pub use ideal::{
    borromean_presentation, borromean_table, check_symmetries, ideal_generators,
    parse_presentation, verify_borromean, CosetWord, IdealGenerators, Label, Presentation,
    RelatorPair, SymmetryReport, VerificationReport,
};
pub use oracle::{
    check_word, fuzz, random_rep, trace_point, word_matrix, FuzzReport, Mat2, SL2Rep,
};
pub use poly::{fricke_k, parse_poly, Monomial, Polynomial, Var, VarPerm};
pub use trace::{trace_nf, trace_poly, SplitRule, TraceEngine};
pub use words::{parse_word, Syllable, Word};
