//! Homological combinatorics of linear Nakayama algebras given by their
//! Kupisch series: dimensions, characteristic sequences, rotations, the
//! closure constructions and the classification of concave higher
//! Auslander algebras.

pub mod algebra;
pub mod charseq;
pub mod classify;
pub mod cli;
pub mod constructions;
pub mod homology;
pub mod render;
pub mod rotations;
