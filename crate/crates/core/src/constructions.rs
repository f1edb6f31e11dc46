//! Constructions: the ascent algebra of a projective characteristic
//! sequence, `d`-closedness, cliff extensions, the partial `d`-closure and
//! the algebras `H_d(c_1, ..., c_u)`.

use thiserror::Error;

use crate::algebra::{KupischSeries, MaybeModule, Module};
use crate::charseq::is_projective_char_seq;
use crate::homology::{global_dimension, is_torsionless, PdTable};
use crate::rotations::lambda_rot;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("sequence is not a projective characteristic sequence")]
    NotProjective,
    #[error("closure did not stabilize within {0} extensions")]
    IterationCapExceeded(usize),
    #[error("bad sequence: {0}")]
    BadSequence(String),
}

/// `Σ z_i + v` where `v` is the (0-based) position of the zero.
pub fn epsilon(z: &[i64]) -> Result<i64, ConstructionError> {
    if !is_projective_char_seq(z) {
        return Err(ConstructionError::NotProjective);
    }
    let v = z.iter().position(|&x| x == 0).unwrap() as i64;
    Ok(z.iter().sum::<i64>() + v)
}

/// The ascending algebra whose last projective has characteristic `z`.
///
/// Follows `λ` down to `(0)`; on the way back up each step is a one-point
/// extension adding a projective of length `|z|`.
pub fn ascent_algebra(z: &[i64]) -> Result<KupischSeries, ConstructionError> {
    if !is_projective_char_seq(z) {
        return Err(ConstructionError::NotProjective);
    }
    let mut lengths = vec![z.len()];
    let mut cur = z.to_vec();
    while cur.len() > 1 {
        cur = lambda_rot(&cur).map_err(|_| ConstructionError::NotProjective)?;
        lengths.push(cur.len());
    }
    lengths.reverse();
    Ok(KupischSeries::new(lengths).expect("ascent recursion yields a valid series"))
}

fn ray_reaches(table: &PdTable, a: &KupischSeries, s: usize, d: usize) -> bool {
    a.ray(s).iter().any(|m| table.get(m) >= d)
}

fn d_closed_with(table: &PdTable, a: &KupischSeries, s: usize, d: usize) -> bool {
    is_torsionless(a, &a.simple(s)) || ray_reaches(table, a, s, d)
}

/// `S_s` is torsionless or the socle of a module of pd at least `d`.
pub fn is_d_closed_simple(a: &KupischSeries, s: usize, d: usize) -> bool {
    d_closed_with(&PdTable::new(a), a, s, d)
}

fn closed_flags(a: &KupischSeries, d: usize) -> Vec<bool> {
    let table = PdTable::new(a);
    (1..=a.rank()).map(|s| d_closed_with(&table, a, s, d)).collect()
}

fn omega_factors(a: &KupischSeries) -> std::ops::RangeInclusive<usize> {
    a.projective(a.omega()).socle_index()..=a.omega()
}

pub fn is_d_closed(a: &KupischSeries, d: usize) -> bool {
    closed_flags(a, d).into_iter().all(|x| x)
}

/// Every simple that is not `d`-closed is a composition factor of `P(ω)`.
pub fn is_almost_d_closed(a: &KupischSeries, d: usize) -> bool {
    let flags = closed_flags(a, d);
    let factors = omega_factors(a);
    (1..=a.rank()).all(|s| flags[s - 1] || factors.contains(&s))
}

/// Every composition factor of `P(ω)` is `d`-closed.
pub fn is_partially_d_closed(a: &KupischSeries, d: usize) -> bool {
    let flags = closed_flags(a, d);
    omega_factors(a).all(|s| flags[s - 1])
}

/// `P(ω)/U` with `U` the largest submodule of `P(ω)` all of whose
/// composition factors are `d`-closed.
pub fn d_cliff_module(a: &KupischSeries, d: usize) -> MaybeModule {
    let flags = closed_flags(a, d);
    let p = a.projective(a.omega());
    let u = omega_factors(a).take_while(|&s| flags[s - 1]).count();
    (u < p.len()).then(|| a.module(p.top(), p.len() - u).unwrap())
}

/// One-point extension by the `d`-cliff module, or `A` itself.
pub fn cliff_extension(a: &KupischSeries, d: usize) -> KupischSeries {
    match d_cliff_module(a, d) {
        Some(y) => a.one_point_extension(&y).expect("cliff module has top ω"),
        None => a.clone(),
    }
}

/// One step of a closure: the cliff module and the length appended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionStep {
    pub cliff: Module,
    pub appended: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Closure {
    pub series: KupischSeries,
    pub trace: Vec<ExtensionStep>,
    /// `d` was smaller than the global dimension of the input.
    pub below_gldim: bool,
}

impl Closure {
    pub fn iterations(&self) -> usize {
        self.trace.len()
    }
}

/// Iterates [`cliff_extension`] until it stabilizes.
pub fn partial_d_closure(a: &KupischSeries, d: usize) -> Result<Closure, ConstructionError> {
    let cap = a.rank() * d * a.height() + 16;
    let below_gldim = global_dimension(a).finite().unwrap_or(0) > d;
    let mut cur = a.clone();
    let mut trace = Vec::new();
    while let Some(y) = d_cliff_module(&cur, d) {
        if trace.len() == cap {
            return Err(ConstructionError::IterationCapExceeded(cap));
        }
        cur = cur.one_point_extension(&y).expect("cliff module has top ω");
        trace.push(ExtensionStep { cliff: y, appended: y.len() + 1 });
    }
    Ok(Closure { series: cur, trace, below_gldim })
}

/// `|P(ω_A)| ≥ |P(τ⁻ω_A)| ≥ ...` inside `B`, where `A` is spanned by the
/// first `n_a` simples of `B`.
pub fn is_descending_extension(b: &KupischSeries, n_a: usize) -> bool {
    b.entries()[n_a.max(1) - 1..].windows(2).all(|w| w[0] >= w[1])
}

/// Checks the parameter domain of [`h_algebra`].
pub fn check_h_sequence(d: usize, cs: &[usize]) -> Result<(), ConstructionError> {
    let bad = |msg: &str| Err(ConstructionError::BadSequence(msg.to_string()));
    if d == 0 {
        return bad("d must be positive");
    }
    if cs.iter().any(|&c| c % 2 == 0) {
        return bad("entries must be odd");
    }
    if cs.iter().any(|&c| c > d) {
        return bad("entries must be at most d");
    }
    if d % 2 == 1 {
        if cs.windows(2).any(|w| w[0] < w[1]) {
            return bad("for odd d the sequence must be weakly decreasing");
        }
    } else if cs.windows(2).any(|w| w[0] >= w[1]) {
        return bad("for even d the sequence must be strictly increasing");
    }
    Ok(())
}

/// The characteristic sequence the construction of `H_d(cs)` starts from:
/// `(0, c_1, ..., c_u, 1)` for odd `d`, `(c_1, ..., c_u, 0, 1)` for even `d`.
pub fn h_seed(d: usize, cs: &[usize]) -> Vec<i64> {
    let cs = cs.iter().map(|&c| c as i64);
    if d % 2 == 1 {
        std::iter::once(0).chain(cs).chain([1]).collect()
    } else {
        cs.chain([0, 1]).collect()
    }
}

/// `H_d(cs)` together with the closure trace.
pub fn h_algebra_closure(d: usize, cs: &[usize]) -> Result<Closure, ConstructionError> {
    check_h_sequence(d, cs)?;
    let a = ascent_algebra(&h_seed(d, cs))?;
    partial_d_closure(&a, d)
}

/// `H_d(cs)`: the partial `d`-closure of the ascent algebra of [`h_seed`].
pub fn h_algebra(d: usize, cs: &[usize]) -> Result<KupischSeries, ConstructionError> {
    h_algebra_closure(d, cs).map(|c| c.series)
}
