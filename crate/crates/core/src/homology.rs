//! Homological invariants: projective and injective dimension, global and
//! dominant dimension, torsionless modules and the higher Auslander test.
//!
//! `pd` is computed by plain syzygy iteration and is the reference every
//! formula-based path in the crate is checked against.

use std::fmt;

use crate::algebra::{KupischSeries, MaybeModule, Module};

/// A homological dimension. `NegInfinity` only occurs for the zero module,
/// `Infinity` only for dominant dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtDim {
    NegInfinity,
    Finite(usize),
    Infinity,
}

impl ExtDim {
    pub fn finite(self) -> Option<usize> {
        match self {
            ExtDim::Finite(k) => Some(k),
            _ => None,
        }
    }
}

impl fmt::Display for ExtDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtDim::NegInfinity => f.write_str("-inf"),
            ExtDim::Finite(k) => write!(f, "{k}"),
            ExtDim::Infinity => f.write_str("inf"),
        }
    }
}

/// Projective dimension by syzygy iteration.
pub fn pd(a: &KupischSeries, m: &MaybeModule) -> ExtDim {
    let Some(mut x) = *m else {
        return ExtDim::NegInfinity;
    };
    let mut k = 0;
    while let Some(next) = a.syzygy(&x) {
        x = next;
        k += 1;
    }
    ExtDim::Finite(k)
}

/// Projective dimension of a non-zero module as a plain number.
pub fn pd_of(a: &KupischSeries, m: &Module) -> usize {
    pd(a, &Some(*m)).finite().expect("non-zero module has finite pd")
}

/// Injective dimension by cosyzygy iteration.
pub fn id(a: &KupischSeries, m: &MaybeModule) -> ExtDim {
    let Some(mut x) = *m else {
        return ExtDim::NegInfinity;
    };
    let mut k = 0;
    while let Some(next) = a.cosyzygy(&x) {
        x = next;
        k += 1;
    }
    ExtDim::Finite(k)
}

pub fn global_dimension(a: &KupischSeries) -> ExtDim {
    (1..=a.rank())
        .map(|t| pd(a, &Some(a.simple(t))))
        .max()
        .unwrap_or(ExtDim::Finite(0))
}

/// `M` is a submodule of a projective: some projective has the same socle
/// and is at least as long.
pub fn is_torsionless(a: &KupischSeries, m: &Module) -> bool {
    let (t, l) = (m.top(), m.len());
    (t..=a.rank()).any(|u| a.proj_len(u) + t == l + u)
}

/// Number of leading projective terms in the minimal injective
/// coresolution of `m`; `None` if every term is projective.
fn projective_coresolution_prefix(a: &KupischSeries, m: &Module) -> Option<usize> {
    let mut x = *m;
    let mut k = 0;
    loop {
        let env = a.injective_envelope(&x);
        if !a.is_projective(&env) {
            return Some(k);
        }
        k += 1;
        {
            let next = a.cosyzygy(&x)?;
            x = next
        }
    }
}

pub fn dominant_dimension(a: &KupischSeries) -> ExtDim {
    (1..=a.rank())
        .map(|t| a.projective(t))
        .filter_map(|p| projective_coresolution_prefix(a, &p))
        .min()
        .map_or(ExtDim::Infinity, ExtDim::Finite)
}

/// Whether global and dominant dimension agree on a non-semisimple algebra;
/// returns the common value `d` as well.
pub fn is_higher_auslander(a: &KupischSeries) -> (bool, Option<usize>) {
    if a.rank() < 2 {
        return (false, None);
    }
    let g = global_dimension(a);
    if g == dominant_dimension(a) {
        (true, g.finite())
    } else {
        (false, None)
    }
}

pub fn is_pd_controlled(a: &KupischSeries, m: &Module) -> bool {
    let p = pd_of(a, m);
    m.subfactors().iter().all(|z| pd_of(a, z) <= p)
}

pub fn is_odd(a: &KupischSeries, m: &Module) -> bool {
    pd_of(a, m) % 2 == 1
}

pub fn is_even(a: &KupischSeries, m: &Module) -> bool {
    !is_odd(a, m)
}

/// Projective dimensions of all indecomposables of one algebra, filled by
/// the recursion `pd M = 1 + pd ΩM`. Used on hot paths; agrees with [`pd`].
#[derive(Debug, Clone)]
pub struct PdTable {
    rows: Vec<Vec<usize>>,
}

impl PdTable {
    pub fn new(a: &KupischSeries) -> Self {
        let mut rows: Vec<Vec<usize>> = Vec::with_capacity(a.rank());
        for t in 1..=a.rank() {
            let c = a.proj_len(t);
            let row = (1..=c)
                .map(|l| if l == c { 0 } else { 1 + rows[t - l - 1][c - l - 1] })
                .collect();
            rows.push(row);
        }
        PdTable { rows }
    }

    pub fn get(&self, m: &Module) -> usize {
        self.rows[m.top() - 1][m.len() - 1]
    }

    pub fn simple(&self, t: usize) -> usize {
        self.rows[t - 1][0]
    }

    /// pds of `S_1, ..., S_n`.
    pub fn simples(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0]).collect()
    }
}
