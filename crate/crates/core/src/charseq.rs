//! Characteristic sequences, memory piles and the shape predicates on
//! characteristic sequences.
//!
//! The characteristic of an indecomposable `M` with composition factors
//! `F_1 = soc M, ..., F_m = top M` is the sequence whose `i`-th entry is
//! `pd F_i` when `F_i` is odd and `pd M` when `F_i` is even. It has at most
//! one even entry, and it is `0` exactly when `M` is projective.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{KupischSeries, MaybeModule, Module};
use crate::homology::{pd_of, PdTable};
use crate::rotations::{is_even, rho, rho_pow};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error("not a characteristic sequence: {0}")]
    InvalidCharSeq(CharSeq),
    #[error("sequence {0} is in the wrong projectivity class")]
    WrongClass(CharSeq),
    #[error("sequence is too short")]
    TooShort,
    #[error("interval [{i}, {j}] out of range for length {len}")]
    OutOfRange { i: usize, j: usize, len: usize },
    #[error("summit count must be positive")]
    NoSummits,
    #[error("cannot parse {0:?}")]
    Parse(String),
}

/// An integer sequence printed as `(a,b,c)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CharSeq(pub Vec<i64>);

impl CharSeq {
    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

impl From<&[i64]> for CharSeq {
    fn from(z: &[i64]) -> Self {
        CharSeq(z.to_vec())
    }
}

impl From<Vec<i64>> for CharSeq {
    fn from(z: Vec<i64>) -> Self {
        CharSeq(z)
    }
}

impl fmt::Display for CharSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for CharSeq {
    type Err = CharError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if inner.is_empty() {
            return Ok(CharSeq::default());
        }
        inner
            .split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|_| CharError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()
            .map(CharSeq)
    }
}

/// Non-negative entries, at most one of them even.
pub fn is_char_seq(z: &[i64]) -> bool {
    z.iter().all(|&x| x >= 0) && z.iter().filter(|&&x| is_even(x)).count() <= 1
}

/// A characteristic sequence whose even entry is a `0`.
pub fn is_projective_char_seq(z: &[i64]) -> bool {
    is_char_seq(z) && z.contains(&0)
}

pub fn is_all_odd(z: &[i64]) -> bool {
    z.iter().all(|&x| !is_even(x))
}

/// Position (0-based) of the even entry.
pub fn even_position(z: &[i64]) -> Option<usize> {
    z.iter().position(|&x| is_even(x))
}

/// `char M`; empty for the zero module.
pub fn char_of(a: &KupischSeries, m: &MaybeModule) -> CharSeq {
    let Some(m) = m else {
        return CharSeq::default();
    };
    let whole = pd_of(a, m) as i64;
    let entries = m
        .composition_factors()
        .into_iter()
        .map(|t| {
            let p = pd_of(a, &a.simple(t)) as i64;
            if is_even(p) {
                whole
            } else {
                p
            }
        })
        .collect();
    CharSeq(entries)
}

/// `char M` read off a precomputed pd table.
pub fn char_from_table(table: &PdTable, m: &Module) -> Vec<i64> {
    let whole = table.get(m) as i64;
    (m.socle_index()..=m.top())
        .map(|t| {
            let p = table.simple(t) as i64;
            if is_even(p) {
                whole
            } else {
                p
            }
        })
        .collect()
}

/// `Y(z)`: the characteristic of `P/soc P` computed from `char P`.
pub fn y_map(z: &[i64]) -> Result<Vec<i64>, CharError> {
    if !is_projective_char_seq(z) {
        return Err(CharError::WrongClass(z.into()));
    }
    if z.len() < 2 {
        return Err(CharError::TooShort);
    }
    if z[0] == 0 {
        return Ok(z[1..].to_vec());
    }
    let mut out = z[1..].to_vec();
    let v = even_position(&out).expect("projective sequence has a zero");
    out[v] = z[0] + 1;
    Ok(out)
}

/// `P(y)`: inverse of [`y_map`] on non-projective sequences.
pub fn p_map(y: &[i64]) -> Result<Vec<i64>, CharError> {
    if !is_char_seq(y) || is_projective_char_seq(y) {
        return Err(CharError::WrongClass(y.into()));
    }
    if y.is_empty() {
        return Err(CharError::TooShort);
    }
    let mut out = Vec::with_capacity(y.len() + 1);
    match even_position(y) {
        None => {
            out.push(0);
            out.extend_from_slice(y);
        }
        Some(v) => {
            out.push(y[v] - 1);
            out.extend_from_slice(y);
            out[v + 1] = 0;
        }
    }
    Ok(out)
}

/// A pile of height `h` with `s` summits — the linear Nakayama algebra
/// with series `(1, 2, ..., h-1, h, ..., h)` of rank `s + h - 1` — together
/// with a memory function `μ` on its indecomposables.
///
/// Vertices are addressed as `(ray, len)`: the module with socle `S_ray`
/// and the given length. The radical of the first summit is `(1, h-1)`, the
/// cliff is `(s+1, h-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MemoryPile {
    height: usize,
    summits: usize,
    mu: Vec<Vec<i64>>,
}

impl MemoryPile {
    /// Builds a pile from explicit values; `mu[r-1][l-1]` is `μ(r, l)`.
    pub fn from_values(height: usize, summits: usize, mu: Vec<Vec<i64>>) -> Self {
        MemoryPile { height, summits, mu }
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn summit_count(&self) -> usize {
        self.summits
    }

    pub fn rank(&self) -> usize {
        self.summits + self.height - 1
    }

    pub fn series(&self) -> KupischSeries {
        let h = self.height;
        let raw = (1..=self.rank()).map(|t| t.min(h)).collect();
        KupischSeries::new(raw).expect("pile series is valid")
    }

    /// Number of vertices on a ray.
    pub fn ray_len(&self, ray: usize) -> usize {
        self.height.min(self.rank() + 1 - ray)
    }

    pub fn mu(&self, ray: usize, len: usize) -> Option<i64> {
        self.mu.get(ray.wrapping_sub(1))?.get(len.wrapping_sub(1)).copied()
    }

    pub fn vertices(&self) -> Vec<(usize, usize)> {
        (1..=self.rank())
            .flat_map(|r| (1..=self.ray_len(r)).map(move |l| (r, l)))
            .collect()
    }

    pub fn radical(&self) -> (usize, usize) {
        (1, self.height - 1)
    }

    pub fn cliff(&self) -> (usize, usize) {
        (self.summits + 1, self.height - 1)
    }

    /// Whether vertex `(r, l)` is a subfactor of the cliff.
    pub fn in_cliff(&self, (r, _): (usize, usize)) -> bool {
        r > self.summits
    }

    /// The characteristic of a vertex computed from `μ`.
    pub fn char_at(&self, ray: usize, len: usize) -> Vec<i64> {
        let whole = self.mu(ray, len).expect("vertex in pile");
        (ray..ray + len)
            .map(|r| {
                let p = self.mu(r, 1).expect("simple in pile");
                if is_even(p) {
                    whole
                } else {
                    p
                }
            })
            .collect()
    }

    pub fn radical_char(&self) -> Vec<i64> {
        let (r, l) = self.radical();
        self.char_at(r, l)
    }

    pub fn cliff_char(&self) -> Vec<i64> {
        let (r, l) = self.cliff();
        self.char_at(r, l)
    }

    /// Largest value of `μ` on a subfactor of the cliff.
    pub fn cliff_max(&self) -> i64 {
        self.vertices()
            .into_iter()
            .filter(|&v| self.in_cliff(v))
            .map(|(r, l)| self.mu(r, l).unwrap())
            .max()
            .expect("cliff is non-zero")
    }
}

/// Pile whose cliff characteristic is the all-odd sequence `y`: `μ` on
/// cliff subfactors is the maximum over the corresponding window of `y`,
/// summits get 0, and every other vertex `(r, l)` is the syzygy of
/// `(r + l, h - l)`, so `μ(r, l) = μ(r + l, h - l) - 1`.
fn pile_from_odd_cliff(y: &[i64], summits: usize) -> MemoryPile {
    let m = y.len();
    let h = m + 1;
    let n = summits + m;
    let mut mu: Vec<Vec<i64>> = (1..=n).map(|r| vec![0; h.min(n + 1 - r)]).collect();
    for a in 0..m {
        let mut best = i64::MIN;
        for b in 0..m - a {
            best = best.max(y[a + b]);
            mu[summits + a][b] = best;
        }
    }
    for r in (1..=summits).rev() {
        for l in 1..h {
            mu[r - 1][l - 1] = mu[r + l - 1][h - l - 1] - 1;
        }
        mu[r - 1][h - 1] = 0;
    }
    MemoryPile { height: h, summits, mu }
}

/// The memory pile with `s` summits whose radical has characteristic
/// `radical_char`.
///
/// When `ρ^s` of the radical characteristic has an even entry, the pile is
/// cut out of a larger one with `s' > s` summits whose cliff is odd.
pub fn memory_pile(radical_char: &[i64], s: usize) -> Result<MemoryPile, CharError> {
    if radical_char.is_empty() || !is_char_seq(radical_char) {
        return Err(CharError::InvalidCharSeq(radical_char.into()));
    }
    if s == 0 {
        return Err(CharError::NoSummits);
    }
    let m = radical_char.len();
    let (big_s, y) = (s..=s + m)
        .map(|k| (k, rho_pow(radical_char, k as i64)))
        .find(|(_, y)| is_all_odd(y))
        .expect("some power in a full period is odd");
    let big = pile_from_odd_cliff(&y, big_s);
    let n = s + m;
    let mu = (1..=n)
        .map(|r| big.mu[r - 1][..(m + 1).min(n + 1 - r)].to_vec())
        .collect();
    Ok(MemoryPile { height: m + 1, summits: s, mu })
}

/// `pd (M_j / M_{i-1})` for any module `M` with `char M = z`, where
/// `1 <= i <= j <= |z|` index composition factors from the socle.
pub fn subfactor_pd(z: &[i64], i: usize, j: usize) -> Result<i64, CharError> {
    if !is_char_seq(z) || z.is_empty() {
        return Err(CharError::InvalidCharSeq(z.into()));
    }
    if i < 1 || i > j || j > z.len() {
        return Err(CharError::OutOfRange { i, j, len: z.len() });
    }
    match even_position(z) {
        Some(v) if i <= v + 1 && v < j => {
            let pile = memory_pile(z, v + 1)?;
            Ok(pile.mu(i, j + 1 - i).expect("subfactor of the radical"))
        }
        _ => Ok(*z[i - 1..j].iter().max().unwrap()),
    }
}

/// The cliff has `μ = d` and no cliff subfactor exceeds `d`.
pub fn is_d_pile(p: &MemoryPile, d: i64) -> bool {
    let (r, l) = p.cliff();
    p.mu(r, l) == Some(d) && p.cliff_max() <= d
}

/// All entries odd and weakly decreasing.
pub fn is_decreasing(z: &[i64]) -> bool {
    is_all_odd(z) && z.windows(2).all(|w| w[0] >= w[1])
}

/// `ρ z` is decreasing.
pub fn is_plus_decreasing(z: &[i64]) -> bool {
    !z.is_empty() && is_char_seq(z) && is_decreasing(&rho(z))
}

/// `(e, c_2, ..., c_m)` with `e` even, `c_i` odd and `c_2 < ... < c_m < e`.
pub fn is_plus_strictly_increasing(z: &[i64]) -> bool {
    let Some((&e, rest)) = z.split_first() else {
        return false;
    };
    is_char_seq(z)
        && is_even(e)
        && is_all_odd(rest)
        && rest.windows(2).all(|w| w[0] < w[1])
        && rest.last().is_none_or(|&c| c < e)
}

/// `(c_1, ..., c_{m-1}, e)` with `e` even, `c_i` odd and
/// `e - 1 < c_1 < ... < c_{m-1}`.
pub fn is_minus_strictly_increasing(z: &[i64]) -> bool {
    let Some((&e, rest)) = z.split_last() else {
        return false;
    };
    is_char_seq(z)
        && is_even(e)
        && is_all_odd(rest)
        && rest.windows(2).all(|w| w[0] < w[1])
        && rest.first().is_none_or(|&c| e - 1 < c)
}
