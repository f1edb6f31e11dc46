//! Connected linear Nakayama algebras given by their Kupisch series, and the
//! uniserial modules over them.
//!
//! Simples are indexed `1..=n` so that `τ S_i = S_{i-1}`. The projective
//! cover of `S_t` is `M(t, c[t])`, the simple projective is `S_1` and the
//! simple injective `ω` is `S_n`. An indecomposable module `M(t, l)` is
//! identified by its top index `t` and its length `l`; its composition
//! factors from the socle upwards are `S_{t-l+1}, ..., S_t`.
//!
//! Modules do not carry a reference to their algebra. Pure index operations
//! (radical, socle, ...) live on [`Module`]; everything that needs the
//! Kupisch series lives on [`KupischSeries`]. The zero module is `None`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("empty Kupisch series")]
    EmptySeries,
    #[error("first entry of a Kupisch series must be 1")]
    FirstNotOne,
    #[error("growth violation after position {0}")]
    GrowthViolation(usize),
    #[error("disconnected at position {0}: c[{0}] < 2")]
    Disconnected(usize),
    #[error("module out of range: top {top}, length {len}")]
    OutOfRange { top: usize, len: usize },
    #[error("algebra is not concave")]
    NotConcave,
    #[error("top of the module must be the simple injective S_{n}")]
    TopNotOmega { n: usize },
    #[error("invalid interval [{0}, {1}]")]
    BadInterval(usize, usize),
    #[error("cannot parse {0:?}")]
    Parse(String),
}

/// The Kupisch series `(c[1], ..., c[n])` of a connected linear Nakayama
/// algebra: `c[t]` is the length of the indecomposable projective with top
/// `S_t`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KupischSeries {
    c: Vec<usize>,
}

/// An indecomposable (uniserial) module `M(top, len)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Module {
    top: usize,
    len: usize,
}

/// An indecomposable module or the zero module (`None`).
pub type MaybeModule = Option<Module>;

impl Module {
    pub fn top(&self) -> usize {
        self.top
    }

    pub fn len(&self) -> usize {
        self.len
    }

    /// Index of the socle.
    pub fn socle_index(&self) -> usize {
        self.top + 1 - self.len
    }

    pub fn is_simple(&self) -> bool {
        self.len == 1
    }

    pub fn socle(&self) -> Module {
        Module { top: self.socle_index(), len: 1 }
    }

    pub fn top_simple(&self) -> Module {
        Module { top: self.top, len: 1 }
    }

    pub fn radical(&self) -> MaybeModule {
        (self.len > 1).then(|| Module { top: self.top - 1, len: self.len - 1 })
    }

    /// `M / soc M`.
    pub fn soc_quotient(&self) -> MaybeModule {
        (self.len > 1).then(|| Module { top: self.top, len: self.len - 1 })
    }

    /// `rad^k M`; zero once `k` reaches the length.
    pub fn rad_power(&self, k: usize) -> MaybeModule {
        (k < self.len).then(|| Module { top: self.top - k, len: self.len - k })
    }

    /// Simple indices of the composition factors, socle first.
    pub fn composition_factors(&self) -> Vec<usize> {
        (self.socle_index()..=self.top).collect()
    }

    /// The `i`-th composition factor (1-based, socle first) as a simple module.
    pub fn factor(&self, i: usize) -> Module {
        debug_assert!(1 <= i && i <= self.len);
        Module { top: self.socle_index() + i - 1, len: 1 }
    }

    /// Non-zero submodules, longest first: `M(t-k, l-k)` for `0 <= k < l`.
    pub fn submodules(&self) -> Vec<Module> {
        (0..self.len).map(|k| Module { top: self.top - k, len: self.len - k }).collect()
    }

    /// Non-zero factor modules, longest first: `M(t, l-k)` for `0 <= k < l`.
    pub fn factor_modules(&self) -> Vec<Module> {
        (0..self.len).map(|k| Module { top: self.top, len: self.len - k }).collect()
    }

    /// The subfactor `M_j / M_{i-1}` of the composition series (1-based,
    /// socle first, `i <= j`).
    pub fn subfactor(&self, i: usize, j: usize) -> Module {
        debug_assert!(1 <= i && i <= j && j <= self.len);
        Module { top: self.socle_index() + j - 1, len: j + 1 - i }
    }

    /// All non-zero subfactors; there are `l(l+1)/2` of them.
    pub fn subfactors(&self) -> Vec<Module> {
        let mut out = Vec::with_capacity(self.len * (self.len + 1) / 2);
        for i in 1..=self.len {
            for j in i..=self.len {
                out.push(self.subfactor(i, j));
            }
        }
        out
    }

    /// Whether `other` is a subfactor of `self`.
    pub fn contains_subfactor(&self, other: &Module) -> bool {
        self.socle_index() <= other.socle_index() && other.top <= self.top
    }
}

impl fmt::Display for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({},{})", self.top, self.len)
    }
}

/// Formats a possibly-zero module, printing the zero module as `0`.
pub fn display_maybe(m: &MaybeModule) -> String {
    match m {
        Some(m) => m.to_string(),
        None => "0".to_string(),
    }
}

impl KupischSeries {
    /// Validates a raw Kupisch series.
    pub fn new(raw: Vec<usize>) -> Result<Self, AlgebraError> {
        let first = *raw.first().ok_or(AlgebraError::EmptySeries)?;
        if first != 1 {
            return Err(AlgebraError::FirstNotOne);
        }
        for i in 1..raw.len() {
            if raw[i] > raw[i - 1] + 1 {
                return Err(AlgebraError::GrowthViolation(i));
            }
            if raw[i] < 2 {
                return Err(AlgebraError::Disconnected(i + 1));
            }
        }
        Ok(KupischSeries { c: raw })
    }

    /// Rank `n`, the number of simple modules.
    pub fn rank(&self) -> usize {
        self.c.len()
    }

    /// Height `h`, the maximal length of an indecomposable module.
    pub fn height(&self) -> usize {
        self.c.iter().copied().max().unwrap_or(0)
    }

    pub fn entries(&self) -> &[usize] {
        &self.c
    }

    /// `c[t]`, 1-based.
    pub fn proj_len(&self, t: usize) -> usize {
        self.c[t - 1]
    }

    fn exists(&self, t: usize, l: usize) -> bool {
        t >= 1 && t <= self.rank() && l >= 1 && l <= self.c[t - 1]
    }

    /// `M(t, l)`, checked against the series.
    pub fn module(&self, t: usize, l: usize) -> Result<Module, AlgebraError> {
        if self.exists(t, l) {
            Ok(Module { top: t, len: l })
        } else {
            Err(AlgebraError::OutOfRange { top: t, len: l })
        }
    }

    pub fn simple(&self, t: usize) -> Module {
        Module { top: t, len: 1 }
    }

    pub fn projective_cover(&self, m: &Module) -> Module {
        Module { top: m.top, len: self.proj_len(m.top) }
    }

    /// The indecomposable projective `P(S_t)`.
    pub fn projective(&self, t: usize) -> Module {
        Module { top: t, len: self.proj_len(t) }
    }

    pub fn is_projective(&self, m: &Module) -> bool {
        m.len == self.proj_len(m.top)
    }

    pub fn is_injective(&self, m: &Module) -> bool {
        !self.exists(m.top + 1, m.len + 1)
    }

    /// First syzygy: the kernel of the projective cover, zero for projectives.
    pub fn syzygy(&self, m: &Module) -> MaybeModule {
        let c = self.proj_len(m.top);
        (m.len < c).then(|| Module { top: m.top - m.len, len: c - m.len })
    }

    /// The injective envelope: the longest module with the same socle.
    pub fn injective_envelope(&self, m: &Module) -> Module {
        let s = m.socle_index();
        let mut len = m.len;
        while self.exists(s + len, len + 1) {
            len += 1;
        }
        Module { top: s + len - 1, len }
    }

    /// Cokernel of the injective envelope, zero for injectives.
    pub fn cosyzygy(&self, m: &Module) -> MaybeModule {
        let env = self.injective_envelope(m);
        (env.len > m.len).then(|| Module { top: env.top, len: env.len - m.len })
    }

    /// Auslander-Reiten translate, zero on projectives.
    pub fn tau(&self, m: &Module) -> MaybeModule {
        (!self.is_projective(m)).then(|| Module { top: m.top - 1, len: m.len })
    }

    /// Inverse Auslander-Reiten translate, zero on injectives.
    pub fn tau_minus(&self, m: &Module) -> MaybeModule {
        (!self.is_injective(m)).then(|| Module { top: m.top + 1, len: m.len })
    }

    /// Every indecomposable module, ordered by top then by length.
    pub fn indecomposables(&self) -> Vec<Module> {
        let mut out = Vec::with_capacity(self.c.iter().sum());
        for (i, &c) in self.c.iter().enumerate() {
            for l in 1..=c {
                out.push(Module { top: i + 1, len: l });
            }
        }
        out
    }

    /// Modules with socle `S_s` (the ray of `s`), shortest first.
    pub fn ray(&self, s: usize) -> Vec<Module> {
        let env = self.injective_envelope(&self.simple(s));
        (1..=env.len).map(|l| Module { top: s + l - 1, len: l }).collect()
    }

    /// The simple injective `ω = S_n`, as an index.
    pub fn omega(&self) -> usize {
        self.rank()
    }

    pub fn is_ascending(&self) -> bool {
        self.c.windows(2).all(|w| w[0] <= w[1])
    }

    /// First weakly increasing, then weakly decreasing.
    pub fn is_concave(&self) -> bool {
        let mut i = 1;
        while i < self.c.len() && self.c[i - 1] <= self.c[i] {
            i += 1;
        }
        while i < self.c.len() && self.c[i - 1] >= self.c[i] {
            i += 1;
        }
        i == self.c.len()
    }

    /// Top indices of the summits, the projectives of maximal length.
    pub fn summits(&self) -> Vec<usize> {
        let h = self.height();
        (1..=self.rank()).filter(|&t| self.proj_len(t) == h).collect()
    }

    fn require_concave(&self) -> Result<(), AlgebraError> {
        if self.is_concave() {
            Ok(())
        } else {
            Err(AlgebraError::NotConcave)
        }
    }

    /// The summit whose radical is projective.
    pub fn first_summit(&self) -> Result<Module, AlgebraError> {
        self.require_concave()?;
        let t = self.summits()[0];
        Ok(Module { top: t, len: self.height() })
    }

    /// The summit whose socle quotient is injective.
    pub fn last_summit(&self) -> Result<Module, AlgebraError> {
        self.require_concave()?;
        let t = *self.summits().last().expect("nonempty series has a summit");
        Ok(Module { top: t, len: self.height() })
    }

    /// Last summit modulo its socle.
    pub fn principal_cliff(&self) -> Result<MaybeModule, AlgebraError> {
        Ok(self.last_summit()?.soc_quotient())
    }

    /// The algebra of the Serre subcategory generated by `S_i, ..., S_j`.
    pub fn restrict(&self, i: usize, j: usize) -> Result<KupischSeries, AlgebraError> {
        if i < 1 || i > j || j > self.rank() {
            return Err(AlgebraError::BadInterval(i, j));
        }
        let c = (1..=j + 1 - i).map(|k| self.proj_len(i + k - 1).min(k)).collect();
        Ok(KupischSeries { c })
    }

    /// Whether `m` lies in the Serre subcategory of `S_i, ..., S_j`.
    pub fn in_interval(m: &Module, i: usize, j: usize) -> bool {
        i <= m.socle_index() && m.top <= j
    }

    /// One-point extension by a module with top `ω`: appends a projective
    /// whose radical is `m`.
    pub fn one_point_extension(&self, m: &Module) -> Result<KupischSeries, AlgebraError> {
        if m.top != self.rank() || !self.exists(m.top, m.len) {
            return Err(AlgebraError::TopNotOmega { n: self.rank() });
        }
        let mut c = self.c.clone();
        c.push(m.len + 1);
        Ok(KupischSeries { c })
    }
}

impl fmt::Display for KupischSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.c.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for KupischSeries {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let raw = s
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| AlgebraError::Parse(x.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        KupischSeries::new(raw)
    }
}
