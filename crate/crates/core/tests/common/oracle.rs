//! Brute-force homological algebra on raw Kupisch data, written without the
//! library so that library values can be recomputed independently.
//!
//! Modules are `(top, len)` pairs; simples are indexed so that `τS_i = S_{i-1}`.

pub type M = (usize, usize);

pub struct Raw(pub Vec<usize>);

impl Raw {
    pub fn new(c: &[usize]) -> Raw {
        assert!(valid(c), "invalid Kupisch series {c:?}");
        Raw(c.to_vec())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn c(&self, t: usize) -> usize {
        self.0[t - 1]
    }

    pub fn modules(&self) -> Vec<M> {
        (1..=self.n()).flat_map(|t| (1..=self.c(t)).map(move |l| (t, l))).collect()
    }

    pub fn is_projective(&self, (t, l): M) -> bool {
        l == self.c(t)
    }

    pub fn syzygy(&self, (t, l): M) -> Option<M> {
        let p = self.c(t);
        (l < p).then(|| (t - l, p - l))
    }

    /// Least `k` with `Ω^k M` projective.
    pub fn pd(&self, m: M) -> usize {
        let mut x = m;
        let mut k = 0;
        while let Some(y) = self.syzygy(x) {
            x = y;
            k += 1;
        }
        k
    }

    /// `None` for the zero module (`pd 0 = -∞`).
    pub fn pd_opt(&self, m: Option<M>) -> Option<usize> {
        m.map(|m| self.pd(m))
    }

    /// Longest module with the same socle.
    pub fn envelope(&self, (t, l): M) -> M {
        let s = t + 1 - l;
        let mut top = t;
        while top < self.n() && self.c(top + 1) >= top + 2 - s {
            top += 1;
        }
        (top, top + 1 - s)
    }

    pub fn is_injective(&self, m: M) -> bool {
        self.envelope(m) == m
    }

    pub fn cosyzygy(&self, m: M) -> Option<M> {
        let e = self.envelope(m);
        (e != m).then(|| (e.0, e.0 - m.0))
    }

    pub fn id(&self, m: M) -> usize {
        let mut x = m;
        let mut k = 0;
        while let Some(y) = self.cosyzygy(x) {
            x = y;
            k += 1;
        }
        k
    }

    pub fn gldim(&self) -> usize {
        (1..=self.n()).map(|t| self.pd((t, 1))).max().unwrap()
    }

    /// `None` means infinite.
    pub fn domdim(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for t in 1..=self.n() {
            let mut x = (t, self.c(t));
            let mut k = 0;
            let finite = loop {
                if !self.is_projective(self.envelope(x)) {
                    break true;
                }
                k += 1;
                match self.cosyzygy(x) {
                    Some(y) => x = y,
                    None => break false,
                }
            };
            if finite {
                best = Some(best.map_or(k, |b: usize| b.min(k)));
            }
        }
        best
    }

    /// Submodule of an indecomposable projective: some `P_{t'}`, `t' >= t`,
    /// has the same socle.
    pub fn torsionless(&self, (t, l): M) -> bool {
        (t..=self.n()).any(|u| self.c(u) + t == l + u)
    }

    pub fn char_of(&self, (t, l): M) -> Vec<i64> {
        let whole = self.pd((t, l)) as i64;
        (t + 1 - l..=t)
            .map(|s| {
                let p = self.pd((s, 1)) as i64;
                if p % 2 == 0 {
                    whole
                } else {
                    p
                }
            })
            .collect()
    }

    pub fn simple_pds(&self) -> Vec<usize> {
        (1..=self.n()).map(|t| self.pd((t, 1))).collect()
    }

    pub fn is_ha(&self) -> Option<usize> {
        let g = self.gldim();
        (self.n() >= 2 && self.domdim() == Some(g)).then_some(g)
    }
}

pub fn valid(c: &[usize]) -> bool {
    !c.is_empty()
        && c[0] == 1
        && c[1..].iter().all(|&x| x >= 2)
        && c.windows(2).all(|w| w[1] <= w[0] + 1)
}

/// Subfactor `M_j / M_{i-1}` of `M`, factors counted from the socle.
pub fn subfactor((t, l): M, i: usize, j: usize) -> M {
    (t + 1 - l + j - 1, j + 1 - i)
}
