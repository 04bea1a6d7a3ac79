use serde::{Deserialize, Serialize};

use crate::gtmodule::{Index, Params};

/// Finite box of indices: `k` and `l` in closed ranges, `0 <= m <= m_max`.
/// The `l` range is in raw `l`, not `lbar`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub k: (i64, i64),
    pub l: (i64, i64),
    pub m_max: i64,
}

impl Window {
    pub fn new(k: (i64, i64), l: (i64, i64), m_max: i64) -> Self {
        Self { k, l, m_max }
    }

    /// `|k| <= r`, `|l - c| <= r`, `m <= r`, where `c = mu2` when `mu2` is an
    /// integer and 0 otherwise.
    pub fn radius(p: &Params, r: i64) -> Self {
        let c = p.mu2_int().unwrap_or(0);
        Self::new((-r, r), (c - r, c + r), r)
    }

    pub fn contains(&self, i: Index) -> bool {
        (self.k.0..=self.k.1).contains(&i.k)
            && (self.l.0..=self.l.1).contains(&i.l)
            && (0..=self.m_max).contains(&i.m)
    }

    /// All indices, in lexicographic `(k, l, m)` order.
    pub fn indices(&self) -> Vec<Index> {
        let mut out = Vec::new();
        for k in self.k.0..=self.k.1 {
            for l in self.l.0..=self.l.1 {
                for m in 0..=self.m_max {
                    out.push(Index::new(k, l, m));
                }
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        let span = |(a, b): (i64, i64)| (b - a + 1).max(0) as usize;
        span(self.k) * span(self.l) * (self.m_max + 1).max(0) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Smallest `k`-, `l`- or `m`-extent; the margin available for interior
    /// equations is half of it.
    pub fn min_extent(&self) -> i64 {
        (self.k.1 - self.k.0).min(self.l.1 - self.l.0).min(self.m_max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radius_is_centered_on_integral_mu2() {
        let w = Window::radius(&Params::ratios((1, 3), (2, 1)), 1);
        assert_eq!(w.l, (1, 3));
        assert_eq!(w.len(), 3 * 3 * 2);
        assert_eq!(w.indices().len(), w.len());
        assert!(w.contains(Index::new(0, 3, 1)) && !w.contains(Index::new(0, 0, 0)));
        assert_eq!(Window::radius(&Params::ratios((1, 3), (1, 5)), 2).l, (-2, 2));
    }
}
