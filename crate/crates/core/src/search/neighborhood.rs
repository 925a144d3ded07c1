use std::collections::BTreeMap;

use crate::correspondence::{badness, BadnessMode, CoverResult, PointLineCorrespondence};
use crate::error::{Error, Result};

/// Which swaps `(a, b)` a search step considers. Pairs are tried in the
/// returned order; the first pair reaching the best score wins.
pub trait SwapNeighborhood: Send + Sync {
    fn name(&self) -> &str;

    fn candidates(
        &self,
        current: &PointLineCorrespondence,
        cover: &CoverResult,
    ) -> Vec<(usize, usize)>;
}

/// Every unordered pair, as `(a, b)` with `a < b` in lexicographic order.
/// `λ_{a,b} = λ_{b,a}`, so the reversed pairs add nothing.
#[derive(Debug, Clone, Copy, Default)]
pub struct FullScan;

impl SwapNeighborhood for FullScan {
    fn name(&self) -> &str {
        "full-scan"
    }

    fn candidates(
        &self,
        current: &PointLineCorrespondence,
        _: &CoverResult,
    ) -> Vec<(usize, usize)> {
        let n = current.n();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect()
    }
}

/// `a` among the `w` points with most uncovered edges (ties to the lower
/// index), `b` arbitrary.
#[derive(Debug, Clone, Copy)]
pub struct WorstPoints {
    pub w: usize,
    pub mode: BadnessMode,
}

impl WorstPoints {
    pub fn worst(&self, n: usize, cover: &CoverResult) -> Vec<usize> {
        let bad = badness(n, &cover.uncovered, self.mode);
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&p| (std::cmp::Reverse(bad[p]), p));
        order.truncate(self.w.min(n));
        order
    }
}

impl SwapNeighborhood for WorstPoints {
    fn name(&self) -> &str {
        "worst-points"
    }

    fn candidates(
        &self,
        current: &PointLineCorrespondence,
        cover: &CoverResult,
    ) -> Vec<(usize, usize)> {
        let n = current.n();
        let mut worst = self.worst(n, cover);
        worst.sort_unstable();
        let mut pairs = Vec::new();
        for &a in &worst {
            for b in 0..n {
                // a swap between two worst points is listed once, from the smaller
                if b != a && !(b < a && worst.contains(&b)) {
                    pairs.push((a, b));
                }
            }
        }
        pairs
    }
}

pub type NeighborhoodFactory = fn(&NeighborhoodParams) -> Box<dyn SwapNeighborhood>;

#[derive(Debug, Clone, Copy)]
pub struct NeighborhoodParams {
    pub worst_points: usize,
    pub badness_mode: BadnessMode,
}

/// Neighbourhoods by name.
pub struct NeighborhoodRegistry {
    factories: BTreeMap<String, NeighborhoodFactory>,
}

impl NeighborhoodRegistry {
    pub fn empty() -> Self {
        NeighborhoodRegistry {
            factories: BTreeMap::new(),
        }
    }

    pub fn register(&mut self, name: &str, factory: NeighborhoodFactory) {
        self.factories.insert(name.to_string(), factory);
    }

    pub fn create(
        &self,
        name: &str,
        params: &NeighborhoodParams,
    ) -> Result<Box<dyn SwapNeighborhood>> {
        self.factories
            .get(name)
            .map(|f| f(params))
            .ok_or_else(|| Error::UnknownStrategy(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.factories.keys().map(String::as_str)
    }
}

impl Default for NeighborhoodRegistry {
    fn default() -> Self {
        let mut r = Self::empty();
        r.register("full-scan", |_| Box::new(FullScan));
        r.register("worst-points", |p| {
            Box::new(WorstPoints {
                w: p.worst_points,
                mode: p.badness_mode,
            })
        });
        r
    }
}
