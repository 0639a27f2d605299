//! Margin graphs and their qualitative skeletons.

use crate::error::{Error, Result};
use crate::profile::Candidate;

/// Antisymmetric matrix of pairwise margins over a candidate set.
///
/// Rows and columns follow the sorted candidate ids; use [`MarginGraph::index_of`]
/// to translate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarginGraph {
    ids: Vec<Candidate>,
    m: Vec<i64>,
}

impl MarginGraph {
    /// Builds a graph from a full matrix, checking antisymmetry and parity.
    pub fn new(ids: Vec<Candidate>, rows: Vec<Vec<i64>>) -> Result<Self> {
        let k = ids.len();
        if rows.len() != k || rows.iter().any(|r| r.len() != k) {
            return Err(Error::InvalidMarginGraph(format!("matrix must be {k}x{k}")));
        }
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != k || k == 0 {
            return Err(Error::InvalidMarginGraph("candidate ids must be distinct and nonempty".into()));
        }
        // permute rows into sorted id order
        let order: Vec<usize> = sorted.iter().map(|c| ids.iter().position(|d| d == c).unwrap()).collect();
        let mut m = vec![0i64; k * k];
        for i in 0..k {
            for j in 0..k {
                m[i * k + j] = rows[order[i]][order[j]];
            }
        }
        let g = MarginGraph { ids: sorted, m };
        g.validate()?;
        Ok(g)
    }

    /// Builds a graph from weighted edges `a -> b`; absent pairs get margin 0.
    pub fn from_edges<I>(ids: I, edges: &[(Candidate, Candidate, i64)]) -> Result<Self>
    where
        I: IntoIterator<Item = Candidate>,
    {
        let mut ids: Vec<Candidate> = ids.into_iter().collect();
        ids.sort_unstable();
        let k = ids.len();
        if k == 0 {
            return Err(Error::InvalidMarginGraph("no candidates".into()));
        }
        if ids.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidMarginGraph("candidate ids must be distinct".into()));
        }
        let mut m = vec![0i64; k * k];
        for &(a, b, w) in edges {
            let i = ids.binary_search(&a).map_err(|_| Error::UnknownCandidate(a))?;
            let j = ids.binary_search(&b).map_err(|_| Error::UnknownCandidate(b))?;
            if i == j || w <= 0 {
                return Err(Error::InvalidMarginGraph(format!("bad edge {a}->{b} with weight {w}")));
            }
            if m[i * k + j] != 0 {
                return Err(Error::InvalidMarginGraph(format!("pair {a},{b} given twice")));
            }
            m[i * k + j] = w;
            m[j * k + i] = -w;
        }
        let g = MarginGraph { ids, m };
        g.validate()?;
        Ok(g)
    }

    pub(crate) fn from_parts(ids: Vec<Candidate>, m: Vec<i64>) -> Self {
        debug_assert_eq!(ids.len() * ids.len(), m.len());
        MarginGraph { ids, m }
    }

    /// Checks antisymmetry, the zero diagonal and the parity conditions.
    pub fn validate(&self) -> Result<()> {
        let k = self.len();
        let mut any_odd = false;
        let mut any_zero = false;
        for i in 0..k {
            if self.weight(i, i) != 0 {
                return Err(Error::InvalidMarginGraph("nonzero diagonal".into()));
            }
            for j in (i + 1)..k {
                let w = self.weight(i, j);
                if w != -self.weight(j, i) {
                    return Err(Error::InvalidMarginGraph(format!(
                        "margins of {} and {} are not opposite",
                        self.ids[i], self.ids[j]
                    )));
                }
                any_odd |= w % 2 != 0;
                any_zero |= w == 0;
            }
        }
        if any_odd {
            if any_zero {
                return Err(Error::InvalidMarginGraph("a zero margin requires all margins to be even".into()));
            }
            for i in 0..k {
                for j in (i + 1)..k {
                    if self.weight(i, j) % 2 == 0 {
                        return Err(Error::InvalidMarginGraph("margins of mixed parity".into()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[Candidate] {
        &self.ids
    }

    pub fn id(&self, i: usize) -> Candidate {
        self.ids[i]
    }

    pub fn index_of(&self, c: Candidate) -> Option<usize> {
        self.ids.binary_search(&c).ok()
    }

    /// Margin between the candidates at positions `i` and `j`.
    #[inline]
    pub fn weight(&self, i: usize, j: usize) -> i64 {
        self.m[i * self.ids.len() + j]
    }

    pub fn margin(&self, a: Candidate, b: Candidate) -> Result<i64> {
        let i = self.index_of(a).ok_or(Error::UnknownCandidate(a))?;
        let j = self.index_of(b).ok_or(Error::UnknownCandidate(b))?;
        Ok(self.weight(i, j))
    }

    /// Positive-margin edges `(a, b, margin)` in row-major order.
    pub fn edges(&self) -> Vec<(Candidate, Candidate, i64)> {
        let k = self.len();
        let mut out = Vec::new();
        for i in 0..k {
            for j in 0..k {
                let w = self.weight(i, j);
                if w > 0 {
                    out.push((self.ids[i], self.ids[j], w));
                }
            }
        }
        out
    }

    pub fn max_margin(&self) -> i64 {
        self.m.iter().copied().max().unwrap_or(0)
    }

    pub fn scaled(&self, factor: i64) -> MarginGraph {
        MarginGraph { ids: self.ids.clone(), m: self.m.iter().map(|w| w * factor).collect() }
    }

    /// The graph with candidate `x` deleted.
    pub fn without(&self, x: Candidate) -> Result<MarginGraph> {
        let skip = self.index_of(x).ok_or(Error::UnknownCandidate(x))?;
        if self.len() < 2 {
            return Err(Error::InvalidArgument("cannot remove the only candidate".into()));
        }
        let keep: Vec<usize> = (0..self.len()).filter(|&i| i != skip).collect();
        let mut m = Vec::with_capacity(keep.len() * keep.len());
        for &i in &keep {
            for &j in &keep {
                m.push(self.weight(i, j));
            }
        }
        Ok(MarginGraph { ids: keep.iter().map(|&i| self.ids[i]).collect(), m })
    }

    /// True if some pair of distinct candidates has margin zero.
    pub fn has_zero_margin(&self) -> bool {
        let k = self.len();
        (0..k).any(|i| ((i + 1)..k).any(|j| self.weight(i, j) == 0))
    }

    /// True if all positive margins are pairwise distinct.
    pub fn is_uniquely_weighted(&self) -> bool {
        let mut w: Vec<i64> = self.m.iter().copied().filter(|&w| w > 0).collect();
        w.sort_unstable();
        w.windows(2).all(|p| p[0] != p[1])
    }

    /// Majority edges with their ordering by margin size.
    pub fn qualitative(&self) -> QualitativeMarginGraph {
        let edges = self.edges();
        let mut weights: Vec<i64> = edges.iter().map(|e| e.2).collect();
        weights.sort_unstable();
        weights.dedup();
        let edges = edges
            .into_iter()
            .map(|(a, b, w)| (a, b, weights.binary_search(&w).unwrap() as u32))
            .collect();
        QualitativeMarginGraph::from_levels(self.ids.clone(), edges)
    }
}

/// Majority edges plus a strict weak order on them, recorded as levels:
/// an edge with a lower level has a smaller margin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QualitativeMarginGraph {
    ids: Vec<Candidate>,
    edges: Vec<(Candidate, Candidate, u32)>,
}

impl QualitativeMarginGraph {
    /// Builds a graph from `(from, to, level)` edges, rejecting symmetric or
    /// repeated pairs.
    pub fn new(ids: Vec<Candidate>, edges: Vec<(Candidate, Candidate, u32)>) -> Result<Self> {
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != ids.len() || ids.is_empty() {
            return Err(Error::InvalidMarginGraph("candidate ids must be distinct and nonempty".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for &(a, b, _) in &edges {
            for c in [a, b] {
                if sorted.binary_search(&c).is_err() {
                    return Err(Error::UnknownCandidate(c));
                }
            }
            let key = if a < b { (a, b) } else { (b, a) };
            if a == b || !seen.insert(key) {
                return Err(Error::InvalidMarginGraph(format!("edge {a}->{b} is not asymmetric")));
            }
        }
        Ok(Self::from_levels(sorted, edges))
    }

    fn from_levels(ids: Vec<Candidate>, mut edges: Vec<(Candidate, Candidate, u32)>) -> Self {
        edges.sort_unstable_by_key(|&(a, b, l)| (l, a, b));
        QualitativeMarginGraph { ids, edges }
    }

    pub fn ids(&self) -> &[Candidate] {
        &self.ids
    }

    /// Edges in increasing order of level.
    pub fn edges(&self) -> &[(Candidate, Candidate, u32)] {
        &self.edges
    }

    pub fn level(&self, a: Candidate, b: Candidate) -> Option<u32> {
        self.edges.iter().find(|e| e.0 == a && e.1 == b).map(|e| e.2)
    }

    /// True if the edge `e` is strictly weaker than `f`.
    pub fn precedes(&self, e: (Candidate, Candidate), f: (Candidate, Candidate)) -> bool {
        match (self.level(e.0, e.1), self.level(f.0, f.1)) {
            (Some(x), Some(y)) => x < y,
            _ => false,
        }
    }

    pub fn is_uniquely_weighted(&self) -> bool {
        self.edges.windows(2).all(|w| w[0].2 != w[1].2)
    }

    /// True if every pair of candidates is joined by an edge.
    pub fn is_complete(&self) -> bool {
        let k = self.ids.len();
        self.edges.len() == k * (k - 1) / 2
    }

    /// A margin graph realizing this qualitative graph: weights `2l + 1` for
    /// level `l` when the graph is complete, `2l + 2` otherwise.
    pub fn to_margin_graph(&self) -> MarginGraph {
        let k = self.ids.len();
        let offset = if self.is_complete() { 1 } else { 2 };
        let mut m = vec![0i64; k * k];
        for &(a, b, l) in &self.edges {
            let i = self.ids.binary_search(&a).unwrap();
            let j = self.ids.binary_search(&b).unwrap();
            let w = 2 * l as i64 + offset;
            m[i * k + j] = w;
            m[j * k + i] = -w;
        }
        MarginGraph::from_parts(self.ids.clone(), m)
    }
}
