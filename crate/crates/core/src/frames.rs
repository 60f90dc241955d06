//! Orthogonality graphs of norm-3 vector pairs and maximum cliques.
//!
//! A 3-frame of an `n`-dimensional lattice is a set of `n` pairwise orthogonal
//! norm-3 vectors; such frames are exactly the `n`-cliques of the graph whose
//! vertices are the pairs `{x, −x}` of norm 3 and whose edges join orthogonal
//! pairs.

use std::fmt::Write as _;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;

use crate::error::Result;
use crate::lattice::{self, EnumOptions, Lattice, Norm};
use crate::linalg::dot_i64;

/// Fixed-width bit set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitRow(Vec<u64>);

impl BitRow {
    pub fn new(len: usize) -> Self {
        Self(vec![0; len.div_ceil(64)])
    }

    pub fn full(len: usize) -> Self {
        let mut r = Self::new(len);
        for i in 0..len {
            r.insert(i);
        }
        r
    }

    pub fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn and(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    pub fn and_assign(&mut self, other: &Self) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= b;
        }
    }

    pub fn and_not_assign(&mut self, other: &Self) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                (w != 0).then(|| {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    i * 64 + b
                })
            })
        })
    }
}

/// Simple undirected graph with dense adjacency rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<BitRow>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            adjacency: vec![BitRow::new(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert_ne!(a, b, "self-loops are not allowed");
        self.adjacency[a].insert(b);
        self.adjacency[b].insert(a);
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> &BitRow {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.vertex_count())
            .map(|v| self.degree(v))
            .sum::<usize>()
            / 2
    }

    /// The common degree, if every vertex has the same one.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut d = (0..self.vertex_count()).map(|v| self.degree(v));
        let first = d.next()?;
        d.all(|x| x == first).then_some(first)
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| a != b && self.has_edge(a, b)))
    }

    /// One line per vertex: its neighbors' indices, space separated.
    pub fn to_adjacency_list(&self) -> String {
        let mut s = String::new();
        for row in &self.adjacency {
            let items: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(s, "{}", items.join(" "));
        }
        s
    }

    /// Vertices in degeneracy order: repeatedly remove a vertex of minimum
    /// remaining degree; the reverse of the removal order is returned, so
    /// the densest core comes first.
    fn degeneracy_order(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut alive = BitRow::full(n);
        let mut removed = Vec::with_capacity(n);
        for _ in 0..n {
            let v = alive
                .iter()
                .min_by_key(|&v| (deg[v], v))
                .expect("vertices remain");
            alive.remove(v);
            for u in self.adjacency[v].and(&alive).iter() {
                deg[u] -= 1;
            }
            removed.push(v);
        }
        removed.reverse();
        removed
    }

    fn relabeled(&self, order: &[usize]) -> Self {
        let n = order.len();
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Self::empty(n);
        for (i, &v) in order.iter().enumerate() {
            for u in self.adjacency[v].iter() {
                g.adjacency[i].insert(pos[u]);
            }
        }
        g
    }
}

/// Result of a clique search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clique {
    pub size: usize,
    pub witness: Vec<usize>,
    /// The search stopped early at `stop_at`; `size` is then only a lower bound.
    pub lower_bound_only: bool,
}

struct Search<'a> {
    g: &'a Graph,
    best: AtomicUsize,
    witness: Mutex<Vec<usize>>,
    stop_at: usize,
    stopped: AtomicBool,
}

impl Search<'_> {
    /// Greedy sequential coloring of `p` in vertex-index order. Returns the
    /// vertices of color `>= min_color` with their colors, in nondecreasing
    /// color order.
    fn color(&self, p: &BitRow, min_color: usize) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::new();
        let mut colors = Vec::new();
        let mut uncolored = p.clone();
        let mut k = 1;
        while !uncolored.is_empty() {
            let mut avail = uncolored.clone();
            while let Some(v) = avail.first() {
                avail.remove(v);
                avail.and_not_assign(self.g.neighbors(v));
                uncolored.remove(v);
                if k >= min_color {
                    order.push(v);
                    colors.push(k);
                }
            }
            k += 1;
        }
        (order, colors)
    }

    fn record(&self, clique: &[usize]) {
        let mut w = self.witness.lock().expect("witness lock");
        if clique.len() > self.best.load(Ordering::SeqCst) {
            self.best.store(clique.len(), Ordering::SeqCst);
            *w = clique.to_vec();
            if clique.len() >= self.stop_at {
                self.stopped.store(true, Ordering::SeqCst);
            }
        }
    }

    fn expand(&self, clique: &mut Vec<usize>, mut p: BitRow) {
        let best = self.best.load(Ordering::Relaxed);
        let min_color = (best + 1).saturating_sub(clique.len());
        let (order, colors) = self.color(&p, min_color);
        for i in (0..order.len()).rev() {
            if self.stopped.load(Ordering::Relaxed) {
                return;
            }
            if clique.len() + colors[i] <= self.best.load(Ordering::Relaxed) {
                return;
            }
            let v = order[i];
            clique.push(v);
            let next = p.and(self.g.neighbors(v));
            if next.is_empty() {
                if clique.len() > self.best.load(Ordering::Relaxed) {
                    self.record(clique);
                }
            } else {
                self.expand(clique, next);
            }
            clique.pop();
            p.remove(v);
        }
    }
}

/// Exact maximum clique by branch and bound with a greedy coloring bound.
/// With `stop_at`, the search ends as soon as a clique of that size is found.
pub fn max_clique(g: &Graph, stop_at: Option<usize>) -> Clique {
    let n = g.vertex_count();
    if n == 0 {
        return Clique {
            size: 0,
            witness: vec![],
            lower_bound_only: false,
        };
    }
    let order = g.degeneracy_order();
    let h = g.relabeled(&order);
    let s = Search {
        g: &h,
        best: AtomicUsize::new(0),
        witness: Mutex::new(Vec::new()),
        stop_at: stop_at.unwrap_or(usize::MAX),
        stopped: AtomicBool::new(false),
    };
    s.record(&[0]);
    s.expand(&mut vec![], BitRow::full(n));
    let mut witness: Vec<usize> = s
        .witness
        .into_inner()
        .expect("witness lock")
        .iter()
        .map(|&v| order[v])
        .collect();
    witness.sort_unstable();
    debug_assert!(g.is_clique(&witness));
    let lower_bound_only = s.stopped.load(Ordering::SeqCst);
    Clique {
        size: witness.len(),
        witness,
        lower_bound_only,
    }
}

/// Orthogonality graph of the norm-3 vector pairs of a lattice.
#[derive(Clone, Debug)]
pub struct FrameGraph {
    pub graph: Graph,
    /// Lexicographically positive representative of each pair, as ambient
    /// integer vectors at the lattice scale.
    pub vectors: Vec<Vec<i64>>,
    pub scale: u64,
}

impl FrameGraph {
    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Whether the given vertices are pairwise orthogonal and of norm 3.
    pub fn verify_frame(&self, vs: &[usize]) -> bool {
        let three = 3 * self.scale as i128;
        vs.iter()
            .all(|&a| dot_i64(&self.vectors[a], &self.vectors[a]) == three)
            && vs.iter().enumerate().all(|(i, &a)| {
                vs[i + 1..]
                    .iter()
                    .all(|&b| a != b && dot_i64(&self.vectors[a], &self.vectors[b]) == 0)
            })
    }
}

pub fn frame_graph(l: &Lattice, opts: EnumOptions) -> Result<FrameGraph> {
    let three = Norm::from_integer(3);
    let vectors: Vec<Vec<i64>> = lattice::short_vectors(l, three, opts)?
        .into_iter()
        .filter(|(_, q)| *q == three)
        .map(|(v, _)| v)
        .collect();
    let n = vectors.len();
    let rows: Vec<BitRow> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut row = BitRow::new(n);
            for j in 0..n {
                if i != j && dot_i64(&vectors[i], &vectors[j]) == 0 {
                    row.insert(j);
                }
            }
            row
        })
        .collect();
    Ok(FrameGraph {
        graph: Graph { adjacency: rows },
        vectors,
        scale: l.scale(),
    })
}

/// A 3-frame of `L` (vertex indices into the frame graph), if one exists.
pub fn find_3_frame(l: &Lattice, opts: EnumOptions) -> Result<(FrameGraph, Option<Vec<usize>>)> {
    let fg = frame_graph(l, opts)?;
    let n = l.dim();
    if fg.vertex_count() < n {
        return Ok((fg, None));
    }
    let c = max_clique(&fg.graph, Some(n));
    let frame = (c.size >= n).then(|| c.witness[..n].to_vec());
    if let Some(f) = &frame {
        assert!(fg.verify_frame(f), "clique witness is not a frame");
    }
    Ok((fg, frame))
}

pub fn has_3_frame(l: &Lattice, opts: EnumOptions) -> Result<bool> {
    Ok(find_3_frame(l, opts)?.1.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitrow_ops() {
        let mut r = BitRow::new(130);
        r.insert(3);
        r.insert(64);
        r.insert(129);
        assert_eq!(r.iter().collect::<Vec<_>>(), vec![3, 64, 129]);
        assert_eq!(r.first(), Some(3));
        r.remove(3);
        assert_eq!(r.count(), 2);
    }

    #[test]
    fn small_graphs() {
        assert_eq!(max_clique(&Graph::empty(4), None).size, 1);
        let k5: Vec<(usize, usize)> = (0..5)
            .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
            .collect();
        assert_eq!(max_clique(&Graph::from_edges(5, &k5), None).size, 5);
        assert_eq!(max_clique(&Graph::empty(0), None).size, 0);
    }

    #[test]
    fn stop_at_flags_lower_bound() {
        let k5: Vec<(usize, usize)> = (0..5)
            .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
            .collect();
        let c = max_clique(&Graph::from_edges(5, &k5), Some(3));
        assert!(c.lower_bound_only);
        assert!(c.size >= 3);
    }
}
