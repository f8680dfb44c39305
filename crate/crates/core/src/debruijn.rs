//! De Bruijn graphs of one-dimensional dictionary slices.
//!
//! The graph of order `k` has the admissible words of length `k` as
//! vertices and the admissible words of length `k + 1` as edges, running
//! from their length-`k` prefix to their length-`k` suffix. Vertices and
//! edges are kept in lexicographic order, and every traversal below visits
//! neighbours in that order, so all outputs are deterministic.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{invalid, Error, Result};
use crate::symbolic::{DictionarySlice, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeBruijnGraph {
    order: usize,
    vertices: Vec<Word>,
    edges: Vec<Word>,
    source: Vec<usize>,
    target: Vec<usize>,
    outgoing: Vec<Vec<usize>>,
    incoming: Vec<Vec<usize>>,
}

/// Which objects a global closed path has to pass through.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverMode {
    Vertices,
    Edges,
}

/// A closed edge sequence `e_1 … e_l` with `∂1(e_j) = ∂0(e_{j+1})`,
/// including the wrap-around from `e_l` to `e_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedPath {
    edges: Vec<Word>,
}

fn prefix(w: &Word) -> &[crate::symbolic::Letter] {
    &w.letters()[..w.len() - 1]
}

fn suffix(w: &Word) -> &[crate::symbolic::Letter] {
    &w.letters()[1..]
}

impl ClosedPath {
    pub fn new(edges: Vec<Word>) -> Result<Self> {
        let Some(first) = edges.first() else {
            return Err(invalid("closed paths need at least one edge"));
        };
        if first.len() < 2 || edges.iter().any(|e| e.len() != first.len()) {
            return Err(invalid("path edges must be words of one common length >= 2"));
        }
        for (i, e) in edges.iter().enumerate() {
            let next = &edges[(i + 1) % edges.len()];
            if suffix(e) != prefix(next) {
                return Err(invalid("consecutive path edges do not chain"));
            }
        }
        Ok(Self { edges })
    }

    pub fn edges(&self) -> &[Word] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// The word formed by the first letters of the edges; its periodic
    /// extension passes through exactly the vertices and edges of the path.
    pub fn periodic_word(&self) -> Word {
        Word::new(self.edges.iter().map(|e| e.letters()[0]).collect())
    }
}

impl DeBruijnGraph {
    pub fn build(slice: &DictionarySlice, order: usize) -> Result<Self> {
        if slice.dim() != 1 {
            return Err(Error::UnsupportedDimension {
                found: slice.dim(),
                context: "de Bruijn graphs are one-dimensional",
            });
        }
        if order == 0 || slice.cap() < order + 1 {
            return Err(invalid("graph order must satisfy 1 <= k <= cap - 1"));
        }
        let vertices = slice.words(order);
        let edges = slice.words(order + 1);
        let find = |w: &[crate::symbolic::Letter]| {
            vertices
                .binary_search_by(|v| v.letters().cmp(w))
                .map_err(|_| invalid("slice is not hereditary: an edge boundary is missing"))
        };
        let mut source = Vec::with_capacity(edges.len());
        let mut target = Vec::with_capacity(edges.len());
        let mut outgoing = vec![Vec::new(); vertices.len()];
        let mut incoming = vec![Vec::new(); vertices.len()];
        for (i, e) in edges.iter().enumerate() {
            let s = find(prefix(e))?;
            let t = find(suffix(e))?;
            source.push(s);
            target.push(t);
            outgoing[s].push(i);
            incoming[t].push(i);
        }
        Ok(Self { order, vertices, edges, source, target, outgoing, incoming })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Word] {
        &self.edges
    }

    /// Source and target vertex indices of edge `e`.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        (self.source[e], self.target[e])
    }

    pub fn outgoing(&self, v: usize) -> &[usize] {
        &self.outgoing[v]
    }

    pub fn incoming(&self, v: usize) -> &[usize] {
        &self.incoming[v]
    }

    pub fn vertex_index(&self, w: &Word) -> Option<usize> {
        self.vertices.binary_search(w).ok()
    }

    pub fn edge_index(&self, w: &Word) -> Option<usize> {
        self.edges.binary_search(w).ok()
    }

    /// Vertices lacking an incoming or an outgoing edge.
    pub fn dangling_vertices(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&v| self.outgoing[v].is_empty() || self.incoming[v].is_empty())
            .collect()
    }

    /// Strongly connected components in Kosaraju order, each sorted.
    pub fn strongly_connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        // first pass: iterative DFS finishing order
        let mut seen = vec![false; n];
        let mut finish = Vec::with_capacity(n);
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut stack = vec![(root, 0usize)];
            while let Some(top) = stack.last_mut() {
                let (v, i) = *top;
                if let Some(&e) = self.outgoing[v].get(i) {
                    top.1 += 1;
                    let w = self.target[e];
                    if !seen[w] {
                        seen[w] = true;
                        stack.push((w, 0));
                    }
                } else {
                    finish.push(v);
                    stack.pop();
                }
            }
        }
        // second pass on the transposed graph
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for &root in finish.iter().rev() {
            if comp[root] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![root];
            comp[root] = id;
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for &e in &self.incoming[v] {
                    let w = self.source[e];
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_strongly_connected(&self) -> bool {
        !self.vertices.is_empty() && self.strongly_connected_components().len() == 1
    }

    /// Number of vertices with both an incoming and an outgoing edge whose
    /// total degree exceeds 2. A loop contributes to both degrees.
    pub fn branching_count(&self) -> usize {
        (0..self.vertices.len())
            .filter(|&v| {
                let (i, o) = (self.incoming[v].len(), self.outgoing[v].len());
                i > 0 && o > 0 && i + o > 2
            })
            .count()
    }

    /// Shortest edge path from `from` to `to`; empty when they coincide.
    fn shortest_path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        if from == to {
            return Some(Vec::new());
        }
        self.bfs(from, to)
    }

    /// Breadth-first search returning the edge path of the first arrival at
    /// `to`, which may be `from` itself after at least one step.
    fn bfs(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        let mut via = vec![usize::MAX; n];
        let mut reached = vec![false; n];
        let mut queue = VecDeque::new();
        queue.push_back(from);
        while let Some(v) = queue.pop_front() {
            for &e in &self.outgoing[v] {
                let w = self.target[e];
                if reached[w] {
                    continue;
                }
                reached[w] = true;
                via[w] = e;
                if w == to {
                    let mut path = vec![e];
                    let mut cur = self.source[e];
                    while cur != from {
                        let f = via[cur];
                        path.push(f);
                        cur = self.source[f];
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(w);
            }
        }
        None
    }

    /// Shortest closed path through vertex `v`, if any.
    pub fn shortest_cycle_through(&self, v: usize) -> Option<ClosedPath> {
        let path = self.bfs(v, v)?;
        Some(self.to_closed(&path))
    }

    fn to_closed(&self, path: &[usize]) -> ClosedPath {
        ClosedPath { edges: path.iter().map(|&e| self.edges[e].clone()).collect() }
    }

    fn is_balanced(&self) -> bool {
        (0..self.vertices.len()).all(|v| self.incoming[v].len() == self.outgoing[v].len())
    }

    fn eulerian_circuit(&self, start: usize) -> Vec<usize> {
        let mut next = vec![0usize; self.vertices.len()];
        let mut stack: Vec<(usize, Option<usize>)> = vec![(start, None)];
        let mut circuit = Vec::with_capacity(self.edges.len());
        while let Some(&(v, via)) = stack.last() {
            if let Some(&e) = self.outgoing[v].get(next[v]) {
                next[v] += 1;
                stack.push((self.target[e], Some(e)));
            } else {
                stack.pop();
                circuit.extend(via);
            }
        }
        circuit.reverse();
        circuit
    }

    /// A closed path through every vertex (or every edge).
    ///
    /// Targets are visited in lexicographic order and joined by shortest
    /// paths; the walk is then closed by a shortest path back to its start.
    /// In edge mode a balanced graph yields an Eulerian circuit instead.
    pub fn global_closed_path(&self, mode: CoverMode) -> Result<ClosedPath> {
        if !self.is_strongly_connected() {
            return Err(Error::NoGlobalPath);
        }
        if self.edges.is_empty() {
            return Err(Error::NoGlobalPath);
        }
        let start = match mode {
            CoverMode::Vertices => 0,
            CoverMode::Edges => self.source[0],
        };
        if mode == CoverMode::Edges && self.is_balanced() {
            return Ok(self.to_closed(&self.eulerian_circuit(start)));
        }
        let mut w = Walk {
            path: Vec::new(),
            cur: start,
            seen_v: vec![false; self.vertices.len()],
            seen_e: vec![false; self.edges.len()],
        };
        w.seen_v[start] = true;
        match mode {
            CoverMode::Vertices => {
                for t in 0..self.vertices.len() {
                    if w.seen_v[t] {
                        continue;
                    }
                    let steps = self.shortest_path(w.cur, t).ok_or(Error::NoGlobalPath)?;
                    w.advance(self, steps);
                }
            }
            CoverMode::Edges => {
                for e in 0..self.edges.len() {
                    if w.seen_e[e] {
                        continue;
                    }
                    let mut steps = self.shortest_path(w.cur, self.source[e]).ok_or(Error::NoGlobalPath)?;
                    steps.push(e);
                    w.advance(self, steps);
                }
            }
        }
        let back = self.shortest_path(w.cur, start).ok_or(Error::NoGlobalPath)?;
        w.advance(self, back);
        if w.path.is_empty() {
            return self.shortest_cycle_through(start).ok_or(Error::NoGlobalPath);
        }
        Ok(self.to_closed(&w.path))
    }
}

struct Walk {
    path: Vec<usize>,
    cur: usize,
    seen_v: Vec<bool>,
    seen_e: Vec<bool>,
}

impl Walk {
    fn advance(&mut self, g: &DeBruijnGraph, steps: Vec<usize>) {
        for e in steps {
            self.seen_e[e] = true;
            self.seen_v[g.target[e]] = true;
            self.path.push(e);
            self.cur = g.target[e];
        }
    }
}

/// A failed period bound: the associated periodic word of a global path at
/// `order` has minimal period below the number of vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodDeficit {
    pub order: usize,
    pub period: usize,
    pub complexity: usize,
}

/// Checks `period(η_k) >= comp(k)` for each `(k, path)` pair.
pub fn check_period_growth(slice: &DictionarySlice, paths: &[(usize, ClosedPath)]) -> Vec<PeriodDeficit> {
    paths
        .iter()
        .filter_map(|(k, p)| {
            let period = p.periodic_word().minimal_period();
            let complexity = slice.words(*k).len();
            (period < complexity).then_some(PeriodDeficit { order: *k, period, complexity })
        })
        .collect()
}
