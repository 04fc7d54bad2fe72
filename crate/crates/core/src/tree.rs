//! Plane trees, planted plane trees and caterpillars.
//!
//! A plane tree stores, at every vertex, its neighbours in cyclic order.
//! Planted trees are written as balanced-parenthesis (Dyck) words read
//! from the distinguished edge-end.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::diagram::ChordDiagram;
use crate::error::{Error, Result};
use crate::updown::UpDownWord;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneTree {
    adjacency: Vec<Vec<usize>>,
}

impl PlaneTree {
    pub fn from_adjacency(adjacency: Vec<Vec<usize>>) -> Result<Self> {
        let n = adjacency.len();
        if n == 0 {
            return Err(Error::WrongShape("a tree needs at least one vertex".into()));
        }
        let mut edges = 0;
        for (v, nbrs) in adjacency.iter().enumerate() {
            let distinct: BTreeSet<_> = nbrs.iter().collect();
            if distinct.len() != nbrs.len() {
                return Err(Error::WrongShape(format!(
                    "vertex {v} has a repeated neighbour"
                )));
            }
            for &w in nbrs {
                if w >= n || w == v || !adjacency[w].contains(&v) {
                    return Err(Error::WrongShape(format!("edge {v}-{w} is not symmetric")));
                }
            }
            edges += nbrs.len();
        }
        if edges != 2 * (n - 1) {
            return Err(Error::WrongShape(format!(
                "{n} vertices but {} edges",
                edges / 2
            )));
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::WrongShape("graph is disconnected".into()));
        }
        Ok(PlaneTree { adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.len() - 1
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// The reflected tree: every cyclic order reversed.
    pub fn mirror(&self) -> PlaneTree {
        let adjacency = self
            .adjacency
            .iter()
            .map(|nbrs| nbrs.iter().rev().copied().collect())
            .collect();
        PlaneTree { adjacency }
    }

    /// All edge-ends `(vertex, index into its neighbour list)`.
    pub fn half_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(v, nbrs)| (0..nbrs.len()).map(move |k| (v, k)))
    }

    /// Dyck word of the tree planted at edge-end `(v, k)`.
    pub fn planted_code(&self, v: usize, k: usize) -> PlantedTree {
        let mut code = String::with_capacity(2 * self.edge_count());
        let deg = self.degree(v);
        for t in 0..deg {
            let w = self.adjacency[v][(k + t) % deg];
            code.push('(');
            self.subtree_code(w, v, &mut code);
            code.push(')');
        }
        PlantedTree { code }
    }

    fn subtree_code(&self, w: usize, parent: usize, code: &mut String) {
        let nbrs = &self.adjacency[w];
        let deg = nbrs.len();
        let p = nbrs
            .iter()
            .position(|&x| x == parent)
            .expect("parent is a neighbour");
        for t in 1..deg {
            let x = nbrs[(p + t) % deg];
            code.push('(');
            self.subtree_code(x, w, code);
            code.push(')');
        }
    }

    /// Distinct plantings of this tree (orientation-preserving isomorphism).
    pub fn plantings(&self) -> BTreeSet<PlantedTree> {
        self.half_edges()
            .map(|(v, k)| self.planted_code(v, k))
            .collect()
    }

    /// Minimal planted code; equal for trees related by an
    /// orientation-preserving isomorphism.
    pub fn canonical_code(&self) -> String {
        self.plantings()
            .into_iter()
            .next()
            .map(|p| p.code)
            .unwrap_or_default()
    }

    /// Canonical code up to reflection as well.
    pub fn signature(&self) -> String {
        self.canonical_code().min(self.mirror().canonical_code())
    }

    /// `|Aut(T)|` over orientation-preserving automorphisms.
    pub fn automorphism_count(&self) -> usize {
        if self.edge_count() == 0 {
            return 1;
        }
        let canonical = self.canonical_code();
        self.half_edges()
            .filter(|&(v, k)| self.planted_code(v, k).code == canonical)
            .count()
    }

    /// Whether `T` and its mirror `T'` are isomorphic as plane trees.
    pub fn is_achiral(&self) -> bool {
        self.canonical_code() == self.mirror().canonical_code()
    }

    /// Number of distinct plantings of `T` and `T'`:
    /// `2e / |Aut(T)|` if `T` is isomorphic to `T'`, twice that otherwise.
    pub fn plantings_count_formula(&self) -> usize {
        let base = 2 * self.edge_count() / self.automorphism_count();
        if self.is_achiral() {
            base
        } else {
            2 * base
        }
    }

    /// Same count by listing every planting of `T` and `T'` and deduplicating.
    pub fn plantings_count_brute(&self) -> usize {
        let mut all = self.plantings();
        all.extend(self.mirror().plantings());
        all.len()
    }

    /// Automorphisms of the pair `{T, T'}`: plane automorphisms of `T`,
    /// doubled when `T` is isomorphic to its mirror.
    pub fn pair_automorphism_count(&self) -> usize {
        let a = self.automorphism_count();
        if self.is_achiral() {
            2 * a
        } else {
            a
        }
    }

    pub fn is_path(&self) -> bool {
        self.adjacency.iter().all(|n| n.len() <= 2)
    }

    /// Degree sequence of the spine if the tree is a caterpillar; the
    /// lexicographically smaller of the two reading directions.
    pub fn caterpillar_type(&self) -> Option<CaterpillarType> {
        let n = self.vertex_count();
        if n == 1 {
            return None;
        }
        if n == 2 {
            return Some(CaterpillarType { delta: Vec::new() });
        }
        let internal: Vec<bool> = self.adjacency.iter().map(|a| a.len() >= 2).collect();
        let internal_nbrs = |v: usize| -> Vec<usize> {
            self.adjacency[v]
                .iter()
                .copied()
                .filter(|&w| internal[w])
                .collect()
        };
        let spine_vertices: Vec<usize> = (0..n).filter(|&v| internal[v]).collect();
        if spine_vertices.iter().any(|&v| internal_nbrs(v).len() > 2) {
            return None;
        }
        let start = *spine_vertices
            .iter()
            .find(|&&v| internal_nbrs(v).len() <= 1)
            .expect("the internal vertices of a tree form a tree");
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = internal_nbrs(cur).into_iter().find(|&w| w != prev);
            match next {
                Some(w) => {
                    order.push(w);
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
        debug_assert_eq!(order.len(), spine_vertices.len());
        let forward: Vec<usize> = order.iter().map(|&v| 2 * (self.degree(v) - 1)).collect();
        let mut backward = forward.clone();
        backward.reverse();
        Some(CaterpillarType {
            delta: forward.min(backward),
        })
    }
}

/// A planted plane tree as its Dyck word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlantedTree {
    code: String,
}

impl PlantedTree {
    pub fn parse(code: &str) -> Result<Self> {
        let mut depth: i64 = 0;
        for c in code.chars() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                _ => return Err(Error::InvalidDyckWord(code.to_string())),
            }
            if depth < 0 {
                return Err(Error::InvalidDyckWord(code.to_string()));
            }
        }
        if depth != 0 {
            return Err(Error::InvalidDyckWord(code.to_string()));
        }
        Ok(PlantedTree {
            code: code.to_string(),
        })
    }

    pub fn code(&self) -> &str {
        &self.code
    }

    pub fn vertex_count(&self) -> usize {
        self.code.len() / 2 + 1
    }

    /// The ordered rooted tree: vertex 0 is the root; every other vertex
    /// lists its parent first, then its children.
    pub fn to_plane_tree(&self) -> PlaneTree {
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new()];
        let mut stack = vec![0];
        for c in self.code.chars() {
            if c == '(' {
                let parent = *stack.last().expect("root stays on the stack");
                let child = adjacency.len();
                adjacency.push(vec![parent]);
                adjacency[parent].push(child);
                stack.push(child);
            } else {
                stack.pop();
            }
        }
        PlaneTree { adjacency }
    }

    /// The chord diagram dual to this tree: circle positions are the letters
    /// of the word and chords join matching parentheses.
    pub fn to_diagram(&self) -> Result<ChordDiagram> {
        let mut matching = vec![0; self.code.len()];
        let mut stack = Vec::new();
        for (i, c) in self.code.chars().enumerate() {
            if c == '(' {
                stack.push(i);
            } else {
                let j = stack.pop().expect("word is balanced");
                matching[i] = j;
                matching[j] = i;
            }
        }
        ChordDiagram::new(matching)
    }
}

impl fmt::Display for PlantedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code)
    }
}

fn dyck_words(pairs: usize) -> Vec<String> {
    fn go(open: usize, close: usize, cur: &mut String, out: &mut Vec<String>) {
        if open == 0 && close == 0 {
            out.push(cur.clone());
            return;
        }
        if open > 0 {
            cur.push('(');
            go(open - 1, close + 1, cur, out);
            cur.pop();
        }
        if close > 0 {
            cur.push(')');
            go(open, close - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(pairs, 0, &mut String::new(), &mut out);
    out
}

/// All planted plane trees on `n` vertices, grouped by the canonical code of
/// the underlying plane tree.
pub fn enumerate_planted(n: usize) -> Result<BTreeMap<String, Vec<PlantedTree>>> {
    if n < 2 {
        return Err(Error::DegreeTooSmall { min: 2, got: n });
    }
    let mut groups: BTreeMap<String, Vec<PlantedTree>> = BTreeMap::new();
    for code in dyck_words(n - 1) {
        let planted = PlantedTree { code };
        let key = planted.to_plane_tree().canonical_code();
        groups.entry(key).or_default().push(planted);
    }
    Ok(groups)
}

/// The spine description `(δ_1, …, δ_k)` of a caterpillar, with
/// `δ_i = 2(d_i - 1)` for spine degrees `d_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CaterpillarType {
    delta: Vec<usize>,
}

impl CaterpillarType {
    pub fn new(delta: Vec<usize>) -> Result<Self> {
        if delta.iter().any(|&d| d < 2 || d % 2 != 0) {
            return Err(Error::InvalidCaterpillarType(delta));
        }
        Ok(CaterpillarType { delta })
    }

    /// The path with `k + 2` vertices.
    pub fn path(k: usize) -> Self {
        CaterpillarType { delta: vec![2; k] }
    }

    pub fn delta(&self) -> &[usize] {
        &self.delta
    }

    pub fn spine_len(&self) -> usize {
        self.delta.len()
    }

    pub fn spine_degrees(&self) -> Vec<usize> {
        self.delta.iter().map(|d| d / 2 + 1).collect()
    }

    /// `e = 1 + Σδ_i / 2`.
    pub fn edge_count(&self) -> usize {
        1 + self.delta.iter().sum::<usize>() / 2
    }

    /// `U^{δ_1} D^{δ_2} U^{δ_3} …`, of length `2e - 2`.
    pub fn word(&self) -> UpDownWord {
        let mut w = String::new();
        for (i, &d) in self.delta.iter().enumerate() {
            let c = if i % 2 == 0 { 'U' } else { 'D' };
            w.extend(std::iter::repeat_n(c, d));
        }
        UpDownWord::parse(&w).expect("only U and D are emitted")
    }

    /// A plane caterpillar of this type, with all extra leaves on one side.
    pub fn build_tree(&self) -> PlaneTree {
        let k = self.delta.len();
        if k == 0 {
            return PlaneTree {
                adjacency: vec![vec![1], vec![0]],
            };
        }
        // Vertices: 0 = first path end, 1..=k spine, k + 1 = last path end,
        // then extra leaves.
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); k + 2];
        for i in 1..=k {
            adjacency[i].push(i - 1);
            adjacency[i - 1].push(i);
        }
        adjacency[k].push(k + 1);
        adjacency[k + 1].push(k);
        for (i, d) in self.spine_degrees().into_iter().enumerate() {
            let v = i + 1;
            for _ in 0..d - 2 {
                let leaf = adjacency.len();
                adjacency.push(vec![v]);
                adjacency[v].push(leaf);
            }
        }
        PlaneTree::from_adjacency(adjacency).expect("caterpillar construction is a tree")
    }
}

impl fmt::Display for CaterpillarType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.delta.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
