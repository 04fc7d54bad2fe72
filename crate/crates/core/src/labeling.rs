//! Proper labelings of oriented chord diagrams and the counts built on them.
//!
//! Labels are `1..=2m`, read cyclically. A labeling is proper when, along the
//! directed boundary of every face, the labels increase cyclically, i.e. the
//! boundary sequence has exactly one cyclic descent.
//!
//! Two labeled oriented diagrams are equivalent when a symmetry of the disk
//! (rotation or reflection) carries one onto the other, orientation and
//! labels included. A labeled diagram is keyed by `(polarity, labels)` and
//! classes are represented by their minimal key over the symmetry group.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use crate::diagram::{Chord, ChordDiagram, OrientedDiagram, Polarity, SymmetryGroup};
use crate::error::{Error, Result};
use crate::tree::enumerate_planted;
use crate::updown::sharp_caterpillar;

use num_bigint::BigUint;

/// Exactly one cyclic descent; sequences of length 0 or 1 qualify trivially.
pub fn is_cyclically_ordered(seq: &[u32]) -> bool {
    seq.len() < 2 || cyclic_descents(seq.iter().copied()) == 1
}

fn cyclic_descents(seq: impl Iterator<Item = u32> + Clone) -> usize {
    let mut it = seq.clone();
    let Some(first) = it.next() else { return 0 };
    let mut prev = first;
    let mut count = 0;
    for x in it {
        if prev > x {
            count += 1;
        }
        prev = x;
    }
    if prev > first {
        count += 1;
    }
    count
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledDiagram {
    oriented: OrientedDiagram,
    labels: Vec<u32>,
}

impl LabeledDiagram {
    /// `labels[i]` is the label at position `i`; must be a bijection onto
    /// `1..=2m`.
    pub fn new(oriented: OrientedDiagram, labels: Vec<u32>) -> Result<Self> {
        let n = oriented.diagram().order();
        if labels.len() != n {
            return Err(Error::InvalidLabeling(format!(
                "{} labels for {n} positions",
                labels.len()
            )));
        }
        let mut seen = vec![false; n + 1];
        for &l in &labels {
            if l == 0 || l as usize > n || seen[l as usize] {
                return Err(Error::InvalidLabeling(format!(
                    "{labels:?} is not a bijection onto 1..={n}"
                )));
            }
            seen[l as usize] = true;
        }
        Ok(LabeledDiagram { oriented, labels })
    }

    pub fn oriented(&self) -> &OrientedDiagram {
        &self.oriented
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn is_proper(&self) -> bool {
        (0..self.oriented.faces().len()).all(|f| {
            let seq: Vec<u32> = self
                .oriented
                .directed_boundary(f)
                .iter()
                .map(|&v| self.labels[v])
                .collect();
            is_cyclically_ordered(&seq)
        })
    }
}

/// Backtracking search over proper labelings of one oriented diagram.
struct LabelingSearch {
    n: usize,
    /// Positions in assignment order: face by face, so constraints bite early.
    order: Vec<usize>,
    boundaries: Vec<Vec<usize>>,
    faces_at: Vec<Vec<usize>>,
}

impl LabelingSearch {
    fn new(oriented: &OrientedDiagram) -> Self {
        let n = oriented.diagram().order();
        let boundaries: Vec<Vec<usize>> = (0..oriented.faces().len())
            .map(|f| oriented.directed_boundary(f))
            .collect();
        let mut faces_at = vec![Vec::new(); n];
        for (f, b) in boundaries.iter().enumerate() {
            for &v in b {
                if !faces_at[v].contains(&f) {
                    faces_at[v].push(f);
                }
            }
        }
        // Largest faces first.
        let mut face_order: Vec<usize> = (0..boundaries.len()).collect();
        face_order.sort_by_key(|&f| std::cmp::Reverse(boundaries[f].len()));
        let mut placed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for f in face_order {
            for &v in &boundaries[f] {
                if !placed[v] {
                    placed[v] = true;
                    order.push(v);
                }
            }
        }
        LabelingSearch {
            n,
            order,
            boundaries,
            faces_at,
        }
    }

    fn face_ok(&self, f: usize, labels: &[u32]) -> bool {
        let assigned = self.boundaries[f]
            .iter()
            .map(|&v| labels[v])
            .filter(|&l| l != 0);
        cyclic_descents(assigned) <= 1
    }

    /// Visits every proper labeling, optionally with one label pinned.
    fn run(&self, pinned: Option<(usize, u32)>, visit: &mut dyn FnMut(&[u32])) {
        let mut labels = vec![0u32; self.n];
        let mut used = vec![false; self.n + 1];
        if let Some((pos, label)) = pinned {
            labels[pos] = label;
            used[label as usize] = true;
        }
        self.go(0, &mut labels, &mut used, visit);
    }

    fn go(
        &self,
        depth: usize,
        labels: &mut [u32],
        used: &mut [bool],
        visit: &mut dyn FnMut(&[u32]),
    ) {
        if depth == self.n {
            visit(labels);
            return;
        }
        let v = self.order[depth];
        if labels[v] != 0 {
            if self.faces_at[v].iter().all(|&f| self.face_ok(f, labels)) {
                self.go(depth + 1, labels, used, visit);
            }
            return;
        }
        for l in 1..=self.n as u32 {
            if used[l as usize] {
                continue;
            }
            labels[v] = l;
            if self.faces_at[v].iter().all(|&f| self.face_ok(f, labels)) {
                used[l as usize] = true;
                self.go(depth + 1, labels, used, visit);
                used[l as usize] = false;
            }
        }
        labels[v] = 0;
    }
}

/// Visits every proper labeling of `oriented`, optionally with `label` pinned
/// at `position`.
pub fn for_each_proper_labeling(
    oriented: &OrientedDiagram,
    pinned: Option<(usize, u32)>,
    mut visit: impl FnMut(&[u32]),
) {
    LabelingSearch::new(oriented).run(pinned, &mut visit);
}

pub fn count_proper_labelings(oriented: &OrientedDiagram, pinned: Option<(usize, u32)>) -> u64 {
    let mut count = 0u64;
    for_each_proper_labeling(oriented, pinned, |_| count += 1);
    count
}

/// Proper labelings of the given orientation with label 1 at `root`, with no
/// diameter check.
pub fn count_rooted_at(d: &ChordDiagram, root: usize, polarity: Polarity) -> Result<u64> {
    if root >= d.order() {
        return Err(Error::PositionOutOfRange(root));
    }
    let oriented = OrientedDiagram::new(d.clone(), polarity);
    Ok(count_proper_labelings(&oriented, Some((root, 1))))
}

/// `♯_r(D)`: proper labelings of `D+` with label 1 at `root`. The root must
/// not be an endpoint of the diameter.
pub fn count_rooted(d: &ChordDiagram, root: usize) -> Result<u64> {
    if root >= d.order() {
        return Err(Error::PositionOutOfRange(root));
    }
    if let Some(Chord(a, b)) = d.diameter()? {
        if root == a || root == b {
            return Err(Error::RootOnDiameter(root));
        }
    }
    count_rooted_at(d, root, Polarity::Plus)
}

/// Proper labelings of `D+` with label 1 at `root`, counted up to the
/// automorphisms of `D+` fixing the root. Equals `♯_r(D)` at a generic root
/// and half of it at an endpoint of the diameter.
pub fn count_rooted_classes(d: &ChordDiagram, root: usize) -> Result<u64> {
    if root >= d.order() {
        return Err(Error::PositionOutOfRange(root));
    }
    let n = d.order();
    let group = d.symmetry_group();
    let stabilizer = SymmetryGroup {
        points: n,
        elements: group
            .elements
            .iter()
            .filter(|s| !s.swaps_orientation && s.map.apply(root, n) == root)
            .cloned()
            .collect(),
    };
    let oriented = OrientedDiagram::new(d.clone(), Polarity::Plus);
    let mut classes = HashSet::new();
    for_each_proper_labeling(&oriented, Some((root, 1)), |labels| {
        classes.insert(canonical_key(
            &stabilizer,
            &make_key(Polarity::Plus, labels),
        ));
    });
    Ok(classes.len() as u64)
}

/// Smallest position that is not an endpoint of the diameter.
pub fn generic_root(d: &ChordDiagram) -> Result<usize> {
    let diameter = d.diameter()?;
    (0..d.order())
        .find(|&p| !matches!(diameter, Some(Chord(a, b)) if p == a || p == b))
        .ok_or(Error::TooFewChords {
            min: 2,
            got: d.chord_count(),
        })
}

/// Key of a labeled oriented diagram: polarity bit followed by labels.
type Key = Vec<u8>;

fn make_key(polarity: Polarity, labels: &[u32]) -> Key {
    let mut key = Vec::with_capacity(labels.len() + 1);
    key.push(match polarity {
        Polarity::Plus => 0,
        Polarity::Minus => 1,
    });
    key.extend(labels.iter().map(|&l| l as u8));
    key
}

fn canonical_key(group: &SymmetryGroup, key: &[u8]) -> Key {
    let n = group.points;
    let mut best: Option<Key> = None;
    let mut image = vec![0u8; n + 1];
    for s in &group.elements {
        image[0] = key[0] ^ u8::from(s.swaps_orientation);
        for i in 0..n {
            image[1 + s.map.apply(i, n)] = key[1 + i];
        }
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image.clone());
        }
    }
    best.expect("group contains the identity")
}

fn shift_labels(key: &[u8], n: usize) -> Key {
    let mut out = key.to_vec();
    for l in &mut out[1..] {
        *l = if *l as usize == n { 1 } else { *l + 1 };
    }
    out
}

/// Classes of proper labelings of `{D+, D-}` under the symmetry group.
pub fn labeled_classes(d: &ChordDiagram) -> HashSet<Key> {
    let group = d.symmetry_group();
    let mut classes = HashSet::new();
    for polarity in [Polarity::Plus, Polarity::Minus] {
        let oriented = OrientedDiagram::new(d.clone(), polarity);
        for_each_proper_labeling(&oriented, None, |labels| {
            classes.insert(canonical_key(&group, &make_key(polarity, labels)));
        });
    }
    classes
}

/// Orbit lengths of the label-shift action on the classes of one diagram,
/// sorted descending.
pub fn shift_orbits(d: &ChordDiagram, classes: &HashSet<Key>) -> Vec<usize> {
    let group = d.symmetry_group();
    let n = d.order();
    let mut sorted: Vec<&Key> = classes.iter().collect();
    sorted.sort();
    let mut visited: HashSet<Key> = HashSet::new();
    let mut lengths = Vec::new();
    for start in sorted {
        if visited.contains(start) {
            continue;
        }
        let mut len = 0;
        let mut cur = start.clone();
        loop {
            visited.insert(cur.clone());
            len += 1;
            cur = canonical_key(&group, &shift_labels(&cur, n));
            if cur == *start {
                break;
            }
            assert!(classes.contains(&cur), "label shift preserves properness");
        }
        lengths.push(len);
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    lengths
}

/// Everything known about one diagram's labelings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramCount {
    pub diagram: ChordDiagram,
    /// `♯_r(D)` at a generic root.
    pub sharp_r: u64,
    /// `π(D)`: distinct plantings of `T(D)` and `T'(D)`.
    pub pi: u64,
    /// `♯(D)`, by enumeration with deduplication.
    pub total: u64,
    /// Orbit lengths of the label-shift action, sorted descending.
    pub orbits: Vec<usize>,
}

impl DiagramCount {
    /// `(length, number of orbits of that length)`, longest first.
    pub fn orbit_histogram(&self) -> Vec<(usize, usize)> {
        let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
        for &l in &self.orbits {
            *hist.entry(l).or_default() += 1;
        }
        hist.into_iter().rev().collect()
    }
}

/// Counts the labelings of one diagram and checks `♯(D) = π(D) · ♯_r(D)`.
pub fn analyze_diagram(d: &ChordDiagram) -> Result<DiagramCount> {
    if d.chord_count() < 2 {
        return Err(Error::TooFewChords {
            min: 2,
            got: d.chord_count(),
        });
    }
    let sharp_r = count_rooted(d, generic_root(d)?)?;
    let tree = d.associated_tree();
    let pi = tree.plantings_count_brute() as u64;
    let formula_pi = tree.plantings_count_formula() as u64;
    if pi != formula_pi {
        return Err(Error::CrossCheck(format!(
            "{d}: plantings by enumeration {pi} but by formula {formula_pi}"
        )));
    }
    let classes = labeled_classes(d);
    let total = classes.len() as u64;
    if total != pi * sharp_r {
        return Err(Error::CrossCheck(format!(
            "{d}: {total} labeled classes but π(D)·♯_r(D) = {pi}·{sharp_r}"
        )));
    }
    let orbits = shift_orbits(d, &classes);
    Ok(DiagramCount {
        diagram: d.clone(),
        sharp_r,
        pi,
        total,
        orbits,
    })
}

/// `♯(D)`: nonequivalent proper labelings of `D+` and `D-`.
pub fn count_diagram_total(d: &ChordDiagram) -> Result<u64> {
    analyze_diagram(d).map(|c| c.total)
}

fn chords_for_degree(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::DegreeTooSmall { min: 3, got: n });
    }
    Ok(n - 1)
}

/// Per-diagram counts for every canonical diagram of order `2n - 2`.
pub fn analyze_degree(n: usize) -> Result<Vec<DiagramCount>> {
    let m = chords_for_degree(n)?;
    ChordDiagram::enumerate(m)?
        .par_iter()
        .map(analyze_diagram)
        .collect()
}

/// `♯_n^R` by direct enumeration; `1` for `n = 1, 2`.
pub fn sharp_real(n: usize) -> Result<u64> {
    match n {
        0 => Err(Error::DegreeTooSmall { min: 1, got: 0 }),
        1 | 2 => Ok(1),
        _ => Ok(analyze_degree(n)?.iter().map(|c| c.total).sum()),
    }
}

/// `♯_n^R` as a sum of `♯(T)` over planted trees on `n` vertices.
pub fn sharp_real_via_planted_trees(n: usize) -> Result<u64> {
    chords_for_degree(n)?;
    let groups = enumerate_planted(n)?;
    let per_tree: Vec<Result<u64>> = groups
        .par_iter()
        .map(|(_, plantings)| {
            let d = plantings[0].to_diagram()?;
            let sharp_t = count_rooted(&d, generic_root(&d)?)?;
            Ok(plantings.len() as u64 * sharp_t)
        })
        .collect();
    per_tree.into_iter().sum()
}

/// `♯_n^R` from the caterpillar formula, or `None` when some diagram of this
/// order is not a caterpillar.
pub fn sharp_real_via_caterpillars(n: usize) -> Result<Option<BigUint>> {
    let m = chords_for_degree(n)?;
    let mut total = BigUint::default();
    for d in ChordDiagram::enumerate(m)? {
        let Some(kind) = d.associated_tree().caterpillar_type() else {
            return Ok(None);
        };
        let group = d.symmetry_group();
        total += sharp_caterpillar(
            &kind,
            group.preserving_count(),
            group.is_orientation_symmetric(),
        )?;
    }
    Ok(Some(total))
}

/// Orbits of the label-shift group `C_{2n-2}` on all labeled classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition {
    pub group_order: usize,
    /// Per diagram, orbit lengths sorted descending.
    pub per_diagram: Vec<(ChordDiagram, Vec<usize>)>,
}

impl OrbitDecomposition {
    pub fn orbit_count(&self) -> usize {
        self.per_diagram.iter().map(|(_, o)| o.len()).sum()
    }

    pub fn class_count(&self) -> usize {
        self.per_diagram.iter().flat_map(|(_, o)| o.iter()).sum()
    }
}

pub fn orbit_decomposition(n: usize) -> Result<OrbitDecomposition> {
    let counts = analyze_degree(n)?;
    Ok(OrbitDecomposition {
        group_order: 2 * n - 2,
        per_diagram: counts.into_iter().map(|c| (c.diagram, c.orbits)).collect(),
    })
}

/// `♯~_n^R`: number of connected components, i.e. label-shift orbits.
pub fn components(n: usize) -> Result<usize> {
    match n {
        0 => Err(Error::DegreeTooSmall { min: 1, got: 0 }),
        1 | 2 => Ok(1),
        _ => Ok(orbit_decomposition(n)?.orbit_count()),
    }
}
