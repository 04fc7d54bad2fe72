//! Planar chord diagrams: noncrossing perfect matchings on `2m` points of a
//! circle, together with their faces, proper orientations, dihedral
//! symmetries, diameter and associated plane tree.
//!
//! Positions `0..2m` are placed counterclockwise on the circle. The boundary
//! arc `i` runs from position `i` to position `i + 1 (mod 2m)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tree::PlaneTree;

/// A chord, stored with its smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chord(pub usize, pub usize);

impl Chord {
    pub fn new(a: usize, b: usize) -> Self {
        if a < b {
            Chord(a, b)
        } else {
            Chord(b, a)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChordDiagram {
    matching: Vec<usize>,
}

impl ChordDiagram {
    /// Builds a diagram from its partner array, checking that it is a
    /// fixed-point-free noncrossing involution.
    pub fn new(matching: Vec<usize>) -> Result<Self> {
        let order = matching.len();
        if order < 2 || !order.is_multiple_of(2) {
            return Err(Error::InvalidOrder(order));
        }
        for (i, &p) in matching.iter().enumerate() {
            if p >= order {
                return Err(Error::PositionOutOfRange(p));
            }
            if p == i {
                return Err(Error::InvalidMatching(format!(
                    "position {i} is matched to itself"
                )));
            }
            if matching[p] != i {
                return Err(Error::InvalidMatching(format!(
                    "position {i} -> {p} but {p} -> {}",
                    matching[p]
                )));
            }
        }
        // a < b < c < d with a~c and b~d is a crossing.
        for (a, &c) in matching.iter().enumerate() {
            if c < a {
                continue;
            }
            for (b, &d) in matching.iter().enumerate().take(c).skip(a + 1) {
                if d > c || d < a {
                    return Err(Error::Crossing(a, c, b.min(d), b.max(d)));
                }
            }
        }
        Ok(ChordDiagram { matching })
    }

    pub fn from_chords(order: usize, chords: &[(usize, usize)]) -> Result<Self> {
        let mut matching = vec![usize::MAX; order];
        for &(a, b) in chords {
            if a >= order || b >= order {
                return Err(Error::PositionOutOfRange(a.max(b)));
            }
            if matching[a] != usize::MAX || matching[b] != usize::MAX {
                return Err(Error::InvalidMatching(format!(
                    "chord ({a}, {b}) reuses a position"
                )));
            }
            matching[a] = b;
            matching[b] = a;
        }
        if let Some(i) = matching.iter().position(|&p| p == usize::MAX) {
            return Err(Error::InvalidMatching(format!("position {i} is unmatched")));
        }
        ChordDiagram::new(matching)
    }

    /// Number of points on the circle, `2m`.
    pub fn order(&self) -> usize {
        self.matching.len()
    }

    /// Number of chords, `m`.
    pub fn chord_count(&self) -> usize {
        self.matching.len() / 2
    }

    pub fn partner(&self, i: usize) -> usize {
        self.matching[i]
    }

    pub fn matching(&self) -> &[usize] {
        &self.matching
    }

    pub fn chords(&self) -> Vec<Chord> {
        (0..self.order())
            .filter(|&i| i < self.matching[i])
            .map(|i| Chord(i, self.matching[i]))
            .collect()
    }

    /// Every noncrossing perfect matching on `2m` points, in lexicographic
    /// order of partner arrays. There are `Catalan(m)` of them.
    pub fn raw_matchings(m: usize) -> Result<Vec<ChordDiagram>> {
        if m == 0 {
            return Err(Error::TooFewChords { min: 1, got: 0 });
        }
        let mut out = Vec::new();
        let mut matching = vec![0; 2 * m];
        fill_noncrossing(&mut matching, 0, 2 * m, &mut |mat| {
            out.push(ChordDiagram {
                matching: mat.to_vec(),
            })
        });
        out.sort();
        Ok(out)
    }

    /// One canonical representative per class of diagrams under rotations
    /// and reflections of the circle, sorted.
    pub fn enumerate(m: usize) -> Result<Vec<ChordDiagram>> {
        let reps: BTreeSet<ChordDiagram> = Self::raw_matchings(m)?
            .into_iter()
            .map(|d| d.canonical())
            .collect();
        Ok(reps.into_iter().collect())
    }

    /// Image of the diagram under a dihedral relabeling of the positions.
    pub fn transform(&self, g: DihedralMap) -> ChordDiagram {
        let n = self.order();
        let mut matching = vec![0; n];
        for i in 0..n {
            matching[g.apply(i, n)] = g.apply(self.matching[i], n);
        }
        ChordDiagram { matching }
    }

    /// Lexicographically minimal partner array over all `4m` dihedral
    /// relabelings.
    pub fn canonical(&self) -> ChordDiagram {
        DihedralMap::all(self.order())
            .map(|g| self.transform(g))
            .min()
            .expect("dihedral group is nonempty")
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    /// Face traversal permutation on arcs: after arc `i` the boundary of its
    /// face follows the chord at `i + 1` and continues with the arc starting
    /// at the partner of `i + 1`.
    fn next_arc(&self, arc: usize) -> usize {
        self.matching[(arc + 1) % self.order()]
    }

    /// The `m + 1` faces, ordered by their smallest arc. Face 0 contains arc 0.
    pub fn faces(&self) -> Vec<Face> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut faces = Vec::with_capacity(self.chord_count() + 1);
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut arcs = Vec::new();
            let mut arc = start;
            while !seen[arc] {
                seen[arc] = true;
                arcs.push(arc);
                arc = self.next_arc(arc);
            }
            let vertices = arcs.iter().flat_map(|&a| [a, (a + 1) % n]).collect();
            faces.push(Face { arcs, vertices });
        }
        faces
    }

    /// Index of the face containing each arc.
    pub fn face_of_arc(&self) -> Vec<usize> {
        let mut out = vec![0; self.order()];
        for (f, face) in self.faces().iter().enumerate() {
            for &a in &face.arcs {
                out[a] = f;
            }
        }
        out
    }

    /// The two faces bordering the chord with endpoint `a`: the face of the
    /// arc ending at `a` and the face of the arc ending at its partner.
    pub fn faces_of_chord(&self, a: usize, face_of_arc: &[usize]) -> (usize, usize) {
        let n = self.order();
        let b = self.matching[a];
        (face_of_arc[(a + n - 1) % n], face_of_arc[(b + n - 1) % n])
    }

    /// `(D+, D-)`. `D+` is the orientation in which the face containing
    /// arc 0 is positive.
    pub fn orientations(&self) -> (OrientedDiagram, OrientedDiagram) {
        let plus = OrientedDiagram::plus(self.clone());
        let minus = plus.reversed();
        (plus, minus)
    }

    pub fn symmetry_group(&self) -> SymmetryGroup {
        let n = self.order();
        let face_of_arc = self.face_of_arc();
        let signs = face_signs(self, &face_of_arc);
        let elements = DihedralMap::all(n)
            .filter(|&g| self.transform(g) == *self)
            .map(|g| Symmetry {
                map: g,
                swaps_orientation: swaps_orientation(g, n, &face_of_arc, &signs),
            })
            .collect();
        SymmetryGroup {
            points: n,
            elements,
        }
    }

    /// All chords whose endpoints are both fixed by some nontrivial symmetry.
    pub fn diameters(&self) -> Vec<Chord> {
        let n = self.order();
        let group = self.symmetry_group();
        self.chords()
            .into_iter()
            .filter(|c| {
                group.elements.iter().any(|s| {
                    !s.map.is_identity() && s.map.apply(c.0, n) == c.0 && s.map.apply(c.1, n) == c.1
                })
            })
            .collect()
    }

    /// The diameter, if any. More than one diameter is reported as an error.
    pub fn diameter(&self) -> Result<Option<Chord>> {
        let ds = self.diameters();
        match ds.len() {
            0 => Ok(None),
            1 => Ok(Some(ds[0])),
            _ => Err(Error::MultipleDiameters(
                ds.iter().map(|c| (c.0, c.1)).collect(),
            )),
        }
    }

    /// Face-adjacency tree. Tree vertex `f` is face `f`; its neighbors are
    /// listed in the order the chords occur along the positive traversal of
    /// the face boundary.
    pub fn associated_tree(&self) -> PlaneTree {
        let n = self.order();
        let face_of_arc = self.face_of_arc();
        let adjacency = self
            .faces()
            .iter()
            .map(|face| {
                face.arcs
                    .iter()
                    .map(|&a| {
                        let end = (a + 1) % n;
                        let partner = self.matching[end];
                        face_of_arc[(partner + n - 1) % n]
                    })
                    .collect()
            })
            .collect();
        PlaneTree::from_adjacency(adjacency).expect("face adjacency of a chord diagram is a tree")
    }
}

fn fill_noncrossing(matching: &mut [usize], lo: usize, hi: usize, emit: &mut dyn FnMut(&[usize])) {
    // Matches positions lo..hi; recursion on the partner of `lo`.
    fn go(matching: &mut [usize], stack: &mut Vec<(usize, usize)>, emit: &mut dyn FnMut(&[usize])) {
        let Some((lo, hi)) = stack.pop() else {
            emit(matching);
            return;
        };
        if lo == hi {
            go(matching, stack, emit);
            stack.push((lo, hi));
            return;
        }
        let mut k = lo + 1;
        while k < hi {
            matching[lo] = k;
            matching[k] = lo;
            stack.push((k + 1, hi));
            stack.push((lo + 1, k));
            go(matching, stack, emit);
            stack.pop();
            stack.pop();
            k += 2;
        }
        stack.push((lo, hi));
    }
    let mut stack = vec![(lo, hi)];
    go(matching, &mut stack, emit);
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "order={}; matching=[", self.order())?;
        for (i, p) in self.matching.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for ChordDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected `order=2m; matching=[...]`, got {s:?}"));
        let (order, matching) = s.trim().split_once(';').ok_or_else(bad)?;
        let order: usize = order
            .trim()
            .strip_prefix("order=")
            .ok_or_else(bad)?
            .parse()
            .map_err(|_| bad())?;
        let list = matching
            .trim()
            .strip_prefix("matching=[")
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let matching: Vec<usize> = if list.trim().is_empty() {
            Vec::new()
        } else {
            list.split(',')
                .map(|x| x.trim().parse().map_err(|_| bad()))
                .collect::<Result<_>>()?
        };
        if matching.len() != order {
            return Err(Error::Parse(format!(
                "order={order} but matching has {} entries",
                matching.len()
            )));
        }
        ChordDiagram::new(matching)
    }
}

/// A face, given by its boundary arcs in traversal order and the vertex
/// sequence of the positive traversal `a0, a0+1, a1, a1+1, ...` where
/// consecutive vertices alternate between arc and chord steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub arcs: Vec<usize>,
    pub vertices: Vec<usize>,
}

impl Face {
    /// Number of edges on the boundary (arcs plus chords).
    pub fn boundary_len(&self) -> usize {
        self.vertices.len()
    }

    pub fn chord_count(&self) -> usize {
        self.arcs.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    Plus,
    Minus,
}

impl Polarity {
    pub fn flip(self) -> Polarity {
        match self {
            Polarity::Plus => Polarity::Minus,
            Polarity::Minus => Polarity::Plus,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    Arc,
    Chord,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectedEdge {
    pub from: usize,
    pub to: usize,
    pub kind: EdgeKind,
}

fn face_signs(d: &ChordDiagram, face_of_arc: &[usize]) -> Vec<Sign> {
    // Adjacent faces get opposite signs; the face of arc 0 is positive.
    let faces = d.chord_count() + 1;
    let mut signs: Vec<Option<Sign>> = vec![None; faces];
    signs[face_of_arc[0]] = Some(Sign::Positive);
    let mut stack = vec![face_of_arc[0]];
    let chords = d.chords();
    let mut adjacency = vec![Vec::new(); faces];
    for c in chords {
        let (f, g) = d.faces_of_chord(c.0, face_of_arc);
        adjacency[f].push(g);
        adjacency[g].push(f);
    }
    while let Some(f) = stack.pop() {
        let s = signs[f].expect("visited faces carry a sign");
        for &g in &adjacency[f] {
            match signs[g] {
                None => {
                    signs[g] = Some(s.flip());
                    stack.push(g);
                }
                Some(t) => assert_eq!(t, s.flip(), "face adjacency is not bipartite"),
            }
        }
    }
    signs
        .into_iter()
        .map(|s| s.expect("face tree is connected"))
        .collect()
}

fn swaps_orientation(g: DihedralMap, n: usize, face_of_arc: &[usize], signs: &[Sign]) -> bool {
    // Push arc 0 (0 -> 1, forward in D+) through g and compare with D+.
    if g.reflected {
        // 0 -> r, 1 -> r - 1: arc r - 1 traversed backwards.
        let arc = (g.rotation + n - 1) % n;
        signs[face_of_arc[arc]] == Sign::Positive
    } else {
        signs[face_of_arc[g.rotation % n]] == Sign::Negative
    }
}

/// A chord diagram with one of its two proper orientations fixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedDiagram {
    diagram: ChordDiagram,
    faces: Vec<Face>,
    signs: Vec<Sign>,
    polarity: Polarity,
}

impl OrientedDiagram {
    fn plus(diagram: ChordDiagram) -> Self {
        let faces = diagram.faces();
        let face_of_arc = diagram.face_of_arc();
        let signs = face_signs(&diagram, &face_of_arc);
        OrientedDiagram {
            diagram,
            faces,
            signs,
            polarity: Polarity::Plus,
        }
    }

    pub fn new(diagram: ChordDiagram, polarity: Polarity) -> Self {
        let plus = Self::plus(diagram);
        match polarity {
            Polarity::Plus => plus,
            Polarity::Minus => plus.reversed(),
        }
    }

    pub fn diagram(&self) -> &ChordDiagram {
        &self.diagram
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn polarity(&self) -> Polarity {
        self.polarity
    }

    /// Every edge reversed.
    pub fn reversed(&self) -> Self {
        OrientedDiagram {
            diagram: self.diagram.clone(),
            faces: self.faces.clone(),
            signs: self.signs.iter().map(|s| s.flip()).collect(),
            polarity: self.polarity.flip(),
        }
    }

    /// Vertex sequence of face `f` in the direction of its boundary cycle.
    pub fn directed_boundary(&self, f: usize) -> Vec<usize> {
        let face = &self.faces[f];
        match self.signs[f] {
            Sign::Positive => face.vertices.clone(),
            Sign::Negative => {
                let mut v = face.vertices.clone();
                v.reverse();
                v
            }
        }
    }

    /// Directed boundary of face `f` as a closed walk of edges.
    pub fn boundary_edges(&self, f: usize) -> Vec<DirectedEdge> {
        let face = &self.faces[f];
        let n = self.diagram.order();
        let len = face.vertices.len();
        let mut edges: Vec<DirectedEdge> = (0..len)
            .map(|k| DirectedEdge {
                from: face.vertices[k],
                to: face.vertices[(k + 1) % len],
                kind: if k % 2 == 0 {
                    EdgeKind::Arc
                } else {
                    EdgeKind::Chord
                },
            })
            .collect();
        // A face with a single arc has a 2-cycle; both steps are distinct
        // edges even though they join the same two points.
        debug_assert!(edges.iter().all(|e| e.from < n && e.to < n));
        if self.signs[f] == Sign::Negative {
            edges.reverse();
            for e in &mut edges {
                std::mem::swap(&mut e.from, &mut e.to);
            }
        }
        edges
    }

    /// The direction of every edge: arcs indexed by their start, then chords.
    pub fn edge_directions(&self) -> BTreeSet<DirectedEdge> {
        (0..self.faces.len())
            .flat_map(|f| self.boundary_edges(f))
            .collect()
    }

    /// Whether arc `i` runs forward (`i -> i + 1`).
    pub fn arc_is_forward(&self, arc: usize, face_of_arc: &[usize]) -> bool {
        self.signs[face_of_arc[arc]] == Sign::Positive
    }
}

/// An element of the dihedral group acting on `n` circle positions:
/// `i -> i + rotation` or, when reflected, `i -> rotation - i` (mod n).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralMap {
    pub rotation: usize,
    pub reflected: bool,
}

impl DihedralMap {
    pub const IDENTITY: DihedralMap = DihedralMap {
        rotation: 0,
        reflected: false,
    };

    pub fn apply(self, i: usize, n: usize) -> usize {
        if self.reflected {
            (self.rotation + n - i % n) % n
        } else {
            (i + self.rotation) % n
        }
    }

    pub fn is_identity(self) -> bool {
        self == Self::IDENTITY
    }

    /// `self` after `other`.
    pub fn compose(self, other: DihedralMap, n: usize) -> DihedralMap {
        let rotation = if self.reflected {
            (self.rotation + n - other.rotation % n) % n
        } else {
            (self.rotation + other.rotation) % n
        };
        DihedralMap {
            rotation,
            reflected: self.reflected != other.reflected,
        }
    }

    pub fn inverse(self, n: usize) -> DihedralMap {
        if self.reflected {
            self
        } else {
            DihedralMap {
                rotation: (n - self.rotation % n) % n,
                reflected: false,
            }
        }
    }

    /// All `2n` elements.
    pub fn all(n: usize) -> impl Iterator<Item = DihedralMap> {
        (0..n).flat_map(|r| {
            [false, true].into_iter().map(move |reflected| DihedralMap {
                rotation: r,
                reflected,
            })
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Symmetry {
    pub map: DihedralMap,
    /// Whether the map carries `D+` to `D-`.
    pub swaps_orientation: bool,
}

/// The dihedral maps preserving a diagram's matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryGroup {
    pub points: usize,
    pub elements: Vec<Symmetry>,
}

impl SymmetryGroup {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `|Aut(D+)|`: the symmetries preserving `D+`.
    pub fn preserving_count(&self) -> usize {
        self.elements
            .iter()
            .filter(|s| !s.swaps_orientation)
            .count()
    }

    pub fn is_orientation_symmetric(&self) -> bool {
        self.elements.iter().any(|s| s.swaps_orientation)
    }

    pub fn contains(&self, g: DihedralMap) -> bool {
        self.elements.iter().any(|s| s.map == g)
    }

    pub fn is_closed(&self) -> bool {
        self.contains(DihedralMap::IDENTITY)
            && self.elements.iter().all(|a| {
                self.elements.iter().all(|b| {
                    let c = a.map.compose(b.map, self.points);
                    self.elements.iter().any(|s| {
                        s.map == c
                            && s.swaps_orientation == (a.swaps_orientation != b.swaps_orientation)
                    })
                })
            })
    }
}

pub fn catalan(m: usize) -> u64 {
    let mut c: u64 = 1;
    for i in 0..m as u64 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(chords: &[(usize, usize)]) -> ChordDiagram {
        ChordDiagram::from_chords(2 * chords.len(), chords).unwrap()
    }

    /// Directions of all edges after pushing an oriented diagram through `g`.
    fn push_forward(o: &OrientedDiagram, g: DihedralMap) -> BTreeSet<DirectedEdge> {
        let n = o.diagram().order();
        o.edge_directions()
            .into_iter()
            .map(|e| {
                let (from, to) = (g.apply(e.from, n), g.apply(e.to, n));
                DirectedEdge {
                    from,
                    to,
                    kind: e.kind,
                }
            })
            .collect()
    }

    #[test]
    fn rejects_invalid_matchings() {
        assert!(matches!(
            ChordDiagram::new(vec![]),
            Err(Error::InvalidOrder(0))
        ));
        assert!(matches!(
            ChordDiagram::new(vec![1, 0, 2]),
            Err(Error::InvalidOrder(3))
        ));
        assert!(ChordDiagram::new(vec![0, 1]).is_err());
        assert!(ChordDiagram::new(vec![1, 2, 0, 3]).is_err());
        assert!(matches!(
            ChordDiagram::new(vec![2, 3, 0, 1]),
            Err(Error::Crossing(..))
        ));
        assert!(ChordDiagram::enumerate(0).is_err());
    }

    #[test]
    fn catalan_many_raw_matchings() {
        for m in 1..=6 {
            assert_eq!(
                ChordDiagram::raw_matchings(m).unwrap().len() as u64,
                catalan(m)
            );
        }
        assert_eq!(
            (1..=6).map(catalan).collect::<Vec<_>>(),
            vec![1, 2, 5, 14, 42, 132]
        );
    }

    #[test]
    fn canonical_representative_counts() {
        let counts: Vec<usize> = (1..=4)
            .map(|m| ChordDiagram::enumerate(m).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 3]);
    }

    #[test]
    fn face_shapes() {
        let mut sizes: Vec<usize> = d(&[(0, 1), (2, 3)])
            .faces()
            .iter()
            .map(Face::boundary_len)
            .collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 2, 4]);

        let mut sizes: Vec<usize> = d(&[(0, 1), (2, 3), (4, 5), (6, 7)])
            .faces()
            .iter()
            .map(Face::boundary_len)
            .collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 2, 2, 2, 8]);

        let faces = d(&[(0, 1)]).faces();
        assert_eq!(faces.len(), 2);
        assert!(faces.iter().all(|f| f.boundary_len() == 2));
    }

    #[test]
    fn faces_cover_arcs_once_and_chords_twice() {
        for m in 1..=6 {
            for diagram in ChordDiagram::raw_matchings(m).unwrap() {
                let faces = diagram.faces();
                assert_eq!(faces.len(), m + 1);
                let total: usize = faces.iter().map(Face::boundary_len).sum();
                assert_eq!(total, 4 * m);
                let mut arcs: Vec<usize> = faces.iter().flat_map(|f| f.arcs.clone()).collect();
                arcs.sort();
                assert_eq!(arcs, (0..2 * m).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn orientations_are_proper_and_opposite() {
        for m in 2..=5 {
            for diagram in ChordDiagram::raw_matchings(m).unwrap() {
                let (plus, minus) = diagram.orientations();
                let edges_plus = plus.edge_directions();
                let edges_minus = minus.edge_directions();
                // Each of the 2m arcs and m chords gets exactly one direction.
                assert_eq!(edges_plus.len(), 3 * m);
                let reversed: BTreeSet<DirectedEdge> = edges_plus
                    .iter()
                    .map(|e| DirectedEdge {
                        from: e.to,
                        to: e.from,
                        kind: e.kind,
                    })
                    .collect();
                assert_eq!(reversed, edges_minus);
                // Face signs alternate across every chord.
                let foa = diagram.face_of_arc();
                for c in diagram.chords() {
                    let (f, g) = diagram.faces_of_chord(c.0, &foa);
                    assert_ne!(plus.signs()[f], plus.signs()[g]);
                }
                // The face of arc 0 is positive in D+.
                assert_eq!(plus.signs()[foa[0]], Sign::Positive);
            }
        }
    }

    #[test]
    fn propagation_from_one_edge_is_conflict_free() {
        // Orienting any single chord forces every other edge consistently.
        for m in 2..=5 {
            for diagram in ChordDiagram::raw_matchings(m).unwrap() {
                let (plus, _) = diagram.orientations();
                let chord_dirs: Vec<DirectedEdge> = plus
                    .edge_directions()
                    .into_iter()
                    .filter(|e| e.kind == EdgeKind::Chord)
                    .collect();
                assert_eq!(chord_dirs.len(), m);
                // Both bordering faces traverse each chord in the same direction.
                let mut seen = std::collections::BTreeMap::new();
                for e in chord_dirs {
                    let key = Chord::new(e.from, e.to);
                    let prev = seen.insert(key, (e.from, e.to));
                    assert!(prev.is_none() || prev == Some((e.from, e.to)));
                }
            }
        }
    }

    #[test]
    fn symmetry_flags_match_full_push_forward() {
        for m in 1..=5 {
            for diagram in ChordDiagram::raw_matchings(m).unwrap() {
                let (plus, minus) = diagram.orientations();
                let group = diagram.symmetry_group();
                assert!(group.is_closed());
                for s in &group.elements {
                    let image = push_forward(&plus, s.map);
                    if s.swaps_orientation {
                        assert_eq!(image, minus.edge_directions());
                    } else {
                        assert_eq!(image, plus.edge_directions());
                    }
                }
            }
        }
    }

    #[test]
    fn symmetry_group_examples() {
        let g = d(&[(0, 1), (2, 3)]).symmetry_group();
        assert_eq!(g.len(), 4);
        assert!(g.contains(DihedralMap {
            rotation: 2,
            reflected: false
        }));
        assert!(g.is_orientation_symmetric());
        assert_eq!(g.preserving_count(), 2);

        let g = d(&[(0, 1)]).symmetry_group();
        assert_eq!(g.len(), 4);
    }

    #[test]
    fn diameters() {
        assert_eq!(d(&[(0, 1)]).diameter().unwrap(), Some(Chord(0, 1)));
        assert_eq!(
            d(&[(0, 3), (1, 2), (4, 5)]).diameter().unwrap(),
            Some(Chord(0, 3))
        );
        assert_eq!(d(&[(0, 1), (2, 3)]).diameter().unwrap(), None);
        for m in 1..=6 {
            for diagram in ChordDiagram::raw_matchings(m).unwrap() {
                assert!(diagram.diameters().len() <= 1, "{diagram}");
            }
        }
    }

    #[test]
    fn text_format_round_trip() {
        let diagram = d(&[(0, 3), (1, 2), (4, 5)]);
        let text = diagram.to_string();
        assert_eq!(text, "order=6; matching=[3,2,1,0,5,4]");
        assert_eq!(text.parse::<ChordDiagram>().unwrap(), diagram);
        assert!("order=4; matching=[1,0]".parse::<ChordDiagram>().is_err());
        assert!("matching=[1,0]".parse::<ChordDiagram>().is_err());
    }

    #[test]
    fn dihedral_composition() {
        let n = 6;
        for a in DihedralMap::all(n) {
            assert_eq!(a.compose(a.inverse(n), n), DihedralMap::IDENTITY);
            for b in DihedralMap::all(n) {
                let c = a.compose(b, n);
                for i in 0..n {
                    assert_eq!(c.apply(i, n), a.apply(b.apply(i, n), n));
                }
            }
        }
    }
}
