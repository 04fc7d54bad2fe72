//! Bijection between rooted proper labelings of a caterpillar diagram and
//! permutations with up-down word `U^δ1 D^δ2 ...`.
//!
//! The spine faces are visited from one end. Each face contributes a
//! cyclically ordered tuple of labels, consecutive tuples sharing the two
//! endpoints of the chord between them. Face `i` with `K` positions becomes a
//! monotone run of `K - 1` permutation entries, increasing for odd `i` and
//! decreasing for even `i`, with consecutive runs sharing one entry. The
//! positions of the run inside the remaining values are dictated by the gaps
//! between the tuple's labels inside the remaining labels.

use std::collections::HashSet;

use crate::diagram::{ChordDiagram, EdgeKind, OrientedDiagram, Polarity};
use crate::error::{Error, Result};
use crate::labeling::for_each_proper_labeling;
use crate::updown::{count_updown_bruteforce, count_updown_determinant, Step, UpDownWord};

/// One spine face, as positions in directed boundary order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpineFace {
    /// `a_1, ..., a_K`; `a_1 -> a_2` is a chord.
    pub tuple: Vec<usize>,
    /// 1-based index of the chord `a_j -> a_{j+1}` shared with the next face
    /// (for the last face: its first leaf chord after `a_1`).
    pub j: usize,
}

/// The spine faces of an oriented caterpillar diagram, read from a corner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpineWalk {
    pub corner: usize,
    pub faces: Vec<SpineFace>,
}

impl SpineWalk {
    /// `δ_i = K_i - 2` along the walk.
    pub fn delta(&self) -> Vec<usize> {
        self.faces.iter().map(|f| f.tuple.len() - 2).collect()
    }

    pub fn word(&self) -> UpDownWord {
        let mut steps = Vec::new();
        for (i, d) in self.delta().into_iter().enumerate() {
            let s = if i % 2 == 0 { Step::Up } else { Step::Down };
            steps.extend(std::iter::repeat_n(s, d));
        }
        UpDownWord::from_steps(steps)
    }

    pub fn permutation_len(&self) -> usize {
        self.faces.iter().map(|f| f.tuple.len() - 2).sum::<usize>() + 1
    }
}

struct SpineStructure {
    face_of_arc: Vec<usize>,
    chord_count: Vec<usize>,
    /// Spine neighbours of each face.
    spine_adj: Vec<Vec<usize>>,
}

fn spine_structure(d: &ChordDiagram) -> Result<SpineStructure> {
    if d.chord_count() < 2 {
        return Err(Error::TooFewChords {
            min: 2,
            got: d.chord_count(),
        });
    }
    let faces = d.faces();
    let face_of_arc = d.face_of_arc();
    let chord_count: Vec<usize> = faces.iter().map(|f| f.chord_count()).collect();
    let mut spine_adj = vec![Vec::new(); faces.len()];
    for c in d.chords() {
        let (f, g) = d.faces_of_chord(c.0, &face_of_arc);
        if chord_count[f] >= 2 && chord_count[g] >= 2 {
            spine_adj[f].push(g);
            spine_adj[g].push(f);
        }
    }
    if spine_adj.iter().any(|a| a.len() > 2) {
        return Err(Error::WrongShape(format!(
            "{d}: associated tree is not a caterpillar"
        )));
    }
    Ok(SpineStructure {
        face_of_arc,
        chord_count,
        spine_adj,
    })
}

/// Start corners of `oriented`: positions `c` on a leaf chord of an end
/// spine face, with the chord directed `c -> c'` along that face.
pub fn corners(oriented: &OrientedDiagram) -> Result<Vec<usize>> {
    let d = oriented.diagram();
    let s = spine_structure(d)?;
    let mut out = Vec::new();
    for f in 0..oriented.faces().len() {
        if s.chord_count[f] < 2 || s.spine_adj[f].len() > 1 {
            continue;
        }
        for e in oriented.boundary_edges(f) {
            if e.kind != EdgeKind::Chord {
                continue;
            }
            let (g, h) = d.faces_of_chord(e.from, &s.face_of_arc);
            let other = if g == f { h } else { g };
            if s.chord_count[other] == 1 {
                out.push(e.from);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

fn rotate_to(boundary: &[usize], start: usize, next: usize) -> Option<Vec<usize>> {
    let k = boundary.len();
    let i = boundary.iter().position(|&v| v == start)?;
    let rotated: Vec<usize> = (0..k).map(|t| boundary[(i + t) % k]).collect();
    (rotated[1] == next).then_some(rotated)
}

/// Walks the spine of a caterpillar diagram starting from `corner`.
pub fn spine_walk(oriented: &OrientedDiagram, corner: usize) -> Result<SpineWalk> {
    let d = oriented.diagram();
    if corner >= d.order() {
        return Err(Error::PositionOutOfRange(corner));
    }
    if !corners(oriented)?.contains(&corner) {
        return Err(Error::InvalidCorner(
            corner,
            "not on a leaf chord of an end face, or the chord points the wrong way".into(),
        ));
    }
    let s = spine_structure(d)?;
    let is_leaf_chord = |a: usize| {
        let (f, g) = d.faces_of_chord(a, &s.face_of_arc);
        s.chord_count[f] == 1 || s.chord_count[g] == 1
    };

    let (f0, g0) = d.faces_of_chord(corner, &s.face_of_arc);
    let mut face = if s.chord_count[f0] >= 2 { f0 } else { g0 };
    let mut prev: Option<usize> = None;
    let mut start = (corner, d.partner(corner));
    let mut faces = Vec::new();
    loop {
        let tuple =
            rotate_to(&oriented.directed_boundary(face), start.0, start.1).ok_or_else(|| {
                Error::InvalidCorner(start.0, "shared chord not traversed forward".into())
            })?;
        let next = s.spine_adj[face].iter().copied().find(|&g| Some(g) != prev);
        let k = tuple.len();
        let j = match next {
            Some(g) => (3..k).step_by(2).find(|&j| {
                let a = tuple[j - 1];
                let (x, y) = d.faces_of_chord(a, &s.face_of_arc);
                d.partner(a) == tuple[j] && (x == g || y == g)
            }),
            None => (3..k).step_by(2).find(|&j| is_leaf_chord(tuple[j - 1])),
        }
        .ok_or_else(|| Error::WrongShape(format!("{d}: no admissible shared chord")))?;
        let shared = (tuple[j - 1], tuple[j]);
        faces.push(SpineFace { tuple, j });
        match next {
            Some(g) => {
                prev = Some(face);
                face = g;
                start = shared;
            }
            None => break,
        }
    }
    Ok(SpineWalk { corner, faces })
}

/// Maps a proper labeling (label 1 at the walk's corner) to a permutation of
/// `1..=2e-1`.
pub fn caterpillar_bijection(walk: &SpineWalk, labels: &[u32]) -> Result<Vec<u32>> {
    let n = labels.len() as u32;
    if labels[walk.corner] != 1 {
        return Err(Error::InvalidLabeling(format!(
            "label at corner {} is not 1",
            walk.corner
        )));
    }
    // Remaining labels and values, kept sorted.
    let mut r: Vec<u32> = (1..=n).collect();
    let mut t: Vec<u32> = (1..n).collect();
    let mut sigma: Vec<u32> = Vec::with_capacity(walk.permutation_len());

    for (step, face) in walk.faces.iter().enumerate() {
        let increasing = step % 2 == 0;
        let a: Vec<u32> = face.tuple.iter().map(|&p| labels[p]).collect();
        let k = a.len();
        let idx: Vec<usize> = a
            .iter()
            .map(|x| {
                r.binary_search(x)
                    .map_err(|_| Error::InvalidLabeling(format!("label {x} reused")))
            })
            .collect::<Result<_>>()?;
        let size = r.len();
        // f_i: remaining labels strictly between a_i and a_{i+1}, cyclically.
        let gaps: Vec<usize> = (0..k)
            .map(|i| (idx[(i + 1) % k] + size - idx[i] - 1) % size)
            .collect();
        if gaps.iter().sum::<usize>() + k != size {
            return Err(Error::InvalidLabeling(format!(
                "face {a:?} is not cyclically ordered"
            )));
        }
        let j = face.j;
        // Gaps between consecutive τ's: f_2..f_{j-1}, then f_{j+1}..f_K.
        let inner = gaps[1..j - 1].iter().chain(&gaps[j..]);
        let mut ranks = Vec::with_capacity(k - 1);
        let mut rank = gaps[0];
        ranks.push(rank);
        for &g in inner {
            rank += g + 1;
            ranks.push(rank);
        }
        debug_assert_eq!(rank + 1 + gaps[j - 1], t.len());
        let run: Vec<u32> = ranks
            .iter()
            .map(|&q| if increasing { t[q] } else { t[t.len() - 1 - q] })
            .collect();
        match sigma.last() {
            None => sigma.extend(&run),
            Some(&last) if last == run[0] => sigma.extend(&run[1..]),
            Some(&last) => {
                return Err(Error::CrossCheck(format!(
                    "run {run:?} does not continue at {last}"
                )))
            }
        }
        let keep_r = [a[j - 1], a[j]];
        r.retain(|x| !a.contains(x) || keep_r.contains(x));
        let drop_t: HashSet<u32> = run[..k - 2].iter().copied().collect();
        t.retain(|x| !drop_t.contains(x));
    }
    Ok(sigma)
}

/// The path-type special case: every spine face is a quadrilateral.
pub fn path_bijection(
    oriented: &OrientedDiagram,
    corner: usize,
    labels: &[u32],
) -> Result<Vec<u32>> {
    if !oriented.diagram().associated_tree().is_path() {
        return Err(Error::WrongShape(format!(
            "{}: not a path diagram",
            oriented.diagram()
        )));
    }
    caterpillar_bijection(&spine_walk(oriented, corner)?, labels)
}

/// Outcome of running the bijection over every rooted labeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionCheck {
    pub corner: usize,
    pub word: UpDownWord,
    /// Rooted proper labelings with label 1 at the corner.
    pub domain: u64,
    /// Distinct images.
    pub distinct_images: u64,
    /// Images whose up-down word is not `word`.
    pub off_target: u64,
    /// Permutations with that word, by determinant.
    pub target: u64,
}

impl BijectionCheck {
    pub fn is_bijective(&self) -> bool {
        self.off_target == 0 && self.distinct_images == self.domain && self.domain == self.target
    }
}

/// Applies the bijection to every rooted labeling of `D+` from `corner`.
pub fn check_bijection(d: &ChordDiagram, corner: usize) -> Result<BijectionCheck> {
    let oriented = OrientedDiagram::new(d.clone(), Polarity::Plus);
    let walk = spine_walk(&oriented, corner)?;
    let word = walk.word();
    let mut images = HashSet::new();
    let mut domain = 0u64;
    let mut off_target = 0u64;
    let mut failure = None;
    for_each_proper_labeling(&oriented, Some((corner, 1)), |labels| {
        domain += 1;
        match caterpillar_bijection(&walk, labels) {
            Ok(sigma) => {
                if UpDownWord::of_sequence(&sigma) != word {
                    off_target += 1;
                }
                images.insert(sigma);
            }
            Err(e) => failure = Some(e),
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let target = u64::try_from(count_updown_determinant(&word))
        .map_err(|_| Error::CrossCheck("target count overflows u64".into()))?;
    if word.permutation_len() <= crate::updown::BRUTE_FORCE_MAX_LEN {
        let brute = count_updown_bruteforce(&word)?;
        if brute != target {
            return Err(Error::CrossCheck(format!(
                "{word}: determinant {target}, brute force {brute}"
            )));
        }
    }
    Ok(BijectionCheck {
        corner,
        word,
        domain,
        distinct_images: images.len() as u64,
        off_target,
        target,
    })
}
