//! Identity suites. Every check carries both sides so a mismatch is visible
//! together with a witness.

use std::fmt;

use rayon::prelude::*;

use crate::diagram::ChordDiagram;
use crate::error::{Error, Result};
use crate::labeling::{analyze_diagram, sharp_real_via_caterpillars, sharp_real_via_planted_trees};
use crate::series::{
    a_series, cos_series, fp_series, multiply_back_holds, sec_tan_series, sin_series,
    RationalSeries,
};
use crate::updown::{
    count_updown_bruteforce, count_updown_determinant, euler_bernoulli, sharp_caterpillar,
    sharp_path, two_up_two_down, UpDownWord,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub left: String,
    pub right: String,
    /// What to look at when the sides differ.
    pub witness: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, left: impl ToString, right: impl ToString) -> Self {
        Check {
            name: name.into(),
            left: left.to_string(),
            right: right.to_string(),
            witness: None,
        }
    }

    fn with_witness(mut self, w: impl Into<String>) -> Self {
        self.witness = Some(w.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.left == self.right
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok  " } else { "FAIL" };
        write!(f, "{status} {}: {} = {}", self.name, self.left, self.right)?;
        if let (false, Some(w)) = (self.passed(), &self.witness) {
            write!(f, "  [witness: {w}]")?;
        }
        Ok(())
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(Check::passed)
}

/// Counting identities for one degree `n ≥ 3`: per diagram, enumeration
/// against `π(D)·♯_r(D)` and the caterpillar formula; in total, the diagram
/// sum against the planted-tree sum and the caterpillar sum, and the path
/// diagram against `n·A(2n-1)`.
pub fn verify_degree(n: usize) -> Result<Vec<Check>> {
    if n < 3 {
        return Err(Error::DegreeTooSmall { min: 3, got: n });
    }
    let m = n - 1;
    let diagrams = ChordDiagram::enumerate(m)?;
    let per_diagram: Vec<Result<(u64, Vec<Check>)>> =
        diagrams.par_iter().map(|d| verify_diagram(n, d)).collect();
    let mut checks = Vec::new();
    let mut direct = 0u64;
    for (d, r) in diagrams.iter().zip(per_diagram) {
        let (total, cs) = r?;
        direct += total;
        checks.extend(cs.into_iter().map(|c| c.with_witness(d.to_string())));
    }
    checks.push(Check::new(
        format!("n={n} sum over diagrams = sum over planted trees"),
        direct,
        sharp_real_via_planted_trees(n)?,
    ));
    if let Some(cat) = sharp_real_via_caterpillars(n)? {
        checks.push(Check::new(
            format!("n={n} sum over diagrams = caterpillar formula sum"),
            direct,
            cat,
        ));
    }
    Ok(checks)
}

/// Returns the enumerated `♯(D)` (0 if the enumeration itself disagreed) and
/// the checks for one diagram.
fn verify_diagram(n: usize, d: &ChordDiagram) -> Result<(u64, Vec<Check>)> {
    let count = match analyze_diagram(d) {
        Ok(c) => c,
        Err(Error::CrossCheck(msg)) => {
            return Ok((
                0,
                vec![Check::new(
                    format!("n={n} {d} proposition"),
                    "consistent",
                    msg,
                )],
            ));
        }
        Err(e) => return Err(e),
    };
    let mut checks = vec![Check::new(
        format!("n={n} {d} total = pi * sharp_r"),
        count.total,
        count.pi * count.sharp_r,
    )];
    let orbit_sum: usize = count.orbits.iter().sum();
    checks.push(Check::new(
        format!("n={n} {d} orbit lengths sum"),
        orbit_sum,
        count.total,
    ));
    let tree = d.associated_tree();
    let group = d.symmetry_group();
    checks.push(Check::new(
        format!("n={n} {d} alpha = beta"),
        group.len(),
        tree.pair_automorphism_count(),
    ));
    if let Some(kind) = tree.caterpillar_type() {
        let formula = sharp_caterpillar(
            &kind,
            group.preserving_count(),
            group.is_orientation_symmetric(),
        )?;
        checks.push(Check::new(
            format!("n={n} {d} caterpillar {kind}"),
            count.total,
            formula,
        ));
        if tree.is_path() {
            checks.push(Check::new(
                format!("n={n} {d} path = m*A(2m-1)"),
                count.total,
                sharp_path(d.chord_count())?,
            ));
        }
    }
    Ok((count.total, checks))
}

/// Determinant against exhaustive search for every word of length `1..=max_len`.
pub fn verify_words(max_len: usize) -> Result<Vec<Check>> {
    let words: Vec<UpDownWord> = (1..=max_len).flat_map(UpDownWord::all).collect();
    words
        .par_iter()
        .map(|w| {
            Ok(Check::new(
                format!("word {w} determinant = brute force"),
                count_updown_determinant(w),
                count_updown_bruteforce(w)?,
            ))
        })
        .collect()
}

/// Series identities up to truncation `order`.
pub fn verify_series(order: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let fp = fp_series(order)?;
    for n in 1..=order / 2 {
        checks.push(Check::new(
            format!("F_P coefficient x^{}/{}! = n*A(2n-1), n={n}", 2 * n, 2 * n),
            fp.egf_integer(2 * n)?,
            sharp_path(n)?,
        ));
    }
    for residue in [1, 3] {
        let s = a_series(residue, order)?;
        for k in (residue..=order).step_by(4) {
            checks.push(Check::new(
                format!("A({k}) series = determinant"),
                s.egf_integer(k)?,
                two_up_two_down(k)?,
            ));
        }
    }
    let st = sec_tan_series(order);
    for k in 0..=order {
        checks.push(Check::new(
            format!("K_{k} sec+tan = determinant"),
            st.egf_integer(k)?,
            euler_bernoulli(k),
        ));
    }
    let one = RationalSeries::one(order);
    let num = &one + &sin_series(order);
    checks.push(Check::new(
        format!("(1+sin)/cos * cos = 1+sin to order {order}"),
        multiply_back_holds(&num, &cos_series(order))?,
        true,
    ));
    Ok(checks)
}

/// `K_k` from sec + tan against exhaustive search.
pub fn verify_alternating_bruteforce(max_k: usize) -> Result<Vec<Check>> {
    let series = sec_tan_series(max_k);
    (0..=max_k)
        .map(|k| {
            let brute = if k == 0 {
                1
            } else {
                count_updown_bruteforce(&UpDownWord::alternating(k - 1))?
            };
            Ok(Check::new(
                format!("K_{k} sec+tan = brute force"),
                series.egf_integer(k)?,
                brute,
            ))
        })
        .collect()
}
