//! Serializable reports and CSV/text emitters.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::asymptotics::{asymptotic_ratio_with, gamma_root};
use crate::diagram::ChordDiagram;
use crate::error::{Error, Result};
use crate::labeling::{analyze_degree, sharp_real_via_planted_trees, DiagramCount};
use crate::series::{fp_series, RationalSeries};
use crate::updown::{count_updown_determinant, sharp_path, UpDownWord};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitCount {
    pub length: usize,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramReport {
    pub matching: Vec<usize>,
    pub tree_signature: String,
    pub sharp_r: u64,
    pub pi: u64,
    pub total: u64,
    pub orbits: Vec<OrbitCount>,
}

impl From<&DiagramCount> for DiagramReport {
    fn from(c: &DiagramCount) -> Self {
        DiagramReport {
            matching: c.diagram.matching().to_vec(),
            tree_signature: c.diagram.associated_tree().signature(),
            sharp_r: c.sharp_r,
            pi: c.pi,
            total: c.total,
            orbits: c
                .orbit_histogram()
                .into_iter()
                .map(|(length, count)| OrbitCount { length, count })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub n: usize,
    pub sharp_real: u64,
    pub components: usize,
    pub diagrams: Vec<DiagramReport>,
}

/// Enumerates degree `n` and cross-checks the total against the sum over
/// planted trees. Degrees 1 and 2 are the constant cases with no diagrams.
pub fn degree_report(n: usize) -> Result<DegreeReport> {
    match n {
        0 => return Err(Error::DegreeTooSmall { min: 1, got: 0 }),
        1 | 2 => {
            return Ok(DegreeReport {
                n,
                sharp_real: 1,
                components: 1,
                diagrams: Vec::new(),
            })
        }
        _ => {}
    }
    let counts = analyze_degree(n)?;
    let sharp_real: u64 = counts.iter().map(|c| c.total).sum();
    let via_trees = sharp_real_via_planted_trees(n)?;
    if via_trees != sharp_real {
        return Err(Error::CrossCheck(format!(
            "n={n}: {sharp_real} over diagrams but {via_trees} over planted trees"
        )));
    }
    Ok(DegreeReport {
        n,
        sharp_real,
        components: counts.iter().map(|c| c.orbits.len()).sum(),
        diagrams: counts.iter().map(DiagramReport::from).collect(),
    })
}

fn csv_string<T: Serialize>(rows: impl IntoIterator<Item = T>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).map_err(|e| Error::Parse(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

#[derive(Serialize)]
struct CountRow {
    n: usize,
    sharp_real: u64,
    components: usize,
}

#[derive(Serialize)]
struct DiagramRow<'a> {
    n: usize,
    matching: String,
    tree_signature: &'a str,
    sharp_r: u64,
    pi: u64,
    total: u64,
    orbits: String,
}

fn orbit_text(orbits: &[OrbitCount]) -> String {
    orbits
        .iter()
        .map(|o| format!("{}x{}", o.count, o.length))
        .collect::<Vec<_>>()
        .join(" ")
}

fn matching_text(m: &[usize]) -> String {
    m.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

/// `n,sharp_real,components`, one row per degree.
pub fn counts_csv(reports: &[DegreeReport]) -> Result<String> {
    csv_string(reports.iter().map(|r| CountRow {
        n: r.n,
        sharp_real: r.sharp_real,
        components: r.components,
    }))
}

/// One row per diagram. Orbits are written as `countxlength` pairs.
pub fn diagrams_csv(reports: &[DegreeReport]) -> Result<String> {
    csv_string(reports.iter().flat_map(|r| {
        r.diagrams.iter().map(move |d| DiagramRow {
            n: r.n,
            matching: matching_text(&d.matching),
            tree_signature: &d.tree_signature,
            sharp_r: d.sharp_r,
            pi: d.pi,
            total: d.total,
            orbits: orbit_text(&d.orbits),
        })
    }))
}

pub fn counts_text(reports: &[DegreeReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out += &format!(
            "n={} sharp_real={} components={}\n",
            r.n, r.sharp_real, r.components
        );
        for d in &r.diagrams {
            out += &format!(
                "  [{}] tree={} sharp_r={} pi={} total={} orbits={}\n",
                matching_text(&d.matching),
                d.tree_signature,
                d.sharp_r,
                d.pi,
                d.total,
                orbit_text(&d.orbits)
            );
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordCount {
    pub word: String,
    pub count: String,
}

pub fn word_counts(words: impl IntoIterator<Item = UpDownWord>) -> Vec<WordCount> {
    words
        .into_iter()
        .map(|w| WordCount {
            word: w.to_string(),
            count: count_updown_determinant(&w).to_string(),
        })
        .collect()
}

/// `word,count` rows.
pub fn word_counts_csv(rows: &[WordCount]) -> Result<String> {
    csv_string(rows)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PathRow {
    pub n: usize,
    #[serde(rename = "sharp_Pn_determinant")]
    pub sharp_pn_determinant: String,
    #[serde(rename = "sharp_Pn_series")]
    pub sharp_pn_series: String,
    /// Undefined for `n = 1`.
    pub ratio_rn: Option<f64>,
}

/// `♯(P_n)` by determinant and by series, with `r_n`, for `n` in `1..=max`.
pub fn path_table(max: usize) -> Result<Vec<PathRow>> {
    let fp = fp_series(2 * max.max(1))?;
    let gamma = gamma_root().value;
    (1..=max)
        .map(|n| {
            Ok(PathRow {
                n,
                sharp_pn_determinant: sharp_path(n)?.to_string(),
                sharp_pn_series: fp.egf_integer(2 * n)?.to_string(),
                ratio_rn: if n >= 2 {
                    Some(asymptotic_ratio_with(n, gamma)?)
                } else {
                    None
                },
            })
        })
        .collect()
}

/// `n,sharp_Pn_determinant,sharp_Pn_series,ratio_rn` rows.
pub fn path_table_csv(rows: &[PathRow]) -> Result<String> {
    csv_string(rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRow {
    pub k: usize,
    pub coefficient: String,
    /// `k! · c_k`.
    pub scaled: String,
}

/// Nonzero coefficients of a series.
pub fn series_rows(s: &RationalSeries) -> Vec<SeriesRow> {
    (0..=s.order())
        .filter(|&k| !s.coeff(k).is_zero())
        .map(|k| SeriesRow {
            k,
            coefficient: s.coeff(k).to_string(),
            scaled: s.egf_coeff(k).to_string(),
        })
        .collect()
}

/// `k,coefficient,scaled` rows.
pub fn series_csv(rows: &[SeriesRow]) -> Result<String> {
    csv_string(rows)
}

/// Canonical diagrams with `m` chords, one per line in the text format.
pub fn diagram_lines(m: usize) -> Result<String> {
    Ok(ChordDiagram::enumerate(m)?
        .iter()
        .map(|d| format!("{d}\n"))
        .collect())
}
