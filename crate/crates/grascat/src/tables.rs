//! Tables regenerated from the library: Hom dimensions between projectives,
//! the Kirillov–Reshetikhin subset grid, and g-vectors of recorded tableaux.

use grascat_core::cmcat::KSubset;
use grascat_core::gvec::GVectorSolver;
use grascat_core::hl::kr_subset;
use grascat_core::qpa::build_algebra;
use grascat_core::{Error, Result};
use serde::{Deserialize, Serialize};

use crate::fixtures::{self, RecordedSet, DEGREE_CAP};
use crate::formats::TableauJson;

/// A rectangular table of strings with a title and a header row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    /// Aligned plain text: the title, then one line per row, columns padded to
    /// equal width and separated by two spaces.
    pub fn render(&self) -> String {
        let ncols = self.header.len().max(self.rows.iter().map(Vec::len).max().unwrap_or(0));
        let mut width = vec![0; ncols];
        for row in std::iter::once(&self.header).chain(&self.rows) {
            for (w, cell) in width.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |row: &[String]| {
            let cells: Vec<String> = row.iter().zip(&width).map(|(c, &w)| format!("{c:<w$}")).collect();
            cells.join("  ").trim_end().to_string()
        };
        let mut out = format!("# {}\n", self.title);
        if !self.header.is_empty() {
            out.push_str(&line(&self.header));
            out.push('\n');
        }
        for row in &self.rows {
            out.push_str(&line(row));
            out.push('\n');
        }
        out
    }
}

/// Names accepted by [`paper_table`].
pub const TABLE_NAMES: [&str; 5] = ["hom39", "hom48", "kgrid", "gvec39", "gvec48"];

/// Regenerate one of the tables in [`TABLE_NAMES`].
pub fn paper_table(which: &str) -> Result<Table> {
    match which {
        "hom39" => hom_table("qp_gr39", &["125", "126", "134", "128", "156", "167"]),
        "hom48" => hom_table("qp_gr48", &["1236", "1245", "1267", "1456"]),
        "kgrid" => kr_grid(5, 3),
        "gvec39" => gvector_table("gr3_9", &fixtures::nonreal().gr3_9),
        "gvec48" => gvector_table("gr4_8", &fixtures::nonreal().gr4_8),
        _ => Err(Error::BadParameters(format!("unknown table {which:?}; expected one of {TABLE_NAMES:?}"))),
    }
}

/// `dim Hom(P_row, P_col)` over the named fixture algebra, shown as `k` or `0`
/// when at most one-dimensional.
pub fn hom_table(qp_name: &str, labels: &[&str]) -> Result<Table> {
    let qp = fixtures::qp(qp_name)?;
    let algebra = build_algebra(&qp, DEGREE_CAP)?;
    let index = |l: &str| qp.vertex_index(l).ok_or_else(|| Error::BadParameters(format!("no vertex {l} in {qp_name}")));
    let idx = labels.iter().map(|l| index(l)).collect::<Result<Vec<_>>>()?;
    let cell = |d: usize| match d {
        0 => "0".to_string(),
        1 => "k".to_string(),
        d => format!("k^{d}"),
    };
    let mut header = vec![String::new()];
    header.extend(labels.iter().map(|l| format!("P({l})")));
    let rows = labels
        .iter()
        .zip(&idx)
        .map(|(l, &i)| {
            let mut row = vec![format!("P({l})")];
            row.extend(idx.iter().map(|&j| cell(algebra.hom_dim(i, j))));
            row
        })
        .collect();
    Ok(Table { title: format!("Hom(P_row, P_col) over {qp_name}"), header, rows })
}

/// `J_{i,m}` for every vertex of `Γ⁻_{−2ℓ−2}`: columns `i = 1..k−1`, rows from
/// the top.
pub fn kr_grid(k: usize, ell: usize) -> Result<Table> {
    let depth = ell as i64 + 1;
    let mut rows = Vec::new();
    for r in 0..depth {
        let mut row = Vec::new();
        for i in 1..k as i64 {
            let top = if i % 2 == 1 { -2 } else { -1 };
            row.push(kr_subset(i, top - 2 * r, k, ell)?.label());
        }
        rows.push(row);
    }
    let header = (1..k).map(|i| format!("i={i}")).collect();
    Ok(Table { title: format!("J_(i,m) for k={k}, l={ell}"), header, rows })
}

/// g-vectors of recorded tableaux with respect to a named seed, next to the
/// recorded ones.
pub fn gvector_table(seed_name: &str, set: &RecordedSet) -> Result<Table> {
    let seed = fixtures::named_seed(seed_name)?;
    let solver = GVectorSolver::new(&seed)?;
    let labels: Vec<String> = seed
        .subset_labels()
        .ok_or_else(|| Error::BadParameters("seed labels must be one-column".into()))?
        .iter()
        .map(KSubset::label)
        .collect();
    let mut rows = Vec::new();
    for e in &set.entries {
        let t = TableauJson { k: set.k, n: set.n, rows: e.rows.clone() }.to_tableau()?;
        let g = solver.g_vector(&t)?;
        let status = if g.coords() == e.g.as_slice() { "matches" } else { "differs" };
        rows.push(vec![e.name.clone(), format!("{:?}", g.coords()), status.to_string()]);
    }
    Ok(Table {
        title: format!("g-vectors over {seed_name}, coordinates {}", labels.join(" ")),
        header: vec!["tableau".into(), "g".into(), "recorded".into()],
        rows,
    })
}
