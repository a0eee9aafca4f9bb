//! Data files shipped with the crate and the named seeds and algebras the CLI
//! accepts.

use grascat_core::cluster::{grassmannian_initial_seed, Seed};
use grascat_core::hl::{hl_seed, seed_qp};
use grascat_core::qpa::{build_algebra, Algebra, QuiverWithPotential};
use grascat_core::{Error, Result};
use serde::{Deserialize, Serialize};

use crate::formats::{ProfileSet, QpJson};

const QP_GR39: &str = include_str!("../fixtures/qp_gr39.json");
const QP_GR48: &str = include_str!("../fixtures/qp_gr48.json");
const QP_HL_GAMMA: &str = include_str!("../fixtures/qp_hl_gamma.json");
const GR39_RANK4: &str = include_str!("../fixtures/gr3_9_rank4.json");
const GR48_RANK3: &str = include_str!("../fixtures/gr4_8_rank3.json");
const GR48_RANK4: &str = include_str!("../fixtures/gr4_8_rank4.json");
const NONREAL: &str = include_str!("../fixtures/nonreal.json");

/// Degree cap used when building algebras from shipped or named data.
pub const DEGREE_CAP: usize = 64;

/// The `(k, ℓ)` of the truncated `Γ⁻` quiver in `qp_hl_gamma.json`.
pub const HL_GAMMA_PARAMS: (usize, usize) = (4, 3);

fn parse<T: for<'a> Deserialize<'a>>(name: &str, text: &str) -> T {
    serde_json::from_str(text).unwrap_or_else(|e| panic!("shipped fixture {name} is malformed: {e}"))
}

/// Names of the shipped quivers with potential.
pub const QP_NAMES: [&str; 3] = ["qp_gr39", "qp_gr48", "qp_hl_gamma"];

/// A shipped quiver with potential by name.
pub fn qp(name: &str) -> Result<QuiverWithPotential> {
    let text = match name {
        "qp_gr39" => QP_GR39,
        "qp_gr48" => QP_GR48,
        "qp_hl_gamma" => QP_HL_GAMMA,
        _ => return Err(Error::BadParameters(format!("unknown quiver with potential {name:?}"))),
    };
    parse::<QpJson>(name, text).to_qp()
}

/// Names of the shipped tableau/profile lists.
pub const PROFILE_SET_NAMES: [&str; 3] = ["gr3_9_rank4", "gr4_8_rank3", "gr4_8_rank4"];

/// A shipped tableau/profile list by name.
pub fn profile_set(name: &str) -> Result<ProfileSet> {
    let text = match name {
        "gr3_9_rank4" => GR39_RANK4,
        "gr4_8_rank3" => GR48_RANK3,
        "gr4_8_rank4" => GR48_RANK4,
        _ => return Err(Error::BadParameters(format!("unknown profile list {name:?}"))),
    };
    Ok(parse(name, text))
}

/// A named tableau with its recorded g-vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordedTableau {
    pub name: String,
    pub rows: Vec<Vec<u32>>,
    pub g: Vec<i64>,
}

/// Recorded tableaux at one `(k, n)`, with the seed labels the g-vectors refer to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordedSet {
    pub k: usize,
    pub n: u32,
    pub seed: Vec<String>,
    pub entries: Vec<RecordedTableau>,
}

/// Non-real tableaux and their braid images.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonReal {
    pub gr3_9: RecordedSet,
    pub gr4_8: RecordedSet,
}

/// The shipped non-real tableaux.
pub fn nonreal() -> NonReal {
    parse("nonreal", NONREAL)
}

fn parse_pair(text: &str) -> Option<(usize, usize)> {
    let (a, b) = text.split_once('_')?;
    Some((a.parse().ok()?, b.parse().ok()?))
}

/// A seed by name: `grK_N` for the Grassmannian initial seed of `Gr(K, N)`,
/// `hlK_L` for the seed on `Γ⁻_{−2L−2}` labelled by Kirillov–Reshetikhin
/// subsets.
pub fn named_seed(name: &str) -> Result<Seed> {
    let bad = || Error::BadParameters(format!("unknown seed {name:?}; expected grK_N or hlK_L"));
    if let Some(rest) = name.strip_prefix("gr") {
        let (k, n) = parse_pair(rest).ok_or_else(bad)?;
        grassmannian_initial_seed(k, n)
    } else if let Some(rest) = name.strip_prefix("hl") {
        let (k, ell) = parse_pair(rest).ok_or_else(bad)?;
        hl_seed(k, ell)
    } else {
        Err(bad())
    }
}

/// An algebra by name: a shipped quiver with potential, or the algebra of a
/// named seed.
pub fn named_algebra(name: &str) -> Result<Algebra> {
    let qp = if QP_NAMES.contains(&name) { qp(name)? } else { seed_qp(&named_seed(name)?)? };
    build_algebra(&qp, DEGREE_CAP)
}
