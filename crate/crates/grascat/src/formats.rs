//! JSON file formats and their conversions to and from the core types.

use std::collections::HashMap;

use grascat_core::braid::VectorTuple;
use grascat_core::cluster::{Quiver, Seed};
use grascat_core::cmcat::{KSubset, Profile};
use grascat_core::einv::{EValueReport, FieldChoice};
use grascat_core::gvec::GVector;
use grascat_core::linalg::{Fp, Rational};
use grascat_core::qpa::{Arrow, PotentialTerm, QuiverWithPotential};
use grascat_core::tableaux::{DominantMonomial, Tableau};
use grascat_core::{Error, Result};
use serde::{Deserialize, Serialize};

/// `{"k":3,"n":9,"rows":[[1,2,3],[4,5,6],[7,8,9]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub k: usize,
    pub n: u32,
    pub rows: Vec<Vec<u32>>,
}

impl TableauJson {
    pub fn from_tableau(t: &Tableau) -> Self {
        TableauJson { k: t.k(), n: t.n(), rows: t.rows().to_vec() }
    }

    pub fn to_tableau(&self) -> Result<Tableau> {
        // An empty tableau may be written as `"rows": []`.
        let rows = if self.rows.is_empty() { vec![Vec::new(); self.k] } else { self.rows.clone() };
        Tableau::new(self.k, self.n, rows)
    }
}

/// `{"k":3,"ell":5,"factors":[[1,-5,1],[2,0,1]]}` with `(i, s, multiplicity)`
/// triples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub k: usize,
    pub ell: usize,
    pub factors: Vec<(i64, i64, u32)>,
}

impl MonomialJson {
    pub fn from_monomial(m: &DominantMonomial) -> Self {
        MonomialJson { k: m.k(), ell: m.ell(), factors: m.factors() }
    }

    pub fn to_monomial(&self) -> Result<DominantMonomial> {
        DominantMonomial::new(self.k, self.ell, &self.factors)
    }
}

/// `{"m":19,"n_mut":10,"arrows":[[0,1],…]}`, optionally with `coords`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverJson {
    pub m: usize,
    pub n_mut: usize,
    pub arrows: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<Vec<(i64, i64)>>,
}

impl QuiverJson {
    pub fn from_quiver(q: &Quiver) -> Self {
        QuiverJson { m: q.m(), n_mut: q.n_mut(), arrows: q.arrows(), coords: q.coords().map(<[_]>::to_vec) }
    }

    pub fn to_quiver(&self) -> Result<Quiver> {
        let q = Quiver::new(self.m, self.n_mut, &self.arrows)?;
        match &self.coords {
            Some(c) => q.with_coords(c.clone()),
            None => Ok(q),
        }
    }
}

/// A quiver with one tableau label (given by its rows) per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedJson {
    pub k: usize,
    pub n: u32,
    pub quiver: QuiverJson,
    pub labels: Vec<Vec<Vec<u32>>>,
}

impl SeedJson {
    pub fn from_seed(s: &Seed) -> Self {
        let first = &s.labels()[0];
        SeedJson {
            k: first.k(),
            n: first.n(),
            quiver: QuiverJson::from_quiver(s.quiver()),
            labels: s.labels().iter().map(|t| t.rows().to_vec()).collect(),
        }
    }

    pub fn to_seed(&self) -> Result<Seed> {
        let labels = self
            .labels
            .iter()
            .map(|rows| TableauJson { k: self.k, n: self.n, rows: rows.clone() }.to_tableau())
            .collect::<Result<Vec<_>>>()?;
        Seed::new(self.quiver.to_quiver()?, labels)
    }
}

/// A named arrow between named vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowJson {
    pub id: String,
    pub from: String,
    pub to: String,
}

/// A signed cycle given by arrow ids in path order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub sign: i64,
    pub cycle: Vec<String>,
}

/// A quiver with potential on named vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QpJson {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowJson>,
    pub potential: Vec<TermJson>,
}

impl QpJson {
    pub fn from_qp(qp: &QuiverWithPotential) -> Self {
        let v = qp.vertices();
        let arrows = qp
            .arrows()
            .iter()
            .map(|a| ArrowJson { id: a.name.clone(), from: v[a.from].clone(), to: v[a.to].clone() })
            .collect();
        let potential = qp
            .potential()
            .iter()
            .map(|t| TermJson { sign: t.coeff, cycle: t.cycle.iter().map(|&a| qp.arrows()[a].name.clone()).collect() })
            .collect();
        QpJson { vertices: v.to_vec(), arrows, potential }
    }

    pub fn to_qp(&self) -> Result<QuiverWithPotential> {
        let vertex: HashMap<&str, usize> = self.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let find = |name: &str| {
            vertex.get(name).copied().ok_or_else(|| Error::BadParameters(format!("unknown vertex {name:?}")))
        };
        let arrows = self
            .arrows
            .iter()
            .map(|a| Ok(Arrow { name: a.id.clone(), from: find(&a.from)?, to: find(&a.to)? }))
            .collect::<Result<Vec<_>>>()?;
        let arrow: HashMap<&str, usize> = self.arrows.iter().enumerate().map(|(i, a)| (a.id.as_str(), i)).collect();
        let potential = self
            .potential
            .iter()
            .map(|t| {
                let cycle = t
                    .cycle
                    .iter()
                    .map(|id| {
                        arrow
                            .get(id.as_str())
                            .copied()
                            .ok_or_else(|| Error::BadParameters(format!("unknown arrow {id:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(PotentialTerm { coeff: t.sign, cycle })
            })
            .collect::<Result<Vec<_>>>()?;
        QuiverWithPotential::new(self.vertices.clone(), arrows, potential)
    }
}

/// `{"k":3,"n":9,"factors":[[3,6,9],[2,5,8],[1,4,7]]}`, top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileJson {
    pub k: usize,
    pub n: u32,
    pub factors: Vec<Vec<u32>>,
}

impl ProfileJson {
    pub fn from_profile(p: &Profile) -> Self {
        ProfileJson { k: p.k(), n: p.n(), factors: p.factors().iter().map(|f| f.elements().to_vec()).collect() }
    }

    pub fn to_profile(&self) -> Result<Profile> {
        let factors = self.factors.iter().map(|f| KSubset::new(self.n, f.clone())).collect::<Result<Vec<_>>>()?;
        Profile::new(self.k, self.n, factors)
    }
}

/// One tableau with its listed profile.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfiledTableau {
    pub rows: Vec<Vec<u32>>,
    pub profile: Vec<Vec<u32>>,
}

/// A list of tableaux with profiles, all at one `(k, n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileSet {
    pub k: usize,
    pub n: u32,
    pub entries: Vec<ProfiledTableau>,
}

impl ProfileSet {
    pub fn tableau(&self, e: &ProfiledTableau) -> Result<Tableau> {
        TableauJson { k: self.k, n: self.n, rows: e.rows.clone() }.to_tableau()
    }

    pub fn profile(&self, e: &ProfiledTableau) -> Result<Profile> {
        ProfileJson { k: self.k, n: self.n, factors: e.profile.clone() }.to_profile()
    }
}

/// Field of a vector tuple file.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum FieldName {
    Rational,
    Prime,
}

impl From<FieldName> for FieldChoice {
    fn from(f: FieldName) -> Self {
        match f {
            FieldName::Rational => FieldChoice::Rational,
            FieldName::Prime => FieldChoice::Prime,
        }
    }
}

impl From<FieldChoice> for FieldName {
    fn from(f: FieldChoice) -> Self {
        match f {
            FieldChoice::Rational => FieldName::Rational,
            FieldChoice::Prime => FieldName::Prime,
        }
    }
}

/// `{"k":3,"n":9,"field":"rational","vectors":[["1","0","0"],…]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleJson {
    pub k: usize,
    pub n: usize,
    pub field: FieldName,
    pub vectors: Vec<Vec<String>>,
}

/// A tuple over either supported field.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyTuple {
    Rational(VectorTuple<Rational>),
    Prime(VectorTuple<Fp>),
}

fn parse_entries<T>(vectors: &[Vec<String>], parse: impl Fn(&str) -> Option<T>) -> Result<Vec<Vec<T>>> {
    vectors
        .iter()
        .map(|v| {
            v.iter()
                .map(|s| {
                    parse(s.trim()).ok_or_else(|| Error::BadParameters(format!("cannot parse field element {s:?}")))
                })
                .collect()
        })
        .collect()
}

impl TupleJson {
    pub fn from_rational(t: &VectorTuple<Rational>) -> Self {
        TupleJson {
            k: t.k(),
            n: t.n(),
            field: FieldName::Rational,
            vectors: t.vectors().iter().map(|v| v.iter().map(|x| x.to_string()).collect()).collect(),
        }
    }

    pub fn from_prime(t: &VectorTuple<Fp>) -> Self {
        TupleJson {
            k: t.k(),
            n: t.n(),
            field: FieldName::Prime,
            vectors: t.vectors().iter().map(|v| v.iter().map(|x| x.value().to_string()).collect()).collect(),
        }
    }

    pub fn to_tuple(&self) -> Result<AnyTuple> {
        if self.vectors.len() != self.n {
            return Err(Error::DimensionMismatch(format!("{} vectors listed, n = {}", self.vectors.len(), self.n)));
        }
        match self.field {
            FieldName::Rational => {
                let v = parse_entries(&self.vectors, |s| s.parse::<Rational>().ok())?;
                Ok(AnyTuple::Rational(VectorTuple::new(self.k, v)?))
            }
            FieldName::Prime => {
                let v = parse_entries(&self.vectors, |s| s.parse::<i64>().ok().map(Fp::new))?;
                Ok(AnyTuple::Prime(VectorTuple::new(self.k, v)?))
            }
        }
    }
}

/// A g-vector with the labels of the coordinates it refers to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GVectorJson {
    pub coords: Vec<i64>,
    pub n_mut: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
}

impl GVectorJson {
    pub fn from_gvector(g: &GVector, labels: Vec<String>) -> Self {
        GVectorJson { coords: g.coords().to_vec(), n_mut: g.n_mut(), labels }
    }

    pub fn to_gvector(&self) -> Result<GVector> {
        GVector::new(self.coords.clone(), self.n_mut)
    }
}

/// A sampled generic value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EReportJson {
    pub value: usize,
    pub certified: bool,
    /// `"exact"` for a certified zero, `"upper bound from samples"` otherwise.
    pub status: String,
    pub samples: usize,
    pub field: FieldName,
    pub witness: usize,
    pub seed: u64,
}

impl EReportJson {
    pub fn new(r: &EValueReport, seed: u64) -> Self {
        EReportJson {
            value: r.value,
            certified: r.certified,
            status: if r.certified { "exact" } else { "upper bound from samples" }.to_string(),
            samples: r.samples,
            field: r.field.into(),
            witness: r.witness,
            seed,
        }
    }
}

/// The structured error object printed on computation failures.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorJson {
    pub kind: String,
    pub message: String,
}

impl From<&Error> for ErrorJson {
    fn from(e: &Error) -> Self {
        ErrorJson { kind: e.kind().to_string(), message: e.to_string() }
    }
}
