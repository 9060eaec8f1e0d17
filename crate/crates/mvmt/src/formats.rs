//! JSON file formats for lattices, contexts, frames and models.
//!
//! Every document carries a `version` field (currently 1). Grid values are
//! JSON numbers and must lie exactly on the lattice carrier; anything off
//! the grid is rejected rather than rounded.

use crate::fuzzy::{ARelation, Domain};
use crate::graph::{Graph, HeteroFrame};
use crate::lattice::{TruthLattice, Value};
use crate::polarity::Polarity;
use crate::semantics::Model;
use crate::{Error, Result};
use serde::Deserialize;
use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

const CURRENT_VERSION: u32 = 1;

fn check_version(version: u32, what: &str) -> Result<()> {
    if version != CURRENT_VERSION {
        return Err(Error::InvalidDomain(format!(
            "{what} has version {version}, expected {CURRENT_VERSION}"
        )));
    }
    Ok(())
}

/// Lattice description: a Łukasiewicz chain or explicit tables.
#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum LatticeSpec {
    Lukasiewicz {
        #[serde(default = "default_version")]
        version: u32,
        n: usize,
    },
    Table {
        #[serde(default = "default_version")]
        version: u32,
        carrier: Vec<f64>,
        meet: Vec<Vec<f64>>,
        join: Vec<Vec<f64>>,
        otimes: Vec<Vec<f64>>,
        imp: Vec<Vec<f64>>,
    },
}

fn default_version() -> u32 {
    CURRENT_VERSION
}

impl LatticeSpec {
    pub fn build(&self) -> Result<Arc<TruthLattice>> {
        match self {
            LatticeSpec::Lukasiewicz { version, n } => {
                check_version(*version, "lattice spec")?;
                TruthLattice::luk_chain(*n)
            }
            LatticeSpec::Table { version, carrier, meet, join, otimes, imp } => {
                check_version(*version, "lattice spec")?;
                let index_of = |x: f64| -> Result<usize> {
                    carrier
                        .iter()
                        .position(|&c| (c - x).abs() <= 1e-9)
                        .ok_or(Error::NotOnGrid { value: x, lattice: "table carrier".into() })
                };
                let to_indices = |table: &Vec<Vec<f64>>| -> Result<Vec<Vec<usize>>> {
                    table
                        .iter()
                        .map(|row| row.iter().map(|&x| index_of(x)).collect())
                        .collect()
                };
                TruthLattice::from_tables(
                    carrier.clone(),
                    to_indices(meet)?,
                    to_indices(join)?,
                    to_indices(otimes)?,
                    to_indices(imp)?,
                )
            }
        }
    }
}

/// Parses a lattice reference that is either `"lukasiewicz:N"` shorthand or
/// a path to a lattice spec file.
pub fn lattice_from_arg(arg: &str) -> Result<Arc<TruthLattice>> {
    if let Some(levels) = arg.strip_prefix("lukasiewicz:") {
        let n: usize = levels
            .parse()
            .map_err(|_| Error::InvalidLattice(format!("bad chain size `{levels}`")))?;
        return TruthLattice::luk_chain(n);
    }
    let text = std::fs::read_to_string(arg)?;
    let spec: LatticeSpec = serde_json::from_str(&text)?;
    spec.build()
}

fn grid_matrix(
    lat: &TruthLattice,
    src: &Arc<Domain>,
    dst: &Arc<Domain>,
    rows: &[Vec<f64>],
    what: &str,
) -> Result<ARelation> {
    if rows.len() != src.len() || rows.iter().any(|r| r.len() != dst.len()) {
        return Err(Error::Dimension(format!(
            "{what} must be {}x{}",
            src.len(),
            dst.len()
        )));
    }
    let mut values = Vec::with_capacity(src.len() * dst.len());
    for row in rows {
        for &x in row {
            values.push(lat.value_from_number(x)?);
        }
    }
    let mut rel = ARelation::constant(src, dst, lat.bot());
    for i in 0..src.len() {
        for j in 0..dst.len() {
            rel.set(i, j, values[i * dst.len() + j]);
        }
    }
    Ok(rel)
}

/// A formal context: object and attribute names plus the incidence matrix.
#[derive(Debug, Clone, Deserialize)]
pub struct ContextSpec {
    #[serde(default = "default_version")]
    pub version: u32,
    pub lattice: LatticeSpec,
    pub objects: Vec<String>,
    pub attributes: Vec<String>,
    pub incidence: Vec<Vec<f64>>,
}

impl ContextSpec {
    pub fn build(&self) -> Result<Polarity> {
        check_version(self.version, "context spec")?;
        let lat = self.lattice.build()?;
        let objects = Domain::new(self.objects.clone())?;
        let attributes = Domain::new(self.attributes.clone())?;
        let incidence = grid_matrix(&lat, &objects, &attributes, &self.incidence, "incidence")?;
        Ok(Polarity::new(lat, incidence))
    }
}

pub fn load_context(path: &Path) -> Result<Polarity> {
    let text = std::fs::read_to_string(path)?;
    let spec: ContextSpec = serde_json::from_str(&text)?;
    spec.build()
}

/// A two-sided frame: state lists, both similarity matrices and both
/// affinity matrices.
#[derive(Debug, Clone, Deserialize)]
pub struct FrameSpec {
    #[serde(default = "default_version")]
    pub version: u32,
    pub lattice: LatticeSpec,
    pub social_states: Vec<String>,
    pub political_states: Vec<String>,
    pub e_social: Vec<Vec<f64>>,
    pub e_political: Vec<Vec<f64>>,
    pub r_dmd: Vec<Vec<f64>>,
    pub r_loz: Vec<Vec<f64>>,
}

impl FrameSpec {
    pub fn build(&self) -> Result<HeteroFrame> {
        check_version(self.version, "frame spec")?;
        let lat = self.lattice.build()?;
        let social_dom = Domain::new(self.social_states.clone())?;
        let political_dom = Domain::new(self.political_states.clone())?;
        let e_social = grid_matrix(&lat, &social_dom, &social_dom, &self.e_social, "e_social")?;
        let e_political =
            grid_matrix(&lat, &political_dom, &political_dom, &self.e_political, "e_political")?;
        let r_dmd = grid_matrix(&lat, &political_dom, &social_dom, &self.r_dmd, "r_dmd")?;
        let r_loz = grid_matrix(&lat, &social_dom, &political_dom, &self.r_loz, "r_loz")?;
        let social = Graph::new(Arc::clone(&lat), e_social)?;
        let political = Graph::new(Arc::clone(&lat), e_political)?;
        HeteroFrame::new(social, political, r_dmd, r_loz)
    }
}

pub fn load_frame(path: &Path) -> Result<HeteroFrame> {
    let text = std::fs::read_to_string(path)?;
    let spec: FrameSpec = serde_json::from_str(&text)?;
    spec.build()
}

/// Frame reference inside a model spec: inline or a relative path.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum FrameRef {
    Path(String),
    Inline(Box<FrameSpec>),
}

/// A model: a frame plus per-atom refutation vectors for both sorts.
/// Demand atoms are vectors over the political states, promise atoms over
/// the social states.
#[derive(Debug, Clone, Deserialize)]
pub struct ModelSpec {
    #[serde(default = "default_version")]
    pub version: u32,
    pub frame: FrameRef,
    #[serde(default)]
    pub sd_atoms: BTreeMap<String, Vec<f64>>,
    #[serde(default)]
    pub pp_atoms: BTreeMap<String, Vec<f64>>,
}

impl ModelSpec {
    pub fn build(&self, base_dir: &Path) -> Result<Model> {
        check_version(self.version, "model spec")?;
        let frame = match &self.frame {
            FrameRef::Inline(spec) => spec.build()?,
            FrameRef::Path(rel) => load_frame(&base_dir.join(rel))?,
        };
        let lat = Arc::clone(frame.lattice());
        let frame = Arc::new(frame);
        let to_grid = |raw: &BTreeMap<String, Vec<f64>>,
                       side: &Arc<Domain>|
         -> Result<BTreeMap<String, Vec<Value>>> {
            let mut out = BTreeMap::new();
            for (name, xs) in raw {
                if xs.len() != side.len() {
                    return Err(Error::Dimension(format!(
                        "atom `{name}` needs {} values, got {}",
                        side.len(),
                        xs.len()
                    )));
                }
                out.insert(
                    name.clone(),
                    xs.iter().map(|&x| lat.value_from_number(x)).collect::<Result<_>>()?,
                );
            }
            Ok(out)
        };
        let sd = to_grid(&self.sd_atoms, frame.political().states())?;
        let pp = to_grid(&self.pp_atoms, frame.social().states())?;
        Model::from_descrs(frame, sd, pp)
    }
}

pub fn load_model(path: &Path) -> Result<Model> {
    let text = std::fs::read_to_string(path)?;
    let spec: ModelSpec = serde_json::from_str(&text)?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    spec.build(base)
}
