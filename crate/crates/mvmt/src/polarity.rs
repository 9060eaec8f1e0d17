//! Many-valued formal contexts, their Galois connection and concept lattices.
//!
//! A [`Polarity`] is an object set, an attribute set and a lattice-valued
//! incidence between them. The polar maps of the incidence form an antitone
//! Galois connection; its stable pairs are the [`Concept`]s. Concepts can be
//! enumerated either by brute-force scanning of all extent candidates
//! (exponential, usable as an oracle) or by closing the attribute-generated
//! extents under pointwise meets.
//!
//! An [`EnrichedContext`] adds two modal relations to a polarity; when they
//! are compatible with the incidence, they induce a box and a diamond
//! operator on the concept lattice.

use crate::fuzzy::{ARelation, ASet, Domain};
use crate::lattice::{TruthLattice, Value};
use crate::{Error, Result};
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// A formal context valued in a truth lattice.
#[derive(Debug, Clone)]
pub struct Polarity {
    lat: Arc<TruthLattice>,
    incidence: ARelation,
}

/// A Galois-stable pair: the extent determines the intent and vice versa.
#[derive(Debug, Clone, PartialEq)]
pub struct Concept {
    pub extent: ASet,
    pub intent: ASet,
}

impl Polarity {
    pub fn new(lat: Arc<TruthLattice>, incidence: ARelation) -> Polarity {
        Polarity { lat, incidence }
    }

    pub fn lattice(&self) -> &Arc<TruthLattice> {
        &self.lat
    }

    pub fn objects(&self) -> &Arc<Domain> {
        self.incidence.src()
    }

    pub fn attributes(&self) -> &Arc<Domain> {
        self.incidence.dst()
    }

    pub fn incidence(&self) -> &ARelation {
        &self.incidence
    }

    /// Intent determined by an object set.
    pub fn up(&self, f: &ASet) -> Result<ASet> {
        self.incidence.dst_polar(f, &self.lat)
    }

    /// Extent determined by an attribute set.
    pub fn down(&self, u: &ASet) -> Result<ASet> {
        self.incidence.src_polar(u, &self.lat)
    }

    pub fn close_extent(&self, f: &ASet) -> Result<ASet> {
        self.down(&self.up(f)?)
    }

    pub fn close_intent(&self, u: &ASet) -> Result<ASet> {
        self.up(&self.down(u)?)
    }

    pub fn is_stable_extent(&self, f: &ASet) -> Result<bool> {
        Ok(&self.close_extent(f)? == f)
    }

    pub fn is_stable_intent(&self, u: &ASet) -> Result<bool> {
        Ok(&self.close_intent(u)? == u)
    }

    /// The concept whose extent is the closure of `f`.
    pub fn concept_from_extent(&self, f: &ASet) -> Result<Concept> {
        let intent = self.up(f)?;
        let extent = self.down(&intent)?;
        let intent = self.up(&extent)?;
        Ok(Concept { extent, intent })
    }

    /// The concept whose intent is the closure of `u`.
    pub fn concept_from_intent(&self, u: &ASet) -> Result<Concept> {
        let extent = self.down(u)?;
        let intent = self.up(&extent)?;
        let extent = self.down(&intent)?;
        Ok(Concept { extent, intent })
    }

    /// All concepts, ordered by a linear extension of extent inclusion
    /// (bottom first, top last), with meet and join tables.
    pub fn enumerate_concepts(&self, mode: EnumerationMode, limit: f64) -> Result<ConceptLattice> {
        let extents = match mode {
            EnumerationMode::Exhaustive => self.scan_extents(limit)?,
            EnumerationMode::ClosureGeneration => self.generate_extents(),
        };
        ConceptLattice::from_extents(self, extents)
    }

    /// Brute force: every map from the objects into the lattice is tested
    /// for stability. Exponential, gated by `limit`.
    fn scan_extents(&self, limit: f64) -> Result<Vec<ASet>> {
        let n_obj = self.objects().len();
        let n_att = self.attributes().len();
        let base = self.lat.len() as f64;
        let candidates = base.powi(n_obj.max(n_att) as i32);
        if candidates > limit {
            return Err(Error::SizeLimit { candidates, limit });
        }
        let mut extents = Vec::new();
        let mut digits = vec![0usize; n_obj];
        loop {
            let f = ASet::from_values(
                self.objects(),
                digits.iter().map(|&d| Value::from_index(d)).collect(),
            )?;
            if self.is_stable_extent(&f)? {
                extents.push(f);
            }
            if !next_odometer(&mut digits, self.lat.len()) {
                break;
            }
        }
        Ok(extents)
    }

    /// Closes the attribute-generated extents under pointwise meet. Every
    /// extent is a meet of sets of the form `a -> (alpha -> I(a, x))`, so
    /// this produces exactly the stable extents.
    fn generate_extents(&self) -> Vec<ASet> {
        let lat = &self.lat;
        let mut generators = Vec::new();
        for x in 0..self.attributes().len() {
            for alpha in lat.values() {
                let s = ASet::singleton(lat, self.attributes(), x, alpha);
                generators.push(self.down(&s).expect("domains match"));
            }
        }
        let top = ASet::constant(self.objects(), lat.top());
        let mut seen: HashMap<Vec<Value>, ()> = HashMap::new();
        seen.insert(top.values().to_vec(), ());
        let mut frontier = vec![top.clone()];
        let mut extents = vec![top];
        while let Some(f) = frontier.pop() {
            for g in &generators {
                let h = f.pointwise_meet(g, lat).expect("same domain");
                if !seen.contains_key(h.values()) {
                    seen.insert(h.values().to_vec(), ());
                    extents.push(h.clone());
                    frontier.push(h);
                }
            }
        }
        extents
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationMode {
    Exhaustive,
    ClosureGeneration,
}

pub const DEFAULT_ENUMERATION_LIMIT: f64 = 1e6;

fn next_odometer(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// The concepts of a polarity in a fixed order, with lattice operations.
#[derive(Debug, Clone)]
pub struct ConceptLattice {
    lat: Arc<TruthLattice>,
    concepts: Vec<Concept>,
    by_extent: HashMap<Vec<Value>, usize>,
    meet_table: Vec<usize>,
    join_table: Vec<usize>,
}

impl ConceptLattice {
    fn from_extents(polarity: &Polarity, extents: Vec<ASet>) -> Result<ConceptLattice> {
        let lat = Arc::clone(&polarity.lat);
        // rank of a value = size of its down-set, so sorting by rank vectors
        // refines extent inclusion
        let rank: Vec<usize> = lat
            .values()
            .map(|v| lat.values().filter(|&w| lat.leq(w, v)).count())
            .collect();
        let mut concepts: Vec<Concept> = extents
            .into_iter()
            .map(|extent| {
                let intent = polarity.up(&extent)?;
                Ok(Concept { extent, intent })
            })
            .collect::<Result<_>>()?;
        concepts.sort_by(|c, d| {
            let key = |concept: &Concept| {
                (
                    concept.extent.values().iter().map(|v| rank[v.index()]).collect::<Vec<_>>(),
                    concept.extent.values().iter().map(|v| v.index()).collect::<Vec<_>>(),
                )
            };
            key(c).cmp(&key(d))
        });
        let by_extent: HashMap<Vec<Value>, usize> = concepts
            .iter()
            .enumerate()
            .map(|(i, c)| (c.extent.values().to_vec(), i))
            .collect();
        let n = concepts.len();
        let mut meet_table = vec![0usize; n * n];
        let mut join_table = vec![0usize; n * n];
        let by_intent: HashMap<Vec<Value>, usize> = concepts
            .iter()
            .enumerate()
            .map(|(i, c)| (c.intent.values().to_vec(), i))
            .collect();
        for i in 0..n {
            for j in 0..n {
                let meet_extent =
                    concepts[i].extent.pointwise_meet(&concepts[j].extent, &lat)?;
                meet_table[i * n + j] = *by_extent.get(meet_extent.values()).ok_or_else(|| {
                    Error::InvalidLattice("concept set is not closed under meets".into())
                })?;
                let join_intent =
                    concepts[i].intent.pointwise_meet(&concepts[j].intent, &lat)?;
                join_table[i * n + j] = *by_intent.get(join_intent.values()).ok_or_else(|| {
                    Error::InvalidLattice("concept set is not closed under joins".into())
                })?;
            }
        }
        Ok(ConceptLattice { lat, concepts, by_extent, meet_table, join_table })
    }

    pub fn lattice(&self) -> &Arc<TruthLattice> {
        &self.lat
    }

    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty()
    }

    pub fn concepts(&self) -> &[Concept] {
        &self.concepts
    }

    pub fn get(&self, i: usize) -> &Concept {
        &self.concepts[i]
    }

    pub fn index_of(&self, c: &Concept) -> Option<usize> {
        self.by_extent.get(c.extent.values()).copied()
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet_table[i * self.concepts.len() + j]
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join_table[i * self.concepts.len() + j]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.meet(i, j) == i
    }

    /// Index of the greatest concept.
    pub fn top(&self) -> usize {
        self.concepts.len() - 1
    }

    /// Index of the least concept.
    pub fn bottom(&self) -> usize {
        0
    }
}

/// Where a compatibility violation was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncompatViolation {
    pub relation: &'static str,
    pub operator: &'static str,
    pub singleton: String,
}

impl fmt::Display for IncompatViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{} image of {} is not stable", self.relation, self.operator, self.singleton)
    }
}

/// A polarity together with two modal relations.
#[derive(Debug, Clone)]
pub struct EnrichedContext {
    base: Polarity,
    /// objects x attributes, interprets the box
    r_box: ARelation,
    /// attributes x objects, interprets the diamond
    r_dia: ARelation,
}

impl EnrichedContext {
    pub fn new(base: Polarity, r_box: ARelation, r_dia: ARelation) -> Result<EnrichedContext> {
        if r_box.src() != base.objects() || r_box.dst() != base.attributes() {
            return Err(Error::Dimension("box relation must map objects to attributes".into()));
        }
        if r_dia.src() != base.attributes() || r_dia.dst() != base.objects() {
            return Err(Error::Dimension("diamond relation must map attributes to objects".into()));
        }
        Ok(EnrichedContext { base, r_box, r_dia })
    }

    pub fn base(&self) -> &Polarity {
        &self.base
    }

    /// Checks that all lifted singleton images of both modal relations are
    /// Galois-stable. Empty report means the context is compatible.
    pub fn icompat_check(&self) -> Vec<IncompatViolation> {
        let lat = self.base.lattice().clone();
        let objects = self.base.objects().clone();
        let attributes = self.base.attributes().clone();
        let mut violations = Vec::new();
        for alpha in lat.values() {
            for x in 0..attributes.len() {
                let s = ASet::singleton(&lat, &attributes, x, alpha);
                let image = self.r_box.src_polar(&s, &lat).expect("attribute domain");
                if !self.base.is_stable_extent(&image).expect("object domain") {
                    violations.push(IncompatViolation {
                        relation: "box",
                        operator: "(0)",
                        singleton: format!("{{{}/{}}}", lat.label(alpha), attributes.name(x)),
                    });
                }
                let image = self.r_dia.dst_polar(&s, &lat).expect("attribute domain");
                if !self.base.is_stable_extent(&image).expect("object domain") {
                    violations.push(IncompatViolation {
                        relation: "dia",
                        operator: "(1)",
                        singleton: format!("{{{}/{}}}", lat.label(alpha), attributes.name(x)),
                    });
                }
            }
            for a in 0..objects.len() {
                let s = ASet::singleton(&lat, &objects, a, alpha);
                let image = self.r_box.dst_polar(&s, &lat).expect("object domain");
                if !self.base.is_stable_intent(&image).expect("attribute domain") {
                    violations.push(IncompatViolation {
                        relation: "box",
                        operator: "(1)",
                        singleton: format!("{{{}/{}}}", lat.label(alpha), objects.name(a)),
                    });
                }
                let image = self.r_dia.src_polar(&s, &lat).expect("object domain");
                if !self.base.is_stable_intent(&image).expect("attribute domain") {
                    violations.push(IncompatViolation {
                        relation: "dia",
                        operator: "(0)",
                        singleton: format!("{{{}/{}}}", lat.label(alpha), objects.name(a)),
                    });
                }
            }
        }
        violations
    }

    /// Box operator on concepts. The context must be compatible, otherwise
    /// the raw image is not stable and an error is returned.
    pub fn box_complex(&self, c: &Concept) -> Result<Concept> {
        let lat = self.base.lattice();
        let extent = self.r_box.src_polar(&c.intent, lat)?;
        if !self.base.is_stable_extent(&extent)? {
            return Err(Error::SideMismatch(
                "box image is not stable; the enriched context is not compatible".into(),
            ));
        }
        let intent = self.base.up(&extent)?;
        Ok(Concept { extent, intent })
    }

    /// Diamond operator on concepts, dual to [`EnrichedContext::box_complex`].
    pub fn dia_complex(&self, c: &Concept) -> Result<Concept> {
        let lat = self.base.lattice();
        let intent = self.r_dia.src_polar(&c.extent, lat)?;
        if !self.base.is_stable_intent(&intent)? {
            return Err(Error::SideMismatch(
                "diamond image is not stable; the enriched context is not compatible".into(),
            ));
        }
        let extent = self.base.down(&intent)?;
        Ok(Concept { extent, intent })
    }
}
