//! Reflexive similarity graphs and two-sided frames.
//!
//! A [`Graph`] is a state set with a reflexive lattice-valued edge relation,
//! read as graded indiscernibility. Every graph induces a polarity whose
//! objects are value/state pairs; the two derivation maps of that polarity
//! are implemented directly as [`Graph::extent_of`] and [`Graph::intent_of`].
//!
//! A [`HeteroFrame`] couples a social and a political graph through two
//! affinity relations. The frame is well-formed only when the lifted
//! singleton images of both relations are Galois-stable on the opposite
//! side; [`HeteroFrame::compat_check`] verifies exactly that, and the modal
//! concept maps flag outputs that had to be re-closed.

use crate::fuzzy::{graded_domain, graded_index, ARelation, ASet, Domain};
use crate::lattice::{TruthLattice, Value};
use crate::polarity::{Concept, Polarity};
use crate::{Error, Result};
use std::fmt;
use std::sync::Arc;

/// A reflexive lattice-valued graph.
#[derive(Debug, Clone)]
pub struct Graph {
    lat: Arc<TruthLattice>,
    states: Arc<Domain>,
    graded: Arc<Domain>,
    edges: ARelation,
}

impl Graph {
    pub fn new(lat: Arc<TruthLattice>, edges: ARelation) -> Result<Graph> {
        if edges.src() != edges.dst() {
            return Err(Error::Dimension("edge relation must be square".into()));
        }
        let states = Arc::clone(edges.src());
        for i in 0..states.len() {
            if edges.get(i, i) != lat.top() {
                return Err(Error::NotReflexive(states.name(i).to_string()));
            }
        }
        let graded = graded_domain(&lat, &states);
        Ok(Graph { lat, states, graded, edges })
    }

    pub fn lattice(&self) -> &Arc<TruthLattice> {
        &self.lat
    }

    pub fn states(&self) -> &Arc<Domain> {
        &self.states
    }

    /// The value/state pair domain the graph's extents live on.
    pub fn graded(&self) -> &Arc<Domain> {
        &self.graded
    }

    pub fn edges(&self) -> &ARelation {
        &self.edges
    }

    /// The formal context associated with the graph: objects are the
    /// value/state pairs, attributes the states, and the incidence is
    /// `((alpha, z), z') -> (E(z, z') -> alpha)`.
    pub fn to_polarity(&self) -> Polarity {
        let n = self.states.len();
        let incidence = ARelation::build(&self.graded, &self.states, |k, z1| {
            let (alpha, z) = (Value::from_index(k / n), k % n);
            self.lat.imp(self.edges.get(z, z1), alpha)
        });
        Polarity::new(Arc::clone(&self.lat), incidence)
    }

    /// Extent determined by a state set:
    /// `(alpha, z) -> meet over z' of (u(z') -> (E(z, z') -> alpha))`.
    pub fn extent_of(&self, u: &ASet) -> Result<ASet> {
        if u.domain() != &self.states {
            return Err(Error::DomainMismatch {
                expected: format!("states {:?}", self.states.names()),
                found: format!("{:?}", u.domain().names()),
            });
        }
        let n = self.states.len();
        let mut values = Vec::with_capacity(self.graded.len());
        for alpha in self.lat.values() {
            for z in 0..n {
                values.push(self.lat.meet_all(
                    (0..n).map(|z1| self.lat.imp(u.get(z1), self.lat.imp(self.edges.get(z, z1), alpha))),
                ));
            }
        }
        ASet::from_values(&self.graded, values)
    }

    /// Intent determined by a graded set:
    /// `z -> meet over (alpha, z') of (f(alpha, z') -> (E(z', z) -> alpha))`.
    pub fn intent_of(&self, f: &ASet) -> Result<ASet> {
        if f.domain() != &self.graded {
            return Err(Error::DomainMismatch {
                expected: format!("graded states of {:?}", self.states.names()),
                found: format!("{:?}", f.domain().names()),
            });
        }
        let n = self.states.len();
        let values = (0..n)
            .map(|z| {
                self.lat.meet_all(self.lat.values().flat_map(|alpha| {
                    (0..n).map(move |z1| (alpha, z1)).collect::<Vec<_>>()
                }).map(|(alpha, z1)| {
                    let fv = f.get(graded_index(n, alpha, z1));
                    self.lat.imp(fv, self.lat.imp(self.edges.get(z1, z), alpha))
                }))
            })
            .collect();
        ASet::from_values(&self.states, values)
    }

    pub fn close_intent(&self, u: &ASet) -> Result<ASet> {
        self.intent_of(&self.extent_of(u)?)
    }

    pub fn close_extent(&self, f: &ASet) -> Result<ASet> {
        self.extent_of(&self.intent_of(f)?)
    }

    pub fn is_stable_intent(&self, u: &ASet) -> Result<bool> {
        Ok(&self.close_intent(u)? == u)
    }

    pub fn is_stable_extent(&self, f: &ASet) -> Result<bool> {
        Ok(&self.close_extent(f)? == f)
    }

    /// The stable pair generated by a state vector.
    pub fn concept_from_states(&self, u: &ASet) -> Result<Concept> {
        let extent = self.extent_of(u)?;
        let intent = self.intent_of(&extent)?;
        Ok(Concept { extent, intent })
    }
}

/// Which of the four singleton-image families a violation belongs to, and
/// the first point where the closure moves away from the raw image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameViolation {
    pub relation: &'static str,
    pub operator: &'static str,
    pub singleton: String,
    pub point: String,
}

impl fmt::Display for FrameViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} image of {} is not stable at {}",
            self.relation, self.operator, self.singleton, self.point
        )
    }
}

/// The result of applying a modal map to a concept. `reclosed` is set when
/// the raw image was not stable and had to be closed, which only happens on
/// incompatible frames.
#[derive(Debug, Clone, PartialEq)]
pub struct ModalImage {
    pub concept: Concept,
    pub reclosed: bool,
}

/// Two reflexive graphs joined by affinity relations in both directions.
#[derive(Debug, Clone)]
pub struct HeteroFrame {
    social: Graph,
    political: Graph,
    /// political x social, interprets the demand-side diamond
    r_dmd: ARelation,
    /// social x political, interprets the promise-side lozenge
    r_loz: ARelation,
    dmd_lifted: ARelation,
    loz_lifted: ARelation,
}

impl HeteroFrame {
    pub fn new(social: Graph, political: Graph, r_dmd: ARelation, r_loz: ARelation) -> Result<HeteroFrame> {
        if !Arc::ptr_eq(&social.lat, &political.lat) {
            return Err(Error::Dimension("both graphs must share one truth lattice".into()));
        }
        if r_dmd.src() != political.states() || r_dmd.dst() != social.states() {
            return Err(Error::Dimension(
                "dmd relation must map political states to social states".into(),
            ));
        }
        if r_loz.src() != social.states() || r_loz.dst() != political.states() {
            return Err(Error::Dimension(
                "loz relation must map social states to political states".into(),
            ));
        }
        let lat = Arc::clone(&social.lat);
        let n_social = social.states().len();
        let n_political = political.states().len();
        let dmd_lifted = ARelation::build(political.states(), social.graded(), |z, k| {
            let (alpha, w) = (Value::from_index(k / n_social), k % n_social);
            lat.imp(r_dmd.get(z, w), alpha)
        });
        let loz_lifted = ARelation::build(social.states(), political.graded(), |z, k| {
            let (alpha, w) = (Value::from_index(k / n_political), k % n_political);
            lat.imp(r_loz.get(z, w), alpha)
        });
        Ok(HeteroFrame { social, political, r_dmd, r_loz, dmd_lifted, loz_lifted })
    }

    pub fn lattice(&self) -> &Arc<TruthLattice> {
        &self.social.lat
    }

    pub fn social(&self) -> &Graph {
        &self.social
    }

    pub fn political(&self) -> &Graph {
        &self.political
    }

    pub fn r_dmd(&self) -> &ARelation {
        &self.r_dmd
    }

    pub fn r_loz(&self) -> &ARelation {
        &self.r_loz
    }

    /// `f` on the graded social side to political states:
    /// `z -> meet over (alpha, z') of (f(alpha, z') -> (R(z, z') -> alpha))`.
    pub fn dmd_up(&self, f: &ASet) -> Result<ASet> {
        self.dmd_lifted.src_polar(f, &self.social.lat)
    }

    /// Political state sets back to the graded social side.
    pub fn dmd_down(&self, u: &ASet) -> Result<ASet> {
        self.dmd_lifted.dst_polar(u, &self.social.lat)
    }

    /// `f` on the graded political side to social states.
    pub fn loz_up(&self, f: &ASet) -> Result<ASet> {
        self.loz_lifted.src_polar(f, &self.social.lat)
    }

    /// Social state sets back to the graded political side.
    pub fn loz_down(&self, u: &ASet) -> Result<ASet> {
        self.loz_lifted.dst_polar(u, &self.social.lat)
    }

    /// Checks the four lifted-singleton stability families. The report is
    /// empty exactly when the frame is compatible; each violation names the
    /// first point where the closure leaves the raw image.
    pub fn compat_check(&self) -> Vec<FrameViolation> {
        let lat = &self.social.lat;
        let mut violations = Vec::new();

        let mut check = |relation: &'static str,
                         operator: &'static str,
                         singleton: String,
                         image: &ASet,
                         closed: &ASet| {
            if let Some(i) = (0..image.len()).find(|&i| image.get(i) != closed.get(i)) {
                violations.push(FrameViolation {
                    relation,
                    operator,
                    singleton,
                    point: image.domain().name(i).to_string(),
                });
            }
        };

        for beta in lat.values() {
            // dmd up: singletons on the graded social side, image on political states
            for k in 0..self.social.graded().len() {
                let s = ASet::singleton(lat, self.social.graded(), k, beta);
                let image = self.dmd_up(&s).expect("domains match");
                let closed = self.political.close_intent(&image).expect("domains match");
                check(
                    "dmd",
                    "up",
                    format!("{{{}/{}}}", lat.label(beta), self.social.graded().name(k)),
                    &image,
                    &closed,
                );
            }
            // dmd down: singletons on political states, image on the graded social side
            for z in 0..self.political.states().len() {
                let s = ASet::singleton(lat, self.political.states(), z, beta);
                let image = self.dmd_down(&s).expect("domains match");
                let closed = self.social.close_extent(&image).expect("domains match");
                check(
                    "dmd",
                    "down",
                    format!("{{{}/{}}}", lat.label(beta), self.political.states().name(z)),
                    &image,
                    &closed,
                );
            }
            // loz up: singletons on the graded political side, image on social states
            for k in 0..self.political.graded().len() {
                let s = ASet::singleton(lat, self.political.graded(), k, beta);
                let image = self.loz_up(&s).expect("domains match");
                let closed = self.social.close_intent(&image).expect("domains match");
                check(
                    "loz",
                    "up",
                    format!("{{{}/{}}}", lat.label(beta), self.political.graded().name(k)),
                    &image,
                    &closed,
                );
            }
            // loz down: singletons on social states, image on the graded political side
            for z in 0..self.social.states().len() {
                let s = ASet::singleton(lat, self.social.states(), z, beta);
                let image = self.loz_down(&s).expect("domains match");
                let closed = self.political.close_extent(&image).expect("domains match");
                check(
                    "loz",
                    "down",
                    format!("{{{}/{}}}", lat.label(beta), self.social.states().name(z)),
                    &image,
                    &closed,
                );
            }
        }
        violations
    }

    pub fn is_compatible(&self) -> bool {
        self.compat_check().is_empty()
    }

    /// Diamond on concepts: takes a concept of the social polarity to one of
    /// the political polarity. On compatible frames the raw image is already
    /// stable and `reclosed` is false.
    pub fn dmd_concept(&self, c: &Concept) -> Result<ModalImage> {
        let raw_intent = self.dmd_up(&c.extent)?;
        let extent = self.political.extent_of(&raw_intent)?;
        let intent = self.political.intent_of(&extent)?;
        let reclosed = intent != raw_intent;
        Ok(ModalImage { concept: Concept { extent, intent }, reclosed })
    }

    /// Lozenge on concepts: political side to social side.
    pub fn loz_concept(&self, d: &Concept) -> Result<ModalImage> {
        let raw_intent = self.loz_up(&d.extent)?;
        let extent = self.social.extent_of(&raw_intent)?;
        let intent = self.social.intent_of(&extent)?;
        let reclosed = intent != raw_intent;
        Ok(ModalImage { concept: Concept { extent, intent }, reclosed })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polarity::EnumerationMode;

    fn l11() -> Arc<TruthLattice> {
        TruthLattice::luk_chain(11).unwrap()
    }

    fn v(lat: &TruthLattice, x: f64) -> Value {
        lat.value_from_number(x).unwrap()
    }

    fn delta_graph(lat: &Arc<TruthLattice>, names: &[&str]) -> Graph {
        let dom = Domain::new(names.iter().copied()).unwrap();
        let edges = ARelation::build(&dom, &dom, |i, j| if i == j { lat.top() } else { lat.bot() });
        Graph::new(Arc::clone(lat), edges).unwrap()
    }

    #[test]
    fn rejects_non_reflexive_edges() {
        let lat = l11();
        let dom = Domain::new(["z0", "z1"]).unwrap();
        let edges = ARelation::constant(&dom, &dom, lat.bot());
        assert!(matches!(Graph::new(lat, edges), Err(Error::NotReflexive(_))));
    }

    #[test]
    fn induced_incidence_on_the_identity_graph() {
        let lat = l11();
        let g = delta_graph(&lat, &["z0", "z1"]);
        let p = g.to_polarity();
        let n = 2;
        for alpha in lat.values() {
            for z in 0..n {
                for z1 in 0..n {
                    let expected = if z == z1 { alpha } else { lat.top() };
                    assert_eq!(p.incidence().get(graded_index(n, alpha, z), z1), expected);
                }
            }
        }
    }

    #[test]
    fn induced_incidence_from_case_study_edge() {
        // an edge of weight 0.5 and grade 0.3 lifts to 0.5 -> 0.3 = 0.8
        let lat = l11();
        let dom = Domain::new(["zF", "zD"]).unwrap();
        let mut edges = ARelation::constant(&dom, &dom, lat.top());
        edges.set(0, 1, v(&lat, 0.5));
        edges.set(1, 0, v(&lat, 0.5));
        let g = Graph::new(Arc::clone(&lat), edges).unwrap();
        let p = g.to_polarity();
        assert_eq!(p.incidence().get(graded_index(2, v(&lat, 0.3), 0), 1), v(&lat, 0.8));
        // top grade lifts to top everywhere
        for z1 in 0..2 {
            assert_eq!(p.incidence().get(graded_index(2, lat.top(), 0), z1), lat.top());
        }
        // the diagonal of any reflexive graph lifts to the grade itself
        for alpha in lat.values() {
            for z in 0..2 {
                assert_eq!(p.incidence().get(graded_index(2, alpha, z), z), alpha);
            }
        }
    }

    #[test]
    fn extent_of_full_set_on_identity_graph_is_the_grade() {
        let lat = l11();
        let g = delta_graph(&lat, &["z0", "z1"]);
        let full = ASet::constant(g.states(), lat.top());
        let e = g.extent_of(&full).unwrap();
        for alpha in lat.values() {
            for z in 0..2 {
                assert_eq!(e.get(graded_index(2, alpha, z)), alpha);
            }
        }
        let empty = ASet::constant(g.states(), lat.bot());
        assert_eq!(g.extent_of(&empty).unwrap(), ASet::constant(g.graded(), lat.top()));
    }

    #[test]
    fn graph_maps_agree_with_polarity_maps() {
        let lat = TruthLattice::luk_chain(5).unwrap();
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state as usize
        };
        for _ in 0..25 {
            let n = 1 + next() % 3;
            let dom = Domain::new((0..n).map(|i| format!("z{i}"))).unwrap();
            let edges = ARelation::build(&dom, &dom, |i, j| {
                if i == j {
                    lat.top()
                } else {
                    Value::from_index(next() % lat.len())
                }
            });
            let g = Graph::new(Arc::clone(&lat), edges).unwrap();
            let p = g.to_polarity();
            let u = ASet::from_values(
                g.states(),
                (0..n).map(|_| Value::from_index(next() % lat.len())).collect(),
            )
            .unwrap();
            assert_eq!(g.extent_of(&u).unwrap().values(), p.down(&u).unwrap().values());
            let f = ASet::from_values(
                g.graded(),
                (0..g.graded().len()).map(|_| Value::from_index(next() % lat.len())).collect(),
            )
            .unwrap();
            assert_eq!(g.intent_of(&f).unwrap().values(), p.up(&f).unwrap().values());
        }
    }

    fn tiny_frame(lat: &Arc<TruthLattice>, r_dmd_val: Value, r_loz_val: Value) -> HeteroFrame {
        let social = delta_graph(lat, &["s"]);
        let political = delta_graph(lat, &["p"]);
        let r_dmd = ARelation::constant(political.states(), social.states(), r_dmd_val);
        let r_loz = ARelation::constant(social.states(), political.states(), r_loz_val);
        HeteroFrame::new(social, political, r_dmd, r_loz).unwrap()
    }

    #[test]
    fn single_state_crisp_frame_is_compatible() {
        // recorded by exhaustive run over all four crisp relation choices
        let lat = TruthLattice::luk_chain(2).unwrap();
        for dmd in lat.values() {
            for loz in lat.values() {
                let frame = tiny_frame(&lat, dmd, loz);
                assert!(frame.compat_check().is_empty());
            }
        }
    }

    #[test]
    fn dmd_up_of_singleton_against_direct_formula() {
        let lat = l11();
        let social = delta_graph(&lat, &["zF"]);
        let political = delta_graph(&lat, &["zL"]);
        let r_dmd = ARelation::constant(political.states(), social.states(), v(&lat, 0.5));
        let r_loz = ARelation::constant(social.states(), political.states(), v(&lat, 0.5));
        let frame = HeteroFrame::new(social, political, r_dmd, r_loz).unwrap();
        let f = ASet::singleton(
            &lat,
            frame.social().graded(),
            graded_index(1, v(&lat, 0.3), 0),
            lat.top(),
        );
        let image = frame.dmd_up(&f).unwrap();
        assert_eq!(image.get(0), v(&lat, 0.8)); // 0.5 -> 0.3
    }

    #[test]
    fn dmd_up_degenerate_inputs() {
        let lat = l11();
        let frame = tiny_frame(&lat, lat.bot(), lat.bot());
        let zero = ASet::constant(frame.social().graded(), lat.bot());
        assert_eq!(
            frame.dmd_up(&zero).unwrap(),
            ASet::constant(frame.political().states(), lat.top())
        );
        let any = ASet::constant(frame.social().graded(), v(&lat, 0.4));
        assert_eq!(
            frame.dmd_up(&any).unwrap(),
            ASet::constant(frame.political().states(), lat.top())
        );
    }

    fn random_two_state_frame(lat: &Arc<TruthLattice>, next: &mut impl FnMut() -> usize) -> HeteroFrame {
        let dom_s = Domain::new(["s0", "s1"]).unwrap();
        let dom_p = Domain::new(["p0", "p1"]).unwrap();
        let rand_val = |next: &mut dyn FnMut() -> usize| Value::from_index(next() % lat.len());
        let e_s = ARelation::build(&dom_s, &dom_s, |i, j| if i == j { lat.top() } else { rand_val(next) });
        let e_p = ARelation::build(&dom_p, &dom_p, |i, j| if i == j { lat.top() } else { rand_val(next) });
        let social = Graph::new(Arc::clone(lat), e_s).unwrap();
        let political = Graph::new(Arc::clone(lat), e_p).unwrap();
        let r_dmd = ARelation::build(&dom_p, &dom_s, |_, _| rand_val(next));
        let r_loz = ARelation::build(&dom_s, &dom_p, |_, _| rand_val(next));
        HeteroFrame::new(social, political, r_dmd, r_loz).unwrap()
    }

    #[test]
    fn search_finds_an_incompatible_two_state_frame() {
        let lat = TruthLattice::luk_chain(3).unwrap();
        let mut state = 0xdeadbeefcafeu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state as usize
        };
        let mut found = false;
        for _ in 0..200 {
            let frame = random_two_state_frame(&lat, &mut next);
            if !frame.compat_check().is_empty() {
                found = true;
                break;
            }
        }
        assert!(found, "random two-state frames should include incompatible ones");
    }

    #[test]
    fn constant_relations_are_compatible_on_any_graphs() {
        let lat = TruthLattice::luk_chain(3).unwrap();
        let dom_s = Domain::new(["s0", "s1"]).unwrap();
        let dom_p = Domain::new(["p0", "p1"]).unwrap();
        let e_s = ARelation::build(&dom_s, &dom_s, |i, j| {
            if i == j { lat.top() } else { Value::from_index((i + 2 * j) % 3) }
        });
        let e_p = ARelation::build(&dom_p, &dom_p, |i, j| {
            if i == j { lat.top() } else { Value::from_index((2 * i + j) % 3) }
        });
        let social = Graph::new(Arc::clone(&lat), e_s).unwrap();
        let political = Graph::new(Arc::clone(&lat), e_p).unwrap();
        for c in lat.values() {
            let r_dmd = ARelation::constant(&dom_p, &dom_s, c);
            let r_loz = ARelation::constant(&dom_s, &dom_p, c);
            let frame =
                HeteroFrame::new(social.clone(), political.clone(), r_dmd, r_loz).unwrap();
            assert!(frame.compat_check().is_empty(), "constant {} should be compatible", lat.label(c));
        }
    }

    #[test]
    fn dmd_concept_is_join_preserving_on_compatible_tiny_frames() {
        let lat = TruthLattice::luk_chain(2).unwrap();
        let frame = tiny_frame(&lat, lat.top(), lat.top());
        let social_cl = frame
            .social()
            .to_polarity()
            .enumerate_concepts(EnumerationMode::ClosureGeneration, 1e6)
            .unwrap();
        let political_cl = frame
            .political()
            .to_polarity()
            .enumerate_concepts(EnumerationMode::ClosureGeneration, 1e6)
            .unwrap();
        let map = |i: usize| {
            let image = frame.dmd_concept(social_cl.get(i)).unwrap();
            assert!(!image.reclosed);
            political_cl.index_of(&image.concept).expect("image is a political concept")
        };
        for i in 0..social_cl.len() {
            for j in 0..social_cl.len() {
                let of_join = map(social_cl.join(i, j));
                let join_of = political_cl.join(map(i), map(j));
                assert_eq!(of_join, join_of);
            }
        }
        // bottom goes to bottom
        assert_eq!(map(social_cl.bottom()), political_cl.bottom());
    }

    #[test]
    fn dmd_concept_of_top_under_empty_relation_has_top_intent() {
        let lat = TruthLattice::luk_chain(2).unwrap();
        let frame = tiny_frame(&lat, lat.bot(), lat.bot());
        let social_cl = frame
            .social()
            .to_polarity()
            .enumerate_concepts(EnumerationMode::ClosureGeneration, 1e6)
            .unwrap();
        let top = social_cl.get(social_cl.top());
        let raw = frame.dmd_up(&top.extent).unwrap();
        assert_eq!(raw, ASet::constant(frame.political().states(), lat.top()));
    }
}
