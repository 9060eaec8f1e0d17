//! Lattice-valued sets and relations over finite indexed domains.
//!
//! Everything downstream (polarities, graphs, frames, models) is built from
//! the two types here: [`ASet`] maps a finite domain into the truth lattice,
//! [`ARelation`] maps a pair of domains. Relations induce the two polar maps
//! [`ARelation::src_polar`] and [`ARelation::dst_polar`], the antitone pair
//! every Galois connection in this crate comes from.

use crate::lattice::{TruthLattice, Value};
use crate::{Error, Result};
use std::collections::HashMap;
use std::sync::Arc;

/// A finite, non-empty set of named elements with a fixed order.
#[derive(Debug)]
pub struct Domain {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl PartialEq for Domain {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}
impl Eq for Domain {}

impl Domain {
    pub fn new<I, S>(names: I) -> Result<Arc<Domain>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidDomain("domain must be non-empty".into()));
        }
        let mut index = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::InvalidDomain(format!("duplicate element `{name}`")));
            }
        }
        Ok(Arc::new(Domain { names, index }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    fn describe(&self) -> String {
        format!("{{{}}}", self.names.join(", "))
    }
}

/// The domain of value/state pairs `A x Z`, ordered with the value index
/// outer and the state index inner.
pub fn graded_domain(lat: &TruthLattice, states: &Arc<Domain>) -> Arc<Domain> {
    let names = lat.values().flat_map(|v| {
        states
            .names()
            .iter()
            .map(move |s| format!("({},{})", lat.label(v), s))
            .collect::<Vec<_>>()
    });
    Domain::new(names).expect("graded domain is non-empty and unique")
}

/// Index of the pair `(value, state)` inside a graded domain.
pub fn graded_index(n_states: usize, value: Value, state: usize) -> usize {
    value.index() * n_states + state
}

fn check_same_domain(expected: &Arc<Domain>, found: &Arc<Domain>) -> Result<()> {
    if Arc::ptr_eq(expected, found) || expected == found {
        Ok(())
    } else {
        Err(Error::DomainMismatch {
            expected: expected.describe(),
            found: found.describe(),
        })
    }
}

/// A map from a finite domain into the truth lattice.
#[derive(Debug, Clone, PartialEq)]
pub struct ASet {
    domain: Arc<Domain>,
    values: Vec<Value>,
}

impl ASet {
    pub fn constant(domain: &Arc<Domain>, v: Value) -> ASet {
        ASet { domain: Arc::clone(domain), values: vec![v; domain.len()] }
    }

    pub fn from_values(domain: &Arc<Domain>, values: Vec<Value>) -> Result<ASet> {
        if values.len() != domain.len() {
            return Err(Error::Dimension(format!(
                "{} values for a domain of size {}",
                values.len(),
                domain.len()
            )));
        }
        Ok(ASet { domain: Arc::clone(domain), values })
    }

    /// The set mapping `element` to `alpha` and everything else to bottom.
    pub fn singleton(lat: &TruthLattice, domain: &Arc<Domain>, element: usize, alpha: Value) -> ASet {
        let mut values = vec![lat.bot(); domain.len()];
        values[element] = alpha;
        ASet { domain: Arc::clone(domain), values }
    }

    /// The value/element pairs whose singletons join back to this set.
    pub fn decompose(&self) -> Vec<(Value, usize)> {
        self.values.iter().enumerate().map(|(i, &v)| (v, i)).collect()
    }

    pub fn domain(&self) -> &Arc<Domain> {
        &self.domain
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, i: usize) -> Value {
        self.values[i]
    }

    pub fn set(&mut self, i: usize, v: Value) {
        self.values[i] = v;
    }

    pub fn values(&self) -> &[Value] {
        &self.values
    }

    pub fn pointwise_meet(&self, other: &ASet, lat: &TruthLattice) -> Result<ASet> {
        check_same_domain(&self.domain, &other.domain)?;
        let values =
            self.values.iter().zip(&other.values).map(|(&a, &b)| lat.meet(a, b)).collect();
        Ok(ASet { domain: Arc::clone(&self.domain), values })
    }

    pub fn pointwise_join(&self, other: &ASet, lat: &TruthLattice) -> Result<ASet> {
        check_same_domain(&self.domain, &other.domain)?;
        let values =
            self.values.iter().zip(&other.values).map(|(&a, &b)| lat.join(a, b)).collect();
        Ok(ASet { domain: Arc::clone(&self.domain), values })
    }

    /// Pointwise lattice order.
    pub fn included_in(&self, other: &ASet, lat: &TruthLattice) -> Result<bool> {
        check_same_domain(&self.domain, &other.domain)?;
        Ok(self.values.iter().zip(&other.values).all(|(&a, &b)| lat.leq(a, b)))
    }

    /// Graded subsethood: the meet over the domain of `self(z) -> other(z)`.
    pub fn subsethood(&self, other: &ASet, lat: &TruthLattice) -> Result<Value> {
        check_same_domain(&self.domain, &other.domain)?;
        Ok(lat.meet_all(self.values.iter().zip(&other.values).map(|(&a, &b)| lat.imp(a, b))))
    }

    pub fn render(&self, lat: &TruthLattice) -> String {
        let parts: Vec<_> = self.values.iter().map(|&v| lat.label(v).to_string()).collect();
        format!("({})", parts.join(", "))
    }
}

/// A lattice-valued relation between two finite domains, stored densely.
#[derive(Debug, Clone, PartialEq)]
pub struct ARelation {
    src: Arc<Domain>,
    dst: Arc<Domain>,
    values: Vec<Value>,
}

impl ARelation {
    pub fn constant(src: &Arc<Domain>, dst: &Arc<Domain>, v: Value) -> ARelation {
        ARelation {
            src: Arc::clone(src),
            dst: Arc::clone(dst),
            values: vec![v; src.len() * dst.len()],
        }
    }

    pub fn from_rows(src: &Arc<Domain>, dst: &Arc<Domain>, rows: Vec<Vec<Value>>) -> Result<ARelation> {
        if rows.len() != src.len() || rows.iter().any(|r| r.len() != dst.len()) {
            return Err(Error::Dimension(format!(
                "matrix is not {}x{}",
                src.len(),
                dst.len()
            )));
        }
        Ok(ARelation {
            src: Arc::clone(src),
            dst: Arc::clone(dst),
            values: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a square relation from a function of the element indices.
    pub fn build(src: &Arc<Domain>, dst: &Arc<Domain>, mut f: impl FnMut(usize, usize) -> Value) -> ARelation {
        let values =
            (0..src.len()).flat_map(|i| (0..dst.len()).map(move |j| (i, j)).collect::<Vec<_>>())
                .map(|(i, j)| f(i, j))
                .collect();
        ARelation { src: Arc::clone(src), dst: Arc::clone(dst), values }
    }

    pub fn src(&self) -> &Arc<Domain> {
        &self.src
    }

    pub fn dst(&self) -> &Arc<Domain> {
        &self.dst
    }

    pub fn get(&self, i: usize, j: usize) -> Value {
        self.values[i * self.dst.len() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Value) {
        self.values[i * self.dst.len() + j] = v;
    }

    /// Whether the identity is below the relation (only for square relations).
    pub fn is_reflexive(&self, lat: &TruthLattice) -> bool {
        self.src == self.dst && (0..self.src.len()).all(|i| self.get(i, i) == lat.top())
    }

    /// Polar map towards the source side: for `u` on the destination domain,
    /// `a -> meet over x of (u(x) -> R(a, x))`.
    pub fn src_polar(&self, u: &ASet, lat: &TruthLattice) -> Result<ASet> {
        check_same_domain(&self.dst, u.domain())?;
        let values = (0..self.src.len())
            .map(|a| {
                lat.meet_all((0..self.dst.len()).map(|x| lat.imp(u.get(x), self.get(a, x))))
            })
            .collect();
        Ok(ASet { domain: Arc::clone(&self.src), values })
    }

    /// Polar map towards the destination side: for `f` on the source domain,
    /// `x -> meet over a of (f(a) -> R(a, x))`.
    pub fn dst_polar(&self, f: &ASet, lat: &TruthLattice) -> Result<ASet> {
        check_same_domain(&self.src, f.domain())?;
        let values = (0..self.dst.len())
            .map(|x| {
                lat.meet_all((0..self.src.len()).map(|a| lat.imp(f.get(a), self.get(a, x))))
            })
            .collect();
        Ok(ASet { domain: Arc::clone(&self.dst), values })
    }

    /// Lifts `R : U x W` to `(A x U) x W` with entry `((alpha,u), w) = R(u,w) -> alpha`.
    pub fn lift_src(&self, lat: &TruthLattice) -> ARelation {
        let graded = graded_domain(lat, &self.src);
        let n_src = self.src.len();
        let values = lat
            .values()
            .flat_map(|alpha| (0..n_src).map(move |s| (alpha, s)).collect::<Vec<_>>())
            .flat_map(|(alpha, s)| {
                (0..self.dst.len()).map(move |w| (alpha, s, w)).collect::<Vec<_>>()
            })
            .map(|(alpha, s, w)| lat.imp(self.get(s, w), alpha))
            .collect();
        ARelation { src: graded, dst: Arc::clone(&self.dst), values }
    }

    /// Lifts `R : U x W` to `U x (A x W)` with entry `(u, (alpha,w)) = R(u,w) -> alpha`.
    pub fn lift_dst(&self, lat: &TruthLattice) -> ARelation {
        let graded = graded_domain(lat, &self.dst);
        let n_dst = self.dst.len();
        let mut values = Vec::with_capacity(self.src.len() * graded.len());
        for s in 0..self.src.len() {
            for alpha in lat.values() {
                for w in 0..n_dst {
                    values.push(lat.imp(self.get(s, w), alpha));
                }
            }
        }
        ARelation { src: Arc::clone(&self.src), dst: graded, values }
    }

    pub fn transpose(&self) -> ARelation {
        let mut values = Vec::with_capacity(self.values.len());
        for j in 0..self.dst.len() {
            for i in 0..self.src.len() {
                values.push(self.get(i, j));
            }
        }
        ARelation { src: Arc::clone(&self.dst), dst: Arc::clone(&self.src), values }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn l11() -> Arc<TruthLattice> {
        TruthLattice::luk_chain(11).unwrap()
    }

    fn v(lat: &TruthLattice, x: f64) -> Value {
        lat.value_from_number(x).unwrap()
    }

    fn aset(lat: &TruthLattice, dom: &Arc<Domain>, xs: &[f64]) -> ASet {
        ASet::from_values(dom, xs.iter().map(|&x| v(lat, x)).collect()).unwrap()
    }

    #[test]
    fn subsethood_of_a_set_in_itself_is_top() {
        let lat = l11();
        let dom = Domain::new(["a", "b", "c"]).unwrap();
        let f = aset(&lat, &dom, &[0.3, 0.9, 0.0]);
        assert_eq!(f.subsethood(&f, &lat).unwrap(), lat.top());
    }

    #[test]
    fn subsethood_is_top_iff_pointwise_below() {
        let lat = l11();
        let dom = Domain::new(["a", "b"]).unwrap();
        let f = aset(&lat, &dom, &[0.7, 0.2]);
        let g = aset(&lat, &dom, &[0.5, 0.9]);
        assert_eq!(f.subsethood(&g, &lat).unwrap(), v(&lat, 0.8));
        assert!(!f.included_in(&g, &lat).unwrap());
        let below = aset(&lat, &dom, &[0.5, 0.2]);
        assert_eq!(below.subsethood(&f, &lat).unwrap(), lat.top());
        assert!(below.included_in(&f, &lat).unwrap());
    }

    #[test]
    fn subsethood_rejects_mismatched_domains() {
        let lat = l11();
        let d1 = Domain::new(["a", "b"]).unwrap();
        let d2 = Domain::new(["x", "y"]).unwrap();
        let f = ASet::constant(&d1, lat.top());
        let g = ASet::constant(&d2, lat.top());
        assert!(matches!(f.subsethood(&g, &lat), Err(Error::DomainMismatch { .. })));
    }

    #[test]
    fn singleton_examples() {
        let lat = l11();
        let dom = Domain::new(["a", "b"]).unwrap();
        let s = ASet::singleton(&lat, &dom, 0, lat.top());
        assert_eq!(s.values(), &[lat.top(), lat.bot()]);
        let z = ASet::singleton(&lat, &dom, 0, lat.bot());
        assert_eq!(z.values(), &[lat.bot(), lat.bot()]);
    }

    #[test]
    fn src_polar_on_identity_relation() {
        let lat = l11();
        let dom = Domain::new(["a", "b"]).unwrap();
        let delta = ARelation::build(&dom, &dom, |i, j| if i == j { lat.top() } else { lat.bot() });
        let u = aset(&lat, &dom, &[1.0, 0.5]);
        let r = delta.src_polar(&u, &lat).unwrap();
        assert_eq!(r.values(), &[v(&lat, 0.5), v(&lat, 0.0)]);
    }

    #[test]
    fn src_polar_degenerate_inputs() {
        let lat = l11();
        let dom = Domain::new(["a", "b", "c"]).unwrap();
        let all_top = ARelation::constant(&dom, &dom, lat.top());
        let any = aset(&lat, &dom, &[0.2, 0.9, 0.4]);
        assert_eq!(all_top.src_polar(&any, &lat).unwrap(), ASet::constant(&dom, lat.top()));
        let empty = ASet::constant(&dom, lat.bot());
        let arbitrary = ARelation::build(&dom, &dom, |i, j| v(&lat, [0.1, 0.6, 0.9][(i + j) % 3]));
        assert_eq!(arbitrary.src_polar(&empty, &lat).unwrap(), ASet::constant(&dom, lat.top()));
    }

    #[test]
    fn lift_entries() {
        let lat = l11();
        let dom = Domain::new(["s"]).unwrap();
        let co = Domain::new(["w"]).unwrap();
        for x in [0.0, 0.4, 1.0] {
            let rel = ARelation::constant(&dom, &co, v(&lat, x));
            let lifted = rel.lift_src(&lat);
            for alpha in lat.values() {
                let row = graded_index(1, alpha, 0);
                assert_eq!(lifted.get(row, 0), lat.imp(v(&lat, x), alpha));
            }
            // top alpha stratum is constantly top, zero relation always top
            let top_row = graded_index(1, lat.top(), 0);
            assert_eq!(lifted.get(top_row, 0), lat.top());
            if x == 0.0 {
                for alpha in lat.values() {
                    assert_eq!(lifted.get(graded_index(1, alpha, 0), 0), lat.top());
                }
            }
            if x == 1.0 {
                let a3 = v(&lat, 0.3);
                assert_eq!(lifted.get(graded_index(1, a3, 0), 0), a3);
            }
            let lifted_dst = rel.lift_dst(&lat);
            for alpha in lat.values() {
                assert_eq!(lifted_dst.get(0, graded_index(1, alpha, 0)), lat.imp(v(&lat, x), alpha));
            }
        }
    }

    #[test]
    fn polar_maps_are_antitone() {
        let lat = TruthLattice::luk_chain(5).unwrap();
        let dom = Domain::new(["a", "b", "c"]).unwrap();
        let rel = ARelation::build(&dom, &dom, |i, j| Value::from_index((i *2 + j * 3) % 5));
        let small = ASet::from_values(&dom, vec![Value::from_index(1); 3]).unwrap();
        let big = ASet::from_values(&dom, vec![Value::from_index(3); 3]).unwrap();
        let r_small = rel.src_polar(&small, &lat).unwrap();
        let r_big = rel.src_polar(&big, &lat).unwrap();
        assert!(r_big.included_in(&r_small, &lat).unwrap());
    }

    proptest! {
        // joining the singleton decomposition rebuilds the set exactly
        #[test]
        fn decompose_round_trip(values in proptest::collection::vec(0u32..11, 1..=5)) {
            let lat = l11();
            let names: Vec<String> = (0..values.len()).map(|i| format!("e{i}")).collect();
            let dom = Domain::new(names).unwrap();
            let f = ASet::from_values(&dom, values.iter().map(|&x| Value(x)).collect()).unwrap();
            let mut rebuilt = ASet::constant(&dom, lat.bot());
            for (alpha, w) in f.decompose() {
                let s = ASet::singleton(&lat, &dom, w, alpha);
                rebuilt = rebuilt.pointwise_join(&s, &lat).unwrap();
            }
            prop_assert_eq!(rebuilt, f);
        }
    }

    #[test]
    fn decompose_round_trip_exhaustive_tiny() {
        // every set over a 2-element domain and a 3-element chain
        let lat = TruthLattice::luk_chain(3).unwrap();
        let dom = Domain::new(["a", "b"]).unwrap();
        for a in lat.values() {
            for b in lat.values() {
                let f = ASet::from_values(&dom, vec![a, b]).unwrap();
                let mut rebuilt = ASet::constant(&dom, lat.bot());
                for (alpha, w) in f.decompose() {
                    let s = ASet::singleton(&lat, &dom, w, alpha);
                    rebuilt = rebuilt.pointwise_join(&s, &lat).unwrap();
                }
                assert_eq!(rebuilt, f);
            }
        }
    }
}
