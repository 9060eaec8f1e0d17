//! Finite residuated lattices of truth values.
//!
//! Values are indices into a finite carrier, so all arithmetic is exact:
//! a Łukasiewicz chain with `n` levels stores the value `i/(n-1)` as the
//! integer `i` and only renders it as a decimal. Table-defined lattices
//! carry explicit operation tables. [`TruthLattice::check_residuated`]
//! verifies every law exhaustively, which is feasible because the carrier
//! is finite.

use crate::{Error, Result};
use std::fmt;
use std::sync::Arc;

/// A truth value, represented as an index into the carrier of its lattice.
///
/// Values from different lattices must not be mixed; operations panic when
/// an index is outside the carrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Value(pub(crate) u32);

impl Value {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> Value {
        Value(i as u32)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeKind {
    /// Equally spaced chain with the Łukasiewicz product and residuum.
    LukasiewiczChain { levels: usize },
    /// Explicit operation tables.
    Table,
}

/// A finite bounded lattice with a commutative monoidal product and its
/// residuum, the algebra of truth values.
#[derive(Debug, Clone)]
pub struct TruthLattice {
    kind: LatticeKind,
    labels: Vec<String>,
    /// Numeric value of each carrier element, used to match grid values
    /// coming from input files.
    numeric: Vec<f64>,
    meet: Vec<u32>,
    join: Vec<u32>,
    otimes: Vec<u32>,
    imp: Vec<u32>,
    bottom: Value,
    top: Value,
}

/// One violated law instance found by [`TruthLattice::check_residuated`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawViolation {
    pub law: String,
    pub detail: String,
}

impl fmt::Display for LawViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.law, self.detail)
    }
}

const MAX_VIOLATIONS_PER_LAW: usize = 8;

impl TruthLattice {
    /// The Łukasiewicz chain with `n` equally spaced values `0, 1/(n-1), ..., 1`.
    pub fn luk_chain(n: usize) -> Result<Arc<TruthLattice>> {
        if n < 2 {
            return Err(Error::InvalidChainSize(n));
        }
        let m = (n - 1) as i64;
        let mut lat = TruthLattice::chain_skeleton(LatticeKind::LukasiewiczChain { levels: n }, n);
        for i in 0..n as i64 {
            for j in 0..n as i64 {
                let idx = (i * n as i64 + j) as usize;
                lat.otimes[idx] = (i + j - m).max(0) as u32;
                lat.imp[idx] = (m - i + j).min(m) as u32;
            }
        }
        Ok(Arc::new(lat))
    }

    /// The Gödel chain with `n` values: product is minimum, and the residuum
    /// of `a -> b` is top when `a <= b` and `b` otherwise.
    pub fn goedel_chain(n: usize) -> Result<Arc<TruthLattice>> {
        if n < 2 {
            return Err(Error::InvalidChainSize(n));
        }
        let mut lat = TruthLattice::chain_skeleton(LatticeKind::Table, n);
        for i in 0..n {
            for j in 0..n {
                let idx = i * n + j;
                lat.otimes[idx] = i.min(j) as u32;
                lat.imp[idx] = if i <= j { (n - 1) as u32 } else { j as u32 };
            }
        }
        Ok(Arc::new(lat))
    }

    fn chain_skeleton(kind: LatticeKind, n: usize) -> TruthLattice {
        let labels = chain_labels(n);
        let numeric = (0..n).map(|i| i as f64 / (n - 1) as f64).collect();
        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                meet[i * n + j] = i.min(j) as u32;
                join[i * n + j] = i.max(j) as u32;
            }
        }
        TruthLattice {
            kind,
            labels,
            numeric,
            meet,
            join,
            otimes: vec![0u32; n * n],
            imp: vec![0u32; n * n],
            bottom: Value(0),
            top: Value((n - 1) as u32),
        }
    }

    /// Builds a table-defined lattice. Shapes and bound existence are
    /// validated here; the algebraic laws are reported by
    /// [`TruthLattice::check_residuated`] so that deliberately corrupted
    /// tables can still be constructed and examined.
    pub fn from_tables(
        carrier: Vec<f64>,
        meet: Vec<Vec<usize>>,
        join: Vec<Vec<usize>>,
        otimes: Vec<Vec<usize>>,
        imp: Vec<Vec<usize>>,
    ) -> Result<Arc<TruthLattice>> {
        let n = carrier.len();
        if n < 2 {
            return Err(Error::InvalidLattice(format!(
                "carrier must have at least 2 elements, got {n}"
            )));
        }
        for i in 0..n {
            for j in i + 1..n {
                if (carrier[i] - carrier[j]).abs() <= 1e-9 {
                    return Err(Error::InvalidLattice(format!(
                        "carrier elements {i} and {j} are indistinguishable"
                    )));
                }
            }
        }
        for (k, table) in [(0, &meet), (1, &join), (2, &otimes), (3, &imp)] {
            let name = ["meet", "join", "otimes", "imp"][k];
            if table.len() != n || table.iter().any(|row| row.len() != n) {
                return Err(Error::InvalidLattice(format!("{name} table is not {n}x{n}")));
            }
            if table.iter().flatten().any(|&e| e >= n) {
                return Err(Error::InvalidLattice(format!(
                    "{name} table contains an entry outside the carrier"
                )));
            }
        }
        let flat = |t: &Vec<Vec<usize>>| t.iter().flatten().map(|&e| e as u32).collect::<Vec<_>>();
        let meet = flat(&meet);
        let join = flat(&join);
        let bottom = (0..n)
            .find(|&b| (0..n).all(|a| meet[b * n + a] as usize == b))
            .map(|b| Value(b as u32))
            .ok_or_else(|| Error::InvalidLattice("no bottom element".into()))?;
        let top = (0..n)
            .find(|&t| (0..n).all(|a| meet[t * n + a] as usize == a))
            .map(|t| Value(t as u32))
            .ok_or_else(|| Error::InvalidLattice("no top element".into()))?;
        let labels = carrier.iter().map(|x| format!("{x}")).collect();
        Ok(Arc::new(TruthLattice {
            kind: LatticeKind::Table,
            labels,
            numeric: carrier,
            meet,
            join,
            otimes: flat(&otimes),
            imp: flat(&imp),
            bottom,
            top,
        }))
    }

    /// Returns a copy with a single `imp` entry overwritten. Only useful for
    /// planting defects in tests of the law checker.
    pub fn with_corrupted_imp(&self, a: Value, b: Value, result: Value) -> Arc<TruthLattice> {
        let mut lat = self.clone();
        lat.kind = LatticeKind::Table;
        lat.imp[self.idx(a, b)] = result.0;
        Arc::new(lat)
    }

    pub fn kind(&self) -> &LatticeKind {
        &self.kind
    }

    /// Number of levels when this is a Łukasiewicz chain.
    pub fn chain_levels(&self) -> Option<usize> {
        match self.kind {
            LatticeKind::LukasiewiczChain { levels } => Some(levels),
            LatticeKind::Table => None,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> impl DoubleEndedIterator<Item = Value> + Clone {
        (0..self.labels.len() as u32).map(Value)
    }

    pub fn bot(&self) -> Value {
        self.bottom
    }

    pub fn top(&self) -> Value {
        self.top
    }

    pub fn label(&self, v: Value) -> &str {
        &self.labels[v.index()]
    }

    pub fn numeric(&self, v: Value) -> f64 {
        self.numeric[v.index()]
    }

    /// Resolves a number to the carrier element it denotes exactly.
    pub fn value_from_number(&self, x: f64) -> Result<Value> {
        let not_on_grid = || Error::NotOnGrid { value: x, lattice: self.describe() };
        match self.kind {
            LatticeKind::LukasiewiczChain { levels } => {
                let m = (levels - 1) as f64;
                let i = (x * m).round();
                if i < 0.0 || i > m || (x - i / m).abs() > 1e-9 {
                    return Err(not_on_grid());
                }
                Ok(Value(i as u32))
            }
            LatticeKind::Table => self
                .numeric
                .iter()
                .position(|&c| (c - x).abs() <= 1e-9)
                .map(|i| Value(i as u32))
                .ok_or_else(not_on_grid),
        }
    }

    pub fn describe(&self) -> String {
        match self.kind {
            LatticeKind::LukasiewiczChain { levels } => format!("lukasiewicz-{levels}"),
            LatticeKind::Table => format!("table-{}", self.len()),
        }
    }

    fn idx(&self, a: Value, b: Value) -> usize {
        let n = self.len();
        let (i, j) = (a.index(), b.index());
        assert!(i < n && j < n, "value outside the carrier of {}", self.describe());
        i * n + j
    }

    pub fn meet(&self, a: Value, b: Value) -> Value {
        Value(self.meet[self.idx(a, b)])
    }

    pub fn join(&self, a: Value, b: Value) -> Value {
        Value(self.join[self.idx(a, b)])
    }

    pub fn otimes(&self, a: Value, b: Value) -> Value {
        Value(self.otimes[self.idx(a, b)])
    }

    pub fn imp(&self, a: Value, b: Value) -> Value {
        Value(self.imp[self.idx(a, b)])
    }

    /// Lattice order: `a <= b` iff `a /\ b = a`.
    pub fn leq(&self, a: Value, b: Value) -> bool {
        self.meet(a, b) == a
    }

    pub fn meet_all(&self, values: impl IntoIterator<Item = Value>) -> Value {
        values.into_iter().fold(self.top, |acc, v| self.meet(acc, v))
    }

    pub fn join_all(&self, values: impl IntoIterator<Item = Value>) -> Value {
        values.into_iter().fold(self.bottom, |acc, v| self.join(acc, v))
    }

    /// Exhaustively checks every law the truth algebra is required to
    /// satisfy and reports each violated instance (capped per law).
    ///
    /// Laws: bounded lattice axioms, commutative monoid structure of the
    /// product with unit top, the residuation equivalence, and frame
    /// distributivity together with its dual. Distributivity over arbitrary
    /// subsets is checked when the carrier has at most 12 elements and over
    /// binary joins/meets otherwise.
    pub fn check_residuated(&self) -> Vec<LawViolation> {
        let mut report = Report::default();
        let vals = || self.values();
        let fmt1 = |a: Value| self.label(a).to_string();
        let fmt2 = |a: Value, b: Value| format!("({}, {})", self.label(a), self.label(b));

        for a in vals() {
            if !self.leq(self.bottom, a) {
                report.push("bounds", format!("bottom !<= {}", fmt1(a)));
            }
            if !self.leq(a, self.top) {
                report.push("bounds", format!("{} !<= top", fmt1(a)));
            }
            if self.meet(a, a) != a {
                report.push("meet-idempotent", fmt1(a));
            }
            if self.join(a, a) != a {
                report.push("join-idempotent", fmt1(a));
            }
            if self.otimes(a, self.top) != a {
                report.push("otimes-unit", fmt1(a));
            }
        }
        for a in vals() {
            for b in vals() {
                if self.meet(a, b) != self.meet(b, a) {
                    report.push("meet-commutative", fmt2(a, b));
                }
                if self.join(a, b) != self.join(b, a) {
                    report.push("join-commutative", fmt2(a, b));
                }
                if self.otimes(a, b) != self.otimes(b, a) {
                    report.push("otimes-commutative", fmt2(a, b));
                }
                if self.meet(a, self.join(a, b)) != a {
                    report.push("absorption", fmt2(a, b));
                }
                if self.join(a, self.meet(a, b)) != a {
                    report.push("absorption", fmt2(a, b));
                }
            }
        }
        for a in vals() {
            for b in vals() {
                for c in vals() {
                    let l = format!("({}, {}, {})", self.label(a), self.label(b), self.label(c));
                    if self.meet(a, self.meet(b, c)) != self.meet(self.meet(a, b), c) {
                        report.push("meet-associative", l.clone());
                    }
                    if self.join(a, self.join(b, c)) != self.join(self.join(a, b), c) {
                        report.push("join-associative", l.clone());
                    }
                    if self.otimes(a, self.otimes(b, c)) != self.otimes(self.otimes(a, b), c) {
                        report.push("otimes-associative", l.clone());
                    }
                    let prod_leq = self.leq(self.otimes(a, b), c);
                    let res_leq = self.leq(a, self.imp(b, c));
                    if prod_leq != res_leq {
                        report.push("residuation", l.clone());
                    }
                }
            }
        }
        self.check_distributivity(&mut report);
        report.violations
    }

    fn check_distributivity(&self, report: &mut Report) {
        let n = self.len();
        if n <= 12 {
            // every subset, encoded as a bitmask
            for mask in 0u32..(1 << n) {
                let subset = || {
                    (0..n)
                        .filter(move |i| mask & (1 << i) != 0)
                        .map(|i| Value(i as u32))
                };
                let sup = self.join_all(subset());
                let inf = self.meet_all(subset());
                for a in self.values() {
                    self.distributivity_instance(report, a, sup, inf, &subset().collect::<Vec<_>>());
                }
            }
        } else {
            for a in self.values() {
                for b in self.values() {
                    for c in self.values() {
                        let sup = self.join(b, c);
                        let inf = self.meet(b, c);
                        self.distributivity_instance(report, a, sup, inf, &[b, c]);
                    }
                }
            }
        }
    }

    fn distributivity_instance(
        &self,
        report: &mut Report,
        a: Value,
        sup: Value,
        inf: Value,
        subset: &[Value],
    ) {
        let show = |a: Value| {
            format!(
                "a={}, S={{{}}}",
                self.label(a),
                subset.iter().map(|&s| self.label(s)).collect::<Vec<_>>().join(", ")
            )
        };
        let joined_meets = self.join_all(subset.iter().map(|&s| self.meet(a, s)));
        if self.meet(a, sup) != joined_meets {
            report.push("frame-distributivity", show(a));
        }
        let met_joins = self.meet_all(subset.iter().map(|&s| self.join(a, s)));
        if self.join(a, inf) != met_joins {
            report.push("dual-frame-distributivity", show(a));
        }
        let joined_prods = self.join_all(subset.iter().map(|&s| self.otimes(a, s)));
        if self.otimes(a, sup) != joined_prods {
            report.push("otimes-join-distributivity", show(a));
        }
        let met_imps = self.meet_all(subset.iter().map(|&s| self.imp(s, a)));
        if self.imp(sup, a) != met_imps {
            report.push("imp-antitone-join", show(a));
        }
        let met_imps_right = self.meet_all(subset.iter().map(|&s| self.imp(a, s)));
        if self.imp(a, inf) != met_imps_right {
            report.push("imp-monotone-meet", show(a));
        }
    }
}

#[derive(Default)]
struct Report {
    violations: Vec<LawViolation>,
}

impl Report {
    fn push(&mut self, law: &str, detail: String) {
        let seen = self.violations.iter().filter(|v| v.law == law).count();
        if seen < MAX_VIOLATIONS_PER_LAW {
            self.violations.push(LawViolation { law: law.to_string(), detail });
        }
    }
}

/// Decimal labels `0.0, 0.1, ..., 1.0` when the step denominator divides a
/// power of ten, fractions `i/(n-1)` otherwise.
fn chain_labels(n: usize) -> Vec<String> {
    let denom = (n - 1) as u64;
    let mut digits = None;
    let mut pow = 1u64;
    for d in 0..=9u32 {
        if pow.is_multiple_of(denom) {
            digits = Some(d);
            break;
        }
        pow = pow.saturating_mul(10);
    }
    match digits {
        Some(0) => (0..n).map(|i| i.to_string()).collect(),
        Some(d) => {
            let scale = 10u64.pow(d) / denom;
            (0..n as u64)
                .map(|i| {
                    let scaled = i * scale;
                    let whole = scaled / 10u64.pow(d);
                    let frac = scaled % 10u64.pow(d);
                    format!("{whole}.{frac:0width$}", width = d as usize)
                })
                .collect()
        }
        None => (0..n).map(|i| format!("{i}/{denom}")).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l11() -> Arc<TruthLattice> {
        TruthLattice::luk_chain(11).unwrap()
    }

    fn v(lat: &TruthLattice, x: f64) -> Value {
        lat.value_from_number(x).unwrap()
    }

    #[test]
    fn chain_carrier_is_the_decimal_grid() {
        let lat = l11();
        let labels: Vec<_> = lat.values().map(|x| lat.label(x).to_string()).collect();
        assert_eq!(
            labels,
            ["0.0", "0.1", "0.2", "0.3", "0.4", "0.5", "0.6", "0.7", "0.8", "0.9", "1.0"]
        );
    }

    #[test]
    fn two_element_chain_is_boolean() {
        let lat = TruthLattice::luk_chain(2).unwrap();
        let (f, t) = (lat.bot(), lat.top());
        assert_eq!(lat.imp(f, f), t);
        assert_eq!(lat.imp(f, t), t);
        assert_eq!(lat.imp(t, f), f);
        assert_eq!(lat.imp(t, t), t);
        assert_eq!(lat.otimes(t, t), t);
        assert_eq!(lat.otimes(t, f), f);
        assert!(lat.check_residuated().is_empty());
    }

    #[test]
    fn rejects_degenerate_chain() {
        assert!(matches!(TruthLattice::luk_chain(1), Err(Error::InvalidChainSize(1))));
        assert!(matches!(TruthLattice::luk_chain(0), Err(Error::InvalidChainSize(0))));
    }

    #[test]
    fn lukasiewicz_arithmetic_on_the_grid() {
        let lat = l11();
        assert_eq!(lat.imp(v(&lat, 0.9), v(&lat, 0.4)), v(&lat, 0.5));
        assert_eq!(lat.otimes(v(&lat, 0.9), v(&lat, 0.5)), v(&lat, 0.4));
        assert_eq!(lat.otimes(v(&lat, 0.4), v(&lat, 0.5)), v(&lat, 0.0));
        assert_eq!(lat.meet(v(&lat, 0.3), v(&lat, 0.8)), v(&lat, 0.3));
        assert_eq!(lat.join(v(&lat, 0.3), v(&lat, 0.8)), v(&lat, 0.8));
    }

    #[test]
    fn residuation_holds_for_all_triples_on_l11() {
        assert!(l11().check_residuated().is_empty());
    }

    #[test]
    fn goedel_chain_is_residuated() {
        let lat = TruthLattice::goedel_chain(3).unwrap();
        assert!(lat.check_residuated().is_empty());
    }

    #[test]
    fn corrupted_imp_is_reported() {
        let lat = l11();
        let half = v(&lat, 0.5);
        let bad = lat.with_corrupted_imp(half, half, lat.bot());
        let report = bad.check_residuated();
        assert!(report.iter().any(|viol| viol.law == "residuation"), "{report:?}");
    }

    #[test]
    fn imp_reflects_order_and_modus_ponens_bound() {
        let lat = l11();
        for a in lat.values() {
            for b in lat.values() {
                assert_eq!(lat.imp(a, b) == lat.top(), lat.leq(a, b));
                assert!(lat.leq(lat.otimes(a, lat.imp(a, b)), b));
            }
        }
    }

    #[test]
    fn grid_closure_no_value_escapes_the_carrier() {
        let lat = l11();
        for a in lat.values() {
            for b in lat.values() {
                for r in [lat.meet(a, b), lat.join(a, b), lat.otimes(a, b), lat.imp(a, b)] {
                    assert!(r.index() < lat.len());
                }
            }
        }
    }

    #[test]
    fn off_grid_numbers_are_rejected() {
        let lat = l11();
        assert!(lat.value_from_number(0.55).is_err());
        assert!(lat.value_from_number(-0.1).is_err());
        assert!(lat.value_from_number(1.1).is_err());
        assert_eq!(lat.value_from_number(0.30000000001).unwrap(), v(&lat, 0.3));
    }

    #[test]
    fn table_lattice_round_trip() {
        // three-element Gödel chain given explicitly as tables
        let g = TruthLattice::goedel_chain(3).unwrap();
        let n = g.len();
        let table = |f: &dyn Fn(Value, Value) -> Value| {
            (0..n)
                .map(|i| (0..n).map(|j| f(Value(i as u32), Value(j as u32)).index()).collect())
                .collect::<Vec<Vec<usize>>>()
        };
        let rebuilt = TruthLattice::from_tables(
            vec![0.0, 0.5, 1.0],
            table(&|a, b| g.meet(a, b)),
            table(&|a, b| g.join(a, b)),
            table(&|a, b| g.otimes(a, b)),
            table(&|a, b| g.imp(a, b)),
        )
        .unwrap();
        assert_eq!(rebuilt.bot(), g.bot());
        assert_eq!(rebuilt.top(), g.top());
        assert!(rebuilt.check_residuated().is_empty());
    }

    #[test]
    fn from_tables_rejects_bad_shapes() {
        let ok = vec![vec![0, 0], vec![0, 1]];
        let bad = vec![vec![0, 0, 0], vec![0, 1, 1]];
        assert!(TruthLattice::from_tables(
            vec![0.0, 1.0],
            bad,
            ok.clone(),
            ok.clone(),
            ok.clone()
        )
        .is_err());
        assert!(TruthLattice::from_tables(vec![0.0], vec![vec![0]], vec![vec![0]], vec![vec![0]], vec![vec![0]]).is_err());
    }
}
