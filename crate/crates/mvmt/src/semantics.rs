//! Models over two-sided frames and the compositional valuation.
//!
//! Demands are evaluated on the political side of the frame and promises on
//! the social side. Every formula denotes a stable pair: a graded valuation
//! `val` on value/state pairs and a refutation vector `descr` on states.
//! Atoms are usually supplied as `descr` vectors and closed into stable
//! pairs; the modal clauses go through the frame's affinity relations and
//! re-close the result, flagging a warning when the raw image was unstable
//! (which only happens on incompatible frames).

use crate::fuzzy::{graded_index, ARelation, ASet};
use crate::graph::{Graph, HeteroFrame};
use crate::language::{Formula, Sequent, Sort, TypedFormula};
use crate::lattice::{TruthLattice, Value};
use crate::polarity::{Concept, EnumerationMode, DEFAULT_ENUMERATION_LIMIT};
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::sync::Arc;

/// The denotation of a formula: a stable valuation/refutation pair.
#[derive(Debug, Clone, PartialEq)]
pub struct Interpretation {
    /// Graded valuation on value/state pairs of the evaluation side.
    pub val: ASet,
    /// Refutation degrees on the states of the evaluation side.
    pub descr: ASet,
}

impl Interpretation {
    pub fn from_concept(c: &Concept) -> Interpretation {
        Interpretation { val: c.extent.clone(), descr: c.intent.clone() }
    }

    pub fn to_concept(&self) -> Concept {
        Concept { extent: self.val.clone(), intent: self.descr.clone() }
    }
}

/// A model: a frame plus stable interpretations for the atoms of each sort.
/// Demand-side atoms live on the political graph, promise-side atoms on the
/// social graph.
#[derive(Debug, Clone)]
pub struct Model {
    frame: Arc<HeteroFrame>,
    sd_atoms: BTreeMap<String, Interpretation>,
    pp_atoms: BTreeMap<String, Interpretation>,
}

impl Model {
    /// Builds a model from already-stable interpretations.
    pub fn new(
        frame: Arc<HeteroFrame>,
        sd_atoms: BTreeMap<String, Interpretation>,
        pp_atoms: BTreeMap<String, Interpretation>,
    ) -> Result<Model> {
        for (name, interp) in sd_atoms.iter() {
            validate_stable(frame.political(), name, interp)?;
        }
        for (name, interp) in pp_atoms.iter() {
            validate_stable(frame.social(), name, interp)?;
        }
        Ok(Model { frame, sd_atoms, pp_atoms })
    }

    /// Builds a model from refutation vectors, closing each into a stable
    /// pair on the appropriate side.
    pub fn from_descrs(
        frame: Arc<HeteroFrame>,
        sd_descrs: BTreeMap<String, Vec<Value>>,
        pp_descrs: BTreeMap<String, Vec<Value>>,
    ) -> Result<Model> {
        let mut sd_atoms = BTreeMap::new();
        for (name, descr) in sd_descrs {
            let u = ASet::from_values(frame.political().states(), descr)?;
            let c = frame.political().concept_from_states(&u)?;
            sd_atoms.insert(name, Interpretation::from_concept(&c));
        }
        let mut pp_atoms = BTreeMap::new();
        for (name, descr) in pp_descrs {
            let u = ASet::from_values(frame.social().states(), descr)?;
            let c = frame.social().concept_from_states(&u)?;
            pp_atoms.insert(name, Interpretation::from_concept(&c));
        }
        Ok(Model { frame, sd_atoms, pp_atoms })
    }

    pub fn frame(&self) -> &Arc<HeteroFrame> {
        &self.frame
    }

    pub fn lattice(&self) -> &Arc<TruthLattice> {
        self.frame.lattice()
    }

    pub fn sd_atoms(&self) -> &BTreeMap<String, Interpretation> {
        &self.sd_atoms
    }

    pub fn pp_atoms(&self) -> &BTreeMap<String, Interpretation> {
        &self.pp_atoms
    }

    /// The graph on which formulas of `sort` are evaluated. Note the
    /// inversion: demands are tested on political states and promises on
    /// social states.
    pub fn side(&self, sort: Sort) -> &Graph {
        match sort {
            Sort::Sd => self.frame.political(),
            Sort::Pp => self.frame.social(),
        }
    }

    /// Compositional valuation of a well-sorted formula.
    pub fn extend(&self, formula: &Formula, sort: Sort) -> Result<Interpretation> {
        self.extend_traced(formula, sort, &mut Vec::new())
    }

    /// Valuation that also reports, per modal subformula, whether the raw
    /// image had to be re-closed (a symptom of an incompatible frame).
    pub fn extend_with_warnings(
        &self,
        formula: &Formula,
        sort: Sort,
    ) -> Result<(Interpretation, Vec<String>)> {
        let mut warnings = Vec::new();
        let interp = self.extend_traced(formula, sort, &mut warnings)?;
        Ok((interp, warnings))
    }

    fn extend_traced(
        &self,
        formula: &Formula,
        sort: Sort,
        warnings: &mut Vec<String>,
    ) -> Result<Interpretation> {
        let lat = self.lattice();
        let side = self.side(sort);
        match formula {
            Formula::Top => {
                let val = ASet::constant(side.graded(), lat.top());
                let descr = side.intent_of(&val)?;
                Ok(Interpretation { val, descr })
            }
            Formula::Bot => {
                let descr = ASet::constant(side.states(), lat.top());
                let val = side.extent_of(&descr)?;
                Ok(Interpretation { val, descr })
            }
            Formula::Atom(name) => {
                let table = match sort {
                    Sort::Sd => &self.sd_atoms,
                    Sort::Pp => &self.pp_atoms,
                };
                table
                    .get(name)
                    .cloned()
                    .ok_or_else(|| Error::UninterpretedAtom(name.clone()))
            }
            Formula::And(l, r) => {
                let il = self.extend_traced(l, sort, warnings)?;
                let ir = self.extend_traced(r, sort, warnings)?;
                let val = il.val.pointwise_meet(&ir.val, lat)?;
                let descr = side.intent_of(&val)?;
                Ok(Interpretation { val, descr })
            }
            Formula::Or(l, r) => {
                let il = self.extend_traced(l, sort, warnings)?;
                let ir = self.extend_traced(r, sort, warnings)?;
                let descr = il.descr.pointwise_meet(&ir.descr, lat)?;
                let val = side.extent_of(&descr)?;
                Ok(Interpretation { val, descr })
            }
            Formula::Dmd(inner) => {
                if sort != Sort::Sd {
                    return Err(Error::Sort {
                        pos: None,
                        msg: "dmd formula evaluated at sort PP".into(),
                    });
                }
                let ii = self.extend_traced(inner, Sort::Pp, warnings)?;
                let raw = self.frame.dmd_up(&ii.val)?;
                let val = side.extent_of(&raw)?;
                let descr = side.intent_of(&val)?;
                if descr != raw {
                    warnings.push(format!(
                        "dmd image of `{inner}` was not stable and has been closed; the frame is not compatible"
                    ));
                }
                Ok(Interpretation { val, descr })
            }
            Formula::Loz(inner) => {
                if sort != Sort::Pp {
                    return Err(Error::Sort {
                        pos: None,
                        msg: "loz formula evaluated at sort SD".into(),
                    });
                }
                let ii = self.extend_traced(inner, Sort::Sd, warnings)?;
                let raw = self.frame.loz_up(&ii.val)?;
                let val = side.extent_of(&raw)?;
                let descr = side.intent_of(&val)?;
                if descr != raw {
                    warnings.push(format!(
                        "loz image of `{inner}` was not stable and has been closed; the frame is not compatible"
                    ));
                }
                Ok(Interpretation { val, descr })
            }
        }
    }

    /// Graded support: does the situation `(beta, state)` support `formula`
    /// at least to degree `alpha`?
    pub fn supports(
        &self,
        beta: Value,
        state: &str,
        alpha: Value,
        formula: &TypedFormula,
    ) -> Result<bool> {
        let side = self.side(formula.sort);
        let z = side.states().index_of(state).map_err(|_| {
            Error::SideMismatch(format!(
                "state `{state}` is not on the {} evaluation side of {} formulas",
                side_name(formula.sort),
                formula.sort
            ))
        })?;
        let interp = self.extend(&formula.formula, formula.sort)?;
        let cell = interp.val.get(graded_index(side.states().len(), beta, z));
        Ok(self.lattice().leq(alpha, cell))
    }

    /// Graded refutation: does `state` refute `formula` at least to degree
    /// `alpha`?
    pub fn refutes(&self, state: &str, alpha: Value, formula: &TypedFormula) -> Result<bool> {
        let side = self.side(formula.sort);
        let z = side.states().index_of(state).map_err(|_| {
            Error::SideMismatch(format!(
                "state `{state}` is not on the {} evaluation side of {} formulas",
                side_name(formula.sort),
                formula.sort
            ))
        })?;
        let interp = self.extend(&formula.formula, formula.sort)?;
        Ok(self.lattice().leq(alpha, interp.descr.get(z)))
    }

    /// Sequent truth: the left valuation is included in the right one, or
    /// equivalently the right refutation in the left one. Both criteria are
    /// computed and must agree; on stable pairs they are dual by
    /// construction, so divergence would be an implementation bug.
    pub fn sequent_true(&self, s: &Sequent) -> Result<bool> {
        let lat = self.lattice();
        let li = self.extend(&s.lhs, s.sort)?;
        let ri = self.extend(&s.rhs, s.sort)?;
        let by_val = li.val.included_in(&ri.val, lat)?;
        let by_descr = ri.descr.included_in(&li.descr, lat)?;
        assert_eq!(
            by_val, by_descr,
            "the two truth criteria diverged on `{s}`; stable pairs must be ordered dually"
        );
        Ok(by_val)
    }

    /// Deterministic plain-text rendering of the frame and the atom
    /// interpretations, used for countermodel and falsification output.
    pub fn describe(&self) -> String {
        let lat = self.lattice();
        let mut out = String::new();
        let matrix = |out: &mut String, label: &str, rel: &ARelation| {
            out.push_str(&format!(
                "  {label} ({} x {}):\n",
                rel.src().names().join(","),
                rel.dst().names().join(",")
            ));
            for i in 0..rel.src().len() {
                let row: Vec<&str> =
                    (0..rel.dst().len()).map(|j| lat.label(rel.get(i, j))).collect();
                out.push_str(&format!("    [{}]\n", row.join(", ")));
            }
        };
        out.push_str(&format!("frame over {}:\n", lat.describe()));
        matrix(&mut out, "social similarity", self.frame.social().edges());
        matrix(&mut out, "political similarity", self.frame.political().edges());
        matrix(&mut out, "dmd affinity", self.frame.r_dmd());
        matrix(&mut out, "loz affinity", self.frame.r_loz());
        out.push_str("atoms (refutation vectors):\n");
        for (name, interp) in &self.sd_atoms {
            out.push_str(&format!("  SD {name}: {}\n", interp.descr.render(lat)));
        }
        for (name, interp) in &self.pp_atoms {
            out.push_str(&format!("  PP {name}: {}\n", interp.descr.render(lat)));
        }
        out
    }

    /// Whether the valuation of `formula` is monotone in its grade argument.
    pub fn monotone_check(&self, formula: &Formula, sort: Sort) -> Result<bool> {
        let lat = self.lattice();
        let side = self.side(sort);
        let n = side.states().len();
        let interp = self.extend(formula, sort)?;
        for beta in lat.values() {
            for beta2 in lat.values() {
                if !lat.leq(beta, beta2) {
                    continue;
                }
                for z in 0..n {
                    let lo = interp.val.get(graded_index(n, beta, z));
                    let hi = interp.val.get(graded_index(n, beta2, z));
                    if !lat.leq(lo, hi) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

fn side_name(sort: Sort) -> &'static str {
    match sort {
        Sort::Sd => "political",
        Sort::Pp => "social",
    }
}

fn validate_stable(side: &Graph, name: &str, interp: &Interpretation) -> Result<()> {
    let expected_descr = side.intent_of(&interp.val)?;
    let expected_val = side.extent_of(&interp.descr)?;
    if expected_descr != interp.descr || expected_val != interp.val {
        return Err(Error::SideMismatch(format!(
            "interpretation of atom `{name}` is not a stable pair on its side"
        )));
    }
    Ok(())
}

/// Closed-form closure on Łukasiewicz chains: in grid units,
/// `val(beta, z) = min(m, m - max_z'(max(0, descr(z') + E(z,z') - m)) + beta)`
/// where `m` is the top index. Equal to [`Graph::extent_of`] but computed
/// with plain integer arithmetic instead of the quantified residuum formula.
pub fn luk_closure(lat: &TruthLattice, descr: &ASet, edges: &ARelation) -> Result<ASet> {
    let levels = lat.chain_levels().ok_or(Error::UnsupportedLattice("Łukasiewicz chain"))?;
    if edges.src() != edges.dst() || edges.src() != descr.domain() {
        return Err(Error::Dimension("edge relation must be square on the descr domain".into()));
    }
    let m = (levels - 1) as i64;
    let n = descr.domain().len();
    let peak: Vec<i64> = (0..n)
        .map(|z| {
            (0..n)
                .map(|z1| (descr.get(z1).index() as i64 + edges.get(z, z1).index() as i64 - m).max(0))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let graded = crate::fuzzy::graded_domain(lat, descr.domain());
    let mut values = Vec::with_capacity(graded.len());
    for beta in 0..=m {
        for z in 0..n {
            values.push(Value::from_index((m - peak[z] + beta).min(m) as usize));
        }
    }
    ASet::from_values(&graded, values)
}

/// How a bounded validity check was carried out and what it found.
#[derive(Debug, Clone)]
pub enum ValidityVerdict {
    /// No falsifying stable atom assignment exists up to the bound.
    Holds { checked: usize, exhaustive: bool },
    /// A model based on the frame falsifies the sequent.
    Falsified { model: Model },
}

#[derive(Debug, Clone, Copy)]
pub struct ValidityOptions {
    /// Enumerate exhaustively when the assignment count is at most this.
    pub exhaustive_limit: f64,
    /// Sample size used above the limit.
    pub samples: usize,
    pub seed: u64,
}

impl Default for ValidityOptions {
    fn default() -> Self {
        ValidityOptions { exhaustive_limit: 20_000.0, samples: 500, seed: 0 }
    }
}

/// Checks a sequent against every (or a sample of) stable atom assignments
/// on a fixed frame.
pub fn sequent_valid(
    frame: &Arc<HeteroFrame>,
    sequent: &Sequent,
    options: &ValidityOptions,
) -> Result<ValidityVerdict> {
    let occurrences = sequent.atom_occurrences();
    let political_cl = frame
        .political()
        .to_polarity()
        .enumerate_concepts(EnumerationMode::ClosureGeneration, DEFAULT_ENUMERATION_LIMIT)?;
    let social_cl = frame
        .social()
        .to_polarity()
        .enumerate_concepts(EnumerationMode::ClosureGeneration, DEFAULT_ENUMERATION_LIMIT)?;
    let choices: Vec<usize> = occurrences
        .iter()
        .map(|(_, sort)| match sort {
            Sort::Sd => political_cl.len(),
            Sort::Pp => social_cl.len(),
        })
        .collect();
    let total: f64 = choices.iter().map(|&c| c as f64).product();

    let build = |assignment: &[usize]| -> Result<Model> {
        let mut sd_atoms = BTreeMap::new();
        let mut pp_atoms = BTreeMap::new();
        for (k, (name, sort)) in occurrences.iter().enumerate() {
            let interp = match sort {
                Sort::Sd => Interpretation::from_concept(political_cl.get(assignment[k])),
                Sort::Pp => Interpretation::from_concept(social_cl.get(assignment[k])),
            };
            match sort {
                Sort::Sd => sd_atoms.insert(name.clone(), interp),
                Sort::Pp => pp_atoms.insert(name.clone(), interp),
            };
        }
        Model::new(Arc::clone(frame), sd_atoms, pp_atoms)
    };

    if total <= options.exhaustive_limit {
        let mut assignment = vec![0usize; occurrences.len()];
        let mut checked = 0usize;
        loop {
            let model = build(&assignment)?;
            checked += 1;
            if !model.sequent_true(sequent)? {
                return Ok(ValidityVerdict::Falsified { model });
            }
            if !advance(&mut assignment, &choices) {
                break;
            }
        }
        Ok(ValidityVerdict::Holds { checked, exhaustive: true })
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
        for _ in 0..options.samples {
            let assignment: Vec<usize> =
                choices.iter().map(|&c| rng.gen_range(0..c)).collect();
            let model = build(&assignment)?;
            if !model.sequent_true(sequent)? {
                return Ok(ValidityVerdict::Falsified { model });
            }
        }
        Ok(ValidityVerdict::Holds { checked: options.samples, exhaustive: false })
    }
}

fn advance(assignment: &mut [usize], choices: &[usize]) -> bool {
    for (slot, &bound) in assignment.iter_mut().zip(choices) {
        *slot += 1;
        if *slot < bound {
            return true;
        }
        *slot = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::{ARelation, Domain};
    use crate::language::parse;

    fn l11() -> Arc<TruthLattice> {
        TruthLattice::luk_chain(11).unwrap()
    }

    fn v(lat: &TruthLattice, x: f64) -> Value {
        lat.value_from_number(x).unwrap()
    }

    fn small_frame(lat: &Arc<TruthLattice>) -> Arc<HeteroFrame> {
        let dom_s = Domain::new(["s0", "s1"]).unwrap();
        let dom_p = Domain::new(["p0", "p1"]).unwrap();
        let e_s = ARelation::build(&dom_s, &dom_s, |i, j| {
            if i == j { lat.top() } else { v(lat, 0.5) }
        });
        let e_p = ARelation::build(&dom_p, &dom_p, |i, j| {
            if i == j { lat.top() } else { v(lat, 0.3) }
        });
        let social = Graph::new(Arc::clone(lat), e_s).unwrap();
        let political = Graph::new(Arc::clone(lat), e_p).unwrap();
        let r_dmd = ARelation::constant(&dom_p, &dom_s, v(lat, 0.6));
        let r_loz = ARelation::constant(&dom_s, &dom_p, v(lat, 0.4));
        Arc::new(HeteroFrame::new(social, political, r_dmd, r_loz).unwrap())
    }

    fn model_with_atoms(frame: &Arc<HeteroFrame>, lat: &TruthLattice) -> Model {
        let mut sd = BTreeMap::new();
        sd.insert("p".to_string(), vec![v(lat, 0.7), v(lat, 0.2)]);
        sd.insert("q".to_string(), vec![v(lat, 0.1), v(lat, 0.9)]);
        let mut pp = BTreeMap::new();
        pp.insert("p".to_string(), vec![v(lat, 0.4), v(lat, 0.8)]);
        pp.insert("q".to_string(), vec![v(lat, 1.0), v(lat, 0.0)]);
        Model::from_descrs(Arc::clone(frame), sd, pp).unwrap()
    }

    #[test]
    fn bot_valuation_is_the_grade() {
        let lat = l11();
        let frame = small_frame(&lat);
        let model = model_with_atoms(&frame, &lat);
        for sort in [Sort::Sd, Sort::Pp] {
            let interp = model.extend(&Formula::Bot, sort).unwrap();
            let n = model.side(sort).states().len();
            for beta in lat.values() {
                for z in 0..n {
                    assert_eq!(interp.val.get(graded_index(n, beta, z)), beta);
                }
            }
            assert_eq!(interp.descr, ASet::constant(model.side(sort).states(), lat.top()));
        }
    }

    #[test]
    fn top_refutation_is_the_meet_of_all_grades() {
        let lat = l11();
        let frame = small_frame(&lat);
        let model = model_with_atoms(&frame, &lat);
        let interp = model.extend(&Formula::Top, Sort::Sd).unwrap();
        // the meet runs over every grade, so it collapses to bottom
        assert_eq!(interp.descr, ASet::constant(frame.political().states(), lat.bot()));
    }

    #[test]
    fn atoms_are_closed_into_stable_pairs() {
        let lat = l11();
        let frame = small_frame(&lat);
        let model = model_with_atoms(&frame, &lat);
        for interp in model.sd_atoms().values() {
            assert_eq!(frame.political().intent_of(&interp.val).unwrap(), interp.descr);
            assert_eq!(frame.political().extent_of(&interp.descr).unwrap(), interp.val);
        }
    }

    #[test]
    fn uninterpreted_atom_is_an_error() {
        let lat = l11();
        let frame = small_frame(&lat);
        let model = model_with_atoms(&frame, &lat);
        assert!(matches!(
            model.extend(&Formula::atom("missing"), Sort::Sd),
            Err(Error::UninterpretedAtom(_))
        ));
    }

    #[test]
    fn supports_is_monotone_and_trivial_at_zero() {
        let lat = l11();
        let frame = small_frame(&lat);
        let model = model_with_atoms(&frame, &lat);
        let f = parse("SD: p & dmd q").unwrap();
        for beta in [v(&lat, 0.0), v(&lat, 0.5), v(&lat, 1.0)] {
            assert!(model.supports(beta, "p0", lat.bot(), &f).unwrap());
        }
        // alpha-monotone: shrinking alpha preserves support
        for beta in lat.values() {
            for alpha in lat.values() {
                for alpha2 in lat.values() {
                    if lat.leq(alpha2, alpha) && model.supports(beta, "p1", alpha, &f).unwrap() {
                        assert!(model.supports(beta, "p1", alpha2, &f).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn wrong_side_state_is_rejected() {
        let lat = l11();
        let frame = small_frame(&lat);
        let model = model_with_atoms(&frame, &lat);
        let f = parse("SD: p").unwrap();
        assert!(matches!(
            model.supports(lat.bot(), "s0", lat.bot(), &f),
            Err(Error::SideMismatch(_))
        ));
        assert!(matches!(model.refutes("s0", lat.bot(), &f), Err(Error::SideMismatch(_))));
    }

    #[test]
    fn identity_sequent_is_true() {
        let lat = l11();
        let frame = small_frame(&lat);
        let model = model_with_atoms(&frame, &lat);
        for text in ["SD: p |- p", "PP: p |- p", "SD: p & q |- p", "SD: p |- p | q"] {
            let s = crate::language::parse_sequent(text).unwrap();
            assert!(model.sequent_true(&s).unwrap(), "{text}");
        }
    }

    #[test]
    fn luk_closure_equals_generic_closure() {
        let lat = l11();
        let mut state = 0x0123456789abcdefu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state as usize
        };
        for _ in 0..50 {
            let n = 1 + next() % 4;
            let dom = Domain::new((0..n).map(|i| format!("z{i}"))).unwrap();
            let edges = ARelation::build(&dom, &dom, |i, j| {
                if i == j { lat.top() } else { Value::from_index(next() % lat.len()) }
            });
            let graph = Graph::new(Arc::clone(&lat), edges.clone()).unwrap();
            let descr = ASet::from_values(
                &dom,
                (0..n).map(|_| Value::from_index(next() % lat.len())).collect(),
            )
            .unwrap();
            let fast = luk_closure(&lat, &descr, &edges).unwrap();
            let generic = graph.extent_of(&descr).unwrap();
            assert_eq!(fast.values(), generic.values());
        }
    }

    #[test]
    fn luk_closure_rejects_table_lattices() {
        let lat = TruthLattice::goedel_chain(3).unwrap();
        let dom = Domain::new(["z"]).unwrap();
        let edges = ARelation::constant(&dom, &dom, lat.top());
        let descr = ASet::constant(&dom, lat.bot());
        assert!(matches!(
            luk_closure(&lat, &descr, &edges),
            Err(Error::UnsupportedLattice(_))
        ));
    }

    #[test]
    fn truth_criteria_agree_on_random_sequents() {
        let lat = l11();
        let frame = small_frame(&lat);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let sort = if rng.gen_bool(0.5) { Sort::Sd } else { Sort::Pp };
            let lhs = crate::language::random_formula(&mut rng, sort, &["p", "q"], 3);
            let rhs = crate::language::random_formula(&mut rng, sort, &["p", "q"], 3);
            let s = Sequent::new(sort, lhs, rhs).unwrap();
            let model = model_with_atoms(&frame, &lat);
            // sequent_true asserts internally that both criteria agree
            let _ = model.sequent_true(&s).unwrap();
        }
    }

    #[test]
    fn valuations_are_grade_monotone() {
        let lat = l11();
        let frame = small_frame(&lat);
        let model = model_with_atoms(&frame, &lat);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..40 {
            let sort = if rng.gen_bool(0.5) { Sort::Sd } else { Sort::Pp };
            let f = crate::language::random_formula(&mut rng, sort, &["p", "q"], 3);
            assert!(model.monotone_check(&f, sort).unwrap(), "{f}");
        }
        assert!(model.monotone_check(&Formula::Bot, Sort::Sd).unwrap());
    }

    #[test]
    fn validity_identity_holds_exhaustively_on_a_tiny_frame() {
        let lat = TruthLattice::luk_chain(2).unwrap();
        let dom_s = Domain::new(["s"]).unwrap();
        let dom_p = Domain::new(["p"]).unwrap();
        let social =
            Graph::new(Arc::clone(&lat), ARelation::constant(&dom_s, &dom_s, lat.top())).unwrap();
        let political =
            Graph::new(Arc::clone(&lat), ARelation::constant(&dom_p, &dom_p, lat.top())).unwrap();
        let frame = Arc::new(
            HeteroFrame::new(
                social,
                political,
                ARelation::constant(&dom_p, &dom_s, lat.top()),
                ARelation::constant(&dom_s, &dom_p, lat.top()),
            )
            .unwrap(),
        );
        let s = crate::language::parse_sequent("SD: p |- p").unwrap();
        match sequent_valid(&frame, &s, &ValidityOptions::default()).unwrap() {
            ValidityVerdict::Holds { exhaustive: true, checked } => assert!(checked > 0),
            other => panic!("expected exhaustive hold, got {other:?}"),
        }
        let bad = crate::language::parse_sequent("SD: p |- q").unwrap();
        match sequent_valid(&frame, &bad, &ValidityOptions::default()).unwrap() {
            ValidityVerdict::Falsified { model } => {
                assert!(!model.sequent_true(&bad).unwrap());
            }
            other => panic!("expected falsification, got {other:?}"),
        }

        // forcing the sampled path labels the verdict as non-exhaustive
        let cramped = ValidityOptions { exhaustive_limit: 0.5, samples: 25, seed: 7 };
        match sequent_valid(&frame, &s, &cramped).unwrap() {
            ValidityVerdict::Holds { exhaustive: false, checked } => assert_eq!(checked, 25),
            other => panic!("expected sampled hold, got {other:?}"),
        }
    }
}
