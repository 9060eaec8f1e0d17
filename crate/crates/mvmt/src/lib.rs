//! Many-valued multi-type modal logic over graph-based frames.
//!
//! The crate provides, bottom up:
//!
//! * [`lattice`] — finite residuated lattices of truth values with exact
//!   integer-grid arithmetic (Łukasiewicz chains and table-defined lattices);
//! * [`fuzzy`] — lattice-valued sets and relations over finite domains,
//!   subsethood, singleton decomposition and the relation liftings;
//! * [`polarity`] — many-valued formal contexts, the induced Galois
//!   connection, concept enumeration and enriched contexts with modal
//!   operators on the concept lattice;
//! * [`graph`] — reflexive similarity graphs, the polarity a graph induces,
//!   and two-sided frames linking a social and a political graph through
//!   affinity relations, with the compatibility checker;
//! * [`language`] — the two-sorted formula language (social demands and
//!   political promises), its parser, and the basic axiom schemas;
//! * [`semantics`] — models over two-sided frames, compositional valuation,
//!   support/refutation queries, sequent truth and bounded validity;
//! * [`case_study`] — a fixed socio-political scenario with a recomputation
//!   report comparing the derived tables against their published values;
//! * [`algebra`] — finite heterogeneous algebras, graded filters and ideal
//!   complements, brute-force lemma verification, soundness sampling and
//!   semantic countermodel search;
//! * [`formats`] — JSON file formats for lattices, contexts, frames and
//!   models.

pub mod algebra;
pub mod case_study;
pub mod formats;
pub mod fuzzy;
pub mod graph;
pub mod language;
pub mod lattice;
pub mod polarity;
pub mod semantics;

mod error;

pub use error::{Error, Result};
