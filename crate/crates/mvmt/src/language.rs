//! The two-sorted formula language, its concrete syntax and the basic
//! axiom schemas.
//!
//! Formulas come in two sorts: social demands (`SD`) and political promises
//! (`PP`). The modal operator `dmd` turns a promise into a demand and `loz`
//! turns a demand into a promise, so the sort of every subformula is fixed
//! by the sort at the root. Atoms are sort-polymorphic: the same name can be
//! interpreted on both sides, which is why concrete syntax carries an
//! explicit `SD:`/`PP:` annotation.
//!
//! Concrete syntax:
//!
//! ```text
//! formula  :=  ("SD:" | "PP:") expr
//! expr     :=  or
//! or       :=  and ("|" and)*
//! and      :=  unary ("&" unary)*
//! unary    :=  "dmd" unary | "loz" unary | "T" | "F" | ident | "(" expr ")"
//! sequent  :=  ("SD:" | "PP:")? expr "|-" expr
//! ```
//!
//! `dmd` and `loz` are easy to confuse: `dmd` applies to a promise and
//! produces a demand, `loz` applies to a demand and produces a promise.

use crate::{Error, Result};
use rand::Rng;
use std::collections::BTreeMap;
use std::fmt;

/// Formula sort: social demand or political promise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sort {
    Sd,
    Pp,
}

impl Sort {
    pub fn flip(self) -> Sort {
        match self {
            Sort::Sd => Sort::Pp,
            Sort::Pp => Sort::Sd,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sort::Sd => "SD",
            Sort::Pp => "PP",
        }
    }
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Untyped formula tree. The sort of every node is determined by the sort
/// assigned at the root, so the tree itself carries none.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Top,
    Bot,
    Atom(String),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    /// Demand-side diamond: the child is a promise.
    Dmd(Box<Formula>),
    /// Promise-side lozenge: the child is a demand.
    Loz(Box<Formula>),
}

impl Formula {
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(name.to_string())
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn dmd(inner: Formula) -> Formula {
        Formula::Dmd(Box::new(inner))
    }

    pub fn loz(inner: Formula) -> Formula {
        Formula::Loz(Box::new(inner))
    }

    /// Checks that the tree is well-sorted when read at `sort`.
    pub fn validate(&self, sort: Sort) -> Result<()> {
        match self {
            Formula::Top | Formula::Bot | Formula::Atom(_) => Ok(()),
            Formula::And(l, r) | Formula::Or(l, r) => {
                l.validate(sort)?;
                r.validate(sort)
            }
            Formula::Dmd(inner) => {
                if sort != Sort::Sd {
                    return Err(Error::Sort {
                        pos: None,
                        msg: "dmd yields an SD formula but a PP formula is required".into(),
                    });
                }
                inner.validate(Sort::Pp)
            }
            Formula::Loz(inner) => {
                if sort != Sort::Pp {
                    return Err(Error::Sort {
                        pos: None,
                        msg: "loz yields a PP formula but an SD formula is required".into(),
                    });
                }
                inner.validate(Sort::Sd)
            }
        }
    }

    /// The sort the structure forces, if any. Atoms and lattice connectives
    /// are sort-polymorphic; conflicting children are an error.
    pub fn forced_sort(&self) -> Result<Option<Sort>> {
        match self {
            Formula::Top | Formula::Bot | Formula::Atom(_) => Ok(None),
            Formula::And(l, r) | Formula::Or(l, r) => match (l.forced_sort()?, r.forced_sort()?) {
                (Some(a), Some(b)) if a != b => Err(Error::Sort {
                    pos: None,
                    msg: "children of a lattice connective force different sorts".into(),
                }),
                (Some(a), _) | (_, Some(a)) => Ok(Some(a)),
                (None, None) => Ok(None),
            },
            Formula::Dmd(inner) => {
                if inner.forced_sort()? == Some(Sort::Sd) {
                    return Err(Error::Sort {
                        pos: None,
                        msg: "dmd needs a PP subformula but its child forces SD".into(),
                    });
                }
                Ok(Some(Sort::Sd))
            }
            Formula::Loz(inner) => {
                if inner.forced_sort()? == Some(Sort::Pp) {
                    return Err(Error::Sort {
                        pos: None,
                        msg: "loz needs an SD subformula but its child forces PP".into(),
                    });
                }
                Ok(Some(Sort::Pp))
            }
        }
    }

    /// Atom names with the sort at which each occurrence appears, given the
    /// root sort. The same name may appear at both sorts.
    pub fn atom_occurrences(&self, sort: Sort, out: &mut Vec<(String, Sort)>) {
        match self {
            Formula::Top | Formula::Bot => {}
            Formula::Atom(name) => {
                let entry = (name.clone(), sort);
                if !out.contains(&entry) {
                    out.push(entry);
                }
            }
            Formula::And(l, r) | Formula::Or(l, r) => {
                l.atom_occurrences(sort, out);
                r.atom_occurrences(sort, out);
            }
            Formula::Dmd(inner) => inner.atom_occurrences(Sort::Pp, out),
            Formula::Loz(inner) => inner.atom_occurrences(Sort::Sd, out),
        }
    }

    /// Replaces every atom using `subst`, checking that each replacement is
    /// well-sorted at the occurrence's sort. Atoms missing from `subst` stay.
    pub fn substitute(&self, sort: Sort, subst: &BTreeMap<String, Formula>) -> Result<Formula> {
        Ok(match self {
            Formula::Top => Formula::Top,
            Formula::Bot => Formula::Bot,
            Formula::Atom(name) => match subst.get(name) {
                Some(replacement) => {
                    replacement.validate(sort).map_err(|_| Error::Sort {
                        pos: None,
                        msg: format!(
                            "substitution for `{name}` is not a well-sorted {sort} formula"
                        ),
                    })?;
                    replacement.clone()
                }
                None => Formula::Atom(name.clone()),
            },
            Formula::And(l, r) => {
                Formula::and(l.substitute(sort, subst)?, r.substitute(sort, subst)?)
            }
            Formula::Or(l, r) => {
                Formula::or(l.substitute(sort, subst)?, r.substitute(sort, subst)?)
            }
            Formula::Dmd(inner) => Formula::dmd(inner.substitute(Sort::Pp, subst)?),
            Formula::Loz(inner) => Formula::loz(inner.substitute(Sort::Sd, subst)?),
        })
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Or(_, _) => 0,
            Formula::And(_, _) => 1,
            _ => 2,
        }
    }

    fn render(&self, out: &mut String, parent_prec: u8) {
        let prec = self.precedence();
        let parens = prec < parent_prec;
        if parens {
            out.push('(');
        }
        match self {
            Formula::Top => out.push('T'),
            Formula::Bot => out.push('F'),
            Formula::Atom(name) => out.push_str(name),
            Formula::And(l, r) => {
                l.render(out, 1);
                out.push_str(" & ");
                // right child gets a higher floor so rendering re-parses
                // left-associatively
                r.render(out, 2);
            }
            Formula::Or(l, r) => {
                l.render(out, 0);
                out.push_str(" | ");
                r.render(out, 1);
            }
            Formula::Dmd(inner) => {
                out.push_str("dmd ");
                inner.render(out, 2);
            }
            Formula::Loz(inner) => {
                out.push_str("loz ");
                inner.render(out, 2);
            }
        }
        if parens {
            out.push(')');
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        self.render(&mut out, 0);
        f.write_str(&out)
    }
}

/// A formula together with its root sort.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypedFormula {
    pub sort: Sort,
    pub formula: Formula,
}

impl TypedFormula {
    pub fn new(sort: Sort, formula: Formula) -> Result<TypedFormula> {
        formula.validate(sort)?;
        Ok(TypedFormula { sort, formula })
    }
}

impl fmt::Display for TypedFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.sort, self.formula)
    }
}

/// A type-uniform sequent: both sides share one sort.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequent {
    pub sort: Sort,
    pub lhs: Formula,
    pub rhs: Formula,
}

impl Sequent {
    pub fn new(sort: Sort, lhs: Formula, rhs: Formula) -> Result<Sequent> {
        lhs.validate(sort)?;
        rhs.validate(sort)?;
        Ok(Sequent { sort, lhs, rhs })
    }

    pub fn atom_occurrences(&self) -> Vec<(String, Sort)> {
        let mut out = Vec::new();
        self.lhs.atom_occurrences(self.sort, &mut out);
        self.rhs.atom_occurrences(self.sort, &mut out);
        out
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} |- {}", self.sort, self.lhs, self.rhs)
    }
}

// ---------------------------------------------------------------------------
// Lexer and parser
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Top,
    Bot,
    Dmd,
    Loz,
    And,
    Or,
    LParen,
    RParen,
    Turnstile,
    Colon,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '(' => {
                tokens.push(Token { tok: Tok::LParen, pos: i });
                i += 1;
            }
            ')' => {
                tokens.push(Token { tok: Tok::RParen, pos: i });
                i += 1;
            }
            '&' => {
                tokens.push(Token { tok: Tok::And, pos: i });
                i += 1;
            }
            ':' => {
                tokens.push(Token { tok: Tok::Colon, pos: i });
                i += 1;
            }
            '|' => {
                if bytes.get(i + 1) == Some(&b'-') {
                    tokens.push(Token { tok: Tok::Turnstile, pos: i });
                    i += 2;
                } else {
                    tokens.push(Token { tok: Tok::Or, pos: i });
                    i += 1;
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let word = &text[start..i];
                let tok = match word {
                    "T" => Tok::Top,
                    "F" => Tok::Bot,
                    "dmd" => Tok::Dmd,
                    "loz" => Tok::Loz,
                    _ => Tok::Ident(word.to_string()),
                };
                tokens.push(Token { tok, pos: start });
            }
            other => {
                return Err(Error::Parse { pos: i, msg: format!("unexpected character `{other}`") })
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    cursor: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Parser> {
        Ok(Parser { tokens: lex(text)?, cursor: 0, end: text.len() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.cursor).map(|t| &t.tok)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.cursor).map(|t| t.pos).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.cursor).cloned();
        if t.is_some() {
            self.cursor += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        match self.peek() {
            Some(t) if *t == tok => {
                self.cursor += 1;
                Ok(())
            }
            _ => Err(Error::Parse { pos: self.pos(), msg: format!("expected {what}") }),
        }
    }

    /// `SD:` or `PP:` prefix, when present.
    fn annotation(&mut self) -> Result<Option<Sort>> {
        let sort = match self.peek() {
            Some(Tok::Ident(name)) if name == "SD" => Sort::Sd,
            Some(Tok::Ident(name)) if name == "PP" => Sort::Pp,
            _ => return Ok(None),
        };
        if self.tokens.get(self.cursor + 1).map(|t| &t.tok) == Some(&Tok::Colon) {
            self.cursor += 2;
            Ok(Some(sort))
        } else {
            Ok(None)
        }
    }

    fn formula(&mut self, sort: Sort) -> Result<Formula> {
        self.or_expr(sort)
    }

    fn or_expr(&mut self, sort: Sort) -> Result<Formula> {
        let mut acc = self.and_expr(sort)?;
        while self.peek() == Some(&Tok::Or) {
            self.cursor += 1;
            acc = Formula::or(acc, self.and_expr(sort)?);
        }
        Ok(acc)
    }

    fn and_expr(&mut self, sort: Sort) -> Result<Formula> {
        let mut acc = self.unary(sort)?;
        while self.peek() == Some(&Tok::And) {
            self.cursor += 1;
            acc = Formula::and(acc, self.unary(sort)?);
        }
        Ok(acc)
    }

    fn unary(&mut self, sort: Sort) -> Result<Formula> {
        let pos = self.pos();
        match self.bump().map(|t| t.tok) {
            Some(Tok::Dmd) => {
                if sort != Sort::Sd {
                    return Err(Error::Sort {
                        pos: Some(pos),
                        msg: "dmd yields an SD formula but a PP formula is required here".into(),
                    });
                }
                Ok(Formula::dmd(self.unary(Sort::Pp)?))
            }
            Some(Tok::Loz) => {
                if sort != Sort::Pp {
                    return Err(Error::Sort {
                        pos: Some(pos),
                        msg: "loz yields a PP formula but an SD formula is required here".into(),
                    });
                }
                Ok(Formula::loz(self.unary(Sort::Sd)?))
            }
            Some(Tok::Top) => Ok(Formula::Top),
            Some(Tok::Bot) => Ok(Formula::Bot),
            Some(Tok::Ident(name)) => Ok(Formula::Atom(name)),
            Some(Tok::LParen) => {
                let inner = self.or_expr(sort)?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(Error::Parse { pos, msg: "expected a formula".into() }),
        }
    }

    /// Raw parse that defers sort checking, used when a sequent carries no
    /// annotation and the sorts must be inferred afterwards.
    fn raw(&mut self) -> Result<Formula> {
        self.raw_or()
    }

    fn raw_or(&mut self) -> Result<Formula> {
        let mut acc = self.raw_and()?;
        while self.peek() == Some(&Tok::Or) {
            self.cursor += 1;
            acc = Formula::or(acc, self.raw_and()?);
        }
        Ok(acc)
    }

    fn raw_and(&mut self) -> Result<Formula> {
        let mut acc = self.raw_unary()?;
        while self.peek() == Some(&Tok::And) {
            self.cursor += 1;
            acc = Formula::and(acc, self.raw_unary()?);
        }
        Ok(acc)
    }

    fn raw_unary(&mut self) -> Result<Formula> {
        let pos = self.pos();
        match self.bump().map(|t| t.tok) {
            Some(Tok::Dmd) => Ok(Formula::dmd(self.raw_unary()?)),
            Some(Tok::Loz) => Ok(Formula::loz(self.raw_unary()?)),
            Some(Tok::Top) => Ok(Formula::Top),
            Some(Tok::Bot) => Ok(Formula::Bot),
            Some(Tok::Ident(name)) => Ok(Formula::Atom(name)),
            Some(Tok::LParen) => {
                let inner = self.raw_or()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(Error::Parse { pos, msg: "expected a formula".into() }),
        }
    }

    fn finish(&self) -> Result<()> {
        if self.cursor == self.tokens.len() {
            Ok(())
        } else {
            Err(Error::Parse { pos: self.pos(), msg: "trailing input".into() })
        }
    }
}

/// Parses an annotated formula, e.g. `SD: dmd (p | q)`.
pub fn parse(text: &str) -> Result<TypedFormula> {
    let mut p = Parser::new(text)?;
    let sort = p.annotation()?.ok_or_else(|| Error::Parse {
        pos: 0,
        msg: "formula must start with `SD:` or `PP:`".into(),
    })?;
    let formula = p.formula(sort)?;
    p.finish()?;
    Ok(TypedFormula { sort, formula })
}

/// Parses a sequent, e.g. `SD: p & q |- p`. The annotation fixes the sort of
/// both sides; without it the sort is inferred, and every atom of an
/// unannotated sequent must then occur at one sort only.
pub fn parse_sequent(text: &str) -> Result<Sequent> {
    let mut p = Parser::new(text)?;
    match p.annotation()? {
        Some(sort) => {
            let lhs = p.formula(sort)?;
            p.expect(Tok::Turnstile, "`|-`")?;
            let rhs = p.formula(sort)?;
            p.finish()?;
            Ok(Sequent { sort, lhs, rhs })
        }
        None => {
            let lhs = p.raw()?;
            p.expect(Tok::Turnstile, "`|-`")?;
            let rhs = p.raw()?;
            p.finish()?;
            infer_sequent(lhs, rhs)
        }
    }
}

fn infer_sequent(lhs: Formula, rhs: Formula) -> Result<Sequent> {
    let sort = match (lhs.forced_sort()?, rhs.forced_sort()?) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::Sort {
                pos: None,
                msg: format!("sequent mixes sorts: left side is {a}, right side is {b}"),
            })
        }
        (Some(a), _) | (_, Some(a)) => a,
        (None, None) => {
            return Err(Error::Sort {
                pos: None,
                msg: "cannot infer the sequent sort; add an `SD:` or `PP:` annotation".into(),
            })
        }
    };
    let sequent = Sequent::new(sort, lhs, rhs)?;
    // without an annotation there is nothing to disambiguate polymorphic
    // atoms, so a name may appear at one sort only
    let occurrences = sequent.atom_occurrences();
    for (name, s) in &occurrences {
        if occurrences.iter().any(|(n, s2)| n == name && s2 != s) {
            return Err(Error::Sort {
                pos: None,
                msg: format!(
                    "atom `{name}` occurs at both sorts; add an `SD:` or `PP:` annotation"
                ),
            });
        }
    }
    Ok(sequent)
}

// ---------------------------------------------------------------------------
// Axiom schemas and rules
// ---------------------------------------------------------------------------

/// Sorts a schema can be instantiated at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchemaSort {
    /// Lattice axioms hold at either sort.
    Any,
    Fixed(Sort),
}

/// A sequent schema whose atoms are metavariables.
#[derive(Debug, Clone)]
pub struct AxiomSchema {
    pub name: &'static str,
    pub sort: SchemaSort,
    pub lhs: Formula,
    pub rhs: Formula,
}

impl AxiomSchema {
    /// Metavariable names together with the sort each occupies when the
    /// schema is read at `sort`.
    pub fn metavariables(&self, sort: Sort) -> Result<Vec<(String, Sort)>> {
        Ok(self.to_sequent(sort)?.atom_occurrences())
    }

    fn to_sequent(&self, sort: Sort) -> Result<Sequent> {
        match self.sort {
            SchemaSort::Any => Sequent::new(sort, self.lhs.clone(), self.rhs.clone()),
            SchemaSort::Fixed(fixed) if fixed == sort => {
                Sequent::new(sort, self.lhs.clone(), self.rhs.clone())
            }
            SchemaSort::Fixed(fixed) => Err(Error::Sort {
                pos: None,
                msg: format!("schema `{}` is fixed at sort {fixed}", self.name),
            }),
        }
    }

    /// Instantiates the schema at `sort`, replacing each metavariable by the
    /// given formula. Replacements are checked at the sort of the occurrence.
    pub fn instantiate(&self, sort: Sort, subst: &BTreeMap<String, Formula>) -> Result<Sequent> {
        let schema = self.to_sequent(sort)?;
        let lhs = schema.lhs.substitute(sort, subst)?;
        let rhs = schema.rhs.substitute(sort, subst)?;
        Sequent::new(sort, lhs, rhs)
    }

    /// The sorts this schema can be read at.
    pub fn admissible_sorts(&self) -> Vec<Sort> {
        match self.sort {
            SchemaSort::Any => vec![Sort::Sd, Sort::Pp],
            SchemaSort::Fixed(s) => vec![s],
        }
    }
}

/// A monotonicity rule: one premise schema, one conclusion schema.
#[derive(Debug, Clone)]
pub struct RuleSchema {
    pub name: &'static str,
    pub premise: AxiomSchema,
    pub conclusion: AxiomSchema,
}

/// The axiom schemas of the basic logic: identity, the bounds, the four
/// lattice axioms, and normality plus distribution for both modalities.
pub fn axiom_schemas() -> Vec<AxiomSchema> {
    use Formula as F;
    let p = || F::atom("p");
    let q = || F::atom("q");
    vec![
        AxiomSchema { name: "identity", sort: SchemaSort::Any, lhs: p(), rhs: p() },
        AxiomSchema { name: "bot-least", sort: SchemaSort::Any, lhs: F::Bot, rhs: p() },
        AxiomSchema { name: "top-greatest", sort: SchemaSort::Any, lhs: p(), rhs: F::Top },
        AxiomSchema {
            name: "or-intro-left",
            sort: SchemaSort::Any,
            lhs: p(),
            rhs: F::or(p(), q()),
        },
        AxiomSchema {
            name: "or-intro-right",
            sort: SchemaSort::Any,
            lhs: q(),
            rhs: F::or(p(), q()),
        },
        AxiomSchema {
            name: "and-elim-left",
            sort: SchemaSort::Any,
            lhs: F::and(p(), q()),
            rhs: p(),
        },
        AxiomSchema {
            name: "and-elim-right",
            sort: SchemaSort::Any,
            lhs: F::and(p(), q()),
            rhs: q(),
        },
        AxiomSchema {
            name: "dmd-normal",
            sort: SchemaSort::Fixed(Sort::Sd),
            lhs: F::dmd(F::Bot),
            rhs: F::Bot,
        },
        AxiomSchema {
            name: "dmd-or",
            sort: SchemaSort::Fixed(Sort::Sd),
            lhs: F::dmd(F::or(p(), q())),
            rhs: F::or(F::dmd(p()), F::dmd(q())),
        },
        AxiomSchema {
            name: "loz-normal",
            sort: SchemaSort::Fixed(Sort::Pp),
            lhs: F::loz(F::Bot),
            rhs: F::Bot,
        },
        AxiomSchema {
            name: "loz-or",
            sort: SchemaSort::Fixed(Sort::Pp),
            lhs: F::loz(F::or(p(), q())),
            rhs: F::or(F::loz(p()), F::loz(q())),
        },
    ]
}

/// The two monotonicity rule shapes.
pub fn monotonicity_rules() -> Vec<RuleSchema> {
    use Formula as F;
    let p = || F::atom("p");
    let q = || F::atom("q");
    vec![
        RuleSchema {
            name: "dmd-mono",
            premise: AxiomSchema {
                name: "dmd-mono-premise",
                sort: SchemaSort::Fixed(Sort::Pp),
                lhs: p(),
                rhs: q(),
            },
            conclusion: AxiomSchema {
                name: "dmd-mono-conclusion",
                sort: SchemaSort::Fixed(Sort::Sd),
                lhs: F::dmd(p()),
                rhs: F::dmd(q()),
            },
        },
        RuleSchema {
            name: "loz-mono",
            premise: AxiomSchema {
                name: "loz-mono-premise",
                sort: SchemaSort::Fixed(Sort::Sd),
                lhs: p(),
                rhs: q(),
            },
            conclusion: AxiomSchema {
                name: "loz-mono-conclusion",
                sort: SchemaSort::Fixed(Sort::Pp),
                lhs: F::loz(p()),
                rhs: F::loz(q()),
            },
        },
    ]
}

/// A random well-sorted formula over the given atoms, for sampling.
pub fn random_formula(rng: &mut impl Rng, sort: Sort, atoms: &[&str], depth: usize) -> Formula {
    if depth == 0 {
        return match rng.gen_range(0..atoms.len() + 2) {
            0 => Formula::Top,
            1 => Formula::Bot,
            k => Formula::atom(atoms[k - 2]),
        };
    }
    match rng.gen_range(0..8) {
        0 => Formula::Top,
        1 => Formula::Bot,
        2 | 3 => Formula::atom(atoms[rng.gen_range(0..atoms.len())]),
        4 => Formula::and(
            random_formula(rng, sort, atoms, depth - 1),
            random_formula(rng, sort, atoms, depth - 1),
        ),
        5 => Formula::or(
            random_formula(rng, sort, atoms, depth - 1),
            random_formula(rng, sort, atoms, depth - 1),
        ),
        _ => match sort {
            Sort::Sd => Formula::dmd(random_formula(rng, Sort::Pp, atoms, depth - 1)),
            Sort::Pp => Formula::loz(random_formula(rng, Sort::Sd, atoms, depth - 1)),
        },
    }
}
