//! CNF formulas: DIMACS parsing, normalization and a truth-table solver.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CnfError {
    #[error("literal {lit} refers to a variable outside 1..={vars}")]
    LiteralOutOfRange { lit: i32, vars: usize },
    #[error("clause {0} is empty")]
    EmptyClause(usize),
    #[error("clause {clause} has {len} distinct literals, at most 3 are allowed")]
    ClauseTooLong { clause: usize, len: usize },
    #[error("variable {0} does not occur both positive and negated")]
    NotNormalized(usize),
    #[error("{0} variables is too many for exhaustive search (limit {MAX_BRUTE_VARS})")]
    TooManyVariables(usize),
    #[error("DIMACS line {line}: {msg}")]
    Dimacs { line: usize, msg: String },
}

/// Largest variable count accepted by [`sat_bruteforce`].
pub const MAX_BRUTE_VARS: usize = 20;

/// A literal: `v` for variable `v` (1-based), `-v` for its negation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Literal(pub i32);

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal(var as i32)
    }

    pub fn neg(var: usize) -> Self {
        Literal(-(var as i32))
    }

    /// 1-based variable index.
    pub fn var(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn negated(self) -> Self {
        Literal(-self.0)
    }

    /// Value of the literal under `assignment` (indexed by `var - 1`).
    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var() - 1] == self.is_positive()
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_positive() {
            write!(f, "x{}", self.var())
        } else {
            write!(f, "¬x{}", self.var())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<Literal>>,
}

impl CnfFormula {
    /// Checks that every literal names a variable in `1..=num_vars`.
    pub fn new(num_vars: usize, clauses: Vec<Vec<Literal>>) -> Result<Self, CnfError> {
        for lit in clauses.iter().flatten() {
            if lit.0 == 0 || lit.var() > num_vars {
                return Err(CnfError::LiteralOutOfRange {
                    lit: lit.0,
                    vars: num_vars,
                });
            }
        }
        Ok(Self { num_vars, clauses })
    }

    /// Builds a formula from signed integers, DIMACS style.
    pub fn from_ints(num_vars: usize, clauses: &[&[i32]]) -> Result<Self, CnfError> {
        Self::new(
            num_vars,
            clauses
                .iter()
                .map(|c| c.iter().map(|&l| Literal(l)).collect())
                .collect(),
        )
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    pub fn eval(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| l.eval(assignment)))
    }

    /// Whether `var` occurs positive and negated somewhere.
    fn has_both_polarities(&self, var: usize) -> bool {
        let lits = || self.clauses.iter().flatten();
        lits().any(|&l| l == Literal::pos(var)) && lits().any(|&l| l == Literal::neg(var))
    }

    pub fn is_normalized(&self) -> bool {
        self.clauses.iter().all(|c| {
            let mut sorted = c.clone();
            sorted.sort();
            sorted.dedup();
            !c.is_empty() && c.len() <= 3 && sorted.len() == c.len()
        }) && (1..=self.num_vars).all(|v| self.has_both_polarities(v))
    }

    /// Writes the formula in DIMACS CNF format.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                out.push_str(&l.0.to_string());
                out.push(' ');
            }
            out.push_str("0\n");
        }
        out
    }
}

/// Removes repeated literals inside each clause, then appends `(¬v ∨ v)` for
/// every variable that does not occur in both polarities.
///
/// Both steps keep the set of satisfying assignments unchanged.
pub fn normalize_formula(f: &CnfFormula) -> Result<CnfFormula, CnfError> {
    let mut clauses = Vec::with_capacity(f.clauses.len() + f.num_vars);
    for (idx, clause) in f.clauses.iter().enumerate() {
        let mut deduped: Vec<Literal> = Vec::with_capacity(clause.len());
        for &lit in clause {
            if !deduped.contains(&lit) {
                deduped.push(lit);
            }
        }
        match deduped.len() {
            0 => return Err(CnfError::EmptyClause(idx)),
            len if len > 3 => return Err(CnfError::ClauseTooLong { clause: idx, len }),
            _ => clauses.push(deduped),
        }
    }
    let mut out = CnfFormula {
        num_vars: f.num_vars,
        clauses,
    };
    for var in 1..=f.num_vars {
        if !out.has_both_polarities(var) {
            out.clauses.push(vec![Literal::neg(var), Literal::pos(var)]);
        }
    }
    Ok(out)
}

/// A satisfying assignment (indexed by `var - 1`), found by enumerating all
/// `2^n` assignments in binary counting order, or `None`.
pub fn sat_bruteforce(f: &CnfFormula) -> Result<Option<Vec<bool>>, CnfError> {
    let n = f.num_vars;
    if n > MAX_BRUTE_VARS {
        return Err(CnfError::TooManyVariables(n));
    }
    let mut assignment = vec![false; n];
    for mask in 0u32..(1u32 << n) {
        for (v, slot) in assignment.iter_mut().enumerate() {
            *slot = mask & (1 << v) != 0;
        }
        if f.eval(&assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}

/// Parses DIMACS CNF: `c` comment lines, a `p cnf <vars> <clauses>` header,
/// then clauses as whitespace-separated literals each terminated by `0`.
/// Clauses may span lines.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, CnfError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let err = |msg: String| CnfError::Dimacs { line: idx + 1, msg };
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(err("duplicate problem line".into()));
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 4 || fields[1] != "cnf" {
                return Err(err(format!("expected `p cnf <vars> <clauses>`, got {line:?}")));
            }
            let num = |s: &str| s.parse::<usize>().map_err(|e| err(format!("{s:?}: {e}")));
            header = Some((num(fields[2])?, num(fields[3])?));
            continue;
        }
        let Some((vars, _)) = header else {
            return Err(err("clause before the `p cnf` line".into()));
        };
        for tok in line.split_whitespace() {
            let lit: i32 = tok.parse().map_err(|e| err(format!("{tok:?}: {e}")))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else if lit.unsigned_abs() as usize > vars {
                return Err(err(format!("literal {lit} exceeds {vars} variables")));
            } else {
                current.push(Literal(lit));
            }
        }
    }
    let Some((vars, count)) = header else {
        return Err(CnfError::Dimacs {
            line: 0,
            msg: "missing `p cnf` line".into(),
        });
    };
    if !current.is_empty() {
        clauses.push(current);
    }
    if clauses.len() != count {
        return Err(CnfError::Dimacs {
            line: 0,
            msg: format!("header announces {count} clauses, found {}", clauses.len()),
        });
    }
    CnfFormula::new(vars, clauses)
}
