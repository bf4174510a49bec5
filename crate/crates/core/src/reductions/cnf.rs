//! 3-CNF instances, DIMACS input and the exhaustive NAE oracle.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::budget::Budget;
use crate::error::{Error, Result};

/// Largest variable count the `2^n` sweep accepts.
pub const MAX_ORACLE_VARIABLES: usize = 24;

/// A literal over a 0-based variable index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, positive: false }
    }

    pub fn value(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }

    /// DIMACS form: 1-based, negative for negated literals.
    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }
}

pub type Clause = [Literal; 3];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfInstance {
    variable_count: usize,
    clauses: Vec<Clause>,
}

impl CnfInstance {
    /// Rejects clauses whose three literals do not name three distinct
    /// in-range variables.
    pub fn new(variable_count: usize, clauses: Vec<Clause>) -> Result<Self> {
        if variable_count == 0 {
            return Err(Error::InvalidCnf("at least one variable is required".into()));
        }
        for (j, c) in clauses.iter().enumerate() {
            if let Some(l) = c.iter().find(|l| l.var >= variable_count) {
                return Err(Error::InvalidCnf(format!(
                    "clause {} uses variable {} but only {variable_count} exist",
                    j + 1,
                    l.var + 1
                )));
            }
            let vars: BTreeSet<usize> = c.iter().map(|l| l.var).collect();
            if vars.len() != 3 {
                return Err(Error::InvalidCnf(format!("clause {} repeats a variable", j + 1)));
            }
        }
        Ok(CnfInstance { variable_count, clauses })
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn is_nae_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.variable_count
            && self.clauses.iter().all(|c| {
                let trues = c.iter().filter(|l| l.value(assignment)).count();
                trues == 1 || trues == 2
            })
    }

    /// Parses `p cnf V C` followed by clauses terminated by `0`. Clauses may
    /// span lines; `c` lines are comments.
    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current: Vec<i64> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let err = |message: String| Error::Parse { line: line_no, message };
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            if line.starts_with('p') {
                if header.is_some() {
                    return Err(err("repeated problem line".into()));
                }
                let f: Vec<&str> = line.split_whitespace().collect();
                if f.len() != 4 || f[1] != "cnf" {
                    return Err(err("expected `p cnf <vars> <clauses>`".into()));
                }
                let vars = f[2].parse().map_err(|_| err(format!("bad variable count `{}`", f[2])))?;
                let count = f[3].parse().map_err(|_| err(format!("bad clause count `{}`", f[3])))?;
                header = Some((vars, count));
                continue;
            }
            let Some((vars, _)) = header else {
                return Err(err("clause before the problem line".into()));
            };
            for tok in line.split_whitespace() {
                let x: i64 = tok.parse().map_err(|_| err(format!("bad literal `{tok}`")))?;
                if x == 0 {
                    clauses.push(to_clause(&current, vars).map_err(&err)?);
                    current.clear();
                } else {
                    current.push(x);
                }
            }
        }
        let Some((vars, count)) = header else {
            return Err(Error::Parse { line: text.lines().count().max(1), message: "missing problem line".into() });
        };
        if !current.is_empty() {
            return Err(Error::Parse {
                line: text.lines().count().max(1),
                message: "last clause is not terminated by 0".into(),
            });
        }
        if clauses.len() != count {
            return Err(Error::InvalidCnf(format!("header announces {count} clauses, found {}", clauses.len())));
        }
        CnfInstance::new(vars, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.variable_count, self.clauses.len());
        for c in &self.clauses {
            let _ = writeln!(s, "{} {} {} 0", c[0].to_dimacs(), c[1].to_dimacs(), c[2].to_dimacs());
        }
        s
    }
}

fn to_clause(lits: &[i64], vars: usize) -> std::result::Result<Clause, String> {
    if lits.len() != 3 {
        return Err(format!("clause has {} literals, expected 3", lits.len()));
    }
    let mut out = [Literal::pos(0); 3];
    for (slot, &x) in out.iter_mut().zip(lits) {
        let v = x.unsigned_abs() as usize;
        if v > vars {
            return Err(format!("literal {x} exceeds the {vars} declared variables"));
        }
        *slot = Literal { var: v - 1, positive: x > 0 };
    }
    Ok(out)
}

/// First NAE-satisfying assignment in binary counting order (variable 0
/// is the most significant bit), or `None`.
pub fn oracle_nae3sat(instance: &CnfInstance, budget: Budget) -> Result<Option<Vec<bool>>> {
    let n = instance.variable_count();
    if n > MAX_ORACLE_VARIABLES {
        return Err(Error::TooLarge(format!("{n} variables (limit {MAX_ORACLE_VARIABLES})")));
    }
    let mut meter = budget.meter();
    let mut assignment = vec![false; n];
    for mask in 0u64..(1u64 << n) {
        meter.tick()?;
        for (i, a) in assignment.iter_mut().enumerate() {
            *a = mask >> (n - 1 - i) & 1 == 1;
        }
        if instance.is_nae_satisfied_by(&assignment) {
            // Re-check clause by clause before handing it out.
            let ok = instance
                .clauses()
                .iter()
                .all(|c| c.iter().any(|l| l.value(&assignment)) && c.iter().any(|l| !l.value(&assignment)));
            if !ok {
                return Err(Error::Invariant("oracle produced a non-NAE assignment".into()));
            }
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}
