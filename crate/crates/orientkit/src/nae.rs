//! Monotone not-all-equal 3-SAT instances.
//!
//! File format (`.nae`):
//! ```text
//! c comment
//! p mnae <numVars> <numClauses>
//! 1 2 3 0
//! ```
//! Variables are 1-based in files and 0-based in memory.

use std::fmt::Write as _;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaeInstance {
    num_vars: usize,
    clauses: Vec<[usize; 3]>,
}

/// One value per variable, `true` = true.
pub type TruthAssignment = Vec<bool>;

pub const BRUTE_FORCE_MAX_VARS: usize = 24;

impl NaeInstance {
    /// Builds an instance from 0-based clauses, checking each has three
    /// distinct in-range variables.
    pub fn new(num_vars: usize, clauses: Vec<[usize; 3]>) -> Result<Self> {
        for (i, c) in clauses.iter().enumerate() {
            if c.iter().any(|&x| x >= num_vars) {
                return Err(Error::parse(0, format!("clause {} names a variable beyond {num_vars}", i + 1)));
            }
            if c[0] == c[1] || c[0] == c[2] || c[1] == c[2] {
                return Err(Error::parse(0, format!("clause {} repeats a variable", i + 1)));
            }
        }
        Ok(NaeInstance { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[usize; 3]] {
        &self.clauses
    }

    /// Number of clauses containing each variable.
    pub fn occurrences(&self) -> Vec<usize> {
        let mut mu = vec![0; self.num_vars];
        for c in &self.clauses {
            for &x in c {
                mu[x] += 1;
            }
        }
        mu
    }

    /// Every clause has a true and a false variable.
    pub fn is_feasible(&self, f: &[bool]) -> bool {
        f.len() == self.num_vars
            && self.clauses.iter().all(|c| {
                let trues = c.iter().filter(|&&x| f[x]).count();
                trues == 1 || trues == 2
            })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("p mnae {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            let _ = writeln!(out, "{} {} {} 0", c[0] + 1, c[1] + 1, c[2] + 1);
        }
        out
    }
}

pub fn parse_mnae(text: &str) -> Result<NaeInstance> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.first() {
            None => continue,
            Some(&"c") => continue,
            Some(&"p") => {
                if header.is_some() {
                    return Err(Error::parse(lineno, "second header line"));
                }
                let ["p", "mnae", nv, nc] = toks.as_slice() else {
                    return Err(Error::parse(lineno, "expected `p mnae <numVars> <numClauses>`"));
                };
                let nv = nv.parse().map_err(|_| Error::parse(lineno, "bad variable count"))?;
                let nc = nc.parse().map_err(|_| Error::parse(lineno, "bad clause count"))?;
                header = Some((nv, nc));
            }
            Some(_) => {
                let Some((nv, _)) = header else {
                    return Err(Error::parse(lineno, "clause before header"));
                };
                let mut lits = Vec::new();
                for tok in &toks {
                    let lit: i64 = tok.parse().map_err(|_| Error::parse(lineno, format!("bad literal `{tok}`")))?;
                    lits.push(lit);
                }
                if lits.last() != Some(&0) {
                    return Err(Error::parse(lineno, "clause not terminated by 0"));
                }
                lits.pop();
                if lits.contains(&0) {
                    return Err(Error::parse(lineno, "0 inside clause"));
                }
                if let Some(neg) = lits.iter().find(|&&l| l < 0) {
                    return Err(Error::parse(lineno, format!("negated literal {neg} in a monotone instance")));
                }
                if lits.len() != 3 {
                    return Err(Error::parse(lineno, format!("clause has {} variables, expected 3", lits.len())));
                }
                let vars: Vec<usize> = lits.iter().map(|&l| l as usize).collect();
                if let Some(&bad) = vars.iter().find(|&&x| x > nv) {
                    return Err(Error::parse(lineno, format!("variable {bad} exceeds declared {nv}")));
                }
                if vars[0] == vars[1] || vars[0] == vars[2] || vars[1] == vars[2] {
                    return Err(Error::parse(lineno, "repeated variable in clause"));
                }
                clauses.push([vars[0] - 1, vars[1] - 1, vars[2] - 1]);
            }
        }
    }
    let Some((nv, nc)) = header else {
        return Err(Error::parse(text.lines().count().max(1), "missing `p mnae` header"));
    };
    if clauses.len() != nc {
        return Err(Error::parse(text.lines().count(), format!("header declares {nc} clauses, found {}", clauses.len())));
    }
    Ok(NaeInstance { num_vars: nv, clauses })
}

/// The `k`-th assignment in lexicographic order over `(x1, ..., xn)` with
/// `true` before `false`.
pub(crate) fn nth_assignment(n: usize, k: u64) -> TruthAssignment {
    (0..n).map(|i| (k >> (n - 1 - i)) & 1 == 0).collect()
}

/// First feasible assignment in lexicographic order (`true` before
/// `false`, `x1` most significant), or `None` after all `2^n`.
pub fn nae_brute_force(phi: &NaeInstance) -> Result<Option<TruthAssignment>> {
    let n = phi.num_vars;
    if n > BRUTE_FORCE_MAX_VARS {
        return Err(Error::TooLarge { size: n, limit: BRUTE_FORCE_MAX_VARS });
    }
    Ok((0..1u64 << n).map(|k| nth_assignment(n, k)).find(|f| phi.is_feasible(f)))
}

/// `0`/`1` string, one character per variable.
pub fn format_assignment(f: &[bool]) -> String {
    f.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

pub fn parse_assignment(s: &str) -> Result<TruthAssignment> {
    s.trim()
        .chars()
        .map(|c| match c {
            '1' => Ok(true),
            '0' => Ok(false),
            other => Err(Error::parse(1, format!("assignment character `{other}` is not 0 or 1"))),
        })
        .collect()
}

/// The Fano plane as a 7-variable instance; it has no feasible assignment.
pub fn fano_instance() -> NaeInstance {
    let lines = [[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 5, 6]];
    NaeInstance { num_vars: 7, clauses: lines.iter().map(|l| [l[0] - 1, l[1] - 1, l[2] - 1]).collect() }
}
