use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// LCF notation: a Hamiltonian cycle `0..N` plus chords `i -> i + shift`,
/// where the shift list is repeated `exponent` times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcfCode {
    pub shifts: Vec<i64>,
    pub exponent: usize,
}

impl LcfCode {
    pub fn new(shifts: Vec<i64>, exponent: usize) -> Result<LcfCode> {
        if shifts.is_empty() || exponent == 0 {
            return Err(Error::InvalidParameters("empty LCF code".into()));
        }
        if shifts.contains(&0) {
            return Err(Error::InvalidParameters("LCF shift 0 is a loop".into()));
        }
        Ok(LcfCode { shifts, exponent })
    }

    pub fn vertex_count(&self) -> usize {
        self.shifts.len() * self.exponent
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let n = self.vertex_count();
        if n < 4 {
            return Err(Error::InvalidParameters(format!("LCF code on {n} vertices")));
        }
        let ni = n as i64;
        let mut chords: BTreeSet<(usize, usize)> = BTreeSet::new();
        for i in 0..n {
            let shift = self.shifts[i % self.shifts.len()];
            let j = (i as i64 + shift).rem_euclid(ni) as usize;
            let d = (j + n - i) % n;
            if d == 0 || d == 1 || d == n - 1 {
                return Err(Error::InvalidParameters(format!(
                    "chord {i}-{j} collides with the Hamiltonian cycle"
                )));
            }
            chords.insert((i.min(j), i.max(j)));
        }
        let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        edges.extend(chords);
        let g = Graph::undirected(n, &edges)?;
        if !g.is_cubic() {
            return Err(Error::InvalidParameters(format!(
                "LCF code {self} does not give a cubic graph"
            )));
        }
        Ok(g)
    }
}

impl FromStr for LcfCode {
    type Err = Error;

    /// Accepts `[5,-5]^7`, `[3]^6` or `[5,-5,3]`; whitespace is ignored and
    /// the Unicode minus sign is allowed.
    fn from_str(text: &str) -> Result<LcfCode> {
        let cleaned: String = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '\u{2212}' { '-' } else { c })
            .collect();
        let bad = || Error::Parse(format!("not an LCF code: {text:?}"));
        let body = cleaned.strip_prefix('[').ok_or_else(bad)?;
        let (list, tail) = body.split_once(']').ok_or_else(bad)?;
        let exponent = match tail {
            "" => 1,
            t => t
                .strip_prefix('^')
                .and_then(|e| e.parse::<usize>().ok())
                .ok_or_else(bad)?,
        };
        let shifts = list
            .split(',')
            .map(|s| s.parse::<i64>().map_err(|_| bad()))
            .collect::<Result<Vec<i64>>>()?;
        LcfCode::new(shifts, exponent)
    }
}

impl fmt::Display for LcfCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list: Vec<String> = self.shifts.iter().map(i64::to_string).collect();
        write!(f, "[{}]^{}", list.join(","), self.exponent)
    }
}

pub fn lcf(code: &str) -> Result<Graph> {
    code.parse::<LcfCode>()?.to_graph()
}
