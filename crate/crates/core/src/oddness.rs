//! Existence of odd automorphisms, decided directly from the automorphism
//! group and predicted from the type, the parity of `n = |V|/2` and
//! bipartiteness.

use serde::Serialize;

use crate::autsearch::{automorphism_search, DEFAULT_VERTEX_BOUND};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::{PermGroup, Permutation, DEFAULT_ENUMERATION_BOUND};
use crate::symclass::{type_label, TypeAnalysis, TypeLabel};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectVerdict {
    pub exists: bool,
    pub witness: Option<Permutation>,
}

/// Parity is a homomorphism, so `aut` has an odd element iff one of its
/// generators is odd. The witness is the least odd generator.
pub fn detect_odd_direct(aut: &PermGroup) -> DirectVerdict {
    let witness = aut.generators().iter().filter(|p| p.is_odd()).min().cloned();
    DirectVerdict {
        exists: witness.is_some(),
        witness,
    }
}

/// An odd automorphism of 2-power order: `w^r` with `w` the direct witness
/// and `r` the odd part of its order. `r` is odd, so `w^r` stays odd.
pub fn two_power_odd_witness(aut: &PermGroup) -> Option<Permutation> {
    let w = detect_odd_direct(aut).witness?;
    let order = w.order();
    let r = order >> order.trailing_zeros();
    Some(w.pow(r as i64))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MCayleyWitness {
    pub k: u32,
    pub m: usize,
    /// Order `2^k`, with exactly `m` cycles, all of length `2^k`.
    pub witness: Permutation,
}

/// Writes `|V| = 2^k m` with `m` odd and, when `k >= 2`, looks for an
/// automorphism whose cycles all have length `2^k`. Such an element
/// generates a semiregular cyclic group of order `2^k` with `m` orbits.
pub fn m_cayley_cyclic_witness(aut: &PermGroup, bound: u128) -> Result<Option<MCayleyWitness>> {
    let v = aut.degree();
    let k = v.trailing_zeros();
    let m = v >> k;
    if k < 2 {
        return Ok(None);
    }
    let len = 1usize << k;
    let mut best: Option<Permutation> = None;
    for p in aut.elements(bound)? {
        if p.order() != len as u128 {
            continue;
        }
        if p.cycle_count() == m && best.as_ref().is_none_or(|b| &p < b) {
            best = Some(p);
        }
    }
    Ok(best.map(|witness| MCayleyWitness { k, m, witness }))
}

/// Row of the prediction table a verdict came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Rule {
    NOdd,
    NOddAndBipartite,
    NOddOrCyclicMCayley,
    Never,
}

impl Rule {
    pub fn for_label(label: TypeLabel) -> Result<Rule> {
        let rule = match label.to_string().as_str() {
            "{1}" | "{1,2^1,2^2,3}" | "{2^1,2^2,3}" | "{2^1,3}" | "{2^2,3}" | "{1,4^1}"
            | "{4^2}" | "{1,4^1,4^2,5}" | "{4^1,4^2,5}" => Rule::NOdd,
            "{2^1}" | "{3}" | "{4^1}" | "{5}" => Rule::NOddAndBipartite,
            "{1,2^1}" => Rule::NOddOrCyclicMCayley,
            "{2^2}" | "{4^1,5}" | "{4^2,5}" => Rule::Never,
            other => return Err(Error::UnknownTypeLabel(other.to_string())),
        };
        Ok(rule)
    }

    pub fn condition(self) -> &'static str {
        match self {
            Rule::NOdd => "n odd",
            Rule::NOddAndBipartite => "n odd and bipartite",
            Rule::NOddOrCyclicMCayley => "n odd or cyclic m-Cayley",
            Rule::Never => "never",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub exists: bool,
    /// e.g. `"{2^1,3}: n odd"`
    pub rule: String,
}

/// Predicted existence of an odd automorphism for a cubic symmetric graph
/// of order `2n` with the given type.
pub fn predict_odd(label: TypeLabel, n: usize, bipartite: bool, m_cayley: bool) -> Result<Prediction> {
    let rule = Rule::for_label(label)?;
    let odd = n % 2 == 1;
    let exists = match rule {
        Rule::NOdd => odd,
        Rule::NOddAndBipartite => odd && bipartite,
        Rule::NOddOrCyclicMCayley => odd || m_cayley,
        Rule::Never => false,
    };
    Ok(Prediction {
        exists,
        rule: format!("{label}: {}", rule.condition()),
    })
}

#[derive(Debug, Clone, Copy)]
pub struct OddnessOptions {
    pub vertex_bound: usize,
    pub enumeration_bound: u128,
    /// Run the cyclic m-Cayley search for every type, not only where the
    /// prediction needs it.
    pub always_m_cayley: bool,
}

impl Default for OddnessOptions {
    fn default() -> Self {
        OddnessOptions {
            vertex_bound: DEFAULT_VERTEX_BOUND,
            enumeration_bound: DEFAULT_ENUMERATION_BOUND,
            always_m_cayley: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct OddnessReport {
    /// Number of vertices, `2n`.
    pub order: usize,
    pub n: usize,
    pub bipartite: bool,
    pub label: TypeLabel,
    pub s: u32,
    pub direct: DirectVerdict,
    pub two_power_witness: Option<Permutation>,
    pub predicted: Prediction,
    pub m_cayley: Option<MCayleyWitness>,
    pub agree: bool,
}

#[derive(Serialize)]
struct DirectView {
    exists: bool,
    witness_cycles: Option<String>,
    two_power_witness_cycles: Option<String>,
}

#[derive(Serialize)]
struct MCayleyView {
    k: u32,
    m: usize,
    witness_cycles: String,
}

#[derive(Serialize)]
struct ReportView<'a> {
    order: usize,
    n: usize,
    bipartite: bool,
    #[serde(rename = "type")]
    label: TypeLabel,
    s: u32,
    direct: DirectView,
    predicted: &'a Prediction,
    m_cayley: Option<MCayleyView>,
    agree: bool,
}

impl Serialize for OddnessReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ReportView {
            order: self.order,
            n: self.n,
            bipartite: self.bipartite,
            label: self.label,
            s: self.s,
            direct: DirectView {
                exists: self.direct.exists,
                witness_cycles: self.direct.witness.as_ref().map(Permutation::to_cycle_string),
                two_power_witness_cycles: self
                    .two_power_witness
                    .as_ref()
                    .map(Permutation::to_cycle_string),
            },
            predicted: &self.predicted,
            m_cayley: self.m_cayley.as_ref().map(|w| MCayleyView {
                k: w.k,
                m: w.m,
                witness_cycles: w.witness.to_cycle_string(),
            }),
            agree: self.agree,
        }
        .serialize(s)
    }
}

/// Builds the report from an already computed group and type. The
/// prediction only sees the type, `n`, bipartiteness and the m-Cayley
/// search, never the direct verdict.
pub fn report_from_parts(
    g: &Graph,
    aut: &PermGroup,
    typ: &TypeAnalysis,
    opts: &OddnessOptions,
) -> Result<OddnessReport> {
    let order = g.order();
    let n = order / 2;
    let bipartite = g.is_bipartite();
    let needs_m_cayley = typ.label.to_string() == "{1,2^1}" && n.is_multiple_of(2);
    let m_cayley = if needs_m_cayley || opts.always_m_cayley {
        m_cayley_cyclic_witness(aut, opts.enumeration_bound)?
    } else {
        None
    };
    let predicted = predict_odd(typ.label, n, bipartite, m_cayley.is_some())?;
    let direct = detect_odd_direct(aut);
    let two_power_witness = two_power_odd_witness(aut);
    Ok(OddnessReport {
        order,
        n,
        bipartite,
        label: typ.label,
        s: typ.s,
        agree: direct.exists == predicted.exists,
        direct,
        two_power_witness,
        predicted,
        m_cayley,
    })
}

/// Full pipeline: automorphism group, type, both verdicts.
pub fn cross_validate(g: &Graph, opts: &OddnessOptions) -> Result<OddnessReport> {
    let aut = automorphism_search(g, opts.vertex_bound)?.group;
    let typ = type_label(g, &aut)?;
    report_from_parts(g, &aut, &typ, opts)
}
