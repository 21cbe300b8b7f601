//! Coset actions, orbitals of transitive groups, basic orbital (di)graphs
//! and whether one of them admits an odd automorphism.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::autsearch::automorphism_search;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oddness::{m_cayley_cyclic_witness, predict_odd, Prediction};
use crate::perm::{PermGroup, Permutation};
use crate::symclass::{type_label, TypeLabel};

/// Reads a group file: the degree on the first line, then one generator
/// per line, either as an image sequence `1 2 0 4 3` or in cycle notation.
/// Blank lines and `#` comments are skipped.
pub fn parse_group_file(text: &str) -> Result<(usize, Vec<Permutation>)> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty group file".into()))?;
    let degree: usize = header
        .parse()
        .map_err(|_| Error::Parse(format!("expected the degree, got {header:?}")))?;
    if degree == 0 {
        return Err(Error::Parse("degree must be positive".into()));
    }
    let mut gens = Vec::new();
    for line in lines {
        let p = if line.starts_with('(') {
            Permutation::parse_cycles(degree, line)?
        } else {
            let images = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("not a point: {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if images.len() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: images.len(),
                });
            }
            Permutation::from_images(images)?
        };
        gens.push(p);
    }
    Ok((degree, gens))
}

pub fn write_group_file(degree: usize, gens: &[Permutation]) -> String {
    let mut out = format!("{degree}\n");
    for g in gens {
        let images: Vec<String> = g.images().iter().map(usize::to_string).collect();
        out.push_str(&images.join(" "));
        out.push('\n');
    }
    out
}

/// Action of `G` on the right cosets of `S`. Coset `i` is `S x_i` where
/// `x_i` is the least element of the coset; coset 0 is `S` itself.
#[derive(Debug, Clone)]
pub struct CosetAction {
    pub group: PermGroup,
    pub representatives: Vec<Permutation>,
}

pub fn coset_action(g: &PermGroup, subgroup_gens: &[Permutation], bound: u128) -> Result<CosetAction> {
    let s = if subgroup_gens.is_empty() {
        PermGroup::trivial(g.degree())
    } else {
        PermGroup::new(subgroup_gens.to_vec())?
    };
    if s.degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            expected: g.degree(),
            found: s.degree(),
        });
    }
    if let Some(x) = subgroup_gens.iter().find(|x| !g.contains(x)) {
        return Err(Error::NotSubgroup(format!("{x} is not in the group")));
    }
    let index = g.try_order()? / s.try_order()?;
    if index > bound {
        return Err(Error::BoundExceeded { order: index, bound });
    }
    let s_elements: Vec<Permutation> = s.elements(bound)?.collect();
    let canon = |x: &Permutation| {
        s_elements
            .iter()
            .map(|h| h.then(x))
            .min()
            .expect("subgroups are nonempty")
    };
    let identity = Permutation::identity(g.degree());
    let mut reps = vec![canon(&identity)];
    let mut seen: BTreeSet<Permutation> = reps.iter().cloned().collect();
    let mut i = 0;
    while i < reps.len() {
        for gen in g.generators() {
            let y = canon(&reps[i].then(gen));
            if seen.insert(y.clone()) {
                reps.push(y);
            }
        }
        i += 1;
    }
    reps.sort();
    let position: BTreeMap<&Permutation, usize> = reps.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let mut action = Vec::new();
    for gen in g.generators() {
        let images: Vec<usize> = reps.iter().map(|r| position[&canon(&r.then(gen))]).collect();
        action.push(Permutation::from_images(images)?);
    }
    let group = PermGroup::new(action)?;
    Ok(CosetAction {
        group,
        representatives: reps,
    })
}

/// An orbit of a transitive group on ordered pairs of points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbital {
    /// `(0, x)` with `x` the least point of the suborbit.
    pub representative_pair: (usize, usize),
    pub pairs: BTreeSet<(usize, usize)>,
    pub suborbit: Vec<usize>,
    pub self_paired: bool,
    /// Index of the orbital holding the reversed pairs.
    pub paired_with: usize,
}

impl Orbital {
    pub fn suborbit_length(&self) -> usize {
        self.suborbit.len()
    }

    pub fn is_diagonal(&self) -> bool {
        self.representative_pair.0 == self.representative_pair.1
    }
}

/// All orbitals of `h`, the diagonal first, then by least suborbit point.
pub fn orbitals(h: &PermGroup) -> Result<Vec<Orbital>> {
    if !h.is_transitive() {
        return Err(Error::Intransitive);
    }
    let n = h.degree();
    let stab = h.point_stabilizer(0)?;
    let suborbits = stab.orbits();
    let transversal: Vec<Permutation> = (0..n)
        .map(|w| h.element_mapping(0, w).expect("transitive"))
        .collect();
    let mut out: Vec<Orbital> = suborbits
        .iter()
        .map(|sub| {
            let mut pairs = BTreeSet::new();
            for (w, t) in transversal.iter().enumerate() {
                for &y in sub {
                    pairs.insert((w, t.apply(y)));
                }
            }
            Orbital {
                representative_pair: (0, sub[0]),
                pairs,
                suborbit: sub.clone(),
                self_paired: false,
                paired_with: 0,
            }
        })
        .collect();
    for i in 0..out.len() {
        let (u, x) = out[i].representative_pair;
        let j = out
            .iter()
            .position(|o| o.pairs.contains(&(x, u)))
            .expect("orbitals partition all pairs");
        out[i].paired_with = j;
        out[i].self_paired = i == j;
    }
    Ok(out)
}

/// The (di)graph whose arcs are the pairs of `orbital`; undirected when the
/// orbital is self-paired.
pub fn basic_orbital_graph(h: &PermGroup, orbital: &Orbital) -> Result<Graph> {
    if orbital.is_diagonal() {
        return Err(Error::DiagonalOrbital);
    }
    let g = if orbital.self_paired {
        let edges: Vec<(usize, usize)> = orbital.pairs.iter().copied().filter(|(u, v)| u < v).collect();
        Graph::undirected(h.degree(), &edges)?
    } else {
        let arcs: Vec<(usize, usize)> = orbital.pairs.iter().copied().collect();
        Graph::from_edges(h.degree(), &arcs, true)?
    };
    if let Some(x) = h.generators().iter().find(|x| !g.is_automorphism(x)) {
        return Err(Error::Internal(format!("{x} does not preserve its orbital graph")));
    }
    Ok(g)
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitalDetail {
    pub representative: (usize, usize),
    pub valency: usize,
    pub self_paired: bool,
    pub aut_order: u128,
    pub odd: bool,
    pub witness_cycles: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitalOddReport {
    pub degree: usize,
    pub suborbit_lengths: Vec<usize>,
    pub orbitals: Vec<OrbitalDetail>,
    pub orbital_odd: bool,
}

/// Checks every nondiagonal orbital (di)graph of `h` for an odd
/// automorphism.
pub fn is_orbital_odd(h: &PermGroup, vertex_bound: usize) -> Result<OrbitalOddReport> {
    let all = orbitals(h)?;
    let mut details = Vec::new();
    for o in all.iter().filter(|o| !o.is_diagonal()) {
        let g = basic_orbital_graph(h, o)?;
        let aut = automorphism_search(&g, vertex_bound)?.group;
        let witness = aut.odd_generator().cloned();
        details.push(OrbitalDetail {
            representative: o.representative_pair,
            valency: o.suborbit_length(),
            self_paired: o.self_paired,
            aut_order: aut.try_order()?,
            odd: witness.is_some(),
            witness_cycles: witness.map(|w| w.to_cycle_string()),
        });
    }
    Ok(OrbitalOddReport {
        degree: h.degree(),
        suborbit_lengths: all.iter().map(Orbital::suborbit_length).collect(),
        orbital_odd: details.iter().any(|d| d.odd),
        orbitals: details,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CorollaryCheck {
    pub representative: (usize, usize),
    #[serde(rename = "type")]
    pub label: TypeLabel,
    pub prediction: Prediction,
    pub orbital_odd: bool,
    /// False only if an odd automorphism is predicted on the cubic orbital
    /// graph but no orbital graph has one.
    pub consistent: bool,
}

/// Takes the first self-paired suborbit of length 3 whose orbital graph is
/// connected, predicts odd automorphisms of that cubic symmetric graph from
/// its type, and compares with the orbital-odd verdict for `h`.
pub fn corollary_check(h: &PermGroup, vertex_bound: usize) -> Result<CorollaryCheck> {
    let all = orbitals(h)?;
    let mut candidate = None;
    for o in all.iter().filter(|o| o.self_paired && o.suborbit_length() == 3) {
        let g = basic_orbital_graph(h, o)?;
        if g.is_connected() {
            candidate = Some((o, g));
            break;
        }
    }
    let Some((o, g)) = candidate else {
        return Err(Error::Precondition(
            "no self-paired suborbit of length 3 with a connected orbital graph".into(),
        ));
    };
    let aut = automorphism_search(&g, vertex_bound)?.group;
    let typ = type_label(&g, &aut)?;
    let n = g.order() / 2;
    let m_cayley = if typ.label.to_string() == "{1,2^1}" && n % 2 == 0 {
        m_cayley_cyclic_witness(&aut, crate::perm::DEFAULT_ENUMERATION_BOUND)?.is_some()
    } else {
        false
    };
    let prediction = predict_odd(typ.label, n, g.is_bipartite(), m_cayley)?;
    let orbital_odd = is_orbital_odd(h, vertex_bound)?.orbital_odd;
    Ok(CorollaryCheck {
        representative: o.representative_pair,
        label: typ.label,
        consistent: !prediction.exists || orbital_odd,
        prediction,
        orbital_odd,
    })
}
