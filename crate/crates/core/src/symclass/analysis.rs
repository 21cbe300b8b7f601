use std::collections::{BTreeMap, HashSet, VecDeque};

use serde::Serialize;

use super::label::{stabilizer_candidates, StabilizerStructure, TypeLabel, TypeMember};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::{fingerprint, PermGroup, Permutation, StructureLabel, DEFAULT_ENUMERATION_BOUND};

/// An `s'`-regular subgroup found by the sweep.
#[derive(Debug, Clone)]
pub struct RegularSubgroupRecord {
    pub level: u32,
    /// `Some(1)` or `Some(2)` on levels 2 and 4, `None` elsewhere.
    pub subtype: Option<u8>,
    pub group: PermGroup,
    /// An element of `group` swapping the two ends of the base arc; an
    /// involution whenever one exists.
    pub arc_reverser: Permutation,
}

impl RegularSubgroupRecord {
    pub fn member(&self) -> TypeMember {
        TypeMember::new(self.level, self.subtype).expect("records carry valid levels")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TypeAnalysis {
    pub s: u32,
    pub label: TypeLabel,
    #[serde(skip)]
    pub records: Vec<RegularSubgroupRecord>,
    pub stabilizers: StabilizerStructure,
}

/// The arc `(0, v)` with `v` the least neighbor of 0.
pub fn base_arc(g: &Graph) -> (usize, usize) {
    (0, g.neighbors(0)[0])
}

/// Checks that `g` is connected and cubic and that `aut` acts transitively
/// on its arcs.
pub fn check_symmetric(g: &Graph, aut: &PermGroup) -> Result<()> {
    if g.order() == 0 || !g.is_cubic() {
        return Err(Error::NotCubic);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !aut.is_transitive() {
        return Err(Error::NotVertexTransitive);
    }
    let (u, v) = base_arc(g);
    if aut.point_stabilizer(u)?.orbit(v).len() != 3 {
        return Err(Error::NotArcTransitive);
    }
    Ok(())
}

fn level_from_order(order: u128, n: usize) -> Option<u32> {
    let base = 3 * n as u128;
    if !order.is_multiple_of(base) {
        return None;
    }
    let q = order / base;
    (q.is_power_of_two() && q <= 16).then(|| q.trailing_zeros() + 1)
}

/// The `s` with `|aut| = 3 * 2^(s-1) * |V|`, confirmed by checking that the
/// stabilizer of an `s`-arc is trivial.
pub fn arc_regularity_level(g: &Graph, aut: &PermGroup) -> Result<u32> {
    check_symmetric(g, aut)?;
    let order = aut.try_order()?;
    let s = level_from_order(order, g.order()).ok_or(Error::NotSymmetric {
        order,
        n: g.order(),
    })?;
    // an s-arc: keep taking the least neighbor that is not the previous vertex
    let (u, v) = base_arc(g);
    let mut arc = vec![u, v];
    while arc.len() < s as usize + 1 {
        let prev = arc[arc.len() - 2];
        let last = arc[arc.len() - 1];
        let next = *g
            .neighbors(last)
            .iter()
            .find(|&&w| w != prev)
            .expect("cubic graphs have a second neighbor");
        arc.push(next);
    }
    if !aut.pointwise_stabilizer(&arc)?.is_trivial() {
        return Err(Error::Internal(format!(
            "order fits s = {s} but the stabilizer of an s-arc is not trivial"
        )));
    }
    Ok(s)
}

/// Identifies the vertex and edge stabilizers against the row for `s`.
pub fn stabilizer_structures(g: &Graph, aut: &PermGroup, s: u32) -> Result<StabilizerStructure> {
    let (vertex_label, edge_labels) =
        stabilizer_candidates(s).ok_or_else(|| Error::InvalidParameters(format!("s = {s}")))?;
    let (u, v) = base_arc(g);
    let vfp = fingerprint(&aut.point_stabilizer(u)?, DEFAULT_ENUMERATION_BOUND)?;
    let efp = fingerprint(
        &aut.setwise_pair_stabilizer(u, v, DEFAULT_ENUMERATION_BOUND)?,
        DEFAULT_ENUMERATION_BOUND,
    )?;
    let vertex = StructureLabel::identify(&vfp, &[vertex_label]).ok_or_else(|| {
        Error::UnknownStabilizer(format!(
            "vertex stabilizer of order {} at s = {s}",
            vfp.order
        ))
    })?;
    let edge = StructureLabel::identify(&efp, edge_labels).ok_or_else(|| {
        Error::UnknownStabilizer(format!(
            "edge stabilizer of order {} with {} involutions at s = {s}",
            efp.order, efp.involution_count
        ))
    })?;
    Ok(StabilizerStructure { vertex, edge })
}

/// Subgroups of the vertex stabilizer, each as an element bit set plus a
/// generating list, together with the elements swapping the base arc.
struct Sweep<'a> {
    g: &'a Graph,
    u: usize,
    v: usize,
    elements: Vec<Permutation>,
    subgroups: Vec<(u64, Vec<usize>)>,
    swaps: Vec<Permutation>,
}

impl<'a> Sweep<'a> {
    fn new(g: &'a Graph, aut: &PermGroup) -> Result<Sweep<'a>> {
        let (u, v) = base_arc(g);
        let stab = aut.point_stabilizer(u)?;
        let mut elements: Vec<Permutation> = stab.elements(64)?.collect();
        elements.sort();
        let index: BTreeMap<&Permutation, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let k = elements.len();
        let table: Vec<Vec<usize>> = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&a.then(b)]).collect())
            .collect();
        let closure = |gens: &[usize]| -> u64 {
            // identity is the least permutation, hence element 0
            let mut mask = 1u64;
            let mut queue = VecDeque::from([0usize]);
            while let Some(x) = queue.pop_front() {
                for &g in gens {
                    let y = table[x][g];
                    if mask & (1 << y) == 0 {
                        mask |= 1 << y;
                        queue.push_back(y);
                    }
                }
            }
            mask
        };
        let mut subgroups: Vec<(u64, Vec<usize>)> = vec![(1, Vec::new())];
        let mut seen: HashSet<u64> = HashSet::from([1]);
        let mut i = 0;
        while i < subgroups.len() {
            let (mask, gens) = subgroups[i].clone();
            for x in 0..k {
                if mask & (1 << x) != 0 {
                    continue;
                }
                let mut more = gens.clone();
                more.push(x);
                let m = closure(&more);
                if seen.insert(m) {
                    subgroups.push((m, more));
                }
            }
            i += 1;
        }
        let mut swaps: Vec<Permutation> = aut
            .setwise_pair_stabilizer(u, v, DEFAULT_ENUMERATION_BOUND)?
            .elements(DEFAULT_ENUMERATION_BOUND)?
            .filter(|p| p.apply(u) == v)
            .collect();
        swaps.sort();
        Ok(Sweep {
            g,
            u,
            v,
            elements,
            subgroups,
            swaps,
        })
    }

    fn records(&self, level: u32) -> Result<Vec<RegularSubgroupRecord>> {
        let n = self.g.order();
        let local_order = 3usize << (level - 1);
        let target = local_order as u128 * n as u128;
        let mut out: Vec<RegularSubgroupRecord> = Vec::new();
        for (mask, gens) in &self.subgroups {
            if mask.count_ones() as usize != local_order {
                continue;
            }
            let h: Vec<Permutation> = gens.iter().map(|&i| self.elements[i].clone()).collect();
            if !transitive_on(&h, self.g.neighbors(self.u)) {
                continue;
            }
            let h_elements: Vec<&Permutation> = (0..self.elements.len())
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| &self.elements[i])
                .collect();
            for a in &self.swaps {
                let known = out
                    .iter()
                    .any(|r| r.group.contains(a) && h.iter().all(|x| r.group.contains(x)));
                if known {
                    continue;
                }
                let mut k_gens = h.clone();
                k_gens.push(a.clone());
                let k = PermGroup::new(k_gens)?;
                if k.try_order()? != target || !k.is_transitive() {
                    continue;
                }
                // K_u = H, and the elements of K swapping u and v are h a
                // with h in H fixing v
                let reverser = h_elements
                    .iter()
                    .filter(|x| x.apply(self.v) == self.v)
                    .map(|x| x.then(a))
                    .filter(|y| y.order() == 2)
                    .min();
                let subtype = match level {
                    2 | 4 => Some(if reverser.is_some() { 1 } else { 2 }),
                    _ => None,
                };
                if out.iter().any(|r| r.group.same_group(&k)) {
                    continue;
                }
                out.push(RegularSubgroupRecord {
                    level,
                    subtype,
                    group: k,
                    arc_reverser: reverser.unwrap_or_else(|| a.clone()),
                });
            }
        }
        Ok(out)
    }
}

fn transitive_on(gens: &[Permutation], points: &[usize]) -> bool {
    let mut orbit = vec![points[0]];
    let mut i = 0;
    while i < orbit.len() {
        for g in gens {
            let y = g.apply(orbit[i]);
            if !orbit.contains(&y) {
                orbit.push(y);
            }
        }
        i += 1;
    }
    points.iter().all(|p| orbit.contains(p))
}

/// All `s'`-regular subgroups of `aut`, one record per distinct group.
pub fn find_regular_subgroups(
    g: &Graph,
    aut: &PermGroup,
    level: u32,
) -> Result<Vec<RegularSubgroupRecord>> {
    let s = arc_regularity_level(g, aut)?;
    if level == 0 || level > s {
        return Err(Error::InvalidParameters(format!(
            "level {level} outside 1..={s}"
        )));
    }
    Sweep::new(g, aut)?.records(level)
}

/// Arc-regularity level, stabilizer structures and type of a cubic
/// symmetric graph with full automorphism group `aut`.
pub fn type_label(g: &Graph, aut: &PermGroup) -> Result<TypeAnalysis> {
    let s = arc_regularity_level(g, aut)?;
    let stabilizers = stabilizer_structures(g, aut, s)?;
    let sweep = Sweep::new(g, aut)?;
    let mut records = Vec::new();
    for level in 1..=s {
        records.extend(sweep.records(level)?);
    }
    let label = TypeLabel::from_members(records.iter().map(RegularSubgroupRecord::member));
    let Some(column) = label.bipartiteness() else {
        return Err(Error::InadmissibleType(label.to_string()));
    };
    let bipartite = g.is_bipartite();
    if !column.allows(bipartite) {
        return Err(Error::InadmissibleType(format!(
            "{label} on a graph with bipartite = {bipartite}"
        )));
    }
    Ok(TypeAnalysis {
        s,
        label,
        records,
        stabilizers,
    })
}

/// True when the label is `{2^2}` or `{4^2}` but the girth is at most 9,
/// which no cubic symmetric graph allows.
pub fn girth_type_violation(g: &Graph, label: TypeLabel) -> bool {
    let restricted = ["{2^2}", "{4^2}"];
    restricted.contains(&label.to_string().as_str()) && g.girth().is_some_and(|girth| girth <= 9)
}
