//! Fixed points of automorphisms: rigid cells, their tree shapes and which
//! shapes are allowed, canonical involutions, and orbit-type profiles of
//! cyclic subgroups.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{classify_tree_shape, Graph, Quotient, TreeShape};
use crate::perm::{PermGroup, Permutation};
use crate::symclass::TypeLabel;

/// Vertices fixed by `alpha`, which must be an automorphism of `g`.
pub fn fixed_set(g: &Graph, alpha: &Permutation) -> Result<Vec<usize>> {
    if !g.is_automorphism(alpha) {
        return Err(Error::NotAutomorphism);
    }
    Ok(alpha.fixed_points())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RigidCell {
    pub vertices: Vec<usize>,
    pub shape: TreeShape,
}

#[derive(Debug, Clone)]
pub struct RigidCellReport {
    pub automorphism: Permutation,
    pub fixed_count: usize,
    pub cells: Vec<RigidCell>,
    /// `None` when no rule covers the element's order.
    pub all_templates_legal: Option<bool>,
}

impl Serialize for RigidCellReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct View<'a> {
            automorphism: String,
            fixed_count: usize,
            cells: &'a [RigidCell],
            legal: Option<bool>,
        }
        View {
            automorphism: self.automorphism.to_cycle_string(),
            fixed_count: self.fixed_count,
            cells: &self.cells,
            legal: self.all_templates_legal,
        }
        .serialize(s)
    }
}

/// Whether rigid cells of the given shapes may occur together for an
/// automorphism of order `order` with fixed points, in an `s`-regular graph
/// of type `label`. `None` when no rule covers the order.
pub fn shapes_legal(shapes: &[TreeShape], order: u128, s: u32, label: TypeLabel) -> Option<bool> {
    use TreeShape::*;
    let all = |allowed: &[TreeShape]| shapes.iter().all(|t| allowed.contains(t));
    let both = |a: TreeShape, b: TreeShape| shapes.contains(&a) && shapes.contains(&b);
    let verdict = match order {
        1 => return None,
        3 | 6 => all(&[Vertex]),
        4 => all(&[I]),
        2 => match s {
            2 => all(&[I]),
            3 => all(&[I, Y]) && (!both(I, Y) || label.to_string() == "{3}"),
            4 => all(&[H]),
            5 => all(&[H, A]) && (!both(H, A) || label.to_string() == "{5}"),
            // vertex stabilizers at s = 1 have no involutions
            _ => false,
        },
        _ => return None,
    };
    Some(verdict)
}

/// Components of the subgraph induced on `Fix(alpha)`, classified by shape.
pub fn rigid_cells(g: &Graph, alpha: &Permutation, s: u32, label: TypeLabel) -> Result<RigidCellReport> {
    let fixed = fixed_set(g, alpha)?;
    if fixed.is_empty() {
        return Err(Error::EmptyFixedSet);
    }
    let (sub, labels) = g.induced_subgraph(&fixed);
    let mut cells = Vec::new();
    for comp in sub.components() {
        let (piece, _) = sub.induced_subgraph(&comp);
        let shape = classify_tree_shape(&piece)?;
        cells.push(RigidCell {
            vertices: comp.iter().map(|&i| labels[i]).collect(),
            shape,
        });
    }
    let shapes: Vec<TreeShape> = cells.iter().map(|c| c.shape).collect();
    Ok(RigidCellReport {
        automorphism: alpha.clone(),
        fixed_count: fixed.len(),
        all_templates_legal: shapes_legal(&shapes, alpha.order(), s, label),
        cells,
    })
}

/// Where a canonical involution is anchored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Anchor {
    Edge(usize, usize),
    Vertex(usize),
}

/// Vertices the canonical involution must fix: `I(u,v)`, `H(u,v)`, `Y(v)`
/// or `A(v)` according to `s`.
pub fn canonical_tree(g: &Graph, s: u32, anchor: Anchor) -> Result<Vec<usize>> {
    let mismatch = |reason: &str| Error::AnchorMismatch {
        s,
        reason: reason.to_string(),
    };
    let mut set = match (s, anchor) {
        (2 | 4, Anchor::Edge(u, v)) => {
            if !g.has_edge(u, v) {
                return Err(Error::InvalidParameters(format!("{u} and {v} are not adjacent")));
            }
            let mut set = vec![u, v];
            if s == 4 {
                set.extend(g.neighbors(u));
                set.extend(g.neighbors(v));
            }
            set
        }
        (3 | 5, Anchor::Vertex(v)) => {
            if v >= g.order() {
                return Err(Error::InvalidParameters(format!("no vertex {v}")));
            }
            let mut set = vec![v];
            set.extend(g.neighbors(v));
            if s == 5 {
                for &w in g.neighbors(v) {
                    set.extend(g.neighbors(w));
                }
            }
            set
        }
        (2 | 4, Anchor::Vertex(_)) => return Err(mismatch("levels 2 and 4 need an edge")),
        (3 | 5, Anchor::Edge(..)) => return Err(mismatch("levels 3 and 5 need a vertex")),
        _ => return Err(mismatch("canonical involutions exist for levels 2 to 5")),
    };
    set.sort_unstable();
    set.dedup();
    Ok(set)
}

/// The least involution of `aut` fixing the canonical tree pointwise.
pub fn canonical_involution(
    g: &Graph,
    aut: &PermGroup,
    s: u32,
    anchor: Anchor,
) -> Result<Option<Permutation>> {
    let tree = canonical_tree(g, s, anchor)?;
    let stab = aut.pointwise_stabilizer(&tree)?;
    Ok(stab
        .elements(crate::perm::DEFAULT_ENUMERATION_BOUND)?
        .filter(|p| p.order() == 2)
        .min())
}

/// Orbits of `<a>` sorted into the kinds used when counting parities.
#[derive(Debug, Clone)]
pub struct OrbitTypeProfile {
    pub generator: Permutation,
    pub fixed: Vec<usize>,
    /// length-2 orbits whose two vertices are adjacent
    pub type1_count: usize,
    /// length-2 orbits without an inner edge
    pub type2_count: usize,
    /// length-4 orbits
    pub type3_count: usize,
    /// orbit length -> (number of orbits, number with an inner edge), for
    /// all lengths
    pub by_length: BTreeMap<usize, (usize, usize)>,
    pub quotient: Quotient,
}

pub fn orbit_type_profile(g: &Graph, a: &Permutation) -> Result<OrbitTypeProfile> {
    if !g.is_automorphism(a) {
        return Err(Error::NotAutomorphism);
    }
    let orbits = a.cycles();
    let quotient = g.quotient(&orbits)?;
    let mut by_length: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    let (mut t1, mut t2, mut t3) = (0, 0, 0);
    for (i, orbit) in orbits.iter().enumerate() {
        let inner = quotient.has_inner_edge(i);
        let entry = by_length.entry(orbit.len()).or_insert((0, 0));
        entry.0 += 1;
        entry.1 += inner as usize;
        match (orbit.len(), inner) {
            (2, true) => t1 += 1,
            (2, false) => t2 += 1,
            (4, _) => t3 += 1,
            _ => {}
        }
    }
    Ok(OrbitTypeProfile {
        generator: a.clone(),
        fixed: a.fixed_points(),
        type1_count: t1,
        type2_count: t2,
        type3_count: t3,
        by_length,
        quotient,
    })
}

/// Rigid-cell data for one kind of vertex-fixing automorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RigidClassSummary {
    pub order: u128,
    pub fixed_count: usize,
    pub shapes: Vec<TreeShape>,
    pub legal: Option<bool>,
    /// How many elements of the vertex stabilizer look like this.
    pub count: usize,
}

/// Rigid cells of every nonidentity element of the stabilizer of vertex 0.
/// In a vertex-transitive graph every automorphism with a fixed point is
/// conjugate to one of these. Elements with the same order, fixed-point
/// count and shape multiset are merged.
pub fn rigid_sweep(
    g: &Graph,
    aut: &PermGroup,
    s: u32,
    label: TypeLabel,
    bound: u128,
) -> Result<Vec<RigidClassSummary>> {
    let stab = aut.point_stabilizer(0)?;
    // (order, fixed count, shapes) -> (legality, count)
    type Key = (u128, usize, Vec<TreeShape>);
    let mut classes: BTreeMap<Key, (Option<bool>, usize)> = BTreeMap::new();
    for alpha in stab.elements(bound)? {
        if alpha.is_identity() {
            continue;
        }
        let report = rigid_cells(g, &alpha, s, label)?;
        let mut shapes: Vec<TreeShape> = report.cells.iter().map(|c| c.shape).collect();
        shapes.sort();
        let entry = classes
            .entry((alpha.order(), report.fixed_count, shapes))
            .or_insert((report.all_templates_legal, 0));
        entry.1 += 1;
    }
    Ok(classes
        .into_iter()
        .map(|((order, fixed_count, shapes), (legal, count))| RigidClassSummary {
            order,
            fixed_count,
            shapes,
            legal,
            count,
        })
        .collect())
}
