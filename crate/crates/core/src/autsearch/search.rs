use std::collections::hash_map::DefaultHasher;
use std::hash::Hasher;

use super::partition::ColoredPartition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::{PermGroup, Permutation};

pub const DEFAULT_VERTEX_BOUND: usize = 5000;

/// Output of [`automorphism_search`].
#[derive(Debug, Clone)]
pub struct AutomorphismSearch {
    pub group: PermGroup,
    /// Vertices individualized along the first path of the search tree.
    pub base: Vec<usize>,
    /// `orbit_sizes[d]` is the size of the orbit of `base[d]` under the
    /// pointwise stabilizer of `base[..d]`.
    pub orbit_sizes: Vec<usize>,
    /// Product of `orbit_sizes`.
    pub search_order: u128,
    pub leaves_visited: u64,
}

#[derive(Clone)]
struct Node {
    part: ColoredPartition,
    trace: u64,
}

fn root(g: &Graph) -> Node {
    let mut part = ColoredPartition::by_colors(g);
    let mut h = DefaultHasher::new();
    let mut colors: Vec<u32> = (0..g.order()).map(|v| g.color(v)).collect();
    colors.sort_unstable();
    for c in colors {
        h.write_u32(c);
    }
    let starts = part.cell_starts();
    part.refine(g, &starts, &mut h);
    Node {
        part,
        trace: h.finish(),
    }
}

fn child(g: &Graph, node: &Node, v: usize) -> Node {
    let mut part = node.part.clone();
    let cell = part.individualize(v);
    let mut h = DefaultHasher::new();
    h.write_usize(cell);
    part.refine(g, &[cell], &mut h);
    Node {
        part,
        trace: h.finish(),
    }
}

fn leaf_map(from: &ColoredPartition, to: &ColoredPartition) -> Permutation {
    let mut images = vec![0; from.len()];
    for (&a, &b) in from.order().iter().zip(to.order()) {
        images[a] = b;
    }
    Permutation::from_images(images).expect("discrete partitions give a bijection")
}

/// The first path of the search tree: nodes, target cells, chosen vertices.
struct FirstPath {
    nodes: Vec<Node>,
    targets: Vec<(usize, usize)>,
    chosen: Vec<usize>,
}

fn first_path(g: &Graph) -> FirstPath {
    let mut nodes = vec![root(g)];
    let mut targets = Vec::new();
    let mut chosen = Vec::new();
    while let Some((s, e)) = nodes.last().expect("nonempty").part.target_cell() {
        let node = nodes.last().expect("nonempty");
        let v = *node.part.order()[s..e].iter().min().expect("nonempty cell");
        let next = child(g, node, v);
        targets.push((s, e));
        chosen.push(v);
        nodes.push(next);
    }
    FirstPath {
        nodes,
        targets,
        chosen,
    }
}

/// Depth-first search below `node` (at `depth`) for a leaf whose map from
/// the first leaf satisfies `accept`. Branches whose trace differs from the
/// first path are cut.
fn descend(
    g: &Graph,
    path: &FirstPath,
    node: &Node,
    depth: usize,
    leaves: &mut u64,
    accept: &dyn Fn(&Permutation) -> bool,
) -> Option<Permutation> {
    if depth == path.targets.len() {
        if !node.part.is_discrete() {
            return None;
        }
        *leaves += 1;
        let first_leaf = &path.nodes[depth].part;
        let map = leaf_map(first_leaf, &node.part);
        return accept(&map).then_some(map);
    }
    let target = node.part.target_cell()?;
    if target != path.targets[depth] {
        return None;
    }
    let mut candidates: Vec<usize> = node.part.order()[target.0..target.1].to_vec();
    candidates.sort_unstable();
    for x in candidates {
        let next = child(g, node, x);
        if next.trace != path.nodes[depth + 1].trace {
            continue;
        }
        if let Some(p) = descend(g, path, &next, depth + 1, leaves, accept) {
            return Some(p);
        }
    }
    None
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller root so representatives are least elements
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }

    fn absorb(&mut self, p: &Permutation) {
        for x in 0..p.degree() {
            self.union(x, p.apply(x));
        }
    }
}

fn check_bound(g: &Graph, bound: usize) -> Result<()> {
    if g.order() > bound {
        return Err(Error::TooManyVertices {
            n: g.order(),
            bound,
        });
    }
    if g.order() == 0 {
        return Err(Error::InvalidGraph("graph has no vertices".into()));
    }
    Ok(())
}

/// Full automorphism group of `g` (respecting arc direction and colors),
/// with the search-tree data it was read from.
pub fn automorphism_search(g: &Graph, vertex_bound: usize) -> Result<AutomorphismSearch> {
    check_bound(g, vertex_bound)?;
    let n = g.order();
    let path = first_path(g);
    let depth = path.targets.len();
    let accept = |p: &Permutation| g.is_automorphism(p);
    let mut generators: Vec<Permutation> = Vec::new();
    let mut orbit_sizes = vec![1; depth];
    let mut leaves = 1u64;
    for d in (0..depth).rev() {
        let v = path.chosen[d];
        let mut uf = UnionFind::new(n);
        for p in &generators {
            uf.absorb(p);
        }
        let (s, e) = path.targets[d];
        let mut cell: Vec<usize> = path.nodes[d].part.order()[s..e].to_vec();
        cell.sort_unstable();
        let mut failed: Vec<usize> = Vec::new();
        for &w in &cell {
            if w == v || uf.find(w) == uf.find(v) {
                continue;
            }
            if failed.iter().any(|&f| uf.find(f) == uf.find(w)) {
                continue;
            }
            let node = child(g, &path.nodes[d], w);
            let found = if node.trace == path.nodes[d + 1].trace {
                descend(g, &path, &node, d + 1, &mut leaves, &accept)
            } else {
                None
            };
            match found {
                Some(p) => {
                    uf.absorb(&p);
                    log::trace!("level {d}: generator {p}");
                    generators.push(p);
                }
                None => failed.push(w),
            }
        }
        let rv = uf.find(v);
        orbit_sizes[d] = cell.iter().filter(|&&x| uf.find(x) == rv).count();
    }
    let search_order = orbit_sizes
        .iter()
        .try_fold(1u128, |acc, &k| acc.checked_mul(k as u128))
        .ok_or(Error::OrderOverflow)?;
    let group = if generators.is_empty() {
        PermGroup::trivial(n)
    } else {
        PermGroup::new(generators)?
    };
    let order = group.try_order()?;
    if order != search_order {
        return Err(Error::Internal(format!(
            "search tree gives {search_order} automorphisms, generated group has {order}"
        )));
    }
    Ok(AutomorphismSearch {
        group,
        base: path.chosen,
        orbit_sizes,
        search_order,
        leaves_visited: leaves,
    })
}

pub fn automorphism_group(g: &Graph) -> Result<PermGroup> {
    Ok(automorphism_search(g, DEFAULT_VERTEX_BOUND)?.group)
}

/// An isomorphism `x -> y` if one exists.
pub fn are_isomorphic(x: &Graph, y: &Graph) -> Result<Option<Permutation>> {
    check_bound(x, DEFAULT_VERTEX_BOUND)?;
    check_bound(y, DEFAULT_VERTEX_BOUND)?;
    if x.order() != y.order()
        || x.is_directed() != y.is_directed()
        || x.edge_count() != y.edge_count()
    {
        return Ok(None);
    }
    let mut dx: Vec<(usize, usize)> = (0..x.order())
        .map(|v| (x.degree(v), x.in_neighbors(v).len()))
        .collect();
    let mut dy: Vec<(usize, usize)> = (0..y.order())
        .map(|v| (y.degree(v), y.in_neighbors(v).len()))
        .collect();
    dx.sort_unstable();
    dy.sort_unstable();
    if dx != dy {
        return Ok(None);
    }
    let path = first_path(x);
    let ry = root(y);
    if ry.trace != path.nodes[0].trace {
        return Ok(None);
    }
    let accept = |p: &Permutation| x.is_isomorphism_to(y, p);
    let mut leaves = 0u64;
    if path.targets.is_empty() {
        return Ok(descend(y, &path, &ry, 0, &mut leaves, &accept));
    }
    // at the top level one representative per Aut(y)-orbit suffices
    let aut_y = automorphism_group(y)?;
    let mut orbit_rep = vec![usize::MAX; y.order()];
    for orbit in aut_y.orbits() {
        let rep = orbit[0];
        for v in orbit {
            orbit_rep[v] = rep;
        }
    }
    let Some(target) = ry.part.target_cell() else {
        return Ok(None);
    };
    if target != path.targets[0] {
        return Ok(None);
    }
    let mut candidates: Vec<usize> = ry.part.order()[target.0..target.1]
        .iter()
        .map(|&v| orbit_rep[v])
        .collect();
    candidates.sort_unstable();
    candidates.dedup();
    for v in candidates {
        let node = child(y, &ry, v);
        if node.trace != path.nodes[1].trace {
            continue;
        }
        if let Some(p) = descend(y, &path, &node, 1, &mut leaves, &accept) {
            return Ok(Some(p));
        }
    }
    Ok(None)
}
