use std::fmt;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Small tree templates used to describe rigid cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TreeShape {
    #[serde(rename = "VERTEX")]
    Vertex,
    I,
    Y,
    H,
    A,
    B,
    #[serde(rename = "OTHER")]
    Other,
}

impl TreeShape {
    pub fn name(self) -> &'static str {
        match self {
            TreeShape::Vertex => "VERTEX",
            TreeShape::I => "I",
            TreeShape::Y => "Y",
            TreeShape::H => "H",
            TreeShape::A => "A",
            TreeShape::B => "B",
            TreeShape::Other => "OTHER",
        }
    }
}

impl fmt::Display for TreeShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Matches a connected graph against the templates by vertex count, degree
/// multiset and diameter.
///
/// * `Vertex`: one vertex.
/// * `I`: one edge.
/// * `Y`: the claw `K_{1,3}`.
/// * `H`: two adjacent degree-3 vertices with two leaves each.
/// * `A`: a degree-3 root whose three children each carry two leaves.
/// * `B`: `A` with one pair of sibling leaves removed.
pub fn classify_tree_shape(component: &Graph) -> Result<TreeShape> {
    let n = component.order();
    if n == 0 || !component.is_connected() {
        return Err(Error::Disconnected);
    }
    if component.edge_count() != n - 1 {
        return Ok(TreeShape::Other);
    }
    let mut degrees: Vec<usize> = (0..n).map(|v| component.degree(v)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let count = |d: usize| degrees.iter().filter(|&&x| x == d).count();
    let only_1_and_3 = count(1) + count(3) == n;
    let shape = match n {
        1 => TreeShape::Vertex,
        2 => TreeShape::I,
        4 if count(3) == 1 => TreeShape::Y,
        6 if only_1_and_3 && count(3) == 2 => TreeShape::H,
        // Two trees have this degree multiset; the A-tree is the one of
        // diameter 4 (the other is a path of four hubs, diameter 5).
        10 if only_1_and_3 && count(3) == 4 && diameter(component) == 4 => TreeShape::A,
        8 if only_1_and_3 && count(3) == 3 => TreeShape::B,
        _ => TreeShape::Other,
    };
    Ok(shape)
}

fn diameter(g: &Graph) -> usize {
    (0..g.order())
        .map(|v| {
            g.distances_from(v)
                .into_iter()
                .filter(|&d| d != usize::MAX)
                .max()
                .unwrap_or(0)
        })
        .max()
        .unwrap_or(0)
}
