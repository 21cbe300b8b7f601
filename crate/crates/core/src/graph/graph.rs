use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A finite simple graph or digraph on `0..n`, optionally vertex-colored.
///
/// Adjacency lists are sorted. For digraphs `adj` holds out-neighbors and
/// `in_adj` in-neighbors; for graphs the two coincide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    directed: bool,
    adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    colors: Option<Vec<u32>>,
}

/// Two sides of a bipartite graph, each sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Bipartition {
    pub fn side_of(&self, v: usize) -> usize {
        if self.left.binary_search(&v).is_ok() {
            0
        } else {
            1
        }
    }
}

/// Quotient of a graph by a vertex partition. Cell adjacency drops loops;
/// edges inside a cell are reported through `inner_edges`, and parallel
/// edges between cells through `multiplicity`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub graph: Graph,
    pub cells: Vec<Vec<usize>>,
    pub cell_of: Vec<usize>,
    pub inner_edges: Vec<usize>,
    pub multiplicity: BTreeMap<(usize, usize), usize>,
}

impl Quotient {
    pub fn has_inner_edge(&self, cell: usize) -> bool {
        self.inner_edges[cell] > 0
    }
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)], directed: bool) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            adj[u].push(v);
            in_adj[v].push(u);
            if !directed {
                adj[v].push(u);
                in_adj[u].push(v);
            }
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge at vertex {u}"
                )));
            }
        }
        for list in &mut in_adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            directed,
            adj,
            in_adj,
            colors: None,
        })
    }

    pub fn undirected(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        Graph::from_edges(n, edges, false)
    }

    pub fn with_colors(mut self, colors: Vec<u32>) -> Result<Graph> {
        if colors.len() != self.n {
            return Err(Error::InvalidGraph(format!(
                "{} colors for {} vertices",
                colors.len(),
                self.n
            )));
        }
        self.colors = Some(colors);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn colors(&self) -> Option<&[u32]> {
        self.colors.as_deref()
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors.as_ref().map_or(0, |c| c[v])
    }

    /// Out-neighbors for digraphs.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        let arcs: usize = self.adj.iter().map(Vec::len).sum();
        if self.directed {
            arcs
        } else {
            arcs / 2
        }
    }

    /// Edges `(u, v)` with `u < v` (arcs for digraphs), lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if self.directed || u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.adj.iter().all(|l| l.len() == k)
    }

    pub fn is_cubic(&self) -> bool {
        !self.directed && self.is_regular(3)
    }

    /// Weakly connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut head = 0;
            while head < comp.len() {
                let x = comp[head];
                head += 1;
                for &y in self.adj[x].iter().chain(self.in_adj[x].iter()) {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// BFS distances; `usize::MAX` marks unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// A proper 2-coloring if one exists. Undirected graphs only.
    pub fn bipartition(&self) -> Option<Bipartition> {
        assert!(!self.directed, "bipartiteness is defined for undirected graphs");
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if side[y] == u8::MAX {
                        side[y] = 1 - side[x];
                        queue.push_back(y);
                    } else if side[y] == side[x] {
                        return None;
                    }
                }
            }
        }
        let left = (0..self.n).filter(|&v| side[v] == 0).collect();
        let right = (0..self.n).filter(|&v| side[v] == 1).collect();
        Some(Bipartition { left, right })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Length of a shortest cycle, `None` for forests. Undirected only.
    pub fn girth(&self) -> Option<usize> {
        assert!(!self.directed, "girth is defined for undirected graphs");
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for s in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            let mut queue = VecDeque::from([s]);
            'bfs: while let Some(x) = queue.pop_front() {
                if 2 * dist[x] + 1 >= best {
                    break;
                }
                for &y in &self.adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        best = best.min(dist[x] + dist[y] + 1);
                        if dist[y] == dist[x] {
                            break 'bfs;
                        }
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// `X[S]` plus the map from new labels to old ones (sorted `S`).
    pub fn induced_subgraph(&self, subset: &[usize]) -> (Graph, Vec<usize>) {
        let mut verts: Vec<usize> = subset.to_vec();
        verts.sort_unstable();
        verts.dedup();
        let mut new_label = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            new_label[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &u) in verts.iter().enumerate() {
            for &w in &self.adj[u] {
                let j = new_label[w];
                if j != usize::MAX && (self.directed || i < j) {
                    edges.push((i, j));
                }
            }
        }
        let mut g = Graph::from_edges(verts.len(), &edges, self.directed)
            .expect("induced subgraph of a simple graph is simple");
        if let Some(colors) = &self.colors {
            g.colors = Some(verts.iter().map(|&v| colors[v]).collect());
        }
        (g, verts)
    }

    /// Quotient relative to `cells`, which must partition the vertex set.
    pub fn quotient(&self, cells: &[Vec<usize>]) -> Result<Quotient> {
        let mut cell_of = vec![usize::MAX; self.n];
        for (i, cell) in cells.iter().enumerate() {
            if cell.is_empty() {
                return Err(Error::InvalidPartition(format!("cell {i} is empty")));
            }
            for &v in cell {
                if v >= self.n {
                    return Err(Error::InvalidPartition(format!("vertex {v} out of range")));
                }
                if cell_of[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("vertex {v} in two cells")));
                }
                cell_of[v] = i;
            }
        }
        if let Some(v) = cell_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::InvalidPartition(format!("vertex {v} not covered")));
        }
        let mut inner_edges = vec![0; cells.len()];
        let mut multiplicity: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (u, v) in self.edges() {
            let (a, b) = (cell_of[u], cell_of[v]);
            if a == b {
                inner_edges[a] += 1;
            } else {
                let key = if self.directed || a < b { (a, b) } else { (b, a) };
                *multiplicity.entry(key).or_insert(0) += 1;
            }
        }
        let edges: Vec<(usize, usize)> = multiplicity.keys().copied().collect();
        let graph = Graph::from_edges(cells.len(), &edges, self.directed)?;
        Ok(Quotient {
            graph,
            cells: cells.to_vec(),
            cell_of,
            inner_edges,
            multiplicity,
        })
    }

    /// True iff `p` maps arcs to arcs and preserves colors.
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        if p.degree() != self.n {
            return false;
        }
        if let Some(colors) = &self.colors {
            if (0..self.n).any(|v| colors[v] != colors[p.apply(v)]) {
                return false;
            }
        }
        (0..self.n).all(|u| {
            let pu = p.apply(u);
            self.adj[u].len() == self.adj[pu].len()
                && self.adj[u].iter().all(|&v| self.has_edge(pu, p.apply(v)))
        })
    }

    /// True iff `p` maps `self` onto `other`.
    pub fn is_isomorphism_to(&self, other: &Graph, p: &Permutation) -> bool {
        if p.degree() != self.n
            || other.n != self.n
            || other.directed != self.directed
            || other.edge_count() != self.edge_count()
        {
            return false;
        }
        if (0..self.n).any(|v| self.color(v) != other.color(p.apply(v))) {
            return false;
        }
        (0..self.n).all(|u| {
            let pu = p.apply(u);
            self.adj[u].iter().all(|&v| other.has_edge(pu, p.apply(v)))
        })
    }

    /// Canonical bipartite double cover `X × K2`: vertex `v` becomes `2v`
    /// and `2v + 1`.
    pub fn bipartite_double(&self) -> Graph {
        let mut edges = Vec::new();
        for (u, v) in self.edges() {
            edges.push((2 * u, 2 * v + 1));
            edges.push((2 * u + 1, 2 * v));
        }
        Graph::from_edges(2 * self.n, &edges, self.directed).expect("double cover is simple")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::undirected(n, &edges).unwrap()
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::undirected(10, &edges).unwrap()
    }

    #[test]
    fn from_edges_validation() {
        let i_tree = Graph::undirected(2, &[(0, 1)]).unwrap();
        assert_eq!(i_tree.edge_count(), 1);
        assert!(matches!(
            Graph::undirected(2, &[(0, 0)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(Graph::undirected(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::undirected(2, &[(0, 2)]).is_err());
        let p = petersen();
        assert!(p.is_cubic() && p.is_connected());
        assert_eq!(p.edge_count(), 15);
    }

    #[test]
    fn bipartite_and_girth() {
        let p = petersen();
        assert!(!p.is_bipartite());
        assert_eq!(p.girth(), Some(5));
        let e = Graph::undirected(2, &[(0, 1)]).unwrap();
        assert_eq!(
            e.bipartition(),
            Some(Bipartition {
                left: vec![0],
                right: vec![1]
            })
        );
        assert_eq!(e.girth(), None);
        let k4 = Graph::undirected(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.girth(), Some(3));
        assert_eq!(cycle(6).girth(), Some(6));
        assert_eq!(cycle(7).girth(), Some(7));
    }

    #[test]
    fn induced_subgraphs() {
        let p = petersen();
        let (empty, map) = p.induced_subgraph(&[]);
        assert_eq!((empty.order(), map.len()), (0, 0));
        let (outer, _) = p.induced_subgraph(&[0, 1, 2, 3, 4]);
        assert_eq!(outer, cycle(5));
        let all: Vec<usize> = (0..10).collect();
        assert_eq!(p.induced_subgraph(&all).0, p);
    }

    #[test]
    fn quotients() {
        let p = petersen();
        let singletons: Vec<Vec<usize>> = (0..10).map(|v| vec![v]).collect();
        assert_eq!(p.quotient(&singletons).unwrap().graph, p);

        let c6 = cycle(6);
        let q = c6
            .quotient(&[vec![0, 3], vec![1, 4], vec![2, 5]])
            .unwrap();
        assert_eq!(q.graph, cycle(3));
        assert!(q.inner_edges.iter().all(|&k| k == 0));

        let q = p
            .quotient(&[vec![0, 1, 2, 3, 4], vec![5, 6, 7, 8, 9]])
            .unwrap();
        assert_eq!(q.graph, Graph::undirected(2, &[(0, 1)]).unwrap());
        assert_eq!(q.inner_edges, vec![5, 5]);
        assert_eq!(q.multiplicity[&(0, 1)], 5);

        assert!(p.quotient(&[vec![0, 1]]).is_err());
        assert!(p.quotient(&[vec![0, 1], vec![1, 2, 3, 4, 5, 6, 7, 8, 9]]).is_err());
    }

    #[test]
    fn automorphism_check() {
        let c5 = cycle(5);
        let rot = Permutation::parse_cycles(5, "(0 1 2 3 4)").unwrap();
        assert!(c5.is_automorphism(&rot));
        let bad = Permutation::parse_cycles(5, "(0 1)").unwrap();
        assert!(!c5.is_automorphism(&bad));
        let colored = c5.clone().with_colors(vec![0, 1, 1, 1, 1]).unwrap();
        assert!(!colored.is_automorphism(&rot));
    }

    #[test]
    fn double_cover_of_petersen_is_bipartite_cubic() {
        let d = petersen().bipartite_double();
        assert_eq!(d.order(), 20);
        assert!(d.is_cubic() && d.is_connected() && d.is_bipartite());
    }
}
