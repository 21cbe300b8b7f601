use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::{PermGroup, Permutation, DEFAULT_ENUMERATION_BOUND};

/// `GP(n, k)`: outer cycle `0..n`, inner vertices `n + i` joined to
/// `n + (i + k) mod n`, spokes `i ~ n + i`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(Error::InvalidParameters(format!(
            "GP({n},{k}) needs n >= 3 and 1 <= k < n/2"
        )));
    }
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, n + i));
        edges.push((n + i, n + (i + k) % n));
    }
    Graph::undirected(2 * n, &edges)
}

/// A Cayley graph together with the right-regular action of its group.
#[derive(Debug, Clone)]
pub struct CayleyGraph {
    pub graph: Graph,
    /// For each group generator, the permutation `x -> g x` of the vertex
    /// set. Left translations commute with the right multiplication that
    /// defines adjacency, so they are automorphisms.
    pub regular_action: Vec<Permutation>,
}

/// `Cay(G, S)` for `G` given by its elements `0..order`, a multiplication
/// table function, and `S` a set of elements.
fn cayley_from_table(
    order: usize,
    mul: impl Fn(usize, usize) -> usize,
    identity: usize,
    connection: &[usize],
    group_generators: &[usize],
) -> Result<CayleyGraph> {
    let mut s: Vec<usize> = connection.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.contains(&identity) {
        return Err(Error::InvalidParameters("connection set contains the identity".into()));
    }
    if let Some(&x) = s.iter().find(|&&x| x >= order) {
        return Err(Error::InvalidParameters(format!("element {x} is not in the group")));
    }
    let inverse = |x: usize| (0..order).find(|&y| mul(x, y) == identity);
    for &x in &s {
        let inv = inverse(x).ok_or_else(|| Error::InvalidParameters("not a group".into()))?;
        if s.binary_search(&inv).is_err() {
            return Err(Error::InvalidParameters(format!(
                "connection set is not closed under inverses ({x})"
            )));
        }
    }
    let mut edges = Vec::new();
    for x in 0..order {
        for &g in &s {
            let y = mul(x, g);
            if x < y {
                edges.push((x, y));
            }
        }
    }
    let graph = Graph::undirected(order, &edges)?;
    let regular_action = group_generators
        .iter()
        .map(|&g| Permutation::from_images((0..order).map(|x| mul(g, x)).collect()))
        .collect::<Result<Vec<_>>>()?;
    Ok(CayleyGraph {
        graph,
        regular_action,
    })
}

/// `Cay(Z_n, S)`.
pub fn cayley_cyclic(n: usize, connection: &[i64]) -> Result<CayleyGraph> {
    if n == 0 {
        return Err(Error::InvalidParameters("Z_0".into()));
    }
    let s: Vec<usize> = connection
        .iter()
        .map(|&x| x.rem_euclid(n as i64) as usize)
        .collect();
    cayley_from_table(n, |a, b| (a + b) % n, 0, &s, &[1 % n])
}

/// `Cay(Z_{m_1} x ... x Z_{m_r}, S)`; elements are coordinate vectors,
/// numbered in mixed radix with the last coordinate fastest.
pub fn cayley_abelian(moduli: &[usize], connection: &[Vec<i64>]) -> Result<CayleyGraph> {
    if moduli.is_empty() || moduli.contains(&0) {
        return Err(Error::InvalidParameters("moduli must be positive".into()));
    }
    let order: usize = moduli.iter().product();
    let encode = |coords: &[usize]| coords.iter().zip(moduli).fold(0, |acc, (&c, &m)| acc * m + c);
    let decode = |mut x: usize| {
        let mut coords = vec![0; moduli.len()];
        for (i, &m) in moduli.iter().enumerate().rev() {
            coords[i] = x % m;
            x /= m;
        }
        coords
    };
    let mul = |a: usize, b: usize| {
        let (ca, cb) = (decode(a), decode(b));
        let sum: Vec<usize> = ca
            .iter()
            .zip(&cb)
            .zip(moduli)
            .map(|((x, y), m)| (x + y) % m)
            .collect();
        encode(&sum)
    };
    let mut s = Vec::with_capacity(connection.len());
    for v in connection {
        if v.len() != moduli.len() {
            return Err(Error::InvalidParameters("coordinate count mismatch".into()));
        }
        let coords: Vec<usize> = v
            .iter()
            .zip(moduli)
            .map(|(&c, &m)| c.rem_euclid(m as i64) as usize)
            .collect();
        s.push(encode(&coords));
    }
    let unit_vectors: Vec<usize> = (0..moduli.len())
        .map(|i| {
            let mut c = vec![0; moduli.len()];
            c[i] = 1 % moduli[i];
            encode(&c)
        })
        .collect();
    cayley_from_table(order, mul, 0, &s, &unit_vectors)
}

/// `Cay(D_{2n}, S)` with `D_{2n} = <r, t | r^n = t^2 = 1, t r t = r^-1>`.
/// Element `r^i t^j` is given as `(i, j)` and numbered `2i + j`.
pub fn cayley_dihedral(n: usize, connection: &[(i64, u8)]) -> Result<CayleyGraph> {
    if n < 2 {
        return Err(Error::InvalidParameters("dihedral group needs n >= 2".into()));
    }
    let mul = |a: usize, b: usize| {
        let (i, j) = (a / 2, a % 2);
        let (k, l) = (b / 2, b % 2);
        let k = if j == 1 { (n - k) % n } else { k };
        2 * ((i + k) % n) + (j + l) % 2
    };
    let s: Vec<usize> = connection
        .iter()
        .map(|&(i, j)| 2 * i.rem_euclid(n as i64) as usize + (j as usize % 2))
        .collect();
    cayley_from_table(2 * n, mul, 0, &s, &[2, 1])
}

/// `Cay(G, S)` for a permutation group `G`: vertices are the elements of `G`
/// in sorted order and `x ~ x s` (apply `x`, then `s`).
pub fn cayley_permutation_group(group: &PermGroup, connection: &[Permutation]) -> Result<CayleyGraph> {
    let elements: Vec<Permutation> = {
        let mut e: Vec<Permutation> = group.elements(DEFAULT_ENUMERATION_BOUND)?.collect();
        e.sort();
        e
    };
    let index: BTreeMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let find = |p: &Permutation| {
        index
            .get(p)
            .copied()
            .ok_or_else(|| Error::InvalidParameters(format!("{p} is not in the group")))
    };
    let s = connection.iter().map(find).collect::<Result<Vec<_>>>()?;
    let identity = find(&Permutation::identity(group.degree()))?;
    let gens = group.generators().iter().map(find).collect::<Result<Vec<_>>>()?;
    cayley_from_table(
        elements.len(),
        |a, b| index[&elements[a].then(&elements[b])],
        identity,
        &s,
        &gens,
    )
}
