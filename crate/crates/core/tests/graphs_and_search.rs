mod common;

use common::{brute_force_automorphisms, fixtures, random_perm};
use cubodd::autsearch::{are_isomorphic, automorphism_group, automorphism_search};
use cubodd::constructors::{generalized_petersen, named};
use cubodd::graph::io::{parse_auto, parse_graph6, to_edge_list, to_graph6};
use cubodd::graph::classify_tree_shape;
use cubodd::{Error, Graph, Permutation, TreeShape};
use proptest::prelude::*;
use rand::SeedableRng;

fn graph_strategy(max_n: usize, directed: bool) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| if directed { u != v } else { u < v })
            .collect();
        let k = pairs.len();
        (Just(n), Just(pairs), prop::collection::vec(any::<bool>(), k))
            .prop_map(move |(n, pairs, keep)| {
                let edges: Vec<(usize, usize)> =
                    pairs.into_iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| e).collect();
                Graph::from_edges(n, &edges, directed).unwrap()
            })
    })
}

/// Shortest cycle by trying every start vertex and every simple path.
fn brute_girth(g: &Graph) -> Option<usize> {
    fn dfs(g: &Graph, start: usize, path: &mut Vec<usize>, best: &mut Option<usize>) {
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w == start && path.len() >= 3 {
                *best = Some(best.map_or(path.len(), |b| b.min(path.len())));
            } else if w > start && !path.contains(&w) {
                path.push(w);
                dfs(g, start, path, best);
                path.pop();
            }
        }
    }
    let mut best = None;
    for s in 0..g.order() {
        dfs(g, s, &mut vec![s], &mut best);
    }
    best
}

fn brute_has_odd_cycle(g: &Graph) -> bool {
    // closed walks of odd length up to n exist iff an odd cycle does
    let n = g.order();
    for s in 0..n {
        let mut reach = vec![false; n];
        reach[s] = true;
        for step in 1..=n {
            let mut next = vec![false; n];
            for v in (0..n).filter(|&v| reach[v]) {
                for &w in g.neighbors(v) {
                    next[w] = true;
                }
            }
            reach = next;
            if step % 2 == 1 && reach[s] {
                return true;
            }
        }
    }
    false
}

fn relabel(g: &Graph, p: &Permutation) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(u, v)| (p.apply(u), p.apply(v))).collect();
    Graph::from_edges(g.order(), &edges, g.is_directed()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn girth_and_bipartiteness_match_brute_force(g in graph_strategy(9, false)) {
        prop_assert_eq!(g.girth(), brute_girth(&g));
        prop_assert_eq!(g.is_bipartite(), !brute_has_odd_cycle(&g));
        if let Some(b) = g.bipartition() {
            for (u, v) in g.edges() {
                prop_assert_ne!(b.left.contains(&u), b.left.contains(&v));
            }
        }
    }

    #[test]
    fn automorphism_order_matches_brute_force(g in graph_strategy(7, false)) {
        let search = automorphism_search(&g, 100).unwrap();
        prop_assert_eq!(search.group.order(), brute_force_automorphisms(&g).len() as u128);
        for x in search.group.generators() {
            prop_assert!(g.is_automorphism(x));
        }
    }

    #[test]
    fn directed_automorphisms_match_brute_force(g in graph_strategy(6, true)) {
        let aut = automorphism_group(&g).unwrap();
        prop_assert_eq!(aut.order(), brute_force_automorphisms(&g).len() as u128);
    }

    #[test]
    fn colored_automorphisms_respect_colors(g in graph_strategy(7, false), seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let colors: Vec<u32> = (0..g.order()).map(|_| rng.gen_range(0..2)).collect();
        let g = g.with_colors(colors).unwrap();
        let aut = automorphism_group(&g).unwrap();
        prop_assert_eq!(aut.order(), brute_force_automorphisms(&g).len() as u128);
        for x in aut.generators() {
            for v in 0..g.order() {
                prop_assert_eq!(g.color(v), g.color(x.apply(v)));
            }
        }
    }

    #[test]
    fn isomorphism_under_relabeling(g in graph_strategy(9, false), seed in any::<u64>()) {
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let p = random_perm(&mut rng, g.order());
        let h = relabel(&g, &p);
        let iso = are_isomorphic(&g, &h).unwrap().expect("relabeled copy");
        prop_assert!(g.is_isomorphism_to(&h, &iso));
    }

    #[test]
    fn formats_round_trip(g in graph_strategy(12, false)) {
        prop_assert_eq!(&parse_graph6(&to_graph6(&g).unwrap()).unwrap(), &g);
        prop_assert_eq!(&parse_auto(&to_edge_list(&g)).unwrap(), &g);
        let singletons: Vec<Vec<usize>> = (0..g.order()).map(|v| vec![v]).collect();
        prop_assert_eq!(&g.quotient(&singletons).unwrap().graph, &g);
        let all: Vec<usize> = (0..g.order()).collect();
        prop_assert_eq!(&g.induced_subgraph(&all).0, &g);
    }

    #[test]
    fn tree_templates_are_exclusive(g in graph_strategy(10, false)) {
        // a graph matching a template must be a tree with that exact profile
        if let Ok(shape) = classify_tree_shape(&g) {
            let n = g.order();
            let expected_n = match shape {
                TreeShape::Vertex => Some(1),
                TreeShape::I => Some(2),
                TreeShape::Y => Some(4),
                TreeShape::H => Some(6),
                TreeShape::B => Some(8),
                TreeShape::A => Some(10),
                TreeShape::Other => None,
            };
            if let Some(m) = expected_n {
                prop_assert_eq!(n, m);
                prop_assert_eq!(g.edge_count(), n - 1);
            }
        }
    }
}

#[test]
fn small_fixtures_match_brute_force() {
    let mut checked = 0;
    for (id, g) in fixtures().into_iter().filter(|(_, g)| g.order() <= 10) {
        let aut = automorphism_group(&g).unwrap();
        assert_eq!(aut.order(), brute_force_automorphisms(&g).len() as u128, "{id}");
        checked += 1;
    }
    assert_eq!(checked, 4);
}

#[test]
fn every_generator_preserves_fixture_edges() {
    for (id, g) in fixtures() {
        let search = automorphism_search(&g, 5000).unwrap();
        assert!(search.group.generators().iter().all(|x| g.is_automorphism(x)), "{id}");
        assert_eq!(search.search_order, search.group.order(), "{id}");
    }
}

#[test]
fn graph_examples() {
    assert!(Graph::undirected(2, &[(0, 0)]).is_err());
    assert!(Graph::undirected(2, &[(0, 1), (1, 0)]).is_err());
    assert!(Graph::undirected(2, &[(0, 2)]).is_err());
    let petersen = generalized_petersen(5, 2).unwrap();
    assert!(petersen.is_cubic() && petersen.is_connected());
    assert_eq!(petersen.edge_count(), 15);
    assert_eq!(petersen.girth(), Some(5));
    assert!(!petersen.is_bipartite());
    let heawood = named("F014A").unwrap();
    let b = heawood.bipartition().unwrap();
    assert_eq!((b.left.len(), b.right.len()), (7, 7));
    assert_eq!(heawood.girth(), Some(6));
    assert_eq!(named("K4").unwrap().girth(), Some(3));
    let edge = Graph::undirected(2, &[(0, 1)]).unwrap();
    assert_eq!(classify_tree_shape(&edge).unwrap(), TreeShape::I);
    assert!(edge.is_bipartite());
    assert_eq!(petersen.induced_subgraph(&[]).0.order(), 0);
    let (outer, _) = petersen.induced_subgraph(&[0, 1, 2, 3, 4]);
    assert_eq!(automorphism_group(&outer).unwrap().order(), 10);
    assert_eq!(outer.girth(), Some(5));
}

#[test]
fn quotient_examples() {
    let c6 = Graph::undirected(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
    let q = c6.quotient(&[vec![0, 3], vec![1, 4], vec![2, 5]]).unwrap();
    assert_eq!(q.graph.edge_count(), 3);
    assert_eq!(q.graph.girth(), Some(3));
    let petersen = generalized_petersen(5, 2).unwrap();
    let q = petersen.quotient(&[vec![0, 1, 2, 3, 4], vec![5, 6, 7, 8, 9]]).unwrap();
    assert_eq!(q.graph.order(), 2);
    assert_eq!(q.graph.edge_count(), 1);
    assert!(q.has_inner_edge(0) && q.has_inner_edge(1));
    assert!(c6.quotient(&[vec![0, 1]]).is_err());
}

#[test]
fn tree_shape_examples() {
    let star = Graph::undirected(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    assert_eq!(classify_tree_shape(&star).unwrap(), TreeShape::Y);
    let mut a_edges = vec![(0, 1), (0, 2), (0, 3)];
    for (i, c) in [1, 2, 3].into_iter().enumerate() {
        a_edges.push((c, 4 + 2 * i));
        a_edges.push((c, 5 + 2 * i));
    }
    let a = Graph::undirected(10, &a_edges).unwrap();
    assert_eq!(classify_tree_shape(&a).unwrap(), TreeShape::A);
    let two = Graph::undirected(2, &[]).unwrap();
    assert_eq!(classify_tree_shape(&two), Err(Error::Disconnected));
}

#[test]
fn search_examples() {
    let c5 = Graph::undirected(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
    assert_eq!(automorphism_group(&c5).unwrap().order(), 10);
    let petersen = named("F010A").unwrap();
    assert_eq!(automorphism_group(&petersen).unwrap().order(), 120);
    assert_eq!(automorphism_group(&named("F018A").unwrap()).unwrap().order(), 216);
    assert_eq!(automorphism_group(&named("F014A").unwrap()).unwrap().order(), 336);
    assert!(are_isomorphic(&petersen, &petersen).unwrap().unwrap().is_identity());
    assert!(are_isomorphic(&petersen, &generalized_petersen(5, 2).unwrap()).unwrap().is_some());
    assert!(are_isomorphic(&petersen, &named("F014A").unwrap()).unwrap().is_none());
    assert!(matches!(
        automorphism_search(&petersen, 5),
        Err(Error::TooManyVertices { n: 10, bound: 5 })
    ));
}
