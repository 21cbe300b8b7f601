mod common;

use std::fs;

use common::fixtures_dir;
use cubodd::autsearch::{are_isomorphic, automorphism_group};
use cubodd::constructors::{
    builtin_names, cayley_abelian, cayley_cyclic, cayley_dihedral, cayley_permutation_group,
    census_names, generalized_petersen, lcf, load_corpus, named, named_in, CayleyGraph, LcfCode,
};
use cubodd::graph::io::to_graph6;
use cubodd::{Error, PermGroup, Permutation};

fn iso(a: &cubodd::Graph, b: &cubodd::Graph) -> bool {
    are_isomorphic(a, b).unwrap().is_some()
}

fn check_regular(c: &CayleyGraph) {
    let group = PermGroup::new(c.regular_action.clone()).unwrap();
    assert_eq!(group.order(), c.graph.order() as u128);
    assert!(group.is_transitive());
    for x in &c.regular_action {
        assert!(c.graph.is_automorphism(x));
    }
    for x in group.elements(100_000).unwrap().filter(|x| !x.is_identity()) {
        assert!(x.is_semiregular().unwrap());
    }
}

#[test]
fn named_graphs_are_symmetric_cubic() {
    for name in builtin_names() {
        let g = named(name).unwrap();
        assert!(g.is_cubic() && g.is_connected(), "{name}");
        let order = automorphism_group(&g).unwrap().order();
        let n = g.order() as u128;
        assert!((1..=5).any(|s| order == 3 * (1 << (s - 1)) * n), "{name}");
    }
    assert!(matches!(named("F000X"), Err(Error::UnknownName(_))));
    assert_eq!(named("F010A").unwrap().order(), 10);
    assert!(named("F014A").unwrap().is_bipartite());
}

#[test]
fn families_match_named_graphs() {
    assert!(iso(&generalized_petersen(5, 2).unwrap(), &named("F010A").unwrap()));
    assert!(iso(&generalized_petersen(10, 3).unwrap(), &named("F020B").unwrap()));
    assert!(iso(&generalized_petersen(4, 1).unwrap(), &named("F008A").unwrap()));
    assert!(iso(&generalized_petersen(8, 3).unwrap(), &named("F016A").unwrap()));
    assert!(matches!(generalized_petersen(2, 1), Err(Error::InvalidParameters(_))));
    let heawood = lcf("[5,-5]^7").unwrap();
    assert_eq!(heawood.order(), 14);
    assert_eq!(automorphism_group(&heawood).unwrap().order(), 336);
    assert!(heawood.is_bipartite() && heawood.girth() == Some(6));
}

#[test]
fn lcf_codes() {
    assert!(lcf("[2,2]^3").is_err());
    assert!(lcf("[1]^6").is_err());
    let k4 = lcf("[-2,2]^2").unwrap();
    assert!(iso(&k4, &named("K4").unwrap()));
    let cube = lcf("[3,-3]^4").unwrap();
    assert!(iso(&cube, &named("F008A").unwrap()));
    let code: LcfCode = "[5,-5]^8".parse().unwrap();
    assert_eq!(code.vertex_count(), 16);
    assert_eq!(code.to_string(), "[5,-5]^8");
    assert!("[5,-5".parse::<LcfCode>().is_err());
}

#[test]
fn cayley_graphs() {
    let k4 = cayley_cyclic(4, &[1, 2, 3]).unwrap();
    assert!(iso(&k4.graph, &named("K4").unwrap()));
    check_regular(&k4);
    let q3 = cayley_abelian(&[2, 2, 2], &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
    assert!(iso(&q3.graph, &named("F008A").unwrap()));
    check_regular(&q3);
    let k33 = cayley_cyclic(6, &[1, 5, 3]).unwrap();
    assert!(iso(&k33.graph, &named("K3,3").unwrap()));
    check_regular(&k33);
    let heawood = cayley_dihedral(7, &[(0, 1), (1, 1), (3, 1)]).unwrap();
    assert!(iso(&heawood.graph, &named("F014A").unwrap()));
    check_regular(&heawood);
    let s4 = PermGroup::symmetric(4).unwrap();
    let nauru_like = cayley_permutation_group(
        &s4,
        &[
            Permutation::parse_cycles(4, "(0 1)").unwrap(),
            Permutation::parse_cycles(4, "(0 2)").unwrap(),
            Permutation::parse_cycles(4, "(0 3)").unwrap(),
        ],
    )
    .unwrap();
    assert!(iso(&nauru_like.graph, &named("F024A").unwrap()));
    check_regular(&nauru_like);
    assert!(cayley_cyclic(6, &[1, 2]).is_err());
    assert!(cayley_cyclic(6, &[0, 1, 5]).is_err());
}

#[test]
fn census_graphs_are_data_dependent() {
    let empty = tempfile::tempdir().unwrap();
    for name in census_names() {
        assert!(matches!(named_in(name, empty.path()), Err(Error::DataMissing(_))), "{name}");
    }
    // a supplied file is read and checked against the expected order
    let petersen = named("F010A").unwrap();
    fs::write(empty.path().join("F110A.g6"), to_graph6(&petersen).unwrap()).unwrap();
    assert!(matches!(named_in("F110A", empty.path()), Err(Error::InvalidGraph(_))));
}

#[test]
fn corpus_loading() {
    let corpus = load_corpus(&fixtures_dir()).unwrap();
    assert!(corpus.graphs.len() >= 8);
    assert!(corpus.errors.is_empty());
    let ids: Vec<&str> = corpus.graphs.iter().map(|(id, _)| id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);

    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("F010A.g6"), to_graph6(&named("F010A").unwrap()).unwrap()).unwrap();
    fs::write(dir.path().join("broken.g6"), "not a graph!\n").unwrap();
    fs::write(dir.path().join("path.edges"), "3 2\n0 1\n1 2\n").unwrap();
    fs::write(dir.path().join("notes.md"), "ignored").unwrap();
    let corpus = load_corpus(dir.path()).unwrap();
    assert_eq!(corpus.graphs.len(), 1);
    assert_eq!(corpus.graphs[0].0, "F010A");
    assert_eq!(corpus.errors.len(), 2);

    let empty = tempfile::tempdir().unwrap();
    let corpus = load_corpus(empty.path()).unwrap();
    assert!(corpus.graphs.is_empty() && corpus.errors.is_empty());
    assert!(load_corpus(&empty.path().join("missing")).is_err());
}
