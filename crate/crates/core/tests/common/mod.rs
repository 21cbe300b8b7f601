#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use cubodd::constructors::load_corpus;
use cubodd::{Graph, Permutation};

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/fixtures")
}

pub fn fixtures() -> Vec<(String, Graph)> {
    let corpus = load_corpus(&fixtures_dir()).expect("fixture directory");
    assert!(corpus.errors.is_empty(), "{:?}", corpus.errors);
    corpus.graphs
}

/// All automorphisms by plain backtracking over bijections, checking every
/// pair of assigned vertices. Only usable on tiny graphs.
pub fn brute_force_automorphisms(g: &Graph) -> Vec<Permutation> {
    let n = g.order();
    let mut out = Vec::new();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(g: &Graph, i: usize, image: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        let n = g.order();
        if i == n {
            out.push(Permutation::from_images(image.clone()).unwrap());
            return;
        }
        for y in 0..n {
            if used[y] || g.degree(i) != g.degree(y) || g.color(i) != g.color(y) {
                continue;
            }
            let ok = (0..i).all(|j| {
                g.has_edge(i, j) == g.has_edge(y, image[j]) && g.has_edge(j, i) == g.has_edge(image[j], y)
            });
            if ok {
                image[i] = y;
                used[y] = true;
                go(g, i + 1, image, used, out);
                used[y] = false;
            }
        }
        image[i] = usize::MAX;
    }
    go(g, 0, &mut image, &mut used, &mut out);
    out
}

/// Closure of a generating set by repeated right multiplication.
pub fn naive_closure(gens: &[Permutation]) -> BTreeSet<Permutation> {
    let id = Permutation::identity(gens[0].degree());
    let mut seen = BTreeSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen
}

pub fn random_perm(rng: &mut impl rand::Rng, n: usize) -> Permutation {
    use rand::seq::SliceRandom;
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Permutation::from_images(v).unwrap()
}

/// Parity from an explicit transposition count, sorting by swaps.
pub fn parity_by_swaps(p: &Permutation) -> bool {
    let mut v = p.images();
    let mut swaps = 0;
    for i in 0..v.len() {
        while v[i] != i {
            let j = v[i];
            v.swap(i, j);
            swaps += 1;
        }
    }
    swaps % 2 == 1
}
