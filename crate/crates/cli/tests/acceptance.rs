//! One PASS/FAIL line per acceptance criterion.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use cubodd::autsearch::{are_isomorphic, automorphism_group};
use cubodd::constructors::{default_census_dir, load_corpus, named, named_in, Corpus};
use cubodd::oddness::{cross_validate, predict_odd, OddnessOptions, OddnessReport};
use cubodd::orbital::{basic_orbital_graph, coset_action, is_orbital_odd, orbitals};
use cubodd::perm::{fingerprint, StructureLabel};
use cubodd::rigid::rigid_cells;
use cubodd::symclass::{girth_type_violation, stabilizer_candidates, type_label};
use cubodd::{Error, Graph, PermGroup, Permutation, TreeShape};
use rand::{seq::SliceRandom, Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/fixtures")
}

fn fixtures() -> Corpus {
    load_corpus(&fixtures_dir()).expect("fixture directory")
}

/// User-supplied census graphs of at most 512 vertices, if any.
fn census() -> Vec<(String, Graph)> {
    load_corpus(&default_census_dir())
        .map(|c| c.graphs.into_iter().filter(|(_, g)| g.order() <= 512).collect())
        .unwrap_or_default()
}

fn timed(name: &str, limit: Duration) -> Result<(OddnessReport, Graph, Duration), String> {
    let start = Instant::now();
    let g = named(name).map_err(|e| format!("{name}: {e}"))?;
    let r = cross_validate(&g, &OddnessOptions::default()).map_err(|e| format!("{name}: {e}"))?;
    let took = start.elapsed();
    ensure!(took <= limit, "{name} took {took:?}");
    Ok((r, g, took))
}

fn criterion_1() -> Outcome {
    let limit = Duration::from_secs(5);
    let aut_order = |g: &Graph| automorphism_group(g).map(|a| a.order()).unwrap_or(0);

    let (r, g, _) = timed("F010A", limit)?;
    ensure!(aut_order(&g) == 120 && r.s == 3, "Petersen order/s");
    ensure!(r.label.to_string() == "{2^1,3}", "Petersen type {}", r.label);
    ensure!(!r.bipartite && g.girth() == Some(5), "Petersen bipartite/girth");
    ensure!(r.direct.exists && r.predicted.exists && r.agree, "Petersen verdicts");

    let (r, g, _) = timed("F014A", limit)?;
    ensure!(aut_order(&g) == 336 && r.s == 4, "Heawood order/s");
    ensure!(r.label.to_string() == "{1,4^1}", "Heawood type {}", r.label);
    ensure!(r.bipartite && g.girth() == Some(6), "Heawood bipartite/girth");
    ensure!(r.direct.exists && r.predicted.exists && r.agree, "Heawood verdicts");

    let (r, _, _) = timed("K4", limit)?;
    ensure!(r.s == 2 && r.label.to_string() == "{1,2^1}" && r.n == 2, "K4 classification");
    let mc = r.m_cayley.as_ref().ok_or("K4 has no m-Cayley witness")?;
    ensure!((mc.k, mc.m) == (2, 1), "K4 witness k={} m={}", mc.k, mc.m);
    ensure!(r.direct.exists && r.predicted.exists && r.agree, "K4 verdicts");

    let (r, _, _) = timed("F008A", limit)?;
    ensure!(r.label.to_string() == "{1,2^1}" && r.n == 4, "cube classification");
    ensure!(r.m_cayley.is_none(), "cube has an order-8 semiregular element");
    ensure!(!r.direct.exists && !r.predicted.exists && r.agree, "cube verdicts");

    let (r, _, _) = timed("K3,3", limit)?;
    ensure!(r.n == 3 && r.direct.exists && r.predicted.exists && r.agree, "K3,3 verdicts");

    let (desargues, _, _) = timed("F020B", limit)?;
    let (pappus, _, _) = timed("F018A", limit)?;
    ensure!(desargues.agree && pappus.agree, "Desargues/Pappus disagree");
    ensure!(desargues.label.to_string() == "{2^1,2^2,3}", "Desargues type {}", desargues.label);
    ensure!(pappus.label.to_string() == "{1,2^1,2^2,3}", "Pappus type {}", pappus.label);
    Ok("Petersen, Heawood, K4, cube, K3,3, Desargues, Pappus".into())
}

fn batch_summary(dir: &std::path::Path) -> Result<serde_json::Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_cubodd"))
        .args(["batch", dir.to_str().unwrap(), "--jobs", "4"])
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&out.stdout);
    let last = text.lines().last().ok_or("batch printed nothing")?;
    let v: serde_json::Value = serde_json::from_str(last).map_err(|e| e.to_string())?;
    ensure!(out.status.code() == Some(0), "batch exit {:?}", out.status.code());
    Ok(v["summary"].clone())
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let s = batch_summary(&fixtures_dir())?;
    ensure!(s["disagree"] == 0 && s["error"] == 0, "fixture summary {s}");
    let mut note = format!("fixtures: {} agree", s["agree"]);
    let extra = census();
    if !extra.is_empty() {
        for (id, g) in &extra {
            let r = cross_validate(g, &OddnessOptions::default()).map_err(|e| format!("{id}: {e}"))?;
            ensure!(r.agree, "{id} disagrees");
        }
        note.push_str(&format!(", census: {} agree", extra.len()));
    }
    ensure!(start.elapsed() < Duration::from_secs(120), "took {:?}", start.elapsed());
    Ok(note)
}

fn criterion_3() -> Outcome {
    let mut checked = 0usize;
    let graphs: Vec<(String, Graph)> = fixtures().graphs.into_iter().chain(census()).collect();
    for (id, g) in &graphs {
        let aut = automorphism_group(g).map_err(|e| format!("{id}: {e}"))?;
        let t = type_label(g, &aut).map_err(|e| format!("{id}: {e}"))?;
        let elements = aut.elements(100_000).map_err(|e| format!("{id}: {e}"))?;
        for alpha in elements {
            if ![2, 3, 4, 6].contains(&alpha.order()) || alpha.fixed_points().is_empty() {
                continue;
            }
            let r = rigid_cells(g, &alpha, t.s, t.label).map_err(|e| format!("{id}: {e}"))?;
            ensure!(r.all_templates_legal == Some(true), "{id}: illegal cells for {alpha}");
            ensure!(
                r.cells.iter().all(|c| !matches!(c.shape, TreeShape::B | TreeShape::Other)),
                "{id}: B or OTHER cell for {alpha}"
            );
            checked += 1;
        }
    }
    Ok(format!("{checked} automorphisms, 0 violations"))
}

fn closure(gens: &[Permutation]) -> usize {
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
    seen.len()
}

fn random_perm(rng: &mut impl Rng, n: usize) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Permutation::from_images(v).unwrap()
}

fn swaps_parity(p: &Permutation) -> bool {
    let mut v = p.images();
    let mut odd = false;
    for i in 0..v.len() {
        while v[i] != i {
            let j = v[i];
            v.swap(i, j);
            odd = !odd;
        }
    }
    odd
}

fn criterion_4() -> Outcome {
    let mut rng = rand::rngs::StdRng::seed_from_u64(4);
    for _ in 0..100 {
        let n = rng.gen_range(1..=8);
        let gens: Vec<Permutation> = (0..rng.gen_range(1..=3)).map(|_| random_perm(&mut rng, n)).collect();
        let order = PermGroup::new(gens.clone()).map_err(|e| e.to_string())?.order();
        ensure!(order == closure(&gens) as u128, "order mismatch for {gens:?}");
    }
    for _ in 0..1000 {
        let n = rng.gen_range(1..=12);
        let (a, b) = (random_perm(&mut rng, n), random_perm(&mut rng, n));
        ensure!(a.then(&b).is_odd() == (a.is_odd() ^ b.is_odd()), "parity of {a} {b}");
        ensure!(a.is_odd() == swaps_parity(&a), "parity of {a}");
    }
    Ok("100 generator sets, 1000 pairs".into())
}

fn brute_count(g: &Graph) -> usize {
    fn go(g: &Graph, i: usize, image: &mut Vec<usize>, used: &mut Vec<bool>) -> usize {
        if i == g.order() {
            return 1;
        }
        let mut total = 0;
        for y in 0..g.order() {
            if !used[y] && (0..i).all(|j| g.has_edge(i, j) == g.has_edge(y, image[j])) {
                image[i] = y;
                used[y] = true;
                total += go(g, i + 1, image, used);
                used[y] = false;
            }
        }
        total
    }
    go(g, 0, &mut vec![0; g.order()], &mut vec![false; g.order()])
}

fn criterion_5() -> Outcome {
    let small: Vec<(String, Graph)> = fixtures().graphs.into_iter().filter(|(_, g)| g.order() <= 10).collect();
    ensure!(!small.is_empty(), "no small fixtures");
    for (id, g) in &small {
        let order = automorphism_group(g).map_err(|e| e.to_string())?.order();
        let brute = brute_count(g);
        ensure!(order == brute as u128, "{id}: {order} vs {brute}");
    }
    Ok(format!("{} fixtures", small.len()))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let p = |s: &str| Permutation::parse_cycles(5, s).unwrap();
    let a5 = PermGroup::new(vec![p("(0 1 2 3 4)"), p("(0 1 2)")]).map_err(|e| e.to_string())?;
    let h = coset_action(&a5, &[p("(0 1 2)"), p("(0 1)(3 4)")], 1000).map_err(|e| e.to_string())?.group;
    let all = orbitals(&h).map_err(|e| e.to_string())?;
    let mut lengths: Vec<usize> = all.iter().map(|o| o.suborbit_length()).collect();
    lengths.sort();
    ensure!(lengths == [1, 3, 6], "suborbits {lengths:?}");
    let three = all.iter().find(|o| o.suborbit_length() == 3).unwrap();
    let x = basic_orbital_graph(&h, three).map_err(|e| e.to_string())?;
    let petersen = named("F010A").map_err(|e| e.to_string())?;
    ensure!(are_isomorphic(&x, &petersen).map_err(|e| e.to_string())?.is_some(), "not Petersen");
    ensure!(is_orbital_odd(&h, 5000).map_err(|e| e.to_string())?.orbital_odd, "not orbital-odd");
    ensure!(start.elapsed() <= Duration::from_secs(10), "took {:?}", start.elapsed());
    Ok("A5 on 10 cosets: suborbits 1,3,6; Petersen; orbital-odd".into())
}

/// `<r, s | r^8 = s^2 = 1, s r s = r^m>` on its 16 normal forms.
fn from_presentation(m: usize) -> (PermGroup, usize) {
    let mul = |(i, j): (usize, usize), (k, l): (usize, usize)| {
        let k = if j == 1 { (m * k) % 8 } else { k };
        ((i + k) % 8, (j + l) % 2)
    };
    let elements: Vec<(usize, usize)> = (0..8).flat_map(|i| [(i, 0), (i, 1)]).collect();
    let right = |g| {
        let images = elements
            .iter()
            .map(|&x| {
                let (a, b) = mul(x, g);
                2 * a + b
            })
            .collect();
        Permutation::from_images(images).unwrap()
    };
    let involutions = elements.iter().filter(|&&x| x != (0, 0) && mul(x, x) == (0, 0)).count();
    (PermGroup::new(vec![right((1, 0)), right((0, 1))]).unwrap(), involutions)
}

fn criterion_7() -> Outcome {
    let (d16, dn) = from_presentation(7);
    let (qd16, qn) = from_presentation(3);
    ensure!((dn, qn) == (9, 5), "presentation involutions {dn} {qn}");
    let both = [StructureLabel::D16, StructureLabel::QD16];
    let fd = fingerprint(&d16, 100).map_err(|e| e.to_string())?;
    let fq = fingerprint(&qd16, 100).map_err(|e| e.to_string())?;
    ensure!((fd.involution_count, fq.involution_count) == (9, 5), "fingerprint involutions");
    ensure!(StructureLabel::identify(&fd, &both) == Some(StructureLabel::D16), "D16 misidentified");
    ensure!(StructureLabel::identify(&fq, &both) == Some(StructureLabel::QD16), "QD16 misidentified");
    let mut rows = 0;
    for (id, g) in fixtures().graphs.into_iter().chain(census()) {
        let aut = automorphism_group(&g).map_err(|e| e.to_string())?;
        let t = type_label(&g, &aut).map_err(|e| format!("{id}: {e}"))?;
        let (vertex, edges) = stabilizer_candidates(t.s).ok_or("bad s")?;
        ensure!(t.stabilizers.vertex == vertex && edges.contains(&t.stabilizers.edge), "{id}: off-table stabilizers");
        rows += 1;
    }
    Ok(format!("D16/QD16 involutions 9/5; {rows} edge stabilizers on their rows"))
}

fn criterion_8() -> Outcome {
    // the rows with no reachable instance are still implemented
    for label in ["{2^2}", "{4^2}"] {
        let l = label.parse().map_err(|e: Error| e.to_string())?;
        for n in 1..8 {
            let p = predict_odd(l, n, n % 2 == 0, false).map_err(|e| e.to_string())?;
            let expected = label == "{4^2}" && n % 2 == 1;
            ensure!(p.exists == expected, "{label} n={n}");
        }
        ensure!(girth_type_violation(&named("F030A").unwrap(), l), "girth rule for {label}");
    }
    let dir = default_census_dir();
    let mut ran = Vec::new();
    let mut skipped = Vec::new();
    for (id, expected) in [("F506A", false), ("F110A", true), ("F182D", true)] {
        match named_in(id, &dir) {
            Ok(g) => {
                let r = cross_validate(&g, &OddnessOptions::default()).map_err(|e| format!("{id}: {e}"))?;
                ensure!(r.label.to_string() == "{3}", "{id} type {}", r.label);
                ensure!(r.direct.exists == expected && r.agree, "{id} verdict");
                ran.push(id);
            }
            Err(Error::DataMissing(_)) => skipped.push(id),
            Err(e) => return Err(format!("{id}: {e}")),
        }
    }
    Ok(format!(
        "{{2^2}}/{{4^2}} rows not reproducible end-to-end; census checks ran for {ran:?}, skipped for {skipped:?} (no data)"
    ))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        (1, "named-instance reproduction", criterion_1),
        (2, "corpus cross-validation", criterion_2),
        (3, "rigid-cell legality", criterion_3),
        (4, "group-engine oracles", criterion_4),
        (5, "automorphism-search oracle", criterion_5),
        (6, "orbital suite", criterion_6),
        (7, "stabilizer discrimination", criterion_7),
        (8, "documented limits and census data", criterion_8),
    ];
    let mut failed = Vec::new();
    for (n, name, check) in criteria {
        match check() {
            Ok(note) => println!("PASS criterion {n}: {name} ({note})"),
            Err(why) => {
                println!("FAIL criterion {n}: {name} ({why})");
                failed.push(n);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
