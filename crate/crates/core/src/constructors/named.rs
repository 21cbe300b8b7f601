use std::path::{Path, PathBuf};

use super::families::{cayley_cyclic, generalized_petersen};
use super::lcf::lcf;
use crate::error::{Error, Result};
use crate::graph::{io, Graph};

enum Recipe {
    Lcf(&'static str),
    Gp(usize, usize),
    Circulant(usize, &'static [i64]),
    Complete4,
    Coxeter,
    /// Read from `<data dir>/<id>.g6` or `<id>.txt` when supplied.
    Census,
}

pub struct Entry {
    pub id: &'static str,
    pub aliases: &'static [&'static str],
    pub vertices: usize,
    recipe: Recipe,
}

const REGISTRY: &[Entry] = &[
    Entry { id: "F004A", aliases: &["K4"], vertices: 4, recipe: Recipe::Complete4 },
    Entry { id: "F006A", aliases: &["K33", "K3,3"], vertices: 6, recipe: Recipe::Circulant(6, &[1, 3, 5]) },
    Entry { id: "F008A", aliases: &["Q3", "cube"], vertices: 8, recipe: Recipe::Gp(4, 1) },
    Entry { id: "F010A", aliases: &["Petersen"], vertices: 10, recipe: Recipe::Gp(5, 2) },
    Entry { id: "F014A", aliases: &["Heawood"], vertices: 14, recipe: Recipe::Lcf("[5,-5]^7") },
    Entry { id: "F016A", aliases: &["Mobius-Kantor", "MobiusKantor"], vertices: 16, recipe: Recipe::Lcf("[5,-5]^8") },
    Entry { id: "F018A", aliases: &["Pappus"], vertices: 18, recipe: Recipe::Lcf("[5,7,-7,7,-7,-5]^3") },
    Entry { id: "F020A", aliases: &["Dodecahedron"], vertices: 20, recipe: Recipe::Gp(10, 2) },
    Entry { id: "F020B", aliases: &["Desargues"], vertices: 20, recipe: Recipe::Gp(10, 3) },
    Entry { id: "F024A", aliases: &["Nauru"], vertices: 24, recipe: Recipe::Gp(12, 5) },
    Entry { id: "F026A", aliases: &[], vertices: 26, recipe: Recipe::Lcf("[-7,7]^13") },
    Entry { id: "F028A", aliases: &["Coxeter"], vertices: 28, recipe: Recipe::Coxeter },
    Entry { id: "F030A", aliases: &["Tutte-Coxeter", "Tutte8cage"], vertices: 30, recipe: Recipe::Lcf("[-13,-9,7,-7,9,13]^5") },
    Entry { id: "F032A", aliases: &["Dyck"], vertices: 32, recipe: Recipe::Lcf("[5,-5,13,-13]^8") },
    Entry { id: "F048A", aliases: &[], vertices: 48, recipe: Recipe::Gp(24, 5) },
    Entry { id: "F110A", aliases: &[], vertices: 110, recipe: Recipe::Census },
    Entry { id: "F182D", aliases: &[], vertices: 182, recipe: Recipe::Census },
    Entry { id: "F234B", aliases: &[], vertices: 234, recipe: Recipe::Census },
    Entry { id: "F506A", aliases: &[], vertices: 506, recipe: Recipe::Census },
];

/// Ids of graphs built in code, smallest first.
pub fn builtin_names() -> Vec<&'static str> {
    REGISTRY
        .iter()
        .filter(|e| !matches!(e.recipe, Recipe::Census))
        .map(|e| e.id)
        .collect()
}

/// Ids that are only available from user-supplied census files.
pub fn census_names() -> Vec<&'static str> {
    REGISTRY
        .iter()
        .filter(|e| matches!(e.recipe, Recipe::Census))
        .map(|e| e.id)
        .collect()
}

fn lookup(name: &str) -> Result<&'static Entry> {
    REGISTRY
        .iter()
        .find(|e| {
            e.id.eq_ignore_ascii_case(name) || e.aliases.iter().any(|a| a.eq_ignore_ascii_case(name))
        })
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// The canonical id (e.g. `"Petersen"` gives `"F010A"`).
pub fn canonical_id(name: &str) -> Result<&'static str> {
    Ok(lookup(name)?.id)
}

/// Default location of optional census files: `data/census` at the
/// workspace root.
pub fn default_census_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/census")
}

/// A named graph; census-only graphs are looked up in the default census
/// directory.
pub fn named(name: &str) -> Result<Graph> {
    named_in(name, &default_census_dir())
}

pub fn named_in(name: &str, census_dir: &Path) -> Result<Graph> {
    let entry = lookup(name)?;
    let g = match entry.recipe {
        Recipe::Lcf(code) => lcf(code)?,
        Recipe::Gp(n, k) => generalized_petersen(n, k)?,
        Recipe::Circulant(n, s) => cayley_cyclic(n, s)?.graph,
        Recipe::Complete4 => Graph::undirected(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])?,
        Recipe::Coxeter => coxeter()?,
        Recipe::Census => load_census_file(entry.id, census_dir)?,
    };
    if g.order() != entry.vertices || !g.is_cubic() || !g.is_connected() {
        return Err(Error::InvalidGraph(format!(
            "{} does not give a connected cubic graph on {} vertices",
            entry.id, entry.vertices
        )));
    }
    Ok(g)
}

fn load_census_file(id: &str, dir: &Path) -> Result<Graph> {
    for ext in ["g6", "txt", "edges"] {
        let path = dir.join(format!("{id}.{ext}"));
        if path.is_file() {
            return io::parse_auto(&std::fs::read_to_string(&path)?);
        }
    }
    Err(Error::DataMissing(id.to_string()))
}

/// Three-element subsets of a 7-set that are not lines of the Fano plane,
/// adjacent when disjoint.
fn coxeter() -> Result<Graph> {
    const LINES: [[usize; 3]; 7] = [
        [0, 1, 2],
        [0, 3, 4],
        [0, 5, 6],
        [1, 3, 5],
        [1, 4, 6],
        [2, 3, 6],
        [2, 4, 5],
    ];
    let mut triples: Vec<u8> = Vec::new();
    for a in 0..7 {
        for b in a + 1..7 {
            for c in b + 1..7 {
                if !LINES.contains(&[a, b, c]) {
                    triples.push((1 << a) | (1 << b) | (1 << c));
                }
            }
        }
    }
    let mut edges = Vec::new();
    for i in 0..triples.len() {
        for j in i + 1..triples.len() {
            if triples[i] & triples[j] == 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::undirected(triples.len(), &edges)
}
