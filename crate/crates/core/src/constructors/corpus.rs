use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::{io, Graph};

/// Result of reading a corpus directory. Files that fail to parse or
/// validate are listed in `errors`; the rest load normally.
#[derive(Debug, Default)]
pub struct Corpus {
    pub graphs: Vec<(String, Graph)>,
    pub errors: Vec<(String, Error)>,
}

const EXTENSIONS: [&str; 3] = ["g6", "txt", "edges"];

/// Loads every `.g6`, `.txt` and `.edges` file in `dir`, sorted by file
/// name. Ids are file stems; a `.g6` file holding several lines yields ids
/// `stem:1`, `stem:2`, ...
pub fn load_corpus(dir: &Path) -> Result<Corpus> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            p.is_file()
                && p.extension()
                    .and_then(|e| e.to_str())
                    .is_some_and(|e| EXTENSIONS.contains(&e))
        })
        .collect();
    files.sort();
    let mut corpus = Corpus::default();
    for path in files {
        let stem = path
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or("unnamed")
            .to_string();
        match read_file(&path) {
            Ok(graphs) => {
                let many = graphs.len() > 1;
                for (k, g) in graphs.into_iter().enumerate() {
                    let id = if many { format!("{stem}:{}", k + 1) } else { stem.clone() };
                    match validate(g) {
                        Ok(g) => corpus.graphs.push((id, g)),
                        Err(e) => corpus.errors.push((id, e)),
                    }
                }
            }
            Err(e) => corpus.errors.push((stem, e)),
        }
    }
    if corpus.graphs.is_empty() && corpus.errors.is_empty() {
        log::warn!("no graph files found in {}", dir.display());
    }
    Ok(corpus)
}

/// Reads one graph file in either supported format.
pub fn read_graph_file(path: &Path) -> Result<Graph> {
    let mut graphs = read_file(path)?;
    match graphs.len() {
        1 => Ok(graphs.remove(0)),
        0 => Err(Error::Parse(format!("{} holds no graph", path.display()))),
        k => Err(Error::Parse(format!("{} holds {k} graphs", path.display()))),
    }
}

fn read_file(path: &Path) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path)?;
    if path.extension().and_then(|e| e.to_str()) == Some("g6") {
        let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        if lines.is_empty() {
            return Err(Error::Parse("empty graph6 file".into()));
        }
        lines.into_iter().map(io::parse_graph6).collect()
    } else {
        Ok(vec![io::parse_auto(&text)?])
    }
}

fn validate(g: Graph) -> Result<Graph> {
    if !g.is_cubic() {
        return Err(Error::NotCubic);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(g)
}
