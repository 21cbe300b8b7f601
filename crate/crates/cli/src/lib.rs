//! Documents emitted by the `cubodd` binary, and the pipelines behind them.

use std::path::Path;
use std::time::Instant;

use cubodd::autsearch::{automorphism_search, DEFAULT_VERTEX_BOUND};
use cubodd::constructors::load_corpus;
use cubodd::oddness::{report_from_parts, OddnessOptions, OddnessReport};
use cubodd::orbital::{coset_action, corollary_check, is_orbital_odd, CorollaryCheck, OrbitalDetail};
use cubodd::perm::{PermGroup, Permutation, DEFAULT_ENUMERATION_BOUND};
use cubodd::rigid::{rigid_sweep, RigidClassSummary};
use cubodd::symclass::{type_label, StabilizerStructure, TypeLabel};
use cubodd::{Error, Graph, Result};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy)]
pub struct AnalysisOptions {
    pub vertex_bound: usize,
    /// Larger automorphism groups are rejected as a resource bound.
    pub max_group_order: u128,
    pub skip_rigid: bool,
    /// Rigid cells are swept only when `|Aut|` is at most this.
    pub rigid_max_order: u128,
    pub always_m_cayley: bool,
    pub timing: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            vertex_bound: DEFAULT_VERTEX_BOUND,
            max_group_order: DEFAULT_ENUMERATION_BOUND,
            skip_rigid: false,
            rigid_max_order: 1000,
            always_m_cayley: false,
            timing: false,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    pub automorphisms_ms: f64,
    pub type_ms: f64,
    pub oddness_ms: f64,
    pub rigid_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisDocument {
    pub schema_version: u32,
    pub id: String,
    pub order: usize,
    pub girth: Option<usize>,
    pub bipartite: bool,
    pub aut_order: u128,
    pub s: u32,
    #[serde(rename = "type")]
    pub label: TypeLabel,
    pub stabilizers: StabilizerStructure,
    pub oddness: OddnessReport,
    /// `None` when the sweep was skipped.
    pub rigid: Option<Vec<RigidClassSummary>>,
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1000.0
}

pub fn analyze_graph(id: &str, g: &Graph, opts: &AnalysisOptions) -> Result<AnalysisDocument> {
    let t = Instant::now();
    let aut = automorphism_search(g, opts.vertex_bound)?.group;
    let aut_order = aut.try_order()?;
    if aut_order > opts.max_group_order {
        return Err(Error::BoundExceeded {
            order: aut_order,
            bound: opts.max_group_order,
        });
    }
    let automorphisms_ms = ms(t);
    let t = Instant::now();
    let typ = type_label(g, &aut)?;
    let type_ms = ms(t);
    let t = Instant::now();
    let oddness = report_from_parts(
        g,
        &aut,
        &typ,
        &OddnessOptions {
            vertex_bound: opts.vertex_bound,
            enumeration_bound: opts.max_group_order,
            always_m_cayley: opts.always_m_cayley,
        },
    )?;
    let oddness_ms = ms(t);
    let t = Instant::now();
    let rigid = if opts.skip_rigid || aut_order > opts.rigid_max_order {
        None
    } else {
        Some(rigid_sweep(g, &aut, typ.s, typ.label, opts.max_group_order)?)
    };
    let rigid_ms = ms(t);
    Ok(AnalysisDocument {
        schema_version: SCHEMA_VERSION,
        id: id.to_string(),
        order: g.order(),
        girth: g.girth(),
        bipartite: g.is_bipartite(),
        aut_order,
        s: typ.s,
        label: typ.label,
        stabilizers: typ.stabilizers,
        agree: oddness.agree,
        oddness,
        rigid,
        timing: opts.timing.then_some(Timing {
            automorphisms_ms,
            type_ms,
            oddness_ms,
            rigid_ms,
        }),
    })
}

/// Process exit status for an error: 2 for resource bounds, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_resource_bound() {
        2
    } else {
        1
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorLine {
    pub schema_version: u32,
    pub id: String,
    pub error: String,
    pub exit_code: i32,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum BatchLine {
    Analysis(Box<AnalysisDocument>),
    Error(ErrorLine),
}

impl BatchLine {
    pub fn id(&self) -> &str {
        match self {
            BatchLine::Analysis(d) => &d.id,
            BatchLine::Error(e) => &e.id,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct BatchSummary {
    pub agree: usize,
    pub disagree: usize,
    pub error: usize,
}

#[derive(Debug, Clone)]
pub struct BatchResult {
    pub lines: Vec<BatchLine>,
    pub summary: BatchSummary,
}

fn error_line(id: &str, e: &Error) -> BatchLine {
    BatchLine::Error(ErrorLine {
        schema_version: SCHEMA_VERSION,
        id: id.to_string(),
        error: e.to_string(),
        exit_code: exit_code(e),
    })
}

/// Analyzes every graph of a corpus directory on `jobs` threads. Lines come
/// back sorted by id whatever the thread count.
pub fn run_batch(dir: &Path, jobs: usize, opts: &AnalysisOptions) -> Result<BatchResult> {
    use rayon::prelude::*;
    let corpus = load_corpus(dir)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;
    let analyzed: Vec<BatchLine> = pool.install(|| {
        corpus
            .graphs
            .par_iter()
            .map(|(id, g)| match analyze_graph(id, g, opts) {
                Ok(doc) => BatchLine::Analysis(Box::new(doc)),
                Err(e) => error_line(id, &e),
            })
            .collect()
    });
    let mut lines = analyzed;
    lines.extend(corpus.errors.iter().map(|(id, e)| error_line(id, e)));
    lines.sort_by(|a, b| a.id().cmp(b.id()));
    let mut summary = BatchSummary::default();
    for line in &lines {
        match line {
            BatchLine::Analysis(d) if d.agree => summary.agree += 1,
            BatchLine::Analysis(_) => summary.disagree += 1,
            BatchLine::Error(_) => summary.error += 1,
        }
    }
    Ok(BatchResult { lines, summary })
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum CorollaryOutcome {
    Checked(CorollaryCheck),
    Unmet { error: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitalDocument {
    pub schema_version: u32,
    pub degree: usize,
    pub group_order: u128,
    pub suborbit_lengths: Vec<usize>,
    pub orbitals: Vec<OrbitalDetail>,
    pub orbital_odd: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corollary: Option<CorollaryOutcome>,
}

/// The orbital-odd verdict for `group` acting on the right cosets of the
/// subgroup generated by `subgroup`, or on its own points when `subgroup`
/// is `None`.
pub fn orbital_document(
    group: &[Permutation],
    subgroup: Option<&[Permutation]>,
    corollary: bool,
    opts: &AnalysisOptions,
) -> Result<OrbitalDocument> {
    let g = PermGroup::new(group.to_vec())?;
    let h = match subgroup {
        Some(s) => coset_action(&g, s, opts.max_group_order)?.group,
        None => g,
    };
    let report = is_orbital_odd(&h, opts.vertex_bound)?;
    let corollary = if corollary {
        Some(match corollary_check(&h, opts.vertex_bound) {
            Ok(c) => CorollaryOutcome::Checked(c),
            Err(e @ Error::Precondition(_)) => CorollaryOutcome::Unmet {
                error: e.to_string(),
            },
            Err(e) => return Err(e),
        })
    } else {
        None
    };
    Ok(OrbitalDocument {
        schema_version: SCHEMA_VERSION,
        degree: report.degree,
        group_order: h.try_order()?,
        suborbit_lengths: report.suborbit_lengths,
        orbitals: report.orbitals,
        orbital_odd: report.orbital_odd,
        corollary,
    })
}
