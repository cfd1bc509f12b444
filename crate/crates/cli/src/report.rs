//! Machine-readable reports. One invocation emits one JSON document with
//! a fixed schema tag; identical invocations with identical seeds emit
//! byte-identical documents, so timing lives on stderr, never in here.

use serde::Serialize;

pub const SCHEMA: &str = "arknit-report/1";

/// The top-level document. Exactly one of the section fields is filled by
/// each subcommand (`entries` for batches).
#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    /// The invocation, echoed word for word.
    pub command: String,
    /// Seed in hex, as accepted on the command line.
    pub seed: String,
    pub max_modules: usize,
    pub max_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub knit: Option<KnitSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mono: Option<MonoSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover: Option<CoverSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<Entry>>,
    /// True exactly when the exit code is 0.
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct KnitSection {
    /// "finite" or "exceeded-bound".
    pub verdict: String,
    /// Number of pairwise non-isomorphic indecomposables found.
    pub modules: usize,
    /// Dimension vectors in discovery order (finite verdicts only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim_vectors: Option<Vec<Vec<usize>>>,
    /// Connected components of the AR quiver (finite verdicts only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components: Option<usize>,
    /// Which bound tripped (exceeded verdicts only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct Count {
    /// "finite" or "exceeded-bound".
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct MonoSection {
    /// Indecomposables of the base algebra.
    pub base_indecomposables: usize,
    /// The two trivial families contribute twice the base count.
    pub trivial_objects: usize,
    /// Indecomposables of the monomorphism category: stable-quotient
    /// modules plus the trivial objects.
    pub mono: Count,
    /// Modules over the stable Auslander algebra (mono total minus the
    /// trivial objects), when finite.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stable_quotient_modules: Option<usize>,
    /// The full morphism category, on request.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub morphism: Option<Count>,
}

#[derive(Debug, Serialize)]
pub struct CoverSection {
    pub n: usize,
    pub t: usize,
    pub window: [i64; 2],
    pub checks: Vec<Check>,
}

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// What was checked, with counts; human-oriented but deterministic.
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct Entry {
    /// The manifest line, echoed.
    pub command: String,
    pub exit: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<Box<Report>>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}
