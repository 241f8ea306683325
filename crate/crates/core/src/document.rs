//! Text interchange format for complexes.
//!
//! ```json
//! {
//!   "format_version": "1",
//!   "n": 4,
//!   "d": 2,
//!   "facets": [
//!     [1,2,3]
//!   ]
//! }
//! ```
//!
//! Vertices are 1-based. Serialization is canonical: each facet ascending,
//! facets in lexicographic order, fixed key order and layout.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::combinatorics::Simplex;
use crate::complex::{Complex, ComplexWarning};
use crate::error::{Error, Result};
use crate::generators::GenSpec;

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genspec: Option<GenSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl Metadata {
    fn is_empty(&self) -> bool {
        self.name.is_none() && self.genspec.is_none() && self.seed.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub format_version: String,
    pub n: usize,
    pub d: usize,
    pub facets: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

/// A parsed document: the validated complex plus whatever came with it.
#[derive(Debug, Clone)]
pub struct Parsed {
    pub complex: Complex,
    pub metadata: Option<Metadata>,
    pub warnings: Vec<ComplexWarning>,
}

pub fn parse_complex(text: &str) -> Result<Parsed> {
    let doc: ComplexDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if doc.format_version != FORMAT_VERSION {
        return Err(Error::Parameter(format!(
            "unsupported format_version {:?}, expected {FORMAT_VERSION:?}",
            doc.format_version
        )));
    }
    let facets = doc
        .facets
        .into_iter()
        .enumerate()
        .map(|(i, f)| Simplex::new(f).map_err(|e| e.with_context(format!("facet #{i}"))))
        .collect::<Result<Vec<_>>>()?;
    let (complex, warnings) = Complex::with_warnings(doc.n, doc.d, facets)
        .map_err(|e| e.with_context("document constraints"))?;
    Ok(Parsed { complex, metadata: doc.metadata, warnings })
}

/// Canonical facet list: ascending vertices, lexicographic order.
pub fn canonical_facets(x: &Complex) -> Vec<Vec<usize>> {
    let mut facets: Vec<Vec<usize>> = x.facets().map(Vec::from).collect();
    facets.sort_unstable();
    facets
}

pub fn serialize_complex(x: &Complex, metadata: Option<&Metadata>) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"format_version\": \"{FORMAT_VERSION}\",");
    let _ = writeln!(out, "  \"n\": {},", x.n());
    let _ = writeln!(out, "  \"d\": {},", x.d());
    let facets = canonical_facets(x);
    if facets.is_empty() {
        out.push_str("  \"facets\": []");
    } else {
        out.push_str("  \"facets\": [\n");
        for (i, f) in facets.iter().enumerate() {
            let body: Vec<String> = f.iter().map(ToString::to_string).collect();
            let sep = if i + 1 < facets.len() { "," } else { "" };
            let _ = writeln!(out, "    [{}]{sep}", body.join(","));
        }
        out.push_str("  ]");
    }
    match metadata.filter(|m| !m.is_empty()) {
        Some(m) => {
            let meta = serde_json::to_string(m).expect("metadata serializes");
            let _ = write!(out, ",\n  \"metadata\": {meta}\n}}\n");
        }
        None => out.push_str("\n}\n"),
    }
    out
}
