//! Run reports: one JSON/text/CSV schema shared by every subcommand.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Solved or constructed-and-bounded at desk scale in this run.
    Computed,
    /// Backed by a certificate bundled or built in this run, one-sided.
    Constructed,
    /// Quoted from the literature; always cited.
    PaperConstant,
}

impl Provenance {
    pub fn label(self) -> &'static str {
        match self {
            Provenance::Computed => "computed",
            Provenance::Constructed => "constructed",
            Provenance::PaperConstant => "paper-constant",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphInfo {
    pub kind: String,
    pub params: String,
    pub hash: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub invariant: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    pub lower: usize,
    pub upper: usize,
    /// `exact`, `bounds-only` or `timeout`.
    pub status: String,
    /// Uniform provenance, or `interval` when the two bounds differ in
    /// origin (see `lower_provenance`/`upper_provenance`).
    pub provenance: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lower_provenance: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub upper_provenance: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub citation: Option<String>,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate_file: Option<String>,
    /// Known reference value or interval, for cross-checking.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reference: Option<String>,
}

impl ResultRow {
    pub fn new(invariant: &str, lower: usize, upper: usize, status: &str) -> Self {
        ResultRow {
            invariant: invariant.to_string(),
            n: None,
            lower,
            upper,
            status: status.to_string(),
            provenance: Provenance::Computed.label().to_string(),
            lower_provenance: None,
            upper_provenance: None,
            citation: None,
            elapsed_ms: 0,
            certificate_file: None,
            reference: None,
        }
    }

    pub fn with_provenance(mut self, p: Provenance) -> Self {
        self.provenance = p.label().to_string();
        self
    }

    pub fn with_split_provenance(mut self, lower: Provenance, upper: Provenance) -> Self {
        if lower == upper {
            self.provenance = lower.label().to_string();
        } else {
            self.provenance = "interval".to_string();
            self.lower_provenance = Some(lower.label().to_string());
            self.upper_provenance = Some(upper.label().to_string());
        }
        self
    }

    pub fn value_display(&self) -> String {
        if self.lower == self.upper {
            self.lower.to_string()
        } else {
            format!("{}-{}", self.lower, self.upper)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub graph: GraphInfo,
    pub results: Vec<ResultRow>,
    pub wall_ms: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl RunReport {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.render_csv(),
            Format::Text => self.render_text(),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::from(
            "invariant,n,lower,upper,status,provenance,citation,elapsed_ms,certificate_file\n",
        );
        for r in &self.results {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                r.invariant,
                r.n.map(|n| n.to_string()).unwrap_or_default(),
                r.lower,
                r.upper,
                r.status,
                r.provenance,
                csv_field(r.citation.as_deref().unwrap_or("")),
                r.elapsed_ms,
                csv_field(r.certificate_file.as_deref().unwrap_or("")),
            ));
        }
        out
    }

    fn render_text(&self) -> String {
        let mut out = format!(
            "graph: {} ({}) hash={}\n",
            self.graph.kind, self.graph.params, self.graph.hash
        );
        for r in &self.results {
            out.push_str(&format!(
                "{}{}: {} [{}; {}{}]{}\n",
                r.invariant,
                r.n.map(|n| format!("(Q{n})")).unwrap_or_default(),
                r.value_display(),
                r.status,
                r.provenance,
                r.citation
                    .as_deref()
                    .map(|c| format!("; {c}"))
                    .unwrap_or_default(),
                r.certificate_file
                    .as_deref()
                    .map(|f| format!(" certificate={f}"))
                    .unwrap_or_default(),
            ));
        }
        out.push_str(&format!("wall: {} ms\n", self.wall_ms));
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
