//! Building the target graph from command-line flags.

use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Args;
use sha2::{Digest, Sha256};

use packlab::graph::{graph_from_edge_list, Graph};
use packlab::hypercube::hypercube;
use packlab::product::{cartesian_product, chained_c5, direct_product};

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Edge-list file (`n m` header, then one `u v` edge per line)
    #[arg(long, value_name = "FILE")]
    pub graph: Option<PathBuf>,

    /// Hypercube of the given dimension
    #[arg(long, value_name = "N")]
    pub hypercube: Option<usize>,

    /// Product of two edge-list files: KIND is `cartesian` or `direct`
    #[arg(long, num_args = 3, value_names = ["KIND", "FILE1", "FILE2"])]
    pub product: Option<Vec<String>>,

    /// Row of 2K five-cycles bridged in a line
    #[arg(long = "chained-c5", value_name = "K")]
    pub chained_c5: Option<usize>,
}

pub struct BuiltGraph {
    pub graph: Graph,
    pub kind: String,
    pub params: String,
    /// Set when the graph is a hypercube, enabling binary-string
    /// certificate files.
    pub hypercube_dim: Option<usize>,
}

impl BuiltGraph {
    pub fn hash(&self) -> String {
        fingerprint(&self.graph)
    }
}

/// Stable fingerprint of a graph: SHA-256 over the canonical edge list.
pub fn fingerprint(g: &Graph) -> String {
    let mut hasher = Sha256::new();
    hasher.update(packlab::graph::graph_to_edge_list(g).as_bytes());
    let digest = hasher.finalize();
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

fn load_edge_list(path: &PathBuf) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read graph file {}", path.display()))?;
    let g = graph_from_edge_list(&text)
        .with_context(|| format!("cannot parse graph file {}", path.display()))?;
    Ok(g)
}

impl GraphSource {
    pub fn build(&self) -> Result<BuiltGraph> {
        if let Some(path) = &self.graph {
            let graph = load_edge_list(path)?;
            return Ok(BuiltGraph {
                graph,
                kind: "file".into(),
                params: path.display().to_string(),
                hypercube_dim: None,
            });
        }
        if let Some(n) = self.hypercube {
            let cube = hypercube(n).with_context(|| format!("hypercube dimension {n}"))?;
            return Ok(BuiltGraph {
                graph: cube.graph,
                kind: "hypercube".into(),
                params: format!("n={n}"),
                hypercube_dim: Some(n),
            });
        }
        if let Some(parts) = &self.product {
            let [kind, f1, f2] = parts.as_slice() else {
                bail!("--product needs KIND FILE1 FILE2");
            };
            let left = load_edge_list(&PathBuf::from(f1))?;
            let right = load_edge_list(&PathBuf::from(f2))?;
            let (label, product) = match kind.as_str() {
                "cartesian" => ("product-cartesian", cartesian_product(&left, &right)?),
                "direct" => ("product-direct", direct_product(&left, &right)?),
                other => bail!("unknown product kind `{other}` (use cartesian or direct)"),
            };
            return Ok(BuiltGraph {
                graph: product.graph,
                kind: label.into(),
                params: format!("{f1} x {f2}"),
                hypercube_dim: None,
            });
        }
        if let Some(k) = self.chained_c5 {
            let graph = chained_c5(k).with_context(|| format!("chained-c5 parameter {k}"))?;
            return Ok(BuiltGraph {
                graph,
                kind: "chained-c5".into(),
                params: format!("k={k}"),
                hypercube_dim: None,
            });
        }
        bail!("exactly one graph source is required");
    }
}
