//! Command-line front end: compute invariants with budgets, verify
//! certificate files, emit constructions, reproduce the hypercube table,
//! and check the total-domination product formula.

mod report;
mod source;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use packlab::certio;
use packlab::constructions::{
    double_packing, hamming_coset_partition, hamming_perfect_code,
    hypercube_packing_construction, q8_seventeen_set,
};
use packlab::graph::Graph;
use packlab::hypercube::hypercube;
use packlab::injective::{find_partition_into_packings, verify_injective_coloring, PartitionSearch};
use packlab::product::direct_product;
use packlab::solver::{
    compute_invariant, verify_set, Budget, InvariantKind, SetKind, SolveStatus,
};
use packlab::PackingKind;

use report::{Format, GraphInfo, Provenance, ResultRow, RunReport};
use source::{BuiltGraph, GraphSource};

/// Exit status: 0 = exact/pass, 2 = inconclusive, 1 = error (including a
/// certificate that fails verification).
const EXIT_INCONCLUSIVE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "packlab",
    about = "Exact packing, domination and injective-coloring invariants with certificates",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum InvariantArg {
    Rho2,
    #[value(name = "rho-o")]
    RhoO,
    Gamma,
    #[value(name = "gamma-t")]
    GammaT,
    #[value(name = "chi-i")]
    ChiI,
}

impl From<InvariantArg> for InvariantKind {
    fn from(arg: InvariantArg) -> Self {
        match arg {
            InvariantArg::Rho2 => InvariantKind::TwoPacking,
            InvariantArg::RhoO => InvariantKind::OpenPacking,
            InvariantArg::Gamma => InvariantKind::Domination,
            InvariantArg::GammaT => InvariantKind::TotalDomination,
            InvariantArg::ChiI => InvariantKind::InjectiveChromatic,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SetKindArg {
    TwoPacking,
    OpenPacking,
    Dominating,
    TotalDominating,
    PerfectCode,
    InjectiveColoring,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an invariant exactly, with certificate output
    Compute {
        #[command(flatten)]
        source: GraphSource,
        /// Which invariant to compute
        #[arg(long, value_enum)]
        invariant: InvariantArg,
        /// Per-call time budget in milliseconds
        #[arg(long, default_value_t = 60_000)]
        timeout_ms: u64,
        /// Write the certificate here when the result is exact
        #[arg(long, value_name = "FILE")]
        certificate_out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Verify a certificate file against a graph
    Verify {
        #[command(flatten)]
        source: GraphSource,
        /// Certificate file: one vertex per line, or one class per line for
        /// injective colorings
        #[arg(long, value_name = "FILE")]
        set: PathBuf,
        /// What the certificate claims to be
        #[arg(long, value_enum)]
        kind: SetKindArg,
    },
    /// Emit a self-verified construction to a file
    Construct {
        #[command(subcommand)]
        target: ConstructTarget,
    },
    /// Reproduce the hypercube invariant table
    Table1 {
        /// Largest dimension to include
        #[arg(long, default_value_t = 9, value_parser = clap::value_parser!(u8).range(1..=9))]
        max_n: u8,
        /// Time budget per solved cell in milliseconds
        #[arg(long, default_value_t = 60_000)]
        timeout_ms: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Check the total-domination product formula on a direct product
    DirectProductCheck {
        /// Hypercube exponent: the left factor is the 2^K-cube
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        k: u8,
        /// Edge-list file for the right factor
        #[arg(long, value_name = "FILE")]
        factor: PathBuf,
        #[arg(long, default_value_t = 300_000)]
        timeout_ms: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
}

#[derive(Subcommand)]
enum ConstructTarget {
    /// Perfect code of length 2^K - 1
    HammingCode {
        k: usize,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
    /// Partition of the (2^K - 1)-cube into perfect-code cosets
    CosetPartition {
        k: usize,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
    /// Packing of the N-cube from the projected/doubled perfect code
    Theorem4 {
        n: usize,
        #[arg(value_parser = ["two-packing", "open-packing"])]
        kind: String,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
    /// The bundled 17-vertex two-packing of the 8-cube, doubled into the
    /// 9-cube
    #[command(name = "double-q8-t")]
    DoubleQ8T {
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
    /// Partition of the 6-cube into eight maximum two-packings
    Q6Partition {
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command_echo = std::env::args().collect::<Vec<_>>().join(" ");
    match run(cli, command_echo) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli, command_echo: String) -> Result<ExitCode> {
    match cli.command {
        Command::Compute {
            source,
            invariant,
            timeout_ms,
            certificate_out,
            format,
        } => cmd_compute(
            source,
            invariant.into(),
            timeout_ms,
            certificate_out,
            format.into(),
            command_echo,
        ),
        Command::Verify { source, set, kind } => cmd_verify(source, set, kind),
        Command::Construct { target } => cmd_construct(target),
        Command::Table1 {
            max_n,
            timeout_ms,
            format,
        } => cmd_table1(max_n as usize, timeout_ms, format.into(), command_echo),
        Command::DirectProductCheck {
            k,
            factor,
            timeout_ms,
            format,
        } => cmd_direct_product_check(k as u32, factor, timeout_ms, format.into(), command_echo),
    }
}

fn status_label(status: SolveStatus) -> &'static str {
    match status {
        SolveStatus::Exact => "exact",
        SolveStatus::BoundsOnly => "bounds-only",
        SolveStatus::Timeout => "timeout",
    }
}

fn cmd_compute(
    source: GraphSource,
    kind: InvariantKind,
    timeout_ms: u64,
    certificate_out: Option<PathBuf>,
    format: Format,
    command_echo: String,
) -> Result<ExitCode> {
    let started = Instant::now();
    let built = source.build()?;
    let budget = Budget::time_ms(timeout_ms);
    let result = compute_invariant(&built.graph, kind, &budget)?;

    let mut row = ResultRow::new(
        kind.name(),
        result.lower,
        result.upper,
        status_label(result.status),
    )
    .with_provenance(Provenance::Computed);
    row.elapsed_ms = result.elapsed_ms;

    if result.status == SolveStatus::Exact {
        if let Some(path) = &certificate_out {
            let cert = result
                .certificate
                .as_ref()
                .expect("exact implies certificate");
            let text = match cert {
                packlab::solver::Certificate::Set(set) => {
                    certio::format_vertex_set(set, built.hypercube_dim)
                }
                packlab::solver::Certificate::Classes(p) => {
                    certio::format_partition(p, built.hypercube_dim)
                }
            };
            std::fs::write(path, text)
                .with_context(|| format!("cannot write certificate to {}", path.display()))?;
            row.certificate_file = Some(path.display().to_string());
        }
    }

    let exact = result.status == SolveStatus::Exact;
    let report = RunReport {
        command: command_echo,
        graph: graph_info(&built),
        results: vec![row],
        wall_ms: started.elapsed().as_millis() as u64,
    };
    print!("{}", report.render(format));
    Ok(if exact {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_INCONCLUSIVE)
    })
}

fn graph_info(built: &BuiltGraph) -> GraphInfo {
    GraphInfo {
        kind: built.kind.clone(),
        params: built.params.clone(),
        hash: built.hash(),
    }
}

fn cmd_verify(source: GraphSource, set_path: PathBuf, kind: SetKindArg) -> Result<ExitCode> {
    let built = source.build()?;
    let text = std::fs::read_to_string(&set_path)
        .with_context(|| format!("cannot read certificate {}", set_path.display()))?;
    let n = built.graph.vertex_count();

    if matches!(kind, SetKindArg::InjectiveColoring) {
        let partition = certio::parse_partition(&text, n, built.hypercube_dim)?;
        let check = verify_injective_coloring(&built.graph, &partition)?;
        return match check {
            packlab::injective::ColoringCheck::Pass => {
                println!(
                    "PASS injective-coloring: {} classes over {} vertices",
                    partition.class_count(),
                    n
                );
                Ok(ExitCode::SUCCESS)
            }
            packlab::injective::ColoringCheck::Fail {
                class_index,
                violation,
            } => {
                println!("FAIL injective-coloring: class {class_index}: {violation}");
                Ok(ExitCode::from(1))
            }
        };
    }

    let set_kind = match kind {
        SetKindArg::TwoPacking => SetKind::TwoPacking,
        SetKindArg::OpenPacking => SetKind::OpenPacking,
        SetKindArg::Dominating => SetKind::Dominating,
        SetKindArg::TotalDominating => SetKind::TotalDominating,
        SetKindArg::PerfectCode => SetKind::PerfectCode,
        SetKindArg::InjectiveColoring => unreachable!(),
    };
    let set = certio::parse_vertex_set(&text, n, built.hypercube_dim)?;
    let check = verify_set(&built.graph, &set, set_kind)?;
    match check.violation() {
        None => {
            println!("PASS {}: {} vertices", set_kind.name(), set.len());
            Ok(ExitCode::SUCCESS)
        }
        Some(violation) => {
            println!("FAIL {}: {violation}", set_kind.name());
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_construct(target: ConstructTarget) -> Result<ExitCode> {
    let (path, text, summary) = match target {
        ConstructTarget::HammingCode { k, out } => {
            let code = hamming_perfect_code(k)?;
            let n = (1 << k) - 1;
            let text = certio::format_vertex_set(&code, Some(n));
            (
                out,
                text,
                format!("perfect code: {} words of length {n}", code.len()),
            )
        }
        ConstructTarget::CosetPartition { k, out } => {
            let partition = hamming_coset_partition(k)?;
            let n = (1 << k) - 1;
            let text = certio::format_partition(&partition, Some(n));
            (
                out,
                text,
                format!(
                    "coset partition: {} classes of {}",
                    partition.class_count(),
                    partition.classes()[0].len()
                ),
            )
        }
        ConstructTarget::Theorem4 { n, kind, out } => {
            let packing_kind = if kind == "two-packing" {
                PackingKind::TwoPacking
            } else {
                PackingKind::OpenPacking
            };
            let set = hypercube_packing_construction(n, packing_kind)?;
            let text = certio::format_vertex_set(&set, Some(n));
            (
                out,
                text,
                format!("{kind} of the {n}-cube: {} vertices", set.len()),
            )
        }
        ConstructTarget::DoubleQ8T { out } => {
            let q8 = hypercube(8).expect("buildable").graph;
            let doubled = double_packing(&q8, &q8_seventeen_set())?;
            let text = certio::format_vertex_set(&doubled, Some(9));
            (
                out,
                text,
                format!("open packing of the 9-cube: {} vertices", doubled.len()),
            )
        }
        ConstructTarget::Q6Partition { out } => {
            let q6 = hypercube(6).expect("buildable").graph;
            let search =
                find_partition_into_packings(&q6, PackingKind::TwoPacking, 8, &Budget::UNLIMITED)?;
            let PartitionSearch::Found(partition) = search else {
                bail!("partition search did not complete");
            };
            let text = certio::format_partition(&partition, Some(6));
            (
                out,
                text,
                format!(
                    "partition of the 6-cube: {} two-packings of 8",
                    partition.class_count()
                ),
            )
        }
    };
    std::fs::write(&path, text)
        .with_context(|| format!("cannot write construction to {}", path.display()))?;
    println!("wrote {}: {summary}", path.display());
    Ok(ExitCode::SUCCESS)
}

fn cmd_table1(
    max_n: usize,
    timeout_ms: u64,
    format: Format,
    command_echo: String,
) -> Result<ExitCode> {
    let started = Instant::now();
    let budget = Budget::time_ms(timeout_ms);

    let cells: Vec<(InvariantKind, usize)> = table::TABLE_ROWS
        .iter()
        .flat_map(|&kind| (1..=max_n).map(move |n| (kind, n)))
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(worker_count(cells.len()))
        .build()
        .context("cannot build worker pool")?;
    let computed: Vec<table::Cell> = pool.install(|| {
        use rayon::prelude::*;
        cells
            .par_iter()
            .map(|&(kind, n)| table::table_cell(kind, n, &budget))
            .collect()
    });

    let mismatch = computed.iter().any(|c| c.mismatch);
    let report = RunReport {
        command: command_echo,
        graph: GraphInfo {
            kind: "hypercube-family".into(),
            params: format!("n=1..{max_n}"),
            hash: String::new(),
        },
        results: computed.into_iter().map(|c| c.row).collect(),
        wall_ms: started.elapsed().as_millis() as u64,
    };

    match format {
        Format::Text => print!("{}", render_table_grid(&report, max_n)),
        other => print!("{}", report.render(other)),
    }
    if mismatch {
        eprintln!("error: computed bounds contradict stored reference values");
        return Ok(ExitCode::from(EXIT_INCONCLUSIVE));
    }
    Ok(ExitCode::SUCCESS)
}

fn worker_count(cells: usize) -> usize {
    let available = std::thread::available_parallelism().map_or(1, |p| p.get());
    let cap = std::env::var("PACKLAB_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&v| v > 0)
        .unwrap_or(available);
    cap.min(cells.max(1))
}

/// Text rendering as a grid, one row per invariant, annotated with
/// provenance marks.
fn render_table_grid(report: &RunReport, max_n: usize) -> String {
    let mut out = String::new();
    out.push_str("n       ");
    for n in 1..=max_n {
        out.push_str(&format!("{n:>8}"));
    }
    out.push('\n');
    for kind in table::TABLE_ROWS {
        out.push_str(&format!("{:<8}", kind.name()));
        for n in 1..=max_n {
            let row = report
                .results
                .iter()
                .find(|r| r.invariant == kind.name() && r.n == Some(n))
                .expect("cell present");
            let mark = match row.provenance.as_str() {
                "computed" => "",
                "paper-constant" => "\"",
                _ => "*",
            };
            out.push_str(&format!("{:>8}", format!("{}{mark}", row.value_display())));
        }
        out.push('\n');
    }
    out.push_str("legend: \" literature constant, * certified bound(s); bare = computed\n");
    out.push_str(&format!("wall: {} ms\n", report.wall_ms));
    out
}

fn cmd_direct_product_check(
    k: u32,
    factor_path: PathBuf,
    timeout_ms: u64,
    format: Format,
    command_echo: String,
) -> Result<ExitCode> {
    let started = Instant::now();
    let text = std::fs::read_to_string(&factor_path)
        .with_context(|| format!("cannot read factor file {}", factor_path.display()))?;
    let factor: Graph = packlab::graph::graph_from_edge_list(&text)?;
    if factor.has_isolated_vertex() {
        bail!("the factor graph has an isolated vertex; total domination is undefined");
    }

    let cube_dim = 1usize << k;
    let cube = hypercube(cube_dim).expect("dimension in range").graph;
    let product = direct_product(&cube, &factor)?;
    let budget = Budget::time_ms(timeout_ms);

    let factor_result = compute_invariant(&factor, InvariantKind::TotalDomination, &budget)?;
    let product_result =
        compute_invariant(&product.graph, InvariantKind::TotalDomination, &budget)?;

    let mut rows = Vec::new();
    let mut row = ResultRow::new(
        "gamma-t(factor)",
        factor_result.lower,
        factor_result.upper,
        status_label(factor_result.status),
    );
    row.elapsed_ms = factor_result.elapsed_ms;
    rows.push(row);
    let mut row = ResultRow::new(
        "gamma-t(product)",
        product_result.lower,
        product_result.upper,
        status_label(product_result.status),
    );
    row.elapsed_ms = product_result.elapsed_ms;
    rows.push(row);

    let multiplier = 1usize << (cube_dim - k as usize);
    if let Some(f) = factor_result.value() {
        let expected = multiplier * f;
        let mut row = ResultRow::new("formula", expected, expected, "exact")
            .with_provenance(Provenance::Computed);
        row.citation = Some(format!("2^(2^k - k) * gamma-t(factor) with k={k}"));
        rows.push(row);
    }
    let verdict = match (factor_result.value(), product_result.value()) {
        (Some(f), Some(p)) => Some(p == multiplier * f),
        _ => None,
    };

    let report = RunReport {
        command: command_echo,
        graph: GraphInfo {
            kind: "product-direct".into(),
            params: format!("Q{cube_dim} x {}", factor_path.display()),
            hash: source::fingerprint(&product.graph),
        },
        results: rows,
        wall_ms: started.elapsed().as_millis() as u64,
    };
    print!("{}", report.render(format));

    match verdict {
        Some(true) => {
            println!(
                "formula holds: gamma-t(product) = {} = 2^(2^k-k) * gamma-t(factor)",
                product_result.value().expect("checked")
            );
            Ok(ExitCode::SUCCESS)
        }
        Some(false) => {
            eprintln!("error: formula violated");
            Ok(ExitCode::from(1))
        }
        None => {
            println!("inconclusive: a side timed out");
            Ok(ExitCode::from(EXIT_INCONCLUSIVE))
        }
    }
}
