//! `mcrd`: command-line front end for minimum red dominating sets.

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mcrd_core::text::{
    parse_graph, parse_scheme, write_bipartite, write_convex, write_scheme, GraphFile,
};
use mcrd_core::{
    analyze, attach_pendants, brute_force_mcrd_capped, enumerate_mcrd, gen_extremal,
    gen_random_connected_bipartite, gen_random_convex, intervals_from_adjacency,
    validate_connected, verify_pes, ConvexBipartiteGraph, ExtremalParams, LengthDistribution,
    OracleError, PesVerdict, RandomParams, ReductionError, VertexSet,
};

#[derive(Parser)]
#[command(
    name = "mcrd",
    version,
    about = "Minimum red dominating sets in convex bipartite graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the label and count of every X-vertex, in file order.
    Label { file: PathBuf },
    /// Print the minimum cardinality and the number of minimum sets.
    Count { file: PathBuf },
    /// Stream every minimum red dominating set, one per line.
    Enumerate {
        file: PathBuf,
        /// Print "sets=<n> calls=<m>" after the sets.
        #[arg(long)]
        stats: bool,
        /// Sort the sets lexicographically before printing.
        #[arg(long)]
        sort: bool,
    },
    /// Exhaustive search; works on any bipartite graph.
    Oracle {
        file: PathBuf,
        /// Largest number of X-vertices to accept.
        #[arg(long, default_value_t = mcrd_core::oracle::DEFAULT_MAX_X)]
        cap: usize,
    },
    /// Chained complete-bipartite family with (d-1)^k minimum sets.
    GenExtremal {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
        /// Use k separate K_{d,d} blocks (d^k minimum sets).
        #[arg(long)]
        disconnected: bool,
        #[arg(long, value_enum, default_value_t = Format::Convex)]
        format: Format,
    },
    /// Random convex graph in interval form, X unsorted.
    GenRandomConvex {
        #[arg(long)]
        nx: usize,
        #[arg(long)]
        ny: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Longest interval for uniform lengths (default n_y).
        #[arg(long, conflicts_with = "geometric")]
        max_len: Option<usize>,
        /// Geometric lengths with continuation probability NUM/DEN.
        #[arg(long, value_name = "NUM/DEN", value_parser = parse_ratio)]
        geometric: Option<(u32, u32)>,
    },
    /// Random connected bipartite graph in edge-list form.
    GenRandomBipartite {
        #[arg(long)]
        nx: usize,
        #[arg(long)]
        ny: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Probability of each edge beyond the spanning tree.
        #[arg(long, default_value_t = 0.3)]
        p: f64,
    },
    /// Attach a pendant to every Y-vertex; emit the new graph and its
    /// elimination scheme.
    Reduce {
        file: PathBuf,
        /// Write the padded graph here instead of stdout.
        #[arg(long)]
        graph_out: Option<PathBuf>,
        /// Write the scheme here instead of stdout.
        #[arg(long)]
        scheme_out: Option<PathBuf>,
    },
    /// Check a perfect edge elimination scheme.
    VerifyPes { graph: PathBuf, scheme: PathBuf },
    /// Structural diagnostics; fails when the graph is not convex.
    Validate { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Convex,
    Bipartite,
}

fn parse_ratio(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once('/').ok_or("expected NUM/DEN")?;
    let num = a.trim().parse().map_err(|e| format!("{e}"))?;
    let den = b.trim().parse().map_err(|e| format!("{e}"))?;
    Ok((num, den))
}

/// Failure carrying its exit status.
enum Failure {
    /// Unreadable or malformed input: 1.
    Input(String),
    /// Infeasible instance or negative verdict, already reported: 2.
    Negative(String),
    /// Size cap exceeded: 3.
    TooLarge(String),
    /// Output closed early; not an error.
    BrokenPipe,
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            Failure::BrokenPipe
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type Outcome = Result<(), Failure>;

fn input(msg: impl ToString) -> Failure {
    Failure::Input(msg.to_string())
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<GraphFile, Failure> {
    parse_graph(&read_text(path)?).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn read_convex(path: &Path) -> Result<ConvexBipartiteGraph, Failure> {
    read_graph(path)?
        .to_convex()
        .map_err(|e| input(format!("{}: {e}", path.display())))
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn label(out: &mut impl Write, file: &Path) -> Outcome {
    let g = read_convex(file)?;
    let (_, perm, t, _) = analyze(&g);
    let in_file_order = (1..=g.n_x()).map(|x| perm.new_of(x));
    writeln!(
        out,
        "label: {}",
        join(in_file_order.clone().map(|x| t.label(x)))
    )?;
    writeln!(out, "count: {}", join(in_file_order.map(|x| t.count(x))))?;
    Ok(())
}

fn count(out: &mut impl Write, file: &Path) -> Outcome {
    let g = read_convex(file)?;
    let (_, _, _, s) = analyze(&g);
    match s.k {
        Some(k) => writeln!(out, "k={k} total={}", s.total)?,
        None => {
            return Err(Failure::Negative(
                "infeasible: no red dominating set".into(),
            ))
        }
    }
    Ok(())
}

fn enumerate(out: &mut impl Write, file: &Path, stats: bool, sort: bool) -> Outcome {
    let g = read_convex(file)?;
    let (sorted, perm, t, _) = analyze(&g);
    let to_file =
        |s: &VertexSet| VertexSet::new(s.members().iter().map(|&x| perm.old_of(x)).collect());
    let mut io_error = None;
    let mut kept = Vec::new();
    let result = enumerate_mcrd(&sorted, &t, |s| {
        let s = to_file(s);
        if sort {
            kept.push(s);
        } else if io_error.is_none() {
            if let Err(e) = writeln!(out, "{s}") {
                io_error = Some(e);
            }
        }
    });
    if let Some(e) = io_error {
        return Err(e.into());
    }
    let st = result.map_err(|e| Failure::Negative(e.to_string()))?;
    kept.sort();
    for s in &kept {
        writeln!(out, "{s}")?;
    }
    if stats {
        writeln!(out, "sets={} calls={}", st.outputs, st.calls)?;
    }
    Ok(())
}

fn oracle(out: &mut impl Write, file: &Path, cap: usize) -> Outcome {
    let g = read_graph(file)?.to_general();
    let r = brute_force_mcrd_capped(&g, cap).map_err(|e| match e {
        OracleError::TooLarge { .. } => Failure::TooLarge(e.to_string()),
        OracleError::Infeasible => Failure::Negative(e.to_string()),
        OracleError::IndexOutOfRange { .. } => input(e),
    })?;
    writeln!(out, "k={} sets={}", r.k, r.sets.len())?;
    for s in &r.sets {
        writeln!(out, "{s}")?;
    }
    Ok(())
}

fn reduce(
    out: &mut impl Write,
    file: &Path,
    graph_out: Option<&Path>,
    scheme_out: Option<&Path>,
) -> Outcome {
    let g = read_graph(file)?.to_general();
    let r = attach_pendants(&g).map_err(|e| match e {
        ReductionError::NotConnected => Failure::Negative(e.to_string()),
        other => input(other),
    })?;
    let graph_text = write_bipartite(&r.g_p);
    let scheme_text = write_scheme(&r.scheme);
    for (text, target) in [(graph_text, graph_out), (scheme_text, scheme_out)] {
        match target {
            Some(p) => fs::write(p, text).map_err(|e| input(format!("{}: {e}", p.display())))?,
            None => out.write_all(text.as_bytes())?,
        }
    }
    Ok(())
}

fn verify(out: &mut impl Write, graph: &Path, scheme: &Path) -> Outcome {
    let g = read_graph(graph)?.to_general();
    let s = parse_scheme(&read_text(scheme)?)
        .map_err(|e| input(format!("{}: {e}", scheme.display())))?;
    let line = match verify_pes(&g, &s) {
        Ok(PesVerdict::Valid) => {
            writeln!(out, "valid")?;
            return Ok(());
        }
        Ok(v) => v.to_string(),
        Err(ReductionError::BadScheme { step, reason }) => {
            format!("invalid: step {step}: {reason}")
        }
        Err(e) => format!("invalid: {e}"),
    };
    writeln!(out, "{line}")?;
    Err(Failure::Negative(String::new()))
}

fn validate(out: &mut impl Write, file: &Path) -> Outcome {
    let f = read_graph(file)?;
    let general = f.to_general();
    writeln!(
        out,
        "n_x={} n_y={} edges={} max_y_degree={}",
        general.n_x(),
        general.n_y(),
        general.edge_count(),
        general.max_y_degree()
    )?;
    writeln!(out, "connected: {}", yes_no(validate_connected(&general)))?;
    let convex = match &f {
        GraphFile::Convex(g) => Ok(g.clone()),
        GraphFile::Bipartite(g) => intervals_from_adjacency(g),
    };
    match convex {
        Ok(g) => {
            writeln!(out, "convex: yes")?;
            match g.first_lex_violation() {
                None => writeln!(out, "lex-convex: yes")?,
                Some(i) => writeln!(out, "lex-convex: no (x{} before x{})", i, i + 1)?,
            }
            Ok(())
        }
        Err(e) => {
            writeln!(out, "convex: no ({e})")?;
            Err(Failure::Negative(String::new()))
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn generate(out: &mut impl Write, command: &Command) -> Outcome {
    let text = match *command {
        Command::GenExtremal {
            d,
            k,
            disconnected,
            format,
        } => {
            let g = gen_extremal(ExtremalParams { d, k, disconnected }).map_err(input)?;
            match format {
                Format::Convex => write_convex(&g),
                Format::Bipartite => write_bipartite(&g.to_general()),
            }
        }
        Command::GenRandomConvex {
            nx,
            ny,
            seed,
            max_len,
            geometric,
        } => {
            let mut p = RandomParams::new(nx, ny, seed);
            if let Some(max) = max_len {
                p.lengths = LengthDistribution::Uniform { max };
            }
            if let Some((num, den)) = geometric {
                p.lengths = LengthDistribution::Geometric { num, den };
            }
            write_convex(&gen_random_convex(p).map_err(input)?)
        }
        Command::GenRandomBipartite { nx, ny, seed, p } => {
            let mut params = RandomParams::new(nx, ny, seed);
            params.edge_probability = p;
            write_bipartite(&gen_random_connected_bipartite(params).map_err(input)?)
        }
        _ => unreachable!("not a generator"),
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn run(command: &Command, out: &mut impl Write) -> Outcome {
    match command {
        Command::Label { file } => label(out, file),
        Command::Count { file } => count(out, file),
        Command::Enumerate { file, stats, sort } => enumerate(out, file, *stats, *sort),
        Command::Oracle { file, cap } => oracle(out, file, *cap),
        Command::Reduce {
            file,
            graph_out,
            scheme_out,
        } => reduce(out, file, graph_out.as_deref(), scheme_out.as_deref()),
        Command::VerifyPes { graph, scheme } => verify(out, graph, scheme),
        Command::Validate { file } => validate(out, file),
        Command::GenExtremal { .. }
        | Command::GenRandomConvex { .. }
        | Command::GenRandomBipartite { .. } => generate(out, command),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let mut out = BufWriter::new(io::stdout().lock());
    let mut result = run(&cli.command, &mut out);
    if result.is_ok() {
        result = out.flush().map_err(Failure::from);
    } else {
        let _ = out.flush();
    }
    match result {
        Ok(()) | Err(Failure::BrokenPipe) => ExitCode::SUCCESS,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Input(m) => (1, m),
                Failure::Negative(m) => (2, m),
                Failure::TooLarge(m) => (3, m),
                Failure::BrokenPipe => unreachable!(),
            };
            if !msg.is_empty() {
                eprintln!("mcrd: {msg}");
            }
            ExitCode::from(code)
        }
    }
}
