//! Command-line front end. Every verb reads its input, calls one library
//! operation and prints the result; errors in the input data exit with
//! status 1 and a JSON object on stderr, malformed arguments with status 2.

use std::fmt::Display;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::json;

use treecode::barcode::{
    barcode_inversion_vector, permutation_type, standard_barcode, StrictBarcode,
};
use treecode::mergetree::{combinatorially_equivalent, elder_rule, standardize, MergeTree};
use treecode::partition::{chain_to_tree, enumerate_maximal_chains, tree_to_chain, MaximalChain};
use treecode::perm::{left_inversion_vector, Permutation};
use treecode::phylo::{
    count_phylo_classes, eta_brute_force, eta_lower_bound, h_delta, parse_newick, t_delta,
};
use treecode::realization::{
    count_combinatorial_merge_trees, enumerate_realizations, trn, trn_of_barcode,
};
use treecode::stats::{
    chi_square_uniform, expected_log_trn, histogram_csv, kth_moment, mean, pushforward_histogram,
    sample_barcodes, second_moment, trn_distribution, variance, BarcodeSampler,
};

#[derive(Parser)]
#[command(
    name = "treecode",
    version,
    about = "Merge trees, barcodes and tree realization numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Permutation type of a barcode (JSON)
    PermType(InputArg),
    /// Left inversion vector of a permutation or a barcode
    InvVector(PermOrBarcode),
    /// Tree realization number of a permutation or a barcode
    Trn(PermOrBarcode),
    /// Stream every merge tree realizing a barcode as newline-delimited JSON
    Enumerate(EnumerateArgs),
    /// Elder-rule barcode of a merge tree
    Elder(InputArg),
    /// Standard-form representative of a merge tree
    Standardize(InputArg),
    /// Whether two merge trees are combinatorially equivalent
    Equiv(EquivArgs),
    /// Maximal chains of the partition lattice
    Chains(ChainArgs),
    /// Exact distribution of realization numbers over S_n as CSV
    Dist(SizeArg),
    /// Exact moments of the realization number over S_n
    Moments(MomentArgs),
    /// Expected log realization number over S_n
    Explog(ExplogArgs),
    /// Draw random strict barcodes as newline-delimited JSON
    Sample(SampleArgs),
    /// Histogram of permutation types of random barcodes as CSV
    Hist(HistArgs),
    /// Phylogenetic trees and their relation to merge trees
    Phylo(PhyloArgs),
}

#[derive(Args)]
struct InputArg {
    /// Input file, `-` or absent for stdin
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["perm", "input"])))]
struct PermOrBarcode {
    /// Permutation as comma-separated 1-indexed images
    #[arg(long)]
    perm: Option<String>,
    /// Barcode JSON file, `-` for stdin
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["perm", "input"])))]
struct EnumerateArgs {
    /// Enumerate the standard barcode of this permutation
    #[arg(long)]
    perm: Option<String>,
    /// Barcode JSON file, `-` for stdin
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,
    /// Index of the first tree to emit
    #[arg(long, default_value = "0")]
    start: BigUint,
    /// Emit at most this many trees
    #[arg(long)]
    limit: Option<u64>,
}

#[derive(Args)]
struct EquivArgs {
    first: PathBuf,
    second: PathBuf,
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["count", "list", "to_tree", "from_tree"])))]
struct ChainArgs {
    /// Number of maximal chains of the lattice on {0,…,n}
    #[arg(long)]
    count: bool,
    /// Every maximal chain, separated by blank lines
    #[arg(long)]
    list: bool,
    /// Read a chain (one partition per line) and print its merge tree
    #[arg(long)]
    to_tree: bool,
    /// Read a merge tree and print the chain of its standard form
    #[arg(long)]
    from_tree: bool,
    #[arg(long, required_if_eq_any([("count", "true"), ("list", "true")]))]
    n: Option<usize>,
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct SizeArg {
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct MomentArgs {
    #[arg(long)]
    n: usize,
    /// Report E(π_n^k) instead of the mean, second moment and variance
    #[arg(long)]
    k: Option<u32>,
}

#[derive(Args)]
struct ExplogArgs {
    #[arg(long)]
    n: usize,
    /// Print `n,expected_log` for every size from 1 to n
    #[arg(long)]
    curve: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    Conditioned,
    Separated,
}

#[derive(Args)]
struct SamplerArgs {
    #[arg(long, value_enum)]
    scheme: SchemeArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    trials: u64,
    #[arg(long)]
    n: usize,
    /// Birth interval as `LO,HI`
    #[arg(long, value_parser = parse_interval)]
    births: Option<(f64, f64)>,
    /// Death interval as `LO,HI`
    #[arg(long, value_parser = parse_interval)]
    deaths: Option<(f64, f64)>,
}

#[derive(Args)]
struct SampleArgs {
    #[command(flatten)]
    sampler: SamplerArgs,
}

#[derive(Args)]
struct HistArgs {
    #[command(flatten)]
    sampler: SamplerArgs,
    /// Worker threads; the output does not depend on this
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Print the chi-square test against the uniform distribution instead
    #[arg(long)]
    chi_square: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true)
    .args(["count", "eta", "eta_bound", "h_delta", "t_delta"])))]
struct PhyloArgs {
    /// Number of combinatorial phylogenetic trees with this many leaves
    #[arg(long, value_name = "LEAVES")]
    count: Option<usize>,
    /// Merge tree classes that forget to the given Newick tree
    #[arg(long)]
    eta: bool,
    /// Product of factorials lower bound for --eta
    #[arg(long)]
    eta_bound: bool,
    /// Newick metric tree to labelled merge tree at height Δ
    #[arg(long)]
    h_delta: bool,
    /// Merge tree JSON to Newick with root edge Δ
    #[arg(long)]
    t_delta: bool,
    #[arg(long, default_value_t = 0.0)]
    delta: f64,
    /// Newick text given inline instead of through --in
    #[arg(long)]
    newick: Option<String>,
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,
}

fn parse_interval(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s.split_once(',').ok_or("expected LO,HI")?;
    let lo = lo.trim().parse::<f64>().map_err(|e| e.to_string())?;
    let hi = hi.trim().parse::<f64>().map_err(|e| e.to_string())?;
    Ok((lo, hi))
}

/// A failure caused by the input data rather than the command line.
struct DataError {
    kind: &'static str,
    message: String,
}

fn fail(kind: &'static str) -> impl Fn(&dyn Display) -> DataError {
    move |e| DataError {
        kind,
        message: e.to_string(),
    }
}

macro_rules! data {
    ($kind:literal) => {
        |e| fail($kind)(&e)
    };
}

type Outcome = Result<(), DataError>;

fn read_input(path: Option<&PathBuf>) -> Result<String, DataError> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).map_err(|e| DataError {
                kind: "io",
                message: format!("{}: {e}", p.display()),
            })?;
        }
        _ => {
            io::stdin().read_to_string(&mut text).map_err(data!("io"))?;
        }
    }
    Ok(text)
}

fn read_json<T: serde::de::DeserializeOwned>(
    path: Option<&PathBuf>,
    kind: &'static str,
) -> Result<T, DataError> {
    serde_json::from_str(&read_input(path)?).map_err(|e| fail(kind)(&e))
}

fn read_tree(path: Option<&PathBuf>) -> Result<MergeTree, DataError> {
    read_json(path, "merge_tree")
}

fn read_barcode(path: Option<&PathBuf>) -> Result<StrictBarcode, DataError> {
    read_json(path, "barcode")
}

fn parse_perm(text: &str) -> Result<Permutation, DataError> {
    text.parse().map_err(data!("permutation"))
}

fn join<T: Display>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn json_line(out: &mut impl Write, value: &impl Serialize) -> Outcome {
    let line = serde_json::to_string(value).map_err(data!("serialize"))?;
    writeln!(out, "{line}").map_err(data!("io"))
}

fn sampler(args: &SamplerArgs) -> BarcodeSampler {
    let mut s = match args.scheme {
        SchemeArg::Conditioned => BarcodeSampler::conditioned(args.seed),
        SchemeArg::Separated => BarcodeSampler::separated(args.seed),
    };
    if let Some(b) = args.births {
        s.births = b;
    }
    if let Some(d) = args.deaths {
        s.deaths = d;
    }
    s
}

fn run(command: Command, out: &mut impl Write) -> Outcome {
    let io_err = data!("io");
    match command {
        Command::PermType(a) => {
            let b = read_barcode(a.input.as_ref())?;
            writeln!(out, "{}", join(permutation_type(&b).images())).map_err(io_err)
        }
        Command::InvVector(a) => {
            let v = match &a.perm {
                Some(p) => left_inversion_vector(&parse_perm(p)?),
                None => barcode_inversion_vector(&read_barcode(a.input.as_ref())?),
            };
            writeln!(out, "{}", join(v.entries())).map_err(io_err)
        }
        Command::Trn(a) => {
            let r = match &a.perm {
                Some(p) => trn(&parse_perm(p)?),
                None => trn_of_barcode(&read_barcode(a.input.as_ref())?),
            };
            writeln!(out, "{r}").map_err(io_err)
        }
        Command::Enumerate(a) => {
            let barcode = match &a.perm {
                Some(p) => standard_barcode(&parse_perm(p)?),
                None => read_barcode(a.input.as_ref())?,
            };
            let trees = enumerate_realizations(&barcode).starting_at(&a.start);
            let limit = a.limit.unwrap_or(u64::MAX);
            for tree in trees.take(limit.try_into().unwrap_or(usize::MAX)) {
                json_line(out, &tree)?;
            }
            Ok(())
        }
        Command::Elder(a) => json_line(out, &elder_rule(&read_tree(a.input.as_ref())?)),
        Command::Standardize(a) => json_line(out, &standardize(&read_tree(a.input.as_ref())?)),
        Command::Equiv(a) => {
            let first = read_tree(Some(&a.first))?;
            let second = read_tree(Some(&a.second))?;
            writeln!(out, "{}", combinatorially_equivalent(&first, &second)).map_err(io_err)
        }
        Command::Chains(a) => {
            if a.count {
                writeln!(out, "{}", count_combinatorial_merge_trees(a.n.unwrap())).map_err(io_err)
            } else if a.list {
                for (k, chain) in enumerate_maximal_chains(a.n.unwrap()).enumerate() {
                    if k > 0 {
                        writeln!(out).map_err(&io_err)?;
                    }
                    write!(out, "{chain}").map_err(&io_err)?;
                }
                Ok(())
            } else if a.to_tree {
                let chain: MaximalChain = read_input(a.input.as_ref())?
                    .parse()
                    .map_err(data!("chain"))?;
                json_line(out, &chain_to_tree(&chain))
            } else {
                let tree = standardize(&read_tree(a.input.as_ref())?);
                let chain = tree_to_chain(&tree).map_err(data!("chain"))?;
                write!(out, "{chain}").map_err(io_err)
            }
        }
        Command::Dist(a) => {
            let d = trn_distribution(a.n).map_err(data!("distribution"))?;
            write!(out, "{}", d.to_csv()).map_err(io_err)
        }
        Command::Moments(a) => {
            let value = match a.k {
                Some(k) => json!({ "n": a.n, "k": k, "moment": kth_moment(a.n, k).to_string() }),
                None => json!({
                    "n": a.n,
                    "mean": mean(a.n).to_string(),
                    "second_moment": second_moment(a.n).to_string(),
                    "variance": variance(a.n).to_string(),
                }),
            };
            json_line(out, &value)
        }
        Command::Explog(a) => {
            if a.curve {
                writeln!(out, "n,expected_log").map_err(&io_err)?;
                for n in 1..=a.n {
                    writeln!(out, "{n},{}", expected_log_trn(n)).map_err(&io_err)?;
                }
                Ok(())
            } else {
                writeln!(out, "{}", expected_log_trn(a.n)).map_err(io_err)
            }
        }
        Command::Sample(a) => {
            let s = sampler(&a.sampler);
            for b in sample_barcodes(&s, a.sampler.n, a.sampler.trials).map_err(data!("sampler"))? {
                json_line(out, &b)?;
            }
            Ok(())
        }
        Command::Hist(a) => {
            let s = sampler(&a.sampler);
            let hist = pushforward_histogram(&s, a.sampler.n, a.sampler.trials, a.jobs)
                .map_err(data!("sampler"))?;
            if a.chi_square {
                let t = chi_square_uniform(&hist, a.sampler.n);
                json_line(
                    out,
                    &json!({
                        "statistic": t.statistic,
                        "degrees_of_freedom": t.degrees_of_freedom,
                        "p_value": t.p_value,
                    }),
                )
            } else {
                write!(out, "{}", histogram_csv(&hist)).map_err(io_err)
            }
        }
        Command::Phylo(a) => phylo(a, out),
    }
}

fn phylo(a: PhyloArgs, out: &mut impl Write) -> Outcome {
    let io_err = data!("io");
    if let Some(leaves) = a.count {
        let c = count_phylo_classes(leaves).map_err(data!("phylo"))?;
        return writeln!(out, "{c}").map_err(io_err);
    }
    if a.t_delta {
        let tree = read_tree(a.input.as_ref())?;
        let t = t_delta(&tree, a.delta).map_err(data!("phylo"))?;
        return writeln!(out, "{}", t.to_newick()).map_err(io_err);
    }
    let text = match a.newick {
        Some(t) => t,
        None => read_input(a.input.as_ref())?,
    };
    let tree = parse_newick(&text).map_err(data!("newick"))?;
    if a.eta {
        let eta = eta_brute_force(&tree).map_err(data!("phylo"))?;
        writeln!(out, "{eta}").map_err(io_err)
    } else if a.eta_bound {
        writeln!(out, "{}", eta_lower_bound(&tree)).map_err(io_err)
    } else {
        let labelled = h_delta(&tree, a.delta).map_err(data!("phylo"))?;
        let labels: serde_json::Map<String, serde_json::Value> = labelled
            .labels
            .iter()
            .map(|(&v, label)| (labelled.tree.name(v).to_string(), label.clone().into()))
            .collect();
        json_line(out, &json!({ "tree": labelled.tree, "labels": labels }))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|()| out.flush().map_err(data!("io")));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        // a closed pipe just ends the stream
        Err(e) if e.kind == "io" && e.message.contains("Broken pipe") => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", json!({ "error": e.kind, "message": e.message }));
            ExitCode::from(1)
        }
    }
}
