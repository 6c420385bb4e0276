//! `edgemagic`: verify, search and construct (super) edge-magic labelings.
//!
//! Exit codes: 0 when the requested property holds, 1 when it does not,
//! 2 on input errors.

mod cert;

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use edge_magic::decomp::{
    build_s2n, enumerate_2_decompositions, s2n_induced_labeling, verify_s2n_iso, Decomposition,
    DEFAULT_SPLIT_CAP,
};
use edge_magic::format::{
    parse_assignment, parse_graph, parse_labeled_digraph, parse_labeling, write_graph,
};
use edge_magic::graph::{bipartition, mk_crown, mk_star_with_loop};
use edge_magic::intervals::{em_interval, sem_interval};
use edge_magic::labeling::{is_super_edge_magic, valence_of};
use edge_magic::product::{induced_labeling_spk, induced_labeling_tq, ArcAssignment, LabeledDigraph};
use edge_magic::repro;
use edge_magic::search::{spectrum, SearchConfig, SpectrumKind, SpectrumReport};
use edge_magic::{Error, Graph, TotalLabeling};

use cert::Inputs;

#[derive(Parser)]
#[command(name = "edgemagic", version, about = "Edge-magic and super edge-magic labelings")]
struct Cli {
    /// Wrap JSON output in a certificate (command, input digests, verified flag).
    #[arg(long, global = true)]
    cert: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Sem,
    Em,
}

impl From<Kind> for SpectrumKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Sem => SpectrumKind::Sem,
            Kind::Em => SpectrumKind::Em,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Spk,
    Tq,
}

#[derive(Clone, Copy, ValueEnum)]
enum Example {
    C4Spectrum,
    #[value(name = "c4-crown-20")]
    C4Crown20,
    K1nlPerfect,
    #[value(name = "s2-k33")]
    S2K33,
}

#[derive(Subcommand)]
enum Command {
    /// Check a labeling file against a graph file.
    Verify {
        #[arg(long, value_enum, default_value = "em")]
        kind: Kind,
        graph: PathBuf,
        labeling: PathBuf,
    },
    /// Exhaustive valence spectrum.
    Spectrum {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Largest p+q the search accepts.
        #[arg(long, default_value_t = 16)]
        cap: usize,
        /// Write the witness labelings (valence -> labeling) here.
        #[arg(long)]
        witnesses: Option<PathBuf>,
        /// Assume a vertex-transitive automorphism group.
        #[arg(long)]
        break_symmetry: bool,
        graph: PathBuf,
    },
    /// Super edge-magic or magic interval.
    Interval {
        #[arg(long, value_enum)]
        kind: Kind,
        graph: PathBuf,
    },
    /// Product of a labeled digraph with a family, and its induced labeling.
    Product {
        /// Labeled digraph file (p/a/v/e lines).
        #[arg(long = "d")]
        first: PathBuf,
        /// Family member, labeled digraph file; repeatable.
        #[arg(long, required = true)]
        member: Vec<PathBuf>,
        /// Lines "<arc> <member>", 1-based; defaults to member 1 everywhere.
        #[arg(long)]
        assign: Option<PathBuf>,
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Build S_2n(G; H1, H2) and, given a labeling of G, its induced labeling.
    S2n {
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated 1-based edge indices of H1; H2 is the rest.
        #[arg(long, value_delimiter = ',')]
        h1: Vec<usize>,
        #[arg(long)]
        n: usize,
        /// Edge-magic labeling of G.
        #[arg(long)]
        labeling: Option<PathBuf>,
        /// Label of the star centre, in [1, n+1].
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
    /// Stream every ordered 2-decomposition with its S_2n check, as JSON lines.
    Decompose {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        enumerate: bool,
        #[arg(long)]
        include_empty: bool,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SPLIT_CAP)]
        cap: usize,
    },
    /// Re-run one of the worked examples end to end.
    Repro {
        #[arg(value_enum)]
        example: Example,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn read(path: &Path, inputs: &mut Inputs) -> Result<String, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    inputs.record(&path.display().to_string(), text.as_bytes());
    Ok(text)
}

fn with_path<T>(path: &Path, r: Result<T, Error>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn print_json(value: &impl Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn emit(wrap: bool, inputs: Inputs, result: impl Serialize, verified: bool) {
    if wrap {
        print_json(&inputs.certificate(result, verified));
    } else {
        print_json(&result);
    }
}

fn check_witnesses(g: &Graph, report: &SpectrumReport) -> bool {
    report.witnesses.iter().all(|(&k, f)| {
        let got = match report.kind {
            SpectrumKind::Em => valence_of(g, f),
            SpectrumKind::Sem => is_super_edge_magic(g, f),
        };
        matches!(got, Ok(Some(v)) if v == k)
    })
}

fn run(cli: Cli) -> Outcome {
    let wrap = cli.cert;
    let mut inputs = Inputs::default();
    match cli.command {
        Command::Verify {
            kind,
            graph,
            labeling,
        } => {
            let g = with_path(&graph, parse_graph(&read(&graph, &mut inputs)?))?;
            let f = with_path(&labeling, parse_labeling(&read(&labeling, &mut inputs)?, g.p(), g.q()))?;
            let valence = match kind {
                Kind::Em => valence_of(&g, &f),
                Kind::Sem => is_super_edge_magic(&g, &f),
            };
            let valence = with_path(&labeling, valence)?;
            #[derive(Serialize)]
            struct Verdict {
                kind: SpectrumKind,
                valence: Option<usize>,
            }
            if wrap {
                let verdict = Verdict {
                    kind: kind.into(),
                    valence,
                };
                emit(true, inputs, verdict, valence.is_some());
            } else {
                match valence {
                    Some(k) => println!("valence {k}"),
                    None => println!("not magic"),
                }
            }
            Ok(valence.is_some())
        }
        Command::Spectrum {
            kind,
            cap,
            witnesses,
            break_symmetry,
            graph,
        } => {
            let g = with_path(&graph, parse_graph(&read(&graph, &mut inputs)?))?;
            let cfg = SearchConfig {
                cap,
                break_symmetry,
                ..SearchConfig::default()
            };
            let report = spectrum(&g, kind.into(), &cfg)?;
            let verified = check_witnesses(&g, &report);
            if let Some(path) = witnesses {
                let text = serde_json::to_string_pretty(&report.witnesses).expect("serializable");
                fs::write(&path, text)
                    .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            }
            #[derive(Serialize)]
            struct Summary<'a> {
                kind: SpectrumKind,
                interval: &'a edge_magic::intervals::IntervalReport,
                achieved: &'a BTreeSet<usize>,
                perfect: bool,
            }
            let summary = Summary {
                kind: report.kind,
                interval: &report.interval,
                achieved: &report.achieved,
                perfect: report.perfect,
            };
            emit(wrap, inputs, summary, verified);
            Ok(verified)
        }
        Command::Interval { kind, graph } => {
            let g = with_path(&graph, parse_graph(&read(&graph, &mut inputs)?))?;
            let report = match kind {
                Kind::Sem => sem_interval(&g)?,
                Kind::Em => em_interval(&g)?,
            };
            let consistent = report.lo == report.raw_min.ceil().to_integer()
                && report.hi == report.raw_max.floor().to_integer()
                && report.empty == (report.lo > report.hi);
            emit(wrap, inputs, report, consistent);
            Ok(consistent)
        }
        Command::Product {
            first,
            member,
            assign,
            mode,
        } => {
            let d = with_path(&first, parse_labeled_digraph(&read(&first, &mut inputs)?))?;
            let family = member
                .iter()
                .map(|path| with_path(path, parse_labeled_digraph(&read(path, &mut inputs)?)))
                .collect::<Result<Vec<LabeledDigraph>, _>>()?;
            let assignment = match &assign {
                Some(path) => with_path(path, parse_assignment(&read(path, &mut inputs)?, d.digraph.q()))?,
                None => vec![0; d.digraph.q()],
            };
            let h = ArcAssignment { family, assignment };
            let prod = match mode {
                Mode::Spk => induced_labeling_spk(&d, &h)?,
                Mode::Tq => induced_labeling_tq(&d, &h)?,
            };
            let graph = prod.graph();
            let verified_valence = valence_of(&graph, &prod.labeling)?;
            let verified = verified_valence == Some(prod.predicted_valence);
            #[derive(Serialize)]
            struct ProductOut<'a> {
                graph: String,
                labeling: &'a TotalLabeling,
                predicted_valence: usize,
                verified_valence: Option<usize>,
            }
            let out = ProductOut {
                graph: write_graph(&graph),
                labeling: &prod.labeling,
                predicted_valence: prod.predicted_valence,
                verified_valence,
            };
            print_json(&inputs.certificate(out, verified));
            Ok(verified)
        }
        Command::S2n {
            graph,
            h1,
            n,
            labeling,
            r,
        } => {
            let g = with_path(&graph, parse_graph(&read(&graph, &mut inputs)?))?;
            let bip = bipartition(&g).ok_or(Error::NotBipartite)?;
            let d = Decomposition::from_part1(&g, h1)?;
            let s2n = build_s2n(&g, &bip, &d, n)?;
            let iso = verify_s2n_iso(&g, &bip, &d, n)?;
            #[derive(Serialize)]
            struct S2nOut {
                graph: String,
                isomorphism_checked: bool,
                labeling: Option<TotalLabeling>,
                predicted_valence: Option<usize>,
                verified_valence: Option<usize>,
                is_super: Option<bool>,
            }
            let mut out = S2nOut {
                graph: write_graph(&s2n.graph),
                isomorphism_checked: iso,
                labeling: None,
                predicted_valence: None,
                verified_valence: None,
                is_super: None,
            };
            let mut verified = iso;
            if let Some(path) = labeling {
                let f = with_path(&path, parse_labeling(&read(&path, &mut inputs)?, g.p(), g.q()))?;
                let induced = s2n_induced_labeling(&g, &bip, &d, n, &f, r)?;
                let recheck = valence_of(&s2n.graph, &induced.labeling)?;
                verified &= recheck == Some(induced.predicted_valence);
                out.verified_valence = recheck;
                out.predicted_valence = Some(induced.predicted_valence);
                out.is_super = Some(is_super_edge_magic(&s2n.graph, &induced.labeling)?.is_some());
                out.labeling = Some(induced.labeling);
            }
            print_json(&inputs.certificate(out, verified));
            Ok(verified)
        }
        Command::Decompose {
            graph,
            enumerate,
            include_empty,
            n,
            cap,
        } => {
            if !enumerate {
                return Err(Failure::Input("decompose currently requires --enumerate".into()));
            }
            let g = with_path(&graph, parse_graph(&read(&graph, &mut inputs)?))?;
            let bip = bipartition(&g).ok_or(Error::NotBipartite)?;
            #[derive(Serialize)]
            struct Line<'a> {
                h1: &'a BTreeSet<usize>,
                h2: &'a BTreeSet<usize>,
                valid: bool,
                s2n_iso: bool,
            }
            let mut all = true;
            for d in enumerate_2_decompositions(&g, include_empty, cap)? {
                let s2n_iso = verify_s2n_iso(&g, &bip, &d, n)?;
                all &= s2n_iso;
                let line = Line {
                    h1: &d.part1_edges,
                    h2: &d.part2_edges,
                    valid: true,
                    s2n_iso,
                };
                println!("{}", serde_json::to_string(&line).expect("serializable"));
            }
            Ok(all)
        }
        Command::Repro { example } => run_repro(example, inputs),
    }
}

fn run_repro(example: Example, mut inputs: Inputs) -> Outcome {
    let cfg = SearchConfig::default();
    match example {
        Example::C4Spectrum => {
            inputs.record("example", b"c4-spectrum");
            let report = repro::c4_spectrum(&cfg)?;
            let g = edge_magic::graph::mk_cycle(4)?;
            let verified = check_witnesses(&g, &report) && report.perfect;
            print_json(&inputs.certificate(&report, verified));
            Ok(verified)
        }
        Example::C4Crown20 => {
            inputs.record("example", b"c4-crown-20");
            let cert = repro::c4_crown(&cfg)?;
            let crown = mk_crown(4, 2)?;
            let rechecked = cert
                .entries
                .iter()
                .all(|e| valence_of(&crown, &e.labeling).ok().flatten() == Some(e.predicted));
            let verified = rechecked && cert.perfect && cert.valences.len() == 20;
            print_json(&inputs.certificate(&cert, verified));
            Ok(verified)
        }
        Example::K1nlPerfect => {
            inputs.record("example", b"k1nl-perfect");
            let mut verified = true;
            let mut reports = Vec::new();
            for n in 1..=6 {
                let g = mk_star_with_loop(n)?;
                let report = spectrum(&g, SpectrumKind::Sem, &cfg)?;
                verified &= check_witnesses(&g, &report) && report.perfect && report.achieved.len() == n + 1;
                reports.push(report);
            }
            print_json(&inputs.certificate(&reports, verified));
            Ok(verified)
        }
        Example::S2K33 => {
            inputs.record("example", b"s2-k33");
            let ex = repro::s2_k33(&cfg)?;
            let recheck = valence_of(&ex.result.s2n.graph, &ex.result.labeling)?;
            let verified = recheck == Some(ex.result.predicted_valence);
            print_json(&inputs.certificate(&ex, verified));
            Ok(verified)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
