//! Command-line front end. `run` returns the process exit code:
//! 0 when the command completed, 1 on an input or usage error, 2 when a
//! resource cap stopped the work before it could finish.

use std::io::{BufRead, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::diagram::Sign;
use crate::menasco::{
    adjacency_pairing, certify, enumerate_loops, CertifyOptions, EnumerateOptions, Verdict,
};
use crate::oracle::{random_unknot, unknot_search, SearchStatus};
use crate::pdcode::{emit_pd, parse_gauss, parse_pd, validate, PlanarDiagram};
use crate::reduce::HypothesisReport;
use crate::report::{InputEcho, LoopReport, Options, Report};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_CAPPED: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "knotcert",
    version,
    about = "Non-triviality certificates for knot diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate a diagram and report the structural hypotheses.
    Check(InputArgs),
    /// List embedded Menasco loops.
    Loops {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "both")]
        sign: SignArg,
        /// Longest loop to enumerate.
        #[arg(long)]
        max_length: Option<usize>,
        /// Keep only loops admitting an adjacency pairing.
        #[arg(long)]
        qualifying_only: bool,
        /// Pair passages only through a chord along a sign-adjacency arc.
        #[arg(long)]
        strict_adjacency: bool,
    },
    /// Search for a qualifying loop and certify non-triviality if none exists.
    Certify {
        #[command(flatten)]
        input: InputArgs,
        /// Pair passages only through a chord along a sign-adjacency arc.
        #[arg(long)]
        strict_adjacency: bool,
        /// Stop after this many search states (verdict UnknownCapped).
        #[arg(long)]
        max_states: Option<u64>,
        /// Search loops up to this length only (verdict UnknownCapped).
        #[arg(long)]
        max_length: Option<usize>,
        /// Worker threads; 1 runs sequentially. Results do not depend on it.
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Reidemeister-move search for the crossing-free diagram.
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        /// Never pass through diagrams with more crossings.
        #[arg(long, default_value_t = 8)]
        max_crossings: usize,
        /// Give up after this many distinct diagrams.
        #[arg(long, default_value_t = 100_000)]
        max_states: usize,
    },
    /// Emit a random diagram of the trivial knot.
    GenUnknot {
        /// Number of crossing-increasing or RIII moves.
        #[arg(long, default_value_t = 10)]
        moves: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print a JSON report instead of PD text.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Diagram file, or `-` for stdin.
    #[arg(default_value = "-")]
    path: String,
    /// Read a signed Gauss code instead of PD notation.
    #[arg(long)]
    gauss: bool,
    /// Print a JSON report.
    #[arg(long)]
    json: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SignArg {
    #[value(name = "+")]
    Plus,
    #[value(name = "-")]
    Minus,
    Both,
}

impl SignArg {
    fn signs(self) -> &'static [Sign] {
        match self {
            SignArg::Plus => &[Sign::Plus],
            SignArg::Minus => &[Sign::Minus],
            SignArg::Both => &Sign::BOTH,
        }
    }

    fn label(self) -> &'static str {
        match self {
            SignArg::Plus => "+",
            SignArg::Minus => "-",
            SignArg::Both => "both",
        }
    }
}

struct Loaded {
    diagram: PlanarDiagram,
    echo: InputEcho,
}

fn load(args: &InputArgs, stdin: &mut dyn BufRead) -> Result<Loaded, String> {
    let text = if args.path == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| format!("reading stdin: {e}"))?;
        s
    } else {
        std::fs::read_to_string(&args.path).map_err(|e| format!("{}: {e}", args.path))?
    };
    let text = text.trim().to_string();
    let parsed = if args.gauss {
        parse_gauss(&text)
    } else {
        parse_pd(&text)
    };
    let diagram = parsed.map_err(|e| e.to_string())?;
    Ok(Loaded {
        echo: InputEcho {
            format: if args.gauss { "gauss" } else { "pd" },
            text,
            pd: emit_pd(&diagram),
        },
        diagram,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn write_hypotheses(out: &mut dyn Write, h: &HypothesisReport) -> std::io::Result<()> {
    writeln!(
        out,
        "hypotheses: connected {}, has crossing {}, I-reduced {}, II-reduced {}, prime {}, no nugatory crossing {}, checkerboard {}",
        yes_no(h.connected),
        yes_no(h.has_crossing),
        yes_no(h.i_reduced),
        yes_no(h.ii_reduced),
        yes_no(h.prime),
        yes_no(h.nugatory_free),
        yes_no(h.checkerboard_colorable),
    )?;
    let w = &h.witnesses;
    if let Some(m) = &w.monogon {
        writeln!(out, "  monogon: face {m}")?;
    }
    if let Some(b) = &w.reducible_bigon {
        writeln!(
            out,
            "  reducible bigon: face {} at crossings {} and {}",
            b.face, b.crossings.0, b.crossings.1
        )?;
    }
    if let Some(p) = &w.prime_failure {
        writeln!(
            out,
            "  not prime: {}",
            serde_json::to_string(p).unwrap_or_default()
        )?;
    }
    if let Some(c) = w.nugatory_crossing {
        writeln!(out, "  nugatory crossing: {c}")?;
    }
    Ok(())
}

fn write_loop(out: &mut dyn Write, l: &LoopReport) -> std::io::Result<()> {
    let seq: Vec<String> = l
        .sequence
        .iter()
        .map(|e| format!("c{}/s{}/f{}", e.crossing, e.side, e.face))
        .collect();
    write!(
        out,
        "{} loop, length {}: {}",
        l.sign,
        l.length,
        seq.join(" ")
    )?;
    if let Some(p) = &l.pairing {
        let pairs: Vec<String> = p.pairs.iter().map(|(a, b)| format!("({a},{b})")).collect();
        write!(
            out,
            "; pairs {} free ({},{})",
            pairs.join(" "),
            p.free_pair.0,
            p.free_pair.1
        )?;
    }
    writeln!(out)
}

pub fn run(
    argv: &[String],
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> u8 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{rendered}");
                    EXIT_INPUT
                }
            };
        }
    };
    match execute(cli.command, stdin, stdout) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INPUT
        }
        // reader went away, e.g. `| head`
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INPUT
        }
    }
}

enum Failure {
    Input(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn execute(command: Command, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<u8, Failure> {
    match command {
        Command::Check(input) => {
            let loaded = load(&input, stdin).map_err(Failure::Input)?;
            let validation = validate(&loaded.diagram);
            let hypotheses = crate::reduce::hypothesis_report(&loaded.diagram);
            if input.json {
                let mut r = Report::new("check", Options::none());
                r.input = Some(loaded.echo);
                r.validation = Some(validation);
                r.hypotheses = Some(hypotheses);
                writeln!(out, "{}", r.to_json())?;
            } else {
                let v = &validation;
                writeln!(out, "diagram: {}", loaded.echo.pd)?;
                writeln!(
                    out,
                    "crossings {}, arcs {}, faces {}, components {}, Euler characteristic {}, sphere realizable {}",
                    v.crossings,
                    v.arcs,
                    v.faces,
                    v.component_count,
                    v.euler_characteristic,
                    yes_no(v.sphere_realizable)
                )?;
                write_hypotheses(out, &hypotheses)?;
            }
            Ok(EXIT_OK)
        }
        Command::Loops {
            input,
            sign,
            max_length,
            qualifying_only,
            strict_adjacency,
        } => {
            let loaded = load(&input, stdin).map_err(Failure::Input)?;
            let d = &loaded.diagram;
            let opts = EnumerateOptions {
                max_length,
                qualifying_only,
                strict_adjacency,
                parallel: false,
            };
            let mut loops = Vec::new();
            for &s in sign.signs() {
                for l in enumerate_loops(d, s, &opts) {
                    let pairing = adjacency_pairing(&l, d, strict_adjacency);
                    loops.push(LoopReport::new(&l, pairing));
                }
            }
            if input.json {
                let mut r = Report::new(
                    "loops",
                    Options {
                        sign: Some(sign.label().to_string()),
                        max_length,
                        qualifying_only: Some(qualifying_only),
                        strict_adjacency: Some(strict_adjacency),
                        ..Options::none()
                    },
                );
                r.input = Some(loaded.echo);
                r.loops = Some(loops);
                writeln!(out, "{}", r.to_json())?;
            } else {
                writeln!(out, "{} loops", loops.len())?;
                for l in &loops {
                    write_loop(out, l)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Certify {
            input,
            strict_adjacency,
            max_states,
            max_length,
            threads,
        } => {
            let loaded = load(&input, stdin).map_err(Failure::Input)?;
            let opts = CertifyOptions {
                strict_adjacency,
                max_states,
                max_length,
                parallel: threads > 1,
            };
            let report = if threads > 1 {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build()
                    .map_err(|e| Failure::Input(e.to_string()))?;
                pool.install(|| certify(&loaded.diagram, &opts))
            } else {
                certify(&loaded.diagram, &opts)
            };
            let code = if report.verdict == Verdict::UnknownCapped {
                EXIT_CAPPED
            } else {
                EXIT_OK
            };
            let witness = report
                .witness
                .as_ref()
                .map(|w| LoopReport::new(&w.menasco_loop, Some(w.pairing.clone())));
            if input.json {
                let mut r = Report::new(
                    "certify",
                    Options {
                        max_length,
                        max_states,
                        strict_adjacency: Some(strict_adjacency),
                        ..Options::none()
                    },
                );
                r.validation = Some(validate(&loaded.diagram));
                r.input = Some(loaded.echo);
                r.hypotheses = Some(report.hypotheses);
                r.verdict = Some(report.verdict);
                r.witness = witness;
                r.search = report.search;
                writeln!(out, "{}", r.to_json())?;
            } else {
                writeln!(out, "diagram: {}", loaded.echo.pd)?;
                write_hypotheses(out, &report.hypotheses)?;
                writeln!(out, "verdict: {:?}", report.verdict)?;
                if let Some(w) = &witness {
                    write!(out, "witness: ")?;
                    write_loop(out, w)?;
                }
                if let Some(s) = &report.search {
                    writeln!(
                        out,
                        "search: {} states, longest loop {}, length bound {}, exhaustive {}, {} ms",
                        s.states,
                        s.max_length_reached,
                        s.length_bound,
                        yes_no(s.exhaustive),
                        s.elapsed_ms
                    )?;
                }
            }
            Ok(code)
        }
        Command::Oracle {
            input,
            max_crossings,
            max_states,
        } => {
            let loaded = load(&input, stdin).map_err(Failure::Input)?;
            let started = Instant::now();
            let outcome = unknot_search(&loaded.diagram, max_crossings, max_states)
                .map_err(|e| Failure::Input(e.to_string()))?;
            let code = if outcome.status == SearchStatus::Unknown
                && outcome.states_explored >= max_states
            {
                EXIT_CAPPED
            } else {
                EXIT_OK
            };
            if input.json {
                let mut r = Report::new(
                    "oracle",
                    Options {
                        max_crossings: Some(max_crossings),
                        max_states: Some(max_states as u64),
                        ..Options::none()
                    },
                );
                r.input = Some(loaded.echo);
                r.oracle = Some(outcome);
                writeln!(out, "{}", r.to_json())?;
            } else {
                writeln!(
                    out,
                    "status: {:?} after {} states ({} ms)",
                    outcome.status,
                    outcome.states_explored,
                    started.elapsed().as_millis()
                )?;
                for (i, m) in outcome.path.iter().flatten().enumerate() {
                    let site = serde_json::to_string(&m.site).unwrap_or_default();
                    writeln!(
                        out,
                        "{:>3}. {} {} -> {}",
                        i + 1,
                        serde_json::to_string(&m.kind)
                            .unwrap_or_default()
                            .trim_matches('"'),
                        site,
                        m.result
                    )?;
                }
            }
            Ok(code)
        }
        Command::GenUnknot { moves, seed, json } => {
            let d = random_unknot(moves, seed);
            let pd = emit_pd(&d);
            if json {
                let mut r = Report::new(
                    "gen-unknot",
                    Options {
                        moves: Some(moves),
                        seed: Some(seed),
                        ..Options::none()
                    },
                );
                r.generated = Some(InputEcho {
                    format: "pd",
                    text: pd.clone(),
                    pd,
                });
                writeln!(out, "{}", r.to_json())?;
            } else {
                writeln!(out, "{pd}")?;
            }
            Ok(EXIT_OK)
        }
    }
}
