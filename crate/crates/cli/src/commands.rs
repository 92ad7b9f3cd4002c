use std::io::Write;
use std::net::{IpAddr, Ipv4Addr, SocketAddr};

use clap::{Parser, Subcommand, ValueEnum};
use permdek_core::dek::{clairvoyant_winnable, optimal_policy_value, win_probability_clairvoyant};
use permdek_core::dyck::{catalan, knuth_richards, knuth_richards_inverse, queueit, stackit};
use permdek_core::enumerate::{count_obtainable, verify_bijection_suite};
use permdek_core::machines::{realize_with_queue, realize_with_set, realize_with_stack};
use permdek_core::{Error, MachineConfig, Permutation};
use serde_json::json;

/// Exit status for a well-formed request whose answer is negative.
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "permdek", version, about = "Stack/queue permutations, Dyck paths and DEK solitaire")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report whether a permutation avoids 312 / 321 (or a given pattern).
    Check {
        #[arg(long)]
        perm: Permutation,
        /// Pattern of length <= 4, e.g. `312` or `4,3,2,1`.
        #[arg(long, value_parser = parse_pattern)]
        pattern: Option<Permutation>,
    },
    /// Knuth–Richards map from 312-avoiders to 321-avoiders.
    Map {
        #[arg(long)]
        perm: Permutation,
        /// Map a 321-avoider back to its 312-avoider.
        #[arg(long)]
        inverse: bool,
    },
    /// Project onto the stackable permutations.
    Stackit {
        #[arg(long)]
        perm: Permutation,
    },
    /// Project onto the queueable permutations.
    Queueit {
        #[arg(long)]
        perm: Permutation,
    },
    /// Height profile of the canonical trace.
    Path {
        #[arg(long)]
        perm: Permutation,
        #[arg(long, value_enum)]
        machine: TraceMachine,
        /// Allow direct transfers (stack only; queue and set always use them).
        #[arg(long)]
        xfer: bool,
        #[arg(long, value_enum, default_value_t = PathFormat::Word)]
        format: PathFormat,
        /// Print the operations before the path.
        #[arg(long)]
        show_trace: bool,
    },
    /// Count obtainable permutations for n = 1..=N.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_machine)]
        machine: MachineConfig,
        #[arg(long)]
        no_xfer: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run every exhaustive bijection check over S_n.
    Verify {
        #[arg(long)]
        n: usize,
    },
    /// Decide whether a DEK deal can be won when the deck order is known.
    DekSolve {
        /// Deck order, top card first.
        #[arg(long)]
        shuffle: Permutation,
        #[arg(long)]
        witness: bool,
    },
    /// Exact DEK win probability.
    DekProb {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        mode: ProbMode,
    },
    /// Serve the JSON game API until interrupted.
    DekServe {
        #[arg(long)]
        port: u16,
        #[arg(long, default_value_t = IpAddr::V4(Ipv4Addr::LOCALHOST))]
        bind: IpAddr,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum TraceMachine {
    Stack,
    Queue,
    Set,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum PathFormat {
    Word,
    Ascii,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ProbMode {
    Clairvoyant,
    Policy,
}

fn parse_pattern(s: &str) -> Result<Permutation, Error> {
    let t = s.trim();
    if !t.contains(',') && t.len() > 1 {
        let spaced: Vec<String> = t.chars().map(String::from).collect();
        return spaced.join(",").parse();
    }
    t.parse()
}

fn parse_machine(s: &str) -> Result<MachineConfig, Error> {
    s.parse()
}

/// Parses `args` (program name first) and runs the command, writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e @ (Error::Guard { .. } | Error::PatternTooLong(_))) => {
            let _ = writeln!(err, "error: {e}\n\n{}", usage());
            EXIT_USAGE
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}

fn usage() -> String {
    use clap::CommandFactory;
    Cli::command().render_usage().to_string()
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Error> {
    let mut say = |line: String| {
        let _ = writeln!(out, "{line}");
    };
    match command {
        Command::Check { perm, pattern } => match pattern {
            Some(pattern) => {
                let label: String = pattern.as_slice().iter().map(u32::to_string).collect();
                if perm.contains_pattern(&pattern)? {
                    say(format!("contains {label}"));
                    return Ok(EXIT_DOMAIN);
                }
                say(format!("avoids {label}"));
            }
            None => {
                let verdict = |avoids: bool| if avoids { "avoids" } else { "contains" };
                say(format!("{} 312 (stackable: {})", verdict(perm.avoids_312()), perm.avoids_312()));
                say(format!("{} 321 (queueable: {})", verdict(perm.avoids_321()), perm.avoids_321()));
            }
        },
        Command::Map { perm, inverse } => {
            let image = if inverse {
                knuth_richards_inverse(&perm)?
            } else {
                knuth_richards(&perm)?
            };
            say(image.to_string());
        }
        Command::Stackit { perm } => say(stackit(&perm).to_string()),
        Command::Queueit { perm } => say(queueit(&perm).to_string()),
        Command::Path {
            perm,
            machine,
            xfer,
            format,
            show_trace,
        } => {
            let trace = match machine {
                TraceMachine::Stack => realize_with_stack(&perm, xfer)?,
                TraceMachine::Queue => realize_with_queue(&perm)?,
                TraceMachine::Set => realize_with_set(&perm),
            };
            if show_trace {
                say(trace.to_string());
            }
            let path = trace.height_profile();
            say(match format {
                PathFormat::Word => path.to_string(),
                PathFormat::Ascii => path.render_ascii(),
            });
        }
        Command::Count {
            n,
            machine,
            no_xfer,
            json,
        } => {
            let config = machine.with_xfer(!no_xfer);
            let mut rows = Vec::new();
            for k in 1..=n {
                rows.push(count_obtainable(&config, k)?);
            }
            if json {
                let array: Vec<_> = rows
                    .iter()
                    .map(|r| {
                        json!({
                            "config": r.config.name(),
                            "xfer": r.config.xfer(),
                            "n": r.n,
                            "count": r.count,
                            "catalan": catalan(r.n).to_string(),
                            "elapsed_ms": r.elapsed.as_millis() as u64,
                        })
                    })
                    .collect();
                say(serde_json::to_string_pretty(&array).expect("plain JSON values"));
            } else {
                for r in rows {
                    say(format!(
                        "{}\t{}\t{}\t{}\t{}",
                        r.config,
                        r.n,
                        r.count,
                        catalan(r.n),
                        r.elapsed.as_millis()
                    ));
                }
            }
        }
        Command::Verify { n } => {
            let report = verify_bijection_suite(n)?;
            say(report.to_string());
            if !report.passed() {
                return Ok(EXIT_DOMAIN);
            }
        }
        Command::DekSolve { shuffle, witness } => {
            let (win, moves) = clairvoyant_winnable(&shuffle)?;
            say(if win { "winnable" } else { "not winnable" }.to_string());
            if let (true, Some(moves)) = (witness, moves) {
                for mv in moves {
                    say(mv.to_string());
                }
            }
            if !win {
                return Ok(EXIT_DOMAIN);
            }
        }
        Command::DekProb { n, mode } => {
            let value = match mode {
                ProbMode::Clairvoyant => win_probability_clairvoyant(n)?,
                ProbMode::Policy => optimal_policy_value(n)?,
            };
            say(value.to_string());
        }
        Command::DekServe { port, bind } => {
            let addr = SocketAddr::new(bind, port);
            let runtime = tokio::runtime::Runtime::new().map_err(|e| Error::BadConfig(e.to_string()))?;
            if let Err(e) = runtime.block_on(crate::service::serve(addr)) {
                log::error!("server on {addr} failed: {e}");
                return Ok(EXIT_DOMAIN);
            }
        }
    }
    Ok(0)
}
