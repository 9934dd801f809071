//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 invalid input, 3 I/O.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::construction::{biaffine, kautz_mixed, ConstructionParams};
use crate::error::{Error, Result};
use crate::gf::{field_new, FieldElem, ShiftSets};
use crate::mixed_graph::{parse_mg1, to_dot, Distance, MixedGraph};
use crate::moore::{best_upper_bound, feasibility_table, table_csv, table_text};
use crate::symmetry::{automorphism_orbits, refine, transitivity_certificate};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "mixed-moore", version, about = "Build and verify dense diameter-2 mixed graphs")]
pub struct Cli {
    /// Worker threads for BFS-heavy checks (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[arg(short, long, global = true)]
    pub verbose: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Gqt,
    Biaffine,
    Kautz,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Mg1,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph and write it in mg1 or DOT format.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long, default_value_t = 0)]
        t: u32,
        #[arg(long)]
        d: Option<u32>,
        /// Use a random valid shift-set choice drawn from this seed.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "mg1")]
        format: GraphFormat,
        /// Output file; the graph goes to stdout and the summary to stderr
        /// when omitted.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Recompute the metrics of an mg1 file and compare with expectations.
    Verify {
        #[arg(long, short)]
        input: PathBuf,
        #[arg(long)]
        expect_diameter: Option<u32>,
        #[arg(long)]
        expect_z: Option<usize>,
        #[arg(long)]
        expect_r: Option<usize>,
        #[arg(long)]
        expect_order: Option<usize>,
        #[arg(long)]
        expect_moore: Option<bool>,
    },
    /// Upper bound on the order of a (z, r; 2) mixed graph.
    Bounds {
        #[arg(long)]
        z: u64,
        #[arg(long)]
        r: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: TableFormat,
    },
    /// Feasible parameters of mixed Moore graphs up to a given order.
    Table {
        #[arg(long, default_value_t = 200)]
        max_n: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: TableFormat,
    },
    /// Vertex-transitivity certificate for G_{q,0}.
    Certify {
        #[arg(long)]
        q: u64,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Refinement cells (and optionally exact automorphism orbits).
    Orbits {
        #[arg(long, short, conflicts_with = "q")]
        input: Option<PathBuf>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long, default_value_t = 0)]
        t: u32,
        #[arg(long)]
        exact: bool,
    },
    /// Convert an mg1 file to another format.
    Export {
        #[arg(long, short)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Io(_) => EXIT_IO,
        Error::CertificateFailure { .. } => EXIT_MISMATCH,
        _ => EXIT_INVALID,
    }
}

/// Runs `cli`, writing normal output to `out` and diagnostics to stderr.
pub fn main_with(cli: Cli, out: &mut dyn Write) -> i32 {
    if let Some(n) = cli.threads {
        // Fails only if a global pool already exists; keep that pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}: {e}", e.name());
            exit_code(&e)
        }
    }
}

fn read_graph(path: &Path) -> Result<MixedGraph> {
    parse_mg1(&fs::read_to_string(path)?)
}

fn render(g: &MixedGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Mg1 => g.to_mg1(),
        GraphFormat::Dot => to_dot(g),
    }
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn list(v: &[FieldElem]) -> String {
    let items: Vec<String> = v.iter().map(|a| a.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn required<T>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidParameter(format!("--{flag} is required here")))
}

fn build_gqt(q: u64, t: u32, seed: Option<u64>) -> Result<(ConstructionParams, MixedGraph)> {
    let f = field_new(q)?;
    let params = match seed {
        None => ConstructionParams::new(f, t)?,
        Some(seed) => {
            let shifts = ShiftSets::random(&f, t, &mut ChaCha8Rng::seed_from_u64(seed))?;
            ConstructionParams::with_shifts(f, shifts)?
        }
    };
    let g = params.build();
    Ok((params, g))
}

fn run(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Gen { family, q, t, d, seed, format, output } => {
            let mut summary = String::new();
            let g = match family {
                Family::Gqt => {
                    let (params, g) = build_gqt(required(q, "q")?, t, seed)?;
                    let s = &params.shifts;
                    summary.push_str(&format!("family=gqt q={} t={}\n", params.field.q(), t));
                    if let Some(seed) = seed {
                        summary.push_str(&format!("seed={seed}\n"));
                    }
                    summary.push_str(&format!(
                        "M={} T={} T1={} T2={} S={} negS={}\n",
                        list(&s.m),
                        list(&s.t_set),
                        list(&s.t1),
                        list(&s.t2),
                        list(&s.s),
                        list(&s.neg_s)
                    ));
                    g
                }
                Family::Biaffine => {
                    let f = field_new(required(q, "q")?)?;
                    summary.push_str(&format!("family=biaffine q={}\n", f.q()));
                    biaffine(&f)
                }
                Family::Kautz => {
                    let d = required(d, "d")?;
                    summary.push_str(&format!("family=kautz d={d}\n"));
                    kautz_mixed(d)?
                }
            };
            summary.push_str(&format!(
                "order={} edges={} arcs={}\n",
                g.order(),
                g.edges().len(),
                g.arcs().len()
            ));
            match g.is_mixed_regular() {
                Some((z, r)) => summary.push_str(&format!("r={r} z={z}\n")),
                None => summary.push_str("not mixed-regular\n"),
            }
            let text = render(&g, format);
            match output {
                Some(path) => {
                    fs::write(&path, text)?;
                    out.write_all(summary.as_bytes())?;
                }
                None => {
                    out.write_all(text.as_bytes())?;
                    eprint!("{summary}");
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { input, expect_diameter, expect_z, expect_r, expect_order, expect_moore } => {
            let g = read_graph(&input)?;
            g.check_consistency()?;
            let report = g.is_mixed_moore();
            writeln!(out, "order: {}", report.order)?;
            writeln!(out, "edges: {} arcs: {}", g.edges().len(), g.arcs().len())?;
            match report.regular {
                Some((z, r)) => writeln!(out, "mixed-regular: z={z} r={r}")?,
                None => writeln!(out, "mixed-regular: no")?,
            }
            writeln!(out, "diameter: {}", report.diameter)?;
            writeln!(out, "edges/arcs disjoint: yes")?;
            match report.bound {
                Some(b) => writeln!(out, "mixed Moore: {} (bound {b})", if report.is_moore { "yes" } else { "no" })?,
                None => writeln!(out, "mixed Moore: no")?,
            }
            let mut failures = 0;
            let mut check = |out: &mut dyn Write, name: &str, expected: String, actual: String| -> Result<()> {
                if expected == actual {
                    writeln!(out, "PASS {name} = {expected}")?;
                } else {
                    failures += 1;
                    writeln!(out, "FAIL {name}: expected {expected}, actual {actual}")?;
                }
                Ok(())
            };
            let (z, r) = match report.regular {
                Some((z, r)) => (z.to_string(), r.to_string()),
                None => ("irregular".into(), "irregular".into()),
            };
            if let Some(d) = expect_diameter {
                check(out, "diameter", Distance::Finite(d).to_string(), report.diameter.to_string())?;
            }
            if let Some(ez) = expect_z {
                check(out, "z", ez.to_string(), z)?;
            }
            if let Some(er) = expect_r {
                check(out, "r", er.to_string(), r)?;
            }
            if let Some(n) = expect_order {
                check(out, "order", n.to_string(), report.order.to_string())?;
            }
            if let Some(m) = expect_moore {
                check(out, "moore", m.to_string(), report.is_moore.to_string())?;
            }
            Ok(if failures == 0 { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Bounds { z, r, format } => {
            if z + r == 0 {
                return Err(Error::InvalidParameter("z + r must be positive".into()));
            }
            let rep = best_upper_bound(z, r);
            match format {
                TableFormat::Text => {
                    writeln!(out, "{}", rep.chain())?;
                    writeln!(out, "Moore bound: {}", rep.moore)?;
                    for step in &rep.steps {
                        writeln!(out, "  {step}")?;
                    }
                    writeln!(out, "upper bound: {}", rep.upper_bound())?;
                }
                TableFormat::Csv => {
                    writeln!(out, "z,r,moore,after_bosak,after_parity")?;
                    writeln!(out, "{z},{r},{},{},{}", rep.moore, rep.after_bosak, rep.after_parity)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Table { max_n, format } => {
            let rows = feasibility_table(max_n);
            let text = match format {
                TableFormat::Text => table_text(&rows),
                TableFormat::Csv => table_csv(&rows),
            };
            out.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Certify { q, output } => {
            let cert = transitivity_certificate(&field_new(q)?)?;
            let text = cert.to_text();
            match output {
                Some(path) => {
                    fs::write(path, &text)?;
                    writeln!(out, "{}/{} targets certified", cert.certified(), cert.order())?;
                }
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::Orbits { input, q, t, exact } => {
            let g = match (input, q) {
                (Some(path), _) => read_graph(&path)?,
                (None, Some(q)) => build_gqt(q, t, None)?.1,
                (None, None) => return Err(Error::InvalidParameter("need --input or --q".into())),
            };
            let part = refine(&g);
            writeln!(out, "refinement cells: {}", part.len())?;
            for (i, cell) in part.cells.iter().enumerate() {
                writeln!(out, "cell {i} (size {}): {}", cell.len(), join(cell))?;
            }
            if exact {
                let orbits = automorphism_orbits(&g);
                writeln!(out, "orbits: {}", orbits.len())?;
                for (i, orbit) in orbits.iter().enumerate() {
                    writeln!(out, "orbit {i} (size {}): {}", orbit.len(), join(orbit))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Export { input, format, output } => {
            let g = read_graph(&input)?;
            emit(out, output.as_deref(), &render(&g, format))?;
            Ok(EXIT_OK)
        }
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}
