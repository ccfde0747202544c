//! Command-line interface. [`run`] dispatches a parsed [`Cli`] and returns
//! the text for standard output; errors carry their exit codes.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::algebra::{make_group, Group};
use crate::error::{Error, Result};
use crate::flow::{count_flows, lift_integer, search_nowhere_zero, verify_flow, SearchOutcome};
use crate::fourflow::{cover4, gf4, glue_four, parity_from_flow};
use crate::generators::{cartesian_bundle, cartesian_product, gen_basic, BasicKind, BundleSpec};
use crate::glue::{glue_common, GlueInstance};
use crate::io;
use crate::multigraph::{EdgeSet, MultiGraph};

#[derive(Debug, Parser)]
#[command(name = "nzflow", version, about = "Nowhere-zero flows on multigraphs")]
pub struct Cli {
    /// Write the main output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check conservation and nowhere-zeroness of a flow.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        flow: PathBuf,
    },
    /// Find a nowhere-zero flow or prove there is none.
    Search {
        #[arg(long)]
        graph: PathBuf,
        /// `z:<k>` or `gf:<p>:<n>[:<c0,...,cn>]`
        #[arg(long)]
        group: String,
    },
    /// Count all flows (zero values allowed), listing them if few enough.
    Count {
        #[arg(long)]
        graph: PathBuf,
        /// `z:<k>` or `gf:<p>:<n>[:<c0,...,cn>]`
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 0)]
        enumerate_limit: u128,
    },
    /// Glue flows on two subgraphs sharing at most q-2 edges.
    Glue {
        #[command(flatten)]
        sides: Sides,
        /// `z:<k>` or `gf:<p>:<n>[:<c0,...,cn>]`
        #[arg(long)]
        group: String,
    },
    /// Glue 4-flows on two subgraphs sharing at most three connected edges.
    Glue4 {
        #[command(flatten)]
        sides: Sides,
    },
    /// 4-flow for a graph whose edges all lie on cycles of length at most 4.
    Cover4 {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Parity subgraph decomposition from a 4-flow (searched if not given).
    Parity {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        flow: Option<PathBuf>,
    },
    /// Lift a Z_k or GF(p) flow to an integer flow.
    Lift {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        flow: PathBuf,
    },
    /// Generate a graph.
    Gen {
        /// Also print a DOT description.
        #[arg(long)]
        dot: bool,
        #[command(subcommand)]
        kind: GenKind,
    },
}

#[derive(Debug, Args)]
pub struct Sides {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub sub1: PathBuf,
    #[arg(long)]
    pub sub2: PathBuf,
    /// Flow on the first side, listing its edges by ambient id.
    #[arg(long)]
    pub flow1: Option<PathBuf>,
    #[arg(long)]
    pub flow2: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// Cycle on n vertices (n = 2 gives a digon).
    Cycle { n: usize },
    /// Path on n vertices.
    Path { n: usize },
    /// Complete graph on n vertices.
    Complete { n: usize },
    /// The Petersen graph.
    Petersen,
    /// Cartesian product of two graph files.
    Product { a: PathBuf, b: PathBuf },
    /// Cartesian bundle with fiber-automorphism voltages.
    Bundle {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        fiber: PathBuf,
        /// Lines `edge_id: permutation`; unlisted edges carry the identity.
        #[arg(long)]
        voltages: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))
}

fn graph(path: &Path) -> Result<MultiGraph> {
    io::parse_graph(&read(path)?)
}

fn group(desc: &str) -> Result<Group> {
    make_group(desc)
}

struct LoadedSides {
    g: MultiGraph,
    s1: EdgeSet,
    s2: EdgeSet,
    flows: [Option<crate::flow::Flow>; 2],
}

fn load_sides(s: &Sides) -> Result<LoadedSides> {
    let g = graph(&s.graph)?;
    let s1 = io::parse_edge_set(&read(&s.sub1)?, &g)?;
    let s2 = io::parse_edge_set(&read(&s.sub2)?, &g)?;
    let load = |p: &Option<PathBuf>, side: &EdgeSet| -> Result<Option<crate::flow::Flow>> {
        p.as_ref()
            .map(|p| io::parse_side_flow(&read(p)?, &g, side))
            .transpose()
    };
    let flows = [load(&s.flow1, &s1)?, load(&s.flow2, &s2)?];
    Ok(LoadedSides { g, s1, s2, flows })
}

/// Run a command, returning its standard output. Diagnostics go to the log.
pub fn execute(command: &Command) -> Result<String> {
    match command {
        Command::Verify { graph: gp, flow } => {
            let g = graph(gp)?;
            let f = io::parse_flow(&read(flow)?, &g)?;
            let check = verify_flow(&g, &f)?;
            let residuals: Vec<String> = check
                .residuals
                .iter()
                .map(|&r| f.group.format_element(r))
                .collect();
            let text = format!(
                "valid {}\nnowhere-zero {}\nresiduals {}\n",
                check.valid,
                check.nowhere_zero,
                residuals.join(" ")
            );
            if check.valid {
                Ok(text)
            } else {
                Err(Error::InvalidFlow(format!("not conservative\n{text}")))
            }
        }
        Command::Search {
            graph: gp,
            group: desc,
        } => {
            let g = graph(gp)?;
            let a = group(desc)?;
            match search_nowhere_zero(&g, &a)? {
                SearchOutcome::Found { flow, candidates } => {
                    log::info!("found after {candidates} candidates");
                    Ok(io::format_flow(&flow))
                }
                SearchOutcome::NoneExists { candidates } => Err(Error::NoFlow {
                    what: gp.display().to_string(),
                    group: a.descriptor(),
                    candidates,
                }),
            }
        }
        Command::Count {
            graph: gp,
            group: desc,
            enumerate_limit,
        } => {
            let g = graph(gp)?;
            let c = count_flows(&g, &group(desc)?, *enumerate_limit)?;
            let mut out = format!("count {}\n", c.count);
            for f in c.flows.iter().flatten() {
                out.push('\n');
                out.push_str(&io::format_flow(f));
            }
            Ok(out)
        }
        Command::Glue { sides, group: desc } => {
            let l = load_sides(sides)?;
            let out = glue_common(&GlueInstance {
                graph: l.g,
                sides: [l.s1, l.s2],
                flows: l.flows,
                group: group(desc)?,
            })?;
            log::info!("exponent j = {}", out.exponent);
            Ok(io::format_flow(&out.flow))
        }
        Command::Glue4 { sides } => {
            let l = load_sides(sides)?;
            let out = glue_four(
                &l.g,
                &l.s1,
                &l.s2,
                [l.flows[0].as_ref(), l.flows[1].as_ref()],
            )?;
            for step in &out.report.steps {
                log::info!("{step:?}");
            }
            Ok(io::format_flow(&out.flow))
        }
        Command::Cover4 { graph: gp } => {
            let g = graph(gp)?;
            let out = cover4(&g)?;
            log::info!(
                "{} cycles, {} fallback searches",
                out.cycles.len(),
                out.report.fallback_searches
            );
            Ok(io::format_flow(&out.flow))
        }
        Command::Parity { graph: gp, flow } => {
            let g = graph(gp)?;
            let f = match flow {
                Some(p) => io::parse_flow(&read(p)?, &g)?,
                None => {
                    let a = gf4();
                    match search_nowhere_zero(&g, &a)? {
                        SearchOutcome::Found { flow, .. } => flow,
                        SearchOutcome::NoneExists { candidates } => {
                            return Err(Error::NoFlow {
                                what: gp.display().to_string(),
                                group: a.descriptor(),
                                candidates,
                            })
                        }
                    }
                }
            };
            Ok(io::format_parity(&parity_from_flow(&g, &f)?))
        }
        Command::Lift { graph: gp, flow } => {
            let g = graph(gp)?;
            let f = io::parse_flow(&read(flow)?, &g)?;
            Ok(io::format_integer_flow(&lift_integer(&g, &f)?))
        }
        Command::Gen { dot, kind } => {
            let g = match kind {
                GenKind::Cycle { n } => gen_basic(BasicKind::Cycle, Some(*n))?,
                GenKind::Path { n } => gen_basic(BasicKind::Path, Some(*n))?,
                GenKind::Complete { n } => gen_basic(BasicKind::Complete, Some(*n))?,
                GenKind::Petersen => gen_basic(BasicKind::Petersen, None)?,
                GenKind::Product { a, b } => cartesian_product(&graph(a)?, &graph(b)?).graph,
                GenKind::Bundle {
                    base,
                    fiber,
                    voltages,
                } => {
                    let mut spec = BundleSpec::untwisted(graph(base)?, graph(fiber)?);
                    if let Some(v) = voltages {
                        spec.voltages = io::parse_voltages(
                            &read(v)?,
                            spec.base.edge_count(),
                            spec.fiber.vertex_count(),
                        )?;
                    }
                    cartesian_bundle(&spec)?
                }
            };
            let mut out = io::format_graph(&g);
            if *dot {
                out.push_str(&io::to_dot(&g, None));
            }
            Ok(out)
        }
    }
}

/// Execute and write the output, returning the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let result = execute(&cli.command).and_then(|text| match &cli.out {
        Some(p) => fs::write(p, text)
            .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
