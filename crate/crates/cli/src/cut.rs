use std::path::PathBuf;

use anyhow::Result;
use clap::Subcommand;
use serde_json::json;
use xclab_core::cutpoly::{
    clique_point, covariance_check, cut_polytope, is_suspension, mstar, mstar_embedding, negtype_row, pn_membership, slack_formula_check,
};
use xclab_core::graphs::{complete_graph, max_clique, suspension};
use xclab_core::polyhedra::format_point;
use xclab_core::ratmath::parse_rational;
use xclab_core::{Rational, XcError};

use crate::report::Outcome;
use crate::{input, Ctx};

#[derive(Subcommand)]
pub enum CutCmd {
    /// Vertices of the cut polytope of a graph.
    Build {
        #[arg(long, conflicts_with = "complete")]
        graph: Option<PathBuf>,
        /// Use K_n.
        #[arg(long)]
        complete: Option<usize>,
    },
    /// The matrix M*(n).
    Mstar {
        #[arg(long)]
        n: usize,
    },
    /// Check that the negative-type row family of K_n has slack matrix M*(n-1).
    EmbedCheck {
        #[arg(long)]
        n: usize,
    },
    /// Check slack (|S|-1)^2 of every cut against the full row.
    SlackCheck {
        #[arg(long)]
        n: usize,
    },
    /// Test a point against the row family P_n.
    Membership {
        /// File with one line of rationals in edge order.
        #[arg(long, requires = "n", conflicts_with = "graph")]
        point: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        /// Suspension graph; tests its clique point for --k.
        #[arg(long, requires = "k")]
        graph: Option<PathBuf>,
        #[arg(long)]
        k: Option<usize>,
        /// Suspend the --graph first.
        #[arg(long)]
        suspend: bool,
    },
    /// The clique-test point of a suspension graph.
    CliquePoint {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        suspend: bool,
    },
    /// Check the covariance map is a bijection CUT(K_n+1) -> COR_n.
    CovarianceCheck {
        #[arg(long)]
        n: usize,
    },
}

impl CutCmd {
    pub fn name(&self) -> &'static str {
        match self {
            CutCmd::Build { .. } => "build",
            CutCmd::Mstar { .. } => "mstar",
            CutCmd::EmbedCheck { .. } => "embed-check",
            CutCmd::SlackCheck { .. } => "slack-check",
            CutCmd::Membership { .. } => "membership",
            CutCmd::CliquePoint { .. } => "clique-point",
            CutCmd::CovarianceCheck { .. } => "covariance-check",
        }
    }
}

fn read_point(path: &std::path::Path) -> Result<Vec<Rational>> {
    let text = input::read(path)?;
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or_else(|| XcError::input("point file is empty"))?;
    Ok(line.split_whitespace().map(parse_rational).collect::<Result<Vec<_>, _>>()?)
}

fn suspended_graph(path: &std::path::Path, suspend: bool) -> Result<xclab_core::Graph> {
    let g = input::graph(path)?;
    Ok(if suspend { suspension(&g) } else { g })
}

pub fn run(cmd: &CutCmd, ctx: &Ctx) -> Result<Outcome> {
    let budget = &ctx.budget;
    match cmd {
        CutCmd::Build { graph, complete } => {
            let g = match (graph, complete) {
                (Some(p), _) => input::graph(p)?,
                (None, Some(n)) => complete_graph(*n)?,
                (None, None) => return Err(XcError::input("give --graph or --complete").into()),
            };
            let p = cut_polytope(&g, budget)?;
            Ok(Outcome::ok(json!({ "dimension": p.dim(), "coords": p.coord_names() }))
                .count("vertices", p.len())
                .with_artifact(p.to_text()))
        }
        CutCmd::Mstar { n } => {
            let m = mstar(*n, budget)?;
            Ok(Outcome::ok(json!({ "n": n, "size": m.rows(), "rank": m.rank() })).with_artifact(m.to_string()))
        }
        CutCmd::EmbedCheck { n } => {
            let r = mstar_embedding(*n, budget)?;
            let msg = format!("M equals mstar({})", n - 1);
            Ok(Outcome::ok(json!({ "n": r.n, "size": r.size, "result": msg })))
        }
        CutCmd::SlackCheck { n } => {
            let r = slack_formula_check(*n, budget)?;
            Ok(Outcome::ok(json!({ "n": r.n, "result": "slack equals (|S|-1)^2 for every S" })).count("cuts", r.checked))
        }
        CutCmd::Membership { point, n, graph, k, suspend } => {
            let (x, n, omega) = match (point, graph) {
                (Some(p), _) => (read_point(p)?, n.expect("clap enforces --n"), None),
                (None, Some(gp)) => {
                    let g = suspended_graph(gp, *suspend)?;
                    let k = k.expect("clap enforces --k");
                    let x = clique_point(&g, k)?;
                    let base = g.without_vertex(g.vertex_count() - 1);
                    (x, g.vertex_count(), Some(max_clique(&base, budget)?))
                }
                (None, None) => return Err(XcError::input("give --point and --n, or --graph and --k").into()),
            };
            let hit = pn_membership(&x, n, budget)?;
            let mut payload = json!({
                "n": n,
                "member": hit.is_none(),
                "violated_row": hit,
                "row": hit.as_ref().map(|t| negtype_row(n, t).map(|h| h.to_string())).transpose()?,
            });
            if let Some(w) = omega {
                payload["base_clique_number"] = json!(w);
            }
            Ok(Outcome::ok(payload))
        }
        CutCmd::CliquePoint { graph, k, suspend } => {
            let g = suspended_graph(graph, *suspend)?;
            if !is_suspension(&g) {
                return Err(XcError::input("the last vertex must be adjacent to all others (or pass --suspend)").into());
            }
            let x = clique_point(&g, *k)?;
            Ok(Outcome::ok(json!({ "n": g.vertex_count(), "k": k, "point": format_point(&x) })).with_artifact(format!("{}\n", format_point(&x))))
        }
        CutCmd::CovarianceCheck { n } => {
            let r = covariance_check(*n, budget)?;
            let payload = json!({
                "n": r.n,
                "cut_vertices": r.cut_vertices,
                "correlation_vertices": r.correlation_vertices,
                "injective": r.injective,
                "projection_equal": r.projection.equal,
            });
            Ok(Outcome::check(r.bijective(), payload))
        }
    }
}
