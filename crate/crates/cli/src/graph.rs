use std::path::PathBuf;

use anyhow::Result;
use clap::{Subcommand, ValueEnum};
use serde_json::json;
use xclab_core::cutpoly::minor_witness;
use xclab_core::graphs::{self, circular_crossings, minor_step};
use xclab_core::{Graph, MinorOp};

use crate::report::Outcome;
use crate::{input, Ctx};

#[derive(Clone, Copy, ValueEnum)]
pub enum Family {
    Complete,
    Cycle,
    Path,
    Empty,
    Star,
    /// K_{1,n,n}.
    Tripartite,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum MinorKind {
    DeleteEdge,
    DeleteVertex,
    Contract,
}

#[derive(Subcommand)]
pub enum GraphCmd {
    /// Emit a standard graph, optionally suspended.
    Family {
        #[arg(long, value_enum)]
        kind: Family,
        #[arg(long)]
        n: usize,
        /// Add an apex adjacent to every vertex.
        #[arg(long)]
        suspend: bool,
    },
    /// Apply one minor operation and check the cut-polytope projection.
    Minor {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        op: MinorKind,
        /// Vertex label (deletion) or first endpoint.
        #[arg(long)]
        u: String,
        /// Second endpoint for edge operations.
        #[arg(long)]
        v: Option<String>,
    },
    /// Crossings of the drawing with vertices on a circle.
    Crossings {
        #[arg(long)]
        graph: PathBuf,
    },
}

impl GraphCmd {
    pub fn name(&self) -> &'static str {
        match self {
            GraphCmd::Family { .. } => "family",
            GraphCmd::Minor { .. } => "minor",
            GraphCmd::Crossings { .. } => "crossings",
        }
    }
}

pub fn run(cmd: &GraphCmd, ctx: &Ctx) -> Result<Outcome> {
    match cmd {
        GraphCmd::Family { kind, n, suspend } => {
            let mut g = match kind {
                Family::Complete => graphs::complete_graph(*n)?,
                Family::Cycle => graphs::cycle_graph(*n)?,
                Family::Path => graphs::path_graph(*n)?,
                Family::Empty => graphs::empty_graph(*n),
                Family::Star => graphs::star_graph(*n)?,
                Family::Tripartite => graphs::complete_tripartite_1nn(*n)?,
            };
            if *suspend {
                g = graphs::suspension(&g);
            }
            Ok(graph_outcome(&g))
        }
        GraphCmd::Minor { graph, op, u, v } => {
            let g = input::graph(graph)?;
            let need_v = || v.clone().ok_or_else(|| xclab_core::XcError::input("edge operations need --v"));
            let op = match op {
                MinorKind::DeleteEdge => MinorOp::DeleteEdge(u.clone(), need_v()?),
                MinorKind::DeleteVertex => MinorOp::DeleteVertex(u.clone()),
                MinorKind::Contract => MinorOp::ContractEdge(u.clone(), need_v()?),
            };
            let minor = minor_step(&g, &op)?;
            let w = minor_witness(&g, &op, &ctx.budget)?;
            let r = w.verify()?;
            let payload = json!({
                "operation": format!("{op:?}"),
                "minor_vertices": minor.vertex_count(),
                "minor_edges": minor.edge_count(),
                "face_equalities": w.face.equalities.len(),
                "projection_equal": r.equal,
                "image_vertices": r.image_vertices,
                "expected_vertices": r.expected_vertices,
            });
            Ok(Outcome::check(r.equal, payload).with_artifact(minor.to_text()))
        }
        GraphCmd::Crossings { graph } => {
            let g = input::graph(graph)?;
            let cs = circular_crossings(&g);
            let list: Vec<_> = cs
                .iter()
                .map(|c| {
                    json!({
                        "edge_a": g.edge_name(c.edge_a),
                        "edge_b": g.edge_name(c.edge_b),
                        "order_on_a": c.order_on_a,
                        "order_on_b": c.order_on_b,
                    })
                })
                .collect();
            let text: String = cs.iter().map(|c| format!("{} {}\n", g.edge_name(c.edge_a), g.edge_name(c.edge_b))).collect();
            Ok(Outcome::ok(json!({ "crossings": list })).count("crossings", cs.len()).with_artifact(text))
        }
    }
}

pub fn graph_outcome(g: &Graph) -> Outcome {
    Outcome::ok(json!({ "vertices": g.vertex_count(), "edges": g.edge_count(), "graph": g.to_text() })).with_artifact(g.to_text())
}
