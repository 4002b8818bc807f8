use std::path::{Path, PathBuf};

use anyhow::Result;
use clap::{Subcommand, ValueEnum};
use serde_json::{json, Value};
use xclab_core::reductions::{
    cubic_step, make_cubic, phi_m, phi_m_lift_counts, planarize, sat_to_3dm, sat_to_subsetsum, suspension_reduction, CrossingGadget,
    CubicStepKind, ReductionWitness,
};
use xclab_core::XcError;

use crate::report::Outcome;
use crate::{input, Ctx};

#[derive(Clone, Copy, ValueEnum)]
pub enum StepKind {
    ReduceDegree,
    RemoveBridge,
    RemoveTerminal,
}

impl From<StepKind> for CubicStepKind {
    fn from(k: StepKind) -> Self {
        match k {
            StepKind::ReduceDegree => CubicStepKind::ReduceDegree,
            StepKind::RemoveBridge => CubicStepKind::RemoveBridge,
            StepKind::RemoveTerminal => CubicStepKind::RemoveTerminal,
        }
    }
}

#[derive(Subcommand)]
pub enum ReduceCmd {
    /// CUT(K_m) as a face projection of the formula phi_m.
    PhiM {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        witness_out: Option<PathBuf>,
    },
    /// 3-SAT to subset sum.
    Sat2ss {
        #[arg(long)]
        cnf: PathBuf,
        /// Print the digit table instead of the report.
        #[arg(long)]
        table: bool,
        #[arg(long)]
        witness_out: Option<PathBuf>,
    },
    /// 3-SAT to 3-dimensional matching.
    Sat23dm {
        #[arg(long)]
        cnf: PathBuf,
        #[arg(long)]
        witness_out: Option<PathBuf>,
    },
    /// Replace every crossing of the circular drawing by a gadget.
    Planarize {
        #[arg(long)]
        graph: PathBuf,
        /// Gadget file; falls back to $XCLAB_GADGET, then the built-in one.
        #[arg(long)]
        gadget: Option<PathBuf>,
        #[arg(long)]
        witness_out: Option<PathBuf>,
    },
    /// One cubic replacement step, or the full schedule when --step is absent.
    Cubic {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, requires = "vertex")]
        step: Option<StepKind>,
        #[arg(long, requires = "step")]
        vertex: Option<String>,
        #[arg(long)]
        witness_out: Option<PathBuf>,
    },
    /// CUT(G) as a face projection of CUT(suspension(G)).
    Suspend {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        witness_out: Option<PathBuf>,
    },
}

impl ReduceCmd {
    pub fn name(&self) -> &'static str {
        match self {
            ReduceCmd::PhiM { .. } => "phi-m",
            ReduceCmd::Sat2ss { .. } => "sat2ss",
            ReduceCmd::Sat23dm { .. } => "sat23dm",
            ReduceCmd::Planarize { .. } => "planarize",
            ReduceCmd::Cubic { .. } => "cubic",
            ReduceCmd::Suspend { .. } => "suspend",
        }
    }
}

/// Verifies `w`, writes it if asked, and merges the check into `payload`.
fn finish(w: &ReductionWitness, out: Option<&Path>, mut payload: Value, ctx: &Ctx) -> Result<Outcome> {
    if let Some(path) = out {
        input::write(path, &w.to_json())?;
    }
    let r = w.verify(&ctx.budget)?;
    payload["witness"] = json!({
        "name": w.name,
        "source_vertices": w.source.len(),
        "face_equalities": w.face.equalities.len(),
        "projection_equal": r.projection.equal,
        "image_vertices": r.projection.image_vertices,
        "lifts_checked": r.lifts_checked,
        "bad_lift": r.bad_lift,
    });
    Ok(Outcome::check(r.verified(), payload))
}

fn load_gadget(path: Option<&Path>) -> Result<CrossingGadget> {
    Ok(match path {
        Some(p) => CrossingGadget::load(p)?,
        None => CrossingGadget::from_env()?,
    })
}

pub fn run(cmd: &ReduceCmd, ctx: &Ctx) -> Result<Outcome> {
    let budget = &ctx.budget;
    match cmd {
        ReduceCmd::PhiM { m, witness_out } => {
            let (f, w) = phi_m(*m, budget)?;
            let payload = json!({
                "variables": f.var_count(),
                "clauses": f.clauses().len(),
                "lift_counts": phi_m_lift_counts(&w)?,
            });
            Ok(finish(&w, witness_out.as_deref(), payload, ctx)?.with_artifact(f.to_dimacs()))
        }
        ReduceCmd::Sat2ss { cnf, table, witness_out } => {
            let f = input::cnf(cnf)?;
            let (inst, w) = sat_to_subsetsum(&f, budget)?;
            let payload = json!({
                "numbers": inst.names.iter().zip(&inst.digits).map(|(n, d)| json!([n, d])).collect::<Vec<_>>(),
                "target": inst.target_digits,
                "max_column_sum": inst.max_column_sum(),
            });
            let out = finish(&w, witness_out.as_deref(), payload, ctx)?;
            Ok(if *table { out.with_artifact(inst.table_text()) } else { out })
        }
        ReduceCmd::Sat23dm { cnf, witness_out } => {
            let f = input::cnf(cnf)?;
            let red = sat_to_3dm(&f, budget)?;
            let h = &red.hypergraph;
            let text: String = (0..h.triples().len()).map(|k| format!("{}\n", h.triple_name(k))).collect();
            let payload = json!({
                "vertices": h.vertex_count(),
                "triples": h.triples().len(),
                "clause_triples": red.clause_triples,
            });
            Ok(finish(&red.witness, witness_out.as_deref(), payload, ctx)?.with_artifact(text))
        }
        ReduceCmd::Planarize { graph, gadget, witness_out } => {
            let g = input::graph(graph)?;
            let gadget = load_gadget(gadget.as_deref())?;
            let p = planarize(&g, &gadget, budget)?;
            let payload = json!({
                "crossings": p.crossings,
                "vertices": p.graph.vertex_count(),
                "edges": p.graph.edge_count(),
            });
            Ok(finish(&p.witness, witness_out.as_deref(), payload, ctx)?.with_artifact(p.graph.to_text()))
        }
        ReduceCmd::Cubic { graph, step, vertex, witness_out } => {
            let g = input::graph(graph)?;
            let (h, w, steps) = match (step, vertex) {
                (Some(kind), Some(label)) => {
                    let v = g.index_of(label).ok_or_else(|| XcError::input(format!("no vertex {label}")))?;
                    let kind = CubicStepKind::from(*kind);
                    let (h, w) = cubic_step(&g, kind, v, budget)?;
                    (h, w, vec![(kind.to_string(), label.clone())])
                }
                _ => {
                    let r = make_cubic(&g, budget)?;
                    let steps = r.steps.iter().map(|(k, l)| (k.to_string(), l.clone())).collect();
                    (r.graph, r.witness, steps)
                }
            };
            let payload = json!({
                "steps": steps,
                "input": [g.vertex_count(), g.edge_count()],
                "output": [h.vertex_count(), h.edge_count()],
            });
            Ok(finish(&w, witness_out.as_deref(), payload, ctx)?.with_artifact(h.to_text()))
        }
        ReduceCmd::Suspend { graph, witness_out } => {
            let g = input::graph(graph)?;
            let w = suspension_reduction(&g, budget)?;
            finish(&w, witness_out.as_deref(), json!({ "vertices": g.vertex_count() + 1 }), ctx)
        }
    }
}
