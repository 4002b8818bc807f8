use std::path::PathBuf;

use anyhow::Result;
use clap::Subcommand;
use serde_json::json;
use xclab_core::polyhedra::{
    ef_from_factorization, face_vertices, facet_enumeration, format_point, inequalities_to_text, point_label, project, slack_matrix,
};
use xclab_core::reductions::ReductionWitness;
use xclab_core::{AffineMap, FaceSpec, RatMatrix, XcError};

use crate::report::Outcome;
use crate::{input, Ctx};

#[derive(Subcommand)]
pub enum PolyCmd {
    /// Facets and hull equalities of a V-polytope.
    Facets {
        #[arg(long)]
        polytope: PathBuf,
    },
    /// Image under a coordinate selection or a linear map.
    Project {
        #[arg(long)]
        polytope: PathBuf,
        /// Comma-separated coordinate names to keep, in output order.
        #[arg(long, conflicts_with = "matrix")]
        keep: Option<String>,
        /// Matrix file with one row per output coordinate.
        #[arg(long)]
        matrix: Option<PathBuf>,
    },
    /// Vertices on which every listed (valid) inequality is tight.
    Face {
        #[arg(long)]
        polytope: PathBuf,
        #[arg(long)]
        ineqs: PathBuf,
    },
    /// Slack matrix of valid inequalities against the vertices.
    Slack {
        #[arg(long)]
        polytope: PathBuf,
        #[arg(long)]
        ineqs: PathBuf,
    },
    /// Re-check a reduction witness bundle (JSON).
    Verify {
        #[arg(long)]
        witness: PathBuf,
    },
    /// Build and check the extension given by a nonnegative factorization of
    /// the slack matrix.
    Ef {
        #[arg(long)]
        polytope: PathBuf,
        /// Inequalities; defaults to the enumerated facets.
        #[arg(long)]
        ineqs: Option<PathBuf>,
        /// Hull equalities accompanying --ineqs.
        #[arg(long)]
        equalities: Option<PathBuf>,
        #[arg(long, requires = "r")]
        q: Option<PathBuf>,
        #[arg(long, requires = "q")]
        r: Option<PathBuf>,
        /// Use Q = slack matrix, R = identity.
        #[arg(long, conflicts_with_all = ["q", "r"])]
        identity: bool,
    },
}

impl PolyCmd {
    pub fn name(&self) -> &'static str {
        match self {
            PolyCmd::Facets { .. } => "facets",
            PolyCmd::Project { .. } => "project",
            PolyCmd::Face { .. } => "face",
            PolyCmd::Slack { .. } => "slack",
            PolyCmd::Verify { .. } => "verify",
            PolyCmd::Ef { .. } => "ef",
        }
    }
}

pub fn run(cmd: &PolyCmd, ctx: &Ctx) -> Result<Outcome> {
    let budget = &ctx.budget;
    match cmd {
        PolyCmd::Facets { polytope } => {
            let p = input::polytope(polytope)?;
            let f = facet_enumeration(&p, budget)?;
            let names = p.coord_names();
            let payload = json!({
                "dimension": f.dimension,
                "facets": f.facets.iter().map(|h| h.pretty(names)).collect::<Vec<_>>(),
                "equalities": f.equalities.iter().map(|h| h.pretty(names)).collect::<Vec<_>>(),
            });
            Ok(Outcome::ok(payload)
                .count("facets", f.facets.len())
                .count("equalities", f.equalities.len())
                .with_artifact(inequalities_to_text(&f.facets)))
        }
        PolyCmd::Project { polytope, keep, matrix } => {
            let p = input::polytope(polytope)?;
            let map = match (keep, matrix) {
                (Some(k), _) => {
                    let idx = k
                        .split(',')
                        .map(|name| {
                            let name = name.trim();
                            p.coord_names().iter().position(|c| c == name).ok_or_else(|| XcError::input(format!("no coordinate {name}")))
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    AffineMap::coordinate_projection(p.coord_names(), &idx)?
                }
                (None, Some(path)) => {
                    let m = input::matrix(path)?;
                    let names = (1..=m.rows()).map(|i| format!("y{i}")).collect();
                    AffineMap::linear(m, names)?
                }
                (None, None) => return Err(XcError::input("give --keep or --matrix").into()),
            };
            let image = project(&p, &map)?;
            Ok(Outcome::ok(json!({ "dimension": image.dim(), "vertices": image.len() })).with_artifact(image.to_text()))
        }
        PolyCmd::Face { polytope, ineqs } => {
            let p = input::polytope(polytope)?;
            let face = face_vertices(&p, &FaceSpec::new(input::inequalities(ineqs)?))?;
            let labels: Vec<String> = face.points().iter().map(|x| point_label(x)).collect();
            Ok(Outcome::ok(json!({ "vertices": labels })).count("vertices", face.len()).with_artifact(face.to_text()))
        }
        PolyCmd::Slack { polytope, ineqs } => {
            let p = input::polytope(polytope)?;
            let s = slack_matrix(&input::inequalities(ineqs)?, &p)?;
            let payload = json!({ "rows": s.row_labels, "cols": s.col_labels, "rank": s.matrix.rank() });
            Ok(Outcome::ok(payload).with_artifact(s.matrix.to_string()))
        }
        PolyCmd::Verify { witness } => {
            let w = ReductionWitness::from_json(&input::read(witness)?)?;
            let r = w.verify(budget)?;
            let payload = json!({
                "name": w.name,
                "projection_equal": r.projection.equal,
                "image_vertices": r.projection.image_vertices,
                "expected_vertices": r.projection.expected_vertices,
                "missing": r.projection.missing.iter().map(|x| point_label(x)).collect::<Vec<_>>(),
                "extra": r.projection.extra.iter().map(|x| point_label(x)).collect::<Vec<_>>(),
                "lifts_checked": r.lifts_checked,
                "bad_lift": r.bad_lift,
                "face_equalities": w.face.equalities.len(),
            });
            Ok(Outcome::check(r.verified(), payload))
        }
        PolyCmd::Ef { polytope, ineqs, equalities, q, r, identity } => {
            let p = input::polytope(polytope)?;
            let (ineqs, eqs) = match ineqs {
                Some(path) => {
                    let eqs = match equalities {
                        Some(e) => input::inequalities(e)?,
                        None => Vec::new(),
                    };
                    (input::inequalities(path)?, eqs)
                }
                None => {
                    let f = facet_enumeration(&p, budget)?;
                    (f.facets, f.equalities)
                }
            };
            let (q, r) = match (q, r, identity) {
                (Some(q), Some(r), _) => (input::matrix(q)?, input::matrix(r)?),
                (_, _, true) => (slack_matrix(&ineqs, &p)?.matrix, RatMatrix::identity(p.len())),
                _ => return Err(XcError::input("give --q and --r, or --identity").into()),
            };
            let report = ef_from_factorization(&ineqs, &eqs, &q, &r, &p, budget)?;
            let payload = json!({
                "columns": report.columns,
                "lifts_ok": report.lifts_ok,
                "extension_vertices": report.extension_vertices,
                "projection_equal": report.projection.equal,
            });
            let text = format!("# [A | Q | b] then hull equalities\n{}", report.system);
            let mut out = Outcome::check(report.verified(), payload).with_artifact(text);
            if !report.projection.missing.is_empty() {
                out.message = Some(format!("first missing vertex {}", format_point(&report.projection.missing[0])));
            }
            Ok(out)
        }
    }
}
