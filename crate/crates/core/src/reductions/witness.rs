//! Executable form of "P is the projection of a face of Q".

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::stab::{check_nested_validity, find_extension, from_indicator, is_stable, weights_nonnegative, IntFace};
use crate::budget::Budget;
use crate::error::{Result, XcError};
use crate::graphs::Graph;
use crate::polyhedra::{canonicalize, face_vertices, point_label, verify_projection_equality, AffineMap, FaceSpec, LinIneq, Point, ProjectionReport, VPolytope};
use crate::ratmath::{format_rational, parse_rational, RatMatrix, Rational};

/// Host polytope of a reduction. Stable-set polytopes are kept implicit
/// because their vertex lists are far too long to materialise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TargetPolytope {
    Explicit(VPolytope),
    StableSets(Graph),
}

impl TargetPolytope {
    pub fn dim(&self) -> usize {
        match self {
            TargetPolytope::Explicit(p) => p.dim(),
            TargetPolytope::StableSets(g) => g.vertex_count(),
        }
    }

    pub fn coord_names(&self) -> Vec<String> {
        match self {
            TargetPolytope::Explicit(p) => p.coord_names().to_vec(),
            TargetPolytope::StableSets(g) => g.labels().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionWitness {
    pub name: String,
    pub source: VPolytope,
    pub target: TargetPolytope,
    pub face: FaceSpec,
    pub projection: AffineMap,
    /// `lifts[i]` is the target point chosen for `source.points()[i]`.
    pub lifts: Vec<Point>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub projection: ProjectionReport,
    pub lifts_checked: usize,
    /// First lift that failed, if any.
    pub bad_lift: Option<String>,
}

impl WitnessReport {
    pub fn verified(&self) -> bool {
        self.projection.equal && self.bad_lift.is_none()
    }
}

impl ReductionWitness {
    /// Checks the projection identity exhaustively and that every lift is a
    /// point of the face projecting back onto its source vertex.
    pub fn verify(&self, budget: &Budget) -> Result<WitnessReport> {
        if self.projection.in_dim() != self.target.dim() || self.projection.out_dim() != self.source.dim() {
            return Err(XcError::input(format!(
                "projection {}->{} does not connect target dimension {} to source dimension {}",
                self.projection.in_dim(),
                self.projection.out_dim(),
                self.target.dim(),
                self.source.dim()
            )));
        }
        if self.lifts.len() != self.source.len() {
            return Err(XcError::input(format!("{} lifts for {} source vertices", self.lifts.len(), self.source.len())));
        }
        let projection = match &self.target {
            TargetPolytope::Explicit(q) => {
                let face = face_vertices(q, &self.face)?;
                verify_projection_equality(&face, &self.projection, &self.source)?
            }
            TargetPolytope::StableSets(g) => self.stable_set_image(g, budget)?,
        };
        let mut bad_lift = None;
        for (s, t) in self.source.points().iter().zip(&self.lifts) {
            if let Some(problem) = self.lift_problem(s, t)? {
                bad_lift = Some(format!("lift of {}: {problem}", point_label(s)));
                break;
            }
        }
        Ok(WitnessReport { projection, lifts_checked: self.lifts.len(), bad_lift })
    }

    fn lift_problem(&self, s: &[Rational], t: &[Rational]) -> Result<Option<String>> {
        if t.len() != self.target.dim() {
            return Ok(Some(format!("length {} instead of {}", t.len(), self.target.dim())));
        }
        let member = match &self.target {
            TargetPolytope::Explicit(q) => q.points().iter().any(|p| p.as_slice() == t),
            TargetPolytope::StableSets(g) => from_indicator(t).is_some_and(|set| is_stable(g, &set)),
        };
        if !member {
            return Ok(Some("not a vertex of the target".into()));
        }
        if let Some(k) = self.face.equalities.iter().position(|h| !h.slack(t).is_zero()) {
            return Ok(Some(format!("face equality {k} is not tight")));
        }
        if self.projection.apply(t)? != s {
            return Ok(Some("projects elsewhere".into()));
        }
        Ok(None)
    }

    /// Image of the face of a stable-set polytope. For coordinate
    /// projections every candidate 0/1 image is tested for a preimage in the
    /// face; otherwise the face is enumerated.
    fn stable_set_image(&self, g: &Graph, budget: &Budget) -> Result<ProjectionReport> {
        let n = g.vertex_count();
        if self.face.equalities.iter().all(weights_nonnegative) {
            check_nested_validity(g, &self.face.equalities, budget)?;
        } else {
            return Err(XcError::input("stable-set faces need nonnegative equality coefficients"));
        }
        let face = IntFace::from_face(&self.face, n)?;
        let image_names = self.projection.out_names.clone();
        let image: Vec<Point> = match coordinate_selection(&self.projection) {
            Some(sel) => {
                budget.check_subsets("projection image candidates", sel.len())?;
                let mut image = Vec::new();
                for mask in 0u64..1 << sel.len() {
                    let mut fixed: Vec<Option<bool>> = vec![None; n];
                    let mut clash = false;
                    for (k, &v) in sel.iter().enumerate() {
                        let bit = mask >> k & 1 == 1;
                        match fixed[v] {
                            Some(b) if b != bit => clash = true,
                            _ => fixed[v] = Some(bit),
                        }
                    }
                    if !clash && find_extension(g, &face, fixed, budget)?.is_some() {
                        image.push((0..sel.len()).map(|k| if mask >> k & 1 == 1 { Rational::one() } else { Rational::zero() }).collect());
                    }
                }
                image
            }
            None => {
                let sets = super::stab::face_stable_sets(g, &face, budget)?;
                sets.iter().map(|s| self.projection.apply(&super::stab::indicator(s))).collect::<Result<_>>()?
            }
        };
        let image = canonicalize(&VPolytope::new(image_names, image)?).point_set();
        let expected = canonicalize(&self.source).point_set();
        let missing: Vec<Point> = expected.difference(&image).cloned().collect();
        let extra: Vec<Point> = image.difference(&expected).cloned().collect();
        Ok(ProjectionReport {
            equal: missing.is_empty() && extra.is_empty(),
            missing,
            extra,
            image_vertices: image.len(),
            expected_vertices: expected.len(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&WireWitness::from(self)).expect("witness serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let wire: WireWitness = serde_json::from_str(text).map_err(|e| XcError::input(format!("bad witness JSON: {e}")))?;
        wire.into_witness()
    }
}

/// Input coordinate picked by each output row, when the map is a pure
/// coordinate selection.
fn coordinate_selection(m: &AffineMap) -> Option<Vec<usize>> {
    if m.offset.iter().any(|o| !o.is_zero()) {
        return None;
    }
    (0..m.out_dim())
        .map(|r| {
            let row = m.matrix.row(r);
            let nz: Vec<usize> = (0..row.len()).filter(|&c| !row[c].is_zero()).collect();
            match nz[..] {
                [c] if row[c].is_one() => Some(c),
                _ => None,
            }
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct WirePolytope {
    coords: Vec<String>,
    points: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum WireTarget {
    Explicit { polytope: WirePolytope },
    StableSets { graph: String },
}

#[derive(Serialize, Deserialize)]
struct WireIneq {
    coeffs: Vec<String>,
    rhs: String,
}

#[derive(Serialize, Deserialize)]
struct WireMap {
    matrix: Vec<Vec<String>>,
    offset: Vec<String>,
    out_names: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct WireWitness {
    name: String,
    source: WirePolytope,
    target: WireTarget,
    face: Vec<WireIneq>,
    projection: WireMap,
    lifts: Vec<Vec<String>>,
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn rationals(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|s| parse_rational(s)).collect()
}

impl From<&VPolytope> for WirePolytope {
    fn from(p: &VPolytope) -> Self {
        WirePolytope { coords: p.coord_names().to_vec(), points: p.points().iter().map(|x| strings(x)).collect() }
    }
}

impl WirePolytope {
    fn into_polytope(self) -> Result<VPolytope> {
        let points = self.points.iter().map(|x| rationals(x)).collect::<Result<_>>()?;
        VPolytope::new(self.coords, points)
    }
}

impl From<&ReductionWitness> for WireWitness {
    fn from(w: &ReductionWitness) -> Self {
        let target = match &w.target {
            TargetPolytope::Explicit(p) => WireTarget::Explicit { polytope: p.into() },
            TargetPolytope::StableSets(g) => WireTarget::StableSets { graph: g.to_text() },
        };
        let m = &w.projection;
        WireWitness {
            name: w.name.clone(),
            source: (&w.source).into(),
            target,
            face: w.face.equalities.iter().map(|h| WireIneq { coeffs: strings(&h.coeffs), rhs: format_rational(&h.rhs) }).collect(),
            projection: WireMap {
                matrix: (0..m.out_dim()).map(|r| strings(m.matrix.row(r))).collect(),
                offset: strings(&m.offset),
                out_names: m.out_names.clone(),
            },
            lifts: w.lifts.iter().map(|x| strings(x)).collect(),
        }
    }
}

impl WireWitness {
    fn into_witness(self) -> Result<ReductionWitness> {
        let target = match self.target {
            WireTarget::Explicit { polytope } => TargetPolytope::Explicit(polytope.into_polytope()?),
            WireTarget::StableSets { graph } => TargetPolytope::StableSets(Graph::parse(&graph)?),
        };
        let equalities = self
            .face
            .iter()
            .map(|h| Ok(LinIneq::new(rationals(&h.coeffs)?, parse_rational(&h.rhs)?)))
            .collect::<Result<Vec<_>>>()?;
        let in_dim = target.dim();
        let rows = self.projection.matrix.iter().map(|r| rationals(r)).collect::<Result<Vec<_>>>()?;
        let matrix = RatMatrix::from_rows(in_dim, rows)?;
        let projection = AffineMap::new(matrix, rationals(&self.projection.offset)?, self.projection.out_names)?;
        let lifts = self.lifts.iter().map(|x| rationals(x)).collect::<Result<Vec<_>>>()?;
        Ok(ReductionWitness {
            name: self.name,
            source: self.source.into_polytope()?,
            target,
            face: FaceSpec::new(equalities),
            projection,
            lifts,
        })
    }
}
