//! Reductions between 0/1 polytopes. Each construction returns a
//! [`ReductionWitness`]: a face of the target, an affine projection onto the
//! source and an explicit lift of every source vertex, which
//! [`ReductionWitness::verify`] checks exhaustively.

mod cnf;
mod cubic;
mod planar;
mod sat;
mod stab;
mod subset_sum;
mod suspend;
mod tdm;
mod witness;

pub use cnf::{sat_polytope, Cnf3};
pub use cubic::{cubic_step, make_cubic, CubicReport, CubicStepKind};
pub use planar::{gadget_table, gadget_table_text, planarize, CrossingGadget, Planarized, DEFAULT_GADGET, GADGET_ENV, GADGET_FACE_RHS};
pub use sat::{phi_m, phi_m_lift_counts};
pub use stab::{is_stable, stab_polytope};
pub use subset_sum::{sat_to_subsetsum, subset_sum_points, subsetsum_polytope, SubsetSumInstance};
pub use suspend::suspension_reduction;
pub use tdm::{sat_to_3dm, tdm_polytope, TdmReduction, VariableGadget3DM};
pub use witness::{ReductionWitness, TargetPolytope, WitnessReport};
