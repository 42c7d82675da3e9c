//! Ideals attached to Hodge classes of linear spaces: plane decompositions,
//! the associated Gorenstein ideal (shortcut and general constructions), and
//! tangent codimensions of Hodge loci.

pub mod associated;
pub mod general;
pub mod plane;
pub mod tangent;

pub use associated::{associated_ideal_from_decomposition, associated_ideal_with_order, check_degree_range, check_gorenstein, AssociatedIdeal, GorensteinReport};
pub use general::{associated_ideal_general, associated_ideal_in, plane_representative, representative_from_ideal, JacobianRing};
pub use plane::{plane_decomposition, LinearSpacePlane, PlaneDecomposition};
pub use tangent::{identification_holds, jacobian_contained, jacobian_contained_in_degree, joint_tangent_codim, tangent_codim, TangentCodim};
