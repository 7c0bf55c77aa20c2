//! Exact-arithmetic computation of the Hermitian eigenvalue cone Gamma_n(s):
//! its Klyachko inequality description, regular facets, the basic extremal
//! rays attached to modular intersection loci, induction from the product of
//! smaller cones, and the recursive enumeration of all extremal rays at desk
//! scale.
//!
//! Every computation is over arbitrary-precision rationals; there are no
//! tolerances anywhere.

pub mod cone;
pub mod error;
pub mod ratlinalg;
pub mod rays;
pub mod schubert;
pub mod verify;
pub mod weights;

pub use cone::{enumerate_facets, is_member, FacetDescriptor, DEFAULT_BUDGET};
pub use error::{Error, Result};
pub use rays::{all_extremal_rays, basic_ray, induct, Ray};
pub use schubert::{intersection_number, BoxPartition, SchubertIndex};
pub use weights::{invariant_dimension, kappa, DominantWeight, KappaPoint, KappaTuple};
