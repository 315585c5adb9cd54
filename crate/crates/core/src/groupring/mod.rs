//! Group algebra over permutations of dart (or flag) labels with Laurent
//! polynomial coefficients: products, projections, face projections, cyclic
//! sums and face elements.

pub mod element;
pub mod face;
pub mod perm;

pub use element::{union_support, GroupRingElem};
pub use face::{
    cyclic_sum_element, distribution_from_scalar, euler_calibration, face_element, face_element_size,
    genus_poly_from_face_element, Calibration, Mode,
};
pub use perm::{cyclic_orders, Perm};
