//! Exact structure-constant kernel for Brzeziński crossed products of finite-dimensional
//! algebras: axiom checkers, the crossed-product construction, invariance under twisting
//! with a certified isomorphism, example families from quasi-Hopf smash products, and a
//! canonical JSON interchange format.

pub mod algebra;
pub mod corpus;
pub mod crossed;
pub mod error;
pub mod io;
pub mod report;
pub mod tensor;
pub mod twist;

pub use algebra::{algebra_from_group, check_algebra, mu2, opposite_unit_insertion, Algebra, PointedSpace};
pub use crossed::{
    build_crossed_product, check_brz_axioms, check_twisting_map, twisted_tensor_product, CrossedData, TwistingMapData,
};
pub use error::{Error, Result};
pub use report::{AxiomReport, Check, Law};
pub use tensor::{flat_index, unflatten, Field, LinMap, Scalar};
pub use twist::{
    apply_twist, check_twist_conditions, make_r_prime, make_sigma_prime, specialize_ttp, verify_twist_result,
    TwistPair, TwistResult,
};
