//! Reflection groups of the hyperbolic simplices Δⁿ, the finite symmetry
//! groups Σⁿ, the order-8 symmetry Ā of P⁶ and the volume constants.

mod constants;
mod group;
mod simplex;
mod symmetry;

pub use constants::{
    bernoulli, catalan, constants, dirichlet_beta4, index_gamma2, sigma_order, zeta3,
    GroupConstants, PiMultiple, Volume,
};
pub use group::{group_orbit, FiniteSymmetryGroup};
pub use simplex::{
    sigma0_generator_indices, sigma_generator_indices, simplex_generators, ProductOrder,
    SimplexGroupData, SimplexVertex, MAX_DIM, MIN_DIM, ORDER_BOUND,
};
pub use symmetry::{
    coordinate_reflection, cycle_decomposition, format_cycles, longest_element_e8, matrix_a,
    matrix_abar, matrix_r2, sigma_permutation, symmetry_of_n,
};

use hyp6_exact::ExactError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error("dimension {0} outside the supported range 2..=8")]
    DimensionOutOfRange(usize),
    #[error("orbit exceeds bound {0}")]
    OrbitBound(usize),
    #[error("group exceeds bound {0} elements")]
    GroupBound(usize),
    #[error("order of s{i}·s{j} exceeds {bound}")]
    ProductOrderBound { i: usize, j: usize, bound: u32 },
    #[error("generator {0} does not preserve the Lorentz form")]
    NotFormPreserving(usize),
    #[error("fixed space of the generators opposite vertex {0} is not a line")]
    DegenerateVertex(usize),
    #[error("image of side {0} is not a side of the polytope")]
    NotASymmetry(usize),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
