//! Exact arithmetic: rationals, polynomials, matrices, inertia, root
//! counting and Smith normal form over `Q[t]`.

pub mod linalg;
pub mod matrix;
pub mod number;
pub mod poly;
pub mod roots;
pub mod snf;

pub use linalg::{
    alexander_matrix, alexander_poly, bareiss_det, char_poly, char_poly_int, determinant, determinant_int,
    hermitian_inertia, inertia, inertia_int, Inertia,
};
pub use matrix::Matrix;
pub use number::{rat, GaussianRational, Rational};
pub use poly::{IntPoly, RatPoly};
pub use roots::{
    circle_root_count, isolate_circle_roots, negative_real_root_count, positive_real_root_count, reciprocal_split,
    squarefree_decomposition, CircleRoot, CircleRootIsolation, ReciprocalSplit, RootInterval, SquarefreeDecomposition,
};
pub use snf::{nullity_at_factor, nullity_at_root, smith_normal_form};
