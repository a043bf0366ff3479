//! Trees and forests: parsing, canonical codes, enumeration, the slalom
//! transform, gluing and the signature decomposition certificate.

pub mod canon;
pub mod decompose;
pub mod enumerate;
pub mod tree;

pub use canon::{canonical_code, centers, rooted_canonical_code, rooted_code, tree_from_code};
pub use decompose::{lemma1_decompose, Certificate, DecompositionStep};
pub use enumerate::{
    enumerate_forests, enumerate_free_trees, enumerate_planted_trees, free_tree_codes, rooted_tree_codes,
};
pub use tree::{glue, slalom_transform, subdivide, Forest, Tree};
