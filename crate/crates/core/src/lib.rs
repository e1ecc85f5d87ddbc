//! Exact computations with finite-dimensional path algebras: their modules,
//! string and band combinatorics, and ideals of finite Krull-Schmidt windows
//! of the module category.

pub mod algebra;
pub mod error;
pub mod field;
pub mod ideal;
pub mod io;
pub mod linalg;
pub mod poly;
pub mod repmod;
pub mod strings;

pub use algebra::{PathAlgebra, Preset, Quiver, Relation};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use linalg::{Mat, Subspace};
pub use repmod::{HomSpace, Morphism, Representation};
