pub mod albert;
pub mod algebra;
pub mod e8;
pub mod export;
pub mod linalg;
pub mod octonion;
pub mod scalar;
pub mod so16;
pub mod so8;
pub mod spin9;
pub mod table;
pub mod verify;
pub mod wedge;

pub use linalg::{Inertia, LinalgError, RatMatrix, SparseMatrix, SpanSolver};
pub use scalar::Rational;
