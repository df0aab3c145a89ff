//! Exact computations in centralisers of nilpotent elements of `gl_n`,
//! `so_n` and `sp_n`: structure constants, centres, indices, symmetric
//! invariants and the varieties they cut out.

pub mod analysis;
pub mod centralizer;
pub mod charpoly;
pub mod error;
pub mod groebner;
pub mod invariants;
pub mod linalg;
pub mod model;
pub mod poly;
pub mod report;
pub mod suites;
pub mod varieties;

pub use centralizer::CentralizerAlgebra;
pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, Ideal};
pub use linalg::{Matrix, Q};
pub use model::{AlgebraKind, ModelSpace, Partition};
pub use poly::{Monomial, SparsePoly, Var, VarLabel};
pub use report::{Check, Report};
pub use suites::Suite;
