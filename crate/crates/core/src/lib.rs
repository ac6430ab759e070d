//! Exact computations with linear Coxeter systems: reflection groups acting
//! on a real vector space, their Tits cones, and convexity of orbits.

pub mod affine;
pub mod arith;
pub mod cone;
pub mod convexity;
pub mod coxeter;
pub mod error;
pub mod linalg;
pub mod lp;
pub mod reflection;
pub mod root_systems;
pub mod suite;

pub use arith::{pair, Covector, DenseVector, Rational, SparseVector};
pub use cone::PolyhedralCone;
pub use error::{Error, Result};
pub use linalg::Matrix;
pub use reflection::{LcsReport, PairKind, ReflectionData};
