//! Exact homological invariants of finite-dimensional local algebras over F_p.

pub mod algebra;
pub mod corpus;
pub mod invariants;
pub mod linalg;
pub mod lindefect;
pub mod poly;
pub mod report;
pub mod resolution;
pub mod ringspec;
pub mod series;
