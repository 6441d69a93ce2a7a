//! Exact symbolic kernel for the quantum superalgebra `U_q[osp(1/2)]`, its
//! dual quantum supergroup `OSp_q(1/2)`, the universal T-matrix and the
//! representation matrices.
#![no_std]

extern crate alloc;

pub mod aalg;
pub mod duality;
pub mod algebra;
pub mod error;
pub mod matrix;
pub mod qjacobi;
pub mod report;
pub mod repth;
pub mod rmaps;
pub mod scalar;
pub mod tmat;
pub mod ualg;

pub use error::{Error, Result};
pub use scalar::Scalar;
