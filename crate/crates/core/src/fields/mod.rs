//! GF(4) arithmetic, packed vectors and matrices, polynomials, extension
//! fields and linear codes.

mod code;
mod ext;
mod gf4;
mod matrix;
mod poly;
mod vector;

pub use code::LinearCode;
pub use ext::{gcd, multiplicative_order, ExtElem, ExtField};
pub use gf4::Gf4;
pub(crate) use matrix::eliminate;
pub use matrix::{Gf4Matrix, Rref};
pub use poly::Gf4Poly;
pub use vector::Gf4Vector;
