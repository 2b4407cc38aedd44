//! Exact rational polynomial arithmetic and root counting. Everything else
//! in the crate is checked against this layer.

pub mod poly;
pub mod sturm;

pub use poly::RationalPoly;
pub use sturm::{count_roots_in, isolate_roots, RootInterval, SturmChain};
