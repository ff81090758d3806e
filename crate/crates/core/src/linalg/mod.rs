//! Exact linear algebra over ℤ on structured countable bases.

mod label;
mod map;
mod matrix;
mod space;
mod vector;

pub use label::{Atom, Label};
pub use map::{
    compare_on, compose_all, compose_maps, direct_sum_maps, equal_on_window, tensor_all,
    tensor_maps, Counterexample, LinMap, Verdict,
};
pub use matrix::IntMatrix;
pub use space::{shell, shell_vectors, Space};
pub use vector::Vector;
