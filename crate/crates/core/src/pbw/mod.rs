//! PBW straightening: normal forms `F_… K^μ E_…` for arbitrary products.

mod element;
mod engine;
pub mod rules;

pub use element::{Element, ElementDisplay, Letter, Monomial};
pub use engine::{Engine, Kind};

#[cfg(test)]
mod tests;
