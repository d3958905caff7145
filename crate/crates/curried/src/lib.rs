//! Diagram categories and curried Lie algebra representations in linear species.

pub mod acceptance;
pub mod checkers;
pub mod diagram;
pub mod error;
pub mod functors;
pub mod matrix;
pub mod operations;
pub mod oracle;
pub mod perm;
pub mod rational;
pub mod set;
pub mod species;
mod text;

pub use error::{Error, ParseError, Result};
pub use matrix::Matrix;
pub use rational::Rational;
pub use set::Set;
