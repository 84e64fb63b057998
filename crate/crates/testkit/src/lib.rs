//! Shared test support: a seeded generator of biproduct data, an
//! independent classical checker and the acceptance criteria built on both.

pub mod acceptance;
pub mod classical;
pub mod fuzz;
