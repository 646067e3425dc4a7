//! Arithmetic of factorizations in finite and finitely presented monoids.

pub mod bitset;
pub mod corpus;
pub mod factorization;
pub mod integers;
pub mod monoid;
pub mod power;
pub mod presentation;
pub mod words;
