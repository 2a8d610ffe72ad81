//! Exact-arithmetic invariants of finite-dimensional superalgebras with a
//! superinvolution or graded involution: multilinear identity testing,
//! codimension sequences, cocharacter multiplicities, hook containment, and
//! standard/Amitsur identity verification.
//!
//! Everything computes over exact rationals; all enumeration orders are
//! deterministic, so results are reproducible byte for byte.

pub mod algebras;
pub mod combinat;
pub mod engine;
pub mod freealg;
pub mod linalg;
pub mod rat;
pub mod symgroup;
pub mod theorems;
