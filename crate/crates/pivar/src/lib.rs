//! Exact computations with polynomial identities of associative algebras
//! over the rationals: consequence spans of T-ideals in fixed
//! multidegree, cocharacter multiplicities through the unitriangular
//! Schur-coefficient recursion, identity checking in finite-dimensional
//! witness algebras, and the verification suites for the classification
//! of varieties with an identity of degree three.

pub mod exprio;
pub mod freealg;
pub mod models;
pub mod partitions;
pub mod scenarios;
pub mod tideal;
