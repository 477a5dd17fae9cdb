//! A workbench for languages attached to finitely generated groups:
//! geodesics, conjugacy geodesics, shortlex and conjugacy normal forms,
//! their strict growth series, Garside normal forms, and graph products —
//! together with the brute-force oracles used to cross-check each piece.

pub mod error;
pub mod fsa;
pub mod garside;
pub mod graphprod;
pub mod groups;
pub mod langkit;
pub mod series;
