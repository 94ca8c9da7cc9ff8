//! Exact Hilbert series of monomial right modules over the free associative
//! algebra `K<x_1, ..., x_n>`.
//!
//! A monomial right ideal `I` is represented as an orbit state; the maps
//! `T_x(I) = (I :_R x)` enumerate its finite orbit (the states of the minimal
//! automaton of the language `I ∩ W`), and the Hilbert series of `F/I` is the
//! first component of the solution of `(Id - t A) H = C` over `Q(t)`.
//!
//! Three state backends are provided:
//!
//! - [`ideal::FgRightState`] for finitely generated right ideals,
//! - [`ideal::TwoSidedState`] for finitely generated two-sided ideals,
//! - [`automata::DfaIdealState`] for regular ideals given by regular expressions.
//!
//! The top-level entry points live in [`hilbert`].

pub mod automata;
pub mod error;
pub mod hilbert;
pub mod ideal;
pub mod orbit;
pub mod ratfun;
pub mod render;
pub mod specfile;
pub mod words;

pub use error::{Error, Result};
pub use hilbert::{
    series_of_cyclic, series_of_module, Backend, IdealSpec, ModuleSpec, SeriesResult, Side,
};
pub use ratfun::{IntPolynomial, RationalFunction};
pub use words::{Alphabet, Letter, Word};
