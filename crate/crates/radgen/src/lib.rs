//! Small generating sets, up to radical, for intersections of ideals whose
//! generators satisfy nested containment conditions, together with the
//! exact-arithmetic machinery (polynomials over Q or a prime field, a
//! Buchberger engine, squarefree monomial ideal combinatorics) needed to
//! construct them and to machine-verify every claimed radical equality.

pub mod complex;
pub mod construct;
pub mod groebner;
pub mod ideals;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod svlemma;

pub mod cli;

pub use crate::groebner::{FieldMode, GbConfig, GbError};
pub use crate::poly::Polynomial;
pub use crate::ring::{Monomial, MonomialOrder, VarSet};
