//! Exact verification toolkit for torus-fixed rational curves on the smooth
//! quadric threefold `Q = Gr(2,4) ∩ H`.
//!
//! The crate is layered bottom-up:
//!
//! * [`poly`], [`ideal`], [`linalg`]: exact rational polynomials, graded
//!   ideals and degreewise Hilbert functions;
//! * [`rep`]: weights of `Sym^d C²` under the maximal torus of `SL(2)` and of
//!   the induced representations;
//! * [`quadric`]: Plücker space, the Klein quadric, the invariant hyperplane
//!   and the fixed points;
//! * [`loci`]: fixed lines, conics, their incidences, the census of fixed
//!   degenerate cubics and the smooth twisted-cubic family;
//! * [`tangent`]: tangent weights at fixed loci and Białynicki-Birula
//!   Poincaré polynomials;
//! * [`cohring`]: Chern classes of the rank-6 bundle over `Gr(2,4)` and the
//!   cohomology ring of the twisted-cubic space.

pub mod cohring;
pub mod error;
pub mod ideal;
pub mod linalg;
pub mod loci;
pub mod poly;
pub mod quadric;
pub mod rep;
pub mod series;
pub mod tangent;

pub use error::{Error, Result};
pub use ideal::GradedIdeal;
pub use poly::{var_list, Monomial, MultiPoly, VarList};

/// Exact rational number in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
