//! Monomial ideals and their Newton polyhedra.

mod filtration;
pub(crate) mod hull;
mod ideal;
mod newton;

pub use filtration::{at_least_piece, degree_piece, filtration_pieces, FiltrationPieces};
pub use ideal::{ideal_algebra, IdealOp, MonomialIdeal};
pub use newton::{Facet, NewtonPolyhedron};

use crate::error::Result;
use crate::extended::Extended;
use crate::poly::Polynomial;
use num_rational::BigRational;

/// `Γ₊(p)`, the Newton polyhedron of a polynomial's support.
pub fn newton_polyhedron_of_polynomial(p: &Polynomial) -> Result<NewtonPolyhedron> {
    NewtonPolyhedron::from_points(p.dim(), p.support())
}

/// `rᵢ = min{r : r·eᵢ ∈ Γ₊}` for every axis.
pub fn axis_intersections(gamma: &NewtonPolyhedron) -> Result<Vec<Extended<BigRational>>> {
    gamma.axis_intersections()
}
