pub mod cli;
pub mod engine;
pub mod error;
pub mod extended;
pub mod geometry;
pub mod groebner;
pub mod multiplicity;
pub mod poly;

pub use error::{Error, Result};
pub use extended::Extended;
pub use geometry::{
    axis_intersections, filtration_pieces, ideal_algebra, newton_polyhedron_of_polynomial, Facet,
    FiltrationPieces, IdealOp, MonomialIdeal, NewtonPolyhedron,
};
pub use poly::{parse_polynomial, ExponentVector, Polynomial, WeightedClass, Weights};
