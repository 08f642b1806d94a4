//! Gröbner bases and the finite-staircase test for isolated singularities.
use lojasiewicz::engine::is_isolated_singularity;
use lojasiewicz::groebner::{GroebnerBasis, DEFAULT_PAIR_CAP};
use lojasiewicz::{parse_polynomial, Result, Weights};

fn main() -> Result<()> {
    let f = parse_polynomial("x^3 + y^3 + z^3", Some(3))?;
    let g = GroebnerBasis::compute(&f.gradient(), DEFAULT_PAIR_CAP)?;
    for p in g.polynomials() {
        println!("  {p}");
    }
    println!("finite staircase: {}", g.has_finite_staircase());

    let w = Weights::new(vec![1, 1])?;
    for text in ["x^2 + y^2", "x^2*y + x*y^2", "x^2*y"] {
        let p = parse_polynomial(text, Some(2))?;
        println!("{p}: isolated = {}", is_isolated_singularity(&p, &w)?);
    }
    Ok(())
}
