//! Newton polyhedra, integral closure and weighted filtration pieces.
use lojasiewicz::{axis_intersections, filtration_pieces, MonomialIdeal, Result, Weights};

fn main() -> Result<()> {
    let i = MonomialIdeal::parse("x^4, x*y^2, y^3", None)?;
    let gamma = i.newton_polyhedron()?;
    println!("I = {i}");
    println!(
        "vertices: {:?}",
        gamma
            .vertices()
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
    );
    for f in gamma.facets().iter().filter(|f| f.is_compact()) {
        println!("compact facet: {f}");
    }
    let axes: Vec<String> = axis_intersections(&gamma)?
        .iter()
        .map(|a| a.to_string())
        .collect();
    println!("axis intersections: {}", axes.join(", "));
    println!("n!·covolume = {}", gamma.normalized_covolume());
    println!("integral closure: {}", i.integral_closure()?);

    let w = Weights::new(vec![1, 2])?;
    let pieces = filtration_pieces(&w, 4)?;
    println!(
        "w = {w}: degree-4 piece {}, at-least piece {}",
        pieces.a, pieces.b
    );
    Ok(())
}
