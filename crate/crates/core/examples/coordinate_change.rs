//! A polynomial coordinate change that makes a germ convenient.
use lojasiewicz::engine::{check_w_matching, gradient_ideals, matching_coordinate_change};
use lojasiewicz::{parse_polynomial, Result, Weights};

fn main() -> Result<()> {
    let w = Weights::new(vec![1, 2, 3, 4, 6])?;
    let f = parse_polynomial("x1^12 + x2^4*x4 + x4^3 + x3^2*x5 + x5^2", Some(5))?;
    let t = matching_coordinate_change(&f, &w, 7)?;
    for (i, img) in t.change.images.iter().enumerate() {
        println!("x{} ↦ {img}", i + 1);
    }
    println!("g = {}", t.g);
    println!("convenient: {}", t.g.is_convenient()?);
    match check_w_matching(&gradient_ideals(&t.g)?, &w)? {
        Some(m) => println!("gradient of g: {m}"),
        None => println!("gradient of g: no w-matching"),
    }
    Ok(())
}
