//! Exponent of the gradient of semi-weighted homogeneous germs.
use lojasiewicz::engine::{gradient_ideals, loj_gradient, GradientOptions};
use lojasiewicz::{parse_polynomial, Result, Weights};

fn main() -> Result<()> {
    let cases: [(&str, &[u64]); 5] = [
        ("x^12 + y^6 + z^4", &[1, 2, 3]),
        ("x^16 + y^8 + x*z^5", &[1, 2, 3]),
        ("x1*x3 + x2^2 + x1^2*x2", &[1, 2, 3]),
        ("x^3 + y^5 + x*y^4", &[5, 3]),
        ("x1^12 + x2^4*x4 + x4^3 + x3^2*x5 + x5^2", &[1, 2, 3, 4, 6]),
    ];
    for (text, ws) in cases {
        let w = Weights::new(ws.to_vec())?;
        let f = parse_polynomial(text, Some(w.dim()))?;
        let r = loj_gradient(&f, &w, &GradientOptions::default())?;
        println!("f = {f}, w = {w}");
        println!("  gradient ideals {}", gradient_ideals(&f)?);
        println!(
            "  𝓛₀(∇f) = {} ({}), s₀ = {:?}",
            r.value, r.certificate, r.determinacy
        );
    }
    Ok(())
}
