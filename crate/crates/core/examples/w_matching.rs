//! w-matchings and the chain of bounds they make exact.
use lojasiewicz::engine::{bound_chain, check_w_matching};
use lojasiewicz::multiplicity::IdealTuple;
use lojasiewicz::{Result, Weights};

fn main() -> Result<()> {
    let cases = [
        ("x^11 | y^5 | z^3", vec![1, 2, 3]),
        ("x^4 | y^2", vec![1, 4]),
        (
            "x1^11 | x2^3*x4 | x3*x5 | x2^4, x4^2 | x3^2, x5",
            vec![1, 2, 3, 4, 6],
        ),
    ];
    for (text, ws) in cases {
        let t = IdealTuple::parse(text)?;
        let w = Weights::new(ws)?;
        match check_w_matching(&t, &w)? {
            Some(m) => println!("{t}: {m}"),
            None => println!("{t}: no w-matching"),
        }
        let chain = bound_chain(&t, &w)?;
        println!(
            "  degrees {:?}, bound {}, σ = {}, exact: {}",
            chain.degrees,
            chain.value_bound,
            chain.sigma_tuple,
            chain.is_exact()
        );
        for warning in &chain.warnings {
            println!("  warning: {warning}");
        }
    }
    Ok(())
}
