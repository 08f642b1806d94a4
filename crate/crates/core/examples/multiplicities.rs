//! Colength, Samuel and mixed multiplicities, with their brute-force oracles.
use lojasiewicz::multiplicity::{
    colength, mixed_multiplicity, oracle_colength_limit, oracle_generic_multiplicity,
    samuel_multiplicity, IdealTuple, DEFAULT_SEED,
};
use lojasiewicz::{MonomialIdeal, Result};

fn main() -> Result<()> {
    let i = MonomialIdeal::parse("x^3, x*y, y^4", None)?;
    println!("I = {i}");
    println!("colength: {}", colength(&i)?);
    let e = samuel_multiplicity(&i)?;
    println!("e(I) = {} via {}", e.value, e.method);
    println!(
        "limit of n!·colength(I^k)/k^n: {}",
        oracle_colength_limit(&i)?
    );

    let t = IdealTuple::parse("x^2, y^3 | x^4, x*y, y^5")?;
    let m = mixed_multiplicity(&t)?;
    println!("e{t} = {} via {}", m.value, m.method);
    println!(
        "generic elements: {:?}",
        oracle_generic_multiplicity(&t, DEFAULT_SEED)?
    );
    Ok(())
}
