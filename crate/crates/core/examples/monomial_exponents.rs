//! Exponents of single monomial ideals and the asymptotic Samuel function.
use lojasiewicz::engine::{
    asymptotic_order, loj_monomial_ideal, loj_relative_ideal, OrderArgument, OrderMode,
};
use lojasiewicz::{parse_polynomial, MonomialIdeal, Result};

fn main() -> Result<()> {
    let i = MonomialIdeal::parse("x^4, y^2", None)?;
    let r = loj_monomial_ideal(&i)?;
    println!("𝓛₀{i} = {} ({})", r.value, r.certificate);

    let m = MonomialIdeal::maximal(2);
    let nu = asymptotic_order(&i, &OrderArgument::Ideal(m), OrderMode::Asymptotic)?;
    println!("ν̄_I(m) = {nu}");

    let j = MonomialIdeal::parse("x^2, y", None)?;
    println!("𝓛_J(I) with J = {j}: {}", loj_relative_ideal(&i, &j)?);

    let h = parse_polynomial("x^3*y + y^5", Some(2))?;
    let plain = asymptotic_order(
        &i,
        &OrderArgument::Polynomial(h.clone()),
        OrderMode::Asymptotic,
    )?;
    println!("ν̄_I({h}) = {plain}");
    Ok(())
}
