//! Exponent of a tuple by searching r-numbers of its powers.
use lojasiewicz::engine::{loj_set, LojSetOptions};
use lojasiewicz::multiplicity::IdealTuple;
use lojasiewicz::{MonomialIdeal, Result, Weights};

fn main() -> Result<()> {
    let t = IdealTuple::parse("x^3, y^2 | x^2, y^5")?;
    let r = loj_set(
        &t,
        &MonomialIdeal::maximal(2),
        &LojSetOptions {
            s_max: Some(6),
            weights: None,
        },
    )?;
    println!("𝓛₀{t} = {} ({})", r.value, r.certificate);
    for e in &r.search_trace {
        println!("  s = {}, r = {}, r/s = {}", e.s, e.r, e.ratio);
    }

    let t = IdealTuple::parse("x^11 | y^5 | z^3")?;
    let opts = LojSetOptions {
        s_max: None,
        weights: Some(Weights::new(vec![1, 2, 3])?),
    };
    let r = loj_set(&t, &MonomialIdeal::maximal(3), &opts)?;
    println!("𝓛₀{t} = {} ({})", r.value, r.certificate);
    Ok(())
}
