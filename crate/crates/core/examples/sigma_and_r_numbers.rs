//! σ of tuples without finite colength and the r-numbers attached to them.
use lojasiewicz::multiplicity::{r_number, rees_sequence_value, sigma, IdealTuple};
use lojasiewicz::{filtration_pieces, MonomialIdeal, Result, Weights};

fn main() -> Result<()> {
    let t = IdealTuple::parse("x^4 | y^2")?;
    let s = sigma(&t)?;
    println!("σ{t} = {} via {}", s.value, s.method);
    let m = MonomialIdeal::maximal(2);
    for r in 1..=5 {
        println!("  value at r = {r}: {}", rees_sequence_value(&t, &m, r)?);
    }
    println!("r_m = {}", r_number(&t, &m)?);

    // two degree pieces for w = (3,1) meet only along an axis
    let w = Weights::new(vec![3, 1])?;
    let a4 = filtration_pieces(&w, 4)?.a;
    let a5 = filtration_pieces(&w, 5)?.a;
    let t = IdealTuple::new(vec![a4, a5])?;
    println!("σ{t} = {}", sigma(&t)?.value);

    let w = Weights::new(vec![1, 2])?;
    let b2 = filtration_pieces(&w, 2)?.b;
    let b3 = filtration_pieces(&w, 3)?.b;
    let t = IdealTuple::new(vec![b2, b3])?;
    let j = MonomialIdeal::parse("x^2, y", Some(2))?;
    for s in 1..=6 {
        println!("s = {s}: r_J = {}", r_number(&t.power(s)?, &j)?);
    }
    Ok(())
}
