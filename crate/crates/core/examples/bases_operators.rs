//! The Q_n and t_n bases and the operators C and D.

use toric_poset::arith::rat;
use toric_poset::toric::{apply_cd_word, morgan_voyce, op_c, op_d, q_poly, st_cd_word, t_poly, x_to_q, MorganVoyce};
use toric_poset::{LaurentPoly, Result};

fn main() -> Result<()> {
    for n in 0..=6 {
        println!("Q_{n} = {:<24} t_{n} = {}", q_poly(n).to_string(), t_poly(n as i64));
    }
    for n in 0..=6u32 {
        let coeffs = x_to_q(n);
        let back: LaurentPoly = coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| q_poly(n - 2 * k as u32).scale(&c.clone().into()))
            .sum();
        println!("x^{n} = sum {:?} Q_(n-2k)  check: {}", coeffs, back == LaurentPoly::monomial(n as i64, rat(1)));
    }
    println!("B-coefficients for x^6: {:?}", morgan_voyce(3, MorganVoyce::B));
    println!("b-coefficients for x^7: {:?}", morgan_voyce(3, MorganVoyce::SmallB));

    println!("C(Q_3) = {}", op_c(&q_poly(3))?);
    println!("D(Q_4) = {}", op_d(&q_poly(4))?);
    println!("C(t_3) = {}", op_c(&t_poly(3))?);
    for w in ["ccc", "cd", "dc", "cdcc", "ccdcc"] {
        println!("st({w}) = {:<16} closed form: {}", apply_cd_word(w.as_bytes()).to_string(), st_cd_word(w.as_bytes()));
    }
    Ok(())
}
