//! Sign-vector enumerations: the reflection principle and the st_h expansion.

use toric_poset::flag::{elements, is_even_set, mask_of};
use toric_poset::paths::{
    sparse_intervals, st_cd_word_paths, st_ce_all, st_ce_reflected, st_h_bruteforce, st_h_closed, x_to_q_paths,
};
use toric_poset::Result;

fn main() -> Result<()> {
    let n = 6;
    let mut agree = 0;
    let mut total = 0;
    for s in (0..1u64 << n).filter(|&s| is_even_set(s)) {
        total += 1;
        if st_ce_all(s, n)? == st_ce_reflected(s, n)? {
            agree += 1;
        }
    }
    println!("reflection principle, n = {n}: {agree}/{total} even sets agree");
    println!("st_ce({{1,2}}, 2) = {}", st_ce_all(mask_of(&[1, 2]), 2)?);

    for w in ["cc", "d", "cd", "dcc", "ccdd"] {
        println!("path model st({w}) = {}", st_cd_word_paths(w.as_bytes())?);
    }
    println!("three-step paths of length 5 weigh {}", x_to_q_paths(5)?);

    println!("sparse intervals of {{1,2,4,5}}: {:?}", sparse_intervals(mask_of(&[1, 2, 4, 5])));
    let n = 4;
    for s in 0..1u64 << n {
        let enumerated = st_h_bruteforce(s, n)?;
        println!("st_h({:?}, x), n = {n}: enumerated {:<14} closed form {}", elements(s).collect::<Vec<_>>(), enumerated.to_string(), st_h_closed(s, n));
    }
    Ok(())
}
