//! Building a poset from covers, JSON round trips, and st of a non-Eulerian
//! ranked poset.

use toric_poset::flag::flag_f_ranked;
use toric_poset::toric::{fine_st, st_recurrence};
use toric_poset::{Poset, Result};

fn main() -> Result<()> {
    // Two triangles sharing an edge, as a face poset without the top.
    let p = Poset::from_cover_pairs(&[
        ("0", "a"), ("0", "b"), ("0", "c"), ("0", "d"),
        ("a", "ab"), ("b", "ab"), ("b", "bc"), ("c", "bc"), ("a", "ac"), ("c", "ac"),
        ("b", "bd"), ("d", "bd"), ("c", "cd"), ("d", "cd"),
        ("ab", "abc"), ("bc", "abc"), ("ac", "abc"),
        ("bc", "bcd"), ("bd", "bcd"), ("cd", "bcd"),
    ])?;
    let json = serde_json::to_string_pretty(&p.to_json()).expect("serialisable");
    println!("{json}");
    let q = Poset::from_json(&serde_json::from_str(&json).expect("valid JSON"))?;
    println!("round trip equal: {}", p == q);
    println!("lower Eulerian: {}, Eulerian: {}", p.is_lower_eulerian(), p.is_eulerian());
    let st = st_recurrence(&p);
    println!("st = {} (n = {}), Fine's formula: {}", st.poly, st.n, fine_st(&flag_f_ranked(&p)?).poly);
    Ok(())
}
