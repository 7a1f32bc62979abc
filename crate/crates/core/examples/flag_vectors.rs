//! Flag f-, h- and L-vectors of the 3-cube.

use toric_poset::flag::{elements, flag_f, h_from_f, is_even_set, l_from_f};
use toric_poset::poset::cube_lattice;
use toric_poset::Result;

fn set(s: u64) -> String {
    let v: Vec<String> = elements(s).map(|i| i.to_string()).collect();
    format!("{{{}}}", v.join(","))
}

fn main() -> Result<()> {
    let cube = cube_lattice(3)?;
    let f = flag_f(&cube)?;
    let h = h_from_f(&f)?;
    let l = l_from_f(&f)?;
    println!("{:<8} {:>4} {:>4} {:>6}", "S", "f_S", "h_S", "L_S");
    for s in 0..=f.full_set() {
        let even = if is_even_set(s) { "" } else { "  (odd set)" };
        println!("{:<8} {:>4} {:>4} {:>6}{even}", set(s), f.get(s), h.get(s), l.get(s));
    }
    Ok(())
}
