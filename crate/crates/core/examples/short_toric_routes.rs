//! The short toric polynomial by four independent routes, and g and f.

use toric_poset::flag::flag_f;
use toric_poset::nc::cd_index;
use toric_poset::poset::{cube_lattice, polygon_lattice};
use toric_poset::toric::{fine_st, g_from_st, short_toric, st_from_f, st_via_cd, stanley_f_g, toric_h_vector};
use toric_poset::{Poset, Result};

fn show(name: &str, p: &Poset) -> Result<()> {
    let rec = short_toric(p)?;
    let fine = fine_st(&flag_f(p)?);
    let pair = stanley_f_g(p)?;
    let sym = st_from_f(&pair.f, pair.n)?;
    let ops = st_via_cd(&cd_index(p)?)?;
    println!("{name}");
    println!("  recurrence        {}", rec.poly);
    println!("  Fine's formula    {}", fine.poly);
    println!("  from toric f      {}", sym.poly);
    println!("  C, D operators    {}", ops.poly);
    println!("  all agree: {}", rec == fine && rec == sym && rec == ops);
    println!("  toric f = {}, g = {}, h = {:?}", pair.f, pair.g, toric_h_vector(&pair));
    println!("  g recovered from st: {}", g_from_st(&rec)?);
    Ok(())
}

fn main() -> Result<()> {
    show("3-cube", &cube_lattice(3)?)?;
    show("heptagon", &polygon_lattice(7)?)?;
    show("4-cube", &cube_lattice(4)?)
}
