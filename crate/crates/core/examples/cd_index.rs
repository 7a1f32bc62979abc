//! ab-, ce- and cd-index, and how duality reverses cd-words.

use toric_poset::nc::{ab_index_of, ab_to_ce, cd_index};
use toric_poset::poset::{boolean_algebra, cross_polytope_lattice, cube_lattice, polygon_lattice};
use toric_poset::Result;

fn main() -> Result<()> {
    let cube = cube_lattice(3)?;
    let ab = ab_index_of(&cube)?;
    println!("3-cube ab-index: {ab}");
    println!("3-cube ce-index: {}", ab_to_ce(&ab)?);
    println!("3-cube cd-index: {}", cd_index(&cube)?);

    for r in 2..=5 {
        println!("B_{r}: {}", cd_index(&boolean_algebra(r)?)?);
    }
    println!("pentagon: {}", cd_index(&polygon_lattice(5)?)?);

    let c4 = cube_lattice(4)?;
    let dual = cross_polytope_lattice(4)?;
    println!("4-cube:          {}", cd_index(&c4)?);
    println!("4-cross-polytope: {}", cd_index(&dual)?);
    println!("reversal holds: {}", cd_index(&dual)? == cd_index(&c4)?.reverse());
    Ok(())
}
