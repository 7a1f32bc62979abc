//! Face lattices and their basic structure.

use toric_poset::poset::{boolean_algebra, chain, cross_polytope_lattice, cube_lattice, polygon_lattice};
use toric_poset::Result;

fn main() -> Result<()> {
    let families = [
        ("boolean algebra B_4", boolean_algebra(4)?),
        ("3-cube", cube_lattice(3)?),
        ("octahedron", cross_polytope_lattice(3)?),
        ("hexagon", polygon_lattice(6)?),
        ("chain of length 3", chain(3)?),
    ];
    for (name, p) in &families {
        println!(
            "{name:<20} {:>3} elements  f = {:?}  Eulerian: {:<5}  simplicial: {:<5}  dual simplicial: {}",
            p.len(),
            p.f_vector().entries,
            p.is_eulerian(),
            p.is_simplicial()?,
            p.is_dual_simplicial()?,
        );
    }

    let cube = cube_lattice(3)?;
    let octahedron = cross_polytope_lattice(3)?;
    println!("dual of the 3-cube is the octahedron: {}", cube.dual()?.is_isomorphic(&octahedron));

    let c3 = chain(3)?;
    if let Some((u, v)) = c3.eulerian_witness() {
        println!("chain fails the Eulerian condition on [{}, {}]", c3.name(u), c3.name(v));
    }
    Ok(())
}
