//! André permutations, the t_{n,i} table, and toric invariants of dual
//! simplicial posets from face numbers.

use num_bigint::BigInt;
use toric_poset::poset::cube_lattice;
use toric_poset::simplicial::{
    andre_permutations, cd_variation, dual_h_from_f, g_dual_monotone, g_dual_simplicial, g_shifted_basis,
    gessel_cube_g, glb_nonnegativity_check, st_dual_simplicial, t_ni, PhiCheckTable,
};
use toric_poset::toric::{stanley_f_g, t_coordinates};
use toric_poset::Result;

fn main() -> Result<()> {
    for p in andre_permutations(3)? {
        println!("{p:?} -> {}", cd_variation(&p)?);
    }

    let mut table = PhiCheckTable::new();
    for n in 1..=5 {
        let row: Vec<String> = (0..n)
            .map(|i| {
                let phi = table.phi_check(n, i).unwrap();
                let c = t_coordinates(&t_ni(&phi).unwrap());
                format!("{:?}", c.iter().map(|x| x.to_string()).collect::<Vec<_>>())
            })
            .collect();
        println!("n = {n}: {}", row.join("  "));
    }

    for d in 2..=5 {
        let cube = cube_lattice(d)?;
        let h = dual_h_from_f(&cube)?;
        let n = d;
        let direct = stanley_f_g(&cube)?.g;
        println!(
            "{d}-cube h = {:?}  st = {}  g = {} | {} | {} | Gessel {} | direct {} | GLB {:?}",
            h.iter().map(BigInt::to_string).collect::<Vec<_>>(),
            st_dual_simplicial(&h, n)?.poly,
            g_dual_simplicial(&h, n)?,
            g_dual_monotone(&h, n)?,
            g_shifted_basis(&h, n)?,
            gessel_cube_g(d),
            direct,
            glb_nonnegativity_check(&h, n),
        );
    }
    Ok(())
}
