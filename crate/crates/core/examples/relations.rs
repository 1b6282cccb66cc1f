//! Grassmann and Plücker generators of a filling, and the fact that each one
//! has vanishing rearrangement sum against every semistandard tableau.
//!
//! cargo run --example relations

use straighten::relations::{grassmann_generators_of, pluecker_expand, pluecker_generators_of};
use straighten::tableau::text::to_text;
use straighten::{enumerate_ssyt, rcoeff, Filling};

fn main() -> straighten::Result<()> {
    let e = Filling::from_columns(&[vec![1, 2], vec![3, 4]], 4)?;
    let g = pluecker_expand(&e, 0, 1)?;
    println!("simple Plücker relation at (0,1):");
    for (t, c) in &g.terms {
        println!("{c:+}\n{}", to_text(t));
    }

    let f = Filling::from_rows(&[vec![3, 1, 2], vec![2, 4], vec![1]], 4)?;
    let basis = enumerate_ssyt(f.shape(), &f.content())?;
    let gens: Vec<_> = grassmann_generators_of(&f, false)
        .into_iter()
        .chain(pluecker_generators_of(&f))
        .collect();
    let mut worst = 0i64;
    for g in &gens {
        for s in basis.tableaux() {
            let sum: i64 = g.terms.iter().map(|(t, c)| c * rcoeff(t, s).unwrap()).sum();
            worst = worst.max(sum.abs());
        }
    }
    println!("{} generators × {} tableaux, largest |sum| = {worst}", gens.len(), basis.len());
    Ok(())
}
