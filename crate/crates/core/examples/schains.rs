//! S-chains of a two-column tableau, the zero test they give, and the
//! column-pair split used when reasoning about wider shapes.
//!
//! cargo run --example schains

use straighten::enumerate_ssyt;
use straighten::rearrangement::{prune_admissible, schain_data, split};
use straighten::{rcoeff, Filling};

fn main() -> straighten::Result<()> {
    let s = Filling::from_columns(&[vec![1, 3, 6, 4, 5], vec![2, 1, 5, 3]], 6)?;
    let d = schain_data(&s)?;
    println!("values appearing once: {:?}", d.once());
    for (v, chain) in d.chains() {
        println!("chain({v}) = {chain:?}  opposite: {:?}", d.opposite(*v));
    }
    println!("pairs {:?}  left {:?}", d.pairs(), d.left());

    // on cardinal two-column SSYT the chain test detects zeros without search
    let t = Filling::from_columns(&[vec![1, 2, 4], vec![3, 5]], 5)?;
    let basis = enumerate_ssyt(t.shape(), &t.content())?;
    for (i, s) in basis.iter().filter(|(_, s)| s.is_cardinal()) {
        let d = schain_data(s)?;
        println!(
            "S{i}: admissible {}  R[T,S{i}] = {}",
            prune_admissible(&t, &d)?,
            rcoeff(&t, s)?
        );
    }

    let f = Filling::from_rows(&[vec![1, 1, 3, 2, 2], vec![3, 5, 2, 4], vec![7, 8], vec![4]], 8)?;
    let (pair, rest) = split(&f, 1)?;
    println!("\ncolumn pair shape {}  remainder shape {}", pair.shape(), rest.shape());
    Ok(())
}
