//! Rearrangement coefficients: a single pair, then the full lower
//! unitriangular matrix over an SSYT basis.
//!
//! cargo run --example rearrangement

use straighten::tableau::text::parse_filling;
use straighten::{enumerate_ssyt, rcoeff, rcoeff_matrix, Content, Partition};

fn main() -> straighten::Result<()> {
    let f = parse_filling("2 1 4 1\n3 2\n4 3\n", None)?;
    let s = parse_filling("1 1 4 4\n2 2\n3 3\n", None)?;
    println!("R[F,S] = {}", rcoeff(&f, &s)?);
    println!("R[S,F] = {}", rcoeff(&s, &f)?);

    let basis = enumerate_ssyt(&Partition::new(vec![4, 3, 2])?, &Content::new(vec![2, 2, 3, 2])?)?;
    let m = rcoeff_matrix(&basis);
    println!("\nM[i][j] = R[S_i, S_j]:");
    for i in 1..=m.kostka() {
        let row: Vec<String> = m.row(i).iter().map(|x| format!("{x:>3}")).collect();
        println!("{}", row.join(""));
    }
    println!("unitriangular: {}", m.is_unitriangular());
    Ok(())
}
