//! Exact elimination over the relation space: membership tests and reduction
//! of an arbitrary filling to the SSYT basis.
//!
//! cargo run --example relation_oracle

use straighten::relations::RelationOracle;
use straighten::{enumerate_ssyt, Content, Filling, Partition};

fn main() -> straighten::Result<()> {
    let basis = enumerate_ssyt(&Partition::new(vec![4, 3, 2])?, &Content::new(vec![2, 2, 3, 2])?)?;
    let oracle = RelationOracle::new(&basis)?;
    println!(
        "filling space {}  relation rank {}  generators used {}",
        oracle.space().dim(),
        oracle.rank(),
        oracle.generators_used()
    );

    let f = Filling::from_rows(&[vec![2, 1, 1, 3], vec![3, 3, 2], vec![4, 4]], 4)?;
    println!("F reduces to {:?}", oracle.straighten(&f)?);

    // F − S5 + S4 is a relation; S4 alone is not
    let v = oracle.space().combination(&[
        (f, 1),
        (basis.tableau(5).clone(), -1),
        (basis.tableau(4).clone(), 1),
    ])?;
    println!("F − S5 + S4 in span: {}", oracle.membership_verify(&v)?);
    let u = oracle.space().unit(basis.tableau(4))?;
    println!("S4 in span: {}", oracle.membership_verify(&u)?);
    Ok(())
}
