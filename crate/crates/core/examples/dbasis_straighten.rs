//! The D-basis and straightening by the closed formula, checked against every
//! other method.
//!
//! cargo run --example dbasis_straighten

use straighten::json::format_combination;
use straighten::straightening::{check_linearity, check_truncation};
use straighten::{Content, Filling, Instance, Method, Partition};

fn main() -> straighten::Result<()> {
    let inst = Instance::new(&Partition::new(vec![4, 3, 2])?, &Content::new(vec![2, 2, 3, 2])?)?;
    for i in 1..=inst.basis.len() {
        let terms: Vec<String> = inst
            .dbasis
            .row(i)
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0.into())
            .map(|(j, c)| format!("{c:+}·S{}", j + 1))
            .collect();
        println!("D(S{i}) = {}  [depth {}]", terms.join(" "), inst.dbasis.depth(i));
    }

    let f = Filling::from_rows(&[vec![2, 1, 1, 3], vec![3, 3, 2], vec![4, 4]], 4)?;
    let closed = inst.straighten(&f, Method::Closed)?;
    println!("\nF = {}", format_combination(&closed));
    for m in Method::ALL {
        let s = inst.straighten(&f, m)?;
        println!("{m:>9}: {}  agrees {}", format_combination(&s), s.agrees_with(&closed));
    }
    println!("linearity {}  truncation {}", check_linearity(&closed, &inst.basis, &inst.matrix), check_truncation(&closed, &inst.basis)?);
    Ok(())
}
