//! Enumerate the semistandard tableaux of a shape and content, largest row
//! word first, and compare Kostka numbers across a few contents.
//!
//! cargo run --example ssyt_kostka

use straighten::tableau::text::to_text;
use straighten::{enumerate_ssyt, kostka, Content, Partition};

fn main() -> straighten::Result<()> {
    let shape = Partition::new(vec![4, 3, 2])?;
    let content = Content::new(vec![2, 2, 3, 2])?;
    let basis = enumerate_ssyt(&shape, &content)?;
    println!("SSYT({shape}, {content}): {} tableaux", basis.len());
    for (i, t) in basis.iter() {
        println!("S{i}\n{}", to_text(t));
    }

    // permuting the content leaves the count unchanged
    for counts in [vec![2, 2, 3, 2], vec![3, 2, 2, 2], vec![2, 3, 2, 2]] {
        let z = Content::new(counts)?;
        println!("K({shape}, {z}) = {}", kostka(&shape, &z)?);
    }
    Ok(())
}
