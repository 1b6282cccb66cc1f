//! Versioned JSON documents for listings, matrices, straightenings and graphs.
//!
//! cargo run --example json_documents

use straighten::json::{to_pretty, EdgeListDoc, MatrixDoc, SsytListing, StraighteningDoc};
use straighten::tableau::text::parse_filling;
use straighten::{Instance, Method};

fn main() -> straighten::Result<()> {
    let f = parse_filling("2 2 1\n4 3 5\n5 4\n", None)?;
    let inst = Instance::for_filling(&f)?;
    print!("{}", to_pretty(&SsytListing::new(&inst.basis)));
    print!("{}", to_pretty(&MatrixDoc::new(&inst.matrix)));
    print!("{}", to_pretty(&StraighteningDoc::new(&inst.straighten(&f, Method::Closed)?, &inst.basis)));
    print!("{}", to_pretty(&EdgeListDoc::new(&inst.graph)));
    Ok(())
}
