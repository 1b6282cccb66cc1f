//! The coefficient graph: edges from the rearrangement matrix, paths between
//! tableaux, a coefficient read off as a path sum, and DOT export.
//!
//! cargo run --example coefficient_graph > graph.dot

use straighten::graph::{active_vertices, coefficient_paths};
use straighten::{Content, Filling, Instance, Partition};

fn main() -> straighten::Result<()> {
    let inst = Instance::new(&Partition::new(vec![3, 3, 2])?, &Content::new(vec![1, 2, 1, 2, 2])?)?;
    let g = &inst.graph;
    let f = Filling::from_rows(&[vec![2, 2, 1], vec![4, 3, 5], vec![5, 4]], 5)?;
    let active = active_vertices(&f, &inst.basis)?;

    eprintln!("{} vertices, {} edges, acyclic {}", g.vertex_count(), g.edge_count(), g.is_acyclic());
    eprintln!("active vertices {active:?}");
    for &j in &active {
        for p in g.paths(j, 1)? {
            eprintln!("  path {p:?} weight {}", g.path_weight(&p));
        }
    }
    eprintln!("a_1 = {}", coefficient_paths(&f, 1, &inst.basis, g)?);
    print!("{}", g.export_dot(Some(&active)));
    Ok(())
}
