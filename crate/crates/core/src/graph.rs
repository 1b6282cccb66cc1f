//! The coefficient graph: an edge `S_i → S_j` for every nonzero off-diagonal
//! `R[S_i,S_j]`. Edges always decrease the label, so paths are finite and
//! straightening coefficients become signed weighted path sums.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::enumeration::SsytBasis;
use crate::error::{Error, Result};
use crate::rearrangement::{rcoeff_unchecked, RearrangementMatrix};
use crate::straightening::{Method, Straightening};
use crate::tableau::Filling;

/// Default cap on paths per `(from, to)` query.
pub const DEFAULT_PATH_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffGraph {
    k: usize,
    edges: BTreeMap<(usize, usize), i64>,
    /// `out[i - 1]`: targets of edges leaving `S_i`, ascending.
    out: Vec<Vec<(usize, i64)>>,
}

pub fn build_graph(m: &RearrangementMatrix) -> CoeffGraph {
    let k = m.kostka();
    let mut edges = BTreeMap::new();
    let mut out = vec![Vec::new(); k];
    for (i, j, w) in m.off_diagonal() {
        edges.insert((i, j), w);
        out[i - 1].push((j, w));
    }
    for list in &mut out {
        list.sort_unstable();
    }
    CoeffGraph { k, edges, out }
}

impl CoeffGraph {
    pub fn vertex_count(&self) -> usize {
        self.k
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `(from, to) → R[S_from, S_to]`.
    pub fn edges(&self) -> &BTreeMap<(usize, usize), i64> {
        &self.edges
    }

    pub fn weight(&self, from: usize, to: usize) -> Option<i64> {
        self.edges.get(&(from, to)).copied()
    }

    pub fn successors(&self, i: usize) -> &[(usize, i64)] {
        &self.out[i - 1]
    }

    /// Every edge goes to a smaller label, which rules out cycles.
    pub fn is_index_decreasing(&self) -> bool {
        self.edges.keys().all(|&(i, j)| j < i)
    }

    /// Acyclicity by repeatedly removing sinks; independent of edge direction.
    pub fn is_acyclic(&self) -> bool {
        let mut indeg = vec![0usize; self.k];
        for &(_, j) in self.edges.keys() {
            indeg[j - 1] += 1;
        }
        let mut stack: Vec<usize> = (1..=self.k).filter(|&v| indeg[v - 1] == 0).collect();
        let mut removed = 0;
        while let Some(v) = stack.pop() {
            removed += 1;
            for &(j, _) in &self.out[v - 1] {
                indeg[j - 1] -= 1;
                if indeg[j - 1] == 0 {
                    stack.push(j);
                }
            }
        }
        removed == self.k
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.k {
            return Err(Error::IndexOutOfRange {
                what: "vertex",
                index: v,
                range: format!("1..={}", self.k),
            });
        }
        Ok(())
    }

    /// All directed paths from `from` to `to` as label sequences, in
    /// lexicographic order; `from == to` gives the single zero-length path.
    pub fn paths(&self, from: usize, to: usize) -> Result<Vec<Vec<usize>>> {
        self.paths_capped(from, to, DEFAULT_PATH_CAP)
    }

    pub fn paths_capped(&self, from: usize, to: usize, cap: usize) -> Result<Vec<Vec<usize>>> {
        self.check_vertex(from)?;
        self.check_vertex(to)?;
        let mut found = Vec::new();
        let mut stack = vec![from];
        self.walk(to, cap, &mut stack, &mut found)?;
        Ok(found)
    }

    fn walk(
        &self,
        to: usize,
        cap: usize,
        stack: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        let v = *stack.last().expect("non-empty path");
        if v == to {
            if found.len() == cap {
                return Err(Error::CapExceeded {
                    what: "path enumeration",
                    limit: cap,
                });
            }
            found.push(stack.clone());
            return Ok(());
        }
        for &(j, _) in &self.out[v - 1] {
            // labels only decrease along edges
            if j < to {
                continue;
            }
            stack.push(j);
            self.walk(to, cap, stack, found)?;
            stack.pop();
        }
        Ok(())
    }

    /// Product of edge weights along a path.
    pub fn path_weight(&self, path: &[usize]) -> BigInt {
        path.windows(2)
            .map(|w| BigInt::from(self.edges[&(w[0], w[1])]))
            .product()
    }

    /// DOT rendering with nodes `S1…SK`; `highlight` nodes are filled.
    pub fn export_dot(&self, highlight: Option<&BTreeSet<usize>>) -> String {
        let mut s = String::from("digraph coefficients {\n  rankdir=TB;\n  node [shape=circle];\n");
        for v in 1..=self.k {
            if highlight.is_some_and(|h| h.contains(&v)) {
                let _ = writeln!(s, "  S{v} [style=filled, fillcolor=lightgrey];");
            } else {
                let _ = writeln!(s, "  S{v};");
            }
        }
        for (&(i, j), w) in &self.edges {
            let _ = writeln!(s, "  S{i} -> S{j} [label=\"{w}\"];");
        }
        s.push_str("}\n");
        s
    }
}

/// `V_F = {k : R[F,S_k] ≠ 0}`.
pub fn active_vertices(f: &Filling, basis: &SsytBasis) -> Result<BTreeSet<usize>> {
    basis.check_filling(f)?;
    Ok(basis
        .iter()
        .filter(|(_, s)| rcoeff_unchecked(f, s) != 0)
        .map(|(k, _)| k)
        .collect())
}

/// `a_i` as the sum over `S_j ∈ V_F` and paths `p` from `S_j` to `S_i` of
/// `(−1)^{l(p)}·R[F,S_j]·(edge weights of p)`.
pub fn coefficient_paths(f: &Filling, i: usize, basis: &SsytBasis, g: &CoeffGraph) -> Result<BigInt> {
    if !f.is_cardinal() {
        return Err(Error::NotCardinal);
    }
    let active = active_rcoeffs(f, basis)?;
    coefficient_paths_with(&active, i, g, DEFAULT_PATH_CAP)
}

fn active_rcoeffs(f: &Filling, basis: &SsytBasis) -> Result<Vec<(usize, i64)>> {
    basis.check_filling(f)?;
    Ok(basis
        .iter()
        .map(|(k, s)| (k, rcoeff_unchecked(f, s)))
        .filter(|&(_, r)| r != 0)
        .collect())
}

/// Path sum with precomputed nonzero `(j, R[F,S_j])`.
pub fn coefficient_paths_with(
    active: &[(usize, i64)],
    i: usize,
    g: &CoeffGraph,
    cap: usize,
) -> Result<BigInt> {
    g.check_vertex(i)?;
    let mut total = BigInt::zero();
    let mut seen = 0;
    for &(j, rf) in active {
        if j < i {
            continue;
        }
        // one budget shared by every source
        let paths = g.paths_capped(j, i, cap - seen).map_err(|e| match e {
            Error::CapExceeded { what, .. } => Error::CapExceeded { what, limit: cap },
            e => e,
        })?;
        seen += paths.len();
        for p in paths {
            let term = g.path_weight(&p) * rf;
            if (p.len() - 1) % 2 == 1 {
                total -= term;
            } else {
                total += term;
            }
        }
    }
    Ok(total)
}

/// Every coefficient through [`coefficient_paths_with`].
pub fn straighten_paths(f: &Filling, basis: &SsytBasis, g: &CoeffGraph) -> Result<Straightening> {
    straighten_paths_with(f, basis, g, DEFAULT_PATH_CAP)
}

/// [`straighten_paths`] with at most `cap` paths enumerated per coefficient.
pub fn straighten_paths_with(
    f: &Filling,
    basis: &SsytBasis,
    g: &CoeffGraph,
    cap: usize,
) -> Result<Straightening> {
    basis.check_filling(f)?;
    let mut coefficients = vec![BigInt::zero(); basis.len()];
    if f.is_cardinal() {
        let active = active_rcoeffs(f, basis)?;
        for (i, slot) in coefficients.iter_mut().enumerate() {
            *slot = coefficient_paths_with(&active, i + 1, g, cap)?;
        }
    }
    Ok(Straightening {
        input: f.clone(),
        coefficients,
        method: Method::Paths,
    })
}
