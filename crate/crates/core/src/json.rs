//! Versioned JSON documents and the plain-text combination format.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::enumeration::SsytBasis;
use crate::graph::CoeffGraph;
use crate::rearrangement::RearrangementMatrix;
use crate::straightening::Straightening;

pub const FORMAT_VERSION: u32 = 1;

fn format_version() -> u32 {
    FORMAT_VERSION
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SsytListing {
    #[serde(default = "format_version")]
    pub format: u32,
    pub shape: Vec<usize>,
    pub content: Vec<usize>,
    pub kostka: usize,
    pub tableaux: Vec<Vec<Vec<u32>>>,
}

impl SsytListing {
    pub fn new(basis: &SsytBasis) -> Self {
        SsytListing {
            format: FORMAT_VERSION,
            shape: basis.shape().parts().to_vec(),
            content: basis.content().counts().to_vec(),
            kostka: basis.len(),
            tableaux: basis.tableaux().iter().map(|t| t.rows()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KostkaDoc {
    pub format: u32,
    pub shape: Vec<usize>,
    pub content: Vec<usize>,
    pub kostka: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub format: u32,
    pub kostka: usize,
    pub matrix: Vec<Vec<i64>>,
}

impl MatrixDoc {
    pub fn new(m: &RearrangementMatrix) -> Self {
        MatrixDoc {
            format: FORMAT_VERSION,
            kostka: m.kostka(),
            matrix: m.entries().to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Term {
    /// A JSON integer when it fits in `i64`, otherwise a decimal string.
    pub coeff: Value,
    pub index: usize,
    pub tableau: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StraighteningDoc {
    pub format: u32,
    pub input: Vec<Vec<u32>>,
    pub method: String,
    pub terms: Vec<Term>,
}

pub fn coeff_value(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(x) => Value::from(x),
        None => Value::String(c.to_string()),
    }
}

impl StraighteningDoc {
    pub fn new(s: &Straightening, basis: &SsytBasis) -> Self {
        StraighteningDoc {
            format: FORMAT_VERSION,
            input: s.input.rows(),
            method: s.method.name().to_string(),
            terms: s
                .terms()
                .map(|(i, c)| Term {
                    coeff: coeff_value(c),
                    index: i,
                    tableau: basis.tableau(i).rows(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub weight: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeListDoc {
    pub format: u32,
    pub kostka: usize,
    pub edges: Vec<Edge>,
}

impl EdgeListDoc {
    pub fn new(g: &CoeffGraph) -> Self {
        EdgeListDoc {
            format: FORMAT_VERSION,
            kostka: g.vertex_count(),
            edges: g
                .edges()
                .iter()
                .map(|(&(from, to), &weight)| Edge { from, to, weight })
                .collect(),
        }
    }
}

/// `+1·S5 −1·S4`: nonzero terms by decreasing label, `0` when empty.
pub fn format_combination(s: &Straightening) -> String {
    let parts: Vec<String> = s
        .terms()
        .rev()
        .map(|(i, c)| {
            let sign = if c.is_negative() { '\u{2212}' } else { '+' };
            format!("{sign}{}·S{i}", c.abs())
        })
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" ")
    }
}

pub fn to_pretty<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}
