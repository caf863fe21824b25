//! Aggregated per-permutation report backing the `analyze` command.

use serde::Serialize;

use crate::kings::{bonds, ck_children, is_cylindrical_king, is_king, separators, Bond, Separator};
use crate::metrics::{breadth, cyclic_breadth, MetricReport};
use crate::perm::Permutation;

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub permutation: String,
    pub n: usize,
    pub is_king: bool,
    pub is_cylindrical_king: bool,
    pub breadth: MetricReport,
    pub cyclic_breadth: MetricReport,
    pub bonds: Vec<Bond>,
    pub separators: Vec<Separator>,
    pub ck_children: Vec<Permutation>,
}

impl AnalysisReport {
    pub fn new(sigma: &Permutation) -> Self {
        let ck = is_cylindrical_king(sigma);
        let children = if ck && sigma.len() >= 2 {
            ck_children(sigma).unwrap().into_iter().collect()
        } else {
            Vec::new()
        };
        AnalysisReport {
            permutation: sigma.to_string(),
            n: sigma.len(),
            is_king: is_king(sigma),
            is_cylindrical_king: ck,
            breadth: breadth(sigma),
            cyclic_breadth: cyclic_breadth(sigma),
            bonds: bonds(sigma),
            separators: separators(sigma),
            ck_children: children,
        }
    }
}
