//! Downsets within the poset of cylindrical king permutations, cover
//! relations, gap search, and exhaustive theorem verifiers.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kings::{bonds, enumerate, is_cylindrical_king, BondKind, KingClass};
use crate::perm::Permutation;
use crate::prolific::distinct_patterns;

/// The induced Hasse diagram of `{ π ∈ ℂ𝕂 : π ⪯ σ }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DownsetGraph {
    /// Sorted by rank descending, then lexicographically.
    pub nodes: Vec<Permutation>,
    /// Cover edges, directed upper → lower.
    pub edges: Vec<(Permutation, Permutation)>,
}

/// Outcome of an intermediate-permutation search between `π ≺ σ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapWitness {
    pub sigma: Permutation,
    pub pi: Permutation,
    pub tau: Option<Permutation>,
    /// `|σ| − |τ|` when τ is present.
    pub gap: Option<usize>,
}

/// Every distinct pattern of `σ` (all sizes), via memoized repeated deletion.
fn all_patterns(sigma: &Permutation) -> HashSet<Permutation> {
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut frontier = vec![sigma.clone()];
    seen.insert(sigma.clone());
    while let Some(p) = frontier.pop() {
        for a in 1..=p.len() as u32 {
            let child = p.delete_value(a).unwrap();
            if !child.is_empty() && seen.insert(child.clone()) {
                frontier.push(child);
            }
        }
    }
    seen
}

/// The cylindrical-king patterns of `σ`, grouped by size.
fn ck_patterns_by_rank(sigma: &Permutation) -> BTreeMap<usize, BTreeSet<Permutation>> {
    let mut by_rank: BTreeMap<usize, BTreeSet<Permutation>> = BTreeMap::new();
    for p in all_patterns(sigma) {
        if is_cylindrical_king(&p) {
            by_rank.entry(p.len()).or_default().insert(p);
        }
    }
    by_rank
}

fn require_ck(sigma: &Permutation) -> Result<()> {
    if !is_cylindrical_king(sigma) {
        return Err(Error::NotInClass {
            perm: sigma.to_string(),
            class: format!("CK_{}", sigma.len()),
        });
    }
    Ok(())
}

/// Computes the downset of `σ` in ℂ𝕂 together with its cover edges.
pub fn downset(sigma: &Permutation) -> Result<DownsetGraph> {
    require_ck(sigma)?;
    let mut nodes: Vec<Permutation> = ck_patterns_by_rank(sigma)
        .into_values()
        .flatten()
        .collect();
    nodes.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let mut edges = Vec::new();
    for u in &nodes {
        for l in &nodes {
            if l.len() < u.len() && u.contains(l) {
                let covered = nodes.iter().any(|m| {
                    l.len() < m.len() && m.len() < u.len() && u.contains(m) && m.contains(l)
                });
                if !covered {
                    edges.push((u.clone(), l.clone()));
                }
            }
        }
    }
    Ok(DownsetGraph { nodes, edges })
}

impl DownsetGraph {
    /// DOT text: one node per permutation labeled with its text form, edges
    /// directed upper → lower.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph downset {\n");
        for n in &self.nodes {
            out.push_str(&format!("    \"{n}\";\n"));
        }
        for (u, l) in &self.edges {
            out.push_str(&format!("    \"{u}\" -> \"{l}\";\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Searches ranks `|σ|−1` down to `|σ|−max_gap` for `τ ∈ ℂ𝕂` with
/// `π ≺ τ ≺ σ`, preferring the smallest gap; among equal-gap candidates the
/// lexicographically least τ wins.
pub fn find_intermediate(
    sigma: &Permutation,
    pi: &Permutation,
    max_gap: usize,
) -> Result<GapWitness> {
    require_ck(sigma)?;
    require_ck(pi)?;
    if !sigma.contains_strictly(pi) {
        return Err(Error::NotContained {
            pattern: pi.to_string(),
            perm: sigma.to_string(),
        });
    }
    let n = sigma.len();
    let deepest = max_gap.min(n - pi.len() - 1);
    for gap in 1..=deepest {
        let tau = distinct_patterns(sigma, gap)?
            .into_iter()
            .filter(|t| is_cylindrical_king(t) && t.contains(pi))
            .next();
        if let Some(tau) = tau {
            return Ok(GapWitness {
                sigma: sigma.clone(),
                pi: pi.clone(),
                tau: Some(tau),
                gap: Some(gap),
            });
        }
    }
    Ok(GapWitness {
        sigma: sigma.clone(),
        pi: pi.clone(),
        tau: None,
        gap: None,
    })
}

/// One streamable record per rank of an exhaustive suite.
#[derive(Clone, Debug, Serialize)]
pub struct RankSummary {
    pub n: usize,
    pub checked: u64,
    pub violations: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapPair {
    pub sigma: Permutation,
    pub pi: Permutation,
}

/// Report of `verify_gap_theorem`.
#[derive(Clone, Debug, Serialize)]
pub struct GapReport {
    pub max_n: usize,
    pub ranks: Vec<RankSummary>,
    /// Pairs with `|σ|−|π| > 4` lacking any intermediate within gap 4.
    pub violations: Vec<GapPair>,
    /// Pairs whose best intermediate sits at gap exactly 4.
    pub gap4_extremal: Vec<GapPair>,
    /// The subset of violations with `|σ|−|π| = 5`: admissible under the
    /// weaker "> 5" reading, reported separately so both can be audited.
    pub diff5_violations: Vec<GapPair>,
}

impl GapReport {
    pub fn has_violations(&self) -> bool {
        !self.violations.is_empty()
    }
}

/// For every `σ ∈ CK_n` (6 ≤ n ≤ max_n) and every CK pattern π of σ with
/// `|σ|−|π| > 4`, checks that some `τ ∈ ℂ𝕂` with `π ≺ τ ≺ σ` exists at gap
/// at most 4.
pub fn verify_gap_theorem(max_n: usize) -> Result<GapReport> {
    if max_n < 6 {
        return Err(Error::MaxNTooSmall { got: max_n, min: 6 });
    }
    let mut report = GapReport {
        max_n,
        ranks: Vec::new(),
        violations: Vec::new(),
        gap4_extremal: Vec::new(),
        diff5_violations: Vec::new(),
    };
    for n in 6..=max_n {
        let per_sigma: Vec<(u64, Vec<GapPair>, Vec<GapPair>)> = enumerate(n, KingClass::Cylindrical)
            .into_par_iter()
            .map(|sigma| {
                let by_rank = ck_patterns_by_rank(&sigma);
                let mut checked = 0u64;
                let mut viols = Vec::new();
                let mut extremal = Vec::new();
                for (&rank, pis) in by_rank.range(..n - 4) {
                    debug_assert!(n - rank > 4);
                    for pi in pis {
                        checked += 1;
                        let best = (1..=4).find(|gap| {
                            by_rank
                                .get(&(n - gap))
                                .is_some_and(|taus| taus.iter().any(|t| t.contains(pi)))
                        });
                        let pair = GapPair {
                            sigma: sigma.clone(),
                            pi: pi.clone(),
                        };
                        match best {
                            None => viols.push(pair),
                            Some(4) => extremal.push(pair),
                            Some(_) => {}
                        }
                    }
                }
                (checked, viols, extremal)
            })
            .collect();
        let mut checked = 0;
        let mut rank_viols = 0;
        for (c, viols, extremal) in per_sigma {
            checked += c;
            rank_viols += viols.len() as u64;
            for v in viols {
                if n - v.pi.len() == 5 {
                    report.diff5_violations.push(v.clone());
                }
                report.violations.push(v);
            }
            report.gap4_extremal.extend(extremal);
        }
        report.ranks.push(RankSummary {
            n,
            checked,
            violations: rank_viols,
        });
    }
    Ok(report)
}

/// Report of `verify_building_blocks`.
#[derive(Clone, Debug, Serialize)]
pub struct BlocksReport {
    pub max_n: usize,
    pub ranks: Vec<RankSummary>,
    pub violations: Vec<Permutation>,
    /// One witnessing basis pattern per verified σ.
    pub witnesses: Vec<(Permutation, Permutation)>,
}

impl BlocksReport {
    pub fn has_violations(&self) -> bool {
        !self.violations.is_empty()
    }
}

/// The ten building blocks: `orb([31425]) ∪ orb([24135])`, which is `CK_5`.
pub fn building_block_basis() -> Vec<Permutation> {
    let a: Permutation = "[31425]".parse().unwrap();
    let b: Permutation = "[24135]".parse().unwrap();
    let mut basis: BTreeSet<Permutation> = a.orbit().members;
    basis.extend(b.orbit().members);
    basis.into_iter().collect()
}

/// Checks that every `σ ∈ CK_n` (5 ≤ n ≤ max_n) contains a member of the
/// ten-element building-block basis.
pub fn verify_building_blocks(max_n: usize) -> Result<BlocksReport> {
    if max_n < 5 {
        return Err(Error::MaxNTooSmall { got: max_n, min: 5 });
    }
    let basis = building_block_basis();
    let mut report = BlocksReport {
        max_n,
        ranks: Vec::new(),
        violations: Vec::new(),
        witnesses: Vec::new(),
    };
    for n in 5..=max_n {
        let per_sigma: Vec<(Permutation, Option<Permutation>)> =
            enumerate(n, KingClass::Cylindrical)
                .into_par_iter()
                .map(|sigma| {
                    let witness = basis.iter().find(|pi| sigma.contains(pi)).cloned();
                    (sigma, witness)
                })
                .collect();
        let mut checked = 0;
        let mut viols = 0;
        for (sigma, witness) in per_sigma {
            checked += 1;
            match witness {
                Some(pi) => report.witnesses.push((sigma, pi)),
                None => {
                    viols += 1;
                    report.violations.push(sigma);
                }
            }
        }
        report.ranks.push(RankSummary {
            n,
            checked,
            violations: viols,
        });
    }
    Ok(report)
}

/// A failed instance of the single-deletion observation.
#[derive(Clone, Debug, Serialize)]
pub struct DeletionObsViolation {
    pub sigma: Permutation,
    /// The value whose deletion exposed the bond.
    pub deleted: u32,
    /// The bond's elements as values of σ.
    pub bond: (u32, u32),
    pub kind: BondKind,
    pub pi: Permutation,
}

/// Report of `verify_deletion_observation`.
#[derive(Clone, Debug, Serialize)]
pub struct DeletionObsReport {
    pub max_n: usize,
    pub ranks: Vec<RankSummary>,
    pub violations: Vec<DeletionObsViolation>,
}

impl DeletionObsReport {
    pub fn has_violations(&self) -> bool {
        !self.violations.is_empty()
    }
}

/// Checks the deletion observation for one σ: whenever `π ∈ ℂ𝕂` with
/// `π ≺ ∇*_a(σ)` and `∇*_a(σ)` has a cyclic bond formed by elements j, k of
/// σ, then `π ≺ ∇*_k(σ)` or `π ≺ ∇*_j(σ)` — both when the bond is regular.
pub fn deletion_observation_check(sigma: &Permutation) -> (u64, Vec<DeletionObsViolation>) {
    let n = sigma.len();
    let mut checked = 0u64;
    let mut violations = Vec::new();
    for a in 1..=n as u32 {
        let tau = sigma.delete_value(a).unwrap();
        let tau_bonds = bonds(&tau);
        if tau_bonds.is_empty() {
            continue;
        }
        let unstd = |v: u32| if v >= a { v + 1 } else { v };
        let ck_pis: Vec<Permutation> = ck_patterns_by_rank(&tau).into_values().flatten().collect();
        for bond in tau_bonds {
            let (j, k) = (unstd(bond.values.0), unstd(bond.values.1));
            let del_j = sigma.delete_value(j).unwrap();
            let del_k = sigma.delete_value(k).unwrap();
            for pi in &ck_pis {
                checked += 1;
                let in_j = del_j.contains(pi);
                let in_k = del_k.contains(pi);
                let ok = match bond.kind {
                    BondKind::Regular => in_j && in_k,
                    BondKind::Edge => in_j || in_k,
                };
                if !ok {
                    violations.push(DeletionObsViolation {
                        sigma: sigma.clone(),
                        deleted: a,
                        bond: (j, k),
                        kind: bond.kind,
                        pi: pi.clone(),
                    });
                }
            }
        }
    }
    (checked, violations)
}

/// Runs `deletion_observation_check` over all `σ ∈ CK_n`, 5 ≤ n ≤ max_n.
pub fn verify_deletion_observation(max_n: usize) -> Result<DeletionObsReport> {
    if max_n < 5 {
        return Err(Error::MaxNTooSmall { got: max_n, min: 5 });
    }
    let mut report = DeletionObsReport {
        max_n,
        ranks: Vec::new(),
        violations: Vec::new(),
    };
    for n in 5..=max_n {
        let per_sigma: Vec<(u64, Vec<DeletionObsViolation>)> =
            enumerate(n, KingClass::Cylindrical)
                .into_par_iter()
                .map(|sigma| deletion_observation_check(&sigma))
                .collect();
        let mut checked = 0;
        let mut viols = 0;
        for (c, v) in per_sigma {
            checked += c;
            viols += v.len() as u64;
            report.violations.extend(v);
        }
        report.ranks.push(RankSummary {
            n,
            checked,
            violations: viols,
        });
    }
    Ok(report)
}
