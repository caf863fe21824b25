//! k-prolific detection by definitional oracle and by breadth criterion.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kings::{is_cylindrical_king, is_king};
use crate::metrics::{breadth, cyclic_breadth};
use crate::perm::Permutation;

/// Which class the prolific verdict is taken in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum PermClass {
    Plain,
    King,
    Cylindrical,
}

impl PermClass {
    pub fn member(self, sigma: &Permutation) -> bool {
        match self {
            PermClass::Plain => true,
            PermClass::King => is_king(sigma),
            PermClass::Cylindrical => is_cylindrical_king(sigma),
        }
    }

    fn name(self) -> &'static str {
        match self {
            PermClass::Plain => "S_n",
            PermClass::King => "K_n",
            PermClass::Cylindrical => "CK_n",
        }
    }
}

/// Result of the definitional k-prolific check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProlificReport {
    pub k: usize,
    pub class: PermClass,
    pub distinct_patterns: u64,
    pub max_possible: u64,
    pub all_in_class: bool,
    pub verdict: bool,
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

fn check_k(sigma: &Permutation, k: usize) -> Result<()> {
    let n = sigma.len();
    if n == 0 || k == 0 || k > n - 1 {
        return Err(Error::KOutOfRange {
            k,
            max: n.saturating_sub(1),
        });
    }
    Ok(())
}

/// All distinct patterns obtained by deleting `k` entries of `σ`.
pub fn distinct_patterns(sigma: &Permutation, k: usize) -> Result<BTreeSet<Permutation>> {
    check_k(sigma, k)?;
    let n = sigma.len();
    let mut out = BTreeSet::new();
    for kept in sigma.word().iter().copied().combinations(n - k) {
        out.insert(Permutation::standardize(&kept)?);
    }
    Ok(out)
}

fn check_class_membership(sigma: &Permutation, class: PermClass) -> Result<()> {
    if class != PermClass::Plain && !class.member(sigma) {
        return Err(Error::NotInClass {
            perm: sigma.to_string(),
            class: class.name().to_string(),
        });
    }
    Ok(())
}

/// Definitional verdict: all `binom(n,k)` subsets give pairwise-distinct
/// patterns, and (for KING/CYLINDRICAL) every pattern lies in the class.
///
/// Refuses `n > 16`: the subset oracle is for desk scale only.
pub fn is_k_prolific(sigma: &Permutation, k: usize, class: PermClass) -> Result<ProlificReport> {
    check_k(sigma, k)?;
    check_class_membership(sigma, class)?;
    if sigma.len() > 16 {
        return Err(Error::OracleTooLarge(sigma.len()));
    }
    let patterns = distinct_patterns(sigma, k)?;
    let distinct = patterns.len() as u64;
    let max_possible = binomial(sigma.len(), k);
    let all_in_class = patterns.iter().all(|p| class.member(p));
    Ok(ProlificReport {
        k,
        class,
        distinct_patterns: distinct,
        max_possible,
        all_in_class,
        verdict: distinct == max_possible && all_in_class,
    })
}

/// The breadth criterion: `br(σ) ≥ k+3` (KING) or `cbr(σ) ≥ k+3`
/// (CYLINDRICAL), with UNBOUNDED counting as above any bound.
///
/// Unlike the definitional oracle, this has no size limit.
pub fn prolific_criterion(sigma: &Permutation, k: usize, class: PermClass) -> Result<bool> {
    check_k(sigma, k)?;
    check_class_membership(sigma, class)?;
    let bound = k as u32 + 3;
    match class {
        PermClass::King => Ok(breadth(sigma).at_least(bound)),
        PermClass::Cylindrical => Ok(cyclic_breadth(sigma).at_least(bound)),
        PermClass::Plain => Err(Error::NotInClass {
            perm: sigma.to_string(),
            class: "KING or CYLINDRICAL (criterion is class-specific)".to_string(),
        }),
    }
}
