//! Domain types shared by every other module: problem instances, bid
//! profiles, allocations, preference comparators, and equity scores.
//!
//! Conventions: goods and agents are addressed by 0-based index everywhere in
//! this crate; the `id` strings on [`Good`] and [`Agent`] are surface labels
//! for serialization only. A preference or bid is a permutation of
//! `0..m` listed from most to least preferred.

use crate::rational::{sum, Rational};
use num_traits::{One, Zero};
use thiserror::Error;

/// One divisible good and its available quantity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Good {
    pub id: String,
    pub quantity: Rational,
}

/// One agent: how much they must receive in total, and their true preference
/// order over good indices (most preferred first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Agent {
    pub id: String,
    pub requirement: Rational,
    pub preference: Vec<usize>,
}

/// A complete allocation problem: goods with quantities `q_j` and agents with
/// requirements `r_i` and true preferences, with `Σ q_j = Σ r_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub goods: Vec<Good>,
    pub agents: Vec<Agent>,
}

/// The preference lists the agents actually submit, one full permutation of
/// good indices per agent. May differ from the true preferences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BidProfile {
    pub bids: Vec<Vec<usize>>,
}

/// An `n x m` matrix of nonnegative amounts with row sums `r_i` and column
/// sums `q_j`; `entries[i][j]` is how much of good `j` agent `i` receives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Allocation {
    pub entries: Vec<Vec<Rational>>,
}

/// Outcome of comparing two allocation shares from one agent's viewpoint.
///
/// `Incomparable` can only arise from [`majorization_compare`]; the
/// lexicographic order is total on distinct shares.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrefOrdering {
    LeftPreferred,
    RightPreferred,
    Equal,
    Incomparable,
}

/// Equity scores by preference-prefix length: entry `k-1` is the minimum over
/// agents of the relative amount (share divided by requirement) the agent
/// receives from their top `k` goods. Nondecreasing, and the last entry is 1
/// for every feasible allocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquityVector(pub Vec<Rational>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("total quantity {total_quantity} != total requirement {total_requirement}")]
    SumMismatch {
        total_quantity: String,
        total_requirement: String,
    },
    #[error("good {index} has non-positive quantity")]
    NonPositiveQuantity { index: usize },
    #[error("agent {index} has non-positive requirement")]
    NonPositiveRequirement { index: usize },
    #[error("agent {agent}: preference list is not a permutation of all goods")]
    InvalidPermutation { agent: usize },
    #[error("share length {found} does not match expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("allocation is not feasible for the instance: {reason}")]
    InfeasibleAllocation { reason: String },
}

/// True iff `perm` lists each of `0..m` exactly once.
pub fn is_permutation(perm: &[usize], m: usize) -> bool {
    if perm.len() != m {
        return false;
    }
    let mut seen = vec![false; m];
    for &j in perm {
        if j >= m || seen[j] {
            return false;
        }
        seen[j] = true;
    }
    true
}

impl Instance {
    pub fn n(&self) -> usize {
        self.agents.len()
    }

    pub fn m(&self) -> usize {
        self.goods.len()
    }

    pub fn quantities(&self) -> impl Iterator<Item = &Rational> {
        self.goods.iter().map(|g| &g.quantity)
    }

    pub fn requirements(&self) -> impl Iterator<Item = &Rational> {
        self.agents.iter().map(|a| &a.requirement)
    }

    pub fn total_quantity(&self) -> Rational {
        sum(self.quantities())
    }

    /// The bid profile in which every agent submits their true preferences.
    pub fn truthful_bids(&self) -> BidProfile {
        BidProfile {
            bids: self.agents.iter().map(|a| a.preference.clone()).collect(),
        }
    }

    /// Checks every structural invariant: positive quantities and
    /// requirements, matching totals, and full preference permutations.
    ///
    /// Every other operation in this crate is defined exactly on instances
    /// that pass this check.
    pub fn validate(&self) -> Result<(), ModelError> {
        let m = self.m();
        for (j, good) in self.goods.iter().enumerate() {
            if !good.quantity.is_positive() {
                return Err(ModelError::NonPositiveQuantity { index: j });
            }
        }
        for (i, agent) in self.agents.iter().enumerate() {
            if !agent.requirement.is_positive() {
                return Err(ModelError::NonPositiveRequirement { index: i });
            }
        }
        let total_q = self.total_quantity();
        let total_r = sum(self.requirements());
        if total_q != total_r {
            return Err(ModelError::SumMismatch {
                total_quantity: crate::rational::format_rational(&total_q),
                total_requirement: crate::rational::format_rational(&total_r),
            });
        }
        for (i, agent) in self.agents.iter().enumerate() {
            if !is_permutation(&agent.preference, m) {
                return Err(ModelError::InvalidPermutation { agent: i });
            }
        }
        Ok(())
    }
}

impl BidProfile {
    /// Checks that there is one full permutation per agent.
    pub fn validate_for(&self, inst: &Instance) -> Result<(), ModelError> {
        if self.bids.len() != inst.n() {
            return Err(ModelError::DimensionMismatch {
                expected: inst.n(),
                found: self.bids.len(),
            });
        }
        for (i, bid) in self.bids.iter().enumerate() {
            if !is_permutation(bid, inst.m()) {
                return Err(ModelError::InvalidPermutation { agent: i });
            }
        }
        Ok(())
    }
}

impl Allocation {
    /// An all-zero matrix of the given shape.
    pub fn zero(n: usize, m: usize) -> Self {
        Allocation {
            entries: vec![vec![Rational::zero(); m]; n],
        }
    }

    pub fn share(&self, agent: usize) -> &[Rational] {
        &self.entries[agent]
    }

    /// Checks nonnegativity and the exact row/column sum constraints.
    pub fn validate_for(&self, inst: &Instance) -> Result<(), ModelError> {
        if self.entries.len() != inst.n() {
            return Err(ModelError::InfeasibleAllocation {
                reason: format!("expected {} rows, found {}", inst.n(), self.entries.len()),
            });
        }
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != inst.m() {
                return Err(ModelError::InfeasibleAllocation {
                    reason: format!("row {i} has {} columns, expected {}", row.len(), inst.m()),
                });
            }
            for (j, x) in row.iter().enumerate() {
                if x < &Rational::zero() {
                    return Err(ModelError::InfeasibleAllocation {
                        reason: format!("entry ({i},{j}) is negative"),
                    });
                }
            }
            let row_sum = sum(row.iter());
            if row_sum != inst.agents[i].requirement {
                return Err(ModelError::InfeasibleAllocation {
                    reason: format!("row {i} sums to {row_sum}, expected {}", inst.agents[i].requirement),
                });
            }
        }
        for j in 0..inst.m() {
            let col_sum = sum(self.entries.iter().map(|row| &row[j]));
            if col_sum != inst.goods[j].quantity {
                return Err(ModelError::InfeasibleAllocation {
                    reason: format!("column {j} sums to {col_sum}, expected {}", inst.goods[j].quantity),
                });
            }
        }
        Ok(())
    }
}

impl EquityVector {
    pub fn values(&self) -> &[Rational] {
        &self.0
    }
}

/// Reorders a share by a preference permutation, most preferred first.
pub fn sorted_share(share: &[Rational], pref: &[usize]) -> Vec<Rational> {
    pref.iter().map(|&j| share[j].clone()).collect()
}

fn check_compare_inputs(
    share_a: &[Rational],
    share_b: &[Rational],
    pref: &[usize],
) -> Result<(), ModelError> {
    let m = pref.len();
    if share_a.len() != m {
        return Err(ModelError::DimensionMismatch { expected: m, found: share_a.len() });
    }
    if share_b.len() != m {
        return Err(ModelError::DimensionMismatch { expected: m, found: share_b.len() });
    }
    if !is_permutation(pref, m) {
        return Err(ModelError::InvalidPermutation { agent: usize::MAX });
    }
    Ok(())
}

/// Lexicographic comparison of two shares from the viewpoint of an agent with
/// preference order `pref`: the share whose reordered vector has the larger
/// leftmost differing coordinate wins. Total on distinct shares; never
/// returns `Incomparable`.
pub fn lex_compare(
    share_a: &[Rational],
    share_b: &[Rational],
    pref: &[usize],
) -> Result<PrefOrdering, ModelError> {
    check_compare_inputs(share_a, share_b, pref)?;
    for &j in pref {
        if share_a[j] != share_b[j] {
            return Ok(if share_a[j] > share_b[j] {
                PrefOrdering::LeftPreferred
            } else {
                PrefOrdering::RightPreferred
            });
        }
    }
    Ok(PrefOrdering::Equal)
}

/// Prefix-sum (majorization) comparison under `pref`: left wins iff every
/// preference-prefix sum of `share_a` weakly dominates that of `share_b` with
/// at least one strict. Returns `Incomparable` when the prefix sums cross.
pub fn majorization_compare(
    share_a: &[Rational],
    share_b: &[Rational],
    pref: &[usize],
) -> Result<PrefOrdering, ModelError> {
    check_compare_inputs(share_a, share_b, pref)?;
    let mut prefix_a = Rational::zero();
    let mut prefix_b = Rational::zero();
    let mut a_dominates = true;
    let mut b_dominates = true;
    let mut any_diff = false;
    for &j in pref {
        prefix_a += &share_a[j];
        prefix_b += &share_b[j];
        if prefix_a != prefix_b {
            any_diff = true;
            if prefix_a > prefix_b {
                b_dominates = false;
            } else {
                a_dominates = false;
            }
        }
    }
    Ok(match (a_dominates, b_dominates, any_diff) {
        (_, _, false) => PrefOrdering::Equal,
        (true, false, true) => PrefOrdering::LeftPreferred,
        (false, true, true) => PrefOrdering::RightPreferred,
        _ => PrefOrdering::Incomparable,
    })
}

/// Computes the equity scores of `alloc` under the instance's true
/// preferences: entry `k-1` is `min_i` of agent `i`'s relative amount from
/// their top `k` goods, where the relative share is `a_ij / r_i`.
pub fn equity_vector(inst: &Instance, alloc: &Allocation) -> Result<EquityVector, ModelError> {
    alloc.validate_for(inst)?;
    let m = inst.m();
    let mut mins = vec![None::<Rational>; m];
    for (i, agent) in inst.agents.iter().enumerate() {
        let mut prefix = Rational::zero();
        for (k, &j) in agent.preference.iter().enumerate() {
            prefix += &alloc.entries[i][j] / &agent.requirement;
            match &mins[k] {
                Some(best) if *best <= prefix => {}
                _ => mins[k] = Some(prefix.clone()),
            }
        }
    }
    Ok(EquityVector(
        mins.into_iter().map(|x| x.expect("n >= 1 validated")).collect(),
    ))
}
