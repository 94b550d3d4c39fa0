//! Closed-form upper bounds on `TC_k` (unreduced: a point has `TC_k = 1`).
//!
//! Topological hypotheses (a fibration exists, an action is free, ...) are
//! never checked. They are recorded as assumption strings on [`BoundFact`].

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Dimensional,
    Fibration,
    SubspaceFibration,
    Covering,
    GroupAction,
    LensFreeCircle,
}

/// An upper bound together with the inputs it was computed from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundFact {
    pub kind: BoundKind,
    pub value: u64,
    pub inputs: BTreeMap<String, u64>,
    pub assumptions: Vec<String>,
}

impl BoundFact {
    fn new(kind: BoundKind, value: u64, inputs: &[(&str, u64)], assumptions: &[&str]) -> Self {
        BoundFact {
            kind,
            value,
            inputs: inputs.iter().map(|&(k, v)| (k.to_owned(), v)).collect(),
            assumptions: assumptions.iter().map(|s| (*s).to_owned()).collect(),
        }
    }

    pub fn dimensional(k: u32, dim: u64) -> Self {
        Self::new(
            BoundKind::Dimensional,
            dim_upper(k, dim),
            &[("k", u64::from(k)), ("dim", dim)],
            &["space is paracompact"],
        )
    }

    pub fn fibration(tc_fiber: u64, cat_base_power: u64) -> Result<Self> {
        Ok(Self::new(
            BoundKind::Fibration,
            fibration_upper(tc_fiber, cat_base_power)?,
            &[("tc_k_fiber", tc_fiber), ("cat_base_power", cat_base_power)],
            &["E -> B is a fibration with fibre F"],
        ))
    }

    pub fn subspace_fibration(cat_y: u64, tc_sub: u64) -> Result<Self> {
        Ok(Self::new(
            BoundKind::SubspaceFibration,
            subspace_fibration_upper(cat_y, tc_sub)?,
            &[("cat_y", cat_y), ("tc_sub", tc_sub)],
            &[
                "X -> E^k -> Y is a fibration of path-connected spaces",
                "tc_sub is the subspace TC_k of the fibre in E",
            ],
        ))
    }

    pub fn covering(cat_base_power: u64) -> Result<Self> {
        Ok(Self::new(
            BoundKind::Covering,
            covering_upper(cat_base_power)?,
            &[("cat_base_power", cat_base_power)],
            &["total space covers a path-connected base"],
        ))
    }

    pub fn group_action(k: u32, dim_x: u64, dim_p: u64) -> Result<Self> {
        Ok(Self::new(
            BoundKind::GroupAction,
            group_action_upper(k, dim_x, dim_p)?,
            &[("k", u64::from(k)), ("dim_x", dim_x), ("dim_p", dim_p)],
            &[
                "G acts locally smoothly on X and diagonally on X^k with principal orbit P",
                "every tuple has a path-connected common fixed set or is fixed",
            ],
        ))
    }

    /// `TC_k(L^{2n+1}_m) ≤ k(2n+1)` from the free circle action.
    pub fn lens_free_circle(n: u32, k: u32) -> Result<Self> {
        let fact = Self::group_action(k, 2 * u64::from(n) + 1, 1)?;
        Ok(BoundFact {
            kind: BoundKind::LensFreeCircle,
            inputs: [("n", u64::from(n)), ("k", u64::from(k))]
                .into_iter()
                .map(|(k, v)| (k.to_owned(), v))
                .collect(),
            assumptions: vec!["lens space carries a free S^1-action".to_owned()],
            ..fact
        })
    }

    /// Recomputes the value from the recorded inputs.
    pub fn recheck(&self) -> bool {
        let get = |name: &str| self.inputs.get(name).copied();
        let recomputed = match self.kind {
            BoundKind::Dimensional => get("k")
                .zip(get("dim"))
                .map(|(k, d)| Ok(dim_upper(k as u32, d))),
            BoundKind::Fibration => get("tc_k_fiber")
                .zip(get("cat_base_power"))
                .map(|(a, b)| fibration_upper(a, b)),
            BoundKind::SubspaceFibration => get("cat_y")
                .zip(get("tc_sub"))
                .map(|(a, b)| subspace_fibration_upper(a, b)),
            BoundKind::Covering => get("cat_base_power").map(covering_upper),
            BoundKind::GroupAction => match (get("k"), get("dim_x"), get("dim_p")) {
                (Some(k), Some(d), Some(p)) => Some(group_action_upper(k as u32, d, p)),
                _ => None,
            },
            BoundKind::LensFreeCircle => get("n")
                .zip(get("k"))
                .map(|(n, k)| Ok(lens_upper(n as u32, k as u32))),
        };
        self.value >= 1 && matches!(recomputed, Some(Ok(v)) if v == self.value)
    }
}

fn require_positive(name: &str, v: u64) -> Result<()> {
    if v >= 1 {
        Ok(())
    } else {
        Err(Error::domain(format!("{name} must be >= 1")))
    }
}

/// `k·dim + 1`.
pub fn dim_upper(k: u32, dim: u64) -> u64 {
    u64::from(k) * dim + 1
}

/// `TC_k(F) · cat(B^k)`.
pub fn fibration_upper(tc_k_fiber: u64, cat_base_power: u64) -> Result<u64> {
    require_positive("tc_k_fiber", tc_k_fiber)?;
    require_positive("cat_base_power", cat_base_power)?;
    Ok(tc_k_fiber * cat_base_power)
}

/// `cat(Y) · TC_{k,E}(X)`.
pub fn subspace_fibration_upper(cat_y: u64, tc_sub: u64) -> Result<u64> {
    require_positive("cat_y", cat_y)?;
    require_positive("tc_sub", tc_sub)?;
    Ok(cat_y * tc_sub)
}

/// A covering space has `TC_k ≤ cat(X^k)` of its base.
pub fn covering_upper(cat_base_power: u64) -> Result<u64> {
    require_positive("cat_base_power", cat_base_power)?;
    Ok(cat_base_power)
}

/// `k·dim(X) − dim(P) + 1` for a principal orbit `P` of the diagonal action.
/// For free or semi-free actions `dim(P) = dim(G)`.
pub fn group_action_upper(k: u32, dim_x: u64, dim_p: u64) -> Result<u64> {
    let top = u64::from(k) * dim_x;
    if dim_p > top {
        return Err(Error::domain(format!(
            "orbit dimension {dim_p} exceeds k·dim(X) = {top}"
        )));
    }
    Ok(top - dim_p + 1)
}

/// `TC_k(S^l)`: `k` for odd `l`, `k + 1` for even `l`.
pub fn tc_sphere(k: u32, l: u32) -> u64 {
    u64::from(k) + u64::from(l.is_multiple_of(2))
}

/// `cat((S^l)^k) = k + 1`.
pub fn cat_sphere_power(k: u32) -> u64 {
    u64::from(k) + 1
}

/// `cat((ℂP^n)^k) = kn + 1`.
pub fn cat_cpn_power(k: u32, n: u32) -> u64 {
    u64::from(k) * u64::from(n) + 1
}

/// Whether the fibration bound for an `S^{l1}`-fibration over `S^{l2}`
/// beats the dimensional bound `k(l1+l2) + 1`.
///
/// Odd `l1`: `k(k+1) < k(l1+l2) + 1`, i.e. `k ≤ l1 + l2 − 1`.
/// Even `l1`: `(k+1)^2 < k(l1+l2) + 1`, i.e. `k ≤ l1 + l2 − 3`.
pub fn sphere_bundle_improves(l1: u32, l2: u32, k: u32) -> bool {
    let total = i64::from(l1) + i64::from(l2);
    let k = i64::from(k);
    if l1 % 2 == 1 {
        k < total
    } else {
        k <= total - 3
    }
}

/// Sufficient condition for an `S^l`-fibration over `B` to beat the
/// dimensional bound: `cat(B^k) ≤ l + dim B` for odd `l`, and
/// `cat(B^k) ≤ l + dim B − 1` for even `l`.
pub fn general_bundle_improves(l: u32, dim_b: u64, cat_b_power: u64) -> bool {
    let reach = u64::from(l) + dim_b;
    if l % 2 == 1 {
        cat_b_power <= reach
    } else {
        cat_b_power < reach
    }
}

/// `k(2n+1)`, the free-circle-action bound for lens spaces.
pub fn lens_upper(n: u32, k: u32) -> u64 {
    group_action_upper(k, 2 * u64::from(n) + 1, 1).expect("1 <= k(2n+1)")
}
