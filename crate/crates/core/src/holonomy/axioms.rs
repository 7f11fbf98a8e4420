//! Executable checks of the three loop-space axioms.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{group_distance, CMat, GroupElement};
use crate::path::LoopAtBase;

use super::map::HolonomyMap;

/// Outcome of an axiom audit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub axiom1_max_defect: f64,
    pub axiom2_max_defect: f64,
    pub axiom3_max_second_difference: f64,
    pub samples: usize,
    pub pass: [bool; 3],
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.pass.iter().all(|&p| p)
    }
}

/// `d(H(α∘β), H(β)H(α))`.
pub fn check_axiom1(h: &HolonomyMap, alpha: &LoopAtBase, beta: &LoopAtBase) -> Result<f64> {
    let joint = h.eval(&alpha.compose(beta)?)?;
    let product = h.eval(beta)?.try_mul(&h.eval(alpha)?)?;
    group_distance(&joint, &product)
}

/// `d(H(loop), e)` for a loop that is thin by construction.
pub fn check_axiom2(h: &HolonomyMap, lp: &LoopAtBase) -> Result<f64> {
    group_distance(&h.eval(lp)?, &GroupElement::identity(h.spec()))
}

/// Largest normalized second difference `‖h(u+δ) − 2h(u) + h(u−δ)‖ / δ²` of
/// `u ↦ H(family(u))` over a `grid^k` lattice on `[0, 1]^k`, taken along each axis.
pub fn check_axiom3<F>(h: &HolonomyMap, family: F, k: usize, grid: usize) -> Result<f64>
where
    F: Fn(&[f64]) -> Result<LoopAtBase>,
{
    if grid < 3 || k == 0 {
        return Err(Error::InvalidConfig(format!(
            "axiom 3 needs k >= 1 and grid >= 3, got k = {k}, grid = {grid}"
        )));
    }
    let total = grid
        .checked_pow(k as u32)
        .ok_or_else(|| Error::InvalidConfig("axiom 3 lattice too large".into()))?;
    let delta = 1.0 / (grid - 1) as f64;
    let mut values: Vec<CMat> = Vec::with_capacity(total);
    let mut u = vec![0.0; k];
    for flat in 0..total {
        let mut r = flat;
        for c in u.iter_mut() {
            *c = (r % grid) as f64 * delta;
            r /= grid;
        }
        values.push(*h.eval(&family(&u)?)?.matrix());
    }
    let mut worst = 0.0f64;
    for flat in 0..total {
        let mut stride = 1;
        let mut r = flat;
        for _ in 0..k {
            let coord = r % grid;
            r /= grid;
            if coord > 0 && coord + 1 < grid {
                let second = values[flat + stride] - values[flat].scale(2.0) + values[flat - stride];
                worst = worst.max(second.frobenius_norm() / (delta * delta));
            }
            stride *= grid;
        }
    }
    Ok(worst)
}
