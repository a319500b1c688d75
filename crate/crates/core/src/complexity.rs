//! Operation-count model for BP and OSD.
//!
//! Counts follow the standard per-iteration BP costs and the FLOP/BOP model
//! for order-m OSD. They are model counts, not measured instruction counts.

use std::ops::AddAssign;

use serde::Serialize;

/// Cost of one BP (or mBP) iteration on an (N, K) code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BpIterationCost {
    pub additions: u64,
    pub multiplications: u64,
    pub divisions: u64,
}

impl BpIterationCost {
    /// Variable-node step: N(N−K) additions, 8N(N−K−1) multiplications and
    /// N(N−K) divisions. Check-node step: 2N(N−K) additions and 3N(N−K−1)
    /// multiplications.
    pub fn for_code(n: usize, k: usize) -> Self {
        let n = n as u64;
        let m = n.saturating_sub(k as u64);
        let m1 = m.saturating_sub(1);
        BpIterationCost {
            additions: n * m + 2 * n * m,
            multiplications: 8 * n * m1 + 3 * n * m1,
            divisions: n * m,
        }
    }

    pub fn total(&self) -> u64 {
        self.additions + self.multiplications + self.divisions
    }
}

/// Closed-form FLOP and BOP counts of one order-m OSD invocation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OsdCost {
    pub flops: u64,
    pub bops: u64,
}

impl OsdCost {
    pub fn total(&self) -> u64 {
        self.flops + self.bops
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    u64::try_from(acc).unwrap_or(u64::MAX)
}

/// Reprocessing part only: Σ_{q=0}^{m} C(K,q)(N−K) FLOPs and
/// Σ C(K,q)K(N−K) BOPs.
pub fn osd_reprocessing_cost(n: usize, k: usize, order: usize) -> OsdCost {
    let (n, k) = (n as u64, k as u64);
    let tests: u64 = (0..=order as u64).map(|q| binomial(k, q)).fold(0, u64::saturating_add);
    OsdCost {
        flops: tests.saturating_mul(n - k),
        bops: tests.saturating_mul(k).saturating_mul(n - k),
    }
}

/// Sorting (N log2 N FLOPs, rounded), Gaussian elimination
/// (N·min(K², (N−K)²) BOPs) and reprocessing phases 0..=m.
pub fn osd_complexity_estimate(n: usize, k: usize, order: usize) -> OsdCost {
    let nf = n as f64;
    let sort = if n > 1 { (nf * nf.log2()).round() as u64 } else { 0 };
    let (n64, k64) = (n as u64, k as u64);
    let m = n64 - k64;
    let elim = n64 * (k64 * k64).min(m * m);
    let re = osd_reprocessing_cost(n, k, order);
    OsdCost { flops: sort + re.flops, bops: elim + re.bops }
}

/// Upper bound on the mean per-frame cost:
/// `T_max·C_BP + γ(α·C_BP + C_OSD)`, with γ the probability that the OSD
/// stage runs.
pub fn complexity_bound(gamma: f64, t_max: usize, alpha: usize, c_bp: f64, c_osd: f64) -> f64 {
    t_max as f64 * c_bp + gamma * (alpha as f64 * c_bp + c_osd)
}

/// Per-decode model counters, accumulated across all stages.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct OpCounters {
    pub bp_additions: u64,
    pub bp_multiplications: u64,
    pub bp_divisions: u64,
    pub osd_flops: u64,
    pub osd_bops: u64,
    pub bp_iterations: u64,
    pub mbp_iterations: u64,
    pub osd_invocations: u64,
}

impl OpCounters {
    pub(crate) fn add_bp_iteration(&mut self, cost: &BpIterationCost, modified: bool) {
        self.bp_additions += cost.additions;
        self.bp_multiplications += cost.multiplications;
        self.bp_divisions += cost.divisions;
        if modified {
            self.mbp_iterations += 1;
        } else {
            self.bp_iterations += 1;
        }
    }

    pub(crate) fn add_osd(&mut self, cost: &OsdCost) {
        self.osd_flops += cost.flops;
        self.osd_bops += cost.bops;
        self.osd_invocations += 1;
    }

    /// BP arithmetic plus OSD floating-point operations.
    pub fn flops(&self) -> u64 {
        self.bp_additions + self.bp_multiplications + self.bp_divisions + self.osd_flops
    }

    pub fn bops(&self) -> u64 {
        self.osd_bops
    }

    pub fn total(&self) -> u64 {
        self.flops() + self.bops()
    }
}

impl AddAssign for OpCounters {
    fn add_assign(&mut self, o: Self) {
        self.bp_additions += o.bp_additions;
        self.bp_multiplications += o.bp_multiplications;
        self.bp_divisions += o.bp_divisions;
        self.osd_flops += o.osd_flops;
        self.osd_bops += o.osd_bops;
        self.bp_iterations += o.bp_iterations;
        self.mbp_iterations += o.mbp_iterations;
        self.osd_invocations += o.osd_invocations;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(64, 2), 2016);
        assert_eq!(binomial(64, 3), 41664);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(10, 0), 1);
    }

    #[test]
    fn reprocessing_examples() {
        assert_eq!(osd_reprocessing_cost(128, 64, 0).flops, 64);
        assert_eq!(osd_reprocessing_cost(8, 4, 2), OsdCost { flops: 44, bops: 176 });
    }

    #[test]
    fn full_estimate_bounds_reprocessing() {
        for (n, k, m) in [(128, 64, 3), (96, 48, 2), (7, 4, 4), (32, 16, 0)] {
            let full = osd_complexity_estimate(n, k, m);
            let re = osd_reprocessing_cost(n, k, m);
            assert!(full.flops >= re.flops && full.bops >= re.bops);
        }
        let c = osd_complexity_estimate(128, 64, 0);
        assert_eq!(c.flops, 896 + 64);
        assert_eq!(c.bops, 128 * 64 * 64 + 64 * 64);
    }

    #[test]
    fn bound_limits() {
        assert_eq!(complexity_bound(0.0, 30, 2, 5.0, 100.0), 150.0);
        assert_eq!(complexity_bound(1.0, 30, 2, 5.0, 100.0), 32.0 * 5.0 + 100.0);
        let mid = complexity_bound(0.06, 30, 2, 5.0, 100.0);
        assert!((mid - (150.0 + 0.06 * (10.0 + 100.0))).abs() < 1e-12);
    }

    #[test]
    fn bp_cost_constants() {
        let c = BpIterationCost::for_code(128, 64);
        assert_eq!(c.additions, 3 * 128 * 64);
        assert_eq!(c.multiplications, 11 * 128 * 63);
        assert_eq!(c.divisions, 128 * 64);
    }
}
