use crate::time::{lssprk87_amplification_coeffs, lssprk87_naive_first_order_sum, ssprk54};
use crate::weno::{undivided_diff_coeffs, CANDIDATE_COEFFS, IDEAL_WEIGHTS, UNDIVIDED_COEFFS};

/// Seventh-order upwind-biased flux on `f[j-3..=j+3]`, times 420.
pub const UPWIND7_TIMES_420: [f64; 7] = [-3.0, 25.0, -101.0, 319.0, 214.0, -38.0, 4.0];

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    /// Largest deviation from the oracle.
    pub deviation: f64,
    pub tolerance: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.deviation <= self.tolerance
    }
}

fn max_abs(it: impl IntoIterator<Item = f64>) -> f64 {
    it.into_iter().fold(0.0, |m, v| m.max(v.abs()))
}

/// Coefficient-regeneration and tableau oracles.
pub fn selfcheck() -> Vec<Check> {
    let mut checks = Vec::new();

    checks.push(Check {
        name: "candidate rows sum to one",
        deviation: max_abs(CANDIDATE_COEFFS.iter().map(|r| r.iter().sum::<f64>() - 1.0)),
        tolerance: 1e-15,
    });

    let mut combined = [0.0; 7];
    for (k, row) in CANDIDATE_COEFFS.iter().enumerate() {
        for (i, c) in row.iter().enumerate() {
            combined[k + i] += IDEAL_WEIGHTS[k] * c;
        }
    }
    checks.push(Check {
        name: "ideal weights give the seventh-order upwind flux",
        deviation: max_abs(combined.iter().zip(UPWIND7_TIMES_420).map(|(a, b)| a - b / 420.0)),
        tolerance: 1e-15,
    });

    let mut regen = 0.0f64;
    for (k, rows) in UNDIVIDED_COEFFS.iter().enumerate() {
        for (s, row) in rows.iter().enumerate() {
            let solved = undivided_diff_coeffs(k, s + 1);
            regen = regen.max(max_abs(row.iter().zip(solved).map(|(a, b)| a - b)));
        }
    }
    checks.push(Check {
        name: "undivided differences match the Vandermonde solve",
        deviation: regen,
        tolerance: 1e-12,
    });

    let c = lssprk87_amplification_coeffs();
    let mut factorial = 1.0;
    let mut taylor = 0.0f64;
    for (m, cm) in c.iter().enumerate().take(8) {
        if m > 0 {
            factorial *= m as f64;
        }
        taylor = taylor.max((cm - 1.0 / factorial).abs() * factorial);
    }
    checks.push(Check {
        name: "lSSPRK(8,7) polynomial matches exp(z) through z^7",
        deviation: taylor,
        tolerance: 1e-13,
    });
    checks.push(Check {
        name: "lSSPRK(8,7) leading coefficient is 1/80640",
        deviation: (c[8] * 80640.0 - 1.0).abs(),
        tolerance: 1e-14,
    });
    checks.push(Check {
        name: "lSSPRK(8,7) naive first-order sum is 629/630",
        deviation: (lssprk87_naive_first_order_sum() - 629.0 / 630.0).abs(),
        tolerance: 1e-15,
    });

    let rows = [ssprk54::S2.iter().sum::<f64>(), ssprk54::S3.iter().sum(), ssprk54::S4.iter().sum(), ssprk54::S5.iter().sum()];
    checks.push(Check {
        name: "SSPRK(5,4) stage weights are convex",
        deviation: max_abs(rows.iter().map(|r| r - 1.0)),
        tolerance: 1e-14,
    });
    checks
}
