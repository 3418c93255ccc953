//! Independent oracles shared by the integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

use weno7::StencilWindow;

/// Four-point Gauss-Legendre rule on [-1/2, 1/2].
pub fn gauss4() -> [(f64, f64); 4] {
    let a = (3.0 / 7.0 - 2.0 / 7.0 * (6.0f64 / 5.0).sqrt()).sqrt();
    let b = (3.0 / 7.0 + 2.0 / 7.0 * (6.0f64 / 5.0).sqrt()).sqrt();
    let wa = (18.0 + 30.0f64.sqrt()) / 36.0;
    let wb = (18.0 - 30.0f64.sqrt()) / 36.0;
    [(-b, wb), (-a, wa), (a, wa), (b, wb)].map(|(x, w)| (0.5 * x, 0.5 * w))
}

/// Dense solve by Gaussian elimination with partial pivoting.
pub fn solve(mut a: Vec<Vec<f64>>, mut rhs: Vec<f64>) -> Vec<f64> {
    let n = rhs.len();
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs())).unwrap();
        a.swap(col, pivot);
        rhs.swap(col, pivot);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            for c in col..n {
                a[row][c] -= f * a[col][c];
            }
            rhs[row] -= f * rhs[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let tail: f64 = (row + 1..n).map(|c| a[row][c] * x[c]).sum();
        x[row] = (rhs[row] - tail) / a[row][row];
    }
    x
}

/// Monomial coefficients of the cubic whose averages over the four unit
/// cells of sub-stencil `k` (centers `k-3..=k`) equal the window values.
pub fn cell_average_cubic(w: &StencilWindow, k: usize) -> [f64; 4] {
    let a = (0..4)
        .map(|i| {
            let c = (k + i) as f64 - 3.0;
            (0..4)
                .map(|m| ((c + 0.5).powi(m + 1) - (c - 0.5).powi(m + 1)) / (m + 1) as f64)
                .collect()
        })
        .collect();
    let x = solve(a, w.substencil(k).to_vec());
    [x[0], x[1], x[2], x[3]]
}

/// `240 * sum_{q=1..3} int_{-1/2}^{1/2} (p_k^(q))^2 dx` by quadrature.
pub fn bs_indicator_quadrature(w: &StencilWindow) -> [f64; 4] {
    std::array::from_fn(|k| {
        let c = cell_average_cubic(w, k);
        let mut total = 0.0;
        for (x, wt) in gauss4() {
            let d1 = c[1] + 2.0 * c[2] * x + 3.0 * c[3] * x * x;
            let d2 = 2.0 * c[2] + 6.0 * c[3] * x;
            let d3 = 6.0 * c[3];
            total += wt * (d1 * d1 + d2 * d2 + d3 * d3);
        }
        240.0 * total
    })
}

/// Least-squares slope of `log y` against `log x`.
pub fn log_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let (sx, sy) = points.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x.ln(), b + y.ln()));
    let (mx, my) = (sx / n, sy / n);
    let (num, den) = points.iter().fold((0.0, 0.0), |(a, b), (x, y)| {
        let dx = x.ln() - mx;
        (a + dx * (y.ln() - my), b + dx * dx)
    });
    num / den
}
