use std::f64::consts::PI;

/// Rescaling threshold for the orthonormal recurrence; keeps intermediate
/// values finite when the Gaussian factor is applied only at the end.
const RESCALE: f64 = 1e100;

/// Physicists' Hermite polynomial `H_n(x)` by the three-term recurrence.
pub fn hermite(n: usize, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * x;
    for k in 1..n {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Normalized oscillator eigenfunction
/// `chi_n(x) = (sqrt(pi) 2^n n!)^(-1/2) H_n(x) exp(-x^2/2)`.
///
/// Evaluated with the orthonormal recurrence, so there is no factorial and
/// `n` in the hundreds is fine.
pub fn chi(n: usize, x: f64) -> f64 {
    let mut out = 0.0;
    walk(n, x, |k, v| {
        if k == n {
            out = v;
        }
    });
    out
}

/// `[chi_0(x), ..., chi_kmax(x)]` from a single recurrence pass.
pub fn chi_table(kmax: usize, x: f64) -> Vec<f64> {
    let mut table = vec![0.0; kmax + 1];
    walk(kmax, x, |k, v| table[k] = v);
    table
}

fn walk(n: usize, x: f64, mut emit: impl FnMut(usize, f64)) {
    // p_k are the Hermite polynomials orthonormal against exp(-x^2); the
    // Gaussian half-weight is applied through `log_scale` so that neither the
    // polynomial nor the exponential has to be representable on its own.
    let gauss = -0.5 * x * x;
    let mut log_scale = 0.0;
    let mut prev = 0.0;
    let mut cur = PI.powf(-0.25);
    emit(0, cur * gauss.exp());
    for k in 0..n {
        let kf = k as f64;
        let next = x * (2.0 / (kf + 1.0)).sqrt() * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
        if cur.abs() > RESCALE {
            prev /= RESCALE;
            cur /= RESCALE;
            log_scale += RESCALE.ln();
        }
        emit(k + 1, cur * (gauss + log_scale).exp());
    }
}
