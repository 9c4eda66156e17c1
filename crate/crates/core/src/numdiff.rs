//! Central finite differences with Richardson extrapolation.

use serde::Serialize;

use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiffConfig {
    /// Largest step of the central-difference ladder.
    pub step: f64,
    /// Number of Richardson levels; the ladder uses `step / 2^m`, `m = 0..=levels`.
    pub levels: usize,
}

impl Default for DiffConfig {
    fn default() -> Self {
        DiffConfig {
            step: 1e-4,
            levels: 1,
        }
    }
}

/// Combines estimates taken at steps `h, h/ratio, h/ratio², …` whose error
/// expands in even powers of the step, eliminating one power per level.
pub fn richardson(mut estimates: Vec<Vec<f64>>, ratio: f64) -> Vec<f64> {
    let ratio2 = ratio * ratio;
    let mut factor = ratio2;
    while estimates.len() > 1 {
        estimates = estimates
            .windows(2)
            .map(|w| {
                w[1].iter()
                    .zip(&w[0])
                    .map(|(fine, coarse)| (factor * fine - coarse) / (factor - 1.0))
                    .collect()
            })
            .collect();
        factor *= ratio2;
    }
    estimates.pop().unwrap_or_default()
}

/// `∂f/∂x^dir` at `x`.
pub fn central_derivative<F>(f: F, x: &[f64], dir: usize, cfg: &DiffConfig) -> Result<Vec<f64>>
where
    F: Fn(&[f64]) -> Result<Vec<f64>>,
{
    let mut ladder = Vec::with_capacity(cfg.levels + 1);
    let mut h = cfg.step;
    let mut probe = x.to_vec();
    for _ in 0..=cfg.levels {
        probe[dir] = x[dir] + h;
        let plus = f(&probe)?;
        probe[dir] = x[dir] - h;
        let minus = f(&probe)?;
        probe[dir] = x[dir];
        ladder.push(
            plus.iter()
                .zip(&minus)
                .map(|(p, m)| (p - m) / (2.0 * h))
                .collect(),
        );
        h *= 0.5;
    }
    Ok(richardson(ladder, 2.0))
}

/// `∂²f/∂a∂b` at `(0, 0)` from the four-point mixed stencil, evaluated at each
/// step of the geometric sequence `steps` and Richardson-combined.
pub fn mixed_second_derivative<F>(f: F, steps: &[f64]) -> Result<Vec<f64>>
where
    F: Fn(f64, f64) -> Result<Vec<f64>>,
{
    let mut ladder = Vec::with_capacity(steps.len());
    for &h in steps {
        let pp = f(h, h)?;
        let pm = f(h, -h)?;
        let mp = f(-h, h)?;
        let mm = f(-h, -h)?;
        ladder.push(
            (0..pp.len())
                .map(|i| (pp[i] - pm[i] - mp[i] + mm[i]) / (4.0 * h * h))
                .collect(),
        );
    }
    let ratio = if steps.len() > 1 { steps[0] / steps[1] } else { 1.0 };
    Ok(richardson(ladder, ratio))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_of_sin() {
        let f = |x: &[f64]| Ok(vec![x[0].sin(), (2.0 * x[1]).exp()]);
        let d0 = central_derivative(f, &[0.7, 0.2], 0, &DiffConfig::default()).unwrap();
        assert!((d0[0] - 0.7f64.cos()).abs() < 1e-11);
        let d1 = central_derivative(f, &[0.7, 0.2], 1, &DiffConfig::default()).unwrap();
        assert!((d1[1] - 2.0 * 0.4f64.exp()).abs() < 1e-10);
    }

    #[test]
    fn richardson_beats_plain_difference() {
        let f = |x: &[f64]| Ok(vec![x[0].powi(5)]);
        let plain = central_derivative(f, &[1.0], 0, &DiffConfig { step: 1e-2, levels: 0 }).unwrap();
        let extrap = central_derivative(f, &[1.0], 0, &DiffConfig { step: 1e-2, levels: 1 }).unwrap();
        assert!((extrap[0] - 5.0).abs() < (plain[0] - 5.0).abs() / 100.0);
    }

    #[test]
    fn mixed_derivative_of_product() {
        // ∂²/∂a∂b of sin(a)·e^b at 0 is 1.
        let f = |a: f64, b: f64| Ok(vec![a.sin() * b.exp()]);
        let d = mixed_second_derivative(f, &[1e-2, 1e-3]).unwrap();
        assert!((d[0] - 1.0).abs() < 1e-9);
    }
}
