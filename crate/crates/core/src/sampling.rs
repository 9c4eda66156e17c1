//! Seeded random sampling.
//!
//! All randomness comes from ChaCha8 seeded with a `u64`; independent
//! consumers draw from separate streams of the same seed. Chart points are
//! uniform on the ball of the configured radius: Gaussian direction, radius
//! `ρ·U^{1/r}`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::birep::SquareMatrix;
use crate::malcev::TangentVector;
use crate::octonion::{ChartPoint, Octonion};

pub type SampleRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Generator for stream `stream` of `seed`.
pub fn stream_rng(seed: u64, stream: u64) -> SampleRng {
    let mut rng = seeded_rng(seed);
    rng.set_stream(stream);
    rng
}

fn gaussian_vec(rng: &mut SampleRng, n: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
        if v.iter().any(|x| *x != 0.0) {
            return v;
        }
    }
}

/// Uniform on the unit sphere of the first `dim` octonion components.
pub fn random_unit_octonion_in(rng: &mut SampleRng, dim: usize) -> Octonion {
    let v = gaussian_vec(rng, dim);
    let mut coeff = [0.0; 8];
    coeff[..dim].copy_from_slice(&v);
    Octonion::new(coeff).normalized().expect("nonzero sample")
}

pub fn random_unit_octonion(rng: &mut SampleRng) -> Octonion {
    random_unit_octonion_in(rng, 8)
}

pub fn random_chart_point(rng: &mut SampleRng, dim: usize, radius: f64) -> ChartPoint {
    let dir = gaussian_vec(rng, dim);
    let norm = dir.iter().map(|x| x * x).sum::<f64>().sqrt();
    let u: f64 = rng.random();
    let rho = radius * u.powf(1.0 / dim as f64);
    ChartPoint::new(dir.iter().map(|x| x / norm * rho).collect())
        .expect("radius below one keeps the point in the chart")
}

/// Components uniform in `[-1, 1)`.
pub fn random_tangent(rng: &mut SampleRng, r: usize) -> TangentVector {
    TangentVector((0..r).map(|_| rng.random_range(-1.0..1.0)).collect())
}

/// Entries uniform in `[-1, 1)`.
pub fn random_matrix(rng: &mut SampleRng, n: usize) -> SquareMatrix {
    SquareMatrix::from_fn(n, n, |_, _| rng.random_range(-1.0..1.0))
}
