//! Reproducible gamma variates for the demo mode.
//!
//! The generator is pinned end to end so that a seed always yields the same
//! sample: ChaCha8 bit stream, 53-bit uniforms on the open interval, the
//! Marsaglia polar method for normals (second value discarded) and the
//! Marsaglia–Tsang squeeze for gamma, boosted by `U^(1/shape)` when
//! `shape < 1`.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewviz_core::Sample;

use crate::CliError;

pub struct GammaSampler {
    shape: f64,
    rng: ChaCha8Rng,
}

impl GammaSampler {
    /// Gamma(shape, scale = 1).
    pub fn new(shape: f64, seed: u64) -> Result<Self, CliError> {
        if !(shape > 0.0 && shape.is_finite()) {
            return Err(CliError::Usage(format!(
                "gamma shape must be positive, got {shape}"
            )));
        }
        Ok(Self {
            shape,
            rng: ChaCha8Rng::seed_from_u64(seed),
        })
    }

    /// Uniform on `(0, 1)`.
    fn uniform(&mut self) -> f64 {
        ((self.rng.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
    }

    fn normal(&mut self) -> f64 {
        loop {
            let u = 2.0 * self.uniform() - 1.0;
            let v = 2.0 * self.uniform() - 1.0;
            let s = u * u + v * v;
            if s > 0.0 && s < 1.0 {
                return u * (-2.0 * s.ln() / s).sqrt();
            }
        }
    }

    fn marsaglia_tsang(&mut self, shape: f64) -> f64 {
        let d = shape - 1.0 / 3.0;
        let c = 1.0 / (9.0 * d).sqrt();
        loop {
            let x = self.normal();
            let t = 1.0 + c * x;
            if t <= 0.0 {
                continue;
            }
            let v = t * t * t;
            let u = self.uniform();
            let x2 = x * x;
            if u < 1.0 - 0.0331 * x2 * x2 || u.ln() < 0.5 * x2 + d * (1.0 - v + v.ln()) {
                return d * v;
            }
        }
    }

    pub fn sample(&mut self) -> f64 {
        if self.shape >= 1.0 {
            self.marsaglia_tsang(self.shape)
        } else {
            let g = self.marsaglia_tsang(self.shape + 1.0);
            g * self.uniform().powf(1.0 / self.shape)
        }
    }
}

/// `n` gamma(shape, 1) draws from `seed`, sorted.
pub fn demo_sample(shape: f64, n: usize, seed: u64) -> Result<Sample, CliError> {
    if n == 0 {
        return Err(CliError::Usage(
            "demo sample size must be at least 1".into(),
        ));
    }
    let mut g = GammaSampler::new(shape, seed)?;
    let draws: Vec<f64> = (0..n).map(|_| g.sample()).collect();
    Ok(Sample::new(draws)?)
}
