//! Seeded sample domains for identity checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::clifford::C64;
use crate::error::Result;
use crate::spinors::{Bispinor, KinematicPoint};

/// Where a check draws its points from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sampler {
    /// No kinematics; one evaluation regardless of the sample count.
    Algebraic,
    /// `p0/m` log-uniform in `[1, 10]`, `n̂` uniform on the sphere.
    OnShell,
    /// `p0` uniform in `[−m, m]`, `n̂` uniform on the sphere.
    BreveRegion,
    /// `p0 = m`, `n̂` uniform on the sphere.
    Direction,
    /// Complex `ξ` and scale `α` with parts uniform in `[−1, 1]`.
    Bispinor,
}

/// A drawn point. Serializes as the kinematic triple, the `ξ`/`α` pair, or
/// `null` for algebraic checks.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SamplePoint {
    None,
    Kinematic(KinematicPoint),
    Bispinor { xi: Bispinor, alpha: C64 },
}

fn pair(z: C64) -> [f64; 2] {
    [z.re, z.im]
}

impl Serialize for SamplePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            SamplePoint::None => s.serialize_none(),
            SamplePoint::Kinematic(k) => k.serialize(s),
            SamplePoint::Bispinor { xi, alpha } => {
                let mut map = s.serialize_map(Some(2))?;
                map.serialize_entry("xi", &xi.0.map(pair))?;
                map.serialize_entry("alpha", &pair(*alpha))?;
                map.end()
            }
        }
    }
}

/// Generator for one check: ChaCha8 keyed by SHA-256 of the seed and the
/// check name, so checks never share a stream.
pub fn check_rng(seed: u64, name: &str) -> ChaCha8Rng {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update(name.as_bytes());
    let key: [u8; 32] = h.finalize().into();
    ChaCha8Rng::from_seed(key)
}

fn unit_vector(rng: &mut impl Rng) -> [f64; 3] {
    let z: f64 = rng.random_range(-1.0..=1.0);
    let phi: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let r = (1.0 - z * z).max(0.0).sqrt();
    let v = [r * phi.cos(), r * phi.sin(), z];
    let len = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.map(|x| x / len)
}

fn complex(rng: &mut impl Rng) -> C64 {
    C64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0))
}

impl Sampler {
    /// Number of points actually evaluated for a requested count.
    pub fn effective_samples(self, requested: usize) -> usize {
        match self {
            Sampler::Algebraic => requested.min(1),
            _ => requested,
        }
    }

    pub fn draw(self, rng: &mut impl Rng, m: f64) -> Result<SamplePoint> {
        Ok(match self {
            Sampler::Algebraic => SamplePoint::None,
            Sampler::OnShell => {
                let t: f64 = rng.random_range(0.0..=1.0);
                let nhat = unit_vector(rng);
                SamplePoint::Kinematic(KinematicPoint::new(m, m * 10f64.powf(t), nhat)?)
            }
            Sampler::BreveRegion => {
                let p0 = rng.random_range(-m..=m);
                let nhat = unit_vector(rng);
                SamplePoint::Kinematic(KinematicPoint::new(m, p0, nhat)?)
            }
            Sampler::Direction => SamplePoint::Kinematic(KinematicPoint::new(m, m, unit_vector(rng))?),
            Sampler::Bispinor => {
                let xi = Bispinor(std::array::from_fn(|_| complex(rng)));
                SamplePoint::Bispinor { xi, alpha: complex(rng) }
            }
        })
    }
}
