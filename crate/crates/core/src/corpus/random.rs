//! Seeded random connected graphs.
//!
//! The generator is pinned for reproducibility across platforms and
//! releases: a ChaCha8 stream seeded with `seed_from_u64`, drawing one
//! `f64` per vertex pair in lexicographic order (0,1), (0,2), ..., with
//! the edge present when the draw is below the probability. The sample is
//! rejected and redrawn until connected.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

use super::CorpusError;

const MAX_REJECTIONS: usize = 10_000;

/// A deterministic stream of connected G(n, p) samples.
pub struct RandomConnectedStream {
    n: usize,
    p: f64,
    rng: ChaCha8Rng,
}

impl RandomConnectedStream {
    pub fn new(n: usize, p: f64, seed: u64) -> Result<Self, CorpusError> {
        if n < 1 {
            return Err(CorpusError::InvalidParams("order must be at least 1".into()));
        }
        if !(p > 0.0 && p < 1.0) {
            return Err(CorpusError::InvalidParams(format!(
                "edge probability must lie strictly between 0 and 1, got {p}"
            )));
        }
        Ok(RandomConnectedStream { n, p, rng: ChaCha8Rng::seed_from_u64(seed) })
    }

    /// Next connected sample; fails after 10,000 consecutive rejections.
    pub fn sample(&mut self) -> Result<Graph, CorpusError> {
        for _ in 0..MAX_REJECTIONS {
            let mut edges = Vec::new();
            for a in 0..self.n {
                for b in a + 1..self.n {
                    if self.rng.random::<f64>() < self.p {
                        edges.push((a, b));
                    }
                }
            }
            let g = Graph::new(self.n, &edges).unwrap();
            if g.is_connected() {
                return Ok(g);
            }
        }
        Err(CorpusError::TooManyRejections { attempts: MAX_REJECTIONS })
    }
}

/// One seeded connected G(n, p) sample.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph, CorpusError> {
    RandomConnectedStream::new(n, p, seed)?.sample()
}
