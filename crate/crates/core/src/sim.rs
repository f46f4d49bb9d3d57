//! Single-failure repair simulation.
//!
//! A codeword is spread over the servers (one bit per vertex). Servers then
//! fail one at a time; each failure is repaired by querying the failed
//! server's neighbours before the next failure is injected.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::code::StorageCode;
use crate::error::{Error, Result};
use crate::gf2::BitVector;

/// Identifier of the generator recorded in every report.
pub const RNG_ALGORITHM: &str = "chacha8";

#[derive(Clone, Debug, Default)]
pub struct SimConfig {
    pub failure_count: usize,
    pub seed: u64,
    /// Message to encode; drawn from the seeded generator when absent.
    pub message: Option<BitVector>,
    /// Test hook: flip the stored bit of this vertex after encoding, so the
    /// deployment no longer holds a codeword.
    pub corrupt: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepairEvent {
    pub failed_vertex: usize,
    pub queried_vertices: Vec<usize>,
    pub repaired_bit: u8,
    /// Whether the repaired bit equals the bit the server held before failing.
    pub correct: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimReport {
    pub rng: &'static str,
    pub seed: u64,
    pub failures: usize,
    pub events: Vec<RepairEvent>,
    pub total_queries: usize,
    pub max_queries_single_repair: usize,
    pub all_correct: bool,
}

impl SimReport {
    /// `failures=<k> queries=<q> max_local=<m> correct=<bool>`
    pub fn summary_line(&self) -> String {
        format!(
            "failures={} queries={} max_local={} correct={}",
            self.failures, self.total_queries, self.max_queries_single_repair, self.all_correct
        )
    }
}

pub fn run_sim(code: &StorageCode, cfg: &SimConfig) -> Result<SimReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let message = match &cfg.message {
        Some(m) => m.clone(),
        None => BitVector::random(code.dimension(), &mut rng),
    };
    let mut stored = code.encode(&message)?;
    let n = code.n();
    if let Some(v) = cfg.corrupt {
        if v == 0 || v > n {
            return Err(Error::IndexOutOfRange {
                index: v,
                min: 1,
                max: n,
            });
        }
        stored.flip(v - 1);
    }

    let mut events = Vec::with_capacity(cfg.failure_count);
    for _ in 0..cfg.failure_count {
        let failed = rng.gen_range(1..=n);
        let lost = stored.get(failed - 1);
        let mut queried = Vec::new();
        let repaired = code.repair_with(failed, |u| {
            queried.push(u);
            stored.get(u - 1)
        })?;
        stored.set(failed - 1, repaired);
        events.push(RepairEvent {
            failed_vertex: failed,
            queried_vertices: queried,
            repaired_bit: repaired.into(),
            correct: repaired == lost,
        });
    }

    Ok(SimReport {
        rng: RNG_ALGORITHM,
        seed: cfg.seed,
        failures: cfg.failure_count,
        total_queries: events.iter().map(|e| e.queried_vertices.len()).sum(),
        max_queries_single_repair: events
            .iter()
            .map(|e| e.queried_vertices.len())
            .max()
            .unwrap_or(0),
        all_correct: events.iter().all(|e| e.correct),
        events,
    })
}
