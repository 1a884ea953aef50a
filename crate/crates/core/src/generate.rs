//! Seeded Erdős–Rényi instance generation with solvability labels.
//!
//! The PRNG is ChaCha8 from `rand_chacha` 0.9; per-instance seeds are derived
//! by selecting a ChaCha stream from the dataset seed, so a record depends
//! only on `(spec, index)` and cells can be generated in any order.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::dsatur::chromatic_number;
use crate::graph::Graph;
pub use crate::graph::Label;

/// Name and version of the generator PRNG, recorded in dataset manifests.
pub const PRNG_NAME: &str = "ChaCha8Rng/rand_chacha-0.9";

/// Attempts at finding a graph with χ ≥ 2 before giving up on an UNSAT slot.
pub const MAX_REGENERATIONS: u32 = 256;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GenError {
    #[error("edge probability {0} is outside [0, 1]")]
    Probability(f64),
    #[error("vertex count must be at least 1")]
    EmptyGraph,
    #[error("mix {0} does not sum to 100")]
    Mix(Mix),
    #[error("instance count must be at least 1")]
    Count,
    #[error("chromatic number computation timed out")]
    Timeout,
    #[error("no graph with chromatic number >= 2 after {MAX_REGENERATIONS} draws")]
    NoUnsatInstance,
}

/// Solvability mix `(a, b)`: percentages of SAT and UNSAT instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mix {
    pub sat: u8,
    pub unsat: u8,
}

impl Mix {
    pub const ALL_SAT: Mix = Mix { sat: 100, unsat: 0 };
    pub const ALL_UNSAT: Mix = Mix { sat: 0, unsat: 100 };
    pub const BALANCED: Mix = Mix { sat: 50, unsat: 50 };

    pub fn new(sat: u8, unsat: u8) -> Result<Self, GenError> {
        let mix = Mix { sat, unsat };
        if sat as u16 + unsat as u16 != 100 {
            return Err(GenError::Mix(mix));
        }
        Ok(mix)
    }

    /// SAT instances among `count`; the floor goes to SAT.
    pub fn sat_count(&self, count: usize) -> usize {
        count * self.sat as usize / 100
    }
}

impl fmt::Display for Mix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.sat, self.unsat)
    }
}

impl core::str::FromStr for Mix {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, GenError> {
        let bad = || GenError::Mix(Mix { sat: 0, unsat: 0 });
        let (a, b) = s.trim_matches(|c| c == '(' || c == ')').split_once(',').ok_or_else(bad)?;
        let a = a.trim().parse().map_err(|_| bad())?;
        let b = b.trim().parse().map_err(|_| bad())?;
        Mix::new(a, b)
    }
}

/// One generation cell: `count` graphs of size `n` and edge probability `p`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub n: usize,
    pub p: f64,
    pub mix: Mix,
    pub count: usize,
    pub seed: u64,
}

impl GenSpec {
    pub fn validate(&self) -> Result<(), GenError> {
        if self.n == 0 {
            return Err(GenError::EmptyGraph);
        }
        if !(0.0..=1.0).contains(&self.p) {
            return Err(GenError::Probability(self.p));
        }
        Mix::new(self.mix.sat, self.mix.unsat)?;
        if self.count == 0 {
            return Err(GenError::Count);
        }
        Ok(())
    }

    pub fn instance_id(&self, index: usize) -> String {
        format!("n{}_p{:03}_m{}-{}_{:04}", self.n, (self.p * 100.0 + 0.5) as u32, self.mix.sat, self.mix.unsat, index)
    }

    /// Label assigned to slot `index`: the first ⌊count·a/100⌋ slots are SAT.
    pub fn label_for(&self, index: usize) -> Label {
        if index < self.mix.sat_count(self.count) {
            Label::Sat
        } else {
            Label::Unsat
        }
    }
}

/// A generated, labeled benchmark instance.
#[derive(Debug, Clone, PartialEq)]
pub struct InstanceRecord {
    pub id: String,
    pub graph: Graph,
    pub k: u32,
    pub chi: u32,
    pub label: Label,
    pub n: usize,
    pub p: f64,
    pub mix: Mix,
    /// Seed of the graph actually kept (after any regeneration).
    pub seed: u64,
}

/// Generation result for one cell.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub spec: GenSpec,
    pub records: Vec<InstanceRecord>,
    /// Slots that could not be filled, with the reason.
    pub incomplete: Vec<(usize, GenError)>,
}

impl Dataset {
    pub fn is_complete(&self) -> bool {
        self.incomplete.is_empty()
    }
}

/// G(n, p): every unordered pair `(i, j)`, `i < j`, in lexicographic order,
/// becomes an edge with probability `p`. Vertices are labeled `1..=n`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GenError::Probability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::numbered(n, edges).expect("generated edges are simple"))
}

/// Seed for slot `index`, regeneration `attempt`, derived from the cell seed.
pub fn instance_seed(cell_seed: u64, index: usize, attempt: u32) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(cell_seed);
    rng.set_stream(((index as u64) << 16) | attempt as u64);
    rng.next_u64()
}

/// Generates and labels slot `index` of `spec`.
///
/// SAT slots get `k = χ`; UNSAT slots get `k = χ − 1`, redrawing edgeless
/// (χ = 1) graphs with a fresh seed.
pub fn generate_record<B: Budget + ?Sized>(
    spec: &GenSpec,
    index: usize,
    budget: &B,
) -> Result<InstanceRecord, GenError> {
    spec.validate()?;
    let label = spec.label_for(index);
    for attempt in 0..MAX_REGENERATIONS {
        let seed = instance_seed(spec.seed, index, attempt);
        let graph = erdos_renyi(spec.n, spec.p, seed)?;
        let chi = chromatic_number(&graph, budget).map_err(|_| GenError::Timeout)?;
        let k = match label {
            Label::Sat => chi,
            Label::Unsat if chi >= 2 => chi - 1,
            Label::Unsat => continue,
        };
        return Ok(InstanceRecord {
            id: spec.instance_id(index),
            graph,
            k,
            chi,
            label,
            n: spec.n,
            p: spec.p,
            mix: spec.mix,
            seed,
        });
    }
    Err(GenError::NoUnsatInstance)
}

/// Generates every slot of `spec` sequentially, each under a fresh budget.
pub fn build_dataset<B, F>(spec: &GenSpec, mut budget: F) -> Result<Dataset, GenError>
where
    B: Budget,
    F: FnMut() -> B,
{
    spec.validate()?;
    let mut records = Vec::with_capacity(spec.count);
    let mut incomplete = Vec::new();
    for index in 0..spec.count {
        match generate_record(spec, index, &budget()) {
            Ok(r) => records.push(r),
            Err(e) => incomplete.push((index, e)),
        }
    }
    Ok(Dataset { spec: spec.clone(), records, incomplete })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::{NodeLimit, Unlimited};

    #[test]
    fn extreme_probabilities() {
        assert_eq!(erdos_renyi(5, 0.0, 1).unwrap().edge_count(), 0);
        assert_eq!(erdos_renyi(5, 1.0, 1).unwrap().edge_count(), 10);
        assert!(erdos_renyi(5, 1.5, 1).is_err());
    }

    #[test]
    fn seeded_generation_is_deterministic() {
        let a = erdos_renyi(5, 0.5, 42).unwrap();
        let b = erdos_renyi(5, 0.5, 42).unwrap();
        assert_eq!(a, b);
        assert_ne!(instance_seed(7, 0, 0), instance_seed(7, 1, 0));
        assert_ne!(instance_seed(7, 0, 0), instance_seed(7, 0, 1));
    }

    fn spec(mix: Mix, count: usize) -> GenSpec {
        GenSpec { n: 6, p: 0.5, mix, count, seed: 11 }
    }

    #[test]
    fn all_sat_mix() {
        let d = build_dataset(&spec(Mix::ALL_SAT, 10), || Unlimited).unwrap();
        assert_eq!(d.records.len(), 10);
        assert!(d.records.iter().all(|r| r.label == Label::Sat && r.k == r.chi));
    }

    #[test]
    fn all_unsat_mix() {
        let d = build_dataset(&spec(Mix::ALL_UNSAT, 10), || Unlimited).unwrap();
        assert_eq!(d.records.len(), 10);
        assert!(d.records.iter().all(|r| r.label == Label::Unsat && r.k + 1 == r.chi && r.chi >= 2));
    }

    #[test]
    fn balanced_mix_and_odd_counts() {
        let d = build_dataset(&spec(Mix::BALANCED, 10), || Unlimited).unwrap();
        let sat = d.records.iter().filter(|r| r.label == Label::Sat).count();
        assert_eq!((sat, d.records.len() - sat), (5, 5));
        assert_eq!(Mix::BALANCED.sat_count(7), 3);
    }

    #[test]
    fn impossible_unsat_slot_is_reported() {
        let s = GenSpec { n: 1, p: 0.5, mix: Mix::ALL_UNSAT, count: 2, seed: 0 };
        let d = build_dataset(&s, || Unlimited).unwrap();
        assert!(d.records.is_empty());
        assert_eq!(d.incomplete.len(), 2);
        assert_eq!(d.incomplete[0].1, GenError::NoUnsatInstance);
    }

    #[test]
    fn timeout_marks_slot_incomplete() {
        let s = GenSpec { n: 8, p: 0.5, mix: Mix::ALL_SAT, count: 2, seed: 0 };
        let d = build_dataset(&s, || NodeLimit::new(0)).unwrap();
        assert!(!d.is_complete());
        assert!(d.incomplete.iter().all(|(_, e)| *e == GenError::Timeout));
    }

    #[test]
    fn spec_validation() {
        assert!(Mix::new(60, 30).is_err());
        assert_eq!("50,50".parse::<Mix>(), Ok(Mix::BALANCED));
        assert_eq!("(100,0)".parse::<Mix>(), Ok(Mix::ALL_SAT));
        assert!(GenSpec { count: 0, ..spec(Mix::ALL_SAT, 1) }.validate().is_err());
        assert!(GenSpec { p: -0.1, ..spec(Mix::ALL_SAT, 1) }.validate().is_err());
    }
}
