//! Episodic memory of solved instances with attribute-distance retrieval.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::graph::{dimacs_body, parse_dimacs, verdict, ColorAssignment, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum MemoryError {
    #[error("record {id}: stored DIMACS does not parse: {source}")]
    Dimacs { id: String, source: GraphError },
    #[error("record {0}: stored assignment is not a valid coloring")]
    InvalidAssignment(String),
    #[error("record {0}: attributes do not match the stored graph")]
    Attributes(String),
    #[error("record {0}: id does not match its content")]
    IdMismatch(String),
    #[error("duplicate record id {0}")]
    Duplicate(String),
    #[error("memory persistence failed: {0}")]
    Persistence(String),
}

/// Which solver produced a stored result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SolverKind {
    S1,
    S2,
}

/// Instance features used for similarity. `k` stands in for the chromatic
/// number, which is unknown before solving.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Attributes {
    pub n: usize,
    pub e: usize,
    pub density: f64,
    pub k: u32,
}

impl Attributes {
    pub fn of(graph: &Graph, k: u32) -> Self {
        Self { n: graph.vertex_count(), e: graph.edge_count(), density: graph.density(), k }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EpisodicRecord {
    pub id: String,
    pub attributes: Attributes,
    pub dimacs: String,
    /// `None` records a certified UNSAT.
    pub solution: Option<ColorAssignment>,
    pub solver: SolverKind,
    pub timestamp: u64,
}

impl EpisodicRecord {
    pub fn new(graph: &Graph, k: u32, solution: Option<ColorAssignment>, solver: SolverKind, timestamp: u64) -> Self {
        let dimacs = dimacs_body(graph).join("\n");
        Self { id: record_id(&dimacs, k), attributes: Attributes::of(graph, k), dimacs, solution, solver, timestamp }
    }

    pub fn graph(&self) -> Result<Graph, MemoryError> {
        parse_dimacs(&self.dimacs).map_err(|source| MemoryError::Dimacs { id: self.id.clone(), source })
    }

    /// Checks the id, the attributes and, for SAT records, that the stored
    /// assignment is a valid coloring within `k`.
    pub fn validate(&self) -> Result<Graph, MemoryError> {
        let graph = self.graph()?;
        if record_id(&self.dimacs, self.attributes.k) != self.id {
            return Err(MemoryError::IdMismatch(self.id.clone()));
        }
        let expect = Attributes::of(&graph, self.attributes.k);
        if expect.n != self.attributes.n
            || expect.e != self.attributes.e
            || (expect.density - self.attributes.density).abs() > 1e-9
        {
            return Err(MemoryError::Attributes(self.id.clone()));
        }
        if let Some(a) = &self.solution {
            match verdict(&graph, a, self.attributes.k) {
                Ok(v) if v.valid => {}
                _ => return Err(MemoryError::InvalidAssignment(self.id.clone())),
            }
        }
        Ok(graph)
    }
}

/// Content id: first 16 hex digits of SHA-256 over the DIMACS body and `k`.
pub fn record_id(dimacs: &str, k: u32) -> String {
    let mut h = Sha256::new();
    h.update(dimacs.as_bytes());
    h.update(format!("\nk={k}").as_bytes());
    let digest = h.finalize();
    let mut id = String::with_capacity(16);
    for b in &digest[..8] {
        write!(id, "{b:02x}").expect("writing to a String");
    }
    id
}

/// Mean normalized absolute difference over (n, e, density, k). Counts and
/// `k` are divided by `scale`; density is already in [0, 1].
fn distance(query: &Attributes, record: &Attributes, scale: &[f64; 3]) -> f64 {
    let term = |a: f64, b: f64, s: f64| if s > 0.0 { (a - b).abs() / s } else { 0.0 };
    (term(query.n as f64, record.n as f64, scale[0])
        + term(query.e as f64, record.e as f64, scale[1])
        + (query.density - record.density).abs()
        + term(query.k as f64, record.k as f64, scale[2]))
        / 4.0
}

/// Records with distance below `alpha`, nearest first (ties by insertion
/// order), at most `limit`. Each count attribute is scaled by the larger of
/// the store's maximum and the query's value.
pub fn nearest(records: &[EpisodicRecord], query: &Attributes, alpha: f64, limit: usize) -> Vec<(f64, EpisodicRecord)> {
    let mut scale = [query.n as f64, query.e as f64, query.k as f64];
    for r in records {
        scale[0] = scale[0].max(r.attributes.n as f64);
        scale[1] = scale[1].max(r.attributes.e as f64);
        scale[2] = scale[2].max(r.attributes.k as f64);
    }
    let mut hits: Vec<(f64, usize)> = records
        .iter()
        .enumerate()
        .map(|(i, r)| (distance(query, &r.attributes, &scale), i))
        .filter(|(d, _)| *d < alpha)
        .collect();
    hits.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    hits.into_iter().take(limit).map(|(d, i)| (d, records[i].clone())).collect()
}

/// Storage behind the metacognitive loop.
pub trait MemoryStore {
    fn retrieve(&self, graph: &Graph, k: u32, alpha: f64, limit: usize) -> Vec<EpisodicRecord>;

    /// Validates and appends `record`; invalid or duplicate records are rejected.
    fn update(&mut self, record: EpisodicRecord) -> Result<(), MemoryError>;
}

/// In-memory store.
#[derive(Debug, Clone, Default)]
pub struct EpisodicMemory {
    records: Vec<EpisodicRecord>,
    ids: BTreeSet<String>,
}

impl EpisodicMemory {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn records(&self) -> &[EpisodicRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.ids.contains(id)
    }

    /// Validation and duplicate check without inserting.
    pub fn check(&self, record: &EpisodicRecord) -> Result<(), MemoryError> {
        if self.ids.contains(&record.id) {
            return Err(MemoryError::Duplicate(record.id.clone()));
        }
        record.validate().map(|_| ())
    }
}

impl MemoryStore for EpisodicMemory {
    fn retrieve(&self, graph: &Graph, k: u32, alpha: f64, limit: usize) -> Vec<EpisodicRecord> {
        nearest(&self.records, &Attributes::of(graph, k), alpha, limit).into_iter().map(|(_, r)| r).collect()
    }

    fn update(&mut self, record: EpisodicRecord) -> Result<(), MemoryError> {
        self.check(&record)?;
        self.ids.insert(record.id.clone());
        self.records.push(record);
        Ok(())
    }
}

/// Records similar to `(graph, k)`; see [`nearest`].
pub fn retrieve_memory<M: MemoryStore + ?Sized>(
    store: &M,
    graph: &Graph,
    k: u32,
    alpha: f64,
    limit: usize,
) -> Vec<EpisodicRecord> {
    store.retrieve(graph, k, alpha, limit)
}

pub fn update_memory<M: MemoryStore + ?Sized>(store: &mut M, record: EpisodicRecord) -> Result<(), MemoryError> {
    store.update(record)
}
