//! Append-only JSON-lines persistence for episodic memory.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::{Arc, RwLock};

use sofai_core::memory::{EpisodicMemory, EpisodicRecord, MemoryError, MemoryStore};
use sofai_core::Graph;

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}:{line}: {source}")]
    Json { path: PathBuf, line: usize, source: serde_json::Error },
    #[error("{path}:{line}: {source}")]
    Record { path: PathBuf, line: usize, source: MemoryError },
}

/// Episodic memory backed by a file with one JSON record per line. Every
/// record is re-validated on load; a bad line fails the load.
#[derive(Debug)]
pub struct FileMemory {
    path: PathBuf,
    file: File,
    memory: EpisodicMemory,
}

impl FileMemory {
    pub fn open(path: impl AsRef<Path>) -> Result<Self, LoadError> {
        let path = path.as_ref().to_path_buf();
        let io = |source| LoadError::Io { path: path.clone(), source };
        let file = OpenOptions::new().create(true).append(true).read(true).open(&path).map_err(io)?;
        let mut memory = EpisodicMemory::new();
        for (i, line) in BufReader::new(&file).lines().enumerate() {
            let line = line.map_err(io)?;
            if line.trim().is_empty() {
                continue;
            }
            let record: EpisodicRecord = serde_json::from_str(&line).map_err(|source| LoadError::Json {
                path: path.clone(),
                line: i + 1,
                source,
            })?;
            memory.update(record).map_err(|source| LoadError::Record { path: path.clone(), line: i + 1, source })?;
        }
        Ok(Self { path, file, memory })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn memory(&self) -> &EpisodicMemory {
        &self.memory
    }
}

impl MemoryStore for FileMemory {
    fn retrieve(&self, graph: &Graph, k: u32, alpha: f64, limit: usize) -> Vec<EpisodicRecord> {
        self.memory.retrieve(graph, k, alpha, limit)
    }

    /// The record reaches the file before it becomes visible to retrieval.
    fn update(&mut self, record: EpisodicRecord) -> Result<(), MemoryError> {
        self.memory.check(&record)?;
        let mut line = serde_json::to_string(&record).map_err(|e| MemoryError::Persistence(e.to_string()))?;
        line.push('\n');
        self.file
            .write_all(line.as_bytes())
            .and_then(|_| self.file.flush())
            .map_err(|e| MemoryError::Persistence(format!("{}: {e}", self.path.display())))?;
        self.memory.update(record)
    }
}

/// A store shared between worker threads.
#[derive(Debug)]
pub struct SharedMemory<M>(Arc<RwLock<M>>);

impl<M> Clone for SharedMemory<M> {
    fn clone(&self) -> Self {
        Self(Arc::clone(&self.0))
    }
}

impl<M: MemoryStore> SharedMemory<M> {
    pub fn new(store: M) -> Self {
        Self(Arc::new(RwLock::new(store)))
    }

    pub fn with<R>(&self, f: impl FnOnce(&M) -> R) -> R {
        f(&self.0.read().unwrap_or_else(|p| p.into_inner()))
    }
}

impl<M: MemoryStore> MemoryStore for SharedMemory<M> {
    fn retrieve(&self, graph: &Graph, k: u32, alpha: f64, limit: usize) -> Vec<EpisodicRecord> {
        self.with(|m| m.retrieve(graph, k, alpha, limit))
    }

    fn update(&mut self, record: EpisodicRecord) -> Result<(), MemoryError> {
        self.0.write().unwrap_or_else(|p| p.into_inner()).update(record)
    }
}
