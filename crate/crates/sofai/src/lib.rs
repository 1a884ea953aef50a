//! Std side of the SOFAI graph-coloring system: wall-clock budgets, dataset
//! and memory files, the HTTP S1 client, the benchmark harness and reports.

pub mod clock;
pub mod dataset;
pub mod harness;
pub mod memory_file;
pub mod remote;
pub mod report;

pub use clock::WallClock;
pub use dataset::{read_dataset, write_dataset, DatasetEntry, DatasetError};
pub use harness::{run_benchmark, run_entries, trial_seed, HarnessError, RunConfig};
pub use memory_file::{FileMemory, SharedMemory};
pub use remote::RemoteProposer;
pub use report::{read_results, render, Format};
