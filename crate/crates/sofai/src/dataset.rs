//! Dataset directories: one DIMACS file per instance plus `manifest.csv`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sofai_core::budget::Budget;
use sofai_core::generate::{generate_record, Dataset, GenError, GenSpec, InstanceRecord, Mix, PRNG_NAME};
use sofai_core::{parse_instance, serialize_dimacs, Graph, GraphError, Label};

pub const MANIFEST: &str = "manifest.csv";

#[derive(Debug, thiserror::Error)]
pub enum DatasetError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Csv { path: PathBuf, source: csv::Error },
    #[error("{path}: {source}")]
    Graph { path: PathBuf, source: GraphError },
    #[error("{id}: manifest says {field} = {manifest}, instance file says {file}")]
    Mismatch { id: String, field: &'static str, manifest: String, file: String },
    #[error("{id}: bad mix {mix:?}")]
    Mix { id: String, mix: String },
    #[error(transparent)]
    Gen(#[from] GenError),
}

fn io(path: &Path) -> impl FnOnce(std::io::Error) -> DatasetError + '_ {
    move |source| DatasetError::Io { path: path.to_path_buf(), source }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct ManifestRow {
    id: String,
    n: usize,
    p: f64,
    mix: String,
    seed: u64,
    chi: u32,
    k: u32,
    label: Label,
    filename: String,
}

/// One instance loaded from a dataset directory.
#[derive(Debug, Clone, PartialEq)]
pub struct DatasetEntry {
    pub id: String,
    pub n: usize,
    pub p: f64,
    pub mix: Mix,
    pub seed: u64,
    pub chi: u32,
    pub k: u32,
    pub label: Label,
    pub graph: Graph,
}

impl From<InstanceRecord> for DatasetEntry {
    fn from(r: InstanceRecord) -> Self {
        Self { id: r.id, n: r.n, p: r.p, mix: r.mix, seed: r.seed, chi: r.chi, k: r.k, label: r.label, graph: r.graph }
    }
}

/// Generates every cell in parallel, one budget per instance.
pub fn generate<B, F>(specs: &[GenSpec], budget: F) -> Result<Vec<Dataset>, GenError>
where
    B: Budget,
    F: Fn() -> B + Sync,
{
    for s in specs {
        s.validate()?;
    }
    Ok(specs
        .iter()
        .map(|spec| {
            let results: Vec<_> =
                (0..spec.count).into_par_iter().map(|i| (i, generate_record(spec, i, &budget()))).collect();
            let mut records = Vec::new();
            let mut incomplete = Vec::new();
            for (i, r) in results {
                match r {
                    Ok(r) => records.push(r),
                    Err(e) => incomplete.push((i, e)),
                }
            }
            Dataset { spec: spec.clone(), records, incomplete }
        })
        .collect())
}

/// Writes instance files and the manifest. Unfilled slots are listed as
/// `#` comments so an incomplete cell is visible.
pub fn write_dataset(dir: &Path, datasets: &[Dataset]) -> Result<(), DatasetError> {
    fs::create_dir_all(dir).map_err(io(dir))?;
    let manifest = dir.join(MANIFEST);
    let mut out = Vec::new();
    writeln!(out, "# prng {PRNG_NAME}").map_err(io(&manifest))?;
    for d in datasets {
        let s = &d.spec;
        writeln!(
            out,
            "# cell n={} p={} mix={} count={} seed={} complete={}",
            s.n,
            s.p,
            s.mix,
            s.count,
            s.seed,
            d.is_complete()
        )
        .map_err(io(&manifest))?;
        for (index, err) in &d.incomplete {
            writeln!(out, "# incomplete {} {err}", s.instance_id(*index)).map_err(io(&manifest))?;
        }
    }
    let mut w = csv::Writer::from_writer(out);
    for r in datasets.iter().flat_map(|d| &d.records) {
        let filename = format!("{}.col", r.id);
        let path = dir.join(&filename);
        let text = serialize_dimacs(&r.graph, r.k, Some(r.label)) + "\n";
        fs::write(&path, text).map_err(io(&path))?;
        let row = ManifestRow {
            id: r.id.clone(),
            n: r.n,
            p: r.p,
            mix: r.mix.to_string(),
            seed: r.seed,
            chi: r.chi,
            k: r.k,
            label: r.label,
            filename,
        };
        w.serialize(row).map_err(|source| DatasetError::Csv { path: manifest.clone(), source })?;
    }
    let bytes = w.into_inner().map_err(|e| DatasetError::Io { path: manifest.clone(), source: e.into_error() })?;
    fs::write(&manifest, bytes).map_err(io(&manifest))
}

/// Loads a dataset directory, cross-checking each file's `k` and label
/// against the manifest.
pub fn read_dataset(dir: &Path) -> Result<Vec<DatasetEntry>, DatasetError> {
    let manifest = dir.join(MANIFEST);
    let csv_err = |source| DatasetError::Csv { path: manifest.clone(), source };
    let mut reader = csv::ReaderBuilder::new().comment(Some(b'#')).from_path(&manifest).map_err(csv_err)?;
    let mut entries = Vec::new();
    for row in reader.deserialize::<ManifestRow>() {
        let row = row.map_err(csv_err)?;
        let path = dir.join(&row.filename);
        let text = fs::read_to_string(&path).map_err(io(&path))?;
        let inst = parse_instance(&text).map_err(|source| DatasetError::Graph { path: path.clone(), source })?;
        let mismatch = |field, manifest: String, file: String| DatasetError::Mismatch {
            id: row.id.clone(),
            field,
            manifest,
            file,
        };
        if inst.k != Some(row.k) {
            return Err(mismatch("k", row.k.to_string(), format!("{:?}", inst.k)));
        }
        if inst.label.is_some_and(|l| l != row.label) {
            return Err(mismatch("label", row.label.to_string(), format!("{:?}", inst.label)));
        }
        if inst.graph.vertex_count() != row.n {
            return Err(mismatch("n", row.n.to_string(), inst.graph.vertex_count().to_string()));
        }
        let mix = row.mix.parse().map_err(|_| DatasetError::Mix { id: row.id.clone(), mix: row.mix.clone() })?;
        entries.push(DatasetEntry {
            id: row.id,
            n: row.n,
            p: row.p,
            mix,
            seed: row.seed,
            chi: row.chi,
            k: row.k,
            label: row.label,
            graph: inst.graph,
        });
    }
    Ok(entries)
}
