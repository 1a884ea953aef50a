//! Aggregate tables from trial-result files.

use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use anyhow::Context as _;
use sofai_core::{aggregate, AggregateRow, TrialResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Csv,
}

const HEADER: [&str; 7] = ["n", "p", "mix", "solver", "success %", "avg time s", "N"];

pub fn read_results(path: &Path) -> anyhow::Result<Vec<TrialResult>> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(serde_json::from_str(&line).with_context(|| format!("{}:{}", path.display(), i + 1))?);
    }
    Ok(out)
}

fn cells(r: &AggregateRow) -> [String; 7] {
    [
        r.n.to_string(),
        r.p.to_string(),
        r.mix.to_string(),
        r.solver.to_string(),
        format!("{:.1}", r.success_rate),
        r.avg_time_s.map_or(String::new(), |t| format!("{t:.3}")),
        r.instances.to_string(),
    ]
}

/// Aggregates `results` and renders them. Cells with no solved instance
/// leave the average time blank; empty input renders the header alone.
pub fn render(results: &[TrialResult], format: Format) -> String {
    let rows: Vec<[String; 7]> = aggregate(results).iter().map(cells).collect();
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(HEADER).expect("writing to memory");
            for r in &rows {
                w.write_record(r).expect("writing to memory");
            }
            String::from_utf8(w.into_inner().expect("flushing to memory")).expect("csv output is utf-8")
        }
        Format::Table => {
            let mut width = HEADER.map(str::len);
            for r in &rows {
                for (w, c) in width.iter_mut().zip(r) {
                    *w = (*w).max(c.len());
                }
            }
            let mut out = String::new();
            let mut line = |cols: &[&str]| {
                let padded: Vec<String> = cols
                    .iter()
                    .zip(width)
                    .enumerate()
                    .map(|(i, (c, w))| if i == 2 || i == 3 { format!("{c:<w$}") } else { format!("{c:>w$}") })
                    .collect();
                out.push_str(padded.join("  ").trim_end());
                out.push('\n');
            };
            line(&HEADER);
            for r in &rows {
                line(&r.each_ref().map(String::as_str));
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sofai_core::{Label, Mix, OutcomeKind, SolverId};

    fn trial(instance: &str, correct: bool, t: f64) -> TrialResult {
        TrialResult {
            instance: instance.into(),
            solver: SolverId::SofaiV2,
            trial: 0,
            n: 5,
            p: 0.5,
            mix: Mix::BALANCED,
            label: Label::Sat,
            outcome: if correct { OutcomeKind::Sat } else { OutcomeKind::Timeout },
            correct,
            wall_time_s: t,
            s1_iterations: 1,
            s2_invoked: false,
            detail: None,
        }
    }

    #[test]
    fn empty_input_is_header_only() {
        assert_eq!(render(&[], Format::Csv), "n,p,mix,solver,success %,avg time s,N\n");
        assert_eq!(render(&[], Format::Table).lines().count(), 1);
    }

    #[test]
    fn csv_quotes_mix_and_blanks_missing_time() {
        let out = render(&[trial("a", false, 1.0)], Format::Csv);
        assert_eq!(out.lines().nth(1), Some("5,0.5,\"50,50\",SOFAI-v2,0.0,,1"));
        let out = render(&[trial("a", true, 0.25), trial("b", false, 1.0)], Format::Csv);
        assert_eq!(out.lines().nth(1), Some("5,0.5,\"50,50\",SOFAI-v2,50.0,0.250,2"));
    }

    #[test]
    fn table_columns_align() {
        let out = render(&[trial("a", true, 0.25)], Format::Table);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0].find("solver"), lines[1].find("SOFAI-v2"));
    }
}
