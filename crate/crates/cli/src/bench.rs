//! Random-instance benchmark with instrumentation bounds.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use anyhow::Result;
use clap::ValueEnum;
use closed_frechet::{decide, ClosedCurve};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Size {
    pub m: usize,
    pub n: usize,
}

impl FromStr for Size {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| match t.trim().parse::<usize>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(format!(
                "invalid size {s:?}: expected M or MxN with positive integers"
            )),
        };
        match s.split_once(['x', 'X']) {
            Some((m, n)) => Ok(Size {
                m: parse(m)?,
                n: parse(n)?,
            }),
            None => {
                let m = parse(s)?;
                Ok(Size { m, n: m })
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchFormat {
    Text,
    Csv,
    Json,
}

/// Aggregate over the trials of one size.
#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub m: usize,
    pub n: usize,
    pub trials: usize,
    pub true_answers: usize,
    /// Largest per-pass push count over all trials, divided by `6mn`.
    pub pushes_ratio: f64,
    pub max_forward_len: usize,
    pub forward_bound: usize,
    pub max_backward_len: usize,
    pub backward_bound: usize,
    pub bound_violations: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub median_ms: Option<f64>,
}

fn random_curve(rng: &mut ChaCha8Rng, len: usize) -> ClosedCurve {
    let pts: Vec<(f64, f64)> = (0..len).map(|_| (rng.random(), rng.random())).collect();
    ClosedCurve::from_xy(&pts).expect("finite coordinates")
}

fn median_pair_distance(x: &ClosedCurve, y: &ClosedCurve) -> f64 {
    let mut d: Vec<f64> = x
        .vertices()
        .iter()
        .flat_map(|a| {
            y.vertices()
                .iter()
                .map(move |b| a.distance(b).expect("same dimension"))
        })
        .collect();
    d.sort_by(f64::total_cmp);
    d[d.len() / 2]
}

/// Runs `trials` random instances per size. Sizes with zero trials produce no row.
pub fn run(sizes: &[Size], trials: usize, seed: u64) -> Vec<BenchRow> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    if trials == 0 {
        return rows;
    }
    for &Size { m, n } in sizes {
        let bound = (6 * m * n) as f64;
        let mut row = BenchRow {
            m,
            n,
            trials,
            true_answers: 0,
            pushes_ratio: 0.0,
            max_forward_len: 0,
            forward_bound: 2 * n + 1,
            max_backward_len: 0,
            backward_bound: 4 * m + 1,
            bound_violations: 0,
            median_ms: None,
        };
        let mut times = Vec::with_capacity(trials);
        for _ in 0..trials {
            let x = random_curve(&mut rng, m);
            let y = random_curve(&mut rng, n);
            let eps = median_pair_distance(&x, &y);
            let start = Instant::now();
            let rep = decide(&x, &y, eps).expect("valid random instance");
            times.push(start.elapsed().as_secs_f64() * 1e3);

            row.true_answers += usize::from(rep.answer);
            let pushes = rep.forward.pushes.max(rep.backward.pushes) as f64;
            row.pushes_ratio = row.pushes_ratio.max(pushes / bound);
            row.max_forward_len = row.max_forward_len.max(rep.forward.max_len);
            row.max_backward_len = row.max_backward_len.max(rep.backward.max_len);
            row.bound_violations += rep.forward.bound_violations + rep.backward.bound_violations;
        }
        times.sort_by(f64::total_cmp);
        row.median_ms = Some(times[trials / 2]);
        rows.push(row);
    }
    rows
}

const HEADER: [&str; 10] = [
    "m",
    "n",
    "trials",
    "true_answers",
    "pushes_ratio",
    "max_forward_len",
    "forward_bound",
    "max_backward_len",
    "backward_bound",
    "bound_violations",
];

fn fields(r: &BenchRow) -> Vec<String> {
    vec![
        r.m.to_string(),
        r.n.to_string(),
        r.trials.to_string(),
        r.true_answers.to_string(),
        format!("{:.6}", r.pushes_ratio),
        r.max_forward_len.to_string(),
        r.forward_bound.to_string(),
        r.max_backward_len.to_string(),
        r.backward_bound.to_string(),
        r.bound_violations.to_string(),
    ]
}

/// Renders rows. Wall time appears in text always, in CSV and JSON only with
/// `timing`, so that the machine-readable formats are byte-reproducible.
pub fn format(rows: &[BenchRow], format: BenchFormat, timing: bool) -> Result<String> {
    let ms = |r: &BenchRow| format!("{:.3}", r.median_ms.unwrap_or(f64::NAN));
    match format {
        BenchFormat::Text => {
            let mut header: Vec<&str> = HEADER.to_vec();
            header.push("median_ms");
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    let mut f = fields(r);
                    f.push(ms(r));
                    f
                })
                .collect();
            let widths: Vec<usize> = (0..header.len())
                .map(|k| {
                    body.iter()
                        .map(|f| f[k].len())
                        .fold(header[k].len(), usize::max)
                })
                .collect();
            let mut out = String::new();
            let mut line = |cells: &[&str]| {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect();
                let _ = writeln!(out, "{}", padded.join("  ").trim_end());
            };
            line(&header);
            for f in &body {
                line(&f.iter().map(String::as_str).collect::<Vec<_>>());
            }
            Ok(out)
        }
        BenchFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header: Vec<&str> = HEADER.to_vec();
            if timing {
                header.push("median_ms");
            }
            w.write_record(&header)?;
            for r in rows {
                let mut f = fields(r);
                if timing {
                    f.push(ms(r));
                }
                w.write_record(&f)?;
            }
            Ok(String::from_utf8(w.into_inner()?)?)
        }
        BenchFormat::Json => {
            let rows: Vec<BenchRow> = rows
                .iter()
                .cloned()
                .map(|mut r| {
                    if !timing {
                        r.median_ms = None;
                    }
                    r
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&rows)?;
            s.push('\n');
            Ok(s)
        }
    }
}
