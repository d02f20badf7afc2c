//! Family sweeps: expand parameter lists into graph specs, compute one
//! comparison row per graph in parallel, write rows in spec order.

use std::io;

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use regbound_core::bounds;
use regbound_core::generators::FamilySpec;
use regbound_core::srg;

use crate::output::{self, COMPARISON_HEADER};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    RandomRegular,
    Tight,
    Multipartite,
    Cycle,
}

/// Parameter lists for a sweep; `None` means the flag was not given.
#[derive(Debug, Clone, Default)]
pub struct SweepParams {
    pub v: Option<Vec<usize>>,
    pub delta: Option<Vec<usize>>,
    pub alpha: Option<Vec<usize>>,
    pub m: Option<Vec<usize>>,
    pub count: usize,
    pub seed: u64,
}

/// A parameter list given on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Values(pub Vec<usize>);

/// Parses `16`, `7,11,15`, `2..3` (inclusive), or a comma list of those.
pub fn parse_values(s: &str) -> Result<Values, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim) {
        if let Some((lo, hi)) = part.split_once("..") {
            let lo: usize = lo
                .trim()
                .parse()
                .map_err(|_| format!("bad range start in {part:?}"))?;
            let hi: usize = hi
                .trim()
                .parse()
                .map_err(|_| format!("bad range end in {part:?}"))?;
            if lo > hi {
                return Err(format!("empty range {part:?}"));
            }
            out.extend(lo..=hi);
        } else {
            out.push(part.parse().map_err(|_| format!("bad value {part:?}"))?);
        }
    }
    Ok(Values(out))
}

fn required<'a>(
    values: &'a Option<Vec<usize>>,
    flag: &str,
    family: Family,
) -> Result<&'a [usize], CliError> {
    values
        .as_deref()
        .ok_or_else(|| CliError::Input(format!("--{flag} is required for {family:?} sweeps")))
}

/// Graph specs in output order.
pub fn expand(family: Family, p: &SweepParams) -> Result<Vec<FamilySpec>, CliError> {
    let specs = match family {
        Family::RandomRegular => {
            let vs = required(&p.v, "v", family)?;
            let ds = required(&p.delta, "delta", family)?;
            let mut seeds = ChaCha8Rng::seed_from_u64(p.seed);
            let mut out = Vec::new();
            for &v in vs {
                for &degree in ds {
                    for _ in 0..p.count {
                        out.push(FamilySpec::RandomRegular {
                            v,
                            degree,
                            seed: seeds.random(),
                        });
                    }
                }
            }
            out
        }
        Family::Tight => required(&p.v, "v", family)?
            .iter()
            .map(|&v| FamilySpec::TightFamily { v })
            .collect(),
        Family::Cycle => required(&p.v, "v", family)?
            .iter()
            .map(|&n| FamilySpec::Cycle { n })
            .collect(),
        Family::Multipartite => {
            let alphas = required(&p.alpha, "alpha", family)?;
            let ms = required(&p.m, "m", family)?;
            alphas
                .iter()
                .flat_map(|&parts| {
                    ms.iter()
                        .map(move |&size| FamilySpec::CompleteMultipartite { parts, size })
                })
                .collect()
        }
    };
    Ok(specs)
}

/// One CSV record; numeric fields are empty when the graph could not be
/// analysed at all.
fn row(spec: &FamilySpec, tol: f64) -> Vec<String> {
    let label = spec.label();
    let g = match spec.build() {
        Ok(g) => g,
        Err(e) => return error_row(label, e.to_string()),
    };
    let cmp = match bounds::comparison(&g) {
        Ok(c) => c,
        Err(e) => return error_row(label, e.to_string()),
    };
    let mut fields = output::comparison_fields(&label, &cmp);
    let certified = match srg::detect_srg(&g) {
        Ok(Some(p)) => srg::maximality_certificate(&p).certified.to_string(),
        _ => String::new(),
    };
    fields.push(certified);
    fields.push(
        cmp.check(tol)
            .err()
            .map(|e| e.to_string())
            .unwrap_or_default(),
    );
    fields
}

fn error_row(label: String, error: String) -> Vec<String> {
    let mut fields = vec![label];
    fields.extend(std::iter::repeat_n(String::new(), COMPARISON_HEADER.len())); // numbers + certified
    fields.push(error);
    fields
}

pub fn write_sweep<W: io::Write>(specs: &[FamilySpec], tol: f64, out: W) -> Result<(), CliError> {
    let rows: Vec<Vec<String>> = specs.par_iter().map(|s| row(s, tol)).collect();
    let mut w = output::csv_writer(out);
    let mut header: Vec<&str> = COMPARISON_HEADER.to_vec();
    header.extend(["certified", "error"]);
    w.write_record(&header)?;
    for r in &rows {
        w.write_record(r)?;
    }
    w.flush()?;
    Ok(())
}
