use std::io;

use regbound_core::Comparison;

pub const COMPARISON_HEADER: [&str; 8] = [
    "graph",
    "v",
    "delta",
    "paper_bound",
    "fiedler_bound",
    "exact",
    "gap_paper",
    "gap_fiedler",
];

/// Plain decimal with 10 significant digits, trailing zeros trimmed and `-0`
/// printed as `0`.
pub fn sig10(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (9 - magnitude).max(0) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        let trimmed = s.trim_end_matches('0').trim_end_matches('.').len();
        s.truncate(trimmed);
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

pub fn csv_writer<W: io::Write>(inner: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(inner)
}

pub fn comparison_fields(graph: &str, c: &Comparison) -> Vec<String> {
    vec![
        graph.to_string(),
        c.v.to_string(),
        c.degree.to_string(),
        sig10(c.paper_bound),
        c.fiedler_bound.to_string(),
        sig10(c.exact),
        sig10(c.gap_paper),
        sig10(c.gap_fiedler),
    ]
}
