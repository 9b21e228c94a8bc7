//! Text formats: sweep CSV, density-matrix and ensemble files, gnuplot scripts.

use std::fmt::Write as _;

use num_complex::Complex64;

use super::grid::Figure;
use crate::concurrence::Ensemble;
use crate::error::{Error, Result};
use crate::experiments::{SweepRecord, ThresholdRow};
use crate::linalg::ComplexMatrix;
use crate::spin::DensityMatrix;

pub const RECORD_HEADER: &str = "n,j,gamma,h,t,boundary,concurrence,energy0,log_z,engine,degenerate";
pub const THRESHOLD_HEADER: &str = "n,boundary,exact,asymptotic,ratio";

/// 17 significant digits, independent of locale.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn records_csv(records: &[SweepRecord]) -> String {
    let mut s = String::with_capacity(160 * (records.len() + 1));
    s.push_str(RECORD_HEADER);
    s.push('\n');
    for r in records {
        let log_z = r.log_z.map(fmt_f64).unwrap_or_default();
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{},{},{},{}",
            r.n,
            fmt_f64(r.j),
            fmt_f64(r.gamma),
            fmt_f64(r.h),
            fmt_f64(r.t),
            r.boundary,
            fmt_f64(r.concurrence),
            fmt_f64(r.energy0),
            log_z,
            r.engine,
            r.degenerate
        );
    }
    s
}

pub fn thresholds_csv(rows: &[ThresholdRow]) -> String {
    let mut s = String::from(THRESHOLD_HEADER);
    s.push('\n');
    for r in rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{}",
            r.n,
            r.boundary,
            fmt_f64(r.exact),
            fmt_f64(r.asymptotic),
            fmt_f64(r.ratio)
        );
    }
    s
}

fn parse_entry(line: &str, lineno: usize) -> Result<Complex64> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<f64> {
        it.next()
            .ok_or_else(|| Error::Parse(format!("line {lineno}: expected 're im'")))?
            .parse()
            .map_err(|_| Error::Parse(format!("line {lineno}: not a number")))
    };
    let z = Complex64::new(next()?, next()?);
    if it.next().is_some() {
        return Err(Error::Parse(format!("line {lineno}: trailing data")));
    }
    Ok(z)
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_header(line: Option<(usize, &str)>) -> Result<(usize, usize)> {
    let (lineno, line) = line.ok_or_else(|| Error::Parse("empty file".into()))?;
    let nums: Vec<usize> = line
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("line {lineno}: bad header"))))
        .collect::<Result<_>>()?;
    match nums[..] {
        [a, b] => Ok((a, b)),
        _ => Err(Error::Parse(format!("line {lineno}: header needs two integers"))),
    }
}

/// Header `<dim> <n>`, then `dim²` row-major `re im` lines.
pub fn write_density_matrix(rho: &DensityMatrix) -> String {
    let dim = rho.dim();
    let n = rho.n().unwrap_or(0);
    let mut s = format!("{dim} {n}\n");
    for z in rho.matrix().as_slice() {
        let _ = writeln!(s, "{} {}", fmt_f64(z.re), fmt_f64(z.im));
    }
    s
}

pub fn read_density_matrix(text: &str) -> Result<DensityMatrix> {
    let mut lines = data_lines(text);
    let (dim, n) = parse_header(lines.next())?;
    if dim == 0 || n >= usize::BITS as usize || 1usize << n != dim {
        return Err(Error::Parse(format!("header: dim {dim} is not 2^{n}")));
    }
    let entries: Vec<Complex64> = lines.map(|(i, l)| parse_entry(l, i)).collect::<Result<_>>()?;
    if entries.len() != dim * dim {
        return Err(Error::Parse(format!(
            "expected {} entries, found {}",
            dim * dim,
            entries.len()
        )));
    }
    DensityMatrix::new(ComplexMatrix::from_vec(dim, dim, entries)?)
}

/// Header `<dim> <len>`, then each vector's `dim` entries as `re im` lines.
pub fn write_ensemble(e: &Ensemble) -> String {
    let mut s = format!("{} {}\n", e.dim(), e.len());
    for v in e.vectors() {
        for z in v {
            let _ = writeln!(s, "{} {}", fmt_f64(z.re), fmt_f64(z.im));
        }
    }
    s
}

pub fn read_ensemble(text: &str) -> Result<Ensemble> {
    let mut lines = data_lines(text);
    let (dim, len) = parse_header(lines.next())?;
    let entries: Vec<Complex64> = lines.map(|(i, l)| parse_entry(l, i)).collect::<Result<_>>()?;
    if dim == 0 || entries.len() != dim * len {
        return Err(Error::Parse(format!(
            "expected {} entries, found {}",
            dim * len,
            entries.len()
        )));
    }
    Ensemble::new(entries.chunks(dim).map(<[Complex64]>::to_vec).collect())
}

/// Gnuplot script plotting a sweep CSV. Column numbers follow [`RECORD_HEADER`].
pub fn gnuplot_script(csv_path: &str, figure: Option<Figure>) -> String {
    let mut s = String::from("set datafile separator ','\nset key autotitle columnhead\n");
    s.push_str("set ylabel 'C_n'\n");
    let body = match figure {
        Some(Figure::Fig1) => format!(
            "set xlabel 'gamma'\nset ylabel 'h/J'\nset zlabel 'C_n'\nsplot '{csv_path}' using 3:4:7 with points pt 7 ps 0.3\n"
        ),
        Some(Figure::Fig3) => format!(
            "set xlabel 'log10 t'\nplot '{csv_path}' using (log10($5)):7 with lines\n"
        ),
        Some(Figure::Table1) => format!(
            "set xlabel 'n'\nset logscale x\nset ylabel 'ratio'\nplot '{csv_path}' using 1:5 with linespoints\n"
        ),
        _ => format!("set xlabel 'h/J'\nplot '{csv_path}' using 4:7 with lines\n"),
    };
    s.push_str(&body);
    s.push_str("pause -1\n");
    s
}
