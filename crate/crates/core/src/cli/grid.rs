//! Sweep grid specifications.
//!
//! Either a named figure (`fig1`, `fig2`, `fig3`, `table1`) or `;`-separated
//! axes such as `h=-1:1:0.01;t=0.01,0.1`. An axis is `start:stop:step`
//! (inclusive) or a comma list. Axes: `n`, `gamma`, `t`, `log10t`, `h`.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::experiments::sweeps::linspace_step;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Figure {
    Fig1,
    Fig2,
    Fig3,
    Table1,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct CustomGrid {
    pub n: Option<Vec<usize>>,
    pub gamma: Option<Vec<f64>>,
    pub t: Option<Vec<f64>>,
    pub h: Option<Vec<f64>>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum GridSpec {
    Figure(Figure),
    Custom(CustomGrid),
}

fn parse_axis(name: &str, text: &str) -> Result<Vec<f64>> {
    let bad = |what: &str| Error::Parse(format!("grid axis '{name}': {what}"));
    let values: Vec<f64> = if text.contains(':') {
        let parts: Vec<f64> = text
            .split(':')
            .map(|p| p.trim().parse::<f64>().map_err(|_| bad("not a number")))
            .collect::<Result<_>>()?;
        let [start, stop, step] = parts[..] else {
            return Err(bad("expected start:stop:step"));
        };
        if step.is_nan() || step <= 0.0 || stop < start {
            return Err(bad("need step > 0 and stop >= start"));
        }
        linspace_step(start, stop, step)
    } else {
        text.split(',')
            .map(|p| p.trim().parse::<f64>().map_err(|_| bad("not a number")))
            .collect::<Result<_>>()?
    };
    if values.is_empty() || values.iter().any(|v| !v.is_finite()) {
        return Err(bad("empty or non-finite"));
    }
    Ok(values)
}

impl FromStr for GridSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "fig1" => return Ok(GridSpec::Figure(Figure::Fig1)),
            "fig2" => return Ok(GridSpec::Figure(Figure::Fig2)),
            "fig3" => return Ok(GridSpec::Figure(Figure::Fig3)),
            "table1" => return Ok(GridSpec::Figure(Figure::Table1)),
            _ => {}
        }
        let mut g = CustomGrid::default();
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("grid: expected axis=values, got '{part}'")))?;
            let k = k.trim().to_ascii_lowercase();
            let values = parse_axis(&k, v)?;
            match k.as_str() {
                "n" => {
                    if values.iter().any(|&x| x < 1.0 || x.fract() != 0.0) {
                        return Err(Error::Parse("grid axis 'n': sizes must be positive integers".into()));
                    }
                    g.n = Some(values.iter().map(|&x| x as usize).collect());
                }
                "gamma" => g.gamma = Some(values),
                "h" => g.h = Some(values),
                "t" => g.t = Some(values),
                "log10t" => g.t = Some(values.iter().map(|&x| 10f64.powf(x)).collect()),
                other => return Err(Error::Parse(format!("grid: unknown axis '{other}'"))),
            }
        }
        if g == CustomGrid::default() {
            return Err(Error::Parse("grid: no axes given".into()));
        }
        Ok(GridSpec::Custom(g))
    }
}

/// Inclusive size range: `4..8`, `4..=8`, `4-8`, a comma list, or a single size.
pub fn parse_sizes(s: &str) -> Result<Vec<usize>> {
    let bad = || Error::Parse(format!("cannot parse size range '{s}'"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let s = s.trim();
    if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
        if b < a {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    if let Some((a, b)) = s.split_once('-') {
        let (a, b) = (num(a)?, num(b)?);
        if b < a {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    s.split(',').map(num).collect()
}
