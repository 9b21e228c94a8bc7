//! Flat `key = value` config files. `[section]` headers are accepted and ignored;
//! `#` and `;` start comments.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Config {
    entries: BTreeMap<String, String>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split(['#', ';']).next().unwrap_or("").trim();
            if line.is_empty() || (line.starts_with('[') && line.ends_with(']')) {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("config line {}: expected key = value", lineno + 1)))?;
            let key = k.trim().trim_start_matches("--").replace('_', "-").to_ascii_lowercase();
            if key.is_empty() {
                return Err(Error::Parse(format!("config line {}: empty key", lineno + 1)));
            }
            entries.insert(key, v.trim().to_string());
        }
        Ok(Self { entries })
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>> {
        match self.entries.get(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| Error::Parse(format!("config key '{key}': cannot parse '{v}'"))),
        }
    }

    /// Command-line value if given, else the config value.
    pub fn pick<T: FromStr>(&self, flag: Option<T>, key: &str) -> Result<Option<T>> {
        match flag {
            Some(v) => Ok(Some(v)),
            None => self.get(key),
        }
    }

    pub fn entries(&self) -> &BTreeMap<String, String> {
        &self.entries
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sections_comments_and_overrides() {
        let c = Config::parse("[chain]\nn = 6 # sites\nboundary=open\n; note\nworkers = 2\n").unwrap();
        assert_eq!(c.get::<usize>("n").unwrap(), Some(6));
        assert_eq!(c.get::<String>("boundary").unwrap().as_deref(), Some("open"));
        assert_eq!(c.pick(Some(8usize), "n").unwrap(), Some(8));
        assert_eq!(c.pick::<f64>(None, "h").unwrap(), None);
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(Config::parse("n 4").is_err());
        assert!(Config::parse("n = four").unwrap().get::<usize>("n").is_err());
    }
}
