//! Persistent store of tensor decompositions.
//!
//! One record per line: `family,rank|λ|factor|μ<TAB>mult`. A decomposition
//! with no constituents is stored as a single record with `μ = *` and
//! multiplicity 0 so that it, too, is found on reload.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use krchar::{Factor, IsoChar, LieType, RepEngine, Weight};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

type GroupKey = (LieType, Weight, Factor);

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Cache {
    records: BTreeMap<String, i64>,
}

fn coords(w: &Weight) -> String {
    w.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

fn group_prefix(t: LieType, lambda: &Weight, factor: &Factor) -> String {
    format!("{},{}|{}|{}", t.family, t.rank, coords(lambda), factor)
}

fn parse_weight(s: &str) -> Option<Weight> {
    s.split(',').map(|t| t.parse().ok()).collect::<Option<Vec<i32>>>().map(Weight)
}

fn parse_key(key: &str) -> Option<(GroupKey, Option<Weight>)> {
    let mut parts = key.split('|');
    let (alg, lambda, factor, mu) = (parts.next()?, parts.next()?, parts.next()?, parts.next()?);
    if parts.next().is_some() {
        return None;
    }
    let (family, rank) = alg.split_once(',')?;
    let t: LieType = format!("{family}{rank}").parse().ok()?;
    let lambda = parse_weight(lambda)?;
    let factor: Factor = factor.parse().ok()?;
    let mu = if mu == "*" { None } else { Some(parse_weight(mu)?) };
    if lambda.rank() != t.rank || mu.as_ref().is_some_and(|m| m.rank() != t.rank) {
        return None;
    }
    Some(((t, lambda, factor), mu))
}

impl Cache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    #[cfg(test)]
    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Merges the records of `path` (a missing file is an empty cache).
    /// Malformed lines are reported on stderr and skipped.
    pub fn load(&mut self, path: &Path) -> Result<(), CacheError> {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(()),
            Err(source) => return Err(CacheError::Io { path: path.to_path_buf(), source }),
        };
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let parsed = line
                .split_once('\t')
                .and_then(|(k, m)| Some((k, m.trim().parse::<i64>().ok()?)))
                .filter(|(k, _)| parse_key(k).is_some());
            match parsed {
                Some((k, m)) => {
                    self.records.insert(k.to_string(), m);
                }
                None => eprintln!("warning: {}:{}: skipping malformed cache record", path.display(), i + 1),
            }
        }
        Ok(())
    }

    /// Writes every record to a temporary file beside `path`, then renames it.
    pub fn store(&self, path: &Path) -> Result<(), CacheError> {
        let io = |source| CacheError::Io { path: path.to_path_buf(), source };
        let mut tmp = path.as_os_str().to_owned();
        tmp.push(format!(".tmp{}", std::process::id()));
        let tmp = PathBuf::from(tmp);
        {
            let mut f = fs::File::create(&tmp).map_err(io)?;
            for (k, m) in &self.records {
                writeln!(f, "{k}\t{m}").map_err(io)?;
            }
            f.sync_all().map_err(io)?;
        }
        fs::rename(&tmp, path).map_err(|source| {
            let _ = fs::remove_file(&tmp);
            CacheError::Io { path: path.to_path_buf(), source }
        })
    }

    /// Records every memoized decomposition of `engine`.
    pub fn absorb(&mut self, engine: &RepEngine) {
        let t = engine.root_system().lie_type();
        for (lambda, factor, iso) in engine.export_decompositions() {
            let prefix = group_prefix(t, &lambda, &factor);
            let group = format!("{prefix}|");
            let stale: Vec<String> =
                self.records.range(group.clone()..).map(|(k, _)| k).take_while(|k| k.starts_with(&group)).cloned().collect();
            for k in stale {
                self.records.remove(&k);
            }
            if iso.is_empty() {
                self.records.insert(format!("{prefix}|*"), 0);
            }
            for (mu, m) in iso.iter() {
                self.records.insert(format!("{prefix}|{}", coords(mu)), *m);
            }
        }
    }

    /// Seeds `engine` with every stored decomposition for its algebra.
    /// Returns the number of decompositions imported.
    pub fn seed(&self, engine: &RepEngine) -> usize {
        let t = engine.root_system().lie_type();
        let mut groups: BTreeMap<GroupKey, IsoChar> = BTreeMap::new();
        for (k, m) in &self.records {
            let Some((group, mu)) = parse_key(k) else { continue };
            if group.0 != t {
                continue;
            }
            let entry = groups.entry(group).or_default();
            if let Some(mu) = mu {
                entry.add_term(mu, *m);
            }
        }
        let n = groups.len();
        for ((_, lambda, factor), iso) in groups {
            engine.import_decomposition(lambda, factor, iso);
        }
        n
    }

    #[cfg(test)]
    pub fn get(&self, key: &str) -> Option<i64> {
        self.records.get(key).copied()
    }
}
