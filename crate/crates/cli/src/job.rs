//! Parsing and validation of command-line jobs.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use krchar::{LieType, MultiDegree, PsiMode, RootSystem, Weight};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("{flag}: invalid {what} {token:?} at position {position} (column {column}) in {input:?}")]
    BadToken { flag: String, what: &'static str, token: String, position: usize, column: usize, input: String },
    #[error("{flag}: expected \"coords@degree\" but found no '@' in {input:?}")]
    MissingAt { flag: String, input: String },
    #[error("{flag}: empty value")]
    Empty { flag: String },
    #[error("{flag}: {reason}")]
    Invalid { flag: String, reason: String },
    #[error("missing required option {0}")]
    Missing(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Plain,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Paper,
    Identities,
    All,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Paper => "paper",
            Suite::Identities => "identities",
            Suite::All => "all",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Gch { weight: Weight, ell: usize, mode: PsiMode },
    Ext { from: (Weight, MultiDegree), to: (Weight, MultiDegree), j: Option<u32> },
    Gamma { weight: Weight, ell: usize, node: Option<usize> },
    Tensor { weights: Vec<Weight> },
    Psi { node: Option<usize>, weight: Option<Weight> },
    Verify { suite: Suite },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobSpec {
    pub algebra: Option<LieType>,
    pub command: Command,
    pub format: Format,
    pub cache_path: Option<PathBuf>,
}

fn column_of(input: &str, index: usize) -> usize {
    input.split(',').take(index).map(|t| t.chars().count() + 1).sum::<usize>() + 1
}

/// Comma-separated integers, e.g. `0,0,2,0,0`.
pub fn parse_coords(flag: &str, input: &str) -> Result<Vec<i32>, InputError> {
    if input.trim().is_empty() {
        return Err(InputError::Empty { flag: flag.into() });
    }
    input
        .split(',')
        .enumerate()
        .map(|(i, tok)| {
            tok.trim().parse::<i32>().map_err(|_| InputError::BadToken {
                flag: flag.into(),
                what: "integer",
                token: tok.to_string(),
                position: i + 1,
                column: column_of(input, i),
                input: input.to_string(),
            })
        })
        .collect()
}

/// `coords@degree`, e.g. `0,0,2,0,0@0,0`.
pub fn parse_point(flag: &str, input: &str) -> Result<(Vec<i32>, Vec<i32>), InputError> {
    let Some((w, d)) = input.split_once('@') else {
        return Err(InputError::MissingAt { flag: flag.into(), input: input.into() });
    };
    let weight = parse_coords(flag, w)?;
    let degree = parse_coords(flag, d).map_err(|e| match e {
        InputError::BadToken { flag, token, position, column, .. } => InputError::BadToken {
            flag,
            what: "degree entry",
            token,
            position: weight.len() + position,
            column: w.chars().count() + 1 + column,
            input: input.to_string(),
        },
        other => other,
    })?;
    Ok((weight, degree))
}

pub fn parse_format(s: &str) -> Result<Format, InputError> {
    match s {
        "plain" => Ok(Format::Plain),
        "json" => Ok(Format::Json),
        "latex" => Ok(Format::Latex),
        _ => Err(InputError::Invalid { flag: "--format".into(), reason: format!("unknown format {s:?} (plain, json, latex)") }),
    }
}

pub fn parse_suite(s: &str) -> Result<Suite, InputError> {
    match s {
        "paper" => Ok(Suite::Paper),
        "identities" => Ok(Suite::Identities),
        "all" => Ok(Suite::All),
        _ => Err(InputError::Invalid { flag: "--suite".into(), reason: format!("unknown suite {s:?} (paper, identities, all)") }),
    }
}

pub fn parse_mode(s: &str) -> Result<PsiMode, InputError> {
    PsiMode::from_str(s).map_err(|_| InputError::Invalid {
        flag: "--mode".into(),
        reason: format!("unknown mode {s:?} (fixed-psi, per-weight-psi)"),
    })
}

pub fn parse_algebra(s: &str) -> Result<LieType, InputError> {
    s.parse().map_err(|e: krchar::rootsys::RootSysError| InputError::Invalid { flag: "--algebra".into(), reason: e.to_string() })
}

/// Rank and dominance checks against the chosen algebra.
pub fn check_weight(flag: &str, rs: &RootSystem, coords: Vec<i32>) -> Result<Weight, InputError> {
    let w = Weight(coords);
    rs.check_dominant(&w).map_err(|e| InputError::Invalid { flag: flag.into(), reason: e.to_string() })?;
    Ok(w)
}

pub fn check_degree(flag: &str, degree: Vec<i32>, ell: Option<usize>) -> Result<MultiDegree, InputError> {
    if let Some(pos) = degree.iter().position(|&x| x < 0) {
        return Err(InputError::Invalid {
            flag: flag.into(),
            reason: format!("degree entry {} at position {} is negative", degree[pos], pos + 1),
        });
    }
    if let Some(ell) = ell {
        if degree.len() != ell {
            return Err(InputError::Invalid {
                flag: flag.into(),
                reason: format!("degree has {} entries, expected ℓ = {ell}", degree.len()),
            });
        }
    }
    Ok(MultiDegree(degree))
}

pub fn check_ell(ell: usize) -> Result<usize, InputError> {
    if ell == 0 {
        return Err(InputError::Invalid { flag: "--ell".into(), reason: "ℓ must be positive".into() });
    }
    Ok(ell)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coords_parse_and_report_positions() {
        assert_eq!(parse_coords("--weight", "0, 0,2").unwrap(), vec![0, 0, 2]);
        match parse_coords("--weight", "0,x,2") {
            Err(InputError::BadToken { token, position, column, .. }) => {
                assert_eq!((token.as_str(), position, column), ("x", 2, 3));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_coords("--weight", ""), Err(InputError::Empty { .. })));
    }

    #[test]
    fn points_need_an_at_sign() {
        assert_eq!(parse_point("--from", "1,0@0,2").unwrap(), (vec![1, 0], vec![0, 2]));
        assert!(matches!(parse_point("--from", "1,0"), Err(InputError::MissingAt { .. })));
        match parse_point("--to", "1,0@0,q") {
            Err(InputError::BadToken { token, column, .. }) => assert_eq!((token.as_str(), column), ("q", 7)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn enumerations() {
        assert_eq!(parse_format("latex").unwrap(), Format::Latex);
        assert!(parse_format("xml").is_err());
        assert_eq!(parse_suite("paper").unwrap(), Suite::Paper);
        assert_eq!(parse_mode("per-weight-psi").unwrap(), PsiMode::PerWeightPsi);
        assert!(parse_algebra("E8").is_err());
    }

    #[test]
    fn degree_validation() {
        assert!(check_degree("--from", vec![0, 1], Some(2)).is_ok());
        assert!(check_degree("--from", vec![0, -1], None).is_err());
        assert!(check_degree("--from", vec![0], Some(2)).is_err());
    }
}
