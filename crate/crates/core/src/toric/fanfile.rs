//! Plain-text fan format.
//!
//! ```text
//! # comment
//! 1,0
//! 0,1
//! -1,-1
//!
//! 0,1,1,0
//! ```
//!
//! One ray per line as comma-separated integers, then an optional blank line
//! followed by group elements, one `n × n` matrix per line in row-major
//! order. Lines starting with `#` are ignored. [`FanFile::to_text`] writes
//! the canonical form, which parses back to the same value and re-renders
//! byte for byte.

use std::fmt::Write as _;

use thiserror::Error;

use super::rays::RaySet;
use super::ToricError;
use crate::{IntMatrix, Integer, LatticeVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FanFormatError {
    pub line: usize,
    pub message: String,
}

/// Rays plus the group elements listed with them (closure is the caller's
/// business, see [`crate::toric::GroupAction::generated_by`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanFile {
    pub rays: RaySet,
    pub group: Vec<IntMatrix>,
}

fn parse_integers(line: &str) -> Result<Vec<Integer>, String> {
    line.split(',')
        .map(|t| {
            let t: String = t.chars().filter(|c| !c.is_whitespace()).collect();
            t.parse::<Integer>().map_err(|_| format!("`{t}` is not an integer"))
        })
        .collect()
}

/// Parses `"1,0;0,1;-1,-1"`-style ray lists.
pub fn parse_ray_list(text: &str) -> Result<RaySet, String> {
    let rays = text
        .split(';')
        .filter(|r| !r.trim().is_empty())
        .map(|r| parse_integers(r).map(LatticeVector::new))
        .collect::<Result<Vec<_>, _>>()?;
    RaySet::new(rays).map_err(|e| e.to_string())
}

/// Parses `;`-separated row-major matrices of dimension `dim`.
pub fn parse_matrix_list(text: &str, dim: usize) -> Result<Vec<IntMatrix>, String> {
    text.split(';')
        .filter(|m| !m.trim().is_empty())
        .map(|m| parse_matrix(m, dim))
        .collect()
}

fn parse_matrix(line: &str, dim: usize) -> Result<IntMatrix, String> {
    let entries = parse_integers(line)?;
    if entries.len() != dim * dim {
        return Err(format!(
            "group element has {} entries, expected {} for dimension {dim}",
            entries.len(),
            dim * dim
        ));
    }
    IntMatrix::from_flat(dim, dim, entries).map_err(|e| e.to_string())
}

impl FanFile {
    pub fn new(rays: RaySet) -> Self {
        FanFile { rays, group: Vec::new() }
    }

    pub fn parse(text: &str) -> Result<Self, FanFormatError> {
        let err = |line: usize, message: String| FanFormatError { line, message };
        let mut rays = Vec::new();
        let mut ray_lines = Vec::new();
        let mut matrices = Vec::new();
        let mut in_group = false;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.starts_with('#') {
                continue;
            }
            if line.is_empty() {
                if !rays.is_empty() {
                    in_group = true;
                }
                continue;
            }
            let values = parse_integers(line).map_err(|m| err(line_no, m))?;
            if in_group {
                matrices.push((line_no, values));
            } else {
                rays.push(LatticeVector::new(values));
                ray_lines.push(line_no);
            }
        }
        let rays = RaySet::new(rays).map_err(|e| {
            let line = match &e {
                ToricError::ZeroRay(i) | ToricError::RayDimensionMismatch { index: i, .. } => ray_lines[*i],
                _ => ray_lines.last().copied().unwrap_or(1),
            };
            err(line, e.to_string())
        })?;
        let dim = rays.dim();
        let group = matrices
            .into_iter()
            .map(|(line_no, values)| {
                if values.len() != dim * dim {
                    return Err(err(
                        line_no,
                        format!("group element has {} entries, expected {}", values.len(), dim * dim),
                    ));
                }
                IntMatrix::from_flat(dim, dim, values).map_err(|e| err(line_no, e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FanFile { rays, group })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for ray in self.rays.rays() {
            writeln!(out, "{ray}").unwrap();
        }
        if !self.group.is_empty() {
            out.push('\n');
            for g in &self.group {
                let entries: Vec<String> = g.entries().iter().map(ToString::to_string).collect();
                writeln!(out, "{}", entries.join(",")).unwrap();
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rays_group_and_comments() {
        let text = "# P^1 with the sign flip\n1\n-1\n\n-1\n";
        let fan = FanFile::parse(text).unwrap();
        assert_eq!(fan.rays, RaySet::from_i64(&[&[1], &[-1]]).unwrap());
        assert_eq!(fan.group, vec![IntMatrix::from_i64_rows(&[&[-1]]).unwrap()]);
        assert_eq!(fan.to_text(), "1\n-1\n\n-1\n");
        assert_eq!(FanFile::parse(&fan.to_text()).unwrap(), fan);
    }

    #[test]
    fn whitespace_is_ignored() {
        let fan = FanFile::parse(" 1 , 0\n0,1\n-1, -1\n").unwrap();
        assert_eq!(fan.to_text(), "1,0\n0,1\n-1,-1\n");
    }

    #[test]
    fn reports_line_numbers() {
        let e = FanFile::parse("1,0\n0,x\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = FanFile::parse("1,0\n0,1\n-1,-1\n\n1,0,0\n").unwrap_err();
        assert_eq!(e.line, 5);
        let e = FanFile::parse("1,0\n# c\n0,0\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(FanFile::parse("# only comments\n").is_err());
    }

    #[test]
    fn ray_and_matrix_lists() {
        let rays = parse_ray_list("1,0; 0,1; -1,-1").unwrap();
        assert_eq!(rays.len(), 3);
        let gs = parse_matrix_list("0,1,1,0;1,0,0,1", 2).unwrap();
        assert_eq!(gs.len(), 2);
        assert!(parse_matrix_list("0,1,1", 2).is_err());
        assert!(parse_ray_list("1,0;0,0").is_err());
    }
}
