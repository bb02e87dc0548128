//! Fan documents and built-in fans.
//!
//! ```json
//! {"lattice_rank": 2, "rays": [[1,0],[0,1],[-1,-1]], "max_cones": [[0,1],[1,2],[2,0]]}
//! ```

use std::path::Path;

use motcell_core::toric::{hirzebruch, product, projective_space};
use motcell_core::{Fan, FanError};
use serde::Deserialize;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FanDocument {
    lattice_rank: usize,
    rays: Vec<Vec<i64>>,
    max_cones: Vec<Vec<usize>>,
}

/// Parses and validates a fan document.
pub fn parse_fan(text: &str, name: &str) -> Result<Fan, FanError> {
    let doc: FanDocument =
        serde_json::from_str(text).map_err(|e| FanError::Malformed(e.to_string()))?;
    Fan::new(name, doc.lattice_rank, doc.rays, doc.max_cones)
}

/// Reads a fan file; the fan is named after the file stem.
pub fn read_fan(path: &Path) -> Result<Fan, crate::CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| crate::CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("fan");
    Ok(parse_fan(&text, name)?)
}

/// `p<n>`, `f<a>`, and products of those joined by `x`, e.g. `p2xp1`.
pub fn builtin_fan(spec: &str) -> Option<Fan> {
    let mut fan: Option<Fan> = None;
    for part in spec.to_ascii_lowercase().split('x') {
        let factor = match part.split_at_checked(1) {
            Some(("p", n)) => {
                let n: usize = n.parse().ok()?;
                if n == 0 || n > motcell_core::toric::MAX_LATTICE_RANK {
                    return None;
                }
                projective_space(n)
            }
            Some(("f", a)) => {
                let a: i64 = a.parse().ok()?;
                if !(0..=1000).contains(&a) {
                    return None;
                }
                hirzebruch(a)
            }
            _ => return None,
        };
        fan = Some(match fan {
            None => factor,
            Some(f) if f.lattice_rank() + factor.lattice_rank()
                <= motcell_core::toric::MAX_LATTICE_RANK =>
            {
                product(&f, &factor)
            }
            Some(_) => return None,
        });
    }
    fan
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_p2() {
        let f = parse_fan(
            r#"{"lattice_rank": 2, "rays": [[1,0],[0,1],[-1,-1]], "max_cones": [[0,1],[1,2],[2,0]]}"#,
            "p2",
        )
        .unwrap();
        assert_eq!(f.max_cones().len(), 3);
    }

    #[test]
    fn rejects_unknown_fields_and_garbage() {
        let e = parse_fan(r#"{"lattice_rank": 1, "rays": [[1],[-1]], "max_cones": [[0],[1]], "x": 1}"#, "f")
            .unwrap_err();
        assert_eq!(e.kind(), "ParseError");
        assert_eq!(parse_fan("not json", "f").unwrap_err().kind(), "ParseError");
        assert_eq!(parse_fan(r#"{"lattice_rank": 1}"#, "f").unwrap_err().kind(), "ParseError");
    }

    #[test]
    fn builtins() {
        assert_eq!(builtin_fan("p1").unwrap().name(), "P1");
        assert_eq!(builtin_fan("p2xp1").unwrap().name(), "P2xP1");
        assert_eq!(builtin_fan("F3").unwrap().name(), "F3");
        assert!(builtin_fan("p0").is_none());
        assert!(builtin_fan("q2").is_none());
        assert!(builtin_fan("").is_none());
    }
}
