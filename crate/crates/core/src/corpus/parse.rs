//! Line-oriented group file format.
//!
//! ```text
//! # Heisenberg group over F_3
//! p: 3
//! kind: matrix
//! n: 3
//! gen a: 1 1 0; 0 1 0; 0 0 1
//! gen b: 1 0 0; 0 1 1; 0 0 1
//! ```
//!
//! `kind: perm` files give generators as products of disjoint cycles on
//! 1-based points, e.g. `gen a: (1 2 3)(4 5 6)`. `()` is the identity.
//! `#` starts a comment; blank lines are ignored.

use super::spec::{GroupKind, GroupSpec, Generator};
use crate::error::{Error, Result};
use crate::group::{is_odd_prime, Action};

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

fn parse_cycles(line: usize, body: &str) -> Result<Vec<(usize, usize)>> {
    // Returns (point, image) pairs, zero-based.
    let mut pairs = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut rest = body.trim();
    while !rest.is_empty() {
        let Some(after_open) = rest.strip_prefix('(') else {
            return Err(parse_err(line, format!("expected `(` at `{rest}`")));
        };
        let Some(close) = after_open.find(')') else {
            return Err(parse_err(line, "unclosed cycle"));
        };
        let inner = &after_open[..close];
        if inner.contains('(') {
            return Err(parse_err(line, "nested `(`"));
        }
        let mut points = Vec::new();
        for tok in inner.split_whitespace() {
            let pt: usize = tok
                .parse()
                .map_err(|_| parse_err(line, format!("bad point `{tok}`")))?;
            if pt == 0 {
                return Err(parse_err(line, "points are 1-based"));
            }
            if !seen.insert(pt) {
                return Err(parse_err(line, format!("repeated point {pt}")));
            }
            points.push(pt - 1);
        }
        for (i, &x) in points.iter().enumerate() {
            pairs.push((x, points[(i + 1) % points.len()]));
        }
        rest = after_open[close + 1..].trim_start();
    }
    Ok(pairs)
}

fn parse_matrix(line: usize, body: &str, dim: usize, p: u64) -> Result<Action> {
    let rows: Vec<&str> = body.split(';').collect();
    if rows.len() != dim {
        return Err(parse_err(line, format!("expected {dim} rows, got {}", rows.len())));
    }
    let mut entries = Vec::with_capacity(dim * dim);
    for row in rows {
        let vals: Vec<&str> = row.split_whitespace().collect();
        if vals.len() != dim {
            return Err(parse_err(line, format!("expected {dim} entries in row `{}`", row.trim())));
        }
        for v in vals {
            let x: i64 = v
                .parse()
                .map_err(|_| parse_err(line, format!("bad entry `{v}`")))?;
            entries.push(x.rem_euclid(p as i64) as u32);
        }
    }
    for i in 0..dim {
        for j in 0..=i {
            let want = u32::from(i == j);
            if entries[i * dim + j] != want {
                return Err(Error::NotUnitriangular { line });
            }
        }
    }
    Ok(Action::Matrix {
        dim,
        modulus: p as u32,
        entries,
    })
}

/// Parses a group file into a [`GroupSpec`]. The label is left empty for
/// the caller to fill in (usually from the file name).
pub fn parse_group_file(text: &str) -> Result<GroupSpec> {
    let mut prime: Option<(u64, usize)> = None;
    let mut kind: Option<GroupKind> = None;
    let mut dim: Option<usize> = None;
    let mut raw_gens: Vec<(usize, String, String)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((key, value)) = content.split_once(':') else {
            return Err(parse_err(line, "expected `key: value`"));
        };
        let key = key.trim();
        let value = value.trim();
        if let Some(name) = key.strip_prefix("gen") {
            let name = name.trim();
            if name.is_empty() || !key.starts_with("gen ") {
                return Err(parse_err(line, "expected `gen <name>: ...`"));
            }
            if raw_gens.iter().any(|(_, n, _)| n == name) {
                return Err(parse_err(line, format!("duplicate generator `{name}`")));
            }
            raw_gens.push((line, name.to_string(), value.to_string()));
            continue;
        }
        match key {
            "p" => {
                let p: u64 = value
                    .parse()
                    .map_err(|_| parse_err(line, format!("bad prime `{value}`")))?;
                if !is_odd_prime(p) {
                    return Err(Error::InvalidPrime(p));
                }
                prime = Some((p, line));
            }
            "kind" => {
                kind = Some(match value {
                    "perm" => GroupKind::Perm,
                    "matrix" => GroupKind::Matrix,
                    other => return Err(parse_err(line, format!("unknown kind `{other}`"))),
                });
            }
            "n" => {
                let d: usize = value
                    .parse()
                    .map_err(|_| parse_err(line, format!("bad dimension `{value}`")))?;
                if d == 0 {
                    return Err(parse_err(line, "dimension must be positive"));
                }
                dim = Some(d);
            }
            other => return Err(parse_err(line, format!("unknown key `{other}`"))),
        }
    }

    let end = text.lines().count().max(1);
    let (p, _) = prime.ok_or_else(|| parse_err(end, "missing `p:`"))?;
    let kind = kind.ok_or_else(|| parse_err(end, "missing `kind:`"))?;

    let generators = match kind {
        GroupKind::Perm => {
            let mut parsed = Vec::new();
            let mut degree = 1;
            for (line, name, body) in &raw_gens {
                let pairs = parse_cycles(*line, body)?;
                degree = pairs.iter().map(|&(x, _)| x + 1).fold(degree, usize::max);
                parsed.push((name.clone(), pairs));
            }
            parsed
                .into_iter()
                .map(|(name, pairs)| {
                    let mut images: Vec<u32> = (0..degree as u32).collect();
                    for (x, y) in pairs {
                        images[x] = y as u32;
                    }
                    Generator {
                        name,
                        action: Action::Perm(images),
                    }
                })
                .collect()
        }
        GroupKind::Matrix => {
            let dim = dim.ok_or_else(|| parse_err(end, "matrix groups need `n:`"))?;
            raw_gens
                .iter()
                .map(|(line, name, body)| {
                    Ok(Generator {
                        name: name.clone(),
                        action: parse_matrix(*line, body, dim, p)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?
        }
    };

    Ok(GroupSpec {
        prime: p,
        kind,
        label: String::new(),
        generators,
        family: None,
        expected_order: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_perm_file() {
        let spec = parse_group_file("p: 3\nkind: perm\ngen a: (1 2 3)").unwrap();
        assert_eq!(spec.prime, 3);
        assert_eq!(spec.generators.len(), 1);
        assert_eq!(spec.generators[0].action, Action::Perm(vec![1, 2, 0]));
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# a comment\n\np: 5   # trailing\nkind: perm\n\ngen a: (1 2 3 4 5)\ngen e: ()\n";
        let spec = parse_group_file(text).unwrap();
        assert_eq!(spec.generators.len(), 2);
        assert!(spec.generators[1].action.is_identity());
    }

    #[test]
    fn matrix_entries_reduced_mod_p() {
        let text = "p: 3\nkind: matrix\nn: 2\ngen a: 1 -1; 3 4";
        let spec = parse_group_file(text).unwrap();
        let Action::Matrix { entries, .. } = &spec.generators[0].action else {
            panic!("expected a matrix");
        };
        assert_eq!(entries, &vec![1, 2, 0, 1]);
    }

    #[test]
    fn rejections_are_distinct() {
        assert_eq!(
            parse_group_file("p: 2\nkind: perm\ngen a: (1 2)").unwrap_err(),
            Error::InvalidPrime(2)
        );
        assert_eq!(
            parse_group_file("p: 4\nkind: perm\ngen a: (1 2)").unwrap_err(),
            Error::InvalidPrime(4)
        );
        assert_eq!(
            parse_group_file("p: 3\nkind: matrix\nn: 2\ngen a: 1 1; 1 1").unwrap_err(),
            Error::NotUnitriangular { line: 4 }
        );
        assert_eq!(
            parse_group_file("p: 3\nkind: matrix\nn: 2\ngen a: 2 0; 0 1").unwrap_err(),
            Error::NotUnitriangular { line: 4 }
        );
        match parse_group_file("p: 3\nkind: perm\ngen a: (1 2 1)").unwrap_err() {
            Error::Parse { line: 3, reason } => assert!(reason.contains("repeated")),
            e => panic!("unexpected {e:?}"),
        }
        match parse_group_file("p: 3\nkind: perm\ngen a: (1 2 3)(3 4 5)").unwrap_err() {
            Error::Parse { line: 3, .. } => {}
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn malformed_lines_carry_line_numbers() {
        let cases = [
            ("p: 3\nkind: perm\ngen a: 1 2 3", 3),
            ("p: 3\nkind: perm\ngen a: (1 2 3", 3),
            ("p: 3\nkind: blob", 2),
            ("p: 3\nkind: perm\nfoo: bar", 3),
            ("p: 3\nkind: matrix\nn: 3\ngen a: 1 0; 0 1", 4),
            ("p: 3\nkind: perm\ngen a: (1 2 3)\ngen a: (1 3 2)", 4),
            ("p: x", 1),
        ];
        for (text, want) in cases {
            match parse_group_file(text) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, want, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn missing_header_fields() {
        assert!(matches!(
            parse_group_file("kind: perm\ngen a: (1 2 3)"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_group_file("p: 3\ngen a: (1 2 3)"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_group_file("p: 3\nkind: matrix\ngen a: 1 0; 0 1"),
            Err(Error::Parse { .. })
        ));
    }
}
