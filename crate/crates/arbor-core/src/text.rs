//! Line-oriented matroid file format.
//!
//! One construct per file, `#` starts a comment, blank lines are ignored:
//!
//! ```text
//! uniform r n
//! graphic v        followed by `edge a b` lines; element index = line order
//! bases n          followed by `basis i j ..` lines
//! circuits n       followed by `circuit i j ..` lines
//! ```
//!
//! Trailing `delete e` / `contract e` lines take minors in order, with the
//! usual contiguous relabeling after each one.

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::{Subset, MAX_UNIVERSE};

pub fn parse_matroid(text: &str) -> Result<Matroid> {
    let lines: Vec<(usize, Vec<&str>)> = text
        .lines()
        .enumerate()
        .map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            (i + 1, content.split_whitespace().collect::<Vec<&str>>())
        })
        .filter(|(_, tokens)| !tokens.is_empty())
        .collect();

    let Some(((header_line, header), rest)) = lines.split_first().map(|(h, r)| (h.clone(), r))
    else {
        return Err(Error::Parse {
            line: 1,
            message: "empty file: expected a matroid construct".to_string(),
        });
    };

    let mut at = 0;
    let mut matroid = match header[0] {
        "uniform" => {
            expect_arity(header_line, &header, 3)?;
            let rank = parse_number(header_line, header[1], "rank")?;
            let n = parse_ground_size(header_line, header[2])?;
            if rank > n {
                return Err(Error::Parse {
                    line: header_line,
                    message: format!("uniform rank {rank} exceeds ground size {n}"),
                });
            }
            Matroid::uniform(rank, n)
        }
        "graphic" => {
            expect_arity(header_line, &header, 2)?;
            let vertices = parse_number(header_line, header[1], "vertex count")?;
            let mut edges = Vec::new();
            while at < rest.len() && rest[at].1[0] == "edge" {
                let (line, tokens) = &rest[at];
                expect_arity(*line, tokens, 3)?;
                let a = parse_number(*line, tokens[1], "vertex")?;
                let b = parse_number(*line, tokens[2], "vertex")?;
                if a >= vertices || b >= vertices {
                    return Err(Error::Parse {
                        line: *line,
                        message: format!("edge ({a},{b}) outside vertex range 0..{vertices}"),
                    });
                }
                edges.push((a, b));
                at += 1;
            }
            if edges.len() > MAX_UNIVERSE {
                return Err(Error::Parse {
                    line: header_line,
                    message: format!("{} edges exceed the {MAX_UNIVERSE}-element bound", edges.len()),
                });
            }
            Matroid::graphic(vertices, edges)
        }
        "bases" => {
            let n = family_header(header_line, &header)?;
            let family = parse_family(rest, &mut at, "basis", n)?;
            Matroid::from_bases(n, family)?
        }
        "circuits" => {
            let n = family_header(header_line, &header)?;
            let family = parse_family(rest, &mut at, "circuit", n)?;
            Matroid::from_circuits(n, family)?
        }
        other => {
            return Err(Error::Parse {
                line: header_line,
                message: format!(
                    "unknown construct `{other}` (expected uniform, graphic, bases, or circuits)"
                ),
            })
        }
    };

    // Trailing minors.
    while at < rest.len() {
        let (line, tokens) = &rest[at];
        expect_arity(*line, tokens, 2)?;
        let op = tokens[0];
        if op != "delete" && op != "contract" {
            return Err(Error::Parse {
                line: *line,
                message: format!("unexpected line `{op}` after the construct body"),
            });
        }
        let e: usize = parse_number(*line, tokens[1], "element")?;
        if e >= matroid.ground_size() {
            return Err(Error::Parse {
                line: *line,
                message: format!(
                    "element {e} out of range for the current {}-element ground set",
                    matroid.ground_size()
                ),
            });
        }
        matroid = if op == "delete" {
            matroid.deleted(e)
        } else {
            matroid.contracted(e)
        };
        at += 1;
    }
    Ok(matroid)
}

fn family_header(line: usize, tokens: &[&str]) -> Result<usize> {
    expect_arity(line, tokens, 2)?;
    parse_ground_size(line, tokens[1])
}

fn parse_family(
    rest: &[(usize, Vec<&str>)],
    at: &mut usize,
    keyword: &str,
    n: usize,
) -> Result<Vec<Subset>> {
    let mut family = Vec::new();
    while *at < rest.len() && rest[*at].1[0] == keyword {
        let (line, tokens) = &rest[*at];
        let mut elements = Vec::new();
        for token in &tokens[1..] {
            let e: usize = parse_number(*line, token, "element")?;
            if e >= n {
                return Err(Error::Parse {
                    line: *line,
                    message: format!("element {e} outside the {n}-element ground set"),
                });
            }
            elements.push(e);
        }
        family.push(Subset::from_elements(n, &elements));
        *at += 1;
    }
    Ok(family)
}

fn parse_ground_size(line: usize, token: &str) -> Result<usize> {
    let n: usize = parse_number(line, token, "ground size")?;
    if n > MAX_UNIVERSE {
        return Err(Error::Parse {
            line,
            message: format!("ground size {n} exceeds the {MAX_UNIVERSE}-element bound"),
        });
    }
    Ok(n)
}

fn parse_number(line: usize, token: &str, what: &str) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected {what}, found `{token}`"),
    })
}

fn expect_arity(line: usize, tokens: &[&str], arity: usize) -> Result<()> {
    if tokens.len() != arity {
        return Err(Error::Parse {
            line,
            message: format!(
                "`{}` takes {} argument(s), found {}",
                tokens[0],
                arity - 1,
                tokens.len() - 1
            ),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_uniform() {
        let m = parse_matroid("uniform 2 4\n").unwrap();
        assert_eq!(m.ground_size(), 4);
        assert_eq!(m.rank(&Subset::full(4)), 2);
    }

    #[test]
    fn parses_graphic_with_comments() {
        let text = "\
# the triangle
graphic 3
edge 0 1   # element 0
edge 1 2   # element 1
edge 2 0   # element 2
";
        let m = parse_matroid(text).unwrap();
        assert_eq!(m.ground_size(), 3);
        assert_eq!(m.rank(&Subset::full(3)), 2);
    }

    #[test]
    fn parses_bases_and_circuits() {
        let m = parse_matroid("bases 4\nbasis 0 1\nbasis 0 2\nbasis 0 3\nbasis 1 2\nbasis 1 3\n")
            .unwrap();
        assert_eq!(m.rank(&Subset::from_elements(4, &[2, 3])), 1);

        let m = parse_matroid("circuits 3\ncircuit 0 1 2\n").unwrap();
        assert_eq!(m.rank(&Subset::full(3)), 2);

        // No circuit lines: the free matroid.
        let m = parse_matroid("circuits 5\n").unwrap();
        assert!(m.is_free());
    }

    #[test]
    fn applies_trailing_minors_in_order() {
        let text = "graphic 4\nedge 0 1\nedge 1 2\nedge 2 3\nedge 3 0\ncontract 0\n";
        let m = parse_matroid(text).unwrap();
        assert_eq!(m.ground_size(), 3);
        assert_eq!(m.rank(&Subset::full(3)), 2); // C3

        let text = "uniform 2 5\ndelete 4\ndelete 0\n";
        let m = parse_matroid(text).unwrap();
        assert_eq!(m.ground_size(), 3);
    }

    #[test]
    fn error_lines_are_reported() {
        let cases = [
            ("", 1),
            ("frobnicate 3\n", 1),
            ("uniform 3 2\n", 1),
            ("uniform 2\n", 1),
            ("graphic 2\nedge 0 5\n", 2),
            ("uniform 2 4\ndelete 9\n", 2),
            ("uniform 2 4\nedge 0 1\n", 2),
            ("bases 4\nbasis 0 9\n", 2),
            ("uniform 2 400\n", 1),
            ("graphic 3\nedge 0 x\n", 2),
        ];
        for (text, line) in cases {
            match parse_matroid(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "input: {text:?}"),
                other => panic!("expected parse error for {text:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn invalid_families_are_rejected() {
        assert!(matches!(
            parse_matroid("bases 4\nbasis 0 1\nbasis 2 3\n"),
            Err(Error::InvalidBases(_))
        ));
        assert!(matches!(
            parse_matroid("bases 4\n"),
            Err(Error::InvalidBases(_))
        ));
        assert!(matches!(
            parse_matroid("circuits 3\ncircuit 0\ncircuit 0 1\n"),
            Err(Error::InvalidCircuits(_))
        ));
    }
}
