//! The line-oriented PCS text format.
//!
//! ```text
//! pcs 1
//! cube <name> <dim>
//! face <name> <i> <-|+> <target>
//! ```
//!
//! `#` starts a comment. Cubes may be declared in any order; a face line
//! sets `∂_i^α name = target` with `i` 1-based and `-` for `α = 0`.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use crate::error::PcsError;
use crate::pcs::{PcsBuilder, PrecubicalSet, Sign, Violation};

pub const HEADER: &str = "pcs 1";

/// One located problem; `column` is 1-based and 0 when it covers the line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else if self.column == 0 {
            write!(f, "{}: {}", self.line, self.message)
        } else {
            write!(f, "{}:{}: {}", self.line, self.column, self.message)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub diagnostics: Vec<Diagnostic>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, d) in self.diagnostics.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let body = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (k, (byte, ch)) in body.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((byte, k)),
            (true, Some((b, col))) => {
                out.push(Token { text: &body[b..byte], column: col + 1 });
                start = None;
            }
            _ => {}
        }
    }
    if let Some((b, col)) = start {
        out.push(Token { text: &body[b..], column: col + 1 });
    }
    out
}

struct FaceLine<'a> {
    line: usize,
    toks: Vec<Token<'a>>,
}

/// Parses and validates a PCS document.
pub fn parse_pcs(text: &str) -> Result<PrecubicalSet, ParseError> {
    let mut diags = Vec::new();
    let mut err = |line: usize, column: usize, message: String| diags.push(Diagnostic { line, column, message });
    let mut builder = PcsBuilder::new();
    let mut cube_lines: HashMap<String, usize> = HashMap::new();
    let mut face_lines = Vec::new();
    let mut header = false;

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let toks = tokens(raw);
        let Some(first) = toks.first() else { continue };
        if !header {
            if toks.len() == 2 && first.text == "pcs" && toks[1].text == "1" {
                header = true;
                continue;
            }
            err(line, first.column, format!("expected header {HEADER:?}"));
            return Err(ParseError { diagnostics: diags });
        }
        match first.text {
            "cube" => {
                if toks.len() != 3 {
                    err(line, first.column, format!("expected `cube <name> <dim>`, found {} fields", toks.len()));
                    continue;
                }
                let Ok(dim) = toks[2].text.parse::<usize>() else {
                    err(line, toks[2].column, format!("invalid dimension {:?}", toks[2].text));
                    continue;
                };
                match builder.add_cube(toks[1].text, dim) {
                    Ok(()) => {
                        cube_lines.insert(toks[1].text.to_string(), line);
                    }
                    Err(PcsError::DuplicateName(n)) => err(
                        line,
                        toks[1].column,
                        format!("duplicate cube {n:?} (first declared on line {})", cube_lines[&n]),
                    ),
                    Err(e) => err(line, toks[1].column, e.to_string()),
                }
            }
            "face" => face_lines.push(FaceLine { line, toks }),
            "pcs" => err(line, first.column, "repeated header".into()),
            other => err(line, first.column, format!("unknown directive {other:?}")),
        }
    }
    if !header {
        err(1, 0, format!("missing header {HEADER:?}"));
        return Err(ParseError { diagnostics: diags });
    }

    let mut face_at: HashMap<(String, usize, Sign), usize> = HashMap::new();
    for FaceLine { line, toks } in face_lines {
        if toks.len() != 5 {
            err(
                line,
                toks[0].column,
                format!("expected `face <name> <i> <-|+> <target>`, found {} fields", toks.len()),
            );
            continue;
        }
        let (cube, index, sign, target) = (&toks[1], &toks[2], &toks[3], &toks[4]);
        let Ok(i) = index.text.parse::<usize>() else {
            err(line, index.column, format!("invalid face index {:?}", index.text));
            continue;
        };
        let s = match sign.text {
            "-" => Sign::Minus,
            "+" => Sign::Plus,
            other => {
                err(line, sign.column, format!("expected '-' or '+', found {other:?}"));
                continue;
            }
        };
        match builder.set_face(cube.text, i, s, target.text) {
            Ok(()) => {
                face_at.insert((cube.text.to_string(), i, s), line);
            }
            Err(PcsError::UnknownCube(n)) => {
                let col = if n == cube.text { cube.column } else { target.column };
                err(line, col, format!("unknown cube {n:?}"));
            }
            Err(PcsError::FaceIndexOutOfRange { cube: c, index, dim }) => {
                err(line, toks[2].column, format!("face index {index} out of range for {c:?} of dimension {dim}"))
            }
            Err(PcsError::DuplicateFace { cube: c, index, sign }) => err(
                line,
                toks[1].column,
                format!(
                    "face {index} {sign} of {c:?} declared twice (first on line {})",
                    face_at[&(c.clone(), index, sign)]
                ),
            ),
            Err(e) => err(line, 0, e.to_string()),
        }
    }
    if !diags.is_empty() {
        return Err(ParseError { diagnostics: diags });
    }

    let violations = builder.validate();
    if !violations.is_empty() {
        let diagnostics = violations
            .iter()
            .map(|v| {
                let line = match v {
                    Violation::DimensionMismatch { cube, index, sign, .. } => face_at[&(cube.clone(), *index, *sign)],
                    other => cube_lines[other.cube()],
                };
                Diagnostic { line, column: 0, message: v.to_string() }
            })
            .collect();
        return Err(ParseError { diagnostics });
    }
    Ok(builder.build().expect("validated above"))
}

/// Canonical text: header, cubes in `(dim, name)` order, then their faces.
pub fn emit_pcs(k: &PrecubicalSet) -> String {
    let mut out = String::new();
    writeln!(out, "{HEADER}").unwrap();
    for c in k.cubes() {
        writeln!(out, "cube {} {}", c.name, c.dim).unwrap();
    }
    for c in k.ids() {
        for i in 1..=k.dim_of(c) {
            for s in Sign::BOTH {
                writeln!(out, "face {} {} {} {}", k.name(c), i, s, k.name(k.face(c, i, s))).unwrap();
            }
        }
    }
    out
}
