//! The SW data file format.
//!
//! UTF-8 text, fixed line order:
//!
//! ```text
//! rank <b>
//! torus <b integers>          (optional)
//! form                        (optional, followed by b rows of b integers)
//! class <b integers> coeff <nonzero integer>
//! ...
//! ```
//!
//! Terms are written sorted lexicographically by class vector, so output
//! is byte-stable and diffable.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::swcalc::{SWInvariant, TorusClass};

/// One SW data file: the invariant plus the optional torus class (with
/// its optional intersection form).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwData {
    pub sw: SWInvariant,
    pub torus: Option<TorusClass>,
}

impl SwData {
    /// Parses the schema above. Returns the data together with ingestion
    /// warnings (charge-symmetry violations are warned about, never
    /// rejected).
    pub fn parse(text: &str) -> Result<(SwData, Vec<String>)> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty())
            .peekable();

        let (lineno, rank_line) = lines
            .next()
            .ok_or_else(|| Error::Schema("empty file, expected 'rank <b>'".into()))?;
        let rank = parse_rank(lineno, rank_line)?;

        let mut torus_vector: Option<Vec<i64>> = None;
        if let Some(&(lineno, line)) = lines.peek() {
            if line.starts_with("torus") {
                lines.next();
                let fields = expect_keyword(lineno, line, "torus")?;
                torus_vector = Some(parse_vector(lineno, &fields, rank)?);
            }
        }

        let mut form: Option<Vec<Vec<i64>>> = None;
        if let Some(&(lineno, line)) = lines.peek() {
            if line == "form" {
                lines.next();
                let mut rows = Vec::with_capacity(rank);
                for _ in 0..rank {
                    let (lineno, line) = lines.next().ok_or_else(|| {
                        Error::Schema(format!("line {lineno}: form needs {rank} rows"))
                    })?;
                    rows.push(parse_vector(lineno, &tokens(line), rank)?);
                }
                form = Some(rows);
            } else if line.starts_with("form") {
                return Err(Error::Schema(format!(
                    "line {lineno}: 'form' takes no fields on its own line"
                )));
            }
        }

        let mut terms: Vec<(Vec<i64>, BigInt)> = Vec::new();
        for (lineno, line) in lines {
            let fields = expect_keyword(lineno, line, "class")?;
            if fields.len() != rank + 2 || fields[rank] != "coeff" {
                return Err(Error::Schema(format!(
                    "line {lineno}: expected 'class <{rank} integers> coeff <integer>'"
                )));
            }
            let class = parse_vector(lineno, &fields[..rank], rank)?;
            let coeff = BigInt::from_str(fields[rank + 1]).map_err(|_| {
                Error::Schema(format!(
                    "line {lineno}: bad coefficient '{}'",
                    fields[rank + 1]
                ))
            })?;
            if coeff.is_zero() {
                return Err(Error::Schema(format!("line {lineno}: zero coefficient")));
            }
            if terms.iter().any(|(c, _)| *c == class) {
                return Err(Error::Schema(format!("line {lineno}: duplicate class")));
            }
            terms.push((class, coeff));
        }

        let sw = SWInvariant::from_terms(rank, terms)?;
        let torus = match (torus_vector, form) {
            (Some(v), Some(q)) => Some(TorusClass::with_form(v, q)?),
            (Some(v), None) => Some(TorusClass::new(v)),
            (None, Some(_)) => {
                return Err(Error::Schema("form given without a torus vector".into()))
            }
            (None, None) => None,
        };

        let warnings = sw
            .symmetry_violations()
            .into_iter()
            .map(|class| {
                format!(
                    "basic classes are not symmetric under negation at class [{}]",
                    join(&class)
                )
            })
            .collect();

        Ok((SwData { sw, torus }, warnings))
    }

    pub fn read(path: &Path) -> Result<(SwData, Vec<String>)> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "rank {}", self.sw.rank()).unwrap();
        if let Some(torus) = &self.torus {
            writeln!(out, "torus {}", join(torus.vector())).unwrap();
            if let Some(form) = torus.form() {
                writeln!(out, "form").unwrap();
                for row in form {
                    writeln!(out, "{}", join(row)).unwrap();
                }
            }
        }
        for (class, coeff) in self.sw.terms() {
            writeln!(out, "class {} coeff {}", join(class), coeff).unwrap();
        }
        out
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.render())?;
        Ok(())
    }
}

fn tokens(line: &str) -> Vec<&str> {
    line.split_whitespace().collect()
}

fn expect_keyword<'a>(lineno: usize, line: &'a str, keyword: &str) -> Result<Vec<&'a str>> {
    let mut fields = tokens(line);
    if fields.first() != Some(&keyword) {
        return Err(Error::Schema(format!(
            "line {lineno}: expected '{keyword}', found '{}'",
            fields.first().unwrap_or(&"")
        )));
    }
    fields.remove(0);
    Ok(fields)
}

fn parse_rank(lineno: usize, line: &str) -> Result<usize> {
    let fields = expect_keyword(lineno, line, "rank")?;
    if fields.len() != 1 {
        return Err(Error::Schema(format!("line {lineno}: expected 'rank <b>'")));
    }
    fields[0]
        .parse()
        .map_err(|_| Error::Schema(format!("line {lineno}: bad rank '{}'", fields[0])))
}

fn parse_vector(lineno: usize, fields: &[&str], rank: usize) -> Result<Vec<i64>> {
    if fields.len() != rank {
        return Err(Error::Schema(format!(
            "line {lineno}: expected {rank} integers, found {}",
            fields.len()
        )));
    }
    fields
        .iter()
        .map(|f| {
            f.parse()
                .map_err(|_| Error::Schema(format!("line {lineno}: bad integer '{f}'")))
        })
        .collect()
}

fn join(v: &[i64]) -> String {
    v.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
