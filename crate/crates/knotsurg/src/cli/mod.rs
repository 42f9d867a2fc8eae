//! Implementations of the `knotsurg` subcommands, kept in the library so
//! they can be tested directly. Each returns the exact stdout text plus
//! any ingestion warnings; the binary routes warnings to stderr.

mod swfile;
mod table;

pub use swfile::SwData;
pub use table::{collisions, CollisionReport, KnotName, KnotTable};

use std::fmt::Write as _;
use std::path::Path;

use crate::alexander::alexander;
use crate::braid::Braid;
use crate::error::{Error, Result};
use crate::swcalc::{concordance_surgery, knot_surgery, sw_equal, Concordance};

#[derive(Debug, Default)]
pub struct CmdOutput {
    pub stdout: String,
    pub warnings: Vec<String>,
}

impl CmdOutput {
    fn new(stdout: String) -> Self {
        CmdOutput {
            stdout,
            warnings: Vec::new(),
        }
    }
}

/// `alex <braid>`: print the normalized Alexander polynomial.
pub fn cmd_alex(braid_text: &str) -> Result<CmdOutput> {
    let braid: Braid = braid_text.parse()?;
    let delta = alexander(&braid)?;
    Ok(CmdOutput::new(format!("{delta}\n")))
}

/// A knot argument is braid text when it looks like one (`B<n>: ...`),
/// otherwise a table name.
fn resolve_knot(knot: &str, table: &KnotTable) -> Result<Braid> {
    let trimmed = knot.trim();
    if trimmed.starts_with('B') && trimmed.contains(':') {
        return trimmed.parse();
    }
    table
        .get(trimmed)
        .cloned()
        .ok_or_else(|| Error::UnknownKnot(trimmed.to_owned()))
}

/// `surgery <sw-file> <knot> <output>`: multiply the invariant by the
/// knot's polynomial along the torus class stored in the file.
pub fn cmd_surgery(
    sw_path: &Path,
    knot: &str,
    output: &Path,
    table: Option<&KnotTable>,
) -> Result<CmdOutput> {
    let (data, warnings) = SwData::read(sw_path)?;
    let torus = data
        .torus
        .ok_or_else(|| Error::Schema("missing torus vector".into()))?;
    let braid = resolve_knot(knot, table.unwrap_or_else(|| KnotTable::bundled()))?;
    let delta = alexander(&braid)?;
    let result = knot_surgery(&data.sw, &torus, &delta)?;

    let mut stdout = String::new();
    writeln!(
        stdout,
        "support {} -> {}",
        data.sw.support_size(),
        result.support_size()
    )
    .unwrap();
    SwData {
        sw: result,
        torus: Some(torus),
    }
    .write(output)?;
    Ok(CmdOutput { stdout, warnings })
}

/// `compare <a> <b>`: DISTINCT when the invariants differ (the manifolds
/// cannot be diffeomorphic), INDISTINGUISHABLE when they agree (no
/// conclusion). Both verdicts exit 0.
pub fn cmd_compare(path_a: &Path, path_b: &Path) -> Result<CmdOutput> {
    let (a, mut warnings) = SwData::read(path_a)?;
    let (b, more) = SwData::read(path_b)?;
    warnings.extend(more);
    let verdict = if sw_equal(&a.sw, &b.sw)? {
        "INDISTINGUISHABLE"
    } else {
        "DISTINCT"
    };
    Ok(CmdOutput {
        stdout: format!("{verdict}\n"),
        warnings,
    })
}

/// `collisions <table> [--with-mirrors]`: group table entries by equal
/// Alexander polynomial and print the groups of size at least two.
pub fn cmd_collisions(table_path: &Path, with_mirrors: bool) -> Result<CmdOutput> {
    let table = KnotTable::load(table_path)?;
    let table = if with_mirrors {
        table.with_mirrors()?
    } else {
        table
    };
    let report = collisions(&table)?;
    Ok(CmdOutput::new(report.render()))
}

/// `concordance <sw-file> <braid> <product|slicesum> <output>`: apply one
/// of the two concordance actions of `K # -K` and report whether the
/// invariant moved.
pub fn cmd_concordance(
    sw_path: &Path,
    braid_text: &str,
    kind: Concordance,
    output: &Path,
) -> Result<CmdOutput> {
    let (data, warnings) = SwData::read(sw_path)?;
    let torus = data
        .torus
        .ok_or_else(|| Error::Schema("missing torus vector".into()))?;
    let braid: Braid = braid_text.parse()?;
    let result = concordance_surgery(&data.sw, &torus, &braid, kind)?;

    let verdict = if result == data.sw {
        "UNCHANGED"
    } else {
        "CHANGED"
    };
    SwData {
        sw: result,
        torus: Some(torus),
    }
    .write(output)?;
    Ok(CmdOutput {
        stdout: format!("{verdict}\n"),
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::fs;

    fn dir() -> tempfile::TempDir {
        tempfile::tempdir().unwrap()
    }

    #[test]
    fn alex_command() {
        assert_eq!(cmd_alex("B1:").unwrap().stdout, "1\n");
        assert_eq!(cmd_alex("B2: s1 s1 s1").unwrap().stdout, "t^1 - 1 + t^-1\n");
        assert!(matches!(
            cmd_alex("B2:"),
            Err(Error::NotAKnot { components: 2 })
        ));
        assert!(matches!(
            cmd_alex("B2: s3"),
            Err(Error::GeneratorIndex { .. })
        ));
    }

    #[test]
    fn surgery_command_writes_the_expected_file() {
        let tmp = dir();
        let input = tmp.path().join("in.sw");
        let output = tmp.path().join("out.sw");
        fs::write(&input, "rank 1\ntorus 1\nclass 0 coeff 1\n").unwrap();

        let out = cmd_surgery(&input, "trefoil", &output, None).unwrap();
        assert_eq!(out.stdout, "support 1 -> 3\n");
        assert_eq!(
            fs::read_to_string(&output).unwrap(),
            "rank 1\ntorus 1\nclass -2 coeff 1\nclass 0 coeff -1\nclass 2 coeff 1\n"
        );

        // braid text resolves the same way
        let output2 = tmp.path().join("out2.sw");
        cmd_surgery(&input, "B2: s1 s1 s1", &output2, None).unwrap();
        assert_eq!(
            fs::read_to_string(&output).unwrap(),
            fs::read_to_string(&output2).unwrap()
        );
    }

    #[test]
    fn surgery_by_the_unknot_preserves_bytes() {
        let tmp = dir();
        let input = tmp.path().join("in.sw");
        let output = tmp.path().join("out.sw");
        fs::write(&input, "rank 1\ntorus 1\nclass 0 coeff 1\n").unwrap();
        let out = cmd_surgery(&input, "unknot", &output, None).unwrap();
        assert_eq!(out.stdout, "support 1 -> 1\n");
        assert_eq!(
            fs::read_to_string(&output).unwrap(),
            fs::read_to_string(&input).unwrap()
        );
    }

    #[test]
    fn surgery_requires_torus_and_matching_rank() {
        let tmp = dir();
        let input = tmp.path().join("in.sw");
        let output = tmp.path().join("out.sw");
        fs::write(&input, "rank 1\nclass 0 coeff 1\n").unwrap();
        assert!(matches!(
            cmd_surgery(&input, "trefoil", &output, None),
            Err(Error::Schema(_))
        ));

        fs::write(&input, "rank 2\ntorus 1 0\nclass 0 coeff 1\n").unwrap();
        assert!(matches!(
            cmd_surgery(&input, "trefoil", &output, None),
            Err(Error::Schema(_))
        ));
    }

    #[test]
    fn unknown_knot_name() {
        let tmp = dir();
        let input = tmp.path().join("in.sw");
        fs::write(&input, "rank 1\ntorus 1\nclass 0 coeff 1\n").unwrap();
        assert!(matches!(
            cmd_surgery(&input, "nonexistent", &tmp.path().join("o"), None),
            Err(Error::UnknownKnot(_))
        ));
    }

    #[test]
    fn compare_command() {
        let tmp = dir();
        let a = tmp.path().join("a.sw");
        let b = tmp.path().join("b.sw");
        fs::write(&a, "rank 1\ntorus 1\nclass 0 coeff 1\n").unwrap();
        fs::write(
            &b,
            "rank 1\nclass -2 coeff 1\nclass 0 coeff -1\nclass 2 coeff 1\n",
        )
        .unwrap();
        assert_eq!(cmd_compare(&a, &a).unwrap().stdout, "INDISTINGUISHABLE\n");
        assert_eq!(cmd_compare(&a, &b).unwrap().stdout, "DISTINCT\n");

        let c = tmp.path().join("c.sw");
        fs::write(&c, "rank 2\nclass 0 0 coeff 1\n").unwrap();
        assert!(matches!(
            cmd_compare(&a, &c),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn concordance_command() {
        let tmp = dir();
        let input = tmp.path().join("in.sw");
        let output = tmp.path().join("out.sw");
        fs::write(&input, "rank 1\ntorus 1\nclass 0 coeff 1\n").unwrap();

        let out = cmd_concordance(&input, "B2: s1 s1 s1", Concordance::SliceSum, &output).unwrap();
        assert_eq!(out.stdout, "UNCHANGED\n");
        assert_eq!(
            fs::read_to_string(&output).unwrap(),
            fs::read_to_string(&input).unwrap()
        );

        let out = cmd_concordance(&input, "B2: s1 s1 s1", Concordance::Product, &output).unwrap();
        assert_eq!(out.stdout, "CHANGED\n");
        assert_eq!(
            fs::read_to_string(&output).unwrap(),
            "rank 1\ntorus 1\nclass -4 coeff 1\nclass -2 coeff -2\nclass 0 coeff 3\nclass 2 coeff -2\nclass 4 coeff 1\n"
        );

        let out = cmd_concordance(&input, "B1:", Concordance::Product, &output).unwrap();
        assert_eq!(out.stdout, "UNCHANGED\n");
    }

    #[test]
    fn collisions_command() {
        let tmp = dir();
        let table = tmp.path().join("knots.tsv");
        fs::write(
            &table,
            "trefoil\tB2: s1 s1 s1\nfigure-eight\tB3: s1 s2^-1 s1 s2^-1\n",
        )
        .unwrap();
        assert_eq!(cmd_collisions(&table, false).unwrap().stdout, "");

        fs::write(&table, "trefoil\tB2: s1 s1 s1\n").unwrap();
        assert_eq!(
            cmd_collisions(&table, true).unwrap().stdout,
            "t^1 - 1 + t^-1: trefoil trefoil-mr\n"
        );
    }

    #[test]
    fn warnings_flow_through() {
        let tmp = dir();
        let input = tmp.path().join("in.sw");
        fs::write(&input, "rank 1\ntorus 1\nclass 2 coeff 1\n").unwrap();
        let out = cmd_surgery(&input, "unknot", &tmp.path().join("o.sw"), None).unwrap();
        assert_eq!(out.warnings.len(), 1);
    }
}
