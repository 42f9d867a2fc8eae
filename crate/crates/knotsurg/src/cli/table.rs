//! Knot tables and the Alexander-collision report.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::sync::OnceLock;

use crate::alexander::{alexander, AlexanderPolynomial};
use crate::braid::Braid;
use crate::error::{Error, Result};

/// Identifier of a table entry. Nonempty, printable, and tab-free so the
/// table file format stays unambiguous.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KnotName(String);

impl KnotName {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if name.is_empty() {
            return Err(Error::Table("empty knot name".into()));
        }
        if name
            .chars()
            .any(|c| c == '\t' || c == '\n' || c.is_control())
        {
            return Err(Error::Table(format!(
                "knot name '{}' contains control characters",
                name.escape_debug()
            )));
        }
        Ok(KnotName(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for KnotName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// An ordered list of named knot braids. Names are unique and every entry
/// closes to a knot; both are validated on load.
#[derive(Debug, Clone)]
pub struct KnotTable {
    entries: Vec<(KnotName, Braid)>,
}

static BUNDLED: OnceLock<KnotTable> = OnceLock::new();

impl KnotTable {
    pub fn new(entries: Vec<(KnotName, Braid)>) -> Result<Self> {
        let mut seen = HashMap::new();
        for (name, braid) in &entries {
            if seen.insert(name.as_str().to_owned(), ()).is_some() {
                return Err(Error::Table(format!("duplicate knot name '{name}'")));
            }
            let components = braid.closure_components();
            if components != 1 {
                return Err(Error::Table(format!(
                    "entry '{name}': closure has {components} components, expected a knot"
                )));
            }
        }
        Ok(KnotTable { entries })
    }

    /// Parses the plain-text table format: one `name<TAB>braid` entry per
    /// line, `#` comment lines and blank lines ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim_end();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (name, braid_text) = line.split_once('\t').ok_or_else(|| {
                Error::Table(format!("line {}: expected 'name<TAB>braid'", lineno + 1))
            })?;
            let name = KnotName::new(name)?;
            let braid: Braid = braid_text
                .parse()
                .map_err(|e| Error::Table(format!("entry '{name}': {e}")))?;
            entries.push((name, braid));
        }
        KnotTable::new(entries)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// The table shipped with the crate: unknot, trefoil, figure-eight,
    /// cinquefoil, and the granny and square connected sums.
    pub fn bundled() -> &'static KnotTable {
        BUNDLED.get_or_init(|| {
            KnotTable::parse(include_str!("../../data/knots.tsv"))
                .expect("bundled knot table is valid")
        })
    }

    pub fn entries(&self) -> &[(KnotName, Braid)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&Braid> {
        self.entries
            .iter()
            .find(|(n, _)| n.as_str() == name)
            .map(|(_, b)| b)
    }

    /// Augments every entry with its reversed mirror under the name
    /// `<name>-mr`, so each knot is paired with its concordance inverse.
    pub fn with_mirrors(&self) -> Result<KnotTable> {
        let mut entries = self.entries.clone();
        for (name, braid) in &self.entries {
            entries.push((
                KnotName::new(format!("{name}-mr"))?,
                braid.concordance_inverse(),
            ));
        }
        KnotTable::new(entries)
    }
}

/// Groups of table entries sharing one Alexander polynomial exactly; the
/// knots the surgery formula cannot tell apart.
#[derive(Debug, Clone)]
pub struct CollisionReport {
    groups: Vec<(AlexanderPolynomial, Vec<KnotName>)>,
}

impl CollisionReport {
    pub fn groups(&self) -> &[(AlexanderPolynomial, Vec<KnotName>)] {
        &self.groups
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    /// One line per group: the polynomial, a colon, then the members in
    /// table order.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (poly, names) in &self.groups {
            out.push_str(&poly.to_string());
            out.push(':');
            for name in names {
                out.push(' ');
                out.push_str(name.as_str());
            }
            out.push('\n');
        }
        out
    }
}

/// Computes the polynomial of every entry and keeps the groups of size at
/// least two, sorted by polynomial rendering for deterministic output.
pub fn collisions(table: &KnotTable) -> Result<CollisionReport> {
    let mut by_poly: HashMap<AlexanderPolynomial, Vec<KnotName>> = HashMap::new();
    let mut order: Vec<AlexanderPolynomial> = Vec::new();
    for (name, braid) in table.entries() {
        let poly = alexander(braid).map_err(|e| match e {
            Error::Internal(_) | Error::InexactDivision => e,
            other => Error::Table(format!("entry '{name}': {other}")),
        })?;
        if !by_poly.contains_key(&poly) {
            order.push(poly.clone());
        }
        by_poly.entry(poly).or_default().push(name.clone());
    }
    let mut groups: Vec<(AlexanderPolynomial, Vec<KnotName>)> = order
        .into_iter()
        .filter_map(|poly| {
            let names = by_poly.remove(&poly).unwrap();
            (names.len() >= 2).then_some((poly, names))
        })
        .collect();
    groups.sort_by_key(|(poly, _)| poly.to_string());
    Ok(CollisionReport { groups })
}
