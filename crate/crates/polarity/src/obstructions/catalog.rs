//! The obstruction catalog: a text file with one graph per line,
//! `name classes family graph6 figure`, plus the checks that certify it.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::GraphClass;
use crate::canon::canonical_form;
use crate::decomposition::classify;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{is_minimal_obstruction, SKBound, Target};

const BUILTIN: &str = include_str!("../../data/catalog.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub classes: Vec<GraphClass>,
    /// `(2,2)` or `(2,1)`.
    pub family: SKBound,
    pub g6: String,
    pub figure: String,
    pub graph: Graph,
}

impl CatalogEntry {
    pub fn in_class(&self, c: GraphClass) -> bool {
        self.classes.contains(&c)
    }

    pub fn to_line(&self) -> String {
        let classes: Vec<&str> = self.classes.iter().map(|c| c.name()).collect();
        format!("{} {} {} {} {}", self.name, classes.join(","), self.family, self.g6, self.figure)
    }
}

#[derive(Clone, Debug, Default)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// The catalog shipped with the crate.
    pub fn builtin() -> &'static Catalog {
        static CAT: std::sync::OnceLock<Catalog> = std::sync::OnceLock::new();
        CAT.get_or_init(|| Catalog::parse(BUILTIN).expect("shipped catalog parses"))
    }

    pub fn parse(text: &str) -> Result<Catalog> {
        let mut entries = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |msg: &str| Error::Invalid(format!("catalog line {}: {msg}", i + 1));
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 5 {
                return Err(bad("expected `name classes family graph6 figure`"));
            }
            let classes = f[1].split(',').map(str::parse).collect::<Result<Vec<GraphClass>>>()?;
            let graph = Graph::parse_graph6(f[3]).map_err(|e| bad(&e.to_string()))?;
            entries.push(CatalogEntry {
                name: f[0].to_string(),
                classes,
                family: f[2].parse()?,
                g6: f[3].to_string(),
                figure: f[4].to_string(),
                graph,
            });
        }
        Ok(Catalog { entries })
    }

    pub fn to_text(&self) -> String {
        self.entries.iter().map(|e| e.to_line() + "\n").collect()
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Entries of one family within one class, smallest order first.
    pub fn members(&self, class: GraphClass, family: SKBound) -> Vec<&CatalogEntry> {
        let mut v: Vec<&CatalogEntry> =
            self.entries.iter().filter(|e| e.family == family && e.in_class(class)).collect();
        v.sort_by_key(|e| e.graph.n());
        v
    }
}

#[derive(Clone, Debug)]
pub struct EntryStatus {
    pub name: String,
    pub problems: Vec<String>,
}

impl EntryStatus {
    pub fn ok(&self) -> bool {
        self.problems.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct CatalogReport {
    pub family: SKBound,
    pub entries: Vec<EntryStatus>,
    /// Distinct isomorphism classes per class tag.
    pub sparse_count: usize,
    pub extendible_count: usize,
    pub expected: (usize, usize),
}

impl CatalogReport {
    pub fn ok(&self) -> bool {
        self.entries.iter().all(EntryStatus::ok) && (self.sparse_count, self.extendible_count) == self.expected
    }
}

/// Expected `(P4-sparse, P4-extendible)` counts for a family.
pub fn expected_counts(family: SKBound) -> Option<(usize, usize)> {
    if family == SKBound::TWO_POLAR {
        Some((50, 82))
    } else if family == SKBound::TWO_ONE {
        Some((9, 13))
    } else {
        None
    }
}

fn check_entry(e: &CatalogEntry) -> EntryStatus {
    let mut problems = Vec::new();
    let g = &e.graph;
    let orders = if e.family == SKBound::TWO_POLAR { 7..=9 } else { 5..=7 };
    if !orders.contains(&g.n()) {
        problems.push(format!("order {} outside {orders:?}", g.n()));
    }
    match is_minimal_obstruction(g, Target::Polar(e.family)) {
        Ok(true) => {}
        Ok(false) => problems.push(format!("not a minimal ({}) obstruction", e.family)),
        Err(err) => problems.push(err.to_string()),
    }
    let r = classify(g);
    for c in GraphClass::ALL {
        if c.holds(&r) != e.in_class(c) {
            let is = if c.holds(&r) { "is" } else { "is not" };
            problems.push(format!("{is} {c}, contrary to its tag"));
        }
    }
    EntryStatus { name: e.name.clone(), problems }
}

/// Certify every entry of `family`: order bounds, minimality, class tags,
/// and the number of distinct graphs per class.
pub fn verify_catalog(cat: &Catalog, family: SKBound) -> Result<CatalogReport> {
    let expected = expected_counts(family)
        .ok_or_else(|| Error::Invalid(format!("no catalog family {family}; use 2,2 or 2,1")))?;
    let chosen: Vec<&CatalogEntry> = cat.entries.iter().filter(|e| e.family == family).collect();
    let entries: Vec<EntryStatus> = chosen.par_iter().map(|e| check_entry(e)).collect();
    let count = |c: GraphClass| -> Result<usize> {
        let mut forms = BTreeSet::new();
        for e in chosen.iter().filter(|e| e.in_class(c)) {
            forms.insert(canonical_form(&e.graph)?);
        }
        Ok(forms.len())
    };
    Ok(CatalogReport {
        family,
        entries,
        sparse_count: count(GraphClass::P4Sparse)?,
        extendible_count: count(GraphClass::P4Extendible)?,
        expected,
    })
}

/// Names of P4-sparse (2,2) entries that are not cographs.
pub fn cograph_check(cat: &Catalog) -> Vec<String> {
    cat.members(GraphClass::P4Sparse, SKBound::TWO_POLAR)
        .into_iter()
        .filter(|e| !classify(&e.graph).is_cograph)
        .map(|e| e.name.clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_round_trips() {
        let cat = Catalog::builtin();
        assert_eq!(cat.entries.len(), 82 + 13);
        let again = Catalog::parse(&cat.to_text()).unwrap();
        assert_eq!(again.entries, cat.entries);
        for e in &cat.entries {
            assert_eq!(e.graph.to_graph6(), e.g6);
        }
    }

    #[test]
    fn bad_lines_are_rejected() {
        assert!(Catalog::parse("F1 p4-sparse 2,2 FGC?G").is_err());
        assert!(Catalog::parse("F1 cograph 2,2 FGC?G x").is_err());
        assert!(Catalog::parse("F1 p4-sparse 2,2 !!! x").is_err());
    }
}
