//! Replays the forbidden-subgraph table: for each catalog graph `F`, the largest over
//! anchor sets of the least path length (and clique size) at which
//! `det(50A + 101I)` of the extension turns negative.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::rational::rat;
use crate::exact::{count_eigs_below, BorderedBareiss};
use crate::extension::{anchor_subsets, clique_extension, path_extension};
use crate::graph::{parse_compact, SignedGraph, SignedVertexSubset};
use crate::line::roots::{root_representation, RootSystem};

/// Numerator and denominator of the threshold `101/50`.
const SHIFT_NUM: i64 = 101;
const SHIFT_DEN: i64 = 50;

pub const DEFAULT_CAP: usize = 64;

/// A labelled catalog graph (`G1`…`G31`, `S32`…`S49`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub label: String,
    pub graph: SignedGraph,
}

/// Parses the table input: a count line, then `label digits[-digits]` per entry.
pub fn parse_input(text: &str) -> Result<Vec<CatalogEntry>> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let Some((i0, first)) = lines.next() else {
        return Err(Error::parse(1, "missing entry count"));
    };
    let count: usize = first.trim().parse().map_err(|_| Error::parse(i0 + 1, "entry count must be an integer"))?;
    let mut out = Vec::new();
    for (i, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [label, edges] = toks[..] else {
            return Err(Error::parse(i + 1, "expected `label edges`"));
        };
        let valid = label.len() > 1
            && matches!(label.as_bytes()[0], b'G' | b'S')
            && label[1..].bytes().all(|b| b.is_ascii_digit());
        if !valid {
            return Err(Error::parse(i + 1, format!("bad label {label:?}")));
        }
        let graph = parse_compact(edges).map_err(|e| match e {
            Error::Parse { msg, .. } => Error::parse(i + 1, msg),
            other => other,
        })?;
        out.push(CatalogEntry { label: label.to_string(), graph });
    }
    if out.len() != count {
        return Err(Error::CountMismatch { expected: count, got: out.len() });
    }
    Ok(out)
}

/// One output row: `y` and `z` as printed (`-1` when `F` itself already fails).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub label: String,
    pub y: String,
    pub z: String,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.label, self.y, self.z)
    }
}

/// Caps on the path length and clique size searched per anchor set.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub ell: usize,
    pub m: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { ell: DEFAULT_CAP, m: DEFAULT_CAP }
    }
}

/// Per-anchor stopping values, kept for replay and cross-checks.
#[derive(Clone, Debug)]
pub struct AnchorRecord {
    pub anchor: SignedVertexSubset,
    /// least `ℓ ≥ 0` with negative determinant, `None` when skipped
    pub ell: Option<usize>,
    /// least `m ≥ 1` with negative determinant
    pub m: usize,
}

#[derive(Clone, Debug)]
pub struct Detail {
    pub verdict: Verdict,
    pub records: Vec<AnchorRecord>,
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

/// Leading-minor state of `50A + 101I` for `F`; `None` if some minor is non-positive.
fn scaled_prefix(f: &SignedGraph) -> Option<BorderedBareiss> {
    let mut bb = BorderedBareiss::new();
    for i in 0..f.order() {
        let mut row: Vec<BigInt> = (0..i).map(|j| big(SHIFT_DEN * f.sign(i, j) as i64)).collect();
        row.push(big(SHIFT_NUM));
        if !bb.push(row).is_positive() {
            return None;
        }
    }
    Some(bb)
}

/// The row of a vertex joined to the anchors, padded with zeros up to `len` entries, then
/// followed by `tail` and the diagonal.
fn anchor_row(n: usize, a: &SignedVertexSubset, tail: impl IntoIterator<Item = i64>) -> Vec<BigInt> {
    let mut row = vec![BigInt::from(0); n];
    for (u, s) in a.iter() {
        row[u] = big(SHIFT_DEN * s.to_i8() as i64);
    }
    row.extend(tail.into_iter().map(big));
    row.push(big(SHIFT_NUM));
    row
}

fn least_ell(prefix: &BorderedBareiss, n: usize, a: &SignedVertexSubset, cap: usize, label: &str) -> Result<usize> {
    let mut bb = prefix.clone();
    if bb.push(anchor_row(n, a, [])).is_negative() {
        return Ok(0);
    }
    for ell in 1..=cap {
        // v_ℓ is adjacent only to v_{ℓ−1}
        let mut row = vec![BigInt::from(0); n + ell];
        row[n + ell - 1] = big(SHIFT_DEN);
        row.push(big(SHIFT_NUM));
        if bb.push(row).is_negative() {
            return Ok(ell);
        }
    }
    Err(Error::NonTermination { label: format!("{label} path extension at {a}"), cap })
}

fn least_m(prefix: &BorderedBareiss, n: usize, a: &SignedVertexSubset, cap: usize, label: &str) -> Result<usize> {
    let mut bb = prefix.clone();
    for m in 1..=cap {
        if bb.push(anchor_row(n, a, std::iter::repeat(SHIFT_DEN).take(m - 1))).is_negative() {
            return Ok(m);
        }
    }
    Err(Error::NonTermination { label: format!("{label} clique extension at {a}"), cap })
}

/// Anchors whose path search is skipped for `G23`: the singletons at vertices 1 and 2.
fn skipped(label: &str, a: &SignedVertexSubset) -> bool {
    label == "G23" && a.len() == 1 && a.iter().all(|(v, _)| v == 1 || v == 2)
}

/// Computes one output row together with the per-anchor stopping values.
pub fn verify_detail(entry: &CatalogEntry, caps: Caps) -> Result<Detail> {
    let f = &entry.graph;
    let n = f.order();
    let Some(prefix) = scaled_prefix(f) else {
        let verdict = Verdict { label: entry.label.clone(), y: "-1".into(), z: "-1".into() };
        return Ok(Detail { verdict, records: Vec::new() });
    };
    let mut records = Vec::new();
    for a in anchor_subsets(n, true) {
        let ell = if skipped(&entry.label, &a) { None } else { Some(least_ell(&prefix, n, &a, caps.ell, &entry.label)?) };
        let m = least_m(&prefix, n, &a, caps.m, &entry.label)?;
        records.push(AnchorRecord { anchor: a, ell, m });
    }
    let y = records.iter().filter_map(|r| r.ell).max().unwrap_or(0);
    let z = records.iter().map(|r| r.m).max().unwrap_or(0);
    let star = if records.iter().any(|r| r.ell.is_none()) { "*" } else { "" };
    let verdict = Verdict { label: entry.label.clone(), y: format!("{y}{star}"), z: z.to_string() };
    Ok(Detail { verdict, records })
}

pub fn verify_one(entry: &CatalogEntry) -> Result<Verdict> {
    Ok(verify_detail(entry, Caps::default())?.verdict)
}

/// Verifies every entry (in parallel) and renders the output table in input order.
pub fn verify_all(input: &str) -> Result<String> {
    let entries = parse_input(input)?;
    let rows = verify_entries(&entries, Caps::default(), false)?;
    Ok(render(&rows))
}

pub fn render(rows: &[Verdict]) -> String {
    rows.iter().map(|v| format!("{v}\n")).collect()
}

/// Verifies the entries in parallel; with `cross_check`, every stopping value is also
/// confirmed by Sturm eigenvalue counting.
pub fn verify_entries(entries: &[CatalogEntry], caps: Caps, cross_check: bool) -> Result<Vec<Verdict>> {
    entries
        .par_iter()
        .map(|e| {
            let d = verify_detail(e, caps)?;
            if cross_check {
                cross_check_detail(e, &d)?;
            }
            Ok(d.verdict)
        })
        .collect()
}

/// Whether `λ₁(G) < −101/50`, by Sturm counting on the characteristic polynomial.
fn below_threshold(g: &SignedGraph) -> bool {
    count_eigs_below(&g.adjacency(), &rat(-SHIFT_NUM, SHIFT_DEN)) >= 1
}

/// Confirms each recorded stopping value: the smallest eigenvalue is below `−101/50` at
/// the stopping value and not below it one step earlier.
pub fn cross_check_detail(entry: &CatalogEntry, d: &Detail) -> Result<()> {
    let f = &entry.graph;
    let fail = |what: String| Err(Error::CrossCheck(format!("{}: {what}", entry.label)));
    if d.records.is_empty() {
        if !below_threshold(f) {
            return fail("reported -1 -1 but the smallest eigenvalue is not below -101/50".into());
        }
        return Ok(());
    }
    if below_threshold(f) {
        return fail("smallest eigenvalue already below -101/50".into());
    }
    for r in &d.records {
        if let Some(ell) = r.ell {
            if !below_threshold(&path_extension(f, &r.anchor, ell)?) {
                return fail(format!("path extension at {} with length {ell} is not below threshold", r.anchor));
            }
            if ell > 0 && below_threshold(&path_extension(f, &r.anchor, ell - 1)?) {
                return fail(format!("path extension at {} already below threshold at length {}", r.anchor, ell - 1));
            }
        }
        if !below_threshold(&clique_extension(f, &r.anchor, r.m)?) {
            return fail(format!("clique extension at {} with size {} is not below threshold", r.anchor, r.m));
        }
        if r.m > 1 && below_threshold(&clique_extension(f, &r.anchor, r.m - 1)?) {
            return fail(format!("clique extension at {} already below threshold at size {}", r.anchor, r.m - 1));
        }
    }
    Ok(())
}

/// Minimal non-representability in `D_n`: `F` itself has no representation but every
/// single-vertex deletion has one.
pub fn check_minimality(entry: &CatalogEntry, budget: u64) -> Result<bool> {
    let g = &entry.graph;
    if root_representation(g, RootSystem::d_for(g), budget)?.is_some() {
        return Ok(false);
    }
    for v in 0..g.order() {
        let h = g.remove_vertex(v);
        if root_representation(&h, RootSystem::d_for(&h), budget)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The bundled table input and expected output.
pub const TABLE_INPUT: &str = include_str!("../data/appendix_input.txt");
pub const TABLE_OUTPUT: &str = include_str!("../data/appendix_output.txt");

/// Line-by-line comparison with whitespace normalized; returns the first mismatching row.
pub fn compare_tables(got: &str, expected: &str) -> std::result::Result<(), (usize, String, String)> {
    let norm = |s: &str| -> Vec<String> {
        s.lines().map(|l| l.split_whitespace().collect::<Vec<_>>().join(" ")).filter(|l| !l.is_empty()).collect()
    };
    let (g, e) = (norm(got), norm(expected));
    for i in 0..g.len().max(e.len()) {
        let (a, b) = (g.get(i).cloned().unwrap_or_default(), e.get(i).cloned().unwrap_or_default());
        if a != b {
            return Err((i + 1, a, b));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(text: &str) -> CatalogEntry {
        parse_input(&format!("1\n{text}")).unwrap().remove(0)
    }

    #[test]
    fn parsing() {
        let e = entry("G23 0514233545");
        assert_eq!(e.graph.order(), 6);
        assert_eq!(e.graph.edge_count(), 5);
        let s = entry("S32 031323-12");
        assert_eq!(s.graph.sign(1, 2), -1);
        assert_eq!(s.graph.sign(0, 3), 1);
        assert!(parse_input("0\n").unwrap().is_empty());
        assert!(matches!(parse_input("2\nG1 01"), Err(Error::CountMismatch { expected: 2, got: 1 })));
        assert!(matches!(parse_input("1\nX1 01"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_input("1\nG1 0a"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn table_rows() {
        let rows = parse_input(TABLE_INPUT).unwrap();
        let get = |l: &str| rows.iter().find(|e| e.label == l).unwrap().clone();
        assert_eq!(verify_one(&get("G10")).unwrap().to_string(), "G10 -1 -1");
        assert_eq!(verify_one(&get("G1")).unwrap().to_string(), "G1 7 6");
        assert_eq!(verify_one(&get("G23")).unwrap().to_string(), "G23 8* 7");
    }

    #[test]
    fn cap_is_reported() {
        let rows = parse_input(TABLE_INPUT).unwrap();
        let g1 = rows.iter().find(|e| e.label == "G1").unwrap();
        let err = verify_detail(g1, Caps { ell: 3, m: 64 }).unwrap_err();
        assert!(matches!(err, Error::NonTermination { cap: 3, .. }));
    }

    #[test]
    fn minimality_of_star() {
        let e = entry("G10 0515253545");
        assert!(check_minimality(&e, 1 << 20).unwrap());
        let path = entry("G99 0112");
        assert!(!check_minimality(&path, 1 << 20).unwrap());
    }

    #[test]
    fn compare() {
        assert!(compare_tables("A 1  2\n", "A 1 2").is_ok());
        assert_eq!(compare_tables("A 1 2", "A 1 3"), Err((1, "A 1 2".into(), "A 1 3".into())));
    }
}
