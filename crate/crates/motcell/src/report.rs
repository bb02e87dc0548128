//! Documents emitted by the command line: cell reports, group strata and
//! Hasse diagrams, in text, JSON or DOT.

use std::collections::BTreeMap;
use std::fmt::Write;

use motcell_core::motive::GroupStrata;
use motcell_core::{
    cofiber_ledger, motivic_decomposition, poincare_polynomial, qplus_report, sa1_homology_report,
    CellDecomposition, CofiberLedger, HasseDiagram, MotivicDecomposition,
};
use serde::Serialize;

/// The top-level JSON object of every cell computation.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub space: String,
    pub cells: CellDecomposition,
    pub poincare: Vec<i64>,
    pub motive: MotivicDecomposition,
    pub ledger: CofiberLedger,
    pub cocharacter: Vec<i64>,
}

impl Report {
    /// Report with the ledger of the cell filtration itself.
    pub fn from_cells(cells: CellDecomposition) -> Self {
        let ledger = cofiber_ledger(&cells);
        Self::with_ledger(cells, ledger)
    }

    pub fn with_ledger(cells: CellDecomposition, ledger: CofiberLedger) -> Self {
        Report {
            space: cells.space_name.clone(),
            poincare: poincare_polynomial(&cells),
            motive: motivic_decomposition(&cells),
            cocharacter: cells.cocharacter_used.clone(),
            ledger,
            cells,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "space: {} (dimension {})", self.space, self.cells.ambient_dimension);
        let _ = writeln!(out, "cocharacter: {}", tuple(&self.cocharacter));
        let _ = writeln!(out, "cells: {}", self.cells.len());
        let width = self.cells.cells.iter().map(|c| c.fixed_point.chars().count()).max().unwrap_or(0);
        for c in &self.cells.cells {
            let signs: String = c.weight_signs.iter().map(|s| s.as_char()).collect();
            let _ = writeln!(
                out,
                "  {:>3}  {:<width$}  A^{:<3} {}",
                c.index, c.fixed_point, c.dimension, signs
            );
        }
        let _ = writeln!(out, "poincare: {}", polynomial(&self.poincare));
        let _ = writeln!(out, "motive: {}", self.motive);
        let q = qplus_report(&self.cells);
        let _ = writeln!(out, "Q+ wedge: {}", q.expression);
        let _ = writeln!(out, "  {}", q.assumption);
        let h = sa1_homology_report(&self.cells);
        let shifts: Vec<String> = h.shift_multiset().iter().map(|s| s.to_string()).collect();
        let _ = writeln!(out, "stable A1-homology shifts: {}", shifts.join(" "));
        let _ = writeln!(out, "  {}", h.caveat);
        let _ = writeln!(out, "ledger:");
        for e in &self.ledger.entries {
            let _ = writeln!(out, "  {e}");
        }
        out
    }
}

pub fn tuple(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// `1 + t + 2t^2`, from ascending coefficients.
pub fn polynomial(p: &[i64]) -> String {
    let mut terms = Vec::new();
    for (k, &c) in p.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let coeff = if c == 1 && k > 0 { String::new() } else { c.to_string() };
        terms.push(match k {
            0 => coeff,
            1 => format!("{coeff}t"),
            _ => format!("{coeff}t^{k}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub fn group_text(g: &GroupStrata) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "group: {} (dim G = {}, dim B = {})", g.group, g.dim_g, g.dim_b);
    let _ = writeln!(out, "strata: {}", g.strata.len());
    let width = g.strata.iter().map(|s| s.weyl_element.len()).max().unwrap_or(0);
    for s in &g.strata {
        let _ = writeln!(out, "  {:<width$}  A^{} x B", s.weyl_element, s.affine_dimension);
    }
    let mut by_dim: BTreeMap<usize, usize> = BTreeMap::new();
    for s in &g.strata {
        *by_dim.entry(s.affine_dimension).or_insert(0) += 1;
    }
    let counts: Vec<String> = by_dim.iter().map(|(d, m)| format!("{d}:{m}")).collect();
    let _ = writeln!(out, "strata by affine dimension: {}", counts.join(" "));
    let _ = writeln!(out, "note: stratification only, no splitting of G is asserted");
    out
}

/// Hasse diagram of Bruhat order, graded left to right by length.
pub fn hasse_dot(name: &str, hasse: &HasseDiagram) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", name.replace('"', "\\\""));
    let _ = writeln!(out, "  rankdir=LR;");
    let _ = writeln!(out, "  node [shape=box];");
    for (i, w) in hasse.nodes.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{}:{}\"];", w.label(), w.length());
    }
    let mut ranks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, w) in hasse.nodes.iter().enumerate() {
        ranks.entry(w.length()).or_default().push(i);
    }
    for ids in ranks.values() {
        let names: Vec<String> = ids.iter().map(|i| format!("n{i}")).collect();
        let _ = writeln!(out, "  {{ rank=same; {}; }}", names.join("; "));
    }
    for &(u, w) in &hasse.edges {
        let _ = writeln!(out, "  n{u} -> n{w};");
    }
    out.push_str("}\n");
    out
}
