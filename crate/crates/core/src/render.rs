//! Plain-text drawings of the Auslander-Reiten quiver of a linear Nakayama
//! algebra in triangular layout, and a line-based graph export.
//!
//! `M(t,l)` sits at column `x = 2t - l - 1` (in half-units) and row
//! `y = l - 1`; simples form the bottom row.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::algebra::{KupischSeries, Module};
use crate::classify::z_module;
use crate::homology::{is_higher_auslander, PdTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelMode {
    Pd,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub x: usize,
    pub y: usize,
    pub module: Module,
    pub label: Option<String>,
    pub marked: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverLayout {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(Module, Module)>,
}

pub fn layout(a: &KupischSeries, mode: LabelMode) -> QuiverLayout {
    let table = PdTable::new(a);
    let mods = a.indecomposables();
    let vertices = mods
        .iter()
        .map(|&m| Vertex {
            x: 2 * m.top() - m.len() - 1,
            y: m.len() - 1,
            module: m,
            label: match mode {
                LabelMode::Pd => Some(table.get(&m).to_string()),
                LabelMode::None => None,
            },
            marked: false,
        })
        .collect();
    let mut edges = Vec::new();
    for m in &mods {
        if let Some(q) = m.soc_quotient() {
            edges.push((*m, q));
        }
        if let Ok(up) = a.module(m.top() + 1, m.len() + 1) {
            edges.push((*m, up));
        }
    }
    edges.sort();
    QuiverLayout { vertices, edges }
}

impl QuiverLayout {
    /// Marks every vertex that is a subfactor of `m`.
    pub fn mark_subfactors(&mut self, m: &Module) {
        for v in &mut self.vertices {
            if m.contains_subfactor(&v.module) {
                v.marked = true;
            }
        }
    }
}

/// Marks the subfactors of `rad P/soc P` (odd `d`) or `rad² P` (even `d`),
/// `P` the first summit, when `a` is a concave higher Auslander algebra.
pub fn mark_z(layout: &mut QuiverLayout, a: &KupischSeries) {
    if let (true, Some(d)) = is_higher_auslander(a) {
        if let Ok(Some(z)) = z_module(a, d) {
            layout.mark_subfactors(&z);
        }
    }
}

fn cell_text(v: &Vertex) -> String {
    let mut s = v.label.clone().unwrap_or_else(|| "o".to_string());
    if v.marked {
        s.push('*');
    }
    s
}

/// The grid, top row first; one cell per half-unit, labels right-aligned,
/// trailing blanks removed.
pub fn to_text(layout: &QuiverLayout) -> String {
    let width = layout.vertices.iter().map(|v| cell_text(v).len()).max().unwrap_or(1);
    let rows = layout.vertices.iter().map(|v| v.y + 1).max().unwrap_or(0);
    let mut grid: Vec<BTreeMap<usize, String>> = vec![BTreeMap::new(); rows];
    for v in &layout.vertices {
        grid[v.y].insert(v.x, cell_text(v));
    }
    let mut out = String::new();
    for row in grid.iter().rev() {
        let mut line = String::new();
        for (&x, text) in row {
            while line.len() < x * width {
                line.push(' ');
            }
            let _ = write!(line, "{text:>width$}");
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// `vertex M(t,l) [label]` and `edge M(a,b) -> M(c,d)` lines, sorted.
pub fn to_graph_desc(layout: &QuiverLayout) -> String {
    let mut lines: Vec<String> = layout
        .vertices
        .iter()
        .map(|v| {
            let mut s = format!("vertex {}", v.module);
            if let Some(l) = &v.label {
                let _ = write!(s, " [{l}]");
            }
            if v.marked {
                s.push_str(" *");
            }
            s
        })
        .collect();
    lines.extend(layout.edges.iter().map(|(a, b)| format!("edge {a} -> {b}")));
    lines.sort();
    let mut out = lines.join("\n");
    out.push('\n');
    out
}
