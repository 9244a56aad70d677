//! Hilbert depth of `R^s ⊕ m` over a grid of ring sizes `n` and free ranks `s`.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde_json::json;

use crate::depth::{hdepth, Depth, HdepthError};
use crate::module::{ModuleError, MonomialModuleExpr};

/// Largest ring size the table command accepts.
pub const MAX_VARS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthTable {
    pub ns: Vec<usize>,
    pub rows: Vec<TableRow>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub free_rank: u64,
    pub values: Vec<usize>,
}

#[derive(Debug, thiserror::Error)]
pub enum TableError {
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Depth(#[from] HdepthError),
}

/// `hdepth(R^s ⊕ m_n)`; `s = 0` is the maximal ideal alone.
pub fn free_plus_maximal_depth(n: usize, s: u64) -> Result<usize, TableError> {
    let series = MonomialModuleExpr::free_plus_maximal(n, s)?.series()?;
    match hdepth(&series)?.value {
        Depth::Finite(e) => Ok(e),
        Depth::Infinite => unreachable!("R^s ⊕ m is nonzero"),
    }
}

/// Cells are computed in parallel; row and column order follow the inputs.
pub fn compute(ns: RangeInclusive<usize>, free_ranks: &[u64]) -> Result<DepthTable, TableError> {
    let ns: Vec<usize> = ns.collect();
    let cells: Vec<(u64, usize)> = free_ranks
        .iter()
        .flat_map(|&s| ns.iter().map(move |&n| (s, n)))
        .collect();
    let values = cells
        .par_iter()
        .map(|&(s, n)| free_plus_maximal_depth(n, s))
        .collect::<Result<Vec<_>, _>>()?;
    let rows = free_ranks
        .iter()
        .zip(values.chunks(ns.len().max(1)))
        .map(|(&free_rank, chunk)| TableRow {
            free_rank,
            values: chunk.to_vec(),
        })
        .collect();
    Ok(DepthTable { ns, rows })
}

fn row_label(s: u64) -> String {
    match s {
        0 => "hdepth(m)".to_string(),
        1 => "hdepth(R+m)".to_string(),
        _ => format!("hdepth(R^{s}+m)"),
    }
}

impl DepthTable {
    pub fn to_text(&self) -> String {
        let label_width = self
            .rows
            .iter()
            .map(|r| row_label(r.free_rank).len())
            .max()
            .unwrap_or(0)
            .max(1);
        let cell_width = self
            .ns
            .iter()
            .copied()
            .chain(self.rows.iter().flat_map(|r| r.values.iter().copied()))
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        write!(out, "{:<label_width$} |", "n").unwrap();
        for n in &self.ns {
            write!(out, " {n:>cell_width$}").unwrap();
        }
        out.push('\n');
        for row in &self.rows {
            write!(out, "{:<label_width$} |", row_label(row.free_rank)).unwrap();
            for v in &row.values {
                write!(out, " {v:>cell_width$}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// Header `s,n1,n2,...`, then one line per free rank.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("s");
        for n in &self.ns {
            write!(out, ",{n}").unwrap();
        }
        out.push_str("\r\n");
        for row in &self.rows {
            write!(out, "{}", row.free_rank).unwrap();
            for v in &row.values {
                write!(out, ",{v}").unwrap();
            }
            out.push_str("\r\n");
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.ns,
            "rows": self.rows.iter().map(|r| json!({
                "s": r.free_rank,
                "hdepth": r.values,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn get(&self, n: usize, s: u64) -> Option<usize> {
        let col = self.ns.iter().position(|&x| x == n)?;
        let row = self.rows.iter().find(|r| r.free_rank == s)?;
        row.values.get(col).copied()
    }
}
