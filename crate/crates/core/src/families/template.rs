//! Literal block layouts of the printed matrix forms, used as an independent
//! cross-check of the bases obtained from the defining conditions.

use std::sync::Arc;

use serde::Serialize;

use super::family::{AlgebraFamily, FamilyKind, FamilyParams};
use crate::error::Result;
use crate::exactnum::{ExactMatrix, Scalar};
use crate::graded::{Degree, GradedMatrix, GradingSignature};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockConstraint {
    Free,
    Symmetric,
    Antisymmetric,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockEntry {
    Zero,
    /// An independent block.
    Param {
        name: &'static str,
        constraint: BlockConstraint,
    },
    /// `sign * (source block)^t`.
    Linked {
        source: (usize, usize),
        sign: i64,
    },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BlockCell {
    /// Degree label printed on the block.
    pub label: Option<Degree>,
    pub entry: BlockEntry,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BlockTemplate {
    pub family: AlgebraFamily,
    pub block_sizes: Vec<usize>,
    pub cells: Vec<Vec<BlockCell>>,
    /// Restrict the span of the instances to trace zero.
    pub traceless: bool,
}

fn free(name: &'static str, label: Degree) -> BlockCell {
    BlockCell {
        label: Some(label),
        entry: BlockEntry::Param {
            name,
            constraint: BlockConstraint::Free,
        },
    }
}

fn sym(name: &'static str, label: Degree) -> BlockCell {
    BlockCell {
        label: Some(label),
        entry: BlockEntry::Param {
            name,
            constraint: BlockConstraint::Symmetric,
        },
    }
}

fn anti(name: &'static str, label: Degree) -> BlockCell {
    BlockCell {
        label: Some(label),
        entry: BlockEntry::Param {
            name,
            constraint: BlockConstraint::Antisymmetric,
        },
    }
}

fn link(source: (usize, usize), sign: i64, label: Degree) -> BlockCell {
    BlockCell {
        label: Some(label),
        entry: BlockEntry::Linked { source, sign },
    }
}

const O: Degree = Degree::D00;
const A: Degree = Degree::D01;
const B: Degree = Degree::D10;
const C: Degree = Degree::D11;

pub fn block_template(f: &AlgebraFamily) -> BlockTemplate {
    let (block_sizes, cells, traceless) = match (f.kind(), f.params()) {
        (FamilyKind::Gl | FamilyKind::Sl, FamilyParams::Graded { p, q, r, s }) => {
            let labels = [[O, A, B, C], [A, O, C, B], [B, C, O, A], [C, B, A, O]];
            let names = [
                ["a00", "a01", "a10", "a11"],
                ["b01", "b00", "b11", "b10"],
                ["c10", "c11", "c00", "c01"],
                ["d11", "d10", "d01", "d00"],
            ];
            let cells = (0..4)
                .map(|i| (0..4).map(|j| free(names[i][j], labels[i][j])).collect())
                .collect();
            (vec![p, q, r, s], cells, f.kind() == FamilyKind::Sl)
        }
        (FamilyKind::SoGraded, FamilyParams::Graded { p, q, r, s }) => {
            let cells = vec![
                vec![anti("a00", O), free("a01", A), free("a10", B), free("a11", C)],
                vec![link((0, 1), -1, A), anti("b00", O), free("b11", C), free("b10", B)],
                vec![link((0, 2), -1, B), link((1, 2), 1, C), anti("c00", O), free("c01", A)],
                vec![
                    link((0, 3), -1, C),
                    link((1, 3), 1, B),
                    link((2, 3), 1, A),
                    anti("d00", O),
                ],
            ];
            (vec![p, q, r, s], cells, true)
        }
        (FamilyKind::SpP | FamilyKind::SoPEven, FamilyParams::Classical { n, p }) => {
            let (paired, framed) = if f.kind() == FamilyKind::SpP {
                (sym as fn(&'static str, Degree) -> BlockCell, -1)
            } else {
                (anti as fn(&'static str, Degree) -> BlockCell, 1)
            };
            let cells = vec![
                vec![free("a00", O), free("a10", B), paired("b11", C), free("b01", A)],
                vec![
                    free("ã10", B),
                    free("ã00", O),
                    link((0, 3), framed, A),
                    paired("b̃11", C),
                ],
                vec![
                    paired("c11", C),
                    free("c01", A),
                    link((0, 0), -1, O),
                    link((1, 0), -1, B),
                ],
                vec![
                    link((2, 1), framed, A),
                    paired("c̃11", C),
                    link((0, 1), -1, B),
                    link((1, 1), -1, O),
                ],
            ];
            (vec![p, n - p, p, n - p], cells, true)
        }
        (FamilyKind::SoPOdd, FamilyParams::Classical { n, p }) => {
            let cells = vec![
                vec![
                    free("a00", O),
                    free("a11", C),
                    anti("b00", O),
                    free("b11", C),
                    free("c01", A),
                ],
                vec![
                    free("ã11", C),
                    free("ã00", O),
                    link((0, 3), 1, C),
                    anti("b̃00", O),
                    free("c10", B),
                ],
                vec![
                    anti("d00", O),
                    free("d11", C),
                    link((0, 0), -1, O),
                    link((1, 0), 1, C),
                    free("e01", A),
                ],
                vec![
                    link((2, 1), 1, C),
                    anti("d̃00", O),
                    link((0, 1), 1, C),
                    link((1, 1), -1, O),
                    free("e10", B),
                ],
                vec![
                    link((2, 4), -1, A),
                    link((3, 4), -1, B),
                    link((0, 4), -1, A),
                    link((1, 4), -1, B),
                    BlockCell {
                        label: None,
                        entry: BlockEntry::Zero,
                    },
                ],
            ];
            (vec![p, n - p, p, n - p, 1], cells, true)
        }
        _ => unreachable!("validated family"),
    };
    BlockTemplate {
        family: *f,
        block_sizes,
        cells,
        traceless,
    }
}

/// Elementary matrices spanning the admissible values of a block.
fn block_params(rows: usize, cols: usize, constraint: BlockConstraint) -> Vec<ExactMatrix> {
    let mut out = Vec::new();
    match constraint {
        BlockConstraint::Free => {
            for i in 0..rows {
                for j in 0..cols {
                    out.push(ExactMatrix::unit(rows, cols, i, j));
                }
            }
        }
        BlockConstraint::Symmetric => {
            for i in 0..rows {
                for j in i..cols {
                    let mut m = ExactMatrix::unit(rows, cols, i, j);
                    m[(j, i)] = Scalar::one();
                    out.push(m);
                }
            }
        }
        BlockConstraint::Antisymmetric => {
            for i in 0..rows {
                for j in i + 1..cols {
                    let mut m = ExactMatrix::unit(rows, cols, i, j);
                    m[(j, i)] = Scalar::from_int(-1);
                    out.push(m);
                }
            }
        }
    }
    out
}

impl BlockTemplate {
    pub fn offsets(&self) -> Vec<usize> {
        self.block_sizes
            .iter()
            .scan(0, |acc, &s| {
                let start = *acc;
                *acc += s;
                Some(start)
            })
            .collect()
    }

    pub fn size(&self) -> usize {
        self.block_sizes.iter().sum()
    }

    /// Blocks whose printed degree label disagrees with the entry degrees of `sig`.
    /// Empty blocks are ignored.
    pub fn label_mismatches(&self, sig: &GradingSignature) -> Vec<(usize, usize)> {
        let offsets = self.offsets();
        let mut bad = Vec::new();
        for (bi, row) in self.cells.iter().enumerate() {
            for (bj, cell) in row.iter().enumerate() {
                let Some(label) = cell.label else { continue };
                let rows = offsets[bi]..offsets[bi] + self.block_sizes[bi];
                let ok = rows
                    .clone()
                    .all(|j| (offsets[bj]..offsets[bj] + self.block_sizes[bj]).all(|k| sig.entry(j, k) == label));
                if !ok {
                    bad.push((bi, bj));
                }
            }
        }
        bad
    }

    /// One matrix per free parameter of the layout, spanning the set of template matrices.
    pub fn instances(&self, signature: Arc<GradingSignature>) -> Result<Vec<GradedMatrix>> {
        let offsets = self.offsets();
        let n = self.size();
        let mut out = Vec::new();
        for (bi, row) in self.cells.iter().enumerate() {
            for (bj, cell) in row.iter().enumerate() {
                let BlockEntry::Param { constraint, .. } = cell.entry else {
                    continue;
                };
                let (rows, cols) = (self.block_sizes[bi], self.block_sizes[bj]);
                for param in block_params(rows, cols, constraint) {
                    let mut m = ExactMatrix::zeros(n, n);
                    for (i, j, v) in param.nonzero_entries() {
                        m[(offsets[bi] + i, offsets[bj] + j)] = v.clone();
                    }
                    for (ti, trow) in self.cells.iter().enumerate() {
                        for (tj, tcell) in trow.iter().enumerate() {
                            if let BlockEntry::Linked { source, sign } = tcell.entry {
                                if source != (bi, bj) {
                                    continue;
                                }
                                assert_eq!((self.block_sizes[ti], self.block_sizes[tj]), (cols, rows));
                                for (i, j, v) in param.nonzero_entries() {
                                    m[(offsets[ti] + j, offsets[tj] + i)] = v.scale_int(sign);
                                }
                            }
                        }
                    }
                    let mut gm = GradedMatrix::new(signature.clone(), m)?;
                    if let Some(label) = cell.label {
                        gm = gm.with_degree(label)?;
                    }
                    out.push(gm);
                }
            }
        }
        if self.traceless {
            out = project_traceless(out)?;
        }
        Ok(out)
    }
}

/// Replaces the instances by a spanning set of their trace-zero combinations.
fn project_traceless(instances: Vec<GradedMatrix>) -> Result<Vec<GradedMatrix>> {
    let Some(anchor_idx) = instances.iter().position(|m| !m.trace().is_zero()) else {
        return Ok(instances);
    };
    let anchor = instances[anchor_idx].clone();
    let anchor_trace = anchor.trace();
    instances
        .into_iter()
        .enumerate()
        .filter(|&(i, _)| i != anchor_idx)
        .map(|(_, m)| {
            let t = m.trace();
            if t.is_zero() {
                return Ok(m);
            }
            let k = t.checked_div(&anchor_trace)?;
            m.try_sub(&anchor.scale(&k))
        })
        .collect()
}
