//! The linear part of a minimal resolution, the linearity defect, and the
//! maps `ν^n_i : Tor_i(M, R/m^{n+1}) -> Tor_i(M, R/m^n)`.
//!
//! `ν` is computed twice. The homology route builds both Tor groups as
//! subquotients of truncated chain complexes and takes the rank of the
//! induced map. The cycle route tests whether every `x ∈ F_i` with
//! `∂x ∈ m^{n+1}F_{i-1}` lies in `ker ∂ + m^n F_i`, using `∂_i` alone.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{induced_map_on_subquotients, FpMatrix, LinalgError, Subspace};
use crate::resolution::MinimalResolution;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinDefectError {
    #[error("index i = {i} outside 1..={max} for a resolution of depth {depth}")]
    OutOfRange { i: usize, max: usize, depth: usize },
    #[error("resolution depth {0} is too small; need at least 2")]
    DepthTooSmall(usize),
    #[error("nu^{n}_{i}: homology rank {rank} but cycle criterion says {}", if *.cycle_zero { "zero" } else { "nonzero" })]
    CrossCheckMismatch { i: usize, n: usize, rank: usize, cycle_zero: bool },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// `rows[j][s] = dim H_j(lin F)_{j+s}` for `0 <= j <= D-1`, `0 <= s <= N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinHomologyTable {
    pub rows: Vec<Vec<usize>>,
}

impl LinHomologyTable {
    pub fn row_is_zero(&self, j: usize) -> bool {
        self.rows[j].iter().all(|&h| h == 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LinearityDefect {
    Exact(usize),
    AtLeast(usize),
}

impl fmt::Display for LinearityDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinearityDefect::Exact(d) => write!(f, "{d}"),
            LinearityDefect::AtLeast(d) => write!(f, ">= {d}"),
        }
    }
}

/// `ranks[i-1][n-1] = rank ν^n_i` for `1 <= i <= D-1`, `1 <= n <= N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NuTable {
    pub ranks: Vec<Vec<usize>>,
}

impl NuTable {
    pub fn max_i(&self) -> usize {
        self.ranks.len()
    }
    pub fn max_n(&self) -> usize {
        self.ranks.first().map_or(0, Vec::len)
    }
    pub fn rank(&self, i: usize, n: usize) -> usize {
        self.ranks[i - 1][n - 1]
    }
    pub fn vanishes(&self, i: usize, n: usize) -> bool {
        self.rank(i, n) == 0
    }
    /// All `ν^n_i`, `1 <= n <= N`, vanish.
    pub fn row_vanishes(&self, i: usize) -> bool {
        self.ranks[i - 1].iter().all(|&r| r == 0)
    }
}

/// Coordinates of `F_i / m^t F_i`, i.e. pairs `(c, b)` with `order(b) < t`.
fn below(res: &MinimalResolution, i: usize, t: usize) -> Vec<usize> {
    let alg = res.algebra();
    let l = alg.dim();
    (0..res.rank(i) * l).filter(|&k| alg.order_of(k % l) < t).collect()
}

fn graded_piece(res: &MinimalResolution, i: usize, s: usize) -> Vec<usize> {
    let alg = res.algebra();
    let l = alg.dim();
    (0..res.rank(i) * l).filter(|&k| alg.order_of(k % l) == s).collect()
}

/// Rank of `∂_i : gr_s F_i -> gr_{s+1} F_{i-1}`. Both pieces are spanned by
/// coordinate vectors, so the induced map is a submatrix of `∂_i`.
fn linear_part_rank(res: &MinimalResolution, i: usize, s: usize) -> usize {
    if i == 0 || i > res.depth() {
        return 0;
    }
    let cols = graded_piece(res, i, s);
    let rows = graded_piece(res, i - 1, s + 1);
    if cols.is_empty() || rows.is_empty() {
        return 0;
    }
    res.differential_matrix(i).submatrix(&rows, &cols).rank()
}

pub fn lin_homology(res: &MinimalResolution) -> LinHomologyTable {
    let top = res.algebra().truncation_degree();
    let rows = (0..res.depth())
        .into_par_iter()
        .map(|j| {
            (0..=top)
                .map(|s| {
                    let piece = graded_piece(res, j, s).len();
                    let out = linear_part_rank(res, j, s);
                    let inc = if s == 0 { 0 } else { linear_part_rank(res, j + 1, s - 1) };
                    piece - out - inc
                })
                .collect()
        })
        .collect();
    LinHomologyTable { rows }
}

/// The largest `j >= 1` with nonzero lin homology; `AtLeast(D)` when the
/// deepest computed row `D-1` is nonzero.
pub fn linearity_defect_from(lin: &LinHomologyTable) -> LinearityDefect {
    let d = lin.rows.len();
    if d >= 2 && !lin.row_is_zero(d - 1) {
        return LinearityDefect::AtLeast(d);
    }
    LinearityDefect::Exact((1..d).rev().find(|&j| !lin.row_is_zero(j)).unwrap_or(0))
}

pub fn linearity_defect(res: &MinimalResolution) -> Result<LinearityDefect, LinDefectError> {
    if res.depth() < 2 {
        return Err(LinDefectError::DepthTooSmall(res.depth()));
    }
    Ok(linearity_defect_from(&lin_homology(res)))
}

fn check_range(res: &MinimalResolution, i: usize, max: usize) -> Result<(), LinDefectError> {
    if i == 0 || i > max {
        return Err(LinDefectError::OutOfRange { i, max, depth: res.depth() });
    }
    Ok(())
}

/// Cycles and boundaries of `F/m^t F` at `F_i`, in the coordinates [`below`].
fn truncated_homology(res: &MinimalResolution, i: usize, t: usize) -> (Subspace, Subspace) {
    let f = res.algebra().field();
    let here = below(res, i, t);
    let cycles = if here.is_empty() {
        Subspace::zero(f, 0)
    } else {
        res.differential_matrix(i).submatrix(&below(res, i - 1, t), &here).kernel_basis()
    };
    let bnd = res.differential_matrix(i + 1).submatrix(&here, &below(res, i + 1, t));
    (cycles, Subspace::column_space(&bnd))
}

fn projection(res: &MinimalResolution, i: usize, n: usize) -> FpMatrix {
    let f = res.algebra().field();
    let src = below(res, i, n + 1);
    let dst = below(res, i, n);
    let mut m = FpMatrix::zeros(f, dst.len(), src.len());
    let mut k = 0;
    for (col, &c) in src.iter().enumerate() {
        if k < dst.len() && dst[k] == c {
            m.set(k, col, 1);
            k += 1;
        }
    }
    m
}

fn nu_rank_from(
    res: &MinimalResolution,
    i: usize,
    n: usize,
    hi: &(Subspace, Subspace),
    lo: &(Subspace, Subspace),
) -> Result<usize, LinDefectError> {
    Ok(induced_map_on_subquotients(&projection(res, i, n), &hi.0, &hi.1, &lo.0, &lo.1)?.rank())
}

/// Whether `ν^n_i` vanishes, and its rank, from the two Tor groups.
pub fn nu_vanishes_homology(res: &MinimalResolution, i: usize, n: usize) -> Result<(bool, usize), LinDefectError> {
    check_range(res, i, res.depth().saturating_sub(1))?;
    if n == 0 {
        return Ok((true, 0));
    }
    let hi = truncated_homology(res, i, n + 1);
    let lo = truncated_homology(res, i, n);
    let rank = nu_rank_from(res, i, n, &hi, &lo)?;
    Ok((rank == 0, rank))
}

fn cycle_criterion(res: &MinimalResolution, i: usize, n: usize) -> bool {
    let f = res.algebra().field();
    let rows = below(res, i - 1, n + 1);
    let dim = res.rank(i) * res.algebra().dim();
    let lifts = if rows.is_empty() {
        Subspace::full(f, dim)
    } else {
        let all: Vec<usize> = (0..dim).collect();
        res.differential_matrix(i).submatrix(&rows, &all).kernel_basis()
    };
    let l = res.algebra().dim();
    let high = Subspace::coordinate(f, dim, (0..dim).filter(|&k| res.algebra().order_of(k % l) >= n));
    let target = res.kernel(i).sum(&high);
    target.contains_subspace(&lifts)
}

/// Whether every `x ∈ F_i` with `∂x ∈ m^{n+1}F_{i-1}` lies in `ker ∂_i + m^n F_i`.
pub fn nu_vanishes_cycle_criterion(res: &MinimalResolution, i: usize, n: usize) -> Result<bool, LinDefectError> {
    check_range(res, i, res.depth())?;
    Ok(n == 0 || cycle_criterion(res, i, n))
}

/// `ν^n_i` for `1 <= i <= D-1` and `1 <= n <= N`, each entry computed by
/// both routes.
pub fn nu_table(res: &MinimalResolution) -> Result<NuTable, LinDefectError> {
    let depth = res.depth();
    if depth < 2 {
        return Err(LinDefectError::DepthTooSmall(depth));
    }
    let top = res.algebra().truncation_degree().max(1);
    let ranks = (1..depth)
        .into_par_iter()
        .map(|i| {
            let homology: Vec<(Subspace, Subspace)> = (1..=top + 1).map(|t| truncated_homology(res, i, t)).collect();
            (1..=top)
                .map(|n| {
                    let rank = nu_rank_from(res, i, n, &homology[n], &homology[n - 1])?;
                    let cycle_zero = cycle_criterion(res, i, n);
                    if cycle_zero != (rank == 0) {
                        return Err(LinDefectError::CrossCheckMismatch { i, n, rank, cycle_zero });
                    }
                    Ok(rank)
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(NuTable { ranks })
}

/// `H_i(lin F) = 0` exactly when `ν^n_{i+1} = 0 = ν^n_i` for all `n`.
pub fn lin_nu_crosscheck(lin: &LinHomologyTable, nu: &NuTable, i: usize) -> bool {
    lin.row_is_zero(i) == (nu.row_vanishes(i) && nu.row_vanishes(i + 1))
}

/// Lin homology, ν-table, and linearity defect of one resolution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectAnalysis {
    pub lin: LinHomologyTable,
    pub nu: NuTable,
    pub ld: LinearityDefect,
    /// Rows `1..=D-2` on which the lin/ν biconditional was tested, with the outcome.
    pub crosscheck_rows: Vec<(usize, bool)>,
}

impl DefectAnalysis {
    pub fn crosscheck_holds(&self) -> bool {
        self.crosscheck_rows.iter().all(|&(_, ok)| ok)
    }
}

pub fn analyze_defect(res: &MinimalResolution) -> Result<DefectAnalysis, LinDefectError> {
    let nu = nu_table(res)?;
    let lin = lin_homology(res);
    let crosscheck_rows = (1..res.depth().saturating_sub(1)).map(|i| (i, lin_nu_crosscheck(&lin, &nu, i))).collect();
    let mut ld = linearity_defect_from(&lin);
    if let LinearityDefect::Exact(d) = ld {
        // A definite value also needs the ν-rows above it to be clean.
        if (d + 1..res.depth()).any(|i| i >= 1 && !nu.row_vanishes(i)) {
            ld = LinearityDefect::AtLeast(res.depth());
        }
    }
    Ok(DefectAnalysis { lin, nu, ld, crosscheck_rows })
}
