//! Ring invariants read off the presentation, the algebra, and the
//! resolution of the residue field.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{associated_graded, AlgebraError, AlgebraPresentation, LocalAlgebra};
use crate::linalg::{FpMatrix, Subspace};
use crate::lindefect::NuTable;
use crate::poly::monomials_of_degree;
use crate::resolution::{resolve_with, BettiTable, FinModule, ModuleKind, ResolutionError, ResolveOptions};
use crate::series;

#[derive(Debug, Error)]
pub enum InvariantError {
    #[error("the presentation was truncated, so complete-intersection status is not decidable from it")]
    TruncationForced,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SInvariant {
    Exact(usize),
    AtLeast(usize),
}

/// A property verified through homological degree `depth`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpTo {
    pub holds: bool,
    pub depth: usize,
}

fn ideal_and_products(pres: &AlgebraPresentation) -> (Subspace, Subspace) {
    let space = pres.space();
    let gens = pres.truncated_ideal_generators();
    let ideal = space.ideal_span(&gens);
    let n = pres.nvars();
    let mut prods = Vec::with_capacity(gens.len() * n);
    for g in &gens {
        for m in monomials_of_degree(n, 1) {
            prods.push(g.mul_monomial(&m));
        }
    }
    (ideal, space.ideal_span(&prods))
}

/// Least `i >= 1` with `a ∩ n^{i+2} ⊆ n·a`, where `a` is the ideal of the
/// analyzed ring (relations plus `n^{N+1}`).
///
/// Since `n^{N+2} ⊆ n·a` and the cap is at least `N + 2`, the inclusions
/// computed modulo `n^{W+1}` are the true ones.
pub fn s_invariant(pres: &AlgebraPresentation) -> SInvariant {
    let (ideal, na) = ideal_and_products(pres);
    let space = pres.space();
    let w = pres.cap();
    for i in 1..=w.saturating_sub(2) {
        if na.contains_subspace(&ideal.intersection(&space.power_of_maximal_ideal(i + 2))) {
            return SInvariant::Exact(i);
        }
    }
    SInvariant::AtLeast(w.saturating_sub(1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompleteIntersection {
    pub is_ci: bool,
    /// Minimal number of generators of the defining ideal.
    pub relations: usize,
    pub codim: usize,
}

/// An Artinian `Q/a` is a complete intersection iff `a` needs exactly
/// `dim Q` generators.
pub fn is_complete_intersection(pres: &AlgebraPresentation) -> Result<CompleteIntersection, InvariantError> {
    if pres.truncation_forced() {
        return Err(InvariantError::TruncationForced);
    }
    let (ideal, na) = ideal_and_products(pres);
    let relations = ideal.dim() - na.dim();
    Ok(CompleteIntersection { is_ci: relations == pres.nvars(), relations, codim: pres.nvars() })
}

pub fn minimal_multiplicity_ci(alg: &LocalAlgebra, codim: usize) -> bool {
    u32::try_from(codim).ok().and_then(|c| 2usize.checked_pow(c)) == Some(alg.multiplicity())
}

pub fn minimal_multiplicity_cm(alg: &LocalAlgebra) -> bool {
    alg.multiplicity() == alg.edim() + 1
}

/// Linear graded Betti table of `k`, i.e. `β_{i,j} = 0` for `j != i`.
pub fn is_diagonal(table: &BettiTable) -> bool {
    table.table.iter().enumerate().all(|(i, row)| row.iter().enumerate().all(|(j, &b)| b == 0 || j == i))
}

/// Resolves `k` over the associated graded algebra and tests for a linear
/// resolution through `depth`.
pub fn koszul_check(alg: &LocalAlgebra, depth: usize, options: &ResolveOptions) -> Result<UpTo, InvariantError> {
    let gr = Arc::new(associated_graded(alg)?);
    let res = resolve_with(&FinModule::residue_field(&gr), depth, options)?;
    Ok(UpTo { holds: is_diagonal(&res.graded_betti()?), depth })
}

fn subsets_of_size(e: usize, size: usize) -> Vec<u32> {
    (0u32..1 << e).filter(|m| m.count_ones() as usize == size).collect()
}

/// `dims[i] = dim H_i` of the Koszul complex on the images of the variables.
pub fn koszul_complex_homology(alg: &LocalAlgebra) -> Vec<usize> {
    let e = alg.generators().len();
    let l = alg.dim();
    let f = alg.field();
    let levels: Vec<Vec<u32>> = (0..=e).map(|i| subsets_of_size(e, i)).collect();
    // x_s · basis_b
    let act: Vec<Vec<Vec<u32>>> = alg
        .generators()
        .iter()
        .map(|x| {
            (0..l)
                .map(|b| {
                    let mut v = vec![0; l];
                    for (a, &c) in x.iter().enumerate() {
                        f.axpy(&mut v, c, alg.basis_product(a, b));
                    }
                    v
                })
                .collect()
        })
        .collect();

    let mut ranks = vec![0usize; e + 2];
    for i in 1..=e {
        let src = &levels[i];
        let dst = &levels[i - 1];
        let mut m = FpMatrix::zeros(f, dst.len() * l, src.len() * l);
        for (col, &set) in src.iter().enumerate() {
            let mut pos = 0;
            for (s, act_s) in act.iter().enumerate().take(e) {
                if set & (1 << s) == 0 {
                    continue;
                }
                let row_block = dst.binary_search(&(set & !(1 << s))).expect("face of a subset");
                for (b, image) in act_s.iter().enumerate().take(l) {
                    for (a, &v) in image.iter().enumerate() {
                        if v != 0 {
                            let v = if pos % 2 == 0 { v } else { f.neg(v) };
                            m.set(row_block * l + a, col * l + b, v);
                        }
                    }
                }
                pos += 1;
            }
        }
        ranks[i] = m.rank();
    }
    (0..=e).map(|i| levels[i].len() * l - ranks[i] - ranks[i + 1]).collect()
}

/// Coefficients of `(1+t)^e / (1 - Σ_{i>=1} c_i t^{i+1})` through `t^depth`.
pub fn serre_bound(edim: usize, koszul: &[usize], depth: usize) -> Vec<i128> {
    let mut den = vec![1i128, 0];
    den.extend(koszul.iter().skip(1).map(|&c| -(c as i128)));
    series::divide(&series::binomial_row(edim), &den, depth + 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GolodCheck {
    pub holds: bool,
    pub depth: usize,
    pub bound: Vec<i128>,
}

/// Whether the Betti numbers of `k` attain the Serre bound through `betti.len() - 1`.
pub fn golod_check(alg: &LocalAlgebra, betti: &[usize], koszul: &[usize]) -> GolodCheck {
    let depth = betti.len().saturating_sub(1);
    let bound = serre_bound(alg.edim(), koszul, depth);
    let holds = betti.iter().zip(&bound).all(|(&b, &s)| b as i128 == s);
    GolodCheck { holds, depth, bound }
}

pub const YONEDA_MARGIN: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum YonedaVerdict {
    EqualsDual,
    GeneratedInDegreesLe(usize),
    NoFiniteGenerationDetected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct YonedaReport {
    pub verdict: YonedaVerdict,
    /// Largest `i` with `ν^1_i(k) != 0`, or 0.
    pub last_nonzero: usize,
    pub margin: usize,
}

/// Reads generation of `Ext_R(k,k)` over the subalgebra generated in degree
/// one from the row `n = 1` of the ν-table of `k`.
pub fn yoneda_report(nu: &NuTable, depth: usize) -> YonedaReport {
    let last = (1..=nu.max_i()).rev().find(|&i| nu.max_n() >= 1 && !nu.vanishes(i, 1)).unwrap_or(0);
    let verdict = if last == 0 {
        YonedaVerdict::EqualsDual
    } else if last + YONEDA_MARGIN < depth {
        YonedaVerdict::GeneratedInDegreesLe(last)
    } else {
        YonedaVerdict::NoFiniteGenerationDetected
    };
    YonedaReport { verdict, last_nonzero: last, margin: YONEDA_MARGIN }
}

/// `1/e == A(-1)/B(-1)` as exact rationals, with `B(-1) != 0`.
pub fn multiplicity_matches_rational_series(e: usize, a: &[i128], b: &[i128]) -> bool {
    let b1 = series::evaluate(b, -1);
    b1 != 0 && b1 == e as i128 * series::evaluate(a, -1)
}

/// The m-adic Hilbert series of the modules with a known shape.
pub fn module_hilbert(alg: &LocalAlgebra, kind: ModuleKind) -> Option<Vec<i128>> {
    let h: Vec<i128> = alg.hilbert_series().iter().map(|&x| x as i128).collect();
    match kind {
        ModuleKind::ResidueField => Some(vec![1]),
        ModuleKind::QuotientPower(n) => Some(h.iter().take(n).copied().collect()),
        ModuleKind::Power(n) => Some(h.iter().skip(n).copied().collect()),
        ModuleKind::Cokernel => None,
    }
}

/// `Hilb_M(-t) / Hilb_R(-t)`, the Poincaré series of a Koszul module.
pub fn koszul_poincare_series(module_hilbert: &[i128], ring_hilbert: &[i128], len: usize) -> Vec<i128> {
    series::divide(&series::negate_variable(module_hilbert), &series::negate_variable(ring_hilbert), len)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingVerdicts {
    pub s: SInvariant,
    pub koszul_up_to: UpTo,
    /// `None` when the presentation had to be truncated.
    pub ci: Option<CompleteIntersection>,
    pub ci_min_mult: Option<bool>,
    pub cm_min_mult: bool,
    pub golod_up_to: UpTo,
    pub serre_bound: Vec<i128>,
    pub koszul_homology: Vec<usize>,
    pub yoneda: Option<YonedaReport>,
    pub regularity_lb: Option<i64>,
}
