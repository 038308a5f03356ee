//! Minimal free resolutions over a [`LocalAlgebra`].
//!
//! A free module `R^g` is identified with F_p^{g·L} through the coordinates
//! `(c, b) -> c·L + b`, generator `c` and algebra basis element `b`. Since
//! the algebra basis is adapted to the m-adic filtration, `m^s R^g` is the
//! coordinate subspace on the pairs with `order(b) >= s`.

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::LocalAlgebra;
use crate::linalg::{kernel_basis, rref, FpMatrix, FpScalar, Subquotient, Subspace};

#[derive(Debug, Error)]
pub enum ResolutionError {
    #[error("resource guard: step {step} needs {entries} matrix entries, bound is {bound}")]
    ResourceLimit { step: usize, entries: usize, bound: usize, partial: Box<MinimalResolution> },
    #[error("m^{0} is zero")]
    PowerVanishes(usize),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("resolution is not graded (inhomogeneous algebra or differentials)")]
    NotGraded,
    #[error("verification failed: {0}")]
    Verification(String),
}

/// An R-linear map `R^src -> R^dst`, stored by the images of the basis
/// vectors of `R^src`, each a vector of length `dst·L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeMap {
    src_rank: usize,
    dst_rank: usize,
    dim: usize,
    columns: Vec<Vec<FpScalar>>,
}

impl FreeMap {
    pub fn from_columns(dim: usize, dst_rank: usize, columns: Vec<Vec<FpScalar>>) -> Result<Self, ResolutionError> {
        if let Some(c) = columns.iter().find(|c| c.len() != dst_rank * dim) {
            return Err(ResolutionError::InvalidModule(format!(
                "column of length {} in a map to a free module of rank {dst_rank}",
                c.len()
            )));
        }
        Ok(FreeMap { src_rank: columns.len(), dst_rank, dim, columns })
    }

    /// `entries[r][c]` is the algebra element in row `r`, column `c`.
    pub fn from_entries(dim: usize, dst_rank: usize, src_rank: usize, entries: &[Vec<Vec<FpScalar>>]) -> Self {
        let columns = (0..src_rank)
            .map(|c| {
                let mut col = Vec::with_capacity(dst_rank * dim);
                for row in entries.iter().take(dst_rank) {
                    col.extend_from_slice(&row[c]);
                }
                col
            })
            .collect();
        FreeMap { src_rank, dst_rank, dim, columns }
    }

    pub fn zero(dim: usize, dst_rank: usize, src_rank: usize) -> Self {
        FreeMap { src_rank, dst_rank, dim, columns: vec![vec![0; dst_rank * dim]; src_rank] }
    }

    pub fn src_rank(&self) -> usize {
        self.src_rank
    }
    pub fn dst_rank(&self) -> usize {
        self.dst_rank
    }
    pub fn columns(&self) -> &[Vec<FpScalar>] {
        &self.columns
    }
    pub fn column(&self, c: usize) -> &[FpScalar] {
        &self.columns[c]
    }

    pub fn entry(&self, r: usize, c: usize) -> &[FpScalar] {
        &self.columns[c][r * self.dim..(r + 1) * self.dim]
    }

    /// Number of scalars stored, `src·dst·L`.
    pub fn scalar_entries(&self) -> usize {
        self.src_rank * self.dst_rank * self.dim
    }

    /// The F_p-linear map `F_p^{src·L} -> F_p^{dst·L}`; column `(c, b)` is
    /// `column_c · basis_b`.
    pub fn to_matrix(&self, alg: &LocalAlgebra) -> FpMatrix {
        let l = alg.dim();
        let rows = self.dst_rank * l;
        let mut m = FpMatrix::zeros(alg.field(), rows, self.src_rank * l);
        let mut buf = vec![0; rows];
        for (c, col) in self.columns.iter().enumerate() {
            for b in 0..l {
                buf.iter_mut().for_each(|x| *x = 0);
                for r in 0..self.dst_rank {
                    let block = &col[r * l..(r + 1) * l];
                    let out = &mut buf[r * l..(r + 1) * l];
                    for (a, &ca) in block.iter().enumerate() {
                        alg.field().axpy(out, ca, alg.basis_product(a, b));
                    }
                }
                for (i, &v) in buf.iter().enumerate() {
                    if v != 0 {
                        m.set(i, c * l + b, v);
                    }
                }
            }
        }
        m
    }

    /// `self ∘ other`, computed with algebra arithmetic.
    pub fn compose(&self, alg: &LocalAlgebra, other: &FreeMap) -> Result<FreeMap, ResolutionError> {
        if other.dst_rank != self.src_rank {
            return Err(ResolutionError::InvalidModule("composition of incompatible maps".into()));
        }
        let l = alg.dim();
        let columns = other
            .columns
            .iter()
            .map(|oc| {
                let mut out = vec![0; self.dst_rank * l];
                for r in 0..other.dst_rank {
                    let a = &oc[r * l..(r + 1) * l];
                    if a.iter().all(|&x| x == 0) {
                        continue;
                    }
                    let v = act(alg, a, &self.columns[r]);
                    for (o, x) in out.iter_mut().zip(v) {
                        *o = alg.field().add(*o, x);
                    }
                }
                out
            })
            .collect();
        Ok(FreeMap { src_rank: other.src_rank, dst_rank: self.dst_rank, dim: l, columns })
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.iter().all(|&x| x == 0))
    }

    /// Every entry lies in `m`: no entry has a constant term.
    pub fn is_minimal(&self) -> bool {
        self.columns.iter().all(|c| (0..self.dst_rank).all(|r| c[r * self.dim] == 0))
    }
}

/// `x · v` for an algebra element `x` and `v` in a free module.
pub fn act(alg: &LocalAlgebra, x: &[FpScalar], v: &[FpScalar]) -> Vec<FpScalar> {
    let l = alg.dim();
    let mut out = vec![0; v.len()];
    for (o, blk) in out.chunks_mut(l).zip(v.chunks(l)) {
        alg.mul_acc(o, x, blk);
    }
    out
}

/// Coordinates of `m^s R^rank` inside F_p^{rank·L}.
pub fn power_coordinates(alg: &LocalAlgebra, rank: usize, s: usize) -> Vec<usize> {
    let l = alg.dim();
    (0..rank * l).filter(|&i| alg.order_of(i % l) >= s).collect()
}

/// Degree of an element of a free module whose generators sit in `degrees`,
/// and whether it is homogeneous.
fn element_degree(alg: &LocalAlgebra, degrees: &[usize], v: &[FpScalar]) -> (usize, bool) {
    let l = alg.dim();
    let mut lo = usize::MAX;
    let mut hi = 0;
    for (i, &x) in v.iter().enumerate() {
        if x != 0 {
            let d = degrees[i / l] + alg.order_of(i % l);
            lo = lo.min(d);
            hi = hi.max(d);
        }
    }
    (lo, lo == hi)
}

/// A minimal generating set of the R-submodule `sub ⊆ R^rank`: complement
/// representatives of `m·sub` in `sub`.
pub fn minimal_generators(alg: &LocalAlgebra, sub: &Subspace) -> Vec<Vec<FpScalar>> {
    let mut prods = Vec::with_capacity(alg.generators().len() * sub.dim());
    for x in alg.generators() {
        for i in 0..sub.dim() {
            prods.push(act(alg, x, sub.basis_vector(i)));
        }
    }
    let msub = Subspace::from_vectors(alg.field(), sub.ambient_dim(), prods);
    let q = Subquotient::new(sub, &msub).expect("m·K lies in K for a submodule K");
    (0..q.dim()).map(|i| q.representative(i).to_vec()).collect()
}

/// Minimal generators of the kernel of `f`.
pub fn syzygy_step(alg: &LocalAlgebra, f: &FreeMap) -> FreeMap {
    let ker = kernel_basis(&f.to_matrix(alg));
    FreeMap::generated(alg.dim(), f.src_rank, minimal_generators(alg, &ker))
}

impl FreeMap {
    fn generated(dim: usize, dst_rank: usize, columns: Vec<Vec<FpScalar>>) -> Self {
        FreeMap { src_rank: columns.len(), dst_rank, dim, columns }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModuleKind {
    ResidueField,
    QuotientPower(usize),
    Power(usize),
    Cokernel,
}

/// A finitely generated module `R^g / image(presentation)` with generator
/// degrees.
#[derive(Debug, Clone)]
pub struct FinModule {
    algebra: Arc<LocalAlgebra>,
    kind: ModuleKind,
    label: String,
    degrees: Vec<usize>,
    presentation: FreeMap,
}

impl FinModule {
    pub fn residue_field(alg: &Arc<LocalAlgebra>) -> Self {
        let pres = FreeMap::generated(alg.dim(), 1, alg.generators().to_vec());
        FinModule {
            algebra: alg.clone(),
            kind: ModuleKind::ResidueField,
            label: "k".into(),
            degrees: vec![0],
            presentation: pres,
        }
    }

    /// `R/m^n`, for `n >= 1`.
    pub fn quotient_power(alg: &Arc<LocalAlgebra>, n: usize) -> Result<Self, ResolutionError> {
        if n == 0 {
            return Err(ResolutionError::InvalidModule("R/m^0 is the zero module".into()));
        }
        let l = alg.dim();
        let cols = (0..l)
            .filter(|&b| alg.order_of(b) == n)
            .map(|b| {
                let mut v = vec![0; l];
                v[b] = 1;
                v
            })
            .collect();
        let pres = FreeMap::generated(l, 1, cols);
        Ok(FinModule {
            algebra: alg.clone(),
            kind: ModuleKind::QuotientPower(n),
            label: format!("R/m^{n}"),
            degrees: vec![0],
            presentation: pres,
        })
    }

    /// `m^n`, generated by the basis elements of order `n`.
    pub fn power(alg: &Arc<LocalAlgebra>, n: usize) -> Result<Self, ResolutionError> {
        let l = alg.dim();
        let gens: Vec<Vec<FpScalar>> = (0..l)
            .filter(|&b| alg.order_of(b) == n)
            .map(|b| {
                let mut v = vec![0; l];
                v[b] = 1;
                v
            })
            .collect();
        if n == 0 || gens.is_empty() {
            return Err(ResolutionError::PowerVanishes(n));
        }
        let g = gens.len();
        let inclusion = FreeMap::generated(l, 1, gens);
        let pres = syzygy_step(alg, &inclusion);
        Ok(FinModule {
            algebra: alg.clone(),
            kind: ModuleKind::Power(n),
            label: if n == 1 { "m".into() } else { format!("m^{n}") },
            degrees: vec![n; g],
            presentation: pres,
        })
    }

    /// Cokernel of a user-supplied presentation; generators in degree 0.
    pub fn cokernel(alg: &Arc<LocalAlgebra>, label: impl Into<String>, presentation: FreeMap) -> Self {
        let g = presentation.dst_rank;
        FinModule {
            algebra: alg.clone(),
            kind: ModuleKind::Cokernel,
            label: label.into(),
            degrees: vec![0; g],
            presentation,
        }
    }

    pub fn algebra(&self) -> &Arc<LocalAlgebra> {
        &self.algebra
    }
    pub fn kind(&self) -> ModuleKind {
        self.kind
    }
    pub fn label(&self) -> &str {
        &self.label
    }
    pub fn generators(&self) -> usize {
        self.presentation.dst_rank
    }
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }
    pub fn presentation(&self) -> &FreeMap {
        &self.presentation
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResolveOptions {
    /// Upper bound on `β_{i-1}·β_i·L`, the scalars stored for one differential.
    pub max_entries: usize,
}

impl Default for ResolveOptions {
    fn default() -> Self {
        ResolveOptions { max_entries: 2_000_000 }
    }
}

pub const DEFAULT_DEPTH: usize = 8;

/// Graded Betti numbers, `table[i][j] = β_{i,j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub table: Vec<Vec<usize>>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.table.get(i).and_then(|r| r.get(j)).copied().unwrap_or(0)
    }

    /// Nonzero only on `j = i + offset` for one fixed offset.
    pub fn is_linear(&self) -> bool {
        let mut offset = None;
        for (i, row) in self.table.iter().enumerate() {
            for (j, &b) in row.iter().enumerate() {
                if b != 0 {
                    let o = j as i64 - i as i64;
                    if *offset.get_or_insert(o) != o {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// A minimal free resolution `F_D -> ... -> F_0 -> M`, with the F_p-matrix
/// and kernel of every differential.
#[derive(Debug, Clone)]
pub struct MinimalResolution {
    module: FinModule,
    options: ResolveOptions,
    degrees: Vec<Vec<usize>>,
    maps: Vec<FreeMap>,
    kmats: Vec<FpMatrix>,
    kernels: Vec<Subspace>,
    homogeneous: bool,
}

pub fn resolve(module: &FinModule, depth: usize) -> Result<MinimalResolution, ResolutionError> {
    resolve_with(module, depth, &ResolveOptions::default())
}

pub fn resolve_with(
    module: &FinModule,
    depth: usize,
    options: &ResolveOptions,
) -> Result<MinimalResolution, ResolutionError> {
    let alg = module.algebra.clone();
    let f = alg.field();
    let l = alg.dim();
    let g = module.generators();

    // Keep the generators that stay independent modulo m and the relations.
    let pres_image = Subspace::column_space(&module.presentation.to_matrix(&alg));
    let low = Subspace::coordinate(f, g * l, power_coordinates(&alg, g, 1));
    let mut pivot0 = vec![false; g];
    for &p in pres_image.sum(&low).pivots() {
        if p % l == 0 {
            pivot0[p / l] = true;
        }
    }
    let kept: Vec<usize> = (0..g).filter(|&c| !pivot0[c]).collect();
    let kept_coords: Vec<usize> = kept.iter().flat_map(|&c| c * l..(c + 1) * l).collect();
    let on_kept = Subspace::coordinate(f, g * l, kept_coords.iter().copied());
    let relations = pres_image.intersection(&on_kept);
    let restricted = Subspace::from_vectors(
        f,
        kept.len() * l,
        (0..relations.dim()).map(|i| kept_coords.iter().map(|&j| relations.basis_vector(i)[j]).collect()).collect(),
    );
    let deg0: Vec<usize> = kept.iter().map(|&c| module.degrees[c]).collect();

    let mut res = MinimalResolution {
        module: module.clone(),
        options: *options,
        degrees: vec![deg0],
        maps: Vec::new(),
        kmats: Vec::new(),
        kernels: Vec::new(),
        homogeneous: alg.is_graded(),
    };
    res.push_step(minimal_generators(&alg, &restricted), restricted.dim())?;
    res.extend_to(depth)?;
    Ok(res)
}

impl MinimalResolution {
    /// Appends `∂_{i+1}` with the given columns, where `expected_rank` is the
    /// dimension of the submodule they must generate.
    fn push_step(&mut self, columns: Vec<Vec<FpScalar>>, expected_rank: usize) -> Result<(), ResolutionError> {
        let alg = self.module.algebra.clone();
        let l = alg.dim();
        let step = self.maps.len() + 1;
        let dst = self.degrees[step - 1].len();
        let entries = dst * columns.len() * l;
        if entries > self.options.max_entries {
            return Err(ResolutionError::ResourceLimit {
                step,
                entries,
                bound: self.options.max_entries,
                partial: Box::new(self.clone()),
            });
        }
        let mut degs = Vec::with_capacity(columns.len());
        for c in &columns {
            let (d, homog) = element_degree(&alg, &self.degrees[step - 1], c);
            degs.push(d);
            self.homogeneous &= homog;
        }
        let map = FreeMap::generated(l, dst, columns);
        let kmat = map.to_matrix(&alg);
        let r = rref(&kmat);
        if r.rank != expected_rank {
            return Err(ResolutionError::Verification(format!(
                "exactness at F_{}: image has dimension {}, expected {expected_rank}",
                step - 1,
                r.rank
            )));
        }
        if !map.is_minimal() {
            return Err(ResolutionError::Verification(format!("differential {step} is not minimal")));
        }
        let kernel = crate::linalg::kernel_from_rref(&r.reduced, &r.pivots);
        self.degrees.push(degs);
        self.maps.push(map);
        self.kmats.push(kmat);
        self.kernels.push(kernel);
        Ok(())
    }

    /// Deepens the resolution to `depth` differentials, reusing prior steps.
    pub fn extend_to(&mut self, depth: usize) -> Result<(), ResolutionError> {
        while self.maps.len() < depth {
            let alg = self.module.algebra.clone();
            let ker = self.kernels.last().expect("at least one differential").clone();
            let gens = minimal_generators(&alg, &ker);
            self.push_step(gens, ker.dim())?;
        }
        Ok(())
    }

    pub fn module(&self) -> &FinModule {
        &self.module
    }
    pub fn algebra(&self) -> &LocalAlgebra {
        &self.module.algebra
    }
    /// Number of computed differentials.
    pub fn depth(&self) -> usize {
        self.maps.len()
    }
    pub fn betti(&self) -> Vec<usize> {
        self.degrees.iter().map(Vec::len).collect()
    }
    pub fn rank(&self, i: usize) -> usize {
        self.degrees[i].len()
    }
    /// Internal degrees of the generators of `F_i`.
    pub fn degrees(&self, i: usize) -> &[usize] {
        &self.degrees[i]
    }
    /// `∂_i : F_i -> F_{i-1}`, for `1 <= i <= depth`.
    pub fn differential(&self, i: usize) -> &FreeMap {
        &self.maps[i - 1]
    }
    pub fn differential_matrix(&self, i: usize) -> &FpMatrix {
        &self.kmats[i - 1]
    }
    /// `ker ∂_i ⊆ F_i` as an F_p-subspace.
    pub fn kernel(&self, i: usize) -> &Subspace {
        &self.kernels[i - 1]
    }
    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    /// Checks `∂_i ∘ ∂_{i+1} = 0`, minimality, and exactness at every computed spot.
    pub fn verify(&self) -> Result<(), ResolutionError> {
        let alg = self.algebra();
        for i in 1..=self.depth() {
            if !self.differential(i).is_minimal() {
                return Err(ResolutionError::Verification(format!("differential {i} has a unit entry")));
            }
            if i < self.depth() {
                if !self.differential(i).compose(alg, self.differential(i + 1))?.is_zero() {
                    return Err(ResolutionError::Verification(format!("∂_{i} ∘ ∂_{} is nonzero", i + 1)));
                }
                let image = self.differential_matrix(i + 1).rank();
                if image != self.kernel(i).dim() {
                    return Err(ResolutionError::Verification(format!("not exact at F_{i}")));
                }
            }
        }
        Ok(())
    }

    pub fn graded_betti(&self) -> Result<BettiTable, ResolutionError> {
        if !self.homogeneous {
            return Err(ResolutionError::NotGraded);
        }
        let table = self
            .degrees
            .iter()
            .map(|degs| {
                let mut row = vec![0; degs.iter().max().map_or(0, |d| d + 1)];
                for &d in degs {
                    row[d] += 1;
                }
                row
            })
            .collect();
        Ok(BettiTable { table })
    }

    /// `max{j - i : β_{i,j} != 0}` over the computed range.
    pub fn regularity_up_to(&self) -> Result<i64, ResolutionError> {
        let t = self.graded_betti()?;
        Ok(t.table
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().filter(|(_, &b)| b != 0).map(move |(j, _)| j as i64 - i as i64))
            .max()
            .unwrap_or(0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, AlgebraPresentation};
    use crate::linalg::Fp;
    use crate::poly::parse_poly;

    fn ring(vars: &[&str], rels: &[&str], n: Option<usize>) -> Arc<LocalAlgebra> {
        let f = Fp::new(101).unwrap();
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let rels = rels.iter().map(|r| parse_poly(r, &vars, f, 16).unwrap()).collect();
        Arc::new(build_algebra(&AlgebraPresentation::new(f, vars, rels, n, None).unwrap()).unwrap())
    }

    fn elem(alg: &LocalAlgebra, s: &str) -> Vec<FpScalar> {
        let p = parse_poly(s, alg.var_names(), alg.field(), 16).unwrap();
        alg.normal_form(&p).unwrap()
    }

    #[test]
    fn syzygy_of_x_on_truncated_line() {
        let a = ring(&["x"], &["x^3"], Some(2));
        let f = FreeMap::from_columns(3, 1, vec![elem(&a, "x")]).unwrap();
        let g = syzygy_step(&a, &f);
        assert_eq!(g.columns(), &[elem(&a, "x^2")]);
    }

    #[test]
    fn syzygy_of_identity_is_empty() {
        let a = ring(&["x", "y"], &["x^2", "y^2"], Some(2));
        let f = FreeMap::from_columns(4, 1, vec![a.one()]).unwrap();
        assert_eq!(syzygy_step(&a, &f).src_rank(), 0);
    }

    #[test]
    fn syzygy_of_squares_matches_kernel_dimension() {
        let a = ring(&["x", "y"], &["x^2", "y^2"], Some(2));
        let f = FreeMap::from_columns(4, 1, vec![elem(&a, "x"), elem(&a, "y")]).unwrap();
        let m = f.to_matrix(&a);
        assert_eq!((m.rows(), m.cols()), (4, 8));
        let g = syzygy_step(&a, &f);
        assert_eq!(g.src_rank(), 3);
        assert!(f.compose(&a, &g).unwrap().is_zero());
        let image = Subspace::column_space(&g.to_matrix(&a));
        assert_eq!(image, kernel_basis(&m));
        assert_eq!(image.dim(), 8 - m.rank());
    }

    #[test]
    fn residue_field_over_quadratic_ci() {
        let a = ring(&["x", "y"], &["x^2", "y^2"], Some(2));
        let r = resolve(&FinModule::residue_field(&a), 6).unwrap();
        assert_eq!(r.betti(), vec![1, 2, 3, 4, 5, 6, 7]);
        r.verify().unwrap();
        let t = r.graded_betti().unwrap();
        assert!(t.is_linear());
        for i in 0..=6 {
            assert_eq!(t.get(i, i), i + 1);
        }
        assert_eq!(r.regularity_up_to().unwrap(), 0);
    }

    #[test]
    fn residue_field_over_truncated_line() {
        let a = ring(&["x"], &["x^3"], Some(2));
        let r = resolve(&FinModule::residue_field(&a), 6).unwrap();
        assert_eq!(r.betti(), vec![1; 7]);
        for i in 1..=6 {
            let want = if i % 2 == 1 { "x" } else { "x^2" };
            assert_eq!(r.differential(i).column(0), elem(&a, want).as_slice());
        }
        let t = r.graded_betti().unwrap();
        assert_eq!(t.get(0, 0), 1);
        assert_eq!(t.get(2, 3), 1);
        assert_eq!(t.get(6, 9), 1);
        assert_eq!(r.regularity_up_to().unwrap(), 3);
    }

    #[test]
    fn residue_field_over_square_zero() {
        let a = ring(&["x", "y"], &["x^2", "x*y", "y^2"], Some(1));
        let r = resolve(&FinModule::residue_field(&a), 5).unwrap();
        assert_eq!(r.betti(), vec![1, 2, 4, 8, 16, 32]);
        r.verify().unwrap();
    }

    #[test]
    fn deepening_reuses_steps() {
        let a = ring(&["x", "y"], &["x^2", "y^2"], Some(2));
        let mut r = resolve(&FinModule::residue_field(&a), 3).unwrap();
        let first = r.differential(3).clone();
        r.extend_to(5).unwrap();
        assert_eq!(r.depth(), 5);
        assert_eq!(r.differential(3), &first);
        assert_eq!(r.betti(), vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn powers_of_the_maximal_ideal() {
        let a = ring(&["x"], &["x^3"], Some(2));
        let m = FinModule::power(&a, 1).unwrap();
        assert_eq!(m.generators(), 1);
        assert_eq!(m.presentation().columns(), &[elem(&a, "x^2")]);

        let b = ring(&["x", "y"], &["x^2", "y^2"], Some(2));
        assert_eq!(FinModule::power(&b, 1).unwrap().generators(), 2);
        let top = FinModule::power(&b, 2).unwrap();
        let r = resolve(&top, 3).unwrap();
        // m^2 = (xy) is a copy of k
        assert_eq!(r.betti(), vec![1, 2, 3, 4]);
        assert_eq!(r.degrees(0), &[2]);
        assert!(matches!(FinModule::power(&b, 3), Err(ResolutionError::PowerVanishes(3))));
    }

    #[test]
    fn non_minimal_presentation_is_trimmed() {
        let a = ring(&["x"], &["x^3"], Some(2));
        // R^2 / (e_1 - x e_2, x^2 e_2) is R/(x^2) on the second generator... after removing e_1
        let mut col1 = vec![0; 6];
        col1[0] = 1;
        col1[4] = 100;
        let mut col2 = vec![0; 6];
        col2[5] = 1;
        let pres = FreeMap::from_columns(3, 2, vec![col1, col2]).unwrap();
        let r = resolve(&FinModule::cokernel(&a, "M", pres), 4).unwrap();
        assert_eq!(r.betti(), vec![1, 1, 1, 1, 1]);
        assert_eq!(r.differential(1).column(0), elem(&a, "x^2").as_slice());
        r.verify().unwrap();
    }

    #[test]
    fn free_module_resolution_stops() {
        let a = ring(&["x", "y"], &["x^2", "y^2"], Some(2));
        let r = resolve(&FinModule::cokernel(&a, "R", FreeMap::zero(4, 1, 0)), 3).unwrap();
        assert_eq!(r.betti(), vec![1, 0, 0, 0]);
        assert_eq!(r.regularity_up_to().unwrap(), 0);
    }

    #[test]
    fn resource_guard_returns_partial() {
        let a = ring(&["x", "y", "z"], &["x^2", "y^2", "z^2", "x*y", "x*z", "y*z"], Some(1));
        let opts = ResolveOptions { max_entries: 1000 };
        match resolve_with(&FinModule::residue_field(&a), 8, &opts) {
            Err(ResolutionError::ResourceLimit { step, partial, .. }) => {
                assert_eq!(partial.depth(), step - 1);
                assert_eq!(partial.betti(), (0..step).map(|i| 3usize.pow(i as u32)).collect::<Vec<_>>());
            }
            other => panic!("expected the guard to trip, got {other:?}"),
        }
    }

    #[test]
    fn local_ring_is_not_graded() {
        let a = ring(&["x", "y"], &["x^2 - y^3", "y^4"], None);
        let r = resolve(&FinModule::residue_field(&a), 4).unwrap();
        r.verify().unwrap();
        assert!(matches!(r.graded_betti(), Err(ResolutionError::NotGraded)));
        // complete intersection of codimension 2
        assert_eq!(r.betti(), vec![1, 2, 3, 4, 5]);
    }
}
