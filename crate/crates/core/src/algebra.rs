//! Finite-dimensional local algebras `R = Q/(a + n^{N+1})` with `Q` a
//! polynomial ring over F_p localized at the origin.
//!
//! Normal forms are taken with respect to the ascending degree order on the
//! truncated coefficient space, so the pivot of every ideal element is its
//! lowest-degree term. With that choice the standard monomials are a basis
//! of `R` in which every power `m^s` is the span of the standard monomials
//! of degree `>= s`; the m-adic filtration is a coordinate filtration, and
//! the associated graded algebra has the same basis.

use thiserror::Error;

use crate::linalg::{Fp, FpScalar, LinalgError, Subquotient, Subspace};
use crate::poly::{monomials_of_degree, Monomial, PolyError, PolySpace, TruncatedPoly};

/// Largest truncation degree probed when detecting the socle bound.
pub const AUTO_TRUNCATION_LIMIT: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(
        "relation {index} has a nonzero term of degree {degree}; relations must lie in the square of the maximal ideal"
    )]
    RelationOrder { index: usize, degree: usize },
    #[error(transparent)]
    Field(#[from] LinalgError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("truncation degree must be at least 1")]
    InvalidTruncation,
    #[error("cap {cap} is below the required minimum {needed}")]
    CapTooSmall { cap: usize, needed: usize },
    #[error("no power n^(N+1) with N <= {0} lies in the ideal; give the truncation degree explicitly")]
    TruncationUndetected(usize),
    #[error("relation uses {got} variables, presentation has {expected}")]
    VariableCount { expected: usize, got: usize },
    #[error("inconsistent algebra structure: {0}")]
    Structure(String),
}

/// Generators of an ideal `a ⊆ n^2` in `Q = F_p[x_1..x_n]`, with the degree
/// `N` at which `m^{N+1} = 0` is enforced and the working cap `W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraPresentation {
    field: Fp,
    vars: Vec<String>,
    relations: Vec<TruncatedPoly>,
    truncation_degree: usize,
    cap: usize,
}

impl AlgebraPresentation {
    /// `truncation_degree = None` detects the socle bound; `cap = None`
    /// picks `max(N + 2, deg(relations) + 1)`.
    pub fn new(
        field: Fp,
        vars: Vec<String>,
        relations: Vec<TruncatedPoly>,
        truncation_degree: Option<usize>,
        cap: Option<usize>,
    ) -> Result<Self, AlgebraError> {
        let nvars = vars.len();
        for (index, r) in relations.iter().enumerate() {
            if r.nvars() != nvars {
                return Err(AlgebraError::VariableCount { expected: nvars, got: r.nvars() });
            }
            if r.field() != field {
                return Err(AlgebraError::Field(LinalgError::FieldMismatch(field.modulus(), r.field().modulus())));
            }
            if let Some(degree) = r.order().filter(|&d| d < 2) {
                return Err(AlgebraError::RelationOrder { index, degree });
            }
        }
        let max_deg = relations.iter().filter_map(TruncatedPoly::max_degree).max().unwrap_or(0);
        let n = match truncation_degree {
            Some(0) => return Err(AlgebraError::InvalidTruncation),
            Some(n) => n,
            None => detect_truncation_degree(field, nvars, &relations)?,
        };
        let needed = n + 2;
        let cap = match cap {
            Some(w) if w < needed => return Err(AlgebraError::CapTooSmall { cap: w, needed }),
            Some(w) => w,
            None => needed.max(max_deg + 1),
        };
        let relations = relations.iter().map(|r| r.with_cap(cap)).collect();
        Ok(AlgebraPresentation { field, vars, relations, truncation_degree: n, cap })
    }

    pub fn field(&self) -> Fp {
        self.field
    }
    pub fn vars(&self) -> &[String] {
        &self.vars
    }
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }
    pub fn relations(&self) -> &[TruncatedPoly] {
        &self.relations
    }
    pub fn truncation_degree(&self) -> usize {
        self.truncation_degree
    }
    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn is_homogeneous(&self) -> bool {
        self.relations.iter().all(TruncatedPoly::is_homogeneous)
    }

    pub fn space(&self) -> PolySpace {
        PolySpace::new(self.field, self.nvars(), self.cap)
    }

    /// Generators of the ideal actually analyzed: the relations together with
    /// every monomial of degree `N + 1`.
    pub fn truncated_ideal_generators(&self) -> Vec<TruncatedPoly> {
        let mut gens = self.relations.clone();
        gens.extend(
            monomials_of_degree(self.nvars(), self.truncation_degree + 1)
                .into_iter()
                .map(|m| TruncatedPoly::monomial(self.field, self.cap, m)),
        );
        gens
    }

    /// Whether `m^{N+1} = 0` had to be imposed, i.e. some monomial of degree
    /// `N + 1` lies outside the ideal of the relations.
    pub fn truncation_forced(&self) -> bool {
        !powers_contained(&self.space(), &self.relations, self.truncation_degree + 1)
    }

    pub fn display_relations(&self) -> Vec<String> {
        self.relations.iter().map(|r| r.display_with(&self.vars)).collect()
    }
}

fn powers_contained(space: &PolySpace, relations: &[TruncatedPoly], degree: usize) -> bool {
    let ideal = space.ideal_span(relations);
    monomials_of_degree(space.nvars(), degree)
        .iter()
        .all(|m| ideal.contains(&space.vector(&TruncatedPoly::monomial(space.field(), space.cap(), m.clone()))))
}

/// Smallest `N >= 1` with `n^{N+1}` inside the ideal of the relations. The
/// check runs modulo `n^{N+2}`, which suffices by Nakayama's lemma.
pub fn detect_truncation_degree(field: Fp, nvars: usize, relations: &[TruncatedPoly]) -> Result<usize, AlgebraError> {
    for n in 1..=AUTO_TRUNCATION_LIMIT {
        let space = PolySpace::new(field, nvars, n + 1);
        let rels: Vec<TruncatedPoly> = relations.iter().map(|r| r.with_cap(n + 1)).collect();
        if powers_contained(&space, &rels, n + 1) {
            return Ok(n);
        }
    }
    Err(AlgebraError::TruncationUndetected(AUTO_TRUNCATION_LIMIT))
}

#[derive(Debug, Clone)]
struct Presented {
    presentation: AlgebraPresentation,
    space: PolySpace,
    ideal: Subspace,
    /// Normal form of every monomial of the truncated space.
    monomial_nf: Vec<Vec<FpScalar>>,
}

/// A finite-dimensional commutative local F_p-algebra with a basis adapted
/// to its m-adic filtration.
#[derive(Debug, Clone)]
pub struct LocalAlgebra {
    field: Fp,
    var_names: Vec<String>,
    basis: Vec<TruncatedPoly>,
    order: Vec<usize>,
    /// `mult[(a * L + b) * L + c]`: coefficient of basis `c` in `basis_a * basis_b`.
    mult: Vec<FpScalar>,
    generators: Vec<Vec<FpScalar>>,
    filtration: Vec<Subspace>,
    hilbert: Vec<usize>,
    graded: bool,
    truncation_degree: usize,
    truncation_forced: bool,
    presented: Option<Presented>,
}

/// Builds `R = Q/(a + n^{N+1})` from its presentation.
pub fn build_algebra(pres: &AlgebraPresentation) -> Result<LocalAlgebra, AlgebraError> {
    let field = pres.field();
    let space = pres.space();
    let ideal = space.ideal_span(&pres.truncated_ideal_generators());
    let mut is_pivot = vec![false; space.dim()];
    for &p in ideal.pivots() {
        is_pivot[p] = true;
    }
    let standard: Vec<usize> = (0..space.dim()).filter(|&i| !is_pivot[i]).collect();
    let dim = standard.len();
    if standard.first() != Some(&0) {
        return Err(AlgebraError::Structure("the constant monomial is not a standard monomial".into()));
    }

    let monomial_nf: Vec<Vec<FpScalar>> = (0..space.dim())
        .map(|i| {
            let mut v = vec![0; space.dim()];
            v[i] = 1;
            ideal.reduce(&mut v);
            standard.iter().map(|&s| v[s]).collect()
        })
        .collect();

    let mut mult = vec![0; dim * dim * dim];
    for (a, &sa) in standard.iter().enumerate() {
        for (b, &sb) in standard.iter().enumerate() {
            let prod = space.monomial(sa).mul(space.monomial(sb));
            if let Some(idx) = space.index_of(&prod) {
                let base = (a * dim + b) * dim;
                mult[base..base + dim].copy_from_slice(&monomial_nf[idx]);
            }
        }
    }

    let basis: Vec<TruncatedPoly> =
        standard.iter().map(|&s| TruncatedPoly::monomial(field, pres.cap(), space.monomial(s).clone())).collect();
    let order: Vec<usize> = standard.iter().map(|&s| space.monomial(s).degree()).collect();
    let generators: Vec<Vec<FpScalar>> = (0..pres.nvars())
        .map(|i| monomial_nf[space.index_of(&Monomial::var(pres.nvars(), i)).unwrap()].clone())
        .collect();

    let alg = LocalAlgebra::from_parts(
        field,
        pres.vars().to_vec(),
        basis,
        order,
        mult,
        generators,
        pres.is_homogeneous(),
        pres.truncation_degree(),
        pres.truncation_forced(),
    )?;

    // m^s as the image of the monomials of degree >= s must agree with the
    // coordinate filtration derived from the basis.
    for s in 0..=pres.truncation_degree() + 1 {
        let image = Subspace::from_vectors(
            field,
            dim,
            (0..space.dim()).filter(|&i| space.monomial(i).degree() >= s).map(|i| monomial_nf[i].clone()).collect(),
        );
        if image != alg.filtration[s] {
            return Err(AlgebraError::Structure(format!("image of n^{s} disagrees with the basis filtration")));
        }
    }

    Ok(LocalAlgebra { presented: Some(Presented { presentation: pres.clone(), space, ideal, monomial_nf }), ..alg })
}

impl LocalAlgebra {
    /// Assembles an algebra from a multiplication table and basis orders,
    /// checking that the unit is `basis[0]`, that the table is commutative,
    /// and that `m^s` is spanned by the basis elements of order `>= s`.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        field: Fp,
        var_names: Vec<String>,
        basis: Vec<TruncatedPoly>,
        order: Vec<usize>,
        mult: Vec<FpScalar>,
        generators: Vec<Vec<FpScalar>>,
        graded: bool,
        truncation_degree: usize,
        truncation_forced: bool,
    ) -> Result<Self, AlgebraError> {
        let dim = basis.len();
        if dim == 0 || order.len() != dim || mult.len() != dim * dim * dim {
            return Err(AlgebraError::Structure("table shape does not match the basis".into()));
        }
        if order[0] != 0 || order[1..].contains(&0) {
            return Err(AlgebraError::Structure("basis[0] must be the only unit basis element".into()));
        }
        let top = order.iter().copied().max().unwrap_or(0);
        if top > truncation_degree {
            return Err(AlgebraError::Structure("basis order exceeds the truncation degree".into()));
        }
        for b in 0..dim {
            let row = &mult[b * dim..(b + 1) * dim];
            if row.iter().enumerate().any(|(c, &v)| v != u32::from(c == b)) {
                return Err(AlgebraError::Structure("basis[0] does not act as the identity".into()));
            }
        }
        for a in 0..dim {
            for b in 0..a {
                let ab = &mult[(a * dim + b) * dim..(a * dim + b + 1) * dim];
                let ba = &mult[(b * dim + a) * dim..(b * dim + a + 1) * dim];
                if ab != ba {
                    return Err(AlgebraError::Structure(format!("basis elements {a} and {b} do not commute")));
                }
                if ab.iter().enumerate().any(|(c, &v)| v != 0 && order[c] < order[a] + order[b]) {
                    return Err(AlgebraError::Structure("multiplication does not respect the filtration".into()));
                }
            }
        }

        let filtration: Vec<Subspace> = (0..=truncation_degree + 1)
            .map(|s| Subspace::coordinate(field, dim, (0..dim).filter(|&b| order[b] >= s)))
            .collect();
        let hilbert: Vec<usize> = (0..=truncation_degree).map(|s| order.iter().filter(|&&o| o == s).count()).collect();

        let alg = LocalAlgebra {
            field,
            var_names,
            basis,
            order,
            mult,
            generators,
            filtration,
            hilbert,
            graded,
            truncation_degree,
            truncation_forced,
            presented: None,
        };

        // m^s computed from products must match the coordinate filtration.
        let mut power = alg.filtration[1].clone();
        for s in 2..=truncation_degree + 1 {
            let mut vecs = Vec::new();
            for a in (0..dim).filter(|&a| alg.order[a] >= 1) {
                for i in 0..power.dim() {
                    vecs.push(alg.mul_basis_left(a, power.basis_vector(i)));
                }
            }
            power = Subspace::from_vectors(field, dim, vecs);
            if power != alg.filtration[s] {
                return Err(AlgebraError::Structure(format!("m^{s} is not spanned by basis elements of order >= {s}")));
            }
        }
        let gens = Subspace::from_vectors(field, dim, alg.generators.clone());
        if !alg.filtration[1].contains_subspace(&gens) || gens.sum(&alg.filtration[2]) != alg.filtration[1] {
            return Err(AlgebraError::Structure("generators do not span m/m^2".into()));
        }
        Ok(alg)
    }

    pub fn field(&self) -> Fp {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }
    pub fn basis(&self) -> &[TruncatedPoly] {
        &self.basis
    }
    /// m-adic order of each basis element.
    pub fn orders(&self) -> &[usize] {
        &self.order
    }
    pub fn order_of(&self, b: usize) -> usize {
        self.order[b]
    }
    /// Images of the variables, a minimal generating set of `m`.
    pub fn generators(&self) -> &[Vec<FpScalar>] {
        &self.generators
    }
    /// `filtration[s] = m^s` for `s = 0..=N+1`.
    pub fn filtration(&self) -> &[Subspace] {
        &self.filtration
    }
    pub fn is_graded(&self) -> bool {
        self.graded
    }
    pub fn truncation_degree(&self) -> usize {
        self.truncation_degree
    }
    pub fn truncation_forced(&self) -> bool {
        self.truncation_forced
    }
    pub fn presentation(&self) -> Option<&AlgebraPresentation> {
        self.presented.as_ref().map(|p| &p.presentation)
    }

    pub fn hilbert_series(&self) -> &[usize] {
        &self.hilbert
    }

    /// For an Artinian algebra the multiplicity is the length.
    pub fn multiplicity(&self) -> usize {
        self.dim()
    }

    pub fn edim(&self) -> usize {
        self.hilbert.get(1).copied().unwrap_or(0)
    }

    pub fn socle_degree(&self) -> usize {
        self.hilbert.iter().rposition(|&h| h != 0).unwrap_or(0)
    }

    pub fn one(&self) -> Vec<FpScalar> {
        let mut v = vec![0; self.dim()];
        v[0] = 1;
        v
    }

    /// `basis_a * basis_b` in coordinates.
    #[inline]
    pub fn basis_product(&self, a: usize, b: usize) -> &[FpScalar] {
        let l = self.dim();
        &self.mult[(a * l + b) * l..(a * l + b + 1) * l]
    }

    fn mul_basis_left(&self, a: usize, v: &[FpScalar]) -> Vec<FpScalar> {
        let mut out = vec![0; self.dim()];
        for (b, &c) in v.iter().enumerate() {
            self.field.axpy(&mut out, c, self.basis_product(a, b));
        }
        out
    }

    pub fn mul(&self, x: &[FpScalar], y: &[FpScalar]) -> Vec<FpScalar> {
        let mut out = vec![0; self.dim()];
        self.mul_acc(&mut out, x, y);
        out
    }

    /// `out += x * y`.
    pub fn mul_acc(&self, out: &mut [FpScalar], x: &[FpScalar], y: &[FpScalar]) {
        let f = self.field;
        for (a, &ca) in x.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (b, &cb) in y.iter().enumerate() {
                if cb != 0 {
                    f.axpy(out, f.mul(ca, cb), self.basis_product(a, b));
                }
            }
        }
    }

    /// Normal form of a polynomial in the presentation's variables.
    pub fn normal_form(&self, p: &TruncatedPoly) -> Option<Vec<FpScalar>> {
        let pr = self.presented.as_ref()?;
        let mut out = vec![0; self.dim()];
        for (m, c) in p.terms() {
            if let Some(i) = pr.space.index_of(m) {
                self.field.axpy(&mut out, c, &pr.monomial_nf[i]);
            }
        }
        Some(out)
    }

    /// Polynomial representative of an element.
    pub fn element_poly(&self, v: &[FpScalar]) -> TruncatedPoly {
        let cap = self.basis[0].cap();
        let mut out = TruncatedPoly::zero(self.field, self.var_names.len(), cap);
        for (b, &c) in v.iter().enumerate() {
            if c != 0 {
                out = out.add(&self.basis[b].scale(c)).expect("basis shares a cap");
            }
        }
        out
    }

    pub fn display_element(&self, v: &[FpScalar]) -> String {
        self.element_poly(v).display_with(&self.var_names)
    }

    /// The truncated ideal `a + n^{N+1}` as a subspace of the coefficient space.
    pub fn ideal_subspace(&self) -> Option<(&PolySpace, &Subspace)> {
        self.presented.as_ref().map(|p| (&p.space, &p.ideal))
    }

    /// Checks commutativity and associativity on every basis pair and triple.
    pub fn check_structure(&self) -> Result<(), AlgebraError> {
        let l = self.dim();
        for a in 0..l {
            for b in 0..l {
                if self.basis_product(a, b) != self.basis_product(b, a) {
                    return Err(AlgebraError::Structure(format!("{a}*{b} != {b}*{a}")));
                }
                for c in 0..l {
                    let ab_c = self.mul_basis_left(c, self.basis_product(a, b));
                    let bc = self.basis_product(b, c);
                    let a_bc = self.mul_basis_left(a, bc);
                    if ab_c != a_bc {
                        return Err(AlgebraError::Structure(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `gr R = ⊕ m^s/m^{s+1}` with the leading-form product.
///
/// Computed from the filtration subquotients: the product of classes of
/// degrees `s` and `t` is the class of the product in `m^{s+t}/m^{s+t+1}`.
pub fn associated_graded(a: &LocalAlgebra) -> Result<LocalAlgebra, AlgebraError> {
    let f = a.field();
    let top = a.truncation_degree();
    let pieces: Vec<Subquotient> =
        (0..=top).map(|s| Subquotient::new(&a.filtration[s], &a.filtration[s + 1])).collect::<Result<_, _>>()?;
    let offsets: Vec<usize> = pieces
        .iter()
        .scan(0, |acc, p| {
            let o = *acc;
            *acc += p.dim();
            Some(o)
        })
        .collect();
    let dim: usize = pieces.iter().map(Subquotient::dim).sum();

    let mut reps = Vec::with_capacity(dim);
    let mut order = Vec::with_capacity(dim);
    let mut basis = Vec::with_capacity(dim);
    for (s, piece) in pieces.iter().enumerate() {
        for i in 0..piece.dim() {
            let rep = piece.representative(i).to_vec();
            basis.push(a.element_poly(&rep).homogeneous_part(s));
            reps.push(rep);
            order.push(s);
        }
    }

    let mut mult = vec![0; dim * dim * dim];
    for x in 0..dim {
        for y in 0..dim {
            let d = order[x] + order[y];
            if d > top {
                continue;
            }
            let prod = a.mul(&reps[x], &reps[y]);
            let coords = pieces[d]
                .coordinates(&{
                    // drop the part in m^{d+1} before reading the class
                    let mut v = prod;
                    a.filtration[d + 1].reduce(&mut v);
                    v
                })
                .ok_or_else(|| AlgebraError::Structure("product left the expected filtration piece".into()))?;
            let base = (x * dim + y) * dim + offsets[d];
            mult[base..base + coords.len()].copy_from_slice(&coords);
        }
    }

    let generators = a
        .generators()
        .iter()
        .map(|g| {
            let mut v = vec![0; dim];
            if let Some(c) = pieces.get(1).and_then(|p| {
                let mut w = g.clone();
                a.filtration[2].reduce(&mut w);
                p.coordinates(&w)
            }) {
                v[offsets[1]..offsets[1] + c.len()].copy_from_slice(&c);
            }
            v
        })
        .collect();

    LocalAlgebra::from_parts(
        f,
        a.var_names().to_vec(),
        basis,
        order,
        mult,
        generators,
        true,
        top,
        a.truncation_forced(),
    )
}
