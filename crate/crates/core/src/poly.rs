//! Degree-truncated polynomials over F_p and ideals viewed as subspaces of
//! the truncated coefficient space `Q / n^{W+1}`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::linalg::{Fp, FpMatrix, FpScalar, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("truncation caps differ: {0} vs {1}")]
    CapMismatch(usize, usize),
    #[error("variable counts differ: {0} vs {1}")]
    VarMismatch(usize, usize),
    #[error("column {col}: {msg}")]
    Parse { col: usize, msg: String },
    #[error("column {col}: unknown variable `{name}`")]
    UnknownVariable { col: usize, name: String },
}

/// Exponent vector. Ordered by total degree, ties broken so that larger
/// exponent vectors come first: `x^2 < x*y < y^2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn display_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(names)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, n)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// All monomials of total degree `d` in `nvars` variables, in the global order.
pub fn monomials_of_degree(nvars: usize, d: usize) -> Vec<Monomial> {
    fn rec(nvars: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == nvars {
            prefix.push(d);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(nvars, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(nvars, d as u32, &mut Vec::with_capacity(nvars), &mut out);
    out
}

/// Element of `F_p[x_1..x_n] / n^{cap+1}`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedPoly {
    field: Fp,
    nvars: usize,
    cap: usize,
    terms: BTreeMap<Monomial, FpScalar>,
}

impl fmt::Debug for TruncatedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "{} (cap {})", self.display_with(&names), self.cap)
    }
}

impl TruncatedPoly {
    pub fn zero(field: Fp, nvars: usize, cap: usize) -> Self {
        TruncatedPoly { field, nvars, cap, terms: BTreeMap::new() }
    }

    pub fn constant(field: Fp, nvars: usize, cap: usize, c: FpScalar) -> Self {
        Self::from_terms(field, nvars, cap, [(Monomial::one(nvars), c)])
    }

    pub fn monomial(field: Fp, cap: usize, m: Monomial) -> Self {
        let nvars = m.nvars();
        Self::from_terms(field, nvars, cap, [(m, 1)])
    }

    /// Sums the given terms, dropping anything above `cap` and zero coefficients.
    pub fn from_terms(
        field: Fp,
        nvars: usize,
        cap: usize,
        terms: impl IntoIterator<Item = (Monomial, FpScalar)>,
    ) -> Self {
        let mut out = Self::zero(field, nvars, cap);
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: FpScalar) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if m.degree() > self.cap || c.is_multiple_of(self.field.modulus()) {
            return;
        }
        let f = self.field;
        let c = c % f.modulus();
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = f.add(*v, c);
                if *v == 0 {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn field(&self) -> Fp {
        self.field
    }
    pub fn nvars(&self) -> usize {
        self.nvars
    }
    pub fn cap(&self) -> usize {
        self.cap
    }
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, FpScalar)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> FpScalar {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// Lowest degree of a nonzero term; `None` for zero.
    pub fn order(&self) -> Option<usize> {
        self.terms.keys().next().map(Monomial::degree)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Degree-`d` component.
    pub fn homogeneous_part(&self, d: usize) -> TruncatedPoly {
        TruncatedPoly {
            field: self.field,
            nvars: self.nvars,
            cap: self.cap,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, &c)| (m.clone(), c)).collect(),
        }
    }

    /// Same polynomial under a different cap (terms above it are dropped).
    pub fn with_cap(&self, cap: usize) -> TruncatedPoly {
        Self::from_terms(self.field, self.nvars, cap, self.terms.iter().map(|(m, &c)| (m.clone(), c)))
    }

    fn check_compatible(&self, other: &TruncatedPoly) -> Result<(), PolyError> {
        if self.cap != other.cap {
            return Err(PolyError::CapMismatch(self.cap, other.cap));
        }
        if self.nvars != other.nvars {
            return Err(PolyError::VarMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncatedPoly) -> Result<TruncatedPoly, PolyError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: FpScalar) -> TruncatedPoly {
        let f = self.field;
        Self::from_terms(f, self.nvars, self.cap, self.terms.iter().map(|(m, &v)| (m.clone(), f.mul(v, c))))
    }

    pub fn mul(&self, other: &TruncatedPoly) -> Result<TruncatedPoly, PolyError> {
        poly_mul(self, other)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> TruncatedPoly {
        Self::from_terms(self.field, self.nvars, self.cap, self.terms.iter().map(|(t, &c)| (t.mul(m), c)))
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, &c)) in self.terms.iter().enumerate() {
            let v = self.field.lift(c);
            let (sign, mag) = if v < 0 { ("-", -v) } else { ("+", v) };
            if i == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let mono = m.display_with(names);
            match (mag, mono.as_str()) {
                (_, "1") => out.push_str(&mag.to_string()),
                (1, _) => out.push_str(&mono),
                _ => out.push_str(&format!("{mag}*{mono}")),
            }
        }
        out
    }
}

/// Product with every term above the common cap discarded.
pub fn poly_mul(a: &TruncatedPoly, b: &TruncatedPoly) -> Result<TruncatedPoly, PolyError> {
    a.check_compatible(b)?;
    let f = a.field;
    let mut out = TruncatedPoly::zero(f, a.nvars, a.cap);
    for (ma, &ca) in &a.terms {
        for (mb, &cb) in &b.terms {
            if ma.degree() + mb.degree() <= a.cap {
                out.add_term(ma.mul(mb), f.mul(ca, cb));
            }
        }
    }
    Ok(out)
}

/// The coefficient space of `F_p[x_1..x_n] / n^{cap+1}` with monomials
/// indexed in the global order (so index 0 is the constant monomial).
#[derive(Clone, Debug)]
pub struct PolySpace {
    field: Fp,
    nvars: usize,
    cap: usize,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl PolySpace {
    pub fn new(field: Fp, nvars: usize, cap: usize) -> Self {
        let monomials: Vec<Monomial> = (0..=cap).flat_map(|d| monomials_of_degree(nvars, d)).collect();
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        PolySpace { field, nvars, cap, monomials, index }
    }

    pub fn field(&self) -> Fp {
        self.field
    }
    pub fn nvars(&self) -> usize {
        self.nvars
    }
    pub fn cap(&self) -> usize {
        self.cap
    }
    pub fn dim(&self) -> usize {
        self.monomials.len()
    }
    pub fn monomial(&self, i: usize) -> &Monomial {
        &self.monomials[i]
    }
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }
    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn vector(&self, p: &TruncatedPoly) -> Vec<FpScalar> {
        let mut v = vec![0; self.dim()];
        for (m, c) in p.terms() {
            if let Some(i) = self.index_of(m) {
                v[i] = c;
            }
        }
        v
    }

    pub fn poly(&self, v: &[FpScalar]) -> TruncatedPoly {
        TruncatedPoly::from_terms(
            self.field,
            self.nvars,
            self.cap,
            v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (self.monomials[i].clone(), c)),
        )
    }

    /// Span of `{g·m : g ∈ gens, m a monomial}` truncated at the cap.
    pub fn ideal_span(&self, gens: &[TruncatedPoly]) -> Subspace {
        let mut rows = Vec::new();
        for g in gens {
            let g = g.with_cap(self.cap);
            let Some(ord) = g.order() else { continue };
            for m in self.monomials.iter().take_while(|m| m.degree() + ord <= self.cap) {
                rows.push(self.vector(&g.mul_monomial(m)));
            }
        }
        let m = FpMatrix::from_rows(self.field, self.dim(), rows).expect("rows sized to the space");
        Subspace::row_space(&m)
    }

    /// `n^s` for `s = 0..=cap+1`: element `s` is spanned by monomials of degree `>= s`.
    pub fn order_filtration(&self) -> Vec<Subspace> {
        (0..=self.cap + 1).map(|s| self.power_of_maximal_ideal(s)).collect()
    }

    pub fn power_of_maximal_ideal(&self, s: usize) -> Subspace {
        Subspace::coordinate(
            self.field,
            self.dim(),
            self.monomials.iter().enumerate().filter(|(_, m)| m.degree() >= s).map(|(i, _)| i),
        )
    }
}

/// Parses `"x^2 - 3*x*y + y^2"` over the given variables. Terms of degree
/// above `cap` are dropped.
pub fn parse_poly(text: &str, vars: &[String], field: Fp, cap: usize) -> Result<TruncatedPoly, PolyError> {
    Parser { src: text.as_bytes(), pos: 0, vars, field }.poly(cap)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [String],
    field: Fp,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Parse { col: self.pos + 1, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<u64, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        if s.is_empty() {
            return self.err("expected a number");
        }
        s.parse::<u64>().or_else(|_| {
            self.pos = start;
            self.err("number too large")
        })
    }

    fn ident(&mut self) -> Result<(usize, String), PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        Ok((start, String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()))
    }

    fn factor(&mut self, exps: &mut [u32], coeff: &mut FpScalar) -> Result<(), PolyError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                *coeff = self.field.mul(*coeff, (n % self.field.modulus() as u64) as u32);
                Ok(())
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let (start, name) = self.ident()?;
                let Some(i) = self.vars.iter().position(|v| *v == name) else {
                    return Err(PolyError::UnknownVariable { col: start + 1, name });
                };
                let mut e = 1u64;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    e = self.number()?;
                }
                exps[i] = exps[i].saturating_add(e.min(u32::MAX as u64) as u32);
                Ok(())
            }
            Some(_) => self.err("expected a coefficient or variable"),
            None => self.err("unexpected end of input"),
        }
    }

    fn term(&mut self) -> Result<(Monomial, FpScalar), PolyError> {
        let mut exps = vec![0u32; self.vars.len()];
        let mut coeff = 1 % self.field.modulus();
        self.factor(&mut exps, &mut coeff)?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.factor(&mut exps, &mut coeff)?;
        }
        Ok((Monomial(exps), coeff))
    }

    fn poly(mut self, cap: usize) -> Result<TruncatedPoly, PolyError> {
        let nvars = self.vars.len();
        let mut out = TruncatedPoly::zero(self.field, nvars, cap);
        let mut negate = false;
        if let Some(b'-' | b'+') = self.peek() {
            negate = self.src[self.pos] == b'-';
            self.pos += 1;
        }
        loop {
            let (m, c) = self.term()?;
            let c = if negate { self.field.neg(c) } else { c };
            if m.0.iter().map(|&e| e as u64).sum::<u64>() <= cap as u64 {
                out.add_term(m, c);
            }
            match self.peek() {
                None => break,
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                Some(_) => return self.err("expected `+`, `-` or end of polynomial"),
            }
            self.pos += 1;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f101() -> Fp {
        Fp::new(101).unwrap()
    }

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn p(text: &str, vars: &[&str], cap: usize) -> TruncatedPoly {
        parse_poly(text, &names(vars), f101(), cap).unwrap()
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(2, 0), vec![Monomial::new(vec![0, 0])]);
        assert_eq!(
            monomials_of_degree(2, 2),
            vec![Monomial::new(vec![2, 0]), Monomial::new(vec![1, 1]), Monomial::new(vec![0, 2])]
        );
        assert_eq!(
            monomials_of_degree(3, 1),
            vec![Monomial::new(vec![1, 0, 0]), Monomial::new(vec![0, 1, 0]), Monomial::new(vec![0, 0, 1])]
        );
        assert_eq!(monomials_of_degree(3, 4).len(), 15);
    }

    #[test]
    fn enumeration_is_sorted() {
        let all: Vec<Monomial> = (0..5).flat_map(|d| monomials_of_degree(3, d)).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn products() {
        let xy = ["x", "y"];
        assert_eq!(p("1 + x", &xy, 2).mul(&p("1", &xy, 2)).unwrap(), p("1 + x", &xy, 2));
        assert!(p("x", &xy, 1).mul(&p("x", &xy, 1)).unwrap().is_zero());
        let s = p("x + y", &xy, 2);
        assert_eq!(s.mul(&s).unwrap(), p("x^2 + 2*x*y + y^2", &xy, 2));
        assert_eq!(p("x", &xy, 2).mul(&p("x", &xy, 3)), Err(PolyError::CapMismatch(2, 3)));
    }

    #[test]
    fn parse_and_display() {
        let xy = names(&["x", "y"]);
        let q = p("x^2 - 3*x*y + y^2", &["x", "y"], 4);
        assert_eq!(q.display_with(&xy), "x^2 - 3*x*y + y^2");
        assert_eq!(q.coefficient(&Monomial::new(vec![1, 1])), 98);
        assert_eq!(p("-x^2 + 2", &["x", "y"], 4).display_with(&xy), "2 - x^2");
        assert_eq!(p("x*x*y", &["x", "y"], 4), p("x^2*y", &["x", "y"], 4));
        assert_eq!(p("2*x*3", &["x", "y"], 4), p("6*x", &["x", "y"], 4));
        assert!(p("x^2 - x^2", &["x", "y"], 4).is_zero());
        assert!(p("x^5", &["x", "y"], 4).is_zero());
    }

    #[test]
    fn parse_errors() {
        let xy = names(&["x", "y"]);
        assert_eq!(parse_poly("x + z", &xy, f101(), 3), Err(PolyError::UnknownVariable { col: 5, name: "z".into() }));
        assert!(matches!(parse_poly("x +", &xy, f101(), 3), Err(PolyError::Parse { .. })));
        assert!(matches!(parse_poly("x y", &xy, f101(), 3), Err(PolyError::Parse { .. })));
        assert!(matches!(parse_poly("x^", &xy, f101(), 3), Err(PolyError::Parse { .. })));
        assert!(matches!(parse_poly("", &xy, f101(), 3), Err(PolyError::Parse { .. })));
    }

    #[test]
    fn ideal_spans() {
        let f = f101();
        let sp1 = PolySpace::new(f, 1, 4);
        assert_eq!(sp1.ideal_span(&[p("1", &["x"], 4)]).dim(), 5);
        let sq = sp1.ideal_span(&[p("x^2", &["x"], 4)]);
        assert_eq!(sq.dim(), 3);
        assert_eq!(sq, Subspace::coordinate(f, 5, [2, 3, 4]));

        let sp2 = PolySpace::new(f, 2, 3);
        let xy = ["x", "y"];
        let i = sp2.ideal_span(&[p("x^2", &xy, 3), p("y^2", &xy, 3)]);
        assert_eq!(i.dim(), 6);
        // degree 2: x^2, y^2; degree 3: all four cubics
        let idx = |e: Vec<u32>| sp2.index_of(&Monomial::new(e)).unwrap();
        assert_eq!(
            i,
            Subspace::coordinate(
                f,
                sp2.dim(),
                [idx(vec![2, 0]), idx(vec![0, 2]), idx(vec![3, 0]), idx(vec![2, 1]), idx(vec![1, 2]), idx(vec![0, 3])]
            )
        );
    }

    #[test]
    fn order_filtrations() {
        let f = f101();
        let sp = PolySpace::new(f, 1, 3);
        let filt = sp.order_filtration();
        assert_eq!(filt.len(), 5);
        assert_eq!(filt[0].dim(), 4);
        assert_eq!(filt[2], Subspace::coordinate(f, 4, [2, 3]));
        assert_eq!(filt[4].dim(), 0);
        let sp2 = PolySpace::new(f, 2, 2);
        assert_eq!(sp2.order_filtration()[2].dim(), 3);
    }
}
