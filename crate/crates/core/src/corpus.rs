//! Built-in example rings with their expected invariants.

use crate::invariants::{SInvariant, YonedaVerdict};
use crate::lindefect::LinearityDefect;
use crate::report::RingReport;

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// A closed formula or theorem from the literature applied to this ring.
    Theorem(&'static str),
    /// Read off the presentation by inspection.
    Immediate,
    /// An independent computation, named.
    Oracle(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BettiPattern {
    Ones,
    Linear,
    PowersOfTwo,
}

impl BettiPattern {
    pub fn value(self, i: usize) -> usize {
        match self {
            BettiPattern::Ones => 1,
            BettiPattern::Linear => i + 1,
            BettiPattern::PowersOfTwo => 1 << i,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expected {
    Hilbert(&'static [usize]),
    Graded(bool),
    BettiK(BettiPattern),
    /// `Some(0)` for Koszul, `None` for `at_least(D)`.
    LdK(Option<usize>),
    S(usize),
    CompleteIntersection {
        codim: Option<usize>,
    },
    Multiplicity(usize),
    CiMinimal(bool),
    CmMinimal(bool),
    Golod(bool),
    Koszul(bool),
    Yoneda(YonedaVerdict),
    /// `ν^1_i(k) != 0` exactly at even `i` of the table.
    FirstNuEvenRows,
}

#[derive(Debug, Clone, Copy)]
pub struct Expectation {
    pub value: Expected,
    pub provenance: Provenance,
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub vars: &'static [&'static str],
    pub relations: &'static [&'static str],
    pub expectations: Vec<Expectation>,
}

const CI_POINCARE: Provenance = Provenance::Theorem("Poincaré series (1+t)^e/(1-t^2)^c of a complete intersection");
const CI_MINIMAL: Provenance = Provenance::Theorem("complete intersection: ld(k) = 0 iff e = 2^c");
const HYPERSURFACE_GOLOD: Provenance = Provenance::Theorem("hypersurfaces are Golod");
const SQUARE_ZERO: Provenance = Provenance::Theorem("m^2 = 0: resolution of k is linear with P_k = 1/(1 - e t)");
const KOSZUL_NU: Provenance = Provenance::Theorem("ld(k) = 0 iff every ν(k) vanishes");
const RESOLUTION: Provenance = Provenance::Oracle("direct resolution, compared with the Serre bound");
const HAND_S: Provenance = Provenance::Oracle("hand comparison of a ∩ n^{i+2} with n·a");
const COUNT: Provenance = Provenance::Oracle("normal-form monomial count");

fn e(value: Expected, provenance: Provenance) -> Expectation {
    Expectation { value, provenance }
}

pub fn entries() -> Vec<CorpusEntry> {
    use BettiPattern::*;
    use Expected::*;
    use Provenance::*;
    vec![
        CorpusEntry {
            name: "K1",
            description: "Koszul complete intersection of minimal multiplicity",
            vars: &["x", "y"],
            relations: &["x^2", "y^2"],
            expectations: vec![
                e(Hilbert(&[1, 2, 1]), COUNT),
                e(Graded(true), Immediate),
                e(BettiK(Linear), CI_POINCARE),
                e(LdK(Some(0)), CI_MINIMAL),
                e(S(1), Oracle("quadratic relations")),
                e(CompleteIntersection { codim: Some(2) }, Immediate),
                e(Multiplicity(4), COUNT),
                e(CiMinimal(true), Immediate),
                e(CmMinimal(false), Immediate),
                e(Golod(false), Theorem("a complete intersection of codimension 2 is not Golod")),
                e(Koszul(true), Oracle("monomial quadratic relations")),
                e(Yoneda(YonedaVerdict::EqualsDual), KOSZUL_NU),
            ],
        },
        CorpusEntry {
            name: "H3",
            description: "non-Koszul Golod hypersurface",
            vars: &["x"],
            relations: &["x^3"],
            expectations: vec![
                e(Hilbert(&[1, 1, 1]), COUNT),
                e(Graded(true), Immediate),
                e(BettiK(Ones), CI_POINCARE),
                e(LdK(None), CI_MINIMAL),
                e(S(2), HAND_S),
                e(CompleteIntersection { codim: Some(1) }, Immediate),
                e(Multiplicity(3), COUNT),
                e(CiMinimal(false), Immediate),
                e(CmMinimal(false), Immediate),
                e(Golod(true), HYPERSURFACE_GOLOD),
                e(Koszul(false), Oracle("the x^2 syzygy has internal degree 3")),
                e(Yoneda(YonedaVerdict::NoFiniteGenerationDetected), Oracle("period-2 resolution with maps x, x^2")),
                e(FirstNuEvenRows, Oracle("period-2 resolution with maps x, x^2")),
            ],
        },
        CorpusEntry {
            name: "T2",
            description: "square-zero maximal ideal, Golod and Koszul",
            vars: &["x", "y"],
            relations: &["x^2", "x*y", "y^2"],
            expectations: vec![
                e(Hilbert(&[1, 2]), COUNT),
                e(Graded(true), Immediate),
                e(BettiK(PowersOfTwo), SQUARE_ZERO),
                e(LdK(Some(0)), SQUARE_ZERO),
                e(S(1), Oracle("quadratic relations")),
                e(CompleteIntersection { codim: None }, Oracle("three minimal relations in two variables")),
                e(Multiplicity(3), COUNT),
                e(CmMinimal(true), Immediate),
                e(Golod(true), SQUARE_ZERO),
                e(Koszul(true), SQUARE_ZERO),
                e(Yoneda(YonedaVerdict::EqualsDual), KOSZUL_NU),
            ],
        },
        CorpusEntry {
            name: "K2",
            description: "binomial complete intersection of minimal multiplicity",
            vars: &["x", "y"],
            relations: &["x^2 - y^2", "x*y"],
            expectations: vec![
                e(Hilbert(&[1, 2, 1]), COUNT),
                e(Graded(true), Immediate),
                e(BettiK(Linear), CI_POINCARE),
                e(LdK(Some(0)), CI_MINIMAL),
                e(S(1), Oracle("quadratic relations")),
                e(CompleteIntersection { codim: Some(2) }, Immediate),
                e(Multiplicity(4), COUNT),
                e(CiMinimal(true), Immediate),
                e(Golod(false), Theorem("a complete intersection of codimension 2 is not Golod")),
                e(Koszul(true), CI_MINIMAL),
                e(Yoneda(YonedaVerdict::EqualsDual), KOSZUL_NU),
            ],
        },
        CorpusEntry {
            name: "X4",
            description: "hypersurface with a quartic relation",
            vars: &["x"],
            relations: &["x^4"],
            expectations: vec![
                e(Hilbert(&[1, 1, 1, 1]), COUNT),
                e(BettiK(Ones), CI_POINCARE),
                e(LdK(None), CI_MINIMAL),
                e(S(3), HAND_S),
                e(CompleteIntersection { codim: Some(1) }, Immediate),
                e(Multiplicity(4), COUNT),
                e(CiMinimal(false), Immediate),
                e(Golod(true), HYPERSURFACE_GOLOD),
                e(FirstNuEvenRows, Oracle("period-2 resolution with maps x, x^3")),
            ],
        },
        CorpusEntry {
            name: "M3",
            description: "monomial ring with a cubic relation",
            vars: &["x", "y"],
            relations: &["x^2", "x*y", "y^3"],
            expectations: vec![
                e(Hilbert(&[1, 2, 1]), COUNT),
                e(BettiK(PowersOfTwo), RESOLUTION),
                e(LdK(None), RESOLUTION),
                e(S(2), HAND_S),
                e(CompleteIntersection { codim: None }, Oracle("three minimal relations in two variables")),
                e(Multiplicity(4), COUNT),
            ],
        },
        CorpusEntry {
            name: "G1",
            description: "non-homogeneous complete intersection with a non-quadratic tangent cone",
            vars: &["x", "y"],
            relations: &["x^2 - y^3", "y^4"],
            expectations: vec![
                e(Hilbert(&[1, 2, 2, 2, 1]), Oracle("free of rank 2 over F[y]/(y^4) with basis 1, x")),
                e(Graded(false), Immediate),
                e(BettiK(Linear), CI_POINCARE),
                e(LdK(None), CI_MINIMAL),
                e(S(3), HAND_S),
                e(CompleteIntersection { codim: Some(2) }, Immediate),
                e(Multiplicity(8), Oracle("free of rank 2 over F[y]/(y^4) with basis 1, x")),
                e(CiMinimal(false), Immediate),
                e(Koszul(false), Oracle("the tangent cone has a relation of degree above two")),
            ],
        },
    ]
}

pub fn entry(name: &str) -> Option<CorpusEntry> {
    entries().into_iter().find(|e| e.name.eq_ignore_ascii_case(name))
}

impl CorpusEntry {
    /// The entry as a ring-spec file over `F_p`.
    pub fn spec_text(&self, p: u64) -> String {
        format!(
            "# {}: {}\nfield: {p}\nvars: {}\nrelations: {}\ntruncate: auto\ncap: auto\n",
            self.name,
            self.description,
            self.vars.join(", "),
            self.relations.join("; ")
        )
    }

    /// Expectations the report contradicts, as readable lines.
    pub fn mismatches(&self, r: &RingReport) -> Vec<String> {
        self.expectations.iter().filter_map(|x| mismatch(x.value, r)).collect()
    }
}

fn mismatch(x: Expected, r: &RingReport) -> Option<String> {
    let v = &r.verdicts;
    let want = |ok: bool, what: String| if ok { None } else { Some(what) };
    match x {
        Expected::Hilbert(h) => {
            want(r.algebra.hilbert == h, format!("hilbert {:?}, expected {h:?}", r.algebra.hilbert))
        }
        Expected::Graded(g) => want(r.algebra.graded == g, format!("graded {}, expected {g}", r.algebra.graded)),
        Expected::BettiK(p) => {
            let b = &r.resolutions.get("k")?.betti;
            let ok = b.iter().enumerate().all(|(i, &x)| x == p.value(i));
            want(ok, format!("betti(k) {b:?}, expected {p:?}"))
        }
        Expected::LdK(d) => {
            let ld = r.ld("k");
            let expected = match d {
                Some(d) => LinearityDefect::Exact(d),
                None => LinearityDefect::AtLeast(r.resolutions.get("k")?.depth),
            };
            want(ld == Some(expected), format!("ld(k) {ld:?}, expected {expected}"))
        }
        Expected::S(s) => want(v.s == SInvariant::Exact(s), format!("s {:?}, expected {s}", v.s)),
        Expected::CompleteIntersection { codim } => {
            let got = v.ci.filter(|c| c.is_ci).map(|c| c.codim);
            want(got == codim, format!("complete intersection codim {got:?}, expected {codim:?}"))
        }
        Expected::Multiplicity(m) => want(r.algebra.dim == m, format!("e = {}, expected {m}", r.algebra.dim)),
        Expected::CiMinimal(b) => {
            want(v.ci_min_mult == Some(b), format!("ci minimal multiplicity {:?}, expected {b}", v.ci_min_mult))
        }
        Expected::CmMinimal(b) => {
            want(v.cm_min_mult == b, format!("cm minimal multiplicity {}, expected {b}", v.cm_min_mult))
        }
        Expected::Golod(b) => want(v.golod_up_to.holds == b, format!("golod {}, expected {b}", v.golod_up_to.holds)),
        Expected::Koszul(b) => {
            want(v.koszul_up_to.holds == b, format!("koszul {}, expected {b}", v.koszul_up_to.holds))
        }
        Expected::Yoneda(y) => {
            let got = v.yoneda.map(|x| x.verdict);
            want(got == Some(y), format!("yoneda {got:?}, expected {y:?}"))
        }
        Expected::FirstNuEvenRows => {
            let nu = r.nu.get("k")?;
            let ok = (1..=nu.max_i()).all(|i| nu.vanishes(i, 1) == (i % 2 == 1));
            want(ok, "ν^1(k) not nonzero exactly at even rows".to_string())
        }
    }
}
