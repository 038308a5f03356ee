//! One-ring analysis pipeline and its table / JSON renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{build_algebra, AlgebraError, LocalAlgebra};
use crate::invariants::{
    golod_check, is_complete_intersection, is_diagonal, koszul_check, koszul_complex_homology, koszul_poincare_series,
    minimal_multiplicity_ci, minimal_multiplicity_cm, module_hilbert, multiplicity_matches_rational_series,
    s_invariant, yoneda_report, CompleteIntersection, InvariantError, RingVerdicts, SInvariant, UpTo,
};
use crate::lindefect::{analyze_defect, DefectAnalysis, LinDefectError, LinHomologyTable, LinearityDefect, NuTable};
use crate::resolution::{resolve_with, FinModule, MinimalResolution, ResolutionError, ResolveOptions, DEFAULT_DEPTH};
use crate::ringspec::{ModuleSpec, RingSpec, SpecError};
use crate::series;

#[derive(Debug, Error)]
pub enum AnalyzeError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
    #[error(transparent)]
    Defect(#[from] LinDefectError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

#[derive(Debug, Clone, Default)]
pub struct AnalyzeOptions {
    /// Overrides the depth in the spec; the default is 8.
    pub depth: Option<usize>,
    /// Also analyze `m^n` and `R/m^n` for `n` up to the socle degree.
    pub powers: bool,
    pub modules: Vec<(String, ModuleSpec)>,
    pub resolve: ResolveOptions,
    pub timing: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecEcho {
    pub field: u64,
    pub vars: Vec<String>,
    pub relations: Vec<String>,
    pub truncate: usize,
    pub truncate_auto: bool,
    pub cap: usize,
    pub depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSummary {
    pub dim: usize,
    pub edim: usize,
    pub socle_degree: usize,
    pub hilbert: Vec<usize>,
    pub graded: bool,
    pub truncation_forced: bool,
    pub basis: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleResolution {
    pub betti: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graded_betti: Option<Vec<Vec<usize>>>,
    pub ld: Option<LinearityDefect>,
    pub depth: usize,
    /// False when the resource guard stopped the resolution early.
    pub complete: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Advisory,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingReport {
    pub spec: SpecEcho,
    pub algebra: AlgebraSummary,
    pub resolutions: BTreeMap<String, ModuleResolution>,
    pub lin_homology: BTreeMap<String, LinHomologyTable>,
    pub nu: BTreeMap<String, NuTable>,
    pub verdicts: RingVerdicts,
    pub checks: Vec<Check>,
    pub timing_ms: Option<u64>,
}

impl RingReport {
    /// Every check passed or was skipped.
    pub fn clean(&self) -> bool {
        self.checks.iter().all(|c| matches!(c.status, CheckStatus::Pass | CheckStatus::Skipped))
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn ld(&self, module: &str) -> Option<LinearityDefect> {
        self.resolutions.get(module).and_then(|r| r.ld)
    }

    /// Module labels in display order: `k`, powers, quotients, then the rest.
    pub fn module_order(&self) -> Vec<String> {
        let mut names: Vec<String> = self.resolutions.keys().cloned().collect();
        names.sort_by_key(|n| module_rank(n));
        names
    }
}

fn module_rank(label: &str) -> (usize, usize, String) {
    let power = |s: &str| s.parse::<usize>().ok();
    if label == "k" {
        (0, 0, String::new())
    } else if label == "m" {
        (1, 1, String::new())
    } else if let Some(n) = label.strip_prefix("m^").and_then(power) {
        (1, n, String::new())
    } else if let Some(n) = label.strip_prefix("R/m^").and_then(power) {
        (2, n, String::new())
    } else {
        (3, 0, label.to_string())
    }
}

struct Analyzed {
    res: MinimalResolution,
    complete: bool,
    defect: Option<DefectAnalysis>,
}

fn resolve_guarded(
    module: &FinModule,
    depth: usize,
    opts: &ResolveOptions,
) -> Result<(MinimalResolution, bool), ResolutionError> {
    match resolve_with(module, depth, opts) {
        Ok(r) => Ok((r, true)),
        Err(ResolutionError::ResourceLimit { partial, .. }) => Ok((*partial, false)),
        Err(e) => Err(e),
    }
}

fn analyze_module(module: &FinModule, depth: usize, opts: &ResolveOptions) -> Result<Analyzed, AnalyzeError> {
    let (res, complete) = resolve_guarded(module, depth, opts)?;
    let defect = if res.depth() >= 2 { Some(analyze_defect(&res)?) } else { None };
    Ok(Analyzed { res, complete, defect })
}

fn koszul_verdict(alg: &LocalAlgebra, k: &Analyzed, opts: &ResolveOptions) -> Result<UpTo, AnalyzeError> {
    let depth = k.res.depth();
    if alg.is_graded() {
        if let Ok(t) = k.res.graded_betti() {
            return Ok(UpTo { holds: is_diagonal(&t), depth });
        }
    }
    match koszul_check(alg, depth, opts) {
        Ok(v) => Ok(v),
        Err(InvariantError::Resolution(ResolutionError::ResourceLimit { partial, .. })) => {
            Ok(UpTo { holds: is_diagonal(&partial.graded_betti()?), depth: partial.depth() })
        }
        Err(e) => Err(e.into()),
    }
}

fn status(ok: bool) -> CheckStatus {
    if ok {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    }
}

fn check(name: impl Into<String>, status: CheckStatus, detail: impl Into<String>) -> Check {
    Check { name: name.into(), status, detail: detail.into() }
}

pub fn analyze(spec: &RingSpec, options: &AnalyzeOptions) -> Result<RingReport, AnalyzeError> {
    let start = Instant::now();
    let pres = spec.presentation()?;
    let alg = Arc::new(build_algebra(&pres)?);
    let depth = options.depth.or(spec.depth).unwrap_or(DEFAULT_DEPTH).max(1);
    let opts = &options.resolve;

    let mut modules = vec![FinModule::residue_field(&alg)];
    if options.powers {
        for n in 1..=alg.socle_degree() {
            modules.push(FinModule::power(&alg, n)?);
        }
        for n in 2..=alg.socle_degree() {
            modules.push(FinModule::quotient_power(&alg, n)?);
        }
    }
    for (label, m) in &options.modules {
        modules.push(m.to_module(&alg, label.clone()));
    }

    let analyzed: Vec<(String, Analyzed)> = modules
        .iter()
        .map(|m| Ok((m.label().to_string(), analyze_module(m, depth, opts)?)))
        .collect::<Result<_, AnalyzeError>>()?;
    let k = &analyzed[0].1;

    // verdicts
    let koszul_homology = koszul_complex_homology(&alg);
    let betti_k = k.res.betti();
    let golod = golod_check(&alg, &betti_k, &koszul_homology);
    let ci = match is_complete_intersection(&pres) {
        Ok(ci) => Some(ci),
        Err(InvariantError::TruncationForced) => None,
        Err(e) => return Err(e.into()),
    };
    let nu_k = k.defect.as_ref().map(|d| &d.nu);
    let verdicts = RingVerdicts {
        s: s_invariant(&pres),
        koszul_up_to: koszul_verdict(&alg, k, opts)?,
        ci,
        ci_min_mult: ci.filter(|c| c.is_ci).map(|c| minimal_multiplicity_ci(&alg, c.codim)),
        cm_min_mult: minimal_multiplicity_cm(&alg),
        golod_up_to: UpTo { holds: golod.holds, depth: golod.depth },
        serre_bound: golod.bound,
        koszul_homology,
        yoneda: nu_k.map(|nu| yoneda_report(nu, k.res.depth())),
        regularity_lb: if alg.is_graded() { k.res.regularity_up_to().ok() } else { None },
    };

    let checks = theorem_checks(&alg, &analyzed, &verdicts);

    let mut resolutions = BTreeMap::new();
    let mut lin_homology = BTreeMap::new();
    let mut nu = BTreeMap::new();
    for (label, a) in &analyzed {
        resolutions.insert(
            label.clone(),
            ModuleResolution {
                betti: a.res.betti(),
                graded_betti: a.res.graded_betti().ok().map(|t| t.table),
                ld: a.defect.as_ref().map(|d| d.ld),
                depth: a.res.depth(),
                complete: a.complete,
            },
        );
        if let Some(d) = &a.defect {
            lin_homology.insert(label.clone(), d.lin.clone());
            nu.insert(label.clone(), d.nu.clone());
        }
    }

    Ok(RingReport {
        spec: SpecEcho {
            field: spec.field,
            vars: spec.vars.clone(),
            relations: spec.relations.clone(),
            truncate: pres.truncation_degree(),
            truncate_auto: spec.truncate.is_none(),
            cap: pres.cap(),
            depth,
        },
        algebra: AlgebraSummary {
            dim: alg.dim(),
            edim: alg.edim(),
            socle_degree: alg.socle_degree(),
            hilbert: alg.hilbert_series().to_vec(),
            graded: alg.is_graded(),
            truncation_forced: alg.truncation_forced(),
            basis: alg.basis().iter().map(|b| b.display_with(alg.var_names())).collect(),
        },
        resolutions,
        lin_homology,
        nu,
        verdicts,
        checks,
        timing_ms: options.timing.then(|| start.elapsed().as_millis() as u64),
    })
}

fn theorem_checks(alg: &LocalAlgebra, analyzed: &[(String, Analyzed)], v: &RingVerdicts) -> Vec<Check> {
    let mut out = Vec::new();
    let k = &analyzed[0].1;
    let kd = k.defect.as_ref();
    let ld_k = kd.map(|d| d.ld);

    out.push(check(
        "nu-routes-agree",
        status(true),
        format!("homology and cycle computations of every ν entry agree for {} module(s)", analyzed.len()),
    ));

    for (label, a) in analyzed {
        let name = format!("lin-nu-biconditional[{label}]");
        match &a.defect {
            Some(d) if !d.crosscheck_rows.is_empty() => {
                let bad: Vec<usize> = d.crosscheck_rows.iter().filter(|r| !r.1).map(|r| r.0).collect();
                let detail = if bad.is_empty() {
                    format!("rows 1..={}", d.crosscheck_rows.len())
                } else {
                    format!("fails at rows {bad:?}")
                };
                out.push(check(name, status(bad.is_empty()), detail));
            }
            _ => out.push(check(name, CheckStatus::Skipped, "depth below 3")),
        }
    }

    match kd {
        Some(d) => {
            let ok = d.nu.row_vanishes(1);
            out.push(check("first-nu-row-vanishes", status(ok), format!("ν^n_1(k) for 1 <= n <= {}", d.nu.max_n())));
        }
        None => out.push(check("first-nu-row-vanishes", CheckStatus::Skipped, "depth below 2")),
    }

    match (kd, v.s) {
        (Some(d), SInvariant::Exact(s)) if d.nu.max_i() >= 2 => {
            let nu2 = d.nu.vanishes(2, 1);
            out.push(check(
                "quadratic-iff-nu2",
                status(nu2 == (s == 1)),
                format!("s = {s}, ν^1_2(k) {}", if nu2 { "= 0" } else { "!= 0" }),
            ));
        }
        _ => out.push(check("quadratic-iff-nu2", CheckStatus::Skipped, "needs depth >= 3 and a definite s")),
    }

    match kd {
        Some(d) if d.nu.max_i() >= 2 => {
            let even_zero: Vec<usize> =
                (1..).map(|n| 2 * n).take_while(|&i| i <= d.nu.max_i()).filter(|&i| d.nu.vanishes(i, 1)).collect();
            let ok = even_zero.is_empty() || d.nu.vanishes(2, 1);
            out.push(check("even-nu-implies-nu2", status(ok), format!("even i with ν^1_i(k) = 0: {even_zero:?}")));
        }
        _ => out.push(check("even-nu-implies-nu2", CheckStatus::Skipped, "depth below 3")),
    }

    let powers: Vec<(&String, LinearityDefect)> = analyzed
        .iter()
        .filter(|(l, _)| l == "m" || l.starts_with("m^"))
        .filter_map(|(l, a)| a.defect.as_ref().map(|d| (l, d.ld)))
        .collect();
    match ld_k {
        Some(LinearityDefect::Exact(dk)) if !powers.is_empty() => {
            let bad: Vec<String> = powers
                .iter()
                .filter(|(_, ld)| {
                    matches!(ld, LinearityDefect::Exact(d) if *d > dk) || matches!(ld, LinearityDefect::AtLeast(_))
                })
                .map(|(l, ld)| format!("{l}: {ld}"))
                .collect();
            out.push(check(
                "powers-defect-bound",
                status(bad.is_empty()),
                if bad.is_empty() {
                    format!("ld(m^n) <= ld(k) = {dk}")
                } else {
                    format!("exceeds ld(k) = {dk}: {}", bad.join(", "))
                },
            ));
        }
        _ => out.push(check("powers-defect-bound", CheckStatus::Skipped, "needs m^n modules and a definite ld(k)")),
    }

    if alg.socle_degree() <= 2 {
        let finite: Vec<&String> = analyzed
            .iter()
            .filter(|(_, a)| a.res.betti().get(1).is_some_and(|&b| b > 0))
            .filter(|(_, a)| matches!(a.defect.as_ref().map(|d| d.ld), Some(LinearityDefect::Exact(_))))
            .map(|(l, _)| l)
            .collect();
        if finite.is_empty() {
            out.push(check("cube-zero-koszul", CheckStatus::Skipped, "no non-free module with finite ld"));
        } else {
            out.push(check(
                "cube-zero-koszul",
                status(v.koszul_up_to.holds),
                format!(
                    "m^3 = 0 and finite ld for {finite:?}; Koszul up to {}: {}",
                    v.koszul_up_to.depth, v.koszul_up_to.holds
                ),
            ));
        }
    } else {
        out.push(check("cube-zero-koszul", CheckStatus::Skipped, "m^3 != 0"));
    }

    match (v.ci, v.ci_min_mult, ld_k) {
        (Some(CompleteIntersection { is_ci: true, codim, .. }), Some(min), Some(ld)) => {
            let zero = ld == LinearityDefect::Exact(0);
            let infinite = matches!(ld, LinearityDefect::AtLeast(_));
            let ok = zero == min && (min || infinite);
            out.push(check(
                "ci-minimal-multiplicity",
                status(ok),
                format!("codim {codim}, e = {}, 2^c = {}, ld(k) = {ld}", alg.multiplicity(), 1usize << codim.min(63)),
            ));
        }
        _ => out.push(check("ci-minimal-multiplicity", CheckStatus::Skipped, "not a complete intersection")),
    }

    match ld_k {
        Some(ld) if v.golod_up_to.holds => {
            let zero = ld == LinearityDefect::Exact(0);
            let square_zero = alg.socle_degree() <= 1;
            out.push(check(
                "golod-square-zero",
                status(zero == square_zero),
                format!("ld(k) = {ld}, m^2 {} 0", if square_zero { "=" } else { "!=" }),
            ));
        }
        _ => out.push(check("golod-square-zero", CheckStatus::Skipped, "not Golod up to the computed depth")),
    }

    let ring_h: Vec<i128> = alg.hilbert_series().iter().map(|&h| h as i128).collect();
    for (label, a) in analyzed {
        let name = format!("koszul-poincare[{label}]");
        let ld = a.defect.as_ref().map(|d| d.ld);
        match (ld, module_hilbert(alg, a.res.module().kind())) {
            (Some(LinearityDefect::Exact(0)), Some(mh)) => {
                let betti = a.res.betti();
                let expected = koszul_poincare_series(&mh, &ring_h, betti.len());
                let ok = betti.iter().zip(&expected).all(|(&b, &e)| b as i128 == e);
                out.push(check(name, status(ok), format!("series {expected:?}")));
            }
            _ => out.push(check(name, CheckStatus::Skipped, "module not Koszul or Hilbert series unknown")),
        }
    }

    match ld_k {
        Some(LinearityDefect::Exact(0)) => {
            let b = series::negate_variable(&ring_h);
            let prefix = series::divide(&[1], &b, betti_len(k));
            let ok_prefix = k.res.betti().iter().zip(&prefix).all(|(&x, &y)| x as i128 == y);
            let ok_e = multiplicity_matches_rational_series(alg.multiplicity(), &[1], &b);
            out.push(check(
                "multiplicity-from-poincare",
                status(ok_prefix && ok_e),
                format!("P_k = 1/B with B(-1) = {}, e = {}", series::evaluate(&b, -1), alg.multiplicity()),
            ));
        }
        _ => out.push(check(
            "multiplicity-from-poincare",
            CheckStatus::Skipped,
            "Poincaré series of k not known in closed form",
        )),
    }

    let socle = alg.socle_degree();
    match kd {
        Some(d) if socle >= 2 && d.nu.max_n() >= socle - 1 && d.nu.max_i() >= 2 => {
            let col = socle - 1;
            let rows = d.nu.max_i();
            let top_half = rows / 2 + 1..=rows;
            let premise = top_half.clone().all(|i| d.nu.vanishes(i, col));
            if premise {
                let ok = (2..=rows).all(|i| d.nu.vanishes(i, col));
                out.push(check(
                    "artinian-nu-propagation",
                    if ok { CheckStatus::Pass } else { CheckStatus::Advisory },
                    format!("ν^{col}_i(k) = 0 for i in {top_half:?}; all 2 <= i <= {rows}: {ok}"),
                ));
            } else {
                out.push(check(
                    "artinian-nu-propagation",
                    CheckStatus::Skipped,
                    format!("ν^{col}(k) nonzero in the top half"),
                ));
            }
        }
        _ => out.push(check("artinian-nu-propagation", CheckStatus::Skipped, "needs m^2 != 0 and depth >= 3")),
    }

    out
}

fn betti_len(a: &Analyzed) -> usize {
    a.res.depth() + 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
}

pub fn emit(report: &RingReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Table => render_table(report),
    }
}

fn row(cells: &[String], widths: &[usize]) -> String {
    let mut s = String::new();
    for (i, (c, w)) in cells.iter().zip(widths).enumerate() {
        if i == 0 {
            let _ = write!(s, "{c:<w$}");
        } else {
            let _ = write!(s, "  {c:>w$}");
        }
    }
    s.trim_end().to_string()
}

fn grid(out: &mut String, header: &[String], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = header.iter().map(String::len).collect();
    for r in rows {
        for (i, c) in r.iter().enumerate() {
            widths[i] = widths[i].max(c.chars().count());
        }
    }
    let _ = writeln!(out, "  {}", row(header, &widths));
    for r in rows {
        let _ = writeln!(out, "  {}", row(r, &widths));
    }
}

fn render_table(r: &RingReport) -> String {
    let mut out = String::new();
    let s = &r.spec;
    let _ = writeln!(out, "ring");
    let _ = writeln!(out, "  field      F_{}", s.field);
    let _ = writeln!(out, "  vars       {}", s.vars.join(", "));
    let _ =
        writeln!(out, "  relations  {}", if s.relations.is_empty() { "(none)".into() } else { s.relations.join("; ") });
    let _ = writeln!(out, "  truncate   {}{}", s.truncate, if s.truncate_auto { " (detected)" } else { "" });
    let _ = writeln!(out, "  cap        {}", s.cap);
    let _ = writeln!(out, "  depth      {}", s.depth);

    let a = &r.algebra;
    let _ = writeln!(out, "\nalgebra");
    let _ = writeln!(out, "  dim {}  edim {}  socle degree {}", a.dim, a.edim, a.socle_degree);
    let _ = writeln!(out, "  hilbert    {}", a.hilbert.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
    let _ = writeln!(out, "  graded     {}", if a.graded { "yes" } else { "no" });
    let _ = writeln!(
        out,
        "  truncation {}",
        if a.truncation_forced { "forced (m^(N+1) = 0 imposed)" } else { "implied by the relations" }
    );
    let _ = writeln!(out, "  basis      {}", a.basis.join(", "));

    let order = r.module_order();
    let maxd = r.resolutions.values().map(|m| m.betti.len()).max().unwrap_or(0);
    let _ = writeln!(out, "\nbetti numbers");
    let mut header = vec!["module".to_string()];
    header.extend((0..maxd).map(|i| i.to_string()));
    header.push("ld".into());
    let rows: Vec<Vec<String>> = order
        .iter()
        .map(|name| {
            let m = &r.resolutions[name];
            let mut cells = vec![name.clone()];
            cells.extend((0..maxd).map(|i| m.betti.get(i).map_or("".into(), |b| b.to_string())));
            let ld = m.ld.map_or("-".to_string(), |l| l.to_string());
            cells.push(if m.complete { ld } else { format!("{ld} (stopped by resource guard)") });
            cells
        })
        .collect();
    grid(&mut out, &header, &rows);

    for name in &order {
        let m = &r.resolutions[name];
        if let Some(gb) = &m.graded_betti {
            let _ = writeln!(out, "\ngraded betti numbers of {name} (row j - i, column i)");
            let offsets: Vec<i64> = {
                let mut o: Vec<i64> = gb
                    .iter()
                    .enumerate()
                    .flat_map(|(i, rowv)| {
                        rowv.iter().enumerate().filter(|(_, &b)| b != 0).map(move |(j, _)| j as i64 - i as i64)
                    })
                    .collect();
                o.sort_unstable();
                o.dedup();
                o
            };
            let mut header = vec!["".to_string()];
            header.extend((0..gb.len()).map(|i| i.to_string()));
            let rows: Vec<Vec<String>> = offsets
                .iter()
                .map(|&o| {
                    let mut cells = vec![format!("{o}:")];
                    cells.extend(gb.iter().enumerate().map(|(i, rowv)| {
                        let j = i as i64 + o;
                        let b = if j >= 0 { rowv.get(j as usize).copied().unwrap_or(0) } else { 0 };
                        if b == 0 {
                            ".".into()
                        } else {
                            b.to_string()
                        }
                    }));
                    cells
                })
                .collect();
            grid(&mut out, &header, &rows);
        }
    }

    for name in &order {
        if let Some(lin) = r.lin_homology.get(name) {
            let _ = writeln!(out, "\nlin homology of {name}: dim H_j(lin)_(j+s), row j, column s");
            let cols = lin.rows.first().map_or(0, Vec::len);
            let mut header = vec!["j".to_string()];
            header.extend((0..cols).map(|s| s.to_string()));
            let rows: Vec<Vec<String>> = lin
                .rows
                .iter()
                .enumerate()
                .map(|(j, rowv)| {
                    let mut cells = vec![j.to_string()];
                    cells.extend(rowv.iter().map(usize::to_string));
                    cells
                })
                .collect();
            grid(&mut out, &header, &rows);
        }
        if let Some(nu) = r.nu.get(name) {
            let _ = writeln!(out, "\nnu maps of {name}: row i, column n, 0 = vanishes, • = nonzero");
            let mut header = vec!["i".to_string()];
            header.extend((1..=nu.max_n()).map(|n| n.to_string()));
            let rows: Vec<Vec<String>> = (1..=nu.max_i())
                .map(|i| {
                    let mut cells = vec![i.to_string()];
                    cells.extend((1..=nu.max_n()).map(|n| if nu.vanishes(i, n) { "0".into() } else { "•".into() }));
                    cells
                })
                .collect();
            grid(&mut out, &header, &rows);
        }
    }

    let v = &r.verdicts;
    let _ = writeln!(out, "\nverdicts");
    let s_text = match v.s {
        SInvariant::Exact(s) => s.to_string(),
        SInvariant::AtLeast(s) => format!(">= {s}"),
    };
    let yes = |b: bool| if b { "yes" } else { "no" };
    let _ = writeln!(out, "  s                      {s_text}");
    let _ = writeln!(out, "  koszul                 {} (up to {})", yes(v.koszul_up_to.holds), v.koszul_up_to.depth);
    let ci_text = match v.ci {
        Some(c) => format!("{} ({} minimal relations, codim {})", yes(c.is_ci), c.relations, c.codim),
        None => "undecided (truncated presentation)".into(),
    };
    let _ = writeln!(out, "  complete intersection  {ci_text}");
    let _ = writeln!(out, "  ci minimal mult.       {}", v.ci_min_mult.map_or("n/a", yes));
    let _ = writeln!(out, "  cm minimal mult.       {}", yes(v.cm_min_mult));
    let _ = writeln!(out, "  golod                  {} (up to {})", yes(v.golod_up_to.holds), v.golod_up_to.depth);
    let _ = writeln!(
        out,
        "  koszul homology        {}",
        v.koszul_homology.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
    );
    let _ = writeln!(
        out,
        "  serre bound            {}",
        v.serre_bound.iter().map(i128::to_string).collect::<Vec<_>>().join(" ")
    );
    let y = match v.yoneda {
        Some(y) => {
            let verdict = match y.verdict {
                crate::invariants::YonedaVerdict::EqualsDual => "equals the Koszul dual".to_string(),
                crate::invariants::YonedaVerdict::GeneratedInDegreesLe(d) => format!("generated in degrees <= {d}"),
                crate::invariants::YonedaVerdict::NoFiniteGenerationDetected => {
                    "no finite generation detected".to_string()
                }
            };
            format!("{verdict} (margin {})", y.margin)
        }
        None => "n/a".into(),
    };
    let _ = writeln!(out, "  yoneda                 {y}");
    let _ = writeln!(out, "  regularity lower bound {}", v.regularity_lb.map_or("n/a".into(), |x| x.to_string()));

    let _ = writeln!(out, "\nchecks");
    let w = r.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    for c in &r.checks {
        let st = match c.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Advisory => "advisory",
            CheckStatus::Skipped => "skipped",
        };
        let _ = writeln!(out, "  {:<w$}  {st:<8}  {}", c.name, c.detail);
    }
    if let Some(t) = r.timing_ms {
        let _ = writeln!(out, "\ntime {t} ms");
    }
    out
}
