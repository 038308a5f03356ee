//! Line-oriented ring and module description files.
//!
//! ```text
//! # k[x,y]/(x^2, y^2)
//! field: 101
//! vars: x, y
//! relations: x^2; y^2
//! truncate: auto
//! cap: auto
//! depth: 8
//! ```
//!
//! Module files list a generator count and one relation column per line:
//!
//! ```text
//! generators: 2
//! relation: x, y
//! relation: 0, x^2
//! ```

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{AlgebraError, AlgebraPresentation, LocalAlgebra};
use crate::linalg::Fp;
use crate::poly::{parse_poly, PolyError, TruncatedPoly};
use crate::resolution::{FinModule, FreeMap};

const PARSE_CAP: usize = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecErrorCode {
    Syntax,
    UnknownKey,
    DuplicateKey,
    MissingKey,
    FieldError,
    BadVariable,
    BadPolynomial,
    UnknownVariable,
    RelationOrderError,
    BadNumber,
    BadPresentation,
}

impl SpecErrorCode {
    pub fn code(self) -> &'static str {
        match self {
            SpecErrorCode::Syntax => "E01",
            SpecErrorCode::UnknownKey => "E02",
            SpecErrorCode::DuplicateKey => "E03",
            SpecErrorCode::MissingKey => "E04",
            SpecErrorCode::FieldError => "E05",
            SpecErrorCode::BadVariable => "E06",
            SpecErrorCode::BadPolynomial => "E07",
            SpecErrorCode::UnknownVariable => "E08",
            SpecErrorCode::RelationOrderError => "E09",
            SpecErrorCode::BadNumber => "E10",
            SpecErrorCode::BadPresentation => "E11",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct SpecError {
    pub code: SpecErrorCode,
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: error[{}]: {}", self.line, self.col, self.code.code(), self.message)
    }
}

fn err<T>(code: SpecErrorCode, line: usize, col: usize, message: impl Into<String>) -> Result<T, SpecError> {
    Err(SpecError { code, line, col, message: message.into() })
}

/// A parsed and validated ring description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    pub field: u64,
    pub vars: Vec<String>,
    pub relations: Vec<String>,
    pub truncate: Option<usize>,
    pub cap: Option<usize>,
    pub depth: Option<usize>,
    parsed: Vec<TruncatedPoly>,
    relations_line: usize,
}

struct Line<'a> {
    number: usize,
    key: &'a str,
    value: &'a str,
    /// 1-based column of the first byte of `value`.
    value_col: usize,
}

fn split_lines(text: &str) -> Result<Vec<Line<'_>>, SpecError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let number = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let Some(colon) = content.find(':') else {
            let col = content.len() - content.trim_start().len() + 1;
            return err(SpecErrorCode::Syntax, number, col, "expected `key: value`");
        };
        let key = content[..colon].trim();
        let after = &content[colon + 1..];
        let lead = after.len() - after.trim_start().len();
        out.push(Line { number, key, value: after.trim(), value_col: colon + 2 + lead });
    }
    Ok(out)
}

fn parse_count(line: &Line<'_>, allow_auto: bool) -> Result<Option<usize>, SpecError> {
    if allow_auto && line.value == "auto" {
        return Ok(None);
    }
    match line.value.parse::<usize>() {
        Ok(v) => Ok(Some(v)),
        Err(_) => err(
            SpecErrorCode::BadNumber,
            line.number,
            line.value_col,
            format!(
                "`{}` expects {}, got `{}`",
                line.key,
                if allow_auto { "a number or `auto`" } else { "a number" },
                line.value
            ),
        ),
    }
}

fn poly_error(e: PolyError, line: usize, offset: usize) -> SpecError {
    match e {
        PolyError::UnknownVariable { col, name } => SpecError {
            code: SpecErrorCode::UnknownVariable,
            line,
            col: offset + col - 1,
            message: format!("unknown variable `{name}`"),
        },
        PolyError::Parse { col, msg } => {
            SpecError { code: SpecErrorCode::BadPolynomial, line, col: offset + col - 1, message: msg }
        }
        other => SpecError { code: SpecErrorCode::BadPolynomial, line, col: offset, message: other.to_string() },
    }
}

/// Splits `value` at `sep`, returning each piece with its 1-based column.
fn pieces(value: &str, value_col: usize, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in value.char_indices().chain(std::iter::once((value.len(), sep))) {
        if c == sep {
            let piece = &value[start..i];
            let lead = piece.len() - piece.trim_start().len();
            out.push((value_col + start + lead, piece.trim()));
            start = i + c.len_utf8();
        }
    }
    out
}

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn parse_ring_spec(text: &str) -> Result<RingSpec, SpecError> {
    let lines = split_lines(text)?;
    let mut seen: Vec<(&str, usize)> = Vec::new();
    let mut field_line = None;
    let mut vars_line = None;
    let mut rel_line = None;
    let mut truncate = None;
    let mut cap = None;
    let mut depth = None;
    for line in &lines {
        if let Some(&(_, first)) = seen.iter().find(|(k, _)| *k == line.key) {
            return err(
                SpecErrorCode::DuplicateKey,
                line.number,
                1,
                format!("`{}` already given on line {first}", line.key),
            );
        }
        seen.push((line.key, line.number));
        match line.key {
            "field" => field_line = Some(line),
            "vars" => vars_line = Some(line),
            "relations" => rel_line = Some(line),
            "truncate" => truncate = parse_count(line, true)?,
            "cap" => cap = parse_count(line, true)?,
            "depth" => depth = parse_count(line, false)?,
            other => return err(SpecErrorCode::UnknownKey, line.number, 1, format!("unknown key `{other}`")),
        }
    }
    let last = text.lines().count().max(1);
    let Some(fl) = field_line else {
        return err(SpecErrorCode::MissingKey, last, 1, "missing `field:` line");
    };
    let Some(vl) = vars_line else {
        return err(SpecErrorCode::MissingKey, last, 1, "missing `vars:` line");
    };

    let field = match fl.value.parse::<u64>() {
        Ok(p) => p,
        Err(_) => {
            return err(SpecErrorCode::BadNumber, fl.number, fl.value_col, format!("`{}` is not a number", fl.value))
        }
    };
    let fp = match Fp::new(field) {
        Ok(f) => f,
        Err(e) => return err(SpecErrorCode::FieldError, fl.number, fl.value_col, e.to_string()),
    };

    let mut vars = Vec::new();
    if !vl.value.is_empty() {
        for (col, name) in pieces(vl.value, vl.value_col, ',') {
            if !valid_identifier(name) {
                return err(SpecErrorCode::BadVariable, vl.number, col, format!("`{name}` is not a variable name"));
            }
            if vars.iter().any(|v| v == name) {
                return err(SpecErrorCode::BadVariable, vl.number, col, format!("variable `{name}` declared twice"));
            }
            vars.push(name.to_string());
        }
    }

    let mut relations = Vec::new();
    let mut parsed = Vec::new();
    let relations_line = rel_line.map_or(0, |l| l.number);
    if let Some(rl) = rel_line {
        for (col, text) in pieces(rl.value, rl.value_col, ';') {
            if text.is_empty() {
                continue;
            }
            let p = parse_poly(text, &vars, fp, PARSE_CAP).map_err(|e| poly_error(e, rl.number, col))?;
            if let Some(d) = p.order().filter(|&d| d < 2) {
                return err(
                    SpecErrorCode::RelationOrderError,
                    rl.number,
                    col,
                    format!("relation `{text}` has a term of degree {d}; relations must have order at least 2"),
                );
            }
            relations.push(text.to_string());
            parsed.push(p);
        }
    }
    if truncate == Some(0) {
        let l = lines.iter().find(|l| l.key == "truncate").unwrap();
        return err(SpecErrorCode::BadNumber, l.number, l.value_col, "truncation degree must be at least 1");
    }
    if depth == Some(0) {
        let l = lines.iter().find(|l| l.key == "depth").unwrap();
        return err(SpecErrorCode::BadNumber, l.number, l.value_col, "depth must be at least 1");
    }
    Ok(RingSpec { field, vars, relations, truncate, cap, depth, parsed, relations_line })
}

impl RingSpec {
    pub fn fp(&self) -> Fp {
        Fp::new(self.field).expect("validated at parse time")
    }

    pub fn presentation(&self) -> Result<AlgebraPresentation, SpecError> {
        AlgebraPresentation::new(self.fp(), self.vars.clone(), self.parsed.clone(), self.truncate, self.cap).map_err(
            |e| {
                let code = match e {
                    AlgebraError::RelationOrder { .. } => SpecErrorCode::RelationOrderError,
                    AlgebraError::Field(_) => SpecErrorCode::FieldError,
                    _ => SpecErrorCode::BadPresentation,
                };
                SpecError { code, line: self.relations_line.max(1), col: 1, message: e.to_string() }
            },
        )
    }

    /// Canonical text form; parsing it gives back an equal spec.
    pub fn to_text(&self) -> String {
        let opt = |v: Option<usize>| v.map_or_else(|| "auto".to_string(), |n| n.to_string());
        let mut s = format!(
            "field: {}\nvars: {}\nrelations: {}\ntruncate: {}\ncap: {}\n",
            self.field,
            self.vars.join(", "),
            self.relations.join("; "),
            opt(self.truncate),
            opt(self.cap)
        );
        if let Some(d) = self.depth {
            s.push_str(&format!("depth: {d}\n"));
        }
        s
    }
}

/// A module `R^g / (relation columns)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleSpec {
    pub generators: usize,
    /// Each relation lists `generators` polynomial entries.
    pub relations: Vec<Vec<String>>,
    parsed: Vec<Vec<TruncatedPoly>>,
}

pub fn parse_module_spec(text: &str, vars: &[String], field: Fp) -> Result<ModuleSpec, SpecError> {
    let lines = split_lines(text)?;
    let mut generators = None;
    let mut relations = Vec::new();
    let mut parsed = Vec::new();
    for line in &lines {
        match line.key {
            "generators" => {
                if generators.is_some() {
                    return err(SpecErrorCode::DuplicateKey, line.number, 1, "`generators` given twice");
                }
                let g = parse_count(line, false)?.unwrap_or(0);
                if g == 0 {
                    return err(
                        SpecErrorCode::BadNumber,
                        line.number,
                        line.value_col,
                        "a module needs at least one generator",
                    );
                }
                generators = Some(g);
            }
            "relation" => {
                let Some(g) = generators else {
                    return err(
                        SpecErrorCode::MissingKey,
                        line.number,
                        1,
                        "`generators` must come before the relations",
                    );
                };
                let entries = pieces(line.value, line.value_col, ',');
                if entries.len() != g {
                    return err(
                        SpecErrorCode::Syntax,
                        line.number,
                        line.value_col,
                        format!("relation has {} entries, expected {g}", entries.len()),
                    );
                }
                let mut texts = Vec::with_capacity(g);
                let mut polys = Vec::with_capacity(g);
                for (col, t) in entries {
                    polys.push(parse_poly(t, vars, field, PARSE_CAP).map_err(|e| poly_error(e, line.number, col))?);
                    texts.push(t.to_string());
                }
                relations.push(texts);
                parsed.push(polys);
            }
            other => return err(SpecErrorCode::UnknownKey, line.number, 1, format!("unknown key `{other}`")),
        }
    }
    let Some(generators) = generators else {
        return err(SpecErrorCode::MissingKey, text.lines().count().max(1), 1, "missing `generators:` line");
    };
    Ok(ModuleSpec { generators, relations, parsed })
}

impl ModuleSpec {
    pub fn to_module(&self, alg: &Arc<LocalAlgebra>, label: impl Into<String>) -> FinModule {
        let l = alg.dim();
        let columns = self
            .parsed
            .iter()
            .map(|col| col.iter().flat_map(|p| alg.normal_form(p).unwrap_or_else(|| vec![0; l])).collect::<Vec<_>>())
            .collect();
        let pres = FreeMap::from_columns(l, self.generators, columns).expect("entries are algebra elements");
        FinModule::cokernel(alg, label, pres)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const K1: &str = "field: 101\nvars: x, y\nrelations: x^2; y^2\ntruncate: auto\ncap: auto\n";

    #[test]
    fn parses_basic_spec() {
        let s = parse_ring_spec(K1).unwrap();
        assert_eq!(s.field, 101);
        assert_eq!(s.vars, ["x", "y"]);
        assert_eq!(s.relations, ["x^2", "y^2"]);
        assert_eq!((s.truncate, s.cap, s.depth), (None, None, None));
        let p = s.presentation().unwrap();
        assert_eq!(p.truncation_degree(), 2);
        assert_eq!(p.cap(), 4);
    }

    #[test]
    fn round_trip() {
        let s =
            parse_ring_spec("# comment\nfield:7\nvars: a,b , c\nrelations: a^2 - b*c ; c^3\ntruncate: 3\ndepth: 5\n")
                .unwrap();
        let again = parse_ring_spec(&s.to_text()).unwrap();
        assert_eq!(s, RingSpec { relations_line: s.relations_line, ..again });
    }

    #[test]
    fn relation_of_order_one() {
        let e = parse_ring_spec("field: 101\nvars: x, y\nrelations: x^2; x + y\n").unwrap_err();
        assert_eq!(e.code, SpecErrorCode::RelationOrderError);
        assert_eq!((e.line, e.col), (3, 17));
    }

    #[test]
    fn composite_field() {
        let e = parse_ring_spec("field: 10\nvars: x\nrelations: x^2\n").unwrap_err();
        assert_eq!(e.code, SpecErrorCode::FieldError);
        assert_eq!((e.line, e.col), (1, 8));
    }

    #[test]
    fn distinct_codes() {
        let cases = [
            ("field 101\n", SpecErrorCode::Syntax),
            ("field: 101\nfoo: 1\n", SpecErrorCode::UnknownKey),
            ("field: 101\nfield: 7\n", SpecErrorCode::DuplicateKey),
            ("vars: x\n", SpecErrorCode::MissingKey),
            ("field: 101\nvars: x, 2y\n", SpecErrorCode::BadVariable),
            ("field: 101\nvars: x\nrelations: x^^2\n", SpecErrorCode::BadPolynomial),
            ("field: 101\nvars: x\nrelations: z^2\n", SpecErrorCode::UnknownVariable),
            ("field: 101\nvars: x\nrelations: x^2\ntruncate: many\n", SpecErrorCode::BadNumber),
        ];
        for (text, code) in cases {
            assert_eq!(parse_ring_spec(text).unwrap_err().code, code, "{text:?}");
        }
        let all = [
            SpecErrorCode::Syntax,
            SpecErrorCode::UnknownKey,
            SpecErrorCode::DuplicateKey,
            SpecErrorCode::MissingKey,
            SpecErrorCode::FieldError,
            SpecErrorCode::BadVariable,
            SpecErrorCode::BadPolynomial,
            SpecErrorCode::UnknownVariable,
            SpecErrorCode::RelationOrderError,
            SpecErrorCode::BadNumber,
            SpecErrorCode::BadPresentation,
        ];
        let mut codes: Vec<&str> = all.iter().map(|c| c.code()).collect();
        codes.dedup();
        assert_eq!(codes.len(), all.len());
    }

    #[test]
    fn unknown_variable_column() {
        let e = parse_ring_spec("field: 101\nvars: x, y\nrelations: x^2;  y^2 + x*z\n").unwrap_err();
        assert_eq!(e.code, SpecErrorCode::UnknownVariable);
        assert_eq!((e.line, e.col), (3, 26));
        assert_eq!(e.to_string(), "3:26: error[E08]: unknown variable `z`");
    }

    #[test]
    fn undetectable_truncation() {
        let s = parse_ring_spec("field: 101\nvars: x, y\nrelations: x^2\n").unwrap();
        assert_eq!(s.presentation().unwrap_err().code, SpecErrorCode::BadPresentation);
        let s = parse_ring_spec("field: 101\nvars: x, y\nrelations: x^2\ntruncate: 3\n").unwrap();
        assert!(s.presentation().unwrap().truncation_forced());
    }

    #[test]
    fn module_file() {
        let f = Fp::new(101).unwrap();
        let vars = vec!["x".to_string(), "y".to_string()];
        let m = parse_module_spec("generators: 2\nrelation: x, y\nrelation: 0, x^2\n", &vars, f).unwrap();
        assert_eq!(m.generators, 2);
        assert_eq!(m.relations, vec![vec!["x", "y"], vec!["0", "x^2"]]);
        let e = parse_module_spec("generators: 2\nrelation: x\n", &vars, f).unwrap_err();
        assert_eq!(e.code, SpecErrorCode::Syntax);
        let e = parse_module_spec("relation: x\n", &vars, f).unwrap_err();
        assert_eq!(e.code, SpecErrorCode::MissingKey);
    }
}
