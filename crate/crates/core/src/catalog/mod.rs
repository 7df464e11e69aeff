//! Explicit constants: matrices, polynomials, quadrics, line seeds, point lists
//! and expected tables, each tagged with the place it is printed.
//!
//! Entries are stored verbatim. Where a printed value disagrees with computation
//! the entry carries an [`Erratum`]; [`CatalogEntry::effective`] returns the
//! corrected value when one is known, and the printed one otherwise.

mod data;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use serde_json::{json, Value as Json};

use crate::cyclo::CycNum;
use crate::error::{Error, Result};
use crate::group::{MatrixGroup, Mode};
use crate::linalg::Mat;
use crate::poly::HomPoly;
use crate::projgeom::{ProjLine, ProjPoint};

use data::{Raw, Source, ENTRIES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Kind {
    Matrix,
    Polynomial,
    PolynomialList,
    PointList,
    LineSeed,
    Table,
    Word,
    GroupRecipe,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Matrix => "matrix",
            Kind::Polynomial => "polynomial",
            Kind::PolynomialList => "polynomial_list",
            Kind::PointList => "point_list",
            Kind::LineSeed => "line_seed",
            Kind::Table => "table",
            Kind::Word => "word",
            Kind::GroupRecipe => "group_recipe",
        })
    }
}

/// A printed table: header row plus labelled body rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<(String, Vec<String>)>,
}

impl Table {
    fn parse(text: &str) -> Result<Table> {
        let mut lines = text.split(';').map(|row| {
            row.split('|').map(|c| c.trim().to_string()).collect::<Vec<_>>()
        });
        let header = lines.next().ok_or_else(|| Error::Parse("empty table".into()))?;
        let mut rows = Vec::new();
        for mut cells in lines {
            if cells.len() != header.len() {
                return Err(Error::Parse(format!(
                    "table row {:?} has {} cells, header has {}",
                    cells[0],
                    cells.len(),
                    header.len()
                )));
            }
            let label = cells.remove(0);
            rows.push((label, cells));
        }
        Ok(Table { header, rows })
    }

    /// Column labels without the corner cell.
    pub fn columns(&self) -> &[String] {
        &self.header[1..]
    }

    pub fn cell(&self, row: &str, col: &str) -> Option<&str> {
        let c = self.columns().iter().position(|h| h == col)?;
        let (_, cells) = self.rows.iter().find(|(l, _)| l == row)?;
        Some(&cells[c])
    }

    /// Reads a table of `+`/`-` cells as booleans.
    pub fn signs(&self) -> Result<Vec<Vec<bool>>> {
        self.rows
            .iter()
            .map(|(label, cells)| {
                cells
                    .iter()
                    .map(|c| match c.as_str() {
                        "+" => Ok(true),
                        "-" => Ok(false),
                        other => Err(Error::Parse(format!("row {label}: cell {other:?} is not + or -"))),
                    })
                    .collect()
            })
            .collect()
    }

    fn to_json(&self) -> Json {
        json!({
            "header": self.header,
            "rows": self.rows.iter().map(|(l, c)| {
                let mut v = vec![l.clone()];
                v.extend(c.iter().cloned());
                v
            }).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.header.join(" | "))?;
        for (l, cells) in &self.rows {
            writeln!(f, "{} | {}", l, cells.join(" | "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Matrix(Mat),
    Polynomial(HomPoly),
    PolynomialList(Vec<HomPoly>),
    PointList(Vec<ProjPoint>),
    LineSeed { line: ProjLine, points: (ProjPoint, ProjPoint) },
    Table(Table),
    /// A product of catalog matrices, with its factors and the entry it should equal.
    Word { word: String, factors: Vec<(String, u64)>, target: Option<String> },
    GroupRecipe(Vec<String>),
}

impl Value {
    pub fn kind(&self) -> Kind {
        match self {
            Value::Matrix(_) => Kind::Matrix,
            Value::Polynomial(_) => Kind::Polynomial,
            Value::PolynomialList(_) => Kind::PolynomialList,
            Value::PointList(_) => Kind::PointList,
            Value::LineSeed { .. } => Kind::LineSeed,
            Value::Table(_) => Kind::Table,
            Value::Word { .. } => Kind::Word,
            Value::GroupRecipe(_) => Kind::GroupRecipe,
        }
    }

    fn to_json(&self) -> Json {
        match self {
            Value::Matrix(m) => json!((0..m.rows())
                .map(|r| (0..m.cols()).map(|c| m.get(r, c).to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>()),
            Value::Polynomial(p) => json!(p.to_string()),
            Value::PolynomialList(v) => json!(v.iter().map(|p| p.to_string()).collect::<Vec<_>>()),
            Value::PointList(v) => json!(v.iter().map(|p| p.to_string()).collect::<Vec<_>>()),
            Value::LineSeed { points, .. } => json!([points.0.to_string(), points.1.to_string()]),
            Value::Table(t) => t.to_json(),
            Value::Word { word, target, .. } => json!({ "word": word, "target": target }),
            Value::GroupRecipe(g) => json!(g),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Matrix(m) => write!(f, "{m}"),
            Value::Polynomial(p) => write!(f, "{p}"),
            Value::PolynomialList(v) => {
                for p in v {
                    writeln!(f, "{p}")?;
                }
                Ok(())
            }
            Value::PointList(v) => {
                let s: Vec<String> = v.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", s.join(", "))
            }
            Value::LineSeed { points, .. } => write!(f, "line through {} and {}", points.0, points.1),
            Value::Table(t) => write!(f, "{t}"),
            Value::Word { word, target, .. } => match target {
                Some(t) => write!(f, "{word} (should equal {t})"),
                None => write!(f, "{word}"),
            },
            Value::GroupRecipe(g) => write!(f, "<{}>", g.join(", ")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Erratum {
    pub note: String,
    pub corrected: Option<Value>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry {
    pub key: String,
    pub kind: Kind,
    /// The value exactly as printed.
    pub value: Value,
    pub source_text: String,
    pub paper_location: String,
    pub erratum: Option<Erratum>,
}

impl CatalogEntry {
    /// Corrected value if an erratum supplies one, the printed value otherwise.
    pub fn effective(&self) -> &Value {
        self.erratum
            .as_ref()
            .and_then(|e| e.corrected.as_ref())
            .unwrap_or(&self.value)
    }

    pub fn to_json(&self) -> Json {
        let mut o = json!({
            "key": self.key,
            "kind": self.kind.to_string(),
            "paper_location": self.paper_location,
            "printed": self.source_text,
            "value": self.value.to_json(),
        });
        if let Some(e) = &self.erratum {
            o["erratum"] = json!({
                "note": e.note,
                "corrected": e.corrected.as_ref().map(|v| v.to_json()),
            });
        }
        o
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} ({})\n  at: {}\n  printed: {}\n", self.key, self.kind, self.paper_location, self.source_text);
        for line in self.value.to_string().lines() {
            s.push_str("  | ");
            s.push_str(line);
            s.push('\n');
        }
        if let Some(e) = &self.erratum {
            s.push_str(&format!("  erratum: {}\n", e.note));
            if let Some(c) = &e.corrected {
                for line in c.to_string().lines() {
                    s.push_str("  corrected | ");
                    s.push_str(line);
                    s.push('\n');
                }
            }
        }
        s
    }
}

fn source_text(src: &Source) -> String {
    match src {
        Source::Matrix { prefactor, rows } => format!("{prefactor} * [{rows}]"),
        Source::Poly(p) => p.to_string(),
        Source::Combo(terms) => terms
            .iter()
            .map(|(c, k)| format!("({c})*{k}"))
            .collect::<Vec<_>>()
            .join(" + "),
        Source::PolyList(v) => v.join(", "),
        Source::Points(p) => p.split_whitespace().collect::<Vec<_>>().join(" "),
        Source::Line(a, b) => format!("{a} {b}"),
        Source::Table(t) => t.split_whitespace().collect::<Vec<_>>().join(" "),
        Source::Word { word, .. } => word.to_string(),
        Source::Recipe(r) => r.to_string(),
    }
}

fn parse_points(text: &str) -> Result<Vec<ProjPoint>> {
    text.split(']')
        .map(|s| s.trim().trim_start_matches(',').trim())
        .filter(|s| !s.is_empty())
        .map(|s| ProjPoint::parse(&format!("{s}]")))
        .collect()
}

fn parse_factor(tok: &str) -> Result<(String, u64)> {
    let tok = tok.trim();
    match tok.split_once('^') {
        Some((k, e)) => {
            let e: u64 = e
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in word factor {tok:?}")))?;
            Ok((k.trim().to_string(), e))
        }
        None => Ok((tok.to_string(), 1)),
    }
}

/// Splits `T^4*S*T` into factors; the empty word has no factors.
pub fn parse_word(word: &str) -> Result<Vec<(String, u64)>> {
    if word.trim().is_empty() {
        return Ok(Vec::new());
    }
    word.split('*').map(parse_factor).collect()
}

struct Loader<'a> {
    raws: HashMap<&'static str, &'a Raw>,
    done: HashMap<String, CatalogEntry>,
    in_progress: Vec<String>,
}

impl<'a> Loader<'a> {
    fn matrix_of(&mut self, key: &str) -> Result<Mat> {
        match self.entry(key)?.effective() {
            Value::Matrix(m) => Ok(m.clone()),
            Value::Word { factors, .. } => {
                let factors = factors.clone();
                self.eval_factors(&factors)
            }
            _ => Err(Error::Parse(format!("{key} is not a matrix"))),
        }
    }

    fn eval_factors(&mut self, factors: &[(String, u64)]) -> Result<Mat> {
        let mut acc = Mat::identity(4, 1);
        for (k, e) in factors {
            let m = self.matrix_of(k)?;
            acc = acc.try_mul(&m.pow(*e))?;
        }
        Ok(acc)
    }

    fn poly_of(&mut self, key: &str) -> Result<HomPoly> {
        match self.entry(key)?.effective() {
            Value::Polynomial(p) => Ok(p.clone()),
            _ => Err(Error::Parse(format!("{key} is not a polynomial"))),
        }
    }

    fn parse_source(&mut self, src: &Source) -> Result<Value> {
        Ok(match src {
            Source::Matrix { prefactor, rows } => {
                let text: Vec<Vec<&str>> = rows.split(';').map(|r| r.split_whitespace().collect()).collect();
                let refs: Vec<&[&str]> = text.iter().map(|r| r.as_slice()).collect();
                let m = Mat::parse_rows(&refs)?;
                Value::Matrix(m.scale(&CycNum::parse(prefactor)?)?)
            }
            Source::Poly(p) => Value::Polynomial(HomPoly::parse(p)?),
            Source::Combo(terms) => {
                let mut items = Vec::new();
                for (c, k) in terms.iter() {
                    items.push((CycNum::parse(c)?, self.poly_of(k)?));
                }
                let refs: Vec<(CycNum, &HomPoly)> = items.iter().map(|(c, p)| (c.clone(), p)).collect();
                Value::Polynomial(HomPoly::linear_combination(&refs)?)
            }
            Source::PolyList(v) => Value::PolynomialList(v.iter().map(|p| HomPoly::parse(p)).collect::<Result<_>>()?),
            Source::Points(p) => Value::PointList(parse_points(p)?),
            Source::Line(a, b) => {
                let pa = ProjPoint::parse(a)?;
                let pb = ProjPoint::parse(b)?;
                Value::LineSeed { line: ProjLine::through(&pa, &pb)?, points: (pa, pb) }
            }
            Source::Table(t) => Value::Table(Table::parse(t)?),
            Source::Word { word, target } => {
                let factors = parse_word(word)?;
                // Resolve eagerly so a bad factor is a load error.
                self.eval_factors(&factors)?;
                Value::Word { word: word.to_string(), factors, target: target.map(str::to_string) }
            }
            Source::Recipe(r) => {
                let gens: Vec<String> = r.split(',').map(|s| s.trim().to_string()).collect();
                for g in &gens {
                    let f = parse_word(g)?;
                    self.eval_factors(&f)?;
                }
                Value::GroupRecipe(gens)
            }
        })
    }

    fn entry(&mut self, key: &str) -> Result<&CatalogEntry> {
        if !self.done.contains_key(key) {
            let raw = *self.raws.get(key).ok_or_else(|| Error::UnknownKey(key.to_string()))?;
            if self.in_progress.iter().any(|k| k == key) {
                return Err(Error::Parse(format!("catalog entry {key} refers to itself")));
            }
            self.in_progress.push(key.to_string());
            let value = self
                .parse_source(&raw.source)
                .map_err(|e| Error::Parse(format!("catalog entry {key}: {e}")))?;
            let erratum = match &raw.erratum {
                None => None,
                Some((note, corrected)) => Some(Erratum {
                    note: note.to_string(),
                    corrected: match corrected {
                        Some(src) => Some(
                            self.parse_source(src)
                                .map_err(|e| Error::Parse(format!("catalog entry {key} (corrected): {e}")))?,
                        ),
                        None => None,
                    },
                }),
            };
            self.in_progress.pop();
            self.done.insert(
                key.to_string(),
                CatalogEntry {
                    key: key.to_string(),
                    kind: value.kind(),
                    value,
                    source_text: source_text(&raw.source),
                    paper_location: raw.location.to_string(),
                    erratum,
                },
            );
        }
        Ok(&self.done[key])
    }
}

#[derive(Debug, Clone)]
pub struct Catalog {
    entries: BTreeMap<String, CatalogEntry>,
}

static STANDARD: OnceLock<std::result::Result<Catalog, Error>> = OnceLock::new();

impl Catalog {
    /// Parses every built-in entry.
    pub fn load() -> Result<Catalog> {
        let mut raws = HashMap::new();
        for r in ENTRIES {
            if raws.insert(r.key, r).is_some() {
                return Err(Error::Parse(format!("duplicate catalog key {}", r.key)));
            }
        }
        let mut loader = Loader { raws, done: HashMap::new(), in_progress: Vec::new() };
        for r in ENTRIES {
            loader.entry(r.key)?;
        }
        Ok(Catalog { entries: loader.done.into_iter().collect() })
    }

    /// The built-in catalog, parsed once per process.
    pub fn standard() -> Result<&'static Catalog> {
        STANDARD.get_or_init(Catalog::load).as_ref().map_err(Clone::clone)
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn entries(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.values()
    }

    pub fn get(&self, key: &str) -> Result<&CatalogEntry> {
        self.entries.get(key).ok_or_else(|| Error::UnknownKey(key.to_string()))
    }

    /// Copy with one entry's printed value replaced and its erratum dropped.
    /// Dependent entries keep their already-parsed values. Intended for mutation tests.
    pub fn with_value(&self, key: &str, value: Value) -> Result<Catalog> {
        let mut out = self.clone();
        let e = out.entries.get_mut(key).ok_or_else(|| Error::UnknownKey(key.to_string()))?;
        if e.kind != value.kind() {
            return Err(Error::Precondition(format!("{key} holds a {}, not a {}", e.kind, value.kind())));
        }
        e.value = value;
        e.erratum = None;
        Ok(out)
    }

    fn wrong_kind(key: &str, want: Kind) -> Error {
        Error::Precondition(format!("catalog entry {key} is not a {want}"))
    }

    /// Effective matrix; words are evaluated.
    pub fn matrix(&self, key: &str) -> Result<Mat> {
        match self.get(key)?.effective() {
            Value::Matrix(m) => Ok(m.clone()),
            Value::Word { factors, .. } => self.eval_factors(factors),
            _ => Err(Self::wrong_kind(key, Kind::Matrix)),
        }
    }

    /// Matrix exactly as printed.
    pub fn printed_matrix(&self, key: &str) -> Result<Mat> {
        match &self.get(key)?.value {
            Value::Matrix(m) => Ok(m.clone()),
            _ => Err(Self::wrong_kind(key, Kind::Matrix)),
        }
    }

    pub fn poly(&self, key: &str) -> Result<HomPoly> {
        match self.get(key)?.effective() {
            Value::Polynomial(p) => Ok(p.clone()),
            _ => Err(Self::wrong_kind(key, Kind::Polynomial)),
        }
    }

    pub fn printed_poly(&self, key: &str) -> Result<HomPoly> {
        match &self.get(key)?.value {
            Value::Polynomial(p) => Ok(p.clone()),
            _ => Err(Self::wrong_kind(key, Kind::Polynomial)),
        }
    }

    pub fn polys(&self, key: &str) -> Result<Vec<HomPoly>> {
        match self.get(key)?.effective() {
            Value::PolynomialList(p) => Ok(p.clone()),
            _ => Err(Self::wrong_kind(key, Kind::PolynomialList)),
        }
    }

    pub fn points(&self, key: &str) -> Result<Vec<ProjPoint>> {
        match self.get(key)?.effective() {
            Value::PointList(p) => Ok(p.clone()),
            _ => Err(Self::wrong_kind(key, Kind::PointList)),
        }
    }

    pub fn line(&self, key: &str) -> Result<(ProjLine, (ProjPoint, ProjPoint))> {
        match self.get(key)?.effective() {
            Value::LineSeed { line, points } => Ok((line.clone(), points.clone())),
            _ => Err(Self::wrong_kind(key, Kind::LineSeed)),
        }
    }

    pub fn table(&self, key: &str) -> Result<&Table> {
        match self.get(key)?.effective() {
            Value::Table(t) => Ok(t),
            _ => Err(Self::wrong_kind(key, Kind::Table)),
        }
    }

    fn eval_factors(&self, factors: &[(String, u64)]) -> Result<Mat> {
        let mut acc = Mat::identity(4, 1);
        for (k, e) in factors {
            acc = acc.try_mul(&self.matrix(k)?.pow(*e))?;
        }
        Ok(acc)
    }

    /// Evaluates a product of catalog matrices such as `T^4*S*T*S`; the empty word is I₄.
    pub fn eval_word(&self, word: &str) -> Result<Mat> {
        self.eval_factors(&parse_word(word)?)
    }

    /// Generator matrices of a group recipe.
    pub fn group_generators(&self, key: &str) -> Result<Vec<Mat>> {
        match self.get(key)?.effective() {
            Value::GroupRecipe(g) => g.iter().map(|w| self.eval_word(w)).collect(),
            _ => Err(Self::wrong_kind(key, Kind::GroupRecipe)),
        }
    }

    pub fn group(&self, key: &str, mode: Mode) -> Result<MatrixGroup> {
        Ok(MatrixGroup::close(&self.group_generators(key)?, mode)?.with_name(key))
    }

    /// True iff the evaluated word equals the matrix it names, exactly and including scalars.
    /// The comparison uses the effective matrix; see [`Catalog::word_diff`] for the printed one.
    pub fn word_check(&self, key: &str) -> Result<bool> {
        let (m, target) = self.word_parts(key)?;
        Ok(m == self.matrix(&target)?)
    }

    /// Entries `(row, col, printed, computed)` where the printed target differs from the word.
    pub fn word_diff(&self, key: &str) -> Result<Vec<(usize, usize, CycNum, CycNum)>> {
        let (m, target) = self.word_parts(key)?;
        let p = self.printed_matrix(&target)?;
        let mut out = Vec::new();
        for r in 0..4 {
            for c in 0..4 {
                if p.get(r, c) != m.get(r, c) {
                    out.push((r + 1, c + 1, p.get(r, c).clone(), m.get(r, c).clone()));
                }
            }
        }
        Ok(out)
    }

    fn word_parts(&self, key: &str) -> Result<(Mat, String)> {
        match &self.get(key)?.value {
            Value::Word { factors, target: Some(t), .. } => Ok((self.eval_factors(factors)?, t.clone())),
            _ => Err(Error::Precondition(format!("{key} is not a word with a target matrix"))),
        }
    }

    pub fn export_text(&self, keys: &[&str]) -> Result<String> {
        let mut s = String::new();
        for e in self.select(keys)? {
            s.push_str(&e.to_text());
        }
        Ok(s)
    }

    pub fn export_json(&self, keys: &[&str]) -> Result<Json> {
        Ok(Json::Array(self.select(keys)?.into_iter().map(CatalogEntry::to_json).collect()))
    }

    /// Entries for the given keys, or all entries in key order when `keys` is empty.
    fn select(&self, keys: &[&str]) -> Result<Vec<&CatalogEntry>> {
        if keys.is_empty() {
            Ok(self.entries.values().collect())
        } else {
            keys.iter().map(|k| self.get(k)).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat() -> &'static Catalog {
        Catalog::standard().unwrap()
    }

    #[test]
    fn every_entry_parses() {
        let c = cat();
        assert!(c.keys().count() >= 70);
        assert_eq!(c.get("Table1").unwrap().kind, Kind::Table);
        assert!(matches!(c.get("nope"), Err(Error::UnknownKey(_))));
    }

    #[test]
    fn sl_matrices_have_unit_determinant() {
        let c = cat();
        for k in ["S1", "S2", "T1", "T2", "iI", "S", "T", "A", "B", "R"] {
            assert!(c.matrix(k).unwrap().det().unwrap().is_one(), "{k}");
        }
        // The printed A is singular.
        assert!(c.printed_matrix("A").unwrap().det().unwrap().is_zero());
    }

    #[test]
    fn normalizer_relations() {
        let c = cat();
        let minus = Mat::scalar(4, &CycNum::from_int(1, -1));
        assert_eq!(c.matrix("S").unwrap().pow(4), minus);
        assert_eq!(c.matrix("T").unwrap().pow(5), minus);
    }

    #[test]
    fn words_match_corrected_matrices() {
        let c = cat();
        assert!(c.word_check("A-word").unwrap());
        assert!(c.word_check("B-word").unwrap());
        assert_eq!(c.word_diff("A-word").unwrap().len(), 1);
        assert_eq!(c.word_diff("B-word").unwrap().len(), 1);
        assert!(c.eval_word("").unwrap().is_identity());
        assert!(c.word_check("T").is_err());
    }

    #[test]
    fn quartic_identities() {
        let c = cat();
        let ts: Vec<HomPoly> = (0..6).map(|k| c.poly(&format!("t{k}")).unwrap()).collect();
        let mut sum = ts[0].clone();
        for t in &ts[1..] {
            sum = sum.try_add(t).unwrap();
        }
        assert!(sum.is_zero());
        let q0 = c.poly("q0").unwrap();
        assert_eq!(q0, ts[3].scale(&CycNum::from_frac(1, 3, 2)));
        assert_eq!(c.poly("q0-formula").unwrap(), q0);
        assert_ne!(c.printed_poly("q0-formula").unwrap(), q0);
        assert_eq!(c.poly("p0").unwrap(), c.poly("p0-square").unwrap());
    }

    #[test]
    fn table_shapes() {
        let c = cat();
        let t1 = c.table("Table1").unwrap().signs().unwrap();
        assert_eq!((t1.len(), t1[0].len()), (30, 10));
        assert_eq!(c.table("Table2").unwrap().cell("Sigma16^1", "S3"), Some("-"));
        assert_eq!(c.points("Sigma20").unwrap().len(), 20);
        assert_eq!(c.points("Sigma16-reps").unwrap().len(), 4);
    }

    #[test]
    fn export_round_trips_keys() {
        let c = cat();
        let j = c.export_json(&["T", "A"]).unwrap();
        assert_eq!(j[0]["key"], "T");
        assert!(j[1]["erratum"]["note"].as_str().unwrap().contains("singular"));
        assert!(c.export_text(&[]).unwrap().contains("Sigma20-dprime"));
    }

    #[test]
    fn mutation_replaces_printed_value() {
        let c = cat();
        let m = c.with_value("T", Value::Matrix(Mat::identity(4, 1))).unwrap();
        assert!(m.matrix("T").unwrap().is_identity());
        assert!(c.with_value("T", Value::GroupRecipe(vec![])).is_err());
    }
}
