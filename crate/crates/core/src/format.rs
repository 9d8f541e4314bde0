//! The restricted-JSON file formats: parsing with path diagnostics and
//! deterministic rendering.
//!
//! Indices in files are 1-based; structure constants are lists of
//! `[indices…, "p/q"]` rows, omitted rows are zero, and a repeated index
//! tuple is an error.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Deserialize;
use serde_json::{Map, Value};

use crate::algebra::{Bilinear, LeibnizAlgebra, LeibnizRep, PreLeibnizAlgebra, PreLeibnizRep};
use crate::cochain::{ColoredCochain, PlainCochain};
use crate::deformation::TruncatedDeformation;
use crate::error::{Error, Result};
use crate::exactla::{parse_rational, RatMatrix, Rational};
use crate::homotopy2::{CrossedModule, GradedMap, TwoTermComplex, TwoTermLeibniz, TwoTermPreLeibniz};

fn format_err(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Format { path: path.into(), message: message.into() }
}

/// Validated structure-constant rows, 0-based.
struct Entries {
    rows: Vec<(Vec<usize>, Rational)>,
}

impl Entries {
    /// Rows of `bounds.len()` indices and a rational; index `t` must lie in
    /// `1..=bounds[t]`.
    fn parse(rows: &[Value], path: &str, bounds: &[usize]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::with_capacity(rows.len());
        for (n, row) in rows.iter().enumerate() {
            let here = format!("{path}[{n}]");
            let items = row.as_array().ok_or_else(|| format_err(&here, "expected an array"))?;
            if items.len() != bounds.len() + 1 {
                return Err(format_err(
                    &here,
                    format!("expected {} indices and a coefficient, found {} items", bounds.len(), items.len()),
                ));
            }
            let mut idx = Vec::with_capacity(bounds.len());
            for (t, (item, &max)) in items.iter().zip(bounds).enumerate() {
                let v = item
                    .as_u64()
                    .ok_or_else(|| format_err(format!("{here}[{t}]"), "expected a positive integer index"))?;
                if v == 0 || v > max as u64 {
                    return Err(format_err(format!("{here}[{t}]"), format!("index {v} out of range 1..={max}")));
                }
                idx.push(v as usize - 1);
            }
            let last = bounds.len();
            let text = items[last]
                .as_str()
                .ok_or_else(|| format_err(format!("{here}[{last}]"), "expected a rational string \"p/q\""))?;
            let value = parse_rational(text).map_err(|m| format_err(format!("{here}[{last}]"), m))?;
            if !seen.insert(idx.clone()) {
                return Err(format_err(&here, "duplicate entry"));
            }
            out.push((idx, value));
        }
        Ok(Entries { rows: out })
    }

    fn bilinear(&self, l: usize, r: usize, o: usize) -> Bilinear {
        let mut b = Bilinear::zero(l, r, o);
        for (idx, v) in &self.rows {
            b.set(idx[0], idx[1], idx[2], v.clone());
        }
        b
    }

    /// Rows `[r, i, j, k, v]` split by color.
    fn bilinear_pair(&self, l: usize, r: usize, o: usize) -> [Bilinear; 2] {
        let mut pair = [Bilinear::zero(l, r, o), Bilinear::zero(l, r, o)];
        for (idx, v) in &self.rows {
            pair[idx[0]].set(idx[1], idx[2], idx[3], v.clone());
        }
        pair
    }

    fn matrix(&self, rows: usize, cols: usize) -> RatMatrix {
        let mut m = RatMatrix::zeros(rows, cols);
        for (idx, v) in &self.rows {
            m.set(idx[0], idx[1], v.clone());
        }
        m
    }

    fn colored(&self, arity: usize, dom: usize, cod: usize) -> ColoredCochain {
        let mut f = ColoredCochain::zero(arity, dom, cod);
        for (idx, v) in &self.rows {
            f.set(idx[0] + 1, &idx[1..=arity], idx[arity + 1], v.clone());
        }
        f
    }

    fn plain(&self, arity: usize, dom: usize, cod: usize) -> PlainCochain {
        let mut f = PlainCochain::zero(arity, dom, cod);
        for (idx, v) in &self.rows {
            f.set(&idx[..arity], idx[arity], v.clone());
        }
        f
    }
}

type Rows = Vec<Value>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPreAlgebra {
    #[serde(rename = "kind")]
    _kind: Option<String>,
    dim: usize,
    #[serde(default)]
    left: Rows,
    #[serde(default)]
    right: Rows,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLeibnizAlgebra {
    #[serde(rename = "kind")]
    _kind: Option<String>,
    dim: usize,
    #[serde(default)]
    bracket: Rows,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPreRep {
    #[serde(rename = "kind")]
    _kind: Option<String>,
    module_dim: usize,
    #[serde(default, rename = "leftL")]
    left_l: Rows,
    #[serde(default, rename = "rightL")]
    right_l: Rows,
    #[serde(default, rename = "leftR")]
    left_r: Rows,
    #[serde(default, rename = "rightR")]
    right_r: Rows,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLeibnizRep {
    #[serde(rename = "kind")]
    _kind: Option<String>,
    module_dim: usize,
    #[serde(default, rename = "rhoL")]
    rho_l: Rows,
    #[serde(default, rename = "rhoR")]
    rho_r: Rows,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCochain {
    #[serde(rename = "kind")]
    _kind: Option<String>,
    arity: usize,
    domain_dim: usize,
    codomain_dim: usize,
    #[serde(default)]
    entries: Rows,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDeformation {
    #[serde(rename = "kind")]
    _kind: Option<String>,
    base: Value,
    order: usize,
    terms: Vec<Value>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTwoTermPre {
    #[serde(rename = "kind")]
    _kind: Option<String>,
    dim_m1: usize,
    dim_0: usize,
    #[serde(default)]
    d: Rows,
    #[serde(default)]
    pi2_00: Rows,
    #[serde(default)]
    pi2_0m: Rows,
    #[serde(default)]
    pi2_m0: Rows,
    #[serde(default)]
    pi3: Rows,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTwoTermLeibniz {
    #[serde(rename = "kind")]
    _kind: Option<String>,
    dim_m1: usize,
    dim_0: usize,
    #[serde(default)]
    d: Rows,
    #[serde(default)]
    mu2_00: Rows,
    #[serde(default)]
    mu2_0m: Rows,
    #[serde(default)]
    mu2_m0: Rows,
    #[serde(default)]
    mu3: Rows,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCrossed {
    #[serde(rename = "kind")]
    _kind: Option<String>,
    a: Value,
    b: Value,
    #[serde(default)]
    d: Rows,
    #[serde(default, rename = "piL")]
    pi_l: Rows,
    #[serde(default, rename = "piR")]
    pi_r: Rows,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTriple {
    #[serde(rename = "kind")]
    _kind: Option<String>,
    algebra: Value,
    rep: Value,
    theta: Value,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOperator {
    #[serde(rename = "kind")]
    _kind: Option<String>,
    #[serde(default)]
    t_m1: Rows,
    #[serde(default)]
    t_0: Rows,
}

/// A representation file; the algebra dimension comes from context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepFile {
    module_dim: usize,
    rows: [Vec<Value>; 4],
    path: String,
}

impl RepFile {
    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn build(&self, algebra_dim: usize) -> Result<PreLeibnizRep> {
        let (d, e) = (algebra_dim, self.module_dim);
        let names = ["leftL", "rightL", "leftR", "rightR"];
        let mut parts = Vec::with_capacity(4);
        for (t, rows) in self.rows.iter().enumerate() {
            let bounds = if t < 2 { [d, e, e] } else { [e, d, e] };
            let entries = Entries::parse(rows, &format!("{}.{}", self.path, names[t]), &bounds)?;
            parts.push(entries.bilinear(bounds[0], bounds[1], bounds[2]));
        }
        let [a, b, c, dd]: [Bilinear; 4] = parts.try_into().expect("four actions");
        PreLeibnizRep::new(a, b, c, dd)
    }
}

/// A Leibniz representation file; the algebra dimension comes from context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeibnizRepFile {
    module_dim: usize,
    rho_l: Vec<Value>,
    rho_r: Vec<Value>,
    path: String,
}

impl LeibnizRepFile {
    pub fn build(&self, algebra_dim: usize) -> Result<LeibnizRep> {
        let (d, e) = (algebra_dim, self.module_dim);
        let l = Entries::parse(&self.rho_l, &format!("{}.rhoL", self.path), &[d, e, e])?;
        let r = Entries::parse(&self.rho_r, &format!("{}.rhoR", self.path), &[e, d, e])?;
        LeibnizRep::new(l.bilinear(d, e, e), r.bilinear(e, d, e))
    }
}

/// A Rota-Baxter operator file `(T₋₁, T₀)`; dimensions come from context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorFile {
    t_m1: Vec<Value>,
    t_0: Vec<Value>,
    path: String,
}

impl OperatorFile {
    pub fn build(&self, dim_m1: usize, dim_0: usize) -> Result<GradedMap> {
        let a = Entries::parse(&self.t_m1, &format!("{}.t_m1", self.path), &[dim_m1, dim_m1])?;
        let b = Entries::parse(&self.t_0, &format!("{}.t_0", self.path), &[dim_0, dim_0])?;
        GradedMap::new(a.matrix(dim_m1, dim_m1), b.matrix(dim_0, dim_0))
    }
}

/// Any object the file formats describe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    PreLeibnizAlgebra(PreLeibnizAlgebra),
    LeibnizAlgebra(LeibnizAlgebra),
    PreLeibnizRep(RepFile),
    LeibnizRep(LeibnizRepFile),
    Cochain(ColoredCochain),
    Deformation(TruncatedDeformation),
    TwoTermPreLeibniz(TwoTermPreLeibniz),
    TwoTermLeibniz(TwoTermLeibniz),
    CrossedModule(CrossedModule),
    SkeletalTriple(PreLeibnizAlgebra, PreLeibnizRep, ColoredCochain),
    TwoTermOperator(OperatorFile),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::PreLeibnizAlgebra(_) => "pre_leibniz_algebra",
            Document::LeibnizAlgebra(_) => "leibniz_algebra",
            Document::PreLeibnizRep(_) => "pre_leibniz_rep",
            Document::LeibnizRep(_) => "leibniz_rep",
            Document::Cochain(_) => "cochain",
            Document::Deformation(_) => "deformation",
            Document::TwoTermPreLeibniz(_) => "two_term_pre_leibniz",
            Document::TwoTermLeibniz(_) => "two_term_leibniz",
            Document::CrossedModule(_) => "crossed_module",
            Document::SkeletalTriple(..) => "skeletal_triple",
            Document::TwoTermOperator(_) => "two_term_operator",
        }
    }
}

/// Parses a document; a missing `"kind"` means a cochain.
pub fn parse_document(text: &str) -> Result<Document> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| format_err(format!("line {}, column {}", e.line(), e.column()), e.to_string()))?;
    from_value(&value, "$")
}

fn kind_of(v: &Value, path: &str) -> Result<Option<String>> {
    let obj = v.as_object().ok_or_else(|| format_err(path, "expected an object"))?;
    match obj.get("kind") {
        None => Ok(None),
        Some(Value::String(s)) => Ok(Some(s.clone())),
        Some(_) => Err(format_err(format!("{path}.kind"), "expected a string")),
    }
}

fn raw<T: for<'de> Deserialize<'de>>(v: &Value, path: &str) -> Result<T> {
    T::deserialize(v).map_err(|e| format_err(path, e.to_string()))
}

fn rows_at(path: &str, field: &str) -> String {
    format!("{path}.{field}")
}

/// Parses the object at `path`.
pub fn from_value(v: &Value, path: &str) -> Result<Document> {
    let kind = kind_of(v, path)?;
    let p = path;
    Ok(match kind.as_deref() {
        Some("pre_leibniz_algebra") => Document::PreLeibnizAlgebra(pre_algebra(v, p)?),
        Some("leibniz_algebra") => {
            let r: RawLeibnizAlgebra = raw(v, p)?;
            let n = r.dim;
            let e = Entries::parse(&r.bracket, &rows_at(p, "bracket"), &[n, n, n])?;
            Document::LeibnizAlgebra(LeibnizAlgebra::from_bilinear(e.bilinear(n, n, n))?)
        }
        Some("pre_leibniz_rep") => {
            let r: RawPreRep = raw(v, p)?;
            Document::PreLeibnizRep(RepFile {
                module_dim: r.module_dim,
                rows: [r.left_l, r.right_l, r.left_r, r.right_r],
                path: p.to_string(),
            })
        }
        Some("leibniz_rep") => {
            let r: RawLeibnizRep = raw(v, p)?;
            Document::LeibnizRep(LeibnizRepFile {
                module_dim: r.module_dim,
                rho_l: r.rho_l,
                rho_r: r.rho_r,
                path: p.to_string(),
            })
        }
        None | Some("cochain") => Document::Cochain(cochain(v, p)?),
        Some("deformation") => {
            let r: RawDeformation = raw(v, p)?;
            let base = pre_algebra(&r.base, &rows_at(p, "base"))?;
            if r.terms.len() != r.order {
                return Err(format_err(
                    rows_at(p, "terms"),
                    format!("order is {} but {} terms are given", r.order, r.terms.len()),
                ));
            }
            let mut terms = Vec::with_capacity(r.order);
            for (n, t) in r.terms.iter().enumerate() {
                let here = format!("{p}.terms[{n}]");
                let f = cochain(t, &here)?;
                if f.arity() != 2 || f.domain_dim() != base.dim() || f.codomain_dim() != base.dim() {
                    return Err(format_err(here, "terms must be colored 2-cochains on the base space"));
                }
                terms.push(f);
            }
            Document::Deformation(TruncatedDeformation::new(base, terms).map_err(|e| format_err(p, e.to_string()))?)
        }
        Some("two_term_pre_leibniz") => {
            let r: RawTwoTermPre = raw(v, p)?;
            let (m, z) = (r.dim_m1, r.dim_0);
            let d = Entries::parse(&r.d, &rows_at(p, "d"), &[z, m])?.matrix(z, m);
            let pi2_00 = Entries::parse(&r.pi2_00, &rows_at(p, "pi2_00"), &[2, z, z, z])?.colored(2, z, z);
            let pi2_0m = Entries::parse(&r.pi2_0m, &rows_at(p, "pi2_0m"), &[2, z, m, m])?.bilinear_pair(z, m, m);
            let pi2_m0 = Entries::parse(&r.pi2_m0, &rows_at(p, "pi2_m0"), &[2, m, z, m])?.bilinear_pair(m, z, m);
            let pi3 = Entries::parse(&r.pi3, &rows_at(p, "pi3"), &[3, z, z, z, m])?.colored(3, z, m);
            Document::TwoTermPreLeibniz(TwoTermPreLeibniz::new(
                TwoTermComplex::new(m, z, d)?,
                pi2_00,
                pi2_0m,
                pi2_m0,
                pi3,
            )?)
        }
        Some("two_term_leibniz") => {
            let r: RawTwoTermLeibniz = raw(v, p)?;
            let (m, z) = (r.dim_m1, r.dim_0);
            let d = Entries::parse(&r.d, &rows_at(p, "d"), &[z, m])?.matrix(z, m);
            let mu2_00 = Entries::parse(&r.mu2_00, &rows_at(p, "mu2_00"), &[z, z, z])?.bilinear(z, z, z);
            let mu2_0m = Entries::parse(&r.mu2_0m, &rows_at(p, "mu2_0m"), &[z, m, m])?.bilinear(z, m, m);
            let mu2_m0 = Entries::parse(&r.mu2_m0, &rows_at(p, "mu2_m0"), &[m, z, m])?.bilinear(m, z, m);
            let mu3 = Entries::parse(&r.mu3, &rows_at(p, "mu3"), &[z, z, z, m])?.plain(3, z, m);
            Document::TwoTermLeibniz(TwoTermLeibniz::new(TwoTermComplex::new(m, z, d)?, mu2_00, mu2_0m, mu2_m0, mu3)?)
        }
        Some("crossed_module") => {
            let r: RawCrossed = raw(v, p)?;
            let a = pre_algebra(&r.a, &rows_at(p, "a"))?;
            let b = pre_algebra(&r.b, &rows_at(p, "b"))?;
            let (da, db) = (a.dim(), b.dim());
            let d = Entries::parse(&r.d, &rows_at(p, "d"), &[db, da])?.matrix(db, da);
            let [ll, rl] = Entries::parse(&r.pi_l, &rows_at(p, "piL"), &[2, db, da, da])?.bilinear_pair(db, da, da);
            let [lr, rr] = Entries::parse(&r.pi_r, &rows_at(p, "piR"), &[2, da, db, da])?.bilinear_pair(da, db, da);
            Document::CrossedModule(CrossedModule::new(a, b, d, PreLeibnizRep::new(ll, rl, lr, rr)?)?)
        }
        Some("skeletal_triple") => {
            let r: RawTriple = raw(v, p)?;
            let algebra = pre_algebra(&r.algebra, &rows_at(p, "algebra"))?;
            let rep = match from_value(&r.rep, &rows_at(p, "rep"))? {
                Document::PreLeibnizRep(f) => f.build(algebra.dim())?,
                other => {
                    return Err(format_err(
                        rows_at(p, "rep"),
                        format!("expected pre_leibniz_rep, found {}", other.kind()),
                    ))
                }
            };
            let theta = cochain(&r.theta, &rows_at(p, "theta"))?;
            if theta.arity() != 3 || theta.domain_dim() != algebra.dim() || theta.codomain_dim() != rep.module_dim() {
                return Err(format_err(
                    rows_at(p, "theta"),
                    "expected a colored 3-cochain from the algebra to the module",
                ));
            }
            Document::SkeletalTriple(algebra, rep, theta)
        }
        Some("two_term_operator") => {
            let r: RawOperator = raw(v, p)?;
            Document::TwoTermOperator(OperatorFile { t_m1: r.t_m1, t_0: r.t_0, path: p.to_string() })
        }
        Some(other) => return Err(format_err(format!("{p}.kind"), format!("unknown kind \"{other}\""))),
    })
}

fn pre_algebra(v: &Value, p: &str) -> Result<PreLeibnizAlgebra> {
    match kind_of(v, p)?.as_deref() {
        Some("pre_leibniz_algebra") => {}
        other => {
            return Err(format_err(
                format!("{p}.kind"),
                format!("expected pre_leibniz_algebra, found {}", other.unwrap_or("no kind")),
            ))
        }
    }
    let r: RawPreAlgebra = raw(v, p)?;
    let n = r.dim;
    let left = Entries::parse(&r.left, &rows_at(p, "left"), &[n, n, n])?.bilinear(n, n, n);
    let right = Entries::parse(&r.right, &rows_at(p, "right"), &[n, n, n])?.bilinear(n, n, n);
    PreLeibnizAlgebra::from_products(left, right)
}

fn cochain(v: &Value, p: &str) -> Result<ColoredCochain> {
    match kind_of(v, p)?.as_deref() {
        None | Some("cochain") => {}
        Some(other) => return Err(format_err(format!("{p}.kind"), format!("expected cochain, found {other}"))),
    }
    let r: RawCochain = raw(v, p)?;
    if r.arity == 0 {
        return Err(format_err(rows_at(p, "arity"), "arity must be at least 1"));
    }
    let mut bounds = vec![r.arity];
    bounds.extend(std::iter::repeat_n(r.domain_dim, r.arity));
    bounds.push(r.codomain_dim);
    let e = Entries::parse(&r.entries, &rows_at(p, "entries"), &bounds)?;
    Ok(e.colored(r.arity, r.domain_dim, r.codomain_dim))
}

fn num(n: usize) -> Value {
    Value::from(n as u64)
}

fn row(idx: impl IntoIterator<Item = usize>, v: &Rational) -> Value {
    let mut items: Vec<Value> = idx.into_iter().map(|i| num(i + 1)).collect();
    items.push(Value::String(v.to_string()));
    Value::Array(items)
}

fn bilinear_rows(b: &Bilinear) -> Value {
    Value::Array(b.nonzero_entries().iter().map(|(i, j, k, v)| row([*i, *j, *k], v)).collect())
}

fn pair_rows(pair: &[Bilinear; 2]) -> Value {
    let mut rows = Vec::new();
    for (c, b) in pair.iter().enumerate() {
        rows.extend(b.nonzero_entries().iter().map(|(i, j, k, v)| row([c, *i, *j, *k], v)));
    }
    Value::Array(rows)
}

fn matrix_rows(m: &RatMatrix) -> Value {
    let mut rows = Vec::new();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let v = m.get(r, c);
            if !v.is_zero() {
                rows.push(row([r, c], v));
            }
        }
    }
    Value::Array(rows)
}

fn colored_rows(f: &ColoredCochain) -> Value {
    Value::Array(
        f.nonzero_entries()
            .iter()
            .map(|(c, args, k, v)| row(std::iter::once(c - 1).chain(args.iter().copied()).chain([*k]), v))
            .collect(),
    )
}

fn plain_rows(f: &PlainCochain) -> Value {
    Value::Array(f.nonzero_entries().iter().map(|(args, k, v)| row(args.iter().copied().chain([*k]), v)).collect())
}

fn object(kind: &str, fields: Vec<(&str, Value)>) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), Value::String(kind.into()));
    for (k, v) in fields {
        m.insert(k.into(), v);
    }
    Value::Object(m)
}

pub fn pre_algebra_value(p: &PreLeibnizAlgebra) -> Value {
    object(
        "pre_leibniz_algebra",
        vec![("dim", num(p.dim())), ("left", bilinear_rows(p.left())), ("right", bilinear_rows(p.right()))],
    )
}

pub fn leibniz_algebra_value(l: &LeibnizAlgebra) -> Value {
    object("leibniz_algebra", vec![("dim", num(l.dim())), ("bracket", bilinear_rows(l.table()))])
}

pub fn pre_rep_value(r: &PreLeibnizRep) -> Value {
    object(
        "pre_leibniz_rep",
        vec![
            ("module_dim", num(r.module_dim())),
            ("leftL", bilinear_rows(r.left_l())),
            ("rightL", bilinear_rows(r.right_l())),
            ("leftR", bilinear_rows(r.left_r())),
            ("rightR", bilinear_rows(r.right_r())),
        ],
    )
}

pub fn leibniz_rep_value(r: &LeibnizRep) -> Value {
    object(
        "leibniz_rep",
        vec![
            ("module_dim", num(r.module_dim())),
            ("rhoL", bilinear_rows(r.rho_l())),
            ("rhoR", bilinear_rows(r.rho_r())),
        ],
    )
}

pub fn cochain_value(f: &ColoredCochain) -> Value {
    object(
        "cochain",
        vec![
            ("arity", num(f.arity())),
            ("domain_dim", num(f.domain_dim())),
            ("codomain_dim", num(f.codomain_dim())),
            ("entries", colored_rows(f)),
        ],
    )
}

pub fn deformation_value(d: &TruncatedDeformation) -> Value {
    object(
        "deformation",
        vec![
            ("base", pre_algebra_value(d.base())),
            ("order", num(d.order())),
            ("terms", Value::Array(d.terms().iter().map(cochain_value).collect())),
        ],
    )
}

pub fn two_term_pre_value(x: &TwoTermPreLeibniz) -> Value {
    let c = x.complex();
    object(
        "two_term_pre_leibniz",
        vec![
            ("dim_m1", num(c.dim_m1())),
            ("dim_0", num(c.dim_0())),
            ("d", matrix_rows(c.d())),
            ("pi2_00", colored_rows(x.pi2_00())),
            ("pi2_0m", pair_rows(x.pi2_0m())),
            ("pi2_m0", pair_rows(x.pi2_m0())),
            ("pi3", colored_rows(x.pi3())),
        ],
    )
}

pub fn two_term_leibniz_value(y: &TwoTermLeibniz) -> Value {
    let c = y.complex();
    object(
        "two_term_leibniz",
        vec![
            ("dim_m1", num(c.dim_m1())),
            ("dim_0", num(c.dim_0())),
            ("d", matrix_rows(c.d())),
            ("mu2_00", bilinear_rows(y.mu2_00())),
            ("mu2_0m", bilinear_rows(y.mu2_0m())),
            ("mu2_m0", bilinear_rows(y.mu2_m0())),
            ("mu3", plain_rows(y.mu3())),
        ],
    )
}

pub fn crossed_module_value(c: &CrossedModule) -> Value {
    let act = c.action();
    object(
        "crossed_module",
        vec![
            ("a", pre_algebra_value(c.a())),
            ("b", pre_algebra_value(c.b())),
            ("d", matrix_rows(c.d())),
            ("piL", pair_rows(&[act.left_l().clone(), act.right_l().clone()])),
            ("piR", pair_rows(&[act.left_r().clone(), act.right_r().clone()])),
        ],
    )
}

pub fn skeletal_triple_value(p: &PreLeibnizAlgebra, r: &PreLeibnizRep, theta: &ColoredCochain) -> Value {
    object(
        "skeletal_triple",
        vec![("algebra", pre_algebra_value(p)), ("rep", pre_rep_value(r)), ("theta", cochain_value(theta))],
    )
}

pub fn operator_value(t: &GradedMap) -> Value {
    object("two_term_operator", vec![("t_m1", matrix_rows(t.t_m1())), ("t_0", matrix_rows(t.t_0()))])
}

/// Renders with one structure-constant row per line; field order is kept.
pub fn render(v: &Value) -> String {
    let mut out = String::new();
    render_into(&mut out, v, 0);
    out.push('\n');
    out
}

fn compact(v: &Value) -> String {
    match v {
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(compact).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}

fn render_into(out: &mut String, v: &Value, indent: usize) {
    let pad = " ".repeat(indent + 2);
    match v {
        Value::Object(m) if !m.is_empty() => {
            out.push_str("{\n");
            for (n, (k, val)) in m.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                render_into(out, val, indent + 2);
                if n + 1 < m.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&" ".repeat(indent));
            out.push('}');
        }
        Value::Array(items) if !items.is_empty() && items.iter().all(|i| i.is_array() || i.is_object()) => {
            out.push_str("[\n");
            for (n, item) in items.iter().enumerate() {
                out.push_str(&pad);
                if item.is_object() {
                    render_into(out, item, indent + 2);
                } else {
                    out.push_str(&compact(item));
                }
                if n + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&" ".repeat(indent));
            out.push(']');
        }
        other => out.push_str(&compact(other)),
    }
}
