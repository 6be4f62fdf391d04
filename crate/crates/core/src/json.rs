//! JSON documents for algebras, Hopf algebras, gradings, actions and coactions.

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::comodule::Coaction;
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Matrix, Scalar};
use crate::grading::Grading;
use crate::modulealg::{GroupAction, ModuleStructure};
use crate::structconst::{FinAlgebra, FinCoalgebra, FinHopf, FiniteGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Algebra,
    Hopf,
    Group,
    Grading,
    Module,
    GroupAction,
    Coaction,
}

impl Kind {
    pub fn name(&self) -> &'static str {
        match self {
            Kind::Algebra => "algebra",
            Kind::Hopf => "hopf",
            Kind::Group => "group",
            Kind::Grading => "grading",
            Kind::Module => "module",
            Kind::GroupAction => "group-action",
            Kind::Coaction => "coaction",
        }
    }

    fn from_name(s: &str) -> Option<Kind> {
        [Kind::Algebra, Kind::Hopf, Kind::Group, Kind::Grading, Kind::Module, Kind::GroupAction, Kind::Coaction]
            .into_iter()
            .find(|k| k.name() == s)
    }
}

#[derive(Clone, Debug)]
pub enum Document<S> {
    Algebra(FinAlgebra<S>),
    Hopf(FinHopf<S>),
    Group(FiniteGroup),
    Grading(Grading<S>),
    Module(ModuleStructure<S>),
    GroupAction(GroupAction<S>),
    Coaction(Coaction<S>),
}

impl<S> Document<S> {
    pub fn kind(&self) -> Kind {
        match self {
            Document::Algebra(_) => Kind::Algebra,
            Document::Hopf(_) => Kind::Hopf,
            Document::Group(_) => Kind::Group,
            Document::Grading(_) => Kind::Grading,
            Document::Module(_) => Kind::Module,
            Document::GroupAction(_) => Kind::GroupAction,
            Document::Coaction(_) => Kind::Coaction,
        }
    }
}

fn obj(v: &Value) -> Result<&Map<String, Value>> {
    v.as_object().ok_or_else(|| Error::Parse("expected a JSON object".into()))
}

/// The kind named by `"kind"`, or else guessed from the keys present.
pub fn detect_kind(v: &Value) -> Result<Kind> {
    let o = obj(v)?;
    if let Some(k) = o.get("kind") {
        let s = k.as_str().ok_or_else(|| Error::Parse("\"kind\" must be a string".into()))?;
        return Kind::from_name(s).ok_or_else(|| Error::Parse(format!("unknown kind {s:?}")));
    }
    let guess = [
        ("coeff", Kind::Coaction),
        ("action", Kind::Module),
        ("images", Kind::GroupAction),
        ("components", Kind::Grading),
        ("degrees", Kind::Grading),
        ("antipode", Kind::Hopf),
        ("mult", Kind::Algebra),
        ("table", Kind::Group),
    ];
    guess
        .iter()
        .find(|(key, _)| o.contains_key(*key))
        .map(|(_, k)| *k)
        .ok_or_else(|| Error::Parse("cannot tell what kind of structure this is".into()))
}

/// The field declared by the document and its nested parts. Conflicting
/// declarations are an error.
pub fn declared_field(v: &Value) -> Result<Option<FieldSpec>> {
    fn walk(v: &Value, found: &mut Option<FieldSpec>) -> Result<()> {
        if let Some(o) = v.as_object() {
            if let Some(f) = o.get("field") {
                let s = f.as_str().ok_or_else(|| Error::Parse("\"field\" must be a string".into()))?;
                let spec: FieldSpec = s.parse()?;
                match found {
                    Some(prev) if *prev != spec => {
                        return Err(Error::FieldMismatch { expected: *prev, found: spec })
                    }
                    _ => *found = Some(spec),
                }
            }
            for key in ["algebra", "hopf", "group"] {
                if let Some(inner) = o.get(key) {
                    walk(inner, found)?;
                }
            }
        }
        Ok(())
    }
    let mut found = None;
    walk(v, &mut found)?;
    Ok(found)
}

/// Resolves the field from the document and an optional override.
pub fn resolve_field(v: &Value, requested: Option<FieldSpec>) -> Result<FieldSpec> {
    match (declared_field(v)?, requested) {
        (Some(d), Some(r)) if d != r => Err(Error::FieldMismatch { expected: d, found: r }),
        (Some(d), _) => Ok(d),
        (None, Some(r)) => Ok(r),
        (None, None) => Ok(FieldSpec::Q),
    }
}

fn get<'a>(o: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    o.get(key).ok_or_else(|| Error::Parse(format!("missing key {key:?}")))
}

fn de<T: for<'de> Deserialize<'de>>(v: &Value, what: &str) -> Result<T> {
    T::deserialize(v).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn names_or_default(o: &Map<String, Value>, n: usize, prefix: &str) -> Result<Vec<String>> {
    match o.get("names") {
        Some(v) => de(v, "names"),
        None => Ok((0..n).map(|i| format!("{prefix}{i}")).collect()),
    }
}

fn matrix<S: Scalar>(v: &Value, what: &str) -> Result<Matrix<S>> {
    let rows: Vec<Vec<S>> = de(v, what)?;
    let cols = rows.first().map_or(0, |r| r.len());
    Matrix::from_rows(rows, cols)
}

fn parse_algebra<S: Scalar>(v: &Value) -> Result<FinAlgebra<S>> {
    let o = obj(v)?;
    let mult: Vec<Vec<Vec<S>>> = de(get(o, "mult")?, "mult")?;
    let unit: Option<Vec<S>> = match o.get("unit") {
        None | Some(Value::Null) => None,
        Some(u) => Some(de(u, "unit")?),
    };
    let names = names_or_default(o, mult.len(), "a")?;
    FinAlgebra::new(names, mult, unit)
}

#[derive(Deserialize, Serialize)]
struct DeltaTerm<S> {
    left: usize,
    right: usize,
    coef: S,
}

fn parse_hopf<S: Scalar>(v: &Value) -> Result<FinHopf<S>> {
    let o = obj(v)?;
    let algebra = parse_algebra(v)?;
    let delta: Vec<Vec<DeltaTerm<S>>> = de(get(o, "delta")?, "delta")?;
    let delta = delta.into_iter().map(|ts| ts.into_iter().map(|t| (t.left, t.right, t.coef)).collect()).collect();
    let counit: Vec<S> = de(get(o, "counit")?, "counit")?;
    let coalgebra = FinCoalgebra::new(algebra.names().to_vec(), delta, counit)?;
    let antipode = matrix(get(o, "antipode")?, "antipode")?;
    FinHopf::new(algebra, coalgebra, antipode)
}

fn parse_group(v: &Value) -> Result<FiniteGroup> {
    let o = obj(v)?;
    let table: Vec<Vec<usize>> = de(get(o, "table")?, "table")?;
    let names = names_or_default(o, table.len(), "g")?;
    let identity = match o.get("identity") {
        Some(i) => de(i, "identity")?,
        None => 0,
    };
    FiniteGroup::new(names, table, identity)
}

fn group_index(g: &FiniteGroup, v: &Value) -> Result<usize> {
    match v {
        Value::Number(n) => n
            .as_u64()
            .map(|i| i as usize)
            .filter(|&i| i < g.order())
            .ok_or_else(|| Error::Parse(format!("group index {n} out of range"))),
        Value::String(s) => g.index_of(s).ok_or_else(|| Error::Parse(format!("unknown group element {s:?}"))),
        _ => Err(Error::Parse("group elements are given by index or name".into())),
    }
}

fn parse_grading<S: Scalar>(v: &Value) -> Result<Grading<S>> {
    let o = obj(v)?;
    let algebra = parse_algebra(get(o, "algebra")?)?;
    let group = parse_group(get(o, "group")?)?;
    if let Some(d) = o.get("degrees") {
        let arr = d.as_array().ok_or_else(|| Error::Parse("\"degrees\" must be an array".into()))?;
        let degrees = arr.iter().map(|x| group_index(&group, x)).collect::<Result<Vec<_>>>()?;
        return Grading::from_basis_degrees(algebra, group, &degrees);
    }
    let comps = get(o, "components")?
        .as_array()
        .ok_or_else(|| Error::Parse("\"components\" must be an array".into()))?;
    let mut out = Vec::new();
    for c in comps {
        let co = obj(c)?;
        let g = group_index(&group, get(co, "degree")?)?;
        let basis: Vec<Vec<S>> = de(get(co, "basis")?, "basis")?;
        out.push((g, basis));
    }
    Grading::new(algebra, group, out)
}

fn matrices<S: Scalar>(v: &Value, what: &str) -> Result<Vec<Matrix<S>>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("{what:?} must be an array of matrices")))?
        .iter()
        .map(|m| matrix(m, what))
        .collect()
}

pub fn parse_document<S: Scalar>(v: &Value) -> Result<Document<S>> {
    let kind = detect_kind(v)?;
    let o = obj(v)?;
    Ok(match kind {
        Kind::Algebra => Document::Algebra(parse_algebra(v)?),
        Kind::Hopf => Document::Hopf(parse_hopf(v)?),
        Kind::Group => Document::Group(parse_group(v)?),
        Kind::Grading => Document::Grading(parse_grading(v)?),
        Kind::Module => Document::Module(ModuleStructure::new(
            parse_algebra(get(o, "algebra")?)?,
            parse_hopf(get(o, "hopf")?)?,
            matrices(get(o, "action")?, "action")?,
        )?),
        Kind::GroupAction => Document::GroupAction(GroupAction::new(
            parse_algebra(get(o, "algebra")?)?,
            parse_group(get(o, "group")?)?,
            matrices(get(o, "images")?, "images")?,
        )?),
        Kind::Coaction => Document::Coaction(Coaction::new(
            parse_algebra(get(o, "algebra")?)?,
            parse_hopf(get(o, "hopf")?)?,
            de(get(o, "coeff")?, "coeff")?,
        )?),
    })
}

pub fn parse_matrix<S: Scalar>(v: &Value) -> Result<Matrix<S>> {
    match v.as_object().and_then(|o| o.get("matrix")) {
        Some(m) => matrix(m, "matrix"),
        None => matrix(v, "matrix"),
    }
}

fn algebra_value<S: Scalar>(a: &FinAlgebra<S>) -> Value {
    json!({
        "kind": "algebra",
        "field": S::field().to_string(),
        "names": a.names(),
        "mult": a.mult_table(),
        "unit": a.unit(),
    })
}

fn hopf_value<S: Scalar>(h: &FinHopf<S>) -> Value {
    let delta: Vec<Vec<DeltaTerm<S>>> = (0..h.dim())
        .map(|k| {
            h.coalgebra()
                .delta_terms(k)
                .iter()
                .map(|(l, r, c)| DeltaTerm { left: *l, right: *r, coef: c.clone() })
                .collect()
        })
        .collect();
    json!({
        "kind": "hopf",
        "field": S::field().to_string(),
        "names": h.names(),
        "mult": h.algebra().mult_table(),
        "unit": h.unit(),
        "delta": delta,
        "counit": h.counit(),
        "antipode": h.antipode(),
    })
}

fn group_value(g: &FiniteGroup) -> Value {
    json!({ "kind": "group", "names": g.names, "table": g.table, "identity": g.identity })
}

pub fn to_value<S: Scalar>(d: &Document<S>) -> Value {
    let field = S::field().to_string();
    match d {
        Document::Algebra(a) => algebra_value(a),
        Document::Hopf(h) => hopf_value(h),
        Document::Group(g) => group_value(g),
        Document::Grading(g) => {
            let comps: Vec<Value> = g
                .components()
                .iter()
                .map(|(t, sub)| json!({ "degree": g.group.names[*t], "basis": sub.basis() }))
                .collect();
            json!({
                "kind": "grading",
                "field": field,
                "algebra": algebra_value(&g.algebra),
                "group": group_value(&g.group),
                "components": comps,
            })
        }
        Document::Module(m) => json!({
            "kind": "module",
            "field": field,
            "algebra": algebra_value(&m.algebra),
            "hopf": hopf_value(&m.hopf),
            "action": m.action,
        }),
        Document::GroupAction(a) => json!({
            "kind": "group-action",
            "field": field,
            "algebra": algebra_value(&a.algebra),
            "group": group_value(&a.group),
            "images": a.images,
        }),
        Document::Coaction(c) => json!({
            "kind": "coaction",
            "field": field,
            "algebra": algebra_value(&c.algebra),
            "hopf": hopf_value(&c.hopf),
            "coeff": c.coeff_table(),
        }),
    }
}
