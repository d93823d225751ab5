//! The JSON definition file: named objects given as dense arrays of
//! scalar strings. Maps are lists of images, one per basis element.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::hopf::{AlgebraData, CoalgebraData, HopfAlgebraData, LinMapHom};
use crate::linalg::Matrix;
use crate::partial::{GlobalTwistedAction, TwistedPartialAction};
use crate::scalar::{Field, Scalar};
use crate::tensor::Tensor3;

/// The global algebra B together with its H-action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalSpec {
    pub algebra: AlgebraData,
    pub action: Tensor3,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecFile {
    pub field: Field,
    pub hopf: Option<HopfAlgebraData>,
    pub algebra: Option<AlgebraData>,
    pub action: Option<Tensor3>,
    pub cocycle: Option<Tensor3>,
    pub global: Option<GlobalSpec>,
    pub twist: Option<Tensor3>,
    pub idempotent: Option<Vec<Scalar>>,
    /// dim B × dim A.
    pub theta: Option<Matrix>,
    pub gauge: Option<LinMapHom>,
    pub gamma: Option<LinMapHom>,
    pub gamma_prime: Option<LinMapHom>,
    pub integral_t: Option<Vec<Scalar>>,
    pub center_c: Option<Vec<Scalar>>,
}

const KNOWN: [&str; 14] = [
    "field",
    "hopf",
    "algebra",
    "action",
    "cocycle",
    "global",
    "twist",
    "idempotent",
    "theta",
    "gauge",
    "gamma",
    "gamma_prime",
    "integral_t",
    "center_c",
];

impl SpecFile {
    pub fn new(field: Field) -> Self {
        SpecFile {
            field,
            hopf: None,
            algebra: None,
            action: None,
            cocycle: None,
            global: None,
            twist: None,
            idempotent: None,
            theta: None,
            gauge: None,
            gamma: None,
            gamma_prime: None,
            integral_t: None,
            center_c: None,
        }
    }

    /// A spec holding the Hopf algebra, algebra, action and cocycle of `t`.
    pub fn from_partial(t: &TwistedPartialAction) -> Self {
        SpecFile {
            hopf: Some(t.hopf().clone()),
            algebra: Some(t.algebra().clone()),
            action: Some(t.action().clone()),
            cocycle: Some(t.cocycle().clone()),
            ..SpecFile::new(t.field())
        }
    }

    pub fn hopf(&self) -> Result<&HopfAlgebraData> {
        self.hopf.as_ref().ok_or_else(|| Error::MissingObject("hopf".into()))
    }

    /// The twisted partial action, with the trivial cocycle when none is given.
    pub fn partial(&self) -> Result<TwistedPartialAction> {
        let hopf = self.hopf()?.clone();
        let algebra = self.algebra.clone().ok_or_else(|| Error::MissingObject("algebra".into()))?;
        let action = self.action.clone().ok_or_else(|| Error::MissingObject("action".into()))?;
        match &self.cocycle {
            Some(w) => TwistedPartialAction::new(hopf, algebra, action, w.clone()),
            None => TwistedPartialAction::with_trivial_cocycle(hopf, algebra, action),
        }
    }

    /// The global action, untwisted when no twist is given.
    pub fn global_action(&self) -> Result<GlobalTwistedAction> {
        let g = self.global.as_ref().ok_or_else(|| Error::MissingObject("global".into()))?;
        let hopf = self.hopf()?.clone();
        match &self.twist {
            Some(u) => GlobalTwistedAction::new(hopf, g.algebra.clone(), g.action.clone(), u.clone()),
            None => GlobalTwistedAction::untwisted(hopf, g.algebra.clone(), g.action.clone()),
        }
    }
}

fn shape(path: &str, message: impl Into<String>) -> Error {
    Error::Shape { path: path.to_string(), message: message.into() }
}

fn array<'a>(v: &'a Value, path: &str, len: Option<usize>) -> Result<&'a Vec<Value>> {
    let a = v.as_array().ok_or_else(|| shape(path, "expected an array"))?;
    if let Some(n) = len {
        if a.len() != n {
            return Err(shape(path, format!("expected {n} entries, found {}", a.len())));
        }
    }
    Ok(a)
}

fn scalar(field: Field, v: &Value, path: &str) -> Result<Scalar> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_i64() => n.to_string(),
        _ => return Err(shape(path, "expected a scalar string")),
    };
    field.parse(&text).map_err(|e| shape(path, e.to_string()))
}

fn vector(field: Field, v: &Value, path: &str, len: Option<usize>) -> Result<Vec<Scalar>> {
    array(v, path, len)?
        .iter()
        .enumerate()
        .map(|(i, x)| scalar(field, x, &format!("{path}[{i}]")))
        .collect()
}

/// A list of `rows` vectors of a common length (`cols` if given).
fn rows(field: Field, v: &Value, path: &str, rows: usize, cols: Option<usize>) -> Result<Vec<Vec<Scalar>>> {
    let a = array(v, path, Some(rows))?;
    let mut out: Vec<Vec<Scalar>> = Vec::with_capacity(rows);
    for (i, r) in a.iter().enumerate() {
        let width = cols.or_else(|| out.first().map(|f| f.len()));
        out.push(vector(field, r, &format!("{path}[{i}]"), width)?);
    }
    Ok(out)
}

fn tensor(field: Field, v: &Value, path: &str, dims: (usize, usize, usize)) -> Result<Tensor3> {
    let a = array(v, path, Some(dims.0))?;
    let mut t = Tensor3::zeros(field, dims.0, dims.1, dims.2);
    for (i, slab) in a.iter().enumerate() {
        let r = rows(field, slab, &format!("{path}[{i}]"), dims.1, Some(dims.2))?;
        for (j, fibre) in r.into_iter().enumerate() {
            t.set_fibre(i, j, fibre);
        }
    }
    Ok(t)
}

/// Maps given as lists of images; returns a LinMapHom (codomain × domain).
fn map(field: Field, v: &Value, path: &str, domain: usize, codomain: Option<usize>) -> Result<LinMapHom> {
    let images = rows(field, v, path, domain, codomain)?;
    let cod = codomain.or_else(|| images.first().map(|r| r.len())).unwrap_or(0);
    Ok(LinMapHom::from_images(field, cod, &images))
}

fn labels(v: &Value, path: &str, n: Option<usize>) -> Result<Vec<String>> {
    let a = array(v, path, n)?;
    a.iter()
        .enumerate()
        .map(|(i, x)| x.as_str().map(String::from).ok_or_else(|| shape(&format!("{path}[{i}]"), "expected a label string")))
        .collect()
}

fn field_of<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| shape(&format!("{path}.{key}"), "missing"))
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| shape(path, "expected an object"))
}

fn parse_algebra(field: Field, v: &Value, path: &str) -> Result<AlgebraData> {
    let o = object(v, path)?;
    let l = labels(field_of(o, "labels", path)?, &format!("{path}.labels"), None)?;
    let n = l.len();
    let mult = tensor(field, field_of(o, "mult", path)?, &format!("{path}.mult"), (n, n, n))?;
    let unit = vector(field, field_of(o, "unit", path)?, &format!("{path}.unit"), Some(n))?;
    AlgebraData::new(l, mult, unit)
}

fn parse_hopf(field: Field, v: &Value) -> Result<HopfAlgebraData> {
    let path = "hopf";
    let o = object(v, path)?;
    let l = labels(field_of(o, "labels", path)?, "hopf.labels", None)?;
    let n = l.len();
    let mult = tensor(field, field_of(o, "mult", path)?, "hopf.mult", (n, n, n))?;
    let unit = vector(field, field_of(o, "unit", path)?, "hopf.unit", Some(n))?;
    let comult = tensor(field, field_of(o, "comult", path)?, "hopf.comult", (n, n, n))?;
    let counit = vector(field, field_of(o, "counit", path)?, "hopf.counit", Some(n))?;
    let s = map(field, field_of(o, "antipode", path)?, "hopf.antipode", n, Some(n))?;
    HopfAlgebraData::new(AlgebraData::new(l, mult, unit)?, CoalgebraData::new(comult, counit)?, s.matrix().clone())
}

fn parse_field(root: &Map<String, Value>) -> Result<Field> {
    match root.get("field") {
        None => Err(shape("field", "missing field descriptor")),
        Some(Value::String(s)) => s.parse(),
        Some(_) => Err(shape("field", "field descriptor must be a string")),
    }
}

/// Parses and validates a definition file.
pub fn parse_spec(text: &str) -> Result<SpecFile> {
    parse_spec_as(text, None, &[])
}

/// Like [`parse_spec`], but reads every scalar in `field` when given,
/// whatever the file declares, and ignores the objects named in `skip`.
pub fn parse_spec_as(text: &str, field: Option<Field>, skip: &[&str]) -> Result<SpecFile> {
    let mut root: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if let Some(o) = root.as_object_mut() {
        for k in skip {
            o.remove(*k);
        }
    }
    let root = object(&root, "$")?;
    let field = match field {
        Some(f) => f,
        None => parse_field(root)?,
    };
    if let Some(k) = root.keys().find(|k| !KNOWN.contains(&k.as_str())) {
        return Err(shape(k, "unknown object"));
    }
    let mut spec = SpecFile::new(field);
    spec.hopf = root.get("hopf").map(|v| parse_hopf(field, v)).transpose()?;
    spec.algebra = root.get("algebra").map(|v| parse_algebra(field, v, "algebra")).transpose()?;
    let (dh, da) = (spec.hopf.as_ref().map(|h| h.dim()), spec.algebra.as_ref().map(|a| a.dim()));
    let nh = || dh.ok_or_else(|| Error::MissingObject("hopf".into()));
    let na = || da.ok_or_else(|| Error::MissingObject("algebra".into()));

    if let Some(v) = root.get("action") {
        spec.action = Some(tensor(field, v, "action", (nh()?, na()?, na()?))?);
    }
    if let Some(v) = root.get("cocycle") {
        spec.cocycle = Some(tensor(field, v, "cocycle", (nh()?, nh()?, na()?))?);
    }
    if let Some(v) = root.get("global") {
        let o = object(v, "global")?;
        let algebra = parse_algebra(field, v, "global")?;
        let nb = algebra.dim();
        let action = tensor(field, field_of(o, "action", "global")?, "global.action", (nh()?, nb, nb))?;
        spec.global = Some(GlobalSpec { algebra, action });
    }
    let db = spec.global.as_ref().map(|g| g.algebra.dim());
    let nb = || db.ok_or_else(|| Error::MissingObject("global".into()));
    if let Some(v) = root.get("twist") {
        spec.twist = Some(tensor(field, v, "twist", (nh()?, nh()?, nb()?))?);
    }
    if let Some(v) = root.get("idempotent") {
        spec.idempotent = Some(vector(field, v, "idempotent", Some(nb()?))?);
    }
    if let Some(v) = root.get("theta") {
        spec.theta = Some(map(field, v, "theta", na()?, Some(nb()?))?.matrix().clone());
    }
    if let Some(v) = root.get("gauge") {
        spec.gauge = Some(map(field, v, "gauge", nh()?, Some(na()?))?);
    }
    if let Some(v) = root.get("gamma") {
        spec.gamma = Some(map(field, v, "gamma", nh()?, None)?);
    }
    if let Some(v) = root.get("gamma_prime") {
        spec.gamma_prime = Some(map(field, v, "gamma_prime", nh()?, None)?);
    }
    if let Some(v) = root.get("integral_t") {
        spec.integral_t = Some(vector(field, v, "integral_t", Some(nh()?))?);
    }
    if let Some(v) = root.get("center_c") {
        spec.center_c = Some(vector(field, v, "center_c", Some(na()?))?);
    }
    Ok(spec)
}

fn scalars(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn tensor_json(t: &Tensor3) -> Value {
    let (d1, d2, _) = t.dims();
    Value::Array((0..d1).map(|i| Value::Array((0..d2).map(|j| scalars(t.fibre(i, j))).collect())).collect())
}

fn matrix_images(m: &Matrix) -> Value {
    Value::Array((0..m.cols()).map(|j| scalars(&m.column(j))).collect())
}

fn algebra_json(a: &AlgebraData) -> Map<String, Value> {
    let mut o = Map::new();
    o.insert("labels".into(), json!(a.labels()));
    o.insert("mult".into(), tensor_json(a.mult()));
    o.insert("unit".into(), scalars(a.unit()));
    o
}

/// Canonical JSON form; `parse_spec` of the output gives back `spec`.
pub fn serialize_spec(spec: &SpecFile) -> Value {
    let mut root = Map::new();
    root.insert("field".into(), Value::String(spec.field.to_string()));
    if let Some(h) = &spec.hopf {
        let mut o = algebra_json(h.algebra());
        o.insert("comult".into(), tensor_json(h.coalgebra().comult()));
        o.insert("counit".into(), scalars(h.coalgebra().counit()));
        o.insert("antipode".into(), matrix_images(h.antipode()));
        root.insert("hopf".into(), Value::Object(o));
    }
    if let Some(a) = &spec.algebra {
        root.insert("algebra".into(), Value::Object(algebra_json(a)));
    }
    if let Some(t) = &spec.action {
        root.insert("action".into(), tensor_json(t));
    }
    if let Some(t) = &spec.cocycle {
        root.insert("cocycle".into(), tensor_json(t));
    }
    if let Some(g) = &spec.global {
        let mut o = algebra_json(&g.algebra);
        o.insert("action".into(), tensor_json(&g.action));
        root.insert("global".into(), Value::Object(o));
    }
    if let Some(t) = &spec.twist {
        root.insert("twist".into(), tensor_json(t));
    }
    if let Some(v) = &spec.idempotent {
        root.insert("idempotent".into(), scalars(v));
    }
    if let Some(m) = &spec.theta {
        root.insert("theta".into(), matrix_images(m));
    }
    for (key, m) in [("gauge", &spec.gauge), ("gamma", &spec.gamma), ("gamma_prime", &spec.gamma_prime)] {
        if let Some(m) = m {
            root.insert(key.into(), matrix_images(m.matrix()));
        }
    }
    if let Some(v) = &spec.integral_t {
        root.insert("integral_t".into(), scalars(v));
    }
    if let Some(v) = &spec.center_c {
        root.insert("center_c".into(), scalars(v));
    }
    Value::Object(root)
}

pub fn serialize_spec_string(spec: &SpecFile) -> String {
    super::json::to_string(&serialize_spec(spec))
}
