//! Canonical JSON interchange.
//!
//! A document has the shape
//!
//! ```text
//! {"field_spec":{"kind":"rationals"},"format_version":"1","objects":{"name":{"kind":"linmap",...}}}
//! ```
//!
//! with `{"kind":"prime_field","p":5}` for prime fields. Scalars are strings: `"a/b"` in
//! lowest terms with positive denominator over the rationals, a residue in `0..p` otherwise.
//! Keys are sorted and there is no whitespace, so structurally equal documents serialize
//! to the same bytes.

pub mod cli;

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::algebra::{Algebra, PointedSpace};
use crate::corpus::{CorpusInstance, GaugeTransformation, QuasiBialgebra, RightModuleAlgebra};
use crate::crossed::{CrossedData, TwistingMapData};
use crate::error::{Error, Result};
use crate::report::{AxiomReport, Check};
use crate::tensor::{Field, LinMap, Scalar};
use crate::twist::{TwistPair, TwistResult};

pub const FORMAT_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    LinMap(LinMap),
    Algebra(Algebra),
    PointedSpace(PointedSpace),
    CrossedData(CrossedData),
    TwistingMap(TwistingMapData),
    TwistPair(TwistPair),
    QuasiBialgebra(QuasiBialgebra),
    Gauge(GaugeTransformation),
    ModuleAlgebra(RightModuleAlgebra),
    TwistResult(Box<TwistResult>),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::LinMap(_) => "linmap",
            Object::Algebra(_) => "algebra",
            Object::PointedSpace(_) => "pointed_space",
            Object::CrossedData(_) => "crossed_data",
            Object::TwistingMap(_) => "twisting_map",
            Object::TwistPair(_) => "twist_pair",
            Object::QuasiBialgebra(_) => "quasi_bialgebra",
            Object::Gauge(_) => "gauge",
            Object::ModuleAlgebra(_) => "module_algebra",
            Object::TwistResult(_) => "twist_result",
        }
    }

    fn field(&self) -> Field {
        match self {
            Object::LinMap(f) => f.field(),
            Object::Algebra(a) => a.field(),
            Object::PointedSpace(v) => v.field(),
            Object::CrossedData(c) => c.a().field(),
            Object::TwistingMap(t) => t.a().field(),
            Object::TwistPair(p) => p.theta().field(),
            Object::QuasiBialgebra(q) => q.field(),
            Object::Gauge(g) => g.f()[0].field(),
            Object::ModuleAlgebra(b) => b.algebra().field(),
            Object::TwistResult(r) => r.source().a().field(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecDocument {
    pub field: Field,
    pub objects: BTreeMap<String, Object>,
}

impl SpecDocument {
    pub fn new(field: Field) -> SpecDocument {
        SpecDocument {
            field,
            objects: BTreeMap::new(),
        }
    }

    /// Adds an object; its scalars must live in the document's field.
    pub fn insert(&mut self, name: impl Into<String>, object: Object) -> Result<()> {
        if object.field() != self.field {
            return Err(Error::Domain(format!(
                "object over {} cannot be stored in a document over {}",
                object.field(),
                self.field
            )));
        }
        self.objects.insert(name.into(), object);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&Object> {
        self.objects.get(name)
    }
}

impl CorpusInstance {
    /// The instance as a document with objects `crossed`, `pair` and, when present,
    /// `twisting_map`, `star`, `quasi`, `module` and `gauge`.
    pub fn to_document(&self) -> SpecDocument {
        let mut doc = SpecDocument::new(self.crossed.a().field());
        let mut put = |name: &str, object| doc.insert(name, object).expect("instance is over one field");
        put("crossed", Object::CrossedData(self.crossed.clone()));
        put("pair", Object::TwistPair(self.pair.clone()));
        if let Some(t) = &self.twisting_map {
            put("twisting_map", Object::TwistingMap(t.clone()));
        }
        if let Some(star) = &self.star {
            put("star", Object::LinMap(star.clone()));
        }
        if let Some(g) = &self.gauge {
            put("quasi", Object::QuasiBialgebra(g.quasi.clone()));
            put("module", Object::ModuleAlgebra(g.module.clone()));
            put("gauge", Object::Gauge(g.gauge.clone()));
        }
        doc
    }
}

// ---------------------------------------------------------------------------
// Serialization

pub fn serialize(doc: &SpecDocument) -> String {
    let objects: Map<String, Value> = doc
        .objects
        .iter()
        .map(|(name, object)| (name.clone(), object_value(object)))
        .collect();
    let value = json!({
        "field_spec": field_value(doc.field),
        "format_version": FORMAT_VERSION,
        "objects": objects,
    });
    let mut text = value.to_string();
    text.push('\n');
    text
}

fn field_value(field: Field) -> Value {
    match field {
        Field::Rationals => json!({"kind": "rationals"}),
        Field::Prime(p) => json!({"kind": "prime_field", "p": p}),
    }
}

fn object_value(object: &Object) -> Value {
    let mut value = match object {
        Object::LinMap(f) => linmap_value(f),
        Object::Algebra(a) => algebra_value(a),
        Object::PointedSpace(v) => pointed_value(v),
        Object::CrossedData(c) => crossed_value(c),
        Object::TwistingMap(t) => json!({
            "a": algebra_value(t.a()),
            "b": algebra_value(t.b()),
            "r": linmap_value(t.r()),
        }),
        Object::TwistPair(p) => pair_value(p),
        Object::QuasiBialgebra(q) => json!({
            "algebra": algebra_value(q.algebra()),
            "comult": linmap_value(q.comult()),
            "counit": linmap_value(q.counit()),
            "associator": scalars_value(q.associator()),
            "associator_inverse": scalars_value(q.associator_inverse()),
        }),
        Object::Gauge(g) => json!({
            "f": scalars_value(g.f()),
            "f_inverse": scalars_value(g.f_inverse()),
        }),
        Object::ModuleAlgebra(b) => json!({
            "algebra": algebra_value(b.algebra()),
            "action": linmap_value(b.action()),
        }),
        Object::TwistResult(r) => json!({
            "source": crossed_value(r.source()),
            "data_prime": crossed_value(r.data_prime()),
            "r_prime": linmap_value(r.r_prime()),
            "sigma_prime": linmap_value(r.sigma_prime()),
            "phi": linmap_value(r.phi()),
            "phi_inverse": linmap_value(r.phi_inverse()),
        }),
    };
    value
        .as_object_mut()
        .expect("objects serialize to JSON objects")
        .insert("kind".into(), Value::String(object.kind().into()));
    value
}

fn scalars_value(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|s| Value::String(s.to_canonical())).collect())
}

fn linmap_value(f: &LinMap) -> Value {
    let rows: Vec<Value> = (0..f.codomain_total()).map(|r| scalars_value(f.row(r))).collect();
    json!({
        "domain_dims": f.domain_dims(),
        "codomain_dims": f.codomain_dims(),
        "matrix": rows,
    })
}

fn algebra_value(a: &Algebra) -> Value {
    json!({
        "label": a.label(),
        "dim": a.dim(),
        "mult": linmap_value(a.mult()),
        "unit": scalars_value(a.unit()),
    })
}

fn pointed_value(v: &PointedSpace) -> Value {
    json!({
        "label": v.label(),
        "dim": v.dim(),
        "point": scalars_value(v.point()),
    })
}

fn crossed_value(c: &CrossedData) -> Value {
    json!({
        "a": algebra_value(c.a()),
        "v": pointed_value(c.v()),
        "r": linmap_value(c.r()),
        "sigma": linmap_value(c.sigma()),
    })
}

fn pair_value(p: &TwistPair) -> Value {
    json!({
        "theta": linmap_value(p.theta()),
        "gamma": linmap_value(p.gamma()),
    })
}

/// Machine form of a report: `{"checks":[{"detail","failures","first_counterexample"?,"law_name","passed"}],"passed"}`.
pub fn report_json(report: &AxiomReport) -> String {
    let checks: Vec<Value> = report.checks.iter().map(check_value).collect();
    let mut text = json!({"checks": checks, "passed": report.passed()}).to_string();
    text.push('\n');
    text
}

fn check_value(check: &Check) -> Value {
    let mut value = json!({
        "law_name": check.law.name(),
        "passed": check.passed,
        "failures": check.failures,
        "detail": check.detail,
    });
    if let Some(at) = &check.first_counterexample {
        value
            .as_object_mut()
            .expect("object")
            .insert("first_counterexample".into(), json!(at));
    }
    value
}

// ---------------------------------------------------------------------------
// Parsing

/// Parses and validates a document in its own field.
pub fn parse(text: &str) -> Result<SpecDocument> {
    parse_inner(text, None)
}

/// Parses a document and moves it to `target`: a rationals document is reduced
/// modulo `p` (failing on denominators divisible by `p`); other changes are refused.
pub fn parse_into(text: &str, target: Field) -> Result<SpecDocument> {
    parse_inner(text, Some(target))
}

fn parse_inner(text: &str, target: Option<Field>) -> Result<SpecDocument> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::parse("$", format!("malformed JSON: {e}")))?;
    let root = Node::root(&value);
    root.keys(&["field_spec", "format_version", "objects"])?;
    let version = root.get("format_version")?;
    if version.str()? != FORMAT_VERSION {
        return Err(version.error(format!(
            "unsupported format_version `{}` (expected `{FORMAT_VERSION}`)",
            version.str()?
        )));
    }
    let source = parse_field(&root.get("field_spec")?)?;
    let target = target.unwrap_or(source);
    if source != target && source != Field::Rationals {
        return Err(Error::Domain(format!(
            "cannot move a document over {source} to {target}"
        )));
    }
    let ctx = Ctx { source, target };
    let objects = root.get("objects")?;
    let mut doc = SpecDocument::new(target);
    for (name, node) in objects.entries()? {
        doc.objects.insert(name.clone(), ctx.object(&node)?);
    }
    Ok(doc)
}

fn parse_field(node: &Node) -> Result<Field> {
    let kind = node.get("kind")?;
    match kind.str()? {
        "rationals" => {
            node.keys(&["kind"])?;
            Ok(Field::Rationals)
        }
        "prime_field" => {
            node.keys(&["kind", "p"])?;
            let p = node.get("p")?;
            Field::prime(p.u64()?).map_err(|e| p.error(e.to_string()))
        }
        other => Err(kind.error(format!("unknown field kind `{other}`"))),
    }
}

/// A JSON value with the path that reached it.
struct Node<'a> {
    value: &'a Value,
    path: String,
}

impl<'a> Node<'a> {
    fn root(value: &'a Value) -> Node<'a> {
        Node {
            value,
            path: "$".into(),
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(self.path.clone(), message)
    }

    fn map(&self) -> Result<&'a Map<String, Value>> {
        self.value.as_object().ok_or_else(|| self.error("expected an object"))
    }

    /// Requires exactly these keys.
    fn keys(&self, allowed: &[&str]) -> Result<()> {
        let map = self.map()?;
        if let Some(extra) = map.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(self.error(format!("unknown key `{extra}`")));
        }
        if let Some(missing) = allowed.iter().find(|k| !map.contains_key(**k)) {
            return Err(self.error(format!("missing key `{missing}`")));
        }
        Ok(())
    }

    fn get(&self, key: &str) -> Result<Node<'a>> {
        let value = self
            .map()?
            .get(key)
            .ok_or_else(|| self.error(format!("missing key `{key}`")))?;
        Ok(Node {
            value,
            path: format!("{}.{key}", self.path),
        })
    }

    fn entries(&self) -> Result<Vec<(&'a String, Node<'a>)>> {
        Ok(self
            .map()?
            .iter()
            .map(|(k, value)| {
                (
                    k,
                    Node {
                        value,
                        path: format!("{}.{k}", self.path),
                    },
                )
            })
            .collect())
    }

    fn items(&self) -> Result<Vec<Node<'a>>> {
        let items = self.value.as_array().ok_or_else(|| self.error("expected an array"))?;
        Ok(items
            .iter()
            .enumerate()
            .map(|(i, value)| Node {
                value,
                path: format!("{}[{i}]", self.path),
            })
            .collect())
    }

    fn str(&self) -> Result<&'a str> {
        self.value.as_str().ok_or_else(|| self.error("expected a string"))
    }

    fn u64(&self) -> Result<u64> {
        self.value
            .as_u64()
            .ok_or_else(|| self.error("expected a non-negative integer"))
    }

    fn dims(&self) -> Result<Vec<usize>> {
        let dims = self
            .items()?
            .iter()
            .map(|d| d.u64().map(|x| x as usize))
            .collect::<Result<Vec<_>>>()?;
        if dims.is_empty() || dims.contains(&0) {
            return Err(self.error("dimensions must be a nonempty list of positive integers"));
        }
        Ok(dims)
    }
}

struct Ctx {
    source: Field,
    target: Field,
}

impl Ctx {
    fn scalar(&self, node: &Node) -> Result<Scalar> {
        let text = node.str()?;
        let s = Scalar::parse_canonical(text, self.source).map_err(|e| node.error(e))?;
        match (&s, self.target) {
            (Scalar::Rational(q), Field::Prime(_)) => {
                self.target.from_rational(q).map_err(|e| node.error(e.to_string()))
            }
            _ => Ok(s),
        }
    }

    fn scalars(&self, node: &Node) -> Result<Vec<Scalar>> {
        node.items()?.iter().map(|s| self.scalar(s)).collect()
    }

    fn sized(&self, node: &Node, len: usize) -> Result<Vec<Scalar>> {
        let v = self.scalars(node)?;
        if v.len() != len {
            return Err(node.error(format!("expected {len} scalars, found {}", v.len())));
        }
        Ok(v)
    }

    fn linmap(&self, node: &Node) -> Result<LinMap> {
        node.keys(&["codomain_dims", "domain_dims", "matrix"])?;
        let domain = node.get("domain_dims")?.dims()?;
        let codomain = node.get("codomain_dims")?.dims()?;
        let (cols, rows) = (domain.iter().product::<usize>(), codomain.iter().product::<usize>());
        let matrix = node.get("matrix")?;
        let row_nodes = matrix.items()?;
        if row_nodes.len() != rows {
            return Err(matrix.error(format!(
                "expected {rows} rows (codomain_total), found {}",
                row_nodes.len()
            )));
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for row in &row_nodes {
            let values = self.scalars(row)?;
            if values.len() != cols {
                return Err(row.error(format!("row length {} differs from domain_total {cols}", values.len())));
            }
            entries.extend(values);
        }
        LinMap::new(self.target, domain, codomain, entries).map_err(|e| node.error(e.to_string()))
    }

    fn algebra(&self, node: &Node) -> Result<Algebra> {
        node.keys(&["dim", "label", "mult", "unit"])?;
        let dim = node.get("dim")?.u64()? as usize;
        let mult = self.linmap(&node.get("mult")?)?;
        let unit = self.sized(&node.get("unit")?, dim)?;
        let label = node.get("label")?.str()?;
        if mult.domain_total() != dim * dim || mult.codomain_total() != dim {
            return Err(node
                .get("mult")?
                .error(format!("multiplication must map {dim}x{dim} to {dim}")));
        }
        Algebra::new(label, mult, unit).map_err(|e| node.error(e.to_string()))
    }

    fn pointed(&self, node: &Node) -> Result<PointedSpace> {
        node.keys(&["dim", "label", "point"])?;
        let dim = node.get("dim")?.u64()? as usize;
        let point = self.sized(&node.get("point")?, dim)?;
        PointedSpace::new(node.get("label")?.str()?, point).map_err(|e| node.error(e.to_string()))
    }

    fn crossed(&self, node: &Node) -> Result<CrossedData> {
        node.keys(&["a", "r", "sigma", "v"])?;
        CrossedData::new(
            self.algebra(&node.get("a")?)?,
            self.pointed(&node.get("v")?)?,
            self.linmap(&node.get("r")?)?,
            self.linmap(&node.get("sigma")?)?,
        )
        .map_err(|e| node.error(e.to_string()))
    }

    fn pair(&self, node: &Node) -> Result<TwistPair> {
        node.keys(&["gamma", "theta"])?;
        TwistPair::new(self.linmap(&node.get("theta")?)?, self.linmap(&node.get("gamma")?)?)
            .map_err(|e| node.error(e.to_string()))
    }

    fn object(&self, node: &Node) -> Result<Object> {
        let kind_node = node.get("kind")?;
        let kind = kind_node.str()?;
        let fields = |keys: &[&str]| {
            let mut all = keys.to_vec();
            all.push("kind");
            node.keys(&all)
        };
        // LinMap and the records reuse the nested readers, which check their own keys
        // and would reject `kind`; strip it first.
        let mut body = node.map()?.clone();
        body.remove("kind");
        let body_value = Value::Object(body);
        let inner = Node {
            value: &body_value,
            path: node.path.clone(),
        };
        let invalid = |e: Error| node.error(e.to_string());
        Ok(match kind {
            "linmap" => Object::LinMap(self.linmap(&inner)?),
            "algebra" => Object::Algebra(self.algebra(&inner)?),
            "pointed_space" => Object::PointedSpace(self.pointed(&inner)?),
            "crossed_data" => Object::CrossedData(self.crossed(&inner)?),
            "twist_pair" => Object::TwistPair(self.pair(&inner)?),
            "twisting_map" => {
                fields(&["a", "b", "r"])?;
                Object::TwistingMap(
                    TwistingMapData::new(
                        self.algebra(&node.get("a")?)?,
                        self.algebra(&node.get("b")?)?,
                        self.linmap(&node.get("r")?)?,
                    )
                    .map_err(invalid)?,
                )
            }
            "quasi_bialgebra" => {
                fields(&["algebra", "associator", "associator_inverse", "comult", "counit"])?;
                let h = self.algebra(&node.get("algebra")?)?;
                let cube = h.dim().pow(3);
                Object::QuasiBialgebra(
                    QuasiBialgebra::new(
                        h,
                        self.linmap(&node.get("comult")?)?,
                        self.linmap(&node.get("counit")?)?,
                        self.sized(&node.get("associator")?, cube)?,
                        self.sized(&node.get("associator_inverse")?, cube)?,
                    )
                    .map_err(invalid)?,
                )
            }
            "gauge" => {
                fields(&["f", "f_inverse"])?;
                Object::Gauge(
                    GaugeTransformation::new(self.scalars(&node.get("f")?)?, self.scalars(&node.get("f_inverse")?)?)
                        .map_err(invalid)?,
                )
            }
            "module_algebra" => {
                fields(&["action", "algebra"])?;
                Object::ModuleAlgebra(
                    RightModuleAlgebra::new(self.algebra(&node.get("algebra")?)?, self.linmap(&node.get("action")?)?)
                        .map_err(invalid)?,
                )
            }
            "twist_result" => {
                fields(&["data_prime", "phi", "phi_inverse", "r_prime", "sigma_prime", "source"])?;
                let data_prime = self.crossed(&node.get("data_prime")?)?;
                for (key, stored) in [("r_prime", data_prime.r()), ("sigma_prime", data_prime.sigma())] {
                    let child = node.get(key)?;
                    let map = self.linmap(&child)?;
                    if map.entries() != stored.entries() || map.domain_total() != stored.domain_total() {
                        return Err(child.error(format!("{key} disagrees with data_prime")));
                    }
                }
                Object::TwistResult(Box::new(
                    TwistResult::from_parts(
                        self.crossed(&node.get("source")?)?,
                        data_prime,
                        self.linmap(&node.get("phi")?)?,
                        self.linmap(&node.get("phi_inverse")?)?,
                    )
                    .map_err(invalid)?,
                ))
            }
            other => return Err(kind_node.error(format!("unknown object kind `{other}`"))),
        })
    }
}
