//! Elements of every kind the command line handles, with their text, LaTeX
//! and JSON forms.

use clap::ValueEnum;
use einfty::{
    render_tensor, AlgebraError, BarrattEcclesElement, BarrattEcclesTensor, Convention, CubicalCell, CubicalElement,
    FreeModuleElement, Permutation, Simplex, SimplicialCell, SimplicialElement, Surjection, SurjectionElement,
    SymmetricRingElement, Torsion,
};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;
use crate::literal::{self, Node};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Surjection,
    PermRing,
    BarrattEccles,
    Simplicial,
    Cubical,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Surjection => "surjection",
            Kind::PermRing => "perm-ring",
            Kind::BarrattEccles => "barratt-eccles",
            Kind::Simplicial => "simplicial",
            Kind::Cubical => "cubical",
        }
    }

    fn from_name(name: &str) -> Option<Self> {
        Kind::value_variants().iter().copied().find(|k| k.name() == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Surjection(SurjectionElement),
    PermRing(SymmetricRingElement),
    BarrattEccles(BarrattEcclesElement),
    Tensor(BarrattEcclesTensor),
    Simplicial(SimplicialElement),
    Cubical(CubicalElement),
}

#[derive(Serialize, Deserialize)]
pub struct JsonElement {
    pub kind: String,
    pub torsion: u64,
    pub convention: String,
    pub terms: Vec<JsonTerm>,
}

#[derive(Serialize, Deserialize)]
pub struct JsonTerm {
    pub basis: Value,
    pub coeff: i64,
}

fn shape(kind: Kind, node: &Node, expected: &str) -> CliError {
    CliError::Shape(format!("`{node}` is not a {} basis element ({expected})", kind.name()))
}

fn to_usize(values: Vec<u64>) -> Vec<usize> {
    values.into_iter().map(|v| v as usize).collect()
}

fn invalid(e: AlgebraError) -> CliError {
    CliError::Shape(e.to_string())
}

/// Builds an element of `kind` from parsed terms.
pub fn build(
    kind: Kind,
    terms: Vec<(Node, i64)>,
    torsion: Torsion,
    convention: Convention,
) -> Result<Element, CliError> {
    match kind {
        Kind::Surjection => {
            let pairs = terms
                .into_iter()
                .map(|(n, c)| {
                    let values = n.as_ints().ok_or_else(|| shape(kind, &n, "a tuple of values"))?;
                    Ok((Surjection::new(to_usize(values)).map_err(invalid)?, c))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            Ok(Element::Surjection(SurjectionElement::new(pairs, torsion, convention).map_err(invalid)?))
        }
        Kind::PermRing => {
            let pairs = terms
                .into_iter()
                .map(|(n, c)| {
                    let values = n.as_ints().ok_or_else(|| shape(kind, &n, "a tuple of values"))?;
                    Ok((Permutation::new(to_usize(values)).map_err(invalid)?, c))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            Ok(Element::PermRing(SymmetricRingElement::from_pairs(pairs, torsion).map_err(invalid)?))
        }
        Kind::BarrattEccles => {
            let pairs = terms
                .into_iter()
                .map(|(n, c)| {
                    let rows = n.as_int_tuples().ok_or_else(|| shape(kind, &n, "a tuple of permutations"))?;
                    let vertices = rows
                        .into_iter()
                        .map(|r| Permutation::new(to_usize(r)))
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(invalid)?;
                    Ok((Simplex::new(vertices).map_err(invalid)?, c))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            Ok(Element::BarrattEccles(BarrattEcclesElement::new(pairs, torsion).map_err(invalid)?))
        }
        Kind::Simplicial => {
            let pairs = terms
                .into_iter()
                .map(|(n, c)| {
                    let factors = n.as_int_tuples().ok_or_else(|| shape(kind, &n, "a tuple of vertex tuples"))?;
                    Ok((SimplicialCell::new(factors.into_iter().map(to_usize).collect()).map_err(invalid)?, c))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            Ok(Element::Simplicial(SimplicialElement::new(pairs, torsion).map_err(invalid)?))
        }
        Kind::Cubical => {
            let pairs = terms
                .into_iter()
                .map(|(n, c)| {
                    let factors = n.as_int_tuples().ok_or_else(|| shape(kind, &n, "a tuple of digit words"))?;
                    let words = factors
                        .into_iter()
                        .map(|w| w.into_iter().map(|d| u8::try_from(d).unwrap_or(u8::MAX)).collect())
                        .collect();
                    Ok((CubicalCell::new(words).map_err(invalid)?, c))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            Ok(Element::Cubical(CubicalElement::new(pairs, torsion).map_err(invalid)?))
        }
    }
}

/// Reads an element from text or, when the input starts with `{`, from JSON.
/// JSON input carries its own kind, torsion and convention.
pub fn read(src: &str, kind: Option<Kind>, torsion: Torsion, convention: Convention) -> Result<Element, CliError> {
    if src.trim_start().starts_with('{') {
        return from_json(src);
    }
    let kind = kind.ok_or_else(|| CliError::Usage("text input needs --kind".into()))?;
    let terms = literal::parse(src.trim()).map_err(CliError::Syntax)?;
    build(kind, terms, torsion, convention)
}

fn json_to_node(v: &Value) -> Result<Node, CliError> {
    match v {
        Value::Array(items) => Ok(Node::Tuple(items.iter().map(json_to_node).collect::<Result<_, _>>()?)),
        Value::Number(n) => n
            .as_u64()
            .map(Node::Int)
            .ok_or_else(|| CliError::Shape(format!("basis entries must be non-negative integers, found {n}"))),
        other => Err(CliError::Shape(format!("unexpected JSON value {other} in a basis"))),
    }
}

fn from_json(src: &str) -> Result<Element, CliError> {
    let parsed: JsonElement = serde_json::from_str(src).map_err(|e| CliError::Json(e.to_string()))?;
    let kind = Kind::from_name(&parsed.kind)
        .ok_or_else(|| CliError::Shape(format!("unknown element kind `{}`", parsed.kind)))?;
    let convention = match parsed.convention.as_str() {
        "none" => Convention::default(),
        name => name.parse().map_err(invalid)?,
    };
    let terms =
        parsed.terms.iter().map(|t| Ok((json_to_node(&t.basis)?, t.coeff))).collect::<Result<Vec<_>, CliError>>()?;
    build(kind, terms, Torsion(parsed.torsion), convention)
}

fn ints<T: Copy + Into<u64>>(values: &[T]) -> Value {
    Value::Array(values.iter().map(|&v| Value::from(v.into())).collect())
}

fn usizes(values: &[usize]) -> Value {
    Value::Array(values.iter().map(|&v| Value::from(v as u64)).collect())
}

fn simplex_json(s: &Simplex) -> Value {
    Value::Array(s.vertices().iter().map(|p| usizes(p.values())).collect())
}

fn terms_json<K: Ord + Clone>(m: &FreeModuleElement<K>, basis: impl Fn(&K) -> Value) -> Vec<JsonTerm> {
    m.iter().map(|(k, c)| JsonTerm { basis: basis(k), coeff: *c }).collect()
}

impl Element {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Element::Surjection(_) => "surjection",
            Element::PermRing(_) => "perm-ring",
            Element::BarrattEccles(_) => "barratt-eccles",
            Element::Tensor(_) => "barratt-eccles-tensor",
            Element::Simplicial(_) => "simplicial",
            Element::Cubical(_) => "cubical",
        }
    }

    pub fn torsion(&self) -> Torsion {
        match self {
            Element::Surjection(e) => e.torsion(),
            Element::PermRing(e) => e.torsion(),
            Element::BarrattEccles(e) => e.torsion(),
            Element::Tensor(e) => e.torsion(),
            Element::Simplicial(e) => e.torsion(),
            Element::Cubical(e) => e.torsion(),
        }
    }

    pub fn text(&self) -> String {
        match self {
            Element::Surjection(e) => e.to_string(),
            Element::PermRing(e) => e.to_string(),
            Element::BarrattEccles(e) => e.to_string(),
            Element::Tensor(e) => render_tensor(e),
            Element::Simplicial(e) => e.to_string(),
            Element::Cubical(e) => e.to_string(),
        }
    }

    /// LaTeX for chains; other kinds fall back to text.
    pub fn latex(&self) -> String {
        match self {
            Element::Simplicial(e) => e.latex(),
            Element::Cubical(e) => e.latex(),
            other => other.text(),
        }
    }

    pub fn to_json(&self) -> JsonElement {
        let (convention, terms) = match self {
            Element::Surjection(e) => (e.convention().name(), terms_json(e.module(), |k| usizes(k.values()))),
            Element::PermRing(e) => ("none", terms_json(e.module(), |k| usizes(k.values()))),
            Element::BarrattEccles(e) => ("none", terms_json(e.module(), simplex_json)),
            Element::Tensor(e) => {
                ("none", terms_json(e, |(a, b)| Value::Array(vec![simplex_json(a), simplex_json(b)])))
            }
            Element::Simplicial(e) => {
                ("none", terms_json(e.module(), |k| Value::Array(k.factors().iter().map(|f| usizes(f)).collect())))
            }
            Element::Cubical(e) => {
                ("none", terms_json(e.module(), |k| Value::Array(k.factors().iter().map(|f| ints(f)).collect())))
            }
        };
        JsonElement { kind: self.kind_name().into(), torsion: self.torsion().0, convention: convention.into(), terms }
    }
}
