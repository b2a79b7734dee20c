//! The JSON algebra file.
//!
//! ```json
//! {
//!   "name": "aff1",
//!   "kind": "PlainLie",
//!   "dim": 2,
//!   "field": "Q",
//!   "basis": ["e1", "e2"],
//!   "products": { "bracket": [[0, 1, 1, "1"], [1, 0, 1, "-1"]] },
//!   "alpha": [["1", "0"], ["0", "1"]],
//!   "beta": [["1", "0"], ["0", "1"]],
//!   "operators": [{ "name": "R", "matrix": [["0", "0"], ["1", "0"]], "weight": "0" }]
//! }
//! ```
//!
//! Missing quadruples are zero. Scalars are always strings (`"-3"`, `"1/2"`);
//! over `Fp:p` a fraction means `num · den⁻¹ mod p`. Repeated quadruples for
//! the same `(i, j, k)` are rejected rather than summed.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use bihom_core::{AlgebraInstance, AlgebraKind, BilinearProduct, Field, LinearOperator, Scalar};
use serde::Deserialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: {message}")]
    Semantic { path: String, message: String },
}

fn semantic(path: impl Into<String>, message: impl ToString) -> FormatError {
    FormatError::Semantic {
        path: path.into(),
        message: message.to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedOperator {
    pub name: String,
    pub matrix: LinearOperator,
    pub weight: Scalar,
}

/// A parsed file: the algebra plus any operators shipped alongside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub instance: AlgebraInstance,
    pub operators: Vec<NamedOperator>,
}

impl AlgebraDocument {
    pub fn new(instance: AlgebraInstance) -> Self {
        AlgebraDocument {
            instance,
            operators: Vec::new(),
        }
    }

    pub fn operator(&self, name: &str) -> Option<&NamedOperator> {
        self.operators.iter().find(|o| o.name == name)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    name: String,
    kind: String,
    dim: usize,
    field: String,
    basis: Vec<String>,
    products: BTreeMap<String, Vec<(usize, usize, usize, String)>>,
    alpha: Vec<Vec<String>>,
    beta: Vec<Vec<String>>,
    #[serde(default)]
    operators: Vec<RawOperator>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOperator {
    name: String,
    matrix: Vec<Vec<String>>,
    weight: String,
}

/// Deserializes with syntax errors located by line and column and shape
/// errors located by key path.
fn from_json<'de, T: Deserialize<'de>>(text: &'de str) -> Result<T, FormatError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let result: Result<T, _> = serde_path_to_error::deserialize(de);
    result.map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        if inner.is_syntax() || inner.is_eof() {
            FormatError::Syntax {
                line: inner.line(),
                column: inner.column(),
                message: strip_position(&inner.to_string()),
            }
        } else {
            semantic(
                if path == "." { "(root)".to_string() } else { path },
                strip_position(&inner.to_string()),
            )
        }
    })
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

fn parse_scalar(field: Field, text: &str, path: &str) -> Result<Scalar, FormatError> {
    field.parse(text).map_err(|e| semantic(path, e))
}

fn parse_matrix(field: Field, dim: usize, rows: &[Vec<String>], path: &str) -> Result<LinearOperator, FormatError> {
    if rows.len() != dim {
        return Err(semantic(path, format!("expected {dim} rows, found {}", rows.len())));
    }
    let mut out = Vec::with_capacity(dim);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != dim {
            return Err(semantic(
                format!("{path}[{r}]"),
                format!("expected {dim} entries, found {}", row.len()),
            ));
        }
        out.push(
            row.iter()
                .enumerate()
                .map(|(c, s)| parse_scalar(field, s, &format!("{path}[{r}][{c}]")))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    LinearOperator::from_rows(field, out).map_err(|e| semantic(path, e))
}

fn parse_product(
    field: Field,
    dim: usize,
    quads: &[(usize, usize, usize, String)],
    path: &str,
) -> Result<BilinearProduct, FormatError> {
    let mut seen = BTreeSet::new();
    let mut entries = Vec::with_capacity(quads.len());
    for (n, (i, j, k, c)) in quads.iter().enumerate() {
        let here = format!("{path}[{n}]");
        if let Some(bad) = [i, j, k].into_iter().find(|&&x| x >= dim) {
            return Err(semantic(
                here,
                format!("index {bad} out of range for dim {dim} in [{i}, {j}, {k}, {c:?}]"),
            ));
        }
        if !seen.insert((*i, *j, *k)) {
            return Err(semantic(here, format!("duplicate entry for [{i}, {j}, {k}]")));
        }
        entries.push((*i, *j, *k, parse_scalar(field, c, &format!("{here}[3]"))?));
    }
    BilinearProduct::from_entries(field, dim, &entries).map_err(|e| semantic(path, e))
}

pub fn parse_algebra_file(text: &str) -> Result<AlgebraDocument, FormatError> {
    let raw: RawFile = from_json(text)?;
    let field: Field = raw.field.parse().map_err(|e| semantic("field", e))?;
    let kind: AlgebraKind = raw.kind.parse().map_err(|e| semantic("kind", e))?;
    let dim = raw.dim;
    if dim == 0 {
        return Err(semantic("dim", "dimension must be positive"));
    }
    if raw.basis.len() != dim {
        return Err(semantic(
            "basis",
            format!("expected {dim} labels, found {}", raw.basis.len()),
        ));
    }
    let mut products = BTreeMap::new();
    for (label, quads) in &raw.products {
        products.insert(
            label.clone(),
            parse_product(field, dim, quads, &format!("products.{label}"))?,
        );
    }
    let alpha = parse_matrix(field, dim, &raw.alpha, "alpha")?;
    let beta = parse_matrix(field, dim, &raw.beta, "beta")?;
    let instance =
        AlgebraInstance::new(raw.name, kind, raw.basis, products, alpha, beta).map_err(|e| semantic("products", e))?;
    let mut operators = Vec::with_capacity(raw.operators.len());
    for (n, op) in raw.operators.iter().enumerate() {
        let path = format!("operators[{n}]");
        if operators.iter().any(|o: &NamedOperator| o.name == op.name) {
            return Err(semantic(
                format!("{path}.name"),
                format!("duplicate operator {:?}", op.name),
            ));
        }
        operators.push(NamedOperator {
            name: op.name.clone(),
            matrix: parse_matrix(field, dim, &op.matrix, &format!("{path}.matrix"))?,
            weight: parse_scalar(field, &op.weight, &format!("{path}.weight"))?,
        });
    }
    Ok(AlgebraDocument { instance, operators })
}

/// A standalone matrix file: a JSON array of rows of scalar strings.
pub fn parse_matrix_file(text: &str, field: Field, dim: usize) -> Result<LinearOperator, FormatError> {
    let rows: Vec<Vec<String>> = from_json(text)?;
    parse_matrix(field, dim, &rows, "(root)")
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn matrix_json(f: &LinearOperator) -> String {
    let rows: Vec<String> = f
        .rows()
        .map(|r| {
            format!(
                "[{}]",
                r.iter().map(|x| quote(&x.to_string())).collect::<Vec<_>>().join(", ")
            )
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

/// Canonical matrix file text.
pub fn serialize_matrix(f: &LinearOperator) -> String {
    format!("{}\n", matrix_json(f))
}

/// Canonical form: fixed key order, quadruples sorted by `(i, j, k)` with
/// zeros omitted, normalized scalars, one quadruple per line.
pub fn serialize(doc: &AlgebraDocument) -> String {
    let a = &doc.instance;
    let mut s = String::new();
    s.push_str("{\n");
    let _ = writeln!(s, "  \"name\": {},", quote(a.name()));
    let _ = writeln!(s, "  \"kind\": {},", quote(a.kind().name()));
    let _ = writeln!(s, "  \"dim\": {},", a.dim());
    let _ = writeln!(s, "  \"field\": {},", quote(&a.field().to_string()));
    let basis: Vec<String> = a.basis_labels().iter().map(|l| quote(l)).collect();
    let _ = writeln!(s, "  \"basis\": [{}],", basis.join(", "));
    s.push_str("  \"products\": {");
    let products: Vec<String> = a
        .products()
        .iter()
        .map(|(label, m)| {
            let quads: Vec<String> = m
                .nonzero_entries()
                .map(|(i, j, k, c)| format!("      [{i}, {j}, {k}, {}]", quote(&c.to_string())))
                .collect();
            if quads.is_empty() {
                format!("\n    {}: []", quote(label))
            } else {
                format!("\n    {}: [\n{}\n    ]", quote(label), quads.join(",\n"))
            }
        })
        .collect();
    s.push_str(&products.join(","));
    s.push_str("\n  },\n");
    let _ = write!(
        s,
        "  \"alpha\": {},\n  \"beta\": {}",
        matrix_json(a.alpha()),
        matrix_json(a.beta())
    );
    if !doc.operators.is_empty() {
        s.push_str(",\n  \"operators\": [");
        let ops: Vec<String> = doc
            .operators
            .iter()
            .map(|o| {
                format!(
                    "\n    {{\"name\": {}, \"matrix\": {}, \"weight\": {}}}",
                    quote(&o.name),
                    matrix_json(&o.matrix),
                    quote(&o.weight.to_string())
                )
            })
            .collect();
        s.push_str(&ops.join(","));
        s.push_str("\n  ]");
    }
    s.push_str("\n}\n");
    s
}

pub fn serialize_instance(a: &AlgebraInstance) -> String {
    serialize(&AlgebraDocument::new(a.clone()))
}

/// Hex SHA-256 of the canonical serialization.
pub fn digest(doc: &AlgebraDocument) -> String {
    sha256_hex(serialize(doc).as_bytes())
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    use sha2::{Digest, Sha256};
    hex::encode(Sha256::digest(bytes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use bihom_core::catalog::catalog_get;

    #[test]
    fn minimal_abelian_file() {
        let text = r#"{"name": "ab", "kind": "PlainLie", "dim": 2, "field": "Q", "basis": ["x", "y"],
            "products": {"bracket": []}, "alpha": [["1","0"],["0","1"]], "beta": [["1","0"],["0","1"]]}"#;
        let doc = parse_algebra_file(text).unwrap();
        assert!(doc.instance.sole_product().unwrap().1.is_zero());
        assert!(doc.operators.is_empty());
    }

    #[test]
    fn out_of_range_index_names_the_quadruple() {
        let text = serialize_instance(&catalog_get("aff1").unwrap().instance).replace("[1, 0, 1,", "[1, 0, 2,");
        match parse_algebra_file(&text) {
            Err(FormatError::Semantic { path, message }) => {
                assert_eq!(path, "products.bracket[1]");
                assert!(message.contains("[1, 0, 2, \"-1\"]"), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_algebra_file("{\n  \"name\": \"x\",\n  oops\n}").unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 3, column: 3, .. }), "{err:?}");
    }

    #[test]
    fn shape_errors_carry_path() {
        let text = serialize_instance(&catalog_get("aff1").unwrap().instance).replace("\"dim\": 2", "\"dim\": \"two\"");
        assert!(matches!(parse_algebra_file(&text), Err(FormatError::Semantic { path, .. }) if path == "dim"));
        let text = serialize_instance(&catalog_get("aff1").unwrap().instance).replace("\"Q\"", "\"Fp:4\"");
        assert!(matches!(parse_algebra_file(&text), Err(FormatError::Semantic { path, .. }) if path == "field"));
    }

    #[test]
    fn kind_arity_mismatch_is_semantic() {
        let text = serialize_instance(&catalog_get("aff1").unwrap().instance).replace("PlainLie", "BiHomDendriform");
        assert!(matches!(parse_algebra_file(&text), Err(FormatError::Semantic { path, .. }) if path == "products"));
    }

    #[test]
    fn canonical_form_sorts_and_normalizes() {
        let text = r#"{"name": "t", "kind": "PlainLie", "dim": 2, "field": "Q", "basis": ["x", "y"],
            "products": {"bracket": [[1, 0, 1, "-2/2"], [0, 0, 0, "0"], [0, 1, 1, "3/3"]]},
            "alpha": [["1","0"],["0","1"]], "beta": [["2/2","0"],["0","1"]]}"#;
        let once = serialize(&parse_algebra_file(text).unwrap());
        assert!(once.contains("[0, 1, 1, \"1\"],\n      [1, 0, 1, \"-1\"]"), "{once}");
        assert!(!once.contains("[0, 0, 0"));
        assert_eq!(serialize(&parse_algebra_file(&once).unwrap()), once);
    }

    #[test]
    fn fp_fractions_are_inverses() {
        let text = r#"{"name": "t", "kind": "PlainLie", "dim": 1, "field": "Fp:5", "basis": ["x"],
            "products": {"bracket": []}, "alpha": [["1/2"]], "beta": [["1"]]}"#;
        let err = parse_algebra_file(text).unwrap_err();
        // 1/2 = 3 mod 5 is not the identity, which a plain kind requires
        assert!(matches!(err, FormatError::Semantic { .. }));
        let doc = parse_algebra_file(&text.replace("PlainLie", "BiHomLie")).unwrap();
        assert_eq!(doc.instance.alpha().entry(0, 0).fp_value(), Some(3));
    }

    #[test]
    fn operators_round_trip() {
        let a = catalog_get("uptri2").unwrap().instance;
        let doc = AlgebraDocument {
            instance: a,
            operators: vec![NamedOperator {
                name: "R".into(),
                matrix: bihom_core::catalog::uptri2_rota_baxter(),
                weight: Field::Rational.zero(),
            }],
        };
        let text = serialize(&doc);
        assert_eq!(parse_algebra_file(&text).unwrap(), doc);
        let mut twice = doc.clone();
        twice.operators.push(doc.operators[0].clone());
        let dup = serialize(&twice);
        assert!(
            matches!(parse_algebra_file(&dup), Err(FormatError::Semantic { path, .. }) if path == "operators[1].name")
        );
    }
}
