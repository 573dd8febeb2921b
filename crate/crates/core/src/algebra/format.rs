//! JSON file format for algebras.
//!
//! ```json
//! {
//!   "name": "dual-numbers",
//!   "field": "Q",
//!   "dim": 2,
//!   "basis": ["1", "eps"],
//!   "unit": ["1", "0"],
//!   "table": [{"i": 0, "j": 0, "k": 0, "c": "1"}, ...]
//! }
//! ```
//!
//! Indices are 0-based, coefficients are rational strings `a` or `a/b`, and
//! products not listed are zero. `basis` and `name` are optional.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{Algebra, StructureConstant};
use crate::error::{Error, Result};
use crate::kernel::rational::{format_rational, parse_rational};

/// Upper bound on the dimension accepted from a file.
pub const MAX_DIM: usize = 64;

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct FileEntry {
    i: usize,
    j: usize,
    k: usize,
    c: String,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    field: String,
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<String>>,
    unit: Vec<String>,
    table: Vec<FileEntry>,
}

/// Parses an algebra file. Structural problems are reported as
/// [`Error::Parse`] naming the offending field; the algebra axioms are not
/// checked here.
pub fn parse_algebra(text: &str) -> Result<Algebra> {
    let file: AlgebraFile =
        serde_json::from_str(text).map_err(|e| Error::parse("json", e.to_string()))?;
    if file.field != "Q" {
        return Err(Error::parse("field", format!("unsupported field {:?}, expected \"Q\"", file.field)));
    }
    let dim = file.dim;
    if dim == 0 || dim > MAX_DIM {
        return Err(Error::parse("dim", format!("dimension must be between 1 and {MAX_DIM}")));
    }
    let basis = match file.basis {
        Some(b) if b.len() != dim => {
            return Err(Error::parse("basis", format!("expected {dim} labels, got {}", b.len())))
        }
        Some(b) => {
            let mut seen = HashSet::new();
            if let Some(dup) = b.iter().find(|l| !seen.insert(l.as_str())) {
                return Err(Error::parse("basis", format!("duplicate label {dup:?}")));
            }
            b
        }
        None => (1..=dim).map(|i| format!("a{i}")).collect(),
    };
    if file.unit.len() != dim {
        return Err(Error::parse("unit", format!("expected {dim} coordinates, got {}", file.unit.len())));
    }
    let unit = file
        .unit
        .iter()
        .enumerate()
        .map(|(n, s)| parse_rational(s).map_err(|e| e.in_field(format!("unit[{n}]"))))
        .collect::<Result<Vec<_>>>()?;
    let mut seen = HashSet::new();
    let mut table = Vec::with_capacity(file.table.len());
    for (n, e) in file.table.iter().enumerate() {
        if e.i >= dim || e.j >= dim || e.k >= dim {
            return Err(Error::parse(format!("table[{n}]"), format!("index out of range for dim {dim}")));
        }
        let c = parse_rational(&e.c).map_err(|err| err.in_field(format!("table[{n}].c")))?;
        if num_traits::Zero::is_zero(&c) {
            return Err(Error::parse(format!("table[{n}].c"), "zero coefficient"));
        }
        if !seen.insert((e.i, e.j, e.k)) {
            return Err(Error::parse(
                format!("table[{n}]"),
                format!("duplicate entry ({}, {}, {})", e.i, e.j, e.k),
            ));
        }
        table.push(StructureConstant { i: e.i, j: e.j, k: e.k, c });
    }
    Algebra::new(file.name.unwrap_or_else(|| "algebra".into()), basis, unit, table)
}

/// Canonical serialization: pretty JSON, table sorted by `(i, j, k)`,
/// trailing newline. `parse_algebra` reads it back to an equal algebra.
pub fn emit_algebra(alg: &Algebra) -> String {
    let file = AlgebraFile {
        name: Some(alg.name().to_string()),
        field: "Q".into(),
        dim: alg.dim(),
        basis: Some(alg.basis().to_vec()),
        unit: alg.unit().0.iter().map(format_rational).collect(),
        table: alg
            .table()
            .iter()
            .map(|e| FileEntry { i: e.i, j: e.j, k: e.k, c: format_rational(&e.c) })
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&file).expect("serializable");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog;

    #[test]
    fn round_trip_catalog() {
        for name in catalog::NAMES {
            let alg = catalog::get(name).unwrap();
            let text = emit_algebra(&alg);
            let back = parse_algebra(&text).unwrap();
            assert_eq!(back, alg, "{name}");
            assert_eq!(emit_algebra(&back), text);
        }
    }

    #[test]
    fn minimal_file() {
        let alg = parse_algebra(
            r#"{"field":"Q","dim":2,"unit":["1","0"],
                "table":[{"i":0,"j":0,"k":0,"c":"1"},{"i":0,"j":1,"k":1,"c":"1"},
                         {"i":1,"j":0,"k":1,"c":"1"}]}"#,
        )
        .unwrap();
        assert_eq!(alg.basis(), ["a1", "a2"]);
        assert!(alg.validate().is_valid());
    }

    fn field_of(text: &str) -> String {
        match parse_algebra(text) {
            Err(Error::Parse { field, .. }) => field,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn errors_name_the_field() {
        let base = |table: &str, unit: &str| {
            format!(r#"{{"field":"Q","dim":2,"unit":{unit},"table":{table}}}"#)
        };
        assert_eq!(field_of("{"), "json");
        assert_eq!(field_of(r#"{"field":"F2","dim":1,"unit":["1"],"table":[]}"#), "field");
        assert_eq!(field_of(r#"{"field":"Q","dim":0,"unit":[],"table":[]}"#), "dim");
        assert_eq!(field_of(&base("[]", r#"["1"]"#)), "unit");
        assert_eq!(field_of(&base("[]", r#"["1","x"]"#)), "unit[1]");
        assert_eq!(field_of(&base(r#"[{"i":0,"j":2,"k":0,"c":"1"}]"#, r#"["1","0"]"#)), "table[0]");
        assert_eq!(field_of(&base(r#"[{"i":0,"j":0,"k":0,"c":"1/0"}]"#, r#"["1","0"]"#)), "table[0].c");
        assert_eq!(field_of(&base(r#"[{"i":0,"j":0,"k":0,"c":"0"}]"#, r#"["1","0"]"#)), "table[0].c");
        assert_eq!(
            field_of(&base(
                r#"[{"i":0,"j":0,"k":0,"c":"1"},{"i":0,"j":0,"k":0,"c":"2"}]"#,
                r#"["1","0"]"#
            )),
            "table[1]"
        );
        assert_eq!(field_of(r#"{"field":"Q","dim":1,"unit":["1"],"table":[],"extra":1}"#), "json");
    }
}
