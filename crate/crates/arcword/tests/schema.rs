//! The JSON outputs validate against the schemas shipped in `schemas/`.

use serde_json::Value;

/// Minimal validator for the JSON Schema subset the shipped schemas use:
/// `type`, `properties`, `required`, `items`, `minimum`.
fn validate(schema: &Value, value: &Value, path: &str) -> Result<(), String> {
    if let Some(ty) = schema.get("type").and_then(Value::as_str) {
        let ok = match ty {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "integer" => value.is_i64() || value.is_u64(),
            "string" => value.is_string(),
            "boolean" => value.is_boolean(),
            other => return Err(format!("unsupported schema type {other}")),
        };
        if !ok {
            return Err(format!("{path}: expected {ty}, got {value}"));
        }
    }
    if let Some(min) = schema.get("minimum").and_then(Value::as_i64) {
        if let Some(v) = value.as_i64() {
            if v < min {
                return Err(format!("{path}: {v} below minimum {min}"));
            }
        }
    }
    if let Some(required) = schema.get("required").and_then(Value::as_array) {
        for key in required {
            let key = key.as_str().unwrap();
            if value.get(key).is_none() {
                return Err(format!("{path}: missing required key {key}"));
            }
        }
    }
    if let Some(props) = schema.get("properties").and_then(Value::as_object) {
        for (key, sub) in props {
            if let Some(v) = value.get(key) {
                validate(sub, v, &format!("{path}.{key}"))?;
            }
        }
    }
    if let Some(items) = schema.get("items") {
        if let Some(arr) = value.as_array() {
            for (k, v) in arr.iter().enumerate() {
                validate(items, v, &format!("{path}[{k}]"))?;
            }
        }
    }
    Ok(())
}

fn schema(name: &str) -> Value {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../schemas/");
    let text = std::fs::read_to_string(format!("{path}{name}")).unwrap();
    serde_json::from_str(&text).unwrap()
}

#[test]
fn table_json_matches_schema() {
    let rows = arcword::table::build_table(6, true);
    let v = arcword::table::rows_to_json(6, true, &rows);
    validate(&schema("table.schema.json"), &v, "$").unwrap();
}

#[test]
fn dg_json_matches_schema() {
    let g = arcword::degeneracy::degeneracy_graph(2, false).unwrap();
    validate(&schema("dg.schema.json"), &g.to_json(), "$").unwrap();
}
