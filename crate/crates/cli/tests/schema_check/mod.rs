//! Minimal JSON Schema validator covering the keywords used by the shipped
//! report schema: `type`, `enum`, `required`, `properties`,
//! `additionalProperties: false`, `items`, `$ref` (local), `oneOf`,
//! `minimum`, `minLength`, `minItems`.

use serde_json::Value;

pub fn load_schema() -> Value {
    let path = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../schema/classification-report.schema.json"
    );
    serde_json::from_str(&std::fs::read_to_string(path).expect("schema file")).expect("schema json")
}

pub fn validate(root: &Value, instance: &Value) -> Result<(), String> {
    check(root, root, instance, "$")
}

fn resolve<'a>(root: &'a Value, reference: &str) -> &'a Value {
    let path = reference.strip_prefix("#/").expect("local reference");
    path.split('/').fold(root, |node, key| &node[key])
}

fn type_matches(name: &str, v: &Value) -> bool {
    match name {
        "object" => v.is_object(),
        "array" => v.is_array(),
        "string" => v.is_string(),
        "boolean" => v.is_boolean(),
        "null" => v.is_null(),
        "integer" => v.is_i64() || v.is_u64(),
        "number" => v.is_number(),
        other => panic!("unsupported type {other}"),
    }
}

fn check(root: &Value, schema: &Value, v: &Value, at: &str) -> Result<(), String> {
    let obj = schema.as_object().expect("schema object");
    for key in obj.keys() {
        let known = [
            "$schema",
            "$id",
            "title",
            "$defs",
            "type",
            "enum",
            "required",
            "properties",
            "additionalProperties",
            "items",
            "$ref",
            "oneOf",
            "minimum",
            "minLength",
            "minItems",
        ];
        assert!(
            known.contains(&key.as_str()),
            "validator does not support {key}"
        );
    }
    if let Some(r) = obj.get("$ref") {
        check(root, resolve(root, r.as_str().unwrap()), v, at)?;
    }
    if let Some(t) = obj.get("type") {
        let ok = match t {
            Value::String(s) => type_matches(s, v),
            Value::Array(ts) => ts.iter().any(|s| type_matches(s.as_str().unwrap(), v)),
            _ => panic!("bad type keyword"),
        };
        if !ok {
            return Err(format!("{at}: expected type {t}, got {v}"));
        }
    }
    if let Some(Value::Array(options)) = obj.get("enum") {
        if !options.contains(v) {
            return Err(format!("{at}: {v} not in {options:?}"));
        }
    }
    if let Some(Value::Array(options)) = obj.get("oneOf") {
        let matches = options
            .iter()
            .filter(|s| check(root, s, v, at).is_ok())
            .count();
        if matches != 1 {
            return Err(format!("{at}: {matches} oneOf branches match {v}"));
        }
    }
    if let (Some(min), Some(x)) = (obj.get("minimum"), v.as_f64()) {
        if x < min.as_f64().unwrap() {
            return Err(format!("{at}: {x} below minimum {min}"));
        }
    }
    if let (Some(min), Some(s)) = (obj.get("minLength"), v.as_str()) {
        if (s.chars().count() as u64) < min.as_u64().unwrap() {
            return Err(format!("{at}: string shorter than {min}"));
        }
    }
    if let Some(items) = v.as_array() {
        if let Some(min) = obj.get("minItems") {
            if (items.len() as u64) < min.as_u64().unwrap() {
                return Err(format!("{at}: fewer than {min} items"));
            }
        }
        if let Some(item_schema) = obj.get("items") {
            for (i, item) in items.iter().enumerate() {
                check(root, item_schema, item, &format!("{at}[{i}]"))?;
            }
        }
    }
    if let Some(fields) = v.as_object() {
        if let Some(Value::Array(required)) = obj.get("required") {
            for r in required {
                if !fields.contains_key(r.as_str().unwrap()) {
                    return Err(format!("{at}: missing {r}"));
                }
            }
        }
        let props = obj.get("properties").and_then(Value::as_object);
        for (k, fv) in fields {
            match props.and_then(|p| p.get(k)) {
                Some(s) => check(root, s, fv, &format!("{at}.{k}"))?,
                None if obj.get("additionalProperties") == Some(&Value::Bool(false)) => {
                    return Err(format!("{at}: unexpected property {k}"));
                }
                None => {}
            }
        }
    }
    Ok(())
}
