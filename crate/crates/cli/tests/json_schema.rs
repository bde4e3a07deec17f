//! Every `--json` output conforms to docs/cli-output.schema.json.
//!
//! The validator below covers exactly the keywords that schema uses.

use serde_json::Value;
use std::process::Command;

fn schema() -> Value {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/cli-output.schema.json");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn is_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

fn matches_pattern(pattern: &str, s: &str) -> bool {
    match pattern {
        "^-?[0-9]+(/[0-9]+)?$" => {
            let s = s.strip_prefix('-').unwrap_or(s);
            match s.split_once('/') {
                Some((n, d)) => is_digits(n) && is_digits(d),
                None => is_digits(s),
            }
        }
        "^(z|q|zmod:[0-9]+)$" => s == "z" || s == "q" || s.strip_prefix("zmod:").is_some_and(is_digits),
        other => panic!("pattern {other} is not supported by the test validator"),
    }
}

struct Validator {
    root: Value,
}

impl Validator {
    fn resolve<'a>(&'a self, r: &str) -> &'a Value {
        let name = r.strip_prefix("#/$defs/").unwrap_or_else(|| panic!("unsupported $ref {r}"));
        &self.root["$defs"][name]
    }

    fn check(&self, schema: &Value, v: &Value, path: &str) -> Result<(), String> {
        let obj = schema.as_object().expect("schema is an object");
        for (key, s) in obj {
            match key.as_str() {
                "$ref" => self.check(self.resolve(s.as_str().unwrap()), v, path)?,
                "type" => {
                    let ok = match s.as_str().unwrap() {
                        "object" => v.is_object(),
                        "array" => v.is_array(),
                        "string" => v.is_string(),
                        "boolean" => v.is_boolean(),
                        "null" => v.is_null(),
                        t => panic!("unsupported type {t}"),
                    };
                    if !ok {
                        return Err(format!("{path}: expected {s}, got {v}"));
                    }
                }
                "enum" => {
                    if !s.as_array().unwrap().contains(v) {
                        return Err(format!("{path}: {v} not in {s}"));
                    }
                }
                "pattern" => {
                    if let Some(text) = v.as_str() {
                        if !matches_pattern(s.as_str().unwrap(), text) {
                            return Err(format!("{path}: {text:?} does not match {s}"));
                        }
                    }
                }
                "required" => {
                    if let Some(o) = v.as_object() {
                        for k in s.as_array().unwrap() {
                            if !o.contains_key(k.as_str().unwrap()) {
                                return Err(format!("{path}: missing {k}"));
                            }
                        }
                    }
                }
                "properties" => {
                    if let Some(o) = v.as_object() {
                        for (k, sub) in s.as_object().unwrap() {
                            if let Some(x) = o.get(k) {
                                self.check(sub, x, &format!("{path}.{k}"))?;
                            }
                        }
                    }
                }
                "additionalProperties" => {
                    if let Some(o) = v.as_object() {
                        let known = obj.get("properties").and_then(Value::as_object);
                        for (k, x) in o {
                            if known.is_some_and(|p| p.contains_key(k)) {
                                continue;
                            }
                            match s {
                                Value::Bool(false) => return Err(format!("{path}: unexpected key {k}")),
                                Value::Bool(true) => {}
                                sub => self.check(sub, x, &format!("{path}.{k}"))?,
                            }
                        }
                    }
                }
                "items" => {
                    if let Some(a) = v.as_array() {
                        let skip = obj.get("prefixItems").and_then(Value::as_array).map_or(0, Vec::len);
                        for (i, x) in a.iter().enumerate().skip(skip) {
                            self.check(s, x, &format!("{path}[{i}]"))?;
                        }
                    }
                }
                "prefixItems" => {
                    if let Some(a) = v.as_array() {
                        for (i, (sub, x)) in s.as_array().unwrap().iter().zip(a).enumerate() {
                            self.check(sub, x, &format!("{path}[{i}]"))?;
                        }
                    }
                }
                "minItems" | "maxItems" => {
                    if let Some(a) = v.as_array() {
                        let n = s.as_u64().unwrap() as usize;
                        let ok = if key == "minItems" { a.len() >= n } else { a.len() <= n };
                        if !ok {
                            return Err(format!("{path}: {key} {n}, got {}", a.len()));
                        }
                    }
                }
                "oneOf" => {
                    let hits = s.as_array().unwrap().iter().filter(|sub| self.check(sub, v, path).is_ok()).count();
                    if hits != 1 {
                        return Err(format!("{path}: {hits} oneOf branches match"));
                    }
                }
                "description" | "title" | "$schema" | "$id" | "$defs" => {}
                other => panic!("keyword {other} is not supported by the test validator"),
            }
        }
        Ok(())
    }

    fn validate(&self, def: &str, v: &Value) -> Result<(), String> {
        self.check(&serde_json::json!({ "$ref": format!("#/$defs/{def}") }), v, "$")
    }
}

fn json_output(args: &[&str]) -> Value {
    let o = Command::new(env!("CARGO_BIN_EXE_strongmon"))
        .args(args)
        .arg("--json")
        .output()
        .unwrap();
    assert!(o.status.code().is_some_and(|c| c < 2), "{args:?}");
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"))
}

fn no_json_numbers(v: &Value) -> bool {
    match v {
        Value::Number(_) => false,
        Value::Array(a) => a.iter().all(no_json_numbers),
        Value::Object(o) => o.values().all(no_json_numbers),
        _ => true,
    }
}

#[test]
fn outputs_conform_to_schema() {
    let v = Validator { root: schema() };
    let cases: &[(&str, &[&str])] = &[
        ("closure", &["closure", "--gens", "4,6", "--bound", "30"]),
        ("check", &["check", "--gens", "4,6"]),
        ("check", &["check", "--set", "1,2,4,6,8,10", "--bound", "10"]),
        ("check", &["check", "--set", "2,3"]),
        ("translate", &["translate", "--gens", "4,6", "--direction", "t2s"]),
        ("mingens", &["mingens", "--gens", "3,5,8"]),
        ("member", &["member", "--gens", "3,5", "--n", "7"]),
        ("primes", &["primes", "--a", "5", "--count", "5"]),
        ("compose", &["compose", "--f", "x^2", "--g", "x+x^2", "--ring", "q", "--prec", "8"]),
        ("invert", &["invert", "--f", "x+x^3", "--prec", "9", "--check-support", "3"]),
        ("invert", &["invert", "--f", "2*x", "--ring", "zmod:4", "--prec", "3"]),
        ("multi_compose", &["multi", "compose", "--n", "2", "--f", "x1^2 | x2", "--g", "x1+x2^2 | x2"]),
        ("verify", &["multi", "check", "--gens", "3", "--n", "3", "--trials", "5", "--degree", "6", "--seed", "1"]),
        ("verify", &["verify", "--suite", "all", "--seed", "3", "--trials", "5", "--prec", "15"]),
    ];
    for (def, args) in cases {
        let out = json_output(args);
        if let Err(e) = v.validate(def, &out) {
            panic!("{args:?} against {def}: {e}");
        }
        assert!(no_json_numbers(&out), "{args:?} prints a JSON number");
    }
}

#[test]
fn validator_rejects_bad_documents() {
    let v = Validator { root: schema() };
    assert!(v.validate("decimal", &serde_json::json!(3)).is_err());
    assert!(v.validate("decimal", &serde_json::json!("3.5")).is_err());
    assert!(v.validate("decimal", &serde_json::json!("-7/2")).is_ok());
    assert!(v.validate("ring", &serde_json::json!("zmod:")).is_err());
    assert!(v.validate("member", &serde_json::json!({"generators": [], "n": "1"})).is_err());
    assert!(v
        .validate("member", &serde_json::json!({"generators": [], "n": "1", "member": true, "x": 1}))
        .is_err());
    let terms = serde_json::json!({"ring": "z", "precision": "3", "terms": [["1"]]});
    assert!(v.validate("series", &terms).is_err());
}
