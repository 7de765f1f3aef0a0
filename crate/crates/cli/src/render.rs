//! Output formats. Keys come out sorted because `serde_json` maps are ordered.

use serde_json::Value;

pub fn json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn is_record_list(v: &Value) -> bool {
    matches!(v, Value::Array(a) if !a.is_empty() && a.iter().all(Value::is_object))
}

/// Scalars as `key: value`; lists of objects as one indented row per record.
pub fn table(v: &Value) -> String {
    let mut out = String::new();
    let Value::Object(map) = v else {
        out.push_str(&compact(v));
        out.push('\n');
        return out;
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    for (k, val) in map {
        if is_record_list(val) {
            out.push_str(&format!("{k}:\n"));
            for rec in val.as_array().unwrap() {
                let cells: Vec<String> = rec
                    .as_object()
                    .unwrap()
                    .iter()
                    .map(|(ck, cv)| format!("{ck}={}", compact(cv)))
                    .collect();
                out.push_str(&format!("  {}\n", cells.join("  ")));
            }
        } else {
            out.push_str(&format!("{k:<width$}  {}\n", compact(val)));
        }
    }
    out
}
