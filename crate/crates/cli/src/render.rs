use serde_json::{Map, Value};

/// Plain-text rendering of a report: one `key: value` per line, lists indented.
pub fn text(doc: &Map<String, Value>) -> String {
    let mut out = String::new();
    object(doc, 0, &mut out);
    out
}

fn object(map: &Map<String, Value>, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    for (k, v) in map {
        match v {
            Value::Object(inner) => {
                out.push_str(&format!("{pad}{k}:\n"));
                object(inner, indent + 1, out);
            }
            Value::Array(items) if items.is_empty() => out.push_str(&format!("{pad}{k}: (none)\n")),
            Value::Array(items) => {
                out.push_str(&format!("{pad}{k}:\n"));
                for item in items {
                    match item {
                        Value::Object(inner) => {
                            out.push_str(&format!("{pad}  -\n"));
                            object(inner, indent + 2, out);
                        }
                        other => out.push_str(&format!("{pad}  - {}\n", scalar(other))),
                    }
                }
            }
            other => out.push_str(&format!("{pad}{k}: {}\n", scalar(other))),
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}
