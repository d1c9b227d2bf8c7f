//! Output rendering. JSON is pretty-printed; text is an indented outline of
//! the same value.

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

pub fn render<T: Serialize>(report: &T, format: Format) -> String {
    let value = serde_json::to_value(report).expect("reports serialize");
    match format {
        Format::Json => serde_json::to_string_pretty(&value).expect("values serialize") + "\n",
        Format::Text => {
            let mut out = String::new();
            outline(&value, 0, &mut out);
            out
        }
    }
}

fn is_leaf(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_object() && (!x.is_array() || is_leaf(x))),
        Value::Object(_) => false,
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(inline).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

fn outline(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                if is_leaf(x) {
                    out.push_str(&format!("{pad}{k}: {}\n", inline(x)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    outline(x, indent + 2, out);
                }
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                out.push_str(&format!("{pad}- [{i}]\n"));
                outline(x, indent + 2, out);
            }
        }
        leaf => out.push_str(&format!("{pad}{}\n", inline(leaf))),
    }
}
