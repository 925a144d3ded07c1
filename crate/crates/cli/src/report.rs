use serde_json::{Map, Value};

/// Ordered key/value output, printed as `key: value` lines or one JSON
/// object.
#[derive(Debug, Default)]
pub struct Report {
    fields: Map<String, Value>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn put(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.insert(key.to_string(), value.into());
        self
    }

    pub fn put_json<T: serde::Serialize>(&mut self, key: &str, value: &T) -> &mut Self {
        self.fields.insert(
            key.to_string(),
            serde_json::to_value(value).expect("serializable"),
        );
        self
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(&Value::Object(self.fields.clone())).unwrap();
            s.push('\n');
            return s;
        }
        let mut out = String::new();
        for (k, v) in &self.fields {
            out.push_str(k);
            out.push_str(": ");
            out.push_str(&plain(v));
            out.push('\n');
        }
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            if items.is_empty() {
                "none".into()
            } else {
                items.iter().map(plain).collect::<Vec<_>>().join(",")
            }
        }
        Value::Array(items) if items.iter().all(|i| i.is_array()) => items
            .iter()
            .map(|i| format!("({})", plain(i)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}
