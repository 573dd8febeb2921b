//! Ordered key/value reports with a text and a JSON rendering that carry
//! the same fields in the same order.

use serde_json::{Map, Value};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Field {
    Text(String),
    Int(u64),
    Flag(bool),
    List(Vec<String>),
    Ints(Vec<u64>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    fields: Vec<(String, Field)>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn text(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.fields.push((key.into(), Field::Text(value.to_string())));
        self
    }

    pub fn int(&mut self, key: &str, value: usize) -> &mut Self {
        self.fields.push((key.into(), Field::Int(value as u64)));
        self
    }

    pub fn flag(&mut self, key: &str, value: bool) -> &mut Self {
        self.fields.push((key.into(), Field::Flag(value)));
        self
    }

    pub fn list<T: ToString>(&mut self, key: &str, items: impl IntoIterator<Item = T>) -> &mut Self {
        self.fields
            .push((key.into(), Field::List(items.into_iter().map(|i| i.to_string()).collect())));
        self
    }

    pub fn ints(&mut self, key: &str, items: impl IntoIterator<Item = usize>) -> &mut Self {
        self.fields
            .push((key.into(), Field::Ints(items.into_iter().map(|i| i as u64).collect())));
        self
    }

    pub fn seed(&mut self, seed: u64) -> &mut Self {
        self.fields.push(("seed".into(), Field::Int(seed)));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Field> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn fields(&self) -> &[(String, Field)] {
        &self.fields
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Structured => self.render_json(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.fields {
            match v {
                Field::Text(s) => out.push_str(&format!("{k}: {s}\n")),
                Field::Int(n) => out.push_str(&format!("{k}: {n}\n")),
                Field::Flag(b) => out.push_str(&format!("{k}: {b}\n")),
                Field::List(items) if items.is_empty() => out.push_str(&format!("{k}: []\n")),
                Field::Ints(items) => {
                    let parts: Vec<String> = items.iter().map(|i| i.to_string()).collect();
                    out.push_str(&format!("{k}: [{}]\n", parts.join(", ")));
                }
                Field::List(items) => {
                    out.push_str(&format!("{k}:\n"));
                    for i in items {
                        out.push_str(&format!("  - {i}\n"));
                    }
                }
            }
        }
        out
    }

    fn render_json(&self) -> String {
        let mut map = Map::new();
        for (k, v) in &self.fields {
            let value = match v {
                Field::Text(s) => Value::String(s.clone()),
                Field::Int(n) => Value::from(*n),
                Field::Flag(b) => Value::Bool(*b),
                Field::List(items) => Value::Array(items.iter().cloned().map(Value::String).collect()),
                Field::Ints(items) => Value::Array(items.iter().map(|&i| Value::from(i)).collect()),
            };
            map.insert(k.clone(), value);
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(map)).expect("serializable");
        s.push('\n');
        s
    }
}
