//! One report per query, rendered as a key/value line, a pretty block or JSON.

use serde_json::{json, Map};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Text(String),
    List(Vec<String>),
}

impl Value {
    fn flat(&self) -> String {
        match self {
            Value::Text(s) => s.clone(),
            Value::List(v) => format!("[{}]", v.join(", ")),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Value::Text(s) => json!(s),
            Value::List(v) => json!(v),
        }
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Text(b.to_string())
    }
}

impl From<usize> for Value {
    fn from(n: usize) -> Self {
        Value::Text(n.to_string())
    }
}

impl<T: ToString> From<Vec<T>> for Value {
    fn from(v: Vec<T>) -> Self {
        Value::List(v.iter().map(ToString::to_string).collect())
    }
}

/// Where an error was found: the argument (1-based) and a line/column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Location {
    pub arg: usize,
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub code: String,
    pub message: String,
    pub location: Option<Location>,
    pub exit: i32,
}

impl Failure {
    pub fn usage(code: &str, message: impl Into<String>) -> Self {
        Failure {
            code: code.to_string(),
            message: message.into(),
            location: None,
            exit: 2,
        }
    }
}

impl From<uctk_core::error::Error> for Failure {
    fn from(e: uctk_core::error::Error) -> Self {
        Failure {
            code: e.code().to_string(),
            message: e.to_string(),
            location: None,
            exit: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub op: String,
    pub input: String,
    pub fields: Vec<(String, Value)>,
    pub failure: Option<Failure>,
    /// `Some(false)` for a negative verdict of a predicate command.
    pub verdict: Option<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        match (&self.failure, self.verdict) {
            (Some(f), _) => f.exit,
            (None, Some(false)) => 1,
            _ => 0,
        }
    }

    fn status(&self) -> &'static str {
        if self.failure.is_some() {
            "error"
        } else {
            "ok"
        }
    }

    fn pairs(&self) -> Vec<(String, Value)> {
        let mut out = vec![("status".to_string(), Value::from(self.status()))];
        match &self.failure {
            None => out.extend(self.fields.iter().cloned()),
            Some(f) => {
                out.push(("code".into(), f.code.as_str().into()));
                if let Some(l) = f.location {
                    out.push(("arg".into(), l.arg.into()));
                    out.push(("at".into(), format!("{}:{}", l.line, l.col).into()));
                }
                out.push(("message".into(), f.message.as_str().into()));
            }
        }
        out
    }

    pub fn render(&self, format: Format, pretty: bool) -> String {
        match (format, pretty) {
            (Format::Structured, false) => self.json().to_string(),
            (Format::Structured, true) => serde_json::to_string_pretty(&self.json()).expect("json"),
            (Format::Text, false) => self.line(),
            (Format::Text, true) => self.table(),
        }
    }

    fn line(&self) -> String {
        let mut parts = vec![format!("op={}", quote(&self.op))];
        for (k, v) in self.pairs() {
            parts.push(format!("{k}={}", quote(&v.flat())));
        }
        parts.push(format!("input={}", quote(&self.input)));
        parts.join(" ")
    }

    fn table(&self) -> String {
        let pairs = self.pairs();
        let width = pairs.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        let mut out = format!("{} {}", self.op, self.input);
        for (k, v) in pairs {
            match v {
                Value::Text(s) => out.push_str(&format!("\n  {k:width$}  {s}")),
                Value::List(items) if items.is_empty() => {
                    out.push_str(&format!("\n  {k:width$}  (none)"))
                }
                Value::List(items) => {
                    out.push_str(&format!("\n  {k:width$}  {}", items[0]));
                    for x in &items[1..] {
                        out.push_str(&format!("\n  {:width$}  {x}", ""));
                    }
                }
            }
        }
        out
    }

    fn json(&self) -> serde_json::Value {
        let mut m = Map::new();
        m.insert("op".into(), json!(self.op));
        m.insert("input".into(), json!(self.input));
        m.insert("status".into(), json!(self.status()));
        match &self.failure {
            None => {
                let fields: Map<String, serde_json::Value> =
                    self.fields.iter().map(|(k, v)| (k.clone(), v.json())).collect();
                m.insert("result".into(), serde_json::Value::Object(fields));
            }
            Some(f) => {
                let mut e = Map::new();
                e.insert("code".into(), json!(f.code));
                e.insert("message".into(), json!(f.message));
                if let Some(l) = f.location {
                    e.insert("location".into(), json!({"arg": l.arg, "line": l.line, "col": l.col}));
                }
                m.insert("error".into(), serde_json::Value::Object(e));
            }
        }
        serde_json::Value::Object(m)
    }
}

/// Double-quotes a value that is empty or holds whitespace or quotes.
pub fn quote(s: &str) -> String {
    if !s.is_empty() && !s.chars().any(|c| c.is_whitespace() || c == '"' || c == '\\') {
        return s.to_string();
    }
    let mut out = String::from("\"");
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        Report {
            op: "seed".into(),
            input: "{(0) (0 0)} ()".into(),
            fields: vec![("result".into(), "u3".into()), ("list".into(), vec!["a b", "c"].into())],
            failure: None,
            verdict: None,
        }
    }

    #[test]
    fn line_form() {
        assert_eq!(
            sample().line(),
            "op=seed status=ok result=u3 list=\"[a b, c]\" input=\"{(0) (0 0)} ()\""
        );
        assert_eq!(quote(""), "\"\"");
        assert_eq!(quote("a\"b"), "\"a\\\"b\"");
    }

    #[test]
    fn json_form() {
        let v = sample().json();
        assert_eq!(v["result"]["list"][0], "a b");
        assert_eq!(v["status"], "ok");
    }

    #[test]
    fn exit_codes() {
        let mut r = sample();
        assert_eq!(r.exit_code(), 0);
        r.verdict = Some(false);
        assert_eq!(r.exit_code(), 1);
        r.failure = Some(Failure::usage("E_ARITY", "x"));
        assert_eq!(r.exit_code(), 2);
        assert!(r.table().contains("E_ARITY"));
    }
}
