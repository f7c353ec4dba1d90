//! Tabular reports with a metadata header, rendered as CSV or JSON.
//!
//! Floats go to CSV in `{:.16e}` (17 significant digits, round-trips
//! exactly) and to JSON as shortest round-trip numbers. Nothing in a report
//! depends on time or environment, so equal inputs give equal bytes.

use std::fmt;
use std::io;

use serde_json::{Map, Number, Value as Json};

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Float(f64),
    Int(i64),
    Bool(bool),
    Text(String),
    Missing,
}

impl Value {
    fn to_json(&self) -> Json {
        match self {
            Value::Float(x) => Number::from_f64(*x).map_or(Json::Null, Json::Number),
            Value::Int(i) => Json::from(*i),
            Value::Bool(b) => Json::Bool(*b),
            Value::Text(s) => Json::String(s.clone()),
            Value::Missing => Json::Null,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Float(x) if x.is_finite() => write!(f, "{x:.16e}"),
            Value::Float(x) => write!(f, "{x}"),
            Value::Int(i) => write!(f, "{i}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Text(s) => f.write_str(s),
            Value::Missing => Ok(()),
        }
    }
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Float(x)
    }
}

impl From<Option<f64>> for Value {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Value::Missing, Value::Float)
    }
}

impl From<usize> for Value {
    fn from(i: usize) -> Self {
        Value::Int(i as i64)
    }
}

impl From<i64> for Value {
    fn from(i: i64) -> Self {
        Value::Int(i)
    }
}

impl From<i32> for Value {
    fn from(i: i32) -> Self {
        Value::Int(i as i64)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_owned())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    meta: Vec<(String, Value)>,
    columns: Vec<&'static str>,
    rows: Vec<Vec<Value>>,
}

impl Report {
    /// Starts a report with the standard header block for `command`.
    pub fn new(command: &str, columns: &[&'static str]) -> Self {
        let mut r = Report {
            meta: Vec::new(),
            columns: columns.to_vec(),
            rows: Vec::new(),
        };
        r.meta("tool", "ncst");
        r.meta("version", env!("CARGO_PKG_VERSION"));
        r.meta("command", command);
        r.meta(
            "conventions",
            "hbar = c = 1; r = 1 unless set; well on [0, delta]; lattice boundary odd_image unless set",
        );
        r
    }

    pub fn meta(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.meta.push((key.to_owned(), value.into()));
        self
    }

    pub fn push(&mut self, row: Vec<Value>) {
        assert_eq!(
            row.len(),
            self.columns.len(),
            "row width must match the column count"
        );
        self.rows.push(row);
    }

    pub fn columns(&self) -> &[&'static str] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<Value>] {
        &self.rows
    }

    pub fn meta_value(&self, key: &str) -> Option<&Value> {
        self.meta.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn render(&self, format: Format) -> io::Result<Vec<u8>> {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    fn to_csv(&self) -> io::Result<Vec<u8>> {
        let mut out = Vec::new();
        for (k, v) in &self.meta {
            out.extend_from_slice(format!("# {k}: {v}\n").as_bytes());
        }
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|v| v.to_string()))?;
        }
        w.into_inner().map_err(|e| e.into_error())
    }

    fn to_json(&self) -> io::Result<Vec<u8>> {
        let meta: Map<String, Json> = self
            .meta
            .iter()
            .map(|(k, v)| (k.clone(), v.to_json()))
            .collect();
        let rows: Vec<Json> = self
            .rows
            .iter()
            .map(|row| {
                Json::Object(
                    self.columns
                        .iter()
                        .zip(row)
                        .map(|(c, v)| ((*c).to_owned(), v.to_json()))
                        .collect(),
                )
            })
            .collect();
        let mut doc = Map::new();
        doc.insert("meta".into(), Json::Object(meta));
        doc.insert("rows".into(), Json::Array(rows));
        let mut out = serde_json::to_vec_pretty(&Json::Object(doc))?;
        out.push(b'\n');
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("demo", &["n", "x", "label", "gap"]);
        r.meta("ell", 0.1);
        r.push(vec![
            1usize.into(),
            0.1.into(),
            "a,b".into(),
            Value::Missing,
        ]);
        r.push(vec![
            2usize.into(),
            (1.0 / 3.0).into(),
            "c".into(),
            f64::NAN.into(),
        ]);
        r
    }

    #[test]
    fn csv_layout() {
        let text = String::from_utf8(sample().render(Format::Csv).unwrap()).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "# tool: ncst");
        assert!(lines.contains(&"# ell: 1.0000000000000001e-1"));
        assert_eq!(lines[5], "n,x,label,gap");
        assert_eq!(lines[6], "1,1.0000000000000001e-1,\"a,b\",");
        assert_eq!(lines[7], "2,3.3333333333333331e-1,c,NaN");
    }

    #[test]
    fn csv_floats_round_trip() {
        for x in [0.1, 1.0 / 3.0, 509.930_223_345_551_95, 1e-300, -2.5e17] {
            let s = Value::Float(x).to_string();
            assert_eq!(s.parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn json_layout() {
        let doc: Json = serde_json::from_slice(&sample().render(Format::Json).unwrap()).unwrap();
        assert_eq!(doc["meta"]["command"], "demo");
        assert_eq!(doc["rows"][0]["x"], 0.1);
        assert_eq!(doc["rows"][0]["gap"], Json::Null);
        assert_eq!(doc["rows"][1]["gap"], Json::Null);
        let keys: Vec<&String> = doc["rows"][0].as_object().unwrap().keys().collect();
        assert_eq!(keys, ["n", "x", "label", "gap"]);
    }
}
