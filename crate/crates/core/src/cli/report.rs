//! Tabular reports rendered as CSV, JSON or plot-ready TSV.

use std::fmt::Write as _;

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub const SIGNIFICANT_DIGITS: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Plot,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(u64),
    Real(f64),
    Text(String),
    Json(serde_json::Value),
    Empty,
}

impl Cell {
    pub fn text(s: impl Into<String>) -> Cell {
        Cell::Text(s.into())
    }

    pub fn real_or_empty(x: Option<f64>) -> Cell {
        x.map_or(Cell::Empty, Cell::Real)
    }

    fn render(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Real(x) => format_real(*x),
            Cell::Text(s) => s.clone(),
            Cell::Json(v) => v.to_string(),
            Cell::Empty => String::new(),
        }
    }
}

impl From<usize> for Cell {
    fn from(n: usize) -> Cell {
        Cell::Int(n as u64)
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Cell {
        Cell::Real(x)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Cell {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Cell {
        Cell::Text(s)
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Cell::Int(i) => s.serialize_u64(*i),
            // the rounded decimal, so JSON carries the same digits as CSV
            Cell::Real(x) if x.is_finite() => {
                s.serialize_f64(format_real(*x).parse().expect("formatted float parses"))
            }
            Cell::Real(_) | Cell::Empty => s.serialize_none(),
            Cell::Text(t) => s.serialize_str(t),
            Cell::Json(v) => v.serialize(s),
        }
    }
}

/// `%.15g`: 15 significant digits, trailing zeros dropped, exponent form
/// outside `[1e-4, 1e15)`.
pub fn format_real(x: f64) -> String {
    if x.is_nan() {
        return "NaN".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= SIGNIFICANT_DIGITS as i32 {
        let m = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{m}e{sign}{:02}", exp.abs());
    }
    let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// One `(x, y)` series for the plot format.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub name: String,
    pub points: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: &'static str,
    /// Echo of the resolved configuration, in a fixed order.
    pub config: Vec<(&'static str, Cell)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub series: Vec<Series>,
    /// Set when a row records a property failure.
    pub failed: bool,
}

impl Report {
    pub fn new(command: &'static str, columns: Vec<&'static str>) -> Self {
        Report {
            command,
            config: Vec::new(),
            columns,
            rows: Vec::new(),
            series: Vec::new(),
            failed: false,
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| *c == name)
    }

    fn header_lines(&self) -> String {
        let mut out = format!("# {} {}\n", env!("CARGO_PKG_NAME"), env!("CARGO_PKG_VERSION"));
        let _ = write!(out, "# command: {}", self.command);
        for (k, v) in &self.config {
            let _ = write!(out, " {k}={}", v.render());
        }
        out.push('\n');
        out
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).map_err(|e| Error::Io(e.to_string()))?;
                s.push('\n');
                Ok(s)
            }
            Format::Plot => Ok(self.to_plot()),
        }
    }

    fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(&self.columns).map_err(io)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::render)).map_err(io)?;
        }
        let body = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        Ok(self.header_lines() + &String::from_utf8(body).expect("csv output is utf-8"))
    }

    fn to_plot(&self) -> String {
        let mut out = self.header_lines();
        for (i, s) in self.series.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            let _ = writeln!(out, "# series: {}", s.name);
            for (x, y) in &s.points {
                let _ = writeln!(out, "{}\t{}", format_real(*x), format_real(*y));
            }
        }
        out
    }
}

struct Row<'a> {
    columns: &'a [&'static str],
    cells: &'a [Cell],
}

impl Serialize for Row<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.columns.len()))?;
        for (k, v) in self.columns.iter().zip(self.cells) {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

struct Pairs<'a>(&'a [(&'static str, Cell)]);

impl Serialize for Pairs<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

struct Rows<'a>(&'a Report);

impl Serialize for Rows<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.rows.len()))?;
        for cells in &self.0.rows {
            seq.serialize_element(&Row {
                columns: &self.0.columns,
                cells,
            })?;
        }
        seq.end()
    }
}

impl Serialize for Report {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(6))?;
        map.serialize_entry("tool", env!("CARGO_PKG_NAME"))?;
        map.serialize_entry("version", env!("CARGO_PKG_VERSION"))?;
        map.serialize_entry("command", self.command)?;
        map.serialize_entry("config", &Pairs(&self.config))?;
        map.serialize_entry("status", if self.failed { "failure" } else { "ok" })?;
        map.serialize_entry("rows", &Rows(self))?;
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifteen_digits() {
        assert_eq!(format_real(2.0), "2");
        assert_eq!(format_real(2.0581710272714922), "2.05817102727149");
        assert_eq!(format_real(-0.0716), "-0.0716");
        assert_eq!(format_real(1.0 / 3.0), "0.333333333333333");
        assert_eq!(format_real(1.2345e-9), "1.2345e-09");
        assert_eq!(format_real(6.02e23), "6.02e+23");
        assert_eq!(format_real(123456.0), "123456");
        assert_eq!(format_real(0.0001), "0.0001");
        assert_eq!(format_real(0.0000972863953467851), "9.72863953467851e-05");
        assert_eq!(format_real(0.999999999999999999), "1");
        assert_eq!(format_real(f64::NAN), "NaN");
    }

    fn sample() -> Report {
        let mut r = Report::new("demo", vec!["n", "value", "note"]);
        r.config.push(("alpha", Cell::Real(0.5)));
        r.push(vec![1usize.into(), 2.25.into(), Cell::Empty]);
        r.push(vec![Cell::text("limit"), Cell::Real(1.0 / 3.0), "a, b".into()]);
        r.series.push(Series {
            name: "value".to_string(),
            points: vec![(1.0, 2.25)],
        });
        r
    }

    #[test]
    fn csv_and_json_layouts() {
        let csv = sample().render(Format::Csv).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert!(lines[0].starts_with("# hoffman-limits "));
        assert_eq!(lines[1], "# command: demo alpha=0.5");
        assert_eq!(lines[2], "n,value,note");
        assert_eq!(lines[3], "1,2.25,");
        assert_eq!(lines[4], "limit,0.333333333333333,\"a, b\"");

        let json = sample().render(Format::Json).unwrap();
        let keys = ["\"tool\"", "\"version\"", "\"command\"", "\"config\"", "\"status\"", "\"rows\""];
        let at: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
        assert!(at.windows(2).all(|w| w[0] < w[1]));
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["rows"][1]["value"], serde_json::json!(0.333333333333333));
        assert!(v["rows"][0]["note"].is_null());
    }

    #[test]
    fn plot_layout() {
        let plot = sample().render(Format::Plot).unwrap();
        assert!(plot.contains("# series: value\n1\t2.25\n"));
    }
}
