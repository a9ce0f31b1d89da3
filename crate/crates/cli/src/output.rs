//! Tabular records and their CSV / JSON serialization.

use std::io::{self, Write};

use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Schema {
    Eval,
    Bounds,
    Series,
    Oracle,
    Verify,
    Limit,
    Constant,
    Pstar,
}

impl Schema {
    pub fn name(self) -> &'static str {
        match self {
            Schema::Eval => "eval_row",
            Schema::Bounds => "bounds_row",
            Schema::Series => "series_row",
            Schema::Oracle => "oracle_row",
            Schema::Verify => "verify_row",
            Schema::Limit => "limit_row",
            Schema::Constant => "constant_row",
            Schema::Pstar => "pstar_row",
        }
    }

    pub fn columns(self) -> &'static [&'static str] {
        match self {
            Schema::Eval => &[
                "p",
                "L",
                "lambda",
                "log_lambda",
                "lambda_prime",
                "lambda_scaled",
                "lambda_scaled_prime",
            ],
            Schema::Bounds => &[
                "p",
                "regime",
                "lower",
                "lambda",
                "upper",
                "lower_margin",
                "upper_margin",
                "global_lower",
                "global_upper",
            ],
            Schema::Series => &["k", "coefficient", "eval_p", "approx", "exact", "abs_error"],
            Schema::Oracle => &[
                "p",
                "tol",
                "lambda_exact",
                "lambda_shooting",
                "shooting_rel_error",
                "residual",
                "bisection_iterations",
                "ode_steps",
                "pi_p_quadrature",
                "pi_p_closed",
                "pi_p_rel_error",
                "passed",
            ],
            Schema::Verify => &[
                "id",
                "source",
                "samples",
                "refined_rounds",
                "min_margin",
                "argmin",
                "passed",
            ],
            Schema::Limit => &["table", "k", "point", "value", "target", "deviation"],
            Schema::Constant => &[
                "name",
                "expression",
                "printed",
                "recomputed",
                "abs_diff",
                "matches",
            ],
            Schema::Pstar => &[
                "L",
                "tol",
                "pstar",
                "lambda",
                "lambda_prime",
                "rel_residual",
            ],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(u64),
    Signed(i64),
    Text(String),
    Bool(bool),
    Empty,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as u64)
    }
}

impl From<i32> for Cell {
    fn from(v: i32) -> Self {
        Cell::Signed(v.into())
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_owned())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Empty, Cell::Num)
    }
}

/// 17 significant digits: fixed notation for `1e-5 <= |v| < 1e16`,
/// scientific otherwise.
pub fn format_number(v: f64) -> String {
    if !v.is_finite() {
        return if v.is_nan() {
            "NaN".into()
        } else if v > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let sci = format!("{v:.16e}");
    if v == 0.0 {
        return format!("{v:.16}");
    }
    // exponent after rounding to 17 digits, so 9.99...96 -> 1.0e1 is handled
    let exp: i32 = sci[sci.find('e').unwrap() + 1..].parse().unwrap();
    if (-5..16).contains(&exp) {
        format!("{v:.*}", (16 - exp) as usize)
    } else {
        sci
    }
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Num(v) => format_number(*v),
            Cell::Int(v) => v.to_string(),
            Cell::Signed(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(v) if v.is_finite() => Value::Number(
                format_number(*v)
                    .parse::<Number>()
                    .expect("formatted float is valid JSON"),
            ),
            Cell::Num(_) | Cell::Empty => Value::Null,
            Cell::Int(v) => Value::from(*v),
            Cell::Signed(v) => Value::from(*v),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Bool(b) => Value::Bool(*b),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Table {
    pub schema: Schema,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(schema: Schema) -> Self {
        Self {
            schema,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(
            row.len(),
            self.schema.columns().len(),
            "{}",
            self.schema.name()
        );
        self.rows.push(row);
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Csv => self.write_csv(out),
            Format::Json => self.write_json(out),
        }
    }

    fn write_csv(&self, out: &mut impl Write) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(self.schema.columns())?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::text))?;
        }
        w.flush()
    }

    fn write_json(&self, out: &mut impl Write) -> io::Result<()> {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .schema
                    .columns()
                    .iter()
                    .zip(row)
                    .map(|(k, c)| (k.to_string(), c.json()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut doc = Map::new();
        doc.insert("schema".into(), self.schema.name().into());
        doc.insert("rows".into(), Value::Array(rows));
        serde_json::to_writer_pretty(&mut *out, &Value::Object(doc))?;
        writeln!(out)
    }
}
