use crate::args::Format;
use coset_growth::Error;
use serde_json::{Map, Value};

pub const EXIT_OK: u8 = 0;
pub const EXIT_COUNTEREXAMPLE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_OVERFLOW: u8 = 3;

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. } | Error::LatticeOverflow { .. } | Error::ClosureOverflow { .. } => EXIT_OVERFLOW,
        _ => EXIT_USAGE,
    }
}

/// A command's result: one table, plus optional native JSON / DOT forms.
pub struct Report {
    pub verb: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Extra `# ...` lines after the table in TSV.
    pub notes: Vec<String>,
    pub json: Option<Value>,
    pub dot: Option<String>,
    pub failed: bool,
}

impl Report {
    pub fn new(verb: &str, columns: &[&str]) -> Self {
        Report {
            verb: verb.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            notes: Vec::new(),
            json: None,
            dot: None,
            failed: false,
        }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }

    pub fn render(&self, format: Format) -> Result<String, String> {
        let mut out = format!("# cosetgrowth-v1 {}\n", self.verb);
        match format {
            Format::Tsv => {
                out.push_str(&self.columns.join("\t"));
                out.push('\n');
                for r in &self.rows {
                    out.push_str(&r.join("\t"));
                    out.push('\n');
                }
                for n in &self.notes {
                    out.push_str("# ");
                    out.push_str(n);
                    out.push('\n');
                }
            }
            Format::Json => {
                let v = self.json.clone().unwrap_or_else(|| {
                    Value::Array(
                        self.rows
                            .iter()
                            .map(|r| {
                                let m: Map<String, Value> = self
                                    .columns
                                    .iter()
                                    .zip(r)
                                    .map(|(c, x)| (c.clone(), Value::String(x.clone())))
                                    .collect();
                                Value::Object(m)
                            })
                            .collect(),
                    )
                });
                out.push_str(&serde_json::to_string_pretty(&v).expect("json"));
                out.push('\n');
            }
            Format::Dot => match &self.dot {
                Some(d) => out.push_str(d),
                None => return Err(format!("`{}` has no dot output", self.verb)),
            },
        }
        Ok(out)
    }
}
