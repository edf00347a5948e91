//! Table builders and encoders behind the `gravibounce` command-line tool.
//!
//! Every command produces a [`Table`] of SI values (energies also in peV).
//! Machine output writes floats in scientific notation with 12 significant
//! digits; JSON carries exactly the numbers the CSV text spells out.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{Map, Number, Value};

use crate::airy::{airy_zero, bs_zero};
use crate::bouncer::{eigenstate, scales};
use crate::constants::{PhysicalConstants, ELECTRONVOLT};
use crate::emission::{lifetime, transition};
use crate::error::{Error, Result};
use crate::quadrupole::{element_closed, element_quadrature, QUADRATURE_MAX_INDEX};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Zeros,
    Levels,
    QMatrix,
    Rates,
    Lifetimes,
}

impl Command {
    pub const ALL: [Command; 5] =
        [Command::Zeros, Command::Levels, Command::QMatrix, Command::Rates, Command::Lifetimes];

    pub fn name(self) -> &'static str {
        match self {
            Command::Zeros => "zeros",
            Command::Levels => "levels",
            Command::QMatrix => "qmatrix",
            Command::Rates => "rates",
            Command::Lifetimes => "lifetimes",
        }
    }

    pub fn columns(self) -> &'static [&'static str] {
        match self {
            Command::Zeros => &["n", "lambda", "lambda_bs", "bs_rel_error"],
            Command::Levels => &["n", "lambda", "energy_J", "energy_peV", "norm_const_per_sqrt_m"],
            Command::QMatrix => &["k", "n", "elem_closed", "elem_quadrature", "rel_diff"],
            Command::Rates => {
                &["k", "n", "omega_rad_per_s", "gamma_per_s", "quadrupole_ratio", "valid"]
            }
            Command::Lifetimes => &["n", "total_gamma_per_s", "dominant_final_state"],
        }
    }

    /// Largest accepted `--count`/`--max`.
    pub fn max_size(self) -> u64 {
        match self {
            Command::Zeros | Command::Levels => 10_000,
            Command::QMatrix => QUADRATURE_MAX_INDEX,
            Command::Rates | Command::Lifetimes => 1_000,
        }
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown command `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::Usage(format!("unknown format `{s}` (expected csv or json)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Int(u64),
    Float(f64),
    Bool(bool),
    Absent,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: &'static [&'static str],
    pub rows: Vec<Vec<Cell>>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Options {
    pub size: u64,
    pub threshold: f64,
    pub format: Format,
    pub pretty: bool,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            size: 10,
            threshold: crate::emission::DEFAULT_VALIDITY_THRESHOLD,
            format: Format::Csv,
            pretty: false,
        }
    }
}

fn check_size(command: Command, size: u64) -> Result<()> {
    if size == 0 || size > command.max_size() {
        return Err(Error::Usage(format!(
            "{} takes a size between 1 and {}, got {size}",
            command.name(),
            command.max_size()
        )));
    }
    Ok(())
}

pub fn build_table(
    command: Command,
    size: u64,
    threshold: f64,
    constants: &PhysicalConstants,
) -> Result<Table> {
    check_size(command, size)?;
    if threshold.is_nan() || threshold < 0.0 {
        return Err(Error::Usage(format!("threshold must be non-negative, got {threshold}")));
    }
    let sc = scales(constants);
    let mut rows = Vec::new();
    match command {
        Command::Zeros => {
            for n in 1..=size {
                let lambda = airy_zero(n)?.lambda;
                let bs = bs_zero(n)?;
                rows.push(vec![
                    Cell::Int(n),
                    Cell::Float(lambda),
                    Cell::Float(bs),
                    Cell::Float((bs - lambda).abs() / lambda),
                ]);
            }
        }
        Command::Levels => {
            for n in 1..=size {
                let st = eigenstate(n, &sc)?;
                rows.push(vec![
                    Cell::Int(n),
                    Cell::Float(st.lambda),
                    Cell::Float(st.energy),
                    Cell::Float(st.energy / ELECTRONVOLT * 1e12),
                    Cell::Float(st.norm_const),
                ]);
            }
        }
        Command::QMatrix => {
            for k in 1..=size {
                let diag = element_quadrature(k, k, &sc)?;
                rows.push(vec![
                    Cell::Int(k),
                    Cell::Int(k),
                    Cell::Absent,
                    Cell::Float(diag.dimensionless),
                    Cell::Absent,
                ]);
                for n in k + 1..=size {
                    let closed = element_closed(k, n, &sc)?.dimensionless;
                    let quad = element_quadrature(k, n, &sc)?.dimensionless;
                    rows.push(vec![
                        Cell::Int(k),
                        Cell::Int(n),
                        Cell::Float(closed),
                        Cell::Float(quad),
                        Cell::Float((closed - quad).abs() / closed.abs()),
                    ]);
                }
            }
        }
        Command::Rates => {
            for k in 2..=size {
                for n in 1..k {
                    let t = transition(k, n, &sc, constants, threshold)?;
                    rows.push(vec![
                        Cell::Int(k),
                        Cell::Int(n),
                        Cell::Float(t.omega),
                        Cell::Float(t.gamma),
                        Cell::Float(t.quadrupole_ratio),
                        Cell::Bool(t.valid),
                    ]);
                }
            }
        }
        Command::Lifetimes => {
            for n in 1..=size {
                let life = lifetime(n, &sc, constants, threshold)?;
                rows.push(vec![
                    Cell::Int(n),
                    Cell::Float(life.total_rate),
                    life.dominant_final_state().map_or(Cell::Absent, Cell::Int),
                ]);
            }
        }
    }
    Ok(Table { columns: command.columns(), rows })
}

/// Machine format: 12 significant digits. Pretty format: 3 significant
/// digits, fixed-point for moderate magnitudes.
pub fn format_float(value: f64, pretty: bool) -> String {
    if !value.is_finite() {
        return String::new();
    }
    if !pretty {
        return format!("{value:.11e}");
    }
    let mag = value.abs();
    if value == 0.0 {
        "0".to_string()
    } else if (1e-3..1e4).contains(&mag) {
        let decimals = (2 - mag.log10().floor() as i32).max(0) as usize;
        format!("{value:.decimals$}")
    } else {
        format!("{value:.2e}")
    }
}

impl Cell {
    fn text(&self, pretty: bool) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Float(f) => format_float(*f, pretty),
            Cell::Bool(b) => b.to_string(),
            Cell::Absent => String::new(),
        }
    }

    fn json(&self, pretty: bool) -> Value {
        match self {
            Cell::Int(i) => Value::from(*i),
            Cell::Float(f) => {
                let rounded: f64 = format_float(*f, pretty).parse().unwrap_or(f64::NAN);
                Number::from_f64(rounded).map_or(Value::Null, Value::Number)
            }
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Absent => Value::Null,
        }
    }
}

impl Table {
    /// Comma-separated, header first, LF line endings.
    pub fn to_csv(&self, pretty: bool) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|c| c.text(pretty)).collect();
            writeln!(out, "{}", line.join(",")).unwrap();
        }
        out
    }

    /// Array of row objects with keys in column order.
    pub fn to_json(&self, pretty: bool) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(name, cell)| ((*name).to_string(), cell.json(pretty)))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut text = if pretty {
            serde_json::to_string_pretty(&rows)
        } else {
            serde_json::to_string(&rows)
        }
        .expect("JSON values are always serialisable");
        text.push('\n');
        text
    }

    pub fn render(&self, format: Format, pretty: bool) -> String {
        match format {
            Format::Csv => self.to_csv(pretty),
            Format::Json => self.to_json(pretty),
        }
    }
}

/// Builds and encodes one command's output.
pub fn run(command: Command, options: &Options, constants: &PhysicalConstants) -> Result<String> {
    let table = build_table(command, options.size, options.threshold, constants)?;
    Ok(table.render(options.format, options.pretty))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::default_constants;

    fn floats(table: &Table, col: &str) -> Vec<f64> {
        let idx = table.columns.iter().position(|c| *c == col).unwrap();
        table
            .rows
            .iter()
            .filter_map(|r| match r[idx] {
                Cell::Float(f) => Some(f),
                _ => None,
            })
            .collect()
    }

    #[test]
    fn size_limits() {
        let c = default_constants();
        for cmd in Command::ALL {
            assert!(matches!(build_table(cmd, 0, 0.1, &c), Err(Error::Usage(_))));
            assert!(matches!(build_table(cmd, cmd.max_size() + 1, 0.1, &c), Err(Error::Usage(_))));
        }
        assert!(build_table(Command::Rates, 3, -1.0, &c).is_err());
    }

    #[test]
    fn zeros_table() {
        let t = build_table(Command::Zeros, 2, 0.1, &default_constants()).unwrap();
        let lambda = floats(&t, "lambda");
        assert_eq!(((lambda[1] - lambda[0]) * 100.0).round() / 100.0, 1.75);
        assert!(floats(&t, "bs_rel_error")[0] < 0.01);
        let csv = t.to_csv(false);
        assert!(csv.starts_with("n,lambda,lambda_bs,bs_rel_error\n1,2.33810741046e0,"));
    }

    #[test]
    fn levels_table() {
        let t = build_table(Command::Levels, 6, 0.1, &default_constants()).unwrap();
        let e = floats(&t, "energy_J");
        let pev = floats(&t, "energy_peV");
        assert!((pev[0] - 1.41).abs() < 0.005);
        assert!(e.windows(2).all(|w| w[1] > w[0]));
        for (j, p) in e.iter().zip(&pev) {
            assert!((j / ELECTRONVOLT * 1e12 - p).abs() <= 1e-12 * p);
        }
        assert_eq!(
            t.to_csv(false).lines().next().unwrap(),
            "n,lambda,energy_J,energy_peV,norm_const_per_sqrt_m"
        );
    }

    #[test]
    fn qmatrix_table() {
        let c = default_constants();
        let single = build_table(Command::QMatrix, 1, 0.1, &c).unwrap();
        assert_eq!(single.rows.len(), 1);
        assert_eq!(single.rows[0][2], Cell::Absent);

        let t = build_table(Command::QMatrix, 5, 0.1, &c).unwrap();
        let first_row: Vec<f64> = t
            .rows
            .iter()
            .filter(|r| r[0] == Cell::Int(1) && r[1] != Cell::Int(1))
            .map(|r| match r[2] {
                Cell::Float(f) => f,
                _ => panic!(),
            })
            .collect();
        assert_eq!(first_row.len(), 4);
        assert!(first_row.windows(2).all(|w| w[0].signum() == -w[1].signum()));
        assert!(floats(&t, "rel_diff").iter().all(|d| *d <= 1e-6));
        let csv = t.to_csv(false);
        assert!(csv.contains("\n1,1,,"), "{csv}");
    }

    #[test]
    fn rates_and_lifetimes() {
        let c = default_constants();
        let t = build_table(Command::Rates, 4, 0.1, &c).unwrap();
        assert_eq!(t.rows[0][0], Cell::Int(2));
        assert_eq!(t.rows[0][1], Cell::Int(1));
        let g21 = floats(&t, "gamma_per_s")[0];
        assert!(g21 > 5e-78 && g21 < 2e-77);
        let life = build_table(Command::Lifetimes, 3, 0.1, &c).unwrap();
        assert_eq!(life.rows[0], vec![Cell::Int(1), Cell::Float(0.0), Cell::Absent]);
        assert_eq!(life.rows[2][2], Cell::Int(2));
    }

    #[test]
    fn pretty_numbers() {
        assert_eq!(format_float(5.868e-6 * 1e6, true), "5.87");
        assert_eq!(format_float(0.6017855, true), "0.602");
        assert_eq!(format_float(1.0613e-77, true), "1.06e-77");
        assert_eq!(format_float(1599.83, true), "1600");
        assert_eq!(format_float(2.338107410459767, false), "2.33810741046e0");
    }

    #[test]
    fn command_and_format_parsing() {
        assert_eq!("qmatrix".parse::<Command>().unwrap(), Command::QMatrix);
        assert!("bogus".parse::<Command>().is_err());
        assert_eq!("json".parse::<Format>().unwrap(), Format::Json);
        assert!("xml".parse::<Format>().is_err());
    }
}
