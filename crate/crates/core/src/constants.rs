//! Physical constants in SI units and the derived Planck mass.
//!
//! A constants file is plain UTF-8 text with one `key = value` pair per line.
//! Recognised keys are `hbar`, `c`, `G`, `m` and `g`; `#` starts a comment.
//! Keys that are not given keep their default value.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};

pub const HBAR: f64 = 1.054571817e-34;
pub const SPEED_OF_LIGHT: f64 = 2.99792458e8;
pub const NEWTON_G: f64 = 6.67430e-11;
pub const NEUTRON_MASS: f64 = 1.67492750e-27;
/// Reproduces the customary 5.87 µm / 0.60 peV bouncer scales.
pub const GRAVITY: f64 = 9.81;

/// One electronvolt in joules.
pub const ELECTRONVOLT: f64 = 1.602176634e-19;

const KEYS: [&str; 5] = ["hbar", "c", "G", "m", "g"];

/// Immutable set of SI constants. The Planck mass is always derived from
/// `hbar`, `c` and `G`, never stored independently.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    hbar: f64,
    c: f64,
    newton_g: f64,
    mass: f64,
    gravity: f64,
    planck_mass: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        default_constants()
    }
}

pub fn default_constants() -> PhysicalConstants {
    PhysicalConstants::new(HBAR, SPEED_OF_LIGHT, NEWTON_G, NEUTRON_MASS, GRAVITY)
        .expect("built-in constants are valid")
}

impl PhysicalConstants {
    pub fn new(hbar: f64, c: f64, newton_g: f64, mass: f64, gravity: f64) -> Result<Self> {
        for (key, value) in KEYS.iter().zip([hbar, c, newton_g, mass, gravity]) {
            if !value.is_finite() || value <= 0.0 {
                return Err(Error::ConfigValue {
                    key: (*key).to_string(),
                    msg: format!("must be finite and strictly positive, got {value}"),
                });
            }
        }
        let planck_mass = (hbar * c / newton_g).sqrt();
        if mass / planck_mass >= 1.0 {
            return Err(Error::ConfigValue {
                key: "m".to_string(),
                msg: format!("mass {mass} kg is not below the Planck mass {planck_mass} kg"),
            });
        }
        Ok(Self { hbar, c, newton_g, mass, gravity, planck_mass })
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn newton_g(&self) -> f64 {
        self.newton_g
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn gravity(&self) -> f64 {
        self.gravity
    }

    /// sqrt(ħc/G), the conventional (non-reduced) Planck mass.
    pub fn planck_mass(&self) -> f64 {
        self.planck_mass
    }

    pub fn with_hbar(&self, hbar: f64) -> Result<Self> {
        Self::new(hbar, self.c, self.newton_g, self.mass, self.gravity)
    }

    pub fn with_c(&self, c: f64) -> Result<Self> {
        Self::new(self.hbar, c, self.newton_g, self.mass, self.gravity)
    }

    pub fn with_newton_g(&self, newton_g: f64) -> Result<Self> {
        Self::new(self.hbar, self.c, newton_g, self.mass, self.gravity)
    }

    pub fn with_mass(&self, mass: f64) -> Result<Self> {
        Self::new(self.hbar, self.c, self.newton_g, mass, self.gravity)
    }

    pub fn with_gravity(&self, gravity: f64) -> Result<Self> {
        Self::new(self.hbar, self.c, self.newton_g, self.mass, gravity)
    }

    /// Renders the five inputs in the constants-file format. Values use the
    /// shortest representation that parses back to the identical `f64`.
    pub fn to_config_string(&self) -> String {
        let mut out = String::new();
        for (key, value) in KEYS.iter().zip(self.inputs()) {
            writeln!(out, "{key} = {value:e}").unwrap();
        }
        out
    }

    fn inputs(&self) -> [f64; 5] {
        [self.hbar, self.c, self.newton_g, self.mass, self.gravity]
    }
}

/// Parses constants-file text, overriding defaults with whatever keys appear.
pub fn parse_constants(text: &str) -> Result<PhysicalConstants> {
    let mut values = default_constants().inputs();
    let mut seen = [false; 5];

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| Error::ConfigParse {
            line: line_no,
            msg: format!("expected `key = value`, found `{line}`"),
        })?;
        let key = key.trim();
        let slot = KEYS.iter().position(|k| *k == key).ok_or_else(|| Error::ConfigParse {
            line: line_no,
            msg: format!("unknown key `{key}` (expected one of hbar, c, G, m, g)"),
        })?;
        if seen[slot] {
            return Err(Error::ConfigParse { line: line_no, msg: format!("duplicate key `{key}`") });
        }
        let value = value.trim();
        values[slot] = value.parse::<f64>().map_err(|e| Error::ConfigParse {
            line: line_no,
            msg: format!("cannot parse `{value}` as a number for `{key}`: {e}"),
        })?;
        seen[slot] = true;
    }

    let [hbar, c, newton_g, mass, gravity] = values;
    PhysicalConstants::new(hbar, c, newton_g, mass, gravity)
}

pub fn load_constants(path: impl AsRef<Path>) -> Result<PhysicalConstants> {
    let text = std::fs::read_to_string(path)?;
    parse_constants(&text)
}
