use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::MAX_VARS;

/// Default coefficient characteristic.
pub const DEFAULT_CHAR: u32 = 32003;

/// The ambient polynomial ring: variable names and coefficient characteristic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingSpec {
    names: Vec<String>,
    #[serde(rename = "char")]
    characteristic: u32,
}

impl RingSpec {
    pub fn new<S: AsRef<str>>(names: &[S], characteristic: u32) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidRing("at least one variable is required".into()));
        }
        if names.len() > MAX_VARS {
            return Err(Error::InvalidRing(format!(
                "{} variables exceed the limit of {MAX_VARS}",
                names.len()
            )));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().trim().to_string()).collect();
        for (k, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidRing(format!("`{name}` is not an identifier")));
            }
            if names[..k].contains(name) {
                return Err(Error::InvalidRing(format!("variable `{name}` repeated")));
            }
        }
        if characteristic != 0 && !is_prime(characteristic) {
            return Err(Error::NotPrime(characteristic));
        }
        if characteristic >= 1 << 31 {
            return Err(Error::InvalidRing(format!(
                "characteristic {characteristic} must be below 2^31"
            )));
        }
        Ok(RingSpec { names, characteristic })
    }

    /// Ring on `x1, ..., xn` over the default characteristic.
    pub fn standard(n: usize) -> Result<Self> {
        let names: Vec<String> = (1..=n).map(|k| format!("x{k}")).collect();
        RingSpec::new(&names, DEFAULT_CHAR)
    }

    /// Parses a comma separated list of variable names.
    pub fn parse(names: &str, characteristic: u32) -> Result<Self> {
        let names: Vec<&str> = names.split(',').collect();
        RingSpec::new(&names, characteristic)
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
