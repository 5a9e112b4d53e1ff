//! Text grammar for monomials and monomial ideals.
//!
//! A monomial is a `*`-separated product of `name` or `name^k` factors, or
//! the literal `1`. An ideal is a comma separated list of monomials; the
//! literal `0` alone denotes the zero ideal.
//!
//! ```
//! use relcm::{parse, RingSpec};
//! let ring = RingSpec::parse("x1,x2,y1,y2", 32003).unwrap();
//! let i = parse::parse_ideal(&ring, "x1*x2, x2*y1, y1*y2, y2*x1").unwrap();
//! assert_eq!(parse::format_ideal(&ring, &i), "x1*x2, x1*y2, x2*y1, y1*y2");
//! ```

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::ring::RingSpec;

fn parse_error(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

/// Parses one monomial occupying `text`, reporting positions relative to
/// `offset`.
fn parse_monomial_at(ring: &RingSpec, text: &str, offset: usize) -> Result<Monomial> {
    let mut exps = vec![0u32; ring.n()];
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(parse_error(offset, "empty monomial"));
    }
    let mut pos = offset;
    for factor in text.split('*') {
        let lead = factor.len() - factor.trim_start().len();
        let body = factor.trim();
        let start = pos + lead;
        pos += factor.len() + 1;
        if body.is_empty() {
            return Err(parse_error(start, "empty factor"));
        }
        if body == "1" {
            continue;
        }
        let (name, power) = match body.split_once('^') {
            Some((name, k)) => {
                let k_pos = start + name.len() + 1;
                let k: u32 = k
                    .trim()
                    .parse()
                    .map_err(|_| parse_error(k_pos, format!("invalid exponent `{}`", k.trim())))?;
                (name.trim(), k)
            }
            None => (body, 1),
        };
        let j = ring
            .index_of(name)
            .ok_or_else(|| parse_error(start, format!("unknown variable `{name}`")))?;
        exps[j] += power;
    }
    Ok(Monomial::new(exps))
}

pub fn parse_monomial(ring: &RingSpec, text: &str) -> Result<Monomial> {
    parse_monomial_at(ring, text, 0)
}

pub fn parse_ideal(ring: &RingSpec, text: &str) -> Result<MonomialIdeal> {
    if text.trim() == "0" {
        return Ok(MonomialIdeal::zero(ring.n()));
    }
    let mut gens = Vec::new();
    let mut pos = 0;
    for item in text.split(',') {
        if item.trim() == "0" {
            let lead = item.len() - item.trim_start().len();
            return Err(parse_error(pos + lead, "`0` must stand alone"));
        }
        gens.push(parse_monomial_at(ring, item, pos)?);
        pos += item.len() + 1;
    }
    MonomialIdeal::minimal_generators(ring.n(), gens)
}

pub fn format_monomial(ring: &RingSpec, m: &Monomial) -> String {
    let factors: Vec<String> = m
        .exps()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(j, &e)| match e {
            1 => ring.names()[j].clone(),
            _ => format!("{}^{}", ring.names()[j], e),
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

pub fn format_ideal(ring: &RingSpec, ideal: &MonomialIdeal) -> String {
    if ideal.is_zero() {
        return "0".to_string();
    }
    ideal
        .gens()
        .iter()
        .map(|g| format_monomial(ring, g))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Generators as individual strings, used by JSON reports.
pub fn ideal_strings(ring: &RingSpec, ideal: &MonomialIdeal) -> Vec<String> {
    ideal.gens().iter().map(|g| format_monomial(ring, g)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring() -> RingSpec {
        RingSpec::parse("x,y,z", 32003).unwrap()
    }

    #[test]
    fn parses_products_and_powers() {
        let m = parse_monomial(&ring(), "x^2 * y*x").unwrap();
        assert_eq!(m.exps(), &[3, 1, 0]);
        assert!(parse_monomial(&ring(), "1").unwrap().is_one());
    }

    #[test]
    fn special_ideals() {
        assert!(parse_ideal(&ring(), " 0 ").unwrap().is_zero());
        assert!(parse_ideal(&ring(), "1").unwrap().is_unit());
        assert!(parse_ideal(&ring(), "x, 1").unwrap().is_unit());
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_ideal(&ring(), "x, w"),
            Err(Error::Parse {
                pos: 3,
                msg: "unknown variable `w`".into()
            })
        );
        assert!(matches!(parse_ideal(&ring(), "x^a"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_ideal(&ring(), "x,,y"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_ideal(&ring(), "x**y"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_ideal(&ring(), "x, 0"), Err(Error::Parse { pos: 3, .. })));
        assert!(parse_ideal(&ring(), "").is_err());
    }

    proptest! {
        #[test]
        fn printed_ideals_reparse(gens in prop::collection::vec(prop::collection::vec(0u32..4, 3), 0..5)) {
            let ring = ring();
            let ideal = MonomialIdeal::minimal_generators(3, gens.into_iter().map(Monomial::new)).unwrap();
            let text = format_ideal(&ring, &ideal);
            prop_assert_eq!(parse_ideal(&ring, &text).unwrap(), ideal);
        }
    }
}
