//! Exact integer and rational arithmetic used throughout the crate.
//!
//! Every value the library computes is an arbitrary-precision integer or a
//! reduced fraction; floating point appears only inside the SVG emitter, at
//! serialization time.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Shorthand for an exact integer.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Shorthand for an exact fraction `n/d`. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(int(n), int(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(int(n))
}

/// Renders a rational as `p/q`, eliding the denominator when it is 1.
pub fn rat_str(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p/q` or a bare integer `p` into a reduced rational.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let trimmed = text.trim();
    let parse_int = |part: &str, pos: usize| -> Result<Int> {
        part.trim().parse::<Int>().map_err(|_| Error::Parse {
            pos,
            msg: format!("expected an integer, found {:?}", part.trim()),
        })
    };
    match trimmed.find('/') {
        None => Ok(Rat::from_integer(parse_int(trimmed, 0)?)),
        Some(idx) => {
            let numer = parse_int(&trimmed[..idx], 0)?;
            let denom = parse_int(&trimmed[idx + 1..], idx + 1)?;
            if denom.is_zero() {
                return Err(Error::Parse {
                    pos: idx + 1,
                    msg: "denominator must be nonzero".into(),
                });
            }
            Ok(Rat::new(numer, denom))
        }
    }
}

/// Floor of a rational as an integer.
pub fn rat_floor(r: &Rat) -> Int {
    r.floor().to_integer()
}

/// Ceiling of a rational as an integer.
pub fn rat_ceil(r: &Rat) -> Int {
    r.ceil().to_integer()
}

/// Normalizes an integer coefficient vector: divides by the gcd and flips
/// signs so the first nonzero entry is positive. The zero vector is returned
/// unchanged.
pub fn normalize_coeffs(coeffs: &mut [Int]) {
    let mut g = Int::zero();
    for c in coeffs.iter() {
        g = num::integer::gcd(g, c.abs());
    }
    if g.is_zero() {
        return;
    }
    for c in coeffs.iter_mut() {
        *c = &*c / &g;
    }
    if let Some(first) = coeffs.iter().find(|c| !c.is_zero()) {
        if first.is_negative() {
            for c in coeffs.iter_mut() {
                *c = -&*c;
            }
        }
    }
}
