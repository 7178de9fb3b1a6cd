//! Exact rationals and their `"p/q"` text form.

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};

/// Exact rational used for every coordinate and diameter.
pub type Q = Ratio<i64>;

pub fn q(numer: i64, denom: i64) -> Q {
    Q::new(numer, denom)
}

pub fn qi(value: i64) -> Q {
    Q::from_integer(value)
}

/// Always `p/q`, including integers (`3/1`), so files never mix two forms.
pub fn format_q(value: &Q) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Accepts `p/q` or a bare integer.
pub fn parse_q(text: &str) -> Result<Q> {
    let text = text.trim();
    let bad = || Error::Parse { line: 0, msg: format!("bad rational {text:?}") };
    match text.split_once('/') {
        Some((p, d)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Q::new(p, d))
        }
        None => text.parse::<i64>().map(Q::from_integer).map_err(|_| bad()),
    }
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Q>) -> i64 {
    values
        .into_iter()
        .fold(1i64, |acc, value| acc.lcm(value.denom()))
}

/// Lossy conversion used only for rendering.
pub fn to_f64(value: &Q) -> f64 {
    *value.numer() as f64 / *value.denom() as f64
}
