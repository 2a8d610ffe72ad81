//! Exact rational scalars. Everything in this crate computes over `Rat`;
//! there is no floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(p: i64, q: i64) -> Rat {
    assert!(q != 0, "zero denominator");
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p` or `p/q` with an optional leading sign. Rejects empty input,
/// whitespace, and zero denominators.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| format!("malformed rational `{s}`: bad numerator `{num}`"))?;
    let den: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| format!("malformed rational `{s}`: bad denominator `{d}`"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(format!("malformed rational `{s}`: zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

/// Renders as `p` or `p/q`, matching what `parse_rat` accepts.
/// (`BigRational`'s own `Display` already does this; the wrapper fixes the
/// contract in one place.)
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

/// True if `r` is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// True if `r` is a non-negative integer.
pub fn is_nonneg_integer(r: &Rat) -> bool {
    is_integer(r) && !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_plain_and_fraction() {
        assert_eq!(parse_rat("3").unwrap(), rat(3));
        assert_eq!(parse_rat("-3").unwrap(), rat(-3));
        assert_eq!(parse_rat("3/2").unwrap(), rat_frac(3, 2));
        assert_eq!(parse_rat("-6/4").unwrap(), rat_frac(-3, 2));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rat("").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("a/2").is_err());
        assert!(parse_rat("1/ 2").is_err());
        assert!(parse_rat("1.5").is_err());
    }

    #[test]
    fn format_round_trips() {
        for s in ["0", "7", "-7", "3/2", "-3/2"] {
            assert_eq!(format_rat(&parse_rat(s).unwrap()), s);
        }
    }
}
