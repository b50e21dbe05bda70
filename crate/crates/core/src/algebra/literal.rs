//! Scalar literal grammar shared by vectors, spec files and reports.
//!
//! * prime field: integer, reduced mod p (`4`, `-1`)
//! * Galois field: polynomial in `t` (`2t+1`, `t^2+t`, `0`)
//! * rationals: `p/q` or integer (`-3/2`)
//! * quaternions: signed terms over units `i j k` (`3/2+1i+0j-2k`, `i-j`)
//! * octonions: signed terms over units `e1`..`e7` (`1+e1-3/2e7`)
//! * Cayley tables: element label or index

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Splits `s` into signed terms: `"1-2i+j"` → `[(+,"1"), (-,"2i"), (+,"j")]`.
pub(crate) fn signed_terms(s: &str) -> Option<Vec<(bool, String)>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    let mut terms = Vec::new();
    let mut negative = false;
    let mut current = String::new();
    let mut prev: Option<char> = None;
    for c in s.chars() {
        // a sign after '^' or '/' belongs to the number, not a new term
        let starts_term = (c == '+' || c == '-') && !matches!(prev, Some('^') | Some('/'));
        if starts_term {
            if !current.is_empty() {
                terms.push((negative, std::mem::take(&mut current)));
            } else if prev.is_some() {
                return None;
            }
            negative = c == '-';
        } else {
            current.push(c);
        }
        prev = Some(c);
    }
    if current.is_empty() {
        return None;
    }
    terms.push((negative, current));
    Some(terms)
}

pub(crate) fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    if body.is_empty() || body.starts_with(['+', '-']) {
        return None;
    }
    let value = match body.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() || d.is_negative() {
                return None;
            }
            BigRational::new(n, d)
        }
        None => BigRational::from_integer(body.parse().ok()?),
    };
    Some(if neg { -value } else { value })
}

pub(crate) fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses a term of a hypercomplex literal into (unit index, coefficient).
fn parse_hyper_term(term: &str, units: &[&str]) -> Option<(usize, BigRational)> {
    // longest unit suffix first so that "e1" is not read as "1" with unit "e"
    let mut best: Option<(usize, &str)> = None;
    for (idx, u) in units.iter().enumerate().skip(1) {
        if term.ends_with(u) && best.is_none_or(|(_, b)| u.len() > b.len()) {
            best = Some((idx, u));
        }
    }
    match best {
        Some((idx, u)) => {
            let coeff = &term[..term.len() - u.len()];
            let c = if coeff.is_empty() {
                BigRational::one()
            } else {
                parse_rational(coeff)?
            };
            Some((idx, c))
        }
        None => Some((0, parse_rational(term)?)),
    }
}

pub(crate) fn parse_hyper(s: &str, units: &[&str]) -> Option<Vec<BigRational>> {
    let mut out = vec![BigRational::zero(); units.len()];
    for (neg, term) in signed_terms(s)? {
        let (idx, c) = parse_hyper_term(&term, units)?;
        out[idx] += if neg { -c } else { c };
    }
    Some(out)
}

pub(crate) fn format_hyper(c: &[BigRational], units: &[&str]) -> String {
    let mut out = String::new();
    for (idx, v) in c.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let neg = v.is_negative();
        let mag = v.abs();
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if idx == 0 || !mag.is_one() {
            out.push_str(&format_rational(&mag));
        }
        out.push_str(units[idx]);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub(crate) fn parse_poly(s: &str, p: u64, degree: usize) -> Option<Vec<u64>> {
    let mut out = vec![0u64; degree];
    for (neg, term) in signed_terms(s)? {
        let (coeff, exp) = match term.find('t') {
            Some(pos) => {
                let c = &term[..pos];
                let c: i128 = if c.is_empty() { 1 } else { c.parse().ok()? };
                let rest = &term[pos + 1..];
                let e: usize = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')?.parse().ok()?
                };
                (c, e)
            }
            None => (term.parse::<i128>().ok()?, 0),
        };
        if exp >= degree {
            return None;
        }
        let c = if neg { -coeff } else { coeff };
        let c = c.rem_euclid(p as i128) as u64;
        out[exp] = (out[exp] + c) % p;
    }
    Some(out)
}

pub(crate) fn format_poly(c: &[u64]) -> String {
    let mut parts = Vec::new();
    for (e, v) in c.iter().enumerate().rev() {
        if *v == 0 {
            continue;
        }
        let coeff = if *v == 1 && e > 0 {
            String::new()
        } else {
            v.to_string()
        };
        parts.push(match e {
            0 => coeff,
            1 => format!("{coeff}t"),
            _ => format!("{coeff}t^{e}"),
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

pub(crate) fn parse_residue(s: &str, p: u64) -> Option<u64> {
    let v: i128 = s.trim().parse().ok()?;
    Some(v.rem_euclid(p as i128) as u64)
}

pub const QUATERNION_UNITS: [&str; 4] = ["", "i", "j", "k"];
pub const OCTONION_UNITS: [&str; 8] = ["", "e1", "e2", "e3", "e4", "e5", "e6", "e7"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_literals() {
        let q = parse_hyper("3/2+1i+0j-2k", &QUATERNION_UNITS).unwrap();
        assert_eq!(format_hyper(&q, &QUATERNION_UNITS), "3/2+i-2k");
        let q = parse_hyper("-j", &QUATERNION_UNITS).unwrap();
        assert_eq!(format_hyper(&q, &QUATERNION_UNITS), "-j");
        assert!(parse_hyper("1+", &QUATERNION_UNITS).is_none());
        assert!(parse_hyper("2x", &QUATERNION_UNITS).is_none());
    }

    #[test]
    fn octonion_literals() {
        let o = parse_hyper("1+e1-3/2e7", &OCTONION_UNITS).unwrap();
        assert_eq!(format_hyper(&o, &OCTONION_UNITS), "1+e1-3/2e7");
    }

    #[test]
    fn poly_literals() {
        assert_eq!(parse_poly("2t+1", 3, 2), Some(vec![1, 2]));
        assert_eq!(parse_poly("-t", 3, 2), Some(vec![0, 2]));
        assert_eq!(parse_poly("t^2+t", 2, 3), Some(vec![0, 1, 1]));
        assert_eq!(parse_poly("t^2", 3, 2), None);
        assert_eq!(format_poly(&[1, 2]), "2t+1");
        assert_eq!(format_poly(&[0, 1, 1]), "t^2+t");
        assert_eq!(format_poly(&[0, 0]), "0");
    }

    #[test]
    fn rational_literals() {
        assert_eq!(format_rational(&parse_rational("6/4").unwrap()), "3/2");
        assert_eq!(format_rational(&parse_rational("-5").unwrap()), "-5");
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("--1").is_none());
    }
}
