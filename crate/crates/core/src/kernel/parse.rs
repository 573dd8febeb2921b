//! Readers for the textual forms used on the command line: polynomials in
//! the canonical rendering (`x1*x4 - x2*x3`, `3/2*x1^2 + 1`) and coordinate
//! lists (`1,-2,3/4`).

use num_traits::{One, Zero};

use super::multipoly::{Monomial, MultiPoly};
use super::rational::{parse_rational, Rational};
use crate::error::{Error, Result};

/// Largest exponent accepted on a single variable.
pub const MAX_EXPONENT: u32 = 1 << 12;

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn error(&self, msg: &str) -> Error {
        Error::parse("polynomial", format!("{msg} at byte {}", self.pos))
    }
}

/// Parses a polynomial in `x1..x{num_vars}`. Accepts everything
/// [`MultiPoly`]'s `Display` produces, plus free whitespace and repeated
/// factors (`2*x1*x1`).
pub fn parse_poly(text: &str, num_vars: usize) -> Result<MultiPoly> {
    let mut cur = Cursor { text, pos: 0 };
    let mut terms = Vec::new();
    cur.skip_ws();
    let mut negative = cur.eat(b'-');
    loop {
        let (mono, mut coeff) = parse_term(&mut cur, num_vars)?;
        if negative {
            coeff = -coeff;
        }
        terms.push((mono, coeff));
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some(b'+') => negative = false,
            Some(b'-') => negative = true,
            Some(_) => return Err(cur.error("expected `+` or `-`")),
        }
        cur.pos += 1;
    }
    Ok(MultiPoly::from_terms(num_vars, terms))
}

fn parse_term(cur: &mut Cursor, num_vars: usize) -> Result<(Monomial, Rational)> {
    let mut coeff = Rational::one();
    let mut exps = vec![0u32; num_vars];
    loop {
        cur.skip_ws();
        match cur.peek() {
            Some(b'x') => {
                cur.pos += 1;
                let idx = cur.digits();
                let i: usize = idx.parse().map_err(|_| cur.error("expected variable index"))?;
                if i == 0 || i > num_vars {
                    return Err(cur.error(&format!("variable x{i} outside x1..x{num_vars}")));
                }
                let e = if cur.eat(b'^') {
                    cur.skip_ws();
                    let d = cur.digits();
                    match d.parse::<u32>() {
                        Ok(e) if e <= MAX_EXPONENT => e,
                        _ => return Err(cur.error("exponent missing or too large")),
                    }
                } else {
                    1
                };
                exps[i - 1] += e;
                if exps[i - 1] > MAX_EXPONENT {
                    return Err(cur.error("exponent too large"));
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let start = cur.pos;
                cur.digits();
                if cur.peek() == Some(b'/') {
                    cur.pos += 1;
                    cur.digits();
                }
                let q = parse_rational(&cur.text[start..cur.pos])
                    .map_err(|_| cur.error("malformed coefficient"))?;
                coeff *= q;
            }
            _ => return Err(cur.error("expected a coefficient or variable")),
        }
        if !cur.eat(b'*') {
            break;
        }
    }
    Ok((Monomial::new(exps), coeff))
}

/// Parses comma-separated rational coordinates and checks the count.
pub fn parse_element(text: &str, dim: usize) -> Result<Vec<Rational>> {
    let coords = text
        .split(',')
        .enumerate()
        .map(|(n, s)| {
            parse_rational(s.trim()).map_err(|e| e.in_field(format!("element[{n}]")))
        })
        .collect::<Result<Vec<_>>>()?;
    if coords.len() != dim {
        return Err(Error::parse(
            "element",
            format!("expected {dim} coordinates, got {}", coords.len()),
        ));
    }
    Ok(coords)
}

/// Parses `;`-separated vectors, each as in [`parse_element`].
pub fn parse_vectors(text: &str, dim: usize) -> Result<Vec<Vec<Rational>>> {
    text.split(';')
        .map(|v| parse_element(v, dim))
        .collect::<Result<Vec<_>>>()
        .and_then(|vs| {
            if vs.iter().all(|v| v.iter().all(Zero::is_zero)) {
                Err(Error::parse("subspace", "no nonzero vectors"))
            } else {
                Ok(vs)
            }
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::ratio;

    #[test]
    fn reads_canonical_output() {
        for s in ["x1*x4 - x2*x3", "x2^3 - 3/2*x1 - 1", "0", "-x1^2 + 7", "1/3"] {
            assert_eq!(parse_poly(s, 4).unwrap().to_string(), s);
        }
    }

    #[test]
    fn lenient_spacing_and_repeats() {
        let p = parse_poly(" 2 * x1*x1 +x2 ", 2).unwrap();
        assert_eq!(p.to_string(), "2*x1^2 + x2");
        let q = parse_poly("x1 - x1", 1).unwrap();
        assert!(q.is_zero());
    }

    #[test]
    fn rejects_bad_input() {
        for s in ["", "x0", "x3", "x1^", "x1^99999", "1/0", "x1 x2", "+", "x1 +", "2**x1", "x"] {
            assert!(parse_poly(s, 2).is_err(), "{s:?}");
        }
    }

    #[test]
    fn elements() {
        assert_eq!(parse_element("1, -2, 3/4", 3).unwrap()[2], ratio(3, 4));
        assert!(matches!(
            parse_element("1,2", 3),
            Err(Error::Parse { field, .. }) if field == "element"
        ));
        assert!(matches!(
            parse_element("1,x", 2),
            Err(Error::Parse { field, .. }) if field == "element[1]"
        ));
        assert_eq!(parse_vectors("1,0;0,1", 2).unwrap().len(), 2);
        assert!(parse_vectors("0,0", 2).is_err());
    }
}
