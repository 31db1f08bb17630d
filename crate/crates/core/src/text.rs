//! Polynomial text format: sums of monomials such as `x^4+x+1`,
//! `x1^2+x1*x2+x3*x4` or `x^3+a`, where `a` is the modulus root of the
//! coefficient field. Integers are read modulo p. Multiplication may be written
//! with `*` or by juxtaposition; parentheses group sub-expressions.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gfarith::FieldSpec;

/// Sparse polynomial: exponent vector -> nonzero coefficient ordinal.
pub(crate) type Sparse = BTreeMap<Vec<u32>, u32>;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [&'a str],
    field: &'a FieldSpec,
    generator: char,
}

fn sparse_add(f: &FieldSpec, a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = a.clone();
    for (e, &c) in b {
        let slot = out.entry(e.clone()).or_insert(0);
        *slot = f.add(*slot, c);
        if *slot == 0 {
            out.remove(e);
        }
    }
    out
}

fn sparse_mul(f: &FieldSpec, a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (ea, &ca) in a {
        for (eb, &cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let slot = out.entry(e.clone()).or_insert(0);
            *slot = f.add(*slot, f.mul(ca, cb));
            if *slot == 0 {
                out.remove(&e);
            }
        }
    }
    out
}

fn sparse_neg(f: &FieldSpec, a: &Sparse) -> Sparse {
    a.iter().map(|(e, &c)| (e.clone(), f.neg(c))).collect()
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        let text = String::from_utf8_lossy(self.src);
        Error::Parse(format!("{msg} at offset {} in {text:?}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn constant(&self, c: u32) -> Sparse {
        let mut s = Sparse::new();
        if c != 0 {
            s.insert(vec![0; self.vars.len()], c);
        }
        s
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("expected an integer"))
    }

    fn expr(&mut self) -> Result<Sparse> {
        let f = self.field;
        let mut negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut acc = Sparse::new();
        loop {
            let t = self.term()?;
            acc = if negate {
                sparse_add(f, &acc, &sparse_neg(f, &t))
            } else {
                sparse_add(f, &acc, &t)
            };
            match self.peek() {
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn starts_factor(&mut self) -> bool {
        match self.peek() {
            Some(c) => c.is_ascii_alphanumeric() || c == b'(',
            None => false,
        }
    }

    fn term(&mut self) -> Result<Sparse> {
        let mut acc = self.factor()?;
        loop {
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else if !self.starts_factor() {
                return Ok(acc);
            }
            let next = self.factor()?;
            acc = sparse_mul(self.field, &acc, &next);
        }
    }

    fn factor(&mut self) -> Result<Sparse> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.number()?;
            let mut acc = self.constant(1);
            for _ in 0..e {
                acc = sparse_mul(self.field, &acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Sparse> {
        match self.peek() {
            None => Err(self.err("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                Ok(self.constant((n % self.field.characteristic() as u64) as u32))
            }
            Some(_) => {
                let rest = &self.src[self.pos..];
                let var = self
                    .vars
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| rest.starts_with(v.as_bytes()))
                    .max_by_key(|(_, v)| v.len());
                if let Some((i, v)) = var {
                    self.pos += v.len();
                    let mut e = vec![0; self.vars.len()];
                    e[i] = 1;
                    return Ok(Sparse::from([(e, 1)]));
                }
                if rest[0] as char == self.generator {
                    if self.field.is_prime_field() {
                        return Err(self.err("generator symbol used over a prime field"));
                    }
                    self.pos += 1;
                    return Ok(self.constant(self.field.generator()));
                }
                Err(self.err("unexpected character"))
            }
        }
    }
}

/// Parses text into a sparse polynomial over `field` in the given variables.
pub(crate) fn parse_sparse(
    text: &str,
    field: &FieldSpec,
    vars: &[&str],
    generator: char,
) -> Result<Sparse> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        vars,
        field,
        generator,
    };
    let out = parser.expr()?;
    if parser.peek().is_some() {
        return Err(parser.err("trailing input"));
    }
    Ok(out)
}

/// Parses a univariate polynomial into little-endian coefficient ordinals.
pub(crate) fn parse_univariate(text: &str, field: &FieldSpec, var: &str) -> Result<Vec<u32>> {
    let sparse = parse_sparse(text, field, &[var], 'a')?;
    let deg = sparse.keys().map(|e| e[0] as usize).max().unwrap_or(0);
    let mut coeffs = vec![0; deg + 1];
    for (e, c) in sparse {
        coeffs[e[0] as usize] = c;
    }
    Ok(coeffs)
}

/// Parses a constant field element (e.g. `a+1`) written in `generator`.
pub fn parse_element(text: &str, field: &FieldSpec, generator: char) -> Result<u32> {
    let sparse = parse_sparse(text, field, &[], generator)?;
    Ok(sparse.get(&Vec::new()).copied().unwrap_or(0))
}

fn format_term(field: &FieldSpec, c: u32, monomial: &str) -> String {
    if monomial.is_empty() {
        return field.format_element(c, 'a');
    }
    if c == 1 {
        return monomial.to_string();
    }
    if c < field.characteristic() {
        return format!("{c}{monomial}");
    }
    let coeff = field.format_element(c, 'a');
    if coeff.contains('+') {
        format!("({coeff})*{monomial}")
    } else {
        format!("{coeff}*{monomial}")
    }
}

pub(crate) fn format_univariate(field: &FieldSpec, coeffs: &[u32], var: &str) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            format_term(field, c, &mono)
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// Formats a sparse polynomial, monomials in descending lexicographic order
/// of exponent vectors.
pub(crate) fn format_sparse(field: &FieldSpec, poly: &Sparse, vars: &[&str]) -> String {
    let terms: Vec<String> = poly
        .iter()
        .rev()
        .map(|(e, &c)| {
            let mono: Vec<String> = e
                .iter()
                .zip(vars)
                .filter(|(&k, _)| k > 0)
                .map(|(&k, v)| {
                    if k == 1 {
                        v.to_string()
                    } else {
                        format!("{v}^{k}")
                    }
                })
                .collect();
            format_term(field, c, &mono.join("*"))
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfarith::make_field;

    #[test]
    fn parses_univariate() {
        let f2 = make_field(2, 1).unwrap();
        assert_eq!(
            parse_univariate("x^4+x+1", &f2, "x").unwrap(),
            vec![1, 1, 0, 0, 1]
        );
        assert_eq!(
            parse_univariate("(x+1)^2", &f2, "x").unwrap(),
            vec![1, 0, 1]
        );
        assert_eq!(parse_univariate("0", &f2, "x").unwrap(), vec![0]);
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(
            parse_univariate("-2x^3-x-1", &f3, "x").unwrap(),
            vec![2, 2, 0, 1]
        );
        let f4 = make_field(2, 2).unwrap();
        assert_eq!(
            parse_univariate("x^3+a", &f4, "x").unwrap(),
            vec![2, 0, 0, 1]
        );
        assert_eq!(parse_univariate("(a+1)x", &f4, "x").unwrap(), vec![0, 3]);
        assert!(parse_univariate("x^3+a", &f2, "x").is_err());
        assert!(parse_univariate("x^", &f2, "x").is_err());
        assert!(parse_univariate("x+y", &f2, "x").is_err());
    }

    #[test]
    fn parses_multivariate_juxtaposition() {
        let f2 = make_field(2, 1).unwrap();
        let vars = ["x1", "x2", "x3", "x4"];
        let a = parse_sparse("x1x2 + x3x4 + x4^2", &f2, &vars, 'a').unwrap();
        let b = parse_sparse("x4^2+x3*x4+x1*x2", &f2, &vars, 'a').unwrap();
        assert_eq!(a, b);
        assert_eq!(format_sparse(&f2, &a, &vars), "x1*x2+x3*x4+x4^2");
        let c = parse_sparse("x1^2x3 + x1x3^2", &f2, &vars, 'a').unwrap();
        assert_eq!(format_sparse(&f2, &c, &vars), "x1^2*x3+x1*x3^2");
    }

    #[test]
    fn formats_coefficients() {
        let f4 = make_field(2, 2).unwrap();
        assert_eq!(format_univariate(&f4, &[3, 2, 0, 1], "x"), "x^3+a*x+a+1");
        assert_eq!(
            parse_univariate("x^3+a*x+a+1", &f4, "x").unwrap(),
            vec![3, 2, 0, 1]
        );
        assert_eq!(format_univariate(&f4, &[0, 3], "x"), "(a+1)*x");
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(format_univariate(&f3, &[2, 2, 0, 1], "x"), "x^3+2x+2");
    }

    #[test]
    fn parses_elements() {
        let f8 = make_field(2, 3).unwrap();
        assert_eq!(parse_element("b", &f8, 'b').unwrap(), 2);
        assert_eq!(parse_element("b^3", &f8, 'b').unwrap(), 3);
        assert_eq!(parse_element("0", &f8, 'b').unwrap(), 0);
    }
}
