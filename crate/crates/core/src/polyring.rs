//! Univariate polynomials over GF(q): irreducibility, enumeration of the
//! places of the rational function field, residue maps and Moebius transport.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gfarith::{check_same, make_field, Embedding, FieldElement, FieldSpec};
use crate::text;

/// Slice-level polynomial kernels. Coefficients are little-endian ordinals and
/// results are trimmed (no trailing zeros; the zero polynomial is empty).
pub mod raw {
    use crate::gfarith::FieldSpec;

    pub fn trim(mut v: Vec<u32>) -> Vec<u32> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    pub fn degree(a: &[u32]) -> Option<usize> {
        a.iter().rposition(|&c| c != 0)
    }

    pub fn add(f: &FieldSpec, a: &[u32], b: &[u32]) -> Vec<u32> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                f.add(
                    a.get(i).copied().unwrap_or(0),
                    b.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        trim(out)
    }

    pub fn sub(f: &FieldSpec, a: &[u32], b: &[u32]) -> Vec<u32> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                f.sub(
                    a.get(i).copied().unwrap_or(0),
                    b.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        trim(out)
    }

    pub fn scale(f: &FieldSpec, c: u32, a: &[u32]) -> Vec<u32> {
        trim(a.iter().map(|&x| f.mul(c, x)).collect())
    }

    pub fn mul(f: &FieldSpec, a: &[u32], b: &[u32]) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
        trim(out)
    }

    /// Quotient and remainder; `b` must be nonzero.
    pub fn div_rem(f: &FieldSpec, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
        let db = degree(b).expect("division by zero polynomial");
        let lead_inv = f.inv(b[db]).expect("nonzero leading coefficient");
        let mut r = trim(a.to_vec());
        if r.len() <= db {
            return (Vec::new(), r);
        }
        let mut q = vec![0u32; r.len() - db];
        while r.len() > db {
            let shift = r.len() - 1 - db;
            let c = f.mul(*r.last().unwrap(), lead_inv);
            q[shift] = c;
            for (j, &bj) in b.iter().enumerate().take(db + 1) {
                r[shift + j] = f.sub(r[shift + j], f.mul(c, bj));
            }
            r = trim(r);
        }
        (trim(q), r)
    }

    pub fn rem(f: &FieldSpec, a: &[u32], b: &[u32]) -> Vec<u32> {
        div_rem(f, a, b).1
    }

    pub fn monic(f: &FieldSpec, a: &[u32]) -> Vec<u32> {
        match a.last() {
            None => Vec::new(),
            Some(&lead) => scale(f, f.inv(lead).expect("trimmed"), a),
        }
    }

    /// Monic gcd (empty if both inputs are zero).
    pub fn gcd(f: &FieldSpec, a: &[u32], b: &[u32]) -> Vec<u32> {
        let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
        while !y.is_empty() {
            let r = rem(f, &x, &y);
            x = y;
            y = r;
        }
        monic(f, &x)
    }

    pub fn eval(f: &FieldSpec, a: &[u32], x: u32) -> u32 {
        a.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn mul_mod(f: &FieldSpec, a: &[u32], b: &[u32], m: &[u32]) -> Vec<u32> {
        rem(f, &mul(f, a, b), m)
    }

    pub fn pow_mod(f: &FieldSpec, a: &[u32], mut e: u64, m: &[u32]) -> Vec<u32> {
        let mut base = rem(f, a, m);
        let mut acc = rem(f, &[1], m);
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(f, &acc, &base, m);
            }
            base = mul_mod(f, &base, &base, m);
            e >>= 1;
        }
        acc
    }

    /// Rabin's test: a degree-d polynomial is irreducible iff
    /// x^(q^d) = x mod f and gcd(x^(q^(d/l)) - x, f) = 1 for each prime l | d.
    pub fn is_irreducible(f: &FieldSpec, a: &[u32]) -> bool {
        let Some(d) = degree(a) else { return false };
        if d == 0 {
            return false;
        }
        if d == 1 {
            return true;
        }
        if a[0] == 0 {
            return false;
        }
        let m = monic(f, a);
        let x = vec![0, 1];
        let q = f.size();
        // frob[i] = x^(q^i) mod m
        let mut frob = Vec::with_capacity(d + 1);
        frob.push(x.clone());
        for i in 1..=d {
            let next = pow_mod(f, &frob[i - 1], q, &m);
            frob.push(next);
        }
        if frob[d] != x {
            return false;
        }
        prime_factors(d as u64).into_iter().all(|l| {
            let h = sub(f, &frob[d / l as usize], &x);
            gcd(f, &h, &m).len() == 1
        })
    }

    pub fn prime_factors(mut n: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut p = 2;
        while p * p <= n {
            if n.is_multiple_of(p) {
                out.push(p);
                while n.is_multiple_of(p) {
                    n /= p;
                }
            }
            p += 1;
        }
        if n > 1 {
            out.push(n);
        }
        out
    }

    /// Distinct roots of `a` lying in `f`, ascending in the element order.
    pub fn roots(f: &FieldSpec, a: &[u32]) -> Vec<u32> {
        let a = trim(a.to_vec());
        if degree(&a).unwrap_or(0) == 0 {
            return Vec::new();
        }
        let m = monic(f, &a);
        // gcd with x^q - x keeps exactly the split, squarefree part.
        let xq = pow_mod(f, &[0, 1], f.size(), &m);
        let split = gcd(f, &sub(f, &xq, &[0, 1]), &m);
        let mut out = Vec::new();
        split_linear(f, &split, &mut out);
        out.sort_unstable();
        out
    }

    /// Splits a monic squarefree product of linear factors with the trace maps
    /// Tr(g x): distinct roots r, s differ in Tr(g r) for some basis element g.
    fn split_linear(f: &FieldSpec, g: &[u32], out: &mut Vec<u32>) {
        match degree(g) {
            None | Some(0) => return,
            Some(1) => {
                out.push(f.neg(f.mul(g[0], f.inv(g[1]).expect("monic"))));
                return;
            }
            Some(_) => {}
        }
        let p = f.characteristic();
        for j in 0..f.degree() {
            let gamma = p.pow(j);
            let mut y = rem(f, &[0, gamma], g);
            let mut tr = y.clone();
            for _ in 1..f.degree() {
                y = pow_mod(f, &y, p as u64, g);
                tr = add(f, &tr, &y);
            }
            let parts: Vec<Vec<u32>> = (0..p).map(|c| gcd(f, &sub(f, &tr, &[c]), g)).collect();
            if parts.iter().all(|h| h.len() < g.len()) {
                for h in parts {
                    split_linear(f, &h, out);
                }
                return;
            }
        }
        unreachable!("trace maps failed to separate distinct roots");
    }
}

/// A univariate polynomial over a finite field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    field: Arc<FieldSpec>,
    coeffs: Vec<u32>,
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.field)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_univariate(&self.field, &self.coeffs, "x"))
    }
}

impl UniPoly {
    /// Builds a polynomial from little-endian coefficient ordinals.
    pub fn new(field: &Arc<FieldSpec>, coeffs: Vec<u32>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| (c as u64) < field.size()));
        UniPoly {
            field: field.clone(),
            coeffs: raw::trim(coeffs),
        }
    }

    pub fn zero(field: &Arc<FieldSpec>) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn constant(field: &Arc<FieldSpec>, c: u32) -> Self {
        Self::new(field, vec![c])
    }

    /// The polynomial x.
    pub fn x(field: &Arc<FieldSpec>) -> Self {
        Self::new(field, vec![0, 1])
    }

    /// Parses the text format, e.g. `x^4+x+1` or `x^3+a` over GF(4).
    pub fn parse(text: &str, field: &Arc<FieldSpec>) -> Result<Self> {
        let coeffs = text::parse_univariate(text, field, "x")?;
        Ok(Self::new(field, coeffs))
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        raw::degree(&self.coeffs)
    }

    pub fn leading_coeff(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == 1
    }

    fn with(&self, coeffs: Vec<u32>) -> Self {
        UniPoly {
            field: self.field.clone(),
            coeffs: raw::trim(coeffs),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_same(&self.field, &other.field)?;
        Ok(self.with(raw::add(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_same(&self.field, &other.field)?;
        Ok(self.with(raw::sub(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_same(&self.field, &other.field)?;
        Ok(self.with(raw::mul(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn scale(&self, c: u32) -> Self {
        self.with(raw::scale(&self.field, c, &self.coeffs))
    }

    pub fn div_rem(&self, other: &Self) -> Result<(Self, Self)> {
        check_same(&self.field, &other.field)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = raw::div_rem(&self.field, &self.coeffs, &other.coeffs);
        Ok((self.with(q), self.with(r)))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        check_same(&self.field, &other.field)?;
        Ok(self.with(raw::gcd(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn monic(&self) -> Self {
        self.with(raw::monic(&self.field, &self.coeffs))
    }

    pub fn eval(&self, x: &FieldElement) -> Result<FieldElement> {
        check_same(&self.field, x.field())?;
        self.field
            .element(raw::eval(&self.field, &self.coeffs, x.value()))
    }

    /// Evaluates at a point of an extension field, embedding the coefficients.
    pub fn eval_embedded(&self, emb: &Embedding, x: u32) -> u32 {
        let t = emb.target();
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| t.add(t.mul(acc, x), emb.apply(c)))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(&self.field, 1);
        for _ in 0..e {
            acc = self.with(raw::mul(&self.field, &acc.coeffs, &self.coeffs));
        }
        acc
    }

    /// Multiplicity of `factor` (non-constant) as a divisor of `self` (nonzero).
    pub fn multiplicity(&self, factor: &Self) -> usize {
        let mut rest = self.clone();
        let mut n = 0;
        loop {
            let (q, r) = raw::div_rem(&self.field, &rest.coeffs, &factor.coeffs);
            if !r.is_empty() || rest.is_zero() {
                return n;
            }
            rest = self.with(q);
            n += 1;
        }
    }

    /// Distinct roots in the coefficient field, ascending.
    pub fn roots(&self) -> Vec<u32> {
        raw::roots(&self.field, &self.coeffs)
    }

    pub fn is_irreducible(&self) -> Result<bool> {
        match self.degree() {
            None | Some(0) => Err(Error::ConstantPolynomial),
            Some(_) => Ok(raw::is_irreducible(&self.field, &self.coeffs)),
        }
    }

    /// Monic irreducible factors with multiplicity, found by trial division
    /// against the enumerated irreducibles of each degree.
    pub fn irreducible_factors(&self) -> Result<Vec<(UniPoly, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let mut rest = self.monic();
        let mut out = Vec::new();
        let mut d = 1;
        while rest.degree().unwrap_or(0) >= d {
            if 2 * d > rest.degree().unwrap_or(0) {
                // What remains has no factor of degree <= half its degree.
                out.push((rest.clone(), 1));
                break;
            }
            for u in enumerate_monic_irreducibles(&self.field, d) {
                let m = rest.multiplicity(&u);
                if m > 0 {
                    rest = rest
                        .with(raw::div_rem(&self.field, &rest.coeffs, &u.pow(m as u32).coeffs).0);
                    out.push((u, m));
                }
            }
            d += 1;
        }
        out.sort_by(|a, b| cmp_polys(&a.0, &b.0));
        Ok(out)
    }

    /// Base-q value of the coefficient vector (little-endian), used to order
    /// polynomials of equal degree.
    pub fn ordinal(&self) -> u128 {
        let q = self.field.size() as u128;
        self.coeffs
            .iter()
            .rev()
            .fold(0u128, |acc, &c| acc * q + c as u128)
    }
}

/// Orders by degree, then by coefficient ordinal.
pub fn cmp_polys(a: &UniPoly, b: &UniPoly) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then(a.ordinal().cmp(&b.ordinal()))
}

/// All monic irreducibles of degree exactly `d`, ascending in coefficient order.
pub fn enumerate_monic_irreducibles(field: &Arc<FieldSpec>, d: usize) -> Vec<UniPoly> {
    if d == 0 {
        return Vec::new();
    }
    let q = field.size();
    let total = q.checked_pow(d as u32).expect("enumeration size overflow");
    let mut out = Vec::new();
    let mut coeffs = vec![0u32; d + 1];
    coeffs[d] = 1;
    for tail in 0..total {
        let mut t = tail;
        for c in coeffs.iter_mut().take(d) {
            *c = (t % q) as u32;
            t /= q;
        }
        if raw::is_irreducible(field, &coeffs) {
            out.push(UniPoly::new(field, coeffs.clone()));
        }
    }
    out
}

/// Number of monic irreducibles of degree d over GF(q): (1/d) sum mu(e) q^(d/e).
pub fn irreducible_count(q: u64, d: u64) -> u64 {
    let sum: i128 = divisors(d)
        .into_iter()
        .map(|e| moebius_mu(e) as i128 * (q as i128).pow((d / e) as u32))
        .sum();
    (sum / d as i128) as u64
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// The number-theoretic Moebius function.
pub fn moebius_mu(n: u64) -> i8 {
    assert!(n >= 1, "moebius_mu is defined for n >= 1");
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// A reduced rational function with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl RationalFunction {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        check_same(num.field(), den.field())?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let field = num.field().clone();
        let g = num.gcd(&den)?;
        let g = if num.is_zero() { den.clone() } else { g };
        let (n, _) = num.div_rem(&g)?;
        let (d, _) = den.div_rem(&g)?;
        let lc_inv = field.inv(d.leading_coeff())?;
        Ok(RationalFunction {
            num: n.scale(lc_inv),
            den: d.scale(lc_inv),
        })
    }

    pub fn from_poly(num: UniPoly) -> Self {
        let den = UniPoly::constant(num.field(), 1);
        RationalFunction { num, den }
    }

    pub fn parse(num: &str, den: &str, field: &Arc<FieldSpec>) -> Result<Self> {
        Self::new(UniPoly::parse(num, field)?, UniPoly::parse(den, field)?)
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        self.num.field()
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Self::new(self.num.mul(&other.num)?, self.den.mul(&other.den)?)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let n = self.num.mul(&other.den)?.add(&other.num.mul(&self.den)?)?;
        Self::new(n, self.den.mul(&other.den)?)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Multiplies by u^e for a polynomial u and an integer e.
    pub fn mul_power(&self, u: &UniPoly, e: i64) -> Result<Self> {
        let pw = u.pow(e.unsigned_abs() as u32);
        if e >= 0 {
            Self::new(self.num.mul(&pw)?, self.den.clone())
        } else {
            Self::new(self.num.clone(), self.den.mul(&pw)?)
        }
    }
}

/// A place of the rational function field GF(q)(x).
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum RationalPlace {
    /// Zero of a monic irreducible polynomial.
    Finite(UniPoly),
    /// The pole of x.
    Infinite,
}

impl fmt::Debug for RationalPlace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalPlace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RationalPlace::Finite(u) => write!(f, "({u})"),
            RationalPlace::Infinite => f.write_str("infinity"),
        }
    }
}

impl RationalPlace {
    /// Wraps a polynomial as a finite place; it must be monic irreducible.
    pub fn finite(u: UniPoly) -> Result<Self> {
        if !u.is_monic() || !u.is_irreducible()? {
            return Err(Error::Parse(format!("{u} is not a monic irreducible")));
        }
        Ok(RationalPlace::Finite(u))
    }

    pub fn degree(&self) -> usize {
        match self {
            RationalPlace::Finite(u) => u.degree().expect("places are non-constant"),
            RationalPlace::Infinite => 1,
        }
    }
}

/// All places of degree `d`: finite ones in enumeration order, then infinity.
pub fn places_of_degree(field: &Arc<FieldSpec>, d: usize) -> Vec<RationalPlace> {
    let mut out: Vec<RationalPlace> = enumerate_monic_irreducibles(field, d)
        .into_iter()
        .map(RationalPlace::Finite)
        .collect();
    if d == 1 {
        out.push(RationalPlace::Infinite);
    }
    out
}

/// v_P(f) for a nonzero rational function.
pub fn place_valuation(f: &RationalFunction, place: &RationalPlace) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    Ok(match place {
        RationalPlace::Finite(u) => {
            check_same(u.field(), f.field())?;
            f.num.multiplicity(u) as i64 - f.den.multiplicity(u) as i64
        }
        RationalPlace::Infinite => f.den.degree().unwrap() as i64 - f.num.degree().unwrap() as i64,
    })
}

/// Residue field GF(q^d) of a place with the evaluation map into it.
#[derive(Debug, Clone)]
pub struct ResidueMap {
    place: RationalPlace,
    embedding: Embedding,
    /// Canonical root of the place polynomial (unused at infinity).
    root: u32,
}

/// Builds the residue map at `place` of GF(q)(x), where GF(q) is `base`.
pub fn residue_field(place: &RationalPlace, base: &Arc<FieldSpec>) -> Result<ResidueMap> {
    let target = make_field(base.characteristic(), base.degree() * place.degree() as u32)?;
    residue_field_with(place, &Embedding::new(base, &target)?)
}

/// Same as [`residue_field`] with a precomputed embedding of the base field
/// into GF(q^deg P).
pub fn residue_field_with(place: &RationalPlace, embedding: &Embedding) -> Result<ResidueMap> {
    let (base, target) = (embedding.source(), embedding.target());
    if target.degree() != base.degree() * place.degree() as u32 {
        return Err(Error::DimensionMismatch {
            expected: (base.degree() as usize) * place.degree(),
            got: target.degree() as usize,
        });
    }
    let root = match place {
        RationalPlace::Finite(u) => {
            check_same(u.field(), base)?;
            let lifted: Vec<u32> = u.coeffs().iter().map(|&c| embedding.apply(c)).collect();
            *raw::roots(target, &lifted)
                .first()
                .ok_or_else(|| Error::Internal(format!("{u} has no root in {target}")))?
        }
        RationalPlace::Infinite => 0,
    };
    Ok(ResidueMap {
        place: place.clone(),
        embedding: embedding.clone(),
        root,
    })
}

impl ResidueMap {
    pub fn field(&self) -> &Arc<FieldSpec> {
        self.embedding.target()
    }

    pub fn place(&self) -> &RationalPlace {
        &self.place
    }

    /// The chosen root of the place polynomial in the residue field.
    pub fn root(&self) -> u32 {
        self.root
    }

    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    /// Residue of a function regular at the place, as an ordinal.
    pub fn eval(&self, f: &RationalFunction) -> Result<u32> {
        let t = self.field();
        match &self.place {
            RationalPlace::Finite(_) => {
                let n = f.num.eval_embedded(&self.embedding, self.root);
                let d = f.den.eval_embedded(&self.embedding, self.root);
                if d == 0 {
                    return Err(Error::Pole(self.place.to_string()));
                }
                Ok(t.mul(n, t.inv(d)?))
            }
            RationalPlace::Infinite => {
                let (dn, dd) = (f.num.degree(), f.den.degree().unwrap());
                match dn {
                    None => Ok(0),
                    Some(dn) if dn < dd => Ok(0),
                    Some(dn) if dn == dd => {
                        let base = f.field();
                        let r = base.mul(f.num.leading_coeff(), base.inv(f.den.leading_coeff())?);
                        Ok(self.embedding.apply(r))
                    }
                    Some(_) => Err(Error::Pole(self.place.to_string())),
                }
            }
        }
    }

    pub fn eval_element(&self, f: &RationalFunction) -> Result<FieldElement> {
        self.field().element(self.eval(f)?)
    }
}

/// The substitution x -> (a x + b) / (c x + d) with ad - bc != 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Moebius {
    field: Arc<FieldSpec>,
    a: u32,
    b: u32,
    c: u32,
    d: u32,
}

impl Moebius {
    pub fn new(field: &Arc<FieldSpec>, a: u32, b: u32, c: u32, d: u32) -> Result<Self> {
        if field.sub(field.mul(a, d), field.mul(b, c)) == 0 {
            return Err(Error::DegenerateMap);
        }
        Ok(Moebius {
            field: field.clone(),
            a,
            b,
            c,
            d,
        })
    }

    pub fn identity(field: &Arc<FieldSpec>) -> Self {
        Moebius {
            field: field.clone(),
            a: 1,
            b: 0,
            c: 0,
            d: 1,
        }
    }

    pub fn inverse(&self) -> Self {
        let f = &self.field;
        Moebius {
            field: f.clone(),
            a: self.d,
            b: f.neg(self.b),
            c: f.neg(self.c),
            d: self.a,
        }
    }

    /// The map x -> self(other(x)).
    pub fn compose(&self, other: &Moebius) -> Moebius {
        let f = &self.field;
        let m = |x: u32, y: u32| f.mul(x, y);
        // Substituting x -> other(x) into self(x) = (a x + b)/(c x + d).
        Moebius {
            field: f.clone(),
            a: f.add(m(self.a, other.a), m(self.b, other.c)),
            b: f.add(m(self.a, other.b), m(self.b, other.d)),
            c: f.add(m(self.c, other.a), m(self.d, other.c)),
            d: f.add(m(self.c, other.b), m(self.d, other.d)),
        }
    }

    pub fn coefficients(&self) -> (u32, u32, u32, u32) {
        (self.a, self.b, self.c, self.d)
    }
}

impl fmt::Display for Moebius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = UniPoly::new(&self.field, vec![self.b, self.a]);
        let den = UniPoly::new(&self.field, vec![self.d, self.c]);
        let wrap = |p: &UniPoly| {
            if p.coeffs().iter().filter(|&&c| c != 0).count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        if den.degree() == Some(0) && den.leading_coeff() == 1 {
            write!(f, "x -> {num}")
        } else {
            write!(f, "x -> {}/{}", wrap(&num), wrap(&den))
        }
    }
}

/// Image of a place under the substitution x -> (ax+b)/(cx+d): the zero of
/// p((ax+b)/(cx+d)) after clearing (cx+d)^deg p and normalizing.
pub fn moebius_transport(place: &RationalPlace, map: &Moebius) -> Result<RationalPlace> {
    let f = &map.field;
    match place {
        RationalPlace::Infinite => {
            // Zero of 1/x maps to the zero of (cx+d)/(ax+b).
            if map.c == 0 {
                Ok(RationalPlace::Infinite)
            } else {
                let root = f.neg(f.mul(map.d, f.inv(map.c)?));
                Ok(RationalPlace::Finite(UniPoly::new(f, vec![f.neg(root), 1])))
            }
        }
        RationalPlace::Finite(u) => {
            check_same(u.field(), f)?;
            let n = u.degree().expect("finite place");
            let lin_num = UniPoly::new(f, vec![map.b, map.a]);
            let lin_den = UniPoly::new(f, vec![map.d, map.c]);
            let mut acc = UniPoly::zero(f);
            for (i, &coeff) in u.coeffs().iter().enumerate() {
                let term = lin_num
                    .pow(i as u32)
                    .mul(&lin_den.pow((n - i) as u32))?
                    .scale(coeff);
                acc = acc.add(&term)?;
            }
            if acc.degree() == Some(0) {
                Ok(RationalPlace::Infinite)
            } else {
                Ok(RationalPlace::Finite(acc.monic()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32, k: u32) -> Arc<FieldSpec> {
        make_field(p, k).unwrap()
    }

    fn poly(s: &str, f: &Arc<FieldSpec>) -> UniPoly {
        UniPoly::parse(s, f).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let f = gf(2, 1);
        assert_eq!(
            poly("x^2+1", &f).gcd(&poly("x+1", &f)).unwrap(),
            poly("x+1", &f)
        );
        let one = poly("x^3+x+1", &f).eval(&FieldElement::zero(&f)).unwrap();
        assert_eq!(one.value(), 1);
        let (q, r) = poly("x^4+x+1", &f).div_rem(&poly("x^2", &f)).unwrap();
        assert_eq!((q, r), (poly("x^2", &f), poly("x+1", &f)));
        assert_eq!(
            poly("x", &f).div_rem(&UniPoly::zero(&f)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn irreducibility_examples() {
        let f2 = gf(2, 1);
        let f3 = gf(3, 1);
        assert!(poly("x^4+x+1", &f2).is_irreducible().unwrap());
        assert!(!poly("x^2+1", &f2).is_irreducible().unwrap());
        assert!(poly("x^3+2x+2", &f3).is_irreducible().unwrap());
        assert_eq!(
            poly("1", &f2).is_irreducible(),
            Err(Error::ConstantPolynomial)
        );
    }

    #[test]
    fn irreducibility_agrees_with_trial_division() {
        // A degree-d polynomial is reducible iff it has a factor of degree <= d/2.
        for field in [gf(2, 1), gf(3, 1), gf(2, 2)] {
            let small: Vec<UniPoly> = (1..=3)
                .flat_map(|d| enumerate_monic_irreducibles(&field, d))
                .collect();
            let q = field.size();
            for d in 2..=6usize {
                for tail in 0..q.pow(d as u32).min(800) {
                    let mut c: Vec<u32> = (0..d)
                        .map(|i| ((tail / q.pow(i as u32)) % q) as u32)
                        .collect();
                    c.push(1);
                    let f = UniPoly::new(&field, c);
                    let has_factor = small
                        .iter()
                        .any(|u| 2 * u.degree().unwrap() <= d && f.div_rem(u).unwrap().1.is_zero());
                    assert_eq!(f.is_irreducible().unwrap(), !has_factor, "{f:?}");
                }
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let f2 = gf(2, 1);
        let deg1: Vec<String> = enumerate_monic_irreducibles(&f2, 1)
            .iter()
            .map(|u| u.to_string())
            .collect();
        assert_eq!(deg1, ["x", "x+1"]);
        let deg4: Vec<String> = enumerate_monic_irreducibles(&f2, 4)
            .iter()
            .map(|u| u.to_string())
            .collect();
        assert_eq!(deg4, ["x^4+x+1", "x^4+x^3+1", "x^4+x^3+x^2+x+1"]);
        let deg7 = enumerate_monic_irreducibles(&f2, 7);
        assert_eq!(deg7.len(), 18);
        assert!(deg7.contains(&poly("x^7+x^3+1", &f2)));
        assert!(deg7.contains(&poly("x^7+x^4+1", &f2)));
    }

    #[test]
    fn moebius_values() {
        assert_eq!(moebius_mu(1), 1);
        assert_eq!(moebius_mu(4), 0);
        assert_eq!(moebius_mu(5), -1);
        assert_eq!(moebius_mu(6), 1);
        assert_eq!(moebius_mu(30), -1);
        assert_eq!(irreducible_count(2, 7), 18);
        assert_eq!(irreducible_count(2, 4), 3);
    }

    #[test]
    fn residues() {
        let f2 = gf(2, 1);
        let place = RationalPlace::finite(poly("x+1", &f2)).unwrap();
        let res = residue_field(&place, &f2).unwrap();
        assert_eq!(
            res.eval(&RationalFunction::from_poly(UniPoly::x(&f2)))
                .unwrap(),
            1
        );

        let g = RationalFunction::parse("x^3+x^2+1", "x^3+x+1", &f2).unwrap();
        let inf = residue_field(&RationalPlace::Infinite, &f2).unwrap();
        assert_eq!(inf.eval(&g).unwrap(), 1);

        let at_x = residue_field(&RationalPlace::finite(UniPoly::x(&f2)).unwrap(), &f2).unwrap();
        let inv_x = RationalFunction::parse("1", "x", &f2).unwrap();
        assert!(matches!(at_x.eval(&inv_x), Err(Error::Pole(_))));
    }

    #[test]
    fn residue_of_degree_four_place() {
        let f2 = gf(2, 1);
        let u = poly("x^4+x+1", &f2);
        let res = residue_field(&RationalPlace::Finite(u.clone()), &f2).unwrap();
        assert_eq!(res.field().degree(), 4);
        let lifted = u.eval_embedded(res.embedding(), res.root());
        assert_eq!(lifted, 0);
    }

    #[test]
    fn valuations() {
        let f2 = gf(2, 1);
        let u = poly("x^4+x+1", &f2);
        let u_inv = RationalFunction::new(UniPoly::constant(&f2, 1), u.clone()).unwrap();
        let place = RationalPlace::Finite(u);
        assert_eq!(place_valuation(&u_inv, &place).unwrap(), -1);
        let cubic = RationalFunction::from_poly(poly("x^3+x+1", &f2));
        assert_eq!(
            place_valuation(&cubic, &RationalPlace::Infinite).unwrap(),
            -3
        );
        let one = RationalFunction::from_poly(UniPoly::constant(&f2, 1));
        assert_eq!(place_valuation(&one, &place).unwrap(), 0);
        let zero = RationalFunction::from_poly(UniPoly::zero(&f2));
        assert_eq!(place_valuation(&zero, &place), Err(Error::ZeroFunction));
    }

    #[test]
    fn transport_examples() {
        let f2 = gf(2, 1);
        let inv_x = Moebius::new(&f2, 0, 1, 1, 0).unwrap();
        let p = RationalPlace::Finite(poly("x^4+x^3+1", &f2));
        assert_eq!(
            moebius_transport(&p, &inv_x).unwrap(),
            RationalPlace::Finite(poly("x^4+x+1", &f2))
        );
        assert_eq!(moebius_transport(&p, &Moebius::identity(&f2)).unwrap(), p);
        assert_eq!(Moebius::new(&f2, 1, 1, 1, 1), Err(Error::DegenerateMap));

        // x -> 1/(x+1) applied to x^4+x^3+x^2+x+1: (x+1)^4 + ... + 1 = x^4+x^3+1.
        let shift_inv = Moebius::new(&f2, 0, 1, 1, 1).unwrap();
        let pentagon = RationalPlace::Finite(poly("x^4+x^3+x^2+x+1", &f2));
        let image = moebius_transport(&pentagon, &shift_inv).unwrap();
        assert_eq!(image, RationalPlace::Finite(poly("x^4+x^3+1", &f2)));
        // The inverse substitution x -> (x+1)/x lands on x^4+x+1.
        let back = moebius_transport(&pentagon, &shift_inv.inverse()).unwrap();
        assert_eq!(back, RationalPlace::Finite(poly("x^4+x+1", &f2)));

        // Degree-one places can move to infinity and back.
        let at_zero = RationalPlace::Finite(UniPoly::x(&f2));
        assert_eq!(
            moebius_transport(&at_zero, &inv_x).unwrap(),
            RationalPlace::Infinite
        );
        assert_eq!(
            moebius_transport(&RationalPlace::Infinite, &inv_x).unwrap(),
            at_zero
        );
    }

    #[test]
    fn factors_by_trial_division() {
        let f3 = gf(3, 1);
        let f = poly("x^3+2x+2", &f3).mul(&poly("x+1", &f3).pow(2)).unwrap();
        let factors = f.irreducible_factors().unwrap();
        assert_eq!(
            factors,
            vec![(poly("x+1", &f3), 2), (poly("x^3+2x+2", &f3), 1)]
        );
    }
}
