//! Exact arithmetic in GF(p^k) for p in {2, 3} and k <= 20.
//!
//! An element is identified with its *ordinal*: the coefficient vector in the
//! modulus root, read as a little-endian base-p integer. The ordinal doubles as
//! the element ordering used for every tie-break in the crate, so "smallest
//! root" and "smallest witness" are plain integer comparisons.
//!
//! Hot loops work directly on ordinals through the [`FieldSpec`] methods;
//! [`FieldElement`] is the checked value type carrying its field.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::polyring;

/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 20;

/// A finite field GF(p^k) given by its canonical modulus.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
    k: u32,
    size: u64,
    /// Little-endian coefficients of the monic modulus, length k + 1.
    modulus: Vec<u32>,
    /// Characteristic 2 only: the modulus as a bit mask.
    modulus_bits: u64,
    /// p^i for i in 0..k.
    place_values: Vec<u32>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.k)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{})", self.p, self.k)
        }
    }
}

type FieldCache = Mutex<HashMap<(u32, u32), Arc<FieldSpec>>>;

fn field_cache() -> &'static FieldCache {
    static CACHE: OnceLock<FieldCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Returns GF(p^k) with the lexicographically smallest monic irreducible
/// modulus of degree k. Results are cached process-wide.
pub fn make_field(p: u32, k: u32) -> Result<Arc<FieldSpec>> {
    if p != 2 && p != 3 {
        return Err(Error::UnsupportedCharacteristic(p));
    }
    if k == 0 || k > MAX_DEGREE {
        return Err(Error::DegreeOutOfRange(k));
    }
    if let Some(f) = field_cache()
        .lock()
        .expect("field cache poisoned")
        .get(&(p, k))
    {
        return Ok(f.clone());
    }
    // Built outside the lock: the modulus search recursively needs GF(p).
    let field = Arc::new(if k == 1 {
        FieldSpec::from_modulus(p, vec![0, 1])
    } else {
        FieldSpec::from_modulus(p, smallest_irreducible(p, k)?)
    });
    let mut cache = field_cache().lock().expect("field cache poisoned");
    Ok(cache.entry((p, k)).or_insert(field).clone())
}

fn smallest_irreducible(p: u32, k: u32) -> Result<Vec<u32>> {
    let prime = make_field(p, 1)?;
    let count = (p as u64).pow(k);
    for tail in 0..count {
        let mut coeffs = digits_of(p, tail, k as usize);
        coeffs.push(1);
        if coeffs[0] == 0 {
            continue;
        }
        if polyring::raw::is_irreducible(&prime, &coeffs) {
            return Ok(coeffs);
        }
    }
    Err(Error::Internal(format!(
        "no irreducible of degree {k} over GF({p})"
    )))
}

fn digits_of(p: u32, mut value: u64, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len + 1);
    for _ in 0..len {
        out.push((value % p as u64) as u32);
        value /= p as u64;
    }
    out
}

impl FieldSpec {
    fn from_modulus(p: u32, modulus: Vec<u32>) -> Self {
        let k = (modulus.len() - 1) as u32;
        let modulus_bits = if p == 2 {
            modulus
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &c)| acc | ((c as u64) << i))
        } else {
            0
        };
        FieldSpec {
            p,
            k,
            size: (p as u64).pow(k),
            place_values: (0..k).map(|i| p.pow(i)).collect(),
            modulus,
            modulus_bits,
        }
    }

    /// Builds a field around an arbitrary monic modulus without checking it.
    /// Only meant for exercising the self-test against corrupted tables.
    #[doc(hidden)]
    pub fn with_modulus_unchecked(p: u32, modulus: Vec<u32>) -> Self {
        Self::from_modulus(p, modulus)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// Number of elements, p^k.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// Little-endian modulus coefficients (monic, length k + 1).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.k == 1
    }

    /// All ordinals in ascending element order.
    pub fn elements(&self) -> impl Iterator<Item = u32> + Clone {
        0..self.size as u32
    }

    /// Ordinal of the modulus root (the generator written `a` in text).
    pub fn generator(&self) -> u32 {
        if self.k == 1 {
            0
        } else {
            self.p
        }
    }

    pub fn element(self: &Arc<Self>, value: u32) -> Result<FieldElement> {
        if value as u64 >= self.size {
            return Err(Error::Internal(format!("ordinal {value} outside {self}")));
        }
        Ok(FieldElement {
            field: self.clone(),
            value,
        })
    }

    /// Little-endian base-p digits of an ordinal, written into `out[..k]`.
    #[inline]
    pub fn digits(&self, mut a: u32, out: &mut [u32]) {
        for slot in out.iter_mut().take(self.k as usize) {
            *slot = a % self.p;
            a /= self.p;
        }
    }

    #[inline]
    pub fn from_digits(&self, digits: &[u32]) -> u32 {
        digits
            .iter()
            .take(self.k as usize)
            .zip(&self.place_values)
            .map(|(&d, &pv)| d * pv)
            .sum()
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        for &pv in &self.place_values {
            out += ((a % 3 + b % 3) % 3) * pv;
            a /= 3;
            b /= 3;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        for &pv in &self.place_values {
            out += ((3 - a % 3) % 3) * pv;
            a /= 3;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.p == 2 {
            self.mul_binary(a, b)
        } else {
            self.mul_generic(a, b)
        }
    }

    fn mul_binary(&self, a: u32, b: u32) -> u32 {
        let k = self.k;
        let mut prod: u64 = 0;
        let (a, mut b) = (a as u64, b);
        let mut shift = 0;
        while b != 0 {
            if b & 1 == 1 {
                prod ^= a << shift;
            }
            b >>= 1;
            shift += 1;
        }
        let mut top = 63 - prod.leading_zeros().min(63);
        while prod >> k != 0 {
            if prod >> top & 1 == 1 {
                prod ^= self.modulus_bits << (top - k);
            }
            top -= 1;
        }
        prod as u32
    }

    fn mul_generic(&self, a: u32, b: u32) -> u32 {
        let k = self.k as usize;
        let p = self.p;
        let mut da = [0u32; MAX_DEGREE as usize];
        let mut db = [0u32; MAX_DEGREE as usize];
        self.digits(a, &mut da);
        self.digits(b, &mut db);
        let mut prod = [0u32; 2 * MAX_DEGREE as usize];
        for i in 0..k {
            if da[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] += da[i] * db[j];
            }
        }
        for c in prod.iter_mut().take(2 * k - 1) {
            *c %= p;
        }
        for i in (k..2 * k - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..k {
                let sub = c * self.modulus[j] % p;
                prod[i - k + j] = (prod[i - k + j] + p - sub) % p;
            }
        }
        self.from_digits(&prod[..k])
    }

    /// Multiplication by an element of the prime field (given as 0..p).
    #[inline]
    pub fn scale(&self, scalar: u32, a: u32) -> u32 {
        match scalar % self.p {
            0 => 0,
            1 => a,
            _ => self.neg(a),
        }
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::InverseOfZero);
        }
        Ok(self.pow(a, self.size - 2))
    }

    /// a^(p^iterations).
    pub fn frobenius(&self, a: u32, iterations: u32) -> u32 {
        let mut x = a;
        for _ in 0..iterations % self.k {
            x = self.pow(x, self.p as u64);
        }
        x
    }

    /// Absolute trace into GF(p), returned as 0..p.
    pub fn trace(&self, a: u32) -> u32 {
        let mut acc = 0;
        let mut x = a;
        for _ in 0..self.k {
            acc = self.add(acc, x);
            x = self.pow(x, self.p as u64);
        }
        debug_assert!(acc < self.p, "trace left the prime field");
        acc
    }

    /// Smallest z with z^p - z = c, if one exists.
    pub fn solve_artin_schreier(&self, c: u32) -> Option<u32> {
        let k = self.k as usize;
        let p = self.p;
        // Columns are images of the basis t^j under the GF(p)-linear map z -> z^p - z.
        let mut rows = vec![vec![0u32; k + 1]; k];
        let mut digits = vec![0u32; k];
        for j in 0..k {
            let basis = self.place_values[j];
            let image = self.sub(self.pow(basis, p as u64), basis);
            self.digits(image, &mut digits);
            for (i, row) in rows.iter_mut().enumerate() {
                row[j] = digits[i];
            }
        }
        self.digits(c, &mut digits);
        for (i, row) in rows.iter_mut().enumerate() {
            row[k] = digits[i];
        }
        let solution = solve_mod_p(&mut rows, k, p)?;
        let z = self.from_digits(&solution);
        (self.sub(self.pow(z, p as u64), z) == c).then_some(z)
    }

    pub fn quadratic_character(&self, a: u32) -> Result<QuadraticCharacter> {
        if self.p == 2 {
            return Err(Error::EvenCharacteristic);
        }
        if a == 0 {
            return Ok(QuadraticCharacter::Zero);
        }
        Ok(if self.pow(a, (self.size - 1) / 2) == 1 {
            QuadraticCharacter::Square
        } else {
            QuadraticCharacter::NonSquare
        })
    }

    /// Renders an ordinal as a polynomial in `symbol` (the modulus root).
    pub fn format_element(&self, a: u32, symbol: char) -> String {
        if a == 0 {
            return "0".to_string();
        }
        let mut digits = vec![0u32; self.k as usize];
        self.digits(a, &mut digits);
        let mut terms = Vec::new();
        for (i, &d) in digits.iter().enumerate().rev() {
            if d == 0 {
                continue;
            }
            let coeff = if d == 1 && i > 0 {
                String::new()
            } else {
                d.to_string()
            };
            let power = match i {
                0 => String::new(),
                1 => symbol.to_string(),
                _ => format!("{symbol}^{i}"),
            };
            terms.push(format!("{coeff}{power}"));
        }
        terms.join("+")
    }
}

/// Gaussian elimination over GF(p) on an augmented `n x (n+1)` system; free
/// variables are set to zero. Returns `None` for inconsistent systems.
fn solve_mod_p(rows: &mut [Vec<u32>], n: usize, p: u32) -> Option<Vec<u32>> {
    let inv = |x: u32| if p == 2 { 1 } else { x % p }; // 1^-1 = 1, 2^-1 = 2 mod 3
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let f = inv(rows[r][col]);
        for v in rows[r].iter_mut().take(n + 1) {
            *v = *v * f % p;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[col] != 0 {
                let m = row[col];
                for (v, &pv) in row.iter_mut().zip(&pivot).take(n + 1) {
                    *v = (*v + p * p - m * pv) % p;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|row| row[n] != 0) {
        return None;
    }
    let mut x = vec![0u32; n];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = rows[i][n];
    }
    Some(x)
}

/// Result of a quadratic-residue test in odd characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadraticCharacter {
    Zero,
    Square,
    NonSquare,
}

/// A field element bundled with its field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: Arc<FieldSpec>,
    value: u32,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format_element(self.value, 'a'))
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        (*self.field == *other.field).then(|| self.value.cmp(&other.value))
    }
}

pub(crate) fn check_same(a: &Arc<FieldSpec>, b: &Arc<FieldSpec>) -> Result<()> {
    if Arc::ptr_eq(a, b) || **a == **b {
        Ok(())
    } else {
        Err(Error::MixedFields(a.to_string(), b.to_string()))
    }
}

impl FieldElement {
    pub fn zero(field: &Arc<FieldSpec>) -> Self {
        FieldElement {
            field: field.clone(),
            value: 0,
        }
    }

    pub fn one(field: &Arc<FieldSpec>) -> Self {
        FieldElement {
            field: field.clone(),
            value: 1,
        }
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    /// The ordinal, i.e. the element's position in the element ordering.
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn with(&self, value: u32) -> Self {
        FieldElement {
            field: self.field.clone(),
            value,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_same(&self.field, &other.field)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_same(&self.field, &other.field)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_same(&self.field, &other.field)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> Self {
        self.with(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(self.with(self.field.inv(self.value)?))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.with(self.field.pow(self.value, e))
    }

    pub fn frobenius(&self, iterations: u32) -> Self {
        self.with(self.field.frobenius(self.value, iterations))
    }

    /// Absolute trace into GF(p), as an integer in 0..p.
    pub fn absolute_trace(&self) -> u32 {
        self.field.trace(self.value)
    }

    pub fn solve_artin_schreier(&self) -> Option<Self> {
        self.field
            .solve_artin_schreier(self.value)
            .map(|z| self.with(z))
    }

    pub fn quadratic_character(&self) -> Result<QuadraticCharacter> {
        self.field.quadratic_character(self.value)
    }

    /// Maps this element into `target` through the canonical embedding.
    pub fn embed(&self, target: &Arc<FieldSpec>) -> Result<Self> {
        let emb = Embedding::new(&self.field, target)?;
        Ok(FieldElement {
            field: target.clone(),
            value: emb.apply(self.value),
        })
    }
}

/// The ring embedding GF(p^d) -> GF(p^(d m)) sending the source modulus root to
/// its smallest root in the target.
#[derive(Debug, Clone)]
pub struct Embedding {
    source: Arc<FieldSpec>,
    target: Arc<FieldSpec>,
    /// Image of t^i for i in 0..d.
    basis_images: Vec<u32>,
}

impl Embedding {
    pub fn new(source: &Arc<FieldSpec>, target: &Arc<FieldSpec>) -> Result<Self> {
        let (p, d, n) = (source.p, source.k, target.k);
        if target.p != p || n % d != 0 {
            return Err(Error::NotASubfield { p, from: d, to: n });
        }
        if d == 1 {
            return Ok(Embedding {
                source: source.clone(),
                target: target.clone(),
                basis_images: vec![1],
            });
        }
        // Prime-field coefficients have the same ordinal in every extension.
        let roots = polyring::raw::roots(target, &source.modulus);
        let root = *roots.first().ok_or_else(|| {
            Error::Internal(format!("modulus of {source} has no root in {target}"))
        })?;
        let mut basis_images = Vec::with_capacity(d as usize);
        let mut x = 1;
        for _ in 0..d {
            basis_images.push(x);
            x = target.mul(x, root);
        }
        Ok(Embedding {
            source: source.clone(),
            target: target.clone(),
            basis_images,
        })
    }

    pub fn source(&self) -> &Arc<FieldSpec> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FieldSpec> {
        &self.target
    }

    /// Image of the source modulus root.
    pub fn root_image(&self) -> u32 {
        if self.source.k == 1 {
            0
        } else {
            self.basis_images[1]
        }
    }

    #[inline]
    pub fn apply(&self, a: u32) -> u32 {
        if self.source.k == 1 {
            return a;
        }
        let mut digits = [0u32; MAX_DEGREE as usize];
        self.source.digits(a, &mut digits);
        let mut acc = 0;
        for (d, &img) in digits.iter().zip(&self.basis_images) {
            acc = self.target.add(acc, self.target.scale(*d, img));
        }
        acc
    }
}

/// Embeds `a` into `target` (see [`Embedding`]).
pub fn embed_subfield(a: &FieldElement, target: &Arc<FieldSpec>) -> Result<FieldElement> {
    a.embed(target)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32, k: u32) -> Arc<FieldSpec> {
        make_field(p, k).unwrap()
    }

    #[test]
    fn canonical_moduli() {
        assert_eq!(gf(2, 1).modulus(), &[0, 1]);
        assert_eq!(gf(2, 2).modulus(), &[1, 1, 1]);
        assert_eq!(gf(2, 3).modulus(), &[1, 1, 0, 1]);
        assert_eq!(gf(2, 4).modulus(), &[1, 1, 0, 0, 1]);
        assert_eq!(gf(3, 2).modulus(), &[1, 0, 1]);
    }

    #[test]
    fn rejects_unsupported_fields() {
        assert_eq!(make_field(5, 1), Err(Error::UnsupportedCharacteristic(5)));
        assert_eq!(make_field(2, 0), Err(Error::DegreeOutOfRange(0)));
        assert_eq!(make_field(3, 21), Err(Error::DegreeOutOfRange(21)));
        assert!(make_field(3, 20).is_ok());
        assert!(make_field(2, 20).is_ok());
    }

    #[test]
    fn gf4_arithmetic() {
        let f = gf(2, 2);
        let alpha = f.element(2).unwrap();
        assert_eq!(alpha.mul(&alpha).unwrap().value(), 3);
        assert_eq!(alpha.inv().unwrap().value(), 3);
        assert_eq!(alpha.add(&FieldElement::zero(&f)).unwrap(), alpha);
        assert_eq!(alpha.frobenius(1).value(), 3);
        assert_eq!(alpha.absolute_trace(), 1);
        assert_eq!(FieldElement::one(&f).absolute_trace(), 0);
        assert_eq!(alpha.to_string(), "a");
        assert_eq!(alpha.frobenius(1).to_string(), "a+1");
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = FieldElement::one(&gf(2, 2));
        let b = FieldElement::one(&gf(2, 3));
        assert!(matches!(a.add(&b), Err(Error::MixedFields(..))));
        assert_eq!(
            FieldElement::zero(&gf(2, 2)).inv(),
            Err(Error::InverseOfZero)
        );
    }

    #[test]
    fn artin_schreier_examples() {
        assert_eq!(gf(2, 1).solve_artin_schreier(0), Some(0));
        assert_eq!(gf(2, 1).solve_artin_schreier(1), None);
        assert_eq!(gf(2, 2).solve_artin_schreier(1), Some(2));
        assert_eq!(gf(2, 2).solve_artin_schreier(0), Some(0));
    }

    #[test]
    fn artin_schreier_matches_exhaustive_search() {
        for (p, k) in [(2, 1), (2, 3), (2, 4), (2, 6), (3, 1), (3, 2), (3, 4)] {
            let f = gf(p, k);
            for c in f.elements() {
                let brute: Vec<u32> = f
                    .elements()
                    .filter(|&z| f.sub(f.pow(z, p as u64), z) == c)
                    .collect();
                let solved = f.solve_artin_schreier(c);
                assert_eq!(solved, brute.first().copied(), "{f} c={c}");
                assert_eq!(solved.is_some(), f.trace(c) == 0);
                if solved.is_some() {
                    assert_eq!(brute.len() as u32, p);
                }
            }
        }
    }

    #[test]
    fn quadratic_character_gf3() {
        let f = gf(3, 1);
        assert_eq!(f.quadratic_character(0).unwrap(), QuadraticCharacter::Zero);
        assert_eq!(
            f.quadratic_character(1).unwrap(),
            QuadraticCharacter::Square
        );
        assert_eq!(
            f.quadratic_character(2).unwrap(),
            QuadraticCharacter::NonSquare
        );
        assert_eq!(
            gf(2, 3).quadratic_character(1),
            Err(Error::EvenCharacteristic)
        );
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for (p, k) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3)] {
            let f = gf(p, k);
            for a in f.elements() {
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                assert_eq!(f.add(a, f.neg(a)), 0);
                assert_eq!(f.frobenius(a, k), a);
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.add(a, b), f.add(b, a));
                    for c in f.elements() {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn binary_and_generic_multiplication_agree() {
        for k in [2, 5, 8, 11] {
            let f = gf(2, k);
            for a in (0..f.size() as u32).step_by(7) {
                for b in (0..f.size() as u32).step_by(13) {
                    assert_eq!(f.mul_binary(a, b), f.mul_generic(a, b));
                }
            }
        }
    }

    #[test]
    fn embedding_picks_smallest_root() {
        let gf4 = gf(2, 2);
        let gf16 = gf(2, 4);
        let roots: Vec<u32> = gf16
            .elements()
            .filter(|&z| gf16.add(gf16.add(gf16.mul(z, z), z), 1) == 0)
            .collect();
        assert_eq!(roots.len(), 2);
        let alpha = gf4.element(2).unwrap();
        assert_eq!(alpha.embed(&gf16).unwrap().value(), roots[0]);
        assert_eq!(FieldElement::one(&gf4).embed(&gf16).unwrap().value(), 1);
        assert_eq!(FieldElement::zero(&gf4).embed(&gf16).unwrap().value(), 0);
        assert!(matches!(
            alpha.embed(&gf(2, 3)),
            Err(Error::NotASubfield { .. })
        ));
    }

    #[test]
    fn embedding_is_a_ring_homomorphism() {
        let src = gf(2, 3);
        let dst = gf(2, 6);
        let emb = Embedding::new(&src, &dst).unwrap();
        for a in src.elements() {
            for b in src.elements() {
                assert_eq!(
                    emb.apply(src.mul(a, b)),
                    dst.mul(emb.apply(a), emb.apply(b))
                );
                assert_eq!(
                    emb.apply(src.add(a, b)),
                    dst.add(emb.apply(a), emb.apply(b))
                );
            }
        }
    }

    #[test]
    fn formats_elements() {
        let f = gf(3, 3);
        assert_eq!(f.format_element(0, 'a'), "0");
        assert_eq!(f.format_element(2, 'a'), "2");
        assert_eq!(f.format_element(3 + 2 * 9, 'a'), "2a^2+a");
    }
}
