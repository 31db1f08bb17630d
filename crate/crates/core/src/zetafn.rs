//! L-polynomials, class numbers and place censuses from point counts.
//!
//! With N_n the number of degree-one places over GF(q^n) and
//! S_n = q^n + 1 - N_n the power sums of the 2g inverse roots of L(t),
//! the elementary symmetric functions follow from Newton's identities
//!
//! ```text
//! n e_n = sum_{i=1..n} (-1)^(i-1) e_(n-i) S_i
//! ```
//!
//! and L(t) = sum (-1)^i e_i t^i. Every division along the way must be exact;
//! a remainder means the counts do not come from a curve of the asserted genus.

use serde::{Deserialize, Serialize};

use crate::covers::PlaceCensus;
use crate::error::{Error, Result};
use crate::polyring::{divisors, moebius_mu};

fn pow_i128(base: i128, e: u32) -> Result<i128> {
    base.checked_pow(e).ok_or(Error::Overflow("power"))
}

/// Point counts N_1..N_m over GF(q^n) together with the asserted genus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointCounts {
    q: u64,
    genus: u32,
    counts: Vec<u64>,
}

impl PointCounts {
    /// Checks the Weil bound |N_n - (q^n + 1)| <= 2g q^(n/2) for every entry.
    pub fn new(q: u64, genus: u32, counts: Vec<u64>) -> Result<Self> {
        let pc = PointCounts { q, genus, counts };
        for (i, s) in pc.power_sums()?.into_iter().enumerate() {
            let n = i as u32 + 1;
            let bound = 4 * (genus as i128).pow(2) * pow_i128(q as i128, n)?;
            if s.checked_mul(s).ok_or(Error::Overflow("Weil bound"))? > bound {
                return Err(Error::WeilViolation(format!(
                    "N_{n} = {} is too far from q^{n} + 1 for genus {genus}",
                    pc.counts[i]
                )));
            }
        }
        Ok(pc)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// N_1, N_2, ...
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// S_n = q^n + 1 - N_n.
    pub fn power_sums(&self) -> Result<Vec<i128>> {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &n)| Ok(pow_i128(self.q as i128, i as u32 + 1)? + 1 - n as i128))
            .collect()
    }
}

/// The numerator L(t) = a_0 + a_1 t + ... + a_2g t^2g of the zeta function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LPoly {
    q: u64,
    genus: u32,
    coeffs: Vec<i128>,
}

impl LPoly {
    /// Enforces a_0 = 1, a_(2g-i) = q^(g-i) a_i and L(1) >= 1.
    pub fn new(q: u64, genus: u32, coeffs: Vec<i128>) -> Result<Self> {
        let g = genus as usize;
        if coeffs.len() != 2 * g + 1 {
            return Err(Error::Insufficient(format!(
                "{} coefficients for genus {genus}",
                coeffs.len()
            )));
        }
        if coeffs[0] != 1 {
            return Err(Error::NonIntegral(format!(
                "a_0 = {} instead of 1",
                coeffs[0]
            )));
        }
        for i in 0..=g {
            let expected = pow_i128(q as i128, (g - i) as u32)?
                .checked_mul(coeffs[i])
                .ok_or(Error::Overflow("functional equation"))?;
            if coeffs[2 * g - i] != expected {
                return Err(Error::NonIntegral(format!(
                    "functional equation fails at a_{}: {} != {expected}",
                    2 * g - i,
                    coeffs[2 * g - i]
                )));
            }
        }
        let l = LPoly { q, genus, coeffs };
        if l.value_at_one() < 1 {
            return Err(Error::NonIntegral(format!(
                "L(1) = {} < 1",
                l.value_at_one()
            )));
        }
        Ok(l)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    fn value_at_one(&self) -> i128 {
        self.coeffs.iter().sum()
    }

    /// h = L(1).
    pub fn class_number(&self) -> Result<u64> {
        let h = self.value_at_one();
        u64::try_from(h)
            .ok()
            .filter(|&h| h >= 1)
            .ok_or_else(|| Error::NonIntegral(format!("class number {h} is not positive")))
    }

    /// Checks the Weil bound on the counts this polynomial predicts through n.
    pub fn check_weil_through(&self, n: u32) -> Result<()> {
        extend_counts(self, n).map(|_| ())
    }
}

/// Reconstructs L(t) from N_1..N_g via Newton's identities.
pub fn l_polynomial(counts: &PointCounts) -> Result<LPoly> {
    let g = counts.genus as usize;
    if counts.counts.len() < g {
        return Err(Error::Insufficient(format!(
            "genus {g} needs N_1..N_{g}, have {}",
            counts.counts.len()
        )));
    }
    let s = counts.power_sums()?;
    let mut e = vec![1i128];
    for n in 1..=g {
        let mut acc = 0i128;
        for i in 1..=n {
            let term = e[n - i]
                .checked_mul(s[i - 1])
                .ok_or(Error::Overflow("Newton"))?;
            acc += if i % 2 == 1 { term } else { -term };
        }
        if acc % n as i128 != 0 {
            return Err(Error::NonIntegral(format!("e_{n} = {acc}/{n}")));
        }
        e.push(acc / n as i128);
    }
    let mut coeffs = vec![0i128; 2 * g + 1];
    for i in 0..=g {
        coeffs[i] = if i % 2 == 0 { e[i] } else { -e[i] };
    }
    for i in 0..g {
        coeffs[2 * g - i] = pow_i128(counts.q as i128, (g - i) as u32)? * coeffs[i];
    }
    LPoly::new(counts.q, counts.genus, coeffs)
}

/// h = L(1).
pub fn class_number(l: &LPoly) -> Result<u64> {
    l.class_number()
}

/// N_1..N_n predicted by L(t), running Newton's identities forward.
pub fn extend_counts(l: &LPoly, up_to: u32) -> Result<PointCounts> {
    let two_g = 2 * l.genus as usize;
    let e: Vec<i128> = l
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, &a)| if i % 2 == 0 { a } else { -a })
        .collect();
    let e_at = |i: usize| if i <= two_g { e[i] } else { 0 };
    let mut s: Vec<i128> = Vec::with_capacity(up_to as usize);
    let mut counts = Vec::with_capacity(up_to as usize);
    for m in 1..=up_to as usize {
        let mut acc = 0i128;
        for i in 1..m {
            let term = e_at(i)
                .checked_mul(s[m - i - 1])
                .ok_or(Error::Overflow("Newton"))?;
            acc += if i % 2 == 1 { term } else { -term };
        }
        let last = (m as i128) * e_at(m);
        acc += if m % 2 == 1 { last } else { -last };
        s.push(acc);
        let n = pow_i128(l.q as i128, m as u32)? + 1 - acc;
        counts.push(u64::try_from(n).map_err(|_| Error::NegativeCount(format!("N_{m} = {n}")))?);
    }
    PointCounts::new(l.q, l.genus, counts)
}

/// B_n = (1/n) sum_{d | n} mu(n/d) N_d for every n with N_n available.
pub fn census_from_counts(counts: &PointCounts) -> Result<PlaceCensus> {
    census_from_slice(counts.counts())
}

/// Same as [`census_from_counts`] for a bare N_1, N_2, ... sequence.
pub fn census_from_slice(counts: &[u64]) -> Result<PlaceCensus> {
    let mut b = Vec::with_capacity(counts.len());
    for n in 1..=counts.len() as u64 {
        let sum: i128 = divisors(n)
            .into_iter()
            .map(|d| moebius_mu(n / d) as i128 * counts[d as usize - 1] as i128)
            .sum();
        if sum % n as i128 != 0 {
            return Err(Error::NonIntegral(format!("B_{n} = {sum}/{n}")));
        }
        if sum < 0 {
            return Err(Error::NegativeCount(format!("B_{n} = {}", sum / n as i128)));
        }
        b.push((sum / n as i128) as u64);
    }
    Ok(PlaceCensus::from_vec(b))
}

/// deg Diff(K/F) = 2g_K - 2 - n(2g_F - 2).
pub fn hurwitz_different_degree(g_k: u32, g_f: u32, n: u32) -> i64 {
    2 * g_k as i64 - 2 - n as i64 * (2 * g_f as i64 - 2)
}

/// Ramification index in a compositum when p does not divide both indices.
pub fn abhyankar_index(e1: u64, e2: u64) -> u64 {
    e1 / gcd(e1, e2) * e2
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Number of cyclic degree-d extensions with conductor dividing a place of
/// degree t: d if d divides h (q^t - 1)/(q - 1), else 0.
pub fn cyclic_extension_count(h: u64, q: u64, t: u32, d: u64) -> u64 {
    let group = h as u128 * ((q as u128).pow(t) - 1) / (q as u128 - 1);
    if group.is_multiple_of(d as u128) {
        d
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elliptic_example() {
        let counts = PointCounts::new(2, 1, vec![1]).unwrap();
        let l = l_polynomial(&counts).unwrap();
        assert_eq!(l.coeffs(), &[1, -2, 2]);
        assert_eq!(class_number(&l).unwrap(), 1);
        let ext = extend_counts(&l, 2).unwrap();
        assert_eq!(ext.counts(), &[1, 5]);
    }

    #[test]
    fn rational_function_field() {
        let l = l_polynomial(&PointCounts::new(3, 0, vec![]).unwrap()).unwrap();
        assert_eq!(l.coeffs(), &[1]);
        assert_eq!(l.class_number().unwrap(), 1);
        let ext = extend_counts(&LPoly::new(2, 0, vec![1]).unwrap(), 6).unwrap();
        assert_eq!(ext.counts(), &[3, 5, 9, 17, 33, 65]);
    }

    #[test]
    fn genus_four_census_counts() {
        // B_4 = 1, B_5 = 3, nothing below: N = (0, 0, 0, 4, 15).
        let counts = PointCounts::new(2, 4, vec![0, 0, 0, 4]).unwrap();
        let l = l_polynomial(&counts).unwrap();
        assert_eq!(l.class_number().unwrap(), 1);
        let ext = extend_counts(&l, 5).unwrap();
        assert_eq!(ext.counts()[4], 15);
        let census = census_from_counts(&ext).unwrap();
        assert_eq!(census.as_slice(), &[0, 0, 0, 1, 3]);
    }

    #[test]
    fn census_examples() {
        let c = census_from_counts(&PointCounts::new(2, 0, vec![3, 5]).unwrap()).unwrap();
        assert_eq!(c.as_slice(), &[3, 1]);
        let c = census_from_slice(&[0]).unwrap();
        assert_eq!(c.as_slice(), &[0]);
        assert!(matches!(
            census_from_slice(&[0, 1]),
            Err(Error::NonIntegral(_))
        ));
        assert!(matches!(
            census_from_slice(&[4, 2]),
            Err(Error::NegativeCount(_))
        ));
    }

    #[test]
    fn rejects_inconsistent_counts() {
        assert!(matches!(
            PointCounts::new(2, 1, vec![9]),
            Err(Error::WeilViolation(_))
        ));
        // S_1 = 1, S_2 = 2: e_2 = (1 - 2)/2 is not an integer.
        let pc = PointCounts::new(2, 2, vec![2, 3]).unwrap();
        assert!(matches!(l_polynomial(&pc), Err(Error::NonIntegral(_))));
        assert!(matches!(
            l_polynomial(&PointCounts::new(2, 2, vec![1]).unwrap()),
            Err(Error::Insufficient(_))
        ));
    }

    #[test]
    fn lpoly_constructor_checks() {
        assert!(LPoly::new(2, 1, vec![1, -2, 2]).is_ok());
        assert!(LPoly::new(2, 1, vec![1, -2, 3]).is_err());
        assert!(LPoly::new(2, 1, vec![2, -2, 4]).is_err());
        assert!(LPoly::new(2, 1, vec![1, 2]).is_err());
    }

    #[test]
    fn identities() {
        assert_eq!(hurwitz_different_degree(4, 0, 5), 16);
        assert_eq!(hurwitz_different_degree(3, 3, 1), 0);
        assert_eq!(hurwitz_different_degree(1, 0, 2), 4);
        assert_eq!(abhyankar_index(2, 3), 6);
        assert_eq!(abhyankar_index(5, 1), 5);
        assert_eq!(abhyankar_index(3, 3), 3);
        assert_eq!(cyclic_extension_count(1, 2, 4, 5), 5);
        assert_eq!(cyclic_extension_count(1, 2, 4, 7), 0);
        assert_eq!(cyclic_extension_count(7, 3, 2, 1), 1);
    }
}
