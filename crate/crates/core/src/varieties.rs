//! Projective curve models: plane quartics in P^2 and cubic-quadric complete
//! intersections in P^3, with point enumeration, Frobenius orbit degrees,
//! a Jacobian smoothness probe and exact point counts.
//!
//! Points are stored with their leftmost nonzero coordinate equal to 1, and
//! enumeration runs in ascending lexicographic order of the coordinate tuple
//! (coordinates compared by ordinal). Work is partitioned by the leading
//! coordinate position and the next coordinate's value; partial results are
//! merged in partition order so parallel runs match serial ones exactly.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gfarith::{make_field, Embedding, FieldSpec};
use crate::text::{self, Sparse};

/// Variable names for three- and four-variable models.
pub const PLANE_VARS: [&str; 3] = ["x", "y", "z"];
pub const SPACE_VARS: [&str; 4] = ["x1", "x2", "x3", "x4"];

fn default_vars(nvars: usize) -> &'static [&'static str] {
    if nvars == 3 {
        &PLANE_VARS
    } else {
        &SPACE_VARS
    }
}

/// A sparse multivariate polynomial over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    field: Arc<FieldSpec>,
    nvars: usize,
    /// Sorted by exponent vector, coefficients nonzero.
    terms: Vec<(Vec<u32>, u32)>,
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(default_vars(self.nvars)))
    }
}

impl MultiPoly {
    fn from_sparse(field: &Arc<FieldSpec>, nvars: usize, sparse: Sparse) -> Self {
        MultiPoly {
            field: field.clone(),
            nvars,
            terms: sparse.into_iter().collect(),
        }
    }

    /// Parses with variables `x,y,z` (3 variables) or `x1..x4` (4 variables).
    pub fn parse(text: &str, field: &Arc<FieldSpec>, nvars: usize) -> Result<Self> {
        if nvars != 3 && nvars != 4 {
            return Err(Error::DimensionMismatch {
                expected: 4,
                got: nvars,
            });
        }
        Self::parse_with(text, field, default_vars(nvars))
    }

    pub fn parse_with(text: &str, field: &Arc<FieldSpec>, vars: &[&str]) -> Result<Self> {
        let sparse = text::parse_sparse(text, field, vars, 'a')?;
        Ok(Self::from_sparse(field, vars.len(), sparse))
    }

    pub fn format_with(&self, vars: &[&str]) -> String {
        text::format_sparse(&self.field, &self.terms.iter().cloned().collect(), vars)
    }

    /// The linear form x_i (0-based index).
    pub fn variable(field: &Arc<FieldSpec>, nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        MultiPoly {
            field: field.clone(),
            nvars,
            terms: vec![(e, 1)],
        }
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Vec<u32>, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Exponent vectors of the monomials, ascending.
    pub fn monomials(&self) -> Vec<Vec<u32>> {
        self.terms.iter().map(|(e, _)| e.clone()).collect()
    }

    /// The common total degree, if every monomial has the same one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.iter().map(|(e, _)| e.iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        crate::gfarith::check_same(&self.field, &other.field)?;
        let mut sparse: Sparse = self.terms.iter().cloned().collect();
        for (e, c) in &other.terms {
            let slot = sparse.entry(e.clone()).or_insert(0);
            *slot = self.field.add(*slot, *c);
            if *slot == 0 {
                sparse.remove(e);
            }
        }
        Ok(Self::from_sparse(&self.field, self.nvars, sparse))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        crate::gfarith::check_same(&self.field, &other.field)?;
        let f = &self.field;
        let mut sparse = Sparse::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let slot = sparse.entry(e.clone()).or_insert(0);
                *slot = f.add(*slot, f.mul(*ca, *cb));
                if *slot == 0 {
                    sparse.remove(&e);
                }
            }
        }
        Ok(Self::from_sparse(f, self.nvars, sparse))
    }

    /// Formal partial derivative in variable `i`.
    pub fn partial(&self, i: usize) -> Self {
        let f = &self.field;
        let p = f.characteristic();
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[i] % p != 0)
            .map(|(e, c)| {
                let mut e2 = e.clone();
                e2[i] -= 1;
                (e2, f.mul(*c, e[i] % p))
            })
            .collect();
        MultiPoly {
            field: f.clone(),
            nvars: self.nvars,
            terms,
        }
    }

    /// Prepares evaluation at points whose coordinates lie in `target`.
    pub fn compile(&self, target: &Arc<FieldSpec>) -> Result<CompiledPoly> {
        let emb = Embedding::new(&self.field, target)?;
        let max_exp = self
            .terms
            .iter()
            .flat_map(|(e, _)| e.iter().copied())
            .max()
            .unwrap_or(0);
        Ok(CompiledPoly {
            field: target.clone(),
            nvars: self.nvars,
            max_exp: max_exp as usize,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), emb.apply(*c)))
                .collect(),
        })
    }

    /// Evaluates at a point (projective or affine tuple) over an extension.
    pub fn evaluate(&self, coords: &[u32], target: &Arc<FieldSpec>) -> Result<u32> {
        if coords.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: coords.len(),
            });
        }
        Ok(self.compile(target)?.eval(coords))
    }
}

/// A polynomial with coefficients already embedded in an evaluation field.
#[derive(Debug, Clone)]
pub struct CompiledPoly {
    field: Arc<FieldSpec>,
    nvars: usize,
    max_exp: usize,
    terms: Vec<(Vec<u32>, u32)>,
}

impl CompiledPoly {
    pub fn eval(&self, coords: &[u32]) -> u32 {
        let f = &*self.field;
        let mut powers = [[1u32; 8]; 4];
        for (v, &x) in coords.iter().enumerate().take(self.nvars) {
            for e in 1..=self.max_exp.min(7) {
                powers[v][e] = f.mul(powers[v][e - 1], x);
            }
        }
        let mut acc = 0;
        for (e, c) in &self.terms {
            let mut t = *c;
            for (v, &k) in e.iter().enumerate() {
                t = f.mul(
                    t,
                    if (k as usize) < 8 {
                        powers[v][k as usize]
                    } else {
                        f.pow(coords[v], k as u64)
                    },
                );
            }
            acc = f.add(acc, t);
        }
        acc
    }
}

/// A point of P^2 or P^3 with leftmost nonzero coordinate 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    field: Arc<FieldSpec>,
    coords: Vec<u32>,
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.field)
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with('a'))
    }
}

impl PartialOrd for ProjectivePoint {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ProjectivePoint {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl ProjectivePoint {
    /// Normalizes a nonzero coordinate vector.
    pub fn new(field: &Arc<FieldSpec>, coords: Vec<u32>) -> Result<Self> {
        let lead = coords
            .iter()
            .find(|&&c| c != 0)
            .copied()
            .ok_or_else(|| Error::Parse("projective point with all coordinates zero".into()))?;
        let inv = field.inv(lead)?;
        let coords = coords.into_iter().map(|c| field.mul(c, inv)).collect();
        Ok(ProjectivePoint {
            field: field.clone(),
            coords,
        })
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    /// Writes `(c1:c2:...)` with the field generator printed as `symbol`.
    pub fn format_with(&self, symbol: char) -> String {
        let parts: Vec<String> = self
            .coords
            .iter()
            .map(|&c| self.field.format_element(c, symbol))
            .collect();
        format!("({})", parts.join(":"))
    }

    /// Coordinate-wise x -> x^(p^s), which keeps the normalization.
    pub fn frobenius(&self, s: u32) -> Self {
        let coords = self
            .coords
            .iter()
            .map(|&c| self.field.frobenius(c, s))
            .collect();
        ProjectivePoint {
            field: self.field.clone(),
            coords,
        }
    }

    /// Maps the point into a larger field.
    pub fn embed(&self, target: &Arc<FieldSpec>) -> Result<Self> {
        let emb = Embedding::new(&self.field, target)?;
        Ok(ProjectivePoint {
            field: target.clone(),
            coords: self.coords.iter().map(|&c| emb.apply(c)).collect(),
        })
    }
}

/// Size of the Frobenius orbit of `point` under x -> x^q, where GF(q) = `base`.
pub fn point_degree(point: &ProjectivePoint, base: &FieldSpec) -> u32 {
    let s = base.degree();
    let mut image = point.frobenius(s);
    let mut d = 1;
    while image.coords != point.coords {
        image = image.frobenius(s);
        d += 1;
    }
    d
}

/// Raw orbit size for a normalized coordinate slice (no allocation beyond a
/// scratch buffer).
fn orbit_size(field: &FieldSpec, coords: &[u32], s: u32) -> u32 {
    let mut cur: Vec<u32> = coords.to_vec();
    let mut d = 0;
    loop {
        for c in cur.iter_mut() {
            *c = field.frobenius(*c, s);
        }
        d += 1;
        if cur == coords {
            return d;
        }
    }
}

/// One unit of enumeration work: all points whose leading 1 sits at `lead`
/// and, if there is a free coordinate after it, whose next coordinate is
/// `head`.
#[derive(Debug, Clone, Copy)]
struct Chunk {
    lead: usize,
    head: Option<u32>,
}

fn chunks(n: usize, q: u32) -> Vec<Chunk> {
    let mut out = Vec::new();
    for lead in (0..n).rev() {
        if lead + 1 == n {
            out.push(Chunk { lead, head: None });
        } else {
            out.extend((0..q).map(|h| Chunk {
                lead,
                head: Some(h),
            }));
        }
    }
    out
}

fn for_each_in_chunk(n: usize, q: u32, chunk: Chunk, mut visit: impl FnMut(&[u32])) {
    let mut coords = vec![0u32; n];
    coords[chunk.lead] = 1;
    let Some(head) = chunk.head else {
        visit(&coords);
        return;
    };
    coords[chunk.lead + 1] = head;
    let free = n - chunk.lead - 2;
    let total = (q as u64).pow(free as u32);
    for idx in 0..total {
        let mut rest = idx;
        for slot in coords[chunk.lead + 2..].iter_mut().rev() {
            *slot = (rest % q as u64) as u32;
            rest /= q as u64;
        }
        visit(&coords);
    }
}

/// Every point of P^dim over `field`, once each, in ascending lexicographic order.
pub fn enumerate_projective_points(dim: usize, field: &Arc<FieldSpec>) -> Vec<ProjectivePoint> {
    let n = dim + 1;
    let q = field.size() as u32;
    let mut out = Vec::new();
    for chunk in chunks(n, q) {
        for_each_in_chunk(n, q, chunk, |c| {
            out.push(ProjectivePoint {
                field: field.clone(),
                coords: c.to_vec(),
            })
        });
    }
    out
}

/// The two model shapes handled by direct enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProjectiveCurveModel {
    /// A homogeneous quartic F(x, y, z).
    PlaneQuartic(MultiPoly),
    /// A homogeneous cubic and quadric in x1..x4.
    SpaceCurve {
        cubic: MultiPoly,
        quadric: MultiPoly,
    },
}

impl ProjectiveCurveModel {
    pub fn plane_quartic(f: MultiPoly) -> Result<Self> {
        if f.nvars != 3 || f.homogeneous_degree() != Some(4) {
            return Err(Error::Parse(format!(
                "{f} is not a homogeneous quartic in x,y,z"
            )));
        }
        Ok(ProjectiveCurveModel::PlaneQuartic(f))
    }

    pub fn space_curve(cubic: MultiPoly, quadric: MultiPoly) -> Result<Self> {
        crate::gfarith::check_same(&cubic.field, &quadric.field)?;
        if cubic.nvars != 4 || cubic.homogeneous_degree() != Some(3) {
            return Err(Error::Parse(format!(
                "{cubic} is not a homogeneous cubic in x1..x4"
            )));
        }
        if quadric.nvars != 4 || quadric.homogeneous_degree() != Some(2) {
            return Err(Error::Parse(format!(
                "{quadric} is not a homogeneous quadric in x1..x4"
            )));
        }
        Ok(ProjectiveCurveModel::SpaceCurve { cubic, quadric })
    }

    /// Space curve without the degree checks, for degenerate inputs.
    pub fn space_curve_unchecked(cubic: MultiPoly, quadric: MultiPoly) -> Self {
        ProjectiveCurveModel::SpaceCurve { cubic, quadric }
    }

    /// Plane curve of any degree, for degenerate inputs.
    pub fn plane_unchecked(f: MultiPoly) -> Self {
        ProjectiveCurveModel::PlaneQuartic(f)
    }

    pub fn base_field(&self) -> &Arc<FieldSpec> {
        match self {
            ProjectiveCurveModel::PlaneQuartic(f) => &f.field,
            ProjectiveCurveModel::SpaceCurve { cubic, .. } => &cubic.field,
        }
    }

    /// Ambient projective dimension.
    pub fn dim(&self) -> usize {
        match self {
            ProjectiveCurveModel::PlaneQuartic(_) => 2,
            ProjectiveCurveModel::SpaceCurve { .. } => 3,
        }
    }

    pub fn equations(&self) -> Vec<&MultiPoly> {
        match self {
            ProjectiveCurveModel::PlaneQuartic(f) => vec![f],
            // The quadric goes first: it is cheaper and filters most points.
            ProjectiveCurveModel::SpaceCurve { cubic, quadric } => vec![quadric, cubic],
        }
    }

    /// Arithmetic genus of a smooth model: 3 for plane quartics, 4 for (2,3)
    /// complete intersections in P^3.
    pub fn smooth_genus(&self) -> u32 {
        match self {
            ProjectiveCurveModel::PlaneQuartic(f) => {
                let d = f.homogeneous_degree().unwrap_or(4);
                (d.saturating_sub(1)) * (d.saturating_sub(2)) / 2
            }
            ProjectiveCurveModel::SpaceCurve { .. } => 4,
        }
    }

    /// Extension field GF(q^m) of the base field.
    pub fn extension(&self, m: u32) -> Result<Arc<FieldSpec>> {
        let base = self.base_field();
        make_field(base.characteristic(), base.degree() * m)
    }

    fn compiled(&self, target: &Arc<FieldSpec>) -> Result<CompiledModel> {
        let eqs = self
            .equations()
            .into_iter()
            .map(|e| e.compile(target))
            .collect::<Result<_>>()?;
        let n = self.dim() + 1;
        let jac = self
            .equations()
            .into_iter()
            .map(|e| {
                (0..n)
                    .map(|i| e.partial(i).compile(target))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        Ok(CompiledModel {
            field: target.clone(),
            eqs,
            jac,
        })
    }

    /// Whether a point (in any extension of the base field) lies on the model.
    pub fn contains(&self, point: &ProjectivePoint) -> Result<bool> {
        if point.coords.len() != self.dim() + 1 {
            return Err(Error::DimensionMismatch {
                expected: self.dim() + 1,
                got: point.coords.len(),
            });
        }
        Ok(self.compiled(&point.field)?.on_curve(&point.coords))
    }
}

struct CompiledModel {
    field: Arc<FieldSpec>,
    eqs: Vec<CompiledPoly>,
    /// jac[i][j] = d eq_i / d x_j
    jac: Vec<Vec<CompiledPoly>>,
}

impl CompiledModel {
    fn on_curve(&self, coords: &[u32]) -> bool {
        self.eqs.iter().all(|e| e.eval(coords) == 0)
    }

    /// Rank of the Jacobian is below the number of equations.
    fn is_singular_at(&self, coords: &[u32]) -> bool {
        let f = &*self.field;
        let rows: Vec<Vec<u32>> = self
            .jac
            .iter()
            .map(|row| row.iter().map(|d| d.eval(coords)).collect())
            .collect();
        match rows.len() {
            1 => rows[0].iter().all(|&v| v == 0),
            2 => {
                let n = rows[0].len();
                (0..n).all(|i| {
                    (i + 1..n)
                        .all(|j| f.mul(rows[0][i], rows[1][j]) == f.mul(rows[0][j], rows[1][i]))
                })
            }
            _ => unreachable!("models have one or two equations"),
        }
    }
}

/// Runs `per_chunk` over every enumeration chunk of P^dim(field) in parallel,
/// returning results in chunk order.
fn map_chunks<T: Send>(
    dim: usize,
    field: &Arc<FieldSpec>,
    per_chunk: impl Fn(Chunk) -> T + Sync + Send,
) -> Vec<T> {
    let q = field.size() as u32;
    chunks(dim + 1, q).into_par_iter().map(per_chunk).collect()
}

/// Points over GF(q^m), m <= `m_probe`, where the Jacobian has rank below the
/// codimension. Each singular point is reported once, over the field of its
/// own degree. An empty result means the probe passed.
pub fn smoothness_probe(
    model: &ProjectiveCurveModel,
    m_probe: u32,
) -> Result<Vec<ProjectivePoint>> {
    let n = model.dim() + 1;
    let s = model.base_field().degree();
    let mut out = Vec::new();
    for m in 1..=m_probe {
        let field = model.extension(m)?;
        let compiled = model.compiled(&field)?;
        let q = field.size() as u32;
        let found = map_chunks(model.dim(), &field, |chunk| {
            let mut local = Vec::new();
            for_each_in_chunk(n, q, chunk, |c| {
                if compiled.on_curve(c)
                    && compiled.is_singular_at(c)
                    && orbit_size(&field, c, s) == m
                {
                    local.push(ProjectivePoint {
                        field: field.clone(),
                        coords: c.to_vec(),
                    });
                }
            });
            local
        });
        out.extend(found.into_iter().flatten());
    }
    Ok(out)
}

/// N_m for m = 1..=m_max on a model that survives the smoothness probe at
/// depth `probe_depth`.
pub fn curve_point_counts(
    model: &ProjectiveCurveModel,
    m_max: u32,
    probe_depth: u32,
) -> Result<Vec<u64>> {
    let singular = smoothness_probe(model, probe_depth)?;
    if !singular.is_empty() {
        return Err(Error::Singular(singular));
    }
    (1..=m_max).map(|m| count_points(model, m)).collect()
}

/// Number of points over GF(q^m) on the model (no smoothness requirement).
pub fn count_points(model: &ProjectiveCurveModel, m: u32) -> Result<u64> {
    let field = model.extension(m)?;
    let compiled = model.compiled(&field)?;
    let n = model.dim() + 1;
    let q = field.size() as u32;
    let counts = map_chunks(model.dim(), &field, |chunk| {
        let mut local = 0u64;
        for_each_in_chunk(n, q, chunk, |c| {
            if compiled.on_curve(c) {
                local += 1;
            }
        });
        local
    });
    Ok(counts.into_iter().sum())
}

/// All points over GF(q^m) on the model, ascending.
pub fn rational_points(model: &ProjectiveCurveModel, m: u32) -> Result<Vec<ProjectivePoint>> {
    let field = model.extension(m)?;
    let compiled = model.compiled(&field)?;
    let n = model.dim() + 1;
    let q = field.size() as u32;
    let found = map_chunks(model.dim(), &field, |chunk| {
        let mut local = Vec::new();
        for_each_in_chunk(n, q, chunk, |c| {
            if compiled.on_curve(c) {
                local.push(ProjectivePoint {
                    field: field.clone(),
                    coords: c.to_vec(),
                });
            }
        });
        local
    });
    Ok(found.into_iter().flatten().collect())
}

/// Least d <= `d_max` such that the model has a point of degree exactly d,
/// with the lexicographically smallest such point over GF(q^d).
pub fn min_point_degree(
    model: &ProjectiveCurveModel,
    d_max: u32,
) -> Result<Option<(u32, ProjectivePoint)>> {
    let n = model.dim() + 1;
    let s = model.base_field().degree();
    for d in 1..=d_max {
        let field = model.extension(d)?;
        let compiled = model.compiled(&field)?;
        let q = field.size() as u32;
        let firsts = map_chunks(model.dim(), &field, |chunk| {
            let mut first = None;
            for_each_in_chunk(n, q, chunk, |c| {
                if first.is_none() && compiled.on_curve(c) && orbit_size(&field, c, s) == d {
                    first = Some(c.to_vec());
                }
            });
            first
        });
        if let Some(coords) = firsts.into_iter().flatten().next() {
            return Ok(Some((d, ProjectivePoint { field, coords })));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32, k: u32) -> Arc<FieldSpec> {
        make_field(p, k).unwrap()
    }

    fn space(cubic: &str, quadric: &str) -> ProjectiveCurveModel {
        let f = gf(2, 1);
        ProjectiveCurveModel::space_curve(
            MultiPoly::parse(cubic, &f, 4).unwrap(),
            MultiPoly::parse(quadric, &f, 4).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn enumeration_sizes_and_order() {
        assert_eq!(enumerate_projective_points(2, &gf(2, 1)).len(), 7);
        assert_eq!(enumerate_projective_points(3, &gf(2, 1)).len(), 15);
        let pts = enumerate_projective_points(3, &gf(2, 4));
        assert_eq!(pts.len(), 4369);
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(pts[0].coords(), &[0, 0, 0, 1]);
        let p2_gf3 = enumerate_projective_points(2, &gf(3, 1));
        assert_eq!(p2_gf3.len(), 13);
    }

    #[test]
    fn point_normalization() {
        let f4 = gf(2, 2);
        let p = ProjectivePoint::new(&f4, vec![0, 2, 3, 0]).unwrap();
        assert_eq!(p.coords(), &[0, 1, f4.mul(3, f4.inv(2).unwrap()), 0]);
        assert!(ProjectivePoint::new(&f4, vec![0, 0, 0]).is_err());
    }

    #[test]
    fn point_degrees() {
        let f2 = gf(2, 1);
        let f4 = gf(2, 2);
        let f8 = gf(2, 3);
        let e = ProjectivePoint::new(&gf(2, 6), vec![1, 0, 0, 0]).unwrap();
        assert_eq!(point_degree(&e, &f2), 1);
        let alpha_pt = ProjectivePoint::new(&f4, vec![1, 0, 2, 1]).unwrap();
        assert_eq!(point_degree(&alpha_pt, &f2), 2);
        let beta = 2;
        let beta3 = f8.pow(beta, 3);
        let beta_pt = ProjectivePoint::new(&f8, vec![beta, 0, beta3, 1]).unwrap();
        assert_eq!(point_degree(&beta_pt, &f2), 3);
        // Over GF(4) itself, a GF(4)-point has degree 1.
        assert_eq!(point_degree(&alpha_pt, &f4), 1);
    }

    #[test]
    fn evaluation_examples() {
        let f2 = gf(2, 1);
        let c1 = MultiPoly::parse("x2^3+x1x3^2+x4^3+x1^2x3+x3x4^2", &f2, 4).unwrap();
        let q1 = MultiPoly::parse("x1x2+x3x4", &f2, 4).unwrap();
        let x1 = MultiPoly::variable(&f2, 4, 0);
        assert_eq!(c1.evaluate(&[1, 0, 0, 0], &f2).unwrap(), 0);
        assert_eq!(q1.evaluate(&[1, 0, 0, 0], &f2).unwrap(), 0);
        assert_eq!(x1.evaluate(&[1, 0, 0, 0], &f2).unwrap(), 1);
        assert!(matches!(
            x1.evaluate(&[1, 0, 0], &f2),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn partial_derivatives_in_char_two() {
        let f2 = gf(2, 1);
        let c = MultiPoly::parse("x1^3+x1^2x2+x2x3^2", &f2, 4).unwrap();
        assert_eq!(c.partial(0), MultiPoly::parse("x1^2", &f2, 4).unwrap());
        assert_eq!(c.partial(2), MultiPoly::parse("0", &f2, 4).unwrap());
    }

    #[test]
    fn nodal_cubic_is_singular_at_origin() {
        let f2 = gf(2, 1);
        let nodal = MultiPoly::parse("y^2z - x^3 - x^2z", &f2, 3).unwrap();
        let model = ProjectiveCurveModel::plane_unchecked(nodal);
        let sing = smoothness_probe(&model, 3).unwrap();
        assert!(sing.iter().any(|p| p.coords() == [0, 0, 1]));
    }

    #[test]
    fn degenerate_space_curve_rejected() {
        let f2 = gf(2, 1);
        let model = ProjectiveCurveModel::space_curve_unchecked(
            MultiPoly::parse("x1^3", &f2, 4).unwrap(),
            MultiPoly::parse("x1^2", &f2, 4).unwrap(),
        );
        assert!(matches!(
            curve_point_counts(&model, 2, 2),
            Err(Error::Singular(_))
        ));
    }

    #[test]
    fn first_family_row_has_rational_point() {
        let model = space("x2^3+x1x3^2+x4^3+x1^2x3+x3x4^2", "x1x2+x3x4");
        let (d, _) = min_point_degree(&model, 4).unwrap().unwrap();
        assert_eq!(d, 1);
    }

    #[test]
    fn counts_agree_with_orbit_census() {
        // Every point over GF(2^m) has degree dividing m.
        let model = space(
            "x2^3+x1x3^2+x2^2x3+x2^2x4+x1^3+x3^2x4+x1^2x2+x2x4^2",
            "x1^2+x1x2+x1x3+x3^2+x1x4+x2x4+x4^2",
        );
        let f2 = gf(2, 1);
        for m in 1..=4 {
            let pts = rational_points(&model, m).unwrap();
            assert_eq!(pts.len() as u64, count_points(&model, m).unwrap());
            assert!(pts.iter().all(|p| m % point_degree(p, &f2) == 0));
        }
    }

    #[test]
    fn frobenius_keeps_points_on_curve() {
        let model = space("x2^3+x1x3^2+x4^3+x1^2x3+x3x4^2", "x1x2+x3x4+x4^2");
        let pts = rational_points(&model, 4).unwrap();
        for p in &pts {
            let img = p.frobenius(1);
            assert!(model.contains(&img).unwrap());
            assert!(pts.binary_search(&img).is_ok());
        }
    }
}
