//! Macdonald symmetric functions at concrete rational `(q, t)`.
//!
//! Homogeneous symmetric functions of degree `d` are stored as coefficient
//! maps over the partitions of `d`. The `(q,t)` inner product is diagonal on
//! power sums; monomial vectors are moved to that basis through the
//! power-sum/monomial transition, which depends only on `d` and is cached.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};
use std::time::Instant;

use num_traits::{One, Zero};

use crate::algebra::{determinant, rat, LaurentPoly, Matrix, Monomial, Rational, Ring};
use crate::characters::{sample_point, theorem_rhs, CharFamily};
use crate::combinatorics::{enumerate_partitions_in_box, enumerate_z, partitions_of, Partition};
use crate::error::{usage, Error, Result};
use crate::report::{Mode, VerifyReport};
use crate::rng::Sampler;

/// Largest weight handled by default.
pub const DEFAULT_DEGREE_BOUND: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Basis {
    PowerSum,
    Monomial,
}

/// A homogeneous symmetric function of a fixed degree.
#[derive(Clone, Debug, PartialEq)]
pub struct SymFuncExpansion {
    pub basis: Basis,
    pub degree: usize,
    pub coeffs: BTreeMap<Partition, Rational>,
}

impl SymFuncExpansion {
    pub fn new(basis: Basis, degree: usize) -> Self {
        SymFuncExpansion {
            basis,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis_element(basis: Basis, lambda: &Partition) -> Self {
        let mut f = Self::new(basis, lambda.weight());
        f.coeffs.insert(lambda.clone(), Rational::one());
        f
    }

    pub fn coefficient(&self, lambda: &Partition) -> Rational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::new(self.basis, self.degree);
        if !c.is_zero() {
            out.coeffs = self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        }
        out
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &Self, c: &Rational) -> Result<Self> {
        if self.basis != other.basis || self.degree != other.degree {
            return usage("expansions differ in basis or degree");
        }
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            let entry = out.coeffs.entry(k.clone()).or_insert_with(Rational::zero);
            *entry += v * c;
            if entry.is_zero() {
                out.coeffs.remove(k);
            }
        }
        Ok(out)
    }
}

/// Concrete values of the two parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QtParams {
    pub q: Rational,
    pub t: Rational,
}

fn pow(x: &Rational, e: usize) -> Rational {
    num_traits::pow(x.clone(), e)
}

impl QtParams {
    pub fn new(q: Rational, t: Rational) -> Self {
        QtParams { q, t }
    }

    /// Whether every denominator met up to weight `degree` is nonzero:
    /// `1 - t^r` for `r <= degree`, and the arm/leg factors
    /// `1 - q^{a+1} t^l`, `1 - q^a t^{l+1}` with `a + l < degree`.
    pub fn is_admissible(&self, degree: usize) -> bool {
        let one = Rational::one();
        (1..=degree).all(|r| pow(&self.t, r) != one)
            && (0..degree).all(|a| {
                (0..degree - a).all(|l| {
                    pow(&self.q, a + 1) * pow(&self.t, l) != one && pow(&self.q, a) * pow(&self.t, l + 1) != one
                })
            })
    }

    pub fn check(&self, degree: usize) -> Result<()> {
        if self.is_admissible(degree) {
            Ok(())
        } else {
            Err(Error::InadmissibleParameter(format!(
                "(q, t) = ({}, {}) hits a pole below weight {degree}",
                self.q, self.t
            )))
        }
    }

    /// `q, t` in `(0, 1)` with 16-bit numerators and denominators, resampled
    /// until admissible.
    pub fn sample(sampler: &mut Sampler, degree: usize) -> Result<Self> {
        for _ in 0..crate::characters::MAX_RESAMPLES {
            let p = QtParams::new(sampler.unit_interval(16), sampler.unit_interval(16));
            if p.is_admissible(degree) {
                return Ok(p);
            }
        }
        Err(Error::InadmissibleParameter("no admissible (q, t) sample".into()))
    }
}

/// `z_lambda = prod_i i^{m_i} m_i!`.
pub fn z_lambda(lambda: &Partition) -> Rational {
    let mut z = Rational::one();
    for (i, &m) in lambda.multiplicities().iter().enumerate() {
        for k in 1..=m {
            z *= rat(((i + 1) * k) as i64, 1);
        }
    }
    z
}

/// `<p_lambda, p_lambda>_{q,t}`.
pub fn p_norm(lambda: &Partition, params: &QtParams) -> Result<Rational> {
    let one = Rational::one();
    let mut acc = z_lambda(lambda);
    for &part in lambda.parts() {
        let den = &one - pow(&params.t, part);
        if den.is_zero() {
            return Err(Error::InadmissibleParameter(format!("1 - t^{part} vanishes")));
        }
        acc *= (&one - pow(&params.q, part)) / den;
    }
    Ok(acc)
}

pub fn inner_product_p(lambda: &Partition, mu: &Partition, params: &QtParams) -> Result<Rational> {
    if lambda != mu {
        return Ok(Rational::zero());
    }
    p_norm(lambda, params)
}

/// `p_lambda` in the monomial basis, by multiplying power sums out in
/// `|lambda|` variables and reading off the dominant monomials.
pub fn expand_p_in_m(lambda: &Partition) -> SymFuncExpansion {
    let d = lambda.weight();
    let nv = d.max(1);
    let mut prod = LaurentPoly::one(nv);
    for &r in lambda.parts() {
        let mut pr = LaurentPoly::zero(nv);
        for v in 0..nv {
            pr = pr.add(&LaurentPoly::var_pow_half(nv, v, 2 * r as i32));
        }
        prod = prod.mul(&pr);
    }
    let mut out = SymFuncExpansion::new(Basis::Monomial, d);
    for mu in partitions_of(d) {
        let exps: Vec<i32> = mu.padded(nv).iter().map(|&e| 2 * e as i32).collect();
        let c = prod.coefficient(&Monomial(exps));
        if !c.is_zero() {
            out.coeffs.insert(mu, c);
        }
    }
    out
}

/// Change of basis between power sums and monomials in one weight.
#[derive(Debug)]
pub struct Transition {
    pub partitions: Vec<Partition>,
    /// `p_{partitions[a]} = sum_b to_m[a][b] m_{partitions[b]}`.
    pub to_m: Vec<Vec<Rational>>,
    /// `m_{partitions[a]} = sum_b to_p[a][b] p_{partitions[b]}`.
    pub to_p: Vec<Vec<Rational>>,
}

fn invert(m: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::Internal("singular transition matrix".into()))?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
    }
    Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

impl Transition {
    fn build(d: usize) -> Result<Self> {
        let partitions = partitions_of(d);
        let to_m: Vec<Vec<Rational>> = partitions
            .iter()
            .map(|lambda| {
                let e = expand_p_in_m(lambda);
                partitions.iter().map(|mu| e.coefficient(mu)).collect()
            })
            .collect();
        let to_p = invert(&to_m)?;
        Ok(Transition {
            partitions,
            to_m,
            to_p,
        })
    }

    pub fn index(&self, lambda: &Partition) -> Option<usize> {
        self.partitions.iter().position(|p| p == lambda)
    }
}

type TransitionCache = RwLock<HashMap<usize, Arc<Transition>>>;

fn cache() -> &'static TransitionCache {
    static CACHE: OnceLock<TransitionCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The transition for weight `d`, built once per process.
pub fn transition(d: usize) -> Result<Arc<Transition>> {
    if let Some(t) = cache().read().expect("transition cache poisoned").get(&d) {
        return Ok(t.clone());
    }
    let mut guard = cache().write().expect("transition cache poisoned");
    if let Some(t) = guard.get(&d) {
        return Ok(t.clone());
    }
    let built = Arc::new(Transition::build(d)?);
    guard.insert(d, built.clone());
    Ok(built)
}

/// Re-express a monomial expansion over power sums.
pub fn to_power_sums(f: &SymFuncExpansion) -> Result<SymFuncExpansion> {
    if f.basis == Basis::PowerSum {
        return Ok(f.clone());
    }
    let tr = transition(f.degree)?;
    let mut out = SymFuncExpansion::new(Basis::PowerSum, f.degree);
    for (mu, c) in &f.coeffs {
        let a = tr.index(mu).ok_or_else(|| Error::Usage(format!("{mu} has the wrong weight")))?;
        for (b, rho) in tr.partitions.iter().enumerate() {
            let v = &tr.to_p[a][b];
            if !v.is_zero() {
                *out.coeffs.entry(rho.clone()).or_insert_with(Rational::zero) += c * v;
            }
        }
    }
    out.coeffs.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// Re-express a power-sum expansion over monomials.
pub fn to_monomials(f: &SymFuncExpansion) -> Result<SymFuncExpansion> {
    if f.basis == Basis::Monomial {
        return Ok(f.clone());
    }
    let tr = transition(f.degree)?;
    let mut out = SymFuncExpansion::new(Basis::Monomial, f.degree);
    for (rho, c) in &f.coeffs {
        let a = tr.index(rho).ok_or_else(|| Error::Usage(format!("{rho} has the wrong weight")))?;
        for (b, mu) in tr.partitions.iter().enumerate() {
            let v = &tr.to_m[a][b];
            if !v.is_zero() {
                *out.coeffs.entry(mu.clone()).or_insert_with(Rational::zero) += c * v;
            }
        }
    }
    out.coeffs.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// `<f, g>_{q,t}`.
pub fn inner_product(f: &SymFuncExpansion, g: &SymFuncExpansion, params: &QtParams) -> Result<Rational> {
    if f.degree != g.degree {
        return Ok(Rational::zero());
    }
    let (fp, gp) = (to_power_sums(f)?, to_power_sums(g)?);
    let mut acc = Rational::zero();
    for (rho, c) in &fp.coeffs {
        if let Some(d) = gp.coeffs.get(rho) {
            acc += c * d * p_norm(rho, params)?;
        }
    }
    Ok(acc)
}

/// `P_lambda` for every `lambda` of weight `d`, by Gram-Schmidt on the
/// monomial basis taken in increasing lexicographic order, which refines
/// dominance.
pub fn macdonald_basis(d: usize, params: &QtParams) -> Result<Vec<(Partition, SymFuncExpansion)>> {
    params.check(d)?;
    let mut order = partitions_of(d);
    order.reverse();
    let mut done: Vec<(Partition, SymFuncExpansion, Rational)> = Vec::with_capacity(order.len());
    for lambda in order {
        let m = SymFuncExpansion::basis_element(Basis::Monomial, &lambda);
        let mut p = m.clone();
        for (_, q, norm) in &done {
            let c = inner_product(&m, q, params)? / norm;
            p = p.add_scaled(q, &-c)?;
        }
        let norm = inner_product(&p, &p, params)?;
        if norm.is_zero() {
            return Err(Error::InadmissibleParameter(format!(
                "degenerate Gram matrix at {lambda} for (q, t) = ({}, {})",
                params.q, params.t
            )));
        }
        done.push((lambda, p, norm));
    }
    Ok(done.into_iter().map(|(l, p, _)| (l, p)).collect())
}

pub fn macdonald_p(lambda: &Partition, params: &QtParams) -> Result<SymFuncExpansion> {
    let d = lambda.weight();
    if d > DEFAULT_DEGREE_BOUND {
        return Err(Error::Capability(format!(
            "weight {d} exceeds the degree bound {DEFAULT_DEGREE_BOUND}"
        )));
    }
    macdonald_basis(d, params)?
        .into_iter()
        .find(|(l, _)| l == lambda)
        .map(|(_, p)| p)
        .ok_or_else(|| Error::Internal(format!("{lambda} missing from its weight")))
}

/// `prod_c (1 - q^{a(c)} t^{l(c)+1}) / (1 - q^{a(c)+1} t^{l(c)})`.
pub fn b_lambda(lambda: &Partition, params: &QtParams) -> Result<Rational> {
    let one = Rational::one();
    let conj = lambda.conjugate();
    let mut acc = Rational::one();
    for i in 1..=lambda.length() {
        for j in 1..=lambda.part(i) {
            let a = lambda.part(i) - j;
            let l = conj.part(j) - i;
            let den = &one - pow(&params.q, a + 1) * pow(&params.t, l);
            if den.is_zero() {
                return Err(Error::InadmissibleParameter(format!("arm/leg factor at ({i},{j}) vanishes")));
            }
            acc *= (&one - pow(&params.q, a) * pow(&params.t, l + 1)) / den;
        }
    }
    Ok(acc)
}

pub fn macdonald_q(lambda: &Partition, params: &QtParams) -> Result<SymFuncExpansion> {
    let p = macdonald_p(lambda, params)?;
    Ok(p.scale(&b_lambda(lambda, params)?))
}

/// `m_mu` at a point: the sum of `x^alpha` over distinct rearrangements
/// `alpha` of `mu` padded with zeros.
pub fn eval_monomial(mu: &Partition, point: &[Rational]) -> Rational {
    if mu.length() > point.len() {
        return Rational::zero();
    }
    fn go(counts: &mut BTreeMap<usize, usize>, point: &[Rational], idx: usize, acc: &Rational, out: &mut Rational) {
        if idx == point.len() {
            *out += acc;
            return;
        }
        let keys: Vec<usize> = counts.iter().filter(|(_, &c)| c > 0).map(|(&k, _)| k).collect();
        for k in keys {
            *counts.get_mut(&k).expect("present") -= 1;
            go(counts, point, idx + 1, &(acc * pow(&point[idx], k)), out);
            *counts.get_mut(&k).expect("present") += 1;
        }
    }
    let mut counts = BTreeMap::new();
    for e in mu.padded(point.len()) {
        *counts.entry(e).or_insert(0) += 1;
    }
    let mut out = Rational::zero();
    go(&mut counts, point, 0, &Rational::one(), &mut out);
    out
}

pub fn evaluate_symfunc(f: &SymFuncExpansion, point: &[Rational]) -> Result<Rational> {
    let m = to_monomials(f)?;
    Ok(m.coeffs.iter().map(|(mu, c)| c * eval_monomial(mu, point)).sum())
}

/// `(a; q)_k = (1 - a)(1 - aq) ... (1 - aq^{k-1})`.
pub fn q_pochhammer(a: &Rational, q: &Rational, k: usize) -> Rational {
    let one = Rational::one();
    (0..k).map(|i| &one - a * pow(q, i)).product()
}

/// `(t^n; q)_{s-1} (t; t)_{n-1} / ((q; q)_{s-1} (t q^{s-1}; t)_{n-1})`.
pub fn corollary_prefactor(s: usize, n: usize, params: &QtParams) -> Result<Rational> {
    let (q, t) = (&params.q, &params.t);
    let num = q_pochhammer(&pow(t, n), q, s - 1) * q_pochhammer(t, t, n - 1);
    let den = q_pochhammer(q, q, s - 1) * q_pochhammer(&(t * pow(q, s - 1)), t, n - 1);
    if den.is_zero() {
        return Err(Error::InadmissibleParameter("prefactor denominator vanishes".into()));
    }
    Ok(num / den)
}

/// `prod_{lambda in the (s-1)^n box} b_lambda`.
pub fn box_b_product(s: usize, n: usize, params: &QtParams) -> Result<Rational> {
    enumerate_partitions_in_box(s - 1, n)
        .iter()
        .try_fold(Rational::one(), |acc, l| Ok(acc * b_lambda(l, params)?))
}

/// Reports, in order: the `P` determinant; the `Q` determinant with the
/// closed-form prefactor; the `Q` determinant with the product of the
/// `b_lambda` over the box; the closed-form prefactor against that product.
pub fn verify_corollary_macdonald(s: usize, n: usize, params: &QtParams, seed: u64) -> Result<Vec<VerifyReport>> {
    if s == 0 || n == 0 {
        return usage("s and n must be positive");
    }
    let degree = (s - 1) * n;
    if degree > DEFAULT_DEGREE_BOUND {
        return Err(Error::Capability(format!(
            "(s - 1) n = {degree} exceeds the degree bound {DEFAULT_DEGREE_BOUND}"
        )));
    }
    params.check(degree.max(1))?;
    let start = Instant::now();
    let mode = Mode::Numeric { seed };
    let xs = sample_point(&mut Sampler::new(seed), s * n)?;
    let grid = crate::characters::VariableGrid::new(s, n);
    let rows = enumerate_partitions_in_box(s - 1, n);
    let cols = enumerate_z(s, n, false);
    let points = cols
        .iter()
        .map(|mu| {
            Ok(crate::characters::specialize_x(mu, grid)?
                .iter()
                .map(|&v| xs[v].clone())
                .collect())
        })
        .collect::<Result<Vec<Vec<Rational>>>>()?;

    let mut bases: BTreeMap<usize, Vec<(Partition, SymFuncExpansion)>> = BTreeMap::new();
    for lambda in &rows {
        if let Entry::Vacant(slot) = bases.entry(lambda.weight()) {
            slot.insert(macdonald_basis(lambda.weight(), params)?);
        }
    }
    let p_of = |lambda: &Partition| -> &SymFuncExpansion {
        &bases[&lambda.weight()]
            .iter()
            .find(|(l, _)| l == lambda)
            .expect("every partition of the weight is present")
            .1
    };

    let p_cells = rows
        .iter()
        .map(|lambda| points.iter().map(|x| evaluate_symfunc(p_of(lambda), x)).collect())
        .collect::<Result<Vec<Vec<Rational>>>>()?;
    let b: Vec<Rational> = rows.iter().map(|l| b_lambda(l, params)).collect::<Result<_>>()?;
    let q_cells: Vec<Vec<Rational>> = p_cells
        .iter()
        .zip(&b)
        .map(|(row, bl)| row.iter().map(|v| v * bl).collect())
        .collect();

    let det_p = determinant(&Matrix::from_rows((), p_cells)?)?;
    let det_q = determinant(&Matrix::from_rows((), q_cells)?)?;
    let product = theorem_rhs(CharFamily::Gl, s, n, &xs);
    let prefactor = corollary_prefactor(s, n, params)?;
    let b_product: Rational = b.iter().product();

    let base = |identity: &str| {
        VerifyReport::new(identity, s, n, mode)
            .param("q", &params.q)
            .param("t", &params.t)
    };
    Ok(vec![
        base("macdonald-p").sides(&det_p, &product).timed(start),
        base("macdonald-q")
            .sides(&det_q, &(&prefactor * &product))
            .with_detail(format!("product of b over the box: {b_product}; closed-form prefactor: {prefactor}"))
            .timed(start),
        base("macdonald-q-box")
            .sides(&det_q, &(&b_product * &product))
            .timed(start),
        base("macdonald-prefactor")
            .sides(&b_product, &prefactor)
            .with_detail(format!(
                "closed-form prefactor equals b of the full box: {}",
                b_lambda(&Partition::new(vec![s - 1; n])?, params)? == prefactor
            ))
            .timed(start),
    ])
}
