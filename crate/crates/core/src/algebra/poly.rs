//! Sparse multivariate Laurent polynomials over the rationals.
//!
//! Exponents are stored in half-units: the stored value is twice the
//! mathematical power, so `x^(1/2)` is the exponent vector `[1]` and `x^2`
//! is `[4]`. Terms live in a `BTreeMap` keyed by the exponent vector, whose
//! derived ordering is exactly the lex order with `x1 >> x2 >> ...`; the
//! leading term is therefore the last entry.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{canonical, pow_half, Rational};
use super::ring::Ring;
use crate::error::{domain, usage, Error, Result};

/// Exponent vector in half-units.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<i32>);

impl Monomial {
    pub fn unit(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn exponents_half(&self) -> &[i32] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            match (e % 2 == 0, e / 2) {
                (true, 1) => {}
                (true, p) if p > 0 => write!(f, "^{p}")?,
                (true, p) => write!(f, "^({p})")?,
                (false, _) => write!(f, "^({e}/2)")?,
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    num_vars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl LaurentPoly {
    pub fn zero(num_vars: usize) -> Self {
        LaurentPoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, Rational::one())
    }

    pub fn constant(num_vars: usize, c: Rational) -> Self {
        Self::term(Monomial::unit(num_vars), c)
    }

    /// The single term `c * m`; `num_vars` is taken from `m`.
    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        let num_vars = m.len();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { num_vars, terms }
    }

    /// `x_var` (0-based variable index).
    pub fn var(num_vars: usize, var: usize) -> Self {
        Self::var_pow_half(num_vars, var, 2)
    }

    /// `x_var^(e_half / 2)`.
    pub fn var_pow_half(num_vars: usize, var: usize, e_half: i32) -> Self {
        assert!(var < num_vars, "variable index {var} out of range");
        let mut m = Monomial::unit(num_vars);
        m.0[var] = e_half;
        Self::term(m, Rational::one())
    }

    /// Builds a polynomial from `(half-unit exponents, coefficient)` pairs,
    /// merging duplicates and dropping zeros.
    pub fn from_terms<I>(num_vars: usize, items: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i32>, Rational)>,
    {
        let mut p = Self::zero(num_vars);
        for (exps, c) in items {
            if exps.len() != num_vars {
                return usage(format!(
                    "monomial of length {} in a ring of {num_vars} variables",
                    exps.len()
                ));
            }
            p.add_term(Monomial(exps), c);
        }
        Ok(p)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// True when every stored exponent is even, i.e. no half powers occur.
    pub fn is_integral_exponent(&self) -> bool {
        self.terms.keys().all(|m| m.0.iter().all(|e| e % 2 == 0))
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_unit().then(|| c.clone())
            }
            _ => None,
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same_ring(&self, other: &Self) -> Result<()> {
        if self.num_vars != other.num_vars {
            return usage(format!(
                "polynomials live in rings of {} and {} variables",
                self.num_vars, other.num_vars
            ));
        }
        Ok(())
    }

    /// Checked ring operation; fails only on mismatched variable counts.
    pub fn arith(&self, other: &Self, op: ArithOp) -> Result<Self> {
        self.check_same_ring(other)?;
        Ok(match op {
            ArithOp::Add => self.add_poly(other),
            ArithOp::Sub => self.sub_poly(other),
            ArithOp::Mul => self.mul_poly(other),
        })
    }

    fn add_poly(&self, other: &Self) -> Self {
        let (big, small) = if self.terms.len() >= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    fn sub_poly(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    fn mul_poly(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.num_vars);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let prod = ca * cb;
                acc.entry(ma.mul(mb))
                    .and_modify(|c| *c += &prod)
                    .or_insert(prod);
            }
        }
        LaurentPoly {
            num_vars: self.num_vars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.num_vars);
        }
        LaurentPoly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        LaurentPoly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.num_vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_poly(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_poly(&base);
            }
        }
        result
    }

    /// Greatest term under lex order with `x1 >> x2 >> ...`.
    pub fn leading_term(&self) -> Result<(Monomial, Rational)> {
        self.terms
            .iter()
            .next_back()
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or_else(|| Error::Domain("leading term of the zero polynomial".into()))
    }

    /// Exact value at `point`. Half powers need the coordinate to be a
    /// rational square; negative powers need it nonzero.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.num_vars {
            return usage(format!(
                "point of length {} for a ring of {} variables",
                point.len(),
                self.num_vars
            ));
        }
        let mut cache: HashMap<(usize, i32), Rational> = HashMap::new();
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for (var, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let factor = match cache.get(&(var, e)) {
                    Some(v) => v.clone(),
                    None => {
                        let v = pow_half(&point[var], e).map_err(|err| {
                            Error::Domain(format!("variable x{}: {err}", var + 1))
                        })?;
                        cache.insert((var, e), v.clone());
                        v
                    }
                };
                value *= factor;
            }
            total += value;
        }
        Ok(total)
    }

    /// Replaces each variable `x_i` by the polynomial `images[i]`. Only
    /// non-negative integral exponents are supported.
    pub fn substitute(&self, images: &[LaurentPoly]) -> Result<LaurentPoly> {
        if images.len() != self.num_vars {
            return usage("substitution needs one image per variable");
        }
        let target_vars = images.first().map_or(0, |p| p.num_vars);
        let mut out = LaurentPoly::zero(target_vars);
        for (m, c) in &self.terms {
            let mut t = LaurentPoly::constant(target_vars, c.clone());
            for (var, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if e < 0 || e % 2 != 0 {
                    return domain("substitution of a negative or half power");
                }
                t = t.mul_poly(&images[var].pow((e / 2) as u32));
            }
            out = out.add_poly(&t);
        }
        Ok(out)
    }

    /// Exact quotient in the Laurent ring. Fails with an internal error when
    /// `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        self.check_same_ring(divisor)?;
        if divisor.is_zero() {
            return domain("division by the zero polynomial");
        }
        if self.is_zero() {
            return Ok(Self::zero(self.num_vars));
        }
        if divisor.terms.len() == 1 {
            let (m, c) = divisor.terms.iter().next().unwrap();
            let inv = c.recip();
            return Ok(LaurentPoly {
                num_vars: self.num_vars,
                terms: self
                    .terms
                    .iter()
                    .map(|(k, v)| (k.div(m), v * &inv))
                    .collect(),
            });
        }
        // Every quotient monomial lies in the box bounded per variable by
        // the extreme exponents of dividend and divisor, so the loop below
        // terminates: each step removes the current leading term and only
        // adds strictly smaller ones.
        let (lo_a, hi_a) = self.exponent_range();
        let (lo_d, hi_d) = divisor.exponent_range();
        let lo: Vec<i32> = lo_a.iter().zip(&lo_d).map(|(a, d)| a - d).collect();
        let hi: Vec<i32> = hi_a.iter().zip(&hi_d).map(|(a, d)| a - d).collect();
        let not_exact = || Error::Internal("polynomial division is not exact".into());
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return Err(not_exact());
        }
        let (lead_m, lead_c) = divisor.leading_term()?;
        let lead_inv = lead_c.recip();
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((m, c)) = rem.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = m.div(&lead_m);
            if qm.0.iter().zip(lo.iter().zip(&hi)).any(|(e, (l, h))| e < l || e > h) {
                return Err(not_exact());
            }
            let qc = &c * &lead_inv;
            for (dm, dc) in &divisor.terms {
                let key = qm.mul(dm);
                let delta = &qc * dc;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(-delta);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() -= delta;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
            quot.insert(qm, qc);
        }
        Ok(LaurentPoly {
            num_vars: self.num_vars,
            terms: quot,
        })
    }

    fn exponent_range(&self) -> (Vec<i32>, Vec<i32>) {
        let mut lo = vec![i32::MAX; self.num_vars];
        let mut hi = vec![i32::MIN; self.num_vars];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                lo[i] = lo[i].min(e);
                hi[i] = hi[i].max(e);
            }
        }
        (lo, hi)
    }

    /// Canonical text: terms from the lex-greatest down, `num/den*monomial`,
    /// joined by ` + `. The zero polynomial prints as `0/1`.
    pub fn canonical_text(&self) -> String {
        if self.terms.is_empty() {
            return "0/1".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                if m.is_unit() {
                    canonical(c)
                } else {
                    format!("{}*{}", canonical(c), m)
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_text())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({})", self.num_vars, self.canonical_text())
    }
}

impl Ring for LaurentPoly {
    type Ctx = usize;

    fn ctx(&self) -> usize {
        self.num_vars
    }
    fn zero_in(ctx: usize) -> Self {
        LaurentPoly::zero(ctx)
    }
    fn one_in(ctx: usize) -> Self {
        LaurentPoly::one(ctx)
    }
    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.num_vars, other.num_vars);
        self.add_poly(other)
    }
    fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.num_vars, other.num_vars);
        self.sub_poly(other)
    }
    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.num_vars, other.num_vars);
        self.mul_poly(other)
    }
    fn neg(&self) -> Self {
        self.scale(&-<Rational as One>::one())
    }
    fn div_exact(&self, other: &Self) -> Result<Self> {
        LaurentPoly::div_exact(self, other)
    }
    fn canonical(&self) -> String {
        self.canonical_text()
    }
    fn from_rational(ctx: usize, c: &Rational) -> Self {
        LaurentPoly::constant(ctx, c.clone())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.arith(rhs, ArithOp::Add).expect("ring mismatch")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.arith(rhs, ArithOp::Sub).expect("ring mismatch")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.arith(rhs, ArithOp::Mul).expect("ring mismatch")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        Ring::neg(self)
    }
}
