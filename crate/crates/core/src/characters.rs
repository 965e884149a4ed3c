//! Classical group characters as alternant quotients, Weyl's denominator
//! formulas, and the determinant identities for characters on split
//! variable sets.
//!
//! Exponents are kept in half units throughout: `2` stands for `x^1`.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::algebra::{determinant, pow_half, rat, LaurentPoly, Matrix, Monomial, PolyMatrix, Rational, Ring};
use crate::combinatorics::{binom, enumerate_partitions_in_box, enumerate_z, Composition, Partition, SubsetIdx};
use crate::error::{domain, usage, Error, Result};
use crate::report::{Mode, VerifyReport};
use crate::rng::Sampler;

/// Resampling budget for degenerate evaluation points.
pub const MAX_RESAMPLES: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CharFamily {
    Gl,
    Sp,
    OddOrth,
    EvenOrth,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    V,
    WMinus,
    WPlus,
}

impl CharFamily {
    pub const ALL: [CharFamily; 4] = [CharFamily::Gl, CharFamily::Sp, CharFamily::OddOrth, CharFamily::EvenOrth];

    pub fn tag(&self) -> &'static str {
        match self {
            CharFamily::Gl => "gl",
            CharFamily::Sp => "sp",
            CharFamily::OddOrth => "odd-orth",
            CharFamily::EvenOrth => "even-orth",
        }
    }

    pub fn kind(&self) -> MatrixKind {
        match self {
            CharFamily::Gl => MatrixKind::V,
            CharFamily::Sp | CharFamily::OddOrth => MatrixKind::WMinus,
            CharFamily::EvenOrth => MatrixKind::WPlus,
        }
    }

    /// The shift `delta` for `n` variables, in half units, length `n`.
    pub fn shift(&self, n: usize) -> Vec<i32> {
        let k_half = match self {
            CharFamily::Gl | CharFamily::EvenOrth => 2 * n as i32 - 2,
            CharFamily::Sp => 2 * n as i32,
            CharFamily::OddOrth => 2 * n as i32 - 1,
        };
        if n == 0 {
            return Vec::new();
        }
        let mut d = staircase_delta(k_half).expect("non-negative shift");
        d.resize(n, 0);
        d
    }
}

impl fmt::Display for CharFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for CharFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gl" => Ok(CharFamily::Gl),
            "sp" => Ok(CharFamily::Sp),
            "odd-orth" | "odd_orth" => Ok(CharFamily::OddOrth),
            "even-orth" | "even_orth" => Ok(CharFamily::EvenOrth),
            other => usage(format!("unknown family '{other}', expected gl|sp|odd-orth|even-orth")),
        }
    }
}

/// `delta(k)` for `k = k_half / 2`, in half units: `(k, k-1, ..., 1, 0)` when
/// `k` is an integer and `(k, k-1, ..., 1/2)` otherwise.
pub fn staircase_delta(k_half: i32) -> Result<Vec<i32>> {
    if k_half < 0 {
        return usage(format!("staircase index must be non-negative, got {k_half}/2"));
    }
    Ok((0..=k_half).rev().step_by(2).collect())
}

/// `lambda + delta` in half units for `n` variables.
pub fn shifted_exponents(family: CharFamily, lambda: &Partition, n: usize) -> Result<Vec<i32>> {
    if lambda.length() > n {
        return domain(format!("{lambda} has more than {n} parts"));
    }
    Ok(lambda
        .padded(n)
        .iter()
        .zip(family.shift(n))
        .map(|(l, d)| 2 * *l as i32 + d)
        .collect())
}

/// `V(alpha; X)` or `W^{+-}(alpha; X)` over the variables `vars` of a ring
/// with `num_vars` variables.
pub fn char_matrix(kind: MatrixKind, alpha_half: &[i32], vars: &[usize], num_vars: usize) -> Result<PolyMatrix> {
    if alpha_half.len() != vars.len() {
        return usage(format!(
            "exponent vector has length {}, variable list {}",
            alpha_half.len(),
            vars.len()
        ));
    }
    let n = vars.len();
    Ok(Matrix::from_fn(n, n, num_vars, |i, j| {
        let up = LaurentPoly::var_pow_half(num_vars, vars[i], alpha_half[j]);
        let down = LaurentPoly::var_pow_half(num_vars, vars[i], -alpha_half[j]);
        match kind {
            MatrixKind::V => up,
            MatrixKind::WMinus => up.sub(&down),
            MatrixKind::WPlus => up.add(&down),
        }
    }))
}

/// The same matrix evaluated at rational points (which must be squares when
/// an exponent is a half-integer).
pub fn char_matrix_at(kind: MatrixKind, alpha_half: &[i32], xs: &[Rational]) -> Result<Matrix<Rational>> {
    if alpha_half.len() != xs.len() {
        return usage(format!(
            "exponent vector has length {}, point has {}",
            alpha_half.len(),
            xs.len()
        ));
    }
    let rows = xs
        .iter()
        .map(|x| {
            alpha_half
                .iter()
                .map(|&a| {
                    let up = pow_half(x, a)?;
                    Ok(match kind {
                        MatrixKind::V => up,
                        MatrixKind::WMinus => up - pow_half(x, -a)?,
                        MatrixKind::WPlus => up + pow_half(x, -a)?,
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows((), rows)
}

fn halves_denominator(family: CharFamily, lambda: &Partition, n: usize) -> bool {
    family == CharFamily::EvenOrth && n > 0 && lambda.part(n) != 0
}

/// The character of `family` with highest weight `lambda` in the variables
/// `x_1, ..., x_n`, as an exact Laurent polynomial.
pub fn character(family: CharFamily, lambda: &Partition, n: usize) -> Result<LaurentPoly> {
    let vars: Vec<usize> = (0..n).collect();
    let num = determinant(&char_matrix(family.kind(), &shifted_exponents(family, lambda, n)?, &vars, n)?)?;
    let den = determinant(&char_matrix(family.kind(), &family.shift(n), &vars, n)?)?;
    let q = num.div_exact(&den)?;
    Ok(if halves_denominator(family, lambda, n) {
        q.scale(&rat(2, 1))
    } else {
        q
    })
}

/// The character evaluated at a rational point, as a quotient of two
/// evaluated alternants.
pub fn char_value(family: CharFamily, lambda: &Partition, xs: &[Rational]) -> Result<Rational> {
    let n = xs.len();
    let num = determinant(&char_matrix_at(family.kind(), &shifted_exponents(family, lambda, n)?, xs)?)?;
    let den = determinant(&char_matrix_at(family.kind(), &family.shift(n), xs)?)?;
    if den.vanishes() {
        return domain(format!("{family} denominator vanishes at the sample point"));
    }
    let q = num / den;
    Ok(if halves_denominator(family, lambda, n) {
        q * rat(2, 1)
    } else {
        q
    })
}

/// `C(u)`: `-(1-u^2)/u` for sp, `-u^{-1/2}(1-u)` for odd orthogonal, absent
/// otherwise.
pub fn c_factor(family: CharFamily, num_vars: usize, u: usize) -> Option<LaurentPoly> {
    let p = |e| LaurentPoly::var_pow_half(num_vars, u, e);
    match family {
        CharFamily::Sp => Some(p(2).sub(&p(-2))),
        CharFamily::OddOrth => Some(p(1).sub(&p(-1))),
        CharFamily::Gl | CharFamily::EvenOrth => None,
    }
}

/// `D(u,v)`: `u - v` for gl and `(v-u)(1-uv)/(uv)` otherwise.
pub fn d_factor(family: CharFamily, num_vars: usize, u: usize, v: usize) -> LaurentPoly {
    let x = |i| LaurentPoly::var(num_vars, i);
    match family {
        CharFamily::Gl => x(u).sub(&x(v)),
        _ => {
            let one = LaurentPoly::one(num_vars);
            let mut inv = vec![0; num_vars];
            inv[u] -= 2;
            inv[v] -= 2;
            x(v).sub(&x(u)).mul(&one.sub(&x(u).mul(&x(v)))).mul_monomial(&Monomial(inv))
        }
    }
}

fn d_value(family: CharFamily, u: &Rational, v: &Rational) -> Rational {
    match family {
        CharFamily::Gl => u - v,
        _ => (v - u) * (rat(1, 1) - u * v) / (u * v),
    }
}

/// Right-hand side of Weyl's denominator formula for `n` variables. For the
/// even orthogonal family this includes the factor `2`.
pub fn denominator_product(family: CharFamily, n: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::one(n);
    for i in 0..n {
        if let Some(c) = c_factor(family, n, i) {
            acc = acc.mul(&c);
        }
        for j in i + 1..n {
            acc = acc.mul(&d_factor(family, n, i, j));
        }
    }
    if family == CharFamily::EvenOrth {
        acc = acc.scale(&rat(2, 1));
    }
    acc
}

pub fn verify_denominators(n: usize) -> Result<Vec<VerifyReport>> {
    if n == 0 || n > 5 {
        return usage(format!("denominator formulas are offered for 1 <= n <= 5, got {n}"));
    }
    let vars: Vec<usize> = (0..n).collect();
    CharFamily::ALL
        .iter()
        .map(|&family| {
            let start = Instant::now();
            let lhs = determinant(&char_matrix(family.kind(), &family.shift(n), &vars, n)?)?;
            let rhs = denominator_product(family, n);
            Ok(VerifyReport::new("denominators", 0, n, Mode::Symbolic)
                .param("family", family)
                .sides(&lhs, &rhs)
                .timed(start))
        })
        .collect()
}

/// `s` groups of `n` variables; `x^(k)_j` is variable `(k-1)n + j - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VariableGrid {
    pub s: usize,
    pub n: usize,
}

impl VariableGrid {
    pub fn new(s: usize, n: usize) -> Self {
        VariableGrid { s, n }
    }

    pub fn num_vars(&self) -> usize {
        self.s * self.n
    }

    /// 0-based index of `x^(k)_j` (both 1-based).
    pub fn index(&self, k: usize, j: usize) -> usize {
        (k - 1) * self.n + j - 1
    }
}

/// `X_mu`: the first `mu_k` variables of each group `k`, as 0-based indices.
pub fn specialize_x(mu: &Composition, grid: VariableGrid) -> Result<Vec<usize>> {
    if mu.len() != grid.s || mu.parts().iter().any(|&p| p > grid.n) {
        return usage(format!("{mu} does not fit a grid of {} groups of {}", grid.s, grid.n));
    }
    Ok((1..=grid.s)
        .flat_map(|k| (1..=mu.part(k)).map(move |j| grid.index(k, j)))
        .collect())
}

/// `Delta_mu`: the product of `C` over `X_mu` and `D` over its ordered pairs.
/// For the even orthogonal family the factor `2` carried by rows with
/// `lambda_n = 0` is not included.
pub fn delta_prefactor(family: CharFamily, mu: &Composition, grid: VariableGrid) -> Result<LaurentPoly> {
    let xs = specialize_x(mu, grid)?;
    let nv = grid.num_vars();
    let mut acc = LaurentPoly::one(nv);
    for (a, &u) in xs.iter().enumerate() {
        if let Some(c) = c_factor(family, nv, u) {
            acc = acc.mul(&c);
        }
        for &v in &xs[a + 1..] {
            acc = acc.mul(&d_factor(family, nv, u, v));
        }
    }
    Ok(acc)
}

/// Whether a point avoids every pole and zero of the denominators: nonzero,
/// pairwise distinct, and `x_i x_j != 1` for all `i, j`.
pub fn admissible(xs: &[Rational]) -> bool {
    let one = rat(1, 1);
    xs.iter().enumerate().all(|(i, x)| {
        !x.vanishes() && xs[i..].iter().all(|y| x * y != one) && xs[i + 1..].iter().all(|y| x != y)
    })
}

/// An admissible point of `len` square rationals.
pub fn sample_point(sampler: &mut Sampler, len: usize) -> Result<Vec<Rational>> {
    for _ in 0..MAX_RESAMPLES {
        let xs: Vec<Rational> = (0..len).map(|_| sampler.square_rational()).collect();
        if admissible(&xs) {
            return Ok(xs);
        }
    }
    domain(format!("no admissible sample after {MAX_RESAMPLES} attempts"))
}

/// Exponent of the factor pairing `x^(k)_i` with `x^(l)_j`, `k < l`.
pub fn cross_exponent(s: usize, n: usize, i: usize, j: usize) -> u64 {
    binom(s as i64 + n as i64 - i as i64 - j as i64 - 1, s as i64 - 2)
}

/// `det(char(lambda; X_mu))` with rows `lambda` in the `(s-1)^n` box, largest
/// first, and columns `mu` in composition order.
pub fn theorem_lhs(family: CharFamily, s: usize, n: usize, xs: &[Rational]) -> Result<Rational> {
    let grid = VariableGrid::new(s, n);
    let rows = enumerate_partitions_in_box(s - 1, n);
    let cols = enumerate_z(s, n, false);
    let points = cols
        .iter()
        .map(|mu| Ok(specialize_x(mu, grid)?.iter().map(|&v| xs[v].clone()).collect()))
        .collect::<Result<Vec<Vec<Rational>>>>()?;
    let cells = rows
        .iter()
        .map(|lambda| points.iter().map(|p| char_value(family, lambda, p)).collect())
        .collect::<Result<Vec<Vec<Rational>>>>()?;
    determinant(&Matrix::from_rows((), cells)?)
}

pub fn theorem_rhs(family: CharFamily, s: usize, n: usize, xs: &[Rational]) -> Rational {
    let grid = VariableGrid::new(s, n);
    let mut acc = rat(1, 1);
    for k in 1..=s {
        for l in k + 1..=s {
            for i in 1..=n {
                for j in 1..=n {
                    let e = cross_exponent(s, n, i, j);
                    if e == 0 {
                        continue;
                    }
                    let f = d_value(family, &xs[grid.index(k, i)], &xs[grid.index(l, j)]);
                    acc *= num_traits::pow(f, e as usize);
                }
            }
        }
    }
    acc
}

fn check_shape(s: usize, n: usize) -> Result<()> {
    if s == 0 || n == 0 {
        return usage("s and n must be positive");
    }
    Ok(())
}

fn numeric_seed(mode: Mode, what: &str) -> Result<u64> {
    match mode {
        Mode::Numeric { seed } => Ok(seed),
        Mode::Symbolic => Err(Error::Capability(format!("{what} is verified in numeric mode only"))),
    }
}

/// The character determinant identity on split variable sets at an explicit
/// point of `sn` coordinates.
pub fn verify_theorem_schur_at(
    family: CharFamily,
    s: usize,
    n: usize,
    xs: &[Rational],
    mode: Mode,
) -> Result<VerifyReport> {
    check_shape(s, n)?;
    if xs.len() != s * n {
        return usage(format!("expected {} coordinates, got {}", s * n, xs.len()));
    }
    let start = Instant::now();
    let lhs = theorem_lhs(family, s, n, xs)?;
    let rhs = theorem_rhs(family, s, n, xs);
    let mut report = VerifyReport::new("schur-det", s, n, mode).param("family", family);
    if family == CharFamily::EvenOrth {
        let doubled = enumerate_partitions_in_box(s - 1, n)
            .iter()
            .filter(|l| l.part(n) == 0)
            .count();
        report = report.param("rows_with_factor_two", doubled);
    }
    Ok(report.sides(&lhs, &rhs).timed(start))
}

pub fn verify_theorem_schur(family: CharFamily, s: usize, n: usize, mode: Mode) -> Result<VerifyReport> {
    check_shape(s, n)?;
    let seed = numeric_seed(mode, "the character determinant identity")?;
    let xs = sample_point(&mut Sampler::new(seed), s * n)?;
    verify_theorem_schur_at(family, s, n, &xs, mode)
}

/// The gl identity after `x^(k)_j = t^{j-1} a_k` with seeded `t` and `a_k`.
pub fn verify_theorem_remark(s: usize, n: usize, mode: Mode) -> Result<VerifyReport> {
    check_shape(s, n)?;
    let seed = numeric_seed(mode, "the specialized identity")?;
    let mut sampler = Sampler::new(seed);
    let grid = VariableGrid::new(s, n);
    for _ in 0..MAX_RESAMPLES {
        let t = sampler.square_rational();
        let a: Vec<Rational> = (0..s).map(|_| sampler.square_rational()).collect();
        let mut xs = vec![rat(0, 1); s * n];
        for k in 1..=s {
            for j in 1..=n {
                xs[grid.index(k, j)] = &a[k - 1] * num_traits::pow(t.clone(), j - 1);
            }
        }
        if admissible(&xs) {
            return Ok(verify_theorem_schur_at(CharFamily::Gl, s, n, &xs, mode)?
                .param("substitution", "x(k,j) = t^(j-1) a_k"));
        }
    }
    domain(format!("no admissible sample after {MAX_RESAMPLES} attempts"))
}

/// Rows `lambda` in the `(s-n)^n` box, largest first; columns `I` in lex
/// order; cells `char(lambda; X_I)`.
pub fn prop_dets_lhs(family: CharFamily, s: usize, n: usize, xs: &[Rational]) -> Result<Rational> {
    let rows = enumerate_partitions_in_box(s - n, n);
    let cols = SubsetIdx::all(s, n);
    let cells = rows
        .iter()
        .map(|lambda| {
            cols.iter()
                .map(|i| {
                    let p: Vec<Rational> = i.elements().iter().map(|&e| xs[e - 1].clone()).collect();
                    char_value(family, lambda, &p)
                })
                .collect()
        })
        .collect::<Result<Vec<Vec<Rational>>>>()?;
    determinant(&Matrix::from_rows((), cells)?)
}

pub fn prop_dets_rhs(family: CharFamily, s: usize, n: usize, xs: &[Rational]) -> Rational {
    let mut base = rat(1, 1);
    for i in 0..s {
        for j in i + 1..s {
            base *= d_value(family, &xs[i], &xs[j]);
        }
    }
    num_traits::pow(base, binom(s as i64 - 2, n as i64 - 1) as usize)
}

/// The gl and sp determinant identities over `n`-subsets of `s` variables,
/// checked up to a global sign which is reported.
pub fn verify_prop_dets(family: CharFamily, s: usize, n: usize, mode: Mode) -> Result<VerifyReport> {
    check_shape(s, n)?;
    if !matches!(family, CharFamily::Gl | CharFamily::Sp) {
        return usage(format!("this identity is stated for gl and sp, got {family}"));
    }
    if s < n {
        return usage(format!("need s >= n, got s = {s}, n = {n}"));
    }
    let seed = numeric_seed(mode, "the subset determinant identity")?;
    let start = Instant::now();
    let xs = sample_point(&mut Sampler::new(seed), s)?;
    let lhs = prop_dets_lhs(family, s, n, &xs)?;
    let rhs = prop_dets_rhs(family, s, n, &xs);
    Ok(VerifyReport::new("prop12", s, n, mode)
        .param("family", family)
        .sides_up_to_sign(&lhs, &rhs)
        .timed(start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::det_cofactor;
    use proptest::prelude::*;
    use std::collections::BTreeMap;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn staircases() {
        assert_eq!(staircase_delta(4).unwrap(), [4, 2, 0]);
        assert_eq!(staircase_delta(3).unwrap(), [3, 1]);
        assert_eq!(staircase_delta(0).unwrap(), [0]);
        assert!(matches!(staircase_delta(-1), Err(Error::Usage(_))));
        assert_eq!(CharFamily::Sp.shift(2), [4, 2]);
        assert_eq!(CharFamily::OddOrth.shift(2), [3, 1]);
        assert_eq!(CharFamily::Gl.shift(3), [4, 2, 0]);
    }

    #[test]
    fn family_tags_round_trip() {
        for f in CharFamily::ALL {
            assert_eq!(f.tag().parse::<CharFamily>().unwrap(), f);
        }
        assert!("so".parse::<CharFamily>().is_err());
    }

    #[test]
    fn small_matrices() {
        let v = char_matrix(MatrixKind::V, &[2, 0], &[0, 1], 2).unwrap();
        assert_eq!(v.get(0, 0), &LaurentPoly::var(2, 0));
        assert_eq!(v.get(1, 1), &LaurentPoly::one(2));
        let w = char_matrix(MatrixKind::WMinus, &[2], &[0], 1).unwrap();
        assert_eq!(w.get(0, 0).canonical_text(), "1/1*x1 + -1/1*x1^(-1)");
        let w = char_matrix(MatrixKind::WPlus, &[0], &[0], 1).unwrap();
        assert_eq!(w.get(0, 0).as_constant(), Some(rat(2, 1)));
    }

    #[test]
    fn trivial_characters() {
        for f in CharFamily::ALL {
            for n in 1..=3 {
                assert_eq!(character(f, &Partition::empty(), n).unwrap(), LaurentPoly::one(n), "{f} {n}");
            }
        }
        let s1 = character(CharFamily::Gl, &part(&[1]), 2).unwrap();
        assert_eq!(s1, LaurentPoly::var(2, 0).add(&LaurentPoly::var(2, 1)));
    }

    #[test]
    fn even_orthogonal_convention() {
        // O(2), lambda = (1): x + 1/x; the halved denominator is what makes
        // this the sum of two weights rather than twice it.
        let chi = character(CharFamily::EvenOrth, &part(&[1]), 1).unwrap();
        assert_eq!(chi.canonical_text(), "1/1*x1 + 1/1*x1^(-1)");
    }

    #[test]
    fn denominator_formulas() {
        for n in 1..=4 {
            for r in verify_denominators(n).unwrap() {
                assert!(r.equal, "{r:?}");
            }
        }
        assert!(verify_denominators(0).is_err());
    }

    #[test]
    fn sp_denominator_single_variable() {
        let d = denominator_product(CharFamily::Sp, 1);
        assert_eq!(d.canonical_text(), "1/1*x1 + -1/1*x1^(-1)");
    }

    #[test]
    fn split_variables() {
        let grid = VariableGrid::new(3, 2);
        let mu: Composition = "(2,0,0)".parse().unwrap();
        assert_eq!(specialize_x(&mu, grid).unwrap(), [0, 1]);
        let mu: Composition = "(1,0,1)".parse().unwrap();
        assert_eq!(specialize_x(&mu, grid).unwrap(), [0, 4]);
        for mu in enumerate_z(3, 2, false) {
            let j = crate::combinatorics::iota(&mu, 3, 2).unwrap();
            let cols: Vec<usize> = j.elements().iter().map(|e| e - 1).collect();
            assert_eq!(specialize_x(&mu, grid).unwrap(), cols);
        }
    }

    #[test]
    fn gl_prefactor_is_vandermonde() {
        let grid = VariableGrid::new(3, 2);
        for mu in enumerate_z(3, 2, false) {
            let xs = specialize_x(&mu, grid).unwrap();
            let m = char_matrix(MatrixKind::V, &CharFamily::Gl.shift(xs.len()), &xs, 6).unwrap();
            assert_eq!(
                delta_prefactor(CharFamily::Gl, &mu, grid).unwrap(),
                det_cofactor(&m).unwrap()
            );
        }
    }

    #[test]
    fn sp_prefactor_one_group() {
        let grid = VariableGrid::new(1, 2);
        let mu: Composition = "(2)".parse().unwrap();
        let want = c_factor(CharFamily::Sp, 2, 0)
            .unwrap()
            .mul(&c_factor(CharFamily::Sp, 2, 1).unwrap())
            .mul(&d_factor(CharFamily::Sp, 2, 0, 1));
        assert_eq!(delta_prefactor(CharFamily::Sp, &mu, grid).unwrap(), want);
    }

    #[test]
    fn prefactor_times_character_is_minor() {
        // Entries a_{i,(k-1)n+j} = x^{s+n-i+shift} -+ x^{-(...)} make every
        // maximal minor on iota(mu) factor as Delta_mu times a character.
        let (s, n) = (2usize, 2usize);
        let grid = VariableGrid::new(s, n);
        let xs = sample_point(&mut Sampler::new(5), s * n).unwrap();
        for family in CharFamily::ALL {
            let offset = match family {
                CharFamily::Gl | CharFamily::EvenOrth => -2,
                CharFamily::Sp => 0,
                CharFamily::OddOrth => -1,
            };
            let kind = family.kind();
            let alpha: Vec<i32> = (1..s + n).map(|i| 2 * (s + n - i) as i32 + offset).collect();
            let a = Matrix::from_rows(
                (),
                alpha
                    .iter()
                    .map(|&e| {
                        xs.iter()
                            .map(|x| {
                                let up = pow_half(x, e).unwrap();
                                let down = pow_half(x, -e).unwrap();
                                match kind {
                                    MatrixKind::V => up,
                                    MatrixKind::WMinus => up - down,
                                    MatrixKind::WPlus => up + down,
                                }
                            })
                            .collect()
                    })
                    .collect(),
            )
            .unwrap();
            for mu in enumerate_z(s, n, false) {
                let cols = crate::combinatorics::iota(&mu, s, n).unwrap();
                let x_mu: Vec<Rational> = specialize_x(&mu, grid).unwrap().iter().map(|&v| xs[v].clone()).collect();
                let delta = delta_prefactor(family, &mu, grid).unwrap().eval(&xs).unwrap();
                for lambda in enumerate_partitions_in_box(s - 1, n) {
                    let rows = crate::combinatorics::partition_to_rowset(&lambda, s, n).unwrap();
                    let minor = a.minor_det(&rows, &cols).unwrap();
                    let mut chi = char_value(family, &lambda, &x_mu).unwrap();
                    if family == CharFamily::EvenOrth && lambda.part(n) == 0 {
                        chi *= rat(2, 1);
                    }
                    assert_eq!(minor, &delta * &chi, "{family} {lambda} {mu}");
                }
            }
        }
    }

    /// Semistandard tableaux of shape `lambda` with entries in `[1, n]`,
    /// tallied by content.
    fn tableau_expansion(lambda: &Partition, n: usize) -> BTreeMap<Vec<i32>, i64> {
        let cells: Vec<(usize, usize)> = (0..lambda.length())
            .flat_map(|r| (0..lambda.part(r + 1)).map(move |c| (r, c)))
            .collect();
        let mut out = BTreeMap::new();
        let mut filling = vec![vec![0usize; lambda.part(1)]; lambda.length()];
        fn go(
            idx: usize,
            cells: &[(usize, usize)],
            n: usize,
            filling: &mut Vec<Vec<usize>>,
            out: &mut BTreeMap<Vec<i32>, i64>,
        ) {
            if idx == cells.len() {
                let mut content = vec![0i32; n];
                for &(r, c) in cells {
                    content[filling[r][c] - 1] += 2;
                }
                *out.entry(content).or_insert(0) += 1;
                return;
            }
            let (r, c) = cells[idx];
            let lo_row = if c > 0 { filling[r][c - 1] } else { 1 };
            let lo_col = if r > 0 { filling[r - 1][c] + 1 } else { 1 };
            for v in lo_row.max(lo_col)..=n {
                filling[r][c] = v;
                go(idx + 1, cells, n, filling, out);
            }
        }
        if lambda.length() <= n {
            go(0, &cells, n, &mut filling, &mut out);
        }
        out
    }

    #[test]
    fn gl_characters_match_tableaux() {
        for n in 1..=3 {
            for d in 0..=4 {
                for lambda in crate::combinatorics::partitions_of(d) {
                    if lambda.length() > n {
                        continue;
                    }
                    let chi = character(CharFamily::Gl, &lambda, n).unwrap();
                    let got: BTreeMap<Vec<i32>, i64> = chi
                        .terms()
                        .map(|(m, c)| (m.0.clone(), c.to_integer().try_into().unwrap()))
                        .collect();
                    assert_eq!(got, tableau_expansion(&lambda, n), "{lambda} n={n}");
                }
            }
        }
    }

    #[test]
    fn numerator_divisible_in_box() {
        for family in CharFamily::ALL {
            for n in 1..=3 {
                for lambda in enumerate_partitions_in_box(2, n) {
                    character(family, &lambda, n).unwrap();
                }
            }
        }
    }

    #[test]
    fn symbolic_and_numeric_agree() {
        let xs = sample_point(&mut Sampler::new(11), 2).unwrap();
        for family in CharFamily::ALL {
            for lambda in enumerate_partitions_in_box(2, 2) {
                let sym = character(family, &lambda, 2).unwrap().eval(&xs).unwrap();
                assert_eq!(sym, char_value(family, &lambda, &xs).unwrap(), "{family} {lambda}");
            }
        }
    }

    #[test]
    fn binomial_collapse() {
        let c = |a: i64, b: i64| binom(a, b) as i64;
        for s in 2..=8i64 {
            for n in 1..=8i64 {
                for i in 1..=n {
                    for j in 1..=n {
                        let lhs = c(s + n - i - j, n - i - j + 1) - c(s + n - i - j - 1, n - i - j);
                        assert_eq!(lhs, c(s + n - i - j - 1, s - 2), "s={s} n={n} i={i} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn gl_two_by_two_exponents() {
        // Exponent 1 exactly when i + j <= 3.
        for i in 1..=2 {
            for j in 1..=2 {
                assert_eq!(cross_exponent(2, 2, i, j), u64::from(i + j <= 3));
            }
        }
    }

    #[test]
    fn theorem_small_cases() {
        for family in CharFamily::ALL {
            for (s, n) in [(1, 2), (2, 1), (2, 2)] {
                let r = verify_theorem_schur(family, s, n, Mode::Numeric { seed: 3 }).unwrap();
                assert!(r.equal, "{family} ({s},{n})");
            }
        }
        assert!(verify_theorem_remark(2, 2, Mode::Numeric { seed: 1 }).unwrap().equal);
        assert!(matches!(
            verify_theorem_schur(CharFamily::Gl, 2, 2, Mode::Symbolic),
            Err(Error::Capability(_))
        ));
    }

    #[test]
    fn prop_dets_small_cases() {
        // s = n: one row and one column, determinant 1.
        let r = verify_prop_dets(CharFamily::Gl, 3, 3, Mode::Numeric { seed: 1 }).unwrap();
        assert!(r.equal);
        // (2,1) gl, rows (1) then (): det [[x1, x2], [1, 1]] = x1 - x2.
        let r = verify_prop_dets(CharFamily::Gl, 2, 1, Mode::Numeric { seed: 1 }).unwrap();
        assert!(r.equal);
        assert_eq!(r.sign, Some(1));
        assert!(verify_prop_dets(CharFamily::OddOrth, 3, 2, Mode::Numeric { seed: 1 }).is_err());
        assert!(verify_prop_dets(CharFamily::Gl, 2, 3, Mode::Numeric { seed: 1 }).is_err());
    }

    #[test]
    fn admissibility() {
        assert!(admissible(&[rat(4, 1), rat(9, 4)]));
        assert!(!admissible(&[rat(4, 1), rat(1, 4)]));
        assert!(!admissible(&[rat(1, 1)]));
        assert!(!admissible(&[rat(4, 1), rat(4, 1)]));
        assert!(!admissible(&[rat(0, 1)]));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn bcd_characters_invert_single_variable(seed in any::<u64>(), which in 0usize..2) {
            let mut sampler = Sampler::new(seed);
            let xs = sample_point(&mut sampler, 2).unwrap();
            let mut ys = xs.clone();
            ys[which] = ys[which].recip();
            for family in [CharFamily::Sp, CharFamily::OddOrth, CharFamily::EvenOrth] {
                for lambda in enumerate_partitions_in_box(2, 2) {
                    prop_assert_eq!(
                        char_value(family, &lambda, &xs).unwrap(),
                        char_value(family, &lambda, &ys).unwrap()
                    );
                }
            }
        }
    }
}
