//! Compound matrices of minors of an `(s+n-1) x sn` matrix and the checks
//! built on them: the Laplace pairing, the Gram-structure factorizations,
//! the main compound determinant identity, the Cauchy-Sylvester identity and
//! the leading-term computation that fixes the constant.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::algebra::{determinant, LaurentPoly, Matrix, Monomial, PolyMatrix, Rational, Ring};
use crate::combinatorics::{
    big_phi_lemma1, big_phi_lemma2, binom, color_pi, enumerate_z, epsilon, iota, preceq, Composition,
    SubsetIdx,
};
use crate::error::{usage, Error, Result};
use crate::report::{Mode, VerifyReport};
use crate::rng::Sampler;

/// An `(s+n-1) x sn` matrix together with its shape parameters.
#[derive(Clone, Debug)]
pub struct CompoundSpec<R: Ring> {
    s: usize,
    n: usize,
    a: Matrix<R>,
}

impl<R: Ring> CompoundSpec<R> {
    pub fn new(s: usize, n: usize, a: Matrix<R>) -> Result<Self> {
        if s == 0 || n == 0 {
            return usage("s and n must be positive");
        }
        if a.rows() != s + n - 1 || a.cols() != s * n {
            return usage(format!(
                "expected a {}x{} matrix, got {}x{}",
                s + n - 1,
                s * n,
                a.rows(),
                a.cols()
            ));
        }
        Ok(CompoundSpec { s, n, a })
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Matrix<R> {
        &self.a
    }

    /// Row labels of the compound: `n`-subsets of `[s+n-1]` in lex order.
    pub fn row_sets(&self) -> Vec<SubsetIdx> {
        SubsetIdx::all(self.s + self.n - 1, self.n)
    }

    /// Column labels: `Z_{s,n}` in composition order.
    pub fn compositions(&self) -> Vec<Composition> {
        enumerate_z(self.s, self.n, false)
    }

    /// `det A_J` over all rows.
    pub fn full_minor(&self, cols: &SubsetIdx) -> Result<R> {
        self.a.minor_det(&SubsetIdx::full(self.a.rows()), cols)
    }
}

/// Matrix of independent indeterminates: `a_{ij}` is variable
/// `(i-1)*cols + (j-1)`.
pub fn symbolic_matrix(rows: usize, cols: usize) -> PolyMatrix {
    let nv = rows * cols;
    Matrix::from_fn(rows, cols, nv, |i, j| LaurentPoly::var(nv, i * cols + j))
}

/// Matrix of seeded random rationals, filled row by row.
pub fn random_matrix(rows: usize, cols: usize, sampler: &mut Sampler) -> Matrix<Rational> {
    Matrix::from_fn(rows, cols, (), |_, _| sampler.square_rational())
}

impl CompoundSpec<LaurentPoly> {
    pub fn symbolic(s: usize, n: usize) -> Result<Self> {
        Self::new(s, n, symbolic_matrix(s + n - 1, s * n))
    }

    /// `a_{ij} = x_j^{s+n-i}` in `sn` variables.
    pub fn monomial_specialization(s: usize, n: usize) -> Result<Self> {
        let nv = s * n;
        let rows = s + n - 1;
        let a = Matrix::from_fn(rows, nv, nv, |i, j| {
            LaurentPoly::var_pow_half(nv, j, 2 * (s + n - 1 - i) as i32)
        });
        Self::new(s, n, a)
    }
}

impl CompoundSpec<Rational> {
    pub fn numeric(s: usize, n: usize, seed: u64) -> Result<Self> {
        if s == 0 || n == 0 {
            return usage("s and n must be positive");
        }
        let mut sampler = Sampler::new(seed);
        Self::new(s, n, random_matrix(s + n - 1, s * n, &mut sampler))
    }
}

/// `V_J(A) = (det A^I_J)_I`, components in lex order of `I`.
pub fn vec_v<R: Ring>(spec: &CompoundSpec<R>, j: &SubsetIdx) -> Result<Vec<R>> {
    if j.len() != spec.n {
        return usage(format!("|J| must be n = {}, got {}", spec.n, j.len()));
    }
    spec.row_sets()
        .iter()
        .map(|i| spec.a.minor_det(i, j))
        .collect()
}

/// `Vbar_K(A) = ((-1)^{|I| - n(n+1)/2} det A^{Ibar}_K)_I`.
pub fn vec_vbar<R: Ring>(spec: &CompoundSpec<R>, k: &SubsetIdx) -> Result<Vec<R>> {
    if k.len() != spec.s - 1 {
        return usage(format!("|K| must be s - 1 = {}, got {}", spec.s - 1, k.len()));
    }
    let base = spec.n * (spec.n + 1) / 2;
    spec.row_sets()
        .iter()
        .map(|i| {
            let d = spec.a.minor_det(&i.complement(), k)?;
            Ok(if (i.weight() - base).is_multiple_of(2) { d } else { d.neg() })
        })
        .collect()
}

fn inner<R: Ring>(ctx: R::Ctx, v: &[R], w: &[R]) -> R {
    v.iter()
        .zip(w)
        .fold(R::zero_in(ctx), |acc, (a, b)| acc.add(&a.mul(b)))
}

/// `<V_J, Vbar_K>`.
pub fn laplace_pair<R: Ring>(spec: &CompoundSpec<R>, j: &SubsetIdx, k: &SubsetIdx) -> Result<R> {
    Ok(inner(spec.a.ctx(), &vec_v(spec, j)?, &vec_vbar(spec, k)?))
}

/// `epsilon(J, K) det A_{J u K}`, the value the pairing must take.
pub fn laplace_rhs<R: Ring>(spec: &CompoundSpec<R>, j: &SubsetIdx, k: &SubsetIdx) -> Result<R> {
    let sign = epsilon(j, k);
    if sign == 0 {
        return Ok(R::zero_in(spec.a.ctx()));
    }
    Ok(spec.full_minor(&j.union(k))?.scale_sign(sign))
}

fn par_matrix<R: Ring>(
    rows: usize,
    cols: usize,
    ctx: R::Ctx,
    cell: impl Fn(usize, usize) -> Result<R> + Sync,
) -> Result<Matrix<R>> {
    let entries = (0..rows * cols)
        .into_par_iter()
        .map(|idx| cell(idx / cols, idx % cols))
        .collect::<Result<Vec<R>>>()?;
    Matrix::new(rows, cols, ctx, entries)
}

/// `M(A) = (det A^I_{iota(mu)})`, rows lex on `I`, columns in composition
/// order. Cells are computed in parallel.
pub fn build_m<R: Ring>(spec: &CompoundSpec<R>) -> Result<Matrix<R>> {
    let rows = spec.row_sets();
    let cols = spec
        .compositions()
        .iter()
        .map(|mu| iota(mu, spec.s, spec.n))
        .collect::<Result<Vec<_>>>()?;
    par_matrix(rows.len(), cols.len(), spec.a.ctx(), |i, j| {
        spec.a.minor_det(&rows[i], &cols[j])
    })
}

/// `Mhat(Phi, A)`: the columns `Vbar_{Phi(mu)}` in composition order.
pub fn build_mhat<R: Ring>(
    spec: &CompoundSpec<R>,
    phi: impl Fn(&Composition) -> Result<SubsetIdx>,
) -> Result<Matrix<R>> {
    let comps = spec.compositions();
    let columns = comps
        .iter()
        .map(|mu| vec_vbar(spec, &phi(mu)?))
        .collect::<Result<Vec<_>>>()?;
    let size = comps.len();
    Ok(Matrix::from_fn(size, size, spec.a.ctx(), |i, j| columns[j][i].clone()))
}

/// Column labels `iota(nu)`, `nu` in `Z^0_{s,s+n-1}`, whose full minors
/// multiply to `det M(A)`.
pub fn main_rhs_factors(s: usize, n: usize) -> Result<Vec<SubsetIdx>> {
    enumerate_z(s, s + n - 1, true)
        .iter()
        .map(|nu| iota(nu, s, n))
        .collect()
}

pub fn main_rhs<R: Ring>(spec: &CompoundSpec<R>) -> Result<R> {
    main_rhs_factors(spec.s, spec.n)?
        .iter()
        .try_fold(R::one_in(spec.a.ctx()), |acc, j| Ok(acc.mul(&spec.full_minor(j)?)))
}

/// Shapes for which the main identity is offered with symbolic entries.
pub fn main_symbolic_supported(s: usize, n: usize) -> bool {
    (s == 1 && n <= 6) || (n == 1 && s <= 6) || matches!((s, n), (2, 2) | (2, 3) | (3, 2))
}

/// `det M(A) = prod_{nu in Z^0_{s,s+n-1}} det A_{iota(nu)}` for one matrix.
pub fn verify_main_spec<R: Ring>(spec: &CompoundSpec<R>, mode: Mode) -> Result<VerifyReport> {
    let start = Instant::now();
    let lhs = determinant(&build_m(spec)?)?;
    let rhs = main_rhs(spec)?;
    let factors: Vec<String> = main_rhs_factors(spec.s, spec.n)?.iter().map(|j| j.label()).collect();
    Ok(VerifyReport::new("main", spec.s, spec.n, mode)
        .sides(&lhs, &rhs)
        .with_detail(format!("rhs factors: {}", factors.join(",")))
        .timed(start))
}

pub fn verify_main(s: usize, n: usize, mode: Mode) -> Result<VerifyReport> {
    match mode {
        Mode::Symbolic => {
            if !main_symbolic_supported(s, n) {
                return Err(Error::Capability(format!(
                    "symbolic mode supports s = 1 (n <= 6), n = 1 (s <= 6) and (s,n) in {{(2,2),(2,3),(3,2)}}; got ({s},{n})"
                )));
            }
            verify_main_spec(&CompoundSpec::symbolic(s, n)?, mode)
        }
        Mode::Numeric { seed } => verify_main_spec(&CompoundSpec::numeric(s, n, seed)?, mode),
    }
}

/// Which map `Z_{s,n} -> (s-1)-subsets` fills the dual compound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColumnMap {
    /// `phi^(pi(mu))(mu)` with `pi` the least color of a maximal part.
    Lemma1,
    /// `phi^(k0)` patched on the compositions concentrated away from `k0`.
    Lemma2 { k0: usize },
}

impl ColumnMap {
    pub fn apply(&self, mu: &Composition, s: usize, n: usize) -> Result<SubsetIdx> {
        match *self {
            ColumnMap::Lemma1 => big_phi_lemma1(mu, s, n),
            ColumnMap::Lemma2 { k0 } => big_phi_lemma2(mu, k0, s, n),
        }
    }

    /// Color whose order governs the vanishing of column `mu`.
    pub fn color(&self, mu: &Composition) -> Result<usize> {
        match *self {
            ColumnMap::Lemma1 => color_pi(mu),
            ColumnMap::Lemma2 { k0 } => Ok(k0),
        }
    }

    fn label(&self) -> String {
        match self {
            ColumnMap::Lemma1 => "lemma1".into(),
            ColumnMap::Lemma2 { k0 } => format!("lemma2(k0={k0})"),
        }
    }
}

/// One cell of `tM(A) Mhat(Phi, A)` as predicted by the Laplace pairing:
/// `sign * det A_support`, or zero when `sign == 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramCell {
    pub sign: i8,
    pub support: SubsetIdx,
}

#[derive(Clone, Debug)]
pub struct GramOutcome {
    pub report: VerifyReport,
    /// Predicted cells, rows `lambda` and columns `mu` in composition order.
    pub cells: Vec<Vec<GramCell>>,
    /// Multiset of the factors `iota(mu) u Phi(mu)`.
    pub factors: BTreeMap<SubsetIdx, u32>,
    /// Global sign relating the determinant to the factor product.
    pub sign: Option<i8>,
}

pub fn predicted_gram(s: usize, n: usize, map: ColumnMap) -> Result<Vec<Vec<GramCell>>> {
    let comps = enumerate_z(s, n, false);
    comps
        .iter()
        .map(|lambda| {
            let j = iota(lambda, s, n)?;
            comps
                .iter()
                .map(|mu| {
                    let k = map.apply(mu, s, n)?;
                    Ok(GramCell {
                        sign: epsilon(&j, &k),
                        support: j.union(&k),
                    })
                })
                .collect()
        })
        .collect()
}

/// Checks the factorization of `det(tM(A) Mhat(Phi, A))`.
///
/// (a) every cell equals `epsilon * det A_{iota(lambda) u Phi(mu)}`, computed
/// independently from `A`, and vanishes whenever `lambda` is not below `mu`
/// in the order of the column's color;
/// (b) the determinant equals `+-prod_mu det A_{iota(mu) u Phi(mu)}`.
///
/// With `direct_det` the determinant in (b) is computed over the entries
/// themselves. Otherwise it is computed over a polynomial ring with one
/// variable per distinct full minor, which (a) makes legitimate: the
/// substitution of each variable by its minor is a ring map carrying that
/// matrix onto the Gram matrix.
pub fn verify_gram_structure<R: Ring>(
    spec: &CompoundSpec<R>,
    map: ColumnMap,
    mode: Mode,
    direct_det: bool,
) -> Result<GramOutcome> {
    let start = Instant::now();
    let (s, n) = (spec.s, spec.n);
    let comps = spec.compositions();
    let m = build_m(spec)?;
    let mhat = build_mhat(spec, |mu| map.apply(mu, s, n))?;
    let gram = m.transpose().mul(&mhat)?;
    let cells = predicted_gram(s, n, map)?;
    let report = VerifyReport::new("gram", s, n, mode).param("map", map.label());

    let fail = |report: VerifyReport, msg: String, cells| {
        Ok(GramOutcome {
            report: report.with_detail(msg).timed(start),
            cells,
            factors: BTreeMap::new(),
            sign: None,
        })
    };

    for (li, lambda) in comps.iter().enumerate() {
        for (mi, mu) in comps.iter().enumerate() {
            let cell = &cells[li][mi];
            let expected = if cell.sign == 0 {
                R::zero_in(spec.a.ctx())
            } else {
                spec.full_minor(&cell.support)?.scale_sign(cell.sign)
            };
            if gram.get(li, mi) != &expected {
                return fail(report, format!("Laplace pairing mismatch at ({lambda}, {mu})"), cells);
            }
            let k = map.color(mu)?;
            if !preceq(lambda, mu, k) && !gram.get(li, mi).vanishes() {
                return fail(
                    report,
                    format!("nonzero entry at ({lambda}, {mu}) although {lambda} is not below {mu} for color {k}"),
                    cells,
                );
            }
        }
    }

    let mut factors = BTreeMap::new();
    for (i, _) in comps.iter().enumerate() {
        *factors.entry(cells[i][i].support.clone()).or_insert(0) += 1;
    }
    let detail = format!(
        "factors: {}",
        factors
            .iter()
            .map(|(j, e)| if *e == 1 { j.label() } else { format!("{}^{e}", j.label()) })
            .collect::<Vec<_>>()
            .join(",")
    );

    let report = if direct_det {
        let lhs = determinant(&gram)?;
        let rhs = factors.iter().try_fold(R::one_in(spec.a.ctx()), |acc, (j, e)| {
            let d = spec.full_minor(j)?;
            Ok::<R, Error>((0..*e).fold(acc, |acc, _| acc.mul(&d)))
        })?;
        report.sides_up_to_sign(&lhs, &rhs)
    } else {
        let (lhs, rhs) = abstract_gram_sides(&cells, &factors)?;
        report.sides_up_to_sign(&lhs, &rhs)
    };
    let sign = report.sign;
    Ok(GramOutcome {
        report: report.with_detail(detail).timed(start),
        cells,
        factors,
        sign,
    })
}

/// Determinant of the predicted Gram matrix and the factor product, both in
/// the ring with one variable per distinct support.
fn abstract_gram_sides(
    cells: &[Vec<GramCell>],
    factors: &BTreeMap<SubsetIdx, u32>,
) -> Result<(LaurentPoly, LaurentPoly)> {
    let mut index: BTreeMap<SubsetIdx, usize> = BTreeMap::new();
    for cell in cells.iter().flatten().filter(|c| c.sign != 0) {
        let next = index.len();
        index.entry(cell.support.clone()).or_insert(next);
    }
    for j in factors.keys() {
        let next = index.len();
        index.entry(j.clone()).or_insert(next);
    }
    let nv = index.len();
    let size = cells.len();
    let g = Matrix::from_fn(size, size, nv, |i, j| {
        let cell = &cells[i][j];
        if cell.sign == 0 {
            LaurentPoly::zero(nv)
        } else {
            LaurentPoly::var(nv, index[&cell.support]).scale_sign(cell.sign)
        }
    });
    let lhs = determinant(&g)?;
    let mut exps = vec![0i32; nv];
    for (j, e) in factors {
        exps[index[j]] += 2 * *e as i32;
    }
    let rhs = LaurentPoly::term(Monomial(exps), Rational::from_integer(1.into()));
    Ok((lhs, rhs))
}

/// `det (det A^I_J)_{I,J in binom([s],n)} = (det A)^{C(s-1,n-1)}` for one
/// square matrix.
pub fn verify_sylvester_matrix<R: Ring>(a: &Matrix<R>, n: usize, mode: Mode) -> Result<VerifyReport> {
    let start = Instant::now();
    let s = a.rows();
    if !a.is_square() {
        return usage("Cauchy-Sylvester needs a square matrix");
    }
    if n == 0 || n > s {
        return usage(format!("need 1 <= n <= s, got s = {s}, n = {n}"));
    }
    let sets = SubsetIdx::all(s, n);
    let compound = par_matrix(sets.len(), sets.len(), a.ctx(), |i, j| a.minor_det(&sets[i], &sets[j]))?;
    let lhs = determinant(&compound)?;
    let det_a = determinant(a)?;
    let e = binom(s as i64 - 1, n as i64 - 1);
    let rhs = (0..e).fold(R::one_in(a.ctx()), |acc, _| acc.mul(&det_a));
    Ok(VerifyReport::new("sylvester", s, n, mode)
        .param("exponent", e)
        .sides(&lhs, &rhs)
        .timed(start))
}

pub fn verify_sylvester(s: usize, n: usize, mode: Mode) -> Result<VerifyReport> {
    if n == 0 || n > s {
        return usage(format!("need 1 <= n <= s, got s = {s}, n = {n}"));
    }
    match mode {
        Mode::Symbolic => {
            if s > 4 {
                return Err(Error::Capability(format!(
                    "symbolic Cauchy-Sylvester supports s <= 4, got {s}"
                )));
            }
            verify_sylvester_matrix(&symbolic_matrix(s, s), n, mode)
        }
        Mode::Numeric { seed } => {
            let mut sampler = Sampler::new(seed);
            verify_sylvester_matrix(&random_matrix(s, s, &mut sampler), n, mode)
        }
    }
}

/// Both sides of the degree count agree: `n C(s+n-1, n) = (s+n-1) C(s+n-2, n-1)`.
pub fn check_degree_balance(s: usize, n: usize) -> bool {
    let (s, n) = (s as i64, n as i64);
    n as u64 * binom(s + n - 1, n) == (s + n - 1) as u64 * binom(s + n - 2, n - 1)
}

/// Expected leading monomial of `det M(A)` under `a_{ij} = x_j^{s+n-i}`:
/// `prod_k prod_j x_{(k-1)n+j}^{(s+1-k) C(s+n-j, s)}`.
pub fn expected_leading_monomial(s: usize, n: usize) -> Monomial {
    let mut exps = vec![0i32; s * n];
    for k in 1..=s {
        for j in 1..=n {
            let e = (s + 1 - k) as u64 * binom((s + n - j) as i64, s as i64);
            exps[(k - 1) * n + j - 1] = 2 * e as i32;
        }
    }
    Monomial(exps)
}

pub fn verify_leading_term(s: usize, n: usize) -> Result<VerifyReport> {
    let start = Instant::now();
    if s + n > 6 {
        return Err(Error::Capability(format!(
            "leading-term check needs s + n <= 6, got ({s},{n})"
        )));
    }
    let spec = CompoundSpec::monomial_specialization(s, n)?;
    let det = determinant(&build_m(&spec)?)?;
    let (lead, coeff) = det.leading_term()?;
    let want = LaurentPoly::term(expected_leading_monomial(s, n), Rational::from_integer(1.into()));
    let got = LaurentPoly::term(lead.clone(), coeff);
    Ok(VerifyReport::new("leading-term", s, n, Mode::Symbolic)
        .sides(&got, &want)
        .with_detail(format!("leading term {}", got.canonical_text()))
        .timed(start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::det_cofactor;

    fn set(e: &[usize], u: usize) -> SubsetIdx {
        SubsetIdx::new(e.to_vec(), u).unwrap()
    }

    #[test]
    fn shape_is_checked() {
        let a = symbolic_matrix(3, 5);
        assert!(matches!(CompoundSpec::new(2, 2, a), Err(Error::Usage(_))));
    }

    #[test]
    fn v_components_are_minors() {
        let spec = CompoundSpec::symbolic(3, 2).unwrap();
        let j = set(&[1, 3], 6);
        let v = vec_v(&spec, &j).unwrap();
        let rows = spec.row_sets();
        assert_eq!(rows.len(), 6);
        for (i, comp) in rows.iter().zip(&v) {
            assert_eq!(comp, &det_cofactor(&spec.matrix().minor(i, &j).unwrap()).unwrap());
        }
        assert!(matches!(vec_v(&spec, &set(&[1], 6)), Err(Error::Usage(_))));
    }

    #[test]
    fn vbar_example_signs() {
        // (det A^{34}_{46}, -det A^{24}_{46}, det A^{23}_{46}, det A^{14}_{46}, -det A^{13}_{46}, det A^{12}_{46})
        let spec = CompoundSpec::symbolic(3, 2).unwrap();
        let k = set(&[4, 6], 6);
        let vbar = vec_vbar(&spec, &k).unwrap();
        let expect = [([3, 4], 1), ([2, 4], -1), ([2, 3], 1), ([1, 4], 1), ([1, 3], -1), ([1, 2], 1)];
        for (got, (rows, sign)) in vbar.iter().zip(expect) {
            let d = spec.matrix().minor_det(&set(&rows, 4), &k).unwrap();
            assert_eq!(got, &d.scale_sign(sign));
        }
        assert!(matches!(vec_vbar(&spec, &set(&[4], 6)), Err(Error::Usage(_))));
    }

    #[test]
    fn laplace_worked_example() {
        let spec = CompoundSpec::symbolic(3, 2).unwrap();
        let (j, k) = (set(&[1, 3], 6), set(&[4, 6], 6));
        let pair = laplace_pair(&spec, &j, &k).unwrap();
        assert_eq!(pair, spec.full_minor(&set(&[1, 3, 4, 6], 6)).unwrap());
        let overlap = laplace_pair(&spec, &j, &set(&[3, 6], 6)).unwrap();
        assert!(overlap.is_zero());
    }

    #[test]
    fn degenerate_shapes() {
        let spec = CompoundSpec::symbolic(1, 3).unwrap();
        let m = build_m(&spec).unwrap();
        assert_eq!(m.rows(), 1);
        assert_eq!(m.get(0, 0), &spec.full_minor(&SubsetIdx::full(3)).unwrap());
        let spec = CompoundSpec::symbolic(3, 1).unwrap();
        assert_eq!(build_m(&spec).unwrap(), spec.matrix().clone());
    }

    #[test]
    fn main_factor_labels() {
        let labels = |s, n| -> Vec<String> {
            main_rhs_factors(s, n).unwrap().iter().map(|j| j.label()).collect()
        };
        assert_eq!(labels(2, 2), ["123", "134"]);
        assert_eq!(labels(2, 3), ["1234", "1245", "1456"]);
        assert_eq!(labels(3, 2), ["1235", "1345", "1356"]);
    }

    #[test]
    fn main_small_symbolic() {
        let r = verify_main(2, 2, Mode::Symbolic).unwrap();
        assert!(r.equal, "{r:?}");
        assert!(matches!(verify_main(3, 3, Mode::Symbolic), Err(Error::Capability(_))));
    }

    #[test]
    fn column_swap_negates() {
        let spec = CompoundSpec::numeric(2, 2, 9).unwrap();
        let mut m = build_m(&spec).unwrap();
        let before = determinant(&m).unwrap();
        m.swap_cols(0, 1);
        assert_eq!(determinant(&m).unwrap(), -before);
    }

    #[test]
    fn sylvester_trivial_cases() {
        assert!(verify_sylvester(3, 3, Mode::Symbolic).unwrap().equal);
        assert!(verify_sylvester(3, 1, Mode::Symbolic).unwrap().equal);
        assert!(matches!(verify_sylvester(2, 3, Mode::Symbolic), Err(Error::Usage(_))));
    }

    #[test]
    fn degree_balance() {
        assert!(check_degree_balance(3, 2));
        for s in 1..=12 {
            for n in 1..=12 {
                assert!(check_degree_balance(s, n));
            }
        }
    }

    #[test]
    fn leading_monomial_degenerate() {
        // s = 1: x1^n x2^(n-1) ... xn
        assert_eq!(expected_leading_monomial(1, 4), Monomial(vec![8, 6, 4, 2]));
        // n = 1: x1^s x2^(s-1) ... xs
        assert_eq!(expected_leading_monomial(4, 1), Monomial(vec![8, 6, 4, 2]));
    }
}
