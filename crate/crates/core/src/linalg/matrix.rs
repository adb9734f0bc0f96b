//! Dense exact matrices over `Q(i)`.
//!
//! A matrix is held as one positive common denominator together with a grid of
//! Gaussian-integer numerators. The representation is canonical: the
//! denominator shares no factor with every numerator at once, the zero matrix
//! has denominator one, and numerators are kept in `i64` whenever all of them
//! fit. Structural equality is therefore exact value equality. Products run an
//! `i128` kernel when the entry bound allows and fall back to `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::vector::ExactVector;
use crate::scalar::{ratio_to_string, GaussRat};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Store {
    Small { re: Vec<i64>, im: Vec<i64> },
    Big { re: Vec<BigInt>, im: Vec<BigInt> },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    den: BigInt,
    num: Store,
}

/// Lowest common multiple of the component denominators of `xs`.
pub(crate) fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a GaussRat>) -> BigInt {
    let mut l = BigInt::one();
    for x in xs {
        for q in [x.re(), x.im()] {
            let d = q.denom();
            if !d.is_one() && !(&l % d).is_zero() {
                l = l.lcm(d);
            }
        }
    }
    l
}

/// Numerators of `xs` over the common denominator `den`.
pub(crate) fn scaled_numerators(xs: &[GaussRat], den: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    let part = |q: &num_rational::BigRational| -> BigInt {
        if q.is_zero() {
            BigInt::zero()
        } else {
            q.numer() * (den / q.denom())
        }
    };
    xs.iter().map(|x| (part(x.re()), part(x.im()))).unzip()
}

fn narrow(v: &[BigInt]) -> Option<Vec<i64>> {
    v.iter().map(|x| x.to_i64()).collect()
}

impl Store {
    fn len(&self) -> usize {
        match self {
            Store::Small { re, .. } => re.len(),
            Store::Big { re, .. } => re.len(),
        }
    }

    fn parts(&self, k: usize) -> (BigInt, BigInt) {
        match self {
            Store::Small { re, im } => (BigInt::from(re[k]), BigInt::from(im[k])),
            Store::Big { re, im } => (re[k].clone(), im[k].clone()),
        }
    }

    fn is_zero_at(&self, k: usize) -> bool {
        match self {
            Store::Small { re, im } => re[k] == 0 && im[k] == 0,
            Store::Big { re, im } => re[k].is_zero() && im[k].is_zero(),
        }
    }

    fn to_big(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        match self {
            Store::Small { re, im } => (
                re.iter().map(|&x| BigInt::from(x)).collect(),
                im.iter().map(|&x| BigInt::from(x)).collect(),
            ),
            Store::Big { re, im } => (re.clone(), im.clone()),
        }
    }

    fn is_real(&self) -> bool {
        match self {
            Store::Small { im, .. } => im.iter().all(|&x| x == 0),
            Store::Big { im, .. } => im.iter().all(|x| x.is_zero()),
        }
    }

    fn max_abs(&self) -> Option<u128> {
        match self {
            Store::Small { re, im } => Some(
                re.iter()
                    .chain(im.iter())
                    .map(|x| x.unsigned_abs() as u128)
                    .max()
                    .unwrap_or(0),
            ),
            Store::Big { .. } => None,
        }
    }
}

impl ExactMatrix {
    fn assemble_big(rows: usize, cols: usize, den: BigInt, re: Vec<BigInt>, im: Vec<BigInt>) -> Self {
        debug_assert!(den.is_positive());
        let mut g = den.clone();
        for x in re.iter().chain(im.iter()) {
            if g.is_one() {
                break;
            }
            if !x.is_zero() {
                g = g.gcd(x);
            }
        }
        let all_zero = re.iter().chain(im.iter()).all(|x| x.is_zero());
        let (den, re, im) = if all_zero {
            (BigInt::one(), re, im)
        } else if g.is_one() {
            (den, re, im)
        } else {
            (
                &den / &g,
                re.into_iter().map(|x| x / &g).collect(),
                im.into_iter().map(|x| x / &g).collect(),
            )
        };
        let num = match (narrow(&re), narrow(&im)) {
            (Some(r), Some(i)) => Store::Small { re: r, im: i },
            _ => Store::Big { re, im },
        };
        ExactMatrix { rows, cols, den, num }
    }

    fn assemble_i128(rows: usize, cols: usize, den: BigInt, re: Vec<i128>, im: Vec<i128>) -> Self {
        let Some(d) = den.to_i128() else {
            return Self::assemble_big(
                rows,
                cols,
                den,
                re.into_iter().map(BigInt::from).collect(),
                im.into_iter().map(BigInt::from).collect(),
            );
        };
        let mut g = d;
        for &x in re.iter().chain(im.iter()) {
            if g == 1 {
                break;
            }
            if x != 0 {
                g = g.gcd(&x);
            }
        }
        let all_zero = re.iter().chain(im.iter()).all(|&x| x == 0);
        let (d, g) = if all_zero { (1, 1) } else { (d / g, g) };
        let fits = re.iter().chain(im.iter()).all(|&x| i64::try_from(x / g).is_ok());
        if fits {
            ExactMatrix {
                rows,
                cols,
                den: BigInt::from(d),
                num: Store::Small {
                    re: re.iter().map(|&x| (x / g) as i64).collect(),
                    im: im.iter().map(|&x| (x / g) as i64).collect(),
                },
            }
        } else {
            ExactMatrix {
                rows,
                cols,
                den: BigInt::from(d),
                num: Store::Big {
                    re: re.iter().map(|&x| BigInt::from(x / g)).collect(),
                    im: im.iter().map(|&x| BigInt::from(x / g)).collect(),
                },
            }
        }
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<GaussRat>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "from_entries",
                left: (rows, cols),
                right: (entries.len(), 1),
            });
        }
        let den = common_denominator(&entries);
        let (re, im) = scaled_numerators(&entries, &den);
        Ok(Self::assemble_big(rows, cols, den, re, im))
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussRat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self::from_entries(rows, cols, entries).expect("sizes agree by construction")
    }

    /// Matrix with Gaussian-integer entries `(re, im)` given by `f`.
    pub fn from_int_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> (i64, i64)) -> Self {
        let mut re = Vec::with_capacity(rows * cols);
        let mut im = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let (a, b) = f(r, c);
                re.push(a as i128);
                im.push(b as i128);
            }
        }
        Self::assemble_i128(rows, cols, BigInt::one(), re, im)
    }

    /// Builds a matrix from nested rows of Gaussian integers.
    pub fn from_int_rows(rows: &[Vec<(i64, i64)>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_int_fn(rows.len(), cols, |r, c| rows[r][c])
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            den: BigInt::one(),
            num: Store::Small {
                re: vec![0; rows * cols],
                im: vec![0; rows * cols],
            },
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_int_fn(n, n, |r, c| (i64::from(r == c), 0))
    }

    pub fn diag(values: &[GaussRat]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |r, c| if r == c { values[r].clone() } else { GaussRat::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// The common denominator of all entries.
    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// Gaussian-integer numerator of entry `(r, c)` over [`Self::denominator`].
    pub fn numerator(&self, r: usize, c: usize) -> (BigInt, BigInt) {
        self.num.parts(r * self.cols + c)
    }

    pub fn get(&self, r: usize, c: usize) -> GaussRat {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        let (a, b) = self.num.parts(r * self.cols + c);
        GaussRat::from_parts(a, b, &self.den)
    }

    pub fn is_zero_at(&self, r: usize, c: usize) -> bool {
        self.num.is_zero_at(r * self.cols + c)
    }

    pub fn entries(&self) -> Vec<GaussRat> {
        (0..self.rows * self.cols)
            .map(|k| {
                let (a, b) = self.num.parts(k);
                GaussRat::from_parts(a, b, &self.den)
            })
            .collect()
    }

    /// Copy with entry `(r, c)` replaced.
    pub fn with_entry(&self, r: usize, c: usize, value: GaussRat) -> Self {
        let mut e = self.entries();
        e[r * self.cols + c] = value;
        Self::from_entries(self.rows, self.cols, e).expect("same shape")
    }

    pub fn is_zero(&self) -> bool {
        (0..self.num.len()).all(|k| self.num.is_zero_at(k))
    }

    pub fn is_real(&self) -> bool {
        self.num.is_real()
    }

    pub fn nonzero_count(&self) -> usize {
        (0..self.num.len()).filter(|&k| !self.num.is_zero_at(k)).count()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self.is_zero_at(r, c)))
    }

    pub fn diagonal(&self) -> Vec<GaussRat> {
        (0..self.rows.min(self.cols)).map(|k| self.get(k, k)).collect()
    }

    pub fn trace(&self) -> GaussRat {
        let mut s = GaussRat::zero();
        for k in 0..self.rows.min(self.cols) {
            s += &self.get(k, k);
        }
        s
    }

    /// First entry (row-major) where `self` and `other` differ, `None` if equal.
    /// Shape mismatches report `(0, 0)`.
    pub fn first_discrepancy(&self, other: &ExactMatrix) -> Option<(usize, usize)> {
        if self.shape() != other.shape() {
            return Some((0, 0));
        }
        if self == other {
            return None;
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) != other.get(r, c) {
                    return Some((r, c));
                }
            }
        }
        None
    }

    fn map_parts(
        &self,
        f: impl Fn(&BigInt, &BigInt) -> (BigInt, BigInt),
        rows: usize,
        cols: usize,
        order: impl Fn(usize) -> usize,
    ) -> Self {
        let (re, im) = self.num.to_big();
        let (nre, nim): (Vec<_>, Vec<_>) = (0..rows * cols)
            .map(|k| {
                let src = order(k);
                f(&re[src], &im[src])
            })
            .unzip();
        Self::assemble_big(rows, cols, self.den.clone(), nre, nim)
    }

    pub fn transpose(&self) -> Self {
        let (rows, cols) = (self.rows, self.cols);
        match &self.num {
            Store::Small { re, im } => {
                let idx = |k: usize| (k % rows) * cols + k / rows;
                ExactMatrix {
                    rows: cols,
                    cols: rows,
                    den: self.den.clone(),
                    num: Store::Small {
                        re: (0..re.len()).map(|k| re[idx(k)]).collect(),
                        im: (0..im.len()).map(|k| im[idx(k)]).collect(),
                    },
                }
            }
            Store::Big { .. } => self.map_parts(
                |a, b| (a.clone(), b.clone()),
                cols,
                rows,
                |k| (k % rows) * cols + k / rows,
            ),
        }
    }

    pub fn conj(&self) -> Self {
        match &self.num {
            Store::Small { re, im } => ExactMatrix {
                rows: self.rows,
                cols: self.cols,
                den: self.den.clone(),
                num: Store::Small {
                    re: re.clone(),
                    im: im.iter().map(|&x| -x).collect(),
                },
            },
            Store::Big { .. } => self.map_parts(|a, b| (a.clone(), -b), self.rows, self.cols, |k| k),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        self.transpose().conj()
    }

    fn combine(&self, other: &ExactMatrix, sign: i64, op: &'static str) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        let l = self.den.lcm(&other.den);
        let fa = &l / &self.den;
        let fb = &l / &other.den;
        if let (Store::Small { re: ar, im: ai }, Store::Small { re: br, im: bi }, Some(fa), Some(fb)) =
            (&self.num, &other.num, fa.to_i64(), fb.to_i64())
        {
            let (fa, fb, s) = (fa as i128, fb as i128, sign as i128);
            let re = ar
                .iter()
                .zip(br)
                .map(|(&a, &b)| a as i128 * fa + s * b as i128 * fb)
                .collect();
            let im = ai
                .iter()
                .zip(bi)
                .map(|(&a, &b)| a as i128 * fa + s * b as i128 * fb)
                .collect();
            return Ok(Self::assemble_i128(self.rows, self.cols, l, re, im));
        }
        let (ar, ai) = self.num.to_big();
        let (br, bi) = other.num.to_big();
        let s = BigInt::from(sign);
        let re = ar.iter().zip(&br).map(|(a, b)| a * &fa + &s * b * &fb).collect();
        let im = ai.iter().zip(&bi).map(|(a, b)| a * &fa + &s * b * &fb).collect();
        Ok(Self::assemble_big(self.rows, self.cols, l, re, im))
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<Self> {
        self.combine(other, 1, "add")
    }

    pub fn sub(&self, other: &ExactMatrix) -> Result<Self> {
        self.combine(other, -1, "sub")
    }

    /// `self * k` for a Gaussian rational `k`.
    pub fn scale(&self, k: &GaussRat) -> Self {
        let m = common_denominator([k]);
        let (p, q) = scaled_numerators(std::slice::from_ref(k), &m);
        let (p, q) = (&p[0], &q[0]);
        let (re, im) = self.num.to_big();
        let nre = re.iter().zip(&im).map(|(a, b)| a * p - b * q).collect();
        let nim = re.iter().zip(&im).map(|(a, b)| a * q + b * p).collect();
        Self::assemble_big(self.rows, self.cols, &self.den * &m, nre, nim)
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&GaussRat::from_int(k))
    }

    /// `self - lambda * I`.
    pub fn shift(&self, lambda: &GaussRat) -> Result<Self> {
        self.sub(&ExactMatrix::identity(self.rows).scale(lambda))
    }

    pub fn matmul(&self, other: &ExactMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "matmul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let (n, m, p) = (self.rows, self.cols, other.cols);
        let den = &self.den * &other.den;
        if let (Some(ma), Some(mb)) = (self.num.max_abs(), other.num.max_abs()) {
            let bound = ma.checked_mul(mb).and_then(|x| x.checked_mul(2 * m.max(1) as u128));
            if bound.is_some_and(|b| b < i128::MAX as u128) {
                let (Store::Small { re: ar, im: ai }, Store::Small { re: br, im: bi }) = (&self.num, &other.num) else {
                    unreachable!()
                };
                let b_real = other.num.is_real();
                let rows: Vec<(Vec<i128>, Vec<i128>)> = (0..n)
                    .into_par_iter()
                    .map(|r| {
                        let mut acc_re = vec![0i128; p];
                        let mut acc_im = vec![0i128; p];
                        for k in 0..m {
                            let (xr, xi) = (ar[r * m + k] as i128, ai[r * m + k] as i128);
                            if xr == 0 && xi == 0 {
                                continue;
                            }
                            let brow = &br[k * p..(k + 1) * p];
                            if b_real {
                                for c in 0..p {
                                    let y = brow[c] as i128;
                                    acc_re[c] += xr * y;
                                    acc_im[c] += xi * y;
                                }
                            } else {
                                let birow = &bi[k * p..(k + 1) * p];
                                for c in 0..p {
                                    let (yr, yi) = (brow[c] as i128, birow[c] as i128);
                                    acc_re[c] += xr * yr - xi * yi;
                                    acc_im[c] += xr * yi + xi * yr;
                                }
                            }
                        }
                        (acc_re, acc_im)
                    })
                    .collect();
                let (re, im): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
                return Ok(Self::assemble_i128(n, p, den, re.concat(), im.concat()));
            }
        }
        let (ar, ai) = self.num.to_big();
        let (br, bi) = other.num.to_big();
        let rows: Vec<(Vec<BigInt>, Vec<BigInt>)> = (0..n)
            .into_par_iter()
            .map(|r| {
                let mut acc_re = vec![BigInt::zero(); p];
                let mut acc_im = vec![BigInt::zero(); p];
                for k in 0..m {
                    let (xr, xi) = (&ar[r * m + k], &ai[r * m + k]);
                    if xr.is_zero() && xi.is_zero() {
                        continue;
                    }
                    for c in 0..p {
                        let (yr, yi) = (&br[k * p + c], &bi[k * p + c]);
                        acc_re[c] += xr * yr - xi * yi;
                        acc_im[c] += xr * yi + xi * yr;
                    }
                }
                (acc_re, acc_im)
            })
            .collect();
        let (re, im): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
        Ok(Self::assemble_big(n, p, den, re.concat(), im.concat()))
    }

    pub fn matvec(&self, v: &ExactVector) -> Result<ExactVector> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                op: "matvec",
                left: self.shape(),
                right: (v.len(), 1),
            });
        }
        let col = ExactMatrix::from_entries(v.len(), 1, v.entries().to_vec())?;
        Ok(self.matmul(&col)?.column(0))
    }

    /// `[self * v for v in vs]`, computed as one product.
    pub fn apply_all(&self, vs: &[ExactVector]) -> Result<Vec<ExactVector>> {
        if vs.is_empty() {
            return Ok(Vec::new());
        }
        let m = self.matmul(&ExactMatrix::from_columns(vs)?)?;
        Ok(m.columns())
    }

    pub fn columns(&self) -> Vec<ExactVector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    /// Kronecker product; row index of the result is `u * other.rows() + u'`.
    pub fn kron(&self, other: &ExactMatrix) -> Self {
        let (r1, c1, r2, c2) = (self.rows, self.cols, other.rows, other.cols);
        let (rows, cols) = (r1 * r2, c1 * c2);
        let (ar, ai) = self.num.to_big();
        let (br, bi) = other.num.to_big();
        let mut re = Vec::with_capacity(rows * cols);
        let mut im = Vec::with_capacity(rows * cols);
        for u in 0..r1 {
            for u2 in 0..r2 {
                for v in 0..c1 {
                    let (xr, xi) = (&ar[u * c1 + v], &ai[u * c1 + v]);
                    for v2 in 0..c2 {
                        let (yr, yi) = (&br[u2 * c2 + v2], &bi[u2 * c2 + v2]);
                        re.push(xr * yr - xi * yi);
                        im.push(xr * yi + xi * yr);
                    }
                }
            }
        }
        Self::assemble_big(rows, cols, &self.den * &other.den, re, im)
    }

    /// `self ⊗ self ⊗ ... ⊗ self` (`k` factors); the empty power is the 1x1 identity.
    pub fn kron_power(&self, k: usize) -> Self {
        (0..k).fold(ExactMatrix::identity(1), |acc, _| acc.kron(self))
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = ExactMatrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.matmul(self)?;
        }
        Ok(acc)
    }

    pub fn column(&self, c: usize) -> ExactVector {
        ExactVector::new((0..self.rows).map(|r| self.get(r, c)).collect())
    }

    pub fn row(&self, r: usize) -> ExactVector {
        ExactVector::new((0..self.cols).map(|c| self.get(r, c)).collect())
    }

    pub fn from_columns(cols: &[ExactVector]) -> Result<Self> {
        let n = cols.first().map_or(0, |v| v.len());
        if let Some(bad) = cols.iter().find(|v| v.len() != n) {
            return Err(Error::DimensionMismatch {
                op: "from_columns",
                left: (n, 1),
                right: (bad.len(), 1),
            });
        }
        Ok(Self::from_fn(n, cols.len(), |r, c| cols[c].get(r).clone()))
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let (re, im) = self.num.to_big();
        let mut nre = Vec::with_capacity(rows.len() * cols.len());
        let mut nim = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                nre.push(re[r * self.cols + c].clone());
                nim.push(im[r * self.cols + c].clone());
            }
        }
        Self::assemble_big(rows.len(), cols.len(), self.den.clone(), nre, nim)
    }

    pub fn to_dump(&self) -> MatrixDump {
        let mut entries = Vec::new();
        for r in 0..self.rows {
            for c in 0..self.cols {
                if !self.is_zero_at(r, c) {
                    let x = self.get(r, c);
                    entries.push((r, c, ratio_to_string(x.re()), ratio_to_string(x.im())));
                }
            }
        }
        MatrixDump {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn from_dump(dump: &MatrixDump) -> Result<Self> {
        let mut e = vec![GaussRat::zero(); dump.rows * dump.cols];
        for (r, c, re, im) in &dump.entries {
            if *r >= dump.rows || *c >= dump.cols {
                return Err(Error::Parse {
                    what: "matrix dump entry",
                    input: format!("[{r}, {c}]"),
                });
            }
            let sign = if im.starts_with('-') { "" } else { "+" };
            e[r * dump.cols + c] = format!("{re}{sign}{im}*i").parse()?;
        }
        Self::from_entries(dump.rows, dump.cols, e)
    }
}

impl std::fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  {}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Sparse JSON form: only nonzero entries, sorted by `(row, col)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDump {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, String, String)>,
}
