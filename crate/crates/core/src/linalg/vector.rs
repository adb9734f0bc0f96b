use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{ratio_to_string, GaussRat};

/// A column vector in `Q(i)^n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ExactVector(Vec<GaussRat>);

impl ExactVector {
    pub fn new(entries: Vec<GaussRat>) -> Self {
        ExactVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        ExactVector(vec![GaussRat::zero(); n])
    }

    /// The standard basis vector with a one in coordinate `k`.
    pub fn unit(n: usize, k: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[k] = GaussRat::one();
        v
    }

    pub fn from_ints(xs: &[(i64, i64)]) -> Self {
        ExactVector(xs.iter().map(|&(a, b)| GaussRat::from_gauss_int(a, b)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[GaussRat] {
        &self.0
    }

    pub fn get(&self, k: usize) -> &GaussRat {
        &self.0[k]
    }

    pub fn iter(&self) -> impl Iterator<Item = &GaussRat> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(GaussRat::is_zero)
    }

    pub fn scale(&self, k: &GaussRat) -> Self {
        ExactVector(self.0.iter().map(|x| x * k).collect())
    }

    pub fn conj(&self) -> Self {
        ExactVector(self.0.iter().map(GaussRat::conj).collect())
    }

    fn check_len(&self, other: &Self, op: &'static str) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                op,
                left: (self.len(), 1),
                right: (other.len(), 1),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_len(other, "vector add")?;
        Ok(ExactVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_len(other, "vector sub")?;
        Ok(ExactVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// Hermitian inner product `<self, other> = sum self_k * conj(other_k)`.
    pub fn inner(&self, other: &Self) -> Result<GaussRat> {
        self.check_len(other, "inner")?;
        let mut s = GaussRat::zero();
        for (a, b) in self.0.iter().zip(&other.0) {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            s += &(a * &b.conj());
        }
        Ok(s)
    }

    /// `<v, v>`, a nonnegative rational embedded in `Q(i)`.
    pub fn norm_sq(&self) -> GaussRat {
        GaussRat::real(self.0.iter().map(GaussRat::norm_sq).sum())
    }

    /// Index of the first nonzero coordinate.
    pub fn leading_index(&self) -> Option<usize> {
        self.0.iter().position(|x| !x.is_zero())
    }

    /// `Some(c)` with `other = c * self` when `other` is a multiple of `self`
    /// (`self` must be nonzero).
    pub fn ratio_to(&self, other: &Self) -> Option<GaussRat> {
        let p = self.leading_index()?;
        if self.len() != other.len() {
            return None;
        }
        let c = other.0[p].checked_div(&self.0[p]).ok()?;
        (self.scale(&c) == *other).then_some(c)
    }

    /// Linear combination `sum coeffs_k * vs_k`.
    pub fn combination(coeffs: &[GaussRat], vs: &[ExactVector]) -> Result<Self> {
        let n = vs.first().map_or(0, |v| v.len());
        let mut acc = ExactVector::zeros(n);
        for (c, v) in coeffs.iter().zip(vs) {
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&v.scale(c))?;
        }
        Ok(acc)
    }

    pub fn to_dump(&self) -> VectorDump {
        VectorDump {
            len: self.len(),
            entries: self
                .0
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| (k, ratio_to_string(x.re()), ratio_to_string(x.im())))
                .collect(),
        }
    }
}

impl FromIterator<GaussRat> for ExactVector {
    fn from_iter<T: IntoIterator<Item = GaussRat>>(iter: T) -> Self {
        ExactVector(iter.into_iter().collect())
    }
}

/// Sparse JSON form of a vector: `{"len": n, "entries": [[k, "re", "im"], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorDump {
    pub len: usize,
    pub entries: Vec<(usize, String, String)>,
}
