//! Partitions, box enumeration and integer polynomials in one variable.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Ordering is graded: by weight first, then lexicographically *descending*
/// on the parts, so `(2) < (1,1)`. This is the canonical enumeration order of
/// every basis in the crate.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from its parts, dropping trailing zeros.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameters(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidParameters(format!(
                "parts {parts:?} contain an interior zero"
            )));
        }
        Ok(Partition(parts))
    }

    /// Single row `(k)`; empty for `k = 0`.
    pub fn row(k: u32) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition(vec![k])
        }
    }

    /// Single column `(1^k)`.
    pub fn column(k: u32) -> Self {
        Partition(vec![1; k as usize])
    }

    /// The full `rows × cols` rectangle.
    pub fn rectangle(rows: u32, cols: u32) -> Self {
        if cols == 0 {
            Self::empty()
        } else {
            Partition(vec![cols; rows as usize])
        }
    }

    pub(crate) fn from_parts_unchecked(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (zero-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn fits_box(&self, rows: u32, cols: u32) -> bool {
        self.len() <= rows as usize && self.part(0) <= cols
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|c| self.0.iter().take_while(|&&p| p >= c).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Complement inside the `rows × cols` box, rotated by 180 degrees.
    pub fn box_complement(&self, rows: u32, cols: u32) -> Option<Partition> {
        if !self.fits_box(rows, cols) {
            return None;
        }
        let parts = (0..rows as usize).rev().map(|i| cols - self.part(i)).collect();
        Some(Partition::from_parts_unchecked(parts))
    }

    /// The partition with its first row removed.
    pub fn tail(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions with at most `rows` parts, each at most `cols`, in
/// canonical order. With `weight = Some(w)` only those of weight `w`.
pub fn partitions_in_box(rows: u32, cols: u32, weight: Option<u32>) -> Vec<Partition> {
    let max_weight = rows * cols;
    let weights: Vec<u32> = match weight {
        Some(w) if w > max_weight => return Vec::new(),
        Some(w) => vec![w],
        None => (0..=max_weight).collect(),
    };
    let mut out = Vec::new();
    for w in weights {
        let mut current = Vec::with_capacity(rows as usize);
        fill_parts(rows, cols, w, &mut current, &mut out);
    }
    out
}

// Emits partitions of `remaining` with at most `rows_left` parts bounded by
// `bound`, largest first part first.
fn fill_parts(rows_left: u32, bound: u32, remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    if rows_left == 0 || (rows_left * bound) < remaining {
        return;
    }
    let hi = bound.min(remaining);
    let lo = remaining.div_ceil(rows_left);
    for p in (lo..=hi).rev() {
        current.push(p);
        fill_parts(rows_left - 1, p, remaining - p, current, out);
        current.pop();
    }
}

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Polynomial in one variable `t` with big-integer coefficients.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct IntPolynomial {
    coeffs: BTreeMap<u32, BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(degree: u32, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(degree, coeff.into());
        p
    }

    /// `coeffs[j]` is the coefficient of `t^j`.
    pub fn from_coeffs<T: Into<BigInt> + Clone>(coeffs: &[T]) -> Self {
        let mut p = Self::zero();
        for (j, c) in coeffs.iter().enumerate() {
            p.add_term(j as u32, c.clone().into());
        }
        p
    }

    pub fn add_term(&mut self, degree: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(degree).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, degree: u32) -> BigInt {
        self.coeffs.get(&degree).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Nonzero terms in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    /// Dense coefficient vector `[c_0, ..., c_deg]`.
    pub fn to_dense(&self) -> Vec<BigInt> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|j| self.coeff(j)).collect(),
        }
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .map(|(d, c)| c * num_traits::pow(t.clone(), *d as usize))
            .sum()
    }

    /// Substitutes `t -> t^factor`.
    pub fn stretch(&self, factor: u32) -> Self {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|(d, c)| (d * factor, c.clone())).collect(),
        }
    }

    /// `c_j = c_{deg - j}` for all `j`; the zero polynomial counts as palindromic.
    pub fn is_palindromic(&self) -> bool {
        match self.degree() {
            None => true,
            Some(top) => (0..=top).all(|j| self.coeff(j) == self.coeff(top - j)),
        }
    }

    /// Sum of the absolute values of the coefficients.
    pub fn total_rank(&self) -> BigInt {
        self.coeffs.values().map(|c| c.abs()).sum()
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let unit = mag.is_one();
            match d {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "t")?,
                1 => write!(f, "{mag}t")?,
                _ if unit => write!(f, "t^{d}")?,
                _ => write!(f, "{mag}t^{d}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        for (d, c) in &rhs.coeffs {
            out.add_term(*d, c.clone());
        }
        out
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|(d, c)| (*d, -c)).collect(),
        }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (da, ca) in &self.coeffs {
            for (db, cb) in &rhs.coeffs {
                out.add_term(da + db, ca * cb);
            }
        }
        out
    }
}

/// Gaussian binomial `[m choose r]_t`, the generating function of partitions
/// in the `r × (m-r)` box by weight.
pub fn gaussian_binomial(m: u32, r: u32) -> Result<IntPolynomial> {
    if r > m {
        return Err(Error::InvalidParameters(format!(
            "gaussian binomial needs r <= m, got r = {r}, m = {m}"
        )));
    }
    // Pascal-type recurrence [m, r] = [m-1, r-1] + t^r [m-1, r], row by row.
    let mut row = vec![IntPolynomial::one()];
    for mm in 1..=m {
        let mut next = Vec::with_capacity(mm as usize + 1);
        for rr in 0..=mm {
            let p = if rr == 0 || rr == mm {
                IntPolynomial::one()
            } else {
                let shifted = &IntPolynomial::monomial(rr, 1) * &row[rr as usize];
                &row[rr as usize - 1] + &shifted
            };
            next.push(p);
        }
        row = next;
    }
    Ok(row.swap_remove(r as usize))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn single_row_box() {
        assert_eq!(partitions_in_box(1, 2, None), vec![p(&[]), p(&[1]), p(&[2])]);
    }

    #[test]
    fn weight_two_in_two_by_two() {
        assert_eq!(partitions_in_box(2, 2, Some(2)), vec![p(&[2]), p(&[1, 1])]);
    }

    #[test]
    fn box_counts_match_brute_force() {
        // Independent enumeration: all sequences in [0, cols]^rows that are
        // weakly decreasing.
        fn brute(rows: u32, cols: u32) -> usize {
            let mut count = 0;
            let total = (cols as usize + 1).pow(rows);
            for code in 0..total {
                let mut c = code;
                let mut seq = Vec::new();
                for _ in 0..rows {
                    seq.push(c % (cols as usize + 1));
                    c /= cols as usize + 1;
                }
                if seq.windows(2).all(|w| w[0] >= w[1]) {
                    count += 1;
                }
            }
            count
        }
        assert_eq!(brute(2, 3), 10);
        assert_eq!(partitions_in_box(2, 3, None).len(), 10);
        for rows in 0..=4 {
            for cols in 0..=4 {
                assert_eq!(partitions_in_box(rows, cols, None).len(), brute(rows, cols));
            }
        }
    }

    #[test]
    fn canonical_order_is_graded_then_lex_descending() {
        let all = partitions_in_box(3, 3, None);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn box_complement_is_involutive() {
        for lam in partitions_in_box(2, 3, None) {
            let c = lam.box_complement(2, 3).unwrap();
            assert_eq!(c.weight() + lam.weight(), 6);
            assert_eq!(c.box_complement(2, 3).unwrap(), lam);
        }
    }

    #[test]
    fn gaussian_binomial_examples() {
        assert_eq!(gaussian_binomial(3, 1).unwrap(), IntPolynomial::from_coeffs(&[1, 1, 1]));
        // weights of partitions in the 2x2 box: 0,1,2,2,3,4
        assert_eq!(
            gaussian_binomial(4, 2).unwrap(),
            IntPolynomial::from_coeffs(&[1, 1, 2, 1, 1])
        );
        assert_eq!(gaussian_binomial(7, 0).unwrap(), IntPolynomial::one());
        assert!(gaussian_binomial(2, 3).is_err());
    }

    #[test]
    fn gaussian_binomial_counts_box_partitions() {
        for m in 0..=8 {
            for r in 0..=m {
                let g = gaussian_binomial(m, r).unwrap();
                let parts = partitions_in_box(r, m - r, None);
                for (j, c) in g.to_dense().iter().enumerate() {
                    let count = parts.iter().filter(|q| q.weight() == j as u32).count();
                    assert_eq!(*c, BigInt::from(count));
                }
                assert!(g.is_palindromic());
                assert_eq!(g.eval(&BigInt::one()), binomial(m as u64, r as u64));
                assert_eq!(parts.len(), binomial(m as u64, r as u64).try_into().unwrap_or(0usize));
            }
        }
    }

    #[test]
    fn polynomial_display() {
        let poly = IntPolynomial::from_coeffs(&[1, -1, 2, 0, 1]);
        assert_eq!(poly.to_string(), "1 - t + 2t^2 + t^4");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }
}
