//! Polynomial presentation `H*(Grass(r, m)) = Z[x_1, ..., x_r] / J`, with
//! `x_i = c_i(S)` of weight `i`.
//!
//! Eliminating the quotient-bundle classes `y_k = c_k(Q)` from `c(S) c(Q) = 1`
//! leaves `r` relations `h_1, ..., h_r`. They are generated by the recurrence
//!
//! ```text
//! h^(0)   = (x_1, ..., x_r)
//! h^(n+1) = A · h^(n),   A = [[-x_1, 1, 0, ..., 0],
//!                             [-x_2, 0, 1, ..., 0],
//!                              ...
//!                             [-x_r, 0, 0, ..., 0]]
//! ```
//!
//! and the ideal of `Grass(r, m)` is generated by `h^(m-r)`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::partitions::Partition;

/// Polynomial in `x_1, ..., x_r` with `deg x_i = i`.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct PresentationPoly {
    vars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl PresentationPoly {
    pub fn zero(vars: usize) -> Self {
        PresentationPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars], c.into());
        p
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, 1)
    }

    /// The generator `x_i`, `1 <= i <= vars`.
    pub fn x(vars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= vars, "x_{i} out of range for {vars} variables");
        let mut e = vec![0; vars];
        e[i - 1] = 1;
        let mut p = Self::zero(vars);
        p.add_term(e, BigInt::one());
        p
    }

    pub fn monomial(exponents: Vec<u32>, c: impl Into<BigInt>) -> Self {
        let vars = exponents.len();
        let mut p = Self::zero(vars);
        p.add_term(exponents, c.into());
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: BigInt) {
        debug_assert_eq!(exponents.len(), self.vars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ i · e_i` for an exponent vector.
    pub fn weight_of(exponents: &[u32]) -> u32 {
        exponents.iter().enumerate().map(|(i, e)| (i as u32 + 1) * e).sum()
    }

    /// Weighted degree if homogeneous; `None` for mixed polynomials. Zero
    /// reports `Some(0)`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut w = self.terms.keys().map(|e| Self::weight_of(e));
        match w.next() {
            None => Some(0),
            Some(d) => w.all(|e| e == d).then_some(d),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }
}

impl fmt::Debug for PresentationPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PresentationPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest weight first, then by exponent vector descending.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            Self::weight_of(b.0)
                .cmp(&Self::weight_of(a.0))
                .then_with(|| b.0.cmp(a.0))
        });
        for (i, (e, c)) in terms.into_iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            let mag = c.abs();
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{p}", i + 1)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &PresentationPoly {
    type Output = PresentationPoly;
    fn add(self, rhs: &PresentationPoly) -> PresentationPoly {
        assert_eq!(self.vars, rhs.vars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Neg for &PresentationPoly {
    type Output = PresentationPoly;
    fn neg(self) -> PresentationPoly {
        self.scale(&-BigInt::one())
    }
}

impl Sub for &PresentationPoly {
    type Output = PresentationPoly;
    fn sub(self, rhs: &PresentationPoly) -> PresentationPoly {
        self + &(-rhs)
    }
}

impl Mul for &PresentationPoly {
    type Output = PresentationPoly;
    fn mul(self, rhs: &PresentationPoly) -> PresentationPoly {
        assert_eq!(self.vars, rhs.vars);
        let mut out = PresentationPoly::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

/// One application of the recurrence matrix `A` to `(h_1, ..., h_r)`.
pub fn recurrence_step(h: &[PresentationPoly]) -> Vec<PresentationPoly> {
    let r = h.len();
    (0..r)
        .map(|i| {
            let lead = &PresentationPoly::x(r, i + 1) * &h[0];
            if i + 1 < r {
                &h[i + 1] - &lead
            } else {
                -&lead
            }
        })
        .collect()
}

/// `(n, [h_1^(n), ..., h_r^(n)])` for `n = 0..=n_max`.
pub fn presentation_h(r: usize, n_max: u32) -> Vec<(u32, Vec<PresentationPoly>)> {
    assert!(r >= 1, "presentation needs at least one generator");
    let mut out = Vec::with_capacity(n_max as usize + 1);
    let mut h: Vec<PresentationPoly> = (1..=r).map(|i| PresentationPoly::x(r, i)).collect();
    for n in 0..=n_max {
        out.push((n, h.clone()));
        if n < n_max {
            h = recurrence_step(&h);
        }
    }
    out
}

/// Generators of the ideal `J` presenting `H*(Grass(r, m))`: `h^(m-r)`.
pub fn grassmann_relations(r: u32, m: u32) -> Vec<PresentationPoly> {
    assert!(r <= m);
    if r == 0 {
        return Vec::new();
    }
    presentation_h(r as usize, m - r)
        .pop()
        .map(|(_, h)| h)
        .unwrap_or_default()
}

/// `c_k(Q)` for `k = 0..=up_to`, i.e. the degree-`k` parts of `1 / c(S)`
/// in the free polynomial ring.
pub fn quotient_chern_polys(r: usize, up_to: u32) -> Vec<PresentationPoly> {
    let mut y = vec![PresentationPoly::one(r)];
    for k in 1..=up_to as usize {
        let mut acc = PresentationPoly::zero(r);
        for j in 1..=k.min(r) {
            acc = &acc - &(&PresentationPoly::x(r, j) * &y[k - j]);
        }
        y.push(acc);
    }
    y
}

/// The Giambelli determinant `det(c_{λ_i + j - i}(Q))` as a polynomial in the
/// `x_i`: the Schubert class `σ_λ` written in the presentation.
pub fn giambelli(r: usize, lam: &Partition) -> PresentationPoly {
    let l = lam.len();
    if l == 0 {
        return PresentationPoly::one(r);
    }
    let top = lam.part(0) + l as u32;
    let y = quotient_chern_polys(r, top);
    let entry = |i: usize, j: usize| -> PresentationPoly {
        let k = lam.part(i) as i64 + j as i64 - i as i64;
        if k < 0 {
            PresentationPoly::zero(r)
        } else {
            y[k as usize].clone()
        }
    };
    let matrix: Vec<Vec<PresentationPoly>> = (0..l).map(|i| (0..l).map(|j| entry(i, j)).collect()).collect();
    determinant(&matrix, r)
}

// Laplace expansion along the first row; the Jacobi-Trudi matrices here are
// banded and at most `r x r`, so the expansion stays small.
fn determinant(matrix: &[Vec<PresentationPoly>], vars: usize) -> PresentationPoly {
    let n = matrix.len();
    if n == 1 {
        return matrix[0][0].clone();
    }
    let mut acc = PresentationPoly::zero(vars);
    for j in 0..n {
        if matrix[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<PresentationPoly>> = matrix[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = &matrix[0][j] * &determinant(&minor, vars);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}
