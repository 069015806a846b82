//! Integral cohomology of the Grassmannian `Grass(r, m)` of `r`-planes in
//! `C^m`, in the Schubert basis.
//!
//! Schubert classes `σ_λ` are indexed by partitions in the `r × (m-r)` box
//! (at most `r` rows, parts at most `m - r`); `σ_λ` sits in Chern degree `|λ|`.
//! Conventions: `c_k(Q) = σ_(k)` and `c_i(S) = (-1)^i σ_(1^i)`, so that
//! `c(S) c(Q) = 1` holds literally.
//!
//! Multiplication goes through a per-ring structure-constant table. The table
//! is built once per `(r, m)` from the Pieri rule, writing `σ_λ` as
//! `σ_(λ_1) · σ_(λ_2, λ_3, ...)` minus the other terms of that Pieri product.
//! [`oracle`] certifies it against the polynomial presentation.

pub mod linalg;
pub mod oracle;
pub mod presentation;

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::{binomial, partitions_in_box, IntPolynomial, Partition};

/// `Grass(r, m)`: `r`-planes in `C^m`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrassSpec {
    r: u32,
    m: u32,
}

impl GrassSpec {
    pub fn new(r: u32, m: u32) -> Result<Self> {
        if r > m {
            return Err(Error::InvalidParameters(format!(
                "Grass(r, m) needs r <= m, got r = {r}, m = {m}"
            )));
        }
        Ok(GrassSpec { r, m })
    }

    /// Rank of the tautological subbundle.
    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Rank of the tautological quotient bundle; the width of the box.
    pub fn cols(&self) -> u32 {
        self.m - self.r
    }

    /// Complex dimension `r (m - r)`.
    pub fn dim(&self) -> u32 {
        self.r * (self.m - self.r)
    }

    /// Rank of the cohomology ring as a free module, `binomial(m, r)`.
    pub fn rank(&self) -> BigInt {
        binomial(self.m as u64, self.r as u64)
    }

    pub fn contains(&self, lam: &Partition) -> bool {
        lam.fits_box(self.r, self.cols())
    }

    /// The partition `((m-r)^r)` of the point class.
    pub fn full_box(&self) -> Partition {
        Partition::rectangle(self.r, self.cols())
    }

    pub fn basis(&self) -> Vec<Partition> {
        partitions_in_box(self.r, self.cols(), None)
    }
}

impl fmt::Debug for GrassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GrassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Grass({},{})", self.r, self.m)
    }
}

/// Sparse product `σ_λ σ_μ = Σ c_ν σ_ν`, stored as `(index of ν, c_ν)`.
pub type BasisProduct = Vec<(u32, i64)>;

/// Basis and multiplication table of one Grassmannian.
///
/// Obtained through [`schubert_ring`]; shared read-only between threads.
pub struct SchubertRing {
    spec: GrassSpec,
    basis: Vec<Partition>,
    index: HashMap<Partition, u32>,
    degree_ranges: Vec<std::ops::Range<u32>>,
    table: OnceLock<Vec<Vec<BasisProduct>>>,
    duals: OnceLock<Vec<u32>>,
}

impl SchubertRing {
    fn new(spec: GrassSpec) -> Self {
        let basis = spec.basis();
        let index = basis.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        let mut degree_ranges = Vec::with_capacity(spec.dim() as usize + 1);
        let mut start = 0u32;
        for d in 0..=spec.dim() {
            let end = start + basis[start as usize..].iter().take_while(|p| p.weight() == d).count() as u32;
            degree_ranges.push(start..end);
            start = end;
        }
        SchubertRing {
            spec,
            basis,
            index,
            degree_ranges,
            table: OnceLock::new(),
            duals: OnceLock::new(),
        }
    }

    pub fn spec(&self) -> GrassSpec {
        self.spec
    }

    /// Schubert basis in canonical order.
    pub fn basis(&self) -> &[Partition] {
        &self.basis
    }

    pub fn index_of(&self, lam: &Partition) -> Option<u32> {
        self.index.get(lam).copied()
    }

    pub fn partition(&self, index: u32) -> &Partition {
        &self.basis[index as usize]
    }

    pub fn degree_of(&self, index: u32) -> u32 {
        self.basis[index as usize].weight()
    }

    /// Basis indices of Chern degree `d` (empty past the dimension).
    pub fn degree_range(&self, d: u32) -> std::ops::Range<u32> {
        self.degree_ranges.get(d as usize).cloned().unwrap_or(0..0)
    }

    /// `σ_i σ_j` in the Schubert basis.
    pub fn product(&self, i: u32, j: u32) -> &BasisProduct {
        &self.table()[i as usize][j as usize]
    }

    fn table(&self) -> &Vec<Vec<BasisProduct>> {
        self.table.get_or_init(|| build_table(self))
    }

    /// Index of the Poincaré dual `σ_{λ^∨}`, the box complement of `λ`.
    pub fn dual(&self, index: u32) -> u32 {
        self.duals.get_or_init(|| {
            self.basis
                .iter()
                .map(|lam| {
                    let c = lam
                        .box_complement(self.spec.r, self.spec.cols())
                        .expect("basis lies in the box");
                    self.index[&c]
                })
                .collect()
        })[index as usize]
    }

    /// Pieri rule: `σ_(a) σ_μ` is the sum of `σ_ν` over horizontal strips
    /// `ν / μ` of size `a` inside the box.
    pub fn pieri(&self, a: u32, mu: u32) -> Vec<u32> {
        let mu = &self.basis[mu as usize];
        horizontal_strips(mu, a, self.spec.r, self.spec.cols())
            .iter()
            .map(|nu| self.index[nu])
            .collect()
    }
}

/// Partitions `ν ⊇ μ` with `ν / μ` a horizontal strip of `size` boxes,
/// at most `rows` rows and parts at most `cols`.
pub(crate) fn horizontal_strips(mu: &Partition, size: u32, rows: u32, cols: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut parts = Vec::with_capacity(rows as usize);
    strips_rec(mu, size, rows as usize, cols, 0, &mut parts, &mut out);
    out
}

fn strips_rec(
    mu: &Partition,
    remaining: u32,
    rows: usize,
    cols: u32,
    row: usize,
    parts: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if row == rows || remaining == 0 {
        if remaining == 0 {
            let mut full = parts.clone();
            full.extend((row..rows).map(|i| mu.part(i)));
            out.push(Partition::from_parts_unchecked(full));
        }
        return;
    }
    let base = mu.part(row);
    let upper = if row == 0 { cols } else { mu.part(row - 1) };
    let hi = upper.min(base + remaining);
    for v in (base..=hi).rev() {
        parts.push(v);
        strips_rec(mu, remaining - (v - base), rows, cols, row + 1, parts, out);
        parts.pop();
    }
}

fn build_table(ring: &SchubertRing) -> Vec<Vec<BasisProduct>> {
    let spec = ring.spec;
    let n = ring.basis.len();
    let dim = spec.dim();
    // operators[λ][μ] = σ_λ σ_μ, filled in canonical order of λ.
    let mut operators: Vec<Vec<BasisProduct>> = Vec::with_capacity(n);
    let pieri: Vec<Vec<Vec<u32>>> = (0..=spec.cols())
        .map(|a| (0..n as u32).map(|mu| ring.pieri(a, mu)).collect())
        .collect();
    let mut scratch = vec![0i64; n];

    for (li, lam) in ring.basis.iter().enumerate() {
        if lam.is_empty() {
            operators.push((0..n as u32).map(|mu| vec![(mu, 1)]).collect());
            continue;
        }
        let first = lam.part(0);
        let tail = lam.tail();
        let tail_idx = ring.index[&tail] as usize;
        let others: Vec<usize> = horizontal_strips(&tail, first, spec.r, spec.cols())
            .into_iter()
            .filter(|nu| nu != lam)
            .map(|nu| ring.index[&nu] as usize)
            .collect();
        debug_assert!(others.iter().all(|&o| o < li));

        let mut row = Vec::with_capacity(n);
        #[allow(clippy::needless_range_loop)]
        for mu in 0..n {
            let target = lam.weight() + ring.basis[mu].weight();
            if target > dim {
                row.push(Vec::new());
                continue;
            }
            let range = ring.degree_range(target);
            for (t, c) in &operators[tail_idx][mu] {
                for &nu in &pieri[first as usize][*t as usize] {
                    scratch[nu as usize] += c;
                }
            }
            for &o in &others {
                for (nu, c) in &operators[o][mu] {
                    scratch[*nu as usize] -= c;
                }
            }
            let mut prod = Vec::new();
            for nu in range {
                let c = std::mem::take(&mut scratch[nu as usize]);
                if c != 0 {
                    prod.push((nu, c));
                }
            }
            row.push(prod);
        }
        operators.push(row);
    }
    operators
}

/// The shared ring for `spec`; built on first use.
pub fn schubert_ring(spec: GrassSpec) -> Arc<SchubertRing> {
    static RINGS: OnceLock<Mutex<HashMap<GrassSpec, Arc<SchubertRing>>>> = OnceLock::new();
    let rings = RINGS.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = rings.lock().expect("ring cache poisoned");
    guard
        .entry(spec)
        .or_insert_with(|| Arc::new(SchubertRing::new(spec)))
        .clone()
}

/// An element of `H*(Grass(r, m); Z)` in the Schubert basis.
#[derive(Clone, PartialEq, Eq)]
pub struct GrassClass {
    spec: GrassSpec,
    coords: BTreeMap<Partition, BigInt>,
}

impl GrassClass {
    pub fn zero(spec: GrassSpec) -> Self {
        GrassClass {
            spec,
            coords: BTreeMap::new(),
        }
    }

    pub fn one(spec: GrassSpec) -> Self {
        Self::schubert(spec, Partition::empty()).expect("empty partition fits every box")
    }

    /// The Schubert class `σ_λ`; an error if `λ` leaves the box.
    pub fn schubert(spec: GrassSpec, lam: Partition) -> Result<Self> {
        if !spec.contains(&lam) {
            return Err(Error::InvalidParameters(format!(
                "partition {lam} does not fit the {}x{} box of {spec}",
                spec.r,
                spec.cols()
            )));
        }
        let mut c = Self::zero(spec);
        c.coords.insert(lam, BigInt::one());
        Ok(c)
    }

    /// The point class `σ_box`.
    pub fn point(spec: GrassSpec) -> Self {
        Self::schubert(spec, spec.full_box()).expect("box fits itself")
    }

    pub fn from_terms(spec: GrassSpec, terms: impl IntoIterator<Item = (Partition, BigInt)>) -> Result<Self> {
        let mut c = Self::zero(spec);
        for (lam, v) in terms {
            if !spec.contains(&lam) {
                return Err(Error::InvalidParameters(format!(
                    "partition {lam} outside the box of {spec}"
                )));
            }
            c.add_term(lam, v);
        }
        Ok(c)
    }

    pub(crate) fn add_term(&mut self, lam: Partition, v: BigInt) {
        if v.is_zero() {
            return;
        }
        match self.coords.entry(lam) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += v;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(v);
            }
        }
    }

    pub fn spec(&self) -> GrassSpec {
        self.spec
    }

    pub fn coeff(&self, lam: &Partition) -> BigInt {
        self.coords.get(lam).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coords.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// `Some(d)` if all terms have Chern degree `d`; `None` for mixed classes.
    /// The zero class reports `Some(0)`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.coords.keys().map(Partition::weight);
        match degrees.next() {
            None => Some(0),
            Some(d) => degrees.all(|e| e == d).then_some(d),
        }
    }

    /// The part of Chern degree `d`.
    pub fn component(&self, d: u32) -> GrassClass {
        GrassClass {
            spec: self.spec,
            coords: self
                .coords
                .iter()
                .filter(|(k, _)| k.weight() == d)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &BigInt) -> GrassClass {
        if factor.is_zero() {
            return Self::zero(self.spec);
        }
        GrassClass {
            spec: self.spec,
            coords: self.coords.iter().map(|(k, v)| (k.clone(), v * factor)).collect(),
        }
    }

    fn check_spec(&self, other: &GrassClass) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch(self.spec.to_string(), other.spec.to_string()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &GrassClass) -> Result<GrassClass> {
        self.check_spec(other)?;
        let mut out = self.clone();
        for (k, v) in &other.coords {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    /// Cup product; terms leaving the box vanish.
    pub fn mul(&self, other: &GrassClass) -> Result<GrassClass> {
        self.check_spec(other)?;
        let ring = schubert_ring(self.spec);
        let mut acc: BTreeMap<u32, BigInt> = BTreeMap::new();
        for (lam, a) in &self.coords {
            let i = ring.index[lam];
            for (mu, b) in &other.coords {
                let j = ring.index[mu];
                let ab = a * b;
                for (nu, c) in ring.product(i, j) {
                    *acc.entry(*nu).or_insert_with(BigInt::zero) += &ab * c;
                }
            }
        }
        Ok(GrassClass {
            spec: self.spec,
            coords: acc
                .into_iter()
                .filter(|(_, v)| !v.is_zero())
                .map(|(nu, v)| (ring.partition(nu).clone(), v))
                .collect(),
        })
    }

    pub fn pow(&self, exp: u32) -> Result<GrassClass> {
        let mut acc = GrassClass::one(self.spec);
        for _ in 0..exp {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Degree of the top component: the coefficient of the point class.
    pub fn integrate(&self) -> BigInt {
        self.coeff(&self.spec.full_box())
    }
}

impl fmt::Debug for GrassClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GrassClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        for (i, (lam, c)) in self.coords.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "σ{lam}")?;
            } else {
                write!(f, "{mag}σ{lam}")?;
            }
        }
        Ok(())
    }
}

impl Add for &GrassClass {
    type Output = GrassClass;
    /// Panics on mismatched specs; use [`GrassClass::try_add`] otherwise.
    fn add(self, rhs: &GrassClass) -> GrassClass {
        self.try_add(rhs).expect("adding classes of different Grassmannians")
    }
}

impl Neg for &GrassClass {
    type Output = GrassClass;
    fn neg(self) -> GrassClass {
        GrassClass {
            spec: self.spec,
            coords: self.coords.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

impl Sub for &GrassClass {
    type Output = GrassClass;
    fn sub(self, rhs: &GrassClass) -> GrassClass {
        self + &(-rhs)
    }
}

/// `c_i(S) = (-1)^i σ_(1^i)` for `1 <= i <= r`.
pub fn chern_sub(spec: GrassSpec, i: u32) -> Result<GrassClass> {
    if i == 0 || i > spec.r {
        return Err(Error::out_of_range("i", i as i64, format!("1..={}", spec.r)));
    }
    let lam = Partition::column(i);
    if !spec.contains(&lam) {
        return Ok(GrassClass::zero(spec));
    }
    let c = GrassClass::schubert(spec, lam)?;
    Ok(if i % 2 == 1 { -&c } else { c })
}

/// `c_k(Q) = σ_(k)` for `1 <= k <= m - r`.
pub fn chern_quot(spec: GrassSpec, k: u32) -> Result<GrassClass> {
    if k == 0 || k > spec.cols() {
        return Err(Error::out_of_range("k", k as i64, format!("1..={}", spec.cols())));
    }
    let lam = Partition::row(k);
    if !spec.contains(&lam) {
        return Ok(GrassClass::zero(spec));
    }
    GrassClass::schubert(spec, lam)
}

/// `[c_0(S), ..., c_r(S)]`.
pub fn total_chern_sub(spec: GrassSpec) -> Vec<GrassClass> {
    std::iter::once(GrassClass::one(spec))
        .chain((1..=spec.r).map(|i| chern_sub(spec, i).expect("index in range")))
        .collect()
}

/// `[c_0(Q), ..., c_{m-r}(Q)]`.
pub fn total_chern_quot(spec: GrassSpec) -> Vec<GrassClass> {
    std::iter::once(GrassClass::one(spec))
        .chain((1..=spec.cols()).map(|k| chern_quot(spec, k).expect("index in range")))
        .collect()
}

/// Poincaré polynomial in `t` of cohomological weight 2: `Σ_λ t^{2|λ|}`.
pub fn poincare(spec: GrassSpec) -> IntPolynomial {
    let ring = schubert_ring(spec);
    let mut p = IntPolynomial::zero();
    for lam in ring.basis() {
        p.add_term(2 * lam.weight(), BigInt::one());
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::gaussian_binomial;

    fn spec(r: u32, m: u32) -> GrassSpec {
        GrassSpec::new(r, m).unwrap()
    }

    fn sigma(s: GrassSpec, parts: &[u32]) -> GrassClass {
        GrassClass::schubert(s, Partition::new(parts.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn hyperplane_squared_on_projective_plane() {
        let s = spec(1, 3);
        let h = sigma(s, &[1]);
        assert_eq!(h.mul(&h).unwrap(), sigma(s, &[2]));
        assert_eq!(h.pow(2).unwrap().integrate(), BigInt::one());
        assert!(h.pow(3).unwrap().is_zero());
    }

    #[test]
    fn grass_2_4_products() {
        let s = spec(2, 4);
        let h = sigma(s, &[1]);
        assert_eq!(h.mul(&h).unwrap(), &sigma(s, &[2]) + &sigma(s, &[1, 1]));
        assert_eq!(h.pow(4).unwrap().integrate(), BigInt::from(2));
        assert!(GrassClass::point(s).mul(&h).unwrap().is_zero());
    }

    #[test]
    fn mismatched_specs_are_rejected() {
        let a = GrassClass::one(spec(1, 3));
        let b = GrassClass::one(spec(2, 4));
        assert!(matches!(a.mul(&b), Err(Error::SpecMismatch(..))));
    }

    #[test]
    fn chern_classes() {
        assert_eq!(chern_sub(spec(1, 4), 1).unwrap(), -&sigma(spec(1, 4), &[1]));
        assert_eq!(chern_quot(spec(1, 3), 2).unwrap(), sigma(spec(1, 3), &[2]));
        assert!(chern_sub(spec(2, 4), 3).is_err());
        assert!(chern_quot(spec(2, 4), 0).is_err());
    }

    #[test]
    fn whitney_degree_two_on_grass_2_4() {
        let s = spec(2, 4);
        let lhs = &(&chern_sub(s, 2).unwrap() + &chern_sub(s, 1).unwrap().mul(&chern_quot(s, 1).unwrap()).unwrap())
            + &chern_quot(s, 2).unwrap();
        assert!(lhs.is_zero());
    }

    #[test]
    fn whitney_relations_hold_up_to_m_7() {
        for m in 1..=7 {
            for r in 0..=m {
                let s = spec(r, m);
                let cs = total_chern_sub(s);
                let cq = total_chern_quot(s);
                for k in 1..=m {
                    let mut total = GrassClass::zero(s);
                    for i in 0..=k.min(r) {
                        let j = k - i;
                        if j as usize >= cq.len() {
                            continue;
                        }
                        total = &total + &cs[i as usize].mul(&cq[j as usize]).unwrap();
                    }
                    assert!(total.is_zero(), "Whitney fails on {s} in degree {k}: {total}");
                }
            }
        }
    }

    #[test]
    fn poincare_examples() {
        assert_eq!(poincare(spec(1, 3)), IntPolynomial::from_coeffs(&[1, 0, 1, 0, 1]));
        assert_eq!(
            poincare(spec(2, 4)),
            IntPolynomial::from_coeffs(&[1, 0, 1, 0, 2, 0, 1, 0, 1])
        );
        assert_eq!(poincare(spec(3, 3)), IntPolynomial::one());
        for m in 0..=7 {
            for r in 0..=m {
                assert_eq!(poincare(spec(r, m)), gaussian_binomial(m, r).unwrap().stretch(2));
            }
        }
    }

    #[test]
    fn poincare_pairing_is_a_permutation() {
        for m in 1..=6 {
            for r in 0..=m {
                let s = spec(r, m);
                for lam in s.basis() {
                    for mu in s.basis() {
                        if lam.weight() + mu.weight() != s.dim() {
                            continue;
                        }
                        let v = GrassClass::schubert(s, lam.clone())
                            .unwrap()
                            .mul(&GrassClass::schubert(s, mu.clone()).unwrap())
                            .unwrap()
                            .integrate();
                        let dual = lam.box_complement(r, m - r).unwrap();
                        let expected = if mu == dual { 1 } else { 0 };
                        assert_eq!(v, BigInt::from(expected), "{s}: {lam} * {mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn known_littlewood_richardson_coefficient() {
        // σ_(2,1)^2 on Grass(3,6) contains σ_(3,2,1) with coefficient 2.
        let s = spec(3, 6);
        let a = sigma(s, &[2, 1]);
        assert_eq!(
            a.mul(&a).unwrap().coeff(&Partition::new(vec![3, 2, 1]).unwrap()),
            BigInt::from(2)
        );
    }

    #[test]
    fn degree_ranges_partition_the_basis() {
        let ring = schubert_ring(spec(2, 5));
        let total: u32 = (0..=6).map(|d| ring.degree_range(d).len() as u32).sum();
        assert_eq!(total, 10);
        assert_eq!(ring.degree_range(7), 0..0);
    }
}
