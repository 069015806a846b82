//! Classes on `G = Grass(r, n) × Grass(r, m)` and the Chern and Segre
//! classes of the tensor bundles `S1 ⊗ S2` and `Q1 ⊗ Q2`.
//!
//! `H*(G)` is the tensor product of the two Schubert rings, so a [`ProdClass`]
//! is a sparse matrix of coefficients indexed by pairs of basis partitions and
//! multiplication is factorwise.
//!
//! Tensor Chern classes are computed through power sums. Newton's identities
//! turn `c(E)` and `c(F)` into the power sums of their Chern roots on each
//! factor; `ch(E ⊗ F) = ch(E) ch(F)` gives
//! `p_k(E ⊗ F) = Σ_i C(k, i) p_i(E) p_{k-i}(F)` with `p_0` the rank; and
//! Newton's identities in the other direction recover `c_k(E ⊗ F)` degree by
//! degree, every product reduced into the product ring as it is formed.
//! [`universal`] computes the same classes from universal polynomials in the
//! factors' Chern classes and serves as a cross-check.

pub mod universal;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::grass::{schubert_ring, total_chern_quot, total_chern_sub, GrassClass, GrassSpec, SchubertRing};
use crate::partitions::{binomial, Partition};

/// `Grass(r, n) × Grass(r, m)` with `r <= m <= n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProdSpec {
    r: u32,
    n: u32,
    m: u32,
}

impl ProdSpec {
    pub fn new(r: u32, n: u32, m: u32) -> Result<Self> {
        if r > m || m > n {
            return Err(Error::InvalidParameters(format!(
                "product spec needs r <= m <= n, got r = {r}, n = {n}, m = {m}"
            )));
        }
        Ok(ProdSpec { r, n, m })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `Grass(r, n)`.
    pub fn first(&self) -> GrassSpec {
        GrassSpec::new(self.r, self.n).expect("r <= n")
    }

    /// `Grass(r, m)`.
    pub fn second(&self) -> GrassSpec {
        GrassSpec::new(self.r, self.m).expect("r <= m")
    }

    /// `r(n - r) + r(m - r)`.
    pub fn dim(&self) -> u32 {
        self.first().dim() + self.second().dim()
    }

    /// `C(n, r) · C(m, r)`.
    pub fn rank(&self) -> BigInt {
        binomial(self.n as u64, self.r as u64) * binomial(self.m as u64, self.r as u64)
    }
}

impl fmt::Debug for ProdSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ProdSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} x {}", self.first(), self.second())
    }
}

/// An element of `H*(G; Z)` in the basis `σ_λ ⊗ σ_μ`.
///
/// Keys are pairs of basis indices of the two Schubert rings; zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct ProdClass {
    spec: ProdSpec,
    coords: BTreeMap<(u32, u32), BigInt>,
}

impl ProdClass {
    pub fn zero(spec: ProdSpec) -> Self {
        ProdClass {
            spec,
            coords: BTreeMap::new(),
        }
    }

    pub fn one(spec: ProdSpec) -> Self {
        let mut c = Self::zero(spec);
        c.coords.insert((0, 0), BigInt::one());
        c
    }

    /// `σ_λ ⊗ σ_μ`.
    pub fn basis(spec: ProdSpec, lam: &Partition, mu: &Partition) -> Result<Self> {
        let (r1, r2) = rings(spec);
        let i = r1.index_of(lam).ok_or_else(|| not_in_box(lam, spec.first()))?;
        let j = r2.index_of(mu).ok_or_else(|| not_in_box(mu, spec.second()))?;
        let mut c = Self::zero(spec);
        c.coords.insert((i, j), BigInt::one());
        Ok(c)
    }

    /// The class of the point.
    pub fn point(spec: ProdSpec) -> Self {
        Self::basis(spec, &spec.first().full_box(), &spec.second().full_box()).expect("boxes are basis elements")
    }

    /// `a ⊗ b` for classes on the two factors.
    pub fn outer(spec: ProdSpec, a: &GrassClass, b: &GrassClass) -> Result<Self> {
        if a.spec() != spec.first() {
            return Err(Error::SpecMismatch(a.spec().to_string(), spec.first().to_string()));
        }
        if b.spec() != spec.second() {
            return Err(Error::SpecMismatch(b.spec().to_string(), spec.second().to_string()));
        }
        let (r1, r2) = rings(spec);
        let mut c = Self::zero(spec);
        for (lam, x) in a.terms() {
            let i = r1.index_of(lam).expect("class terms lie in the box");
            for (mu, y) in b.terms() {
                let j = r2.index_of(mu).expect("class terms lie in the box");
                c.add_at((i, j), x * y);
            }
        }
        Ok(c)
    }

    fn add_at(&mut self, key: (u32, u32), v: BigInt) {
        if v.is_zero() {
            return;
        }
        let e = self.coords.entry(key).or_insert_with(BigInt::zero);
        *e += v;
        if e.is_zero() {
            self.coords.remove(&key);
        }
    }

    pub fn spec(&self) -> ProdSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coeff(&self, lam: &Partition, mu: &Partition) -> BigInt {
        let (r1, r2) = rings(self.spec);
        match (r1.index_of(lam), r2.index_of(mu)) {
            (Some(i), Some(j)) => self.coords.get(&(i, j)).cloned().unwrap_or_else(BigInt::zero),
            _ => BigInt::zero(),
        }
    }

    /// Nonzero terms `(λ, μ, coefficient)` in index order.
    pub fn terms(&self) -> Vec<(Partition, Partition, BigInt)> {
        let (r1, r2) = rings(self.spec);
        self.coords
            .iter()
            .map(|(&(i, j), c)| (r1.partition(i).clone(), r2.partition(j).clone(), c.clone()))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Common Chern degree of all terms, `None` for zero or mixed classes.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let (r1, r2) = rings(self.spec);
        let mut degrees = self.coords.keys().map(|&(i, j)| r1.degree_of(i) + r2.degree_of(j));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, factor: &BigInt) -> ProdClass {
        if factor.is_zero() {
            return Self::zero(self.spec);
        }
        ProdClass {
            spec: self.spec,
            coords: self.coords.iter().map(|(k, v)| (*k, v * factor)).collect(),
        }
    }

    /// Exact division of every coefficient.
    pub fn div_exact(&self, divisor: &BigInt) -> Result<ProdClass> {
        let mut coords = BTreeMap::new();
        for (k, v) in &self.coords {
            let (q, rem) = v.div_rem(divisor);
            if !rem.is_zero() {
                return Err(Error::Consistency(format!(
                    "coefficient {v} of a class on {} is not divisible by {divisor}",
                    self.spec
                )));
            }
            coords.insert(*k, q);
        }
        Ok(ProdClass {
            spec: self.spec,
            coords,
        })
    }

    fn check_spec(&self, other: &ProdClass) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch(self.spec.to_string(), other.spec.to_string()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &ProdClass) -> Result<ProdClass> {
        self.check_spec(other)?;
        Ok(self + other)
    }

    /// Künneth product: factorwise Schubert multiplication.
    pub fn mul(&self, other: &ProdClass) -> Result<ProdClass> {
        self.check_spec(other)?;
        let (r1, r2) = rings(self.spec);
        let mut acc: HashMap<(u32, u32), BigInt> = HashMap::new();
        for (&(i1, i2), a) in &self.coords {
            for (&(j1, j2), b) in &other.coords {
                let left = r1.product(i1, j1);
                if left.is_empty() {
                    continue;
                }
                let right = r2.product(i2, j2);
                if right.is_empty() {
                    continue;
                }
                let ab = a * b;
                for &(u, cu) in left {
                    let abu = &ab * cu;
                    for &(v, cv) in right {
                        *acc.entry((u, v)).or_insert_with(BigInt::zero) += &abu * cv;
                    }
                }
            }
        }
        Ok(ProdClass {
            spec: self.spec,
            coords: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        })
    }

    /// Coefficient of the point class.
    pub fn integrate(&self) -> BigInt {
        let (r1, r2) = rings(self.spec);
        let top = (r1.basis().len() as u32 - 1, r2.basis().len() as u32 - 1);
        self.coords.get(&top).cloned().unwrap_or_else(BigInt::zero)
    }
}

fn not_in_box(lam: &Partition, spec: GrassSpec) -> Error {
    Error::InvalidParameters(format!("partition {lam} is not a Schubert index of {spec}"))
}

fn rings(spec: ProdSpec) -> (Arc<SchubertRing>, Arc<SchubertRing>) {
    (schubert_ring(spec.first()), schubert_ring(spec.second()))
}

impl fmt::Debug for ProdClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ProdClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lam, mu, c)) in terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "s{lam}⊗s{mu}")?;
        }
        Ok(())
    }
}

impl Add for &ProdClass {
    type Output = ProdClass;

    fn add(self, rhs: &ProdClass) -> ProdClass {
        assert_eq!(self.spec, rhs.spec, "adding classes on different products");
        let mut out = self.clone();
        for (k, v) in &rhs.coords {
            out.add_at(*k, v.clone());
        }
        out
    }
}

impl Neg for &ProdClass {
    type Output = ProdClass;

    fn neg(self) -> ProdClass {
        ProdClass {
            spec: self.spec,
            coords: self.coords.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }
}

impl Sub for &ProdClass {
    type Output = ProdClass;

    fn sub(self, rhs: &ProdClass) -> ProdClass {
        self + &(-rhs)
    }
}

/// `∫_G a · b`, read off through Poincaré duality on each factor without
/// forming the product.
pub fn pair(a: &ProdClass, b: &ProdClass) -> Result<BigInt> {
    a.check_spec(b)?;
    let (r1, r2) = rings(a.spec);
    let mut acc = BigInt::zero();
    for (&(i, j), x) in &a.coords {
        if let Some(y) = b.coords.get(&(r1.dual(i), r2.dual(j))) {
            acc += x * y;
        }
    }
    Ok(acc)
}

pub fn mul_prod(a: &ProdClass, b: &ProdClass) -> Result<ProdClass> {
    a.mul(b)
}

pub fn integrate_prod(a: &ProdClass) -> BigInt {
    a.integrate()
}

/// Which tensor bundle on `G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bundle {
    /// `S1 ⊗ S2`, rank `r²`.
    SubTensor,
    /// `Q1 ⊗ Q2`, rank `(n - r)(m - r)`.
    QuotTensor,
}

impl Bundle {
    pub fn rank(&self, spec: ProdSpec) -> u32 {
        match self {
            Bundle::SubTensor => spec.r * spec.r,
            Bundle::QuotTensor => (spec.n - spec.r) * (spec.m - spec.r),
        }
    }

    /// Ranks of the two factors `E` and `F` of `E ⊗ F`.
    pub fn factor_ranks(&self, spec: ProdSpec) -> (u32, u32) {
        match self {
            Bundle::SubTensor => (spec.r, spec.r),
            Bundle::QuotTensor => (spec.n - spec.r, spec.m - spec.r),
        }
    }

    /// Total Chern classes `[c_0, c_1, ...]` of the two factors, one per
    /// Grassmannian.
    pub fn factor_chern(&self, spec: ProdSpec) -> (Vec<GrassClass>, Vec<GrassClass>) {
        match self {
            Bundle::SubTensor => (total_chern_sub(spec.first()), total_chern_sub(spec.second())),
            Bundle::QuotTensor => (total_chern_quot(spec.first()), total_chern_quot(spec.second())),
        }
    }
}

impl fmt::Display for Bundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Bundle::SubTensor => "S1⊗S2",
            Bundle::QuotTensor => "Q1⊗Q2",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Chern,
    Segre,
}

/// A truncated Chern or Segre series of a tensor bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharSeries {
    pub spec: ProdSpec,
    pub bundle: Bundle,
    pub flavor: Flavor,
    terms: Vec<ProdClass>,
}

impl CharSeries {
    /// Term of Chern degree `k`; zero past the truncation.
    pub fn term(&self, k: u32) -> ProdClass {
        self.terms
            .get(k as usize)
            .cloned()
            .unwrap_or_else(|| ProdClass::zero(self.spec))
    }

    pub fn terms(&self) -> &[ProdClass] {
        &self.terms
    }

    /// Highest degree stored.
    pub fn up_to(&self) -> u32 {
        self.terms.len() as u32 - 1
    }
}

/// Power sums `p_0, ..., p_up_to` of the Chern roots of a bundle with total
/// Chern class `c` (on one Grassmannian).
pub fn power_sums(c: &[GrassClass], rank: u32, up_to: u32) -> Result<Vec<GrassClass>> {
    let spec = c[0].spec();
    let mut p = vec![GrassClass::one(spec).scale(&BigInt::from(rank))];
    for k in 1..=up_to as usize {
        // p_k = Σ_{i=1}^{k-1} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k
        let mut acc = GrassClass::zero(spec);
        for i in 1..k.min(c.len()) {
            let term = c[i].mul(&p[k - i])?;
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        if k < c.len() {
            let term = c[k].scale(&BigInt::from(k));
            acc = if k % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        p.push(acc);
    }
    Ok(p)
}

struct SeriesState {
    chern: Vec<ProdClass>,
    segre: Vec<ProdClass>,
    power: Vec<ProdClass>,
    factor_power: (Vec<GrassClass>, Vec<GrassClass>),
}

impl SeriesState {
    fn new(spec: ProdSpec) -> Self {
        SeriesState {
            chern: vec![ProdClass::one(spec)],
            segre: vec![ProdClass::one(spec)],
            power: Vec::new(),
            factor_power: (Vec::new(), Vec::new()),
        }
    }

    fn extend(&mut self, spec: ProdSpec, bundle: Bundle, up_to: u32) -> Result<()> {
        let have = self.chern.len() as u32 - 1;
        if up_to <= have {
            return Ok(());
        }
        let (ce, cf) = bundle.factor_chern(spec);
        let (ra, rb) = bundle.factor_ranks(spec);
        self.factor_power = (power_sums(&ce, ra, up_to)?, power_sums(&cf, rb, up_to)?);
        let (pe, pf) = &self.factor_power;
        for k in self.power.len() as u32..=up_to {
            let mut acc = ProdClass::zero(spec);
            for i in 0..=k {
                let term = ProdClass::outer(spec, &pe[i as usize], &pf[(k - i) as usize])?;
                acc = &acc + &term.scale(&binomial(k as u64, i as u64));
            }
            self.power.push(acc);
        }
        for k in have + 1..=up_to {
            let k = k as usize;
            // k c_k = Σ_{i=1}^k (-1)^{i-1} c_{k-i} p_i
            let mut acc = ProdClass::zero(spec);
            for i in 1..=k {
                if self.chern[k - i].is_zero() || self.power[i].is_zero() {
                    continue;
                }
                let term = self.chern[k - i].mul(&self.power[i])?;
                acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
            }
            let ck = acc.div_exact(&BigInt::from(k))?;
            self.chern.push(ck);
            // s_k = -Σ_{j=1}^k c_j s_{k-j}
            let mut s = ProdClass::zero(spec);
            for j in 1..=k {
                if self.chern[j].is_zero() || self.segre[k - j].is_zero() {
                    continue;
                }
                s = &s - &self.chern[j].mul(&self.segre[k - j])?;
            }
            self.segre.push(s);
        }
        Ok(())
    }
}

type SeriesKey = (ProdSpec, Bundle);

fn series_state(spec: ProdSpec, bundle: Bundle) -> Arc<Mutex<SeriesState>> {
    static SERIES: OnceLock<Mutex<HashMap<SeriesKey, Arc<Mutex<SeriesState>>>>> = OnceLock::new();
    let all = SERIES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = all.lock().expect("series cache poisoned");
    guard
        .entry((spec, bundle))
        .or_insert_with(|| Arc::new(Mutex::new(SeriesState::new(spec))))
        .clone()
}

fn series(spec: ProdSpec, bundle: Bundle, up_to: u32, flavor: Flavor) -> Result<CharSeries> {
    let up_to = up_to.min(spec.dim());
    let state = series_state(spec, bundle);
    let mut state = state.lock().expect("series state poisoned");
    state.extend(spec, bundle, up_to)?;
    let source = match flavor {
        Flavor::Chern => &state.chern,
        Flavor::Segre => &state.segre,
    };
    Ok(CharSeries {
        spec,
        bundle,
        flavor,
        terms: source[..=up_to as usize].to_vec(),
    })
}

/// `c_0, ..., c_up_to` of the tensor bundle; `up_to` is clamped to `dim G`.
pub fn chern_tensor(spec: ProdSpec, bundle: Bundle, up_to: u32) -> Result<CharSeries> {
    series(spec, bundle, up_to, Flavor::Chern)
}

/// `s_0, ..., s_up_to`: the inverse of the total Chern class.
pub fn segre_tensor(spec: ProdSpec, bundle: Bundle, up_to: u32) -> Result<CharSeries> {
    series(spec, bundle, up_to, Flavor::Segre)
}

/// `Σ_{j=0}^k c_j s_{k-j} = δ_{k,0}` for every degree both series cover.
pub fn inversion_holds(chern: &CharSeries, segre: &CharSeries) -> Result<bool> {
    if chern.spec != segre.spec {
        return Err(Error::SpecMismatch(chern.spec.to_string(), segre.spec.to_string()));
    }
    let top = chern.up_to().min(segre.up_to());
    for k in 0..=top {
        let mut acc = ProdClass::zero(chern.spec);
        for j in 0..=k {
            acc = &acc + &chern.term(j).mul(&segre.term(k - j))?;
        }
        let expected = if k == 0 {
            ProdClass::one(chern.spec)
        } else {
            ProdClass::zero(chern.spec)
        };
        if acc != expected {
            return Ok(false);
        }
    }
    Ok(true)
}
