//! Topology of the links of `M_{m,n}^s`, the `m × n` matrices of rank less
//! than `s`.
//!
//! The variety is stratified by rank; `V^{r'}` (exact rank `r'`) for
//! `0 <= r' < s`. Writing `r = s - 1`, the complex link `L^i` of codimension
//! `i` has Euler characteristic
//!
//! ```text
//! χ(L^i) = Σ_{r'=1}^{s-1} [ Σ_{j=i+1}^{d(r')} (-1)^{d(r')-j} e^{r', d(r')-j} ] · (1 - χ(L(M^s, V^{r'})))
//! ```
//!
//! with `d(r') = (m+n)r' - r'²` and `1 - χ(L(M^s, V^{r'})) = (-1)^{s-r'-1} C(m-r'-1, s-r'-1)`.
//! The origin stratum `r' = 0` has `d(0) = 0`, so its inner sum is empty for
//! every `i >= 0` and it is left out.
//!
//! For `sing_dim <= i < d` the link is smooth; below the middle degree its
//! cohomology is that of `Grass(r, m)` and the middle Betti number follows
//! from `χ`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::grass::{poincare, GrassSpec};
use crate::partitions::{binomial, IntPolynomial};
use crate::polar::{polar_profile, variety_dim};

/// Type `(m, n, s)` of the generic determinantal variety `M_{m,n}^s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DetSpec {
    m: u32,
    n: u32,
    s: u32,
}

impl DetSpec {
    pub fn new(m: u32, n: u32, s: u32) -> Result<Self> {
        if s == 0 || s > m || m > n {
            return Err(Error::InvalidParameters(format!(
                "M_(m,n)^s needs 1 <= s <= m <= n, got m = {m}, n = {n}, s = {s}"
            )));
        }
        Ok(DetSpec { m, n, s })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// Rank of the open stratum, `s - 1`.
    pub fn r(&self) -> u32 {
        self.s - 1
    }

    /// `dim M_{m,n}^s = (m+n)r - r²`.
    pub fn dim(&self) -> u32 {
        variety_dim(self.m, self.n, self.r())
    }

    /// Dimension of the singular locus `M_{m,n}^{s-1}`; negative when it is
    /// empty.
    pub fn sing_dim(&self) -> i64 {
        let (mn, r1) = ((self.m + self.n) as i64, self.r() as i64 - 1);
        mn * r1 - r1 * r1
    }

    /// Whether `L^i` is smooth: `sing_dim <= i < dim`.
    pub fn is_smooth(&self, i: u32) -> bool {
        self.sing_dim() <= i as i64 && i < self.dim()
    }

    fn check_codim(&self, i: u32) -> Result<()> {
        if i >= self.dim() {
            return Err(Error::out_of_range("codim", i as i64, format!("0..{}", self.dim())));
        }
        Ok(())
    }
}

impl fmt::Display for DetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M_({},{})^{}", self.m, self.n, self.s)
    }
}

/// `1 - χ(L(M^s, V^{r'})) = (-1)^{s-r'-1} C(m-r'-1, s-r'-1)`.
pub fn egz_factor(spec: DetSpec, stratum_rank: u32) -> Result<BigInt> {
    let s = spec.s;
    if stratum_rank >= s {
        return Err(Error::out_of_range(
            "stratum rank",
            stratum_rank as i64,
            format!("0..{s}"),
        ));
    }
    let b = binomial((spec.m - stratum_rank - 1) as u64, (s - stratum_rank - 1) as u64);
    Ok(if (s - stratum_rank - 1) % 2 == 1 { -b } else { b })
}

/// `Σ_{j=lo}^{hi} (-1)^{d-j} e^{r', d-j}` over the profile of `V^{r'}`.
fn stratum_sum(spec: DetSpec, stratum_rank: u32, lo: u32, hi: Option<u32>) -> Result<BigInt> {
    let d = variety_dim(spec.m, spec.n, stratum_rank);
    let hi = hi.unwrap_or(d).min(d);
    if lo > hi {
        return Ok(BigInt::zero());
    }
    let profile = polar_profile(spec.m, spec.n, stratum_rank)?;
    let mut acc = BigInt::zero();
    for j in lo..=hi {
        let e = profile.value((d - j) as i64);
        if (d - j).is_multiple_of(2) {
            acc += e;
        } else {
            acc -= e;
        }
    }
    Ok(acc)
}

/// `χ(L^i)` through the sum over all strata, `0 <= i < dim`.
pub fn euler_complex_link(spec: DetSpec, i: u32) -> Result<BigInt> {
    spec.check_codim(i)?;
    let mut chi = BigInt::zero();
    for rp in 1..spec.s {
        let inner = stratum_sum(spec, rp, i + 1, None)?;
        if !inner.is_zero() {
            chi += inner * egz_factor(spec, rp)?;
        }
    }
    Ok(chi)
}

/// `χ(L^i)` for a smooth link: only the open stratum contributes and
/// `χ = Σ_{k=0}^{d-i-1} (-1)^k e^{s-1,k}`.
pub fn euler_complex_link_smooth(spec: DetSpec, i: u32) -> Result<BigInt> {
    spec.check_codim(i)?;
    if !spec.is_smooth(i) {
        return Err(non_smooth(spec, i));
    }
    let profile = polar_profile(spec.m, spec.n, spec.r())?;
    let mut acc = BigInt::zero();
    for k in 0..spec.dim() - i {
        let e = profile.value(k as i64);
        if k % 2 == 0 {
            acc += e;
        } else {
            acc -= e;
        }
    }
    Ok(acc)
}

/// `χ(L^i) - χ(L^{i+1})`: the `j = i + 1` terms of the stratum sum,
/// `0 <= i < dim - 1`.
pub fn euler_step(spec: DetSpec, i: u32) -> Result<BigInt> {
    if i + 1 >= spec.dim() {
        return Err(Error::out_of_range(
            "codim",
            i as i64,
            format!("0..{}", spec.dim().saturating_sub(1)),
        ));
    }
    let mut acc = BigInt::zero();
    for rp in 1..spec.s {
        let term = stratum_sum(spec, rp, i + 1, Some(i + 1))?;
        if !term.is_zero() {
            acc += term * egz_factor(spec, rp)?;
        }
    }
    Ok(acc)
}

fn non_smooth(spec: DetSpec, i: u32) -> Error {
    Error::NonSmoothLink {
        codim: i as i64,
        lo: spec.sing_dim().max(0),
        hi: spec.dim() as i64,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorsionStatus {
    /// The middle group is known to be free.
    Free,
    Unknown,
}

impl fmt::Display for TorsionStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TorsionStatus::Free => "free",
            TorsionStatus::Unknown => "unknown",
        })
    }
}

/// Euler characteristic and, for smooth links, Betti numbers of `L^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkProfile {
    pub spec: DetSpec,
    pub codim: u32,
    pub chi: BigInt,
    pub smooth: bool,
    /// Complex dimension `d - i - 1` of the link.
    pub middle: u32,
    /// `b_0, ..., b_middle`; empty unless smooth.
    pub betti: Vec<BigInt>,
    pub torsion: TorsionStatus,
}

impl LinkProfile {
    /// `Σ (-1)^k b_k`.
    pub fn alternating_sum(&self) -> BigInt {
        self.betti
            .iter()
            .enumerate()
            .fold(BigInt::zero(), |acc, (k, b)| if k % 2 == 0 { acc + b } else { acc - b })
    }
}

/// Betti numbers `b_0, b_1, ...` of `Grass(r, m)` in real cohomological
/// degree.
pub fn grass_betti(r: u32, m: u32) -> Vec<BigInt> {
    let p = poincare(GrassSpec::new(r, m).expect("r <= m"));
    p.to_dense()
}

/// `χ(L^i)` together with smoothness data; Betti numbers are filled in when
/// the link is smooth.
pub fn link_profile(spec: DetSpec, i: u32) -> Result<LinkProfile> {
    if spec.is_smooth(i) {
        return betti_smooth_complex_link(spec, i);
    }
    Ok(LinkProfile {
        spec,
        codim: i,
        chi: euler_complex_link(spec, i)?,
        smooth: false,
        middle: spec.dim().saturating_sub(i + 1),
        betti: Vec::new(),
        torsion: TorsionStatus::Unknown,
    })
}

/// Betti numbers of the smooth complex link `L^i`, `sing_dim <= i < dim`.
pub fn betti_smooth_complex_link(spec: DetSpec, i: u32) -> Result<LinkProfile> {
    spec.check_codim(i)?;
    if !spec.is_smooth(i) {
        return Err(non_smooth(spec, i));
    }
    let chi = euler_complex_link(spec, i)?;
    let middle = spec.dim() - i - 1;
    let grass = grass_betti(spec.r(), spec.m);
    let mut betti: Vec<BigInt> = (0..middle as usize)
        .map(|k| grass.get(k).cloned().unwrap_or_else(BigInt::zero))
        .collect();
    let below = betti
        .iter()
        .enumerate()
        .fold(BigInt::zero(), |acc, (k, b)| if k % 2 == 0 { acc + b } else { acc - b });
    let top = if middle.is_multiple_of(2) {
        &chi - &below
    } else {
        &below - &chi
    };
    if top.is_negative() {
        return Err(Error::Consistency(format!(
            "negative middle Betti number {top} for L^{i} of {spec}"
        )));
    }
    betti.push(top);
    let torsion = if spec.r() == 1 && i == 0 {
        TorsionStatus::Free
    } else {
        TorsionStatus::Unknown
    };
    Ok(LinkProfile {
        spec,
        codim: i,
        chi,
        smooth: true,
        middle,
        betti,
        torsion,
    })
}

/// Betti numbers of the real link `K^i` of a smooth codimension, in degrees
/// `0..=2(d-i-1)+1`. `None` marks the two middle degrees, which are not
/// determined here, except for `s = 2, i = 0` where `K^0` has the cohomology
/// of `P^{m-1} × S^{2n-1}`.
pub fn real_link_betti(spec: DetSpec, i: u32) -> Result<Vec<Option<BigInt>>> {
    spec.check_codim(i)?;
    if !spec.is_smooth(i) {
        return Err(non_smooth(spec, i));
    }
    let middle = (spec.dim() - i - 1) as usize;
    let top = 2 * middle + 1;
    if spec.r() == 1 && i == 0 {
        let p = &poincare(GrassSpec::new(1, spec.m)?)
            * &(&IntPolynomial::one() + &IntPolynomial::monomial(2 * spec.n - 1, 1));
        return Ok((0..=top as u32).map(|k| Some(p.coeff(k))).collect());
    }
    let grass = grass_betti(spec.r(), spec.m);
    let below = |k: usize| grass.get(k).cloned().unwrap_or_else(BigInt::zero);
    Ok((0..=top)
        .map(|k| {
            if k < middle {
                Some(below(k))
            } else if k > middle + 1 {
                Some(below(top - k))
            } else {
                None
            }
        })
        .collect())
}

/// A torsion group in the cohomology of a real link that is known from the
/// geometry rather than computed: `H^2(K^2(M_{2,3}^2)) = Z/3`. Here `K^2` is
/// the circle bundle of `O(-3)` over `P^1`, and the Gysin sequence ends with
/// `H^0(P^1) --(·e = -3)--> H^2(P^1) --> H^2(K^2) --> 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KnownTorsion {
    pub m: u32,
    pub n: u32,
    pub s: u32,
    pub codim: u32,
    pub degree: u32,
    pub order: u32,
}

pub const REAL_LINK_TORSION_M23: KnownTorsion = KnownTorsion {
    m: 2,
    n: 3,
    s: 2,
    codim: 2,
    degree: 2,
    order: 3,
};

/// `Π_{i=1}^{n} (1 + t^{2i-1})`, the Poincaré polynomial of `U(n)`.
pub fn poincare_unitary(n: u32) -> IntPolynomial {
    (1..=n).fold(IntPolynomial::one(), |acc, i| {
        &acc * &(&IntPolynomial::one() + &IntPolynomial::monomial(2 * i - 1, 1))
    })
}

/// `Π_{j=n-r+1}^{n} (1 + t^{2j-1})`, the Poincaré polynomial of the Stiefel
/// manifold of unitary `r`-frames in `C^n`.
pub fn poincare_stiefel(r: u32, n: u32) -> Result<IntPolynomial> {
    if r > n {
        return Err(Error::out_of_range("r", r as i64, format!("0..={n}")));
    }
    Ok((n - r + 1..=n).fold(IntPolynomial::one(), |acc, j| {
        &acc * &(&IntPolynomial::one() + &IntPolynomial::monomial(2 * j - 1, 1))
    }))
}

/// Poincaré polynomial of the compact orbit model of the rank-`r` matrices:
/// `P(Grass(r, m)) · Π_{j=1}^{r} (1 + t^{2n-2j+1})`.
pub fn orbit_poincare(m: u32, n: u32, r: u32) -> Result<IntPolynomial> {
    if r > m.min(n) {
        return Err(Error::out_of_range("r", r as i64, format!("0..={}", m.min(n))));
    }
    Ok(&poincare(GrassSpec::new(r, m)?) * &poincare_stiefel(r, n)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SmoothingKind {
    Curve,
    Surface,
    Threefold,
}

impl SmoothingKind {
    /// Dimension of the complex link of `M_{m,m+1}^m` that enters the bound.
    fn link_dim(self) -> u32 {
        match self {
            SmoothingKind::Curve => 1,
            SmoothingKind::Surface => 2,
            SmoothingKind::Threefold => 3,
        }
    }
}

/// Lower bound for the middle Betti number of a smoothing of an isolated
/// Cohen-Macaulay codimension 2 singularity with `m + 1` generators:
/// `b_1 >= -χ(L^{m(m+1)-4}) - 1`, `b_2 >= χ(L^{m(m+1)-5}) - 2`,
/// `b_3 >= -χ(L^{m(m+1)-6}) - 2`, links of `M_{m,m+1}^m`.
pub fn smoothing_bounds(m: u32, kind: SmoothingKind) -> Result<BigInt> {
    let spec = DetSpec::new(m, m + 1, m)?;
    let i = (m * (m + 1)) as i64 - 3 - kind.link_dim() as i64;
    if i < 0 || i >= spec.dim() as i64 {
        return Err(Error::out_of_range("codim", i, format!("0..{}", spec.dim())));
    }
    let chi = euler_complex_link(spec, i as u32)?;
    Ok(match kind {
        SmoothingKind::Curve => -chi - 1,
        SmoothingKind::Surface => chi - 2,
        SmoothingKind::Threefold => -chi - 2,
    })
}

/// `χ` of the smooth complex link of dimension `link_dim` (0..=3) of
/// `M_{m,m+1}^m`, i.e. `L^{m(m+1)-link_dim-3}`.
///
/// `M_{1,2}^1` is the origin; its only entry is `1` in dimension 0, the
/// convention of the classical table.
pub fn hilbert_burch_euler(m: u32, link_dim: u32) -> Result<BigInt> {
    if link_dim > 3 {
        return Err(Error::out_of_range("link dimension", link_dim as i64, "0..=3"));
    }
    if m == 1 {
        return Ok(BigInt::from(u32::from(link_dim == 0)));
    }
    let spec = DetSpec::new(m, m + 1, m)?;
    euler_complex_link(spec, m * (m + 1) - link_dim - 3)
}
