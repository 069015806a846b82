//! Polar multiplicities `e_{m,n}^{r,k}` of the generic determinantal variety
//! `M_{m,n}^{r+1}` (matrices of rank at most `r`), their duality, and local
//! Euler obstructions.
//!
//! On `G = Grass(r, n) × Grass(r, m)`, with `K = dim G = (m+n)r - 2r²`,
//!
//! ```text
//! I_k = ∫_G s_k(Q1 ⊗ Q2) s_{K-k}(S1 ⊗ S2),    e_{m,n}^{r,k} = |I_k|.
//! ```
//!
//! With Segre classes taken as the inverse of the total Chern class, the
//! integrals alternate as `sign(I_k) = (-1)^k`; the global factor
//! `(-1)^{(m+n)r - r² - 1}` that usually accompanies the formula does not make
//! every row positive under this convention, so the profile stores `|I_k|` and
//! keeps `sign(I_k)` in [`PolarProfile::raw_signs`]. Any other sign pattern is
//! rejected as a convention error.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::tensor::{pair, segre_tensor, Bundle, ProdSpec};

/// All polar multiplicities of one `(m, n, r)`, indexed by `k = 0..=K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarProfile {
    pub m: u32,
    pub n: u32,
    pub r: u32,
    pub values: Vec<BigInt>,
    /// Sign of each integral `I_k`: `1`, `-1`, or `0` where it vanishes.
    pub raw_signs: Vec<i8>,
}

impl PolarProfile {
    /// `e^{r,k}`, zero outside `0..=K`.
    pub fn value(&self, k: i64) -> BigInt {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.values.get(k).cloned())
            .unwrap_or_else(BigInt::zero)
    }

    /// `K = (m+n)r - 2r²`.
    pub fn top(&self) -> u32 {
        self.values.len() as u32 - 1
    }

    /// The multiplicity of the germ, `e^{r,0}`.
    pub fn multiplicity(&self) -> &BigInt {
        &self.values[0]
    }

    /// Checks `sign(I_k) = (-1)^k` on the nonzero integrals.
    pub fn check_signs(&self) -> Result<()> {
        for (k, &s) in self.raw_signs.iter().enumerate() {
            let expected = if k % 2 == 0 { 1 } else { -1 };
            if s != 0 && s != expected {
                return Err(Error::Consistency(format!(
                    "polar integrals for (m, n, r) = ({}, {}, {}) do not alternate in sign at k = {k}",
                    self.m, self.n, self.r
                )));
            }
        }
        if self.values.iter().any(Signed::is_negative) {
            return Err(Error::Consistency("negative polar multiplicity".into()));
        }
        Ok(())
    }
}

fn validate(m: u32, n: u32, r: u32) -> Result<()> {
    if m == 0 || m > n {
        return Err(Error::InvalidParameters(format!(
            "polar multiplicities need 1 <= m <= n, got m = {m}, n = {n}"
        )));
    }
    if r > m {
        return Err(Error::out_of_range("r", r as i64, format!("0..={m}")));
    }
    Ok(())
}

/// `K = (m+n)r - 2r²`, the top index of the profile.
pub fn top_index(m: u32, n: u32, r: u32) -> u32 {
    (m + n) * r - 2 * r * r
}

/// Dimension `(m+n)r - r²` of `M_{m,n}^{r+1}`.
pub fn variety_dim(m: u32, n: u32, r: u32) -> u32 {
    (m + n) * r - r * r
}

/// Computes a profile from scratch, bypassing the in-memory memo.
pub fn compute_profile(m: u32, n: u32, r: u32) -> Result<PolarProfile> {
    validate(m, n, r)?;
    if r == 0 {
        return Ok(PolarProfile {
            m,
            n,
            r,
            values: vec![BigInt::one()],
            raw_signs: vec![1],
        });
    }
    let spec = ProdSpec::new(r, n, m)?;
    let top = spec.dim();
    let sq = segre_tensor(spec, Bundle::QuotTensor, top)?;
    let ss = segre_tensor(spec, Bundle::SubTensor, top)?;
    let mut values = Vec::with_capacity(top as usize + 1);
    let mut raw_signs = Vec::with_capacity(top as usize + 1);
    for k in 0..=top {
        let raw = pair(&sq.term(k), &ss.term(top - k))?;
        raw_signs.push(match raw.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        });
        values.push(raw.abs());
    }
    let profile = PolarProfile {
        m,
        n,
        r,
        values,
        raw_signs,
    };
    profile.check_signs()?;
    Ok(profile)
}

type ProfileKey = (u32, u32, u32);

fn memo() -> &'static Mutex<HashMap<ProfileKey, Arc<PolarProfile>>> {
    static MEMO: OnceLock<Mutex<HashMap<ProfileKey, Arc<PolarProfile>>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The profile of `(m, n, r)`, memoized for the life of the process.
pub fn polar_profile(m: u32, n: u32, r: u32) -> Result<Arc<PolarProfile>> {
    validate(m, n, r)?;
    if let Some(p) = memo().lock().expect("profile memo poisoned").get(&(m, n, r)) {
        return Ok(p.clone());
    }
    let p = Arc::new(compute_profile(m, n, r)?);
    memo()
        .lock()
        .expect("profile memo poisoned")
        .entry((m, n, r))
        .or_insert_with(|| p.clone());
    Ok(p)
}

/// Seeds the memo, e.g. from an on-disk cache. Existing entries win.
pub fn insert_profile(profile: PolarProfile) {
    memo()
        .lock()
        .expect("profile memo poisoned")
        .entry((profile.m, profile.n, profile.r))
        .or_insert_with(|| Arc::new(profile));
}

/// Every profile currently held in memory, sorted by `(m, n, r)`.
pub fn memo_snapshot() -> Vec<Arc<PolarProfile>> {
    let mut all: Vec<_> = memo()
        .lock()
        .expect("profile memo poisoned")
        .values()
        .cloned()
        .collect();
    all.sort_by_key(|p| (p.m, p.n, p.r));
    all
}

/// `e_{m,n}^{r,k}` for `0 <= k <= K`.
pub fn polar_multiplicity(m: u32, n: u32, r: u32, k: u32) -> Result<BigInt> {
    validate(m, n, r)?;
    let top = top_index(m, n, r);
    if k > top {
        return Err(Error::out_of_range("k", k as i64, format!("0..={top}")));
    }
    Ok(polar_profile(m, n, r)?.values[k as usize].clone())
}

/// Comparison of `e^{r,k}` with `e^{m-r, 2(m-r)r - k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub m: u32,
    pub n: u32,
    pub r: u32,
    /// `(k, k', e^{r,k}, e^{m-r,k'})`, covering every index at which either
    /// side can be nonzero.
    pub pairs: Vec<(i64, i64, BigInt, BigInt)>,
    pub all_equal: bool,
}

pub fn duality_check(m: u32, n: u32, r: u32) -> Result<DualityReport> {
    validate(m, n, r)?;
    if r == 0 || r >= m {
        return Err(Error::out_of_range(
            "r",
            r as i64,
            format!("1..={}", m.saturating_sub(1)),
        ));
    }
    let left = polar_profile(m, n, r)?;
    let right = polar_profile(m, n, m - r)?;
    let shift = 2 * (m as i64 - r as i64) * r as i64;
    let lo = 0.min(shift - right.top() as i64);
    let hi = (left.top() as i64).max(shift);
    let pairs: Vec<_> = (lo..=hi)
        .map(|k| (k, shift - k, left.value(k), right.value(shift - k)))
        .collect();
    let all_equal = pairs.iter().all(|(_, _, a, b)| a == b);
    Ok(DualityReport {
        m,
        n,
        r,
        pairs,
        all_equal,
    })
}

/// Local Euler obstruction `Σ_{j=i}^{d} (-1)^{d-j} e^{r,d-j}` with
/// `d = (m+n)r - r²`, for `0 <= i <= d + 1` (the empty sum at `d + 1` is 0).
pub fn euler_obstruction(m: u32, n: u32, r: u32, i: u32) -> Result<BigInt> {
    validate(m, n, r)?;
    let d = variety_dim(m, n, r);
    if i > d + 1 {
        return Err(Error::out_of_range("i", i as i64, format!("0..={}", d + 1)));
    }
    let profile = polar_profile(m, n, r)?;
    let mut acc = BigInt::zero();
    for j in i..=d {
        let term = profile.value((d - j) as i64);
        if (d - j).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn two_by_two() {
        let p = polar_profile(2, 2, 1).unwrap();
        assert_eq!(p.values, ints(&[2, 2, 2]));
        assert_eq!(p.raw_signs, vec![1, -1, 1]);
    }

    #[test]
    fn small_profiles() {
        assert_eq!(polar_profile(2, 3, 1).unwrap().values, ints(&[3, 4, 3, 0]));
        assert_eq!(polar_profile(3, 3, 1).unwrap().values, ints(&[6, 12, 12, 6, 3]));
        // Last entry: ∫ (h1 + h2)^4 on P² × P², also forced by duality with e^{1,0} = 6.
        assert_eq!(polar_profile(3, 3, 2).unwrap().values, ints(&[3, 6, 12, 12, 6]));
        assert_eq!(polar_profile(3, 4, 2).unwrap().values, ints(&[6, 16, 27, 24, 10, 0, 0]));
    }

    #[test]
    fn point_germ_and_full_rank() {
        assert_eq!(polar_profile(1, 2, 0).unwrap().values, ints(&[1]));
        let full = polar_profile(2, 3, 2).unwrap();
        assert_eq!(full.values[0], BigInt::one());
        assert!(full.values[1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn rejects_bad_ranges() {
        assert!(polar_multiplicity(3, 2, 1, 0).is_err());
        assert!(polar_multiplicity(2, 3, 3, 0).is_err());
        assert!(polar_multiplicity(2, 3, 1, 4).is_err());
    }

    #[test]
    fn duality_three_by_four() {
        let rep = duality_check(3, 4, 1).unwrap();
        assert!(rep.all_equal);
        assert!(rep
            .pairs
            .iter()
            .any(|(k, k2, a, _)| *k == 0 && *k2 == 4 && *a == BigInt::from(10)));
    }

    #[test]
    fn euler_obstructions() {
        assert_eq!(euler_obstruction(2, 3, 1, 1).unwrap(), BigInt::from(2));
        assert_eq!(euler_obstruction(3, 4, 2, 7).unwrap(), BigInt::from(-7));
        assert_eq!(euler_obstruction(3, 4, 2, 10).unwrap(), BigInt::from(6));
        assert_eq!(euler_obstruction(3, 4, 2, 11).unwrap(), BigInt::zero());
        assert!(euler_obstruction(3, 4, 2, 12).is_err());
    }
}
