//! Universal tensor-Chern polynomials.
//!
//! For bundles `E` of rank `a` and `F` of rank `b`, with Chern roots `α_i` and
//! `β_j`,
//!
//! ```text
//! c(E ⊗ F) = Π_{i,j} (1 + α_i + β_j) = Π_j Σ_i c_i(E) (1 + β_j)^{a-i}.
//! ```
//!
//! The right-hand side is expanded as a polynomial in the formal symbols
//! `c_i(E)` and the roots `β_j`, truncated by degree, and rewritten through
//! the fundamental theorem of symmetric polynomials as a polynomial in
//! `c_i(E)` and `c_j(F)`. The result depends only on `(a, b)` and is evaluated
//! on the factors' Chern classes afterwards. The expansion grows quickly with
//! the ranks, so this path serves as a check on small products.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Bundle, CharSeries, Flavor, ProdClass, ProdSpec};
use crate::error::{Error, Result};
use crate::grass::GrassClass;
use crate::partitions::binomial;

type Exps = Vec<u32>;
/// β-exponents → (c(E)-exponents → coefficient).
type Mixed = BTreeMap<Exps, BTreeMap<Exps, BigInt>>;

/// `c_k(E ⊗ F)` for `k = 0..=top` as polynomials in `c_i(E)` and `c_j(F)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalTensorChern {
    pub rank_e: u32,
    pub rank_f: u32,
    /// `degrees[k]`: `(exponents of c_1(E)..c_a(E), exponents of c_1(F)..c_b(F)) → coefficient`.
    pub degrees: Vec<BTreeMap<(Exps, Exps), BigInt>>,
}

fn weight(exps: &[u32]) -> u32 {
    exps.iter().enumerate().map(|(i, e)| (i as u32 + 1) * e).sum()
}

fn add_into(map: &mut BTreeMap<Exps, BigInt>, key: Exps, v: BigInt) {
    if v.is_zero() {
        return;
    }
    let e = map.entry(key.clone()).or_insert_with(BigInt::zero);
    *e += v;
    if e.is_zero() {
        map.remove(&key);
    }
}

fn mul_e(x: &[u32], y: &[u32]) -> Exps {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

/// `Π_j P(β_j)` truncated at total degree `top`.
fn expand_product(a: u32, b: u32, top: u32) -> Mixed {
    let au = a as usize;
    // P(β) = Σ_t q_t β^t with q_t = Σ_i C(a - i, t) c_i(E).
    let mut factor: Vec<(u32, Exps, BigInt)> = Vec::new();
    for i in 0..=a {
        let mut e = vec![0u32; au];
        if i > 0 {
            e[i as usize - 1] = 1;
        }
        for t in 0..=a - i {
            if i + t <= top {
                factor.push((t, e.clone(), binomial((a - i) as u64, t as u64)));
            }
        }
    }
    let mut acc: Mixed = BTreeMap::new();
    acc.entry(Vec::new()).or_default().insert(vec![0; au], BigInt::one());
    for _ in 0..b {
        let mut next: Mixed = BTreeMap::new();
        for (beta, coeffs) in &acc {
            let bdeg: u32 = beta.iter().sum();
            for (t, ee, c) in &factor {
                let mut nb = beta.clone();
                nb.push(*t);
                for (e, v) in coeffs {
                    let ne = mul_e(e, ee);
                    if bdeg + t + weight(&ne) > top {
                        continue;
                    }
                    add_into(next.entry(nb.clone()).or_default(), ne, v * c);
                }
            }
        }
        next.retain(|_, v| !v.is_empty());
        acc = next;
    }
    acc
}

/// Elementary symmetric polynomial `e_k(β_1..β_b)` as β-exponent map.
fn elementary(b: usize, k: usize) -> BTreeMap<Exps, BigInt> {
    let mut out = BTreeMap::new();
    let mut choose = |mask: u32| {
        let exps: Exps = (0..b).map(|j| (mask >> j) & 1).collect();
        out.insert(exps, BigInt::one());
    };
    for mask in 0u32..(1 << b) {
        if mask.count_ones() as usize == k {
            choose(mask);
        }
    }
    out
}

fn mul_beta(x: &BTreeMap<Exps, BigInt>, y: &BTreeMap<Exps, BigInt>) -> BTreeMap<Exps, BigInt> {
    let mut out = BTreeMap::new();
    for (a, c) in x {
        for (b, d) in y {
            add_into(&mut out, mul_e(a, b), c * d);
        }
    }
    out
}

/// Rewrites a symmetric polynomial in the β's via leading terms.
fn reduce_symmetric(a: u32, b: u32, mut poly: Mixed) -> Result<BTreeMap<(Exps, Exps), BigInt>> {
    let bu = b as usize;
    let elem: Vec<BTreeMap<Exps, BigInt>> = (0..=bu).map(|k| elementary(bu, k)).collect();
    let mut f_monomials: HashMap<Exps, BTreeMap<Exps, BigInt>> = HashMap::new();
    let mut out = BTreeMap::new();
    while let Some((lead, coeffs)) = poly.pop_last() {
        if coeffs.is_empty() {
            continue;
        }
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Consistency(format!(
                "tensor expansion for ranks ({a}, {b}) is not symmetric in the roots of F"
            )));
        }
        // β^v is the leading term of Π_j e_j^{v_j - v_{j+1}}.
        let fexp: Exps = (0..bu)
            .map(|j| lead[j] - lead.get(j + 1).copied().unwrap_or(0))
            .collect();
        let expansion = f_monomials
            .entry(fexp.clone())
            .or_insert_with(|| {
                let mut acc = BTreeMap::new();
                acc.insert(vec![0; bu], BigInt::one());
                for (j, &k) in fexp.iter().enumerate() {
                    for _ in 0..k {
                        acc = mul_beta(&acc, &elem[j + 1]);
                    }
                }
                acc
            })
            .clone();
        for (e, c) in &coeffs {
            out.insert((e.clone(), fexp.clone()), c.clone());
        }
        for (beta, d) in expansion {
            if beta == lead {
                continue;
            }
            let slot = poly.entry(beta).or_default();
            for (e, c) in &coeffs {
                add_into(slot, e.clone(), -(c * &d));
            }
        }
        poly.retain(|_, v| !v.is_empty());
    }
    Ok(out)
}

/// Universal polynomials for ranks `(a, b)` up to degree `top`; memoized.
pub fn universal_tensor_chern(a: u32, b: u32, top: u32) -> Result<Arc<UniversalTensorChern>> {
    type Memo = Mutex<HashMap<(u32, u32, u32), Arc<UniversalTensorChern>>>;
    static MEMO: OnceLock<Memo> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(u) = memo.lock().expect("memo poisoned").get(&(a, b, top)) {
        return Ok(u.clone());
    }
    let reduced = reduce_symmetric(a, b, expand_product(a, b, top))?;
    let mut degrees = vec![BTreeMap::new(); top as usize + 1];
    for ((e, f), c) in reduced {
        let d = weight(&e) + weight(&f);
        degrees[d as usize].insert((e, f), c);
    }
    let u = Arc::new(UniversalTensorChern {
        rank_e: a,
        rank_f: b,
        degrees,
    });
    memo.lock().expect("memo poisoned").insert((a, b, top), u.clone());
    Ok(u)
}

fn monomial(c: &[GrassClass], exps: &[u32], cache: &mut HashMap<Exps, GrassClass>) -> Result<GrassClass> {
    if let Some(v) = cache.get(exps) {
        return Ok(v.clone());
    }
    let mut acc = GrassClass::one(c[0].spec());
    for (i, &k) in exps.iter().enumerate() {
        if k > 0 {
            acc = acc.mul(&c[i + 1].pow(k)?)?;
        }
    }
    cache.insert(exps.to_vec(), acc.clone());
    Ok(acc)
}

/// `c_0, ..., c_up_to` of the tensor bundle by evaluating the universal
/// polynomials on the factors' Chern classes.
pub fn chern_tensor_universal(spec: ProdSpec, bundle: Bundle, up_to: u32) -> Result<CharSeries> {
    let up_to = up_to.min(spec.dim());
    let (a, b) = bundle.factor_ranks(spec);
    let (ce, cf) = bundle.factor_chern(spec);
    let u = universal_tensor_chern(a, b, up_to)?;
    let mut cache_e = HashMap::new();
    let mut cache_f = HashMap::new();
    let mut terms = Vec::with_capacity(up_to as usize + 1);
    for poly in &u.degrees {
        let mut acc = ProdClass::zero(spec);
        for ((e, f), c) in poly {
            let x = monomial(&ce, e, &mut cache_e)?;
            if x.is_zero() {
                continue;
            }
            let y = monomial(&cf, f, &mut cache_f)?;
            acc = &acc + &ProdClass::outer(spec, &x, &y)?.scale(c);
        }
        terms.push(acc);
    }
    Ok(CharSeries {
        spec,
        bundle,
        flavor: Flavor::Chern,
        terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_bundles_add() {
        let u = universal_tensor_chern(1, 1, 3).unwrap();
        // c(L ⊗ M) = 1 + c_1(L) + c_1(M)
        assert_eq!(u.degrees[1].len(), 2);
        assert_eq!(u.degrees[1][&(vec![1], vec![0])], BigInt::one());
        assert_eq!(u.degrees[1][&(vec![0], vec![1])], BigInt::one());
        assert!(u.degrees[2].is_empty());
    }

    #[test]
    fn rank_two_with_line() {
        // c_1(E ⊗ L) = c_1(E) + 2 c_1(L), c_2 = c_2(E) + c_1(E) c_1(L) + c_1(L)^2.
        let u = universal_tensor_chern(2, 1, 2).unwrap();
        assert_eq!(u.degrees[1][&(vec![0, 0], vec![1])], BigInt::from(2));
        assert_eq!(u.degrees[2][&(vec![0, 1], vec![0])], BigInt::one());
        assert_eq!(u.degrees[2][&(vec![1, 0], vec![1])], BigInt::one());
        assert_eq!(u.degrees[2][&(vec![0, 0], vec![2])], BigInt::one());
    }

    #[test]
    fn rank_two_by_two_first_classes() {
        // c_1(E ⊗ F) = 2 c_1(E) + 2 c_1(F)
        let u = universal_tensor_chern(2, 2, 1).unwrap();
        assert_eq!(u.degrees[1][&(vec![1, 0], vec![0, 0])], BigInt::from(2));
        assert_eq!(u.degrees[1][&(vec![0, 0], vec![1, 0])], BigInt::from(2));
    }

    #[test]
    fn agrees_with_power_sum_path() {
        let spec = ProdSpec::new(2, 4, 3).unwrap();
        for b in [Bundle::SubTensor, Bundle::QuotTensor] {
            let fast = super::super::chern_tensor(spec, b, spec.dim()).unwrap();
            let slow = chern_tensor_universal(spec, b, spec.dim()).unwrap();
            assert_eq!(fast, slow, "{b}");
        }
    }
}
