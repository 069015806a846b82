//! Brute-force model of `H*(Grass(r, m))` as `Z[x_1, ..., x_r] / J`.
//!
//! Each graded piece is built independently: the monomials of weighted degree
//! `d` span `Z^N`, the multiples of the relations `h_i` span a sublattice, and
//! an exact diagonalization over `Z` yields the quotient, its rank, any torsion,
//! and a coordinate map. Nothing here touches the Schubert basis; the
//! comparison with [`super::GrassClass`] lives in [`compare_with_schubert`].

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::linalg::{determinant, diagonalize, row_times, IntMatrix};
use super::presentation::{giambelli, grassmann_relations, PresentationPoly};
use super::{GrassClass, GrassSpec};
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Monomial exponent vectors of weighted degree `d` in `vars` variables
/// (`deg x_i = i`), in a fixed order.
pub fn weighted_monomials(vars: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut e = vec![0u32; vars];
    fn rec(i: usize, remaining: u32, e: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == 0 {
            if remaining == 0 {
                out.push(e.clone());
            }
            return;
        }
        let w = i as u32;
        for k in (0..=remaining / w).rev() {
            e[i - 1] = k;
            rec(i - 1, remaining - k * w, e, out);
        }
        e[i - 1] = 0;
    }
    if vars == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(vars, d, &mut e, &mut out);
    out
}

/// One graded piece of the quotient ring.
pub struct GradedPiece {
    pub degree: u32,
    pub monomials: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
    relation_rank: usize,
    torsion: Vec<BigInt>,
    v: IntMatrix,
    basis: Vec<PresentationPoly>,
}

impl GradedPiece {
    /// Rank of the free part of the quotient in this degree.
    pub fn rank(&self) -> usize {
        self.monomials.len() - self.relation_rank
    }

    /// Nontrivial invariant factors of the quotient (empty when free).
    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    /// Representatives of the quotient basis.
    pub fn basis(&self) -> &[PresentationPoly] {
        &self.basis
    }

    fn coordinates(&self, p: &PresentationPoly) -> Vec<BigInt> {
        let mut vec = vec![BigInt::zero(); self.monomials.len()];
        for (e, c) in p.terms() {
            vec[self.index[e]] += c;
        }
        row_times(&vec, &self.v).split_off(self.relation_rank)
    }
}

/// `Z[x_1..x_r] / J_{r,m}` built degree by degree.
pub struct QuotientOracle {
    spec: GrassSpec,
    relations: Vec<PresentationPoly>,
    pieces: Vec<GradedPiece>,
}

impl QuotientOracle {
    /// Largest ring rank the oracle accepts.
    pub const MAX_RANK: u64 = 200;

    pub fn build(spec: GrassSpec) -> Result<Self> {
        let rank: u64 = spec.rank().try_into().unwrap_or(u64::MAX);
        if rank > Self::MAX_RANK {
            return Err(Error::OracleScale {
                rank,
                limit: Self::MAX_RANK,
            });
        }
        let r = spec.r() as usize;
        let relations = grassmann_relations(spec.r(), spec.m());
        // Vanishing in degrees dim+1 ..= dim+r forces vanishing above, since
        // every longer monomial is divisible by one of those degrees.
        let top = spec.dim() + spec.r();
        let pieces = (0..=top).map(|d| build_piece(r, d, &relations)).collect();
        Ok(QuotientOracle {
            spec,
            relations,
            pieces,
        })
    }

    pub fn spec(&self) -> GrassSpec {
        self.spec
    }

    pub fn relations(&self) -> &[PresentationPoly] {
        &self.relations
    }

    pub fn piece(&self, d: u32) -> Option<&GradedPiece> {
        self.pieces.get(d as usize)
    }

    /// Free ranks in degrees `0..=dim`.
    pub fn graded_ranks(&self) -> Vec<usize> {
        self.pieces[..=self.spec.dim() as usize]
            .iter()
            .map(GradedPiece::rank)
            .collect()
    }

    /// True if every computed piece is free and everything above the
    /// dimension vanishes.
    pub fn is_torsion_free(&self) -> bool {
        self.pieces.iter().all(|p| p.torsion.is_empty())
    }

    pub fn vanishes_above_dimension(&self) -> bool {
        self.pieces[self.spec.dim() as usize + 1..]
            .iter()
            .all(|p| p.rank() == 0 && p.torsion.is_empty())
    }

    /// Coordinates of a homogeneous polynomial in the quotient basis of its
    /// degree.
    pub fn coordinates(&self, p: &PresentationPoly) -> Result<(u32, Vec<BigInt>)> {
        let d = p
            .homogeneous_degree()
            .ok_or_else(|| Error::InvalidParameters("oracle coordinates need a homogeneous polynomial".into()))?;
        match self.pieces.get(d as usize) {
            Some(piece) => Ok((d, piece.coordinates(p))),
            None if self.vanishes_above_dimension() => Ok((d, Vec::new())),
            None => Err(Error::Consistency(format!(
                "quotient for {} does not vanish above its dimension",
                self.spec
            ))),
        }
    }

    /// Structure constants in the oracle's own basis: the product of basis
    /// element `i` of degree `a` with basis element `j` of degree `b`, as
    /// coordinates in degree `a + b`.
    pub fn structure_constant(&self, a: u32, i: usize, b: u32, j: usize) -> Result<Vec<BigInt>> {
        let pa = &self.pieces[a as usize].basis[i];
        let pb = &self.pieces[b as usize].basis[j];
        Ok(self.coordinates(&(pa * pb))?.1)
    }
}

fn build_piece(r: usize, d: u32, relations: &[PresentationPoly]) -> GradedPiece {
    let monomials = weighted_monomials(r, d);
    let index: HashMap<Vec<u32>, usize> = monomials.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let mut rows: IntMatrix = Vec::new();
    for h in relations {
        let hd = h.homogeneous_degree().expect("relations are homogeneous");
        if hd > d {
            continue;
        }
        for u in weighted_monomials(r, d - hd) {
            let prod = &PresentationPoly::monomial(u, 1) * h;
            let mut row = vec![BigInt::zero(); monomials.len()];
            for (e, c) in prod.terms() {
                row[index[e]] += c;
            }
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    let diag = diagonalize(rows, monomials.len());
    let torsion = diag.torsion();
    let basis = diag.v_inv[diag.rank..]
        .iter()
        .map(|row| {
            let mut p = PresentationPoly::zero(r);
            for (e, c) in monomials.iter().zip(row) {
                p.add_term(e.clone(), c.clone());
            }
            p
        })
        .collect();
    GradedPiece {
        degree: d,
        monomials,
        index,
        relation_rank: diag.rank,
        torsion,
        v: diag.v,
        basis,
    }
}

/// Outcome of checking Schubert multiplication against the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleComparison {
    pub spec: GrassSpec,
    pub graded_ranks: Vec<usize>,
    pub torsion_free: bool,
    /// Every graded piece: the Giambelli images of the Schubert classes form
    /// a Z-basis of the quotient.
    pub schubert_basis_unimodular: bool,
    pub products_checked: usize,
    pub product_mismatches: Vec<(Partition, Partition)>,
}

impl OracleComparison {
    pub fn passed(&self) -> bool {
        self.torsion_free && self.schubert_basis_unimodular && self.product_mismatches.is_empty()
    }
}

/// Maps every Schubert class into the oracle through its Giambelli
/// polynomial and checks `σ_λ σ_μ` coefficientwise for all basis pairs.
pub fn compare_with_schubert(spec: GrassSpec) -> Result<OracleComparison> {
    let oracle = QuotientOracle::build(spec)?;
    let r = spec.r() as usize;
    let basis = spec.basis();
    let polys: Vec<PresentationPoly> = basis.iter().map(|lam| giambelli(r, lam)).collect();
    let mut images: HashMap<Partition, Vec<BigInt>> = HashMap::new();
    for (lam, p) in basis.iter().zip(&polys) {
        images.insert(lam.clone(), oracle.coordinates(p)?.1);
    }

    let mut unimodular = true;
    for d in 0..=spec.dim() {
        let rows: IntMatrix = basis
            .iter()
            .filter(|l| l.weight() == d)
            .map(|l| images[l].clone())
            .collect();
        if rows.len() != oracle.pieces[d as usize].rank() || !determinant(&rows).abs().is_one() {
            unimodular = false;
        }
    }

    let mut mismatches = Vec::new();
    let mut checked = 0;
    for (i, lam) in basis.iter().enumerate() {
        for (j, mu) in basis.iter().enumerate().skip(i) {
            checked += 1;
            let lhs = oracle.coordinates(&(&polys[i] * &polys[j]))?.1;
            let prod = GrassClass::schubert(spec, lam.clone())?.mul(&GrassClass::schubert(spec, mu.clone())?)?;
            let mut rhs = vec![BigInt::zero(); lhs.len()];
            for (nu, c) in prod.terms() {
                for (x, y) in rhs.iter_mut().zip(&images[nu]) {
                    *x += c * y;
                }
            }
            if lhs != rhs {
                mismatches.push((lam.clone(), mu.clone()));
            }
        }
    }

    Ok(OracleComparison {
        spec,
        graded_ranks: oracle.graded_ranks(),
        torsion_free: oracle.is_torsion_free() && oracle.vanishes_above_dimension(),
        schubert_basis_unimodular: unimodular,
        products_checked: checked,
        product_mismatches: mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(r: u32, m: u32) -> GrassSpec {
        GrassSpec::new(r, m).unwrap()
    }

    #[test]
    fn projective_plane_is_truncated() {
        let o = QuotientOracle::build(spec(1, 3)).unwrap();
        assert_eq!(o.graded_ranks(), vec![1, 1, 1]);
        let cube = PresentationPoly::monomial(vec![3], 1);
        assert!(o.coordinates(&cube).unwrap().1.iter().all(Zero::is_zero));
    }

    #[test]
    fn grass_2_4_ranks() {
        let o = QuotientOracle::build(spec(2, 4)).unwrap();
        assert_eq!(o.graded_ranks(), vec![1, 1, 2, 1, 1]);
        assert!(o.is_torsion_free());
        assert!(o.vanishes_above_dimension());
    }

    #[test]
    fn grass_2_5_total_rank() {
        let o = QuotientOracle::build(spec(2, 5)).unwrap();
        assert_eq!(o.graded_ranks().iter().sum::<usize>(), 10);
    }

    #[test]
    fn refuses_large_rings() {
        assert!(matches!(
            QuotientOracle::build(spec(5, 10)),
            Err(Error::OracleScale { rank: 252, .. })
        ));
    }

    #[test]
    fn degree_of_grass_2_4_via_oracle() {
        // x_1^4 in the oracle vs σ_(1)^4 = 2 σ_box.
        let o = QuotientOracle::build(spec(2, 4)).unwrap();
        let x14 = PresentationPoly::monomial(vec![4, 0], 1);
        let point = giambelli(2, &spec(2, 4).full_box());
        let (_, a) = o.coordinates(&x14).unwrap();
        let (_, b) = o.coordinates(&point).unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(a[0].abs(), BigInt::from(2) * b[0].abs());
    }

    #[test]
    fn schubert_agrees_on_small_grassmannians() {
        for (r, m) in [(1, 3), (2, 4), (2, 5), (3, 6)] {
            let cmp = compare_with_schubert(spec(r, m)).unwrap();
            assert!(cmp.passed(), "{cmp:?}");
        }
    }
}
