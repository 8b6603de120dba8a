//! Exact integer linear algebra on weight vectors in `Z^k`.
//!
//! Everything here is pure and allocation-light: weights carry `i64`
//! entries, while the elimination routines (Hermite form, the one-column
//! Smith form behind quotient residues, determinants) run over `BigInt`
//! so that intermediate growth can never wrap.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// An element of `Z^k`: the label of an edge, or a weight at a fixed point.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(entries: Vec<i64>) -> Self {
        Weight(entries)
    }

    /// Standard basis vector `e_i` (0-indexed) in rank `k`.
    pub fn basis(k: usize, i: usize) -> Self {
        let mut v = vec![0; k];
        v[i] = 1;
        Weight(v)
    }

    pub fn zero(k: usize) -> Self {
        Weight(vec![0; k])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|&x| -x).collect())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled(&self, c: i64) -> Weight {
        Weight(self.0.iter().map(|&x| c * x).collect())
    }

    /// Exact pairing `<self, other>` in `i128`.
    pub fn dot(&self, other: &Weight) -> i128 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a as i128 * b as i128)
            .sum()
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.0.iter().map(|x| x.abs()).max().unwrap_or(0)
    }

    /// gcd of the absolute entries. Errors on the zero vector.
    pub fn content(&self) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::ZeroWeight);
        }
        Ok(self.0.iter().fold(0i64, |g, &x| g.gcd(&x)))
    }

    /// Splits `w = scalar * primitive` with `primitive` of content 1 and
    /// first nonzero entry positive. Errors on the zero vector.
    pub fn canonical_parts(&self) -> Result<(i64, Weight)> {
        let c = self.content()?;
        let first = *self.0.iter().find(|&&x| x != 0).unwrap();
        let scalar = if first > 0 { c } else { -c };
        Ok((scalar, Weight(self.0.iter().map(|&x| x / scalar).collect())))
    }

    /// Sign-normalized copy: first nonzero entry positive. Zero stays zero.
    pub fn sign_canonical(&self) -> Weight {
        match self.0.iter().find(|&&x| x != 0) {
            Some(&first) if first < 0 => self.neg(),
            _ => self.clone(),
        }
    }

    pub fn is_sign_canonical(&self) -> bool {
        matches!(self.0.iter().find(|&&x| x != 0), None | Some(&(1..)))
    }

    pub fn is_parallel(&self, other: &Weight) -> bool {
        debug_assert_eq!(self.rank(), other.rank());
        for i in 0..self.rank() {
            for j in (i + 1)..self.rank() {
                let d = self.0[i] as i128 * other.0[j] as i128
                    - self.0[j] as i128 * other.0[i] as i128;
                if d != 0 {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn to_big(w: &Weight) -> Vec<BigInt> {
    w.entries().iter().map(|&x| BigInt::from(x)).collect()
}

/// Row-echelon basis (Hermite style) of the lattice spanned by `rows`.
/// Pivots are positive; rows are ordered by pivot column.
#[allow(clippy::needless_range_loop)] // row ops mutate one row from another
fn hnf_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut work: Vec<Vec<BigInt>> = rows.iter().filter(|r| !is_zero_row(r)).cloned().collect();
    let cols = rows.first().map_or(0, |r| r.len());
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    for col in 0..cols {
        loop {
            let mut nz: Vec<usize> = (0..work.len()).filter(|&i| !work[i][col].is_zero()).collect();
            if nz.len() <= 1 {
                break;
            }
            nz.sort_by_key(|&i| work[i][col].abs());
            let (small, other) = (nz[0], nz[1]);
            let q = &work[other][col] / &work[small][col];
            for c in 0..cols {
                let t = &work[other][c] - &q * &work[small][c];
                work[other][c] = t;
            }
        }
        if let Some(i) = (0..work.len()).find(|&i| !work[i][col].is_zero()) {
            let mut piv = work.remove(i);
            if piv[col].is_negative() {
                for x in piv.iter_mut() {
                    *x = -&*x;
                }
            }
            out.push(piv);
        }
        work.retain(|r| !is_zero_row(r));
    }
    out
}

fn is_zero_row(r: &[BigInt]) -> bool {
    r.iter().all(|x| x.is_zero())
}

/// Is `w` an integer combination of `generators`?
///
/// Decided by reducing `w` against the Hermite basis of the generator
/// lattice. An empty generator list only contains the zero vector.
pub fn in_sublattice(generators: &[Weight], w: &Weight) -> bool {
    if generators.is_empty() {
        return w.is_zero();
    }
    let rows: Vec<Vec<BigInt>> = generators.iter().map(to_big).collect();
    let basis = hnf_rows(&rows);
    let cols = w.rank();
    let mut v = to_big(w);
    for row in &basis {
        let col = (0..cols).find(|&c| !row[c].is_zero()).unwrap();
        if !v[col].is_zero() {
            let (q, r) = v[col].div_rem(&row[col]);
            if !r.is_zero() {
                return false;
            }
            for c in 0..cols {
                let t = &v[c] - &q * &row[c];
                v[c] = t;
            }
        }
    }
    is_zero_row(&v)
}

/// Residue map for the quotient `Z^k / Zw`, built from the Smith form of
/// the one-column matrix `[w]`: a unimodular `U` with `U w = (d,0,..,0)`,
/// `d = content(w)`. The residue of `x` is `((Ux)_1 mod d, (Ux)_2, ...)`.
pub struct QuotientMap {
    u: Vec<Vec<i128>>,
    d: i128,
}

impl QuotientMap {
    #[allow(clippy::needless_range_loop)] // row ops mutate one row from another
    pub fn new(w: &Weight) -> Result<Self> {
        if w.is_zero() {
            return Err(Error::ZeroWeight);
        }
        let k = w.rank();
        let mut col: Vec<i128> = w.entries().iter().map(|&x| x as i128).collect();
        let mut u: Vec<Vec<i128>> = (0..k)
            .map(|i| (0..k).map(|j| i128::from(i == j)).collect())
            .collect();
        loop {
            let nz: Vec<usize> = (0..k).filter(|&i| col[i] != 0).collect();
            if nz.len() == 1 {
                let p = nz[0];
                col.swap(0, p);
                u.swap(0, p);
                if col[0] < 0 {
                    col[0] = -col[0];
                    for x in u[0].iter_mut() {
                        *x = -*x;
                    }
                }
                break;
            }
            let &small = nz.iter().min_by_key(|&&i| col[i].abs()).unwrap();
            for &j in &nz {
                if j == small {
                    continue;
                }
                let q = col[j] / col[small];
                col[j] -= q * col[small];
                for c in 0..k {
                    u[j][c] -= q * u[small][c];
                }
            }
        }
        Ok(QuotientMap { u, d: col[0] })
    }

    /// Canonical representative of `x` in `Z^k / Zw`.
    pub fn residue(&self, x: &Weight) -> Vec<i128> {
        let mut y: Vec<i128> = self
            .u
            .iter()
            .map(|row| {
                row.iter()
                    .zip(x.entries())
                    .map(|(&a, &b)| a * b as i128)
                    .sum()
            })
            .collect();
        y[0] = y[0].rem_euclid(self.d);
        y
    }
}

/// Is there a bijection between `a` and `b` matching elements whose
/// difference lies in `Zw`?
///
/// Residue histograms in `Z^k / Zw` are compared; a bijection exists iff
/// they agree, so no backtracking is ever needed.
pub fn multiset_congruent_mod(w: &Weight, a: &[Weight], b: &[Weight]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch(a.len(), b.len()));
    }
    let map = QuotientMap::new(w)?;
    let mut hist: BTreeMap<Vec<i128>, i64> = BTreeMap::new();
    for x in a {
        *hist.entry(map.residue(x)).or_insert(0) += 1;
    }
    for x in b {
        *hist.entry(map.residue(x)).or_insert(0) -= 1;
    }
    Ok(hist.values().all(|&c| c == 0))
}

/// A circle direction `xi = (1, N, N^2, ..., N^{k-1})`, `N = 2B+1` with `B`
/// the largest absolute entry over `labels`, pairing nonzero with every
/// label (base-`N` digit argument).
pub fn generic_circle(labels: &[Weight]) -> Result<Weight> {
    let first = labels.first().ok_or(Error::EmptyInput("label list"))?;
    let k = first.rank();
    let mut bound = 0i64;
    for w in labels {
        if w.is_zero() {
            return Err(Error::ZeroWeight);
        }
        bound = bound.max(w.max_abs_entry());
    }
    let n = 2i128 * bound as i128 + 1;
    let mut entries = Vec::with_capacity(k);
    let mut pow = 1i128;
    for _ in 0..k {
        entries.push(i64::try_from(pow).map_err(|_| Error::Overflow("generic_circle"))?);
        pow = pow.checked_mul(n).ok_or(Error::Overflow("generic_circle"))?;
    }
    let xi = Weight::new(entries);
    for w in labels {
        if w.dot(&xi) == 0 {
            return Err(Error::ZeroPairing(w.to_string()));
        }
    }
    Ok(xi)
}

/// Bareiss fraction-free determinant.
fn bigint_det(mat: &[Vec<BigInt>]) -> BigInt {
    let n = mat.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = mat.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for i in 0..n {
        if m[i][i].is_zero() {
            match (i + 1..n).find(|&r| !m[r][i].is_zero()) {
                Some(r) => {
                    m.swap(i, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for r in i + 1..n {
            for c in i + 1..n {
                let t = (&m[r][c] * &m[i][i] - &m[r][i] * &m[i][c]) / &prev;
                m[r][c] = t;
            }
            m[r][i] = BigInt::zero();
        }
        prev = m[i][i].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Do the `k` weights form a basis of `Z^k`? True iff `det = ±1`.
pub fn is_basis(ws: &[Weight]) -> Result<bool> {
    let k = ws.first().ok_or(Error::EmptyInput("weight list"))?.rank();
    if ws.len() != k {
        return Err(Error::SizeMismatch(ws.len(), k));
    }
    let mat: Vec<Vec<BigInt>> = ws.iter().map(to_big).collect();
    Ok(bigint_det(&mat).abs().is_one())
}

/// Rank over `Q` of a list of weights.
#[allow(clippy::needless_range_loop)] // row ops mutate one row from another
pub fn rank_of(ws: &[Weight]) -> usize {
    if ws.is_empty() {
        return 0;
    }
    let cols = ws[0].rank();
    let mut rows: Vec<Vec<BigRational>> = ws
        .iter()
        .map(|w| w.entries().iter().map(|&x| BigRational::from(BigInt::from(x))).collect())
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        if let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) {
            rows.swap(rank, p);
            let piv = rows[rank][col].clone();
            for r in 0..rows.len() {
                if r != rank && !rows[r][col].is_zero() {
                    let f = &rows[r][col] / &piv;
                    for c in col..cols {
                        let t = &rows[r][c] - &f * &rows[rank][c];
                        rows[r][c] = t;
                    }
                }
            }
            rank += 1;
        }
    }
    rank
}

/// A `GL(k, Z)` matrix, stored row-major.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct UniMatrix {
    rows: Vec<Vec<i64>>,
}

impl UniMatrix {
    pub fn identity(k: usize) -> Self {
        UniMatrix {
            rows: (0..k).map(|i| (0..k).map(|j| i64::from(i == j)).collect()).collect(),
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        UniMatrix { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        Weight::new(
            self.rows
                .iter()
                .map(|row| {
                    let s: i128 = row
                        .iter()
                        .zip(w.entries())
                        .map(|(&a, &b)| a as i128 * b as i128)
                        .sum();
                    i64::try_from(s).expect("transformed weight entry fits i64")
                })
                .collect(),
        )
    }

    pub fn det(&self) -> BigInt {
        let mat: Vec<Vec<BigInt>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        bigint_det(&mat)
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }
}

impl fmt::Debug for UniMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

const EXTENSION_RADIUS: i64 = 3;

/// Finds `U` in `GL(k, Z)` with `U * src = dst` for every pair, if one
/// exists.
///
/// When the sources span `Q^k` the map is determined by solving over `Q`
/// and checking integrality and `|det| = 1`. Otherwise the source set is
/// completed with standard basis vectors whose images are enumerated over
/// entries in `[-3, 3]`; the first verified unimodular solution wins.
pub fn find_unimodular_map(pairs: &[(Weight, Weight)]) -> Option<UniMatrix> {
    let k = pairs.first()?.0.rank();
    if pairs.iter().any(|(s, t)| s.rank() != k || t.rank() != k) {
        return None;
    }

    // Independent source columns over Q.
    let mut pivots: Vec<usize> = Vec::new();
    let mut span: Vec<Weight> = Vec::new();
    for (i, (s, _)) in pairs.iter().enumerate() {
        span.push(s.clone());
        if rank_of(&span) == span.len() {
            pivots.push(i);
        } else {
            span.pop();
        }
    }

    if pivots.len() == k {
        let src: Vec<Weight> = pivots.iter().map(|&i| pairs[i].0.clone()).collect();
        let dst: Vec<Weight> = pivots.iter().map(|&i| pairs[i].1.clone()).collect();
        return solve_and_verify(&src, &dst, pairs);
    }

    // Rank deficient: all sources zero means any U works.
    if pivots.is_empty() {
        if pairs.iter().all(|(_, t)| t.is_zero()) {
            return Some(UniMatrix::identity(k));
        }
        return None;
    }

    // Complete the span with standard basis vectors.
    let mut src: Vec<Weight> = pivots.iter().map(|&i| pairs[i].0.clone()).collect();
    let mut added: Vec<usize> = Vec::new();
    for j in 0..k {
        if src.len() == k {
            break;
        }
        let e = Weight::basis(k, j);
        src.push(e.clone());
        if rank_of(&src) == src.len() {
            added.push(j);
        } else {
            src.pop();
        }
    }
    debug_assert_eq!(src.len(), k);

    let base_dst: Vec<Weight> = pivots.iter().map(|&i| pairs[i].1.clone()).collect();
    let mut targets = vec![Weight::zero(k); added.len()];
    enumerate_extensions(&src, &base_dst, pairs, &mut targets, 0)
}

fn enumerate_extensions(
    src: &[Weight],
    base_dst: &[Weight],
    pairs: &[(Weight, Weight)],
    targets: &mut Vec<Weight>,
    depth: usize,
) -> Option<UniMatrix> {
    let k = src[0].rank();
    if depth == targets.len() {
        let mut dst = base_dst.to_vec();
        dst.extend(targets.iter().cloned());
        return solve_and_verify(src, &dst, pairs);
    }
    let mut entries = vec![-EXTENSION_RADIUS; k];
    loop {
        targets[depth] = Weight::new(entries.clone());
        if let Some(u) = enumerate_extensions(src, base_dst, pairs, targets, depth + 1) {
            return Some(u);
        }
        let mut i = 0;
        loop {
            if i == k {
                return None;
            }
            entries[i] += 1;
            if entries[i] <= EXTENSION_RADIUS {
                break;
            }
            entries[i] = -EXTENSION_RADIUS;
            i += 1;
        }
    }
}

/// Solves `U * src_j = dst_j` for a full-rank source set, then verifies
/// integrality, `|det| = 1`, and every original pair.
#[allow(clippy::needless_range_loop)] // row ops mutate one row from another
fn solve_and_verify(
    src: &[Weight],
    dst: &[Weight],
    pairs: &[(Weight, Weight)],
) -> Option<UniMatrix> {
    let k = src.len();
    // U S = D transposes to S^T X = D^T with X = U^T; row r of the
    // augmented system is (src[r] | dst[r]).
    let mut aug: Vec<Vec<BigRational>> = (0..k)
        .map(|r| {
            let mut row: Vec<BigRational> = (0..k)
                .map(|c| BigRational::from(BigInt::from(src[r].entries()[c])))
                .collect();
            row.extend((0..k).map(|c| BigRational::from(BigInt::from(dst[r].entries()[c]))));
            row
        })
        .collect();
    // Gauss-Jordan.
    for col in 0..k {
        let p = (col..k).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, p);
        let piv = aug[col][col].clone();
        for c in col..2 * k {
            let t = &aug[col][c] / &piv;
            aug[col][c] = t;
        }
        for r in 0..k {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in col..2 * k {
                    let t = &aug[r][c] - &f * &aug[col][c];
                    aug[r][c] = t;
                }
            }
        }
    }
    // aug[r][k + c] now holds X[r][c] = U[c][r].
    let mut rows = vec![vec![0i64; k]; k];
    for r in 0..k {
        for c in 0..k {
            let v = &aug[r][k + c];
            if !v.is_integer() {
                return None;
            }
            rows[c][r] = i64::try_from(v.to_integer()).ok()?;
        }
    }
    let u = UniMatrix::from_rows(rows);
    if !u.is_unimodular() {
        return None;
    }
    for (s, t) in pairs {
        if &u.apply(s) != t {
            return None;
        }
    }
    Some(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(entries: &[i64]) -> Weight {
        Weight::new(entries.to_vec())
    }

    #[test]
    fn content_examples() {
        assert_eq!(w(&[2, 4, 6]).content().unwrap(), 2);
        assert_eq!(w(&[1, 0, 0]).content().unwrap(), 1);
        assert_eq!(w(&[0, -3, 0]).content().unwrap(), 3);
        assert_eq!(w(&[0, 0]).content(), Err(Error::ZeroWeight));
    }

    #[test]
    fn canonical_parts_splits_sign_and_content() {
        let (s, p) = w(&[0, -4, -6]).canonical_parts().unwrap();
        assert_eq!(s, -2);
        assert_eq!(p, w(&[0, 2, 3]));
        assert_eq!(p.scaled(s), w(&[0, -4, -6]));
    }

    #[test]
    fn in_sublattice_examples() {
        let gens = [w(&[1, 0, 0]), w(&[0, 1, 0])];
        assert!(in_sublattice(&gens, &w(&[1, 1, 0])));
        assert!(!in_sublattice(&gens, &w(&[0, 0, 1])));
        assert!(!in_sublattice(&[w(&[2, 0])], &w(&[1, 0])));
        assert!(in_sublattice(&[], &w(&[0, 0])));
        assert!(!in_sublattice(&[], &w(&[1, 0])));
    }

    #[test]
    fn in_sublattice_invariant_under_generating_set() {
        // Same sublattice, two presentations.
        let g1 = [w(&[2, 0, 2]), w(&[0, 3, 1])];
        let g2 = [w(&[2, 3, 3]), w(&[2, -3, 1]), w(&[0, 3, 1])];
        for a in -4..=4i64 {
            for b in -4..=4i64 {
                for c in -4..=4i64 {
                    let v = w(&[a, b, c]);
                    assert_eq!(in_sublattice(&g1, &v), in_sublattice(&g2, &v), "{v}");
                }
            }
        }
    }

    #[test]
    fn congruence_examples() {
        // Figure-style: weights at two endpoints of an a-labeled edge.
        let a = w(&[1, 0, 0]);
        let list_a = [w(&[1, 0, 0]), w(&[1, 1, 0]), w(&[0, 0, 1])];
        for k in -5..=5 {
            let list_b = [w(&[-1, 0, 0]), w(&[0, 1, 0]), w(&[k, 0, 1])];
            assert!(multiset_congruent_mod(&a, &list_a, &list_b).unwrap());
        }
        // Identity bijection.
        assert!(multiset_congruent_mod(&w(&[2, 1, 0]), &list_a, &list_a).unwrap());
        // (1,0) - (0,1) is not a multiple of (1,1).
        assert!(!multiset_congruent_mod(&w(&[1, 1]), &[w(&[0, 1])], &[w(&[1, 0])]).unwrap());
        // Size mismatch errors.
        assert!(multiset_congruent_mod(&a, &list_a, &list_a[..2]).is_err());
    }

    #[test]
    fn congruence_nonprimitive_modulus() {
        // Z^2 / Z(2,0): (1,0) and (-1,0) differ by (2,0), while (0,0) does not.
        let m = w(&[2, 0]);
        assert!(multiset_congruent_mod(&m, &[w(&[1, 0])], &[w(&[-1, 0])]).unwrap());
        assert!(!multiset_congruent_mod(&m, &[w(&[1, 0])], &[w(&[0, 0])]).unwrap());
        assert!(!multiset_congruent_mod(&m, &[w(&[1, 0])], &[w(&[2, 0])]).unwrap());
    }

    #[test]
    fn generic_circle_examples() {
        let labels = [w(&[1, 0]), w(&[1, -1])];
        let xi = generic_circle(&labels).unwrap();
        assert_eq!(xi, w(&[1, 3]));
        assert_eq!(labels[0].dot(&xi), 1);
        assert_eq!(labels[1].dot(&xi), -2);

        let labels3 = [w(&[2, -1, 0]), w(&[0, 2, -2]), w(&[1, 1, 1])];
        let xi = generic_circle(&labels3).unwrap();
        assert_eq!(xi, w(&[1, 5, 25]));
        for l in &labels3 {
            assert_ne!(l.dot(&xi), 0);
        }
        assert!(generic_circle(&[]).is_err());
        assert!(generic_circle(&[w(&[0, 0])]).is_err());
    }

    #[test]
    fn is_basis_examples() {
        assert!(is_basis(&[w(&[1, 0, 0]), w(&[1, 1, 0]), w(&[0, 0, 1])]).unwrap());
        assert!(!is_basis(&[w(&[2, 0]), w(&[0, 1])]).unwrap());
        assert!(is_basis(&[w(&[1, 0, 0]), w(&[1, 1, 0]), w(&[0, 0, 1])]).unwrap());
        assert!(is_basis(&[w(&[1, 0]), w(&[0, 1])]).unwrap());
        assert!(matches!(
            is_basis(&[w(&[1, 0, 0])]),
            Err(Error::SizeMismatch(1, 3))
        ));
    }

    #[test]
    fn unimodular_map_identity_and_permutation() {
        let e1 = w(&[1, 0, 0]);
        let e2 = w(&[0, 1, 0]);
        let e3 = w(&[0, 0, 1]);
        let id = find_unimodular_map(&[
            (e1.clone(), e1.clone()),
            (e2.clone(), e2.clone()),
            (e3.clone(), e3.clone()),
        ])
        .unwrap();
        assert_eq!(id, UniMatrix::identity(3));

        let perm = find_unimodular_map(&[
            (e1.clone(), e2.clone()),
            (e2.clone(), e1.clone()),
            (e3.clone(), e3.clone()),
        ])
        .unwrap();
        assert_eq!(perm.det(), BigInt::from(-1));
        assert_eq!(perm.apply(&e1), e2);
    }

    #[test]
    fn unimodular_map_basis_substitution() {
        // (a2-a1, a3-a2, a1) -> (a, b, c) with both triples the standard basis.
        let e1 = w(&[1, 0, 0]);
        let e2 = w(&[0, 1, 0]);
        let e3 = w(&[0, 0, 1]);
        let u = find_unimodular_map(&[
            (e2.sub(&e1), e1.clone()),
            (e3.sub(&e2), e2.clone()),
            (e1.clone(), e3.clone()),
        ])
        .unwrap();
        assert!(u.is_unimodular());
        assert_eq!(u.apply(&e2.sub(&e1)), e1);
        assert_eq!(u.apply(&e3.sub(&e2)), e2);
        assert_eq!(u.apply(&e1), e3);
    }

    #[test]
    fn unimodular_map_absence_and_rank_deficiency() {
        // (2,0) cannot map to (1,0) under GL(2,Z): content is preserved.
        assert!(find_unimodular_map(&[(w(&[2, 0]), w(&[1, 0]))]).is_none());
        // Rank-deficient source: e1 -> e2 extends to some unimodular map.
        let u = find_unimodular_map(&[(w(&[1, 0]), w(&[0, 1]))]).unwrap();
        assert!(u.is_unimodular());
        assert_eq!(u.apply(&w(&[1, 0])), w(&[0, 1]));
        // Inconsistent dependent pair.
        assert!(find_unimodular_map(&[
            (w(&[1, 0]), w(&[0, 1])),
            (w(&[2, 0]), w(&[1, 1])),
        ])
        .is_none());
    }

    #[test]
    fn quotient_map_respects_scaling() {
        let m = QuotientMap::new(&w(&[3, 6])).unwrap();
        // x and x + (3,6) share a residue.
        for a in -3..=3i64 {
            for b in -3..=3i64 {
                let x = w(&[a, b]);
                assert_eq!(m.residue(&x), m.residue(&x.add(&w(&[3, 6]))));
                assert_eq!(m.residue(&x), m.residue(&x.sub(&w(&[3, 6]))));
            }
        }
        // but (1,2) (content part) is not congruent to 0 mod (3,6).
        assert_ne!(m.residue(&w(&[1, 2])), m.residue(&w(&[0, 0])));
    }
}
