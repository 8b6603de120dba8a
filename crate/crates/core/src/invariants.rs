//! Chern numbers via localization over the fixed points, the chi_y genus
//! by counting negative weight pairings against a circle direction, the
//! genera derived from it, and the dimension-three cross-check that
//! recovers chi_y from `c1 c2` and `c3`.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::{generic_circle_for, LabeledGraph, ValidationLevel};
use crate::lattice::Weight;
use crate::symbolic::{
    add_fractions, evaluate_at, extract_constant, poly_elementary_symmetric, FactoredRational,
    LinearForm, MultiPoly,
};
use crate::{Error, Result};

/// A partition of the half-dimension selecting the Chern monomial
/// `c_{i1} ... c_{im}`; parts are kept nonincreasing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ChernPartition(Vec<u32>);

impl ChernPartition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::EmptyPartitionPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(ChernPartition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Deterministic key such as `c1^3`, `c1c2`, `c3`.
    ///
    /// Repeated parts are grouped with an exponent; distinct parts are
    /// printed in increasing order, matching the usual way the monomials
    /// are written.
    pub fn label(&self) -> String {
        let mut runs: BTreeMap<u32, usize> = BTreeMap::new();
        for &p in &self.0 {
            *runs.entry(p).or_insert(0) += 1;
        }
        let mut out = String::new();
        for (p, count) in runs {
            out.push_str(&format!("c{p}"));
            if count > 1 {
                out.push_str(&format!("^{count}"));
            }
        }
        out
    }

    /// All partitions of `n`, each a valid Chern monomial selector.
    pub fn all_of_degree(n: u32) -> Vec<ChernPartition> {
        partitions_of(n).into_iter().map(ChernPartition).collect()
    }
}

/// All nonincreasing positive integer sequences summing to `d` (the empty
/// sequence for `d = 0`).
pub(crate) fn partitions_of(d: u32) -> Vec<Vec<u32>> {
    fn go(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        let top = remaining.min(max);
        for next in (1..=top).rev() {
            prefix.push(next);
            go(remaining - next, next, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d.max(1), &mut Vec::new(), &mut out);
    out
}

/// The localization sum `sum_v prod_j sigma_{p_j}(weights at v) / prod
/// (weights at v)` as a single normalized fraction. Shared by the Chern
/// number operations and the validity checker.
pub(crate) fn localization_sum(g: &LabeledGraph, parts: &[u32]) -> Result<FactoredRational> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyInput("graph has no vertices"));
    }
    let mut terms = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        let ws = g.weights_at_index(v);
        let forms: Vec<LinearForm> = ws
            .iter()
            .map(|w| LinearForm::new(w.clone()))
            .collect::<Result<_>>()?;
        let mut num = MultiPoly::one(g.rank());
        for &p in parts {
            num = num.mul(&poly_elementary_symmetric(&forms, p as usize)?);
        }
        terms.push(FactoredRational::from_parts(num, &ws)?);
    }
    add_fractions(&terms)
}

/// Exact Chern number for a top-degree partition. The graph must pass the
/// congruence (gkm) level; the partition degree must equal `half_dim`.
pub fn chern_number(g: &LabeledGraph, p: &ChernPartition) -> Result<BigRational> {
    g.validate(ValidationLevel::Gkm).require()?;
    if p.degree() != g.half_dim() as u32 {
        return Err(Error::PartitionDegree {
            expected: g.half_dim() as u32,
            got: p.degree(),
        });
    }
    extract_constant(&localization_sum(g, p.parts())?)
}

/// Localization push-forward of a sigma-monomial of degree `d <= half_dim`:
/// the constant for `d = half_dim`, and exact zero for `d` below it (a
/// nonzero value there means the graph is invalid).
///
/// Only the structural level is required here: this operation is exactly
/// the tool for exposing an invalid labeling, so it must run on graphs the
/// congruence level rejects.
pub fn pushforward_monomial(g: &LabeledGraph, parts: &[u32]) -> Result<BigRational> {
    g.validate(ValidationLevel::Multigraph).require()?;
    let d: u32 = parts.iter().sum();
    let n = g.half_dim() as u32;
    if d > n {
        return Err(Error::PartitionDegree { expected: n, got: d });
    }
    let sum = localization_sum(g, parts)?;
    if d == n {
        return extract_constant(&sum);
    }
    if sum.num().is_zero() {
        Ok(BigRational::zero())
    } else {
        Err(Error::DegreeVanishingViolated {
            degree: d,
            value: format!("{:?}", sum.num()),
        })
    }
}

/// Coefficients `(a_0, ..., a_n)` of `chi_y = sum a_i (-y)^i`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GenusPolynomial {
    coeffs: Vec<i64>,
}

impl GenusPolynomial {
    pub fn new(coeffs: Vec<i64>) -> Self {
        GenusPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_palindromic(&self) -> bool {
        let rev: Vec<i64> = self.coeffs.iter().rev().copied().collect();
        rev == self.coeffs
    }

    pub fn total(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn reversed(&self) -> GenusPolynomial {
        GenusPolynomial { coeffs: self.coeffs.iter().rev().copied().collect() }
    }
}

fn count_signs(g: &LabeledGraph, xi: &Weight, positive: bool) -> Result<GenusPolynomial> {
    let n = g.half_dim();
    for e in g.edges() {
        if e.label.dot(xi) == 0 {
            return Err(Error::ZeroPairing(e.label.to_string()));
        }
    }
    let mut coeffs = vec![0i64; n + 1];
    for v in 0..g.vertex_count() {
        let d = g
            .weights_at_index(v)
            .iter()
            .filter(|w| {
                let p = w.dot(xi);
                if positive {
                    p > 0
                } else {
                    p < 0
                }
            })
            .count();
        coeffs[d] += 1;
    }
    Ok(GenusPolynomial::new(coeffs))
}

/// chi_y by the fixed-point count: `a_i` is the number of vertices with
/// exactly `i` weights pairing negatively with the circle `xi` (default: a
/// generic circle for all labels). Errors if `xi` pairs to zero with any
/// edge label.
pub fn chi_y_kosniowski(g: &LabeledGraph, xi: Option<&Weight>) -> Result<GenusPolynomial> {
    match xi {
        Some(xi) => count_signs(g, xi, false),
        None => count_signs(g, &generic_circle_for(g)?, false),
    }
}

/// Same count with positive pairings; agrees with the negative count for
/// any graph satisfying the closure of weights under negation.
pub fn chi_y_kosniowski_dplus(g: &LabeledGraph, xi: Option<&Weight>) -> Result<GenusPolynomial> {
    match xi {
        Some(xi) => count_signs(g, xi, true),
        None => count_signs(g, &generic_circle_for(g)?, true),
    }
}

fn as_integer(q: &BigRational, what: &str) -> Result<i64> {
    if !q.is_integer() {
        return Err(Error::NonIntegralGenus(format!("{what} = {q}")));
    }
    i64::try_from(q.to_integer()).map_err(|_| Error::Overflow("genus coefficient"))
}

/// chi_y from Chern numbers in dimension three: `a0 = a3 = c1c2/24` and
/// `a1 = a2 = -(c1c2 - 12 c3)/24`. Errors when the graph is not
/// torus-manifold valid with `half_dim = 3` or a coefficient is not an
/// integer.
pub fn chi_y_from_chern(g: &LabeledGraph) -> Result<GenusPolynomial> {
    if g.half_dim() != 3 {
        return Err(Error::Unsupported(format!(
            "chi_y_from_chern needs half_dim 3, got {}",
            g.half_dim()
        )));
    }
    g.validate(ValidationLevel::TorusManifold).require()?;
    let c1c2 = chern_number(g, &ChernPartition::new(vec![2, 1])?)?;
    let c3 = chern_number(g, &ChernPartition::new(vec![3])?)?;
    let twenty_four = BigRational::from(BigInt::from(24));
    let twelve = BigRational::from(BigInt::from(12));
    let a0 = as_integer(&(&c1c2 / &twenty_four), "c1c2/24")?;
    let a1 = as_integer(&(-(&c1c2 - &twelve * &c3) / &twenty_four), "-(c1c2-12c3)/24")?;
    Ok(GenusPolynomial::new(vec![a0, a1, a1, a0]))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DerivedGenera {
    pub euler: i64,
    pub todd: i64,
    pub signature: i64,
}

/// Euler number (y = -1), Todd genus (y = 0), signature (y = 1).
pub fn derived_genera(chi: &GenusPolynomial) -> DerivedGenera {
    let euler = chi.total();
    let todd = chi.coeffs().first().copied().unwrap_or(0);
    let signature = chi
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, &a)| if i % 2 == 0 { a } else { -a })
        .sum();
    DerivedGenera { euler, todd, signature }
}

/// chi_y through the fixed components of the circle `xi`: edges whose
/// labels pair to zero with `xi` form the isotropy subgraph; each component
/// `F` contributes `(-y)^{d(-,F)} chi_y(F)`, with `d(-,F)` the count of
/// negatively-pairing normal weights at any vertex of `F` (it must be
/// constant across the component).
pub fn kosniowski_fibered(g: &LabeledGraph, xi: &Weight) -> Result<GenusPolynomial> {
    let n = g.half_dim();
    let comps = g.components_of_filtered(|e| e.label.dot(xi) == 0)?;
    let mut coeffs = vec![0i64; n + 1];
    for comp in comps {
        let mut shift: Option<usize> = None;
        for v in comp.vertex_names() {
            let d = g
                .weights_at(v)?
                .iter()
                .filter(|w| w.dot(xi) < 0)
                .count();
            match shift {
                None => shift = Some(d),
                Some(existing) if existing == d => {}
                Some(_) => return Err(Error::InconsistentNormalData(v.clone())),
            }
        }
        let shift = shift.unwrap_or(0);
        let chi = if comp.edges().is_empty() {
            GenusPolynomial::new(vec![1])
        } else {
            chi_y_kosniowski(&comp, None)?
        };
        for (i, &a) in chi.coeffs().iter().enumerate() {
            coeffs[shift + i] += a;
        }
    }
    Ok(GenusPolynomial::new(coeffs))
}

/// Invariant report, the JSON document emitted by the command-line front
/// end. Chern numbers are serialized as strings: they outgrow 64 bits.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InvariantReport {
    pub graph_id: String,
    pub euler: i64,
    pub todd: i64,
    pub signature: i64,
    pub chi_y: Vec<i64>,
    pub chern_numbers: BTreeMap<String, String>,
    pub certified: bool,
}

fn rational_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        q.to_string()
    }
}

/// Fast-mode Chern number: exact evaluation of the localization sum at
/// three random integer points (fixed seed, so reports stay reproducible),
/// requiring agreement. Not certified; the symbolic route is the default.
fn chern_number_sampled(g: &LabeledGraph, p: &ChernPartition) -> Result<BigRational> {
    g.validate(ValidationLevel::Gkm).require()?;
    if p.degree() != g.half_dim() as u32 {
        return Err(Error::PartitionDegree {
            expected: g.half_dim() as u32,
            got: p.degree(),
        });
    }
    let sum = localization_sum(g, p.parts())?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b6f736e);
    let mut values = Vec::new();
    let mut attempts = 0;
    while values.len() < 3 {
        attempts += 1;
        if attempts > 1000 {
            return Err(Error::Unsupported(
                "could not find nonvanishing sample points".into(),
            ));
        }
        let point: Vec<BigRational> = (0..g.rank())
            .map(|_| BigRational::from(BigInt::from(rng.gen_range(-1000i64..=1000))))
            .collect();
        match evaluate_at(&sum, &point) {
            Ok(v) => values.push(v),
            Err(Error::VanishingDenominator(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    if values[0] == values[1] && values[1] == values[2] {
        Ok(values[0].clone())
    } else {
        Err(Error::NotAConstant)
    }
}

/// Builds the full invariant report: chi_y by the generic-circle count (or
/// `xi` when given), derived genera, and every top-degree Chern number.
///
/// Integrality of the Chern numbers is asserted at the torus-manifold
/// level only; graphs below it (rank under half-dimension) report
/// rationals as-is.
pub fn invariant_report(
    g: &LabeledGraph,
    fast: bool,
    xi: Option<&Weight>,
) -> Result<InvariantReport> {
    let chi = chi_y_kosniowski(g, xi)?;
    let genera = derived_genera(&chi);
    let torus = g.validate(ValidationLevel::TorusManifold).ok();
    let mut chern_numbers = BTreeMap::new();
    for p in ChernPartition::all_of_degree(g.half_dim() as u32) {
        let value = if fast {
            chern_number_sampled(g, &p)?
        } else {
            chern_number(g, &p)?
        };
        if torus && !value.is_integer() {
            return Err(Error::NonIntegralGenus(format!("{} = {value}", p.label())));
        }
        chern_numbers.insert(p.label(), rational_string(&value));
    }
    Ok(InvariantReport {
        graph_id: g.id(),
        euler: genera.euler,
        todd: genera.todd,
        signature: genera.signature,
        chi_y: chi.coeffs().to_vec(),
        chern_numbers,
        certified: !fast,
    })
}

/// Exact constancy cross-check used by property tests: the symbolic
/// constant must match evaluation at the given number of random points.
pub fn crosscheck_constant(
    g: &LabeledGraph,
    p: &ChernPartition,
    points: usize,
    seed: u64,
) -> Result<bool> {
    let sum = localization_sum(g, p.parts())?;
    let symbolic = extract_constant(&sum)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = 0;
    let mut attempts = 0;
    while seen < points {
        attempts += 1;
        if attempts > 1000 {
            return Err(Error::Unsupported("no valid sample points".into()));
        }
        let point: Vec<BigRational> = (0..g.rank())
            .map(|_| BigRational::from(BigInt::from(rng.gen_range(-500i64..=500))))
            .collect();
        match evaluate_at(&sum, &point) {
            Ok(v) => {
                if v != symbolic {
                    return Ok(false);
                }
                seen += 1;
            }
            Err(Error::VanishingDenominator(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(true)
}
