//! Builders for the concrete graph families: linear projective-space
//! actions, the two six-vertex prism families, and the two four-dimensional
//! building blocks (triangle and twisted square).

use crate::graph::LabeledGraph;
use crate::lattice::{is_basis, rank_of, Weight};
use crate::{Error, Result};

fn name(prefix: &str, i: usize) -> String {
    format!("{prefix}{i}")
}

/// Complete graph on `p0..pn`: edge `p0 -> pi` labeled `a_i`, edge
/// `pi -> pj` (i < j) labeled `a_j - a_i`. With `n` pairwise-distinct
/// weights of rank `k <= n` this is the description of a linear action on
/// projective n-space; `k = n` with a basis gives the standard action.
pub fn projective_space(weights: &[Weight]) -> Result<LabeledGraph> {
    let n = weights.len();
    if n == 0 {
        return Err(Error::EmptyInput("weight list"));
    }
    let k = weights[0].rank();
    for i in 0..n {
        for j in (i + 1)..n {
            if weights[i] == weights[j] {
                return Err(Error::Unsupported(format!(
                    "repeated weight {} in projective space data",
                    weights[i]
                )));
            }
        }
    }
    let vertices: Vec<String> = (0..=n).map(|i| name("p", i)).collect();
    let mut edges = Vec::new();
    for (i, a) in weights.iter().enumerate() {
        edges.push((name("p", 0), name("p", i + 1), a.clone()));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            edges.push((name("p", i + 1), name("p", j + 1), weights[j].sub(&weights[i])));
        }
    }
    LabeledGraph::new(k, n, vertices, edges)
}

/// Standard projective n-space: weights are the standard basis of `Z^n`.
pub fn cpn_standard(n: usize) -> LabeledGraph {
    let weights: Vec<Weight> = (0..n).map(|i| Weight::basis(n, i)).collect();
    projective_space(&weights).expect("standard basis weights are distinct")
}

/// The first six-vertex family: two triangles labeled `a, b, a+b` joined by
/// rungs `p1 -> p6` with `c + k a`, `p2 -> p5` with `c`, and `p3 -> p4`
/// with `c + k(a+b)`.
pub fn m1_in_basis(k: i64, a: &Weight, b: &Weight, c: &Weight) -> Result<LabeledGraph> {
    if !is_basis(&[a.clone(), b.clone(), c.clone()])? {
        return Err(Error::NotABasis);
    }
    let ab = a.add(b);
    let vertices: Vec<String> = (1..=6).map(|i| name("p", i)).collect();
    let edges = vec![
        ("p2".into(), "p1".into(), a.clone()),
        ("p2".into(), "p3".into(), ab.clone()),
        ("p1".into(), "p3".into(), b.clone()),
        ("p5".into(), "p6".into(), a.clone()),
        ("p5".into(), "p4".into(), ab.clone()),
        ("p6".into(), "p4".into(), b.clone()),
        ("p1".into(), "p6".into(), c.add(&a.scaled(k))),
        ("p2".into(), "p5".into(), c.clone()),
        ("p3".into(), "p4".into(), c.add(&ab.scaled(k))),
    ];
    LabeledGraph::new(3, 3, vertices, edges)
}

pub fn m1(k: i64) -> LabeledGraph {
    m1_in_basis(k, &Weight::basis(3, 0), &Weight::basis(3, 1), &Weight::basis(3, 2))
        .expect("standard basis")
}

/// The second six-vertex family: left triangle `a, b, a+b`, right triangle
/// `a + kc, b + lc, a+b+(k+l)c`, all three rungs labeled `c`.
pub fn m2_in_basis(k: i64, l: i64, a: &Weight, b: &Weight, c: &Weight) -> Result<LabeledGraph> {
    if !is_basis(&[a.clone(), b.clone(), c.clone()])? {
        return Err(Error::NotABasis);
    }
    let ab = a.add(b);
    let vertices: Vec<String> = (1..=6).map(|i| name("p", i)).collect();
    let edges = vec![
        ("p2".into(), "p1".into(), a.clone()),
        ("p2".into(), "p3".into(), ab.clone()),
        ("p1".into(), "p3".into(), b.clone()),
        ("p5".into(), "p6".into(), a.add(&c.scaled(k))),
        ("p5".into(), "p4".into(), ab.add(&c.scaled(k + l))),
        ("p6".into(), "p4".into(), b.add(&c.scaled(l))),
        ("p1".into(), "p6".into(), c.clone()),
        ("p2".into(), "p5".into(), c.clone()),
        ("p3".into(), "p4".into(), c.clone()),
    ];
    LabeledGraph::new(3, 3, vertices, edges)
}

pub fn m2(k: i64, l: i64) -> LabeledGraph {
    m2_in_basis(k, l, &Weight::basis(3, 0), &Weight::basis(3, 1), &Weight::basis(3, 2))
        .expect("standard basis")
}

/// Three fixed points in dimension four: `p1 -> p2` labeled `a`,
/// `p2 -> p3` labeled `b`, `p1 -> p3` labeled `a+b`.
pub fn triangle4(a: &Weight, b: &Weight) -> Result<LabeledGraph> {
    if rank_of(&[a.clone(), b.clone()]) != 2 {
        return Err(Error::DependentGenerators);
    }
    LabeledGraph::new(
        2,
        2,
        (1..=3).map(|i| name("p", i)).collect(),
        vec![
            ("p1".into(), "p2".into(), a.clone()),
            ("p2".into(), "p3".into(), b.clone()),
            ("p1".into(), "p3".into(), a.add(b)),
        ],
    )
}

/// Four fixed points in dimension four, the twisted square: `p1 -> p2` and
/// `p3 -> p4` labeled `a`, `p1 -> p3` labeled `b`, `p2 -> p4` labeled
/// `b + m a`.
pub fn square4(a: &Weight, b: &Weight, m: i64) -> Result<LabeledGraph> {
    if rank_of(&[a.clone(), b.clone()]) != 2 {
        return Err(Error::DependentGenerators);
    }
    LabeledGraph::new(
        2,
        2,
        (1..=4).map(|i| name("p", i)).collect(),
        vec![
            ("p1".into(), "p2".into(), a.clone()),
            ("p3".into(), "p4".into(), a.clone()),
            ("p1".into(), "p3".into(), b.clone()),
            ("p2".into(), "p4".into(), b.add(&a.scaled(m))),
        ],
    )
}
