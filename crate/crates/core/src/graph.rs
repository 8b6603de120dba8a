//! The labeled directed multigraph data model, the validity checker, the
//! isotropy-subgraph and blow-up operations, and isomorphism up to a
//! unimodular change of basis.
//!
//! A graph has `rank` (torus dimension k), `half_dim` (n for a 2n-manifold),
//! named vertices standing for fixed points, and directed edges labeled by
//! nonzero weights in `Z^k`. Edge direction is a gauge choice: reversing an
//! edge and negating its label describes the same manifold, so every
//! comparison works on the sign-canonical normal form.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::lattice::{
    self, find_unimodular_map, in_sublattice, is_basis, multiset_congruent_mod, rank_of, UniMatrix,
    Weight,
};
use crate::{Error, Result};

/// A directed labeled edge, stored with vertex indices into the graph's
/// vertex list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: Weight,
}

/// Wire format: a single JSON document with named vertices.
#[derive(Serialize, Deserialize, Clone)]
struct GraphDoc {
    rank: usize,
    half_dim: usize,
    vertices: Vec<String>,
    edges: Vec<EdgeDoc>,
}

#[derive(Serialize, Deserialize, Clone)]
struct EdgeDoc {
    from: String,
    to: String,
    label: Vec<i64>,
}

/// Labeled directed multigraph describing a torus action.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphDoc", into = "GraphDoc")]
pub struct LabeledGraph {
    rank: usize,
    half_dim: usize,
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

impl TryFrom<GraphDoc> for LabeledGraph {
    type Error = Error;

    fn try_from(doc: GraphDoc) -> Result<Self> {
        let edges = doc
            .edges
            .into_iter()
            .map(|e| (e.from, e.to, Weight::new(e.label)))
            .collect();
        LabeledGraph::new(doc.rank, doc.half_dim, doc.vertices, edges)
    }
}

impl From<LabeledGraph> for GraphDoc {
    fn from(g: LabeledGraph) -> GraphDoc {
        GraphDoc {
            rank: g.rank,
            half_dim: g.half_dim,
            vertices: g.vertices.clone(),
            edges: g
                .edges
                .iter()
                .map(|e| EdgeDoc {
                    from: g.vertices[e.from].clone(),
                    to: g.vertices[e.to].clone(),
                    label: e.label.entries().to_vec(),
                })
                .collect(),
        }
    }
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graph rank={} half_dim={}", self.rank, self.half_dim)?;
        for e in &self.edges {
            writeln!(
                f,
                "  {} -> {}  {}",
                self.vertices[e.from], self.vertices[e.to], e.label
            )?;
        }
        Ok(())
    }
}

impl LabeledGraph {
    /// Builds a graph from named edges, checking only structural schema
    /// facts (known vertices, label length, unique names). Semantic axioms
    /// are the business of [`LabeledGraph::validate`].
    pub fn new(
        rank: usize,
        half_dim: usize,
        vertices: Vec<String>,
        edges: Vec<(String, String, Weight)>,
    ) -> Result<Self> {
        let mut index: BTreeMap<&str, usize> = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.as_str(), i).is_some() {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let mut built = Vec::with_capacity(edges.len());
        for (from, to, label) in edges {
            let &f = index
                .get(from.as_str())
                .ok_or_else(|| Error::UnknownVertex(from.clone()))?;
            let &t = index
                .get(to.as_str())
                .ok_or_else(|| Error::UnknownVertex(to.clone()))?;
            if label.rank() != rank {
                return Err(Error::LabelRank { expected: rank, got: label.rank() });
            }
            built.push(Edge { from: f, to: t, label });
        }
        Ok(LabeledGraph { rank, half_dim, vertices, edges: built })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn half_dim(&self) -> usize {
        self.half_dim
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn all_labels(&self) -> Vec<Weight> {
        self.edges.iter().map(|e| e.label.clone()).collect()
    }

    /// Multiset of weights at a vertex: outgoing labels plus negated
    /// incoming labels.
    pub fn weights_at(&self, v: &str) -> Result<Vec<Weight>> {
        Ok(self.weights_at_index(self.vertex_index(v)?))
    }

    pub fn weights_at_index(&self, v: usize) -> Vec<Weight> {
        let mut out = Vec::new();
        for e in &self.edges {
            if e.from == v {
                out.push(e.label.clone());
            }
            if e.to == v {
                out.push(e.label.neg());
            }
        }
        out
    }

    pub fn valence(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| e.from == v || e.to == v)
            .count()
    }

    /// Re-orients every edge so its label is sign-canonical (first nonzero
    /// entry positive). Describes the same manifold; idempotent.
    pub fn reverse_edge_normalize(&self) -> LabeledGraph {
        let mut g = self.clone();
        for e in g.edges.iter_mut() {
            if !e.label.is_sign_canonical() {
                std::mem::swap(&mut e.from, &mut e.to);
                e.label = e.label.neg();
            }
        }
        g
    }

    /// Content hash of the serialized document; stable across runs.
    pub fn id(&self) -> String {
        let json = serde_json::to_string(self).expect("graph serializes");
        let digest = Sha256::digest(json.as_bytes());
        let mut s = String::with_capacity(16);
        for b in digest.iter().take(8) {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph G {\n");
        for v in &self.vertices {
            out.push_str(&format!("  \"{v}\";\n"));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                self.vertices[e.from], self.vertices[e.to], e.label
            ));
        }
        out.push_str("}\n");
        out
    }

    /// Keeps exactly the edges whose label lies in the sublattice generated
    /// by `gens` and returns the connected components of the result, each a
    /// graph on its own vertex subset (isolated vertices become singleton
    /// components). A component's `half_dim` is its valence.
    pub fn isotropy_subgraph(&self, gens: &[Weight]) -> Result<Vec<LabeledGraph>> {
        if gens.is_empty() {
            return Err(Error::EmptyInput("generator list"));
        }
        if rank_of(gens) != gens.len() {
            return Err(Error::DependentGenerators);
        }
        self.components_of_filtered(|e| in_sublattice(gens, &e.label))
    }

    /// Shared machinery: keep the edges selected by `keep`, split into
    /// connected components over the full vertex set.
    pub(crate) fn components_of_filtered(
        &self,
        keep: impl Fn(&Edge) -> bool,
    ) -> Result<Vec<LabeledGraph>> {
        let kept: Vec<&Edge> = self.edges.iter().filter(|e| keep(e)).collect();
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &kept {
            let (a, b) = (find(&mut parent, e.from), find(&mut parent, e.to));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..self.vertices.len() {
            let root = find(&mut parent, v);
            groups.entry(root).or_default().push(v);
        }
        let mut out = Vec::new();
        for (_, members) in groups {
            let name_of: Vec<String> = members.iter().map(|&v| self.vertices[v].clone()).collect();
            let in_group = |v: usize| members.binary_search(&v).is_ok();
            let edges: Vec<(String, String, Weight)> = kept
                .iter()
                .filter(|e| in_group(e.from))
                .map(|e| {
                    (
                        self.vertices[e.from].clone(),
                        self.vertices[e.to].clone(),
                        e.label.clone(),
                    )
                })
                .collect();
            let mut comp = LabeledGraph::new(self.rank, 0, name_of, edges)?;
            comp.half_dim = (0..comp.vertices.len())
                .map(|v| comp.valence(v))
                .max()
                .unwrap_or(0);
            out.push(comp);
        }
        Ok(out)
    }

    /// Replaces `v` (weights `a_1..a_n`, incoming edges reversed and negated
    /// first) by `n` vertices `v_1..v_n`: internal edges `v_i -> v_j` (i<j)
    /// labeled `a_j - a_i`, and the former edge carrying `a_i` reattached to
    /// `v_i` with the same label and direction.
    pub fn blow_up(&self, v: &str) -> Result<LabeledGraph> {
        if self.rank != self.half_dim {
            return Err(Error::BlowupRank);
        }
        let vi = self.vertex_index(v)?;
        // Incident edges, oriented outward.
        let mut star: Vec<(Weight, usize)> = Vec::new();
        for e in &self.edges {
            if e.from == vi && e.to == vi {
                return Err(Error::Unsupported(format!("self-loop at `{v}`")));
            }
            if e.from == vi {
                star.push((e.label.clone(), e.to));
            } else if e.to == vi {
                star.push((e.label.neg(), e.from));
            }
        }
        for i in 0..star.len() {
            for j in (i + 1)..star.len() {
                if star[i].0 == star[j].0 {
                    return Err(Error::DegenerateBlowup(v.to_string()));
                }
            }
        }
        let mut names: Vec<String> = Vec::with_capacity(star.len());
        for i in 1..=star.len() {
            let mut name = format!("{v}_{i}");
            while self.vertices.contains(&name) || names.contains(&name) {
                name.push('\'');
            }
            names.push(name);
        }
        let mut vertices: Vec<String> = self
            .vertices
            .iter()
            .filter(|x| x.as_str() != v)
            .cloned()
            .collect();
        vertices.extend(names.iter().cloned());

        let mut edges: Vec<(String, String, Weight)> = self
            .edges
            .iter()
            .filter(|e| e.from != vi && e.to != vi)
            .map(|e| {
                (
                    self.vertices[e.from].clone(),
                    self.vertices[e.to].clone(),
                    e.label.clone(),
                )
            })
            .collect();
        for (i, (a, other)) in star.iter().enumerate() {
            edges.push((names[i].clone(), self.vertices[*other].clone(), a.clone()));
        }
        for i in 0..star.len() {
            for j in (i + 1)..star.len() {
                edges.push((names[i].clone(), names[j].clone(), star[j].0.sub(&star[i].0)));
            }
        }
        LabeledGraph::new(self.rank, self.half_dim, vertices, edges)
    }

    /// Number of edges between an unordered vertex pair.
    fn bundle_size(&self, a: usize, b: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| (e.from == a && e.to == b) || (e.from == b && e.to == a))
            .count()
    }

    /// Searches for a vertex bijection and a `GL(k, Z)` matrix carrying
    /// every edge label of `self` onto the matching label of `other`, with
    /// edge directions compared up to the reverse-and-negate gauge.
    pub fn isomorphic_up_to_basis(
        &self,
        other: &LabeledGraph,
    ) -> Option<(BTreeMap<String, String>, UniMatrix)> {
        if self.rank != other.rank
            || self.half_dim != other.half_dim
            || self.vertices.len() != other.vertices.len()
            || self.edges.len() != other.edges.len()
        {
            return None;
        }
        let inv1: Vec<VertexInvariant> = (0..self.vertices.len())
            .map(|v| vertex_invariant(self, v))
            .collect();
        let inv2: Vec<VertexInvariant> = (0..other.vertices.len())
            .map(|v| vertex_invariant(other, v))
            .collect();
        {
            let mut s1 = inv1.clone();
            let mut s2 = inv2.clone();
            s1.sort();
            s2.sort();
            if s1 != s2 {
                return None;
            }
        }
        let mut assignment: Vec<Option<usize>> = vec![None; self.vertices.len()];
        let mut used = vec![false; other.vertices.len()];
        self.match_vertices(other, &inv1, &inv2, &mut assignment, &mut used, 0)
            .map(|(phi, u)| {
                let map = phi
                    .iter()
                    .enumerate()
                    .map(|(i, &j)| (self.vertices[i].clone(), other.vertices[j].clone()))
                    .collect();
                (map, u)
            })
    }

    fn match_vertices(
        &self,
        other: &LabeledGraph,
        inv1: &[VertexInvariant],
        inv2: &[VertexInvariant],
        assignment: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        depth: usize,
    ) -> Option<(Vec<usize>, UniMatrix)> {
        if depth == self.vertices.len() {
            let phi: Vec<usize> = assignment.iter().map(|a| a.unwrap()).collect();
            return self.try_label_map(other, &phi).map(|u| (phi, u));
        }
        for cand in 0..other.vertices.len() {
            if used[cand] || inv1[depth] != inv2[cand] {
                continue;
            }
            let ok = (0..depth).all(|earlier| {
                let img = assignment[earlier].unwrap();
                self.bundle_size(earlier, depth) == other.bundle_size(img, cand)
            });
            if !ok {
                continue;
            }
            assignment[depth] = Some(cand);
            used[cand] = true;
            if let Some(hit) = self.match_vertices(other, inv1, inv2, assignment, used, depth + 1)
            {
                return Some(hit);
            }
            assignment[depth] = None;
            used[cand] = false;
        }
        None
    }

    /// Given a vertex bijection, matches edge bundles and solves for the
    /// unimodular label map.
    fn try_label_map(&self, other: &LabeledGraph, phi: &[usize]) -> Option<UniMatrix> {
        let mut groups: BTreeMap<(usize, usize), (Vec<usize>, Vec<usize>)> = BTreeMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            let (a, b) = (phi[e.from], phi[e.to]);
            let key = (a.min(b), a.max(b));
            groups.entry(key).or_default().0.push(i);
        }
        for (j, e) in other.edges.iter().enumerate() {
            let key = (e.from.min(e.to), e.from.max(e.to));
            {
                let slot = groups.get_mut(&key)?;
                slot.1.push(j)
            }
        }
        let groups: Vec<(Vec<usize>, Vec<usize>)> = groups.into_values().collect();
        if groups.iter().any(|(a, b)| a.len() != b.len()) {
            return None;
        }
        self.match_bundles(other, phi, &groups, 0, &mut Vec::new())
    }

    fn match_bundles(
        &self,
        other: &LabeledGraph,
        phi: &[usize],
        groups: &[(Vec<usize>, Vec<usize>)],
        depth: usize,
        pairs: &mut Vec<(Weight, Weight)>,
    ) -> Option<UniMatrix> {
        if depth == groups.len() {
            return find_unimodular_map(pairs);
        }
        let (mine, theirs) = &groups[depth];
        let mut perm: Vec<usize> = (0..theirs.len()).collect();
        loop {
            let before = pairs.len();
            for (slot, &pi) in perm.iter().enumerate() {
                let e1 = &self.edges[mine[slot]];
                let e2 = &other.edges[theirs[pi]];
                let target = if (phi[e1.from], phi[e1.to]) == (e2.from, e2.to) {
                    e2.label.clone()
                } else {
                    e2.label.neg()
                };
                pairs.push((e1.label.clone(), target));
            }
            if let Some(u) = self.match_bundles(other, phi, groups, depth + 1, pairs) {
                return Some(u);
            }
            pairs.truncate(before);
            if !next_permutation(&mut perm) {
                return None;
            }
        }
    }

    /// Cumulative validity check up to the requested level.
    ///
    /// Structural (multigraph) failures block the deeper checks, which
    /// need nonzero labels and constant valence to even make sense.
    /// Beyond that, violations from every failing level are collected, so
    /// a graph breaking both a congruence and a push-forward constraint
    /// reports both. `achieved` is the highest level passed with no
    /// violations at or below it.
    pub fn validate(&self, level: ValidationLevel) -> ValidationReport {
        let mut violations = self.multigraph_violations();
        let mut achieved = if violations.is_empty() {
            Some(ValidationLevel::Multigraph)
        } else {
            None
        };
        if achieved == Some(ValidationLevel::Multigraph) && level >= ValidationLevel::Gkm {
            let gkm = self.gkm_violations();
            if gkm.is_empty() {
                achieved = Some(ValidationLevel::Gkm);
            }
            violations.extend(gkm);
            if level >= ValidationLevel::TorusManifold {
                let torus = self.torus_violations();
                if torus.is_empty() && achieved == Some(ValidationLevel::Gkm) {
                    achieved = Some(ValidationLevel::TorusManifold);
                }
                violations.extend(torus);
            }
        }
        ValidationReport { requested: level, achieved, violations }
    }

    fn multigraph_violations(&self) -> Vec<Violation> {
        let level = ValidationLevel::Multigraph;
        let mut out = Vec::new();
        if self.rank < 1 {
            out.push(Violation::new(level, "rank must be at least 1".into()));
        }
        if self.half_dim < self.rank {
            out.push(Violation::new(
                level,
                format!("half_dim {} is smaller than rank {}", self.half_dim, self.rank),
            ));
        }
        for e in &self.edges {
            if e.label.is_zero() {
                out.push(Violation::new(
                    level,
                    format!(
                        "zero label on edge {} -> {}",
                        self.vertices[e.from], self.vertices[e.to]
                    ),
                ));
            }
            if e.from == e.to {
                out.push(Violation::new(
                    level,
                    format!("self-loop at vertex {}", self.vertices[e.from]),
                ));
            }
        }
        for v in 0..self.vertices.len() {
            let d = self.valence(v);
            if d != self.half_dim {
                out.push(Violation::new(
                    level,
                    format!(
                        "vertex {} has valence {}, expected {}",
                        self.vertices[v], d, self.half_dim
                    ),
                ));
            }
        }
        out
    }

    // The per-edge congruence regime. Pairwise independence of the weights
    // at a vertex is deliberately NOT required here: legitimate rank < n
    // descriptions (a linear action on projective 3-space under a 2-torus,
    // say) carry parallel weights such as (1,0) and (2,0) at a vertex. At
    // the torus-manifold level independence follows from the basis check.
    fn gkm_violations(&self) -> Vec<Violation> {
        let level = ValidationLevel::Gkm;
        let mut out = Vec::new();
        for e in &self.edges {
            let wa = self.weights_at_index(e.from);
            let wb = self.weights_at_index(e.to);
            match multiset_congruent_mod(&e.label, &wa, &wb) {
                Ok(true) => {}
                _ => out.push(Violation::new(
                    level,
                    format!(
                        "weights at {} and {} are not equal modulo the edge label {}",
                        self.vertices[e.from], self.vertices[e.to], e.label
                    ),
                )),
            }
        }
        out
    }

    fn torus_violations(&self) -> Vec<Violation> {
        let level = ValidationLevel::TorusManifold;
        let mut out = Vec::new();
        if self.rank != self.half_dim {
            out.push(Violation::new(
                level,
                format!(
                    "torus-manifold level requires rank = half_dim, got {} and {}",
                    self.rank, self.half_dim
                ),
            ));
            return out;
        }
        for a in 0..self.vertices.len() {
            for b in (a + 1)..self.vertices.len() {
                if self.bundle_size(a, b) > 1 {
                    out.push(Violation::new(
                        level,
                        format!(
                            "multiple edges between {} and {}",
                            self.vertices[a], self.vertices[b]
                        ),
                    ));
                }
            }
        }
        for v in 0..self.vertices.len() {
            let ws = self.weights_at_index(v);
            if !matches!(is_basis(&ws), Ok(true)) {
                out.push(Violation::new(
                    level,
                    format!(
                        "weights at {} do not form a Z^{} basis",
                        self.vertices[v], self.rank
                    ),
                ));
            }
        }
        if self.vertices.len() < self.half_dim + 1 {
            out.push(Violation::new(
                level,
                format!(
                    "{} vertices, fewer than half_dim + 1 = {}",
                    self.vertices.len(),
                    self.half_dim + 1
                ),
            ));
        }
        // Push-forward degree constraints: every sigma-monomial of total
        // degree below half_dim localizes to exactly zero, and the top
        // Euler-class sum counts the fixed points. These run even when a
        // basis check failed above; the sums only need nonzero labels.
        let n = self.half_dim as u32;
        for d in 0..n {
            for parts in crate::invariants::partitions_of(d) {
                match crate::invariants::localization_sum(self, &parts) {
                    Ok(sum) if sum.num().is_zero() => {}
                    _ => out.push(Violation::new(
                        level,
                        format!("degree-{} pushforward {} is nonzero", d, partition_name(&parts)),
                    )),
                }
            }
        }
        match crate::invariants::localization_sum(self, &[n])
            .and_then(|s| crate::symbolic::extract_constant(&s))
        {
            Ok(v) if v == num::BigRational::from(num::BigInt::from(self.vertices.len() as i64)) => {
            }
            _ => out.push(Violation::new(
                level,
                format!(
                    "top Chern number differs from the vertex count {}",
                    self.vertices.len()
                ),
            )),
        }
        out
    }
}

pub(crate) fn partition_name(parts: &[u32]) -> String {
    if parts.is_empty() {
        return "1".into();
    }
    let mut out = String::new();
    let mut i = 0;
    while i < parts.len() {
        let run = (i..parts.len()).take_while(|&j| parts[j] == parts[i]).count();
        out.push_str(&format!("c{}", parts[i]));
        if run > 1 {
            out.push_str(&format!("^{run}"));
        }
        i += run;
    }
    out
}

type VertexInvariant = (usize, Vec<i64>);

/// Invariant preserved by vertex bijections + unimodular label maps:
/// valence and the sorted contents of the weights there.
fn vertex_invariant(g: &LabeledGraph, v: usize) -> VertexInvariant {
    let ws = g.weights_at_index(v);
    let mut contents: Vec<i64> = ws.iter().map(|w| w.content().unwrap_or(0)).collect();
    contents.sort();
    (ws.len(), contents)
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Cumulative validity levels: plain multigraph axioms, the per-edge
/// congruence regime, and the full torus-manifold regime (rank = half_dim,
/// simple graph, integral bases, vanishing push-forwards).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum ValidationLevel {
    #[serde(rename = "multigraph")]
    Multigraph,
    #[serde(rename = "gkm")]
    Gkm,
    #[serde(rename = "torus")]
    TorusManifold,
}

impl FromStr for ValidationLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "multigraph" => Ok(ValidationLevel::Multigraph),
            "gkm" => Ok(ValidationLevel::Gkm),
            "torus" | "torus-manifold" => Ok(ValidationLevel::TorusManifold),
            other => Err(Error::Unsupported(format!("unknown level `{other}`"))),
        }
    }
}

impl fmt::Display for ValidationLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ValidationLevel::Multigraph => "multigraph",
            ValidationLevel::Gkm => "gkm",
            ValidationLevel::TorusManifold => "torus",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Violation {
    pub level: ValidationLevel,
    pub message: String,
}

impl Violation {
    fn new(level: ValidationLevel, message: String) -> Self {
        Violation { level, message }
    }
}

/// Outcome of [`LabeledGraph::validate`]: the highest level reached and the
/// violations of the first level that failed (empty iff the requested level
/// was achieved).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ValidationReport {
    pub requested: ValidationLevel,
    pub achieved: Option<ValidationLevel>,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// Error adapter for operations whose precondition is a validity level.
    pub fn require(&self) -> Result<()> {
        if self.ok() {
            Ok(())
        } else {
            Err(Error::InvalidGraph {
                level: self.requested.to_string(),
                first: self.violations[0].message.clone(),
            })
        }
    }
}

/// Generic circle for all labels of a graph.
pub fn generic_circle_for(g: &LabeledGraph) -> Result<Weight> {
    lattice::generic_circle(&g.all_labels())
}
