//! Vertex-weighted oriented graphs and their edge ideals.
//!
//! The edge ideal of a weighted oriented graph is generated by
//! `x_i * x_j^{d_j}` for every arc `(x_i, x_j)`. Its irreducible components
//! are read off the strong vertex covers; the Cohen–Macaulay classifier
//! covers forests, graphs with a whisker perfect matching, and acyclic
//! tournaments.

use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

use log::warn;

use crate::decomposition::{Decomposition, IrreducibleIdeal};
use crate::error::{Error, Result};
use crate::ideal::{minimalize, MonomialIdeal};
use crate::monomial::{Monomial, PolyContext};
use crate::Limits;

/// Adjustments made while normalizing a digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DigraphWarning {
    /// A source had weight other than 1 and was reset to 1.
    SourceWeightReset { vertex: usize, weight: u32 },
    /// The vertex has no arcs; it never enters a strong cover.
    IsolatedVertex { vertex: usize },
}

/// A digraph without 2-cycles whose vertices carry positive weights.
///
/// Vertices are the variables of the context, in order. Arcs are kept
/// sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedDigraph {
    ctx: Arc<PolyContext>,
    weights: Vec<u32>,
    arcs: Vec<(usize, usize)>,
    warnings: Vec<DigraphWarning>,
}

impl WeightedDigraph {
    /// Validate and normalize. Sources are forced to weight 1.
    pub fn new(
        ctx: &Arc<PolyContext>,
        weights: Vec<u32>,
        arcs: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let n = ctx.n();
        if weights.len() != n {
            return Err(Error::InvalidDigraph(format!(
                "{} weights for {} vertices",
                weights.len(),
                n
            )));
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidDigraph(format!(
                "vertex {} has nonpositive weight",
                ctx.name(i)
            )));
        }
        let mut set = BTreeSet::new();
        for &(i, j) in &arcs {
            if i >= n || j >= n {
                return Err(Error::InvalidDigraph(format!(
                    "arc ({i}, {j}) out of range"
                )));
            }
            if i == j {
                return Err(Error::InvalidDigraph(format!("loop at {}", ctx.name(i))));
            }
            set.insert((i, j));
        }
        for &(i, j) in &set {
            if set.contains(&(j, i)) {
                return Err(Error::InvalidDigraph(format!(
                    "2-cycle between {} and {}",
                    ctx.name(i),
                    ctx.name(j)
                )));
            }
        }
        let mut d = WeightedDigraph {
            ctx: ctx.clone(),
            weights,
            arcs: set.into_iter().collect(),
            warnings: Vec::new(),
        };
        for v in 0..n {
            if d.degree(v) == 0 {
                warn!("vertex {} is isolated", ctx.name(v));
                d.warnings
                    .push(DigraphWarning::IsolatedVertex { vertex: v });
            } else if d.is_source(v) && d.weights[v] != 1 {
                warn!(
                    "source {} has weight {}; using weight 1",
                    ctx.name(v),
                    d.weights[v]
                );
                d.warnings.push(DigraphWarning::SourceWeightReset {
                    vertex: v,
                    weight: d.weights[v],
                });
                d.weights[v] = 1;
            }
        }
        Ok(d)
    }

    /// Vertices `x1..xn`.
    pub fn with_default_names(weights: Vec<u32>, arcs: Vec<(usize, usize)>) -> Result<Self> {
        let ctx = PolyContext::new(weights.len())?;
        Self::new(&ctx, weights, arcs)
    }

    pub fn context(&self) -> &Arc<PolyContext> {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, v: usize) -> u32 {
        self.weights[v]
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn warnings(&self) -> &[DigraphWarning] {
        &self.warnings
    }

    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        self.arcs.binary_search(&(i, j)).is_ok()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.has_arc(i, j) || self.has_arc(j, i)
    }

    /// Neighbors in the underlying graph.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .arcs
            .iter()
            .filter_map(|&(i, j)| {
                if i == v {
                    Some(j)
                } else if j == v {
                    Some(i)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn in_neighbors(&self, v: usize) -> Vec<usize> {
        self.arcs.iter().filter(|a| a.1 == v).map(|a| a.0).collect()
    }

    pub fn out_neighbors(&self, v: usize) -> Vec<usize> {
        self.arcs.iter().filter(|a| a.0 == v).map(|a| a.1).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.0 == v || a.1 == v).count()
    }

    /// Has out-arcs and no in-arcs.
    pub fn is_source(&self, v: usize) -> bool {
        self.arcs.iter().any(|a| a.0 == v) && !self.arcs.iter().any(|a| a.1 == v)
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) == 0).collect()
    }

    /// The same digraph with arc `(i, j)` replaced by `(j, i)`.
    pub fn with_arc_reversed(&self, i: usize, j: usize) -> Result<Self> {
        if !self.has_arc(i, j) {
            return Err(Error::InvalidDigraph(format!("no arc ({i}, {j})")));
        }
        let arcs = self
            .arcs
            .iter()
            .map(|&a| if a == (i, j) { (j, i) } else { a })
            .collect();
        WeightedDigraph::new(&self.ctx, self.weights.clone(), arcs)
    }

    fn neighbor_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.n()];
        for &(i, j) in &self.arcs {
            masks[i] |= 1 << j;
            masks[j] |= 1 << i;
        }
        masks
    }

    fn out_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.n()];
        for &(i, j) in &self.arcs {
            masks[i] |= 1 << j;
        }
        masks
    }
}

/// The edge ideal `I(D) = (x_i x_j^{d_j} : (x_i, x_j) in E(D))`.
pub fn edge_ideal(d: &WeightedDigraph) -> MonomialIdeal {
    let n = d.n();
    let gens = d
        .arcs
        .iter()
        .map(|&(i, j)| {
            let mut e = vec![0; n];
            e[i] = 1;
            e[j] = d.weights[j];
            Monomial::new(e)
        })
        .collect();
    minimalize(&d.ctx, gens).expect("generators live in the digraph's context")
}

/// A vertex cover split into `L1`, `L2`, `L3`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CoverPartition {
    pub cover: Vec<usize>,
    /// Vertices with an out-arc leaving the cover.
    pub l1: Vec<usize>,
    pub l2: Vec<usize>,
    /// Vertices whose whole neighborhood lies in the cover.
    pub l3: Vec<usize>,
}

impl CoverPartition {
    /// The irreducible ideal `(L1, x_i^{d_i} : x_i in L2 ∪ L3)`.
    pub fn component(&self, d: &WeightedDigraph) -> Option<IrreducibleIdeal> {
        let mut exps = std::collections::BTreeMap::new();
        for &v in &self.l1 {
            exps.insert(v, 1);
        }
        for &v in self.l2.iter().chain(&self.l3) {
            exps.insert(v, d.weight(v));
        }
        IrreducibleIdeal::new(&d.ctx, &exps).ok()
    }
}

fn mask_of(d: &WeightedDigraph, cover: &[usize]) -> Result<u64> {
    if d.n() > 64 {
        return Err(Error::VertexCapExceeded {
            count: d.n(),
            cap: 64,
        });
    }
    let mut mask = 0u64;
    for &v in cover {
        if v >= d.n() {
            return Err(Error::VariableOutOfRange(v));
        }
        mask |= 1 << v;
    }
    Ok(mask)
}

fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn covers_mask(d: &WeightedDigraph, mask: u64) -> bool {
    d.arcs
        .iter()
        .all(|&(i, j)| mask >> i & 1 == 1 || mask >> j & 1 == 1)
}

struct Masks {
    nbr: Vec<u64>,
    out: Vec<u64>,
}

fn partition_masks(masks: &Masks, cover: u64) -> (u64, u64, u64) {
    let mut l1 = 0u64;
    let mut l3 = 0u64;
    for v in 0..masks.nbr.len() {
        if cover >> v & 1 == 0 {
            continue;
        }
        if masks.out[v] & !cover != 0 {
            l1 |= 1 << v;
        }
        if masks.nbr[v] & !cover == 0 {
            l3 |= 1 << v;
        }
    }
    (l1, cover & !(l1 | l3), l3)
}

fn strong_mask(d: &WeightedDigraph, masks: &Masks, cover: u64) -> bool {
    let (_, l2, l3) = partition_masks(masks, cover);
    let heavy_tails = l2 | l3;
    (0..d.n()).filter(|&x| l3 >> x & 1 == 1).all(|x| {
        d.arcs
            .iter()
            .any(|&(y, h)| h == x && heavy_tails >> y & 1 == 1 && d.weights[y] >= 2)
    })
}

fn to_partition(d: &WeightedDigraph, masks: &Masks, cover: u64) -> CoverPartition {
    let n = d.n();
    let (l1, l2, l3) = partition_masks(masks, cover);
    CoverPartition {
        cover: members(cover, n),
        l1: members(l1, n),
        l2: members(l2, n),
        l3: members(l3, n),
    }
}

fn masks(d: &WeightedDigraph) -> Masks {
    Masks {
        nbr: d.neighbor_masks(),
        out: d.out_masks(),
    }
}

pub fn is_vertex_cover(d: &WeightedDigraph, cover: &[usize]) -> Result<bool> {
    Ok(covers_mask(d, mask_of(d, cover)?))
}

/// Split a vertex cover into `L1`, `L2`, `L3`.
pub fn cover_partition(d: &WeightedDigraph, cover: &[usize]) -> Result<CoverPartition> {
    let mask = mask_of(d, cover)?;
    if !covers_mask(d, mask) {
        return Err(Error::NotVertexCover);
    }
    Ok(to_partition(d, &masks(d), mask))
}

/// A minimal vertex cover, or one where every `L3` vertex receives an arc
/// from an `L2 ∪ L3` vertex of weight at least 2.
pub fn is_strong_cover(d: &WeightedDigraph, cover: &[usize]) -> Result<bool> {
    let mask = mask_of(d, cover)?;
    if !covers_mask(d, mask) {
        return Err(Error::NotVertexCover);
    }
    Ok(strong_mask(d, &masks(d), mask))
}

fn enumerate_covers(nbr: &[u64], v: usize, chosen: u64, out: &mut Vec<u64>) {
    let n = nbr.len();
    if v == n {
        out.push(chosen);
        return;
    }
    // leaving v out forces every earlier neighbor to be in the cover
    let earlier = nbr[v] & ((1u64 << v) - 1);
    if earlier & !chosen == 0 {
        enumerate_covers(nbr, v + 1, chosen, out);
    }
    enumerate_covers(nbr, v + 1, chosen | 1 << v, out);
}

/// All vertex covers of the underlying graph as bitmasks.
fn all_covers(d: &WeightedDigraph, limits: &Limits) -> Result<Vec<u64>> {
    if d.n() > limits.max_vertices.min(63) {
        return Err(Error::VertexCapExceeded {
            count: d.n(),
            cap: limits.max_vertices.min(63),
        });
    }
    let mut out = Vec::new();
    enumerate_covers(&d.neighbor_masks(), 0, 0, &mut out);
    Ok(out)
}

pub fn strong_covers(d: &WeightedDigraph) -> Result<Vec<CoverPartition>> {
    strong_covers_with(d, &Limits::default())
}

/// Every strong vertex cover, ordered by its sorted vertex list.
pub fn strong_covers_with(d: &WeightedDigraph, limits: &Limits) -> Result<Vec<CoverPartition>> {
    let m = masks(d);
    let mut out: Vec<CoverPartition> = all_covers(d, limits)?
        .into_iter()
        .filter(|&c| strong_mask(d, &m, c))
        .map(|c| to_partition(d, &m, c))
        .collect();
    out.sort();
    Ok(out)
}

pub fn minimal_vertex_covers(d: &WeightedDigraph, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    let nbr = d.neighbor_masks();
    let mut out: Vec<Vec<usize>> = all_covers(d, limits)?
        .into_iter()
        .filter(|&c| (0..d.n()).all(|v| c >> v & 1 == 0 || nbr[v] & !c != 0))
        .map(|c| members(c, d.n()))
        .collect();
    out.sort();
    Ok(out)
}

pub fn prt_decomposition(d: &WeightedDigraph) -> Result<Decomposition<IrreducibleIdeal>> {
    prt_decomposition_with(d, &Limits::default())
}

/// Irreducible decomposition of the edge ideal, one component per strong cover.
pub fn prt_decomposition_with(
    d: &WeightedDigraph,
    limits: &Limits,
) -> Result<Decomposition<IrreducibleIdeal>> {
    if d.arcs.is_empty() {
        return Err(Error::TrivialIdeal("zero"));
    }
    let comps = strong_covers_with(d, limits)?
        .iter()
        .filter_map(|c| c.component(d))
        .collect();
    Ok(Decomposition::from_sorted_components(comps))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureFlags {
    pub acyclic: bool,
    pub transitive: bool,
    pub tournament: bool,
    /// A linear order with every arc pointing forward, when acyclic.
    pub topological_order: Option<Vec<usize>>,
}

fn topological_order(d: &WeightedDigraph) -> Option<Vec<usize>> {
    let n = d.n();
    let mut indeg = vec![0usize; n];
    for &(_, j) in &d.arcs {
        indeg[j] += 1;
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for w in d.out_neighbors(v) {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    (order.len() == n).then_some(order)
}

pub fn structure(d: &WeightedDigraph) -> StructureFlags {
    let order = topological_order(d);
    let transitive = d.arcs.iter().all(|&(i, j)| {
        d.out_neighbors(j)
            .into_iter()
            .all(|k| k == i || d.has_arc(i, k))
    });
    let n = d.n();
    let tournament = (0..n).all(|i| (i + 1..n).all(|j| d.adjacent(i, j)));
    StructureFlags {
        acyclic: order.is_some(),
        transitive,
        tournament,
        topological_order: order,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmVerdict {
    CohenMacaulay,
    NotCohenMacaulay,
    CriterionInapplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchingFamily {
    Forest,
    Whiskered,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CmCertificate {
    /// Perfect matching `{x_i, y_i}` with every `y_i` a leaf, listed as
    /// `(x_i, y_i)`; `violations` are the pairs with an arc `(x_i, y_i)`
    /// and `d(x_i) >= 2`.
    WhiskerMatching {
        family: MatchingFamily,
        pairs: Vec<(usize, usize)>,
        violations: Vec<(usize, usize)>,
    },
    /// A forest without a perfect matching into leaves.
    NoWhiskerMatching,
    AcyclicTournament {
        order: Vec<usize>,
    },
    None {
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmClassification {
    pub verdict: CmVerdict,
    pub certificate: CmCertificate,
}

fn is_forest(d: &WeightedDigraph) -> bool {
    let n = d.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for &(i, j) in &d.arcs {
        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// The perfect matching pairing each vertex with a leaf, if one exists.
/// It is unique except for isolated edges, which are oriented tail-first.
pub fn whisker_matching(d: &WeightedDigraph) -> Option<Vec<(usize, usize)>> {
    let n = d.n();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    let mut pairs = Vec::new();
    for leaf in (0..n).filter(|&v| d.degree(v) == 1) {
        let hub = d.neighbors(leaf)[0];
        if d.degree(hub) == 1 {
            if leaf < hub {
                let (x, y) = if d.has_arc(leaf, hub) {
                    (leaf, hub)
                } else {
                    (hub, leaf)
                };
                mate[x] = Some(y);
                mate[y] = Some(x);
                pairs.push((x, y));
            }
            continue;
        }
        if mate[hub].is_some() {
            return None;
        }
        mate[hub] = Some(leaf);
        mate[leaf] = Some(hub);
        pairs.push((hub, leaf));
    }
    if mate.iter().any(Option::is_none) {
        return None;
    }
    pairs.sort_unstable();
    Some(pairs)
}

/// Cohen–Macaulay classification for the families where a combinatorial
/// criterion is known; anything else is reported as inapplicable.
pub fn cm_classify(d: &WeightedDigraph) -> CmClassification {
    let inapplicable = |reason: &str| CmClassification {
        verdict: CmVerdict::CriterionInapplicable,
        certificate: CmCertificate::None {
            reason: reason.to_string(),
        },
    };
    if d.arcs.is_empty() {
        return inapplicable("digraph has no arcs");
    }
    if !d.isolated_vertices().is_empty() {
        return inapplicable("isolated vertices present");
    }
    let forest = is_forest(d);
    if let Some(pairs) = whisker_matching(d) {
        let violations: Vec<(usize, usize)> = pairs
            .iter()
            .copied()
            .filter(|&(x, y)| d.has_arc(x, y) && d.weight(x) >= 2)
            .collect();
        let verdict = if violations.is_empty() {
            CmVerdict::CohenMacaulay
        } else {
            CmVerdict::NotCohenMacaulay
        };
        return CmClassification {
            verdict,
            certificate: CmCertificate::WhiskerMatching {
                family: if forest {
                    MatchingFamily::Forest
                } else {
                    MatchingFamily::Whiskered
                },
                pairs,
                violations,
            },
        };
    }
    if forest {
        return CmClassification {
            verdict: CmVerdict::NotCohenMacaulay,
            certificate: CmCertificate::NoWhiskerMatching,
        };
    }
    let flags = structure(d);
    if flags.tournament {
        if let Some(order) = flags.topological_order {
            return CmClassification {
                verdict: CmVerdict::CohenMacaulay,
                certificate: CmCertificate::AcyclicTournament { order },
            };
        }
    }
    inapplicable("not a forest, not whiskered, not an acyclic tournament")
}

/// Every weight of at least 2 becomes 2.
pub fn weight_reduce(d: &WeightedDigraph) -> WeightedDigraph {
    let weights = d.weights.iter().map(|&w| w.min(2)).collect();
    WeightedDigraph::new(&d.ctx, weights, d.arcs.clone()).expect("reduction keeps validity")
}

/// One step of the depth-preserving reduction in the variable `i`: divide
/// the generators of top `x_i`-degree `q` by `x_i` once. Requires `p >= 1`
/// and `q - p >= 2` where `p` is the largest lower `x_i`-degree.
pub fn depth_reduction_step(ideal: &MonomialIdeal, i: usize) -> Result<MonomialIdeal> {
    if i >= ideal.n() {
        return Err(Error::VariableOutOfRange(i));
    }
    let q = ideal
        .generators()
        .iter()
        .map(|g| g.exponent(i))
        .max()
        .unwrap_or(0);
    let p = ideal
        .generators()
        .iter()
        .map(|g| g.exponent(i))
        .filter(|&e| e < q)
        .max()
        .unwrap_or(0);
    if p < 1 || q < p + 2 {
        return Err(Error::HypothesisViolated { p, q });
    }
    let n = ideal.n();
    let step = Monomial::pure_power(n, i, 1);
    let gens = ideal
        .generators()
        .iter()
        .map(|g| {
            if g.exponent(i) == q {
                g.quotient_by_gcd(&step)
            } else {
                Ok(g.clone())
            }
        })
        .collect::<Result<Vec<_>>>()?;
    minimalize(ideal.context(), gens)
}

/// Full polarization: `x_i^e` becomes `x_i_1 * ... * x_i_e` over fresh
/// variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polarization {
    pub ideal: MonomialIdeal,
    /// For each new variable, the original variable and its copy number (from 1).
    pub variable_map: Vec<(usize, u32)>,
}

pub fn polarize(ideal: &MonomialIdeal) -> Result<Polarization> {
    ideal.require_proper_nonzero()?;
    let ctx = ideal.context();
    let copies: Vec<u32> = ideal.max_exponents().iter().map(|&e| e.max(1)).collect();
    let mut variable_map = Vec::new();
    let mut names = Vec::new();
    let mut offset = Vec::with_capacity(copies.len());
    for (i, &c) in copies.iter().enumerate() {
        offset.push(variable_map.len());
        for k in 1..=c {
            variable_map.push((i, k));
            names.push(format!("{}_{}", ctx.name(i), k));
        }
    }
    let new_ctx = PolyContext::with_names(names)?;
    let gens = ideal
        .generators()
        .iter()
        .map(|g| {
            let mut e = vec![0; variable_map.len()];
            for (i, &a) in g.exponents().iter().enumerate() {
                for k in 0..a as usize {
                    e[offset[i] + k] = 1;
                }
            }
            Monomial::new(e)
        })
        .collect();
    Ok(Polarization {
        ideal: minimalize(&new_ctx, gens)?,
        variable_map,
    })
}
