//! Right cells of `W^f` inside the antispherical module, computed on a
//! length-truncated ball, and the associated KL ideals.
//!
//! An edge `x -> y` records `y <=_R x`: `Nbar_y` occurs with nonzero
//! coefficient in the KL expansion of `Nbar_x Hbar_s` for some generator `s`.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::sync::Arc;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};
use rayon::prelude::*;
use serde::Serialize;

use crate::affine::WfRep;
use crate::error::{Error, Result};
use crate::hecke::{act_hbar_s, KlBasis, N1Vector};

/// Directed preorder graph on `ball(L)`.
#[derive(Debug, Clone)]
pub struct PreorderGraph {
    pub length: usize,
    pub nodes: Vec<WfRep>,
    /// `(i, j)` means `nodes[j] <=_R nodes[i]`.
    pub edges: BTreeSet<(usize, usize)>,
}

pub fn preorder_graph(kl: &KlBasis, max_len: usize) -> Result<PreorderGraph> {
    if max_len == 0 {
        return Err(Error::InvalidArgument("truncation length must be at least 1".into()));
    }
    let g = kl.group();
    let nodes = g.ball(max_len);
    // Shell L+1 is needed for the KL expansion of products.
    kl.precompute(&g.ball(max_len + 1))?;
    let index: HashMap<&WfRep, usize> = nodes.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let per_node: Vec<Result<Vec<(usize, usize)>>> = nodes
        .par_iter()
        .enumerate()
        .map(|(i, x)| {
            let nx = kl.kl_element(x)?;
            let mut out = BTreeSet::new();
            for s in 0..g.num_generators() {
                let prod = act_hbar_s(g, &nx, s);
                for (y, _) in kl.kl_expand(&prod)? {
                    if let Some(&j) = index.get(&y) {
                        if j != i {
                            out.insert((i, j));
                        }
                    }
                }
            }
            Ok(out.into_iter().collect())
        })
        .collect();
    let mut edges = BTreeSet::new();
    for r in per_node {
        edges.extend(r?);
    }
    Ok(PreorderGraph { length: max_len, nodes, edges })
}

/// Cells of a truncated ball with the induced order.
#[derive(Debug, Clone)]
pub struct CellPartition {
    pub length: usize,
    /// Each cell sorted; cells sorted by their smallest element.
    pub cells: Vec<Vec<WfRep>>,
    /// `(a, b)` means cell `b` lies strictly below cell `a`; transitively reduced
    /// only in the sense of coming from single edges.
    pub order: BTreeSet<(usize, usize)>,
    cell_of: HashMap<WfRep, usize>,
}

impl CellPartition {
    pub fn cell_of(&self, x: &WfRep) -> Option<usize> {
        self.cell_of.get(x).copied()
    }

    pub fn cell(&self, i: usize) -> &[WfRep] {
        &self.cells[i]
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Cells reachable from `a` in the condensation order, `a` included.
    pub fn below(&self, a: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([a]);
        let mut stack = vec![a];
        while let Some(c) = stack.pop() {
            for &(_, d) in self.order.range((c, 0)..(c + 1, 0)) {
                if seen.insert(d) {
                    stack.push(d);
                }
            }
        }
        seen
    }

    /// The largest length occurring in a cell.
    pub fn cell_max_length(&self, a: usize) -> usize {
        self.cells[a].iter().map(|x| x.length()).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Cell<'a> {
            index: usize,
            size: usize,
            elements: Vec<&'a [u8]>,
        }
        let cells: Vec<Cell> = self
            .cells
            .iter()
            .enumerate()
            .map(|(i, c)| Cell { index: i, size: c.len(), elements: c.iter().map(|x| x.word()).collect() })
            .collect();
        let edges: Vec<[usize; 2]> = self.order.iter().map(|&(a, b)| [a, b]).collect();
        serde_json::json!({"length": self.length, "cells": cells, "order": edges})
    }
}

pub fn cells_from_graph(graph: &PreorderGraph) -> CellPartition {
    let mut dg: DiGraph<(), ()> = DiGraph::new();
    let idx: Vec<NodeIndex> = graph.nodes.iter().map(|_| dg.add_node(())).collect();
    for &(a, b) in &graph.edges {
        dg.add_edge(idx[a], idx[b], ());
    }
    let mut cells: Vec<Vec<WfRep>> = tarjan_scc(&dg)
        .into_iter()
        .map(|comp| {
            let mut c: Vec<WfRep> = comp.into_iter().map(|n| graph.nodes[n.index()].clone()).collect();
            c.sort();
            c
        })
        .collect();
    cells.sort_by(|a, b| a[0].cmp(&b[0]));
    let mut cell_of = HashMap::new();
    for (i, c) in cells.iter().enumerate() {
        for x in c {
            cell_of.insert(x.clone(), i);
        }
    }
    let mut order = BTreeSet::new();
    for &(a, b) in &graph.edges {
        let (ca, cb) = (cell_of[&graph.nodes[a]], cell_of[&graph.nodes[b]]);
        if ca != cb {
            order.insert((ca, cb));
        }
    }
    CellPartition { length: graph.length, cells, order, cell_of }
}

pub fn cell_partition(kl: &KlBasis, max_len: usize) -> Result<CellPartition> {
    Ok(cells_from_graph(&preorder_graph(kl, max_len)?))
}

/// `cell_partition(L)` after confirming that it agrees with
/// `cell_partition(L + 2)` on `ball(L - 2)`.
pub fn stable_cell_partition(kl: &KlBasis, max_len: usize) -> Result<Arc<CellPartition>> {
    let p = cell_partition(kl, max_len)?;
    let q = cell_partition(kl, max_len + 2)?;
    let inner: Vec<&WfRep> = p.cell_of.keys().filter(|x| x.length() + 2 <= max_len).collect();
    for x in &inner {
        for y in &inner {
            let same_p = p.cell_of[*x] == p.cell_of[*y];
            let same_q = q.cell_of[*x] == q.cell_of[*y];
            if same_p != same_q {
                return Err(Error::InconclusiveTruncation {
                    length: max_len,
                    detail: format!("cells of {x} and {y} change between L = {max_len} and L = {}", max_len + 2),
                });
            }
        }
    }
    Ok(Arc::new(p))
}

/// Which cell a command refers to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellSelector {
    Identity,
    /// The cell of `s_0`.
    Subregular,
    Index(usize),
    Containing(Vec<u8>),
}

impl std::str::FromStr for CellSelector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e" | "identity" => Ok(CellSelector::Identity),
            "subregular" | "D1" => Ok(CellSelector::Subregular),
            _ => {
                if let Some(w) = s.strip_prefix("contains:") {
                    let word = crate::hecke::parse_word(w, 10)
                        .ok_or_else(|| Error::InvalidArgument(format!("bad word `{w}`")))?;
                    return Ok(CellSelector::Containing(word));
                }
                s.parse().map(CellSelector::Index).map_err(|_| {
                    Error::InvalidArgument(format!("cell must be e, subregular, an index or contains:WORD, got `{s}`"))
                })
            }
        }
    }
}

impl CellSelector {
    pub fn resolve(&self, kl: &KlBasis, p: &CellPartition) -> Result<usize> {
        let g = kl.group();
        let by_word = |w: &[u8]| -> Result<usize> {
            if w.iter().any(|&d| d as usize >= g.num_generators()) {
                return Err(Error::InvalidArgument(format!("word {} uses an unknown generator", crate::affine::word_string(w))));
            }
            let x = g.wf_rep(&g.from_word(w))?;
            p.cell_of(&x).ok_or_else(|| {
                Error::InvalidArgument(format!("{x} lies outside the ball of length {}", p.length))
            })
        };
        match self {
            CellSelector::Identity => by_word(&[]),
            CellSelector::Subregular => by_word(&[0]),
            CellSelector::Containing(w) => by_word(w),
            CellSelector::Index(i) if *i < p.len() => Ok(*i),
            CellSelector::Index(i) => Err(Error::InvalidArgument(format!("no cell with index {i}"))),
        }
    }
}

/// Cell `a` of `p` is certified when it lies in `ball(L - 2)` and is also a
/// cell of the partition `q` at `L + 2`.
pub fn cell_is_stable(p: &CellPartition, q: &CellPartition, a: usize) -> bool {
    if p.cell_max_length(a) + 2 > p.length {
        return false;
    }
    let first = &p.cells[a][0];
    q.cell_of(first).is_some_and(|b| q.cells[b] == p.cells[a])
}

/// Partition at `L` with the stability verdict of every cell against `L + 2`.
pub fn certified_partition(kl: &KlBasis, max_len: usize) -> Result<(Arc<CellPartition>, Vec<bool>)> {
    let p = cell_partition(kl, max_len)?;
    let q = cell_partition(kl, max_len + 2)?;
    let flags = (0..p.len()).map(|a| cell_is_stable(&p, &q, a)).collect();
    Ok((Arc::new(p), flags))
}

/// An ideal generated by a selected cell, accepted only if the ideal
/// restricted to `ball(L - 2)` is the same at `L + 2` and, for the strict
/// ideal, the cell itself is stable.
pub fn certified_ideal(kl: &KlBasis, max_len: usize, sel: &CellSelector, kind: IdealKind) -> Result<CellIdeal> {
    let p = Arc::new(cell_partition(kl, max_len)?);
    let q = cell_partition(kl, max_len + 2)?;
    let a = sel.resolve(kl, &p)?;
    let fail = |detail: String| Error::InconclusiveTruncation { length: max_len, detail };
    // The strict ideal needs the whole cell; the other one only its members.
    if kind == IdealKind::Below && !cell_is_stable(&p, &q, a) {
        return Err(fail(format!("cell {a} is not stable between L = {max_len} and L = {}", max_len + 2)));
    }
    let b = q.cell_of(&p.cells[a][0]).unwrap();
    let mine = ideal_members(&p, a);
    let theirs = ideal_members(&q, b);
    for x in p.cell_of.keys().filter(|x| x.length() + 2 <= max_len) {
        if mine.contains(x) != theirs.contains(x) {
            return Err(fail(format!("membership of {x} in the ideal changes at L = {}", max_len + 2)));
        }
    }
    CellIdeal::new(p, a, kind)
}

/// `y` in the ball with `y <=_R A`, `A` included.
pub fn ideal_members(p: &CellPartition, a: usize) -> BTreeSet<WfRep> {
    p.below(a).into_iter().flat_map(|c| p.cells[c].iter().cloned()).collect()
}

/// Whether an ideal includes its generating cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IdealKind {
    /// `w <=_R A`.
    AtMost,
    /// `w <_R A`.
    Below,
}

/// The set `{w : w <=_R A}` or `{w : w <_R A}` for a cell `A`, with
/// membership decided beyond the ball through length-`L` prefixes.
#[derive(Debug, Clone)]
pub struct CellIdeal {
    partition: Arc<CellPartition>,
    cell: usize,
    kind: IdealKind,
    at_most: HashSet<WfRep>,
    members: HashSet<WfRep>,
}

impl CellIdeal {
    pub fn new(partition: Arc<CellPartition>, cell: usize, kind: IdealKind) -> Result<Self> {
        if cell >= partition.len() {
            return Err(Error::InvalidArgument(format!("no cell with index {cell}")));
        }
        let at_most: HashSet<WfRep> = ideal_members(&partition, cell).into_iter().collect();
        let members = match kind {
            IdealKind::AtMost => at_most.clone(),
            IdealKind::Below => {
                let own: HashSet<&WfRep> = partition.cells[cell].iter().collect();
                at_most.iter().filter(|x| !own.contains(x)).cloned().collect()
            }
        };
        Ok(CellIdeal { partition, cell, kind, at_most, members })
    }

    pub fn partition(&self) -> &CellPartition {
        &self.partition
    }

    pub fn cell(&self) -> usize {
        self.cell
    }

    pub fn kind(&self) -> IdealKind {
        self.kind
    }

    pub fn length(&self) -> usize {
        self.partition.length
    }

    /// Members inside the ball, sorted.
    pub fn members_in_ball(&self) -> Vec<WfRep> {
        let mut v: Vec<WfRep> = self.members.iter().cloned().collect();
        v.sort();
        v
    }

    /// Ball elements outside the ideal, sorted.
    pub fn complement_in_ball(&self) -> Vec<WfRep> {
        let mut v: Vec<WfRep> = self.partition.cell_of.keys().filter(|x| !self.members.contains(*x)).cloned().collect();
        v.sort();
        v
    }

    /// Membership of any element of `W^f`. Beyond the ball, `w <=_R p` for
    /// its length-`L` prefix `p`, which settles membership when `p <=_R A`
    /// (for the strict ideal, `A` must then sit well inside the ball).
    pub fn contains(&self, kl: &KlBasis, w: &WfRep) -> Result<bool> {
        let len = self.partition.length;
        if w.length() <= len {
            return Ok(self.members.contains(w));
        }
        let inconclusive = |detail: String| Error::InconclusiveTruncation { length: len, detail };
        if self.kind == IdealKind::Below && self.partition.cell_max_length(self.cell) + 2 > len {
            return Err(inconclusive(format!("cell {} reaches the truncation boundary", self.cell)));
        }
        let g = kl.group();
        let prefix = g.rep_unchecked(&g.from_word(&w.word()[..len]));
        if self.at_most.contains(&prefix) {
            Ok(true)
        } else {
            Err(inconclusive(format!("membership of {w} is not determined by its prefix {prefix}")))
        }
    }

    /// Membership of `n` in the KL-submodule spanned by the `Nbar^1_y` of
    /// ideal members.
    pub fn contains_n1(&self, kl: &KlBasis, n: &N1Vector) -> Result<bool> {
        n1_eliminate(kl, n, |y| self.contains(kl, y))
    }
}

/// Membership of `n` in the span of `Nbar^1_y`, `y` in `ideal`, for an ideal
/// known on `ball(L)`; a leading term outside the ball is inconclusive.
pub fn n1_submodule_member(kl: &KlBasis, n: &N1Vector, ideal: &BTreeSet<WfRep>, max_len: usize) -> Result<bool> {
    n1_eliminate(kl, n, |y| {
        if y.length() > max_len {
            Err(Error::InconclusiveTruncation {
                length: max_len,
                detail: format!("leading term {y} lies outside the ball"),
            })
        } else {
            Ok(ideal.contains(y))
        }
    })
}

fn n1_eliminate(kl: &KlBasis, n: &N1Vector, member: impl Fn(&WfRep) -> Result<bool>) -> Result<bool> {
    let mut rest = n.clone();
    while let Some((y, c)) = rest.leading().map(|(y, c)| (y.clone(), c)) {
        if !member(&y)? {
            return Ok(false);
        }
        let ky = kl.kl_element_v1(&y)?;
        rest.add_scaled(-c, &ky);
    }
    Ok(true)
}

/// Cell sizes keyed by smallest element word; convenient for reports.
pub fn cell_sizes(p: &CellPartition) -> BTreeMap<String, usize> {
    p.cells.iter().map(|c| (c[0].word_string(), c.len())).collect()
}
