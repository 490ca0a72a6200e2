//! Follower graphs and their path structure.

use std::collections::HashMap;

use serde::Serialize;

use crate::expansion::Base;
use crate::numeric::FieldElement;
use crate::words::{canonicalize, Digit, EPWord};

/// The graph of follower values `x_n` of a point under `v ↦ q·v − d`,
/// restricted to values in `[0, M]`, with nodes identified by exact value.
#[derive(Clone, Debug)]
pub struct ExpansionGraph {
    pub(crate) nodes: Vec<FieldElement>,
    pub(crate) edges: Vec<Vec<(Digit, usize)>>,
    pub(crate) root: Option<usize>,
    pub(crate) pruned: bool,
}

impl ExpansionGraph {
    pub fn nodes(&self) -> &[FieldElement] {
        &self.nodes
    }

    pub fn edges(&self, v: usize) -> &[(Digit, usize)] {
        &self.edges[v]
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn is_pruned(&self) -> bool {
        self.pruned
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    pub fn successor(&self, v: usize, d: Digit) -> Option<usize> {
        self.edges[v].iter().find(|(e, _)| *e == d).map(|&(_, w)| w)
    }

    pub fn index_of(&self, x: &FieldElement) -> Option<usize> {
        self.nodes.iter().position(|n| n == x)
    }

    /// Drops every node with no infinite continuation.
    pub(crate) fn prune(self) -> ExpansionGraph {
        let n = self.nodes.len();
        let mut out_deg: Vec<usize> = self.edges.iter().map(Vec::len).collect();
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (v, es) in self.edges.iter().enumerate() {
            for &(_, w) in es {
                preds[w].push(v);
            }
        }
        let mut dead = vec![false; n];
        let mut queue: Vec<usize> = (0..n).filter(|&v| out_deg[v] == 0).collect();
        while let Some(v) = queue.pop() {
            if dead[v] {
                continue;
            }
            dead[v] = true;
            for &p in &preds[v] {
                out_deg[p] -= 1;
                if out_deg[p] == 0 {
                    queue.push(p);
                }
            }
        }
        let mut remap = vec![usize::MAX; n];
        let mut nodes = Vec::new();
        for v in 0..n {
            if !dead[v] {
                remap[v] = nodes.len();
                nodes.push(self.nodes[v].clone());
            }
        }
        let edges = (0..n)
            .filter(|&v| !dead[v])
            .map(|v| {
                self.edges[v]
                    .iter()
                    .filter(|(_, w)| !dead[*w])
                    .map(|&(d, w)| (d, remap[w]))
                    .collect()
            })
            .collect();
        let root = self.root.filter(|&r| !dead[r]).map(|r| remap[r]);
        ExpansionGraph {
            nodes,
            edges,
            root,
            pruned: true,
        }
    }
}

/// Incremental breadth-first construction of a follower graph.
pub(crate) struct Explorer<'a> {
    base: &'a Base,
    index: HashMap<FieldElement, usize>,
    nodes: Vec<FieldElement>,
    edges: Vec<Vec<(Digit, usize)>>,
    expanded: usize,
}

impl<'a> Explorer<'a> {
    pub(crate) fn new(x: &FieldElement, base: &'a Base) -> Self {
        let mut e = Explorer {
            base,
            index: HashMap::new(),
            nodes: Vec::new(),
            edges: Vec::new(),
            expanded: 0,
        };
        if base.in_hull(x) {
            e.intern(x.clone());
        }
        e
    }

    fn intern(&mut self, v: FieldElement) -> usize {
        if let Some(&i) = self.index.get(&v) {
            return i;
        }
        let i = self.nodes.len();
        self.index.insert(v.clone(), i);
        self.nodes.push(v);
        self.edges.push(Vec::new());
        i
    }

    pub(crate) fn is_closed(&self) -> bool {
        self.expanded == self.nodes.len()
    }

    pub(crate) fn len(&self) -> usize {
        self.nodes.len()
    }

    pub(crate) fn nodes(&self) -> &[FieldElement] {
        &self.nodes
    }

    /// Expands nodes in discovery order until the graph closes or holds at
    /// least `budget` nodes. Returns whether it closed.
    pub(crate) fn grow(&mut self, budget: usize) -> bool {
        while self.expanded < self.nodes.len() && self.nodes.len() < budget {
            let v = self.expanded;
            let cur = self.nodes[v].clone();
            for d in Digit::ALL {
                let w = self.base.shift(&cur, d);
                if self.base.in_hull(&w) {
                    let wi = self.intern(w);
                    self.edges[v].push((d, wi));
                }
            }
            self.expanded += 1;
        }
        self.is_closed()
    }

    /// The subgraph on expanded edges; unexpanded nodes have no out-edges.
    pub(crate) fn snapshot(&self) -> ExpansionGraph {
        ExpansionGraph {
            nodes: self.nodes.clone(),
            edges: self.edges.clone(),
            root: if self.nodes.is_empty() { None } else { Some(0) },
            pruned: false,
        }
    }

    pub(crate) fn edges(&self) -> &[Vec<(Digit, usize)>] {
        &self.edges
    }
}

/// An edge list entry that names its target node.
pub(crate) trait Target {
    fn target(&self) -> usize;
}

impl Target for usize {
    fn target(&self) -> usize {
        *self
    }
}

impl Target for (Digit, usize) {
    fn target(&self) -> usize {
        self.1
    }
}

/// Strongly connected components (Tarjan, iterative). Returns the component
/// id of every node; ids are in reverse topological order.
pub(crate) fn scc<E: Target>(edges: &[Vec<E>]) -> (Vec<usize>, usize) {
    let n = edges.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![usize::MAX; n];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut ncomp = 0;
    for s in 0..n {
        if index[s] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(s, 0)];
        index[s] = next_index;
        low[s] = next_index;
        next_index += 1;
        stack.push(s);
        on_stack[s] = true;
        while let Some(&mut (v, ref mut ei)) = call.last_mut() {
            if *ei < edges[v].len() {
                let w = edges[v][*ei].target();
                *ei += 1;
                if index[w] == usize::MAX {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(p, _)) = call.last() {
                    low[p] = low[p].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp[w] = ncomp;
                        if w == v {
                            break;
                        }
                    }
                    ncomp += 1;
                }
            }
        }
    }
    (comp, ncomp)
}

/// Per-component node and internal edge counts.
pub(crate) fn component_stats<E: Target>(edges: &[Vec<E>], comp: &[usize], ncomp: usize) -> Vec<(usize, usize)> {
    let mut stats = vec![(0usize, 0usize); ncomp];
    for (v, es) in edges.iter().enumerate() {
        stats[comp[v]].0 += 1;
        for e in es {
            if comp[e.target()] == comp[v] {
                stats[comp[v]].1 += 1;
            }
        }
    }
    stats
}

pub(crate) fn reachable(edges: &[Vec<(Digit, usize)>], from: usize) -> Vec<bool> {
    let mut seen = vec![false; edges.len()];
    let mut stack = vec![from];
    seen[from] = true;
    while let Some(v) = stack.pop() {
        for &(_, w) in &edges[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// Size class of the set of infinite paths from one node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", content = "count", rename_all = "kebab-case")]
pub enum PathClass {
    Zero,
    Finite(u128),
    CountablyInfinite,
    Continuum,
}

/// Structural facts about a closed, pruned graph, shared by every query
/// rooted in it.
pub(crate) struct Structure {
    comp: Vec<usize>,
    stats: Vec<(usize, usize)>,
}

impl Structure {
    pub(crate) fn new(g: &ExpansionGraph) -> Self {
        let (comp, ncomp) = scc(&g.edges);
        let stats = component_stats(&g.edges, &comp, ncomp);
        Structure { comp, stats }
    }

    fn cyclic(&self, v: usize) -> bool {
        self.stats[self.comp[v]].1 > 0
    }

    pub(crate) fn class_from(&self, g: &ExpansionGraph, r: usize) -> PathClass {
        let seen = reachable(&g.edges, r);
        let nodes = || (0..g.len()).filter(|&v| seen[v]);
        if nodes().any(|v| {
            let (n, e) = self.stats[self.comp[v]];
            e > n
        }) {
            return PathClass::Continuum;
        }
        if nodes().any(|v| self.cyclic(v) && g.edges[v].len() >= 2) {
            return PathClass::CountablyInfinite;
        }
        PathClass::Finite(self.count_paths(g, r))
    }

    /// Number of infinite paths from `r` when every cycle is terminal.
    fn count_paths(&self, g: &ExpansionGraph, r: usize) -> u128 {
        let mut memo: Vec<Option<u128>> = vec![None; g.len()];
        let mut stack = vec![(r, false)];
        while let Some((v, done)) = stack.pop() {
            if memo[v].is_some() {
                continue;
            }
            if self.cyclic(v) {
                memo[v] = Some(1);
                continue;
            }
            if done {
                let c = g.edges[v]
                    .iter()
                    .map(|&(_, w)| memo[w].expect("child counted"))
                    .fold(0u128, u128::saturating_add);
                memo[v] = Some(c);
            } else {
                stack.push((v, true));
                for &(_, w) in &g.edges[v] {
                    if memo[w].is_none() {
                        stack.push((w, false));
                    }
                }
            }
        }
        memo[r].expect("root counted")
    }

    /// Every infinite path from `r` as an eventually periodic word; only
    /// meaningful when the path count is finite.
    pub(crate) fn witnesses(&self, g: &ExpansionGraph, r: usize) -> Vec<EPWord> {
        let mut out = Vec::new();
        let mut stack = vec![(r, Vec::new())];
        while let Some((v, pre)) = stack.pop() {
            if self.cyclic(v) {
                let mut per = Vec::new();
                let mut u = v;
                loop {
                    let (d, w) = g.edges[u][0];
                    per.push(d);
                    u = w;
                    if u == v {
                        break;
                    }
                }
                out.push(canonicalize(&pre, &per).expect("cycle is nonempty"));
                continue;
            }
            for &(d, w) in g.edges[v].iter().rev() {
                let mut p = pre.clone();
                p.push(d);
                stack.push((w, p));
            }
        }
        out.sort();
        out
    }
}

/// Whether the explored part already contains a component with more edges
/// than nodes, which forces a continuum of paths through it.
pub(crate) fn has_rich_component(edges: &[Vec<(Digit, usize)>]) -> bool {
    let (comp, ncomp) = scc(edges);
    component_stats(edges, &comp, ncomp).iter().any(|&(n, e)| e > n)
}
