//! Counting the expansions of a point.
//!
//! The expansions of `x` are the infinite paths from `x` in its follower
//! graph. When the graph is finite the count is read off its cycle
//! structure; when exploration is cut off, a component with two cycles or
//! a node inside a certified [`ContinuumCore`] still proves a continuum.

mod core;
pub(crate) mod graph;
mod prefixes;

use std::cmp::Ordering;

use serde::Serialize;
use thiserror::Error;

pub use self::core::{continuum_core, ContinuumCore};
pub use graph::{ExpansionGraph, PathClass};
pub use prefixes::{
    count_prefixes_in_interval, count_prefixes_to_depth, count_prefixes_with_lookahead, expansion_prefixes,
    MAX_EXACT_DEPTH,
};

use crate::expansion::{alpha, eval, Base, ExpansionError, Regime, ALPHA_DEPTH_CAP};
use crate::numeric::{rat, FieldElement};
use crate::words::{Digit, EPWord};
use graph::{has_rich_component, Explorer, Structure};

pub const DEFAULT_NODE_CAP: usize = 10_000;

/// Exploration sizes at which the partial graph is inspected before the cap.
const BUDGETS: [usize; 4] = [64, 256, 1024, 4096];

/// The node cap from `TRIEXP_NODE_CAP`, or [`DEFAULT_NODE_CAP`].
pub fn default_node_cap() -> usize {
    std::env::var("TRIEXP_NODE_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&n: &usize| n >= 1)
        .unwrap_or(DEFAULT_NODE_CAP)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CensusError {
    #[error("follower graph exceeded {0} nodes")]
    CapExceeded(usize),
    #[error("no point has exactly {k} expansions in this base")]
    NoWitness { k: usize },
    #[error("witness {word} has {found} expansions, expected {k}")]
    WitnessCheckFailed { word: String, k: usize, found: String },
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum Cardinality {
    Zero,
    Finite { k: u128, witnesses: Vec<EPWord> },
    CountablyInfinite,
    Continuum,
    UnresolvedAtCap { cap: usize },
}

impl Cardinality {
    pub fn finite_count(&self) -> Option<u128> {
        match self {
            Cardinality::Finite { k, .. } => Some(*k),
            _ => None,
        }
    }

    pub fn label(&self) -> String {
        match self {
            Cardinality::Zero => "zero".into(),
            Cardinality::Finite { k, .. } => format!("finite {k}"),
            Cardinality::CountablyInfinite => "countably-infinite".into(),
            Cardinality::Continuum => "continuum".into(),
            Cardinality::UnresolvedAtCap { cap } => format!("unresolved (cap {cap})"),
        }
    }
}

/// What established a classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certificate {
    /// The follower graph closed and was classified exactly.
    ClosedGraph,
    /// The explored part contains a component with more edges than nodes.
    RichComponent,
    /// An explored follower value lies in the certified core.
    CoreMember,
    None,
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub cardinality: Cardinality,
    pub certificate: Certificate,
    pub nodes_explored: usize,
}

/// Closed follower graph of `x`, pruned to nodes with an infinite continuation.
pub fn build_graph(x: &FieldElement, base: &Base, node_cap: usize) -> Result<ExpansionGraph, CensusError> {
    assert!(node_cap >= 1, "node cap must be positive");
    let mut ex = Explorer::new(x, base);
    if !ex.grow(node_cap) {
        return Err(CensusError::CapExceeded(node_cap));
    }
    Ok(ex.snapshot().prune())
}

fn classify_closed(g: &ExpansionGraph) -> Cardinality {
    let Some(r) = g.root() else {
        return Cardinality::Zero;
    };
    let st = Structure::new(g);
    match st.class_from(g, r) {
        PathClass::Zero => Cardinality::Zero,
        PathClass::Finite(k) => Cardinality::Finite {
            k,
            witnesses: st.witnesses(g, r),
        },
        PathClass::CountablyInfinite => Cardinality::CountablyInfinite,
        PathClass::Continuum => Cardinality::Continuum,
    }
}

fn in_core(nodes: &[FieldElement], core: &ContinuumCore) -> bool {
    nodes.iter().any(|v| {
        core.intervals
            .iter()
            .any(|(a, b)| v.cmp_rational(a) != Ordering::Less && v.cmp_rational(b) != Ordering::Greater)
    })
}

/// Classification with the evidence behind it.
pub fn classify_detailed(x: &FieldElement, base: &Base, node_cap: usize) -> Classification {
    let mut ex = Explorer::new(x, base);
    let core = continuum_core(base);
    let mut checked_core = 0;
    let budgets = BUDGETS
        .iter()
        .copied()
        .filter(|&b| b < node_cap)
        .chain(std::iter::once(node_cap));
    for budget in budgets {
        if ex.grow(budget) {
            let g = ex.snapshot().prune();
            return Classification {
                cardinality: classify_closed(&g),
                certificate: Certificate::ClosedGraph,
                nodes_explored: ex.len(),
            };
        }
        if has_rich_component(ex.edges()) {
            return Classification {
                cardinality: Cardinality::Continuum,
                certificate: Certificate::RichComponent,
                nodes_explored: ex.len(),
            };
        }
        if let Some(core) = core {
            if in_core(&ex.nodes()[checked_core..], core) {
                return Classification {
                    cardinality: Cardinality::Continuum,
                    certificate: Certificate::CoreMember,
                    nodes_explored: ex.len(),
                };
            }
            checked_core = ex.len();
        }
    }
    Classification {
        cardinality: Cardinality::UnresolvedAtCap { cap: node_cap },
        certificate: Certificate::None,
        nodes_explored: ex.len(),
    }
}

/// The number of expansions of `x` in base `q`: zero, finite with explicit
/// witnesses, countably infinite or continuum. Returns
/// [`Cardinality::UnresolvedAtCap`] when no certificate is found within
/// `node_cap` follower values.
pub fn classify(x: &FieldElement, base: &Base, node_cap: usize) -> Cardinality {
    classify_detailed(x, base, node_cap).cardinality
}

/// Expansion counts of the points reached from one switch-region node by
/// each digit; `None` where the digit is unusable.
#[derive(Clone, Debug, Serialize)]
pub struct SwitchNode {
    #[serde(serialize_with = "ser_display")]
    pub value: FieldElement,
    pub branches: [Option<PathClass>; 3],
}

fn ser_display<S: serde::Serializer, T: std::fmt::Display>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Clone, Debug, Serialize)]
pub struct NullInfiniteReport {
    pub null_infinite: bool,
    pub switch_nodes: Vec<SwitchNode>,
}

/// Whether `x` has exactly countably many expansions, with the branch
/// structure at every follower value where more than one digit is usable.
pub fn null_infinite_check(x: &FieldElement, base: &Base, node_cap: usize) -> Result<NullInfiniteReport, CensusError> {
    let g = build_graph(x, base, node_cap)?;
    let Some(r) = g.root() else {
        return Ok(NullInfiniteReport {
            null_infinite: false,
            switch_nodes: Vec::new(),
        });
    };
    let st = Structure::new(&g);
    let null_infinite = st.class_from(&g, r) == PathClass::CountablyInfinite;
    let switch_nodes = (0..g.len())
        .filter(|&v| g.edges(v).len() >= 2)
        .map(|v| SwitchNode {
            value: g.nodes()[v].clone(),
            branches: Digit::ALL.map(|d| g.successor(v, d).map(|w| st.class_from(&g, w))),
        })
        .collect();
    Ok(NullInfiniteReport {
        null_infinite,
        switch_nodes,
    })
}

/// Least `m ≥ 1` with `α(q) > Q 1^m Q 0^∞`.
pub fn alpha_gap_index(base: &Base) -> Result<usize, ExpansionError> {
    let a = alpha(base, ALPHA_DEPTH_CAP)?;
    for m in 1..ALPHA_DEPTH_CAP {
        let mut pre = vec![Digit::DQ];
        pre.extend(std::iter::repeat_n(Digit::D1, m));
        pre.push(Digit::DQ);
        let probe = EPWord::finite(&pre);
        // cmp_word gives the order of the probe relative to α(q).
        if a.cmp_word(&probe)? == Ordering::Less {
            return Ok(m);
        }
    }
    Err(ExpansionError::AlphaUndecided { depth: ALPHA_DEPTH_CAP })
}

/// A word whose value has exactly `k` expansions, checked by [`classify`].
pub fn witness_for_bk(base: &Base, k: usize, node_cap: usize) -> Result<EPWord, CensusError> {
    assert!(k >= 1, "k must be positive");
    let block = match base.regime() {
        Regime::SubCritical if k >= 2 => return Err(CensusError::NoWitness { k }),
        Regime::SubCritical => return Ok(EPWord::constant(Digit::D0)),
        Regime::Super => 1,
        Regime::Middle => alpha_gap_index(base)? + 1,
    };
    let mut pre = vec![Digit::D0];
    pre.extend(std::iter::repeat_n(Digit::DQ, k - 1));
    let mut per = vec![Digit::D1; block];
    per.push(Digit::DQ);
    let w = EPWord::new(&pre, &per).map_err(ExpansionError::from)?;
    let c = classify(&eval(&w, base), base, node_cap);
    if c.finite_count() != Some(k as u128) {
        return Err(CensusError::WitnessCheckFailed {
            word: w.to_string(),
            k,
            found: c.label(),
        });
    }
    Ok(w)
}

/// Which of the sets `B_1`, `B_k` (`k ≥ 2`), `B_ℵ0`, `B_{2^ℵ0}` contain `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BaseMembership {
    pub unique: bool,
    pub finite_k: bool,
    pub countable: bool,
    pub continuum: bool,
}

pub fn classify_base(base: &Base) -> BaseMembership {
    BaseMembership {
        unique: true,
        finite_k: base.regime() != Regime::SubCritical,
        countable: base.real().cmp_rational(&rat(2, 1)) != Ordering::Less,
        continuum: true,
    }
}
