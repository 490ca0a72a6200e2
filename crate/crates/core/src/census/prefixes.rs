//! Brute-force prefix counting, used as an independent check on the graph
//! classification.

use std::collections::HashMap;

use crate::expansion::{Base, Regime};
use crate::numeric::{FieldElement, Rational, RationalInterval};
use crate::words::{Digit, FiniteWord};

/// Largest depth accepted by the exact counter.
pub const MAX_EXACT_DEPTH: usize = 64;

struct Counter<'a> {
    base: &'a Base,
    ids: HashMap<FieldElement, usize>,
    values: Vec<FieldElement>,
    succ: Vec<Option<Vec<usize>>>,
    digits: Vec<Vec<Digit>>,
    alive: HashMap<(usize, usize), bool>,
    counts: HashMap<(usize, usize), u128>,
}

impl<'a> Counter<'a> {
    fn id(&mut self, v: FieldElement) -> usize {
        if let Some(&i) = self.ids.get(&v) {
            return i;
        }
        let i = self.values.len();
        self.ids.insert(v.clone(), i);
        self.values.push(v);
        self.succ.push(None);
        self.digits.push(Vec::new());
        i
    }

    fn successors(&mut self, v: usize) -> Vec<usize> {
        if let Some(s) = &self.succ[v] {
            return s.clone();
        }
        let cur = self.values[v].clone();
        let mut out = Vec::new();
        let mut digits = Vec::new();
        for d in Digit::ALL {
            let w = self.base.shift(&cur, d);
            if self.base.in_hull(&w) {
                out.push(self.id(w));
                digits.push(d);
            }
        }
        self.succ[v] = Some(out.clone());
        self.digits[v] = digits;
        out
    }

    /// Whether some path of length `la` starts at `v`.
    fn survives(&mut self, v: usize, la: usize) -> bool {
        if la == 0 {
            return true;
        }
        if let Some(&b) = self.alive.get(&(v, la)) {
            return b;
        }
        let mut ok = false;
        for w in self.successors(v) {
            if self.survives(w, la - 1) {
                ok = true;
                break;
            }
        }
        self.alive.insert((v, la), ok);
        ok
    }

    fn count(&mut self, v: usize, depth: usize, la: usize) -> u128 {
        if depth == 0 {
            return u128::from(self.survives(v, la));
        }
        if let Some(&c) = self.counts.get(&(v, depth)) {
            return c;
        }
        let mut total = 0u128;
        for w in self.successors(v) {
            total = total.saturating_add(self.count(w, depth - 1, la));
        }
        self.counts.insert((v, depth), total);
        total
    }
}

/// Number of digit strings `d_1 … d_depth` whose remainders all stay in
/// `[0, M]` and which can be continued for `lookahead` further digits.
///
/// For `q ≤ q*` every point of `[0, M]` has an expansion, so no lookahead
/// is needed; for `q > q*` a remainder in `[0, M]` may still fall outside
/// the attractor and [`count_prefixes_to_depth`] looks `depth` digits ahead.
pub fn count_prefixes_with_lookahead(x: &FieldElement, base: &Base, depth: usize, lookahead: usize) -> u128 {
    assert!(
        depth <= MAX_EXACT_DEPTH,
        "exact prefix counting is limited to depth {MAX_EXACT_DEPTH}"
    );
    if !base.in_hull(x) {
        return 0;
    }
    let mut c = Counter {
        base,
        ids: HashMap::new(),
        values: Vec::new(),
        succ: Vec::new(),
        digits: Vec::new(),
        alive: HashMap::new(),
        counts: HashMap::new(),
    };
    let root = c.id(x.clone());
    c.count(root, depth, lookahead)
}

/// Number of length-`depth` expansion prefixes of `x`, exactly.
pub fn count_prefixes_to_depth(x: &FieldElement, base: &Base, depth: usize) -> u128 {
    let lookahead = if base.regime() == Regime::Super { depth } else { 0 };
    count_prefixes_with_lookahead(x, base, depth, lookahead)
}

/// The expansion prefixes counted by [`count_prefixes_to_depth`], sorted.
pub fn expansion_prefixes(x: &FieldElement, base: &Base, depth: usize) -> Vec<FiniteWord> {
    assert!(
        depth <= MAX_EXACT_DEPTH,
        "exact prefix enumeration is limited to depth {MAX_EXACT_DEPTH}"
    );
    if !base.in_hull(x) {
        return Vec::new();
    }
    let lookahead = if base.regime() == Regime::Super { depth } else { 0 };
    let mut c = Counter {
        base,
        ids: HashMap::new(),
        values: Vec::new(),
        succ: Vec::new(),
        digits: Vec::new(),
        alive: HashMap::new(),
        counts: HashMap::new(),
    };
    let root = c.id(x.clone());
    let mut out = Vec::new();
    let mut stack = vec![(root, Vec::new())];
    while let Some((v, pre)) = stack.pop() {
        if pre.len() == depth {
            if c.survives(v, lookahead) {
                out.push(FiniteWord::new(pre));
            }
            continue;
        }
        let succ = c.successors(v);
        for (d, w) in c.digits[v].clone().into_iter().zip(succ) {
            if c.count(w, depth - pre.len() - 1, lookahead) > 0 {
                let mut p = pre.clone();
                p.push(d);
                stack.push((w, p));
            }
        }
    }
    out.sort();
    out
}

/// Over-approximate prefix count for a point known only up to an interval,
/// using the base's rational enclosure of `q`.
pub fn count_prefixes_in_interval(x: &RationalInterval, base: &Base, depth: usize) -> u128 {
    let q = base.q_enclosure();
    let one = RationalInterval::point(Rational::from_integer(1.into()));
    let m_hi = q.div(&q.sub(&one)).expect("q > 1").hi().clone();
    let zero = Rational::from_integer(0.into());
    let hull = RationalInterval::new(zero.clone(), m_hi).expect("M > 0");
    fn go(x: &RationalInterval, q: &RationalInterval, hull: &RationalInterval, depth: usize) -> u128 {
        if !x.intersects(hull) {
            return 0;
        }
        if depth == 0 {
            return 1;
        }
        let qx = x.mul(q);
        let one = Rational::from_integer(1.into());
        let next = [qx.clone(), qx.add_scalar(&-one), qx.sub(q)];
        next.iter().map(|y| go(y, q, hull, depth - 1)).sum()
    }
    go(x, q, &hull, depth)
}
