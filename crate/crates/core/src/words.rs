//! Digit words over `{0, 1, Q}`.
//!
//! `Q` is a symbol here; it only acquires the numeric value `q` once a
//! [`Base`](crate::expansion::Base) is chosen.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("eventually periodic word needs a nonempty period")]
    EmptyPeriod,
    #[error("cannot parse word `{0}`: expected digits 0, 1, q with a period group like `0qq(1q)*`")]
    Parse(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Digit {
    D0,
    D1,
    DQ,
}

impl Digit {
    pub const ALL: [Digit; 3] = [Digit::D0, Digit::D1, Digit::DQ];

    pub fn from_char(c: char) -> Option<Digit> {
        match c {
            '0' => Some(Digit::D0),
            '1' => Some(Digit::D1),
            'q' | 'Q' => Some(Digit::DQ),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Digit::D0 => '0',
            Digit::D1 => '1',
            Digit::DQ => 'q',
        }
    }

    /// Image under the symbol map `0 ↦ 0, 1 ↦ 1, Q ↦ 2`.
    pub fn phi(self) -> u8 {
        self as u8
    }
}

fn parse_digits(s: &str) -> Option<Vec<Digit>> {
    s.chars().map(Digit::from_char).collect()
}

fn write_digits(f: &mut fmt::Formatter<'_>, ds: &[Digit]) -> fmt::Result {
    for d in ds {
        write!(f, "{}", d.to_char())?;
    }
    Ok(())
}

/// A finite digit string.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteWord {
    digits: Vec<Digit>,
}

impl FiniteWord {
    pub fn new(digits: Vec<Digit>) -> Self {
        FiniteWord { digits }
    }

    pub fn digits(&self) -> &[Digit] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn push(&mut self, d: Digit) {
        self.digits.push(d);
    }
}

impl fmt::Display for FiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_digits(f, &self.digits)
    }
}

impl FromStr for FiniteWord {
    type Err = WordError;
    fn from_str(s: &str) -> Result<Self, WordError> {
        parse_digits(s.trim())
            .map(FiniteWord::new)
            .ok_or_else(|| WordError::Parse(s.to_string()))
    }
}

impl Serialize for FiniteWord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The infinite word `pre · per · per · …`, kept in canonical form: the
/// period is primitive and the preperiod is as short as possible, so two
/// representations are equal exactly when the sequences are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EPWord {
    pre: Vec<Digit>,
    per: Vec<Digit>,
}

fn primitive_root(per: &[Digit]) -> &[Digit] {
    let n = per.len();
    for p in 1..n {
        if n.is_multiple_of(p) && (p..n).all(|i| per[i] == per[i - p]) {
            return &per[..p];
        }
    }
    per
}

pub fn canonicalize(pre: &[Digit], per: &[Digit]) -> Result<EPWord, WordError> {
    if per.is_empty() {
        return Err(WordError::EmptyPeriod);
    }
    let mut pre = pre.to_vec();
    let mut per = primitive_root(per).to_vec();
    while let (Some(&a), Some(&b)) = (pre.last(), per.last()) {
        if a != b {
            break;
        }
        pre.pop();
        per.rotate_right(1);
    }
    Ok(EPWord { pre, per })
}

impl EPWord {
    pub fn new(pre: &[Digit], per: &[Digit]) -> Result<Self, WordError> {
        canonicalize(pre, per)
    }

    /// `d^∞`.
    pub fn constant(d: Digit) -> Self {
        EPWord {
            pre: Vec::new(),
            per: vec![d],
        }
    }

    /// The finite word followed by `0^∞`.
    pub fn finite(pre: &[Digit]) -> Self {
        canonicalize(pre, &[Digit::D0]).expect("nonempty period")
    }

    pub fn preperiod(&self) -> &[Digit] {
        &self.pre
    }

    pub fn period(&self) -> &[Digit] {
        &self.per
    }

    /// Digit at 0-based position `i`.
    pub fn at(&self, i: usize) -> Digit {
        if i < self.pre.len() {
            self.pre[i]
        } else {
            self.per[(i - self.pre.len()) % self.per.len()]
        }
    }

    pub fn prefix(&self, n: usize) -> FiniteWord {
        FiniteWord::new((0..n).map(|i| self.at(i)).collect())
    }

    /// The word `d · self`.
    pub fn prepend(&self, d: Digit) -> EPWord {
        let mut pre = Vec::with_capacity(self.pre.len() + 1);
        pre.push(d);
        pre.extend_from_slice(&self.pre);
        canonicalize(&pre, &self.per).expect("nonempty period")
    }

    /// The word `prefix · self`.
    pub fn prepend_all(&self, prefix: &[Digit]) -> EPWord {
        let mut pre = prefix.to_vec();
        pre.extend_from_slice(&self.pre);
        canonicalize(&pre, &self.per).expect("nonempty period")
    }

    /// Shift by `n` symbols.
    pub fn tail(&self, n: usize) -> EPWord {
        if n <= self.pre.len() {
            return EPWord {
                pre: self.pre[n..].to_vec(),
                per: self.per.clone(),
            };
        }
        let mut per = self.per.clone();
        per.rotate_left((n - self.pre.len()) % self.per.len());
        EPWord { pre: Vec::new(), per }
    }

    /// Every shift of the word; at most `|pre| + |per|` of them.
    pub fn distinct_tails(&self) -> BTreeSet<EPWord> {
        (0..self.pre.len() + self.per.len()).map(|n| self.tail(n)).collect()
    }

    /// Number of symbols after which two words with these shapes agree forever
    /// if they have agreed so far.
    fn horizon(&self, other: &EPWord) -> usize {
        self.pre.len().max(other.pre.len()) + self.per.len().lcm(&other.per.len())
    }

    pub fn lex_compare(&self, other: &EPWord) -> Ordering {
        for i in 0..self.horizon(other) {
            match self.at(i).cmp(&other.at(i)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    pub fn phi_map(&self) -> PhiWord {
        PhiWord {
            pre: self.pre.iter().map(|d| d.phi()).collect(),
            per: self.per.iter().map(|d| d.phi()).collect(),
        }
    }

    /// Words obtained by rewriting one factor `10` as `0Q`, or one `0Q` as
    /// `10`, starting at a position below `window`.
    pub fn substitute_siblings(&self, window: usize) -> BTreeSet<EPWord> {
        let mut out = BTreeSet::new();
        for i in 0..window {
            let pair = (self.at(i), self.at(i + 1));
            let replacement = match pair {
                (Digit::D1, Digit::D0) => [Digit::D0, Digit::DQ],
                (Digit::D0, Digit::DQ) => [Digit::D1, Digit::D0],
                _ => continue,
            };
            // Unroll enough periods that positions i and i + 1 sit in the preperiod.
            let mut len = self.pre.len();
            while len < i + 2 {
                len += self.per.len();
            }
            let mut pre: Vec<Digit> = (0..len).map(|j| self.at(j)).collect();
            pre[i] = replacement[0];
            pre[i + 1] = replacement[1];
            out.insert(canonicalize(&pre, &self.per).expect("nonempty period"));
        }
        out
    }
}

pub fn lex_compare(a: &EPWord, b: &EPWord) -> Ordering {
    a.lex_compare(b)
}

pub fn tail(w: &EPWord, n: usize) -> EPWord {
    w.tail(n)
}

pub fn distinct_tails(w: &EPWord) -> BTreeSet<EPWord> {
    w.distinct_tails()
}

pub fn phi_map(w: &EPWord) -> PhiWord {
    w.phi_map()
}

pub fn substitute_siblings(w: &EPWord, window: usize) -> BTreeSet<EPWord> {
    w.substitute_siblings(window)
}

impl PartialOrd for EPWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for EPWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_compare(other)
    }
}

impl fmt::Display for EPWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_digits(f, &self.pre)?;
        write!(f, "(")?;
        write_digits(f, &self.per)?;
        write!(f, ")*")
    }
}

impl FromStr for EPWord {
    type Err = WordError;
    fn from_str(s: &str) -> Result<Self, WordError> {
        let t = s.trim();
        let err = || WordError::Parse(s.to_string());
        let body = t.strip_suffix(")*").ok_or_else(err)?;
        let (pre, per) = body.split_once('(').ok_or_else(err)?;
        let pre = parse_digits(pre).ok_or_else(err)?;
        let per = parse_digits(per).ok_or_else(err)?;
        if per.is_empty() {
            return Err(WordError::EmptyPeriod);
        }
        canonicalize(&pre, &per)
    }
}

impl Serialize for EPWord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An eventually periodic word over `{0, 1, 2}`, the image of an [`EPWord`]
/// under `Q ↦ 2`. Ordered lexicographically as an infinite sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PhiWord {
    pre: Vec<u8>,
    per: Vec<u8>,
}

impl PhiWord {
    pub fn at(&self, i: usize) -> u8 {
        if i < self.pre.len() {
            self.pre[i]
        } else {
            self.per[(i - self.pre.len()) % self.per.len()]
        }
    }
}

impl PartialOrd for PhiWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PhiWord {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.pre.len().max(other.pre.len()) + self.per.len().lcm(&other.per.len());
        (0..n)
            .map(|i| self.at(i).cmp(&other.at(i)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }
}

impl fmt::Display for PhiWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.pre {
            write!(f, "{d}")?;
        }
        write!(f, "(")?;
        for d in &self.per {
            write!(f, "{d}")?;
        }
        write!(f, ")*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> EPWord {
        s.parse().unwrap()
    }

    fn ds(s: &str) -> Vec<Digit> {
        parse_digits(s).unwrap()
    }

    #[test]
    fn canonical_forms_coincide() {
        assert_eq!(
            canonicalize(&ds("0"), &ds("1q")).unwrap(),
            canonicalize(&ds("01"), &ds("q1")).unwrap()
        );
        let qq = canonicalize(&[], &ds("qq")).unwrap();
        assert_eq!(qq.period(), &ds("q")[..]);
        let ones = canonicalize(&ds("1"), &ds("1")).unwrap();
        assert!(ones.preperiod().is_empty());
        assert_eq!(ones.period(), &ds("1")[..]);
        assert_eq!(canonicalize(&ds("0"), &[]), Err(WordError::EmptyPeriod));
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0q(q1)*", "(100)*", "1(0)*", "(q11)*"] {
            assert_eq!(w(s).to_string(), s);
        }
        assert_eq!(w("0qq(1q)*").to_string(), "0q(q1)*");
        assert_eq!(w("(1q1q)*").to_string(), "(1q)*");
        assert!("0qq".parse::<EPWord>().is_err());
        assert!("0q()*".parse::<EPWord>().is_err());
        assert!("02(1)*".parse::<EPWord>().is_err());
    }

    #[test]
    fn lexicographic_examples() {
        assert_eq!(w("(1)*").lex_compare(&w("q(0)*")), Ordering::Less);
        assert_eq!(w("(1q)*").lex_compare(&w("(1)*")), Ordering::Greater);
        // (Q1)^∞ against Q1Q0^∞: first difference at the fourth symbol.
        assert_eq!(w("(q1)*").lex_compare(&w("q1q(0)*")), Ordering::Greater);
        assert_eq!(w("0(1q)*").lex_compare(&w("01(q1)*")), Ordering::Equal);
    }

    #[test]
    fn tails() {
        let x = w("0q(1q)*");
        assert_eq!(x.tail(2), w("(1q)*"));
        assert_eq!(w("(1q)*").tail(1), w("(q1)*"));
        assert_eq!(x.tail(0), x);
        assert_eq!(x.tail(5), x.tail(3));
        // q(1q)* and (q1)* are the same sequence, so only three shifts differ.
        let t = x.distinct_tails();
        assert_eq!(t.len(), 3);
        for s in ["0q(1q)*", "q(1q)*", "(1q)*", "(q1)*"] {
            assert!(t.contains(&w(s)));
        }
        assert_eq!(w("(0)*").distinct_tails().len(), 1);
        assert_eq!(w("(q11)*").distinct_tails().len(), 3);
    }

    #[test]
    fn phi_images() {
        assert_eq!(w("q(1)*").phi_map().to_string(), "2(1)*");
        assert_eq!(w("(q1)*").phi_map().to_string(), "(21)*");
        assert_eq!(w("(0)*").phi_map().to_string(), "(0)*");
    }

    #[test]
    fn sibling_substitutions() {
        let s = w("1(0)*").substitute_siblings(8);
        assert_eq!(s.into_iter().collect::<Vec<_>>(), vec![w("0q(0)*")]);
        let s = w("0(q)*").substitute_siblings(8);
        assert_eq!(s.into_iter().collect::<Vec<_>>(), vec![w("10(q)*")]);
        assert!(w("(1)*").substitute_siblings(8).is_empty());
        // Occurrences inside the period are found at each unrolled position.
        let s = w("(10)*").substitute_siblings(4);
        assert!(s.contains(&w("0q(10)*")));
        assert!(s.contains(&w("100q(10)*")));
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn finite_words() {
        let f: FiniteWord = "q1q1".parse().unwrap();
        assert_eq!(f.len(), 4);
        assert_eq!(f.to_string(), "q1q1");
        assert_eq!(w("(q1)*").prefix(6).to_string(), "q1q1q1");
        assert_eq!(EPWord::finite(&ds("10")), w("1(0)*"));
    }
}
