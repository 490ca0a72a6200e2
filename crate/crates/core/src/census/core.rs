//! Certified continuum cores.
//!
//! A core is a finite union `K` of closed rational intervals such that every
//! point of `K` lies in at least two of the sets `φ_u(K) = (K + (u)_q)/q^L`,
//! `u` ranging over the digit words of a fixed length `L`. From any point
//! of `K` one can then pick between two words at every stage while staying
//! in `K`, so every point of `K` has a continuum of expansions.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::expansion::{Base, Regime};
use crate::numeric::{Rational, RationalInterval};
use crate::words::Digit;

const MAX_WORD_LENGTH: usize = 4;
const GUESS_ITERATIONS: usize = 200;
const GRID: i64 = 4096;
const MAX_PIECES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContinuumCore {
    pub word_length: usize,
    #[serde(serialize_with = "ser_intervals")]
    pub intervals: Vec<(Rational, Rational)>,
}

fn ser_intervals<S: serde::Serializer>(v: &[(Rational, Rational)], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|(a, b)| [a.to_string(), b.to_string()]))
}

/// Points covered at least twice by a family of closed intervals, merged.
/// Identical intervals count separately.
fn double_cover<T: Clone + PartialOrd>(images: &[(T, T)]) -> Vec<(T, T)> {
    let mut events: Vec<(T, i32)> = Vec::with_capacity(images.len() * 2);
    for (a, b) in images {
        events.push((a.clone(), 1));
        events.push((b.clone(), -1));
    }
    // Openings before closings at equal coordinates: closed intervals that
    // touch share the touching point.
    events.sort_by(|x, y| x.0.partial_cmp(&y.0).expect("comparable").then(y.1.cmp(&x.1)));
    let mut out: Vec<(T, T)> = Vec::new();
    let mut depth = 0;
    let mut start = None;
    for (x, d) in events {
        depth += d;
        if d > 0 && depth == 2 {
            start = Some(x);
        } else if d < 0 && depth == 1 {
            let s = start.take().expect("opened");
            match out.last_mut() {
                Some(last) if s <= last.1 => {
                    if x > last.1 {
                        last.1 = x;
                    }
                }
                _ => out.push((s, x)),
            }
        }
    }
    out
}

/// Intersection of two sorted lists of disjoint intervals.
fn intersect(a: &[(f64, f64)], b: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let lo = a[i].0.max(b[j].0);
        let hi = a[i].1.min(b[j].1);
        if lo <= hi {
            out.push((lo, hi));
        }
        if a[i].1 < b[j].1 {
            i += 1;
        } else {
            j += 1;
        }
    }
    out
}

fn words(len: usize) -> Vec<Vec<Digit>> {
    let mut all = vec![Vec::new()];
    for _ in 0..len {
        all = all
            .into_iter()
            .flat_map(|w| {
                Digit::ALL.into_iter().map(move |d| {
                    let mut v = w.clone();
                    v.push(d);
                    v
                })
            })
            .collect();
    }
    all
}

fn guess(q: f64, len: usize) -> Vec<(f64, f64)> {
    let m = q / (q - 1.0);
    let scale = q.powi(len as i32);
    let shifts: Vec<f64> = words(len)
        .iter()
        .map(|w| {
            w.iter().fold(0.0, |acc, d| {
                acc * q
                    + match d {
                        Digit::D0 => 0.0,
                        Digit::D1 => 1.0,
                        Digit::DQ => q,
                    }
            })
        })
        .collect();
    let mut k = vec![(0.0, m)];
    for _ in 0..GUESS_ITERATIONS {
        let images: Vec<(f64, f64)> = shifts
            .iter()
            .flat_map(|s| k.iter().map(move |(a, b)| ((a + s) / scale, (b + s) / scale)))
            .collect();
        // Pieces narrower than the snapping grid cannot survive snapping.
        let next: Vec<(f64, f64)> = intersect(&k, &double_cover(&images))
            .into_iter()
            .filter(|(a, b)| b - a > 3.0 / GRID as f64)
            .collect();
        if next.is_empty() || next.len() > MAX_PIECES {
            return Vec::new();
        }
        if next == k {
            break;
        }
        k = next;
    }
    k
}

/// Checks `K ⊆ Cov2(K)` for every `q` in the given enclosure, using the
/// part of each image interval that is certain for all such `q`.
fn verify(k: &[(Rational, Rational)], q: &RationalInterval, len: usize) -> bool {
    let one = RationalInterval::point(Rational::one());
    let zero = RationalInterval::point(Rational::from_integer(0.into()));
    let mut scale = one.clone();
    for _ in 0..len {
        scale = scale.mul(q);
    }
    let mut images = Vec::new();
    for w in words(len) {
        let shift = w.iter().fold(zero.clone(), |acc, d| {
            let digit = match d {
                Digit::D0 => &zero,
                Digit::D1 => &one,
                Digit::DQ => q,
            };
            acc.mul(q).add(digit)
        });
        for (a, b) in k {
            let lo = shift.add_scalar(a).div(&scale).expect("q^L > 0");
            let hi = shift.add_scalar(b).div(&scale).expect("q^L > 0");
            if lo.hi() <= hi.lo() {
                images.push((lo.hi().clone(), hi.lo().clone()));
            }
        }
    }
    let cover = double_cover(&images);
    k.iter().all(|(a, b)| cover.iter().any(|(c, d)| c <= a && b <= d))
}

fn snap(k: &[(f64, f64)]) -> Vec<(Rational, Rational)> {
    k.iter()
        .filter_map(|&(lo, hi)| {
            let a = (lo * GRID as f64).ceil().to_i64()? + 1;
            let b = (hi * GRID as f64).floor().to_i64()? - 1;
            (a < b).then(|| {
                (
                    Rational::new(BigInt::from(a), BigInt::from(GRID)),
                    Rational::new(BigInt::from(b), BigInt::from(GRID)),
                )
            })
        })
        .collect()
}

fn compute(base: &Base) -> Option<ContinuumCore> {
    // For q > q* the attractor has empty interior and cannot contain an interval.
    if base.regime() == Regime::Super {
        return None;
    }
    let q = base.to_f64();
    for len in 1..=MAX_WORD_LENGTH {
        let k = guess(q, len);
        if k.is_empty() {
            continue;
        }
        let k = snap(&k);
        if !k.is_empty() && verify(&k, base.q_enclosure(), len) {
            return Some(ContinuumCore {
                word_length: len,
                intervals: k,
            });
        }
    }
    None
}

/// The certified core for `base`, computed once and cached.
pub fn continuum_core(base: &Base) -> Option<&ContinuumCore> {
    base.core_cell().get_or_init(|| compute(base)).as_ref()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    #[test]
    fn double_cover_counts_touching_and_identical_intervals() {
        let iv = vec![(0.0, 1.0), (1.0, 2.0), (0.5, 0.75)];
        assert_eq!(double_cover(&iv), vec![(0.5, 0.75), (1.0, 1.0)]);
        let same = vec![(0.0, 1.0), (0.0, 1.0)];
        assert_eq!(double_cover(&same), vec![(0.0, 1.0)]);
    }

    #[test]
    fn core_for_three_halves() {
        let base: Base = "3/2".parse().unwrap();
        let core = continuum_core(&base).expect("a core exists at q = 3/2");
        // Every interval sits inside [0, M] = [0, 3].
        for (a, b) in &core.intervals {
            assert!(a > &rat(0, 1) && b < &rat(3, 1) && a < b);
        }
        assert!(verify(&core.intervals, base.q_enclosure(), core.word_length));
    }

    #[test]
    fn no_core_beyond_threshold() {
        let base: Base = "3".parse().unwrap();
        assert!(continuum_core(&base).is_none());
    }

    #[test]
    fn verification_rejects_a_bad_guess() {
        let base: Base = "3/2".parse().unwrap();
        // Near 0 only the word 0…0 maps back into a neighbourhood of 0.
        let k = vec![(rat(0, 1), rat(1, 100))];
        assert!(!verify(&k, base.q_enclosure(), 2));
    }
}
