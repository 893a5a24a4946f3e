//! Seeded generators of small valid parameter sets for every class.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use xjacobi::classical::ClassTag;
use xjacobi::diagrams::{is_canonical, DiagramParams};
use xjacobi::exactmath::rational::{is_int, q, qf, Rational};

pub use rand::SeedableRng;

pub const CLASSES: [ClassTag; 6] = [ClassTag::G, ClassTag::A, ClassTag::B, ClassTag::C, ClassTag::CB, ClassTag::D];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational in `(-1, 3)` that is not an integer or half-integer.
fn generic(r: &mut ChaCha8Rng) -> Rational {
    loop {
        let d = *[3i64, 4, 5, 6, 7].choose(r).unwrap();
        let n = r.gen_range(-d + 1..3 * d);
        let x = qf(n, d);
        if !is_int(&(q(2) * &x)) {
            return x;
        }
    }
}

fn subset(r: &mut ChaCha8Rng, max_len: usize, hi: i64) -> BTreeSet<i64> {
    let len = r.gen_range(0..=max_len);
    (0..len).map(|_| r.gen_range(0..=hi)).collect()
}

fn parameters(r: &mut ChaCha8Rng, tag: ClassTag) -> (Rational, Rational) {
    loop {
        let (a, b) = match tag {
            ClassTag::G => (generic(r), generic(r)),
            ClassTag::B => {
                let a = generic(r);
                let b = &a + q(r.gen_range(-1..=1));
                (a, b)
            }
            ClassTag::C => {
                let a = generic(r);
                let b = -a.clone() + q(r.gen_range(0..=2));
                (a, b)
            }
            ClassTag::CB => (qf(2 * r.gen_range(-1..=2) + 1, 2), qf(2 * r.gen_range(-1..=2) + 1, 2)),
            ClassTag::A => (q(r.gen_range(0..=2)), generic(r)),
            ClassTag::D => (q(r.gen_range(0..=2)), q(r.gen_range(0..=2))),
        };
        if ClassTag::classify(&a, &b) == tag && a > q(-1) && b > q(-1) {
            return (a, b);
        }
    }
}

/// A valid parameter set of class `tag` with at most `max_seeds` indices.
pub fn random_params(r: &mut ChaCha8Rng, tag: ClassTag, max_seeds: usize) -> DiagramParams {
    loop {
        let (a, b) = parameters(r, tag);
        let mut p = DiagramParams {
            tag: Some(tag),
            a,
            b,
            ..Default::default()
        };
        match tag {
            ClassTag::G | ClassTag::B => {
                p.k1 = subset(r, 2, 4);
                p.k3 = subset(r, 2, 4);
                p.k4 = subset(r, 2, 4);
            }
            ClassTag::C | ClassTag::CB => {
                p.k1 = subset(r, 2, 4);
                p.k2 = subset(r, 1, 4);
                p.k3 = subset(r, 1, 4);
                p.k4 = subset(r, 1, 4);
            }
            ClassTag::A => {
                p.k = subset(r, 2, 4);
                p.l = subset(r, 2, 4);
            }
            ClassTag::D => {
                p.k = subset(r, 2, 4);
                for l in subset(r, 1, 3) {
                    let t = qf(r.gen_range(1..=4) * if r.gen_bool(0.5) { 1 } else { -1 }, r.gen_range(1..=3));
                    p.l1.insert(l, t);
                }
                p.l3 = subset(r, 1, 4);
                p.l4 = subset(r, 1, 4);
            }
        }
        let seeds = p.k1.len() + p.k2.len() + p.k3.len() + p.k4.len() + p.k.len() + p.l.len() + p.l1.len() + p.l3.len() + p.l4.len();
        if seeds <= max_seeds && p.validate().is_ok() {
            return p;
        }
    }
}

/// Largest index named in a parameter set.
pub fn max_index(p: &DiagramParams) -> i64 {
    [&p.k1, &p.k2, &p.k3, &p.k4, &p.k, &p.l, &p.l3, &p.l4]
        .into_iter()
        .flat_map(|s| s.iter().copied())
        .chain(p.l1.keys().copied())
        .max()
        .unwrap_or(0)
}

/// A canonical parameter set of class `tag`. Diagrams do not record the
/// deformation parameters of class D, so those are fixed to 1.
pub fn random_canonical(r: &mut ChaCha8Rng, tag: ClassTag, max_seeds: usize) -> DiagramParams {
    loop {
        let mut p = random_params(r, tag, max_seeds);
        p.l1.values_mut().for_each(|t| *t = q(1));
        if p.validate().is_ok() && is_canonical(&p) {
            return p;
        }
    }
}
