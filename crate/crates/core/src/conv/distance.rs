//! Free distance: state-diagram search and a brute-force oracle.
//!
//! Weight is symbol-wise Hamming weight: the number of nonzero `F_q`
//! symbols over all time steps and coordinates.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::conv::encoder::PolyEncoder;
use crate::error::{Error, Result};
use crate::matrix::{FqMatrix, PolyMatrix};
use crate::statespace::realize;

const MAX_STATES: u64 = 1 << 20;
const MAX_TRANSITIONS: u64 = 1 << 24;
const ORACLE_NODE_BUDGET: u64 = 50_000_000;

fn weight(v: &[u32]) -> u64 {
    v.iter().filter(|&&x| x != 0).count() as u64
}

/// Encodes a vector over `F_q` as a base-`q` index.
fn index_of(v: &[u32], q: u32) -> usize {
    v.iter().rev().fold(0usize, |acc, &d| acc * q as usize + d as usize)
}

fn vector_of(mut idx: usize, len: usize, q: u32) -> Vec<u32> {
    let mut out = vec![0u32; len];
    for d in out.iter_mut() {
        *d = (idx % q as usize) as u32;
        idx /= q as usize;
    }
    out
}

/// Minimum weight of a nonzero path leaving and re-entering the zero state
/// of the controller-canonical state diagram. Requires a minimal-basic encoder.
pub fn free_distance(enc: &PolyEncoder) -> Result<u64> {
    if !enc.is_minimal_basic() {
        return Err(Error::NotMinimalBasic);
    }
    let r = realize(enc.matrix());
    let f = r.field();
    let q = f.order();
    let (k, delta) = (r.k(), r.delta());
    let states = (q as u64)
        .checked_pow(delta as u32)
        .filter(|&s| s <= MAX_STATES)
        .ok_or_else(|| Error::SearchSpaceTooLarge(format!("{q}^{delta} states")))?;
    let inputs = (q as u64)
        .checked_pow(k as u32)
        .filter(|&i| i.saturating_mul(states) <= MAX_TRANSITIONS)
        .ok_or_else(|| Error::SearchSpaceTooLarge(format!("{q}^{k} inputs per state")))?;
    let (states, inputs) = (states as usize, inputs as usize);

    let add = |x: &[u32], y: &[u32]| -> Vec<u32> { x.iter().zip(y).map(|(&a, &b)| f.add_raw(a, b)).collect() };
    let state_vecs: Vec<Vec<u32>> = (0..states).map(|s| vector_of(s, delta, q)).collect();
    let state_next: Vec<Vec<u32>> = state_vecs.iter().map(|s| r.a.left_mul_raw(s)).collect();
    let state_out: Vec<Vec<u32>> = state_vecs.iter().map(|s| r.c.left_mul_raw(s)).collect();
    let input_vecs: Vec<Vec<u32>> = (0..inputs).map(|u| vector_of(u, k, q)).collect();
    let input_next: Vec<Vec<u32>> = input_vecs.iter().map(|u| r.b.left_mul_raw(u)).collect();
    let input_out: Vec<Vec<u32>> = input_vecs.iter().map(|u| r.d.left_mul_raw(u)).collect();

    let transition = |s: usize, u: usize| -> (usize, u64) {
        let next = index_of(&add(&state_next[s], &input_next[u]), q);
        let w = weight(&add(&state_out[s], &input_out[u]));
        (next, w)
    };

    check_zero_weight_cycles(states, inputs, &transition)?;

    let mut best = u64::MAX;
    let mut dist = vec![u64::MAX; states];
    let mut heap = BinaryHeap::new();
    for u in 1..inputs {
        let (next, w) = transition(0, u);
        if next == 0 {
            best = best.min(w);
        } else if w < dist[next] {
            dist[next] = w;
            heap.push(Reverse((w, next)));
        }
    }
    while let Some(Reverse((d, s))) = heap.pop() {
        if d > dist[s] || d >= best {
            continue;
        }
        for u in 0..inputs {
            let (next, w) = transition(s, u);
            let nd = d + w;
            if next == 0 {
                best = best.min(nd);
            } else if nd < dist[next] {
                dist[next] = nd;
                heap.push(Reverse((nd, next)));
            }
        }
    }
    Ok(best)
}

/// Fails if some cycle avoiding the zero state produces no output weight.
fn check_zero_weight_cycles(
    states: usize,
    inputs: usize,
    transition: &dyn Fn(usize, usize) -> (usize, u64),
) -> Result<()> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); states];
    let mut indegree = vec![0usize; states];
    for (s, edges) in adj.iter_mut().enumerate().skip(1) {
        for u in 0..inputs {
            let (next, w) = transition(s, u);
            if w == 0 && next != 0 {
                edges.push(next);
                indegree[next] += 1;
            }
        }
    }
    // Kahn's algorithm on the zero-weight subgraph of nonzero states.
    let mut queue: Vec<usize> = (1..states).filter(|&s| indegree[s] == 0).collect();
    let mut removed = 0;
    while let Some(s) = queue.pop() {
        removed += 1;
        for &t in &adj[s] {
            indegree[t] -= 1;
            if indegree[t] == 0 {
                queue.push(t);
            }
        }
    }
    if removed < states.saturating_sub(1) {
        return Err(Error::CatastrophicEncoder);
    }
    Ok(())
}

/// Minimum weight of `u·M` over nonzero polynomial inputs with
/// `deg u_i ≤ deg_bound`, by direct convolution and depth-first enumeration
/// of input symbols with weight pruning.
///
/// Shifting an input by `z` leaves the weight unchanged, so the search only
/// enumerates inputs with `u(0) ≠ 0`.
pub fn free_distance_oracle(m: &PolyMatrix, deg_bound: usize) -> Result<u64> {
    let f = m.field();
    let q = f.order() as usize;
    let (k, n) = m.shape();
    let mem = m.max_degree().unwrap_or(0);
    let taps: Vec<FqMatrix> = (0..=mem).map(|t| m.coefficient(t)).collect();
    let inputs = q.checked_pow(k as u32).ok_or_else(|| Error::SearchSpaceTooLarge(format!("{q}^{k} inputs")))?;
    let input_vecs: Vec<Vec<u32>> = (0..inputs).map(|u| vector_of(u, k, q as u32)).collect();

    struct Search<'a> {
        f: crate::field::FieldRef,
        taps: &'a [FqMatrix],
        input_vecs: &'a [Vec<u32>],
        n: usize,
        deg_bound: usize,
        history: Vec<usize>,
        best: u64,
        nodes: u64,
    }

    impl Search<'_> {
        /// Output symbol vector at time `t` given the inputs chosen so far
        /// (later inputs treated as zero).
        fn output_at(&self, t: usize) -> Vec<u32> {
            let mut y = vec![0u32; self.n];
            for (tau, tap) in self.taps.iter().enumerate() {
                if tau > t || t - tau >= self.history.len() {
                    continue;
                }
                let u = &self.input_vecs[self.history[t - tau]];
                for (yj, v) in y.iter_mut().zip(tap.left_mul_raw(u)) {
                    *yj = self.f.add_raw(*yj, v);
                }
            }
            y
        }

        fn go(&mut self, partial: u64) -> Result<()> {
            self.nodes += 1;
            if self.nodes > ORACLE_NODE_BUDGET {
                return Err(Error::SearchSpaceTooLarge(format!("oracle exceeded {ORACLE_NODE_BUDGET} nodes")));
            }
            let t = self.history.len() - 1;
            // Close the codeword here: remaining outputs with zero future input.
            let tail: u64 = (t + 1..t + self.taps.len()).map(|s| weight(&self.output_at(s))).sum();
            self.best = self.best.min(partial + tail);
            if t == self.deg_bound {
                return Ok(());
            }
            for u in 0..self.input_vecs.len() {
                self.history.push(u);
                let w = partial + weight(&self.output_at(t + 1));
                if w < self.best {
                    self.go(w)?;
                }
                self.history.pop();
            }
            Ok(())
        }
    }

    let mut search =
        Search { f, taps: &taps, input_vecs: &input_vecs, n, deg_bound, history: Vec::new(), best: u64::MAX, nodes: 0 };
    for u in 1..inputs {
        search.history.push(u);
        let w = weight(&search.output_at(0));
        if w < search.best {
            search.go(w)?;
        }
        search.history.pop();
    }
    Ok(search.best)
}
