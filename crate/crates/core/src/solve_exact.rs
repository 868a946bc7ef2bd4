//! Exhaustive and heuristic solvers for families outside the tractable cases.
//!
//! All of them place isolated vertices in X1 and enumerate only the rest.
//! Among optimal partitions, [`brute_force`] returns the one whose X1
//! membership string (vertices in declaration order, `1` = X1) is
//! lexicographically smallest.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::eval::{Scaled, ScaledArcs, Score};
use crate::instance::Instance;
use crate::partition::Partition;
use crate::solve_poly::{Method, Solution};

/// Masks are `u64`, most significant bit = first free vertex.
const MAX_FREE_VERTICES: usize = 62;
/// Upper bound on how many top bits are split into parallel chunks.
const CHUNK_BITS: usize = 10;
/// Largest component size the separator solver will enumerate.
const MAX_COMPONENT: usize = 20;

/// Tie-breaking rule among equally heavy partitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    /// Lexicographically smallest X1 membership string.
    LexMask,
    /// Fewest free vertices in X1, then lexicographically smallest.
    FewestX1,
}

impl TieBreak {
    fn key(self, mask: u64) -> (u32, u64) {
        match self {
            TieBreak::LexMask => (0, mask),
            TieBreak::FewestX1 => (mask.count_ones(), mask),
        }
    }
}

fn free_vertices(instance: &Instance) -> (Vec<usize>, Vec<bool>) {
    let iso = instance.isolated();
    let free = (0..instance.num_vertices()).filter(|&v| !iso[v]).collect();
    // isolated vertices sit in X1, everything else starts in X2
    (free, iso)
}

fn flags_from_mask(base: &[bool], free: &[usize], mask: u64) -> Vec<bool> {
    let k = free.len();
    let mut flags = base.to_vec();
    for (i, &v) in free.iter().enumerate() {
        flags[v] = mask >> (k - 1 - i) & 1 == 1;
    }
    flags
}

fn better<T: Ord>(a: &(T, (u32, u64)), b: &(T, (u32, u64))) -> bool {
    a.0 > b.0 || (a.0 == b.0 && a.1 < b.1)
}

fn enumerate_chunk<T: Score>(
    arcs: &ScaledArcs<T>,
    base: &[bool],
    free: &[usize],
    chunk: u64,
    low_bits: usize,
    tie: TieBreak,
) -> (T, (u32, u64)) {
    let k = free.len();
    let mut mask = chunk << low_bits;
    let mut flags = flags_from_mask(base, free, mask);
    let mut weight = arcs.weight(&flags);
    let mut best = (weight.clone(), tie.key(mask));
    for g in 1u64..(1u64 << low_bits) {
        let bit = g.trailing_zeros() as usize;
        let v = free[k - 1 - bit];
        weight = weight + arcs.flip_delta(&flags, v);
        flags[v] = !flags[v];
        mask ^= 1 << bit;
        let cand = (weight.clone(), tie.key(mask));
        if better(&cand, &best) {
            best = cand;
        }
    }
    best
}

fn exhaustive<T: Score>(
    arcs: &ScaledArcs<T>,
    base: &[bool],
    free: &[usize],
    tie: TieBreak,
) -> (T, u64) {
    let k = free.len();
    let high = k.min(CHUNK_BITS);
    let low = k - high;
    let best = (0..1u64 << high)
        .into_par_iter()
        .map(|chunk| enumerate_chunk(arcs, base, free, chunk, low, tie))
        .reduce_with(|a, b| if better(&b, &a) { b } else { a })
        .expect("at least one chunk");
    (best.0, best.1 .1)
}

/// Globally optimal partition by exhaustive enumeration.
pub fn brute_force(instance: &Instance, cap: usize) -> Result<Solution> {
    brute_force_with(instance, cap, TieBreak::LexMask)
}

pub fn brute_force_with(instance: &Instance, cap: usize, tie: TieBreak) -> Result<Solution> {
    let n = instance.num_vertices();
    if n > cap {
        return Err(Error::TooLarge { vertices: n, cap });
    }
    let (free, base) = free_vertices(instance);
    if free.len() > MAX_FREE_VERTICES {
        return Err(Error::TooLarge {
            vertices: n,
            cap: MAX_FREE_VERTICES,
        });
    }
    let (weight, mask) = match Scaled::new(instance) {
        Scaled::Small(a) => {
            let (w, m) = exhaustive(&a, &base, &free, tie);
            (a.to_rational(&w), m)
        }
        Scaled::Big(a) => {
            let (w, m) = exhaustive(&a, &base, &free, tie);
            (a.to_rational(&w), m)
        }
    };
    Ok(Solution {
        partition: Partition::from_x1_flags(&flags_from_mask(&base, &free, mask)),
        weight,
        method: Method::BruteForce,
    })
}

fn climb<T: Score>(arcs: &ScaledArcs<T>, free: &[usize], flags: &mut [bool]) -> T {
    let mut weight = arcs.weight(flags);
    loop {
        let mut best: Option<(T, usize)> = None;
        for &v in free {
            let d = arcs.flip_delta(flags, v);
            if d > T::zero() && best.as_ref().is_none_or(|(bd, _)| d > *bd) {
                best = Some((d, v));
            }
        }
        match best {
            Some((d, v)) => {
                flags[v] = !flags[v];
                weight = weight + d;
            }
            None => return weight,
        }
    }
}

fn mask_of(flags: &[bool], free: &[usize]) -> u64 {
    free.iter().fold(0u64, |m, &v| (m << 1) | u64::from(flags[v]))
}

fn local_search_scored<T: Score>(
    arcs: &ScaledArcs<T>,
    base: &[bool],
    free: &[usize],
    seed: u64,
    restarts: usize,
) -> (T, Vec<bool>) {
    let k = free.len();
    let exhaustive_starts = k < 63 && (restarts as u128) >= (1u128 << k);
    let runs = if exhaustive_starts { 1usize << k } else { restarts };
    (0..runs)
        .into_par_iter()
        .map(|r| {
            let mut flags = if exhaustive_starts {
                flags_from_mask(base, free, r as u64)
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(r as u64);
                let mut f = base.to_vec();
                for &v in free {
                    f[v] = rng.gen::<bool>();
                }
                f
            };
            let w = climb(arcs, free, &mut flags);
            let key = (w, (0u32, mask_of(&flags, free)));
            (key, flags)
        })
        .reduce_with(|a, b| if better(&b.0, &a.0) { b } else { a })
        .map(|((w, _), flags)| (w, flags))
        .expect("at least one restart")
}

/// Best 1-flip local optimum over `restarts` starts.
///
/// Restart `r` draws its start from ChaCha stream `r` of `seed`. When
/// `restarts >= 2^k` for `k` non-isolated vertices, every assignment is used
/// as a start instead, which makes the result optimal.
pub fn local_search(instance: &Instance, seed: u64, restarts: usize) -> Solution {
    let restarts = restarts.max(1);
    let (free, base) = free_vertices(instance);
    let (weight, flags) = match Scaled::new(instance) {
        Scaled::Small(a) => {
            let (w, f) = local_search_scored(&a, &base, &free, seed, restarts);
            (a.to_rational(&w), f)
        }
        Scaled::Big(a) => {
            let (w, f) = local_search_scored(&a, &base, &free, seed, restarts);
            (a.to_rational(&w), f)
        }
    };
    Solution {
        partition: Partition::from_x1_flags(&flags),
        weight,
        method: Method::LocalSearch,
    }
}

struct Component {
    vertices: Vec<usize>,
    boundary: Vec<usize>,
    arcs: Vec<usize>,
}

/// Splits `V \ separator` into connected components, each with the arcs that
/// touch it and the separator vertices it is attached to.
fn components(instance: &Instance, in_sep: &[bool]) -> (Vec<Component>, Vec<usize>) {
    let n = instance.num_vertices();
    let inc = instance.incidence();
    let mut comp_of = vec![usize::MAX; n];
    let mut comps: Vec<Component> = Vec::new();
    for start in 0..n {
        if in_sep[start] || comp_of[start] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut stack = vec![start];
        comp_of[start] = id;
        let mut vertices = Vec::new();
        while let Some(u) = stack.pop() {
            vertices.push(u);
            for &a in &inc[u] {
                let arc = &instance.arcs()[a];
                let w = if arc.tail == u { arc.head } else { arc.tail };
                if !in_sep[w] && comp_of[w] == usize::MAX {
                    comp_of[w] = id;
                    stack.push(w);
                }
            }
        }
        vertices.sort_unstable();
        comps.push(Component {
            vertices,
            boundary: Vec::new(),
            arcs: Vec::new(),
        });
    }
    let mut separator_arcs = Vec::new();
    for (i, a) in instance.arcs().iter().enumerate() {
        let owner = [a.tail, a.head]
            .into_iter()
            .find(|&v| !in_sep[v])
            .map(|v| comp_of[v]);
        match owner {
            Some(c) => {
                comps[c].arcs.push(i);
                for v in [a.tail, a.head] {
                    if in_sep[v] && !comps[c].boundary.contains(&v) {
                        comps[c].boundary.push(v);
                    }
                }
            }
            None => separator_arcs.push(i),
        }
    }
    for c in &mut comps {
        c.boundary.sort_unstable();
    }
    (comps, separator_arcs)
}

fn arc_sum<T: Score>(arcs: &ScaledArcs<T>, which: &[usize], flags: &[bool]) -> T {
    which.iter().fold(T::zero(), |acc, &a| {
        let (t, h) = arcs.ends[a];
        acc + arcs.table[a][crate::eval::entry_index(flags[t], flags[h])].clone()
    })
}

fn separator_scored<T: Score>(
    instance: &Instance,
    arcs: &ScaledArcs<T>,
    separator: &[usize],
) -> Result<(T, Vec<bool>)> {
    let n = instance.num_vertices();
    let mut in_sep = vec![false; n];
    for &v in separator {
        in_sep[v] = true;
    }
    let sep: Vec<usize> = (0..n).filter(|&v| in_sep[v]).collect();
    let (comps, sep_arcs) = components(instance, &in_sep);
    let iso = instance.isolated();

    // best value and assignment of each component for every boundary assignment
    let mut tables: Vec<Vec<(T, u64)>> = Vec::with_capacity(comps.len());
    for c in &comps {
        if c.vertices.len() > MAX_COMPONENT || c.boundary.len() > MAX_COMPONENT {
            return Err(Error::TooLarge {
                vertices: c.vertices.len().max(c.boundary.len()),
                cap: MAX_COMPONENT,
            });
        }
        let free: Vec<usize> = c.vertices.iter().copied().filter(|&v| !iso[v]).collect();
        let mut table = Vec::with_capacity(1 << c.boundary.len());
        let mut flags = iso.clone();
        for b in 0..1u64 << c.boundary.len() {
            for (i, &v) in c.boundary.iter().enumerate() {
                flags[v] = b >> i & 1 == 1;
            }
            let mut best: Option<(T, (u32, u64))> = None;
            for m in 0..1u64 << free.len() {
                for (i, &v) in free.iter().enumerate() {
                    flags[v] = m >> (free.len() - 1 - i) & 1 == 1;
                }
                let cand = (arc_sum(arcs, &c.arcs, &flags), (0, m));
                if best.as_ref().is_none_or(|bst| better(&cand, bst)) {
                    best = Some(cand);
                }
            }
            let (w, (_, m)) = best.expect("nonempty enumeration");
            table.push((w, m));
        }
        tables.push(table);
    }

    let k = sep.len();
    let best = (0..1u64 << k)
        .into_par_iter()
        .map(|mask| {
            let mut flags = vec![false; n];
            for (i, &v) in sep.iter().enumerate() {
                flags[v] = mask >> (k - 1 - i) & 1 == 1;
            }
            let mut total = arc_sum(arcs, &sep_arcs, &flags);
            for (c, table) in comps.iter().zip(&tables) {
                let b = c
                    .boundary
                    .iter()
                    .enumerate()
                    .fold(0usize, |acc, (i, &v)| acc | (usize::from(flags[v]) << i));
                total = total + table[b].0.clone();
            }
            (total, (0u32, mask))
        })
        .reduce_with(|a, b| if better(&b, &a) { b } else { a })
        .expect("at least one separator assignment");

    let mask = best.1 .1;
    let mut flags = iso.clone();
    for (i, &v) in sep.iter().enumerate() {
        flags[v] = mask >> (k - 1 - i) & 1 == 1;
    }
    for (c, table) in comps.iter().zip(&tables) {
        let b = c
            .boundary
            .iter()
            .enumerate()
            .fold(0usize, |acc, (i, &v)| acc | (usize::from(flags[v]) << i));
        let m = table[b].1;
        let free: Vec<usize> = c.vertices.iter().copied().filter(|&v| !iso[v]).collect();
        for (i, &v) in free.iter().enumerate() {
            flags[v] = m >> (free.len() - 1 - i) & 1 == 1;
        }
    }
    Ok((best.0, flags))
}

/// Exact optimum by enumerating every assignment of `separator` and, for each,
/// solving the remaining components independently by enumeration.
///
/// Exact for any separator; fast when the separator is small and removing it
/// leaves small components (e.g. gadget-heavy reduction outputs).
pub fn exhaustive_with_separator(
    instance: &Instance,
    separator: &[usize],
    cap: usize,
) -> Result<Solution> {
    if separator.len() > cap {
        return Err(Error::TooLarge {
            vertices: separator.len(),
            cap,
        });
    }
    let (weight, flags) = match Scaled::new(instance) {
        Scaled::Small(a) => {
            let (w, f) = separator_scored(instance, &a, separator)?;
            (a.to_rational(&w), f)
        }
        Scaled::Big(a) => {
            let (w, f) = separator_scored(instance, &a, separator)?;
            (a.to_rational(&w), f)
        }
    };
    Ok(Solution {
        partition: Partition::from_x1_flags(&flags),
        weight,
        method: Method::BruteForce,
    })
}
