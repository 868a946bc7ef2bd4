//! Fixed-seed workloads shared by the benchmarks.

use mwdp_core::graph::UndirectedGraph;
use mwdp_core::random;
use mwdp_core::{Instance, Kind, Matrix2x2};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// General instance over three property-(a) matrices, arc density 1/2.
pub fn tractable(n: usize, seed: u64) -> Instance {
    let mut r = rng(seed);
    let family: Vec<Matrix2x2> = (0..3).map(|_| random::matrix_a(&mut r)).collect();
    random::instance(&mut r, Kind::General, n, 0.5, &family)
}

/// General instance over unrestricted matrices; almost always hard.
pub fn unrestricted(n: usize, seed: u64) -> Instance {
    let mut r = rng(seed);
    let family: Vec<Matrix2x2> = (0..3).map(|_| random::matrix(&mut r)).collect();
    random::instance(&mut r, Kind::General, n, 0.5, &family)
}

pub fn graph(n: usize, seed: u64) -> UndirectedGraph {
    random::graph(&mut rng(seed), n, 0.5)
}

/// `(M, R)` for the max-cut reduction with the (c)-not-(b) partner.
pub fn bc_pair(seed: u64) -> (Matrix2x2, Matrix2x2) {
    random::bc_pair(&mut rng(seed))
}
