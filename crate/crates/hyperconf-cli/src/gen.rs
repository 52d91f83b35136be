//! Built-in hypergraph generators: named examples, the nonconformal
//! family with prescribed dual dimension, and a seeded random generator.

use anyhow::{anyhow, bail, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hyperconf::uct::gurvich_makino;
use hyperconf::Hypergraph;

/// Small named instances used throughout the test fixtures.
pub fn named_fixture(name: &str) -> Option<Hypergraph> {
    let (n, edges): (usize, Vec<Vec<u32>>) = match name {
        "c5" => (
            5,
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 0]],
        ),
        "ex33" => (
            6,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 3],
                vec![1, 4],
                vec![2, 5],
                vec![3, 4, 5],
            ],
        ),
        "ex34" => (3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]),
        "ex35" => (
            6,
            vec![
                vec![0, 3, 4],
                vec![0, 3, 5],
                vec![1, 3, 4],
                vec![1, 4, 5],
                vec![2, 3, 5],
                vec![2, 4, 5],
                vec![3, 4, 5],
            ],
        ),
        _ => return None,
    };
    Some(Hypergraph::build(n, &edges).expect("fixtures are valid"))
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Seeded random hypergraph: `m` distinct nonempty edges of size at most
/// `k`. The same seed yields the same edge list on every platform.
pub fn random_hypergraph(n: u32, m: u32, k: u32, seed: u64) -> Result<Hypergraph> {
    if n == 0 {
        bail!("need at least one vertex");
    }
    if k == 0 || k > n {
        bail!("edge size bound must satisfy 1 <= k <= n (got k={k}, n={n})");
    }
    let capacity: u128 = (1..=k as u64).map(|s| binomial(n as u64, s)).sum();
    if m as u128 > capacity {
        bail!("only {capacity} distinct nonempty edges of size at most {k} exist on {n} vertices, cannot draw {m}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = std::collections::BTreeSet::new();
    let mut edges: Vec<Vec<u32>> = Vec::with_capacity(m as usize);
    let mut attempts: u64 = 0;
    while (edges.len() as u32) < m {
        attempts += 1;
        if attempts > 1000 + 500 * m as u64 {
            bail!("generator stalled drawing {m} distinct edges; lower m or raise k");
        }
        let s = rng.gen_range(1..=k);
        let mut edge: Vec<u32> = Vec::with_capacity(s as usize);
        while (edge.len() as u32) < s {
            let v = rng.gen_range(0..n);
            if !edge.contains(&v) {
                edge.push(v);
            }
        }
        edge.sort_unstable();
        if seen.insert(edge.clone()) {
            edges.push(edge);
        }
    }
    Hypergraph::build(n as usize, &edges).map_err(|e| anyhow!(e.to_string()))
}

/// Dispatches a `gen` argument list.
pub fn generate(spec: &[String]) -> Result<Hypergraph> {
    match spec {
        [name] => named_fixture(name).ok_or_else(|| {
            anyhow!("unknown generator {name:?}; try c5, ex33, ex34, ex35, gm, random")
        }),
        [gm, d, k, l] if gm == "gm" => {
            let parse = |t: &String| {
                t.parse::<usize>()
                    .map_err(|_| anyhow!("invalid generator parameter {t:?}"))
            };
            gurvich_makino(parse(d)?, parse(k)?, parse(l)?).map_err(|e| anyhow!(e.to_string()))
        }
        [random, n, m, k, seed] if random == "random" => {
            let parse_u32 = |t: &String| {
                t.parse::<u32>()
                    .map_err(|_| anyhow!("invalid generator parameter {t:?}"))
            };
            let seed = seed
                .parse::<u64>()
                .map_err(|_| anyhow!("invalid seed {seed:?}"))?;
            random_hypergraph(parse_u32(n)?, parse_u32(m)?, parse_u32(k)?, seed)
        }
        _ => bail!(
            "usage: gen {{c5 | ex33 | ex34 | ex35 | gm <d> <k> <l> | random <n> <m> <k> <seed>}}"
        ),
    }
}
