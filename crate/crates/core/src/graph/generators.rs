use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// Identifier of the random generator algorithm, recorded in run metadata so
/// that a stored graph can be regenerated from its seed.
pub const RANDOM_GRAPH_ALGORITHM: &str = "chacha8-shuffle-delete-v1";

/// The complete graph `K_n`.
pub fn complete_graph(n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    for i in 0..n {
        for j in (i + 1)..n {
            g.set(i, j, true);
        }
    }
    Ok(g)
}

/// Circulant graph where vertex `j` is joined to `j ± 1, …, j ± k (mod n)`.
pub fn circulant_graph(n: usize, k: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    let k_max = (n - 1) / 2;
    if k == 0 || k > k_max {
        return Err(GraphError::InvalidParameter {
            name: "k",
            reason: format!("half-bandwidth must lie in 1..={k_max} for n = {n}, got {k}"),
        });
    }
    for j in 0..n {
        for step in 1..=k {
            g.set(j, (j + step) % n, true);
        }
    }
    Ok(g)
}

/// Smallest integer degree satisfying `deg ≥ mu·(n−1)`.
pub(crate) fn degree_floor(n: usize, mu_target: f64) -> usize {
    // Absorb representation error so that e.g. 0.8·50 counts as 40, not 41.
    let raw = mu_target * (n - 1) as f64;
    ((raw - 1e-9).ceil().max(0.0) as usize).min(n - 1)
}

/// Random graph with every degree at least `⌈mu_target·(n−1)⌉`.
///
/// Starts from `K_n` and visits all vertex pairs in a seeded random order,
/// deleting each edge unless that would push an endpoint below the floor.
/// The output is a deterministic function of `(n, mu_target, seed)`.
pub fn random_min_degree_graph(n: usize, mu_target: f64, seed: u64) -> Result<Graph, GraphError> {
    if !(mu_target > 0.0 && mu_target <= 1.0) {
        return Err(GraphError::InvalidParameter {
            name: "mu",
            reason: format!("target density must lie in (0, 1], got {mu_target}"),
        });
    }
    let mut g = complete_graph(n)?;
    let floor = degree_floor(n, mu_target);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pairs.shuffle(&mut rng);
    for (i, j) in pairs {
        if g.degree(i) > floor && g.degree(j) > floor {
            g.set(i, j, false);
        }
    }
    Ok(g)
}

/// Compact textual generator description: `complete:n`, `circulant:n,k`
/// or `random:n,mu,seed`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GeneratorSpec {
    Complete { n: usize },
    Circulant { n: usize, k: usize },
    Random { n: usize, mu: f64, seed: u64 },
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<Graph, GraphError> {
        match *self {
            Self::Complete { n } => complete_graph(n),
            Self::Circulant { n, k } => circulant_graph(n, k),
            Self::Random { n, mu, seed } => random_min_degree_graph(n, mu, seed),
        }
    }

    pub fn algorithm(&self) -> Option<&'static str> {
        matches!(self, Self::Random { .. }).then_some(RANDOM_GRAPH_ALGORITHM)
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Complete { n } => write!(f, "complete:{n}"),
            Self::Circulant { n, k } => write!(f, "circulant:{n},{k}"),
            Self::Random { n, mu, seed } => write!(f, "random:{n},{mu},{seed}"),
        }
    }
}

fn spec_field<T: FromStr>(raw: Option<&str>, name: &'static str) -> Result<T, GraphError> {
    let raw = raw.ok_or(GraphError::InvalidParameter {
        name,
        reason: "missing".into(),
    })?;
    raw.trim().parse().map_err(|_| GraphError::InvalidParameter {
        name,
        reason: format!("cannot parse {raw:?}"),
    })
}

impl FromStr for GeneratorSpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (family, args) = s.split_once(':').ok_or_else(|| GraphError::InvalidParameter {
            name: "graph",
            reason: format!("expected `family:args`, got {s:?}"),
        })?;
        let mut it = args.split(',');
        let spec = match family {
            "complete" => Self::Complete {
                n: spec_field(it.next(), "n")?,
            },
            "circulant" => Self::Circulant {
                n: spec_field(it.next(), "n")?,
                k: spec_field(it.next(), "k")?,
            },
            "random" => Self::Random {
                n: spec_field(it.next(), "n")?,
                mu: spec_field(it.next(), "mu")?,
                seed: spec_field(it.next(), "seed")?,
            },
            other => {
                return Err(GraphError::InvalidParameter {
                    name: "graph",
                    reason: format!("unknown family {other:?}"),
                })
            }
        };
        if it.next().is_some() {
            return Err(GraphError::InvalidParameter {
                name: "graph",
                reason: format!("too many arguments in {s:?}"),
            });
        }
        Ok(spec)
    }
}
