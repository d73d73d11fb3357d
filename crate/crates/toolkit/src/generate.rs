//! Seeded random instance generation.
//!
//! A [`GeneratorSpec`] fully determines a graph: node ids `0..n-1`, weights
//! drawn uniformly from a million-step grid spanning `[weight_low,
//! weight_high]`, and the edge set taken as the first `round(density *
//! C(n,2))` pairs of a seeded shuffle of all candidate pairs. The same spec
//! always yields byte-identical output, independent of platform.

use mwis_core::{Rational, Weight, WeightedGraph};
use num::BigInt;
use num::ToPrimitive;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("node count must be positive")]
    InvalidNodeCount,
    #[error("density {0} is outside [0, 1]")]
    InvalidDensity(Rational),
    #[error("invalid weight range [{low}, {high}]: bounds must be positive and ordered")]
    InvalidWeightRange { low: Rational, high: Rational },
}

/// Everything needed to reproduce one random graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub node_count: u32,
    /// Edge density relative to the complete graph: `|E| / C(n,2)`.
    pub density: Rational,
    pub weight_low: Rational,
    pub weight_high: Rational,
    pub seed: u64,
}

fn ratio(num: u64, den: u64) -> Rational {
    Rational::new(num.into(), den.into())
}

impl GeneratorSpec {
    /// Spec with the default weight range `[0.1, 100.0]`.
    pub fn new(node_count: u32, density: Rational, seed: u64) -> Self {
        GeneratorSpec {
            node_count,
            density,
            weight_low: ratio(1, 10),
            weight_high: ratio(100, 1),
            seed,
        }
    }

    pub fn validate(&self) -> Result<(), GeneratorError> {
        if self.node_count == 0 {
            return Err(GeneratorError::InvalidNodeCount);
        }
        let zero = Rational::from_integer(0.into());
        let one = Rational::from_integer(1.into());
        if self.density < zero || self.density > one {
            return Err(GeneratorError::InvalidDensity(self.density.clone()));
        }
        if self.weight_low <= zero || self.weight_low > self.weight_high {
            return Err(GeneratorError::InvalidWeightRange {
                low: self.weight_low.clone(),
                high: self.weight_high.clone(),
            });
        }
        Ok(())
    }

    /// `density * C(n,2)` rounded half-up, computed exactly.
    pub fn target_edge_count(&self) -> usize {
        let n = BigInt::from(self.node_count);
        let pairs = &n * (&n - BigInt::from(1)) / BigInt::from(2);
        let scaled = self.density.numer() * pairs;
        let rounded = (BigInt::from(2) * scaled + self.density.denom())
            / (BigInt::from(2) * self.density.denom());
        rounded.to_usize().expect("edge count fits usize")
    }
}

const WEIGHT_GRID: u64 = 1_000_000;

pub fn generate_graph(spec: &GeneratorSpec) -> Result<WeightedGraph, GeneratorError> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let span = &spec.weight_high - &spec.weight_low;
    let nodes = (0..spec.node_count)
        .map(|id| {
            let step = rng.random_range(0..=WEIGHT_GRID);
            let weight = &spec.weight_low + &span * ratio(step, WEIGHT_GRID);
            (
                mwis_core::NodeId(id),
                Weight::new(weight).expect("grid weights are positive"),
            )
        })
        .collect();
    let mut pairs = Vec::new();
    for u in 0..spec.node_count {
        for v in (u + 1)..spec.node_count {
            pairs.push((mwis_core::NodeId(u), mwis_core::NodeId(v)));
        }
    }
    pairs.shuffle(&mut rng);
    pairs.truncate(spec.target_edge_count());
    Ok(WeightedGraph::build(nodes, pairs).expect("generated graph is valid"))
}

/// Node and edge counts of the 43-instance benchmark suite, from 5 nodes and
/// 6 edges up to 161 nodes and 4718 edges.
pub const SUITE_SIZES: [(u32, u64); 43] = [
    (5, 6),
    (5, 9),
    (12, 29),
    (14, 29),
    (17, 41),
    (17, 44),
    (17, 69),
    (18, 52),
    (6, 6),
    (20, 0),
    (25, 8),
    (26, 50),
    (26, 101),
    (27, 115),
    (28, 147),
    (30, 155),
    (31, 135),
    (31, 198),
    (34, 325),
    (36, 216),
    (39, 264),
    (39, 313),
    (43, 336),
    (45, 388),
    (46, 425),
    (53, 583),
    (54, 465),
    (56, 707),
    (59, 726),
    (59, 726),
    (61, 723),
    (63, 840),
    (67, 980),
    (79, 1238),
    (89, 1387),
    (89, 1387),
    (89, 1387),
    (110, 2184),
    (110, 2184),
    (126, 3108),
    (126, 3108),
    (161, 4718),
    (161, 4718),
];

/// The benchmark suite as generator specs. Rows that share a size get
/// distinct per-row seeds derived from `master_seed`. Suite weights are
/// drawn from [64, 100], which reproduces the recorded per-instance weight
/// totals of the original benchmark (mean node weight about 82); the
/// generator default range is much wider and is meant for ad-hoc instances.
pub fn standard_suite(master_seed: u64) -> Vec<GeneratorSpec> {
    SUITE_SIZES
        .iter()
        .enumerate()
        .map(|(row, &(n, m))| {
            let pairs = u64::from(n) * (u64::from(n) - 1) / 2;
            let density = if pairs == 0 {
                Rational::from_integer(0.into())
            } else {
                ratio(m, pairs)
            };
            let seed = master_seed ^ 0x9E37_79B9_7F4A_7C15u64.wrapping_mul(row as u64 + 1);
            GeneratorSpec {
                weight_low: Rational::from_integer(64.into()),
                weight_high: Rational::from_integer(100.into()),
                ..GeneratorSpec::new(n, density, seed)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use mwis_core::{greedy_mis, solve_mwis, SelectorKind};

    #[test]
    fn zero_density_means_no_edges_and_everyone_wins() {
        let spec = GeneratorSpec::new(10, Rational::from_integer(0.into()), 11);
        let g = generate_graph(&spec).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(solve_mwis(&g).solution.len(), 10);
        assert_eq!(greedy_mis(&g, SelectorKind::Gwmin).len(), 10);
    }

    #[test]
    fn full_density_means_a_complete_graph_and_one_heavy_winner() {
        let spec = GeneratorSpec::new(8, Rational::from_integer(1.into()), 3);
        let g = generate_graph(&spec).unwrap();
        assert_eq!(g.edge_count(), 8 * 7 / 2);
        let heaviest = g
            .nodes()
            .map(|id| g.weight(id).unwrap().value().clone())
            .max()
            .unwrap();
        let out = solve_mwis(&g);
        assert_eq!(out.solution.len(), 1);
        assert_eq!(out.solution.total_weight(), &heaviest);
    }

    #[test]
    fn generator_output_is_pinned_across_versions() {
        // Frozen rendering of one instance: fails loudly if the RNG stream,
        // the weight grid, or the shuffle ever change behaviour.
        let g = generate_graph(&GeneratorSpec::new(6, ratio(1, 2), 42)).unwrap();
        let expected = "\
p 6 8
n 0 68.2214104
n 1 95.0325724
n 2 42.8088484
n 3 62.7733639
n 4 28.9305406
n 5 15.0809041
e 0 1
e 0 5
e 1 4
e 1 5
e 2 3
e 2 5
e 3 5
e 4 5
";
        assert_eq!(crate::format::serialize_graph(&g), expected);
    }

    #[test]
    fn identical_specs_give_identical_graphs() {
        let spec = GeneratorSpec::new(30, ratio(1, 3), 99);
        assert_eq!(generate_graph(&spec).unwrap(), generate_graph(&spec).unwrap());
        let reseeded = GeneratorSpec { seed: 100, ..spec.clone() };
        assert_ne!(generate_graph(&spec).unwrap(), generate_graph(&reseeded).unwrap());
    }

    #[test]
    fn weights_stay_on_the_requested_range() {
        let spec = GeneratorSpec {
            node_count: 40,
            density: ratio(1, 2),
            weight_low: ratio(5, 2),
            weight_high: ratio(7, 2),
            seed: 123,
        };
        let g = generate_graph(&spec).unwrap();
        for id in g.nodes() {
            let w = g.weight(id).unwrap().value();
            assert!(w >= &ratio(5, 2) && w <= &ratio(7, 2));
        }
        let flat = GeneratorSpec {
            weight_low: ratio(3, 1),
            weight_high: ratio(3, 1),
            ..spec
        };
        let g = generate_graph(&flat).unwrap();
        for id in g.nodes() {
            assert_eq!(g.weight(id).unwrap().value(), &ratio(3, 1));
        }
    }

    #[test]
    fn edge_targets_round_half_up() {
        let spec = GeneratorSpec::new(4, ratio(1, 3), 0);
        assert_eq!(spec.target_edge_count(), 2);
        let spec = GeneratorSpec::new(4, ratio(1, 4), 0);
        assert_eq!(spec.target_edge_count(), 2);
        let spec = GeneratorSpec::new(4, ratio(1, 5), 0);
        assert_eq!(spec.target_edge_count(), 1);
        assert_eq!(generate_graph(&spec).unwrap().edge_count(), 1);
    }

    #[test]
    fn rejects_invalid_specs() {
        let bad_density = GeneratorSpec::new(5, ratio(3, 2), 0);
        assert!(matches!(
            generate_graph(&bad_density),
            Err(GeneratorError::InvalidDensity(_))
        ));
        let no_nodes = GeneratorSpec::new(0, ratio(1, 2), 0);
        assert_eq!(
            generate_graph(&no_nodes).unwrap_err(),
            GeneratorError::InvalidNodeCount
        );
        let bad_range = GeneratorSpec {
            weight_low: ratio(4, 1),
            weight_high: ratio(2, 1),
            ..GeneratorSpec::new(5, ratio(1, 2), 0)
        };
        assert!(matches!(
            generate_graph(&bad_range),
            Err(GeneratorError::InvalidWeightRange { .. })
        ));
    }

    #[test]
    fn suite_regenerates_the_recorded_sizes() {
        let suite = standard_suite(2024);
        assert_eq!(suite.len(), 43);
        for (spec, &(n, m)) in suite.iter().zip(SUITE_SIZES.iter()) {
            assert_eq!(spec.target_edge_count() as u64, m, "suite row for {n} nodes");
        }
        // Rows with equal sizes still get different instances.
        let twin_a = generate_graph(&suite[41]).unwrap();
        let twin_b = generate_graph(&suite[42]).unwrap();
        assert_eq!(twin_a.node_count(), 161);
        assert_eq!(twin_a.edge_count(), 4718);
        assert_eq!(twin_b.edge_count(), 4718);
        assert_ne!(twin_a, twin_b);
    }
}
