use std::collections::BTreeMap;
use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::correspondence::{
    correlation_ab, estimated_score, exact_score_correlation, PointLineCorrespondence,
};
use crate::incidence::{for_each_correlation, ProjectivePlane};

/// Uniform random bijection points → lines.
pub fn random_correspondence<R: Rng + ?Sized>(
    plane: &ProjectivePlane,
    rng: &mut R,
) -> PointLineCorrespondence {
    let mut image: Vec<usize> = (0..plane.n()).collect();
    image.shuffle(rng);
    PointLineCorrespondence::new(image).expect("a shuffle is a bijection")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RandomStats {
    pub samples: usize,
    pub seed: u64,
    /// Mean and standard deviation over covers that succeeded.
    pub mean: f64,
    pub std_dev: f64,
    pub min: usize,
    pub max: usize,
    pub fails: usize,
}

/// Estimated scores of `samples` random correspondences drawn from one
/// ChaCha8 stream seeded with `seed`.
pub fn random_stats(plane: &ProjectivePlane, samples: usize, seed: u64) -> RandomStats {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut scores = Vec::with_capacity(samples);
    let mut fails = 0;
    for _ in 0..samples {
        let r = estimated_score(plane, &random_correspondence(plane, &mut rng));
        if r.is_success() {
            scores.push(r.score as f64);
        } else {
            fails += 1;
        }
    }
    let k = scores.len().max(1) as f64;
    let mean = scores.iter().sum::<f64>() / k;
    let var = scores.iter().map(|s| (s - mean).powi(2)).sum::<f64>() / k;
    RandomStats {
        samples,
        seed,
        mean,
        std_dev: var.sqrt(),
        min: scores.iter().fold(usize::MAX, |m, &s| m.min(s as usize)),
        max: scores.iter().fold(0, |m, &s| m.max(s as usize)),
        fails,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusRow {
    pub a: usize,
    pub b: usize,
    pub exact: i64,
    pub count: usize,
    /// Mean estimated score over successful covers.
    pub mean_estimated: f64,
    pub max_estimated: usize,
    pub fails: usize,
    /// Successful covers with `s > S`; always zero for a correct cover.
    pub above_exact: usize,
}

impl CensusRow {
    pub fn deficit(&self) -> f64 {
        self.exact as f64 - self.mean_estimated
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Census {
    pub total: usize,
    pub rows: Vec<CensusRow>,
}

/// Score every correlation (or the first `limit`), grouped by `(a, b)`.
pub fn correlation_census(plane: &ProjectivePlane, limit: Option<usize>) -> Census {
    #[derive(Default)]
    struct Acc {
        count: usize,
        sum: usize,
        successes: usize,
        max: usize,
        above: usize,
    }
    let mut groups: BTreeMap<(usize, usize), Acc> = BTreeMap::new();
    let mut total = 0;
    for_each_correlation(plane, limit, |c| {
        total += 1;
        let (a, b) = correlation_ab(plane, &c);
        let exact = exact_score_correlation(plane.order(), a, b);
        let cover = estimated_score(plane, &PointLineCorrespondence::from_correlation(&c));
        let acc = groups.entry((a, b)).or_default();
        acc.count += 1;
        if cover.is_success() {
            acc.successes += 1;
            acc.sum += cover.score;
            acc.max = acc.max.max(cover.score);
            if cover.score as i64 > exact {
                acc.above += 1;
            }
        }
        ControlFlow::Continue(())
    });
    let rows = groups
        .into_iter()
        .map(|((a, b), acc)| CensusRow {
            a,
            b,
            exact: exact_score_correlation(plane.order(), a, b),
            count: acc.count,
            mean_estimated: if acc.successes == 0 {
                0.0
            } else {
                acc.sum as f64 / acc.successes as f64
            },
            max_estimated: acc.max,
            fails: acc.count - acc.successes,
            above_exact: acc.above,
        })
        .collect();
    Census { total, rows }
}
