//! Local search over point-line correspondences by swapping the images of
//! two points, keeping a tabu set of every correspondence already visited.

mod neighborhood;
mod stats;

use std::collections::HashSet;
use std::fmt::Write as _;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use neighborhood::{
    FullScan, NeighborhoodFactory, NeighborhoodParams, NeighborhoodRegistry, SwapNeighborhood,
    WorstPoints,
};
pub use stats::{
    correlation_census, random_correspondence, random_stats, Census, CensusRow, RandomStats,
};

use crate::correspondence::{estimated_score, BadnessMode, CoverResult, PointLineCorrespondence};
use crate::error::{Error, Result};
use crate::incidence::{enumerate_correlations, ProjectivePlane};
use crate::presentation::TrianglePresentation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Score that ends the search, normally `(q+1)(q²+q+1)`.
    pub target: usize,
    /// Registered neighbourhood name.
    pub neighborhood: String,
    pub worst_points: usize,
    pub max_steps: usize,
    /// Give up after this many steps without a new best score.
    pub restart_after_stall: usize,
    pub rng_seed: u64,
    pub badness_mode: BadnessMode,
}

impl SearchConfig {
    pub fn for_plane(plane: &ProjectivePlane) -> Self {
        SearchConfig {
            target: plane.flag_count(),
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.worst_points == 0 {
            return Err(Error::InvalidConfig(
                "worst_points must be at least 1".into(),
            ));
        }
        Ok(())
    }

    fn params(&self) -> NeighborhoodParams {
        NeighborhoodParams {
            worst_points: self.worst_points,
            badness_mode: self.badness_mode,
        }
    }
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            target: 910,
            neighborhood: "full-scan".into(),
            worst_points: 5,
            max_steps: 1000,
            restart_after_stall: 100,
            rng_seed: 0,
            badness_mode: BadnessMode::BothEndpoints,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchState {
    pub current: PointLineCorrespondence,
    pub cover: CoverResult,
    pub visited: HashSet<Vec<usize>>,
    pub best_score: usize,
    pub step: usize,
    /// `(step, score)`, starting with step 0.
    pub trace: Vec<(usize, usize)>,
}

impl SearchState {
    pub fn new(plane: &ProjectivePlane, start: PointLineCorrespondence) -> Self {
        let cover = estimated_score(plane, &start);
        let mut visited = HashSet::new();
        visited.insert(start.image().to_vec());
        SearchState {
            best_score: cover.score,
            trace: vec![(0, cover.score)],
            current: start,
            cover,
            visited,
            step: 0,
        }
    }

    pub fn score(&self) -> usize {
        self.cover.score
    }

    /// Trace as CSV with header `step,score`.
    pub fn trace_csv(&self) -> String {
        let mut out = String::from("step,score\n");
        for (step, score) in &self.trace {
            writeln!(out, "{step},{score}").unwrap();
        }
        out
    }

    /// Current correspondence in the usual text format, with step, score and
    /// visited-set size as comments. The visited set itself is not saved.
    pub fn checkpoint(&self) -> String {
        format!(
            "# step {}\n# score {}\n# visited {}\n{}",
            self.step,
            self.score(),
            self.visited.len(),
            self.current.to_text()
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepOutcome {
    Moved {
        a: usize,
        b: usize,
        score: usize,
        /// The chosen neighbour's cover did not succeed; its score is the
        /// number of covered edges.
        failed_cover: bool,
    },
    Exhausted,
}

/// Evaluate every unvisited neighbour offered by `nb` and move to the best
/// one (first in candidate order on ties).
pub fn best_swap_step(
    plane: &ProjectivePlane,
    state: &mut SearchState,
    nb: &dyn SwapNeighborhood,
) -> StepOutcome {
    let pairs = nb.candidates(&state.current, &state.cover);
    let current = &state.current;
    let visited = &state.visited;
    let best = pairs
        .par_iter()
        .enumerate()
        .filter_map(|(i, &(a, b))| {
            let next = current.swap(a, b);
            if a == b || visited.contains(next.image()) {
                return None;
            }
            let cover = estimated_score(plane, &next);
            Some((cover.score, std::cmp::Reverse(i), next, cover))
        })
        .max_by(|x, y| (x.0, x.1).cmp(&(y.0, y.1)));
    let Some((score, std::cmp::Reverse(i), next, cover)) = best else {
        return StepOutcome::Exhausted;
    };
    let (a, b) = pairs[i];
    let failed_cover = !cover.is_success();
    state.visited.insert(next.image().to_vec());
    state.current = next;
    state.cover = cover;
    state.step += 1;
    state.best_score = state.best_score.max(score);
    state.trace.push((state.step, score));
    StepOutcome::Moved {
        a,
        b,
        score,
        failed_cover,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found {
        lambda: PointLineCorrespondence,
        triangles: TrianglePresentation,
        steps: usize,
    },
    Stalled {
        best_score: usize,
        steps: usize,
        reason: StallReason,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StallReason {
    MaxSteps,
    Exhausted,
    NoImprovement,
}

#[derive(Debug, Clone)]
pub struct SearchRun {
    pub outcome: SearchOutcome,
    pub state: SearchState,
}

impl SearchRun {
    pub fn is_found(&self) -> bool {
        matches!(self.outcome, SearchOutcome::Found { .. })
    }
}

fn reached(state: &SearchState, target: usize) -> bool {
    state.cover.is_success() && state.score() >= target
}

/// Step from `start` until the target score is reached, or until
/// `max_steps`, exhaustion, or `restart_after_stall` steps without a new
/// best score.
pub fn run_search(
    plane: &ProjectivePlane,
    start: PointLineCorrespondence,
    config: &SearchConfig,
    registry: &NeighborhoodRegistry,
) -> Result<SearchRun> {
    config.validate()?;
    let nb = registry.create(&config.neighborhood, &config.params())?;
    let mut state = SearchState::new(plane, start);
    let mut since_best = 0;
    let reason = loop {
        if reached(&state, config.target) {
            let triangles = TrianglePresentation::from_cover(plane.n(), &state.cover);
            let outcome = SearchOutcome::Found {
                lambda: state.current.clone(),
                triangles,
                steps: state.step,
            };
            return Ok(SearchRun { outcome, state });
        }
        if state.step >= config.max_steps {
            break StallReason::MaxSteps;
        }
        if since_best >= config.restart_after_stall {
            break StallReason::NoImprovement;
        }
        let before = state.best_score;
        if best_swap_step(plane, &mut state, nb.as_ref()) == StepOutcome::Exhausted {
            break StallReason::Exhausted;
        }
        since_best = if state.best_score > before {
            0
        } else {
            since_best + 1
        };
    };
    let outcome = SearchOutcome::Stalled {
        best_score: state.best_score,
        steps: state.step,
        reason,
    };
    Ok(SearchRun { outcome, state })
}

/// Run from correlations of the plane, restarting from a fresh one each
/// time a run stalls. Starting correlations are taken from the first
/// `pool` in enumeration order, chosen by a generator seeded with
/// `config.rng_seed`.
pub fn search_from_correlations(
    plane: &ProjectivePlane,
    config: &SearchConfig,
    registry: &NeighborhoodRegistry,
    pool: usize,
    restarts: usize,
) -> Result<Vec<SearchRun>> {
    let correlations = enumerate_correlations(plane, Some(pool.max(1)));
    if correlations.is_empty() {
        return Ok(Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.rng_seed);
    let mut runs = Vec::new();
    for _ in 0..restarts.max(1) {
        let c = &correlations[rng.gen_range(0..correlations.len())];
        let run = run_search(
            plane,
            PointLineCorrespondence::from_correlation(c),
            config,
            registry,
        )?;
        let found = run.is_found();
        runs.push(run);
        if found {
            break;
        }
    }
    Ok(runs)
}
