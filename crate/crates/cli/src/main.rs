mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use trilattice::correspondence::{estimated_score, BadnessMode, PointLineCorrespondence};
use trilattice::fixtures;
use trilattice::groupalg::abelianization;
use trilattice::incidence::{is_baer_subplane, ProjectivePlane};
use trilattice::presentation::{
    check_parity, export_group_presentation, restrict, verify_presentation, ExportFormat,
    TrianglePresentation, Verdict,
};
use trilattice::scab::{build_scab, generalized_triangle_defect, residue_plane_iso, ScabVertex};
use trilattice::search::{
    correlation_census, random_stats, run_search, search_from_correlations, NeighborhoodRegistry,
    SearchConfig, SearchOutcome, SearchRun,
};
use trilattice::Error;

use report::Report;

/// Inputs may be file paths or `builtin:NAME`, where NAME is one of
/// hughes9.plane, hughes9.lambda, hughes9.tri, hughes9_baer.tri, pg2, pg3.
#[derive(Parser)]
#[command(
    name = "trilattice",
    version,
    about = "Projective planes, point-line correspondences and triangle presentations"
)]
struct Cli {
    /// Print the report as a JSON object.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the projective-plane axioms of an incidence table.
    VerifyPlane { plane: String },
    /// Classify a triangle set as FULL, PARTIAL or INVALID.
    VerifyPresentation {
        plane: String,
        lambda: String,
        triangles: String,
    },
    /// Estimated score of a correspondence.
    Score {
        plane: String,
        lambda: String,
        /// Write the triangles of the cover here.
        #[arg(long)]
        triangles: Option<PathBuf>,
    },
    /// Group the correlations by (a, b) and score them.
    CensusCorrelations {
        plane: String,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Swap search for a correspondence with a full cover.
    Search(SearchArgs),
    /// Restrict a presentation to a Baer subplane.
    RestrictBaer {
        plane: String,
        lambda: String,
        triangles: String,
        /// Subplane points (defaults to the distinguished Hughes subplane).
        #[arg(long, value_delimiter = ',')]
        points: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        lines: Option<Vec<usize>>,
        #[arg(long)]
        out_lambda: Option<PathBuf>,
        #[arg(long)]
        out_triangles: Option<PathBuf>,
    },
    /// Invariant factors of the abelianized triangle group.
    Abelianize {
        triangles: String,
        /// Number of generators (default: largest index + 1).
        #[arg(long)]
        generators: Option<usize>,
    },
    /// Check that the union of the given lines defines a map onto C2.
    CheckParity {
        plane: String,
        triangles: String,
        #[arg(long, value_delimiter = ',', required = true)]
        lines: Vec<usize>,
    },
    /// Build the chamber complex and check its three residues.
    ScabCheck {
        plane: String,
        triangles: String,
        /// Skip the isomorphism search against the plane.
        #[arg(long)]
        no_iso: bool,
    },
    /// Estimated scores of seeded random correspondences.
    StatsRandom {
        plane: String,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write the group presentation of a triangle set.
    ExportGap {
        triangles: String,
        #[arg(long)]
        generators: Option<usize>,
        /// gap or generic
        #[arg(long, default_value = "gap")]
        format: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SearchArgs {
    plane: String,
    /// Starting correspondence; without it the search starts from
    /// correlations chosen by the seed.
    #[arg(long)]
    start: Option<String>,
    /// full-scan or worst-points
    #[arg(long, default_value = "full-scan")]
    variant: String,
    #[arg(long, default_value_t = 5)]
    worst_points: usize,
    #[arg(long, default_value_t = 1000)]
    max_steps: usize,
    #[arg(long, default_value_t = 100)]
    stall: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// both or origin
    #[arg(long, default_value = "both")]
    badness: String,
    /// Score to reach (default: number of flags).
    #[arg(long)]
    target: Option<usize>,
    #[arg(long, default_value_t = 1)]
    restarts: usize,
    /// Correlations to draw starting points from.
    #[arg(long, default_value_t = 64)]
    pool: usize,
    #[arg(long)]
    trace: Option<PathBuf>,
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    #[arg(long)]
    out_lambda: Option<PathBuf>,
    #[arg(long)]
    out_triangles: Option<PathBuf>,
}

enum Failure {
    /// A check ran and failed; the report is still printed.
    Invalid(Report),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<Report, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(report) => {
            print!("{}", report.render(cli.json));
            ExitCode::SUCCESS
        }
        Err(Failure::Invalid(report)) => {
            print!("{}", report.render(cli.json));
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_input(source: &str) -> Result<String, Failure> {
    if let Some(name) = source.strip_prefix("builtin:") {
        return fixtures::builtin(name)
            .map(str::to_string)
            .ok_or_else(|| Failure::Usage(format!("unknown builtin `{name}`")));
    }
    fs::read_to_string(source).map_err(|e| Failure::Usage(format!("{source}: {e}")))
}

fn write_output(path: &PathBuf, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_plane(source: &str) -> Result<ProjectivePlane, Failure> {
    match source {
        "builtin:pg2" => return Ok(ProjectivePlane::difference_set(2)?),
        "builtin:pg3" => return Ok(ProjectivePlane::difference_set(3)?),
        _ => {}
    }
    Ok(ProjectivePlane::parse(&read_input(source)?)?)
}

fn load_lambda(source: &str, plane: &ProjectivePlane) -> Result<PointLineCorrespondence, Failure> {
    Ok(PointLineCorrespondence::parse_for(
        &read_input(source)?,
        plane,
    )?)
}

fn load_triangles(source: &str, n: Option<usize>) -> Result<TrianglePresentation, Failure> {
    let text = read_input(source)?;
    let n = match n {
        Some(n) => n,
        None => {
            // largest index + 1; parse with a generous bound first
            let probe = TrianglePresentation::parse(&text, usize::MAX)?;
            probe.triples().flatten().max().map_or(0, |m| m + 1)
        }
    };
    Ok(TrianglePresentation::parse(&text, n)?)
}

fn run(command: Command) -> Outcome {
    match command {
        Command::VerifyPlane { plane } => verify_plane(&plane),
        Command::VerifyPresentation {
            plane,
            lambda,
            triangles,
        } => {
            let plane = load_plane(&plane)?;
            let lambda = load_lambda(&lambda, &plane)?;
            let t = load_triangles(&triangles, Some(plane.n()))?;
            let verdict = verify_presentation(&plane, &lambda, &t);
            let mut r = Report::new();
            r.put("verdict", verdict.label()).put("triples", t.len());
            let (orbits, loops) = t.orbit_decomposition();
            r.put("orbits", orbits).put("loops", loops);
            match verdict {
                Verdict::Invalid { reason, triple } => {
                    r.put("reason", reason).put_json("triple", &triple);
                    Err(Failure::Invalid(r))
                }
                _ => Ok(r),
            }
        }
        Command::Score {
            plane,
            lambda,
            triangles,
        } => {
            let plane = load_plane(&plane)?;
            let lambda = load_lambda(&lambda, &plane)?;
            let cover = estimated_score(&plane, &lambda);
            let mut r = Report::new();
            r.put(
                "status",
                if cover.is_success() {
                    "SUCCESS"
                } else {
                    "FAIL"
                },
            )
            .put("score", cover.score)
            .put("uncovered", cover.uncovered.len())
            .put("triangles", cover.chosen.len());
            if let Some(path) = triangles {
                write_output(
                    &path,
                    &TrianglePresentation::from_cover(plane.n(), &cover).to_text(),
                )?;
            }
            Ok(r)
        }
        Command::CensusCorrelations { plane, limit } => {
            let plane = load_plane(&plane)?;
            let census = correlation_census(&plane, limit);
            let mut r = Report::new();
            r.put("correlations", census.total)
                .put("classes", census.rows.len());
            for row in &census.rows {
                let key = format!("class_{}_{}", row.a, row.b);
                let value = serde_json::json!({
                    "a": row.a,
                    "b": row.b,
                    "count": row.count,
                    "exact": row.exact,
                    "mean_estimated": round2(row.mean_estimated),
                    "fails": row.fails,
                    "above_exact": row.above_exact,
                });
                r.put(&key, value);
            }
            Ok(r)
        }
        Command::Search(args) => search(args),
        Command::RestrictBaer {
            plane,
            lambda,
            triangles,
            points,
            lines,
            out_lambda,
            out_triangles,
        } => {
            let plane = load_plane(&plane)?;
            let lambda = load_lambda(&lambda, &plane)?;
            let t = load_triangles(&triangles, Some(plane.n()))?;
            let points = points.unwrap_or_else(|| fixtures::HUGHES_BAER_POINTS.to_vec());
            let lines = lines.unwrap_or_else(|| fixtures::HUGHES_BAER_LINES.to_vec());
            let emb = is_baer_subplane(&plane, &points, &lines)?;
            let restricted = restrict(&plane, &lambda, &t, &emb)?;
            let mut r = Report::new();
            r.put("verdict", "FULL")
                .put("sub_order", restricted.sub.plane.order())
                .put("triples", restricted.triangles.len())
                .put("orbits", restricted.triangles.orbit_representatives().len())
                .put_json("ambient_orbits", &restricted.ambient_orbits());
            if let Some(path) = out_lambda {
                write_output(&path, &restricted.lambda.to_text())?;
            }
            if let Some(path) = out_triangles {
                write_output(&path, &restricted.triangles.to_text())?;
            }
            Ok(r)
        }
        Command::Abelianize {
            triangles,
            generators,
        } => {
            let t = load_triangles(&triangles, generators)?;
            let ab = abelianization(&t, t.n());
            let factors: Vec<String> = ab
                .invariant_factors
                .iter()
                .map(ToString::to_string)
                .collect();
            let mut r = Report::new();
            r.put("generators", t.n())
                .put("relators", t.orbit_representatives().len())
                .put("invariant_factors", factors)
                .put("free_rank", ab.free_rank)
                .put("group", ab.to_string());
            Ok(r)
        }
        Command::CheckParity {
            plane,
            triangles,
            lines,
        } => {
            let plane = load_plane(&plane)?;
            let t = load_triangles(&triangles, Some(plane.n()))?;
            let v = check_parity(&plane, &t, &lines)?;
            let mut r = Report::new();
            r.put("holds", v.holds)
                .put("set_a_size", v.set_a.len())
                .put_json("violation", &v.violation);
            if v.holds {
                Ok(r)
            } else {
                Err(Failure::Invalid(r))
            }
        }
        Command::ScabCheck {
            plane,
            triangles,
            no_iso,
        } => {
            let plane = load_plane(&plane)?;
            let t = load_triangles(&triangles, Some(plane.n()))?;
            let complex = build_scab(&t)?;
            let mut r = Report::new();
            r.put("vertices", complex.vertex_count())
                .put("edges", complex.edge_count())
                .put("chambers", complex.chambers().len());
            let mut ok = true;
            for v in ScabVertex::ALL {
                let g = complex.residue(v);
                let defect = generalized_triangle_defect(g.adjacency(), plane.order());
                ok &= defect.is_none();
                r.put(
                    &format!("residue_{v}"),
                    defect.unwrap_or_else(|| "generalized triangle".into()),
                );
                if !no_iso {
                    let iso = residue_plane_iso(&g, &plane);
                    ok &= iso.is_some();
                    r.put(
                        &format!("residue_{v}_iso"),
                        if iso.is_some() { "found" } else { "none" },
                    );
                }
            }
            if ok {
                Ok(r)
            } else {
                Err(Failure::Invalid(r))
            }
        }
        Command::StatsRandom {
            plane,
            samples,
            seed,
        } => {
            let plane = load_plane(&plane)?;
            let s = random_stats(&plane, samples, seed);
            let mut r = Report::new();
            r.put("samples", s.samples)
                .put("seed", s.seed)
                .put("mean", round2(s.mean))
                .put("std_dev", round2(s.std_dev))
                .put("min", s.min)
                .put("max", s.max)
                .put("fails", s.fails);
            Ok(r)
        }
        Command::ExportGap {
            triangles,
            generators,
            format,
            output,
        } => {
            let t = load_triangles(&triangles, generators)?;
            let format: ExportFormat = format.parse()?;
            let text = export_group_presentation(&t, format);
            let mut r = Report::new();
            r.put("generators", t.n())
                .put("relators", t.orbit_representatives().len());
            match output {
                Some(path) => {
                    write_output(&path, &text)?;
                    r.put("output", path.display().to_string());
                    Ok(r)
                }
                None => {
                    print!("{text}");
                    Ok(Report::new())
                }
            }
        }
    }
}

fn verify_plane(source: &str) -> Outcome {
    let parsed = match source {
        "builtin:pg2" | "builtin:pg3" => Ok(load_plane(source)?),
        _ => ProjectivePlane::parse(&read_input(source)?),
    };
    let mut r = Report::new();
    match parsed {
        Ok(plane) => {
            r.put("valid", true)
                .put("order", plane.order())
                .put("points", plane.n())
                .put("lines", plane.n());
            Ok(r)
        }
        Err(e @ (Error::InvalidPlane(_) | Error::UnsupportedOrder(_) | Error::TooLarge(_))) => {
            r.put("valid", false).put("reason", e.to_string());
            Err(Failure::Invalid(r))
        }
        Err(e) => Err(e.into()),
    }
}

fn search(args: SearchArgs) -> Outcome {
    let plane = load_plane(&args.plane)?;
    let badness_mode: BadnessMode = args.badness.parse()?;
    let config = SearchConfig {
        target: args.target.unwrap_or(plane.flag_count()),
        neighborhood: args.variant.clone(),
        worst_points: args.worst_points,
        max_steps: args.max_steps,
        restart_after_stall: args.stall,
        rng_seed: args.seed,
        badness_mode,
    };
    let registry = NeighborhoodRegistry::default();
    let runs: Vec<SearchRun> = match &args.start {
        Some(source) => vec![run_search(
            &plane,
            load_lambda(source, &plane)?,
            &config,
            &registry,
        )?],
        None => search_from_correlations(&plane, &config, &registry, args.pool, args.restarts)?,
    };
    let Some(last) = runs.last() else {
        return Err(Failure::Usage(
            "the plane has no correlations to start from".into(),
        ));
    };
    if let Some(path) = &args.trace {
        let mut csv = String::from("step,score\n");
        for run in &runs {
            for line in run.state.trace_csv().lines().skip(1) {
                csv.push_str(line);
                csv.push('\n');
            }
        }
        write_output(path, &csv)?;
    }
    if let Some(path) = &args.checkpoint {
        write_output(path, &last.state.checkpoint())?;
    }
    let mut r = Report::new();
    r.put("variant", config.neighborhood.as_str())
        .put("runs", runs.len());
    match &last.outcome {
        SearchOutcome::Found {
            lambda,
            triangles,
            steps,
        } => {
            r.put("outcome", "FOUND")
                .put("steps", *steps)
                .put("score", last.state.score());
            if let Some(path) = &args.out_lambda {
                write_output(path, &lambda.to_text())?;
            }
            if let Some(path) = &args.out_triangles {
                write_output(path, &triangles.to_text())?;
            }
            Ok(r)
        }
        SearchOutcome::Stalled {
            best_score,
            steps,
            reason,
        } => {
            r.put("outcome", "STALLED")
                .put("steps", *steps)
                .put("best_score", *best_score)
                .put("score", last.state.score())
                .put_json("reason", reason);
            if let Some(path) = &args.out_lambda {
                write_output(path, &last.state.current.to_text())?;
            }
            Err(Failure::Invalid(r))
        }
    }
}

fn round2(x: f64) -> f64 {
    (x * 100.0).round() / 100.0
}
