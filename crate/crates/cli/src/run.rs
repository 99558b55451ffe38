//! Verb implementations: read inputs, evaluate through the core crate,
//! write deterministic artifacts.
//!
//! Every verb writes a JSON report that embeds the command (verb, flags,
//! seed) that produced it; tabular payloads additionally go to CSV. Output
//! paths are derived from one stem: `<stem>.json`, `<stem>.csv`, and
//! `<stem>-<layer>.csv` for per-layer grids. Reruns with identical flags
//! produce byte-identical files.

use std::path::{Path, PathBuf};

use medrad_core::depth::{depth_field, depth_report, DepthMethod, GridSpec};
use medrad_core::geometry::{geometric_median, radial_center};
use medrad_core::radial::{median_univariate, profile, RadialProfile, Sample1D};
use medrad_core::report::{reproduce_figure, reproduce_table, FigureData, FigureParams};
use medrad_core::rng::derive_seed;
use medrad_core::{CenterEstimate, DataSet};

use crate::dataset::read_dataset;
use crate::emit::{fmt_f64, render_csv, write_file, Json};
use crate::{
    CenterChoice, CliError, Command, ContourArgs, DepthArgs, FigureArgs, GmedianArgs, MethodTag,
    ProfileArgs, ReproduceArgs,
};

/// Convergence tolerance for both centre estimates.
const CENTER_TOL: f64 = 1e-9;

/// Iteration cap for the Weiszfeld geometric median.
const GM_MAX_ITER: usize = 500;

pub fn run(command: Command) -> Result<Vec<String>, CliError> {
    match command {
        Command::Depth(args) => depth_verb(&args),
        Command::Profile(args) => profile_verb(&args),
        Command::Gmedian(args) => gmedian_verb(&args),
        Command::Contour(args) => contour_verb(&args),
        Command::Reproduce(args) => reproduce_verb(&args),
        Command::Figure(args) => figure_verb(&args),
    }
}

// ----------------------------------------------------------------------
// shared helpers
// ----------------------------------------------------------------------

/// Resolve the output stem: the --output value (with a trailing .json or
/// .csv trimmed, so both stems and file names are accepted) or a
/// verb-specific default in the working directory.
fn output_stem(output: &Option<PathBuf>, default: &str) -> PathBuf {
    let mut stem = output
        .clone()
        .unwrap_or_else(|| PathBuf::from(default));
    if let Some(ext) = stem.extension().and_then(|e| e.to_str()) {
        if ext.eq_ignore_ascii_case("json") || ext.eq_ignore_ascii_case("csv") {
            stem.set_extension("");
        }
    }
    stem
}

/// Append a suffix (extension or `-layer.csv`) to the stem's file name.
fn with_suffix(stem: &Path, suffix: &str) -> PathBuf {
    let mut name = stem
        .file_name()
        .map(|n| n.to_os_string())
        .unwrap_or_else(|| "report".into());
    name.push(suffix);
    stem.with_file_name(name)
}

fn file_name(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default()
}

fn path_json(path: &Path) -> Json {
    Json::str(path.display().to_string())
}

fn opt_path_json(path: &Option<PathBuf>) -> Json {
    path.as_ref().map(|p| path_json(p)).unwrap_or(Json::Null)
}

fn opt_uint(value: Option<usize>) -> Json {
    value.map(|v| Json::Uint(v as u64)).unwrap_or(Json::Null)
}

/// The `command` block every JSON artifact embeds: verb, seed, flags.
fn command_meta(verb: &str, seed: Option<u64>, flags: Vec<(&'static str, Json)>) -> Json {
    Json::Object(vec![
        ("verb", Json::str(verb)),
        ("seed", seed.map(Json::Uint).unwrap_or(Json::Null)),
        ("flags", Json::Object(flags)),
    ])
}

fn center_json(est: &CenterEstimate) -> Json {
    Json::Object(vec![
        ("method", Json::str(est.method.tag())),
        ("location", Json::reals(&est.location)),
        ("g_at_center", Json::Real(est.g_at_center)),
        ("iterations", Json::Uint(est.iterations as u64)),
        ("converged", Json::Bool(est.converged)),
    ])
}

fn estimate_center(data: &DataSet, choice: CenterChoice) -> Result<CenterEstimate, CliError> {
    match choice {
        CenterChoice::Radial => radial_center(data, CENTER_TOL),
        CenterChoice::Gmedian => geometric_median(data, CENTER_TOL, GM_MAX_ITER),
    }
    .map_err(CliError::from)
}

fn center_name(choice: CenterChoice) -> &'static str {
    match choice {
        CenterChoice::Radial => "radial",
        CenterChoice::Gmedian => "gmedian",
    }
}

/// Map CLI method tags to core method selectors. Projection is the one
/// stochastic method: it draws its directions from a stream derived from
/// --seed, and omitting the seed is an input error.
fn build_methods(
    tags: &[MethodTag],
    trim: f64,
    n_dirs: usize,
    seed: Option<u64>,
) -> Result<Vec<DepthMethod>, CliError> {
    tags.iter()
        .map(|tag| {
            Ok(match tag {
                MethodTag::Mrd => DepthMethod::Mrd,
                MethodTag::Mahalanobis => DepthMethod::Mahalanobis,
                MethodTag::RobustMahalanobis => DepthMethod::RobustMahalanobis { trim },
                MethodTag::Spatial => DepthMethod::Spatial,
                MethodTag::Tukey2d => DepthMethod::Tukey2d,
                MethodTag::Simplicial2d => DepthMethod::Simplicial2d,
                MethodTag::Projection => {
                    let seed = seed.ok_or_else(|| {
                        CliError::Input(
                            "method 'projection' is stochastic; --seed is required".to_string(),
                        )
                    })?;
                    DepthMethod::Projection {
                        n_dirs,
                        seed: derive_seed(seed, "projection"),
                    }
                }
            })
        })
        .collect()
}

fn method_tags(methods: &[DepthMethod]) -> Vec<String> {
    methods.iter().map(|m| m.tag().to_string()).collect()
}

fn validate_grid_n(grid_n: usize) -> Result<(), CliError> {
    if grid_n >= 1 {
        Ok(())
    } else {
        Err(CliError::Input("--grid-n must be at least 1".to_string()))
    }
}

fn validate_margin(margin: f64) -> Result<(), CliError> {
    if margin.is_finite() && margin >= 0.0 {
        Ok(())
    } else {
        Err(CliError::Input(format!(
            "--margin must be a finite fraction >= 0, got {margin}"
        )))
    }
}

/// Inclusive linear spacing; the affine blend keeps symmetric endpoints
/// exactly symmetric in floating point. A single node degenerates to the
/// midpoint.
fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![(lo + hi) / 2.0];
    }
    let last = (n - 1) as f64;
    (0..n)
        .map(|i| (lo * (last - i as f64) + hi * i as f64) / last)
        .collect()
}

/// Profile rows as CSV: one row per grid node, in grid order.
fn profile_csv(prof: &RadialProfile) -> String {
    let rows: Vec<Vec<String>> = prof
        .entries
        .iter()
        .map(|e| {
            vec![
                fmt_f64(e.v),
                fmt_f64(e.g),
                fmt_f64(e.h),
                fmt_f64(e.d_minus),
                fmt_f64(e.d_plus),
                fmt_f64(e.a),
            ]
        })
        .collect();
    render_csv(&["v", "g", "h", "d_minus", "d_plus", "a"], &rows)
}

/// One grid layer in long form (x, y, value), row-major with y outer —
/// the same order the layer stores its values in.
fn grid_csv(xs: &[f64], ys: &[f64], values: &[f64]) -> String {
    let mut rows = Vec::with_capacity(values.len());
    for (iy, &y) in ys.iter().enumerate() {
        for (ix, &x) in xs.iter().enumerate() {
            rows.push(vec![
                fmt_f64(x),
                fmt_f64(y),
                fmt_f64(values[iy * xs.len() + ix]),
            ]);
        }
    }
    render_csv(&["x", "y", "value"], &rows)
}

/// Square matrix as CSV with a method-name header row and column.
fn matrix_csv(methods: &[String], matrix: &[Vec<f64>]) -> String {
    let mut header: Vec<&str> = vec!["method"];
    header.extend(methods.iter().map(|m| m.as_str()));
    let rows: Vec<Vec<String>> = methods
        .iter()
        .zip(matrix)
        .map(|(name, row)| {
            let mut cells = vec![name.clone()];
            cells.extend(row.iter().map(|&v| fmt_f64(v)));
            cells
        })
        .collect();
    render_csv(&header, &rows)
}

// ----------------------------------------------------------------------
// verbs
// ----------------------------------------------------------------------

fn depth_verb(args: &DepthArgs) -> Result<Vec<String>, CliError> {
    let data = read_dataset(&args.input, args.header)?;
    let queries_owned;
    let queries = match &args.points {
        Some(path) => {
            queries_owned = read_dataset(path, args.header)?;
            &queries_owned
        }
        None => &data,
    };
    let methods = build_methods(&args.methods, args.trim, args.n_dirs, args.seed)?;
    let center = estimate_center(&data, args.center)?;
    let report = depth_report(&data, queries, &methods, &center)?;

    let stem = output_stem(&args.output, "depth");
    let json_path = with_suffix(&stem, ".json");
    let tags = method_tags(&methods);
    let doc = Json::Object(vec![
        (
            "command",
            command_meta(
                "depth",
                args.seed,
                vec![
                    ("input", path_json(&args.input)),
                    ("header", Json::Bool(args.header)),
                    ("points", opt_path_json(&args.points)),
                    ("method", Json::strings(&tags)),
                    ("center", Json::str(center_name(args.center))),
                    ("trim", Json::Real(args.trim)),
                    ("n-dirs", Json::Uint(args.n_dirs as u64)),
                    ("output", path_json(&stem)),
                ],
            ),
        ),
        ("n", Json::Uint(data.n() as u64)),
        ("d", Json::Uint(data.d() as u64)),
        ("center", center_json(&center)),
        ("methods", Json::strings(&report.methods)),
        ("queries", Json::Uint(queries.n() as u64)),
        ("depths", Json::real_rows(&report.depths)),
        ("centres", Json::real_rows(&report.centres)),
    ]);
    write_file(&json_path, &doc.render())?;
    Ok(vec![format!("wrote {}", json_path.display())])
}

fn profile_verb(args: &ProfileArgs) -> Result<Vec<String>, CliError> {
    validate_grid_n(args.grid_n)?;
    validate_margin(args.margin)?;
    let data = read_dataset(&args.input, args.header)?;
    if data.d() != 1 {
        return Err(CliError::Input(format!(
            "profile expects a single-column dataset, got {} columns",
            data.d()
        )));
    }
    let sample = Sample1D::new(data.column(0))?;
    let range = sample.max() - sample.min();
    let pad = if range > 0.0 { args.margin * range } else { 1.0 };
    let grid = linspace(sample.min() - pad, sample.max() + pad, args.grid_n);
    let center = median_univariate(&sample);
    let prof = profile(&sample, &grid, center)?;

    let stem = output_stem(&args.output, "profile");
    let csv_path = with_suffix(&stem, ".csv");
    let json_path = with_suffix(&stem, ".json");
    write_file(&csv_path, &profile_csv(&prof))?;
    let doc = Json::Object(vec![
        (
            "command",
            command_meta(
                "profile",
                None,
                vec![
                    ("input", path_json(&args.input)),
                    ("header", Json::Bool(args.header)),
                    ("grid-n", Json::Uint(args.grid_n as u64)),
                    ("margin", Json::Real(args.margin)),
                    ("output", path_json(&stem)),
                ],
            ),
        ),
        ("n", Json::Uint(sample.len() as u64)),
        ("center", Json::Real(prof.center)),
        ("degenerate_scale", Json::Bool(prof.degenerate_scale)),
        (
            "grid",
            Json::Object(vec![
                ("lo", Json::Real(grid[0])),
                ("hi", Json::Real(*grid.last().expect("grid is nonempty"))),
                ("points", Json::Uint(grid.len() as u64)),
            ]),
        ),
        ("csv", Json::str(file_name(&csv_path))),
    ]);
    write_file(&json_path, &doc.render())?;
    Ok(vec![
        format!("wrote {}", csv_path.display()),
        format!("wrote {}", json_path.display()),
    ])
}

fn gmedian_verb(args: &GmedianArgs) -> Result<Vec<String>, CliError> {
    let data = read_dataset(&args.input, args.header)?;
    let gmedian = geometric_median(&data, CENTER_TOL, GM_MAX_ITER)?;
    let radial = radial_center(&data, CENTER_TOL)?;

    let stem = output_stem(&args.output, "gmedian");
    let json_path = with_suffix(&stem, ".json");
    let doc = Json::Object(vec![
        (
            "command",
            command_meta(
                "gmedian",
                None,
                vec![
                    ("input", path_json(&args.input)),
                    ("header", Json::Bool(args.header)),
                    ("output", path_json(&stem)),
                ],
            ),
        ),
        ("n", Json::Uint(data.n() as u64)),
        ("d", Json::Uint(data.d() as u64)),
        ("geometric_median", center_json(&gmedian)),
        ("radial_center", center_json(&radial)),
    ]);
    write_file(&json_path, &doc.render())?;
    Ok(vec![format!("wrote {}", json_path.display())])
}

fn contour_verb(args: &ContourArgs) -> Result<Vec<String>, CliError> {
    validate_grid_n(args.grid_n)?;
    validate_margin(args.margin)?;
    let data = read_dataset(&args.input, args.header)?;
    let methods = build_methods(&args.methods, args.trim, args.n_dirs, args.seed)?;
    let center = estimate_center(&data, args.center)?;
    let spec = GridSpec::from_data(&data, args.grid_n, args.grid_n, args.margin)?;
    let field = depth_field(&data, &methods, &spec, &center)?;

    let stem = output_stem(&args.output, "contour");
    let mut lines = Vec::new();
    let mut files = Vec::new();
    for layer in &field.layers {
        let path = with_suffix(&stem, &format!("-{}.csv", layer.tag));
        write_file(&path, &grid_csv(&field.xs, &field.ys, &layer.values))?;
        files.push(file_name(&path));
        lines.push(format!("wrote {}", path.display()));
    }

    let json_path = with_suffix(&stem, ".json");
    let tags = method_tags(&methods);
    let layer_tags: Vec<String> = field.layers.iter().map(|l| l.tag.clone()).collect();
    let doc = Json::Object(vec![
        (
            "command",
            command_meta(
                "contour",
                args.seed,
                vec![
                    ("input", path_json(&args.input)),
                    ("header", Json::Bool(args.header)),
                    ("method", Json::strings(&tags)),
                    ("center", Json::str(center_name(args.center))),
                    ("trim", Json::Real(args.trim)),
                    ("n-dirs", Json::Uint(args.n_dirs as u64)),
                    ("grid-n", Json::Uint(args.grid_n as u64)),
                    ("margin", Json::Real(args.margin)),
                    ("output", path_json(&stem)),
                ],
            ),
        ),
        ("n", Json::Uint(data.n() as u64)),
        ("d", Json::Uint(data.d() as u64)),
        ("center", center_json(&center)),
        (
            "grid",
            Json::Object(vec![
                ("x_min", Json::Real(spec.x_min)),
                ("x_max", Json::Real(spec.x_max)),
                ("y_min", Json::Real(spec.y_min)),
                ("y_max", Json::Real(spec.y_max)),
                ("nx", Json::Uint(spec.nx as u64)),
                ("ny", Json::Uint(spec.ny as u64)),
            ]),
        ),
        ("layers", Json::strings(&layer_tags)),
        ("files", Json::strings(&files)),
        ("notes", Json::strings(&field.notes)),
    ]);
    write_file(&json_path, &doc.render())?;
    lines.push(format!("wrote {}", json_path.display()));
    Ok(lines)
}

fn reproduce_verb(args: &ReproduceArgs) -> Result<Vec<String>, CliError> {
    let report = reproduce_table(args.table, args.n, args.seed)?;

    let stem = output_stem(&args.output, &format!("table-{}", args.table));
    let csv_path = with_suffix(&stem, ".csv");
    let json_path = with_suffix(&stem, ".json");
    write_file(&csv_path, &matrix_csv(&report.methods, &report.corr))?;
    let doc = Json::Object(vec![
        (
            "command",
            command_meta(
                "reproduce",
                Some(args.seed),
                vec![
                    ("table", Json::Uint(args.table as u64)),
                    ("n", Json::Uint(args.n as u64)),
                    ("output", path_json(&stem)),
                ],
            ),
        ),
        ("table", Json::Uint(args.table as u64)),
        ("n", Json::Uint(report.n as u64)),
        ("seed", Json::Uint(report.seed)),
        ("methods", Json::strings(&report.methods)),
        ("corr", Json::real_rows(&report.corr)),
        ("centre_dist", Json::real_rows(&report.centre_dist)),
        ("centres", Json::real_rows(&report.centres)),
        ("csv", Json::str(file_name(&csv_path))),
    ]);
    write_file(&json_path, &doc.render())?;
    Ok(vec![
        format!("wrote {}", csv_path.display()),
        format!("wrote {}", json_path.display()),
    ])
}

fn figure_verb(args: &FigureArgs) -> Result<Vec<String>, CliError> {
    let params = FigureParams {
        n: args.n,
        d: args.d,
        seed: args.seed,
        grid_n: args.grid_n,
    };
    let report = reproduce_figure(args.id, params)?;

    let stem = output_stem(&args.output, &format!("figure-{}", args.id));
    let mut lines = Vec::new();
    let data_json = match &report.data {
        FigureData::Profile(prof) => {
            let csv_path = with_suffix(&stem, ".csv");
            write_file(&csv_path, &profile_csv(prof))?;
            lines.push(format!("wrote {}", csv_path.display()));
            Json::Object(vec![
                ("kind", Json::str("profile")),
                ("center", Json::Real(prof.center)),
                ("degenerate_scale", Json::Bool(prof.degenerate_scale)),
                ("csv", Json::str(file_name(&csv_path))),
            ])
        }
        FigureData::Field(field) => {
            let mut files = Vec::new();
            for layer in &field.layers {
                let path = with_suffix(&stem, &format!("-{}.csv", layer.tag));
                write_file(&path, &grid_csv(&field.xs, &field.ys, &layer.values))?;
                lines.push(format!("wrote {}", path.display()));
                files.push(file_name(&path));
            }
            let layer_tags: Vec<String> = field.layers.iter().map(|l| l.tag.clone()).collect();
            Json::Object(vec![
                ("kind", Json::str("field")),
                ("layers", Json::strings(&layer_tags)),
                ("files", Json::strings(&files)),
                ("notes", Json::strings(&field.notes)),
            ])
        }
        FigureData::HighDim(rec) => Json::Object(vec![
            ("kind", Json::str("highdim")),
            ("n", Json::Uint(rec.n as u64)),
            ("d", Json::Uint(rec.d as u64)),
            ("covariance_singular", Json::Bool(rec.covariance_singular)),
            ("g_finite", Json::Bool(rec.g_finite)),
            ("h_finite", Json::Bool(rec.h_finite)),
        ]),
    };

    let json_path = with_suffix(&stem, ".json");
    let doc = Json::Object(vec![
        (
            "command",
            command_meta(
                "figure",
                args.seed,
                vec![
                    ("id", Json::Uint(args.id as u64)),
                    ("n", opt_uint(args.n)),
                    ("d", opt_uint(args.d)),
                    ("grid-n", opt_uint(args.grid_n)),
                    ("output", path_json(&stem)),
                ],
            ),
        ),
        ("id", Json::Uint(report.id as u64)),
        ("scenario", Json::str(report.scenario)),
        ("n", Json::Uint(report.n as u64)),
        ("seed", report.seed.map(Json::Uint).unwrap_or(Json::Null)),
        ("data", data_json),
    ]);
    write_file(&json_path, &doc.render())?;
    lines.push(format!("wrote {}", json_path.display()));
    Ok(lines)
}

// ====== tests ======
