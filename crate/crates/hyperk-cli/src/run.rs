//! Subcommand execution. Everything funnels through [`run`], which writes
//! one JSON document to the given writer and returns the process exit
//! code, so tests can drive the tool without spawning it.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::Path;

use hyperk::partition::{
    check_regular_exact, check_weak_exact, gen_strong, NotRegularReason, RegularVerdict,
    StrongPartition, WeakVerdict,
};
use hyperk::stieltjes::{
    rs_integral_components, rs_integral_with, verify_integration_by_parts, IntegralResult,
    IntegrateOpts, Mode, SampleRule,
};
use hyperk::variation::{
    discontinuity_lines, total_variation_bruteforce, total_variation_separable, Grid,
    GridVariationReport, LineSet,
};
use hyperk::{Hyp, HypInterval, RealPartition, SeparableFn, Strategy};
use num::BigRational;
use serde::Serialize;

use crate::args::{
    ClassifyArgs, Cli, Command, IntegrateArgs, Kind, ModeArg, PartitionGenArgs, PartsArgs,
    RuleArg, StrategyArg, VariationArgs, VerifyCommand,
};
use crate::wire::{
    parse_coord_list, parse_f64_list, parse_grid_shape, parse_hyp, WireCollection, WireCoord,
    WireRect,
};

/// Witness chains beyond this many points are summarized by their size
/// instead of being embedded in the JSON document.
const WITNESS_CAP: usize = 4097;

/// Runs one parsed invocation. Returns the process exit code: 0 for a
/// positive verdict, 1 for a negative one, 2 for bad input or a
/// computation error.
pub fn run(cli: &Cli, out: &mut dyn Write) -> i32 {
    let outcome = match &cli.command {
        Command::Classify(a) => classify(a, out),
        Command::PartitionGen(a) => partition_gen(a, out),
        Command::Variation(a) => variation(a, out),
        Command::Integrate(a) => integrate(a, out),
        Command::Verify(VerifyCommand::Parts(a)) => verify_parts(a, out),
    };
    match outcome {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(out, "error: {}", msg);
            2
        }
    }
}

type Outcome = Result<i32, String>;

/// Prints the document to the writer and mirrors it to `--out` if given.
fn emit<T: Serialize>(doc: &T, out_file: Option<&Path>, out: &mut dyn Write) -> Result<(), String> {
    let mut text = serde_json::to_string_pretty(doc).map_err(|e| e.to_string())?;
    text.push('\n');
    out.write_all(text.as_bytes()).map_err(|e| e.to_string())?;
    if let Some(path) = out_file {
        fs::write(path, &text).map_err(|e| format!("{}: {}", path.display(), e))?;
    }
    Ok(())
}

/// Writes a whitespace table with a `#` header line.
fn write_plot(path: &Path, header: &str, rows: &[Vec<f64>]) -> Result<(), String> {
    let mut text = format!("# {}\n", header);
    for row in rows {
        for (i, v) in row.iter().enumerate() {
            if i > 0 {
                text.push(' ');
            }
            let _ = write!(text, "{}", v);
        }
        text.push('\n');
    }
    fs::write(path, text).map_err(|e| format!("{}: {}", path.display(), e))
}

#[derive(Serialize)]
struct RegularOut {
    regular: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    piece: Option<usize>,
}

impl From<RegularVerdict> for RegularOut {
    fn from(v: RegularVerdict) -> RegularOut {
        match v {
            RegularVerdict::Regular => RegularOut { regular: true, reason: None, piece: None },
            RegularVerdict::NotRegular(r) => {
                let (reason, piece) = match r {
                    NotRegularReason::Overlap => ("overlap", None),
                    NotRegularReason::Gap => ("gap", None),
                    NotRegularReason::PieceOutside(i) => ("piece-outside", Some(i)),
                };
                RegularOut { regular: false, reason: Some(reason), piece }
            }
        }
    }
}

#[derive(Serialize)]
struct WeakOut {
    weak: bool,
    length_sum: Hyp,
    #[serde(skip_serializing_if = "Option::is_none")]
    deficit: Option<Hyp>,
}

impl From<WeakVerdict> for WeakOut {
    fn from(v: WeakVerdict) -> WeakOut {
        match v {
            WeakVerdict::Weak { length_sum } => {
                WeakOut { weak: true, length_sum, deficit: None }
            }
            WeakVerdict::NotWeak { length_sum, deficit } => {
                WeakOut { weak: false, length_sum, deficit: Some(deficit) }
            }
        }
    }
}

#[derive(Serialize)]
struct ClassifyOutput {
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    regular: Option<RegularOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    weak: Option<WeakOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    weak_strict: Option<WeakOut>,
    pass: bool,
}

fn classify(args: &ClassifyArgs, out: &mut dyn Write) -> Outcome {
    let text = fs::read_to_string(&args.input)
        .map_err(|e| format!("{}: {}", args.input.display(), e))?;
    let raw: WireCollection = serde_json::from_str(&text)
        .map_err(|e| format!("{}: {}", args.input.display(), e))?;
    let coll = raw.to_exact()?;

    let (kind, want_regular, want_weak, want_strict) = match args.kind {
        Kind::All => ("all", true, true, true),
        Kind::Regular => ("regular", true, false, false),
        Kind::Weak => ("weak", false, true, false),
        Kind::WeakStrict => ("weak-strict", false, false, true),
    };
    let regular = want_regular.then(|| RegularOut::from(check_regular_exact(&coll)));
    let weak = if want_weak {
        Some(WeakOut::from(check_weak_exact(&coll, false).map_err(|e| e.to_string())?))
    } else {
        None
    };
    let weak_strict = if want_strict {
        Some(WeakOut::from(check_weak_exact(&coll, true).map_err(|e| e.to_string())?))
    } else {
        None
    };
    let pass = regular.as_ref().is_none_or(|r| r.regular)
        && weak.as_ref().is_none_or(|w| w.weak)
        && weak_strict.as_ref().is_none_or(|w| w.weak);

    let doc = ClassifyOutput { kind, regular, weak, weak_strict, pass };
    emit(&doc, args.out.as_deref(), out)?;
    Ok(if pass { 0 } else { 1 })
}

#[derive(Serialize)]
struct PartitionGenOutput {
    parent: WireRect,
    pieces: Vec<WireRect>,
    points: Vec<Hyp>,
    diameter: Hyp,
    strategy: &'static str,
    seed: u64,
}

fn partition_gen(args: &PartitionGenArgs, out: &mut dyn Write) -> Outcome {
    let p = parse_coord_list(&args.p)?;
    let q = parse_coord_list(&args.q)?;
    let p_part = RealPartition::new(p.iter().map(|c| c.value).collect())
        .map_err(|e| format!("--p: {}", e))?;
    let q_part = RealPartition::new(q.iter().map(|c| c.value).collect())
        .map_err(|e| format!("--q: {}", e))?;
    let (strategy, name) = match args.strategy {
        StrategyArg::E1First => (Strategy::E1First, "e1-first"),
        StrategyArg::E2First => (Strategy::E2First, "e2-first"),
        StrategyArg::Diagonal => (Strategy::Diagonal, "diagonal"),
        StrategyArg::Random => (Strategy::SeededRandom(args.seed), "random"),
    };
    let mut sp = gen_strong(&p_part, &q_part, strategy);
    let mut refined = false;
    if let Some(target) = &args.refine {
        sp = sp.refine(parse_hyp(target).map_err(|e| format!("--refine: {}", e))?);
        refined = true;
    }

    // The lattice walk only reorders the given cuts, so every unrefined
    // coordinate maps back to its exact input rational.
    let x_axis: Vec<(f64, &BigRational)> = p.iter().map(|c| (c.value, &c.exact)).collect();
    let y_axis: Vec<(f64, &BigRational)> = q.iter().map(|c| (c.value, &c.exact)).collect();
    let coord = |axis: &[(f64, &BigRational)], v: f64| -> WireCoord {
        if refined {
            return WireCoord::Num(v);
        }
        let (_, r) = axis.iter().find(|(f, _)| *f == v).expect("cut from input");
        WireCoord::exact(r)
    };
    let pieces: Vec<WireRect> = sp
        .subintervals()
        .iter()
        .map(|i| {
            let ([x0, x1], [y0, y1]) = i.project();
            [coord(&x_axis, x0), coord(&x_axis, x1), coord(&y_axis, y0), coord(&y_axis, y1)]
        })
        .collect();
    let parent = [
        WireCoord::exact(x_axis[0].1),
        WireCoord::exact(x_axis[x_axis.len() - 1].1),
        WireCoord::exact(y_axis[0].1),
        WireCoord::exact(y_axis[y_axis.len() - 1].1),
    ];

    let doc = PartitionGenOutput {
        parent,
        pieces,
        points: sp.points().to_vec(),
        diameter: sp.diameter(),
        strategy: name,
        seed: args.seed,
    };
    emit(&doc, args.out.as_deref(), out)?;
    if let Some(path) = &args.plot {
        let rows: Vec<Vec<f64>> = sp.points().iter().map(|p| vec![p.a1, p.a2]).collect();
        write_plot(path, "e1 e2", &rows)?;
    }
    Ok(0)
}

#[derive(Serialize)]
struct VariationOutput {
    value: Hyp,
    exact: bool,
    unbounded: bool,
    partitions_examined: usize,
    witness_points: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<StrongPartition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    grid: Option<GridVariationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lines: Option<LineSet>,
}

fn variation(args: &VariationArgs, out: &mut dyn Write) -> Outcome {
    let mut f =
        SeparableFn::parse(&args.f1, &args.f2).map_err(|e| format!("expression: {}", e))?;
    let jumps1 = args.jumps1.as_deref().map(parse_f64_list).transpose()?.unwrap_or_default();
    let jumps2 = args.jumps2.as_deref().map(parse_f64_list).transpose()?.unwrap_or_default();
    let has_jumps = !jumps1.is_empty() || !jumps2.is_empty();
    f = f.with_jumps(jumps1, jumps2);
    let interval = parse_interval(&args.lo, &args.hi)?;

    let report = total_variation_separable(&f, &interval).map_err(|e| e.to_string())?;
    let grid = match &args.grid {
        Some(shape) => {
            let (m, n) = parse_grid_shape(shape)?;
            let grid = Grid::uniform(&interval, m, n).map_err(|e| e.to_string())?;
            Some(total_variation_bruteforce(&f, &grid).map_err(|e| e.to_string())?)
        }
        None => None,
    };
    let lines: Option<LineSet> = if has_jumps {
        Some(discontinuity_lines(&f, &interval).map_err(|e| e.to_string())?)
    } else {
        None
    };

    let witness_points = report.witness.points().len();
    let negative = report.unbounded;
    let doc = VariationOutput {
        value: report.value,
        exact: report.exact,
        unbounded: report.unbounded,
        partitions_examined: report.partitions_examined,
        witness_points,
        witness: (witness_points <= WITNESS_CAP).then_some(report.witness.clone()),
        grid,
        lines,
    };
    emit(&doc, args.out.as_deref(), out)?;
    if let Some(path) = &args.plot {
        let rows: Vec<Vec<f64>> =
            report.witness.points().iter().map(|p| vec![p.a1, p.a2]).collect();
        write_plot(path, "e1 e2", &rows)?;
    }
    Ok(if negative { 1 } else { 0 })
}

#[derive(Serialize)]
struct IntegrateOutput {
    result: IntegralResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    component_route: Option<Hyp>,
    #[serde(skip_serializing_if = "Option::is_none")]
    route_gap: Option<Hyp>,
}

fn integrate(args: &IntegrateArgs, out: &mut dyn Write) -> Outcome {
    let f = SeparableFn::parse(&args.f1, &args.f2).map_err(|e| format!("--f: {}", e))?;
    let g = match (&args.g1, &args.g2) {
        (Some(g1), Some(g2)) => SeparableFn::parse(g1, g2).map_err(|e| format!("--g: {}", e))?,
        _ => SeparableFn::identity(),
    };
    let interval = parse_interval(&args.lo, &args.hi)?;
    let mut opts = IntegrateOpts {
        rule: match args.rule {
            RuleArg::Left => SampleRule::Left,
            RuleArg::Right => SampleRule::Right,
            RuleArg::Midpoint => SampleRule::Midpoint,
        },
        mode: match args.mode {
            ModeArg::Signed => Mode::Signed,
            ModeArg::Absolute => Mode::Absolute,
        },
        seed: args.seed,
        ..IntegrateOpts::default()
    };
    if let Some(t) = args.tol {
        if !(t.is_finite() && t > 0.0) {
            return Err(format!("--tol must be positive and finite, got {}", t));
        }
        opts.tolerance = Hyp::new(t, t);
    }

    let result = rs_integral_with(&f, &g, &interval, &opts).map_err(|e| e.to_string())?;
    let (component_route, route_gap) = if args.check {
        let reference =
            rs_integral_components(&f, &g, &interval).map_err(|e| format!("--check: {}", e))?;
        (Some(reference), Some((result.value - reference).k_module()))
    } else {
        (None, None)
    };

    let negative = !result.converged;
    let doc = IntegrateOutput { result, component_route, route_gap };
    emit(&doc, args.out.as_deref(), out)?;
    if let Some(path) = &args.plot {
        let rows: Vec<Vec<f64>> = doc
            .result
            .trace
            .iter()
            .enumerate()
            .map(|(level, t)| {
                vec![level as f64, t.diameter.a1, t.diameter.a2, t.sum.a1, t.sum.a2]
            })
            .collect();
        write_plot(path, "level diameter_e1 diameter_e2 sum_e1 sum_e2", &rows)?;
    }
    Ok(if negative { 1 } else { 0 })
}

fn verify_parts(args: &PartsArgs, out: &mut dyn Write) -> Outcome {
    let f = SeparableFn::parse(&args.f1, &args.f2).map_err(|e| format!("--f: {}", e))?;
    let g = SeparableFn::parse(&args.g1, &args.g2).map_err(|e| format!("--g: {}", e))?;
    let interval = parse_interval(&args.lo, &args.hi)?;
    if !(args.tol.is_finite() && args.tol > 0.0) {
        return Err(format!("--tol must be positive and finite, got {}", args.tol));
    }
    let check = verify_integration_by_parts(&f, &g, &interval, Hyp::new(args.tol, args.tol))
        .map_err(|e| e.to_string())?;
    let pass = check.within_tolerance;
    emit(&check, args.out.as_deref(), out)?;
    Ok(if pass { 0 } else { 1 })
}

fn parse_interval(lo: &str, hi: &str) -> Result<HypInterval, String> {
    let lo = parse_hyp(lo).map_err(|e| format!("--lo: {}", e))?;
    let hi = parse_hyp(hi).map_err(|e| format!("--hi: {}", e))?;
    HypInterval::new(lo, hi).map_err(|e| format!("interval: {}", e))
}
