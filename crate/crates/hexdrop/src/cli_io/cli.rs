//! Command-line driver.
//!
//! Exit codes: 0 success, 1 statistical validation failure, 2 usage or
//! config error.

use crate::cli_io::{parse_config, render_svg, write_points, OutputFormat};
use crate::geometry::{ring_indices, CellShape};
use crate::network::generate_network;
use crate::stats::validation_battery;
use std::collections::HashMap;
use std::io::Write;

const USAGE: &str = "\
hexdrop: uniform random node placement over hexagonal cellular layouts

USAGE:
  hexdrop gen --config FILE --seed U64 --out FILE --format csv|json [--svg FILE]
      Generate every node of the configured network and write them to --out.
      Optionally render the layout and nodes to an SVG file.

  hexdrop validate --shape hexagon|rhombus|triangle --n N --seed U64 [--depth 1|2]
      Run the statistical self-validation battery (chi-square uniformity,
      marginal KS tests, and two-sample KS against the rejection oracle) on
      N fresh samples of the unit-side shape. Prints one report per test and
      exits 1 if any fails. Depth selects the binning (default 2).

  hexdrop centers --rings R --L0 X
      Print `m,n,x,y` for every cell center in rings 0..=R at reference
      size X.

EXIT CODES: 0 success; 1 validation failure; 2 usage or config error.
";

enum CliError {
    /// Bad invocation, unreadable/invalid input: exit 2.
    Usage(String),
    /// The battery ran and a test failed: exit 1.
    ValidationFailed,
}

fn parse_flags(args: &[String], allowed: &[&str]) -> Result<HashMap<String, String>, CliError> {
    let mut map = HashMap::new();
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        let key = arg
            .strip_prefix("--")
            .ok_or_else(|| CliError::Usage(format!("unexpected argument `{arg}`")))?;
        if !allowed.contains(&key) {
            return Err(CliError::Usage(format!("unknown flag `--{key}`")));
        }
        let value = it
            .next()
            .ok_or_else(|| CliError::Usage(format!("flag `--{key}` needs a value")))?;
        if map.insert(key.to_string(), value.clone()).is_some() {
            return Err(CliError::Usage(format!("flag `--{key}` given twice")));
        }
    }
    Ok(map)
}

fn required<'a>(flags: &'a HashMap<String, String>, key: &str) -> Result<&'a str, CliError> {
    flags
        .get(key)
        .map(String::as_str)
        .ok_or_else(|| CliError::Usage(format!("missing required flag `--{key}`")))
}

fn parse_value<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, CliError> {
    value
        .parse()
        .map_err(|_| CliError::Usage(format!("invalid value `{value}` for `--{key}`")))
}

fn run_gen(args: &[String]) -> Result<(), CliError> {
    let flags = parse_flags(args, &["config", "seed", "out", "format", "svg"])?;
    let config_path = required(&flags, "config")?;
    let seed: u64 = parse_value("seed", required(&flags, "seed")?)?;
    let out_path = required(&flags, "out")?;
    let format: OutputFormat = parse_value("format", required(&flags, "format")?)?;

    let text = std::fs::read_to_string(config_path)
        .map_err(|e| CliError::Usage(format!("cannot read `{config_path}`: {e}")))?;
    let cfg = parse_config(&text).map_err(|e| CliError::Usage(format!("{config_path}: {e}")))?;
    let points =
        generate_network(&cfg, seed).map_err(|e| CliError::Usage(format!("{config_path}: {e}")))?;

    let mut out = std::io::BufWriter::new(
        std::fs::File::create(out_path)
            .map_err(|e| CliError::Usage(format!("cannot create `{out_path}`: {e}")))?,
    );
    write_points(&points, format, &mut out)
        .and_then(|()| out.flush())
        .map_err(|e| CliError::Usage(format!("writing `{out_path}`: {e}")))?;

    if let Some(svg_path) = flags.get("svg") {
        let mut svg = std::io::BufWriter::new(
            std::fs::File::create(svg_path)
                .map_err(|e| CliError::Usage(format!("cannot create `{svg_path}`: {e}")))?,
        );
        render_svg(&cfg, &points, &mut svg)
            .and_then(|()| svg.flush())
            .map_err(|e| CliError::Usage(format!("writing `{svg_path}`: {e}")))?;
    }

    println!(
        "wrote {} nodes across {} cells to {out_path}",
        points.len(),
        cfg.cells.len()
    );
    Ok(())
}

fn run_validate(args: &[String]) -> Result<(), CliError> {
    let flags = parse_flags(args, &["shape", "n", "seed", "depth"])?;
    let shape = match required(&flags, "shape")? {
        "hexagon" => CellShape::hexagon(1.0),
        "rhombus" => CellShape::rhombus(1.0),
        "triangle" => CellShape::triangle(1.0),
        other => {
            return Err(CliError::Usage(format!(
                "invalid value `{other}` for `--shape` (hexagon, rhombus, or triangle)"
            )))
        }
    };
    let n: usize = parse_value("n", required(&flags, "n")?)?;
    let seed: u64 = parse_value("seed", required(&flags, "seed")?)?;
    let depth: u32 = match flags.get("depth") {
        Some(v) => match v.as_str() {
            "1" => 1,
            "2" => 2,
            other => {
                return Err(CliError::Usage(format!(
                    "invalid value `{other}` for `--depth` (1 or 2)"
                )))
            }
        },
        None => 2,
    };

    let reports =
        validation_battery(shape, n, seed, depth).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut all_pass = true;
    for report in &reports {
        println!("{report}");
        all_pass &= report.pass;
    }
    if all_pass {
        Ok(())
    } else {
        Err(CliError::ValidationFailed)
    }
}

fn run_centers(args: &[String]) -> Result<(), CliError> {
    let flags = parse_flags(args, &["rings", "L0"])?;
    let rings: u64 = parse_value("rings", required(&flags, "rings")?)?;
    let l0: f64 = parse_value("L0", required(&flags, "L0")?)?;
    if !(l0.is_finite() && l0 > 0.0) {
        return Err(CliError::Usage(format!(
            "invalid value `{l0}` for `--L0` (must be positive)"
        )));
    }
    let mut stdout = std::io::stdout().lock();
    for r in 0..=rings {
        for idx in ring_indices(r) {
            let c = idx.cell_center(l0).expect("ring indices are on-lattice");
            writeln!(
                stdout,
                "{},{},{},{}",
                idx.m,
                idx.n,
                super::output::format_sig(c.x, 9),
                super::output::format_sig(c.y, 9)
            )
            .map_err(|e| CliError::Usage(format!("writing centers: {e}")))?;
        }
    }
    Ok(())
}

/// Run the CLI on `args` (program name excluded) and return the exit code.
pub fn cli_main(args: &[String]) -> i32 {
    let result = match args.first().map(String::as_str) {
        Some("gen") => run_gen(&args[1..]),
        Some("validate") => run_validate(&args[1..]),
        Some("centers") => run_centers(&args[1..]),
        Some("help") | Some("--help") | Some("-h") => {
            print!("{USAGE}");
            return 0;
        }
        Some(other) => Err(CliError::Usage(format!("unknown command `{other}`"))),
        None => Err(CliError::Usage("no command given".into())),
    };
    match result {
        Ok(()) => 0,
        Err(CliError::ValidationFailed) => 1,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!();
            eprint!("{USAGE}");
            2
        }
    }
}
