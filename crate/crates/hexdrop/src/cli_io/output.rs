//! Point-set serialization.
//!
//! CSV: header `cell_m,cell_n,sector_id,x,y`, one row per point in generation
//! order, coordinates with 9 significant digits, `.` decimal separator, `\n`
//! line ends. JSON: an array of objects with the same five fields as numbers,
//! at full binary-faithful precision.

use crate::network::LabeledPoint;
use serde::Serialize;
use std::io::{self, Write};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format `{other}` (expected csv or json)")),
        }
    }
}

/// Decimal rendering with `sig` significant digits (no exponent notation).
pub(crate) fn format_sig(x: f64, sig: i32) -> String {
    if x == 0.0 {
        return format!("{:.*}", (sig - 1) as usize, 0.0);
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (sig - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

#[derive(Serialize)]
struct PointRecord {
    cell_m: i64,
    cell_n: i64,
    sector_id: u32,
    x: f64,
    y: f64,
}

/// Write the generated points to `sink` in the chosen format.
pub fn write_points<W: Write>(
    points: &[LabeledPoint],
    format: OutputFormat,
    sink: &mut W,
) -> io::Result<()> {
    match format {
        OutputFormat::Csv => {
            sink.write_all(b"cell_m,cell_n,sector_id,x,y\n")?;
            for lp in points {
                writeln!(
                    sink,
                    "{},{},{},{},{}",
                    lp.m,
                    lp.n,
                    lp.sector_id,
                    format_sig(lp.p.x, 9),
                    format_sig(lp.p.y, 9),
                )?;
            }
            Ok(())
        }
        OutputFormat::Json => {
            let records: Vec<PointRecord> = points
                .iter()
                .map(|lp| PointRecord {
                    cell_m: lp.m,
                    cell_n: lp.n,
                    sector_id: lp.sector_id,
                    x: lp.p.x,
                    y: lp.p.y,
                })
                .collect();
            serde_json::to_writer(&mut *sink, &records)?;
            sink.write_all(b"\n")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;

    fn lp(m: i64, n: i64, sector_id: u32, x: f64, y: f64) -> LabeledPoint {
        LabeledPoint {
            m,
            n,
            sector_id,
            p: Point::new(x, y),
        }
    }

    #[test]
    fn empty_csv_is_just_the_header() {
        let mut buf = Vec::new();
        write_points(&[], OutputFormat::Csv, &mut buf).unwrap();
        assert_eq!(buf, b"cell_m,cell_n,sector_id,x,y\n");
    }

    #[test]
    fn csv_row_layout() {
        let mut buf = Vec::new();
        write_points(&[lp(0, 0, 1, 0.0, 0.0)], OutputFormat::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "cell_m,cell_n,sector_id,x,y\n0,0,1,0.00000000,0.00000000\n"
        );

        let mut buf = Vec::new();
        write_points(
            &[lp(-1, 3, 2, -0.433_012_701_892_219_3, 1.5)],
            OutputFormat::Csv,
            &mut buf,
        )
        .unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text.lines().nth(1).unwrap(),
            "-1,3,2,-0.433012702,1.50000000"
        );
    }

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(format_sig(0.0, 9), "0.00000000");
        assert_eq!(format_sig(0.5, 9), "0.500000000");
        assert_eq!(format_sig(-123.456, 9), "-123.456000");
        assert_eq!(format_sig(1234.567891, 9), "1234.56789");
        assert_eq!(format_sig(987654321.0, 9), "987654321");
        assert_eq!(format_sig(0.000123456789, 9), "0.000123456789");
    }

    #[test]
    fn json_records_carry_all_five_fields() {
        let mut buf = Vec::new();
        write_points(
            &[lp(1, -1, 3, 0.25, -0.125), lp(0, 0, 1, 0.1, 0.2)],
            OutputFormat::Json,
            &mut buf,
        )
        .unwrap();
        let value: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        let arr = value.as_array().unwrap();
        assert_eq!(arr.len(), 2);
        assert_eq!(arr[0]["cell_m"], 1);
        assert_eq!(arr[0]["cell_n"], -1);
        assert_eq!(arr[0]["sector_id"], 3);
        assert_eq!(arr[0]["x"], 0.25);
        assert_eq!(arr[0]["y"], -0.125);
        // binary-faithful numbers round-trip exactly
        assert_eq!(arr[1]["x"].as_f64().unwrap(), 0.1);
    }

    #[test]
    fn format_parses_from_str() {
        assert_eq!("csv".parse::<OutputFormat>().unwrap(), OutputFormat::Csv);
        assert_eq!("json".parse::<OutputFormat>().unwrap(), OutputFormat::Json);
        assert!("xml".parse::<OutputFormat>().is_err());
    }
}
