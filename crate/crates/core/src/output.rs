//! File formats: JSON with 17 significant digits and the grid potential CSV.

use std::fmt::Write as _;
use std::io;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::holonomy::GaugeField;
use crate::par::{self, ExecMode};
use crate::reconstruction::Grid;

/// `v` with 17 significant digits, e.g. `-5.0000000000000000e-1`.
pub fn format_f64(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        v.to_string()
    }
}

/// Compact JSON that prints every float with 17 significant digits.
struct SigFigs;

impl serde_json::ser::Formatter for SigFigs {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        if value.is_finite() {
            write!(writer, "{value:.16e}")
        } else {
            writer.write_all(b"null")
        }
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }
}

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SigFigs);
    value
        .serialize(&mut ser)
        .map_err(|e| Error::InvalidConfig(format!("serialization failed: {e}")))?;
    buf.push(b'\n');
    Ok(String::from_utf8(buf).expect("serde_json writes UTF-8"))
}

/// One row per grid node and direction: `x1,…,xn,mu,re_0_0,im_0_0,…` with `mu` 0-based.
pub fn potential_csv<A: GaugeField + ?Sized>(a: &A, grid: &Grid, mode: ExecMode) -> Result<String> {
    let n = a.spec().matrix_dim;
    let dim = grid.dim;
    let mut out = String::new();
    let mut header: Vec<String> = (1..=dim).map(|k| format!("x{k}")).collect();
    header.push("mu".into());
    for r in 0..n {
        for c in 0..n {
            header.push(format!("re_{r}_{c}"));
            header.push(format!("im_{r}_{c}"));
        }
    }
    out.push_str(&header.join(","));
    out.push('\n');
    let points = grid.points();
    let rows = par::map(mode, &points, |x| -> Result<String> {
        let mut block = String::new();
        for mu in 0..dim {
            let m = a.component(x, mu)?;
            let mut cells: Vec<String> = x.iter().map(|&v| format_f64(v)).collect();
            cells.push(mu.to_string());
            for z in m.matrix().to_row_major() {
                cells.push(format_f64(z.re));
                cells.push(format_f64(z.im));
            }
            writeln!(block, "{}", cells.join(",")).expect("writing to a String");
        }
        Ok(block)
    });
    for r in rows {
        out.push_str(&r?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::holonomy::ConnectionField;

    #[test]
    fn seventeen_digits() {
        assert_eq!(format_f64(0.1), "1.0000000000000001e-1");
        assert_eq!(format_f64(-0.5), "-5.0000000000000000e-1");
        for v in [0.1, 1.0 / 3.0, -2.5e-300, 123456.789] {
            assert_eq!(format_f64(v).parse::<f64>().unwrap(), v);
        }
    }

    #[test]
    fn json_floats_and_ints() {
        #[derive(Serialize)]
        struct S {
            a: f64,
            n: usize,
            v: Vec<f64>,
        }
        let s = to_json(&S { a: 1.0, n: 3, v: vec![0.25] }).unwrap();
        assert_eq!(s, "{\"a\":1.0000000000000000e0,\"n\":3,\"v\":[2.5000000000000000e-1]}\n");
        let back: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(back["a"], 1.0);
    }

    #[test]
    fn csv_layout() {
        let a = ConnectionField::real_abelian(2, |x, mu| if mu == 0 { x[1] } else { 0.0 });
        let grid = Grid::new(2, 2, 0.0, 1.0).unwrap();
        let csv = potential_csv(&a, &grid, ExecMode::Sequential).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "x1,x2,mu,re_0_0,im_0_0");
        assert_eq!(lines.len(), 1 + 4 * 2);
        let row: Vec<&str> = lines[3].split(',').collect();
        assert_eq!(row[2], "0");
        assert_eq!(row[3].parse::<f64>().unwrap(), 1.0);
    }
}
