//! Number formatting and the CSV/SVG file formats.

use std::io::{Read, Write};

use anyhow::{bail, Context, Result};
use concave_fs_core::fekete_szego::ThresholdRow;
use concave_fs_core::regions::{RegionSample, RegionTag};
use concave_fs_core::C64;

const SIG_DIGITS: i32 = 9;

/// `x` with 9 significant digits, positional for moderate magnitudes and
/// scientific otherwise. Independent of locale.
pub fn sig9(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let mut e = x.abs().log10().floor() as i32;
    if !(-5..15).contains(&e) {
        return format!("{:.*e}", (SIG_DIGITS - 1) as usize, x);
    }
    let mut s = format!("{:.*}", (SIG_DIGITS - 1 - e).max(0) as usize, x);
    // Rounding can carry into a new leading digit (9.99999999951 -> 10.0000000).
    let digits = s
        .chars()
        .filter(|c| c.is_ascii_digit())
        .skip_while(|&c| c == '0')
        .count() as i32;
    if digits > SIG_DIGITS && SIG_DIGITS - 1 - e > 0 {
        e += 1;
        s = format!("{:.*}", (SIG_DIGITS - 1 - e).max(0) as usize, x);
    }
    s
}

/// Fixed nine decimals, for values printed to the terminal.
pub fn fixed9(x: f64) -> String {
    format!("{x:.9}")
}

fn opt(x: Option<f64>) -> String {
    x.map(sig9).unwrap_or_default()
}

pub fn write_thresholds_csv<W: Write>(rows: &[ThresholdRow], w: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["P", "mu1", "mu2", "mu3m", "mu3p", "mu4"])?;
    for r in rows {
        out.write_record([
            sig9(r.big_p),
            sig9(r.mu1),
            sig9(r.mu2),
            opt(r.mu3_minus),
            opt(r.mu3_plus),
            sig9(r.mu4),
        ])?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_thresholds_csv<R: Read>(r: R) -> Result<Vec<ThresholdRow>> {
    let mut rdr = csv::Reader::from_reader(r);
    let headers = rdr.headers()?.clone();
    if headers.iter().collect::<Vec<_>>() != ["P", "mu1", "mu2", "mu3m", "mu3p", "mu4"] {
        bail!("unexpected threshold header {headers:?}");
    }
    let parse = |s: &str| -> Result<f64> { s.parse().with_context(|| format!("bad number {s:?}")) };
    let parse_opt = |s: &str| -> Result<Option<f64>> {
        if s.is_empty() {
            Ok(None)
        } else {
            parse(s).map(Some)
        }
    };
    rdr.records()
        .map(|rec| {
            let rec = rec?;
            Ok(ThresholdRow {
                big_p: parse(&rec[0])?,
                mu1: parse(&rec[1])?,
                mu2: parse(&rec[2])?,
                mu3_minus: parse_opt(&rec[3])?,
                mu3_plus: parse_opt(&rec[4])?,
                mu4: parse(&rec[5])?,
            })
        })
        .collect()
}

pub fn write_region_csv<W: Write>(samples: &[RegionSample], w: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["re", "im", "tag"])?;
    for s in samples {
        for z in &s.points {
            out.write_record([sig9(z.re), sig9(z.im), s.tag.name().to_string()])?;
        }
    }
    out.flush()?;
    Ok(())
}

pub fn read_region_csv<R: Read>(r: R) -> Result<Vec<(C64, RegionTag)>> {
    let mut rdr = csv::Reader::from_reader(r);
    if rdr.headers()?.iter().collect::<Vec<_>>() != ["re", "im", "tag"] {
        bail!("unexpected region header");
    }
    rdr.records()
        .map(|rec| {
            let rec = rec?;
            let tag = RegionTag::from_name(&rec[2]).with_context(|| format!("unknown tag {:?}", &rec[2]))?;
            Ok((C64::new(rec[0].parse()?, rec[1].parse()?), tag))
        })
        .collect()
}

const SVG_SIZE: f64 = 480.0;
const SVG_MAX_DOTS: usize = 20_000;

fn stroke(tag: RegionTag) -> &'static str {
    match tag {
        RegionTag::OmegaBoundary => "#1f5fa8",
        RegionTag::WpCloud => "#c0392b",
        RegionTag::Cardioid => "#2e8b57",
        RegionTag::UnitCircle => "#444444",
    }
}

/// Curves become closed polylines and clouds become dots (thinned to at most
/// 20000 per cloud). The view is the square `[-1.2, 1.2]²`, `y` up.
pub fn write_svg<W: Write>(samples: &[RegionSample], mut w: W) -> Result<()> {
    let half = 1.2;
    let scale = SVG_SIZE / (2.0 * half);
    let px = |z: &C64| ((z.re + half) * scale, (half - z.im) * scale);
    writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#,
        s = SVG_SIZE
    )?;
    writeln!(w, r#"<rect width="100%" height="100%" fill="white"/>"#)?;
    for s in samples {
        let colour = stroke(s.tag);
        if s.tag.is_curve() {
            let pts: Vec<String> = s
                .points
                .iter()
                .map(|z| {
                    let (x, y) = px(z);
                    format!("{x:.2},{y:.2}")
                })
                .collect();
            writeln!(
                w,
                r#"<polygon class="{}" points="{}" fill="none" stroke="{colour}" stroke-width="1.2"/>"#,
                s.tag.name(),
                pts.join(" ")
            )?;
        } else {
            let stride = s.points.len().div_ceil(SVG_MAX_DOTS).max(1);
            writeln!(w, r#"<g class="{}" fill="{colour}" fill-opacity="0.3">"#, s.tag.name())?;
            for z in s.points.iter().step_by(stride) {
                let (x, y) = px(z);
                writeln!(w, r#"<circle cx="{x:.2}" cy="{y:.2}" r="0.6"/>"#)?;
            }
            writeln!(w, "</g>")?;
        }
    }
    writeln!(w, "</svg>")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig9_digits() {
        assert_eq!(sig9(1.0), "1.00000000");
        assert_eq!(sig9(-0.974802036), "-0.974802036");
        assert_eq!(sig9(123.456), "123.456000");
        assert_eq!(sig9(9.999999999), "10.0000000");
        assert_eq!(sig9(0.0), "0");
        assert_eq!(sig9(1.5e-9), "1.50000000e-9");
        assert_eq!(fixed9(1.0), "1.000000000");
    }

    #[test]
    fn region_round_trip() {
        let s = RegionSample {
            points: vec![C64::new(0.25, -1.0 / 3.0)],
            tag: RegionTag::Cardioid,
        };
        let mut buf = Vec::new();
        write_region_csv(&[s], &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf.clone()).unwrap(),
            "re,im,tag\n0.250000000,-0.333333333,cardioid\n"
        );
        let back = read_region_csv(buf.as_slice()).unwrap();
        assert_eq!(back[0].1, RegionTag::Cardioid);
        assert!((back[0].0.im + 1.0 / 3.0).abs() < 1e-9);
    }
}
