//! SVG rendering of isolation regions.
//!
//! In the squared plane every region is a disc around squared zeros. In the
//! `z` plane a disc `|z^2 - c| <= r` becomes a Cassini region whose boundary
//! is traced by following one continuous branch of the square root.

use std::f64::consts::TAU;
use std::fmt::Write;

use num_complex::Complex64;
use polyloc::localize::{matrix_pellet, tgp, tmgp};
use polyloc::oracle::all_roots_with_tol;
use polyloc::{Disc, IsolationCase, IsolationReport, Polynomial, Region};

use crate::{CliResult, Failure, PlotMethod, PlotPlane};

const SIZE: f64 = 800.0;
const MARGIN: f64 = 0.1;
const STEPS: usize = 360;

/// Closed polylines in complex coordinates, with a style class.
struct Shape {
    class: &'static str,
    points: Vec<Complex64>,
}

fn circle(center: Complex64, radius: f64) -> Vec<Complex64> {
    (0..STEPS).map(|i| center + Complex64::from_polar(radius, TAU * i as f64 / STEPS as f64)).collect()
}

/// Preimage of the circle `|w - c| = r` under `z -> z^2`: one closed curve
/// when the circle winds around the origin, otherwise two mirrored loops.
pub fn cassini_curves(c: Complex64, r: f64) -> Vec<Vec<Complex64>> {
    let w = |t: f64| c + Complex64::from_polar(r, t);
    let mut curve = vec![w(0.0).sqrt()];
    let track = |from: usize, to: usize, curve: &mut Vec<Complex64>| {
        for i in from..to {
            let s = w(TAU * i as f64 / STEPS as f64).sqrt();
            let prev = *curve.last().unwrap();
            curve.push(if (s - prev).norm() <= (s + prev).norm() { s } else { -s });
        }
    };
    track(1, STEPS, &mut curve);
    let last = *curve.last().unwrap();
    let next = w(0.0).sqrt();
    let closes = (next - last).norm() <= (next + last).norm();
    if closes {
        let mirror = curve.iter().map(|z| -z).collect();
        vec![curve, mirror]
    } else {
        track(STEPS, 2 * STEPS, &mut curve);
        vec![curve]
    }
}

fn report_for(p: &Polynomial, method: PlotMethod) -> CliResult<IsolationReport> {
    let pp = p.prepare_even()?;
    Ok(match method {
        PlotMethod::Tgp => tgp(&pp),
        PlotMethod::Tmgp => tmgp(&pp)?,
        PlotMethod::MatrixPellet => match matrix_pellet(&pp, pp.m() - 1)? {
            Some(r) => r,
            None => return Err(Failure::Input(anyhow::anyhow!("matrix Pellet test does not apply"))),
        },
    })
}

fn disc_shapes(d: &Disc, class: &'static str, plane: PlotPlane) -> Vec<Shape> {
    match plane {
        PlotPlane::Squared => vec![Shape { class, points: circle(d.center, d.radius) }],
        PlotPlane::Z => cassini_curves(d.center, d.radius).into_iter().map(|points| Shape { class, points }).collect(),
    }
}

fn shapes(report: &IsolationReport, plane: PlotPlane) -> Vec<Shape> {
    let mut out = Vec::new();
    for claim in &report.claims {
        // a claim of one zero in a single region is the detached one
        let class = if claim.count == 1 && claim.regions.len() == 1 { "region isolated" } else { "region" };
        for region in &claim.regions {
            match region {
                Region::Disc(d) => out.extend(disc_shapes(d, class, plane)),
                Region::Exterior(d) => out.extend(disc_shapes(d, "exterior", plane)),
                Region::Cassini(c) => out.extend(disc_shapes(&Disc::new(c.center, c.radius), class, plane)),
                Region::OutsideGap(_) => {}
            }
        }
    }
    if let Some(g) = report.modulus_gap {
        let scale = |r: f64| if plane == PlotPlane::Squared { r * r } else { r };
        for r in [g.r_inner, g.r_outer] {
            out.push(Shape { class: "gap", points: circle(Complex64::new(0.0, 0.0), scale(r)) });
        }
    }
    out
}

struct Frame {
    center: Complex64,
    scale: f64,
}

impl Frame {
    fn fit(points: impl Iterator<Item = Complex64>) -> Frame {
        let (mut lo, mut hi) = (Complex64::new(f64::MAX, f64::MAX), Complex64::new(f64::MIN, f64::MIN));
        for z in points {
            lo = Complex64::new(lo.re.min(z.re), lo.im.min(z.im));
            hi = Complex64::new(hi.re.max(z.re), hi.im.max(z.im));
        }
        let span = (hi.re - lo.re).max(hi.im - lo.im).max(1e-12);
        Frame { center: (lo + hi) / 2.0, scale: SIZE * (1.0 - 2.0 * MARGIN) / span }
    }

    fn map(&self, z: Complex64) -> (f64, f64) {
        let d = (z - self.center) * self.scale;
        (SIZE / 2.0 + d.re, SIZE / 2.0 - d.im)
    }
}

pub fn render(p: &Polynomial, method: PlotMethod, plane: PlotPlane, tol: f64) -> CliResult<String> {
    let report = report_for(p, method)?;
    let mut roots = all_roots_with_tol(p, tol).roots;
    if report.padded && plane == PlotPlane::Squared {
        roots.push(Complex64::new(0.0, 0.0));
    }
    if plane == PlotPlane::Squared {
        roots.iter_mut().for_each(|z| *z = *z * *z);
    }
    let shapes = shapes(&report, plane);
    let frame = Frame::fit(shapes.iter().flat_map(|s| s.points.iter().copied()).chain(roots.iter().copied()));

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let case = if report.case == IsolationCase::None { "none".to_string() } else { format!("{:?}", report.case) };
    let plane_name = if plane == PlotPlane::Squared { "squared" } else { "z" };
    let _ = writeln!(svg, "<title>{:?} {case} ({plane_name} plane)</title>", report.method);
    let _ = writeln!(
        svg,
        "<style>.region{{fill:none;stroke:#1f5fbf;stroke-width:1.5}} .isolated{{stroke:#c0392b}} \
         .exterior{{fill:none;stroke:#7f7f7f;stroke-dasharray:6 4}} .gap{{fill:none;stroke:#2e8b57;stroke-dasharray:2 3}} \
         .axis{{stroke:#bbbbbb;stroke-width:0.8}} .root{{stroke:#000000;stroke-width:1.2}}</style>"
    );
    let _ = writeln!(svg, r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#);
    let (ox, oy) = frame.map(Complex64::new(0.0, 0.0));
    let _ = writeln!(svg, r#"<line class="axis" x1="0" y1="{oy:.2}" x2="{SIZE}" y2="{oy:.2}"/>"#);
    let _ = writeln!(svg, r#"<line class="axis" x1="{ox:.2}" y1="0" x2="{ox:.2}" y2="{SIZE}"/>"#);
    for s in &shapes {
        let mut d = String::new();
        for (i, z) in s.points.iter().enumerate() {
            let (x, y) = frame.map(*z);
            let _ = write!(d, "{}{x:.2},{y:.2}", if i == 0 { "M" } else { " L" });
        }
        let _ = writeln!(svg, r#"<path class="{}" d="{d} Z"/>"#, s.class);
    }
    for z in &roots {
        let (x, y) = frame.map(*z);
        let mut d = String::new();
        for k in 0..3 {
            let (s, c) = (std::f64::consts::PI * k as f64 / 3.0).sin_cos();
            let _ = write!(d, "M{:.2},{:.2} L{:.2},{:.2} ", x - 5.0 * c, y - 5.0 * s, x + 5.0 * c, y + 5.0 * s);
        }
        let _ = writeln!(svg, r#"<path class="root" d="{}"/>"#, d.trim_end());
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
