//! Graphviz output with vertices pinned to a circle.

use std::f64::consts::PI;
use std::fmt::Write as _;

use edmop_core::{Graph, MopCertificate};

const RADIUS: f64 = 3.0;

/// A `neato` graph named `name`. With a certificate the vertices go around
/// the circle in outer-cycle order, otherwise in label order.
pub fn emit_dot(g: &Graph, cert: Option<&MopCertificate>, name: &str) -> String {
    let order: Vec<usize> = match cert {
        Some(c) if c.order() == g.order() => c.cycle.clone(),
        _ => (0..g.order()).collect(),
    };
    let n = order.len() as f64;
    let mut out = String::new();
    writeln!(out, "graph {name} {{").unwrap();
    writeln!(out, "  layout=neato;").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for (i, &v) in order.iter().enumerate() {
        let angle = 2.0 * PI * i as f64 / n;
        let (x, y) = (RADIUS * angle.cos(), RADIUS * angle.sin());
        // avoid printing "-0.000"
        let fix = |c: f64| if c.abs() < 5e-4 { 0.0 } else { c };
        writeln!(out, "  {v} [pos=\"{:.3},{:.3}!\"];", fix(x), fix(y)).unwrap();
    }
    for e in g.edges() {
        writeln!(out, "  {} -- {};", e.lo(), e.hi()).unwrap();
    }
    out.push_str("}\n");
    out
}
