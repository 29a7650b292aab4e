//! Drawings of chord diagrams and squares with bands, as SVG 1.1 or TikZ.
//!
//! Both back ends draw the same scene, built in coordinates with `y` up.
//! A chord diagram is a vertical line with its arcs to the right, each
//! labelled by its twist. A square with bands has the bands as thick
//! curves on its right edge, a half-twist glyph on every twisted band, and
//! the curves of the datum drawn through the square and along the bands.

use std::fmt::Write as _;

use swb_core::chord::Tcd;
use swb_core::swb::SwbDatum;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Svg,
    Tikz,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct P(f64, f64);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Pen {
    Outline,
    Band,
    Strand,
    Glyph,
}

#[derive(Debug, Clone)]
enum Prim {
    Line(P, P, Pen),
    Curve([P; 4], Pen),
    Square(P, f64),
    Dot(P),
    Label(P, String),
}

struct Scene {
    title: String,
    prims: Vec<Prim>,
}

const UNIT: f64 = 30.0;
const MARGIN: f64 = 20.0;

fn arc_curve(x: f64, y0: f64, y1: f64, reach: f64) -> [P; 4] {
    [P(x, y0), P(x + reach, y0), P(x + reach, y1), P(x, y1)]
}

fn chord_scene(t: &Tcd) -> Scene {
    let top = (t.sites() + 1) as f64 * UNIT;
    let mut prims = vec![Prim::Line(P(0.0, 0.0), P(0.0, top), Pen::Outline)];
    for i in 1..=t.sites() {
        let y = i as f64 * UNIT;
        prims.push(Prim::Dot(P(0.0, y)));
        prims.push(Prim::Label(P(-14.0, y - 4.0), i.to_string()));
    }
    for a in t.arcs() {
        let (y0, y1) = (a.lo as f64 * UNIT, a.hi as f64 * UNIT);
        let reach = 0.8 * (y1 - y0);
        prims.push(Prim::Curve(arc_curve(0.0, y0, y1, reach), Pen::Outline));
        let apex = P(0.75 * reach + 6.0, (y0 + y1) / 2.0 - 4.0);
        prims.push(Prim::Label(apex, u8::from(a.twisted).to_string()));
    }
    Scene { title: format!("chord diagram of rank {}", t.rank()), prims }
}

fn swb_scene(th: &SwbDatum) -> Scene {
    let frame = th.frame();
    let t = frame.tcd();
    let sites = t.sites();
    let widest = frame.levels().iter().copied().max().unwrap_or(0) as f64;
    let side = (sites as f64 * UNIT).max((widest + 1.0) * UNIT * 0.6).max(2.0 * UNIT);
    let seg = if sites == 0 { side } else { side / sites as f64 };
    let top = frame.top();

    // position of the vertex (level, slot)
    let pos = |level: usize, slot: usize| -> P {
        let f = frame.level_len(level) as f64;
        let frac = slot as f64 / (f + 1.0);
        if level == 0 {
            P(frac * side, 0.0)
        } else if level == top {
            P(frac * side, side)
        } else {
            P(side, (level - 1) as f64 * seg + frac * seg)
        }
    };
    let reach = |lo: usize, hi: usize| 0.5 * (hi - lo) as f64 * seg + 0.8 * seg;

    let mut prims = vec![Prim::Square(P(0.0, 0.0), side)];
    for a in t.arcs() {
        let mid = |l: usize| (l as f64 - 0.5) * seg;
        let r = reach(a.lo, a.hi);
        prims.push(Prim::Curve(arc_curve(side, mid(a.lo), mid(a.hi), r), Pen::Band));
        if a.twisted {
            let c = P(side + 0.75 * r, (mid(a.lo) + mid(a.hi)) / 2.0);
            let h = 0.25 * seg;
            prims.push(Prim::Line(P(c.0 - h, c.1 - h), P(c.0 + h, c.1 + h), Pen::Glyph));
            prims.push(Prim::Line(P(c.0 - h, c.1 + h), P(c.0 + h, c.1 - h), Pen::Glyph));
        }
    }

    // strands along the bands, one per slot of the lower end
    for a in t.arcs() {
        let f = frame.level_len(a.lo);
        for k in 1..=f {
            let other = if a.twisted { k } else { f + 1 - k };
            let (p, q) = (pos(a.lo, k), pos(a.hi, other));
            let spread = (f as f64 + 1.0 - 2.0 * k as f64) / (f as f64 + 1.0) * 0.3 * seg;
            let r = reach(a.lo, a.hi) + spread;
            prims.push(Prim::Curve([p, P(side + r, p.1), P(side + r, q.1), q], Pen::Strand));
        }
    }

    // curves inside the square, bowed toward the centre
    let centre = P(side / 2.0, side / 2.0);
    for (u, v) in th.pairs() {
        let (p, q) = (pos(u.level, u.slot), pos(v.level, v.slot));
        let m = P((p.0 + q.0) / 2.0, (p.1 + q.1) / 2.0);
        let c = P(m.0 + 0.3 * (centre.0 - m.0), m.1 + 0.3 * (centre.1 - m.1));
        prims.push(Prim::Curve([p, c, c, q], Pen::Strand));
    }
    for i in 0..frame.total() {
        let v = frame.vertex(i);
        prims.push(Prim::Dot(pos(v.level, v.slot)));
    }
    let title = format!("square with bands of rank {}, type ({}, {})", t.rank(), th.south(), th.north());
    Scene { title, prims }
}

impl Scene {
    fn bounds(&self) -> (P, P) {
        let mut lo = P(f64::INFINITY, f64::INFINITY);
        let mut hi = P(f64::NEG_INFINITY, f64::NEG_INFINITY);
        let mut grow = |p: P| {
            lo = P(lo.0.min(p.0), lo.1.min(p.1));
            hi = P(hi.0.max(p.0), hi.1.max(p.1));
        };
        for prim in &self.prims {
            match prim {
                Prim::Line(a, b, _) => [*a, *b].into_iter().for_each(&mut grow),
                Prim::Curve(ps, _) => ps.iter().copied().for_each(&mut grow),
                Prim::Square(p, s) => [*p, P(p.0 + s, p.1 + s)].into_iter().for_each(&mut grow),
                Prim::Dot(p) => grow(*p),
                Prim::Label(p, s) => [*p, P(p.0 + 7.0 * s.len() as f64, p.1 + 10.0)].into_iter().for_each(&mut grow),
            }
        }
        (lo, hi)
    }
}

fn svg_style(pen: Pen) -> &'static str {
    match pen {
        Pen::Outline => r##"fill="none" stroke="#000000" stroke-width="1.5""##,
        Pen::Band => r##"fill="none" stroke="#b8c4d6" stroke-width="14" stroke-linecap="butt""##,
        Pen::Strand => r##"fill="none" stroke="#1f5fa8" stroke-width="1.2""##,
        Pen::Glyph => r##"fill="none" stroke="#a8321f" stroke-width="2""##,
    }
}

fn svg(scene: &Scene) -> String {
    let (lo, hi) = scene.bounds();
    let (w, h) = (hi.0 - lo.0 + 2.0 * MARGIN, hi.1 - lo.1 + 2.0 * MARGIN);
    // flip so that y grows upward in the scene
    let tr = |p: P| P(p.0 - lo.0 + MARGIN, hi.1 - p.1 + MARGIN);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    out.push_str(
        "<!DOCTYPE svg PUBLIC \"-//W3C//DTD SVG 1.1//EN\" \"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd\">\n",
    );
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w:.1}\" height=\"{h:.1}\" viewBox=\"0 0 {w:.1} {h:.1}\">"
    );
    let _ = writeln!(out, "  <title>{}</title>", scene.title);
    for prim in &scene.prims {
        match prim {
            Prim::Line(a, b, pen) => {
                let (a, b) = (tr(*a), tr(*b));
                let _ = writeln!(
                    out,
                    "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" {}/>",
                    a.0,
                    a.1,
                    b.0,
                    b.1,
                    svg_style(*pen)
                );
            }
            Prim::Curve(ps, pen) => {
                let [a, b, c, d] = ps.map(tr);
                let _ = writeln!(
                    out,
                    "  <path d=\"M {:.2} {:.2} C {:.2} {:.2} {:.2} {:.2} {:.2} {:.2}\" {}/>",
                    a.0,
                    a.1,
                    b.0,
                    b.1,
                    c.0,
                    c.1,
                    d.0,
                    d.1,
                    svg_style(*pen)
                );
            }
            Prim::Square(p, s) => {
                let q = tr(P(p.0, p.1 + s));
                let _ = writeln!(
                    out,
                    "  <rect x=\"{:.2}\" y=\"{:.2}\" width=\"{s:.2}\" height=\"{s:.2}\" {}/>",
                    q.0,
                    q.1,
                    svg_style(Pen::Outline)
                );
            }
            Prim::Dot(p) => {
                let p = tr(*p);
                let _ = writeln!(out, "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"2\" fill=\"#000000\"/>", p.0, p.1);
            }
            Prim::Label(p, s) => {
                let p = tr(*p);
                let _ = writeln!(
                    out,
                    "  <text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"10\">{s}</text>",
                    p.0, p.1
                );
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

fn tikz_style(pen: Pen) -> &'static str {
    match pen {
        Pen::Outline => "thick",
        Pen::Band => "line width=14pt, blue!20",
        Pen::Strand => "blue!70!black",
        Pen::Glyph => "red!70!black, line width=2pt",
    }
}

fn tikz(scene: &Scene) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "% {}", scene.title);
    out.push_str("\\begin{tikzpicture}[x=1pt, y=1pt]\n");
    for prim in &scene.prims {
        match prim {
            Prim::Line(a, b, pen) => {
                let _ =
                    writeln!(out, "  \\draw[{}] ({:.2},{:.2}) -- ({:.2},{:.2});", tikz_style(*pen), a.0, a.1, b.0, b.1);
            }
            Prim::Curve([a, b, c, d], pen) => {
                let _ = writeln!(
                    out,
                    "  \\draw[{}] ({:.2},{:.2}) .. controls ({:.2},{:.2}) and ({:.2},{:.2}) .. ({:.2},{:.2});",
                    tikz_style(*pen),
                    a.0,
                    a.1,
                    b.0,
                    b.1,
                    c.0,
                    c.1,
                    d.0,
                    d.1
                );
            }
            Prim::Square(p, s) => {
                let _ =
                    writeln!(out, "  \\draw[thick] ({:.2},{:.2}) rectangle ({:.2},{:.2});", p.0, p.1, p.0 + s, p.1 + s);
            }
            Prim::Dot(p) => {
                let _ = writeln!(out, "  \\fill ({:.2},{:.2}) circle (2pt);", p.0, p.1);
            }
            Prim::Label(p, s) => {
                let _ =
                    writeln!(out, "  \\node[anchor=south west, font=\\scriptsize] at ({:.2},{:.2}) {{{s}}};", p.0, p.1);
            }
        }
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

fn draw(scene: &Scene, format: Format) -> String {
    match format {
        Format::Svg => svg(scene),
        Format::Tikz => tikz(scene),
    }
}

pub fn render_tcd(t: &Tcd, format: Format) -> String {
    draw(&chord_scene(t), format)
}

pub fn render_swb(th: &SwbDatum, format: Format) -> String {
    draw(&swb_scene(th), format)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_diagram_is_a_bare_line() {
        let s = render_tcd(&Tcd::empty(), Format::Svg);
        assert_eq!(s.matches("<line").count(), 1);
        assert!(!s.contains("<path") && !s.contains("<text"));
    }

    #[test]
    fn torus_has_two_arcs_labelled_zero() {
        let s = render_tcd(&Tcd::tor(), Format::Svg);
        assert_eq!(s.matches("<path").count(), 2);
        let labels: Vec<_> =
            s.lines().filter(|l| l.contains("<text")).map(|l| l.rsplit("\">").next().unwrap()).collect();
        // four site numbers, then the two twist labels
        assert_eq!(labels.len(), 6);
        assert_eq!(&labels[4..], ["0</text>", "0</text>"]);
    }

    #[test]
    fn crosscap_generator_has_one_twisted_band() {
        let th = swb_core::swb::mobius_gen(1);
        let s = render_swb(&th, Format::Svg);
        assert_eq!(s.matches("<rect").count(), 1);
        assert_eq!(s.matches("stroke-width=\"14\"").count(), 1);
        assert_eq!(s.matches("#a8321f").count(), 2);
        // one strand along the band
        assert_eq!(th.frame().complexity(), 1);
    }

    #[test]
    fn twisted_bands_get_a_glyph() {
        let th = swb_core::fixtures::theta1();
        let s = render_swb(&th, Format::Tikz);
        // one twisted band, drawn as two crossing strokes
        assert_eq!(s.matches("red!70!black").count(), 2);
    }
}
