//! Wall diagrams in the `(beta, alpha)` plane.
//!
//! A [`Scene`] holds exact geometry. Conversion to floating point happens only
//! in [`render_svg`], with six decimals and a fixed element order (axes,
//! hyperbola, BMT circle, walls by descending radius), so identical scenes
//! render to identical bytes.

use std::fmt::Write as _;

use num_traits::{Signed, Zero};

use crate::chern::ChernCharacter;
use crate::error::Error;
use crate::rational::{int, to_f64, Rational};
use crate::stability::bmt_zero_circle;
use crate::walls::{enumerate_tilt_walls, hyperbola_alpha_sq, Region};

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 40.0;
const HYPERBOLA_SAMPLES: i64 = 240;

/// `beta in [beta_min, beta_max]`, `alpha in [0, alpha_max]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Viewport {
    pub beta_min: Rational,
    pub beta_max: Rational,
    pub alpha_max: Rational,
}

impl Viewport {
    pub fn new(beta_min: Rational, beta_max: Rational, alpha_max: Rational) -> Result<Self, Error> {
        if beta_min >= beta_max || !alpha_max.is_positive() {
            return Err(Error::DegenerateViewport(format!(
                "beta [{beta_min}, {beta_max}], alpha (0, {alpha_max}]"
            )));
        }
        Ok(Self {
            beta_min,
            beta_max,
            alpha_max,
        })
    }

    /// The wall-search region covered by the viewport.
    pub fn region(&self) -> Region {
        Region {
            beta_min: self.beta_min.clone(),
            beta_max: self.beta_max.clone(),
            alpha_sq_max: &self.alpha_max * &self.alpha_max,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Layer {
    Hyperbola,
    Bmt,
    Wall,
}

impl Layer {
    fn class(self) -> &'static str {
        match self {
            Layer::Hyperbola => "hyperbola",
            Layer::Bmt => "bmt",
            Layer::Wall => "wall",
        }
    }

    fn stroke(self) -> &'static str {
        match self {
            Layer::Hyperbola => "#1f77b4",
            Layer::Bmt => "#d62728",
            Layer::Wall => "#222222",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Drawable {
    /// Upper half of `(beta - center)^2 + alpha^2 = radius_sq`.
    Semicircle {
        layer: Layer,
        center: Rational,
        radius_sq: Rational,
        label: String,
    },
    /// Points `(beta, alpha^2)` joined in order.
    Polyline {
        layer: Layer,
        points: Vec<(Rational, Rational)>,
        label: String,
    },
    VerticalLine {
        layer: Layer,
        beta0: Rational,
        label: String,
    },
}

impl Drawable {
    fn layer(&self) -> Layer {
        match self {
            Drawable::Semicircle { layer, .. }
            | Drawable::Polyline { layer, .. }
            | Drawable::VerticalLine { layer, .. } => *layer,
        }
    }

    fn radius_sq(&self) -> Rational {
        match self {
            Drawable::Semicircle { radius_sq, .. } => radius_sq.clone(),
            _ => Rational::zero(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scene {
    pub viewport: Viewport,
    pub drawables: Vec<Drawable>,
}

impl Scene {
    pub fn empty(viewport: Viewport) -> Self {
        Self {
            viewport,
            drawables: Vec::new(),
        }
    }

    /// Hyperbola branch, BMT circle and every wall of `v` inside the viewport.
    pub fn for_class(v: &ChernCharacter, viewport: Viewport) -> Result<Self, Error> {
        let mut scene = Self::empty(viewport);
        scene.add_hyperbola(v);
        if let Some((center, radius_sq)) = bmt_zero_circle(v) {
            scene.drawables.push(Drawable::Semicircle {
                layer: Layer::Bmt,
                label: format!("BMT: (beta - ({center}))^2 + alpha^2 = {radius_sq}"),
                center,
                radius_sq,
            });
        }
        for wall in enumerate_tilt_walls(v, &scene.viewport.region())? {
            let label = format!("{} | {} + {}", wall.locus(), wall.sub(), wall.quotient());
            scene.drawables.push(Drawable::Semicircle {
                layer: Layer::Wall,
                center: wall.center().clone(),
                radius_sq: wall.radius_sq().clone(),
                label,
            });
        }
        Ok(scene)
    }

    /// Adds the branch of `Im Z(v) = 0` that carries the wall tops.
    fn add_hyperbola(&mut self, v: &ChernCharacter) {
        if v.r.is_zero() {
            if !v.c.is_zero() {
                let beta0 = &v.d / &v.c;
                self.drawables.push(Drawable::VerticalLine {
                    layer: Layer::Hyperbola,
                    label: format!("Im Z(v) = 0: beta = {beta0}"),
                    beta0,
                });
            }
            return;
        }
        let mu = &v.c / &v.r;
        let vp = &self.viewport;
        let step = (&vp.beta_max - &vp.beta_min) / int(HYPERBOLA_SAMPLES);
        let left = v.r.is_positive();
        let points: Vec<(Rational, Rational)> = (0..=HYPERBOLA_SAMPLES)
            .map(|i| &vp.beta_min + &step * int(i))
            .filter(|b| if left { b < &mu } else { b > &mu })
            .filter_map(|b| {
                let a = hyperbola_alpha_sq(v, &b).ok().flatten()?;
                Some((b, a))
            })
            .collect();
        if points.len() >= 2 {
            self.drawables.push(Drawable::Polyline {
                layer: Layer::Hyperbola,
                points,
                label: format!("Im Z(v) = 0 for v = {v}"),
            });
        }
    }
}

/// Six decimals, with negative zero printed as zero.
fn num(x: f64) -> String {
    let s = format!("{x:.6}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

struct Frame {
    beta_min: f64,
    sx: f64,
    sy: f64,
}

impl Frame {
    fn x(&self, beta: f64) -> f64 {
        MARGIN + (beta - self.beta_min) * self.sx
    }

    fn y(&self, alpha: f64) -> f64 {
        MARGIN + HEIGHT - alpha * self.sy
    }
}

pub fn render_svg(scene: &Scene) -> Result<Vec<u8>, Error> {
    let vp = &scene.viewport;
    if vp.beta_min >= vp.beta_max || !vp.alpha_max.is_positive() {
        return Err(Error::DegenerateViewport(format!(
            "beta [{}, {}], alpha (0, {}]",
            vp.beta_min, vp.beta_max, vp.alpha_max
        )));
    }
    let (b0, b1, amax) = (to_f64(&vp.beta_min), to_f64(&vp.beta_max), to_f64(&vp.alpha_max));
    let frame = Frame {
        beta_min: b0,
        sx: WIDTH / (b1 - b0),
        sy: HEIGHT / amax,
    };
    let total_w = WIDTH + 2.0 * MARGIN;
    let total_h = HEIGHT + 2.0 * MARGIN;
    let mut out = String::new();
    let o = &mut out;
    let _ = writeln!(o, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        o,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = num(total_w),
        h = num(total_h)
    );
    let _ = writeln!(
        o,
        "<title>beta in [{}, {}], alpha in (0, {}]</title>",
        vp.beta_min, vp.beta_max, vp.alpha_max
    );
    let _ = writeln!(
        o,
        r#"<defs><clipPath id="plot"><rect x="{}" y="{}" width="{}" height="{}"/></clipPath></defs>"#,
        num(MARGIN),
        num(MARGIN),
        num(WIDTH),
        num(HEIGHT)
    );

    // Axes: the beta-axis, the alpha-axis where beta = 0 is visible, and range labels.
    let _ = writeln!(o, r#"<g id="axes" stroke="black" stroke-width="1" font-family="sans-serif" font-size="12">"#);
    let _ = writeln!(
        o,
        r#"<line x1="{}" y1="{y}" x2="{}" y2="{y}"/>"#,
        num(frame.x(b0)),
        num(frame.x(b1)),
        y = num(frame.y(0.0))
    );
    if b0 <= 0.0 && 0.0 <= b1 {
        let _ = writeln!(
            o,
            r#"<line x1="{x}" y1="{}" x2="{x}" y2="{}"/>"#,
            num(frame.y(0.0)),
            num(frame.y(amax)),
            x = num(frame.x(0.0))
        );
    }
    let label_y = num(frame.y(0.0) + 16.0);
    let _ = writeln!(o, r#"<text x="{}" y="{label_y}" stroke="none">{}</text>"#, num(frame.x(b0)), escape(&vp.beta_min.to_string()));
    let _ = writeln!(o, r#"<text x="{}" y="{label_y}" stroke="none" text-anchor="end">{}</text>"#, num(frame.x(b1)), escape(&vp.beta_max.to_string()));
    let _ = writeln!(o, r#"<text x="{}" y="{}" stroke="none" text-anchor="middle">beta</text>"#, num(frame.x((b0 + b1) / 2.0)), num(frame.y(0.0) + 32.0));
    let _ = writeln!(o, r#"<text x="{}" y="{}" stroke="none">alpha (max {})</text>"#, num(MARGIN), num(MARGIN - 8.0), escape(&vp.alpha_max.to_string()));
    let _ = writeln!(o, "</g>");

    let mut ordered: Vec<&Drawable> = scene.drawables.iter().collect();
    ordered.sort_by(|a, b| {
        a.layer()
            .cmp(&b.layer())
            .then_with(|| b.radius_sq().cmp(&a.radius_sq()))
    });
    let _ = writeln!(o, r#"<g clip-path="url(#plot)" fill="none" stroke-width="1.5">"#);
    for d in ordered {
        render_drawable(o, &frame, d, amax);
    }
    let _ = writeln!(o, "</g>");
    let _ = writeln!(o, "</svg>");
    Ok(out.into_bytes())
}

fn render_drawable(o: &mut String, frame: &Frame, d: &Drawable, amax: f64) {
    let layer = d.layer();
    let head = format!(r#"class="{}" stroke="{}""#, layer.class(), layer.stroke());
    match d {
        Drawable::Semicircle {
            center,
            radius_sq,
            label,
            ..
        } => {
            let c = to_f64(center);
            let rho = to_f64(radius_sq).sqrt();
            let _ = writeln!(
                o,
                r#"<path {head} d="M {} {y0} A {} {} 0 0 1 {} {y0}"><title>{}</title></path>"#,
                num(frame.x(c - rho)),
                num(rho * frame.sx),
                num(rho * frame.sy),
                num(frame.x(c + rho)),
                escape(label),
                y0 = num(frame.y(0.0)),
            );
            if layer == Layer::Wall {
                let _ = writeln!(
                    o,
                    r#"<text x="{}" y="{}" stroke="none" fill="black" font-family="sans-serif" font-size="10" text-anchor="middle">{}</text>"#,
                    num(frame.x(c)),
                    num(frame.y(rho) - 4.0),
                    escape(&radius_sq.to_string())
                );
            }
        }
        Drawable::Polyline { points, label, .. } => {
            let coords: Vec<String> = points
                .iter()
                .map(|(b, a2)| format!("{},{}", num(frame.x(to_f64(b))), num(frame.y(to_f64(a2).sqrt()))))
                .collect();
            let _ = writeln!(
                o,
                r#"<polyline {head} points="{}"><title>{}</title></polyline>"#,
                coords.join(" "),
                escape(label)
            );
        }
        Drawable::VerticalLine { beta0, label, .. } => {
            let x = num(frame.x(to_f64(beta0)));
            let _ = writeln!(
                o,
                r#"<line {head} x1="{x}" y1="{}" x2="{x}" y2="{}"><title>{}</title></line>"#,
                num(frame.y(0.0)),
                num(frame.y(amax)),
                escape(label)
            );
        }
    }
}
