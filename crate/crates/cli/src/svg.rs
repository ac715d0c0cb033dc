//! Static SVG figure: the shaded polygon, one translucent arc per corner
//! cone, outward edge normals, and one arrow per objective colored by its
//! class. The output is built from plain string formatting so identical
//! inputs always produce identical bytes.

use fanlp::{ClassKind, LinearForm, Polygon, QuotientSet, Vector2};

const PALETTE: [&str; 8] = [
    "#1b6ca8", "#c2571a", "#2e7d32", "#8e24aa", "#c62828", "#00838f", "#6d4c41", "#37474f",
];

struct Frame {
    scale: f64,
    x0: f64,
    y1: f64,
}

impl Frame {
    fn map(&self, p: Vector2) -> (f64, f64) {
        ((p.x1 - self.x0) * self.scale, (self.y1 - p.x2) * self.scale)
    }

    fn pair(&self, p: Vector2) -> String {
        let (x, y) = self.map(p);
        format!("{},{}", num(x), num(y))
    }

    fn line_attrs(&self, a: Vector2, b: Vector2) -> String {
        let (x1, y1) = self.map(a);
        let (x2, y2) = self.map(b);
        format!(
            r#"x1="{}" y1="{}" x2="{}" y2="{}""#,
            num(x1),
            num(y1),
            num(x2),
            num(y2)
        )
    }
}

fn num(x: f64) -> String {
    let x = if x.abs() < 0.005 { 0.0 } else { x }; // keep "-0.00" out of the file
    format!("{x:.2}")
}

fn color_for(class_id: usize) -> &'static str {
    PALETTE[class_id % PALETTE.len()]
}

/// Renders the figure. `objectives` carries each form together with the id
/// of its class so arrows share the color of the cone they land in.
pub fn render(polygon: &Polygon, fan: &QuotientSet, objectives: &[(LinearForm, usize)]) -> String {
    let vs = polygon.vertices();
    let mut xmin = f64::INFINITY;
    let mut xmax = f64::NEG_INFINITY;
    let mut ymin = f64::INFINITY;
    let mut ymax = f64::NEG_INFINITY;
    for v in vs {
        xmin = xmin.min(v.x1);
        xmax = xmax.max(v.x1);
        ymin = ymin.min(v.x2);
        ymax = ymax.max(v.x2);
    }
    let dim = (xmax - xmin).max(ymax - ymin).max(1.0);
    let pad = 0.25 * dim;
    let (wx0, wx1) = (xmin - pad, xmax + pad);
    let (wy0, wy1) = (ymin - pad, ymax + pad);
    let scale = 640.0 / (wx1 - wx0).max(wy1 - wy0);
    let width = (wx1 - wx0) * scale;
    let height = (wy1 - wy0) * scale;
    let frame = Frame { scale, x0: wx0, y1: wy1 };

    let cone_r = 0.13 * dim;
    let normal_len = 0.10 * dim;
    let arrow_len = 0.30 * dim;
    let centroid = vs.iter().fold(Vector2::default(), |acc, v| acc + *v) * (1.0 / vs.len() as f64);

    let mut s = String::new();
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
        num(width),
        num(height),
        num(width),
        num(height)
    ));
    s.push_str(
        "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"8\" refY=\"5\" \
         markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">\
         <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"context-stroke\"/></marker></defs>\n",
    );

    let points: Vec<String> = vs.iter().map(|v| frame.pair(*v)).collect();
    s.push_str(&format!(
        "  <polygon class=\"region\" points=\"{}\" fill=\"#e8eef7\" stroke=\"#334\" stroke-width=\"1.5\"/>\n",
        points.join(" ")
    ));

    // Corner cones. The world arc runs counterclockwise from lo to hi; the
    // y-flip reverses orientation, so the SVG arc uses sweep flag 0. Cones
    // are open exterior angles, always narrower than a half turn, so the
    // large-arc flag stays 0 as well.
    for class in fan.corner_classes() {
        if let ClassKind::Corner { vertex_index, cone } = class.kind() {
            let v = vs[vertex_index];
            let p_lo = v + cone.lo().unit_vector() * cone_r;
            let p_hi = v + cone.hi().unit_vector() * cone_r;
            let r = num(cone_r * scale);
            s.push_str(&format!(
                "  <path class=\"corner-cone\" d=\"M {} L {} A {} {} 0 0 0 {} Z\" fill=\"{}\" fill-opacity=\"0.35\"/>\n",
                frame.pair(v),
                frame.pair(p_lo),
                r,
                r,
                frame.pair(p_hi),
                color_for(class.id())
            ));
        }
    }

    for (i, e) in polygon.edges().iter().enumerate() {
        let (tail, head) = polygon.edge_endpoints(i).expect("edge exists");
        let mid = (tail + head) * 0.5;
        let tip = mid + e.outward_normal * normal_len;
        s.push_str(&format!(
            "  <line class=\"edge-normal\" {} stroke=\"#667\" stroke-width=\"1\" marker-end=\"url(#arrow)\"/>\n",
            frame.line_attrs(mid, tip)
        ));
        let (lx, ly) = frame.map(mid + e.outward_normal * (normal_len * 1.7));
        s.push_str(&format!(
            "  <text class=\"edge-label\" x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\" fill=\"#667\">e{}</text>\n",
            num(lx),
            num(ly),
            i + 1
        ));
    }

    // Vertex markers, labeled along the bisector of the corner cone so the
    // text sits outside the region.
    for class in fan.corner_classes() {
        if let ClassKind::Corner { vertex_index, cone } = class.kind() {
            let v = vs[vertex_index];
            let (cx, cy) = frame.map(v);
            s.push_str(&format!(
                "  <circle class=\"vertex\" cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"#223\"/>\n",
                num(cx),
                num(cy)
            ));
            let mid = cone.lo().radians() + cone.width() / 2.0;
            let dir = Vector2::new(mid.cos(), mid.sin());
            let (lx, ly) = frame.map(v + dir * (cone_r * 1.35));
            s.push_str(&format!(
                "  <text class=\"vertex-label\" x=\"{}\" y=\"{}\" font-size=\"13\" text-anchor=\"middle\" fill=\"#223\">v{}</text>\n",
                num(lx),
                num(ly),
                vertex_index + 1
            ));
        }
    }

    for (k, (form, class_id)) in objectives.iter().enumerate() {
        let dir = form.direction_angle().unit_vector();
        let tip = centroid + dir * arrow_len;
        let color = color_for(*class_id);
        s.push_str(&format!(
            "  <line class=\"objective-arrow\" {} stroke=\"{}\" stroke-width=\"2\" marker-end=\"url(#arrow)\"/>\n",
            frame.line_attrs(centroid, tip),
            color
        ));
        let (lx, ly) = frame.map(centroid + dir * (arrow_len * 1.18));
        s.push_str(&format!(
            "  <text class=\"objective-label\" x=\"{}\" y=\"{}\" font-size=\"13\" text-anchor=\"middle\" fill=\"{}\">f{}</text>\n",
            num(lx),
            num(ly),
            color,
            k + 1
        ));
    }

    s.push_str("</svg>\n");
    s
}
