//! Step-function plots: horizontal segments over `t` in `[0, 1]`, integer
//! gridlines, no endpoint markers.

use cobdist::exactnum::approx;
use cobdist::StepFunction;

const W: f64 = 720.0;
const H: f64 = 420.0;
const MARGIN: f64 = 48.0;

pub fn render_step_svg(f: &StepFunction, title: &str) -> String {
    let values = f.interval_values();
    let vmin = (*values.iter().min().unwrap()).min(0);
    let vmax = (*values.iter().max().unwrap()).max(0);
    let span = f64::from((vmax - vmin).max(1) as i32);

    let x = |t: f64| MARGIN + t * (W - 2.0 * MARGIN);
    let y = |v: f64| H - MARGIN - (v - vmin as f64) / span * (H - 2.0 * MARGIN);

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" \
         viewBox=\"0 0 {W} {H}\">\n<rect width=\"{W}\" height=\"{H}\" fill=\"white\"/>\n"
    ));
    out.push_str(&format!(
        "<text x=\"{}\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" \
         font-size=\"15\">{}</text>\n",
        W / 2.0,
        title
    ));

    // Integer gridlines and axis labels.
    for v in vmin..=vmax {
        let yy = y(f64::from(v as i32));
        let style = if v == 0 {
            "stroke=\"#555\" stroke-width=\"1.2\""
        } else {
            "stroke=\"#ccc\" stroke-width=\"0.8\""
        };
        out.push_str(&format!(
            "<line x1=\"{}\" y1=\"{yy}\" x2=\"{}\" y2=\"{yy}\" {style}/>\n",
            x(0.0),
            x(1.0)
        ));
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" text-anchor=\"end\" font-family=\"sans-serif\" \
             font-size=\"11\">{v}</text>\n",
            x(0.0) - 6.0,
            yy + 4.0
        ));
    }
    for i in 0..=10 {
        let t = f64::from(i) / 10.0;
        let xx = x(t);
        out.push_str(&format!(
            "<line x1=\"{xx}\" y1=\"{}\" x2=\"{xx}\" y2=\"{}\" stroke=\"#ccc\" \
             stroke-width=\"0.8\"/>\n",
            y(vmin as f64),
            y(vmin as f64) + 4.0
        ));
        if i % 5 == 0 {
            out.push_str(&format!(
                "<text x=\"{xx}\" y=\"{}\" text-anchor=\"middle\" font-family=\"sans-serif\" \
                 font-size=\"11\">{:.1}</text>\n",
                y(vmin as f64) + 18.0,
                t
            ));
        }
    }

    // One horizontal segment per interval; light connectors at the jumps.
    let mut lo = 0.0f64;
    for (i, v) in values.iter().enumerate() {
        let hi = if i < f.breakpoints().len() {
            approx(&f.breakpoints()[i])
        } else {
            1.0
        };
        let yy = y(*v as f64);
        out.push_str(&format!(
            "<line x1=\"{}\" y1=\"{yy}\" x2=\"{}\" y2=\"{yy}\" stroke=\"#1f5fbf\" \
             stroke-width=\"2.2\"/>\n",
            x(lo),
            x(hi)
        ));
        if i < f.breakpoints().len() {
            let next = y(values[i + 1] as f64);
            out.push_str(&format!(
                "<line x1=\"{}\" y1=\"{yy}\" x2=\"{}\" y2=\"{next}\" stroke=\"#9ab\" \
                 stroke-width=\"0.9\" stroke-dasharray=\"3,3\"/>\n",
                x(hi),
                x(hi)
            ));
        }
        lo = hi;
    }
    out.push_str("</svg>\n");
    out
}
