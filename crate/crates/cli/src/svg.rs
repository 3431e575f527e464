//! Hand-emitted SVG stem plots for discrete wavefunctions: a grid of
//! panels, one row per deformation value, one column per level. No
//! plotting dependency; the output is a static SVG 1.1 document with fixed
//! formatting, so identical inputs give identical bytes.

/// One stem-plot panel: discrete points over the position grid.
pub struct Panel {
    pub row_label: String,
    pub column_label: String,
    pub points: Vec<(f64, f64)>,
}

const PANEL_W: f64 = 240.0;
const PANEL_H: f64 = 110.0;
const GAP_X: f64 = 18.0;
const GAP_Y: f64 = 16.0;
const MARGIN_L: f64 = 56.0;
const MARGIN_T: f64 = 34.0;
const MARGIN_R: f64 = 16.0;
const MARGIN_B: f64 = 14.0;

pub fn render_grid(panels: &[Vec<Panel>]) -> String {
    let rows = panels.len();
    let cols = panels.first().map_or(0, Vec::len);
    let width = MARGIN_L + cols as f64 * (PANEL_W + GAP_X) - GAP_X + MARGIN_R;
    let height = MARGIN_T + rows as f64 * (PANEL_H + GAP_Y) - GAP_Y + MARGIN_B;

    let mut x_max = 1.0f64;
    let mut y_max = 0.0f64;
    for row in panels {
        for panel in row {
            for &(q, v) in &panel.points {
                x_max = x_max.max(q.abs());
                y_max = y_max.max(v.abs());
            }
        }
    }
    let x_span = x_max + 1.0;
    let y_span = (y_max * 1.08).max(1e-3);

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{width:.0}\" height=\"{height:.0}\" \
         viewBox=\"0 0 {width:.0} {height:.0}\">\n"
    ));
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    for (r, row) in panels.iter().enumerate() {
        for (col, panel) in row.iter().enumerate() {
            let x0 = MARGIN_L + col as f64 * (PANEL_W + GAP_X);
            let y0 = MARGIN_T + r as f64 * (PANEL_H + GAP_Y);
            let mid_y = y0 + PANEL_H / 2.0;
            let to_x = |q: f64| x0 + (q + x_span) / (2.0 * x_span) * PANEL_W;
            let to_y = |v: f64| mid_y - v / y_span * (PANEL_H / 2.0);

            out.push_str(&format!(
                "<rect x=\"{x0:.2}\" y=\"{y0:.2}\" width=\"{PANEL_W:.2}\" \
                 height=\"{PANEL_H:.2}\" fill=\"none\" stroke=\"#cccccc\" \
                 stroke-width=\"0.8\"/>\n"
            ));
            out.push_str(&format!(
                "<line x1=\"{x0:.2}\" y1=\"{mid_y:.2}\" x2=\"{:.2}\" \
                 y2=\"{mid_y:.2}\" stroke=\"#999999\" stroke-width=\"0.6\"/>\n",
                x0 + PANEL_W
            ));
            for &(q, v) in &panel.points {
                let px = to_x(q);
                let py = to_y(v);
                out.push_str(&format!(
                    "<line x1=\"{px:.2}\" y1=\"{mid_y:.2}\" x2=\"{px:.2}\" \
                     y2=\"{py:.2}\" stroke=\"#7799bb\" stroke-width=\"0.8\"/>\n"
                ));
                out.push_str(&format!(
                    "<circle cx=\"{px:.2}\" cy=\"{py:.2}\" r=\"1.8\" \
                     fill=\"#2255aa\"/>\n"
                ));
            }
            if r == 0 {
                out.push_str(&format!(
                    "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\" \
                     font-family=\"sans-serif\" font-size=\"12\">{}</text>\n",
                    x0 + PANEL_W / 2.0,
                    MARGIN_T - 12.0,
                    panel.column_label
                ));
            }
            if col == 0 {
                out.push_str(&format!(
                    "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\" \
                     font-family=\"sans-serif\" font-size=\"11\" \
                     transform=\"rotate(-90 {:.2} {:.2})\">{}</text>\n",
                    MARGIN_L - 34.0,
                    mid_y,
                    MARGIN_L - 34.0,
                    mid_y,
                    panel.row_label
                ));
            }
        }
    }
    out.push_str("</svg>\n");
    out
}
