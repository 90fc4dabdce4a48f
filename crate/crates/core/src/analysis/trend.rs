//! Tabulates exact minimal spans of the distance game with gap tuple
//! (d, 1) against two published closed-form estimates: (4d-1)n/3 + O(d)
//! on complete graphs, and about p+q+2d on complete bipartite graphs
//! regardless of extra isolated vertices. The unspecified O(d) term
//! makes the table informational only; nothing is asserted against it.

use crate::analysis::{minimal_span, SpanResult};
use crate::games::Variant;
use crate::graph::{complete, complete_bipartite, with_isolated, Graph};
use crate::solver::SolveOptions;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TrendRow {
    pub graph_name: String,
    pub d: u32,
    pub order: usize,
    /// Least span with an Alice win in the searched range; None when the
    /// sweep found none or a cell went unsolved below the first win.
    pub minimal_alice_span: Option<i32>,
    pub searched_up_to: i32,
    pub reference_estimate: f64,
    pub reference_formula: String,
}

fn row(g: &Graph, d: u32, ceiling: i32, estimate: f64, formula: &str, options: &SolveOptions) -> TrendRow {
    let variant = Variant::Dist {
        constraints: vec![d, 1],
    };
    let span: SpanResult = minimal_span(&variant, g, 0, ceiling, options);
    let minimal = if span.minimal_span_reliable {
        span.minimal_alice_span
    } else {
        None
    };
    TrendRow {
        graph_name: g.display_name(),
        d,
        order: g.n(),
        minimal_alice_span: minimal,
        searched_up_to: ceiling,
        reference_estimate: estimate,
        reference_formula: formula.to_string(),
    }
}

/// Sweeps K_n for n in 1..=n_max and K_{p,q} (p <= q, p+q <= n_max) with
/// 0 or 1 extra isolated vertices, for each gap d in `d_values` (zeros
/// are skipped: the tuple (0, 1) is not a valid non-increasing gap
/// sequence). Spans are searched from 0 up to a generous per-row ceiling.
pub fn ldone_trend(d_values: &[u32], n_max: usize, options: &SolveOptions) -> Vec<TrendRow> {
    let mut rows = Vec::new();
    for &d in d_values.iter().filter(|&&d| d > 0) {
        for n in 1..=n_max {
            let g = complete(n).expect("complete graph");
            let ceiling = 2 * d as i32 * (n as i32 - 1) + 2;
            let estimate = f64::from(4 * d - 1) * n as f64 / 3.0;
            rows.push(row(&g, d, ceiling, estimate, "(4d-1)*n/3 + O(d)", options));
        }
        for p in 1..=n_max {
            for q in p..=n_max {
                if p + q > n_max {
                    continue;
                }
                for iso in 0..=1usize {
                    let base = complete_bipartite(p, q).expect("complete bipartite");
                    let g = with_isolated(&base, iso);
                    let reference = (p + q) as i32 + 2 * d as i32;
                    rows.push(row(
                        &g,
                        d,
                        2 * reference,
                        f64::from(reference),
                        "p+q+2d",
                        options,
                    ));
                }
            }
        }
    }
    rows
}
