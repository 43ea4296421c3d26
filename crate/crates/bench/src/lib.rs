//! Fixtures shared by the criterion benchmarks.

use gt_core::corpus::{corpus_under_60, NamedGroup};

/// One group per composite order below 60, the first the corpus lists.
pub fn one_per_composite_order() -> Vec<NamedGroup> {
    let mut out: Vec<NamedGroup> = Vec::new();
    for g in corpus_under_60() {
        let n = g.group.order();
        if n >= 4 && !gt_core::arith::is_prime(n) && out.last().map(|h| h.group.order()) != Some(n) {
            out.push(g);
        }
    }
    out
}
