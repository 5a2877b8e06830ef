//! Young's seminormal form as an independent model: the sum of the
//! transpositions through 1 is scalar exactly on rectangular shapes.

use cherednik::algebra::{format_rat, Partition};
use cherednik::onewtype::{seminormal_generators, seminormal_scalar};

fn main() {
    for n in 2..=8 {
        for lam in Partition::all(n) {
            let dim = seminormal_generators(&lam).first().map_or(1, |m| m.rows());
            match (seminormal_scalar(&lam), lam.is_rectangle()) {
                (Some(c), Some((k, d))) => println!(
                    "{:<16} dim {dim:>3}  scalar, c = {}  (k-d = {})",
                    lam.to_string(),
                    format_rat(&c),
                    k as i64 - d as i64
                ),
                (None, None) => {}
                (s, r) => println!(
                    "{:<16} unexpected: scalar {:?}, rectangle {r:?}",
                    lam.to_string(),
                    s.map(|c| format_rat(&c))
                ),
            }
        }
    }
}
