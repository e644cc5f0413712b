use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, Graph};

/// Largest order for exhaustive labelled enumeration.
pub const MAX_EXHAUSTIVE_ORDER: usize = 8;

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::Capacity {
            order: n,
            max: MAX_EXHAUSTIVE_ORDER,
        });
    }
    Ok(())
}

/// Every labelled graph on `n` vertices, by pair mask in graph6 bit order.
pub fn labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_order(n)?;
    let total = 1u64 << pair_count(n);
    Ok((0..total).map(move |m| Graph::from_pair_mask(n, m).expect("order checked")))
}

/// Labelled graphs passing `filter`; with `dedup`, only the first member
/// of each isomorphism class is kept.
pub fn enumerate_graphs<F>(n: usize, filter: F, dedup: bool) -> Result<impl Iterator<Item = Graph>>
where
    F: Fn(&Graph) -> bool,
{
    let mut seen: HashSet<Graph> = HashSet::new();
    Ok(labeled_graphs(n)?.filter(move |g| filter(g) && (!dedup || seen.insert(canonical_form(g)))))
}

/// G(n, p) with a ChaCha8 stream seeded from `seed`; pairs are drawn in
/// graph6 bit order.
pub fn sample_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    gnp_with(n, p, &mut rng)
}

pub fn gnp_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Domain(format!("edge probability must lie in [0, 1], got {p}")));
    }
    let mut g = Graph::empty(n)?;
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                g.insert_edge(i, j);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_graphs(3, Graph::is_connected, false).unwrap().count(), 4);
        assert_eq!(labeled_graphs(4).unwrap().count(), 64);
        assert_eq!(enumerate_graphs(4, |_| true, true).unwrap().count(), 11);
        assert!(labeled_graphs(9).is_err());
    }

    #[test]
    fn gnp_extremes_and_determinism() {
        assert_eq!(sample_gnp(5, 0.0, 1).unwrap(), Graph::empty(5).unwrap());
        assert_eq!(sample_gnp(5, 1.0, 1).unwrap(), Graph::complete(5).unwrap());
        assert_eq!(sample_gnp(10, 0.5, 42).unwrap(), sample_gnp(10, 0.5, 42).unwrap());
        assert!(sample_gnp(5, 1.5, 1).is_err());
    }
}
