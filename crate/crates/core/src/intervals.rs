//! Super edge-magic and magic intervals.
//!
//! Every valence `k` of a labeling satisfies `q k = Σ deg(u) f(u) + Σ f(e)`,
//! so the extremes of that weighted sum over all bijections bound the
//! valence. The extremes come from pairing weights and labels in sorted
//! order (largest weight with smallest label for the minimum).

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalReport {
    pub lo: i64,
    pub hi: i64,
    #[serde(serialize_with = "ratio_str")]
    pub raw_min: Ratio<i64>,
    #[serde(serialize_with = "ratio_str")]
    pub raw_max: Ratio<i64>,
    pub empty: bool,
}

fn ratio_str<S: Serializer>(r: &Ratio<i64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_ratio(r))
}

/// Always `numer/denom`, reduced.
pub fn format_ratio(r: &Ratio<i64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl IntervalReport {
    fn from_raw(raw_min: Ratio<i64>, raw_max: Ratio<i64>) -> Self {
        let lo = raw_min.ceil().to_integer();
        let hi = raw_max.floor().to_integer();
        Self {
            lo,
            hi,
            raw_min,
            raw_max,
            empty: lo > hi,
        }
    }

    pub fn contains(&self, k: usize) -> bool {
        !self.empty && (self.lo..=self.hi).contains(&(k as i64))
    }

    /// Integers in `[lo, hi]`; empty when the interval is.
    pub fn values(&self) -> impl Iterator<Item = usize> {
        let (lo, hi) = if self.empty { (1, 0) } else { (self.lo, self.hi) };
        (lo.max(0) as usize)..=(hi.max(0) as usize)
    }

    pub fn len(&self) -> usize {
        if self.empty {
            0
        } else {
            (self.hi - self.lo + 1) as usize
        }
    }

    pub fn is_empty(&self) -> bool {
        self.empty
    }
}

/// `(min, max)` of `Σ w_i l_i` over all bijections between `weights` and
/// `labels`.
fn rearrangement_extremes(weights: &[usize], labels: &[usize]) -> (i64, i64) {
    let mut w: Vec<i64> = weights.iter().map(|&x| x as i64).collect();
    let mut l: Vec<i64> = labels.iter().map(|&x| x as i64).collect();
    // stable sorts keep ties in input order
    w.sort_by(|a, b| b.cmp(a));
    l.sort();
    let min = w.iter().zip(&l).map(|(a, b)| a * b).sum();
    let max = w.iter().zip(l.iter().rev()).map(|(a, b)| a * b).sum();
    (min, max)
}

/// `I_G` from `S_G`: vertices take `[1, p]`, edges the fixed block
/// `[p+1, p+q]`.
pub fn sem_interval(g: &Graph) -> Result<IntervalReport> {
    if g.q() == 0 {
        return Err(Error::NoEdges);
    }
    let (p, q) = (g.p(), g.q());
    let labels: Vec<usize> = (1..=p).collect();
    let (min, max) = rearrangement_extremes(&g.degrees(), &labels);
    let block: i64 = (p + 1..=p + q).map(|i| i as i64).sum();
    let q = q as i64;
    Ok(IntervalReport::from_raw(
        Ratio::new(min + block, q),
        Ratio::new(max + block, q),
    ))
}

/// `J_G` from `T_G`: weight `deg(u)` per vertex and 1 per edge against
/// `[1, p+q]`.
pub fn em_interval(g: &Graph) -> Result<IntervalReport> {
    if g.q() == 0 {
        return Err(Error::NoEdges);
    }
    let mut weights = g.degrees();
    weights.extend(std::iter::repeat_n(1, g.q()));
    let labels: Vec<usize> = (1..=g.p() + g.q()).collect();
    let (min, max) = rearrangement_extremes(&weights, &labels);
    let q = g.q() as i64;
    Ok(IntervalReport::from_raw(Ratio::new(min, q), Ratio::new(max, q)))
}

/// `(p+q+3, 2(p+q))`, the classical bounds on any edge-magic valence. They
/// hold for graphs with no loops and no isolated vertices; see
/// [`valence_bounds`] for graphs with loops.
pub fn trivial_valence_bounds(g: &Graph) -> Result<(usize, usize)> {
    if g.q() == 0 {
        return Err(Error::NoEdges);
    }
    let n = g.p() + g.q();
    Ok((n + 3, 2 * n))
}

/// Bounds that also cover loops: a loop at a vertex labeled 1 carrying
/// label `p+q` sums to `p+q+2`, and the complement gives `2(p+q)+1`.
/// `None` when some vertex is isolated, since then label `p+q` may sit on
/// a vertex that takes part in no sum.
pub fn valence_bounds(g: &Graph) -> Result<Option<(usize, usize)>> {
    let (lo, hi) = trivial_valence_bounds(g)?;
    if g.degrees().contains(&0) {
        return Ok(None);
    }
    Ok(Some(if g.has_loops() { (lo - 1, hi + 1) } else { (lo, hi) }))
}
