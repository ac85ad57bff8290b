//! Cycle-order combinatorics for highest weights of a fixed shape: the
//! ordering of `tau`-cycles by maximum, the assignment of sorted weight
//! entries to cycles, the distinguished sign positions, closures of
//! minors inside the support, and the closure-rank sequences that enter
//! the highest-weight exponent formula.

use serde::Serialize;

use crate::combinatorics::IndexSet;
use crate::error::CoreError;

use super::Shape;

/// Cycles of `tau` restricted to the support, each sorted ascending, the
/// list ordered by cycle maximum.
pub fn cycles_ordered(s: &Shape) -> Vec<Vec<usize>> {
    let support = s.support();
    let mut seen = vec![false; s.n + 1];
    let mut cycles = Vec::new();
    for &i in support.elements() {
        if seen[i] {
            continue;
        }
        let j = s.tau_of(i);
        if j == i {
            seen[i] = true;
            cycles.push(vec![i]);
        } else {
            seen[i] = true;
            seen[j] = true;
            let mut c = vec![i, j];
            c.sort_unstable();
            cycles.push(c);
        }
    }
    cycles.sort_by_key(|c| *c.last().unwrap());
    cycles
}

/// The weight data of a self-adjoint shape of rank `M` with a chosen
/// `r` vector of length `M`.
#[derive(Clone, Debug, Serialize)]
pub struct WeightCombinatorics {
    /// Cycles in increasing order of their maxima.
    pub cycles: Vec<Vec<usize>>,
    /// Sum of the sorted `r` block assigned to each cycle, same order.
    pub w_r: Vec<f64>,
    /// Positions (1-based into sorted `r`) of the second entry of each
    /// 2-cycle block; the epsilon entries forced to `-1`.
    pub w_eps: Vec<usize>,
    /// Sorted copy of `r` used for the block assignment.
    pub sorted_r: Vec<f64>,
}

impl WeightCombinatorics {
    pub fn new(s: &Shape, r: &[f64]) -> Result<Self, CoreError> {
        s.require_self_adjoint()?;
        let m = s.rank();
        if r.len() != m {
            return Err(CoreError::SizeMismatch(format!(
                "weight vector length {} != rank {m}",
                r.len()
            )));
        }
        let cycles = cycles_ordered(s);
        let mut sorted_r = r.to_vec();
        sorted_r.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut w_r = Vec::with_capacity(cycles.len());
        let mut w_eps = Vec::new();
        let mut pos = 0usize;
        for c in &cycles {
            let block = &sorted_r[pos..pos + c.len()];
            w_r.push(block.iter().sum());
            pos += c.len();
            if c.len() == 2 {
                w_eps.push(pos); // 1-based index of the block's second entry
            }
        }
        Ok(WeightCombinatorics {
            cycles,
            w_r,
            w_eps,
            sorted_r,
        })
    }

    fn cycle_index_of(&self, i: usize) -> Option<usize> {
        self.cycles.iter().position(|c| c.contains(&i))
    }

    /// Closure of a minor indexed inside the support: the union of all
    /// cycles up to the maximal one meeting `I ∪ J`.
    pub fn closure(&self, iuj: &IndexSet) -> Result<IndexSet, CoreError> {
        let top = iuj
            .elements()
            .iter()
            .filter_map(|&i| self.cycle_index_of(i))
            .max()
            .ok_or_else(|| {
                CoreError::Input("closure of an index set outside the support".into())
            })?;
        let mut all = Vec::new();
        for c in &self.cycles[..=top] {
            all.extend_from_slice(c);
        }
        all.sort_unstable();
        Ok(IndexSet::from_sorted(all))
    }

    /// Cycles meeting `P_[k]` whose image leaves `P_[k]`, in cycle order.
    pub fn open_cycles(&self, s: &Shape, k: usize) -> Vec<usize> {
        let p = s.p_prefix(k);
        (0..self.cycles.len())
            .filter(|&ci| {
                self.cycles[ci]
                    .iter()
                    .any(|&j| p.contains(j) && !p.contains(s.tau_of(j)))
            })
            .collect()
    }

    /// The closure-rank sequence for the rank-`k` leading minor: entry `i`
    /// is the rank of the closure after deleting the `i` largest open
    /// cycles from both index sets.
    pub fn closure_ranks(&self, s: &Shape, k: usize) -> Result<Vec<usize>, CoreError> {
        let open = self.open_cycles(s, k);
        let p = s.p_prefix(k);
        let tp = s.tau_image(&p);
        let mut out = Vec::with_capacity(open.len());
        for i in 0..open.len() {
            // Delete the i largest open cycles.
            let mut removed = IndexSet::empty();
            for &ci in open.iter().rev().take(i) {
                for &e in &self.cycles[ci] {
                    removed = removed.insert(e);
                }
            }
            let rest = p.minus(&removed).union(&tp.minus(&removed));
            out.push(self.closure(&rest)?.len());
        }
        Ok(out)
    }

    /// Weight sum of the index multiset `P_[k] ⊎ tau(P_[k])`: each cycle
    /// contributes its block sum once per fully-covered copy.
    pub fn w_r_of_leading(&self, s: &Shape, k: usize) -> f64 {
        let p = s.p_prefix(k);
        let tp = s.tau_image(&p);
        let mut total = 0.0;
        for (ci, c) in self.cycles.iter().enumerate() {
            let hits = c.iter().filter(|&&e| p.contains(e)).count()
                + c.iter().filter(|&&e| tp.contains(e)).count();
            debug_assert!(hits % c.len() == 0);
            total += self.w_r[ci] * (hits / c.len()) as f64;
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Phase;

    /// The rank-5 shape with tau mapping 1->4, 2->5, 3->3 (and back).
    fn example_shape() -> Shape {
        Shape::new(
            5,
            vec![4, 5, 3, 1, 2],
            vec![
                Phase::Phase(0.3),
                Phase::Phase(0.5),
                Phase::Sign(1),
                Phase::Phase(-0.3),
                Phase::Phase(-0.5),
            ],
        )
        .unwrap()
    }

    #[test]
    fn cycle_order_and_blocks() {
        let s = example_shape();
        let r = [0.1, 0.2, 0.3, 0.4, 0.5];
        let wc = WeightCombinatorics::new(&s, &r).unwrap();
        assert_eq!(wc.cycles, vec![vec![3], vec![1, 4], vec![2, 5]]);
        // W_r(3) = r1, W_r({1,4}) = r2 + r3, W_r({2,5}) = r4 + r5.
        assert!((wc.w_r[0] - 0.1).abs() < 1e-12);
        assert!((wc.w_r[1] - 0.5).abs() < 1e-12);
        assert!((wc.w_r[2] - 0.9).abs() < 1e-12);
        assert_eq!(wc.w_eps, vec![3, 5]);
    }

    #[test]
    fn closure_example() {
        let s = example_shape();
        let r = [0.0; 5];
        let wc = WeightCombinatorics::new(&s, &r).unwrap();
        // Closure of Z_{S,1} = Z_{41}.
        let iuj = IndexSet::new(vec![1, 4]).unwrap();
        assert_eq!(
            wc.closure(&iuj).unwrap(),
            IndexSet::new(vec![1, 3, 4]).unwrap()
        );
        // Closure of higher leading minors is everything.
        for k in 2..=4 {
            let p = s.p_prefix(k);
            let iuj = p.union(&s.tau_image(&p));
            assert_eq!(wc.closure(&iuj).unwrap().len(), 5);
        }
    }

    #[test]
    fn closure_ranks_example() {
        let s = example_shape();
        let r = [0.0; 5];
        let wc = WeightCombinatorics::new(&s, &r).unwrap();
        // Z_{S,3} = Z_{345,123}: open cycles {1,4} and {2,5};
        // c_0 = 5 and c_1 = 3.
        let ranks = wc.closure_ranks(&s, 3).unwrap();
        assert_eq!(ranks, vec![5, 3]);
    }

    #[test]
    fn leading_multiset_weight() {
        let s = example_shape();
        let r = [0.1, 0.2, 0.3, 0.4, 0.5];
        let wc = WeightCombinatorics::new(&s, &r).unwrap();
        // k=1: P_1 = {1}, tau(P_1) = {4}: one full copy of cycle {1,4}.
        assert!((wc.w_r_of_leading(&s, 1) - 0.5).abs() < 1e-12);
        // k=3: P_3 = {1,2,3}: cycles {1,4},{2,5} once, {3} twice.
        assert!((wc.w_r_of_leading(&s, 3) - (0.5 + 0.9 + 0.2)).abs() < 1e-12);
        // k=5: everything twice.
        assert!((wc.w_r_of_leading(&s, 5) - 2.0 * 1.5).abs() < 1e-12);
    }
}
