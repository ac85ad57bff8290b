//! Index-set machinery: ordered subsets of `[N]`, the total and partial
//! orders on them, positional selection, weights and inversion counts.
//!
//! Subsets of `{1, ..., N}` are always handled as strictly increasing
//! sequences. Two orders matter downstream: the lexicographic total order
//! and the componentwise dominance order; both extend lexicographically to
//! pairs of subsets.

use std::cmp::Ordering;

use crate::error::CoreError;

/// A strictly increasing sequence of indices in `[1..=n]` for some ambient
/// `n` known from context.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(elements: Vec<usize>) -> Result<Self, CoreError> {
        for w in elements.windows(2) {
            if w[0] >= w[1] {
                return Err(CoreError::Input(format!(
                    "index set not strictly increasing: {elements:?}"
                )));
            }
        }
        if elements.first().is_some_and(|&e| e == 0) {
            return Err(CoreError::Input("indices are 1-based".into()));
        }
        Ok(IndexSet(elements))
    }

    /// Unchecked variant for internal construction from sorted data.
    pub(crate) fn from_sorted(elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        IndexSet(elements)
    }

    pub fn empty() -> Self {
        IndexSet(Vec::new())
    }

    pub fn singleton(i: usize) -> Self {
        IndexSet(vec![i])
    }

    /// The full interval `{1, ..., k}`.
    pub fn interval(k: usize) -> Self {
        IndexSet((1..=k).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Sum of the elements.
    pub fn weight(&self) -> i64 {
        self.0.iter().map(|&i| i as i64).sum()
    }

    pub fn union(&self, other: &IndexSet) -> IndexSet {
        let mut v: Vec<usize> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable();
        v.dedup();
        IndexSet(v)
    }

    pub fn intersect(&self, other: &IndexSet) -> IndexSet {
        IndexSet(
            self.0
                .iter()
                .filter(|i| other.contains(**i))
                .copied()
                .collect(),
        )
    }

    pub fn intersect_len(&self, other: &IndexSet) -> usize {
        self.0.iter().filter(|i| other.contains(**i)).count()
    }

    pub fn minus(&self, other: &IndexSet) -> IndexSet {
        IndexSet(
            self.0
                .iter()
                .filter(|i| !other.contains(**i))
                .copied()
                .collect(),
        )
    }

    pub fn insert(&self, i: usize) -> IndexSet {
        let mut v = self.0.clone();
        match v.binary_search(&i) {
            Ok(_) => {}
            Err(pos) => v.insert(pos, i),
        }
        IndexSet(v)
    }

    pub fn remove(&self, i: usize) -> IndexSet {
        IndexSet(self.0.iter().filter(|&&x| x != i).copied().collect())
    }

    /// Apply a map elementwise and re-sort (the image of a set under a
    /// permutation).
    pub fn map<F: Fn(usize) -> usize>(&self, f: F) -> IndexSet {
        let mut v: Vec<usize> = self.0.iter().map(|&i| f(i)).collect();
        v.sort_unstable();
        IndexSet(v)
    }

    /// Positional selection: `K` is a set of positions into `self` (1-based,
    /// so `K ⊆ [len]`), returning the picked subset and its complement.
    pub fn select(&self, positions: &IndexSet) -> Result<(IndexSet, IndexSet), CoreError> {
        if positions.0.iter().any(|&p| p == 0 || p > self.len()) {
            return Err(CoreError::IndexRange(format!(
                "positions {positions:?} out of range for size {}",
                self.len()
            )));
        }
        let picked: Vec<usize> = positions.0.iter().map(|&p| self.0[p - 1]).collect();
        let picked = IndexSet(picked);
        let rest = self.minus(&picked);
        Ok((picked, rest))
    }
}

impl std::fmt::Display for IndexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Lexicographic comparison of equal-size subsets.
pub fn lex_cmp(a: &IndexSet, b: &IndexSet) -> Result<Ordering, CoreError> {
    if a.len() != b.len() {
        return Err(CoreError::SizeMismatch(format!(
            "lex order needs equal sizes, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    Ok(a.0.cmp(&b.0))
}

/// Outcome of the componentwise dominance comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    Precedes,
    Succeeds,
    Equal,
    Incomparable,
}

/// Componentwise partial order: `a ⪯ b` iff `a_p <= b_p` for every
/// position `p`.
pub fn dominance(a: &IndexSet, b: &IndexSet) -> Result<Dominance, CoreError> {
    if a.len() != b.len() {
        return Err(CoreError::SizeMismatch(format!(
            "dominance needs equal sizes, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    let mut le = true;
    let mut ge = true;
    for (x, y) in a.0.iter().zip(&b.0) {
        if x > y {
            le = false;
        }
        if x < y {
            ge = false;
        }
    }
    Ok(match (le, ge) {
        (true, true) => Dominance::Equal,
        (true, false) => Dominance::Precedes,
        (false, true) => Dominance::Succeeds,
        (false, false) => Dominance::Incomparable,
    })
}

pub fn dominated(a: &IndexSet, b: &IndexSet) -> bool {
    matches!(
        dominance(a, b),
        Ok(Dominance::Precedes) | Ok(Dominance::Equal)
    )
}

/// Lexicographic order on pairs of subsets, first coordinate compared
/// first. Used throughout the shape machinery on pairs `(J, I)`.
pub fn pair_lex_cmp(
    a: (&IndexSet, &IndexSet),
    b: (&IndexSet, &IndexSet),
) -> Result<Ordering, CoreError> {
    match lex_cmp(a.0, b.0)? {
        Ordering::Equal => lex_cmp(a.1, b.1),
        o => Ok(o),
    }
}

/// Number of inversions of a bijection between two equal-size totally
/// ordered sets, given as parallel slices `domain[p] -> image[p]` with
/// `domain` sorted increasing.
pub fn inversions(domain: &[usize], image: &[usize]) -> Result<i64, CoreError> {
    if domain.len() != image.len() {
        return Err(CoreError::NotBijection(
            "domain and image sizes differ".into(),
        ));
    }
    let mut sorted = image.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != image.len() {
        return Err(CoreError::NotBijection("image has repeats".into()));
    }
    let mut count = 0;
    for i in 0..image.len() {
        for j in (i + 1)..image.len() {
            if image[i] > image[j] {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Number of points moved strictly down: `|{l : sigma(l) < l}|`.
pub fn descents_below(domain: &[usize], image: &[usize]) -> Result<i64, CoreError> {
    if domain.len() != image.len() {
        return Err(CoreError::NotBijection(
            "domain and image sizes differ".into(),
        ));
    }
    Ok(domain
        .iter()
        .zip(image)
        .filter(|(l, s)| s < l)
        .count() as i64)
}

/// All k-subsets of `[1..=n]` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<IndexSet> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (1..=k).collect();
    loop {
        out.push(IndexSet(cur.clone()));
        // Advance to the next combination.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - (k - 1 - i) {
                cur[i] += 1;
                for j in (i + 1)..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// All permutations of the given elements (each returned as the image
/// sequence parallel to the sorted input).
pub fn permutations(elements: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items = elements.to_vec();
    items.sort_unstable();
    permute_rec(&mut items, 0, &mut out);
    out
}

fn permute_rec(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_rec(items, k + 1, out);
        items.swap(k, i);
    }
}

/// All involutions of `[1..=n]`, as full image vectors `tau[i-1] = tau(i)`.
pub fn involutions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut tau: Vec<usize> = (1..=n).collect();
    fn rec(i: usize, n: usize, tau: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if i > n {
            out.push(tau.clone());
            return;
        }
        if used[i] {
            rec(i + 1, n, tau, used, out);
            return;
        }
        // Fixed point.
        used[i] = true;
        tau[i - 1] = i;
        rec(i + 1, n, tau, used, out);
        used[i] = false;
        // Two-cycle with a later element.
        for j in (i + 1)..=n {
            if !used[j] {
                used[i] = true;
                used[j] = true;
                tau[i - 1] = j;
                tau[j - 1] = i;
                rec(i + 1, n, tau, used, out);
                tau[j - 1] = j;
                used[i] = false;
                used[j] = false;
            }
        }
    }
    let mut used = vec![false; n + 1];
    rec(1, n, &mut tau, &mut used, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iset(v: &[usize]) -> IndexSet {
        IndexSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn lex_examples() {
        assert_eq!(
            lex_cmp(&iset(&[1, 3]), &iset(&[2, 3])).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            lex_cmp(&iset(&[1, 4]), &iset(&[1, 5])).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            lex_cmp(&iset(&[2, 4]), &iset(&[2, 4])).unwrap(),
            Ordering::Equal
        );
        assert!(lex_cmp(&iset(&[1]), &iset(&[1, 2])).is_err());
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(
            dominance(&iset(&[1, 2]), &iset(&[2, 3])).unwrap(),
            Dominance::Precedes
        );
        assert_eq!(
            dominance(&iset(&[1, 4]), &iset(&[2, 3])).unwrap(),
            Dominance::Incomparable
        );
        assert_eq!(
            dominance(&iset(&[1, 4]), &iset(&[1, 4])).unwrap(),
            Dominance::Equal
        );
    }

    #[test]
    fn select_examples() {
        let i = iset(&[2, 5, 7]);
        let (picked, rest) = i.select(&iset(&[1, 3])).unwrap();
        assert_eq!(picked, iset(&[2, 7]));
        assert_eq!(rest, iset(&[5]));
        let (all, none) = i.select(&iset(&[1, 2, 3])).unwrap();
        assert_eq!(all, i);
        assert!(none.is_empty());
        let (none, all) = i.select(&IndexSet::empty()).unwrap();
        assert!(none.is_empty());
        assert_eq!(all, i);
        assert!(i.select(&iset(&[4])).is_err());
    }

    #[test]
    fn weight_and_inversions() {
        assert_eq!(iset(&[1, 3, 4]).weight(), 8);
        assert_eq!(inversions(&[1, 2], &[2, 1]).unwrap(), 1);
        assert_eq!(inversions(&[1, 2, 3], &[1, 2, 3]).unwrap(), 0);
        assert_eq!(descents_below(&[1, 2, 3], &[1, 2, 3]).unwrap(), 0);
        assert_eq!(descents_below(&[1, 2], &[2, 1]).unwrap(), 1);
        assert!(inversions(&[1, 2], &[1, 1]).is_err());
    }

    #[test]
    fn dominance_implies_lex() {
        for n in 1..=6usize {
            for k in 1..=n {
                let all = subsets(n, k);
                for a in &all {
                    for b in &all {
                        if dominance(a, b).unwrap() == Dominance::Precedes {
                            assert_ne!(lex_cmp(a, b).unwrap(), Ordering::Greater);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn select_partitions() {
        let i = iset(&[1, 4, 5, 9]);
        for k in 0..=4usize {
            for pos in subsets(4, k) {
                let (a, b) = i.select(&pos).unwrap();
                assert_eq!(a.union(&b), i);
                assert_eq!(a.intersect(&b), IndexSet::empty());
            }
        }
    }

    #[test]
    fn subset_count() {
        assert_eq!(subsets(5, 2).len(), 10);
        assert_eq!(subsets(4, 0).len(), 1);
        assert_eq!(involutions(4).len(), 10);
    }
}
