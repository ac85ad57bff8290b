//! Reduction of a self-adjoint shape to big-cell form by elementary
//! coaction moves.
//!
//! Blocks (cycles of `tau` on the support, ordered by cycle maximum) are
//! walked to the front one at a time: the lower member of the current
//! cycle up to the next free slot, the upper member down next to it, then
//! the adjacent 2-cycle is split. Fixed support points keep their signs;
//! splits take the sign that continues the diagonal built so far, which
//! chains the `(+1, -1)` blocks so that the resulting epsilon has `-1`
//! exactly at the second slot of each 2-cycle block (the sign positions
//! the weight combinatorics singles out). Every move is one the coaction
//! transform accepts, so replaying the word through `alpha_transform`
//! with the recorded branches reproduces the result.

use serde::Serialize;

use crate::error::CoreError;

use super::{alpha_transform, cycles_ordered, AlphaOutcome, Phase, Shape};

/// One recorded split: the word position at which it happened, the lattice
/// position of the `(k, k+1)` block, and which branch was taken (`1` for
/// the `(+1, -1)` block).
#[derive(Clone, Debug, Serialize)]
pub struct SplitRecord {
    pub word_index: usize,
    pub k: usize,
    pub branch: i8,
}

/// Outcome of the reduction: a standard-form epsilon, the coaction word,
/// and the split records. Flipping any subset of recorded branches gives
/// the sibling big cells.
#[derive(Clone, Debug, Serialize)]
pub struct BigCellReduction {
    pub eps: Vec<i8>,
    pub word: Vec<usize>,
    pub splits: Vec<SplitRecord>,
}

fn apply_swap(
    cur: &Shape,
    k: usize,
    word: &mut Vec<usize>,
) -> Result<Shape, CoreError> {
    match alpha_transform(cur, k)? {
        AlphaOutcome::Single(next) => {
            if next.approx_eq(cur) {
                return Err(CoreError::Calibration(format!(
                    "coaction move at {k} was refused during big-cell reduction"
                )));
            }
            word.push(k);
            Ok(next)
        }
        AlphaOutcome::Split(..) => Err(CoreError::Calibration(format!(
            "unexpected split at {k} during big-cell reduction"
        ))),
    }
}

/// Reduce a self-adjoint shape to the big-cell diagonal by coaction
/// moves. Terminates in O(N^2) moves.
pub fn reduce_to_big_cell(s: &Shape) -> Result<BigCellReduction, CoreError> {
    s.require_self_adjoint()?;
    let n = s.n;
    let mut cur = s.clone();
    let mut word = Vec::new();
    let mut splits = Vec::new();
    let budget = n * n * n + n + 1;
    let mut front = 0usize; // positions 1..=front are finished
    let mut prev_sign: i8 = 1; // last diagonal sign laid down

    loop {
        if word.len() > budget {
            return Err(CoreError::Calibration(
                "big-cell reduction exceeded its move budget".into(),
            ));
        }
        // The next block: cycle with the smallest maximum among support
        // elements beyond the finished front.
        let remaining: Vec<Vec<usize>> = cycles_ordered(&cur)
            .into_iter()
            .filter(|c| c.iter().all(|&e| e > front))
            .collect();
        let Some(block) = remaining.first().cloned() else {
            break;
        };
        match block.as_slice() {
            [f] => {
                // Fixed support point: walk it up to the next slot.
                let mut pos = *f;
                while pos > front + 1 {
                    cur = apply_swap(&cur, pos - 1, &mut word)?;
                    pos -= 1;
                }
                let v = cur.u_of(front + 1).value();
                prev_sign = if v.re > 0.0 { 1 } else { -1 };
                front += 1;
            }
            [lo, hi] => {
                // Walk the lower member up, the upper member down, split.
                let mut lo_pos = *lo;
                let mut hi_pos = *hi;
                while lo_pos > front + 1 {
                    cur = apply_swap(&cur, lo_pos - 1, &mut word)?;
                    lo_pos -= 1;
                }
                while hi_pos > front + 2 {
                    cur = apply_swap(&cur, hi_pos - 1, &mut word)?;
                    hi_pos -= 1;
                }
                let k = front + 1;
                match alpha_transform(&cur, k)? {
                    AlphaOutcome::Split(plus, minus) => {
                        splits.push(SplitRecord {
                            word_index: word.len(),
                            k,
                            branch: prev_sign,
                        });
                        word.push(k);
                        cur = if prev_sign == 1 { plus } else { minus };
                    }
                    AlphaOutcome::Single(_) => {
                        return Err(CoreError::Calibration(
                            "adjacent 2-cycle did not split".into(),
                        ))
                    }
                }
                prev_sign = -prev_sign;
                front += 2;
            }
            _ => {
                return Err(CoreError::InvalidShape(
                    "self-adjoint shape has a cycle longer than 2".into(),
                ))
            }
        }
    }

    // Read epsilon off the diagonal: u(i) is the prefix product of signs.
    let mut eps = Vec::with_capacity(n);
    let mut prev: i8 = 1;
    for i in 1..=n {
        match cur.u_of(i) {
            Phase::Zero => eps.push(0),
            p => {
                let v = p.value();
                if v.im.abs() > super::PHASE_TOL || (v.re.abs() - 1.0).abs() > 1e-6 {
                    return Err(CoreError::Calibration(format!(
                        "big-cell diagonal entry {i} is not a sign: {v}"
                    )));
                }
                let d: i8 = if v.re > 0.0 { 1 } else { -1 };
                eps.push(d * prev);
                prev = d;
            }
        }
    }
    crate::braid::epsilon_standard_rank(&eps)?;
    Ok(BigCellReduction { eps, word, splits })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{enumerate_self_adjoint, signature, Signature};

    #[test]
    fn big_cell_is_fixed_point() {
        let s = Shape::big_cell(&[1, -1, 0]).unwrap();
        let red = reduce_to_big_cell(&s).unwrap();
        assert!(red.word.is_empty());
        assert_eq!(red.eps, vec![1, -1, 0]);
    }

    #[test]
    fn antidiagonal_n2() {
        let s = Shape::new(2, vec![2, 1], vec![Phase::Phase(0.4), Phase::Phase(-0.4)]).unwrap();
        let red = reduce_to_big_cell(&s).unwrap();
        assert_eq!(red.word, vec![1]);
        assert_eq!(red.eps, vec![1, -1]);
        assert_eq!(red.splits.len(), 1);
    }

    #[test]
    fn nested_antidiagonal_n4() {
        // Two nested 2-cycles (14)(23): the canonical branch ends at
        // eps = (1, -1, 1, -1).
        let s = Shape::new(
            4,
            vec![4, 3, 2, 1],
            vec![
                Phase::Phase(0.3),
                Phase::Phase(0.6),
                Phase::Phase(-0.6),
                Phase::Phase(-0.3),
            ],
        )
        .unwrap();
        let red = reduce_to_big_cell(&s).unwrap();
        assert_eq!(red.eps, vec![1, -1, 1, -1]);
        assert_eq!(red.splits.len(), 2);
    }

    #[test]
    fn interleaved_fixed_point() {
        // tau = (13) with a fixed +1 between: the fixed point lands first,
        // giving eps = (1, 1, -1).
        let s = Shape::new(
            3,
            vec![3, 2, 1],
            vec![Phase::Phase(0.2), Phase::Sign(1), Phase::Phase(-0.2)],
        )
        .unwrap();
        let red = reduce_to_big_cell(&s).unwrap();
        assert_eq!(red.eps, vec![1, 1, -1]);
    }

    #[test]
    fn replay_matches_and_terminates() {
        // For every self-adjoint shape with N <= 4 the reduction terminates
        // within budget, the word replays through alpha_transform (with the
        // recorded branches) to the recorded big cell, and the epsilon sign
        // pattern matches the signature.
        for n in 1..=4usize {
            for rank in 0..=n {
                for s in enumerate_self_adjoint(n, rank, 0.9) {
                    let red = reduce_to_big_cell(&s).unwrap();
                    assert!(red.word.len() <= n * n * n);
                    assert_eq!(
                        red.eps.iter().filter(|&&e| e != 0).count(),
                        rank,
                        "rank preserved"
                    );
                    // Replay.
                    let mut cur = s.clone();
                    let mut split_at = 0usize;
                    for (idx, &k) in red.word.iter().enumerate() {
                        cur = match alpha_transform(&cur, k).unwrap() {
                            AlphaOutcome::Single(t) => t,
                            AlphaOutcome::Split(plus, minus) => {
                                let rec = &red.splits[split_at];
                                assert_eq!(rec.word_index, idx);
                                split_at += 1;
                                if rec.branch == 1 {
                                    plus
                                } else {
                                    minus
                                }
                            }
                        };
                    }
                    let target = Shape::big_cell(&red.eps).unwrap();
                    assert!(cur.approx_eq(&target), "replay mismatch for {s:?}");
                    // Epsilon signs match the eigenvalue signature.
                    let sig = signature(&s).unwrap();
                    let mut acc: i8 = 1;
                    let (mut p, mut m) = (0usize, 0usize);
                    for &e in &red.eps {
                        if e != 0 {
                            acc *= e;
                            if acc > 0 {
                                p += 1;
                            } else {
                                m += 1;
                            }
                        }
                    }
                    assert_eq!(
                        sig,
                        Signature {
                            plus: p,
                            minus: m,
                            zero: n - p - m
                        }
                    );
                }
            }
        }
    }
}
