//! Classification data: adapted weights, the correspondence between
//! central characters and big-cell highest weights, the highest-weight
//! exponent formula for a fixed shape, character weights, and validation
//! and enumeration of `(shape, central character)` labels.

use serde::{Deserialize, Serialize};

use crate::combinatorics::IndexSet;
use crate::error::CoreError;
use crate::shapes::{
    enumerate_self_adjoint, reduce_to_big_cell, signature, Shape, Signature, WeightCombinatorics,
};

/// The central character: real scalar values of the central generators on
/// an irreducible.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CentralCharacter {
    pub values: Vec<f64>,
}

impl CentralCharacter {
    pub fn new(values: Vec<f64>) -> Result<Self, CoreError> {
        if values.iter().any(|v| !v.is_finite()) {
            return Err(CoreError::NonFinite);
        }
        Ok(CentralCharacter { values })
    }
}

/// A standard-form epsilon together with a highest weight for it.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BigCellWeight {
    pub eps: Vec<i8>,
    pub r: Vec<f64>,
    /// Raw root multiset `eps_(0,i] * q^(2 r_i + 2i - 2)` the weight was
    /// decoded from, when it came from a central character.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<f64>>,
}

/// A classification label.
#[derive(Clone, Debug, Serialize)]
pub struct Label {
    pub shape: Shape,
    pub central: Vec<f64>,
    pub weight: BigCellWeight,
}

/// Integer-within-tolerance helper for adaptedness checks.
fn near_positive_integer(x: f64, tol: f64) -> bool {
    let r = x.round();
    r >= 1.0 && (x - r).abs() <= tol
}

/// Whether `r` is adapted to the standard-form `eps`: for every pair
/// `s < t` whose sign interval multiplies to `+1`, the gap
/// `(r_t + t) - (r_s + s)` must be a positive integer.
pub fn is_epsilon_adapted(eps: &[i8], r: &[f64]) -> Result<bool, CoreError> {
    let m = crate::braid::epsilon_standard_rank(eps)?;
    if r.len() != m {
        return Err(CoreError::SizeMismatch(format!(
            "weight length {} != epsilon rank {m}",
            r.len()
        )));
    }
    for s in 1..=m {
        for t in (s + 1)..=m {
            let interval: i32 = eps[s..t].iter().map(|&e| i32::from(e)).product();
            if interval == 1 {
                let gap = (r[t - 1] + t as f64) - (r[s - 1] + s as f64);
                if !near_positive_integer(gap, 1e-9) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The arguments of the elementary symmetric polynomials for a big-cell
/// weight: `eps_(0,i] * q^(2 r_i + 2i - 2)`, zero past the rank.
pub fn weight_arguments(eps: &[i8], r: &[f64], q0: f64) -> Result<Vec<f64>, CoreError> {
    let m = crate::braid::epsilon_standard_rank(eps)?;
    if r.len() != m {
        return Err(CoreError::SizeMismatch(format!(
            "weight length {} != epsilon rank {m}",
            r.len()
        )));
    }
    if !(q0 > 0.0 && q0 < 1.0) {
        return Err(CoreError::InvalidQ(q0));
    }
    let mut args = Vec::with_capacity(eps.len());
    let mut sign: f64 = 1.0;
    for i in 1..=eps.len() {
        if i <= m {
            sign *= f64::from(eps[i - 1]);
            args.push(sign * q0.powf(2.0 * r[i - 1] + 2.0 * i as f64 - 2.0));
        } else {
            args.push(0.0);
        }
    }
    Ok(args)
}

fn elementary_symmetric(args: &[f64]) -> Vec<f64> {
    // e_k via the product recurrence.
    let n = args.len();
    let mut e = vec![0.0; n + 1];
    e[0] = 1.0;
    for &x in args {
        for k in (1..=n).rev() {
            e[k] += x * e[k - 1];
        }
    }
    e[1..].to_vec()
}

/// Central values of the big-cell representation with the given weight:
/// elementary symmetric polynomials of the weight arguments.
pub fn central_from_weight(eps: &[i8], r: &[f64], q0: f64) -> Result<CentralCharacter, CoreError> {
    let args = weight_arguments(eps, r, q0)?;
    CentralCharacter::new(elementary_symmetric(&args))
}

/// Roots of `t^N - s_1 t^{N-1} + s_2 t^{N-2} - ...` via a companion
/// matrix eigensolve; all roots must come out real.
fn central_roots(s: &[f64]) -> Result<Vec<f64>, CoreError> {
    let n = s.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut companion = nalgebra::DMatrix::<f64>::zeros(n, n);
    // Monic polynomial with coefficients c_k = (-1)^k s_k on t^{N-k}.
    for (k, &sk) in s.iter().enumerate() {
        let coeff = if k % 2 == 0 { sk } else { -sk };
        // p(t) = t^n - s1 t^{n-1} + ... ; companion top row gets -c where
        // p = t^n + c_1 t^{n-1} + ... so c_1 = -s_1, c_2 = +s_2, ...
        companion[(0, k)] = coeff;
    }
    for i in 1..n {
        companion[(i, i - 1)] = 1.0;
    }
    let eig = companion.complex_eigenvalues();
    let scale = s.iter().fold(1.0f64, |a, &b| a.max(b.abs()));
    let mut roots = Vec::with_capacity(n);
    for z in eig.iter() {
        if z.im.abs() > 1e-7 * scale.max(1.0) {
            return Err(CoreError::RootPattern(format!(
                "complex root {z} for central values {s:?}"
            )));
        }
        roots.push(z.re);
    }
    Ok(roots)
}

/// Recover a big-cell weight from a central character of the given
/// signature, assigning the roots to the sign slots of the canonical
/// epsilon pattern (positives and negatives each in descending absolute
/// value).
pub fn weight_from_central(
    s: &CentralCharacter,
    sig: Signature,
    q0: f64,
) -> Result<BigCellWeight, CoreError> {
    weight_from_central_with_pattern(s, sig, None, q0)
}

/// Same, but decode against an explicit target epsilon pattern (the one a
/// shape's big-cell reduction produced). Without a pattern the roots are
/// simply ordered by descending absolute value.
pub fn weight_from_central_with_pattern(
    s: &CentralCharacter,
    sig: Signature,
    pattern: Option<&[i8]>,
    q0: f64,
) -> Result<BigCellWeight, CoreError> {
    if !(q0 > 0.0 && q0 < 1.0) {
        return Err(CoreError::InvalidQ(q0));
    }
    let n = s.values.len();
    if sig.total() != n {
        return Err(CoreError::SizeMismatch(format!(
            "signature covers {} slots, central character has {n}",
            sig.total()
        )));
    }
    let roots = central_roots(&s.values)?;
    let scale = roots.iter().fold(1.0f64, |a, &b| a.max(b.abs()));
    let ztol = 1e-8 * scale.max(1.0);
    let mut positives: Vec<f64> = roots.iter().copied().filter(|&x| x > ztol).collect();
    let mut negatives: Vec<f64> = roots.iter().copied().filter(|&x| x < -ztol).collect();
    let zeros = roots.len() - positives.len() - negatives.len();
    if positives.len() != sig.plus || negatives.len() != sig.minus || zeros != sig.zero {
        return Err(CoreError::RootPattern(format!(
            "root signs ({}, {}, {}) do not match signature ({}, {}, {})",
            positives.len(),
            negatives.len(),
            zeros,
            sig.plus,
            sig.minus,
            sig.zero
        )));
    }
    positives.sort_by(|a, b| b.partial_cmp(a).unwrap());
    negatives.sort_by(|a, b| a.partial_cmp(b).unwrap()); // descending |.|
    let m = sig.plus + sig.minus;

    // Sign slot pattern d_i = eps_(0,i].
    let d: Vec<i8> = match pattern {
        Some(eps) => {
            crate::braid::epsilon_standard_rank(eps)?;
            let mut acc = 1i8;
            let mut d = Vec::new();
            for &e in eps.iter().take(m) {
                if e == 0 {
                    return Err(CoreError::RootPattern(
                        "pattern rank below signature rank".into(),
                    ));
                }
                acc *= e;
                d.push(acc);
            }
            let dp = d.iter().filter(|&&x| x > 0).count();
            if dp != sig.plus {
                return Err(CoreError::RootPattern(format!(
                    "pattern sign counts ({dp} positive) do not match signature"
                )));
            }
            d
        }
        None => {
            // Descending |root| order.
            let mut merged: Vec<f64> = positives.iter().chain(negatives.iter()).copied().collect();
            merged.sort_by(|a, b| b.abs().partial_cmp(&a.abs()).unwrap().then(
                b.partial_cmp(a).unwrap(),
            ));
            merged.iter().map(|&x| if x > 0.0 { 1 } else { -1 }).collect()
        }
    };

    let (mut pi, mut ni) = (0usize, 0usize);
    let mut assigned = Vec::with_capacity(m);
    for &di in &d {
        if di > 0 {
            assigned.push(positives[pi]);
            pi += 1;
        } else {
            assigned.push(negatives[ni]);
            ni += 1;
        }
    }
    let mut eps = Vec::with_capacity(n);
    let mut prev = 1i8;
    for &di in &d {
        eps.push(di * prev);
        prev = di;
    }
    eps.resize(n, 0);
    let r: Vec<f64> = assigned
        .iter()
        .enumerate()
        .map(|(idx, &x)| {
            let i = idx as f64 + 1.0;
            (x.abs().ln() / q0.ln() - 2.0 * i + 2.0) / 2.0
        })
        .collect();
    Ok(BigCellWeight {
        eps,
        r,
        roots: Some(roots),
    })
}

/// Exponent of the highest weight of the rank-`k` leading minor for a
/// shape with big-cell weight `r`:
///
/// ```text
/// W_r(P_[k] ⊎ tau(P_[k])) - |open cycles| * k + sum_i (c_i + i)
/// ```
pub fn zsk_weight_formula(s: &Shape, r: &[f64], k: usize) -> Result<f64, CoreError> {
    let wc = WeightCombinatorics::new(s, r)?;
    let w = wc.w_r_of_leading(s, k);
    let ranks = wc.closure_ranks(s, k)?;
    let penalty = ranks.len() as f64 * k as f64;
    let bonus: f64 = ranks
        .iter()
        .enumerate()
        .map(|(i, &c)| (c + i) as f64)
        .sum();
    Ok(w - penalty + bonus)
}

/// Parameters of a rank-`N` non-diagonal character: the scale `a > 0`,
/// the overall real factor `c != 0`.
#[derive(Clone, Copy, Debug)]
pub struct CharacterHwParams {
    pub a: f64,
    pub c: f64,
}

/// Highest-weight data of a rank-`N` non-diagonal character with minimal
/// nonzero diagonal at `k`, expressed through two big-cell weight entries.
#[derive(Clone, Debug, Serialize)]
pub struct CharacterHw {
    pub eps1: i8,
    pub r1: f64,
    /// Index of the second weight entry in the formula.
    pub idx: usize,
    pub r_idx: f64,
    /// Displayed values: the minimal diagonal, the corner modulus, the
    /// last diagonal.
    pub z_kk: f64,
    pub z_n1_abs: f64,
    pub z_nn: f64,
    /// Full weight reconstruction for the single-pair family.
    pub full: Option<BigCellWeight>,
}

/// Evaluate the character highest-weight formulas. The index
/// `N - 2k + 4` must land in `[1..=N]`; out-of-range requests are
/// rejected rather than extrapolated.
pub fn character_hw(
    n: usize,
    k: usize,
    params: CharacterHwParams,
    q0: f64,
) -> Result<CharacterHw, CoreError> {
    if !(q0 > 0.0 && q0 < 1.0) {
        return Err(CoreError::InvalidQ(q0));
    }
    if params.a <= 0.0 || params.c == 0.0 {
        return Err(CoreError::Precondition("need a > 0 and c != 0".into()));
    }
    if k < 2 {
        return Err(CoreError::Precondition(
            "a diagonal character has no minimal antidiagonal index".into(),
        ));
    }
    if n < 2 * k || n.checked_sub(2 * k).is_none() && n + 4 < 2 * k {
        // handled below via idx range
    }
    let idx_i = n as i64 - 2 * (k as i64) + 4;
    if idx_i < 1 || idx_i > n as i64 {
        return Err(CoreError::IndexRange(format!(
            "weight index N - 2k + 4 = {idx_i} outside [1..{n}]"
        )));
    }
    let idx = idx_i as usize;
    let a = params.a;
    let c = params.c;
    let eps1: i8 = if c > 0.0 { 1 } else { -1 };
    let lnq = q0.ln();
    // Z_kk = eps1 q^{2 r1} = c a.
    let r1 = (c.abs() * a).ln() / (2.0 * lnq);
    // Z_NN = eps1 (q^{2 r1} - q^{2 r_idx + 2N - 4k + 6}).
    let shift = 2.0 * n as f64 - 4.0 * k as f64 + 6.0;
    let r_idx = ((c.abs() / a).ln() / lnq - shift) / 2.0;
    let z_kk = c * a;
    let z_nn = c * (a - 1.0 / a);
    let z_n1_abs = q0.powf(r1 + r_idx + (n as f64) - 2.0 * k as f64 + 3.0);
    // Single antidiagonal pair: minimal diagonal at k means k - 1 = l = 1,
    // where the full weight is r1 repeated with r_idx in the last slot.
    let full = if k == 2 {
        let mut eps = vec![1i8; n];
        eps[0] = eps1;
        eps[n - 1] = -1;
        let mut r = vec![r1; n - 1];
        r.push(r_idx);
        Some(BigCellWeight {
            eps,
            r,
            roots: None,
        })
    } else {
        None
    };
    Ok(CharacterHw {
        eps1,
        r1,
        idx,
        r_idx,
        z_kk,
        z_n1_abs,
        z_nn,
        full,
    })
}

/// Verdict of the label validation.
#[derive(Clone, Debug, Serialize)]
pub struct LabelVerdict {
    pub valid: bool,
    pub reason: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<BigCellWeight>,
    pub signature: Signature,
    pub reduction_word: Vec<usize>,
}

/// Validate a `(shape, central character)` pair: the central character
/// must decode, against the shape's canonical big-cell epsilon, to an
/// adapted weight. Both constraint sources on the epsilon signs (the
/// 2-cycle block positions and the fixed `-1` weights) are already baked
/// into the reduction's epsilon; a conflict shows up as a sign-count or
/// adaptedness failure and is reported, not repaired.
pub fn validate_label(s: &Shape, central: &CentralCharacter, q0: f64) -> Result<LabelVerdict, CoreError> {
    s.require_self_adjoint()?;
    let sig = signature(s)?;
    let red = reduce_to_big_cell(s)?;
    if central.values.len() != s.n {
        return Err(CoreError::SizeMismatch(format!(
            "central character needs {} values",
            s.n
        )));
    }
    let verdict = |valid, reason: String, weight| LabelVerdict {
        valid,
        reason,
        weight,
        signature: sig,
        reduction_word: red.word.clone(),
    };
    match weight_from_central_with_pattern(central, sig, Some(&red.eps), q0) {
        Err(e) => Ok(verdict(false, e.to_string(), None)),
        Ok(w) => {
            if !is_epsilon_adapted(&w.eps, &w.r)? {
                return Ok(verdict(
                    false,
                    "weight is not adapted to the shape's epsilon".to_string(),
                    Some(w),
                ));
            }
            Ok(verdict(true, "ok".to_string(), Some(w)))
        }
    }
}

/// Enumerate labels for all self-adjoint shapes of a rank, sampling
/// adapted weights on an integer-offset lattice.
pub fn enumerate_labels(
    n: usize,
    rank: usize,
    per_shape: usize,
    seed: u64,
    q0: f64,
) -> Result<Vec<Label>, CoreError> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for shape in enumerate_self_adjoint(n, rank, std::f64::consts::FRAC_PI_3) {
        let red = reduce_to_big_cell(&shape)?;
        let m = rank;
        for _ in 0..per_shape {
            let base: f64 = rng.gen_range(-1.0..1.0);
            // r_i + i strictly increasing integers plus a common real base
            // is adapted to every epsilon.
            let mut acc = 0i64;
            let r: Vec<f64> = (1..=m)
                .map(|i| {
                    acc += rng.gen_range(1..=2);
                    base + acc as f64 - i as f64
                })
                .collect();
            let central = central_from_weight(&red.eps, &r, q0)?;
            out.push(Label {
                shape: shape.clone(),
                central: central.values.clone(),
                weight: BigCellWeight {
                    eps: red.eps.clone(),
                    r,
                    roots: None,
                },
            });
        }
    }
    Ok(out)
}

/// The index pair groups `(k, l)` of character-shaped labels among an
/// enumeration, used to compare against the known finite-dimensional
/// families.
pub fn character_families(labels: &[Label]) -> Vec<(usize, usize)> {
    let mut fams: Vec<(usize, usize)> = labels
        .iter()
        .filter_map(|l| crate::shapes::character_shape_pattern(&l.shape))
        .collect();
    fams.sort_unstable();
    fams.dedup();
    fams
}

/// Leading-minor positions helper re-exported for the weight formula
/// tests.
pub fn leading_pair_of(s: &Shape, k: usize) -> (IndexSet, IndexSet) {
    s.leading_pair(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Phase;

    const Q: f64 = 0.5;

    #[test]
    fn adaptedness_examples() {
        assert!(is_epsilon_adapted(&[1, 1], &[0.0, 0.0]).unwrap());
        assert!(!is_epsilon_adapted(&[1, 1], &[0.0, 0.5]).unwrap());
        assert!(is_epsilon_adapted(&[1], &[0.37]).unwrap());
        // Opposite signs put no constraint.
        assert!(is_epsilon_adapted(&[1, -1], &[0.0, 0.3]).unwrap());
    }

    #[test]
    fn central_examples() {
        let c = central_from_weight(&[1, 1], &[0.0, 0.0], Q).unwrap();
        assert!((c.values[0] - (1.0 + Q * Q)).abs() < 1e-12);
        assert!((c.values[1] - Q * Q).abs() < 1e-12);
        let c = central_from_weight(&[1, -1], &[0.0, 0.0], Q).unwrap();
        assert!((c.values[0] - (1.0 - Q * Q)).abs() < 1e-12);
        assert!((c.values[1] + Q * Q).abs() < 1e-12);
        let c = central_from_weight(&[1, 0], &[0.0], Q).unwrap();
        assert!((c.values[0] - 1.0).abs() < 1e-12);
        assert!(c.values[1].abs() < 1e-12);
    }

    #[test]
    fn weight_recovery_examples() {
        let sig = Signature {
            plus: 2,
            minus: 0,
            zero: 0,
        };
        let c = CentralCharacter::new(vec![1.0 + Q * Q, Q * Q]).unwrap();
        let w = weight_from_central(&c, sig, Q).unwrap();
        assert_eq!(w.eps, vec![1, 1]);
        assert!(w.r.iter().all(|r| r.abs() < 1e-8));

        let sig = Signature {
            plus: 1,
            minus: 1,
            zero: 0,
        };
        let c = CentralCharacter::new(vec![1.0 - Q * Q, -Q * Q]).unwrap();
        let w = weight_from_central(&c, sig, Q).unwrap();
        assert_eq!(w.eps, vec![1, -1]);
        assert!(w.r.iter().all(|r| r.abs() < 1e-8));

        // All-zero character of rank zero.
        let sig = Signature {
            plus: 0,
            minus: 0,
            zero: 3,
        };
        let c = CentralCharacter::new(vec![0.0, 0.0, 0.0]).unwrap();
        let w = weight_from_central(&c, sig, Q).unwrap();
        assert!(w.r.is_empty());
        assert_eq!(w.eps, vec![0, 0, 0]);

        // Signature mismatch rejected.
        let sig = Signature {
            plus: 2,
            minus: 0,
            zero: 0,
        };
        let c = CentralCharacter::new(vec![1.0 - Q * Q, -Q * Q]).unwrap();
        assert!(weight_from_central(&c, sig, Q).is_err());
    }

    #[test]
    fn round_trip_grid() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut count = 0;
        for q0 in [0.3, 0.5] {
            for _ in 0..120 {
                let m = rng.gen_range(1..=3usize);
                let eps: Vec<i8> = (0..m)
                    .map(|i| if i == 0 || rng.gen_bool(0.7) { 1 } else { -1 })
                    .collect();
                // Strictly increasing r_i + i keeps same-sign roots separated.
                let base: f64 = rng.gen_range(-2.0..2.0);
                let mut acc = 0i64;
                let r: Vec<f64> = (1..=m)
                    .map(|i| {
                        acc += rng.gen_range(1..=2);
                        base + acc as f64 - i as f64
                    })
                    .collect();
                let c = central_from_weight(&eps, &r, q0).unwrap();
                let mut dp = 0;
                let mut dm = 0;
                let mut sgn = 1i8;
                for &e in &eps {
                    sgn *= e;
                    if sgn > 0 {
                        dp += 1;
                    } else {
                        dm += 1;
                    }
                }
                let sig = Signature {
                    plus: dp,
                    minus: dm,
                    zero: 0,
                };
                let w = weight_from_central_with_pattern(&c, sig, Some(&eps), q0).unwrap();
                let c2 = central_from_weight(&w.eps, &w.r, q0).unwrap();
                for (a, b) in c.values.iter().zip(&c2.values) {
                    let scale = a.abs().max(1.0);
                    assert!((a - b).abs() / scale < 1e-8, "round trip failed");
                }
                count += 1;
            }
        }
        assert!(count >= 200);
    }

    #[test]
    fn zsk_formula_examples() {
        // Diagonal shape: exponent is twice the prefix weight sum.
        let s = Shape::diagonal(vec![Phase::Sign(1), Phase::Sign(1)]).unwrap();
        let r = [0.25, 0.75];
        let e1 = zsk_weight_formula(&s, &r, 1).unwrap();
        assert!((e1 - 0.5).abs() < 1e-12);
        let e2 = zsk_weight_formula(&s, &r, 2).unwrap();
        assert!((e2 - 2.0).abs() < 1e-12);

        // N=2 antidiagonal, k=1: r1 + r2 + 1.
        let s = Shape::new(2, vec![2, 1], vec![Phase::Phase(0.3), Phase::Phase(-0.3)]).unwrap();
        let e = zsk_weight_formula(&s, &[0.25, 0.75], 1).unwrap();
        assert!((e - 2.0).abs() < 1e-12);

        // The rank-5 example shape, k=1: r2 + r3 + 2.
        let s = Shape::new(
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
        .unwrap();
        let r = [0.1, 0.2, 0.3, 0.4, 0.5];
        let e = zsk_weight_formula(&s, &r, 1).unwrap();
        assert!((e - (0.2 + 0.3 - 1.0 + 3.0)).abs() < 1e-12);
    }

    #[test]
    fn character_hw_consistency() {
        // N=4, k=2 single-pair character: substituting the returned weight
        // into the central map reproduces the character's central values.
        let n = 4;
        let params = CharacterHwParams { a: 2.0, c: 1.0 };
        let hw = character_hw(n, 2, params, Q).unwrap();
        assert_eq!(hw.idx, 4);
        // Displayed values agree with the character matrix entries.
        assert!((hw.z_kk - 2.0).abs() < 1e-12);
        assert!((hw.z_nn - 1.5).abs() < 1e-12);
        // The corner modulus identity |Z_N1| = |c| is automatic.
        assert!((hw.z_n1_abs - 1.0).abs() < 1e-9);
        let full = hw.full.unwrap();
        assert!(is_epsilon_adapted(&full.eps, &full.r).is_ok());
        // Out-of-range index rejected.
        assert!(character_hw(4, 5, params, Q).is_err());
        // Diagonal character rejected.
        assert!(character_hw(4, 1, params, Q).is_err());
    }

    #[test]
    fn validate_and_enumerate() {
        // Identity shape with its natural central values.
        let s = Shape::diagonal(vec![Phase::Sign(1), Phase::Sign(1)]).unwrap();
        let c = CentralCharacter::new(vec![1.0 + Q * Q, Q * Q]).unwrap();
        let v = validate_label(&s, &c, Q).unwrap();
        assert!(v.valid, "{}", v.reason);

        // Signature mismatch.
        let c = CentralCharacter::new(vec![0.0, 1.0]).unwrap();
        let v = validate_label(&s, &c, Q).unwrap();
        assert!(!v.valid);

        // Rank-0 shape with the zero character.
        let s0 = Shape::diagonal(vec![Phase::Zero, Phase::Zero]).unwrap();
        let c0 = CentralCharacter::new(vec![0.0, 0.0]).unwrap();
        assert!(validate_label(&s0, &c0, Q).unwrap().valid);

        // Every enumerated label validates.
        for label in enumerate_labels(2, 2, 2, 9, Q).unwrap() {
            let v = validate_label(
                &label.shape,
                &CentralCharacter::new(label.central.clone()).unwrap(),
                Q,
            )
            .unwrap();
            assert!(v.valid, "label failed: {:?} ({})", label.weight, v.reason);
        }
    }

    #[test]
    fn shifted_permutation_invariance() {
        // Moving weight content between slots by the shifted maps fixes
        // the central character: the argument multiset is unchanged.
        let eps = [1i8, 1, 1];
        let r = [0.2, 0.7, 1.2];
        let args = weight_arguments(&eps, &r, Q).unwrap();
        // Shift slots 1 and 3: x1 moves to slot 3 with exponent shifted by
        // 2*(3-1), x3 to slot 1 shifted back.
        let r2 = [r[2] + 2.0, r[1], r[0] - 2.0];
        let args2 = weight_arguments(&eps, &r2, Q).unwrap();
        let mut a = args.clone();
        let mut b = args2.clone();
        a.sort_by(|x, y| x.partial_cmp(y).unwrap());
        b.sort_by(|x, y| x.partial_cmp(y).unwrap());
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-10);
        }
        let c1 = central_from_weight(&eps, &r, Q).unwrap();
        let c2 = central_from_weight(&eps, &r2, Q).unwrap();
        for (x, y) in c1.values.iter().zip(&c2.values) {
            assert!((x - y).abs() < 1e-10);
        }
    }

    #[test]
    fn n1_labels() {
        // Rank 0 and rank 1 labels for the smallest algebra.
        let l0 = enumerate_labels(1, 0, 1, 1, Q).unwrap();
        assert_eq!(l0.len(), 1);
        let l1 = enumerate_labels(1, 1, 1, 1, Q).unwrap();
        assert_eq!(l1.len(), 2);
        for l in l1 {
            // sigma_1 = ±q^{2r}.
            assert!(l.central[0].abs() > 0.0);
        }
    }
}
