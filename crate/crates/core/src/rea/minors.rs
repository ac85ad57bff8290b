//! Quantum minors, central elements, and the quotient onto a smaller
//! algebra.
//!
//! Minors are built by the rank-reducing Laplace expansion with the first
//! position split off; the three sibling expansions and the cross-checks
//! against the central elements live in the identity suite.

use num::BigInt;

use crate::braid::minor_coeffs;
use crate::combinatorics::{descents_below, inversions, permutations, subsets, IndexSet};
use crate::error::CoreError;
use crate::scalars::{ExactQ, GaussRational};

use super::{add_term, NCPoly, ReaContext, TermMap, Word};

/// The quantum minor `Z_{I,J}`, `|I| = |J|`, as a normal-form element.
pub fn quantum_minor(ctx: &ReaContext, i: &IndexSet, j: &IndexSet) -> Result<NCPoly, CoreError> {
    if i.len() != j.len() {
        return Err(CoreError::SizeMismatch(format!(
            "minor needs |I| = |J|, got {} and {}",
            i.len(),
            j.len()
        )));
    }
    if let Some(p) = ctx.minor_memo.read().unwrap().get(&(i.clone(), j.clone())) {
        return Ok(p.clone());
    }
    let k = i.len();
    let result = match k {
        0 => NCPoly::one(),
        1 => NCPoly::generator(i.elements()[0], j.elements()[0]),
        _ => {
            // Split off one row/column pair: the expansion over rank-1 by
            // rank-(k-1) products with position set K = {1}.
            let n = ctx.n;
            let kset = IndexSet::singleton(1);
            let (i_k, i_rest) = i.select(&kset)?;
            let inv_table = minor_coeffs(n, 1, k - 1)?;
            let fwd_table = minor_coeffs(n, 1, k - 1)?;
            let mut acc = NCPoly::zero();
            for p in 1..=k {
                let pset = IndexSet::singleton(p);
                let (j_p, j_rest) = j.select(&pset)?;
                let sign = ExactQ::neg_q_pow(p as i64 - 1);
                // (Rinv)^{S, I_K}_{I^K, T'} with S, I_K rank 1.
                for ((s, ik_key, irest_key, tp), cinv) in inv_table.inverse_coeffs.iter() {
                    if ik_key != &i_k || irest_key != &i_rest {
                        continue;
                    }
                    // R^{J_P, T}_{T', S'} with J_P, T rank 1.
                    for ((jp_key, t, tp_key, sp), cfwd) in fwd_table.coeffs.iter() {
                        if jp_key != &j_p || tp_key != tp {
                            continue;
                        }
                        let coeff = sign.mul(cinv).mul(cfwd);
                        let tail = quantum_minor(ctx, sp, &j_rest)?;
                        let head = (s.elements()[0], t.elements()[0]);
                        let mut terms = TermMap::new();
                        for (w, c) in &tail.terms {
                            let mut word: Word = Vec::with_capacity(w.len() + 1);
                            word.push(head);
                            word.extend_from_slice(w);
                            add_term(&mut terms, word, c.mul(&coeff));
                        }
                        acc = acc.add(&NCPoly { terms });
                    }
                }
            }
            ctx.normal_form(&acc)?
        }
    };
    ctx.minor_memo
        .write()
        .unwrap()
        .entry((i.clone(), j.clone()))
        .or_insert_with(|| result.clone());
    Ok(result)
}

/// The leading minor `Z_{[k]}`.
pub fn leading_minor(ctx: &ReaContext, k: usize) -> Result<NCPoly, CoreError> {
    let full = IndexSet::interval(k);
    quantum_minor(ctx, &full, &full)
}

/// The central element `sigma_k` of the size-`n` algebra, from its explicit
/// expansion over permutations of k-subsets:
///
/// ```text
/// sigma_k = q^{2Nk} sum_I sum_{sigma in Sym(I)}
///           q^{-2 wt(I)} (-q)^{-l(sigma)} q^{-a(sigma)}
///           Z_{i_k sigma(i_k)} ... Z_{i_1 sigma(i_1)}
/// ```
pub fn sigma(ctx: &ReaContext, k: usize) -> Result<NCPoly, CoreError> {
    let n = ctx.n;
    if k == 0 || k > n {
        return Err(CoreError::IndexRange(format!(
            "sigma_k needs 1 <= k <= {n}, got {k}"
        )));
    }
    let mut terms = TermMap::new();
    for iset in subsets(n, k) {
        let elems = iset.elements();
        let wt = iset.weight();
        for image in permutations(elems) {
            // Inversions are counted for the permutation of the whole of
            // [N] fixing the complement of I, so crossing pairs matter.
            let full_domain: Vec<usize> = (1..=n).collect();
            let mut full_image = full_domain.clone();
            for (pos, &e) in elems.iter().enumerate() {
                full_image[e - 1] = image[pos];
            }
            let l = inversions(&full_domain, &full_image)?;
            let a = descents_below(elems, &image)?;
            // Exponent bookkeeping: q^{2Nk - 2wt(I) - l - a} with sign (-1)^l.
            let exp = 2 * (n as i64) * (k as i64) - 2 * wt - l - a;
            let sign = if l % 2 == 0 { 1 } else { -1 };
            let coeff = ExactQ::monomial(BigInt::from(exp), GaussRational::from_int(sign));
            let word: Word = (0..k)
                .rev()
                .map(|pos| (elems[pos], image[pos]))
                .collect();
            add_term(&mut terms, word, coeff);
        }
    }
    ctx.normal_form(&NCPoly { terms })
}

/// Quotient onto the lower-right block: kills every `Z_ij` with `i <= m` or
/// `j <= m` and relabels the remaining generators down by `m`, landing in
/// the algebra of size `n - m`.
pub fn project_quotient(
    ctx: &ReaContext,
    target: &ReaContext,
    p: &NCPoly,
    m: usize,
) -> Result<NCPoly, CoreError> {
    if m >= ctx.n && !p.is_zero() {
        return Err(CoreError::IndexRange(format!(
            "quotient depth {m} must be < N = {}",
            ctx.n
        )));
    }
    if target.n + m != ctx.n {
        return Err(CoreError::SizeMismatch(format!(
            "target context size {} does not match N - m = {}",
            target.n,
            ctx.n - m
        )));
    }
    let mut terms = TermMap::new();
    'words: for (w, c) in &p.terms {
        let mut relabeled: Word = Vec::with_capacity(w.len());
        for &(i, j) in w {
            if i <= m || j <= m {
                continue 'words;
            }
            relabeled.push((i - m, j - m));
        }
        add_term(&mut terms, relabeled, c.clone());
    }
    target.normal_form_terms(terms, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iset(v: &[usize]) -> IndexSet {
        IndexSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rank_one_minor_is_generator() {
        let ctx = ReaContext::new(2);
        let m = quantum_minor(&ctx, &iset(&[1]), &iset(&[1])).unwrap();
        assert_eq!(m, NCPoly::generator(1, 1));
    }

    #[test]
    fn sigma_one_n2() {
        // sigma_1 = q^2 Z_11 + Z_22 for N = 2.
        let ctx = ReaContext::new(2);
        let s = sigma(&ctx, 1).unwrap();
        let expect = NCPoly::generator(1, 1)
            .scale(&ExactQ::q_pow(2))
            .add(&NCPoly::generator(2, 2));
        assert_eq!(s, expect);
    }

    #[test]
    fn qdet_vs_sigma_n2() {
        // Z_{[2]} = q^{-2} sigma_2.
        let ctx = ReaContext::new(2);
        let det = leading_minor(&ctx, 2).unwrap();
        let s2 = sigma(&ctx, 2).unwrap().scale(&ExactQ::q_pow(-2));
        assert_eq!(det, s2, "\ndet = {}\nsigma-side = {}", det.canonical_text(), s2.canonical_text());
    }

    #[test]
    fn centrality_n2() {
        let ctx = ReaContext::new(2);
        for k in 1..=2 {
            let s = sigma(&ctx, k).unwrap();
            for i in 1..=2 {
                for j in 1..=2 {
                    let z = NCPoly::generator(i, j);
                    let c = ctx.commutator(&s, &z).unwrap();
                    assert!(
                        c.is_zero(),
                        "sigma_{k} does not commute with Z{i}{j}: {}",
                        c.canonical_text()
                    );
                }
            }
        }
    }

    #[test]
    fn minor_star_link_n2() {
        let ctx = ReaContext::new(2);
        let m12 = quantum_minor(&ctx, &iset(&[1, 2]), &iset(&[1, 2])).unwrap();
        let star = ctx.star(&m12).unwrap();
        assert_eq!(star, m12);
    }

    #[test]
    fn project_quotient_examples() {
        let ctx = ReaContext::new(2);
        let tgt = ReaContext::new(1);
        let z11 = NCPoly::generator(1, 1);
        assert!(project_quotient(&ctx, &tgt, &z11, 1).unwrap().is_zero());
        let z22 = NCPoly::generator(2, 2);
        assert_eq!(
            project_quotient(&ctx, &tgt, &z22, 1).unwrap(),
            NCPoly::generator(1, 1)
        );
    }
}
