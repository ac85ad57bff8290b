//! The symbolic reflection equation algebra: free words in the generators
//! `Z_ij`, normal-form rewriting modulo the defining relations, and the
//! hermitian star structure.
//!
//! Normal order is row-major lexicographic on the generator key `(i, j)`:
//! a stored word never has an adjacent pair with the larger key on the
//! left. An out-of-order adjacent pair is rewritten by solving the defining
//! relation for that product; every term produced is strictly smaller in
//! the induced word order, so rewriting terminates (a step budget guards
//! the implementation anyway). Confluence of this orientation is not a
//! stated fact; it is evidenced by the randomized-strategy property tests
//! and would surface here as a hard error, not an auto-repair.

mod identities;
mod minors;

pub use identities::{verify_identity, ReaIdentity, ReaReport};
pub use minors::{project_quotient, quantum_minor, sigma};

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use crate::combinatorics::IndexSet;
use crate::error::CoreError;
use crate::scalars::ExactQ;

/// Generator key `(i, j)`, 1-based, meaning `Z_ij`.
pub type Gen = (usize, usize);

/// A free word in the generators.
pub type Word = Vec<Gen>;

/// A linear combination of words with `ExactQ` coefficients. Inside
/// [`NCPoly`] every word is normal ordered; the map form is also used for
/// transient unordered combinations during rewriting.
pub type TermMap = BTreeMap<Word, ExactQ>;

/// An element of the algebra in normal form.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct NCPoly {
    pub terms: TermMap,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly {
            terms: TermMap::new(),
        }
    }

    pub fn one() -> Self {
        let mut terms = TermMap::new();
        terms.insert(Vec::new(), ExactQ::one());
        NCPoly { terms }
    }

    pub fn generator(i: usize, j: usize) -> Self {
        let mut terms = TermMap::new();
        terms.insert(vec![(i, j)], ExactQ::one());
        NCPoly { terms }
    }

    pub fn scalar(c: ExactQ) -> Self {
        let mut terms = TermMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        NCPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            add_term(&mut terms, w.clone(), c.clone());
        }
        NCPoly { terms }
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> NCPoly {
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &ExactQ) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, k)| (w.clone(), k.mul(c)))
                .collect(),
        }
    }

    /// Canonical text form: words and coefficients in sorted order.
    pub fn canonical_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = Vec::new();
        for (w, c) in &self.terms {
            let word = if w.is_empty() {
                "1".to_string()
            } else {
                w.iter()
                    .map(|(i, j)| format!("Z{i}{j}"))
                    .collect::<Vec<_>>()
                    .join(".")
            };
            out.push(format!("({c}) {word}"));
        }
        out.join(" + ")
    }
}

pub(crate) fn add_term(terms: &mut TermMap, word: Word, coeff: ExactQ) {
    if coeff.is_zero() {
        return;
    }
    match terms.get_mut(&word) {
        Some(cur) => {
            let sum = cur.add(&coeff);
            if sum.is_zero() {
                terms.remove(&word);
            } else {
                *cur = sum;
            }
        }
        None => {
            terms.insert(word, coeff);
        }
    }
}

/// Rewriting context for a fixed matrix size `n`: holds the pair-rewrite
/// memo and the quantum-minor cache. Both caches are write-once maps,
/// safe under concurrent readers.
pub struct ReaContext {
    pub n: usize,
    pub budget: u64,
    pair_memo: RwLock<HashMap<(Gen, Gen), NCPoly>>,
    pub(crate) minor_memo: RwLock<HashMap<(IndexSet, IndexSet), NCPoly>>,
}

impl ReaContext {
    pub fn new(n: usize) -> Self {
        ReaContext {
            n,
            budget: 1_000_000,
            pair_memo: RwLock::new(HashMap::new()),
            minor_memo: RwLock::new(HashMap::new()),
        }
    }

    fn check_gen(&self, g: Gen) -> Result<(), CoreError> {
        if g.0 == 0 || g.0 > self.n || g.1 == 0 || g.1 > self.n {
            return Err(CoreError::IndexRange(format!(
                "generator Z{},{} outside [1..{}]^2",
                g.0, g.1, self.n
            )));
        }
        Ok(())
    }

    /// The defining relation instance for `(i, j, k, l)`, brought to the
    /// form `LHS - RHS` as a map of words. All terms are quadratic.
    fn relation_terms(&self, i: usize, j: usize, k: usize, l: usize) -> TermMap {
        let qm = ExactQ::q_inv_minus_q();
        let qm2 = qm.mul(&qm);
        let d = |a: usize, b: usize| -> i64 { i64::from(a == b) };
        let mut terms = TermMap::new();
        {
            let mut put = |g1: Gen, g2: Gen, c: ExactQ| add_term(&mut terms, vec![g1, g2], c);

            // Left side.
            put((i, j), (k, l), ExactQ::q_pow(-d(i, k) - d(j, k)));
            if k < i {
                put((k, j), (i, l), qm.mul_q_pow(-d(i, j)));
            }
            if j == k {
                for p in 1..j {
                    put((i, p), (p, l), qm.mul_q_pow(-d(i, j)));
                }
            }
            if i == j && k < i {
                for p in 1..i {
                    put((k, p), (p, l), qm2.clone());
                }
            }
            // Right side, negated.
            put((k, l), (i, j), ExactQ::q_pow(-d(i, l) - d(j, l)).neg());
            if l < j {
                put((k, j), (i, l), qm.mul_q_pow(-d(i, j)).neg());
            }
            if i == l {
                for p in 1..i {
                    put((k, p), (p, j), qm.mul_q_pow(-d(i, j)).neg());
                }
            }
            if i == j && l < j {
                for p in 1..j {
                    put((k, p), (p, l), qm2.neg());
                }
            }
        }
        terms
    }

    /// Rewrite of one out-of-order adjacent pair `Z_ab Z_cd` with
    /// `key(a,b) > key(c,d)`: solve the relation instance for the product,
    /// yielding a combination of strictly smaller two-letter words.
    fn pair_rewrite(&self, g1: Gen, g2: Gen) -> Result<NCPoly, CoreError> {
        debug_assert!(g1 > g2);
        if let Some(p) = self.pair_memo.read().unwrap().get(&(g1, g2)) {
            return Ok(p.clone());
        }
        let (a, b) = g1;
        let (c, d) = g2;
        let mut rel = self.relation_terms(a, b, c, d);
        let target = vec![g1, g2];
        let scalar = rel.remove(&target).ok_or_else(|| {
            CoreError::Calibration(format!(
                "relation for Z{a}{b} Z{c}{d} does not contain the target product"
            ))
        })?;
        let inv = scalar.invert_monomial().ok_or_else(|| {
            CoreError::Calibration(format!(
                "target coefficient {scalar} for Z{a}{b} Z{c}{d} is not invertible"
            ))
        })?;
        let neg_inv = inv.neg();
        let mut out = TermMap::new();
        for (w, cfc) in rel {
            debug_assert!(w.as_slice() < target.as_slice());
            add_term(&mut out, w, cfc.mul(&neg_inv));
        }
        let poly = NCPoly { terms: out };
        self.pair_memo
            .write()
            .unwrap()
            .entry((g1, g2))
            .or_insert_with(|| poly.clone());
        Ok(poly)
    }

    /// Normal form of an arbitrary combination of words: repeatedly rewrite
    /// the leftmost out-of-order adjacent pair of the largest pending word.
    pub fn normal_form(&self, input: &NCPoly) -> Result<NCPoly, CoreError> {
        self.normal_form_terms(input.terms.clone(), None)
    }

    /// Same rewriting relation, but the pair to rewrite inside the chosen
    /// word is picked by the provided strategy (used by the confluence
    /// property tests).
    pub fn normal_form_with_strategy(
        &self,
        input: &NCPoly,
        pick: &mut dyn FnMut(usize) -> usize,
    ) -> Result<NCPoly, CoreError> {
        self.normal_form_terms(input.terms.clone(), Some(pick))
    }

    pub(crate) fn normal_form_terms(
        &self,
        mut pending: TermMap,
        mut pick: Option<&mut dyn FnMut(usize) -> usize>,
    ) -> Result<NCPoly, CoreError> {
        for w in pending.keys() {
            for g in w {
                self.check_gen(*g)?;
            }
        }
        let mut out = TermMap::new();
        let mut steps: u64 = 0;
        while let Some((word, coeff)) = pending.pop_last() {
            let bad_positions: Vec<usize> = word
                .windows(2)
                .enumerate()
                .filter(|(_, w)| w[0] > w[1])
                .map(|(p, _)| p)
                .collect();
            if bad_positions.is_empty() {
                add_term(&mut out, word, coeff);
                continue;
            }
            steps += 1;
            if steps > self.budget {
                return Err(CoreError::RewriteBudget {
                    budget: self.budget,
                    steps,
                });
            }
            let pos = match pick.as_deref_mut() {
                None => bad_positions[0],
                Some(f) => bad_positions[f(bad_positions.len())],
            };
            let replacement = self.pair_rewrite(word[pos], word[pos + 1])?;
            for (pair, pc) in &replacement.terms {
                let mut w = Vec::with_capacity(word.len());
                w.extend_from_slice(&word[..pos]);
                w.extend_from_slice(pair);
                w.extend_from_slice(&word[pos + 2..]);
                add_term(&mut pending, w, coeff.mul(pc));
            }
        }
        Ok(NCPoly { terms: out })
    }

    /// Product followed by normal form.
    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> Result<NCPoly, CoreError> {
        let mut terms = TermMap::new();
        for (wa, ca) in &a.terms {
            for (wb, cb) in &b.terms {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                add_term(&mut terms, w, ca.mul(cb));
            }
        }
        self.normal_form_terms(terms, None)
    }

    /// Commutator `[a, b]` in normal form.
    pub fn commutator(&self, a: &NCPoly, b: &NCPoly) -> Result<NCPoly, CoreError> {
        Ok(self.mul(a, b)?.sub(&self.mul(b, a)?))
    }

    /// The star structure `Z* = Z` entrywise: reverses words, transposes
    /// generator indices, conjugates coefficients, and renormalizes.
    pub fn star(&self, p: &NCPoly) -> Result<NCPoly, CoreError> {
        let mut terms = TermMap::new();
        for (w, c) in &p.terms {
            let sw: Word = w.iter().rev().map(|&(i, j)| (j, i)).collect();
            add_term(&mut terms, sw, c.star());
        }
        self.normal_form_terms(terms, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn identity_passthrough() {
        let ctx = ReaContext::new(2);
        let z11 = NCPoly::generator(1, 1);
        assert_eq!(ctx.normal_form(&z11).unwrap(), z11);
        let one = NCPoly::one();
        assert_eq!(ctx.mul(&z11, &one).unwrap(), z11);
    }

    #[test]
    fn single_pair_rewrite_is_relation_consistent() {
        for n in [2usize, 3] {
            let ctx = ReaContext::new(n);
            for i in 1..=n {
                for j in 1..=n {
                    for k in 1..=n {
                        for l in 1..=n {
                            let g1 = (i, j);
                            let g2 = (k, l);
                            if g1 <= g2 {
                                continue;
                            }
                            let rewritten = ctx.pair_rewrite(g1, g2).unwrap();
                            for w in rewritten.terms.keys() {
                                assert!(w.len() == 2);
                                assert!(w.as_slice() < [g1, g2].as_slice());
                            }
                            // The rewrite agrees with the full normal form.
                            let mut direct = TermMap::new();
                            add_term(&mut direct, vec![g1, g2], ExactQ::one());
                            let nf = ctx.normal_form_terms(direct, None).unwrap();
                            let nf2 = ctx.normal_form(&rewritten).unwrap();
                            assert_eq!(nf, nf2);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn star_is_involution() {
        let ctx = ReaContext::new(2);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let mut terms = TermMap::new();
            for _ in 0..rng.gen_range(1..4) {
                let len = rng.gen_range(0..4);
                let w: Word = (0..len)
                    .map(|_| (rng.gen_range(1..=2), rng.gen_range(1..=2)))
                    .collect();
                add_term(&mut terms, w, ExactQ::q_pow(rng.gen_range(-2..3)));
            }
            let p = ctx.normal_form_terms(terms, None).unwrap();
            let ss = ctx.star(&ctx.star(&p).unwrap()).unwrap();
            assert_eq!(ss, p);
        }
    }

    #[test]
    fn star_of_generator_transposes() {
        let ctx = ReaContext::new(2);
        let s = ctx.star(&NCPoly::generator(1, 2)).unwrap();
        assert_eq!(s, NCPoly::generator(2, 1));
    }

    #[test]
    fn star_antimultiplicative() {
        let ctx = ReaContext::new(3);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..25 {
            let rand_poly = |rng: &mut rand_chacha::ChaCha8Rng| {
                let mut terms = TermMap::new();
                for _ in 0..rng.gen_range(1..3) {
                    let len = rng.gen_range(0..3);
                    let w: Word = (0..len)
                        .map(|_| (rng.gen_range(1..=3), rng.gen_range(1..=3)))
                        .collect();
                    add_term(&mut terms, w, ExactQ::q_pow(rng.gen_range(-1..2)));
                }
                NCPoly { terms }
            };
            let a = rand_poly(&mut rng);
            let b = rand_poly(&mut rng);
            let lhs = ctx.star(&ctx.mul(&a, &b).unwrap()).unwrap();
            let rhs = ctx
                .mul(&ctx.star(&b).unwrap(), &ctx.star(&a).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn confluence_random_strategies() {
        // Normal form is independent of the rewrite-pair choice on random
        // words of degree <= 4.
        for n in [2usize, 3] {
            let ctx = ReaContext::new(n);
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(101 + n as u64);
            for _ in 0..250 {
                let len = rng.gen_range(2..=4);
                let w: Word = (0..len)
                    .map(|_| (rng.gen_range(1..=n), rng.gen_range(1..=n)))
                    .collect();
                let mut terms = TermMap::new();
                add_term(&mut terms, w.clone(), ExactQ::one());
                let base = ctx.normal_form_terms(terms, None).unwrap();
                for _ in 0..3 {
                    let mut terms = TermMap::new();
                    add_term(&mut terms, w.clone(), ExactQ::one());
                    let mut strat = |k: usize| rng.gen_range(0..k);
                    let alt = ctx.normal_form_terms(terms, Some(&mut strat)).unwrap();
                    assert_eq!(base, alt, "confluence failure on word {w:?}");
                }
            }
        }
    }

    #[test]
    fn normal_form_idempotent() {
        let ctx = ReaContext::new(3);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let len = rng.gen_range(0..5);
            let w: Word = (0..len)
                .map(|_| (rng.gen_range(1..=3), rng.gen_range(1..=3)))
                .collect();
            let mut terms = TermMap::new();
            add_term(&mut terms, w, ExactQ::one());
            let p = ctx.normal_form_terms(terms, None).unwrap();
            assert_eq!(ctx.normal_form(&p).unwrap(), p);
        }
    }
}
