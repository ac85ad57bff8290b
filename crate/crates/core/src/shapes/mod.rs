//! Shapes of irreducible representations: a permutation `tau` of `[N]`
//! together with unimodular-or-zero column weights `u`, encoded as a
//! matrix with at most one nonzero entry per column via `S e_i = u_i
//! e_{tau(i)}`.
//!
//! Self-adjoint shapes (`tau` an involution, `u_{tau(i)} = conj(u_i)`) are
//! the ones that occur for irreducibles; their matrices are hermitian with
//! eigenvalues in `{1, -1, 0}`. This module provides the encoding, the
//! restriction to a smaller algebra, the coaction transforms, the
//! reduction to big-cell form, signatures, character shapes, the vanishing
//! ideal data, and enumeration.

mod reduce;
mod weights;

pub use reduce::{reduce_to_big_cell, BigCellReduction};
pub use weights::{cycles_ordered, WeightCombinatorics};

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{inversions, involutions, pair_lex_cmp, subsets, IndexSet};
use crate::error::CoreError;

/// Tolerance used when comparing phases that are only known numerically.
pub const PHASE_TOL: f64 = 1e-9;

/// A unimodular-or-zero column weight. Signs are kept exact; generic
/// phases are stored as an angle in radians.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Phase {
    Zero,
    Sign(i8),
    Phase(f64),
}

impl Phase {
    pub fn value(&self) -> Complex64 {
        match self {
            Phase::Zero => Complex64::new(0.0, 0.0),
            Phase::Sign(s) => Complex64::new(f64::from(*s), 0.0),
            Phase::Phase(theta) => Complex64::from_polar(1.0, *theta),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Phase::Zero)
    }

    pub fn conj(&self) -> Phase {
        match self {
            Phase::Zero => Phase::Zero,
            Phase::Sign(s) => Phase::Sign(*s),
            Phase::Phase(t) => Phase::Phase(-t),
        }
    }

    /// Classify a complex number as a phase, requiring it to be zero or
    /// unimodular within `tol`.
    pub fn from_complex(z: Complex64, tol: f64) -> Result<Phase, CoreError> {
        let r = z.norm();
        if r < tol {
            return Ok(Phase::Zero);
        }
        if (r - 1.0).abs() > tol {
            return Err(CoreError::InvalidShape(format!(
                "entry {z} is neither zero nor unimodular"
            )));
        }
        if z.im.abs() < tol {
            return Ok(Phase::Sign(if z.re > 0.0 { 1 } else { -1 }));
        }
        Ok(Phase::Phase(z.arg()))
    }

    pub fn approx_eq(&self, other: &Phase) -> bool {
        (self.value() - other.value()).norm() < PHASE_TOL
    }
}

/// A shape `(tau, u)` on `[1..=n]`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Shape {
    pub n: usize,
    /// Image vector: `tau[i-1] = tau(i)`, 1-based.
    pub tau: Vec<usize>,
    pub u: Vec<Phase>,
}

impl Shape {
    pub fn new(n: usize, tau: Vec<usize>, u: Vec<Phase>) -> Result<Self, CoreError> {
        if tau.len() != n || u.len() != n {
            return Err(CoreError::SizeMismatch(format!(
                "tau/u must have length {n}"
            )));
        }
        let mut seen = vec![false; n + 1];
        for &t in &tau {
            if t == 0 || t > n || seen[t] {
                return Err(CoreError::InvalidShape("tau is not a permutation".into()));
            }
            seen[t] = true;
        }
        for i in 1..=n {
            if tau[i - 1] != i && u[i - 1].is_zero() {
                return Err(CoreError::InvalidShape(format!(
                    "u({i}) must be nonzero because tau moves {i}"
                )));
            }
        }
        Ok(Shape { n, tau, u })
    }

    /// The identity-permutation shape with the given diagonal weights.
    pub fn diagonal(u: Vec<Phase>) -> Result<Self, CoreError> {
        let n = u.len();
        Shape::new(n, (1..=n).collect(), u)
    }

    /// Big-cell shape for a standard-form epsilon: `tau = id` and
    /// `u(i)` the prefix product of signs.
    pub fn big_cell(eps: &[i8]) -> Result<Self, CoreError> {
        crate::braid::epsilon_standard_rank(eps)?;
        let mut acc: i8 = 1;
        let u = eps
            .iter()
            .map(|&e| {
                if e == 0 {
                    Phase::Zero
                } else {
                    acc *= e;
                    Phase::Sign(acc)
                }
            })
            .collect();
        Shape::diagonal(u)
    }

    pub fn tau_of(&self, i: usize) -> usize {
        self.tau[i - 1]
    }

    pub fn u_of(&self, i: usize) -> Phase {
        self.u[i - 1]
    }

    /// Support: the indices with nonzero weight.
    pub fn support(&self) -> IndexSet {
        IndexSet::from_sorted(
            (1..=self.n)
                .filter(|&i| !self.u[i - 1].is_zero())
                .collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.support().len()
    }

    /// First `k` support elements.
    pub fn p_prefix(&self, k: usize) -> IndexSet {
        IndexSet::from_sorted(self.support().elements()[..k].to_vec())
    }

    /// Image of a set under `tau`.
    pub fn tau_image(&self, set: &IndexSet) -> IndexSet {
        set.map(|i| self.tau_of(i))
    }

    /// The minor index pair `(I, J) = (tau(P_[k]), P_[k])` of rank `k`.
    pub fn leading_pair(&self, k: usize) -> (IndexSet, IndexSet) {
        let p = self.p_prefix(k);
        (self.tau_image(&p), p)
    }

    pub fn is_self_adjoint(&self) -> bool {
        (1..=self.n).all(|i| {
            self.tau_of(self.tau_of(i)) == i
                && self.u_of(self.tau_of(i)).approx_eq(&self.u_of(i).conj())
        })
    }

    pub fn require_self_adjoint(&self) -> Result<(), CoreError> {
        if self.is_self_adjoint() {
            Ok(())
        } else {
            Err(CoreError::InvalidShape("shape is not self-adjoint".into()))
        }
    }

    /// Matrix encoding: column `i` carries `u_i` in row `tau(i)`.
    pub fn to_matrix(&self) -> DMatrix<Complex64> {
        let mut m = DMatrix::zeros(self.n, self.n);
        for i in 1..=self.n {
            m[(self.tau_of(i) - 1, i - 1)] = self.u_of(i).value();
        }
        m
    }

    /// Decode a matrix with at most one unimodular nonzero per column.
    pub fn from_matrix(m: &DMatrix<Complex64>, tol: f64) -> Result<Shape, CoreError> {
        let n = m.ncols();
        if m.nrows() != n {
            return Err(CoreError::SizeMismatch(
                "shape matrix must be square".into(),
            ));
        }
        let mut tau: Vec<usize> = (1..=n).collect();
        let mut u = vec![Phase::Zero; n];
        for col in 0..n {
            let mut nonzero: Option<(usize, Complex64)> = None;
            for row in 0..n {
                let z = m[(row, col)];
                if z.norm() > tol {
                    if nonzero.is_some() {
                        return Err(CoreError::InvalidShape(format!(
                            "column {} has multiple nonzero entries",
                            col + 1
                        )));
                    }
                    nonzero = Some((row, z));
                }
            }
            if let Some((row, z)) = nonzero {
                tau[col] = row + 1;
                u[col] = Phase::from_complex(z, tol)?;
            }
        }
        // Zero columns keep tau(i) = i; clash with an occupied row means
        // the support was not injective.
        let mut seen = vec![false; n + 1];
        for i in 1..=n {
            if !u[i - 1].is_zero() {
                seen[tau[i - 1]] = true;
            }
        }
        for i in 1..=n {
            if u[i - 1].is_zero() {
                tau[i - 1] = i;
                if seen[i] {
                    return Err(CoreError::InvalidShape(format!(
                        "zero column {i} clashes with an occupied row"
                    )));
                }
            }
        }
        Shape::new(n, tau, u)
    }

    pub fn approx_eq(&self, other: &Shape) -> bool {
        self.n == other.n
            && self.tau == other.tau
            && self.u.iter().zip(&other.u).all(|(a, b)| a.approx_eq(b))
    }

    /// Restriction to the upper-left `(n-1) x (n-1)` block: if `tau(n) = a
    /// != n` the restricted shape has `u(a) = 0` and `tau` fixing `a`.
    pub fn restrict(&self) -> Result<Shape, CoreError> {
        self.require_self_adjoint()?;
        let n = self.n;
        if n == 0 {
            return Err(CoreError::IndexRange(
                "cannot restrict the empty shape".into(),
            ));
        }
        let mut tau = Vec::with_capacity(n - 1);
        let mut u = Vec::with_capacity(n - 1);
        for i in 1..n {
            if self.tau_of(i) == n {
                tau.push(i);
                u.push(Phase::Zero);
            } else {
                tau.push(self.tau_of(i));
                u.push(self.u_of(i));
            }
        }
        Shape::new(n - 1, tau, u)
    }

    /// Iterated restriction.
    pub fn restrict_by(&self, m: usize) -> Result<Shape, CoreError> {
        let mut s = self.clone();
        for _ in 0..m {
            s = s.restrict()?;
        }
        Ok(s)
    }

    /// Inversion count of `tau` restricted to the first `k` support
    /// elements, viewed as a bijection onto its image.
    pub fn restricted_length(&self, k: usize) -> i64 {
        let p = self.p_prefix(k);
        let image: Vec<usize> = p.elements().iter().map(|&i| self.tau_of(i)).collect();
        inversions(p.elements(), &image).expect("tau restricted is injective")
    }

    /// Comparison key built from the leading minor pairs `(P_[k],
    /// tau(P_[k]))` in the pair order with the column set first; smaller
    /// keys mean earlier non-vanishing minors.
    fn pattern_key(&self) -> Vec<(IndexSet, IndexSet)> {
        (1..=self.rank())
            .map(|k| {
                let (i, j) = self.leading_pair(k);
                (j, i)
            })
            .collect()
    }

    fn pattern_less(&self, other: &Shape) -> bool {
        let a = self.pattern_key();
        let b = other.pattern_key();
        for (x, y) in a.iter().zip(b.iter()) {
            match pair_lex_cmp((&x.0, &x.1), (&y.0, &y.1)).expect("equal sizes") {
                std::cmp::Ordering::Less => return true,
                std::cmp::Ordering::Greater => return false,
                std::cmp::Ordering::Equal => {}
            }
        }
        false
    }
}

/// Result of the coaction transform at position `k`.
#[derive(Clone, Debug)]
pub enum AlphaOutcome {
    /// The two-irreducible split at an adjacent 2-cycle: both sign
    /// branches, `(+1, -1)` block first.
    Split(Shape, Shape),
    /// Single resulting shape (possibly equal to the input).
    Single(Shape),
}

impl AlphaOutcome {
    pub fn shapes(&self) -> Vec<&Shape> {
        match self {
            AlphaOutcome::Split(a, b) => vec![a, b],
            AlphaOutcome::Single(s) => vec![s],
        }
    }
}

/// Conjugate a shape by the transposition `(k, k+1)` at the matrix level.
pub(crate) fn conjugate_by_swap(s: &Shape, k: usize) -> Shape {
    let n = s.n;
    let c = |i: usize| -> usize {
        if i == k {
            k + 1
        } else if i == k + 1 {
            k
        } else {
            i
        }
    };
    let mut tau = vec![0usize; n];
    let mut u = vec![Phase::Zero; n];
    for i in 1..=n {
        tau[c(i) - 1] = c(s.tau_of(i));
        u[c(i) - 1] = s.u_of(i);
    }
    Shape { n, tau, u }
}

/// Transform of a shape under the elementary coaction at position `k`.
///
/// At an adjacent 2-cycle `tau(k) = k+1` the representation splits into
/// two irreducibles whose shapes replace the antidiagonal block by
/// `diag(±1, ∓1)`. Otherwise the resulting shape is the swap conjugate
/// when that strictly lowers the leading-minor pattern, and unchanged
/// when it does not; the representation-level detector cross-checks this
/// decision on every constructed chain.
pub fn alpha_transform(s: &Shape, k: usize) -> Result<AlphaOutcome, CoreError> {
    if k == 0 || k + 1 > s.n {
        return Err(CoreError::IndexRange(format!(
            "alpha position {k} outside [1..{}]",
            s.n.saturating_sub(1)
        )));
    }
    s.require_self_adjoint()?;
    if s.tau_of(k) == k + 1 {
        let mut plus = s.clone();
        plus.tau[k - 1] = k;
        plus.tau[k] = k + 1;
        plus.u[k - 1] = Phase::Sign(1);
        plus.u[k] = Phase::Sign(-1);
        let mut minus = s.clone();
        minus.tau[k - 1] = k;
        minus.tau[k] = k + 1;
        minus.u[k - 1] = Phase::Sign(-1);
        minus.u[k] = Phase::Sign(1);
        return Ok(AlphaOutcome::Split(plus, minus));
    }
    let swapped = conjugate_by_swap(s, k);
    if swapped.pattern_less(s) {
        Ok(AlphaOutcome::Single(swapped))
    } else {
        Ok(AlphaOutcome::Single(s.clone()))
    }
}

/// Signature `(N_+, N_-, N_0)` of a self-adjoint shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
}

impl Signature {
    pub fn total(&self) -> usize {
        self.plus + self.minus + self.zero
    }
}

/// Signature from eigenvalue counts, cross-checked three ways: the
/// combinatorial count (fixed signs plus one `+1, -1` pair per 2-cycle),
/// a numeric hermitian eigensolve, and the sign pattern of the big-cell
/// diagonal reached by reduction. Any mismatch aborts.
pub fn signature(s: &Shape) -> Result<Signature, CoreError> {
    s.require_self_adjoint()?;
    let mut plus = 0;
    let mut minus = 0;
    let mut zero = 0;
    for i in 1..=s.n {
        let t = s.tau_of(i);
        if t == i {
            match s.u_of(i) {
                Phase::Zero => zero += 1,
                Phase::Sign(1) => plus += 1,
                Phase::Sign(_) => minus += 1,
                Phase::Phase(theta) => {
                    // Self-adjointness forces a real value here.
                    if theta.cos() > 0.0 {
                        plus += 1;
                    } else {
                        minus += 1;
                    }
                }
            }
        } else if t > i {
            plus += 1;
            minus += 1;
        }
    }
    let combinatorial = Signature { plus, minus, zero };

    let m = s.to_matrix();
    let eig = nalgebra::SymmetricEigen::new(m);
    let (mut np, mut nm, mut nz) = (0usize, 0usize, 0usize);
    for ev in eig.eigenvalues.iter() {
        if ev.abs() < 1e-6 {
            nz += 1;
        } else if (ev - 1.0).abs() < 1e-6 {
            np += 1;
        } else if (ev + 1.0).abs() < 1e-6 {
            nm += 1;
        } else {
            return Err(CoreError::InvalidShape(format!(
                "shape matrix has eigenvalue {ev} outside {{1,-1,0}}"
            )));
        }
    }
    let numeric = Signature {
        plus: np,
        minus: nm,
        zero: nz,
    };
    if combinatorial != numeric {
        return Err(CoreError::SignatureMismatch(format!(
            "combinatorial {combinatorial:?} vs eigenvalue {numeric:?}"
        )));
    }

    let red = reduce_to_big_cell(s)?;
    let mut acc: i8 = 1;
    let (mut ep, mut em) = (0usize, 0usize);
    for &e in &red.eps {
        if e != 0 {
            acc *= e;
            if acc > 0 {
                ep += 1;
            } else {
                em += 1;
            }
        }
    }
    let from_eps = Signature {
        plus: ep,
        minus: em,
        zero: s.n - ep - em,
    };
    if from_eps != combinatorial {
        return Err(CoreError::SignatureMismatch(format!(
            "eigenvalue signature {combinatorial:?} vs big-cell epsilon {from_eps:?}"
        )));
    }
    Ok(combinatorial)
}

/// The shape of the character with `k` leading zeros, `l` antidiagonal
/// pairs `(k+i+1, N-i)`, overall sign `sign_c`, and pair phases `y`.
pub fn character_shape(
    n: usize,
    k: usize,
    l: usize,
    sign_c: i8,
    y: &[f64],
) -> Result<Shape, CoreError> {
    if l > n || k + l > n - l {
        return Err(CoreError::Precondition(format!(
            "character needs k + l <= N - l, got k={k}, l={l}, N={n}"
        )));
    }
    if y.len() != l {
        return Err(CoreError::SizeMismatch(format!(
            "need {l} pair phases, got {}",
            y.len()
        )));
    }
    if sign_c != 1 && sign_c != -1 {
        return Err(CoreError::Precondition("sign_c must be ±1".into()));
    }
    let mut tau: Vec<usize> = (1..=n).collect();
    let mut u = vec![Phase::Zero; n];
    for i in (k + l + 1)..=(n - l) {
        u[i - 1] = Phase::Sign(sign_c);
    }
    let sign_angle = if sign_c == 1 {
        0.0
    } else {
        std::f64::consts::PI
    };
    for (idx, &theta) in y.iter().enumerate() {
        let a = k + idx + 1;
        let b = n - idx;
        tau[a - 1] = b;
        tau[b - 1] = a;
        // Column b carries sign(c) * y_idx, column a its conjugate.
        u[b - 1] = Phase::Phase(theta + sign_angle);
        u[a - 1] = Phase::Phase(-(theta + sign_angle));
    }
    Shape::new(n, tau, u)
}

/// Whether the shape matches some character's shape pattern, returning
/// the witnessing `(k, l)`.
pub fn character_shape_pattern(s: &Shape) -> Option<(usize, usize)> {
    let n = s.n;
    // Zeros must form a prefix [1..=k].
    let k = (0..=n).find(|&k| (1..=n).all(|i| (i <= k) == s.u_of(i).is_zero()))?;
    let l = (1..=n).filter(|&i| s.tau_of(i) != i).count() / 2;
    for i in 0..l {
        let a = k + i + 1;
        let b = n - i;
        if a >= b || s.tau_of(a) != b {
            return None;
        }
    }
    // Everything else is fixed with one constant sign.
    let mut sign: Option<i8> = None;
    for i in (k + l + 1)..=(n.saturating_sub(l)) {
        if s.tau_of(i) != i {
            return None;
        }
        let v = s.u_of(i).value();
        if v.im.abs() > PHASE_TOL {
            return None;
        }
        let this = if v.re > 0.0 { 1 } else { -1 };
        match sign {
            None => sign = Some(this),
            Some(prev) if prev != this => return None,
            _ => {}
        }
    }
    if k + l > n - l {
        return None;
    }
    Some((k, l))
}

/// Index data of the vanishing ideal of a shape: the minor pairs that are
/// killed, the leading pairs that survive, and the leading pairs of every
/// restriction.
#[derive(Clone, Debug)]
pub struct IdealMinors {
    /// Pairs `(I, J)` with `(J, I)` strictly below the rank-`k` leading
    /// pair, all `k <= M`, plus every rank-`M+1` pair.
    pub vanishing: Vec<(IndexSet, IndexSet)>,
    /// Leading pairs `(tau(P_[k]), P_[k])` for `k = 1..=M`.
    pub leading: Vec<(IndexSet, IndexSet)>,
    /// Leading pairs of the depth-`m` restrictions, `m = 1..`.
    pub restricted_leading: Vec<Vec<(IndexSet, IndexSet)>>,
}

pub fn ideal_minors(s: &Shape) -> Result<IdealMinors, CoreError> {
    s.require_self_adjoint()?;
    let n = s.n;
    let m = s.rank();
    let mut vanishing = Vec::new();
    for k in 1..=m {
        let (lead_i, lead_j) = s.leading_pair(k);
        for j in subsets(n, k) {
            for i in subsets(n, k) {
                if pair_lex_cmp((&j, &i), (&lead_j, &lead_i))? == std::cmp::Ordering::Less {
                    vanishing.push((i.clone(), j.clone()));
                }
            }
        }
    }
    if m < n {
        for i in subsets(n, m + 1) {
            for j in subsets(n, m + 1) {
                vanishing.push((i.clone(), j.clone()));
            }
        }
    }
    let leading = (1..=m).map(|k| s.leading_pair(k)).collect();
    let mut restricted_leading = Vec::new();
    let mut cur = s.clone();
    while cur.n > 1 {
        cur = cur.restrict()?;
        restricted_leading.push((1..=cur.rank()).map(|k| cur.leading_pair(k)).collect());
    }
    Ok(IdealMinors {
        vanishing,
        leading,
        restricted_leading,
    })
}

/// All self-adjoint shapes of the given rank, one representative phase
/// for each 2-cycle.
pub fn enumerate_self_adjoint(n: usize, rank: usize, phase_rep: f64) -> Vec<Shape> {
    let mut out = Vec::new();
    for tau in involutions(n) {
        let two_cycles: Vec<usize> = (1..=n).filter(|&i| tau[i - 1] > i).collect();
        let fixed: Vec<usize> = (1..=n).filter(|&i| tau[i - 1] == i).collect();
        let c = two_cycles.len();
        if 2 * c > rank || rank - 2 * c > fixed.len() {
            continue;
        }
        let need = rank - 2 * c;
        for chosen in subsets(fixed.len(), need) {
            let support_fixed: Vec<usize> =
                chosen.elements().iter().map(|&p| fixed[p - 1]).collect();
            for bits in 0..(1usize << need) {
                let mut u = vec![Phase::Zero; n];
                for (b, &i) in support_fixed.iter().enumerate() {
                    u[i - 1] = Phase::Sign(if bits >> b & 1 == 0 { 1 } else { -1 });
                }
                for &i in &two_cycles {
                    u[i - 1] = Phase::Phase(phase_rep);
                    u[tau[i - 1] - 1] = Phase::Phase(-phase_rep);
                }
                if let Ok(shape) = Shape::new(n, tau.clone(), u) {
                    debug_assert!(shape.is_self_adjoint());
                    out.push(shape);
                }
            }
        }
    }
    out
}
