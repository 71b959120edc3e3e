//! The ideal `I_n` generated by the quasisymmetric invariants: the recursive
//! family `G_α`, its non-ballot linear basis, normal forms modulo `I_n`, the
//! ballot monomial basis of the quotient and its Hilbert series, and the
//! minimal Gröbner subset.

use std::collections::HashMap;

use num_traits::One;

use crate::ballot::{enumerate, BinarySeq, SeqFilter};
use crate::combinat::ENUMERATION_CAP;
use crate::error::{check_same_n, Error, Result};
use crate::monomial::{Monomial, Sign};
use crate::polynomial::ExtPolynomial;
use crate::quasisym::fundamental;
use crate::Rational;

/// Memoized `G_α` for a fixed length `n`.
///
/// `G_{1^s 0^{n-s}} = F_{1^s}`; otherwise `α = u 0 1^s 0^{n-k-s}` with
/// `|u| = k - 1` and
///
/// ```text
/// G_α = G_{u 1^s 0^{n-k-s+1}} - (-1)^{m_1(u)} θ_k G_{u 1^{s-1} 0^{n-k-s+2}}
/// ```
///
/// Not `Sync`-shared: clone one per worker.
#[derive(Debug, Clone)]
pub struct GFamily {
    n: usize,
    memo: HashMap<u64, ExtPolynomial>,
}

/// Which branch of the recursion defines `G_α`.
enum Shape {
    /// `1^s 0^{n-s}`
    Base(usize),
    /// `(k, left child bits, right child bits, sign of the θ_k term)`
    Step { k: usize, shifted: u64, shortened: u64, sign: Sign },
}

fn shape(alpha: u64) -> Shape {
    if alpha == 0 {
        return Shape::Base(0);
    }
    let last = 63 - alpha.leading_zeros() as usize; // 0-based position of the last 1
    // length of the block of 1s ending at `last`
    let s = (!(alpha << (63 - last))).leading_zeros() as usize;
    let first = last + 1 - s; // 0-based start of the block
    if first == 0 {
        return Shape::Base(s);
    }
    let k0 = first - 1; // 0-based position of the 0 before the block; k = k0 + 1
    let u = alpha & ((1u64 << k0) - 1);
    let block_mask = |len: usize| if len == 0 { 0 } else { ((1u64 << len) - 1) << k0 };
    Shape::Step {
        k: k0 + 1,
        shifted: u | block_mask(s),
        shortened: u | block_mask(s - 1),
        sign: Sign::from_parity(u.count_ones()),
    }
}

impl GFamily {
    pub fn new(n: usize) -> Result<GFamily> {
        if n > ENUMERATION_CAP {
            return Err(Error::CapExceeded { n, cap: ENUMERATION_CAP });
        }
        Ok(GFamily { n, memo: HashMap::new() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of memoized entries.
    pub fn cached(&self) -> usize {
        self.memo.len()
    }

    pub fn g(&mut self, alpha: &BinarySeq) -> Result<&ExtPolynomial> {
        if alpha.len() != self.n {
            return Err(Error::DimensionMismatch { left: alpha.len(), right: self.n });
        }
        self.ensure(alpha.bits())?;
        Ok(&self.memo[&alpha.bits()])
    }

    fn ensure(&mut self, alpha: u64) -> Result<()> {
        if self.memo.contains_key(&alpha) {
            return Ok(());
        }
        let value = match shape(alpha) {
            Shape::Base(s) => fundamental(self.n, s)?,
            Shape::Step { k, shifted, shortened, sign } => {
                self.ensure(shifted)?;
                self.ensure(shortened)?;
                let theta_k = Monomial::var(self.n, k)?;
                let tail = self.memo[&shortened].left_mul_monomial(&theta_k)?;
                let mut out = self.memo[&shifted].clone();
                let c = match sign {
                    Sign::Plus => -Rational::one(),
                    Sign::Minus => Rational::one(),
                };
                out.add_scaled(&c, &tail)?;
                out
            }
        };
        self.memo.insert(alpha, value);
        Ok(())
    }

    /// `A_n = {G_α : α not ballot}`, in lex order of `α`.
    pub fn ideal_basis(&mut self) -> Result<Vec<(BinarySeq, ExtPolynomial)>> {
        self.family(SeqFilter::NonBallot)
    }

    /// `{G_α : α breaks the ballot condition only at its rightmost 1}`.
    pub fn minimal_groebner(&mut self) -> Result<Vec<(BinarySeq, ExtPolynomial)>> {
        self.family(SeqFilter::MinimalGb)
    }

    pub fn family(&mut self, filter: SeqFilter) -> Result<Vec<(BinarySeq, ExtPolynomial)>> {
        let mut out = Vec::new();
        for alpha in enumerate(self.n, filter)? {
            let g = self.g(&alpha)?.clone();
            out.push((alpha, g));
        }
        Ok(out)
    }

    /// Rewrites `p` modulo `I_n` onto ballot monomials by repeatedly
    /// cancelling the lex-largest non-ballot monomial `θ^γ` with `G_γ`.
    pub fn normal_form(&mut self, p: &ExtPolynomial) -> Result<NormalFormResult> {
        check_same_n(p.n(), self.n)?;
        let mut work = p.clone();
        let mut decomposition = Vec::new();
        let mut bound: Option<Monomial> = None;
        loop {
            let next = work
                .terms()
                .rev()
                .find(|(m, _)| bound.is_none_or(|b| **m < b) && !BinarySeq::from_monomial(m).is_ballot())
                .map(|(m, c)| (*m, c.clone()));
            let Some((gamma, c)) = next else { break };
            let gamma_seq = BinarySeq::from_monomial(&gamma);
            let g = self.g(&gamma_seq)?;
            debug_assert_eq!(g.leading_term().map(|(m, _)| *m), Some(gamma));
            work.add_scaled(&-c.clone(), g)?;
            decomposition.push((gamma_seq, c));
            bound = Some(gamma);
        }
        Ok(NormalFormResult { input: p.clone(), normal_form: work, decomposition })
    }

    pub fn in_ideal(&mut self, p: &ExtPolynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.normal_form.is_zero())
    }
}

/// `input = normal_form + Σ c · G_γ` over the recorded `(γ, c)`, every `γ`
/// non-ballot and `normal_form` supported on ballot monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalFormResult {
    pub input: ExtPolynomial,
    pub normal_form: ExtPolynomial,
    pub decomposition: Vec<(BinarySeq, Rational)>,
}

impl NormalFormResult {
    pub fn in_ideal(&self) -> bool {
        self.normal_form.is_zero()
    }

    /// `normal_form + Σ c · G_γ`; equals `input` when the decomposition is sound.
    pub fn reconstruct(&self, family: &mut GFamily) -> Result<ExtPolynomial> {
        let mut acc = self.normal_form.clone();
        for (gamma, c) in &self.decomposition {
            acc.add_scaled(c, family.g(gamma)?)?;
        }
        Ok(acc)
    }
}

pub fn g_poly(alpha: &BinarySeq) -> Result<ExtPolynomial> {
    GFamily::new(alpha.len())?.g(alpha).cloned()
}

/// `θ^α`, the lex-leading monomial of `G_α`.
pub fn leading_monomial(alpha: &BinarySeq) -> Monomial {
    alpha.to_monomial()
}

pub fn ideal_basis(n: usize) -> Result<Vec<(BinarySeq, ExtPolynomial)>> {
    GFamily::new(n)?.ideal_basis()
}

pub fn minimal_groebner(n: usize) -> Result<Vec<(BinarySeq, ExtPolynomial)>> {
    GFamily::new(n)?.minimal_groebner()
}

pub fn normal_form(p: &ExtPolynomial) -> Result<NormalFormResult> {
    GFamily::new(p.n())?.normal_form(p)
}

pub fn in_ideal(p: &ExtPolynomial) -> Result<bool> {
    Ok(normal_form(p)?.in_ideal())
}

/// `B_n = {θ^β : β ballot}`, in lex order of `β`.
pub fn quotient_basis(n: usize) -> Result<Vec<Monomial>> {
    Ok(enumerate(n, SeqFilter::Ballot)?.iter().map(BinarySeq::to_monomial).collect())
}

/// Graded dimensions of `R_n / I_n`: the number of ballot monomials in each
/// degree `0..=n/2`.
pub fn hilbert_series(n: usize) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; n / 2 + 1];
    for m in quotient_basis(n)? {
        counts[m.degree()] += 1;
    }
    Ok(counts)
}

/// Gröbner reduction of `p` against `basis`, allowing monomial multiples: a
/// monomial `θ^γ` is cancelled by `± θ_{γ \ α} G_α` whenever `α ⊆ γ`. The
/// cofactor's sign makes the leading coefficient of the reducer `+1`.
pub fn reduce_by(p: &ExtPolynomial, basis: &[(BinarySeq, ExtPolynomial)]) -> Result<ExtPolynomial> {
    let n = p.n();
    for (alpha, g) in basis {
        check_same_n(n, alpha.len())?;
        check_same_n(n, g.n())?;
    }
    let mut work = p.clone();
    let mut bound: Option<Monomial> = None;
    loop {
        let next = work
            .terms()
            .rev()
            .filter(|(m, _)| bound.is_none_or(|b| **m < b))
            .find_map(|(m, c)| {
                basis
                    .iter()
                    .find(|(alpha, _)| alpha.to_monomial().divides(m))
                    .map(|hit| (*m, c.clone(), hit))
            });
        let Some((gamma, c, (alpha, g))) = next else { break };
        let lead = alpha.to_monomial();
        let cofactor = Monomial::from_bits(n, gamma.bits() & !lead.bits())?;
        let (sign, product) = cofactor.mul(&lead)?.expect("disjoint supports");
        debug_assert_eq!(product, gamma);
        let reducer = g.left_mul_monomial(&cofactor)?;
        let scale = match sign {
            Sign::Plus => -c,
            Sign::Minus => c,
        };
        work.add_scaled(&scale, &reducer)?;
        bound = Some(gamma);
    }
    Ok(work)
}

/// Checks `G_{0α} = G_α(θ_2, ..., θ_n)` and that `G_{1α} - θ_1 G_{0α}` only
/// involves `θ_2, ..., θ_n`, for `α` of length `n - 1`.
pub fn shift_identity_check(alpha: &BinarySeq) -> Result<bool> {
    let n = alpha.len() + 1;
    let zero_alpha = BinarySeq::from_bits(n, alpha.bits() << 1)?;
    let mut family = GFamily::new(n)?;
    let shifted = g_poly(alpha)?.shift(1, n)?;
    let g0 = family.g(&zero_alpha)?.clone();
    if g0 != shifted {
        return Ok(false);
    }
    let residual = shift_residual_with(&mut family, alpha)?;
    Ok(residual.uses_only_vars(2, n))
}

/// `G_{1α} - θ_1 G_{0α}` in `R_n`, `n = |α| + 1`.
pub fn shift_residual(alpha: &BinarySeq) -> Result<ExtPolynomial> {
    shift_residual_with(&mut GFamily::new(alpha.len() + 1)?, alpha)
}

fn shift_residual_with(family: &mut GFamily, alpha: &BinarySeq) -> Result<ExtPolynomial> {
    let n = family.n();
    let zero_alpha = BinarySeq::from_bits(n, alpha.bits() << 1)?;
    let one_alpha = BinarySeq::from_bits(n, alpha.bits() << 1 | 1)?;
    let g0 = family.g(&zero_alpha)?.left_mul_monomial(&Monomial::var(n, 1)?)?;
    let g1 = family.g(&one_alpha)?;
    g1.sub(&g0)
}

/// Whether the lex-leading term of `G_α` is exactly `θ^α` with coefficient 1.
pub fn leading_term_check(family: &mut GFamily, alpha: &BinarySeq) -> Result<bool> {
    let g = family.g(alpha)?;
    Ok(match g.leading_term() {
        Some((m, c)) => *m == alpha.to_monomial() && c.is_one(),
        None => false,
    })
}
