//! Symmetric coinvariants `R_n / J_n` with `J_n = ⟨F_1⟩`, and the freeness of
//! `R_n` over the symmetric invariants `span{1, F_1}`.

use num_traits::One;

use crate::combinat::ENUMERATION_CAP;
use crate::error::{Error, Result};
use crate::linalg::{rank, Echelon};
use crate::monomial::Monomial;
use crate::polynomial::ExtPolynomial;
use crate::quasisym::fundamental;
use crate::Rational;

/// Image of `p` in `R_n / J_n ≅ R_{n-1}` under `θ_n ↦ -(θ_1 + ... + θ_{n-1})`.
pub fn reduce_mod_j(p: &ExtPolynomial) -> Result<ExtPolynomial> {
    let n = p.n();
    if n == 0 {
        return Err(Error::Precondition("R_0 has no variable to eliminate".into()));
    }
    let m = n - 1;
    let minus_f1 = -&fundamental(m, 1)?;
    let top = 1u64 << (n - 1);
    let mut out = ExtPolynomial::zero(m)?;
    for (mono, c) in p.terms() {
        let rest = Monomial::from_bits(m, mono.bits() & !top)?;
        let lifted = ExtPolynomial::from_monomial(rest, c.clone());
        if mono.bits() & top == 0 {
            out = &out + &lifted;
        } else {
            // θ_n is the last factor of θ_A in increasing order
            out = &out + &(&lifted * &minus_f1);
        }
    }
    Ok(out)
}

/// `θ_A ↦ unit ⊗ 1 + f1 ⊗ F_1` with both components in `R_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorImage {
    pub unit: ExtPolynomial,
    pub f1: ExtPolynomial,
}

/// For `n ∉ A`: `θ_A ⊗ 1`. For `A = A_0 ∪ {n}`:
/// `-θ_{A_0}(θ_1 + ... + θ_{n-1}) ⊗ 1 + θ_{A_0} ⊗ F_1`.
pub fn tensor_decompose(mono: &Monomial) -> Result<TensorImage> {
    let n = mono.n();
    if n == 0 {
        return Err(Error::Precondition("R_0 has no variable to eliminate".into()));
    }
    let m = n - 1;
    let top = 1u64 << (n - 1);
    let a0 = ExtPolynomial::from_monomial(Monomial::from_bits(m, mono.bits() & !top)?, Rational::one());
    if mono.bits() & top == 0 {
        Ok(TensorImage { unit: a0, f1: ExtPolynomial::zero(m)? })
    } else {
        let unit = -&(&a0 * &fundamental(m, 1)?);
        Ok(TensorImage { unit, f1: a0 })
    }
}

/// The decomposition of every monomial of `R_n`, in lex order.
#[derive(Debug, Clone)]
pub struct TensorDecomposition {
    pub n: usize,
    pub images: Vec<(Monomial, TensorImage)>,
}

pub fn tensor_decomposition(n: usize) -> Result<TensorDecomposition> {
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded { n, cap: ENUMERATION_CAP });
    }
    let mut images = Vec::with_capacity(1 << n);
    for bits in 0u64..1 << n {
        let m = Monomial::from_bits(n, bits)?;
        images.push((m, tensor_decompose(&m)?));
    }
    images.sort_by_key(|a| a.0);
    Ok(TensorDecomposition { n, images })
}

impl TensorDecomposition {
    /// Rank of the images as vectors in `R_{n-1} ⊕ R_{n-1}`, realised inside
    /// `R_n` by sending `(u, f)` to `u + f·θ_n`.
    pub fn rank(&self) -> Result<usize> {
        let n = self.n;
        let theta_n = ExtPolynomial::var(n, n)?;
        let mut e = Echelon::new();
        for (_, img) in &self.images {
            let v = &img.unit.embed(n)? + &(&img.f1.embed(n)? * &theta_n);
            e.insert(&v);
        }
        Ok(e.rank())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreenessReport {
    pub n: usize,
    /// Rank of `reduce_mod_j` over the monomial basis of `R_n`.
    pub quotient_dim: usize,
    /// Rank of `{F_1 θ_A}`, which spans `J_n`.
    pub ideal_dim: usize,
    /// Whether every `F_1 θ_A` reduces to zero.
    pub ideal_in_kernel: bool,
    pub tensor_rank: usize,
}

impl FreenessReport {
    pub fn holds(&self) -> bool {
        let half = 1usize << (self.n - 1);
        self.quotient_dim == half
            && self.ideal_dim == half
            && self.ideal_in_kernel
            && self.tensor_rank == 1 << self.n
    }
}

/// Checks `dim R_n/J_n = 2^{n-1}`, `ker(reduce_mod_j) = F_1 R_n`, and that the
/// tensor decomposition is a linear bijection.
pub fn check_freeness(n: usize) -> Result<FreenessReport> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded { n, cap: ENUMERATION_CAP });
    }
    let f1 = fundamental(n, 1)?;
    let mut images = Vec::with_capacity(1 << n);
    let mut ideal = Vec::with_capacity(1 << n);
    for bits in 0u64..1 << n {
        let m = ExtPolynomial::from_monomial(Monomial::from_bits(n, bits)?, Rational::one());
        images.push(reduce_mod_j(&m)?);
        ideal.push(&f1 * &m);
    }
    let mut ideal_in_kernel = true;
    for g in &ideal {
        if !reduce_mod_j(g)?.is_zero() {
            ideal_in_kernel = false;
            break;
        }
    }
    Ok(FreenessReport {
        n,
        quotient_dim: rank(&images),
        ideal_dim: rank(&ideal),
        ideal_in_kernel,
        tensor_rank: tensor_decomposition(n)?.rank()?,
    })
}
