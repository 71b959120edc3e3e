//! The harmonic space: joint kernel of `Σ_i ∂_{θ_i}` and `Σ_{i<j} ∂_{θ_j}∂_{θ_i}`,
//! its spanning family `Δ_C`, and the ballot-indexed basis.

use std::collections::HashMap;

use num_traits::Zero;

use crate::ballot::{enumerate, pairing_from_ballot, BinarySeq, NonCrossingPairing, SeqFilter};
use crate::combinat::{subsets_of_size, ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::monomial::{check_n, Monomial};
use crate::polynomial::ExtPolynomial;
use crate::Rational;

/// `Σ_{1<=i<=n} ∂_{θ_i} p`.
pub fn d1(p: &ExtPolynomial) -> ExtPolynomial {
    let mut out = ExtPolynomial::zero(p.n()).expect("n already validated");
    for i in 1..=p.n() {
        let term = p.partial(i).expect("index in range");
        out = &out + &term;
    }
    out
}

/// `Σ_{1<=i<j<=n} ∂_{θ_j} ∂_{θ_i} p`, with `∂_{θ_i}` applied first.
pub fn d2(p: &ExtPolynomial) -> ExtPolynomial {
    let n = p.n();
    let mut out = ExtPolynomial::zero(n).expect("n already validated");
    for i in 1..=n {
        let di = p.partial(i).expect("index in range");
        if di.is_zero() {
            continue;
        }
        for j in i + 1..=n {
            out = &out + &di.partial(j).expect("index in range");
        }
    }
    out
}

pub fn is_harmonic(p: &ExtPolynomial) -> bool {
    d1(p).is_zero() && d2(p).is_zero()
}

/// `Δ_C = (θ_{j_1} - θ_{i_1}) ... (θ_{j_k} - θ_{i_k})`, and `1` for the empty pairing.
pub fn delta(c: &NonCrossingPairing, n: usize) -> Result<ExtPolynomial> {
    if c.max_index() > n {
        return Err(Error::IndexOutOfRange { index: c.max_index(), n });
    }
    let mut acc = ExtPolynomial::one(n)?;
    for &(i, j) in c.pairs() {
        let factor = &ExtPolynomial::var(n, j)? - &ExtPolynomial::var(n, i)?;
        acc = &acc * &factor;
    }
    Ok(acc)
}

/// Lex-smallest monomial of a polynomial.
pub fn smallest_lex_monomial(p: &ExtPolynomial) -> Option<Monomial> {
    p.trailing_term().map(|(m, _)| *m)
}

/// `{Δ_{C(α)} : α ballot of length n}`, in lex order of `α`.
#[derive(Debug, Clone)]
pub struct HarmonicBasis {
    n: usize,
    elements: Vec<(BinarySeq, ExtPolynomial)>,
}

impl HarmonicBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[(BinarySeq, ExtPolynomial)] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements of degree `k`, i.e. indexed by ballot sequences with `k` ones.
    pub fn degree(&self, k: usize) -> impl Iterator<Item = &(BinarySeq, ExtPolynomial)> {
        self.elements.iter().filter(move |(a, _)| a.ones() == k)
    }

    /// Number of elements in each degree `0..=n/2`.
    pub fn counts_by_degree(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n / 2 + 1];
        for (a, _) in &self.elements {
            counts[a.ones()] += 1;
        }
        counts
    }
}

pub fn harmonic_candidate_basis(n: usize) -> Result<HarmonicBasis> {
    let mut elements = Vec::new();
    for alpha in enumerate(n, SeqFilter::Ballot)? {
        let c = pairing_from_ballot(&alpha)?;
        elements.push((alpha, delta(&c, n)?));
    }
    Ok(HarmonicBasis { n, elements })
}

/// Degree-`k` monomials of `R_n`, lex-descending.
pub fn degree_basis(n: usize, k: usize) -> Result<Vec<Monomial>> {
    check_n(n)?;
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded { n, cap: ENUMERATION_CAP });
    }
    let mut out: Vec<Monomial> =
        subsets_of_size(n, k).map(|b| Monomial::from_bits(n, b).expect("fits")).collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Basis of the degree-`k` harmonics, computed as the exact kernel of the
/// stacked maps `d1: R_n^k -> R_n^{k-1}` and `d2: R_n^k -> R_n^{k-2}`.
pub fn harmonic_kernel(n: usize, k: usize) -> Result<Vec<ExtPolynomial>> {
    if k > n {
        return Err(Error::Precondition(format!("degree {k} exceeds n = {n}")));
    }
    let cols = degree_basis(n, k)?;
    let mut row_of: HashMap<(u8, Monomial), usize> = HashMap::new();
    let mut images = Vec::with_capacity(cols.len());
    for m in &cols {
        let p = ExtPolynomial::from_monomial(*m, Rational::from_integer(1.into()));
        let (a, b) = (d1(&p), d2(&p));
        for (tag, img) in [(1u8, &a), (2u8, &b)] {
            for mono in img.monomials() {
                let next = row_of.len();
                row_of.entry((tag, *mono)).or_insert(next);
            }
        }
        images.push((a, b));
    }
    let mut matrix = Matrix::zeros(row_of.len(), cols.len());
    for (col, (a, b)) in images.iter().enumerate() {
        for (tag, img) in [(1u8, a), (2u8, b)] {
            for (mono, c) in img.terms() {
                matrix.set(row_of[&(tag, *mono)], col, c.clone());
            }
        }
    }
    let kernel = matrix.kernel();
    kernel
        .into_iter()
        .map(|x| {
            ExtPolynomial::from_terms(
                n,
                cols.iter().zip(x).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (*m, c)),
            )
        })
        .collect()
}
