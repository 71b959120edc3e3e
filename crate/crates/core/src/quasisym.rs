//! Quasisymmetric operators `π_i`, the invariants `F_{1^r}`, and the structure
//! constants `a_{r,s}` of `F_{1^r} F_{1^s} = a_{r,s} F_{1^{r+s}}`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::{binomial, binomial_big, subsets_of_size, ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::polynomial::ExtPolynomial;
use crate::Rational;

/// Largest number of terms [`fundamental`] will materialize.
pub const MAX_TERMS: u64 = 1 << 20;

/// Largest `r + s` accepted by [`product_coefficient_bruteforce`].
pub const BRUTE_FORCE_CAP: usize = 24;

/// `π_i` for `1 <= i < n`: fixes `θ_A` when `i, i+1` are both in or both out
/// of `A`, and otherwise moves the index across. No sign is introduced.
pub fn pi(i: usize, p: &ExtPolynomial) -> Result<ExtPolynomial> {
    let n = p.n();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, n: n.saturating_sub(1) });
    }
    let lo = 1u64 << (i - 1);
    let hi = 1u64 << i;
    let terms = p.terms().map(|(m, c)| {
        let b = m.bits();
        let moved = match (b & lo != 0, b & hi != 0) {
            (true, false) => b & !lo | hi,
            (false, true) => b & !hi | lo,
            _ => b,
        };
        (Monomial::from_bits(n, moved).expect("stays inside [n]"), c.clone())
    });
    ExtPolynomial::from_terms(n, terms)
}

/// `F_{1^r} = Σ_{|A| = r} θ_A`; the constant `1` for `r = 0` and zero for `r > n`.
pub fn fundamental(n: usize, r: usize) -> Result<ExtPolynomial> {
    crate::monomial::check_n(n)?;
    if binomial(n as u64, r as u64).is_none_or(|c| c > MAX_TERMS) {
        return Err(Error::CapExceeded { n, cap: ENUMERATION_CAP });
    }
    ExtPolynomial::from_terms(
        n,
        subsets_of_size(n, r).map(|bits| (Monomial::from_bits_unchecked(n, bits), Rational::one())),
    )
}

/// Invariance under every `π_i`.
pub fn is_quasisymmetric(p: &ExtPolynomial) -> bool {
    (1..p.n()).all(|i| pi(i, p).map(|q| &q == p).unwrap_or(false))
}

/// `a_{r,s}`: zero when `r` and `s` are both odd, else `C(⌊(r+s)/2⌋, ⌊r/2⌋)`.
pub fn product_coefficient(r: usize, s: usize) -> BigInt {
    if r % 2 == 1 && s % 2 == 1 {
        return BigInt::zero();
    }
    binomial_big(((r + s) / 2) as u64, (r / 2) as u64)
}

/// The signed sum `Σ_{A ⊆ [r+s], |A| = r} (-1)^{#{b < a : a ∈ A, b ∉ A}}`,
/// evaluated by enumerating every `A`.
pub fn product_coefficient_bruteforce(r: usize, s: usize) -> Result<i64> {
    let total = r + s;
    if total > BRUTE_FORCE_CAP {
        return Err(Error::CapExceeded { n: total, cap: BRUTE_FORCE_CAP });
    }
    let mut sum = 0i64;
    for a in subsets_of_size(total, r) {
        let mut inversions = 0u32;
        for pos_a in 0..total {
            if a >> pos_a & 1 == 0 {
                continue;
            }
            for pos_b in 0..pos_a {
                if a >> pos_b & 1 == 0 {
                    inversions += 1;
                }
            }
        }
        sum += if inversions.is_multiple_of(2) { 1 } else { -1 };
    }
    Ok(sum)
}

/// Coefficients `c(r, s)` of `(1 + x + y) / (1 - x² - y²)` for `r + s <= max_degree`,
/// via `c(r, s) = [numerator](r, s) + c(r-2, s) + c(r, s-2)`. Row `r` holds
/// `c(r, 0..=max_degree - r)`.
pub fn generating_series_coefficients(max_degree: usize) -> Vec<Vec<BigInt>> {
    let mut table: Vec<Vec<BigInt>> = Vec::with_capacity(max_degree + 1);
    for r in 0..=max_degree {
        let mut row = Vec::with_capacity(max_degree - r + 1);
        for s in 0..=max_degree - r {
            let mut c = match (r, s) {
                (0, 0) | (1, 0) | (0, 1) => BigInt::one(),
                _ => BigInt::zero(),
            };
            if r >= 2 {
                c += &table[r - 2][s];
            }
            if s >= 2 {
                c += &row[s - 2];
            }
            row.push(c);
        }
        table.push(row);
    }
    table
}
