//! Sparse elements of `R_n = Q[θ_1, ..., θ_n]` with exact rational coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{check_same_n, Error, Result};
use crate::monomial::{check_n, low_mask, Monomial, Sign};
use crate::Rational;

/// Monomial product kernel used by [`ExtPolynomial::mul_with`].
pub type MonomialProduct = fn(&Monomial, &Monomial) -> Option<(Sign, Monomial)>;

/// A polynomial in anticommuting variables, kept in canonical sparse form:
/// no stored coefficient is zero, so structural equality is ring equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtPolynomial {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

fn add_term(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn signed(sign: Sign, c: Rational) -> Rational {
    match sign {
        Sign::Plus => c,
        Sign::Minus => -c,
    }
}

impl ExtPolynomial {
    pub fn zero(n: usize) -> Result<ExtPolynomial> {
        check_n(n)?;
        Ok(ExtPolynomial { n, terms: BTreeMap::new() })
    }

    pub fn one(n: usize) -> Result<ExtPolynomial> {
        ExtPolynomial::constant(n, Rational::one())
    }

    pub fn constant(n: usize, c: Rational) -> Result<ExtPolynomial> {
        Ok(ExtPolynomial::from_monomial(Monomial::one(n)?, c))
    }

    pub fn var(n: usize, i: usize) -> Result<ExtPolynomial> {
        Ok(ExtPolynomial::from_monomial(Monomial::var(n, i)?, Rational::one()))
    }

    pub fn from_monomial(m: Monomial, c: Rational) -> ExtPolynomial {
        let mut terms = BTreeMap::new();
        add_term(&mut terms, m, c);
        ExtPolynomial { n: m.n(), terms }
    }

    /// Sums the given terms; coefficients of repeated monomials are combined.
    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Result<ExtPolynomial> {
        let mut p = ExtPolynomial::zero(n)?;
        for (m, c) in terms {
            check_same_n(n, m.n())?;
            add_term(&mut p.terms, m, c);
        }
        Ok(p)
    }

    /// Builds from `(subset, integer coefficient)` pairs, a convenience for
    /// fixtures and generated data.
    pub fn from_int_terms<'a>(
        n: usize,
        terms: impl IntoIterator<Item = (&'a [usize], i64)>,
    ) -> Result<ExtPolynomial> {
        let mut out = Vec::new();
        for (subset, c) in terms {
            out.push((Monomial::new(n, subset.iter().copied())?, Rational::from_integer(c.into())));
        }
        ExtPolynomial::from_terms(n, out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl DoubleEndedIterator<Item = &Monomial> + '_ {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::from_bits_unchecked(self.n, 0))
    }

    /// Lex-largest term.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last_key_value()
    }

    /// Lex-smallest term.
    pub fn trailing_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.first_key_value()
    }

    /// `Some(k)` if every term has degree `k`; the zero polynomial has no degree.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn homogeneous_part(&self, k: usize) -> ExtPolynomial {
        ExtPolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == k)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &ExtPolynomial) -> Result<ExtPolynomial> {
        check_same_n(self.n, other.n)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            add_term(&mut out.terms, *m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ExtPolynomial) -> Result<ExtPolynomial> {
        check_same_n(self.n, other.n)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            add_term(&mut out.terms, *m, -c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> ExtPolynomial {
        if c.is_zero() {
            return ExtPolynomial { n: self.n, terms: BTreeMap::new() };
        }
        ExtPolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// `self + c * other`, in place.
    pub fn add_scaled(&mut self, c: &Rational, other: &ExtPolynomial) -> Result<()> {
        check_same_n(self.n, other.n)?;
        if c.is_zero() {
            return Ok(());
        }
        for (m, a) in &other.terms {
            add_term(&mut self.terms, *m, a * c);
        }
        Ok(())
    }

    pub fn mul(&self, other: &ExtPolynomial) -> Result<ExtPolynomial> {
        self.mul_with(other, |a, b| a.mul_unchecked(b))
    }

    /// Bilinear extension of an arbitrary monomial product. [`ExtPolynomial::mul`]
    /// uses the signed exterior product; verification code can swap in others.
    pub fn mul_with(&self, other: &ExtPolynomial, kernel: MonomialProduct) -> Result<ExtPolynomial> {
        check_same_n(self.n, other.n)?;
        let mut terms = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((sign, m)) = kernel(a, b) {
                    add_term(&mut terms, m, signed(sign, ca * cb));
                }
            }
        }
        Ok(ExtPolynomial { n: self.n, terms })
    }

    /// `θ_A · self` for a single monomial on the left.
    pub fn left_mul_monomial(&self, a: &Monomial) -> Result<ExtPolynomial> {
        check_same_n(self.n, a.n())?;
        let mut terms = BTreeMap::new();
        for (b, c) in &self.terms {
            if let Some((sign, m)) = a.mul_unchecked(b) {
                add_term(&mut terms, m, signed(sign, c.clone()));
            }
        }
        Ok(ExtPolynomial { n: self.n, terms })
    }

    /// Left derivative `∂_{θ_i}`: `θ_A ↦ (-1)^{#{j ∈ A : j < i}} θ_{A \ {i}}`.
    pub fn partial(&self, i: usize) -> Result<ExtPolynomial> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        let bit = 1u64 << (i - 1);
        let below = bit - 1;
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.bits() & bit == 0 {
                continue;
            }
            let sign = Sign::from_parity((m.bits() & below).count_ones());
            let rest = Monomial::from_bits_unchecked(self.n, m.bits() & !bit);
            add_term(&mut terms, rest, signed(sign, c.clone()));
        }
        Ok(ExtPolynomial { n: self.n, terms })
    }

    /// Reverses the variable order of every monomial: a degree-`r` term picks
    /// up `(-1)^{r(r-1)/2}`.
    pub fn bar(&self) -> ExtPolynomial {
        ExtPolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let r = m.degree() as u32;
                    let sign = Sign::from_parity(r * r.saturating_sub(1) / 2);
                    (*m, signed(sign, c.clone()))
                })
                .collect(),
        }
    }

    /// `bar(p)(∂_{θ_1}, ..., ∂_{θ_n})` applied to `q`. For `θ_A` with
    /// `A = {a_1 < ... < a_r}` the reversed operator is `∂_{a_r} ... ∂_{a_1}`,
    /// so `∂_{a_1}` acts on `q` first.
    pub fn apply_operator(p: &ExtPolynomial, q: &ExtPolynomial) -> Result<ExtPolynomial> {
        check_same_n(p.n, q.n)?;
        let mut out = ExtPolynomial::zero(p.n)?;
        for (m, c) in &p.terms {
            let mut image = q.clone();
            for i in m.indices() {
                if image.is_zero() {
                    break;
                }
                image = image.partial(i)?;
            }
            out.add_scaled(c, &image)?;
        }
        Ok(out)
    }

    /// `⟨p, q⟩`: constant term of [`ExtPolynomial::apply_operator`].
    pub fn inner_product(p: &ExtPolynomial, q: &ExtPolynomial) -> Result<Rational> {
        Ok(ExtPolynomial::apply_operator(p, q)?.constant_term())
    }

    /// `Σ_A p_A q_A`, the inner product read off in the orthonormal monomial basis.
    pub fn coefficient_dot(p: &ExtPolynomial, q: &ExtPolynomial) -> Result<Rational> {
        check_same_n(p.n, q.n)?;
        let (small, large) = if p.len() <= q.len() { (p, q) } else { (q, p) };
        Ok(small
            .terms
            .iter()
            .filter_map(|(m, c)| large.terms.get(m).map(|d| c * d))
            .fold(Rational::zero(), |acc, x| acc + x))
    }

    /// The same polynomial viewed in `R_m`, `m >= n`.
    pub fn embed(&self, m: usize) -> Result<ExtPolynomial> {
        if m < self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: m });
        }
        ExtPolynomial::from_terms(m, self.terms.iter().map(|(mo, c)| (mo.embed(m).unwrap(), c.clone())))
    }

    /// Substitution `θ_i := θ_{i+by}` into `R_m`.
    pub fn shift(&self, by: usize, m: usize) -> Result<ExtPolynomial> {
        check_n(m)?;
        let mut terms = BTreeMap::new();
        for (mo, c) in &self.terms {
            terms.insert(mo.shift(by, m)?, c.clone());
        }
        Ok(ExtPolynomial { n: m, terms })
    }

    /// Whether only variables with index in `lo..=hi` occur.
    pub fn uses_only_vars(&self, lo: usize, hi: usize) -> bool {
        let allowed = if lo > hi || lo == 0 {
            0
        } else {
            low_mask(hi) & !low_mask(lo - 1)
        };
        self.terms.keys().all(|m| m.bits() & !allowed == 0)
    }
}

impl Add for &ExtPolynomial {
    type Output = ExtPolynomial;

    /// Panics on an ambient dimension mismatch; use [`ExtPolynomial::add`] to handle it.
    fn add(self, rhs: &ExtPolynomial) -> ExtPolynomial {
        ExtPolynomial::add(self, rhs).expect("ambient dimensions differ")
    }
}

impl Sub for &ExtPolynomial {
    type Output = ExtPolynomial;

    fn sub(self, rhs: &ExtPolynomial) -> ExtPolynomial {
        ExtPolynomial::sub(self, rhs).expect("ambient dimensions differ")
    }
}

impl Mul for &ExtPolynomial {
    type Output = ExtPolynomial;

    fn mul(self, rhs: &ExtPolynomial) -> ExtPolynomial {
        ExtPolynomial::mul(self, rhs).expect("ambient dimensions differ")
    }
}

impl Neg for &ExtPolynomial {
    type Output = ExtPolynomial;

    fn neg(self) -> ExtPolynomial {
        ExtPolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

/// Text form in the shared grammar, terms in decreasing lex order,
/// e.g. `3/2*t1*t3 - t2`.
impl fmt::Display for ExtPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64) -> Rational {
        Rational::from_integer(a.into())
    }

    fn poly(n: usize, terms: &[(&[usize], i64)]) -> ExtPolynomial {
        ExtPolynomial::from_int_terms(n, terms.iter().map(|(s, c)| (*s, *c))).unwrap()
    }

    #[test]
    fn f1_squared_is_zero() {
        let f1 = poly(2, &[(&[1], 1), (&[2], 1)]);
        assert!((&f1 * &f1).is_zero());
    }

    #[test]
    fn one_is_identity() {
        let p = poly(3, &[(&[1, 3], 2), (&[2], -1), (&[], 5)]);
        let one = ExtPolynomial::one(3).unwrap();
        assert_eq!(&one * &p, p);
        assert_eq!(&p * &one, p);
    }

    #[test]
    fn repeated_variable_products_vanish() {
        let a = poly(2, &[(&[1], 1), (&[2], 1)]);
        let b = poly(2, &[(&[1, 2], 1)]);
        assert!((&a * &b).is_zero());
    }

    #[test]
    fn add_and_scale() {
        let t1 = poly(2, &[(&[1], 1)]);
        let t2 = poly(2, &[(&[2], 1)]);
        assert!((&t1 + &(-&t1)).is_zero());
        assert!(t1.scale(&q(0)).is_zero());
        assert_eq!(&t1 + &t2, poly(2, &[(&[1], 1), (&[2], 1)]));
        assert!(t1.add(&ExtPolynomial::zero(3).unwrap()).is_err());
        assert!(t1.mul(&ExtPolynomial::zero(3).unwrap()).is_err());
    }

    #[test]
    fn partial_examples() {
        assert_eq!(poly(2, &[(&[1, 2], 1)]).partial(2).unwrap(), poly(2, &[(&[1], -1)]));
        assert!(poly(2, &[(&[2], 1)]).partial(1).unwrap().is_zero());
        assert_eq!(poly(3, &[(&[1, 2, 3], 1)]).partial(1).unwrap(), poly(3, &[(&[2, 3], 1)]));
        assert_eq!(
            poly(3, &[(&[1], 1)]).partial(4),
            Err(Error::IndexOutOfRange { index: 4, n: 3 })
        );
        assert!(poly(3, &[(&[1], 1)]).partial(0).is_err());
    }

    #[test]
    fn bar_examples() {
        assert_eq!(poly(2, &[(&[1, 2], 1)]).bar(), poly(2, &[(&[1, 2], -1)]));
        assert_eq!(poly(2, &[(&[1], 1)]).bar(), poly(2, &[(&[1], 1)]));
        assert_eq!(poly(3, &[(&[1, 2, 3], 1)]).bar(), poly(3, &[(&[1, 2, 3], -1)]));
        assert_eq!(poly(4, &[(&[1, 2, 3, 4], 1)]).bar(), poly(4, &[(&[1, 2, 3, 4], 1)]));
    }

    #[test]
    fn apply_operator_examples() {
        let one = ExtPolynomial::one(2).unwrap();
        let t1 = poly(2, &[(&[1], 1)]);
        let t2 = poly(2, &[(&[2], 1)]);
        let t12 = poly(2, &[(&[1, 2], 1)]);
        assert_eq!(ExtPolynomial::apply_operator(&t1, &t1).unwrap(), one);
        assert_eq!(ExtPolynomial::apply_operator(&t12, &t12).unwrap(), one);
        assert!(ExtPolynomial::apply_operator(&t2, &t1).unwrap().is_zero());
    }

    #[test]
    fn inner_product_examples() {
        let p = poly(2, &[(&[1], 1), (&[2], 2)]);
        let r = poly(2, &[(&[2], 3)]);
        assert_eq!(ExtPolynomial::inner_product(&p, &r).unwrap(), q(6));
        assert_eq!(ExtPolynomial::coefficient_dot(&p, &r).unwrap(), q(6));
        let zero = ExtPolynomial::zero(2).unwrap();
        assert_eq!(ExtPolynomial::inner_product(&p, &zero).unwrap(), q(0));
    }

    #[test]
    fn monomials_are_orthonormal() {
        let n = 4;
        for a in 0u64..16 {
            for b in 0u64..16 {
                let pa = ExtPolynomial::from_monomial(Monomial::from_bits(n, a).unwrap(), q(1));
                let pb = ExtPolynomial::from_monomial(Monomial::from_bits(n, b).unwrap(), q(1));
                let expected = if a == b { q(1) } else { q(0) };
                assert_eq!(ExtPolynomial::inner_product(&pa, &pb).unwrap(), expected);
            }
        }
    }

    #[test]
    fn display_grammar() {
        let p = ExtPolynomial::from_terms(
            3,
            [
                (Monomial::new(3, [1, 3]).unwrap(), Rational::new(3.into(), 2.into())),
                (Monomial::new(3, [2]).unwrap(), q(-1)),
            ],
        )
        .unwrap();
        assert_eq!(p.to_string(), "3/2*t1*t3 - t2");
        assert_eq!(ExtPolynomial::zero(2).unwrap().to_string(), "0");
        assert_eq!(poly(2, &[(&[], -2), (&[2], 1)]).to_string(), "t2 - 2");
    }

    #[test]
    fn shift_and_vars() {
        let p = poly(2, &[(&[1, 2], 1), (&[1], 3)]);
        let s = p.shift(1, 3).unwrap();
        assert_eq!(s, poly(3, &[(&[2, 3], 1), (&[2], 3)]));
        assert!(s.uses_only_vars(2, 3));
        assert!(!p.uses_only_vars(2, 2));
        assert!(p.shift(2, 3).is_err());
    }
}
