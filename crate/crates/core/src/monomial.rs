//! Squarefree monomials `θ_A` of the exterior algebra, stored as a bitset.
//!
//! Variable `θ_i` (1-based) lives in bit `i - 1`. The ambient variable count
//! is capped at [`MAX_VARS`], one machine word.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{check_same_n, Error, Result};

/// Largest supported number of anticommuting variables.
pub const MAX_VARS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^count`.
    pub fn from_parity(count: u32) -> Sign {
        if count.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// The monomial `θ_A = θ_{a_1} θ_{a_2} ... θ_{a_r}` with `a_1 < ... < a_r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    n: usize,
    bits: u64,
}

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n > MAX_VARS {
        Err(Error::CapExceeded { n, cap: MAX_VARS })
    } else {
        Ok(())
    }
}

/// Mask with the low `n` bits set.
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Monomial {
    /// The empty monomial `1` of `R_n`.
    pub fn one(n: usize) -> Result<Monomial> {
        check_n(n)?;
        Ok(Monomial { n, bits: 0 })
    }

    pub fn var(n: usize, i: usize) -> Result<Monomial> {
        Monomial::new(n, [i])
    }

    /// Builds `θ_A` from 1-based indices. Duplicates are rejected since the
    /// corresponding product vanishes; use [`Monomial::mul`] for products.
    pub fn new(n: usize, indices: impl IntoIterator<Item = usize>) -> Result<Monomial> {
        check_n(n)?;
        let mut bits = 0u64;
        for i in indices {
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            let bit = 1u64 << (i - 1);
            if bits & bit != 0 {
                return Err(Error::Precondition(format!("repeated variable t{i} in a subset")));
            }
            bits |= bit;
        }
        Ok(Monomial { n, bits })
    }

    pub fn from_bits(n: usize, bits: u64) -> Result<Monomial> {
        check_n(n)?;
        if bits & !low_mask(n) != 0 {
            let index = 64 - bits.leading_zeros() as usize;
            return Err(Error::IndexOutOfRange { index, n });
        }
        Ok(Monomial { n, bits })
    }

    pub(crate) fn from_bits_unchecked(n: usize, bits: u64) -> Monomial {
        debug_assert!(n <= MAX_VARS && bits & !low_mask(n) == 0);
        Monomial { n, bits }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn degree(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_one(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i <= self.n && self.bits & (1u64 << (i - 1)) != 0
    }

    /// Support in increasing order.
    pub fn indices(&self) -> impl Iterator<Item = usize> {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(tz + 1)
            }
        })
    }

    /// Whether `self` divides `other`, i.e. its support is a subset.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.n == other.n && self.bits & !other.bits == 0
    }

    /// `θ_A θ_B`. Returns `None` when the supports intersect; otherwise the
    /// sign `(-1)^{#{(x, y) : x ∈ A, y ∈ B, y < x}}` and `θ_{A ∪ B}`.
    pub fn mul(&self, other: &Monomial) -> Result<Option<(Sign, Monomial)>> {
        check_same_n(self.n, other.n)?;
        Ok(self.mul_unchecked(other))
    }

    #[inline]
    pub(crate) fn mul_unchecked(&self, other: &Monomial) -> Option<(Sign, Monomial)> {
        if self.bits & other.bits != 0 {
            return None;
        }
        let sign = Sign::from_parity(inversion_count(self.bits, other.bits));
        Some((sign, Monomial { n: self.n, bits: self.bits | other.bits }))
    }

    /// Lexicographic comparison of exponent strings, so `θ_1 > θ_2 > ... > θ_n`.
    pub fn lex_compare(&self, other: &Monomial) -> Result<Ordering> {
        check_same_n(self.n, other.n)?;
        Ok(lex_cmp_bits(self.bits, other.bits))
    }

    /// The same support viewed in `R_m` for `m >= n`.
    pub fn embed(&self, m: usize) -> Result<Monomial> {
        Monomial::from_bits(m, self.bits)
    }

    /// Support shifted up by `by` positions inside `R_m` (`θ_i ↦ θ_{i+by}`).
    pub fn shift(&self, by: usize, m: usize) -> Result<Monomial> {
        if self.n + by > m {
            return Err(Error::DimensionMismatch { left: self.n + by, right: m });
        }
        // n + by <= m <= 64, so by == 64 only happens for the empty support
        Monomial::from_bits(m, self.bits.checked_shl(by as u32).unwrap_or(0))
    }
}

/// Parity-relevant count of pairs `x ∈ a, y ∈ b` with `y < x`.
#[inline]
pub(crate) fn inversion_count(a: u64, b: u64) -> u32 {
    let mut count = 0;
    let mut rest = b;
    while rest != 0 {
        let y = rest.trailing_zeros();
        rest &= rest - 1;
        // elements of `a` strictly above position y
        let above = if y >= 63 { 0 } else { a >> (y + 1) };
        count += above.count_ones();
    }
    count
}

/// Bit 0 (`θ_1`) is the most significant position for the lex order.
#[inline]
pub(crate) fn lex_cmp_bits(a: u64, b: u64) -> Ordering {
    a.reverse_bits().cmp(&b.reverse_bits())
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lex order on exponent strings; ties across different ambient `n` are
/// broken by `n` so that the order stays consistent with `Eq`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_cmp_bits(self.bits, other.bits).then(self.n.cmp(&other.n))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits == 0 {
            return write!(f, "1");
        }
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "t{i}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: usize, idx: &[usize]) -> Monomial {
        Monomial::new(n, idx.iter().copied()).unwrap()
    }

    #[test]
    fn square_vanishes() {
        assert_eq!(m(3, &[1]).mul(&m(3, &[1])).unwrap(), None);
    }

    #[test]
    fn single_transposition() {
        assert_eq!(m(3, &[1, 3]).mul(&m(3, &[2])).unwrap(), Some((Sign::Minus, m(3, &[1, 2, 3]))));
        assert_eq!(m(2, &[2]).mul(&m(2, &[1])).unwrap(), Some((Sign::Minus, m(2, &[1, 2]))));
        assert_eq!(m(2, &[1]).mul(&m(2, &[2])).unwrap(), Some((Sign::Plus, m(2, &[1, 2]))));
    }

    #[test]
    fn mismatched_ambient() {
        assert_eq!(
            m(2, &[1]).mul(&m(3, &[2])),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
        assert!(m(2, &[1]).lex_compare(&m(3, &[1])).is_err());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Monomial::new(3, [4]), Err(Error::IndexOutOfRange { index: 4, n: 3 }));
        assert_eq!(Monomial::new(3, [0]), Err(Error::IndexOutOfRange { index: 0, n: 3 }));
        assert!(Monomial::new(3, [2, 2]).is_err());
        assert_eq!(Monomial::one(65), Err(Error::CapExceeded { n: 65, cap: 64 }));
        assert!(Monomial::from_bits(2, 0b100).is_err());
    }

    #[test]
    fn lex_examples() {
        assert_eq!(m(4, &[1]).lex_compare(&m(4, &[2])).unwrap(), Ordering::Greater);
        assert_eq!(m(4, &[2]).lex_compare(&m(4, &[2, 3])).unwrap(), Ordering::Less);
        assert!(m(4, &[1]) > m(4, &[2, 3, 4]));
        assert!(Monomial::one(4).unwrap() < m(4, &[4]));
    }

    #[test]
    fn word_sized_ambient() {
        let a = m(64, &[64]);
        let b = m(64, &[1]);
        assert_eq!(a.mul(&b).unwrap(), Some((Sign::Minus, m(64, &[1, 64]))));
        assert!(b > a);
    }

    #[test]
    fn inversion_count_matches_pair_enumeration() {
        for a in 0u64..64 {
            for b in 0u64..64 {
                if a & b != 0 {
                    continue;
                }
                let mut expected = 0;
                for x in 0..6 {
                    for y in 0..6 {
                        if a >> x & 1 == 1 && b >> y & 1 == 1 && y < x {
                            expected += 1;
                        }
                    }
                }
                assert_eq!(inversion_count(a, b), expected, "a={a:b} b={b:b}");
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(m(4, &[3, 1]).to_string(), "t1*t3");
        assert_eq!(Monomial::one(4).unwrap().to_string(), "1");
    }
}
