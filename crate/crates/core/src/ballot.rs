//! Binary sequences, the ballot condition, and non-crossing pairings.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::combinat::{binomial, ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::monomial::{lex_cmp_bits, low_mask, Monomial, MAX_VARS};

/// `α = a_1 a_2 ... a_n ∈ {0,1}^n`, with `a_i` stored in bit `i - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BinarySeq {
    len: usize,
    bits: u64,
}

impl BinarySeq {
    pub fn from_bits(len: usize, bits: u64) -> Result<BinarySeq> {
        if len > MAX_VARS {
            return Err(Error::CapExceeded { n: len, cap: MAX_VARS });
        }
        if bits & !low_mask(len) != 0 {
            return Err(Error::Precondition(format!("bits {bits:#b} do not fit in length {len}")));
        }
        Ok(BinarySeq { len, bits })
    }

    pub fn zeros(len: usize) -> Result<BinarySeq> {
        BinarySeq::from_bits(len, 0)
    }

    pub fn from_digits(digits: &[u8]) -> Result<BinarySeq> {
        let mut bits = 0u64;
        for (k, &d) in digits.iter().enumerate() {
            match d {
                0 => {}
                1 if k < 64 => bits |= 1 << k,
                _ => return Err(Error::Precondition(format!("digit {d} is not binary"))),
            }
        }
        BinarySeq::from_bits(digits.len(), bits)
    }

    /// The exponent string `α(A)` of a monomial.
    pub fn from_monomial(m: &Monomial) -> BinarySeq {
        BinarySeq { len: m.n(), bits: m.bits() }
    }

    /// `θ^α`.
    pub fn to_monomial(&self) -> Monomial {
        Monomial::from_bits(self.len, self.bits).expect("length checked at construction")
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// `a_i`, 1-based.
    pub fn get(&self, i: usize) -> bool {
        i >= 1 && i <= self.len && self.bits >> (i - 1) & 1 == 1
    }

    /// `m_1(α)`, the number of ones.
    pub fn ones(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn one_positions(&self) -> impl Iterator<Item = usize> {
        self.to_monomial().indices().collect::<Vec<_>>().into_iter()
    }

    pub fn last_one(&self) -> Option<usize> {
        (self.bits != 0).then(|| 64 - self.bits.leading_zeros() as usize)
    }

    /// Positions `r` at which `Σ_{i<=r} a_i > r/2`.
    pub fn break_positions(&self) -> Vec<usize> {
        let mut prefix = 0usize;
        let mut out = Vec::new();
        for r in 1..=self.len {
            if self.get(r) {
                prefix += 1;
            }
            if 2 * prefix > r {
                out.push(r);
            }
        }
        out
    }

    pub fn first_break(&self) -> Option<usize> {
        let mut prefix = 0usize;
        for r in 1..=self.len {
            if self.get(r) {
                prefix += 1;
            }
            if 2 * prefix > r {
                return Some(r);
            }
        }
        None
    }

    pub fn is_ballot(&self) -> bool {
        self.first_break().is_none()
    }

    /// Whether the break positions are exactly `{position of the last 1}`.
    pub fn breaks_only_at_rightmost_one(&self) -> Result<bool> {
        let last = self
            .last_one()
            .ok_or_else(|| Error::Precondition("sequence has no 1".into()))?;
        Ok(self.break_positions() == [last])
    }
}

impl PartialOrd for BinarySeq {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the strings, `0 < 1`.
impl Ord for BinarySeq {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_cmp_bits(self.bits, other.bits).then(self.len.cmp(&other.len))
    }
}

impl fmt::Display for BinarySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BinarySeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<BinarySeq> {
        let mut digits = Vec::with_capacity(s.len());
        for (pos, ch) in s.trim().char_indices() {
            match ch {
                '0' => digits.push(0),
                '1' => digits.push(1),
                _ => return Err(Error::Parse { pos, msg: format!("{ch:?} is not a binary digit") }),
            }
        }
        BinarySeq::from_digits(&digits)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqFilter {
    All,
    Ballot,
    NonBallot,
    /// Non-ballot sequences that break only at their rightmost 1.
    MinimalGb,
}

impl SeqFilter {
    pub fn accepts(&self, alpha: &BinarySeq) -> bool {
        match self {
            SeqFilter::All => true,
            SeqFilter::Ballot => alpha.is_ballot(),
            SeqFilter::NonBallot => !alpha.is_ballot(),
            SeqFilter::MinimalGb => alpha.breaks_only_at_rightmost_one().unwrap_or(false),
        }
    }
}

/// Every sequence of length `n` accepted by `filter`, in increasing lex order.
pub fn enumerate(n: usize, filter: SeqFilter) -> Result<Vec<BinarySeq>> {
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded { n, cap: ENUMERATION_CAP });
    }
    let mut out = Vec::new();
    for v in 0u64..1 << n {
        // v read as a binary numeral with a_1 as its top digit
        let bits = if n == 0 { 0 } else { v.reverse_bits() >> (64 - n) };
        let alpha = BinarySeq { len: n, bits };
        if filter.accepts(&alpha) {
            out.push(alpha);
        }
    }
    Ok(out)
}

/// Number of ballot sequences of length `n` with `k` ones, for `k = 0..=n/2`,
/// by enumeration.
pub fn ballot_counts_by_ones(n: usize) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; n / 2 + 1];
    for alpha in enumerate(n, SeqFilter::Ballot)? {
        counts[alpha.ones()] += 1;
    }
    Ok(counts)
}

/// `f^{(n-k,k)} = C(n, k) - C(n, k-1)`, the number of standard tableaux of
/// two-row shape `(n-k, k)`.
pub fn f_shape(n: usize, k: usize) -> Result<u64> {
    if k > n / 2 {
        return Err(Error::Precondition(format!("k = {k} exceeds floor({n}/2)")));
    }
    let total = binomial(n as u64, k as u64).ok_or(Error::CapExceeded { n, cap: MAX_VARS })?;
    let below = if k == 0 { 0 } else { binomial(n as u64, k as u64 - 1).unwrap_or(u64::MAX) };
    Ok(total - below)
}

/// A list of pairs `(i_r, j_r)` with `i_r < j_r`, any two pairs nested or
/// disjoint, and `j_1 < j_2 < ... < j_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NonCrossingPairing {
    pairs: Vec<(usize, usize)>,
}

/// Checks the pairwise condition `i_r < j_r < i_s < j_s` or
/// `i_s < i_r < j_r < j_s` for every `r < s`, with `1 <= i_r < j_r`.
pub fn is_noncrossing(pairs: &[(usize, usize)]) -> bool {
    if pairs.iter().any(|&(i, j)| i == 0 || i >= j) {
        return false;
    }
    for (r, &(ir, jr)) in pairs.iter().enumerate() {
        for &(is, js) in &pairs[r + 1..] {
            let disjoint = ir < jr && jr < is && is < js;
            let nested = is < ir && ir < jr && jr < js;
            if !(disjoint || nested) {
                return false;
            }
        }
    }
    true
}

impl NonCrossingPairing {
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<NonCrossingPairing> {
        if !is_noncrossing(&pairs) {
            return Err(Error::Precondition(format!("{pairs:?} is not a non-crossing pairing")));
        }
        Ok(NonCrossingPairing { pairs })
    }

    pub fn empty() -> NonCrossingPairing {
        NonCrossingPairing { pairs: Vec::new() }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn max_index(&self) -> usize {
        self.pairs.last().map_or(0, |&(_, j)| j)
    }
}

impl fmt::Display for NonCrossingPairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, (i, j)) in self.pairs.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "({i},{j})")?;
        }
        write!(f, ")")
    }
}

/// `C(α)`: read `0` as `(` and `1` as `)`, match each `)` with the nearest
/// unmatched `(` to its left. Pairs come out ordered by closing position.
pub fn pairing_from_ballot(alpha: &BinarySeq) -> Result<NonCrossingPairing> {
    if !alpha.is_ballot() {
        return Err(Error::Precondition(format!("{alpha} is not a ballot sequence")));
    }
    let mut open = Vec::new();
    let mut pairs = Vec::with_capacity(alpha.ones());
    for pos in 1..=alpha.len() {
        if alpha.get(pos) {
            let i = open.pop().expect("ballot prefixes never run out of '('");
            pairs.push((i, pos));
        } else {
            open.push(pos);
        }
    }
    Ok(NonCrossingPairing { pairs })
}

/// All non-crossing pairings with indices in `[n]` (unpaired points allowed).
pub fn noncrossing_pairings(n: usize) -> Result<Vec<NonCrossingPairing>> {
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded { n, cap: ENUMERATION_CAP });
    }
    fn walk(
        pos: usize,
        n: usize,
        open: &mut Vec<usize>,
        pairs: &mut Vec<(usize, usize)>,
        out: &mut Vec<NonCrossingPairing>,
    ) {
        if pos > n {
            if open.is_empty() {
                out.push(NonCrossingPairing { pairs: pairs.clone() });
            }
            return;
        }
        if open.len() > n - pos + 1 {
            return;
        }
        walk(pos + 1, n, open, pairs, out);
        open.push(pos);
        walk(pos + 1, n, open, pairs, out);
        open.pop();
        if let Some(i) = open.pop() {
            pairs.push((i, pos));
            walk(pos + 1, n, open, pairs, out);
            pairs.pop();
            open.push(i);
        }
    }
    let mut out = Vec::new();
    walk(1, n, &mut Vec::new(), &mut Vec::new(), &mut out);
    Ok(out)
}
