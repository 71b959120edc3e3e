//! Small counting helpers shared across modules.

use num_bigint::BigInt;
use num_traits::One;

/// Largest `n` for which operations enumerate all `2^n` subsets or sequences.
pub const ENUMERATION_CAP: usize = 24;

/// `C(n, k)`; `None` on `u64` overflow. `C(n, k) = 0` for `k > n`.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact at every step: acc * (n - i) / (i + 1) == C(n, i + 1)
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return None;
        }
    }
    Some(acc as u64)
}

pub fn binomial_big(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// All `width`-bit words with exactly `k` bits set, in increasing numeric order.
pub fn subsets_of_size(width: usize, k: usize) -> impl Iterator<Item = u64> {
    debug_assert!(width <= 64);
    let limit: u128 = 1u128 << width;
    let mut next: Option<u64> = if k > width {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some(((1u128 << k) - 1) as u64)
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = u128::from(cur) + u128::from(c);
            let r_low = r as u64;
            let succ = (((r_low ^ cur) >> 2) / c) as u128 | r;
            (succ < limit).then_some(succ as u64)
        };
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), Some(6));
        assert_eq!(binomial(9, 4), Some(126));
        assert_eq!(binomial(3, 5), Some(0));
        assert_eq!(binomial(64, 32), Some(1832624140942590534));
        assert_eq!(binomial(200, 100), None);
        assert_eq!(binomial_big(64, 32), BigInt::from(1832624140942590534u64));
    }

    #[test]
    fn gosper_enumeration() {
        for width in 0..=10 {
            for k in 0..=width + 1 {
                let got: Vec<u64> = subsets_of_size(width, k).collect();
                let want: Vec<u64> =
                    (0u64..1 << width).filter(|b| b.count_ones() as usize == k).collect();
                assert_eq!(got, want, "width={width} k={k}");
            }
        }
        assert_eq!(subsets_of_size(64, 64).collect::<Vec<_>>(), vec![u64::MAX]);
        assert_eq!(subsets_of_size(64, 63).count(), 64);
    }
}
