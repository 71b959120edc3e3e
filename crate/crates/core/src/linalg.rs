//! Exact rational linear algebra over coefficient vectors of polynomials.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::monomial::Monomial;
use crate::polynomial::ExtPolynomial;
use crate::Rational;

/// Incremental row-echelon basis over sparse rational rows indexed by
/// monomials. Each stored row is scaled so its pivot (its lex-largest
/// monomial) has coefficient one.
#[derive(Debug, Default, Clone)]
pub struct Echelon {
    pivots: BTreeMap<Monomial, ExtPolynomial>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the stored rows; the result is zero iff `v` lies in
    /// their span.
    pub fn reduce(&self, v: &ExtPolynomial) -> ExtPolynomial {
        let mut work = v.clone();
        // Walk the work polynomial from the top, skipping monomials with no pivot.
        let mut bound: Option<Monomial> = None;
        loop {
            let next = match bound {
                None => work.terms().next_back().map(|(m, c)| (*m, c.clone())),
                Some(b) => work.terms().rev().find(|(m, _)| **m < b).map(|(m, c)| (*m, c.clone())),
            };
            let Some((m, c)) = next else { break };
            if let Some(row) = self.pivots.get(&m) {
                work.add_scaled(&-c, row).expect("rows share the ambient n");
            }
            bound = Some(m);
        }
        work
    }

    /// Adds `v`; returns whether it was independent of the stored rows.
    pub fn insert(&mut self, v: &ExtPolynomial) -> bool {
        let r = self.reduce(v);
        match r.leading_term() {
            None => false,
            Some((m, c)) => {
                let m = *m;
                let inv = Rational::one() / c;
                self.pivots.insert(m, r.scale(&inv));
                true
            }
        }
    }

    pub fn contains(&self, v: &ExtPolynomial) -> bool {
        self.reduce(v).is_zero()
    }
}

/// Rank of a family of polynomials viewed as coefficient vectors.
pub fn rank<'a>(vectors: impl IntoIterator<Item = &'a ExtPolynomial>) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Dense matrix with exact rational entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    /// Reduced row-echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = Rational::one() / self.get(row, col);
            for c in col..self.cols {
                let v = self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in col..self.cols {
                    let v = self.get(r, c) - &factor * self.get(row, c);
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{x : Mx = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![Rational::zero(); self.cols];
            x[free] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = -m.get(r, free).clone();
            }
            basis.push(x);
        }
        basis
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        (0..self.rows)
            .map(|r| {
                (0..self.cols).fold(Rational::zero(), |acc, c| acc + self.get(r, c) * &x[c])
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn q(a: i64) -> Rational {
        Rational::from_integer(a.into())
    }

    #[test]
    fn echelon_detects_dependence() {
        let a = parse_poly(3, "t1 + t2").unwrap();
        let b = parse_poly(3, "t2 - t3").unwrap();
        let c = parse_poly(3, "t1 + 2*t2 - t3").unwrap();
        let mut e = Echelon::new();
        assert!(e.insert(&a));
        assert!(e.insert(&b));
        assert!(!e.insert(&c));
        assert!(e.contains(&parse_poly(3, "2*t1 + 2*t3").unwrap()));
        assert!(!e.contains(&parse_poly(3, "t3").unwrap()));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn reduce_skips_non_pivot_terms() {
        // t1 has no pivot but a lower term does
        let mut e = Echelon::new();
        e.insert(&parse_poly(3, "t2 + t3").unwrap());
        let r = e.reduce(&parse_poly(3, "t1 + t2").unwrap());
        assert_eq!(r, parse_poly(3, "t1 - t3").unwrap());
    }

    #[test]
    fn dense_kernel() {
        // x + y + z = 0, y - z = 0
        let mut m = Matrix::zeros(2, 3);
        for (r, c, v) in [(0, 0, 1), (0, 1, 1), (0, 2, 1), (1, 1, 1), (1, 2, -1)] {
            m.set(r, c, q(v));
        }
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(|v| v.is_zero()));
        assert_eq!(m.rank(), 2);
        assert_eq!(Matrix::zeros(3, 4).kernel().len(), 4);
    }
}
