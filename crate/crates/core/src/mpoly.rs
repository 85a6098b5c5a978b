//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Degrees stay tiny here (at most n(k-1) in n <= 4 variables), so the
//! representation is a plain exponent-vector map with naive products.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::rat::pow_rat;

#[derive(Debug, Clone, PartialEq)]
pub struct MPoly {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<u32>, BigRational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut exp = vec![0; nvars];
        exp[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(exp, BigRational::one());
        p
    }

    /// Linear form c . y.
    pub fn linear(coeffs: &[BigRational]) -> Self {
        let nvars = coeffs.len();
        let mut p = Self::zero(nvars);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut exp = vec![0; nvars];
                exp[i] = 1;
                p.terms.insert(exp, c.clone());
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, exp: Vec<u32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
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

    pub fn add(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (exp, c) in &other.terms {
            out.insert(exp.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (exp, c) in &other.terms {
            out.insert(exp.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (exp, c) in &self.terms {
            out.terms.insert(exp.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert(exp, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        let mut out = MPoly::zero(self.nvars);
        for (exp, v) in &self.terms {
            out.terms.insert(exp.clone(), v * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::constant(self.nvars, BigRational::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (exp, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(exp) {
                if e > 0 {
                    term *= pow_rat(x, e);
                }
            }
            acc += term;
        }
        acc
    }

    /// Substitutes each variable by the given polynomial.
    pub fn compose(&self, subs: &[MPoly]) -> MPoly {
        assert_eq!(subs.len(), self.nvars);
        let nvars = subs.first().map_or(self.nvars, |p| p.nvars);
        let mut acc = MPoly::zero(nvars);
        for (exp, c) in &self.terms {
            let mut term = MPoly::constant(nvars, c.clone());
            for (sub, &e) in subs.iter().zip(exp) {
                if e > 0 {
                    term = term.mul(&sub.pow(e));
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Substitutes x -> M y (column convention: x_i = sum_j M[i][j] y_j).
    pub fn substitute_matrix(&self, m: &[Vec<BigRational>]) -> MPoly {
        let subs: Vec<MPoly> = m.iter().map(|row| MPoly::linear(row)).collect();
        self.compose(&subs)
    }

    pub fn coefficient(&self, exp: &[u32]) -> BigRational {
        self.terms.get(exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == degree)
    }
}

/// Determinant of a square matrix of polynomials by cofactor expansion.
pub fn poly_det(m: &[Vec<MPoly>]) -> MPoly {
    let n = m.len();
    let nvars = m[0][0].nvars;
    match n {
        0 => MPoly::constant(nvars, BigRational::one()),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = MPoly::zero(nvars);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<MPoly>> = (1..n)
                    .map(|r| (0..n).filter(|&c| c != j).map(|c| m[r][c].clone()).collect())
                    .collect();
                let term = m[0][j].mul(&poly_det(&minor));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    #[test]
    fn product_and_composition() {
        // (y1 + y2)^2 = y1^2 + 2 y1 y2 + y2^2
        let p = MPoly::linear(&[rat(1), rat(1)]).pow(2);
        assert_eq!(p.coefficient(&[2, 0]), rat(1));
        assert_eq!(p.coefficient(&[1, 1]), rat(2));
        assert_eq!(p.coefficient(&[0, 2]), rat(1));
        assert!(p.is_homogeneous(2));

        // substitute x1 -> y1, x2 -> y1 + y2 into x1*x2
        let q = MPoly::variable(2, 0).mul(&MPoly::variable(2, 1));
        let m = vec![vec![rat(1), rat(0)], vec![rat(1), rat(1)]];
        let s = q.substitute_matrix(&m);
        assert_eq!(s.coefficient(&[2, 0]), rat(1));
        assert_eq!(s.coefficient(&[1, 1]), rat(1));
    }

    #[test]
    fn evaluation_matches_expansion() {
        let p = MPoly::linear(&[ratio(1, 2), rat(-3)]).pow(3);
        let point = [ratio(2, 3), ratio(-1, 5)];
        let direct = pow_rat(&(ratio(1, 2) * ratio(2, 3) + rat(-3) * ratio(-1, 5)), 3);
        assert_eq!(p.eval(&point), direct);
    }

    #[test]
    fn determinant_of_linear_matrix() {
        // det [[x1, x2], [x2, x1]] = x1^2 - x2^2
        let x1 = MPoly::variable(2, 0);
        let x2 = MPoly::variable(2, 1);
        let d = poly_det(&[vec![x1.clone(), x2.clone()], vec![x2, x1]]);
        assert_eq!(d.coefficient(&[2, 0]), rat(1));
        assert_eq!(d.coefficient(&[0, 2]), rat(-1));
        assert_eq!(d.coefficient(&[1, 1]), rat(0));
    }
}
