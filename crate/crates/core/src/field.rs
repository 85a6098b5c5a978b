//! Exact arithmetic in a totally real number field Q[theta]/(f) with
//! certified real embeddings.
//!
//! Elements are rational coordinate vectors in the power basis
//! 1, theta, ..., theta^(n-1). Embeddings are evaluated through isolating
//! intervals of the real roots of f, ordered by descending root value, and
//! refined on demand; refinement always returns new values.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::interval::RatInterval;
use crate::linalg::{det, solve, RatMatrix};
use crate::rat::pow2_inv;

// ---------------------------------------------------------------------------
// Univariate polynomial helpers (little-endian rational coefficients)

fn poly_trim(p: &mut Vec<BigRational>) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn poly_deg(p: &[BigRational]) -> usize {
    p.len().saturating_sub(1)
}

fn poly_eval(p: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn poly_eval_interval(p: &[BigRational], x: &RatInterval) -> RatInterval {
    let mut acc = RatInterval::zero();
    for c in p.iter().rev() {
        acc = acc.mul(x).add(&RatInterval::point(c.clone()));
    }
    acc
}

fn poly_derivative(p: &[BigRational]) -> Vec<BigRational> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect()
}

/// Remainder of a by b (b nonzero).
fn poly_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = poly_deg(b);
    let lead = b[db].clone();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let factor = &r[dr] / &lead;
        for i in 0..=db {
            let sub = &factor * &b[i];
            r[dr - db + i] -= sub;
        }
        poly_trim(&mut r);
        if r.len() <= db {
            break;
        }
    }
    r
}

/// Exact division; returns None when the remainder is nonzero.
fn poly_div_exact(a: &[BigRational], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = poly_deg(b);
    if b.is_empty() {
        return None;
    }
    let lead = b[db].clone();
    let mut q = vec![BigRational::zero(); r.len().saturating_sub(db)];
    while r.len() > db {
        let dr = r.len() - 1;
        let factor = &r[dr] / &lead;
        q[dr - db] = factor.clone();
        for i in 0..=db {
            let sub = &factor * &b[i];
            r[dr - db + i] -= sub;
        }
        poly_trim(&mut r);
    }
    if r.is_empty() {
        poly_trim(&mut q);
        Some(q)
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// Sturm chains

struct SturmChain {
    chain: Vec<Vec<BigRational>>,
}

impl SturmChain {
    fn new(f: &[BigRational]) -> Self {
        let mut chain = vec![f.to_vec(), poly_derivative(f)];
        loop {
            let k = chain.len();
            let r = poly_rem(&chain[k - 2], &chain[k - 1]);
            if r.is_empty() {
                break;
            }
            chain.push(r.iter().map(|c| -c).collect());
        }
        SturmChain { chain }
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for p in &self.chain {
            let v = poly_eval(p, x);
            if v.is_zero() {
                continue;
            }
            let positive = v.is_positive();
            if let Some(prev) = last {
                if prev != positive {
                    count += 1;
                }
            }
            last = Some(positive);
        }
        count
    }

    /// Number of distinct real roots in the half-open interval (a, b].
    fn roots_in(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }
}

// ---------------------------------------------------------------------------
// Irreducibility over Q (Kronecker factor search; inputs are desk-sized)

fn is_irreducible(f: &[BigInt]) -> bool {
    let n = f.len() - 1;
    if n == 1 {
        return true;
    }
    let fq: Vec<BigRational> = f.iter().map(|c| BigRational::from_integer(c.clone())).collect();
    for d in 1..=n / 2 {
        if kronecker_factor_exists(&fq, d) {
            return false;
        }
    }
    true
}

/// Searches for a degree-d integer factor by interpolating through divisor
/// tuples of f(0), ..., f(d).
fn kronecker_factor_exists(f: &[BigRational], d: usize) -> bool {
    let points: Vec<BigRational> =
        (0..=d as i64).map(|x| BigRational::from_integer(BigInt::from(x))).collect();
    let values: Vec<BigRational> = points.iter().map(|x| poly_eval(f, x)).collect();
    if values.iter().any(|v| v.is_zero()) {
        // a sample point is a rational root
        return true;
    }
    let divisor_sets: Vec<Vec<BigInt>> = values
        .iter()
        .map(|v| signed_divisors(&v.to_integer()))
        .collect();
    let mut choice = vec![0usize; d + 1];
    loop {
        let targets: Vec<BigRational> = choice
            .iter()
            .enumerate()
            .map(|(i, &c)| BigRational::from_integer(divisor_sets[i][c].clone()))
            .collect();
        if let Some(g) = lagrange_interpolate(&points, &targets) {
            if poly_deg(&g) == d && poly_div_exact(f, &g).is_some() {
                return true;
            }
        }
        // advance the mixed-radix counter
        let mut i = 0;
        loop {
            choice[i] += 1;
            if choice[i] < divisor_sets[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
            if i > d {
                return false;
            }
        }
    }
}

fn signed_divisors(v: &BigInt) -> Vec<BigInt> {
    let a = v.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= a {
        if (&a % &d).is_zero() {
            let q = &a / &d;
            out.push(d.clone());
            out.push(-d.clone());
            if q != d {
                out.push(q.clone());
                out.push(-q);
            }
        }
        d += BigInt::one();
    }
    out
}

fn lagrange_interpolate(xs: &[BigRational], ys: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = xs.len();
    let mut acc = vec![BigRational::zero(); n];
    for i in 0..n {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * &xs[j];
            }
            basis = next;
            denom *= &xs[i] - &xs[j];
        }
        let scale = &ys[i] / denom;
        for (k, c) in basis.iter().enumerate() {
            acc[k] += c * &scale;
        }
    }
    poly_trim(&mut acc);
    if acc.is_empty() {
        None
    } else {
        Some(acc)
    }
}

// ---------------------------------------------------------------------------
// NumberField

/// A totally real number field Q[theta]/(f) with isolated real roots.
pub struct NumberField {
    /// Monic integer minimal polynomial, little-endian, length n+1.
    pub min_poly: Vec<BigInt>,
    pub degree: usize,
    /// Discriminant of f (equals d_F when O_F = Z[theta]).
    pub disc_f: BigInt,
    /// Isolating intervals for the n real roots, descending; each interval
    /// has f changing sign at its endpoints (or is exact for degree 1).
    pub roots: Vec<RatInterval>,
    /// Coordinates of theta^(n+t) for t = 0..n-2, used for reduction.
    reduction: Vec<Vec<BigRational>>,
    /// Power sums Tr(theta^j) for j = 0..2n-2.
    power_sums: Vec<BigRational>,
    /// min_poly with rational coefficients, for interval evaluation.
    min_poly_q: Vec<BigRational>,
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField(deg {}, f = {:?})", self.degree, self.min_poly)
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.min_poly == other.min_poly
    }
}

/// Builds the field from a monic integer polynomial, checking
/// irreducibility and total realness. Embeddings are ordered by
/// descending root value, so tau_1 is the largest root.
pub fn make_field(min_poly: &[i64]) -> Result<Arc<NumberField>> {
    NumberField::new(min_poly.iter().map(|&c| BigInt::from(c)).collect())
}

impl NumberField {
    pub fn new(min_poly: Vec<BigInt>) -> Result<Arc<NumberField>> {
        let mut min_poly = min_poly;
        while min_poly.last().map_or(false, |c| c.is_zero()) {
            min_poly.pop();
        }
        if min_poly.len() < 2 {
            return Err(Error::ZeroDegree);
        }
        if !min_poly.last().unwrap().is_one() {
            return Err(Error::NotMonic);
        }
        let n = min_poly.len() - 1;
        if !is_irreducible(&min_poly) {
            return Err(Error::NotIrreducible);
        }

        let min_poly_q: Vec<BigRational> =
            min_poly.iter().map(|c| BigRational::from_integer(c.clone())).collect();

        let roots = isolate_real_roots(&min_poly_q)?;
        if roots.len() != n {
            return Err(Error::NotTotallyReal { degree: n, real_roots: roots.len() });
        }

        // theta^(n+t) coordinates by repeated shift-and-reduce
        let top: Vec<BigRational> = (0..n).map(|i| -&min_poly_q[i]).collect();
        let mut reduction: Vec<Vec<BigRational>> = Vec::with_capacity(n.saturating_sub(1));
        let mut current = top.clone();
        for _ in 0..n.saturating_sub(1) {
            reduction.push(current.clone());
            // multiply by theta: shift, then fold the overflow coefficient
            let overflow = current[n - 1].clone();
            let mut next = vec![BigRational::zero(); n];
            for i in (1..n).rev() {
                next[i] = current[i - 1].clone();
            }
            for i in 0..n {
                next[i] += &overflow * &top[i];
            }
            current = next;
        }
        // the loop pushed t = 0..n-2; drop the first push duplicate issue:
        // reduction[t] holds theta^(n+t) as intended.

        let power_sums = newton_power_sums(&min_poly_q, 2 * n - 1);

        // disc(f) = det(Tr(theta^(i+j)))
        let gram: RatMatrix = (0..n)
            .map(|i| (0..n).map(|j| power_sums[i + j].clone()).collect())
            .collect();
        let disc = det(&gram);
        debug_assert!(disc.is_integer());
        let disc_f = disc.to_integer();

        Ok(Arc::new(NumberField {
            min_poly,
            degree: n,
            disc_f,
            roots,
            reduction,
            power_sums,
            min_poly_q,
        }))
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        FieldElement {
            field: Arc::clone(self),
            coords: vec![BigRational::zero(); self.degree],
        }
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.from_rational(BigRational::one())
    }

    pub fn from_rational(self: &Arc<Self>, c: BigRational) -> FieldElement {
        let mut coords = vec![BigRational::zero(); self.degree];
        coords[0] = c;
        FieldElement { field: Arc::clone(self), coords }
    }

    pub fn theta(self: &Arc<Self>) -> FieldElement {
        let mut coords = vec![BigRational::zero(); self.degree];
        if self.degree > 1 {
            coords[1] = BigRational::one();
        } else {
            // degree 1: theta is the rational root itself
            coords[0] = -self.min_poly_q[0].clone();
        }
        FieldElement { field: Arc::clone(self), coords }
    }

    pub fn element(self: &Arc<Self>, coords: Vec<BigRational>) -> FieldElement {
        assert_eq!(coords.len(), self.degree);
        FieldElement { field: Arc::clone(self), coords }
    }

    pub fn element_i64(self: &Arc<Self>, coords: &[i64]) -> FieldElement {
        self.element(coords.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
    }

    /// Refines an isolating interval for root i down to the given width by
    /// sign-preserving bisection; returns a fresh interval.
    pub fn refined_root(&self, i: usize, width: &BigRational) -> RatInterval {
        let mut iv = self.roots[i].clone();
        if iv.width().is_zero() {
            return iv;
        }
        let two = BigRational::from_integer(BigInt::from(2));
        let mut sign_lo = poly_eval(&self.min_poly_q, &iv.lo).is_positive();
        while &iv.width() > width {
            let mid = (&iv.lo + &iv.hi) / &two;
            let v = poly_eval(&self.min_poly_q, &mid);
            if v.is_zero() {
                // only possible for a rational root; pin it exactly
                return RatInterval::point(mid);
            }
            if v.is_positive() == sign_lo {
                iv.lo = mid;
                sign_lo = v.is_positive();
            } else {
                iv.hi = mid;
            }
        }
        iv
    }
}

fn newton_power_sums(f: &[BigRational], count: usize) -> Vec<BigRational> {
    let n = f.len() - 1;
    let mut p = vec![BigRational::zero(); count.max(1)];
    p[0] = BigRational::from_integer(BigInt::from(n as i64));
    for k in 1..count {
        // p_k + a_{n-1} p_{k-1} + ... + a_{n-k+1} p_1 + k a_{n-k} = 0 (k <= n)
        // p_k + a_{n-1} p_{k-1} + ... + a_0 p_{k-n} = 0            (k > n)
        let mut acc = BigRational::zero();
        for j in 1..k.min(n + 1) {
            acc += &f[n - j] * &p[k - j];
        }
        if k <= n {
            acc += &f[n - k] * BigRational::from_integer(BigInt::from(k as i64));
        }
        p[k] = -acc;
    }
    p
}

fn isolate_real_roots(f: &[BigRational]) -> Result<Vec<RatInterval>> {
    let n = poly_deg(f);
    if n == 1 {
        // monic linear: the root is -c0
        return Ok(vec![RatInterval::point(-f[0].clone())]);
    }
    let chain = SturmChain::new(f);
    let bound: BigRational = f[..n]
        .iter()
        .map(|c| c.abs())
        .fold(BigRational::zero(), |a, b| if a > b { a } else { b })
        + BigRational::one();
    let lo = -bound.clone();
    let hi = bound;
    let total = chain.roots_in(&lo, &hi);
    let mut isolated = Vec::new();
    let mut stack = vec![(lo, hi, total)];
    let two = BigRational::from_integer(BigInt::from(2));
    while let Some((a, b, count)) = stack.pop() {
        match count {
            0 => {}
            1 => isolated.push(RatInterval::new(a, b)),
            _ => {
                let mid = (&a + &b) / &two;
                // an irreducible f of degree >= 2 has no rational roots,
                // so the midpoint is never a root
                let left = chain.roots_in(&a, &mid);
                stack.push((a, mid.clone(), left));
                stack.push((mid, b, count - left));
            }
        }
    }
    // descending order by interval position (intervals are disjoint)
    isolated.sort_by(|x, y| y.lo.cmp(&x.lo));
    Ok(isolated)
}

// ---------------------------------------------------------------------------
// FieldElement

/// An element of the field, as exact rational coordinates in the power basis.
#[derive(Clone)]
pub struct FieldElement {
    pub field: Arc<NumberField>,
    pub coords: Vec<BigRational>,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement{:?}", self.coords)
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coords == other.coords
    }
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coords.iter().skip(1).all(|c| c.is_zero())
    }

    fn check_same_field(&self, other: &FieldElement) {
        assert!(self.field == other.field, "elements from different fields");
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.check_same_field(other);
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        FieldElement { field: Arc::clone(&self.field), coords }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.check_same_field(other);
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        FieldElement { field: Arc::clone(&self.field), coords }
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> FieldElement {
        FieldElement {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.check_same_field(other);
        let n = self.field.degree;
        let mut conv = vec![BigRational::zero(); 2 * n - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if !b.is_zero() {
                    conv[i + j] += a * b;
                }
            }
        }
        let mut coords: Vec<BigRational> = conv[..n].to_vec();
        for t in 0..n.saturating_sub(1) {
            let c = &conv[n + t];
            if c.is_zero() {
                continue;
            }
            for i in 0..n {
                coords[i] += c * &self.field.reduction[t][i];
            }
        }
        FieldElement { field: Arc::clone(&self.field), coords }
    }

    pub fn pow(&self, e: u32) -> FieldElement {
        let mut acc = self.field.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Matrix of multiplication by self in the power basis (columns are
    /// the images of 1, theta, ..., theta^(n-1)).
    pub fn mul_matrix(&self) -> RatMatrix {
        let n = self.field.degree;
        let mut cols = Vec::with_capacity(n);
        let mut power = self.clone();
        cols.push(power.coords.clone());
        let theta = self.field.theta();
        for _ in 1..n {
            power = power.mul(&theta);
            cols.push(power.coords.clone());
        }
        // transpose columns into row-major matrix
        (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect()
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let n = self.field.degree;
        let m = self.mul_matrix();
        let mut e0 = vec![BigRational::zero(); n];
        e0[0] = BigRational::one();
        let coords = solve(&m, &e0)?;
        Ok(FieldElement { field: Arc::clone(&self.field), coords })
    }
}

impl std::ops::Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::add(self, rhs)
    }
}

impl std::ops::Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::sub(self, rhs)
    }
}

impl std::ops::Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::mul(self, rhs)
    }
}

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}

/// Trace of the multiplication-by-x map, exactly.
pub fn trace(x: &FieldElement) -> BigRational {
    x.coords
        .iter()
        .zip(&x.field.power_sums)
        .map(|(c, p)| c * p)
        .sum()
}

/// Norm of the multiplication-by-x map, exactly.
pub fn norm(x: &FieldElement) -> BigRational {
    det(&x.mul_matrix())
}

// ---------------------------------------------------------------------------
// Certified real embeddings

/// An interval certified to contain a real number, with optional field
/// backing for on-demand refinement.
#[derive(Debug, Clone)]
pub struct RealValue {
    pub interval: RatInterval,
    pub backing: Option<(FieldElement, usize)>,
}

impl RealValue {
    pub fn exact(v: BigRational) -> Self {
        RealValue { interval: RatInterval::point(v), backing: None }
    }

    /// Returns a value whose interval has width <= target (refinable
    /// values only; unbacked values are returned as-is).
    pub fn refine(&self, target: &BigRational) -> RealValue {
        match &self.backing {
            Some((x, i)) if &self.interval.width() > target => embed(x, *i, target),
            _ => self.clone(),
        }
    }
}

/// Interval of width <= target containing tau_i(x), with 1-based embedding
/// index i (tau_1 is the largest root).
pub fn embed(x: &FieldElement, i: usize, target: &BigRational) -> RealValue {
    let idx = i - 1;
    let field = &x.field;
    if x.is_rational() {
        return RealValue {
            interval: RatInterval::point(x.coords[0].clone()),
            backing: Some((x.clone(), i)),
        };
    }
    let mut root_width = field.roots[idx].width();
    loop {
        let root = field.refined_root(idx, &root_width);
        let value = poly_eval_interval(&x.coords, &root);
        if &value.width() <= target {
            return RealValue { interval: value, backing: Some((x.clone(), i)) };
        }
        root_width /= BigRational::from_integer(BigInt::from(16));
    }
}

/// Exact sign of tau_i(x): 0 iff x = 0, otherwise refines until certain.
pub fn sign_at(x: &FieldElement, i: usize) -> i32 {
    if x.is_zero() {
        return 0;
    }
    if x.is_rational() {
        return if x.coords[0].is_positive() { 1 } else { -1 };
    }
    let idx = i - 1;
    let field = &x.field;
    let mut root_width = field.roots[idx].width();
    loop {
        let root = field.refined_root(idx, &root_width);
        let value = poly_eval_interval(&x.coords, &root);
        match value.certain_sign() {
            Some(s) if s != 0 => return s,
            _ => root_width /= BigRational::from_integer(BigInt::from(16)),
        }
    }
}

/// True when every embedding of x is strictly positive.
pub fn is_totally_positive(x: &FieldElement) -> bool {
    (1..=x.field.degree).all(|i| sign_at(x, i) == 1)
}

/// Default embedding precision used when precomputing lattice data.
pub fn default_precision() -> BigRational {
    pow2_inv(96)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    fn golden() -> Arc<NumberField> {
        make_field(&[-1, -1, 1]).unwrap()
    }

    fn cubic() -> Arc<NumberField> {
        make_field(&[-1, -2, 1, 1]).unwrap()
    }

    #[test]
    fn quadratic_field_roots() {
        let f = golden();
        assert_eq!(f.degree, 2);
        assert_eq!(f.disc_f, BigInt::from(5));
        // roots (1 +- sqrt(5))/2, descending
        let r0 = f.refined_root(0, &pow2_inv(40));
        let r1 = f.refined_root(1, &pow2_inv(40));
        assert!(r0.contains(&ratio(1618033988749894848, 1000000000000000000)));
        assert!(r0.lo > ratio(1618, 1001) && r0.hi < ratio(1619, 1000));
        assert!(r1.lo > ratio(-619, 1000) && r1.hi < ratio(-617, 1000));
    }

    #[test]
    fn cubic_field_roots_are_cosines() {
        let f = cubic();
        assert_eq!(f.degree, 3);
        assert_eq!(f.disc_f, BigInt::from(49));
        // 2cos(2pi/7) = 1.24697..., 2cos(4pi/7) = -0.44504..., 2cos(6pi/7) = -1.80193...
        let approx = [
            ratio(124698, 100000),
            ratio(-44504, 100000),
            ratio(-180194, 100000),
        ];
        for (i, target) in approx.iter().enumerate() {
            let r = f.refined_root(i, &pow2_inv(30));
            assert!((r.midpoint() - target).abs() < ratio(1, 10000), "root {i}");
        }
    }

    #[test]
    fn rejects_bad_polynomials() {
        assert!(matches!(make_field(&[1, 0, 1]), Err(Error::NotTotallyReal { .. })));
        assert!(matches!(make_field(&[1, -2, 1]), Err(Error::NotIrreducible))); // (x-1)^2
        assert!(matches!(make_field(&[-6, 11, -6, 1]), Err(Error::NotIrreducible))); // (x-1)(x-2)(x-3)
        assert!(matches!(make_field(&[5]), Err(Error::ZeroDegree)));
        assert!(matches!(make_field(&[1, 0, 2]), Err(Error::NotMonic)));
        // x^4 - 10x^2 + 1 is irreducible (min poly of sqrt2 + sqrt3)
        assert!(make_field(&[1, 0, -10, 0, 1]).is_ok());
        // x^4 - 5x^2 + 4 = (x-1)(x+1)(x-2)(x+2)
        assert!(matches!(make_field(&[4, 0, -5, 0, 1]), Err(Error::NotIrreducible)));
    }

    #[test]
    fn embed_examples() {
        let f = golden();
        let theta = f.theta();
        let e = embed(&theta, 1, &pow2_inv(40));
        // golden ratio 1.6180339887498948482...
        assert!(e.interval.contains(&ratio(1618033988749894848, 1000000000000000000)));
        assert!(e.interval.width() <= pow2_inv(40));

        let zero = f.zero();
        let ez = embed(&zero, 1, &pow2_inv(10));
        assert_eq!(ez.interval, RatInterval::point(rat(0)));

        // theta^2 - theta = 1 exactly
        let one = theta.mul(&theta).sub(&theta);
        assert_eq!(one, f.one());
        let e1 = embed(&one, 2, &pow2_inv(10));
        assert_eq!(e1.interval, RatInterval::point(rat(1)));
    }

    #[test]
    fn sign_examples() {
        let f = golden();
        // 2 theta - 1 = sqrt(5)
        let sqrt5 = f.element_i64(&[-1, 2]);
        assert_eq!(sign_at(&sqrt5, 1), 1);
        assert_eq!(sign_at(&sqrt5, 2), -1);
        assert_eq!(sign_at(&f.zero(), 1), 0);
        assert_eq!(sign_at(&f.zero(), 2), 0);

        // eta^2 - 1 in the cubic field has norm -1, so signs are mixed
        let c = cubic();
        let eps1 = c.element_i64(&[-1, 0, 1]);
        let signs: Vec<i32> = (1..=3).map(|i| sign_at(&eps1, i)).collect();
        assert_eq!(signs, vec![1, -1, 1]);
        assert_eq!(norm(&eps1), rat(-1));
        // its square is totally positive
        assert!(is_totally_positive(&eps1.mul(&eps1)));
    }

    #[test]
    fn trace_and_norm_examples() {
        let f = golden();
        let theta = f.theta();
        assert_eq!(trace(&theta), rat(1));
        assert_eq!(norm(&theta), rat(-1));
        // (3+sqrt5)/2 = theta + 1
        let eps = theta.add(&f.one());
        assert_eq!(norm(&eps), rat(1));
        assert_eq!(trace(&eps), rat(3));
    }

    #[test]
    fn inverse_multiplies_to_one() {
        let c = cubic();
        let x = c.element(vec![ratio(2, 3), rat(-1), ratio(5, 7)]);
        let inv = x.inv().unwrap();
        assert_eq!(x.mul(&inv), c.one());
        assert!(c.zero().inv().is_err());
    }

    #[test]
    fn embedding_sum_encloses_trace() {
        let c = cubic();
        let x = c.element(vec![ratio(1, 2), rat(3), ratio(-2, 5)]);
        let target = pow2_inv(60);
        let total = (1..=3)
            .map(|i| embed(&x, i, &target).interval)
            .fold(RatInterval::zero(), |acc, iv| acc.add(&iv));
        assert!(total.contains(&trace(&x)));
    }

    #[test]
    fn refinement_is_monotone() {
        let c = cubic();
        let x = c.element(vec![rat(1), rat(1), rat(1)]);
        let coarse = embed(&x, 1, &pow2_inv(10));
        let fine = coarse.refine(&pow2_inv(50));
        assert!(coarse.interval.contains_interval(&fine.interval));
    }
}
