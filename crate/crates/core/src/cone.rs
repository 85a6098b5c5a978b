//! Open convex polyhedral cones with exact membership tests.
//!
//! Two generator flavours appear in the pipeline: rational simplicial
//! cones (the Shintani fan data) and algebraic cones whose rays are real
//! embeddings of field-element vectors (T_{w,+} and its unimodular
//! images). Membership never touches floating point: rational cones are
//! decided by exact linear solves, algebraic cones by certified sign
//! determination through the field backing, so points arbitrarily close
//! to an irrational wall are still classified correctly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{embed, sign_at, FieldElement};
use crate::interval::RatInterval;
use crate::linalg::{inverse, int_det, mat_vec, unimodular_inverse, IntMatrix, RatMatrix};
use crate::rat::pow2_inv;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Containment {
    Inside,
    Boundary,
    Outside,
}

/// A ray given as the image of a field-element vector under one real
/// embedding (1-based index).
#[derive(Debug, Clone)]
pub struct AlgebraicRay {
    pub vector: Vec<FieldElement>,
    pub embedding: usize,
}

impl AlgebraicRay {
    pub fn enclosure(&self, bits: u32) -> Vec<RatInterval> {
        let target = pow2_inv(bits);
        self.vector
            .iter()
            .map(|c| embed(c, self.embedding, &target).interval)
            .collect()
    }

    /// Certified signs of the ray coordinates.
    pub fn coordinate_signs(&self) -> Vec<i32> {
        self.vector.iter().map(|c| sign_at(c, self.embedding)).collect()
    }
}

#[derive(Debug, Clone)]
pub enum ConeGens {
    /// Generator columns with exact rational entries.
    Rational(Vec<Vec<BigRational>>),
    Algebraic(Vec<AlgebraicRay>),
}

#[derive(Debug, Clone)]
enum Membership {
    /// x in C iff tau_i(sum_j x_j dual[j]) > 0 for every embedding i.
    AlgebraicDual { dual: Vec<FieldElement> },
    /// Solve gens * t = x; the pivot submatrix inverse is precomputed.
    RationalSolve { pivot_rows: Vec<usize>, inv: RatMatrix },
}

#[derive(Debug, Clone)]
pub struct Cone {
    pub gens: ConeGens,
    /// Number of generators r (simplicial, so also the dimension).
    pub dim: usize,
    /// Ambient dimension n.
    pub ambient: usize,
    membership: Membership,
}

impl Cone {
    /// Simplicial rational cone from nonzero generator columns.
    pub fn rational(gens: Vec<Vec<BigRational>>) -> Result<Cone> {
        let r = gens.len();
        assert!(r > 0, "empty generator list");
        let n = gens[0].len();
        for g in &gens {
            if g.iter().all(|c| c.is_zero()) {
                return Err(Error::NonSimplicial);
            }
        }
        let (pivot_rows, inv) = rational_solver(&gens)?;
        Ok(Cone {
            dim: r,
            ambient: n,
            membership: Membership::RationalSolve { pivot_rows, inv },
            gens: ConeGens::Rational(gens),
        })
    }

    pub fn rational_i64(cols: &[Vec<i64>]) -> Result<Cone> {
        Cone::rational(
            cols.iter()
                .map(|c| c.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
                .collect(),
        )
    }

    /// Full-dimensional algebraic cone: ray j is tau applied to `rays[j]`,
    /// and membership is total positivity of <x, dual>.
    pub fn algebraic(rays: Vec<AlgebraicRay>, dual: Vec<FieldElement>) -> Cone {
        let n = dual.len();
        assert_eq!(rays.len(), n);
        Cone {
            dim: n,
            ambient: n,
            membership: Membership::AlgebraicDual { dual },
            gens: ConeGens::Algebraic(rays),
        }
    }

    pub fn is_algebraic(&self) -> bool {
        matches!(self.gens, ConeGens::Algebraic(_))
    }

    /// The field-element vector behind the dual membership forms, when
    /// algebraic: form i is x -> tau_i(<x, dual>).
    pub fn dual_vector(&self) -> Option<&[FieldElement]> {
        match &self.membership {
            Membership::AlgebraicDual { dual } => Some(dual),
            Membership::RationalSolve { .. } => None,
        }
    }

    /// Exact classification of an integer point.
    pub fn contains_int(&self, x: &[i64]) -> Containment {
        let xr: Vec<BigRational> =
            x.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect();
        self.contains(&xr)
    }

    /// Exact classification of a rational point. Cones are open: the
    /// origin and relative-boundary points are Boundary or Outside,
    /// never Inside; the origin itself is Outside by convention.
    pub fn contains(&self, x: &[BigRational]) -> Containment {
        assert_eq!(x.len(), self.ambient);
        if x.iter().all(|c| c.is_zero()) {
            return Containment::Outside;
        }
        match &self.membership {
            Membership::AlgebraicDual { dual } => {
                let mut z = dual[0].field.zero();
                for (xi, d) in x.iter().zip(dual) {
                    if !xi.is_zero() {
                        z = z.add(&d.scale(xi));
                    }
                }
                if z.is_zero() {
                    // nonzero x annihilated by the dual pairing sits on
                    // every wall at once
                    return Containment::Boundary;
                }
                for i in 1..=z.field.degree {
                    if sign_at(&z, i) < 0 {
                        return Containment::Outside;
                    }
                }
                Containment::Inside
            }
            Membership::RationalSolve { pivot_rows, inv } => {
                let gens = match &self.gens {
                    ConeGens::Rational(g) => g,
                    ConeGens::Algebraic(_) => unreachable!(),
                };
                let xp: Vec<BigRational> = pivot_rows.iter().map(|&r| x[r].clone()).collect();
                let t = mat_vec(inv, &xp);
                for row in 0..self.ambient {
                    let lhs: BigRational = gens.iter().zip(&t).map(|(g, ti)| &g[row] * ti).sum();
                    if lhs != x[row] {
                        return Containment::Outside;
                    }
                }
                if t.iter().any(|ti| ti.is_negative()) {
                    Containment::Outside
                } else if t.iter().all(|ti| ti.is_positive()) {
                    Containment::Inside
                } else {
                    Containment::Boundary
                }
            }
        }
    }

    /// Interval enclosures of the generator columns at the given precision.
    pub fn ray_enclosures(&self, bits: u32) -> Vec<Vec<RatInterval>> {
        match &self.gens {
            ConeGens::Rational(g) => g
                .iter()
                .map(|col| col.iter().map(|c| RatInterval::point(c.clone())).collect())
                .collect(),
            ConeGens::Algebraic(rays) => rays.iter().map(|r| r.enclosure(bits)).collect(),
        }
    }

    /// Certifies that every generator has strictly positive coordinates.
    pub fn is_totally_positive(&self) -> bool {
        match &self.gens {
            ConeGens::Rational(g) => g.iter().all(|col| col.iter().all(|c| c.is_positive())),
            ConeGens::Algebraic(rays) => {
                rays.iter().all(|r| r.coordinate_signs().iter().all(|&s| s == 1))
            }
        }
    }
}

/// Picks r independent rows of the n x r generator matrix and inverts the
/// pivot submatrix; fails with `NonSimplicial` when the columns are
/// dependent.
fn rational_solver(gens: &[Vec<BigRational>]) -> Result<(Vec<usize>, RatMatrix)> {
    let r = gens.len();
    let n = gens[0].len();
    let mut work: Vec<Vec<BigRational>> =
        (0..n).map(|i| gens.iter().map(|g| g[i].clone()).collect()).collect();
    let mut pivot_rows = Vec::with_capacity(r);
    let mut used = vec![false; n];
    for col in 0..r {
        let mut found = None;
        for row in 0..n {
            if !used[row] && !work[row][col].is_zero() {
                found = Some(row);
                break;
            }
        }
        let Some(p) = found else {
            return Err(Error::NonSimplicial);
        };
        used[p] = true;
        pivot_rows.push(p);
        let pv = work[p][col].clone();
        for row in 0..n {
            if row != p && !work[row][col].is_zero() {
                let factor = &work[row][col] / &pv;
                for c in col..r {
                    let sub = &factor * &work[p][c];
                    work[row][c] -= sub;
                }
            }
        }
    }
    pivot_rows.sort_unstable();
    let sub: RatMatrix =
        pivot_rows.iter().map(|&row| gens.iter().map(|g| g[row].clone()).collect()).collect();
    let inv = inverse(&sub).map_err(|_| Error::NonSimplicial)?;
    Ok((pivot_rows, inv))
}

/// True iff the gcd of all r x r minors of the integer generator matrix
/// is 1, i.e. the columns extend to a Z-basis of Z^n.
pub fn is_smooth(cols: &[Vec<i64>]) -> Result<bool> {
    let r = cols.len();
    let n = cols[0].len();
    assert!(r <= n, "more generators than ambient dimension");
    let mut gcd: i128 = 0;
    for rows in combinations(n, r) {
        let sub: IntMatrix =
            rows.iter().map(|&row| cols.iter().map(|c| c[row]).collect()).collect();
        let d = int_det(&sub).abs();
        gcd = gcd_i128(gcd, d);
        if gcd == 1 {
            return Ok(true);
        }
    }
    if gcd == 0 {
        return Err(Error::RankDeficient);
    }
    Ok(gcd == 1)
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, r: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == r {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, r, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, r, &mut Vec::with_capacity(r), &mut out);
    out
}

/// Image of a cone under x -> transpose(I) x for unimodular I with
/// det I = +1. Generators map by transpose(I); algebraic dual forms map
/// by I^{-1} on the field-element vector.
pub fn transform_cone(i_mat: &IntMatrix, cone: &Cone) -> Result<Cone> {
    if int_det(i_mat) != 1 {
        return Err(Error::NotUnimodular);
    }
    let n = cone.ambient;
    assert_eq!(i_mat.len(), n);
    match (&cone.gens, &cone.membership) {
        (ConeGens::Algebraic(rays), Membership::AlgebraicDual { dual }) => {
            let new_rays: Vec<AlgebraicRay> = rays
                .iter()
                .map(|ray| AlgebraicRay {
                    // (transpose(I) v)_i = sum_j I[j][i] v_j
                    vector: (0..n)
                        .map(|i| {
                            let mut acc = ray.vector[0].field.zero();
                            for j in 0..n {
                                if i_mat[j][i] != 0 {
                                    let c = BigRational::from_integer(BigInt::from(i_mat[j][i]));
                                    acc = acc.add(&ray.vector[j].scale(&c));
                                }
                            }
                            acc
                        })
                        .collect(),
                    embedding: ray.embedding,
                })
                .collect();
            let inv = unimodular_inverse(i_mat)?;
            let new_dual: Vec<FieldElement> = (0..n)
                .map(|i| {
                    let mut acc = dual[0].field.zero();
                    for j in 0..n {
                        if inv[i][j] != 0 {
                            let c = BigRational::from_integer(BigInt::from(inv[i][j]));
                            acc = acc.add(&dual[j].scale(&c));
                        }
                    }
                    acc
                })
                .collect();
            Ok(Cone::algebraic(new_rays, new_dual))
        }
        (ConeGens::Rational(gens), _) => {
            let mapped: Vec<Vec<BigRational>> = gens
                .iter()
                .map(|col| {
                    (0..n)
                        .map(|i| {
                            (0..n)
                                .map(|j| {
                                    BigRational::from_integer(BigInt::from(i_mat[j][i])) * &col[j]
                                })
                                .sum()
                        })
                        .collect()
                })
                .collect();
            Cone::rational(mapped)
        }
        _ => unreachable!(),
    }
}

// ---------------------------------------------------------------------------
// Fans

/// Shintani fan data: integer generator columns per cone, in file order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    pub cones: Vec<Vec<Vec<i64>>>,
}

impl Fan {
    pub fn ambient(&self) -> usize {
        self.cones[0][0].len()
    }

    /// Indices of the top-dimensional cones (Phi^(n)).
    pub fn top_dimensional(&self) -> Vec<usize> {
        let n = self.ambient();
        (0..self.cones.len()).filter(|&i| self.cones[i].len() == n).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use crate::rat::{rat, ratio};

    #[test]
    fn smoothness_examples() {
        assert!(is_smooth(&[vec![1, 1], vec![0, 1]]).unwrap());
        assert!(is_smooth(&[vec![0, 1]]).unwrap());
        assert!(!is_smooth(&[vec![0, 2]]).unwrap());
        assert!(is_smooth(&[vec![1, 0, 1], vec![1, -1, 3], vec![1, -1, 2]]).unwrap());
        assert!(matches!(is_smooth(&[vec![1, 2], vec![2, 4]]), Err(Error::RankDeficient)));
    }

    #[test]
    fn rational_cone_membership() {
        // cone spanned by (1,1) and (0,1)
        let c = Cone::rational_i64(&[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(c.contains_int(&[1, 2]), Containment::Inside);
        assert_eq!(c.contains_int(&[1, 1]), Containment::Boundary);
        assert_eq!(c.contains_int(&[2, 1]), Containment::Outside);
        assert_eq!(c.contains_int(&[0, 0]), Containment::Outside);

        // 1-dimensional cone: the ray through (1,1)
        let ray = Cone::rational_i64(&[vec![1, 1]]).unwrap();
        assert_eq!(ray.contains_int(&[3, 3]), Containment::Inside);
        assert_eq!(ray.contains_int(&[2, 3]), Containment::Outside);
        assert_eq!(ray.contains_int(&[0, 0]), Containment::Outside);
        assert_eq!(ray.contains_int(&[-1, -1]), Containment::Outside);
    }

    #[test]
    fn degenerate_generators_rejected() {
        assert!(matches!(Cone::rational(vec![vec![rat(0), rat(0)]]), Err(Error::NonSimplicial)));
        assert!(matches!(
            Cone::rational_i64(&[vec![1, 2], vec![2, 4]]),
            Err(Error::NonSimplicial)
        ));
    }

    #[test]
    fn algebraic_membership_via_field() {
        // T_{w,+} for Q(sqrt5), w = (theta, 1): x inside iff x1*theta + x2
        // is totally positive
        let f = make_field(&[-1, -1, 1]).unwrap();
        let w = vec![f.theta(), f.one()];
        let wstar = vec![
            f.element(vec![ratio(-1, 5), ratio(2, 5)]),
            f.element(vec![ratio(3, 5), ratio(-1, 5)]),
        ];
        let rays: Vec<AlgebraicRay> =
            (1..=2).map(|i| AlgebraicRay { vector: wstar.clone(), embedding: i }).collect();
        let t_cone = Cone::algebraic(rays, w);
        // 1 is totally positive, theta is not
        assert_eq!(t_cone.contains_int(&[0, 1]), Containment::Inside);
        assert_eq!(t_cone.contains_int(&[1, 0]), Containment::Outside);
        assert_eq!(t_cone.contains_int(&[0, 0]), Containment::Outside);
        assert!(t_cone.is_totally_positive());
    }

    #[test]
    fn transform_requires_unimodular() {
        let c = Cone::rational_i64(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert!(transform_cone(&vec![vec![2, 0], vec![0, 1]], &c).is_err());
        let id = transform_cone(&vec![vec![1, 0], vec![0, 1]], &c).unwrap();
        assert_eq!(id.contains_int(&[3, 4]), Containment::Inside);
    }
}
