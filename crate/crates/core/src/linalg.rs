//! Exact linear algebra: a small field abstraction, Gaussian elimination,
//! determinants, and a fraction-free solver for integer systems with a unique
//! integral solution.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rationals.
pub type Rational = BigRational;

/// The operations Gaussian elimination needs from a field.
pub trait Field: Clone + PartialEq + Debug {
    /// Additive identity.
    fn zero() -> Self;
    /// Multiplicative identity.
    fn one() -> Self;
    /// Image of an integer.
    fn from_i64(v: i64) -> Self;
    /// Whether this is the additive identity.
    fn is_zero(&self) -> bool;
    /// Sum.
    fn add(&self, other: &Self) -> Self;
    /// Difference.
    fn sub(&self, other: &Self) -> Self;
    /// Product.
    fn mul(&self, other: &Self) -> Self;
    /// Additive inverse.
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;
    /// Image of a rational number. Panics if the denominator vanishes.
    fn from_rational(r: &Rational) -> Self;
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

/// The prime 2³¹ − 1.
pub const MERSENNE_31: u64 = 2_147_483_647;

/// Elements of the prime field F_p with p = 2³¹ − 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Fp(u64);

impl Fp {
    /// Reduce an integer into the field.
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(MERSENNE_31 as i64) as u64)
    }

    /// Canonical representative in `[0, p)`.
    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % MERSENNE_31;
            }
            base = base * base % MERSENNE_31;
            e >>= 1;
        }
        Fp(acc)
    }
}

impl Field for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, other: &Self) -> Self {
        Fp((self.0 + other.0) % MERSENNE_31)
    }
    fn sub(&self, other: &Self) -> Self {
        Fp((self.0 + MERSENNE_31 - other.0) % MERSENNE_31)
    }
    fn mul(&self, other: &Self) -> Self {
        Fp(self.0 * other.0 % MERSENNE_31)
    }
    fn neg(&self) -> Self {
        Fp((MERSENNE_31 - self.0) % MERSENNE_31)
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero in F_p");
        self.pow(MERSENNE_31 - 2)
    }
    fn from_rational(r: &Rational) -> Self {
        let p = BigInt::from(MERSENNE_31);
        let reduce = |x: &BigInt| Fp(x.mod_floor(&p).to_u64().expect("residue fits in u64"));
        reduce(r.numer()).mul(&reduce(r.denom()).inv())
    }
}

/// Bring `rows` to reduced row echelon form in place and return the pivot
/// columns in increasing order.
pub fn rref<F: Field>(rows: &mut Vec<Vec<F>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        for x in rows[r].iter_mut().skip(c) {
            *x = x.mul(&inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x = x.sub(&factor.mul(y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Rank of a matrix given by rows.
pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv();
        let (top, bottom) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let factor = row[c].mul(&inv);
            for (x, y) in row.iter_mut().zip(pivot_row).skip(c) {
                if !y.is_zero() {
                    *x = x.sub(&factor.mul(y));
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Determinant of a square matrix.
pub fn determinant<F: Field>(rows: &[Vec<F>]) -> F {
    let n = rows.len();
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let mut det = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return F::zero();
        };
        if p != c {
            m.swap(p, c);
            det = det.neg();
        }
        det = det.mul(&m[c][c]);
        let inv = m[c][c].inv();
        let (top, bottom) = m.split_at_mut(c + 1);
        let pivot_row = &top[c];
        for row in bottom.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let factor = row[c].mul(&inv);
            for (x, y) in row.iter_mut().zip(pivot_row).skip(c) {
                *x = x.sub(&factor.mul(y));
            }
        }
    }
    det
}

/// Solver for integer systems `A x = b` where `A` has full column rank.
///
/// Construction runs Bareiss fraction-free elimination on `[A | I]`. The rows
/// that vanish on the `A` block give integer consistency conditions; the
/// remaining triangular block yields a left inverse of `A` with a common
/// denominator.
#[derive(Clone, Debug)]
pub struct ExactSolver {
    rows: usize,
    cols: usize,
    /// Numerators of a left inverse of `A`, one row per unknown.
    left_inverse: Vec<Vec<BigInt>>,
    denominator: BigInt,
    /// Rows spanning the left kernel of `A`.
    constraints: Vec<Vec<BigInt>>,
}

impl ExactSolver {
    /// Prepare to solve against the given columns (each of equal length).
    ///
    /// Fails with [`Error::NonUniqueSolution`] if the columns are linearly
    /// dependent.
    pub fn new(columns: &[Vec<i64>]) -> Result<Self> {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch("ragged column list".into()));
        }
        if cols > rows {
            return Err(Error::NonUniqueSolution);
        }
        let width = cols + rows;
        let mut m: Vec<Vec<BigInt>> = (0..rows)
            .map(|i| {
                let mut row = vec![BigInt::zero(); width];
                for (j, col) in columns.iter().enumerate() {
                    row[j] = BigInt::from(col[i]);
                }
                row[cols + i] = BigInt::one();
                row
            })
            .collect();

        let mut prev = BigInt::one();
        for c in 0..cols {
            let Some(p) = (c..rows).find(|&i| !m[i][c].is_zero()) else {
                return Err(Error::NonUniqueSolution);
            };
            m.swap(c, p);
            let (top, bottom) = m.split_at_mut(c + 1);
            let pivot_row = &top[c];
            for row in bottom.iter_mut() {
                let lead = row[c].clone();
                for j in (c + 1)..width {
                    let v = &pivot_row[c] * &row[j] - &lead * &pivot_row[j];
                    row[j] = v / &prev;
                }
                row[c] = BigInt::zero();
            }
            prev = m[c][c].clone();
        }

        let constraints: Vec<Vec<BigInt>> = m[cols..].iter().map(|r| r[cols..].to_vec()).collect();

        // Back substitution over the rationals: U X = E_top.
        let mut x: Vec<Vec<Rational>> = vec![Vec::new(); cols];
        for i in (0..cols).rev() {
            let mut row: Vec<Rational> = m[i][cols..].iter().map(|v| Rational::from_integer(v.clone())).collect();
            for j in (i + 1)..cols {
                if m[i][j].is_zero() {
                    continue;
                }
                let coef = Rational::from_integer(m[i][j].clone());
                for (t, xv) in row.iter_mut().zip(&x[j]) {
                    *t -= &coef * xv;
                }
            }
            let d = Rational::from_integer(m[i][i].clone());
            for t in row.iter_mut() {
                *t /= &d;
            }
            x[i] = row;
        }
        let mut denominator = BigInt::one();
        for v in x.iter().flatten() {
            denominator = denominator.lcm(v.denom());
        }
        let left_inverse =
            x.iter().map(|row| row.iter().map(|v| v.numer() * (&denominator / v.denom())).collect()).collect();
        Ok(ExactSolver { rows, cols, left_inverse, denominator, constraints })
    }

    /// Number of unknowns.
    pub fn unknowns(&self) -> usize {
        self.cols
    }

    /// Solve `A x = b`, requiring an integral solution.
    pub fn solve(&self, b: &[i64]) -> Result<Vec<i64>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch("right-hand side length".into()));
        }
        let b: Vec<BigInt> = b.iter().map(|&v| BigInt::from(v)).collect();
        for c in &self.constraints {
            let s: BigInt = c.iter().zip(&b).map(|(x, y)| x * y).sum();
            if !s.is_zero() {
                return Err(Error::NoIntegerSolution);
            }
        }
        self.left_inverse
            .iter()
            .map(|row| {
                let s: BigInt = row.iter().zip(&b).map(|(x, y)| x * y).sum();
                let (q, r) = s.div_rem(&self.denominator);
                if !r.is_zero() {
                    return Err(Error::NoIntegerSolution);
                }
                q.to_i64()
                    .filter(|v| v.abs() < i64::MAX / 4)
                    .ok_or(Error::OutOfRange("solution does not fit in i64".into()))
            })
            .collect()
    }
}

/// Greatest common divisor of two integers, always non-negative.
pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    #[test]
    fn rank_of_dependent_rows() {
        let m = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(0), q(1), q(1)]];
        assert_eq!(rank(&m), 2);
        let mp: Vec<Vec<Fp>> = vec![vec![Fp::new(1), Fp::new(2)], vec![Fp::new(2), Fp::new(4)]];
        assert_eq!(rank(&mp), 1);
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let m = vec![vec![q(2), q(0), q(1)], vec![q(1), q(3), q(2)], vec![q(1), q(1), q(1)]];
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(determinant(&m), q(0));
        let m = vec![vec![q(0), q(1)], vec![q(1), q(0)]];
        assert_eq!(determinant(&m), q(-1));
    }

    #[test]
    fn fp_inverse() {
        let a = Fp::new(123_456);
        assert_eq!(a.mul(&a.inv()), Fp::one());
        assert_eq!(Fp::new(-1).value(), MERSENNE_31 - 1);
    }

    #[test]
    fn rref_pivots() {
        let mut m = vec![vec![q(0), q(2), q(4)], vec![q(1), q(1), q(1)]];
        let piv = rref(&mut m);
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(m[0], vec![q(1), q(0), q(-1)]);
        assert_eq!(m[1], vec![q(0), q(1), q(2)]);
    }

    #[test]
    fn exact_solver_round_trip() {
        // Columns (1,1,0), (0,1,1); b = 2*c0 - 3*c1.
        let s = ExactSolver::new(&[vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        assert_eq!(s.solve(&[2, -1, -3]).unwrap(), vec![2, -3]);
        assert_eq!(s.solve(&[1, 0, 0]), Err(Error::NoIntegerSolution));
    }

    #[test]
    fn exact_solver_rejects_non_integral() {
        let s = ExactSolver::new(&[vec![2, 0], vec![0, 2]]).unwrap();
        assert_eq!(s.solve(&[4, 2]).unwrap(), vec![2, 1]);
        assert_eq!(s.solve(&[1, 2]), Err(Error::NoIntegerSolution));
    }

    #[test]
    fn exact_solver_rejects_dependent_columns() {
        assert_eq!(ExactSolver::new(&[vec![1, 2], vec![2, 4]]).unwrap_err(), Error::NonUniqueSolution);
    }
}
