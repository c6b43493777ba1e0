use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{content, linalg, ExactError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VectorKind {
    Timelike,
    Lightlike,
    Spacelike,
}

/// Integer vector in ℝ^{n,1}; the last coordinate is the time coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LorentzVector {
    coords: Vec<BigInt>,
}

impl LorentzVector {
    pub fn new(coords: Vec<BigInt>) -> Result<Self, ExactError> {
        if coords.len() < 2 {
            return Err(ExactError::TooShort);
        }
        Ok(LorentzVector { coords })
    }

    pub fn from_i64(xs: &[i64]) -> Self {
        assert!(xs.len() >= 2, "vector must have at least two coordinates");
        LorentzVector {
            coords: xs.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        LorentzVector {
            coords: vec![BigInt::zero(); n + 1],
        }
    }

    /// Standard basis vector e_j, `j` counted from 1.
    pub fn basis(n: usize, j: usize) -> Self {
        let mut v = Self::zero(n);
        v.coords[j - 1] = BigInt::one();
        v
    }

    pub fn ambient_dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.coords
    }

    pub fn time(&self) -> &BigInt {
        self.coords.last().unwrap()
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coords.iter().map(|c| c.to_i64()).collect()
    }

    pub fn norm(&self) -> BigInt {
        lorentz_inner_unchecked(&self.coords, &self.coords)
    }

    pub fn inner(&self, other: &Self) -> Result<BigInt, ExactError> {
        lorentz_inner(self, other)
    }

    pub fn kind(&self) -> VectorKind {
        let q = self.norm();
        if q.is_negative() {
            VectorKind::Timelike
        } else if q.is_zero() {
            VectorKind::Lightlike
        } else {
            VectorKind::Spacelike
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn neg(&self) -> Self {
        LorentzVector {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        LorentzVector {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        LorentzVector {
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    /// Divide out the content, keeping the sign.
    pub fn primitive(&self) -> Result<Self, ExactError> {
        let g = content(&self.coords);
        if g.is_zero() {
            return Err(ExactError::ZeroVector);
        }
        Ok(LorentzVector {
            coords: self.coords.iter().map(|c| c.div_floor(&g)).collect(),
        })
    }

    /// Canonical representative of the projective point: content 1, first nonzero
    /// of (time, then other coordinates from the end) positive.
    pub fn primitive_point(&self) -> Result<Self, ExactError> {
        let p = self.primitive()?;
        let lead = p.coords.iter().rev().find(|c| !c.is_zero()).unwrap();
        if lead.is_negative() {
            Ok(p.neg())
        } else {
            Ok(p)
        }
    }
}

impl fmt::Display for LorentzVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn lorentz_inner_unchecked(x: &[BigInt], y: &[BigInt]) -> BigInt {
    let n = x.len() - 1;
    let mut s = BigInt::zero();
    for i in 0..n {
        s += &x[i] * &y[i];
    }
    s - &x[n] * &y[n]
}

/// ⟨x,y⟩ = x₁y₁ + … + x_n y_n − x_{n+1} y_{n+1}.
pub fn lorentz_inner(x: &LorentzVector, y: &LorentzVector) -> Result<BigInt, ExactError> {
    if x.len() != y.len() {
        return Err(ExactError::DimensionMismatch(x.ambient_dim(), y.ambient_dim()));
    }
    Ok(lorentz_inner_unchecked(&x.coords, &y.coords))
}

/// Square integer matrix acting on ℝ^{n,1} by left multiplication.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LorentzMatrix {
    size: usize,
    entries: Vec<BigInt>,
}

impl LorentzMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, ExactError> {
        let size = rows.len();
        if size < 2 {
            return Err(ExactError::TooShort);
        }
        if rows.iter().any(|r| r.len() != size) {
            return Err(ExactError::NotSquare);
        }
        Ok(LorentzMatrix {
            size,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .expect("square integer matrix")
    }

    pub fn identity(size: usize) -> Self {
        let mut entries = vec![BigInt::zero(); size * size];
        for i in 0..size {
            entries[i * size + i] = BigInt::one();
        }
        LorentzMatrix { size, entries }
    }

    pub fn diag(d: &[i64]) -> Self {
        let mut m = Self::identity(d.len());
        for (i, &x) in d.iter().enumerate() {
            m.entries[i * d.len() + i] = BigInt::from(x);
        }
        m
    }

    /// The form J = diag(1,…,1,−1).
    pub fn form(size: usize) -> Self {
        let mut m = Self::identity(size);
        m.entries[size * size - 1] = -BigInt::one();
        m
    }

    /// Matrix exchanging coordinates i and j (1-based).
    pub fn permutation_swap(size: usize, i: usize, j: usize) -> Self {
        let mut m = Self::identity(size);
        let (a, b) = (i - 1, j - 1);
        m.entries[a * size + a] = BigInt::zero();
        m.entries[b * size + b] = BigInt::zero();
        m.entries[a * size + b] = BigInt::one();
        m.entries[b * size + a] = BigInt::one();
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn ambient_dim(&self) -> usize {
        self.size - 1
    }

    /// Entry (i,j), 0-based.
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.size + j]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        self.entries
            .chunks(self.size)
            .map(|r| r.iter().map(|x| x.to_i64()).collect())
            .collect()
    }

    pub fn column(&self, j: usize) -> LorentzVector {
        LorentzVector {
            coords: (0..self.size).map(|i| self.get(i, j).clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size, "matrix size mismatch");
        let n = self.size;
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if !b.is_zero() {
                        entries[i * n + j] += a * b;
                    }
                }
            }
        }
        LorentzMatrix { size: n, entries }
    }

    pub fn apply(&self, v: &LorentzVector) -> LorentzVector {
        assert_eq!(self.size, v.len(), "matrix/vector size mismatch");
        let n = self.size;
        let coords = (0..n)
            .map(|i| {
                let mut s = BigInt::zero();
                for j in 0..n {
                    let a = &self.entries[i * n + j];
                    if !a.is_zero() {
                        s += a * &v.coords[j];
                    }
                }
                s
            })
            .collect();
        LorentzVector { coords }
    }

    pub fn transpose(&self) -> Self {
        let n = self.size;
        let mut entries = Vec::with_capacity(n * n);
        for j in 0..n {
            for i in 0..n {
                entries.push(self.entries[i * n + j].clone());
            }
        }
        LorentzMatrix { size: n, entries }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.size)
    }

    pub fn is_form_preserving(&self) -> bool {
        let j = Self::form(self.size);
        self.transpose().mul(&j).mul(self) == j
    }

    pub fn time_entry(&self) -> &BigInt {
        self.entries.last().unwrap()
    }

    /// MᵀJM = J and the bottom-right entry is positive.
    pub fn is_positive_lorentzian(&self) -> bool {
        self.time_entry().is_positive() && self.is_form_preserving()
    }

    /// Inverse of a form-preserving matrix, J Mᵀ J.
    pub fn lorentz_inverse(&self) -> Self {
        let j = Self::form(self.size);
        j.mul(&self.transpose()).mul(&j)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.size);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn det(&self) -> BigInt {
        linalg::det(&self.rows())
    }

    /// Multiplicative order, searching up to `bound`.
    pub fn order(&self, bound: u32) -> Result<u32, ExactError> {
        let id = Self::identity(self.size);
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc == id {
                return Ok(k);
            }
            acc = acc.mul(self);
        }
        Err(ExactError::OrderBound(bound))
    }
}

impl fmt::Display for LorentzMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.chunks(self.size).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            write!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Reflection in the hyperplane u^⊥ for an integral unit spacelike u.
///
/// Column j is e_j − 2⟨u,e_j⟩u.
pub fn reflection_in(u: &LorentzVector) -> Result<LorentzMatrix, ExactError> {
    let q = u.norm();
    if !q.is_one() {
        return Err(ExactError::NonUnitNormal(q));
    }
    let size = u.len();
    let n = size - 1;
    let two = BigInt::from(2);
    let mut m = LorentzMatrix::identity(size);
    for j in 0..size {
        // ⟨u,e_j⟩ = u_j (space) or −u_{n+1} (time)
        let ip = if j < n { u.coords[j].clone() } else { -&u.coords[n] };
        if ip.is_zero() {
            continue;
        }
        let f = &two * &ip;
        for i in 0..size {
            m.entries[i * size + j] -= &f * &u.coords[i];
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> LorentzVector {
        LorentzVector::from_i64(xs)
    }

    #[test]
    fn inner_products() {
        let e7 = LorentzVector::basis(6, 7);
        assert_eq!(lorentz_inner(&e7, &e7).unwrap(), BigInt::from(-1));
        assert_eq!(v(&[1, 1, 0, 0, 0, 0, 1]).norm(), BigInt::one());
        assert_eq!(v(&[1, 1, 1, 1, 1, 0, 2]).norm(), BigInt::one());
        assert!(lorentz_inner(&e7, &v(&[1, 0, 1])).is_err());
    }

    #[test]
    fn classification() {
        assert_eq!(v(&[0, 0, 1]).kind(), VectorKind::Timelike);
        assert_eq!(v(&[1, 0, 1]).kind(), VectorKind::Lightlike);
        assert_eq!(v(&[1, 1, 1]).kind(), VectorKind::Spacelike);
    }

    #[test]
    fn reflection_r7_and_r1() {
        let r7 = reflection_in(&v(&[1, 1, 0, 0, 0, 0, 1])).unwrap();
        let expected = LorentzMatrix::from_i64_rows(&[
            vec![-1, -2, 0, 0, 0, 0, 2],
            vec![-2, -1, 0, 0, 0, 0, 2],
            vec![0, 0, 1, 0, 0, 0, 0],
            vec![0, 0, 0, 1, 0, 0, 0],
            vec![0, 0, 0, 0, 1, 0, 0],
            vec![0, 0, 0, 0, 0, 1, 0],
            vec![-2, -2, 0, 0, 0, 0, 3],
        ]);
        assert_eq!(r7, expected);
        let r1 = reflection_in(&v(&[-1, 0, 0, 0, 0, 0, 0])).unwrap();
        assert_eq!(r1, LorentzMatrix::diag(&[-1, 1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn reflection_r22() {
        let r22 = reflection_in(&v(&[1, 1, 1, 1, 1, 0, 2])).unwrap();
        let expected = LorentzMatrix::from_i64_rows(&[
            vec![-1, -2, -2, -2, -2, 0, 4],
            vec![-2, -1, -2, -2, -2, 0, 4],
            vec![-2, -2, -1, -2, -2, 0, 4],
            vec![-2, -2, -2, -1, -2, 0, 4],
            vec![-2, -2, -2, -2, -1, 0, 4],
            vec![0, 0, 0, 0, 0, 1, 0],
            vec![-4, -4, -4, -4, -4, 0, 9],
        ]);
        assert_eq!(r22, expected);
        assert!(r22.is_positive_lorentzian());
        assert!(r22.mul(&r22).is_identity());
    }

    #[test]
    fn non_unit_rejected() {
        assert!(matches!(
            reflection_in(&v(&[1, 1, 1, 1])),
            Err(ExactError::NonUnitNormal(_))
        ));
    }

    #[test]
    fn time_reversal_is_not_positive() {
        let j = LorentzMatrix::form(7);
        assert!(j.is_form_preserving());
        assert!(!j.is_positive_lorentzian());
    }

    #[test]
    fn primitive_points() {
        let p = v(&[2, 2, 0, -4]).primitive_point().unwrap();
        assert_eq!(p, v(&[-1, -1, 0, 2]));
        assert!(LorentzVector::zero(3).primitive_point().is_err());
    }
}
