use std::fmt;

use num_traits::ToPrimitive;

use crate::{ExactError, LorentzMatrix, LorentzVector};

/// Square `i64` matrix with overflow-checked arithmetic.
///
/// Used where many products of small matrices are formed (group closure,
/// developments, corner cycles). Every operation that could overflow
/// returns `ExactError::Overflow` instead of wrapping.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallMatrix {
    size: usize,
    entries: Vec<i64>,
}

impl SmallMatrix {
    pub fn identity(size: usize) -> Self {
        let mut entries = vec![0; size * size];
        for i in 0..size {
            entries[i * size + i] = 1;
        }
        SmallMatrix { size, entries }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, ExactError> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(ExactError::NotSquare);
        }
        Ok(SmallMatrix {
            size,
            entries: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn from_lorentz(m: &LorentzMatrix) -> Result<Self, ExactError> {
        let size = m.size();
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(m.get(i, j).to_i64().ok_or(ExactError::Overflow)?);
            }
        }
        Ok(SmallMatrix { size, entries })
    }

    pub fn to_lorentz(&self) -> LorentzMatrix {
        LorentzMatrix::from_i64_rows(&self.rows())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.size + j]
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        if self.size != other.size {
            return Err(ExactError::DimensionMismatch(self.size, other.size));
        }
        let n = self.size;
        let mut entries = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.entries[k * n + j];
                    if b == 0 {
                        continue;
                    }
                    let t = a.checked_mul(b).ok_or(ExactError::Overflow)?;
                    let e = &mut entries[i * n + j];
                    *e = e.checked_add(t).ok_or(ExactError::Overflow)?;
                }
            }
        }
        Ok(SmallMatrix { size: n, entries })
    }

    pub fn apply(&self, v: &[i64]) -> Result<Vec<i64>, ExactError> {
        if v.len() != self.size {
            return Err(ExactError::DimensionMismatch(self.size, v.len()));
        }
        let n = self.size;
        let mut out = vec![0i64; n];
        for (i, o) in out.iter_mut().enumerate() {
            for (j, &x) in v.iter().enumerate() {
                let t = self.entries[i * n + j]
                    .checked_mul(x)
                    .ok_or(ExactError::Overflow)?;
                *o = o.checked_add(t).ok_or(ExactError::Overflow)?;
            }
        }
        Ok(out)
    }

    pub fn apply_vector(&self, v: &LorentzVector) -> Result<LorentzVector, ExactError> {
        let xs = v.to_i64s().ok_or(ExactError::Overflow)?;
        Ok(LorentzVector::from_i64(&self.apply(&xs)?))
    }

    pub fn transpose(&self) -> Self {
        let n = self.size;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        SmallMatrix { size: n, entries }
    }

    /// J Mᵀ J, the inverse when M preserves the Lorentz form.
    pub fn lorentz_inverse(&self) -> Self {
        let n = self.size;
        let mut t = self.transpose();
        for i in 0..n {
            for j in 0..n {
                if (i == n - 1) != (j == n - 1) {
                    t.entries[i * n + j] = -t.entries[i * n + j];
                }
            }
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        let n = self.size;
        self.entries
            .iter()
            .enumerate()
            .all(|(k, &x)| x == i64::from(k / n == k % n))
    }

    pub fn pow(&self, e: u32) -> Result<Self, ExactError> {
        let mut acc = Self::identity(self.size);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for SmallMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_lorentz().fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_inverse() {
        let r7 = SmallMatrix::from_rows(&[
            vec![-1, -2, 0, 0, 0, 0, 2],
            vec![-2, -1, 0, 0, 0, 0, 2],
            vec![0, 0, 1, 0, 0, 0, 0],
            vec![0, 0, 0, 1, 0, 0, 0],
            vec![0, 0, 0, 0, 1, 0, 0],
            vec![0, 0, 0, 0, 0, 1, 0],
            vec![-2, -2, 0, 0, 0, 0, 3],
        ])
        .unwrap();
        assert_eq!(SmallMatrix::from_lorentz(&r7.to_lorentz()).unwrap(), r7);
        assert!(r7.mul(&r7.lorentz_inverse()).unwrap().is_identity());
        assert_eq!(r7.lorentz_inverse(), r7);
    }

    #[test]
    fn overflow_is_reported() {
        let big = SmallMatrix::from_rows(&[vec![i64::MAX, 0], vec![0, 1]]).unwrap();
        assert_eq!(big.mul(&big), Err(ExactError::Overflow));
    }
}
