use std::fmt;

use hyp6_exact::{invariant_factors_sparse, BigInt, SparseIntMatrix};
use num_traits::{One, ToPrimitive};
use serde::Serialize;

/// ℤ^rank ⊕ ⨁ ℤ/t.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub rank: usize,
    /// Torsion coefficients, ascending.
    pub torsion: Vec<u64>,
}

impl HomologyGroup {
    pub fn free(rank: usize) -> Self {
        HomologyGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn count(&self, t: u64) -> usize {
        self.torsion.iter().filter(|&&x| x == t).count()
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.rank > 0 {
            parts.push(if self.rank == 1 {
                "Z".to_string()
            } else {
                format!("Z^{}", self.rank)
            });
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let t = self.torsion[i];
            let n = self.count(t);
            parts.push(if n == 1 { format!("Z/{t}") } else { format!("(Z/{t})^{n}") });
            i += n;
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// H₀, H₁, … of a chain complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyGroups {
    pub groups: Vec<HomologyGroup>,
}

impl HomologyGroups {
    pub fn get(&self, d: usize) -> Option<&HomologyGroup> {
        self.groups.get(d)
    }

    /// Σ (−1)^d rank H_d.
    pub fn euler_characteristic(&self) -> i64 {
        self.groups
            .iter()
            .enumerate()
            .map(|(d, g)| if d % 2 == 0 { g.rank as i64 } else { -(g.rank as i64) })
            .sum()
    }

    /// Digits (rank, #ℤ/2, #ℤ/4, #ℤ/8) for each of H₁..H₅, space separated.
    /// None if some torsion coefficient is not 2, 4 or 8 or a count exceeds 9.
    pub fn table4_encoding(&self) -> Option<String> {
        self.encode(&[2, 4, 8])
    }

    /// Digits (rank, #ℤ/2, #ℤ/4) for each of H₁..H₅.
    pub fn table7_encoding(&self) -> Option<String> {
        self.encode(&[2, 4])
    }

    fn encode(&self, orders: &[u64]) -> Option<String> {
        let mut words = Vec::new();
        for d in 1..=5 {
            let g = self.groups.get(d).cloned().unwrap_or_else(|| HomologyGroup::free(0));
            if g.torsion.iter().any(|t| !orders.contains(t)) {
                return None;
            }
            let mut w = String::new();
            for n in std::iter::once(g.rank).chain(orders.iter().map(|&t| g.count(t))) {
                w.push(char::from_digit(u32::try_from(n).ok()?, 10)?);
            }
            words.push(w);
        }
        Some(words.join(" "))
    }
}

impl fmt::Display for HomologyGroups {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.groups.iter().enumerate().map(|(d, g)| format!("H{d} = {g}")).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Homology of a chain complex with `counts[d]` cells in degree d and
/// `boundaries[d-1]` the matrix of ∂_d (rows: d-cells, columns: (d−1)-cells).
pub fn homology_groups(counts: &[usize], boundaries: &[SparseIntMatrix]) -> HomologyGroups {
    let factors: Vec<Vec<BigInt>> = boundaries.iter().map(invariant_factors_sparse).collect();
    let rank = |d: usize| -> usize {
        if d == 0 || d > factors.len() {
            0
        } else {
            factors[d - 1].len()
        }
    };
    let groups = (0..counts.len())
        .map(|d| HomologyGroup {
            rank: counts[d] - rank(d) - rank(d + 1),
            torsion: if d < factors.len() {
                factors[d]
                    .iter()
                    .filter(|x| !x.is_one())
                    .map(|x| x.to_u64().expect("torsion coefficient fits in u64"))
                    .collect()
            } else {
                Vec::new()
            },
        })
        .collect();
    HomologyGroups { groups }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix(rows: usize, cols: usize, entries: &[(usize, usize, i64)]) -> SparseIntMatrix {
        let mut m = SparseIntMatrix::new(rows, cols);
        for &(i, j, x) in entries {
            m.add_entry(i, j, BigInt::from(x));
        }
        m
    }

    #[test]
    fn circle() {
        // one vertex, one loop
        let h = homology_groups(&[1, 1], &[matrix(1, 1, &[])]);
        assert_eq!(h.groups, vec![HomologyGroup::free(1), HomologyGroup::free(1)]);
        assert_eq!(h.euler_characteristic(), 0);
    }

    #[test]
    fn projective_plane() {
        // v; a; one 2-cell attached along a·a
        let h = homology_groups(&[1, 1, 1], &[matrix(1, 1, &[]), matrix(1, 1, &[(0, 0, 2)])]);
        assert_eq!(h.groups[1], HomologyGroup { rank: 0, torsion: vec![2] });
        assert!(h.groups[2].is_trivial());
        assert_eq!(h.to_string(), "H0 = Z, H1 = Z/2, H2 = 0");
    }

    #[test]
    fn encodings() {
        let h = HomologyGroups {
            groups: vec![
                HomologyGroup::free(1),
                HomologyGroup { rank: 0, torsion: vec![2, 2, 2, 2, 8] },
                HomologyGroup { rank: 1, torsion: vec![2, 2, 2, 2, 2, 2, 2, 2, 4] },
                HomologyGroup::free(5),
            ],
        };
        assert_eq!(h.table4_encoding().unwrap(), "0401 1810 5000 0000 0000");
        assert_eq!(h.table7_encoding(), None);
    }
}
