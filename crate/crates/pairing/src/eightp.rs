use std::fmt;

use hyp6_exact::SmallMatrix;

use crate::cycles::{CornerGluing, Crossing};
use crate::{P6Context, PairingError};

pub const COPIES: usize = 8;
pub const SIDES: usize = 27;

/// A side-pairing of eight copies of P⁶. Entry (i, j) = (k, p) glues side
/// j of copy i to side σᵖ(j) of copy k by Āᵖ R_j. Indices are 0-based;
/// the text format is 1-based in the copy index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EightPPairing {
    entries: Vec<(u8, u8)>,
}

impl EightPPairing {
    /// Build without checking the involution law (for fault injection and
    /// mutation experiments). Panics unless there are 8·27 entries.
    pub fn from_entries_unchecked(entries: Vec<(u8, u8)>) -> Self {
        assert_eq!(entries.len(), COPIES * SIDES, "8 rows of 27 entries");
        EightPPairing { entries }
    }

    pub fn entry(&self, copy: usize, side: usize) -> (u8, u8) {
        self.entries[copy * SIDES + side]
    }

    pub fn set_entry(&mut self, copy: usize, side: usize, value: (u8, u8)) {
        self.entries[copy * SIDES + side] = value;
    }

    pub fn entries(&self) -> &[(u8, u8)] {
        &self.entries
    }

    /// Entry (k, σᵖ(j)) must be (i, −p mod 8).
    pub fn check_involution(&self, ctx: &P6Context) -> Result<(), PairingError> {
        for i in 0..COPIES {
            for j in 0..SIDES {
                let (k, p) = self.entry(i, j);
                let back = self.entry(k as usize, ctx.sigma_pow(p, j));
                if back != (i as u8, (8 - p) % 8) {
                    return Err(PairingError::InvolutionViolation { i, j });
                }
            }
        }
        Ok(())
    }

    /// Set entry (i, j) and its partner so the involution law holds there.
    pub fn set_pair(&mut self, ctx: &P6Context, copy: usize, side: usize, value: (u8, u8)) {
        let (k, p) = value;
        self.set_entry(copy, side, value);
        self.set_entry(k as usize, ctx.sigma_pow(p, side), (copy as u8, (8 - p) % 8));
    }

    /// Replace entry (i, j) by `value` and repair the involution law: the
    /// new partner slot points back, and the two slots left dangling are
    /// paired with each other. Returns `None` when the replacement is a
    /// no-op or touches its own partner slots.
    pub fn with_mutation(
        &self,
        ctx: &P6Context,
        copy: usize,
        side: usize,
        value: (u8, u8),
    ) -> Option<EightPPairing> {
        let old = self.entry(copy, side);
        if old == value {
            return None;
        }
        let partner = |(c, s): (usize, usize)| {
            let (k, p) = self.entry(c, s);
            (k as usize, ctx.sigma_pow(p, s))
        };
        let new_slot = (value.0 as usize, ctx.sigma_pow(value.1, side));
        let a = partner((copy, side));
        let b = partner(new_slot);
        let touched = [(copy, side), new_slot];
        if touched.contains(&a) || touched.contains(&b) {
            return None;
        }
        let mut out = self.clone();
        out.set_pair(ctx, copy, side, value);
        let q = (0..8u8).find(|&q| {
            ctx.sigma_pow(q, a.1) == b.1 && (a != b || q == (8 - q) % 8)
        })?;
        out.set_pair(ctx, a.0, a.1, (b.0 as u8, q));
        out.check_involution(ctx).ok()?;
        Some(out)
    }

    pub fn gluing<'a>(&self, ctx: &'a P6Context) -> EightPGluing<'a> {
        EightPGluing {
            ctx,
            entries: self.entries.iter().copied().map(Some).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for EightPPairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..COPIES {
            let row: Vec<String> = (0..SIDES)
                .map(|j| {
                    let (k, p) = self.entry(i, j);
                    format!("{}^{}", k + 1, p)
                })
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Parse 8 rows of 27 `k^p` tokens (k in 1..8, p in 0..7). Lines starting
/// with `#` and blank lines are skipped.
pub fn parse_8p_pairing(text: &str, ctx: &P6Context) -> Result<EightPPairing, PairingError> {
    let rows: Vec<Vec<&str>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split_whitespace().collect())
        .collect();
    if rows.len() != COPIES || rows.iter().any(|r| r.len() != SIDES) {
        let bad_row = rows.iter().position(|r| r.len() != SIDES).unwrap_or(rows.len());
        return Err(PairingError::BadShape {
            rows: rows.len(),
            bad_row: bad_row + 1,
            cols: rows.get(bad_row).map_or(0, Vec::len),
        });
    }
    let mut entries = Vec::with_capacity(COPIES * SIDES);
    for (r, row) in rows.iter().enumerate() {
        for (c, tok) in row.iter().enumerate() {
            let malformed = || PairingError::MalformedToken {
                row: r + 1,
                col: c + 1,
                token: tok.to_string(),
            };
            let (ks, ps) = tok.split_once('^').ok_or_else(malformed)?;
            let k: u32 = ks.parse().map_err(|_| malformed())?;
            let p: u32 = ps.parse().map_err(|_| malformed())?;
            if !(1..=8).contains(&k) {
                return Err(PairingError::PolytopeIndex { row: r + 1, col: c + 1, k });
            }
            if p > 7 {
                return Err(PairingError::Power { row: r + 1, col: c + 1, p });
            }
            entries.push(((k - 1) as u8, p as u8));
        }
    }
    let pairing = EightPPairing { entries };
    pairing.check_involution(ctx)?;
    Ok(pairing)
}

/// A possibly partial 8P⁶ gluing; unassigned entries are `None`.
#[derive(Debug, Clone)]
pub struct EightPGluing<'a> {
    pub ctx: &'a P6Context,
    pub entries: Vec<Option<(u8, u8)>>,
}

impl CornerGluing for EightPGluing<'_> {
    fn copies(&self) -> usize {
        COPIES
    }

    fn cross(&self, copy: usize, side: usize) -> Option<Crossing<'_>> {
        let (k, p) = self.entries[copy * SIDES + side]?;
        Some(Crossing {
            copy: k as usize,
            step: self.ctx.step(side, p),
            side_map: &self.ctx.sigma_powers[p as usize],
        })
    }
}

impl EightPGluing<'_> {
    /// The gluing map Āᵖ R_j = R_{σᵖ(j)} Āᵖ for entry (i, j).
    pub fn transformation(&self, copy: usize, side: usize) -> Option<SmallMatrix> {
        let (_, p) = self.entries[copy * SIDES + side]?;
        self.ctx.abar_powers[p as usize]
            .mul(&self.ctx.reflections[side])
            .ok()
    }
}
