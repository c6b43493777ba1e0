use std::collections::HashMap;

use hyp6_exact::SmallMatrix;

use crate::{EightPPairing, KElement, P6Context, PairingCode, PairingError};

/// A copy of P⁶ inside Q⁶: the placement g (with g·P⁶ = sign pattern `k`
/// applied to P⁶) and the label of the 8P⁶ copy it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Placement {
    pub k: u8,
    pub g: SmallMatrix,
    pub copy: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Development {
    /// Indexed by sign pattern, 64 entries.
    pub placements: Vec<Placement>,
    pub code: PairingCode,
}

fn reflection(u: &[i64]) -> Result<SmallMatrix, PairingError> {
    let size = u.len();
    let ju: Vec<i64> = (0..size)
        .map(|j| if j + 1 == size { -u[j] } else { u[j] })
        .collect();
    let rows: Vec<Vec<i64>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| i64::from(i == j) - 2 * u[i] * ju[j])
                .collect()
        })
        .collect();
    Ok(SmallMatrix::from_rows(&rows)?)
}

/// Develop 8P⁶ into H⁶ starting from copy 0 at the identity, keeping the
/// placements that land in Q⁶ = K⁶P⁶. The boundary crossings of Q⁶ then
/// determine the code digit of each base side.
pub fn develop_to_q(pairing: &EightPPairing, ctx: &P6Context) -> Result<Development, PairingError> {
    let mut slots: Vec<Option<(SmallMatrix, usize)>> = vec![None; 64];
    slots[0] = Some((SmallMatrix::identity(7), 0));
    let mut stack = vec![0u8];
    while let Some(key) = stack.pop() {
        let (g, copy) = slots[key as usize].clone().expect("placed");
        for j in 0..27 {
            let (k, p) = pairing.entry(copy, j);
            let h = g.mul(ctx.step(j, p))?;
            let Some(bits) = ctx.center_image_signs(&h)? else {
                continue;
            };
            match &slots[bits as usize] {
                Some((old, c)) if *old != h || *c != k as usize => {
                    return Err(PairingError::DevelopmentConflict { k: bits })
                }
                Some(_) => {}
                None => {
                    slots[bits as usize] = Some((h, k as usize));
                    stack.push(bits);
                }
            }
        }
    }
    let placed = slots.iter().filter(|s| s.is_some()).count();
    if placed != 64 {
        return Err(PairingError::IncompleteCover(placed));
    }
    let placements: Vec<Placement> = slots
        .into_iter()
        .enumerate()
        .map(|(k, s)| {
            let (g, copy) = s.expect("all placed");
            Placement { k: k as u8, g, copy }
        })
        .collect();

    let base_index: HashMap<&[i64], usize> = ctx
        .normals
        .iter()
        .enumerate()
        .map(|(i, u)| (u.as_slice(), i))
        .collect();
    let kmats: Vec<SmallMatrix> = (0..64u8)
        .map(|b| {
            let mut d: Vec<Vec<i64>> = vec![vec![0; 7]; 7];
            for (t, row) in d.iter_mut().enumerate() {
                row[t] = if t < 6 && b >> t & 1 == 1 { -1 } else { 1 };
            }
            SmallMatrix::from_rows(&d)
        })
        .collect::<Result<_, _>>()?;
    let mut digits: Vec<Option<u8>> = vec![None; 21];
    for pl in &placements {
        for j in 0..27 {
            let (k, p) = pairing.entry(pl.copy, j);
            let h = pl.g.mul(ctx.step(j, p))?;
            if ctx.center_image_signs(&h)?.is_some() {
                continue;
            }
            let un = pl.g.apply(&ctx.normals[j])?;
            let sm = reflection(&un)?;
            let mut found = Vec::new();
            for b in 0..64u8 {
                let target = &placements[(pl.k ^ b) as usize];
                if target.copy == k as usize && sm.mul(&kmats[b as usize])?.mul(&target.g)? == h {
                    found.push(b);
                }
            }
            if found.len() != 1 {
                return Err(PairingError::AmbiguousDigit {
                    k: pl.k,
                    side: j,
                    matches: found.len(),
                });
            }
            let key: Vec<i64> = un.iter().take(6).map(|x| x.abs()).chain([un[6]]).collect();
            let base = *base_index
                .get(key.as_slice())
                .ok_or(PairingError::PartnerLookup(j))?;
            let d = &mut digits[base - 6];
            match d {
                Some(a) if *a != found[0] => {
                    return Err(PairingError::InconsistentDigit {
                        base,
                        a: *a,
                        b: found[0],
                    })
                }
                _ => *d = Some(found[0]),
            }
        }
    }
    let digits = digits
        .into_iter()
        .enumerate()
        .map(|(i, d)| {
            d.map(|value| KElement { dim: 6, value })
                .ok_or(PairingError::MissingDigit(i + 6))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Development {
        placements,
        code: PairingCode::from_digits(6, digits)?,
    })
}
