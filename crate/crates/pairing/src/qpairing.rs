use hyp6_exact::SmallMatrix;

use crate::cycles::{CornerGluing, Crossing};
use crate::{KElement, PairingCode, PairingError, QContext};

/// An explicit side-pairing of Qⁿ: side i is glued to side `partner[i]`
/// by `transforms[i] = s_i k_i`, which maps the partner side onto side i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSidePairing {
    pub dim: usize,
    pub partner: Vec<usize>,
    pub k: Vec<KElement>,
    pub transforms: Vec<SmallMatrix>,
}

/// Expand a code into the pairing s_i k_i on every side of Qⁿ, where k_i
/// is the digit of the base side of side i.
pub fn decode_q_code(code: &PairingCode, ctx: &QContext) -> Result<QSidePairing, PairingError> {
    let n = ctx.dim();
    if code.dim != n {
        return Err(PairingError::UnsupportedDimension(code.dim));
    }
    let mut partner = Vec::new();
    let mut ks = Vec::new();
    let mut transforms = Vec::new();
    for (i, side) in ctx.q.sides.iter().enumerate() {
        let k = code.digits[side.base_side - n];
        partner.push(ctx.k_actions[k.value as usize][i]);
        ks.push(k);
        transforms.push(ctx.reflections[i].mul(&ctx.k_matrices[k.value as usize])?);
    }
    let pairing = QSidePairing {
        dim: n,
        partner,
        k: ks,
        transforms,
    };
    pairing.check(ctx)?;
    Ok(pairing)
}

fn normal(ctx: &QContext, i: usize) -> Vec<i64> {
    ctx.q.polytope.normals[i]
        .to_i64s()
        .expect("Q normals are small")
}

impl QSidePairing {
    /// Involution and equivariance: i'' = i, g_{i'} = g_i⁻¹, and g_i maps
    /// the outward normal of side i' to the inward normal of side i.
    pub fn check(&self, ctx: &QContext) -> Result<(), PairingError> {
        let m = ctx.q.num_sides();
        if self.partner.len() != m || self.transforms.len() != m || self.k.len() != m {
            return Err(PairingError::WrongLength {
                expected: m,
                got: self.partner.len(),
            });
        }
        let bad = |side: usize, what: &str| PairingError::BadQPairing {
            side,
            what: what.to_string(),
        };
        for i in 0..m {
            let j = self.partner[i];
            if j >= m {
                return Err(PairingError::PartnerLookup(i));
            }
            if self.partner[j] != i {
                return Err(bad(i, "partner map is not an involution"));
            }
            if !self.transforms[j].mul(&self.transforms[i])?.is_identity() {
                return Err(bad(i, "paired transformations are not mutually inverse"));
            }
            let image = self.transforms[i].apply(&normal(ctx, j))?;
            let target: Vec<i64> = normal(ctx, i).iter().map(|x| -x).collect();
            if image != target {
                return Err(bad(i, "transformation does not carry the partner side onto this side"));
            }
        }
        Ok(())
    }

    /// Read the code back; all sides over one base side must agree.
    pub fn to_code(&self, ctx: &QContext) -> Result<PairingCode, PairingError> {
        let n = ctx.dim();
        let mut digits: Vec<Option<KElement>> = vec![None; ctx.q.base.num_sides() - n];
        for (i, side) in ctx.q.sides.iter().enumerate() {
            let slot = &mut digits[side.base_side - n];
            match slot {
                Some(k) if *k != self.k[i] => {
                    return Err(PairingError::InconsistentDigit {
                        base: side.base_side,
                        a: k.value,
                        b: self.k[i].value,
                    })
                }
                _ => *slot = Some(self.k[i]),
            }
        }
        let digits = digits
            .into_iter()
            .enumerate()
            .map(|(d, k)| k.ok_or(PairingError::MissingDigit(d + n)))
            .collect::<Result<Vec<_>, _>>()?;
        PairingCode::from_digits(n, digits)
    }

    pub fn gluing<'a>(&'a self, ctx: &'a QContext) -> QGluing<'a> {
        QGluing { pairing: self, ctx }
    }
}

pub struct QGluing<'a> {
    pairing: &'a QSidePairing,
    ctx: &'a QContext,
}

impl CornerGluing for QGluing<'_> {
    fn copies(&self) -> usize {
        1
    }

    fn cross(&self, _copy: usize, side: usize) -> Option<Crossing<'_>> {
        Some(Crossing {
            copy: 0,
            step: &self.pairing.transforms[side],
            side_map: &self.ctx.k_actions[self.pairing.k[side].value as usize],
        })
    }
}
