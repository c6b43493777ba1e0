use hyp6_exact::SmallMatrix;

use crate::{decode_q_code, KElement, PairingCode, PairingError, QContext, QSidePairing};

fn preserves_first_axis(g: &SmallMatrix) -> bool {
    let size = g.size();
    (1..size).all(|t| g.get(0, t) == 0 && g.get(t, 0) == 0) && g.get(0, 0).abs() == 1
}

fn drop_first(g: &SmallMatrix) -> Result<SmallMatrix, PairingError> {
    let rows: Vec<Vec<i64>> = g.rows().into_iter().skip(1).map(|r| r[1..].to_vec()).collect();
    Ok(SmallMatrix::from_rows(&rows)?)
}

/// Restrict a side-pairing of Q⁶ to the cross-section x₁ = 0, a copy of
/// Q⁵. Only the sides of Q⁶ perpendicular to e₁ meet the cross-section;
/// their pairing maps must preserve it.
pub fn restrict_pairing(
    pairing: &QSidePairing,
    q6: &QContext,
    q5: &QContext,
) -> Result<QSidePairing, PairingError> {
    let m5 = q5.q.num_sides();
    let mut partner = vec![usize::MAX; m5];
    let mut ks = vec![KElement::identity(5); m5];
    let mut transforms = vec![SmallMatrix::identity(6); m5];
    let mut covered = 0;
    let index5 = |i6: usize| -> Result<usize, PairingError> {
        let u = &q6.q.polytope.normals[i6];
        let v = hyp6_exact::LorentzVector::new(u.coords()[1..].to_vec())?;
        q5.q.polytope.normal_index(&v).ok_or(PairingError::PartnerLookup(i6))
    };
    for i in 0..q6.q.num_sides() {
        if !q6.q.polytope.normals[i].coords()[0].eq(&0.into()) {
            continue;
        }
        let g = &pairing.transforms[i];
        if !preserves_first_axis(g) {
            return Err(PairingError::InvarianceViolation(i));
        }
        let a = index5(i)?;
        partner[a] = index5(pairing.partner[i])?;
        ks[a] = KElement {
            dim: 5,
            value: pairing.k[i].value >> 1,
        };
        transforms[a] = drop_first(g)?;
        covered += 1;
    }
    if covered != m5 || partner.contains(&usize::MAX) {
        return Err(PairingError::WrongLength {
            expected: m5,
            got: covered,
        });
    }
    let restricted = QSidePairing {
        dim: 5,
        partner,
        k: ks,
        transforms,
    };
    restricted.check(q5)?;
    Ok(restricted)
}

pub fn restrict_code(
    code: &PairingCode,
    q6: &QContext,
    q5: &QContext,
) -> Result<PairingCode, PairingError> {
    restrict_pairing(&decode_q_code(code, q6)?, q6, q5)?.to_code(q5)
}
