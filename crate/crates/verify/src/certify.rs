use hyp6_coxeter::constants;
use hyp6_data::DataSet;
use hyp6_pairing::{
    decode_q_code, develop_to_q, orientability_of_code, parse_8p_pairing, EightPPairing, P6Context, PairingCode,
    QContext,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::{
    build_code_matrix, coset_check, face_cycles_proper, orbit_certify, sigma_star_on_v, torsion_free_h,
    CosetCertificate, HCertificate, OrbitCertificate, PropernessCertificate, TorsionMode, VerifyError,
};

pub struct VerifyContext {
    pub p6: P6Context,
    pub q6: QContext,
}

impl VerifyContext {
    pub fn new() -> Result<Self, VerifyError> {
        Ok(VerifyContext {
            p6: P6Context::new()?,
            q6: QContext::new(6)?,
        })
    }
}

/// χ(Γ⁶) → χ(Γ₂⁶) → χ(H) → χ(M): multiply by the index 51840, then the
/// index 64 of H, then divide by the 8 copies of Q⁶ per copy of 8P⁶.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChiChain {
    pub chi_gamma: String,
    pub chi_gamma2: String,
    pub chi_h: String,
    pub chi_manifold: String,
    pub steps: Vec<String>,
}

pub fn euler_characteristic_chain(h_index: u64) -> Result<ChiChain, VerifyError> {
    let c = constants(6)?;
    let chi_gamma2 = &c.euler_char_gamma * BigRational::from_integer(c.index_gamma2.clone());
    let chi_h = &chi_gamma2 * BigRational::from_integer(BigInt::from(h_index));
    let chi_m = &chi_h / BigRational::from_integer(BigInt::from(8));
    Ok(ChiChain {
        chi_gamma: c.euler_char_gamma.to_string(),
        chi_gamma2: chi_gamma2.to_string(),
        chi_h: chi_h.to_string(),
        chi_manifold: chi_m.to_string(),
        steps: vec![
            format!("chi(Gamma2) = {} * {} = {}", c.index_gamma2, c.euler_char_gamma, chi_gamma2),
            format!("chi(H) = {h_index} * {chi_gamma2} = {chi_h}"),
            format!("chi(M) = {chi_h} / 8 = {chi_m}"),
        ],
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ManifoldCertificate {
    pub id: Option<usize>,
    pub code: String,
    /// Face cycles of the 8P⁶ array, when one is given.
    pub properness_8p: Option<PropernessCertificate>,
    /// Face cycles of the Q⁶ pairing decoded from the code.
    pub properness_q: PropernessCertificate,
    pub h: HCertificate,
    pub cosets: CosetCertificate,
    pub orbit_system: Option<OrbitCertificate>,
    /// Set when σ★ does not preserve V.
    pub orbit_error: Option<String>,
    pub orientable: bool,
    pub chi: ChiChain,
}

impl ManifoldCertificate {
    /// Geometric properness decides torsion-freeness of the pairing group.
    pub fn proper(&self) -> bool {
        self.properness_q.proper && self.properness_8p.as_ref().map_or(true, |p| p.proper)
    }

    pub fn passes(&self) -> bool {
        self.proper() && self.h.h_torsion_free && self.cosets.index == 64 && self.chi.chi_manifold == "-1"
    }
}

/// Bundle every certificate for a code and optionally its 8P⁶ array. The
/// array must develop to the code.
pub fn certify(
    code: &PairingCode,
    array: Option<&EightPPairing>,
    ctx: &VerifyContext,
) -> Result<ManifoldCertificate, VerifyError> {
    let properness_8p = match array {
        Some(a) => {
            let dev = develop_to_q(a, &ctx.p6)?;
            if dev.code != *code {
                return Err(VerifyError::Mismatch {
                    what: "developed code".to_string(),
                    expected: code.to_string(),
                    got: dev.code.to_string(),
                });
            }
            Some(face_cycles_proper(&a.gluing(&ctx.p6), &ctx.p6.lattice)?)
        }
        None => None,
    };
    let q = decode_q_code(code, &ctx.q6)?;
    let properness_q = face_cycles_proper(&q.gluing(&ctx.q6), &ctx.q6.lattice)?;
    let c = build_code_matrix(code)?;
    let h = torsion_free_h(&c, &ctx.p6, TorsionMode::Full);
    let cosets = coset_check(&c);
    let sigma = &ctx.p6.sigma_powers[1];
    let (orbit_system, orbit_error) = match sigma_star_on_v(&c, sigma) {
        Ok(s) => (Some(orbit_certify(&c, &s, sigma)?), None),
        Err(e @ VerifyError::NotInvariant(_)) => (None, Some(e.to_string())),
        Err(e) => return Err(e),
    };
    Ok(ManifoldCertificate {
        id: None,
        code: code.to_string(),
        properness_8p,
        properness_q,
        h,
        chi: euler_characteristic_chain(cosets.index)?,
        cosets,
        orbit_system,
        orbit_error,
        orientable: orientability_of_code(code),
    })
}

/// Certify one of the nine embedded manifolds.
pub fn certify_manifold(id: usize, ctx: &VerifyContext) -> Result<ManifoldCertificate, VerifyError> {
    if !(1..=9).contains(&id) {
        return Err(VerifyError::UnknownManifold(id));
    }
    let data = DataSet::embedded()?;
    let line = data
        .lines("table4.txt")?
        .into_iter()
        .map(|(_, l)| l)
        .find(|l| l.split_whitespace().next() == Some(&id.to_string()))
        .ok_or(VerifyError::UnknownManifold(id))?;
    let code = PairingCode::parse(line.split_whitespace().nth(1).unwrap_or(""), 6)?;
    let array = parse_8p_pairing(data.text(&DataSet::manifold_array_name(id))?, &ctx.p6)?;
    let mut cert = certify(&code, Some(&array), ctx)?;
    cert.id = Some(id);
    Ok(cert)
}
