use hyp6_exact::{Gf2Matrix, Gf2Vector};
use hyp6_pairing::PairingCode;

use crate::VerifyError;

/// The 6×27 matrix whose column j is e_j for j ≤ 6 and the bit vector of
/// digit j−6 otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeMatrix {
    pub matrix: Gf2Matrix,
    pub code: PairingCode,
}

impl CodeMatrix {
    /// Column j, 0-based.
    pub fn column(&self, j: usize) -> Gf2Vector {
        self.matrix.column(j)
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        self.matrix.to_u8_rows()
    }
}

pub fn build_code_matrix(code: &PairingCode) -> Result<CodeMatrix, VerifyError> {
    if code.dim != 6 || code.digits.len() != 21 {
        return Err(VerifyError::CodeDimension(code.dim));
    }
    let mut columns: Vec<Gf2Vector> = (0..6).map(|i| Gf2Vector::unit(6, i)).collect();
    for k in &code.digits {
        let bits: Vec<bool> = (0..6).map(|t| k.value >> t & 1 == 1).collect();
        columns.push(Gf2Vector::from_bits(&bits));
    }
    Ok(CodeMatrix {
        matrix: Gf2Matrix::from_columns(&columns)?,
        code: code.clone(),
    })
}
