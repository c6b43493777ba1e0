use std::fmt;

use hyp6_exact::LorentzMatrix;

use crate::PairingError;

pub const ALPHABET: &[u8; 64] = b"0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz@$";

/// A diagonal sign change diag(a₁,…,a_n,1). Bit i−1 of `value` is set iff
/// a_i = −1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KElement {
    pub dim: usize,
    pub value: u8,
}

impl KElement {
    pub fn identity(dim: usize) -> Self {
        KElement { dim, value: 0 }
    }

    pub fn from_signs(signs: &[i8]) -> Self {
        let value = signs
            .iter()
            .enumerate()
            .filter(|(_, &s)| s < 0)
            .fold(0u8, |v, (i, _)| v | 1 << i);
        KElement {
            dim: signs.len(),
            value,
        }
    }

    pub fn signs(&self) -> Vec<i8> {
        (0..self.dim)
            .map(|i| if self.value >> i & 1 == 1 { -1 } else { 1 })
            .collect()
    }

    pub fn matrix(&self) -> LorentzMatrix {
        let mut d: Vec<i64> = self.signs().into_iter().map(i64::from).collect();
        d.push(1);
        LorentzMatrix::diag(&d)
    }

    pub fn negations(&self) -> u32 {
        self.value.count_ones()
    }

    pub fn reverses_orientation(&self) -> bool {
        self.negations() % 2 == 1
    }

    pub fn compose(&self, other: &Self) -> Self {
        KElement {
            dim: self.dim,
            value: self.value ^ other.value,
        }
    }
}

pub fn decode_digit(c: char, dim: usize) -> Result<KElement, PairingError> {
    let value = ALPHABET
        .iter()
        .position(|&a| a as char == c)
        .ok_or(PairingError::InvalidDigit(c))? as u8;
    if dim < 8 && u32::from(value) >= 1 << dim {
        return Err(PairingError::DigitOutOfRange {
            digit: c,
            value,
            dim,
        });
    }
    Ok(KElement { dim, value })
}

pub fn encode_digit(k: &KElement) -> char {
    ALPHABET[k.value as usize] as char
}

/// Number of code digits for Qⁿ: one per non-coordinate side of Pⁿ.
fn code_length(dim: usize) -> Result<usize, PairingError> {
    match dim {
        5 => Ok(11),
        6 => Ok(21),
        d => Err(PairingError::UnsupportedDimension(d)),
    }
}

/// A simple side-pairing code of Qⁿ, one digit per base side.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairingCode {
    pub dim: usize,
    pub digits: Vec<KElement>,
}

impl PairingCode {
    pub fn parse(s: &str, dim: usize) -> Result<Self, PairingError> {
        let expected = code_length(dim)?;
        let got = s.chars().count();
        if got != expected {
            return Err(PairingError::WrongLength { expected, got });
        }
        let digits = s
            .chars()
            .map(|c| decode_digit(c, dim))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PairingCode { dim, digits })
    }

    pub fn from_digits(dim: usize, digits: Vec<KElement>) -> Result<Self, PairingError> {
        let expected = code_length(dim)?;
        if digits.len() != expected {
            return Err(PairingError::WrongLength {
                expected,
                got: digits.len(),
            });
        }
        Ok(PairingCode { dim, digits })
    }

    pub fn trivial(dim: usize) -> Result<Self, PairingError> {
        Ok(PairingCode {
            dim,
            digits: vec![KElement::identity(dim); code_length(dim)?],
        })
    }
}

impl fmt::Display for PairingCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in &self.digits {
            write!(f, "{}", encode_digit(k))?;
        }
        Ok(())
    }
}

/// Every pairing map sᵢkᵢ preserves orientation iff every kᵢ reverses it.
pub fn orientability_of_code(code: &PairingCode) -> bool {
    code.digits.iter().all(KElement::reverses_orientation)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table8_samples() {
        assert_eq!(decode_digit('M', 6).unwrap().signs(), vec![1, -1, -1, 1, -1, 1]);
        assert_eq!(decode_digit('0', 6).unwrap().signs(), vec![1; 6]);
        assert_eq!(decode_digit('$', 6).unwrap().signs(), vec![-1; 6]);
        assert!(matches!(decode_digit('%', 6), Err(PairingError::InvalidDigit('%'))));
        assert!(matches!(decode_digit('W', 5), Err(PairingError::DigitOutOfRange { .. })));
    }

    #[test]
    fn round_trip() {
        for (i, &c) in ALPHABET.iter().enumerate() {
            let k = decode_digit(c as char, 6).unwrap();
            assert_eq!(k.value as usize, i);
            assert_eq!(encode_digit(&k), c as char);
            assert_eq!(KElement::from_signs(&k.signs()), k);
        }
    }

    #[test]
    fn codes() {
        let c = PairingCode::parse("MVStfMSJGgJgWDtD2fV84", 6).unwrap();
        assert_eq!(c.to_string(), "MVStfMSJGgJgWDtD2fV84");
        assert!(orientability_of_code(&c));
        assert!(!orientability_of_code(&PairingCode::parse("k14ONEJdN8ZEdWGYIP1l2", 6).unwrap()));
        assert!(!orientability_of_code(&PairingCode::trivial(6).unwrap()));
        assert!(matches!(
            PairingCode::parse("MVS", 6),
            Err(PairingError::WrongLength { expected: 21, got: 3 })
        ));
    }
}
