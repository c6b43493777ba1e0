use hyp6_data::DataSet;
use hyp6_pairing::{parse_8p_pairing, EightPPairing, P6Context, PairingCode};
use serde::Serialize;

use crate::CliError;

/// One of the nine manifolds with everything it is expected to reproduce.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ManifoldRecord {
    pub id: usize,
    pub q6_code: String,
    /// The 8P⁶ array in its text form.
    pub array_8p: String,
    pub orientable: bool,
    pub cusps: usize,
    /// H₁..H₅ as four-digit words (rank, #ℤ/2, #ℤ/4, #ℤ/8).
    pub homology: String,
    /// Cusp cross-sections as "H1 H2 H3 H4 H5" with three-digit words,
    /// sorted.
    pub cusp_homology: Vec<String>,
}

impl ManifoldRecord {
    pub fn code(&self) -> Result<PairingCode, CliError> {
        Ok(PairingCode::parse(&self.q6_code, 6)?)
    }

    pub fn array(&self, ctx: &P6Context) -> Result<EightPPairing, CliError> {
        Ok(parse_8p_pairing(&self.array_8p, ctx)?)
    }
}

fn bad(id: usize, msg: impl Into<String>) -> CliError {
    CliError::Record { id, msg: msg.into() }
}

pub fn load_records(data: &DataSet) -> Result<Vec<ManifoldRecord>, CliError> {
    let mut out = Vec::new();
    let cusp_rows: Vec<Vec<&str>> = data
        .lines("table7.txt")?
        .into_iter()
        .map(|(_, l)| l.split_whitespace().collect())
        .collect();
    for (_, line) in data.lines("table4.txt")? {
        let w: Vec<&str> = line.split_whitespace().collect();
        let id: usize = w.first().and_then(|x| x.parse().ok()).ok_or_else(|| bad(0, line))?;
        if w.len() != 9 {
            return Err(bad(id, format!("expected 9 fields, got {}", w.len())));
        }
        let mut cusp_homology: Vec<String> = cusp_rows
            .iter()
            .filter(|r| r.first() == Some(&w[0]))
            .map(|r| r[2..].join(" "))
            .collect();
        cusp_homology.sort();
        out.push(ManifoldRecord {
            id,
            q6_code: w[1].to_string(),
            array_8p: data.text(&DataSet::manifold_array_name(id))?.to_string(),
            orientable: match w[2] {
                "1" => true,
                "0" => false,
                o => return Err(bad(id, format!("orientability flag {o}"))),
            },
            cusps: w[3].parse().map_err(|_| bad(id, "cusp count"))?,
            homology: w[4..].join(" "),
            cusp_homology,
        });
    }
    Ok(out)
}

pub fn record(data: &DataSet, id: usize) -> Result<ManifoldRecord, CliError> {
    load_records(data)?
        .into_iter()
        .find(|r| r.id == id)
        .ok_or_else(|| bad(id, "no such manifold"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_records() {
        let r = load_records(DataSet::embedded().unwrap()).unwrap();
        assert_eq!(r.len(), 9);
        assert_eq!(r[0].homology, "0401 1810 4531 5000 4000");
        assert_eq!(r[0].cusp_homology.len(), 5);
        assert!(r[0].orientable && !r[2].orientable);
        assert!(r.iter().all(|m| m.cusps == 5));
    }
}
