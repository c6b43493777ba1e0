use hyp6_coxeter::{matrix_abar, sigma_permutation};
use hyp6_exact::{reflection_in, SmallMatrix};
use hyp6_polytope::{build_polytope, build_q, k_matrix, FaceLattice, QPolytope, RightAngledPolytope};

use crate::PairingError;

/// Precomputed data for gluing eight copies of P⁶.
#[derive(Debug, Clone)]
pub struct P6Context {
    pub polytope: RightAngledPolytope,
    pub lattice: FaceLattice,
    /// Integral side normals of P⁶.
    pub normals: Vec<Vec<i64>>,
    /// Center w = (1,1,1,1,1,1,3).
    pub center: Vec<i64>,
    /// Reflections R_j in the sides of P⁶.
    pub reflections: Vec<SmallMatrix>,
    /// Āᵖ for p = 0..7.
    pub abar_powers: Vec<SmallMatrix>,
    /// σᵖ as permutations of the 27 sides, p = 0..7.
    pub sigma_powers: Vec<Vec<usize>>,
    steps: Vec<SmallMatrix>,
}

impl P6Context {
    pub fn new() -> Result<Self, PairingError> {
        let polytope = build_polytope(6)?;
        let lattice = FaceLattice::enumerate(&polytope)?;
        let abar = matrix_abar();
        let sigma = sigma_permutation(&abar, &polytope.normals)?;
        let mut sigma_powers = vec![(0..27).collect::<Vec<usize>>()];
        for p in 1..8 {
            let prev: &Vec<usize> = &sigma_powers[p - 1];
            sigma_powers.push(prev.iter().map(|&j| sigma[j]).collect());
        }
        let a = SmallMatrix::from_lorentz(&abar)?;
        let mut abar_powers = vec![SmallMatrix::identity(7)];
        for p in 1..8 {
            abar_powers.push(abar_powers[p - 1].mul(&a)?);
        }
        let reflections = polytope
            .normals
            .iter()
            .map(|u| SmallMatrix::from_lorentz(&reflection_in(u)?))
            .collect::<Result<Vec<_>, _>>()?;
        let mut steps = Vec::with_capacity(27 * 8);
        for r in &reflections {
            for p in 0..8 {
                steps.push(r.mul(&abar_powers[(8 - p) % 8])?);
            }
        }
        let normals = polytope
            .normals
            .iter()
            .map(|u| u.to_i64s().expect("P6 normals are small"))
            .collect();
        let center = hyp6_coxeter::simplex_generators(6)?
            .center()
            .to_i64s()
            .expect("small center");
        Ok(P6Context {
            polytope,
            lattice,
            normals,
            center,
            reflections,
            abar_powers,
            sigma_powers,
            steps,
        })
    }

    /// R_j Ā^{−p}: the placement of the neighbour across side j when the
    /// array entry there has power p.
    pub fn step(&self, side: usize, p: u8) -> &SmallMatrix {
        &self.steps[side * 8 + p as usize]
    }

    pub fn sigma_pow(&self, p: u8, side: usize) -> usize {
        self.sigma_powers[p as usize % 8][side]
    }

    /// Whether g maps P⁶ into the cube arrangement KP⁶, i.e. |g·w| = w.
    pub fn center_image_signs(&self, g: &SmallMatrix) -> Result<Option<u8>, PairingError> {
        let gw = g.apply(&self.center)?;
        let mut bits = 0u8;
        for (t, (&x, &c)) in gw.iter().zip(&self.center).enumerate() {
            if x.abs() != c {
                return Ok(None);
            }
            if x < 0 && t < 6 {
                bits |= 1 << t;
            }
        }
        Ok(Some(bits))
    }
}

/// Qⁿ together with reflections and sign changes as small matrices.
#[derive(Debug, Clone)]
pub struct QContext {
    pub q: QPolytope,
    pub lattice: FaceLattice,
    pub reflections: Vec<SmallMatrix>,
    /// K matrices indexed by the bit pattern.
    pub k_matrices: Vec<SmallMatrix>,
    /// Side permutation induced by each K element.
    pub k_actions: Vec<Vec<usize>>,
}

impl QContext {
    pub fn new(n: usize) -> Result<Self, PairingError> {
        let q = build_q(n)?;
        let lattice = FaceLattice::enumerate(&q.polytope)?;
        let reflections = q
            .polytope
            .normals
            .iter()
            .map(|u| SmallMatrix::from_lorentz(&reflection_in(u)?))
            .collect::<Result<Vec<_>, _>>()?;
        let k_matrices = (0u16..1 << n)
            .map(|k| SmallMatrix::from_lorentz(&k_matrix(n, k as u8)))
            .collect::<Result<Vec<_>, _>>()?;
        let k_actions = (0u16..1 << n).map(|k| q.k_action(k as u8)).collect();
        Ok(QContext {
            q,
            lattice,
            reflections,
            k_matrices,
            k_actions,
        })
    }

    pub fn dim(&self) -> usize {
        self.q.dim()
    }
}
