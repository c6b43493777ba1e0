use std::collections::{HashMap, HashSet, VecDeque};

use hyp6_exact::{LorentzMatrix, LorentzVector, SmallMatrix};

use crate::simplex::{sigma_generator_indices, simplex_generators};
use crate::CoxeterError;

/// Closure of `seeds` under `gens`, sorted lexicographically.
///
/// Images of primitive vectors under integral unimodular matrices stay
/// primitive, so no rescaling is needed.
pub fn group_orbit(
    gens: &[LorentzMatrix],
    seeds: &[LorentzVector],
    bound: usize,
) -> Result<Vec<LorentzVector>, CoxeterError> {
    for (k, g) in gens.iter().enumerate() {
        if !g.is_form_preserving() {
            return Err(CoxeterError::NotFormPreserving(k + 1));
        }
    }
    let mut seen: HashSet<LorentzVector> = HashSet::new();
    let mut queue = VecDeque::new();
    for s in seeds {
        let s = s.primitive()?;
        if seen.insert(s.clone()) {
            queue.push_back(s);
        }
    }
    while let Some(v) = queue.pop_front() {
        for g in gens {
            let w = g.apply(&v);
            if !seen.contains(&w) {
                if seen.len() >= bound {
                    return Err(CoxeterError::OrbitBound(bound));
                }
                seen.insert(w.clone());
                queue.push_back(w);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// A finite matrix group enumerated by breadth-first closure.
#[derive(Debug, Clone)]
pub struct FiniteSymmetryGroup {
    pub dim: usize,
    /// 1-based simplex indices of the generators, when built from Δⁿ.
    pub generator_indices: Vec<usize>,
    generators: Vec<SmallMatrix>,
    elements: Vec<SmallMatrix>,
    lookup: HashMap<SmallMatrix, usize>,
    side_action: Option<Vec<Vec<usize>>>,
}

impl FiniteSymmetryGroup {
    /// Enumerate ⟨gens⟩; the identity is element 0.
    pub fn generate(
        dim: usize,
        generator_indices: Vec<usize>,
        gens: &[LorentzMatrix],
        bound: usize,
    ) -> Result<Self, CoxeterError> {
        let generators = gens
            .iter()
            .map(SmallMatrix::from_lorentz)
            .collect::<Result<Vec<_>, _>>()?;
        let id = SmallMatrix::identity(dim + 1);
        let mut elements = vec![id.clone()];
        let mut lookup = HashMap::from([(id, 0usize)]);
        let mut head = 0;
        while head < elements.len() {
            let g = elements[head].clone();
            head += 1;
            for s in &generators {
                let h = g.mul(s)?;
                if !lookup.contains_key(&h) {
                    if elements.len() >= bound {
                        return Err(CoxeterError::GroupBound(bound));
                    }
                    lookup.insert(h.clone(), elements.len());
                    elements.push(h);
                }
            }
        }
        Ok(FiniteSymmetryGroup {
            dim,
            generator_indices,
            generators,
            elements,
            lookup,
            side_action: None,
        })
    }

    /// Σⁿ generated by the simplex reflections of [`sigma_generator_indices`].
    pub fn sigma(n: usize, bound: usize) -> Result<Self, CoxeterError> {
        let data = simplex_generators(n)?;
        let idx = sigma_generator_indices(n)?;
        let gens: Vec<LorentzMatrix> = idx.iter().map(|&i| data.generator(i).clone()).collect();
        Self::generate(n, idx, &gens, bound)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> LorentzMatrix {
        self.elements[i].to_lorentz()
    }

    pub fn small_elements(&self) -> &[SmallMatrix] {
        &self.elements
    }

    pub fn generators(&self) -> &[SmallMatrix] {
        &self.generators
    }

    pub fn position(&self, m: &SmallMatrix) -> Option<usize> {
        self.lookup.get(m).copied()
    }

    pub fn contains(&self, m: &LorentzMatrix) -> bool {
        SmallMatrix::from_lorentz(m)
            .map(|s| self.lookup.contains_key(&s))
            .unwrap_or(false)
    }

    /// Closed under right multiplication by every generator, which for a
    /// finite set containing the identity means it is the generated group.
    pub fn is_closed(&self) -> bool {
        self.elements.iter().all(|g| {
            self.generators
                .iter()
                .all(|s| g.mul(s).map(|h| self.lookup.contains_key(&h)).unwrap_or(false))
        })
    }

    pub fn fixes(&self, v: &LorentzVector) -> bool {
        self.elements
            .iter()
            .all(|g| g.apply_vector(v).map(|w| &w == v).unwrap_or(false))
    }

    /// Record, for each element, the permutation it induces on `normals`.
    pub fn attach_side_action(&mut self, normals: &[LorentzVector]) -> Result<(), CoxeterError> {
        let index: HashMap<&LorentzVector, usize> =
            normals.iter().enumerate().map(|(i, u)| (u, i)).collect();
        let mut action = Vec::with_capacity(self.elements.len());
        for g in &self.elements {
            let mut perm = Vec::with_capacity(normals.len());
            for (i, u) in normals.iter().enumerate() {
                let w = g.apply_vector(u)?;
                perm.push(*index.get(&w).ok_or(CoxeterError::NotASymmetry(i + 1))?);
            }
            action.push(perm);
        }
        self.side_action = Some(action);
        Ok(())
    }

    pub fn side_action(&self) -> Option<&[Vec<usize>]> {
        self.side_action.as_deref()
    }
}
