use std::collections::BTreeMap;

use hyp6_exact::SmallMatrix;

use crate::cycles::{trace_face_cycles, trace_orbit};
use crate::eightp::{EightPGluing, COPIES, SIDES};
use crate::{EightPPairing, P6Context, PairingError};

/// Entries fixed in advance, as ((copy, side), (k, p)), all 0-based.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchConstraints {
    pub fixed: Vec<((usize, usize), (u8, u8))>,
}

impl SearchConstraints {
    pub fn fix_row(pairing: &EightPPairing, copy: usize) -> Self {
        SearchConstraints {
            fixed: (0..SIDES).map(|j| ((copy, j), pairing.entry(copy, j))).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Proper completions found, in discovery order.
    pub pairings: Vec<EightPPairing>,
    /// Candidate assignments tried.
    pub nodes: u64,
    pub budget_exhausted: bool,
    /// The stop predicate accepted a completion.
    pub stopped: bool,
    /// The constraints themselves violate the involution law.
    pub infeasible: bool,
}

struct Search<'a> {
    gluing: EightPGluing<'a>,
    /// Ridges on each side: the other side of every perpendicular pair.
    ridges: Vec<Vec<usize>>,
    /// Faces of dimension 0 and 1 containing each side.
    low_faces: Vec<Vec<usize>>,
    seen: BTreeMap<(usize, usize), SmallMatrix>,
    budget: u64,
    nodes: u64,
    exhausted: bool,
    found: Vec<EightPPairing>,
    stop: &'a dyn Fn(&EightPPairing) -> bool,
    stopped: bool,
}

fn slot(copy: usize, side: usize) -> usize {
    copy * SIDES + side
}

impl<'a> Search<'a> {
    fn ctx(&self) -> &'a P6Context {
        self.gluing.ctx
    }

    fn get(&self, copy: usize, side: usize) -> Option<(u8, u8)> {
        self.gluing.entries[slot(copy, side)]
    }

    /// Assign entry (i, j) and its partner; None if that contradicts an
    /// existing entry. Returns the slots newly written.
    fn assign(&mut self, i: usize, j: usize, (k, p): (u8, u8)) -> Option<Vec<usize>> {
        let back = (i as u8, (8 - p) % 8);
        let pj = self.ctx().sigma_pow(p, j);
        let (a, b) = (slot(i, j), slot(k as usize, pj));
        if a == b && back != (k, p) {
            return None;
        }
        let mut written = Vec::new();
        for (s, v) in [(a, (k, p)), (b, back)] {
            match self.gluing.entries[s] {
                Some(old) if old != v => {
                    for &w in &written {
                        self.gluing.entries[w] = None;
                    }
                    return None;
                }
                Some(_) => {}
                None => {
                    self.gluing.entries[s] = Some(v);
                    written.push(s);
                }
            }
        }
        Some(written)
    }

    fn unassign(&mut self, written: &[usize]) {
        for &s in written {
            self.gluing.entries[s] = None;
        }
    }

    /// Walk the cycle of ridge {j, b} of copy i. False if it closes with
    /// the wrong length or a nontrivial holonomy; true if it closes
    /// properly or runs into an unassigned entry.
    fn ridge_ok(&self, i: usize, j: usize, b: usize) -> bool {
        let ctx = self.ctx();
        let (mut c, mut x, mut y) = (i, j, b);
        let mut steps: Vec<(usize, u8)> = Vec::with_capacity(4);
        for n_steps in 1..=4 {
            let Some((k, p)) = self.get(c, x) else {
                return true;
            };
            steps.push((x, p));
            c = k as usize;
            let (x2, y2) = (ctx.sigma_pow(p, y), ctx.sigma_pow(p, x));
            x = x2;
            y = y2;
            let closed = c == i && ((x, y) == (j, b) || (x, y) == (b, j));
            if closed != (n_steps == 4) {
                return false;
            }
        }
        let mut h = SmallMatrix::identity(7);
        for (s, p) in steps {
            match h.mul(ctx.step(s, p)) {
                Ok(m) => h = m,
                Err(_) => return false,
            }
        }
        h.is_identity()
    }

    fn ridges_ok(&self, i: usize, j: usize) -> bool {
        self.ridges[j].iter().all(|&b| self.ridge_ok(i, j, b))
    }

    fn candidates(&mut self, i: usize, j: usize) -> Vec<(u8, u8)> {
        let mut out = Vec::new();
        for k in 0..COPIES as u8 {
            for p in 0..8u8 {
                let Some(w) = self.assign(i, j, (k, p)) else {
                    continue;
                };
                let ok = self.ridges_ok(i, j);
                self.unassign(&w);
                if ok {
                    out.push((k, p));
                }
            }
        }
        out
    }

    /// Partial vertex cycles first, then edge cycles, through side j of
    /// copy i.
    fn low_cycles_ok(&mut self, i: usize, j: usize) -> Result<bool, PairingError> {
        let lattice = &self.ctx().lattice;
        for &f in &self.low_faces[j] {
            let limit = 1 << (6 - lattice.face(f).dim);
            let orbit = trace_orbit(&self.gluing, lattice, i, f, limit, &mut self.seen)?;
            if orbit.violation.is_some() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn dfs(&mut self) -> Result<(), PairingError> {
        if self.exhausted || self.stopped {
            return Ok(());
        }
        let mut best: Option<(usize, usize, Vec<(u8, u8)>)> = None;
        for i in 0..COPIES {
            for j in 0..SIDES {
                if self.get(i, j).is_some() {
                    continue;
                }
                let c = self.candidates(i, j);
                if best.as_ref().map_or(true, |b| c.len() < b.2.len()) {
                    let done = c.len() <= 1;
                    best = Some((i, j, c));
                    if done {
                        break;
                    }
                }
            }
            if best.as_ref().is_some_and(|b| b.2.len() <= 1) {
                break;
            }
        }
        let Some((i, j, cands)) = best else {
            let report = trace_face_cycles(&self.gluing, &self.ctx().lattice)?;
            if report.is_proper() {
                let entries = self.gluing.entries.iter().map(|e| e.expect("complete")).collect();
                let found = EightPPairing::from_entries_unchecked(entries);
                self.stopped = (self.stop)(&found);
                self.found.push(found);
            }
            return Ok(());
        };
        for cand in cands {
            if self.nodes >= self.budget {
                self.exhausted = true;
                return Ok(());
            }
            self.nodes += 1;
            let Some(w) = self.assign(i, j, cand) else {
                continue;
            };
            if self.low_cycles_ok(i, j)? {
                self.dfs()?;
            }
            self.unassign(&w);
            if self.exhausted || self.stopped {
                return Ok(());
            }
        }
        Ok(())
    }
}

/// Backtracking search for proper 8P⁶ pairings extending `constraints`.
/// Only branches are pruned where a ridge, vertex or edge cycle already
/// fails; every complete array is checked in full before it is reported.
/// `budget` bounds the number of candidate assignments.
pub fn search_pairings(
    ctx: &P6Context,
    constraints: &SearchConstraints,
    budget: u64,
) -> Result<SearchOutcome, PairingError> {
    search_pairings_until(ctx, constraints, budget, &|_| false)
}

/// As [`search_pairings`], but the search ends as soon as `stop` accepts a
/// proper completion.
pub fn search_pairings_until<'a>(
    ctx: &'a P6Context,
    constraints: &SearchConstraints,
    budget: u64,
    stop: &'a dyn Fn(&EightPPairing) -> bool,
) -> Result<SearchOutcome, PairingError> {
    let mut ridges = vec![Vec::new(); SIDES];
    for (a, b) in ctx.polytope.perpendicular_pairs() {
        ridges[a].push(b);
        ridges[b].push(a);
    }
    let mut low_faces = vec![Vec::new(); SIDES];
    for dim in 0..2 {
        for &f in ctx.lattice.of_dim(dim) {
            for &s in &ctx.lattice.face(f).sides {
                low_faces[s].push(f);
            }
        }
    }
    let mut search = Search {
        gluing: EightPGluing {
            ctx,
            entries: vec![None; COPIES * SIDES],
        },
        ridges,
        low_faces,
        seen: BTreeMap::new(),
        budget,
        nodes: 0,
        exhausted: false,
        found: Vec::new(),
        stop,
        stopped: false,
    };
    let mut infeasible = false;
    for &((i, j), (k, p)) in &constraints.fixed {
        if i >= COPIES || j >= SIDES || k as usize >= COPIES || p > 7 {
            infeasible = true;
            break;
        }
        if search.assign(i, j, (k, p)).is_none() {
            infeasible = true;
            break;
        }
    }
    if infeasible {
        return Ok(SearchOutcome {
            pairings: Vec::new(),
            nodes: 0,
            budget_exhausted: false,
            stopped: false,
            infeasible: true,
        });
    }
    if budget == 0 {
        return Ok(SearchOutcome {
            pairings: Vec::new(),
            nodes: 0,
            budget_exhausted: true,
            stopped: false,
            infeasible: false,
        });
    }
    search.dfs()?;
    Ok(SearchOutcome {
        pairings: search.found,
        nodes: search.nodes,
        budget_exhausted: search.exhausted,
        stopped: search.stopped,
        infeasible: false,
    })
}
