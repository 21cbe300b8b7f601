//! Permutation groups stored as a base and strong generating set.
//!
//! Construction is the deterministic incremental Schreier–Sims algorithm.
//! New base points are always the least point moved by the residue that
//! forced the extension. Each level keeps a Schreier vector, so coset
//! representatives are recovered as words in that level's strong generators.

use std::collections::BTreeSet;

use super::permutation::Permutation;
use crate::error::{Error, Result};

/// Default cap on explicit element enumeration.
pub const DEFAULT_ENUMERATION_BOUND: u128 = 1_000_000;

const NOT_IN_ORBIT: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    gens: Vec<Permutation>,
    inv_gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `schreier[x]` is the index of the generator that first reached `x`.
    schreier: Vec<u32>,
}

impl Level {
    fn new(degree: usize, base_point: usize) -> Self {
        let mut level = Level {
            base_point,
            gens: Vec::new(),
            inv_gens: Vec::new(),
            orbit: Vec::new(),
            schreier: vec![NOT_IN_ORBIT; degree],
        };
        level.rebuild_orbit();
        level
    }

    fn add_generator(&mut self, g: Permutation) {
        self.inv_gens.push(g.inverse());
        self.gens.push(g);
        self.rebuild_orbit();
    }

    fn rebuild_orbit(&mut self) {
        self.schreier.iter_mut().for_each(|s| *s = NOT_IN_ORBIT);
        self.orbit.clear();
        self.schreier[self.base_point] = ROOT;
        self.orbit.push(self.base_point);
        let mut head = 0;
        while head < self.orbit.len() {
            let x = self.orbit[head];
            head += 1;
            for (i, g) in self.gens.iter().enumerate() {
                let y = g.apply(x);
                if self.schreier[y] == NOT_IN_ORBIT {
                    self.schreier[y] = i as u32;
                    self.orbit.push(y);
                }
            }
        }
    }

    fn contains_point(&self, x: usize) -> bool {
        self.schreier[x] != NOT_IN_ORBIT
    }

    /// Coset representative mapping the base point to `x`.
    fn transversal(&self, mut x: usize, degree: usize) -> Permutation {
        let mut word = Vec::new();
        while self.schreier[x] != ROOT {
            let gi = self.schreier[x] as usize;
            word.push(gi);
            x = self.inv_gens[gi].apply(x);
        }
        let mut u = Permutation::identity(degree);
        for &gi in word.iter().rev() {
            u = u.then(&self.gens[gi]);
        }
        u
    }

    /// `h * u_x^{-1}` where `x = h(base_point)`; walks the Schreier tree.
    fn strip(&self, h: &Permutation, mut x: usize) -> Permutation {
        let mut h = h.clone();
        while self.schreier[x] != ROOT {
            let gi = self.schreier[x] as usize;
            h = h.then(&self.inv_gens[gi]);
            x = self.inv_gens[gi].apply(x);
        }
        h
    }
}

/// A permutation group with a verified base and strong generating set.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
}

impl PermGroup {
    /// Runs Schreier–Sims on `generators`. Identity generators are kept in
    /// the generator list but contribute nothing to the chain.
    pub fn new(generators: Vec<Permutation>) -> Result<Self> {
        Self::with_base_prefix(generators, &[])
    }

    /// Like [`PermGroup::new`] but the base starts with `prefix`, so the
    /// stabilizer of any prefix of it is a suffix of the chain.
    pub fn with_base_prefix(generators: Vec<Permutation>, prefix: &[usize]) -> Result<Self> {
        let degree = generators.first().ok_or(Error::NoGenerators)?.degree();
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        for &p in prefix {
            if p >= degree {
                return Err(Error::InvalidParameters(format!(
                    "base point {p} out of range for degree {degree}"
                )));
            }
        }
        let mut group = PermGroup {
            degree,
            generators,
            levels: Vec::new(),
        };
        group.schreier_sims(prefix);
        group.verify()?;
        Ok(group)
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: vec![Permutation::identity(degree)],
            levels: Vec::new(),
        }
    }

    /// Symmetric group on `degree` points, for tests and fixtures.
    pub fn symmetric(degree: usize) -> Result<Self> {
        if degree <= 1 {
            return Ok(PermGroup::trivial(degree.max(1)));
        }
        let shift: Vec<usize> = (0..degree).map(|i| (i + 1) % degree).collect();
        let gens = vec![
            Permutation::from_cycles(degree, &[vec![0, 1]])?,
            Permutation::from_images(shift)?,
        ];
        PermGroup::new(gens)
    }

    pub fn alternating(degree: usize) -> Result<Self> {
        if degree <= 2 {
            return Ok(PermGroup::trivial(degree.max(1)));
        }
        let gens = (0..degree - 2)
            .map(|i| Permutation::from_cycles(degree, &[vec![i, i + 1, i + 2]]))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(gens)
    }

    fn schreier_sims(&mut self, prefix: &[usize]) {
        let degree = self.degree;
        let mut base: Vec<usize> = Vec::new();
        for &p in prefix {
            if !base.contains(&p) {
                base.push(p);
            }
        }
        let gens: Vec<Permutation> = self
            .generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        for g in &gens {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(g.smallest_moved_point().expect("non-identity"));
            }
        }
        let mut levels: Vec<Level> = base.iter().map(|&b| Level::new(degree, b)).collect();
        for g in &gens {
            for (i, level) in levels.iter_mut().enumerate() {
                level.gens.push(g.clone());
                level.inv_gens.push(g.inverse());
                if g.apply(base[i]) != base[i] {
                    break;
                }
            }
        }
        for level in &mut levels {
            level.rebuild_orbit();
        }

        let mut i = levels.len() as isize - 1;
        while i >= 0 {
            let li = i as usize;
            let mut restart_at = None;
            'scan: for oi in 0..levels[li].orbit.len() {
                let beta = levels[li].orbit[oi];
                let u_beta = levels[li].transversal(beta, degree);
                for si in 0..levels[li].gens.len() {
                    let s = &levels[li].gens[si];
                    let image = s.apply(beta);
                    let schreier_gen = levels[li].strip(&u_beta.then(s), image);
                    let (residue, j) = sift_from(&levels, &schreier_gen, li + 1);
                    if residue.is_identity() {
                        continue;
                    }
                    if j == levels.len() {
                        let b = residue.smallest_moved_point().expect("non-identity");
                        levels.push(Level::new(degree, b));
                    }
                    for level in levels.iter_mut().take(j + 1).skip(li + 1) {
                        level.add_generator(residue.clone());
                    }
                    restart_at = Some(j);
                    break 'scan;
                }
            }
            match restart_at {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
        // Drop trailing levels whose orbit is trivial; they carry no
        // information and would otherwise survive from the prefix.
        while levels.last().is_some_and(|l| l.orbit.len() == 1 && l.gens.is_empty()) {
            levels.pop();
        }
        self.levels = levels;
    }

    fn verify(&self) -> Result<()> {
        for g in &self.generators {
            if !self.contains(g) {
                return Err(Error::InvalidPermutation(
                    "internal: generator failed membership after Schreier-Sims".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    /// Union of the strong generators over all levels, deduplicated.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let set: BTreeSet<Permutation> = self
            .levels
            .iter()
            .flat_map(|l| l.gens.iter().cloned())
            .collect();
        set.into_iter().collect()
    }

    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn basic_orbit(&self, level: usize) -> &[usize] {
        &self.levels[level].orbit
    }

    pub fn order(&self) -> u128 {
        self.try_order().expect("group order overflow")
    }

    pub fn try_order(&self) -> Result<u128> {
        self.levels.iter().try_fold(1u128, |acc, l| {
            acc.checked_mul(l.orbit.len() as u128)
                .ok_or(Error::OrderOverflow)
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.levels.is_empty()
    }

    /// Sifts `p` through the chain; `p` is a member iff the residue is the
    /// identity.
    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (residue, _) = sift_from(&self.levels, p, 0);
        residue.is_identity()
    }

    /// Same element set: equal orders and mutual generator membership.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && self.generators.iter().all(|g| other.contains(g))
            && other.generators.iter().all(|g| self.contains(g))
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut orbit = vec![point];
        seen[point] = true;
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
        }
        orbit.sort_unstable();
        orbit
    }

    /// Orbits on points, each sorted, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if seen[p] {
                continue;
            }
            let orbit = self.orbit(p);
            for &x in &orbit {
                seen[x] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }

    /// Some group element mapping `from` to `to`, if any.
    pub fn element_mapping(&self, from: usize, to: usize) -> Option<Permutation> {
        let chain = self.rebased(&[from]).ok()?;
        match chain.levels.first() {
            Some(level) if level.base_point == from => {
                if level.contains_point(to) {
                    Some(level.transversal(to, self.degree))
                } else {
                    None
                }
            }
            _ => (from == to).then(|| Permutation::identity(self.degree)),
        }
    }

    /// The same group with a chain whose base begins with `prefix`.
    pub fn rebased(&self, prefix: &[usize]) -> Result<PermGroup> {
        if self.base().starts_with(prefix) {
            return Ok(self.clone());
        }
        let mut gens = self.strong_generators();
        if gens.is_empty() {
            gens.push(Permutation::identity(self.degree));
        }
        let mut g = PermGroup::with_base_prefix(gens, prefix)?;
        g.generators = self.generators.clone();
        Ok(g)
    }

    /// Pointwise stabilizer of `points`, read off a rebased chain.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermGroup> {
        let chain = self.rebased(points)?;
        let mut k = 0;
        for &p in points {
            if k < chain.levels.len() && chain.levels[k].base_point == p {
                k += 1;
            } else {
                // p is fixed by everything at this depth; no level was needed
                debug_assert!(chain.levels[k..].iter().all(|l| l
                    .gens
                    .iter()
                    .all(|g| g.apply(p) == p)));
            }
        }
        Ok(chain.suffix(k))
    }

    pub fn point_stabilizer(&self, v: usize) -> Result<PermGroup> {
        self.pointwise_stabilizer(&[v])
    }

    fn suffix(&self, k: usize) -> PermGroup {
        let levels: Vec<Level> = self.levels[k..].to_vec();
        let mut generators: Vec<Permutation> = levels
            .first()
            .map(|l| l.gens.clone())
            .unwrap_or_default();
        if generators.is_empty() {
            generators.push(Permutation::identity(self.degree));
        }
        PermGroup {
            degree: self.degree,
            generators,
            levels,
        }
    }

    /// Setwise stabilizer of `{u, v}`: the part of `G_u` fixing `v` plus the
    /// part of the coset `G_u t` (with `t(u) = v`) sending `v` back to `u`.
    pub fn setwise_pair_stabilizer(&self, u: usize, v: usize, bound: u128) -> Result<PermGroup> {
        if u == v {
            return Err(Error::InvalidParameters("pair needs two distinct points".into()));
        }
        let stab = self.point_stabilizer(u)?;
        let swap = self.element_mapping(u, v);
        let mut kept: BTreeSet<Permutation> = BTreeSet::new();
        for x in stab.elements(bound)? {
            if x.apply(v) == v {
                kept.insert(x.clone());
            }
            if let Some(t) = &swap {
                let y = x.then(t);
                if y.apply(v) == u {
                    kept.insert(y);
                }
            }
        }
        let mut gens: Vec<Permutation> = kept.into_iter().filter(|p| !p.is_identity()).collect();
        if gens.is_empty() {
            gens.push(Permutation::identity(self.degree));
        }
        PermGroup::new(gens)
    }

    /// Every element exactly once, as products of coset representatives.
    pub fn elements(&self, bound: u128) -> Result<ElementIter> {
        let order = self.try_order()?;
        if order > bound {
            return Err(Error::BoundExceeded { order, bound });
        }
        let transversals: Vec<Vec<Permutation>> = self
            .levels
            .iter()
            .map(|l| {
                l.orbit
                    .iter()
                    .map(|&x| l.transversal(x, self.degree))
                    .collect()
            })
            .collect();
        Ok(ElementIter::new(self.degree, transversals))
    }

    /// Parity is a homomorphism, so the group has an odd element iff some
    /// generator is odd.
    pub fn odd_generator(&self) -> Option<&Permutation> {
        self.generators.iter().find(|g| g.is_odd())
    }

    pub fn has_odd_element(&self) -> bool {
        self.odd_generator().is_some()
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b)))
    }
}

/// Sifts `p` starting at `start`. Returns the residue and the level at which
/// sifting stopped (`levels.len()` if it passed every level).
fn sift_from(levels: &[Level], p: &Permutation, start: usize) -> (Permutation, usize) {
    let mut h = p.clone();
    for (j, level) in levels.iter().enumerate().skip(start) {
        let x = h.apply(level.base_point);
        if !level.contains_point(x) {
            return (h, j);
        }
        h = level.strip(&h, x);
    }
    (h, levels.len())
}

/// Odometer over transversal products: `u_{k-1} * ... * u_1 * u_0`.
pub struct ElementIter {
    degree: usize,
    transversals: Vec<Vec<Permutation>>,
    index: Vec<usize>,
    /// `partial[i]` is the product of the chosen reps at levels `>= i`.
    partial: Vec<Permutation>,
    done: bool,
}

impl ElementIter {
    fn new(degree: usize, transversals: Vec<Vec<Permutation>>) -> Self {
        let k = transversals.len();
        let mut it = ElementIter {
            degree,
            index: vec![0; k],
            partial: vec![Permutation::identity(degree); k + 1],
            transversals,
            done: false,
        };
        it.recompute_from(k);
        it
    }

    fn recompute_from(&mut self, top: usize) {
        for i in (0..top).rev() {
            self.partial[i] = self.partial[i + 1].then(&self.transversals[i][self.index[i]]);
        }
    }
}

impl Iterator for ElementIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let current = if self.transversals.is_empty() {
            Permutation::identity(self.degree)
        } else {
            self.partial[0].clone()
        };
        // advance the odometer, least significant digit at level 0
        let mut i = 0;
        loop {
            if i == self.transversals.len() {
                self.done = true;
                break;
            }
            self.index[i] += 1;
            if self.index[i] < self.transversals[i].len() {
                self.recompute_from(i + 1);
                break;
            }
            self.index[i] = 0;
            i += 1;
        }
        Some(current)
    }
}
