use super::morphism::generating_tuple;
use super::{Elem, FiniteGroup};
use crate::error::{Error, Result};
use crate::numth::{factorize, mod_inverse};

impl FiniteGroup {
    /// Elements commuting with every element, sorted.
    pub fn center(&self) -> Vec<Elem> {
        let gens = generating_tuple(self);
        self.elements()
            .filter(|&z| gens.iter().all(|&g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// `[A, G]` for a normal subgroup `A`, sorted.
    fn commutator_with_whole(&self, a: &[Elem]) -> Vec<Elem> {
        let mut hit = vec![false; self.order()];
        let mut gens = Vec::new();
        for &x in a {
            for g in self.elements() {
                let c = self.commutator(x, g);
                if !hit[c] {
                    hit[c] = true;
                    gens.push(c);
                }
            }
        }
        self.subgroup_closure(&gens)
    }

    /// Derived subgroup `[G, G]`, sorted.
    pub fn commutator_subgroup(&self) -> Vec<Elem> {
        let all: Vec<Elem> = self.elements().collect();
        self.commutator_with_whole(&all)
    }

    /// `G = γ₁ ⊇ γ₂ ⊇ …` until it stabilizes; the last term is repeated once.
    pub fn lower_central_series(&self) -> Vec<Vec<Elem>> {
        let mut series = vec![self.elements().collect::<Vec<_>>()];
        loop {
            let next = self.commutator_with_whole(series.last().unwrap());
            let stable = next.len() == series.last().unwrap().len();
            series.push(next);
            if stable {
                return series;
            }
        }
    }

    /// Nilpotency class, or `None` if the group is not nilpotent. The trivial
    /// group has class 0.
    pub fn nilpotency_class(&self) -> Option<usize> {
        *self.nilpotency.get_or_init(|| {
            let series = self.lower_central_series();
            let last = series.last().unwrap();
            (last.len() == 1).then(|| series.iter().position(|t| t.len() == 1).unwrap())
        })
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class().is_some()
    }

    /// `G/N` with cosets ordered by their least element, plus the projection
    /// `G → G/N`.
    pub fn quotient(&self, normal: &[Elem]) -> Result<(FiniteGroup, Vec<Elem>)> {
        let closure = self.subgroup_closure(normal);
        let mut sorted = normal.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if closure != sorted {
            return Err(Error::NotSubgroup(
                "set is not closed under products".into(),
            ));
        }
        if !self.is_normal(&sorted) {
            return Err(Error::NotNormal);
        }
        const UNSET: usize = usize::MAX;
        let mut coset = vec![UNSET; self.order()];
        let mut reps = Vec::new();
        for g in self.elements() {
            if coset[g] == UNSET {
                for &k in &sorted {
                    coset[self.mul(g, k)] = reps.len();
                }
                reps.push(g);
            }
        }
        let labels = reps
            .iter()
            .map(|&g| format!("[{}]", self.label(g)))
            .collect();
        let group =
            FiniteGroup::from_fn(reps.len(), |a, b| coset[self.mul(reps[a], reps[b])], labels)?;
        Ok((group, coset))
    }
}

/// Component of `g` in the Sylow `p`-subgroup of a nilpotent group: `g^{m_p}`
/// with `m_p ≡ 1 (mod p^v)` and `m_p ≡ 0 (mod |G|/p^v)`, where `p^v ‖ |G|`.
pub fn sylow_projection(group: &FiniteGroup, g: Elem, p: u64) -> Result<Elem> {
    if !group.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let n = group.order() as u64;
    let v = factorize(n)?.valuation(p);
    if v == 0 {
        return Ok(group.identity());
    }
    let q = p.pow(v);
    let r = n / q;
    let m_p = r * mod_inverse(r % q, q).expect("coprime cofactor") % n;
    Ok(group.pow(g, m_p as i64))
}
