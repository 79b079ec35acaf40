//! Homomorphisms determined by images of generators.
//!
//! A map defined on generators extends to a homomorphism iff it is consistent
//! along every edge of the Cayley graph; [`extend_homomorphism`] checks exactly
//! that with one breadth-first pass.

use std::collections::VecDeque;

use super::{Elem, FiniteGroup};
use crate::error::{Error, Result};

/// Largest group order for which [`automorphism_group`] enumerates Aut(G).
pub const AUTOMORPHISM_BOUND: usize = 256;

/// Cap on the number of candidate generator images tried by
/// [`automorphism_group`].
const CANDIDATE_CAP: u128 = 200_000_000;

/// An automorphism stored as its permutation of element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    images: Vec<Elem>,
}

impl Automorphism {
    pub fn identity(order: usize) -> Self {
        Self {
            images: (0..order).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, g: Elem) -> Elem {
        self.images[g]
    }

    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &g)| i == g)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            images: self.images.iter().map(|&g| other.images[g]).collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut images = vec![0; self.images.len()];
        for (g, &h) in self.images.iter().enumerate() {
            images[h] = g;
        }
        Automorphism { images }
    }
}

fn check_generates(group: &FiniteGroup, gens: &[Elem]) -> Result<()> {
    let generated = group.closure_size(gens);
    if generated == group.order() {
        Ok(())
    } else {
        Err(Error::NotGenerating {
            generated,
            order: group.order(),
        })
    }
}

/// Extends `sources[i] ↦ targets[i]` to a homomorphism `src → dst`.
///
/// Returns `Ok(None)` when no homomorphism sends the sources to the targets,
/// and an error if the sources do not generate `src`.
pub fn extend_homomorphism(
    src: &FiniteGroup,
    dst: &FiniteGroup,
    sources: &[Elem],
    targets: &[Elem],
) -> Result<Option<Vec<Elem>>> {
    if sources.len() != targets.len() {
        return Err(Error::InvalidParameter(format!(
            "{} sources but {} targets",
            sources.len(),
            targets.len()
        )));
    }
    check_generates(src, sources)?;
    Ok(extend_unchecked(src, dst, sources, targets))
}

/// As [`extend_homomorphism`], assuming `sources` generate `src`.
pub(crate) fn extend_unchecked(
    src: &FiniteGroup,
    dst: &FiniteGroup,
    sources: &[Elem],
    targets: &[Elem],
) -> Option<Vec<Elem>> {
    const UNSET: usize = usize::MAX;
    let mut map = vec![UNSET; src.order()];
    map[src.identity()] = dst.identity();
    let mut queue = VecDeque::from([src.identity()]);
    while let Some(g) = queue.pop_front() {
        let image = map[g];
        for (&s, &t) in sources.iter().zip(targets) {
            let h = src.mul(g, s);
            let expected = dst.mul(image, t);
            if map[h] == UNSET {
                map[h] = expected;
                queue.push_back(h);
            } else if map[h] != expected {
                return None;
            }
        }
    }
    Some(map)
}

fn is_bijection(map: &[Elem], order: usize) -> bool {
    if map.len() != order {
        return false;
    }
    let mut hit = vec![false; order];
    map.iter().all(|&g| !std::mem::replace(&mut hit[g], true))
}

/// The automorphism of `group` sending `sources[i] ↦ targets[i]`, if any.
pub fn extend_to_automorphism(
    group: &FiniteGroup,
    sources: &[Elem],
    targets: &[Elem],
) -> Result<Option<Automorphism>> {
    Ok(extend_homomorphism(group, group, sources, targets)?
        .filter(|m| is_bijection(m, group.order()))
        .map(|images| Automorphism { images }))
}

/// Checks the full multiplication table: `φ(ab) = φ(a)φ(b)` and `φ` bijective.
pub fn is_automorphism(group: &FiniteGroup, images: &[Elem]) -> bool {
    is_bijection(images, group.order())
        && group.elements().all(|a| {
            group
                .elements()
                .all(|b| images[group.mul(a, b)] == group.mul(images[a], images[b]))
        })
}

/// Elements sorted so that those whose order is rarest come first.
fn rarity_order(group: &FiniteGroup) -> Vec<Elem> {
    let orders = group.element_orders();
    let mut count = vec![0usize; group.order() + 1];
    for &o in orders {
        count[o] += 1;
    }
    let mut elems: Vec<Elem> = group.elements().collect();
    elems.sort_by_key(|&g| (count[orders[g]], g));
    elems
}

/// A short generating tuple: a single generator if cyclic, else a pair if one
/// exists, else a greedy sequence with redundant members removed. Elements of
/// rare order are preferred, which keeps isomorphism searches small.
pub fn generating_tuple(group: &FiniteGroup) -> Vec<Elem> {
    let n = group.order();
    if n == 1 {
        return Vec::new();
    }
    let candidates = rarity_order(group);
    if let Some(&g) = candidates.iter().find(|&&g| group.element_order(g) == n) {
        return vec![g];
    }
    for &x in &candidates {
        for &y in &candidates {
            if group.is_generating_pair(x, y) {
                return vec![x, y];
            }
        }
    }
    let mut gens = Vec::new();
    let mut span = vec![false; n];
    for &g in &candidates {
        if !span[g] {
            gens.push(g);
            span.iter_mut().for_each(|s| *s = false);
            group.closure_into(&gens, &mut span);
        }
    }
    let mut i = 0;
    while i < gens.len() {
        let mut rest = gens.clone();
        rest.remove(i);
        if group.closure_size(&rest) == n {
            gens = rest;
        } else {
            i += 1;
        }
    }
    gens
}

/// Calls `visit` on every homomorphism `src → dst` that is a bijection,
/// stopping early when `visit` returns `false`.
fn for_each_isomorphism(
    src: &FiniteGroup,
    dst: &FiniteGroup,
    mut visit: impl FnMut(Vec<Elem>) -> bool,
) {
    let gens = generating_tuple(src);
    let src_orders = src.element_orders();
    let dst_orders = dst.element_orders();
    let options: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&s| {
            dst.elements()
                .filter(|&t| dst_orders[t] == src_orders[s])
                .collect()
        })
        .collect();
    let mut chosen = Vec::with_capacity(gens.len());
    fn recurse(
        depth: usize,
        src: &FiniteGroup,
        dst: &FiniteGroup,
        gens: &[Elem],
        options: &[Vec<Elem>],
        chosen: &mut Vec<Elem>,
        visit: &mut dyn FnMut(Vec<Elem>) -> bool,
    ) -> bool {
        if depth == gens.len() {
            if let Some(map) = extend_unchecked(src, dst, gens, chosen) {
                if is_bijection(&map, dst.order()) {
                    return visit(map);
                }
            }
            return true;
        }
        for &t in &options[depth] {
            // images of products of earlier generators must keep their orders
            let consistent = (0..depth).all(|i| {
                src.element_order(src.mul(gens[i], gens[depth]))
                    == dst.element_order(dst.mul(chosen[i], t))
            });
            if !consistent {
                continue;
            }
            chosen.push(t);
            let go_on = recurse(depth + 1, src, dst, gens, options, chosen, visit);
            chosen.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
    recurse(0, src, dst, &gens, &options, &mut chosen, &mut visit);
}

/// Every automorphism of `group`, sorted lexicographically by image list
/// (so the identity comes first).
pub fn automorphism_group(group: &FiniteGroup) -> Result<Vec<Automorphism>> {
    if group.order() > AUTOMORPHISM_BOUND {
        return Err(Error::TooLarge {
            order: group.order(),
            bound: AUTOMORPHISM_BOUND,
        });
    }
    let orders = group.element_orders();
    let search: u128 = generating_tuple(group)
        .iter()
        .map(|&s| orders.iter().filter(|&&o| o == orders[s]).count() as u128)
        .product();
    if search > CANDIDATE_CAP {
        return Err(Error::Unsupported(format!(
            "automorphism search over {search} candidate images"
        )));
    }
    let mut out = Vec::new();
    for_each_isomorphism(group, group, |images| {
        out.push(Automorphism { images });
        true
    });
    if let Some(bad) = out.iter().find(|a| !is_automorphism(group, a.images())) {
        return Err(Error::Invariant(format!(
            "extended map {:?} is not multiplicative",
            bad.images()
        )));
    }
    out.sort();
    Ok(out)
}

/// An isomorphism `a → b` as an image list, if the groups are isomorphic.
pub fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Option<Vec<Elem>> {
    if a.order() != b.order() {
        return None;
    }
    let mut oa = a.element_orders().to_vec();
    let mut ob = b.element_orders().to_vec();
    oa.sort_unstable();
    ob.sort_unstable();
    if oa != ob {
        return None;
    }
    let mut found = None;
    for_each_isomorphism(a, b, |map| {
        found = Some(map);
        false
    });
    found
}
