//! Operations on dessins: triality, Wilson operations, joins, Sylow
//! decomposition, and the passage between bipartite maps and dessins.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::dessin::Dessin;
use crate::error::{Error, Result};
use crate::group::{build_group, extend_unchecked, Elem, FiniteGroup, GroupSpec};
use crate::numth::{factorize, gcd};

/// Default cap on the order of a join before its table is built.
pub const JOIN_ORDER_CAP: usize = 10_000;

/// A permutation of (black vertices, white vertices, faces).
///
/// Written as the images of `b w f`: `bwf` is the identity, `wbf` the colour
/// swap, `wfb` the 3-cycle taking `(x, y)` to `(y, z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TrialityElement([u8; 3]);

impl TrialityElement {
    pub const IDENTITY: TrialityElement = TrialityElement([0, 1, 2]);
    pub const DUAL: TrialityElement = TrialityElement([1, 0, 2]);
    pub const CYCLE: TrialityElement = TrialityElement([1, 2, 0]);

    pub fn all() -> [TrialityElement; 6] {
        [
            TrialityElement([0, 1, 2]),
            TrialityElement([0, 2, 1]),
            TrialityElement([1, 0, 2]),
            TrialityElement([1, 2, 0]),
            TrialityElement([2, 0, 1]),
            TrialityElement([2, 1, 0]),
        ]
    }

    /// Apply `self`, then `other`.
    pub fn then(self, other: TrialityElement) -> TrialityElement {
        let p = self.0;
        TrialityElement(other.0.map(|i| p[i as usize]))
    }

    pub fn inverse(self) -> TrialityElement {
        let mut inv = [0u8; 3];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p as usize] = i as u8;
        }
        TrialityElement(inv)
    }
}

impl fmt::Display for TrialityElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &i in &self.0 {
            f.write_str(["b", "w", "f"][i as usize])?;
        }
        Ok(())
    }
}

impl FromStr for TrialityElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            input: s.to_string(),
            reason: "expected a permutation of the letters b, w, f such as `wfb`".into(),
        };
        let letters: Vec<u8> = s
            .to_ascii_lowercase()
            .chars()
            .map(|c| match c {
                'b' => Ok(0),
                'w' => Ok(1),
                'f' => Ok(2),
                _ => Err(bad()),
            })
            .collect::<Result<_>>()?;
        let perm: [u8; 3] = letters.try_into().map_err(|_| bad())?;
        let mut sorted = perm;
        sorted.sort_unstable();
        if sorted != [0, 1, 2] {
            return Err(bad());
        }
        Ok(TrialityElement(perm))
    }
}

/// `(G, y, x)`.
pub fn dual(d: &Dessin) -> Dessin {
    d.with_pair(d.y(), d.x()).expect("swapped pair generates")
}

/// Permutes `(x, y, z)` with `z = (xy)⁻¹` and keeps the first two entries.
pub fn triality(d: &Dessin, t: TrialityElement) -> Dessin {
    let triple = [d.x(), d.y(), d.z()];
    let [a, b, _] = t.0.map(|i| triple[i as usize]);
    d.with_pair(a, b).expect("any two of x, y, z generate")
}

/// `H_{i,j}`: `(G, x^i, y^j)` with `i`, `j` coprime to `o(x)`, `o(y)`.
pub fn wilson(d: &Dessin, i: i64, j: i64) -> Result<Dessin> {
    let g = d.group();
    let (l, m, _) = d.type_triple();
    for (e, o, name) in [(i, l, "i"), (j, m, "j")] {
        if gcd(e.rem_euclid(o as i64) as u64, o as u64) != 1 {
            return Err(Error::InvalidParameter(format!(
                "{name} = {e} is not coprime to the generator order {o}"
            )));
        }
    }
    d.with_pair(g.pow(d.x(), i), g.pow(d.y(), j))
        .map_err(|e| Error::Invariant(format!("Wilson operation lost generation: {e}")))
}

/// At least two of `gcd(l₁,l₂)`, `gcd(m₁,m₂)`, `gcd(n₁,n₂)` equal 1; then the
/// join is the full direct product.
pub fn coprime_product_check(a: &Dessin, b: &Dessin) -> bool {
    let (l1, m1, n1) = a.type_triple();
    let (l2, m2, n2) = b.type_triple();
    [(l1, l2), (m1, m2), (n1, n2)]
        .iter()
        .filter(|(u, v)| gcd(*u as u64, *v as u64) == 1)
        .count()
        >= 2
}

/// Parallel product with the default order cap.
pub fn join(a: &Dessin, b: &Dessin) -> Result<Dessin> {
    join_with_cap(a, b, JOIN_ORDER_CAP)
}

/// Parallel product: the subgroup of `G₁ × G₂` generated by `(x₁, x₂)` and
/// `(y₁, y₂)`. Elements are numbered in breadth-first order from the identity.
pub fn join_with_cap(a: &Dessin, b: &Dessin, cap: usize) -> Result<Dessin> {
    let (ga, gb) = (a.group(), b.group());
    let nb = gb.order();
    let key = |u: Elem, v: Elem| u * nb + v;
    let gens = [(a.x(), b.x()), (a.y(), b.y())];
    let mut index: HashMap<usize, usize> = HashMap::new();
    let mut elems = vec![(ga.identity(), gb.identity())];
    index.insert(key(ga.identity(), gb.identity()), 0);
    let mut head = 0;
    while head < elems.len() {
        let (u, v) = elems[head];
        head += 1;
        for &(s, t) in &gens {
            let next = (ga.mul(u, s), gb.mul(v, t));
            if let std::collections::hash_map::Entry::Vacant(e) = index.entry(key(next.0, next.1)) {
                if elems.len() == cap {
                    return Err(Error::TooLarge {
                        order: cap + 1,
                        bound: cap,
                    });
                }
                e.insert(elems.len());
                elems.push(next);
            }
        }
    }
    let n = elems.len();
    // dense lookup when the ambient product is small enough
    let dense: Option<Vec<u32>> = (ga.order() * nb <= 1 << 24).then(|| {
        let mut d = vec![u32::MAX; ga.order() * nb];
        for (i, &(u, v)) in elems.iter().enumerate() {
            d[key(u, v)] = i as u32;
        }
        d
    });
    let lookup = |k: usize| match &dense {
        Some(d) => d[k] as usize,
        None => index[&k],
    };
    let labels = elems
        .iter()
        .map(|&(u, v)| format!("({},{})", ga.label(u), gb.label(v)))
        .collect();
    let group = FiniteGroup::from_fn(
        n,
        |i, j| {
            let (u1, v1) = elems[i];
            let (u2, v2) = elems[j];
            lookup(key(ga.mul(u1, u2), gb.mul(v1, v2)))
        },
        labels,
    )?;
    let x = index[&key(a.x(), b.x())];
    let y = index[&key(a.y(), b.y())];
    if coprime_product_check(a, b) && n != ga.order() * nb {
        return Err(Error::Invariant(format!(
            "coprime join has order {n}, expected {}",
            ga.order() * nb
        )));
    }
    Dessin::new(Arc::new(group), x, y)
}

/// Join of a list, left to right; the empty join is the trivial dessin.
pub fn join_all(dessins: &[Dessin]) -> Result<Dessin> {
    let mut iter = dessins.iter();
    let Some(first) = iter.next() else {
        return Ok(Dessin::trivial());
    };
    iter.try_fold(first.clone(), |acc, d| join(&acc, d))
}

/// One p-dessin per prime divisor of `|G|`, in increasing prime order, whose
/// join is isomorphic to `d`.
pub fn sylow_decompose(d: &Dessin) -> Result<Vec<Dessin>> {
    let g = d.group();
    if !g.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let mut parts = Vec::new();
    for p in factorize(g.order() as u64)?.primes() {
        let xp = crate::group::sylow_projection(g, d.x(), p)?;
        let yp = crate::group::sylow_projection(g, d.y(), p)?;
        let (sub, embed) = g.subgroup(&g.subgroup_closure(&[xp, yp]))?;
        let pos = |e: Elem| {
            embed
                .binary_search(&e)
                .expect("projection lies in its closure")
        };
        parts.push(Dessin::new(Arc::new(sub), pos(xp), pos(yp))?);
    }
    let rejoined = join_all(&parts)?;
    if !rejoined.is_isomorphic(d) {
        return Err(Error::Invariant(
            "join of the Sylow components is not isomorphic to the dessin".into(),
        ));
    }
    Ok(parts)
}

/// `G ⋊ ⟨τ⟩` for a symmetric dessin, where `τ` swaps `x` and `y`.
///
/// Index `g` is `(g, 1)` and index `|G| + g` is `(g, τ)`, with
/// `(g, τ^ε)(h, τ^δ) = (g·τ^ε(h), τ^{ε+δ})`. When `x = y`, `τ` is trivial and
/// this is `G × Z₂`.
pub fn extended_group(d: &Dessin) -> Result<FiniteGroup> {
    let g = d.group();
    let n = g.order();
    let tau = extend_unchecked(g, g, &[d.x(), d.y()], &[d.y(), d.x()])
        .filter(|m| {
            let mut seen = vec![false; n];
            m.iter().all(|&h| !std::mem::replace(&mut seen[h], true))
        })
        .ok_or(Error::NotSymmetric)?;
    let labels = (0..2 * n)
        .map(|i| {
            if i < n {
                g.label(i).to_string()
            } else {
                format!("{}·t", g.label(i - n))
            }
        })
        .collect();
    FiniteGroup::from_fn(
        2 * n,
        |a, b| {
            let (e, u) = (a / n, a % n);
            let (f, v) = (b / n, b % n);
            let v = if e == 1 { tau[v] } else { v };
            ((e + f) % 2) * n + g.mul(u, v)
        },
        labels,
    )
}

/// The dessin `(⟨R, R^L⟩, R, R^L)` of a bipartite map with rotation `R` and
/// involution `L`.
pub fn map_to_dessin(gamma: &Arc<FiniteGroup>, r: Elem, l: Elem) -> Result<Dessin> {
    if gamma.mul(l, l) != gamma.identity() {
        return Err(Error::InvalidParameter("L must be an involution".into()));
    }
    let generated = gamma.closure_size(&[r, l]);
    if generated != gamma.order() {
        return Err(Error::NotGenerating {
            generated,
            order: gamma.order(),
        });
    }
    let y = gamma.conjugate(r, l);
    let (h, embed) = gamma.subgroup(&gamma.subgroup_closure(&[r, y]))?;
    let pos = |e: Elem| {
        embed
            .binary_search(&e)
            .expect("generator lies in its closure")
    };
    let d = Dessin::new(Arc::new(h), pos(r), pos(y))?;
    if let Some(c) = gamma.nilpotency_class().filter(|&c| c >= 2) {
        let dc = d.group().nilpotency_class().unwrap_or(usize::MAX);
        if dc > c - 1 {
            return Err(Error::Invariant(format!(
                "dessin group has class {dc}, ambient class is {c}"
            )));
        }
    }
    Ok(d)
}

/// The two families of regular maps whose groups are 2-groups of class two.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapFamily {
    /// `⟨R, L | R^{2^n} = L² = 1, [R, L] = R^{2^{n−1}}⟩`, `n ≥ 2`.
    G1,
    /// `⟨R, L | R^{2^n} = L² = T² = [R, T] = [L, T] = 1, T = [R, L]⟩`, `n ≥ 1`.
    G2,
}

/// The group of the family member with parameter `n`, with `R` and `L`.
pub fn class_two_map_group(family: MapFamily, n: u32) -> Result<(FiniteGroup, Elem, Elem)> {
    match family {
        MapFamily::G1 => {
            if !(2..=12).contains(&n) {
                return Err(Error::InvalidParameter(format!(
                    "G1 needs 2 ≤ n ≤ 12, got {n}"
                )));
            }
            let size = 1u64 << n;
            let spec = GroupSpec::Metacyclic {
                m: 2,
                n: size,
                t: 1 + size / 2,
            };
            // L = g (index n), R = h (index 1)
            Ok((build_group(&spec)?, 1, size as Elem))
        }
        MapFamily::G2 => {
            if !(1..=12).contains(&n) {
                return Err(Error::InvalidParameter(format!(
                    "G2 needs 1 ≤ n ≤ 12, got {n}"
                )));
            }
            // R^i T^k L^e at index e·2^{n+1} + k·2^n + i; L R = R T L.
            let r_order = 1usize << n;
            let split = |v: usize| (v % r_order, (v / r_order) % 2, v / (2 * r_order));
            let labels = (0..4 * r_order)
                .map(|v| {
                    let (i, k, e) = split(v);
                    format!("R^{i}T^{k}L^{e}")
                })
                .collect();
            let group = FiniteGroup::from_fn(
                4 * r_order,
                |a, b| {
                    let (i, k, e) = split(a);
                    let (j, l, f) = split(b);
                    ((e + f) % 2) * 2 * r_order
                        + ((k + e * j + l) % 2) * r_order
                        + (i + j) % r_order
                },
                labels,
            )?;
            Ok((group, 1, 2 * r_order))
        }
    }
}

/// Which operations generate the orbits in [`operation_orbits`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperationSet {
    Triality,
    GeneralizedWilson,
    Both,
}

/// Partition of `dessins` into orbits under the chosen operations, as lists of
/// input positions ordered by least member. Images that are not isomorphic to
/// any input are ignored.
pub fn operation_orbits(dessins: &[Dessin], ops: OperationSet) -> Result<Vec<Vec<usize>>> {
    if let Some(first) = dessins.first() {
        if dessins.iter().any(|d| d.group() != first.group()) {
            return Err(Error::InvalidParameter(
                "orbit computation needs dessins on one group".into(),
            ));
        }
    }
    let mut parent: Vec<usize> = (0..dessins.len()).collect();
    fn root(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for (i, d) in dessins.iter().enumerate() {
        let mut images = Vec::new();
        if ops != OperationSet::GeneralizedWilson {
            images.push(triality(d, TrialityElement::DUAL));
            images.push(triality(d, TrialityElement::CYCLE));
        }
        if ops != OperationSet::Triality {
            let (l, m, _) = d.type_triple();
            for a in (1..=l as i64).filter(|&a| gcd(a as u64, l as u64) == 1) {
                for b in (1..=m as i64).filter(|&b| gcd(b as u64, m as u64) == 1) {
                    images.push(wilson(d, a, b)?);
                }
            }
        }
        for image in images {
            if let Some(j) = dessins.iter().position(|e| e.is_isomorphic(&image)) {
                let (ri, rj) = (root(&mut parent, i), root(&mut parent, j));
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut slot: HashMap<usize, usize> = HashMap::new();
    for i in 0..dessins.len() {
        let r = root(&mut parent, i);
        let k = *slot.entry(r).or_insert_with(|| {
            orbits.push(Vec::new());
            orbits.len() - 1
        });
        orbits[k].push(i);
    }
    Ok(orbits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dessin::classify_dessins;

    fn group(spec: &str) -> Arc<FiniteGroup> {
        Arc::new(build_group(&spec.parse().unwrap()).unwrap())
    }

    fn find(g: &FiniteGroup, label: &str) -> Elem {
        g.labels().iter().position(|l| l == label).unwrap()
    }

    fn alt4(x: &str, y: &str) -> Dessin {
        let g = group("alt4");
        let (a, b) = (find(&g, x), find(&g, y));
        Dessin::new(g, a, b).unwrap()
    }

    fn cyclic(m: usize, r: usize, s: usize) -> Dessin {
        Dessin::new(group(&format!("cyclic:{m}")), r, s).unwrap()
    }

    #[test]
    fn triality_is_sym3() {
        let all = TrialityElement::all();
        for a in all {
            assert_eq!(a.then(a.inverse()), TrialityElement::IDENTITY);
            for b in all {
                for c in all {
                    assert_eq!(a.then(b).then(c), a.then(b.then(c)));
                }
            }
        }
        assert_eq!(
            TrialityElement::CYCLE
                .then(TrialityElement::CYCLE)
                .then(TrialityElement::CYCLE),
            TrialityElement::IDENTITY
        );
        for t in all {
            assert_eq!(t.to_string().parse::<TrialityElement>().unwrap(), t);
        }
        assert!("bbf".parse::<TrialityElement>().is_err());
        assert!("bw".parse::<TrialityElement>().is_err());
    }

    #[test]
    fn triality_acts_up_to_isomorphism() {
        let d = alt4("(12)(34)", "(123)");
        assert_eq!(triality(&d, TrialityElement::IDENTITY), d);
        let thrice = (0..3).fold(d.clone(), |acc, _| triality(&acc, TrialityElement::CYCLE));
        assert!(thrice.is_isomorphic(&d));
        for a in TrialityElement::all() {
            for b in TrialityElement::all() {
                let stepwise = triality(&triality(&d, a), b);
                assert!(stepwise.is_isomorphic(&triality(&d, a.then(b))), "{a} {b}");
            }
        }
    }

    #[test]
    fn dual_examples() {
        let d1 = alt4("(12)(34)", "(123)");
        let d2 = alt4("(123)", "(12)(34)");
        assert!(dual(&d1).is_isomorphic(&d2));
        assert!(dual(&dual(&d1)).is_isomorphic(&d1));
        assert_eq!(dual(&d1).type_triple(), (3, 2, 3));
    }

    #[test]
    fn wilson_examples() {
        let d = cyclic(6, 1, 2);
        assert_eq!(wilson(&d, 1, 1).unwrap(), d);
        assert!(wilson(&d, 2, 1).is_err());
        let w = wilson(&d, 5, 1).unwrap();
        assert_eq!((w.x(), w.y()), (5, 2));
    }

    #[test]
    fn c6_orbits() {
        let g = group("cyclic:6");
        let classes = classify_dessins(&g).unwrap().representatives;
        assert_eq!(classes.len(), 12);
        assert_eq!(
            operation_orbits(&classes, OperationSet::Triality)
                .unwrap()
                .len(),
            3
        );
        assert_eq!(
            operation_orbits(&classes, OperationSet::GeneralizedWilson)
                .unwrap()
                .len(),
            9
        );
        assert_eq!(
            operation_orbits(&classes[..1], OperationSet::Both).unwrap(),
            vec![vec![0]]
        );
    }

    #[test]
    fn join_examples() {
        let d3 = alt4("(123)", "(124)");
        let d4 = alt4("(132)", "(124)");
        let mut types = [d3.type_triple(), d4.type_triple()];
        types.sort();
        assert_eq!(types, [(3, 3, 2), (3, 3, 3)]);
        assert!(!coprime_product_check(&d3, &d4));
        let j = join(&d3, &d4).unwrap();
        assert_eq!(j.order(), 144);
        assert_eq!(j.type_triple(), (3, 3, 6));
        assert_eq!(j.genus(), 13);
        assert!(j.is_symmetric() && j.is_reflexible());

        let c2 = cyclic(2, 1, 1);
        let c3 = cyclic(3, 1, 1);
        assert!(coprime_product_check(&c2, &c3));
        assert_eq!(join(&c2, &c3).unwrap().order(), 6);
        assert!(join(&d3, &d3).unwrap().is_isomorphic(&d3));
        assert!(!coprime_product_check(&d3, &d3));
        assert!(matches!(
            join_with_cap(&d3, &d4, 100),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn decomposition_examples() {
        let parts = sylow_decompose(&cyclic(6, 1, 1)).unwrap();
        assert_eq!(
            parts.iter().map(Dessin::order).collect::<Vec<_>>(),
            vec![2, 3]
        );
        let q8 = group("q8");
        let d = Dessin::new(q8, 2, 4).unwrap();
        let parts = sylow_decompose(&d).unwrap();
        assert_eq!(parts.len(), 1);
        assert!(parts[0].is_isomorphic(&d));
        assert!(matches!(
            sylow_decompose(&alt4("(123)", "(124)")),
            Err(Error::NotNilpotent)
        ));
    }

    #[test]
    fn symmetric_join_of_asymmetric_dessins() {
        // x1 of order 3, y1 of order 2 in Z3 ⊕ Z2; the mirror in Z2 ⊕ Z3
        let d1 = Dessin::from_spec(&"abelian:3,2".parse().unwrap(), 2, 1).unwrap();
        let d2 = Dessin::from_spec(&"abelian:2,3".parse().unwrap(), 3, 1).unwrap();
        assert_eq!(d1.type_triple().0, 3);
        assert_eq!(d2.type_triple().0, 2);
        assert!(!d1.is_symmetric() && !d2.is_symmetric());
        let j = join(&d1, &d2).unwrap();
        assert_eq!(j.order(), 36);
        assert_eq!(j.type_triple(), (6, 6, 6));
        assert!(j.is_symmetric() && j.is_totally_symmetric());
    }

    #[test]
    fn extended_groups() {
        let ext = extended_group(&cyclic(6, 1, 1)).unwrap();
        assert_eq!(ext.order(), 12);
        assert!(ext.is_abelian());
        assert!(matches!(
            extended_group(&cyclic(6, 1, 2)),
            Err(Error::NotSymmetric)
        ));
        // symmetric 3-dessin with τ ≠ 1 is not nilpotent
        let d = Dessin::from_spec(&"abelian:3,3".parse().unwrap(), 3, 1).unwrap();
        assert!(d.is_symmetric());
        assert_eq!(extended_group(&d).unwrap().nilpotency_class(), None);
        for a in 1..=3u32 {
            let q = 1usize << a;
            let d = Dessin::from_spec(&GroupSpec::Abelian(vec![q as u64, q as u64]), q, 1).unwrap();
            let ext = extended_group(&d).unwrap();
            assert_eq!(ext.nilpotency_class(), Some(a as usize + 1));
        }
    }

    #[test]
    fn class_two_maps() {
        for n in 2..=4u32 {
            for family in [MapFamily::G1, MapFamily::G2] {
                let (g, r, l) = class_two_map_group(family, n).unwrap();
                assert_eq!(g.nilpotency_class(), Some(2), "{family:?} {n}");
                assert_eq!(g.element_order(r), 1 << n);
                assert_eq!(g.element_order(l), 2);
                let d = map_to_dessin(&Arc::new(g), r, l).unwrap();
                assert_eq!(d.group().nilpotency_class(), Some(1));
            }
        }
        let c = group("cyclic:4");
        let d = map_to_dessin(&c, 1, 0).unwrap();
        assert_eq!(d.x(), d.y());
    }
}
