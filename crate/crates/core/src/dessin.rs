//! Regular dessins as generating pairs `(G, x, y)`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{
    automorphism_group, build_group, extend_unchecked, Elem, FiniteGroup, GroupSpec,
    AUTOMORPHISM_BOUND,
};

/// A regular dessin: a finite group with an ordered generating pair.
#[derive(Clone)]
pub struct Dessin {
    group: Arc<FiniteGroup>,
    x: Elem,
    y: Elem,
}

impl Dessin {
    /// Validates that `x` and `y` generate `group`.
    pub fn new(group: Arc<FiniteGroup>, x: Elem, y: Elem) -> Result<Self> {
        let n = group.order();
        if x >= n || y >= n {
            return Err(Error::InvalidParameter(format!(
                "element index out of range for a group of order {n}"
            )));
        }
        let generated = group.closure_size(&[x, y]);
        if generated != n {
            return Err(Error::NotGenerating {
                generated,
                order: n,
            });
        }
        Ok(Self { group, x, y })
    }

    pub fn from_spec(spec: &GroupSpec, x: Elem, y: Elem) -> Result<Self> {
        Self::new(Arc::new(build_group(spec)?), x, y)
    }

    /// The one-edge dessin on the trivial group.
    pub fn trivial() -> Self {
        let group = build_group(&GroupSpec::Cyclic(1)).expect("trivial group");
        Self {
            group: Arc::new(group),
            x: 0,
            y: 0,
        }
    }

    pub(crate) fn new_unchecked(group: Arc<FiniteGroup>, x: Elem, y: Elem) -> Self {
        debug_assert!(group.is_generating_pair(x, y));
        Self { group, x, y }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn x(&self) -> Elem {
        self.x
    }

    pub fn y(&self) -> Elem {
        self.y
    }

    /// `z = (xy)⁻¹`, so that `xyz = 1`.
    pub fn z(&self) -> Elem {
        self.group.inv(self.group.mul(self.x, self.y))
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Same group, new pair; the pair must still generate.
    pub fn with_pair(&self, x: Elem, y: Elem) -> Result<Dessin> {
        Dessin::new(self.group.clone(), x, y)
    }

    /// `(o(x), o(y), o(xy))`.
    pub fn type_triple(&self) -> (usize, usize, usize) {
        let g = &self.group;
        (
            g.element_order(self.x),
            g.element_order(self.y),
            g.element_order(g.mul(self.x, self.y)),
        )
    }

    /// `|G|(1/l + 1/m + 1/n − 1)`, i.e. vertices + faces − edges.
    pub fn euler_characteristic(&self) -> i64 {
        let n = self.order() as i64;
        let (l, m, f) = self.type_triple();
        n / l as i64 + n / m as i64 + n / f as i64 - n
    }

    pub fn genus(&self) -> u64 {
        let chi = self.euler_characteristic();
        debug_assert!(chi <= 2 && chi % 2 == 0);
        ((2 - chi) / 2) as u64
    }

    /// `K = ⟨x⟩ ∩ ⟨y⟩`.
    pub fn core(&self) -> Core {
        let g = &self.group;
        let mut in_x = vec![false; g.order()];
        for h in g.cyclic_subgroup(self.x) {
            in_x[h] = true;
        }
        let mut elements: Vec<Elem> = g
            .cyclic_subgroup(self.y)
            .into_iter()
            .filter(|&h| in_x[h])
            .collect();
        elements.sort_unstable();
        let k = elements.len();
        let exponent = (k > 1).then(|| {
            let (l, m, _) = self.type_triple();
            let a = g.pow(self.x, (l / k) as i64);
            let b = g.pow(self.y, (m / k) as i64);
            let mut acc = g.identity();
            let e = (0..k)
                .find(|_| {
                    let hit = acc == a;
                    acc = g.mul(acc, b);
                    hit
                })
                .expect("both powers generate the cyclic core");
            e as u64
        });
        Core {
            elements,
            order: k,
            exponent,
        }
    }

    /// The quotient dessin `(G/K, xK, yK)` by the core.
    pub fn shadow(&self) -> Result<Dessin> {
        let core = self.core();
        let (quotient, proj) = self.group.quotient(&core.elements)?;
        Dessin::new(Arc::new(quotient), proj[self.x], proj[self.y])
    }

    /// Black vertices are right cosets `⟨x⟩g`, white vertices right cosets
    /// `⟨y⟩g`; each group element is an edge. Vertices are numbered by the
    /// least element of their coset.
    pub fn underlying_graph(&self) -> BipartiteGraph {
        let black = right_cosets(&self.group, self.x);
        let white = right_cosets(&self.group, self.y);
        let black_count = black.iter().max().map_or(0, |m| m + 1);
        let white_count = white.iter().max().map_or(0, |m| m + 1);
        BipartiteGraph {
            black_count,
            white_count,
            edges: black.into_iter().zip(white).collect(),
        }
    }

    fn extends_to_automorphism(&self, x: Elem, y: Elem) -> bool {
        let g = &self.group;
        extend_unchecked(g, g, &[self.x, self.y], &[x, y]).is_some_and(|map| is_permutation(&map))
    }

    /// `x ↦ y, y ↦ x` extends to an automorphism.
    pub fn is_symmetric(&self) -> bool {
        self.extends_to_automorphism(self.y, self.x)
    }

    /// `x ↦ x⁻¹, y ↦ y⁻¹` extends to an automorphism.
    pub fn is_reflexible(&self) -> bool {
        let g = &self.group;
        self.extends_to_automorphism(g.inv(self.x), g.inv(self.y))
    }

    /// Fixed by every automorphism of the free group on `x, y`.
    ///
    /// Inner automorphisms act trivially on isomorphism classes, and the outer
    /// automorphism group `GL(2, Z)` is generated by the swap, the inversion
    /// `(x, y) ↦ (x⁻¹, y⁻¹)` and the two transvections `(x, y) ↦ (xy, y)` and
    /// `(x, y) ↦ (x, yx)`, so invariance under those four suffices.
    pub fn is_totally_symmetric(&self) -> bool {
        let g = &self.group;
        let (x, y) = (self.x, self.y);
        self.is_symmetric()
            && self.is_reflexible()
            && self.extends_to_automorphism(g.mul(x, y), y)
            && self.extends_to_automorphism(x, g.mul(y, x))
    }

    /// True iff `x₁ ↦ x₂, y₁ ↦ y₂` extends to a group isomorphism. Works across
    /// distinct tables.
    pub fn is_isomorphic(&self, other: &Dessin) -> bool {
        if self.order() != other.order() || self.type_triple() != other.type_triple() {
            return false;
        }
        extend_unchecked(
            &self.group,
            &other.group,
            &[self.x, self.y],
            &[other.x, other.y],
        )
        .is_some_and(|map| is_permutation(&map))
    }

    pub fn invariants(&self) -> DessinInvariants {
        let n = self.order();
        let (l, m, f) = self.type_triple();
        let core = self.core();
        DessinInvariants {
            order: n,
            type_triple: (l, m, f),
            euler_characteristic: self.euler_characteristic(),
            genus: self.genus(),
            core_order: core.order,
            core_exponent: core.exponent,
            black_vertices: n / l,
            white_vertices: n / m,
            faces: n / f,
            graph: self.underlying_graph().descriptor(),
            symmetric: self.is_symmetric(),
            reflexible: self.is_reflexible(),
            totally_symmetric: self.is_totally_symmetric(),
            nilpotency_class: self.group.nilpotency_class(),
        }
    }

    /// Pair written with group labels, e.g. `(g^1,g^5)`.
    pub fn pair_label(&self) -> String {
        format!(
            "({},{})",
            self.group.label(self.x),
            self.group.label(self.y)
        )
    }

    pub fn to_record(&self) -> DessinRecord {
        let group = match self.group.spec() {
            Some(spec) => GroupRecord::Spec(spec.clone()),
            None => GroupRecord::Table {
                table: self.group.rows(),
                labels: Some(self.group.labels().to_vec()),
            },
        };
        DessinRecord {
            group,
            x: ElemRef::Index(self.x),
            y: ElemRef::Index(self.y),
        }
    }

    pub fn from_record(record: &DessinRecord) -> Result<Dessin> {
        let group = match &record.group {
            GroupRecord::Spec(spec) => build_group(spec)?,
            GroupRecord::Table { table, labels } => FiniteGroup::from_rows(table, labels.clone())?,
        };
        let x = record.x.resolve(&group)?;
        let y = record.y.resolve(&group)?;
        Dessin::new(Arc::new(group), x, y)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&self.to_record())?)
    }

    pub fn from_json(text: &str) -> Result<Dessin> {
        let record: DessinRecord = serde_json::from_str(text)?;
        Dessin::from_record(&record)
    }
}

impl PartialEq for Dessin {
    /// Same table and same pair. Use [`Dessin::is_isomorphic`] for isomorphism.
    fn eq(&self, other: &Self) -> bool {
        self.x == other.x && self.y == other.y && *self.group == *other.group
    }
}

impl Eq for Dessin {}

impl fmt::Debug for Dessin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dessin({}, {}, {})", self.group, self.x, self.y)
    }
}

impl fmt::Display for Dessin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.group, self.pair_label())
    }
}

fn is_permutation(map: &[Elem]) -> bool {
    let mut hit = vec![false; map.len()];
    map.iter()
        .all(|&g| g < hit.len() && !std::mem::replace(&mut hit[g], true))
}

/// Coset index of every element in `⟨s⟩\G`, cosets numbered by least element.
fn right_cosets(group: &FiniteGroup, s: Elem) -> Vec<usize> {
    let cyclic = group.cyclic_subgroup(s);
    let mut coset = vec![usize::MAX; group.order()];
    let mut next = 0;
    for g in group.elements() {
        if coset[g] == usize::MAX {
            for &c in &cyclic {
                coset[group.mul(c, g)] = next;
            }
            next += 1;
        }
    }
    coset
}

/// The core subgroup `⟨x⟩ ∩ ⟨y⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Core {
    /// Sorted element indices.
    pub elements: Vec<Elem>,
    pub order: usize,
    /// Least nonnegative `e` with `x^{l/k} = y^{e·m/k}`; absent when `k = 1`.
    pub exponent: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DessinInvariants {
    pub order: usize,
    pub type_triple: (usize, usize, usize),
    pub euler_characteristic: i64,
    pub genus: u64,
    pub core_order: usize,
    pub core_exponent: Option<u64>,
    pub black_vertices: usize,
    pub white_vertices: usize,
    pub faces: usize,
    pub graph: String,
    pub symmetric: bool,
    pub reflexible: bool,
    pub totally_symmetric: bool,
    pub nilpotency_class: Option<usize>,
}

/// Underlying bipartite multigraph; `edges[g]` joins the black and white
/// vertices incident with edge `g`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteGraph {
    pub black_count: usize,
    pub white_count: usize,
    pub edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    /// Edge count between every adjacent pair, if it is the same for all pairs.
    pub fn multiplicity(&self) -> Option<usize> {
        let mut counts = std::collections::HashMap::new();
        for &e in &self.edges {
            *counts.entry(e).or_insert(0usize) += 1;
        }
        let mut values = counts.values().copied();
        let first = values.next()?;
        values.all(|c| c == first).then_some(first)
    }

    pub fn adjacent_pairs(&self) -> usize {
        let mut pairs: Vec<_> = self.edges.clone();
        pairs.sort_unstable();
        pairs.dedup();
        pairs.len()
    }

    pub fn is_simple(&self) -> bool {
        self.adjacent_pairs() == self.edges.len()
    }

    pub fn is_complete_bipartite(&self) -> bool {
        self.adjacent_pairs() == self.black_count * self.white_count
    }

    pub fn black_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.black_count];
        for &(b, _) in &self.edges {
            d[b] += 1;
        }
        d
    }

    pub fn white_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.white_count];
        for &(_, w) in &self.edges {
            d[w] += 1;
        }
        d
    }

    pub fn is_connected(&self) -> bool {
        let total = self.black_count + self.white_count;
        if total == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); total];
        for &(b, w) in &self.edges {
            adj[b].push(self.black_count + w);
            adj[self.black_count + w].push(b);
        }
        let mut seen = vec![false; total];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    reached += 1;
                    stack.push(u);
                }
            }
        }
        reached == total
    }

    /// `K_{b,w}` or `K_{b,w}^(c)` for complete bipartite graphs (black count
    /// first), otherwise `bipartite(b,w;E)` with `^(c)` for uniform
    /// multiplicity `c > 1`.
    pub fn descriptor(&self) -> String {
        let suffix = match self.multiplicity() {
            Some(c) if c > 1 => format!("^({c})"),
            _ => String::new(),
        };
        if self.is_complete_bipartite() {
            format!("K_{{{},{}}}{suffix}", self.black_count, self.white_count)
        } else {
            format!(
                "bipartite({},{};{}){suffix}",
                self.black_count,
                self.white_count,
                self.edges.len()
            )
        }
    }

    /// DOT export: filled black nodes `b<i>`, unfilled white nodes `w<j>`,
    /// one line per edge sorted by endpoints.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph dessin {\n");
        for b in 0..self.black_count {
            out.push_str(&format!(
                "  b{b} [shape=circle, style=filled, fillcolor=black];\n"
            ));
        }
        for w in 0..self.white_count {
            out.push_str(&format!("  w{w} [shape=circle];\n"));
        }
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        for (b, w) in edges {
            out.push_str(&format!("  b{b} -- w{w};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// JSON form of a dessin.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DessinRecord {
    pub group: GroupRecord,
    pub x: ElemRef,
    pub y: ElemRef,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRecord {
    Spec(GroupSpec),
    Table {
        table: Vec<Vec<Elem>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
}

/// An element given by index or by label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemRef {
    Index(Elem),
    Label(String),
}

impl ElemRef {
    pub fn resolve(&self, group: &FiniteGroup) -> Result<Elem> {
        match self {
            ElemRef::Index(i) if *i < group.order() => Ok(*i),
            ElemRef::Index(i) => Err(Error::InvalidParameter(format!(
                "element {i} out of range for a group of order {}",
                group.order()
            ))),
            ElemRef::Label(l) => group
                .labels()
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| Error::InvalidParameter(format!("no element labelled `{l}`"))),
        }
    }
}

/// Isomorphism classes of dessins on one group.
#[derive(Debug, Clone)]
pub struct Classification {
    /// Lexicographically least pair of each class, in increasing order.
    pub representatives: Vec<Dessin>,
    pub generating_pairs: usize,
    /// `|Aut(G)|`, when it was computed.
    pub automorphisms: Option<usize>,
}

impl Classification {
    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }
}

/// Classes as `Aut(G)`-orbits on generating pairs.
pub fn classify_dessins(group: &Arc<FiniteGroup>) -> Result<Classification> {
    if group.order() > AUTOMORPHISM_BOUND {
        return Err(Error::TooLarge {
            order: group.order(),
            bound: AUTOMORPHISM_BOUND,
        });
    }
    let n = group.order();
    let auts = automorphism_group(group)?;
    let pairs = group.generating_pairs();
    let mut visited = vec![false; n * n];
    let mut representatives = Vec::new();
    for &(x, y) in &pairs {
        if visited[x * n + y] {
            continue;
        }
        let mut orbit = 0;
        for a in &auts {
            let slot = a.apply(x) * n + a.apply(y);
            if !visited[slot] {
                visited[slot] = true;
                orbit += 1;
            }
        }
        if orbit != auts.len() {
            return Err(Error::Invariant(format!(
                "orbit of ({x}, {y}) has {orbit} pairs, Aut(G) has {}",
                auts.len()
            )));
        }
        representatives.push(Dessin::new_unchecked(group.clone(), x, y));
    }
    Ok(Classification {
        representatives,
        generating_pairs: pairs.len(),
        automorphisms: Some(auts.len()),
    })
}

/// Classes by direct pairwise extension tests, without computing `Aut(G)`.
/// Works at any table size; cost is about `classes × |P(G)| × |G|`.
pub fn classify_dessins_by_extension(group: &Arc<FiniteGroup>) -> Classification {
    let n = group.order();
    let pairs = group.generating_pairs();
    let orders = group.element_orders();
    let mut visited = vec![false; pairs.len()];
    let mut representatives = Vec::new();
    for i in 0..pairs.len() {
        if visited[i] {
            continue;
        }
        let (x, y) = pairs[i];
        visited[i] = true;
        let profile = (orders[x], orders[y], orders[group.mul(x, y)]);
        for j in i + 1..pairs.len() {
            let (u, v) = pairs[j];
            if visited[j] || (orders[u], orders[v], orders[group.mul(u, v)]) != profile {
                continue;
            }
            if extend_unchecked(group, group, &[x, y], &[u, v]).is_some_and(|m| is_permutation(&m))
            {
                visited[j] = true;
            }
        }
        representatives.push(Dessin::new_unchecked(group.clone(), x, y));
    }
    debug_assert!(representatives.iter().all(|d| d.order() == n));
    Classification {
        representatives,
        generating_pairs: pairs.len(),
        automorphisms: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numth::gcd;

    fn group(spec: &str) -> Arc<FiniteGroup> {
        Arc::new(build_group(&spec.parse().unwrap()).unwrap())
    }

    fn find(g: &FiniteGroup, label: &str) -> Elem {
        g.labels().iter().position(|l| l == label).unwrap()
    }

    fn cyclic(m: usize, r: usize, s: usize) -> Dessin {
        Dessin::new(group(&format!("cyclic:{m}")), r % m, s % m).unwrap()
    }

    #[test]
    fn construction_validates_generation() {
        let q8 = group("q8");
        assert!(Dessin::new(q8.clone(), find(&q8, "i"), find(&q8, "j")).is_ok());
        assert!(Dessin::new(group("cyclic:6"), 1, 4).is_ok());
        match Dessin::new(group("cyclic:6"), 2, 4) {
            Err(Error::NotGenerating { generated, order }) => {
                assert_eq!((generated, order), (3, 6))
            }
            other => panic!("{other:?}"),
        }
        assert!(Dessin::new(q8, 2, 2).is_err());
    }

    #[test]
    fn invariants_of_small_examples() {
        let q8 = group("q8");
        let d = Dessin::new(q8.clone(), find(&q8, "i"), find(&q8, "j")).unwrap();
        let inv = d.invariants();
        assert_eq!(inv.type_triple, (4, 4, 4));
        assert_eq!(inv.genus, 2);
        assert_eq!(inv.graph, "K_{2,2}^(2)");
        assert!(inv.totally_symmetric);

        let c = cyclic(6, 1, 5).invariants();
        assert_eq!((c.type_triple, c.genus), ((6, 6, 1), 0));
        assert_eq!(c.graph, "K_{1,1}^(6)");
        let c = cyclic(6, 1, 1).invariants();
        assert_eq!((c.type_triple, c.genus), ((6, 6, 3), 2));
        assert_eq!(c.euler_characteristic, -2);
    }

    #[test]
    fn core_examples() {
        let core = cyclic(6, 2, 3).core();
        assert_eq!((core.order, core.exponent), (1, None));
        let core = cyclic(6, 1, 1).core();
        assert_eq!((core.order, core.exponent), (6, Some(1)));
        let core = cyclic(6, 1, 5).core();
        assert_eq!((core.order, core.exponent), (6, Some(5)));
        // x^{l/k} = y^{e m/k}
        let d = cyclic(12, 1, 4);
        let core = d.core();
        let (l, m, _) = d.type_triple();
        let k = core.order;
        let g = d.group();
        assert_eq!(
            g.pow(d.x(), (l / k) as i64),
            g.pow(d.y(), (core.exponent.unwrap() as usize * m / k) as i64)
        );
    }

    #[test]
    fn graph_examples() {
        let graph = cyclic(6, 1, 2).underlying_graph();
        assert_eq!(graph.descriptor(), "K_{1,2}^(3)");
        assert_eq!(cyclic(6, 0, 1).underlying_graph().descriptor(), "K_{6,1}");

        let a4 = group("alt4");
        let d = Dessin::new(a4.clone(), find(&a4, "(12)(34)"), find(&a4, "(123)")).unwrap();
        let graph = d.underlying_graph();
        assert_eq!((graph.black_count, graph.white_count), (6, 4));
        assert!(graph.black_degrees().iter().all(|&d| d == 2));
        assert!(graph.white_degrees().iter().all(|&d| d == 3));
        assert!(graph.is_simple() && graph.is_connected());
        assert_eq!(graph.edges.len(), 12);

        let h = group("heisenberg:3");
        let d = Dessin::new(h, 9, 3).unwrap();
        let graph = d.underlying_graph();
        assert_eq!(
            (graph.black_count, graph.white_count, graph.edges.len()),
            (9, 9, 27)
        );
        assert!(graph.is_simple());
        assert!(graph
            .black_degrees()
            .iter()
            .chain(&graph.white_degrees())
            .all(|&d| d == 3));
    }

    #[test]
    fn shadows() {
        let s = cyclic(6, 1, 1).shadow().unwrap();
        assert_eq!(s.order(), 1);
        let s = cyclic(6, 1, 2).shadow().unwrap();
        assert_eq!(s.order(), 2);
        assert_eq!(s.core().order, 1);
        let s = cyclic(6, 1, 5).shadow().unwrap();
        assert!(s.is_symmetric());
    }

    #[test]
    fn symmetry_flags() {
        let d = cyclic(6, 1, 5);
        assert!(d.is_symmetric() && d.is_reflexible());
        for r in 0..12 {
            for s in 0..12 {
                if gcd(gcd(r, s), 12) == 1 {
                    assert!(cyclic(12, r as usize, s as usize).is_reflexible());
                }
            }
        }
        assert!(!cyclic(6, 1, 2).is_symmetric());
        assert!(!cyclic(6, 1, 5).is_totally_symmetric());
        assert!(Dessin::trivial().is_totally_symmetric());
    }

    #[test]
    fn isomorphism_examples() {
        assert!(cyclic(6, 1, 5).is_isomorphic(&cyclic(6, 5, 1)));
        assert!(!cyclic(6, 1, 2).is_isomorphic(&cyclic(6, 2, 1)));
        let d = cyclic(6, 2, 3);
        assert!(d.is_isomorphic(&d));
        // across tables
        let a = Dessin::from_spec(&"product:(cyclic:2)x(cyclic:3)".parse().unwrap(), 5, 5).unwrap();
        assert!(a.is_isomorphic(&cyclic(6, 1, 1)));
        assert!(!a.is_isomorphic(&cyclic(6, 1, 5)));
    }

    #[test]
    fn classification_counts() {
        for (spec, classes) in [("alt4", 4), ("q8", 1), ("cyclic:6", 12), ("cyclic:1", 1)] {
            let g = group(spec);
            let c = classify_dessins(&g).unwrap();
            assert_eq!(c.class_count(), classes, "{spec}");
            assert_eq!(
                c.class_count() * c.automorphisms.unwrap(),
                c.generating_pairs
            );
            let e = classify_dessins_by_extension(&g);
            let pairs = |c: &Classification| -> Vec<(Elem, Elem)> {
                c.representatives.iter().map(|d| (d.x(), d.y())).collect()
            };
            assert_eq!(pairs(&c), pairs(&e), "{spec}");
        }
    }

    #[test]
    fn json_round_trip() {
        let q8 = group("q8");
        let d = Dessin::new(q8, 2, 4).unwrap();
        let text = d.to_json().unwrap();
        assert_eq!(text, r#"{"group":"q8","x":2,"y":4}"#);
        assert_eq!(Dessin::from_json(&text).unwrap(), d);

        let by_label = Dessin::from_json(r#"{"group":"alt4","x":"(12)(34)","y":"(123)"}"#).unwrap();
        assert_eq!(by_label.type_triple(), (2, 3, 3));

        let table = r#"{"group":{"table":[[0,1],[1,0]]},"x":1,"y":0}"#;
        let d = Dessin::from_json(table).unwrap();
        assert_eq!(d.order(), 2);
        let again = Dessin::from_json(&d.to_json().unwrap()).unwrap();
        assert_eq!(again, d);
    }

    #[test]
    fn trivial_dot() {
        let dot = Dessin::trivial().underlying_graph().to_dot();
        assert_eq!(dot.matches("fillcolor=black").count(), 1);
        assert_eq!(dot.matches(" -- ").count(), 1);
        assert!(dot.contains("w0 [shape=circle]"));
    }
}
