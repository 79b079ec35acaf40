//! Finite groups stored as Cayley tables.
//!
//! Elements are indices `0..order`. Every constructor in [`build`] places the
//! identity at index 0 and fixes a documented element ordering, so equal
//! specs always produce identical tables.

mod build;
mod morphism;
mod spec;
mod structure;

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub use build::{build_group, constructor_corpus, ConstructorFamily};
pub(crate) use morphism::extend_unchecked;
pub use morphism::{
    automorphism_group, extend_homomorphism, extend_to_automorphism, find_isomorphism,
    generating_tuple, is_automorphism, Automorphism, AUTOMORPHISM_BOUND,
};
pub use spec::GroupSpec;
pub use structure::sylow_projection;

/// Element index into a [`FiniteGroup`].
pub type Elem = usize;

/// Largest order a Cayley table may have (element indices are stored as `u16`).
pub const MAX_TABLE_ORDER: usize = u16::MAX as usize;

/// Associativity is checked exhaustively up to this order at construction.
pub const ASSOCIATIVITY_CHECK_BOUND: usize = 256;

pub struct FiniteGroup {
    order: usize,
    table: Vec<u16>,
    identity: Elem,
    inverse: Vec<Elem>,
    labels: Vec<String>,
    spec: Option<GroupSpec>,
    element_orders: OnceLock<Vec<usize>>,
    nilpotency: OnceLock<Option<usize>>,
}

impl FiniteGroup {
    /// Builds a group from a multiplication function on `0..order`.
    ///
    /// The table is validated: Latin square, two-sided identity, inverses, and
    /// associativity for orders up to [`ASSOCIATIVITY_CHECK_BOUND`].
    pub fn from_fn(
        order: usize,
        mut mul: impl FnMut(Elem, Elem) -> Elem,
        labels: Vec<String>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::BadTable("empty group".into()));
        }
        if order > MAX_TABLE_ORDER {
            return Err(Error::TooLarge {
                order,
                bound: MAX_TABLE_ORDER,
            });
        }
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let c = mul(a, b);
                if c >= order {
                    return Err(Error::BadTable(format!(
                        "product {a}*{b} = {c} out of range"
                    )));
                }
                table.push(c as u16);
            }
        }
        Self::from_flat_table(table, order, labels)
    }

    /// Builds a group from an explicit row-major table (`rows[g][h] = g·h`).
    pub fn from_rows(rows: &[Vec<Elem>], labels: Option<Vec<String>>) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::BadTable("table is not square".into()));
        }
        let labels = labels.unwrap_or_else(|| (0..order).map(|i| format!("e{i}")).collect());
        Self::from_fn(order, |a, b| rows[a][b], labels)
    }

    fn from_flat_table(table: Vec<u16>, order: usize, labels: Vec<String>) -> Result<Self> {
        if labels.len() != order {
            return Err(Error::BadTable(format!(
                "{} labels for {order} elements",
                labels.len()
            )));
        }
        let at = |a: usize, b: usize| table[a * order + b] as usize;

        let mut seen = vec![false; order];
        for a in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..order {
                let c = at(a, b);
                if seen[c] {
                    return Err(Error::BadTable(format!("row {a} repeats element {c}")));
                }
                seen[c] = true;
            }
        }
        for b in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for a in 0..order {
                let c = at(a, b);
                if seen[c] {
                    return Err(Error::BadTable(format!("column {b} repeats element {c}")));
                }
                seen[c] = true;
            }
        }

        let identity = (0..order)
            .find(|&e| (0..order).all(|g| at(e, g) == g && at(g, e) == g))
            .ok_or_else(|| Error::BadTable("no identity element".into()))?;

        let mut inverse = vec![0; order];
        for g in 0..order {
            let inv = (0..order)
                .find(|&h| at(g, h) == identity)
                .expect("Latin square rows contain the identity");
            if at(inv, g) != identity {
                return Err(Error::BadTable(format!(
                    "element {g} has no two-sided inverse"
                )));
            }
            inverse[g] = inv;
        }

        if order <= ASSOCIATIVITY_CHECK_BOUND {
            for a in 0..order {
                for b in 0..order {
                    let ab = at(a, b);
                    for c in 0..order {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(Error::BadTable(format!(
                                "associativity fails on ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        }

        Ok(Self {
            order,
            table,
            identity,
            inverse,
            labels,
            spec: None,
            element_orders: OnceLock::new(),
            nilpotency: OnceLock::new(),
        })
    }

    pub(crate) fn with_spec(mut self, spec: GroupSpec) -> Self {
        self.spec = Some(spec);
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a]
    }

    pub fn pow(&self, a: Elem, exp: i64) -> Elem {
        let o = self.element_order(a) as i64;
        let e = exp.rem_euclid(o);
        let mut acc = self.identity;
        let mut base = a;
        let mut k = e as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    /// `b⁻¹ a b`.
    pub fn conjugate(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(self.inv(b), a), b)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, g: Elem) -> &str {
        &self.labels[g]
    }

    pub fn spec(&self) -> Option<&GroupSpec> {
        self.spec.as_ref()
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    /// Row-major copy of the Cayley table.
    pub fn rows(&self) -> Vec<Vec<Elem>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn element_order(&self, g: Elem) -> usize {
        self.element_orders()[g]
    }

    pub fn element_orders(&self) -> &[usize] {
        self.element_orders.get_or_init(|| {
            (0..self.order)
                .map(|g| {
                    let mut k = 1;
                    let mut acc = g;
                    while acc != self.identity {
                        acc = self.mul(acc, g);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    pub fn exponent(&self) -> usize {
        self.element_orders()
            .iter()
            .fold(1u64, |acc, &o| crate::numth::lcm(acc, o as u64)) as usize
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Powers of `g` starting from the identity.
    pub fn cyclic_subgroup(&self, g: Elem) -> Vec<Elem> {
        let mut out = vec![self.identity];
        let mut acc = g;
        while acc != self.identity {
            out.push(acc);
            acc = self.mul(acc, g);
        }
        out
    }

    /// Smallest subgroup containing `gens`, sorted by element index.
    pub fn subgroup_closure(&self, gens: &[Elem]) -> Vec<Elem> {
        let mut seen = vec![false; self.order];
        let mut out = self.closure_into(gens, &mut seen);
        out.sort_unstable();
        out
    }

    /// Size of `⟨gens⟩` without materializing a sorted list.
    pub fn closure_size(&self, gens: &[Elem]) -> usize {
        let mut seen = vec![false; self.order];
        self.closure_into(gens, &mut seen).len()
    }

    fn closure_into(&self, gens: &[Elem], seen: &mut [bool]) -> Vec<Elem> {
        let mut out = vec![self.identity];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(g) = queue.pop_front() {
            for &s in gens {
                let h = self.mul(g, s);
                if !seen[h] {
                    seen[h] = true;
                    out.push(h);
                    queue.push_back(h);
                }
            }
        }
        out
    }

    pub fn is_generating_pair(&self, x: Elem, y: Elem) -> bool {
        self.closure_size(&[x, y]) == self.order
    }

    /// All ordered generating pairs in row-major `(x, y)` order.
    pub fn generating_pairs(&self) -> Vec<(Elem, Elem)> {
        let n = self.order;
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                seen.iter_mut().for_each(|s| *s = false);
                if self.closure_into(&[x, y], &mut seen).len() == n {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Induced group on a subgroup, with elements ordered by parent index.
    /// Returns the group and the embedding (new index → parent index).
    pub fn subgroup(&self, elems: &[Elem]) -> Result<(FiniteGroup, Vec<Elem>)> {
        let mut members = elems.to_vec();
        members.sort_unstable();
        members.dedup();
        let mut index = vec![usize::MAX; self.order];
        for (i, &g) in members.iter().enumerate() {
            index[g] = i;
        }
        for &a in &members {
            for &b in &members {
                if index[self.mul(a, b)] == usize::MAX {
                    return Err(Error::NotSubgroup(format!(
                        "product of {a} and {b} leaves the set"
                    )));
                }
            }
        }
        let labels = members.iter().map(|&g| self.labels[g].clone()).collect();
        let group = FiniteGroup::from_fn(
            members.len(),
            |a, b| index[self.mul(members[a], members[b])],
            labels,
        )?;
        Ok((group, members))
    }

    pub fn is_normal(&self, subgroup: &[Elem]) -> bool {
        let mut member = vec![false; self.order];
        for &n in subgroup {
            member[n] = true;
        }
        subgroup
            .iter()
            .all(|&n| (0..self.order).all(|g| member[self.conjugate(n, g)]))
    }

    /// Direct product with elements `(a, b)` at index `a·|other| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> Result<FiniteGroup> {
        let m = other.order;
        let labels = (0..self.order)
            .flat_map(|a| (0..m).map(move |b| (a, b)))
            .map(|(a, b)| format!("({},{})", self.labels[a], other.labels[b]))
            .collect();
        FiniteGroup::from_fn(
            self.order * m,
            |i, j| self.mul(i / m, j / m) * m + other.mul(i % m, j % m),
            labels,
        )
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("spec", &self.spec)
            .finish_non_exhaustive()
    }
}

impl Clone for FiniteGroup {
    fn clone(&self) -> Self {
        Self {
            order: self.order,
            table: self.table.clone(),
            identity: self.identity,
            inverse: self.inverse.clone(),
            labels: self.labels.clone(),
            spec: self.spec.clone(),
            element_orders: OnceLock::new(),
            nilpotency: OnceLock::new(),
        }
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.spec {
            Some(spec) => write!(f, "{spec}"),
            None => write!(f, "group of order {}", self.order),
        }
    }
}
