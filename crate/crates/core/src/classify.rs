//! Closed-form classification of cyclic and abelian dessins.
//!
//! Every closed form here is checked in tests against the group-theoretic
//! computation on the constructed dessin, which is the ground truth.

use std::sync::Arc;

use serde::Serialize;

use crate::dessin::{Dessin, DessinInvariants};
use crate::error::{Error, Result};
use crate::group::{build_group, Elem, FiniteGroup, GroupSpec};
use crate::numth::{
    big_to_u64, crt, dedekind_psi, euler_phi, factorize, gcd, is_prime, lcm, mod_inverse,
    sqrt_one_units,
};
use crate::ops::{dual, join_all};

/// `C(m; r, s) = (Z_m, g^r, g^s)` with `gcd(r, s, m) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CyclicParams {
    pub m: u64,
    pub r: u64,
    pub s: u64,
}

impl CyclicParams {
    /// Reduces `r`, `s` mod `m` and checks the generating condition.
    pub fn new(m: u64, r: u64, s: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("m must be positive".into()));
        }
        let (r, s) = (r % m, s % m);
        if gcd(gcd(r, s), m) != 1 {
            return Err(Error::InvalidParameter(format!(
                "gcd({r}, {s}, {m}) ≠ 1, so g^{r} and g^{s} do not generate Z_{m}"
            )));
        }
        Ok(Self { m, r, s })
    }
}

pub fn cyclic_dessin(params: &CyclicParams) -> Result<Dessin> {
    let group = Arc::new(build_group(&GroupSpec::Cyclic(params.m))?);
    Dessin::new(group, params.r as Elem, params.s as Elem)
}

/// The unit `k` with `(t, q) ≡ k·(r, s) (mod m)`, if there is one.
pub fn cyclic_scaling_unit(m: u64, (r, s): (u64, u64), (t, q): (u64, u64)) -> Option<u64> {
    (0..m.max(1)).find(|&k| gcd(k, m) == 1 && (k * r) % m == t % m && (k * s) % m == q % m)
}

pub fn cyclic_isomorphic(m: u64, rs: (u64, u64), tq: (u64, u64)) -> bool {
    cyclic_scaling_unit(m, rs, tq).is_some()
}

/// Invariants of `C(m; r, s)` from closed forms alone.
pub fn cyclic_closed_invariants(params: &CyclicParams) -> DessinInvariants {
    let CyclicParams { m, r, s } = *params;
    let (d1, d2, d3) = (gcd(m, r), gcd(m, s), gcd(m, (r + s) % m));
    let (l, mm, n) = (m / d1, m / d2, m / d3);
    let genus = (m + 2 - d1 - d2 - d3) / 2;
    let c = m / gcd(m, lcm(r, s));
    let core_exponent = (c > 1).then(|| {
        // g^{r·l/c} = g^{e·s·mm/c}
        let lhs = (r * (l / c)) % m;
        (0..c)
            .find(|&e| (e * s % m) * (mm / c) % m == lhs)
            .expect("core exponent exists")
    });
    let symmetric = gcd(r, m) == 1 && {
        let e = mod_inverse(r, m).unwrap() * s % m;
        (e * e) % m == 1 % m
    };
    DessinInvariants {
        order: m as usize,
        type_triple: (l as usize, mm as usize, n as usize),
        euler_characteristic: d1 as i64 + d2 as i64 + d3 as i64 - m as i64,
        genus,
        core_order: c as usize,
        core_exponent,
        black_vertices: d1 as usize,
        white_vertices: d2 as usize,
        faces: d3 as usize,
        graph: complete_bipartite(d1, d2, c),
        symmetric,
        reflexible: true,
        totally_symmetric: m == 1,
        nilpotency_class: Some(usize::from(m > 1)),
    }
}

fn complete_bipartite(black: u64, white: u64, multiplicity: u64) -> String {
    if multiplicity > 1 {
        format!("K_{{{black},{white}}}^({multiplicity})")
    } else {
        format!("K_{{{black},{white}}}")
    }
}

/// Lexicographically least `(r, s)` of each unit-scaling orbit, in increasing
/// order; there are `ψ(m)` of them.
pub fn cyclic_classes(m: u64) -> Result<Vec<CyclicParams>> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    let units: Vec<u64> = (0..m).filter(|&k| gcd(k, m) == 1).collect();
    let mut seen = vec![false; (m * m) as usize];
    let mut out = Vec::new();
    for r in 0..m {
        for s in 0..m {
            if seen[(r * m + s) as usize] || gcd(gcd(r, s), m) != 1 {
                continue;
            }
            for &k in &units {
                seen[((k * r % m) * m + k * s % m) as usize] = true;
            }
            out.push(CyclicParams { m, r, s });
        }
    }
    Ok(out)
}

/// `(1, e)` for every `e` with `e² ≡ 1 (mod m)`.
pub fn cyclic_symmetric_classes(m: u64) -> Result<Vec<CyclicParams>> {
    sqrt_one_units(m)
        .into_iter()
        .map(|e| CyclicParams::new(m, 1, e))
        .collect()
}

/// Same generalized-Wilson orbit iff `gcd(r, m) = gcd(t, m)` and
/// `gcd(s, m) = gcd(q, m)`.
pub fn cyclic_wilson_orbit_equal(m: u64, (r, s): (u64, u64), (t, q): (u64, u64)) -> bool {
    gcd(r, m) == gcd(t, m) && gcd(s, m) == gcd(q, m)
}

/// Parameters of the abelian p-dessin `A(p; a, b, c, e)`:
/// `x^{p^b} = y^{p^{a+c}} = [x, y] = 1`, `y^{p^a} = x^{e·p^{b−c}}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AbelianPParams {
    pub p: u64,
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub e: u64,
}

impl AbelianPParams {
    pub fn new(p: u64, a: u32, b: u32, c: u32, e: u64) -> Result<Self> {
        let params = Self { p, a, b, c, e };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        let Self { p, a, b, c, e } = *self;
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        if !is_prime(p) {
            return bad(format!("{p} is not prime"));
        }
        if a > b {
            return bad(format!("need a ≤ b, got a = {a}, b = {b}"));
        }
        if c > b - a {
            return bad(format!("need 0 ≤ c ≤ b − a, got c = {c}"));
        }
        let pc = p.pow(c);
        if c == 0 && e != 1 {
            return bad(format!("e must be 1 when c = 0, got {e}"));
        }
        if c > 0 && (e >= pc || gcd(e, p) != 1) {
            return bad(format!("e = {e} is not a unit in 0..{pc}"));
        }
        Ok(())
    }

    fn pow(&self, k: u32) -> u64 {
        self.p.pow(k)
    }

    /// `Z_{p^b} ⊕ Z_{p^a}`.
    pub fn group_spec(&self) -> GroupSpec {
        GroupSpec::Abelian(vec![self.pow(self.b), self.pow(self.a)])
    }

    /// `x = (1, 0)` and `y = (e·p^{b−a−c}, 1)` as coordinate pairs.
    pub fn generators(&self) -> ((u64, u64), (u64, u64)) {
        let pb = self.pow(self.b);
        let shift = self.pow(self.b - self.a - self.c);
        ((1 % pb, 0), ((self.e * shift) % pb, 1 % self.pow(self.a)))
    }

    /// `d = gcd(p^{b−a}, 1 + e·p^{b−a−c})`.
    pub fn d(&self) -> u64 {
        gcd(
            self.pow(self.b - self.a),
            1 + self.e * self.pow(self.b - self.a - self.c),
        )
    }

    pub fn is_symmetric_closed(&self) -> bool {
        let pc = self.pow(self.c);
        self.c == self.b - self.a && (self.e * self.e) % pc == 1 % pc
    }
}

/// `A(p; a, b, c, e)` or its colour dual.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AbelianPClass {
    pub params: AbelianPParams,
    pub dual: bool,
}

impl AbelianPClass {
    pub fn dessin(&self) -> Result<Dessin> {
        let d = abelian_p_dessin(&self.params)?;
        Ok(if self.dual { dual(&d) } else { d })
    }

    pub fn closed_invariants(&self) -> DessinInvariants {
        let mut inv = abelian_p_closed_invariants(&self.params);
        if self.dual {
            let (l, m, n) = inv.type_triple;
            inv.type_triple = (m, l, n);
            std::mem::swap(&mut inv.black_vertices, &mut inv.white_vertices);
            let p = &self.params;
            inv.graph = complete_bipartite(p.pow(p.b - p.c), p.pow(p.a), p.pow(p.c));
            inv.core_exponent = (p.c > 0).then_some(p.e);
        }
        inv
    }
}

impl std::fmt::Display for AbelianPClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let AbelianPParams { p, a, b, c, e } = self.params;
        write!(f, "A({p};{a},{b},{c},{e})")?;
        if self.dual {
            f.write_str("*")?;
        }
        Ok(())
    }
}

/// Realization on `Z_{p^b} ⊕ Z_{p^a}` with `x = (1, 0)` and
/// `y = (e·p^{b−a−c}, 1)`; the defining relations are checked.
pub fn abelian_p_dessin(params: &AbelianPParams) -> Result<Dessin> {
    params.validate()?;
    let pa = params.pow(params.a);
    let ((x0, x1), (y0, y1)) = params.generators();
    let group = Arc::new(build_group(&params.group_spec())?);
    let (x, y) = ((x0 * pa + x1) as Elem, (y0 * pa + y1) as Elem);
    let d = Dessin::new(group, x, y)?;
    let g = d.group();
    let AbelianPParams { a, b, c, e, .. } = *params;
    let relations = g.element_order(x) as u64 == params.pow(b)
        && g.element_order(y) as u64 == params.pow(a + c)
        && g.pow(y, pa as i64) == g.pow(x, (e * params.pow(b - c)) as i64);
    if !relations {
        return Err(Error::Invariant(format!(
            "realization of {params:?} violates its presentation"
        )));
    }
    Ok(d)
}

/// Closed-form invariants of `A(p; a, b, c, e)`: type `(p^b, p^{a+c}, p^b/d)`,
/// genus `½(2 + p^a(p^b − d − 1) − p^{b−c})`, graph `K_{p^a, p^{b−c}}` with
/// multiplicity `p^c`, core exponent `e⁻¹ mod p^c`.
pub fn abelian_p_closed_invariants(params: &AbelianPParams) -> DessinInvariants {
    let AbelianPParams { a, b, c, e, .. } = *params;
    let pw = |k| params.pow(k);
    let d = params.d();
    let order = pw(a + b);
    let chi = pw(a) as i64 * (1 + d as i64 - pw(b) as i64) + pw(b - c) as i64;
    let genus = ((2 - chi) / 2) as u64;
    DessinInvariants {
        order: order as usize,
        type_triple: (pw(b) as usize, pw(a + c) as usize, (pw(b) / d) as usize),
        euler_characteristic: chi,
        genus,
        core_order: pw(c) as usize,
        core_exponent: (c > 0).then(|| mod_inverse(e, pw(c)).expect("e is a unit")),
        black_vertices: pw(a) as usize,
        white_vertices: pw(b - c) as usize,
        faces: (pw(a) * d) as usize,
        graph: complete_bipartite(pw(a), pw(b - c), pw(c)),
        symmetric: params.is_symmetric_closed(),
        reflexible: true,
        totally_symmetric: a == b,
        nilpotency_class: Some(usize::from(order > 1)),
    }
}

/// All classes of abelian p-dessins on `Z_{p^a} ⊕ Z_{p^b}`: the primary
/// classes `(c, e)` for `0 ≤ c ≤ b − a` and the colour duals of those with
/// `c < b − a` (the dual of `(b − a, e)` is the primary `(b − a, e⁻¹)`).
/// Sorted by `(c, e)`, primary before dual; `ψ(p^{b−a})` entries.
pub fn abelian_p_classes(p: u64, a: u32, b: u32) -> Result<Vec<AbelianPClass>> {
    if !is_prime(p) || a > b {
        return Err(Error::InvalidParameter(format!(
            "need a prime p and a ≤ b, got p = {p}, a = {a}, b = {b}"
        )));
    }
    let mut out = Vec::new();
    for c in 0..=b - a {
        let pc = p.pow(c);
        let units: Vec<u64> = if c == 0 {
            vec![1]
        } else {
            (1..pc).filter(|&e| e % p != 0).collect()
        };
        for e in units {
            let params = AbelianPParams { p, a, b, c, e };
            out.push(AbelianPClass {
                params,
                dual: false,
            });
            if c < b - a {
                out.push(AbelianPClass { params, dual: true });
            }
        }
    }
    Ok(out)
}

/// Same generalized-Wilson orbit iff `c₁ = c₂`.
pub fn abelian_wilson_orbit_equal(p1: &AbelianPParams, p2: &AbelianPParams) -> Result<bool> {
    if (p1.p, p1.a, p1.b) != (p2.p, p2.a, p2.b) {
        return Err(Error::InvalidParameter(
            "Wilson orbits compare classes with the same (p, a, b)".into(),
        ));
    }
    Ok(p1.c == p2.c)
}

/// Classes of one prime component of `Z_n ⊕ Z_m`.
#[derive(Debug, Clone, Serialize)]
pub struct PrimeComponent {
    pub p: u64,
    pub a: u32,
    pub b: u32,
    pub classes: Vec<AbelianPClass>,
}

/// A class of abelian dessins on `Z_n ⊕ Z_m`, with its per-prime components.
#[derive(Debug, Clone)]
pub struct AbelianRepresentative {
    pub components: Vec<AbelianPClass>,
    /// Realized on `abelian:n,m`.
    pub dessin: Dessin,
}

#[derive(Debug, Clone)]
pub struct AbelianClassList {
    pub n: u64,
    pub m: u64,
    pub per_prime: Vec<PrimeComponent>,
    pub total_count: u64,
    pub symmetric_count: u64,
    pub representatives: Vec<AbelianRepresentative>,
}

/// All classes of dessins with automorphism group `Z_n ⊕ Z_m` (`n | m`).
///
/// Each class is the join of one p-dessin per prime dividing `m`. The join is
/// computed and checked against a copy realized on `abelian:n,m` by Chinese
/// remaindering, which is the representative returned.
pub fn classify_abelian(n: u64, m: u64) -> Result<AbelianClassList> {
    if n == 0 || m == 0 || !m.is_multiple_of(n) {
        return Err(Error::InvalidParameter(format!(
            "need n | m, got n = {n}, m = {m}"
        )));
    }
    let mut per_prime = Vec::new();
    for p in factorize(m)?.primes() {
        let a = factorize(n)?.valuation(p);
        let b = factorize(m)?.valuation(p);
        per_prime.push(PrimeComponent {
            p,
            a,
            b,
            classes: abelian_p_classes(p, a, b)?,
        });
    }
    let group = Arc::new(build_group(&GroupSpec::Abelian(vec![n, m]))?);

    let mut representatives = Vec::new();
    let mut choice = vec![0usize; per_prime.len()];
    loop {
        let components: Vec<AbelianPClass> = per_prime
            .iter()
            .zip(&choice)
            .map(|(pc, &i)| pc.classes[i])
            .collect();
        let dessin = assemble(&group, n, m, &components)?;
        let parts: Vec<Dessin> = components
            .iter()
            .map(|c| c.dessin())
            .collect::<Result<_>>()?;
        if !join_all(&parts)?.is_isomorphic(&dessin) {
            return Err(Error::Invariant(format!(
                "join of {components:?} differs from its realization on Z_{n} ⊕ Z_{m}"
            )));
        }
        representatives.push(AbelianRepresentative { components, dessin });
        // odometer, last prime fastest
        let mut k = per_prime.len();
        loop {
            if k == 0 {
                let symmetric_count = per_prime
                    .iter()
                    .map(|pc| {
                        pc.classes
                            .iter()
                            .filter(|c| c.params.is_symmetric_closed() && !c.dual)
                            .count() as u64
                    })
                    .product();
                let total_count = big_to_u64(&dedekind_psi(m / n)).expect("fits in u64");
                if representatives.len() as u64 != total_count {
                    return Err(Error::Invariant(format!(
                        "{} classes assembled, ψ({}) = {total_count}",
                        representatives.len(),
                        m / n
                    )));
                }
                return Ok(AbelianClassList {
                    n,
                    m,
                    per_prime,
                    total_count,
                    symmetric_count,
                    representatives,
                });
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < per_prime[k].classes.len() {
                break;
            }
            choice[k] = 0;
        }
    }
}

/// The join of the per-prime dessins, written on `Z_n ⊕ Z_m` with index
/// `v·m + u` for the element `(v, u)`.
fn assemble(
    group: &Arc<FiniteGroup>,
    n: u64,
    m: u64,
    components: &[AbelianPClass],
) -> Result<Dessin> {
    // per-prime coordinates (u mod p^b, v mod p^a) of x and y
    let mut xu = Vec::new();
    let mut xv = Vec::new();
    let mut yu = Vec::new();
    let mut yv = Vec::new();
    for class in components {
        let params = &class.params;
        let (pb, pa) = (params.pow(params.b), params.pow(params.a));
        let (mut gx, mut gy) = params.generators();
        if class.dual {
            std::mem::swap(&mut gx, &mut gy);
        }
        xu.push((gx.0, pb));
        xv.push((gx.1, pa));
        yu.push((gy.0, pb));
        yv.push((gy.1, pa));
    }
    let index = |u: &[(u64, u64)], v: &[(u64, u64)]| (crt(v) * m + crt(u)) as Elem;
    debug_assert!(
        components
            .iter()
            .map(|c| c.params.pow(c.params.a))
            .product::<u64>()
            == n
    );
    Dessin::new(group.clone(), index(&xu, &xv), index(&yu, &yv))
}

/// `|{e : e² ≡ 1 (mod k)}|` from the prime factorization.
pub fn sqrt_one_count(k: u64) -> u64 {
    let f = factorize(k).expect("k positive");
    f.factors()
        .iter()
        .map(|&(p, v)| match (p, v) {
            (2, 1) => 1,
            (2, 2) => 2,
            (2, _) => 4,
            _ => 2,
        })
        .product()
}

/// `φ(p^c)` summed over `0 ≤ c ≤ b − a`, plus the duals: the closed count
/// `ψ(p^{b−a})` of abelian p-dessin classes.
pub fn abelian_p_class_count(p: u64, a: u32, b: u32) -> u64 {
    let k = b - a;
    let primaries: u64 = (0..=k).map(|c| euler_phi(p.pow(c))).sum();
    let duals: u64 = (0..k).map(|c| euler_phi(p.pow(c))).sum();
    primaries + duals
}
