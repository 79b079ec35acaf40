//! Concrete Cayley tables for every [`GroupSpec`] variant.
//!
//! Element orderings (identity always at index 0):
//!
//! * `cyclic(m)`: index `i` is `g^i`.
//! * `abelian(n_1, …, n_k)`: mixed radix, first coordinate most significant.
//! * `dihedral(n)`: index `e·(n/2) + i` is `r^i s^e`, with `s r s = r⁻¹`.
//! * `q8`: `1, -1, i, -i, j, -j, k, -k`.
//! * `alt(k)`, `sym(k)`: permutations of `{1..k}` in lexicographic order of
//!   their image lists; `g·h` applies `g` first, then `h`.
//! * `metacyclic(m, n, t)`: index `i·n + j` is `g^i h^j`.
//! * `heisenberg(p)`: index `a·p² + b·p + c` is the matrix
//!   `[[1, a, c], [0, 1, b], [0, 0, 1]]`; `x = (1,0,0)`, `y = (0,1,0)`.
//! * `product(A, B)`: index `a·|B| + b`.

use std::fmt;
use std::str::FromStr;

use super::{FiniteGroup, GroupSpec};
use crate::error::{Error, Result};
use crate::numth::{divisors, is_prime, mod_pow};

pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroup> {
    spec.validate()?;
    let order = spec.order();
    if order > super::MAX_TABLE_ORDER as u64 {
        return Err(Error::TooLarge {
            order: order as usize,
            bound: super::MAX_TABLE_ORDER,
        });
    }
    let group = match spec {
        GroupSpec::Cyclic(m) => cyclic(*m as usize),
        GroupSpec::Abelian(factors) => abelian(factors),
        GroupSpec::Dihedral(n) => dihedral(*n as usize),
        GroupSpec::Quaternion8 => quaternion8(),
        GroupSpec::Alternating(k) => permutations(*k as usize, true),
        GroupSpec::Symmetric(k) => permutations(*k as usize, false),
        GroupSpec::Metacyclic { m, n, t } => metacyclic(*m as usize, *n as usize, *t as usize),
        GroupSpec::Heisenberg(p) => heisenberg(*p as usize),
        GroupSpec::Product(a, b) => build_group(a)?.direct_product(&build_group(b)?),
    }?;
    Ok(group.with_spec(spec.clone()))
}

fn cyclic(m: usize) -> Result<FiniteGroup> {
    let labels = (0..m).map(|i| format!("g^{i}")).collect();
    FiniteGroup::from_fn(m, |a, b| (a + b) % m, labels)
}

fn abelian(factors: &[u64]) -> Result<FiniteGroup> {
    let factors: Vec<usize> = factors.iter().map(|&f| f as usize).collect();
    let order: usize = factors.iter().product();
    let digits = |mut v: usize| {
        let mut d = vec![0; factors.len()];
        for (slot, &f) in d.iter_mut().zip(&factors).rev() {
            *slot = v % f;
            v /= f;
        }
        d
    };
    let labels = (0..order)
        .map(|v| {
            let parts: Vec<String> = digits(v).iter().map(usize::to_string).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    FiniteGroup::from_fn(
        order,
        |a, b| {
            digits(a)
                .iter()
                .zip(digits(b))
                .zip(&factors)
                .fold(0, |acc, ((&x, y), &f)| acc * f + (x + y) % f)
        },
        labels,
    )
}

fn dihedral(n: usize) -> Result<FiniteGroup> {
    let h = n / 2;
    let labels = (0..n)
        .map(|v| match (v / h, v % h) {
            (0, i) => format!("r^{i}"),
            (_, i) => format!("r^{i}s"),
        })
        .collect();
    FiniteGroup::from_fn(
        n,
        |a, b| {
            let (e, i) = (a / h, a % h);
            let (f, j) = (b / h, b % h);
            let rot = if e == 0 { (i + j) % h } else { (i + h - j) % h };
            ((e + f) % 2) * h + rot
        },
        labels,
    )
}

fn quaternion8() -> Result<FiniteGroup> {
    // Unit u in {1, i, j, k} = 0..4 and sign bit; basis products u·v = sign·w.
    const PRODUCT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let names = ["1", "i", "j", "k"];
    let labels = (0..8)
        .map(|v| {
            let sign = if v % 2 == 0 { "" } else { "-" };
            format!("{sign}{}", names[v / 2])
        })
        .collect();
    FiniteGroup::from_fn(
        8,
        |a, b| {
            let (sign, unit) = PRODUCT[a / 2][b / 2];
            2 * unit + (sign + a % 2 + b % 2) % 2
        },
        labels,
    )
}

fn all_permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (1..k).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..k).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

fn is_even(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    let mut transpositions = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}

fn cycle_notation(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            out.push_str(&(i + 1).to_string());
            i = perm[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        "()".to_string()
    } else {
        out
    }
}

fn permutations(k: usize, even_only: bool) -> Result<FiniteGroup> {
    let perms: Vec<Vec<usize>> = all_permutations(k)
        .into_iter()
        .filter(|p| !even_only || is_even(p))
        .collect();
    let index: std::collections::HashMap<Vec<usize>, usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    FiniteGroup::from_fn(
        perms.len(),
        |a, b| {
            let composed: Vec<usize> = perms[a].iter().map(|&i| perms[b][i]).collect();
            index[&composed]
        },
        labels,
    )
}

fn metacyclic(m: usize, n: usize, t: usize) -> Result<FiniteGroup> {
    // h^j g^k = g^k h^(j·t^k)
    let t_powers: Vec<usize> = (0..m)
        .map(|k| mod_pow(t as u64, k as u64, n as u64) as usize)
        .collect();
    let labels = (0..m * n)
        .map(|v| format!("g^{}h^{}", v / n, v % n))
        .collect();
    FiniteGroup::from_fn(
        m * n,
        |a, b| {
            let (i, j) = (a / n, a % n);
            let (k, l) = (b / n, b % n);
            ((i + k) % m) * n + (j * t_powers[k] + l) % n
        },
        labels,
    )
}

fn heisenberg(p: usize) -> Result<FiniteGroup> {
    let split = |v: usize| (v / (p * p), (v / p) % p, v % p);
    let labels = (0..p * p * p)
        .map(|v| {
            let (a, b, c) = split(v);
            format!("[{a},{b},{c}]")
        })
        .collect();
    FiniteGroup::from_fn(
        p * p * p,
        |u, v| {
            let (a, b, c) = split(u);
            let (a2, b2, c2) = split(v);
            ((a + a2) % p) * p * p + ((b + b2) % p) * p + (c + c2 + a * b2) % p
        },
        labels,
    )
}

/// Families of constructors used for censuses and corpus-wide property checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstructorFamily {
    Cyclic,
    Abelian,
    Dihedral,
    Quaternion,
    Alternating,
    Symmetric,
    Metacyclic,
    Heisenberg,
}

impl ConstructorFamily {
    pub const ALL: [ConstructorFamily; 8] = [
        ConstructorFamily::Cyclic,
        ConstructorFamily::Abelian,
        ConstructorFamily::Dihedral,
        ConstructorFamily::Quaternion,
        ConstructorFamily::Alternating,
        ConstructorFamily::Symmetric,
        ConstructorFamily::Metacyclic,
        ConstructorFamily::Heisenberg,
    ];
}

impl fmt::Display for ConstructorFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ConstructorFamily::Cyclic => "cyclic",
            ConstructorFamily::Abelian => "abelian",
            ConstructorFamily::Dihedral => "dihedral",
            ConstructorFamily::Quaternion => "q8",
            ConstructorFamily::Alternating => "alt",
            ConstructorFamily::Symmetric => "sym",
            ConstructorFamily::Metacyclic => "metacyclic",
            ConstructorFamily::Heisenberg => "heisenberg",
        };
        f.write_str(name)
    }
}

impl FromStr for ConstructorFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lowered = s.to_ascii_lowercase();
        ConstructorFamily::ALL
            .into_iter()
            .find(|f| f.to_string() == lowered)
            .ok_or_else(|| Error::Parse {
                input: s.to_string(),
                reason: "unknown constructor family".into(),
            })
    }
}

/// Every group spec of order at most `max_order` from the selected families,
/// in a fixed order (family, then parameters).
///
/// Abelian groups are the two-factor products `Z_n ⊕ Z_m` with `1 < n | m`
/// (cyclic groups come from the cyclic family); dihedral groups start at order
/// 6; metacyclic groups are the split extensions with `1 < t < n`.
pub fn constructor_corpus(max_order: u64, families: &[ConstructorFamily]) -> Vec<GroupSpec> {
    let mut families = families.to_vec();
    families.sort();
    families.dedup();
    let mut out = Vec::new();
    for family in families {
        match family {
            ConstructorFamily::Cyclic => out.extend((1..=max_order).map(GroupSpec::Cyclic)),
            ConstructorFamily::Abelian => {
                for m in 2..=max_order {
                    for n in divisors(m) {
                        if n > 1 && n * m <= max_order {
                            out.push(GroupSpec::Abelian(vec![n, m]));
                        }
                    }
                }
            }
            ConstructorFamily::Dihedral => {
                out.extend((6..=max_order).step_by(2).map(GroupSpec::Dihedral))
            }
            ConstructorFamily::Quaternion => {
                if max_order >= 8 {
                    out.push(GroupSpec::Quaternion8);
                }
            }
            ConstructorFamily::Alternating => out.extend(
                (4..=5u8)
                    .map(GroupSpec::Alternating)
                    .filter(|s| s.order() <= max_order),
            ),
            ConstructorFamily::Symmetric => out.extend(
                (3..=5u8)
                    .map(GroupSpec::Symmetric)
                    .filter(|s| s.order() <= max_order),
            ),
            ConstructorFamily::Metacyclic => {
                for m in 2..=max_order {
                    for n in 3..=max_order / m {
                        for t in 2..n {
                            if mod_pow(t, m, n) == 1 {
                                out.push(GroupSpec::Metacyclic { m, n, t });
                            }
                        }
                    }
                }
            }
            ConstructorFamily::Heisenberg => out.extend(
                (3..)
                    .filter(|&p| is_prime(p))
                    .take_while(|&p| p * p * p <= max_order)
                    .map(GroupSpec::Heisenberg),
            ),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> FiniteGroup {
        build_group(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn orders_of_named_groups() {
        assert_eq!(build("cyclic:6").order(), 6);
        assert_eq!(build("metacyclic:8,8,5").order(), 64);
        assert_eq!(build("heisenberg:3").order(), 27);
        assert_eq!(build("alt4").order(), 12);
        assert_eq!(build("sym4").order(), 24);
        assert_eq!(build("q8").order(), 8);
        assert_eq!(build("dihedral:8").order(), 8);
        assert_eq!(build("abelian:2,4").order(), 8);
        assert_eq!(build("product:(cyclic:2)x(cyclic:3)").order(), 6);
    }

    #[test]
    fn heisenberg_has_prime_exponent() {
        let g = build("heisenberg:3");
        assert_eq!(g.exponent(), 3);
        assert!(!g.is_abelian());
        let g5 = build("heisenberg:5");
        assert_eq!(g5.exponent(), 5);
    }

    #[test]
    fn quaternion_orders() {
        let g = build("q8");
        let orders = g.element_orders();
        assert_eq!(orders[0], 1);
        assert_eq!(orders[1], 2);
        for v in 2..8 {
            assert_eq!(orders[v], 4, "{}", g.label(v));
        }
        // i·j = k
        assert_eq!(g.label(g.mul(2, 4)), "k");
        assert_eq!(g.label(g.mul(4, 2)), "-k");
    }

    #[test]
    fn metacyclic_relation_holds() {
        let g = build("metacyclic:8,8,5");
        let (gen_g, gen_h) = (8, 1);
        assert_eq!(g.element_order(gen_g), 8);
        assert_eq!(g.element_order(gen_h), 8);
        assert_eq!(g.conjugate(gen_h, gen_g), g.pow(gen_h, 5));
    }

    #[test]
    fn dihedral_reflection_inverts_rotation() {
        let g = build("dihedral:10");
        let (r, s) = (1, 5);
        assert_eq!(g.element_order(r), 5);
        assert_eq!(g.element_order(s), 2);
        assert_eq!(g.conjugate(r, s), g.inv(r));
    }

    #[test]
    fn alt4_labels_and_products() {
        let g = build("alt4");
        let find = |l: &str| g.labels().iter().position(|x| x == l).unwrap();
        let (a, b) = (find("(12)(34)"), find("(123)"));
        assert_eq!(g.element_order(a), 2);
        assert_eq!(g.element_order(b), 3);
        assert_eq!(g.label(0), "()");
        // (123) then (124) = (14)(23)
        assert_eq!(g.label(g.mul(find("(123)"), find("(124)"))), "(14)(23)");
    }

    #[test]
    fn same_spec_same_table() {
        assert_eq!(build("metacyclic:4,5,2"), build("metacyclic:4,5,2"));
    }

    #[test]
    fn corpus_is_deterministic_and_bounded() {
        let a = constructor_corpus(64, &ConstructorFamily::ALL);
        let b = constructor_corpus(64, &ConstructorFamily::ALL);
        assert_eq!(a, b);
        assert!(a.iter().all(|s| s.order() <= 64));
        assert!(a.contains(&GroupSpec::Quaternion8));
        assert!(a.contains(&GroupSpec::Heisenberg(3)));
        assert!(a.contains(&GroupSpec::Metacyclic { m: 8, n: 8, t: 5 }));
        assert!(!a.contains(&GroupSpec::Heisenberg(5)));
    }

    #[test]
    fn family_names_round_trip() {
        for f in ConstructorFamily::ALL {
            assert_eq!(f.to_string().parse::<ConstructorFamily>().unwrap(), f);
        }
    }
}
