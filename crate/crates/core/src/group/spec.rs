use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numth::{is_prime, mod_pow};

/// Description of a constructible group.
///
/// Text grammar (case-insensitive, no whitespace): `cyclic:6`, `abelian:2,4`,
/// `dihedral:8`, `q8`, `alt4`, `sym4`, `metacyclic:8,8,5`, `heisenberg:3`,
/// `product:(cyclic:2)x(cyclic:3)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(u64),
    /// Direct product of cyclic groups of the listed orders, first factor most
    /// significant in the element ordering.
    Abelian(Vec<u64>),
    /// Dihedral group of the given order (`n` even).
    Dihedral(u64),
    Quaternion8,
    Alternating(u8),
    Symmetric(u8),
    /// `⟨g, h | g^m = h^n = 1, h^g = h^t⟩`.
    Metacyclic {
        m: u64,
        n: u64,
        t: u64,
    },
    /// Unitriangular 3×3 matrices over `Z_p`, `p` an odd prime.
    Heisenberg(u64),
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    /// Checks the parameter constraints of each variant.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        match self {
            GroupSpec::Cyclic(m) if *m == 0 => bad("cyclic order must be positive".into()),
            GroupSpec::Abelian(factors) if factors.is_empty() || factors.contains(&0) => {
                bad("abelian factors must be a nonempty list of positive integers".into())
            }
            GroupSpec::Dihedral(n) if *n < 2 || n % 2 == 1 => bad(format!(
                "dihedral order must be even and at least 2, got {n}"
            )),
            GroupSpec::Alternating(k) | GroupSpec::Symmetric(k) if *k == 0 || *k > 5 => {
                bad(format!("permutation degree must be in 1..=5, got {k}"))
            }
            GroupSpec::Metacyclic { m, n, t } => {
                if *m == 0 || *n == 0 {
                    return bad("metacyclic orders must be positive".into());
                }
                if mod_pow(*t, *m, *n) != 1 % n {
                    return bad(format!(
                        "metacyclic needs t^m ≡ 1 (mod n); {t}^{m} mod {n} ≠ 1"
                    ));
                }
                Ok(())
            }
            GroupSpec::Heisenberg(p) if *p == 2 || !is_prime(*p) => {
                bad(format!("heisenberg needs an odd prime, got {p}"))
            }
            GroupSpec::Product(a, b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }

    /// Order of the group described, without building it.
    pub fn order(&self) -> u64 {
        match self {
            GroupSpec::Cyclic(m) => *m,
            GroupSpec::Abelian(f) => f.iter().product(),
            GroupSpec::Dihedral(n) => *n,
            GroupSpec::Quaternion8 => 8,
            GroupSpec::Alternating(k) => (1..=*k as u64).product::<u64>().div_ceil(2).max(1),
            GroupSpec::Symmetric(k) => (1..=*k as u64).product(),
            GroupSpec::Metacyclic { m, n, .. } => m * n,
            GroupSpec::Heisenberg(p) => p * p * p,
            GroupSpec::Product(a, b) => a.order() * b.order(),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(m) => write!(f, "cyclic:{m}"),
            GroupSpec::Abelian(factors) => {
                let parts: Vec<String> = factors.iter().map(u64::to_string).collect();
                write!(f, "abelian:{}", parts.join(","))
            }
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Quaternion8 => write!(f, "q8"),
            GroupSpec::Alternating(k) => write!(f, "alt{k}"),
            GroupSpec::Symmetric(k) => write!(f, "sym{k}"),
            GroupSpec::Metacyclic { m, n, t } => write!(f, "metacyclic:{m},{n},{t}"),
            GroupSpec::Heisenberg(p) => write!(f, "heisenberg:{p}"),
            GroupSpec::Product(a, b) => write!(f, "product:({a})x({b})"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let lowered = input.to_ascii_lowercase();
        let fail = |reason: &str| Error::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        if lowered.chars().any(char::is_whitespace) {
            return Err(fail("whitespace is not allowed"));
        }
        let spec = parse_spec(&lowered).map_err(|reason| fail(&reason))?;
        spec.validate()?;
        Ok(spec)
    }
}

fn parse_numbers(args: &str) -> std::result::Result<Vec<u64>, String> {
    args.split(',')
        .map(|a| {
            a.parse::<u64>()
                .map_err(|_| format!("`{a}` is not a nonnegative integer"))
        })
        .collect()
}

fn single(args: &str) -> std::result::Result<u64, String> {
    match parse_numbers(args)?.as_slice() {
        [v] => Ok(*v),
        _ => Err("expected exactly one parameter".into()),
    }
}

fn parse_spec(s: &str) -> std::result::Result<GroupSpec, String> {
    if s == "q8" {
        return Ok(GroupSpec::Quaternion8);
    }
    if let Some(k) = s.strip_prefix("alt") {
        return k
            .parse::<u8>()
            .map(GroupSpec::Alternating)
            .map_err(|_| format!("bad degree `{k}`"));
    }
    if let Some(k) = s.strip_prefix("sym") {
        return k
            .parse::<u8>()
            .map(GroupSpec::Symmetric)
            .map_err(|_| format!("bad degree `{k}`"));
    }
    let (head, args) = s
        .split_once(':')
        .ok_or_else(|| format!("unknown group `{s}`"))?;
    match head {
        "cyclic" => Ok(GroupSpec::Cyclic(single(args)?)),
        "abelian" => Ok(GroupSpec::Abelian(parse_numbers(args)?)),
        "dihedral" => Ok(GroupSpec::Dihedral(single(args)?)),
        "heisenberg" => Ok(GroupSpec::Heisenberg(single(args)?)),
        "metacyclic" => match parse_numbers(args)?.as_slice() {
            [m, n, t] => Ok(GroupSpec::Metacyclic {
                m: *m,
                n: *n,
                t: *t,
            }),
            _ => Err("metacyclic takes three parameters m,n,t".into()),
        },
        "product" => {
            let (left, rest) = take_parenthesized(args)?;
            let rest = rest
                .strip_prefix('x')
                .ok_or_else(|| "expected `x` between product factors".to_string())?;
            let (right, tail) = take_parenthesized(rest)?;
            if !tail.is_empty() {
                return Err(format!("trailing input `{tail}`"));
            }
            Ok(GroupSpec::Product(
                Box::new(parse_spec(left)?),
                Box::new(parse_spec(right)?),
            ))
        }
        _ => Err(format!("unknown group `{head}`")),
    }
}

/// Splits `(inner)rest` at the matching parenthesis.
fn take_parenthesized(s: &str) -> std::result::Result<(&str, &str), String> {
    if !s.starts_with('(') {
        return Err("expected `(`".into());
    }
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Ok((&s[1..i], &s[i + 1..]));
                }
            }
            _ => {}
        }
    }
    Err("unbalanced parentheses".into())
}

impl Serialize for GroupSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
