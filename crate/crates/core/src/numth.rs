//! Exact integer and modular arithmetic used by the counting formulas and
//! by the closed-form cyclic and abelian classifications.
//!
//! Totient-style products are returned as [`BigUint`] so that nothing wraps;
//! everything else fits comfortably in `u64` at the sizes this crate handles.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Prime factorization as `(prime, exponent)` pairs with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Exponent of `p` in the factored integer (0 when `p` does not divide it).
    pub fn valuation(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    pub fn value(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, &(p, e)| acc * BigUint::from(p).pow(e))
    }
}

/// Trial-division factorization.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::InvalidParameter("cannot factorize 0".into()));
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { factors })
}

fn factors_of(n: u64) -> Factorization {
    assert!(n > 0, "argument must be positive");
    factorize(n).expect("positive argument")
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factors_of(n).factors == [(n, 1)]
}

/// Euler's totient. Always fits in `u64` since `φ(n) ≤ n`.
pub fn euler_phi(n: u64) -> u64 {
    factors_of(n)
        .factors
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// Dedekind totient `ψ(n) = n ∏_{p | n} (1 + 1/p)`.
pub fn dedekind_psi(n: u64) -> BigUint {
    let f = factors_of(n);
    let mut acc = BigUint::from(n);
    for &(p, _) in &f.factors {
        acc = acc / p * (p + 1);
    }
    acc
}

/// Jordan totient `J_k(n) = n^k ∏_{p | n} (1 - p^{-k})`.
pub fn jordan_totient(k: u32, n: u64) -> BigUint {
    assert!(k >= 1, "Jordan totient order must be positive");
    let f = factors_of(n);
    let mut acc = BigUint::from(n).pow(k);
    for &(p, _) in &f.factors {
        let pk = BigUint::from(p).pow(k);
        acc = acc / &pk * (pk - 1u32);
    }
    acc
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a.lcm(&b)
    }
}

/// Modular inverse of `a` mod `m`, if it exists. For `m = 1` the inverse is 0.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    assert!(m > 0);
    let e = BigInt::from(a).extended_gcd(&BigInt::from(m));
    if !e.gcd.is_one() {
        return None;
    }
    let r = e.x.mod_floor(&BigInt::from(m));
    r.to_u64()
}

pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    assert!(m > 0);
    let m = m as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Solves `Σ coeffs[i]·x_i ≡ b (mod m)`.
///
/// Returns `None` exactly when `gcd(coeffs…, m)` does not divide `b`. The
/// solution is built from the chained Bézout identity, so it always verifies
/// by substitution.
pub fn solve_linear_congruence(coeffs: &[i64], b: i64, m: u64) -> Result<Option<Vec<u64>>> {
    if m == 0 {
        return Err(Error::InvalidParameter("modulus must be positive".into()));
    }
    if coeffs.is_empty() {
        return Err(Error::InvalidParameter("empty coefficient list".into()));
    }
    let modulus = BigInt::from(m);
    // g = Σ u_i a_i at every step.
    let mut g = BigInt::zero();
    let mut u = vec![BigInt::zero(); coeffs.len()];
    for (i, &a) in coeffs.iter().enumerate() {
        let a = BigInt::from(a);
        let e = g.extended_gcd(&a);
        for ui in u.iter_mut() {
            *ui *= &e.x;
        }
        u[i] += &e.y;
        g = e.gcd;
    }
    let e = g.extended_gcd(&modulus);
    let d = e.gcd;
    let b = BigInt::from(b);
    if !b.is_multiple_of(&d) {
        return Ok(None);
    }
    let scale = &e.x * (&b / &d);
    let solution = u
        .iter()
        .map(|ui| {
            (ui * &scale)
                .mod_floor(&modulus)
                .to_u64()
                .expect("reduced mod a u64 modulus")
        })
        .collect();
    Ok(Some(solution))
}

/// Lifts a unit `s` of `Z_m` to a unit `s'` of `Z_n` with `s' ≡ s (mod m)`,
/// for `m | n`. The answer is the least such representative in `[1, n)`
/// (`1` when `n = 1`).
pub fn lift_unit(s: u64, m: u64, n: u64) -> Result<u64> {
    if m == 0 || n == 0 || !n.is_multiple_of(m) {
        return Err(Error::InvalidParameter(format!(
            "lift_unit needs 0 < m | n, got m = {m}, n = {n}"
        )));
    }
    let s = s % m;
    if gcd(s, m) != 1 {
        return Err(Error::InvalidParameter(format!(
            "{s} is not a unit modulo {m}"
        )));
    }
    if n == 1 {
        return Ok(1);
    }
    // Witness by CRT: s + m·t avoids every prime of n that does not divide m.
    let mut t_residues = Vec::new();
    for p in factors_of(n).primes() {
        if !m.is_multiple_of(p) {
            let t = if s.is_multiple_of(p) { 1 } else { 0 };
            t_residues.push((t, p));
        }
    }
    let t = crt(&t_residues);
    let witness = ((s as u128 + m as u128 * t as u128) % n as u128) as u64;
    debug_assert!(gcd(witness, n) == 1 && witness % m == s);

    // Least representative of the progression s, s+m, ... that is a unit.
    let mut candidate = if s == 0 { m } else { s };
    loop {
        if gcd(candidate, n) == 1 {
            return Ok(candidate);
        }
        if candidate >= witness.max(1) {
            return Ok(witness);
        }
        candidate += m;
    }
}

/// Chinese remaindering over pairwise coprime moduli; returns the least
/// nonnegative solution.
pub(crate) fn crt(residues: &[(u64, u64)]) -> u64 {
    let mut value = 0u128;
    let mut modulus = 1u128;
    for &(r, q) in residues {
        let q = q as u128;
        // value + modulus·k ≡ r (mod q)
        let inv = mod_inverse((modulus % q) as u64, q as u64).expect("coprime moduli") as u128;
        let diff = (r as u128 + q - value % q) % q;
        let k = diff * inv % q;
        value += modulus * k;
        modulus *= q;
    }
    value as u64
}

/// Least unit `x ∈ Z_m^*` with `a·x ≡ b (mod m)`, which exists exactly when
/// `gcd(a, m) = gcd(b, m)`.
pub fn unit_congruence_solution(a: i64, b: i64, m: u64) -> Result<Option<u64>> {
    if m == 0 {
        return Err(Error::InvalidParameter("modulus must be positive".into()));
    }
    let a = a.rem_euclid(m as i64) as u64;
    let b = b.rem_euclid(m as i64) as u64;
    let d = gcd(a, m);
    if d != gcd(b, m) {
        return Ok(None);
    }
    let reduced = m / d;
    let inv = mod_inverse((a / d) % reduced, reduced).expect("a/d is a unit mod m/d");
    let x0 = ((b / d) as u128 * inv as u128 % reduced as u128) as u64;
    lift_unit(x0, reduced, m).map(Some)
}

/// All residues `e ∈ {0, …, m-1}` with `e² ≡ 1 (mod m)`; `{0}` for `m = 1`.
pub fn sqrt_one_units(m: u64) -> Vec<u64> {
    assert!(m > 0);
    (0..m)
        .filter(|&e| (e as u128 * e as u128) % m as u128 == 1 % m as u128)
        .collect()
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub(crate) fn big_to_u64(v: &BigUint) -> Option<u64> {
    v.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_phi(n: u64) -> u64 {
        (0..n).filter(|&k| gcd(k, n) == 1).count() as u64
    }

    fn brute_jordan2(n: u64) -> u64 {
        let mut count = 0;
        for r in 0..n {
            for s in 0..n {
                if gcd(gcd(r, s), n) == 1 {
                    count += 1;
                }
            }
        }
        count
    }

    fn sqrt_one_closed_form(m: u64) -> usize {
        let f = factorize(m).unwrap();
        let odd = f.primes().filter(|&p| p != 2).count() as u32;
        let two = f.valuation(2);
        let two_part = match two {
            0 | 1 => 1,
            2 => 2,
            _ => 4,
        };
        (1usize << odd) * two_part
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().factors().is_empty());
        assert_eq!(factorize(12).unwrap().factors(), &[(2, 2), (3, 1)]);
        assert_eq!(factorize(64).unwrap().factors(), &[(2, 6)]);
        assert!(factorize(0).is_err());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(brute_phi(8), 4);
        assert_eq!(euler_phi(8), 4);
        assert_eq!(brute_phi(6), 2);
        assert_eq!(euler_phi(6), 2);
    }

    #[test]
    fn psi_examples() {
        assert_eq!(dedekind_psi(6), BigUint::from(12u32));
        assert_eq!(dedekind_psi(1), BigUint::from(1u32));
        assert_eq!(dedekind_psi(8), BigUint::from(12u32));
    }

    #[test]
    fn jordan_examples() {
        assert_eq!(jordan_totient(1, 6), BigUint::from(2u32));
        assert_eq!(brute_jordan2(6), 24);
        assert_eq!(jordan_totient(2, 6), BigUint::from(24u32));
        assert_eq!(jordan_totient(2, 1), BigUint::from(1u32));
    }

    #[test]
    fn jordan_matches_pair_count() {
        for n in 1..40 {
            assert_eq!(
                jordan_totient(2, n),
                BigUint::from(brute_jordan2(n)),
                "n = {n}"
            );
            assert_eq!(jordan_totient(1, n), BigUint::from(brute_phi(n)));
        }
    }

    #[test]
    fn large_arguments_do_not_wrap() {
        let n = 18_446_744_073_709_551_557; // largest prime below 2^64
        assert_eq!(dedekind_psi(n), BigUint::from(n) + 1u32);
        assert_eq!(jordan_totient(3, n), BigUint::from(n).pow(3) - 1u32);
    }

    #[test]
    fn psi_phi_is_j2_up_to_10k() {
        for n in 1..=10_000u64 {
            assert_eq!(
                dedekind_psi(n) * euler_phi(n),
                jordan_totient(2, n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn psi_multiplicative_up_to_10k() {
        for a in 1..=100u64 {
            for b in 1..=100u64 {
                if gcd(a, b) == 1 {
                    assert_eq!(dedekind_psi(a * b), dedekind_psi(a) * dedekind_psi(b));
                }
            }
        }
    }

    #[test]
    fn congruence_examples() {
        let sol = solve_linear_congruence(&[2, 3], 1, 6).unwrap().unwrap();
        assert_eq!((2 * sol[0] + 3 * sol[1]) % 6, 1);
        // exhaustive oracle agrees it is solvable
        assert!((0..6).any(|x| (0..6).any(|y| (2 * x + 3 * y) % 6 == 1)));
        assert_eq!(solve_linear_congruence(&[2, 4], 1, 6).unwrap(), None);
        assert_eq!(solve_linear_congruence(&[0], 0, 5).unwrap(), Some(vec![0]));
        assert!(solve_linear_congruence(&[], 0, 5).is_err());
        assert!(solve_linear_congruence(&[1], 0, 0).is_err());
    }

    #[test]
    fn lift_unit_examples() {
        assert_eq!(lift_unit(3, 4, 8).unwrap(), 3);
        assert_eq!(lift_unit(1, 5, 30).unwrap(), 1);
        assert_eq!(lift_unit(1, 1, 1).unwrap(), 1);
        // exhaustive oracle: least unit mod 6 congruent to 2 mod 3
        let oracle = (1..6).find(|&k| gcd(k, 6) == 1 && k % 3 == 2).unwrap();
        assert_eq!(oracle, 5);
        assert_eq!(lift_unit(2, 3, 6).unwrap(), 5);
        assert!(lift_unit(2, 4, 8).is_err());
        assert!(lift_unit(1, 3, 8).is_err());
    }

    #[test]
    fn unit_solution_examples() {
        let oracle = (0..6).find(|&x| gcd(x, 6) == 1 && (2 * x) % 6 == 4);
        assert_eq!(oracle, Some(5));
        assert_eq!(unit_congruence_solution(2, 4, 6).unwrap(), Some(5));
        assert_eq!(unit_congruence_solution(2, 3, 6).unwrap(), None);
        for m in 1..20 {
            assert_eq!(unit_congruence_solution(1, 1, m).unwrap(), Some(1));
        }
    }

    #[test]
    fn unit_solution_matches_scan() {
        for m in 1..30u64 {
            for a in 0..m as i64 {
                for b in 0..m as i64 {
                    let scan = (0..m.max(2))
                        .find(|&x| gcd(x, m) == 1 && (a as u64 * x) % m == b as u64 % m);
                    let got = unit_congruence_solution(a, b, m).unwrap();
                    assert_eq!(got.is_some(), scan.is_some(), "a={a} b={b} m={m}");
                    if let Some(x) = got {
                        assert_eq!(gcd(x, m), 1);
                        assert_eq!((a as u64 * x) % m, b as u64 % m);
                    }
                }
            }
        }
    }

    #[test]
    fn sqrt_one_examples() {
        assert_eq!(sqrt_one_units(6), vec![1, 5]);
        assert_eq!(sqrt_one_units(1), vec![0]);
        assert_eq!(sqrt_one_units(8), vec![1, 3, 5, 7]);
    }

    #[test]
    fn sqrt_one_count_closed_form() {
        for m in 1..=1000 {
            assert_eq!(sqrt_one_units(m).len(), sqrt_one_closed_form(m), "m = {m}");
        }
    }

    #[test]
    fn divisors_in_order() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(16), vec![1, 2, 4, 8, 16]);
    }

    proptest! {
        #[test]
        fn congruence_solution_verifies(
            coeffs in prop::collection::vec(-50i64..50, 1..4),
            b in -50i64..50,
            m in 1u64..200,
        ) {
            let g = coeffs.iter().fold(m, |acc, &a| gcd(acc, a.unsigned_abs()));
            let sol = solve_linear_congruence(&coeffs, b, m).unwrap();
            prop_assert_eq!(sol.is_some(), b.rem_euclid(g as i64) == 0);
            if let Some(x) = sol {
                let lhs: i128 = coeffs.iter().zip(&x).map(|(&a, &xi)| a as i128 * xi as i128).sum();
                prop_assert_eq!(lhs.rem_euclid(m as i128), (b as i128).rem_euclid(m as i128));
            }
        }

        #[test]
        fn lift_unit_postconditions(m in 1u64..200, k in 1u64..6, s in 0u64..200) {
            let n = m * k;
            let s = (s % m..s % m + m).find(|&c| gcd(c % m, m) == 1).unwrap() % m;
            let lifted = lift_unit(s, m, n).unwrap();
            prop_assert_eq!(gcd(lifted, n), 1);
            prop_assert_eq!(lifted % m, s);
            if n > 1 {
                prop_assert!(lifted >= 1 && lifted < n);
                // least representative
                let least = (1..n).find(|&c| c % m == s && gcd(c, n) == 1).unwrap();
                prop_assert_eq!(lifted, least);
            } else {
                prop_assert_eq!(lifted, 1);
            }
        }
    }
}
