//! Named consistency checks against known results, reported one line each.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::{abelian_p_classes, classify_abelian};
use crate::dessin::{classify_dessins, classify_dessins_by_extension, Classification, Dessin};
use crate::error::{Error, Result};
use crate::group::{build_group, FiniteGroup, GroupSpec, AUTOMORPHISM_BOUND};
use crate::numth::{big_to_u64, dedekind_psi, divisors, sqrt_one_units};
use crate::ops::{
    coprime_product_check, dual, join, join_all, operation_orbits, sylow_decompose, OperationSet,
};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub pass: bool,
    pub expected: Value,
    pub actual: Value,
}

impl CheckResult {
    pub fn new(check: impl Into<String>, expected: impl Serialize, actual: impl Serialize) -> Self {
        let expected = serde_json::to_value(expected).expect("serializable");
        let actual = serde_json::to_value(actual).expect("serializable");
        Self {
            check: check.into(),
            pass: expected == actual,
            expected,
            actual,
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// Which check suite to run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Suite {
    C6,
    Alt4,
    Q8,
    Meta64,
    Heisenberg { p: u64 },
    Join144,
    Decomposition { group: GroupSpec },
    Anumber { max: u64 },
}

pub fn run_suite(suite: &Suite) -> Result<Vec<CheckResult>> {
    match suite {
        Suite::C6 => c6(),
        Suite::Alt4 => alt4(),
        Suite::Q8 => q8(),
        Suite::Meta64 => meta64(),
        Suite::Heisenberg { p } => heisenberg(*p),
        Suite::Join144 => join144(),
        Suite::Decomposition { group } => decomposition(group),
        Suite::Anumber { max } => anumber(*max),
    }
}

fn group(spec: &str) -> Result<Arc<FiniteGroup>> {
    Ok(Arc::new(build_group(&spec.parse()?)?))
}

fn find(g: &FiniteGroup, label: &str) -> Result<usize> {
    g.labels()
        .iter()
        .position(|l| l == label)
        .ok_or_else(|| Error::InvalidParameter(format!("no element labelled `{label}`")))
}

/// Orbit classification within the automorphism bound, pairwise extension
/// tests beyond it.
pub fn classify_any(g: &Arc<FiniteGroup>) -> Result<Classification> {
    if g.order() <= AUTOMORPHISM_BOUND {
        classify_dessins(g)
    } else {
        Ok(classify_dessins_by_extension(g))
    }
}

fn counts(prefix: &str, c: &Classification) -> Vec<(String, usize)> {
    vec![
        (format!("{prefix}.generating_pairs"), c.generating_pairs),
        (
            format!("{prefix}.automorphisms"),
            c.automorphisms.unwrap_or(0),
        ),
        (format!("{prefix}.classes"), c.class_count()),
    ]
}

fn count_checks(prefix: &str, c: &Classification, expected: [usize; 3]) -> Vec<CheckResult> {
    counts(prefix, c)
        .into_iter()
        .zip(expected)
        .map(|((name, actual), e)| CheckResult::new(name, e, actual))
        .collect()
}

/// Rows `(type, genus, graph, symmetric)` of the twelve dessins on `C₆`.
pub const C6_TABLE: [((usize, usize, usize), u64, &str, bool); 12] = [
    ((1, 6, 6), 0, "K_{6,1}", false),
    ((6, 1, 6), 0, "K_{1,6}", false),
    ((6, 6, 1), 0, "K_{1,1}^(6)", true),
    ((6, 3, 2), 1, "K_{1,2}^(3)", false),
    ((6, 2, 3), 1, "K_{1,3}^(2)", false),
    ((3, 6, 2), 1, "K_{2,1}^(3)", false),
    ((3, 2, 6), 1, "K_{2,3}", false),
    ((2, 6, 3), 1, "K_{3,1}^(2)", false),
    ((2, 3, 6), 1, "K_{3,2}", false),
    ((6, 6, 3), 2, "K_{1,1}^(6)", true),
    ((3, 6, 6), 2, "K_{2,1}^(3)", false),
    ((6, 3, 6), 2, "K_{1,2}^(3)", false),
];

/// Orbits on `C₆` as sets of exponent pairs `(r, s)`.
pub const C6_TRIALITY_ORBITS: [&[(usize, usize)]; 3] = [
    &[(0, 1), (1, 0), (1, 5)],
    &[(1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2)],
    &[(1, 1), (2, 5), (1, 4)],
];

pub const C6_WILSON_ORBITS: [&[(usize, usize)]; 9] = [
    &[(0, 1)],
    &[(1, 0)],
    &[(1, 5), (1, 1)],
    &[(1, 2), (1, 4)],
    &[(1, 3)],
    &[(2, 1), (2, 5)],
    &[(2, 3)],
    &[(3, 1)],
    &[(3, 2)],
];

type Partition = BTreeSet<BTreeSet<(usize, usize)>>;

fn partition_of(sets: &[&[(usize, usize)]]) -> Partition {
    sets.iter().map(|s| s.iter().copied().collect()).collect()
}

fn orbit_partition(dessins: &[Dessin], ops: OperationSet) -> Result<Partition> {
    Ok(operation_orbits(dessins, ops)?
        .iter()
        .map(|orbit| {
            orbit
                .iter()
                .map(|&i| (dessins[i].x(), dessins[i].y()))
                .collect()
        })
        .collect())
}

fn c6() -> Result<Vec<CheckResult>> {
    let g = group("cyclic:6")?;
    let c = classify_dessins(&g)?;
    let mut out = vec![CheckResult::new("c6.classes", 12, c.class_count())];
    let mut rows: Vec<_> = c
        .representatives
        .iter()
        .map(|d| {
            let inv = d.invariants();
            (inv.type_triple, inv.genus, inv.graph, inv.symmetric)
        })
        .collect();
    rows.sort();
    let mut expected: Vec<_> = C6_TABLE
        .iter()
        .map(|&(t, g, graph, s)| (t, g, graph.to_string(), s))
        .collect();
    expected.sort();
    out.push(CheckResult::new("c6.table_rows", expected, rows));
    let pairs: BTreeSet<(usize, usize)> =
        c.representatives.iter().map(|d| (d.x(), d.y())).collect();
    let known_pairs: BTreeSet<(usize, usize)> = C6_TRIALITY_ORBITS
        .iter()
        .flat_map(|s| s.iter().copied())
        .collect();
    out.push(CheckResult::new(
        "c6.representative_pairs",
        known_pairs,
        pairs,
    ));
    out.push(CheckResult::new(
        "c6.triality_orbits",
        partition_of(&C6_TRIALITY_ORBITS),
        orbit_partition(&c.representatives, OperationSet::Triality)?,
    ));
    out.push(CheckResult::new(
        "c6.wilson_orbits",
        partition_of(&C6_WILSON_ORBITS),
        orbit_partition(&c.representatives, OperationSet::GeneralizedWilson)?,
    ));
    Ok(out)
}

fn alt4() -> Result<Vec<CheckResult>> {
    let g = group("alt4")?;
    let c = classify_dessins(&g)?;
    let mut out = count_checks("alt4", &c, [96, 24, 4]);
    let d = Dessin::new(g.clone(), find(&g, "(12)(34)")?, find(&g, "(123)")?)?;
    let classes_with_pair = c
        .representatives
        .iter()
        .filter(|r| r.is_isomorphic(&d))
        .count();
    out.push(CheckResult::new("alt4.class_of_pair", 1, classes_with_pair));
    let graph = d.underlying_graph();
    out.push(CheckResult::new(
        "alt4.pair_graph_simple",
        true,
        graph.is_simple(),
    ));
    out.push(CheckResult::new(
        "alt4.pair_black_degrees",
        vec![2; 6],
        graph.black_degrees(),
    ));
    out.push(CheckResult::new(
        "alt4.pair_white_degrees",
        vec![3; 4],
        graph.white_degrees(),
    ));
    let mut flags: Vec<(bool, bool, bool)> = c
        .representatives
        .iter()
        .map(|r| {
            let (l, m, _) = r.type_triple();
            ((l, m) == (3, 3), r.is_symmetric(), r.is_reflexible())
        })
        .collect();
    flags.sort();
    out.push(CheckResult::new(
        "alt4.flags_by_type",
        vec![
            (false, false, true),
            (false, false, true),
            (true, true, true),
            (true, true, true),
        ],
        flags,
    ));
    Ok(out)
}

fn q8() -> Result<Vec<CheckResult>> {
    let c = classify_dessins(&group("q8")?)?;
    let mut out = count_checks("q8", &c, [24, 24, 1]);
    if let Some(d) = c.representatives.first() {
        out.push(CheckResult::new("q8.type", (4, 4, 4), d.type_triple()));
        out.push(CheckResult::new("q8.genus", 2, d.genus()));
        out.push(CheckResult::new(
            "q8.totally_symmetric",
            true,
            d.is_totally_symmetric(),
        ));
    }
    Ok(out)
}

fn meta64() -> Result<Vec<CheckResult>> {
    let c = classify_dessins(&group("metacyclic:8,8,5")?)?;
    let mut out = count_checks("meta64", &c, [1536, 512, 3]);
    let (symmetric, others): (Vec<&Dessin>, Vec<&Dessin>) =
        c.representatives.iter().partition(|d| d.is_symmetric());
    out.push(CheckResult::new(
        "meta64.symmetric_classes",
        1,
        symmetric.len(),
    ));
    if let [s] = symmetric[..] {
        let shadow = s.shadow()?.underlying_graph();
        out.push(CheckResult::new(
            "meta64.shadow_graph",
            ("K_{8,8}", true),
            (shadow.descriptor(), shadow.is_simple()),
        ));
    }
    if let [a, b] = others[..] {
        out.push(CheckResult::new(
            "meta64.others_color_dual",
            true,
            dual(a).is_isomorphic(b),
        ));
    }
    Ok(out)
}

fn heisenberg(p: u64) -> Result<Vec<CheckResult>> {
    let g = Arc::new(build_group(&GroupSpec::Heisenberg(p))?);
    let c = classify_dessins(&g)?;
    let aut = (p * p * (p * p - 1) * (p * p - p)) as usize;
    let prefix = format!("heisenberg{p}");
    let mut out = count_checks(&prefix, &c, [aut, aut, 1]);
    if let Some(d) = c.representatives.first() {
        let p = p as usize;
        let genus = (2 + p * p * p - 3 * p * p) / 2;
        let graph = d.underlying_graph();
        out.push(CheckResult::new(
            format!("{prefix}.type"),
            (p, p, p),
            d.type_triple(),
        ));
        out.push(CheckResult::new(
            format!("{prefix}.genus"),
            genus,
            d.genus(),
        ));
        out.push(CheckResult::new(
            format!("{prefix}.totally_symmetric"),
            true,
            d.is_totally_symmetric(),
        ));
        out.push(CheckResult::new(
            format!("{prefix}.graph"),
            (true, p * p, p * p, p * p * p),
            (
                graph.is_simple(),
                graph.black_count,
                graph.white_count,
                graph.edges.len(),
            ),
        ));
    }
    Ok(out)
}

/// `((123), (124))` and `((132), (124))` on `Alt₄`.
pub fn alt4_join_pair() -> Result<(Dessin, Dessin)> {
    let g = group("alt4")?;
    let d3 = Dessin::new(g.clone(), find(&g, "(123)")?, find(&g, "(124)")?)?;
    let d4 = Dessin::new(g.clone(), find(&g, "(132)")?, find(&g, "(124)")?)?;
    Ok((d3, d4))
}

fn join144() -> Result<Vec<CheckResult>> {
    let (d3, d4) = alt4_join_pair()?;
    let j = join(&d3, &d4)?;
    Ok(vec![
        CheckResult::new(
            "join144.coprime_test",
            false,
            coprime_product_check(&d3, &d4),
        ),
        CheckResult::new("join144.order", 144, j.order()),
        CheckResult::new("join144.type", (3, 3, 6), j.type_triple()),
        CheckResult::new("join144.genus", 13, j.genus()),
        CheckResult::new("join144.symmetric", true, j.is_symmetric()),
        CheckResult::new("join144.reflexible", true, j.is_reflexible()),
    ])
}

/// `D₁ = (Z₃ ⊕ Z₂, (2,0), (0,1))` and its mirror on `Z₂ ⊕ Z₃`; neither is
/// symmetric but their join on `Z₆ ⊕ Z₆` is.
pub fn asymmetric_pair_with_symmetric_join() -> Result<(Dessin, Dessin)> {
    let d1 = Dessin::from_spec(&GroupSpec::Abelian(vec![3, 2]), 2, 1)?;
    let d2 = Dessin::from_spec(&GroupSpec::Abelian(vec![2, 3]), 3, 1)?;
    Ok((d1, d2))
}

fn decomposition(spec: &GroupSpec) -> Result<Vec<CheckResult>> {
    let g = Arc::new(build_group(spec)?);
    let c = classify_dessins(&g)?;
    let total = c.class_count();
    let (mut round_trip, mut symmetric_ok, mut reflexible_ok) = (0, 0, 0);
    for d in &c.representatives {
        let parts = sylow_decompose(d)?;
        if join_all(&parts)?.is_isomorphic(d) {
            round_trip += 1;
        }
        if d.is_symmetric() == parts.iter().all(Dessin::is_symmetric) {
            symmetric_ok += 1;
        }
        if d.is_reflexible() == parts.iter().all(Dessin::is_reflexible) {
            reflexible_ok += 1;
        }
    }
    let (d1, d2) = asymmetric_pair_with_symmetric_join()?;
    let j = join(&d1, &d2)?;
    Ok(vec![
        CheckResult::new("decomposition.round_trip", total, round_trip),
        CheckResult::new("decomposition.symmetric_componentwise", total, symmetric_ok),
        CheckResult::new(
            "decomposition.reflexible_componentwise",
            total,
            reflexible_ok,
        ),
        CheckResult::new(
            "decomposition.asymmetric_components",
            (false, false),
            (d1.is_symmetric(), d2.is_symmetric()),
        ),
        CheckResult::new(
            "decomposition.symmetric_join",
            (36, (6, 6, 6), true),
            (j.order(), j.type_triple(), j.is_symmetric()),
        ),
    ])
}

fn anumber(max: u64) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for m in 1..=max {
        for n in divisors(m) {
            let g = Arc::new(build_group(&GroupSpec::Abelian(vec![n, m]))?);
            let c = classify_any(&g)?;
            let psi = big_to_u64(&dedekind_psi(m / n)).expect("fits in u64");
            let sqrt_one = sqrt_one_units(m / n).len();
            let symmetric = c
                .representatives
                .iter()
                .filter(|d| d.is_symmetric())
                .count();
            let list = classify_abelian(n, m)?;
            let mut expected = json!([psi, sqrt_one, psi, sqrt_one]);
            let mut actual = json!([
                c.class_count(),
                symmetric,
                list.total_count,
                list.symmetric_count
            ]);
            if n == m {
                expected.as_array_mut().unwrap().push(json!(true));
                actual.as_array_mut().unwrap().push(json!(c
                    .representatives
                    .iter()
                    .all(Dessin::is_totally_symmetric)));
            }
            out.push(CheckResult::new(
                format!("anumber.{n}x{m}"),
                expected,
                actual,
            ));
        }
    }
    for p in (2..=64u64).filter(|&p| crate::numth::is_prime(p)) {
        for b in 0..=6u32 {
            for a in 0..=b {
                if p.checked_pow(a + b).is_none_or(|v| v > 64) {
                    continue;
                }
                let classes = abelian_p_classes(p, a, b)?;
                let spec = GroupSpec::Abelian(vec![p.pow(a), p.pow(b)]);
                let brute = classify_dessins(&Arc::new(build_group(&spec)?))?;
                let matched = classes
                    .iter()
                    .map(|cl| cl.dessin())
                    .collect::<Result<Vec<_>>>()?
                    .iter()
                    .filter(|d| {
                        brute
                            .representatives
                            .iter()
                            .filter(|r| r.is_isomorphic(d))
                            .count()
                            == 1
                    })
                    .count();
                out.push(CheckResult::new(
                    format!("anumber.p{p}.a{a}.b{b}"),
                    (brute.class_count(), brute.class_count()),
                    (classes.len(), matched),
                ));
            }
        }
    }
    Ok(out)
}
