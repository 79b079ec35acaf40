use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use dessins::classify::{abelian_p_classes, abelian_p_dessin, AbelianPParams};
use dessins::dessin::{classify_dessins, Dessin};
use dessins::group::{
    automorphism_group, build_group, constructor_corpus, is_automorphism, sylow_projection,
    ConstructorFamily, FiniteGroup, GroupSpec,
};
use dessins::numth::{factorize, gcd};
use dessins::ops::{coprime_product_check, join, join_with_cap};

struct Corpus {
    groups: Vec<(GroupSpec, Arc<FiniteGroup>)>,
    dessins: Vec<Dessin>,
}

fn corpus() -> &'static Corpus {
    static CORPUS: OnceLock<Corpus> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let groups: Vec<_> = constructor_corpus(64, &ConstructorFamily::ALL)
            .into_iter()
            .map(|spec| {
                let g = Arc::new(build_group(&spec).unwrap());
                (spec, g)
            })
            .collect();
        let dessins = groups
            .iter()
            .flat_map(|(_, g)| classify_dessins(g).unwrap().representatives)
            .collect();
        Corpus { groups, dessins }
    })
}

fn small_dessins() -> Vec<&'static Dessin> {
    corpus()
        .dessins
        .iter()
        .filter(|d| d.order() <= 16)
        .collect()
}

#[test]
fn tables_satisfy_group_axioms() {
    for (spec, g) in &corpus().groups {
        let e = g.identity();
        for a in g.elements() {
            assert_eq!(g.mul(a, e), a, "{spec}");
            assert_eq!(g.mul(g.inv(a), a), e, "{spec}");
            let mut row: Vec<_> = g.elements().map(|b| g.mul(a, b)).collect();
            row.sort_unstable();
            assert!(
                row.iter().copied().eq(g.elements()),
                "{spec}: row {a} not a permutation"
            );
        }
        if g.order() <= 32 {
            for a in g.elements() {
                for b in g.elements() {
                    for c in g.elements() {
                        assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)), "{spec}");
                    }
                }
            }
        }
    }
}

#[test]
fn automorphisms_act_semiregularly_on_pairs() {
    for (spec, g) in &corpus().groups {
        let auts = automorphism_group(g).unwrap();
        assert!(auts[0].is_identity(), "{spec}");
        assert!(
            auts.iter().all(|a| is_automorphism(g, a.images())),
            "{spec}"
        );
        assert_eq!(g.generating_pairs().len() % auts.len(), 0, "{spec}");
    }
}

#[test]
fn quotients_by_lower_central_terms() {
    for (spec, g) in &corpus().groups {
        for normal in [g.center(), g.commutator_subgroup()] {
            let (q, proj) = g.quotient(&normal).unwrap();
            assert_eq!(q.order() * normal.len(), g.order(), "{spec}");
            let mut kernel: Vec<_> = g.elements().filter(|&a| proj[a] == q.identity()).collect();
            kernel.sort_unstable();
            assert_eq!(kernel, normal, "{spec}");
            let mut image = proj.clone();
            image.sort_unstable();
            image.dedup();
            assert_eq!(image.len(), q.order(), "{spec}");
            for a in g.elements().step_by(3) {
                for b in g.elements() {
                    assert_eq!(proj[g.mul(a, b)], q.mul(proj[a], proj[b]), "{spec}");
                }
            }
        }
    }
}

#[test]
fn sylow_projections_multiply_back() {
    for (spec, g) in corpus().groups.iter().filter(|(_, g)| g.is_nilpotent()) {
        let primes: Vec<u64> = factorize(g.order() as u64).unwrap().primes().collect();
        for a in g.elements() {
            let parts: Vec<_> = primes
                .iter()
                .map(|&p| sylow_projection(g, a, p).unwrap())
                .collect();
            let product = parts.iter().fold(g.identity(), |acc, &x| g.mul(acc, x));
            assert_eq!(product, a, "{spec}");
            for &x in &parts {
                for &y in &parts {
                    assert_eq!(g.mul(x, y), g.mul(y, x), "{spec}");
                }
            }
        }
    }
}

#[test]
fn nilpotency_class_examples() {
    for p in [3, 5] {
        assert_eq!(
            build_group(&GroupSpec::Heisenberg(p))
                .unwrap()
                .nilpotency_class(),
            Some(2)
        );
    }
    for k in 2..=6u32 {
        let d = build_group(&GroupSpec::Dihedral(1 << k)).unwrap();
        assert_eq!(
            d.nilpotency_class(),
            Some(k as usize - 1),
            "dihedral order {}",
            1 << k
        );
    }
}

#[test]
fn underlying_graph_properties() {
    for d in &corpus().dessins {
        let graph = d.underlying_graph();
        assert_eq!(graph.edges.len(), d.order(), "{d:?}");
        assert!(graph.is_connected(), "{d:?}");
        assert_eq!(graph.multiplicity(), Some(d.core().order), "{d:?}");
    }
}

#[test]
fn symmetric_dessin_properties() {
    for d in &corpus().dessins {
        if d.is_totally_symmetric() {
            assert!(d.is_symmetric() && d.is_reflexible(), "{d:?}");
        }
        if d.is_symmetric() {
            let (l, m, _) = d.type_triple();
            assert_eq!(l, m, "{d:?}");
            let core = d.core();
            if let Some(e) = core.exponent {
                let k = core.order as u64;
                assert_eq!(e * e % k, 1 % k, "{d:?}");
            }
        }
    }
}

#[test]
fn shadow_class_drops_by_at_most_one() {
    for d in &corpus().dessins {
        if let Some(c) = d.group().nilpotency_class().filter(|&c| c >= 2) {
            let s = d.shadow().unwrap().group().nilpotency_class().unwrap();
            assert!(s + 1 >= c && s <= c, "{d:?}: class {c}, shadow class {s}");
        }
    }
}

#[test]
fn symmetric_abelian_p_dessins() {
    for p in [2u64, 3, 5, 7] {
        for b in 1..=5u32 {
            for a in 0..=b {
                if p.pow(a + b) > 256 || a == b {
                    continue;
                }
                let pc = p.pow(b - a);
                for e in (1..pc).filter(|e| e % p != 0) {
                    let d =
                        abelian_p_dessin(&AbelianPParams::new(p, a, b, b - a, e).unwrap()).unwrap();
                    assert_eq!(d.is_symmetric(), e * e % pc == 1, "({p},{a},{b},{e})");
                }
            }
        }
    }
}

#[test]
fn coprime_joins_are_symmetric_componentwise() {
    let mut p_dessins = Vec::new();
    for (p, a, b) in [
        (2u64, 0u32, 2u32),
        (2, 1, 2),
        (3, 0, 1),
        (3, 1, 1),
        (5, 0, 1),
    ] {
        for class in abelian_p_classes(p, a, b).unwrap() {
            p_dessins.push((p, class.dessin().unwrap()));
        }
    }
    for (p, d1) in &p_dessins {
        for (q, d2) in &p_dessins {
            if p == q {
                continue;
            }
            assert!(coprime_product_check(d1, d2));
            let j = join(d1, d2).unwrap();
            assert_eq!(j.order(), d1.order() * d2.order());
            assert_eq!(j.is_symmetric(), d1.is_symmetric() && d2.is_symmetric());
            assert_eq!(j.is_reflexible(), d1.is_reflexible() && d2.is_reflexible());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn join_is_commutative(i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let small = small_dessins();
        let (a, b) = (i.get(&small), j.get(&small));
        if let (Ok(ab), Ok(ba)) = (join_with_cap(a, b, 256), join_with_cap(b, a, 256)) {
            prop_assert!(ab.is_isomorphic(&ba));
        }
    }

    #[test]
    fn join_is_associative(
        i in any::<prop::sample::Index>(),
        j in any::<prop::sample::Index>(),
        k in any::<prop::sample::Index>(),
    ) {
        let small = small_dessins();
        let (a, b, c) = (i.get(&small), j.get(&small), k.get(&small));
        let left = join_with_cap(a, b, 256).and_then(|ab| join_with_cap(&ab, c, 256));
        let right = join_with_cap(b, c, 256).and_then(|bc| join_with_cap(a, &bc, 256));
        if let (Ok(l), Ok(r)) = (left, right) {
            prop_assert!(l.is_isomorphic(&r));
        }
    }

    #[test]
    fn join_with_itself_is_itself(i in any::<prop::sample::Index>()) {
        let d = i.get(&corpus().dessins);
        prop_assert!(join(d, d).unwrap().is_isomorphic(d));
    }

    #[test]
    fn json_round_trip(i in any::<prop::sample::Index>()) {
        let d = i.get(&corpus().dessins);
        let back = Dessin::from_json(&d.to_json().unwrap()).unwrap();
        prop_assert_eq!(&back, d);
    }

    #[test]
    fn cyclic_plain_wilson_fixes_classes(m in 1u64..40, r in 0u64..40, s in 0u64..40, j in 1i64..40) {
        let (r, s) = (r % m, s % m);
        prop_assume!(gcd(gcd(r, s), m) == 1 && gcd(j as u64, m) == 1);
        let d = Dessin::from_spec(&GroupSpec::Cyclic(m), r as usize, s as usize).unwrap();
        let image = dessins::ops::wilson(&d, j, j).unwrap();
        prop_assert!(image.is_isomorphic(&d));
        prop_assert!(d.is_reflexible());
    }
}
