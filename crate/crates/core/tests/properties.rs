//! Structural invariants of root systems, groups, tables, classification
//! and cells, sampled over random roots, elements, vectors and irreps.

use std::collections::BTreeSet;
use std::sync::LazyLock;

use cherednik::algebra::{dot, int, rat, Partition, ProjPoint, Rat};
use cherednik::cells::{cuspidal_family, lr_coefficient, zero_n_set};
use cherednik::chars::{decompose_with_wedge, degrees, CharacterTable, TableProvider};
use cherednik::onewtype::classify_at;
use cherednik::rootsys::{CartanType, Rank2Label, RootSystem};
use cherednik::weyl::{Element, WeylGroup};
use proptest::prelude::*;

const TYPES: [CartanType; 6] =
    [CartanType::A(3), CartanType::B(3), CartanType::B(4), CartanType::D(4), CartanType::G2, CartanType::F4];

static PROVIDER: LazyLock<TableProvider> = LazyLock::new(TableProvider::default);
static TABLES: LazyLock<Vec<CharacterTable>> =
    LazyLock::new(|| TYPES.iter().map(|&t| PROVIDER.table(t).unwrap()).collect());

fn group(k: usize) -> &'static WeylGroup {
    TABLES[k].group()
}

/// A group element from a word in the simple reflections.
fn element(g: &WeylGroup, word: &[usize]) -> Element {
    let w: Vec<usize> = word.iter().map(|&i| i % g.rank() + 1).collect();
    g.from_word(&w).unwrap()
}

fn conj_reflection(g: &WeylGroup, w: &Element, a: usize, b: usize) -> Element {
    let (wa, wb) = (w.image(a), w.image(b));
    g.reflection(wa).compose(&g.reflection(wb))
}

fn small_vec(dim: usize) -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::vec((-6i64..=6, 1i64..=4), dim).prop_map(|v| v.into_iter().map(|(p, q)| rat(p, q)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflections_permute_roots(k in 0..TYPES.len(), i in 0usize..1000) {
        let rs = group(k).root_system();
        let i = i % rs.num_roots();
        let p = rs.reflection_perm(i);
        let image: BTreeSet<u8> = p.iter().copied().collect();
        prop_assert_eq!(image.len(), rs.num_roots());
        for (j, &pj) in p.iter().enumerate() {
            prop_assert_eq!(rs.reflect(i, rs.root(j)), rs.root(pj as usize).to_vec());
            prop_assert_eq!(rs.is_long(j), rs.is_long(pj as usize));
        }
    }

    #[test]
    fn pairing_is_invariant_on_random_vectors(k in 0..TYPES.len(), i in 0usize..1000, x in small_vec(8), y in small_vec(8)) {
        let rs = group(k).root_system();
        let i = i % rs.num_roots();
        let d = rs.ambient_dim();
        let (x, y) = (&x[..d], &y[..d]);
        prop_assert_eq!(dot(&rs.reflect(i, x), &rs.reflect(i, y)), dot(x, y));
    }

    #[test]
    fn rank2_label_symmetric_and_conjugation_invariant(
        k in 0..TYPES.len(), a in 0usize..1000, b in 0usize..1000, word in prop::collection::vec(0usize..8, 0..12)
    ) {
        let g = group(k);
        let rs = g.root_system();
        let (a, b) = (a % rs.num_roots(), b % rs.num_roots());
        let w = element(g, &word);
        let l = rs.rank2_label(a, b).ok();
        prop_assert_eq!(l, rs.rank2_label(b, a).ok());
        prop_assert_eq!(l, rs.rank2_label(w.image(a), w.image(b)).ok());
        if rs.cartan_type().is_simply_laced() {
            prop_assert!(!matches!(l, Some(Rank2Label::A1tA1 | Rank2Label::TA2 | Rank2Label::B2 | Rank2Label::G2Sub)));
        }
    }

    #[test]
    fn class_of_pair_product_is_conjugation_invariant(
        k in 0..TYPES.len(), a in 0usize..1000, b in 0usize..1000, word in prop::collection::vec(0usize..8, 0..12)
    ) {
        let t = &TABLES[k];
        let g = t.group();
        let (a, b) = (a % g.root_system().num_roots(), b % g.root_system().num_roots());
        let id = element(g, &[]);
        let w = element(g, &word);
        prop_assert_eq!(
            t.class_of(&conj_reflection(g, &id, a, b)).unwrap(),
            t.class_of(&conj_reflection(g, &w, a, b)).unwrap()
        );
    }

    #[test]
    fn centralizer_orbit_lies_in_orbit_and_fixes_norm(k in 0..TYPES.len(), y in small_vec(8), x in small_vec(8)) {
        let g = group(k);
        let d = g.root_system().ambient_dim();
        let (y, x) = (&y[..d], &x[..d]);
        let full: BTreeSet<Vec<Rat>> = g.orbit(x).into_iter().collect();
        for v in g.centralizer_orbit(y, x) {
            prop_assert_eq!(dot(&v, &v), dot(x, x));
            prop_assert!(full.contains(&v));
        }
    }

    #[test]
    fn wedge_decomposition_commutes_with_sign_twist(k in 0..TYPES.len(), i in 0usize..1000) {
        let t = &TABLES[k];
        let i = i % t.irreps().len();
        let twisted: BTreeSet<(usize, u64)> =
            decompose_with_wedge(t, i).unwrap().into_iter().map(|(j, m)| (t.sgn_twist(j), m)).collect();
        let direct: BTreeSet<(usize, u64)> = decompose_with_wedge(t, t.sgn_twist(i)).unwrap().into_iter().collect();
        prop_assert_eq!(twisted, direct);
    }

    #[test]
    fn zero_n_set_is_sign_stable(k in 0..TYPES.len(), p in -4i64..=4, q in 1i64..=3) {
        let t = &TABLES[k];
        let zs: BTreeSet<usize> =
            zero_n_set(t, &ProjPoint::ratio(rat(p, q))).iter().map(|l| t.find(&l.to_string()).unwrap()).collect();
        let tw: BTreeSet<usize> = zs.iter().map(|&i| t.sgn_twist(i)).collect();
        prop_assert_eq!(zs, tw);
    }

    #[test]
    fn lr_coefficients_symmetric_and_transpose_stable(n in 1usize..=7, li in 0usize..1000, mi in 0usize..1000) {
        let parts = Partition::all(n);
        let lam = &parts[li % parts.len()];
        let subs = lam.subdiagrams();
        let mu = &subs[mi % subs.len()];
        for nu in Partition::all(n - mu.size()) {
            let c = lr_coefficient(mu, &nu, lam).unwrap();
            prop_assert_eq!(c, lr_coefficient(&nu, mu, lam).unwrap());
            prop_assert_eq!(c, lr_coefficient(&mu.transpose(), &nu.transpose(), &lam.transpose()).unwrap());
        }
    }
}

#[test]
fn enumerated_order_is_product_of_degrees() {
    for ty in [CartanType::A(4), CartanType::B(4), CartanType::D(5), CartanType::G2, CartanType::F4] {
        let g = WeylGroup::of_type(ty).unwrap();
        let prod: u128 = degrees(&g).iter().map(|&d| d as u128).product();
        assert_eq!(g.enumerate(100_000).unwrap().elements().len() as u128, prod, "{ty}");
    }
}

#[test]
fn equal_parameter_classification_is_empty_where_expected() {
    let equal = ProjPoint::ratio(int(1));
    let mut types: Vec<CartanType> = (1..=6).map(CartanType::A).collect();
    types.extend((2..=8).map(CartanType::B));
    types.extend((4..=9).map(CartanType::D));
    types.extend([CartanType::G2, CartanType::F4, CartanType::E6, CartanType::E7, CartanType::E8]);
    for ty in types {
        if !PROVIDER.available(ty) {
            continue;
        }
        let empty = classify_at(ty, &PROVIDER, &equal).unwrap().is_empty();
        // at ratio 1: B_n needs n = d(d+1), D_n needs n = d^2
        let expected = match ty {
            CartanType::A(_) | CartanType::E7 => true,
            CartanType::B(n) => n != 2 && n != 6,
            CartanType::D(n) => n != 4 && n != 9,
            _ => false,
        };
        assert_eq!(empty, expected, "{ty}");
    }
}

#[test]
fn classical_families_are_sign_stable() {
    for ty in [CartanType::B(2), CartanType::B(6), CartanType::B(12), CartanType::D(4), CartanType::D(9)] {
        let fam = cuspidal_family(ty).unwrap().unwrap();
        let members: BTreeSet<_> = fam.members.iter().cloned().collect();
        let twisted: BTreeSet<_> = fam.members.iter().map(|m| fam.sgn(m)).collect();
        assert_eq!(members, twisted, "{ty}");
    }
}

#[test]
fn reflection_root_systems_construct() {
    for ty in TYPES {
        assert_eq!(RootSystem::new(ty).unwrap().num_positive(), ty.num_positive_roots());
    }
}
