mod common;

use std::sync::OnceLock;

use cbc_core::breadth::{breadth_profile, breadth_rel, check_f_membership, FFunction};
use cbc_core::corpus::{build_group, elementary_abelian, extraspecial, heisenberg, unitriangular, wreath_cyclic};
use cbc_core::group::*;
use cbc_core::theorems::{replay, theorem1, StepCase};
use proptest::prelude::*;

struct Fixture {
    group: GroupTable,
    normals: Vec<Subgroup>,
}

fn fixtures() -> &'static [Fixture] {
    static CELL: OnceLock<Vec<Fixture>> = OnceLock::new();
    CELL.get_or_init(|| {
        [
            heisenberg(3),
            extraspecial(3, 9),
            wreath_cyclic(3),
            unitriangular(4, 3),
            elementary_abelian(3, 3),
            heisenberg(5),
        ]
        .into_iter()
        .map(|s| {
            let group = build_group(&s.unwrap(), DEFAULT_ORDER_CAP).unwrap();
            let normals = normal_subgroups(&group, 5000).unwrap();
            Fixture { group, normals }
        })
        .collect()
    })
}

fn pick<T>(v: &[T], i: usize) -> &T {
    &v[i % v.len()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn multiplication_is_a_group_law(gi in 0usize..6, a in 0usize..4096, b in 0usize..4096, c in 0usize..4096) {
        let g = &pick(fixtures(), gi).group;
        let n = g.order();
        let (a, b, c) = ((a % n) as Elem, (b % n) as Elem, (c % n) as Elem);
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(a, g.inv(a)), g.identity());
        prop_assert_eq!(g.mul(g.identity(), a), a);
        prop_assert_eq!(g.commutator(a, b), common::comm(g, a, b));
    }

    #[test]
    fn normal_subgroup_algebra(gi in 0usize..6, i in any::<usize>(), j in any::<usize>()) {
        let fx = pick(fixtures(), gi);
        let g = &fx.group;
        let a = pick(&fx.normals, i);
        let b = pick(&fx.normals, j);
        let meet = a.intersection(b);
        prop_assert!(is_normal_exhaustive(g, &meet));
        let joined = join_normals(g, a, b);
        prop_assert!(a.is_subset(&joined) && b.is_subset(&joined));
        prop_assert_eq!(joined.order() * meet.order(), a.order() * b.order());
        let ab = commutator_subgroup(g, a, b);
        prop_assert_eq!(&ab, &commutator_subgroup(g, b, a));
        prop_assert!(ab.is_subset(&meet));
        prop_assert!(fx.normals.contains(&ab));
    }

    #[test]
    fn index_is_additive(gi in 0usize..6, i in any::<usize>(), j in any::<usize>()) {
        let fx = pick(fixtures(), gi);
        let g = &fx.group;
        let a = pick(&fx.normals, i);
        let b = pick(&fx.normals, j).intersection(a);
        let whole = Subgroup::whole(g);
        prop_assert_eq!(
            index_log(g, &whole, &b).unwrap(),
            index_log(g, &whole, a).unwrap() + index_log(g, a, &b).unwrap()
        );
    }

    #[test]
    fn relative_breadth_is_monotone(gi in 0usize..6, x in 0usize..4096, i in any::<usize>(), j in any::<usize>()) {
        let fx = pick(fixtures(), gi);
        let g = &fx.group;
        let x = (x % g.order()) as Elem;
        let a = pick(&fx.normals, i);
        let b = pick(&fx.normals, j).intersection(a);
        prop_assert!(breadth_rel(g, x, &b) <= breadth_rel(g, x, a));
        prop_assert!(breadth_rel(g, x, a) <= breadth_profile(g).per_element[x as usize]);
        prop_assert_eq!(breadth_rel(g, x, a), common::breadth_rel(g, x, &common::set_of(a)));
    }

    #[test]
    fn quotient_map_is_a_homomorphism(gi in 0usize..6, i in any::<usize>(), a in 0usize..4096, b in 0usize..4096) {
        let fx = pick(fixtures(), gi);
        let g = &fx.group;
        let k = pick(&fx.normals, i);
        let proj = quotient(g, k).unwrap();
        prop_assert_eq!(proj.target.order() * k.order(), g.order());
        let (a, b) = ((a % g.order()) as Elem, (b % g.order()) as Elem);
        let m = |x: Elem| proj.map[x as usize];
        prop_assert_eq!(m(g.mul(a, b)), proj.target.mul(m(a), m(b)));
        prop_assert_eq!(proj.map[proj.section[m(a) as usize] as usize], m(a));
    }

    #[test]
    fn recursive_construction_certificates(gi in 0usize..6, i in any::<usize>(), j in any::<usize>(), extra in 0u32..2) {
        let fx = pick(fixtures(), gi);
        let g = &fx.group;
        let proper: Vec<&Subgroup> = fx.normals.iter().filter(|s| s.order() < g.order()).collect();
        let p = g.prime() as usize;
        let mut cs = vec![(*pick(&proper, i)).clone(), (*pick(&proper, j)).clone()];
        cs.resize(p - 1, Subgroup::trivial(g));
        let whole = Subgroup::whole(g);
        let hyp = g.elements()
            .filter(|&x| !cs.iter().any(|c| c.contains(x)))
            .map(|x| breadth_profile(g).per_element[x as usize])
            .max()
            .unwrap();
        let f = FFunction::lower_central(g);
        let (n, cert) = theorem1(&f, hyp + extra, 1, &whole, &cs).unwrap();
        prop_assert!(cert.postconditions.all());
        prop_assert!(replay(&f, &cert).unwrap().passed());
        prop_assert!(cert.steps.len() <= (hyp + extra) as usize + 2);
        for w in cert.steps.windows(2) {
            prop_assert!(!w[0].case.is_terminal());
            prop_assert_eq!(w[1].input.n + 1, w[0].input.n);
            prop_assert_eq!(w[1].input.m, w[0].input.m + 1);
        }
        prop_assert!(matches!(cert.steps.last().unwrap().case, StepCase::Base | StepCase::Central));
        let set = common::set_of(&n);
        prop_assert!(common::is_normal(g, &set));
        prop_assert!(set.iter().any(|&x| !cs.iter().any(|c| c.contains(x))));
    }
}

#[test]
fn lower_central_satisfies_membership_conditions() {
    for fx in fixtures() {
        let f = FFunction::lower_central(&fx.group);
        let report = check_f_membership(&f, &fx.normals, 4);
        assert!(report.passed(), "{}: {:?}", fx.group.label(), report.violation);
    }
}
