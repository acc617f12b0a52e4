mod common;

use cbc_core::constructions::*;
use cbc_core::corpus::{build_group, elementary_abelian, heisenberg, unitriangular, wreath_cyclic, GroupSpec};
use cbc_core::group::*;
use cbc_core::Error;

fn build(spec: cbc_core::Result<GroupSpec>) -> GroupTable {
    build_group(&spec.unwrap(), DEFAULT_ORDER_CAP).unwrap()
}

#[test]
fn commutator_descent_matches_definition_on_small_lattices() {
    for g in [build(heisenberg(3)), build(wreath_cyclic(3)), build(elementary_abelian(3, 2))] {
        let normals = normal_subgroups(&g, 10_000).unwrap();
        for n in &normals {
            for c2 in &normals {
                for c1 in normals.iter().filter(|c| c.is_subset(c2)) {
                    let p = lemma1_p(&g, n, c1, c2).unwrap();
                    let expected = common::lemma1_p(
                        &g,
                        &common::set_of(n),
                        &common::set_of(c1),
                        &common::set_of(c2),
                    );
                    assert_eq!(common::set_of(&p), expected);
                }
            }
        }
    }
}

#[test]
fn commutator_descent_requires_nesting() {
    let g = build(elementary_abelian(3, 2));
    let a = generated_subgroup(&g, [1]);
    let b = generated_subgroup(&g, [2]);
    let w = Subgroup::whole(&g);
    assert!(matches!(lemma1_p(&g, &w, &a, &b), Err(Error::PreconditionViolated(_))));
}

#[test]
fn refine_on_elementary_abelian_square() {
    let g = build(elementary_abelian(3, 2));
    let c3 = lemma2_refine(&g, &Subgroup::trivial(&g), &Subgroup::whole(&g)).unwrap();
    assert_eq!(c3.order(), 3);
    assert!(is_normal(&g, &c3));
}

#[test]
fn refine_conclusions_on_every_pair() {
    for g in [build(heisenberg(3)), build(wreath_cyclic(3)), build(unitriangular(4, 3))] {
        let normals = normal_subgroups(&g, 10_000).unwrap();
        for c2 in &normals {
            for c1 in normals.iter().filter(|c| c.is_proper_subset(c2)) {
                let c3 = lemma2_refine(&g, c1, c2).unwrap();
                let set = common::set_of(&c3);
                assert!(c1.is_subset(&c3) && c3.is_subset(c2));
                assert_eq!(c2.order(), c3.order() * g.prime() as usize);
                assert!(common::is_subgroup(&g, &set) && common::is_normal(&g, &set));
            }
        }
    }
}

#[test]
fn refine_rejects_equal_pair() {
    let g = build(heisenberg(3));
    let w = Subgroup::whole(&g);
    assert!(matches!(lemma2_refine(&g, &w, &w), Err(Error::PreconditionViolated(_))));
}

#[test]
fn select_picks_a_remaining_line() {
    let g = build(elementary_abelian(3, 2));
    let w = Subgroup::whole(&g);
    let lines: Vec<Subgroup> = normal_subgroups(&g, 100)
        .unwrap()
        .into_iter()
        .filter(|s| s.order() == 3)
        .collect();
    assert_eq!(lines.len(), 4);
    let d = lemma4_select(&g, &w, &lines[0], &lines[1], &[]).unwrap();
    assert!(d == lines[2] || d == lines[3]);
    // With p = 3 at most one subgroup may be avoided.
    let err = lemma4_select(&g, &w, &lines[0], &lines[1], &[lines[2].clone(), lines[3].clone()]);
    assert!(matches!(err, Err(Error::PreconditionViolated(_))));
    let d = lemma4_select(&g, &w, &lines[0], &lines[1], &[lines[2].clone()]).unwrap();
    assert_eq!(d, lines[3]);
}

#[test]
fn select_five_lines_for_p_five() {
    let g = build(elementary_abelian(5, 2));
    let w = Subgroup::whole(&g);
    let lines: Vec<Subgroup> = normal_subgroups(&g, 100)
        .unwrap()
        .into_iter()
        .filter(|s| s.order() == 5)
        .collect();
    assert_eq!(lines.len(), 6);
    let avoid = vec![lines[2].clone(), lines[3].clone(), lines[4].clone()];
    let d = lemma4_select(&g, &w, &lines[0], &lines[1], &avoid).unwrap();
    assert_eq!(d, lines[5]);
}

#[test]
fn subgroups_between_are_normal() {
    let g = build(heisenberg(3));
    let w = Subgroup::whole(&g);
    let maxes = maximal_subgroups_through(&g, &w, &center(&g)).unwrap();
    assert_eq!(maxes.len(), 4);
    let between = subgroups_between(&g, &w, &maxes[0], &maxes[1]).unwrap();
    assert_eq!(between.len(), 6);
    for s in &between {
        assert!(common::is_normal(&g, &common::set_of(s)));
    }
}
