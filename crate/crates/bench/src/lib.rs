//! Fixtures shared by the benchmarks.

use cbc_core::corpus::{build_group, elementary_abelian, heisenberg, unitriangular, wreath_cyclic, GroupSpec};
use cbc_core::group::{GroupTable, DEFAULT_ORDER_CAP};

/// Named specs spanning small to mid-sized orders.
pub fn specs() -> Vec<(&'static str, GroupSpec)> {
    vec![
        ("heisenberg_5", heisenberg(5).expect("valid")),
        ("wreath_3", wreath_cyclic(3).expect("valid")),
        ("ut_4_3", unitriangular(4, 3).expect("valid")),
        ("ea_3_5", elementary_abelian(3, 5).expect("valid")),
    ]
}

pub fn build(spec: &GroupSpec) -> GroupTable {
    build_group(spec, DEFAULT_ORDER_CAP).expect("fixture builds")
}
