//! Group families, the group file format and report serialization.

mod emit;
mod parse;
mod spec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use emit::{
    certificate_json, descriptor, survey_csv, CertificateJson, InputJson, PostconditionsJson,
    StepJson, SubgroupDescriptor, SURVEY_CSV_HEADER,
};
pub use parse::parse_group_file;
pub use spec::{
    build_group, direct_product, elementary_abelian, extraspecial, family, heisenberg,
    unitriangular, wreath_cyclic, FamilyTag, Generator, GroupKind, GroupSpec,
};

use crate::error::{Error, Result};

/// Seed for the random direct products in [`standard_corpus`].
pub const CORPUS_SEED: u64 = 0xC1A5_5B0D;

/// Largest corpus order per prime: `3^7` and `5^5`.
pub fn corpus_order_bound(p: u64) -> u128 {
    match p {
        3 => 2187,
        5 => 3125,
        _ => 0,
    }
}

fn base_factors(p: u64) -> Vec<GroupSpec> {
    let mut out = vec![
        elementary_abelian(p, 1),
        elementary_abelian(p, 2),
        heisenberg(p),
        extraspecial(p, p * p),
    ];
    if p == 3 {
        out.push(wreath_cyclic(3));
        out.push(unitriangular(4, 3));
    }
    out.into_iter().map(|s| s.expect("valid base factor")).collect()
}

/// `count` distinct direct products of two or three base factors, orders
/// within [`corpus_order_bound`]. Deterministic in `seed`.
pub fn random_direct_products(count: usize, seed: u64) -> Vec<GroupSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<GroupSpec> = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < 10_000 {
        attempts += 1;
        let p = if rng.gen_bool(0.75) { 3 } else { 5 };
        let bases = base_factors(p);
        let k = rng.gen_range(2..=3);
        let picks: Vec<&GroupSpec> = (0..k).map(|_| bases.choose(&mut rng).unwrap()).collect();
        let order: u128 = picks.iter().map(|s| s.expected_order.unwrap()).product();
        if order > corpus_order_bound(p) {
            continue;
        }
        let mut spec = picks[0].clone();
        for s in &picks[1..] {
            spec = direct_product(&spec, s).expect("same prime");
        }
        // Skip factor lists that are pure elementary abelian: those are
        // already in the corpus as EA(p, k).
        if picks.iter().all(|s| s.label.starts_with("EA(")) {
            continue;
        }
        if out.iter().any(|o| o.label == spec.label) {
            continue;
        }
        out.push(spec);
    }
    out
}

/// The named groups plus twenty random direct products.
pub fn standard_corpus() -> Vec<GroupSpec> {
    let mut out = vec![
        heisenberg(3),
        heisenberg(5),
        extraspecial(3, 3),
        extraspecial(3, 9),
        extraspecial(5, 5),
        extraspecial(5, 25),
        wreath_cyclic(3),
        unitriangular(3, 3),
        unitriangular(4, 3),
    ]
    .into_iter()
    .collect::<Result<Vec<_>>>()
    .expect("valid corpus members");
    for k in 1..=6 {
        out.push(elementary_abelian(3, k).expect("valid"));
    }
    for k in 1..=5 {
        out.push(elementary_abelian(5, k).expect("valid"));
    }
    out.extend(random_direct_products(20, CORPUS_SEED));
    out
}

/// Members of a named family for the given primes, up to `max_order`.
/// `corpus` selects [`standard_corpus`].
pub fn survey_family(name: &str, primes: &[u64], max_order: u128) -> Result<Vec<GroupSpec>> {
    let mut out = Vec::new();
    if name == "corpus" {
        out = standard_corpus()
            .into_iter()
            .filter(|s| primes.contains(&s.prime))
            .collect();
    } else {
        for &p in primes {
            match name {
                "heisenberg" | "wreath_cyclic" => out.push(family(name, &[p])?),
                "extraspecial" => {
                    out.push(extraspecial(p, p)?);
                    out.push(extraspecial(p, p * p)?);
                }
                "unitriangular" => {
                    for n in 2.. {
                        let s = unitriangular(n, p)?;
                        if s.expected_order.unwrap() > max_order {
                            break;
                        }
                        out.push(s);
                    }
                }
                "elementary_abelian" => {
                    for k in 1.. {
                        let s = elementary_abelian(p, k)?;
                        if s.expected_order.unwrap() > max_order {
                            break;
                        }
                        out.push(s);
                    }
                }
                other => return Err(Error::UnknownFamily(other.to_string())),
            }
        }
    }
    out.retain(|s| s.expected_order.is_none_or(|o| o <= max_order));
    Ok(out)
}
