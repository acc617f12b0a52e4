use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::group::{is_odd_prime, Action, GroupTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    Perm,
    Matrix,
}

/// Provenance of a spec built by one of the family constructors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyTag {
    pub name: String,
    pub params: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub action: Action,
}

/// A parsed or constructed generator description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub prime: u64,
    pub kind: GroupKind,
    pub label: String,
    pub generators: Vec<Generator>,
    pub family: Option<FamilyTag>,
    /// Closed-form order, when known.
    pub expected_order: Option<u128>,
}

impl GroupSpec {
    /// Serializes the generators in the group file format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "p: {}", self.prime);
        match self.kind {
            GroupKind::Perm => {
                let _ = writeln!(out, "kind: perm");
            }
            GroupKind::Matrix => {
                let _ = writeln!(out, "kind: matrix");
                let dim = self.generators.first().map_or(1, |g| g.action.degree());
                let _ = writeln!(out, "n: {dim}");
            }
        }
        for g in &self.generators {
            let _ = writeln!(out, "gen {}: {}", g.name, g.action);
        }
        out
    }

    pub fn actions(&self) -> Vec<Action> {
        self.generators.iter().map(|g| g.action.clone()).collect()
    }
}

/// Closure of the spec's generators with canonical BFS indexing.
pub fn build_group(spec: &GroupSpec, cap: usize) -> Result<GroupTable> {
    if !is_odd_prime(spec.prime) {
        return Err(Error::InvalidPrime(spec.prime));
    }
    if let Some(order) = spec.expected_order {
        if order > cap as u128 {
            return Err(Error::OrderCapExceeded { cap });
        }
    }
    let group = GroupTable::from_actions(spec.prime, spec.label.clone(), &spec.actions(), cap)?;
    if let Some(order) = spec.expected_order {
        if order != group.order() as u128 {
            return Err(Error::InternalContradiction(format!(
                "{} closed to order {}, expected {order}",
                spec.label,
                group.order()
            )));
        }
    }
    Ok(group)
}

fn check_prime(p: u64) -> Result<()> {
    if is_odd_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidPrime(p))
    }
}

fn tagged(name: &str, params: &[u64]) -> Option<FamilyTag> {
    Some(FamilyTag {
        name: name.to_string(),
        params: params.to_vec(),
    })
}

fn pow(p: u64, e: u64) -> u128 {
    (p as u128).saturating_pow(e as u32)
}

fn elementary_matrix(dim: usize, p: u64, i: usize, j: usize) -> Action {
    let mut m = Action::matrix_identity(dim, p as u32);
    if let Action::Matrix { entries, .. } = &mut m {
        entries[i * dim + j] = 1;
    }
    m
}

/// Full `UT(n, p)`, generated by the superdiagonal elementary matrices.
pub fn unitriangular(n: usize, p: u64) -> Result<GroupSpec> {
    check_prime(p)?;
    if n < 2 {
        return Err(Error::PreconditionViolated(
            "unitriangular needs n >= 2".into(),
        ));
    }
    let generators = (0..n - 1)
        .map(|i| Generator {
            name: format!("e{}{}", i + 1, i + 2),
            action: elementary_matrix(n, p, i, i + 1),
        })
        .collect();
    Ok(GroupSpec {
        prime: p,
        kind: GroupKind::Matrix,
        label: format!("UT({n},{p})"),
        generators,
        family: tagged("unitriangular", &[n as u64, p]),
        expected_order: Some(pow(p, (n * (n - 1) / 2) as u64)),
    })
}

/// `UT(3, p)`, order `p^3`.
pub fn heisenberg(p: u64) -> Result<GroupSpec> {
    let mut spec = unitriangular(3, p)?;
    spec.generators[0].name = "a".into();
    spec.generators[1].name = "b".into();
    spec.label = format!("heisenberg({p})");
    spec.family = tagged("heisenberg", &[p]);
    Ok(spec)
}

/// Extraspecial group of order `p^3` and exponent `p` (Heisenberg) or
/// `p^2`. The latter is the affine group `x -> (1+p)^k x + t` on `Z/p^2`.
pub fn extraspecial(p: u64, exponent: u64) -> Result<GroupSpec> {
    check_prime(p)?;
    if exponent == p {
        let mut spec = heisenberg(p)?;
        spec.label = format!("extraspecial({p},{p})");
        spec.family = tagged("extraspecial", &[p, p]);
        return Ok(spec);
    }
    if exponent != p * p {
        return Err(Error::PreconditionViolated(format!(
            "extraspecial exponent must be {p} or {}",
            p * p
        )));
    }
    let q = (p * p) as u32;
    let shift = Action::Perm((0..q).map(|x| (x + 1) % q).collect());
    let scale = Action::Perm((0..q).map(|x| (x * (1 + p as u32)) % q).collect());
    Ok(GroupSpec {
        prime: p,
        kind: GroupKind::Perm,
        label: format!("extraspecial({p},{})", p * p),
        generators: vec![
            Generator {
                name: "a".into(),
                action: shift,
            },
            Generator {
                name: "b".into(),
                action: scale,
            },
        ],
        family: tagged("extraspecial", &[p, p * p]),
        expected_order: Some(pow(p, 3)),
    })
}

/// `Z_p ≀ Z_p` on `p^2` points `(block, offset) -> block * p + offset`.
pub fn wreath_cyclic(p: u64) -> Result<GroupSpec> {
    check_prime(p)?;
    let p32 = p as u32;
    let base = Action::Perm(
        (0..p32 * p32)
            .map(|x| if x < p32 { (x + 1) % p32 } else { x })
            .collect(),
    );
    let top = Action::Perm(
        (0..p32 * p32)
            .map(|x| ((x / p32 + 1) % p32) * p32 + x % p32)
            .collect(),
    );
    Ok(GroupSpec {
        prime: p,
        kind: GroupKind::Perm,
        label: format!("wreath({p})"),
        generators: vec![
            Generator {
                name: "base".into(),
                action: base,
            },
            Generator {
                name: "top".into(),
                action: top,
            },
        ],
        family: tagged("wreath_cyclic", &[p]),
        expected_order: Some(pow(p, p + 1)),
    })
}

/// `(Z_p)^k` as `k` disjoint `p`-cycles.
pub fn elementary_abelian(p: u64, k: usize) -> Result<GroupSpec> {
    check_prime(p)?;
    let p32 = p as u32;
    let degree = (k as u32 * p32).max(1);
    let generators = (0..k as u32)
        .map(|c| {
            let images = (0..degree)
                .map(|x| {
                    if x / p32 == c {
                        c * p32 + (x % p32 + 1) % p32
                    } else {
                        x
                    }
                })
                .collect();
            Generator {
                name: format!("x{}", c + 1),
                action: Action::Perm(images),
            }
        })
        .collect();
    Ok(GroupSpec {
        prime: p,
        kind: GroupKind::Perm,
        label: format!("EA({p},{k})"),
        generators,
        family: tagged("elementary_abelian", &[p, k as u64]),
        expected_order: Some(pow(p, k as u64)),
    })
}

/// `A × B`: block-diagonal matrices when both factors are matrix groups,
/// otherwise permutations on the disjoint union of the point sets.
pub fn direct_product(a: &GroupSpec, b: &GroupSpec) -> Result<GroupSpec> {
    if a.prime != b.prime {
        return Err(Error::PreconditionViolated(
            "direct product factors must share p".into(),
        ));
    }
    check_prime(a.prime)?;
    let expected_order = a.expected_order.zip(b.expected_order).map(|(x, y)| x * y);
    let label = format!("{} x {}", a.label, b.label);
    let family = tagged("direct_product", &[]);

    if a.kind == GroupKind::Matrix && b.kind == GroupKind::Matrix {
        let da = a.generators.first().map_or(1, |g| g.action.degree());
        let db = b.generators.first().map_or(1, |g| g.action.degree());
        let dim = da + db;
        let embed = |g: &Generator, offset: usize, d: usize, tag: &str| {
            let mut m = Action::matrix_identity(dim, a.prime as u32);
            if let (
                Action::Matrix { entries, .. },
                Action::Matrix {
                    entries: src, ..
                },
            ) = (&mut m, &g.action)
            {
                for i in 0..d {
                    for j in 0..d {
                        entries[(offset + i) * dim + offset + j] = src[i * d + j];
                    }
                }
            }
            Generator {
                name: format!("{tag}{}", g.name),
                action: m,
            }
        };
        let mut generators: Vec<Generator> =
            a.generators.iter().map(|g| embed(g, 0, da, "l_")).collect();
        generators.extend(b.generators.iter().map(|g| embed(g, da, db, "r_")));
        return Ok(GroupSpec {
            prime: a.prime,
            kind: GroupKind::Matrix,
            label,
            generators,
            family,
            expected_order,
        });
    }

    let as_perms = |s: &GroupSpec| -> Vec<(String, Vec<u32>)> {
        s.generators
            .iter()
            .map(|g| match g.action.to_permutation() {
                Action::Perm(images) => (g.name.clone(), images),
                Action::Matrix { .. } => unreachable!("converted to a permutation"),
            })
            .collect()
    };
    let pa = as_perms(a);
    let pb = as_perms(b);
    let na = pa.first().map_or(0, |(_, v)| v.len());
    let nb = pb.first().map_or(0, |(_, v)| v.len());
    let degree = (na + nb).max(1) as u32;
    let mut generators = Vec::new();
    for (name, images) in pa {
        let mut full: Vec<u32> = (0..degree).collect();
        full[..na].copy_from_slice(&images);
        generators.push(Generator {
            name: format!("l_{name}"),
            action: Action::Perm(full),
        });
    }
    for (name, images) in pb {
        let mut full: Vec<u32> = (0..degree).collect();
        for (i, &x) in images.iter().enumerate() {
            full[na + i] = na as u32 + x;
        }
        generators.push(Generator {
            name: format!("r_{name}"),
            action: Action::Perm(full),
        });
    }
    Ok(GroupSpec {
        prime: a.prime,
        kind: GroupKind::Perm,
        label,
        generators,
        family,
        expected_order,
    })
}

/// Dispatches a family by name: `heisenberg p`, `unitriangular n p`,
/// `extraspecial p e`, `wreath_cyclic p`, `elementary_abelian p k`.
pub fn family(name: &str, params: &[u64]) -> Result<GroupSpec> {
    let arity = |k: usize| -> Result<()> {
        if params.len() == k {
            Ok(())
        } else {
            Err(Error::PreconditionViolated(format!(
                "family {name} takes {k} parameters"
            )))
        }
    };
    match name {
        "heisenberg" => {
            arity(1)?;
            heisenberg(params[0])
        }
        "unitriangular" => {
            arity(2)?;
            unitriangular(params[0] as usize, params[1])
        }
        "extraspecial" => {
            arity(2)?;
            extraspecial(params[0], params[1])
        }
        "wreath_cyclic" => {
            arity(1)?;
            wreath_cyclic(params[0])
        }
        "elementary_abelian" => {
            arity(2)?;
            elementary_abelian(params[0], params[1] as usize)
        }
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}
