//! Concrete actions that generate a group: permutations of a finite point
//! set and upper unitriangular matrices over `F_p`.
//!
//! Both kinds act on the right, so `a.then(b)` means "apply `a`, then `b`".
//! For matrices this is the ordinary product `a * b` acting on row vectors.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Action {
    /// Images of the points `0..n` (zero-based).
    Perm(Vec<u32>),
    /// Row-major `dim x dim` matrix with entries reduced mod `modulus`.
    Matrix {
        dim: usize,
        modulus: u32,
        entries: Vec<u32>,
    },
}

impl Action {
    pub fn perm_identity(degree: usize) -> Self {
        Action::Perm((0..degree as u32).collect())
    }

    pub fn matrix_identity(dim: usize, modulus: u32) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        Action::Matrix {
            dim,
            modulus,
            entries,
        }
    }

    /// Identity of the same kind and size as `self`.
    pub fn identity_like(&self) -> Self {
        match self {
            Action::Perm(images) => Action::perm_identity(images.len()),
            Action::Matrix { dim, modulus, .. } => Action::matrix_identity(*dim, *modulus),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Action::Perm(images) => images.iter().enumerate().all(|(i, &x)| i as u32 == x),
            Action::Matrix { dim, entries, .. } => entries
                .iter()
                .enumerate()
                .all(|(k, &x)| x == u32::from(k / dim == k % dim)),
        }
    }

    /// `self` followed by `other`.
    ///
    /// Panics when the two actions are of different kinds or sizes; every
    /// group is generated by actions of one shape.
    pub fn then(&self, other: &Action) -> Action {
        match (self, other) {
            (Action::Perm(a), Action::Perm(b)) => {
                assert_eq!(a.len(), b.len(), "permutation degrees differ");
                Action::Perm(a.iter().map(|&x| b[x as usize]).collect())
            }
            (
                Action::Matrix {
                    dim,
                    modulus,
                    entries: a,
                },
                Action::Matrix {
                    dim: d2,
                    modulus: m2,
                    entries: b,
                },
            ) => {
                assert!(dim == d2 && modulus == m2, "matrix shapes differ");
                let n = *dim;
                let q = u64::from(*modulus);
                let mut out = vec![0u32; n * n];
                for i in 0..n {
                    for j in 0..n {
                        let mut acc = 0u64;
                        for k in 0..n {
                            acc += u64::from(a[i * n + k]) * u64::from(b[k * n + j]);
                        }
                        out[i * n + j] = (acc % q) as u32;
                    }
                }
                Action::Matrix {
                    dim: n,
                    modulus: *modulus,
                    entries: out,
                }
            }
            _ => panic!("cannot compose a permutation with a matrix"),
        }
    }

    pub fn inverse(&self) -> Action {
        match self {
            Action::Perm(images) => {
                let mut inv = vec![0u32; images.len()];
                for (i, &x) in images.iter().enumerate() {
                    inv[x as usize] = i as u32;
                }
                Action::Perm(inv)
            }
            Action::Matrix { .. } => {
                // Unitriangular matrices are unipotent, so the inverse is a
                // positive power. Walk the cyclic subgroup.
                let mut prev = self.clone();
                let mut cur = self.then(self);
                while !cur.is_identity() {
                    prev = cur.clone();
                    cur = cur.then(self);
                }
                prev
            }
        }
    }

    /// Order of the cyclic subgroup generated by `self`, or `None` once it
    /// exceeds `limit`.
    pub fn order(&self, limit: usize) -> Option<usize> {
        let mut cur = self.clone();
        let mut k = 1;
        while !cur.is_identity() {
            k += 1;
            if k > limit {
                return None;
            }
            cur = cur.then(self);
        }
        Some(k)
    }

    /// The regular-ish permutation action of a matrix group on row vectors
    /// of `F_p^dim`, with vectors encoded base `p` (first coordinate most
    /// significant). Permutations are returned unchanged.
    pub fn to_permutation(&self) -> Action {
        match self {
            Action::Perm(_) => self.clone(),
            Action::Matrix {
                dim,
                modulus,
                entries,
            } => {
                let n = *dim;
                let q = *modulus as usize;
                let points = q.pow(n as u32);
                let mut images = Vec::with_capacity(points);
                let mut v = vec![0usize; n];
                for code in 0..points {
                    let mut c = code;
                    for slot in v.iter_mut().rev() {
                        *slot = c % q;
                        c /= q;
                    }
                    let mut img = 0usize;
                    for j in 0..n {
                        let mut acc = 0usize;
                        for (i, &vi) in v.iter().enumerate() {
                            acc += vi * entries[i * n + j] as usize;
                        }
                        img = img * q + acc % q;
                    }
                    images.push(img as u32);
                }
                Action::Perm(images)
            }
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Action::Perm(images) => images.len(),
            Action::Matrix { dim, .. } => *dim,
        }
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Action::Perm(images) => {
                let mut seen = vec![false; images.len()];
                let mut wrote = false;
                for start in 0..images.len() {
                    if seen[start] || images[start] as usize == start {
                        continue;
                    }
                    write!(f, "(")?;
                    let mut x = start;
                    let mut first = true;
                    while !seen[x] {
                        seen[x] = true;
                        if !first {
                            write!(f, " ")?;
                        }
                        write!(f, "{}", x + 1)?;
                        first = false;
                        x = images[x] as usize;
                    }
                    write!(f, ")")?;
                    wrote = true;
                }
                if !wrote {
                    write!(f, "()")?;
                }
                Ok(())
            }
            Action::Matrix { dim, entries, .. } => {
                for i in 0..*dim {
                    if i > 0 {
                        write!(f, "; ")?;
                    }
                    let row: Vec<String> = entries[i * dim..(i + 1) * dim]
                        .iter()
                        .map(u32::to_string)
                        .collect();
                    write!(f, "{}", row.join(" "))?;
                }
                Ok(())
            }
        }
    }
}
