//! Fully materialized finite p-groups.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::action::Action;
use crate::error::{Error, Result};

/// Element index within a [`GroupTable`].
pub type Elem = u32;

/// Default cap on the number of elements a closure may produce.
pub const DEFAULT_ORDER_CAP: usize = 20_000;

/// Groups up to this order get a full multiplication table.
pub const TABLE_THRESHOLD: usize = 4096;

/// Below this order associativity is checked exhaustively (Light's test
/// over the generators); above it on random triples.
const EXHAUSTIVE_ASSOC_LIMIT: usize = 2000;
const RANDOM_ASSOC_TRIPLES: usize = 100_000;

pub fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// `Some(e)` when `n == p^e`.
pub fn log_exact(n: usize, p: u64) -> Option<u32> {
    let p = p as usize;
    let mut e = 0;
    let mut m = n;
    if m == 0 {
        return None;
    }
    while m > 1 {
        if !m.is_multiple_of(p) {
            return None;
        }
        m /= p;
        e += 1;
    }
    Some(e)
}

#[derive(Debug)]
enum Backend {
    /// Row-major `order x order` table.
    Table(Vec<u16>),
    /// Compose concrete actions and look the result up.
    Actions(HashMap<Action, Elem>),
    /// Right-multiply by the generator word of the second operand.
    Words { rgen: Vec<Elem>, words: Vec<Vec<u16>> },
}

/// Concrete representative of each element.
#[derive(Debug, Clone)]
pub enum ElementRepr {
    Actions(Vec<Action>),
    /// Minimal coset representative (an element index of the source group).
    Cosets(Vec<Elem>),
}

/// A finite p-group (p odd) with canonically indexed elements.
///
/// Index 0 is the identity; the remaining indices follow breadth-first
/// closure order over the generators in input order.
#[derive(Debug)]
pub struct GroupTable {
    prime: u64,
    order: usize,
    exponent: u32,
    label: String,
    generators: Vec<Elem>,
    backend: Backend,
    inv: Vec<Elem>,
    reprs: ElementRepr,
    centralizers: OnceLock<Vec<FixedBitSet>>,
}

struct Closure<K> {
    elements: Vec<K>,
    index: HashMap<K, Elem>,
    /// `rgen[x * k + g]` is the index of `x * gen_g`.
    rgen: Vec<Elem>,
    /// BFS tree: `(parent, generator)` for every non-identity element.
    parent: Vec<(Elem, u16)>,
}

fn bfs_closure<K, F>(identity: K, ngens: usize, step: F, cap: usize) -> Result<Closure<K>>
where
    K: Clone + Eq + Hash,
    F: Fn(&K, usize) -> K,
{
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::new();
    index.insert(identity, 0);
    let mut rgen = Vec::new();
    let mut parent = vec![(0, 0)];
    let mut head = 0;
    while head < elements.len() {
        for g in 0..ngens {
            let y = step(&elements[head], g);
            let idx = match index.get(&y) {
                Some(&i) => i,
                None => {
                    let i = elements.len() as Elem;
                    if elements.len() >= cap {
                        return Err(Error::OrderCapExceeded { cap });
                    }
                    index.insert(y.clone(), i);
                    elements.push(y);
                    parent.push((head as Elem, g as u16));
                    i
                }
            };
            rgen.push(idx);
        }
        head += 1;
    }
    Ok(Closure {
        elements,
        index,
        rgen,
        parent,
    })
}

fn table_from_cayley(n: usize, k: usize, rgen: &[Elem], parent: &[(Elem, u16)]) -> Vec<u16> {
    let mut table = vec![0u16; n * n];
    for i in 0..n {
        let row = &mut table[i * n..(i + 1) * n];
        row[0] = i as u16;
        for j in 1..n {
            let (pj, g) = parent[j];
            row[j] = rgen[row[pj as usize] as usize * k + g as usize] as u16;
        }
    }
    table
}

fn words_from_cayley(n: usize, parent: &[(Elem, u16)]) -> Vec<Vec<u16>> {
    let mut words: Vec<Vec<u16>> = Vec::with_capacity(n);
    words.push(Vec::new());
    for &(pj, g) in &parent[1..n] {
        let mut w = words[pj as usize].clone();
        w.push(g);
        words.push(w);
    }
    words
}

impl GroupTable {
    /// Closure of `generators` under composition, with canonical BFS
    /// indexing.
    pub fn from_actions(
        prime: u64,
        label: impl Into<String>,
        generators: &[Action],
        cap: usize,
    ) -> Result<Self> {
        if !is_odd_prime(prime) {
            return Err(Error::InvalidPrime(prime));
        }
        let identity = match generators.first() {
            Some(g) => g.identity_like(),
            None => Action::perm_identity(1),
        };
        let closure = bfs_closure(
            identity,
            generators.len(),
            |x, g| x.then(&generators[g]),
            cap,
        )?;
        let n = closure.elements.len();
        let exponent = log_exact(n, prime).ok_or(Error::NotAPGroup { order: n, prime })?;
        let k = generators.len();

        let gen_idx = dedup_generators(generators.iter().map(|g| closure.index[g]));
        let backend = if n <= TABLE_THRESHOLD {
            Backend::Table(table_from_cayley(n, k, &closure.rgen, &closure.parent))
        } else {
            Backend::Actions(closure.index)
        };
        let mut group = GroupTable {
            prime,
            order: n,
            exponent,
            label: label.into(),
            generators: gen_idx,
            backend,
            inv: Vec::new(),
            reprs: ElementRepr::Actions(closure.elements),
            centralizers: OnceLock::new(),
        };
        group.inv = group.compute_inverses();
        group.validate(&closure.rgen, k)?;
        Ok(group)
    }

    /// Closure over abstract elements described by a Cayley graph; used for
    /// quotients. `step(x, g)` returns the key of `x * gen_g`.
    pub(crate) fn from_cayley<K, F>(
        prime: u64,
        label: String,
        identity: K,
        ngens: usize,
        step: F,
        repr: impl Fn(&K) -> Elem,
    ) -> Result<(Self, HashMap<K, Elem>)>
    where
        K: Clone + Eq + Hash,
        F: Fn(&K, usize) -> K,
    {
        let closure = bfs_closure(identity, ngens, step, usize::MAX)?;
        let n = closure.elements.len();
        let exponent = log_exact(n, prime).ok_or(Error::NotAPGroup { order: n, prime })?;
        let gen_idx = dedup_generators((0..ngens).map(|g| closure.rgen[g]));
        let backend = if n <= TABLE_THRESHOLD {
            Backend::Table(table_from_cayley(n, ngens, &closure.rgen, &closure.parent))
        } else {
            Backend::Words {
                rgen: closure.rgen.clone(),
                words: words_from_cayley(n, &closure.parent),
            }
        };
        let reprs = ElementRepr::Cosets(closure.elements.iter().map(repr).collect());
        let mut group = GroupTable {
            prime,
            order: n,
            exponent,
            label,
            generators: gen_idx,
            backend,
            inv: Vec::new(),
            reprs,
            centralizers: OnceLock::new(),
        };
        group.inv = group.compute_inverses();
        group.validate(&closure.rgen, ngens)?;
        Ok((group, closure.index))
    }

    fn compute_inverses(&self) -> Vec<Elem> {
        let n = self.order();
        match (&self.backend, &self.reprs) {
            (Backend::Table(t), _) => (0..n)
                .map(|i| {
                    let row = &t[i * n..(i + 1) * n];
                    row.iter().position(|&x| x == 0).expect("row has identity") as Elem
                })
                .collect(),
            (Backend::Actions(index), ElementRepr::Actions(reprs)) => {
                reprs.iter().map(|a| index[&a.inverse()]).collect()
            }
            _ => (0..n as Elem)
                .map(|x| {
                    let mut prev = x;
                    let mut cur = self.mul(x, x);
                    while cur != 0 {
                        prev = cur;
                        cur = self.mul(cur, x);
                    }
                    if x == 0 {
                        0
                    } else {
                        prev
                    }
                })
                .collect(),
        }
    }

    fn validate(&self, rgen: &[Elem], k: usize) -> Result<()> {
        let n = self.order();
        let bad = |what: &str| Err(Error::InternalContradiction(format!("group table: {what}")));
        for x in 0..n as Elem {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return bad("identity is not two-sided");
            }
            let y = self.inv[x as usize];
            if self.mul(x, y) != 0 || self.mul(y, x) != 0 {
                return bad("inverse is not two-sided");
            }
        }
        if n <= EXHAUSTIVE_ASSOC_LIMIT {
            // Light's test: the operation is associative iff every generator
            // associates in the middle position.
            for g in 0..k {
                for x in 0..n {
                    let xg = rgen[x * k + g];
                    for y in 0..n as Elem {
                        let gy = self.mul(rgen[g], y);
                        if self.mul(xg, y) != self.mul(x as Elem, gy) {
                            return bad("not associative");
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..RANDOM_ASSOC_TRIPLES {
                let a = rng.gen_range(0..n) as Elem;
                let b = rng.gen_range(0..n) as Elem;
                let c = rng.gen_range(0..n) as Elem;
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return bad("not associative");
                }
            }
        }
        Ok(())
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `log_p |G|`.
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    pub fn identity(&self) -> Elem {
        0
    }

    /// Distinct non-identity generators, in input order.
    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order() as Elem
    }

    pub fn has_table(&self) -> bool {
        matches!(self.backend, Backend::Table(_))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.backend {
            Backend::Table(t) => t[a as usize * self.order + b as usize] as Elem,
            Backend::Actions(index) => {
                let ElementRepr::Actions(reprs) = &self.reprs else {
                    unreachable!("action backend without actions")
                };
                index[&reprs[a as usize].then(&reprs[b as usize])]
            }
            Backend::Words { rgen, words } => {
                let k = rgen.len() / self.order;
                words[b as usize]
                    .iter()
                    .fold(a, |x, &g| rgen[x as usize * k + g as usize])
            }
        }
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a as usize]
    }

    /// `x^-1 y^-1 x y`.
    #[inline]
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conjugate(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn power(&self, x: Elem, k: u64) -> Elem {
        let mut acc = 0;
        let mut base = x;
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: Elem) -> usize {
        let mut k = 1;
        let mut cur = x;
        while cur != 0 {
            cur = self.mul(cur, x);
            k += 1;
        }
        k
    }

    #[inline]
    pub fn commutes(&self, x: Elem, y: Elem) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    /// `Z_G(x)` as a bit set, from a lazily built table of all centralizers.
    pub fn centralizer_bits(&self, x: Elem) -> &FixedBitSet {
        &self.centralizer_table()[x as usize]
    }

    fn centralizer_table(&self) -> &[FixedBitSet] {
        self.centralizers.get_or_init(|| {
            let n = self.order();
            let mut table = vec![FixedBitSet::with_capacity(n); n];
            for x in 0..n {
                table[x].insert(x);
                for y in x + 1..n {
                    if self.commutes(x as Elem, y as Elem) {
                        table[x].insert(y);
                        table[y].insert(x);
                    }
                }
            }
            table
        })
    }

    pub fn element_repr(&self) -> &ElementRepr {
        &self.reprs
    }

    /// Human-readable form of element `x`.
    pub fn describe(&self, x: Elem) -> String {
        match &self.reprs {
            ElementRepr::Actions(r) => r[x as usize].to_string(),
            ElementRepr::Cosets(r) => format!("coset of #{}", r[x as usize]),
        }
    }
}

fn dedup_generators(it: impl Iterator<Item = Elem>) -> Vec<Elem> {
    let mut out = Vec::new();
    for g in it {
        if g != 0 && !out.contains(&g) {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(p: u32) -> GroupTable {
        let images = (0..p).map(|i| (i + 1) % p).collect();
        GroupTable::from_actions(p as u64, "C", &[Action::Perm(images)], DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn cyclic_three() {
        let g = cyclic(3);
        assert_eq!(g.order(), 3);
        assert_eq!(g.exponent(), 1);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.generators(), &[1]);
        // BFS: 0 = e, 1 = a, 2 = a^2
        assert_eq!(g.mul(1, 1), 2);
        assert_eq!(g.inv(1), 2);
    }

    #[test]
    fn rejects_bad_primes_and_orders() {
        let swap = Action::Perm(vec![1, 0]);
        assert_eq!(
            GroupTable::from_actions(3, "x", std::slice::from_ref(&swap), 100).unwrap_err(),
            Error::NotAPGroup { order: 2, prime: 3 }
        );
        assert_eq!(
            GroupTable::from_actions(2, "x", std::slice::from_ref(&swap), 100).unwrap_err(),
            Error::InvalidPrime(2)
        );
        assert_eq!(
            GroupTable::from_actions(9, "x", &[swap], 100).unwrap_err(),
            Error::InvalidPrime(9)
        );
    }

    #[test]
    fn cap_is_enforced() {
        let c9 = Action::Perm((0..9).map(|i| (i + 1) % 9).collect());
        assert_eq!(
            GroupTable::from_actions(3, "x", &[c9], 5).unwrap_err(),
            Error::OrderCapExceeded { cap: 5 }
        );
    }

    #[test]
    fn log_exact_and_primes() {
        assert_eq!(log_exact(27, 3), Some(3));
        assert_eq!(log_exact(1, 5), Some(0));
        assert_eq!(log_exact(12, 3), None);
        assert!(is_odd_prime(3) && is_odd_prime(5) && is_odd_prime(101));
        assert!(!is_odd_prime(2) && !is_odd_prime(1) && !is_odd_prime(15));
    }
}
