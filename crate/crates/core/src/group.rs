//! Finite groups as Cayley tables.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::set::ElementSet;
use std::collections::HashMap;
use std::hash::Hash;

/// Default cap on the order of a group built by closure.
pub const DEFAULT_CLOSURE_CAP: usize = 5000;

/// A finite group given by its full multiplication table.
///
/// Elements are indices `0..order`; index 0 is the identity. Tables built
/// from generators enumerate elements breadth-first over words in the
/// generators (shortlex), so indices are reproducible.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    names: Vec<String>,
    generators: Vec<usize>,
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupTable")
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

impl GroupTable {
    /// Closes `gens` under `mul` starting from `identity`.
    ///
    /// Returns the table together with the concrete element behind every index.
    pub fn from_generators<T, M, N>(
        gens: &[T],
        identity: T,
        mul: M,
        name: N,
        cap: usize,
    ) -> Result<(GroupTable, Vec<T>)>
    where
        T: Clone + Eq + Hash,
        M: Fn(&T, &T) -> T,
        N: Fn(&T) -> String,
    {
        let mut elems = vec![identity.clone()];
        let mut index: HashMap<T, usize> = HashMap::new();
        index.insert(identity, 0);
        // parent[y] = (x, j) with y = x * gens[j]
        let mut parent: Vec<(usize, usize)> = vec![(0, usize::MAX)];
        let d = gens.len();
        let mut right: Vec<u32> = Vec::new();
        let mut i = 0;
        while i < elems.len() {
            for (j, g) in gens.iter().enumerate() {
                let y = mul(&elems[i], g);
                let idx = match index.get(&y) {
                    Some(&k) => k,
                    None => {
                        let k = elems.len();
                        if k >= cap {
                            return Err(Error::ClosureOverflow { cap });
                        }
                        index.insert(y.clone(), k);
                        elems.push(y);
                        parent.push((i, j));
                        k
                    }
                };
                right.push(idx as u32);
            }
            i += 1;
        }
        let n = elems.len();
        let mut table = vec![0u32; n * n];
        // parents come first in BFS order, so each row fills left to right
        // rows of the identity and the generators by walking the BFS tree
        let gen_index: Vec<usize> = gens.iter().map(|g| index[g]).collect();
        let mut direct = vec![false; n];
        direct[0] = true;
        for &k in &gen_index {
            direct[k] = true;
        }
        for x in (0..n).filter(|&x| direct[x]) {
            let row = &mut table[x * n..(x + 1) * n];
            row[0] = x as u32;
            for y in 1..n {
                let (p, j) = parent[y];
                row[y] = right[row[p] as usize * d + j];
            }
        }
        // every other row: x = p*g gives x*y = p*(g*y)
        for x in 1..n {
            if direct[x] {
                continue;
            }
            let (p, j) = parent[x];
            let (head, rest) = table.split_at_mut(x * n);
            let row_p = &head[p * n..(p + 1) * n];
            let row_g = &head[gen_index[j] * n..(gen_index[j] + 1) * n];
            for (out, &gy) in rest[..n].iter_mut().zip(row_g) {
                *out = row_p[gy as usize];
            }
        }
        // scan only the direct rows; then x^-1 = g^-1 p^-1 in BFS order
        let mut inv = vec![0u32; n];
        for x in (0..n).filter(|&x| direct[x]) {
            let row = &table[x * n..(x + 1) * n];
            inv[x] = row.iter().position(|&v| v == 0).expect("table has inverses") as u32;
        }
        for x in 1..n {
            if !direct[x] {
                let (p, j) = parent[x];
                inv[x] = table[inv[gen_index[j]] as usize * n + inv[p] as usize];
            }
        }
        let mut generators = Vec::new();
        for g in gens {
            let k = index[g];
            if k != 0 && !generators.contains(&k) {
                generators.push(k);
            }
        }
        let names = elems.iter().map(&name).collect();
        let g = GroupTable {
            order: n,
            mul: table,
            inv,
            names,
            generators,
        };
        Ok((g, elems))
    }

    /// Builds a table from raw parts; the inverse table is derived.
    pub(crate) fn from_parts(
        order: usize,
        mul: Vec<u32>,
        names: Vec<String>,
        generators: Vec<usize>,
    ) -> GroupTable {
        let mut inv = vec![0u32; order];
        for x in 0..order {
            let row = &mul[x * order..(x + 1) * order];
            inv[x] = row.iter().position(|&v| v == 0).expect("table has inverses") as u32;
        }
        GroupTable {
            order,
            mul,
            inv,
            names,
            generators,
        }
    }

    pub fn trivial() -> GroupTable {
        GroupTable::from_parts(1, vec![0], vec!["e".into()], vec![])
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// Row `a` of the table: `b -> a*b`.
    pub fn row(&self, a: usize) -> &[u32] {
        &self.mul[a * self.order..(a + 1) * self.order]
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn index_of_name(&self, name: &str) -> Option<usize> {
        let name = name.trim();
        self.names.iter().position(|n| n == name)
    }

    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        // g x g^-1
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `[a, b] = a b a^-1 b^-1`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn power(&self, x: usize, k: usize) -> usize {
        let mut acc = 0;
        let mut base = x;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order).any(|x| self.element_order(x) == self.order)
    }

    /// Evaluates a word given as `(generator position, inverted)` pairs, left to right.
    pub fn eval_word(&self, word: &[(usize, bool)]) -> Result<usize> {
        let mut acc = 0;
        for &(j, inverted) in word {
            let g = *self.generators.get(j).ok_or_else(|| {
                Error::InvalidArgument(format!("generator {j} out of range"))
            })?;
            acc = self.mul(acc, if inverted { self.inv(g) } else { g });
        }
        Ok(acc)
    }

    /// Checks identity, inverse and associativity laws.
    ///
    /// Associativity is checked on all triples up to order 512 and on a
    /// deterministic sample of triples above that.
    pub fn check_axioms(&self) -> bool {
        let n = self.order;
        for x in 0..n {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return false;
            }
            if self.mul(x, self.inv(x)) != 0 || self.mul(self.inv(x), x) != 0 {
                return false;
            }
        }
        let assoc = |a: usize, b: usize, c: usize| {
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        };
        if n <= 512 {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    let row_b = self.row(b);
                    if !self.row(ab).iter().eq(row_b.iter().map(|&bc| &self.mul[a * n + bc as usize])) {
                        return false;
                    }
                }
            }
            true
        } else {
            let mut state: u64 = 0x9E37_79B9_7F4A_7C15;
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % n as u64) as usize
            };
            (0..200_000).all(|_| {
                let (a, b, c) = (next(), next(), next());
                assoc(a, b, c)
            })
        }
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.order)
    }

    pub fn set_of<I: IntoIterator<Item = usize>>(&self, items: I) -> ElementSet {
        ElementSet::from_indices(self.order, items)
    }

    /// `AB = {ab : a in A, b in B}`, as a union of translated rows.
    pub fn product_set(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let mut out = self.empty_set();
        let bs: Vec<usize> = b.iter().collect();
        for x in a {
            let row = self.row(x);
            for &y in &bs {
                out.insert(row[y] as usize);
            }
        }
        out
    }

    /// `gA`.
    pub fn left_translate(&self, g: usize, a: &ElementSet) -> ElementSet {
        let row = self.row(g);
        ElementSet::from_indices(self.order, a.iter().map(|x| row[x] as usize))
    }

    /// `Ag`.
    pub fn right_translate(&self, a: &ElementSet, g: usize) -> ElementSet {
        ElementSet::from_indices(self.order, a.iter().map(|x| self.mul(x, g)))
    }

    pub fn inverse_set(&self, a: &ElementSet) -> ElementSet {
        ElementSet::from_indices(self.order, a.iter().map(|x| self.inv(x)))
    }

    /// `gAg^-1`.
    pub fn conjugate_set(&self, a: &ElementSet, g: usize) -> ElementSet {
        ElementSet::from_indices(self.order, a.iter().map(|x| self.conjugate(x, g)))
    }

    /// `A^k` for `k >= 1`.
    pub fn set_power(&self, a: &ElementSet, k: usize) -> ElementSet {
        assert!(k >= 1);
        let mut acc = a.clone();
        for _ in 1..k {
            acc = self.product_set(&acc, a);
        }
        acc
    }

    /// Formats a set by element names.
    pub fn format_set(&self, a: &ElementSet) -> String {
        let parts: Vec<&str> = a.iter().map(|x| self.name(x)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

/// The Cayley table of the group generated by `gens`, with the default cap.
pub fn build_group(gens: &[Permutation]) -> Result<GroupTable> {
    build_group_with_cap(gens, DEFAULT_CLOSURE_CAP)
}

pub fn build_group_with_cap(gens: &[Permutation], cap: usize) -> Result<GroupTable> {
    let degree = match gens.first() {
        Some(g) => g.degree(),
        None => return Ok(GroupTable::trivial()),
    };
    if gens.iter().any(|g| g.degree() != degree) {
        return Err(Error::InvalidPermutation(
            "generators have different degrees".into(),
        ));
    }
    let (g, _) = GroupTable::from_generators(
        gens,
        Permutation::identity(degree),
        |a, b| a.then(b),
        |p| p.to_string(),
        cap,
    )?;
    Ok(g)
}

/// Componentwise product `G1 x G2`.
pub fn direct_product(g1: &GroupTable, g2: &GroupTable) -> GroupTable {
    direct_product_with_cap(g1, g2, DEFAULT_CLOSURE_CAP).expect("direct product within cap")
}

pub fn direct_product_with_cap(
    g1: &GroupTable,
    g2: &GroupTable,
    cap: usize,
) -> Result<GroupTable> {
    let gens: Vec<(usize, usize)> = g1
        .generators()
        .iter()
        .map(|&a| (a, 0))
        .chain(g2.generators().iter().map(|&b| (0, b)))
        .collect();
    let (g, _) = GroupTable::from_generators(
        &gens,
        (0, 0),
        |x, y| (g1.mul(x.0, y.0), g2.mul(x.1, y.1)),
        |x| format!("({},{})", g1.name(x.0), g2.name(x.1)),
        cap,
    )?;
    Ok(g)
}

/// Coordinates of each element of `direct_product(g1, g2)` in the factors.
pub fn direct_product_coords(g1: &GroupTable, g2: &GroupTable) -> Vec<(usize, usize)> {
    let gens: Vec<(usize, usize)> = g1
        .generators()
        .iter()
        .map(|&a| (a, 0))
        .chain(g2.generators().iter().map(|&b| (0, b)))
        .collect();
    GroupTable::from_generators(
        &gens,
        (0, 0),
        |x, y| (g1.mul(x.0, y.0), g2.mul(x.1, y.1)),
        |_| String::new(),
        usize::MAX,
    )
    .expect("uncapped")
    .1
}

/// A group homomorphism stored as its value on every domain element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    map: Vec<u32>,
    codomain_order: usize,
}

impl Homomorphism {
    pub fn new(map: Vec<usize>, codomain_order: usize) -> Self {
        Homomorphism {
            map: map.into_iter().map(|x| x as u32).collect(),
            codomain_order,
        }
    }

    pub fn identity(order: usize) -> Self {
        Homomorphism::new((0..order).collect(), order)
    }

    pub fn domain_order(&self) -> usize {
        self.map.len()
    }

    pub fn codomain_order(&self) -> usize {
        self.codomain_order
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x] as usize
    }

    pub fn image(&self, a: &ElementSet) -> ElementSet {
        ElementSet::from_indices(self.codomain_order, a.iter().map(|x| self.apply(x)))
    }

    pub fn preimage(&self, b: &ElementSet) -> ElementSet {
        ElementSet::from_indices(
            self.map.len(),
            (0..self.map.len()).filter(|&x| b.contains(self.apply(x))),
        )
    }

    pub fn kernel(&self) -> ElementSet {
        self.preimage(&ElementSet::singleton(self.codomain_order, 0))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Homomorphism) -> Homomorphism {
        assert_eq!(self.codomain_order, other.domain_order());
        Homomorphism {
            map: self.map.iter().map(|&x| other.map[x as usize]).collect(),
            codomain_order: other.codomain_order,
        }
    }

    pub fn is_surjective(&self) -> bool {
        self.image(&ElementSet::full(self.map.len())).is_full()
    }

    /// Checks `f(ab) = f(a)f(b)` on all pairs.
    pub fn is_homomorphism(&self, domain: &GroupTable, codomain: &GroupTable) -> bool {
        if domain.order() != self.map.len() || codomain.order() != self.codomain_order {
            return false;
        }
        if self.apply(0) != 0 {
            return false;
        }
        (0..domain.order()).all(|a| {
            (0..domain.order())
                .all(|b| self.apply(domain.mul(a, b)) == codomain.mul(self.apply(a), self.apply(b)))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn cyclic_from_three_cycle() {
        let g = build_group(&[perm("(0 1 2)", 3)]).unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.check_axioms());
        assert_eq!(g.name(0), "()");
    }

    #[test]
    fn sym3_from_standard_generators() {
        let g = build_group(&[perm("(0 1)", 3), perm("(0 1 2)", 3)]).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.check_axioms());
        assert!(!g.is_abelian());
        // shortlex: e, (0 1), (0 1 2), ...
        assert_eq!(g.name(1), "(0 1)");
        assert_eq!(g.name(2), "(0 1 2)");
    }

    #[test]
    fn quaternion_on_eight_points() {
        // left regular representation of Q8 = <i, j>
        let i = perm("(0 2 1 3)(4 6 5 7)", 8);
        let j = perm("(0 4 1 5)(2 7 3 6)", 8);
        let g = build_group(&[i, j]).unwrap();
        assert_eq!(g.order(), 8);
        let involutions = (0..8).filter(|&x| g.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn closure_cap_and_degree_checks() {
        let gens = [perm("(0 1)", 5), perm("(0 1 2 3 4)", 5)];
        assert_eq!(
            build_group_with_cap(&gens, 100),
            Err(Error::ClosureOverflow { cap: 100 })
        );
        assert!(build_group(&[perm("(0 1)", 2), perm("(0 1 2)", 3)]).is_err());
    }

    #[test]
    fn identity_has_order_one_and_products_are_cyclic() {
        let c2 = build_group(&[perm("(0 1)", 2)]).unwrap();
        let c3 = build_group(&[perm("(0 1 2)", 3)]).unwrap();
        assert_eq!(c2.element_order(0), 1);
        let c6 = direct_product(&c2, &c3);
        assert_eq!(c6.order(), 6);
        assert!(c6.is_cyclic());
        assert!(c6.check_axioms());
    }

    #[test]
    fn product_set_of_two_transpositions() {
        let g = build_group(&[perm("(0 1)", 3), perm("(0 1 2)", 3)]).unwrap();
        let t01 = g.index_of_name("(0 1)").unwrap();
        let t02 = g.index_of_name("(0 2)").unwrap();
        let a = g.set_of([t01, t02]);
        let sq = g.product_set(&a, &a);
        assert_eq!(sq.count(), 3);
        assert!(sq.iter().all(|x| g.element_order(x) != 2));
    }
}
