//! Subgroups, the subgroup lattice, and the structural subgroups every other
//! module consumes (normalizers, cores, centres, quotients, Sylow subgroups).

use crate::error::{Error, Result};
use crate::group::{GroupTable, Homomorphism};
use crate::set::ElementSet;
use std::collections::HashMap;

/// Default cap on the group order for full lattice enumeration.
pub const DEFAULT_LATTICE_CAP: usize = 400;

/// A subgroup of some [`GroupTable`], stored by its members.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: ElementSet,
    generators: Vec<usize>,
}

impl Subgroup {
    /// Validates closure before wrapping.
    pub fn from_members(g: &GroupTable, members: ElementSet) -> Option<Self> {
        if is_subgroup(g, &members) {
            let generators = generating_set(g, &members);
            Some(Subgroup {
                members,
                generators,
            })
        } else {
            None
        }
    }

    pub fn trivial(g: &GroupTable) -> Self {
        Subgroup {
            members: ElementSet::singleton(g.order(), 0),
            generators: vec![],
        }
    }

    pub fn whole(g: &GroupTable) -> Self {
        Subgroup {
            members: g.full_set(),
            generators: g.generators().to_vec(),
        }
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn into_members(self) -> ElementSet {
        self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.members.count()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn index_in(&self, g: &GroupTable) -> usize {
        g.order() / self.order()
    }

    pub fn is_normal(&self, g: &GroupTable) -> bool {
        g.generators().iter().all(|&x| {
            self.generators
                .iter()
                .all(|&h| self.members.contains(g.conjugate(h, x)))
        })
    }

    pub fn intersection(&self, g: &GroupTable, other: &Subgroup) -> Subgroup {
        let members = self.members.intersection(&other.members);
        let generators = generating_set(g, &members);
        Subgroup {
            members,
            generators,
        }
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    /// The subgroup as a standalone group, with the embedding of its elements.
    ///
    /// Elements are listed in ascending parent index, so the identity stays at 0.
    pub fn to_group(&self, g: &GroupTable) -> (GroupTable, Vec<usize>) {
        let embed: Vec<usize> = self.members.iter().collect();
        let n = embed.len();
        let mut local = vec![usize::MAX; g.order()];
        for (i, &x) in embed.iter().enumerate() {
            local[x] = i;
        }
        let mut mul = vec![0u32; n * n];
        for (i, &a) in embed.iter().enumerate() {
            for (j, &b) in embed.iter().enumerate() {
                mul[i * n + j] = local[g.mul(a, b)] as u32;
            }
        }
        let names = embed.iter().map(|&x| g.name(x).to_string()).collect();
        let gens = self.generators.iter().map(|&x| local[x]).collect();
        (GroupTable::from_parts(n, mul, names, gens), embed)
    }
}

/// True iff `set` is nonempty and closed under multiplication.
pub fn is_subgroup(g: &GroupTable, set: &ElementSet) -> bool {
    if !set.contains(0) {
        return false;
    }
    let xs: Vec<usize> = set.iter().collect();
    xs.iter()
        .all(|&a| xs.iter().all(|&b| set.contains(g.mul(a, b))))
}

/// A small generating set, chosen greedily in index order.
pub fn generating_set(g: &GroupTable, members: &ElementSet) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = ElementSet::singleton(g.order(), 0);
    for x in members.iter() {
        if !span.contains(x) {
            gens.push(x);
            span = close(g, &span, &gens, x);
        }
    }
    gens
}

/// Grows the subgroup `base` (generated by `gens` minus `extra`) by `extra`.
fn close(g: &GroupTable, base: &ElementSet, gens: &[usize], extra: usize) -> ElementSet {
    let mut members = base.clone();
    let mut list: Vec<usize> = members.iter().collect();
    if members.insert(extra) {
        list.push(extra);
    }
    let mut all_gens: Vec<usize> = gens.to_vec();
    if !all_gens.contains(&extra) {
        all_gens.push(extra);
    }
    let mut i = 0;
    while i < list.len() {
        let x = list[i];
        for &s in &all_gens {
            let y = g.mul(x, s);
            if members.insert(y) {
                list.push(y);
            }
        }
        i += 1;
    }
    members
}

/// The smallest subgroup containing `seed`.
pub fn subgroup_closure(g: &GroupTable, seed: &ElementSet) -> Subgroup {
    let mut members = ElementSet::singleton(g.order(), 0);
    let mut gens = Vec::new();
    for x in seed.iter() {
        if !members.contains(x) {
            gens.push(x);
            members = close(g, &members, &gens, x);
        }
    }
    Subgroup {
        members,
        generators: gens,
    }
}

pub fn cyclic_subgroup(g: &GroupTable, x: usize) -> Subgroup {
    subgroup_closure(g, &ElementSet::singleton(g.order(), x))
}

/// All subgroups of a group, sorted by order and then by member list.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    subgroups: Vec<Subgroup>,
    lookup: HashMap<ElementSet, usize>,
}

impl SubgroupLattice {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn get(&self, id: usize) -> &Subgroup {
        &self.subgroups[id]
    }

    pub fn id_of(&self, members: &ElementSet) -> Option<usize> {
        self.lookup.get(members).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Subgroup> {
        self.subgroups.iter()
    }

    pub fn normal_subgroups<'a>(&'a self, g: &'a GroupTable) -> impl Iterator<Item = &'a Subgroup> {
        self.subgroups.iter().filter(move |h| h.is_normal(g))
    }
}

pub fn enumerate_subgroups(g: &GroupTable) -> Result<SubgroupLattice> {
    enumerate_subgroups_with_cap(g, DEFAULT_LATTICE_CAP)
}

/// Enumerates every subgroup: start from the cyclic subgroups, then keep
/// joining known subgroups with single elements until nothing new appears.
pub fn enumerate_subgroups_with_cap(g: &GroupTable, cap: usize) -> Result<SubgroupLattice> {
    let n = g.order();
    if n > cap {
        return Err(Error::LatticeOverflow { order: n, cap });
    }
    let mut lookup: HashMap<ElementSet, usize> = HashMap::new();
    let mut found: Vec<Subgroup> = Vec::new();
    // one representative generator per cyclic subgroup
    let mut cyclic_reps = Vec::new();
    for x in 0..n {
        let c = cyclic_subgroup(g, x);
        if !lookup.contains_key(&c.members) {
            lookup.insert(c.members.clone(), found.len());
            found.push(c);
            cyclic_reps.push(x);
        }
    }
    let mut next = 0;
    while next < found.len() {
        let h = found[next].clone();
        next += 1;
        for &x in &cyclic_reps {
            if h.members.contains(x) {
                continue;
            }
            let members = close(g, &h.members, &h.generators, x);
            if !lookup.contains_key(&members) {
                let mut generators = h.generators.clone();
                generators.push(x);
                lookup.insert(members.clone(), found.len());
                found.push(Subgroup {
                    members,
                    generators,
                });
            }
        }
    }
    found.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.members.cmp_members(&b.members))
    });
    let lookup = found
        .iter()
        .enumerate()
        .map(|(i, h)| (h.members.clone(), i))
        .collect();
    Ok(SubgroupLattice {
        subgroups: found,
        lookup,
    })
}

/// `{x : xHx^-1 = H}`.
pub fn normalizer(g: &GroupTable, h: &Subgroup) -> Subgroup {
    let members = g.set_of((0..g.order()).filter(|&x| {
        h.generators
            .iter()
            .all(|&y| h.members.contains(g.conjugate(y, x)))
    }));
    let generators = generating_set(g, &members);
    Subgroup {
        members,
        generators,
    }
}

/// Largest normal subgroup of `g` inside `h`: the intersection of all conjugates.
pub fn normal_core(g: &GroupTable, h: &Subgroup) -> Subgroup {
    let members = g.set_of(h.members.iter().filter(|&y| {
        (0..g.order()).all(|x| h.members.contains(g.conjugate(y, x)))
    }));
    let generators = generating_set(g, &members);
    Subgroup {
        members,
        generators,
    }
}

/// Smallest normal subgroup containing `seed`.
pub fn normal_closure(g: &GroupTable, seed: &ElementSet) -> Subgroup {
    let mut current = subgroup_closure(g, seed);
    loop {
        let mut grown = current.members.clone();
        for &y in &current.generators {
            for &x in g.generators() {
                grown.insert(g.conjugate(y, x));
                grown.insert(g.conjugate(y, g.inv(x)));
            }
        }
        if grown == current.members {
            return current;
        }
        current = subgroup_closure(g, &grown);
    }
}

pub fn centre(g: &GroupTable) -> Subgroup {
    let members = g.set_of(
        (0..g.order())
            .filter(|&x| g.generators().iter().all(|&s| g.mul(x, s) == g.mul(s, x))),
    );
    let generators = generating_set(g, &members);
    Subgroup {
        members,
        generators,
    }
}

/// Preimage of `Z(G/Z(G))`: elements whose commutators with every generator are central.
pub fn second_centre(g: &GroupTable) -> Subgroup {
    let z = centre(g);
    let members = g.set_of(
        (0..g.order()).filter(|&x| {
            g.generators()
                .iter()
                .all(|&s| z.members.contains(g.commutator(x, s)))
        }),
    );
    let generators = generating_set(g, &members);
    Subgroup {
        members,
        generators,
    }
}

/// `G'`, the normal closure of the commutators of the generators.
pub fn derived_subgroup(g: &GroupTable) -> Subgroup {
    let gens = g.generators();
    let seed = g.set_of(
        gens.iter()
            .flat_map(|&a| gens.iter().map(move |&b| (a, b)))
            .map(|(a, b)| g.commutator(a, b)),
    );
    normal_closure(g, &seed)
}

pub fn is_perfect(g: &GroupTable) -> bool {
    derived_subgroup(g).order() == g.order()
}

/// The quotient `G/N` with the canonical surjection.
///
/// Cosets are indexed in order of their smallest member, so `N` itself is 0.
pub fn quotient(g: &GroupTable, n: &Subgroup) -> Result<(GroupTable, Homomorphism)> {
    if !n.is_normal(g) {
        return Err(Error::NotNormal);
    }
    let order = g.order();
    let mut coset_of = vec![usize::MAX; order];
    let mut reps = Vec::new();
    let members: Vec<usize> = n.members.iter().collect();
    for x in 0..order {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for &m in &members {
            coset_of[g.mul(x, m)] = c;
        }
    }
    let q = reps.len();
    let mut mul = vec![0u32; q * q];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            mul[i * q + j] = coset_of[g.mul(a, b)] as u32;
        }
    }
    let names = reps.iter().map(|&r| format!("[{}]", g.name(r))).collect();
    let mut gens = Vec::new();
    for &s in g.generators() {
        let c = coset_of[s];
        if c != 0 && !gens.contains(&c) {
            gens.push(c);
        }
    }
    let table = GroupTable::from_parts(q, mul, names, gens);
    Ok((table, Homomorphism::new(coset_of, q)))
}

pub(crate) fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn is_power_of(mut x: usize, p: usize) -> bool {
    while x.is_multiple_of(p) {
        x /= p;
    }
    x == 1
}

/// A Sylow `p`-subgroup: start from the first element of order `p`, then
/// repeatedly adjoin the smallest-index normalizing element that keeps the
/// subgroup a `p`-group.
pub fn sylow_subgroup(g: &GroupTable, p: usize) -> Result<Subgroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let n = g.order();
    if !n.is_multiple_of(p) {
        return Err(Error::PNotDividing { p, order: n });
    }
    let mut target = 1;
    while n.is_multiple_of(target * p) {
        target *= p;
    }
    let first = (0..n)
        .find(|&x| g.element_order(x) == p)
        .expect("Cauchy: an element of order p exists");
    let mut current = cyclic_subgroup(g, first);
    while current.order() < target {
        let norm = normalizer(g, &current);
        let next = norm
            .members
            .iter()
            .filter(|&x| !current.contains(x))
            .find_map(|x| {
                let members = close(g, &current.members, &current.generators, x);
                is_power_of(members.count(), p).then(|| {
                    let mut generators = current.generators.clone();
                    generators.push(x);
                    Subgroup {
                        members,
                        generators,
                    }
                })
            })
            .expect("a p-subgroup that is not Sylow grows inside its normalizer");
        current = next;
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn sym3() -> GroupTable {
        catalog::symmetric(3)
    }

    #[test]
    fn closure_examples() {
        let g = sym3();
        assert!(subgroup_closure(&g, &g.set_of([0])).is_trivial());
        let t = g.index_of_name("(0 1)").unwrap();
        assert_eq!(subgroup_closure(&g, &g.set_of([t])).order(), 2);
        let t2 = g.index_of_name("(1 2)").unwrap();
        assert_eq!(subgroup_closure(&g, &g.set_of([t, t2])).order(), 6);
    }

    #[test]
    fn lattice_counts() {
        assert_eq!(enumerate_subgroups(&sym3()).unwrap().len(), 6);
        assert_eq!(enumerate_subgroups(&catalog::cyclic(7)).unwrap().len(), 2);
        let q8 = catalog::quaternion8();
        let lat = enumerate_subgroups(&q8).unwrap();
        assert_eq!(lat.len(), 6);
        assert!(lat.iter().all(|h| h.is_normal(&q8)));
        assert_eq!(enumerate_subgroups(&catalog::symmetric(4)).unwrap().len(), 30);
        let big = catalog::cyclic(401);
        assert!(matches!(
            enumerate_subgroups(&big),
            Err(Error::LatticeOverflow { .. })
        ));
    }

    #[test]
    fn lattice_is_sorted_and_lagrange_holds() {
        let g = catalog::symmetric(4);
        let lat = enumerate_subgroups(&g).unwrap();
        for w in lat.subgroups().windows(2) {
            assert!(w[0].order() <= w[1].order());
        }
        for h in lat.iter() {
            assert_eq!(g.order() % h.order(), 0);
            assert!(is_subgroup(&g, h.members()));
        }
    }

    #[test]
    fn normalizer_and_core() {
        let g = sym3();
        let t = g.index_of_name("(0 1)").unwrap();
        let h = cyclic_subgroup(&g, t);
        assert_eq!(normalizer(&g, &h), h);
        assert!(normal_core(&g, &h).is_trivial());
        let a3 = derived_subgroup(&g);
        assert_eq!(a3.order(), 3);
        assert_eq!(normal_core(&g, &a3).members(), a3.members());
        assert_eq!(normalizer(&g, &a3).order(), 6);
    }

    #[test]
    fn centres_and_derived() {
        let c6 = catalog::cyclic(6);
        assert_eq!(centre(&c6).order(), 6);
        assert_eq!(second_centre(&c6).order(), 6);
        let g = sym3();
        assert!(centre(&g).is_trivial());
        assert!(second_centre(&g).is_trivial());
        assert!(!is_perfect(&g));
        let q8 = catalog::quaternion8();
        assert_eq!(centre(&q8).order(), 2);
        assert_eq!(second_centre(&q8).order(), 8);
        assert!(is_perfect(&catalog::alternating(5)));
    }

    #[test]
    fn quotients() {
        let g = sym3();
        let (q, f) = quotient(&g, &Subgroup::whole(&g)).unwrap();
        assert_eq!(q.order(), 1);
        assert_eq!(f.codomain_order(), 1);
        let a3 = derived_subgroup(&g);
        let (q, f) = quotient(&g, &a3).unwrap();
        assert_eq!(q.order(), 2);
        assert!(f.is_homomorphism(&g, &q));
        let t = g.index_of_name("(0 1)").unwrap();
        assert_eq!(f.apply(t), 1);
        assert_eq!(
            quotient(&g, &cyclic_subgroup(&g, t)).unwrap_err(),
            Error::NotNormal
        );
        let e = catalog::elementary_abelian(2, 3);
        let all_ones = (0..8).find(|&x| e.name(x) == "111").unwrap();
        let (q, f) = quotient(&e, &cyclic_subgroup(&e, all_ones)).unwrap();
        assert_eq!(q.order(), 4);
        assert!(f.is_homomorphism(&e, &q));
        assert!(q.check_axioms());
    }

    #[test]
    fn sylow() {
        let g = sym3();
        let p3 = sylow_subgroup(&g, 3).unwrap();
        assert_eq!(p3, derived_subgroup(&g));
        assert_eq!(sylow_subgroup(&g, 2).unwrap().order(), 2);
        assert_eq!(
            sylow_subgroup(&g, 5),
            Err(Error::PNotDividing { p: 5, order: 6 })
        );
        assert_eq!(sylow_subgroup(&g, 4), Err(Error::NotPrime(4)));
        let s4 = catalog::symmetric(4);
        assert_eq!(sylow_subgroup(&s4, 2).unwrap().order(), 8);
        let a5 = catalog::alternating(5);
        assert_eq!(sylow_subgroup(&a5, 2).unwrap().order(), 4);
    }

    #[test]
    fn to_group_embeds() {
        let g = catalog::symmetric(4);
        let a4 = derived_subgroup(&g);
        let (t, embed) = a4.to_group(&g);
        assert_eq!(t.order(), 12);
        assert!(t.check_axioms());
        assert_eq!(embed[0], 0);
        assert_eq!(subgroup_closure(&t, &t.set_of(t.generators().iter().copied())).order(), 12);
    }
}
