//! Product-free sets: checks, exact maximization, pullbacks along quotients.

use crate::error::{Error, Result};
use crate::group::{GroupTable, Homomorphism};
use crate::measure::{MeasurableSet, MeasureSpace};
use crate::set::ElementSet;
use crate::subgroup::{enumerate_subgroups, is_subgroup, Subgroup};
use crate::Rational;
use rayon::prelude::*;
use std::sync::Arc;

/// Largest order searched exhaustively.
pub const EXACT_LIMIT: usize = 32;
/// Node limit for the search above [`EXACT_LIMIT`].
pub const HEURISTIC_NODES: u64 = 2_000_000;

/// `S ∩ S² = ∅`.
pub fn is_product_free(g: &GroupTable, s: &ElementSet) -> bool {
    s.iter().all(|x| {
        let row = g.row(x);
        s.iter().all(|y| !s.contains(row[y] as usize))
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductFreeResult {
    pub set: ElementSet,
    pub size: usize,
    /// `size / |G|`.
    pub alpha: Rational,
    /// No larger product-free set exists.
    pub optimal: bool,
}

impl ProductFreeResult {
    fn new(g: &GroupTable, set: ElementSet, optimal: bool) -> Self {
        let size = set.count();
        ProductFreeResult {
            set,
            size,
            alpha: Rational::new(size as i64, g.order() as i64),
            optimal,
        }
    }
}

/// The nontrivial coset of the first index-2 subgroup, if any.
pub fn index_two_coset(g: &GroupTable) -> Option<ElementSet> {
    let n = g.order();
    if !n.is_multiple_of(2) {
        return None;
    }
    // index-2 subgroups contain every square
    let squares = g.set_of((0..n).map(|x| g.mul(x, x)));
    let sq = crate::subgroup::subgroup_closure(g, &squares);
    if sq.order() == n {
        return None;
    }
    // G/<squares> is elementary abelian; any maximal subgroup over it works
    let mut h = sq.members().clone();
    for x in 0..n {
        if h.contains(x) {
            continue;
        }
        let mut seed = h.clone();
        seed.insert(x);
        let bigger = crate::subgroup::subgroup_closure(g, &seed);
        if bigger.order() < n {
            h = bigger.into_members();
        }
    }
    debug_assert!(is_subgroup(g, &h) && 2 * h.count() == n);
    Some(h.complement())
}

struct Search<'g> {
    g: &'g GroupTable,
    inv: Vec<usize>,
    /// `roots[t] = {y : y² = t}`.
    roots: Vec<u64>,
    cap: usize,
}

impl<'g> Search<'g> {
    fn new(g: &'g GroupTable) -> Self {
        let n = g.order();
        let mut roots = vec![0u64; n];
        for y in 0..n {
            roots[g.mul(y, y)] |= 1 << y;
        }
        Search {
            g,
            inv: (0..n).map(|x| g.inv(x)).collect(),
            roots,
            cap: n / 2,
        }
    }

    /// Everything that can no longer join `S` once `x` has joined.
    fn forbidden_by(&self, s: u64, x: usize) -> u64 {
        let g = self.g;
        let xi = self.inv[x];
        let mut f = self.roots[x] | 1 << x;
        for t in bits(s) {
            let ti = self.inv[t];
            // y with y t, t y, x y or y x landing in S, or y in S²
            f |= 1 << g.mul(x, ti) | 1 << g.mul(t, xi) | 1 << g.mul(xi, t) | 1 << g.mul(ti, x);
            f |= 1 << g.mul(x, t) | 1 << g.mul(t, x);
        }
        f
    }

    /// DFS over ascending indices; returns the first set beating `best`
    /// found in this subtree, raising `best` as it goes.
    fn dfs(&self, s: u64, allowed: u64, best: &mut usize, nodes: &mut u64, limit: u64) -> Option<u64> {
        *nodes += 1;
        let size = s.count_ones() as usize;
        let mut found = None;
        if size > *best {
            *best = size;
            found = Some(s);
        }
        let mut rest = allowed;
        while rest != 0 && *nodes < limit {
            if size + rest.count_ones() as usize <= *best || *best >= self.cap {
                break;
            }
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let s2 = s | 1 << x;
            let next = rest & !self.forbidden_by(s2, x);
            if let Some(t) = self.dfs(s2, next, best, nodes, limit) {
                found = Some(t);
            }
            if *nodes >= limit {
                break;
            }
        }
        found
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            b
        })
    })
}

/// Conjugacy class representatives (smallest index of each class).
pub fn class_representatives(g: &GroupTable) -> Vec<usize> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        reps.push(x);
        for c in 0..n {
            seen[g.conjugate(x, c)] = true;
        }
    }
    reps
}

/// A maximum product-free set: exact for `|G| <= 32`, best found otherwise.
///
/// Branch and bound seeded with an index-2 coset when one exists. Every
/// nonempty product-free set has a conjugate containing a class
/// representative, so root branches range over representatives only.
pub fn max_product_free(g: &GroupTable) -> ProductFreeResult {
    let n = g.order();
    let seed = index_two_coset(g).unwrap_or_else(|| greedy_product_free(g));
    if n == 1 {
        return ProductFreeResult::new(g, seed, true);
    }
    if 2 * seed.count() == n {
        return ProductFreeResult::new(g, seed, true);
    }
    if n > 64 {
        return ProductFreeResult::new(g, seed, false);
    }
    let exact = n <= EXACT_LIMIT;
    let limit = if exact { u64::MAX } else { HEURISTIC_NODES };
    let search = Search::new(g);
    let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let reps: Vec<usize> = class_representatives(g).into_iter().filter(|&r| r != 0).collect();
    let results: Vec<(Option<u64>, bool)> = reps
        .par_iter()
        .map(|&r| {
            let s = 1u64 << r;
            let allowed = full & !1 & !search.forbidden_by(s, r);
            let (mut nodes, mut best) = (0u64, seed.count());
            let found = search.dfs(s, allowed, &mut best, &mut nodes, limit);
            (found, nodes < limit)
        })
        .collect();
    let complete = results.iter().all(|&(_, done)| done);
    let best = results
        .iter()
        .filter_map(|&(f, _)| f)
        .max_by(|a, b| a.count_ones().cmp(&b.count_ones()).then(b.cmp(a)));
    let set = match best {
        Some(m) if m.count_ones() as usize > seed.count() => ElementSet::from_mask(n, m),
        _ => seed,
    };
    debug_assert!(is_product_free(g, &set));
    ProductFreeResult::new(g, set, exact && complete)
}

/// Greedy product-free set by ascending index, skipping the identity.
pub fn greedy_product_free(g: &GroupTable) -> ElementSet {
    let mut s = g.empty_set();
    for x in 1..g.order() {
        s.insert(x);
        if !is_product_free(g, &s) {
            s.remove(x);
        }
    }
    s
}

/// Preimage of a product-free set of the codomain.
pub fn pullback_product_free(q: &Homomorphism, quotient: &GroupTable, s: &ElementSet) -> Result<ElementSet> {
    if !is_product_free(quotient, s) {
        return Err(Error::NotProductFree);
    }
    Ok(q.preimage(s))
}

/// A product-free set of a chart target, read as a measurable set.
pub fn pullback_measurable(chart: &Arc<crate::measure::Epimorphism>, s: &ElementSet) -> Result<MeasurableSet> {
    if !is_product_free(chart.target(), s) {
        return Err(Error::NotProductFree);
    }
    MeasurableSet::new(chart.clone(), s.clone())
}

/// `S` is the nontrivial coset of an index-2 subgroup of the chart target.
#[derive(Clone, Debug)]
pub struct HalfMeasureWitness {
    pub chart: String,
    /// The index-2 subgroup, in the chart target.
    pub subgroup: Subgroup,
    /// Smallest element of `S`.
    pub coset_rep: usize,
}

/// Checks `measure(S) <= 1/2` for a product-free measurable set and returns
/// the index-2 coset structure exactly when equality holds.
pub fn half_measure_classification(s: &MeasurableSet) -> Result<Option<HalfMeasureWitness>> {
    let g = s.chart().target();
    if !is_product_free(g, s.body()) {
        return Err(Error::NotProductFree);
    }
    let m = s.measure();
    let half = Rational::new(1, 2);
    if m > half {
        return Err(Error::MeasureExceedsHalf(crate::scalar::fmt_ratio(&m)));
    }
    if m < half {
        return Ok(None);
    }
    let rep = s.body().first().expect("measure 1/2");
    let subgroup = Subgroup::from_members(g, s.body().complement())
        .ok_or_else(|| Error::StructureViolation("product-free half set is not an index-2 coset".into()))?;
    Ok(Some(HalfMeasureWitness {
        chart: s.chart().name().to_string(),
        subgroup,
        coset_rep: rep,
    }))
}

/// Best alpha over the registered charts: a lower bound on the supremum for
/// the abstract group, together with the chart that attains it.
pub fn chart_alpha_lower_bound(space: &MeasureSpace) -> Option<(String, ProductFreeResult)> {
    space
        .charts()
        .iter()
        .map(|c| (c.name().to_string(), max_product_free(c.target())))
        .max_by(|a, b| a.1.alpha.cmp(&b.1.alpha).then(b.0.cmp(&a.0)))
}

/// Every index-2 subgroup (for classification checks).
pub fn index_two_subgroups(g: &GroupTable) -> Result<Vec<Subgroup>> {
    let lat = enumerate_subgroups(g)?;
    Ok(lat.iter().filter(|h| 2 * h.order() == g.order()).cloned().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{alternating, by_name, cyclic, symmetric};
    use crate::oracle::{max_product_free_bruteforce, DEFAULT_BUDGET};
    use crate::subgroup::quotient;

    #[test]
    fn checks() {
        let c4 = cyclic(4);
        assert!(is_product_free(&c4, &c4.empty_set()));
        assert!(is_product_free(&c4, &c4.set_of([1, 3])));
        assert!(!is_product_free(&c4, &c4.set_of([0, 1])));
    }

    #[test]
    fn maxima() {
        let r = max_product_free(&cyclic(2));
        assert_eq!((r.set.to_vec(), r.alpha, r.optimal), (vec![1], Rational::new(1, 2), true));
        let r = max_product_free(&cyclic(5));
        assert_eq!((r.size, r.alpha, r.optimal), (2, Rational::new(2, 5), true));
        // against exhaustion
        for name in ["C7", "C9", "A4", "C3xC3", "C11", "C13", "Dic3", "C15"] {
            let g = by_name(name).unwrap();
            let r = max_product_free(&g);
            let (k, _) = max_product_free_bruteforce(&g, DEFAULT_BUDGET).unwrap();
            assert_eq!(r.size, k, "{name}");
            assert!(r.optimal && is_product_free(&g, &r.set));
        }
    }

    #[test]
    fn pullbacks() {
        let s3 = symmetric(3);
        let lat = enumerate_subgroups(&s3).unwrap();
        let a3 = lat.iter().find(|h| h.order() == 3).unwrap();
        let (q, map) = quotient(&s3, a3).unwrap();
        let one = q.set_of([1]);
        let p = pullback_product_free(&map, &q, &one).unwrap();
        assert_eq!(p.count(), 3);
        assert!(p.iter().all(|x| s3.element_order(x) == 2));
        assert!(is_product_free(&s3, &p));
        assert_eq!(pullback_product_free(&map, &q, &q.set_of([0])), Err(Error::NotProductFree));
    }

    #[test]
    fn half_measure() {
        let space = MeasureSpace::new(crate::measure::FgGroup::integers());
        let c2 = space.register_cyclic("C2", 2).unwrap();
        let odd = pullback_measurable(&c2, &c2.target().set_of([1])).unwrap();
        assert_eq!(odd.measure(), Rational::new(1, 2));
        let w = half_measure_classification(&odd).unwrap().unwrap();
        assert_eq!(w.subgroup.members().to_vec(), vec![0]);
        let c5 = space.register_cyclic("C5", 5).unwrap();
        let s = pullback_measurable(&c5, &c5.target().set_of([2, 3])).unwrap();
        assert!(half_measure_classification(&s).unwrap().is_none());
        let (chart, best) = chart_alpha_lower_bound(&space).unwrap();
        assert_eq!((chart.as_str(), best.alpha), ("C2", Rational::new(1, 2)));

        let f2 = crate::measure::FgGroup::free2();
        let space = MeasureSpace::new(f2);
        let s3 = Arc::new(symmetric(3));
        let a = s3.index_of_name("(0 1)").unwrap();
        let b = s3.index_of_name("(1 2)").unwrap();
        let chart = space.register("S3", s3.clone(), vec![a, b]).unwrap();
        let transpositions = s3.set_of((0..6).filter(|&x| s3.element_order(x) == 2));
        let t = pullback_measurable(&chart, &transpositions).unwrap();
        let w = half_measure_classification(&t).unwrap().unwrap();
        assert_eq!(w.subgroup.order(), 3);
    }

    #[test]
    fn no_index_two() {
        assert!(index_two_coset(&alternating(4)).is_none());
        assert!(index_two_coset(&alternating(5)).is_none());
        let q8 = by_name("Q8").unwrap();
        let c = index_two_coset(&q8).unwrap();
        assert_eq!(c.count(), 4);
        assert!(is_product_free(&q8, &c));
    }
}
