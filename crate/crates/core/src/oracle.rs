//! Brute-force ground truth: exhaustive subset searches and predicate sweeps.
//!
//! Subsets are enumerated in colex order of their bit patterns. Searches are
//! budgeted in candidate evaluations, never wall time.

use crate::constructions::freiman_structure;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::growth::{kneser_holds, ruzsa_zero_double, ruzsa_zero_left, small_product_structure};
use crate::set::ElementSet;
use crate::subgroup::{enumerate_subgroups, is_subgroup, SubgroupLattice};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

/// Default budget: `10^9` candidate evaluations.
pub const DEFAULT_BUDGET: u128 = 1_000_000_000;

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn check_budget(needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(())
}

/// Calls `f` on each `k`-subset of `{0..n}` in colex order until it returns
/// `false`.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&ElementSet) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&ElementSet::from_indices(n, idx.iter().copied())) {
            return;
        }
        // colex successor
        let mut i = 0;
        while i < k && !(i + 1 == k || idx[i] + 1 < idx[i + 1]) {
            idx[i] = i;
            i += 1;
        }
        if i == k {
            return;
        }
        if idx[i] + 1 >= n {
            return;
        }
        idx[i] += 1;
    }
}

/// As [`for_each_subset`] restricted to subsets containing the identity.
pub fn for_each_subset_containing_identity(n: usize, k: usize, mut f: impl FnMut(&ElementSet) -> bool) {
    if k == 0 || n == 0 {
        return;
    }
    for_each_subset(n - 1, k - 1, |s| {
        f(&ElementSet::from_indices(n, std::iter::once(0).chain(s.iter().map(|x| x + 1))))
    });
}

/// `u64` masks over a group of order at most 64.
struct Masks<'g> {
    g: &'g GroupTable,
    n: usize,
}

impl<'g> Masks<'g> {
    fn new(g: &'g GroupTable) -> Option<Self> {
        (g.order() <= 64).then_some(Masks { g, n: g.order() })
    }

    /// `Ax` for every `x`.
    fn right_translates(&self, a: u64) -> Vec<u64> {
        (0..self.n)
            .map(|x| bits(a).fold(0u64, |m, y| m | 1 << self.g.mul(y, x)))
            .collect()
    }

    fn product(&self, a: u64, b: u64) -> u64 {
        let mut out = 0u64;
        for x in bits(a) {
            let row = self.g.row(x);
            for y in bits(b) {
                out |= 1 << row[y];
            }
        }
        out
    }

    fn left_translate(&self, g: usize, a: u64) -> u64 {
        let row = self.g.row(g);
        bits(a).fold(0u64, |m, y| m | 1 << row[y])
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            !0
        } else {
            (1u64 << self.n) - 1
        }
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

/// Colex-ordered `k`-subsets of the low `n` bits (Gosper's hack).
fn masks_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit: u128 = 1u128 << n;
    let mut cur: u128 = if k == 0 { 0 } else { (1u128 << k) - 1 };
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur as u64;
        if cur == 0 {
            done = true;
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            cur = (((r ^ cur) >> 2) / c) | r;
            if cur >= limit {
                done = true;
            }
        }
        Some(out)
    })
}

/// `k`-subsets containing bit 0.
fn masks_with_identity(n: usize, k: usize) -> impl Iterator<Item = u64> {
    masks_of_size(n.saturating_sub(1), k.saturating_sub(1))
        .map(|m| m << 1 | 1)
        .take(if k == 0 || n == 0 { 0 } else { usize::MAX })
}

/// Minimum of `|AB|` with a witness pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinProduct {
    pub value: usize,
    pub a: ElementSet,
    pub b: ElementSet,
}

/// `μ_G(r, s)`: the minimum of `|AB|` over `|A| = r`, `|B| = s`.
///
/// `|gAB h| = |AB|` lets both sets contain the identity; `A` is further
/// reduced to the smallest of its translates `a^-1 A`. The inner search
/// over `B` is pruned by the best value found so far.
pub fn min_product_size(g: &GroupTable, r: usize, s: usize, budget: u128) -> Result<MinProduct> {
    let n = g.order();
    if r == 0 || s == 0 || r > n || s > n {
        return Err(Error::DomainError(format!("need 1 <= r, s <= {n}")));
    }
    let masks = Masks::new(g).ok_or_else(|| Error::DomainError("exhaustive search needs order <= 64".into()))?;
    check_budget(binomial(n - 1, r - 1) * binomial(n - 1, s - 1), budget)?;
    let floor = r.max(s);
    let mut best = (n + 1, 0u64, 0u64);
    for a in masks_with_identity(n, r) {
        // canonical under left translation
        if bits(a).any(|x| x != 0 && masks.left_translate(g.inv(x), a) < a) {
            continue;
        }
        let ab = masks.right_translates(a);
        let mut chosen = vec![0usize];
        search_b(&ab, a, 0, 1, s, n, &mut chosen, ab[0], &mut best);
        if best.0 == floor {
            break;
        }
    }
    let (value, a, b) = best;
    Ok(MinProduct {
        value,
        a: ElementSet::from_mask(n, a),
        b: ElementSet::from_mask(n, b),
    })
}

#[allow(clippy::too_many_arguments)]
fn search_b(
    ab: &[u64],
    a: u64,
    last: usize,
    size: usize,
    s: usize,
    n: usize,
    chosen: &mut Vec<usize>,
    acc: u64,
    best: &mut (usize, u64, u64),
) {
    let c = acc.count_ones() as usize;
    if c >= best.0 {
        return;
    }
    if size == s {
        let b = chosen.iter().fold(0u64, |m, &x| m | 1 << x);
        *best = (c, a, b);
        return;
    }
    let need = s - size;
    for x in last + 1..=n - need {
        chosen.push(x);
        search_b(ab, a, x, size + 1, s, n, chosen, acc | ab[x], best);
        chosen.pop();
    }
}

/// Every value of `|AB|` over `|A| = r`, `|B| = s` (both containing `e`).
pub fn attainable_product_sizes(g: &GroupTable, r: usize, s: usize, budget: u128) -> Result<Vec<usize>> {
    let n = g.order();
    let masks = Masks::new(g).ok_or_else(|| Error::DomainError("exhaustive search needs order <= 64".into()))?;
    check_budget(binomial(n - 1, r - 1) * binomial(n - 1, s - 1), budget)?;
    let mut seen = vec![false; n + 1];
    for a in masks_with_identity(n, r) {
        for b in masks_with_identity(n, s) {
            seen[masks.product(a, b).count_ones() as usize] = true;
        }
    }
    Ok((0..=n).filter(|&v| seen[v]).collect())
}

/// Every value of `|A²|` over `|A| = r`.
pub fn attainable_square_sizes(g: &GroupTable, r: usize, budget: u128) -> Result<Vec<usize>> {
    let n = g.order();
    let masks = Masks::new(g).ok_or_else(|| Error::DomainError("exhaustive search needs order <= 64".into()))?;
    check_budget(binomial(n, r), budget)?;
    let mut seen = vec![false; n + 1];
    for a in masks_of_size(n, r) {
        seen[masks.product(a, a).count_ones() as usize] = true;
    }
    Ok((0..=n).filter(|&v| seen[v]).collect())
}

/// Minimum of `|A²|` over `|A| = r`, with the first minimizer in colex order.
pub fn min_square_size(g: &GroupTable, r: usize, budget: u128) -> Result<(usize, ElementSet)> {
    let n = g.order();
    if r == 0 || r > n {
        return Err(Error::DomainError(format!("need 1 <= r <= {n}")));
    }
    let masks = Masks::new(g).ok_or_else(|| Error::DomainError("exhaustive search needs order <= 64".into()))?;
    check_budget(binomial(n, r), budget)?;
    let mut best = (n + 1, 0u64);
    for a in masks_of_size(n, r) {
        let c = masks.product(a, a).count_ones() as usize;
        if c < best.0 {
            best = (c, a);
        }
    }
    Ok((best.0, ElementSet::from_mask(n, best.1)))
}

/// Largest `|A|` with `A² != G`, with the first witness in colex order.
pub fn largest_nonbasis(g: &GroupTable, budget: u128) -> Result<(usize, ElementSet)> {
    let n = g.order();
    let masks = Masks::new(g).ok_or_else(|| Error::DomainError("exhaustive search needs order <= 64".into()))?;
    check_budget((0..=n).map(|k| binomial(n, k)).sum(), budget)?;
    let full = masks.full();
    for k in (0..=n).rev() {
        if let Some(a) = masks_of_size(n, k).find(|&a| masks.product(a, a) != full) {
            return Ok((k, ElementSet::from_mask(n, a)));
        }
    }
    unreachable!("the empty set is never a basis")
}

/// A set of size `k` with `A² = G`, if any.
pub fn find_basis(g: &GroupTable, k: usize, budget: u128) -> Result<Option<ElementSet>> {
    let n = g.order();
    let masks = Masks::new(g).ok_or_else(|| Error::DomainError("exhaustive search needs order <= 64".into()))?;
    check_budget(binomial(n, k), budget)?;
    let full = masks.full();
    Ok(masks_of_size(n, k)
        .find(|&a| masks.product(a, a) == full)
        .map(|a| ElementSet::from_mask(n, a)))
}

/// A set of size `k` with `|A²| = target`, if any.
pub fn find_set_with_square(g: &GroupTable, k: usize, target: usize, budget: u128) -> Result<Option<ElementSet>> {
    let n = g.order();
    check_budget(binomial(n, k), budget)?;
    if let Some(masks) = Masks::new(g) {
        return Ok(masks_of_size(n, k)
            .find(|&a| masks.product(a, a).count_ones() as usize == target)
            .map(|a| ElementSet::from_mask(n, a)));
    }
    let mut found = None;
    for_each_subset(n, k, |a| {
        if g.product_set(a, a).count() == target {
            found = Some(a.clone());
            false
        } else {
            true
        }
    });
    Ok(found)
}

/// Every product-free set of maximum size, by exhaustion (order <= 24).
pub fn max_product_free_bruteforce(g: &GroupTable, budget: u128) -> Result<(usize, Vec<ElementSet>)> {
    let n = g.order();
    let masks = Masks::new(g).ok_or_else(|| Error::DomainError("exhaustive search needs order <= 64".into()))?;
    check_budget(1u128 << n, budget)?;
    for k in (0..=n).rev() {
        let found: Vec<ElementSet> = masks_of_size(n, k)
            .filter(|&s| masks.product(s, s) & s == 0)
            .map(|s| ElementSet::from_mask(n, s))
            .collect();
        if !found.is_empty() {
            return Ok((k, found));
        }
    }
    unreachable!("the empty set is product-free")
}

/// Which subsets a sweep ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Domain {
    /// Every nonempty subset.
    Sets,
    /// Every nonempty subset of one size.
    SetsOfSize(usize),
    /// Every ordered pair of nonempty subsets.
    Pairs,
    /// Every ordered triple of nonempty subsets.
    Triples,
}

impl Domain {
    pub fn describe(&self) -> String {
        match self {
            Domain::Sets => "all nonempty subsets".into(),
            Domain::SetsOfSize(k) => format!("all size-{k} subsets"),
            Domain::Pairs => "all pairs of nonempty subsets".into(),
            Domain::Triples => "all triples of nonempty subsets".into(),
        }
    }

    fn arity(&self) -> usize {
        match self {
            Domain::Sets | Domain::SetsOfSize(_) => 1,
            Domain::Pairs => 2,
            Domain::Triples => 3,
        }
    }
}

/// Per-group data shared by predicate evaluations.
pub struct SweepContext<'g> {
    pub g: &'g GroupTable,
    lattice: OnceLock<Option<SubgroupLattice>>,
}

impl<'g> SweepContext<'g> {
    pub fn new(g: &'g GroupTable) -> Self {
        SweepContext {
            g,
            lattice: OnceLock::new(),
        }
    }

    /// The subgroup lattice; panics above the lattice cap.
    pub fn lattice(&self) -> &SubgroupLattice {
        self.lattice
            .get_or_init(|| enumerate_subgroups(self.g).ok())
            .as_ref()
            .expect("lattice within cap")
    }

    /// `A = aH` for some subgroup `H` in the lattice.
    fn is_left_coset_by_lattice(&self, a: &ElementSet) -> Option<usize> {
        let x = a.first()?;
        let c = a.count();
        self.lattice()
            .iter()
            .position(|h| h.order() == c && self.g.left_translate(x, h.members()) == *a)
    }

    /// `A = aH = Ha` for some subgroup `H` in the lattice.
    fn is_left_right_coset_by_lattice(&self, a: &ElementSet) -> bool {
        let Some(x) = a.first() else { return false };
        self.lattice().iter().any(|h| {
            h.order() == a.count()
                && self.g.left_translate(x, h.members()) == *a
                && self.g.right_translate(h.members(), x) == *a
        })
    }
}

type SingleFn = fn(&SweepContext, &ElementSet) -> bool;
type PairFn = fn(&SweepContext, &ElementSet, &ElementSet) -> bool;

enum Check {
    Single(SingleFn),
    Pair(PairFn),
    /// Triangle inequality for the left Ruzsa distance, from precomputed counts.
    RuzsaTriangle,
}

/// A registered predicate.
pub struct Predicate {
    pub id: &'static str,
    pub about: &'static str,
    check: Check,
    pub scope: Scope,
}

/// Groups a predicate is claimed for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Scope {
    All,
    Abelian,
    /// Every non-identity element has order 2.
    ElementaryAbelian2,
}

impl Scope {
    pub fn admits(&self, g: &GroupTable) -> bool {
        match self {
            Scope::All => true,
            Scope::Abelian => g.is_abelian(),
            Scope::ElementaryAbelian2 => (0..g.order()).all(|x| g.mul(x, x) == 0),
        }
    }

    pub fn describe(&self) -> &'static str {
        match self {
            Scope::All => "all",
            Scope::Abelian => "abelian",
            Scope::ElementaryAbelian2 => "elementary-abelian-2",
        }
    }
}

impl Predicate {
    pub fn default_domain(&self) -> Domain {
        match self.check {
            Check::Single(_) => Domain::Sets,
            Check::Pair(_) => Domain::Pairs,
            Check::RuzsaTriangle => Domain::Triples,
        }
    }
}

fn stabilization(c: &SweepContext, a: &ElementSet) -> bool {
    let g = c.g;
    let mut sizes = vec![a.count()];
    let mut cur = a.clone();
    for _ in 0..2 * g.order() {
        cur = g.product_set(&cur, a);
        sizes.push(cur.count());
    }
    match sizes.windows(2).position(|w| w[0] == w[1]) {
        Some(i) => sizes[i..].iter().all(|&s| s == sizes[i]),
        None => false,
    }
}

fn stable_iff_left_right_coset(c: &SweepContext, a: &ElementSet) -> bool {
    let g = c.g;
    let mut cur = a.clone();
    for _ in 0..2 * g.order() {
        let next = g.product_set(&cur, a);
        let stable = next.count() == cur.count();
        if stable != c.is_left_right_coset_by_lattice(&cur) {
            return false;
        }
        if stable {
            return true;
        }
        cur = next;
    }
    false
}

fn expansion_iff_no_proper_coset(c: &SweepContext, a: &ElementSet) -> bool {
    let g = c.g;
    let mut cur = a.clone();
    let mut fills = cur.is_full();
    for _ in 0..2 * g.order() {
        if fills {
            break;
        }
        cur = g.product_set(&cur, a);
        fills = cur.is_full();
    }
    let x = a.first().expect("nonempty");
    let inside_proper = c.lattice().iter().any(|h| {
        h.order() < g.order() && {
            let xh = g.left_translate(x, h.members());
            a.is_subset(&xh) && xh == g.right_translate(h.members(), x)
        }
    });
    let lib = crate::growth::expands_to_group(g, a);
    let lib_ok = match &lib.witness {
        Some(w) => {
            let xh = g.left_translate(w.g, w.h.members());
            a.is_subset(&xh) && xh == g.right_translate(w.h.members(), w.g) && w.h.order() < g.order()
        }
        None => lib.expands,
    };
    fills != inside_proper && lib.expands == fills && lib_ok
}

fn self_distance_zero_iff_left_coset(c: &SweepContext, a: &ElementSet) -> bool {
    let g = c.g;
    let zero = g.product_set(a, &g.inverse_set(a)).count() == a.count();
    let coset = c.is_left_coset_by_lattice(a).is_some();
    zero == coset && crate::growth::self_distance_zero(g, a).is_some() == coset
}

fn inverse_distance_zero_iff_left_right_coset(c: &SweepContext, a: &ElementSet) -> bool {
    let g = c.g;
    // |A (A^-1)^-1| = |A²|
    let zero = g.product_set(a, a).count() == a.count();
    let lr = c.is_left_right_coset_by_lattice(a);
    zero == lr && crate::growth::inverse_distance_zero(g, a).is_some() == lr
}

fn freiman(c: &SweepContext, a: &ElementSet) -> bool {
    let g = c.g;
    let small = 2 * g.product_set(a, a).count() < 3 * a.count();
    match freiman_structure(g, a) {
        Ok(Some(cert)) => small && cert.all_checks(),
        Ok(None) => !small,
        Err(_) => false,
    }
}

fn seven_quarters_sharpness(c: &SweepContext, a: &ElementSet) -> bool {
    let g = c.g;
    let sq = g.product_set(a, a);
    let (s, k) = (sq.count(), a.count());
    s >= 2 * k || is_subgroup(g, &sq) || 4 * s >= 7 * k
}

fn basis_above_half(c: &SweepContext, a: &ElementSet) -> bool {
    2 * a.count() <= c.g.order() || c.g.product_set(a, a).is_full()
}

fn product_free_at_most_half(c: &SweepContext, s: &ElementSet) -> bool {
    let g = c.g;
    !g.product_set(s, s).is_disjoint(s) || 2 * s.count() <= g.order()
}

fn product_free_half_iff_index_two_coset(c: &SweepContext, s: &ElementSet) -> bool {
    let g = c.g;
    let n = g.order();
    let pf = g.product_set(s, s).is_disjoint(s);
    let half = pf && 2 * s.count() == n;
    let coset = 2 * s.count() == n
        && c.lattice().iter().any(|h| 2 * h.order() == n && s.is_disjoint(h.members()) && s.count() == n - h.order());
    half == coset
}

fn small_product_iff_structure(c: &SweepContext, a: &ElementSet, b: &ElementSet) -> bool {
    let g = c.g;
    let small = g.product_set(a, b).count() == a.count();
    let b0 = b.first().expect("nonempty");
    let exists = c.lattice().iter().any(|h| {
        g.product_set(a, h.members()) == *a && b.is_subset(&g.right_translate(h.members(), b0))
    });
    let lib = small_product_structure(g, a, b);
    small == exists && lib.is_some() == small && lib.is_none_or(|sp| sp.holds(g, a, b))
}

fn zero_distance_iff_cosets(c: &SweepContext, a: &ElementSet, b: &ElementSet) -> bool {
    let g = c.g;
    let zero = {
        let x = g.product_set(a, &g.inverse_set(b)).count();
        x * x == a.count() * b.count()
    };
    let cosets = match c.is_left_coset_by_lattice(a) {
        Some(i) => {
            let h = c.lattice().get(i).members();
            let y = b.first().expect("nonempty");
            g.left_translate(y, h) == *b
        }
        None => false,
    };
    zero == cosets && ruzsa_zero_left(g, a, b).is_some() == zero
}

fn double_zero_iff_normalizing_cosets(c: &SweepContext, a: &ElementSet, b: &ElementSet) -> bool {
    let g = c.g;
    let counts = crate::growth::ruzsa_counts(g, a, b);
    let zero = counts.double_zero();
    let structure = match c.is_left_coset_by_lattice(a) {
        Some(i) => {
            let h = c.lattice().get(i).members();
            let (x, y) = (a.first().unwrap(), b.first().unwrap());
            let t = g.mul(g.inv(y), x);
            g.left_translate(y, h) == *b && g.conjugate_set(h, t) == *h
        }
        None => false,
    };
    zero == structure && ruzsa_zero_double(g, a, b).is_some() == zero
}

fn ruzsa_symmetry(c: &SweepContext, a: &ElementSet, b: &ElementSet) -> bool {
    let g = c.g;
    g.product_set(a, &g.inverse_set(b)).count() == g.product_set(b, &g.inverse_set(a)).count()
}

fn kneser(c: &SweepContext, a: &ElementSet, b: &ElementSet) -> bool {
    a.count() + b.count() > c.g.order() || kneser_holds(c.g, a, b)
}

fn half_self_distance(c: &SweepContext, a: &ElementSet, b: &ElementSet) -> bool {
    let g = c.g;
    let ab = g.product_set(a, &g.inverse_set(b)).count();
    let aa = g.product_set(a, &g.inverse_set(a)).count();
    ab * ab >= aa * b.count()
}

fn always_false(_: &SweepContext, _: &ElementSet) -> bool {
    false
}

/// Every registered predicate.
pub fn predicates() -> Vec<Predicate> {
    use Check::*;
    let p = |id, about, check, scope| Predicate {
        id,
        about,
        check,
        scope,
    };
    vec![
        p("power-stabilization", "once |A^n| = |A^(n+1)| all later powers have that size", Single(stabilization), Scope::All),
        p("stable-iff-left-right-coset", "|A^n| = |A^(n+1)| iff A^n is a left right coset", Single(stable_iff_left_right_coset), Scope::All),
        p("expansion-iff-no-proper-coset", "no power of A is G iff A lies in a proper left right coset", Single(expansion_iff_no_proper_coset), Scope::All),
        p("self-distance-zero-iff-left-coset", "d(A,A) = 0 iff A is a left coset", Single(self_distance_zero_iff_left_coset), Scope::All),
        p("inverse-distance-zero-iff-left-right-coset", "d(A,A^-1) = 0 iff A is a left right coset", Single(inverse_distance_zero_iff_left_right_coset), Scope::All),
        p("freiman-three-halves", "|A²| < 3/2 |A| iff the coset certificate exists", Single(freiman), Scope::All),
        p("seven-quarters-sharpness", "in (C2)^n, |A²| < 2|A| forces A² subgroup or |A²| >= 7/4 |A|", Single(seven_quarters_sharpness), Scope::ElementaryAbelian2),
        p("basis-above-half", "|A| > |G|/2 forces A² = G", Single(basis_above_half), Scope::All),
        p("product-free-at-most-half", "product-free sets have at most |G|/2 elements", Single(product_free_at_most_half), Scope::All),
        p("product-free-half-iff-index-two-coset", "product-free of size |G|/2 iff the nontrivial coset of an index-2 subgroup", Single(product_free_half_iff_index_two_coset), Scope::All),
        p("small-product-iff-structure", "|AB| = |A| iff A is a union of left H-cosets and B lies in a right H-coset", Pair(small_product_iff_structure), Scope::All),
        p("zero-distance-iff-cosets", "d(A,B) = 0 iff A, B are left cosets of one subgroup", Pair(zero_distance_iff_cosets), Scope::All),
        p("double-zero-iff-normalizing-cosets", "dd(A,B) = 0 iff A = gH, B = γH with γ^-1 g normalizing H", Pair(double_zero_iff_normalizing_cosets), Scope::All),
        p("ruzsa-symmetry", "|AB^-1| = |BA^-1|", Pair(ruzsa_symmetry), Scope::All),
        p("kneser", "|AB| >= |AH| + |BH| - |H| for H the stabilizer of AB", Pair(kneser), Scope::Abelian),
        p("half-self-distance", "d(A,B) >= d(A,A)/2 (conjecture flag)", Pair(half_self_distance), Scope::All),
        p("ruzsa-triangle", "d(A,B) <= d(A,C) + d(C,B)", RuzsaTriangle, Scope::All),
        p("always-false", "calibration: fails on every input", Single(always_false), Scope::All),
    ]
}

pub fn predicate(id: &str) -> Result<Predicate> {
    predicates()
        .into_iter()
        .find(|p| p.id == id)
        .ok_or_else(|| Error::UnknownName(id.to_string()))
}

/// Result of an exhaustive predicate sweep.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepReport {
    pub group: String,
    pub predicate: String,
    pub domain: String,
    pub evaluated: u128,
    /// Each counterexample is the tuple of sets, as ascending index lists.
    pub counterexamples: Vec<Vec<Vec<usize>>>,
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn tsv_header() -> &'static str {
        "group\tpredicate\tdomain\tevaluated\tcounterexamples\tstatus"
    }

    pub fn tsv_row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.group,
            self.predicate,
            self.domain,
            self.evaluated,
            self.counterexamples.len(),
            if self.passed() { "pass" } else { "FAIL" }
        )
    }
}

/// Sweep limits.
#[derive(Clone, Copy, Debug)]
pub struct SweepConfig {
    pub budget: u128,
    /// Stop after this many counterexamples.
    pub max_counterexamples: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            budget: DEFAULT_BUDGET,
            max_counterexamples: 16,
        }
    }
}

/// Evaluates a predicate on every tuple of the domain.
///
/// The outer loop runs in parallel chunks and results are merged in
/// enumeration order, so reports are deterministic.
pub fn sweep(p: &Predicate, g: &GroupTable, name: &str, domain: Domain, cfg: SweepConfig) -> Result<SweepReport> {
    let n = g.order();
    if n > 63 {
        return Err(Error::DomainError("sweeps need order <= 63".into()));
    }
    if !p.scope.admits(g) {
        return Err(match p.scope {
            Scope::Abelian => Error::NotAbelian,
            _ => Error::DomainError(format!("`{}` only applies to elementary abelian 2-groups", p.id)),
        });
    }
    let start = Instant::now();
    let sets: Vec<u64> = match domain {
        Domain::SetsOfSize(k) => masks_of_size(n, k).filter(|&m| m != 0).collect(),
        _ => (1..1u64 << n).collect(),
    };
    let total = (sets.len() as u128).pow(domain.arity() as u32);
    check_budget(total, cfg.budget)?;
    let ctx = SweepContext::new(g);
    let to_set = |m: u64| ElementSet::from_mask(n, m);
    let cap = cfg.max_counterexamples;
    let mut found: Vec<Vec<Vec<usize>>> = Vec::new();
    let chunk = 256;
    match (&p.check, domain.arity()) {
        (Check::Single(f), 1) => {
            for block in sets.chunks(chunk * 16) {
                let bad: Vec<Vec<Vec<usize>>> = block
                    .par_iter()
                    .filter(|&&m| !f(&ctx, &to_set(m)))
                    .map(|&m| vec![to_set(m).to_vec()])
                    .collect();
                found.extend(bad);
                if found.len() >= cap {
                    break;
                }
            }
        }
        (Check::Pair(f), 2) => {
            // warm the lattice before going parallel
            if n <= 400 {
                let _ = ctx.lattice.get_or_init(|| enumerate_subgroups(g).ok());
            }
            for block in sets.chunks(chunk) {
                let bad: Vec<Vec<Vec<usize>>> = block
                    .par_iter()
                    .flat_map_iter(|&a| {
                        let sa = to_set(a);
                        sets.iter()
                            .filter(|&&b| !f(&ctx, &sa, &to_set(b)))
                            .take(cap)
                            .map(|&b| vec![sa.to_vec(), to_set(b).to_vec()])
                            .collect::<Vec<_>>()
                    })
                    .collect();
                found.extend(bad);
                if found.len() >= cap {
                    break;
                }
            }
        }
        (Check::RuzsaTriangle, 3) => {
            let masks = Masks::new(g).expect("order checked");
            let inv = |m: u64| bits(m).fold(0u64, |acc, x| acc | 1 << g.inv(x));
            let m = sets.len();
            let invs: Vec<u64> = sets.iter().map(|&s| inv(s)).collect();
            // d[i][j] = |S_i S_j^-1|
            let d: Vec<u32> = (0..m)
                .into_par_iter()
                .flat_map_iter(|i| (0..m).map(|j| masks.product(sets[i], invs[j]).count_ones()).collect::<Vec<_>>())
                .collect();
            let size: Vec<u64> = sets.iter().map(|s| u64::from(s.count_ones())).collect();
            for block in (0..m).collect::<Vec<_>>().chunks(chunk) {
                let bad: Vec<Vec<Vec<usize>>> = block
                    .par_iter()
                    .flat_map_iter(|&i| {
                        let mut out = Vec::new();
                        for j in 0..m {
                            let ab = u64::from(d[i * m + j]);
                            for k in 0..m {
                                // |AB^-1||C| <= |AC^-1||CB^-1|
                                if ab * size[k] > u64::from(d[i * m + k]) * u64::from(d[k * m + j]) {
                                    out.push(vec![
                                        to_set(sets[i]).to_vec(),
                                        to_set(sets[j]).to_vec(),
                                        to_set(sets[k]).to_vec(),
                                    ]);
                                    if out.len() >= cap {
                                        return out.into_iter();
                                    }
                                }
                            }
                        }
                        out.into_iter()
                    })
                    .collect();
                found.extend(bad);
                if found.len() >= cap {
                    break;
                }
            }
        }
        _ => {
            return Err(Error::InvalidArgument(format!(
                "predicate `{}` does not take {}",
                p.id,
                domain.describe()
            )))
        }
    }
    found.truncate(cap);
    Ok(SweepReport {
        group: name.to_string(),
        predicate: p.id.to_string(),
        domain: domain.describe(),
        evaluated: total,
        counterexamples: found,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{alternating, by_name, cyclic, symmetric};

    #[test]
    fn colex_enumeration() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, |s| {
            seen.push(s.to_vec());
            true
        });
        assert_eq!(
            seen,
            vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]
        );
        let masks: Vec<u64> = masks_of_size(4, 2).collect();
        assert_eq!(masks, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(masks_of_size(5, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(masks_with_identity(4, 2).collect::<Vec<_>>(), vec![0b0011, 0b0101, 0b1001]);
        assert_eq!(binomial(12, 6), 924);
    }

    #[test]
    fn min_products() {
        let c6 = cyclic(6);
        let m = min_product_size(&c6, 2, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(m.value, 2);
        assert_eq!(c6.product_set(&m.a, &m.b).count(), 2);
        let s3 = symmetric(3);
        assert_eq!(min_product_size(&s3, 6, 6, DEFAULT_BUDGET).unwrap().value, 6);
        assert!(matches!(
            min_product_size(&alternating(5), 30, 30, 10),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn squares() {
        let c7 = cyclic(7);
        assert_eq!(min_square_size(&c7, 3, DEFAULT_BUDGET).unwrap().0, 5);
        let c5 = cyclic(5);
        assert_eq!(min_square_size(&c5, 2, DEFAULT_BUDGET).unwrap().0, 3);
        assert_eq!(attainable_square_sizes(&c5, 2, DEFAULT_BUDGET).unwrap(), vec![3]);
        assert_eq!(attainable_product_sizes(&c5, 2, 2, DEFAULT_BUDGET).unwrap(), vec![3, 4]);
    }

    #[test]
    fn nonbases() {
        assert_eq!(largest_nonbasis(&cyclic(2), DEFAULT_BUDGET).unwrap().0, 1);
        assert_eq!(largest_nonbasis(&cyclic(7), DEFAULT_BUDGET).unwrap().0, 3);
        assert_eq!(largest_nonbasis(&symmetric(3), DEFAULT_BUDGET).unwrap().0, 3);
        assert!(find_basis(&cyclic(7), 3, DEFAULT_BUDGET).unwrap().is_none());
        assert!(find_basis(&by_name("C9").unwrap(), 4, DEFAULT_BUDGET).unwrap().is_some());
    }

    #[test]
    fn calibration_sweep() {
        let c2 = cyclic(2);
        let r = sweep(&predicate("always-false").unwrap(), &c2, "C2", Domain::Sets, SweepConfig::default()).unwrap();
        assert_eq!(r.counterexamples.len(), 3);
        assert!(!r.passed());
        let c12 = cyclic(12);
        let r = sweep(&predicate("power-stabilization").unwrap(), &c12, "C12", Domain::Sets, SweepConfig::default())
            .unwrap();
        assert!(r.passed());
        assert_eq!(r.evaluated, 4095);
        let d4 = by_name("D4").unwrap();
        let r = sweep(&predicate("zero-distance-iff-cosets").unwrap(), &d4, "D4", Domain::Pairs, SweepConfig::default())
            .unwrap();
        assert!(r.passed());
        assert!(predicate("no-such").is_err());
    }
}
