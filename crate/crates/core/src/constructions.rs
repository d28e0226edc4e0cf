//! Explicit large non-bases, exact-doubling sets, Freiman certificates and
//! sets with small but non-coset squares.

use crate::catalog;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::scalar::Scalar;
use crate::set::ElementSet;
use crate::subgroup::{
    derived_subgroup, enumerate_subgroups, is_subgroup, quotient, subgroup_closure, sylow_subgroup, Subgroup,
};
use crate::Rational;

/// One element from each pair `{x, x^-1}` of non-identity elements (the
/// smaller index). For odd order `2k+1` this gives `|A| = k` with `e ∉ A²`.
pub fn half_set_odd(g: &GroupTable) -> Result<ElementSet> {
    let n = g.order();
    if n.is_multiple_of(2) {
        return Err(Error::EvenOrder(n));
    }
    Ok(g.set_of((1..n).filter(|&x| x < g.inv(x))))
}

/// Half-set of an even-order group with the element it avoids.
#[derive(Clone, Debug)]
pub struct HalfSetWitness {
    pub s: ElementSet,
    pub g: usize,
    /// Order of `g`.
    pub m: usize,
    /// `G \ S²`.
    pub missing: ElementSet,
}

impl HalfSetWitness {
    /// `|G| - |S²|`.
    pub fn missing_count(&self) -> usize {
        self.missing.count()
    }

    /// Re-checks every postcondition of [`half_set_even`].
    pub fn holds(&self, grp: &GroupTable) -> bool {
        let n = grp.order();
        let t = grp.left_translate(self.g, &self.s);
        let sq = grp.product_set(&self.s, &self.s);
        let odd_powers_missing = (1..self.m)
            .step_by(2)
            .all(|i| !sq.contains(grp.power(self.g, i)));
        2 * self.s.count() == n
            && grp.inverse_set(&self.s) == self.s
            && t == self.s.complement()
            && !sq.contains(self.g)
            && odd_powers_missing
            && self.missing == sq.complement()
            && 2 * self.missing.count() >= self.m
    }
}

fn two_adic(mut x: usize) -> u32 {
    let mut v = 0;
    while x.is_multiple_of(2) {
        x /= 2;
        v += 1;
    }
    v
}

/// A symmetric `S` with `|S| = |G|/2`, `gS = G \ S` and no odd power of `g`
/// in `S²`.
///
/// `g` maximizes the 2-adic valuation of its order (then smaller order, then
/// smaller index). Starting from the smallest unassigned `x`, the orbits of
/// `g^i x` under conjugation by `g` and inversion go to `S` for even `i` and
/// to `T = gS` for odd `i`.
pub fn half_set_even(grp: &GroupTable) -> Result<HalfSetWitness> {
    let n = grp.order();
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    let g = (0..n)
        .max_by(|&a, &b| {
            let (oa, ob) = (grp.element_order(a), grp.element_order(b));
            two_adic(oa)
                .cmp(&two_adic(ob))
                .then(ob.cmp(&oa))
                .then(b.cmp(&a))
        })
        .expect("nonempty group");
    let m = grp.element_order(g);
    let g_inv = grp.inv(g);
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut stack = Vec::new();
    while let Some(x) = side.iter().position(Option::is_none) {
        let mut y = x;
        for i in 0..m {
            let in_s = i % 2 == 0;
            // orbit of y under <conjugation by g> x <inversion>
            stack.push(y);
            while let Some(z) = stack.pop() {
                match side[z] {
                    Some(v) if v == in_s => continue,
                    Some(_) => return Err(Error::PartitionConflict(z)),
                    None => side[z] = Some(in_s),
                }
                stack.push(grp.inv(z));
                stack.push(grp.mul(grp.mul(g, z), g_inv));
            }
            y = grp.mul(g, y);
        }
    }
    let s = grp.set_of((0..n).filter(|&x| side[x] == Some(true)));
    let missing = grp.product_set(&s, &s).complement();
    let w = HalfSetWitness { s, g, m, missing };
    if !w.holds(grp) {
        return Err(Error::StructureViolation(
            "half-set postconditions failed".into(),
        ));
    }
    Ok(w)
}

/// How [`exact_doubling_odd_traced`] produced its set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DoublingRoute {
    Trivial,
    Cyclic,
    /// Recursion into a normal subgroup of this order, plus whole cosets.
    Lifted { normal_order: usize },
    /// As `Lifted` for a normal subgroup of order 3, 5 or 9, with one element
    /// moved from a coset to the inverse coset.
    Patched { normal_order: usize },
    /// Every structured attempt failed verification; found by search.
    OracleFallback,
}

#[derive(Clone, Debug)]
pub struct ExactDoubling {
    pub set: ElementSet,
    pub route: DoublingRoute,
}

/// `A` with `|A| = k` and `|A²| = 2k` in a group of order `2k+1`.
pub fn exact_doubling_odd(g: &GroupTable) -> Result<ElementSet> {
    exact_doubling_odd_traced(g).map(|d| d.set)
}

fn is_troublesome(h: &GroupTable) -> bool {
    matches!(h.order(), 3 | 5) || (h.order() == 9 && !h.is_cyclic())
}

fn has_exact_doubling(g: &GroupTable, a: &ElementSet) -> bool {
    let k = (g.order() - 1) / 2;
    a.count() == k && g.product_set(a, a).count() == 2 * k
}

pub fn exact_doubling_odd_traced(g: &GroupTable) -> Result<ExactDoubling> {
    let n = g.order();
    if n.is_multiple_of(2) {
        return Err(Error::EvenOrder(n));
    }
    if n == 1 {
        return Ok(ExactDoubling {
            set: g.empty_set(),
            route: DoublingRoute::Trivial,
        });
    }
    if is_troublesome(g) {
        let name = match n {
            3 => "C3",
            5 => "C5",
            _ => "C3xC3",
        };
        return Err(Error::ExceptionalGroup(name.into()));
    }
    let k = (n - 1) / 2;
    if let Some(c) = (0..n).find(|&x| g.element_order(x) == n) {
        let mut a = g.set_of([0]);
        for i in (1..=2 * k - 3).step_by(2) {
            a.insert(g.power(c, i));
        }
        return Ok(ExactDoubling {
            set: a,
            route: DoublingRoute::Cyclic,
        });
    }
    let lattice = enumerate_subgroups(g)?;
    let mut normals: Vec<&Subgroup> = lattice
        .normal_subgroups(g)
        .filter(|h| h.order() > 1 && h.order() < n)
        .collect();
    if normals.is_empty() {
        return Err(Error::NoNormalSeries(n));
    }
    normals.sort_by(|x, y| y.order().cmp(&x.order()).then(x.members().cmp_members(y.members())));
    for nsub in normals {
        let attempt = lift_through(g, nsub)?;
        if let Some(d) = attempt {
            if has_exact_doubling(g, &d.set) {
                return Ok(d);
            }
            log::warn!("doubling lift through a normal subgroup of order {} failed verification", nsub.order());
        }
    }
    log::warn!("exact doubling falls back to search in a group of order {n}");
    let set = crate::oracle::find_set_with_square(g, k, 2 * k, crate::oracle::DEFAULT_BUDGET)?
        .ok_or_else(|| Error::StructureViolation(format!("no exact-doubling set in a group of order {n}")))?;
    Ok(ExactDoubling {
        set,
        route: DoublingRoute::OracleFallback,
    })
}

/// One structured attempt through the normal subgroup `nsub`.
fn lift_through(g: &GroupTable, nsub: &Subgroup) -> Result<Option<ExactDoubling>> {
    let (ntab, embed) = nsub.to_group(g);
    let (q, hom) = quotient(g, nsub)?;
    let qn = q.order();
    let troublesome = is_troublesome(&ntab);
    let inner = if troublesome {
        half_set_odd(&ntab)?
    } else {
        match exact_doubling_odd(&ntab) {
            Ok(s) => s,
            Err(Error::ExceptionalGroup(_)) => return Ok(None),
            Err(e) => return Err(e),
        }
    };
    let s_in_g = g.set_of(inner.iter().map(|i| embed[i]));

    // Cosets forced into the chosen half of G/N, and the patch element.
    let mut forced: Vec<usize> = Vec::new();
    let mut patch: Option<usize> = None;
    if troublesome {
        let r = (ntab.order() - 1) / 2;
        if r >= 2 {
            let xq = 1;
            forced.push(xq);
            patch = Some(xq);
        } else if let Some(xq) = (1..qn).find(|&y| q.element_order(y) > 3) {
            forced.push(xq);
            forced.push(q.mul(xq, xq));
            patch = Some(xq);
        } else if qn > 5 {
            let xq = 1;
            let xi = q.inv(xq);
            let pair = (1..qn).find_map(|a| {
                let b = q.mul(q.inv(a), xq);
                let bad = |y: usize| y == 0 || y == xq || y == xi;
                (!bad(a) && !bad(b)).then_some((a, b))
            });
            let Some((a, b)) = pair else { return Ok(None) };
            forced.extend([xq, a, b]);
            patch = Some(xq);
        } else {
            return Ok(None);
        }
    }
    let mut chosen = vec![false; qn];
    for &c in &forced {
        if chosen[q.inv(c)] {
            return Ok(None);
        }
        chosen[c] = true;
    }
    for y in 1..qn {
        if !chosen[y] && !chosen[q.inv(y)] && y < q.inv(y) {
            chosen[y] = true;
        }
    }
    let mut a = s_in_g;
    for x in 0..g.order() {
        if chosen[hom.apply(x)] {
            a.insert(x);
        }
    }
    let route = match patch {
        Some(xq) => {
            let x = (0..g.order()).find(|&x| hom.apply(x) == xq).expect("surjective");
            a.remove(x);
            a.insert(g.inv(x));
            DoublingRoute::Patched {
                normal_order: nsub.order(),
            }
        }
        None => DoublingRoute::Lifted {
            normal_order: nsub.order(),
        },
    };
    Ok(Some(ExactDoubling { set: a, route }))
}

/// The data behind `|A²| < (3/2)|A|`.
#[derive(Clone, Debug)]
pub struct FreimanCertificate {
    pub a: ElementSet,
    pub h: Subgroup,
    pub g: usize,
    /// `A ⊆ gH` and `gH = Hg`.
    pub in_left_right_coset: bool,
    /// `3|A| > 2|H|`.
    pub dense: bool,
    /// `A² = g²H = Hg²`.
    pub square_is_coset: bool,
}

impl FreimanCertificate {
    pub fn all_checks(&self) -> bool {
        self.in_left_right_coset && self.dense && self.square_is_coset
    }
}

/// Certificate for `|A²| < (3/2)|A|`, or `None` when the square is larger.
///
/// `g` is the smallest element of `A` and `H = g^-2 A²`. Fails with
/// `StructureViolation` if the square is small but the structure is absent.
pub fn freiman_structure(grp: &GroupTable, a: &ElementSet) -> Result<Option<FreimanCertificate>> {
    let g = a
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty set".into()))?;
    let sq = grp.product_set(a, a);
    if 2 * sq.count() >= 3 * a.count() {
        return Ok(None);
    }
    let g2 = grp.mul(g, g);
    let hset = grp.left_translate(grp.inv(g2), &sq);
    let Some(h) = Subgroup::from_members(grp, hset) else {
        return Err(Error::StructureViolation(format!(
            "|A²| = {} < 3/2 |A| = 3/2 * {} but g^-2 A² is not a subgroup",
            sq.count(),
            a.count()
        )));
    };
    let gh = grp.left_translate(g, h.members());
    let cert = FreimanCertificate {
        in_left_right_coset: a.is_subset(&gh) && gh == grp.right_translate(h.members(), g),
        dense: 3 * a.count() > 2 * h.order(),
        square_is_coset: grp.right_translate(h.members(), g2) == sq,
        a: a.clone(),
        h,
        g,
    };
    if !cert.all_checks() {
        return Err(Error::StructureViolation(format!("Freiman checks failed for {}", grp.format_set(a))));
    }
    Ok(Some(cert))
}

/// True iff `S` is a left or right coset of some subgroup.
pub fn is_coset(g: &GroupTable, s: &ElementSet) -> bool {
    let Some(x) = s.first() else { return false };
    let xi = g.inv(x);
    is_subgroup(g, &g.left_translate(xi, s)) || is_subgroup(g, &g.right_translate(s, xi))
}

/// Coordinates of every element in the Frattini quotient `P/Φ(P)` of a
/// `p`-group, with respect to a greedily chosen basis.
#[derive(Clone, Debug)]
pub struct FrattiniCoords {
    pub p: usize,
    pub rank: usize,
    pub kernel: Subgroup,
    /// `coords[x][i]` is the `i`-th coordinate of `x`.
    pub coords: Vec<Vec<u8>>,
}

pub fn frattini_coords(g: &GroupTable, p: usize) -> Result<FrattiniCoords> {
    let n = g.order();
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    if m != 1 || n == 1 {
        return Err(Error::DomainError(format!("order {n} is not a power of {p}")));
    }
    let mut seed = derived_subgroup(g).into_members();
    for x in 0..n {
        seed.insert(g.power(x, p));
    }
    let kernel = subgroup_closure(g, &seed);
    let (q, hom) = quotient(g, &kernel)?;
    let mut basis: Vec<usize> = Vec::new();
    let mut span = q.set_of([0]);
    for y in 1..q.order() {
        if !span.contains(y) {
            basis.push(y);
            span = subgroup_closure(&q, &q.set_of(basis.iter().copied())).into_members();
        }
    }
    let d = basis.len();
    let mut qcoords = vec![Vec::new(); q.order()];
    let mut digits = vec![0u8; d];
    loop {
        let y = basis
            .iter()
            .zip(&digits)
            .fold(q.identity(), |acc, (&b, &e)| q.mul(acc, q.power(b, e as usize)));
        qcoords[y] = digits.clone();
        let mut i = 0;
        while i < d {
            digits[i] += 1;
            if (digits[i] as usize) < p {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        if i == d {
            break;
        }
    }
    let coords = (0..n).map(|x| qcoords[hom.apply(x)].clone()).collect();
    Ok(FrattiniCoords {
        p,
        rank: d,
        kernel,
        coords,
    })
}

/// `{v : v_d = 0}` with `(1,..,1,0)` replaced by `(0,..,0,1)`, as bit masks
/// (bit `i` is coordinate `i`).
fn hypercube_masks(d: usize) -> Vec<u32> {
    let top = 1u32 << (d - 1);
    let mut out: Vec<u32> = (0..top).filter(|&v| v != top - 1).collect();
    out.push(top);
    out
}

/// The hypercube set in `(C2)^d`: `|B| = 2^(d-1)`, `|B²| = 2^d - 1` once
/// `d >= 3`. At `d = 2` the square has 2 elements.
pub fn hypercube_set(d: usize) -> Result<(GroupTable, ElementSet)> {
    if d < 2 {
        return Err(Error::RankTooSmall(d));
    }
    let g = catalog::elementary_abelian(2, d);
    let set = g.set_of(hypercube_masks(d).into_iter().map(|v| {
        let name: String = (0..d).map(|i| if v >> i & 1 == 1 { '1' } else { '0' }).collect();
        g.index_of_name(&name).expect("coordinate name")
    }));
    Ok((g, set))
}

/// A hypercube set pulled back through `G -> (C2)^d`.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub set: ElementSet,
    pub rank: usize,
    pub kernel: Subgroup,
}

impl Pullback {
    /// `|A²| / |A|`, which is `2 - 2^(1-d)` once the rank is at least 3.
    pub fn ratio(&self, g: &GroupTable) -> Rational {
        let sq = g.product_set(&self.set, &self.set).count();
        Rational::new(sq as i64, self.set.count() as i64)
    }
}

/// Preimage of the hypercube set under the Frattini quotient of a 2-group.
pub fn pullback_2group(g: &GroupTable) -> Result<Pullback> {
    let fc = frattini_coords(g, 2)?;
    if fc.rank < 2 {
        return Err(Error::RankTooSmall(fc.rank));
    }
    let masks = hypercube_masks(fc.rank);
    let set = g.set_of((0..g.order()).filter(|&x| {
        let v = fc.coords[x]
            .iter()
            .enumerate()
            .fold(0u32, |acc, (i, &c)| acc | (u32::from(c) << i));
        masks.contains(&v)
    }));
    Ok(Pullback {
        set,
        rank: fc.rank,
        kernel: fc.kernel,
    })
}

/// First `size`-subset containing the identity (in colex order) whose square
/// has exactly `sq` elements.
fn first_with_square(g: &GroupTable, size: usize, sq: usize) -> Option<ElementSet> {
    let mut found = None;
    crate::oracle::for_each_subset_containing_identity(g.order(), size, |s| {
        if g.product_set(s, s).count() == sq {
            found = Some(s.clone());
            false
        } else {
            true
        }
    });
    found
}

/// `A` with `|A²| <= (7/4)|A|` whose square is not a coset.
pub fn seven_quarters_set(g: &GroupTable) -> Result<ElementSet> {
    let n = g.order();
    if let Some(x) = (0..n).find(|&x| g.element_order(x) >= 4) {
        return Ok(g.set_of([0, x]));
    }
    if n.is_multiple_of(9) {
        let p3 = sylow_subgroup(g, 3)?;
        let (h3, embed) = p3.to_group(g);
        let fc = frattini_coords(&h3, 3)?;
        if fc.rank >= 2 {
            let c33 = catalog::elementary_abelian(3, 2);
            let b = first_with_square(&c33, 4, 7).expect("C3xC3 has a 4-set with square of size 7");
            // c33 element names are coordinate strings
            let wanted: Vec<String> = b.iter().map(|i| c33.name(i).to_string()).collect();
            return Ok(g.set_of((0..h3.order()).filter_map(|x| {
                let name: String = fc.coords[x][..2].iter().map(|c| c.to_string()).collect();
                wanted.contains(&name).then_some(embed[x])
            })));
        }
    }
    if n.is_multiple_of(8) {
        let p2 = sylow_subgroup(g, 2)?;
        // exponent 2, so elementary abelian; take three independent involutions
        let mut basis: Vec<usize> = Vec::new();
        let mut span = g.set_of([0]);
        for x in p2.members().iter() {
            if basis.len() == 3 {
                break;
            }
            if !span.contains(x) {
                basis.push(x);
                span = subgroup_closure(g, &g.set_of(basis.iter().copied())).into_members();
            }
        }
        let [a, b, c] = [basis[0], basis[1], basis[2]];
        return Ok(g.set_of([0, a, b, c]));
    }
    if n == 6 || n == 12 {
        let half = n / 2;
        let sq = 5 * half / 3;
        return first_with_square(g, half, sq)
            .ok_or_else(|| Error::StructureViolation(format!("no half-set with square {sq} in order {n}")));
    }
    Err(Error::ExceptionalGroup(format!("group of order {n}")))
}

/// `n m r s / (m r s + n²)`, the lower bound `n / (1 + n²/(mrs))` on `|AB|`.
pub fn bnp_bound<T: Scalar>(n: u64, m: u64, r: u64, s: u64) -> Result<T> {
    if n == 0 || m == 0 || r == 0 || s == 0 {
        return Err(Error::DomainError("n, m, r, s must be positive".into()));
    }
    let mrs = m * r * s;
    Ok(T::ratio(n * mrs, mrs + n * n))
}

/// `m >= 2(λ+μ)/(λμ)`, the condition under which sets of densities `λ, μ`
/// must have `|AB| > |A| + |B|`.
pub fn small_sumsets_violation(m: u64, lambda: Rational, mu: Rational) -> Result<bool> {
    let zero = Rational::from(0);
    if lambda <= zero || mu <= zero || lambda + mu > Rational::new(1, 2) {
        return Err(Error::DomainError(format!(
            "need 0 < λ, μ and λ + μ <= 1/2, got λ = {lambda}, μ = {mu}"
        )));
    }
    Ok(Rational::from(m as i64) >= Rational::from(2) * (lambda + mu) / (lambda * mu))
}

/// Minimum degree of a nontrivial real representation of `Alt(n)`, for the
/// cases shipped with the library.
pub fn alt_min_real_degree(n: usize) -> Option<u64> {
    match n {
        5 => Some(3),
        6 => Some(5),
        n if n >= 7 => Some(n as u64 - 1),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{alternating, by_name, cyclic, dihedral, symmetric};

    #[test]
    fn odd_half_sets() {
        let c5 = cyclic(5);
        let a = half_set_odd(&c5).unwrap();
        assert_eq!(a.to_vec(), vec![1, 2]);
        assert_eq!(c5.product_set(&a, &a).to_vec(), vec![2, 3, 4]);
        assert_eq!(half_set_odd(&cyclic(3)).unwrap().to_vec(), vec![1]);
        let g = by_name("C7:C3").unwrap();
        let a = half_set_odd(&g).unwrap();
        assert_eq!(a.count(), 10);
        assert!(!g.product_set(&a, &a).contains(0));
        assert_eq!(half_set_odd(&cyclic(4)), Err(Error::EvenOrder(4)));
    }

    #[test]
    fn cyclic_exact_doubling() {
        assert_eq!(exact_doubling_odd(&cyclic(7)).unwrap().to_vec(), vec![0, 1, 3]);
        let c9 = cyclic(9);
        let a = exact_doubling_odd(&c9).unwrap();
        assert_eq!(a.to_vec(), vec![0, 1, 3, 5]);
        assert_eq!(c9.product_set(&a, &a).count(), 8);
        assert!(matches!(exact_doubling_odd(&cyclic(3)), Err(Error::ExceptionalGroup(_))));
        assert!(matches!(exact_doubling_odd(&cyclic(5)), Err(Error::ExceptionalGroup(_))));
        assert!(matches!(
            exact_doubling_odd(&by_name("C3xC3").unwrap()),
            Err(Error::ExceptionalGroup(_))
        ));
    }

    #[test]
    fn noncyclic_exact_doubling_routes() {
        for name in ["C7:C3", "Heis27", "C9:C3", "C3^3", "C5xC5"] {
            let g = by_name(name).unwrap();
            let d = exact_doubling_odd_traced(&g).unwrap();
            assert!(has_exact_doubling(&g, &d.set), "{name}");
            assert_ne!(d.route, DoublingRoute::OracleFallback, "{name}");
        }
    }

    #[test]
    fn sym3_half_set_matches_hand_run() {
        let s3 = symmetric(3);
        let w = half_set_even(&s3).unwrap();
        assert_eq!(s3.name(w.g), "(0 1)");
        let names: Vec<&str> = w.s.iter().map(|x| s3.name(x)).collect();
        assert_eq!(names, vec!["()", "(1 2)", "(0 2)"]);
        assert!(w.missing_count() >= 1);
    }

    #[test]
    fn even_half_sets() {
        let c2 = cyclic(2);
        let w = half_set_even(&c2).unwrap();
        assert_eq!((w.s.to_vec(), w.g), (vec![0], 1));
        let c4 = cyclic(4);
        let w = half_set_even(&c4).unwrap();
        assert_eq!(w.m, 4);
        assert!(w.missing_count() >= 2);
        let a4 = alternating(4);
        let w = half_set_even(&a4).unwrap();
        assert_eq!((w.s.count(), w.m), (6, 2));
        assert!(w.holds(&a4));
        assert_eq!(half_set_even(&cyclic(5)).unwrap_err(), Error::OddOrder(5));
    }

    #[test]
    fn freiman_examples() {
        let c4 = cyclic(4);
        let cert = freiman_structure(&c4, &c4.set_of([0, 1, 2])).unwrap().unwrap();
        assert_eq!(cert.h.order(), 4);
        let sub = c4.set_of([0, 2]);
        let cert = freiman_structure(&c4, &sub).unwrap().unwrap();
        assert_eq!((cert.g, cert.h.members().clone()), (0, sub));
        let c5 = cyclic(5);
        assert!(freiman_structure(&c5, &c5.set_of([0, 1])).unwrap().is_none());
    }

    #[test]
    fn seven_quarters_examples() {
        for (name, size, sq) in [("C3xC3", 4, 7), ("C2^3", 4, 7), ("S3", 3, 5), ("A4", 6, 10), ("C5", 2, 3)] {
            let g = by_name(name).unwrap();
            let a = seven_quarters_set(&g).unwrap();
            let a2 = g.product_set(&a, &a);
            assert_eq!((a.count(), a2.count()), (size, sq), "{name}");
            assert!(!is_coset(&g, &a2), "{name}");
        }
        for name in ["C1", "C2", "C3", "C2xC2"] {
            assert!(matches!(seven_quarters_set(&by_name(name).unwrap()), Err(Error::ExceptionalGroup(_))));
        }
    }

    #[test]
    fn hypercube_examples() {
        let (g, b) = hypercube_set(3).unwrap();
        let names: Vec<&str> = b.iter().map(|x| g.name(x)).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(sorted, vec!["000", "001", "010", "100"]);
        assert_eq!(g.product_set(&b, &b).count(), 7);
        let (g, b) = hypercube_set(2).unwrap();
        // in rank 2 every 2-set has a 2-element square
        assert_eq!((b.count(), g.product_set(&b, &b).count()), (2, 2));
        assert_eq!(hypercube_set(1).unwrap_err(), Error::RankTooSmall(1));
        let d4 = dihedral(4);
        let p = pullback_2group(&d4).unwrap();
        assert_eq!((p.rank, p.set.count(), d4.product_set(&p.set, &p.set).count()), (2, 4, 4));
        let c2c2c4 = by_name("C2xC2xC4").unwrap();
        let p = pullback_2group(&c2c2c4).unwrap();
        assert_eq!((p.rank, p.set.count(), c2c2c4.product_set(&p.set, &p.set).count()), (3, 8, 14));
        assert_eq!(pullback_2group(&cyclic(8)).unwrap_err(), Error::RankTooSmall(1));
    }

    #[test]
    fn bounds() {
        assert_eq!(bnp_bound::<Rational>(60, 3, 20, 20).unwrap(), Rational::from(15));
        let b: f64 = bnp_bound(60, 3, 20, 20).unwrap();
        assert_eq!(b, 15.0);
        // m = 1 gives nothing beyond |AB| >= r
        assert!(bnp_bound::<Rational>(12, 1, 6, 4).unwrap() <= Rational::from(6));
        let q = Rational::new(1, 4);
        assert!(small_sumsets_violation(16, q, q).unwrap());
        assert!(!small_sumsets_violation(15, q, q).unwrap());
        assert!(small_sumsets_violation(16, q, Rational::new(1, 3)).is_err());
        assert_eq!(alt_min_real_degree(9), Some(8));
    }
}
