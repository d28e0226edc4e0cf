//! Product sets, power sequences, left-right cosets and Ruzsa distances.

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::scalar::Scalar;
use crate::set::ElementSet;
use crate::subgroup::{enumerate_subgroups, is_subgroup, subgroup_closure, Subgroup};

/// `AB`.
pub fn product_set(g: &GroupTable, a: &ElementSet, b: &ElementSet) -> ElementSet {
    g.product_set(a, b)
}

/// A set `S = gH = Hg`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftRightCoset {
    pub g: usize,
    pub h: Subgroup,
}

/// Returns `(g, H)` with `S = gH = Hg`, `g` the smallest element of `S`.
pub fn is_left_right_coset(g: &GroupTable, s: &ElementSet) -> Option<LeftRightCoset> {
    let x = s.first()?;
    let xi = g.inv(x);
    let h = g.left_translate(xi, s);
    if !is_subgroup(g, &h) || g.right_translate(s, xi) != h {
        return None;
    }
    Some(LeftRightCoset {
        g: x,
        h: Subgroup::from_members(g, h).expect("checked subgroup"),
    })
}

/// `S = gH` for some subgroup `H`; returns `(g, H)` with `g` smallest.
pub fn as_left_coset(g: &GroupTable, s: &ElementSet) -> Option<(usize, Subgroup)> {
    let x = s.first()?;
    let h = g.left_translate(g.inv(x), s);
    Subgroup::from_members(g, h).map(|h| (x, h))
}

/// Sizes `|A^n|` up to the first repeat.
#[derive(Clone, Debug)]
pub struct GrowthTrace {
    pub base: ElementSet,
    /// `sizes[i] = |A^(i+1)|`.
    pub sizes: Vec<usize>,
    /// 1-based `n` with `|A^n| = |A^(n+1)|`.
    pub stabilization_index: Option<usize>,
    /// `A^n = gH = Hg` at the stabilization index.
    pub terminal_witness: Option<LeftRightCoset>,
    /// `A^n` at the stabilization index (or the last power computed).
    pub terminal: ElementSet,
}

/// Iterates `A, A^2, ...` until two consecutive sizes agree or `cap` powers
/// have been formed. `cap` defaults to `2|G|`.
pub fn power_trace(g: &GroupTable, a: &ElementSet, cap: Option<usize>) -> GrowthTrace {
    assert!(!a.is_empty(), "power trace of the empty set");
    let cap = cap.unwrap_or(2 * g.order()).max(1);
    let mut cur = a.clone();
    let mut sizes = vec![cur.count()];
    let mut stab = None;
    while sizes.len() < cap {
        let next = g.product_set(&cur, a);
        let sz = next.count();
        sizes.push(sz);
        if sz == sizes[sizes.len() - 2] {
            stab = Some(sizes.len() - 1);
            break;
        }
        cur = next;
    }
    let terminal_witness = stab.and_then(|_| is_left_right_coset(g, &cur));
    GrowthTrace {
        base: a.clone(),
        sizes,
        stabilization_index: stab,
        terminal_witness,
        terminal: cur,
    }
}

/// `S_R(A) = {x : Ax = A}`.
pub fn right_stabilizer(g: &GroupTable, a: &ElementSet) -> Subgroup {
    let Some(a0) = a.first() else {
        return Subgroup::whole(g);
    };
    // Ax = A forces a0 x in A
    let cands = g.left_translate(g.inv(a0), a);
    let members = g.set_of(cands.iter().filter(|&x| g.right_translate(a, x) == *a));
    Subgroup::from_members(g, members).expect("stabilizer is a subgroup")
}

/// `S_L(A) = {x : xA = A}`.
pub fn left_stabilizer(g: &GroupTable, a: &ElementSet) -> Subgroup {
    let Some(a0) = a.first() else {
        return Subgroup::whole(g);
    };
    let cands = g.right_translate(a, g.inv(a0));
    let members = g.set_of(cands.iter().filter(|&x| g.left_translate(x, a) == *a));
    Subgroup::from_members(g, members).expect("stabilizer is a subgroup")
}

/// Structure behind `|AB| = |A|`: `A` is a union of left cosets of
/// `H = S_R(A)` and `B` lies in the right coset `H b0`.
#[derive(Clone, Debug)]
pub struct SmallProduct {
    pub h: Subgroup,
    /// Smallest element of each left coset `aH` making up `A`.
    pub coset_reps: Vec<usize>,
    /// Smallest element of `B`.
    pub b0: usize,
}

impl SmallProduct {
    /// Re-checks the decomposition against `A` and `B`.
    pub fn holds(&self, g: &GroupTable, a: &ElementSet, b: &ElementSet) -> bool {
        let h = self.h.members();
        let mut union = g.empty_set();
        for &r in &self.coset_reps {
            union.union_with(&g.left_translate(r, h));
        }
        union == *a && b.is_subset(&g.right_translate(h, self.b0))
    }
}

/// Returns the structure exactly when `|AB| = |A|`.
pub fn small_product_structure(g: &GroupTable, a: &ElementSet, b: &ElementSet) -> Option<SmallProduct> {
    if a.is_empty() || b.is_empty() || g.product_set(a, b).count() != a.count() {
        return None;
    }
    let h = right_stabilizer(g, a);
    let mut left = a.clone();
    let mut coset_reps = Vec::new();
    while let Some(x) = left.first() {
        coset_reps.push(x);
        left.difference_with(&g.left_translate(x, h.members()));
    }
    Some(SmallProduct {
        h,
        coset_reps,
        b0: b.first().expect("nonempty"),
    })
}

/// The integer counts behind the three Ruzsa quantities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RuzsaCounts {
    pub a: usize,
    pub b: usize,
    /// `|AB^-1|`
    pub ab_inv: usize,
    /// `|A^-1 B|`
    pub a_inv_b: usize,
}

/// Ruzsa distances stored multiplicatively: `exp(2 d)` for the one-sided
/// distances and `exp(dd)` for the double distance.
#[derive(Clone, Debug, PartialEq)]
pub struct RuzsaValue<T> {
    /// `|AB^-1|^2 / (|A||B|)`
    pub left_sq: T,
    /// `|A^-1 B|^2 / (|A||B|)`
    pub right_sq: T,
    /// `|AB^-1||A^-1 B| / (|A||B|)`
    pub double_mult: T,
}

impl RuzsaCounts {
    pub fn value<T: Scalar>(&self) -> RuzsaValue<T> {
        let den = (self.a * self.b) as u64;
        let (l, r) = (self.ab_inv as u64, self.a_inv_b as u64);
        RuzsaValue {
            left_sq: T::ratio(l * l, den),
            right_sq: T::ratio(r * r, den),
            double_mult: T::ratio(l * r, den),
        }
    }

    /// Left distance is zero.
    pub fn left_zero(&self) -> bool {
        self.ab_inv * self.ab_inv == self.a * self.b
    }

    /// Double distance is zero.
    pub fn double_zero(&self) -> bool {
        self.ab_inv * self.a_inv_b == self.a * self.b
    }
}

impl<T: Scalar> RuzsaValue<T> {
    /// `d(A,B)` as a float, for display.
    pub fn left_log(&self) -> f64 {
        self.left_sq.to_f64().ln() / 2.0
    }

    pub fn right_log(&self) -> f64 {
        self.right_sq.to_f64().ln() / 2.0
    }

    pub fn double_log(&self) -> f64 {
        self.double_mult.to_f64().ln()
    }
}

pub fn ruzsa_counts(g: &GroupTable, a: &ElementSet, b: &ElementSet) -> RuzsaCounts {
    assert!(!a.is_empty() && !b.is_empty(), "Ruzsa distance of an empty set");
    RuzsaCounts {
        a: a.count(),
        b: b.count(),
        ab_inv: g.product_set(a, &g.inverse_set(b)).count(),
        a_inv_b: g.product_set(&g.inverse_set(a), b).count(),
    }
}

pub fn ruzsa<T: Scalar>(g: &GroupTable, a: &ElementSet, b: &ElementSet) -> RuzsaValue<T> {
    ruzsa_counts(g, a, b).value()
}

/// Structure behind a zero distance: `A = gH`, `B = γH`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroWitness {
    pub g: usize,
    pub gamma: usize,
    pub h: Subgroup,
}

/// `(g, γ, H)` with `A = gH` and `B = γH`, read off structurally from the
/// sets (smallest elements as representatives).
pub fn ruzsa_zero_left(g: &GroupTable, a: &ElementSet, b: &ElementSet) -> Option<ZeroWitness> {
    let (x, h) = as_left_coset(g, a)?;
    let gamma = b.first()?;
    if g.left_translate(g.inv(gamma), b) != *h.members() {
        return None;
    }
    Some(ZeroWitness { g: x, gamma, h })
}

/// As [`ruzsa_zero_left`] and additionally `γ^-1 g` normalizes `H`.
pub fn ruzsa_zero_double(g: &GroupTable, a: &ElementSet, b: &ElementSet) -> Option<ZeroWitness> {
    let w = ruzsa_zero_left(g, a, b)?;
    let t = g.mul(g.inv(w.gamma), w.g);
    if g.conjugate_set(w.h.members(), t) != *w.h.members() {
        return None;
    }
    Some(w)
}

/// `d(A,A) = 0`: `A` is a left coset.
pub fn self_distance_zero(g: &GroupTable, a: &ElementSet) -> Option<ZeroWitness> {
    ruzsa_zero_left(g, a, a)
}

/// `d(A,A^-1) = 0`: `A` is a left right coset.
pub fn inverse_distance_zero(g: &GroupTable, a: &ElementSet) -> Option<ZeroWitness> {
    ruzsa_zero_left(g, a, &g.inverse_set(a))
}

/// Outcome of [`expands_to_group`].
#[derive(Clone, Debug)]
pub struct Expansion {
    pub expands: bool,
    /// First `n` with `A^n = G`.
    pub power: Option<usize>,
    /// `A ⊆ gH = Hg` with `H` proper, when `A` never fills `G`.
    pub witness: Option<LeftRightCoset>,
}

/// Whether some power of `A` is all of `G`; otherwise a proper left right
/// coset containing `A`.
pub fn expands_to_group(g: &GroupTable, a: &ElementSet) -> Expansion {
    let trace = power_trace(g, a, None);
    if let Some(i) = trace.sizes.iter().position(|&s| s == g.order()) {
        return Expansion {
            expands: true,
            power: Some(i + 1),
            witness: None,
        };
    }
    let h = trace
        .terminal_witness
        .expect("powers stabilize within 2|G| steps")
        .h;
    let x = a.first().expect("nonempty");
    Expansion {
        expands: false,
        power: None,
        witness: Some(LeftRightCoset { g: x, h }),
    }
}

/// Largest proper normal subgroups first, as `(subgroup, generator of the
/// cyclic quotient)` for every nontrivial cyclic quotient.
fn cyclic_quotients(g: &GroupTable) -> Result<Vec<(Subgroup, usize)>> {
    let lat = enumerate_subgroups(g)?;
    let mut normals: Vec<&Subgroup> = lat
        .normal_subgroups(g)
        .filter(|n| n.order() < g.order())
        .collect();
    normals.sort_by(|x, y| y.order().cmp(&x.order()).then(x.members().cmp_members(y.members())));
    let mut out = Vec::new();
    for n in normals {
        let index = g.order() / n.order();
        // x generates G/N iff <x, N> = G
        let gen = (0..g.order()).find(|&x| {
            !n.contains(x) && {
                let mut seed = n.members().clone();
                seed.insert(x);
                subgroup_closure(g, &seed).order() == g.order()
            }
        });
        if let Some(x) = gen {
            debug_assert!(index > 1);
            out.push((n.clone(), x));
        }
    }
    Ok(out)
}

/// A generating set `S = xN` (for `G/N` cyclic and nontrivial) with `S^n != G`
/// for every `n`, or `None` when `G` is perfect.
pub fn non_expanding_generating_set(g: &GroupTable) -> Result<Option<ElementSet>> {
    if g.order() == 1 {
        return Ok(None);
    }
    Ok(cyclic_quotients(g)?
        .into_iter()
        .next()
        .map(|(n, x)| g.left_translate(x, n.members())))
}

/// The nontrivial coset of an index-2 subgroup, when one exists.
pub fn non_expanding_symmetric_generating_set(g: &GroupTable) -> Result<Option<ElementSet>> {
    if g.order() % 2 == 1 {
        return Ok(None);
    }
    Ok(cyclic_quotients(g)?
        .into_iter()
        .find(|(n, _)| 2 * n.order() == g.order())
        .map(|(n, _)| n.members().complement()))
}

/// Checks that `S` generates `G` and `S^n != G` for `n <= 2|G|`.
pub fn is_non_expanding_generator(g: &GroupTable, s: &ElementSet) -> bool {
    if s.is_empty() || subgroup_closure(g, s).order() != g.order() {
        return false;
    }
    let mut cur = s.clone();
    for _ in 0..2 * g.order() {
        if cur.is_full() {
            return false;
        }
        cur = g.product_set(&cur, s);
    }
    !cur.is_full()
}

/// `min over d | n of (ceil(r/d) + ceil(s/d) - 1) d`, the minimum of `|AB|`
/// over `|A| = r`, `|B| = s` in an abelian group of order `n`.
pub fn mu_abelian(g: &GroupTable, r: usize, s: usize) -> Result<usize> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    mu_formula(g.order(), r, s)
}

/// The closed form behind [`mu_abelian`] for order `n`.
pub fn mu_formula(n: usize, r: usize, s: usize) -> Result<usize> {
    if r == 0 || s == 0 || r > n || s > n {
        return Err(Error::DomainError(format!("need 1 <= r, s <= {n}, got r={r}, s={s}")));
    }
    Ok((1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| (r.div_ceil(d) + s.div_ceil(d) - 1) * d)
        .min()
        .expect("n has divisors"))
}

/// Kneser's inequality in stabilizer form, for abelian `G`:
/// `|AB| >= |AH| + |BH| - |H|` with `H` the stabilizer of `AB`.
pub fn kneser_holds(g: &GroupTable, a: &ElementSet, b: &ElementSet) -> bool {
    let ab = g.product_set(a, b);
    let h = right_stabilizer(g, &ab);
    let ah = g.product_set(a, h.members()).count();
    let bh = g.product_set(b, h.members()).count();
    ab.count() + h.order() >= ah + bh
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{alternating, by_name, cyclic, symmetric};
    use crate::Rational;

    fn set(g: &GroupTable, names: &[&str]) -> ElementSet {
        g.set_of(names.iter().map(|n| g.index_of_name(n).unwrap()))
    }

    #[test]
    fn transposition_square() {
        let s3 = symmetric(3);
        let a = set(&s3, &["(0 1)", "(0 2)"]);
        assert_eq!(product_set(&s3, &a, &a), set(&s3, &["()", "(0 1 2)", "(0 2 1)"]));
        assert!(is_left_right_coset(&s3, &a).is_none());
    }

    #[test]
    fn power_trace_in_c5() {
        let c5 = cyclic(5);
        let t = power_trace(&c5, &c5.set_of([0, 1]), None);
        assert_eq!(t.sizes, vec![2, 3, 4, 5, 5]);
        assert_eq!(t.stabilization_index, Some(4));
        assert_eq!(t.terminal_witness.unwrap().h.order(), 5);
        let c7 = cyclic(7);
        let t = power_trace(&c7, &c7.set_of([0, 1, 3]), Some(2));
        assert_eq!(t.sizes, vec![3, 6]);
    }

    #[test]
    fn coset_powers_are_constant() {
        let s3 = symmetric(3);
        let coset = set(&s3, &["(0 1)", "(1 2)", "(0 2)"]);
        let t = power_trace(&s3, &coset, None);
        assert_eq!(t.sizes, vec![3, 3]);
        let w = is_left_right_coset(&s3, &coset).unwrap();
        assert_eq!(w.h.order(), 3);
    }

    #[test]
    fn small_products() {
        let s3 = symmetric(3);
        let a = set(&s3, &["(0 1)"]);
        let b = set(&s3, &["(0 1)", "(0 2)"]);
        assert!(small_product_structure(&s3, &a, &b).is_none());
        let e = s3.set_of([0]);
        let sp = small_product_structure(&s3, &b, &e).unwrap();
        assert!(sp.holds(&s3, &b, &e));
        // two left cosets of <(0 1)> times a subset of a right coset
        let h = set(&s3, &["()", "(0 1)"]);
        let x = s3.index_of_name("(0 1 2)").unwrap();
        let a = h.union(&s3.left_translate(x, &h));
        let y = s3.index_of_name("(1 2)").unwrap();
        let b = s3.right_translate(&h, y);
        let sp = small_product_structure(&s3, &a, &b).unwrap();
        assert_eq!(sp.coset_reps.len(), 2);
        assert!(sp.holds(&s3, &a, &b));
    }

    #[test]
    fn ruzsa_values() {
        let c5 = cyclic(5);
        let a = c5.set_of([0, 1]);
        let v: RuzsaValue<Rational> = ruzsa(&c5, &a, &a);
        assert_eq!(v.left_sq, Rational::new(9, 4));
        let h = by_name("C6").unwrap();
        let sub = h.set_of([0, 2, 4]);
        let v: RuzsaValue<Rational> = ruzsa(&h, &sub, &sub);
        assert_eq!(v.left_sq, Rational::from(1));
        let w = ruzsa_zero_left(&h, &sub, &sub).unwrap();
        assert_eq!((w.g, w.gamma, w.h.order()), (0, 0, 3));
        let vf: RuzsaValue<f64> = ruzsa(&c5, &a, &a);
        assert!((vf.left_log() - (1.5f64).ln()).abs() < 1e-12);
    }

    #[test]
    fn double_zero_needs_normalizer() {
        let s3 = symmetric(3);
        let h = set(&s3, &["()", "(0 1)"]);
        let x = s3.index_of_name("(0 2)").unwrap();
        let xh = s3.left_translate(x, &h);
        assert!(ruzsa_zero_left(&s3, &h, &xh).is_some());
        assert!(ruzsa_zero_double(&s3, &h, &xh).is_none());
        assert!(!ruzsa_counts(&s3, &h, &xh).double_zero());
        assert!(ruzsa_zero_double(&s3, &h, &h).is_some());
    }

    #[test]
    fn expansion() {
        let a4 = alternating(4);
        let a = a4.set_of([a4.index_of_name("(0 1 2)").unwrap()]);
        let e = expands_to_group(&a4, &a);
        assert!(!e.expands);
        assert!(a.is_subset(&a4.left_translate(e.witness.as_ref().unwrap().g, e.witness.unwrap().h.members())));
        let s3 = symmetric(3);
        let gens = s3.set_of([0, 1, 2]);
        assert!(expands_to_group(&s3, &gens).expands);
    }

    #[test]
    fn non_expanding_sets() {
        let s3 = symmetric(3);
        let odd = set(&s3, &["(0 1)", "(1 2)", "(0 2)"]);
        assert_eq!(non_expanding_generating_set(&s3).unwrap(), Some(odd.clone()));
        assert_eq!(non_expanding_symmetric_generating_set(&s3).unwrap(), Some(odd.clone()));
        assert!(is_non_expanding_generator(&s3, &odd));
        let a5 = alternating(5);
        assert_eq!(non_expanding_generating_set(&a5).unwrap(), None);
        assert_eq!(non_expanding_symmetric_generating_set(&a5).unwrap(), None);
        let c4 = cyclic(4);
        assert_eq!(non_expanding_symmetric_generating_set(&c4).unwrap().unwrap().to_vec(), vec![1, 3]);
        let c3 = cyclic(3);
        assert_eq!(non_expanding_generating_set(&c3).unwrap().unwrap().to_vec(), vec![1]);
        assert_eq!(non_expanding_symmetric_generating_set(&c3).unwrap(), None);
    }

    #[test]
    fn mu_values() {
        assert_eq!(mu_abelian(&cyclic(6), 2, 2).unwrap(), 2);
        assert_eq!(mu_abelian(&cyclic(7), 3, 3).unwrap(), 5);
        assert_eq!(mu_abelian(&cyclic(8), 8, 8).unwrap(), 8);
        assert_eq!(mu_abelian(&symmetric(3), 2, 2), Err(Error::NotAbelian));
        assert!(mu_formula(6, 0, 1).is_err());
    }
}
