//! Built-in group constructors, a named catalog, and the text catalog format.
//!
//! Catalog file records are blank-line separated:
//!
//! ```text
//! name S3
//! degree 3
//! gens (0 1); (0 1 2)
//! ```

use crate::error::{Error, Result};
use crate::group::{build_group, direct_product, GroupTable, DEFAULT_CLOSURE_CAP};
use crate::perm::Permutation;
use std::sync::Arc;

fn from_gens<T, M, N>(gens: &[T], identity: T, mul: M, name: N) -> GroupTable
where
    T: Clone + Eq + std::hash::Hash,
    M: Fn(&T, &T) -> T,
    N: Fn(&T) -> String,
{
    GroupTable::from_generators(gens, identity, mul, name, DEFAULT_CLOSURE_CAP)
        .expect("built-in group within closure cap")
        .0
}

/// `C_n`. Element index `i` is the residue `i`.
pub fn cyclic(n: usize) -> GroupTable {
    assert!(n >= 1);
    if n == 1 {
        return GroupTable::trivial();
    }
    from_gens(&[1usize], 0, |a, b| (a + b) % n, |a| a.to_string())
}

/// `<a, b | a^m = 1, b^n = a^t, b a b^-1 = a^k>`, elements `a^i b^j`.
///
/// Needs `k^n = 1` and `k t = t` modulo `m`. With `t = 0` this is the split
/// extension `C_m : C_n`.
pub fn metacyclic(m: usize, n: usize, k: usize, t: usize) -> GroupTable {
    let kpow: Vec<usize> = (0..n)
        .scan(1usize, |acc, _| {
            let v = *acc;
            *acc = *acc * k % m;
            Some(v)
        })
        .collect();
    assert_eq!(kpow.last().map(|v| v * k % m), Some(1 % m), "k^n must be 1 mod m");
    assert_eq!(k * t % m, t % m, "k must fix t");
    let mul = |x: &(usize, usize), y: &(usize, usize)| {
        let mut i = x.0 + kpow[x.1] * y.0;
        let mut j = x.1 + y.1;
        if j >= n {
            j -= n;
            i += t;
        }
        (i % m, j)
    };
    let name = |x: &(usize, usize)| match x {
        (0, 0) => "e".to_string(),
        (i, 0) => format!("a^{i}"),
        (0, j) => format!("b^{j}"),
        (i, j) => format!("a^{i}b^{j}"),
    };
    from_gens(&[(1 % m, 0), (0, 1 % n)], (0, 0), mul, name)
}

/// Dihedral group of order `2n`.
pub fn dihedral(n: usize) -> GroupTable {
    assert!(n >= 2);
    metacyclic(n, 2, n - 1, 0)
}

/// Dicyclic group of order `4n`; `dicyclic(2)` is `Q8`.
pub fn dicyclic(n: usize) -> GroupTable {
    metacyclic(2 * n, 2, 2 * n - 1, n)
}

pub fn quaternion8() -> GroupTable {
    dicyclic(2)
}

/// `Sym(n)` generated by the adjacent transpositions `(0 1), (1 2), ...`.
pub fn symmetric(n: usize) -> GroupTable {
    assert!(n >= 1);
    if n == 1 {
        return GroupTable::trivial();
    }
    let gens: Vec<Permutation> = (0..n - 1)
        .map(|i| Permutation::parse_cycles(&format!("({} {})", i, i + 1), n).unwrap())
        .collect();
    build_group(&gens).expect("symmetric group within cap")
}

/// `Alt(n)` generated by the 3-cycles `(0 1 i)`.
pub fn alternating(n: usize) -> GroupTable {
    assert!(n >= 1);
    if n < 3 {
        return GroupTable::trivial();
    }
    let gens: Vec<Permutation> = (2..n)
        .map(|i| Permutation::parse_cycles(&format!("(0 1 {i})"), n).unwrap())
        .collect();
    build_group(&gens).expect("alternating group within cap")
}

/// `(C_p)^k` with elements named by their coordinate strings.
pub fn elementary_abelian(p: usize, k: usize) -> GroupTable {
    assert!(p >= 2 && k >= 1);
    let gens: Vec<Vec<u8>> = (0..k)
        .map(|i| (0..k).map(|j| u8::from(i == j)).collect())
        .collect();
    let p8 = p as u8;
    from_gens(
        &gens,
        vec![0u8; k],
        |a, b| a.iter().zip(b).map(|(x, y)| (x + y) % p8).collect(),
        |a| a.iter().map(|d| d.to_string()).collect(),
    )
}

/// Heisenberg group of upper unitriangular 3x3 matrices over `F_3`.
pub fn heisenberg27() -> GroupTable {
    from_gens(
        &[(1u8, 0u8, 0u8), (0, 1, 0)],
        (0, 0, 0),
        |x, y| ((x.0 + y.0) % 3, (x.1 + y.1) % 3, (x.2 + y.2 + x.0 * y.1) % 3),
        |x| format!("[{} {} {}]", x.0, x.1, x.2),
    )
}

/// `SL(2,3)`, order 24.
pub fn sl23() -> GroupTable {
    let mul = |a: &[u8; 4], b: &[u8; 4]| {
        [
            (a[0] * b[0] + a[1] * b[2]) % 3,
            (a[0] * b[1] + a[1] * b[3]) % 3,
            (a[2] * b[0] + a[3] * b[2]) % 3,
            (a[2] * b[1] + a[3] * b[3]) % 3,
        ]
    };
    from_gens(
        &[[1, 1, 0, 1], [0, 1, 2, 0]],
        [1, 0, 0, 1],
        mul,
        |a| format!("[{} {};{} {}]", a[0], a[1], a[2], a[3]),
    )
}

/// `(C_5)^2 : C_3`, order 75, with `C_3` acting by a matrix of order 3.
pub fn c5sq_c3() -> GroupTable {
    // M = [[0, 4], [1, 4]] has characteristic polynomial t^2 + t + 1 over F_5
    let act = |v: (u8, u8), j: u8| {
        let mut v = v;
        for _ in 0..j {
            v = ((4 * v.1) % 5, (v.0 + 4 * v.1) % 5);
        }
        v
    };
    from_gens(
        &[(1u8, 0u8, 0u8), (0, 0, 1)],
        (0, 0, 0),
        |x, y| {
            let w = act((y.0, y.1), x.2);
            ((x.0 + w.0) % 5, (x.1 + w.1) % 5, (x.2 + y.2) % 3)
        },
        |x| format!("({},{};{})", x.0, x.1, x.2),
    )
}

fn product_of(parts: &[GroupTable]) -> GroupTable {
    let mut it = parts.iter();
    let first = it.next().expect("nonempty product").clone();
    it.fold(first, |acc, g| direct_product(&acc, g))
}

fn parse_num(s: &str) -> Option<usize> {
    s.parse().ok().filter(|&n| n >= 1)
}

/// Looks up a group by name.
///
/// Recognized: `C<n>`, `D<n>` (order `2n`), `S<n>`/`Sym<n>`, `A<n>`/`Alt<n>`,
/// `Q8`, `Q16`, `Dic<n>`, `SD16`, `M16`, `SL23`, `Heis27`, `C2^<k>`-style
/// elementary abelian groups, split metacyclic `C<m>:C<n>` for the built-in
/// actions, and `x`-separated direct products of any of these.
pub fn by_name(name: &str) -> Result<GroupTable> {
    let name = name.trim();
    let unknown = || Error::UnknownGroup(name.to_string());
    if name.contains('x') {
        let parts = name
            .split('x')
            .map(by_name)
            .collect::<Result<Vec<_>>>()?;
        return Ok(product_of(&parts));
    }
    match name {
        "Q8" => return Ok(quaternion8()),
        "Q16" => return Ok(dicyclic(4)),
        "SD16" => return Ok(metacyclic(8, 2, 3, 0)),
        "M16" => return Ok(metacyclic(8, 2, 5, 0)),
        "SL23" => return Ok(sl23()),
        "Heis27" => return Ok(heisenberg27()),
        "C5^2:C3" => return Ok(c5sq_c3()),
        _ => {}
    }
    if let Some((base, exp)) = name.split_once('^') {
        let p = base.strip_prefix('C').and_then(parse_num).ok_or_else(unknown)?;
        let k = parse_num(exp).ok_or_else(unknown)?;
        if !crate::subgroup::is_prime(p) {
            return Err(unknown());
        }
        return Ok(elementary_abelian(p, k));
    }
    if let Some((l, r)) = name.split_once(':') {
        let m = l.strip_prefix('C').and_then(parse_num).ok_or_else(unknown)?;
        let n = r.strip_prefix('C').and_then(parse_num).ok_or_else(unknown)?;
        let k = split_action(m, n).ok_or_else(unknown)?;
        return Ok(metacyclic(m, n, k, 0));
    }
    let (prefix, digits) = name.split_at(name.find(|c: char| c.is_ascii_digit()).ok_or_else(unknown)?);
    let n = parse_num(digits).ok_or_else(unknown)?;
    match prefix {
        "C" => Ok(cyclic(n)),
        "D" if n >= 2 => Ok(dihedral(n)),
        "S" | "Sym" if n <= 7 => Ok(symmetric(n)),
        "A" | "Alt" if n <= 7 => Ok(alternating(n)),
        "Dic" if n >= 2 => Ok(dicyclic(n)),
        _ => Err(unknown()),
    }
}

/// The built-in faithful actions for `C_m : C_n`.
fn split_action(m: usize, n: usize) -> Option<usize> {
    match (m, n) {
        (7, 3) => Some(2),
        (9, 3) => Some(4),
        (13, 3) => Some(3),
        (11, 5) => Some(3),
        (19, 3) => Some(7),
        (31, 3) => Some(5),
        (7, 9) => Some(2),
        (8, 2) => Some(7),
        (4, 4) => Some(3),
        (5, 4) => Some(2),
        (3, 4) => Some(2),
        _ => None,
    }
}

/// A named catalog group.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub group: Arc<GroupTable>,
}

/// Names of the standard catalog. Covers every isomorphism type of order at
/// most 12, the 2-groups of order 16 used for Frattini pullbacks, odd-order
/// groups up to 105 and assorted even-order groups up to 120.
pub fn standard_names() -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    let push = |names: &mut Vec<String>, s: &str| {
        if !names.iter().any(|n| n == s) {
            names.push(s.to_string());
        }
    };
    for n in 1..=64 {
        push(&mut names, &format!("C{n}"));
    }
    for n in (65..=105).step_by(2) {
        push(&mut names, &format!("C{n}"));
    }
    for n in 4..=60 {
        push(&mut names, &format!("D{n}"));
    }
    for s in [
        "C2xC2", "S3", "C4xC2", "C2^3", "Q8", "C3xC3", "C6xC2", "A4", "Dic3",
        // order 16
        "C8xC2", "C4xC4", "C4xC2xC2", "C2^4", "D4xC2", "Q8xC2", "SD16", "M16", "Q16", "C4:C4",
        // odd order
        "C7:C3", "C9:C3", "Heis27", "C9xC3", "C3^3", "C13:C3", "C5xC5", "C11:C5", "C15xC3",
        "C7xC7", "C19:C3", "C7:C9", "C3xC7:C3", "C21xC3", "C5^2:C3", "C15xC5", "C9xC9", "C3^4",
        "C31:C3", "C5xC7:C3",
        // even order
        "S4", "A5", "S5", "SL23", "Dic5", "C5:C4", "C3:C4xC2", "S3xC3", "A4xC2", "S3xS3",
        "A4xC3", "S4xC2", "Q8xC3", "C2^5", "C4xC4xC2", "D4xC4", "A4xC4", "A5xC2", "C6xC6",
        "C10xC10", "S3xC2^2", "A4xC2^2", "Dic3xC3",
    ] {
        push(&mut names, s);
    }
    names
}

/// The standard catalog restricted to groups of order at most `max_order`,
/// sorted by order (stable in listing order).
pub fn standard(max_order: usize) -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = standard_names()
        .into_iter()
        .filter(|n| quick_order(n).is_none_or(|o| o <= max_order))
        .map(|name| {
            let group = Arc::new(by_name(&name).expect("catalog name resolves"));
            CatalogEntry { name, group }
        })
        .filter(|e| e.group.order() <= max_order)
        .collect();
    out.sort_by_key(|e| e.group.order());
    out
}

/// Order of simple parametric names without building the table.
fn quick_order(name: &str) -> Option<usize> {
    if name.contains(['x', '^', ':']) {
        return None;
    }
    let n: usize = name.get(1..)?.parse().ok()?;
    match name.as_bytes()[0] {
        b'C' => Some(n),
        b'D' => Some(2 * n),
        _ => None,
    }
}

/// Parses the catalog text format.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    let mut name: Option<String> = None;
    let mut degree: Option<usize> = None;
    let mut gens: Option<(usize, String)> = None;
    let mut start = 1;
    let mut flush = |name: &mut Option<String>,
                     degree: &mut Option<usize>,
                     gens: &mut Option<(usize, String)>,
                     start: usize|
     -> Result<()> {
        if name.is_none() && degree.is_none() && gens.is_none() {
            return Ok(());
        }
        let n = name.take().ok_or_else(|| Error::parse(start, "record without `name`"))?;
        let d = degree.take().ok_or_else(|| Error::parse(start, "record without `degree`"))?;
        let (gline, g) = gens.take().ok_or_else(|| Error::parse(start, "record without `gens`"))?;
        let perms = g
            .split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| {
                Permutation::parse_cycles(s, d).map_err(|e| Error::parse(gline, e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        let group = build_group(&perms)?;
        out.push(CatalogEntry {
            name: n,
            group: Arc::new(group),
        });
        Ok(())
    };
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            flush(&mut name, &mut degree, &mut gens, start)?;
            start = lineno + 1;
            continue;
        }
        let (key, value) = line
            .split_once(char::is_whitespace)
            .map(|(k, v)| (k, v.trim()))
            .unwrap_or((line, ""));
        match key {
            "name" => name = Some(value.to_string()),
            "degree" => {
                degree = Some(
                    value
                        .parse()
                        .map_err(|_| Error::parse(lineno, format!("bad degree `{value}`")))?,
                )
            }
            "gens" => gens = Some((lineno, value.to_string())),
            other => return Err(Error::parse(lineno, format!("unknown key `{other}`"))),
        }
    }
    flush(&mut name, &mut degree, &mut gens, start)?;
    Ok(out)
}

/// Resolves a group name against loaded catalog entries first, then built-ins.
pub fn resolve(name: &str, extra: &[CatalogEntry]) -> Result<Arc<GroupTable>> {
    if let Some(e) = extra.iter().find(|e| e.name == name) {
        return Ok(e.group.clone());
    }
    by_name(name).map(Arc::new)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgroup::{centre, enumerate_subgroups};

    #[test]
    fn orders_of_named_groups() {
        let expect = [
            ("C1", 1),
            ("C12", 12),
            ("D4", 8),
            ("D6", 12),
            ("S4", 24),
            ("A4", 12),
            ("A5", 60),
            ("Q8", 8),
            ("Q16", 16),
            ("Dic3", 12),
            ("SD16", 16),
            ("M16", 16),
            ("C4:C4", 16),
            ("C2^3", 8),
            ("C3xC3", 9),
            ("C7:C3", 21),
            ("C9:C3", 27),
            ("Heis27", 27),
            ("C7:C9", 63),
            ("C5^2:C3", 75),
            ("C31:C3", 93),
            ("C5xC7:C3", 105),
            ("SL23", 24),
        ];
        for (name, order) in expect {
            let g = by_name(name).unwrap();
            assert_eq!(g.order(), order, "{name}");
            assert!(g.check_axioms(), "{name}");
        }
    }

    #[test]
    fn odd_nonabelian_groups_are_nonabelian() {
        for name in ["C7:C3", "C9:C3", "Heis27", "C7:C9", "C5^2:C3", "C11:C5", "C13:C3"] {
            assert!(!by_name(name).unwrap().is_abelian(), "{name}");
        }
        // exponent distinguishes the two nonabelian groups of order 27
        let h = heisenberg27();
        assert!((0..27).all(|x| h.element_order(x) <= 3));
        let m = by_name("C9:C3").unwrap();
        assert!((0..27).any(|x| m.element_order(x) == 9));
    }

    #[test]
    fn catalog_covers_all_groups_up_to_order_12() {
        let cat = standard(12);
        let mut per_order = [0usize; 13];
        for e in &cat {
            per_order[e.group.order()] += 1;
        }
        // number of isomorphism types of each order
        assert_eq!(&per_order[1..], &[1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5]);
        // and they are pairwise distinguishable by a cheap invariant
        let sig = |g: &GroupTable| {
            let mut orders: Vec<usize> = (0..g.order()).map(|x| g.element_order(x)).collect();
            orders.sort();
            (g.order(), orders, centre(g).order(), enumerate_subgroups(g).unwrap().len())
        };
        let sigs: Vec<_> = cat.iter().map(|e| sig(&e.group)).collect();
        for i in 0..sigs.len() {
            for j in 0..i {
                assert_ne!(sigs[i], sigs[j], "{} vs {}", cat[i].name, cat[j].name);
            }
        }
    }

    #[test]
    fn catalog_file_round() {
        let text = "name S3\ndegree 3\ngens (0 1); (0 1 2)\n\n# comment\nname V4\ndegree 4\ngens (0 1)(2 3); (0 2)(1 3)\n";
        let cat = parse_catalog(text).unwrap();
        assert_eq!(cat.len(), 2);
        assert_eq!(cat[0].group.order(), 6);
        assert_eq!(cat[1].group.order(), 4);
        assert_eq!(resolve("V4", &cat).unwrap().order(), 4);
    }

    #[test]
    fn catalog_file_rejects_bad_records() {
        assert!(parse_catalog("name X\ndegree 3\ngens (0 0)\n").is_err());
        assert!(parse_catalog("name X\ngens (0 1)\n").is_err());
        assert!(parse_catalog("name X\ndegree 3\ncolour blue\n").is_err());
        assert!(matches!(by_name("Z9"), Err(Error::UnknownGroup(_))));
    }
}
