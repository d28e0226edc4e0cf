//! Measurable subsets of a finitely generated group, represented through
//! finite quotients ("charts").
//!
//! A chart is an epimorphism from the free group on the source generators onto
//! a finite [`GroupTable`], given by generator images. A measurable set is a
//! subset of one chart's target; its semantic value is the preimage. Two sets
//! on different charts are compared in the fiber product of the charts.

use crate::catalog::{self, CatalogEntry};
use crate::error::{Error, Result};
use crate::group::{GroupTable, Homomorphism, DEFAULT_CLOSURE_CAP};
use crate::set::ElementSet;
use crate::subgroup::is_subgroup;
use crate::Rational;
use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, RwLock};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

fn fresh_id() -> u64 {
    NEXT_ID.fetch_add(1, Ordering::Relaxed)
}

/// The abstract group: only its generator names are known.
#[derive(Debug)]
pub struct FgGroup {
    id: u64,
    names: Vec<String>,
}

impl FgGroup {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Self>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidArgument("need at least one generator".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n.contains(|c: char| c.is_whitespace() || c == '\'') {
                return Err(Error::InvalidArgument(format!("bad generator name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidArgument(format!("duplicate generator `{n}`")));
            }
        }
        Ok(Arc::new(FgGroup { id: fresh_id(), names }))
    }

    /// The integers, with one generator `t`.
    pub fn integers() -> Arc<Self> {
        Self::new(["t"]).expect("valid name")
    }

    /// Free group on `a, b`.
    pub fn free2() -> Arc<Self> {
        Self::new(["a", "b"]).expect("valid names")
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Parses a word such as `a b' a`. Letters are generator names separated by
    /// whitespace; a trailing apostrophe inverts. The empty string is the
    /// empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut out = Vec::new();
        for tok in text.split_whitespace() {
            let (name, inv) = match tok.strip_suffix('\'') {
                Some(n) => (n, true),
                None => (tok, false),
            };
            let g = self
                .names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::UnknownName(name.to_string()))?;
            out.push((g, inv));
        }
        Ok(Word(out))
    }
}

/// A word in the source generators: `(generator, inverted)` letters, read
/// left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Word(pub Vec<(usize, bool)>);

/// A surjection from the source group onto a finite group.
pub struct Epimorphism {
    id: u64,
    name: String,
    source: Arc<FgGroup>,
    target: Arc<GroupTable>,
    images: Vec<usize>,
}

impl fmt::Debug for Epimorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Epimorphism({} -> order {}, images {:?})",
            self.name,
            self.target.order(),
            self.images
        )
    }
}

impl Epimorphism {
    /// Checks that the images generate the target.
    pub fn new(
        name: impl Into<String>,
        source: Arc<FgGroup>,
        target: Arc<GroupTable>,
        images: Vec<usize>,
    ) -> Result<Arc<Self>> {
        if images.len() != source.rank() {
            return Err(Error::InvalidArgument(format!(
                "{} generator images for a group of rank {}",
                images.len(),
                source.rank()
            )));
        }
        if let Some(&bad) = images.iter().find(|&&x| x >= target.order()) {
            return Err(Error::InvalidArgument(format!("image {bad} outside the target")));
        }
        let span = crate::subgroup::subgroup_closure(&target, &target.set_of(images.iter().copied()));
        if span.order() != target.order() {
            return Err(Error::NotSurjective);
        }
        Ok(Arc::new(Epimorphism {
            id: fresh_id(),
            name: name.into(),
            source,
            target,
            images,
        }))
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Arc<FgGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GroupTable> {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn order(&self) -> usize {
        self.target.order()
    }

    /// Image of a word.
    pub fn eval(&self, w: &Word) -> usize {
        let t = &self.target;
        w.0.iter().fold(t.identity(), |acc, &(g, inv)| {
            let x = self.images[g];
            t.mul(acc, if inv { t.inv(x) } else { x })
        })
    }
}

/// A common refinement of two charts with its projections.
#[derive(Clone, Debug)]
pub struct Refinement {
    pub chart: Arc<Epimorphism>,
    pub proj1: Homomorphism,
    pub proj2: Homomorphism,
}

impl Refinement {
    fn swapped(&self) -> Refinement {
        Refinement {
            chart: self.chart.clone(),
            proj1: self.proj2.clone(),
            proj2: self.proj1.clone(),
        }
    }
}

/// Computes the fiber-product refinement of two charts without caching.
///
/// When the refinement has the same order as one of the inputs that input is
/// already finer, and it is returned as the refinement chart.
pub fn refine_uncached(q1: &Arc<Epimorphism>, q2: &Arc<Epimorphism>, cap: usize) -> Result<Refinement> {
    if q1.source.id != q2.source.id {
        return Err(Error::SourceMismatch);
    }
    if q1.id == q2.id {
        let id = Homomorphism::identity(q1.order());
        return Ok(Refinement {
            chart: q1.clone(),
            proj1: id.clone(),
            proj2: id,
        });
    }
    let (t1, t2) = (&q1.target, &q2.target);
    let gens: Vec<(usize, usize)> = q1.images.iter().copied().zip(q2.images.iter().copied()).collect();
    // cheap pass first: if one side already determines the other, skip the table
    if let Some(map) = induced_map(&gens, t1, t2) {
        return Ok(Refinement {
            chart: q1.clone(),
            proj1: Homomorphism::identity(q1.order()),
            proj2: Homomorphism::new(map, q2.order()),
        });
    }
    let swapped: Vec<(usize, usize)> = gens.iter().map(|&(a, b)| (b, a)).collect();
    if let Some(map) = induced_map(&swapped, t2, t1) {
        return Ok(Refinement {
            chart: q2.clone(),
            proj1: Homomorphism::new(map, q1.order()),
            proj2: Homomorphism::identity(q2.order()),
        });
    }
    let (table, elems) = GroupTable::from_generators(
        &gens,
        (0usize, 0usize),
        |a, b| (t1.mul(a.0, b.0), t2.mul(a.1, b.1)),
        |a| format!("({},{})", t1.name(a.0), t2.name(a.1)),
        cap,
    )?;
    let p1: Vec<usize> = elems.iter().map(|e| e.0).collect();
    let p2: Vec<usize> = elems.iter().map(|e| e.1).collect();
    let n = table.order();
    // reuse a coarse chart when it already separates everything
    let reuse = |q: &Arc<Epimorphism>, own: &[usize], other: &[usize], other_order: usize| {
        let mut to_other = vec![0usize; n];
        for (i, &x) in own.iter().enumerate() {
            to_other[x] = other[i];
        }
        (
            q.clone(),
            Homomorphism::identity(n),
            Homomorphism::new(to_other, other_order),
        )
    };
    if n == q1.order() {
        let (chart, a, b) = reuse(q1, &p1, &p2, q2.order());
        return Ok(Refinement { chart, proj1: a, proj2: b });
    }
    if n == q2.order() {
        let (chart, b, a) = reuse(q2, &p2, &p1, q1.order());
        return Ok(Refinement { chart, proj1: a, proj2: b });
    }
    let index: HashMap<(usize, usize), usize> = elems.iter().copied().enumerate().map(|(i, e)| (e, i)).collect();
    let images = gens.iter().map(|g| index[g]).collect();
    let chart = Arc::new(Epimorphism {
        id: fresh_id(),
        name: format!("{}*{}", q1.name, q2.name),
        source: q1.source.clone(),
        target: Arc::new(table),
        images,
    });
    Ok(Refinement {
        chart,
        proj1: Homomorphism::new(p1, q1.order()),
        proj2: Homomorphism::new(p2, q2.order()),
    })
}

/// The map `t1 -> t2` sending each `gens[i].0` to `gens[i].1`, if it is well
/// defined. Walks the Cayley graph of `t1` once.
fn induced_map(gens: &[(usize, usize)], t1: &GroupTable, t2: &GroupTable) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; t1.order()];
    map[t1.identity()] = t2.identity();
    let mut queue = vec![t1.identity()];
    while let Some(x) = queue.pop() {
        for &(g, h) in gens {
            let (y, z) = (t1.mul(x, g), t2.mul(map[x], h));
            if map[y] == usize::MAX {
                map[y] = z;
                queue.push(y);
            } else if map[y] != z {
                return None;
            }
        }
    }
    Some(map)
}

/// Registry of charts over one source group plus the refinement memo.
///
/// The memo is the only shared mutable state; lookups and inserts go through
/// an `RwLock` and racing inserts keep the first value stored.
pub struct MeasureSpace {
    source: Arc<FgGroup>,
    charts: RwLock<Vec<Arc<Epimorphism>>>,
    memo: RwLock<HashMap<(u64, u64), Refinement>>,
    cap: usize,
}

impl fmt::Debug for MeasureSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MeasureSpace")
            .field("generators", &self.source.names)
            .field("charts", &self.charts.read().unwrap().len())
            .finish()
    }
}

impl MeasureSpace {
    pub fn new(source: Arc<FgGroup>) -> Self {
        MeasureSpace {
            source,
            charts: RwLock::new(Vec::new()),
            memo: RwLock::new(HashMap::new()),
            cap: DEFAULT_CLOSURE_CAP,
        }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn source(&self) -> &Arc<FgGroup> {
        &self.source
    }

    /// Registers a named chart. Images are element indices of `target`.
    pub fn register(&self, name: &str, target: Arc<GroupTable>, images: Vec<usize>) -> Result<Arc<Epimorphism>> {
        let q = Epimorphism::new(name, self.source.clone(), target, images)?;
        let mut charts = self.charts.write().unwrap();
        if charts.iter().any(|c| c.name == name) {
            return Err(Error::InvalidArgument(format!("chart `{name}` already registered")));
        }
        charts.push(q.clone());
        Ok(q)
    }

    /// Registers `t -> 1` onto `C_n` for the integers, or the analogous
    /// cyclic chart sending every generator to `1`.
    pub fn register_cyclic(&self, name: &str, n: usize) -> Result<Arc<Epimorphism>> {
        let g = Arc::new(catalog::cyclic(n));
        let img = usize::from(n > 1);
        self.register(name, g, vec![img; self.source.rank()])
    }

    pub fn chart(&self, name: &str) -> Result<Arc<Epimorphism>> {
        self.charts
            .read()
            .unwrap()
            .iter()
            .find(|c| c.name == name)
            .cloned()
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn charts(&self) -> Vec<Arc<Epimorphism>> {
        self.charts.read().unwrap().clone()
    }

    /// Common refinement of two charts, memoized by chart ids.
    pub fn refine(&self, q1: &Arc<Epimorphism>, q2: &Arc<Epimorphism>) -> Result<Refinement> {
        let key = (q1.id, q2.id);
        if let Some(r) = self.memo.read().unwrap().get(&key) {
            return Ok(r.clone());
        }
        let r = refine_uncached(q1, q2, self.cap)?;
        let mut memo = self.memo.write().unwrap();
        let stored = memo.entry(key).or_insert(r).clone();
        memo.entry((q2.id, q1.id)).or_insert_with(|| stored.swapped());
        Ok(stored)
    }

    /// Number of memoized refinements (each pair counted in both orders).
    pub fn memo_len(&self) -> usize {
        self.memo.read().unwrap().len()
    }

    fn check(&self, a: &MeasurableSet) -> Result<()> {
        if a.chart.source.id != self.source.id {
            return Err(Error::SourceMismatch);
        }
        Ok(())
    }

    /// Both sets expressed on their common refinement.
    pub fn align(&self, a: &MeasurableSet, b: &MeasurableSet) -> Result<(Arc<Epimorphism>, ElementSet, ElementSet)> {
        self.check(a)?;
        self.check(b)?;
        let r = self.refine(&a.chart, &b.chart)?;
        let x = r.proj1.preimage(&a.body);
        let y = r.proj2.preimage(&b.body);
        Ok((r.chart, x, y))
    }

    /// `a` re-expressed on the refinement of its chart with `q`.
    pub fn rechart(&self, a: &MeasurableSet, q: &Arc<Epimorphism>) -> Result<MeasurableSet> {
        self.check(a)?;
        let r = self.refine(&a.chart, q)?;
        Ok(MeasurableSet {
            body: r.proj1.preimage(&a.body),
            chart: r.chart,
        })
    }

    fn combine(
        &self,
        a: &MeasurableSet,
        b: &MeasurableSet,
        op: impl Fn(&ElementSet, &ElementSet) -> ElementSet,
    ) -> Result<MeasurableSet> {
        let (chart, x, y) = self.align(a, b)?;
        Ok(MeasurableSet { body: op(&x, &y), chart })
    }

    pub fn union(&self, a: &MeasurableSet, b: &MeasurableSet) -> Result<MeasurableSet> {
        self.combine(a, b, ElementSet::union)
    }

    pub fn intersect(&self, a: &MeasurableSet, b: &MeasurableSet) -> Result<MeasurableSet> {
        self.combine(a, b, ElementSet::intersection)
    }

    pub fn difference(&self, a: &MeasurableSet, b: &MeasurableSet) -> Result<MeasurableSet> {
        self.combine(a, b, ElementSet::difference)
    }

    /// `AB`, computed as a product set in the common refinement.
    pub fn product(&self, a: &MeasurableSet, b: &MeasurableSet) -> Result<MeasurableSet> {
        let (chart, x, y) = self.align(a, b)?;
        let body = chart.target.product_set(&x, &y);
        Ok(MeasurableSet { body, chart })
    }

    pub fn sets_equal(&self, a: &MeasurableSet, b: &MeasurableSet) -> Result<bool> {
        let (_, x, y) = self.align(a, b)?;
        Ok(x == y)
    }

    pub fn is_subset(&self, a: &MeasurableSet, b: &MeasurableSet) -> Result<bool> {
        let (_, x, y) = self.align(a, b)?;
        Ok(x.is_subset(&y))
    }

    /// Parses a measurable-set literal:
    ///
    /// * `chart <name> ; elements {i,j,...}`
    /// * `chart <name> ; coset {h1,h2,...} * <word>` (the right coset `H w`)
    /// * `coset {h1,...} * <word>` on the first registered chart
    ///
    /// Elements are indices or element names of the chart target.
    pub fn parse_set(&self, text: &str) -> Result<MeasurableSet> {
        let text = text.trim();
        let (chart, rest) = if let Some(r) = text.strip_prefix("chart") {
            let (name, rest) = r
                .split_once(';')
                .ok_or_else(|| Error::parse(1, "expected `;` after the chart name"))?;
            (self.chart(name.trim())?, rest.trim())
        } else {
            let first = self
                .charts
                .read()
                .unwrap()
                .first()
                .cloned()
                .ok_or_else(|| Error::parse(1, "no chart registered"))?;
            (first, text)
        };
        let target = chart.target.clone();
        if let Some(r) = rest.strip_prefix("elements") {
            let body = parse_element_list(&target, r.trim())?;
            return Ok(MeasurableSet { chart, body });
        }
        if let Some(r) = rest.strip_prefix("coset") {
            let (list, word) = match r.split_once('*') {
                Some((l, w)) => (l.trim(), w.trim()),
                None => (r.trim(), ""),
            };
            let h = parse_element_list(&target, list)?;
            if !is_subgroup(&target, &h) {
                return Err(Error::parse(1, "coset list is not a subgroup"));
            }
            let w = self.source.parse_word(word)?;
            let g = chart.eval(&w);
            let body = target.right_translate(&h, g);
            return Ok(MeasurableSet { chart, body });
        }
        Err(Error::parse(1, format!("expected `elements` or `coset`, got `{rest}`")))
    }

    /// Loads a quotient registry:
    ///
    /// ```text
    /// quotient <name> : <group-name> ; images a=<elem>, b=<elem>
    /// ```
    ///
    /// Group names resolve against `extra` first, then the built-in catalog.
    pub fn load_quotients(&self, text: &str, extra: &[CatalogEntry]) -> Result<Vec<Arc<Epimorphism>>> {
        let mut out = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let body = line
                .strip_prefix("quotient")
                .ok_or_else(|| Error::parse(lineno, "expected `quotient`"))?;
            let (name, rest) = body
                .split_once(':')
                .ok_or_else(|| Error::parse(lineno, "expected `:` after the quotient name"))?;
            let (group_name, images) = rest
                .split_once(';')
                .ok_or_else(|| Error::parse(lineno, "expected `;` after the group name"))?;
            let images = images
                .trim()
                .strip_prefix("images")
                .ok_or_else(|| Error::parse(lineno, "expected `images`"))?;
            let target = catalog::resolve(group_name.trim(), extra)?;
            let mut imgs: Vec<Option<usize>> = vec![None; self.source.rank()];
            for item in split_top_level(images) {
                let (gen, elem) = item
                    .split_once('=')
                    .ok_or_else(|| Error::parse(lineno, format!("expected `gen=element`, got `{item}`")))?;
                let gi = self
                    .source
                    .names
                    .iter()
                    .position(|n| n == gen.trim())
                    .ok_or_else(|| Error::parse(lineno, format!("unknown generator `{}`", gen.trim())))?;
                let x = parse_element(&target, elem.trim())
                    .ok_or_else(|| Error::parse(lineno, format!("unknown element `{}`", elem.trim())))?;
                imgs[gi] = Some(x);
            }
            let imgs = imgs
                .into_iter()
                .enumerate()
                .map(|(g, x)| {
                    x.ok_or_else(|| Error::parse(lineno, format!("no image for `{}`", self.source.names[g])))
                })
                .collect::<Result<Vec<_>>>()?;
            out.push(self.register(name.trim(), target, imgs)?);
        }
        Ok(out)
    }
}

/// Splits on commas that are not inside parentheses or brackets.
fn split_top_level(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    let last = text[start..].trim();
    if !last.is_empty() || !out.is_empty() {
        out.push(last);
    }
    out.retain(|s| !s.is_empty());
    out
}

/// An element given by name or by index.
pub fn parse_element(g: &GroupTable, text: &str) -> Option<usize> {
    g.index_of_name(text)
        .or_else(|| text.parse::<usize>().ok().filter(|&x| x < g.order()))
}

/// Parses `{x,y,...}` into a set of `g`.
pub fn parse_element_list(g: &GroupTable, text: &str) -> Result<ElementSet> {
    let inner = text
        .trim()
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| Error::parse(1, format!("expected `{{...}}`, got `{text}`")))?;
    let mut s = g.empty_set();
    for item in split_top_level(inner) {
        let x = parse_element(g, item).ok_or_else(|| Error::UnknownName(item.to_string()))?;
        s.insert(x);
    }
    Ok(s)
}

/// A measurable set: a subset of one chart's target.
#[derive(Clone, Debug)]
pub struct MeasurableSet {
    chart: Arc<Epimorphism>,
    body: ElementSet,
}

impl MeasurableSet {
    pub fn new(chart: Arc<Epimorphism>, body: ElementSet) -> Result<Self> {
        if body.universe() != chart.order() {
            return Err(Error::InvalidArgument("body does not live in the chart target".into()));
        }
        Ok(MeasurableSet { chart, body })
    }

    pub fn from_indices(chart: &Arc<Epimorphism>, items: impl IntoIterator<Item = usize>) -> Self {
        let body = chart.target.set_of(items);
        MeasurableSet {
            chart: chart.clone(),
            body,
        }
    }

    pub fn whole(chart: &Arc<Epimorphism>) -> Self {
        MeasurableSet {
            chart: chart.clone(),
            body: chart.target.full_set(),
        }
    }

    pub fn empty(chart: &Arc<Epimorphism>) -> Self {
        MeasurableSet {
            chart: chart.clone(),
            body: chart.target.empty_set(),
        }
    }

    pub fn chart(&self) -> &Arc<Epimorphism> {
        &self.chart
    }

    pub fn body(&self) -> &ElementSet {
        &self.body
    }

    /// `r/i` for `r` chosen cosets of an index-`i` kernel.
    pub fn measure(&self) -> Rational {
        Rational::new(self.body.count() as i64, self.chart.order() as i64)
    }

    pub fn complement(&self) -> MeasurableSet {
        MeasurableSet {
            chart: self.chart.clone(),
            body: self.body.complement(),
        }
    }

    pub fn translate_left(&self, w: &Word) -> MeasurableSet {
        let g = self.chart.eval(w);
        MeasurableSet {
            chart: self.chart.clone(),
            body: self.chart.target.left_translate(g, &self.body),
        }
    }

    pub fn translate_right(&self, w: &Word) -> MeasurableSet {
        let g = self.chart.eval(w);
        MeasurableSet {
            chart: self.chart.clone(),
            body: self.chart.target.right_translate(&self.body, g),
        }
    }

    pub fn invert(&self) -> MeasurableSet {
        MeasurableSet {
            chart: self.chart.clone(),
            body: self.chart.target.inverse_set(&self.body),
        }
    }

    /// `A·A` in the set's own chart.
    pub fn square(&self) -> MeasurableSet {
        MeasurableSet {
            chart: self.chart.clone(),
            body: self.chart.target.product_set(&self.body, &self.body),
        }
    }
}

impl fmt::Display for MeasurableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chart {} ; elements {}", self.chart.name, self.body)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z_space() -> MeasureSpace {
        MeasureSpace::new(FgGroup::integers())
    }

    #[test]
    fn refinement_of_c2_and_c3_is_c6() {
        let sp = z_space();
        let q2 = sp.register_cyclic("c2", 2).unwrap();
        let q3 = sp.register_cyclic("c3", 3).unwrap();
        let r = sp.refine(&q2, &q3).unwrap();
        assert_eq!(r.chart.order(), 6);
        assert!(r.chart.target.is_cyclic());
        assert!(r.proj1.is_surjective() && r.proj2.is_surjective());
        // the memo answers both orders
        let again = sp.refine(&q3, &q2).unwrap();
        assert_eq!(again.chart.id(), r.chart.id());
        assert_eq!(sp.memo_len(), 2);
    }

    #[test]
    fn refining_a_chart_with_itself_is_diagonal() {
        let sp = z_space();
        let q = sp.register_cyclic("c5", 5).unwrap();
        assert_eq!(sp.refine(&q, &q).unwrap().chart.order(), 5);
    }

    #[test]
    fn sign_is_determined_by_sym3_chart() {
        let sp = MeasureSpace::new(FgGroup::free2());
        let s3 = Arc::new(catalog::by_name("S3").unwrap());
        let a = s3.index_of_name("(0 1)").unwrap();
        let b = s3.index_of_name("(0 1 2)").unwrap();
        let q1 = sp.register("s3", s3, vec![a, b]).unwrap();
        let q2 = sp.register("sign", Arc::new(catalog::cyclic(2)), vec![1, 0]).unwrap();
        let r = sp.refine(&q1, &q2).unwrap();
        assert_eq!(r.chart.order(), 6);
        // coarse chart reused
        assert_eq!(r.chart.id(), q1.id());
    }

    #[test]
    fn measures_of_simple_sets() {
        let sp = z_space();
        let q2 = sp.register_cyclic("c2", 2).unwrap();
        let q3 = sp.register_cyclic("c3", 3).unwrap();
        let q6 = sp.register_cyclic("c6", 6).unwrap();
        assert_eq!(MeasurableSet::from_indices(&q2, [1]).measure(), Rational::new(1, 2));
        assert_eq!(MeasurableSet::empty(&q2).measure(), Rational::from(0));
        assert_eq!(MeasurableSet::from_indices(&q6, [1, 4]).measure(), Rational::new(1, 3));
        let evens = MeasurableSet::from_indices(&q2, [0]);
        let threes = MeasurableSet::from_indices(&q3, [0]);
        assert_eq!(sp.intersect(&evens, &threes).unwrap().measure(), Rational::new(1, 6));
        let odds = MeasurableSet::from_indices(&q2, [1]);
        let ones = MeasurableSet::from_indices(&q3, [1]);
        let prod = sp.product(&odds, &ones).unwrap();
        // odd + (1 mod 3) covers every residue mod 6
        assert_eq!(prod.body().count(), 6);
        assert_eq!(prod.measure(), Rational::from(1));
    }

    #[test]
    fn same_set_in_two_charts() {
        let sp = z_space();
        let q2 = sp.register_cyclic("c2", 2).unwrap();
        let q6 = sp.register_cyclic("c6", 6).unwrap();
        let a = MeasurableSet::from_indices(&q2, [1]);
        let b = MeasurableSet::from_indices(&q6, [1, 3, 5]);
        assert!(sp.sets_equal(&a, &b).unwrap());
        assert!(!sp.sets_equal(&a, &a.complement()).unwrap());
        let u = sp.union(&a, &a.complement()).unwrap();
        assert_eq!(u.measure(), Rational::from(1));
    }

    #[test]
    fn translations_and_words() {
        let sp = z_space();
        let q = sp.register_cyclic("c4", 4).unwrap();
        let a = MeasurableSet::from_indices(&q, [0, 2]);
        let w = sp.source().parse_word("t t' t").unwrap();
        assert_eq!(a.translate_left(&w).body().to_vec(), vec![1, 3]);
        assert_eq!(a.translate_left(&Word::default()).body(), a.body());
        assert_eq!(a.invert().body(), a.body());
        assert!(sp.source().parse_word("u").is_err());
    }

    #[test]
    fn literals_and_registry() {
        let sp = MeasureSpace::new(FgGroup::free2());
        let n = sp
            .load_quotients(
                "# charts\nquotient s3 : S3 ; images a=(0 1), b=(1 2)\nquotient c2 : C2 ; images a=1, b=1\n",
                &[],
            )
            .unwrap();
        assert_eq!(n.len(), 2);
        let a = sp.parse_set("chart c2 ; elements {1}").unwrap();
        assert_eq!(a.measure(), Rational::new(1, 2));
        let c = sp.parse_set("chart s3 ; coset {(),(0 1 2),(0 2 1)} * a").unwrap();
        assert!(sp.sets_equal(&a, &c).unwrap());
        let bare = sp.parse_set("coset {()} * a b").unwrap();
        assert_eq!(bare.chart().name(), "s3");
        assert!(sp.parse_set("chart s3 ; coset {(0 1 2)} * a").is_err());
        assert!(sp.load_quotients("quotient x : C2 ; images a=1", &[]).is_err());
        assert!(matches!(
            sp.load_quotients("quotient y : C3 ; images a=0, b=0", &[]),
            Err(Error::NotSurjective)
        ));
    }

    #[test]
    fn charts_from_different_sources_do_not_mix() {
        let s1 = z_space();
        let s2 = z_space();
        let a = MeasurableSet::whole(&s1.register_cyclic("c2", 2).unwrap());
        let b = MeasurableSet::whole(&s2.register_cyclic("c2", 2).unwrap());
        assert_eq!(s1.union(&a, &b).unwrap_err(), Error::SourceMismatch);
    }
}
