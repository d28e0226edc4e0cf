use crate::args::{Cli, Cmd, ConstructKind, DemoCmd, GroupCmd, LatticeCmd, MeasureCmd, ProductFreeCmd};
use crate::output::Report;
use coset_growth::catalog::{self, CatalogEntry};
use coset_growth::constructions as cons;
use coset_growth::growth;
use coset_growth::measure::{parse_element, FgGroup, MeasurableSet, MeasureSpace};
use coset_growth::metric;
use coset_growth::oracle::{self, Domain, SweepConfig, SweepReport};
use coset_growth::product_free as pf;
use coset_growth::subgroup::{self, enumerate_subgroups, Subgroup};
use coset_growth::{fmt_ratio, ElementSet, Error, GroupTable, Rational, Result};
use std::sync::Arc;

const DEFAULT_LIST_ORDER: usize = 60;
const DEFAULT_VERIFY_ORDER: usize = 12;
const PAIR_ORDER: usize = 8;

struct Ctx<'a> {
    cli: &'a Cli,
    extra: Vec<CatalogEntry>,
}

impl Ctx<'_> {
    fn group(&self, name: &str) -> Result<Arc<GroupTable>> {
        catalog::resolve(name, &self.extra)
    }

    /// Built-in catalog plus every extra group, up to `max`.
    fn catalog(&self, max: usize) -> Vec<CatalogEntry> {
        let mut all = catalog::standard(max);
        all.extend(self.extra.iter().filter(|e| e.group.order() <= max).cloned());
        all
    }
}

pub fn run(cli: &Cli) -> Result<Report> {
    let mut extra = Vec::new();
    for path in &cli.catalog {
        let text = read(path)?;
        extra.extend(catalog::parse_catalog(&text)?);
    }
    let ctx = Ctx { cli, extra };
    match &cli.cmd {
        Cmd::Group(c) => group_cmd(&ctx, c),
        Cmd::Measure { source, op } => measure_cmd(&ctx, source, op),
        Cmd::Grow { group, set, cap } => grow(&ctx, group, set, *cap),
        Cmd::Ruzsa { group, a, b } => ruzsa(&ctx, group, a, b),
        Cmd::Mu { group, r, s, oracle } => mu(&ctx, group, *r, *s, *oracle),
        Cmd::Construct { kind, target, verify } => construct(&ctx, *kind, target, *verify),
        Cmd::Productfree(c) => productfree(&ctx, c),
        Cmd::Lattice(c) => lattice(&ctx, c),
        Cmd::Verify { target, group } => verify(&ctx, target, group.as_deref()),
        Cmd::Demo(DemoCmd::Zhalf { chart }) => zhalf(*chart),
    }
}

fn read(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
}

/// `{x, y, ...}` where each item is an element name, an index, or a word in
/// the group's generators `g0 g1' ...`.
pub fn parse_subset(g: &GroupTable, text: &str) -> Result<ElementSet> {
    let inner = text
        .trim()
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| Error::InvalidArgument(format!("expected `{{...}}`, got `{text}`")))?;
    let mut out = g.empty_set();
    let mut depth = 0i32;
    let mut item = String::new();
    let mut items = Vec::new();
    for ch in inner.chars() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if ch == ',' && depth == 0 {
            items.push(std::mem::take(&mut item));
        } else {
            item.push(ch);
        }
    }
    items.push(item);
    for it in items.iter().map(|s| s.trim()).filter(|s| !s.is_empty()) {
        let x = match parse_element(g, it) {
            Some(x) => x,
            None => parse_generator_word(g, it)?,
        };
        out.insert(x);
    }
    Ok(out)
}

fn parse_generator_word(g: &GroupTable, text: &str) -> Result<usize> {
    let mut word = Vec::new();
    for tok in text.split_whitespace() {
        let (body, inv) = match tok.strip_suffix('\'') {
            Some(b) => (b, true),
            None => (tok, false),
        };
        let i: usize = body
            .strip_prefix('g')
            .and_then(|d| d.parse().ok())
            .filter(|&i| i < g.generators().len())
            .ok_or_else(|| Error::UnknownName(text.to_string()))?;
        word.push((i, inv));
    }
    g.eval_word(&word)
}

fn yes(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn group_cmd(ctx: &Ctx, c: &GroupCmd) -> Result<Report> {
    match c {
        GroupCmd::Info { group } => {
            let g = ctx.group(group)?;
            let mut r = Report::new("group info", &["group", "order", "abelian", "cyclic", "perfect", "subgroups", "normal", "centre", "derived", "classes"]);
            let lat = enumerate_subgroups(&g)?;
            r.row(vec![
                group.clone(),
                g.order().to_string(),
                yes(g.is_abelian()),
                yes(g.is_cyclic()),
                yes(subgroup::is_perfect(&g)),
                lat.len().to_string(),
                lat.normal_subgroups(&g).count().to_string(),
                subgroup::centre(&g).order().to_string(),
                subgroup::derived_subgroup(&g).order().to_string(),
                pf::class_representatives(&g).len().to_string(),
            ]);
            Ok(r)
        }
        GroupCmd::List => {
            let mut r = Report::new("group list", &["group", "order", "abelian"]);
            for e in ctx.catalog(ctx.cli.max_order.unwrap_or(DEFAULT_LIST_ORDER)) {
                r.row(vec![e.name.clone(), e.group.order().to_string(), yes(e.group.is_abelian())]);
            }
            Ok(r)
        }
        GroupCmd::Elements { group } => {
            let g = ctx.group(group)?;
            let mut r = Report::new("group elements", &["index", "name", "order", "inverse"]);
            for x in 0..g.order() {
                r.row(vec![x.to_string(), g.name(x).to_string(), g.element_order(x).to_string(), g.inv(x).to_string()]);
            }
            Ok(r)
        }
        GroupCmd::Table { group } => {
            let g = ctx.group(group)?;
            let cols: Vec<String> = std::iter::once("*".to_string()).chain((0..g.order()).map(|x| x.to_string())).collect();
            let cols: Vec<&str> = cols.iter().map(|s| s.as_str()).collect();
            let mut r = Report::new("group table", &cols);
            for x in 0..g.order() {
                r.row(std::iter::once(x.to_string()).chain(g.row(x).iter().map(|y| y.to_string())).collect());
            }
            Ok(r)
        }
    }
}

fn measure_space(ctx: &Ctx, source: &str) -> Result<MeasureSpace> {
    let src = match source {
        "z" | "Z" => FgGroup::integers(),
        "f2" | "F2" => FgGroup::free2(),
        names => FgGroup::new(names.split(',').map(|s| s.trim().to_string()))?,
    };
    let space = MeasureSpace::new(src);
    if let Some(path) = &ctx.cli.quotients {
        space.load_quotients(&read(path)?, &ctx.extra)?;
    }
    Ok(space)
}

/// Over a rank-1 source, charts named `C<n>` are registered on first use.
fn parse_measurable(space: &MeasureSpace, text: &str) -> Result<MeasurableSet> {
    if let Some(rest) = text.trim().strip_prefix("chart") {
        if let Some((name, _)) = rest.split_once(';') {
            let name = name.trim();
            if space.chart(name).is_err() && space.source().rank() == 1 {
                if let Some(n) = name.strip_prefix('C').and_then(|d| d.parse::<usize>().ok()) {
                    space.register_cyclic(name, n)?;
                }
            }
        }
    }
    space.parse_set(text)
}

fn measure_row(r: &mut Report, label: &str, s: &MeasurableSet) {
    r.row(vec![label.to_string(), s.to_string(), fmt_ratio(&s.measure())]);
}

fn measure_cmd(ctx: &Ctx, source: &str, op: &MeasureCmd) -> Result<Report> {
    let space = measure_space(ctx, source)?;
    let mut r = Report::new("measure", &["item", "set", "measure"]);
    match op {
        MeasureCmd::Of { set } => {
            let s = parse_measurable(&space, set)?;
            measure_row(&mut r, "set", &s);
        }
        MeasureCmd::Square { set } => {
            let s = parse_measurable(&space, set)?;
            measure_row(&mut r, "set", &s);
            measure_row(&mut r, "square", &s.square());
        }
        MeasureCmd::Complement { set } => {
            let s = parse_measurable(&space, set)?;
            measure_row(&mut r, "complement", &s.complement());
        }
        MeasureCmd::Product { a, b } | MeasureCmd::Union { a, b } | MeasureCmd::Intersect { a, b } => {
            let (x, y) = (parse_measurable(&space, a)?, parse_measurable(&space, b)?);
            let (label, z) = match op {
                MeasureCmd::Product { .. } => ("product", space.product(&x, &y)?),
                MeasureCmd::Union { .. } => ("union", space.union(&x, &y)?),
                _ => ("intersection", space.intersect(&x, &y)?),
            };
            measure_row(&mut r, "a", &x);
            measure_row(&mut r, "b", &y);
            measure_row(&mut r, label, &z);
        }
        MeasureCmd::Charts => {
            let mut c = Report::new("measure charts", &["chart", "target_order", "images"]);
            for q in space.charts() {
                let imgs: Vec<&str> = q.images().iter().map(|&x| q.target().name(x)).collect();
                c.row(vec![q.name().to_string(), q.order().to_string(), imgs.join(",")]);
            }
            return Ok(c);
        }
        MeasureCmd::Alpha => {
            let mut c = Report::new("measure alpha", &["chart", "alpha_lower_bound", "optimal_in_chart", "set"]);
            if let Some((name, best)) = pf::chart_alpha_lower_bound(&space) {
                let q = space.chart(&name)?;
                c.row(vec![name, fmt_ratio(&best.alpha), yes(best.optimal), q.target().format_set(&best.set)]);
            }
            c.notes.push("supremum over registered charts only: a lower bound".into());
            return Ok(c);
        }
    }
    Ok(r)
}

fn grow(ctx: &Ctx, group: &str, set: &str, cap: Option<usize>) -> Result<Report> {
    let g = ctx.group(group)?;
    let a = parse_subset(&g, set)?;
    if a.is_empty() {
        return Err(Error::InvalidArgument("empty set".into()));
    }
    let t = growth::power_trace(&g, &a, cap);
    let mut r = Report::new("grow", &["n", "size"]);
    for (i, s) in t.sizes.iter().enumerate() {
        r.row(vec![(i + 1).to_string(), s.to_string()]);
    }
    match (&t.stabilization_index, &t.terminal_witness) {
        (Some(n), Some(w)) => r.notes.push(format!(
            "stable at n={n}: A^n = gH = Hg with g={} |H|={}",
            g.name(w.g),
            w.h.order()
        )),
        (Some(n), None) => r.notes.push(format!("stable at n={n}")),
        _ => r.notes.push("not stable within cap".into()),
    }
    let e = growth::expands_to_group(&g, &a);
    r.notes.push(match e.power {
        Some(p) => format!("A^{p} = G"),
        None => format!(
            "never fills G: A inside a left right coset of a subgroup of order {}",
            e.witness.map(|w| w.h.order()).unwrap_or(0)
        ),
    });
    Ok(r)
}

fn ruzsa(ctx: &Ctx, group: &str, a: &str, b: &str) -> Result<Report> {
    let g = ctx.group(group)?;
    let (a, b) = (parse_subset(&g, a)?, parse_subset(&g, b)?);
    if a.is_empty() || b.is_empty() {
        return Err(Error::InvalidArgument("empty set".into()));
    }
    let c = growth::ruzsa_counts(&g, &a, &b);
    let v = c.value::<Rational>();
    let mut r = Report::new("ruzsa", &["quantity", "exact", "log"]);
    r.row(vec!["|A|".into(), c.a.to_string(), String::new()]);
    r.row(vec!["|B|".into(), c.b.to_string(), String::new()]);
    r.row(vec!["|AB^-1|".into(), c.ab_inv.to_string(), String::new()]);
    r.row(vec!["|A^-1B|".into(), c.a_inv_b.to_string(), String::new()]);
    r.row(vec!["left_sq".into(), fmt_ratio(&v.left_sq), format!("{:.6}", v.left_log())]);
    r.row(vec!["right_sq".into(), fmt_ratio(&v.right_sq), format!("{:.6}", v.right_log())]);
    r.row(vec!["double".into(), fmt_ratio(&v.double_mult), format!("{:.6}", v.double_log())]);
    if let Some(w) = growth::ruzsa_zero_left(&g, &a, &b) {
        r.notes.push(format!("left distance zero: A = {}H, B = {}H, |H|={}", g.name(w.g), g.name(w.gamma), w.h.order()));
    }
    if growth::ruzsa_zero_double(&g, &a, &b).is_some() {
        r.notes.push("double distance zero".into());
    }
    Ok(r)
}

fn mu(ctx: &Ctx, group: &str, rr: usize, s: usize, run_oracle: bool) -> Result<Report> {
    let g = ctx.group(group)?;
    let mut r = Report::new("mu", &["group", "r", "s", "formula", "oracle", "a", "b"]);
    let formula = if g.is_abelian() { Some(growth::mu_abelian(&g, rr, s)?) } else { None };
    let found = if run_oracle || formula.is_none() {
        Some(oracle::min_product_size(&g, rr, s, ctx.cli.budget)?)
    } else {
        None
    };
    r.row(vec![
        group.to_string(),
        rr.to_string(),
        s.to_string(),
        formula.map_or("-".into(), |f| f.to_string()),
        found.as_ref().map_or("-".into(), |m| m.value.to_string()),
        found.as_ref().map_or("-".into(), |m| g.format_set(&m.a)),
        found.as_ref().map_or("-".into(), |m| g.format_set(&m.b)),
    ]);
    if let (Some(f), Some(m)) = (formula, &found) {
        r.failed = f != m.value;
    }
    Ok(r)
}

const CONSTRUCT_COLUMNS: &[&str] = &["group", "kind", "size", "square_size", "missing_count", "set", "missing", "verified"];

fn construct_row(r: &mut Report, g: &GroupTable, group: &str, kind: &str, s: &ElementSet, verified: Option<bool>) {
    let sq = g.product_set(s, s);
    let missing = sq.complement();
    r.row(vec![
        group.to_string(),
        kind.to_string(),
        s.count().to_string(),
        sq.count().to_string(),
        missing.count().to_string(),
        g.format_set(s),
        g.format_set(&missing),
        verified.map_or("-".into(), yes),
    ]);
    if verified == Some(false) {
        r.failed = true;
    }
}

fn construct(ctx: &Ctx, kind: ConstructKind, target: &str, verify: bool) -> Result<Report> {
    let mut r = Report::new("construct", CONSTRUCT_COLUMNS);
    let check = |ok: bool| verify.then_some(ok);
    match kind {
        ConstructKind::HalfEven => {
            let g = ctx.group(target)?;
            let w = cons::half_set_even(&g)?;
            construct_row(&mut r, &g, target, "half-even", &w.s, check(w.holds(&g)));
            r.notes.push(format!("g={} m={} missing>={}", g.name(w.g), w.m, w.m.div_ceil(2)));
        }
        ConstructKind::HalfOdd => {
            let g = ctx.group(target)?;
            let s = cons::half_set_odd(&g)?;
            let ok = 2 * s.count() + 1 == g.order() && !g.product_set(&s, &s).contains(0);
            construct_row(&mut r, &g, target, "half-odd", &s, check(ok));
        }
        ConstructKind::ExactOdd => {
            let g = ctx.group(target)?;
            let d = cons::exact_doubling_odd_traced(&g)?;
            let k = (g.order() - 1) / 2;
            let ok = d.set.count() == k && g.product_set(&d.set, &d.set).count() == 2 * k;
            construct_row(&mut r, &g, target, "exact-odd", &d.set, check(ok));
            r.notes.push(format!("route {:?}", d.route));
        }
        ConstructKind::SevenQuarters => {
            let g = ctx.group(target)?;
            let s = cons::seven_quarters_set(&g)?;
            let sq = g.product_set(&s, &s);
            let ok = 4 * sq.count() <= 7 * s.count() && !cons::is_coset(&g, &sq);
            construct_row(&mut r, &g, target, "seven-quarters", &s, check(ok));
        }
        ConstructKind::Hypercube => {
            let d: usize = target
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("hypercube rank `{target}`")))?;
            let (g, b) = cons::hypercube_set(d)?;
            let sq = g.product_set(&b, &b).count();
            let ok = b.count() == 1 << (d - 1) && sq == (1 << d) - 1;
            construct_row(&mut r, &g, &format!("C2^{d}"), "hypercube", &b, check(ok));
        }
        ConstructKind::Pullback => {
            let g = ctx.group(target)?;
            let p = cons::pullback_2group(&g)?;
            let expected = Rational::from(2) - Rational::new(1, 1 << (p.rank - 1));
            construct_row(&mut r, &g, target, "pullback", &p.set, check(p.ratio(&g) == expected));
            r.notes.push(format!("rank={} kernel={} ratio={}", p.rank, p.kernel.order(), fmt_ratio(&p.ratio(&g))));
        }
    }
    Ok(r)
}

fn productfree(ctx: &Ctx, c: &ProductFreeCmd) -> Result<Report> {
    let mut r = Report::new("productfree", &["group", "size", "alpha", "optimal", "set"]);
    match c {
        ProductFreeCmd::Max { group } => {
            let g = ctx.group(group)?;
            let m = pf::max_product_free(&g);
            r.row(vec![group.clone(), m.size.to_string(), fmt_ratio(&m.alpha), yes(m.optimal), g.format_set(&m.set)]);
        }
        ProductFreeCmd::Check { group, set } => {
            let g = ctx.group(group)?;
            let s = parse_subset(&g, set)?;
            let mut c = Report::new("productfree check", &["group", "size", "product_free", "set"]);
            c.row(vec![group.clone(), s.count().to_string(), yes(pf::is_product_free(&g, &s)), g.format_set(&s)]);
            return Ok(c);
        }
        ProductFreeCmd::Pullback { group, normal, set } => {
            let g = ctx.group(group)?;
            let n = Subgroup::from_members(&g, parse_subset(&g, normal)?)
                .ok_or_else(|| Error::InvalidArgument("normal subgroup list is not a subgroup".into()))?;
            let (q, map) = subgroup::quotient(&g, &n)?;
            let s = parse_subset(&q, set)?;
            let p = pf::pullback_product_free(&map, &q, &s)?;
            let alpha_q = Rational::new(s.count() as i64, q.order() as i64);
            let alpha = Rational::new(p.count() as i64, g.order() as i64);
            r.row(vec![format!("{group}/N"), s.count().to_string(), fmt_ratio(&alpha_q), "-".into(), q.format_set(&s)]);
            r.row(vec![group.clone(), p.count().to_string(), fmt_ratio(&alpha), "-".into(), g.format_set(&p)]);
            r.failed = alpha != alpha_q || !pf::is_product_free(&g, &p);
        }
    }
    Ok(r)
}

fn lattice(ctx: &Ctx, c: &LatticeCmd) -> Result<Report> {
    match c {
        LatticeCmd::Graph { group } => {
            let g = ctx.group(group)?;
            let (_, graph) = metric::build_graph(&g)?;
            let mut r = Report::new("lattice graph", &["kind", "id_or_upper", "order_or_lower", "members_or_index"]);
            for v in &graph.vertices {
                let m: Vec<String> = v.members.iter().map(|x| x.to_string()).collect();
                r.row(vec!["vertex".into(), v.id.to_string(), v.order.to_string(), format!("{{{}}}", m.join(","))]);
            }
            for e in &graph.edges {
                r.row(vec!["edge".into(), e.upper.to_string(), e.lower.to_string(), e.index.to_string()]);
            }
            r.json = Some(serde_json::to_value(&graph).expect("graph json"));
            r.dot = Some(graph.to_dot(None));
            Ok(r)
        }
        LatticeCmd::Geodesic { group, a, b } => {
            let g = ctx.group(group)?;
            let (lat, graph) = metric::build_graph(&g)?;
            if *a >= lat.len() || *b >= lat.len() {
                return Err(Error::InvalidArgument(format!("vertex ids run 0..{}", lat.len())));
            }
            let path = metric::geodesic(&lat, &graph, *a, *b);
            let weight = graph.path_weight(&path).expect("path follows edges");
            let e = metric::e_distance(lat.get(*a), lat.get(*b));
            let mut r = Report::new("lattice geodesic", &["a", "b", "path", "weight", "e"]);
            let p: Vec<String> = path.iter().map(|v| v.to_string()).collect();
            r.row(vec![a.to_string(), b.to_string(), p.join(","), weight.to_string(), e.to_string()]);
            r.failed = weight != e;
            Ok(r)
        }
        LatticeCmd::Action { group } => {
            let g = ctx.group(group)?;
            let (lat, graph) = metric::build_graph(&g)?;
            let a = metric::conjugation_action(&g, &lat);
            let mut r = Report::new("lattice action", &["element", "permutation"]);
            for (x, p) in a.permutations.iter().enumerate() {
                let p: Vec<String> = p.iter().map(|v| v.to_string()).collect();
                r.row(vec![g.name(x).to_string(), p.join(",")]);
            }
            let names = |xs: &[usize]| g.format_set(&g.set_of(xs.iter().copied()));
            r.notes.push(format!("kernel {}", names(&a.kernel)));
            r.notes.push(format!("faithful {}", yes(a.faithful)));
            r.notes.push(format!("centre {}", names(&a.centre)));
            r.notes.push(format!("second centre {}", names(&a.second_centre)));
            r.notes.push(format!("orbits {}", a.orbits.len()));
            r.json = Some(serde_json::to_value(&a).expect("action json"));
            r.dot = Some(graph.to_dot(Some(&a)));
            Ok(r)
        }
    }
}

/// Predicates run by `verify all`, with their domains and order limits.
fn suite(max: usize) -> Vec<(&'static str, usize)> {
    let single = max.min(DEFAULT_VERIFY_ORDER);
    let pair = max.min(PAIR_ORDER);
    oracle::predicates()
        .into_iter()
        .filter(|p| !matches!(p.id, "always-false" | "half-self-distance"))
        .map(|p| {
            let limit = match p.default_domain() {
                Domain::Sets | Domain::SetsOfSize(_) => single,
                _ => pair,
            };
            (p.id, limit)
        })
        .collect()
}

fn verify(ctx: &Ctx, target: &str, group: Option<&str>) -> Result<Report> {
    let cfg = SweepConfig {
        budget: ctx.cli.budget,
        ..SweepConfig::default()
    };
    if target == "list" {
        let mut r = Report::new("verify list", &["predicate", "domain", "groups", "about"]);
        for p in oracle::predicates() {
            r.row(vec![p.id.into(), p.default_domain().describe(), p.scope.describe().into(), p.about.into()]);
        }
        return Ok(r);
    }
    let max = ctx.cli.max_order.unwrap_or(DEFAULT_VERIFY_ORDER);
    let plan: Vec<(&str, usize)> = if target == "all" {
        suite(max)
    } else {
        vec![(oracle::predicate(target)?.id, max.min(DEFAULT_VERIFY_ORDER))]
    };
    let groups: Vec<(String, Arc<GroupTable>)> = match group {
        Some(name) => vec![(name.to_string(), ctx.group(name)?)],
        None => ctx.catalog(max).into_iter().map(|e| (e.name, e.group)).collect(),
    };
    let mut reports: Vec<SweepReport> = Vec::new();
    for (id, limit) in plan {
        let p = oracle::predicate(id)?;
        for (name, g) in &groups {
            if group.is_none() && g.order() > limit {
                continue;
            }
            if group.is_none() && !p.scope.admits(g) {
                continue;
            }
            reports.push(oracle::sweep(&p, g, name, p.default_domain(), cfg)?);
        }
    }
    let mut r = Report::new("verify", &SweepReport::tsv_header().split('\t').collect::<Vec<_>>());
    for rep in &reports {
        r.row(rep.tsv_row().split('\t').map(String::from).collect());
        for ce in &rep.counterexamples {
            let sets: Vec<String> = ce
                .iter()
                .map(|s| format!("{{{}}}", s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
                .collect();
            r.notes.push(format!("counterexample {} {} {}", rep.group, rep.predicate, sets.join(" ")));
        }
    }
    r.failed = reports.iter().any(|x| !x.passed());
    r.json = Some(serde_json::to_value(&reports).expect("reports json"));
    Ok(r)
}

/// A half-set of `C_n` read over the integers: measure exactly 1/2 with a
/// square of measure at most `1 - 1/n`.
fn zhalf(n: usize) -> Result<Report> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("chart size must be even and at least 2, got {n}")));
    }
    let space = MeasureSpace::new(FgGroup::integers());
    let chart = space.register_cyclic(&format!("C{n}"), n)?;
    let w = cons::half_set_even(chart.target())?;
    let s = MeasurableSet::new(chart, w.s)?;
    let sq = s.square();
    let bound = Rational::from(1) - Rational::new(1, n as i64);
    let ok = s.measure() == Rational::new(1, 2) && sq.measure() <= bound;
    let mut r = Report::new("demo zhalf", &["chart", "set", "measure", "square_measure", "bound", "holds"]);
    r.row(vec![
        format!("C{n}"),
        s.to_string(),
        fmt_ratio(&s.measure()),
        fmt_ratio(&sq.measure()),
        fmt_ratio(&bound),
        yes(ok),
    ]);
    r.failed = !ok;
    Ok(r)
}
