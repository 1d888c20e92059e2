//! Verification suites and report rendering for the `qcurves` binary.

use std::cell::RefCell;
use std::collections::BTreeSet;
use std::fmt::Write as _;

use qcurves::cohring;
use qcurves::loci::{self, ConicKind, IncidenceGraph, ScrollCase};
use qcurves::quadric::{self, ParametrizedCurve, Space};
use qcurves::rep::{self, BasisExpr, Sl2Op};
use qcurves::tangent::{self, ComponentKind, TangentRow};
use qcurves::{rat, MultiPoly};
use serde::{Deserialize, Serialize};

pub const DEFAULT_FIXTURE: &str = include_str!("../fixtures/expected.toml");

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Suite {
    Lines,
    Conics,
    Cubics,
    Tables,
    Poincare,
    Ring,
    Example,
    Loci,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Lines,
        Suite::Conics,
        Suite::Cubics,
        Suite::Tables,
        Suite::Poincare,
        Suite::Ring,
        Suite::Example,
        Suite::Loci,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lines => "lines",
            Suite::Conics => "conics",
            Suite::Cubics => "cubics",
            Suite::Tables => "tables",
            Suite::Poincare => "poincare",
            Suite::Ring => "ring",
            Suite::Example => "example",
            Suite::Loci => "loci",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Md,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Item {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    pub paper_ref: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub items: Vec<Item>,
    pub status: Status,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct Entry {
    pub name: String,
    pub expected: String,
    #[serde(rename = "ref")]
    pub reference: String,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fixture {
    pub version: u32,
    #[serde(default)]
    pub lines: Vec<Entry>,
    #[serde(default)]
    pub conics: Vec<Entry>,
    #[serde(default)]
    pub cubics: Vec<Entry>,
    #[serde(default)]
    pub tables: Vec<Entry>,
    #[serde(default)]
    pub poincare: Vec<Entry>,
    #[serde(default)]
    pub ring: Vec<Entry>,
    #[serde(default)]
    pub example: Vec<Entry>,
    #[serde(default)]
    pub loci: Vec<Entry>,
}

impl Fixture {
    pub fn parse(text: &str) -> Result<Fixture, String> {
        let f: Fixture = toml::from_str(text).map_err(|e| e.to_string())?;
        if f.version != 1 {
            return Err(format!("unsupported fixture version {}", f.version));
        }
        Ok(f)
    }

    pub fn embedded() -> Fixture {
        Fixture::parse(DEFAULT_FIXTURE).expect("embedded fixture parses")
    }

    pub fn entries(&self, suite: Suite) -> &[Entry] {
        match suite {
            Suite::Lines => &self.lines,
            Suite::Conics => &self.conics,
            Suite::Cubics => &self.cubics,
            Suite::Tables => &self.tables,
            Suite::Poincare => &self.poincare,
            Suite::Ring => &self.ring,
            Suite::Example => &self.example,
            Suite::Loci => &self.loci,
            Suite::All => &[],
        }
    }
}

// ---------------------------------------------------------------- coverage

thread_local! {
    static COVERED: RefCell<BTreeSet<&'static str>> = const { RefCell::new(BTreeSet::new()) };
}

fn cover(op: &'static str) {
    COVERED.with(|c| c.borrow_mut().insert(op));
}

/// Operations invoked on this thread since the last call.
pub fn take_coverage() -> BTreeSet<&'static str> {
    COVERED.with(|c| std::mem::take(&mut *c.borrow_mut()))
}

// ---------------------------------------------------------------- suites

type Computed = Vec<(String, Result<String, String>)>;

struct Items(Computed);

impl Items {
    fn new() -> Self {
        Items(Vec::new())
    }

    fn push(&mut self, name: impl Into<String>, value: impl ToString) {
        self.0.push((name.into(), Ok(value.to_string())));
    }

    fn push_result<T: ToString, E: ToString>(&mut self, name: impl Into<String>, r: Result<T, E>) {
        self.0.push((
            name.into(),
            r.map(|v| v.to_string()).map_err(|e| e.to_string()),
        ));
    }
}

type SuiteResult = Result<Items, qcurves::Error>;

fn weights_text(w: &[i64]) -> String {
    w.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn lines_suite() -> SuiteResult {
    let mut out = Items::new();
    cover("symd_basis");
    cover("induced_basis");
    let v3 = rep::symd_basis(3);
    let w = rep::induced_basis(&BasisExpr::Wedge2(Box::new(BasisExpr::Basis(v3))))?;
    out.push("weights of W", weights_text(w.weights()));
    cover("sl2_operator");
    let relations = (0..=5).all(|d| {
        let e = rep::sl2_operator(Sl2Op::E, d);
        let f = rep::sl2_operator(Sl2Op::F, d);
        let h = rep::sl2_operator(Sl2Op::H, d);
        e.bracket(&f) == h
            && h.bracket(&e) == e.combine(&rat(2), &e, &rat(0))
            && h.bracket(&f) == f.combine(&rat(-2), &f, &rat(0))
    });
    out.push("sl2 relations d<=5", relations);
    cover("wedge2_operator_action");
    out.push_result("e on v1m3", rep::wedge2_operator_action(Sl2Op::E, 3, 1, -3));
    cover("invariant_hyperplane");
    out.push_result("invariant hyperplane", rep::invariant_hyperplane());
    cover("klein_form");
    out.push("Klein form", quadric::klein_form());
    cover("fixed_points");
    let fp = quadric::fixed_points(Space::Quadric)?;
    out.push(
        "fixed points of Q",
        fp.iter()
            .map(|p| format!("{}={}", p.label, p.point))
            .collect::<Vec<_>>()
            .join(" "),
    );
    let h = quadric::fixed_points(Space::Hyperplane)?;
    out.push(
        "fixed points of H",
        h.iter()
            .map(|p| format!("{}={}", p.label, p.point))
            .collect::<Vec<_>>()
            .join(" "),
    );

    cover("fixed_lines");
    let lines = loci::fixed_lines()?;
    out.push("count", lines.len());
    for l in &lines {
        out.push(
            format!("line ({})", l.tag),
            format!(
                "{},{} ({},{})",
                l.ends[0], l.ends[1], l.span_weights.0, l.span_weights.1
            ),
        );
    }
    cover("poly_eval_substitute");
    let klein = quadric::klein_form();
    let pullback = |l: &ParametrizedCurve| {
        let assignment = klein
            .vars()
            .iter()
            .cloned()
            .zip(l.coords().iter().cloned())
            .collect();
        klein.substitute(&assignment)
    };
    out.push_result("Klein on line (a)", pullback(&lines[0].curve));
    cover("on_quadric");
    for (a, b) in [(&fp[0], &fp[3]), (&fp[1], &fp[2])] {
        let l = ParametrizedCurve::line(&a.point, &b.point)?;
        let name = format!("line {}-{}", a.label, b.label);
        out.push_result(format!("{name} Klein pullback"), pullback(&l));
        out.push(format!("{name} on Q"), quadric::on_quadric(&l));
    }
    Ok(out)
}

fn conic_text(c: &loci::FixedConic) -> String {
    format!(
        "plane {} ({}) q={} {}",
        c.plane.labels().join(","),
        weights_text(c.plane.weights()),
        c.equation_weight,
        c.kind
    )
}

fn conics_suite() -> SuiteResult {
    let mut out = Items::new();
    cover("fixed_conics");
    let conics = loci::fixed_conics()?;
    out.push("count", conics.len());
    for c in &conics {
        out.push(format!("conic ({})", c.tag), conic_text(c));
    }
    let mut members = 0;
    for c in &conics {
        if c.ideal.contains(&quadric::klein_form())?
            && c.ideal.contains(&quadric::hyperplane_form())?
        {
            members += 1;
        }
    }
    out.push("ideals containing both forms of Q", members);
    let weights = quadric::coordinate_weights();
    let homogeneous = conics
        .iter()
        .filter(|c| {
            c.ideal
                .generators()
                .iter()
                .all(|g| g.torus_weight(&weights).is_some())
        })
        .count();
    out.push("weight-homogeneous ideals", homogeneous);
    let planes = loci::plane_section_ideals()?;
    let mut matched = 0;
    for c in &conics {
        let mut hits = 0;
        for (_, i) in &planes {
            if loci::same_ideal(i, &c.ideal)? {
                hits += 1;
            }
        }
        if hits == 1 {
            matched += 1;
        }
    }
    out.push("coordinate plane sections", planes.len());
    out.push("conics equal to one plane section", matched);
    let by_kind = |k: ConicKind| {
        conics
            .iter()
            .filter(|c| c.kind == k)
            .map(|c| c.tag.as_str())
            .collect::<Vec<_>>()
            .join(",")
    };
    out.push("double lines", by_kind(ConicKind::DoubleLine));
    out.push("pairs of lines", by_kind(ConicKind::PairOfLines));
    out.push("smooth conics", by_kind(ConicKind::Smooth));
    Ok(out)
}

fn census(g: &IncidenceGraph) -> Result<loci::CubicCensus, qcurves::Error> {
    cover("count_invariant_cubics");
    loci::count_invariant_cubics(g)
}

fn cubics_suite() -> SuiteResult {
    let mut out = Items::new();
    cover("incidence_graph");
    let g = loci::incidence_graph()?;
    // the raw counts are reported even if a class is off
    let raw = loci::census_counts(&g)?;
    out.push("reduced trees of three lines", raw.reduced_trees);
    out.push("smooth conic plus line", raw.conic_plus_line);
    out.push("reduced", raw.reduced());
    out.push("supported on a pair of lines", raw.pair_of_lines_supported);
    out.push("triple lines", raw.triple_lines);
    out.push("total degenerate", raw.total_degenerate());
    out.push("smooth families", raw.smooth_families);
    out.push("isolated", raw.isolated());
    cover("euler_characteristic");
    let kinds = std::iter::repeat_n(ComponentKind::IsolatedPoint, raw.isolated() as usize).chain(
        std::iter::repeat_n(ComponentKind::ProjectiveLine, raw.smooth_families as usize),
    );
    out.push("euler number", tangent::euler_characteristic(kinds));
    out.push_result("census check", census(&g).map(|_| "consistent"));

    cover("verify_twisted_cubic_family");
    let formal = loci::verify_twisted_cubic_family(None)?;
    out.push("family on Q (formal a)", formal.on_q);
    out.push("invariance certificate", formal.certificate);
    for a in [rat(1), rat(-2)] {
        out.push_result(
            format!("family on Q (a={a})"),
            loci::verify_twisted_cubic_family(Some(&a)).map(|c| c.on_q),
        );
    }
    out.push(
        "family rejects a=0",
        loci::verify_twisted_cubic_family(Some(&rat(0))).is_err(),
    );

    cover("scroll_fixed_families");
    for (name, case) in [("ii", ScrollCase::Ii), ("iii", ScrollCase::Iii)] {
        let groups = loci::scroll_fixed_families(case);
        let text = if groups.is_empty() {
            "none".to_string()
        } else {
            groups
                .iter()
                .map(|g| {
                    let zs: Vec<String> = g.coords.iter().map(|i| format!("z{i}")).collect();
                    format!("{} @ {}", zs.join(","), g.weight)
                })
                .collect::<Vec<_>>()
                .join("; ")
        };
        out.push(
            format!("scroll {name} weights"),
            weights_text(&case.weights()),
        );
        out.push(format!("scroll {name} families"), text);
        out.push(
            format!("scroll {name} minors homogeneous"),
            loci::scroll_minors_homogeneous(case),
        );
        out.push_result(
            format!("scroll {name} projection equivariant"),
            loci::scroll_projection_equivariant(case),
        );
    }
    cover("catalecticant_check");
    out.push_result("catalecticant minors vanish", loci::catalecticant_check());
    let mut perturbed = loci::scroll_parametrization();
    let v = perturbed[0].vars().clone();
    perturbed[0] = &perturbed[0] + &MultiPoly::parse(&v, "t1^3*u0")?;
    out.push_result(
        "perturbed parametrization vanishes",
        loci::catalecticant_vanishes(&perturbed),
    );

    let sections = loci::fixed_hyperplane_sections()?;
    out.push(
        "fixed hyperplane sections",
        sections
            .iter()
            .map(|s| {
                format!(
                    "{} {}",
                    s.tag,
                    if s.is_smooth() { "smooth" } else { "cone" }
                )
            })
            .collect::<Vec<_>>()
            .join(", "),
    );
    match loci::smooth_section_weights()? {
        Some((a, b)) => {
            out.push("weights of O(1,2)", &a);
            out.push("weights of O(2,1)", &b);
            out.push(
                "repeated weights on the smooth section",
                a.repeated().len() + b.repeated().len(),
            );
        }
        None => out.push_result(
            "weights of O(1,2)",
            Err::<String, _>("factor weights do not match"),
        ),
    }
    Ok(out)
}

fn row_text(r: &TangentRow) -> String {
    let blocks: Vec<String> = r.ambient_blocks.iter().map(ToString::to_string).collect();
    format!("{} | {} | {}", blocks.join(","), r.sections, r.delta)
}

fn line_rows() -> Result<Vec<TangentRow>, qcurves::Error> {
    cover("line_tangent_row");
    loci::fixed_lines()?
        .iter()
        .map(tangent::line_tangent_row)
        .collect()
}

fn conic_rows() -> Result<Vec<TangentRow>, qcurves::Error> {
    cover("conic_tangent_row");
    loci::fixed_conics()?
        .iter()
        .map(tangent::conic_tangent_row)
        .collect()
}

fn tables_suite() -> SuiteResult {
    let mut out = Items::new();
    for r in line_rows()? {
        out.push(format!("lines ({})", r.tag), row_text(&r));
        out.push(format!("lines ({}) moduli", r.tag), &r.moduli);
    }
    for r in conic_rows()? {
        out.push(format!("conics ({})", r.tag), row_text(&r));
        out.push(format!("conics ({}) moduli", r.tag), &r.moduli);
    }
    Ok(out)
}

fn poincare_suite() -> SuiteResult {
    let mut out = Items::new();
    cover("bb_poincare");
    cover("euler_characteristic");
    let s1: Vec<_> = line_rows()?.iter().map(TangentRow::component).collect();
    let s2: Vec<_> = conic_rows()?.iter().map(TangentRow::component).collect();
    let p1 = tangent::bb_poincare(&s1);
    let p2 = tangent::bb_poincare(&s2);
    cover("poincare_s3_from_bundle");
    let p3 = cohring::poincare_s3_from_bundle()?;
    out.push("S1", &p1);
    out.push("S2", &p2);
    out.push("S3", &p3);
    out.push(
        "euler S1",
        tangent::euler_characteristic(s1.iter().map(|c| c.kind)),
    );
    out.push(
        "euler S2",
        tangent::euler_characteristic(s2.iter().map(|c| c.kind)),
    );
    out.push("euler S3", p3.eval_at_one());
    out.push(
        "palindromic",
        p1.is_palindromic() && p2.is_palindromic() && p3.is_palindromic(),
    );
    out.push("empty component list", tangent::bb_poincare(&[]));
    Ok(out)
}

fn ring_suite() -> SuiteResult {
    let mut out = Items::new();
    cover("gr24_relations");
    let rel = cohring::gr24_relations();
    out.push(
        "Gr(2,4) relations",
        rel.generators()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("; "),
    );
    cover("hilbert_dim");
    out.push(
        "Gr(2,4) Hilbert function",
        weights_text(
            &rel.hilbert_function(5)
                .iter()
                .map(|&d| d as i64)
                .collect::<Vec<_>>(),
        ),
    );
    out.push_result(
        "c1*c2^2 mod relations",
        rel.normal_form(&MultiPoly::parse(&cohring::chow_vars(), "c1*c2^2")?),
    );
    cover("bundle_rank_arithmetic");
    out.push_result(
        "bundle rank",
        cohring::bundle_rank_arithmetic(5, 16).map(|r| r.rank),
    );
    out.push(
        "rank 16 - 2*8 rejected",
        cohring::bundle_rank_arithmetic(8, 16).is_err(),
    );
    let raw = cohring::raw_chern_classes()?;
    for d in 1..=3 {
        out.push(format!("c{d}(G) unreduced"), raw.piece(d));
    }
    cover("grothendieck_relation");
    let reduced = cohring::chern_classes()?;
    for (d, c) in reduced.iter().enumerate().skip(1) {
        out.push(format!("c{d}(G)"), c);
    }
    let relation = cohring::grothendieck_relation()?;
    out.push("Grothendieck relation", &relation);
    out.push(
        "matches the displayed relation",
        relation == cohring::expected_relation(),
    );
    cover("hilbert_series_s3");
    let h = cohring::hilbert_series_s3()?;
    out.push(
        "Hilbert series",
        weights_text(&h.iter().map(|&d| d as i64).collect::<Vec<_>>()),
    );
    out.push("Hilbert series sum", h.iter().sum::<usize>());
    out.push(
        "degree 10",
        cohring::ring_presentation()?.ideal.hilbert_dim(10),
    );
    Ok(out)
}

fn example_suite() -> SuiteResult {
    let mut out = Items::new();
    cover("zero_weight_chain");
    let z = tangent::zero_weight_chain()?;
    out.push("w0(f*T_P4)", z.w0_t_p4);
    out.push("w0(f*N)", z.w0_n);
    out.push("w0(f*T_Q)", z.w0_t_q);
    out.push("w0 of the moduli tangent space", z.w0_moduli);
    Ok(out)
}

fn loci_suite() -> SuiteResult {
    let mut out = Items::new();
    cover("incidence_graph");
    let g = loci::incidence_graph()?;
    for l in &g.lines {
        out.push(
            format!("line ({})", l.tag),
            format!("{} {}", l.points[0], l.points[1]),
        );
    }
    for c in &g.conics {
        let gens: Vec<String> = c
            .ideal
            .generators()
            .iter()
            .map(ToString::to_string)
            .collect();
        out.push(
            format!("conic ({})", c.tag),
            format!("<{}>", gens.join(", ")),
        );
    }
    for e in &g.edges {
        let witness = e
            .witness
            .as_ref()
            .map(|w| format!(" at {w}"))
            .unwrap_or_default();
        out.push(format!("{} {}", e.a, e.b), format!("{}{witness}", e.kind));
    }
    let c = census(&g)?;
    out.push(
        "census",
        format!(
            "{}+{}+{}+{}={}; isolated {}; families {}",
            c.reduced_trees,
            c.conic_plus_line,
            c.pair_of_lines_supported,
            c.triple_lines,
            c.total_degenerate(),
            c.isolated(),
            c.smooth_families
        ),
    );
    out.push(
        "reconciliation",
        format!(
            "{} = {} isolated + 2 x {} family endpoints",
            c.total_degenerate(),
            c.isolated(),
            c.smooth_families
        ),
    );
    Ok(out)
}

fn compute(suite: Suite) -> Computed {
    let r = match suite {
        Suite::Lines => lines_suite(),
        Suite::Conics => conics_suite(),
        Suite::Cubics => cubics_suite(),
        Suite::Tables => tables_suite(),
        Suite::Poincare => poincare_suite(),
        Suite::Ring => ring_suite(),
        Suite::Example => example_suite(),
        Suite::Loci => loci_suite(),
        Suite::All => unreachable!("expanded by the caller"),
    };
    match r {
        Ok(items) => items.0,
        Err(e) => vec![(suite.name().to_string(), Err(e.to_string()))],
    }
}

fn item(
    prefix: &str,
    name: &str,
    expected: &str,
    computed: Option<&Result<String, String>>,
    reference: &str,
) -> Item {
    let (text, ok) = match computed {
        Some(Ok(v)) => (v.clone(), v == expected),
        Some(Err(e)) => (format!("error: {e}"), false),
        None => ("(not computed)".to_string(), false),
    };
    Item {
        name: format!("{prefix}{name}"),
        expected: expected.to_string(),
        computed: text,
        status: if ok { Status::Pass } else { Status::Fail },
        paper_ref: reference.to_string(),
    }
}

/// Compare one suite against the fixture; returns false if any item failed.
/// Computed values without a fixture entry fail, so the fixture stays complete.
fn check(
    fixture: &Fixture,
    suite: Suite,
    prefix: &str,
    fail_fast: bool,
    items: &mut Vec<Item>,
) -> bool {
    let computed = compute(suite);
    let mut ok = true;
    let mut seen = BTreeSet::new();
    for e in fixture.entries(suite) {
        seen.insert(e.name.as_str());
        let c = computed.iter().find(|(n, _)| *n == e.name).map(|(_, r)| r);
        let it = item(prefix, &e.name, &e.expected, c, &e.reference);
        ok &= it.status == Status::Pass;
        items.push(it);
        if !ok && fail_fast {
            return false;
        }
    }
    for (name, r) in &computed {
        if !seen.contains(name.as_str()) {
            let mut it = item(prefix, name, "(no expected value)", Some(r), "");
            it.status = Status::Fail;
            items.push(it);
            ok = false;
            if fail_fast {
                return false;
            }
        }
    }
    ok
}

/// Run one suite, or all of them into a single report with prefixed names.
pub fn run(suite: Suite, fixture: &Fixture, fail_fast: bool) -> Report {
    let mut items = Vec::new();
    if suite == Suite::All {
        for s in Suite::EACH {
            let ok = check(fixture, s, &format!("{}.", s.name()), fail_fast, &mut items);
            if !ok && fail_fast {
                break;
            }
        }
    } else {
        check(fixture, suite, "", fail_fast, &mut items);
    }
    let status = if !items.is_empty() && items.iter().all(|i| i.status == Status::Pass) {
        Status::Pass
    } else {
        Status::Fail
    };
    Report {
        suite: suite.name().to_string(),
        items,
        status,
    }
}

// ---------------------------------------------------------------- rendering

pub fn render_json(r: &Report) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("report serializes");
    s.push('\n');
    s
}

fn cell(s: &str) -> String {
    s.replace('|', "\\|")
}

fn tangent_tables() -> Result<String, qcurves::Error> {
    let mut s = String::new();
    s.push_str("## Weights of the tangent space at fixed lines\n\n");
    s.push_str("| Type | Weights of T Gr(2,W1) | Weights of H0(O_L(2)) | Negative weights of T S1(Q) |\n|---|---|---|---|\n");
    for r in tangent::s1_rows()? {
        let _ = writeln!(
            s,
            "| ({}) | {} | {} | {} |",
            r.tag,
            r.ambient(),
            r.sections,
            r.delta
        );
    }
    s.push_str("\n## Weights of the tangent space at fixed conics\n\n");
    s.push_str("| Type | Weights of T P(Sym2(U^v)) | Weights of H0(O_C(2)) | Negative weights of T S2(Q) |\n|---|---|---|---|\n");
    for r in tangent::s2_rows()? {
        let blocks: Vec<String> = r.ambient_blocks.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            s,
            "| ({}) | {} | {} | {} |",
            r.tag,
            blocks.join(","),
            r.sections,
            r.delta
        );
    }
    s.push('\n');
    Ok(s)
}

pub fn render_md(r: &Report) -> String {
    let mut s = format!("# {}\n\n", r.suite);
    if r.suite == Suite::Tables.name() {
        match tangent_tables() {
            Ok(t) => s.push_str(&t),
            Err(e) => {
                let _ = writeln!(s, "tables unavailable: {e}\n");
            }
        }
        s.push_str("## Checks\n\n");
    }
    s.push_str("| check | expected | computed | status | reference |\n|---|---|---|---|---|\n");
    for i in &r.items {
        let status = match i.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
        };
        let _ = writeln!(
            s,
            "| {} | {} | {} | {} | {} |",
            cell(&i.name),
            cell(&i.expected),
            cell(&i.computed),
            status,
            cell(&i.paper_ref)
        );
    }
    let _ = writeln!(s, "\nstatus: {}", if r.passed() { "pass" } else { "FAIL" });
    s
}

pub fn render(r: &Report, format: Format) -> String {
    match format {
        Format::Json => render_json(r),
        Format::Md => render_md(r),
    }
}
