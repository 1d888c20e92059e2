//! Torus-fixed curves of degree at most three on `Q`.
//!
//! Lines and conics are enumerated from the fixed points and checked against
//! the equations of `Q`; their incidences are recomputed from coordinates and
//! drive the count of fixed degenerate cubics.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ideal::GradedIdeal;
use crate::linalg;
use crate::poly::{var_list, MultiPoly, VarList};
use crate::quadric::{
    self, coordinate_vars, coordinate_weights, klein_form, FixedPoint, ParametrizedCurve,
    PlueckerPoint, QuadricMember, Space,
};
use crate::rep::{WeightMultiset, WeightedBasis};
use crate::{rat, Rational};

/// Number of torus-fixed points on the projectivized extension space of a
/// non-reduced cubic structure. The extension space is two-dimensional with
/// distinct weights, so its projectivization has two fixed points.
pub const NONREDUCED_MULTIPLIER: u64 = 2;

// ---------------------------------------------------------------- lines

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedLine {
    pub tag: String,
    /// Labels of the two fixed points spanning the line.
    pub ends: [String; 2],
    pub span_weights: (i64, i64),
    pub points: [PlueckerPoint; 2],
    pub curve: ParametrizedCurve,
}

impl FixedLine {
    pub fn span(&self) -> Result<WeightedBasis> {
        WeightedBasis::new(
            self.ends.clone(),
            vec![self.span_weights.0, self.span_weights.1],
        )
    }
}

/// Coordinate lines through pairs of fixed points of `Q` that lie on `Q`,
/// tagged `a, b, c, d` in enumeration order.
pub fn fixed_lines() -> Result<Vec<FixedLine>> {
    let pts = quadric::fixed_points(Space::Quadric)?;
    let mut out = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let curve = ParametrizedCurve::line(&pts[i].point, &pts[j].point)?;
            if !curve.on_quadric() {
                continue;
            }
            let tag = char::from(b'a' + out.len() as u8).to_string();
            out.push(FixedLine {
                tag,
                ends: [pts[i].label.clone(), pts[j].label.clone()],
                span_weights: (pts[i].weight, pts[j].weight),
                points: [pts[i].point.clone(), pts[j].point.clone()],
                curve,
            });
        }
    }
    if out.len() != 4 {
        return Err(Error::Consistency(format!(
            "found {} fixed lines, expected 4",
            out.len()
        )));
    }
    Ok(out)
}

// ---------------------------------------------------------------- conics

/// The ten fixed conic ideals, verbatim.
pub const CONIC_IDEALS: [(&str, [&str; 4]); 10] = [
    ("1-a", ["v1m3", "vm1m3", "v3m3 - 3*v1m1", "v3m3*v1m1"]),
    ("1-b", ["v3m1", "vm1m3", "v3m3 - 3*v1m1", "v3m3*v1m1"]),
    ("1-c", ["v31", "v1m3", "v3m3 - 3*v1m1", "v3m3*v1m1"]),
    ("1-d", ["v31", "v3m1", "v3m3 - 3*v1m1", "v3m3*v1m1"]),
    ("2-a", ["vm1m3", "v3m3", "v1m1", "v3m1*v1m3"]),
    ("2-b", ["v1m3", "v3m3", "v1m1", "v31*vm1m3"]),
    ("2-c", ["v3m1", "v3m3", "v1m1", "v31*vm1m3"]),
    ("2-d", ["v31", "v3m3", "v1m1", "v3m1*v1m3"]),
    (
        "3-a",
        ["v31", "vm1m3", "v3m3 - 3*v1m1", "v3m1*v1m3 - v3m3*v1m1"],
    ),
    (
        "3-b",
        ["v3m1", "v1m3", "v3m3 - 3*v1m1", "v31*vm1m3 + v3m3*v1m1"],
    ),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConicKind {
    DoubleLine,
    PairOfLines,
    Smooth,
}

impl fmt::Display for ConicKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConicKind::DoubleLine => "double-line",
            ConicKind::PairOfLines => "pair-of-lines",
            ConicKind::Smooth => "smooth",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedConic {
    pub tag: String,
    pub ideal: GradedIdeal,
    /// Weight basis of the plane `U_C ⊂ W_1`, labelled by fixed points.
    pub plane: WeightedBasis,
    pub plane_points: Vec<PlueckerPoint>,
    /// The quadric generator restricted to the plane, in the dual coordinates
    /// `y0, y1, y2` of `plane`.
    pub equation: MultiPoly,
    /// Weight of `equation` as an element of `Sym²(U_C^∨)`.
    pub equation_weight: i64,
    pub kind: ConicKind,
}

fn plane_vars() -> VarList {
    var_list(&["y0", "y1", "y2"])
}

/// Pull a polynomial on `P^5` back to the span of `points` with coordinates
/// `y0, y1, …`.
pub fn restrict_to_span(
    p: &MultiPoly,
    points: &[PlueckerPoint],
    vars: &VarList,
) -> Result<MultiPoly> {
    let ys: Vec<MultiPoly> = vars
        .iter()
        .map(|v| MultiPoly::var(vars, v))
        .collect::<Result<_>>()?;
    let mut assignment = BTreeMap::new();
    for (k, name) in p.vars().iter().enumerate() {
        let mut img = MultiPoly::zero(vars);
        for (pt, y) in points.iter().zip(&ys) {
            img = &img + &y.scale(&pt.coords()[k]);
        }
        assignment.insert(name.clone(), img);
    }
    p.substitute(&assignment)
}

/// Rank of a quadratic form.
pub fn quadratic_rank(q: &MultiPoly) -> usize {
    let n = q.vars().len();
    let mut m = vec![vec![Rational::zero(); n]; n];
    for (mono, c) in q.terms() {
        let idx: Vec<usize> = (0..n)
            .flat_map(|i| std::iter::repeat_n(i, mono.0[i] as usize))
            .collect();
        if let [i, j] = idx[..] {
            if i == j {
                m[i][i] += c;
            } else {
                let half = c / rat(2);
                m[i][j] += &half;
                m[j][i] += &half;
            }
        }
    }
    linalg::rank(&m)
}

fn linear_rows(gens: &[MultiPoly]) -> Vec<Vec<Rational>> {
    let n = quadric::DIM;
    gens.iter()
        .filter(|g| g.total_degree() == Some(1))
        .map(|g| {
            (0..n)
                .map(|k| {
                    let mut e = vec![0; n];
                    e[k] = 1;
                    g.coeff(&crate::Monomial(e))
                })
                .collect()
        })
        .collect()
}

fn conic_from_generators(tag: &str, gens: Vec<MultiPoly>) -> Result<FixedConic> {
    let fail = |msg: String| Error::Consistency(format!("conic ({tag}): {msg}"));
    let vars = coordinate_vars();
    let weights = coordinate_weights();
    for g in &gens {
        if g.torus_weight(&weights).is_none() {
            return Err(fail(format!("generator {g} is not weight-homogeneous")));
        }
    }
    let ideal = GradedIdeal::new(&vars, &[1; quadric::DIM], gens.clone())
        .map_err(|e| fail(e.to_string()))?;
    for (name, form) in [
        ("Klein form", klein_form()),
        ("hyperplane form", quadric::hyperplane_form()),
    ] {
        if !ideal.contains(&form)? {
            return Err(fail(format!("the {name} is not in the ideal")));
        }
    }
    let rows = linear_rows(&gens);
    let plane_dim = quadric::DIM - linalg::rank(&rows);
    let w1 = quadric::fixed_points(Space::Hyperplane)?;
    let on_plane: Vec<&FixedPoint> = w1
        .iter()
        .filter(|p| {
            gens.iter()
                .filter(|g| g.total_degree() == Some(1))
                .all(|g| p.point.satisfies(g))
        })
        .collect();
    if plane_dim != 3 || on_plane.len() != 3 {
        return Err(fail(format!(
            "linear span has dimension {plane_dim} with {} fixed points",
            on_plane.len()
        )));
    }
    let plane = WeightedBasis::new(
        on_plane.iter().map(|p| p.label.clone()),
        on_plane.iter().map(|p| p.weight).collect(),
    )?;
    let plane_points: Vec<PlueckerPoint> = on_plane.iter().map(|p| p.point.clone()).collect();
    let quadrics: Vec<&MultiPoly> = gens
        .iter()
        .filter(|g| g.total_degree() == Some(2))
        .collect();
    let [q] = quadrics[..] else {
        return Err(fail(format!(
            "expected one quadric generator, found {}",
            quadrics.len()
        )));
    };
    let equation = restrict_to_span(q, &plane_points, &plane_vars())?;
    if equation.is_zero() {
        return Err(fail("quadric generator vanishes on the plane".into()));
    }
    let dual: Vec<i64> = plane.weights().iter().map(|w| -w).collect();
    let equation_weight = equation
        .torus_weight(&dual)
        .ok_or_else(|| fail(format!("{equation} is not weight-homogeneous")))?;
    let kind = match quadratic_rank(&equation) {
        1 => ConicKind::DoubleLine,
        2 => ConicKind::PairOfLines,
        3 => ConicKind::Smooth,
        r => return Err(fail(format!("conic equation has rank {r}"))),
    };
    Ok(FixedConic {
        tag: tag.to_string(),
        ideal,
        plane,
        plane_points,
        equation,
        equation_weight,
        kind,
    })
}

/// The ten fixed conics with their verified plane data.
pub fn fixed_conics() -> Result<Vec<FixedConic>> {
    let vars = coordinate_vars();
    CONIC_IDEALS
        .iter()
        .map(|(tag, gens)| {
            let gens = gens
                .iter()
                .map(|g| MultiPoly::parse(&vars, g))
                .collect::<Result<Vec<_>>>()?;
            conic_from_generators(tag, gens)
        })
        .collect()
}

/// Conics cut on `Q` by the planes spanned by three fixed points of `H`,
/// each given by the ideal of the plane plus the Klein form.
pub fn plane_section_ideals() -> Result<Vec<(Vec<String>, GradedIdeal)>> {
    let vars = coordinate_vars();
    let pts = quadric::fixed_points(Space::Hyperplane)?;
    let mut out = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            for k in j + 1..pts.len() {
                let span = [&pts[i], &pts[j], &pts[k]];
                let rows: Vec<Vec<Rational>> =
                    span.iter().map(|p| p.point.coords().to_vec()).collect();
                let mut gens: Vec<MultiPoly> = linalg::nullspace(&rows, quadric::DIM)
                    .into_iter()
                    .map(|v| {
                        MultiPoly::from_terms(
                            &vars,
                            v.into_iter().enumerate().map(|(c, x)| {
                                let mut e = vec![0; quadric::DIM];
                                e[c] = 1;
                                (e, x)
                            }),
                        )
                    })
                    .collect();
                gens.push(klein_form());
                let labels = span.iter().map(|p| p.label.clone()).collect();
                out.push((labels, GradedIdeal::new(&vars, &[1; quadric::DIM], gens)?));
            }
        }
    }
    Ok(out)
}

/// Equality of two ideals generated in degrees at most 2.
pub fn same_ideal(a: &GradedIdeal, b: &GradedIdeal) -> Result<bool> {
    for (x, y) in [(a, b), (b, a)] {
        for g in x.generators() {
            if !y.contains(g)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------- incidence

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Node {
    Point(String),
    Line(String),
    Conic(String),
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Point(l) => write!(f, "{l}"),
            Node::Line(t) => write!(f, "line({t})"),
            Node::Conic(t) => write!(f, "conic({t})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    LinesMeet,
    PointOnLine,
    PointOnConic,
    LineInConic,
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeKind::LinesMeet => "meets",
            EdgeKind::PointOnLine => "on-line",
            EdgeKind::PointOnConic => "on-conic",
            EdgeKind::LineInConic => "in-conic",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub a: Node,
    pub b: Node,
    pub kind: EdgeKind,
    /// A point on both loci; `None` for containment of a line in a conic.
    pub witness: Option<PlueckerPoint>,
}

#[derive(Debug, Clone)]
pub struct IncidenceGraph {
    pub points: Vec<FixedPoint>,
    pub lines: Vec<FixedLine>,
    pub conics: Vec<FixedConic>,
    pub edges: Vec<Edge>,
}

impl IncidenceGraph {
    pub fn adjacent(&self, x: &Node, y: &Node) -> bool {
        self.edges
            .iter()
            .any(|e| (e.a == *x && e.b == *y) || (e.a == *y && e.b == *x))
    }

    pub fn neighbors(&self, x: &Node) -> Vec<&Node> {
        self.edges
            .iter()
            .filter_map(|e| {
                if e.a == *x {
                    Some(&e.b)
                } else if e.b == *x {
                    Some(&e.a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn edge(&self, x: &Node, y: &Node) -> Option<&Edge> {
        self.edges
            .iter()
            .find(|e| (e.a == *x && e.b == *y) || (e.a == *y && e.b == *x))
    }

    pub fn line(&self, tag: &str) -> Option<&FixedLine> {
        self.lines.iter().find(|l| l.tag == tag)
    }

    pub fn conic(&self, tag: &str) -> Option<&FixedConic> {
        self.conics.iter().find(|c| c.tag == tag)
    }

    /// Points lying on the given conic.
    pub fn points_on_conic(&self, tag: &str) -> Vec<String> {
        self.neighbors(&Node::Conic(tag.into()))
            .into_iter()
            .filter_map(|n| match n {
                Node::Point(l) => Some(l.clone()),
                _ => None,
            })
            .collect()
    }

    pub fn lines_in_conic(&self, tag: &str) -> Vec<String> {
        self.neighbors(&Node::Conic(tag.into()))
            .into_iter()
            .filter_map(|n| match n {
                Node::Line(t) => Some(t.clone()),
                _ => None,
            })
            .collect()
    }
}

/// Intersection point of two lines given by spanning points, if they meet in
/// exactly one point.
fn line_intersection(
    p: &[PlueckerPoint; 2],
    q: &[PlueckerPoint; 2],
) -> Result<Option<PlueckerPoint>> {
    // columns p0, p1, -q0, -q1
    let rows: Vec<Vec<Rational>> = (0..quadric::DIM)
        .map(|k| {
            vec![
                p[0].coords()[k].clone(),
                p[1].coords()[k].clone(),
                -q[0].coords()[k].clone(),
                -q[1].coords()[k].clone(),
            ]
        })
        .collect();
    let ns = linalg::nullspace(&rows, 4);
    match ns.len() {
        0 => Ok(None),
        1 => {
            let c = &ns[0];
            let coords = (0..quadric::DIM)
                .map(|k| &c[0] * &p[0].coords()[k] + &c[1] * &p[1].coords()[k])
                .collect();
            Ok(Some(PlueckerPoint::new(coords)?))
        }
        _ => Err(Error::Consistency("two fixed lines coincide".into())),
    }
}

fn in_span(x: &PlueckerPoint, span: &[PlueckerPoint]) -> bool {
    let mut rows: Vec<Vec<Rational>> = span.iter().map(|p| p.coords().to_vec()).collect();
    let r = linalg::rank(&rows);
    rows.push(x.coords().to_vec());
    linalg::rank(&rows) == r
}

fn on_conic(x: &PlueckerPoint, c: &FixedConic) -> bool {
    c.ideal.generators().iter().all(|g| x.satisfies(g))
}

pub fn incidence_graph() -> Result<IncidenceGraph> {
    let points = quadric::fixed_points(Space::Quadric)?;
    let lines = fixed_lines()?;
    let conics = fixed_conics()?;
    let mut edges = Vec::new();

    for (i, l) in lines.iter().enumerate() {
        for m in &lines[i + 1..] {
            if let Some(w) = line_intersection(&l.points, &m.points)? {
                if !(w.on_quadric() && in_span(&w, &l.points) && in_span(&w, &m.points)) {
                    return Err(Error::Consistency(format!(
                        "bad witness {w} for lines {} {}",
                        l.tag, m.tag
                    )));
                }
                edges.push(Edge {
                    a: Node::Line(l.tag.clone()),
                    b: Node::Line(m.tag.clone()),
                    kind: EdgeKind::LinesMeet,
                    witness: Some(w),
                });
            }
        }
    }
    for p in &points {
        for l in &lines {
            if in_span(&p.point, &l.points) {
                edges.push(Edge {
                    a: Node::Point(p.label.clone()),
                    b: Node::Line(l.tag.clone()),
                    kind: EdgeKind::PointOnLine,
                    witness: Some(p.point.clone()),
                });
            }
        }
        for c in &conics {
            if on_conic(&p.point, c) {
                edges.push(Edge {
                    a: Node::Point(p.label.clone()),
                    b: Node::Conic(c.tag.clone()),
                    kind: EdgeKind::PointOnConic,
                    witness: Some(p.point.clone()),
                });
            }
        }
    }
    for l in &lines {
        for c in &conics {
            if c.ideal.generators().iter().all(|g| l.curve.satisfies(g)) {
                edges.push(Edge {
                    a: Node::Line(l.tag.clone()),
                    b: Node::Conic(c.tag.clone()),
                    kind: EdgeKind::LineInConic,
                    witness: None,
                });
            }
        }
    }
    Ok(IncidenceGraph {
        points,
        lines,
        conics,
        edges,
    })
}

// ---------------------------------------------------------------- cubics

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicCensus {
    /// Chains of three distinct fixed lines.
    pub reduced_trees: u64,
    /// A smooth fixed conic with a fixed line attached at a fixed point.
    pub conic_plus_line: u64,
    /// Non-reduced structures supported on a pair of lines.
    pub pair_of_lines_supported: u64,
    /// Triple lines on a quadric cone.
    pub triple_lines: u64,
    /// One-parameter families of smooth fixed twisted cubics.
    pub smooth_families: u64,
}

impl CubicCensus {
    pub fn reduced(&self) -> u64 {
        self.reduced_trees + self.conic_plus_line
    }

    pub fn total_degenerate(&self) -> u64 {
        self.reduced() + self.pair_of_lines_supported + self.triple_lines
    }

    /// Each family closes up to a `P^1` by adding two degenerate flat limits;
    /// those endpoints are among the degenerate curves counted above.
    pub fn isolated(&self) -> u64 {
        self.total_degenerate() - 2 * self.smooth_families
    }

    /// Euler number of the fixed locus: isolated points plus `χ(P^1) = 2` per family.
    pub fn euler(&self) -> u64 {
        self.isolated() + 2 * self.smooth_families
    }
}

/// Simple paths with three edges in the line-incidence graph, each counted once.
pub fn line_chains(g: &IncidenceGraph) -> Vec<[String; 4]> {
    let tags: Vec<&str> = g.lines.iter().map(|l| l.tag.as_str()).collect();
    let meets = |a: &str, b: &str| g.adjacent(&Node::Line(a.into()), &Node::Line(b.into()));
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &a in &tags {
        for &b in &tags {
            for &c in &tags {
                for &d in &tags {
                    let distinct = BTreeSet::from([a, b, c, d]).len() == 4;
                    if !distinct || !(meets(a, b) && meets(b, c) && meets(c, d)) {
                        continue;
                    }
                    let key = if a < d { [a, b, c, d] } else { [d, c, b, a] };
                    if seen.insert(key) {
                        out.push(key.map(String::from));
                    }
                }
            }
        }
    }
    out
}

/// Pairs (smooth conic, line) meeting at a fixed point without containment.
pub fn conic_line_attachments(g: &IncidenceGraph) -> Vec<(String, String)> {
    let mut out = Vec::new();
    for c in g.conics.iter().filter(|c| c.kind == ConicKind::Smooth) {
        let on_c = g.points_on_conic(&c.tag);
        for l in &g.lines {
            let contained = g.adjacent(&Node::Line(l.tag.clone()), &Node::Conic(c.tag.clone()));
            let touches = on_c
                .iter()
                .any(|p| g.adjacent(&Node::Point(p.clone()), &Node::Line(l.tag.clone())));
            if touches && !contained {
                out.push((c.tag.clone(), l.tag.clone()));
            }
        }
    }
    out
}

/// Count degenerate fixed cubics without checking them against expectations.
pub fn census_counts(g: &IncidenceGraph) -> Result<CubicCensus> {
    let reduced_trees = line_chains(g).len() as u64;
    let conic_plus_line = conic_line_attachments(g).len() as u64;
    let mut pair_supports = 0u64;
    for c in g.conics.iter().filter(|c| c.kind == ConicKind::PairOfLines) {
        let comps = g.lines_in_conic(&c.tag);
        if comps.len() != 2 {
            return Err(Error::Consistency(format!(
                "pair conic ({}) contains {} fixed lines",
                c.tag,
                comps.len()
            )));
        }
        // either component may carry the double structure
        pair_supports += comps.len() as u64;
    }
    let mut doubled = 0u64;
    for l in &g.lines {
        let has_double = g
            .conics
            .iter()
            .filter(|c| c.kind == ConicKind::DoubleLine)
            .any(|c| g.lines_in_conic(&c.tag).contains(&l.tag));
        if has_double {
            doubled += 1;
        }
    }
    let smooth_families = [ScrollCase::Ii, ScrollCase::Iii]
        .iter()
        .map(|&c| 2 * scroll_fixed_families(c).len() as u64)
        .sum();
    Ok(CubicCensus {
        reduced_trees,
        conic_plus_line,
        pair_of_lines_supported: pair_supports * NONREDUCED_MULTIPLIER,
        triple_lines: doubled * NONREDUCED_MULTIPLIER,
        smooth_families,
    })
}

/// Count degenerate fixed cubics and check every class against 4 + 8 + 16 + 8.
pub fn count_invariant_cubics(g: &IncidenceGraph) -> Result<CubicCensus> {
    let c = census_counts(g)?;
    let checks = [
        ("reduced trees of three lines", c.reduced_trees, 4),
        ("smooth conic plus line", c.conic_plus_line, 8),
        (
            "structures on pairs of lines",
            c.pair_of_lines_supported,
            16,
        ),
        ("triple lines", c.triple_lines, 8),
        ("smooth families", c.smooth_families, 2),
        ("degenerate total", c.total_degenerate(), 36),
    ];
    for (name, got, want) in checks {
        if got != want {
            return Err(Error::Consistency(format!(
                "{name}: counted {got}, expected {want}"
            )));
        }
    }
    Ok(c)
}

// ---------------------------------------------------------------- twisted cubics

/// The family `[u³ : a u²v : 3uv² : uv² : 3a⁻¹v³ : 0]` over variables `u, v, a`.
pub fn twisted_cubic_family() -> ParametrizedCurve {
    let vars = var_list(&["u", "v", "a"]);
    let t = |c: i64, u: i32, v: i32, a: i32| (rat(c), vec![u, v, a]);
    let coords = vec![
        vec![t(1, 3, 0, 0)],
        vec![t(1, 2, 1, 1)],
        vec![t(3, 1, 2, 0)],
        vec![t(1, 1, 2, 0)],
        vec![t(3, 0, 3, -1)],
        vec![],
    ];
    ParametrizedCurve::from_laurent(&vars, &coords).expect("well-formed family")
}

/// Exponents with `C(t^α u, t^β v) = t^λ · (t·C)(u, v)`, normalized so that
/// `min(α, β) = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InvarianceCertificate {
    pub alpha: i64,
    pub beta: i64,
    pub lambda: i64,
}

impl fmt::Display for InvarianceCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.alpha, self.beta, self.lambda)
    }
}

/// Find a reparametrization certificate for torus invariance of a curve
/// under the coordinate weights of `P^5`.
pub fn invariance_certificate(curve: &ParametrizedCurve) -> Result<InvarianceCertificate> {
    let weights = coordinate_weights();
    // one equation i·α + j·β − λ = w per (coordinate, u^i v^j) pair
    let mut eqs: BTreeSet<(i64, i64, i64)> = BTreeSet::new();
    for (k, c) in curve.coords().iter().enumerate() {
        for (m, _) in c.terms() {
            eqs.insert((i64::from(m.0[0]), i64::from(m.0[1]), weights[k]));
        }
    }
    let fits = |a: i64, b: i64, l: i64| eqs.iter().all(|&(i, j, w)| i * a + j * b - l == w);
    // fix one of α, β to zero and solve for the other two
    for fixed_alpha in [false, true] {
        let rows: Vec<Vec<Rational>> = eqs
            .iter()
            .map(|&(i, j, _)| vec![rat(if fixed_alpha { j } else { i }), rat(-1)])
            .collect();
        let rhs: Vec<Rational> = eqs.iter().map(|&(_, _, w)| rat(w)).collect();
        let Some(x) = linalg::solve(&rows, &rhs) else {
            continue;
        };
        if !x.iter().all(|v| v.is_integer()) {
            continue;
        }
        let free = x[0].to_integer().try_into().unwrap_or(i64::MIN);
        let lambda: i64 = x[1].to_integer().try_into().unwrap_or(i64::MIN);
        let (alpha, beta) = if fixed_alpha { (0, free) } else { (free, 0) };
        if alpha >= 0 && beta >= 0 && fits(alpha, beta, lambda) {
            return Ok(InvarianceCertificate {
                alpha,
                beta,
                lambda,
            });
        }
    }
    Err(Error::Consistency(
        "no integer invariance certificate exists".into(),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedFamilyCheck {
    pub on_q: bool,
    pub certificate: InvarianceCertificate,
}

/// Check the twisted-cubic family for a specific `a ≠ 0`, or with `a` formal.
pub fn verify_twisted_cubic_family(a: Option<&Rational>) -> Result<TwistedFamilyCheck> {
    let mut curve = twisted_cubic_family();
    if let Some(a) = a {
        if a.is_zero() {
            return Err(Error::InvalidArgument(
                "the family parameter must be nonzero".into(),
            ));
        }
        curve = curve.specialize("a", a)?;
    }
    Ok(TwistedFamilyCheck {
        on_q: curve.on_quadric(),
        certificate: invariance_certificate(&curve)?,
    })
}

// ---------------------------------------------------------------- scrolls

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScrollCase {
    /// Cone section `vm1m3 = 0`.
    Ii,
    /// Cone section `v1m3 = 0`.
    Iii,
}

impl ScrollCase {
    /// Weights of `z0, …, z5` on the scroll `S(1,3) ⊂ P^5`.
    pub fn weights(self) -> [i64; 6] {
        match self {
            ScrollCase::Ii => [2, 0, -2, -4, 4, 2],
            ScrollCase::Iii => [4, 0, -4, -8, 2, -2],
        }
    }

    /// Fixed point of `H` whose coordinate cuts out the cone section.
    pub fn dropped_point(self) -> &'static str {
        match self {
            ScrollCase::Ii => "pm1m3",
            ScrollCase::Iii => "p1m3",
        }
    }
}

impl FromStr for ScrollCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ii" => Ok(ScrollCase::Ii),
            "iii" => Ok(ScrollCase::Iii),
            _ => Err(Error::InvalidArgument(format!("unknown scroll case `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepeatedWeightGroup {
    pub weight: i64,
    /// Indices `i` of the coordinates `z_i` sharing the weight.
    pub coords: Vec<usize>,
}

pub fn scroll_vars() -> VarList {
    var_list(&["z0", "z1", "z2", "z3", "z4", "z5"])
}

/// Maximal minors of the catalecticant matrix `[z0 z1 z2 z4; z1 z2 z3 z5]`.
pub fn catalecticant_minors() -> Vec<MultiPoly> {
    let v = scroll_vars();
    let z: Vec<MultiPoly> = v.iter().map(|n| MultiPoly::var(&v, n).unwrap()).collect();
    let top = [&z[0], &z[1], &z[2], &z[4]];
    let bottom = [&z[1], &z[2], &z[3], &z[5]];
    let mut out = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            out.push(&(top[i] * bottom[j]) - &(top[j] * bottom[i]));
        }
    }
    out
}

/// The quadric cone `z0 z2 − z1²` in the coordinates `z0, z1, z2, z4`.
pub fn cone_minor() -> MultiPoly {
    MultiPoly::parse(&scroll_vars(), "z0*z2 - z1^2").unwrap()
}

/// Coordinates sharing a weight under the case's assignment.
pub fn scroll_fixed_families(case: ScrollCase) -> Vec<RepeatedWeightGroup> {
    let w = case.weights();
    let ms: WeightMultiset = w.iter().copied().collect();
    ms.repeated()
        .into_iter()
        .map(|weight| RepeatedWeightGroup {
            weight,
            coords: (0..6).filter(|&i| w[i] == weight).collect(),
        })
        .collect()
}

pub fn scroll_minors_homogeneous(case: ScrollCase) -> bool {
    let w = case.weights();
    catalecticant_minors()
        .iter()
        .chain([&cone_minor()])
        .all(|m| m.torus_weight(&w).is_some())
}

/// The cone section of `Q` in the coordinates of the remaining four fixed
/// points of `H`, and whether the projection `(z0, z1, z2, z4)` matches it
/// weight-for-weight: the cross term of the cone equation carries the
/// weights of `z0, z2`, its square term the weight of `z1`, and the vertex
/// direction the weight of `z4`.
pub fn scroll_projection_equivariant(case: ScrollCase) -> Result<bool> {
    let pts: Vec<FixedPoint> = quadric::fixed_points(Space::Hyperplane)?
        .into_iter()
        .filter(|p| p.label != case.dropped_point())
        .collect();
    let vars = var_list(&["y0", "y1", "y2", "y3"]);
    let points: Vec<PlueckerPoint> = pts.iter().map(|p| p.point.clone()).collect();
    let cone = restrict_to_span(&klein_form(), &points, &vars)?;
    if quadratic_rank(&cone) != 3 {
        return Ok(false);
    }
    let mut cross = None;
    let mut square = None;
    let mut used = BTreeSet::new();
    for (m, _) in cone.terms() {
        let idx: Vec<usize> = (0..4).filter(|&i| m.0[i] > 0).collect();
        used.extend(idx.iter().copied());
        match idx[..] {
            [i] => square = Some(i),
            [i, j] => cross = Some((i, j)),
            _ => return Ok(false),
        }
    }
    let (Some((i, j)), Some(s)) = (cross, square) else {
        return Ok(false);
    };
    let vertex: Vec<usize> = (0..4).filter(|k| !used.contains(k)).collect();
    let [vtx] = vertex[..] else { return Ok(false) };
    let w = case.weights();
    let pair: WeightMultiset = [pts[i].weight, pts[j].weight].into_iter().collect();
    let zpair: WeightMultiset = [w[0], w[2]].into_iter().collect();
    Ok(pair == zpair && pts[s].weight == w[1] && pts[vtx].weight == w[4])
}

/// The torus parametrization of `S(1,3)` over variables `t0, t1, u0, u1`.
pub fn scroll_parametrization() -> Vec<MultiPoly> {
    let v = var_list(&["t0", "t1", "u0", "u1"]);
    [
        "t0^3*u0",
        "t0^2*t1*u0",
        "t0*t1^2*u0",
        "t1^3*u0",
        "t0*u1",
        "t1*u1",
    ]
    .iter()
    .map(|s| MultiPoly::parse(&v, s).unwrap())
    .collect()
}

/// Substitute a parametrization into every catalecticant minor (and the cone
/// minor, through the projection) and report whether all vanish.
pub fn catalecticant_vanishes(param: &[MultiPoly]) -> Result<bool> {
    let names = scroll_vars();
    let assignment: BTreeMap<String, MultiPoly> =
        names.iter().cloned().zip(param.iter().cloned()).collect();
    for m in catalecticant_minors().iter().chain([&cone_minor()]) {
        if !m.substitute(&assignment)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn catalecticant_check() -> Result<bool> {
    catalecticant_vanishes(&scroll_parametrization())
}

// ---------------------------------------------------------------- hyperplane sections

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperplaneSection {
    pub tag: &'static str,
    /// Fixed point of `H` not on the section.
    pub dropped: &'static str,
    pub rank: usize,
}

impl HyperplaneSection {
    pub fn is_smooth(&self) -> bool {
        self.rank == 4
    }
}

/// The five fixed hyperplane sections of `Q`, with the rank of the quadric.
pub fn fixed_hyperplane_sections() -> Result<Vec<HyperplaneSection>> {
    let all = quadric::fixed_points(Space::Hyperplane)?;
    let vars = var_list(&["y0", "y1", "y2", "y3"]);
    [
        ("i", "q0"),
        ("ii", "pm1m3"),
        ("iii", "p1m3"),
        ("iv", "p3m1"),
        ("v", "p31"),
    ]
    .into_iter()
    .map(|(tag, dropped)| {
        let pts: Vec<PlueckerPoint> = all
            .iter()
            .filter(|p| p.label != dropped)
            .map(|p| p.point.clone())
            .collect();
        let q = restrict_to_span(&klein_form(), &pts, &vars)?;
        Ok(HyperplaneSection {
            tag,
            dropped,
            rank: quadratic_rank(&q),
        })
    })
    .collect()
}

/// Weights of `H^0(O(1,2))` and `H^0(O(2,1))` on the smooth section
/// `P^1 × P^1`, with factor weights `(1, -1)` and `(3, -3)`.
///
/// Returns `None` if the Segre products of the factor weights do not match
/// the weights of the section's coordinates.
pub fn smooth_section_weights() -> Result<Option<(WeightMultiset, WeightMultiset)>> {
    let first = WeightedBasis::new(["s", "t"], vec![1, -1])?;
    let second = WeightedBasis::new(["v", "w"], vec![3, -3])?;
    let segre = first.tensor(&second).multiset();
    let coords: WeightMultiset = quadric::fixed_points(Space::Quadric)?
        .iter()
        .map(|p| p.weight)
        .collect();
    if segre != coords {
        return Ok(None);
    }
    Ok(Some((
        first.tensor(&second.sym2()).multiset(),
        first.sym2().tensor(&second).multiset(),
    )))
}
