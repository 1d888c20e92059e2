//! Acceptance suite: one PASS/FAIL line per criterion, exact equality throughout.

use std::process::ExitCode;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use qcurves::cohring;
use qcurves::loci::{self, ScrollCase};
use qcurves::quadric::{ParametrizedCurve, PlueckerPoint, QuadricMember};
use qcurves::rep::{sl2_operator, Sl2Op, WeightMultiset, WeightedBasis};
use qcurves::series::Poincare;
use qcurves::tangent::{self, BBComponent, ComponentKind, TangentRow};
use qcurves::{rat, MultiPoly};

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Check {
    ensure(got == want, || {
        format!("{what}: got {got:?}, want {want:?}")
    })
}

fn fail(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn row_text(r: &TangentRow) -> [String; 3] {
    let blocks: Vec<String> = r.ambient_blocks.iter().map(ToString::to_string).collect();
    [
        blocks.join(","),
        r.sections.to_string(),
        r.delta.to_string(),
    ]
}

fn fixed_lines() -> Check {
    let lines = loci::fixed_lines().map_err(fail)?;
    // [s:t:0:0:0:0], [s:0:0:0:t:0], [0:s:0:0:0:t], [0:0:0:0:s:t]
    let want = [[0, 1], [0, 4], [1, 5], [4, 5]];
    eq("count", lines.len(), 4)?;
    for (l, w) in lines.iter().zip(want) {
        for (p, k) in l.points.iter().zip(w) {
            let mut c = [0; 6];
            c[k] = 1;
            eq(
                &format!("line ({}) endpoint", l.tag),
                p.clone(),
                PlueckerPoint::from_ints(c).map_err(fail)?,
            )?;
        }
    }
    Ok(())
}

fn table_one() -> Check {
    let want = [
        ["-8,-6,-6,-4,-4,-2", "-8,-6,-4", "3"],
        ["-8,-4,-2,-2,2,4", "-8,-2,4", "2"],
        ["-4,-2,2,2,4,8", "-4,2,8", "1"],
        ["2,4,4,6,6,8", "4,6,8", "0"],
    ];
    let rows = tangent::s1_rows().map_err(fail)?;
    eq("rows", rows.len(), 4)?;
    for (r, w) in rows.iter().zip(want) {
        eq(
            &format!("row ({})", r.tag),
            row_text(r),
            w.map(String::from),
        )?;
    }
    eq("(b) moduli", rows[1].moduli.to_string(), "-4,-2,2".into())
}

fn poincare_s1() -> Check {
    let p = tangent::poincare_of_rows(&tangent::s1_rows().map_err(fail)?);
    eq("S1", p.to_string(), "1+t^2+t^4+t^6".into())
}

fn fixed_conics() -> Check {
    let conics = loci::fixed_conics().map_err(fail)?;
    eq("count", conics.len(), 10)?;
    let vars = qcurves::quadric::coordinate_vars();
    for (c, (tag, gens)) in conics.iter().zip(loci::CONIC_IDEALS) {
        eq("tag", c.tag.as_str(), tag)?;
        let parsed: Vec<MultiPoly> = gens
            .iter()
            .map(|g| MultiPoly::parse(&vars, g).unwrap())
            .collect();
        eq(
            &format!("({tag}) generators"),
            c.ideal.generators(),
            &parsed[..],
        )?;
        let weights = qcurves::quadric::coordinate_weights();
        ensure(
            parsed.iter().all(|g| g.torus_weight(&weights).is_some()),
            || format!("({tag}) not homogeneous"),
        )?;
        for f in [
            qcurves::quadric::klein_form(),
            qcurves::quadric::hyperplane_form(),
        ] {
            ensure(c.ideal.contains(&f).map_err(fail)?, || {
                format!("({tag}) misses {f}")
            })?;
        }
    }
    Ok(())
}

fn table_three() -> Check {
    let want = [
        ["-8,-6,-6,-4,-4,-2,-8,-6,-4,-4,-2", "-8,-6,-4,-4,-2", "6"],
        ["-8,-4,-2,-2,2,4,-8,-4,-2,2,4", "-8,-4,-2,2,4", "4"],
        ["-4,-2,2,2,4,8,-4,-2,2,4,8", "-4,-2,2,4,8", "2"],
        ["2,4,4,6,6,8,2,4,4,6,8", "2,4,4,6,8", "0"],
        ["-8,-6,-4,-2,-2,2,-8,-6,-4,-2,4", "-8,-6,-4,-2,4", "5"],
        ["-6,-4,-4,-2,2,4,-8,-6,-4,2,8", "-8,-6,-4,2,8", "4"],
        ["-4,-2,2,4,4,6,-8,-2,4,6,8", "-8,-2,4,6,8", "2"],
        ["-2,2,2,4,6,8,-4,2,4,6,8", "-4,2,4,6,8", "1"],
        ["-6,-4,-2,2,4,6,-4,-2,0,2,4", "-4,-2,0,2,4", "3"],
        ["-6,-2,-2,2,2,6,-8,-4,0,4,8", "-8,-4,0,4,8", "3"],
    ];
    let rows = tangent::s2_rows().map_err(fail)?;
    eq("rows", rows.len(), 10)?;
    for (r, w) in rows.iter().zip(want) {
        eq(
            &format!("row ({})", r.tag),
            row_text(r),
            w.map(String::from),
        )?;
    }
    let deltas: Vec<usize> = rows.iter().map(|r| r.delta).collect();
    eq("deltas", deltas, vec![6, 4, 2, 0, 5, 4, 2, 1, 3, 3])
}

fn poincare_s2() -> Check {
    let p = tangent::poincare_of_rows(&tangent::s2_rows().map_err(fail)?);
    eq("S2", p.to_string(), "1+t^2+2t^4+2t^6+2t^8+t^10+t^12".into())
}

fn census() -> Check {
    let g = loci::incidence_graph().map_err(fail)?;
    let raw = loci::census_counts(&g).map_err(fail)?;
    eq("trees", raw.reduced_trees, 4)?;
    eq("conic plus line", raw.conic_plus_line, 8)?;
    eq("reduced", raw.reduced(), 12)?;
    eq("pair supported", raw.pair_of_lines_supported, 16)?;
    eq("triple", raw.triple_lines, 8)?;
    eq("total", raw.total_degenerate(), 36)?;
    loci::count_invariant_cubics(&g).map(|_| ()).map_err(fail)
}

fn twisted_family() -> Check {
    let formal = loci::verify_twisted_cubic_family(None).map_err(fail)?;
    ensure(formal.on_q, || "formal family off Q".into())?;
    eq(
        "certificate",
        (
            formal.certificate.alpha,
            formal.certificate.beta,
            formal.certificate.lambda,
        ),
        (2, 0, 2),
    )?;
    for a in [rat(1), rat(-2), qcurves::ratio(3, 7)] {
        let c = loci::verify_twisted_cubic_family(Some(&a)).map_err(fail)?;
        ensure(c.on_q, || format!("a = {a} off Q"))?;
    }
    eq(
        "case ii families",
        loci::scroll_fixed_families(ScrollCase::Ii).len(),
        1,
    )?;
    eq(
        "case iii families",
        loci::scroll_fixed_families(ScrollCase::Iii).len(),
        0,
    )?;
    for case in [ScrollCase::Ii, ScrollCase::Iii] {
        ensure(loci::scroll_minors_homogeneous(case), || {
            format!("{case:?} minors")
        })?;
        ensure(
            loci::scroll_projection_equivariant(case).map_err(fail)?,
            || format!("{case:?} projection"),
        )?;
    }
    ensure(loci::catalecticant_check().map_err(fail)?, || {
        "catalecticant".into()
    })
}

fn zero_weights() -> Check {
    let z = tangent::zero_weight_chain().map_err(fail)?;
    eq(
        "chain",
        (z.w0_t_p4, z.w0_n, z.w0_t_q, z.w0_moduli),
        (3, 1, 2, 1),
    )
}

fn grothendieck() -> Check {
    let c = cohring::chern_classes().map_err(fail)?;
    ensure(c[5].is_zero() && c[6].is_zero(), || "c5, c6 nonzero".into())?;
    eq(
        "relation",
        cohring::grothendieck_relation().map_err(fail)?,
        cohring::expected_relation(),
    )
}

fn convolve(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn hilbert_series() -> Check {
    let h = cohring::hilbert_series_s3().map_err(fail)?;
    eq("series", h.clone(), vec![1, 2, 4, 5, 6, 6, 5, 4, 2, 1])?;
    eq("oracle", h.clone(), convolve(&[1, 1, 2, 1, 1], &[1; 6]))?;
    ensure(h.iter().eq(h.iter().rev()), || "not palindromic".into())?;
    eq("sum", h.iter().sum::<usize>(), 36)
}

fn euler() -> Check {
    let g = loci::incidence_graph().map_err(fail)?;
    let c = loci::count_invariant_cubics(&g).map_err(fail)?;
    let kinds = std::iter::repeat_n(ComponentKind::IsolatedPoint, c.isolated() as usize).chain(
        std::iter::repeat_n(ComponentKind::ProjectiveLine, c.smooth_families as usize),
    );
    let chi = tangent::euler_characteristic(kinds);
    eq("isolated", c.isolated(), 32)?;
    eq("census euler", chi, 36)?;
    let total: usize = cohring::hilbert_series_s3().map_err(fail)?.iter().sum();
    eq("bundle euler", chi, total as u64)
}

fn properties() -> Check {
    // sl2 relations [e,f] = h, [h,e] = 2e, [h,f] = -2f
    for d in 0..=5 {
        let e = sl2_operator(Sl2Op::E, d);
        let f = sl2_operator(Sl2Op::F, d);
        let h = sl2_operator(Sl2Op::H, d);
        eq(&format!("[e,f] d={d}"), e.bracket(&f), h.clone())?;
        eq(
            &format!("[h,e] d={d}"),
            h.bracket(&e),
            e.combine(&rat(2), &e, &rat(0)),
        )?;
        eq(
            &format!("[h,f] d={d}"),
            h.bracket(&f),
            f.combine(&rat(-2), &f, &rat(0)),
        )?;
    }

    let mut runner = TestRunner::new(Config {
        cases: 64,
        ..Config::default()
    });
    let bases = (
        proptest::collection::vec(-9i64..=9, 1..5),
        proptest::collection::vec(-9i64..=9, 1..5),
    );
    let r = runner.run(&bases, |(a, b)| {
        let a = WeightedBasis::new((0..a.len()).map(|i| format!("a{i}")), a).unwrap();
        let b = WeightedBasis::new((0..b.len()).map(|i| format!("b{i}")), b).unwrap();
        prop_assert_eq!(a.hom(&b).multiset(), a.dual().tensor(&b).multiset());
        let direct: WeightMultiset = a
            .weights()
            .iter()
            .flat_map(|x| b.weights().iter().map(move |y| y - x))
            .collect();
        prop_assert_eq!(a.hom(&b).multiset(), direct);
        Ok(())
    });
    r.map_err(|e| format!("hom: {e}"))?;

    let comps = proptest::collection::vec((0usize..8, any::<bool>()), 0..12);
    let r = runner.run(&comps, |cs| {
        let cs: Vec<BBComponent> = cs
            .into_iter()
            .map(|(d, line)| BBComponent {
                name: String::new(),
                kind: if line {
                    ComponentKind::ProjectiveLine
                } else {
                    ComponentKind::IsolatedPoint
                },
                delta: d,
            })
            .collect();
        let p = tangent::bb_poincare(&cs);
        let top = cs
            .iter()
            .map(|c| {
                2 * c.delta
                    + if c.kind == ComponentKind::ProjectiveLine {
                        2
                    } else {
                        0
                    }
            })
            .max();
        prop_assert_eq!(p.degree(), top);
        prop_assert_eq!(
            p.eval_at_one(),
            tangent::euler_characteristic(cs.iter().map(|c| c.kind))
        );
        Ok(())
    });
    r.map_err(|e| format!("bb degree: {e}"))?;

    let outputs: [(&str, Poincare, usize); 3] = [
        (
            "S1",
            tangent::poincare_of_rows(&tangent::s1_rows().map_err(fail)?),
            6,
        ),
        (
            "S2",
            tangent::poincare_of_rows(&tangent::s2_rows().map_err(fail)?),
            12,
        ),
        ("S3", cohring::poincare_s3_from_bundle().map_err(fail)?, 18),
    ];
    for (name, p, deg) in outputs {
        ensure(p.is_palindromic(), || format!("{name} not palindromic"))?;
        eq(&format!("{name} degree"), p.degree(), Some(deg))?;
    }

    // negative controls
    let p = PlueckerPoint::from_ints([1, 0, 0, 0, 0, 0]).map_err(fail)?;
    let q = PlueckerPoint::from_ints([0, 0, 0, 0, 0, 1]).map_err(fail)?;
    ensure(
        !ParametrizedCurve::line(&p, &q).map_err(fail)?.on_quadric(),
        || "line p31-pm1m3 on Q".into(),
    )?;
    let mut param = loci::scroll_parametrization();
    let v = param[0].vars().clone();
    param[0] = &param[0] + &MultiPoly::parse(&v, "t1^3*u0").map_err(fail)?;
    ensure(!loci::catalecticant_vanishes(&param).map_err(fail)?, || {
        "perturbed scroll passes".into()
    })?;
    let off = PlueckerPoint::from_ints([1, 0, 0, 0, 0, 1]).map_err(fail)?;
    ensure(!off.on_quadric(), || "[1:0:0:0:0:1] on Q".into())?;
    ensure(cohring::bundle_rank_arithmetic(5, 10).is_err(), || {
        "rank 0 accepted".into()
    })
}

type Criterion = (&'static str, fn() -> Check);

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("fixed lines", fixed_lines),
        ("tangent weights at lines", table_one),
        ("Poincare polynomial of S1", poincare_s1),
        ("fixed conics", fixed_conics),
        ("tangent weights at conics", table_three),
        ("Poincare polynomial of S2", poincare_s2),
        ("degenerate cubic census", census),
        ("twisted cubic family and scrolls", twisted_family),
        ("zero-weight chain", zero_weights),
        ("Grothendieck relation", grothendieck),
        ("Hilbert series of S3", hilbert_series),
        ("Euler number consistency", euler),
        ("property suites", properties),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("PASS {:>2} {name}", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {e}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
