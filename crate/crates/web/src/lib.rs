//! Browser bindings. Every export takes plain values and returns a JSON string,
//! so the functions are testable natively and need no JS glue beyond `JSON.parse`.

use qcurves::rep::{sl2_operator, symd_basis, Sl2Op};
use qcurves::tangent::{self, TangentRow};
use qcurves::{cohring, var_list, GradedIdeal, MultiPoly};
use serde::Serialize;
use wasm_bindgen::prelude::*;

pub const MAX_SL2_DEGREE: u32 = 12;
pub const MAX_HILBERT_DEGREE: u32 = 20;

#[derive(Serialize)]
struct Failure {
    ok: bool,
    error: String,
}

fn failure(error: impl ToString) -> String {
    serde_json::to_string(&Failure {
        ok: false,
        error: error.to_string(),
    })
    .unwrap()
}

#[derive(Serialize)]
struct Sl2Module {
    ok: bool,
    d: u32,
    labels: Vec<String>,
    weights: Vec<i64>,
    e: Vec<Vec<String>>,
    f: Vec<Vec<String>>,
    h: Vec<Vec<String>>,
    relations_hold: bool,
}

fn matrix_text(op: Sl2Op, d: u32) -> Vec<Vec<String>> {
    sl2_operator(op, d)
        .matrix()
        .iter()
        .map(|row| row.iter().map(ToString::to_string).collect())
        .collect()
}

/// Weights and `e, f, h` matrices on `Sym^d C²`.
#[wasm_bindgen]
pub fn sl2_module(d: u32) -> String {
    if d > MAX_SL2_DEGREE {
        return failure(format!("d must be at most {MAX_SL2_DEGREE}"));
    }
    let basis = symd_basis(d);
    let e = sl2_operator(Sl2Op::E, d);
    let f = sl2_operator(Sl2Op::F, d);
    let h = sl2_operator(Sl2Op::H, d);
    let two = qcurves::rat(2);
    let zero = qcurves::rat(0);
    let relations_hold = e.bracket(&f) == h
        && h.bracket(&e) == e.combine(&two, &e, &zero)
        && h.bracket(&f) == f.combine(&-two.clone(), &f, &zero);
    serde_json::to_string(&Sl2Module {
        ok: true,
        d,
        labels: basis.labels().to_vec(),
        weights: basis.weights().to_vec(),
        e: matrix_text(Sl2Op::E, d),
        f: matrix_text(Sl2Op::F, d),
        h: matrix_text(Sl2Op::H, d),
        relations_hold,
    })
    .unwrap()
}

#[derive(Serialize)]
struct Hilbert {
    ok: bool,
    dims: Vec<usize>,
}

fn split(s: &str, sep: char) -> Vec<&str> {
    s.split(sep)
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .collect()
}

/// Hilbert function of `Q[vars]/(generators)` in degrees `0..=max_degree`.
///
/// `vars` and `degrees` are comma-separated; generators are separated by `;`.
#[wasm_bindgen]
pub fn hilbert_function(vars: &str, degrees: &str, generators: &str, max_degree: u32) -> String {
    if max_degree > MAX_HILBERT_DEGREE {
        return failure(format!("maximum degree is {MAX_HILBERT_DEGREE}"));
    }
    let names = split(vars, ',');
    if names.is_empty() {
        return failure("no variables");
    }
    let degs: Result<Vec<u32>, _> = split(degrees, ',')
        .iter()
        .map(|d| d.parse::<u32>())
        .collect();
    let degs = match degs {
        Ok(d) if d.len() == names.len() => d,
        Ok(d) => return failure(format!("{} degrees for {} variables", d.len(), names.len())),
        Err(e) => return failure(format!("bad degree: {e}")),
    };
    let vl = var_list(&names);
    let gens: Result<Vec<MultiPoly>, _> = split(generators, ';')
        .iter()
        .map(|g| MultiPoly::parse(&vl, g))
        .collect();
    let ideal = match gens.and_then(|g| GradedIdeal::new(&vl, &degs, g)) {
        Ok(i) => i,
        Err(e) => return failure(e),
    };
    serde_json::to_string(&Hilbert {
        ok: true,
        dims: ideal.hilbert_function(max_degree),
    })
    .unwrap()
}

#[derive(Serialize)]
struct Row {
    tag: String,
    ambient: String,
    sections: String,
    moduli: String,
    delta: usize,
}

impl From<&TangentRow> for Row {
    fn from(r: &TangentRow) -> Self {
        let blocks: Vec<String> = r.ambient_blocks.iter().map(ToString::to_string).collect();
        Row {
            tag: r.tag.clone(),
            ambient: blocks.join(","),
            sections: r.sections.to_string(),
            moduli: r.moduli.to_string(),
            delta: r.delta,
        }
    }
}

#[derive(Serialize)]
struct Tables {
    ok: bool,
    lines: Vec<Row>,
    conics: Vec<Row>,
    s1: String,
    s2: String,
    s3: String,
}

/// Tangent weights at the fixed lines and conics and the resulting Poincaré
/// polynomials, with `S3` from the bundle presentation.
#[wasm_bindgen]
pub fn fixed_locus_tables() -> String {
    let build = || -> qcurves::Result<Tables> {
        let lines = tangent::s1_rows()?;
        let conics = tangent::s2_rows()?;
        Ok(Tables {
            ok: true,
            s1: tangent::poincare_of_rows(&lines).to_string(),
            s2: tangent::poincare_of_rows(&conics).to_string(),
            s3: cohring::poincare_s3_from_bundle()?.to_string(),
            lines: lines.iter().map(Row::from).collect(),
            conics: conics.iter().map(Row::from).collect(),
        })
    };
    match build() {
        Ok(t) => serde_json::to_string(&t).unwrap(),
        Err(e) => failure(e),
    }
}
