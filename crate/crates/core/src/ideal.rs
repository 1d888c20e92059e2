//! Homogeneous ideals in a weighted polynomial ring and their Hilbert functions.
//!
//! Everything is computed one graded piece at a time: the degree-`d` piece of
//! the ideal is the span of `m * g` over generators `g` and monomials `m` with
//! `deg(m * g) = d`, and its rank is found by exact row reduction.

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{check_same, Monomial, MultiPoly, VarList};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedIdeal {
    vars: VarList,
    degrees: Vec<u32>,
    generators: Vec<MultiPoly>,
}

/// Reduced echelon form of one graded piece of an ideal.
struct Piece {
    /// Monomials of the degree, largest first; column order.
    basis: Vec<Monomial>,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl GradedIdeal {
    pub fn new(vars: &VarList, degrees: &[u32], generators: Vec<MultiPoly>) -> Result<Self> {
        if degrees.len() != vars.len() {
            return Err(Error::InvalidArgument(format!(
                "{} degrees for {} variables",
                degrees.len(),
                vars.len()
            )));
        }
        if degrees.contains(&0) {
            return Err(Error::InvalidArgument(
                "variable degrees must be positive".into(),
            ));
        }
        for (index, g) in generators.iter().enumerate() {
            check_same(vars, g.vars())?;
            if !g.is_homogeneous(degrees) {
                return Err(Error::Inhomogeneous {
                    index,
                    poly: g.to_string(),
                });
            }
        }
        Ok(GradedIdeal {
            vars: vars.clone(),
            degrees: degrees.to_vec(),
            generators,
        })
    }

    pub fn zero(vars: &VarList, degrees: &[u32]) -> Result<Self> {
        Self::new(vars, degrees, Vec::new())
    }

    pub fn vars(&self) -> &VarList {
        &self.vars
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn with_generator(&self, g: MultiPoly) -> Result<Self> {
        let mut gens = self.generators.clone();
        gens.push(g);
        Self::new(&self.vars, &self.degrees, gens)
    }

    /// Degrees of the generators, in order (zero generators report 0).
    pub fn generator_degrees(&self) -> Vec<u32> {
        self.generators
            .iter()
            .map(|g| g.homogeneous_degree(&self.degrees).unwrap_or(0))
            .collect()
    }

    /// All monomials of weighted degree `d`, largest first in graded-lex order.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.vars.len()];
        enumerate(&self.degrees, 0, d, &mut exps, &mut out);
        out.sort();
        out.reverse();
        out
    }

    fn piece(&self, d: u32) -> Piece {
        let basis = self.monomials_of_degree(d);
        let col: HashMap<&Monomial, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = Vec::new();
        for g in &self.generators {
            let Some(gd) = g.homogeneous_degree(&self.degrees) else {
                continue;
            };
            if gd > d {
                continue;
            }
            for m in self.monomials_of_degree(d - gd) {
                let mult = MultiPoly::monomial(&self.vars, m, crate::rat(1));
                let p = &mult * g;
                let mut row = vec![Rational::zero(); basis.len()];
                for (mono, c) in p.terms() {
                    row[col[mono]] = c.clone();
                }
                rows.push(row);
            }
        }
        let pivots = linalg::rref(&mut rows);
        Piece {
            basis,
            rows,
            pivots,
        }
    }

    /// Dimension of the degree-`d` piece of the quotient ring.
    pub fn hilbert_dim(&self, d: u32) -> usize {
        let p = self.piece(d);
        p.basis.len() - p.pivots.len()
    }

    /// Hilbert function at degrees `0..=max_degree`.
    pub fn hilbert_function(&self, max_degree: u32) -> Vec<usize> {
        (0..=max_degree).map(|d| self.hilbert_dim(d)).collect()
    }

    /// Reduce a homogeneous polynomial modulo the degree piece of the ideal.
    ///
    /// The result is supported on the non-pivot monomials of the reduced
    /// echelon form (columns ordered largest monomial first), so it is a
    /// canonical representative of the residue class.
    pub fn normal_form(&self, f: &MultiPoly) -> Result<MultiPoly> {
        check_same(&self.vars, f.vars())?;
        if f.is_zero() {
            return Ok(f.clone());
        }
        let d = f
            .homogeneous_degree(&self.degrees)
            .ok_or_else(|| Error::NotHomogeneous(f.to_string()))?;
        let p = self.piece(d);
        let col: HashMap<&Monomial, usize> =
            p.basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut v = vec![Rational::zero(); p.basis.len()];
        for (m, c) in f.terms() {
            v[col[m]] = c.clone();
        }
        for (row, &pc) in p.rows.iter().zip(&p.pivots) {
            if v[pc].is_zero() {
                continue;
            }
            let k = v[pc].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &k * y;
                }
            }
        }
        Ok(MultiPoly::from_terms(
            &self.vars,
            p.basis.into_iter().zip(v).map(|(m, c)| (m.0, c)),
        ))
    }

    /// Exact membership test for a homogeneous polynomial.
    pub fn contains(&self, f: &MultiPoly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

fn enumerate(w: &[u32], i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if i == w.len() {
        if left == 0 {
            out.push(Monomial(exps.clone()));
        }
        return;
    }
    let mut e = 0;
    while e * w[i] <= left {
        exps[i] = e;
        enumerate(w, i + 1, left - e * w[i], exps, out);
        e += 1;
    }
    exps[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::var_list;

    fn chern_ring() -> (VarList, Vec<u32>) {
        (var_list(&["c1", "c2"]), vec![1, 2])
    }

    fn binom(n: u64, k: u64) -> u64 {
        (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
    }

    #[test]
    fn polynomial_ring_dimensions() {
        let v = var_list(&["x", "y", "z"]);
        let i = GradedIdeal::zero(&v, &[1, 1, 1]).unwrap();
        assert_eq!(i.hilbert_dim(0), 1);
        assert_eq!(i.hilbert_dim(1), 3);
        for d in 0..6u32 {
            assert_eq!(i.hilbert_dim(d) as u64, binom(u64::from(d) + 2, 2));
        }
    }

    #[test]
    fn inhomogeneous_generator_is_identified() {
        let (v, w) = chern_ring();
        let good = MultiPoly::parse(&v, "c1^2 - c2").unwrap();
        let bad = MultiPoly::parse(&v, "c1^2 - c1").unwrap();
        let err = GradedIdeal::new(&v, &w, vec![good, bad]).unwrap_err();
        assert!(matches!(err, Error::Inhomogeneous { index: 1, .. }));
    }

    #[test]
    fn grassmannian_middle_degree() {
        let (v, w) = chern_ring();
        let gens = ["c1^3 - 2*c1*c2", "c1^4 - 3*c1^2*c2 + c2^2"]
            .iter()
            .map(|s| MultiPoly::parse(&v, s).unwrap())
            .collect();
        let i = GradedIdeal::new(&v, &w, gens).unwrap();
        assert_eq!(i.hilbert_dim(2), 2);
        assert_eq!(i.hilbert_function(6), vec![1, 1, 2, 1, 1, 0, 0]);
    }

    #[test]
    fn normal_form_prefers_small_monomials() {
        let (v, w) = chern_ring();
        let gens = vec![MultiPoly::parse(&v, "c1^3 - 2*c1*c2").unwrap()];
        let i = GradedIdeal::new(&v, &w, gens).unwrap();
        let f = MultiPoly::parse(&v, "c1^3").unwrap();
        assert_eq!(i.normal_form(&f).unwrap().to_string(), "2*c1*c2");
    }

    #[test]
    fn membership() {
        let v = var_list(&["x", "y"]);
        let gens = vec![MultiPoly::parse(&v, "x*y").unwrap()];
        let i = GradedIdeal::new(&v, &[1, 1], gens).unwrap();
        assert!(i
            .contains(&MultiPoly::parse(&v, "x^2*y - 3*x*y^2").unwrap())
            .unwrap());
        assert!(!i.contains(&MultiPoly::parse(&v, "x^2").unwrap()).unwrap());
        assert!(i
            .contains(&MultiPoly::parse(&v, "x + y").unwrap().scale(&crate::rat(0)))
            .unwrap());
    }
}
