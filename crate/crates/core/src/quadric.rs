//! Plücker space `P(∧²V_3)`, the Klein quadric, the invariant hyperplane `H`
//! and the quadric threefold `Q = Gr(2,4) ∩ H`.
//!
//! Coordinates are ordered `(v31, v3m1, v3m3, v1m1, v1m3, vm1m3)` with torus
//! weights `(4, 2, 0, 0, -2, -4)`.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{var_list, MultiPoly, VarList};
use crate::rep::{self, WeightedBasis};
use crate::{rat, Rational};

pub const DIM: usize = 6;

pub fn coordinate_vars() -> VarList {
    rep::pluecker_vars(3)
}

pub fn coordinate_weights() -> Vec<i64> {
    rep::pluecker_weights(3)
}

pub fn klein_form() -> MultiPoly {
    MultiPoly::parse(&coordinate_vars(), "v31*vm1m3 - v3m1*v1m3 + v3m3*v1m1")
        .expect("valid literal")
}

pub fn hyperplane_form() -> MultiPoly {
    rep::invariant_hyperplane().expect("the invariant hyperplane is unique")
}

/// A point of `P^5` in homogeneous coordinates.
#[derive(Debug, Clone)]
pub struct PlueckerPoint {
    coords: Vec<Rational>,
}

impl PlueckerPoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != DIM {
            return Err(Error::InvalidArgument(format!(
                "expected {DIM} coordinates, got {}",
                coords.len()
            )));
        }
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::InvalidArgument("all coordinates are zero".into()));
        }
        Ok(PlueckerPoint { coords })
    }

    pub fn from_ints(c: [i64; DIM]) -> Result<Self> {
        Self::new(c.iter().map(|&x| rat(x)).collect())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// Representative with first nonzero coordinate equal to 1.
    pub fn normalized(&self) -> Vec<Rational> {
        let lead = self
            .coords
            .iter()
            .find(|c| !c.is_zero())
            .expect("nonzero point")
            .clone();
        self.coords.iter().map(|c| c / &lead).collect()
    }

    /// Indices of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        (0..DIM).filter(|&i| !self.coords[i].is_zero()).collect()
    }

    pub fn eval(&self, p: &MultiPoly) -> Rational {
        p.eval(&self.coords)
    }
}

impl PartialEq for PlueckerPoint {
    fn eq(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }
}

impl Eq for PlueckerPoint {}

impl fmt::Display for PlueckerPoint {
    /// Primitive integer representative whose first nonzero entry is positive.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.normalized();
        let den = n
            .iter()
            .fold(num_bigint::BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<num_bigint::BigInt> = n
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let g = ints
            .iter()
            .fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
        let parts: Vec<String> = ints.iter().map(|x| (x / &g).to_string()).collect();
        write!(f, "[{}]", parts.join(":"))
    }
}

/// Something that can be tested against the defining equations of `Q`.
pub trait QuadricMember {
    /// Whether `p` vanishes on the locus (identically, for curves).
    fn satisfies(&self, p: &MultiPoly) -> bool;

    fn on_grassmannian(&self) -> bool {
        self.satisfies(&klein_form())
    }

    fn on_hyperplane(&self) -> bool {
        self.satisfies(&hyperplane_form())
    }

    fn on_quadric(&self) -> bool {
        self.on_grassmannian() && self.on_hyperplane()
    }
}

impl QuadricMember for PlueckerPoint {
    fn satisfies(&self, p: &MultiPoly) -> bool {
        self.eval(p).is_zero()
    }
}

pub fn on_quadric(x: &impl QuadricMember) -> bool {
    x.on_quadric()
}

/// A rational curve `P^1 -> P^5` given by six coordinate polynomials in the
/// domain variables `u, v` (and possibly further formal parameters).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParametrizedCurve {
    vars: VarList,
    coords: Vec<MultiPoly>,
    degree: u32,
}

impl ParametrizedCurve {
    /// `vars` must start with the domain variables `u, v`.
    pub fn new(vars: &VarList, coords: Vec<MultiPoly>) -> Result<Self> {
        if coords.len() != DIM {
            return Err(Error::InvalidArgument(format!(
                "expected {DIM} coordinates, got {}",
                coords.len()
            )));
        }
        if vars.len() < 2 {
            return Err(Error::InvalidArgument("need domain variables u, v".into()));
        }
        let mut w = vec![0u32; vars.len()];
        w[0] = 1;
        w[1] = 1;
        let mut degree = None;
        for c in &coords {
            crate::poly::check_same(vars, c.vars())?;
            if c.is_zero() {
                continue;
            }
            let d = c
                .homogeneous_degree(&w)
                .ok_or_else(|| Error::NotHomogeneous(c.to_string()))?;
            if degree.is_some_and(|x| x != d) {
                return Err(Error::InvalidArgument(
                    "coordinates have different degrees".into(),
                ));
            }
            degree = Some(d);
        }
        let degree =
            degree.ok_or_else(|| Error::InvalidArgument("all coordinates vanish".into()))?;
        Ok(ParametrizedCurve {
            vars: vars.clone(),
            coords,
            degree,
        })
    }

    /// Build from Laurent terms `(coefficient, exponents)`; negative exponents
    /// of the formal parameters are cleared by a common monomial factor, which
    /// does not change the projective curve.
    pub fn from_laurent(vars: &VarList, coords: &[Vec<(Rational, Vec<i32>)>]) -> Result<Self> {
        let n = vars.len();
        let mut shift = vec![0i32; n];
        for t in coords.iter().flatten() {
            for (s, &e) in shift.iter_mut().zip(&t.1) {
                *s = (*s).min(e);
            }
        }
        if shift[0] < 0 || shift[1] < 0 {
            return Err(Error::InvalidArgument(
                "negative exponent of a domain variable".into(),
            ));
        }
        let polys = coords
            .iter()
            .map(|terms| {
                MultiPoly::from_terms(
                    vars,
                    terms.iter().map(|(c, e)| {
                        (
                            e.iter().zip(&shift).map(|(x, s)| (x - s) as u32).collect(),
                            c.clone(),
                        )
                    }),
                )
            })
            .collect();
        Self::new(vars, polys)
    }

    /// The line through two points, parametrized as `u·p + v·q`.
    pub fn line(p: &PlueckerPoint, q: &PlueckerPoint) -> Result<Self> {
        let vars = var_list(&["u", "v"]);
        let u = MultiPoly::var(&vars, "u")?;
        let v = MultiPoly::var(&vars, "v")?;
        let coords = (0..DIM)
            .map(|i| &u.scale(&p.coords[i]) + &v.scale(&q.coords[i]))
            .collect();
        Self::new(&vars, coords)
    }

    pub fn vars(&self) -> &VarList {
        &self.vars
    }

    pub fn coords(&self) -> &[MultiPoly] {
        &self.coords
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Pull a polynomial in the Plücker coordinates back along the curve.
    pub fn pullback(&self, p: &MultiPoly) -> Result<MultiPoly> {
        let assignment: BTreeMap<String, MultiPoly> = p
            .vars()
            .iter()
            .cloned()
            .zip(self.coords.iter().cloned())
            .collect();
        p.substitute(&assignment)
    }

    /// Specialize a formal parameter to a value.
    pub fn specialize(&self, param: &str, value: &Rational) -> Result<Self> {
        let mut assignment = BTreeMap::new();
        for v in self.vars.iter() {
            let img = if v == param {
                MultiPoly::constant(&self.vars, value.clone())
            } else {
                MultiPoly::var(&self.vars, v)?
            };
            assignment.insert(v.clone(), img);
        }
        let coords = self
            .coords
            .iter()
            .map(|c| c.substitute(&assignment))
            .collect::<Result<_>>()?;
        Self::new(&self.vars, coords)
    }
}

impl QuadricMember for ParametrizedCurve {
    fn satisfies(&self, p: &MultiPoly) -> bool {
        self.pullback(p).map(|q| q.is_zero()).unwrap_or(false)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Space {
    Quadric,
    Hyperplane,
}

/// A torus-fixed point of `H` together with its weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPoint {
    pub label: String,
    pub weight: i64,
    pub point: PlueckerPoint,
}

/// Weight vectors of `W_1 = ker(hyperplane form)`, one per weight space of
/// `W`, in decreasing weight order.
pub fn w1_fixed_points() -> Result<Vec<FixedPoint>> {
    let weights = coordinate_weights();
    let hyp = hyperplane_form();
    let hyp_coeffs = rep::linear_coefficients(&hyp);
    let vars = coordinate_vars();
    let mut distinct: Vec<i64> = weights.clone();
    distinct.sort_unstable_by(|a, b| b.cmp(a));
    distinct.dedup();
    let mut out = Vec::new();
    for w in distinct {
        let idx: Vec<usize> = (0..DIM).filter(|&i| weights[i] == w).collect();
        let row: Vec<Rational> = idx
            .iter()
            .map(|&i| {
                hyp_coeffs
                    .get(&vars[i])
                    .cloned()
                    .unwrap_or_else(Rational::zero)
            })
            .collect();
        let kernel = if row.iter().all(Zero::is_zero) {
            linalg::nullspace(&[], idx.len())
        } else {
            linalg::nullspace(&[row], idx.len())
        };
        for k in kernel {
            let mut c = vec![Rational::zero(); DIM];
            for (&i, x) in idx.iter().zip(k) {
                c[i] = x;
            }
            let point = PlueckerPoint::new(c)?;
            let support = point.support();
            let label = if support.len() == 1 {
                format!("p{}", &vars[support[0]][1..])
            } else {
                format!("q{}", rep::index_label(w))
            };
            out.push(FixedPoint {
                label,
                weight: w,
                point,
            });
        }
    }
    Ok(out)
}

/// `W_1` as a weighted basis labelled by its fixed points.
pub fn w1_basis() -> Result<WeightedBasis> {
    let pts = w1_fixed_points()?;
    WeightedBasis::new(
        pts.iter().map(|p| p.label.clone()),
        pts.iter().map(|p| p.weight).collect(),
    )
}

/// Torus-fixed points of `Q` or of `H`.
///
/// Every weight space of `W_1` is one-dimensional, so the fixed points of
/// `P(W_1)` are exactly its weight vectors; those of `Q` are the ones on the
/// Klein quadric.
pub fn fixed_points(space: Space) -> Result<Vec<FixedPoint>> {
    let all = w1_fixed_points()?;
    Ok(match space {
        Space::Hyperplane => all,
        Space::Quadric => all.into_iter().filter(|p| p.point.on_quadric()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(c: [i64; 6]) -> PlueckerPoint {
        PlueckerPoint::from_ints(c).unwrap()
    }

    #[test]
    fn klein_text() {
        assert_eq!(
            klein_form().to_string(),
            "v31*vm1m3 - v3m1*v1m3 + v3m3*v1m1"
        );
        assert_eq!(klein_form().torus_weight(&coordinate_weights()), Some(0));
        assert_eq!(
            hyperplane_form().torus_weight(&coordinate_weights()),
            Some(0)
        );
    }

    #[test]
    fn klein_values() {
        assert_eq!(pt([1, 0, 0, 0, 0, 0]).eval(&klein_form()), rat(0));
        assert_eq!(pt([1, 0, 0, 0, 0, 1]).eval(&klein_form()), rat(1));
    }

    #[test]
    fn q0_is_on_h_but_not_on_q() {
        let q0 = pt([0, 0, 3, 1, 0, 0]);
        assert!(q0.on_hyperplane());
        assert!(!q0.on_grassmannian());
        assert!(!on_quadric(&q0));
        assert_eq!(q0.eval(&klein_form()), rat(3));
    }

    #[test]
    fn fixed_points_of_q_and_h() {
        let q = fixed_points(Space::Quadric).unwrap();
        let labels: Vec<&str> = q.iter().map(|p| p.label.as_str()).collect();
        assert_eq!(labels, ["p31", "p3m1", "p1m3", "pm1m3"]);
        let h = fixed_points(Space::Hyperplane).unwrap();
        assert_eq!(h.len(), 5);
        let q0 = h.iter().find(|p| p.label == "q0").unwrap();
        assert_eq!(q0.point.to_string(), "[0:0:3:1:0:0]");
        assert_eq!(q0.weight, 0);
        assert_eq!(q[0].point.to_string(), "[1:0:0:0:0:0]");
    }

    #[test]
    fn w1_weights() {
        assert_eq!(w1_basis().unwrap().weights(), &[4, 2, 0, -2, -4]);
    }

    #[test]
    fn projective_equality() {
        let a = PlueckerPoint::new(vec![rat(0), rat(0), rat(3), rat(1), rat(0), rat(0)]).unwrap();
        let b = PlueckerPoint::new(vec![rat(0), rat(0), rat(-6), rat(-2), rat(0), rat(0)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(b.to_string(), "[0:0:3:1:0:0]");
        assert!(PlueckerPoint::from_ints([0; 6]).is_err());
    }

    #[test]
    fn lines_and_membership() {
        let l = ParametrizedCurve::line(&pt([1, 0, 0, 0, 0, 0]), &pt([0, 1, 0, 0, 0, 0])).unwrap();
        assert!(l.on_quadric());
        let bad =
            ParametrizedCurve::line(&pt([1, 0, 0, 0, 0, 0]), &pt([0, 0, 0, 0, 0, 1])).unwrap();
        assert!(!bad.on_quadric());
        assert_eq!(bad.pullback(&klein_form()).unwrap().to_string(), "u*v");
    }
}
