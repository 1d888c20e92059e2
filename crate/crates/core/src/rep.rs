//! Torus weights of `SL(2)` representations.
//!
//! The maximal torus `diag(t^-1, t)` acts on `V_d = Sym^d C²` with basis
//! `v_d, v_{d-2}, …, v_{-d}` of weights `d, d-2, …, -d`. Labels spell negative
//! indices with an `m`, so `v_{-1}` is `vm1` and the Plücker coordinate
//! `v_{1,-3}` is `v1m3`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{var_list, Monomial, MultiPoly, VarList};
use crate::{rat, Rational};

/// Ordered basis whose vectors are torus weight vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedBasis {
    labels: Vec<String>,
    weights: Vec<i64>,
}

impl WeightedBasis {
    pub fn new<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        weights: Vec<i64>,
    ) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != weights.len() {
            return Err(Error::LengthMismatch {
                labels: labels.len(),
                weights: weights.len(),
            });
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(WeightedBasis { labels, weights })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn weight_of(&self, label: &str) -> Option<i64> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| self.weights[i])
    }

    pub fn multiset(&self) -> WeightMultiset {
        WeightMultiset::from_iter(self.weights.iter().copied())
    }

    /// Sub-basis on the given labels, in the order given.
    pub fn select(&self, labels: &[&str]) -> Result<WeightedBasis> {
        let weights = labels
            .iter()
            .map(|l| {
                self.weight_of(l)
                    .ok_or_else(|| Error::MissingLabel(l.to_string()))
            })
            .collect::<Result<_>>()?;
        WeightedBasis::new(labels.iter().copied(), weights)
    }

    pub fn dual(&self) -> WeightedBasis {
        WeightedBasis {
            labels: self.labels.iter().map(|l| format!("{l}^")).collect(),
            weights: self.weights.iter().map(|w| -w).collect(),
        }
    }

    pub fn tensor(&self, other: &WeightedBasis) -> WeightedBasis {
        let mut labels = Vec::new();
        let mut weights = Vec::new();
        for (a, wa) in self.labels.iter().zip(&self.weights) {
            for (b, wb) in other.labels.iter().zip(&other.weights) {
                labels.push(format!("{a}⊗{b}"));
                weights.push(wa + wb);
            }
        }
        WeightedBasis { labels, weights }
    }

    pub fn wedge2(&self) -> WeightedBasis {
        self.pairs(false, "∧")
    }

    pub fn sym2(&self) -> WeightedBasis {
        self.pairs(true, "·")
    }

    fn pairs(&self, diagonal: bool, sep: &str) -> WeightedBasis {
        let n = self.len();
        let mut labels = Vec::new();
        let mut weights = Vec::new();
        for i in 0..n {
            let start = if diagonal { i } else { i + 1 };
            for j in start..n {
                labels.push(format!("{}{sep}{}", self.labels[i], self.labels[j]));
                weights.push(self.weights[i] + self.weights[j]);
            }
        }
        WeightedBasis { labels, weights }
    }

    /// `Hom(self, target) = self^∨ ⊗ target`.
    pub fn hom(&self, target: &WeightedBasis) -> WeightedBasis {
        self.dual().tensor(target)
    }

    /// Quotient by the coordinate subspace spanned by `labels`.
    pub fn quotient(&self, labels: &[&str]) -> Result<WeightedBasis> {
        for l in labels {
            if self.weight_of(l).is_none() {
                return Err(Error::MissingLabel(l.to_string()));
            }
        }
        let (labels, weights) = self
            .labels
            .iter()
            .zip(&self.weights)
            .filter(|(l, _)| !labels.contains(&l.as_str()))
            .map(|(l, w)| (l.clone(), *w))
            .unzip();
        Ok(WeightedBasis { labels, weights })
    }
}

/// Formal construction over weighted bases.
#[derive(Debug, Clone)]
pub enum BasisExpr {
    Basis(WeightedBasis),
    Dual(Box<BasisExpr>),
    Tensor(Box<BasisExpr>, Box<BasisExpr>),
    Wedge2(Box<BasisExpr>),
    Sym2(Box<BasisExpr>),
    Hom(Box<BasisExpr>, Box<BasisExpr>),
    Quotient(Box<BasisExpr>, Vec<String>),
}

impl BasisExpr {
    pub fn eval(&self) -> Result<WeightedBasis> {
        Ok(match self {
            BasisExpr::Basis(b) => b.clone(),
            BasisExpr::Dual(a) => a.eval()?.dual(),
            BasisExpr::Tensor(a, b) => a.eval()?.tensor(&b.eval()?),
            BasisExpr::Wedge2(a) => a.eval()?.wedge2(),
            BasisExpr::Sym2(a) => a.eval()?.sym2(),
            BasisExpr::Hom(a, b) => a.eval()?.hom(&b.eval()?),
            BasisExpr::Quotient(a, sub) => {
                let sub: Vec<&str> = sub.iter().map(String::as_str).collect();
                a.eval()?.quotient(&sub)?
            }
        })
    }
}

pub fn induced_basis(expr: &BasisExpr) -> Result<WeightedBasis> {
    expr.eval()
}

/// Multiset of integer weights kept in non-decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WeightMultiset(Vec<i64>);

impl FromIterator<i64> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        let mut v: Vec<i64> = iter.into_iter().collect();
        v.sort_unstable();
        WeightMultiset(v)
    }
}

impl WeightMultiset {
    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count_negative(&self) -> usize {
        self.0.iter().filter(|&&w| w < 0).count()
    }

    pub fn count_positive(&self) -> usize {
        self.0.iter().filter(|&&w| w > 0).count()
    }

    pub fn count_zero(&self) -> usize {
        self.count_of(0)
    }

    pub fn count_of(&self, w: i64) -> usize {
        self.0.iter().filter(|&&x| x == w).count()
    }

    pub fn union(&self, other: &WeightMultiset) -> WeightMultiset {
        self.0.iter().chain(&other.0).copied().collect()
    }

    /// Multiset difference; `None` unless `other` is a sub-multiset of `self`.
    pub fn difference(&self, other: &WeightMultiset) -> Option<WeightMultiset> {
        let mut rest = self.0.clone();
        for w in &other.0 {
            let i = rest.iter().position(|x| x == w)?;
            rest.remove(i);
        }
        Some(WeightMultiset(rest))
    }

    /// Remove one copy of `w`.
    pub fn remove_one(&self, w: i64) -> Option<WeightMultiset> {
        self.difference(&WeightMultiset(vec![w]))
    }

    pub fn shifted(&self, by: i64) -> WeightMultiset {
        self.0.iter().map(|w| w + by).collect()
    }

    /// Values that occur more than once.
    pub fn repeated(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self
            .0
            .windows(2)
            .filter(|p| p[0] == p[1])
            .map(|p| p[0])
            .collect();
        out.dedup();
        out
    }
}

impl fmt::Display for WeightMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for WeightMultiset {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(WeightMultiset::default());
        }
        s.split(',')
            .map(|x| {
                x.trim().parse::<i64>().map_err(|e| Error::Parse {
                    pos: 0,
                    msg: format!("{x:?}: {e}"),
                })
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sl2Op {
    E,
    F,
    H,
}

impl Sl2Op {
    pub const ALL: [Sl2Op; 3] = [Sl2Op::E, Sl2Op::F, Sl2Op::H];

    /// Weight change of a weight vector under the operator.
    pub fn weight_shift(self) -> i64 {
        match self {
            Sl2Op::E => 2,
            Sl2Op::F => -2,
            Sl2Op::H => 0,
        }
    }
}

impl FromStr for Sl2Op {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e" => Ok(Sl2Op::E),
            "f" => Ok(Sl2Op::F),
            "h" => Ok(Sl2Op::H),
            _ => Err(Error::InvalidArgument(format!(
                "unknown sl2 operator `{s}`"
            ))),
        }
    }
}

/// Index label: `3 -> "3"`, `-1 -> "m1"`.
pub fn index_label(i: i64) -> String {
    if i < 0 {
        format!("m{}", -i)
    } else {
        i.to_string()
    }
}

pub fn symd_basis(d: u32) -> WeightedBasis {
    let weights: Vec<i64> = (0..=i64::from(d)).map(|i| i64::from(d) - 2 * i).collect();
    let labels: Vec<String> = weights
        .iter()
        .map(|&w| format!("v{}", index_label(w)))
        .collect();
    WeightedBasis { labels, weights }
}

/// A linear operator written in a weighted basis. `matrix[r][c]` is the
/// coefficient of basis vector `r` in the image of basis vector `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearAction {
    basis: WeightedBasis,
    matrix: Vec<Vec<Rational>>,
}

impl LinearAction {
    pub fn basis(&self) -> &WeightedBasis {
        &self.basis
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn entry(&self, row: usize, col: usize) -> &Rational {
        &self.matrix[row][col]
    }

    /// Image of basis vector `col` as `(row, coefficient)` pairs.
    pub fn image(&self, col: usize) -> Vec<(usize, Rational)> {
        (0..self.basis.len())
            .filter(|&r| !self.matrix[r][col].is_zero())
            .map(|r| (r, self.matrix[r][col].clone()))
            .collect()
    }

    pub fn compose(&self, other: &LinearAction) -> LinearAction {
        let n = self.basis.len();
        let matrix = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        (0..n)
                            .map(|k| &self.matrix[r][k] * &other.matrix[k][c])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        LinearAction {
            basis: self.basis.clone(),
            matrix,
        }
    }

    pub fn combine(&self, a: &Rational, other: &LinearAction, b: &Rational) -> LinearAction {
        let matrix = self
            .matrix
            .iter()
            .zip(&other.matrix)
            .map(|(x, y)| x.iter().zip(y).map(|(p, q)| p * a + q * b).collect())
            .collect();
        LinearAction {
            basis: self.basis.clone(),
            matrix,
        }
    }

    /// `[self, other] = self∘other − other∘self`.
    pub fn bracket(&self, other: &LinearAction) -> LinearAction {
        self.compose(other)
            .combine(&rat(1), &other.compose(self), &rat(-1))
    }

    /// True if every nonzero entry maps weight `w` to weight `w + shift`.
    pub fn shifts_weights_by(&self, shift: i64) -> bool {
        let w = self.basis.weights();
        (0..w.len())
            .all(|r| (0..w.len()).all(|c| self.matrix[r][c].is_zero() || w[r] == w[c] + shift))
    }
}

pub fn sl2_operator(op: Sl2Op, d: u32) -> LinearAction {
    let basis = symd_basis(d);
    let n = basis.len();
    let d = i64::from(d);
    let mut matrix = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        let ii = i as i64;
        match op {
            // e·v_{d-2i} = i v_{d-2(i-1)}
            Sl2Op::E if i > 0 => matrix[i - 1][i] = rat(ii),
            // f·v_{d-2i} = (d-i) v_{d-2(i+1)}
            Sl2Op::F if i + 1 < n => matrix[i + 1][i] = rat(d - ii),
            Sl2Op::H => matrix[i][i] = rat(d - 2 * ii),
            _ => {}
        }
    }
    LinearAction { basis, matrix }
}

/// Plücker label `v_{a,b}` with `a > b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlueckerLabel {
    pub hi: i64,
    pub lo: i64,
}

impl PlueckerLabel {
    /// Normalize `v_{a,b}`; writing `v_{b,a}` with `b < a` flips the sign.
    pub fn normalized(a: i64, b: i64) -> Result<(i64, PlueckerLabel)> {
        match a.cmp(&b) {
            std::cmp::Ordering::Greater => Ok((1, PlueckerLabel { hi: a, lo: b })),
            std::cmp::Ordering::Less => Ok((-1, PlueckerLabel { hi: b, lo: a })),
            std::cmp::Ordering::Equal => Err(Error::InvalidArgument(format!(
                "v_{{{a},{b}}} has a repeated index"
            ))),
        }
    }

    pub fn weight(&self) -> i64 {
        self.hi + self.lo
    }

    pub fn name(&self) -> String {
        format!("v{}{}", index_label(self.hi), index_label(self.lo))
    }
}

/// Plücker labels of `∧² V_d` in coordinate order.
pub fn pluecker_labels(d: u32) -> Vec<PlueckerLabel> {
    let w = symd_basis(d).weights;
    let mut out = Vec::new();
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            out.push(PlueckerLabel { hi: w[i], lo: w[j] });
        }
    }
    out
}

pub fn pluecker_vars(d: u32) -> VarList {
    let names: Vec<String> = pluecker_labels(d).iter().map(PlueckerLabel::name).collect();
    var_list(&names)
}

pub fn pluecker_weights(d: u32) -> Vec<i64> {
    pluecker_labels(d)
        .iter()
        .map(PlueckerLabel::weight)
        .collect()
}

/// Leibniz-rule image `g(v_a ∧ v_b) = g·v_a ∧ v_b + v_a ∧ g·v_b`, written as a
/// linear form in the Plücker variables of `∧² V_d`.
pub fn wedge2_operator_action(op: Sl2Op, d: u32, a: i64, b: i64) -> Result<MultiPoly> {
    let vars = pluecker_vars(d);
    let labels = pluecker_labels(d);
    let basis = symd_basis(d);
    let act = sl2_operator(op, d);
    let col = |w: i64| {
        basis
            .weights
            .iter()
            .position(|&x| x == w)
            .ok_or_else(|| Error::InvalidArgument(format!("{w} is not a weight of V_{d}")))
    };
    let (ia, ib) = (col(a)?, col(b)?);
    PlueckerLabel::normalized(a, b)?;
    let mut out = MultiPoly::zero(&vars);
    let mut push = |x: i64, y: i64, c: Rational| -> Result<()> {
        if x == y {
            return Ok(());
        }
        let (sign, l) = PlueckerLabel::normalized(x, y)?;
        let k = labels.iter().position(|p| *p == l).expect("label in range");
        let mut e = vec![0; labels.len()];
        e[k] = 1;
        out = &out + &MultiPoly::monomial(&vars, Monomial(e), c * rat(sign));
        Ok(())
    };
    for (r, c) in act.image(ia) {
        push(basis.weights[r], b, c)?;
    }
    for (r, c) in act.image(ib) {
        push(a, basis.weights[r], c)?;
    }
    Ok(out)
}

/// Apply an operator to a linear form in the Plücker variables of `∧² V_3`.
pub fn wedge2_apply(op: Sl2Op, form: &MultiPoly) -> Result<MultiPoly> {
    let labels = pluecker_labels(3);
    let mut out = MultiPoly::zero(form.vars());
    for (m, c) in form.terms() {
        let k =
            m.0.iter()
                .position(|&e| e == 1)
                .filter(|_| m.total_degree() == 1)
                .ok_or_else(|| Error::InvalidArgument(format!("{form} is not a linear form")))?;
        let img = wedge2_operator_action(op, 3, labels[k].hi, labels[k].lo)?;
        out = &out + &img.with_vars(form.vars())?.scale(c);
    }
    Ok(out)
}

/// The `SL(2)`-invariant linear form on `∧² V_3`, found as the kernel of `e`
/// on the weight-0 forms and normalized to leading coefficient 1.
pub fn invariant_hyperplane() -> Result<MultiPoly> {
    let labels = pluecker_labels(3);
    let vars = pluecker_vars(3);
    let zero: Vec<usize> = (0..labels.len())
        .filter(|&k| labels[k].weight() == 0)
        .collect();
    let images = |op: Sl2Op| -> Result<Vec<MultiPoly>> {
        zero.iter()
            .map(|&k| wedge2_operator_action(op, 3, labels[k].hi, labels[k].lo))
            .collect()
    };
    let e_img = images(Sl2Op::E)?;
    // rows: target coordinates; columns: the weight-0 source labels
    let rows: Vec<Vec<Rational>> = (0..labels.len())
        .map(|t| {
            let mut e = vec![0; labels.len()];
            e[t] = 1;
            let m = Monomial(e);
            e_img.iter().map(|p| p.coeff(&m)).collect()
        })
        .collect();
    let kernel = linalg::nullspace(&rows, zero.len());
    if kernel.len() != 1 {
        return Err(Error::Consistency(format!(
            "kernel of e on weight-0 forms has dimension {}",
            kernel.len()
        )));
    }
    let mut form = MultiPoly::zero(&vars);
    for (&k, c) in zero.iter().zip(&kernel[0]) {
        let mut e = vec![0; labels.len()];
        e[k] = 1;
        form = &form + &MultiPoly::monomial(&vars, Monomial(e), c.clone());
    }
    let lead = form
        .leading_term()
        .map(|(_, c)| c.clone())
        .unwrap_or_else(Rational::one);
    let form = form.scale(&lead.recip());
    if !wedge2_apply(Sl2Op::F, &form)?.is_zero() {
        return Err(Error::Consistency(format!("{form} is not killed by f")));
    }
    Ok(form)
}

/// Coefficients of a linear form keyed by variable name.
pub fn linear_coefficients(form: &MultiPoly) -> BTreeMap<String, Rational> {
    let mut out = BTreeMap::new();
    for (m, c) in form.terms() {
        if let Some(k) = m.0.iter().position(|&e| e == 1) {
            out.insert(form.vars()[k].clone(), c.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symd_weights() {
        assert_eq!(symd_basis(3).weights(), &[3, 1, -1, -3]);
        assert_eq!(symd_basis(3).labels(), &["v3", "v1", "vm1", "vm3"]);
        assert_eq!(symd_basis(0).weights(), &[0]);
        assert_eq!(symd_basis(2).weights(), &[2, 0, -2]);
    }

    #[test]
    fn operator_examples() {
        let h = sl2_operator(Sl2Op::H, 3);
        let diag: Vec<Rational> = (0..4).map(|i| h.entry(i, i).clone()).collect();
        assert_eq!(diag, vec![rat(3), rat(1), rat(-1), rat(-3)]);
        assert!(sl2_operator(Sl2Op::E, 3).image(0).is_empty());
        assert_eq!(sl2_operator(Sl2Op::F, 3).image(0), vec![(1, rat(3))]);
    }

    #[test]
    fn wedge2_weights() {
        assert_eq!(
            symd_basis(3).wedge2().multiset().as_slice(),
            &[-4, -2, 0, 0, 2, 4]
        );
        assert_eq!(symd_basis(3).wedge2().weights(), &[4, 2, 0, 0, -2, -4]);
    }

    #[test]
    fn sym2_of_dual_line() {
        let span = WeightedBasis::new(["a", "b"], vec![4, 2]).unwrap();
        assert_eq!(span.dual().sym2().multiset().to_string(), "-8,-6,-4");
    }

    #[test]
    fn hom_has_diagonal_zeros() {
        let a = WeightedBasis::new(["x", "y", "z"], vec![5, -1, 2]).unwrap();
        assert_eq!(a.hom(&a).multiset().count_zero(), 3);
    }

    #[test]
    fn quotient_errors_on_missing_label() {
        let a = WeightedBasis::new(["x", "y"], vec![1, 2]).unwrap();
        assert_eq!(a.quotient(&["w"]), Err(Error::MissingLabel("w".into())));
        assert_eq!(a.quotient(&["x"]).unwrap().weights(), &[2]);
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert!(matches!(
            WeightedBasis::new(["x", "x"], vec![1, 2]),
            Err(Error::DuplicateLabel(_))
        ));
        assert!(matches!(
            WeightedBasis::new(["x"], vec![1, 2]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn expression_tree() {
        let v = BasisExpr::Basis(symd_basis(3));
        let w = BasisExpr::Wedge2(Box::new(v.clone()));
        let hom = BasisExpr::Hom(Box::new(v), Box::new(w));
        assert_eq!(induced_basis(&hom).unwrap().len(), 24);
    }

    #[test]
    fn e_action_table() {
        let e = |a, b| {
            wedge2_operator_action(Sl2Op::E, 3, a, b)
                .unwrap()
                .to_string()
        };
        assert_eq!(e(3, 1), "0");
        assert_eq!(e(3, -1), "2*v31");
        assert_eq!(e(3, -3), "3*v3m1");
        assert_eq!(e(1, -1), "v3m1");
        assert_eq!(e(1, -3), "v3m3 + 3*v1m1");
        assert_eq!(e(-1, -3), "2*v1m3");
    }

    #[test]
    fn h_acts_by_weight() {
        let p = wedge2_operator_action(Sl2Op::H, 3, 3, -1).unwrap();
        assert_eq!(p.to_string(), "2*v3m1");
    }

    #[test]
    fn reversed_label_flips_sign() {
        let p = wedge2_operator_action(Sl2Op::H, 3, -1, 3).unwrap();
        assert_eq!(p.to_string(), "-2*v3m1");
        assert!(PlueckerLabel::normalized(1, 1).is_err());
    }

    #[test]
    fn hyperplane_is_invariant() {
        let hyp = invariant_hyperplane().unwrap();
        assert_eq!(hyp.to_string(), "v3m3 - 3*v1m1");
        assert_eq!(hyp.torus_weight(&pluecker_weights(3)), Some(0));
        // independent check straight from the e-table: e(a v3m3 + b v1m1) = (3a + b) v3m1
        let c = linear_coefficients(&hyp);
        assert_eq!(rat(3) * &c["v3m3"] + &c["v1m1"], rat(0));
        assert!(wedge2_apply(Sl2Op::E, &hyp).unwrap().is_zero());
    }

    #[test]
    fn multiset_difference() {
        let a: WeightMultiset = "-8,-6,-6,-4,-4,-2".parse().unwrap();
        let b: WeightMultiset = "-8,-6,-4".parse().unwrap();
        assert_eq!(a.difference(&b).unwrap().to_string(), "-6,-4,-2");
        assert!(b.difference(&a).is_none());
        assert_eq!(a.repeated(), vec![-6, -4]);
    }
}
