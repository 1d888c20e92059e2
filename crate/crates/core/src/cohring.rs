//! Chern-class arithmetic on `Gr(2,4)` and the cohomology ring of the
//! twisted-cubic space as a `P^5`-bundle over it.

use crate::error::{Error, Result};
use crate::ideal::GradedIdeal;
use crate::poly::{var_list, MultiPoly, VarList};
use crate::series::Poincare;
use crate::Rational;

/// Chow degrees of `c1, c2`.
pub const CHOW_DEGREES: [u32; 2] = [1, 2];
/// Chow degrees of `c1, c2, h`.
pub const RING_DEGREES: [u32; 3] = [1, 2, 1];
/// Rank of the bundle whose projectivization is the twisted-cubic space.
pub const BUNDLE_RANK: u32 = 6;
/// Truncation degree for Chern series; `c5` and `c6` must be carried.
pub const TRUNCATION: u32 = 6;

pub const GR24_RELATIONS: [&str; 2] = ["c1^3 - 2*c1*c2", "c1^4 - 3*c1^2*c2 + c2^2"];
pub const EXPECTED_RELATION: &str =
    "h^6 - 5*c1*h^5 + 15*c1^2*h^4 - 5*c2*h^4 - 40*c1*c2*h^3 + 50*c2^2*h^2";

pub fn chow_vars() -> VarList {
    var_list(&["c1", "c2"])
}

pub fn ring_vars() -> VarList {
    var_list(&["c1", "c2", "h"])
}

/// A polynomial in `c1, c2` with all terms above a Chow degree discarded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernPolynomial {
    poly: MultiPoly,
    max_degree: u32,
}

impl ChernPolynomial {
    pub fn new(poly: MultiPoly, max_degree: u32) -> Self {
        let mut out = MultiPoly::zero(poly.vars());
        for d in 0..=max_degree {
            out = &out + &poly.graded_piece(&CHOW_DEGREES, d);
        }
        ChernPolynomial {
            poly: out,
            max_degree,
        }
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn piece(&self, d: u32) -> MultiPoly {
        self.poly.graded_piece(&CHOW_DEGREES, d)
    }

    pub fn mul(&self, other: &ChernPolynomial) -> ChernPolynomial {
        ChernPolynomial::new(
            &self.poly * &other.poly,
            self.max_degree.min(other.max_degree),
        )
    }

    pub fn pow(&self, n: u32) -> ChernPolynomial {
        let mut acc = ChernPolynomial::new(MultiPoly::one(self.poly.vars()), self.max_degree);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Inverse as a power series; the constant term must be 1.
    pub fn inverse(&self) -> Result<ChernPolynomial> {
        let one = MultiPoly::one(self.poly.vars());
        if self.piece(0) != one {
            return Err(Error::InvalidArgument(format!(
                "{} does not start with 1",
                self.poly
            )));
        }
        // 1/(1+x) = Σ (-x)^k, exact once k exceeds the truncation degree
        let minus_x = ChernPolynomial::new(&one - &self.poly, self.max_degree);
        let mut term = ChernPolynomial::new(one.clone(), self.max_degree);
        let mut sum = term.poly.clone();
        for _ in 0..self.max_degree {
            term = term.mul(&minus_x);
            sum = &sum + &term.poly;
        }
        Ok(ChernPolynomial::new(sum, self.max_degree))
    }
}

/// `c(U) = 1 + c1 + c2` for the tautological subbundle of `Gr(2,4)`.
pub fn tautological_chern() -> ChernPolynomial {
    ChernPolynomial::new(
        MultiPoly::parse(&chow_vars(), "1 + c1 + c2").unwrap(),
        TRUNCATION,
    )
}

pub fn gr24_relations() -> GradedIdeal {
    let vars = chow_vars();
    let gens = GR24_RELATIONS
        .iter()
        .map(|g| MultiPoly::parse(&vars, g).unwrap())
        .collect();
    GradedIdeal::new(&vars, &CHOW_DEGREES, gens).expect("homogeneous relations")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BundleRank {
    pub rank: u64,
}

/// Rank of `H^0(U_Q(2)) / (H^0(O_Q(1)) ⊗ C²)`.
pub fn bundle_rank_arithmetic(h0_o1: u64, h0_u2: u64) -> Result<BundleRank> {
    match h0_u2.checked_sub(2 * h0_o1) {
        Some(rank) if rank >= 1 => Ok(BundleRank { rank }),
        _ => Err(Error::InvalidArgument(format!(
            "h0(U(2)) = {h0_u2} leaves no positive rank over 2 x h0(O(1)) = {}",
            2 * h0_o1
        ))),
    }
}

/// `c(G) = c(U)^{-5}`, unreduced, truncated at degree 6.
pub fn raw_chern_classes() -> Result<ChernPolynomial> {
    tautological_chern().pow(5).inverse()
}

/// Chern classes `c0, …, c6` of `G` in normal form modulo the relations of
/// `Gr(2,4)`. Fails unless `c5` and `c6` vanish.
pub fn chern_classes() -> Result<Vec<MultiPoly>> {
    let raw = raw_chern_classes()?;
    let rel = gr24_relations();
    let out = (0..=TRUNCATION)
        .map(|d| rel.normal_form(&raw.piece(d)))
        .collect::<Result<Vec<_>>>()?;
    for (d, c) in out.iter().enumerate().skip(5) {
        if !c.is_zero() {
            return Err(Error::Consistency(format!(
                "c{d}(G) = {c} does not vanish on Gr(2,4)"
            )));
        }
    }
    Ok(out)
}

/// `Σ c_i(G) h^{6-i}`.
pub fn grothendieck_relation() -> Result<MultiPoly> {
    let vars = ring_vars();
    let h = MultiPoly::var(&vars, "h")?;
    let mut out = MultiPoly::zero(&vars);
    for (i, c) in chern_classes()?.iter().enumerate() {
        out = &out + &(&c.with_vars(&vars)? * &h.pow(BUNDLE_RANK - i as u32));
    }
    Ok(out)
}

pub fn expected_relation() -> MultiPoly {
    MultiPoly::parse(&ring_vars(), EXPECTED_RELATION).unwrap()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingPresentation {
    pub vars: VarList,
    pub ideal: GradedIdeal,
}

/// `Q[c1, c2, h]` modulo the Grassmannian relations and the Grothendieck relation.
pub fn ring_presentation() -> Result<RingPresentation> {
    let vars = ring_vars();
    let mut gens: Vec<MultiPoly> = gr24_relations()
        .generators()
        .iter()
        .map(|g| g.with_vars(&vars))
        .collect::<Result<_>>()?;
    gens.push(grothendieck_relation()?);
    let ideal = GradedIdeal::new(&vars, &RING_DEGREES, gens)?;
    if ideal.generator_degrees() != [3, 4, 6] {
        return Err(Error::Consistency(format!(
            "generator degrees {:?}",
            ideal.generator_degrees()
        )));
    }
    Ok(RingPresentation { vars, ideal })
}

/// Dimensions of the quotient ring in Chow degrees `0..=9`.
pub fn hilbert_series_s3() -> Result<Vec<usize>> {
    Ok(ring_presentation()?.ideal.hilbert_function(9))
}

pub fn poincare_s3_from_bundle() -> Result<Poincare> {
    Ok(Poincare::from_even_dims(&hilbert_series_s3()?))
}

/// Coefficient of a `c1^i c2^j` term in a Chow polynomial.
pub fn chow_coeff(p: &MultiPoly, i: u32, j: u32) -> Rational {
    p.coeff(&crate::Monomial(vec![i, j]))
}
