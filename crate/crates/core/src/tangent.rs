//! Tangent weights at fixed lines and conics, and Białynicki-Birula assembly
//! of Poincaré polynomials.

use std::fmt;

use crate::error::{Error, Result};
use crate::loci::{FixedConic, FixedLine};
use crate::quadric;
use crate::rep::{symd_basis, WeightMultiset, WeightedBasis};
use crate::series::Poincare;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentRow {
    pub tag: String,
    /// Ambient tangent weights, kept in the blocks they come from.
    pub ambient_blocks: Vec<WeightMultiset>,
    pub sections: WeightMultiset,
    pub moduli: WeightMultiset,
    pub delta: usize,
}

impl TangentRow {
    fn build(
        tag: &str,
        ambient_blocks: Vec<WeightMultiset>,
        sections: WeightMultiset,
    ) -> Result<Self> {
        let ambient = ambient_blocks
            .iter()
            .fold(WeightMultiset::default(), |acc, b| acc.union(b));
        let moduli = ambient.difference(&sections).ok_or_else(|| {
            Error::Consistency(format!(
                "({tag}): section weights {sections} do not embed in {ambient}"
            ))
        })?;
        let delta = moduli.count_negative();
        Ok(TangentRow {
            tag: tag.to_string(),
            ambient_blocks,
            sections,
            moduli,
            delta,
        })
    }

    pub fn ambient(&self) -> WeightMultiset {
        self.ambient_blocks
            .iter()
            .fold(WeightMultiset::default(), |acc, b| acc.union(b))
    }

    pub fn component(&self) -> BBComponent {
        BBComponent {
            name: self.tag.clone(),
            kind: ComponentKind::IsolatedPoint,
            delta: self.delta,
        }
    }
}

fn labels(b: &WeightedBasis) -> Vec<&str> {
    b.labels().iter().map(String::as_str).collect()
}

/// `T Gr(2, W_1) = Hom(U, W_1/U)` minus the sections `Sym²(U^∨)` of `O_L(2)`.
pub fn line_tangent_row(line: &FixedLine) -> Result<TangentRow> {
    let w1 = quadric::w1_basis()?;
    let span = line.span()?;
    let hom = span.hom(&w1.quotient(&labels(&span))?).multiset();
    let sections = span.dual().sym2().multiset();
    TangentRow::build(&line.tag, vec![hom], sections)
}

/// `Hom(U_C, W_1/U_C) ⊕ Sym²(U_C^∨)/C` twisted by the conic equation, minus
/// the sections of `O_C(2)`.
pub fn conic_tangent_row(conic: &FixedConic) -> Result<TangentRow> {
    let w1 = quadric::w1_basis()?;
    let hom = conic
        .plane
        .hom(&w1.quotient(&labels(&conic.plane))?)
        .multiset();
    let q = conic.equation_weight;
    let sym = conic.plane.dual().sym2().multiset();
    let sections = sym.remove_one(q).ok_or_else(|| {
        Error::Consistency(format!(
            "({}): equation weight {q} is not a weight of {sym}",
            conic.tag
        ))
    })?;
    TangentRow::build(&conic.tag, vec![hom, sections.shifted(-q)], sections)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentKind {
    IsolatedPoint,
    ProjectiveLine,
}

impl ComponentKind {
    pub fn euler(self) -> u64 {
        match self {
            ComponentKind::IsolatedPoint => 1,
            ComponentKind::ProjectiveLine => 2,
        }
    }
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComponentKind::IsolatedPoint => "point",
            ComponentKind::ProjectiveLine => "P1",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BBComponent {
    pub name: String,
    pub kind: ComponentKind,
    /// Number of negative weights of the normal space.
    pub delta: usize,
}

pub fn bb_poincare(components: &[BBComponent]) -> Poincare {
    let mut p = Poincare::default();
    for c in components {
        p.add_monomial(2 * c.delta, 1);
        if c.kind == ComponentKind::ProjectiveLine {
            p.add_monomial(2 * c.delta + 2, 1);
        }
    }
    p
}

pub fn euler_characteristic(kinds: impl IntoIterator<Item = ComponentKind>) -> u64 {
    kinds.into_iter().map(ComponentKind::euler).sum()
}

pub fn s1_rows() -> Result<Vec<TangentRow>> {
    crate::loci::fixed_lines()?
        .iter()
        .map(line_tangent_row)
        .collect()
}

pub fn s2_rows() -> Result<Vec<TangentRow>> {
    crate::loci::fixed_conics()?
        .iter()
        .map(conic_tangent_row)
        .collect()
}

pub fn poincare_of_rows(rows: &[TangentRow]) -> Poincare {
    bb_poincare(&rows.iter().map(TangentRow::component).collect::<Vec<_>>())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroWeightChain {
    pub w0_t_p4: usize,
    pub w0_n: usize,
    pub w0_t_q: usize,
    pub w0_moduli: usize,
}

/// Zero weights along `f: P^1 → Q`, `[u:v] ↦ [u³ : u²v : 3uv² : uv² : 3v³ : 0]`,
/// with domain weights `(1, -1)` and codomain weights shifted by `-1`.
pub fn zero_weight_chain() -> Result<ZeroWeightChain> {
    const SHIFT: i64 = -1;
    let shifted: Vec<i64> = quadric::coordinate_weights()
        .iter()
        .map(|w| w + SHIFT)
        .collect();
    // f is equivariant iff every nonzero coordinate u^i v^j has weight i - j
    let f_exps: [Option<(i64, i64)>; 6] = [
        Some((3, 0)),
        Some((2, 1)),
        Some((1, 2)),
        Some((1, 2)),
        Some((0, 3)),
        None,
    ];
    for (k, e) in f_exps.iter().enumerate() {
        if let Some((i, j)) = e {
            if i - j != shifted[k] {
                return Err(Error::Consistency(format!(
                    "the map is not equivariant at coordinate {k}"
                )));
            }
        }
    }
    let w1 = quadric::w1_basis()?.multiset().shifted(SHIFT);
    let cubics = symd_basis(3).multiset();
    let pairs: usize = cubics.as_slice().iter().map(|&s| w1.count_of(s)).sum();
    // the trivial factor of the Euler sequence carries one zero weight
    let w0_t_p4 = pairs - 1;
    let klein_weight = quadric::klein_form()
        .torus_weight(&shifted)
        .ok_or_else(|| Error::Consistency("Klein form is not weight-homogeneous".into()))?;
    let w0_n = symd_basis(6).multiset().count_of(klein_weight);
    let w0_t_q = w0_t_p4 - w0_n;
    let w0_t_p1 = symd_basis(2).multiset().count_zero();
    Ok(ZeroWeightChain {
        w0_t_p4,
        w0_n,
        w0_t_q,
        w0_moduli: w0_t_q - w0_t_p1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(s: &str) -> WeightMultiset {
        s.parse().unwrap()
    }

    #[test]
    fn table_one() {
        let rows = s1_rows().unwrap();
        let a = &rows[0];
        assert_eq!(a.ambient(), ms("-8,-6,-6,-4,-4,-2"));
        assert_eq!(a.sections, ms("-8,-6,-4"));
        assert_eq!(a.moduli, ms("-6,-4,-2"));
        assert_eq!(rows[1].moduli, ms("-4,-2,2"));
        assert_eq!(rows[3].ambient(), ms("2,4,4,6,6,8"));
        let deltas: Vec<usize> = rows.iter().map(|r| r.delta).collect();
        assert_eq!(deltas, [3, 2, 1, 0]);
        assert_eq!(poincare_of_rows(&rows).to_string(), "1+t^2+t^4+t^6");
    }

    #[test]
    fn table_three() {
        let rows = s2_rows().unwrap();
        let deltas: Vec<usize> = rows.iter().map(|r| r.delta).collect();
        assert_eq!(deltas, [6, 4, 2, 0, 5, 4, 2, 1, 3, 3]);
        assert_eq!(rows[8].moduli, ms("-6,-4,-2,2,4,6"));
        assert!(rows
            .iter()
            .all(|r| r.moduli.len() == 6 && r.moduli.count_zero() == 0));
        assert_eq!(
            poincare_of_rows(&rows).to_string(),
            "1+t^2+2t^4+2t^6+2t^8+t^10+t^12"
        );
    }

    #[test]
    fn projective_line_components() {
        let c = BBComponent {
            name: "x".into(),
            kind: ComponentKind::ProjectiveLine,
            delta: 1,
        };
        assert_eq!(bb_poincare(&[c]).to_string(), "t^2+t^4");
        assert_eq!(bb_poincare(&[]).to_string(), "0");
        assert_eq!(
            euler_characteristic([ComponentKind::ProjectiveLine, ComponentKind::IsolatedPoint]),
            3
        );
    }

    #[test]
    fn zero_weights() {
        let z = zero_weight_chain().unwrap();
        assert_eq!((z.w0_t_p4, z.w0_n, z.w0_t_q, z.w0_moduli), (3, 1, 2, 1));
    }
}
