//! Truncated deformations `π_t = π + t π₁ + … + t^N π_N` and their
//! equivalences, obstructions and extensions.

use crate::algebra::{check_pre_leibniz, Bilinear, PreLeibnizAlgebra, PreLeibnizRep};
use crate::cochain::{pl_bracket, ColoredCochain, PlainCochain};
use crate::cohomology::{coboundary_matrix, coboundary_preimage, delta_pl};
use crate::error::{precondition, shape, Error, Result};
use crate::exactla::{ratio, RatMatrix};
use crate::report::CheckReport;

/// A deformation of `base` up to order `N = terms.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedDeformation {
    base: PreLeibnizAlgebra,
    terms: Vec<ColoredCochain>,
}

impl TruncatedDeformation {
    pub fn new(base: PreLeibnizAlgebra, terms: Vec<ColoredCochain>) -> Result<Self> {
        if terms.is_empty() {
            return Err(shape("a deformation has order at least 1"));
        }
        let d = base.dim();
        if let Some((i, _)) =
            terms.iter().enumerate().find(|(_, t)| t.arity() != 2 || t.domain_dim() != d || t.codomain_dim() != d)
        {
            return Err(shape(format!("term {} is not a colored 2-cochain on the base space", i + 1)));
        }
        Ok(TruncatedDeformation { base, terms })
    }

    /// `π₁ = π`, higher terms zero: the structure `(1 + t) π`.
    pub fn scaling(base: &PreLeibnizAlgebra, order: usize) -> Self {
        let d = base.dim();
        let mut terms = vec![ColoredCochain::zero(2, d, d); order.max(1)];
        terms[0] = base.pi().clone();
        TruncatedDeformation { base: base.clone(), terms }
    }

    pub fn base(&self) -> &PreLeibnizAlgebra {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.terms.len()
    }

    /// `π₁, …, π_N`.
    pub fn terms(&self) -> &[ColoredCochain] {
        &self.terms
    }

    /// `π_k` with `π₀ = π`.
    pub fn term(&self, k: usize) -> &ColoredCochain {
        if k == 0 {
            self.base.pi()
        } else {
            &self.terms[k - 1]
        }
    }

    /// The same deformation with `π_{N+1}` appended.
    pub fn extended(&self, next: ColoredCochain) -> Result<Self> {
        let mut terms = self.terms.clone();
        terms.push(next);
        Self::new(self.base.clone(), terms)
    }
}

/// `Σ_{i+j=n, 0 ≤ i,j ≤ N} ⟦πᵢ, πⱼ⟧`.
fn order_sum(d: &TruncatedDeformation, n: usize) -> Result<ColoredCochain> {
    let dim = d.base.dim();
    let mut acc = ColoredCochain::zero(3, dim, dim);
    for i in 0..=n.min(d.order()) {
        let j = n - i;
        if j > d.order() {
            continue;
        }
        acc = &acc + &pl_bracket(d.term(i), d.term(j))?;
    }
    Ok(acc)
}

/// The first order `n ∈ 0..=N` at which `Σ_{i+j=n} ⟦πᵢ, πⱼ⟧ ≠ 0`, if any.
pub fn first_failing_order(d: &TruncatedDeformation) -> Result<Option<usize>> {
    for n in 0..=d.order() {
        if !order_sum(d, n)?.is_zero() {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// True when every order `0..=N` of the Maurer-Cartan equation vanishes.
pub fn check_order_n(d: &TruncatedDeformation) -> Result<bool> {
    Ok(first_failing_order(d)?.is_none())
}

/// `d_π(π′) + ½⟦π′, π′⟧ = 0` with `d_π = ⟦π, ·⟧`, cross-checked against the
/// identities for `π + π′`.
pub fn mc_in_twisted_dgla(p: &PreLeibnizAlgebra, pi_prime: &ColoredCochain) -> Result<bool> {
    if pi_prime.arity() != 2 || pi_prime.domain_dim() != p.dim() || pi_prime.codomain_dim() != p.dim() {
        return Err(shape("expected a colored 2-cochain on the base space"));
    }
    let half = ratio(1, 2);
    let mc = &pl_bracket(p.pi(), pi_prime)? + &pl_bracket(pi_prime, pi_prime)?.scaled(&half);
    let sum = PreLeibnizAlgebra::new(p.pi() + pi_prime)?;
    let direct = check_pre_leibniz(&sum)?.passed();
    if direct != mc.is_zero() {
        return Err(Error::Inconsistent("Maurer-Cartan equation and the identities of π + π′ disagree".into()));
    }
    Ok(direct)
}

/// Where an order-1 term sits in cohomology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InfinitesimalClass {
    NotACocycle,
    /// `π₁ = δ_pL(witness)`.
    Coboundary {
        witness: ColoredCochain,
    },
    Nontrivial,
}

pub fn infinitesimal_class(p: &PreLeibnizAlgebra, pi1: &ColoredCochain) -> Result<InfinitesimalClass> {
    let adj = PreLeibnizRep::adjoint(p);
    if !delta_pl(p, &adj, pi1)?.is_zero() {
        return Ok(InfinitesimalClass::NotACocycle);
    }
    Ok(match coboundary_preimage(p, &adj, pi1)? {
        Some(witness) => InfinitesimalClass::Coboundary { witness },
        None => InfinitesimalClass::Nontrivial,
    })
}

fn require_valid(d: &TruncatedDeformation) -> Result<()> {
    if let Some(n) = first_failing_order(d)? {
        return Err(precondition(format!("not a deformation: order {n} fails")));
    }
    Ok(())
}

/// `Ob = ½ Σ_{i+j=N+1, i,j ≥ 1} ⟦πᵢ, πⱼ⟧`, a 3-cocycle with adjoint coefficients.
pub fn obstruction(d: &TruncatedDeformation) -> Result<ColoredCochain> {
    require_valid(d)?;
    let n = d.order() + 1;
    let dim = d.base.dim();
    let mut acc = ColoredCochain::zero(3, dim, dim);
    for i in 1..n {
        acc = &acc + &pl_bracket(d.term(i), d.term(n - i))?;
    }
    let ob = acc.scaled(&ratio(1, 2));
    if !delta_pl(&d.base, &PreLeibnizRep::adjoint(&d.base), &ob)?.is_zero() {
        return Err(Error::Inconsistent("obstruction is not a cocycle".into()));
    }
    Ok(ob)
}

/// A term `π_{N+1}` with `δ_pL(π_{N+1}) = Ob`, or `None` when the obstruction
/// class is nontrivial.
pub fn extend(d: &TruncatedDeformation) -> Result<Option<ColoredCochain>> {
    let ob = obstruction(d)?;
    let dim = d.base.dim();
    let m2 = coboundary_matrix(&d.base, &PreLeibnizRep::adjoint(&d.base), 2)?;
    match m2.solve(ob.coords())? {
        None => Ok(None),
        Some(x) => Ok(Some(ColoredCochain::from_coords(2, dim, dim, x)?)),
    }
}

/// `φ_t = id + t φ₁ + … + t^N φ_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedEquivalence {
    maps: Vec<RatMatrix>,
}

impl TruncatedEquivalence {
    pub fn new(maps: Vec<RatMatrix>) -> Result<Self> {
        if maps.is_empty() {
            return Err(shape("an equivalence has order at least 1"));
        }
        let d = maps[0].rows();
        if maps.iter().any(|m| m.rows() != d || m.cols() != d) {
            return Err(shape("equivalence terms must be square maps of one size"));
        }
        Ok(TruncatedEquivalence { maps })
    }

    pub fn identity(dim: usize, order: usize) -> Self {
        TruncatedEquivalence { maps: vec![RatMatrix::zeros(dim, dim); order.max(1)] }
    }

    pub fn order(&self) -> usize {
        self.maps.len()
    }

    pub fn maps(&self) -> &[RatMatrix] {
        &self.maps
    }

    fn map(&self, k: usize) -> RatMatrix {
        if k == 0 {
            RatMatrix::identity(self.maps[0].rows())
        } else {
            self.maps[k - 1].clone()
        }
    }
}

/// The arity-1 colored cochain of a linear map.
pub fn map_cochain(m: &RatMatrix) -> ColoredCochain {
    ColoredCochain::from_color_parts(&[PlainCochain::from_matrix(m)]).expect("one color")
}

/// Checks `φ_t(π_t(c; x, y)) = π′_t(c; φ_t x, φ_t y)` coefficient by
/// coefficient in `t` through `t^N`, for both colors and all basis pairs.
pub fn check_equivalence(
    p: &PreLeibnizAlgebra,
    d: &TruncatedDeformation,
    d_prime: &TruncatedDeformation,
    e: &TruncatedEquivalence,
) -> Result<CheckReport> {
    let n = d.order();
    if d_prime.order() != n || e.order() != n {
        return Err(shape(format!("orders differ: {n}, {} and {}", d_prime.order(), e.order())));
    }
    if d.base != *p || d_prime.base != *p {
        return Err(precondition("both deformations must deform the given algebra"));
    }
    if e.maps[0].rows() != p.dim() {
        return Err(shape("equivalence acts on a space of a different dimension"));
    }
    require_valid(d)?;
    require_valid(d_prime)?;
    let dim = p.dim();
    let id = RatMatrix::identity(dim);
    let parts = |def: &TruncatedDeformation, k: usize, color: usize| {
        Bilinear::from_plain(&def.term(k).color_part(color)).expect("arity 2")
    };
    let mut report = CheckReport::new();
    for k in 0..=n {
        for color in 1..=2 {
            let mut lhs = Bilinear::zero(dim, dim, dim);
            for a in 0..=k {
                lhs = lhs.add(&parts(d, k - a, color).transform(&id, &id, Some(&e.map(a)))?)?;
            }
            let mut rhs = Bilinear::zero(dim, dim, dim);
            for a in 0..=k {
                for b in 0..=k - a {
                    let c = k - a - b;
                    rhs = rhs.add(&parts(d_prime, a, color).transform(&e.map(b), &e.map(c), None)?)?;
                }
            }
            let name = format!("order {k}, color {color}");
            for i in 0..dim {
                for j in 0..dim {
                    report.compare(
                        &name,
                        || format!("(x=e{}, y=e{})", i + 1, j + 1),
                        lhs.output(i, j).to_vec(),
                        rhs.output(i, j).to_vec(),
                    );
                }
            }
        }
    }
    Ok(report)
}
