//! Leibniz and pre-Leibniz algebras given by structure constants, their
//! representations, and the constructions relating them.
//!
//! Containers accept any structure constants of the right shape; validity is
//! established by the `check_*` functions, which evaluate every defining
//! identity on every tuple of basis vectors.

use num_traits::{One, Zero};

use crate::cochain::{pl_bracket, totalize_cochain, Block, ColoredCochain, PlainCochain};
use crate::error::{precondition, shape, Error, Result};
use crate::exactla::{axpy, is_zero_vec, rat, unit_vec, vec_add, vec_sub, RatMatrix, Rational};
use crate::report::CheckReport;

/// A bilinear map `U ⊗ V → W`, coefficients ordered by `(i, j, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bilinear {
    left_dim: usize,
    right_dim: usize,
    out_dim: usize,
    coeffs: Vec<Rational>,
}

impl Bilinear {
    pub fn zero(left_dim: usize, right_dim: usize, out_dim: usize) -> Self {
        Bilinear { left_dim, right_dim, out_dim, coeffs: vec![Rational::zero(); left_dim * right_dim * out_dim] }
    }

    pub fn from_coords(left_dim: usize, right_dim: usize, out_dim: usize, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != left_dim * right_dim * out_dim {
            return Err(shape(format!(
                "{} coefficients for a {left_dim}x{right_dim}->{out_dim} bilinear map",
                coeffs.len()
            )));
        }
        Ok(Bilinear { left_dim, right_dim, out_dim, coeffs })
    }

    pub fn from_plain(f: &PlainCochain) -> Result<Self> {
        if f.arity() != 2 {
            return Err(shape(format!("expected a bilinear map, got arity {}", f.arity())));
        }
        Self::from_coords(f.domain_dim(), f.domain_dim(), f.codomain_dim(), f.coords().to_vec())
    }

    /// The same map as an arity-2 cochain; both inputs must have one dimension.
    pub fn to_plain(&self) -> Result<PlainCochain> {
        if self.left_dim != self.right_dim {
            return Err(shape("inputs of different dimensions"));
        }
        PlainCochain::from_coords(2, self.left_dim, self.out_dim, self.coeffs.clone())
    }

    pub fn left_dim(&self) -> usize {
        self.left_dim
    }

    pub fn right_dim(&self) -> usize {
        self.right_dim
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coeffs)
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        assert!(i < self.left_dim && j < self.right_dim, "basis index out of range");
        (i * self.right_dim + j) * self.out_dim
    }

    pub fn output(&self, i: usize, j: usize) -> &[Rational] {
        let o = self.offset(i, j);
        &self.coeffs[o..o + self.out_dim]
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.output(i, j)[k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Rational) {
        assert!(k < self.out_dim, "output index out of range");
        let o = self.offset(i, j);
        self.coeffs[o + k] = value;
    }

    /// `f(x, y)` for coordinate vectors.
    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.left_dim, "left input has the wrong dimension");
        assert_eq!(y.len(), self.right_dim, "right input has the wrong dimension");
        let mut out = vec![Rational::zero(); self.out_dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                axpy(&mut out, &(xi * yj), self.output(i, j));
            }
        }
        out
    }

    pub fn add(&self, other: &Bilinear) -> Result<Bilinear> {
        if (self.left_dim, self.right_dim, self.out_dim) != (other.left_dim, other.right_dim, other.out_dim) {
            return Err(shape("bilinear maps of different shapes"));
        }
        let coeffs = vec_add(&self.coeffs, &other.coeffs);
        Ok(Bilinear { coeffs, ..*self })
    }

    pub fn scaled(&self, s: &Rational) -> Bilinear {
        Bilinear { coeffs: self.coeffs.iter().map(|c| c * s).collect(), ..*self }
    }

    /// `(x, y) ↦ f(y, x)`.
    pub fn swapped(&self) -> Bilinear {
        let mut out = Bilinear::zero(self.right_dim, self.left_dim, self.out_dim);
        for i in 0..self.left_dim {
            for j in 0..self.right_dim {
                let o = out.offset(j, i);
                out.coeffs[o..o + self.out_dim].clone_from_slice(self.output(i, j));
            }
        }
        out
    }

    /// `(x, y) ↦ post(f(a x, b y))`.
    pub fn transform(&self, a: &RatMatrix, b: &RatMatrix, post: Option<&RatMatrix>) -> Result<Bilinear> {
        if a.rows() != self.left_dim || b.rows() != self.right_dim {
            return Err(shape("precomposition maps do not match the inputs"));
        }
        if let Some(p) = post {
            if p.cols() != self.out_dim {
                return Err(shape("postcomposition map does not match the output"));
            }
        }
        let mut out = Bilinear::zero(a.cols(), b.cols(), self.out_dim);
        for i in 0..a.cols() {
            let x = a.column(i);
            for j in 0..b.cols() {
                let v = self.apply(&x, &b.column(j));
                let o = out.offset(i, j);
                out.coeffs[o..o + self.out_dim].clone_from_slice(&v);
            }
        }
        match post {
            None => Ok(out),
            Some(p) => {
                let mut res = Bilinear::zero(out.left_dim, out.right_dim, p.rows());
                for i in 0..out.left_dim {
                    for j in 0..out.right_dim {
                        let v = p.mul_vec(out.output(i, j))?;
                        let o = res.offset(i, j);
                        res.coeffs[o..o + p.rows()].clone_from_slice(&v);
                    }
                }
                Ok(res)
            }
        }
    }

    /// Nonzero coefficients as `(i, j, k, value)` in canonical order.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        let mut out = Vec::new();
        for i in 0..self.left_dim {
            for j in 0..self.right_dim {
                for (k, c) in self.output(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    pub(crate) fn blocks(&self, color: usize) -> Vec<Block<'_>> {
        let mut out = Vec::new();
        for i in 0..self.left_dim {
            for j in 0..self.right_dim {
                let v = self.output(i, j);
                if !is_zero_vec(v) {
                    out.push(Block { color, args: vec![i, j], out: v });
                }
            }
        }
        out
    }
}

/// A (left) Leibniz algebra candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    bracket: PlainCochain,
    table: Bilinear,
}

impl LeibnizAlgebra {
    pub fn new(bracket: PlainCochain) -> Result<Self> {
        if bracket.arity() != 2 || bracket.domain_dim() != bracket.codomain_dim() {
            return Err(shape("a bracket is a bilinear map on one space"));
        }
        let table = Bilinear::from_plain(&bracket)?;
        Ok(LeibnizAlgebra { bracket, table })
    }

    pub fn from_bilinear(table: Bilinear) -> Result<Self> {
        Self::new(table.to_plain()?)
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(PlainCochain::zero(2, dim, dim)).expect("square")
    }

    pub fn dim(&self) -> usize {
        self.bracket.domain_dim()
    }

    pub fn bracket(&self) -> &PlainCochain {
        &self.bracket
    }

    pub fn table(&self) -> &Bilinear {
        &self.table
    }

    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.table.apply(x, y)
    }
}

/// Left and right actions `ρᴸ: g ⊗ M → M`, `ρᴿ: M ⊗ g → M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeibnizRep {
    rho_l: Bilinear,
    rho_r: Bilinear,
}

impl LeibnizRep {
    pub fn new(rho_l: Bilinear, rho_r: Bilinear) -> Result<Self> {
        let (d, e) = (rho_l.left_dim, rho_l.right_dim);
        if rho_l.out_dim != e || (rho_r.left_dim, rho_r.right_dim, rho_r.out_dim) != (e, d, e) {
            return Err(shape("actions must be g⊗M→M and M⊗g→M for one pair (g, M)"));
        }
        Ok(LeibnizRep { rho_l, rho_r })
    }

    pub fn zero(algebra_dim: usize, module_dim: usize) -> Self {
        LeibnizRep {
            rho_l: Bilinear::zero(algebra_dim, module_dim, module_dim),
            rho_r: Bilinear::zero(module_dim, algebra_dim, module_dim),
        }
    }

    /// `ρᴸ = ρᴿ = [·,·]`.
    pub fn adjoint(l: &LeibnizAlgebra) -> Self {
        LeibnizRep { rho_l: l.table.clone(), rho_r: l.table.clone() }
    }

    pub fn algebra_dim(&self) -> usize {
        self.rho_l.left_dim
    }

    pub fn module_dim(&self) -> usize {
        self.rho_l.right_dim
    }

    pub fn rho_l(&self) -> &Bilinear {
        &self.rho_l
    }

    pub fn rho_r(&self) -> &Bilinear {
        &self.rho_r
    }
}

/// A pre-Leibniz algebra candidate: `π([1]; x, y) = x ◁ y`, `π([2]; x, y) = x ▷ y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreLeibnizAlgebra {
    pi: ColoredCochain,
    left: Bilinear,
    right: Bilinear,
}

impl PreLeibnizAlgebra {
    pub fn new(pi: ColoredCochain) -> Result<Self> {
        if pi.arity() != 2 || pi.domain_dim() != pi.codomain_dim() {
            return Err(shape("a pre-Leibniz structure is a colored bilinear map on one space"));
        }
        let left = Bilinear::from_plain(&pi.color_part(1))?;
        let right = Bilinear::from_plain(&pi.color_part(2))?;
        Ok(PreLeibnizAlgebra { pi, left, right })
    }

    /// From the products `◁` and `▷`.
    pub fn from_products(left: Bilinear, right: Bilinear) -> Result<Self> {
        let pi = ColoredCochain::from_color_parts(&[left.to_plain()?, right.to_plain()?])?;
        Self::new(pi)
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(ColoredCochain::zero(2, dim, dim)).expect("square")
    }

    pub fn dim(&self) -> usize {
        self.pi.domain_dim()
    }

    pub fn pi(&self) -> &ColoredCochain {
        &self.pi
    }

    /// `◁`
    pub fn left(&self) -> &Bilinear {
        &self.left
    }

    /// `▷`
    pub fn right(&self) -> &Bilinear {
        &self.right
    }
}

/// Actions `◁ᴸ, ▷ᴸ: a ⊗ M → M` and `◁ᴿ, ▷ᴿ: M ⊗ a → M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreLeibnizRep {
    left_l: Bilinear,
    right_l: Bilinear,
    left_r: Bilinear,
    right_r: Bilinear,
}

impl PreLeibnizRep {
    pub fn new(left_l: Bilinear, right_l: Bilinear, left_r: Bilinear, right_r: Bilinear) -> Result<Self> {
        let (d, e) = (left_l.left_dim, left_l.right_dim);
        let l_shape = (d, e, e);
        let r_shape = (e, d, e);
        let dims = |b: &Bilinear| (b.left_dim, b.right_dim, b.out_dim);
        if dims(&left_l) != l_shape
            || dims(&right_l) != l_shape
            || dims(&left_r) != r_shape
            || dims(&right_r) != r_shape
        {
            return Err(shape("actions must be a⊗M→M (leftL, rightL) and M⊗a→M (leftR, rightR)"));
        }
        Ok(PreLeibnizRep { left_l, right_l, left_r, right_r })
    }

    pub fn zero(algebra_dim: usize, module_dim: usize) -> Self {
        let l = Bilinear::zero(algebra_dim, module_dim, module_dim);
        let r = Bilinear::zero(module_dim, algebra_dim, module_dim);
        PreLeibnizRep { left_l: l.clone(), right_l: l, left_r: r.clone(), right_r: r }
    }

    /// `◁ᴸ = ◁ᴿ = ◁`, `▷ᴸ = ▷ᴿ = ▷`.
    pub fn adjoint(p: &PreLeibnizAlgebra) -> Self {
        PreLeibnizRep {
            left_l: p.left.clone(),
            right_l: p.right.clone(),
            left_r: p.left.clone(),
            right_r: p.right.clone(),
        }
    }

    pub fn algebra_dim(&self) -> usize {
        self.left_l.left_dim
    }

    pub fn module_dim(&self) -> usize {
        self.left_l.right_dim
    }

    pub fn left_l(&self) -> &Bilinear {
        &self.left_l
    }

    pub fn right_l(&self) -> &Bilinear {
        &self.right_l
    }

    pub fn left_r(&self) -> &Bilinear {
        &self.left_r
    }

    pub fn right_r(&self) -> &Bilinear {
        &self.right_r
    }

    /// Blocks of `πᴸ` (color 1 = `◁ᴸ`, color 2 = `▷ᴸ`).
    pub(crate) fn pi_l_blocks(&self) -> Vec<Block<'_>> {
        let mut b = self.left_l.blocks(1);
        b.extend(self.right_l.blocks(2));
        b
    }

    /// Blocks of `πᴿ` (color 1 = `◁ᴿ`, color 2 = `▷ᴿ`).
    pub(crate) fn pi_r_blocks(&self) -> Vec<Block<'_>> {
        let mut b = self.left_r.blocks(1);
        b.extend(self.right_r.blocks(2));
        b
    }
}

/// Names basis vectors `e1, e2, …` below `split` and `f1, f2, …` from `split` on.
fn basis_name(idx: usize, split: usize) -> String {
    if idx < split {
        format!("e{}", idx + 1)
    } else {
        format!("f{}", idx - split + 1)
    }
}

fn triple_label(names: [&str; 3], vals: [String; 3]) -> String {
    format!("({}={}, {}={}, {}={})", names[0], vals[0], names[1], vals[1], names[2], vals[2])
}

/// Checks `[x,[y,z]] = [[x,y],z] + [y,[x,z]]` on all basis triples.
pub fn check_leibniz(l: &LeibnizAlgebra) -> CheckReport {
    let d = l.dim();
    let b = |x: &[Rational], y: &[Rational]| l.apply(x, y);
    let mut report = CheckReport::new();
    for (xi, yi, zi) in triples(d, d, d) {
        let (x, y, z) = (unit_vec(d, xi), unit_vec(d, yi), unit_vec(d, zi));
        let lhs = b(&x, &b(&y, &z));
        let rhs = vec_add(&b(&b(&x, &y), &z), &b(&y, &b(&x, &z)));
        report.compare(
            "[x,[y,z]] = [[x,y],z] + [y,[x,z]]",
            || triple_label(["x", "y", "z"], [basis_name(xi, d), basis_name(yi, d), basis_name(zi, d)]),
            lhs,
            rhs,
        );
    }
    report
}

/// Checks the right Leibniz identity `[[x,y],z] = [x,[y,z]] + [[x,z],y]`.
pub fn check_right_leibniz(bracket: &PlainCochain) -> Result<CheckReport> {
    let table = Bilinear::from_plain(bracket)?;
    let d = table.left_dim;
    if table.out_dim != d {
        return Err(shape("a bracket is a bilinear map on one space"));
    }
    let b = |x: &[Rational], y: &[Rational]| table.apply(x, y);
    let mut report = CheckReport::new();
    for (xi, yi, zi) in triples(d, d, d) {
        let (x, y, z) = (unit_vec(d, xi), unit_vec(d, yi), unit_vec(d, zi));
        let lhs = b(&b(&x, &y), &z);
        let rhs = vec_add(&b(&x, &b(&y, &z)), &b(&b(&x, &z), &y));
        report.compare(
            "[[x,y],z] = [x,[y,z]] + [[x,z],y]",
            || triple_label(["x", "y", "z"], [basis_name(xi, d), basis_name(yi, d), basis_name(zi, d)]),
            lhs,
            rhs,
        );
    }
    Ok(report)
}

fn triples(a: usize, b: usize, c: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..a).flat_map(move |i| (0..b).flat_map(move |j| (0..c).map(move |k| (i, j, k))))
}

/// Checks the three representation identities on all `(x, y, u)`.
pub fn check_leibniz_rep(l: &LeibnizAlgebra, r: &LeibnizRep) -> Result<CheckReport> {
    if r.algebra_dim() != l.dim() {
        return Err(shape(format!(
            "representation of a {}-dimensional algebra over a {}-dimensional one",
            r.algebra_dim(),
            l.dim()
        )));
    }
    if !check_leibniz(l).passed() {
        return Err(precondition("the base algebra is not Leibniz"));
    }
    let (d, e) = (l.dim(), r.module_dim());
    let br = |x: &[Rational], y: &[Rational]| l.apply(x, y);
    let rl = |x: &[Rational], u: &[Rational]| r.rho_l.apply(x, u);
    let rr = |u: &[Rational], x: &[Rational]| r.rho_r.apply(u, x);
    let mut report = CheckReport::new();
    for (xi, yi, ui) in triples(d, d, e) {
        let (x, y, u) = (unit_vec(d, xi), unit_vec(d, yi), unit_vec(e, ui));
        let label = || triple_label(["x", "y", "u"], [basis_name(xi, d), basis_name(yi, d), basis_name(d + ui, d)]);
        report.compare(
            "ρL(x,ρL(y,u)) = ρL([x,y],u) + ρL(y,ρL(x,u))",
            label,
            rl(&x, &rl(&y, &u)),
            vec_add(&rl(&br(&x, &y), &u), &rl(&y, &rl(&x, &u))),
        );
        report.compare(
            "ρL(x,ρR(u,y)) = ρR(ρL(x,u),y) + ρR(u,[x,y])",
            label,
            rl(&x, &rr(&u, &y)),
            vec_add(&rr(&rl(&x, &u), &y), &rr(&u, &br(&x, &y))),
        );
        report.compare(
            "ρR(u,[x,y]) = ρR(ρR(u,x),y) + ρL(x,ρR(u,y))",
            label,
            rr(&u, &br(&x, &y)),
            vec_add(&rr(&rr(&u, &x), &y), &rl(&x, &rr(&u, &y))),
        );
    }
    Ok(report)
}

const PRE_LEIBNIZ_IDENTITIES: [&str; 3] =
    ["x◁(y◁z + y▷z) = (x◁y)◁z + y▷(x◁z)", "x▷(y◁z) = (x▷y)◁z + y◁(x◁z + x▷z)", "x▷(y▷z) = (x◁y + x▷y)▷z + y▷(x▷z)"];

/// Both sides of the three defining identities at `(x, y, z)`.
fn pre_leibniz_sides(
    p: &PreLeibnizAlgebra,
    x: &[Rational],
    y: &[Rational],
    z: &[Rational],
) -> [(Vec<Rational>, Vec<Rational>); 3] {
    let l = |a: &[Rational], b: &[Rational]| p.left.apply(a, b);
    let r = |a: &[Rational], b: &[Rational]| p.right.apply(a, b);
    let tot = |a: &[Rational], b: &[Rational]| vec_add(&l(a, b), &r(a, b));
    [
        (l(x, &tot(y, z)), vec_add(&l(&l(x, y), z), &r(y, &l(x, z)))),
        (r(x, &l(y, z)), vec_add(&l(&r(x, y), z), &l(y, &tot(x, z)))),
        (r(x, &r(y, z)), vec_add(&r(&tot(x, y), z), &r(y, &r(x, z)))),
    ]
}

fn pre_leibniz_report(p: &PreLeibnizAlgebra, split: usize) -> Result<CheckReport> {
    let d = p.dim();
    let bracket = pl_bracket(p.pi(), p.pi())?;
    let minus_two = rat(-2);
    let mut report = CheckReport::new();
    for (xi, yi, zi) in triples(d, d, d) {
        let (x, y, z) = (unit_vec(d, xi), unit_vec(d, yi), unit_vec(d, zi));
        let sides = pre_leibniz_sides(p, &x, &y, &z);
        for (c, (lhs, rhs)) in sides.into_iter().enumerate() {
            // ⟦π,π⟧([c]) = 2(rhs_c − lhs_c)
            let defect: Vec<Rational> = vec_sub(&lhs, &rhs).iter().map(|v| v * &minus_two).collect();
            if bracket.output(c + 1, &[xi, yi, zi]) != &defect[..] {
                return Err(Error::Inconsistent(format!(
                    "identity enumeration and ⟦π,π⟧ disagree in color {} at ({}, {}, {})",
                    c + 1,
                    basis_name(xi, split),
                    basis_name(yi, split),
                    basis_name(zi, split)
                )));
            }
            report.compare(
                PRE_LEIBNIZ_IDENTITIES[c],
                || triple_label(["x", "y", "z"], [basis_name(xi, split), basis_name(yi, split), basis_name(zi, split)]),
                lhs,
                rhs,
            );
        }
    }
    Ok(report)
}

/// Checks the three pre-Leibniz identities on all basis triples, and that the
/// result agrees coefficientwise with `⟦π, π⟧_pL = 0`.
///
/// Errors with [`Error::Inconsistent`] when the two evaluations disagree.
pub fn check_pre_leibniz(p: &PreLeibnizAlgebra) -> Result<CheckReport> {
    pre_leibniz_report(p, p.dim())
}

/// Checks a representation through the semidirect product: on triples with
/// exactly one module input the pre-Leibniz identities of `a ⋉ M` are the
/// representation identities, all other triples hold automatically.
pub fn check_pre_leibniz_rep(p: &PreLeibnizAlgebra, r: &PreLeibnizRep) -> Result<CheckReport> {
    if r.algebra_dim() != p.dim() {
        return Err(shape("representation over an algebra of a different dimension"));
    }
    if !check_pre_leibniz(p)?.passed() {
        return Err(precondition("the base algebra is not pre-Leibniz"));
    }
    let s = semidirect(p, r)?;
    pre_leibniz_report(&s, p.dim())
}

/// `x ◁ y + x ▷ y`.
pub fn totalize_algebra(p: &PreLeibnizAlgebra) -> LeibnizAlgebra {
    LeibnizAlgebra::new(totalize_cochain(p.pi())).expect("square")
}

/// `ρᴸ = ◁ᴸ + ▷ᴸ`, `ρᴿ = ◁ᴿ + ▷ᴿ`.
pub fn total_rep(r: &PreLeibnizRep) -> LeibnizRep {
    LeibnizRep {
        rho_l: r.left_l.add(&r.right_l).expect("same shape"),
        rho_r: r.left_r.add(&r.right_r).expect("same shape"),
    }
}

/// Products on `g ⊕ M` (first `d` coordinates from `g`) from a product on
/// `g`, a left action and a right action.
fn semidirect_table(base: &Bilinear, act_l: &Bilinear, act_r: &Bilinear) -> Bilinear {
    let (d, e) = (base.left_dim, act_l.right_dim);
    let n = d + e;
    let mut out = Bilinear::zero(n, n, n);
    for (i, j, k, c) in base.nonzero_entries() {
        out.set(i, j, k, c);
    }
    for (i, j, k, c) in act_l.nonzero_entries() {
        out.set(i, d + j, d + k, c);
    }
    for (i, j, k, c) in act_r.nonzero_entries() {
        out.set(d + i, j, d + k, c);
    }
    out
}

/// `(x,u) ◁ (y,v) = (x◁y, x◁ᴸv + u◁ᴿy)` and likewise for `▷`.
pub fn semidirect(p: &PreLeibnizAlgebra, r: &PreLeibnizRep) -> Result<PreLeibnizAlgebra> {
    if r.algebra_dim() != p.dim() {
        return Err(shape("representation over an algebra of a different dimension"));
    }
    PreLeibnizAlgebra::from_products(
        semidirect_table(&p.left, &r.left_l, &r.left_r),
        semidirect_table(&p.right, &r.right_l, &r.right_r),
    )
}

/// `[(x,u),(y,v)] = ([x,y], ρᴸ(x,v) + ρᴿ(u,y))`.
pub fn leibniz_semidirect(l: &LeibnizAlgebra, r: &LeibnizRep) -> Result<LeibnizAlgebra> {
    if r.algebra_dim() != l.dim() {
        return Err(shape("representation over an algebra of a different dimension"));
    }
    LeibnizAlgebra::from_bilinear(semidirect_table(&l.table, &r.rho_l, &r.rho_r))
}

fn check_rb_shape(t: &RatMatrix, l: &LeibnizAlgebra, r: &LeibnizRep) -> Result<()> {
    if r.algebra_dim() != l.dim() {
        return Err(shape("representation over an algebra of a different dimension"));
    }
    if t.rows() != l.dim() || t.cols() != r.module_dim() {
        return Err(shape(format!(
            "operator is {}x{}, expected {}x{} (M → g)",
            t.rows(),
            t.cols(),
            l.dim(),
            r.module_dim()
        )));
    }
    Ok(())
}

/// Checks `[Tu, Tv] = T(ρᴿ(u, Tv) + ρᴸ(Tu, v))` on all basis pairs.
pub fn check_relative_rb(t: &RatMatrix, l: &LeibnizAlgebra, r: &LeibnizRep) -> Result<CheckReport> {
    check_rb_shape(t, l, r)?;
    let e = r.module_dim();
    let tv: Vec<Vec<Rational>> = (0..e).map(|i| t.column(i)).collect();
    let mut report = CheckReport::new();
    for ui in 0..e {
        for vi in 0..e {
            let (u, v) = (unit_vec(e, ui), unit_vec(e, vi));
            let lhs = l.apply(&tv[ui], &tv[vi]);
            let inner = vec_add(&r.rho_r.apply(&u, &tv[vi]), &r.rho_l.apply(&tv[ui], &v));
            let rhs = t.mul_vec(&inner)?;
            report.compare("[Tu,Tv] = T(ρR(u,Tv) + ρL(Tu,v))", || format!("(u=f{}, v=f{})", ui + 1, vi + 1), lhs, rhs);
        }
    }
    Ok(report)
}

/// `u ◁ v = ρᴿ(u, Tv)`, `u ▷ v = ρᴸ(Tu, v)` on `M`.
pub fn induced_pre_leibniz(t: &RatMatrix, l: &LeibnizAlgebra, r: &LeibnizRep) -> Result<PreLeibnizAlgebra> {
    if !check_relative_rb(t, l, r)?.passed() {
        return Err(precondition("the operator is not a relative Rota-Baxter operator"));
    }
    let id = RatMatrix::identity(r.module_dim());
    PreLeibnizAlgebra::from_products(r.rho_r.transform(&id, t, None)?, r.rho_l.transform(t, &id, None)?)
}

/// The total algebra `a_Tot` with its representation on `a` given by
/// `ϱᴸ(x, v) = x ▷ v` and `ϱᴿ(v, x) = v ◁ x`; the identity map is a relative
/// Rota-Baxter operator for it.
pub fn identity_rb_data(p: &PreLeibnizAlgebra) -> (LeibnizAlgebra, LeibnizRep) {
    let rep = LeibnizRep { rho_l: p.right.clone(), rho_r: p.left.clone() };
    (totalize_algebra(p), rep)
}

/// `x ◁ y = x·y`, `x ▷ y = −y·x`.
pub fn from_pre_lie(product: &PlainCochain) -> Result<PreLeibnizAlgebra> {
    let table = Bilinear::from_plain(product)?;
    if table.out_dim != table.left_dim {
        return Err(shape("a product is a bilinear map on one space"));
    }
    let right = table.swapped().scaled(&-Rational::one());
    PreLeibnizAlgebra::from_products(table, right)
}

/// `[x, y]ᵒᵖ = [y, x]`.
pub fn opposite(l: &LeibnizAlgebra) -> PlainCochain {
    l.table.swapped().to_plain().expect("square")
}

/// Checks `φ(x◁y) = φx ◁′ φy` and `φ(x▷y) = φx ▷′ φy` on all basis pairs.
pub fn check_morphism(phi: &RatMatrix, p: &PreLeibnizAlgebra, q: &PreLeibnizAlgebra) -> Result<CheckReport> {
    if phi.rows() != q.dim() || phi.cols() != p.dim() {
        return Err(shape(format!("map is {}x{}, expected {}x{}", phi.rows(), phi.cols(), q.dim(), p.dim())));
    }
    let d = p.dim();
    let images: Vec<Vec<Rational>> = (0..d).map(|i| phi.column(i)).collect();
    let mut report = CheckReport::new();
    for xi in 0..d {
        for yi in 0..d {
            let label = || format!("(x=e{}, y=e{})", xi + 1, yi + 1);
            for (name, src, dst) in [("φ(x◁y) = φx◁φy", &p.left, &q.left), ("φ(x▷y) = φx▷φy", &p.right, &q.right)]
            {
                let lhs = phi.mul_vec(src.output(xi, yi))?;
                let rhs = dst.apply(&images[xi], &images[yi]);
                report.compare(name, label, lhs, rhs);
            }
        }
    }
    Ok(report)
}
