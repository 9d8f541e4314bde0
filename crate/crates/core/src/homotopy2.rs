//! 2-term pre-Leibniz∞ and Leibniz∞ algebras on `a₋₁ → a₀`, crossed modules
//! and Rota-Baxter operators.
//!
//! Every check embeds the degree pieces into `V = a₋₁ ⊕ a₀` (the `a₋₁`
//! coordinates first) and evaluates the composites there; pieces of illegal
//! degree are zero in the embedding.

use std::ops::{Add, Sub};

use crate::algebra::{
    check_leibniz, check_leibniz_rep, check_morphism, check_pre_leibniz, check_pre_leibniz_rep, Bilinear,
    LeibnizAlgebra, LeibnizRep, PreLeibnizAlgebra, PreLeibnizRep,
};
use crate::cochain::{circ_i, diamond_i, totalize_cochain, ColoredCochain, PlainCochain};
use crate::cohomology::delta_pl;
use crate::error::{precondition, shape, Error, Result};
use crate::exactla::{RatMatrix, Rational};
use crate::report::CheckReport;

/// `d: a₋₁ → a₀`, stored as a `dim_0 × dim_m1` matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoTermComplex {
    dim_m1: usize,
    dim_0: usize,
    d: RatMatrix,
}

impl TwoTermComplex {
    pub fn new(dim_m1: usize, dim_0: usize, d: RatMatrix) -> Result<Self> {
        if d.rows() != dim_0 || d.cols() != dim_m1 {
            return Err(shape(format!("d is {}x{}, expected {dim_0}x{dim_m1}", d.rows(), d.cols())));
        }
        Ok(TwoTermComplex { dim_m1, dim_0, d })
    }

    pub fn zero(dim_m1: usize, dim_0: usize) -> Self {
        TwoTermComplex { dim_m1, dim_0, d: RatMatrix::zeros(dim_0, dim_m1) }
    }

    /// `a → a` with `d = id`.
    pub fn identity(dim: usize) -> Self {
        TwoTermComplex { dim_m1: dim, dim_0: dim, d: RatMatrix::identity(dim) }
    }

    pub fn dim_m1(&self) -> usize {
        self.dim_m1
    }

    pub fn dim_0(&self) -> usize {
        self.dim_0
    }

    pub fn d(&self) -> &RatMatrix {
        &self.d
    }

    fn total_dim(&self) -> usize {
        self.dim_m1 + self.dim_0
    }

    /// `d` as an endomorphism of `V`.
    fn embedded(&self) -> RatMatrix {
        let m = self.dim_m1;
        let mut out = RatMatrix::zeros(self.total_dim(), self.total_dim());
        for r in 0..self.dim_0 {
            for c in 0..m {
                out.set(m + r, c, self.d.get(r, c).clone());
            }
        }
        out
    }
}

fn check_bilinear_shape(b: &Bilinear, dims: (usize, usize, usize), what: &str) -> Result<()> {
    if (b.left_dim(), b.right_dim(), b.out_dim()) != dims {
        return Err(shape(format!(
            "{what} is {}x{}->{}, expected {}x{}->{}",
            b.left_dim(),
            b.right_dim(),
            b.out_dim(),
            dims.0,
            dims.1,
            dims.2
        )));
    }
    Ok(())
}

fn check_cochain_shape(arity: usize, dom: usize, cod: usize, want: (usize, usize, usize), what: &str) -> Result<()> {
    if (arity, dom, cod) != want {
        return Err(shape(format!(
            "{what} has arity {arity} on {dom} -> {cod}, expected arity {} on {} -> {}",
            want.0, want.1, want.2
        )));
    }
    Ok(())
}

/// A candidate 2-term pre-Leibniz∞ algebra. Colored pieces are indexed by
/// color: `[0]` is `[1]`, `[1]` is `[2]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoTermPreLeibniz {
    complex: TwoTermComplex,
    pi2_00: ColoredCochain,
    pi2_0m: [Bilinear; 2],
    pi2_m0: [Bilinear; 2],
    pi3: ColoredCochain,
}

impl TwoTermPreLeibniz {
    pub fn new(
        complex: TwoTermComplex,
        pi2_00: ColoredCochain,
        pi2_0m: [Bilinear; 2],
        pi2_m0: [Bilinear; 2],
        pi3: ColoredCochain,
    ) -> Result<Self> {
        let (m, z) = (complex.dim_m1, complex.dim_0);
        check_cochain_shape(pi2_00.arity(), pi2_00.domain_dim(), pi2_00.codomain_dim(), (2, z, z), "pi2_00")?;
        for b in &pi2_0m {
            check_bilinear_shape(b, (z, m, m), "pi2_0m")?;
        }
        for b in &pi2_m0 {
            check_bilinear_shape(b, (m, z, m), "pi2_m0")?;
        }
        check_cochain_shape(pi3.arity(), pi3.domain_dim(), pi3.codomain_dim(), (3, z, m), "pi3")?;
        Ok(TwoTermPreLeibniz { complex, pi2_00, pi2_0m, pi2_m0, pi3 })
    }

    pub fn zero(dim_m1: usize, dim_0: usize) -> Self {
        let (m, z) = (dim_m1, dim_0);
        let l = Bilinear::zero(z, m, m);
        let r = Bilinear::zero(m, z, m);
        TwoTermPreLeibniz {
            complex: TwoTermComplex::zero(m, z),
            pi2_00: ColoredCochain::zero(2, z, z),
            pi2_0m: [l.clone(), l],
            pi2_m0: [r.clone(), r],
            pi3: ColoredCochain::zero(3, z, m),
        }
    }

    /// `a → a` with `d = id`, `π₂ = π` on every degree piece and `π₃ = 0`.
    pub fn identity_complex(p: &PreLeibnizAlgebra) -> Self {
        let n = p.dim();
        let pair = [p.left().clone(), p.right().clone()];
        TwoTermPreLeibniz {
            complex: TwoTermComplex::identity(n),
            pi2_00: p.pi().clone(),
            pi2_0m: pair.clone(),
            pi2_m0: pair,
            pi3: ColoredCochain::zero(3, n, n),
        }
    }

    pub fn complex(&self) -> &TwoTermComplex {
        &self.complex
    }

    pub fn pi2_00(&self) -> &ColoredCochain {
        &self.pi2_00
    }

    pub fn pi2_0m(&self) -> &[Bilinear; 2] {
        &self.pi2_0m
    }

    pub fn pi2_m0(&self) -> &[Bilinear; 2] {
        &self.pi2_m0
    }

    pub fn pi3(&self) -> &ColoredCochain {
        &self.pi3
    }

    fn embed(&self) -> Embedded<ColoredCochain> {
        let (m, z) = (self.complex.dim_m1, self.complex.dim_0);
        let n = m + z;
        let mut s2 = ColoredCochain::zero(2, n, n);
        for (c, args, k, v) in self.pi2_00.nonzero_entries() {
            s2.set(c, &[m + args[0], m + args[1]], m + k, v);
        }
        for c in 1..=2 {
            for (i, j, k, v) in self.pi2_0m[c - 1].nonzero_entries() {
                s2.set(c, &[m + i, j], k, v);
            }
            for (i, j, k, v) in self.pi2_m0[c - 1].nonzero_entries() {
                s2.set(c, &[i, m + j], k, v);
            }
        }
        let mut s3 = ColoredCochain::zero(3, n, n);
        for (c, args, k, v) in self.pi3.nonzero_entries() {
            s3.set(c, &[m + args[0], m + args[1], m + args[2]], k, v);
        }
        Embedded { split: m, rest: z, d: self.complex.embedded(), s2, s3 }
    }
}

/// A candidate 2-term Leibniz∞ algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoTermLeibniz {
    complex: TwoTermComplex,
    mu2_00: Bilinear,
    mu2_0m: Bilinear,
    mu2_m0: Bilinear,
    mu3: PlainCochain,
}

impl TwoTermLeibniz {
    pub fn new(
        complex: TwoTermComplex,
        mu2_00: Bilinear,
        mu2_0m: Bilinear,
        mu2_m0: Bilinear,
        mu3: PlainCochain,
    ) -> Result<Self> {
        let (m, z) = (complex.dim_m1, complex.dim_0);
        check_bilinear_shape(&mu2_00, (z, z, z), "mu2_00")?;
        check_bilinear_shape(&mu2_0m, (z, m, m), "mu2_0m")?;
        check_bilinear_shape(&mu2_m0, (m, z, m), "mu2_m0")?;
        check_cochain_shape(mu3.arity(), mu3.domain_dim(), mu3.codomain_dim(), (3, z, m), "mu3")?;
        Ok(TwoTermLeibniz { complex, mu2_00, mu2_0m, mu2_m0, mu3 })
    }

    pub fn zero(dim_m1: usize, dim_0: usize) -> Self {
        let (m, z) = (dim_m1, dim_0);
        TwoTermLeibniz {
            complex: TwoTermComplex::zero(m, z),
            mu2_00: Bilinear::zero(z, z, z),
            mu2_0m: Bilinear::zero(z, m, m),
            mu2_m0: Bilinear::zero(m, z, m),
            mu3: PlainCochain::zero(3, z, m),
        }
    }

    pub fn complex(&self) -> &TwoTermComplex {
        &self.complex
    }

    pub fn mu2_00(&self) -> &Bilinear {
        &self.mu2_00
    }

    pub fn mu2_0m(&self) -> &Bilinear {
        &self.mu2_0m
    }

    pub fn mu2_m0(&self) -> &Bilinear {
        &self.mu2_m0
    }

    pub fn mu3(&self) -> &PlainCochain {
        &self.mu3
    }

    fn embed(&self) -> Embedded<PlainCochain> {
        let (m, z) = (self.complex.dim_m1, self.complex.dim_0);
        let n = m + z;
        let mut s2 = PlainCochain::zero(2, n, n);
        for (i, j, k, v) in self.mu2_00.nonzero_entries() {
            s2.set(&[m + i, m + j], m + k, v);
        }
        for (i, j, k, v) in self.mu2_0m.nonzero_entries() {
            s2.set(&[m + i, j], k, v);
        }
        for (i, j, k, v) in self.mu2_m0.nonzero_entries() {
            s2.set(&[i, m + j], k, v);
        }
        let mut s3 = PlainCochain::zero(3, n, n);
        for (args, k, v) in self.mu3.nonzero_entries() {
            s3.set(&[m + args[0], m + args[1], m + args[2]], k, v);
        }
        Embedded { split: m, rest: z, d: self.complex.embedded(), s2, s3 }
    }
}

/// The operations shared by plain and colored cochains that the 2-term
/// conditions need.
trait Multilinear: Sized
where
    for<'a> &'a Self: Add<&'a Self, Output = Self> + Sub<&'a Self, Output = Self>,
{
    fn compose(&self, g: &Self, i: usize) -> Result<Self>;
    fn transform(&self, maps: &[&RatMatrix], post: Option<&RatMatrix>) -> Result<Self>;
    /// Number of colors; 1 for plain cochains.
    fn colors(&self) -> usize;
    fn value(&self, color: usize, args: &[usize]) -> &[Rational];
    fn colored(&self) -> bool;
}

impl Multilinear for ColoredCochain {
    fn compose(&self, g: &Self, i: usize) -> Result<Self> {
        diamond_i(self, g, i)
    }

    fn transform(&self, maps: &[&RatMatrix], post: Option<&RatMatrix>) -> Result<Self> {
        ColoredCochain::transform(self, maps, post)
    }

    fn colors(&self) -> usize {
        self.arity()
    }

    fn value(&self, color: usize, args: &[usize]) -> &[Rational] {
        self.output(color, args)
    }

    fn colored(&self) -> bool {
        true
    }
}

impl Multilinear for PlainCochain {
    fn compose(&self, g: &Self, i: usize) -> Result<Self> {
        circ_i(self, g, i)
    }

    fn transform(&self, maps: &[&RatMatrix], post: Option<&RatMatrix>) -> Result<Self> {
        let pre = self.precompose(maps)?;
        match post {
            Some(m) => pre.postcompose(m),
            None => Ok(pre),
        }
    }

    fn colors(&self) -> usize {
        1
    }

    fn value(&self, _color: usize, args: &[usize]) -> &[Rational] {
        self.output(args)
    }

    fn colored(&self) -> bool {
        false
    }
}

/// Which summand of `V` an input or output lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Deg {
    /// `a₋₁`, or `A` for a crossed module.
    Low,
    /// `a₀`, or `B` for a crossed module.
    High,
}

use Deg::{High, Low};

struct Embedded<T> {
    /// `dim a₋₁`; coordinates below it are in `a₋₁`.
    split: usize,
    rest: usize,
    d: RatMatrix,
    s2: T,
    s3: T,
}

impl<T> Embedded<T> {
    fn range(&self, deg: Deg) -> std::ops::Range<usize> {
        match deg {
            Low => 0..self.split,
            High => self.split..self.split + self.rest,
        }
    }

    fn name(&self, idx: usize) -> String {
        if idx < self.split {
            format!("f{}", idx + 1)
        } else {
            format!("e{}", idx - self.split + 1)
        }
    }

    fn tuples(&self, pattern: &[Deg]) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for &deg in pattern {
            out = out
                .into_iter()
                .flat_map(|t| {
                    self.range(deg).map(move |i| {
                        let mut t = t.clone();
                        t.push(i);
                        t
                    })
                })
                .collect();
        }
        out
    }
}

/// Compares `lhs` and `rhs` on every basis tuple of `pattern`, restricted to
/// the `out` summand.
fn compare_on<T: Multilinear>(
    report: &mut CheckReport,
    e: &Embedded<T>,
    name: &str,
    lhs: &T,
    rhs: &T,
    pattern: &[Deg],
    out: Deg,
) where
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T>,
{
    let range = e.range(out);
    for args in e.tuples(pattern) {
        for color in 1..=lhs.colors() {
            let label = || {
                let names: Vec<String> = args.iter().map(|&a| e.name(a)).collect();
                if lhs.colored() {
                    format!("([{color}]; {})", names.join(", "))
                } else {
                    format!("({})", names.join(", "))
                }
            };
            report.compare(
                name,
                label,
                lhs.value(color, &args)[range.clone()].to_vec(),
                rhs.value(color, &args)[range.clone()].to_vec(),
            );
        }
    }
}

/// Conditions (i)–(v) with the compositions of `T`.
fn check_conditions<T: Multilinear>(e: &Embedded<T>) -> Result<CheckReport>
where
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T>,
{
    let id = RatMatrix::identity(e.split + e.rest);
    let d = &e.d;
    let (s2, s3) = (&e.s2, &e.s3);
    let mut r = CheckReport::new();

    let d_s2 = s2.transform(&[&id, &id], Some(d))?;
    let s2_d1 = s2.transform(&[d, &id], None)?;
    let s2_d2 = s2.transform(&[&id, d], None)?;
    compare_on(&mut r, e, "(i) dπ2(x,u) = π2(x,du)", &d_s2, &s2_d2, &[High, Low], High);
    compare_on(&mut r, e, "(i) dπ2(u,x) = π2(du,x)", &d_s2, &s2_d1, &[Low, High], High);
    compare_on(&mut r, e, "(ii) π2(du,v) = π2(u,dv)", &s2_d1, &s2_d2, &[Low, Low], Low);

    let c = &s2.compose(s2, 1)? - &s2.compose(s2, 2)?;
    let d_s3 = s3.transform(&[&id, &id, &id], Some(d))?;
    compare_on(&mut r, e, "(iii) π2◇1π2 - π2◇2π2 = dπ3", &c, &d_s3, &[High, High, High], High);
    let slots = [
        ("(iv) π2◇1π2 - π2◇2π2 = π3(x,y,du)", [&id, &id, d], [High, High, Low]),
        ("(iv) π2◇1π2 - π2◇2π2 = π3(x,du,y)", [&id, d, &id], [High, Low, High]),
        ("(iv) π2◇1π2 - π2◇2π2 = π3(du,x,y)", [d, &id, &id], [Low, High, High]),
    ];
    for (name, maps, pattern) in slots {
        let rhs = s3.transform(&maps, None)?;
        compare_on(&mut r, e, name, &c, &rhs, &pattern, Low);
    }

    let lhs = &(&s3.compose(s2, 1)? - &s3.compose(s2, 2)?) + &s3.compose(s2, 3)?;
    let rhs = &s2.compose(s3, 1)? + &s2.compose(s3, 2)?;
    compare_on(&mut r, e, "(v)", &lhs, &rhs, &[High; 4], Low);
    Ok(r)
}

/// Conditions (i)–(v) on all basis tuples; failures are labelled by condition.
pub fn check_two_term_pre(x: &TwoTermPreLeibniz) -> Result<CheckReport> {
    check_conditions(&x.embed())
}

/// The color-summed conditions (i)–(v) on all basis tuples.
pub fn check_two_term_leibniz(y: &TwoTermLeibniz) -> Result<CheckReport> {
    check_conditions(&y.embed())
}

pub fn is_skeletal(x: &TwoTermPreLeibniz) -> bool {
    x.complex.d.is_zero()
}

pub fn is_strict(x: &TwoTermPreLeibniz) -> bool {
    x.pi3.is_zero()
}

fn require(report: CheckReport, what: &str) -> Result<()> {
    match report.failures.first() {
        None => Ok(()),
        Some(f) => Err(precondition(format!("{what}: {f}"))),
    }
}

/// `μ_k = Σ_r π_k([r]; …)` on every piece.
pub fn sum_two_term(x: &TwoTermPreLeibniz) -> Result<TwoTermLeibniz> {
    require(check_two_term_pre(x)?, "not a 2-term pre-Leibniz∞ algebra")?;
    let sum = |p: &[Bilinear; 2]| p[0].add(&p[1]);
    TwoTermLeibniz::new(
        x.complex.clone(),
        Bilinear::from_plain(&totalize_cochain(&x.pi2_00))?,
        sum(&x.pi2_0m)?,
        sum(&x.pi2_m0)?,
        totalize_cochain(&x.pi3),
    )
}

/// `(a₀, a₋₁, π₃)`: the algebra from `π₂` on `a₀`, the representation from the
/// mixed pieces, and the 3-cocycle `π₃`.
pub fn skeletal_to_triple(x: &TwoTermPreLeibniz) -> Result<(PreLeibnizAlgebra, PreLeibnizRep, ColoredCochain)> {
    if !is_skeletal(x) {
        return Err(precondition("d is not zero"));
    }
    require(check_two_term_pre(x)?, "not a 2-term pre-Leibniz∞ algebra")?;
    let p = PreLeibnizAlgebra::new(x.pi2_00.clone())?;
    let [left_l, right_l] = x.pi2_0m.clone();
    let [left_r, right_r] = x.pi2_m0.clone();
    let r = PreLeibnizRep::new(left_l, right_l, left_r, right_r)?;
    Ok((p, r, x.pi3.clone()))
}

/// The skeletal algebra `M →⁰ a` with `π₂` from the products and actions and `π₃ = θ`.
pub fn triple_to_skeletal(
    p: &PreLeibnizAlgebra,
    r: &PreLeibnizRep,
    theta: &ColoredCochain,
) -> Result<TwoTermPreLeibniz> {
    require(check_pre_leibniz_rep(p, r)?, "not a representation")?;
    if !delta_pl(p, r, theta)?.is_zero() {
        return Err(precondition("θ is not a 3-cocycle"));
    }
    TwoTermPreLeibniz::new(
        TwoTermComplex::zero(r.module_dim(), p.dim()),
        p.pi().clone(),
        [r.left_l().clone(), r.right_l().clone()],
        [r.left_r().clone(), r.right_r().clone()],
        theta.clone(),
    )
}

/// A candidate crossed module `(A, B, d, πᴸ, πᴿ)`; the actions are stored as
/// a representation of `B` on `A` with `◁ᴸ, ▷ᴸ = πᴸ([1]), πᴸ([2])` and
/// `◁ᴿ, ▷ᴿ = πᴿ([1]), πᴿ([2])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedModule {
    a: PreLeibnizAlgebra,
    b: PreLeibnizAlgebra,
    d: RatMatrix,
    action: PreLeibnizRep,
}

impl CrossedModule {
    pub fn new(a: PreLeibnizAlgebra, b: PreLeibnizAlgebra, d: RatMatrix, action: PreLeibnizRep) -> Result<Self> {
        if d.rows() != b.dim() || d.cols() != a.dim() {
            return Err(shape(format!("d is {}x{}, expected {}x{}", d.rows(), d.cols(), b.dim(), a.dim())));
        }
        if action.algebra_dim() != b.dim() || action.module_dim() != a.dim() {
            return Err(shape("the actions must be B⊗A→A and A⊗B→A"));
        }
        Ok(CrossedModule { a, b, d, action })
    }

    /// `(a, a, id, π, π)`.
    pub fn identity(p: &PreLeibnizAlgebra) -> Self {
        CrossedModule { a: p.clone(), b: p.clone(), d: RatMatrix::identity(p.dim()), action: PreLeibnizRep::adjoint(p) }
    }

    pub fn a(&self) -> &PreLeibnizAlgebra {
        &self.a
    }

    pub fn b(&self) -> &PreLeibnizAlgebra {
        &self.b
    }

    pub fn d(&self) -> &RatMatrix {
        &self.d
    }

    pub fn action(&self) -> &PreLeibnizRep {
        &self.action
    }

    /// `Π` on `A ⊕ B` combining `π_A`, `π_B`, `πᴸ` and `πᴿ`, with `d` embedded.
    fn embed(&self) -> Embedded<ColoredCochain> {
        let strict = crossed_pieces(self);
        let mut e = strict.embed();
        for (c, args, k, v) in self.a.pi().nonzero_entries() {
            e.s2.set(c, &args, k, v);
        }
        e
    }
}

fn crossed_pieces(c: &CrossedModule) -> TwoTermPreLeibniz {
    TwoTermPreLeibniz {
        complex: TwoTermComplex { dim_m1: c.a.dim(), dim_0: c.b.dim(), d: c.d.clone() },
        pi2_00: c.b.pi().clone(),
        pi2_0m: [c.action.left_l().clone(), c.action.right_l().clone()],
        pi2_m0: [c.action.left_r().clone(), c.action.right_r().clone()],
        pi3: ColoredCochain::zero(3, c.b.dim(), c.a.dim()),
    }
}

/// Both algebras, the morphism `d`, the representation axioms and conditions
/// (i)–(iii). Condition (iii) is `Π◇1Π − Π◇2Π = 0` on inputs with two entries
/// from `A` and one from `B`.
pub fn check_crossed_module(c: &CrossedModule) -> Result<CheckReport> {
    let mut r = CheckReport::new();
    r.merge(check_pre_leibniz(&c.a)?.labelled("A"));
    let b_report = check_pre_leibniz(&c.b)?;
    let b_ok = b_report.passed();
    r.merge(b_report.labelled("B"));
    r.merge(check_morphism(&c.d, &c.a, &c.b)?.labelled("d"));
    if b_ok {
        r.merge(check_pre_leibniz_rep(&c.b, &c.action)?.labelled("action"));
    }
    let e = c.embed();
    let id = RatMatrix::identity(e.split + e.rest);
    let d = &e.d;
    let s2 = &e.s2;
    let d_s2 = s2.transform(&[&id, &id], Some(d))?;
    let s2_d1 = s2.transform(&[d, &id], None)?;
    let s2_d2 = s2.transform(&[&id, d], None)?;
    compare_on(&mut r, &e, "(i) d(πL(b,x)) = πB(b,dx)", &d_s2, &s2_d2, &[High, Low], High);
    compare_on(&mut r, &e, "(i) d(πR(x,b)) = πB(dx,b)", &d_s2, &s2_d1, &[Low, High], High);
    compare_on(&mut r, &e, "(ii) πL(dx,y) = πA(x,y)", &s2_d1, s2, &[Low, Low], Low);
    compare_on(&mut r, &e, "(ii) πR(x,dy) = πA(x,y)", &s2_d2, s2, &[Low, Low], Low);
    let cc = &s2.compose(s2, 1)? - &s2.compose(s2, 2)?;
    let zero = ColoredCochain::zero(3, cc.domain_dim(), cc.codomain_dim());
    for pattern in [[Low, Low, High], [Low, High, Low], [High, Low, Low]] {
        compare_on(&mut r, &e, "(iii)", &cc, &zero, &pattern, Low);
    }
    Ok(r)
}

/// `A = a₋₁` with `π_A([r]; u, v) = π₂([r]; du, v)`, `B = a₀`, and the actions
/// from the mixed pieces.
pub fn strict_to_crossed(x: &TwoTermPreLeibniz) -> Result<CrossedModule> {
    if !is_strict(x) {
        return Err(precondition("π3 is not zero"));
    }
    require(check_two_term_pre(x)?, "not a 2-term pre-Leibniz∞ algebra")?;
    let id = RatMatrix::identity(x.complex.dim_m1);
    let d = &x.complex.d;
    let a =
        PreLeibnizAlgebra::from_products(x.pi2_0m[0].transform(d, &id, None)?, x.pi2_0m[1].transform(d, &id, None)?)?;
    let b = PreLeibnizAlgebra::new(x.pi2_00.clone())?;
    let [left_l, right_l] = x.pi2_0m.clone();
    let [left_r, right_r] = x.pi2_m0.clone();
    let action = PreLeibnizRep::new(left_l, right_l, left_r, right_r)?;
    let c = CrossedModule::new(a, b, x.complex.d.clone(), action)?;
    if !check_crossed_module(&c)?.passed() {
        return Err(Error::Inconsistent("strict algebra produced an invalid crossed module".into()));
    }
    Ok(c)
}

/// `π₂` from `π_B`, `πᴸ` and `πᴿ`, with `π₃ = 0`.
pub fn crossed_to_strict(c: &CrossedModule) -> Result<TwoTermPreLeibniz> {
    require(check_crossed_module(c)?, "not a crossed module")?;
    let x = crossed_pieces(c);
    if !check_two_term_pre(&x)?.passed() {
        return Err(Error::Inconsistent("crossed module produced an invalid strict algebra".into()));
    }
    Ok(x)
}

/// `T = (T₋₁, T₀)`, a degree-0 map on `a₋₁ ⊕ a₀`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMap {
    t_m1: RatMatrix,
    t_0: RatMatrix,
}

impl GradedMap {
    pub fn new(t_m1: RatMatrix, t_0: RatMatrix) -> Result<Self> {
        if t_m1.rows() != t_m1.cols() || t_0.rows() != t_0.cols() {
            return Err(shape("both components must be square"));
        }
        Ok(GradedMap { t_m1, t_0 })
    }

    pub fn t_m1(&self) -> &RatMatrix {
        &self.t_m1
    }

    pub fn t_0(&self) -> &RatMatrix {
        &self.t_0
    }

    fn block(&self) -> RatMatrix {
        let (m, z) = (self.t_m1.rows(), self.t_0.rows());
        let mut out = RatMatrix::zeros(m + z, m + z);
        for r in 0..m {
            for c in 0..m {
                out.set(r, c, self.t_m1.get(r, c).clone());
            }
        }
        for r in 0..z {
            for c in 0..z {
                out.set(m + r, m + c, self.t_0.get(r, c).clone());
            }
        }
        out
    }

    fn check_dims(&self, complex: &TwoTermComplex) -> Result<()> {
        if self.t_m1.rows() != complex.dim_m1 || self.t_0.rows() != complex.dim_0 {
            return Err(shape(format!(
                "operator acts on {}+{}, complex is {}+{}",
                self.t_m1.rows(),
                self.t_0.rows(),
                complex.dim_m1,
                complex.dim_0
            )));
        }
        Ok(())
    }
}

/// Input degrees and the output degree to compare on.
type Pattern = (Vec<Deg>, Deg);

/// `μ_k` with `T` on every slot except `r`.
fn all_but(f: &PlainCochain, t: &RatMatrix, r: usize) -> Result<PlainCochain> {
    let id = RatMatrix::identity(t.rows());
    let maps: Vec<&RatMatrix> = (0..f.arity()).map(|i| if i == r { &id } else { t }).collect();
    f.precompose(&maps)
}

/// `μ_k(Tx₁, …, Tx_k) = T(Σ_r μ_k(Tx₁, …, x_r, …, Tx_k))` for `k = 1, 2, 3`
/// on all basis tuples.
pub fn check_rb_two_term(y: &TwoTermLeibniz, t: &GradedMap) -> Result<CheckReport> {
    t.check_dims(&y.complex)?;
    require(check_two_term_leibniz(y)?, "not a 2-term Leibniz∞ algebra")?;
    let e = y.embed();
    let tb = t.block();
    let d1 = PlainCochain::from_matrix(&e.d);
    let mut r = CheckReport::new();
    let cases: [(usize, &PlainCochain, Vec<Pattern>); 3] = [
        (1, &d1, vec![(vec![Low], High)]),
        (2, &e.s2, vec![(vec![High, High], High), (vec![High, Low], Low), (vec![Low, High], Low)]),
        (3, &e.s3, vec![(vec![High, High, High], Low)]),
    ];
    for (k, f, patterns) in cases {
        let lhs = f.precompose(&vec![&tb; k])?;
        let mut sum = PlainCochain::zero(k, tb.rows(), tb.rows());
        for slot in 0..k {
            sum = &sum + &all_but(f, &tb, slot)?;
        }
        let rhs = sum.postcompose(&tb)?;
        let name = format!("μ{k}(Tx..) = T(Σr μ{k}(..x_r..))");
        for (pattern, out) in patterns {
            compare_on(&mut r, &e, &name, &lhs, &rhs, &pattern, out);
        }
    }
    Ok(r)
}

/// The 2-term Leibniz∞ algebra `M(−1) ⊕ g(0)` with `μ₂` from the bracket and
/// the actions, `μ₁ = μ₃ = 0`, and `T = (R_M, R)`.
pub fn rb_pair_to_two_term(
    l: &LeibnizAlgebra,
    r: &LeibnizRep,
    rb: &RatMatrix,
    rb_m: &RatMatrix,
) -> Result<(TwoTermLeibniz, GradedMap)> {
    require(check_leibniz(l), "not a Leibniz algebra")?;
    require(check_leibniz_rep(l, r)?, "not a representation")?;
    let (m, z) = (r.module_dim(), l.dim());
    let y = TwoTermLeibniz::new(
        TwoTermComplex::zero(m, z),
        l.table().clone(),
        r.rho_l().clone(),
        r.rho_r().clone(),
        PlainCochain::zero(3, z, m),
    )?;
    let t = GradedMap::new(rb_m.clone(), rb.clone())?;
    require(check_rb_two_term(&y, &t)?, "not a Rota-Baxter pair")?;
    Ok((y, t))
}

/// `π_k([r]; x₁, …, x_k) = μ_k(Tx₁, …, x_r, …, Tx_k)`, with `π₁ = μ₁`.
pub fn induced_pre_from_rb(y: &TwoTermLeibniz, t: &GradedMap) -> Result<TwoTermPreLeibniz> {
    require(check_rb_two_term(y, t)?, "not a Rota-Baxter operator")?;
    let (tm, t0) = (&t.t_m1, &t.t_0);
    let (im, i0) = (RatMatrix::identity(tm.rows()), RatMatrix::identity(t0.rows()));
    let pi2_00 = [y.mu2_00.transform(&i0, t0, None)?, y.mu2_00.transform(t0, &i0, None)?];
    let pi2_0m = [y.mu2_0m.transform(&i0, tm, None)?, y.mu2_0m.transform(t0, &im, None)?];
    let pi2_m0 = [y.mu2_m0.transform(&im, t0, None)?, y.mu2_m0.transform(tm, &i0, None)?];
    let pi3_parts = (0..3).map(|r| all_but(&y.mu3, t0, r)).collect::<Result<Vec<_>>>()?;
    let x = TwoTermPreLeibniz::new(
        y.complex.clone(),
        ColoredCochain::from_color_parts(&[pi2_00[0].to_plain()?, pi2_00[1].to_plain()?])?,
        pi2_0m,
        pi2_m0,
        ColoredCochain::from_color_parts(&pi3_parts)?,
    )?;
    if !check_two_term_pre(&x)?.passed() {
        return Err(Error::Inconsistent("Rota-Baxter operator induced an invalid structure".into()));
    }
    Ok(x)
}

/// All `n × n` matrices with entries from `values`, in lexicographic order of
/// their row-major entries.
pub fn matrices_over(n: usize, values: &[Rational]) -> Vec<RatMatrix> {
    let mut out: Vec<Vec<Rational>> = vec![Vec::new()];
    for _ in 0..n * n {
        out = out
            .into_iter()
            .flat_map(|v| {
                values.iter().map(move |x| {
                    let mut v = v.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(|e| RatMatrix::new(n, n, e).expect("square")).collect()
}

/// Every pair `(R, R_M)` with entries from `values` such that `R` is a
/// Rota-Baxter operator on `l` and `(R_M, R)` is one on the 2-term algebra of
/// `(l, r)`.
pub fn rota_baxter_pairs(
    l: &LeibnizAlgebra,
    r: &LeibnizRep,
    values: &[Rational],
) -> Result<Vec<(RatMatrix, RatMatrix)>> {
    let adj = LeibnizRep::adjoint(l);
    let mut out = Vec::new();
    let rms = matrices_over(r.module_dim(), values);
    for rb in matrices_over(l.dim(), values) {
        if !crate::algebra::check_relative_rb(&rb, l, &adj)?.passed() {
            continue;
        }
        for rb_m in &rms {
            match rb_pair_to_two_term(l, r, &rb, rb_m) {
                Ok(_) => out.push((rb.clone(), rb_m.clone())),
                Err(Error::Precondition(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{induced_pre_leibniz, totalize_algebra};
    use crate::cohomology::coboundary_matrix;
    use crate::exactla::rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p2() -> PreLeibnizAlgebra {
        let mut right = Bilinear::zero(2, 2, 2);
        right.set(0, 0, 1, rat(1));
        PreLeibnizAlgebra::from_products(Bilinear::zero(2, 2, 2), right).unwrap()
    }

    fn leib2() -> LeibnizAlgebra {
        let mut t = Bilinear::zero(2, 2, 2);
        t.set(0, 0, 1, rat(1));
        LeibnizAlgebra::from_bilinear(t).unwrap()
    }

    fn skeletal_p2(theta: ColoredCochain) -> TwoTermPreLeibniz {
        let p = p2();
        let adj = PreLeibnizRep::adjoint(&p);
        TwoTermPreLeibniz::new(
            TwoTermComplex::zero(2, 2),
            p.pi().clone(),
            [adj.left_l().clone(), adj.right_l().clone()],
            [adj.left_r().clone(), adj.right_r().clone()],
            theta,
        )
        .unwrap()
    }

    fn failing_conditions(x: &TwoTermPreLeibniz) -> Vec<String> {
        let mut names: Vec<String> = check_two_term_pre(x).unwrap().failures.into_iter().map(|f| f.identity).collect();
        names.dedup();
        names
    }

    #[test]
    fn basic_examples() {
        let zero = TwoTermPreLeibniz::zero(2, 3);
        assert!(check_two_term_pre(&zero).unwrap().passed());
        assert!(is_skeletal(&zero) && is_strict(&zero));
        assert!(check_two_term_leibniz(&TwoTermLeibniz::zero(1, 2)).unwrap().passed());

        let sk = skeletal_p2(ColoredCochain::zero(3, 2, 2));
        assert!(check_two_term_pre(&sk).unwrap().passed());
        assert!(is_skeletal(&sk));

        let id = TwoTermPreLeibniz::identity_complex(&p2());
        assert!(check_two_term_pre(&id).unwrap().passed());
        assert!(is_strict(&id) && !is_skeletal(&id));
    }

    #[test]
    fn invalid_pieces_are_reported() {
        let mut pi3 = ColoredCochain::zero(3, 2, 2);
        pi3.set(1, &[0, 0, 0], 0, rat(1));
        let x = TwoTermPreLeibniz::new(
            TwoTermComplex::identity(2),
            p2().pi().clone(),
            [p2().left().clone(), p2().right().clone()],
            [p2().left().clone(), p2().right().clone()],
            pi3,
        )
        .unwrap();
        let names = failing_conditions(&x);
        assert!(names.iter().any(|n| n.starts_with("(iii)")));
        assert!(names.iter().any(|n| n.starts_with("(iv)")));
        assert!(TwoTermComplex::new(2, 3, RatMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn skeletal_condition_five_is_the_cocycle_condition() {
        let p = p2();
        let adj = PreLeibnizRep::adjoint(&p);
        for k in 0..ColoredCochain::space_dim(3, 2, 2) {
            let theta = ColoredCochain::basis(3, 2, 2, k);
            let x = skeletal_p2(theta.clone());
            let cocycle = delta_pl(&p, &adj, &theta).unwrap().is_zero();
            assert_eq!(check_two_term_pre(&x).unwrap().passed(), cocycle, "basis {k}");
        }
        let kernel = coboundary_matrix(&p, &adj, 3).unwrap().kernel_basis();
        assert!(!kernel.is_empty());
        for v in kernel {
            let theta = ColoredCochain::from_coords(3, 2, 2, v).unwrap();
            let x = triple_to_skeletal(&p, &adj, &theta).unwrap();
            assert!(check_two_term_pre(&x).unwrap().passed());
            let (q, r, t) = skeletal_to_triple(&x).unwrap();
            assert_eq!((q, r, t), (p.clone(), adj.clone(), theta));
        }
    }

    #[test]
    fn skeletal_conversions() {
        let (p, r, t) = skeletal_to_triple(&TwoTermPreLeibniz::zero(2, 2)).unwrap();
        assert_eq!(p, PreLeibnizAlgebra::zero(2));
        assert_eq!(r, PreLeibnizRep::zero(2, 2));
        assert!(t.is_zero());
        assert!(skeletal_to_triple(&TwoTermPreLeibniz::identity_complex(&p2())).is_err());
        let p = p2();
        let adj = PreLeibnizRep::adjoint(&p);
        let bad = (0..48)
            .map(|k| ColoredCochain::basis(3, 2, 2, k))
            .find(|t| !delta_pl(&p, &adj, t).unwrap().is_zero())
            .unwrap();
        assert!(triple_to_skeletal(&p, &adj, &bad).is_err());
        assert_eq!(
            triple_to_skeletal(&p, &adj, &ColoredCochain::zero(3, 2, 2)).unwrap(),
            skeletal_p2(ColoredCochain::zero(3, 2, 2))
        );
    }

    #[test]
    fn sums_are_leibniz() {
        let id = TwoTermPreLeibniz::identity_complex(&p2());
        let y = sum_two_term(&id).unwrap();
        let total = totalize_algebra(&p2());
        assert_eq!(y.mu2_00(), total.table());
        assert_eq!(y.mu2_0m(), total.table());
        assert_eq!(y.mu2_m0(), total.table());
        assert!(check_two_term_leibniz(&y).unwrap().passed());
        assert_eq!(sum_two_term(&TwoTermPreLeibniz::zero(1, 1)).unwrap(), TwoTermLeibniz::zero(1, 1));

        let p = p2();
        let adj = PreLeibnizRep::adjoint(&p);
        for v in coboundary_matrix(&p, &adj, 3).unwrap().kernel_basis() {
            let x = triple_to_skeletal(&p, &adj, &ColoredCochain::from_coords(3, 2, 2, v).unwrap()).unwrap();
            let y = sum_two_term(&x).unwrap();
            assert!(check_two_term_leibniz(&y).unwrap().passed());
            let mut mu3 = y.mu3().clone();
            let old = mu3.get(&[0, 0, 0], 0).clone();
            mu3.set(&[0, 0, 0], 0, old + rat(1));
            let bent = TwoTermLeibniz::new(
                y.complex().clone(),
                y.mu2_00().clone(),
                y.mu2_0m().clone(),
                y.mu2_m0().clone(),
                mu3,
            )
            .unwrap();
            assert!(!check_two_term_leibniz(&bent).unwrap().passed());
        }
    }

    #[test]
    fn crossed_modules() {
        let p = p2();
        let c = CrossedModule::identity(&p);
        assert!(check_crossed_module(&c).unwrap().passed());
        let x = crossed_to_strict(&c).unwrap();
        assert_eq!(x, TwoTermPreLeibniz::identity_complex(&p));
        assert_eq!(strict_to_crossed(&x).unwrap(), c);

        let zero = CrossedModule::new(
            PreLeibnizAlgebra::zero(1),
            PreLeibnizAlgebra::zero(2),
            RatMatrix::zeros(2, 1),
            PreLeibnizRep::zero(2, 1),
        )
        .unwrap();
        assert!(check_crossed_module(&zero).unwrap().passed());
        assert_eq!(crossed_to_strict(&zero).unwrap(), TwoTermPreLeibniz::zero(1, 2));

        let adj = PreLeibnizRep::adjoint(&p);
        let no_right = PreLeibnizRep::new(
            adj.left_l().clone(),
            adj.right_l().clone(),
            Bilinear::zero(2, 2, 2),
            Bilinear::zero(2, 2, 2),
        )
        .unwrap();
        let broken = CrossedModule::new(p.clone(), p.clone(), RatMatrix::identity(2), no_right).unwrap();
        let report = check_crossed_module(&broken).unwrap();
        assert!(!report.passed());
        assert!(crossed_to_strict(&broken).is_err());

        // d = 0 forces a zero product on A; any representation then works
        let skeletal = skeletal_p2(ColoredCochain::zero(3, 2, 2));
        let c0 = strict_to_crossed(&skeletal).unwrap();
        assert_eq!(c0.a(), &PreLeibnizAlgebra::zero(2));
        assert_eq!(crossed_to_strict(&c0).unwrap(), skeletal);
        assert!(strict_to_crossed(&TwoTermPreLeibniz::identity_complex(&p)).is_ok());
    }

    #[test]
    fn strict_round_trips_with_scaled_d() {
        // a₋₁ = a, a₀ = a, d = λ·id rescales π_A
        let p = p2();
        for lambda in [1, 2, -3] {
            let d = RatMatrix::identity(2).scaled(&rat(lambda));
            let a = PreLeibnizAlgebra::new(p.pi().scaled(&rat(lambda))).unwrap();
            let c = CrossedModule::new(a, p.clone(), d, PreLeibnizRep::adjoint(&p)).unwrap();
            assert!(check_crossed_module(&c).unwrap().passed(), "λ = {lambda}");
            let x = crossed_to_strict(&c).unwrap();
            assert_eq!(strict_to_crossed(&x).unwrap(), c);
        }
    }

    #[test]
    fn rota_baxter_examples() {
        let y = sum_two_term(&TwoTermPreLeibniz::identity_complex(&p2())).unwrap();
        let zero_t = GradedMap::new(RatMatrix::zeros(2, 2), RatMatrix::zeros(2, 2)).unwrap();
        assert!(check_rb_two_term(&y, &zero_t).unwrap().passed());
        let id_t = GradedMap::new(RatMatrix::identity(2), RatMatrix::identity(2)).unwrap();
        assert!(!check_rb_two_term(&y, &id_t).unwrap().passed());
        let only_d = TwoTermLeibniz::new(
            TwoTermComplex::identity(2),
            Bilinear::zero(2, 2, 2),
            Bilinear::zero(2, 2, 2),
            Bilinear::zero(2, 2, 2),
            PlainCochain::zero(3, 2, 2),
        )
        .unwrap();
        assert!(check_rb_two_term(&only_d, &id_t).unwrap().passed());
        let x = induced_pre_from_rb(&y, &zero_t).unwrap();
        assert!(check_two_term_pre(&x).unwrap().passed());
        assert!(induced_pre_from_rb(&y, &id_t).is_err());
    }

    #[test]
    fn rota_baxter_search_on_leibniz_fixture() {
        let l = leib2();
        let adj = LeibnizRep::adjoint(&l);
        let values = [rat(-1), rat(0), rat(1)];
        let pairs = rota_baxter_pairs(&l, &adj, &values).unwrap();
        assert!(pairs.len() > 1);
        for (rb, rb_m) in &pairs {
            let (y, t) = rb_pair_to_two_term(&l, &adj, rb, rb_m).unwrap();
            let x = induced_pre_from_rb(&y, &t).unwrap();
            assert!(check_two_term_pre(&x).unwrap().passed());
            let induced = induced_pre_leibniz(rb, &l, &adj).unwrap();
            assert!(check_pre_leibniz(&induced).unwrap().passed());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let ms = matrices_over(2, &values);
        for _ in 0..30 {
            let rb = &ms[rng.gen_range(0..ms.len())];
            let rb_m = &ms[rng.gen_range(0..ms.len())];
            let found = pairs.iter().any(|(a, b)| a == rb && b == rb_m);
            assert_eq!(rb_pair_to_two_term(&l, &adj, rb, rb_m).is_ok(), found);
        }
    }
}
