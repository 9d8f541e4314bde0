//! Coboundary operators, their matrices and cohomology dimensions.
//!
//! `δ_LP` and `δ_pL` are computed from three families of compositions:
//!
//! ```text
//! Σ_i (-1)^{i+1} ρ(x_i, f(x_1, …, x̂_i, …, x_{n+1}))        left action into slot 2
//! (-1)^{n+1} ρ(f(x_1, …, x_n), x_{n+1})                     right action, slot 1
//! Σ_{i<j} (-1)^i f(x_1, …, x̂_i, …, [x_i, x_j], …, x_{n+1})  product inserted into f
//! ```
//!
//! In the colored case the output color of each term is routed through the box
//! maps with layouts `(2; 2, n)`, `(2; 1, n)` and `(n; j-1, 2)` respectively.

use num_traits::Zero;

use crate::algebra::{total_rep, totalize_algebra, LeibnizAlgebra, LeibnizRep, PreLeibnizAlgebra, PreLeibnizRep};
use crate::cochain::{
    index_by_output, pl_bracket, scatter_compose, totalize_cochain, Block, ColoredCochain, Coloring, PlainCochain,
    Target,
};
use crate::combinat::{shuffles, BoxLayout};
use crate::error::{precondition, shape, Result};
use crate::exactla::RatMatrix;

struct Families<'a> {
    left_action: Vec<Block<'a>>,
    right_action: Vec<Block<'a>>,
    product: Vec<Block<'a>>,
    product_dim: usize,
}

fn apply_families(
    target: &mut Target<'_>,
    f_blocks: &[Block<'_>],
    f_out_dim: usize,
    n: usize,
    fam: &Families<'_>,
    coloring: Coloring,
) -> Result<()> {
    let f_by_output = index_by_output(f_blocks, f_out_dim);
    for sigma in shuffles(1, n - 1) {
        let layout = BoxLayout::new(2, 2, n, &sigma)?;
        scatter_compose(target, &fam.left_action, &f_by_output, 2, n, &layout, sigma.sign(), coloring);
    }
    let id = &shuffles(0, n - 1)[0];
    let layout = BoxLayout::new(2, 1, n, id)?;
    let sign = if (n + 1).is_multiple_of(2) { 1 } else { -1 };
    scatter_compose(target, &fam.right_action, &f_by_output, 1, n, &layout, sign, coloring);

    let product_by_output = index_by_output(&fam.product, fam.product_dim);
    for k in 1..=n {
        let base = if k % 2 == 0 { 1 } else { -1 };
        for sigma in shuffles(k - 1, 1) {
            let layout = BoxLayout::new(n, k, 2, &sigma)?;
            scatter_compose(target, f_blocks, &product_by_output, k, 2, &layout, base * sigma.sign(), coloring);
        }
    }
    Ok(())
}

/// The Loday-Pirashvili coboundary of `f: gⁿ → M`.
pub fn delta_lp(l: &LeibnizAlgebra, r: &LeibnizRep, f: &PlainCochain) -> Result<PlainCochain> {
    let (d, e, n) = (l.dim(), r.module_dim(), f.arity());
    if r.algebra_dim() != d {
        return Err(shape("representation over an algebra of a different dimension"));
    }
    if f.domain_dim() != d || f.codomain_dim() != e {
        return Err(shape(format!(
            "cochain maps {}-dim inputs to {}-dim outputs, expected {d} -> {e}",
            f.domain_dim(),
            f.codomain_dim()
        )));
    }
    let fam = Families {
        left_action: r.rho_l().blocks(1),
        right_action: r.rho_r().blocks(1),
        product: l.bracket().blocks(),
        product_dim: d,
    };
    let mut out = PlainCochain::zero(n + 1, d, e);
    let f_blocks = f.blocks();
    let mut target = Target { coeffs: out.coeffs_mut(), width: n + 1, dim: d, out_dim: e };
    apply_families(&mut target, &f_blocks, e, n, &fam, Coloring::Plain)?;
    Ok(out)
}

fn check_pl_shapes(p: &PreLeibnizAlgebra, r: &PreLeibnizRep, f: &ColoredCochain) -> Result<()> {
    if r.algebra_dim() != p.dim() {
        return Err(shape("representation over an algebra of a different dimension"));
    }
    if f.domain_dim() != p.dim() || f.codomain_dim() != r.module_dim() {
        return Err(shape(format!(
            "cochain maps {}-dim inputs to {}-dim outputs, expected {} -> {}",
            f.domain_dim(),
            f.codomain_dim(),
            p.dim(),
            r.module_dim()
        )));
    }
    Ok(())
}

/// The coboundary `δ_pL f` of a colored cochain `f ∈ Hom(k[Cₙ] ⊗ aⁿ, M)`.
pub fn delta_pl(p: &PreLeibnizAlgebra, r: &PreLeibnizRep, f: &ColoredCochain) -> Result<ColoredCochain> {
    check_pl_shapes(p, r, f)?;
    let (d, e, n) = (p.dim(), r.module_dim(), f.arity());
    let fam = Families {
        left_action: r.pi_l_blocks(),
        right_action: r.pi_r_blocks(),
        product: p.pi().blocks(),
        product_dim: d,
    };
    let mut out = ColoredCochain::zero(n + 1, d, e);
    let f_blocks = f.blocks();
    let mut target = Target { coeffs: out.coeffs_mut(), width: n + 1, dim: d, out_dim: e };
    apply_families(&mut target, &f_blocks, e, n, &fam, Coloring::Colored)?;
    Ok(out)
}

/// `(-1)^{n-1} ⟦π, f⟧_pL`, the coboundary with adjoint coefficients.
pub fn delta_pl_bracket(p: &PreLeibnizAlgebra, f: &ColoredCochain) -> Result<ColoredCochain> {
    let b = pl_bracket(p.pi(), f)?;
    Ok(if f.arity() % 2 == 1 { b } else { -&b })
}

/// One coboundary map `Cⁿ → Cⁿ⁺¹` in canonical tensor bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainComplexSlice {
    pub degree: usize,
    pub matrix: RatMatrix,
}

/// The matrix of `δ_pL: Cⁿ → Cⁿ⁺¹`; column `k` is `δ_pL` of the `k`-th basis cochain.
pub fn coboundary_matrix(p: &PreLeibnizAlgebra, r: &PreLeibnizRep, n: usize) -> Result<RatMatrix> {
    if n == 0 {
        return Err(precondition("the complex starts in degree 1"));
    }
    let (d, e) = (p.dim(), r.module_dim());
    let cols = ColoredCochain::space_dim(n, d, e);
    let rows = ColoredCochain::space_dim(n + 1, d, e);
    let mut m = RatMatrix::zeros(rows, cols);
    for k in 0..cols {
        let image = delta_pl(p, r, &ColoredCochain::basis(n, d, e, k))?;
        for (row, v) in image.coords().iter().enumerate() {
            if !v.is_zero() {
                m.set(row, k, v.clone());
            }
        }
    }
    Ok(m)
}

pub fn complex_slice(p: &PreLeibnizAlgebra, r: &PreLeibnizRep, n: usize) -> Result<CochainComplexSlice> {
    Ok(CochainComplexSlice { degree: n, matrix: coboundary_matrix(p, r, n)? })
}

/// `dim Hⁿ` for `n = 1..=max_n`, with `B¹ = 0`.
pub fn cohomology_dims(p: &PreLeibnizAlgebra, r: &PreLeibnizRep, max_n: usize) -> Result<Vec<usize>> {
    if max_n == 0 {
        return Err(precondition("the maximal degree must be at least 1"));
    }
    let (d, e) = (p.dim(), r.module_dim());
    let mut prev_rank = 0;
    let mut dims = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let rank = coboundary_matrix(p, r, n)?.rank();
        let cocycles = ColoredCochain::space_dim(n, d, e) - rank;
        dims.push(cocycles - prev_rank);
        prev_rank = rank;
    }
    Ok(dims)
}

pub fn is_cocycle(p: &PreLeibnizAlgebra, r: &PreLeibnizRep, f: &ColoredCochain) -> Result<bool> {
    Ok(delta_pl(p, r, f)?.is_zero())
}

/// Some `g` with `δ_pL g = f`, or `None` when `f` is not a coboundary.
/// Errors in degree 1, where `B¹ = 0` has no preimage space.
pub fn coboundary_preimage(
    p: &PreLeibnizAlgebra,
    r: &PreLeibnizRep,
    f: &ColoredCochain,
) -> Result<Option<ColoredCochain>> {
    check_pl_shapes(p, r, f)?;
    let n = f.arity();
    if n == 1 {
        return Err(precondition("degree-1 cochains have no preimages"));
    }
    let m = coboundary_matrix(p, r, n - 1)?;
    let (d, e) = (p.dim(), r.module_dim());
    Ok(match m.solve(f.coords())? {
        Some(x) => Some(ColoredCochain::from_coords(n - 1, d, e, x)?),
        None => None,
    })
}

/// Checks `Φ(δ_pL f) = δ_LP(Φ f)` over the total algebra and representation.
pub fn phi_chain_check(p: &PreLeibnizAlgebra, r: &PreLeibnizRep, f: &ColoredCochain) -> Result<bool> {
    let lhs = totalize_cochain(&delta_pl(p, r, f)?);
    let rhs = delta_lp(&totalize_algebra(p), &total_rep(r), &totalize_cochain(f))?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{semidirect, Bilinear};
    use crate::cochain::{circ_i, eval_colored};
    use crate::combinat::ColorIndex;
    use crate::exactla::{rat, unit_vec, vec_add, vec_sub, Rational};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p2() -> PreLeibnizAlgebra {
        let mut right = Bilinear::zero(2, 2, 2);
        right.set(0, 0, 1, rat(1));
        PreLeibnizAlgebra::from_products(Bilinear::zero(2, 2, 2), right).unwrap()
    }

    fn leib2() -> LeibnizAlgebra {
        totalize_algebra(&p2())
    }

    /// The Loday-Pirashvili formula evaluated term by term on basis inputs.
    fn delta_lp_oracle(l: &LeibnizAlgebra, r: &LeibnizRep, f: &PlainCochain) -> PlainCochain {
        let (d, e, n) = (l.dim(), r.module_dim(), f.arity());
        let mut out = PlainCochain::zero(n + 1, d, e);
        let total = d.pow(n as u32 + 1);
        for flat in 0..total {
            let mut x = vec![0; n + 1];
            let mut rest = flat;
            for s in (0..=n).rev() {
                x[s] = rest % d;
                rest /= d;
            }
            let eval = |args: &[Vec<Rational>]| {
                let refs: Vec<&[Rational]> = args.iter().map(|v| v.as_slice()).collect();
                f.eval(&refs).unwrap()
            };
            let xs: Vec<Vec<Rational>> = x.iter().map(|&i| unit_vec(d, i)).collect();
            let mut acc = vec![Rational::zero(); e];
            for i in 0..n {
                let rest: Vec<Vec<Rational>> = (0..=n).filter(|&k| k != i).map(|k| xs[k].clone()).collect();
                let term = r.rho_l().apply(&xs[i], &eval(&rest));
                acc = if i % 2 == 0 { vec_add(&acc, &term) } else { vec_sub(&acc, &term) };
            }
            let term = r.rho_r().apply(&eval(&xs[..n]), &xs[n]);
            acc = if n % 2 == 0 { vec_sub(&acc, &term) } else { vec_add(&acc, &term) };
            for i in 0..=n {
                for j in i + 1..=n {
                    let mut args: Vec<Vec<Rational>> = Vec::new();
                    for k in 0..=n {
                        if k == i {
                            continue;
                        }
                        args.push(if k == j { l.apply(&xs[i], &xs[j]) } else { xs[k].clone() });
                    }
                    let term = eval(&args);
                    // (-1)^i with 1-based i
                    acc = if i % 2 == 0 { vec_sub(&acc, &term) } else { vec_add(&acc, &term) };
                }
            }
            for (k, v) in acc.into_iter().enumerate() {
                out.set(&x, k, v);
            }
        }
        out
    }

    #[test]
    fn delta_lp_examples() {
        let l = leib2();
        let adj = LeibnizRep::adjoint(&l);
        let id = PlainCochain::identity(2);
        assert_eq!(&delta_lp(&l, &adj, &id).unwrap(), l.bracket());
        assert!(delta_lp(&l, &adj, &PlainCochain::zero(2, 2, 2)).unwrap().is_zero());
        for n in 1..=2 {
            for k in 0..PlainCochain::space_dim(n, 2, 2) {
                let b = PlainCochain::basis(n, 2, 2, k);
                let db = delta_lp(&l, &adj, &b).unwrap();
                assert_eq!(db, delta_lp_oracle(&l, &adj, &b));
                assert!(delta_lp(&l, &adj, &db).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn delta_lp_is_bracket_with_mu() {
        let l = leib2();
        let adj = LeibnizRep::adjoint(&l);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..=3 {
            let len = PlainCochain::space_dim(n, 2, 2);
            let f = PlainCochain::from_coords(n, 2, 2, (0..len).map(|_| rat(rng.gen_range(-2..=2))).collect()).unwrap();
            let b = crate::cochain::balavoine_bracket(l.bracket(), &f).unwrap();
            let expected = if n % 2 == 1 { b } else { -&b };
            assert_eq!(delta_lp(&l, &adj, &f).unwrap(), expected);
        }
        // one term of the family: ρ(x_1, f(x_2)) for n = 1 is μ ∘_2 f
        let f = PlainCochain::identity(2);
        assert_eq!(circ_i(l.bracket(), &f, 2).unwrap(), *l.bracket());
    }

    #[test]
    fn delta_pl_degree_one_formula() {
        // δφ([c]; x, y) = π_c(x, φy) + π_c(φx, y) − φ(π_c(x, y))
        let p = p2();
        let adj = PreLeibnizRep::adjoint(&p);
        let mut phi = ColoredCochain::zero(1, 2, 2);
        phi.set(1, &[0], 0, rat(2));
        phi.set(1, &[1], 0, rat(-1));
        phi.set(1, &[1], 1, rat(3));
        let dphi = delta_pl(&p, &adj, &phi).unwrap();
        let phi_v = |v: &[Rational]| phi.color_part(1).eval(&[v]).unwrap();
        for c in 1..=2 {
            let prod = if c == 1 { p.left() } else { p.right() };
            for i in 0..2 {
                for j in 0..2 {
                    let (x, y) = (unit_vec(2, i), unit_vec(2, j));
                    let expected = vec_sub(
                        &vec_add(&prod.apply(&x, &phi_v(&y)), &prod.apply(&phi_v(&x), &y)),
                        &phi_v(prod.output(i, j)),
                    );
                    assert_eq!(eval_colored(&dphi, ColorIndex::Single(c), &[i, j]).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn delta_pl_examples() {
        let p = p2();
        let adj = PreLeibnizRep::adjoint(&p);
        assert!(delta_pl(&p, &adj, &ColoredCochain::zero(2, 2, 2)).unwrap().is_zero());
        for n in 1..=3 {
            for k in 0..ColoredCochain::space_dim(n, 2, 2) {
                let b = ColoredCochain::basis(n, 2, 2, k);
                let db = delta_pl(&p, &adj, &b).unwrap();
                assert_eq!(db, delta_pl_bracket(&p, &b).unwrap(), "n = {n}, basis {k}");
                if n <= 2 {
                    assert!(delta_pl(&p, &adj, &db).unwrap().is_zero());
                    assert!(phi_chain_check(&p, &adj, &b).unwrap());
                }
            }
        }
    }

    #[test]
    fn matrices() {
        let p = p2();
        let adj = PreLeibnizRep::adjoint(&p);
        let m1 = coboundary_matrix(&p, &adj, 1).unwrap();
        assert_eq!((m1.rows(), m1.cols()), (16, 4));
        let m2 = coboundary_matrix(&p, &adj, 2).unwrap();
        assert!(m2.mul(&m1).unwrap().is_zero());
        for k in 0..m2.cols() {
            let b = ColoredCochain::basis(2, 2, 2, k);
            assert_eq!(m2.column(k), delta_pl(&p, &adj, &b).unwrap().into_coords());
        }
        let z = PreLeibnizAlgebra::zero(2);
        assert!(coboundary_matrix(&z, &PreLeibnizRep::zero(2, 1), 2).unwrap().is_zero());
        assert!(coboundary_matrix(&p, &adj, 0).is_err());
    }

    #[test]
    fn dims_examples() {
        let z = PreLeibnizAlgebra::zero(1);
        assert_eq!(cohomology_dims(&z, &PreLeibnizRep::zero(1, 1), 4).unwrap(), vec![1, 2, 3, 4]);
        let p = p2();
        let adj = PreLeibnizRep::adjoint(&p);
        let dims = cohomology_dims(&p, &adj, 3).unwrap();
        // second implementation: ranks from the bracket form
        let mut prev = 0;
        for (idx, &h) in dims.iter().enumerate() {
            let n = idx + 1;
            let cols: Vec<Vec<Rational>> = (0..ColoredCochain::space_dim(n, 2, 2))
                .map(|k| delta_pl_bracket(&p, &ColoredCochain::basis(n, 2, 2, k)).unwrap().into_coords())
                .collect();
            let rank = RatMatrix::from_columns(ColoredCochain::space_dim(n + 1, 2, 2), &cols).unwrap().rank();
            assert_eq!(h, ColoredCochain::space_dim(n, 2, 2) - rank - prev);
            assert!(h <= ColoredCochain::space_dim(n, 2, 2));
            prev = rank;
        }
        assert!(cohomology_dims(&p, &adj, 0).is_err());
    }

    #[test]
    fn general_rep_sits_inside_semidirect() {
        // For M ≠ a, δ_pL on C(a, M) is the restriction of the adjoint
        // coboundary of a ⋉ M to cochains with a-inputs and M-outputs.
        let p = p2();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let adj = PreLeibnizRep::adjoint(&p);
        let s = semidirect(&p, &adj).unwrap();
        for n in 1..=2 {
            let len = ColoredCochain::space_dim(n, 2, 2);
            let f =
                ColoredCochain::from_coords(n, 2, 2, (0..len).map(|_| rat(rng.gen_range(-1..=1))).collect()).unwrap();
            let mut lifted = ColoredCochain::zero(n, 4, 4);
            for (c, args, k, v) in f.nonzero_entries() {
                lifted.set(c, &args, k + 2, v);
            }
            let big = delta_pl_bracket(&s, &lifted).unwrap();
            let small = delta_pl(&p, &adj, &f).unwrap();
            for (c, args, k, v) in big.nonzero_entries() {
                if args.iter().all(|&a| a < 2) {
                    assert!(k >= 2);
                    assert_eq!(small.get(c, &args, k - 2), &v);
                }
            }
            let restricted_nonzero =
                big.nonzero_entries().into_iter().filter(|(_, a, _, _)| a.iter().all(|&x| x < 2)).count();
            assert_eq!(restricted_nonzero, small.nonzero_entries().len());
        }
    }

    #[test]
    fn preimages() {
        let p = p2();
        let adj = PreLeibnizRep::adjoint(&p);
        let mut g = ColoredCochain::zero(1, 2, 2);
        g.set(1, &[1], 0, rat(1));
        let f = delta_pl(&p, &adj, &g).unwrap();
        let pre = coboundary_preimage(&p, &adj, &f).unwrap().unwrap();
        assert_eq!(delta_pl(&p, &adj, &pre).unwrap(), f);
        assert!(coboundary_preimage(&p, &adj, &g).is_err());
        let not_exact = ColoredCochain::basis(2, 2, 2, 0);
        assert!(
            !is_cocycle(&p, &adj, &not_exact).unwrap() || coboundary_preimage(&p, &adj, &not_exact).unwrap().is_none()
        );
    }
}
