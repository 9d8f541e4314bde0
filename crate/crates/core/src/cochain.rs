//! Plain and colored multilinear maps with their compositions and brackets.
//!
//! A [`PlainCochain`] of arity `n` is a map `V^{⊗n} → W`; a [`ColoredCochain`]
//! additionally takes a color from `C_n = {1..n}` and is linear in the formal
//! sums `k[C_n]`. Coefficients are dense tensors ordered lexicographically by
//! `(color, i_1, ..., i_n, k)`. Basis indices are 0-based, colors 1-based.
//!
//! Compositions are computed by scattering products of nonzero blocks, so
//! their cost scales with the number of nonzero entries rather than with the
//! size of the result.

use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::combinat::{shuffles, BoxLayout, ColorIndex};
use crate::error::{shape, Error, Result};
use crate::exactla::{axpy, is_zero_vec, RatMatrix, Rational};

fn pow(d: usize, n: usize) -> usize {
    d.pow(n as u32)
}

fn flat_args(args: &[usize], d: usize) -> usize {
    args.iter().fold(0, |acc, &a| acc * d + a)
}

fn unflat_args(mut idx: usize, d: usize, n: usize, out: &mut [usize]) {
    for slot in (0..n).rev() {
        out[slot] = idx % d;
        idx /= d;
    }
}

/// One nonzero output vector of a multilinear map: `f([color]; args) = out`.
#[derive(Debug)]
pub(crate) struct Block<'a> {
    pub color: usize,
    pub args: Vec<usize>,
    pub out: &'a [Rational],
}

/// Nonzero blocks of a dense tensor with `colors` colors, `arity` slots of
/// dimension `d` and output dimension `e`.
fn blocks_of(coeffs: &[Rational], colors: usize, arity: usize, d: usize, e: usize) -> Vec<Block<'_>> {
    let per_color = pow(d, arity);
    let mut blocks = Vec::new();
    if e == 0 {
        return blocks;
    }
    for (chunk_idx, out) in coeffs.chunks(e).enumerate() {
        if is_zero_vec(out) {
            continue;
        }
        let color = chunk_idx / per_color + 1;
        debug_assert!(color <= colors);
        let mut args = vec![0; arity];
        unflat_args(chunk_idx % per_color, d, arity, &mut args);
        blocks.push(Block { color, args, out });
    }
    blocks
}

/// How output colors are assigned when composing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Coloring {
    Plain,
    Colored,
}

/// Target of a scatter composition: a dense tensor of arity `width` over a
/// domain of dimension `dim` with output dimension `out_dim`.
pub(crate) struct Target<'a> {
    pub coeffs: &'a mut [Rational],
    pub width: usize,
    pub dim: usize,
    pub out_dim: usize,
}

/// Inner blocks grouped by the output coordinate they feed into.
pub(crate) fn index_by_output<'a>(blocks: &'a [Block<'a>], out_dim: usize) -> Vec<Vec<(&'a Block<'a>, &'a Rational)>> {
    let mut by_output = vec![Vec::new(); out_dim];
    for b in blocks {
        for (l, c) in b.out.iter().enumerate() {
            if !c.is_zero() {
                by_output[l].push((b, c));
            }
        }
    }
    by_output
}

/// Adds `sign · outer(…, inner(…), …)` for one box layout: the inner map is
/// inserted at the layout's slot, inputs are placed according to the layout
/// labels and the output color follows the routing table.
#[allow(clippy::too_many_arguments)]
pub(crate) fn scatter_compose(
    target: &mut Target<'_>,
    outer: &[Block<'_>],
    inner_by_output: &[Vec<(&Block<'_>, &Rational)>],
    slot: usize,
    inner_arity: usize,
    layout: &BoxLayout,
    sign: i32,
    coloring: Coloring,
) {
    let table = layout.routing_table();
    let width = target.width;
    let per_color = pow(target.dim, width);
    let mut x = vec![0usize; width];
    let mut scaled = vec![Rational::zero(); target.out_dim];
    for ob in outer {
        let feed = ob.args[slot - 1];
        for &(ib, c) in &inner_by_output[feed] {
            for pos in 1..=width {
                let value = if pos < slot {
                    ob.args[pos - 1]
                } else if pos < slot + inner_arity {
                    ib.args[pos - slot]
                } else {
                    ob.args[pos - inner_arity]
                };
                x[layout.label(pos) - 1] = value;
            }
            let color_block = match coloring {
                Coloring::Plain => 0,
                Coloring::Colored => table[ob.color - 1][ib.color - 1] - 1,
            };
            let start = (color_block * per_color + flat_args(&x, target.dim)) * target.out_dim;
            let coeff = if sign < 0 { -c } else { c.clone() };
            for (s, o) in scaled.iter_mut().zip(ob.out) {
                *s = &coeff * o;
            }
            axpy(&mut target.coeffs[start..start + target.out_dim], &Rational::one(), &scaled);
        }
    }
}

macro_rules! tensor_common {
    ($ty:ident) => {
        impl $ty {
            pub fn arity(&self) -> usize {
                self.arity
            }

            pub fn domain_dim(&self) -> usize {
                self.domain_dim
            }

            pub fn codomain_dim(&self) -> usize {
                self.codomain_dim
            }

            /// Coordinates in the canonical tensor basis.
            pub fn coords(&self) -> &[Rational] {
                &self.coeffs
            }

            pub fn into_coords(self) -> Vec<Rational> {
                self.coeffs
            }

            pub(crate) fn coeffs_mut(&mut self) -> &mut [Rational] {
                &mut self.coeffs
            }

            pub fn is_zero(&self) -> bool {
                is_zero_vec(&self.coeffs)
            }

            pub fn scaled(&self, s: &Rational) -> Self {
                let mut out = self.clone();
                out.coeffs.iter_mut().for_each(|x| *x *= s);
                out
            }

            fn same_shape(&self, other: &Self) -> bool {
                (self.arity, self.domain_dim, self.codomain_dim) == (other.arity, other.domain_dim, other.codomain_dim)
            }

            fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
                assert!(
                    self.same_shape(other),
                    "cochain shape mismatch: {:?} vs {:?}",
                    (self.arity, self.domain_dim, self.codomain_dim),
                    (other.arity, other.domain_dim, other.codomain_dim)
                );
                let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect();
                $ty { coeffs, ..*self }
            }

            pub(crate) fn blocks(&self) -> Vec<Block<'_>> {
                blocks_of(&self.coeffs, self.colors(), self.arity, self.domain_dim, self.codomain_dim)
            }
        }

        /// Panics when the shapes differ.
        impl Add for &$ty {
            type Output = $ty;
            fn add(self, other: &$ty) -> $ty {
                self.zip_with(other, |a, b| a + b)
            }
        }

        /// Panics when the shapes differ.
        impl Sub for &$ty {
            type Output = $ty;
            fn sub(self, other: &$ty) -> $ty {
                self.zip_with(other, |a, b| a - b)
            }
        }

        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                self.scaled(&-Rational::one())
            }
        }
    };
}

/// A multilinear map `V^{⊗n} → W` given by its coefficient tensor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlainCochain {
    arity: usize,
    domain_dim: usize,
    codomain_dim: usize,
    coeffs: Vec<Rational>,
}

tensor_common!(PlainCochain);

impl PlainCochain {
    pub fn space_dim(arity: usize, domain_dim: usize, codomain_dim: usize) -> usize {
        pow(domain_dim, arity) * codomain_dim
    }

    pub fn zero(arity: usize, domain_dim: usize, codomain_dim: usize) -> Self {
        assert!(arity >= 1, "cochains have arity at least 1");
        PlainCochain {
            arity,
            domain_dim,
            codomain_dim,
            coeffs: vec![Rational::zero(); Self::space_dim(arity, domain_dim, codomain_dim)],
        }
    }

    pub fn from_coords(arity: usize, domain_dim: usize, codomain_dim: usize, coeffs: Vec<Rational>) -> Result<Self> {
        if arity == 0 {
            return Err(shape("cochains have arity at least 1"));
        }
        let expected = Self::space_dim(arity, domain_dim, codomain_dim);
        if coeffs.len() != expected {
            return Err(shape(format!("{} coefficients, expected {expected}", coeffs.len())));
        }
        Ok(PlainCochain { arity, domain_dim, codomain_dim, coeffs })
    }

    /// The `index`-th canonical basis cochain.
    pub fn basis(arity: usize, domain_dim: usize, codomain_dim: usize, index: usize) -> Self {
        let mut f = Self::zero(arity, domain_dim, codomain_dim);
        f.coeffs[index] = Rational::one();
        f
    }

    /// The identity map as an arity-1 cochain.
    pub fn identity(dim: usize) -> Self {
        let mut f = Self::zero(1, dim, dim);
        for i in 0..dim {
            f.set(&[i], i, Rational::one());
        }
        f
    }

    /// Arity-1 cochain of the linear map `m` (columns are images of basis vectors).
    pub fn from_matrix(m: &RatMatrix) -> Self {
        let mut f = Self::zero(1, m.cols(), m.rows());
        for i in 0..m.cols() {
            for k in 0..m.rows() {
                f.set(&[i], k, m.get(k, i).clone());
            }
        }
        f
    }

    fn colors(&self) -> usize {
        1
    }

    fn offset(&self, args: &[usize]) -> usize {
        assert_eq!(args.len(), self.arity, "wrong number of arguments");
        assert!(args.iter().all(|&a| a < self.domain_dim), "argument index out of range");
        flat_args(args, self.domain_dim) * self.codomain_dim
    }

    /// `f(e_{args})` as a coordinate vector.
    pub fn output(&self, args: &[usize]) -> &[Rational] {
        let o = self.offset(args);
        &self.coeffs[o..o + self.codomain_dim]
    }

    pub fn get(&self, args: &[usize], k: usize) -> &Rational {
        &self.output(args)[k]
    }

    pub fn set(&mut self, args: &[usize], k: usize, value: Rational) {
        assert!(k < self.codomain_dim, "output index out of range");
        let o = self.offset(args);
        self.coeffs[o + k] = value;
    }

    /// Evaluates on arbitrary input vectors by multilinearity.
    pub fn eval(&self, inputs: &[&[Rational]]) -> Result<Vec<Rational>> {
        if inputs.len() != self.arity || inputs.iter().any(|v| v.len() != self.domain_dim) {
            return Err(shape("inputs do not match the cochain's arity and domain"));
        }
        let mut out = vec![Rational::zero(); self.codomain_dim];
        for b in self.blocks() {
            let coeff = b.args.iter().enumerate().fold(Rational::one(), |acc, (slot, &a)| acc * &inputs[slot][a]);
            axpy(&mut out, &coeff, b.out);
        }
        Ok(out)
    }

    /// Nonzero coefficients as `(args, k, value)` in canonical order.
    pub fn nonzero_entries(&self) -> Vec<(Vec<usize>, usize, Rational)> {
        self.blocks()
            .into_iter()
            .flat_map(|b| {
                let args = b.args.clone();
                b.out
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(move |(k, c)| (args.clone(), k, c.clone()))
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    /// `g(x_1, ..., x_n) := f(m_1 x_1, ..., m_n x_n)`; `maps[s]` must map the
    /// new domain into this cochain's domain.
    pub fn precompose(&self, maps: &[&RatMatrix]) -> Result<Self> {
        if maps.len() != self.arity {
            return Err(shape("one map per argument slot"));
        }
        let new_dim = maps.first().map_or(0, |m| m.cols());
        if maps.iter().any(|m| m.rows() != self.domain_dim || m.cols() != new_dim) {
            return Err(shape("precomposition maps do not match the domain"));
        }
        let mut current = self.clone();
        for (slot, m) in maps.iter().enumerate() {
            current = current.precompose_slot(slot, m, new_dim);
        }
        Ok(current)
    }

    // Slots before `slot` already have dimension `new_dim`; `domain_dim`
    // switches to `new_dim` once the last slot is done.
    fn precompose_slot(&self, slot: usize, m: &RatMatrix, new_dim: usize) -> Self {
        let dims_before: Vec<usize> =
            (0..self.arity).map(|s| if s < slot { new_dim } else { self.domain_dim }).collect();
        let mut dims_after = dims_before.clone();
        dims_after[slot] = new_dim;
        let e = self.codomain_dim;
        let count_after: usize = dims_after.iter().product();
        let mut coeffs = vec![Rational::zero(); count_after * e];
        let count_before: usize = dims_before.iter().product();
        let mut args = vec![0; self.arity];
        for idx in 0..count_before {
            let mut rest = idx;
            for s in (0..self.arity).rev() {
                args[s] = rest % dims_before[s];
                rest /= dims_before[s];
            }
            let src = &self.coeffs[idx * e..(idx + 1) * e];
            if is_zero_vec(src) {
                continue;
            }
            let old = args[slot];
            for new in 0..new_dim {
                let c = m.get(old, new);
                if c.is_zero() {
                    continue;
                }
                args[slot] = new;
                let dst = args.iter().zip(&dims_after).fold(0, |acc, (&a, &d)| acc * d + a);
                axpy(&mut coeffs[dst * e..(dst + 1) * e], c, src);
            }
            args[slot] = old;
        }
        PlainCochain {
            arity: self.arity,
            domain_dim: if slot + 1 == self.arity { new_dim } else { self.domain_dim },
            codomain_dim: e,
            coeffs,
        }
    }

    /// `m ∘ f`.
    pub fn postcompose(&self, m: &RatMatrix) -> Result<Self> {
        if m.cols() != self.codomain_dim {
            return Err(shape("postcomposition map does not match the codomain"));
        }
        let mut out = Self::zero(self.arity, self.domain_dim, m.rows());
        for (chunk, src) in self.coeffs.chunks(self.codomain_dim.max(1)).enumerate() {
            if is_zero_vec(src) {
                continue;
            }
            let image = m.mul_vec(src)?;
            let o = chunk * m.rows();
            out.coeffs[o..o + m.rows()].clone_from_slice(&image);
        }
        Ok(out)
    }
}

/// A colored multilinear map `k[C_n] ⊗ V^{⊗n} → W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredCochain {
    arity: usize,
    domain_dim: usize,
    codomain_dim: usize,
    coeffs: Vec<Rational>,
}

tensor_common!(ColoredCochain);

impl ColoredCochain {
    /// `n · dⁿ · e`.
    pub fn space_dim(arity: usize, domain_dim: usize, codomain_dim: usize) -> usize {
        arity * pow(domain_dim, arity) * codomain_dim
    }

    pub fn zero(arity: usize, domain_dim: usize, codomain_dim: usize) -> Self {
        assert!(arity >= 1, "cochains have arity at least 1");
        ColoredCochain {
            arity,
            domain_dim,
            codomain_dim,
            coeffs: vec![Rational::zero(); Self::space_dim(arity, domain_dim, codomain_dim)],
        }
    }

    pub fn from_coords(arity: usize, domain_dim: usize, codomain_dim: usize, coeffs: Vec<Rational>) -> Result<Self> {
        if arity == 0 {
            return Err(shape("cochains have arity at least 1"));
        }
        let expected = Self::space_dim(arity, domain_dim, codomain_dim);
        if coeffs.len() != expected {
            return Err(shape(format!("{} coefficients, expected {expected}", coeffs.len())));
        }
        Ok(ColoredCochain { arity, domain_dim, codomain_dim, coeffs })
    }

    pub fn basis(arity: usize, domain_dim: usize, codomain_dim: usize, index: usize) -> Self {
        let mut f = Self::zero(arity, domain_dim, codomain_dim);
        f.coeffs[index] = Rational::one();
        f
    }

    /// The colored identity `f([1]; x) = x`.
    pub fn identity(dim: usize) -> Self {
        let mut f = Self::zero(1, dim, dim);
        for i in 0..dim {
            f.set(1, &[i], i, Rational::one());
        }
        f
    }

    fn colors(&self) -> usize {
        self.arity
    }

    fn offset(&self, color: usize, args: &[usize]) -> usize {
        assert!((1..=self.arity).contains(&color), "color out of range");
        assert_eq!(args.len(), self.arity, "wrong number of arguments");
        assert!(args.iter().all(|&a| a < self.domain_dim), "argument index out of range");
        ((color - 1) * pow(self.domain_dim, self.arity) + flat_args(args, self.domain_dim)) * self.codomain_dim
    }

    /// `f([color]; e_{args})` as a coordinate vector.
    pub fn output(&self, color: usize, args: &[usize]) -> &[Rational] {
        let o = self.offset(color, args);
        &self.coeffs[o..o + self.codomain_dim]
    }

    pub fn get(&self, color: usize, args: &[usize], k: usize) -> &Rational {
        &self.output(color, args)[k]
    }

    pub fn set(&mut self, color: usize, args: &[usize], k: usize, value: Rational) {
        assert!(k < self.codomain_dim, "output index out of range");
        let o = self.offset(color, args);
        self.coeffs[o + k] = value;
    }

    /// The single-color slice `f([color]; ·)` as a plain cochain.
    pub fn color_part(&self, color: usize) -> PlainCochain {
        assert!((1..=self.arity).contains(&color), "color out of range");
        let len = PlainCochain::space_dim(self.arity, self.domain_dim, self.codomain_dim);
        let start = (color - 1) * len;
        PlainCochain {
            arity: self.arity,
            domain_dim: self.domain_dim,
            codomain_dim: self.codomain_dim,
            coeffs: self.coeffs[start..start + len].to_vec(),
        }
    }

    /// Assembles a colored cochain from one plain cochain per color.
    pub fn from_color_parts(parts: &[PlainCochain]) -> Result<Self> {
        let first = parts.first().ok_or_else(|| shape("no color parts"))?;
        if parts.len() != first.arity || parts.iter().any(|p| !p.same_shape(first)) {
            return Err(shape("need one part per color, all of the same shape"));
        }
        Ok(ColoredCochain {
            arity: first.arity,
            domain_dim: first.domain_dim,
            codomain_dim: first.codomain_dim,
            coeffs: parts.iter().flat_map(|p| p.coeffs.iter().cloned()).collect(),
        })
    }

    pub fn nonzero_entries(&self) -> Vec<(usize, Vec<usize>, usize, Rational)> {
        self.blocks()
            .into_iter()
            .flat_map(|b| {
                let (color, args) = (b.color, b.args.clone());
                b.out
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(move |(k, c)| (color, args.clone(), k, c.clone()))
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    /// Applies `maps[s]` to every argument slot and `post` to the output, for
    /// every color.
    pub fn transform(&self, maps: &[&RatMatrix], post: Option<&RatMatrix>) -> Result<Self> {
        let parts = (1..=self.arity)
            .map(|c| {
                let p = self.color_part(c).precompose(maps)?;
                match post {
                    Some(m) => p.postcompose(m),
                    None => Ok(p),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_color_parts(&parts)
    }
}

/// `f(c; e_{args})` with `c` a single color or the sum of all colors.
pub fn eval_colored(f: &ColoredCochain, color: ColorIndex, args: &[usize]) -> Result<Vec<Rational>> {
    if args.len() != f.arity {
        return Err(shape(format!("{} arguments for arity {}", args.len(), f.arity)));
    }
    if let Some(&bad) = args.iter().find(|&&a| a >= f.domain_dim) {
        return Err(Error::OutOfRange { what: "basis index", value: bad + 1, max: f.domain_dim });
    }
    match color {
        ColorIndex::Single(c) => {
            if !(1..=f.arity).contains(&c) {
                return Err(Error::OutOfRange { what: "color", value: c, max: f.arity });
            }
            Ok(f.output(c, args).to_vec())
        }
        ColorIndex::All => {
            let mut out = vec![Rational::zero(); f.codomain_dim];
            for c in 1..=f.arity {
                axpy(&mut out, &Rational::one(), f.output(c, args));
            }
            Ok(out)
        }
    }
}

fn check_composable(m: usize, f_dom: usize, g_dom: usize, g_cod: usize, i: usize) -> Result<()> {
    if f_dom != g_dom {
        return Err(shape(format!("domains differ: {f_dom} vs {g_dom}")));
    }
    if g_cod != f_dom {
        return Err(shape(format!("inner codomain {g_cod} does not match outer domain {f_dom}")));
    }
    if !(1..=m).contains(&i) {
        return Err(Error::OutOfRange { what: "insertion slot", value: i, max: m });
    }
    Ok(())
}

/// `(f ∘_i g)(x_1..x_{m+n-1}) = Σ_{σ ∈ Sh(i-1,n-1)} (-1)^σ f(x_σ(1), …, g(x_σ(i), …, x_σ(i+n-2), x_{i+n-1}), …)`.
pub fn circ_i(f: &PlainCochain, g: &PlainCochain, i: usize) -> Result<PlainCochain> {
    let (m, n) = (f.arity, g.arity);
    check_composable(m, f.domain_dim, g.domain_dim, g.codomain_dim, i)?;
    let mut out = PlainCochain::zero(m + n - 1, f.domain_dim, f.codomain_dim);
    let outer = f.blocks();
    let inner = g.blocks();
    let inner_by_output = index_by_output(&inner, g.codomain_dim);
    let mut target = Target { coeffs: &mut out.coeffs, width: m + n - 1, dim: f.domain_dim, out_dim: f.codomain_dim };
    for sigma in shuffles(i - 1, n - 1) {
        let layout = BoxLayout::new(m, i, n, &sigma)?;
        scatter_compose(&mut target, &outer, &inner_by_output, i, n, &layout, sigma.sign(), Coloring::Plain);
    }
    Ok(out)
}

fn alt_sign(k: usize) -> i32 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Σ_i (-1)^{(i-1)(n-1)} f ∘_i g − (-1)^{(m-1)(n-1)} Σ_i (-1)^{(i-1)(m-1)} g ∘_i f.
fn graded_bracket<T: Clone>(
    m: usize,
    n: usize,
    f: &T,
    g: &T,
    compose: impl Fn(&T, &T, usize) -> Result<T>,
    mut accumulate: impl FnMut(&mut Option<T>, T, i32),
) -> Result<T> {
    let mut acc: Option<T> = None;
    for i in 1..=m {
        accumulate(&mut acc, compose(f, g, i)?, alt_sign((i - 1) * (n - 1)));
    }
    let outer = -alt_sign((m - 1) * (n - 1));
    for i in 1..=n {
        accumulate(&mut acc, compose(g, f, i)?, outer * alt_sign((i - 1) * (m - 1)));
    }
    Ok(acc.expect("arity at least 1"))
}

fn accumulate_signed<T>(acc: &mut Option<T>, term: T, sign: i32)
where
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Neg<Output = T>,
{
    *acc = Some(match acc.take() {
        None if sign > 0 => term,
        None => -&term,
        Some(a) if sign > 0 => &a + &term,
        Some(a) => &a - &term,
    });
}

/// The Balavoine bracket `⟦f, g⟧_B` of endomorphism-valued cochains.
pub fn balavoine_bracket(f: &PlainCochain, g: &PlainCochain) -> Result<PlainCochain> {
    check_endo(f.domain_dim, f.codomain_dim, g.domain_dim, g.codomain_dim)?;
    graded_bracket(f.arity, g.arity, f, g, circ_i, accumulate_signed)
}

fn check_endo(fd: usize, fc: usize, gd: usize, gc: usize) -> Result<()> {
    if fd != fc || gd != gc || fd != gd {
        return Err(shape(format!("bracket needs maps on one space: ({fd} -> {fc}) and ({gd} -> {gc})")));
    }
    Ok(())
}

/// `(f ⋄_i g)([r]; x_1..x_{m+n-1}) = Σ_σ (-1)^σ f(R[r]; …, g(S[r]; …), …)`.
pub fn diamond_i(f: &ColoredCochain, g: &ColoredCochain, i: usize) -> Result<ColoredCochain> {
    let (m, n) = (f.arity, g.arity);
    check_composable(m, f.domain_dim, g.domain_dim, g.codomain_dim, i)?;
    let mut out = ColoredCochain::zero(m + n - 1, f.domain_dim, f.codomain_dim);
    let outer = f.blocks();
    let inner = g.blocks();
    let inner_by_output = index_by_output(&inner, g.codomain_dim);
    let mut target = Target { coeffs: &mut out.coeffs, width: m + n - 1, dim: f.domain_dim, out_dim: f.codomain_dim };
    for sigma in shuffles(i - 1, n - 1) {
        let layout = BoxLayout::new(m, i, n, &sigma)?;
        scatter_compose(&mut target, &outer, &inner_by_output, i, n, &layout, sigma.sign(), Coloring::Colored);
    }
    Ok(out)
}

/// The graded bracket `⟦f, g⟧_pL` on colored cochains.
pub fn pl_bracket(f: &ColoredCochain, g: &ColoredCochain) -> Result<ColoredCochain> {
    check_endo(f.domain_dim, f.codomain_dim, g.domain_dim, g.codomain_dim)?;
    graded_bracket(f.arity, g.arity, f, g, diamond_i, accumulate_signed)
}

/// The lift `D(f)` of a colored cochain `V^{⊗n} → W` to a plain cochain
/// `(V ⊕ V)^{⊗n} → W ⊕ W`. Basis vectors `0..d` of the doubled space are the
/// first copy, `d..2d` the second.
///
/// All inputs in the first copy give `(Σ_r f([r]; …), 0)`; exactly one input
/// in the second copy, at slot `r`, gives `(0, f([r]; …))`; more give zero.
pub fn double_lift(f: &ColoredCochain) -> PlainCochain {
    let (d, e, n) = (f.domain_dim, f.codomain_dim, f.arity);
    let mut out = PlainCochain::zero(n, 2 * d, 2 * e);
    for b in f.blocks() {
        let first = b.args.clone();
        let o = out.offset(&first);
        axpy(&mut out.coeffs[o..o + e], &Rational::one(), b.out);
        let mut lifted = b.args.clone();
        lifted[b.color - 1] += d;
        let o = out.offset(&lifted) + e;
        axpy(&mut out.coeffs[o..o + e], &Rational::one(), b.out);
    }
    out
}

/// `f_Tot(x_1..x_n) = Σ_r f([r]; x_1..x_n)`.
pub fn totalize_cochain(f: &ColoredCochain) -> PlainCochain {
    let mut out = PlainCochain::zero(f.arity, f.domain_dim, f.codomain_dim);
    let len = out.coeffs.len();
    for chunk in f.coeffs.chunks(len.max(1)) {
        for (o, x) in out.coeffs.iter_mut().zip(chunk) {
            if !x.is_zero() {
                *o += x;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{r_map, s_map};
    use crate::exactla::rat;
    use proptest::prelude::*;

    /// Direct transcription of the ⋄_i formula: gather every output
    /// coefficient by evaluating f and g through the box maps.
    fn diamond_oracle(f: &ColoredCochain, g: &ColoredCochain, i: usize) -> ColoredCochain {
        let (m, n, d) = (f.arity(), g.arity(), f.domain_dim());
        let width = m + n - 1;
        let mut out = ColoredCochain::zero(width, d, f.codomain_dim());
        let mut x = vec![0; width];
        for flat in 0..d.pow(width as u32) {
            unflat_args(flat, d, width, &mut x);
            for r in 1..=width {
                let mut acc = vec![Rational::zero(); f.codomain_dim()];
                for sigma in shuffles(i - 1, n - 1) {
                    let outer_color = r_map(m, i, n, &sigma, r).unwrap();
                    let inner_color = s_map(m, i, n, &sigma, r).unwrap();
                    let sig = |k: usize| if k <= i + n - 2 { sigma.image(k) } else { k };
                    let inner_args: Vec<usize> = (i..i + n).map(|k| x[sig(k) - 1]).collect();
                    let inner_val = eval_colored(g, inner_color, &inner_args).unwrap();
                    for (l, c) in inner_val.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let mut outer_args: Vec<usize> = (1..i).map(|k| x[sig(k) - 1]).collect();
                        outer_args.push(l);
                        outer_args.extend((i + n..=width).map(|k| x[k - 1]));
                        let v = f.output(outer_color, &outer_args);
                        let coeff = c * rat(sigma.sign() as i64);
                        axpy(&mut acc, &coeff, v);
                    }
                }
                for (k, v) in acc.into_iter().enumerate() {
                    out.set(r, &x, k, v);
                }
            }
        }
        out
    }

    fn random_colored(arity: usize, d: usize, e: usize, vals: &[i64]) -> ColoredCochain {
        let len = ColoredCochain::space_dim(arity, d, e);
        let coeffs = (0..len).map(|k| rat(vals[k % vals.len()])).collect();
        ColoredCochain::from_coords(arity, d, e, coeffs).unwrap()
    }

    fn p2() -> ColoredCochain {
        // ◁ = 0, e1 ▷ e1 = e2
        let mut pi = ColoredCochain::zero(2, 2, 2);
        pi.set(2, &[0, 0], 1, rat(1));
        pi
    }

    #[test]
    fn eval_colored_examples() {
        let z = ColoredCochain::zero(2, 2, 2);
        assert!(is_zero_vec(&eval_colored(&z, ColorIndex::All, &[0, 1]).unwrap()));

        let mut f = ColoredCochain::zero(2, 2, 2);
        f.set(1, &[0, 0], 1, rat(1));
        assert_eq!(eval_colored(&f, ColorIndex::All, &[0, 0]).unwrap(), vec![rat(0), rat(1)]);
        f.set(2, &[0, 0], 1, rat(1));
        assert_eq!(eval_colored(&f, ColorIndex::All, &[0, 0]).unwrap(), vec![rat(0), rat(2)]);

        assert!(eval_colored(&f, ColorIndex::Single(3), &[0, 0]).is_err());
        assert!(eval_colored(&f, ColorIndex::All, &[0]).is_err());
        assert!(eval_colored(&f, ColorIndex::All, &[0, 2]).is_err());
    }

    #[test]
    fn circ_with_identity_is_unit() {
        let f = PlainCochain::from_coords(2, 2, 2, (0..8).map(|k| rat(k - 3)).collect()).unwrap();
        let id = PlainCochain::identity(2);
        for i in 1..=2 {
            assert_eq!(circ_i(&f, &id, i).unwrap(), f);
        }
        let z = PlainCochain::zero(2, 2, 2);
        assert!(circ_i(&z, &z, 1).unwrap().is_zero());
    }

    #[test]
    fn circ_on_small_leibniz_fixture() {
        // μ(e1, e1) = e2
        let mut mu = PlainCochain::zero(2, 2, 2);
        mu.set(&[0, 0], 1, rat(1));
        let c1 = circ_i(&mu, &mu, 1).unwrap();
        let c2 = circ_i(&mu, &mu, 2).unwrap();
        // brute force: μ(μ(x,y),z) and μ(x,μ(y,z)) − μ(y,μ(x,z)) vanish on all basis triples
        assert!(c1.is_zero());
        assert!(c2.is_zero());
        assert!(balavoine_bracket(&mu, &mu).unwrap().is_zero());
    }

    #[test]
    fn balavoine_detects_non_leibniz() {
        // [e1, e2] = e1 is not Leibniz
        let mut mu = PlainCochain::zero(2, 2, 2);
        mu.set(&[0, 1], 0, rat(1));
        let b = balavoine_bracket(&mu, &mu).unwrap();
        assert!(!b.is_zero());
        // ⟦μ,μ⟧(x,y,z) = 2([[x,y],z] − [x,[y,z]] + [y,[x,z]]); at (e1,e2,e2): 2[e1,e2] = 2e1
        assert_eq!(b.output(&[0, 1, 1]), &[rat(2), rat(0)]);
    }

    #[test]
    fn diamond_with_colored_identity_is_unit() {
        let f = random_colored(2, 2, 2, &[1, 0, -1, 2, 0, 3, 0]);
        let id = ColoredCochain::identity(2);
        for i in 1..=2 {
            assert_eq!(diamond_i(&f, &id, i).unwrap(), f);
        }
        let z = ColoredCochain::zero(2, 2, 2);
        assert!(diamond_i(&z, &f, 1).unwrap().is_zero());
        assert!(diamond_i(&f, &z, 2).unwrap().is_zero());
    }

    #[test]
    fn diamond_square_of_p2_vanishes() {
        let pi = p2();
        let d = &diamond_i(&pi, &pi, 1).unwrap() - &diamond_i(&pi, &pi, 2).unwrap();
        assert!(is_zero_vec(d.output(1, &[0, 0, 0])));
        assert!(d.is_zero());
    }

    #[test]
    fn bracket_of_structure_matches_identities() {
        // For arbitrary products the bracket ⟦π,π⟧ is twice the defect of the
        // three pre-Leibniz identities, color by color.
        let pi = random_colored(2, 2, 2, &[1, -1, 0, 2, 1, 0, 0, 1, -2, 1, 0]);
        let b = pl_bracket(&pi, &pi).unwrap();
        let left = |x: &[Rational], y: &[Rational]| pi.color_part(1).eval(&[x, y]).unwrap();
        let right = |x: &[Rational], y: &[Rational]| pi.color_part(2).eval(&[x, y]).unwrap();
        let add = |a: Vec<Rational>, b: Vec<Rational>| a.iter().zip(&b).map(|(x, y)| x + y).collect::<Vec<_>>();
        let basis = |i: usize| -> Vec<Rational> { (0..2).map(|k| rat((k == i) as i64)).collect() };
        for (xi, yi, zi) in (0..8).map(|t| (t / 4, (t / 2) % 2, t % 2)) {
            let (x, y, z) = (basis(xi), basis(yi), basis(zi));
            let one = {
                let a = left(&left(&x, &y), &z);
                let b2 = left(&x, &add(left(&y, &z), right(&y, &z)));
                let c = right(&y, &left(&x, &z));
                a.iter().zip(&b2).zip(&c).map(|((a, b), c)| rat(2) * (a - b + c)).collect::<Vec<_>>()
            };
            let three = {
                let a = right(&add(left(&x, &y), right(&x, &y)), &z);
                let b2 = right(&x, &right(&y, &z));
                let c = right(&y, &right(&x, &z));
                a.iter().zip(&b2).zip(&c).map(|((a, b), c)| rat(2) * (a - b + c)).collect::<Vec<_>>()
            };
            let two = {
                // follows the ⋄ definition: (x▷y)◁z − x▷(y◁z) + y◁(x◁z + x▷z)
                let a = left(&right(&x, &y), &z);
                let b2 = right(&x, &left(&y, &z));
                let c = left(&y, &add(left(&x, &z), right(&x, &z)));
                a.iter().zip(&b2).zip(&c).map(|((a, b), c)| rat(2) * (a - b + c)).collect::<Vec<_>>()
            };
            assert_eq!(b.output(1, &[xi, yi, zi]), &one[..]);
            assert_eq!(b.output(2, &[xi, yi, zi]), &two[..]);
            assert_eq!(b.output(3, &[xi, yi, zi]), &three[..]);
        }
    }

    #[test]
    fn lift_examples() {
        assert!(double_lift(&ColoredCochain::zero(2, 2, 2)).is_zero());
        // D of the colored identity: (x,0) ↦ (x,0), (0,x) ↦ (0,x)
        assert_eq!(double_lift(&ColoredCochain::identity(2)), PlainCochain::identity(4));
        // injective on basis cochains
        for k in 0..ColoredCochain::space_dim(2, 2, 2) {
            assert!(!double_lift(&ColoredCochain::basis(2, 2, 2, k)).is_zero());
        }
    }

    #[test]
    fn totalize_examples() {
        let t = totalize_cochain(&p2());
        assert_eq!(t.output(&[0, 0]), &[rat(0), rat(1)]);
        assert!(totalize_cochain(&ColoredCochain::zero(3, 2, 2)).is_zero());
    }

    #[test]
    fn shape_errors() {
        let f = ColoredCochain::zero(2, 2, 2);
        let g = ColoredCochain::zero(2, 3, 3);
        assert!(diamond_i(&f, &g, 1).is_err());
        assert!(diamond_i(&f, &f, 3).is_err());
        assert!(pl_bracket(&f, &g).is_err());
        let h = PlainCochain::zero(1, 2, 3);
        assert!(balavoine_bracket(&h, &h).is_err());
    }

    #[test]
    fn precompose_and_postcompose() {
        let f = PlainCochain::from_coords(2, 2, 2, (0..8).map(|k| rat(k + 1)).collect()).unwrap();
        let id = RatMatrix::identity(2);
        assert_eq!(f.precompose(&[&id, &id]).unwrap(), f);
        assert_eq!(f.postcompose(&id).unwrap(), f);
        let swap = RatMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        let g = f.precompose(&[&swap, &id]).unwrap();
        assert_eq!(g.output(&[0, 1]), f.output(&[1, 1]));
        // into a 1-dimensional domain
        let col = RatMatrix::from_i64(&[&[1], &[2]]);
        let h = f.precompose(&[&col, &col]).unwrap();
        assert_eq!(h.domain_dim(), 1);
        let x = vec![rat(1), rat(2)];
        assert_eq!(h.output(&[0, 0]), &f.eval(&[&x, &x]).unwrap()[..]);
    }

    fn sparse_colored(arity: usize) -> impl Strategy<Value = ColoredCochain> {
        let len = ColoredCochain::space_dim(arity, 2, 2);
        proptest::collection::vec(prop_oneof![6 => Just(0i64), 1 => Just(1), 1 => Just(-1), 1 => Just(2)], len)
            .prop_map(move |v| ColoredCochain::from_coords(arity, 2, 2, v.into_iter().map(rat).collect()).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn diamond_matches_formula(m in 1usize..=3, n in 1usize..=2, pick in 0usize..3, seed in 0u64..1000) {
            let i = 1 + pick % m;
            let vals: Vec<i64> = (0..13).map(|k| ((seed as i64 * 7 + k * 5) % 5) - 2).collect();
            let f = random_colored(m, 2, 2, &vals);
            let g = random_colored(n, 2, 2, &vals[3..]);
            prop_assert_eq!(diamond_i(&f, &g, i).unwrap(), diamond_oracle(&f, &g, i));
        }

        #[test]
        fn lift_intertwines_compositions(f in sparse_colored(2), g in sparse_colored(2), i in 1usize..=2) {
            let lhs = double_lift(&diamond_i(&f, &g, i).unwrap());
            let rhs = circ_i(&double_lift(&f), &double_lift(&g), i).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn totalization_intertwines_compositions(f in sparse_colored(2), g in sparse_colored(1), i in 1usize..=2) {
            let lhs = totalize_cochain(&diamond_i(&f, &g, i).unwrap());
            let rhs = circ_i(&totalize_cochain(&f), &totalize_cochain(&g), i).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pl_bracket_is_graded_antisymmetric(f in sparse_colored(2), g in sparse_colored(1)) {
            let fg = pl_bracket(&f, &g).unwrap();
            let gf = pl_bracket(&g, &f).unwrap();
            // (m-1)(n-1) = 0 here, so ⟦f,g⟧ = −⟦g,f⟧
            prop_assert_eq!(fg, -&gf);
        }

        #[test]
        fn embedding_respects_brackets(f in sparse_colored(2), g in sparse_colored(2)) {
            let lhs = double_lift(&pl_bracket(&f, &g).unwrap());
            let rhs = balavoine_bracket(&double_lift(&f), &double_lift(&g)).unwrap();
            prop_assert_eq!(lhs, rhs);
            let tot = totalize_cochain(&pl_bracket(&f, &g).unwrap());
            prop_assert_eq!(tot, balavoine_bracket(&totalize_cochain(&f), &totalize_cochain(&g)).unwrap());
        }
    }

    #[test]
    fn balavoine_graded_jacobi() {
        // ⟦f,⟦g,h⟧⟧ = ⟦⟦f,g⟧,h⟧ + (-1)^{|f||g|} ⟦g,⟦f,h⟧⟧ with |f| = arity − 1.
        let vals = [1i64, 0, -1, 2, 0, 0, 1, -2, 3, 0, 1];
        for (a, b, c) in [(1, 2, 2), (2, 2, 2), (2, 1, 2), (1, 1, 2), (2, 2, 1)] {
            let mk = |arity: usize, shift: usize| {
                let len = PlainCochain::space_dim(arity, 2, 2);
                PlainCochain::from_coords(arity, 2, 2, (0..len).map(|k| rat(vals[(k + shift) % vals.len()])).collect())
                    .unwrap()
            };
            let (f, g, h) = (mk(a, 0), mk(b, 3), mk(c, 5));
            let lhs = balavoine_bracket(&f, &balavoine_bracket(&g, &h).unwrap()).unwrap();
            let first = balavoine_bracket(&balavoine_bracket(&f, &g).unwrap(), &h).unwrap();
            let second = balavoine_bracket(&g, &balavoine_bracket(&f, &h).unwrap()).unwrap();
            let rhs = if ((a - 1) * (b - 1)) % 2 == 0 { &first + &second } else { &first - &second };
            assert_eq!(lhs, rhs, "arities ({a},{b},{c})");
        }
    }
}
