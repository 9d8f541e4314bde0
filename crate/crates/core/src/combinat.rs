//! Shuffles and the box maps that route colors through a colored composition.
//!
//! Colors and shuffle positions are 1-based labels: `C_n = {1, ..., n}`.

use crate::error::{Error, Result};

/// A `(p, q)`-shuffle: a permutation of `{1..p+q}` increasing on the first
/// `p` positions and on the last `q` positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shuffle {
    p: usize,
    q: usize,
    /// `perm[k - 1] = σ(k)`.
    perm: Vec<usize>,
    sign: i32,
}

impl Shuffle {
    pub fn identity(p: usize, q: usize) -> Self {
        Shuffle { p, q, perm: (1..=p + q).collect(), sign: 1 }
    }

    /// Builds a shuffle from its one-line notation, validating both runs.
    pub fn from_perm(p: usize, q: usize, perm: Vec<usize>) -> Result<Self> {
        let n = p + q;
        let mut seen = vec![false; n + 1];
        let is_perm =
            perm.len() == n && perm.iter().all(|&x| (1..=n).contains(&x) && !std::mem::replace(&mut seen[x], true));
        if !is_perm {
            return Err(Error::Shape(format!("{perm:?} is not a permutation of 1..={n}")));
        }
        let increasing = |s: &[usize]| s.windows(2).all(|w| w[0] < w[1]);
        if !increasing(&perm[..p]) || !increasing(&perm[p..]) {
            return Err(Error::Shape(format!("{perm:?} is not a ({p},{q})-shuffle")));
        }
        let sign = permutation_sign(&perm);
        Ok(Shuffle { p, q, perm, sign })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// +1 or -1.
    pub fn sign(&self) -> i32 {
        self.sign
    }

    /// `σ(k)` for `k` in `1..=p+q`.
    pub fn image(&self, k: usize) -> usize {
        self.perm[k - 1]
    }

    pub fn len(&self) -> usize {
        self.p + self.q
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }
}

/// Sign of a permutation of `{1..n}` in one-line notation, by inversion count.
pub fn permutation_sign(perm: &[usize]) -> i32 {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All `(p, q)`-shuffles in lexicographic order of their one-line notation.
pub fn shuffles(p: usize, q: usize) -> Vec<Shuffle> {
    let n = p + q;
    let mut out = Vec::new();
    let mut first = Vec::with_capacity(p);
    choose(1, n, p, &mut first, &mut |chosen| {
        let mut perm = chosen.to_vec();
        perm.extend((1..=n).filter(|x| !chosen.contains(x)));
        let sign = permutation_sign(&perm);
        out.push(Shuffle { p, q, perm, sign });
    });
    out
}

fn choose(start: usize, n: usize, k: usize, acc: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if acc.len() == k {
        emit(acc);
        return;
    }
    let remaining = k - acc.len();
    for x in start..=n + 1 - remaining {
        acc.push(x);
        choose(x + 1, n, k, acc, emit);
        acc.pop();
    }
}

/// Either one color `[j]` or the formal sum `[1] + ... + [n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ColorIndex {
    Single(usize),
    All,
}

impl ColorIndex {
    pub fn contains(self, color: usize) -> bool {
        match self {
            ColorIndex::Single(c) => c == color,
            ColorIndex::All => true,
        }
    }
}

/// The arrangement of `C_{m+n-1}` into `m` boxes for an insertion at slot `i`
/// of an arity-`n` map into an arity-`m` map, relabelled by `σ ∈ Sh(i-1, n-1)`:
///
/// ```text
/// [σ(1)] ... [σ(i-1)]  [σ(i) ... σ(i+n-2) i+n-1]  [i+n] ... [m+n-1]
/// ```
///
/// Layout position `p` (1-based, left to right) carries the label
/// [`BoxLayout::label`]; the same labels say which input `x_k` sits in that
/// position of the composed expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxLayout {
    m: usize,
    i: usize,
    n: usize,
    /// label at each layout position
    labels: Vec<usize>,
    /// layout position of each label
    positions: Vec<usize>,
}

impl BoxLayout {
    pub fn new(m: usize, i: usize, n: usize, sigma: &Shuffle) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Shape("arities must be at least 1".into()));
        }
        if !(1..=m).contains(&i) {
            return Err(Error::OutOfRange { what: "insertion slot", value: i, max: m });
        }
        if sigma.p() != i - 1 || sigma.q() != n - 1 {
            return Err(Error::Shape(format!(
                "expected a ({}, {})-shuffle, got ({}, {})",
                i - 1,
                n - 1,
                sigma.p(),
                sigma.q()
            )));
        }
        let total = m + n - 1;
        let labels: Vec<usize> = (1..=total).map(|pos| if pos <= i + n - 2 { sigma.image(pos) } else { pos }).collect();
        let mut positions = vec![0; total];
        for (pos, &label) in labels.iter().enumerate() {
            positions[label - 1] = pos + 1;
        }
        Ok(BoxLayout { m, i, n, labels, positions })
    }

    /// Number of colors `m + n - 1`.
    pub fn width(&self) -> usize {
        self.labels.len()
    }

    /// Label at layout position `pos` (1-based).
    pub fn label(&self, pos: usize) -> usize {
        self.labels[pos - 1]
    }

    fn position_of(&self, r: usize) -> Result<usize> {
        if !(1..=self.width()).contains(&r) {
            return Err(Error::OutOfRange { what: "color", value: r, max: self.width() });
        }
        Ok(self.positions[r - 1])
    }

    /// `R^σ_{m;i,n}`: the box holding color `r`.
    pub fn r_map(&self, r: usize) -> Result<usize> {
        let pos = self.position_of(r)?;
        Ok(if pos < self.i {
            pos
        } else if pos < self.i + self.n {
            self.i
        } else {
            pos + 1 - self.n
        })
    }

    /// `S^σ_{m;i,n}`: the position of `r` inside box `i`, or the full formal
    /// sum when `r` sits in another box.
    pub fn s_map(&self, r: usize) -> Result<ColorIndex> {
        let pos = self.position_of(r)?;
        Ok(if pos >= self.i && pos < self.i + self.n { ColorIndex::Single(pos + 1 - self.i) } else { ColorIndex::All })
    }

    /// For an outer color and an inner color, the unique color `r` with
    /// `R(r) = outer` and `S(r)` containing `inner`.
    pub fn routing_table(&self) -> Vec<Vec<usize>> {
        let mut table = vec![vec![0; self.n]; self.m];
        for r in 1..=self.width() {
            let outer = self.r_map(r).expect("in range");
            match self.s_map(r).expect("in range") {
                ColorIndex::Single(j) => table[outer - 1][j - 1] = r,
                ColorIndex::All => table[outer - 1].iter_mut().for_each(|t| *t = r),
            }
        }
        table
    }
}

/// `R^σ_{m;i,n}([r])`.
pub fn r_map(m: usize, i: usize, n: usize, sigma: &Shuffle, r: usize) -> Result<usize> {
    BoxLayout::new(m, i, n, sigma)?.r_map(r)
}

/// `S^σ_{m;i,n}([r])`.
pub fn s_map(m: usize, i: usize, n: usize, sigma: &Shuffle, r: usize) -> Result<ColorIndex> {
    BoxLayout::new(m, i, n, sigma)?.s_map(r)
}
