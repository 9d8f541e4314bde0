//! Workload builders shared by the benchmarks.

use preleib_core::algebra::{PreLeibnizAlgebra, PreLeibnizRep};
use preleib_core::cochain::ColoredCochain;
use preleib_core::fixtures;

/// An algebra with its adjoint representation.
pub struct Workload {
    pub name: &'static str,
    pub algebra: PreLeibnizAlgebra,
    pub rep: PreLeibnizRep,
}

pub fn workloads() -> Vec<Workload> {
    [("p2", fixtures::p2()), ("semidirect", fixtures::semidirect_p2())]
        .into_iter()
        .map(|(name, algebra)| {
            let rep = PreLeibnizRep::adjoint(&algebra);
            Workload { name, algebra, rep }
        })
        .collect()
}

/// A dense colored cochain with small nonzero coefficients in every slot.
pub fn dense_cochain(arity: usize, dim: usize) -> ColoredCochain {
    let len = ColoredCochain::space_dim(arity, dim, dim);
    let coords = (0..len).map(|k| preleib_core::exactla::rat(k as i64 % 5 - 2)).collect();
    ColoredCochain::from_coords(arity, dim, dim, coords).expect("length matches the space")
}
