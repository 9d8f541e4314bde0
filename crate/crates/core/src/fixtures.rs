//! Small named structures used by tests, benches and the CLI corpus.

use crate::algebra::{semidirect, Bilinear, LeibnizAlgebra, PreLeibnizAlgebra, PreLeibnizRep};
use crate::exactla::rat;

/// Dimension 2: `◁ = 0`, `e₁ ▷ e₁ = e₂`.
pub fn p2() -> PreLeibnizAlgebra {
    let mut right = Bilinear::zero(2, 2, 2);
    right.set(0, 0, 1, rat(1));
    PreLeibnizAlgebra::from_products(Bilinear::zero(2, 2, 2), right).expect("square")
}

/// Dimension 2: `[e₁, e₁] = e₂`.
pub fn leib2() -> LeibnizAlgebra {
    let mut t = Bilinear::zero(2, 2, 2);
    t.set(0, 0, 1, rat(1));
    LeibnizAlgebra::from_bilinear(t).expect("square")
}

/// `P2 ⋉ P2` through the adjoint representation, dimension 4.
pub fn semidirect_p2() -> PreLeibnizAlgebra {
    let p = p2();
    semidirect(&p, &PreLeibnizRep::adjoint(&p)).expect("adjoint dimensions match")
}
