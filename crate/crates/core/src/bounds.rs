//! Closed-form guarantees of the approximation algorithms.

use num_traits::Float;

fn lit<F: Float>(x: f64) -> F {
    F::from(x).expect("representable constant")
}

pub fn log_three_halves<F: Float>(x: F) -> F {
    x.ln() / lit::<F>(1.5).ln()
}

/// `φ − t(log_{3/2}(φ/t) + 1)`, the Algorithm T guarantee. `None` when
/// `φ < t`, where the expression is not a valid bound.
pub fn treewidth_bound<F: Float>(phi: F, t: F) -> Option<F> {
    if t <= F::zero() || phi < t {
        return None;
    }
    Some(phi - t * (log_three_halves(phi / t) + F::one()))
}

/// `opt / max(d, 1) − 1`.
pub fn degeneracy_bound<F: Float>(opt: F, d: F) -> F {
    opt / d.max(F::one()) - F::one()
}

/// `opt / (1 + ε)`.
pub fn scheme_bound<F: Float>(opt: F, eps: F) -> F {
    opt / (F::one() + eps)
}

/// `(ε'/(1+ε'))·φ − t(log_{3/2}(φ/t) + 1)`; non-negative exactly when the
/// separator branch of the layered scheme is good enough.
pub fn layered_margin<F: Float>(phi: F, t: F, eps_prime: F) -> Option<F> {
    let tw = treewidth_bound(phi, t)?;
    Some(tw - phi / (F::one() + eps_prime))
}

/// `2⌈(1+ε)/(ε−ε')⌉ − 1`.
pub fn layer_count_k<F: Float>(eps: F, eps_prime: F) -> usize {
    let q = ((F::one() + eps) / (eps - eps_prime)).ceil();
    2 * q.to_usize().expect("finite layer count") - 1
}

/// `2.01·√(Δ−1)/Δ`.
pub fn epsilon_delta<F: Float>(delta: F) -> F {
    lit::<F>(2.01) * (delta - F::one()).sqrt() / delta
}
