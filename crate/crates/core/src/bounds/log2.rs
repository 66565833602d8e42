//! Base-2 logarithms of the closed-form bounds, generic over the float type.
//!
//! Arguments are plain reals: `n` vertices, `d` degree, `alpha` independence
//! number, `lambda` activity, `t` set size. No validation happens here.

use crate::scalar::{binary_entropy, sqrt_log_rate, RealScalar};

fn two<F: RealScalar>() -> F {
    F::one() + F::one()
}

fn half<F: RealScalar>() -> F {
    two::<F>().recip()
}

/// `alpha log2(1 + lambda n / alpha)`; zero when `alpha = 0`.
pub fn alekseev<F: RealScalar>(n: F, alpha: F, lambda: F) -> F {
    if alpha.is_zero() {
        return F::zero();
    }
    alpha * (lambda * n / alpha).ln_1p() / F::LN_2()
}

pub fn alon<F: RealScalar>(n: F, d: F, c: F) -> F {
    n * half() * (F::one() + c / d.powf(F::from(0.1).unwrap()))
}

pub fn sapozhenko_simple<F: RealScalar>(n: F, d: F, c: F) -> F {
    n * half() * (F::one() + c * sqrt_log_rate(d))
}

pub fn kahn<F: RealScalar>(n: F, d: F) -> F {
    n * half() * (F::one() + two::<F>() / d)
}

/// `log2(2^(d+1) - 1)`, stable for large `d`.
pub fn kdd_count<F: RealScalar>(d: F) -> F {
    let top = d + F::one();
    top + (-(-top).exp2()).ln_1p() / F::LN_2()
}

/// `log2(2(1 + lambda)^d - 1)`, stable for large `d`.
pub fn kdd_weighted_count<F: RealScalar>(d: F, lambda: F) -> F {
    let log_main = F::one() + d * lambda.ln_1p() / F::LN_2();
    log_main + (-(-log_main).exp2()).ln_1p() / F::LN_2()
}

pub fn conjecture<F: RealScalar>(n: F, d: F) -> F {
    n / (two::<F>() * d) * kdd_count(d)
}

pub fn kdd_weighted<F: RealScalar>(n: F, d: F, lambda: F) -> F {
    n / (two::<F>() * d) * kdd_weighted_count(d, lambda)
}

pub fn weighted_kahn<F: RealScalar>(n: F, d: F, lambda: F) -> F {
    n * half() * lambda.ln_1p() / F::LN_2() + n / d
}

pub fn theorem2<F: RealScalar>(n: F, d: F, c: F) -> F {
    n * half() * (F::one() + d.recip() + c / d * sqrt_log_rate(d))
}

pub fn theorem4<F: RealScalar>(n: F, d: F, lambda: F, c_lambda: F) -> F {
    n * half() * lambda.ln_1p() / F::LN_2() + n / (two::<F>() * d) * (F::one() + c_lambda * sqrt_log_rate(d))
}

/// Solves `(ln(1 + lambda) - lambda / (1 + lambda)) C / (2 ln 2) = c` for `C`.
pub fn c_lambda_from_c<F: RealScalar>(lambda: F, c: F) -> F {
    let gap = lambda.ln_1p() - lambda / (F::one() + lambda);
    two::<F>() * c * F::LN_2() / gap
}

/// Prefix-ordering bound when the first `alpha` vertices are independent.
pub fn independent_first<F: RealScalar>(n: F, d: F, alpha: F, lambda: F) -> F {
    n * half() * lambda.ln_1p() / F::LN_2() + (n - alpha) / d
}

/// Fixed-size bound `(n/2)(H(2t/n) + slack / d)`.
pub fn fixed_size<F: RealScalar>(n: F, d: F, t: F, slack: F) -> F {
    n * half() * (binary_entropy(density(n, t)) + slack / d)
}

pub fn improved_fixed_size<F: RealScalar>(n: F, d: F, t: F, c_alpha: F) -> F {
    n * half() * (binary_entropy(density(n, t)) + d.recip() + c_alpha / d * sqrt_log_rate(d))
}

/// `2t / n`, clamped to `[0, 1]`.
pub fn density<F: RealScalar>(n: F, t: F) -> F {
    if n.is_zero() {
        return F::zero();
    }
    (two::<F>() * t / n).min(F::one())
}

pub fn lemma3<F: RealScalar>(n: F, d: F, alpha: F, lambda: F, c: F) -> F {
    alekseev(n * half(), alpha, lambda) + c * n * sqrt_log_rate(d)
}

/// Relaxed cover-counting bound:
/// `(1 + lambda n / 2 alpha)^alpha (2d / (2d - phi))^n 2^(3 n log2(e phi) / phi)`.
pub fn cover_relaxed<F: RealScalar>(n: F, d: F, alpha: F, lambda: F, phi: F) -> F {
    let two_d = two::<F>() * d;
    alekseev(n * half(), alpha, lambda)
        + n * (two_d / (two_d - phi)).log2()
        + F::from(3).unwrap() * n * (F::E() * phi).log2() / phi
}

/// `((1/d) log2(2^(d+1) - 1), 1 + 1/d - 1 / ((2 ln 2) d 2^d))`.
pub fn kdd_exponent_expansion<F: RealScalar>(d: F) -> (F, F) {
    let exact = kdd_count(d) / d;
    let expansion = F::one() + d.recip() - (two::<F>() * F::LN_2() * d * d.exp2()).recip();
    (exact, expansion)
}
