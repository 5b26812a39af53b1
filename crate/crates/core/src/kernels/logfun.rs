//! Stable logs of the hyperbolic factors.

use std::f64::consts::LN_2;

/// `ln(x / sinh x)` for `x ≥ 0`, with the value 0 at `x = 0`.
pub(crate) fn ln_x_over_sinh(x: f64) -> f64 {
    let x = x.abs();
    if x < 1e-3 {
        let x2 = x * x;
        -x2 / 6.0 + x2 * x2 / 180.0 - x2 * x2 * x2 / 2835.0
    } else if x < 20.0 {
        (x / x.sinh()).ln()
    } else {
        x.ln() - x + LN_2 - (-(-2.0 * x).exp()).ln_1p()
    }
}

/// `x coth x − 1` for `x ≥ 0`, with the value 0 at `x = 0`.
pub(crate) fn x_coth_minus_one(x: f64) -> f64 {
    let x = x.abs();
    if x < 1e-3 {
        let x2 = x * x;
        x2 / 3.0 - x2 * x2 / 45.0 + 2.0 * x2 * x2 * x2 / 945.0
    } else {
        x / x.tanh() - 1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn branches_agree_at_the_switch_points() {
        let x = 1e-3f64;
        assert!((ln_x_over_sinh(x) - (x / x.sinh()).ln()).abs() < 1e-15);
        assert!(((x_coth_minus_one(x) - (x / x.tanh() - 1.0)) / x_coth_minus_one(x)).abs() < 1e-9);
        let x = 20.0f64;
        let direct = (x / x.sinh()).ln();
        assert!((ln_x_over_sinh(x) - direct).abs() < 1e-13 * direct.abs());
    }

    #[test]
    fn reference_values() {
        // mpmath
        assert!((ln_x_over_sinh(0.5) - (-0.041324854612918109)).abs() < 1e-14);
        assert!((ln_x_over_sinh(30.0) - (-25.905655437777899)).abs() < 1e-11);
        assert!((x_coth_minus_one(0.5) - 0.081976706869326424).abs() < 1e-14);
        assert_eq!(ln_x_over_sinh(0.0), 0.0);
        assert_eq!(x_coth_minus_one(0.0), 0.0);
        assert!(ln_x_over_sinh(800.0).is_finite());
    }
}
