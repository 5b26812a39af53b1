//! Classical identities: Gegenbauer, Bateman, Kummer, `₁F₀` collapse,
//! Legendre duplication and the sphere exponential integral.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::record::{inputs, Recorder};
use super::VerifyConfig;
use crate::error::domain;
use crate::quadrature::{try_integrate_adaptive, try_integrate_semiinfinite, Decay, QuadConfig};
use crate::specfun::{bessel_j_normalized, gamma, hyp2f1, hyp2f1_series, sphere_exp_integral, HYP2F1_U_MAX};
use crate::Result;

/// Largest `|u|` at which the plain series is used as an independent route.
const SERIES_LIMIT: f64 = 0.96;

fn stream(seed: u64, id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(id);
    rng
}

pub(super) fn run(rec: &mut Recorder, cfg: &VerifyConfig) {
    let q = &cfg.quad.identities;
    gegenbauer(rec, cfg, q);
    bateman(rec, cfg, q);
    kummer(rec, cfg, q);
    collapse(rec, cfg);
    duplication(rec, cfg);
    sphere(rec, cfg, q);
}

/// `∫_0^1 x^{p−1} (1−x)^{q−1} g(x) dx` for `p, q > 0`, with the endpoint
/// powers removed by `x = y^{1/p}` on `[0, ½]` and `1 − x = y^{1/q}` on
/// `[½, 1]`.
pub(crate) fn beta_weighted<G>(p: f64, q: f64, mut g: G, cfg: &QuadConfig) -> Result<f64>
where
    G: FnMut(f64) -> Result<f64>,
{
    if !(p > 0.0 && q > 0.0) {
        return Err(domain("beta_weighted", "exponents must be positive"));
    }
    let left = try_integrate_adaptive(
        |y| {
            let x = y.powf(1.0 / p);
            Ok((1.0 - x).powf(q - 1.0) * g(x)? / p)
        },
        0.0,
        0.5f64.powf(p),
        cfg,
    )?;
    let right = try_integrate_adaptive(
        |y| {
            let w = y.powf(1.0 / q);
            Ok((1.0 - w).powf(p - 1.0) * g(1.0 - w)? / q)
        },
        0.0,
        0.5f64.powf(q),
        cfg,
    )?;
    Ok(left.value + right.value)
}

/// `F(a,b;c;u)` from Euler's integral; needs `c > b > 0` and `u < 1`.
pub(crate) fn hyp2f1_euler(a: f64, b: f64, c: f64, u: f64, cfg: &QuadConfig) -> Result<f64> {
    if !(c > b && b > 0.0 && u < 1.0) {
        return Err(domain("hyp2f1_euler", "need c > b > 0 and u < 1"));
    }
    let integral = beta_weighted(b, c - b, |x| Ok((1.0 - u * x).powf(-a)), cfg)?;
    Ok(gamma(c)? / (gamma(b)? * gamma(c - b)?) * integral)
}

/// Plain series when `|u| ≤ SERIES_LIMIT`, Euler's integral otherwise.
fn hyp2f1_independent(a: f64, b: f64, c: f64, u: f64, cfg: &QuadConfig) -> Result<f64> {
    if u.abs() <= SERIES_LIMIT {
        Ok(hyp2f1_series(a, b, c, u)?.value)
    } else {
        hyp2f1_euler(a, b, c, u, cfg)
    }
}

/// `∫_0^∞ t^{μ−1} e^{−at} J_ν(bt) dt`. The `t^{μ+ν−1}` behaviour at the
/// origin is removed by `y = t^{μ+ν}` on `[0, 1]`.
pub(crate) fn gegenbauer_lhs(mu: f64, nu: f64, a: f64, b: f64, cfg: &QuadConfig) -> Result<f64> {
    let p = mu + nu;
    let scale = (0.5 * b).powf(nu);
    let head = try_integrate_adaptive(
        |y| {
            let t = y.powf(1.0 / p);
            Ok((-a * t).exp() * scale * bessel_j_normalized(nu, b * t)? / p)
        },
        0.0,
        1.0,
        cfg,
    )?;
    let tail = try_integrate_semiinfinite(
        |t| Ok(t.powf(mu - 1.0) * (-a * t).exp() * scale * t.powf(nu) * bessel_j_normalized(nu, b * t)?),
        1.0,
        1.0 / a,
        Decay::Exponential,
        cfg,
    )?;
    Ok(head.value + tail.value)
}

/// `2^{−ν} b^ν Γ(ν+μ) / (Γ(ν+1)(a²+b²)^{(ν+μ)/2}) · F((ν+μ)/2, (1−μ+ν)/2; ν+1; b²/(a²+b²))`.
pub(crate) fn gegenbauer_rhs(mu: f64, nu: f64, a: f64, b: f64) -> Result<f64> {
    let s = a * a + b * b;
    let pre = (0.5 * b).powf(nu) * gamma(nu + mu)? / (gamma(nu + 1.0)? * s.powf(0.5 * (nu + mu)));
    Ok(pre * hyp2f1(0.5 * (nu + mu), 0.5 * (1.0 - mu + nu), nu + 1.0, b * b / s)?)
}

fn gegenbauer(rec: &mut Recorder, cfg: &VerifyConfig, q: &QuadConfig) {
    let tol = &cfg.tolerances;
    let anchor = "identity:gegenbauer";
    rec.compare("gegenbauer-smoke-laplace", anchor, inputs(&[("mu", 1.0), ("nu", 0.0), ("a", 1.0), ("b", 1.0)]), tol.identities, || {
        Ok((gegenbauer_lhs(1.0, 0.0, 1.0, 1.0, q)?, gegenbauer_rhs(1.0, 0.0, 1.0, 1.0)?))
    });
    rec.note("Laplace transform of J_0 at 1 is 2^{-1/2}");
    rec.compare("gegenbauer-smoke-laplace-closed", anchor, inputs(&[("mu", 1.0), ("nu", 0.0), ("a", 1.0), ("b", 1.0)]), tol.identities, || {
        Ok((gegenbauer_rhs(1.0, 0.0, 1.0, 1.0)?, 0.5f64.sqrt()))
    });
    let (mu, a, b) = (1.7, 1.3, 1e-7);
    rec.compare("gegenbauer-smoke-small-b", anchor, inputs(&[("mu", mu), ("nu", 0.0), ("a", a), ("b", b)]), tol.identities, || {
        Ok((gegenbauer_rhs(mu, 0.0, a, b)?, gamma(mu)? / a.powf(mu)))
    });

    let mut rng = stream(cfg.seed, 1);
    let mut i = 0;
    while i < cfg.samples {
        let mu = rng.gen_range(0.5..3.0);
        let nu = rng.gen_range(-0.4..2.0);
        let a = rng.gen_range(0.5..3.0);
        let b = rng.gen_range(0.1..3.0);
        // keep the ₂F₁ argument inside the supported range
        if b * b / (a * a + b * b) > HYP2F1_U_MAX {
            continue;
        }
        let t = if nu < tol.gegenbauer_edge_nu { tol.gegenbauer_edge } else { tol.identities };
        rec.compare(format!("gegenbauer-{i:03}"), anchor, inputs(&[("mu", mu), ("nu", nu), ("a", a), ("b", b)]), t, || {
            Ok((gegenbauer_lhs(mu, nu, a, b, q)?, gegenbauer_rhs(mu, nu, a, b)?))
        });
        i += 1;
    }
}

fn bateman_sides(a: f64, b: f64, c: f64, gam: f64, delta: f64, q: &QuadConfig) -> Result<(f64, f64)> {
    let lhs = beta_weighted(c, gam - c, |y| hyp2f1(a, b, c, delta * y), q)?;
    let rhs = gamma(c)? * gamma(gam - c)? / gamma(gam)? * hyp2f1(a, b, gam, delta)?;
    Ok((lhs, rhs))
}

fn bateman(rec: &mut Recorder, cfg: &VerifyConfig, q: &QuadConfig) {
    let tol = cfg.tolerances.identities;
    let anchor = "identity:bateman";
    let (c, gam) = (0.7, 2.2);
    rec.compare("bateman-smoke-beta", anchor, inputs(&[("c", c), ("gamma", gam), ("delta", 0.0)]), tol, || {
        let lhs = beta_weighted(c, gam - c, |_| Ok(1.0), q)?;
        Ok((lhs, gamma(c)? * gamma(gam - c)? / gamma(gam)?))
    });
    let (a, c, gam, delta) = (1.0, 1.4, 2.9, -3.5);
    rec.compare("bateman-smoke-collapse", anchor, inputs(&[("a", a), ("b", c), ("c", c), ("gamma", gam), ("delta", delta)]), tol, || {
        let lhs = beta_weighted(c, gam - c, |y| Ok((1.0 - delta * y).powf(-a)), q)?;
        Ok((lhs, gamma(c)? * gamma(gam - c)? / gamma(gam)? * hyp2f1(a, c, gam, delta)?))
    });

    let mut rng = stream(cfg.seed, 2);
    for i in 0..cfg.samples {
        let a = rng.gen_range(0.1..3.0);
        let b = rng.gen_range(0.1..3.0);
        let c = rng.gen_range(0.3..3.0);
        let gam = c + rng.gen_range(0.3..3.0);
        let delta = rng.gen_range(-10.0..0.9);
        rec.compare(
            format!("bateman-{i:03}"),
            anchor,
            inputs(&[("a", a), ("b", b), ("c", c), ("gamma", gam), ("delta", delta)]),
            tol,
            || bateman_sides(a, b, c, gam, delta, q),
        );
    }
}

fn kummer_sides(a: f64, b: f64, c: f64, u: f64, q: &QuadConfig) -> Result<(f64, f64)> {
    let w = u / (u - 1.0);
    let lhs = hyp2f1_independent(a, b, c, u, q)?;
    let rhs = (1.0 - u).powf(-a) * hyp2f1_independent(a, c - b, c, w, q)?;
    Ok((lhs, rhs))
}

fn kummer(rec: &mut Recorder, cfg: &VerifyConfig, q: &QuadConfig) {
    let tol = cfg.tolerances.identities;
    let anchor = "identity:kummer";
    rec.compare("kummer-smoke-origin", anchor, inputs(&[("a", 0.8), ("b", 0.6), ("c", 1.9), ("u", 0.0)]), tol, || {
        kummer_sides(0.8, 0.6, 1.9, 0.0, q)
    });

    // The instantiation used for the energy: (α, k) = (1, 1), β = 2,
    // |z| = 1, |σ| = 0.5, y = 0.3.
    let (alpha, k, z, sigma, y) = (1.0, 1.0, 1.0, 0.5, 0.3);
    let beta = alpha + k;
    rec.compare(
        "kummer-energy-instance",
        "identity:kummer-energy",
        inputs(&[("alpha", alpha), ("k", k), ("z", z), ("sigma", sigma), ("y", y)]),
        tol,
        || {
            let n4 = z.powi(4) + 16.0 * sigma * sigma * y;
            let w = 16.0 * sigma * sigma * y / n4;
            let u = -16.0 * sigma * sigma * y / z.powi(4);
            let lhs = hyp2f1_series(0.5 * (beta - 1.0), 0.5 * (k - beta), 0.5 * k, w)?.value;
            // a = c here, so F((β−1)/2, β/2; k/2; u) collapses to (1−u)^{−β/2}
            let f = (1.0 - u).powf(-0.5 * beta);
            Ok((lhs, n4.powf(0.5 * (beta - 1.0)) / z.powf(2.0 * (beta - 1.0)) * f))
        },
    );

    let mut rng = stream(cfg.seed, 3);
    for i in 0..cfg.samples {
        let a = rng.gen_range(0.1..3.0);
        let b = rng.gen_range(0.1..3.0);
        let c = b + rng.gen_range(0.2..3.0);
        let u = rng.gen_range(-20.0..0.9);
        rec.compare(
            format!("kummer-{i:03}"),
            anchor,
            inputs(&[("a", a), ("b", b), ("c", c), ("u", u)]),
            tol,
            || kummer_sides(a, b, c, u, q),
        );
    }
}

fn collapse(rec: &mut Recorder, cfg: &VerifyConfig) {
    let tol = cfg.tolerances.identities;
    rec.compare("1f0-smoke", "identity:1f0-collapse", inputs(&[("a", 1.2), ("b", 0.8), ("u", -0.5)]), tol, || {
        Ok((hyp2f1(1.2, 0.8, 0.8, -0.5)?, 1.5f64.powf(-1.2)))
    });
    let mut rng = stream(cfg.seed, 4);
    for i in 0..cfg.samples {
        let a = rng.gen_range(0.0..5.0);
        let b = rng.gen_range(0.3..6.0);
        let u = rng.gen_range(-20.0..0.9);
        rec.compare(format!("1f0-{i:03}"), "identity:1f0-collapse", inputs(&[("a", a), ("b", b), ("u", u)]), tol, || {
            Ok((hyp2f1(a, b, b, u)?, (1.0 - u).powf(-a)))
        });
    }
}

fn duplication(rec: &mut Recorder, cfg: &VerifyConfig) {
    let tol = cfg.tolerances.identities;
    let mut rng = stream(cfg.seed, 5);
    for i in 0..cfg.samples {
        let x = rng.gen_range(0.1..40.0);
        rec.compare(format!("duplication-{i:03}"), "identity:duplication", inputs(&[("x", x)]), tol, || {
            let rhs = 2f64.powf(2.0 * x - 1.0) * gamma(x)? * gamma(x + 0.5)? / PI.sqrt();
            Ok((gamma(2.0 * x)?, rhs))
        });
    }
}

/// `∫_{S^{m−1}} e^{z⟨ξ,y⟩} dσ(y)` by quadrature over the polar angle.
fn sphere_quadrature(m: u32, z: f64, q: &QuadConfig) -> Result<f64> {
    match m {
        2 => {
            let r = try_integrate_adaptive(|th: f64| Ok((z * (th.cos() - 1.0)).exp()), 0.0, PI, q)?;
            Ok(2.0 * z.exp() * r.value)
        }
        3 => {
            let r = try_integrate_adaptive(|u: f64| Ok((z * (u - 1.0)).exp()), -1.0, 1.0, q)?;
            Ok(2.0 * PI * z.exp() * r.value)
        }
        _ => Err(domain("sphere_quadrature", "only m = 2, 3")),
    }
}

fn sphere(rec: &mut Recorder, cfg: &VerifyConfig, q: &QuadConfig) {
    let tol = cfg.tolerances.identities;
    let mut rng = stream(cfg.seed, 6);
    for i in 0..cfg.samples {
        let m = 2 + (i % 2) as u32;
        let z = rng.gen_range(0.05..20.0);
        rec.compare(
            format!("sphere-{i:03}"),
            "identity:sphere-integral",
            inputs(&[("m", m as f64), ("z", z)]),
            tol,
            || Ok((sphere_exp_integral(m, z)?, sphere_quadrature(m, z, q)?)),
        );
    }
}
