//! 7-point Gauss / 15-point Kronrod pair (QUADPACK `qk15` tables).

pub(crate) const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

pub(crate) const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Gauss weights for the odd-indexed Kronrod nodes (and the centre).
pub(crate) const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// One panel estimate.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Panel {
    pub a: f64,
    pub b: f64,
    pub value: f64,
    pub err: f64,
    /// ∫|f| estimate, used for the roundoff floor.
    pub abs_value: f64,
    /// The part of `err` that is pure roundoff floor.
    pub floor: f64,
}

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> (f64, f64) {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    let mut floor = 0.0;
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        floor = 50.0 * f64::EPSILON * res_abs;
        if floor > scaled {
            scaled = floor;
        }
    }
    (scaled, floor)
}

/// Apply the rule on [a, b]. Returns `Err(x)` with the offending abscissa if
/// the integrand produced NaN.
pub(crate) fn gk15<F>(f: &mut F, a: f64, b: f64) -> crate::Result<Panel>
where
    F: FnMut(f64) -> crate::Result<f64>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let abs_half = half.abs();

    let mut eval = |x: f64| -> crate::Result<f64> {
        let v = f(x)?;
        if v.is_nan() {
            return Err(crate::Error::NanIntegrand { at: x });
        }
        Ok(v)
    };

    let fc = eval(center)?;
    let mut res_g = fc * WG[3];
    let mut res_k = fc * WGK[7];
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];

    #[allow(clippy::needless_range_loop)]
    for j in 0..3 {
        let jtw = 2 * j + 1;
        let dx = half * XGK[jtw];
        let f1 = eval(center - dx)?;
        let f2 = eval(center + dx)?;
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        res_g += WG[j] * (f1 + f2);
        res_k += WGK[jtw] * (f1 + f2);
        res_abs += WGK[jtw] * (f1.abs() + f2.abs());
    }
    for j in 0..4 {
        let jtwm1 = 2 * j;
        let dx = half * XGK[jtwm1];
        let f1 = eval(center - dx)?;
        let f2 = eval(center + dx)?;
        fv1[jtwm1] = f1;
        fv2[jtwm1] = f2;
        res_k += WGK[jtwm1] * (f1 + f2);
        res_abs += WGK[jtwm1] * (f1.abs() + f2.abs());
    }

    let mean = res_k * 0.5;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }

    let value = res_k * half;
    res_abs *= abs_half;
    res_asc *= abs_half;
    let (err, floor) = rescale_error((res_k - res_g) * half, res_abs, res_asc);
    Ok(Panel {
        a,
        b,
        value,
        err,
        abs_value: res_abs,
        floor,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_two() {
        let k: f64 = WGK[7] + 2.0 * WGK[..7].iter().sum::<f64>();
        let g: f64 = WG[3] + 2.0 * WG[..3].iter().sum::<f64>();
        assert!((k - 2.0).abs() < 1e-15);
        assert!((g - 2.0).abs() < 1e-15);
    }

    #[test]
    fn polynomial_exactness() {
        // Kronrod part exact through degree 22
        for deg in [0, 1, 2, 7, 13, 20, 22] {
            let mut f = |x: f64| Ok(x.powi(deg));
            let p = gk15(&mut f, -1.0, 1.0).unwrap();
            let want = if deg % 2 == 0 { 2.0 / (deg as f64 + 1.0) } else { 0.0 };
            assert!((p.value - want).abs() < 1e-15, "degree {deg}: {}", p.value);
        }
        // Gauss part exact through degree 13: error estimate ~ roundoff
        let mut f = |x: f64| Ok(x.powi(12));
        let p = gk15(&mut f, -1.0, 1.0).unwrap();
        assert!(p.err < 1e-13);
    }
}
