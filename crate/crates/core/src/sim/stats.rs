use libm::erfc;

/// Gaussian tail `Q(x) = P(Z > x)`.
pub fn q_function(x: f64) -> f64 {
    0.5 * erfc(x / std::f64::consts::SQRT_2)
}

/// Wilson score interval for `k` successes in `n` trials. `(0, 1)` when
/// `n = 0`.
pub fn wilson_interval(k: u64, n: u64, z: f64) -> (f64, f64) {
    if n == 0 {
        return (0.0, 1.0);
    }
    let nf = n as f64;
    let p = k as f64 / nf;
    let z2 = z * z;
    let denom = 1.0 + z2 / nf;
    let center = (p + z2 / (2.0 * nf)) / denom;
    let half = z / denom * (p * (1.0 - p) / nf + z2 / (4.0 * nf * nf)).sqrt();
    ((center - half).max(0.0), (center + half).min(1.0))
}

/// `1 − log2(1 + e^{−ℓ})`, evaluated without overflow.
fn info_density(l: f64) -> f64 {
    let softplus = if l > 0.0 { (-l).exp().ln_1p() } else { -l + l.exp().ln_1p() };
    1.0 - softplus / std::f64::consts::LN_2
}

/// Capacity C and dispersion V (bits, bits²) of the BPSK-input AWGN channel
/// at linear SNR `s = 1/σ²`. The channel LLR is N(2s, 4s); both moments
/// come from composite Simpson quadrature over μ ± 15σ.
pub fn bi_awgn_capacity_dispersion(snr_linear: f64) -> (f64, f64) {
    const INTERVALS: usize = 6000;
    let mu = 2.0 * snr_linear;
    let sd = 2.0 * snr_linear.sqrt();
    let (a, b) = (mu - 15.0 * sd, mu + 15.0 * sd);
    let h = (b - a) / INTERVALS as f64;
    let simpson = |f: &dyn Fn(f64) -> f64| {
        let mut acc = f(a) + f(b);
        for j in 1..INTERVALS {
            acc += if j % 2 == 1 { 4.0 } else { 2.0 } * f(a + j as f64 * h);
        }
        acc * h / 3.0
    };
    let pdf = |l: f64| {
        let z = (l - mu) / sd;
        (-0.5 * z * z).exp() / (sd * (2.0 * std::f64::consts::PI).sqrt())
    };
    let c = simpson(&|l| info_density(l) * pdf(l));
    let v = simpson(&|l| (info_density(l) - c).powi(2) * pdf(l));
    (c, v.max(0.0))
}

/// Normal approximation to the best achievable block error rate of an
/// (n, k) code on the BPSK AWGN channel at `snr_db` (same SNR convention as
/// [`crate::channel::ChannelParams`]):
/// `ε = Q((C − R + log2(n)/(2n)) · sqrt(n/V))`.
pub fn na_reference(n: usize, k: usize, snr_db: f64) -> f64 {
    assert!(0 < k && k < n, "need 0 < k < n");
    let s = 10f64.powf(snr_db.min(crate::channel::MAX_SNR_DB) / 10.0);
    let (c, v) = bi_awgn_capacity_dispersion(s);
    let nf = n as f64;
    let r = k as f64 / nf;
    let margin = c - r + nf.log2() / (2.0 * nf);
    if v <= 0.0 {
        return if margin > 0.0 { 0.0 } else { 1.0 };
    }
    q_function(margin * (nf / v).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_values() {
        assert!((q_function(0.0) - 0.5).abs() < 1e-15);
        let q1 = q_function(1.0);
        assert!((q1 - 0.15865525393145707).abs() < 1e-12, "{q1:e}");
        assert!((q_function(-1.0) + q_function(1.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn wilson_known_values() {
        let (lo, hi) = wilson_interval(0, 10, 1.96);
        assert_eq!(lo, 0.0);
        assert!((hi - 0.2775401687666165).abs() < 1e-12);
        let (lo, hi) = wilson_interval(50, 100, 1.96);
        assert!((lo - 0.40382982859014716).abs() < 1e-12 && (hi - 0.5961701714098528).abs() < 1e-12);
        assert_eq!(wilson_interval(0, 0, 1.96), (0.0, 1.0));
    }

    #[test]
    fn capacity_limits() {
        let (c, v) = bi_awgn_capacity_dispersion(1e-6);
        assert!(c.abs() < 1e-5 && v < 1e-4);
        let (c, v) = bi_awgn_capacity_dispersion(100.0);
        assert!((c - 1.0).abs() < 1e-12 && v < 1e-10);
        // Known BI-AWGN capacity at SNR 0 dB (σ = 1): 0.4859 bits.
        let (c, _) = bi_awgn_capacity_dispersion(1.0);
        assert!((c - 0.4859).abs() < 1e-3, "{c}");
    }

    #[test]
    fn na_monotone_and_limits() {
        let grid: Vec<f64> = (0..=16).map(|i| i as f64 * 0.25).collect();
        let e: Vec<f64> = grid.iter().map(|&s| na_reference(128, 64, s)).collect();
        assert!(e.windows(2).all(|w| w[1] < w[0]), "{e:?}");
        assert_eq!(na_reference(128, 64, f64::INFINITY), 0.0);
        assert!(na_reference(128, 64, -10.0) > 0.99);
    }
}
