use mbposd_core::channel::{channel_llr, modulate, transmit, ChannelParams};
use mbposd_core::sim::{bi_awgn_capacity_dispersion, na_reference, q_function};

#[test]
fn noise_variance_matches_n0_over_two() {
    let params = ChannelParams::new(0.0, 42).unwrap();
    let n = 1_000_000usize;
    let zeros = vec![0.0; n];
    let w = transmit(&zeros, &params, 0);
    let mean = w.iter().sum::<f64>() / n as f64;
    let var = w.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
    let target = params.n0() / 2.0;
    assert!((target - 1.0).abs() < 1e-12);
    let sd_of_var = target * (2.0 / (n - 1) as f64).sqrt();
    assert!((var - target).abs() <= 3.0 * sd_of_var, "sample variance {var}");
    assert!(mean.abs() <= 3.0 * (target / n as f64).sqrt(), "sample mean {mean}");
}

#[test]
fn uncoded_ber_matches_q_function() {
    for snr_db in [0.0, 2.0, 4.0] {
        let params = ChannelParams::new(snr_db, 7).unwrap();
        let n = 100_000usize;
        // Alternate 0/1 so both symbol polarities are exercised.
        let bits: Vec<u8> = (0..n).map(|i| (i % 2) as u8).collect();
        let rx = transmit(&modulate(&bits), &params, 3);
        let errors = rx.iter().zip(&bits).filter(|(r, &b)| ((**r < 0.0) as u8) != b).count();
        let p = q_function((2.0 / params.n0()).sqrt());
        let ber = errors as f64 / n as f64;
        let sigma = (p * (1.0 - p) / n as f64).sqrt();
        assert!((ber - p).abs() <= 3.0 * sigma, "{snr_db} dB: BER {ber} vs {p}");
    }
}

#[test]
fn llr_is_odd_and_scaled() {
    let params = ChannelParams::new(1.3, 1).unwrap();
    let r: Vec<f64> = (0..200).map(|i| (i as f64 - 100.0) * 0.037).collect();
    let neg: Vec<f64> = r.iter().map(|x| -x).collect();
    let a = channel_llr(&r, &params);
    let b = channel_llr(&neg, &params);
    for ((x, y), ri) in a.iter().zip(b.iter()).zip(&r) {
        assert_eq!(*x, -*y);
        let exact = 4.0 * ri / params.n0();
        if exact.abs() < 30.0 {
            assert!((x - exact).abs() <= 1e-12 * exact.abs().max(1.0));
        } else {
            assert_eq!(x.abs(), 30.0);
        }
    }
}

#[test]
fn streams_depend_only_on_seed_and_trial() {
    let p = ChannelParams::new(2.0, 99).unwrap();
    let s = modulate(&[0, 1, 1, 0, 1]);
    assert_eq!(transmit(&s, &p, 5), transmit(&s, &p, 5));
    assert_ne!(transmit(&s, &p, 5), transmit(&s, &p, 6));
    // Same trial at a different SNR uses the same underlying normals.
    let q = ChannelParams::new(4.0, 99).unwrap();
    let wp: Vec<f64> = transmit(&s, &p, 5).iter().zip(&s).map(|(r, x)| (r - x) / p.noise_std()).collect();
    let wq: Vec<f64> = transmit(&s, &q, 5).iter().zip(&s).map(|(r, x)| (r - x) / q.noise_std()).collect();
    for (a, b) in wp.iter().zip(&wq) {
        assert!((a - b).abs() < 1e-12);
    }
}

/// Gauss–Hermite nodes and weights for ∫ e^{-x²} f(x) dx, by Newton
/// iteration on the orthonormal Hermite recurrence.
fn gauss_hermite(n: usize) -> Vec<(f64, f64)> {
    let pim4 = std::f64::consts::PI.powf(-0.25);
    let mut out = vec![(0.0, 0.0); n];
    let m = n.div_ceil(2);
    let mut z = 0.0f64;
    for i in 0..m {
        z = match i {
            0 => (2.0 * n as f64 + 1.0).sqrt() - 1.85575 * (2.0 * n as f64 + 1.0).powf(-0.16667),
            1 => z - 1.14 * (n as f64).powf(0.426) / z,
            2 => 1.86 * z - 0.86 * out[0].0,
            3 => 1.91 * z - 0.91 * out[1].0,
            _ => 2.0 * z - out[i - 2].0,
        };
        let mut pp = 0.0;
        for _ in 0..100 {
            let mut p1 = pim4;
            let mut p2 = 0.0;
            for j in 0..n {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64;
                p1 = z * (2.0 / (jf + 1.0)).sqrt() * p2 - (jf / (jf + 1.0)).sqrt() * p3;
            }
            pp = (2.0 * n as f64).sqrt() * p2;
            let dz = p1 / pp;
            z -= dz;
            if dz.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / (pp * pp);
        out[i] = (z, w);
        out[n - 1 - i] = (-z, w);
    }
    out
}

/// Capacity and dispersion by Gauss–Hermite on the N(2s, 4s) LLR law.
fn capacity_dispersion_gh(s: f64) -> (f64, f64) {
    let nodes = gauss_hermite(100);
    let (mu, sd) = (2.0 * s, 2.0 * s.sqrt());
    let dens = |l: f64| 1.0 - (1.0 + (-l).exp()).log2();
    let norm = std::f64::consts::PI.sqrt();
    let c: f64 = nodes.iter().map(|&(x, w)| w * dens(mu + sd * std::f64::consts::SQRT_2 * x)).sum::<f64>() / norm;
    let v: f64 = nodes
        .iter()
        .map(|&(x, w)| w * (dens(mu + sd * std::f64::consts::SQRT_2 * x) - c).powi(2))
        .sum::<f64>()
        / norm;
    (c, v)
}

#[test]
fn gauss_hermite_rule_is_exact_on_polynomials() {
    let nodes = gauss_hermite(100);
    let norm = std::f64::consts::PI.sqrt();
    let m0: f64 = nodes.iter().map(|(_, w)| w).sum();
    let m2: f64 = nodes.iter().map(|(x, w)| w * x * x).sum();
    assert!((m0 / norm - 1.0).abs() < 1e-12);
    assert!((m2 / norm - 0.5).abs() < 1e-12);
}

#[test]
fn normal_approximation_dual_quadrature() {
    for snr_db in [-2.0, 0.0, 1.0, 2.0, 3.0, 4.0] {
        let s = 10f64.powf(snr_db / 10.0);
        let (c1, v1) = bi_awgn_capacity_dispersion(s);
        let (c2, v2) = capacity_dispersion_gh(s);
        assert!((c1 - c2).abs() < 1e-6, "{snr_db} dB: C {c1} vs {c2}");
        assert!((v1 - v2).abs() < 1e-6, "{snr_db} dB: V {v1} vs {v2}");
        let n = 128.0f64;
        let eps = q_function((c2 - 0.5 + n.log2() / (2.0 * n)) * (n / v2).sqrt());
        assert!((na_reference(128, 64, snr_db) - eps).abs() < 1e-6);
    }
}
