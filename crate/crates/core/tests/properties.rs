use std::f64::consts::FRAC_PI_2;

use faddeeva::bench::{emit, error_sweep, Format, GridSpec, Precision, SweepRecord};
use faddeeva::bounds::abs_bound;
use faddeeva::reference::{cf_convergent, cf_top_down};
use faddeeva::xprec::{w_oracle, XReal};
use faddeeva::{
    erf_c, erfc_c, frac_part, select_branch, w_plane, w_quadrant1, BranchTag, Complex64, EvalParams,
};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use proptest::prelude::*;

fn rat(x: f64) -> BigRational {
    BigRational::from_float(x).unwrap()
}

fn polar() -> impl Strategy<Value = Complex64> {
    (-6.0f64..6.0, 0.0f64..=FRAC_PI_2).prop_map(|(p, t)| {
        let z = Complex64::from_polar(10f64.powf(p), t);
        Complex64::new(z.re.max(0.0), z.im.max(0.0))
    })
}

fn plane(r: f64) -> impl Strategy<Value = Complex64> {
    (-r..r, -r..r).prop_map(|(x, y)| Complex64::new(x, y))
}

fn node_distance(z: Complex64, p: &EvalParams, b: BranchTag) -> f64 {
    let dist = |s: f64| (z - s).norm().min((z + s).norm());
    match b {
        BranchTag::M | BranchTag::MM => (0..=p.n())
            .map(|k| dist(p.t(k)))
            .fold(f64::INFINITY, f64::min),
        BranchTag::MT => (0..=p.n())
            .map(|k| dist(p.tau(k)))
            .fold(f64::INFINITY, f64::min),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn conjugate_symmetry_is_exact(z in plane(30.0), n in 0u32..=11) {
        let p = EvalParams::new(n).unwrap();
        let a = w_plane(Complex64::new(-z.re, z.im), &p).unwrap();
        let b = w_plane(z, &p).unwrap().conj();
        prop_assert!(a.re == b.re && a.im == b.im);
        let c = w_plane(z.conj(), &p).unwrap();
        let d = w_plane(Complex64::new(-z.re, -z.im), &p).unwrap().conj();
        prop_assert!(c.re == d.re && c.im == d.im);
    }

    #[test]
    fn reflection_identity(z in plane(4.0)) {
        let p = EvalParams::new(11).unwrap();
        let s = w_plane(z, &p).unwrap() + w_plane(-z, &p).unwrap();
        let e = 2.0 * (-z * z).exp();
        prop_assert!((s - e).norm() <= 1e-14 * (1.0 + e.norm()));
    }

    #[test]
    fn branch_keeps_nodes_away(z in polar(), n in 0u32..=11) {
        let p = EvalParams::new(n).unwrap();
        let b = select_branch(z, &p);
        prop_assert!(node_distance(z, &p, b) >= 0.25 * p.h() * (1.0 - 1e-12));
    }

    #[test]
    fn within_theorem_bound(z in polar(), n in 0u32..=11) {
        let p = EvalParams::new(n).unwrap();
        let err = (w_quadrant1(z, &p) - w_oracle(z).unwrap().to_c64()).norm();
        prop_assert!(err <= abs_bound(n) + 4e-15, "z = {}, err {:e}", z, err);
    }

    #[test]
    fn erf_complements(z in plane(3.0)) {
        let p = EvalParams::new(11).unwrap();
        let s = erf_c(z, &p).unwrap() + erfc_c(z, &p).unwrap();
        prop_assert!((s - 1.0).norm() <= 1e-13);
    }

    #[test]
    fn frac_part_range(t in -1e12f64..1e12) {
        let f = frac_part(t).unwrap();
        prop_assert!((0.0..1.0).contains(&f));
    }

    #[test]
    fn dd_arithmetic_against_rationals(a in -1e10f64..1e10, b in -1e10f64..1e10, c in 1e-3f64..1e3) {
        let x = XReal::from_f64(a) + XReal::from_f64(b).mul_f64(1.0 / 3.0);
        let y = XReal::from_f64(c).sqrt();
        let exact = |v: XReal| rat(v.hi()) + rat(v.lo());
        let prod = exact(x * y);
        let want = exact(x) * exact(y);
        if want != rat(0.0) {
            let rel = ((prod - &want).abs() / want.abs()).to_f64().unwrap();
            prop_assert!(rel < 1e-31);
        }
        let sum = exact(x + y);
        let want = exact(x) + exact(y);
        let scale = exact(x).abs() + exact(y).abs();
        let rel = ((sum - want).abs() / scale).to_f64().unwrap();
        prop_assert!(rel < 1e-31);
    }

    #[test]
    fn cf_recurrences_agree(r in 8.0f64..100.0, t in 0.0f64..=FRAC_PI_2, n in 1u32..=20) {
        let z = Complex64::from_polar(r, t);
        let a = cf_convergent(z, n).unwrap();
        let b = cf_top_down(z, n).unwrap();
        prop_assert!((a - b).norm() <= 8.0 * f64::EPSILON * a.norm());
    }

    #[test]
    fn grid_counts(p_lo in -8i32..0, p_hi in 0i32..8, steps in 1u32..20, theta in 2usize..50, stride in 1usize..20) {
        let step = 1.0 / f64::from(steps);
        let g = GridSpec::polar(f64::from(p_lo), f64::from(p_hi), step, theta).unwrap().with_stride(stride).unwrap();
        let outer = ((p_hi - p_lo) as u32 * steps + 1) as usize;
        prop_assert_eq!(g.full_len(), outer * theta);
        prop_assert_eq!(g.len(), (outer * theta).div_ceil(stride));
        prop_assert_eq!(g.iter().count(), g.len());
        prop_assert!(g.iter().all(|z| z.re >= 0.0 && z.im >= 0.0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn emit_is_deterministic(v in prop::collection::vec((0u32..20, any::<f64>(), any::<f64>()), 0..8)) {
        let records: Vec<SweepRecord> = v
            .iter()
            .map(|&(n, a, b)| SweepRecord {
                n,
                max_abs_err: a,
                max_rel_err: b,
                bound_abs: abs_bound(n),
                bound_rel: b,
                argmax_abs: Complex64::new(a, b),
                argmax_rel: Complex64::new(b, a),
                excluded: 0,
                rel_excluded: 0,
            })
            .collect();
        let dir = tempfile::tempdir().unwrap();
        for (fmt, name) in [(Format::Csv, "r.csv"), (Format::Json, "r.json")] {
            let path = dir.path().join(name);
            emit(&records, fmt, &path).unwrap();
            let first = std::fs::read(&path).unwrap();
            emit(&records, fmt, &path).unwrap();
            prop_assert_eq!(&first, &std::fs::read(&path).unwrap());
            if fmt == Format::Csv {
                let text = String::from_utf8(first).unwrap();
                prop_assert_eq!(text.lines().count(), records.len() + 1);
                for (line, r) in text.lines().skip(1).zip(&records) {
                    let cols: Vec<&str> = line.split(',').collect();
                    let back: f64 = cols[1].parse().unwrap();
                    prop_assert!(back == r.max_abs_err || (back.is_nan() && r.max_abs_err.is_nan()));
                }
            }
        }
    }

    #[test]
    fn sweep_records_are_sane(lo in -3i32..0, n in 0u32..=11) {
        let g = GridSpec::polar(f64::from(lo), 1.0, 0.5, 7).unwrap();
        let r = error_sweep(&[n], &g, Precision::Binary64).unwrap();
        prop_assert!(r[0].max_abs_err >= 0.0);
        prop_assert!(g.iter().any(|z| z == r[0].argmax_abs));
    }
}
