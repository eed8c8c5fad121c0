//! Acceptance suite. Prints one PASS/FAIL line per criterion and fails if any
//! criterion fails.
//!
//! Run with `cargo test --release -p faddeeva --test acceptance`.

use std::f64::consts::PI;

use faddeeva::bench::{
    accuracy_table, emit, error_sweep, error_sweep_serial, parse_methods, timing_run, Format,
    GridSpec, Method, Precision, SweepRecord,
};
use faddeeva::bounds::{abs_bound, constants, rel_bound};
use faddeeva::xprec::quad::w_by_quadrature;
use faddeeva::xprec::{w_oracle, w_xprec, XParams};
use faddeeva::{
    select_branch, w_mid_sum, w_mod_mid, w_mod_trap, w_plane, w_quadrant1, BranchTag, Complex64,
    EvalParams,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Writes to the process stdout directly, so the lines show up without `--nocapture`.
macro_rules! say {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

const FLOOR_D: f64 = 4e-15;
const FLOOR_X: f64 = 1e-26;

struct Report {
    failed: Vec<u32>,
}

impl Report {
    fn record(&mut self, id: u32, title: &str, ok: bool, detail: String) {
        say!(
            "{} [{id}] {title}: {detail}",
            if ok { "PASS" } else { "FAIL" }
        );
        if !ok {
            self.failed.push(id);
        }
    }
}

fn oracle_certification(r: &mut Report) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let p19 = XParams::new(19).unwrap();
    let (mut worst_quad, mut worst_19) = (0.0f64, 0.0f64);
    for _ in 0..100 {
        let m = 10f64.powf(rng.gen_range(-3.0..2.0));
        let t = rng.gen_range(1e-6..PI - 1e-6);
        let z = Complex64::from_polar(m, t);
        let o = w_oracle(z).unwrap();
        let q = w_by_quadrature(z, 1e-30).unwrap();
        worst_quad = worst_quad.max(((o - q).norm() / q.norm()).to_f64());
        worst_19 = worst_19.max((o - w_xprec(z, &p19)).norm().to_f64());
    }
    let ok = worst_quad <= 1e-25 && worst_19 <= 8e-27;
    r.record(
        7,
        "oracle certification",
        ok,
        format!("quadrature max rel {worst_quad:.2e} (<= 1e-25), N=19 max abs {worst_19:.2e} (<= 8e-27)"),
    );
}

fn double_precision_accuracy(r: &mut Report, d: &[SweepRecord]) {
    let rec = &d[11];
    let ok = rec.n == 11 && rec.max_abs_err < 2e-15 && rec.max_rel_err < 2e-15 && rec.excluded == 0;
    r.record(
        1,
        "N=11 accuracy on 1,602,801 polar points",
        ok,
        format!(
            "max abs {:.3e} at {}, max rel {:.3e} at {} (< 2e-15)",
            rec.max_abs_err, rec.argmax_abs, rec.max_rel_err, rec.argmax_rel
        ),
    );
}

fn bound_suite(r: &mut Report, d: &[SweepRecord], x: &[SweepRecord]) {
    let mut ok = true;
    let mut worst = 0.0f64;
    for (rec, floor) in d
        .iter()
        .map(|s| (s, FLOOR_D))
        .chain(x.iter().map(|s| (s, FLOOR_X)))
    {
        let good =
            rec.max_abs_err <= rec.bound_abs + floor && rec.max_rel_err <= rec.bound_rel + floor;
        if !good {
            say!(
                "  N={} abs {:e} > {:e} or rel {:e} > {:e}",
                rec.n,
                rec.max_abs_err,
                rec.bound_abs,
                rec.max_rel_err,
                rec.bound_rel
            );
        }
        ok &= good;
        worst = worst.max(rec.max_abs_err / (rec.bound_abs + floor));
    }
    for rec in d.iter().chain(x) {
        say!(
            "  N={:2} abs {:.3e} <= {:.3e}   rel {:.3e} <= {:.3e}",
            rec.n,
            rec.max_abs_err,
            rec.bound_abs,
            rec.max_rel_err,
            rec.bound_rel
        );
    }
    r.record(
        2,
        "error bounds for N=0..11 (binary64) and N=12..19 (double-double, 1-in-16)",
        ok,
        format!("largest error/(bound + floor) {worst:.3}"),
    );
}

fn slope(r: &mut Report, d: &[SweepRecord], x: &[SweepRecord]) {
    let pts: Vec<(f64, f64)> = d
        .iter()
        .filter(|s| s.max_abs_err >= 1e-13)
        .map(|s| (f64::from(s.n), s.max_abs_err.log10()))
        .collect();
    let fit = |pts: &[(f64, f64)]| {
        let n = pts.len() as f64;
        let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
        let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
        let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
        sxy / sxx
    };
    let s = fit(&pts);
    let target = -PI / std::f64::consts::LN_10;
    let ok = pts.len() >= 3 && (s / target - 1.0).abs() <= 0.05;
    let floor: Vec<String> = d
        .iter()
        .filter(|s| s.max_abs_err < 1e-13)
        .map(|s| format!("{:.2e}", s.max_abs_err))
        .collect();
    let xp: Vec<(f64, f64)> = x
        .iter()
        .map(|s| (f64::from(s.n), s.max_abs_err.log10()))
        .collect();
    r.record(
        3,
        "decay rate of the maximum absolute error",
        ok,
        format!(
            "slope {s:.4} per N over N={}..{} (target {target:.4} +-5%); floor {}; double-double N=12..19 slope {:.4}",
            pts[0].0,
            pts[pts.len() - 1].0,
            floor.join(" "),
            fit(&xp)
        ),
    );
}

fn constants_check(r: &mut Report) {
    let k = constants();
    let sig4 = |v: f64, want: f64| format!("{v:.3e}") == format!("{want:.3e}");
    let b_abs = abs_bound(20);
    let b_rel = rel_bound(20);
    let ok = sig4(k.c_a, 4.934)
        && sig4(k.c_r, 60.77)
        && sig4(k.c_star, 1.0234)
        && sig4(k.big_c1, 0.6692)
        && sig4(k.big_c2, 3.971)
        && (3.3e-28..=3.5e-28).contains(&b_abs)
        && (9.2e-27..=9.4e-27).contains(&b_rel);
    r.record(
        4,
        "bound constants",
        ok,
        format!(
            "c_a {:.5} c_r {:.4} c* {:.5} C1 {:.5} C2 {:.5}; abs_bound(20) {b_abs:.3e}, rel_bound(20) {b_rel:.3e}",
            k.c_a, k.c_r, k.c_star, k.big_c1, k.big_c2
        ),
    );
}

fn accuracy_rows(r: &mut Report, grid: &GridSpec) {
    let methods = parse_methods("trap(11),weideman(40),zaghloul(1/2,38),cf(9)").unwrap();
    let rows = accuracy_table(&methods, grid).unwrap();
    for row in &rows {
        say!(
            "  {:18} abs {:.3e} rel {:.3e} over {} points",
            row.method,
            row.max_abs,
            row.max_rel,
            row.points
        );
    }
    let ok = rows[0].max_abs <= 2.4e-15 && rows[1].max_rel <= 3e-15 && rows[2].max_rel <= 5e-13;
    r.record(
        5,
        "accuracy table",
        ok,
        format!(
            "trap(11) abs {:.3e} (<= 2.4e-15), weideman(40) rel {:.3e} (<= 3e-15), zaghloul(1/2,38) rel {:.3e} (<= 5e-13)",
            rows[0].max_abs, rows[1].max_rel, rows[2].max_rel
        ),
    );
    let sub = grid.with_stride(64).unwrap();
    for spec in &methods {
        let m = Method::prepare(*spec).unwrap();
        let t = timing_run(&m, &sub, 5).unwrap();
        say!(
            "  timing {:18} {:.3e} s +- {:.1e} s for {} points (informational)",
            t.method,
            t.mean_seconds,
            t.sd_seconds,
            t.points
        );
    }
}

/// Points on the switching lines of the branch rule, paired with the rules on
/// either side.
fn boundary_points(p: &EvalParams, count: usize) -> Vec<(Complex64, BranchTag, BranchTag)> {
    let (h, a) = (p.h(), p.pi_over_h());
    let per = count / 4;
    let mut out = Vec::with_capacity(count);
    for i in 0..per {
        let s = (i as f64 + 0.5) / per as f64;
        // y = x above pi/h: M against MM
        let y = a + 25.0 * s;
        out.push((Complex64::new(y, y), BranchTag::M, BranchTag::MM));
        // y = pi/h left of the diagonal: M against MM
        out.push((Complex64::new(a * s, a), BranchTag::M, BranchTag::MM));
        // x = (k + 1/4) h or (k + 3/4) h below the diagonal: MT against MM
        let k = (i % 12) as f64;
        let x = (k + if i % 2 == 0 { 0.25 } else { 0.75 }) * h;
        out.push((
            Complex64::new(x, x.min(a) * s),
            BranchTag::MT,
            BranchTag::MM,
        ));
        // y = x below pi/h with frac(x/h) in [1/4, 3/4]: MT against MM
        let x = (k + 0.25 + 0.5 * s) * h;
        if x < a {
            out.push((Complex64::new(x, x), BranchTag::MT, BranchTag::MM));
        } else {
            let x = (0.25 + 0.5 * s) * h;
            out.push((Complex64::new(x, x), BranchTag::MT, BranchTag::MM));
        }
    }
    out
}

fn rule(tag: BranchTag, z: Complex64, p: &EvalParams) -> Complex64 {
    match tag {
        BranchTag::M => w_mid_sum(z, p),
        BranchTag::MM => w_mod_mid(z, p),
        BranchTag::MT => w_mod_trap(z, p),
    }
    .unwrap()
}

fn identities(r: &mut Report, grid: &GridSpec) {
    let mut notes = Vec::new();
    let mut ok = true;

    let mut origin = true;
    for n in 0..=11 {
        let p = EvalParams::new(n).unwrap();
        origin &= w_quadrant1(Complex64::new(0.0, 0.0), &p) == Complex64::new(1.0, 0.0);
    }
    ok &= origin;
    notes.push(format!(
        "w(0)=1 {}",
        if origin { "exact" } else { "NOT exact" }
    ));

    let mut real_ratio = 0.0f64;
    for n in 0..=11 {
        let p = EvalParams::new(n).unwrap();
        for i in 0..=3000 {
            let x = f64::from(i) / 100.0;
            let e = (w_quadrant1(Complex64::new(x, 0.0), &p).re - (-x * x).exp()).abs();
            real_ratio = real_ratio.max(e / abs_bound(n));
        }
    }
    ok &= real_ratio <= 1.0;
    notes.push(format!("real axis error/bound {real_ratio:.3}"));

    let mut conj = true;
    for z in grid.iter() {
        for z in [z, Complex64::new(z.re, -z.im)] {
            let p = EvalParams::new(11).unwrap();
            let a = w_plane(Complex64::new(-z.re, z.im), &p).unwrap();
            let b = w_plane(z, &p).unwrap().conj();
            conj &= a.re == b.re && a.im == b.im;
        }
    }
    ok &= conj;
    notes.push(format!(
        "conjugate symmetry {}",
        if conj { "bit-exact" } else { "BROKEN" }
    ));

    let mut jump_ratio = 0.0f64;
    for n in 0..=11 {
        let p = EvalParams::new(n).unwrap();
        for (z, a, b) in boundary_points(&p, 1000) {
            let d = (rule(a, z, &p) - rule(b, z, &p)).norm();
            jump_ratio = jump_ratio.max(d / (2.0 * abs_bound(n) + 8e-15));
            debug_assert!(select_branch(z, &p) == a || select_branch(z, &p) == b);
        }
    }
    ok &= jump_ratio <= 1.0;
    notes.push(format!("branch jump/allowance {jump_ratio:.3}"));

    let mut lower = true;
    let mut margin = f64::INFINITY;
    let p = EvalParams::new(11).unwrap();
    for z in grid.iter() {
        let lb = 1.0 / (1.0 + PI.sqrt() * z.norm()) - abs_bound(11);
        let v = w_quadrant1(z, &p).norm();
        lower &= v >= lb;
        margin = margin.min(v / lb);
    }
    for n in 0..11 {
        let p = EvalParams::new(n).unwrap();
        for z in grid.with_stride(16).unwrap().iter() {
            let lb = 1.0 / (1.0 + PI.sqrt() * z.norm()) - abs_bound(n);
            lower &= w_quadrant1(z, &p).norm() >= lb;
        }
    }
    ok &= lower;
    notes.push(format!(
        "lower bound {} (N=11 min |w_N|/bound {margin:.4})",
        if lower { "holds" } else { "VIOLATED" }
    ));

    r.record(6, "identities and properties", ok, notes.join("; "));
}

fn csv_bytes(records: &[SweepRecord], dir: &std::path::Path, name: &str) -> Vec<u8> {
    let path = dir.join(name);
    emit(records, Format::Csv, &path).unwrap();
    std::fs::read(path).unwrap()
}

fn determinism(r: &mut Report, grid: &GridSpec) {
    let sub = grid.with_stride(16).unwrap();
    let ns: Vec<u32> = (0..=11).collect();
    let dir = tempfile::tempdir().unwrap();
    let a = csv_bytes(
        &error_sweep(&ns, &sub, Precision::Binary64).unwrap(),
        dir.path(),
        "a.csv",
    );
    let b = csv_bytes(
        &error_sweep(&ns, &sub, Precision::Binary64).unwrap(),
        dir.path(),
        "b.csv",
    );
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(4)
        .build()
        .unwrap();
    let par = pool
        .install(|| error_sweep(&ns, &sub, Precision::Binary64))
        .unwrap();
    let ser = error_sweep_serial(&ns, &sub, Precision::Binary64).unwrap();
    let bits = |v: &[SweepRecord]| -> Vec<u64> {
        v.iter()
            .flat_map(|s| {
                [
                    s.max_abs_err,
                    s.max_rel_err,
                    s.argmax_abs.re,
                    s.argmax_abs.im,
                    s.argmax_rel.re,
                    s.argmax_rel.im,
                ]
            })
            .map(f64::to_bits)
            .collect()
    };
    let c = csv_bytes(&par, dir.path(), "c.csv");
    let d = csv_bytes(&ser, dir.path(), "d.csv");
    let ok = a == b && c == d && a == c && bits(&par) == bits(&ser);
    r.record(
        8,
        "determinism",
        ok,
        format!(
            "repeat CSV identical: {}; 4-thread vs serial identical: {}",
            a == b,
            c == d && bits(&par) == bits(&ser)
        ),
    );
}

#[test]
fn acceptance() {
    let mut r = Report { failed: Vec::new() };
    oracle_certification(&mut r);

    let grid = GridSpec::default_polar();
    assert_eq!(grid.len(), 1_602_801);
    let d = error_sweep(&(0..=11).collect::<Vec<_>>(), &grid, Precision::Binary64).unwrap();
    let x = error_sweep(
        &(12..=19).collect::<Vec<_>>(),
        &grid.with_stride(16).unwrap(),
        Precision::Xprec,
    )
    .unwrap();

    double_precision_accuracy(&mut r, &d);
    bound_suite(&mut r, &d, &x);
    slope(&mut r, &d, &x);
    constants_check(&mut r);
    accuracy_rows(&mut r, &grid);
    identities(&mut r, &grid);
    determinism(&mut r, &grid);

    say!(
        "{} of 8 criteria passed{}",
        8 - r.failed.len(),
        if r.failed.is_empty() {
            String::new()
        } else {
            format!("; failed: {:?}", r.failed)
        }
    );
    assert!(r.failed.is_empty(), "failed criteria: {:?}", r.failed);
}
