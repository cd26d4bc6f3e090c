//! Acceptance suite: one PASS/FAIL/SKIP line per criterion.
//!
//! Run with `cargo test -p hfprod --test acceptance`.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hfprod::bounds::{corollary_check, rayleigh_ritz_cut, theorem1_check, theorem2_check};
use hfprod::cycle::{cycle_eigenpair, sharpness_experiment};
use hfprod::graph::{
    complete_bipartite, cycle, erdos_renyi, flower_snark, mostly_bipartite_random,
};
use hfprod::io::{
    emit_heatmap_csv, load_named, parse_edge_list, parse_graph6, write_edge_list, write_graph6,
};
use hfprod::product::{hadamard, product_heatmap};
use hfprod::spectra::{decompose_laplacian, decompose_signless, rayleigh_quotient, DenseMatrix};
use hfprod::{CheckTolerances, Error, Graph, Operator, VertexFunction};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

enum Verdict {
    Pass(String),
    Fail(String),
    Skip(String),
}

type Outcome = Result<Verdict, Error>;
type Criterion = (&'static str, fn() -> Outcome);

fn verdict(ok: bool, detail: String) -> Verdict {
    if ok {
        Verdict::Pass(detail)
    } else {
        Verdict::Fail(detail)
    }
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

/// Regular graphs used by the walk-based checks.
fn regular_battery() -> Result<Vec<(String, Graph)>, Error> {
    let mut out = Vec::new();
    for n in [5, 12, 101] {
        out.push((format!("C{n}"), cycle(n)?));
    }
    for d in [3, 4] {
        out.push((format!("K{d},{d}"), complete_bipartite(d, d)?));
    }
    out.push(("J5".into(), flower_snark(5)?));
    for k in [0, 4, 8] {
        out.push((
            format!("MB(50,4,{k})"),
            mostly_bipartite_random(50, 4, k, 7)?,
        ));
    }
    Ok(out)
}

fn cycle_spectra() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for n in [5, 12, 101] {
        let dec = decompose_laplacian(&cycle(n)?)?;
        let mut expected: Vec<f64> = (0..n)
            .map(|k| 2.0 - 2.0 * (2.0 * PI * k as f64 / n as f64).cos())
            .collect();
        expected.sort_by(|a, b| b.total_cmp(a));
        if dec.eigenvalues.len() != n {
            return Ok(Verdict::Fail(format!(
                "C{n}: {} eigenvalues",
                dec.eigenvalues.len()
            )));
        }
        worst = worst.max(max_abs_diff(&dec.eigenvalues, &expected));
    }
    let elapsed = start.elapsed();
    Ok(verdict(
        worst <= 1e-9 && elapsed < Duration::from_secs(5),
        format!("max deviation {worst:.2e}, {:.2} s", elapsed.as_secs_f64()),
    ))
}

fn cycle_product_identity() -> Outcome {
    let mut worst_cos: f64 = 0.0;
    let mut worst_sin: f64 = 0.0;
    let mut worst_rq: f64 = 0.0;
    for n in [5usize, 101] {
        let top = cycle_eigenpair(n, (n - 1) / 2)?;
        let first = cycle_eigenpair(n, 1)?;
        let product = hadamard(&top.sine, &top.cosine)?;
        worst_cos = worst_cos.max(max_abs_diff(&product, &first.cosine.scaled(-0.5)));
        worst_sin = worst_sin.max(max_abs_diff(&product, &first.sine.scaled(-0.5)));
        let rq = rayleigh_quotient(&cycle(n)?, &product, Operator::Laplacian)?;
        worst_rq = worst_rq.max((rq - (2.0 - 2.0 * (2.0 * PI / n as f64).cos())).abs());
    }
    Ok(verdict(
        worst_cos <= 1e-12 && worst_rq <= 1e-9,
        format!(
            "|x*y + y1/2| = {worst_cos:.2e} (against -x1/2: {worst_sin:.2e}), quotient deviation {worst_rq:.2e}"
        ),
    ))
}

fn theorem1() -> Outcome {
    let tol = CheckTolerances::default();
    let graphs = [
        ("C5", cycle(5)?),
        ("C12", cycle(12)?),
        ("C101", cycle(101)?),
        ("K3,3", complete_bipartite(3, 3)?),
        ("J5", flower_snark(5)?),
    ];
    let (mut checks, mut violations) = (0usize, Vec::new());
    for (name, g) in &graphs {
        let dec = decompose_laplacian(g)?;
        let vs = &dec.eigenvectors;
        for i in 0..vs.len() {
            for j in i..vs.len() {
                checks += 1;
                if !theorem1_check(g, &vs[i], &vs[j], &tol)?.satisfied {
                    violations.push(format!("{name} ({}, {})", i + 1, j + 1));
                }
            }
        }
    }
    for seed in 0..5 {
        let g = erdos_renyi(30, 0.3, seed)?;
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + seed);
        for _ in 0..100 {
            let phi: VertexFunction = (0..30).map(|_| rng.random_range(-1.0..1.0)).collect();
            let psi: VertexFunction = (0..30).map(|_| rng.random_range(-1.0..1.0)).collect();
            checks += 1;
            if !theorem1_check(&g, &phi, &psi, &tol)?.satisfied {
                violations.push(format!("G(30,0.3) seed {seed}"));
            }
        }
    }
    Ok(verdict(
        violations.is_empty(),
        format!(
            "{checks} checks, {} violations {violations:?}",
            violations.len()
        ),
    ))
}

fn theorem2() -> Outcome {
    let tol = CheckTolerances::default();
    let (mut checks, mut out_of_range, mut violations) = (0usize, 0usize, Vec::new());
    for (name, g) in regular_battery()? {
        let dec = decompose_signless(&g)?;
        'pairs: for (idx, phi) in dec.eigenvectors.iter().enumerate() {
            for k in 0..=4 {
                match theorem2_check(&g, phi, k, &tol) {
                    Ok(r) => {
                        checks += 1;
                        if !r.satisfied {
                            violations.push(format!("{name} phi_{} k={k}", idx + 1));
                        }
                    }
                    Err(Error::BoundInapplicable { .. }) => {
                        out_of_range += 1;
                        continue 'pairs;
                    }
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(verdict(
        violations.is_empty() && checks > 0,
        format!(
            "{checks} checks, {out_of_range} eigenpairs with eps >= d, {} violations {violations:?}",
            violations.len()
        ),
    ))
}

fn corollary() -> Outcome {
    let tol = CheckTolerances::default();
    let (mut checks, mut violations) = (0usize, Vec::new());
    let mut worst_defect: f64 = 0.0;
    for (name, g) in regular_battery()? {
        let dec = decompose_signless(&g)?;
        for (idx, phi) in dec.eigenvectors.iter().enumerate() {
            let r = corollary_check(&g, phi, &tol)?;
            let defect = r.diagnostics["walk_relation_defect"];
            worst_defect = worst_defect.max(defect);
            checks += 1;
            if !r.all_satisfied() || defect > 1e-8 {
                violations.push(format!("{name} phi_{}", idx + 1));
            }
        }
    }
    Ok(verdict(
        violations.is_empty(),
        format!(
            "{checks} eigenpairs, worst walk-relation defect {worst_defect:.2e}, {} violations {violations:?}",
            violations.len()
        ),
    ))
}

fn cut_bound() -> Outcome {
    let tol = CheckTolerances::default();
    let mut details = Vec::new();
    let mut ok = true;
    for seed in 0..5 {
        let g = mostly_bipartite_random(50, 4, 4, seed)?;
        let a: Vec<usize> = (0..50).collect();
        let b: Vec<usize> = (50..100).collect();
        let r = rayleigh_ritz_cut(&g, &a, &b, &tol)?;
        ok &= r.lhs <= 0.16 + 1e-9 && (r.rhs - 0.16).abs() <= 1e-12;
        details.push(format!("seed {seed}: eps_min {:.4}", r.lhs));
    }
    Ok(verdict(
        ok,
        format!("cut quotient 0.16; {}", details.join(", ")),
    ))
}

fn thomassen() -> Outcome {
    let g = match load_named("thomassen-94") {
        Ok(g) => g,
        Err(Error::NotProvisioned { reason, .. }) => {
            eprintln!("warning: thomassen-94 not provisioned: {reason}");
            return Ok(Verdict::Skip("graph data not provisioned".into()));
        }
        Err(e) => return Err(e),
    };
    let dec = decompose_laplacian(&g)?;
    let gaps: Vec<f64> = dec.eigenvalues[..4]
        .windows(2)
        .map(|w| w[0] - w[1])
        .collect();
    if gaps.iter().any(|&gap| gap < 1e-6) {
        return Ok(Verdict::Fail(format!(
            "top eigenvalues not simple, gaps {gaps:?}"
        )));
    }
    let q2 = rayleigh_quotient(&g, &dec.eigenvectors[1], Operator::Laplacian)?;
    let q3 = rayleigh_quotient(&g, &dec.eigenvectors[2], Operator::Laplacian)?;
    let product = hadamard(&dec.eigenvectors[1], &dec.eigenvectors[2])?;
    let q23 = rayleigh_quotient(&g, &product, Operator::Laplacian)?;
    let heatmap = product_heatmap(&g, &dec)?;
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("thomassen-94-heatmap.csv");
    std::fs::write(&path, emit_heatmap_csv(&heatmap))?;
    Ok(verdict(
        (q2 - 5.5).abs() <= 0.3 && (q3 - 5.5).abs() <= 0.3 && (q23 - 0.5).abs() <= 0.2,
        format!(
            "phi2 {q2:.3}, phi3 {q3:.3}, product {q23:.3}, heatmap {}",
            path.display()
        ),
    ))
}

fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Result<Graph, Error> {
    let n = rng.random_range(1..=max_n);
    let p = rng.random_range(0.0..=1.0);
    erdos_renyi(n, p, rng.random())
}

fn eigensolver_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut residual, mut defect, mut trace, mut oracle): (f64, f64, f64, f64) =
        (0.0, 0.0, 0.0, 0.0);
    let mut outside = 0usize;
    for _ in 0..50 {
        let g = random_graph(&mut rng, 60)?;
        let two_m = 2.0 * g.edge_count() as f64;
        let ceiling = 2.0 * g.max_degree() as f64;
        for op in [Operator::Laplacian, Operator::Signless] {
            let dec = match op {
                Operator::Laplacian => decompose_laplacian(&g)?,
                Operator::Signless => decompose_signless(&g)?,
            };
            residual = dec.residuals(&g)?.into_iter().fold(residual, f64::max);
            defect = defect.max(dec.orthonormality_defect());
            let sum: f64 = dec.eigenvalues.iter().sum();
            trace = trace.max((sum - two_m).abs() / two_m.max(1.0));
            outside += dec
                .eigenvalues
                .iter()
                .filter(|&&l| !(-1e-9..=ceiling + 1e-9).contains(&l))
                .count();

            let m = DenseMatrix::of_operator(&g, op);
            let n = g.n();
            let reference = nalgebra::DMatrix::from_fn(n, n, |i, j| m[(i, j)]).symmetric_eigen();
            let mut expected: Vec<f64> = reference.eigenvalues.iter().copied().collect();
            expected.sort_by(|a, b| b.total_cmp(a));
            oracle = oracle.max(max_abs_diff(&dec.eigenvalues, &expected));
        }
    }
    Ok(verdict(
        residual <= 1e-9 && defect <= 1e-10 && trace <= 1e-8 && outside == 0 && oracle <= 1e-9,
        format!(
            "residual {residual:.2e}, orthonormality {defect:.2e}, trace {trace:.2e}, \
             {outside} outside Gerschgorin, vs nalgebra {oracle:.2e}"
        ),
    ))
}

fn round_trips() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut failures = 0;
    for i in 0..100 {
        let g = if i == 0 {
            erdos_renyi(200, 0.5, 0)?
        } else {
            random_graph(&mut rng, 200)?
        };
        let via_g6 = parse_graph6(&write_graph6(&g))?;
        let via_edges = parse_edge_list(&write_edge_list(&g))?;
        failures += usize::from(via_g6 != g) + usize::from(via_edges != g);
    }
    let k2 = write_graph6(&Graph::from_edges(2, [(0, 1)])?);
    Ok(verdict(
        failures == 0 && k2 == b"A_",
        format!(
            "{failures} round-trip mismatches, K2 encodes as {:?}",
            String::from_utf8_lossy(&k2)
        ),
    ))
}

fn sharpness() -> Outcome {
    let mut ok = true;
    let mut rows = Vec::new();
    for n in [51, 101, 201] {
        let s = sharpness_experiment(n)?;
        let rel = (s.measured_actual - s.asymptotic).abs() / s.asymptotic;
        ok &= rel <= 0.05 && s.measured_actual <= s.measured_bound;
        rows.push(format!("n={n}: rel {rel:.1e}, ratio {:.5}", s.ratio));
    }
    Ok(verdict(ok, rows.join("; ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("cycle spectra", cycle_spectra),
        ("cycle product identity", cycle_product_identity),
        ("product-energy bound (proof form)", theorem1),
        ("eigenvector sup-norm bound", theorem2),
        ("walk identities", corollary),
        ("mostly-bipartite signless bound", cut_bound),
        ("thomassen-94 quotients", thomassen),
        ("eigensolver properties", eigensolver_properties),
        ("graph6 / edge-list round trips", round_trips),
        ("cycle sharpness", sharpness),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let (tag, detail) = match check() {
            Ok(Verdict::Pass(d)) => ("PASS", d),
            Ok(Verdict::Skip(d)) => ("SKIP", d),
            Ok(Verdict::Fail(d)) => {
                failed += 1;
                ("FAIL", d)
            }
            Err(e) => {
                failed += 1;
                ("FAIL", format!("error: {e}"))
            }
        };
        println!("criterion {:>2}: {tag} {name}: {detail}", i + 1);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
