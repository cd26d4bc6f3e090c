use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use hfprod::bounds::{corollary_check, rayleigh_ritz_cut, theorem1_check, theorem2_check};
use hfprod::cycle::{sharpness_experiment, top_pair_product_identity, SharpnessRecord};
use hfprod::graph::{erdos_renyi, mostly_bipartite_random, Bipartition};
use hfprod::io::{emit_dot, emit_heatmap_csv, emit_heatmap_ppm, emit_report_json, to_json_string};
use hfprod::product::{
    edge_sign_agreement, hadamard, product_heatmap, sign_pattern, SignAgreement,
    DEFAULT_SIGN_TOLERANCE,
};
use hfprod::spectra::{decompose_laplacian, decompose_signless};
use hfprod::{BoundReport, CheckTolerances, Error, VertexFunction};
use serde::Serialize;

use crate::input::{parse_pair, parse_range, InputArgs, Resolved, Source};
use crate::output::write_atomic;
use crate::{Cli, Command, Demo, VerifyTarget};

pub enum Outcome {
    Ok,
    Skipped,
    CheckFailed,
}

impl Outcome {
    pub fn code(&self) -> u8 {
        match self {
            Outcome::Ok | Outcome::Skipped => 0,
            Outcome::CheckFailed => 1,
        }
    }

    fn from_checks(all_passed: bool) -> Self {
        if all_passed {
            Outcome::Ok
        } else {
            Outcome::CheckFailed
        }
    }
}

/// 3 for numerical failures, 2 for everything else.
pub fn error_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(err) if err.is_numerical() => 3,
        _ => 2,
    }
}

struct Ctx<'a> {
    out: Option<&'a Path>,
    tol: CheckTolerances,
    seed: u64,
}

impl Ctx<'_> {
    /// Directory for commands whose main product is files.
    fn file_dir(&self) -> PathBuf {
        self.out
            .map_or_else(|| PathBuf::from("."), Path::to_path_buf)
    }

    /// Prints `text` and, with `--out`, also stores it as `name`.
    fn emit(&self, name: &str, text: &str) -> Result<()> {
        if let Some(dir) = self.out {
            write_atomic(dir, name, text.as_bytes())?;
        }
        print!("{text}");
        Ok(())
    }

    fn resolve(&self, input: &InputArgs) -> Result<Option<Source>> {
        match input.resolve(self.seed)? {
            Resolved::Ready(s) => Ok(Some(s)),
            Resolved::Skipped(reason) => {
                eprintln!("warning: skipped, graph data not provisioned ({reason})");
                #[derive(Serialize)]
                struct Skip<'a> {
                    status: &'static str,
                    reason: &'a str,
                }
                println!(
                    "{}",
                    to_json_string(&Skip {
                        status: "skipped",
                        reason: &reason
                    })
                );
                Ok(None)
            }
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let tol = match cli.tol {
        Some(t) if !(t.is_finite() && t > 0.0) => bail!("--tol must be a positive number, got {t}"),
        Some(t) => CheckTolerances::uniform(t),
        None => CheckTolerances::default(),
    };
    let ctx = Ctx {
        out: cli.out.as_deref(),
        tol,
        seed: cli.seed,
    };
    match &cli.command {
        Command::Spectrum {
            input,
            signless,
            vectors,
        } => spectrum(&ctx, input, *signless, *vectors),
        Command::Heatmap { input, pair } => heatmap(&ctx, input, pair.as_deref()),
        Command::Signs { input, pair } => signs(&ctx, input, pair),
        Command::Verify {
            theorem,
            input,
            pairs,
            k,
            part_a,
        } => verify(&ctx, *theorem, input, pairs, k, part_a.as_deref()),
        Command::Demo { demo } => match demo {
            Demo::Cycle { n } => demo_cycle(&ctx, n),
            Demo::Bipartite { n, d, k } => demo_bipartite(&ctx, *n, *d, *k),
            Demo::Er { n, p } => demo_er(&ctx, *n, *p),
        },
    }
}

fn spectrum(ctx: &Ctx, input: &InputArgs, signless: bool, vectors: bool) -> Result<Outcome> {
    let Some(src) = ctx.resolve(input)? else {
        return Ok(Outcome::Skipped);
    };
    let dec = if signless {
        decompose_signless(&src.graph)?
    } else {
        src.laplacian_basis()?
    };
    #[derive(Serialize)]
    struct Spectrum<'a> {
        graph: &'a str,
        operator: hfprod::Operator,
        n: usize,
        edges: usize,
        eigenvalues: &'a [f64],
        residuals: Vec<f64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        eigenvectors: Option<Vec<&'a [f64]>>,
    }
    let report = Spectrum {
        graph: &src.description,
        operator: dec.source,
        n: src.graph.n(),
        edges: src.graph.edge_count(),
        eigenvalues: &dec.eigenvalues,
        residuals: dec.residuals(&src.graph)?,
        eigenvectors: vectors.then(|| dec.eigenvectors.iter().map(|v| v.as_slice()).collect()),
    };
    ctx.emit("spectrum.json", &(to_json_string(&report) + "\n"))?;
    Ok(Outcome::Ok)
}

fn heatmap(ctx: &Ctx, input: &InputArgs, pair: Option<&str>) -> Result<Outcome> {
    let Some(src) = ctx.resolve(input)? else {
        return Ok(Outcome::Skipped);
    };
    let n = src.graph.n();
    let selected = pair.map(|p| parse_pair(p, n)).transpose()?;
    let dec = src.laplacian_basis()?;
    let h = product_heatmap(&src.graph, &dec)?;
    let dir = ctx.file_dir();
    let csv = write_atomic(&dir, "heatmap.csv", emit_heatmap_csv(&h).as_bytes())?;
    let ppm = write_atomic(&dir, "heatmap.ppm", &emit_heatmap_ppm(&h))?;

    #[derive(Serialize)]
    struct Summary {
        graph: String,
        size: usize,
        masked: usize,
        max: Option<f64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        pair: Option<(usize, usize)>,
        #[serde(skip_serializing_if = "Option::is_none")]
        pair_value: Option<Option<f64>>,
        csv: String,
        ppm: String,
    }
    let summary = Summary {
        graph: src.description,
        size: h.n(),
        masked: h.masked_count(),
        max: h.max_defined(),
        pair: selected,
        pair_value: selected.map(|(i, j)| h.get(i - 1, j - 1)),
        csv: csv.display().to_string(),
        ppm: ppm.display().to_string(),
    };
    println!("{}", to_json_string(&summary));
    Ok(Outcome::Ok)
}

fn signs(ctx: &Ctx, input: &InputArgs, pair: &str) -> Result<Outcome> {
    let Some(src) = ctx.resolve(input)? else {
        return Ok(Outcome::Skipped);
    };
    let (i, j) = parse_pair(pair, src.graph.n())?;
    let dec = src.laplacian_basis()?;
    let phi = &dec.eigenvectors[i - 1];
    let psi = &dec.eigenvectors[j - 1];
    let product = hadamard(phi, psi)?;
    let dir = ctx.file_dir();

    #[derive(Serialize)]
    struct Entry {
        file: String,
        eigenvalue: Option<f64>,
        agreement: Option<SignAgreement>,
    }
    let mut entries = Vec::new();
    let items: [(String, &VertexFunction, Option<f64>); 3] = [
        (format!("phi_{i}.dot"), phi, Some(dec.eigenvalues[i - 1])),
        (format!("phi_{j}.dot"), psi, Some(dec.eigenvalues[j - 1])),
        (format!("product_{i}_{j}.dot"), &product, None),
    ];
    for (name, f, eigenvalue) in items {
        let pattern = sign_pattern(f, DEFAULT_SIGN_TOLERANCE)?;
        let path = write_atomic(&dir, &name, emit_dot(&src.graph, &pattern)?.as_bytes())?;
        let agreement = match edge_sign_agreement(&src.graph, &pattern) {
            Ok(a) => Some(a),
            Err(Error::UndefinedFraction) => None,
            Err(e) => return Err(e.into()),
        };
        entries.push(Entry {
            file: path.display().to_string(),
            eigenvalue,
            agreement,
        });
    }
    println!("{}", to_json_string(&entries));
    Ok(Outcome::Ok)
}

fn verify(
    ctx: &Ctx,
    target: VerifyTarget,
    input: &InputArgs,
    pairs: &str,
    k_range: &str,
    part_a: Option<&[usize]>,
) -> Result<Outcome> {
    let Some(src) = ctx.resolve(input)? else {
        return Ok(Outcome::Skipped);
    };
    let g = &src.graph;
    let n = g.n();
    let mut reports: Vec<BoundReport> = Vec::new();
    let name = match target {
        VerifyTarget::Thm1 => {
            let dec = src.laplacian_basis()?;
            let selected: Vec<(usize, usize)> = if pairs == "all" {
                (1..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).collect()
            } else {
                vec![parse_pair(pairs, n)?]
            };
            for (i, j) in selected {
                let r = theorem1_check(
                    g,
                    &dec.eigenvectors[i - 1],
                    &dec.eigenvectors[j - 1],
                    &ctx.tol,
                )?;
                reports.push(r.with_inputs(format!("{}; phi_{i}, phi_{j}", src.description)));
            }
            "thm1"
        }
        VerifyTarget::Thm2 => {
            let ks = parse_range(k_range)?;
            g.is_regular().ok_or(Error::RegularityRequired)?;
            let dec = decompose_signless(g)?;
            let mut skipped = 0;
            'pairs: for (idx, phi) in dec.eigenvectors.iter().enumerate() {
                for &k in &ks {
                    let r = match theorem2_check(g, phi, k, &ctx.tol) {
                        Ok(r) => r,
                        Err(Error::BoundInapplicable { .. }) => {
                            skipped += 1;
                            continue 'pairs;
                        }
                        Err(e) => return Err(e.into()),
                    };
                    reports.push(r.with_inputs(format!(
                        "{}; signless phi_{}, k={k}",
                        src.description,
                        idx + 1
                    )));
                }
            }
            if skipped > 0 {
                eprintln!("note: {skipped} signless eigenpairs with eps >= d are outside the bound's range");
            }
            "thm2"
        }
        VerifyTarget::Corollary => {
            let dec = decompose_signless(g)?;
            for (idx, phi) in dec.eigenvectors.iter().enumerate() {
                let r = corollary_check(g, phi, &ctx.tol)?;
                reports.push(r.with_inputs(format!(
                    "{}; signless phi_{}",
                    src.description,
                    idx + 1
                )));
            }
            "corollary"
        }
        VerifyTarget::Cut => {
            let partition = match (part_a, &src.partition) {
                (Some(a), _) => {
                    let b: Vec<usize> = (0..n).filter(|v| !a.contains(v)).collect();
                    Bipartition::from_parts(n, a, &b)?
                }
                (None, Some(p)) => p.clone(),
                (None, None) => g
                    .is_bipartite()
                    .context("graph is not bipartite; give the partition with --part-a")?,
            };
            let r = rayleigh_ritz_cut(g, &partition.part_a(), &partition.part_b(), &ctx.tol)?;
            reports.push(r.with_inputs(src.description.clone()));
            "cut"
        }
    };
    ctx.emit(&format!("verify-{name}.json"), &emit_report_json(&reports))?;
    let failed = reports.iter().filter(|r| !r.all_satisfied()).count();
    eprintln!("{name}: {} checks, {failed} failed", reports.len());
    Ok(Outcome::from_checks(failed == 0))
}

fn demo_cycle(ctx: &Ctx, ns: &[usize]) -> Result<Outcome> {
    #[derive(Serialize)]
    struct Row {
        #[serde(flatten)]
        sharpness: SharpnessRecord,
        /// Entrywise distance of the top-pair product from `-x_1/2`.
        identity_deviation: f64,
        within_bound: bool,
    }
    let mut rows = Vec::new();
    let mut csv = String::from("n,actual,asymptotic,epsilon,bound,ratio\n");
    for &n in ns {
        let s = sharpness_experiment(n)?;
        let identity = top_pair_product_identity(n)?;
        csv.push_str(&format!(
            "{},{},{},{},{},{}\n",
            s.n, s.actual, s.asymptotic, s.epsilon, s.bound, s.ratio
        ));
        rows.push(Row {
            within_bound: s.measured_actual <= s.measured_bound,
            identity_deviation: identity.max_deviation,
            sharpness: s,
        });
    }
    if let Some(dir) = ctx.out {
        write_atomic(dir, "demo-cycle.csv", csv.as_bytes())?;
    }
    ctx.emit("demo-cycle.json", &(to_json_string(&rows) + "\n"))?;
    Ok(Outcome::from_checks(rows.iter().all(|r| r.within_bound)))
}

fn demo_bipartite(ctx: &Ctx, n: usize, d: usize, k: usize) -> Result<Outcome> {
    let g = mostly_bipartite_random(n, d, k, ctx.seed)?;
    let part_a: Vec<usize> = (0..n).collect();
    let part_b: Vec<usize> = (n..2 * n).collect();
    let cut = rayleigh_ritz_cut(&g, &part_a, &part_b, &ctx.tol)?.with_inputs(format!(
        "mostly-bipartite half_n={n} d={d} k={k} seed={}",
        ctx.seed
    ));
    let bound = 2.0 * k as f64 / n as f64;

    #[derive(Serialize)]
    struct Summary {
        half_n: usize,
        d: usize,
        k: usize,
        seed: u64,
        epsilon_min: f64,
        cut_quotient: f64,
        bound: f64,
        epsilon_min_within_bound: bool,
        report: BoundReport,
    }
    let summary = Summary {
        half_n: n,
        d,
        k,
        seed: ctx.seed,
        epsilon_min: cut.lhs,
        cut_quotient: cut.rhs,
        bound,
        epsilon_min_within_bound: cut.lhs <= bound + ctx.tol.slack_rel * bound.max(1.0),
        report: cut,
    };
    ctx.emit("demo-bipartite.json", &(to_json_string(&summary) + "\n"))?;
    Ok(Outcome::from_checks(
        summary.epsilon_min_within_bound && summary.report.all_satisfied(),
    ))
}

const ER_TOP: usize = 5;

fn demo_er(ctx: &Ctx, n: usize, p: f64) -> Result<Outcome> {
    let g = erdos_renyi(n, p, ctx.seed)?;
    let dec = decompose_laplacian(&g)?;
    let h = product_heatmap(&g, &dec)?;
    let dir = ctx.file_dir();
    write_atomic(&dir, "er-heatmap.csv", emit_heatmap_csv(&h).as_bytes())?;
    write_atomic(&dir, "er-heatmap.ppm", &emit_heatmap_ppm(&h))?;

    let top = ER_TOP.min(n);
    let products: Vec<f64> = (0..top)
        .flat_map(|i| (i + 1..top).map(move |j| (i, j)))
        .filter_map(|(i, j)| h.get(i, j))
        .collect();
    let min_product = products.iter().copied().reduce(f64::min);
    let mean_product =
        (!products.is_empty()).then(|| products.iter().sum::<f64>() / products.len() as f64);
    let mean_top_eigenvalue = dec.eigenvalues[..top].iter().sum::<f64>() / top.max(1) as f64;

    #[derive(Serialize)]
    struct Summary {
        n: usize,
        p: f64,
        seed: u64,
        edges: usize,
        max_degree: usize,
        top: usize,
        min_top_product_quotient: Option<f64>,
        mean_top_product_quotient: Option<f64>,
        mean_top_eigenvalue: f64,
        masked: usize,
    }
    let summary = Summary {
        n,
        p,
        seed: ctx.seed,
        edges: g.edge_count(),
        max_degree: g.max_degree(),
        top,
        min_top_product_quotient: min_product,
        mean_top_product_quotient: mean_product,
        mean_top_eigenvalue,
        masked: h.masked_count(),
    };
    ctx.emit("demo-er.json", &(to_json_string(&summary) + "\n"))?;
    Ok(Outcome::Ok)
}
