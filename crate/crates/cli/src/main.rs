mod cache;
mod job;
mod verify;

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use krchar::output::{gamma_to_json, gamma_to_plain, graded_to_json, graded_to_latex, graded_to_plain, latex_weight, GammaDoc};
use krchar::poset::{gamma_psi, psi_i, psi_of_mu};
use krchar::{IsoChar, KrEngine, LambdaPoint, LieType, PsiSet, RepEngine, RootSystem, Weight, WeightChar};
use serde_json::json;
use thiserror::Error;

use cache::{Cache, CacheError};
use job::{Command, Format, InputError, JobSpec};

/// Multigraded characters of Kirillov–Reshetikhin type modules for the
/// classical Lie algebras.
#[derive(Debug, Parser)]
#[command(name = "krchar", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Algebra such as D5, B3 or A2.
    #[arg(long, global = true)]
    algebra: Option<String>,
    /// plain, json or latex.
    #[arg(long, global = true, default_value = "plain")]
    format: String,
    /// Decomposition cache file (KRCHAR_CACHE takes precedence).
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Print the number of freshly computed decompositions to stderr.
    #[arg(long, global = true)]
    stats: bool,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Graded character of N(λ, 0).
    Gch {
        #[arg(long)]
        weight: String,
        #[arg(long, default_value_t = 1)]
        ell: usize,
        /// fixed-psi or per-weight-psi.
        #[arg(long, default_value = "fixed-psi")]
        mode: String,
    },
    /// Dimension of the degree-j Koszul term between two points.
    Ext {
        /// coords@degree
        #[arg(long)]
        from: String,
        /// coords@degree
        #[arg(long)]
        to: String,
        /// Defaults to the difference of total degrees.
        #[arg(long)]
        j: Option<u32>,
    },
    /// The Γ set above (λ, 0).
    Gamma {
        #[arg(long)]
        weight: String,
        #[arg(long, default_value_t = 1)]
        ell: usize,
        /// Use Ψ_i for this node instead of Ψ_λ.
        #[arg(long)]
        node: Option<usize>,
    },
    /// Decomposition of V(λ₁) ⊗ V(λ₂) ⊗ ….
    Tensor {
        #[arg(long = "weight", required = true)]
        weights: Vec<String>,
    },
    /// A Ψ set with its condition checks.
    Psi {
        #[arg(long, conflicts_with = "weight")]
        node: Option<usize>,
        #[arg(long)]
        weight: Option<String>,
    },
    /// Run a verification suite.
    Verify {
        /// paper, identities or all.
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Debug, Error)]
enum AppError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Cache(#[from] CacheError),
    #[error("{0}")]
    Compute(String),
}

fn compute<E: std::fmt::Display>(e: E) -> AppError {
    AppError::Compute(e.to_string())
}

fn build_job(cli: &Cli) -> Result<JobSpec, InputError> {
    let format = job::parse_format(&cli.format)?;
    let algebra = cli.algebra.as_deref().map(job::parse_algebra).transpose()?;
    let cache_path = std::env::var_os("KRCHAR_CACHE").filter(|v| !v.is_empty()).map(PathBuf::from).or(cli.cache.clone());
    let rs = || -> Result<RootSystem, InputError> {
        let t = algebra.ok_or(InputError::Missing("--algebra"))?;
        RootSystem::new(t).map_err(|e| InputError::Invalid { flag: "--algebra".into(), reason: e.to_string() })
    };
    let command = match &cli.command {
        Cmd::Gch { weight, ell, mode } => {
            let rs = rs()?;
            Command::Gch {
                weight: job::check_weight("--weight", &rs, job::parse_coords("--weight", weight)?)?,
                ell: job::check_ell(*ell)?,
                mode: job::parse_mode(mode)?,
            }
        }
        Cmd::Ext { from, to, j } => {
            let rs = rs()?;
            let (fw, fd) = job::parse_point("--from", from)?;
            let (tw, td) = job::parse_point("--to", to)?;
            let fd = job::check_degree("--from", fd, None)?;
            let td = job::check_degree("--to", td, Some(fd.ell()))?;
            Command::Ext {
                from: (job::check_weight("--from", &rs, fw)?, fd),
                to: (job::check_weight("--to", &rs, tw)?, td),
                j: *j,
            }
        }
        Cmd::Gamma { weight, ell, node } => {
            let rs = rs()?;
            if let Some(i) = node {
                rs.check_node(*i).map_err(|e| InputError::Invalid { flag: "--node".into(), reason: e.to_string() })?;
            }
            Command::Gamma {
                weight: job::check_weight("--weight", &rs, job::parse_coords("--weight", weight)?)?,
                ell: job::check_ell(*ell)?,
                node: *node,
            }
        }
        Cmd::Tensor { weights } => {
            let rs = rs()?;
            let weights = weights
                .iter()
                .map(|w| job::check_weight("--weight", &rs, job::parse_coords("--weight", w)?))
                .collect::<Result<_, _>>()?;
            Command::Tensor { weights }
        }
        Cmd::Psi { node, weight } => {
            let rs = rs()?;
            let weight = match weight {
                Some(w) => Some(job::check_weight("--weight", &rs, job::parse_coords("--weight", w)?)?),
                None => None,
            };
            match node {
                Some(i) => {
                    rs.check_node(*i).map_err(|e| InputError::Invalid { flag: "--node".into(), reason: e.to_string() })?
                }
                None if weight.is_none() => return Err(InputError::Missing("--node or --weight")),
                None => {}
            }
            Command::Psi { node: *node, weight }
        }
        Cmd::Verify { suite } => Command::Verify { suite: job::parse_suite(suite)? },
    };
    Ok(JobSpec { algebra, command, format, cache_path })
}

/// Representation engines per algebra, seeded from the cache on creation.
struct Engines {
    cache: Cache,
    engines: RefCell<BTreeMap<LieType, Arc<RepEngine>>>,
}

impl Engines {
    fn get(&self, t: LieType) -> Result<Arc<RepEngine>, AppError> {
        if let Some(e) = self.engines.borrow().get(&t) {
            return Ok(e.clone());
        }
        let engine = Arc::new(RepEngine::new(RootSystem::new(t).map_err(compute)?));
        self.cache.seed(&engine);
        self.engines.borrow_mut().insert(t, engine.clone());
        Ok(engine)
    }

    fn computed(&self) -> u64 {
        self.engines.borrow().values().map(|e| e.decompositions_computed()).sum()
    }

    fn absorb_into_cache(&mut self) {
        for e in self.engines.borrow().values() {
            self.cache.absorb(e);
        }
    }
}

struct Report {
    text: String,
    verified: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, verified: true }
    }
}

fn iso_plain(iso: &IsoChar) -> String {
    iso.iter().map(|(w, m)| format!("{m}\tV{w}")).collect::<Vec<_>>().join("\n")
}

fn iso_latex(iso: &IsoChar) -> String {
    if iso.is_empty() {
        return "0".into();
    }
    iso.iter()
        .map(|(w, m)| {
            let coeff = if *m == 1 { String::new() } else { format!("{m}\\,") };
            format!("{coeff}\\ch V({})", latex_weight(w))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn run(job: &JobSpec, engines: &Engines) -> Result<Report, AppError> {
    let rep = || engines.get(job.algebra.expect("validated"));
    let t = job.algebra.map(|t| t.to_string()).unwrap_or_default();
    let text = match &job.command {
        Command::Gch { weight, ell, mode } => {
            let kr = KrEngine::adjoint(rep()?, *ell).map_err(compute)?;
            let g = kr.gch_n(weight, *mode).map_err(compute)?;
            match job.format {
                Format::Plain => graded_to_plain(&g),
                Format::Json => graded_to_json(job.algebra.expect("validated"), &g),
                Format::Latex => graded_to_latex(&g),
            }
        }
        Command::Ext { from, to, j } => {
            let j = match j {
                Some(j) => *j,
                None => u32::try_from(to.1.deg() - from.1.deg()).map_err(|_| {
                    InputError::Invalid { flag: "--to".into(), reason: "degree is below that of --from; pass --j".into() }
                })?,
            };
            let kr = KrEngine::adjoint(rep()?, from.1.ell()).map_err(compute)?;
            let a = LambdaPoint::new(from.0.clone(), from.1.clone());
            let b = LambdaPoint::new(to.0.clone(), to.1.clone());
            let dim = kr.ext_dim(&a, &b, j).map_err(compute)?;
            match job.format {
                Format::Json => json!({
                    "algebra": t,
                    "from": {"weight": a.weight.coords(), "degree": a.degree.0},
                    "to": {"weight": b.weight.coords(), "degree": b.degree.0},
                    "j": j,
                    "dim": dim,
                })
                .to_string(),
                _ => dim.to_string(),
            }
        }
        Command::Gamma { weight, ell, node } => {
            let kr = KrEngine::adjoint(rep()?, *ell).map_err(compute)?;
            let zero = krchar::MultiDegree::zero(*ell);
            let gamma = match node {
                Some(i) => {
                    let psi = kr.checked_psi(*i).map_err(compute)?;
                    gamma_psi(kr.root_system(), &psi, &LambdaPoint::new(weight.clone(), zero), false).map_err(compute)?
                }
                None => kr.gamma_for(weight, &zero).map_err(compute)?,
            };
            match job.format {
                Format::Json => gamma_to_json(job.algebra.expect("validated"), &gamma),
                Format::Latex => {
                    let doc = GammaDoc::new(job.algebra.expect("validated"), &gamma);
                    let pts: Vec<String> = doc
                        .points
                        .iter()
                        .map(|p| format!("(\\,{},\\ ({})\\,)", latex_weight(&Weight(p.weight.clone())), join(&p.degree)))
                        .collect();
                    format!("\\{{{}\\}}", pts.join(",\\ "))
                }
                Format::Plain => gamma_to_plain(&gamma),
            }
        }
        Command::Tensor { weights } => {
            let rep = rep()?;
            let mut acc = IsoChar::single(weights[0].clone());
            for nu in &weights[1..] {
                let mut next = IsoChar::new();
                for (mu, m) in acc.iter() {
                    for (w, k) in rep.tensor_decompose(mu, nu).map_err(compute)?.iter() {
                        next.add_term(w.clone(), m * k);
                    }
                }
                acc = next;
            }
            match job.format {
                Format::Plain => iso_plain(&acc),
                Format::Latex => iso_latex(&acc),
                Format::Json => json!({
                    "algebra": t,
                    "factors": weights.iter().map(|w| w.coords()).collect::<Vec<_>>(),
                    "entries": acc.iter().map(|(w, m)| json!({"weight": w.coords(), "mult": m})).collect::<Vec<_>>(),
                })
                .to_string(),
            }
        }
        Command::Psi { node, weight } => {
            let rep = rep()?;
            let rs = rep.root_system();
            let v = WeightChar::from_entries(rs.adjoint_weights());
            let (source, psi): (String, PsiSet) = match (node, weight) {
                (Some(i), _) => (format!("node {i}"), psi_i(rs, *i).map_err(compute)?),
                (None, Some(mu)) => (format!("weight {mu}"), psi_of_mu(rs, &v, mu).map_err(compute)?),
                (None, None) => unreachable!("validated"),
            };
            let psi = psi.checked(rs, &v).map_err(compute)?;
            match job.format {
                Format::Json => json!({
                    "algebra": t,
                    "source": source,
                    "elements": psi.elements().iter().map(|w| w.coords()).collect::<Vec<_>>(),
                    "polytope_condition": psi.polytope_checked(),
                    "extra_condition": psi.extra_checked(),
                })
                .to_string(),
                Format::Latex => format!(
                    "\\Psi = \\{{{}\\}}",
                    psi.elements().iter().map(latex_weight).collect::<Vec<_>>().join(",\\ ")
                ),
                Format::Plain => {
                    let verdict = |b: bool| if b { "pass" } else { "fail" };
                    format!(
                        "Ψ ({source}) = {{{}}} ({} elements)\npolytope face condition: {}\nextra condition: {}",
                        psi.elements().iter().map(|w| w.to_string()).collect::<Vec<_>>().join(", "),
                        psi.len(),
                        verdict(psi.polytope_checked()),
                        verdict(psi.extra_checked())
                    )
                }
            }
        }
        Command::Verify { suite } => {
            let engine_for = |name: &str| engines.get(name.parse().expect("built-in algebra")).expect("built-in algebra");
            let results = verify::Runner::new(&engine_for).run(*suite);
            let verified = results.iter().all(|r| r.passed);
            let passed = results.iter().filter(|r| r.passed).count();
            let text = match job.format {
                Format::Json => json!({"suite": suite.to_string(), "passed": verified, "checks": results}).to_string(),
                _ => {
                    let mut lines: Vec<String> = results
                        .iter()
                        .map(|r| match &r.detail {
                            None => format!("PASS {}", r.name),
                            Some(d) => format!("FAIL {}: {d}", r.name),
                        })
                        .collect();
                    lines.push(format!("{passed}/{} checks passed", results.len()));
                    lines.join("\n")
                }
            };
            return Ok(Report { text, verified });
        }
    };
    Ok(Report::ok(text))
}

fn join(v: &[i32]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let job = match build_job(&cli) {
        Ok(j) => j,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut cache = Cache::new();
    if let Some(path) = &job.cache_path {
        if let Err(e) = cache.load(path) {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let mut engines = Engines { cache, engines: RefCell::new(BTreeMap::new()) };
    let report = run(&job, &engines);
    if cli.stats {
        eprintln!("cache records loaded: {}", engines.cache.len());
        eprintln!("decompositions computed: {}", engines.computed());
    }
    if let Some(path) = &job.cache_path {
        engines.absorb_into_cache();
        if let Err(e) = engines.cache.store(path) {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match report {
        Ok(r) => {
            println!("{}", r.text);
            if r.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
