//! Command-line front end. Every command reads JSON arguments and prints one
//! JSON document.
//!
//! Exit codes: `0` success, `2` parse or argument error, `3` resource limit,
//! `4` oracle disagreement.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::majorization::{
    extreme_points_norm_hull, extreme_points_weakstar, in_norm_hull, in_weakstar_hull,
    separating_vector, support_functional, RationalWeight,
};
use crate::momentum::{
    coadjoint_orbit_member, d_lambda, in_momentum_set_matrix, in_momentum_set_via_spectrum,
    in_norm_momentum_set_matrix, kaehler_value, sampling, spectral_s_k, strong_exposure_gap,
    triple_decompose, Matrix, Spectrum,
};
use crate::oracle::hull::{
    hull_member_bruteforce, orbit_points, polytope_vertices, weakstar_member_bruteforce,
    AmbientVector, MAX_ORBIT_AMBIENT, MAX_VERTEX_AMBIENT,
};
use crate::rational::{format_q, q, Q};
use crate::tensor::partition::{semistandard_contents, Partition};
use crate::tensor::space::{schur_weyl_decompose, weight_multiset, MAX_TENSOR_DIM};
use crate::weights::{canonicalize, orbit_equal, OrbitSignature, Weight};

#[derive(Parser, Debug)]
#[command(
    name = "schurweyl",
    version,
    about = "Exact Weyl-orbit hulls, Schur–Weyl data and momentum-set tests"
)]
pub struct Cli {
    /// Re-check the answer with an independent brute-force computation.
    #[arg(long, global = true)]
    oracle: bool,

    /// Seed for sampling commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Write the JSON result here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Largest ambient dimension for brute-force checks.
    #[arg(long, global = true, env = "SCHURWEYL_MAX_AMBIENT", default_value_t = MAX_ORBIT_AMBIENT)]
    max_ambient: usize,

    /// Largest `n^k` for tensor computations.
    #[arg(
        long,
        global = true,
        env = "SCHURWEYL_MAX_TENSOR_DIM",
        default_value_t = 1024
    )]
    max_tensor_dim: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Weakstar,
    Norm,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Do two weights lie in the same Weyl orbit?
    OrbitEq {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    /// Membership of `mu` in the orbit hull of `lambda`.
    Hull {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    /// Extreme orbits of the hull of `lambda`.
    Extremes {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        lambda: String,
    },
    /// A functional separating the hulls of two weights.
    Separate {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    /// Support functional `max_w <w lambda, x>`.
    Support {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        x: String,
    },
    /// Isotypic decomposition of `(Q^n)^{⊗k}`.
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Weights with multiplicity of the Schur module of a partition.
    WeightsOf {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: usize,
    },
    /// Momentum-set membership of a matrix, or a seeded exposure harness.
    MomentumCheck {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        matrix: Option<String>,
        #[arg(long, value_enum, default_value = "weakstar")]
        mode: Mode,
        /// Number of sampled members (harness mode, used when no matrix is given).
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Matrix size in harness mode (defaults to the span of `lambda`).
        #[arg(long)]
        n: Option<usize>,
    },
    /// Split a matrix by the eigenvalue order of `D_lambda`.
    Triple {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        matrix: String,
    },
    /// Kähler form value at a strictly upper-pattern matrix.
    Kaehler {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        matrix: String,
    },
    /// Sum of the `k` largest eigenvalues of a Hermitian matrix.
    Sk {
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        k: usize,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Argument(_) | Error::Parse(_) | Error::Dimension { .. } => 2,
        Error::Resource { .. } | Error::Undecided => 3,
        Error::OracleMismatch(_) => 4,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let result = execute(&cli).and_then(|v| {
        let text = serde_json::to_string(&v).expect("json value serializes") + "\n";
        match &cli.output {
            Some(path) => std::fs::write(path, &text)
                .map(|_| String::new())
                .map_err(|e| Error::Argument(format!("cannot write {}: {e}", path.display()))),
            None => Ok(text),
        }
    });
    match result {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: json!({ "error": e.to_string() }).to_string() + "\n",
        },
    }
}

/// Reads `@path` arguments from disk; anything else is the JSON text itself.
fn payload(arg: &str) -> Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

fn parse_weight(arg: &str) -> Result<Weight> {
    serde_json::from_str(&payload(arg)?).map_err(|e| Error::Parse(format!("weight: {e}")))
}

fn parse_rational_weight(arg: &str) -> Result<RationalWeight> {
    RationalWeight::from_json(&payload(arg)?)
}

fn parse_partition(arg: &str) -> Result<Partition> {
    Partition::from_json(&payload(arg)?)
}

fn parse_matrix(arg: &str) -> Result<Matrix> {
    Matrix::from_json(&payload(arg)?)
}

fn qs(x: &Q) -> Value {
    Value::String(format_q(x))
}

fn rational_weight_json(w: &RationalWeight) -> Value {
    w.to_json()
}

fn orbit_json(sig: &OrbitSignature) -> Value {
    json!(sig.sorted_values())
}

fn mismatch(what: &str) -> Error {
    Error::OracleMismatch(what.to_string())
}

impl Cli {
    fn ambient_cap(&self) -> usize {
        self.max_ambient.min(MAX_ORBIT_AMBIENT)
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        let limit = self.ambient_cap();
        if n > limit {
            return Err(Error::Resource {
                what: "ambient dimension",
                value: n,
                limit,
            });
        }
        Ok(())
    }

    fn check_tensor(&self, n: usize, k: usize) -> Result<()> {
        let limit = self.max_tensor_dim.min(MAX_TENSOR_DIM);
        let dim = (n as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
        if dim > limit as u128 {
            let value = usize::try_from(dim).unwrap_or(usize::MAX);
            return Err(Error::Resource {
                what: "tensor dimension n^k",
                value,
                limit,
            });
        }
        Ok(())
    }
}

/// Values of `w` followed by zeros, as an ambient vector of length `n`.
fn compressed(values: Vec<Q>, n: usize) -> AmbientVector {
    let mut v = values;
    v.resize(n, Q::zero());
    AmbientVector(v)
}

fn execute(cli: &Cli) -> Result<Value> {
    match &cli.command {
        Command::OrbitEq { lambda, mu } => {
            let (l, m) = (parse_weight(lambda)?, parse_weight(mu)?);
            let equal = orbit_equal(&l, &m);
            if cli.oracle {
                let n = l.support_len().max(m.support_len());
                cli.check_ambient(n)?;
                let lam = Weight::from_values(&l.values());
                let target = compressed(m.values().into_iter().map(q).collect(), n);
                if orbit_points(&lam, n)?.contains(&target) != equal {
                    return Err(mismatch("orbit equality differs from orbit enumeration"));
                }
            }
            Ok(json!({ "equal": equal }))
        }
        Command::Hull { mode, lambda, mu } => {
            let (l, m) = (parse_weight(lambda)?, parse_rational_weight(mu)?);
            let member = match mode {
                Mode::Weakstar => in_weakstar_hull(&m, &l),
                Mode::Norm => in_norm_hull(&m, &l),
            };
            if cli.oracle {
                let n = l.support_len() + m.support_len();
                cli.check_ambient(n)?;
                let mu_amb = compressed(m.values(), n);
                let brute = match mode {
                    Mode::Weakstar => weakstar_member_bruteforce(&mu_amb, &l)?,
                    Mode::Norm => {
                        let lam = compressed(l.values().into_iter().map(q).collect(), n);
                        hull_member_bruteforce(&mu_amb, &lam)?
                    }
                };
                if brute != member {
                    return Err(mismatch("hull membership differs from the LP oracle"));
                }
            }
            Ok(json!({ "member": member }))
        }
        Command::Extremes { mode, lambda } => {
            let l = parse_weight(lambda)?;
            let set = match mode {
                Mode::Weakstar => extreme_points_weakstar(&l),
                Mode::Norm => extreme_points_norm_hull(&l),
            };
            if cli.oracle {
                let lam = Weight::from_values(&l.values());
                let brute: std::collections::BTreeSet<OrbitSignature> = match mode {
                    Mode::Weakstar => {
                        let n = l.support_len() + 1;
                        cli.check_ambient(n)?;
                        if n > MAX_VERTEX_AMBIENT {
                            return Err(Error::Resource {
                                what: "vertex enumeration ambient",
                                value: n,
                                limit: MAX_VERTEX_AMBIENT,
                            });
                        }
                        polytope_vertices(&lam, n)?
                    }
                    Mode::Norm => {
                        let n = l.support_len();
                        cli.check_ambient(n)?;
                        crate::oracle::hull::permutahedron_vertices(&lam, n)?
                    }
                }
                .iter()
                .map(|v| v.to_weight().map(|w| canonicalize(&w)))
                .collect::<Option<_>>()
                .ok_or_else(|| mismatch("non-integral vertex"))?;
                if brute != set.signatures {
                    return Err(mismatch("extreme orbits differ from enumerated vertices"));
                }
            }
            let orbits: Vec<Value> = set.signatures.iter().map(orbit_json).collect();
            Ok(json!({ "orbits": orbits }))
        }
        Command::Separate { lambda, mu } => {
            let (l, m) = (parse_weight(lambda)?, parse_weight(mu)?);
            let cert = separating_vector(&l, &m)?;
            if cli.oracle {
                if !cert.verify(&l, &m) {
                    return Err(mismatch("separation certificate does not verify"));
                }
                let inside = match cert.direction {
                    crate::majorization::SeparationDirection::OutsideCoLambda => &l,
                    crate::majorization::SeparationDirection::LambdaOutsideCoMu => &m,
                };
                let brute = brute_support(cli, inside, &cert.witness)?;
                if brute != support_functional(inside, &cert.witness) {
                    return Err(mismatch("support functional differs from orbit maximum"));
                }
            }
            Ok(json!({
                "direction": cert.direction,
                "witness": rational_weight_json(&cert.witness),
                "gap": qs(&cert.gap),
            }))
        }
        Command::Support { lambda, x } => {
            let (l, x) = (parse_weight(lambda)?, parse_rational_weight(x)?);
            let value = support_functional(&l, &x);
            if cli.oracle && brute_support(cli, &l, &x)? != value {
                return Err(mismatch("support functional differs from orbit maximum"));
            }
            Ok(json!({ "value": qs(&value) }))
        }
        Command::Decompose { n, k } => {
            cli.check_tensor(*n, *k)?;
            let comps = schur_weyl_decompose(*n, *k)?;
            if cli.oracle {
                let total: usize = comps.iter().map(|c| c.dim_s * c.dim_m).sum();
                let ok = total as u128 == (*n as u128).pow(*k as u32)
                    && comps.iter().all(|c| {
                        c.dim_s == c.semistandard
                            && c.dim_m as u128 == c.partition.hook_length_count()
                    });
                if !ok {
                    return Err(mismatch("decomposition differs from tableau counts"));
                }
            }
            serde_json::to_value(&comps).map_err(|e| Error::Parse(e.to_string()))
        }
        Command::WeightsOf { lambda, n } => {
            let shape = parse_partition(lambda)?;
            cli.check_tensor(*n, shape.size())?;
            let weights = weight_multiset(&shape, *n)?;
            let dense: Vec<(Vec<i64>, usize)> = weights
                .iter()
                .map(|(w, m)| Ok((w.to_dense(*n)?, *m)))
                .collect::<Result<_>>()?;
            if cli.oracle {
                let kostka: Vec<(Vec<i64>, usize)> = semistandard_contents(&shape, *n)
                    .into_iter()
                    .map(|(c, m)| (c.into_iter().map(|x| x as i64).collect(), m as usize))
                    .collect();
                let mut sorted = dense.clone();
                sorted.sort();
                let mut kostka = kostka;
                kostka.sort();
                if sorted != kostka {
                    return Err(mismatch("weight multiplicities differ from Kostka numbers"));
                }
            }
            let list: Vec<Value> = dense
                .into_iter()
                .map(|(w, m)| json!({ "weight": w, "multiplicity": m }))
                .collect();
            Ok(json!({ "partition": shape, "n": n, "weights": list }))
        }
        Command::MomentumCheck {
            lambda,
            matrix,
            mode,
            samples,
            n,
        } => {
            let l = parse_weight(lambda)?;
            let norm = *mode == Mode::Norm;
            match matrix {
                Some(m) => momentum_check_matrix(cli, &l, &parse_matrix(m)?, norm),
                None => momentum_harness(cli, &l, n.unwrap_or(l.span().max(1)), *samples, norm),
            }
        }
        Command::Triple { lambda, matrix } => {
            let (l, x) = (parse_weight(lambda)?, parse_matrix(matrix)?);
            let t = triple_decompose(&x, &l, x.dim())?;
            if cli.oracle {
                let d = d_lambda(&l, x.dim())?;
                if t.reconstruct() != x || !t.block_diagonal.commutator(&d).is_zero() {
                    return Err(mismatch("triple decomposition does not reassemble"));
                }
            }
            serde_json::to_value(&t).map_err(|e| Error::Parse(e.to_string()))
        }
        Command::Kaehler { lambda, matrix } => {
            let (l, z) = (parse_weight(lambda)?, parse_matrix(matrix)?);
            // both evaluation routes always run; a disagreement exits with 4
            let v = kaehler_value(&l, &z)?;
            Ok(json!({ "value": qs(&v) }))
        }
        Command::Sk { matrix, k } => {
            let x = parse_matrix(matrix)?;
            let value = spectral_s_k(&x, *k)?;
            if cli.oracle {
                check_sk(&x, *k, &value)?;
            }
            Ok(json!({ "k": k, "value": value }))
        }
    }
}

/// `max_w <w lambda, x>` over an explicitly enumerated orbit.
fn brute_support(cli: &Cli, lambda: &Weight, x: &RationalWeight) -> Result<Q> {
    let n = lambda.support_len() + x.support_len();
    cli.check_ambient(n)?;
    let xs = compressed(x.values(), n);
    let lam = Weight::from_values(&lambda.values());
    Ok(orbit_points(&lam, n)?
        .iter()
        .map(|p| p.0.iter().zip(&xs.0).map(|(a, b)| a * b).sum::<Q>())
        .max()
        .unwrap_or_else(Q::zero))
}

/// `s_k(X) = Tr X + s_{n-k}(-X)`, and the sorted diagonal for diagonal `X`.
fn check_sk(x: &Matrix, k: usize, value: &crate::momentum::Interval) -> Result<()> {
    let spec = Spectrum::of(x)?;
    let n = x.dim();
    if let Some(v) = value.as_exact() {
        let rest = if k == n {
            Q::zero()
        } else {
            match spec.negate().top_sum(n - k)?.as_exact() {
                Some(r) => r.clone(),
                None => return Ok(()),
            }
        };
        if *v != &x.trace().re + rest {
            return Err(mismatch("s_k disagrees with the trace identity"));
        }
    }
    if x.is_diagonal() {
        let mut d = x.real_diag();
        d.sort_by(|a, b| b.cmp(a));
        let direct: Q = d.into_iter().take(k).sum();
        if value.as_exact() != Some(&direct) {
            return Err(mismatch("s_k disagrees with the sorted diagonal"));
        }
    }
    Ok(())
}

fn momentum_check_matrix(cli: &Cli, l: &Weight, x: &Matrix, norm: bool) -> Result<Value> {
    let member = if norm {
        in_norm_momentum_set_matrix(x, l)?
    } else {
        in_momentum_set_matrix(x, l)?
    };
    if cli.oracle && in_momentum_set_via_spectrum(x, l, norm)? != member {
        return Err(mismatch(
            "eigenvalue majorization differs from spectral sums",
        ));
    }
    let exposure = if member && in_momentum_set_matrix(x, l)? {
        serde_json::to_value(strong_exposure_gap(x, l)?).map_err(|e| Error::Parse(e.to_string()))?
    } else {
        Value::Null
    };
    Ok(json!({
        "member": member,
        "coadjoint_orbit": coadjoint_orbit_member(x, l)?,
        "exposure": exposure,
    }))
}

/// Samples momentum-set members and checks `||T - D||_2^2 <= 2 gap` on each.
fn momentum_harness(cli: &Cli, l: &Weight, n: usize, samples: usize, norm: bool) -> Result<Value> {
    if n < l.span() {
        return Err(Error::Dimension {
            expected: l.span(),
            found: n,
        });
    }
    cli.check_ambient(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let mut violations = 0usize;
    let mut tight = 0usize;
    for _ in 0..samples {
        let t = sampling::sample_member(l, n, norm, &mut rng)?;
        if cli.oracle {
            let direct = if norm {
                in_norm_momentum_set_matrix(&t, l)?
            } else {
                in_momentum_set_matrix(&t, l)?
            };
            if !direct || !in_momentum_set_via_spectrum(&t, l, norm)? {
                return Err(mismatch("sampled matrix fails the membership test"));
            }
        }
        let r = strong_exposure_gap(&t, l)?;
        if !r.bound_holds() {
            violations += 1;
        }
        if r.gap.is_zero() {
            tight += 1;
        }
    }
    Ok(json!({
        "n": n,
        "samples": samples,
        "seed": cli.seed,
        "violations": violations,
        "at_orbit": tight,
    }))
}
