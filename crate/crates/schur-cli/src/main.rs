use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use schur_core::algebra::format_q;
use schur_core::apolarity::{apolar_piece, catalecticant, schur_apolarity};
use schur_core::combinatorics::{lr_tableaux, schur_dimension, skew_dimension, Partition, SkewShape};
use schur_core::ideals::ideal_piece;
use schur_core::json::*;
use schur_core::rank::{classify_sigma2, decomposition_membership, lambda_rank_lower_bound, solve_coefficients};
use schur_core::schur::schur_data;
use schur_core::SchurError;

mod reproduce;

#[derive(Parser)]
#[command(name = "schur", version, about = "Exact Schur apolarity computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Matrix,
    Rank,
    Kernel,
}

#[derive(Subcommand)]
enum Command {
    /// Basis of S_λ ℂⁿ indexed by semistandard tableaux
    Basis {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        n: usize,
    },
    /// Apply a dual element to a tensor
    Apolarity {
        #[arg(long)]
        input: String,
        #[arg(long)]
        dual: String,
    },
    /// Catalecticant matrix of a tensor
    Catalecticant {
        #[arg(long)]
        input: String,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_enum, default_value = "rank")]
        emit: Emit,
    },
    /// Degree-ν piece of the ideal of a flag point
    Ideal {
        #[arg(long)]
        point: String,
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
        #[arg(long)]
        no_iterate: bool,
    },
    /// Catalecticant lower bound on the λ-rank
    LowerBound {
        #[arg(long)]
        input: String,
    },
    /// Rank of a border rank ≤ 2 tensor in S_(2,1^(k-1)) ℂⁿ
    ClassifySigma2 {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        input: String,
    },
    /// Whether a tensor lies in the span of flag points
    CheckDecomposition {
        #[arg(long)]
        input: String,
        #[arg(long)]
        points: String,
        #[arg(long)]
        solve: bool,
    },
    /// Littlewood-Richardson coefficient and tableaux
    Lr {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
    },
    /// Dimension of S_λ ℂⁿ, or of S_{λ/μ} ℂⁿ with --inner
    Dimension {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_partition)]
        inner: Option<Partition>,
    },
    /// Recompute a stored example; `list` shows the ids
    Reproduce {
        id: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let s = s.trim();
    if s.is_empty() || s == "0" {
        return Ok(Partition::empty());
    }
    let parts = s
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|e| format!("bad part {x:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

fn max_degree() -> usize {
    std::env::var("SCHUR_MAX_DEGREE").ok().and_then(|v| v.parse().ok()).unwrap_or(10)
}

fn check_degree(p: &Partition) -> schur_core::Result<()> {
    let cap = max_degree();
    if p.size() > cap {
        return Err(SchurError::Precondition(format!(
            "|{p}| = {} exceeds SCHUR_MAX_DEGREE = {cap}",
            p.size()
        )));
    }
    Ok(())
}

fn read_json(path: &str) -> schur_core::Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| SchurError::Schema(format!("cannot read {path}: {e}")))?;
    parse(&text).map_err(|e| SchurError::Schema(format!("{path}: {e}")))
}

fn read_ambient(path: &str) -> schur_core::Result<schur_core::AmbientElement> {
    let a = ambient_from_json(&read_json(path)?)?;
    check_degree(&a.lambda)?;
    Ok(a)
}

fn run(cmd: Command) -> schur_core::Result<Value> {
    Ok(match cmd {
        Command::Basis { lambda, n } => {
            check_degree(&lambda)?;
            let data = schur_data(&lambda, n);
            let elements: Vec<Value> = data
                .tableaux
                .iter()
                .zip(schur_core::schur::schur_basis(&lambda, n))
                .map(|(t, b)| json!({ "tableau": tableau_to_json(t), "element": ambient_to_json(&b) }))
                .collect();
            json!({ "lambda": partition_to_json(&lambda), "n": n, "dimension": elements.len(), "basis": elements })
        }
        Command::Apolarity { input, dual } => {
            let f = read_ambient(&input)?;
            let g = read_ambient(&dual)?;
            if f.dual || !g.dual {
                return Err(SchurError::Schema("--input must be a tensor and --dual a dual element".into()));
            }
            json!({ "result": skew_ambient_to_json(&schur_apolarity(&f, &g)?) })
        }
        Command::Catalecticant { input, mu, emit } => {
            let f = read_ambient(&input)?;
            let c = catalecticant(&f, &mu)?;
            match emit {
                Emit::Rank => json!({ "rank": c.rank(), "shape": [c.matrix.nrows(), c.matrix.ncols()] }),
                Emit::Matrix => json!({
                    "rank": c.rank(),
                    "matrix": matrix_to_json(&c.matrix, |k| json!(k), tableau_to_json),
                    "module_matrix": matrix_to_json(&c.module_matrix(), |i| json!(i), tableau_to_json),
                }),
                Emit::Kernel => {
                    let kernel: Vec<Value> = apolar_piece(&f, &mu)?.iter().map(labeled_vector_to_json).collect();
                    json!({ "rank": c.rank(), "kernel": kernel })
                }
            }
        }
        Command::Ideal { point, nu, no_iterate } => {
            let p = flag_point_from_json(&read_json(&point)?)?;
            check_degree(&p.lambda)?;
            check_degree(&nu)?;
            let piece = ideal_piece(&p, &nu, !no_iterate)?;
            let basis: Vec<Value> = piece.basis.iter().map(ambient_to_json).collect();
            json!({ "nu": partition_to_json(&nu), "iterate": !no_iterate, "dimension": basis.len(), "basis": basis })
        }
        Command::LowerBound { input } => {
            let f = read_ambient(&input)?;
            let lb = lambda_rank_lower_bound(&f)?;
            json!({ "bound": lb.bound, "stage_ranks": lb.stage_ranks })
        }
        Command::ClassifySigma2 { k, n, input } => {
            let t = read_ambient(&input)?;
            serde_json::to_value(classify_sigma2(&t, k, n)?).expect("serializable")
        }
        Command::CheckDecomposition { input, points, solve } => {
            let f = read_ambient(&input)?;
            let pts = flag_points_from_json(&read_json(&points)?)?;
            let member = decomposition_membership(&f, &pts)?;
            let mut out = json!({ "member": member });
            if solve && member {
                let c = solve_coefficients(&f, &pts)?;
                out["coefficients"] = json!(c.iter().map(format_q).collect::<Vec<_>>());
            }
            out
        }
        Command::Lr { lambda, mu, nu } => {
            for p in [&lambda, &mu, &nu] {
                check_degree(p)?;
            }
            let shape = SkewShape::new(nu.clone(), lambda.clone())?;
            let ts = if mu.size() == shape.size() { lr_tableaux(&shape, &mu) } else { vec![] };
            json!({ "coefficient": ts.len(), "tableaux": ts.iter().map(tableau_to_json).collect::<Vec<_>>() })
        }
        Command::Dimension { lambda, n, inner } => {
            check_degree(&lambda)?;
            let d = match inner {
                None => schur_dimension(&lambda, n),
                Some(mu) => skew_dimension(&SkewShape::new(lambda.clone(), mu)?, n),
            };
            json!({ "dimension": d })
        }
        Command::Reproduce { id, seed } => {
            let mut v = reproduce::run(&id, seed)?;
            v["id"] = json!(id);
            v["seed"] = json!(seed);
            v
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(v) => {
            println!("{}", document(v));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                SchurError::Schema(_) => 2,
                SchurError::Precondition(_) | SchurError::Unclassified(_) => 3,
            })
        }
    }
}
