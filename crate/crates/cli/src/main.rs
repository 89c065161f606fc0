//! `adams`: command-line access to the K-theory toolkit.
//!
//! Exit status is 0 on success, 2 when a verification produces a
//! counterexample or witness, and 1 on usage or input errors.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

#[derive(Parser, Debug)]
#[command(name = "adams", version, about = "Adams operations, λ-rings and extensions of K(S^2n)")]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for grid scans.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Extension groups Extalg_Ψ and Extalg_λ.
    Extalg {
        #[command(subcommand)]
        kind: ExtalgKind,
    },
    /// G_{n,n'} = gcd of l^n - l^n'.
    Gn {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        nprime: u32,
        /// Compute the gcd directly over 2 <= l <= lmax.
        #[arg(long)]
        brute: bool,
        #[arg(long, default_value_t = 500)]
        lmax: u64,
    },
    /// The p-adic exponent g^p_j.
    Gpj {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        j: u64,
        /// Compute from gcd of k^j - 1 directly.
        #[arg(long)]
        brute: bool,
        #[arg(long, default_value_t = adams_core::sphere_extalg::DEFAULT_WINDOW)]
        window: usize,
    },
    /// Table of stable extension groups for k = 1..kmax.
    Stable {
        #[arg(long)]
        kmax: u32,
    },
    /// Odd Hopf invariant questions.
    Hopf {
        #[command(subcommand)]
        kind: HopfKind,
    },
    /// Universal polynomials.
    Poly {
        #[command(subcommand)]
        kind: PolyKind,
    },
    /// Free Ψ-rings and K(S^2n).
    Ring {
        #[command(subcommand)]
        kind: RingKind,
    },
    /// Newton identities.
    Newton {
        #[command(subcommand)]
        kind: NewtonKind,
    },
    /// Explicit extension models.
    Lab {
        #[command(subcommand)]
        kind: LabKind,
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Dims {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub nprime: u32,
}

#[derive(Subcommand, Debug)]
pub enum ExtalgKind {
    Psi(Dims),
    Lambda(Dims),
}

#[derive(Subcommand, Debug)]
pub enum HopfKind {
    /// Whether (n, n') admits an odd Hopf invariant.
    Feasible(Dims),
    /// All n <= nmax for which (n, a·n) is feasible.
    Adams {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        nmax: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum PolyKind {
    /// P_i with λ^i(rs) = P_i(λ^1 r, .., λ^i r; λ^1 s, .., λ^i s).
    UniversalP {
        #[arg(long)]
        i: u64,
        #[arg(long, default_value_t = adams_core::symmetric_kernel::DEFAULT_MAX_WEIGHT)]
        max_weight: u64,
    },
    /// P_{i,j} with λ^i(λ^j r) = P_{i,j}(λ^1 r, .., λ^{ij} r).
    UniversalPij {
        #[arg(long)]
        i: u64,
        #[arg(long)]
        j: u64,
        #[arg(long, default_value_t = adams_core::symmetric_kernel::DEFAULT_MAX_WEIGHT)]
        max_weight: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum RingKind {
    /// Ψ^k on the free Ψ-ring, generators written a1, a2, ...
    ApplyPsi {
        #[arg(long)]
        k: u64,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
    /// Tests Ψ^p(x) ≡ x^p mod p on generators and their products.
    CheckSpecial {
        /// `free` or `sphere:N`.
        #[arg(long)]
        ring: String,
        #[arg(long, value_delimiter = ',', default_values_t = vec![2u64, 3, 5, 7])]
        primes: Vec<u64>,
    },
}

#[derive(Subcommand, Debug)]
pub enum NewtonKind {
    /// λ^i of an element, recovered from its Adams operations.
    LambdaFromPsi {
        #[arg(long)]
        i: usize,
        /// `z`, `sphere:N` or `free`.
        #[arg(long)]
        ring: String,
        /// An integer, `u,b` for u + b·y, or a polynomial.
        #[arg(long, allow_hyphen_values = true)]
        elem: String,
    },
}

#[derive(Args, Debug, Clone)]
pub struct ModelArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub nprime: u32,
    #[arg(long, allow_negative_numbers = true)]
    pub h: BigInt,
    #[arg(long, allow_negative_numbers = true)]
    pub nu2: Option<BigInt>,
    /// Explicit values `k:ν_k,...`, overriding those derived from --nu2.
    #[arg(long, allow_hyphen_values = true)]
    pub nu: Option<String>,
    #[arg(long, default_value_t = 12)]
    pub kmax: u64,
}

#[derive(Subcommand, Debug)]
pub enum LabKind {
    /// Checks commutation, multiplicativity and specialness of one model.
    Verify(ModelArgs),
    /// Lists the class labels (h, z mod G) realised by models.
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        nprime: u32,
        /// A value, a list `0,1,2` or an inclusive range `0..2`.
        #[arg(long, allow_hyphen_values = true)]
        h: String,
        #[arg(long, default_value_t = 12)]
        kmax: u64,
        /// Keep only special models.
        #[arg(long)]
        special: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.status)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
