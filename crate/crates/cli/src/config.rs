//! Flag parsing and validation for the `hzeta` subcommands.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hermitian_zeta::FundamentalDiscriminant;

/// An inclusive integer range, written `a..b` on the command line; a bare
/// `a` means `a..a`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct InclusiveRange {
    pub start: i64,
    pub end: i64,
}

impl InclusiveRange {
    pub fn iter(self) -> impl Iterator<Item = i64> {
        self.start..=self.end
    }
}

impl fmt::Display for InclusiveRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

impl FromStr for InclusiveRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = match s.split_once("..") {
            Some((a, b)) => (a, b),
            None => (s, s),
        };
        let start: i64 = a
            .trim()
            .parse()
            .map_err(|_| format!("invalid range bound `{a}`"))?;
        let end: i64 = b
            .trim()
            .parse()
            .map_err(|_| format!("invalid range bound `{b}`"))?;
        if start > end {
            return Err(format!("range `{s}` is empty"));
        }
        Ok(Self { start, end })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "hzeta",
    version,
    about = "Exact zeta functions of binary Hermitian forms: verification runs, special-value tables, and representation counts"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Run the exact identity and lemma checks over a grid
    Verify(VerifyArgs),
    /// Emit exact special values with float approximations
    Table(TableArgs),
    /// Emit representation counts r and r*
    Count(CountArgs),
    /// Emit Eisenstein series q-expansion coefficients
    Eisenstein(EisensteinArgs),
    /// Compare enumerated counts against the closed-form coefficients
    Oracle(OracleArgs),
}

#[derive(Args)]
pub struct OutputOpts {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this path instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads (default: HZETA_THREADS, then all cores)
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
pub struct VerifyArgs {
    /// Negative fundamental discriminants
    #[arg(long = "disc", num_args = 1.., required = true)]
    pub disc: Vec<i64>,
    /// Inclusive range of k (series are checked at weight 2k+1)
    #[arg(long, default_value = "1")]
    pub k: InclusiveRange,
    /// Sign classes, a subset of {0, 1}
    #[arg(long = "j", num_args = 1.., default_values_t = [0u8, 1])]
    pub j: Vec<u8>,
    /// Number of q-expansion coefficients compared
    #[arg(long = "N", default_value_t = 200)]
    pub truncation: usize,
    /// Shift range for the divisor-sum and counting checks
    #[arg(long, default_value = "-10..10", allow_hyphen_values = true)]
    pub delta: InclusiveRange,
    /// Modulus range for the counting checks
    #[arg(long, default_value = "1..40")]
    pub n: InclusiveRange,
    #[command(flatten)]
    pub output: OutputOpts,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
pub struct TableArgs {
    /// Negative fundamental discriminants
    #[arg(long = "disc", num_args = 1.., required = true)]
    pub disc: Vec<i64>,
    /// Inclusive range of k
    #[arg(long, default_value = "1")]
    pub k: InclusiveRange,
    /// Sign classes, a subset of {0, 1}
    #[arg(long = "j", num_args = 1.., default_values_t = [0u8, 1])]
    pub j: Vec<u8>,
    /// Shift range (positive)
    #[arg(long, default_value = "1..10", allow_hyphen_values = true)]
    pub delta: InclusiveRange,
    #[command(flatten)]
    pub output: OutputOpts,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
pub struct CountArgs {
    /// Negative fundamental discriminants
    #[arg(long = "disc", num_args = 1.., required = true)]
    pub disc: Vec<i64>,
    /// Shift range
    #[arg(long, default_value = "-10..10", allow_hyphen_values = true)]
    pub delta: InclusiveRange,
    /// Modulus range
    #[arg(long, default_value = "1..20")]
    pub n: InclusiveRange,
    #[command(flatten)]
    pub output: OutputOpts,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
pub struct EisensteinArgs {
    /// Negative fundamental discriminants
    #[arg(long = "disc", num_args = 1.., required = true)]
    pub disc: Vec<i64>,
    /// Inclusive range of k
    #[arg(long, default_value = "1")]
    pub k: InclusiveRange,
    /// Number of coefficients emitted (indices 0..=N)
    #[arg(long = "N", default_value_t = 200)]
    pub truncation: usize,
    #[command(flatten)]
    pub output: OutputOpts,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
pub struct OracleArgs {
    /// Negative fundamental discriminants
    #[arg(long = "disc", num_args = 1.., required = true)]
    pub disc: Vec<i64>,
    /// Shift range
    #[arg(long, default_value = "-10..10", allow_hyphen_values = true)]
    pub delta: InclusiveRange,
    /// Modulus range
    #[arg(long, default_value = "1..40")]
    pub n: InclusiveRange,
    #[command(flatten)]
    pub output: OutputOpts,
}

/// Parse and validate the discriminant list: each entry must be a negative
/// fundamental discriminant. Returns them sorted ascending, deduplicated.
pub fn validate_discs(discs: &[i64]) -> Result<Vec<FundamentalDiscriminant>, String> {
    let mut out = Vec::with_capacity(discs.len());
    for &d in discs {
        let fd = FundamentalDiscriminant::new(d).map_err(|e| e.to_string())?;
        if !fd.is_negative() {
            return Err(format!("discriminant {d} must be negative"));
        }
        out.push(fd);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

pub fn validate_k(k: InclusiveRange) -> Result<Vec<u32>, String> {
    if k.start < 1 {
        return Err(format!("k must be at least 1, got {}", k.start));
    }
    Ok(k.iter().map(|v| v as u32).collect())
}

pub fn validate_j(j: &[u8]) -> Result<Vec<u8>, String> {
    let mut out = Vec::new();
    for &v in j {
        if v > 1 {
            return Err(format!("j must be 0 or 1, got {v}"));
        }
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out.sort_unstable();
    Ok(out)
}

pub fn validate_truncation(n: usize) -> Result<usize, String> {
    if n < 1 {
        return Err("N must be at least 1".to_string());
    }
    Ok(n)
}

pub fn validate_modulus_range(n: InclusiveRange) -> Result<InclusiveRange, String> {
    if n.start < 1 {
        return Err(format!("moduli must be positive, got {}", n.start));
    }
    Ok(n)
}
