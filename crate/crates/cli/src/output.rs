//! Record types and writers shared by the subcommands.
//!
//! Rows are computed in canonical grid order and emitted as-is, so output is
//! byte-identical across runs and thread counts.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::config::Format;

pub fn open_writer(out: &Option<PathBuf>) -> Result<Box<dyn Write>, String> {
    match out {
        Some(path) => {
            let file =
                File::create(path).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            Ok(Box::new(BufWriter::new(file)))
        }
        None => Ok(Box::new(io::stdout())),
    }
}

fn finish(result: io::Result<()>, out: &Option<PathBuf>) -> Result<(), String> {
    result.map_err(|e| {
        let target = out
            .as_deref()
            .map_or_else(|| "stdout".to_string(), |p: &Path| p.display().to_string());
        format!("cannot write {target}: {e}")
    })
}

/// One special value `Z((-1)^(j-1) Delta, 2k)` as a symbolic triple plus a
/// float approximation.
#[derive(Serialize)]
pub struct TableRow {
    #[serde(rename = "D")]
    pub d: i64,
    pub k: u32,
    pub j: u8,
    #[serde(rename = "Delta")]
    pub delta: i64,
    pub num: String,
    pub den: String,
    pub pi_exp: i64,
    #[serde(rename = "sqrtD_exp")]
    pub sqrt_d_exp: i64,
    pub float_approx: f64,
    pub paper_eq: &'static str,
}

pub fn write_table(rows: &[TableRow], format: Format, out: &Option<PathBuf>) -> Result<(), String> {
    let mut w = open_writer(out)?;
    let result = match format {
        Format::Csv => (|| {
            writeln!(w, "D,k,j,Delta,num,den,pi_exp,sqrtD_exp,float_approx")?;
            for r in rows {
                writeln!(
                    w,
                    "{},{},{},{},{},{},{},{},{}",
                    r.d, r.k, r.j, r.delta, r.num, r.den, r.pi_exp, r.sqrt_d_exp, r.float_approx
                )?;
            }
            Ok(())
        })(),
        Format::Json => serde_json::to_writer_pretty(&mut w, rows)
            .map_err(io::Error::other)
            .and_then(|()| writeln!(w)),
        Format::Text => (|| {
            for r in rows {
                writeln!(
                    w,
                    "D={} k={} j={} Delta={}  Z = {}/{} * pi^{} * |D|^({}/2)  ~ {}",
                    r.d, r.k, r.j, r.delta, r.num, r.den, r.pi_exp, r.sqrt_d_exp, r.float_approx
                )?;
            }
            Ok(())
        })(),
    };
    finish(result, out)
}

/// One representation-count row.
#[derive(Serialize)]
pub struct CountRow {
    #[serde(rename = "D")]
    pub d: i64,
    #[serde(rename = "Delta")]
    pub delta: i64,
    pub n: u64,
    pub r: u64,
    pub r_star: u64,
    pub paper_eq: &'static str,
}

pub fn write_counts(
    rows: &[CountRow],
    format: Format,
    out: &Option<PathBuf>,
) -> Result<(), String> {
    let mut w = open_writer(out)?;
    let result = match format {
        Format::Csv => (|| {
            writeln!(w, "D,Delta,n,r,r_star")?;
            for r in rows {
                writeln!(w, "{},{},{},{},{}", r.d, r.delta, r.n, r.r, r.r_star)?;
            }
            Ok(())
        })(),
        Format::Json => serde_json::to_writer_pretty(&mut w, rows)
            .map_err(io::Error::other)
            .and_then(|()| writeln!(w)),
        Format::Text => (|| {
            for r in rows {
                writeln!(
                    w,
                    "D={} Delta={} n={}  r={} r*={}",
                    r.d, r.delta, r.n, r.r, r.r_star
                )?;
            }
            Ok(())
        })(),
    };
    finish(result, out)
}

/// One q-expansion coefficient of an Eisenstein series.
#[derive(Serialize)]
pub struct EisensteinRow {
    #[serde(rename = "D")]
    pub d: i64,
    pub k: u32,
    pub index: usize,
    pub num: String,
    pub den: String,
    pub paper_eq: &'static str,
}

pub fn write_eisenstein(
    rows: &[EisensteinRow],
    format: Format,
    out: &Option<PathBuf>,
) -> Result<(), String> {
    let mut w = open_writer(out)?;
    let result = match format {
        Format::Csv => (|| {
            writeln!(w, "D,k,index,num,den")?;
            for r in rows {
                writeln!(w, "{},{},{},{},{}", r.d, r.k, r.index, r.num, r.den)?;
            }
            Ok(())
        })(),
        Format::Json => serde_json::to_writer_pretty(&mut w, rows)
            .map_err(io::Error::other)
            .and_then(|()| writeln!(w)),
        Format::Text => (|| {
            for r in rows {
                writeln!(w, "D={} k={} a_{} = {}/{}", r.d, r.k, r.index, r.num, r.den)?;
            }
            Ok(())
        })(),
    };
    finish(result, out)
}

/// Outcome of one named check over one grid cell.
#[derive(Serialize)]
pub struct CheckRecord {
    pub check: &'static str,
    #[serde(rename = "D")]
    pub d: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<u8>,
    pub passed: bool,
    pub detail: String,
    pub paper_eq: &'static str,
}

#[derive(Serialize)]
pub struct CheckReport {
    pub checks: Vec<CheckRecord>,
    pub total: usize,
    pub failed: usize,
}

impl CheckReport {
    pub fn new(checks: Vec<CheckRecord>) -> Self {
        let total = checks.len();
        let failed = checks.iter().filter(|c| !c.passed).count();
        Self {
            checks,
            total,
            failed,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

pub fn write_report(
    report: &CheckReport,
    format: Format,
    out: &Option<PathBuf>,
) -> Result<(), String> {
    let mut w = open_writer(out)?;
    let result = match format {
        Format::Json => serde_json::to_writer_pretty(&mut w, report)
            .map_err(io::Error::other)
            .and_then(|()| writeln!(w)),
        Format::Csv => (|| {
            writeln!(w, "check,D,k,j,passed,detail")?;
            for c in &report.checks {
                writeln!(
                    w,
                    "{},{},{},{},{},{}",
                    c.check,
                    c.d,
                    c.k.map_or(String::new(), |k| k.to_string()),
                    c.j.map_or(String::new(), |j| j.to_string()),
                    c.passed,
                    c.detail
                )?;
            }
            Ok(())
        })(),
        Format::Text => (|| {
            for c in &report.checks {
                let status = if c.passed { "[PASS]" } else { "[FAIL]" };
                let mut cell = format!("D={}", c.d);
                if let Some(k) = c.k {
                    cell.push_str(&format!(" k={k}"));
                }
                if let Some(j) = c.j {
                    cell.push_str(&format!(" j={j}"));
                }
                writeln!(w, "{status} {} {} ({})", c.check, cell, c.detail)?;
            }
            writeln!(
                w,
                "summary: {} checks, {} passed, {} failed",
                report.total,
                report.total - report.failed,
                report.failed
            )?;
            Ok(())
        })(),
    };
    finish(result, out)
}
