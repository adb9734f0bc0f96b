use std::fmt::Write as _;
use std::io::Write;

use num_traits::{One, Signed, Zero};
use serde::Serialize;
use terwilliger::{ExactMatrix, GaussRat, IdentityCheck};

use crate::{Common, Failure, Format};

/// One line of a verification report.
#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub identity: String,
    pub passed: bool,
    pub first_discrepancy: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
}

impl Record {
    pub fn new(identity: impl Into<String>, passed: bool) -> Self {
        Record {
            identity: identity.into(),
            passed,
            first_discrepancy: None,
            i: None,
            j: None,
        }
    }

    pub fn from_check(prefix: &str, c: IdentityCheck) -> Self {
        Record {
            identity: format!("{prefix}{}", c.identity),
            passed: c.passed,
            first_discrepancy: c.first_discrepancy,
            i: None,
            j: None,
        }
    }
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    #[serde(rename = "D")]
    dim: usize,
    suite: &'a str,
    passed: bool,
    checks: &'a [Record],
}

fn csv_text(write: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    write(&mut w).map_err(|e| Failure::Internal(e.to_string()))?;
    let bytes = w.into_inner().map_err(|e| Failure::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Failure::Internal(e.to_string()))
}

pub fn render_records(format: Format, dim: usize, suite: &str, records: &[Record]) -> Result<String, Failure> {
    let passed = records.iter().all(|r| r.passed);
    match format {
        Format::Json => to_json(&VerifyReport {
            dim,
            suite,
            passed,
            checks: records,
        }),
        Format::Csv => csv_text(|w| {
            w.write_record(["theorem_id", "i", "j", "passed", "first_discrepancy"])?;
            for r in records {
                let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
                let disc = r.first_discrepancy.map(|[a, b]| format!("{a};{b}")).unwrap_or_default();
                w.write_record([r.identity.clone(), opt(r.i), opt(r.j), r.passed.to_string(), disc])?;
            }
            Ok(())
        }),
        Format::Pretty => {
            let mut s = String::new();
            for r in records {
                let tag = if r.passed { "PASS" } else { "FAIL" };
                let _ = write!(s, "{tag}  {}", r.identity);
                if let (Some(i), Some(j)) = (r.i, r.j) {
                    let _ = write!(s, " (i={i}, j={j})");
                }
                if let Some([a, b]) = r.first_discrepancy {
                    let _ = write!(s, "  first discrepancy at [{a},{b}]");
                }
                s.push('\n');
            }
            let failed = records.iter().filter(|r| !r.passed).count();
            let _ = writeln!(s, "{suite} D={dim}: {} checks, {failed} failed", records.len());
            Ok(s)
        }
    }
}

pub fn render_matrix(format: Format, m: &ExactMatrix) -> Result<String, Failure> {
    let dump = m.to_dump();
    match format {
        Format::Json => to_json(&dump),
        Format::Csv => csv_text(|w| {
            w.write_record(["row", "col", "re", "im"])?;
            for (r, c, re, im) in &dump.entries {
                w.write_record([r.to_string(), c.to_string(), re.clone(), im.clone()])?;
            }
            Ok(())
        }),
        Format::Pretty => {
            let cells: Vec<Vec<String>> = (0..m.rows())
                .map(|r| (0..m.cols()).map(|c| compact(&m.get(r, c))).collect())
                .collect();
            let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
            let mut s = String::new();
            for row in cells {
                let line: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
                let _ = writeln!(s, "{}", line.join(" "));
            }
            Ok(s)
        }
    }
}

/// `3`, `-i`, `1/2-3/2i` rather than the wire form.
fn compact(z: &GaussRat) -> String {
    let (re, im) = (z.re(), z.im());
    let im_part = |lead: bool| {
        let sign = if im.is_negative() {
            "-"
        } else if lead {
            ""
        } else {
            "+"
        };
        let mag = im.abs();
        if mag.is_one() {
            format!("{sign}i")
        } else {
            format!("{sign}{mag}i")
        }
    };
    match (re.is_zero(), im.is_zero()) {
        (_, true) => re.to_string(),
        (true, false) => im_part(true),
        (false, false) => format!("{re}{}", im_part(false)),
    }
}

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| Failure::Internal(e.to_string()))
}

pub fn emit(common: &Common, text: &str) -> Result<(), Failure> {
    match &common.output {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Failure::Io(e.to_string()))
        }
    }
}

pub fn progress(msg: impl AsRef<str>) {
    eprintln!("{}", msg.as_ref());
}
