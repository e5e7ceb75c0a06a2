//! Rendering of sequences, polynomials and identity reports.
//!
//! Rationals always print as `p/q` (or `p` when `q = 1`) with no whitespace.
//! In JSON they are strings, and polynomials are arrays of coefficient
//! strings in ascending degree.

use std::fmt::Display;

use clap::ValueEnum;
use eulerian2::identities::{Expectation, IdentityReport, Value};
use eulerian2::{Polynomial, Rational};
use num_bigint::BigInt;
use serde_json::{json, Map};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
    /// OEIS b-file: one `n a(n)` pair per line (integer sequences only).
    Bfile,
}

fn csv_line<I, T>(fields: I) -> String
where
    I: IntoIterator<Item = T>,
    T: AsRef<[u8]>,
{
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(fields).expect("writing to memory");
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("utf-8 input")
}

fn strings<T: Display>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn joined<T: Display>(items: &[T], sep: &str) -> String {
    strings(items).join(sep)
}

fn index_header(offset: usize, len: usize) -> String {
    csv_line((offset..offset + len).map(|i| i.to_string()))
}

/// A flat sequence of values starting at index `offset`.
///
/// `plain_sep` separates values in plain output. b-files need `integer`.
pub fn sequence<T: Display>(
    values: &[T],
    offset: usize,
    format: Format,
    header: bool,
    plain_sep: &str,
    integer: bool,
) -> Result<String, CliError> {
    Ok(match format {
        Format::Plain => format!("{}\n", joined(values, plain_sep)),
        Format::Csv => {
            let mut out = String::new();
            if header {
                out.push_str(&index_header(offset, values.len()));
            }
            out.push_str(&csv_line(strings(values)));
            out
        }
        Format::Json => format!("{}\n", json!(strings(values))),
        Format::Bfile => {
            if !integer {
                return Err(CliError::Usage(
                    "b-file output requires an integer sequence".into(),
                ));
            }
            bfile(values, offset)
        }
    })
}

/// A triangle given row by row; b-file output flattens it by rows.
pub fn triangle(rows: &[Vec<BigInt>], offset: usize, format: Format, header: bool) -> String {
    match format {
        Format::Plain => rows
            .iter()
            .map(|r| format!("{}\n", joined(r, ", ")))
            .collect(),
        Format::Csv => {
            let mut out = String::new();
            if header {
                let width = rows.iter().map(Vec::len).max().unwrap_or(0);
                out.push_str(&index_header(0, width));
            }
            for row in rows {
                out.push_str(&csv_line(strings(row)));
            }
            out
        }
        Format::Json => {
            let nested: Vec<Vec<String>> = rows.iter().map(|r| strings(r)).collect();
            format!("{}\n", json!(nested))
        }
        Format::Bfile => {
            let flat: Vec<&BigInt> = rows.iter().flatten().collect();
            bfile(&flat, offset)
        }
    }
}

fn bfile<T: Display>(values: &[T], offset: usize) -> String {
    values
        .iter()
        .enumerate()
        .map(|(i, v)| format!("{} {v}\n", offset + i))
        .collect()
}

pub fn polynomial(p: &Polynomial, format: Format) -> Result<String, CliError> {
    match format {
        Format::Plain => Ok(format!("{p}\n")),
        Format::Csv => Ok(csv_line(coefficient_strings(p))),
        Format::Json => Ok(format!("{}\n", polynomial_json(p))),
        Format::Bfile => Err(CliError::Usage(
            "b-file output is not available for polynomials".into(),
        )),
    }
}

pub fn scalar(r: &Rational, format: Format) -> Result<String, CliError> {
    match format {
        Format::Plain | Format::Csv => Ok(format!("{r}\n")),
        Format::Json => Ok(format!("{}\n", json!(r.to_string()))),
        Format::Bfile => Err(CliError::Usage(
            "b-file output is not available for a single value".into(),
        )),
    }
}

fn coefficient_strings(p: &Polynomial) -> Vec<String> {
    if p.is_zero() {
        vec!["0".to_string()]
    } else {
        strings(p.coeffs())
    }
}

fn polynomial_json(p: &Polynomial) -> serde_json::Value {
    json!(coefficient_strings(p))
}

pub fn value_json(v: &Value) -> serde_json::Value {
    match v {
        Value::Rational(r) => json!(r.to_string()),
        Value::Polynomial(p) => polynomial_json(p),
        Value::List(items) => json!(strings(items)),
    }
}

/// `{"identity", "params", "lhs", "rhs", "holds", "note"?}`.
pub fn report_json(r: &IdentityReport) -> serde_json::Value {
    let params: Map<String, serde_json::Value> = r
        .params
        .iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    let mut obj = Map::new();
    obj.insert("identity".into(), json!(r.identity.as_str()));
    obj.insert("params".into(), params.into());
    obj.insert("lhs".into(), value_json(&r.lhs));
    obj.insert("rhs".into(), value_json(&r.rhs));
    obj.insert("holds".into(), json!(r.holds));
    if let Some(note) = &r.note {
        obj.insert("note".into(), json!(note));
    }
    obj.into()
}

fn params_text(r: &IdentityReport) -> String {
    r.params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn status(r: &IdentityReport) -> &'static str {
    match (r.holds, r.expected) {
        (true, Expectation::Holds) => "PASS",
        (false, Expectation::Holds) => "FAIL",
        (false, Expectation::Fails) => "XFAIL",
        (true, Expectation::Fails) => "XPASS",
    }
}

pub fn reports(
    reports: &[IdentityReport],
    format: Format,
    header: bool,
) -> Result<String, CliError> {
    match format {
        Format::Plain => Ok(reports
            .iter()
            .map(|r| {
                let mut line = format!(
                    "{:<5} {} {} lhs={} rhs={}",
                    status(r),
                    r.identity,
                    params_text(r),
                    r.lhs,
                    r.rhs
                );
                if let Some(note) = &r.note {
                    line.push_str("  # ");
                    line.push_str(note);
                }
                line.push('\n');
                line
            })
            .collect()),
        Format::Csv => {
            let mut out = String::new();
            if header {
                out.push_str("identity,params,lhs,rhs,holds,status,note\n");
            }
            for r in reports {
                out.push_str(&csv_line([
                    r.identity.as_str().to_string(),
                    params_text(r),
                    r.lhs.to_string(),
                    r.rhs.to_string(),
                    r.holds.to_string(),
                    status(r).to_string(),
                    r.note.clone().unwrap_or_default(),
                ]));
            }
            Ok(out)
        }
        Format::Json => {
            let all: Vec<_> = reports.iter().map(report_json).collect();
            Ok(format!("{}\n", serde_json::Value::Array(all)))
        }
        Format::Bfile => Err(CliError::Usage(
            "b-file output is not available for reports".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use eulerian2::identities::check_reciprocal_binomial_sum;
    use eulerian2::rational::{int, ratio};

    /// Parses b-file text back into `(index, value)` pairs, skipping `#` comments
    /// and blank lines.
    fn parse_bfile(text: &str) -> Result<Vec<(u64, BigInt)>, CliError> {
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|line| {
                let bad = || CliError::Usage(format!("malformed b-file line {line:?}"));
                let (n, a) = line.split_once(' ').ok_or_else(bad)?;
                Ok((n.parse().map_err(|_| bad())?, a.parse().map_err(|_| bad())?))
            })
            .collect()
    }

    #[test]
    fn plain_and_csv_sequences() {
        let b = [int(1), ratio(-1, 2), ratio(1, 6)];
        assert_eq!(
            sequence(&b, 0, Format::Plain, false, ", ", false).unwrap(),
            "1, -1/2, 1/6\n"
        );
        assert_eq!(
            sequence(&b, 0, Format::Csv, false, ", ", false).unwrap(),
            "1,-1/2,1/6\n"
        );
        assert_eq!(
            sequence(&b, 0, Format::Csv, true, ", ", false).unwrap(),
            "0,1,2\n1,-1/2,1/6\n"
        );
        assert_eq!(
            sequence(&b, 0, Format::Json, false, ", ", false).unwrap(),
            "[\"1\",\"-1/2\",\"1/6\"]\n"
        );
        assert!(sequence(&b, 0, Format::Bfile, false, ", ", false).is_err());
    }

    #[test]
    fn bfile_round_trip() {
        let values: Vec<BigInt> = [1, 22, 58, 24].into_iter().map(BigInt::from).collect();
        let text = sequence(&values, 1, Format::Bfile, false, " ", true).unwrap();
        assert_eq!(text, "1 1\n2 22\n3 58\n4 24\n");
        let parsed = parse_bfile(&text).unwrap();
        assert_eq!(
            parsed.iter().map(|(_, v)| v.clone()).collect::<Vec<_>>(),
            values
        );
        assert_eq!(parsed[0].0, 1);
        assert!(parse_bfile("1 x\n").is_err());
        assert_eq!(
            parse_bfile("# comment\n\n0 5\n").unwrap(),
            vec![(0, BigInt::from(5))]
        );
    }

    #[test]
    fn polynomial_rendering() {
        let p = Polynomial::from_coeffs(vec![int(0), ratio(-1, 12), ratio(1, 4)]);
        assert_eq!(polynomial(&p, Format::Plain).unwrap(), "0, -1/12, 1/4\n");
        assert_eq!(polynomial(&p, Format::Csv).unwrap(), "0,-1/12,1/4\n");
        assert_eq!(
            polynomial(&p, Format::Json).unwrap(),
            "[\"0\",\"-1/12\",\"1/4\"]\n"
        );
        assert_eq!(
            polynomial(&Polynomial::zero(), Format::Json).unwrap(),
            "[\"0\"]\n"
        );
    }

    #[test]
    fn report_json_shape() {
        let r = check_reciprocal_binomial_sum(1).unwrap();
        let v = report_json(&r);
        assert_eq!(v["identity"], "theorem3");
        assert_eq!(v["params"]["n"], 1);
        assert_eq!(v["lhs"], "1/3");
        assert_eq!(v["rhs"], "1/3");
        assert_eq!(v["holds"], true);
        assert!(v.get("note").is_none());
    }

    #[test]
    fn csv_quotes_polynomials() {
        let line = csv_line(["a", "0, 1/2", "b"]);
        assert_eq!(line, "a,\"0, 1/2\",b\n");
    }
}
