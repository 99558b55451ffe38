//! Deterministic report serialization.
//!
//! Every artifact the binary writes goes through this module so that the
//! same report always serializes to the same bytes: JSON objects keep their
//! insertion order, reals are printed with 17 significant digits (enough to
//! round-trip any finite f64 exactly), and non-finite values use the
//! sentinels `NA` (NaN), `inf`, and `-inf` in both formats. CSV output
//! follows RFC 4180: comma separators, CRLF record endings, a mandatory
//! header row, and quoting only where a cell would otherwise be ambiguous.

use std::fs;
use std::path::Path;

use crate::CliError;

// ----------------------------------------------------------------------
// number formatting
// ----------------------------------------------------------------------

/// Format a real with 17 significant digits (`d.16e` scientific notation),
/// or a sentinel token for non-finite values. Finite output parses back to
/// the identical f64 bit pattern, signed zero included.
pub fn fmt_f64(x: f64) -> String {
    if x.is_nan() {
        "NA".to_string()
    } else if x == f64::INFINITY {
        "inf".to_string()
    } else if x == f64::NEG_INFINITY {
        "-inf".to_string()
    } else {
        format!("{x:.16e}")
    }
}

// ----------------------------------------------------------------------
// JSON
// ----------------------------------------------------------------------

/// A JSON value with deterministic serialization: object keys stay in
/// insertion order and reals go through [`fmt_f64`]. Non-finite reals are
/// emitted as the sentinel strings `"NA"`, `"inf"`, `"-inf"` because JSON
/// has no tokens for them.
pub enum Json {
    Null,
    Bool(bool),
    Uint(u64),
    Real(f64),
    Str(String),
    Array(Vec<Json>),
    Object(Vec<(&'static str, Json)>),
}

impl Json {
    pub fn str(s: impl Into<String>) -> Self {
        Json::Str(s.into())
    }

    pub fn reals(values: &[f64]) -> Self {
        Json::Array(values.iter().map(|&v| Json::Real(v)).collect())
    }

    pub fn real_rows(rows: &[Vec<f64>]) -> Self {
        Json::Array(rows.iter().map(|r| Json::reals(r)).collect())
    }

    pub fn strings<S: AsRef<str>>(values: &[S]) -> Self {
        Json::Array(values.iter().map(|s| Json::str(s.as_ref())).collect())
    }

    /// Render with two-space indentation and a trailing newline.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write(&mut out, 0);
        out.push('\n');
        out
    }

    fn write(&self, out: &mut String, indent: usize) {
        match self {
            Json::Null => out.push_str("null"),
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::Uint(u) => out.push_str(&u.to_string()),
            Json::Real(x) => {
                if x.is_finite() {
                    out.push_str(&fmt_f64(*x));
                } else {
                    // JSON numbers cannot express NaN/inf; fall back to the
                    // same sentinel tokens the CSV writer uses, as strings.
                    out.push('"');
                    out.push_str(&fmt_f64(*x));
                    out.push('"');
                }
            }
            Json::Str(s) => write_json_string(out, s),
            Json::Array(items) => {
                if items.is_empty() {
                    out.push_str("[]");
                    return;
                }
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    newline(out, indent + 1);
                    item.write(out, indent + 1);
                }
                newline(out, indent);
                out.push(']');
            }
            Json::Object(fields) => {
                if fields.is_empty() {
                    out.push_str("{}");
                    return;
                }
                out.push('{');
                for (i, (key, value)) in fields.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    newline(out, indent + 1);
                    write_json_string(out, key);
                    out.push_str(": ");
                    value.write(out, indent + 1);
                }
                newline(out, indent);
                out.push('}');
            }
        }
    }
}

fn newline(out: &mut String, indent: usize) {
    out.push('\n');
    for _ in 0..indent {
        out.push_str("  ");
    }
}

fn write_json_string(out: &mut String, s: &str) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                out.push_str(&format!("\\u{:04x}", c as u32));
            }
            c => out.push(c),
        }
    }
    out.push('"');
}

// ----------------------------------------------------------------------
// CSV
// ----------------------------------------------------------------------

/// Quote a cell only when RFC 4180 requires it (embedded comma, quote, or
/// line break); everything this binary emits is normally quote-free.
fn csv_cell(cell: &str) -> String {
    if cell.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

/// Render a header plus rows as an RFC 4180 document (CRLF records).
pub fn render_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    let mut push_row = |cells: &mut dyn Iterator<Item = &str>| {
        let mut first = true;
        for cell in cells {
            if !first {
                out.push(',');
            }
            out.push_str(&csv_cell(cell));
            first = false;
        }
        out.push_str("\r\n");
    };
    push_row(&mut header.iter().copied());
    for row in rows {
        push_row(&mut row.iter().map(|s| s.as_str()));
    }
    out
}

// ----------------------------------------------------------------------
// file output
// ----------------------------------------------------------------------

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents)
        .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
}

// ====== tests ======

#[cfg(test)]
mod tests {
    use super::*;
    use medrad_core::rng::RngStream;

    #[test]
    fn fmt_f64_round_trips_exactly() {
        let mut cases = vec![
            0.0,
            -0.0,
            0.1,
            1.0 / 3.0,
            1.0,
            -1.0,
            1e-300,
            1e300,
            f64::MIN_POSITIVE,
            5e-324, // smallest subnormal
            f64::MAX,
            -f64::MAX,
            std::f64::consts::PI,
        ];
        let mut rng = RngStream::new(20_240_817);
        for _ in 0..2000 {
            let u = rng.next_uniform();
            let scale = 10f64.powi((rng.next_uniform() * 600.0 - 300.0) as i32);
            cases.push((u - 0.5) * scale);
            cases.push(rng.next_normal());
        }
        for x in cases {
            let s = fmt_f64(x);
            let back: f64 = s.parse().expect("formatted real must parse");
            assert_eq!(
                back.to_bits(),
                x.to_bits(),
                "{x:?} -> {s} -> {back:?} is not bit-identical"
            );
        }
    }

    #[test]
    fn fmt_f64_sentinels() {
        assert_eq!(fmt_f64(f64::NAN), "NA");
        assert_eq!(fmt_f64(f64::INFINITY), "inf");
        assert_eq!(fmt_f64(f64::NEG_INFINITY), "-inf");
    }

    #[test]
    fn json_renders_fixed_order_and_sentinels() {
        let value = Json::Object(vec![
            ("b", Json::Uint(2)),
            ("a", Json::Real(f64::NAN)),
            ("c", Json::Array(vec![Json::Bool(true), Json::Null])),
        ]);
        let text = value.render();
        // Insertion order, not alphabetical; NaN as the "NA" sentinel string.
        let b = text.find("\"b\"").unwrap();
        let a = text.find("\"a\"").unwrap();
        assert!(b < a);
        assert!(text.contains("\"a\": \"NA\""));
        assert!(text.contains("null"));
    }

    #[test]
    fn json_escapes_strings() {
        let value = Json::str("a\"b\\c\nd\u{1}");
        assert_eq!(value.render(), "\"a\\\"b\\\\c\\nd\\u0001\"\n");
    }

    #[test]
    fn csv_quotes_only_when_needed() {
        let text = render_csv(
            &["x", "note"],
            &[vec!["1.5".to_string(), "a,b \"q\"".to_string()]],
        );
        assert_eq!(text, "x,note\r\n1.5,\"a,b \"\"q\"\"\"\r\n");
    }

    #[test]
    fn csv_uses_crlf_records() {
        let text = render_csv(&["v"], &[vec!["1".into()], vec!["2".into()]]);
        assert_eq!(text, "v\r\n1\r\n2\r\n");
    }
}
