use std::fmt::Write;

use clap::ValueEnum;
use frobgb::{Field, Ideal, Polynomial, RjjRow};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Machine,
}

/// Text output is an ideal file (one polynomial per line), so it can be fed
/// back into any subcommand.
pub fn polys<F: Field>(format: Format, command: &str, elements: &[Polynomial<F>]) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            for g in elements {
                let _ = writeln!(out, "{g}");
            }
        }
        Format::Machine => {
            let _ = writeln!(out, "command={command}");
            let _ = writeln!(out, "size={}", elements.len());
            for (i, g) in elements.iter().enumerate() {
                let _ = writeln!(out, "element.{i}={g}");
            }
        }
    }
    out
}

/// An ideal printed through its reduced Gröbner basis.
pub fn ideal<F: Field>(format: Format, command: &str, ideal: &Ideal<F>) -> String {
    polys(format, command, ideal.groebner_basis().elements())
}

pub fn value(format: Format, command: &str, key: &str, v: impl std::fmt::Display) -> String {
    match format {
        Format::Text => format!("{v}\n"),
        Format::Machine => format!("command={command}\n{key}={v}\n"),
    }
}

pub fn rows(format: Format, rows: &[RjjRow], truncated: bool) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            let _ = writeln!(out, "(q, length, length/q^d)");
            for r in rows {
                let _ = writeln!(out, "{r}");
            }
            if truncated {
                let _ = writeln!(out, "grid truncated by time budget");
            }
        }
        Format::Machine => {
            let _ = writeln!(out, "command=rjj");
            let _ = writeln!(out, "rows={}", rows.len());
            let _ = writeln!(out, "truncated={truncated}");
            for (i, r) in rows.iter().enumerate() {
                let _ = writeln!(out, "row.{i}={},{},{}", r.q, r.length, r.normalized);
            }
        }
    }
    out
}
