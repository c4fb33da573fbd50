//! Symbol stream framing.
//!
//! Text mode is whitespace-separated canonical integers; `?` marks an
//! erased symbol on decode input. Raw mode is one byte per symbol and is
//! only defined for GF(256).

use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use balanced_rs::{Field, FieldElement, Gf};
use clap::ValueEnum;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum StreamFormat {
    #[default]
    Text,
    Raw,
}

pub fn read_input(path: Option<&Path>) -> Result<Vec<u8>, CliError> {
    match path {
        Some(p) => Ok(fs::read(p)?),
        None => {
            let mut buf = Vec::new();
            io::stdin().read_to_end(&mut buf)?;
            Ok(buf)
        }
    }
}

pub fn write_output(path: Option<&Path>, bytes: &[u8]) -> Result<(), CliError> {
    match path {
        Some(p) => Ok(fs::write(p, bytes)?),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(bytes)?;
            Ok(out.flush()?)
        }
    }
}

fn check_raw(field: &Gf) -> Result<(), CliError> {
    if field.order() != 256 {
        return Err(CliError::Format(format!(
            "raw format requires GF(256), matrix is over GF({})",
            field.order()
        )));
    }
    Ok(())
}

/// Parses symbols; `None` entries are erasures.
pub fn parse(
    field: &Gf,
    bytes: &[u8],
    format: StreamFormat,
    allow_erasures: bool,
) -> Result<Vec<Option<FieldElement>>, CliError> {
    match format {
        StreamFormat::Raw => {
            check_raw(field)?;
            Ok(bytes
                .iter()
                .map(|&b| Some(field.element(b as u64).expect("byte below 256")))
                .collect())
        }
        StreamFormat::Text => {
            let text = std::str::from_utf8(bytes)
                .map_err(|_| CliError::Format("text input is not UTF-8".into()))?;
            text.split_whitespace()
                .map(|tok| {
                    if tok == "?" && allow_erasures {
                        return Ok(None);
                    }
                    let v: u64 = tok
                        .parse()
                        .map_err(|_| CliError::Format(format!("bad symbol {tok:?}")))?;
                    field
                        .element(v)
                        .map(Some)
                        .map_err(|e| CliError::Format(e.to_string()))
                })
                .collect()
        }
    }
}

/// Serializes blocks; text mode writes one block per line.
pub fn render(
    field: &Gf,
    blocks: &[Vec<FieldElement>],
    format: StreamFormat,
) -> Result<Vec<u8>, CliError> {
    match format {
        StreamFormat::Raw => {
            check_raw(field)?;
            Ok(blocks.iter().flatten().map(|s| s.value() as u8).collect())
        }
        StreamFormat::Text => {
            let mut out = String::new();
            for block in blocks {
                let line: Vec<String> = block.iter().map(|s| s.to_string()).collect();
                out.push_str(&line.join(" "));
                out.push('\n');
            }
            Ok(out.into_bytes())
        }
    }
}
