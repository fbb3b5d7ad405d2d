//! The stable JSON envelope wrapping every `--json` result.
//!
//! Text output is for humans and carries no stability promise; the JSON
//! envelope is schema-stable within a major version (see `schemas/`).

use serde::Serialize;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Serialize)]
struct Envelope<P: Serialize, R: Serialize> {
    schema_version: &'static str,
    command: &'static str,
    params: P,
    result: R,
}

/// Print the envelope as one compact JSON line; byte-identical for
/// identical inputs.
pub fn print_json<P: Serialize, R: Serialize>(
    command: &'static str,
    params: P,
    result: R,
) -> anyhow::Result<()> {
    let envelope = Envelope {
        schema_version: SCHEMA_VERSION,
        command,
        params,
        result,
    };
    println!("{}", serde_json::to_string(&envelope)?);
    Ok(())
}
