//! Output sink: stdout by default, or a file when `--out` is given.

use std::io::Write as _;
use std::path::Path;

use crate::CliError;

/// Writes `content` as-is to `path` when given, to stdout otherwise.
/// Callers are responsible for the trailing newline.
pub fn emit(path: Option<&Path>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, content).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".to_string(),
                    source,
                })
        }
    }
}
