//! Group specifications: `builtin:<name>`, `file:<path>`, `prod:<spec>x<spec>`.

use crate::error::{Error, Result};
use crate::group::{make_builtin, parse_multiplication_table, FiniteGroup};

pub fn parse_group_spec(spec: &str) -> Result<FiniteGroup> {
    let spec = spec.trim();
    if let Some(name) = spec.strip_prefix("builtin:") {
        return make_builtin(name);
    }
    if let Some(path) = spec.strip_prefix("file:") {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse { line: 0, msg: format!("cannot read {path}: {e}") })?;
        return parse_multiplication_table(&text);
    }
    if let Some(rest) = spec.strip_prefix("prod:") {
        // try every split at an `x`, leftmost first
        for (k, _) in rest.match_indices('x') {
            let (a, b) = (&rest[..k], &rest[k + 1..]);
            if let (Ok(l), Ok(r)) = (factor(a), factor(b)) {
                return Ok(l.direct_product(&r));
            }
        }
        return Err(Error::UnknownGroup(spec.to_string()));
    }
    Err(Error::UnknownGroup(spec.to_string()))
}

/// A factor of a product: a full spec or a bare builtin name.
fn factor(s: &str) -> Result<FiniteGroup> {
    if s.contains(':') {
        parse_group_spec(s)
    } else {
        make_builtin(s)
    }
}
