//! Graph expressions: `family[:params]` or an edge-list literal.

use crate::error::{Error, Result};
use crate::graph::{cycle, double_snake, lollipop, p2_two_paths, path, star, wheel5, Graph};

fn parse_err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

/// Comma-separated non-negative integers starting at byte `offset`.
fn parse_params(s: &str, offset: usize) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    let mut pos = offset;
    for token in s.split(',') {
        let lead = token.len() - token.trim_start().len();
        let value = token
            .trim()
            .parse()
            .map_err(|_| parse_err(pos + lead, format!("expected an integer, found '{}'", token.trim())))?;
        out.push((value, pos + lead));
        pos += token.len() + 1;
    }
    Ok(out)
}

/// Parses `path:5`, `cycle:7`, `star:3`, `wheel5`, `p2:4,6`, `lollipop:9`,
/// `dsnake:8`, or `n; u-v,...`. Error positions are byte offsets into `s`.
pub fn parse_graph(s: &str) -> Result<Graph> {
    if s.contains(';') {
        return s.parse();
    }
    let lead = s.len() - s.trim_start().len();
    let body = s.trim();
    let (name, params) = match body.split_once(':') {
        Some((name, rest)) => (name, Some((rest, lead + name.len() + 1))),
        None => (body, None),
    };
    let params = match params {
        Some((rest, offset)) => parse_params(rest, offset)?,
        None => Vec::new(),
    };
    let arity = match name {
        "wheel5" => 0,
        "path" | "cycle" | "star" | "lollipop" | "dsnake" => 1,
        "p2" => 2,
        _ => {
            return Err(parse_err(
                lead,
                format!(
                    "unknown family '{name}', expected path, cycle, star, wheel5, p2, lollipop, dsnake or an edge list 'n; u-v,...'"
                ),
            ))
        }
    };
    if params.len() != arity {
        let at = params.get(arity).map_or(lead + body.len(), |p| p.1);
        return Err(parse_err(
            at,
            format!("{name} takes {arity} parameter(s), got {}", params.len()),
        ));
    }
    let at = params.first().map_or(lead, |p| p.1);
    let built = match name {
        "wheel5" => Ok(wheel5()),
        "path" => path(params[0].0),
        "cycle" => cycle(params[0].0),
        "star" => star(params[0].0),
        "lollipop" => lollipop(params[0].0),
        "dsnake" => double_snake(params[0].0),
        _ => p2_two_paths(params[0].0, params[1].0).map(|(g, _)| g),
    };
    built.map_err(|e| parse_err(at, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn position(s: &str) -> usize {
        match parse_graph(s) {
            Err(Error::Parse { position, .. }) => position,
            other => panic!("expected a parse error for {s:?}, got {other:?}"),
        }
    }

    #[test]
    fn families() {
        assert_eq!(parse_graph("path:5").unwrap(), path(5).unwrap());
        assert_eq!(parse_graph(" cycle:7 ").unwrap(), cycle(7).unwrap());
        assert_eq!(parse_graph("wheel5").unwrap(), wheel5());
        assert_eq!(parse_graph("p2:4, 6").unwrap().n_vertices(), 12);
        assert_eq!(parse_graph("dsnake:8").unwrap().n_vertices(), 8);
        assert_eq!(parse_graph("3; 0-1,1-2").unwrap(), path(3).unwrap());
    }

    #[test]
    fn error_positions() {
        assert_eq!(position("path:x"), 5);
        assert_eq!(position("p2:4,y"), 5);
        assert_eq!(position("tree:4"), 0);
        assert_eq!(position("p2:4"), 4);
        assert_eq!(position("wheel5:1"), 7);
        assert_eq!(position("cycle:2"), 6);
        assert_eq!(position("3; 0-1,1-x"), 9);
    }
}
