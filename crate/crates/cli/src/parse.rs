//! Input grammars: scales as "N: e1,e2,...", compositions as "(a,b,c)",
//! cover specs as "SCALE; SIGMA[; ROOT]", event lists as one residue per
//! line with '#' comments.

use orbitcover_core::{IntervalComposition, PitchClassSet, Scale};

use crate::err::CliError;

fn bad(input: &str, what: &str) -> CliError {
    CliError::Parse(format!("cannot parse {what} from {input:?}"))
}

fn number(token: &str, input: &str, what: &str) -> Result<usize, CliError> {
    token.trim().parse().map_err(|_| bad(input, what))
}

pub fn parse_scale(input: &str) -> Result<Scale, CliError> {
    let (universe, rest) = input
        .split_once(':')
        .ok_or_else(|| bad(input, "a scale (expected \"N: e1,e2,...\")"))?;
    let universe = number(universe, input, "a universe size")?;
    let elements = rest
        .split(',')
        .map(|t| number(t, input, "a scale element"))
        .collect::<Result<Vec<_>, _>>()?;
    let set = PitchClassSet::new(universe, elements)
        .map_err(|e| CliError::Parse(format!("invalid scale {input:?}: {e}")))?;
    Ok(Scale::new(set))
}

pub fn parse_sigma(input: &str) -> Result<IntervalComposition, CliError> {
    let inner = input
        .trim()
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| bad(input, "a composition (expected \"(a,b,...)\")"))?;
    let parts = inner
        .split(',')
        .map(|t| number(t, input, "a composition part"))
        .collect::<Result<Vec<_>, _>>()?;
    IntervalComposition::new(parts)
        .map_err(|e| CliError::Parse(format!("invalid composition {input:?}: {e}")))
}

/// A cover spec bundles a scale, a composition, and an optional root:
/// "12: 5,7,9,10,0,2,4; (2,2,3); 5". Without a root the cover is rooted at
/// the scale's first normal-order element.
pub fn parse_cover_spec(
    input: &str,
) -> Result<(Scale, IntervalComposition, Option<usize>), CliError> {
    let mut pieces = input.split(';');
    let scale = parse_scale(
        pieces
            .next()
            .ok_or_else(|| bad(input, "a cover spec (expected \"SCALE; SIGMA[; ROOT]\")"))?,
    )?;
    let sigma = parse_sigma(
        pieces
            .next()
            .ok_or_else(|| bad(input, "a cover spec (expected \"SCALE; SIGMA[; ROOT]\")"))?,
    )?;
    let root = pieces
        .next()
        .map(|t| number(t, input, "a cover root"))
        .transpose()?;
    if pieces.next().is_some() {
        return Err(bad(
            input,
            "a cover spec (expected \"SCALE; SIGMA[; ROOT]\")",
        ));
    }
    Ok((scale, sigma, root))
}

/// One residue per line; blank lines and lines starting with '#' ignored.
pub fn parse_events(text: &str, source: &str) -> Result<Vec<usize>, CliError> {
    text.lines()
        .map(str::trim)
        .filter(|line| !line.is_empty() && !line.starts_with('#'))
        .map(|line| {
            line.parse()
                .map_err(|_| CliError::Parse(format!("bad event {line:?} in {source}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scales_parse_with_whitespace() {
        let s = parse_scale(" 12 : 0, 2,4,5,7,9,11 ").unwrap();
        assert_eq!(s.universe(), 12);
        assert_eq!(s.base().elements(), &[0, 2, 4, 5, 7, 9, 11]);
    }

    #[test]
    fn scale_parse_failures() {
        for input in ["12", "x: 1,2", "12: 1,x", "12: ", "0: 1"] {
            assert!(
                matches!(parse_scale(input), Err(CliError::Parse(_))),
                "{input}"
            );
        }
        // Out-of-range and duplicate residues fail scale validation.
        assert!(matches!(parse_scale("7: 0,9"), Err(CliError::Parse(_))));
        assert!(matches!(parse_scale("7: 0,0"), Err(CliError::Parse(_))));
    }

    #[test]
    fn sigmas_need_parentheses() {
        assert_eq!(parse_sigma("(2, 2, 3)").unwrap().parts(), &[2, 2, 3]);
        assert!(matches!(parse_sigma("2,2,3"), Err(CliError::Parse(_))));
        assert!(matches!(parse_sigma("(2,0,3)"), Err(CliError::Parse(_))));
        assert!(matches!(parse_sigma("()"), Err(CliError::Parse(_))));
    }

    #[test]
    fn cover_specs_with_and_without_roots() {
        let (s, sigma, root) = parse_cover_spec("7: 0,1,2,3,4,5,6; (2,2,3); 3").unwrap();
        assert_eq!(s.len(), 7);
        assert_eq!(sigma.parts(), &[2, 2, 3]);
        assert_eq!(root, Some(3));
        let (_, _, root) = parse_cover_spec("7: 0,1,2,3,4,5,6; (2,2,3)").unwrap();
        assert_eq!(root, None);
        assert!(parse_cover_spec("7: 0,1,2; (1,1,1); 0; 9").is_err());
        assert!(parse_cover_spec("7: 0,1,2").is_err());
    }

    #[test]
    fn event_lists_skip_comments_and_blanks() {
        let text = "# melody\n5\n\n  9\n0\n";
        assert_eq!(parse_events(text, "test").unwrap(), vec![5, 9, 0]);
        assert!(parse_events("5\nnope\n", "test").is_err());
    }
}
