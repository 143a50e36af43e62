//! Text formats for vectors and weight files.

use crate::error::{Error, Result};
use crate::model::{CartanModel, RatVector};
use crate::rational::{self, Rational};

fn parse_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(|x| rational::parse(x.trim())).collect()
}

/// Comma-separated rationals; the E6 model takes `n;x1,...,x6`.
pub fn parse_vector(model: &CartanModel, s: &str) -> Result<RatVector> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    let coords = if model.has_epsilon_axis() {
        let (n, xi) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("expected n;x1,...,x6, got {s:?}")))?;
        let mut c = vec![rational::parse(n.trim())?];
        c.extend(parse_list(xi)?);
        c
    } else {
        parse_list(s)?
    };
    model.vector(coords)
}

pub fn format_vector(model: &CartanModel, v: &RatVector) -> String {
    let parts = v.to_strings();
    if model.has_epsilon_axis() {
        format!("{};{}", parts[0], parts[1..].join(","))
    } else {
        parts.join(",")
    }
}

/// One weight per line as `mult * coords` or bare `coords`; `#` starts a
/// comment.
pub fn parse_weights(model: &CartanModel, text: &str) -> Result<Vec<(RatVector, u64)>> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (mult, coords) = match line.split_once('*') {
            Some((m, c)) => (
                m.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("line {}: bad multiplicity {m:?}", lineno + 1)))?,
                c,
            ),
            None => (1, line),
        };
        let v = parse_vector(model, coords)
            .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        out.push((v, mult));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn plain_and_structured_vectors() {
        let m = CartanModel::sum_zero(3);
        assert_eq!(parse_vector(&m, "1,0,-1").unwrap(), RatVector::from_i64(&[1, 0, -1]));
        assert!(parse_vector(&m, "1,0,0").is_err());
        let e6 = CartanModel::epsilon_sum_zero(6);
        let v = parse_vector(&e6, "1;1/2,1/2,1/2,-1/2,-1/2,-1/2").unwrap();
        assert_eq!(v.coords()[0], rat(1, 1));
        assert_eq!(format_vector(&e6, &v), "1;1/2,1/2,1/2,-1/2,-1/2,-1/2");
        assert!(parse_vector(&e6, "1,0,0,0,0,0,0").is_err());
    }

    #[test]
    fn weight_file() {
        let m = CartanModel::euclidean(2);
        let w = parse_weights(&m, "# comment\n2 * 1,0\n\n0,1\n").unwrap();
        assert_eq!(w, vec![(RatVector::from_i64(&[1, 0]), 2), (RatVector::from_i64(&[0, 1]), 1)]);
        assert!(parse_weights(&m, "x * 1,0").is_err());
    }
}
