//! Element syntax: either a JSON list of `{exponents, coeff}` terms or a sum
//! of products such as `X2*X1 - 2*X1^3 + 1`. Products are evaluated in the
//! algebra, so factors may come in any order.

use ihoe_core::gf::CoeffRepr;
use ihoe_core::orealg::{Algebra, OrePresentation, PbwElement, TermRepr};

use crate::CliError;

fn bad(s: &str, why: &str) -> CliError {
    CliError::Usage(format!("cannot parse element {s:?}: {why}"))
}

pub fn parse_element(base: &OrePresentation, s: &str) -> Result<PbwElement, CliError> {
    let f = base.field();
    let t = s.trim();
    if t.starts_with('[') {
        let terms: Vec<TermRepr> = serde_json::from_str(t).map_err(|e| bad(s, &e.to_string()))?;
        return Ok(PbwElement::from_repr(f, base.n(), &terms)?);
    }
    let mut total = PbwElement::zero();
    for (sign, term) in split_terms(t).ok_or_else(|| bad(s, "empty term"))? {
        let mut acc = base.one();
        for factor in term.split('*').map(str::trim) {
            acc = base.mul(&acc, &parse_factor(base, factor).ok_or_else(|| bad(s, factor))?)?;
        }
        if sign {
            total = total.sub(f, &acc);
        } else {
            total = total.add(f, &acc);
        }
    }
    Ok(total)
}

/// Splits on top-level `+`/`-`, keeping a `-` that follows `^` as part of
/// an exponent. The flag is true for subtracted terms.
fn split_terms(s: &str) -> Option<Vec<(bool, &str)>> {
    let mut out = Vec::new();
    let mut start = 0;
    let mut neg = false;
    let bytes = s.as_bytes();
    for (i, &c) in bytes.iter().enumerate() {
        if (c == b'+' || c == b'-') && !(i > 0 && bytes[i - 1] == b'^') {
            let part = s[start..i].trim();
            if !part.is_empty() {
                out.push((neg, part));
            } else if i > 0 && !out.is_empty() {
                return None;
            }
            neg = c == b'-';
            start = i + 1;
        }
    }
    let part = s[start..].trim();
    if part.is_empty() {
        return None;
    }
    out.push((neg, part));
    Some(out)
}

fn parse_factor(base: &OrePresentation, s: &str) -> Option<PbwElement> {
    let f = base.field();
    if let Ok(c) = s.parse::<i64>() {
        return Some(PbwElement::constant(base.n(), f.from_int(c)));
    }
    let rest = s.strip_prefix('X').or_else(|| s.strip_prefix('x'))?;
    let (idx, exp) = match rest.split_once('^') {
        Some((i, e)) => (i, e.trim_matches(|c| c == '(' || c == ')').parse::<i32>().ok()?),
        None => (rest, 1),
    };
    let i: usize = idx.parse().ok()?;
    if i == 0 || i > base.n() {
        return None;
    }
    let mut exps = vec![0; base.n()];
    exps[i - 1] = exp;
    if exp < 0 && !(i == 1 && base.laurent_first()) {
        return None;
    }
    Some(base.mono(&exps))
}

/// A scalar given as an integer or a JSON coordinate list.
pub fn parse_scalar(s: &str) -> Result<CoeffRepr, CliError> {
    serde_json::from_str(s.trim()).map_err(|_| CliError::Usage(format!("cannot parse scalar {s:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ihoe_core::gf::FieldCtx;
    use ihoe_core::ihoe2::{presentation, Ihoe2Params, Param};

    fn base() -> std::sync::Arc<OrePresentation> {
        let f = FieldCtx::new(3, 1).unwrap();
        let params = Ihoe2Params::zero(&f).with(Param::D(0), f.one()).unwrap();
        presentation(&params, None).unwrap()
    }

    #[test]
    fn products_are_normal_ordered() {
        let b = base();
        let f = b.field().clone();
        // X2 X1 = X1 X2 + X1
        let e = parse_element(&b, "X2*X1").unwrap();
        assert_eq!(e, b.mono(&[1, 1]).add(&f, &b.mono(&[1, 0])));
        let e = parse_element(&b, "X2*X1 - X1*X2 - X1").unwrap();
        assert!(e.is_zero());
        let e = parse_element(&b, "-2*X1^2 + 1").unwrap();
        assert_eq!(e, b.mono(&[2, 0]).add(&f, &b.one()));
    }

    #[test]
    fn json_and_errors() {
        let b = base();
        let e = parse_element(&b, r#"[{"exponents":[0,2],"coeff":[1]}]"#).unwrap();
        assert_eq!(e, b.mono(&[0, 2]));
        for s in ["", "X3", "X1^-1", "Y", "X1 + + X2", "X1 +"] {
            assert!(parse_element(&b, s).is_err(), "{s}");
        }
        assert_eq!(parse_scalar("[1,2]").unwrap(), CoeffRepr::Coords(vec![1, 2]));
        assert!(parse_scalar("x").is_err());
    }
}
