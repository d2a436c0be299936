//! Reading an algebra from a file or from an inline sum such as `L(2,2,1)+A3`.

use std::path::Path;

use ddisc::quiver::{build_dynkin, build_lambda, direct_sum, kronecker, parse_presentation, BoundQuiverPresentation, DynkinType, LambdaDescriptor};

pub struct Input {
    pub presentation: BoundQuiverPresentation,
    /// Raw bytes the digest is taken over: file contents or the inline text.
    pub bytes: Vec<u8>,
    pub source: &'static str,
}

/// A path that exists is read as presentation text; anything else must be
/// an inline sum.
pub fn load(arg: &str) -> Result<Input, String> {
    let path = Path::new(arg);
    if path.is_file() {
        let bytes = std::fs::read(path).map_err(|e| format!("{arg}: {e}"))?;
        let text = std::str::from_utf8(&bytes).map_err(|_| format!("{arg}: not valid UTF-8"))?;
        let presentation = parse_presentation(text).map_err(|e| format!("{arg}: {e}"))?;
        return Ok(Input {
            presentation,
            bytes,
            source: "file",
        });
    }
    let presentation = parse_inline(arg).map_err(|e| format!("{arg:?} is neither a file nor an inline algebra: {e}"))?;
    Ok(Input {
        presentation,
        bytes: arg.as_bytes().to_vec(),
        source: "inline",
    })
}

/// Terms separated by `+`: `L(r,s,t)` (also `Lambda(..)` or `Λ(..)`),
/// Dynkin names like `A3`, `D4`, `E6`, and `K2` for the Kronecker quiver.
pub fn parse_inline(text: &str) -> Result<BoundQuiverPresentation, String> {
    let terms = text
        .split('+')
        .map(|t| parse_term(t.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(if terms.len() == 1 {
        terms.into_iter().next().expect("one term")
    } else {
        direct_sum(&terms)
    })
}

fn parse_term(term: &str) -> Result<BoundQuiverPresentation, String> {
    if term.is_empty() {
        return Err("empty summand".into());
    }
    if term == "K2" {
        return Ok(kronecker());
    }
    let args = ["Lambda(", "Λ(", "L("]
        .iter()
        .find_map(|prefix| term.strip_prefix(prefix))
        .map(|rest| rest.strip_suffix(')').ok_or_else(|| format!("unclosed parenthesis in {term}")));
    match args {
        Some(inner) => {
            let nums = inner?
                .split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| format!("bad parameter {x:?} in {term}")))
                .collect::<Result<Vec<_>, _>>()?;
            let [r, s, t] = nums[..] else {
                return Err(format!("{term} needs three parameters r,s,t"));
            };
            let d = LambdaDescriptor::new(r, s, t).map_err(|e| e.to_string())?;
            build_lambda(d).map_err(|e| e.to_string())
        }
        None => {
            let ty: DynkinType = term.parse().map_err(|e: ddisc::quiver::QuiverError| e.to_string())?;
            build_dynkin(ty).map_err(|e| e.to_string())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ddisc::quiver::{grothendieck_rank, is_isomorphic};

    #[test]
    fn inline_terms() {
        let p = parse_inline("L(2,2,1) + A3").unwrap();
        assert_eq!(grothendieck_rank(&p), 6);
        let q = parse_inline("Λ(1,2,0)").unwrap();
        assert!(is_isomorphic(&q, &parse_inline("Lambda(1, 2, 0)").unwrap()));
        assert_eq!(parse_inline("K2").unwrap().arrow_count(), 2);
    }

    #[test]
    fn inline_errors() {
        for bad in ["", "L(1,2)", "L(3,2,0)", "L(1,2,0", "B3", "A3+", "L(a,2,0)"] {
            assert!(parse_inline(bad).is_err(), "{bad}");
        }
    }
}
