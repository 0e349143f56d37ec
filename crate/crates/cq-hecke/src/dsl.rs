//! Word DSL for Hecke elements: whitespace-separated letters `s<k>` with an
//! optional `^-1`, e.g. `s1 s2 s1^-1`.

use crate::elem::{HeckeElem, HeckeError};

pub fn parse_word(input: &str, n: usize) -> Result<HeckeElem, HeckeError> {
    let mut acc = HeckeElem::one(n);
    for tok in input.split_whitespace() {
        let (body, inverse) = match tok.strip_suffix("^-1") {
            Some(b) => (b, true),
            None => (tok, false),
        };
        let idx: usize = body
            .strip_prefix('s')
            .and_then(|s| s.parse().ok())
            .ok_or(HeckeError::IndexOutOfRange(0, n))?;
        acc = if inverse {
            acc.right_mul_sigma_inv(idx)?
        } else {
            acc.right_mul_sigma(idx)?
        };
    }
    Ok(acc)
}

/// JSON-ish dump of terms: list of `[word, coefficient]` pairs.
pub fn dump_terms(x: &HeckeElem) -> Vec<(String, String)> {
    let mut rows: Vec<(String, String)> = x
        .terms()
        .map(|(w, c)| {
            let word = w
                .reduced_word()
                .iter()
                .map(|i| format!("s{}", i + 1))
                .collect::<Vec<_>>()
                .join(" ");
            let word = if word.is_empty() { "1".into() } else { word };
            (word, c.to_string())
        })
        .collect();
    rows.sort();
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braid_word_roundtrip() {
        let x = parse_word("s1 s2 s1", 3).unwrap();
        let y = parse_word("s2 s1 s2", 3).unwrap();
        assert_eq!(x, y); // braid relation

        let z = parse_word("s1 s1^-1", 3).unwrap();
        assert_eq!(z, HeckeElem::one(3));
    }

    #[test]
    fn bad_index() {
        assert!(parse_word("s3", 3).is_err());
        assert!(parse_word("t1", 3).is_err());
    }
}
