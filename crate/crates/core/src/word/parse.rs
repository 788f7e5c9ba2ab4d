use alloc::string::ToString;

use super::{GeneratorSymbol, MappingWord};
use crate::curves::CurveName;
use crate::{Error, Result};

fn parse_symbol(s: &str) -> Option<GeneratorSymbol> {
    match s {
        "F1" => Some(GeneratorSymbol::F1),
        "F2" => Some(GeneratorSymbol::F2),
        "F3" => Some(GeneratorSymbol::F3),
        "S" | "Sigma" => Some(GeneratorSymbol::Sigma),
        _ => s.strip_prefix('T')?.parse::<CurveName>().ok().map(GeneratorSymbol::TwistOf),
    }
}

/// Parses whitespace-separated tokens such as `Ta1`, `Ta1^-1`, `F2`, `F3^2`.
/// Errors carry the byte offset of the offending token.
pub fn parse_word(input: &str) -> Result<MappingWord> {
    let mut letters = alloc::vec::Vec::new();
    let mut offset = 0;
    for token in input.split_whitespace() {
        let position = offset + input[offset..].find(token).unwrap_or(0);
        offset = position + token.len();
        let err = || Error::Parse { position, token: token.to_string() };
        let (head, exp) = match token.split_once('^') {
            Some((h, e)) => (h, e.parse::<i64>().map_err(|_| err())?),
            None => (token, 1),
        };
        if exp == 0 {
            return Err(err());
        }
        letters.push((parse_symbol(head).ok_or_else(err)?, exp));
    }
    Ok(MappingWord::new(letters))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let w = parse_word("Ta1 Ta1^-1  F2 F3^2 Tx Td2 S").unwrap();
        assert_eq!(
            w.letters(),
            &[
                (GeneratorSymbol::TwistOf(CurveName::A(1)), 1),
                (GeneratorSymbol::TwistOf(CurveName::A(1)), -1),
                (GeneratorSymbol::F2, 1),
                (GeneratorSymbol::F3, 2),
                (GeneratorSymbol::TwistOf(CurveName::LanternX), 1),
                (GeneratorSymbol::TwistOf(CurveName::ChainBoundary(2)), 1),
                (GeneratorSymbol::Sigma, 1),
            ]
        );
        assert!(parse_word("").unwrap().is_empty());
    }

    #[test]
    fn rejects_unknown_tokens_with_position() {
        assert_eq!(parse_word("Ta1 F4 F2"), Err(Error::Parse { position: 4, token: "F4".into() }));
        assert_eq!(parse_word("F1^x"), Err(Error::Parse { position: 0, token: "F1^x".into() }));
        assert_eq!(parse_word("F1 F1^0"), Err(Error::Parse { position: 3, token: "F1^0".into() }));
        assert!(parse_word("Tq7").is_err());
    }
}
