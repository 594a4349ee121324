use affsch::Coweight;

/// Parses `"0,1,-2"` into a coweight; errors carry a 1-based column.
pub fn parse_coweight(flag: &str, s: &str) -> Result<Coweight, String> {
    let mut out = Vec::new();
    let mut col = 1;
    for piece in s.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let tok = piece.trim();
        if tok.is_empty() {
            return Err(format!("{flag}: expected an integer at column {}", col + lead));
        }
        let v = tok
            .parse::<i64>()
            .map_err(|_| format!("{flag}: expected an integer at column {}, found `{tok}`", col + lead))?;
        out.push(v);
        col += piece.len() + 1;
    }
    Ok(Coweight(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_lists() {
        assert_eq!(parse_coweight("--mu", "0,1").unwrap(), Coweight(vec![0, 1]));
        assert_eq!(parse_coweight("--mu", " 3 , -2").unwrap(), Coweight(vec![3, -2]));
    }

    #[test]
    fn reports_columns() {
        assert_eq!(parse_coweight("--mu", "0,x").unwrap_err(), "--mu: expected an integer at column 3, found `x`");
        assert_eq!(parse_coweight("--mu", "1,,2").unwrap_err(), "--mu: expected an integer at column 3");
        assert_eq!(parse_coweight("--mu", "").unwrap_err(), "--mu: expected an integer at column 1");
    }
}
