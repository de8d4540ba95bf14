//! Instance value lists: `5`, `3,7,11`, `3..21`, or a mix such as `3..9,15`.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Values {
    pub values: Vec<u64>,
    /// Whether any `a..b` item was used; ranged sweeps skip values a case
    /// cannot take instead of reporting them.
    pub ranged: bool,
}

pub fn parse(text: &str) -> Result<Values, String> {
    let mut values = Vec::new();
    let mut ranged = false;
    for item in text.split(',').map(str::trim) {
        let num = |s: &str| s.trim().parse::<u64>().map_err(|_| format!("`{s}` is not a nonnegative integer"));
        if let Some((lo, hi)) = item.split_once("..") {
            let (lo, hi) = (num(lo)?, num(hi.trim_start_matches('='))?);
            if lo > hi {
                return Err(format!("empty range `{item}`"));
            }
            ranged = true;
            values.extend(lo..=hi);
        } else {
            values.push(num(item)?);
        }
    }
    values.sort_unstable();
    values.dedup();
    Ok(Values { values, ranged })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        assert_eq!(parse("3..9").unwrap(), Values { values: vec![3, 4, 5, 6, 7, 8, 9], ranged: true });
        assert_eq!(parse("3,7, 11").unwrap().values, vec![3, 7, 11]);
        assert!(!parse("4").unwrap().ranged);
        assert_eq!(parse("3..5,9").unwrap().values, vec![3, 4, 5, 9]);
        assert!(parse("9..3").is_err());
        assert!(parse("x").is_err());
        assert!(parse("").is_err());
    }
}
