//! Sign tables as comma-separated `+1`/`-1`, one row per line.

use cayley_core::{Sign, SignMatrix};

use crate::{Error, Result};

/// Rows joined by `\n`, without a trailing newline.
pub fn render_csv(table: &SignMatrix) -> String {
    table
        .rows()
        .map(|row| row.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn parse_csv(text: &str) -> Result<SignMatrix> {
    let rows = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .enumerate()
        .map(|(i, line)| {
            line.split(',')
                .map(|cell| match cell.trim() {
                    "+1" | "1" => Ok(Sign::Plus),
                    "-1" => Ok(Sign::Minus),
                    other => Err(Error::Csv {
                        row: i,
                        msg: format!("unexpected entry {other:?}"),
                    }),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SignMatrix::from_rows(rows)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use cayley_core::twist::twist_table;
    use cayley_core::TwistId;

    #[test]
    fn corner_block() {
        let t = twist_table(TwistId::OMEGA2, 1).unwrap();
        assert_eq!(render_csv(&t), "+1,+1\n+1,-1");
    }

    #[test]
    fn round_trip() {
        for id in TwistId::ALL {
            let t = twist_table(id, 4).unwrap();
            assert_eq!(parse_csv(&render_csv(&t)).unwrap(), t);
        }
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(parse_csv("+1,0\n+1,-1").is_err());
        assert!(parse_csv("+1,+1\n+1").is_err());
        assert!(parse_csv("+1,+1,+1\n+1,+1,+1\n+1,+1,+1").is_err());
    }
}
