//! Reference tables shipped with the crate.
//!
//! Row files hold one field per line as
//! `t|delta_factorization|conductor_factorization|case|class_members`;
//! list files hold whitespace-separated parameters. Lines starting with `#`
//! are comments.

use std::fmt;
use std::fs;
use std::path::Path;

use crate::arith::Factorization;

pub const TABLE1_FILE: &str = "table1.txt";
pub const TABLE1_CASE_C_FILE: &str = "table1_case_c.txt";
pub const TABLE2_FILE: &str = "table2.txt";

const TABLE1: &str = include_str!("../../fixtures/table1.txt");
const TABLE1_CASE_C: &str = include_str!("../../fixtures/table1_case_c.txt");
const TABLE2: &str = include_str!("../../fixtures/table2.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureRow {
    pub t: i64,
    pub delta: Factorization,
    pub conductor: Factorization,
    /// `a`, `b` or `c`.
    pub case: char,
    /// The other parameters defining the same field.
    pub class_members: Vec<i64>,
}

impl fmt::Display for FixtureRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members: Vec<String> = self.class_members.iter().map(i64::to_string).collect();
        write!(f, "{}|{}|{}|{}|{}", self.t, self.delta, self.conductor, self.case, members.join(","))
    }
}

impl std::str::FromStr for FixtureRow {
    type Err = String;

    fn from_str(line: &str) -> Result<Self, Self::Err> {
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        let [t, delta, conductor, case, members] = fields[..] else {
            return Err(format!("expected 5 '|'-separated fields in {line:?}"));
        };
        let t = t.parse().map_err(|_| format!("bad t in {line:?}"))?;
        let case = match case {
            "a" | "b" | "c" => case.chars().next().unwrap(),
            _ => return Err(format!("bad case {case:?} in {line:?}")),
        };
        let class_members = members
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| s.trim().parse().map_err(|_| format!("bad class member {s:?}")))
            .collect::<Result<_, _>>()?;
        Ok(Self { t, delta: delta.parse()?, conductor: conductor.parse()?, case, class_members })
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_rows(text: &str) -> Result<Vec<FixtureRow>, String> {
    content_lines(text).map(str::parse).collect()
}

pub fn parse_list(text: &str) -> Result<Vec<i64>, String> {
    content_lines(text)
        .flat_map(|l| l.split(|c: char| c.is_whitespace() || c == ','))
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| format!("bad integer {s:?}")))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixtures {
    pub table1: Vec<FixtureRow>,
    pub table1_case_c: Vec<i64>,
    pub table2: Vec<FixtureRow>,
}

impl Fixtures {
    /// The tables compiled into the crate.
    pub fn embedded() -> Self {
        Self::parse(TABLE1, TABLE1_CASE_C, TABLE2).expect("embedded fixtures parse")
    }

    pub fn parse(table1: &str, case_c: &str, table2: &str) -> Result<Self, String> {
        Ok(Self {
            table1: parse_rows(table1).map_err(|e| format!("{TABLE1_FILE}: {e}"))?,
            table1_case_c: parse_list(case_c).map_err(|e| format!("{TABLE1_CASE_C_FILE}: {e}"))?,
            table2: parse_rows(table2).map_err(|e| format!("{TABLE2_FILE}: {e}"))?,
        })
    }

    /// Reads the three fixture files from `dir`.
    pub fn load_dir(dir: &Path) -> Result<Self, String> {
        let read = |name: &str| {
            fs::read_to_string(dir.join(name)).map_err(|e| format!("{}: {e}", dir.join(name).display()))
        };
        Self::parse(&read(TABLE1_FILE)?, &read(TABLE1_CASE_C_FILE)?, &read(TABLE2_FILE)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_tables_parse() {
        let f = Fixtures::embedded();
        assert_eq!(f.table1.len(), 32);
        assert_eq!(f.table1.first().unwrap().t, -1);
        assert_eq!(f.table1.last().unwrap().t, 30);
        assert_eq!(f.table1_case_c.len(), 253);
        assert_eq!(f.table2.len(), 36);
        let row27 = f.table1.iter().find(|r| r.t == 27).unwrap();
        assert_eq!(row27.conductor.to_string(), "3^2 7^1 13^1");
        assert_eq!(row27.delta.to_string(), "3^2 7^1 13^1");
        assert_eq!(row27.case, 'a');
    }

    #[test]
    fn row_round_trip() {
        let line = "3|3^3|3^2|b|0,54";
        let row: FixtureRow = line.parse().unwrap();
        assert_eq!(row.to_string(), line);
        assert!("3|3^3|3^2|d|".parse::<FixtureRow>().is_err());
        assert!("3|3^3|3^2".parse::<FixtureRow>().is_err());
    }
}
