use std::fmt::Write as _;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use super::fixtures::{FixtureRow, Fixtures};
use super::VerificationReport;
use crate::error::Result;
use crate::monogenity::{field_monogenic, CaseLabel, MonogenityVerdict};

/// Parameters of the left panel of table 1.
pub const TABLE1_RANGE: RangeInclusive<i64> = -1..=30;
/// Range covered by the list of non-monogenic fields.
pub const TABLE1_SCAN_RANGE: RangeInclusive<i64> = -1..=2000;
/// Table 2 lists every nontrivial principal case up to this parameter.
pub const TABLE2_COMPLETE_UP_TO: i64 = 740;

fn row_from_verdict(v: &MonogenityVerdict) -> FixtureRow {
    FixtureRow {
        t: v.t,
        delta: v.data.delta.clone(),
        conductor: v.data.conductor.clone(),
        case: v.case_label.letter(),
        class_members: v.class.others(v.t),
    }
}

/// Recomputes one table row.
pub fn compute_row(t: i64) -> Result<FixtureRow> {
    field_monogenic(t).map(|v| row_from_verdict(&v))
}

/// All parameters in [`TABLE1_SCAN_RANGE`] whose field has no power
/// integral basis.
pub fn table1_case_c() -> Result<Vec<i64>> {
    let verdicts: Vec<_> = TABLE1_SCAN_RANGE.into_par_iter().map(field_monogenic).collect::<Result<_>>()?;
    Ok(verdicts.iter().filter(|v| v.case_label == CaseLabel::C).map(|v| v.t).collect())
}

fn compare_rows(report: &mut VerificationReport, table: &str, expected: &[FixtureRow]) -> Vec<FixtureRow> {
    let mut computed = Vec::new();
    for want in expected {
        let name = format!("{table} t={}", want.t);
        match compute_row(want.t) {
            Ok(got) => {
                let detail = if got == *want { String::new() } else { format!("expected {want}, got {got}") };
                report.record(name, got == *want, detail);
                computed.push(got);
            }
            Err(e) => report.record(name, false, e.to_string()),
        }
    }
    computed
}

/// Recomputes the left panel and the case-(c) list of table 1.
pub fn reproduce_table1(fixtures: &Fixtures) -> (Vec<FixtureRow>, Vec<i64>, VerificationReport) {
    let mut report = VerificationReport::new(None);
    let ts: Vec<i64> = fixtures.table1.iter().map(|r| r.t).collect();
    let want: Vec<i64> = TABLE1_RANGE.collect();
    report.record("table1 covers -1..=30", ts == want, format!("fixture rows: {}", ts.len()));
    let rows = compare_rows(&mut report, "table1", &fixtures.table1);

    let list = match table1_case_c() {
        Ok(list) => {
            let expected = &fixtures.table1_case_c;
            let detail = if list == *expected {
                format!(
                    "{} entries, first {:?}, last {:?}",
                    list.len(),
                    list.first(),
                    list.last()
                )
            } else {
                let missing: Vec<_> = expected.iter().filter(|t| !list.contains(t)).collect();
                let extra: Vec<_> = list.iter().filter(|t| !expected.contains(t)).collect();
                format!("missing {missing:?}, unexpected {extra:?}")
            };
            report.record("table1 case (c) list for -1 <= t <= 2000", list == *expected, detail);
            list
        }
        Err(e) => {
            report.record("table1 case (c) list for -1 <= t <= 2000", false, e.to_string());
            Vec::new()
        }
    };
    (rows, list, report)
}

/// Recomputes every row of table 2 and checks that the rows up to
/// [`TABLE2_COMPLETE_UP_TO`] are exactly the nontrivial principal cases.
pub fn reproduce_table2(fixtures: &Fixtures) -> (Vec<FixtureRow>, VerificationReport) {
    let mut report = VerificationReport::new(None);
    let rows = compare_rows(&mut report, "table2", &fixtures.table2);

    let name = format!("table2 lists every nontrivial principal t <= {TABLE2_COMPLETE_UP_TO}");
    let scanned: Result<Vec<MonogenityVerdict>> =
        (-1..=TABLE2_COMPLETE_UP_TO).into_par_iter().map(field_monogenic).collect();
    match scanned {
        Ok(verdicts) => {
            let found: Vec<i64> = verdicts
                .iter()
                .filter(|v| v.ck_principal && !v.data.is_trivial())
                .map(|v| v.t)
                .collect();
            let expected: Vec<i64> = fixtures
                .table2
                .iter()
                .map(|r| r.t)
                .filter(|&t| t <= TABLE2_COMPLETE_UP_TO)
                .collect();
            let detail = format!("{} rows", found.len());
            report.record(name, found == expected, detail);
        }
        Err(e) => report.record(name, false, e.to_string()),
    }
    (rows, report)
}

/// Regenerates both tables and compares them with `fixtures`.
pub fn reproduce_tables_with(fixtures: &Fixtures) -> VerificationReport {
    let (_, _, mut report) = reproduce_table1(fixtures);
    report.merge(reproduce_table2(fixtures).1);
    report
}

/// Regenerates both tables and compares them with the embedded fixtures.
pub fn reproduce_tables() -> VerificationReport {
    reproduce_tables_with(&Fixtures::embedded())
}

/// Fixed-width rendering: `t`, conductor, `Δ_t`, case, other class members.
pub fn render_rows(rows: &[FixtureRow]) -> String {
    let cells: Vec<[String; 5]> = rows
        .iter()
        .map(|r| {
            let members: Vec<String> = r.class_members.iter().map(i64::to_string).collect();
            [
                r.t.to_string(),
                r.conductor.to_string(),
                r.delta.to_string(),
                format!("({})", r.case),
                members.join(","),
            ]
        })
        .collect();
    let header = ["t", "c_K", "Δ_t", "case", "=K_t'"];
    let width = |i: usize| {
        cells.iter().map(|c| c[i].chars().count()).chain([header[i].chars().count()]).max().unwrap_or(0)
    };
    let widths: Vec<usize> = (0..5).map(width).collect();
    let mut out = String::new();
    let mut line = |cols: &[String]| {
        let parts: Vec<String> = cols
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        let _ = writeln!(out, "{}", parts.join(" | ").trim_end());
    };
    line(&header.map(String::from));
    for c in &cells {
        line(c);
    }
    out
}

pub fn render_case_c_list(list: &[i64]) -> String {
    let mut out = String::new();
    for chunk in list.chunks(10) {
        let parts: Vec<String> = chunk.iter().map(|t| format!("{t:>5}")).collect();
        let _ = writeln!(out, "{}", parts.join(","));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows_reproduce() {
        let f = Fixtures::embedded();
        let r = reproduce_tables_with(&f);
        assert!(r.overall(), "{r}");
    }

    #[test]
    fn mismatch_is_reported() {
        let mut f = Fixtures::embedded();
        f.table1[3].case = 'c';
        f.table1_case_c.pop();
        let (_, _, r) = reproduce_table1(&f);
        let failed: Vec<_> = r.failures().map(|c| c.name.clone()).collect();
        assert_eq!(failed, vec!["table1 t=2", "table1 case (c) list for -1 <= t <= 2000"]);
    }

    #[test]
    fn rendering() {
        let rows = vec![compute_row(12).unwrap()];
        let text = render_rows(&rows);
        assert!(text.lines().nth(1).unwrap().starts_with("12 | 7^1"));
        assert!(text.contains("(a)"));
        assert_eq!(render_case_c_list(&[21, 30]), "   21,   30\n");
    }
}
