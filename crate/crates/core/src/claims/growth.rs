use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;

use crate::constructions::{glue_chain, squares, thm3_set};
use crate::exact::difference_set;
use crate::oracles::{
    lcs_convex, max_convex_matching, max_weakly_convex_no4ap, CM_GUARD, NO4AP_GUARD,
};
use crate::{Error, Result};

/// Largest `n` for the squares family; `|A − A|` is about `2n²` and the
/// convex-subsequence table is quadratic in that.
const SQUARES_GUARD: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `|S|` from gluing the cubic construction's blocks.
    Thm1SSize,
    /// Largest convex matching on the base-`2n` set.
    Thm3Cm,
    /// Largest convex subset of `A − A` for `A` the first `n` squares.
    SquaresC,
    /// Largest weakly convex subset of `{1..n}` without a four-term run.
    No4apMax,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Thm1SSize,
        Family::Thm3Cm,
        Family::SquaresC,
        Family::No4apMax,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Thm1SSize => "thm1_S_size",
            Family::Thm3Cm => "thm3_cm",
            Family::SquaresC => "squares_C",
            Family::No4apMax => "no4ap_max",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown family {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthRow {
    pub family: Family,
    pub n: usize,
    /// `None` when `n` is outside the family's feasible range.
    pub value: Option<usize>,
    pub exhaustive: bool,
}

fn row(family: Family, n: usize) -> Result<GrowthRow> {
    let skipped = GrowthRow {
        family,
        n,
        value: None,
        exhaustive: false,
    };
    let (value, exhaustive) = match family {
        Family::Thm1SSize => match glue_chain(n, false) {
            Ok((s, _)) => (s.len(), true),
            Err(Error::InvalidParams(_)) => return Ok(skipped),
            Err(e) => return Err(e),
        },
        Family::Thm3Cm => {
            if !(2..=CM_GUARD).contains(&n) {
                return Ok(skipped);
            }
            let r = max_convex_matching(&thm3_set(n)?, CM_GUARD)?;
            (r.value, r.exhaustive)
        }
        Family::SquaresC => {
            if !(1..=SQUARES_GUARD).contains(&n) {
                return Ok(skipped);
            }
            let r = lcs_convex(&difference_set(&squares(n))?)?;
            (r.value, r.exhaustive)
        }
        Family::No4apMax => {
            let r = max_weakly_convex_no4ap(n, NO4AP_GUARD);
            (r.value, r.exhaustive)
        }
    };
    Ok(GrowthRow {
        family,
        n,
        value: Some(value),
        exhaustive,
    })
}

/// One row per requested `n`, in input order. Rows are computed in
/// parallel; the output does not depend on the thread count.
pub fn growth_table(family: Family, n_list: &[usize]) -> Result<Vec<GrowthRow>> {
    n_list.par_iter().map(|&n| row(family, n)).collect()
}

/// Writes `family,n,value,exhaustive`, with `skipped` in the value column for
/// infeasible rows.
pub fn write_growth_csv<W: Write>(rows: &[GrowthRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["family", "n", "value", "exhaustive"])?;
    for r in rows {
        let value = r
            .value
            .map_or_else(|| "skipped".to_owned(), |v| v.to_string());
        w.write_record([
            r.family.name(),
            &r.n.to_string(),
            &value,
            &r.exhaustive.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("thm9".parse::<Family>().is_err());
    }

    #[test]
    fn csv_output() {
        let rows = growth_table(Family::No4apMax, &[1, 4, 10]).unwrap();
        let mut buf = Vec::new();
        write_growth_csv(&rows, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "family,n,value,exhaustive\nno4ap_max,1,1,true\nno4ap_max,4,3,true\nno4ap_max,10,6,true\n"
        );
    }

    #[test]
    fn infeasible_rows_are_skipped() {
        let rows = growth_table(Family::Thm1SSize, &[50, 350]).unwrap();
        assert!(rows.iter().all(|r| r.value.is_none()));
        let rows = growth_table(Family::Thm3Cm, &[1, 13]).unwrap();
        assert!(rows.iter().all(|r| r.value.is_none()));
    }

    #[test]
    fn squares_meet_the_easy_bound() {
        for r in growth_table(Family::SquaresC, &(5..=20).collect::<Vec<_>>()).unwrap() {
            assert!(r.value.unwrap() >= r.n);
        }
    }

    #[test]
    fn thm1_quadratic_trend() {
        let rows = growth_table(Family::Thm1SSize, &[316, 1000]).unwrap();
        let (small, large) = (rows[0].value.unwrap(), rows[1].value.unwrap());
        assert!(large >= 4 * small, "{small} -> {large}");
    }
}
