//! Calendar-date keyspace: every valid date in a year range, rendered as
//! an 8-digit string.
//!
//! Dates of significance (birthdays, anniversaries) make popular numeric
//! passphrases, and the calendar collapses the space: 120 years of days
//! is 43,829 candidates, versus 10^8 for unconstrained 8-digit strings.
//! Day-month-year (`ddmmyyyy`) is the default rendering, the common
//! local convention; the other two orderings are explicit variants.

use super::{Keyspace, KeyspaceError};
use chrono::{Datelike, Days, NaiveDate};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum DateFormat {
    /// `ddmmyyyy` (default).
    #[default]
    DayMonthYear,
    /// `yyyymmdd`.
    YearMonthDay,
    /// `mmddyyyy`.
    MonthDayYear,
}

impl DateFormat {
    pub fn render(&self, date: NaiveDate) -> String {
        let (d, m, y) = (date.day(), date.month(), date.year());
        match self {
            DateFormat::DayMonthYear => format!("{d:02}{m:02}{y:04}"),
            DateFormat::YearMonthDay => format!("{y:04}{m:02}{d:02}"),
            DateFormat::MonthDayYear => format!("{m:02}{d:02}{y:04}"),
        }
    }

    pub fn parse(&self, text: &str) -> Option<NaiveDate> {
        if text.len() != 8 || !text.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let num = |range: std::ops::Range<usize>| text[range].parse::<u32>().ok();
        let (d, m, y) = match self {
            DateFormat::DayMonthYear => (num(0..2)?, num(2..4)?, num(4..8)?),
            DateFormat::YearMonthDay => (num(6..8)?, num(4..6)?, num(0..4)?),
            DateFormat::MonthDayYear => (num(2..4)?, num(0..2)?, num(4..8)?),
        };
        NaiveDate::from_ymd_opt(y as i32, m, d)
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            DateFormat::DayMonthYear => "ddmmyyyy",
            DateFormat::YearMonthDay => "yyyymmdd",
            DateFormat::MonthDayYear => "mmddyyyy",
        }
    }
}

/// All valid Gregorian dates from 1 January of the first year through
/// 31 December of the last, in chronological order.
#[derive(Debug, Clone)]
pub struct DateKeyspace {
    first_year: i32,
    last_year: i32,
    format: DateFormat,
    epoch: NaiveDate,
    cardinality: u128,
}

impl DateKeyspace {
    pub fn new(first_year: i32, last_year: i32) -> Result<Self, KeyspaceError> {
        Self::with_format(first_year, last_year, DateFormat::default())
    }

    pub fn with_format(
        first_year: i32,
        last_year: i32,
        format: DateFormat,
    ) -> Result<Self, KeyspaceError> {
        if first_year > last_year || first_year < 1000 || last_year > 9999 {
            return Err(KeyspaceError::YearRange {
                first: first_year,
                last: last_year,
            });
        }
        let epoch = NaiveDate::from_ymd_opt(first_year, 1, 1).expect("valid year");
        let end = NaiveDate::from_ymd_opt(last_year, 12, 31).expect("valid year");
        let cardinality = (end.signed_duration_since(epoch).num_days() + 1) as u128;
        Ok(DateKeyspace {
            first_year,
            last_year,
            format,
            epoch,
            cardinality,
        })
    }

    pub fn into_keyspace(self) -> Keyspace {
        Keyspace::Date(self)
    }

    pub fn format(&self) -> DateFormat {
        self.format
    }

    pub fn cardinality(&self) -> u128 {
        self.cardinality
    }

    pub fn candidate(&self, index: u128) -> Option<String> {
        if index >= self.cardinality {
            return None;
        }
        let date = self
            .epoch
            .checked_add_days(Days::new(index as u64))
            .expect("index within range");
        Some(self.format.render(date))
    }

    /// Index of a rendered date within this keyspace, if it is a valid
    /// calendar date inside the year range.
    pub fn index_of(&self, text: &str) -> Option<u128> {
        let date = self.format.parse(text)?;
        if date.year() < self.first_year || date.year() > self.last_year {
            return None;
        }
        Some(date.signed_duration_since(self.epoch).num_days() as u128)
    }

    pub fn describe(&self) -> String {
        format!(
            "date[{}-{} {}]",
            self.first_year,
            self.last_year,
            self.format.as_str()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn century_and_a_fifth_day_count() {
        let ks = DateKeyspace::new(1900, 2019).unwrap();
        assert_eq!(ks.cardinality(), 43_829);
    }

    #[test]
    fn single_non_leap_year() {
        let ks = DateKeyspace::new(2001, 2001).unwrap();
        assert_eq!(ks.cardinality(), 365);
        assert_eq!(ks.candidate(0).unwrap(), "01012001");
        assert_eq!(ks.candidate(364).unwrap(), "31122001");
    }

    #[test]
    fn leap_day_present_only_in_leap_years() {
        let ks = DateKeyspace::new(1990, 2019).unwrap();
        // 1996 is a leap year; 1997 is not; 1900 (not in range) was not.
        assert_eq!(ks.index_of("29021996"), Some(2_250));
        assert_eq!(ks.candidate(2_250).unwrap(), "29021996");
        assert_eq!(ks.index_of("29021997"), None);
        assert_eq!(ks.index_of("28021997").map(|i| i > 0), Some(true));
    }

    #[test]
    fn century_leap_rule() {
        // 1900 is divisible by 4 but not a leap year; 2000 is.
        let no_leap = DateKeyspace::new(1900, 1900).unwrap();
        assert_eq!(no_leap.cardinality(), 365);
        assert_eq!(no_leap.index_of("29021900"), None);
        let leap = DateKeyspace::new(2000, 2000).unwrap();
        assert_eq!(leap.cardinality(), 366);
        assert!(leap.index_of("29022000").is_some());
    }

    #[test]
    fn alternative_formats() {
        let ymd =
            DateKeyspace::with_format(1996, 1996, DateFormat::YearMonthDay).unwrap();
        assert_eq!(ymd.candidate(59).unwrap(), "19960229");
        let mdy =
            DateKeyspace::with_format(1996, 1996, DateFormat::MonthDayYear).unwrap();
        assert_eq!(mdy.candidate(59).unwrap(), "02291996");
    }

    #[test]
    fn enumeration_is_chronological_and_valid() {
        let ks = DateKeyspace::new(2004, 2004).unwrap();
        assert_eq!(ks.cardinality(), 366);
        let mut seen = std::collections::HashSet::new();
        for i in 0..ks.cardinality() {
            let text = ks.candidate(i).unwrap();
            assert_eq!(ks.index_of(&text), Some(i), "round trip at {i}");
            assert!(seen.insert(text), "duplicate at {i}");
        }
        assert_eq!(ks.candidate(366), None);
    }

    #[test]
    fn year_range_validation() {
        assert!(matches!(
            DateKeyspace::new(2019, 1900),
            Err(KeyspaceError::YearRange { .. })
        ));
        assert!(matches!(
            DateKeyspace::new(999, 2000),
            Err(KeyspaceError::YearRange { .. })
        ));
        assert!(matches!(
            DateKeyspace::new(2000, 10000),
            Err(KeyspaceError::YearRange { .. })
        ));
    }
}
