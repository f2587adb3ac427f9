//! Build/release instants with the profile's fixed textual form.
//!
//! Timestamps have second resolution, are always UTC, and serialize as
//! exactly `YYYY-MM-DDThh:mm:ssZ`. Offsets, fractional seconds, and
//! lowercase designators are rejected; the parser and formatter are exact
//! inverses.

use alloc::string::String;
use core::fmt;
use core::str::FromStr;

/// Why a timestamp string was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TimestampError {
    /// Not shaped `YYYY-MM-DDThh:mm:ssZ` (wrong length, separators, or
    /// non-digits; also any offset or fractional-second suffix).
    Malformed,
    /// Shape is right but the date does not exist or a field is out of
    /// range (month 13, Feb 30, hour 24, ...).
    OutOfRange,
}

impl fmt::Display for TimestampError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TimestampError::Malformed => f.write_str("timestamp must match YYYY-MM-DDThh:mm:ssZ"),
            TimestampError::OutOfRange => f.write_str("timestamp field out of range"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for TimestampError {}

/// A UTC instant with second resolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Timestamp {
    year: u16,
    month: u8,
    day: u8,
    hour: u8,
    minute: u8,
    second: u8,
}

impl Timestamp {
    pub fn new(
        year: u16,
        month: u8,
        day: u8,
        hour: u8,
        minute: u8,
        second: u8,
    ) -> Result<Self, TimestampError> {
        let ts = Timestamp {
            year,
            month,
            day,
            hour,
            minute,
            second,
        };
        if year > 9999
            || !(1..=12).contains(&month)
            || day == 0
            || day > days_in_month(year, month)
            || hour > 23
            || minute > 59
            || second > 59
        {
            return Err(TimestampError::OutOfRange);
        }
        Ok(ts)
    }

    pub fn year(&self) -> u16 {
        self.year
    }
    pub fn month(&self) -> u8 {
        self.month
    }
    pub fn day(&self) -> u8 {
        self.day
    }
    pub fn hour(&self) -> u8 {
        self.hour
    }
    pub fn minute(&self) -> u8 {
        self.minute
    }
    pub fn second(&self) -> u8 {
        self.second
    }

    /// Renders the canonical `YYYY-MM-DDThh:mm:ssZ` form.
    pub fn render(&self) -> String {
        alloc::format!(
            "{:04}-{:02}-{:02}T{:02}:{:02}:{:02}Z",
            self.year,
            self.month,
            self.day,
            self.hour,
            self.minute,
            self.second
        )
    }
}

impl fmt::Display for Timestamp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:04}-{:02}-{:02}T{:02}:{:02}:{:02}Z",
            self.year, self.month, self.day, self.hour, self.minute, self.second
        )
    }
}

impl FromStr for Timestamp {
    type Err = TimestampError;

    fn from_str(text: &str) -> Result<Self, TimestampError> {
        let b = text.as_bytes();
        if b.len() != 20 {
            return Err(TimestampError::Malformed);
        }
        if b[4] != b'-'
            || b[7] != b'-'
            || b[10] != b'T'
            || b[13] != b':'
            || b[16] != b':'
            || b[19] != b'Z'
        {
            return Err(TimestampError::Malformed);
        }
        let year = digits(&b[0..4])?;
        let month = digits(&b[5..7])? as u8;
        let day = digits(&b[8..10])? as u8;
        let hour = digits(&b[11..13])? as u8;
        let minute = digits(&b[14..16])? as u8;
        let second = digits(&b[17..19])? as u8;
        Timestamp::new(year, month, day, hour, minute, second)
    }
}

fn digits(bytes: &[u8]) -> Result<u16, TimestampError> {
    let mut value: u16 = 0;
    for &c in bytes {
        if !c.is_ascii_digit() {
            return Err(TimestampError::Malformed);
        }
        value = value * 10 + u16::from(c - b'0');
    }
    Ok(value)
}

fn is_leap_year(year: u16) -> bool {
    (year.is_multiple_of(4) && !year.is_multiple_of(100)) || year.is_multiple_of(400)
}

fn days_in_month(year: u16, month: u8) -> u8 {
    match month {
        1 | 3 | 5 | 7 | 8 | 10 | 12 => 31,
        4 | 6 | 9 | 11 => 30,
        2 if is_leap_year(year) => 29,
        2 => 28,
        _ => 0,
    }
}
