use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

/// Inclusive range written `a:b`, or a single value `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span<T> {
    pub start: T,
    pub end: T,
}

impl<T: Copy> Span<T> {
    pub fn range(&self) -> RangeInclusive<T> {
        self.start..=self.end
    }
}

impl<T> FromStr for Span<T>
where
    T: FromStr + Copy,
    T::Err: fmt::Display,
{
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |part: &str| {
            part.trim()
                .parse::<T>()
                .map_err(|e| format!("invalid bound {part:?}: {e}"))
        };
        match s.split_once(':') {
            Some((a, b)) => Ok(Span {
                start: parse(a)?,
                end: parse(b)?,
            }),
            None => {
                let v = parse(s)?;
                Ok(Span { start: v, end: v })
            }
        }
    }
}
