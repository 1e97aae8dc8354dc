use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::ParseError;
use crate::kernel::Weight;

/// A closed weight interval used to truncate infinite weight-graded families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WeightWindow {
    pub min: Weight,
    pub max: Weight,
}

impl WeightWindow {
    pub fn new(min: Weight, max: Weight) -> Self {
        assert!(min <= max, "empty weight window {min}..{max}");
        WeightWindow { min, max }
    }

    /// The integer window `[lo, hi]`.
    pub fn ints(lo: i32, hi: i32) -> Self {
        Self::new(Weight::int(lo), Weight::int(hi))
    }

    pub fn contains(&self, w: Weight) -> bool {
        self.min <= w && w <= self.max
    }

    /// Every weight of the window in `start + Z`, ascending. `start` fixes the
    /// coset: pass `Weight::ZERO` for integers, `Weight::half(1)` for half-odd ones.
    pub fn weights_in_coset(&self, start: Weight) -> Vec<Weight> {
        let parity = start.twice().rem_euclid(2);
        (self.min.twice()..=self.max.twice())
            .filter(|t| t.rem_euclid(2) == parity)
            .map(Weight::from_twice)
            .collect()
    }
}

impl fmt::Display for WeightWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.min, self.max)
    }
}

impl FromStr for WeightWindow {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| ParseError::new(0, 1, format!("window `{s}` is not of the form lo..hi")))?;
        let min: Weight = lo.trim().parse()?;
        let max: Weight = hi.trim().parse()?;
        if min > max {
            return Err(ParseError::new(0, 1, format!("window `{s}` is empty")));
        }
        Ok(WeightWindow { min, max })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_half_integers() {
        let w: WeightWindow = "-5/2..5/2".parse().unwrap();
        assert_eq!(w.min, Weight::half(-5));
        assert!(w.contains(Weight::int(2)));
        assert!(!w.contains(Weight::int(3)));
        assert!("3..1".parse::<WeightWindow>().is_err());
        assert!("3".parse::<WeightWindow>().is_err());
    }

    #[test]
    fn cosets() {
        let w = WeightWindow::ints(-1, 1);
        assert_eq!(w.weights_in_coset(Weight::ZERO), vec![Weight::int(-1), Weight::ZERO, Weight::int(1)]);
        assert_eq!(w.weights_in_coset(Weight::half(1)), vec![Weight::half(-1), Weight::half(1)]);
    }
}
