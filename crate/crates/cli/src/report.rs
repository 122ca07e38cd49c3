//! Streaming check reports: one line per completed check, a witness on
//! every failure.

use std::time::Duration;

use rppq_core::QSeries;

/// First coefficient index where two series disagree, with both values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub power: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(Witness),
}

/// Result of one named check, printed as soon as it completes.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub outcome: Outcome,
    pub note: Option<String>,
    pub elapsed: Duration,
}

impl Check {
    pub fn passed(&self) -> bool {
        matches!(self.outcome, Outcome::Pass)
    }

    pub fn print(&self) {
        match &self.outcome {
            Outcome::Pass => {
                let note = self
                    .note
                    .as_deref()
                    .map(|n| format!("  [{n}]"))
                    .unwrap_or_default();
                println!("PASS  {}{}  ({:.2?})", self.name, note, self.elapsed);
            }
            Outcome::Fail(w) => {
                println!(
                    "FAIL  {}  first mismatch at q^{}: lhs={} rhs={}  ({:.2?})",
                    self.name, w.power, w.lhs, w.rhs, self.elapsed
                );
            }
        }
    }
}

/// Compares two series of equal truncation coefficient by coefficient.
pub fn compare_series(name: String, lhs: &QSeries, rhs: &QSeries, elapsed: Duration) -> Check {
    assert_eq!(lhs.truncation(), rhs.truncation());
    let outcome = match (0..=lhs.truncation()).find(|&i| lhs.coeff(i) != rhs.coeff(i)) {
        None => Outcome::Pass,
        Some(power) => Outcome::Fail(Witness {
            power,
            lhs: lhs.coeff(power).to_string(),
            rhs: rhs.coeff(power).to_string(),
        }),
    };
    Check {
        name,
        outcome,
        note: None,
        elapsed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_points_at_first_differing_coefficient() {
        let a = QSeries::from_ints(3, &[1, 2, 3, 4]);
        let b = QSeries::from_ints(3, &[1, 2, 5, 4]);
        let check = compare_series("demo".into(), &a, &b, Duration::ZERO);
        assert!(!check.passed());
        match check.outcome {
            Outcome::Fail(w) => {
                assert_eq!(w.power, 2);
                assert_eq!(w.lhs, "3");
                assert_eq!(w.rhs, "5");
            }
            Outcome::Pass => unreachable!(),
        }
    }

    #[test]
    fn equal_series_pass() {
        let a = QSeries::from_ints(2, &[1, 1, 2]);
        assert!(compare_series("demo".into(), &a, &a, Duration::ZERO).passed());
    }
}
