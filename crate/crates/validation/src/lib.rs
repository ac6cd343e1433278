//! Reporting helpers for the acceptance suite in `tests/acceptance.rs`.

use std::time::{Duration, Instant};

/// Outcome of one acceptance criterion.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub id: u32,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl Verdict {
    pub fn line(&self) -> String {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        format!(
            "{tag} criterion {:>2} {} ({:.2} s of {} s): {}",
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs(),
            self.detail
        )
    }
}

/// Runs `check` and folds its time budget into the verdict.
pub fn judge(
    id: u32,
    title: &'static str,
    budget_secs: u64,
    check: impl FnOnce() -> Result<String, String>,
) -> Verdict {
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    let budget = Duration::from_secs(budget_secs);
    let (mut passed, mut detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if elapsed > budget {
        passed = false;
        detail = format!("{detail}; over the time budget");
    }
    Verdict { id, title, passed, detail, elapsed, budget }
}
