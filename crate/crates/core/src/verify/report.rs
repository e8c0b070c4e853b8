use std::fmt::Write;
use std::time::{Duration, Instant};

/// Outcome of one checked statement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimRecord {
    pub id: String,
    pub description: String,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
    pub witness: Vec<(String, String)>,
    pub elapsed: Duration,
}

impl ClaimRecord {
    pub fn new(
        id: &str,
        description: &str,
        expected: impl Into<String>,
        computed: impl Into<String>,
        passed: bool,
    ) -> Self {
        ClaimRecord {
            id: id.to_string(),
            description: description.to_string(),
            expected: expected.into(),
            computed: computed.into(),
            passed,
            witness: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    /// Records the time elapsed since `start`.
    pub fn timed(mut self, start: Instant) -> Self {
        self.elapsed = start.elapsed();
        self
    }

    pub fn witness(mut self, key: &str, value: impl ToString) -> Self {
        self.witness.push((key.to_string(), value.to_string()));
        self
    }
}

/// Per-claim records for one harness run. Passes iff every claim passes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub kind: String,
    pub params: Vec<(String, String)>,
    pub claims: Vec<ClaimRecord>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(kind: &str, params: Vec<(String, String)>) -> Self {
        VerificationReport {
            kind: kind.to_string(),
            params,
            claims: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }

    pub fn claim(&self, id: &str) -> Option<&ClaimRecord> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> Vec<&ClaimRecord> {
        self.claims.iter().filter(|c| !c.passed).collect()
    }

    /// Human-readable rendering, including timings.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let _ = writeln!(out, "{} ({})", self.kind, params.join(", "));
        for c in &self.claims {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "  [{mark}] ({}) {}  [{:.3}s]",
                c.id,
                c.description,
                c.elapsed.as_secs_f64()
            );
            let _ = writeln!(out, "         expected: {}", c.expected);
            let _ = writeln!(out, "         computed: {}", c.computed);
            for (k, v) in &c.witness {
                let _ = writeln!(out, "         {k}: {v}");
            }
        }
        let passed = self.claims.iter().filter(|c| c.passed).count();
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{verdict}: {passed}/{} claims in {:.3}s",
            self.claims.len(),
            self.elapsed.as_secs_f64()
        );
        out
    }

    /// `key=value` blocks separated by blank lines: a header block, then one
    /// block per claim. Timings are omitted so identical runs give identical
    /// bytes.
    pub fn render_machine(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "report={}", self.kind);
        for (k, v) in &self.params {
            let _ = writeln!(out, "param.{k}={v}");
        }
        let _ = writeln!(out, "claims={}", self.claims.len());
        let _ = writeln!(out, "status={}", status(self.passed()));
        for c in &self.claims {
            out.push('\n');
            let _ = writeln!(out, "claim={}", c.id);
            let _ = writeln!(out, "description={}", one_line(&c.description));
            let _ = writeln!(out, "expected={}", one_line(&c.expected));
            let _ = writeln!(out, "computed={}", one_line(&c.computed));
            let _ = writeln!(out, "status={}", status(c.passed));
            for (k, v) in &c.witness {
                let _ = writeln!(out, "witness.{k}={}", one_line(v));
            }
        }
        out
    }
}

fn status(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

fn one_line(s: &str) -> String {
    s.replace('\n', " ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn machine_output_has_one_block_per_claim() {
        let mut r = VerificationReport::new("demo", vec![("p".into(), "3".into())]);
        r.claims
            .push(ClaimRecord::new("1", "first", "true", "true", true).witness("size", 4));
        r.claims
            .push(ClaimRecord::new("2", "second", "1", "2", false));
        r.elapsed = Duration::from_secs(7);
        let text = r.render_machine();
        assert_eq!(text.split("\n\n").count(), 3);
        assert!(text.contains("witness.size=4\n"));
        assert!(text.starts_with("report=demo\nparam.p=3\nclaims=2\nstatus=fail\n"));
        assert!(!text.contains('7'));
        assert!(r.render_text().contains("FAIL: 1/2 claims"));
    }
}
