//! Structured verdicts.
//!
//! Every checker returns a [`Report`]: a list of claims, each holding or
//! failing, where a failing claim always carries a witness describing the
//! counterexample.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    Error,
}

impl Verdict {
    fn worst(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Error, _) | (_, Error) => Error,
            (Fails, _) | (_, Fails) => Fails,
            _ => Holds,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => write!(f, "holds"),
            Verdict::Fails => write!(f, "fails"),
            Verdict::Error => write!(f, "error"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub id: String,
    pub verdict: Verdict,
    pub witness: Option<String>,
}

impl Claim {
    pub fn holds(id: impl Into<String>) -> Self {
        Claim {
            id: id.into(),
            verdict: Verdict::Holds,
            witness: None,
        }
    }

    /// A holding claim annotated with a note (e.g. an unverified assumption).
    pub fn holds_with_note(id: impl Into<String>, note: impl Into<String>) -> Self {
        Claim {
            id: id.into(),
            verdict: Verdict::Holds,
            witness: Some(note.into()),
        }
    }

    pub fn fails(id: impl Into<String>, witness: impl Into<String>) -> Self {
        Claim {
            id: id.into(),
            verdict: Verdict::Fails,
            witness: Some(witness.into()),
        }
    }

    pub fn check(id: impl Into<String>, ok: bool, witness: impl Into<String>) -> Self {
        if ok {
            Claim::holds(id)
        } else {
            Claim::fails(id, witness)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub verdict: Verdict,
    pub claims: Vec<Claim>,
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn holds() -> Self {
        Report {
            verdict: Verdict::Holds,
            claims: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn from_claims(claims: Vec<Claim>) -> Self {
        let verdict = claims
            .iter()
            .fold(Verdict::Holds, |v, c| v.worst(c.verdict));
        Report {
            verdict,
            claims,
            elapsed_ms: None,
        }
    }

    pub fn fails(id: impl Into<String>, witness: impl Into<String>) -> Self {
        Report::from_claims(vec![Claim::fails(id, witness)])
    }

    pub fn is_holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn merge(mut self, other: Report) -> Report {
        self.claims.extend(other.claims);
        Report::from_claims(self.claims)
    }

    pub fn push(&mut self, claim: Claim) {
        self.verdict = self.verdict.worst(claim.verdict);
        self.claims.push(claim);
    }

    /// First failing claim, if any.
    pub fn first_failure(&self) -> Option<&Claim> {
        self.claims.iter().find(|c| c.verdict != Verdict::Holds)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.verdict)?;
        for c in &self.claims {
            write!(f, "\n  {}: {}", c.id, c.verdict)?;
            if let Some(w) = &c.witness {
                write!(f, " ({w})")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worst_verdict_wins() {
        let r = Report::from_claims(vec![
            Claim::holds("a"),
            Claim::fails("b", "w"),
            Claim::holds("c"),
        ]);
        assert_eq!(r.verdict, Verdict::Fails);
        assert_eq!(r.first_failure().unwrap().id, "b");
    }

    #[test]
    fn failing_claims_carry_witnesses() {
        let r = Report::fails("x", "broken pair");
        assert!(r.claims.iter().all(|c| c.verdict == Verdict::Holds || c.witness.is_some()));
    }
}
