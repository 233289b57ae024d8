//! Law reports: every checked equation instance, with witnesses for the
//! failures. Invalidity is data, not an error.

use std::collections::BTreeSet;
use std::fmt;

/// One checked instance of a named law.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LawEntry {
    /// Stable dotted law name, e.g. `inter.chi.natural`.
    pub law: String,
    /// Human-readable rendering of the probe the law was evaluated at.
    pub probe: String,
    pub pass: bool,
    /// Witness data on failure.
    pub detail: String,
}

/// Invertibility verdict for a comparison cube or cell.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verdict {
    /// Literally an identity.
    Identity,
    /// Invertible but not an identity.
    Invertible,
    NotInvertible,
    /// The instance exposes neither components nor an enumeration.
    Undecided,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Identity => "identity",
            Verdict::Invertible => "invertible",
            Verdict::NotInvertible => "not-invertible",
            Verdict::Undecided => "undecided",
        };
        f.write_str(s)
    }
}

/// Accumulated evidence from a law suite run. Deterministic: entries are kept
/// sorted, so two runs over the same probes render identically.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LawReport {
    entries: BTreeSet<LawEntry>,
}

impl LawReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, law: impl Into<String>, probe: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.entries.insert(LawEntry {
            law: law.into(),
            probe: probe.into(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn check(&mut self, law: impl Into<String>, probe: impl Into<String>, pass: bool) {
        self.record(law, probe, pass, if pass { "" } else { "equation failed" });
    }

    pub fn merge(&mut self, other: LawReport) {
        self.entries.extend(other.entries);
    }

    pub fn entries(&self) -> impl Iterator<Item = &LawEntry> {
        self.entries.iter()
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Law names that have at least one failing instance.
    pub fn failing_laws(&self) -> BTreeSet<&str> {
        self.failures().map(|e| e.law.as_str()).collect()
    }

    /// True when every instance of the given law passed (vacuously true if
    /// the law was never evaluated).
    pub fn law_passed(&self, law: &str) -> bool {
        self.entries.iter().filter(|e| e.law == law).all(|e| e.pass)
    }

    pub fn count_for(&self, law: &str) -> usize {
        self.entries.iter().filter(|e| e.law == law).count()
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let total = self.entries.len();
        let failed: Vec<&LawEntry> = self.failures().collect();
        writeln!(f, "checked {} law instances, {} failed", total, failed.len())?;
        for e in &failed {
            writeln!(f, "  FAIL {} @ {} : {}", e.law, e.probe, e.detail)?;
        }
        Ok(())
    }
}
