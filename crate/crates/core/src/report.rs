use std::fmt;

use serde::Serialize;

/// The axiom and compatibility checks the verifier knows about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Check {
    #[serde(rename = "coassoc")]
    Coassociativity,
    #[serde(rename = "counit")]
    Counicity,
    #[serde(rename = "cograded")]
    Cograded,
    #[serde(rename = "cofiltered")]
    Cofiltered,
    #[serde(rename = "degree-drop")]
    DegreeDrop,
    #[serde(rename = "bialgebra")]
    Bialgebra,
    #[serde(rename = "antipode")]
    Antipode,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Coassociativity,
        Check::Counicity,
        Check::Cograded,
        Check::Cofiltered,
        Check::DegreeDrop,
        Check::Bialgebra,
        Check::Antipode,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Coassociativity => "coassoc",
            Check::Counicity => "counit",
            Check::Cograded => "cograded",
            Check::Cofiltered => "cofiltered",
            Check::DegreeDrop => "degree-drop",
            Check::Bialgebra => "bialgebra",
            Check::Antipode => "antipode",
        }
    }

    pub fn from_name(s: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name() == s)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One failed instance of an identity: where, and what went wrong.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub at: String,
    pub detail: String,
}

impl Violation {
    pub fn new(at: impl Into<String>, detail: impl Into<String>) -> Self {
        Violation { at: at.into(), detail: detail.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: Check,
    pub degree_bound: usize,
    /// Number of basis elements (or pairs, triples) examined.
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Outcome of a grading or filtration compatibility check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationReport {
    pub checked_degree_bound: usize,
    pub connected: bool,
    pub counit_compatible: bool,
    pub coproduct_compatible: bool,
    pub violations: Vec<Violation>,
}

impl FiltrationReport {
    pub fn passed(&self) -> bool {
        self.connected && self.counit_compatible && self.coproduct_compatible
    }

    pub fn into_check_report(self, check: Check, checked: usize) -> CheckReport {
        CheckReport { check, degree_bound: self.checked_degree_bound, checked, violations: self.violations }
    }
}
