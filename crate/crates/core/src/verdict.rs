use std::fmt;

use serde::Serialize;

/// A decision whose exactness depends on the base field.
///
/// `Unknown` is a legitimate outcome over ℚ, where some questions have no
/// finite decision procedure here.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict<W> {
    True { certified: bool, reason: String },
    False { witness: W },
    Unknown { reason: String },
}

impl<W> Verdict<W> {
    pub fn certified(reason: impl Into<String>) -> Self {
        Verdict::True {
            certified: true,
            reason: reason.into(),
        }
    }

    pub fn is_true(&self) -> bool {
        matches!(self, Verdict::True { .. })
    }

    pub fn is_false(&self) -> bool {
        matches!(self, Verdict::False { .. })
    }

    pub fn is_certified_true(&self) -> bool {
        matches!(self, Verdict::True { certified: true, .. })
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::False { witness } => Some(witness),
            _ => None,
        }
    }
}

impl<W: fmt::Display> fmt::Display for Verdict<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::True { certified: true, reason } => write!(f, "true (certified: {reason})"),
            Verdict::True { certified: false, reason } => write!(f, "true (uncertified: {reason})"),
            Verdict::False { witness } => write!(f, "false ({witness})"),
            Verdict::Unknown { reason } => write!(f, "unknown ({reason})"),
        }
    }
}
