//! Exhaustive checking of Roman domination claims: labeled graph
//! enumeration, a registry of executable claims, per-graph criticality
//! reports and the `roman` command line.

pub mod claims;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod report;
pub mod verify;

pub use claims::{check, ClaimId, Finding, FindingKind, Outcome};
pub use cli::run_cli;
pub use enumerate::enumerate_labeled_graphs;
pub use error::HarnessError;
pub use report::{criticality_report, CriticalityReport};
pub use verify::{verify_claim, verify_claim_with, Source, VerificationReport};
