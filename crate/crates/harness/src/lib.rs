//! Structure documents, verification suites and reports on top of `finchu`.

pub mod claims;
pub mod document;
pub mod enumerate;
pub mod report;
pub mod suites;
