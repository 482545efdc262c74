pub mod cache;
pub mod claims;
pub mod report;
