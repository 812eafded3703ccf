//! Library surface of the CLI crate: the JSON report schema, shared with
//! the integration tests so emitted reports provably round-trip.

pub mod report;
