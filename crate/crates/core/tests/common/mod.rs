//! Shared checks reused by several integration-test binaries; each binary
//! only calls a subset, so unused items are expected.
#![allow(dead_code)]

pub mod delta_identities;
pub mod golden;
