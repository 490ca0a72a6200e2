//! Expansions in base `q` with digit set `{0, 1, q}`.

pub mod census;
pub mod cli;
pub mod dimension;
pub mod expansion;
pub mod numeric;
pub mod verify;
pub mod words;
