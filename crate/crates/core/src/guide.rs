//! Keeps the book's code samples honest.
//!
//! mdbook cannot run snippets that depend on this crate, so each chapter is
//! attached here as a doc comment and `cargo test --doc` exercises every
//! fenced Rust block. A failing snippet names the chapter module it came
//! from.

// Chapters are added here as they are written; see book/src/SUMMARY.md.
