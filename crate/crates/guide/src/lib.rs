//! Compiles the book's code blocks as doctests, one module per chapter, so
//! `cargo test` keeps the book honest.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/presentations.md")]
pub mod presentations {}
#[doc = include_str!("../../../book/src/straightening.md")]
pub mod straightening {}
#[doc = include_str!("../../../book/src/confluence.md")]
pub mod confluence {}
#[doc = include_str!("../../../book/src/loops.md")]
pub mod loops {}
#[doc = include_str!("../../../book/src/holonomy.md")]
pub mod holonomy {}
#[doc = include_str!("../../../book/src/geometry.md")]
pub mod geometry {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
