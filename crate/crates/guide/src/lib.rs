//! Compiles every listing of the book in `book/src` as a doc-test.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}

#[doc = include_str!("../../../book/src/quivers.md")]
pub mod quivers {}

#[doc = include_str!("../../../book/src/cuts.md")]
pub mod cuts {}

#[doc = include_str!("../../../book/src/mutation.md")]
pub mod mutation {}

#[doc = include_str!("../../../book/src/canvas.md")]
pub mod canvas {}

#[doc = include_str!("../../../book/src/tensor.md")]
pub mod tensor {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[doc = include_str!("../../../README.md")]
pub mod readme {}
