// The command-line chapter of the guide, compiled as a doc-test.

#[doc = include_str!("../../../book/src/command-line.md")]
pub mod command_line {}
