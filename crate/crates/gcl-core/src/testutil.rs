//! Shared fixtures for unit tests.

use crate::context::{ContextFormat, FormalContext, ParseOptions};

/// Six objects, five attributes; the running example used across the crate.
pub(crate) const SIX_OBJECTS_CXT: &str =
    "B\n6\n5\n1\n2\n3\n4\n5\n6\na\nb\nc\nd\ne\nX.XXX\nX.X..\n.X..X\n.X..X\nX....\nXX..X\n";

pub(crate) fn six_objects() -> FormalContext {
    FormalContext::parse(
        SIX_OBJECTS_CXT,
        ContextFormat::Burmeister,
        &ParseOptions::default(),
    )
    .unwrap()
}
