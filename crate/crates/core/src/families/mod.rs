//! Exceptional families: tags, constructors and recognizers.

mod build;
mod recognize;
mod tag;

pub use build::*;
pub use recognize::*;
pub use tag::{FamilyTag, TagDomain};
