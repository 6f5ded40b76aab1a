//! Revised ascent sequences: enumeration, bijections, pattern avoidance,
//! generating trees and exact counting oracles.
//!
//! ```
//! use rasc::{eta, w};
//!
//! let trace = eta(&w("12132124")).unwrap();
//! assert_eq!(trace.output.to_string(), "545354124");
//! ```

pub mod bijection;
pub mod error;
pub mod gentree;
pub mod oracle;
pub mod pattern;
pub mod seqcore;
pub mod verify;
pub mod word;

pub use bijection::{add, complement, eta, eta_inverse, phi, rom, standardize, EtaTrace};
pub use error::{Error, Result};
pub use pattern::{avoids, count_avoiders, count_occurrences, Pattern};
pub use seqcore::{is_member, Enumeration, FamilyTag};
pub use word::{w, Word};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/words.md")]
    mod words {}
    #[doc = include_str!("../../../book/src/bijections.md")]
    mod bijections {}
    #[doc = include_str!("../../../book/src/patterns.md")]
    mod patterns {}
    #[doc = include_str!("../../../book/src/trees.md")]
    mod trees {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
}
