//! Presentation files, DOT export and plain-text reports.

mod dot;
mod format;
mod report;

pub use dot::{presentation_to_dot, resolution_to_dot};
pub use format::{parse_presentation, print_presentation};
pub use report::Report;

#[cfg(test)]
mod tests;
