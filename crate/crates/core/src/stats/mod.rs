//! Order statistics, moments, robust skewness and letter values.

mod letter;
mod medcouple;
mod moments;
mod sample;

pub use letter::{letter_values, letter_values_with_stop, LetterValueSet, DEFAULT_STOP_COUNT};
pub use medcouple::{medcouple, medcouple_naive, Medcouple};
pub use moments::{summary, SummaryStats};
pub use sample::{quantile, SortedSample};
