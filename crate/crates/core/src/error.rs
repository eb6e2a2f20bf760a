//! Error type shared by the simulation core.

use alloc::string::String;
use core::fmt;

/// Errors produced by the simulation core.
#[derive(Debug, Clone, PartialEq)]
pub enum CoreError {
    /// Input text was empty after whitespace normalization.
    EmptyText,
    /// A word slot was given an empty candidate list.
    NoCandidates,
    /// A letter observation fell outside the belief's word extent.
    ObservationMismatch { letter_offset: usize, word_start: usize, word_len: usize },
    /// Fixation offset outside the letter line.
    InvalidFixation { offset: usize, line_len: usize },
    /// Negative duration passed to a decay step.
    InvalidDuration(f64),
    /// `step` called on a finished episode.
    EpisodeFinished,
    /// Feature vector length did not match the network input size.
    ShapeMismatch { expected: usize, got: usize },
    /// Rollout buffer was empty at update time.
    EmptyBuffer,
    /// A non-finite loss or parameter was produced during training.
    TrainingDiverged(String),
    /// Scanpath had no events to summarize.
    EmptyScanpath,
    /// No trial pairs matched between two scanpath batches.
    NoPairs,
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::EmptyText => write!(f, "input text is empty after normalization"),
            CoreError::NoCandidates => write!(f, "candidate list is empty"),
            CoreError::ObservationMismatch { letter_offset, word_start, word_len } => write!(
                f,
                "observation at letter slot {letter_offset} lies outside word extent [{word_start}, {})",
                word_start + word_len
            ),
            CoreError::InvalidFixation { offset, line_len } => {
                write!(f, "fixation offset {offset} outside letter line of length {line_len}")
            }
            CoreError::InvalidDuration(dt) => write!(f, "negative duration {dt} s"),
            CoreError::EpisodeFinished => write!(f, "episode already terminal"),
            CoreError::ShapeMismatch { expected, got } => {
                write!(f, "feature vector length {got}, expected {expected}")
            }
            CoreError::EmptyBuffer => write!(f, "rollout buffer is empty"),
            CoreError::TrainingDiverged(what) => write!(f, "training diverged: {what}"),
            CoreError::EmptyScanpath => write!(f, "scanpath has no events"),
            CoreError::NoPairs => write!(f, "no trial pairs matched"),
        }
    }
}

impl core::error::Error for CoreError {}

pub type Result<T> = core::result::Result<T, CoreError>;
