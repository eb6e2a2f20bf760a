//! Foveated letter perception.
//!
//! Letter identification degrades with eccentricity following a Gaussian
//! falloff onto a chance floor; misidentifications are uniform over the
//! remaining alphabet, which keeps the observation channel exactly
//! normalizable and the Bayesian update in [`crate::belief`] exact. The
//! visible window is asymmetric (wider to the right, as in reading), and
//! space separators are never sampled: word boundaries are assumed known.

use alloc::vec::Vec;
use serde::{Deserialize, Serialize};

use crate::corpus::AnnotatedText;
use crate::error::{CoreError, Result};
use crate::math;
use crate::rng::Stream;

/// Parameters of the acuity / confusion channel.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AcuityModel {
    /// Gaussian acuity width in letter slots.
    pub sigma: f64,
    /// Chance-level identification probability.
    pub p_floor: f64,
    /// Letters visible left of fixation.
    pub span_left: usize,
    /// Letters visible right of fixation.
    pub span_right: usize,
    /// Confusion alphabet size; must match the text's alphabet.
    pub alphabet_size: usize,
}

impl Default for AcuityModel {
    fn default() -> Self {
        AcuityModel {
            sigma: 3.0,
            p_floor: 1.0 / 26.0,
            span_left: 3,
            span_right: 8,
            alphabet_size: 26,
        }
    }
}

/// One noisy letter sample.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LetterObservation {
    /// Absolute slot on the letter line.
    pub letter_offset: usize,
    pub observed_letter: char,
    /// Distance from fixation in letter slots.
    pub eccentricity: u32,
}

/// P(correct identification) at eccentricity `e`:
/// `p_floor + (1 - p_floor) * exp(-e^2 / (2 sigma^2))`.
pub fn identification_probability(e: f64, model: &AcuityModel) -> f64 {
    debug_assert!(e >= 0.0);
    model.p_floor + (1.0 - model.p_floor) * math::exp(-(e * e) / (2.0 * model.sigma * model.sigma))
}

/// Letter slots visible from a fixation: the asymmetric span window clipped
/// to the letter line, minus space separators.
pub fn visible_letters(
    fixation_offset: usize,
    text: &AnnotatedText,
    model: &AcuityModel,
) -> Result<Vec<usize>> {
    if fixation_offset >= text.letter_line_len() {
        return Err(CoreError::InvalidFixation {
            offset: fixation_offset,
            line_len: text.letter_line_len(),
        });
    }
    let lo = fixation_offset.saturating_sub(model.span_left);
    let hi = (fixation_offset + model.span_right).min(text.letter_line_len() - 1);
    Ok((lo..=hi).filter(|&slot| text.word_at_slot(slot).is_some()).collect())
}

/// Sample one noisy observation batch at a fixation. Each visible letter is
/// reported correctly with the eccentricity-dependent identification
/// probability, otherwise as a uniform draw over the other alphabet letters.
pub fn sample_observation(
    fixation_offset: usize,
    text: &AnnotatedText,
    model: &AcuityModel,
    rng: &mut Stream,
) -> Result<Vec<LetterObservation>> {
    debug_assert_eq!(model.alphabet_size, text.alphabet().len());
    let slots = visible_letters(fixation_offset, text, model)?;
    let alphabet = text.alphabet();
    let mut observations = Vec::with_capacity(slots.len());
    for slot in slots {
        let eccentricity = slot.abs_diff(fixation_offset) as u32;
        let true_letter = text.letter_at(slot);
        let p_id = identification_probability(eccentricity as f64, model);
        let observed_letter = if rng.uniform() < p_id {
            true_letter
        } else {
            // Uniform over the other alphabet letters.
            let true_index = alphabet.iter().position(|&c| c == true_letter).unwrap_or(0);
            let mut pick = rng.below(alphabet.len() - 1);
            if pick >= true_index {
                pick += 1;
            }
            alphabet[pick]
        };
        observations.push(LetterObservation { letter_offset: slot, observed_letter, eccentricity });
    }
    Ok(observations)
}
