//! Text ingestion: tokenization, frequency and predictability annotation,
//! and same-length candidate sets for word recognition.
//!
//! Words are lowercased and restricted to the lexicon alphabet (default
//! `a..z`). Punctuation is stripped; `.`, `!` and `?` end sentences; words
//! containing digits or out-of-alphabet symbols are dropped entirely. All
//! word surfaces live on one linearized letter line with single-space
//! separators, which is what the perceptual front end samples from.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{CoreError, Result};

/// How many of the most frequent lexicon entries are eligible to be marked
/// as function (non-content) words.
const FUNCTION_WORD_RANKS: usize = 50;

/// Maximum surface length for a function word.
const FUNCTION_WORD_MAX_LEN: usize = 3;

/// A frequency lexicon over a fixed letter alphabet, with optional per-word
/// predictability overrides (for externally supplied cloze norms).
#[derive(Debug, Clone)]
pub struct Lexicon {
    entries: BTreeMap<String, u64>,
    predictability_overrides: BTreeMap<String, f64>,
    alphabet: Vec<char>,
    max_count: u64,
    function_words: BTreeSet<String>,
}

impl Lexicon {
    /// Lowercase `a..z`.
    pub fn default_alphabet() -> Vec<char> {
        ('a'..='z').collect()
    }

    pub fn new(entries: BTreeMap<String, u64>, alphabet: Vec<char>) -> Result<Self> {
        Self::with_overrides(entries, BTreeMap::new(), alphabet)
    }

    pub fn with_overrides(
        entries: BTreeMap<String, u64>,
        predictability_overrides: BTreeMap<String, f64>,
        alphabet: Vec<char>,
    ) -> Result<Self> {
        if entries.is_empty() || entries.values().all(|&c| c == 0) {
            return Err(CoreError::EmptyText);
        }
        for word in entries.keys() {
            if word.is_empty() || !word.chars().all(|ch| alphabet.contains(&ch)) {
                return Err(CoreError::EmptyText);
            }
        }
        let max_count = entries.values().copied().max().unwrap_or(1).max(1);

        // Top entries by count (ties broken lexicographically), restricted to
        // short surfaces, form the function-word set used by `is_content`.
        let mut ranked: Vec<(&String, u64)> = entries.iter().map(|(w, &c)| (w, c)).collect();
        ranked.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
        let function_words = ranked
            .iter()
            .take(FUNCTION_WORD_RANKS)
            .filter(|(w, _)| w.chars().count() <= FUNCTION_WORD_MAX_LEN)
            .map(|(w, _)| (*w).clone())
            .collect();

        Ok(Lexicon { entries, predictability_overrides, alphabet, max_count, function_words })
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn entries(&self) -> &BTreeMap<String, u64> {
        &self.entries
    }

    pub fn max_count(&self) -> u64 {
        self.max_count
    }

    /// Relative frequency in `(0, 1]`. Out-of-lexicon (or zero-count) words
    /// are smoothed to count 1.
    pub fn frequency_rel(&self, word: &str) -> f64 {
        let count = self.entries.get(word).copied().unwrap_or(1).max(1);
        count as f64 / self.max_count as f64
    }

    pub fn predictability_override(&self, word: &str) -> Option<f64> {
        self.predictability_overrides.get(word).copied()
    }

    /// A word is non-content when it is short and sits among the most
    /// frequent lexicon entries.
    pub fn is_content(&self, word: &str) -> bool {
        !self.function_words.contains(word)
    }
}

/// One tokenized word with its layout and annotation.
#[derive(Debug, Clone, PartialEq)]
pub struct WordToken {
    pub surface: String,
    pub sentence_index: usize,
    pub word_index_in_sentence: usize,
    pub global_index: usize,
    /// First letter slot of this word on the letter line.
    pub first_letter_offset: usize,
    pub frequency_rel: f64,
    pub predictability: f64,
    pub is_content: bool,
}

impl WordToken {
    pub fn len(&self) -> usize {
        self.surface.chars().count()
    }

    pub fn is_empty(&self) -> bool {
        self.surface.is_empty()
    }

    pub fn last_letter_offset(&self) -> usize {
        self.first_letter_offset + self.len() - 1
    }

    /// Default saccade landing site: the center-left letter slot.
    pub fn center_left_offset(&self) -> usize {
        self.first_letter_offset + (self.len() - 1) / 2
    }

    pub fn contains_slot(&self, slot: usize) -> bool {
        slot >= self.first_letter_offset && slot <= self.last_letter_offset()
    }
}

/// A tokenized text: words in reading order, grouped into sentences, laid
/// out on a single letter line with single-space separators.
#[derive(Debug, Clone, PartialEq)]
pub struct AnnotatedText {
    words: Vec<WordToken>,
    /// Per sentence: (first global word index, word count).
    sentence_spans: Vec<(usize, usize)>,
    /// Letter line as char slots; `None` in `slot_to_word` marks separators.
    letter_slots: Vec<char>,
    slot_to_word: Vec<Option<usize>>,
    alphabet: Vec<char>,
}

impl AnnotatedText {
    pub fn words(&self) -> &[WordToken] {
        &self.words
    }

    pub fn word(&self, global_index: usize) -> &WordToken {
        &self.words[global_index]
    }

    pub fn n_words(&self) -> usize {
        self.words.len()
    }

    pub fn n_sentences(&self) -> usize {
        self.sentence_spans.len()
    }

    /// Words of one sentence, in order.
    pub fn sentence(&self, sentence_index: usize) -> &[WordToken] {
        let (start, len) = self.sentence_spans[sentence_index];
        &self.words[start..start + len]
    }

    pub fn letter_line_len(&self) -> usize {
        self.letter_slots.len()
    }

    pub fn letter_at(&self, slot: usize) -> char {
        self.letter_slots[slot]
    }

    /// The word occupying a letter slot, if the slot is not a separator.
    pub fn word_at_slot(&self, slot: usize) -> Option<usize> {
        self.slot_to_word.get(slot).copied().flatten()
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    /// The full letter line as a string (surfaces joined by single spaces).
    pub fn letter_line(&self) -> String {
        self.letter_slots.iter().collect()
    }

    fn set_predictabilities(&mut self, values: &[f64]) {
        debug_assert_eq!(values.len(), self.words.len());
        for (word, &p) in self.words.iter_mut().zip(values) {
            word.predictability = p;
        }
    }
}

/// Tokenize raw text against a lexicon.
///
/// Sentence terminators are `.`, `!`, `?`; other punctuation is stripped
/// in place. A chunk containing a digit or a symbol outside the alphabet
/// yields no token (its terminator, if any, still closes the sentence).
/// Predictability is set to a neutral 0.5, replaced by
/// [`predictability_from_bigrams`] or a lexicon override downstream.
pub fn tokenize(raw_text: &str, lexicon: &Lexicon) -> Result<AnnotatedText> {
    let mut sentences: Vec<Vec<String>> = Vec::new();
    let mut current: Vec<String> = Vec::new();

    for chunk in raw_text.split_whitespace() {
        let mut word = String::new();
        let mut rejected = false;
        let mut ends_sentence = false;
        for ch in chunk.chars().flat_map(|c| c.to_lowercase()) {
            if lexicon.alphabet.contains(&ch) {
                word.push(ch);
            } else if matches!(ch, '.' | '!' | '?') {
                ends_sentence = true;
            } else if ch.is_ascii_punctuation() {
                // stripped
            } else {
                rejected = true;
            }
        }
        if !rejected && !word.is_empty() {
            current.push(word);
        }
        if ends_sentence && !current.is_empty() {
            sentences.push(core::mem::take(&mut current));
        }
    }
    if !current.is_empty() {
        sentences.push(current);
    }
    if sentences.is_empty() {
        return Err(CoreError::EmptyText);
    }

    let mut words = Vec::new();
    let mut sentence_spans = Vec::new();
    let mut letter_slots: Vec<char> = Vec::new();
    let mut slot_to_word: Vec<Option<usize>> = Vec::new();
    let mut global_index = 0;

    for (sentence_index, sentence) in sentences.iter().enumerate() {
        let start = global_index;
        for (word_index_in_sentence, surface) in sentence.iter().enumerate() {
            if !letter_slots.is_empty() {
                letter_slots.push(' ');
                slot_to_word.push(None);
            }
            let first_letter_offset = letter_slots.len();
            for ch in surface.chars() {
                letter_slots.push(ch);
                slot_to_word.push(Some(global_index));
            }
            words.push(WordToken {
                surface: surface.clone(),
                sentence_index,
                word_index_in_sentence,
                global_index,
                first_letter_offset,
                frequency_rel: lexicon.frequency_rel(surface),
                predictability: lexicon.predictability_override(surface).unwrap_or(0.5),
                is_content: lexicon.is_content(surface),
            });
            global_index += 1;
        }
        sentence_spans.push((start, sentence.len()));
    }

    Ok(AnnotatedText {
        words,
        sentence_spans,
        letter_slots,
        slot_to_word,
        alphabet: lexicon.alphabet.clone(),
    })
}

/// Bigram statistics gathered from training texts.
struct BigramModel {
    unigrams: BTreeMap<String, u64>,
    bigrams: BTreeMap<(String, String), u64>,
    /// Occurrences of each word in non-sentence-final position, i.e. the
    /// normalizer for P(. | word).
    context_counts: BTreeMap<String, u64>,
    total_tokens: u64,
    /// Smoothing vocabulary size, at least 2 so probabilities stay below 1.
    vocab: u64,
}

impl BigramModel {
    fn fit(training: &[AnnotatedText]) -> Self {
        let mut unigrams: BTreeMap<String, u64> = BTreeMap::new();
        let mut bigrams: BTreeMap<(String, String), u64> = BTreeMap::new();
        let mut context_counts: BTreeMap<String, u64> = BTreeMap::new();
        let mut total_tokens = 0u64;
        for text in training {
            for s in 0..text.n_sentences() {
                let sentence = text.sentence(s);
                for (i, word) in sentence.iter().enumerate() {
                    *unigrams.entry(word.surface.clone()).or_insert(0) += 1;
                    total_tokens += 1;
                    if i + 1 < sentence.len() {
                        *context_counts.entry(word.surface.clone()).or_insert(0) += 1;
                        let key = (word.surface.clone(), sentence[i + 1].surface.clone());
                        *bigrams.entry(key).or_insert(0) += 1;
                    }
                }
            }
        }
        let vocab = (unigrams.len() as u64).max(2);
        BigramModel { unigrams, bigrams, context_counts, total_tokens, vocab }
    }

    /// Add-one smoothed P(word | context); `None` context means sentence-
    /// initial, which falls back to the smoothed unigram.
    fn predict(&self, context: Option<&str>, word: &str) -> f64 {
        match context {
            Some(ctx) => {
                let joint = self
                    .bigrams
                    .get(&(String::from(ctx), String::from(word)))
                    .copied()
                    .unwrap_or(0);
                let ctx_count = self.context_counts.get(ctx).copied().unwrap_or(0);
                (joint + 1) as f64 / (ctx_count + self.vocab) as f64
            }
            None => {
                let count = self.unigrams.get(word).copied().unwrap_or(0);
                (count + 1) as f64 / (self.total_tokens + self.vocab) as f64
            }
        }
    }
}

/// Annotate every token with an add-one smoothed bigram predictability
/// estimated from `training`; sentence-initial words get the smoothed
/// unigram probability. Requires at least one training text.
pub fn predictability_from_bigrams(
    mut text: AnnotatedText,
    training: &[AnnotatedText],
) -> AnnotatedText {
    assert!(!training.is_empty(), "bigram estimation needs at least one training text");
    let model = BigramModel::fit(training);
    let mut values = Vec::with_capacity(text.n_words());
    for word in text.words() {
        let context = if word.word_index_in_sentence == 0 {
            None
        } else {
            Some(text.word(word.global_index - 1).surface.as_str())
        };
        values.push(model.predict(context, &word.surface));
    }
    text.set_predictabilities(&values);
    text
}

/// Replace bigram estimates with lexicon-supplied predictability values
/// where the TSV carried the optional third column.
pub fn apply_predictability_overrides(
    mut text: AnnotatedText,
    lexicon: &Lexicon,
) -> AnnotatedText {
    let values: Vec<f64> = text
        .words()
        .iter()
        .map(|w| lexicon.predictability_override(&w.surface).unwrap_or(w.predictability))
        .collect();
    text.set_predictabilities(&values);
    text
}

/// A word-recognition candidate with its relative lexicon frequency.
#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    pub surface: String,
    pub freq_rel: f64,
}

/// All lexicon words of the token's length, most frequent first (ties are
/// lexicographic). The token's own surface is always included, with the
/// smoothing count when it is out of lexicon.
pub fn candidate_set(token: &WordToken, lexicon: &Lexicon) -> Vec<Candidate> {
    let len = token.len();
    let mut pool: Vec<(&str, u64)> = lexicon
        .entries
        .iter()
        .filter(|(w, _)| w.chars().count() == len)
        .map(|(w, &c)| (w.as_str(), c.max(1)))
        .collect();
    if !lexicon.entries.contains_key(&token.surface) {
        pool.push((token.surface.as_str(), 1));
    }
    pool.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
    pool.into_iter()
        .map(|(w, c)| Candidate {
            surface: String::from(w),
            freq_rel: c as f64 / lexicon.max_count as f64,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::borrow::ToOwned;
    use alloc::vec;

    fn lexicon_from(pairs: &[(&str, u64)]) -> Lexicon {
        let entries = pairs.iter().map(|(w, c)| ((*w).to_owned(), *c)).collect();
        Lexicon::new(entries, Lexicon::default_alphabet()).unwrap()
    }

    #[test]
    fn tokenize_layout_offsets() {
        let lex = lexicon_from(&[("the", 10), ("cat", 3), ("sat", 2)]);
        let text = tokenize("The cat sat.", &lex).unwrap();
        assert_eq!(text.n_sentences(), 1);
        let surfaces: Vec<&str> = text.words().iter().map(|w| w.surface.as_str()).collect();
        assert_eq!(surfaces, ["the", "cat", "sat"]);
        let offsets: Vec<usize> = text.words().iter().map(|w| w.first_letter_offset).collect();
        assert_eq!(offsets, [0, 4, 8]);
        assert_eq!(text.letter_line(), "the cat sat");
    }

    #[test]
    fn tokenize_splits_sentences() {
        let lex = lexicon_from(&[("hi", 1), ("go", 1)]);
        let text = tokenize("Hi. Go.", &lex).unwrap();
        assert_eq!(text.n_sentences(), 2);
        assert_eq!(text.sentence(0).len(), 1);
        assert_eq!(text.sentence(1).len(), 1);
    }

    #[test]
    fn tokenize_empty_is_error() {
        let lex = lexicon_from(&[("a", 1)]);
        assert_eq!(tokenize("", &lex), Err(CoreError::EmptyText));
        assert_eq!(tokenize("   \n\t ", &lex), Err(CoreError::EmptyText));
        // Only rejected chunks also counts as empty.
        assert_eq!(tokenize("123 42", &lex), Err(CoreError::EmptyText));
    }

    #[test]
    fn tokenize_strips_punctuation_and_drops_digit_words() {
        let lex = lexicon_from(&[("dont", 1), ("stop", 5)]);
        let text = tokenize("Don't stop, 3rd time!", &lex).unwrap();
        let surfaces: Vec<&str> = text.words().iter().map(|w| w.surface.as_str()).collect();
        assert_eq!(surfaces, ["dont", "stop", "time"]);
        assert_eq!(text.n_sentences(), 1);
    }

    #[test]
    fn frequency_rel_is_count_over_max() {
        let lex = lexicon_from(&[("the", 10), ("cat", 3)]);
        let text = tokenize("the cat mat.", &lex).unwrap();
        assert_eq!(text.word(0).frequency_rel, 1.0);
        assert_eq!(text.word(1).frequency_rel, 0.3);
        // out-of-lexicon word smoothed to count 1
        assert_eq!(text.word(2).frequency_rel, 0.1);
    }

    #[test]
    fn slot_to_word_marks_separators() {
        let lex = lexicon_from(&[("ab", 1), ("c", 1)]);
        let text = tokenize("ab c.", &lex).unwrap();
        assert_eq!(text.word_at_slot(0), Some(0));
        assert_eq!(text.word_at_slot(1), Some(0));
        assert_eq!(text.word_at_slot(2), None);
        assert_eq!(text.word_at_slot(3), Some(1));
    }

    #[test]
    fn bigram_example_hand_count() {
        let lex = lexicon_from(&[("a", 2), ("b", 2)]);
        let train = tokenize("a b. a b.", &lex).unwrap();
        let query = tokenize("a b.", &lex).unwrap();
        let query = predictability_from_bigrams(query, &[train]);
        // P(b | a) = (2 + 1) / (2 + V) with V = 2.
        assert!((query.word(1).predictability - 0.75).abs() < 1e-12);
        // Sentence-initial unigram: (2 + 1) / (4 + 2) = 0.5.
        assert!((query.word(0).predictability - 0.5).abs() < 1e-12);
    }

    #[test]
    fn bigram_unseen_word_gets_smoothing_floor() {
        let lex = lexicon_from(&[("a", 2), ("b", 2), ("zz", 1)]);
        let train = tokenize("a b. a b.", &lex).unwrap();
        let query = tokenize("zz zz.", &lex).unwrap();
        let query = predictability_from_bigrams(query, &[train]);
        // Unseen context and word: 1 / (0 + V) with V = 2.
        assert!((query.word(1).predictability - 0.5).abs() < 1e-12);
    }

    #[test]
    fn bigram_single_word_sentences_use_unigrams() {
        let lex = lexicon_from(&[("a", 2), ("b", 2)]);
        let train = tokenize("a. b. a.", &lex).unwrap();
        let query = tokenize("a. b.", &lex).unwrap();
        let query = predictability_from_bigrams(query, &[train.clone()]);
        // N = 3, V = 2: P(a) = 3/5, P(b) = 2/5.
        assert!((query.word(0).predictability - 0.6).abs() < 1e-12);
        assert!((query.word(1).predictability - 0.4).abs() < 1e-12);
    }

    #[test]
    fn bigram_probabilities_sum_to_one_over_vocab() {
        let lex = lexicon_from(&[("a", 1), ("b", 1), ("c", 1)]);
        let train = tokenize("a b c. b a c. c c a.", &lex).unwrap();
        let model = BigramModel::fit(&[train]);
        for ctx in ["a", "b", "c"] {
            let sum: f64 = ["a", "b", "c"].iter().map(|w| model.predict(Some(ctx), w)).sum();
            assert!((sum - 1.0).abs() < 1e-12, "context {ctx}: sum {sum}");
        }
        let unigram_sum: f64 = ["a", "b", "c"].iter().map(|w| model.predict(None, w)).sum();
        assert!((unigram_sum - 1.0).abs() < 1e-12);
    }

    #[test]
    fn candidate_set_same_length_sorted() {
        let lex = lexicon_from(&[("cat", 5), ("car", 7), ("dog", 5), ("the", 20), ("no", 9)]);
        let text = tokenize("cat.", &lex).unwrap();
        let cands = candidate_set(text.word(0), &lex);
        let surfaces: Vec<&str> = cands.iter().map(|c| c.surface.as_str()).collect();
        // length-3 words only, count desc then lexicographic
        assert_eq!(surfaces, ["the", "car", "cat", "dog"]);
        assert!((cands[0].freq_rel - 1.0).abs() < 1e-12);
    }

    #[test]
    fn candidate_set_contains_oov_token() {
        let lex = lexicon_from(&[("cat", 5), ("car", 7)]);
        let text = tokenize("cab.", &lex).unwrap();
        let cands = candidate_set(text.word(0), &lex);
        assert!(cands.iter().any(|c| c.surface == "cab"));
    }

    #[test]
    fn candidate_set_degenerate_singleton() {
        let lex = lexicon_from(&[("cat", 5)]);
        let text = tokenize("extraordinarily.", &lex).unwrap();
        let cands = candidate_set(text.word(0), &lex);
        assert_eq!(cands.len(), 1);
        assert_eq!(cands[0].surface, "extraordinarily");
    }

    #[test]
    fn overrides_win_over_bigrams() {
        let entries: BTreeMap<String, u64> =
            [("a".to_owned(), 2u64), ("b".to_owned(), 2u64)].into_iter().collect();
        let overrides: BTreeMap<String, f64> = [("b".to_owned(), 0.9f64)].into_iter().collect();
        let lex =
            Lexicon::with_overrides(entries, overrides, Lexicon::default_alphabet()).unwrap();
        let train = tokenize("a b. a b.", &lex).unwrap();
        let query = tokenize("a b.", &lex).unwrap();
        let query = predictability_from_bigrams(query, &[train]);
        let query = apply_predictability_overrides(query, &lex);
        assert!((query.word(1).predictability - 0.9).abs() < 1e-12);
        assert!((query.word(0).predictability - 0.5).abs() < 1e-12);
    }

    #[test]
    fn function_words_are_short_and_frequent() {
        let mut pairs: Vec<(String, u64)> = Vec::new();
        // 60 distinct mid-frequency fillers push rare words out of the top 50.
        for i in 0..60 {
            pairs.push((alloc::format!("filler{i:02}"), 100 + i));
        }
        pairs.push(("the".to_owned(), 1000));
        pairs.push(("of".to_owned(), 900));
        pairs.push(("ox".to_owned(), 1)); // short but rare
        let lex = Lexicon::new(pairs.into_iter().collect(), Lexicon::default_alphabet()).unwrap();
        assert!(!lex.is_content("the"));
        assert!(!lex.is_content("of"));
        assert!(lex.is_content("ox"));
        assert!(lex.is_content("filler00")); // frequent but long
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn word_strategy() -> impl Strategy<Value = String> {
            proptest::string::string_regex("[a-z]{1,8}").unwrap()
        }

        fn text_strategy() -> impl Strategy<Value = String> {
            proptest::collection::vec(
                proptest::collection::vec(word_strategy(), 1..6),
                1..5,
            )
            .prop_map(|sentences| {
                sentences
                    .iter()
                    .map(|s| alloc::format!("{}.", s.join(" ")))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
        }

        proptest! {
            #[test]
            fn round_trip_normalized_input(input in text_strategy()) {
                let lex = super::lexicon_from(&[("a", 1)]);
                let text = tokenize(&input, &lex).unwrap();
                // Re-render: surfaces joined by spaces, '.' after each sentence.
                let mut rendered = String::new();
                for s in 0..text.n_sentences() {
                    if s > 0 {
                        rendered.push(' ');
                    }
                    let words: Vec<&str> =
                        text.sentence(s).iter().map(|w| w.surface.as_str()).collect();
                    rendered.push_str(&words.join(" "));
                    rendered.push('.');
                }
                prop_assert_eq!(rendered, input);
                // Letter line equals surfaces joined by single spaces.
                let joined: Vec<&str> = text.words().iter().map(|w| w.surface.as_str()).collect();
                prop_assert_eq!(text.letter_line(), joined.join(" "));
            }

            #[test]
            fn count_scaling_invariance(
                counts in proptest::collection::btree_map(word_strategy(), 1u64..500, 2..20),
                scale in 2u64..10,
            ) {
                let base = Lexicon::new(counts.clone(), Lexicon::default_alphabet()).unwrap();
                let scaled_counts: BTreeMap<String, u64> =
                    counts.iter().map(|(w, c)| (w.clone(), c * scale)).collect();
                let scaled = Lexicon::new(scaled_counts, Lexicon::default_alphabet()).unwrap();
                for word in counts.keys() {
                    prop_assert!(
                        (base.frequency_rel(word) - scaled.frequency_rel(word)).abs() < 1e-12
                    );
                }
                let sample = counts.keys().next().unwrap();
                let text = tokenize(&alloc::format!("{sample}."), &base).unwrap();
                let a = candidate_set(text.word(0), &base);
                let b = candidate_set(text.word(0), &scaled);
                let sa: Vec<&str> = a.iter().map(|c| c.surface.as_str()).collect();
                let sb: Vec<&str> = b.iter().map(|c| c.surface.as_str()).collect();
                prop_assert_eq!(sa, sb);
            }

            #[test]
            fn predictabilities_in_open_unit_interval(input in text_strategy()) {
                let lex = super::lexicon_from(&[("a", 1)]);
                let text = tokenize(&input, &lex).unwrap();
                let text = predictability_from_bigrams(text.clone(), &[text.clone()]);
                for word in text.words() {
                    prop_assert!(word.predictability > 0.0 && word.predictability < 1.0);
                    prop_assert!(word.frequency_rel > 0.0 && word.frequency_rel <= 1.0);
                }
            }
        }
    }
}
