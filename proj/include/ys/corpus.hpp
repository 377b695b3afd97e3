#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ys/count_sample.hpp"

namespace ys::corpus {

struct StripResult {
  std::string text;
  bool stripped = false;
  std::vector<std::string> warnings;
};

/// Keep the lines strictly between the first "*** START OF" line and the first
/// later "*** END OF" line (case-insensitive, any number of asterisks). Without
/// a start marker, or with an end marker preceding it, the text is returned
/// unchanged with a warning. A start marker with no end keeps everything after it.
StripResult strip_gutenberg(std::string_view text);

/// Letters are ASCII and Latin-1/Latin Extended-A; everything else separates
/// tokens unless enabled below. Input is decoded as UTF-8 with invalid
/// sequences replaced by U+FFFD (a separator).
struct TokenizerOptions {
  bool lowercase = true;
  bool keep_apostrophes = false;  // ' or U+2019 between two word characters
  bool keep_digits = false;
};

struct Preprocessing {
  bool gutenberg_stripped = false;
  TokenizerOptions tokenizer{};
  std::vector<std::string> warnings;
};

struct CorpusCounts {
  std::map<std::string, Count> vocabulary;
  Count n_unique = 0;
  Count n_tokens = 0;
  Preprocessing preprocessing{};
};

CorpusCounts tokenize_count(std::string_view text, const TokenizerOptions& options = {});

/// Words ordered by descending count, then ascending word.
std::vector<std::pair<std::string, Count>> ranked_vocabulary(const CorpusCounts& counts);

/// Per-word frequencies in ranked_vocabulary order. Throws DomainError when empty.
CountSample to_count_sample(const CorpusCounts& counts);

/// `word<TAB>count` lines in ranked_vocabulary order.
void write_vocabulary_tsv(std::ostream& out, const CorpusCounts& counts);

/// Strip (optionally) and tokenize one text.
CorpusCounts process_text(std::string_view text, bool strip, const TokenizerOptions& options);

}  // namespace ys::corpus
