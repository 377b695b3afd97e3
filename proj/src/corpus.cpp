#include "ys/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "ys/special_fn.hpp"

namespace ys::corpus {
namespace {

constexpr char32_t kReplacement = 0xFFFD;

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// "<one or more '*'><spaces>start of" anywhere in the line.
bool has_marker(std::string_view line, std::string_view keyword) {
  const std::string lower = lower_ascii(line);
  std::size_t pos = lower.find(keyword);
  while (pos != std::string::npos) {
    std::size_t i = pos;
    while (i > 0 && (lower[i - 1] == ' ' || lower[i - 1] == '\t')) --i;
    if (i > 0 && lower[i - 1] == '*') return true;
    pos = lower.find(keyword, pos + 1);
  }
  return false;
}

struct Line {
  std::size_t begin;
  std::size_t end;  // one past the terminating '\n', or text size
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t nl = text.find('\n', start);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl + 1;
    lines.push_back({start, end});
    start = end;
  }
  return lines;
}

// Decodes one code point starting at text[i], advancing i.
char32_t decode_utf8(std::string_view text, std::size_t& i) {
  const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(text[k]); };
  const unsigned char b0 = byte(i);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int len = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2, cp = b0 & 0x1F, min = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3, cp = b0 & 0x0F, min = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4, cp = b0 & 0x07, min = 0x10000;
  } else {
    ++i;
    return kReplacement;
  }
  if (i + static_cast<std::size_t>(len) > text.size()) {
    ++i;
    return kReplacement;
  }
  for (int k = 1; k < len; ++k) {
    const unsigned char b = byte(i + static_cast<std::size_t>(k));
    if ((b & 0xC0) != 0x80) {
      ++i;
      return kReplacement;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  i += static_cast<std::size_t>(len);
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return kReplacement;
  return cp;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool is_letter(char32_t cp) {
  if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) return true;
  if (cp >= 0xC0 && cp <= 0xFF) return cp != 0xD7 && cp != 0xF7;
  return cp >= 0x100 && cp <= 0x17F;
}

bool is_apostrophe(char32_t cp) { return cp == '\'' || cp == 0x2019; }

char32_t to_lower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 32;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
  if (cp >= 0x100 && cp <= 0x17F) {
    // Latin Extended-A pairs upper/lower case on adjacent code points; the
    // parity of the upper-case member flips in the 0x139–0x148 and 0x179–0x17E runs.
    const bool odd_upper = (cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E);
    if (cp == 0x130 || cp == 0x131 || cp == 0x138 || cp == 0x149 || cp == 0x17F) return cp;
    if (odd_upper ? (cp % 2 == 1) : (cp % 2 == 0)) return cp + 1;
  }
  return cp;
}

}  // namespace

StripResult strip_gutenberg(std::string_view text) {
  StripResult result;
  const auto lines = split_lines(text);
  auto line_view = [&](const Line& l) { return text.substr(l.begin, l.end - l.begin); };

  std::size_t start = lines.size();
  std::size_t first_end = lines.size();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto view = line_view(lines[i]);
    if (start == lines.size() && has_marker(view, "start of")) start = i;
    if (first_end == lines.size() && has_marker(view, "end of")) first_end = i;
  }

  if (start == lines.size()) {
    result.text = std::string(text);
    result.warnings.push_back(first_end == lines.size()
                                  ? "no Gutenberg start/end markers found; text kept unchanged"
                                  : "end marker without start marker; text kept unchanged");
    return result;
  }
  if (first_end < start) {
    result.text = std::string(text);
    result.warnings.push_back("Gutenberg end marker precedes start marker; text kept unchanged");
    return result;
  }

  std::size_t end = lines.size();
  for (std::size_t i = start + 1; i < lines.size(); ++i) {
    if (has_marker(line_view(lines[i]), "end of")) {
      end = i;
      break;
    }
  }
  if (end == lines.size()) {
    result.warnings.push_back("Gutenberg end marker missing; kept everything after start marker");
  }
  const std::size_t from = lines[start].end;
  const std::size_t to = end == lines.size() ? text.size() : lines[end].begin;
  result.text = std::string(text.substr(from, to - from));
  result.stripped = true;
  return result;
}

CorpusCounts tokenize_count(std::string_view text, const TokenizerOptions& options) {
  CorpusCounts counts;
  counts.preprocessing.tokenizer = options;

  std::vector<char32_t> cps;
  cps.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) cps.push_back(decode_utf8(text, i));

  auto is_word = [&](char32_t cp) {
    return is_letter(cp) || (options.keep_digits && cp >= '0' && cp <= '9');
  };

  std::string token;
  auto flush = [&] {
    if (!token.empty()) {
      ++counts.vocabulary[token];
      ++counts.n_tokens;
      token.clear();
    }
  };
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const char32_t cp = cps[i];
    if (is_word(cp)) {
      append_utf8(token, options.lowercase ? to_lower(cp) : cp);
    } else if (options.keep_apostrophes && is_apostrophe(cp) && !token.empty() &&
               i + 1 < cps.size() && is_word(cps[i + 1])) {
      token.push_back('\'');
    } else {
      flush();
    }
  }
  flush();
  counts.n_unique = static_cast<Count>(counts.vocabulary.size());
  return counts;
}

std::vector<std::pair<std::string, Count>> ranked_vocabulary(const CorpusCounts& counts) {
  std::vector<std::pair<std::string, Count>> ranked(counts.vocabulary.begin(),
                                                    counts.vocabulary.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return ranked;
}

CountSample to_count_sample(const CorpusCounts& counts) {
  if (counts.vocabulary.empty()) throw DomainError("to_count_sample: corpus is empty");
  std::vector<Count> values;
  values.reserve(counts.vocabulary.size());
  for (const auto& [word, count] : ranked_vocabulary(counts)) values.push_back(count);
  return CountSample(std::move(values));
}

void write_vocabulary_tsv(std::ostream& out, const CorpusCounts& counts) {
  for (const auto& [word, count] : ranked_vocabulary(counts)) {
    out << word << '\t' << count << '\n';
  }
}

CorpusCounts process_text(std::string_view text, bool strip, const TokenizerOptions& options) {
  if (!strip) return tokenize_count(text, options);
  StripResult stripped = strip_gutenberg(text);
  CorpusCounts counts = tokenize_count(stripped.text, options);
  counts.preprocessing.gutenberg_stripped = stripped.stripped;
  counts.preprocessing.warnings = std::move(stripped.warnings);
  return counts;
}

}  // namespace ys::corpus
