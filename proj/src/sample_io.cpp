#include "ys/sample_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace ys::io {

CountSample read_count_sample(std::istream& in) {
  std::vector<Count> counts;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    Count value = 0;
    const char* first = line.data();
    const char* last = line.data() + line.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (line.empty() || ec != std::errc() || ptr != last) {
      throw FormatError("line " + std::to_string(number) + ": expected an integer, got '" +
                            line + "'",
                        number);
    }
    if (value < 1) {
      throw FormatError("line " + std::to_string(number) + ": count must be >= 1, got " +
                            std::to_string(value),
                        number);
    }
    counts.push_back(value);
  }
  if (counts.empty()) throw FormatError("count sample is empty", 0);
  return CountSample(std::move(counts));
}

CountSample read_count_sample_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_count_sample(in);
}

void write_count_sample(std::ostream& out, const CountSample& sample) {
  for (Count k : sample.counts()) out << k << '\n';
}

void write_count_sample_file(const std::filesystem::path& path, const CountSample& sample) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_count_sample(out, sample);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace ys::io
