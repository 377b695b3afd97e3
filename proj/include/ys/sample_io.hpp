#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ys/count_sample.hpp"

namespace ys::io {

/// A malformed count-sample file. `line()` is 1-based; 0 when not line-specific.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// One base-10 integer k ≥ 1 per LF-terminated line, no header. A trailing CR
/// on a line is tolerated.
CountSample read_count_sample(std::istream& in);
CountSample read_count_sample_file(const std::filesystem::path& path);

void write_count_sample(std::ostream& out, const CountSample& sample);
void write_count_sample_file(const std::filesystem::path& path, const CountSample& sample);

}  // namespace ys::io
