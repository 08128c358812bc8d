#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "ff5/errors.hpp"

namespace ff5::csv {

/// Line-oriented reader for the comma-delimited, unquoted files this
/// project consumes. Validates the header on open and tracks line numbers
/// for diagnostics.
class Reader {
 public:
  Reader(const std::string& path, const std::vector<std::string>& expected_header);

  /// Reads the next data row into `fields`. Returns false at end of file.
  /// Skips blank lines. Throws ParseError on field-count mismatch.
  bool next(std::vector<std::string>& fields);

  long line() const { return line_; }
  const std::string& path() const { return path_; }
  const std::string& column_name(std::size_t i) const { return header_[i]; }

  double parse_double(const std::vector<std::string>& fields, std::size_t i) const;
  int parse_int(const std::vector<std::string>& fields, std::size_t i) const;
  bool parse_bool01(const std::vector<std::string>& fields, std::size_t i) const;

  [[noreturn]] void fail(std::size_t column, const std::string& reason) const;

 private:
  std::ifstream in_;
  std::string path_;
  std::vector<std::string> header_;
  long line_ = 0;
};

std::vector<std::string> split_fields(const std::string& line);

/// %.{sig}g rendering; gives stable, locale-independent decimals.
std::string format_sig(double v, int significant_digits);
/// %.{prec}f rendering.
std::string format_fixed(double v, int decimals);

}  // namespace ff5::csv
