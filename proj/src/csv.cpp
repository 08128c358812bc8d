#include "ff5/csv.hpp"

#include <cerrno>
#include <cstdlib>

namespace ff5::csv {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  if (!out.empty() && !out.back().empty() && out.back().back() == '\r')
    out.back().pop_back();
  return out;
}

Reader::Reader(const std::string& path, const std::vector<std::string>& expected_header)
    : in_(path), path_(path), header_(expected_header) {
  if (!in_) throw FileError(path, "cannot open file");
  std::string line;
  if (!std::getline(in_, line)) throw FileError(path, "empty file (missing header)");
  ++line_;
  auto fields = split_fields(line);
  if (fields != expected_header) {
    std::string want;
    for (std::size_t i = 0; i < expected_header.size(); ++i)
      want += (i ? "," : "") + expected_header[i];
    throw ParseError(path, line_, fields.empty() ? "" : fields[0],
                     "unexpected header, expected: " + want);
  }
}

bool Reader::next(std::vector<std::string>& fields) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (line.empty() || line == "\r") continue;
    auto parsed = split_fields(line);
    if (parsed.size() != header_.size())
      throw ParseError(path_, line_, "",
                       "expected " + std::to_string(header_.size()) + " fields, got " +
                           std::to_string(parsed.size()));
    fields = std::move(parsed);
    return true;
  }
  return false;
}

void Reader::fail(std::size_t column, const std::string& reason) const {
  throw ParseError(path_, line_, column < header_.size() ? header_[column] : "", reason);
}

double Reader::parse_double(const std::vector<std::string>& fields, std::size_t i) const {
  const std::string& s = fields[i];
  if (s.empty()) fail(i, "empty numeric field");
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE)
    fail(i, "not a number: '" + s + "'");
  return v;
}

int Reader::parse_int(const std::vector<std::string>& fields, std::size_t i) const {
  const std::string& s = fields[i];
  if (s.empty()) fail(i, "empty integer field");
  errno = 0;
  char* end = nullptr;
  long v = std::strtol(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size() || errno == ERANGE)
    fail(i, "not an integer: '" + s + "'");
  return static_cast<int>(v);
}

bool Reader::parse_bool01(const std::vector<std::string>& fields, std::size_t i) const {
  const std::string& s = fields[i];
  if (s == "0") return false;
  if (s == "1") return true;
  fail(i, "expected 0 or 1, got '" + s + "'");
}

std::string format_sig(double v, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, v);
  return buf;
}

std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

}  // namespace ff5::csv
