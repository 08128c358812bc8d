#pragma once

#include <stdexcept>
#include <string>

namespace ff5 {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A referenced input file does not exist or cannot be opened.
class FileError : public Error {
 public:
  FileError(const std::string& path, const std::string& reason)
      : Error(path + ": " + reason), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Malformed input data; carries file, 1-based line number and column name.
class ParseError : public Error {
 public:
  ParseError(const std::string& path, long line, const std::string& column,
             const std::string& reason)
      : Error(path + ":" + std::to_string(line) + ": column '" + column +
              "': " + reason),
        path_(path),
        line_(line),
        column_(column) {}
  const std::string& path() const { return path_; }
  long line() const { return line_; }
  const std::string& column() const { return column_; }

 private:
  std::string path_;
  long line_;
  std::string column_;
};

}  // namespace ff5
