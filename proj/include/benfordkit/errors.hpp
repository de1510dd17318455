// errors.hpp - exception hierarchy shared by every benfordkit module.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace benfordkit {

/// Argument outside the mathematical domain of an operation (bad digit, bad df, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Digit extraction attempted on zero or a non-numeric cell.
class ExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Statistic requested on an empty (or all-excluded) sample.
class DegenerateInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown variable, law name or malformed analysis spec.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed tabular input. Row and column are 1-based; 0 means "not applicable".
class IngestionError : public std::runtime_error {
 public:
  IngestionError(std::size_t row, std::size_t column, const std::string& what)
      : std::runtime_error(format(row, column, what)), row_(row), column_(column) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(std::size_t row, std::size_t column, const std::string& what) {
    std::string out;
    if (row > 0) out += "row " + std::to_string(row);
    if (column > 0) out += (out.empty() ? "" : ", ") + std::string("column ") + std::to_string(column);
    return out.empty() ? what : out + ": " + what;
  }

  std::size_t row_;
  std::size_t column_;
};

}  // namespace benfordkit
