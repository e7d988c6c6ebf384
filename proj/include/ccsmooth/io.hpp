#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>

#include "ccsmooth/core.hpp"

namespace ccsmooth {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  /// 1-based; 0 when the problem is not tied to a line (e.g. empty input).
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct CsvOptions {
  /// 0-based column holding the ordinates; x is always column 0.
  std::size_t value_column = 1;
};

/// Comma-separated x,f rows. Blank lines and lines starting with '#' are
/// skipped; a first row that is not numeric is taken as a header.
DataSeries parse_csv(std::istream& in, const CsvOptions& opts = {});
DataSeries read_csv_file(const std::string& path, const CsvOptions& opts = {});

/// Summary plus the x, f, y columns. Indices are 1-based.
std::string approximation_json(const DataSeries& d, const Approximation& a);
/// x,f,y rows preceded by the summary as '#' comment lines.
std::string approximation_csv(const DataSeries& d, const Approximation& a);

/// Data points, the approximation, and the join parallelograms.
std::string render_svg(const DataSeries& d, const Approximation& a);

}  // namespace ccsmooth
