#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace linthresh::io {

/// RFC-4180 record reader: comma separated, double-quote quoting with ""
/// escapes, quoted fields may contain commas and line breaks. Accepts LF or
/// CRLF line endings.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  /// Reads the next record into `fields`; false at end of input.
  /// Throws Error(ParseError) on an unterminated quoted field.
  bool next(std::vector<std::string>& fields);

  /// 1-based physical line on which the last record started.
  std::size_t record_line() const noexcept { return record_line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
  std::size_t record_line_ = 0;
};

/// Quotes a field when it contains a delimiter, a quote or a newline.
std::string csv_escape(std::string_view field);

/// Joins fields with commas, escaping as needed.
std::string csv_join(const std::vector<std::string>& fields);

/// 17 significant digits, enough for any double to parse back bit-exact.
/// Non-finite values print as NaN, Inf, -Inf.
std::string format_double(double value);

/// Strict parse of a whole field as a finite or non-finite double
/// ("NaN", "Inf", "-Inf" accepted). Surrounding blanks are ignored.
std::optional<double> parse_double(std::string_view text);

}  // namespace linthresh::io
