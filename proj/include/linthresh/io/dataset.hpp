#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "linthresh/error.hpp"
#include "linthresh/sample.hpp"

namespace linthresh::io {

struct DatasetSpec {
  std::filesystem::path path;
  std::string x_column;
  std::string y_column;
  /// Cell values treated as missing (compared after trimming blanks).
  std::vector<std::string> na_markers{"NA"};
};

struct Dataset {
  Sample sample;
  std::size_t rows_read = 0;
  /// Rows dropped because x or y was missing.
  std::size_t rows_dropped = 0;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t row, std::string column, const std::string& what)
      : Error(ErrorCode::ParseError, what), row_(row), column_(std::move(column)) {}

  /// 1-based data row (the header is row 0).
  std::size_t row() const noexcept { return row_; }
  const std::string& column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::string column_;
};

/// Reads the two named columns of a headed, comma-delimited file. Rows with a
/// missing marker in either column are dropped; every other cell in those two
/// columns must parse as a finite real.
///
/// Throws Error(Io), Error(MissingColumn), ParseError, Error(TooFewRows).
Dataset read_csv(const DatasetSpec& spec);

/// Writes a two-column file readable by read_csv.
void write_points_csv(const std::filesystem::path& path, const Sample& sample,
                      const std::string& x_column = "x", const std::string& y_column = "y");

}  // namespace linthresh::io
