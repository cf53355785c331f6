#include "linthresh/io/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "linthresh/io/csv.hpp"

namespace linthresh::io {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::size_t column_index(const std::vector<std::string>& header, const std::string& name,
                         const std::filesystem::path& path) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (trim(header[i]) == name) return i;
  }
  throw Error(ErrorCode::MissingColumn, path.string() + ": no column named '" + name + "'");
}

}  // namespace

Dataset read_csv(const DatasetSpec& spec) {
  std::ifstream in(spec.path);
  if (!in) throw Error(ErrorCode::Io, spec.path.string() + ": cannot open for reading");

  CsvReader reader(in);
  std::vector<std::string> fields;
  if (!reader.next(fields)) throw Error(ErrorCode::TooFewRows, spec.path.string() + ": empty file");
  const std::size_t xi = column_index(fields, spec.x_column, spec.path);
  const std::size_t yi = column_index(fields, spec.y_column, spec.path);

  auto is_na = [&](const std::string& cell) {
    const std::string t = trim(cell);
    return std::find(spec.na_markers.begin(), spec.na_markers.end(), t) != spec.na_markers.end();
  };

  std::vector<Point> points;
  std::size_t row = 0;
  std::size_t dropped = 0;
  while (reader.next(fields)) {
    if (fields.size() == 1 && trim(fields[0]).empty()) continue;  // blank line
    ++row;
    const auto cell = [&](std::size_t idx, const std::string& name) -> const std::string& {
      if (idx >= fields.size()) {
        throw ParseError(row, name,
                         spec.path.string() + ": row " + std::to_string(row) + " has no '" + name + "' cell");
      }
      return fields[idx];
    };
    const std::string& xs = cell(xi, spec.x_column);
    const std::string& ys = cell(yi, spec.y_column);
    if (is_na(xs) || is_na(ys)) {
      ++dropped;
      continue;
    }
    Point p{};
    for (auto [text, name, out] : {std::tuple{&xs, &spec.x_column, &p.x}, std::tuple{&ys, &spec.y_column, &p.y}}) {
      const auto v = parse_double(*text);
      if (!v || !std::isfinite(*v)) {
        throw ParseError(row, *name,
                         spec.path.string() + ": row " + std::to_string(row) + ", column '" + *name +
                             "': cannot parse '" + *text + "' as a finite number");
      }
      *out = *v;
    }
    points.push_back(p);
  }

  if (points.size() < Sample::kMinSize) {
    throw Error(ErrorCode::TooFewRows, spec.path.string() + ": " + std::to_string(points.size()) +
                                           " complete rows, need at least 3");
  }
  return Dataset{Sample(std::move(points)), row, dropped};
}

void write_points_csv(const std::filesystem::path& path, const Sample& sample, const std::string& x_column,
                      const std::string& y_column) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, path.string() + ": cannot open for writing");
  out << csv_join({x_column, y_column}) << '\n';
  for (const Point& p : sample.points()) out << format_double(p.x) << ',' << format_double(p.y) << '\n';
  if (!out) throw Error(ErrorCode::Io, path.string() + ": write failed");
}

}  // namespace linthresh::io
