#include "fracopt/returns_csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracopt/error.hpp"

namespace fracopt {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    const auto cell = std::string_view(line).substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    cells.emplace_back(trim(cell));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return cells;
}

std::optional<double> parse_number(std::string_view cell) {
  if (cell.empty()) return std::nullopt;
  if (cell.front() == '+') cell.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || ptr != cell.data() + cell.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

ReturnsMatrix parse_returns_csv(std::istream& in, ReturnsUnit unit, LabelColumn labels) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    header = split(line);
    break;
  }
  if (header.empty()) throw Error(ErrorKind::InsufficientData, "CSV has no header row");

  std::optional<bool> has_labels;
  if (labels == LabelColumn::Present) has_labels = true;
  if (labels == LabelColumn::Absent) has_labels = false;

  std::vector<double> values;
  std::vector<std::string> period_labels;
  std::size_t rows = 0;
  const double factor = unit == ReturnsUnit::Percent ? 0.01 : 1.0;

  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split(line);
    if (cells.size() != header.size()) {
      parse_error(line_no, "expected " + std::to_string(header.size()) + " cells, found " +
                               std::to_string(cells.size()));
    }
    if (!has_labels) has_labels = !parse_number(cells.front()).has_value();

    const std::size_t first = *has_labels ? 1 : 0;
    if (*has_labels) period_labels.push_back(cells.front());
    for (std::size_t c = first; c < cells.size(); ++c) {
      const auto v = parse_number(cells[c]);
      if (!v) {
        parse_error(line_no, "column " + std::to_string(c + 1) + ": '" + cells[c] +
                                 "' is not a finite number");
      }
      values.push_back(*v * factor);
    }
    ++rows;
  }

  if (rows < 2) {
    throw Error(ErrorKind::InsufficientData,
                "need at least 2 data rows, found " + std::to_string(rows));
  }
  const std::size_t first = *has_labels ? 1 : 0;
  if (header.size() <= first) throw Error(ErrorKind::InsufficientData, "CSV has no asset columns");

  ReturnsMatrix out;
  out.asset_labels.assign(header.begin() + static_cast<std::ptrdiff_t>(first), header.end());
  out.values = Matrix(rows, header.size() - first, std::move(values));
  out.period_labels = std::move(period_labels);
  return out;
}

ReturnsMatrix load_returns_csv(const std::filesystem::path& path, ReturnsUnit unit,
                               LabelColumn labels) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path.string() + "'");
  return parse_returns_csv(in, unit, labels);
}

}  // namespace fracopt
