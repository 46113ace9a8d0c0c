#pragma once

/**
 * @file report.hpp
 * @brief Tabular check reports and their human, JSON and CSV renderings.
 *
 * Every row of a report is one check. Cells are integers, booleans or
 * strings; rationals and big integers are always strings ("p/q", "-123")
 * so nothing is ever rounded.
 *
 * JSON layout:
 *   {
 *     "command": "thm-a1 --max-k 4",
 *     "results": [ {"k": 2, "j": 1, ..., "holds": true}, ... ],
 *     "summary": {"checked": 2, "held": 2, "failed": 0},
 *     "version": "1.0.0"
 *   }
 * An internal check failure adds "internal_error" to the summary.
 */

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace steinfill {

inline constexpr const char* kVersion = "1.0.0";

enum class Format { human, json, csv };

using Cell = std::variant<std::int64_t, bool, std::string>;

struct Row {
  std::vector<Cell> cells;  ///< aligned with Report::columns
  bool holds = true;
};

struct Summary {
  std::int64_t checked = 0;
  std::int64_t held = 0;
  std::int64_t failed = 0;

  friend bool operator==(const Summary&, const Summary&) = default;
};

struct Report {
  std::string command;
  std::vector<std::string> columns;
  std::vector<Row> results;
  std::optional<std::string> internal_error;
  std::string version = kVersion;

  void add(std::vector<Cell> cells, bool holds) { results.push_back({std::move(cells), holds}); }

  Summary summary() const {
    Summary s;
    s.checked = static_cast<std::int64_t>(results.size());
    s.held = std::count_if(results.begin(), results.end(), [](const Row& r) { return r.holds; });
    s.failed = s.checked - s.held;
    return s;
  }

  /// 0 when every check held, 1 on any failure or internal error.
  int exit_code() const { return internal_error || summary().failed > 0 ? 1 : 0; }
};

inline std::string cell_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

inline nlohmann::ordered_json to_json(const Report& report) {
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const auto& row : report.results) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < report.columns.size() && i < row.cells.size(); ++i) {
      std::visit([&](const auto& v) { obj[report.columns[i]] = v; }, row.cells[i]);
    }
    obj["holds"] = row.holds;
    results.push_back(std::move(obj));
  }
  const Summary s = report.summary();
  nlohmann::ordered_json summary = {{"checked", s.checked}, {"held", s.held}, {"failed", s.failed}};
  if (report.internal_error) summary["internal_error"] = *report.internal_error;

  nlohmann::ordered_json out;
  out["command"] = report.command;
  out["results"] = std::move(results);
  out["summary"] = std::move(summary);
  out["version"] = report.version;
  return out;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string render_human(const Report& report) {
  std::vector<std::string> header = report.columns;
  header.emplace_back("holds");
  std::vector<std::vector<std::string>> table;
  for (const auto& row : report.results) {
    std::vector<std::string> line;
    for (const auto& c : row.cells) line.push_back(cell_text(c));
    line.emplace_back(row.holds ? "yes" : "NO");
    table.push_back(std::move(line));
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) {
    width[i] = header[i].size();
    for (const auto& line : table) width[i] = std::max(width[i], line[i].size());
  }
  std::ostringstream os;
  const auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i > 0) os << "  ";
      os << std::string(width[i] - line[i].size(), ' ') << line[i];
    }
    os << '\n';
  };
  emit(header);
  for (const auto& line : table) emit(line);
  const Summary s = report.summary();
  os << "checked " << s.checked << ", held " << s.held << ", failed " << s.failed << '\n';
  if (report.internal_error) os << "INTERNAL CHECK FAILURE: " << *report.internal_error << '\n';
  return os.str();
}

inline std::string render_csv(const Report& report) {
  std::ostringstream os;
  for (const auto& c : report.columns) os << csv_field(c) << ',';
  os << "holds\r\n";
  for (const auto& row : report.results) {
    for (const auto& c : row.cells) os << csv_field(cell_text(c)) << ',';
    os << (row.holds ? "true" : "false") << "\r\n";
  }
  return os.str();
}

}  // namespace detail

inline std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::json:
      return to_json(report).dump(2) + "\n";
    case Format::csv:
      return detail::render_csv(report);
    case Format::human:
      break;
  }
  return detail::render_human(report);
}

}  // namespace steinfill
