#include <charconv>
#include <cmath>
#include <sstream>

#include "nlwave/harness.hpp"

namespace nlwave::harness {

bool StudyReport::passed() const {
  for (const auto& [name, ok] : verdicts) {
    if (!ok) {
      return false;
    }
  }
  return true;
}

std::string format_number(double x) {
  if (std::isnan(x)) {
    return "nan";
  }
  if (std::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, result.ptr);
}

std::string to_csv(const StudyReport& report) {
  std::ostringstream s;
  s << "# study=" << report.study << " config=" << report.config.dump() << '\n';
  for (std::size_t c = 0; c < report.columns.size(); ++c) {
    s << (c ? "," : "") << report.columns[c];
  }
  s << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      s << (c ? "," : "") << format_number(row[c]);
    }
    s << '\n';
  }
  return s.str();
}

nlohmann::json to_json(const StudyReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (double x : row) {
      r.push_back(std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr));
    }
    rows.push_back(std::move(r));
  }
  nlohmann::json verdicts = nlohmann::json::object();
  for (const auto& [name, ok] : report.verdicts) {
    verdicts[name] = ok;
  }
  return {{"study", report.study},       {"config", report.config}, {"columns", report.columns},
          {"rows", std::move(rows)},     {"verdicts", verdicts},    {"passed", report.passed()}};
}

}  // namespace nlwave::harness
