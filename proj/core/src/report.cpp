#include "sortnet/report.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <fmt/format.h>

#include "sortnet/error.hpp"

namespace sortnet {

double PerNResult::mean() const {
  if (raw.empty()) return 0.0;
  return std::accumulate(raw.begin(), raw.end(), 0.0) / raw.size();
}

double PerNResult::sd() const {
  if (raw.size() < 2) return 0.0;
  const double m = mean();
  double ss = 0.0;
  for (double v : raw) ss += (v - m) * (v - m);
  return std::sqrt(ss / (raw.size() - 1));
}

double PerNResult::min() const {
  return raw.empty() ? 0.0 : *std::min_element(raw.begin(), raw.end());
}

double PerNResult::max() const {
  return raw.empty() ? 0.0 : *std::max_element(raw.begin(), raw.end());
}

const PerNResult& ExperimentReport::at(int n) const {
  for (const auto& r : per_n) {
    if (r.n == n) return r;
  }
  throw DomainError("report has no entry for n=" + std::to_string(n));
}

namespace {

constexpr const char* kReserved[] = {"n", "mean", "sd", "min", "max", "raw"};

bool is_reserved(const std::string& key) {
  return std::find(std::begin(kReserved), std::end(kReserved), key) !=
         std::end(kReserved);
}

}  // namespace

nlohmann::json report_to_json(const ExperimentReport& report,
                              bool include_timing) {
  nlohmann::json j;
  j["experiment"] = report.experiment;
  j["version"] = report.version;
  j["params"] = report.params;
  auto& per_n = j["per_n"] = nlohmann::json::array();
  for (const auto& r : report.per_n) {
    nlohmann::json e;
    e["n"] = r.n;
    e["mean"] = r.mean();
    e["sd"] = r.sd();
    e["min"] = r.min();
    e["max"] = r.max();
    for (const auto& [key, value] : r.extras) e[key] = value;
    e["raw"] = r.raw;
    per_n.push_back(std::move(e));
  }
  if (include_timing && report.wall_clock_seconds) {
    j["wall_clock_s"] = *report.wall_clock_seconds;
  }
  return j;
}

ExperimentReport report_from_json(const nlohmann::json& j) {
  try {
    ExperimentReport report;
    report.experiment = j.at("experiment").get<std::string>();
    report.version = j.at("version").get<std::string>();
    report.params = j.at("params");
    for (const auto& e : j.at("per_n")) {
      PerNResult r;
      r.n = e.at("n").get<int>();
      r.raw = e.at("raw").get<std::vector<double>>();
      for (const auto& [key, value] : e.items()) {
        if (!is_reserved(key)) r.extras[key] = value.get<double>();
      }
      report.per_n.push_back(std::move(r));
    }
    if (j.contains("wall_clock_s")) {
      report.wall_clock_seconds = j["wall_clock_s"].get<double>();
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed report JSON: ") + e.what());
  }
}

namespace {

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

std::string fmt_double(double v) { return fmt::format("{:.17g}", v); }

double parse_double(const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw DataError("malformed number in report CSV: '" + text + "'");
  }
}

}  // namespace

std::string report_to_csv(const ExperimentReport& report, bool include_timing) {
  std::string out = "kind,n,key,index,value\n";
  auto row = [&](const std::string& kind, const std::string& n,
                 const std::string& key, const std::string& index,
                 const std::string& value) {
    out += fmt::format("{},{},{},{},{}\n", kind, n, csv_quote(key), index,
                       csv_quote(value));
  };
  row("meta", "", "experiment", "", nlohmann::json(report.experiment).dump());
  row("meta", "", "version", "", nlohmann::json(report.version).dump());
  if (include_timing && report.wall_clock_seconds) {
    row("meta", "", "wall_clock_s", "", fmt_double(*report.wall_clock_seconds));
  }
  for (const auto& [key, value] : report.params.items()) {
    row("param", "", key, "", value.dump());
  }
  for (const auto& r : report.per_n) {
    const auto n = std::to_string(r.n);
    row("n", n, "", "", "");
    for (const auto& [key, value] : r.extras) {
      row("extra", n, key, "", fmt_double(value));
    }
    for (std::size_t i = 0; i < r.raw.size(); ++i) {
      row("raw", n, "", std::to_string(i), fmt_double(r.raw[i]));
    }
  }
  return out;
}

ExperimentReport report_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "kind,n,key,index,value") {
    throw DataError("report CSV is missing its header");
  }
  ExperimentReport report;
  report.version.clear();
  auto find_n = [&](const std::string& n) -> PerNResult& {
    const int value = static_cast<int>(parse_double(n));
    for (auto& r : report.per_n) {
      if (r.n == value) return r;
    }
    throw DataError("report CSV row refers to undeclared n=" + n);
  };
  try {
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto f = csv_split(line);
      if (f.size() != 5) throw DataError("report CSV row has wrong arity: " + line);
      const auto& kind = f[0];
      if (kind == "meta") {
        if (f[2] == "experiment") {
          report.experiment = nlohmann::json::parse(f[4]).get<std::string>();
        } else if (f[2] == "version") {
          report.version = nlohmann::json::parse(f[4]).get<std::string>();
        } else if (f[2] == "wall_clock_s") {
          report.wall_clock_seconds = parse_double(f[4]);
        }
      } else if (kind == "param") {
        report.params[f[2]] = nlohmann::json::parse(f[4]);
      } else if (kind == "n") {
        report.per_n.push_back({static_cast<int>(parse_double(f[1])), {}, {}});
      } else if (kind == "extra") {
        find_n(f[1]).extras[f[2]] = parse_double(f[4]);
      } else if (kind == "raw") {
        auto& r = find_n(f[1]);
        const auto index = static_cast<std::size_t>(parse_double(f[3]));
        if (index != r.raw.size()) throw DataError("raw rows out of order");
        r.raw.push_back(parse_double(f[4]));
      } else {
        throw DataError("unknown report CSV row kind '" + kind + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed JSON field in report CSV: ") + e.what());
  }
  return report;
}

}  // namespace sortnet
