#include "mc/profile.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mc/types.hpp"

namespace mc {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string join(const std::set<std::string>& names) {
  std::string out;
  for (const auto& name : names) {
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

}  // namespace

std::vector<TimingRecord> parse_timing_csv(std::string_view text) {
  std::vector<TimingRecord> records;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> fields;
    std::string_view rest = line;
    for (auto comma = rest.find(','); comma != std::string_view::npos; comma = rest.find(',')) {
      fields.push_back(trim(rest.substr(0, comma)));
      rest = rest.substr(comma + 1);
    }
    fields.push_back(trim(rest));
    if (fields.size() != 3) throw input_error("expected 'problem,config,seconds'", line_no);
    if (records.empty() && fields[0] == "problem") continue;

    TimingRecord record{std::string(fields[0]), std::string(fields[1]), std::nullopt};
    if (fields[2] != "DNF") {
      double seconds = 0.0;
      const auto* end = fields[2].data() + fields[2].size();
      const auto [ptr, ec] = std::from_chars(fields[2].data(), end, seconds);
      if (ec != std::errc{} || ptr != end) throw input_error("seconds is not a number", line_no);
      if (!(seconds > 0.0)) throw input_error("seconds must be positive", line_no);
      record.seconds = seconds;
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<ProfileCurve> performance_profile(const std::vector<TimingRecord>& records) {
  std::vector<std::string> configs;
  std::map<std::string, std::map<std::string, std::optional<double>>> times;  // config -> problem
  for (const auto& r : records) {
    if (r.seconds && !(*r.seconds > 0.0)) {
      throw std::invalid_argument("non-positive time for " + r.problem + " / " + r.config);
    }
    auto& row = times[r.config];
    if (row.empty()) configs.push_back(r.config);
    if (!row.emplace(r.problem, r.seconds).second) {
      throw std::invalid_argument("duplicate record for " + r.problem + " / " + r.config);
    }
  }
  if (configs.empty()) return {};

  std::set<std::string> problems;
  for (const auto& [config, row] : times) {
    for (const auto& [problem, t] : row) problems.insert(problem);
  }
  for (const auto& config : configs) {
    std::set<std::string> missing;
    for (const auto& p : problems) {
      if (!times[config].contains(p)) missing.insert(p);
    }
    if (!missing.empty()) {
      throw std::invalid_argument("config " + config + " has no record for: " + join(missing));
    }
  }

  std::map<std::string, double> best;
  for (const auto& p : problems) {
    for (const auto& config : configs) {
      const auto& t = times[config][p];
      if (t && (!best.contains(p) || *t < best[p])) best[p] = *t;
    }
  }

  // log2 ratio per (config, problem); absent when unsolved.
  std::map<std::string, std::vector<double>> ratios;
  std::set<double> taus{0.0};
  for (const auto& config : configs) {
    for (const auto& p : problems) {
      const auto& t = times[config][p];
      if (!t) continue;
      const double tau = std::log2(*t / best[p]);
      ratios[config].push_back(tau);
      taus.insert(tau);
    }
  }

  std::vector<ProfileCurve> curves;
  for (const auto& config : configs) {
    ProfileCurve curve{config, {}};
    auto& mine = ratios[config];
    std::sort(mine.begin(), mine.end());
    for (double tau : taus) {
      const auto solved = static_cast<std::size_t>(
          std::upper_bound(mine.begin(), mine.end(), tau) - mine.begin());
      curve.points.push_back({tau, solved, problems.size(),
                              static_cast<double>(solved) / static_cast<double>(problems.size())});
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

std::string profile_csv(const std::vector<ProfileCurve>& curves) {
  std::ostringstream out;
  out.precision(17);
  out << "config,tau,fraction\n";
  for (const auto& curve : curves) {
    for (const auto& p : curve.points) out << curve.config << ',' << p.tau << ',' << p.fraction << '\n';
  }
  return out.str();
}

}  // namespace mc
