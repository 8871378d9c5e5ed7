#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mc {

/// One solver run. A missing `seconds` means the run did not finish.
struct TimingRecord {
  std::string problem;
  std::string config;
  std::optional<double> seconds;
};

/// CSV lines `problem,config,seconds`, with `DNF` for unfinished runs. An
/// optional header starting with `problem` is skipped. Throws input_error.
std::vector<TimingRecord> parse_timing_csv(std::string_view text);

/// Fraction of problems a config solved within a factor 2^tau of the best config.
struct ProfilePoint {
  double tau = 0.0;
  std::size_t solved = 0;
  std::size_t total = 0;
  double fraction = 0.0;
};

struct ProfileCurve {
  std::string config;
  std::vector<ProfilePoint> points;  // ascending tau
};

/// Performance profile over all configs, in order of first appearance. Every
/// curve is sampled at 0 and at every log2 ratio any config attains. Throws
/// std::invalid_argument when configs cover different problems, a pair
/// repeats, or a time is not positive.
std::vector<ProfileCurve> performance_profile(const std::vector<TimingRecord>& records);

/// `config,tau,fraction` with a header line.
std::string profile_csv(const std::vector<ProfileCurve>& curves);

}  // namespace mc
