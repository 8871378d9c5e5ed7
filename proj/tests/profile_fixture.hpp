#pragma once

// Three configs over ten problems. Every ratio to the per-problem best is a
// power of two, so the expected points are exact.
//
//        A    B    C     log2 ratio  A  B  C
//   p0   1    2    4                 0  1  2
//   p1   2    1    1                 1  0  0
//   p2   4    4    1                 2  2  0
//   p3   1    DNF  8                 0  -  3
//   p4   8    1    2                 3  0  1
//   p5   DNF  DNF  3                 -  -  0
//   p6   2    2    2                 0  0  0
//   p7   1    4    2                 0  2  1
//   p8   DNF  1    DNF               -  0  -
//   p9   3    6    12                0  1  2

#include <string>
#include <vector>

namespace support {

inline const char* kProfileFixture =
    "problem,config,seconds\n"
    "p0,A,1\np0,B,2\np0,C,4\n"
    "p1,A,2\np1,B,1\np1,C,1\n"
    "p2,A,4\np2,B,4\np2,C,1\n"
    "p3,A,1\np3,B,DNF\np3,C,8\n"
    "p4,A,8\np4,B,1\np4,C,2\n"
    "p5,A,DNF\np5,B,DNF\np5,C,3\n"
    "p6,A,2\np6,B,2\np6,C,2\n"
    "p7,A,1\np7,B,4\np7,C,2\n"
    "p8,A,DNF\np8,B,1\np8,C,DNF\n"
    "p9,A,3\np9,B,6\np9,C,12\n";

struct ExpectedCurve {
  std::string config;
  std::vector<std::pair<double, double>> points;  // (tau, fraction)
};

inline std::vector<ExpectedCurve> profile_fixture_expected() {
  return {
      {"A", {{0, 0.5}, {1, 0.6}, {2, 0.7}, {3, 0.8}}},
      {"B", {{0, 0.4}, {1, 0.6}, {2, 0.8}, {3, 0.8}}},
      {"C", {{0, 0.4}, {1, 0.6}, {2, 0.8}, {3, 0.9}}},
  };
}

}  // namespace support
