#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace vnlab {

/// One verified relation: lhs compared with rhs under a tolerance.
struct Check {
  std::string name;
  bool passed = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double tolerance = 0.0;
  double deviation = 0.0;
};

/// |lhs - rhs| / max(1, |lhs|, |rhs|) <= tol.
inline Check relative_check(std::string name, double lhs, double rhs, double tol) {
  const double dev = std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return {std::move(name), dev <= tol, lhs, rhs, tol, dev};
}

/// |lhs - rhs| <= tol.
inline Check absolute_check(std::string name, double lhs, double rhs, double tol) {
  const double dev = std::abs(lhs - rhs);
  return {std::move(name), dev <= tol, lhs, rhs, tol, dev};
}

/// lhs <= rhs + tol; the deviation is the excess over rhs (zero when satisfied).
inline Check bound_check(std::string name, double lhs, double rhs, double tol) {
  const double dev = std::max(0.0, lhs - rhs);
  return {std::move(name), dev <= tol, lhs, rhs, tol, dev};
}

/// A measured defect that must not exceed tol (compared against zero).
inline Check defect_check(std::string name, double defect, double tol) {
  return {std::move(name), defect <= tol, defect, 0.0, tol, defect};
}

inline bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

}  // namespace vnlab
