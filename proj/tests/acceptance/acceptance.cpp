// One line per criterion; exit status 0 iff every criterion passes.
#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "vnlab/campaign.hpp"

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

Outcome from_checks(const std::vector<vnlab::Check>& checks) {
  std::size_t failed = 0;
  double worst = 0.0;
  std::string worst_name;
  for (const vnlab::Check& c : checks) {
    if (!c.passed) ++failed;
    const double ratio = c.tolerance > 0.0 ? c.deviation / c.tolerance : (c.deviation > 0.0 ? INFINITY : 0.0);
    if (!(ratio <= worst)) {
      worst = ratio;
      worst_name = c.name;
    }
  }
  std::ostringstream os;
  os << checks.size() << " cases, " << failed << " failed";
  if (!worst_name.empty()) os << ", worst deviation/tolerance " << std::setprecision(3) << worst << " (" << worst_name << ")";
  return {failed == 0 && !checks.empty(), os.str()};
}

std::string capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 1 << 16> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

Outcome determinism() {
  const std::string cmd = std::string(VNLAB_CLI_PATH) + " selftest --seed 7 2>/dev/null";
  int s1 = 0, s2 = 0;
  const std::string a = capture(cmd, s1);
  const std::string b = capture(cmd, s2);
  std::ostringstream os;
  os << "two runs, " << a.size() << " and " << b.size() << " bytes, exit " << s1 << "/" << s2;
  return {!a.empty() && a == b && s1 == 0 && s2 == 0, os.str()};
}

}  // namespace

int main() {
  vnlab::AcceptanceSuite suite(vnlab::SuiteOptions{});
  using Battery = std::function<Outcome()>;
  auto checks = [&](std::vector<vnlab::Check> (vnlab::AcceptanceSuite::*fn)()) -> Battery {
    return [&suite, fn] { return from_checks((suite.*fn)()); };
  };
  const std::vector<std::pair<std::string, Battery>> criteria = {
      {"A1 Bessel duality, B over adjoint = covol * B", checks(&vnlab::AcceptanceSuite::bessel_duality)},
      {"A2 commutant of the lattice action", checks(&vnlab::AcceptanceSuite::commutant)},
      {"A3 cdim = covolume and cdim product = 1", checks(&vnlab::AcceptanceSuite::cdim_covolume)},
      {"A4 bounded-vector norms = Bessel bounds", checks(&vnlab::AcceptanceSuite::bounded_vectors)},
      {"A5 left/right bounded vectors", checks(&vnlab::AcceptanceSuite::left_right_bounded)},
      {"A6 basic construction", checks(&vnlab::AcceptanceSuite::basic_construction)},
      {"A7 coefficient change and subalgebra bound", checks(&vnlab::AcceptanceSuite::coefficient_change)},
      {"A8 projection vs block-formula cdim", checks(&vnlab::AcceptanceSuite::cross_oracle)},
      {"A9 selftest determinism", determinism},
  };
  bool all = true;
  for (const auto& [label, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.passed;
    std::cout << (o.passed ? "PASS " : "FAIL ") << label << " — " << o.detail << " [" << std::fixed << std::setprecision(1)
              << secs << " s]" << std::defaultfloat << std::endl;
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << std::endl;
  return all ? 0 : 1;
}
