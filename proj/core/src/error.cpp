#include "vnlab/error.hpp"

#include <sstream>

namespace vnlab {

namespace {
std::string describe(const std::string& hypothesis, double deviation) {
  std::ostringstream out;
  out << "hypothesis '" << hypothesis << "' fails (measured deviation " << deviation << ")";
  return out.str();
}
}  // namespace

HypothesisError::HypothesisError(std::string hypothesis, double deviation)
    : Error(describe(hypothesis, deviation)), hypothesis_(std::move(hypothesis)), deviation_(deviation) {}

}  // namespace vnlab
