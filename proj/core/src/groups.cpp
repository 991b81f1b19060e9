#include "vnlab/groups.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

#include "vnlab/error.hpp"

namespace vnlab {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw InvalidElement("group needs at least one cyclic factor");
  for (int n : orders_) {
    if (n < 1) throw InvalidElement("cyclic factor orders must be >= 1");
    size_ *= n;
    exponent_ = std::lcm(exponent_, static_cast<std::int64_t>(n));
  }
}

void FiniteAbelianGroup::validate(const Element& a) const {
  if (a.size() != orders_.size()) {
    std::ostringstream msg;
    msg << "element has " << a.size() << " components, group has " << orders_.size();
    throw InvalidElement(msg.str());
  }
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] < 0 || a[j] >= orders_[j]) {
      std::ostringstream msg;
      msg << "component " << j << " = " << a[j] << " not in [0, " << orders_[j] << ")";
      throw InvalidElement(msg.str());
    }
  }
}

Element FiniteAbelianGroup::add(const Element& a, const Element& b) const {
  Element c(orders_.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = (a[j] + b[j]) % orders_[j];
  return c;
}

Element FiniteAbelianGroup::negate(const Element& a) const {
  Element c(orders_.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = (orders_[j] - a[j]) % orders_[j];
  return c;
}

std::int64_t FiniteAbelianGroup::index(const Element& a) const {
  std::int64_t idx = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) idx = idx * orders_[j] + a[j];
  return idx;
}

Element FiniteAbelianGroup::element(std::int64_t index) const {
  Element a(orders_.size());
  for (std::size_t j = orders_.size(); j-- > 0;) {
    a[j] = static_cast<int>(index % orders_[j]);
    index /= orders_[j];
  }
  return a;
}

std::vector<Element> FiniteAbelianGroup::elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (std::int64_t i = 0; i < size_; ++i) out.push_back(element(i));
  return out;
}

std::int64_t character_phase(const FiniteAbelianGroup& g, const Element& omega, const Element& x) {
  g.validate(omega);
  g.validate(x);
  const std::int64_t e = g.exponent();
  std::int64_t k = 0;
  for (std::size_t j = 0; j < g.factors(); ++j) {
    const std::int64_t n = g.orders()[j];
    k = (k + (static_cast<std::int64_t>(omega[j]) * x[j] % n) * (e / n)) % e;
  }
  return k;
}

cplx character_value(const FiniteAbelianGroup& g, const Element& omega, const Element& x) {
  const std::int64_t k = character_phase(g, omega, x);
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(g.exponent());
  return std::polar(1.0, angle);
}

void PhaseSpace::validate(const PhasePoint& z) const {
  group_.validate(z.x);
  group_.validate(z.omega);
}

PhasePoint PhaseSpace::add(const PhasePoint& a, const PhasePoint& b) const {
  return {group_.add(a.x, b.x), group_.add(a.omega, b.omega)};
}

PhasePoint PhaseSpace::negate(const PhasePoint& a) const { return {group_.negate(a.x), group_.negate(a.omega)}; }

PhasePoint PhaseSpace::point(std::int64_t index) const {
  return {group_.element(index / group_.size()), group_.element(index % group_.size())};
}

std::int64_t PhaseSpace::commutation_phase(const PhasePoint& z, const PhasePoint& w) const {
  const std::int64_t e = group_.exponent();
  const std::int64_t d = character_phase(group_, w.omega, z.x) - character_phase(group_, z.omega, w.x);
  return ((d % e) + e) % e;
}

namespace {

// Closure of `seed` (an index set containing 0 that is already a subgroup)
// with one more point: the union of the cosets seed + k p.
std::vector<std::int64_t> extend_subgroup(const PhaseSpace& space, const std::vector<std::int64_t>& seed,
                                          std::int64_t p) {
  std::vector<bool> in(static_cast<std::size_t>(space.size()), false);
  for (std::int64_t s : seed) in[static_cast<std::size_t>(s)] = true;
  std::vector<std::int64_t> out = seed;
  std::int64_t multiple = p;
  while (!in[static_cast<std::size_t>(multiple)]) {
    for (std::int64_t s : seed) {
      const std::int64_t t = space.add_index(s, multiple);
      if (!in[static_cast<std::size_t>(t)]) {
        in[static_cast<std::size_t>(t)] = true;
        out.push_back(t);
      }
    }
    multiple = space.add_index(multiple, p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PhasePoint> greedy_generators(const PhaseSpace& space, const std::vector<std::int64_t>& indices) {
  std::vector<PhasePoint> gens;
  std::vector<std::int64_t> span{0};
  for (std::int64_t i : indices) {
    if (std::binary_search(span.begin(), span.end(), i)) continue;
    gens.push_back(space.point(i));
    span = extend_subgroup(space, span, i);
  }
  return gens;
}

}  // namespace

Lattice::Lattice(PhaseSpace space, std::vector<std::int64_t> indices, std::vector<PhasePoint> generators)
    : space_(std::move(space)), indices_(std::move(indices)), generators_(std::move(generators)) {
  member_.assign(static_cast<std::size_t>(space_.size()), false);
  position_.assign(static_cast<std::size_t>(space_.size()), -1);
  elements_.reserve(indices_.size());
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    member_[static_cast<std::size_t>(indices_[k])] = true;
    position_[static_cast<std::size_t>(indices_[k])] = static_cast<std::int64_t>(k);
    elements_.push_back(space_.point(indices_[k]));
  }
}

Lattice Lattice::from_generators(const FiniteAbelianGroup& group, std::vector<PhasePoint> generators) {
  PhaseSpace space(group);
  std::vector<std::int64_t> span{0};
  for (const PhasePoint& g : generators) {
    space.validate(g);
    const std::int64_t i = space.index(g);
    if (!std::binary_search(span.begin(), span.end(), i)) span = extend_subgroup(space, span, i);
  }
  return Lattice(std::move(space), std::move(span), std::move(generators));
}

Lattice Lattice::from_closed_indices(const FiniteAbelianGroup& group, std::vector<std::int64_t> indices) {
  PhaseSpace space(group);
  std::sort(indices.begin(), indices.end());
  auto gens = greedy_generators(space, indices);
  return Lattice(std::move(space), std::move(indices), std::move(gens));
}

bool Lattice::contains(const PhasePoint& z) const {
  space_.validate(z);
  return member_[static_cast<std::size_t>(space_.index(z))];
}

std::size_t Lattice::position(const PhasePoint& z) const {
  const std::int64_t p = position_[static_cast<std::size_t>(space_.index(z))];
  if (p < 0) throw InvalidElement("point is not a lattice member");
  return static_cast<std::size_t>(p);
}

bool Lattice::is_closed() const {
  if (indices_.empty() || indices_.front() != 0) return false;
  for (std::int64_t a : indices_) {
    if (!contains_index(space_.index(space_.negate(space_.point(a))))) return false;
    for (std::int64_t b : indices_)
      if (!contains_index(space_.add_index(a, b))) return false;
  }
  return true;
}

Lattice adjoint_lattice(const Lattice& lattice) {
  const PhaseSpace& space = lattice.space();
  // Commutation with the generators suffices: the phase is a bicharacter.
  std::vector<PhasePoint> tests = lattice.generators();
  if (tests.empty()) tests = lattice.elements();
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i < space.size(); ++i) {
    const PhasePoint z = space.point(i);
    bool commutes = true;
    for (const PhasePoint& w : tests) {
      if (space.commutation_phase(z, w) != 0) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.push_back(i);
  }
  return Lattice::from_closed_indices(lattice.group(), std::move(out));
}

Rational covolume(const Lattice& lattice) {
  return Rational(lattice.group().size(), static_cast<std::int64_t>(lattice.size()));
}

std::vector<Lattice> enumerate_subgroups(const FiniteAbelianGroup& group, std::int64_t cap) {
  PhaseSpace space(group);
  if (space.size() > cap) {
    std::ostringstream msg;
    msg << "|G|^2 = " << space.size() << " exceeds the enumeration cap " << cap;
    throw ResourceLimit(msg.str());
  }
  std::set<std::vector<std::int64_t>> seen;
  std::deque<std::vector<std::int64_t>> queue;
  seen.insert({0});
  queue.push_back({0});
  while (!queue.empty()) {
    const std::vector<std::int64_t> current = std::move(queue.front());
    queue.pop_front();
    std::vector<bool> in(static_cast<std::size_t>(space.size()), false);
    for (std::int64_t s : current) in[static_cast<std::size_t>(s)] = true;
    for (std::int64_t p = 0; p < space.size(); ++p) {
      if (in[static_cast<std::size_t>(p)]) continue;
      auto next = extend_subgroup(space, current, p);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<std::vector<std::int64_t>> sets(seen.begin(), seen.end());
  std::stable_sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<Lattice> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.push_back(Lattice::from_closed_indices(group, std::move(s)));
  return out;
}

}  // namespace vnlab
