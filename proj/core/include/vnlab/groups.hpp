#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "vnlab/linalg.hpp"
#include "vnlab/rational.hpp"

namespace vnlab {

/// A group element as a tuple of residues, one per cyclic factor.
using Element = std::vector<int>;

/// G = Z_{N1} x ... x Z_{Nk}, written additively. The dual group is identified
/// with G through the characters t -> exp(2 pi i sum_j w_j t_j / N_j).
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<int> orders);

  const std::vector<int>& orders() const { return orders_; }
  std::size_t factors() const { return orders_.size(); }
  std::int64_t size() const { return size_; }
  /// Least common multiple of the factor orders; character phases are
  /// integers modulo this value.
  std::int64_t exponent() const { return exponent_; }

  /// Throws InvalidElement on a wrong tuple length or a residue out of range.
  void validate(const Element& a) const;
  Element zero() const { return Element(orders_.size(), 0); }
  Element add(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;

  /// Position of `a` in the lexicographic order of tuples.
  std::int64_t index(const Element& a) const;
  Element element(std::int64_t index) const;
  std::vector<Element> elements() const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) { return a.orders_ == b.orders_; }

 private:
  std::vector<int> orders_;
  std::int64_t size_ = 1;
  std::int64_t exponent_ = 1;
};

/// Exact phase of w(x): the integer k in [0, exponent) with w(x) = exp(2 pi i k / exponent).
std::int64_t character_phase(const FiniteAbelianGroup& g, const Element& omega, const Element& x);

/// w(x) as a unit complex number.
cplx character_value(const FiniteAbelianGroup& g, const Element& omega, const Element& x);

/// A point (x, w) of the time-frequency plane G x G^.
struct PhasePoint {
  Element x;
  Element omega;

  friend auto operator<=>(const PhasePoint&, const PhasePoint&) = default;
  friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
};

/// G x G^ with a flat lexicographic indexing of its points.
class PhaseSpace {
 public:
  explicit PhaseSpace(FiniteAbelianGroup group) : group_(std::move(group)) {}

  const FiniteAbelianGroup& group() const { return group_; }
  std::int64_t size() const { return group_.size() * group_.size(); }

  void validate(const PhasePoint& z) const;
  PhasePoint zero() const { return {group_.zero(), group_.zero()}; }
  PhasePoint add(const PhasePoint& a, const PhasePoint& b) const;
  PhasePoint negate(const PhasePoint& a) const;

  std::int64_t index(const PhasePoint& z) const { return group_.index(z.x) * group_.size() + group_.index(z.omega); }
  PhasePoint point(std::int64_t index) const;
  std::int64_t add_index(std::int64_t a, std::int64_t b) const { return index(add(point(a), point(b))); }

  /// Phase of w_w(x_z) - w_z(x_w) modulo the exponent. The shifts of z and w
  /// commute exactly when this is zero.
  std::int64_t commutation_phase(const PhasePoint& z, const PhasePoint& w) const;

 private:
  FiniteAbelianGroup group_;
};

/// A subgroup of G x G^. In a finite group every subgroup is discrete and
/// cocompact, so every subgroup is a lattice.
class Lattice {
 public:
  /// The subgroup generated by `generators`; the zero point alone when empty.
  static Lattice from_generators(const FiniteAbelianGroup& group, std::vector<PhasePoint> generators);
  /// Wraps an index set already known to be a subgroup. Generators are
  /// chosen greedily in canonical order.
  static Lattice from_closed_indices(const FiniteAbelianGroup& group, std::vector<std::int64_t> indices);

  const FiniteAbelianGroup& group() const { return space_.group(); }
  const PhaseSpace& space() const { return space_; }
  const std::vector<PhasePoint>& elements() const { return elements_; }
  const std::vector<PhasePoint>& generators() const { return generators_; }
  /// Sorted phase-space indices of the elements.
  const std::vector<std::int64_t>& indices() const { return indices_; }
  std::size_t size() const { return elements_.size(); }

  bool contains(const PhasePoint& z) const;
  bool contains_index(std::int64_t i) const { return member_[static_cast<std::size_t>(i)]; }
  /// Position of z within elements(); z must be a member.
  std::size_t position(const PhasePoint& z) const;

  /// Exhaustive scan: zero present, closed under addition and negation.
  bool is_closed() const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.group() == b.group() && a.indices_ == b.indices_;
  }

 private:
  Lattice(PhaseSpace space, std::vector<std::int64_t> indices, std::vector<PhasePoint> generators);

  PhaseSpace space_;
  std::vector<std::int64_t> indices_;
  std::vector<PhasePoint> elements_;
  std::vector<PhasePoint> generators_;
  std::vector<bool> member_;
  std::vector<std::int64_t> position_;
};

/// All z in G x G^ whose time-frequency shift commutes with every shift in the lattice.
Lattice adjoint_lattice(const Lattice& lattice);

/// |G| / |lattice|, the covolume under counting measure on G.
Rational covolume(const Lattice& lattice);

/// Every subgroup of G x G^, without duplicates, ordered by size and then by
/// the lexicographic order of their sorted index sets. Throws ResourceLimit
/// when |G|^2 exceeds `cap`.
std::vector<Lattice> enumerate_subgroups(const FiniteAbelianGroup& group, std::int64_t cap = 256);

}  // namespace vnlab
