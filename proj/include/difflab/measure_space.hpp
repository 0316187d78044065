#pragma once

// Finite atomic complete measure spaces.
//
// The sigma-algebra is the full powerset of the atom list, so every subset
// is measurable and completeness is automatic.  Atoms of weight zero make up
// the null ideal.  Sets are bitmasks over the atom list; canonical order of
// any enumeration is ascending bitmask.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "difflab/rational.hpp"

namespace difflab {

/// Hard ceiling on the atom count; transforms are stored as 2^n tables.
inline constexpr std::size_t kMaxAtoms = 20;

/// A measurable set, i.e. a subset of the atoms of one space.
struct MSet {
  std::uint32_t bits = 0;

  constexpr MSet() = default;
  constexpr explicit MSet(std::uint32_t b) : bits(b) {}

  constexpr bool contains(std::size_t atom) const { return (bits >> atom) & 1u; }
  constexpr bool empty() const { return bits == 0; }
  constexpr bool subset_of(MSet other) const { return (bits & ~other.bits) == 0; }
  int size() const { return std::popcount(bits); }

  friend constexpr MSet operator|(MSet a, MSet b) { return MSet(a.bits | b.bits); }
  friend constexpr MSet operator&(MSet a, MSet b) { return MSet(a.bits & b.bits); }
  friend constexpr MSet operator^(MSet a, MSet b) { return MSet(a.bits ^ b.bits); }
  friend constexpr MSet operator-(MSet a, MSet b) { return MSet(a.bits & ~b.bits); }
  friend constexpr bool operator==(MSet a, MSet b) = default;
  friend constexpr auto operator<=>(MSet a, MSet b) = default;
};

/// Function defined on a (possibly empty) subset of the atoms.
struct PartialFunction {
  std::vector<std::optional<Rational>> values;

  std::size_t atom_count() const { return values.size(); }
  MSet domain() const;
  bool defined_at(std::size_t atom) const { return values.at(atom).has_value(); }
  const Rational& at(std::size_t atom) const;

  static PartialFunction total(std::span<const Rational> values);
  static PartialFunction nowhere(std::size_t atoms);

  friend bool operator==(const PartialFunction&, const PartialFunction&) = default;
};

class MeasureSpace {
 public:
  /// Rejects negative weights, an all-zero weight vector, an empty list and
  /// more than kMaxAtoms atoms (std::invalid_argument).
  explicit MeasureSpace(std::vector<Rational> weights);

  std::size_t atom_count() const { return weights_.size(); }
  const Rational& weight(std::size_t atom) const { return weights_.at(atom); }
  std::span<const Rational> weights() const { return weights_; }

  MSet ambient() const { return MSet(static_cast<std::uint32_t>((std::uint64_t{1} << atom_count()) - 1)); }
  MSet positive_atoms() const { return positive_; }
  MSet null_atoms() const { return ambient() - positive_; }
  std::size_t subset_count() const { return std::size_t{1} << atom_count(); }

  MSet complement(MSet q) const { return ambient() - q; }

  Rational measure(MSet q) const;
  bool is_null(MSet q) const { return (q & positive_).empty(); }
  bool ae_equal(MSet q, MSet r) const { return is_null(q ^ r); }

  /// The averageable sets Z = {Q : mu(Q) > 0} in ascending bitmask order.
  std::span<const MSet> averageable_sets() const { return averageable_; }
  /// Position of q inside averageable_sets(), or nullopt when q is null.
  std::optional<std::size_t> averageable_index(MSet q) const;

  PartialFunction indicator(MSet q) const;

  /// mu(Q cap Qp) / mu(Qp); throws std::domain_error when Qp is null.
  Rational conditional_prob(MSet q, MSet qp) const;

  bool operator==(const MeasureSpace& other) const { return weights_ == other.weights_; }

 private:
  std::vector<Rational> weights_;
  MSet positive_;
  std::vector<MSet> averageable_;
  std::vector<std::int32_t> averageable_index_;
};

/// Builds the space with atoms 0..n-1 carrying the given weights.
MeasureSpace build_space(std::vector<Rational> weights);

/// Convenience for integer fixtures, e.g. build_space({1, 1, 0}).
MeasureSpace build_space(std::initializer_list<long> weights);

std::string format_set(MSet q, std::size_t atoms);

}  // namespace difflab
