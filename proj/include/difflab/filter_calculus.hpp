#pragma once

// Filters on finite ground sets, limits along filters, and the ultrafilter
// limit map of finite discrete spaces.
//
// On a finite ground set every proper filter is principal, so a Filter is
// stored by its kernel alone: S belongs to the filter iff S contains the
// kernel.  Ground elements are indices 0..ground_size-1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "difflab/measure_space.hpp"
#include "difflab/rational.hpp"

namespace difflab {

using IndexSet = boost::dynamic_bitset<>;

/// Raised by filter constructions that would produce the improper family.
class ImproperFilter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Filter {
 public:
  /// kernel.size() is the ground size; the kernel must be nonempty.
  explicit Filter(IndexSet kernel);

  std::size_t ground_size() const { return kernel_.size(); }
  const IndexSet& kernel() const { return kernel_; }

  /// Membership: s is in the filter iff s contains the kernel.
  bool contains(const IndexSet& s) const;
  /// Filter inclusion as families: every member of *this is a member of other.
  bool subset_of(const Filter& other) const;

  bool is_ultrafilter() const { return kernel_.count() == 1; }
  bool is_trivial() const { return kernel_.all(); }
  /// Lowest-index kernel element.
  std::size_t first_point() const { return kernel_.find_first(); }

  friend bool operator==(const Filter&, const Filter&) = default;

 private:
  IndexSet kernel_;
};

IndexSet make_index_set(std::size_t ground_size, std::initializer_list<std::size_t> members);

/// Filter generated by a nonempty base; kernel = intersection of the base.
/// Throws ImproperFilter when the intersection is empty.
Filter filter_from_base(std::size_t ground_size, std::span<const IndexSet> base);

Filter principal_ultrafilter(std::size_t ground_size, std::size_t point);
Filter trivial_filter(std::size_t ground_size);

/// Refines F to the ultrafilter at its lowest-index kernel element.
Filter ultrafilter_refine(const Filter& f);

/// Image filter of F under a map ground -> {0..target_size-1}.
Filter direct_image(std::span<const std::size_t> map, std::size_t target_size, const Filter& f);

/// Topology on finitely many points, stored by minimal open neighbourhoods.
class FiniteTopSpace {
 public:
  /// Builds from an explicit family of open sets (bitmasks over <= 64 points).
  /// Throws std::invalid_argument unless the family is a topology.
  static FiniteTopSpace from_opens(std::size_t points, std::span<const std::uint64_t> opens);
  static FiniteTopSpace discrete(std::size_t points);

  std::size_t size() const { return minimal_open_.size(); }
  /// Intersection of all open sets containing y; generates N_D(y).
  std::uint64_t minimal_open(std::size_t y) const { return minimal_open_.at(y); }
  bool is_open(std::uint64_t set) const;

  bool is_hausdorff() const;
  bool is_discrete() const;

 private:
  explicit FiniteTopSpace(std::vector<std::uint64_t> minimal) : minimal_open_(std::move(minimal)) {}
  std::vector<std::uint64_t> minimal_open_;
};

/// Every point y with direct_image(lam, F) containing the neighbourhood
/// filter of y, i.e. lam(kernel) inside the minimal open set of y.
std::vector<std::size_t> limit_points(const Filter& f, std::span<const std::size_t> lam, const FiniteTopSpace& codomain);

/// The limit of lam along F, when it exists and is unique.
std::optional<std::size_t> limit_along(const Filter& f, std::span<const std::size_t> lam, const FiniteTopSpace& codomain);

/// Limit into the (discrete) rationals: defined iff lam is constant on the kernel.
std::optional<Rational> limit_along(const Filter& f, std::span<const Rational> lam);

/// Filter of final segments of a family directed by reverse inclusion.  The
/// ground is the family itself (indices into `directed`).  Throws
/// NotDirected when some pair has no lower bound inside the family.
Filter tail_filter(std::span<const MSet> directed);

class NotDirected : public std::invalid_argument {
 public:
  NotDirected(std::size_t first, std::size_t second);
  std::pair<std::size_t, std::size_t> witness;
};

/// lim over the ultrafilters on the points of a Hausdorff space: the unique
/// y with ultra containing N_D(y).  Throws std::invalid_argument for a
/// non-Hausdorff space or a non-ultrafilter argument.
std::size_t lim_beta(const FiniteTopSpace& space, const Filter& ultra);

}  // namespace difflab
