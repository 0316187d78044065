#pragma once

// Mean values over averageable sets, filter-kernels and their limiting
// operators, and the two directions between liftings and kernels that
// differentiate.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "difflab/filter_calculus.hpp"
#include "difflab/measure_algebra.hpp"
#include "difflab/measure_space.hpp"

namespace difflab {

/// Domain complement is null.
bool is_integrable(const MeasureSpace& space, const PartialFunction& f);

/// Mean of f over each averageable set, indexed like averageable_sets().
struct LebesgueTransform {
  std::vector<Rational> values;
  friend bool operator==(const LebesgueTransform&, const LebesgueTransform&) = default;
};

/// Throws std::invalid_argument unless f is integrable on the space.
LebesgueTransform lebesgue_transform(const MeasureSpace& space, const PartialFunction& f);

/// One filter on the averageable sets per atom.
struct FilterKernel {
  std::vector<Filter> at;
};

FilterKernel trivial_kernel(const MeasureSpace& space);

/// Defined at x iff lam has a limit along the filter at x.
PartialFunction limiting_operator(const MeasureSpace& space, const FilterKernel& kernel, std::span<const Rational> lam);

/// Recovery of f: the limiting operator of its transform is defined a.e.
/// and agrees with f a.e.
bool recovers(const MeasureSpace& space, const FilterKernel& kernel, const PartialFunction& f);

/// Function taking value i+1 on positive atom i and 0 on null atoms.
PartialFunction separating_function(const MeasureSpace& space);

struct DifferentiationVerdict {
  bool holds = true;
  std::string witness_name;  // "indicator {..}" or "separating"
  std::optional<PartialFunction> witness;
  explicit operator bool() const { return holds; }
};

/// Checks recovery on every indicator and on the separating function.
DifferentiationVerdict differentiates(const MeasureSpace& space, const FilterKernel& kernel);

/// lambda(Q) = points where the transform of 1_Q tends to 1.  Throws
/// std::invalid_argument when the kernel does not differentiate.
SetTransform lower_density_from_kernel(const MeasureSpace& space, const FilterKernel& kernel);

struct DifferentiationBasis {
  std::vector<MSet> members;                 // ascending
  std::vector<std::vector<MSet>> per_point;  // members containing each atom
  MSet support;                              // atoms with a nonempty family
};

DifferentiationBasis make_basis(const MeasureSpace& space, std::vector<MSet> members);

/// Directedness of every nonempty per-point family and full-measure
/// support; on failure names the axiom and gives the offending sets.
TransformVerdict basis_axioms(const MeasureSpace& space, const DifferentiationBasis& basis);

/// Averageable fixed points of the lifting.  Throws std::invalid_argument if
/// the input is not a lifting, std::logic_error if the axioms fail.
DifferentiationBasis basis_from_lifting(const MeasureSpace& space, const SetTransform& lifting);

/// Tail filter of the per-point family pushed into the averageable sets;
/// trivial filter off the support.
FilterKernel kernel_from_basis(const MeasureSpace& space, const DifferentiationBasis& basis);
FilterKernel kernel_from_lifting(const MeasureSpace& space, const SetTransform& lifting);

struct Theorem1Entry {
  SetTransform lifting;
  bool kernel_differentiates = false;
  bool lower_density_ok = false;
  bool lifting_ok = false;
  bool subordinate = false;
  bool boolean_hom_ok = false;
  bool right_inverse_ok = false;
  bool round_trip = false;
  std::string failure;  // first failing stage, empty when everything passed

  bool passed() const { return failure.empty(); }
};

struct Theorem1Report {
  std::vector<Theorem1Entry> entries;
  bool all_passed() const;
  bool all_round_trips() const;
};

/// Runs both directions for every lifting of the space.
Theorem1Report verify_theorem1(const MeasureSpace& space);
Theorem1Entry verify_theorem1_for(const MeasureSpace& space, const SetTransform& lifting);

}  // namespace difflab
