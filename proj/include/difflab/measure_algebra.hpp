#pragma once

// The measure algebra (measurable sets modulo null sets), set transforms and
// their properties, lower densities and liftings.
//
// A SetTransform is a total table MSet -> MSet over one space (2^n entries).
// All property checks are exhaustive over the table.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "difflab/measure_space.hpp"

namespace difflab {

/// A class of the quotient, represented by its trace on the positive atoms.
struct AlgebraClass {
  MSet representative;
  friend constexpr bool operator==(AlgebraClass, AlgebraClass) = default;
  friend constexpr auto operator<=>(AlgebraClass, AlgebraClass) = default;
};

class SetTransform {
 public:
  SetTransform() = default;
  /// Table indexed by bitmask; size must be 2^atoms and entries in range.
  SetTransform(std::size_t atoms, std::vector<MSet> table);

  static SetTransform identity(std::size_t atoms);
  static SetTransform constant(std::size_t atoms, MSet value);

  std::size_t atom_count() const { return atoms_; }
  std::size_t size() const { return table_.size(); }
  MSet operator()(MSet q) const { return table_[q.bits]; }
  MSet& operator[](MSet q) { return table_[q.bits]; }
  const std::vector<MSet>& table() const { return table_; }

  friend bool operator==(const SetTransform&, const SetTransform&) = default;

 private:
  std::size_t atoms_ = 0;
  std::vector<MSet> table_;
};

enum class TransformProperty { PMS, PAS, PFI, AEI, PES, SPMC, CWTC, PFU, SPMCNS };

inline constexpr std::array<TransformProperty, 9> kAllProperties = {
    TransformProperty::PMS,  TransformProperty::PAS, TransformProperty::PFI,
    TransformProperty::AEI,  TransformProperty::PES, TransformProperty::SPMC,
    TransformProperty::CWTC, TransformProperty::PFU, TransformProperty::SPMCNS};

std::string_view to_string(TransformProperty p);
std::optional<TransformProperty> property_from_string(std::string_view name);

/// Outcome of an exhaustive check.  On failure `failed` names the check
/// (a property mnemonic, "idempotence", ...) and `witness` holds the sets
/// exhibiting it: one set Q, or a pair Q, R.
struct TransformVerdict {
  bool holds = true;
  std::string failed;
  std::vector<MSet> witness;

  explicit operator bool() const { return holds; }
  static TransformVerdict pass() { return {}; }
  static TransformVerdict fail(std::string what, std::vector<MSet> sets) { return {false, std::move(what), std::move(sets)}; }
};

AlgebraClass project(const MeasureSpace& space, MSet q);
/// All classes of the quotient, ascending.
std::vector<AlgebraClass> quotient_classes(const MeasureSpace& space);

TransformVerdict check_property(const MeasureSpace& space, const SetTransform& t, TransformProperty p);

/// PAS, PES, PFI, AEI, SPMC, checked in that order; first failure wins.
TransformVerdict is_lower_density(const MeasureSpace& space, const SetTransform& t);
/// Lower density plus PFU; then CWTC and idempotence, which must follow.
TransformVerdict is_lifting(const MeasureSpace& space, const SetTransform& t);

/// lambda(Q) subset Lambda(Q) subset complement(lambda(complement Q)) for all Q.
TransformVerdict is_subordinate(const MeasureSpace& space, const SetTransform& lifted, const SetTransform& lambda);

enum class ImplicationStatus { Vacuous, Satisfied, Violated };
std::string_view to_string(ImplicationStatus s);

struct ImplicationReport {
  /// SPMCNS & CWTC & PFI & PES & PFU => SPMC
  ImplicationStatus measure_class = ImplicationStatus::Vacuous;
  /// CWTC & PFI => PFU
  ImplicationStatus unions = ImplicationStatus::Vacuous;
  bool consistent() const {
    return measure_class != ImplicationStatus::Violated && unions != ImplicationStatus::Violated;
  }
};

ImplicationReport implication_suite(const MeasureSpace& space, const SetTransform& t);

/// The pointwise exchange x -> {Q : x in lambda(Q)} as one family per atom.
std::vector<std::vector<MSet>> exchange_to_points(const SetTransform& t);
/// Nonempty and closed under intersection.
bool is_intersection_family(std::span<const MSet> family);

/// Lower density to lifting: refine each pointwise family to an ultrafilter
/// on the atoms (lowest-index kernel atom) and exchange back.  Throws
/// std::invalid_argument naming the failing property when the input is not
/// a lower density.
SetTransform lower_density_to_lifting(const MeasureSpace& space, const SetTransform& lambda);

/// Boolean map from the quotient back to measurable sets.
struct BooleanHom {
  std::vector<AlgebraClass> classes;
  std::vector<MSet> images;

  std::optional<MSet> operator()(AlgebraClass c) const;
};

BooleanHom lifting_to_right_inverse(const MeasureSpace& space, const SetTransform& lifting);

/// Preservation of bottom, top, join, meet and complement over the quotient.
TransformVerdict is_boolean_homomorphism(const MeasureSpace& space, const BooleanHom& rho);
/// pi(rho(c)) = c for every class c.
TransformVerdict is_right_inverse(const MeasureSpace& space, const BooleanHom& rho);

/// Every lifting of the space, one per retraction of the atoms onto the
/// positive atoms: Lambda(Q) = {x : g(x) in Q}.  Ordered by the retraction
/// values on null atoms, lexicographically from the lowest null atom.
std::vector<SetTransform> enumerate_liftings(const MeasureSpace& space);

/// The lifting Lambda(Q) = {x : g(x) in Q} of a retraction g.
SetTransform lifting_from_retraction(const MeasureSpace& space, std::span<const std::size_t> retraction);

/// g(x) = the positive atom p with x in Lambda({p}); nullopt when the
/// transform is not of that form.
std::optional<std::vector<std::size_t>> retraction_of(const MeasureSpace& space, const SetTransform& lifting);

}  // namespace difflab
