#pragma once

// Finite partial magmas: carriers 0..n-1 with a partially defined product.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace difflab {

using Element = std::uint32_t;

class PartialMagma {
 public:
  static constexpr std::int32_t kUndefined = -1;

  /// Row-major n*n table; kUndefined marks a missing product.  Names are
  /// display metadata and take no part in equality.
  PartialMagma(std::size_t n, std::vector<std::int32_t> table, std::vector<std::string> names = {});

  /// Nothing defined.
  static PartialMagma empty_op(std::size_t n);

  std::size_t size() const { return n_; }
  bool defined(Element x, Element y) const { return table_[x * n_ + y] >= 0; }
  std::optional<Element> mul(Element x, Element y) const {
    const auto v = table_[x * n_ + y];
    if (v < 0) return std::nullopt;
    return static_cast<Element>(v);
  }
  std::int32_t raw(Element x, Element y) const { return table_[x * n_ + y]; }
  const std::vector<std::int32_t>& table() const { return table_; }

  std::string name(Element x) const;
  const std::vector<std::string>& names() const { return names_; }
  /// Element carrying the given name.
  std::optional<Element> find(const std::string& name) const;

  bool operator==(const PartialMagma& other) const { return n_ == other.n_ && table_ == other.table_; }

 private:
  std::size_t n_;
  std::vector<std::int32_t> table_;
  std::vector<std::string> names_;
};

/// Rows of optional products.  Throws std::invalid_argument on a ragged
/// table, an empty carrier or an out-of-range entry.
PartialMagma build_pm(std::size_t n, const std::vector<std::vector<std::optional<Element>>>& rows,
                      std::vector<std::string> names = {});

/// Failure evidence: the condition that fails and the elements involved.
struct PMWitness {
  std::string condition;
  std::vector<Element> elements;
};

struct PMClassification {
  std::vector<Element> units;
  bool unital = false;
  bool associative = false;
  std::optional<PMWitness> associativity_failure;
  bool fastened = false;
  std::optional<PMWitness> fastening_failure;
  std::vector<Element> left_fastened;
  std::vector<Element> right_fastened;
  bool regular = false;
  bool monoid = false;
  bool total = false;
};

bool is_unit(const PartialMagma& pm, Element x);
/// The lexicographically first (x, y, z) breaking A.1 or A.2.
std::optional<PMWitness> associativity_failure(const PartialMagma& pm);
PMClassification classify(const PartialMagma& pm);
bool is_regular(const PartialMagma& pm);

/// Elements permuted: x becomes perm[x].
PartialMagma relabel(const PartialMagma& pm, const std::vector<Element>& perm);

struct Twin {
  Element first;
  Element second;
  friend constexpr bool operator==(Twin, Twin) = default;
  friend constexpr auto operator<=>(Twin, Twin) = default;
};

/// Horizontal product: defined iff y.second == x.first, giving (y.first, x.second).
std::optional<Twin> hmul(Twin x, Twin y);
/// Componentwise product in pm.
std::optional<Twin> vmul(const PartialMagma& pm, Twin x, Twin y);

/// Pairs over an n-element carrier are encoded as first * n + second.
inline Element pair_index(std::size_t n, Twin t) { return static_cast<Element>(t.first * n + t.second); }
inline Twin pair_at(std::size_t n, Element i) {
  return Twin{static_cast<Element>(i / n), static_cast<Element>(i % n)};
}

/// Pairs of an n-element set under horizontal multiplication.
PartialMagma twin_pm(std::size_t n);
/// Pairs of pm under vertical multiplication.
PartialMagma square_pm(const PartialMagma& pm);

struct InterchangeVerdict {
  bool holds = true;
  std::uint64_t both_defined = 0;
  /// x', z', x, z with both sides defined and different.
  std::optional<std::array<Element, 4>> witness;
};

/// (x' v z') h (x v z) == (x' h x) v (z' h z) whenever both sides are defined,
/// for two products on the same carrier.
InterchangeVerdict interchange_check(const PartialMagma& horizontal, const PartialMagma& vertical);
/// Same with horizontal = twin_pm(n), vertical = square_pm(pm).
InterchangeVerdict interchange_check(const PartialMagma& pm);

/// Right and left pins of every element of a regular partial magma.
struct Pins {
  std::vector<Element> dom;
  std::vector<Element> cod;
};

/// Throws std::invalid_argument when pm is not regular.
Pins pins(const PartialMagma& pm);
std::pair<Element, Element> dom_cod(const PartialMagma& pm, Element x);

/// Predicted composability s(x) == t(z); throws for non-regular pm.
bool chain_rule(const PartialMagma& pm, Element x, Element z);
/// Predicted composability agrees with the table for every pair.
bool verify_chain_rule(const PartialMagma& pm);

struct HomVerdict {
  bool holds = true;
  std::optional<PMWitness> failure;
  explicit operator bool() const { return holds; }
};

/// Condition (H) for every defined product; with `unital`, also (U).
HomVerdict is_pm_hom(const std::vector<Element>& f, const PartialMagma& a, const PartialMagma& b, bool unital);

/// The map (p, q) -> (f p, f q) between pair carriers of sizes |dom f| and target_size.
std::vector<Element> square_of_function(const std::vector<Element>& f, std::size_t target_size);

/// (|units| == 1) agrees with totality; throws for non-regular pm.
bool single_unit_totality(const PartialMagma& pm);

/// Visits every partial operation table on n elements (including the
/// empty one), in increasing base-(n+1) order of the row-major table.
void for_each_pm(std::size_t n, const std::function<void(const PartialMagma&)>& visit);

}  // namespace difflab
