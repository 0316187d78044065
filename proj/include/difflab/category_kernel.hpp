#pragma once

// Small finite categories, their arrows-only form as regular partial magmas,
// twin categories, functors, and natural transformations in two encodings:
// object-indexed components (NatTrans) and arrow-indexed twin arrows (NatHom).

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "difflab/partial_magma.hpp"

namespace difflab {

using Arrow = std::uint32_t;
using Object = std::uint32_t;

/// Classical two-sorted presentation: objects, arrows with domain and
/// codomain, identities and a composition table.  compose(g, f) is g after f
/// and is defined exactly when dom(g) == cod(f).
class FiniteCategory {
 public:
  /// Throws std::invalid_argument unless the data satisfy the category axioms.
  FiniteCategory(std::size_t objects, std::vector<Object> dom, std::vector<Object> cod, std::vector<Arrow> identity,
                 std::vector<std::int32_t> compose, std::vector<std::string> arrow_names = {});

  std::size_t object_count() const { return identity_.size(); }
  std::size_t arrow_count() const { return dom_.size(); }
  Object dom(Arrow a) const { return dom_.at(a); }
  Object cod(Arrow a) const { return cod_.at(a); }
  Arrow identity(Object o) const { return identity_.at(o); }
  bool is_identity(Arrow a) const { return identity_[dom_[a]] == a; }
  std::optional<Arrow> compose(Arrow g, Arrow f) const;

  const std::vector<std::int32_t>& composition_table() const { return compose_; }
  std::string arrow_name(Arrow a) const;
  std::string object_name(Object o) const { return arrow_name(identity(o)); }
  const std::vector<std::string>& arrow_names() const { return names_; }
  std::optional<Arrow> find_arrow(const std::string& name) const;

  /// Structural identity of all data; names are ignored.
  bool operator==(const FiniteCategory& other) const;

 private:
  std::vector<Object> dom_, cod_;
  std::vector<Arrow> identity_;
  std::vector<std::int32_t> compose_;
  std::vector<std::string> names_;
};

/// Objects are the units in ascending order.  Throws std::invalid_argument
/// for a non-regular partial magma.
FiniteCategory cat_from_rpm(const PartialMagma& pm);
PartialMagma rpm_from_cat(const FiniteCategory& cat);

/// Arrows u -> v, ascending.
std::vector<Arrow> hom_set(const FiniteCategory& cat, Object u, Object v);

/// A commuting square: second . source == target . first.
struct TwinArrow {
  Arrow source;
  Arrow target;
  Arrow first;
  Arrow second;
  friend constexpr bool operator==(const TwinArrow&, const TwinArrow&) = default;
  friend constexpr auto operator<=>(const TwinArrow&, const TwinArrow&) = default;
};

bool is_twin_arrow(const FiniteCategory& cat, const TwinArrow& z);

/// All twin arrows from x to y, ordered by (first, second).
std::vector<TwinArrow> twin_hom_cases(const FiniteCategory& cat, Arrow x, Arrow y);
/// Same set via the factorization through an object source u.
std::vector<TwinArrow> twin_homs_from_object(const FiniteCategory& cat, Object u, Arrow y);
/// Same set via the factorization through an object target v.
std::vector<TwinArrow> twin_homs_to_object(const FiniteCategory& cat, Arrow x, Object v);

struct TwinCategory {
  FiniteCategory cat;
  std::vector<TwinArrow> arrows;  // index = arrow of cat; objects of cat = arrows of the base
};

/// Objects are the base arrows, composition is vertical multiplication and the
/// identity at x is (id dom x, id cod x).
TwinCategory twin_category(const FiniteCategory& base);

/// Arrows-only functor: map[a] is the image of arrow a.
struct Functor {
  std::vector<Arrow> map;
  friend bool operator==(const Functor&, const Functor&) = default;
};

/// Unital partial magma homomorphism between the arrows-only forms.
HomVerdict is_functor(const FiniteCategory& c, const FiniteCategory& d, const Functor& f);
/// Object action read off the identities; requires a valid functor.
std::vector<Object> object_map(const FiniteCategory& c, const FiniteCategory& d, const Functor& f);
bool preserves_dom_cod(const FiniteCategory& c, const FiniteCategory& d, const Functor& f);
std::vector<Functor> enumerate_functors(const FiniteCategory& c, const FiniteCategory& d);
Functor identity_functor(const FiniteCategory& c);

/// Arrow-indexed: components[x] = (first, second) arrows of the target category.
struct NatHom {
  std::vector<Twin> components;
  friend bool operator==(const NatHom&, const NatHom&) = default;
};

/// Object-indexed: components[u] is an arrow T u -> S u.
struct NatTrans {
  std::vector<Arrow> components;
  friend bool operator==(const NatTrans&, const NatTrans&) = default;
};

/// Horizontal-product homomorphism into the pairs of target arrows, with
/// every value a twin arrow from T x to S x.
HomVerdict is_nat_hom(const FiniteCategory& c, const FiniteCategory& d, const Functor& t, const Functor& s,
                      const NatHom& alpha);
/// Components in the right hom-sets and every naturality square commuting.
HomVerdict is_natural(const FiniteCategory& c, const FiniteCategory& d, const Functor& t, const Functor& s,
                      const NatTrans& tau);

/// Throws std::invalid_argument, naming the witness, on invalid input.
NatTrans nat_from_hom(const FiniteCategory& c, const FiniteCategory& d, const Functor& t, const Functor& s,
                      const NatHom& alpha);
NatHom hom_from_nat(const FiniteCategory& c, const FiniteCategory& d, const Functor& t, const Functor& s,
                    const NatTrans& tau);

/// x -> (T id dom x, T id cod x).
NatHom identity_nat(const FiniteCategory& c, const FiniteCategory& d, const Functor& t);
/// Componentwise vertical product; throws when some component is undefined.
NatHom compose_nat(const FiniteCategory& d, const NatHom& beta, const NatHom& alpha);

std::vector<NatHom> enumerate_nat_homs(const FiniteCategory& c, const FiniteCategory& d, const Functor& t,
                                       const Functor& s);
std::vector<NatTrans> enumerate_nat_trans(const FiniteCategory& c, const FiniteCategory& d, const Functor& t,
                                          const Functor& s);

struct FunctorCategory {
  FiniteCategory cat;
  std::vector<Functor> functors;  // objects
  struct Entry {
    std::size_t source;
    std::size_t target;
    NatHom alpha;
  };
  std::vector<Entry> arrows;
};

FunctorCategory functor_category(const FiniteCategory& c, const FiniteCategory& d);

/// Checks that the maps are bijections compatible with dom, cod, identities
/// and composition.
bool is_isomorphism(const FiniteCategory& a, const FiniteCategory& b, const std::vector<Object>& objects,
                    const std::vector<Arrow>& arrows);

/// Explicit isomorphism Fun(1, C) -> C.
bool functors_from_one_iso(const FiniteCategory& one, const FiniteCategory& c);
/// Explicit isomorphism Fun(2, C) -> Twn(C); `two` must have a single
/// non-identity arrow.
bool functors_from_two_iso(const FiniteCategory& two, const FiniteCategory& c);

/// Integer matrix with 1 on the diagonal and 0 elsewhere.
struct DiagonalSpec {
  std::string name;
  int rows;
  int cols;
};

/// Partial magma of the given matrices under matrix multiplication.  Throws
/// std::invalid_argument if a defined product leaves the set.
PartialMagma matrix_magma(const std::vector<DiagonalSpec>& elements);

/// {0..max} with i.j = i - j, defined when i >= j.
PartialMagma truncated_subtraction(std::size_t max);

/// Named regular partial magmas "1", "2", "II", "3", "SQ", plus the
/// non-associative "N3-sub".
std::map<std::string, PartialMagma> example_library();
FiniteCategory library_category(const std::string& name);

}  // namespace difflab
