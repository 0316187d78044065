#include "difflab/measure_algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "difflab/filter_calculus.hpp"

namespace difflab {

SetTransform::SetTransform(std::size_t atoms, std::vector<MSet> table) : atoms_(atoms), table_(std::move(table)) {
  if (atoms == 0 || atoms > kMaxAtoms) throw std::invalid_argument("set transform atom count out of range");
  const std::uint64_t n = std::uint64_t{1} << atoms;
  if (table_.size() != n) throw std::invalid_argument("set transform table must have 2^atoms entries");
  for (auto q : table_) {
    if (q.bits >= n) throw std::invalid_argument("set transform entry mentions a missing atom");
  }
}

SetTransform SetTransform::identity(std::size_t atoms) {
  std::vector<MSet> t(std::size_t{1} << atoms);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = MSet(static_cast<std::uint32_t>(i));
  return SetTransform(atoms, std::move(t));
}

SetTransform SetTransform::constant(std::size_t atoms, MSet value) {
  return SetTransform(atoms, std::vector<MSet>(std::size_t{1} << atoms, value));
}

namespace {

constexpr std::array<std::string_view, 9> kPropertyNames = {"PMS",  "PAS", "PFI", "AEI",   "PES",
                                                            "SPMC", "CWTC", "PFU", "SPMCNS"};

void require_same_space(const MeasureSpace& space, const SetTransform& t) {
  if (t.atom_count() != space.atom_count()) throw std::invalid_argument("transform and space have different atom counts");
}

MSet nth(std::size_t i) { return MSet(static_cast<std::uint32_t>(i)); }

TransformVerdict check_pfi(const SetTransform& t) {
  const std::size_t n = t.size();
  for (std::size_t q = 0; q < n; ++q) {
    const MSet tq = t(nth(q));
    for (std::size_t r = q + 1; r < n; ++r) {
      if (t(nth(q & r)) != (tq & t(nth(r)))) return TransformVerdict::fail("PFI", {nth(q), nth(r)});
    }
  }
  return TransformVerdict::pass();
}

TransformVerdict check_pfu(const SetTransform& t) {
  const std::size_t n = t.size();
  for (std::size_t q = 0; q < n; ++q) {
    const MSet tq = t(nth(q));
    for (std::size_t r = q + 1; r < n; ++r) {
      if (t(nth(q | r)) != (tq | t(nth(r)))) return TransformVerdict::fail("PFU", {nth(q), nth(r)});
    }
  }
  return TransformVerdict::pass();
}

TransformVerdict check_spmc(const MeasureSpace& space, const SetTransform& t) {
  // Q ~ R iff R = Q xor N with N a set of null atoms.
  const std::uint32_t nulls = space.null_atoms().bits;
  for (std::size_t q = 0; q < t.size(); ++q) {
    for (std::uint32_t m = nulls; m != 0; m = (m - 1) & nulls) {
      const MSet r = nth(q) ^ MSet(m);
      if (t(nth(q)) != t(r)) return TransformVerdict::fail("SPMC", {nth(q), r});
    }
  }
  return TransformVerdict::pass();
}

TransformVerdict check_idempotent(const SetTransform& t) {
  for (std::size_t q = 0; q < t.size(); ++q) {
    if (t(t(nth(q))) != t(nth(q))) return TransformVerdict::fail("idempotence", {nth(q)});
  }
  return TransformVerdict::pass();
}

}  // namespace

std::string_view to_string(TransformProperty p) { return kPropertyNames[static_cast<std::size_t>(p)]; }

std::optional<TransformProperty> property_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kPropertyNames.size(); ++i) {
    if (kPropertyNames[i] == name) return static_cast<TransformProperty>(i);
  }
  return std::nullopt;
}

AlgebraClass project(const MeasureSpace& space, MSet q) { return AlgebraClass{q & space.positive_atoms()}; }

std::vector<AlgebraClass> quotient_classes(const MeasureSpace& space) {
  std::vector<AlgebraClass> out;
  const MSet pos = space.positive_atoms();
  for (std::size_t q = 0; q < space.subset_count(); ++q) {
    if (nth(q).subset_of(pos)) out.push_back(AlgebraClass{nth(q)});
  }
  return out;
}

TransformVerdict check_property(const MeasureSpace& space, const SetTransform& t, TransformProperty p) {
  require_same_space(space, t);
  const MSet all = space.ambient();
  switch (p) {
    case TransformProperty::PMS:
      // Every subset of a finite atomic space is measurable.
      return TransformVerdict::pass();
    case TransformProperty::PAS:
      if (t(all) != all) return TransformVerdict::fail("PAS", {all});
      return TransformVerdict::pass();
    case TransformProperty::PES:
      if (!t(MSet()).empty()) return TransformVerdict::fail("PES", {MSet()});
      return TransformVerdict::pass();
    case TransformProperty::PFI:
      return check_pfi(t);
    case TransformProperty::PFU:
      return check_pfu(t);
    case TransformProperty::AEI:
      for (std::size_t q = 0; q < t.size(); ++q) {
        if (!space.ae_equal(t(nth(q)), nth(q))) return TransformVerdict::fail("AEI", {nth(q)});
      }
      return TransformVerdict::pass();
    case TransformProperty::SPMC:
      return check_spmc(space, t);
    case TransformProperty::CWTC:
      for (std::size_t q = 0; q < t.size(); ++q) {
        if (t(space.complement(nth(q))) != space.complement(t(nth(q)))) return TransformVerdict::fail("CWTC", {nth(q)});
      }
      return TransformVerdict::pass();
    case TransformProperty::SPMCNS: {
      const MSet nulls = space.null_atoms();
      for (std::uint32_t m = nulls.bits; m != 0; m = (m - 1) & nulls.bits) {
        if (t(MSet(m)) != t(MSet())) return TransformVerdict::fail("SPMCNS", {MSet(m), MSet()});
      }
      return TransformVerdict::pass();
    }
  }
  throw std::logic_error("unknown transform property");
}

TransformVerdict is_lower_density(const MeasureSpace& space, const SetTransform& t) {
  using P = TransformProperty;
  for (P p : {P::PAS, P::PES, P::PFI, P::AEI, P::SPMC}) {
    if (auto v = check_property(space, t, p); !v) return v;
  }
  return TransformVerdict::pass();
}

TransformVerdict is_lifting(const MeasureSpace& space, const SetTransform& t) {
  if (auto v = is_lower_density(space, t); !v) return v;
  if (auto v = check_property(space, t, TransformProperty::PFU); !v) return v;
  if (auto v = check_property(space, t, TransformProperty::CWTC); !v) {
    v.failed = "CWTC (derived)";
    return v;
  }
  return check_idempotent(t);
}

TransformVerdict is_subordinate(const MeasureSpace& space, const SetTransform& lifted, const SetTransform& lambda) {
  require_same_space(space, lifted);
  require_same_space(space, lambda);
  for (std::size_t q = 0; q < lifted.size(); ++q) {
    const MSet lo = lambda(nth(q));
    const MSet hi = space.complement(lambda(space.complement(nth(q))));
    const MSet mid = lifted(nth(q));
    if (!lo.subset_of(mid) || !mid.subset_of(hi)) return TransformVerdict::fail("subordination", {nth(q)});
  }
  return TransformVerdict::pass();
}

std::string_view to_string(ImplicationStatus s) {
  switch (s) {
    case ImplicationStatus::Vacuous: return "vacuous";
    case ImplicationStatus::Satisfied: return "satisfied";
    case ImplicationStatus::Violated: return "violated";
  }
  return "?";
}

ImplicationReport implication_suite(const MeasureSpace& space, const SetTransform& t) {
  using P = TransformProperty;
  const auto holds = [&](P p) { return check_property(space, t, p).holds; };
  const auto status = [](bool premise, bool conclusion) {
    if (!premise) return ImplicationStatus::Vacuous;
    return conclusion ? ImplicationStatus::Satisfied : ImplicationStatus::Violated;
  };
  const bool cwtc = holds(P::CWTC);
  const bool pfi = holds(P::PFI);
  const bool pfu = holds(P::PFU);
  ImplicationReport r;
  r.measure_class = status(holds(P::SPMCNS) && cwtc && pfi && holds(P::PES) && pfu, holds(P::SPMC));
  r.unions = status(cwtc && pfi, pfu);
  return r;
}

std::vector<std::vector<MSet>> exchange_to_points(const SetTransform& t) {
  std::vector<std::vector<MSet>> out(t.atom_count());
  for (std::size_t q = 0; q < t.size(); ++q) {
    const MSet image = t(nth(q));
    for (std::size_t x = 0; x < t.atom_count(); ++x) {
      if (image.contains(x)) out[x].push_back(nth(q));
    }
  }
  return out;
}

bool is_intersection_family(std::span<const MSet> family) {
  if (family.empty()) return false;
  std::vector<MSet> sorted(family.begin(), family.end());
  std::sort(sorted.begin(), sorted.end());
  for (auto a : sorted) {
    for (auto b : sorted) {
      if (!std::binary_search(sorted.begin(), sorted.end(), a & b)) return false;
    }
  }
  return true;
}

SetTransform lower_density_to_lifting(const MeasureSpace& space, const SetTransform& lambda) {
  require_same_space(space, lambda);
  if (auto v = is_lower_density(space, lambda); !v) {
    throw std::invalid_argument("not a lower density: fails " + v.failed);
  }
  const std::size_t n = space.atom_count();
  const auto families = exchange_to_points(lambda);
  std::vector<std::size_t> g(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (!is_intersection_family(families[x])) {
      throw std::logic_error("pointwise family of a lower density is not closed under intersection");
    }
    std::vector<IndexSet> base;
    base.reserve(families[x].size());
    for (auto q : families[x]) base.emplace_back(n, q.bits);
    g[x] = ultrafilter_refine(filter_from_base(n, base)).first_point();
  }
  SetTransform lifted = lifting_from_retraction(space, g);
  if (!is_subordinate(space, lifted, lambda)) throw std::logic_error("constructed lifting is not subordinate");
  return lifted;
}

std::optional<MSet> BooleanHom::operator()(AlgebraClass c) const {
  const auto it = std::lower_bound(classes.begin(), classes.end(), c);
  if (it == classes.end() || *it != c) return std::nullopt;
  return images[static_cast<std::size_t>(it - classes.begin())];
}

BooleanHom lifting_to_right_inverse(const MeasureSpace& space, const SetTransform& lifting) {
  require_same_space(space, lifting);
  if (auto v = is_lifting(space, lifting); !v) throw std::invalid_argument("not a lifting: fails " + v.failed);
  BooleanHom rho;
  rho.classes = quotient_classes(space);
  for (auto c : rho.classes) rho.images.push_back(lifting(c.representative));
  return rho;
}

TransformVerdict is_boolean_homomorphism(const MeasureSpace& space, const BooleanHom& rho) {
  const auto& cs = rho.classes;
  if (cs != quotient_classes(space) || rho.images.size() != cs.size()) {
    return TransformVerdict::fail("domain", {});
  }
  const MSet pos = space.positive_atoms();
  const auto at = [&](MSet rep) { return *rho(AlgebraClass{rep}); };
  if (!at(MSet()).empty()) return TransformVerdict::fail("bottom", {MSet()});
  if (at(pos) != space.ambient()) return TransformVerdict::fail("top", {pos});
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const MSet c = cs[i].representative;
    if (at(pos - c) != space.complement(rho.images[i])) return TransformVerdict::fail("complement", {c});
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      const MSet d = cs[j].representative;
      if (at(c | d) != (rho.images[i] | rho.images[j])) return TransformVerdict::fail("join", {c, d});
      if (at(c & d) != (rho.images[i] & rho.images[j])) return TransformVerdict::fail("meet", {c, d});
    }
  }
  return TransformVerdict::pass();
}

TransformVerdict is_right_inverse(const MeasureSpace& space, const BooleanHom& rho) {
  for (std::size_t i = 0; i < rho.classes.size(); ++i) {
    if (project(space, rho.images.at(i)) != rho.classes[i]) {
      return TransformVerdict::fail("right inverse", {rho.classes[i].representative});
    }
  }
  return TransformVerdict::pass();
}

SetTransform lifting_from_retraction(const MeasureSpace& space, std::span<const std::size_t> retraction) {
  const std::size_t n = space.atom_count();
  if (retraction.size() != n) throw std::invalid_argument("retraction must assign every atom");
  const MSet pos = space.positive_atoms();
  for (std::size_t x = 0; x < n; ++x) {
    if (retraction[x] >= n || !pos.contains(retraction[x])) {
      throw std::invalid_argument("retraction sends atom " + std::to_string(x) + " outside the positive atoms");
    }
    if (pos.contains(x) && retraction[x] != x) {
      throw std::invalid_argument("retraction moves positive atom " + std::to_string(x));
    }
  }
  std::vector<MSet> table(space.subset_count());
  for (std::size_t q = 0; q < table.size(); ++q) {
    MSet out;
    for (std::size_t x = 0; x < n; ++x) {
      if (nth(q).contains(retraction[x])) out.bits |= 1u << x;
    }
    table[q] = out;
  }
  return SetTransform(n, std::move(table));
}

std::optional<std::vector<std::size_t>> retraction_of(const MeasureSpace& space, const SetTransform& lifting) {
  require_same_space(space, lifting);
  const std::size_t n = space.atom_count();
  std::vector<std::size_t> g(n, n);
  for (std::size_t p = 0; p < n; ++p) {
    if (!space.positive_atoms().contains(p)) continue;
    const MSet image = lifting(MSet(1u << p));
    for (std::size_t x = 0; x < n; ++x) {
      if (!image.contains(x)) continue;
      if (g[x] != n) return std::nullopt;
      g[x] = p;
    }
  }
  if (std::find(g.begin(), g.end(), n) != g.end()) return std::nullopt;
  try {
    if (lifting_from_retraction(space, g) != lifting) return std::nullopt;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  return g;
}

std::vector<SetTransform> enumerate_liftings(const MeasureSpace& space) {
  const std::size_t n = space.atom_count();
  std::vector<std::size_t> positives, nulls;
  for (std::size_t x = 0; x < n; ++x) (space.positive_atoms().contains(x) ? positives : nulls).push_back(x);

  std::vector<std::size_t> g(n);
  for (auto p : positives) g[p] = p;
  std::vector<std::size_t> digit(nulls.size(), 0);
  std::vector<SetTransform> out;
  while (true) {
    for (std::size_t k = 0; k < nulls.size(); ++k) g[nulls[k]] = positives[digit[k]];
    out.push_back(lifting_from_retraction(space, g));
    // Odometer with the lowest null atom as the most significant digit.
    std::size_t k = nulls.size();
    while (k > 0 && ++digit[k - 1] == positives.size()) digit[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

}  // namespace difflab
