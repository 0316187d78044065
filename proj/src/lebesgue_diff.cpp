#include "difflab/lebesgue_diff.hpp"

#include <algorithm>
#include <stdexcept>

namespace difflab {

bool is_integrable(const MeasureSpace& space, const PartialFunction& f) {
  return f.atom_count() == space.atom_count() && space.is_null(space.complement(f.domain()));
}

LebesgueTransform lebesgue_transform(const MeasureSpace& space, const PartialFunction& f) {
  if (!is_integrable(space, f)) throw std::invalid_argument("function is not defined almost everywhere");
  // Integrate only over positive atoms; values on null atoms do not matter.
  std::vector<Rational> weighted(space.atom_count());
  for (std::size_t x = 0; x < space.atom_count(); ++x) {
    if (space.weight(x) > 0) weighted[x] = f.at(x) * space.weight(x);
  }
  LebesgueTransform out;
  out.values.reserve(space.averageable_sets().size());
  for (MSet q : space.averageable_sets()) {
    Rational integral = 0;
    for (std::size_t x = 0; x < space.atom_count(); ++x) {
      if (q.contains(x)) integral += weighted[x];
    }
    out.values.push_back(integral / space.measure(q));
  }
  return out;
}

FilterKernel trivial_kernel(const MeasureSpace& space) {
  return FilterKernel{std::vector<Filter>(space.atom_count(), trivial_filter(space.averageable_sets().size()))};
}

namespace {

void require_kernel(const MeasureSpace& space, const FilterKernel& kernel) {
  if (kernel.at.size() != space.atom_count()) throw std::invalid_argument("kernel must assign a filter to every atom");
  for (const auto& f : kernel.at) {
    if (f.ground_size() != space.averageable_sets().size()) {
      throw std::invalid_argument("kernel filters must live on the averageable sets");
    }
  }
}

}  // namespace

PartialFunction limiting_operator(const MeasureSpace& space, const FilterKernel& kernel, std::span<const Rational> lam) {
  require_kernel(space, kernel);
  PartialFunction out = PartialFunction::nowhere(space.atom_count());
  for (std::size_t x = 0; x < space.atom_count(); ++x) out.values[x] = limit_along(kernel.at[x], lam);
  return out;
}

bool recovers(const MeasureSpace& space, const FilterKernel& kernel, const PartialFunction& f) {
  const auto transform = lebesgue_transform(space, f);
  const auto g = limiting_operator(space, kernel, transform.values);
  for (std::size_t x = 0; x < space.atom_count(); ++x) {
    if (space.weight(x) == 0) continue;
    if (!g.defined_at(x) || g.at(x) != f.at(x)) return false;
  }
  return true;
}

PartialFunction separating_function(const MeasureSpace& space) {
  PartialFunction f = PartialFunction::nowhere(space.atom_count());
  for (std::size_t x = 0; x < space.atom_count(); ++x) {
    f.values[x] = space.weight(x) > 0 ? Rational(static_cast<long>(x) + 1) : Rational(0);
  }
  return f;
}

DifferentiationVerdict differentiates(const MeasureSpace& space, const FilterKernel& kernel) {
  require_kernel(space, kernel);
  for (std::size_t q = 0; q < space.subset_count(); ++q) {
    const MSet set(static_cast<std::uint32_t>(q));
    auto f = space.indicator(set);
    if (!recovers(space, kernel, f)) return {false, "indicator " + format_set(set, space.atom_count()), std::move(f)};
  }
  auto sep = separating_function(space);
  if (!recovers(space, kernel, sep)) return {false, "separating", std::move(sep)};
  return {};
}

SetTransform lower_density_from_kernel(const MeasureSpace& space, const FilterKernel& kernel) {
  if (auto v = differentiates(space, kernel); !v) {
    throw std::invalid_argument("kernel does not differentiate: fails on " + v.witness_name);
  }
  const auto z = space.averageable_sets();
  const std::size_t n = space.atom_count();
  // The mean of 1_Q over a kernel set S is 1 iff the positive part of S lies
  // in Q, so the limit at x is 1 iff the positive parts of all kernel sets
  // at x lie in Q.
  std::vector<MSet> reach(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto& k = kernel.at[x].kernel();
    for (auto i = k.find_first(); i != IndexSet::npos; i = k.find_next(i)) reach[x] = reach[x] | z[i];
    reach[x] = reach[x] & space.positive_atoms();
  }
  std::vector<MSet> table(space.subset_count());
  for (std::size_t q = 0; q < table.size(); ++q) {
    const MSet set(static_cast<std::uint32_t>(q));
    for (std::size_t x = 0; x < n; ++x) {
      if (reach[x].subset_of(set)) table[q].bits |= 1u << x;
    }
  }
  return SetTransform(n, std::move(table));
}

DifferentiationBasis make_basis(const MeasureSpace& space, std::vector<MSet> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  DifferentiationBasis b;
  b.per_point.resize(space.atom_count());
  for (MSet m : members) {
    if (!space.averageable_index(m)) throw std::invalid_argument("basis member " + format_set(m, space.atom_count()) + " is null");
    for (std::size_t x = 0; x < space.atom_count(); ++x) {
      if (m.contains(x)) b.per_point[x].push_back(m);
    }
    b.support = b.support | m;
  }
  b.members = std::move(members);
  return b;
}

TransformVerdict basis_axioms(const MeasureSpace& space, const DifferentiationBasis& basis) {
  for (std::size_t x = 0; x < space.atom_count(); ++x) {
    const auto& fam = basis.per_point[x];
    if (fam.empty()) continue;
    try {
      (void)tail_filter(fam);
    } catch (const NotDirected& e) {
      return TransformVerdict::fail("directedness", {fam[e.witness.first], fam[e.witness.second]});
    }
  }
  if (!space.is_null(space.complement(basis.support))) {
    return TransformVerdict::fail("full support", {space.complement(basis.support)});
  }
  return TransformVerdict::pass();
}

DifferentiationBasis basis_from_lifting(const MeasureSpace& space, const SetTransform& lifting) {
  if (auto v = is_lifting(space, lifting); !v) throw std::invalid_argument("not a lifting: fails " + v.failed);
  std::vector<MSet> fixed;
  for (MSet q : space.averageable_sets()) {
    if (lifting(q) == q) fixed.push_back(q);
  }
  auto basis = make_basis(space, std::move(fixed));
  if (auto v = basis_axioms(space, basis); !v) throw std::logic_error("basis of a lifting violates " + v.failed);
  return basis;
}

FilterKernel kernel_from_basis(const MeasureSpace& space, const DifferentiationBasis& basis) {
  const std::size_t zsize = space.averageable_sets().size();
  FilterKernel k;
  k.at.reserve(space.atom_count());
  for (std::size_t x = 0; x < space.atom_count(); ++x) {
    const auto& fam = basis.per_point[x];
    if (fam.empty()) {
      k.at.push_back(trivial_filter(zsize));
      continue;
    }
    std::vector<std::size_t> inject;
    inject.reserve(fam.size());
    for (MSet m : fam) inject.push_back(*space.averageable_index(m));
    k.at.push_back(direct_image(inject, zsize, tail_filter(fam)));
  }
  return k;
}

FilterKernel kernel_from_lifting(const MeasureSpace& space, const SetTransform& lifting) {
  return kernel_from_basis(space, basis_from_lifting(space, lifting));
}

bool Theorem1Report::all_passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.passed(); });
}

bool Theorem1Report::all_round_trips() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.round_trip; });
}

Theorem1Entry verify_theorem1_for(const MeasureSpace& space, const SetTransform& lifting) {
  Theorem1Entry e;
  e.lifting = lifting;
  const auto fail = [&](std::string stage) {
    e.failure = std::move(stage);
    return e;
  };
  FilterKernel kernel;
  try {
    kernel = kernel_from_lifting(space, lifting);
  } catch (const std::exception&) {
    return fail("kernel");
  }
  e.kernel_differentiates = differentiates(space, kernel).holds;
  if (!e.kernel_differentiates) return fail("differentiation");

  const SetTransform lambda = lower_density_from_kernel(space, kernel);
  e.lower_density_ok = is_lower_density(space, lambda).holds;
  if (!e.lower_density_ok) return fail("lower density");

  const SetTransform lifted = lower_density_to_lifting(space, lambda);
  e.lifting_ok = is_lifting(space, lifted).holds;
  e.subordinate = is_subordinate(space, lifted, lambda).holds;
  if (!e.lifting_ok) return fail("lifting");
  if (!e.subordinate) return fail("subordination");

  const BooleanHom rho = lifting_to_right_inverse(space, lifted);
  e.boolean_hom_ok = is_boolean_homomorphism(space, rho).holds;
  e.right_inverse_ok = is_right_inverse(space, rho).holds;
  if (!e.boolean_hom_ok) return fail("boolean homomorphism");
  if (!e.right_inverse_ok) return fail("right inverse");

  e.round_trip = lifted == lifting;
  return e;
}

Theorem1Report verify_theorem1(const MeasureSpace& space) {
  Theorem1Report r;
  for (const auto& lifting : enumerate_liftings(space)) r.entries.push_back(verify_theorem1_for(space, lifting));
  return r;
}

}  // namespace difflab
