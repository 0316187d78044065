#include "difflab/filter_calculus.hpp"

#include <algorithm>
#include <string>

namespace difflab {

Filter::Filter(IndexSet kernel) : kernel_(std::move(kernel)) {
  if (kernel_.none()) throw ImproperFilter("filter kernel must be nonempty");
}

bool Filter::contains(const IndexSet& s) const {
  if (s.size() != kernel_.size()) throw std::invalid_argument("ground size mismatch in filter membership");
  return kernel_.is_subset_of(s);
}

bool Filter::subset_of(const Filter& other) const {
  if (other.ground_size() != ground_size()) throw std::invalid_argument("ground size mismatch in filter inclusion");
  // Every superset of our kernel contains other's kernel iff our kernel does.
  return other.kernel_.is_subset_of(kernel_);
}

IndexSet make_index_set(std::size_t ground_size, std::initializer_list<std::size_t> members) {
  IndexSet s(ground_size);
  for (auto m : members) s.set(m);
  return s;
}

Filter filter_from_base(std::size_t ground_size, std::span<const IndexSet> base) {
  if (base.empty()) throw std::invalid_argument("filter base must be nonempty");
  IndexSet kernel(ground_size);
  kernel.set();
  for (const auto& member : base) {
    if (member.size() != ground_size) throw std::invalid_argument("base member has wrong ground size");
    kernel &= member;
  }
  if (kernel.none()) throw ImproperFilter("improper filter: base has empty intersection");
  return Filter(std::move(kernel));
}

Filter principal_ultrafilter(std::size_t ground_size, std::size_t point) {
  if (point >= ground_size) {
    throw std::out_of_range("point " + std::to_string(point) + " not in ground of size " + std::to_string(ground_size));
  }
  IndexSet k(ground_size);
  k.set(point);
  return Filter(std::move(k));
}

Filter trivial_filter(std::size_t ground_size) {
  IndexSet k(ground_size);
  k.set();
  return Filter(std::move(k));
}

Filter ultrafilter_refine(const Filter& f) {
  return principal_ultrafilter(f.ground_size(), f.first_point());
}

Filter direct_image(std::span<const std::size_t> map, std::size_t target_size, const Filter& f) {
  if (map.size() != f.ground_size()) throw std::invalid_argument("map domain does not match filter ground");
  IndexSet image(target_size);
  for (auto i = f.kernel().find_first(); i != IndexSet::npos; i = f.kernel().find_next(i)) {
    if (map[i] >= target_size) throw std::out_of_range("map value outside target ground");
    image.set(map[i]);
  }
  return Filter(std::move(image));
}

FiniteTopSpace FiniteTopSpace::from_opens(std::size_t points, std::span<const std::uint64_t> opens) {
  if (points == 0 || points > 64) throw std::invalid_argument("finite spaces need 1..64 points");
  const std::uint64_t whole = points == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << points) - 1);
  const auto has = [&](std::uint64_t s) { return std::find(opens.begin(), opens.end(), s) != opens.end(); };
  if (!has(0) || !has(whole)) throw std::invalid_argument("topology must contain the empty set and the whole space");
  for (auto u : opens) {
    if (u & ~whole) throw std::invalid_argument("open set mentions a point outside the space");
    for (auto v : opens) {
      if (!has(u | v) || !has(u & v)) throw std::invalid_argument("open sets not closed under union and intersection");
    }
  }
  std::vector<std::uint64_t> minimal(points, whole);
  for (std::size_t y = 0; y < points; ++y) {
    for (auto u : opens) {
      if ((u >> y) & 1u) minimal[y] &= u;
    }
  }
  return FiniteTopSpace(std::move(minimal));
}

FiniteTopSpace FiniteTopSpace::discrete(std::size_t points) {
  if (points == 0 || points > 64) throw std::invalid_argument("finite spaces need 1..64 points");
  std::vector<std::uint64_t> minimal(points);
  for (std::size_t y = 0; y < points; ++y) minimal[y] = std::uint64_t{1} << y;
  return FiniteTopSpace(std::move(minimal));
}

bool FiniteTopSpace::is_open(std::uint64_t set) const {
  std::uint64_t acc = 0;
  for (std::size_t y = 0; y < size(); ++y) {
    if ((set >> y) & 1u) acc |= minimal_open_[y];
  }
  return acc == set;
}

bool FiniteTopSpace::is_hausdorff() const {
  for (std::size_t x = 0; x < size(); ++x) {
    for (std::size_t y = x + 1; y < size(); ++y) {
      if (minimal_open_[x] & minimal_open_[y]) return false;
    }
  }
  return true;
}

bool FiniteTopSpace::is_discrete() const {
  for (std::size_t y = 0; y < size(); ++y) {
    if (minimal_open_[y] != (std::uint64_t{1} << y)) return false;
  }
  return true;
}

std::vector<std::size_t> limit_points(const Filter& f, std::span<const std::size_t> lam, const FiniteTopSpace& codomain) {
  if (lam.size() != f.ground_size()) throw std::invalid_argument("function domain does not match filter ground");
  std::uint64_t image = 0;
  for (auto i = f.kernel().find_first(); i != IndexSet::npos; i = f.kernel().find_next(i)) {
    if (lam[i] >= codomain.size()) throw std::out_of_range("function value outside codomain");
    image |= std::uint64_t{1} << lam[i];
  }
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < codomain.size(); ++y) {
    if ((image & ~codomain.minimal_open(y)) == 0) out.push_back(y);
  }
  return out;
}

std::optional<std::size_t> limit_along(const Filter& f, std::span<const std::size_t> lam, const FiniteTopSpace& codomain) {
  const auto pts = limit_points(f, lam, codomain);
  if (pts.size() != 1) return std::nullopt;
  return pts.front();
}

std::optional<Rational> limit_along(const Filter& f, std::span<const Rational> lam) {
  if (lam.size() != f.ground_size()) throw std::invalid_argument("function domain does not match filter ground");
  const auto first = f.kernel().find_first();
  for (auto i = f.kernel().find_next(first); i != IndexSet::npos; i = f.kernel().find_next(i)) {
    if (lam[i] != lam[first]) return std::nullopt;
  }
  return lam[first];
}

NotDirected::NotDirected(std::size_t first, std::size_t second)
    : std::invalid_argument("family is not directed: members " + std::to_string(first) + " and " +
                            std::to_string(second) + " have no common lower bound in the family"),
      witness(first, second) {}

Filter tail_filter(std::span<const MSet> directed) {
  const std::size_t m = directed.size();
  if (m == 0) throw std::invalid_argument("tail filter of an empty family");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const MSet meet = directed[i] & directed[j];
      const bool bounded = std::any_of(directed.begin(), directed.end(), [&](MSet k) { return k.subset_of(meet); });
      if (!bounded) throw NotDirected(i, j);
    }
  }
  // Kernel = intersection of the final segments {e : e subset of d}.
  IndexSet kernel(m);
  kernel.set();
  for (std::size_t d = 0; d < m; ++d) {
    IndexSet segment(m);
    for (std::size_t e = 0; e < m; ++e) {
      if (directed[e].subset_of(directed[d])) segment.set(e);
    }
    kernel &= segment;
  }
  return Filter(std::move(kernel));
}

std::size_t lim_beta(const FiniteTopSpace& space, const Filter& ultra) {
  if (!space.is_hausdorff()) throw std::invalid_argument("lim over ultrafilters needs a Hausdorff space");
  if (ultra.ground_size() != space.size()) throw std::invalid_argument("ultrafilter ground is not the point set");
  if (!ultra.is_ultrafilter()) throw std::invalid_argument("lim_beta expects an ultrafilter");
  std::vector<std::size_t> identity(space.size());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
  const auto y = limit_along(ultra, identity, space);
  if (!y) throw std::logic_error("ultrafilter on a Hausdorff space without a unique limit");
  return *y;
}

}  // namespace difflab
