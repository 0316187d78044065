#include "difflab/category_kernel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace difflab {

FiniteCategory::FiniteCategory(std::size_t objects, std::vector<Object> dom, std::vector<Object> cod,
                               std::vector<Arrow> identity, std::vector<std::int32_t> table,
                               std::vector<std::string> arrow_names)
    : dom_(std::move(dom)), cod_(std::move(cod)), identity_(std::move(identity)), compose_(std::move(table)),
      names_(std::move(arrow_names)) {
  const std::size_t m = dom_.size();
  if (objects == 0) throw std::invalid_argument("category needs an object");
  if (cod_.size() != m || identity_.size() != objects || compose_.size() != m * m) {
    throw std::invalid_argument("category data have inconsistent sizes");
  }
  if (!names_.empty() && names_.size() != m) throw std::invalid_argument("need one name per arrow");
  for (Arrow a = 0; a < m; ++a) {
    if (dom_[a] >= objects || cod_[a] >= objects) throw std::invalid_argument("arrow endpoint is not an object");
  }
  for (Object o = 0; o < objects; ++o) {
    const Arrow i = identity_[o];
    if (i >= m || dom_[i] != o || cod_[i] != o) throw std::invalid_argument("identity has wrong endpoints");
  }
  for (Arrow g = 0; g < m; ++g) {
    for (Arrow f = 0; f < m; ++f) {
      const auto gf = compose_[g * m + f];
      if ((gf >= 0) != (dom_[g] == cod_[f])) throw std::invalid_argument("composition defined on the wrong pairs");
      if (gf < 0) continue;
      if (gf >= static_cast<std::int32_t>(m)) throw std::invalid_argument("composite is not an arrow");
      if (dom_[gf] != dom_[f] || cod_[gf] != cod_[g]) throw std::invalid_argument("composite has wrong endpoints");
    }
  }
  for (Arrow f = 0; f < m; ++f) {
    if (*compose(identity_[cod_[f]], f) != f || *compose(f, identity_[dom_[f]]) != f) {
      throw std::invalid_argument("identity law fails at arrow " + std::to_string(f));
    }
  }
  for (Arrow h = 0; h < m; ++h) {
    for (Arrow g = 0; g < m; ++g) {
      const auto hg = compose(h, g);
      if (!hg) continue;
      for (Arrow f = 0; f < m; ++f) {
        const auto gf = compose(g, f);
        if (gf && *compose(*hg, f) != *compose(h, *gf)) throw std::invalid_argument("composition is not associative");
      }
    }
  }
}

std::optional<Arrow> FiniteCategory::compose(Arrow g, Arrow f) const {
  const auto v = compose_[g * arrow_count() + f];
  if (v < 0) return std::nullopt;
  return static_cast<Arrow>(v);
}

std::string FiniteCategory::arrow_name(Arrow a) const {
  if (a < names_.size()) return names_[a];
  return std::to_string(a);
}

std::optional<Arrow> FiniteCategory::find_arrow(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Arrow>(it - names_.begin());
}

bool FiniteCategory::operator==(const FiniteCategory& other) const {
  return dom_ == other.dom_ && cod_ == other.cod_ && identity_ == other.identity_ && compose_ == other.compose_;
}

FiniteCategory cat_from_rpm(const PartialMagma& pm) {
  const auto cls = classify(pm);
  if (!cls.regular) throw std::invalid_argument("only regular partial magmas are categories");
  const auto p = pins(pm);
  std::vector<std::int32_t> object_of(pm.size(), -1);
  for (std::size_t k = 0; k < cls.units.size(); ++k) object_of[cls.units[k]] = static_cast<std::int32_t>(k);
  std::vector<Object> dom(pm.size()), cod(pm.size());
  for (Element x = 0; x < pm.size(); ++x) {
    dom[x] = static_cast<Object>(object_of[p.dom[x]]);
    cod[x] = static_cast<Object>(object_of[p.cod[x]]);
  }
  return FiniteCategory(cls.units.size(), std::move(dom), std::move(cod),
                        std::vector<Arrow>(cls.units.begin(), cls.units.end()), pm.table(), pm.names());
}

PartialMagma rpm_from_cat(const FiniteCategory& cat) {
  return PartialMagma(cat.arrow_count(), cat.composition_table(), cat.arrow_names());
}

std::vector<Arrow> hom_set(const FiniteCategory& cat, Object u, Object v) {
  if (u >= cat.object_count() || v >= cat.object_count()) throw std::out_of_range("hom-set endpoints are not objects");
  std::vector<Arrow> out;
  for (Arrow a = 0; a < cat.arrow_count(); ++a) {
    if (cat.dom(a) == u && cat.cod(a) == v) out.push_back(a);
  }
  return out;
}

bool is_twin_arrow(const FiniteCategory& cat, const TwinArrow& z) {
  const auto lhs = cat.compose(z.second, z.source);
  const auto rhs = cat.compose(z.target, z.first);
  return lhs && rhs && *lhs == *rhs;
}

std::vector<TwinArrow> twin_hom_cases(const FiniteCategory& cat, Arrow x, Arrow y) {
  std::vector<TwinArrow> out;
  for (Arrow z1 : hom_set(cat, cat.dom(x), cat.dom(y))) {
    for (Arrow z2 : hom_set(cat, cat.cod(x), cat.cod(y))) {
      const TwinArrow z{x, y, z1, z2};
      if (is_twin_arrow(cat, z)) out.push_back(z);
    }
  }
  return out;
}

std::vector<TwinArrow> twin_homs_from_object(const FiniteCategory& cat, Object u, Arrow y) {
  std::vector<TwinArrow> out;
  for (Arrow z1 : hom_set(cat, u, cat.dom(y))) {
    out.push_back({cat.identity(u), y, z1, *cat.compose(y, z1)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TwinArrow> twin_homs_to_object(const FiniteCategory& cat, Arrow x, Object v) {
  std::vector<TwinArrow> out;
  for (Arrow z2 : hom_set(cat, cat.cod(x), v)) {
    out.push_back({x, cat.identity(v), *cat.compose(z2, x), z2});
  }
  std::sort(out.begin(), out.end());
  return out;
}

TwinCategory twin_category(const FiniteCategory& base) {
  const std::size_t objects = base.arrow_count();
  std::vector<TwinArrow> arrows;
  for (Arrow x = 0; x < objects; ++x) {
    for (Arrow y = 0; y < objects; ++y) {
      for (const auto& z : twin_hom_cases(base, x, y)) arrows.push_back(z);
    }
  }
  const std::size_t m = arrows.size();
  std::map<TwinArrow, Arrow> index;
  for (Arrow i = 0; i < m; ++i) index.emplace(arrows[i], i);

  std::vector<Object> dom(m), cod(m);
  std::vector<std::string> names(m);
  for (Arrow i = 0; i < m; ++i) {
    dom[i] = arrows[i].source;
    cod[i] = arrows[i].target;
    names[i] = "(" + base.arrow_name(arrows[i].first) + "," + base.arrow_name(arrows[i].second) + "):" +
               base.arrow_name(arrows[i].source) + "->" + base.arrow_name(arrows[i].target);
  }
  std::vector<Arrow> identity(objects);
  for (Arrow x = 0; x < objects; ++x) {
    identity[x] = index.at({x, x, base.identity(base.dom(x)), base.identity(base.cod(x))});
  }
  std::vector<std::int32_t> compose(m * m, -1);
  for (Arrow g = 0; g < m; ++g) {
    for (Arrow f = 0; f < m; ++f) {
      if (arrows[g].source != arrows[f].target) continue;
      const TwinArrow gf{arrows[f].source, arrows[g].target, *base.compose(arrows[g].first, arrows[f].first),
                         *base.compose(arrows[g].second, arrows[f].second)};
      compose[g * m + f] = static_cast<std::int32_t>(index.at(gf));
    }
  }
  return {FiniteCategory(objects, std::move(dom), std::move(cod), std::move(identity), std::move(compose),
                         std::move(names)),
          std::move(arrows)};
}

HomVerdict is_functor(const FiniteCategory& c, const FiniteCategory& d, const Functor& f) {
  return is_pm_hom(f.map, rpm_from_cat(c), rpm_from_cat(d), true);
}

std::vector<Object> object_map(const FiniteCategory& c, const FiniteCategory& d, const Functor& f) {
  std::vector<Object> out(c.object_count());
  for (Object o = 0; o < c.object_count(); ++o) {
    const Arrow image = f.map.at(c.identity(o));
    if (!d.is_identity(image)) throw std::invalid_argument("functor sends an identity to a non-identity");
    out[o] = d.dom(image);
  }
  return out;
}

bool preserves_dom_cod(const FiniteCategory& c, const FiniteCategory& d, const Functor& f) {
  const auto obj = object_map(c, d, f);
  for (Arrow a = 0; a < c.arrow_count(); ++a) {
    if (d.dom(f.map[a]) != obj[c.dom(a)] || d.cod(f.map[a]) != obj[c.cod(a)]) return false;
  }
  return true;
}

Functor identity_functor(const FiniteCategory& c) {
  Functor f;
  f.map.resize(c.arrow_count());
  std::iota(f.map.begin(), f.map.end(), Arrow{0});
  return f;
}

std::vector<Functor> enumerate_functors(const FiniteCategory& c, const FiniteCategory& d) {
  const auto pc = rpm_from_cat(c);
  const auto pd = rpm_from_cat(d);
  std::vector<Functor> out;
  Functor f;
  f.map.assign(c.arrow_count(), 0);
  while (true) {
    if (is_pm_hom(f.map, pc, pd, true)) out.push_back(f);
    std::size_t k = f.map.size();
    while (k > 0 && ++f.map[k - 1] == d.arrow_count()) f.map[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

namespace {

HomVerdict fail(std::string condition, std::vector<Element> elements) {
  return {false, PMWitness{std::move(condition), std::move(elements)}};
}

std::string describe(const PMWitness& w) {
  std::string out = w.condition;
  for (auto e : w.elements) out += " " + std::to_string(e);
  return out;
}

}  // namespace

HomVerdict is_nat_hom(const FiniteCategory& c, const FiniteCategory& d, const Functor& t, const Functor& s,
                      const NatHom& alpha) {
  if (alpha.components.size() != c.arrow_count()) return fail("shape", {});
  for (Arrow x = 0; x < c.arrow_count(); ++x) {
    const Twin z = alpha.components[x];
    if (z.first >= d.arrow_count() || z.second >= d.arrow_count()) return fail("shape", {x});
    if (!is_twin_arrow(d, {t.map[x], s.map[x], z.first, z.second})) return fail("pointwise", {x});
  }
  for (Arrow x = 0; x < c.arrow_count(); ++x) {
    for (Arrow y = 0; y < c.arrow_count(); ++y) {
      const auto xy = c.compose(x, y);
      if (!xy) continue;
      const auto h = hmul(alpha.components[x], alpha.components[y]);
      if (!h || *h != alpha.components[*xy]) return fail("H", {x, y});
    }
  }
  return {};
}

HomVerdict is_natural(const FiniteCategory& c, const FiniteCategory& d, const Functor& t, const Functor& s,
                      const NatTrans& tau) {
  if (tau.components.size() != c.object_count()) return fail("shape", {});
  const auto tobj = object_map(c, d, t);
  const auto sobj = object_map(c, d, s);
  for (Object u = 0; u < c.object_count(); ++u) {
    const Arrow a = tau.components[u];
    if (a >= d.arrow_count() || d.dom(a) != tobj[u] || d.cod(a) != sobj[u]) return fail("component", {u});
  }
  for (Arrow x = 0; x < c.arrow_count(); ++x) {
    const auto lhs = d.compose(s.map[x], tau.components[c.dom(x)]);
    const auto rhs = d.compose(tau.components[c.cod(x)], t.map[x]);
    if (!lhs || !rhs || *lhs != *rhs) return fail("square", {x});
  }
  return {};
}

NatTrans nat_from_hom(const FiniteCategory& c, const FiniteCategory& d, const Functor& t, const Functor& s,
                      const NatHom& alpha) {
  if (auto v = is_nat_hom(c, d, t, s, alpha); !v) {
    throw std::invalid_argument("not a homomorphism of functors: " + describe(*v.failure));
  }
  NatTrans tau;
  for (Object u = 0; u < c.object_count(); ++u) {
    const Twin z = alpha.components[c.identity(u)];
    if (z.first != z.second) throw std::logic_error("value at an identity is not a unit pair");
    tau.components.push_back(z.first);
  }
  return tau;
}

NatHom hom_from_nat(const FiniteCategory& c, const FiniteCategory& d, const Functor& t, const Functor& s,
                    const NatTrans& tau) {
  if (auto v = is_natural(c, d, t, s, tau); !v) {
    throw std::invalid_argument("not a natural transformation: " + describe(*v.failure));
  }
  NatHom alpha;
  for (Arrow x = 0; x < c.arrow_count(); ++x) {
    alpha.components.push_back({tau.components[c.dom(x)], tau.components[c.cod(x)]});
  }
  return alpha;
}

NatHom identity_nat(const FiniteCategory& c, const FiniteCategory& d, const Functor& t) {
  (void)d;
  NatHom alpha;
  for (Arrow x = 0; x < c.arrow_count(); ++x) {
    alpha.components.push_back({t.map[c.identity(c.dom(x))], t.map[c.identity(c.cod(x))]});
  }
  return alpha;
}

NatHom compose_nat(const FiniteCategory& d, const NatHom& beta, const NatHom& alpha) {
  if (beta.components.size() != alpha.components.size()) throw std::invalid_argument("homomorphisms over different categories");
  const auto pd = rpm_from_cat(d);
  NatHom out;
  for (std::size_t x = 0; x < alpha.components.size(); ++x) {
    const auto v = vmul(pd, beta.components[x], alpha.components[x]);
    if (!v) throw std::invalid_argument("homomorphisms are not composable at arrow " + std::to_string(x));
    out.components.push_back(*v);
  }
  return out;
}

std::vector<NatHom> enumerate_nat_homs(const FiniteCategory& c, const FiniteCategory& d, const Functor& t,
                                       const Functor& s) {
  // Product of the pointwise-valid twin arrows, filtered by (H).
  std::vector<std::vector<Twin>> choices(c.arrow_count());
  for (Arrow x = 0; x < c.arrow_count(); ++x) {
    for (const auto& z : twin_hom_cases(d, t.map[x], s.map[x])) choices[x].push_back({z.first, z.second});
    if (choices[x].empty()) return {};
  }
  std::vector<NatHom> out;
  std::vector<std::size_t> digit(c.arrow_count(), 0);
  NatHom alpha;
  alpha.components.resize(c.arrow_count());
  while (true) {
    for (Arrow x = 0; x < c.arrow_count(); ++x) alpha.components[x] = choices[x][digit[x]];
    if (is_nat_hom(c, d, t, s, alpha)) out.push_back(alpha);
    std::size_t k = digit.size();
    while (k > 0 && ++digit[k - 1] == choices[k - 1].size()) digit[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

std::vector<NatTrans> enumerate_nat_trans(const FiniteCategory& c, const FiniteCategory& d, const Functor& t,
                                          const Functor& s) {
  const auto tobj = object_map(c, d, t);
  const auto sobj = object_map(c, d, s);
  std::vector<std::vector<Arrow>> choices(c.object_count());
  for (Object u = 0; u < c.object_count(); ++u) {
    choices[u] = hom_set(d, tobj[u], sobj[u]);
    if (choices[u].empty()) return {};
  }
  std::vector<NatTrans> out;
  std::vector<std::size_t> digit(c.object_count(), 0);
  NatTrans tau;
  tau.components.resize(c.object_count());
  while (true) {
    for (Object u = 0; u < c.object_count(); ++u) tau.components[u] = choices[u][digit[u]];
    if (is_natural(c, d, t, s, tau)) out.push_back(tau);
    std::size_t k = digit.size();
    while (k > 0 && ++digit[k - 1] == choices[k - 1].size()) digit[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

FunctorCategory functor_category(const FiniteCategory& c, const FiniteCategory& d) {
  auto functors = enumerate_functors(c, d);
  std::vector<FunctorCategory::Entry> arrows;
  for (std::size_t i = 0; i < functors.size(); ++i) {
    for (std::size_t j = 0; j < functors.size(); ++j) {
      for (auto& alpha : enumerate_nat_homs(c, d, functors[i], functors[j])) arrows.push_back({i, j, std::move(alpha)});
    }
  }
  const std::size_t m = arrows.size();
  std::map<std::pair<std::size_t, std::vector<Twin>>, Arrow> index;
  for (Arrow a = 0; a < m; ++a) index.emplace(std::make_pair(arrows[a].source, arrows[a].alpha.components), a);

  std::vector<Object> dom(m), cod(m);
  for (Arrow a = 0; a < m; ++a) {
    dom[a] = static_cast<Object>(arrows[a].source);
    cod[a] = static_cast<Object>(arrows[a].target);
  }
  std::vector<Arrow> identity(functors.size());
  for (std::size_t i = 0; i < functors.size(); ++i) {
    identity[i] = index.at({i, identity_nat(c, d, functors[i]).components});
  }
  std::vector<std::int32_t> compose(m * m, -1);
  for (Arrow g = 0; g < m; ++g) {
    for (Arrow f = 0; f < m; ++f) {
      if (arrows[g].source != arrows[f].target) continue;
      const auto gf = compose_nat(d, arrows[g].alpha, arrows[f].alpha);
      compose[g * m + f] = static_cast<std::int32_t>(index.at({arrows[f].source, gf.components}));
    }
  }
  FiniteCategory cat(functors.size(), std::move(dom), std::move(cod), std::move(identity), std::move(compose));
  return {std::move(cat), std::move(functors), std::move(arrows)};
}

bool is_isomorphism(const FiniteCategory& a, const FiniteCategory& b, const std::vector<Object>& objects,
                    const std::vector<Arrow>& arrows) {
  if (objects.size() != a.object_count() || arrows.size() != a.arrow_count()) return false;
  if (a.object_count() != b.object_count() || a.arrow_count() != b.arrow_count()) return false;
  const auto bijective = [](std::vector<std::uint32_t> v, std::size_t n) {
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != i) return false;
    }
    return v.size() == n;
  };
  if (!bijective(objects, b.object_count()) || !bijective(arrows, b.arrow_count())) return false;
  for (Object o = 0; o < a.object_count(); ++o) {
    if (arrows[a.identity(o)] != b.identity(objects[o])) return false;
  }
  for (Arrow x = 0; x < a.arrow_count(); ++x) {
    if (b.dom(arrows[x]) != objects[a.dom(x)] || b.cod(arrows[x]) != objects[a.cod(x)]) return false;
    for (Arrow y = 0; y < a.arrow_count(); ++y) {
      const auto xy = a.compose(x, y);
      const auto image = b.compose(arrows[x], arrows[y]);
      if (xy.has_value() != image.has_value()) return false;
      if (xy && arrows[*xy] != *image) return false;
    }
  }
  return true;
}

bool functors_from_one_iso(const FiniteCategory& one, const FiniteCategory& c) {
  if (one.arrow_count() != 1) throw std::invalid_argument("expected the one-arrow category");
  const auto fun = functor_category(one, c);
  std::vector<Object> objects;
  for (const auto& f : fun.functors) objects.push_back(c.dom(f.map[0]));
  std::vector<Arrow> arrows;
  for (const auto& e : fun.arrows) arrows.push_back(e.alpha.components[0].first);
  return is_isomorphism(fun.cat, c, objects, arrows);
}

bool functors_from_two_iso(const FiniteCategory& two, const FiniteCategory& c) {
  std::optional<Arrow> generator;
  for (Arrow a = 0; a < two.arrow_count(); ++a) {
    if (!two.is_identity(a)) {
      if (generator) throw std::invalid_argument("expected a single non-identity arrow");
      generator = a;
    }
  }
  if (!generator) throw std::invalid_argument("expected a single non-identity arrow");
  const auto fun = functor_category(two, c);
  const auto twin = twin_category(c);
  std::map<TwinArrow, Arrow> twin_index;
  for (Arrow i = 0; i < twin.arrows.size(); ++i) twin_index.emplace(twin.arrows[i], i);

  std::vector<Object> objects;
  for (const auto& f : fun.functors) objects.push_back(f.map[*generator]);
  std::vector<Arrow> arrows;
  for (const auto& e : fun.arrows) {
    const Twin z = e.alpha.components[*generator];
    const TwinArrow key{fun.functors[e.source].map[*generator], fun.functors[e.target].map[*generator], z.first,
                        z.second};
    const auto it = twin_index.find(key);
    if (it == twin_index.end()) return false;
    arrows.push_back(it->second);
  }
  return is_isomorphism(fun.cat, twin.cat, objects, arrows);
}

PartialMagma matrix_magma(const std::vector<DiagonalSpec>& elements) {
  using Matrix = std::vector<std::vector<long>>;
  const auto make = [](const DiagonalSpec& s) {
    Matrix m(static_cast<std::size_t>(s.rows), std::vector<long>(static_cast<std::size_t>(s.cols), 0));
    for (int i = 0; i < std::min(s.rows, s.cols); ++i) m[i][i] = 1;
    return m;
  };
  std::vector<Matrix> mats;
  std::vector<std::string> names;
  for (const auto& e : elements) {
    mats.push_back(make(e));
    names.push_back(e.name);
  }
  const std::size_t n = mats.size();
  std::vector<std::int32_t> table(n * n, PartialMagma::kUndefined);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto& a = mats[x];
      const auto& b = mats[y];
      if (a.front().size() != b.size()) continue;
      Matrix p(a.size(), std::vector<long>(b.front().size(), 0));
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < b.size(); ++k) {
          for (std::size_t j = 0; j < b.front().size(); ++j) p[i][j] += a[i][k] * b[k][j];
        }
      }
      const auto it = std::find(mats.begin(), mats.end(), p);
      if (it == mats.end()) throw std::invalid_argument("product " + names[x] + "." + names[y] + " leaves the set");
      table[x * n + y] = static_cast<std::int32_t>(it - mats.begin());
    }
  }
  return PartialMagma(n, std::move(table), std::move(names));
}

PartialMagma truncated_subtraction(std::size_t max) {
  const std::size_t n = max + 1;
  std::vector<std::int32_t> table(n * n, PartialMagma::kUndefined);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    for (std::size_t j = 0; j <= i; ++j) table[i * n + j] = static_cast<std::int32_t>(i - j);
  }
  return PartialMagma(n, std::move(table), std::move(names));
}

std::map<std::string, PartialMagma> example_library() {
  const DiagonalSpec i1{"I1", 1, 1}, i2{"I2", 2, 2}, i3{"I3", 3, 3}, i4{"I4", 4, 4};
  const DiagonalSpec a21{"A21", 2, 1}, a32{"A32", 3, 2}, a31{"A31", 3, 1}, a41{"A41", 4, 1}, a34{"A34", 3, 4};
  std::map<std::string, PartialMagma> lib;
  lib.emplace("1", matrix_magma({i1}));
  lib.emplace("2", matrix_magma({i1, i2, a21}));
  lib.emplace("II", matrix_magma({i1, i2}));
  lib.emplace("3", matrix_magma({i1, i2, i3, a21, a32, a31}));
  lib.emplace("SQ", matrix_magma({i1, i2, i3, i4, a21, a32, a31, a41, a34}));
  lib.emplace("N3-sub", truncated_subtraction(3));
  return lib;
}

FiniteCategory library_category(const std::string& name) {
  const auto lib = example_library();
  const auto it = lib.find(name);
  if (it == lib.end()) throw std::invalid_argument("no library entry named " + name);
  return cat_from_rpm(it->second);
}

}  // namespace difflab
