#include "difflab/partial_magma.hpp"

#include <algorithm>
#include <stdexcept>

namespace difflab {

PartialMagma::PartialMagma(std::size_t n, std::vector<std::int32_t> table, std::vector<std::string> names)
    : n_(n), table_(std::move(table)), names_(std::move(names)) {
  if (n == 0) throw std::invalid_argument("partial magma needs at least one element");
  if (table_.size() != n * n) throw std::invalid_argument("operation table must be n x n");
  for (auto v : table_) {
    if (v < kUndefined || v >= static_cast<std::int32_t>(n)) {
      throw std::invalid_argument("product " + std::to_string(v) + " outside the carrier");
    }
  }
  if (!names_.empty() && names_.size() != n) throw std::invalid_argument("need one name per element");
}

PartialMagma PartialMagma::empty_op(std::size_t n) { return PartialMagma(n, std::vector<std::int32_t>(n * n, kUndefined)); }

std::string PartialMagma::name(Element x) const {
  if (x < names_.size()) return names_[x];
  return std::to_string(x);
}

std::optional<Element> PartialMagma::find(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Element>(it - names_.begin());
}

PartialMagma build_pm(std::size_t n, const std::vector<std::vector<std::optional<Element>>>& rows,
                      std::vector<std::string> names) {
  if (rows.size() != n) throw std::invalid_argument("table needs exactly n rows");
  std::vector<std::int32_t> table;
  table.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw std::invalid_argument("table row of wrong length");
    for (const auto& v : row) {
      if (v && *v >= n) throw std::invalid_argument("product " + std::to_string(*v) + " outside the carrier");
      table.push_back(v ? static_cast<std::int32_t>(*v) : PartialMagma::kUndefined);
    }
  }
  return PartialMagma(n, std::move(table), std::move(names));
}

bool is_unit(const PartialMagma& pm, Element x) {
  if (!pm.defined(x, x)) return false;
  for (Element y = 0; y < pm.size(); ++y) {
    if (pm.defined(x, y) && *pm.mul(x, y) != y) return false;
    if (pm.defined(y, x) && *pm.mul(y, x) != y) return false;
  }
  return true;
}

std::optional<PMWitness> associativity_failure(const PartialMagma& pm) {
  const auto n = static_cast<Element>(pm.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const auto xy = pm.raw(x, y);
      for (Element z = 0; z < n; ++z) {
        const auto yz = pm.raw(y, z);
        const auto left = xy >= 0 ? pm.raw(static_cast<Element>(xy), z) : PartialMagma::kUndefined;
        const auto right = yz >= 0 ? pm.raw(x, static_cast<Element>(yz)) : PartialMagma::kUndefined;
        const bool both = xy >= 0 && yz >= 0;
        if ((left >= 0) != both || (right >= 0) != both) return PMWitness{"A.1", {x, y, z}};
        if (both && left != right) return PMWitness{"A.2", {x, y, z}};
      }
    }
  }
  return std::nullopt;
}

PMClassification classify(const PartialMagma& pm) {
  PMClassification c;
  const auto n = static_cast<Element>(pm.size());
  for (Element x = 0; x < n; ++x) {
    if (is_unit(pm, x)) c.units.push_back(x);
  }
  c.unital = !c.units.empty();
  c.associativity_failure = associativity_failure(pm);
  c.associative = !c.associativity_failure;

  for (Element x = 0; x < n; ++x) {
    if (std::any_of(c.units.begin(), c.units.end(), [&](Element u) { return pm.defined(u, x); })) c.left_fastened.push_back(x);
    if (std::any_of(c.units.begin(), c.units.end(), [&](Element u) { return pm.defined(x, u); })) c.right_fastened.push_back(x);
  }
  // First element lacking a pin, left before right.
  for (Element x = 0; x < n && !c.fastening_failure; ++x) {
    if (!std::binary_search(c.left_fastened.begin(), c.left_fastened.end(), x)) {
      c.fastening_failure = PMWitness{"Phi.1", {x}};
    } else if (!std::binary_search(c.right_fastened.begin(), c.right_fastened.end(), x)) {
      c.fastening_failure = PMWitness{"Phi.2", {x}};
    }
  }
  c.fastened = c.unital && !c.fastening_failure;
  c.total = std::all_of(pm.table().begin(), pm.table().end(), [](std::int32_t v) { return v >= 0; });
  c.regular = c.unital && c.associative && c.fastened;
  c.monoid = c.regular && c.units.size() == 1;
  return c;
}

bool is_regular(const PartialMagma& pm) { return classify(pm).regular; }

PartialMagma relabel(const PartialMagma& pm, const std::vector<Element>& perm) {
  const std::size_t n = pm.size();
  if (perm.size() != n) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::int32_t> table(n * n, PartialMagma::kUndefined);
  std::vector<std::string> names(pm.names().empty() ? 0 : n);
  for (Element x = 0; x < n; ++x) {
    if (!names.empty()) names[perm[x]] = pm.names()[x];
    for (Element y = 0; y < n; ++y) {
      if (auto v = pm.mul(x, y)) table[perm[x] * n + perm[y]] = static_cast<std::int32_t>(perm[*v]);
    }
  }
  return PartialMagma(n, std::move(table), std::move(names));
}

std::optional<Twin> hmul(Twin x, Twin y) {
  if (y.second != x.first) return std::nullopt;
  return Twin{y.first, x.second};
}

std::optional<Twin> vmul(const PartialMagma& pm, Twin x, Twin y) {
  const auto a = pm.mul(x.first, y.first);
  const auto b = pm.mul(x.second, y.second);
  if (!a || !b) return std::nullopt;
  return Twin{*a, *b};
}

PartialMagma twin_pm(std::size_t n) {
  const std::size_t m = n * n;
  std::vector<std::int32_t> table(m * m, PartialMagma::kUndefined);
  for (Element i = 0; i < m; ++i) {
    for (Element j = 0; j < m; ++j) {
      if (auto p = hmul(pair_at(n, i), pair_at(n, j))) table[i * m + j] = static_cast<std::int32_t>(pair_index(n, *p));
    }
  }
  return PartialMagma(m, std::move(table));
}

PartialMagma square_pm(const PartialMagma& pm) {
  const std::size_t n = pm.size();
  const std::size_t m = n * n;
  std::vector<std::int32_t> table(m * m, PartialMagma::kUndefined);
  std::vector<std::string> names;
  if (!pm.names().empty()) {
    for (Element i = 0; i < m; ++i) {
      const Twin t = pair_at(n, i);
      names.push_back("(" + pm.name(t.first) + "," + pm.name(t.second) + ")");
    }
  }
  for (Element i = 0; i < m; ++i) {
    for (Element j = 0; j < m; ++j) {
      if (auto p = vmul(pm, pair_at(n, i), pair_at(n, j))) table[i * m + j] = static_cast<std::int32_t>(pair_index(n, *p));
    }
  }
  return PartialMagma(m, std::move(table), std::move(names));
}

InterchangeVerdict interchange_check(const PartialMagma& horizontal, const PartialMagma& vertical) {
  if (horizontal.size() != vertical.size()) throw std::invalid_argument("interchange needs a common carrier");
  const auto m = static_cast<Element>(horizontal.size());
  const auto& h = horizontal.table();
  const auto& v = vertical.table();
  InterchangeVerdict out;
  for (Element xp = 0; xp < m; ++xp) {
    for (Element zp = 0; zp < m; ++zp) {
      const auto top = v[xp * m + zp];
      for (Element x = 0; x < m; ++x) {
        const auto hx = h[xp * m + x];
        for (Element z = 0; z < m; ++z) {
          const auto bottom = v[x * m + z];
          const auto hz = h[zp * m + z];
          if (top < 0 || bottom < 0 || hx < 0 || hz < 0) continue;
          const auto lhs = h[top * m + bottom];
          const auto rhs = v[hx * m + hz];
          if (lhs < 0 || rhs < 0) continue;
          ++out.both_defined;
          if (lhs != rhs && out.holds) {
            out.holds = false;
            out.witness = std::array<Element, 4>{xp, zp, x, z};
          }
        }
      }
    }
  }
  return out;
}

InterchangeVerdict interchange_check(const PartialMagma& pm) {
  return interchange_check(twin_pm(pm.size()), square_pm(pm));
}

Pins pins(const PartialMagma& pm) {
  const auto c = classify(pm);
  if (!c.regular) throw std::invalid_argument("dom/cod need a regular partial magma");
  Pins p;
  for (Element x = 0; x < pm.size(); ++x) {
    // Regularity makes the pins unique, so the first match is the pin.
    p.dom.push_back(*std::find_if(c.units.begin(), c.units.end(), [&](Element u) { return pm.defined(x, u); }));
    p.cod.push_back(*std::find_if(c.units.begin(), c.units.end(), [&](Element u) { return pm.defined(u, x); }));
  }
  return p;
}

std::pair<Element, Element> dom_cod(const PartialMagma& pm, Element x) {
  if (x >= pm.size()) throw std::out_of_range("element outside the carrier");
  const auto p = pins(pm);
  return {p.dom[x], p.cod[x]};
}

bool chain_rule(const PartialMagma& pm, Element x, Element z) {
  const auto p = pins(pm);
  return p.dom.at(x) == p.cod.at(z);
}

bool verify_chain_rule(const PartialMagma& pm) {
  const auto p = pins(pm);
  for (Element x = 0; x < pm.size(); ++x) {
    for (Element z = 0; z < pm.size(); ++z) {
      if (pm.defined(x, z) != (p.dom[x] == p.cod[z])) return false;
    }
  }
  return true;
}

HomVerdict is_pm_hom(const std::vector<Element>& f, const PartialMagma& a, const PartialMagma& b, bool unital) {
  if (f.size() != a.size()) return {false, PMWitness{"map", {}}};
  for (Element x = 0; x < a.size(); ++x) {
    if (f[x] >= b.size()) return {false, PMWitness{"map", {x}}};
  }
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      const auto xy = a.mul(x, y);
      if (!xy) continue;
      const auto image = b.mul(f[x], f[y]);
      if (!image || *image != f[*xy]) return {false, PMWitness{"H", {x, y}}};
    }
  }
  if (unital) {
    for (Element x = 0; x < a.size(); ++x) {
      if (is_unit(a, x) && !is_unit(b, f[x])) return {false, PMWitness{"U", {x}}};
    }
  }
  return {};
}

std::vector<Element> square_of_function(const std::vector<Element>& f, std::size_t target_size) {
  const std::size_t n = f.size();
  std::vector<Element> out(n * n);
  for (Element i = 0; i < n * n; ++i) {
    const Twin t = pair_at(n, i);
    out[i] = pair_index(target_size, Twin{f.at(t.first), f.at(t.second)});
  }
  return out;
}

bool single_unit_totality(const PartialMagma& pm) {
  const auto c = classify(pm);
  if (!c.regular) throw std::invalid_argument("single-unit check needs a regular partial magma");
  return (c.units.size() == 1) == c.total;
}

void for_each_pm(std::size_t n, const std::function<void(const PartialMagma&)>& visit) {
  const std::size_t cells = n * n;
  std::vector<std::int32_t> table(cells, PartialMagma::kUndefined);
  while (true) {
    visit(PartialMagma(n, table));
    // Odometer over {-1, 0, .., n-1}, last cell fastest.
    std::size_t k = cells;
    while (k > 0) {
      auto& cell = table[k - 1];
      if (++cell < static_cast<std::int32_t>(n)) break;
      cell = PartialMagma::kUndefined;
      --k;
    }
    if (k == 0) return;
  }
}

}  // namespace difflab
