#include "difflab/yoneda_finite.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace difflab {

std::uint64_t function_count(std::size_t domain, std::size_t codomain) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < domain; ++i) n *= codomain;
  return n;
}

std::vector<std::size_t> decode_function(FunctionCode code, std::size_t domain, std::size_t codomain) {
  std::vector<std::size_t> out(domain);
  for (std::size_t i = 0; i < domain; ++i) {
    out[i] = static_cast<std::size_t>(code % codomain);
    code /= codomain;
  }
  return out;
}

FunctionCode encode_function(const std::vector<std::size_t>& values, std::size_t codomain) {
  FunctionCode code = 0;
  for (std::size_t i = values.size(); i-- > 0;) code = code * codomain + values[i];
  return code;
}

ProbeFamily ProbeFamily::up_to(std::size_t max_size) {
  ProbeFamily p;
  for (std::size_t s = 1; s <= max_size; ++s) p.sizes.push_back(s);
  return p;
}

std::optional<std::size_t> ProbeFamily::index_of_size(std::size_t size) const {
  const auto it = std::find(sizes.begin(), sizes.end(), size);
  if (it == sizes.end()) return std::nullopt;
  return static_cast<std::size_t>(it - sizes.begin());
}

FiniteTopSpace beta_space(std::size_t ground) {
  if (ground == 0) throw std::invalid_argument("beta of the empty set is not modelled");
  return FiniteTopSpace::discrete(ground);
}

std::vector<std::size_t> beta_map(const std::vector<std::size_t>& f, std::size_t target_size) {
  std::vector<std::size_t> out(f.size());
  for (std::size_t q = 0; q < f.size(); ++q) {
    out[q] = direct_image(f, target_size, principal_ultrafilter(f.size(), q)).first_point();
  }
  return out;
}

namespace {

// phi . g as a code, with g : A -> D given by its code and phi : D -> E by values.
FunctionCode post_compose(const std::vector<std::size_t>& phi, FunctionCode g, std::size_t domain, std::size_t d,
                          std::size_t e) {
  auto values = decode_function(g, domain, d);
  for (auto& v : values) v = phi[v];
  return encode_function(values, e);
}

void require_probes(const ProbeFamily& probes) {
  if (probes.sizes.empty()) throw std::invalid_argument("probe family is empty");
  for (auto s : probes.sizes) {
    if (s == 0) throw std::invalid_argument("probe spaces must be nonempty");
  }
}

// One naturality constraint: phi applied to the value of `from` must equal
// the value of `to`.
struct Constraint {
  std::size_t from;
  std::size_t to;
  std::size_t from_probe;
  std::size_t to_probe;
  std::vector<std::size_t> phi;
};

struct Problem {
  std::vector<std::pair<std::size_t, FunctionCode>> vars;  // (probe, L)
  std::vector<std::vector<std::size_t>> var_id;            // [probe][L]
  std::vector<Constraint> constraints;
};

Problem build_problem(std::size_t z, const ProbeFamily& probes) {
  Problem p;
  const auto& sizes = probes.sizes;
  p.var_id.resize(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const auto n = function_count(z, sizes[i]);
    for (FunctionCode l = 0; l < n; ++l) {
      p.var_id[i].push_back(p.vars.size());
      p.vars.emplace_back(i, l);
    }
  }
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    for (std::size_t j = 0; j < sizes.size(); ++j) {
      const auto maps = function_count(sizes[i], sizes[j]);
      for (FunctionCode phi_code = 0; phi_code < maps; ++phi_code) {
        const auto phi = decode_function(phi_code, sizes[i], sizes[j]);
        for (FunctionCode l = 0; l < p.var_id[i].size(); ++l) {
          const auto target = post_compose(phi, l, z, sizes[i], sizes[j]);
          p.constraints.push_back({p.var_id[i][l], p.var_id[j][target], i, j, phi});
        }
      }
    }
  }
  return p;
}

bool holds(const Constraint& c, const std::vector<FunctionCode>& value, std::size_t x, const ProbeFamily& probes) {
  return post_compose(c.phi, value[c.from], x, probes.sizes[c.from_probe], probes.sizes[c.to_probe]) == value[c.to];
}

TauCandidate to_candidate(const Problem& p, const std::vector<FunctionCode>& value, std::size_t z, std::size_t x,
                          const ProbeFamily& probes) {
  TauCandidate t{z, x, {}};
  t.tables.resize(probes.sizes.size());
  for (std::size_t i = 0; i < probes.sizes.size(); ++i) {
    for (auto id : p.var_id[i]) t.tables[i].push_back(value[id]);
  }
  return t;
}

}  // namespace

TauCandidate tau_from_kernel(const FilterKernel& kernel, const ProbeFamily& probes) {
  require_probes(probes);
  if (kernel.at.empty()) throw std::invalid_argument("kernel over an empty point set");
  const std::size_t z = kernel.at.front().ground_size();
  for (std::size_t x = 0; x < kernel.at.size(); ++x) {
    if (kernel.at[x].ground_size() != z) throw std::invalid_argument("kernel filters on different grounds");
    if (!kernel.at[x].is_ultrafilter()) throw std::invalid_argument("kernel entry " + std::to_string(x) + " is not an ultrafilter");
  }
  TauCandidate t{z, kernel.at.size(), {}};
  for (auto d : probes.sizes) {
    const auto space = FiniteTopSpace::discrete(d);
    std::vector<FunctionCode> table;
    const auto n = function_count(z, d);
    table.reserve(n);
    for (FunctionCode l = 0; l < n; ++l) {
      const auto lam = decode_function(l, z, d);
      std::vector<std::size_t> out(kernel.at.size());
      for (std::size_t x = 0; x < out.size(); ++x) out[x] = *limit_along(kernel.at[x], lam, space);
      table.push_back(encode_function(out, d));
    }
    t.tables.push_back(std::move(table));
  }
  return t;
}

FilterKernel kernel_from_tau(const TauCandidate& tau, const ProbeFamily& probes) {
  const auto i = probes.index_of_size(tau.z_size);
  if (!i || *i >= tau.tables.size()) throw std::invalid_argument("candidate has no component at beta Z");
  std::vector<std::size_t> delta(tau.z_size);
  for (std::size_t q = 0; q < delta.size(); ++q) delta[q] = q;
  const auto image = decode_function(tau.tables[*i].at(encode_function(delta, tau.z_size)), tau.x_size, tau.z_size);
  FilterKernel k;
  for (auto p : image) k.at.push_back(principal_ultrafilter(tau.z_size, p));
  return k;
}

std::optional<NaturalityFailure> naturality_failure(const TauCandidate& tau, const ProbeFamily& probes) {
  const auto& sizes = probes.sizes;
  if (tau.tables.size() != sizes.size()) throw std::invalid_argument("candidate and probes disagree");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    for (std::size_t j = 0; j < sizes.size(); ++j) {
      const auto maps = function_count(sizes[i], sizes[j]);
      for (FunctionCode phi_code = 0; phi_code < maps; ++phi_code) {
        const auto phi = decode_function(phi_code, sizes[i], sizes[j]);
        for (FunctionCode l = 0; l < tau.tables[i].size(); ++l) {
          const auto lhs = post_compose(phi, tau.tables[i][l], tau.x_size, sizes[i], sizes[j]);
          const auto rhs = tau.tables[j][post_compose(phi, l, tau.z_size, sizes[i], sizes[j])];
          if (lhs != rhs) return NaturalityFailure{i, j, phi_code, l};
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<TauCandidate> enumerate_natural_candidates(std::size_t z, std::size_t x, const ProbeFamily& probes) {
  require_probes(probes);
  if (z == 0 || x == 0) throw std::invalid_argument("Z and X must be nonempty");
  const Problem p = build_problem(z, probes);
  const std::size_t nv = p.vars.size();

  // Larger probes first: their constraints pin the smaller ones quickly.
  std::vector<std::size_t> order(nv);
  for (std::size_t k = 0; k < nv; ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return probes.sizes[p.vars[a].first] > probes.sizes[p.vars[b].first];
  });
  std::vector<std::size_t> position(nv);
  for (std::size_t k = 0; k < nv; ++k) position[order[k]] = k;

  std::vector<std::vector<const Constraint*>> due(nv);
  for (const auto& c : p.constraints) due[std::max(position[c.from], position[c.to])].push_back(&c);

  std::vector<FunctionCode> value(nv, 0);
  std::vector<FunctionCode> domain_size(nv);
  for (std::size_t v = 0; v < nv; ++v) domain_size[v] = function_count(x, probes.sizes[p.vars[v].first]);

  std::vector<TauCandidate> out;
  std::size_t depth = 0;
  std::vector<FunctionCode> next(nv + 1, 0);
  while (true) {
    if (depth == nv) {
      out.push_back(to_candidate(p, value, z, x, probes));
      if (depth == 0) break;
      --depth;
      continue;
    }
    const std::size_t v = order[depth];
    bool placed = false;
    while (next[depth] < domain_size[v]) {
      value[v] = next[depth]++;
      const bool ok = std::all_of(due[depth].begin(), due[depth].end(),
                                  [&](const Constraint* c) { return holds(*c, value, x, probes); });
      if (ok) {
        placed = true;
        break;
      }
    }
    if (placed) {
      ++depth;
      next[depth] = 0;
    } else {
      if (depth == 0) break;
      --depth;
    }
  }
  std::sort(out.begin(), out.end(), [](const TauCandidate& a, const TauCandidate& b) { return a.tables < b.tables; });
  return out;
}

std::vector<TauCandidate> enumerate_natural_candidates_raw(std::size_t z, std::size_t x, const ProbeFamily& probes) {
  require_probes(probes);
  const Problem p = build_problem(z, probes);
  const std::size_t nv = p.vars.size();
  std::vector<FunctionCode> domain_size(nv);
  double total = 1;
  for (std::size_t v = 0; v < nv; ++v) {
    domain_size[v] = function_count(x, probes.sizes[p.vars[v].first]);
    total *= static_cast<double>(domain_size[v]);
  }
  if (total > 5e7) throw std::invalid_argument("raw candidate space too large");
  std::vector<FunctionCode> value(nv, 0);
  std::vector<TauCandidate> out;
  while (true) {
    if (std::all_of(p.constraints.begin(), p.constraints.end(), [&](const Constraint& c) { return holds(c, value, x, probes); })) {
      out.push_back(to_candidate(p, value, z, x, probes));
    }
    std::size_t k = nv;
    while (k > 0 && ++value[k - 1] == domain_size[k - 1]) value[--k] = 0;
    if (k == 0) break;
  }
  std::sort(out.begin(), out.end(), [](const TauCandidate& a, const TauCandidate& b) { return a.tables < b.tables; });
  return out;
}

std::vector<FilterKernel> ultrafilter_kernels(std::size_t z, std::size_t x) {
  std::vector<FilterKernel> out;
  const auto n = function_count(x, z);
  for (FunctionCode code = 0; code < n; ++code) {
    FilterKernel k;
    for (auto q : decode_function(code, x, z)) k.at.push_back(principal_ultrafilter(z, q));
    out.push_back(std::move(k));
  }
  return out;
}

YonedaReport yoneda_roundtrip(std::size_t z, std::size_t x, const ProbeFamily& probes) {
  YonedaReport r;
  r.z_size = z;
  r.x_size = x;
  r.expected = static_cast<std::size_t>(function_count(x, z));
  const auto candidates = enumerate_natural_candidates(z, x, probes);
  r.natural_candidates = candidates.size();

  std::set<std::vector<std::size_t>> images;
  r.tau_kernel_tau_identity = true;
  for (const auto& c : candidates) {
    const auto k = kernel_from_tau(c, probes);
    std::vector<std::size_t> points;
    for (const auto& f : k.at) points.push_back(f.first_point());
    images.insert(points);
    if (tau_from_kernel(k, probes) != c) r.tau_kernel_tau_identity = false;
  }
  r.kernels_bijective = images.size() == candidates.size() && images.size() == r.expected;

  r.kernel_tau_kernel_identity = true;
  r.kernels_induce_natural = true;
  for (const auto& k : ultrafilter_kernels(z, x)) {
    const auto t = tau_from_kernel(k, probes);
    if (naturality_failure(t, probes)) r.kernels_induce_natural = false;
    if (kernel_from_tau(t, probes).at != k.at) r.kernel_tau_kernel_identity = false;
  }
  return r;
}

namespace {

// g : X -> D  |->  h : beta X -> D with h(delta p) = lim of beta(g)(delta p).
std::vector<std::size_t> lift_to_beta(const std::vector<std::size_t>& g, const FiniteTopSpace& d) {
  std::vector<std::size_t> h(g.size());
  for (std::size_t p = 0; p < g.size(); ++p) {
    h[p] = lim_beta(d, direct_image(g, d.size(), principal_ultrafilter(g.size(), p)));
  }
  return h;
}

// h : beta X -> D  |->  h . delta.
std::vector<std::size_t> restrict_to_points(const std::vector<std::size_t>& h) {
  std::vector<std::size_t> g(h.size());
  for (std::size_t q = 0; q < h.size(); ++q) g[q] = h[principal_ultrafilter(h.size(), q).first_point()];
  return g;
}

}  // namespace

AdjunctionReport adjunction_bijection(std::size_t x, const FiniteTopSpace& d, const ProbeFamily& probes) {
  if (!d.is_discrete()) throw std::invalid_argument("adjunction target must be discrete");
  if (x == 0) throw std::invalid_argument("X must be nonempty");
  const FiniteTopSpace bx = beta_space(x);
  AdjunctionReport r;
  const auto n = function_count(x, d.size());
  r.set_side = static_cast<std::size_t>(n);
  // Every map out of the discrete space beta X is continuous.
  r.top_side = static_cast<std::size_t>(function_count(bx.size(), d.size()));
  r.round_trip_set = true;
  r.round_trip_top = true;
  for (FunctionCode code = 0; code < n; ++code) {
    const auto f = decode_function(code, x, d.size());
    if (restrict_to_points(lift_to_beta(f, d)) != f) r.round_trip_set = false;
    if (lift_to_beta(restrict_to_points(f), d) != f) r.round_trip_top = false;
  }
  r.natural_in_target = true;
  for (auto e : probes.sizes) {
    const auto espace = FiniteTopSpace::discrete(e);
    const auto maps = function_count(d.size(), e);
    for (FunctionCode phi_code = 0; phi_code < maps; ++phi_code) {
      const auto phi = decode_function(phi_code, d.size(), e);
      for (FunctionCode code = 0; code < n; ++code) {
        const auto g = decode_function(code, x, d.size());
        std::vector<std::size_t> phig(x), phih(x);
        const auto h = lift_to_beta(g, d);
        for (std::size_t p = 0; p < x; ++p) {
          phig[p] = phi[g[p]];
          phih[p] = phi[h[p]];
        }
        if (lift_to_beta(phig, espace) != phih) r.natural_in_target = false;
      }
    }
  }
  return r;
}

}  // namespace difflab
