#pragma once

// Natural transformations Hom(Z, -) => Hom(X, -) over a family of finite
// discrete probe spaces, and their correspondence with ultrafilter kernels.
//
// A function A -> D between finite sets is encoded as a base-|D| integer
// whose i-th digit (least significant first) is the image of i.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "difflab/filter_calculus.hpp"
#include "difflab/lebesgue_diff.hpp"

namespace difflab {

using FunctionCode = std::uint64_t;

std::uint64_t function_count(std::size_t domain, std::size_t codomain);
std::vector<std::size_t> decode_function(FunctionCode code, std::size_t domain, std::size_t codomain);
FunctionCode encode_function(const std::vector<std::size_t>& values, std::size_t codomain);

/// Discrete probe spaces of the given sizes; every function between two
/// probes counts as a probe morphism.
struct ProbeFamily {
  std::vector<std::size_t> sizes;

  /// Sizes 1..max_size.
  static ProbeFamily up_to(std::size_t max_size);
  std::optional<std::size_t> index_of_size(std::size_t size) const;
};

/// tables[i][L] = code of tau(D_i)(L) : X -> D_i for L : Z -> D_i.
struct TauCandidate {
  std::size_t z_size = 0;
  std::size_t x_size = 0;
  std::vector<std::vector<FunctionCode>> tables;
  friend bool operator==(const TauCandidate&, const TauCandidate&) = default;
};

/// Discrete space on the ultrafilters of an n-element set, point q <-> delta(q).
FiniteTopSpace beta_space(std::size_t ground);
/// beta of a function: image of delta(q) is delta(f(q)), as a point map.
std::vector<std::size_t> beta_map(const std::vector<std::size_t>& f, std::size_t target_size);

/// tau(D)(L)(x) = limit of L along the ultrafilter at x.  Throws
/// std::invalid_argument if some entry is not an ultrafilter.
TauCandidate tau_from_kernel(const FilterKernel& kernel, const ProbeFamily& probes);

/// Phi(x) = delta(tau(beta Z)(delta)(x)).  Throws std::invalid_argument when
/// the probes lack a space of size |Z|.
FilterKernel kernel_from_tau(const TauCandidate& tau, const ProbeFamily& probes);

struct NaturalityFailure {
  std::size_t from_probe;
  std::size_t to_probe;
  FunctionCode phi;
  FunctionCode probe_fn;
};

/// phi . tau(D)(L) == tau(E)(phi . L) for all probes D, E, all phi: D -> E
/// and all L: Z -> D.
std::optional<NaturalityFailure> naturality_failure(const TauCandidate& tau, const ProbeFamily& probes);

/// Every probe-natural candidate, by backtracking over table entries with
/// naturality constraints checked as soon as both ends are assigned.
std::vector<TauCandidate> enumerate_natural_candidates(std::size_t z_size, std::size_t x_size,
                                                       const ProbeFamily& probes);

/// Same set by filtering every raw table; only feasible for tiny inputs.
std::vector<TauCandidate> enumerate_natural_candidates_raw(std::size_t z_size, std::size_t x_size,
                                                           const ProbeFamily& probes);

/// All |Z|^|X| kernels of principal ultrafilters on a |Z|-element ground.
std::vector<FilterKernel> ultrafilter_kernels(std::size_t z_size, std::size_t x_size);

struct YonedaReport {
  std::size_t z_size = 0;
  std::size_t x_size = 0;
  std::size_t natural_candidates = 0;
  std::size_t expected = 0;
  bool kernels_bijective = false;
  bool tau_kernel_tau_identity = false;
  bool kernel_tau_kernel_identity = false;
  bool kernels_induce_natural = false;

  bool ok() const {
    return natural_candidates == expected && kernels_bijective && tau_kernel_tau_identity &&
           kernel_tau_kernel_identity && kernels_induce_natural;
  }
};

YonedaReport yoneda_roundtrip(std::size_t z_size, std::size_t x_size, const ProbeFamily& probes);

struct AdjunctionReport {
  std::size_t set_side = 0;  // functions X -> D
  std::size_t top_side = 0;  // continuous maps beta X -> D
  bool round_trip_set = false;
  bool round_trip_top = false;
  bool natural_in_target = false;

  bool ok() const { return set_side == top_side && round_trip_set && round_trip_top && natural_in_target; }
};

/// g -> lim . beta(g) and h -> h . delta between functions X -> D and maps
/// beta X -> D; naturality checked against every map D -> E for E in probes.
/// Throws std::invalid_argument for a non-discrete D.
AdjunctionReport adjunction_bijection(std::size_t x_size, const FiniteTopSpace& d, const ProbeFamily& probes);

}  // namespace difflab
