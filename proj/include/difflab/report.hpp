#pragma once

// Input documents, verification runners and deterministic reports for the
// command-line front end.

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "difflab/measure_algebra.hpp"
#include "difflab/measure_space.hpp"
#include "difflab/partial_magma.hpp"

namespace difflab {

using Json = nlohmann::ordered_json;

enum class ExitCode : int { Ok = 0, CheckFailed = 1, InputError = 2 };

/// Malformed or out-of-range input; maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  std::string format = "text";
  std::uint64_t seed = 0;
  std::size_t max_atoms = 12;
  std::size_t max_elems = 8;
  unsigned parallel = 1;
};

inline constexpr std::size_t kDefaultMaxAtoms = 12;
inline constexpr std::size_t kDefaultMaxElems = 8;

struct SpaceDocument {
  std::vector<Rational> weights;
  std::optional<std::vector<std::uint32_t>> transform;
};

struct MagmaDocument {
  PartialMagma pm;
  bool check_regular = false;
  std::optional<PartialMagma> target;
};

struct ScenarioDocument {
  std::string name;
  Json params;
};

enum class DocumentKind { MeasureSpace, PartialMagma, Category, Scenario };

struct InputDocument {
  DocumentKind kind;
  std::optional<SpaceDocument> space;
  std::optional<MagmaDocument> magma;
  std::optional<ScenarioDocument> scenario;
};

/// Throws InputError on malformed JSON or schema violations.
InputDocument parse_document(const std::string& text);
/// Weight literal: "p", "p/q", a decimal string, or a JSON integer.
Rational parse_weight(const Json& value);

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct Report {
  std::string command;
  Json data = Json::object();
  std::vector<Check> checks;

  bool passed() const;
  void add(std::string name, bool passed, std::string detail = {});
  void merge(const Report& section, const std::string& prefix);
};

std::string render(const Report& report, const std::string& format);
ExitCode exit_code(const Report& report);

Report run_space_check(const SpaceDocument& doc, const RunOptions& opts);
Report run_space_liftings(const SpaceDocument& doc, const RunOptions& opts);
Report run_space_theorem1(const SpaceDocument& doc, const RunOptions& opts);
Report run_pm_classify(const MagmaDocument& doc, const RunOptions& opts);
Report run_pm_interchange(const MagmaDocument& doc, const RunOptions& opts);
Report run_cat_twin(const MagmaDocument& doc, const RunOptions& opts);
Report run_cat_natequiv(const MagmaDocument& doc, const RunOptions& opts);
/// Parameters z, x, probe_max; without them sweeps |Z| in 1..3, |X| in 1..2.
Report run_yoneda_roundtrip(const std::optional<ScenarioDocument>& doc, const RunOptions& opts);
/// Every pipeline on the built-in fixtures plus seeded random checks.
Report run_full_report(const RunOptions& opts);

/// Weight vectors with n atoms (1..max_atoms) and nulls placed in every
/// pattern of at most max_nulls atoms; each pattern with unit weights and
/// with seeded random positive weights.
std::vector<MeasureSpace> sweep_spaces(std::size_t max_atoms, std::size_t max_nulls, std::uint64_t seed);

/// Total function with values num/den, num in [-50, 50], den in [1, 20].
PartialFunction random_rational_function(std::size_t atoms, std::mt19937_64& rng);

}  // namespace difflab
