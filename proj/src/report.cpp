#include "difflab/report.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <set>
#include <sstream>

#include "difflab/category_kernel.hpp"
#include "difflab/lebesgue_diff.hpp"
#include "difflab/yoneda_finite.hpp"

namespace difflab {

// ---------------------------------------------------------------- input

Rational parse_weight(const Json& value) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  if (value.is_number_integer()) return Rational(value.get<long long>());
  throw InputError("weights must be strings or integers, got " + value.dump());
}

namespace {

bool is_index(const Json& v) { return v.is_number_integer() && v.get<long long>() >= 0; }

PartialMagma parse_magma(const Json& j) {
  if (!j.contains("n") || !is_index(j["n"])) throw InputError("partial magma needs a positive integer 'n'");
  const auto n = j["n"].get<std::size_t>();
  if (n == 0) throw InputError("'n' must be positive");
  if (!j.contains("table") || !j["table"].is_array()) throw InputError("partial magma needs a 'table' array");
  const auto& rows = j["table"];
  if (rows.size() != n) throw InputError("table must have n rows");
  std::vector<std::vector<std::optional<Element>>> table;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) throw InputError("every table row must have n entries");
    auto& out = table.emplace_back();
    for (const auto& cell : row) {
      if (cell.is_null()) {
        out.emplace_back();
      } else if (is_index(cell) && cell.get<std::size_t>() < n) {
        out.emplace_back(cell.get<Element>());
      } else {
        throw InputError("table entry " + cell.dump() + " is neither null nor an element");
      }
    }
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    if (!j["names"].is_array() || j["names"].size() != n) throw InputError("'names' must list n strings");
    for (const auto& s : j["names"]) {
      if (!s.is_string()) throw InputError("'names' must list n strings");
      names.push_back(s.get<std::string>());
    }
  }
  return build_pm(n, table, std::move(names));
}

}  // namespace

InputDocument parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) throw InputError("document needs a string 'kind'");
  const auto kind = j["kind"].get<std::string>();
  InputDocument doc{};
  if (kind == "measure_space") {
    doc.kind = DocumentKind::MeasureSpace;
    if (!j.contains("weights") || !j["weights"].is_array() || j["weights"].empty()) {
      throw InputError("measure_space needs a nonempty 'weights' array");
    }
    SpaceDocument s;
    for (const auto& w : j["weights"]) s.weights.push_back(parse_weight(w));
    if (s.weights.size() > kMaxAtoms) throw InputError("at most " + std::to_string(kMaxAtoms) + " atoms are supported");
    if (j.contains("transform")) {
      if (!j["transform"].is_array()) throw InputError("'transform' must be an array of bitmasks");
      std::vector<std::uint32_t> t;
      for (const auto& e : j["transform"]) {
        if (!is_index(e) || e.get<long long>() > 0xFFFFFFFFLL) throw InputError("transform entries must be bitmasks");
        t.push_back(e.get<std::uint32_t>());
      }
      s.transform = std::move(t);
    }
    doc.space = std::move(s);
  } else if (kind == "partial_magma" || kind == "category") {
    doc.kind = kind == "category" ? DocumentKind::Category : DocumentKind::PartialMagma;
    try {
      MagmaDocument m{parse_magma(j), j.value("check_regular", false), std::nullopt};
      if (j.contains("target")) m.target = parse_magma(j["target"]);
      doc.magma = std::move(m);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    } catch (const Json::type_error& e) {
      throw InputError(e.what());
    }
  } else if (kind == "scenario") {
    doc.kind = DocumentKind::Scenario;
    if (!j.contains("name") || !j["name"].is_string()) throw InputError("scenario needs a string 'name'");
    doc.scenario = ScenarioDocument{j["name"].get<std::string>(), j.value("params", Json::object())};
  } else {
    throw InputError("unknown document kind '" + kind + "'");
  }
  return doc;
}

// ---------------------------------------------------------------- reports

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void Report::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

void Report::merge(const Report& section, const std::string& prefix) {
  data[prefix] = section.data;
  for (const auto& c : section.checks) checks.push_back({prefix + ": " + c.name, c.passed, c.detail});
}

std::string render(const Report& report, const std::string& format) {
  if (format == "json") {
    Json out;
    out["command"] = report.command;
    out["data"] = report.data;
    out["checks"] = Json::array();
    for (const auto& c : report.checks) out["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out["passed"] = report.passed();
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "command: " << report.command << "\n";
  for (const auto& [key, value] : report.data.items()) {
    os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  std::size_t ok = 0;
  for (const auto& c : report.checks) {
    ok += c.passed;
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  os << "result: " << (report.passed() ? "PASS" : "FAIL") << " (" << ok << "/" << report.checks.size() << " checks)\n";
  return os.str();
}

ExitCode exit_code(const Report& report) { return report.passed() ? ExitCode::Ok : ExitCode::CheckFailed; }

// ---------------------------------------------------------------- helpers

namespace {

MeasureSpace make_space(const SpaceDocument& doc, const RunOptions& opts) {
  if (doc.weights.size() > opts.max_atoms) {
    throw InputError(std::to_string(doc.weights.size()) + " atoms exceed the cap of " + std::to_string(opts.max_atoms) +
                     " (raise with --max-atoms)");
  }
  try {
    return MeasureSpace(doc.weights);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

void require_elems(const PartialMagma& pm, const RunOptions& opts) {
  if (pm.size() > opts.max_elems) {
    throw InputError(std::to_string(pm.size()) + " elements exceed the cap of " + std::to_string(opts.max_elems) +
                     " (raise with --max-elems)");
  }
}

Json weights_json(const MeasureSpace& space) {
  Json w = Json::array();
  for (const auto& x : space.weights()) w.push_back(to_string(x));
  return w;
}

std::string sets_text(const std::vector<MSet>& sets, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) out += (i ? " " : "") + format_set(sets[i], n);
  return out;
}

std::string verdict_text(const TransformVerdict& v, std::size_t n) {
  if (v.holds) return "holds";
  return "fails " + v.failed + (v.witness.empty() ? "" : " at " + sets_text(v.witness, n));
}

Json vector_json(const std::vector<std::size_t>& v) { return Json(v); }

std::string elements_text(const PartialMagma& pm, const std::vector<Element>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + pm.name(xs[i]);
  return out;
}

Json names_json(const PartialMagma& pm, const std::vector<Element>& xs) {
  Json out = Json::array();
  for (auto x : xs) out.push_back(pm.name(x));
  return out;
}

std::string witness_text(const PartialMagma& pm, const std::optional<PMWitness>& w) {
  if (!w) return "";
  return w->condition + " at " + elements_text(pm, w->elements);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace

PartialFunction random_rational_function(std::size_t atoms, std::mt19937_64& rng) {
  // Explicit modular reduction keeps the stream identical across standard libraries.
  PartialFunction f = PartialFunction::nowhere(atoms);
  for (std::size_t x = 0; x < atoms; ++x) {
    const long num = static_cast<long>(rng() % 101) - 50;
    const long den = static_cast<long>(rng() % 20) + 1;
    f.values[x] = Rational(num, den);
  }
  return f;
}

std::vector<MeasureSpace> sweep_spaces(std::size_t max_atoms, std::size_t max_nulls, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<MeasureSpace> out;
  for (std::size_t n = 1; n <= max_atoms; ++n) {
    const std::uint32_t all = (1u << n) - 1;
    for (std::uint32_t nulls = 0; nulls < all; ++nulls) {
      if (static_cast<std::size_t>(std::popcount(nulls)) > max_nulls) continue;
      std::vector<Rational> unit(n), random(n);
      for (std::size_t x = 0; x < n; ++x) {
        const bool null = (nulls >> x) & 1u;
        unit[x] = null ? 0 : 1;
        const long num = static_cast<long>(rng() % 9) + 1;
        const long den = static_cast<long>(rng() % 4) + 1;
        random[x] = null ? Rational(0) : Rational(num, den);
      }
      out.emplace_back(std::move(unit));
      out.emplace_back(std::move(random));
    }
  }
  return out;
}

// ---------------------------------------------------------------- space

Report run_space_check(const SpaceDocument& doc, const RunOptions& opts) {
  const auto space = make_space(doc, opts);
  if (!doc.transform) throw InputError("space check needs a 'transform'");
  const std::size_t n = space.atom_count();
  std::vector<MSet> table;
  for (auto b : *doc.transform) table.emplace_back(b);
  if (table.size() != space.subset_count()) {
    throw InputError("transform needs " + std::to_string(space.subset_count()) + " entries, got " + std::to_string(table.size()));
  }
  SetTransform t;
  try {
    t = SetTransform(n, std::move(table));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }

  Report r;
  r.command = "space check";
  r.data["weights"] = weights_json(space);
  Json props = Json::object();
  for (auto p : kAllProperties) props[std::string(to_string(p))] = verdict_text(check_property(space, t, p), n);
  r.data["properties"] = props;
  const auto imp = implication_suite(space, t);
  r.data["implications"] = {{"measure_class", to_string(imp.measure_class)}, {"unions", to_string(imp.unions)}};
  r.add("implication suite consistent", imp.consistent());
  const auto ld = is_lower_density(space, t);
  r.add("lower density", ld.holds, ld.holds ? "" : verdict_text(ld, n));
  const auto lf = is_lifting(space, t);
  r.add("lifting", lf.holds, lf.holds ? "" : verdict_text(lf, n));
  if (lf.holds) {
    const auto rho = lifting_to_right_inverse(space, t);
    r.add("boolean right inverse", is_boolean_homomorphism(space, rho).holds && is_right_inverse(space, rho).holds);
  }
  return r;
}

Report run_space_liftings(const SpaceDocument& doc, const RunOptions& opts) {
  const auto space = make_space(doc, opts);
  const auto liftings = enumerate_liftings(space);
  Report r;
  r.command = "space liftings";
  r.data["weights"] = weights_json(space);
  r.data["liftings"] = liftings.size();
  Json gs = Json::array();
  bool all_valid = true, all_retractions = true;
  std::string first_bad;
  for (const auto& l : liftings) {
    const auto g = retraction_of(space, l);
    all_retractions = all_retractions && g.has_value();
    gs.push_back(g ? vector_json(*g) : Json(nullptr));
    const auto v = is_lifting(space, l);
    if (!v && all_valid) first_bad = verdict_text(v, space.atom_count());
    all_valid = all_valid && v.holds;
  }
  r.data["retractions"] = gs;
  std::size_t expected = 1;
  for (std::size_t k = 0; k < static_cast<std::size_t>(space.null_atoms().size()); ++k) {
    expected *= static_cast<std::size_t>(space.positive_atoms().size());
  }
  r.add("every enumerated transform is a lifting", all_valid, first_bad);
  r.add("each lifting comes from a retraction", all_retractions);
  std::set<std::vector<MSet>> distinct;
  for (const auto& l : liftings) distinct.insert(l.table());
  r.add("liftings are distinct", distinct.size() == liftings.size());
  r.add("count equals positive^null", liftings.size() == expected,
        std::to_string(liftings.size()) + " vs " + std::to_string(expected));
  return r;
}

namespace {

Report theorem1_section(const MeasureSpace& space, std::uint64_t seed, std::size_t random_functions) {
  Report r;
  r.command = "space theorem1";
  r.data["weights"] = weights_json(space);
  const auto report = verify_theorem1(space);
  r.data["liftings"] = report.entries.size();
  Json entries = Json::array();
  std::mt19937_64 rng(seed);
  std::vector<PartialFunction> fs;
  for (std::size_t i = 0; i < random_functions; ++i) fs.push_back(random_rational_function(space.atom_count(), rng));
  for (const auto& e : report.entries) {
    const auto g = retraction_of(space, e.lifting);
    const std::string label = "lifting g=" + (g ? vector_json(*g).dump() : std::string("?"));
    entries.push_back({{"retraction", g ? vector_json(*g) : Json(nullptr)},
                       {"kernel_differentiates", e.kernel_differentiates},
                       {"lower_density", e.lower_density_ok},
                       {"lifting", e.lifting_ok},
                       {"subordinate", e.subordinate},
                       {"boolean_homomorphism", e.boolean_hom_ok},
                       {"right_inverse", e.right_inverse_ok},
                       {"round_trip", e.round_trip}});
    r.add(label + " both directions", e.passed(), e.failure.empty() ? "" : "fails at " + e.failure);
    if (random_functions > 0) {
      const auto kernel = kernel_from_lifting(space, e.lifting);
      const auto recovered = std::count_if(fs.begin(), fs.end(), [&](const auto& f) { return recovers(space, kernel, f); });
      r.add(label + " recovers random functions", static_cast<std::size_t>(recovered) == fs.size(),
            std::to_string(recovered) + "/" + std::to_string(fs.size()));
    }
  }
  r.data["entries"] = entries;
  r.add("round trip returns each lifting", report.all_round_trips());
  return r;
}

}  // namespace

Report run_space_theorem1(const SpaceDocument& doc, const RunOptions& opts) {
  return theorem1_section(make_space(doc, opts), opts.seed, 100);
}

// ---------------------------------------------------------------- magmas

namespace {

std::string classification_summary(const PMClassification& c) {
  std::vector<std::string> words;
  words.push_back(c.unital ? "unital" : "non-unital");
  words.push_back(c.associative ? "associative" : "non-associative");
  words.push_back(c.fastened ? "fastened" : "not fastened");
  words.push_back(c.total ? "total" : "partial");
  if (c.monoid) {
    words.push_back("monoid");
  } else if (c.regular) {
    words.push_back("regular");
  }
  return join(words, ", ");
}

}  // namespace

Report run_pm_classify(const MagmaDocument& doc, const RunOptions& opts) {
  const auto& pm = doc.pm;
  require_elems(pm, opts);
  const auto c = classify(pm);
  Report r;
  r.command = "pm classify";
  r.data["size"] = pm.size();
  r.data["verdict"] = classification_summary(c);
  r.data["units"] = names_json(pm, c.units);
  r.data["unital"] = c.unital;
  r.data["associative"] = c.associative;
  if (c.associativity_failure) r.data["associativity_witness"] = witness_text(pm, c.associativity_failure);
  r.data["fastened"] = c.fastened;
  if (c.fastening_failure) r.data["fastening_witness"] = witness_text(pm, c.fastening_failure);
  r.data["left_fastened"] = names_json(pm, c.left_fastened);
  r.data["right_fastened"] = names_json(pm, c.right_fastened);
  r.data["regular"] = c.regular;
  r.data["monoid"] = c.monoid;
  r.data["total"] = c.total;
  if (doc.check_regular) {
    r.add("regular", c.regular, c.regular ? "" : witness_text(pm, c.associativity_failure ? c.associativity_failure : c.fastening_failure));
  }
  const auto ic = interchange_check(pm);
  r.add("interchange law", ic.holds);
  if (c.regular) {
    r.add("single unit iff total", single_unit_totality(pm));
    r.add("chain rule", verify_chain_rule(pm));
    r.add("square is regular", is_regular(square_pm(pm)));
  }
  return r;
}

Report run_pm_interchange(const MagmaDocument& doc, const RunOptions& opts) {
  require_elems(doc.pm, opts);
  const auto ic = interchange_check(doc.pm);
  Report r;
  r.command = "pm interchange";
  r.data["size"] = doc.pm.size();
  r.data["quadruples_with_both_sides_defined"] = ic.both_defined;
  std::string detail;
  if (ic.witness) {
    const auto n = doc.pm.size();
    std::vector<std::string> parts;
    for (auto e : *ic.witness) {
      const auto t = pair_at(n, e);
      parts.push_back("(" + doc.pm.name(t.first) + "," + doc.pm.name(t.second) + ")");
    }
    detail = "x'=" + parts[0] + " z'=" + parts[1] + " x=" + parts[2] + " z=" + parts[3];
  }
  r.add("interchange law", ic.holds, detail);
  return r;
}

// ---------------------------------------------------------------- categories

namespace {

std::optional<FiniteCategory> require_category(const PartialMagma& pm, Report& r, const std::string& label) {
  const auto c = classify(pm);
  r.add(label + " is regular", c.regular,
        c.regular ? "" : witness_text(pm, c.associativity_failure ? c.associativity_failure : c.fastening_failure));
  if (!c.regular) return std::nullopt;
  return cat_from_rpm(pm);
}

Report twin_section(const PartialMagma& pm) {
  Report r;
  r.command = "cat twin";
  const auto cat = require_category(pm, r, "input");
  if (!cat) return r;
  r.data["objects"] = cat->object_count();
  r.data["arrows"] = cat->arrow_count();
  r.add("cat/rpm round trip", rpm_from_cat(*cat) == pm && cat_from_rpm(rpm_from_cat(*cat)) == *cat);

  const auto twin = twin_category(*cat);
  r.data["twin_objects"] = twin.cat.object_count();
  r.data["twin_arrows"] = twin.cat.arrow_count();
  r.add("twin category is regular", is_regular(rpm_from_cat(twin.cat)));

  bool recaptured = true;
  for (Object u = 0; u < cat->object_count(); ++u) {
    for (Object v = 0; v < cat->object_count(); ++v) {
      std::vector<TwinArrow> expect;
      for (Arrow x : hom_set(*cat, u, v)) expect.push_back({cat->identity(u), cat->identity(v), x, x});
      recaptured = recaptured && twin_hom_cases(*cat, cat->identity(u), cat->identity(v)) == expect;
    }
  }
  r.add("hom-sets between objects recaptured", recaptured);

  bool from_object = true, to_object = true;
  for (Object u = 0; u < cat->object_count(); ++u) {
    for (Arrow y = 0; y < cat->arrow_count(); ++y) {
      from_object = from_object && twin_hom_cases(*cat, cat->identity(u), y) == twin_homs_from_object(*cat, u, y);
      to_object = to_object && twin_hom_cases(*cat, y, cat->identity(u)) == twin_homs_to_object(*cat, y, u);
    }
  }
  r.add("twin arrows out of an object factor through it", from_object);
  r.add("twin arrows into an object factor through it", to_object);
  return r;
}

Report natequiv_section(const PartialMagma& source, const PartialMagma& target) {
  Report r;
  r.command = "cat natequiv";
  const auto c = require_category(source, r, "source");
  const auto d = require_category(target, r, "target");
  if (!c || !d) return r;
  const auto functors = enumerate_functors(*c, *d);
  std::size_t homs = 0, trans = 0, mismatched = 0;
  bool inverse = true;
  for (const auto& t : functors) {
    for (const auto& s : functors) {
      const auto hs = enumerate_nat_homs(*c, *d, t, s);
      const auto ts = enumerate_nat_trans(*c, *d, t, s);
      homs += hs.size();
      trans += ts.size();
      mismatched += hs.size() != ts.size();
      for (const auto& a : hs) inverse = inverse && hom_from_nat(*c, *d, t, s, nat_from_hom(*c, *d, t, s, a)) == a;
      for (const auto& tau : ts) inverse = inverse && nat_from_hom(*c, *d, t, s, hom_from_nat(*c, *d, t, s, tau)) == tau;
    }
  }
  r.data["functors"] = functors.size();
  r.data["nat_homs"] = homs;
  r.data["nat_transformations"] = trans;
  r.add("counts agree for every functor pair", mismatched == 0, std::to_string(homs) + " vs " + std::to_string(trans));
  r.add("converters are mutually inverse", inverse);
  return r;
}

}  // namespace

Report run_cat_twin(const MagmaDocument& doc, const RunOptions& opts) {
  require_elems(doc.pm, opts);
  return twin_section(doc.pm);
}

Report run_cat_natequiv(const MagmaDocument& doc, const RunOptions& opts) {
  require_elems(doc.pm, opts);
  const PartialMagma& target = doc.target ? *doc.target : doc.pm;
  require_elems(target, opts);
  return natequiv_section(doc.pm, target);
}

// ---------------------------------------------------------------- yoneda

namespace {

void yoneda_case(Report& r, std::size_t z, std::size_t x, std::size_t probe_max) {
  const auto y = yoneda_roundtrip(z, x, ProbeFamily::up_to(probe_max));
  const std::string label = "|Z|=" + std::to_string(z) + " |X|=" + std::to_string(x);
  r.data["cases"].push_back({{"z", z}, {"x", x}, {"probe_max", probe_max}, {"natural_candidates", y.natural_candidates},
                             {"expected", y.expected}});
  r.add(label + " natural candidates", y.natural_candidates == y.expected,
        std::to_string(y.natural_candidates) + "/" + std::to_string(y.expected));
  r.add(label + " kernels in bijection", y.kernels_bijective);
  r.add(label + " both composites are identities", y.tau_kernel_tau_identity && y.kernel_tau_kernel_identity);
  r.add(label + " kernels induce natural candidates", y.kernels_induce_natural);
}

std::size_t param(const Json& params, const char* key, std::size_t fallback, std::size_t lo, std::size_t hi) {
  if (!params.contains(key)) return fallback;
  if (!is_index(params[key])) throw InputError(std::string("'") + key + "' must be a non-negative integer");
  const auto v = params[key].get<std::size_t>();
  if (v < lo || v > hi) {
    throw InputError(std::string("'") + key + "' must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  return v;
}

}  // namespace

Report run_yoneda_roundtrip(const std::optional<ScenarioDocument>& doc, const RunOptions& opts) {
  (void)opts;
  Report r;
  r.command = "yoneda roundtrip";
  r.data["cases"] = Json::array();
  if (doc && (doc->params.contains("z") || doc->params.contains("x"))) {
    const auto z = param(doc->params, "z", 2, 1, 4);
    const auto x = param(doc->params, "x", 1, 1, 3);
    yoneda_case(r, z, x, param(doc->params, "probe_max", std::max<std::size_t>(z, 3), z, 4));
  } else {
    for (std::size_t z = 1; z <= 3; ++z) {
      for (std::size_t x = 1; x <= 2; ++x) yoneda_case(r, z, x, 3);
    }
  }
  bool adjunction = true;
  for (std::size_t x = 1; x <= 2; ++x) {
    for (std::size_t d = 1; d <= 3; ++d) {
      adjunction = adjunction && adjunction_bijection(x, FiniteTopSpace::discrete(d), ProbeFamily::up_to(3)).ok();
    }
  }
  r.add("adjunction bijection for |X|<=2, |D|<=3", adjunction);
  return r;
}

// ---------------------------------------------------------------- full suite

Report run_full_report(const RunOptions& opts) {
  using Section = std::pair<std::string, std::function<Report()>>;
  const auto lib = example_library();
  std::vector<Section> sections;
  // Built-in fixtures are exempt from the input caps.
  RunOptions builtin = opts;
  builtin.max_elems = std::max<std::size_t>(opts.max_elems, 16);

  const std::vector<std::pair<std::string, std::vector<Rational>>> fixtures = {
      {"S1", {1, 1, 0}}, {"S2", {1, 1, 0, 0}}, {"S3", {1, 0, 0}}, {"S4", {Rational(1, 2), Rational(1, 3), 0}}, {"S5", {1, 1}}};
  for (const auto& [name, w] : fixtures) {
    sections.emplace_back("theorem1 " + name, [w = w, seed = opts.seed] { return theorem1_section(MeasureSpace(w), seed, 100); });
    sections.emplace_back("liftings " + name, [w = w, builtin] { return run_space_liftings(SpaceDocument{w, std::nullopt}, builtin); });
  }
  sections.emplace_back("theorem1 sweep", [seed = opts.seed] {
    Report r;
    r.command = "theorem1 sweep";
    std::size_t spaces = 0, liftings = 0, failures = 0;
    std::uint64_t k = 0;
    for (const auto& space : sweep_spaces(5, 2, seed)) {
      const auto section = theorem1_section(space, seed + k++, 20);
      ++spaces;
      liftings += section.data["liftings"].get<std::size_t>();
      failures += static_cast<std::size_t>(std::count_if(section.checks.begin(), section.checks.end(), [](const Check& c) { return !c.passed; }));
    }
    r.data["spaces"] = spaces;
    r.data["liftings"] = liftings;
    r.add("all spaces with <=5 atoms and <=2 null atoms", failures == 0, std::to_string(failures) + " failing checks");
    return r;
  });
  for (const auto& [name, pm] : lib) {
    sections.emplace_back("classify " + name, [pm = pm, builtin] { return run_pm_classify(MagmaDocument{pm, false, std::nullopt}, builtin); });
  }
  for (const char* name : {"1", "2", "II", "3", "SQ"}) {
    sections.emplace_back(std::string("twin ") + name, [pm = lib.at(name)] { return twin_section(pm); });
  }
  for (const auto& [c, d] : std::vector<std::pair<std::string, std::string>>{{"2", "3"}, {"3", "3"}, {"2", "SQ"}}) {
    sections.emplace_back("natequiv " + c + "->" + d, [a = lib.at(c), b = lib.at(d)] { return natequiv_section(a, b); });
  }
  sections.emplace_back("yoneda", [opts] { return run_yoneda_roundtrip(std::nullopt, opts); });

  std::vector<Report> results(sections.size());
  if (opts.parallel > 1) {
    // Independent sections; results are merged in declaration order.
    for (std::size_t start = 0; start < sections.size(); start += opts.parallel) {
      std::vector<std::future<Report>> batch;
      for (std::size_t i = start; i < std::min(sections.size(), start + opts.parallel); ++i) {
        batch.push_back(std::async(std::launch::async, sections[i].second));
      }
      for (std::size_t i = 0; i < batch.size(); ++i) results[start + i] = batch[i].get();
    }
  } else {
    for (std::size_t i = 0; i < sections.size(); ++i) results[i] = sections[i].second();
  }

  Report r;
  r.command = "report";
  r.data["seed"] = opts.seed;
  for (std::size_t i = 0; i < sections.size(); ++i) r.merge(results[i], sections[i].first);
  return r;
}

}  // namespace difflab
