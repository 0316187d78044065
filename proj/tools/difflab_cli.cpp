// Command-line front end: reads a JSON document (or "-" for stdin), runs one
// verification pipeline and prints the report to stdout.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "difflab/report.hpp"

namespace {

using namespace difflab;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

InputDocument load(const std::string& path, DocumentKind expected) {
  auto doc = parse_document(read_input(path));
  const bool magma_like = expected == DocumentKind::PartialMagma || expected == DocumentKind::Category;
  const bool got_magma = doc.kind == DocumentKind::PartialMagma || doc.kind == DocumentKind::Category;
  if (magma_like ? !got_magma : doc.kind != expected) throw InputError("document kind does not fit this subcommand");
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive checks for finite measure algebras, liftings, partial magmas and small categories"};
  app.require_subcommand(1);
  app.fallthrough();

  RunOptions opts;
  app.add_option("--format", opts.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", opts.seed, "Seed for randomized suites");
  app.add_option("--max-atoms", opts.max_atoms, "Atom cap for exhaustive modes");
  app.add_option("--max-elems", opts.max_elems, "Element cap for exhaustive modes");
  app.add_option("--parallel", opts.parallel, "Worker threads for the full report")->check(CLI::Range(1u, 64u));

  std::string path;
  std::function<Report()> job;

  auto* space = app.add_subcommand("space", "Measure space pipelines")->require_subcommand(1);
  auto* pm = app.add_subcommand("pm", "Partial magma checks")->require_subcommand(1);
  auto* cat = app.add_subcommand("cat", "Category checks")->require_subcommand(1);
  auto* yoneda = app.add_subcommand("yoneda", "Finite Yoneda checks")->require_subcommand(1);
  auto* report = app.add_subcommand("report", "Run every pipeline on the built-in fixtures");

  auto with_input = [&](CLI::App* parent, const std::string& name, const std::string& help, DocumentKind kind,
                        auto run) {
    auto* sub = parent->add_subcommand(name, help);
    sub->add_option("input", path, "JSON document, or - for stdin")->required();
    sub->callback([&, kind, run] {
      job = [&, kind, run] {
        const auto doc = load(path, kind);
        if constexpr (std::is_invocable_v<decltype(run), const SpaceDocument&, const RunOptions&>) {
          return run(*doc.space, opts);
        } else {
          return run(*doc.magma, opts);
        }
      };
    });
  };
  with_input(space, "check", "Properties of a given set transform", DocumentKind::MeasureSpace, run_space_check);
  with_input(space, "liftings", "Enumerate and verify every lifting", DocumentKind::MeasureSpace, run_space_liftings);
  with_input(space, "theorem1", "Liftings, kernels and lower densities in both directions", DocumentKind::MeasureSpace,
             run_space_theorem1);
  with_input(pm, "classify", "Units, associativity, fastening, regularity", DocumentKind::PartialMagma,
             run_pm_classify);
  with_input(pm, "interchange", "Interchange law on pairs", DocumentKind::PartialMagma, run_pm_interchange);
  with_input(cat, "twin", "Twin category and hom-set recapture", DocumentKind::Category, run_cat_twin);
  with_input(cat, "natequiv", "Natural transformations as twin-valued homomorphisms", DocumentKind::Category,
             run_cat_natequiv);

  auto* roundtrip = yoneda->add_subcommand("roundtrip", "Natural candidates versus ultrafilter kernels");
  roundtrip->add_option("input", path, "Optional scenario document, or - for stdin");
  roundtrip->callback([&] {
    job = [&] {
      std::optional<ScenarioDocument> scenario;
      if (!path.empty()) scenario = load(path, DocumentKind::Scenario).scenario;
      return run_yoneda_roundtrip(scenario, opts);
    };
  });
  report->callback([&] { job = [&] { return run_full_report(opts); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::InputError);
  }

  if (opts.max_atoms != kDefaultMaxAtoms) {
    std::cerr << "warning: atom cap overridden to " << opts.max_atoms << "\n";
  }
  if (opts.max_elems != kDefaultMaxElems) {
    std::cerr << "warning: element cap overridden to " << opts.max_elems << "\n";
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    const Report r = job();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cout << render(r, opts.format);
    std::cerr << "elapsed: " << elapsed.count() << " s\n";
    return static_cast<int>(exit_code(r));
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::InputError);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::InputError);
  }
}
