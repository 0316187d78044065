// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "difflab/category_kernel.hpp"
#include "difflab/lebesgue_diff.hpp"
#include "difflab/measure_algebra.hpp"
#include "difflab/partial_magma.hpp"
#include "difflab/report.hpp"
#include "difflab/yoneda_finite.hpp"

using namespace difflab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = secs < limit_s;
  const bool ok = out.ok && in_time;
  failures += !ok;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << out.detail << "; " << secs
       << " s, limit " << limit_s << " s)";
  if (!in_time) line << " [time limit exceeded]";
  std::cout << line.str() << std::endl;
}

MeasureSpace space_of(std::initializer_list<long> w) { return build_space(w); }

// 1. Every one of the 8^8 transforms of the three-atom space with one null atom.
Outcome lifting_oracle() {
  const auto s = space_of({1, 1, 0});
  SetTransform t = SetTransform::constant(3, MSet{});
  std::set<std::vector<MSet>> found;
  std::uint64_t visited = 0;
  std::array<std::uint32_t, 8> digit{};
  while (true) {
    ++visited;
    if (is_lifting(s, t).holds) found.insert(t.table());
    std::size_t d = 0;
    while (d < 8) {
      if (++digit[d] < 8) {
        t[MSet(static_cast<std::uint32_t>(d))] = MSet(digit[d]);
        break;
      }
      digit[d] = 0;
      t[MSet(static_cast<std::uint32_t>(d))] = MSet{};
      ++d;
    }
    if (d == 8) break;
  }
  std::set<std::vector<MSet>> enumerated;
  for (const auto& l : enumerate_liftings(s)) enumerated.insert(l.table());
  return {found == enumerated && found.size() == 2,
          std::to_string(visited) + " transforms, " + std::to_string(found.size()) + " liftings, enumeration gives " +
              std::to_string(enumerated.size())};
}

struct LiftingCase {
  MeasureSpace space;
  SetTransform lifting;
  FilterKernel kernel;
};

std::vector<LiftingCase> small_lifting_cases() {
  std::vector<LiftingCase> out;
  for (const auto& s : sweep_spaces(5, 2, 0)) {
    for (const auto& l : enumerate_liftings(s)) out.push_back({s, l, kernel_from_lifting(s, l)});
  }
  return out;
}

// 2. Kernels of liftings recover indicators and seeded random functions exactly.
Outcome kernels_differentiate(const std::vector<LiftingCase>& cases) {
  std::mt19937_64 rng(0);
  std::size_t bad = 0, functions = 0;
  for (const auto& c : cases) {
    bool ok = differentiates(c.space, c.kernel).holds;
    for (std::uint32_t q = 0; q < c.space.subset_count(); ++q) {
      ok = recovers(c.space, c.kernel, c.space.indicator(MSet(q))) && ok;
      ++functions;
    }
    for (int i = 0; i < 100; ++i) {
      ok = recovers(c.space, c.kernel, random_rational_function(c.space.atom_count(), rng)) && ok;
      ++functions;
    }
    bad += !ok;
  }
  return {bad == 0 && !cases.empty(), std::to_string(cases.size()) + " liftings, " + std::to_string(functions) +
                                          " functions, " + std::to_string(bad) + " failures"};
}

// 3. From each kernel back to a lifting and a Boolean right inverse.
Outcome kernels_to_liftings(const std::vector<LiftingCase>& cases) {
  std::size_t bad = 0;
  for (const auto& c : cases) {
    const auto lambda = lower_density_from_kernel(c.space, c.kernel);
    bool ok = is_lower_density(c.space, lambda).holds;
    if (ok) {
      const auto lifted = lower_density_to_lifting(c.space, lambda);
      ok = is_lifting(c.space, lifted).holds;
      if (ok) {
        const auto rho = lifting_to_right_inverse(c.space, lifted);
        ok = is_boolean_homomorphism(c.space, rho).holds && is_right_inverse(c.space, rho).holds;
      }
    }
    bad += !ok;
  }
  std::size_t round_trips = 0, expected = 0;
  for (const auto& s : {space_of({1, 1, 0}), space_of({1, 1, 0, 0})}) {
    for (const auto& l : enumerate_liftings(s)) {
      ++expected;
      const auto back = lower_density_to_lifting(s, lower_density_from_kernel(s, kernel_from_lifting(s, l)));
      round_trips += back == l;
    }
  }
  return {bad == 0 && round_trips == expected && expected == 6,
          std::to_string(cases.size()) + " kernels, " + std::to_string(bad) + " failures, round trips " +
              std::to_string(round_trips) + "/" + std::to_string(expected)};
}

// 4. Kernel membership against literal upward closure of every base.
Outcome principality() {
  std::uint64_t filters = 0, mismatches = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::uint32_t subsets = 1u << n;
    for (std::uint32_t fam = 1; fam < (1u << subsets); ++fam) {
      if (fam & 1u) continue;
      std::vector<IndexSet> base;
      std::vector<std::uint32_t> masks;
      for (std::uint32_t s = 0; s < subsets; ++s) {
        if ((fam >> s) & 1u) {
          base.emplace_back(n, s);
          masks.push_back(s);
        }
      }
      // Upward closure of the closure under finite intersections.
      std::set<std::uint32_t> meets(masks.begin(), masks.end());
      for (bool grew = true; grew;) {
        grew = false;
        const std::vector<std::uint32_t> now(meets.begin(), meets.end());
        for (auto a : now) {
          for (auto b : now) grew |= meets.insert(a & b).second;
        }
      }
      if (meets.count(0)) continue;  // improper
      ++filters;
      const auto f = filter_from_base(n, base);
      for (std::uint32_t s = 0; s < subsets; ++s) {
        bool member = false;
        for (auto m : meets) member = member || (m & s) == m;
        mismatches += f.contains(IndexSet(n, s)) != member;
      }
    }
  }
  return {mismatches == 0, std::to_string(filters) + " proper filters, " + std::to_string(mismatches) + " mismatches"};
}

// 5. Interchange law over every partial operation table on three elements.
Outcome interchange() {
  const auto h = twin_pm(3);
  std::uint64_t tables = 0, violations = 0, comparisons = 0;
  for_each_pm(3, [&](const PartialMagma& pm) {
    ++tables;
    const auto v = interchange_check(h, square_pm(pm));
    violations += !v.holds;
    comparisons += v.both_defined;
  });
  return {violations == 0 && tables == 262144, std::to_string(tables) + " tables, " + std::to_string(comparisons) +
                                                   " defined comparisons, " + std::to_string(violations) +
                                                   " violations"};
}

// 6 and 7 share one sweep over all tables of size <= 3.
struct RegularSweep {
  std::uint64_t regular = 0, unit_violations = 0, round_trip_failures = 0;
};

RegularSweep regular_sweep() {
  RegularSweep r;
  for (std::size_t n = 1; n <= 3; ++n) {
    for_each_pm(n, [&](const PartialMagma& pm) {
      if (!is_regular(pm)) return;
      ++r.regular;
      r.unit_violations += !single_unit_totality(pm);
      const auto c = cat_from_rpm(pm);
      r.round_trip_failures += !(rpm_from_cat(c) == pm && cat_from_rpm(rpm_from_cat(c)) == c);
    });
  }
  return r;
}

Outcome categories_round_trip(const RegularSweep& sweep) {
  std::size_t library_failures = 0;
  for (const char* name : {"1", "2", "II", "3", "SQ"}) {
    const auto pm = example_library().at(name);
    const auto c = cat_from_rpm(pm);
    library_failures += !(rpm_from_cat(c) == pm && cat_from_rpm(rpm_from_cat(c)) == c);
  }
  return {library_failures == 0 && sweep.round_trip_failures == 0,
          "5 library categories, " + std::to_string(sweep.regular) + " regular tables, " +
              std::to_string(library_failures + sweep.round_trip_failures) + " failures"};
}

// 8. Natural transformations in both encodings.
Outcome natural_transformations() {
  std::ostringstream detail;
  bool ok = true;
  for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{{"2", "3"}, {"3", "3"}, {"2", "SQ"}}) {
    const auto c = library_category(a), d = library_category(b);
    const auto functors = enumerate_functors(c, d);
    std::size_t homs = 0, trans = 0;
    for (const auto& t : functors) {
      for (const auto& s : functors) {
        const auto hs = enumerate_nat_homs(c, d, t, s);
        const auto ts = enumerate_nat_trans(c, d, t, s);
        homs += hs.size();
        trans += ts.size();
        ok = ok && hs.size() == ts.size();
        std::set<std::vector<Arrow>> images;
        for (const auto& alpha : hs) {
          const auto tau = nat_from_hom(c, d, t, s, alpha);
          images.insert(tau.components);
          ok = ok && is_natural(c, d, t, s, tau).holds && hom_from_nat(c, d, t, s, tau) == alpha;
        }
        ok = ok && images.size() == ts.size();
        for (const auto& tau : ts) {
          const auto alpha = hom_from_nat(c, d, t, s, tau);
          ok = ok && is_nat_hom(c, d, t, s, alpha).holds && nat_from_hom(c, d, t, s, alpha) == tau;
        }
      }
    }
    detail << "(" << a << "," << b << "): " << homs << "/" << trans << " ";
  }
  auto text = detail.str();
  text.pop_back();
  return {ok, text};
}

// 9. Probe-natural candidates versus ultrafilter kernels.
Outcome yoneda() {
  std::ostringstream detail;
  bool ok = true;
  for (std::size_t z = 1; z <= 3; ++z) {
    for (std::size_t x = 1; x <= 2; ++x) {
      const auto r = yoneda_roundtrip(z, x, ProbeFamily::up_to(3));
      std::size_t expected = 1;
      for (std::size_t i = 0; i < x; ++i) expected *= z;
      ok = ok && r.ok() && r.natural_candidates == expected;
      detail << z << "^" << x << "=" << r.natural_candidates << " ";
    }
  }
  auto text = detail.str();
  text.pop_back();
  return {ok, text};
}

// 10. Two full runs with the same seed.
Outcome determinism() {
  RunOptions opts;
  opts.seed = 0;
  const auto first = run_full_report(opts);
  const auto a = render(first, "text") + render(first, "json");
  const auto second = run_full_report(opts);
  const auto b = render(second, "text") + render(second, "json");
  return {a == b && first.passed(), std::to_string(a.size()) + " bytes identical: " + (a == b ? "yes" : "no") +
                                        ", report checks " + (first.passed() ? "all pass" : "failing")};
}

}  // namespace

int main() {
  criterion(1, "lifting enumeration matches brute force on S1", 60, lifting_oracle);
  std::vector<LiftingCase> cases;
  criterion(2, "lifting kernels differentiate (<=5 atoms, <=2 null)", 120, [&] {
    cases = small_lifting_cases();
    return kernels_differentiate(cases);
  });
  criterion(3, "kernels yield lower densities, liftings and right inverses", 120,
            [&] { return kernels_to_liftings(cases); });
  criterion(4, "filter kernels match literal upward closure (ground <= 4)", 30, principality);
  criterion(5, "interchange law on all 3-element tables", 180, interchange);
  RegularSweep sweep;
  criterion(6, "single unit iff total for regular tables (<= 3 elements)", 180, [&] {
    sweep = regular_sweep();
    return Outcome{sweep.unit_violations == 0 && sweep.regular > 0,
                   std::to_string(sweep.regular) + " regular tables, " + std::to_string(sweep.unit_violations) +
                       " violations"};
  });
  criterion(7, "categories and regular partial magmas round trip", 60, [&] { return categories_round_trip(sweep); });
  criterion(8, "natural transformations equal twin-valued homomorphisms", 120, natural_transformations);
  criterion(9, "probe-natural candidates equal ultrafilter kernels", 120, yoneda);
  criterion(10, "full report is deterministic for a fixed seed", 600, determinism);
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
