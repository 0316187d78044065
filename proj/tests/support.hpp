#pragma once

// Shared fixtures for the unit tests.

#include <initializer_list>
#include <vector>

#include "difflab/measure_algebra.hpp"
#include "difflab/measure_space.hpp"

namespace difflab::test {

// Atoms of the canonical three-atom space.
inline constexpr std::size_t kA = 0, kB = 1, kN = 2;

inline MSet set_of(std::initializer_list<std::size_t> atoms) {
  MSet s;
  for (auto a : atoms) s.bits |= 1u << a;
  return s;
}

inline MeasureSpace s1() { return build_space({1, 1, 0}); }

// The lifting of S1 that sends the null atom along with a.
inline SetTransform lambda_a() {
  const std::vector<std::size_t> g{kA, kB, kA};
  return lifting_from_retraction(s1(), g);
}

inline SetTransform lambda_b() {
  const std::vector<std::size_t> g{kA, kB, kB};
  return lifting_from_retraction(s1(), g);
}

inline std::vector<Rational> rationals(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace difflab::test
