#include "difflab/measure_space.hpp"

#include <stdexcept>

namespace difflab {

MSet PartialFunction::domain() const {
  MSet out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i]) out.bits |= (1u << i);
  }
  return out;
}

const Rational& PartialFunction::at(std::size_t atom) const {
  const auto& v = values.at(atom);
  if (!v) throw std::out_of_range("partial function undefined at atom " + std::to_string(atom));
  return *v;
}

PartialFunction PartialFunction::total(std::span<const Rational> vals) {
  PartialFunction f;
  f.values.assign(vals.begin(), vals.end());
  return f;
}

PartialFunction PartialFunction::nowhere(std::size_t atoms) {
  PartialFunction f;
  f.values.resize(atoms);
  return f;
}

MeasureSpace::MeasureSpace(std::vector<Rational> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("measure space needs at least one atom");
  if (weights_.size() > kMaxAtoms) {
    throw std::invalid_argument("measure space limited to " + std::to_string(kMaxAtoms) + " atoms");
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 0) throw std::invalid_argument("negative weight at atom " + std::to_string(i));
    if (weights_[i] > 0) positive_.bits |= (1u << i);
  }
  if (positive_.empty()) throw std::invalid_argument("all weights are zero: no averageable set");

  averageable_index_.assign(subset_count(), -1);
  for (std::uint32_t bits = 0; bits < subset_count(); ++bits) {
    if (!is_null(MSet(bits))) {
      averageable_index_[bits] = static_cast<std::int32_t>(averageable_.size());
      averageable_.push_back(MSet(bits));
    }
  }
}

Rational MeasureSpace::measure(MSet q) const {
  Rational total = 0;
  for (std::size_t i = 0; i < atom_count(); ++i) {
    if (q.contains(i)) total += weights_[i];
  }
  return total;
}

std::optional<std::size_t> MeasureSpace::averageable_index(MSet q) const {
  if (q.bits >= averageable_index_.size()) return std::nullopt;
  const auto idx = averageable_index_[q.bits];
  if (idx < 0) return std::nullopt;
  return static_cast<std::size_t>(idx);
}

PartialFunction MeasureSpace::indicator(MSet q) const {
  PartialFunction f;
  f.values.reserve(atom_count());
  for (std::size_t i = 0; i < atom_count(); ++i) f.values.emplace_back(Rational(q.contains(i) ? 1 : 0));
  return f;
}

Rational MeasureSpace::conditional_prob(MSet q, MSet qp) const {
  const Rational denom = measure(qp);
  if (denom == 0) throw std::domain_error("conditioning set " + format_set(qp, atom_count()) + " is not averageable");
  return measure(q & qp) / denom;
}

MeasureSpace build_space(std::vector<Rational> weights) {
  return MeasureSpace(std::move(weights));
}

MeasureSpace build_space(std::initializer_list<long> weights) {
  std::vector<Rational> w;
  for (long x : weights) w.emplace_back(x);
  return MeasureSpace(std::move(w));
}

std::string format_set(MSet q, std::size_t atoms) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < atoms; ++i) {
    if (!q.contains(i)) continue;
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace difflab
