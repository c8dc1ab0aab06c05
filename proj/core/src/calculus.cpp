#include "intfn/calculus.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "intfn/checked.hpp"
#include "intfn/error.hpp"

namespace intfn {

namespace {

struct Characteristic {
  std::int64_t coordinate;
  std::int64_t other;
};

std::vector<Characteristic> characteristic_pairs(const IntegerFunction& f, Axis axis) {
  std::vector<Characteristic> out;
  const auto elements = f.elements();
  for (std::size_t k = 1; k < elements.size(); ++k) {
    if (f.steps()[k - 1].axis == axis) out.push_back({elements[k][axis], elements[k][other(axis)]});
  }
  return out;
}

}  // namespace

std::int64_t DifferenceField::max_abs() const {
  std::int64_t m = 0;
  for (const auto& e : entries) m = std::max(m, checked::abs(e.d));
  return m;
}

std::vector<std::int64_t> DifferenceField::values() const {
  std::vector<std::int64_t> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.d);
  return out;
}

IntegerScale::IntegerScale(Rational unit) : unit_(unit) {
  if (unit_.numerator() <= 0) throw PreconditionError("integer scale unit must be positive");
}

std::vector<CharacteristicIndex> characteristic_indices(const IntegerFunction& f, Axis axis) {
  std::vector<CharacteristicIndex> out;
  const auto steps = f.steps();
  for (std::size_t k = 1; k <= steps.size(); ++k) {
    if (steps[k - 1].axis == axis) out.push_back({k, axis});
  }
  return out;
}

DifferenceField difference_field(const IntegerFunction& f, Axis axis, std::int64_t D) {
  if (D < 1) throw PreconditionError("difference class must be positive");
  if (!f.is_monotone(axis)) {
    throw PreconditionError("difference fields need a function non-decreasing along the axis");
  }
  DifferenceField field{axis, D, {}};
  const auto pairs = characteristic_pairs(f, axis);
  // Plus-only steps along the axis make the characteristic coordinates
  // consecutive integers, so the partner of entry n sits at n + D.
  const auto offset = static_cast<std::size_t>(D);
  for (std::size_t n = 0; n + offset < pairs.size(); ++n) {
    const auto& from = pairs[n];
    const auto& to = pairs[n + offset];
    field.entries.push_back({from.coordinate, checked::sub(to.other, from.other)});
  }
  return field;
}

ScaledDifference scale_difference(std::int64_t d) {
  checked::sub(d, 1);
  return ScaledDifference{d};
}

IntegerFunction class_derivative(const DifferenceField& field) {
  if (field.empty()) throw PreconditionError("class derivative of an empty difference field");
  const auto& first = field.entries.front();
  IntegerFunction f(IntegerPair{first.coordinate, first.d});
  for (std::size_t n = 1; n < field.entries.size(); ++n) {
    const auto& prev = field.entries[n - 1];
    const auto& cur = field.entries[n];
    if (cur.coordinate <= prev.coordinate) {
      throw PreconditionError("difference field coordinates must be strictly increasing");
    }
    for (auto c = prev.coordinate; c < cur.coordinate; ++c) f.append(kIPlus);
    const Step vertical = cur.d >= prev.d ? kJPlus : kJMinus;
    const auto count = checked::abs(checked::sub(cur.d, prev.d));
    for (std::int64_t s = 0; s < count; ++s) f.append(vertical);
  }
  return field.axis == Axis::I ? f : f.transposed();
}

IntegerFunction class_derivative(const IntegerFunction& f, Axis axis, std::int64_t D) {
  return class_derivative(difference_field(f, axis, D));
}

std::map<std::int64_t, DifferenceField> full_derivative(const IntegerFunction& f, Axis axis) {
  std::map<std::int64_t, DifferenceField> out;
  for (std::int64_t D = 1;; ++D) {
    auto field = difference_field(f, axis, D);
    if (field.empty()) break;
    out.emplace(D, std::move(field));
  }
  return out;
}

std::vector<IntegerPair> refinement_compatible(const IntegerFunction& coarse,
                                               const IntegerFunction& fine, std::int64_t m) {
  if (m <= 0) throw PreconditionError("refinement factor must be positive");
  std::set<IntegerPair> covered;
  for (const auto& p : fine.elements()) {
    covered.insert({checked::narrow(checked::floor_div(p.i, m)),
                    checked::narrow(checked::floor_div(p.j, m))});
  }
  std::vector<IntegerPair> violations;
  for (const auto& p : coarse.elements()) {
    if (!covered.contains(p)) violations.push_back(p);
  }
  return violations;
}

bool regulator_monotone_check(const GenerationTrace& trace, bool axis_restricted) {
  const auto& records = trace.records;
  if (!axis_restricted) {
    std::optional<std::int64_t> last_rx;
    std::optional<std::int64_t> last_ry;
    for (const auto& rec : records) {
      auto& last = rec.step.axis == Axis::I ? last_rx : last_ry;
      const auto value = rec.bank[rec.step.axis == Axis::I ? Reg::RX : Reg::RY];
      if (last && value < *last) return false;
      last = value;
    }
    return true;
  }
  std::optional<std::int64_t> last;
  for (std::size_t n = 1; n < records.size(); ++n) {
    const Reg selected = records[n].step.axis == Axis::I ? Reg::RX : Reg::RY;
    const auto value = records[n - 1].bank[selected];
    if (last && value < *last) return false;
    last = value;
  }
  return true;
}

}  // namespace intfn
