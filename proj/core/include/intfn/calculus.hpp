#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "intfn/integer_function.hpp"
#include "intfn/machine.hpp"
#include "intfn/rational.hpp"

namespace intfn {

// Element k was reached by a step along `axis`.
struct CharacteristicIndex {
  std::size_t k = 0;
  Axis axis = Axis::I;

  friend bool operator==(const CharacteristicIndex&, const CharacteristicIndex&) = default;
};

struct DifferenceEntry {
  std::int64_t coordinate = 0;
  std::int64_t d = 0;

  friend bool operator==(const DifferenceEntry&, const DifferenceEntry&) = default;
};

/// Characteristic differences of one class D, ordered by the characteristic
/// coordinate along `axis`. For axis I, d is the j distance between the
/// characteristic pairs at i = c and i = c + D.
struct DifferenceField {
  Axis axis = Axis::I;
  std::int64_t D = 1;
  std::vector<DifferenceEntry> entries;

  bool empty() const { return entries.empty(); }
  std::int64_t max_abs() const;
  std::vector<std::int64_t> values() const;

  friend bool operator==(const DifferenceField&, const DifferenceField&) = default;
};

// The two-integer set {d, d - 1} that stays consistent across integer scales.
struct ScaledDifference {
  std::int64_t upper = 0;

  std::int64_t lower() const { return upper - 1; }
  bool contains(std::int64_t v) const { return v == upper || v == upper - 1; }

  friend bool operator==(const ScaledDifference&, const ScaledDifference&) = default;
};

// The real value of one integer step, e.g. 1/100.
class IntegerScale {
 public:
  explicit IntegerScale(Rational unit);
  const Rational& unit() const { return unit_; }

 private:
  Rational unit_;
};

std::vector<CharacteristicIndex> characteristic_indices(const IntegerFunction& f, Axis axis);

// Requires f.is_monotone(axis) and D >= 1. Coordinates without a partner at
// c + D are omitted.
DifferenceField difference_field(const IntegerFunction& f, Axis axis, std::int64_t D);

ScaledDifference scale_difference(std::int64_t d);

// Canonical representative: passes through [c, d] for every entry (axis I)
// or [d, c] (axis J), joined by coordinate steps first and then the
// minimal number of difference-axis steps.
IntegerFunction class_derivative(const DifferenceField& field);
IntegerFunction class_derivative(const IntegerFunction& f, Axis axis, std::int64_t D);

// Every class D >= 1 with a non-empty field.
std::map<std::int64_t, DifferenceField> full_derivative(const IntegerFunction& f, Axis axis);

// Coarse elements with no fine element inside their m x m refinement box.
std::vector<IntegerPair> refinement_compatible(const IntegerFunction& coarse,
                                               const IntegerFunction& fine, std::int64_t m);

// axis_restricted == false: RX values of i steps and RY values of j steps are
// each non-decreasing. axis_restricted == true: the single sequence of the
// selected regulator's value at the pair preceding each step is
// non-decreasing.
bool regulator_monotone_check(const GenerationTrace& trace, bool axis_restricted);

}  // namespace intfn
