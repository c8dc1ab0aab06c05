#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace intfn {

enum class Axis : std::uint8_t { I, J };
enum class Direction : std::int8_t { Plus = 1, Minus = -1 };

constexpr Axis other(Axis a) { return a == Axis::I ? Axis::J : Axis::I; }

struct Step {
  Axis axis = Axis::I;
  Direction direction = Direction::Plus;

  friend bool operator==(const Step&, const Step&) = default;
};

inline constexpr Step kIPlus{Axis::I, Direction::Plus};
inline constexpr Step kIMinus{Axis::I, Direction::Minus};
inline constexpr Step kJPlus{Axis::J, Direction::Plus};
inline constexpr Step kJMinus{Axis::J, Direction::Minus};

// "i+", "i-", "j+", "j-"
std::string to_string(Step s);
// Accepts i, j, i+, i-, j+, j- and the superscript forms i⁺ i⁻ j⁺ j⁻.
Step parse_step(std::string_view token);
// Whitespace- or comma-separated step tokens.
std::vector<Step> parse_steps(std::string_view text);

struct IntegerPair {
  std::int64_t i = 0;
  std::int64_t j = 0;

  std::int64_t operator[](Axis a) const { return a == Axis::I ? i : j; }
  friend auto operator<=>(const IntegerPair&, const IntegerPair&) = default;
};

std::string to_string(IntegerPair p);
IntegerPair moved(IntegerPair p, Step s);

/// A finite 4-connected lattice path: a start pair plus a sequence of unit
/// steps along one axis. Elements are kept materialized so that indexing by
/// step number k is O(1); element k is the pair reached after step k.
class IntegerFunction {
 public:
  IntegerFunction() : elements_{IntegerPair{}} {}
  explicit IntegerFunction(IntegerPair start) : elements_{start} {}

  void append(Step s);

  IntegerPair start() const { return elements_.front(); }
  IntegerPair back() const { return elements_.back(); }
  std::span<const Step> steps() const { return steps_; }
  std::span<const IntegerPair> elements() const { return elements_; }
  const IntegerPair& operator[](std::size_t k) const { return elements_[k]; }

  // Number of steps l; there are l + 1 elements.
  std::size_t length() const { return steps_.size(); }

  // Every step along `axis` is a Plus step.
  bool is_monotone(Axis axis) const;
  bool is_monotone() const { return is_monotone(Axis::I) && is_monotone(Axis::J); }

  IntegerFunction transposed() const;

  friend bool operator==(const IntegerFunction& a, const IntegerFunction& b) {
    return a.elements_ == b.elements_;
  }

 private:
  std::vector<Step> steps_;
  std::vector<IntegerPair> elements_;
};

IntegerFunction from_step_sequence(IntegerPair start, std::span<const Step> steps);

// Consecutive pairs differ by exactly 1 in exactly one coordinate.
bool satisfies_neighbor_property(std::span<const IntegerPair> elements);

}  // namespace intfn
