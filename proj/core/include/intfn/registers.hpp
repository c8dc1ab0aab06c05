#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace intfn {

// Regulators first, then work registers by rank. A work register's name is
// its letter path: on an X (i) step every register ending in X is added into
// the register named by dropping that last letter.
enum class Reg : std::uint8_t {
  RX, RY,
  X, Y,
  XX, XY, YX, YY,
  XXX, XXY, XYX, XYY, YXX, YXY, YYX, YYY,
};

inline constexpr std::size_t kRegisterCount = 16;
inline constexpr std::array<Reg, kRegisterCount> kAllRegisters = {
    Reg::RX,  Reg::RY,  Reg::X,   Reg::Y,   Reg::XX,  Reg::XY,  Reg::YX,  Reg::YY,
    Reg::XXX, Reg::XXY, Reg::XYX, Reg::XYY, Reg::YXX, Reg::YXY, Reg::YYX, Reg::YYY};

std::string_view name(Reg r);
std::optional<Reg> parse_register(std::string_view name);

// 0 for regulators, otherwise the identifier length.
int rank(Reg r);
inline bool is_work(Reg r) { return rank(r) > 0; }

class RegisterBank {
 public:
  RegisterBank() { values_.fill(0); }

  std::int64_t operator[](Reg r) const { return values_[static_cast<std::size_t>(r)]; }
  std::int64_t& operator[](Reg r) { return values_[static_cast<std::size_t>(r)]; }

  const std::array<std::int64_t, kRegisterCount>& values() const { return values_; }

  friend bool operator==(const RegisterBank&, const RegisterBank&) = default;

 private:
  std::array<std::int64_t, kRegisterCount> values_;
};

/// The set of constant, non-zero work registers that names a curve family,
/// e.g. {XXY, Y} for the discrete sine.
class TypeDesignation {
 public:
  TypeDesignation() = default;
  // Throws PreconditionError for regulators.
  explicit TypeDesignation(std::vector<Reg> registers);

  // Non-zero work registers none of whose higher-rank descendants is
  // non-zero; those are exactly the registers a run can never modify.
  static TypeDesignation implied_by(const RegisterBank& bank);
  // "{XXY, Y}" or "XXY,Y"
  static TypeDesignation parse(std::string_view text);

  bool contains(Reg r) const { return (mask_ >> static_cast<unsigned>(r)) & 1U; }
  std::vector<Reg> registers() const;
  bool empty() const { return mask_ == 0; }

  friend bool operator==(const TypeDesignation&, const TypeDesignation&) = default;

 private:
  std::uint32_t mask_ = 0;
};

std::string to_string(const TypeDesignation& t);

}  // namespace intfn
