#include "intfn/registers.hpp"

#include <algorithm>

#include "intfn/error.hpp"

namespace intfn {

namespace {

constexpr std::array<std::string_view, kRegisterCount> kNames = {
    "RX", "RY", "X", "Y", "XX", "XY", "YX", "YY",
    "XXX", "XXY", "XYX", "XYY", "YXX", "YXY", "YYX", "YYY"};

// Descendant test: `child` extends `parent`'s letter path.
bool is_descendant(Reg child, Reg parent) {
  const auto c = name(child);
  const auto p = name(parent);
  return is_work(child) && is_work(parent) && c.size() > p.size() && c.substr(0, p.size()) == p;
}

}  // namespace

std::string_view name(Reg r) { return kNames[static_cast<std::size_t>(r)]; }

std::optional<Reg> parse_register(std::string_view text) {
  for (std::size_t idx = 0; idx < kNames.size(); ++idx) {
    if (kNames[idx] == text) return static_cast<Reg>(idx);
  }
  return std::nullopt;
}

int rank(Reg r) {
  return (r == Reg::RX || r == Reg::RY) ? 0 : static_cast<int>(name(r).size());
}

TypeDesignation::TypeDesignation(std::vector<Reg> registers) {
  for (Reg r : registers) {
    if (!is_work(r)) throw PreconditionError("type designation may only name work registers");
    mask_ |= 1U << static_cast<unsigned>(r);
  }
}

TypeDesignation TypeDesignation::implied_by(const RegisterBank& bank) {
  std::vector<Reg> out;
  for (Reg r : kAllRegisters) {
    if (!is_work(r) || bank[r] == 0) continue;
    const bool fed = std::any_of(kAllRegisters.begin(), kAllRegisters.end(),
                                 [&](Reg c) { return is_descendant(c, r) && bank[c] != 0; });
    if (!fed) out.push_back(r);
  }
  return TypeDesignation(std::move(out));
}

TypeDesignation TypeDesignation::parse(std::string_view text) {
  std::vector<Reg> regs;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    auto r = parse_register(token);
    if (!r) throw ParseError("unknown register '" + token + "' in type designation");
    regs.push_back(*r);
    token.clear();
  };
  for (char c : text) {
    if (c == '{' || c == '}' || c == ',' || c == ' ') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return TypeDesignation(std::move(regs));
}

std::vector<Reg> TypeDesignation::registers() const {
  std::vector<Reg> out;
  for (Reg r : kAllRegisters) {
    if (contains(r)) out.push_back(r);
  }
  return out;
}

std::string to_string(const TypeDesignation& t) {
  std::string out = "{";
  bool first = true;
  for (Reg r : t.registers()) {
    if (!first) out += ", ";
    out += name(r);
    first = false;
  }
  return out + "}";
}

}  // namespace intfn
