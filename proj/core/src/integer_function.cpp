#include "intfn/integer_function.hpp"

#include <cstdlib>

#include "intfn/checked.hpp"
#include "intfn/error.hpp"

namespace intfn {

std::string to_string(Step s) {
  std::string out(1, s.axis == Axis::I ? 'i' : 'j');
  out += s.direction == Direction::Plus ? '+' : '-';
  return out;
}

Step parse_step(std::string_view token) {
  if (token.empty()) throw ParseError("empty step token");
  Step s;
  switch (token.front()) {
    case 'i': case 'I': s.axis = Axis::I; break;
    case 'j': case 'J': s.axis = Axis::J; break;
    default: throw ParseError("bad step token '" + std::string(token) + "'");
  }
  auto rest = token.substr(1);
  if (rest.empty() || rest == "+" || rest == "⁺") {
    s.direction = Direction::Plus;
  } else if (rest == "-" || rest == "⁻") {
    s.direction = Direction::Minus;
  } else {
    throw ParseError("bad step token '" + std::string(token) + "'");
  }
  return s;
}

std::vector<Step> parse_steps(std::string_view text) {
  std::vector<Step> out;
  std::size_t pos = 0;
  auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ','; };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    if (end > pos) out.push_back(parse_step(text.substr(pos, end - pos)));
    pos = end;
  }
  return out;
}

std::string to_string(IntegerPair p) {
  return "[" + std::to_string(p.i) + "," + std::to_string(p.j) + "]";
}

IntegerPair moved(IntegerPair p, Step s) {
  const std::int64_t delta = static_cast<std::int64_t>(s.direction);
  if (s.axis == Axis::I) {
    p.i = checked::add(p.i, delta);
  } else {
    p.j = checked::add(p.j, delta);
  }
  return p;
}

void IntegerFunction::append(Step s) {
  elements_.push_back(moved(elements_.back(), s));
  steps_.push_back(s);
}

bool IntegerFunction::is_monotone(Axis axis) const {
  for (const auto& s : steps_) {
    if (s.axis == axis && s.direction == Direction::Minus) return false;
  }
  return true;
}

IntegerFunction IntegerFunction::transposed() const {
  IntegerFunction out(IntegerPair{start().j, start().i});
  for (const auto& s : steps_) out.append(Step{other(s.axis), s.direction});
  return out;
}

IntegerFunction from_step_sequence(IntegerPair start, std::span<const Step> steps) {
  IntegerFunction f(start);
  for (const auto& s : steps) f.append(s);
  return f;
}

bool satisfies_neighbor_property(std::span<const IntegerPair> elements) {
  for (std::size_t k = 1; k < elements.size(); ++k) {
    const auto& a = elements[k - 1];
    const auto& b = elements[k];
    const bool i_step = a.j == b.j && (b.i - a.i == 1 || a.i - b.i == 1);
    const bool j_step = a.i == b.i && (b.j - a.j == 1 || a.j - b.j == 1);
    if (!i_step && !j_step) return false;
  }
  return true;
}

}  // namespace intfn
